//! Exact rational checks of the terminating identities behind the
//! confluent summation formula:
//!
//! * the Pochhammer identity
//!   (2a)_k/(2b)_k = k!/(b)_k Σ_{n≤⌊k/2⌋} (a)_{k-n}(b)_n(b-a)_n / ((2b)_{2n} n! (k-2n)!) (-1)ⁿ,
//! * Saalschütz's sum
//!   ₃F₂(a, b, -n; c, 1+a+b-c-n; 1) = (c-a)_n(c-b)_n / ((c)_n(c-a-b)_n),
//! * the order-by-order z-coefficients of M(2a; 2b; z) against the
//!   summation formula.
//!
//! All arithmetic is on [`BigRational`]; equality is exact.

use crate::error::{domain, Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

/// Parse `[-]digits/digits` (no whitespace, nonzero denominator).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(text.to_string());
    let (neg, body) = match text.strip_prefix('-').or_else(|| text.strip_prefix('\u{2212}')) {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = body.split_once('/').ok_or_else(bad)?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Lowest-terms `n/d` with a positive denominator, e.g. `-3/7`, `5/1`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Nearest-double approximation, used only for reporting.
pub fn to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rising factorial (x)_n.
pub fn poch_exact(x: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += BigInt::one();
    }
    acc
}

/// (x)_0, (x)_1, ..., (x)_len.
fn poch_table(x: &BigRational, len: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(len + 1);
    let mut acc = BigRational::one();
    let mut f = x.clone();
    out.push(acc.clone());
    for _ in 0..len {
        acc *= &f;
        f += BigInt::one();
        out.push(acc.clone());
    }
    out
}

fn factorial_table(len: usize) -> Vec<BigRational> {
    poch_table(&BigRational::one(), len)
}

/// Both sides of an exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub equal: bool,
}

impl ExactCheck {
    fn new(lhs: BigRational, rhs: BigRational) -> Self {
        let equal = lhs == rhs;
        ExactCheck { lhs, rhs, equal }
    }
}

/// True when (x)_n vanishes, i.e. x ∈ {0, -1, ..., -(n-1)}.
pub fn poch_vanishes(x: &BigRational, n: usize) -> bool {
    x.is_integer() && !x.is_positive() && (-x.to_integer()) < BigInt::from(n)
}

struct PochhammerTables {
    a: Vec<BigRational>,
    b: Vec<BigRational>,
    b_minus_a: Vec<BigRational>,
    two_a: Vec<BigRational>,
    two_b: Vec<BigRational>,
    fact: Vec<BigRational>,
}

impl PochhammerTables {
    fn new(a: &BigRational, b: &BigRational, k_max: usize) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        PochhammerTables {
            a: poch_table(a, k_max),
            b: poch_table(b, k_max),
            b_minus_a: poch_table(&(b - a), k_max / 2),
            two_a: poch_table(&(&two * a), k_max),
            two_b: poch_table(&(&two * b), k_max),
            fact: factorial_table(k_max),
        }
    }

    fn check(&self, k: usize) -> Result<ExactCheck> {
        let lhs = checked_div(&self.two_a[k], &self.two_b[k])?;
        let mut sum = BigRational::zero();
        for n in 0..=k / 2 {
            let num = &self.a[k - n] * &self.b[n] * &self.b_minus_a[n];
            let den = &self.two_b[2 * n] * &self.fact[n] * &self.fact[k - 2 * n];
            let term = checked_div(&num, &den)?;
            if n % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let rhs = checked_div(&self.fact[k], &self.b[k])? * sum;
        Ok(ExactCheck::new(lhs, rhs))
    }
}

fn pochhammer_identity_gate(b: &BigRational, k: usize) -> Result<()> {
    let two_b = b * BigRational::from_integer(BigInt::from(2));
    if poch_vanishes(&two_b, k) || poch_vanishes(b, k) {
        return Err(domain(
            "check_pochhammer_identity",
            format!("denominator Pochhammer vanishes for b = {}", format_rational(b)),
        ));
    }
    Ok(())
}

/// Exact check of the Pochhammer identity at one (a, b, k).
pub fn check_pochhammer_identity(a: &BigRational, b: &BigRational, k: usize) -> Result<ExactCheck> {
    pochhammer_identity_gate(b, k)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let lhs = checked_div(&poch_exact(&(&two * a), k), &poch_exact(&(&two * b), k))?;
    let b_minus_a = b - a;
    let mut sum = BigRational::zero();
    let mut n_fact = BigRational::one();
    for n in 0..=k / 2 {
        if n > 0 {
            n_fact *= BigRational::from_integer(BigInt::from(n));
        }
        let num = poch_exact(a, k - n) * poch_exact(b, n) * poch_exact(&b_minus_a, n);
        let den = poch_exact(&(&two * b), 2 * n) * &n_fact * poch_exact(&BigRational::one(), k - 2 * n);
        let term = checked_div(&num, &den)?;
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let rhs = checked_div(&poch_exact(&BigRational::one(), k), &poch_exact(b, k))? * sum;
    Ok(ExactCheck::new(lhs, rhs))
}

/// The Pochhammer identity for every k in 0..=k_max at one (a, b), sharing
/// rising-factorial tables across k.
pub fn check_pochhammer_identity_upto(a: &BigRational, b: &BigRational, k_max: usize) -> Result<Vec<ExactCheck>> {
    pochhammer_identity_gate(b, k_max)?;
    let tables = PochhammerTables::new(a, b, k_max);
    (0..=k_max).map(|k| tables.check(k)).collect()
}

/// Terminating ₃F₂(a, b, -n; c, d; 1) summed exactly.
pub fn hyp3f2_terminating(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    d: &BigRational,
    n: usize,
) -> Result<BigRational> {
    let minus_n = BigRational::from_integer(-BigInt::from(n));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for m in 0..n {
        let mb = BigInt::from(m);
        let den = (c + &mb) * (d + &mb) * BigRational::from_integer(&mb + 1);
        if den.is_zero() {
            return Err(domain(
                "hyp3f2_terminating",
                format!("lower parameter Pochhammer vanishes at m = {}", m + 1),
            ));
        }
        term = term * (a + &mb) * (b + &mb) * (&minus_n + &mb) / den;
        sum += &term;
    }
    Ok(sum)
}

/// True when (c, c-a-b) avoid the excluded integers for every n' ≤ n.
pub fn saalschutz_admissible(a: &BigRational, b: &BigRational, c: &BigRational, n: usize) -> bool {
    !poch_vanishes(c, n) && !poch_vanishes(&(c - a - b), n)
}

/// Saalschütz: ₃F₂(a, b, -n; c, 1+a+b-c-n; 1) against its closed form.
pub fn check_saalschutz(a: &BigRational, b: &BigRational, c: &BigRational, n: usize) -> Result<ExactCheck> {
    if !saalschutz_admissible(a, b, c, n) {
        return Err(domain(
            "check_saalschutz",
            format!(
                "excluded parameters a = {}, b = {}, c = {}, n = {n}",
                format_rational(a),
                format_rational(b),
                format_rational(c)
            ),
        ));
    }
    let d = BigRational::one() + a + b - c - BigRational::from_integer(BigInt::from(n));
    let lhs = hyp3f2_terminating(a, b, c, &d, n)?;
    let num = poch_exact(&(c - a), n) * poch_exact(&(c - b), n);
    let den = poch_exact(c, n) * poch_exact(&(c - a - b), n);
    let rhs = checked_div(&num, &den)?;
    Ok(ExactCheck::new(lhs, rhs))
}

/// z^k coefficients of both sides of
/// M(2a; 2b; z) = Σ_n (a)_n(b)_n(b-a)_n / ((b)_{2n}(2b)_{2n} n!) (-z²)ⁿ M(a+n; b+2n; z)
/// for k = 0..=k_max. The left side is (2a)_k / ((2b)_k k!); the right side
/// collects Σ_{n≤k/2} c_n (-1)ⁿ (a+n)_{k-2n} / ((b+2n)_{k-2n} (k-2n)!).
pub fn check_series_coefficients(a: &BigRational, b: &BigRational, k_max: usize) -> Result<Vec<ExactCheck>> {
    let two = BigRational::from_integer(BigInt::from(2));
    let two_b = &two * b;
    if poch_vanishes(&two_b, k_max) {
        return Err(domain(
            "check_series_coefficients",
            format!("(2b)_k vanishes for b = {}", format_rational(b)),
        ));
    }
    let fact = factorial_table(k_max);
    let two_a_t = poch_table(&(&two * a), k_max);
    let two_b_t = poch_table(&two_b, k_max);
    let a_t = poch_table(a, k_max);
    let b_t = poch_table(b, k_max);
    let bma_t = poch_table(&(b - a), k_max);

    // Outer coefficients c_n (with the (-1)^n folded in).
    let mut outer = Vec::new();
    for n in 0..=k_max / 2 {
        let den = &b_t[2 * n] * &two_b_t[2 * n] * &fact[n];
        let c = checked_div(&(&a_t[n] * &b_t[n] * &bma_t[n]), &den)?;
        outer.push(if n % 2 == 0 { c } else { -c });
    }
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let lhs = checked_div(&two_a_t[k], &(&two_b_t[k] * &fact[k]))?;
        let mut rhs = BigRational::zero();
        for (n, c) in outer.iter().enumerate().take(k / 2 + 1) {
            let m = k - 2 * n;
            let nb = BigInt::from(n);
            let inner_num = poch_exact(&(a + &nb), m);
            let inner_den = poch_exact(&(b + BigInt::from(2 * n)), m) * &fact[m];
            rhs += c * checked_div(&inner_num, &inner_den)?;
        }
        out.push(ExactCheck::new(lhs, rhs));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rational(&q("-3/7")), "-3/7");
        assert_eq!(format_rational(&q("10/2")), "5/1");
        assert_eq!(format_rational(&q("\u{2212}6/4")), "-3/2");
        assert_eq!(format_rational(&q("0/9")), "0/1");
        for bad in ["", "3", "3/", "/4", "- 3/4", "3 /4", "+3/4", "3/-4", "a/b", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&q("1/2"), &q("0/1")), Err(Error::DivisionByZero));
    }

    #[test]
    fn poch_exact_examples() {
        assert_eq!(poch_exact(&q("7/3"), 0), q("1/1"));
        assert_eq!(poch_exact(&q("1/2"), 3), q("15/8"));
        assert_eq!(poch_exact(&q("-2/1"), 4), q("0/1"));
    }

    #[test]
    fn pochhammer_identity_examples() {
        let c = check_pochhammer_identity(&q("1/3"), &q("2/5"), 0).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.equal), (q("1/1"), q("1/1"), true));
        let c = check_pochhammer_identity(&q("1/3"), &q("2/5"), 1).unwrap();
        assert_eq!(c.lhs, q("5/6"));
        assert_eq!(c.rhs, q("5/6"));
        let c = check_pochhammer_identity(&q("1/3"), &q("2/5"), 7).unwrap();
        assert!(c.equal);
        let c = check_pochhammer_identity(&q("0/1"), &q("1/2"), 3).unwrap();
        assert_eq!(c.lhs, q("0/1"));
        assert!(c.equal);
        assert!(check_pochhammer_identity(&q("1/3"), &q("-1/2"), 3).is_err());
    }

    #[test]
    fn table_and_direct_routes_agree() {
        let (a, b) = (q("-7/4"), q("5/3"));
        let batch = check_pochhammer_identity_upto(&a, &b, 12).unwrap();
        for (k, c) in batch.iter().enumerate() {
            assert_eq!(c, &check_pochhammer_identity(&a, &b, k).unwrap());
        }
    }

    #[test]
    fn hyp3f2_examples() {
        let one = q("1/1");
        let two = q("2/1");
        assert_eq!(hyp3f2_terminating(&q("3/7"), &one, &two, &two, 0).unwrap(), one);
        assert_eq!(hyp3f2_terminating(&one, &one, &two, &two, 1).unwrap(), q("3/4"));
        assert!(hyp3f2_terminating(&one, &one, &q("-1/1"), &two, 3).is_err());
    }

    #[test]
    fn saalschutz_examples() {
        let c = check_saalschutz(&q("1/2"), &q("1/3"), &q("5/4"), 0).unwrap();
        assert!(c.equal && c.lhs == q("1/1"));
        let c = check_saalschutz(&q("1/2"), &q("1/3"), &q("5/4"), 1).unwrap();
        assert_eq!(c.lhs, q("33/25"));
        assert_eq!(c.rhs, q("33/25"));
        assert!(check_saalschutz(&q("2/7"), &q("-1/3"), &q("9/5"), 6).unwrap().equal);
        assert!(check_saalschutz(&q("1/2"), &q("1/2"), &q("-2/1"), 5).is_err());
    }

    #[test]
    fn series_coefficients_match() {
        for c in check_series_coefficients(&q("3/4"), &q("-5/3"), 12).unwrap() {
            assert!(c.equal);
        }
        assert!(check_series_coefficients(&q("1/2"), &q("-3/2"), 5).is_err());
    }
}
