//! Reference values computed independently of the library: every series is
//! summed in exact rational arithmetic and rounded to f64 only at the end.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(s: &str) -> BigRational {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    BigRational::new(n.parse().unwrap(), d.parse().unwrap())
}

/// Decimal rational, e.g. "0.35" -> 7/20.
pub fn dec(s: &str) -> BigRational {
    let neg = s.starts_with('-');
    let s = s.trim_start_matches('-');
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let r = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -r
    } else {
        r
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    let scale = BigInt::from(10).pow(40);
    let scaled = r.numer() * &scale / r.denom();
    scaled.to_string().parse::<f64>().unwrap() / 1e40
}

fn small_enough(term: &BigRational, sum: &BigRational) -> bool {
    // |term| < 1e-35 |sum|, or both vanish
    let lhs = term.abs() * BigRational::from_integer(BigInt::from(10).pow(35));
    lhs < sum.abs() || (term.is_zero() && sum.is_zero())
}

/// M(a; b; z) = Σ (a)_n/(b)_n z^n/n!.
pub fn kummer(a: &BigRational, b: &BigRational, z: &BigRational) -> f64 {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut n = 0u32;
    loop {
        let nr = BigRational::from_integer(BigInt::from(n));
        term = term * (a + &nr) / ((b + &nr) * (&nr + BigRational::one())) * z;
        sum += &term;
        n += 1;
        if n > 10 && small_enough(&term, &sum) {
            return to_f64(&sum);
        }
        assert!(n < 2000, "oracle did not converge");
    }
}

/// J_n(z) for integer n ≥ 0.
pub fn bessel_int(n: u32, z: &BigRational) -> f64 {
    let half = z / BigRational::from_integer(BigInt::from(2));
    let mut term = half.pow(n as i32);
    for k in 1..=n {
        term /= BigRational::from_integer(BigInt::from(k));
    }
    let mut sum = term.clone();
    let h2 = &half * &half;
    let mut k = 1u32;
    loop {
        term = -term * &h2 / BigRational::from_integer(BigInt::from(k) * BigInt::from(k + n));
        sum += &term;
        k += 1;
        if k > 5 && small_enough(&term, &sum) {
            return to_f64(&sum);
        }
    }
}

/// Complex rational number as (re, im).
#[derive(Clone, Debug)]
pub struct Cq(pub BigRational, pub BigRational);

impl Cq {
    pub fn new(re: &str, im: &str) -> Self {
        Cq(dec(re), dec(im))
    }
    fn add(&self, o: &Cq) -> Cq {
        Cq(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn mul(&self, o: &Cq) -> Cq {
        Cq(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn div(&self, o: &Cq) -> Cq {
        let d = &o.0 * &o.0 + &o.1 * &o.1;
        Cq(
            (&self.0 * &o.0 + &self.1 * &o.1) / &d,
            (&self.1 * &o.0 - &self.0 * &o.1) / &d,
        )
    }
    fn scale(&self, r: &BigRational) -> Cq {
        Cq(&self.0 * r, &self.1 * r)
    }
    fn norm1(&self) -> BigRational {
        self.0.abs() + self.1.abs()
    }
}

/// M(a; b; z) for complex rational parameters, returned as (re, im).
pub fn kummer_complex(a: &Cq, b: &Cq, z: &Cq) -> (f64, f64) {
    let one = BigRational::one();
    let mut term = Cq(one.clone(), BigRational::zero());
    let mut sum = term.clone();
    let mut n = 0u32;
    loop {
        let nr = Cq(BigRational::from_integer(BigInt::from(n)), BigRational::zero());
        term = term
            .mul(&a.add(&nr))
            .div(&b.add(&nr))
            .mul(z)
            .scale(&(one.clone() / (&nr.0 + &one)));
        sum = sum.add(&term);
        n += 1;
        if n > 10 && small_enough(&term.norm1(), &sum.norm1()) {
            return (to_f64(&sum.0), to_f64(&sum.1));
        }
        assert!(n < 2000, "oracle did not converge");
    }
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}
