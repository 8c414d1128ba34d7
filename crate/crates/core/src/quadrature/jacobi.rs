use crate::error::{domain, Error, Result};
use crate::gamma::gamma;
use crate::xprec::Dd;
use crate::RealScalar;

pub const MAX_ORDER: usize = 512;
const NEWTON_STEPS: usize = 100;
const NEWTON_TOL: f64 = 1e-13;

/// Gauss–Jacobi nodes and weights for ∫_{-1}^{1} f(x) (1-x)^α (1+x)^β dx.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiRule {
    /// Exponent at x = +1.
    pub alpha: RealScalar,
    /// Exponent at x = -1.
    pub beta: RealScalar,
    pub order: usize,
    /// Strictly increasing, inside (-1, 1).
    pub nodes: Vec<RealScalar>,
    pub weights: Vec<RealScalar>,
}

impl JacobiRule {
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            // Kahan–Babuška accumulation
            let t = w * f(x);
            let s = sum + t;
            comp += if sum.abs() >= t.abs() {
                (sum - s) + t
            } else {
                (t - s) + sum
            };
            sum = s;
        }
        sum + comp
    }

    pub fn weight_sum(&self) -> f64 {
        self.integrate(|_| 1.0)
    }
}

/// P_n^{(α,β)} and P_{n-1}^{(α,β)} at x = 1 - u, by the three-term
/// recurrence in double-double.
fn jacobi_pair(n: usize, alpha: f64, beta: f64, u: f64) -> (Dd, Dd) {
    let (a, b) = (Dd::new(alpha), Dd::new(beta));
    let ab = Dd::sum(alpha, beta);
    let u = Dd::new(u);
    let mut prev = Dd::new(1.0);
    let mut cur = a.add_f64(1.0) - (ab.add_f64(2.0) * u).mul_f64(0.5);
    if n == 0 {
        return (prev, Dd::new(0.0));
    }
    let a2_base = (a - b) * (a + b);
    for k in 2..=n {
        let kf = k as f64;
        let c = ab.add_f64(2.0 * kf);
        let a1 = (ab.add_f64(kf) * c.add_f64(-2.0)).mul_f64(2.0 * kf);
        let a2 = c.add_f64(-1.0) * a2_base;
        let a3 = c.add_f64(-2.0) * c.add_f64(-1.0) * c;
        let a4 = (a.add_f64(kf - 1.0) * b.add_f64(kf - 1.0) * c).mul_f64(2.0);
        let next = (((a2 + a3) - a3 * u) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// (P_n, P_n') at x = 1 - u, with the derivative from
/// (2n+α+β)(1-x²) P_n' = n[(α-β) - (2n+α+β)x] P_n + 2(n+α)(n+β) P_{n-1}.
fn jacobi_with_derivative(n: usize, alpha: f64, beta: f64, u: f64) -> (f64, f64) {
    let (p, pm1) = jacobi_pair(n, alpha, beta, u);
    if n == 1 {
        return (p.to_f64(), 0.5 * (alpha + beta + 2.0));
    }
    let nf = n as f64;
    let (a, b) = (Dd::new(alpha), Dd::new(beta));
    let c = Dd::sum(alpha, beta).add_f64(2.0 * nf);
    let ud = Dd::new(u);
    let one_minus_x2 = ud * ud.mul_f64(-1.0).add_f64(2.0);
    let lead = (((a - b) - c) + c * ud).mul_f64(nf) * p;
    let tail = (a.add_f64(nf) * b.add_f64(nf)).mul_f64(2.0) * pm1;
    (p.to_f64(), ((lead + tail) / (c * one_minus_x2)).to_f64())
}

/// Γ(n+α+1)Γ(n+β+1) / (Γ(n+α+β+1) n!), built up from n = 1.
fn weight_constant(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    let mut k_n = gamma(alpha + 2.0)? * gamma(beta + 2.0)? / gamma(alpha + beta + 2.0)?;
    for m in 2..=n {
        let m = m as f64;
        k_n *= (m + alpha) * (m + beta) / ((m + alpha + beta) * m);
    }
    Ok(k_n)
}

/// Newton iteration for the root of P_n^{(α,β)} at distance u from x = 1.
/// Returns the converged u, with the last correction kept in its low word,
/// and the weight factor (1-x²) P_n'(x)².
fn newton_from_right(n: usize, alpha: f64, beta: f64, mut u: f64) -> Option<(Dd, f64)> {
    for _ in 0..NEWTON_STEPS {
        let (p, dp) = jacobi_with_derivative(n, alpha, beta, u);
        let du = p / dp;
        let next = u + du;
        if !next.is_finite() {
            return None;
        }
        // Overshooting an endpoint: halve the distance to it instead.
        u = if next <= 0.0 {
            0.5 * u
        } else if next >= 2.0 {
            0.5 * (u + 2.0)
        } else {
            next
        };
        if du.abs() <= NEWTON_TOL * u {
            let (p, dp) = jacobi_with_derivative(n, alpha, beta, u);
            let polished = Dd::new(u).add_f64(p / dp);
            let hi = polished.to_f64();
            if !(hi > 0.0 && hi < 2.0) {
                return None;
            }
            let (_, dp) = jacobi_with_derivative(n, alpha, beta, hi);
            return Some((polished, hi * (2.0 - hi) * dp * dp));
        }
    }
    None
}

/// Eigenvalues of the symmetric tridiagonal Jacobi matrix (implicit QL),
/// in ascending order. These are the Gauss nodes to about machine epsilon
/// in absolute terms.
fn jacobi_matrix_eigenvalues(n: usize, alpha: f64, beta: f64) -> Option<Vec<f64>> {
    let ab = alpha + beta;
    let mut d: Vec<f64> = (0..n)
        .map(|k| {
            if k == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                let c = 2.0 * k as f64 + ab;
                (beta - alpha) * (beta + alpha) / (c * (c + 2.0))
            }
        })
        .collect();
    let mut e: Vec<f64> = (1..n)
        .map(|k| {
            let kf = k as f64;
            let c = 2.0 * kf + ab;
            let sq = if k == 1 {
                4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
            } else {
                4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (c * c * (c + 1.0) * (c - 1.0))
            };
            sq.sqrt()
        })
        .collect();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return None;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Some(d)
}

/// Build the `order`-point Gauss–Jacobi rule. Eigenvalues of the Jacobi
/// matrix seed a Newton iteration on the three-term recurrence.
///
/// Nodes with x > 0 are refined in u = 1 - x; the others as right-half
/// nodes of the rule with α and β swapped, using
/// P_n^{(α,β)}(-x) = (-1)^n P_n^{(β,α)}(x).
pub fn gauss_jacobi_rule(alpha: RealScalar, beta: RealScalar, order: usize) -> Result<JacobiRule> {
    if !(alpha.is_finite() && beta.is_finite() && alpha > -1.0 && beta > -1.0) {
        return Err(domain(
            "gauss_jacobi_rule",
            format!("exponents must exceed -1, got alpha = {alpha}, beta = {beta}"),
        ));
    }
    if order == 0 || order > MAX_ORDER {
        return Err(domain(
            "gauss_jacobi_rule",
            format!("order must lie in 1..={MAX_ORDER}, got {order}"),
        ));
    }
    let n = order;
    let scale = 2f64.powf(alpha + beta + 1.0) * weight_constant(n, alpha, beta)?;
    let no_convergence = |index| Error::NoConvergence {
        op: "gauss_jacobi_rule",
        index,
        iterations: NEWTON_STEPS,
    };
    let guesses = jacobi_matrix_eigenvalues(n, alpha, beta).ok_or_else(|| no_convergence(0))?;

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (i, &x0) in guesses.iter().enumerate() {
        let x0 = x0.clamp(-1.0 + f64::EPSILON, 1.0 - f64::EPSILON);
        let (x, factor) = if x0 > 0.0 {
            let (u, f) = newton_from_right(n, alpha, beta, 1.0 - x0).ok_or_else(|| no_convergence(i))?;
            ((Dd::new(1.0) - u).to_f64(), f)
        } else {
            let (v, f) = newton_from_right(n, beta, alpha, 1.0 + x0).ok_or_else(|| no_convergence(i))?;
            (v.add_f64(-1.0).to_f64(), f)
        };
        nodes.push(x);
        weights.push(scale / factor);
    }
    if let Some(i) = nodes.windows(2).position(|w| w[0] >= w[1]) {
        // Two starting points fell into the same root.
        return Err(no_convergence(i));
    }
    Ok(JacobiRule {
        alpha,
        beta,
        order,
        nodes,
        weights,
    })
}
