//! Deterministic skill populations.
//!
//! Manager skills are evenly spaced on a closed interval; worker skills are
//! midpoint quantiles of a Beta distribution, so the populations are fixed
//! by the parameters alone, with no sampling and no seed. The quantile
//! machinery (regularized incomplete beta and its inverse) lives here too.

use crate::error::{ensure_finite, Error, Result};

/// Quantile residual tolerance: the inverse CDF is solved until
/// `|I_x(a,b) - p|` falls below this, so downstream inequality statistics
/// are allocation-limited rather than numerics-limited.
const QUANTILE_TOL: f64 = 1e-12;
const QUANTILE_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkillKind {
    Manager,
    Worker,
}

/// An ascending vector of skills in (0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct SkillVector {
    values: Vec<f64>,
    kind: SkillKind,
}

impl SkillVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> SkillKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            return 0.0;
        }
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

/// Regularized incomplete beta function `I_x(a, b)`, the Beta(a,b) CDF at
/// `x`. Continued-fraction evaluation (modified Lentz), with the symmetry
/// split `I_x(a,b) = 1 - I_{1-x}(b,a)` applied where the fraction converges
/// faster.
pub fn regularized_incomplete_beta(x: f64, a: f64, b: f64) -> Result<f64> {
    const OP: &str = "regularized_incomplete_beta";
    ensure_finite(OP, "x", x)?;
    ensure_finite(OP, "a", a)?;
    ensure_finite(OP, "b", b)?;
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::domain(
            OP,
            format!("shape must be positive, got ({a}, {b})"),
        ));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(OP, format!("x must be in [0,1], got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    if x < (a + 1.0) / (a + b + 2.0) {
        Ok(beta_cf(x, a, b))
    } else {
        Ok(1.0 - beta_cf(1.0 - x, b, a))
    }
}

/// Inverse Beta(a,b) CDF: the `x` with `|I_x(a,b) - p| <= 1e-12`, found by
/// bracketed Newton iteration with bisection fallback.
///
/// Convergence also requires the bracket to close below 1e-10 in x, because
/// in flat-density tails a tiny CDF residual still leaves the abscissa
/// several digits short of round-trip accuracy. Bisection is forced on
/// alternating iterations so the bracket provably contracts.
pub fn beta_quantile(p: f64, a: f64, b: f64) -> Result<f64> {
    const OP: &str = "beta_quantile";
    const WIDTH_TOL: f64 = 1e-10;
    ensure_finite(OP, "p", p)?;
    ensure_finite(OP, "a", a)?;
    ensure_finite(OP, "b", b)?;
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::domain(
            OP,
            format!("shape must be positive, got ({a}, {b})"),
        ));
    }
    if p <= 0.0 || p >= 1.0 {
        return Err(Error::domain(OP, format!("p must be in (0,1), got {p}")));
    }

    let ln_beta = ln_beta(a, b);
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    // Start at the distribution mean; Newton contracts from there.
    let mut x = a / (a + b);
    let mut residual = f64::INFINITY;

    for iteration in 0..QUANTILE_MAX_ITER {
        let f = regularized_incomplete_beta(x, a, b)? - p;
        residual = f.abs();
        if f == 0.0 || (residual <= QUANTILE_TOL && hi - lo <= WIDTH_TOL) {
            return Ok(x);
        }
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let newton = if iteration % 2 == 0 {
            // Newton step on the CDF; the density is the derivative.
            let ln_pdf = (a - 1.0) * x.ln() + (b - 1.0) * (1.0 - x).ln() - ln_beta;
            x - f / ln_pdf.exp()
        } else {
            f64::NAN // forced bisection keeps the bracket shrinking
        };
        x = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }

    Err(Error::QuantileConvergence {
        p,
        a,
        b,
        residual,
        iterations: QUANTILE_MAX_ITER,
    })
}

/// Evenly spaced manager skills from `s_min` up to `s_max` inclusive.
pub fn make_managers(n: usize, s_min: f64, s_max: f64) -> Result<SkillVector> {
    const OP: &str = "make_managers";
    ensure_finite(OP, "s_min", s_min)?;
    ensure_finite(OP, "s_max", s_max)?;
    if n < 2 {
        return Err(Error::domain(
            OP,
            format!("need at least 2 managers, got {n}"),
        ));
    }
    if !(s_min > 0.0 && s_min < s_max && s_max <= 1.0) {
        return Err(Error::domain(
            OP,
            format!("skill range must satisfy 0 < min < max <= 1, got [{s_min}, {s_max}]"),
        ));
    }
    let step = (s_max - s_min) / (n - 1) as f64;
    let mut values: Vec<f64> = (0..n).map(|i| s_min + i as f64 * step).collect();
    // Pin the endpoints so the vector spans the range exactly.
    values[0] = s_min;
    values[n - 1] = s_max;
    Ok(SkillVector {
        values,
        kind: SkillKind::Manager,
    })
}

/// Worker skills as midpoint Beta quantiles: `q_j = Q((j - 0.5) / n)` for
/// `j = 1..n`. The midpoint rule keeps both tails interior, so every skill
/// lands strictly inside (0, 1).
pub fn make_workers(n: usize, a: f64, b: f64) -> Result<SkillVector> {
    const OP: &str = "make_workers";
    if n < 1 {
        return Err(Error::domain(OP, "need at least 1 worker"));
    }
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let p = (j as f64 - 0.5) / n as f64;
        values.push(beta_quantile(p, a, b)?);
    }
    Ok(SkillVector {
        values,
        kind: SkillKind::Worker,
    })
}

/// Continued fraction for `I_x(a, b)`, valid for `x < (a+1)/(a+b+2)`.
/// Modified Lentz with the usual tiny-denominator floor.
fn beta_cf(x: f64, a: f64, b: f64) -> f64 {
    const MAX_ITER: usize = 300;
    const TINY: f64 = 1e-30;
    const EPS: f64 = 1e-16;

    let prefix = ((a * x.ln()) + (b * (1.0 - x).ln()) - ln_beta(a, b)).exp() / a;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;

    for m in 1..=MAX_ITER {
        let m_f = m as f64;
        let m2 = 2.0 * m_f;

        let even = m_f * (b - m_f) * x / ((qam + m2) * (a + m2));
        d = 1.0 + even * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + even / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let odd = -(a + m_f) * (qab + m_f) * x / ((a + m2) * (qap + m2));
        d = 1.0 + odd * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + odd / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;

        if (delta - 1.0).abs() < EPS {
            break;
        }
    }

    prefix * h
}

/// Natural log of the gamma function, Lanczos approximation (g = 7, 9
/// coefficients). Accurate to ~1e-13 relative over the positive axis.
fn ln_gamma(x: f64) -> f64 {
    // Canonical table digits; f64 rounds them itself.
    #[allow(clippy::excessive_precision)]
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // Reflection for the left half.
        let pi = std::f64::consts::PI;
        return pi.ln() - (pi * x).sin().ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    #[allow(clippy::excessive_precision)]
    let mut acc = 0.99999999999980993;
    for (i, &coeff) in COEFFS.iter().enumerate() {
        acc += coeff / (x + (i + 1) as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hand-integrated Beta(2,5) CDF: the density 30*x*(1-x)^4 integrates to
    /// 30 * [(1-(1-x)^5)/5 - (1-(1-x)^6)/6].
    fn beta25_cdf_oracle(x: f64) -> f64 {
        let u = 1.0 - x;
        30.0 * ((1.0 - u.powi(5)) / 5.0 - (1.0 - u.powi(6)) / 6.0)
    }

    #[test]
    fn incomplete_beta_endpoints() {
        assert_eq!(regularized_incomplete_beta(0.0, 2.0, 5.0).unwrap(), 0.0);
        assert_eq!(regularized_incomplete_beta(1.0, 2.0, 5.0).unwrap(), 1.0);
    }

    #[test]
    fn incomplete_beta_matches_closed_form_beta25() {
        assert!((regularized_incomplete_beta(0.5, 2.0, 5.0).unwrap() - 0.890625).abs() <= 1e-12);
        for i in 1..=19 {
            let x = i as f64 * 0.05;
            let got = regularized_incomplete_beta(x, 2.0, 5.0).unwrap();
            let want = beta25_cdf_oracle(x);
            assert!(
                (got - want).abs() <= 1e-12,
                "CDF mismatch at x={x}: got {got}, oracle {want}"
            );
        }
    }

    #[test]
    fn incomplete_beta_uniform_is_identity() {
        for i in 1..=9 {
            let x = i as f64 * 0.1;
            let got = regularized_incomplete_beta(x, 1.0, 1.0).unwrap();
            assert!((got - x).abs() <= 1e-13);
        }
    }

    #[test]
    fn incomplete_beta_rejects_out_of_domain() {
        assert!(regularized_incomplete_beta(-0.1, 2.0, 5.0).is_err());
        assert!(regularized_incomplete_beta(1.1, 2.0, 5.0).is_err());
        assert!(regularized_incomplete_beta(0.5, 0.0, 5.0).is_err());
        assert!(regularized_incomplete_beta(f64::NAN, 2.0, 5.0).is_err());
    }

    #[test]
    fn quantile_inverts_closed_form() {
        let x = beta_quantile(0.890625, 2.0, 5.0).unwrap();
        assert!((x - 0.5).abs() <= 1e-9, "got {x}");
        assert!((beta_quantile(0.5, 1.0, 1.0).unwrap() - 0.5).abs() <= 1e-9);
        // Left tail stays strictly inside the unit interval.
        let tail = beta_quantile(1e-9, 2.0, 5.0).unwrap();
        assert!(tail > 0.0 && tail < 1e-3);
    }

    #[test]
    fn quantile_round_trip() {
        let mut probes = vec![0.01, 0.99];
        probes.extend((1..=9).map(|i| i as f64 * 0.1));
        for &(a, b) in &[(2.0, 5.0), (1.0, 1.0), (5.0, 2.0)] {
            for &x in &probes {
                let p = regularized_incomplete_beta(x, a, b).unwrap();
                let back = beta_quantile(p, a, b).unwrap();
                assert!(
                    (back - x).abs() <= 1e-9,
                    "round trip failed for x={x}, (a,b)=({a},{b}): got {back}"
                );
            }
        }
    }

    #[test]
    fn quantile_rejects_boundary_probabilities() {
        assert!(beta_quantile(0.0, 2.0, 5.0).is_err());
        assert!(beta_quantile(1.0, 2.0, 5.0).is_err());
        assert!(beta_quantile(-0.5, 2.0, 5.0).is_err());
    }

    #[test]
    fn managers_evenly_spaced() {
        let v = make_managers(20, 0.05, 1.0).unwrap();
        assert_eq!(v.len(), 20);
        assert_eq!(v.kind(), SkillKind::Manager);
        for (i, &s) in v.values().iter().enumerate() {
            let want = 0.05 + i as f64 * 0.05;
            assert!((s - want).abs() <= 1e-12, "slot {i}: got {s}, want {want}");
        }
        assert_eq!(v.values()[0], 0.05);
        assert_eq!(v.values()[19], 1.0);

        let two = make_managers(2, 0.05, 1.0).unwrap();
        assert_eq!(two.values(), &[0.05, 1.0]);

        let three = make_managers(3, 0.2, 0.8).unwrap();
        assert!((three.values()[1] - 0.5).abs() <= 1e-12);

        assert!(make_managers(1, 0.05, 1.0).is_err());
        assert!(make_managers(3, 0.0, 1.0).is_err());
        assert!(make_managers(3, 0.5, 0.2).is_err());
        assert!(make_managers(3, 0.5, 1.2).is_err());
    }

    #[test]
    fn workers_uniform_midpoints() {
        let one = make_workers(1, 1.0, 1.0).unwrap();
        assert!((one.values()[0] - 0.5).abs() <= 1e-9);

        let three = make_workers(3, 1.0, 1.0).unwrap();
        let want = [1.0 / 6.0, 0.5, 5.0 / 6.0];
        for (got, want) in three.values().iter().zip(want) {
            assert!((got - want).abs() <= 1e-9);
        }
    }

    #[test]
    fn worker_pool_mean_matches_distribution() {
        let v = make_workers(400, 2.0, 5.0).unwrap();
        assert_eq!(v.len(), 400);
        assert_eq!(v.kind(), SkillKind::Worker);
        let mean = v.mean();
        assert!(
            (mean - 2.0 / 7.0).abs() <= 0.005,
            "pool mean {mean} too far from 2/7"
        );
        // Strictly increasing, strictly interior.
        for pair in v.values().windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert!(v.values()[0] > 0.0);
        assert!(v.values()[399] < 1.0);
    }

    #[test]
    fn worker_pool_is_bitwise_deterministic() {
        let a = make_workers(400, 2.0, 5.0).unwrap();
        let b = make_workers(400, 2.0, 5.0).unwrap();
        assert_eq!(a, b);
    }
}
