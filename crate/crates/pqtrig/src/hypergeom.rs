//! Shifted factorial and the Gauss hypergeometric series.

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::Real;

/// Arguments of the Gauss series `F(a, b; c; z)`.
///
/// Validity: `c` must not be zero or a negative integer and `|z| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomArgs<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub z: T,
}

impl<T: Real> HypergeomArgs<T> {
    /// Validates the parameter constraints, returning the args on success.
    pub fn new(a: T, b: T, c: T, z: T) -> Result<Self> {
        if is_nonpositive_integer(c) {
            return Err(Error::InvalidC(c.to_f64().unwrap_or(f64::NAN)));
        }
        if !(z.abs() < T::one()) {
            return Err(Error::Domain(format!("series argument |z| < 1 required, got z = {z}")));
        }
        Ok(Self { a, b, c, z })
    }
}

fn is_nonpositive_integer<T: Real>(c: T) -> bool {
    c <= T::zero() && c.fract() == T::zero()
}

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    /// The partial sum.
    pub value: T,
    /// Number of terms added into the sum.
    pub terms_used: usize,
    /// Geometric estimate of the truncation error (absolute).
    pub tail_bound: T,
}

/// Rising product a(a+1)...(a+n-1), with the empty product equal to 1.
pub fn pochhammer<T: Real>(a: T, n: usize) -> T {
    let mut acc = T::one();
    let mut f = a;
    for _ in 0..n {
        acc = acc * f;
        f = f + T::one();
    }
    acc
}

/// Sums `F(a, b; c; z)` by the term recurrence
/// `t_{n+1} = t_n (a+n)(b+n) z / ((c+n)(n+1))`.
///
/// Stops once the upcoming term is relatively below `cfg.series_tol` *and*
/// the term ratio magnitude has dropped below 1 (early terms can grow when
/// the numerator parameters are large, so the size test alone would stop
/// prematurely).
pub fn gauss_2f1<T: Real>(args: HypergeomArgs<T>, cfg: &NumericConfig) -> Result<SeriesResult<T>> {
    let HypergeomArgs { a, b, c, z } = args;
    if is_nonpositive_integer(c) {
        return Err(Error::InvalidC(c.to_f64().unwrap_or(f64::NAN)));
    }
    if !(z.abs() < T::one()) {
        return Err(Error::Domain(format!("series argument |z| < 1 required, got z = {z}")));
    }

    let tol = T::of(cfg.series_tol);
    let one = T::one();
    if z == T::zero() {
        return Ok(SeriesResult { value: one, terms_used: 1, tail_bound: T::zero() });
    }

    let mut sum = one;
    let mut term = one;
    for n in 0..cfg.series_max_terms {
        let nf = T::from_usize(n).expect("term index fits scalar");
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + one));
        let next = term * ratio * z;
        let step = (ratio * z).abs();
        if next.abs() <= tol * sum.abs() && step < one {
            // Remaining terms are dominated by a geometric series with a
            // ratio no larger than max(current step, |z|).
            let r = step.max(z.abs());
            let tail = next.abs() / (one - r);
            return Ok(SeriesResult { value: sum, terms_used: n + 1, tail_bound: tail });
        }
        term = next;
        sum = sum + term;
        if !sum.is_finite() {
            return Err(Error::Overflow("hypergeometric partial sum"));
        }
    }
    Err(Error::NonConvergent { context: "hypergeometric series", budget: cfg.series_max_terms })
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn symmetric_in_a_and_b(a in 0.05f64..3.0, b in 0.05f64..3.0, c in 0.1f64..4.0, z in -0.9f64..0.9) {
            let cfg = NumericConfig::default();
            let r1 = gauss_2f1(HypergeomArgs { a, b, c, z }, &cfg).unwrap();
            let r2 = gauss_2f1(HypergeomArgs { a: b, b: a, c, z }, &cfg).unwrap();
            let scale = r1.value.abs().max(1.0);
            prop_assert!((r1.value - r2.value).abs() <= 1e-12 * scale);
        }

        #[test]
        fn positive_params_give_value_at_least_one(a in 0.05f64..2.0, b in 0.05f64..2.0, c in 0.1f64..3.0, z in 0.0f64..0.9) {
            let r = gauss_2f1(HypergeomArgs { a, b, c, z }, &NumericConfig::default()).unwrap();
            prop_assert!(r.value >= 1.0 - 1e-14);
        }

        #[test]
        fn tail_bound_nonnegative_and_small(a in 0.05f64..2.0, b in 0.05f64..2.0, c in 0.1f64..3.0, z in -0.8f64..0.8) {
            let r = gauss_2f1(HypergeomArgs { a, b, c, z }, &NumericConfig::default()).unwrap();
            prop_assert!(r.tail_bound >= 0.0);
            prop_assert!(r.tail_bound <= 1e-10 * r.value.abs().max(1.0));
        }
    }
}
