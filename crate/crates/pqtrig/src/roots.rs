//! Safeguarded Newton iteration inside a maintained bracket.

use crate::error::{Error, Result};
use crate::Real;

/// A located root with diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct Root<T> {
    pub value: T,
    /// Residual `f(value) - target` at acceptance.
    pub residual: T,
    pub iterations: usize,
}

/// Solves `f(y) = target` for increasing `f` on the open bracket
/// `(lo, hi)`, starting from `x0`.
///
/// Newton steps that leave the current bracket (or meet a useless
/// derivative) fall back to bisection. Acceptance is residual-based
/// (`|f(y) - target| <= tol`), with one escape hatch: when the bracket has
/// collapsed to a few ulps the best representable argument is returned
/// even if the residual target is unreachable — near a steep end the
/// residual jump between adjacent floats (`f' * ulp`) can exceed any
/// fixed tolerance, so insisting on the residual alone would loop forever.
///
/// `f` is never evaluated at `lo` or `hi` themselves, so the bracket ends
/// may sit on singular points.
pub fn newton_bisect<T, F, D>(
    f: F,
    df: D,
    target: T,
    lo: T,
    hi: T,
    x0: T,
    tol: T,
    max_iter: usize,
) -> Result<Root<T>>
where
    T: Real,
    F: Fn(T) -> Result<T>,
    D: Fn(T) -> Result<T>,
{
    if !(lo < hi) {
        return Err(Error::Domain(format!("bracket out of order: [{lo}, {hi}]")));
    }
    let mut lo = lo;
    let mut hi = hi;
    let mut y = if x0 > lo && x0 < hi { x0 } else { lo + (hi - lo) / T::of(2.0) };
    let width_floor = T::of(4.0) * T::epsilon();

    for it in 1..=max_iter {
        let r = f(y)? - target;
        if r.abs() <= tol {
            return Ok(Root { value: y, residual: r, iterations: it });
        }
        if r < T::zero() {
            lo = y;
        } else {
            hi = y;
        }
        if hi - lo <= width_floor * y.abs().max(T::one()) {
            return Ok(Root { value: y, residual: r, iterations: it });
        }
        let d = df(y)?;
        let step = y - r / d;
        y = if d > T::zero() && step.is_finite() && step > lo && step < hi {
            step
        } else {
            lo + (hi - lo) / T::of(2.0)
        };
    }
    Err(Error::NonConvergent { context: "safeguarded Newton", budget: max_iter })
}
