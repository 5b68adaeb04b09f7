//! Tanh-sinh (double-exponential) quadrature on a finite interval.
//!
//! The variable change `x = mid + s*tanh((pi/2)*sinh t)` pushes endpoint
//! algebraic singularities into a double-exponentially decaying tail, so
//! the trapezoid rule in `t` converges geometrically. Integrands receive
//! their distance to each endpoint alongside `x`; those distances are
//! computed in transformed space and stay fully accurate where `x` itself
//! would round to the endpoint.

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::Real;

/// Beyond this |t| the node weight underflows to zero in f64.
const T_MAX: f64 = 6.5;

struct Node<T> {
    x: T,
    dist_lo: T,
    dist_hi: T,
    /// Weight before scaling by the interval half-width.
    weight: T,
}

/// Node position and weight at transform parameter `t`, for an interval of
/// half-width `s`. Returns `None` once the tail underflows.
fn node<T: Real>(t: T, lo: T, hi: T, s: T) -> Option<Node<T>> {
    let half_pi = T::FRAC_PI_2();
    let u = half_pi * t.sinh();
    let e2 = (-(u.abs() + u.abs())).exp();
    if e2 == T::zero() {
        return None; // node indistinguishable from the endpoint
    }
    let one = T::one();
    let two = T::of(2.0);
    let denom = one + e2;
    let near = s * two * e2 / denom; // distance to the closer endpoint
    let far = s * two / denom; //       distance to the farther endpoint
    let weight = half_pi * t.cosh() * T::of(4.0) * e2 / (denom * denom);
    if !weight.is_finite() {
        return None;
    }
    let (x, dist_lo, dist_hi) = if t >= T::zero() {
        (hi - near, far, near)
    } else {
        (lo + near, near, far)
    };
    let x = x.max(lo).min(hi);
    Some(Node { x, dist_lo, dist_hi, weight })
}

/// Integrates `f` over `[lo, hi]`, refining the node spacing until two
/// successive levels agree within `cfg.quad_tol` (relative, with an
/// absolute floor of 1).
///
/// `f` is called as `f(x, x - lo, hi - x)`; integrable endpoint
/// singularities are fine, and isolated non-finite evaluations in the
/// underflowing tail are skipped.
pub fn tanh_sinh<T, F>(f: F, lo: T, hi: T, cfg: &NumericConfig) -> Result<T>
where
    T: Real,
    F: Fn(T, T, T) -> T,
{
    if !(lo < hi) {
        if lo == hi {
            return Ok(T::zero());
        }
        return Err(Error::Domain(format!("integration bounds out of order: [{lo}, {hi}]")));
    }
    let s = (hi - lo) / T::of(2.0);
    let tol = T::of(cfg.quad_tol);

    let term = |t: T| -> T {
        match node(t, lo, hi, s) {
            Some(n) => {
                let v = f(n.x, n.dist_lo, n.dist_hi);
                if v.is_finite() {
                    n.weight * v
                } else {
                    T::zero()
                }
            }
            None => T::zero(),
        }
    };

    // Level 0: unit spacing.
    let mut sum = term(T::zero());
    let mut k = 1usize;
    while (k as f64) <= T_MAX {
        sum = sum + term(T::of(k as f64)) + term(-T::of(k as f64));
        k += 1;
    }
    let mut estimate = s * sum;

    let mut h = 1.0f64;
    for level in 1..=cfg.quad_levels {
        h /= 2.0;
        // New nodes sit at odd multiples of the refined spacing.
        let mut new_sum = T::zero();
        let mut k = 1usize;
        while (k as f64) * h <= T_MAX {
            let t = T::of((k as f64) * h);
            new_sum = new_sum + term(t) + term(-t);
            k += 2;
        }
        let refined = estimate / T::of(2.0) + s * T::of(h) * new_sum;
        let diff = (refined - estimate).abs();
        estimate = refined;
        if level >= 2 && diff <= tol * estimate.abs().max(T::one()) {
            return Ok(estimate);
        }
    }
    Err(Error::NonConvergent { context: "tanh-sinh quadrature", budget: cfg.quad_levels })
}
