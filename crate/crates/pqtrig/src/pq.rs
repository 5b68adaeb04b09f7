//! The (p,q)-trigonometric and hyperbolic functions.
//!
//! Inverse functions come from hypergeometric series (with a complement
//! branch near the singular endpoint), forward functions from safeguarded
//! Newton inversion, and an independent tanh-sinh quadrature path evaluates
//! the defining integrals directly for cross-validation.

use std::sync::OnceLock;

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::hypergeom::{gauss_2f1, HypergeomArgs};
use crate::quad::tanh_sinh;
use crate::roots::newton_bisect;
use crate::Real;

/// Series argument above which `arcsin`-type evaluations switch to the
/// complement branch: the direct series still converges there, but the
/// complement form both converges faster and avoids evaluating `1 - x^q`
/// through a rounded `x`.
const COMPLEMENT_SWITCH: f64 = 0.9;

/// Largest `x^q` handled by the transformed hyperbolic series. Its
/// argument `x^q/(1+x^q)` approaches 1, and the term count grows like
/// `32/(1 - z)`; past this point quadrature is both faster and safe from
/// the series term cap.
const TRANSFORMED_MAX_Z: f64 = 999.0;

/// Upper bound used by integral-path evaluations of the defining kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadKind {
    /// `integral_0^x (1 - t^q)^{-1/p} dt`
    Arcsin,
    /// `integral_0^x (1 + t^q)^{-1/p} dt`
    Arsinh,
    /// `(p/q) * integral_x^1 (1 - u^p)^{1/q - 1} u^{p-2} du`
    ArccosComplement,
}

/// The parameter pair `(p, q)`, both above 1, with a cached half-period.
#[derive(Debug)]
pub struct PqParams<T> {
    p: T,
    q: T,
    half_pi: OnceLock<T>,
}

impl<T: Real> Clone for PqParams<T> {
    fn clone(&self) -> Self {
        Self { p: self.p, q: self.q, half_pi: self.half_pi.clone() }
    }
}

impl<T: Real> PqParams<T> {
    /// Validates `p > 1` and `q > 1`.
    pub fn new(p: T, q: T) -> Result<Self> {
        if !(p > T::one()) || !(q > T::one()) {
            return Err(Error::Domain(format!(
                "parameters must satisfy p > 1 and q > 1, got p = {p}, q = {q}"
            )));
        }
        Ok(Self { p, q, half_pi: OnceLock::new() })
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn q(&self) -> T {
        self.q
    }

    /// `pi_{p,q}/2`: the total integral of `(1 - t^q)^{-1/p}` over (0,1),
    /// computed by singularity-aware quadrature and cached. Concurrent
    /// first calls may each compute the value; they store identical bits.
    pub fn half_pi(&self, cfg: &NumericConfig) -> Result<T> {
        if let Some(&v) = self.half_pi.get() {
            return Ok(v);
        }
        let v = self.quad_oracle(QuadKind::Arcsin, T::one(), cfg)?;
        let _ = self.half_pi.set(v);
        Ok(*self.half_pi.get().expect("just populated"))
    }

    /// Evaluates the defining integral for `kind` at `x` by tanh-sinh
    /// quadrature. Shares no code with the hypergeometric path.
    pub fn quad_oracle(&self, kind: QuadKind, x: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        match kind {
            QuadKind::Arcsin => {
                if !(x >= T::zero() && x <= T::one()) {
                    return Err(Error::Domain(format!("integral path needs 0 <= x <= 1, got {x}")));
                }
                let gap1 = T::one() - x; // distance from the upper limit to 1
                tanh_sinh(
                    move |_t, _dlo, dhi: T| {
                        let dist1 = gap1 + dhi;
                        let one_minus_tq = -(q * (-dist1).ln_1p()).exp_m1();
                        (-one_minus_tq.ln() / p).exp()
                    },
                    T::zero(),
                    x,
                    cfg,
                )
            }
            QuadKind::Arsinh => {
                if !(x >= T::zero()) {
                    return Err(Error::Domain(format!("integral path needs x >= 0, got {x}")));
                }
                tanh_sinh(
                    move |t: T, _dlo, _dhi| (-(t.powf(q)).ln_1p() / p).exp(),
                    T::zero(),
                    x,
                    cfg,
                )
            }
            QuadKind::ArccosComplement => {
                if !(x >= T::zero() && x <= T::one()) {
                    return Err(Error::Domain(format!("integral path needs 0 <= x <= 1, got {x}")));
                }
                let v = tanh_sinh(
                    move |u: T, _dlo, dhi: T| {
                        let one_minus_up = -(p * (-dhi).ln_1p()).exp_m1();
                        ((T::one() / q - T::one()) * one_minus_up.ln() + (p - T::of(2.0)) * u.ln())
                            .exp()
                    },
                    x,
                    T::one(),
                    cfg,
                )?;
                Ok(p / q * v)
            }
        }
    }

    /// Tail of the complement branch: `pi_{p,q}/2 - arcsin_pq(y)` expressed
    /// through `delta = 1 - y^q`, which the caller supplies in whatever
    /// form is exact for it.
    fn complement_tail(&self, delta: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        let one = T::one();
        let a = one - one / p;
        let args = HypergeomArgs { a, b: one - one / q, c: T::of(2.0) - one / p, z: delta };
        let f = gauss_2f1(args, cfg)?.value;
        Ok((a * delta.ln()).exp() / (q * a) * f)
    }

    /// Series evaluation of `arcsin_pq(y)` given `z = y^q` and
    /// `delta = 1 - z` precomputed accurately by the caller.
    fn arcsin_from_parts(&self, y: T, z: T, delta: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        if z < T::of(COMPLEMENT_SWITCH) {
            let one = T::one();
            let args = HypergeomArgs { a: one / p, b: one / q, c: one + one / q, z };
            Ok(y * gauss_2f1(args, cfg)?.value)
        } else {
            let hp = self.half_pi(cfg)?;
            Ok(hp - self.complement_tail(delta, cfg)?)
        }
    }

    /// `arcsin_pq(x)` for `0 <= x < 1`: `x F(1/p, 1/q; 1 + 1/q; x^q)`, with
    /// the complement branch taking over for `x^q >= 0.9`.
    pub fn arcsin_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        if !(x >= T::zero() && x < T::one()) {
            return Err(Error::Domain(format!("arcsin_pq needs 0 <= x < 1, got {x}")));
        }
        if x == T::zero() {
            return Ok(T::zero());
        }
        let qlnx = self.q * x.ln();
        let z = qlnx.exp(); // x^q
        let delta = -qlnx.exp_m1(); // 1 - x^q, exact near x = 1
        self.arcsin_from_parts(x, z, delta, cfg)
    }

    /// `arccos_pq(x) = arcsin_pq((1 - x^p)^{1/q})` for `0 < x <= 1`. The
    /// complement quantity `1 - y^q` equals `x^p` exactly, so small `x`
    /// loses nothing to rounding through `y`.
    pub fn arccos_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        if !(x > T::zero() && x <= T::one()) {
            return Err(Error::Domain(format!("arccos_pq needs 0 < x <= 1, got {x}")));
        }
        if x == T::one() {
            return Ok(T::zero());
        }
        let plnx = self.p * x.ln();
        let delta = plnx.exp(); // x^p = 1 - y^q
        let z = -plnx.exp_m1(); // y^q = 1 - x^p
        let y = (z.ln() / self.q).exp();
        self.arcsin_from_parts(y, z, delta, cfg)
    }

    /// `pi_{p,q}/2 - arccos_pq(x)` on `(0, 1)`, evaluated so that small `x`
    /// goes through the pure series tail and never cancels against the
    /// half-period.
    pub fn lam_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        if !(x > T::zero() && x < T::one()) {
            return Err(Error::Domain(format!(
                "pi_half_minus_arccos_pq needs 0 < x < 1, got {x}"
            )));
        }
        let plnx = self.p * x.ln();
        let delta = plnx.exp(); // x^p
        let z = -plnx.exp_m1(); // 1 - x^p
        if z >= T::of(COMPLEMENT_SWITCH) {
            // arccos would use the complement branch; its tail IS this
            // function.
            self.complement_tail(delta, cfg)
        } else {
            let y = (z.ln() / self.q).exp();
            let hp = self.half_pi(cfg)?;
            Ok(hp - self.arcsin_from_parts(y, z, delta, cfg)?)
        }
    }

    /// Derivative of [`Self::lam_pq`]:
    /// `(p/q) (1 - x^p)^{1/q - 1} x^{p-2}`.
    pub fn d_lam_pq(&self, x: T) -> Result<T> {
        if !(x > T::zero() && x < T::one()) {
            return Err(Error::Domain(format!("derivative needs 0 < x < 1, got {x}")));
        }
        let (p, q) = (self.p, self.q);
        let one = T::one();
        let one_minus_xp = -(p * x.ln()).exp_m1();
        Ok(p / q * ((one / q - one) * one_minus_xp.ln() + (p - T::of(2.0)) * x.ln()).exp())
    }

    /// Derivative of `arcsin_pq`: `(1 - x^q)^{-1/p}`.
    pub fn d_arcsin_pq(&self, x: T) -> Result<T> {
        if !(x >= T::zero() && x < T::one()) {
            return Err(Error::Domain(format!("derivative needs 0 <= x < 1, got {x}")));
        }
        let one_minus_xq = -(self.q * x.ln()).exp_m1();
        Ok((-one_minus_xq.ln() / self.p).exp())
    }

    /// Derivative of `arsinh_pq`: `(1 + x^q)^{-1/p}`.
    pub fn d_arsinh_pq(&self, x: T) -> Result<T> {
        if !(x >= T::zero()) {
            return Err(Error::Domain(format!("derivative needs x >= 0, got {x}")));
        }
        Ok((-(x.powf(self.q)).ln_1p() / self.p).exp())
    }

    /// Direct series for `arsinh_pq`, valid while `x^q < 1`:
    /// `x F(1/p, 1/q; 1 + 1/q; -x^q)`.
    pub fn arsinh_direct_series(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        if !(x >= T::zero()) {
            return Err(Error::Domain(format!("arsinh_pq needs x >= 0, got {x}")));
        }
        if x == T::zero() {
            return Ok(T::zero());
        }
        let z = x.powf(q);
        let one = T::one();
        let args = HypergeomArgs::new(one / p, one / q, one + one / q, -z)?;
        Ok(x * gauss_2f1(args, cfg)?.value)
    }

    /// Transformed series for `arsinh_pq`, usable for any finite `x^q`:
    /// `(x^p/(1+x^q))^{1/p} F(1, 1/p; 1 + 1/q; x^q/(1+x^q))`.
    pub fn arsinh_transformed_series(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        if !(x > T::zero()) {
            return Err(Error::Domain(format!("transformed series needs x > 0, got {x}")));
        }
        let z = x.powf(q);
        if !z.is_finite() {
            return Err(Error::Overflow("x^q in transformed series"));
        }
        let one = T::one();
        let w = z / (one + z);
        let prefactor = x * (-z.ln_1p() / p).exp(); // (x^p/(1+x^q))^{1/p}
        let args = HypergeomArgs { a: one, b: one / p, c: one + one / q, z: w };
        Ok(prefactor * gauss_2f1(args, cfg)?.value)
    }

    /// `arsinh_pq(x)` for `x >= 0`, dispatching between the direct series
    /// (`x^q < 0.9`), the transformed series (`x^q <= 999`), and the
    /// integral path beyond that, where the transformed series would need
    /// more terms than the configured cap.
    pub fn arsinh_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        if !(x >= T::zero()) {
            return Err(Error::Domain(format!("arsinh_pq needs x >= 0, got {x}")));
        }
        if x == T::zero() {
            return Ok(T::zero());
        }
        let z = x.powf(self.q);
        if z < T::of(COMPLEMENT_SWITCH) {
            self.arsinh_direct_series(x, cfg)
        } else if z <= T::of(TRANSFORMED_MAX_Z) {
            self.arsinh_transformed_series(x, cfg)
        } else {
            self.quad_oracle(QuadKind::Arsinh, x, cfg)
        }
    }

    /// `sin_pq(x)` on `(0, pi_{p,q}/2)`: inverts `arcsin_pq` by
    /// safeguarded Newton inside the bracket `(0, 1)`.
    pub fn sin_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let hp = self.half_pi(cfg)?;
        if !(x > T::zero() && x < hp) {
            return Err(Error::Domain(format!(
                "sin_pq needs 0 < x < pi_pq/2 = {hp}, got {x}"
            )));
        }
        let root = newton_bisect(
            |y| self.arcsin_pq(y, cfg),
            |y| self.d_arcsin_pq(y),
            x,
            T::zero(),
            T::one(),
            x / hp,
            T::of(cfg.root_tol),
            cfg.root_max_iter,
        )?;
        Ok(root.value)
    }

    /// `cos_pq(x) = (1 - sin_pq(x)^q)^{1/p}` on `(0, pi_{p,q}/2)`.
    pub fn cos_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        Ok(self.sin_cos_pq(x, cfg)?.1)
    }

    /// Both `sin_pq` and `cos_pq` from one inversion.
    pub fn sin_cos_pq(&self, x: T, cfg: &NumericConfig) -> Result<(T, T)> {
        let s = self.sin_pq(x, cfg)?;
        let one_minus_sq = -(self.q * s.ln()).exp_m1();
        Ok((s, (one_minus_sq.ln() / self.p).exp()))
    }

    /// `tan_pq(x) = sin_pq(x)/cos_pq(x)`.
    pub fn tan_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let (s, c) = self.sin_cos_pq(x, cfg)?;
        if c == T::zero() {
            return Err(Error::Overflow("tan_pq at vanishing cos_pq"));
        }
        Ok(s / c)
    }

    /// Derivative of `sin_pq`, which is `cos_pq`.
    pub fn d_sin_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        self.cos_pq(x, cfg)
    }

    /// Derivative of `cos_pq`:
    /// `-(q/p) cos_pq(x)^{2-p} sin_pq(x)^{q-1}`.
    pub fn d_cos_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        let (s, c) = self.sin_cos_pq(x, cfg)?;
        Ok(-(q / p) * c.powf(T::of(2.0) - p) * s.powf(q - T::one()))
    }

    /// Derivative of `tan_pq`:
    /// `1 + (q/p) sin_pq(x)^q / cos_pq(x)^p`.
    pub fn d_tan_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let (p, q) = (self.p, self.q);
        let (s, c) = self.sin_cos_pq(x, cfg)?;
        let cp = c.powf(p);
        if cp == T::zero() {
            return Err(Error::Overflow("d_tan_pq at vanishing cos_pq"));
        }
        Ok(T::one() + (q / p) * s.powf(q) / cp)
    }

    /// `arctan_pq(y)` on `(0, 1)`: solves `tan_pq(t) = y`. The bracket is
    /// `(0, arcsin_pq(y))` since `tan_pq(t) > sin_pq(t)` pointwise. The
    /// inner `sin` solves run at a tightened tolerance so their noise
    /// stays below the outer residual target.
    pub fn arctan_pq(&self, y: T, cfg: &NumericConfig) -> Result<T> {
        if !(y > T::zero() && y < T::one()) {
            return Err(Error::Domain(format!("arctan_pq needs 0 < y < 1, got {y}")));
        }
        let inner = cfg.tightened_for_inner_solve();
        let hi = self.arcsin_pq(y, cfg)?;
        let root = newton_bisect(
            |t| self.tan_pq(t, &inner),
            |t| self.d_tan_pq(t, &inner),
            y,
            T::zero(),
            hi,
            y.min(hi * T::of(0.75)),
            T::of(cfg.root_tol),
            cfg.root_max_iter,
        )?;
        Ok(root.value)
    }

    /// Derivative of `arctan_pq`: reciprocal of `d_tan_pq` at the preimage.
    pub fn d_arctan_pq(&self, y: T, cfg: &NumericConfig) -> Result<T> {
        let t = self.arctan_pq(y, cfg)?;
        Ok(T::one() / self.d_tan_pq(t, cfg)?)
    }

    /// `sinh_pq(x)` for `x > 0` within the image of `arsinh_pq`: inverts by
    /// Newton after doubling the upper bracket until it encloses `x`.
    pub fn sinh_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        if !(x > T::zero()) {
            return Err(Error::Domain(format!("sinh_pq needs x > 0, got {x}")));
        }
        let mut hi = x.max(T::one());
        let mut tries = 0usize;
        while self.arsinh_pq(hi, cfg)? <= x {
            hi = hi * T::of(2.0);
            tries += 1;
            if tries > 64 {
                // arsinh_pq has a finite image when q > p; x beyond it can
                // never be bracketed.
                return Err(Error::NonConvergent { context: "sinh_pq bracket expansion", budget: 64 });
            }
        }
        let root = newton_bisect(
            |y| self.arsinh_pq(y, cfg),
            |y| self.d_arsinh_pq(y),
            x,
            T::zero(),
            hi,
            x.min(hi * T::of(0.5)),
            T::of(cfg.root_tol),
            cfg.root_max_iter,
        )?;
        Ok(root.value)
    }

    /// Derivative of `sinh_pq`: `(1 + sinh_pq(x)^q)^{1/p}`.
    pub fn d_sinh_pq(&self, x: T, cfg: &NumericConfig) -> Result<T> {
        let s = self.sinh_pq(x, cfg)?;
        Ok(((s.powf(self.q)).ln_1p() / self.p).exp())
    }
}
