//! Numerical power-mean convexity and monotonicity checking.
//!
//! A function is `(a,b)`-convex when `f(M_a(r,s)) <= M_b(f(r), f(s))` for
//! all `r, s` in its domain, where `M_t` is the order-`t` power mean; the
//! checkers here evaluate that inequality over deterministic grids and
//! report the worst counterexample pair when it fails. A differentiable
//! criterion (monotonicity of `x^{1-a} f'(x) f(x)^{b-1}`) provides an
//! independent second method.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::powermean::power_mean;
use crate::pq::PqParams;

/// How grid points are spread between the interval ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Which `(r, s)` pairs a grid produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// Every unordered pair, including `r = s`.
    AllPairs,
    /// `count` pairs drawn reproducibly from the given seed.
    RandomPairs { count: usize, seed: u64 },
}

/// A sampling grid on `(lo, hi)` with an inset keeping evaluations away
/// from singular endpoints.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
    pub edge_margin: f64,
    pub spacing: Spacing,
    pub pair_mode: PairMode,
}

impl GridSpec {
    /// Linear grid with the default inset `1e-4 * (hi - lo)`.
    pub fn linear(lo: f64, hi: f64, n_points: usize) -> Self {
        Self {
            lo,
            hi,
            n_points,
            edge_margin: 1e-4 * (hi - lo),
            spacing: Spacing::Linear,
            pair_mode: PairMode::AllPairs,
        }
    }

    /// Log-spaced grid between `lo > 0` and `hi`, endpoints included; the
    /// positive `lo` already is the inset from a singular origin.
    pub fn log(lo: f64, hi: f64, n_points: usize) -> Self {
        Self { lo, hi, n_points, edge_margin: 0.0, spacing: Spacing::Log, pair_mode: PairMode::AllPairs }
    }

    fn validate(&self) -> Result<()> {
        if self.n_points < 2 {
            return Err(Error::Domain(format!("grid needs n_points >= 2, got {}", self.n_points)));
        }
        let (lo, hi) = (self.lo + self.edge_margin, self.hi - self.edge_margin);
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Domain(format!(
                "grid needs lo + edge_margin < hi - edge_margin, got [{lo}, {hi}]"
            )));
        }
        if self.spacing == Spacing::Log && !(lo > 0.0) {
            return Err(Error::Domain(format!("log grid needs a positive lower end, got {lo}")));
        }
        Ok(())
    }

    /// The sample points, ascending, ends landing exactly on the inset
    /// bounds.
    pub fn points(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let (lo, hi) = (self.lo + self.edge_margin, self.hi - self.edge_margin);
        let n = self.n_points;
        let mut pts = Vec::with_capacity(n);
        for i in 0..n {
            let frac = i as f64 / (n - 1) as f64;
            let x = match self.spacing {
                Spacing::Linear => lo + frac * (hi - lo),
                Spacing::Log => (lo.ln() + frac * (hi.ln() - lo.ln())).exp(),
            };
            pts.push(x.max(lo).min(hi));
        }
        pts[0] = lo;
        pts[n - 1] = hi;
        Ok(pts)
    }

    /// The `(r, s)` pairs with `r <= s`, in a deterministic order.
    pub fn pairs(&self) -> Result<Vec<(f64, f64)>> {
        let pts = self.points()?;
        match self.pair_mode {
            PairMode::AllPairs => {
                let mut out = Vec::with_capacity(pts.len() * (pts.len() + 1) / 2);
                for i in 0..pts.len() {
                    for j in i..pts.len() {
                        out.push((pts[i], pts[j]));
                    }
                }
                Ok(out)
            }
            PairMode::RandomPairs { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    let i = rng.gen_range(0..pts.len());
                    let j = rng.gen_range(0..pts.len());
                    out.push((pts[i.min(j)], pts[i.max(j)]));
                }
                Ok(out)
            }
        }
    }
}

/// Whether the defining inequality is tested with `<=` or `>=`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Convex,
    Concave,
}

/// A concrete pair where an inequality was evaluated. `gap` is the
/// direction-relative excess `lhs - rhs` (convex) or `rhs - lhs`
/// (concave): positive beyond tolerance means violation.
#[derive(Debug, Clone, Copy)]
pub struct Witness {
    pub r: f64,
    pub s: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// Outcome of a grid convexity check.
#[derive(Debug, Clone)]
pub struct ConvexityVerdict {
    pub holds: bool,
    /// Worst violating pair; present exactly when `holds` is false.
    pub witness: Option<Witness>,
    pub samples_checked: usize,
    /// Largest direction-relative excess seen over all pairs, violating
    /// or not (negative when the inequality held with slack everywhere).
    pub worst_gap: f64,
}

/// Tests `f(M_a(r,s)) <= M_b(f(r), f(s))` (or the mirrored `>=`) over
/// every grid pair. A pair violates only when its excess exceeds
/// `tol * max(1, |rhs|)`; the reported witness is the pair with the
/// largest excess, ties resolved by pair order.
pub fn check_ab_convex<F>(
    f: F,
    a: f64,
    b: f64,
    grid: &GridSpec,
    tol: f64,
    direction: Direction,
) -> Result<ConvexityVerdict>
where
    F: Fn(f64) -> Result<f64>,
{
    let pts = grid.points()?;
    let mut values = Vec::with_capacity(pts.len());
    for &x in &pts {
        values.push(f(x)?);
    }
    let lookup = |x: f64| -> Option<f64> {
        pts.iter().position(|&p| p == x).map(|i| values[i])
    };

    let mut worst: Option<Witness> = None;
    let mut worst_gap = f64::NEG_INFINITY;
    let mut violated = false;
    let pairs = grid.pairs()?;
    let samples = pairs.len();
    for (r, s) in pairs {
        let m = power_mean(a, r, s)?;
        let lhs = f(m)?;
        let fr = lookup(r).expect("pair endpoints come from the grid");
        let fs = lookup(s).expect("pair endpoints come from the grid");
        let rhs = power_mean(b, fr, fs)?;
        let gap = match direction {
            Direction::Convex => lhs - rhs,
            Direction::Concave => rhs - lhs,
        };
        let is_violation = gap > tol * rhs.abs().max(1.0);
        if gap > worst_gap {
            worst_gap = gap;
            if is_violation {
                worst = Some(Witness { r, s, lhs, rhs, gap });
            }
        }
        violated |= is_violation;
    }
    // A non-worst pair may violate while the worst-gap pair squeaked under
    // its own (larger) tolerance scale; keep the verdict and the witness
    // consistent by rescanning in that rare case.
    if violated && worst.is_none() {
        worst_gap = f64::NEG_INFINITY;
        for (r, s) in grid.pairs()? {
            let m = power_mean(a, r, s)?;
            let lhs = f(m)?;
            let fr = lookup(r).expect("pair endpoints come from the grid");
            let fs = lookup(s).expect("pair endpoints come from the grid");
            let rhs = power_mean(b, fr, fs)?;
            let gap = match direction {
                Direction::Convex => lhs - rhs,
                Direction::Concave => rhs - lhs,
            };
            if gap > tol * rhs.abs().max(1.0) && gap > worst_gap {
                worst_gap = gap;
                worst = Some(Witness { r, s, lhs, rhs, gap });
            }
        }
    }
    Ok(ConvexityVerdict { holds: !violated, witness: worst.filter(|_| violated), samples_checked: samples, worst_gap })
}

/// Classification of a sampled function by its successive differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    /// All differences inside the tolerance band; both monotone verdicts
    /// are admissible.
    Constant,
    NonMonotone,
}

/// Monotonicity scan with the extreme differences in each direction.
#[derive(Debug, Clone)]
pub struct MonotoneScan {
    pub class: Monotonicity,
    /// Largest significant upward step, if any.
    pub max_rise: Option<Witness>,
    /// Largest significant downward step, if any (`gap` is its magnitude).
    pub max_fall: Option<Witness>,
    pub samples_checked: usize,
}

impl MonotoneScan {
    /// Whether the scan is consistent with the expected direction
    /// (constant counts as weakly monotone either way).
    pub fn consistent_with(&self, increasing: bool) -> bool {
        match self.class {
            Monotonicity::Constant => true,
            Monotonicity::Increasing => increasing,
            Monotonicity::Decreasing => !increasing,
            Monotonicity::NonMonotone => false,
        }
    }

    /// The witness contradicting the expected direction, if any.
    pub fn violation_against(&self, increasing: bool) -> Option<Witness> {
        if self.consistent_with(increasing) {
            None
        } else if increasing {
            self.max_fall
        } else {
            self.max_rise
        }
    }
}

/// Scans an already-sampled sequence `gs` over abscissas `xs`. A step
/// counts as significant when it exceeds `tol * max(1, |g_i|, |g_{i+1}|)`.
pub fn scan_sequence_monotone(xs: &[f64], gs: &[f64], tol: f64) -> MonotoneScan {
    assert_eq!(xs.len(), gs.len(), "abscissas and values must align");
    let mut max_rise: Option<Witness> = None;
    let mut max_fall: Option<Witness> = None;
    for i in 0..gs.len().saturating_sub(1) {
        let d = gs[i + 1] - gs[i];
        let band = tol * gs[i].abs().max(gs[i + 1].abs()).max(1.0);
        if d > band && max_rise.as_ref().is_none_or(|w| d > w.gap) {
            max_rise = Some(Witness { r: xs[i], s: xs[i + 1], lhs: gs[i], rhs: gs[i + 1], gap: d });
        }
        if -d > band && max_fall.as_ref().is_none_or(|w| -d > w.gap) {
            max_fall = Some(Witness { r: xs[i], s: xs[i + 1], lhs: gs[i], rhs: gs[i + 1], gap: -d });
        }
    }
    let class = match (&max_rise, &max_fall) {
        (None, None) => Monotonicity::Constant,
        (Some(_), None) => Monotonicity::Increasing,
        (None, Some(_)) => Monotonicity::Decreasing,
        (Some(_), Some(_)) => Monotonicity::NonMonotone,
    };
    MonotoneScan { class, max_rise, max_fall, samples_checked: xs.len() }
}

/// Samples `g` on the grid and classifies it by successive differences.
pub fn scan_monotone<G>(g: G, grid: &GridSpec, tol: f64) -> Result<MonotoneScan>
where
    G: Fn(f64) -> Result<f64>,
{
    let xs = grid.points()?;
    let mut gs = Vec::with_capacity(xs.len());
    for &x in &xs {
        gs.push(g(x)?);
    }
    Ok(scan_sequence_monotone(&xs, &gs, tol))
}

/// Classifies `g` on the grid (see [`scan_monotone`] for the band rule).
pub fn check_monotone<G>(g: G, grid: &GridSpec, tol: f64) -> Result<Monotonicity>
where
    G: Fn(f64) -> Result<f64>,
{
    Ok(scan_monotone(g, grid, tol)?.class)
}

/// The differentiable convexity criterion: `(a,b)`-convexity of positive
/// differentiable `f` follows when `x^{1-a} f'(x) f(x)^{b-1}` is
/// increasing, concavity when it is decreasing.
pub fn check_derivative_criterion<F, D>(
    f: F,
    df: D,
    a: f64,
    b: f64,
    grid: &GridSpec,
    tol: f64,
) -> Result<MonotoneScan>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    scan_monotone(
        |x| {
            let fx = f(x)?;
            if !(fx > 0.0) {
                return Err(Error::Domain(format!(
                    "derivative criterion needs positive function values, got f({x}) = {fx}"
                )));
            }
            Ok(x.powf(1.0 - a) * df(x)? * fx.powf(b - 1.0))
        },
        grid,
        tol,
    )
}

/// The functions the verification suites and the CLI can name.
///
/// Anything else is expressed by handing a closure straight to
/// [`check_ab_convex`] / [`scan_monotone`], which accept arbitrary
/// functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionId {
    ArcsinPq,
    ArccosPq,
    ArsinhPq,
    ArctanPq,
    SinPq,
    CosPq,
    TanPq,
    SinhPq,
    /// `x -> pi_{p,q}/2 - arccos_pq(x)`.
    PiHalfMinusArccosPq,
}

impl FunctionId {
    pub const ALL: [FunctionId; 9] = [
        FunctionId::ArcsinPq,
        FunctionId::ArccosPq,
        FunctionId::ArsinhPq,
        FunctionId::ArctanPq,
        FunctionId::SinPq,
        FunctionId::CosPq,
        FunctionId::TanPq,
        FunctionId::SinhPq,
        FunctionId::PiHalfMinusArccosPq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::ArcsinPq => "arcsin_pq",
            FunctionId::ArccosPq => "arccos_pq",
            FunctionId::ArsinhPq => "arsinh_pq",
            FunctionId::ArctanPq => "arctan_pq",
            FunctionId::SinPq => "sin_pq",
            FunctionId::CosPq => "cos_pq",
            FunctionId::TanPq => "tan_pq",
            FunctionId::SinhPq => "sinh_pq",
            FunctionId::PiHalfMinusArccosPq => "pi_half_minus_arccos_pq",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn eval(self, params: &PqParams<f64>, x: f64, cfg: &NumericConfig) -> Result<f64> {
        match self {
            FunctionId::ArcsinPq => params.arcsin_pq(x, cfg),
            FunctionId::ArccosPq => params.arccos_pq(x, cfg),
            FunctionId::ArsinhPq => params.arsinh_pq(x, cfg),
            FunctionId::ArctanPq => params.arctan_pq(x, cfg),
            FunctionId::SinPq => params.sin_pq(x, cfg),
            FunctionId::CosPq => params.cos_pq(x, cfg),
            FunctionId::TanPq => params.tan_pq(x, cfg),
            FunctionId::SinhPq => params.sinh_pq(x, cfg),
            FunctionId::PiHalfMinusArccosPq => params.lam_pq(x, cfg),
        }
    }

    /// Closed-form derivative.
    pub fn deriv(self, params: &PqParams<f64>, x: f64, cfg: &NumericConfig) -> Result<f64> {
        match self {
            FunctionId::ArcsinPq => params.d_arcsin_pq(x),
            // arccos and pi/2 - arccos sum to a constant
            FunctionId::ArccosPq => params.d_lam_pq(x).map(|d| -d),
            FunctionId::ArsinhPq => params.d_arsinh_pq(x),
            FunctionId::ArctanPq => params.d_arctan_pq(x, cfg),
            FunctionId::SinPq => params.d_sin_pq(x, cfg),
            FunctionId::CosPq => params.d_cos_pq(x, cfg),
            FunctionId::TanPq => params.d_tan_pq(x, cfg),
            FunctionId::SinhPq => params.d_sinh_pq(x, cfg),
            FunctionId::PiHalfMinusArccosPq => params.d_lam_pq(x),
        }
    }

    /// The open interval each function is naturally checked on: `(0,1)`
    /// for the inverse-circular family and the forward circular family's
    /// common subinterval, `(0, pi_{p,q}/2)` for the forward circular
    /// functions themselves, and a truncation of `(0, inf)` for the
    /// hyperbolic pair.
    pub fn natural_domain(self, params: &PqParams<f64>, cfg: &NumericConfig) -> Result<(f64, f64)> {
        const X_MAX: f64 = 50.0;
        Ok(match self {
            FunctionId::ArcsinPq
            | FunctionId::ArccosPq
            | FunctionId::ArctanPq
            | FunctionId::PiHalfMinusArccosPq => (0.0, 1.0),
            FunctionId::SinPq | FunctionId::CosPq | FunctionId::TanPq => {
                (0.0, params.half_pi(cfg)?)
            }
            FunctionId::ArsinhPq => (0.0, X_MAX),
            FunctionId::SinhPq => (0.0, params.arsinh_pq(X_MAX, cfg)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    #[test]
    fn linear_grid_points() {
        let g = GridSpec::linear(0.0, 1.0, 21);
        let pts = g.points().unwrap();
        assert_eq!(pts.len(), 21);
        assert_eq!(pts[0], 1e-4);
        assert_eq!(pts[20], 1.0 - 1e-4);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn log_grid_points() {
        let g = GridSpec::log(1e-3, 50.0, 20);
        let pts = g.points().unwrap();
        assert_eq!(pts.len(), 20);
        assert_eq!(pts[0], 1e-3);
        assert_eq!(pts[19], 50.0);
        // log spacing: ratios between consecutive points are constant
        let r0 = pts[1] / pts[0];
        let r1 = pts[10] / pts[9];
        assert!((r0 - r1).abs() < 1e-9 * r0);
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::linear(0.0, 1.0, 1).points().is_err());
        assert!(GridSpec::linear(1.0, 0.0, 5).points().is_err());
        assert!(GridSpec::log(0.0, 1.0, 5).points().is_err());
    }

    #[test]
    fn all_pairs_count_and_order() {
        let g = GridSpec::linear(0.0, 1.0, 20);
        let pairs = g.pairs().unwrap();
        assert_eq!(pairs.len(), 210); // 20 * 21 / 2, diagonal included
        assert!(pairs.iter().all(|&(r, s)| r <= s));
    }

    #[test]
    fn random_pairs_are_reproducible() {
        let mut g = GridSpec::linear(0.0, 1.0, 20);
        g.pair_mode = PairMode::RandomPairs { count: 37, seed: 7 };
        let a = g.pairs().unwrap();
        let b = g.pairs().unwrap();
        assert_eq!(a.len(), 37);
        assert_eq!(a, b);
        g.pair_mode = PairMode::RandomPairs { count: 37, seed: 8 };
        assert_ne!(g.pairs().unwrap(), a);
    }

    #[test]
    fn identity_is_aa_convex_with_zero_gap() {
        for &a in &[-2.0, 0.0, 1.0, 3.5] {
            let g = GridSpec::linear(0.1, 2.0, 10);
            let v = check_ab_convex(|x| Ok(x), a, a, &g, 1e-9, Direction::Convex).unwrap();
            assert!(v.holds);
            assert!(v.witness.is_none());
            assert_eq!(v.worst_gap, 0.0, "a={a}");
            assert_eq!(v.samples_checked, 55);
        }
    }

    #[test]
    fn exp_is_arithmetically_convex_not_concave() {
        let g = GridSpec::linear(0.0, 1.0, 15);
        let v = check_ab_convex(|x| Ok(x.exp()), 1.0, 1.0, &g, 1e-9, Direction::Convex).unwrap();
        assert!(v.holds && v.witness.is_none());
        let v = check_ab_convex(|x| Ok(x.exp()), 1.0, 1.0, &g, 1e-9, Direction::Concave).unwrap();
        assert!(!v.holds);
        let w = v.witness.expect("failed checks carry a witness");
        assert!(w.gap > 1e-9);
        assert!(w.r < w.s);
        assert!((w.lhs - power_mean(1.0, w.r, w.s).unwrap().exp()).abs() < 1e-15);
    }

    #[test]
    fn arcsin_aa_convex_holds_and_far_b_fails() {
        let params = PqParams::new(3.0, 4.0).unwrap();
        let c = cfg();
        let g = GridSpec::linear(0.0, 1.0, 25);
        let v = check_ab_convex(|x| params.arcsin_pq(x, &c), 1.0, 1.0, &g, 1e-9, Direction::Convex)
            .unwrap();
        assert!(v.holds, "worst gap {}", v.worst_gap);

        let g = GridSpec::linear(0.0, 1.0, 40);
        let v = check_ab_convex(|x| params.arcsin_pq(x, &c), 1.0, -5.0, &g, 1e-9, Direction::Convex)
            .unwrap();
        assert!(!v.holds);
        assert!(v.witness.is_some());
    }

    #[test]
    fn classical_cos_is_not_arithmetically_convex() {
        let params = PqParams::new(2.0, 2.0).unwrap();
        let c = cfg();
        let g = GridSpec::linear(0.0, 1.0, 20);
        let v = check_ab_convex(|x| params.cos_pq(x, &c), 1.0, 1.0, &g, 1e-9, Direction::Convex)
            .unwrap();
        assert!(!v.holds);
        let v = check_ab_convex(|x| params.cos_pq(x, &c), 1.0, 1.0, &g, 1e-9, Direction::Concave)
            .unwrap();
        assert!(v.holds, "cos is concave on (0,1) classically; worst gap {}", v.worst_gap);
    }

    #[test]
    fn monotone_classification() {
        let g = GridSpec::linear(0.0, 1.0, 30);
        assert_eq!(check_monotone(|x| Ok(x.exp()), &g, 1e-9).unwrap(), Monotonicity::Increasing);
        assert_eq!(check_monotone(|x| Ok(-x), &g, 1e-9).unwrap(), Monotonicity::Decreasing);
        assert_eq!(check_monotone(|_| Ok(2.5), &g, 1e-9).unwrap(), Monotonicity::Constant);
        let g6 = GridSpec::linear(0.0, 6.0, 60);
        let scan = scan_monotone(|x| Ok(x.sin()), &g6, 1e-9).unwrap();
        assert_eq!(scan.class, Monotonicity::NonMonotone);
        assert!(scan.max_rise.is_some() && scan.max_fall.is_some());
        assert!(scan.violation_against(true).is_some());
        assert!(scan.violation_against(false).is_some());
    }

    #[test]
    fn constant_sequence_admits_both_directions() {
        let xs = [0.0, 0.5, 1.0];
        let gs = [1.0, 1.0 + 1e-12, 1.0];
        let scan = scan_sequence_monotone(&xs, &gs, 1e-9);
        assert_eq!(scan.class, Monotonicity::Constant);
        assert!(scan.consistent_with(true) && scan.consistent_with(false));
    }

    #[test]
    fn derivative_criterion_on_known_cases() {
        let c = cfg();
        let g = GridSpec::linear(0.0, 1.0, 20);
        // classical arcsin: geometric-geometric convex
        let params = PqParams::new(2.0, 2.0).unwrap();
        let scan = check_derivative_criterion(
            |x| params.arcsin_pq(x, &c),
            |x| params.d_arcsin_pq(x),
            0.0,
            0.0,
            &g,
            1e-9,
        )
        .unwrap();
        assert_eq!(scan.class, Monotonicity::Increasing);
        // classical asinh: geometric-geometric concave
        let params = PqParams::new(3.0, 3.0).unwrap();
        let scan = check_derivative_criterion(
            |x| params.arsinh_pq(x, &c),
            |x| params.d_arsinh_pq(x),
            0.0,
            0.0,
            &g,
            1e-9,
        )
        .unwrap();
        assert_eq!(scan.class, Monotonicity::Decreasing);
        // identity with a = b = 1: criterion function is identically 1
        let scan =
            check_derivative_criterion(|x| Ok(x), |_| Ok(1.0), 1.0, 1.0, &g, 1e-9).unwrap();
        assert_eq!(scan.class, Monotonicity::Constant);
    }

    #[test]
    fn function_id_round_trips_names() {
        for f in FunctionId::ALL {
            assert_eq!(FunctionId::parse(f.name()), Some(f));
        }
        assert_eq!(FunctionId::parse("nope"), None);
    }

    #[test]
    fn function_id_derivatives_match_finite_differences() {
        let params = PqParams::new(3.0, 1.5).unwrap();
        let c = cfg();
        let h = 1e-6;
        for f in FunctionId::ALL {
            let (lo, hi) = f.natural_domain(&params, &c).unwrap();
            let x = lo + 0.4 * (hi - lo);
            let fd = (f.eval(&params, x + h, &c).unwrap() - f.eval(&params, x - h, &c).unwrap())
                / (2.0 * h);
            let an = f.deriv(&params, x, &c).unwrap();
            assert!(
                (fd - an).abs() < 1e-5 * an.abs().max(1.0),
                "{}: fd {fd} vs closed form {an}",
                f.name()
            );
        }
    }
}
