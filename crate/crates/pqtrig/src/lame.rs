//! Sampling the Lamé curve `|x|^p + |y|^q = 1` two independent ways.
//!
//! The closed-form parametrization (`C_param`) uses classical powers of
//! sine and cosine; the generalized one (`D_param`) walks the curve with
//! `sin_pq`/`cos_pq` and satisfies the exponent-swapped implicit
//! equation `|x|^q + |y|^p = 1`. Swapping the coordinates of the second
//! sampling therefore lands on the first curve, which gives a direct
//! geometric cross-check of the generalized functions.

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::pq::PqParams;

/// Which parametrization produced a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSource {
    CParam,
    DParam,
}

impl CurveSource {
    pub fn name(self) -> &'static str {
        match self {
            CurveSource::CParam => "C_param",
            CurveSource::DParam => "D_param",
        }
    }
}

/// One curve point with its parameter value and quadrant label (1-4).
#[derive(Debug, Clone, Copy)]
pub struct CurveSample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub source: CurveSource,
    pub quadrant: u8,
}

/// Signed defect of the implicit equation the sample's parametrization
/// satisfies: `|x|^p + |y|^q - 1` for `C_param`, with the exponents
/// swapped for `D_param`.
pub fn implicit_residual(params: &PqParams<f64>, s: &CurveSample) -> f64 {
    let (ex, ey) = match s.source {
        CurveSource::CParam => (params.p(), params.q()),
        CurveSource::DParam => (params.q(), params.p()),
    };
    s.x.abs().powf(ex) + s.y.abs().powf(ey) - 1.0
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain("curve sampling needs at least two samples".into()));
    }
    Ok(())
}

/// `n` first-quadrant samples of `x = cos(t)^{2/p}, y = sin(t)^{2/q}`
/// over uniform `t` in `[0, pi/2]`, endpoints forced to exactly `(1,0)`
/// and `(0,1)`. Every sample satisfies `x^p + y^q = 1` to within 1e-12.
pub fn sample_curve_c(params: &PqParams<f64>, n: usize) -> Result<Vec<CurveSample>> {
    check_n(n)?;
    let (p, q) = (params.p(), params.q());
    let h = std::f64::consts::FRAC_PI_2 / (n - 1) as f64;
    let mut out = Vec::with_capacity(n);
    out.push(CurveSample { t: 0.0, x: 1.0, y: 0.0, source: CurveSource::CParam, quadrant: 1 });
    for k in 1..n - 1 {
        let t = k as f64 * h;
        out.push(CurveSample {
            t,
            x: t.cos().powf(2.0 / p),
            y: t.sin().powf(2.0 / q),
            source: CurveSource::CParam,
            quadrant: 1,
        });
    }
    out.push(CurveSample {
        t: std::f64::consts::FRAC_PI_2,
        x: 0.0,
        y: 1.0,
        source: CurveSource::CParam,
        quadrant: 1,
    });
    Ok(out)
}

/// `n` interior samples of `x = sin_pq(t), y = cos_pq(t)` at uniform `t`
/// strictly inside `(0, pi_pq/2)` plus the exact endpoints `(0,1)` and
/// `(1,0)` appended analytically (the forward functions live on the
/// open interval). Every sample satisfies `x^q + y^p = 1` to within 1e-9.
pub fn sample_curve_d(
    params: &PqParams<f64>,
    n: usize,
    cfg: &NumericConfig,
) -> Result<Vec<CurveSample>> {
    check_n(n)?;
    let hp = params.half_pi(cfg)?;
    let h = hp / (n + 1) as f64;
    let mut out = Vec::with_capacity(n + 2);
    out.push(CurveSample { t: 0.0, x: 0.0, y: 1.0, source: CurveSource::DParam, quadrant: 1 });
    for k in 1..=n {
        let t = k as f64 * h;
        let (s, c) = params.sin_cos_pq(t, cfg)?;
        out.push(CurveSample { t, x: s, y: c, source: CurveSource::DParam, quadrant: 1 });
    }
    out.push(CurveSample { t: hp, x: 1.0, y: 0.0, source: CurveSource::DParam, quadrant: 1 });
    Ok(out)
}

/// Reflects first-quadrant samples into all four quadrants (the curve is
/// even in both coordinates), labeling quadrants 1-4 counterclockwise.
/// The parameter value of each reflected sample is kept from its
/// first-quadrant original.
pub fn extend_four_quadrants(samples: &[CurveSample]) -> Vec<CurveSample> {
    let mut out = Vec::with_capacity(4 * samples.len());
    for &(sx, sy, quadrant) in &[(1.0, 1.0, 1u8), (-1.0, 1.0, 2), (-1.0, -1.0, 3), (1.0, -1.0, 4)] {
        for s in samples {
            out.push(CurveSample { x: sx * s.x, y: sy * s.y, quadrant, ..*s });
        }
    }
    out
}

fn nearest_distances(from: &[(f64, f64)], to: &[(f64, f64)]) -> Vec<f64> {
    from.iter()
        .map(|&(x, y)| {
            to.iter()
                .map(|&(u, v)| ((x - u).powi(2) + (y - v).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min)
        })
        .collect()
}

/// Symmetric Hausdorff distance between two finite point sets (the
/// worst nearest-point distance in either direction). Between two
/// samplings of the same curve this is dominated by the larger set's
/// worst consecutive-sample gap, so compare it against a max-gap scale.
pub fn hausdorff_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let d_ab = nearest_distances(a, b).into_iter().fold(0.0, f64::max);
    let d_ba = nearest_distances(b, a).into_iter().fold(0.0, f64::max);
    d_ab.max(d_ba)
}

/// Symmetrized mean nearest-point distance (the larger of the two
/// directed means). For two samplings of one curve this tracks the mean
/// sampling density even when the parametrizations distribute their
/// points very differently, which uniform-parameter sampling does near
/// endpoints with unbounded speed.
pub fn mean_nearest_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    fn mean(v: Vec<f64>) -> f64 {
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    }
    mean(nearest_distances(a, b)).max(mean(nearest_distances(b, a)))
}

/// Mean distance between consecutive samples, used to scale Hausdorff
/// comparisons to the sampling density.
pub fn mean_arc_spacing(samples: &[CurveSample]) -> f64 {
    if samples.len() < 2 {
        return 0.0;
    }
    let total: f64 = samples
        .windows(2)
        .map(|w| ((w[1].x - w[0].x).powi(2) + (w[1].y - w[0].y).powi(2)).sqrt())
        .sum();
    total / (samples.len() - 1) as f64
}

/// CSV rendering with header `t,x,y,source,quadrant`.
pub fn to_csv(samples: &[CurveSample]) -> String {
    let mut out = String::from("t,x,y,source,quadrant\n");
    for s in samples {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{},{}\n",
            s.t,
            s.x,
            s.y,
            s.source.name(),
            s.quadrant
        ));
    }
    out
}
