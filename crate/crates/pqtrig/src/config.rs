//! Tolerances and iteration budgets for the numeric routines.

/// Knobs for series summation, quadrature, and root finding.
///
/// Tolerances are kept as `f64` regardless of the scalar type the
/// evaluations run in; they are converted at the point of use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    /// Relative truncation tolerance for hypergeometric series.
    pub series_tol: f64,
    /// Hard cap on the number of series terms.
    pub series_max_terms: usize,
    /// Successive-level agreement tolerance for tanh-sinh quadrature.
    pub quad_tol: f64,
    /// Maximum number of tanh-sinh refinement levels.
    pub quad_levels: usize,
    /// Residual tolerance `|f(y) - target|` for root finding.
    pub root_tol: f64,
    /// Iteration cap for the safeguarded Newton solver.
    pub root_max_iter: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            series_tol: 1e-14,
            series_max_terms: 1_000_000,
            quad_tol: 1e-12,
            quad_levels: 12,
            root_tol: 1e-12,
            root_max_iter: 200,
        }
    }
}

impl NumericConfig {
    /// Copy of `self` with `root_tol` tightened for solves that feed
    /// another solver's residual (the inner solve's error otherwise sets
    /// the floor the outer residual can reach).
    pub fn tightened_for_inner_solve(&self) -> Self {
        Self {
            root_tol: (self.root_tol / 64.0).max(1e-15),
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_sane() {
        let c = NumericConfig::default();
        assert!(c.series_tol > 0.0 && c.series_tol < 1e-6);
        assert_eq!(c.series_max_terms, 1_000_000);
        assert_eq!(c.quad_levels, 12);
        assert_eq!(c.root_max_iter, 200);
    }

    #[test]
    fn inner_tightening_shrinks_root_tol() {
        let c = NumericConfig::default();
        let t = c.tightened_for_inner_solve();
        assert!(t.root_tol < c.root_tol);
        assert!(t.root_tol >= 1e-15);
        assert_eq!(t.series_tol, c.series_tol);
    }
}
