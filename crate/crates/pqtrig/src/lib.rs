//! Generalized (p,q)-trigonometric and hyperbolic functions.
//!
//! The six forward functions (`sin_pq`, `cos_pq`, `tan_pq`, and their
//! hyperbolic/inverse companions) are computed through two independent
//! paths: Gauss hypergeometric series and tanh-sinh quadrature. On top of
//! the evaluators sit power-mean `(a,b)`-convexity checkers and a set of
//! named verification suites that test inequality families numerically and
//! report counterexamples when a claimed configuration fails.
//!
//! Core numerics are generic over the scalar type through the [`Real`]
//! trait; `f64` aliases are exported at the crate root for the common case.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

pub mod config;
pub mod convexity;
pub mod error;
pub mod hypergeom;
pub mod lame;
pub mod powermean;
pub mod pq;
pub mod quad;
pub mod roots;
pub mod suites;

pub use config::NumericConfig;
pub use error::{Error, Result};
pub use hypergeom::{gauss_2f1, pochhammer, HypergeomArgs, SeriesResult};
pub use powermean::{power_mean, MeanOrder};
pub use pq::{PqParams, QuadKind};

/// Scalar type the core numerics are generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Shorthand for converting an `f64` constant into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant convertible to scalar type")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// (p,q) parameter pair specialized to `f64`.
pub type PqParams64 = pq::PqParams<f64>;
/// Hypergeometric series result specialized to `f64`.
pub type SeriesResult64 = hypergeom::SeriesResult<f64>;
