//! Numerical laboratory for doubly warped metrics on the n-sphere.
//!
//! A metric `g = dr² + a(r)² g_circle + b(r)² g_sphere` on `(0, R) × 𝕊¹ × 𝕊^{n-2}`
//! closes into a metric on 𝕊ⁿ when the circle factor collapses smoothly at
//! `r = 0` and the `𝕊^{n-2}` factor collapses at `r = R`. This crate builds two
//! such families — the round sphere and a one-parameter "pinch" family that
//! keeps `Ric ≥ n-1` while its volume collapses — and measures them:
//!
//! * [`curvature`] — the three diagonal Ricci frame values and lower-bound scans;
//! * [`spectrum`] — Laplace–Beltrami eigenvalues via radial Sturm–Liouville
//!   problems on a staggered grid, Rayleigh quotients, and the Bochner defect
//!   `∫|Hess f + f·g|² / ‖f‖²`;
//! * [`geometry`] — geodesic distances on a reduced 3-D grid, diameter/radius,
//!   and distortion against the half-sphere model;
//! * [`sphere_map`] — the unit-normalized eigenfunction map `Φ : M → 𝕊ⁿ` and
//!   its quality measures (sup deviation of Σfᵢ², metric distortion, empirical
//!   Lipschitz constant, topological degree).
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

pub mod curvature;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod piecewise;
pub mod quadrature;
pub mod sphere_map;
pub mod spectrum;
pub mod tol;
pub mod tridiag;

pub use error::Error;
pub use metrics::{
    make_pinch_family, make_round_sphere, sphere_volume, volume, ClosureReport, PinchConstants,
    WarpedSphereMetric,
};
pub use piecewise::{PiecewiseSmoothFunction, SegmentExpr};

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
