//! Eigenvalue region of `n × n` stochastic matrices.
//!
//! * [`farey`]: Farey sequences, pairs and angle bracketing.
//! * [`arcs`]: arc parameters and the polynomials tracing each arc.
//! * [`poly`], [`matrix`]: polynomials, root finding, stochastic matrices.
//! * [`boundary`]: the boundary point at a given argument.
//! * [`region`]: membership, minimal order, radial scaling.
//! * [`realize`]: stochastic matrices with a prescribed subdominant eigenvalue.

pub mod arcs;
pub mod boundary;
pub mod error;
pub mod farey;
pub mod matrix;
pub mod poly;
pub mod realize;
pub mod region;

pub use arcs::{arc_params, ArcParams, ArcType};
pub use boundary::{boundary_point, sample_boundary, solve_rho, BoundaryConfig, BoundaryPoint};
pub use error::{Error, Result};
pub use farey::{Bracket, FareyPair, Fraction};
pub use matrix::StochasticMatrix;
pub use num_complex::Complex64;
pub use poly::{Poly, RootSet};
pub use region::{contains, min_order, scale_into, MembershipVerdict};
