//! Gauge functionals for closed convex pointed cones in R^m.
//!
//! A gauge `phi(x) = max_{c in C} <x, c>` over a set `C` generating the
//! positive polar cone `K+` is negative exactly on the interior of `-K`,
//! zero on its boundary and positive outside. This crate provides:
//!
//! - [`cone`]: polyhedral, orthant and Lorentz cones with membership,
//!   classification, polar cones and projection onto `-K`;
//! - [`gauge`]: finite gauges, the oriented distance function, sampling
//!   oracles and axiom checks;
//! - [`descent`]: a K-steepest-descent solver for vector optimization
//!   driven by a finite gauge;
//! - [`schema`]: the JSON formats read by the `conegauge` command line tool.

pub mod cli;
pub mod cone;
pub mod descent;
pub mod error;
pub mod gauge;
mod lp;
mod nnls;
pub mod schema;
pub mod vector;

pub use cone::{ConeClassification, ConeRep, PolyhedralCone};
pub use error::{Error, Result};
pub use gauge::{FiniteGauge, Gauge, GaugeReport, OrientedDistanceGauge};
pub use vector::RealVec;
