//! Exact-arithmetic toolkit for edge-to-edge tilings of the plane by unit
//! squares and unit equilateral triangles, and for the upper half-space
//! geometry attached to them: cyclotomic integer arithmetic in Q(zeta_12),
//! unit-group enumeration, tiling symmetry detection and classification,
//! horoball packings and their Voronoi cells, planar dual tessellations, and
//! rigorous interval computation of ideal polyhedron volumes.
//!
//! Everything geometric is computed over Q(zeta_12) = Q(sqrt(3), i) and its
//! real subfield Q(sqrt(3)); no floating point enters any predicate. The
//! `volume` module is the one place floats appear, and there every number is
//! a directed-rounding interval.

pub mod cyclo;
pub mod sqrt3;
pub mod interval;
pub mod geom;
pub mod tiling;
pub mod classify;
pub mod hyperbolic;
pub mod volume;
pub mod render;

pub use cyclo::CycNum;
pub use interval::{ComplexInterval, RealInterval};
pub use sqrt3::SqrtThreeRat;
