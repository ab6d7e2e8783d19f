//! Volume bounds for generalized hyperbolic polyhedra and hyperbolic links,
//! computed from combinatorial data: polyhedron 1-skeletons and link twist
//! decompositions.

pub mod augment;
pub mod error;
pub mod expr;
pub mod linkdiag;
pub mod linkvol;
pub mod numerics;
pub mod planar;
pub mod polyvol;
pub mod report;

pub use error::{Error, Result};
pub use expr::{Basis, VolumeExpr};
