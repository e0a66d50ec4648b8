//! Exact enumerative geometry of linear subspaces and conics on complete
//! intersections.
//!
//! The crate computes, with arbitrary precision rational arithmetic and no
//! floating point anywhere:
//!
//! - the degree of the locus of hypersurfaces (or complete intersections)
//!   containing a `k`-plane, by coefficient extraction ([`planes::deg_planes_dm`])
//!   and independently by torus localization ([`planes::deg_planes_bott`]);
//! - the Plücker degree and `c_2` integral of Fano schemes of `k`-planes, and
//!   the full set of surface invariants when the Fano scheme is a surface
//!   ([`invariants::surface_invariants`]);
//! - the irregularity and Picard-number classifications;
//! - the degree of the locus of hypersurfaces containing a conic
//!   ([`conics::deg_conics`]).
//!
//! ```
//! use enumgeom::planes::{deg_fano, ProblemSpec};
//!
//! let cubic_threefold = ProblemSpec::hypersurface(3, 4, 1).unwrap();
//! assert_eq!(deg_fano(&cubic_threefold).unwrap(), 45.into());
//! ```

pub mod conics;
pub mod error;
pub mod invariants;
pub mod planes;
pub mod polycore;
pub mod weights;

pub use error::{Error, Result};
pub use polycore::{ExactScalar, ExponentVector, MultiPoly, TruncatedSeries};
pub use weights::TorusWeights;
