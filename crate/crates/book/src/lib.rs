//! Runs the code listings of the guide in `book/` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/planes.md")]
pub mod planes {}
#[doc = include_str!("../../../book/src/fano-surfaces.md")]
pub mod fano_surfaces {}
#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}
#[doc = include_str!("../../../book/src/conics.md")]
pub mod conics {}
#[doc = include_str!("../../../book/src/conic-audit.md")]
pub mod conic_audit {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
