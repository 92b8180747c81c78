//! Spectral toolkit for weighted Cayley and Schreier graphs on the symmetric
//! group `S_n`.
//!
//! The crate computes Laplacian spectra of Cayley graphs `X(S_n, w)` two ways:
//! by brute force on the left regular representation, and by decomposing the
//! Laplacian into irreducible representation blocks (Young's orthogonal form).
//! On top of the spectrum machinery it implements the branching-rule lower
//! bound on the spectral gap, the property-(A) check, and an end-to-end
//! verifier showing that the Cayley graph generated by the initial reversals
//! `r_1, ..., r_n` has spectral gap exactly 1 for every `n >= 3`.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`perm`] | permutations of `{1,..,n}`, generating sets, group enumeration |
//! | [`algebra`] | nonnegative group-algebra elements and their l1 norm |
//! | [`partition`] | integer partitions and the branching rule |
//! | [`tableau`] | standard Young tableaux and irrep dimensions |
//! | [`rep`] | Young's orthogonal form and the defining representation |
//! | [`spectrum`] | symmetric eigensolver and multiset spectrum comparisons |
//! | [`cayley`] | the psi functional, gap scan over irreps, dense oracle |
//! | [`schreier`] | coset graphs for the Young subgroup `S_(n-2,2)` |
//! | [`bounds`] | branching-rule lower bound, property (A), gap reports |
//! | [`verify`] | batch verification driver with named checks |

pub mod algebra;
pub mod bounds;
pub mod cayley;
pub mod error;
pub mod partition;
pub mod perm;
pub mod rep;
pub mod schreier;
pub mod spectrum;
pub mod tableau;
pub mod verify;

pub use algebra::GroupAlgebraElement;
pub use bounds::{Decomposition, GapReport, PropertyA};
pub use cayley::CayleyGap;
pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::{GeneratingSet, Permutation};
pub use rep::OrthogonalRep;
pub use schreier::SchreierGraph;
pub use spectrum::Spectrum;
pub use tableau::StandardTableau;

/// Default cap on brute-force enumeration of `S_n` (8! = 40320 elements).
pub const DEFAULT_ENUM_CAP: usize = 8;
/// Default cap on the dense regular-representation path (5040 x 5040 at n = 7).
pub const DEFAULT_DENSE_CAP: usize = 7;
/// Default cap on the per-irrep gap scan.
pub const DEFAULT_IRREP_CAP: usize = 8;
