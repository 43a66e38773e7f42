//! Exact computer algebra for catalecticant matrices, multisymmetric ideals,
//! secant varieties of rational normal curves, and rank-3 quadric presentations.

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod multisym;
pub mod par;
pub mod poly;
pub mod rank3;
pub mod scalar;
pub mod secants;
pub mod sections;
pub mod text;
pub mod verdict;

pub use error::{Error, Result};
pub use groebner::{Budget, GbStats, GradedPieceBasis, Ideal};
pub use poly::{ExpVec, MonomialOrder, Poly, PolyRing};
pub use scalar::{Scalar, ScalarMode};
pub use verdict::Verdict;
