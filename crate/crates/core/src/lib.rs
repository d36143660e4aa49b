//! Maximal weights, weight quivers and representation type for blocks of
//! cyclotomic quiver Hecke algebras of affine type A, together with graded
//! dimensions from standard tableaux and Brauer graph algebra tools.

pub mod brauer;
pub mod cartan;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod maxweights;
pub mod poly;
pub mod quiver;
pub mod tableaux;
pub mod weyl;

pub use cartan::{AffineRank, RootVector, SigmaRotate, WeightCoeffs};
pub use classify::{classify, Classifier, FieldParams, RepType, TClass};
pub use error::{Error, Result};
pub use maxweights::{max_plus, solve_x, LevelKDominant, MaxWeightEntry};
pub use poly::LaurentPoly;
pub use quiver::{build_quiver, t_subquiver, Arrow, TQuiver, WeightQuiver};
pub use tableaux::{graded_dim, graded_dim_total, Charges, GdimOptions, Multipartition};
pub use weyl::{orbit_representative, OrbitResult, OrbitStatus};
