pub mod algebra;
pub mod chains;
pub mod expr;
pub mod field;
pub mod homology;
pub mod lincomb;
pub mod linalg;
pub mod quantumgroup;
pub mod resolution;
pub mod scalar;
pub mod verify;

pub use algebra::{Automorphism, Element, Gen, Params, Podles, PodlesMonomial};
pub use field::{Field, Rational};
pub use lincomb::LinComb;
pub use scalar::ScalarK;

pub type PodlesK = Podles<ScalarK>;
pub type ElementK = Element<ScalarK>;
pub type ParamsK = Params<ScalarK>;
pub type AutomorphismK = Automorphism<ScalarK>;
