//! Irreducible character degrees by the Dixon-Schneider method.

pub mod degrees;
pub mod eigen;
pub mod field;
pub mod poly;
pub mod prime;
pub mod structure;

pub use degrees::{character_degrees, DegreeData};
pub use eigen::simultaneous_eigenvectors;
pub use prime::{choose_dixon_prime, ModularContext};
pub use structure::StructureConstants;
