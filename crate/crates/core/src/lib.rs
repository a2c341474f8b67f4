//! Characters of symmetric, spin, Brauer and walled Brauer algebras computed
//! through maya diagrams and vertex-operator style recursions.

pub mod brauer;
pub mod error;
pub mod fock;
pub mod gamma;
pub mod lambda;
pub mod maya;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use fock::FockVector;
pub use gamma::{GammaBasis, GammaElement};
pub use lambda::{Basis, LambdaElement};
pub use maya::{ChargedMayaDiagram, MayaDiagram, SignedMaya};
pub use partition::Partition;
