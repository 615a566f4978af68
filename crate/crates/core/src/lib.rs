//! Quantum Schur algebras of finite type: representations, relation checks,
//! dimensions and finite presentations.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod field;
pub mod hwmodule;
pub mod linalg;
pub mod present;
pub mod qarith;
pub mod relations;
pub mod report;
pub mod schur;
pub mod weyl;

pub use cartan::{builtin_cartan, validate_cartan, CartanData};
pub use error::{Error, Result};
pub use field::Field;
pub use qarith::{LaurentPoly, RationalFunction};
pub use weyl::{Weight, WeightSet};
