pub mod corpus;
pub mod error;
pub mod face_models;
pub mod invariants;
pub mod ktheory;
pub mod linalg;
pub mod nef;
pub mod polytope;
pub mod strata;

pub use error::{Error, Result};
