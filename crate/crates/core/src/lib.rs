//! Hopf algebras of rooted forests with cut and contraction coproducts, the
//! word Hopf algebras they map to, and the morphisms between them, all with
//! exact rational coefficients.

pub mod bialgebra;
pub mod contraction;
pub mod cut_hopf;
pub mod error;
pub mod forest;
pub mod linear;
pub mod morphisms;
pub mod prelie;
pub mod registry;
pub mod series;
pub mod universal;
pub mod words;

pub use error::{Error, Result};
