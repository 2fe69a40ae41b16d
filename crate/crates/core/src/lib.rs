//! Exact verification of weight −1 Rota-Baxter operators on cocommutative
//! Hopf algebras, with finite group algebras as the working examples.

pub mod check;
pub mod error;
pub mod group;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod matched_pair;
pub mod projection;
pub mod report;
pub mod rota_baxter;

pub use error::{Error, Result};
