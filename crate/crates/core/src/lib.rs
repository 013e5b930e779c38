//! Exact Euler characteristics of finite enriched categories.
//!
//! The crate computes the magnitude (Euler characteristic) of finite
//! categories enriched in finite sets, finite categories, or spaces with a
//! finite CW structure, entirely over the rationals. On top of that it
//! provides the chain-sum formula and the classifying-space cell census for
//! acyclic topological categories, face categories of cellular stratified
//! spaces, and checkers for the groupoid, product, and 2-groupoid formulas.

pub mod cli;
pub mod enriched;
pub mod fincat;
pub mod json;
pub mod linalg;
pub mod measure;
pub mod stratified;
pub mod topcat;

pub use enriched::{EnrichedCategory, EnrichedError};
pub use fincat::{FinCatError, FiniteCategory};
pub use linalg::{Rational, RationalMatrix};
pub use measure::{Enrichment, HomObject};
