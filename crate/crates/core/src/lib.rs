//! Exact verification of Frobenius pairs in graded vector spaces.

pub mod dsl;
pub mod duality;
pub mod error;
pub mod frobenius;
pub mod gvect;
pub mod instances;
pub mod matrix;
pub mod scalar;

pub use duality::{
    check_correspondences, check_duality, check_zigzag, dual_comparison, duality_data,
    lambda_inverse, lambda_transport, rho_inverse, rho_transport, DualComparison, DualityData,
};
pub use error::{Error, Result};
pub use frobenius::{Axiom, AxiomReport, CheckId, CheckResult, FrobeniusPairData, StructureMap};
pub use gvect::{Dims, EntryDiff, GradedObj, Mor};
pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
