//! Generalized group algebras over `Z2^3`.
//!
//! A generalized group algebra `V^σ[G]` consists of formal sums `Σ r_g g`
//! with coefficients `r_g` in a vector space `V`, multiplied through a
//! family of bilinear maps `σ_{g,h}`. This crate builds the orthogonal
//! series `so8 ⊃ so7 ⊃ g2` in that form over exact rationals, verifies the
//! Lie axioms, Killing forms and the 8- and 7-dimensional representations
//! (including triality), and runs the graded-contraction pipeline: nice sets
//! of index pairs, their classification under Fano collineations and the
//! contracted Lie algebras.

pub mod algebra;
pub mod catalog;
pub mod contraction;
pub mod error;
pub mod fano;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod reps;
pub mod scalar_twist;
pub mod structure;

pub use algebra::{AlgebraElement, BasisLabel, ComponentMask, GGAlgebra, Tensor3, TwistTable};
pub use catalog::{catalog_algebra, AlgebraKind, MaskKind};
pub use contraction::{ContractionMap, ContractionSpec, NiceSet};
pub use error::{Error, Result};
pub use fano::{Collineation, GroupElement};
pub use linalg::{Matrix, Scalar, Subspace};
pub use structure::{Fingerprint, LieReport, StructureConstants};
