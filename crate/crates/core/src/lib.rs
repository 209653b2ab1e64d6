//! Exact computations with universal R-matrices of finite Abelian group
//! Hopf algebras, their dual coquasitriangular forms, and the braidings they
//! induce on graded vector spaces.
//!
//! All scalars live in a cyclotomic field ℚ(ζ_e) where `e` is the exponent
//! of the group, so every identity is checked with exact equality.

pub mod bichar;
pub mod braiding;
pub mod coquasi;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod hopf;
pub mod rational;
pub mod report;
pub mod rmatrix;

pub use bichar::{
    bicharacter_count, cyclic_bicharacter, enumerate_all, from_table, parse_k_matrix,
    Bicharacter, FunctionTable, PairingData, TableRejection,
};
pub use braiding::{
    braid_from_coquasi, braid_from_r, braid_graded, verify_category_axioms, CategoryReport,
    Comodule, GradedMap, GradedSpace, Module, SparseMatrix,
};
pub use coquasi::BilinearForm;
pub use cyclotomic::{CycAccumulator, CycNumber, CyclotomicField};
pub use error::{Error, Result};
pub use group::{Character, Group, GroupElement, GroupSpec, Subgroup};
pub use hopf::{
    function_from_tensor, hopf_pairing, invert_tensor2, tensor_from_function, HopfElement, Legs,
    Side, Tensor2, Tensor3,
};
pub use rational::Rational;
pub use report::{AxiomCheck, AxiomReport};
pub use rmatrix::{
    check_yang_baxter, is_triangular, r_cyclic, r_from_bicharacter, r_from_pairing, r_from_table,
    sigma_from_tensor, verify_urm,
};
