//! Holonomy groups as explicit representation data: spinor and tangent
//! modules, the decomposition of `Σ_3/2 = Σ_1/2 ⊗ T ⊖ Σ_1/2`, parallel
//! field counts, and the kernel and index formulas built on them.

mod catalog;
mod formulas;
mod models;
mod qk;
mod sphere;

pub use catalog::{
    product_parallel_rs, symmetric_space_catalog, ParallelCounts, ProductParallel, SymmetricSpaceEntry,
    ODD_DIMENSION_CAVEAT,
};
pub use formulas::{
    family_index, g2_derived_formulas, hyperkahler_closed_forms, hyperkahler_derived_formulas, kernel_dimension,
    spin7_derived_formulas, spin7_index_identity, DerivedFormulas, LinearForm, Spin7IndexIdentity, TopologicalInput,
};
pub use models::{
    describe_by_dimension, dimension_profile, parallel_rs_dimension, sigma_three_half, so_root_system, HolonomyGroup,
    HolonomyModel, SigmaThreeHalf, Spinors,
};
pub use qk::{qk_casimir_bound, qk_kernel_analysis, QkEntry, QkKernelReport, QkSummand};
pub use sphere::{sphere_check, SphereCheck};
