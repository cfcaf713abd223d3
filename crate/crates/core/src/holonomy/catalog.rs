use alloc::string::String;
use alloc::vec::Vec;

use super::formulas::{kernel_dimension, TopologicalInput};
use super::models::{parallel_rs_dimension, HolonomyGroup, HolonomyModel};
use crate::error::{bail, Result};

/// A compact symmetric space on which every Rarita-Schwinger field is
/// parallel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricSpaceEntry {
    pub name: &'static str,
    pub real_dimension: u32,
    pub kernel_dimension: i64,
    pub all_parallel: bool,
    /// How the kernel dimension was obtained.
    pub source: String,
}

/// The five spaces: three positive quaternion-Kähler 8-manifolds (kernel
/// `b2 + 1`), the group manifold SU(3) (two trivial summands in `Σ_3/2`)
/// and the quadric `Q4` (kernel documented, index `−σ = −2`).
pub fn symmetric_space_catalog() -> Result<Vec<SymmetricSpaceEntry>> {
    let qk = |b2: i64| kernel_dimension(&TopologicalInput::QuaternionKahler { b2 });
    let su3 = parallel_rs_dimension(&HolonomyModel::new(HolonomyGroup::Su3Symmetric)?)?;
    let entry = |name, kernel_dimension, source: &str| SymmetricSpaceEntry {
        name,
        real_dimension: 8,
        kernel_dimension,
        all_parallel: true,
        source: source.into(),
    };
    Ok(alloc::vec![
        entry("Gr2(C4)", qk(1)?, "quaternion-Kähler kernel b2 + 1 with b2 = 1"),
        entry("HP2", qk(0)?, "quaternion-Kähler kernel b2 + 1 with b2 = 0"),
        entry("G2/SO(4)", qk(0)?, "quaternion-Kähler kernel b2 + 1 with b2 = 0"),
        entry("SU(3)", su3, "trivial summands of Σ_3/2 for the adjoint isotropy representation"),
        entry("Q4", 2, "Casimir analysis of the quadric Q4 (quoted value); index -2 from the signature"),
    ])
}

/// Parallel spinors and parallel spin-3/2 fields on one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelCounts {
    pub spinors: i64,
    pub rs: i64,
    /// Real dimension, when known.
    pub dimension: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductParallel {
    pub value: i64,
    /// Set when a factor is odd-dimensional: the splitting is only
    /// established for even-dimensional factors.
    pub caveat: Option<&'static str>,
}

pub const ODD_DIMENSION_CAVEAT: &str = "formula stated for even-dimensional factors only";

/// `S_M ⊗ S_N ⊕ S^{3/2}_M ⊗ S_N ⊕ S_M ⊗ S^{3/2}_N`, counted by parallel
/// sections.
pub fn product_parallel_rs(m: &ParallelCounts, n: &ParallelCounts) -> Result<ProductParallel> {
    if [m.spinors, m.rs, n.spinors, n.rs].iter().any(|&x| x < 0) {
        bail!(Domain, "parallel counts must be non-negative");
    }
    let value = m.spinors * n.spinors + m.rs * n.spinors + m.spinors * n.rs;
    let odd = [m.dimension, n.dimension].iter().flatten().any(|d| d % 2 == 1);
    Ok(ProductParallel { value, caveat: odd.then_some(ODD_DIMENSION_CAVEAT) })
}
