use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::models::so_root_system;
use crate::arith::ratio;
use crate::error::{bail, Result};

/// Casimir data of the spin-3/2 module on the round sphere `S^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereCheck {
    pub n: u32,
    /// `B_k` or `D_k`.
    pub realization: String,
    /// `⟨λ+2δ, λ⟩` for `λ = (3/2, 1/2, …, 1/2)`; equals `n(n+7)/8`.
    pub casimir: BigRational,
    /// `(8−n)(n−1)/8`, the negative of the curvature term with
    /// `scal = n(n−1)`.
    pub threshold: BigRational,
    /// `casimir − threshold`; equals `(n²−n+4)/4`.
    pub margin: BigRational,
}

pub fn sphere_check(n: u32) -> Result<SphereCheck> {
    if n < 3 {
        bail!(Domain, "sphere check needs n >= 3");
    }
    let rs = so_root_system(n)?;
    let r = (n / 2) as usize;
    let half = ratio(1, 2);
    let mut coords: Vec<BigRational> = alloc::vec![half.clone(); r];
    coords[0] = ratio(3, 2);
    let mut casimirs = alloc::vec![rs.casimir(&rs.weight_from_euclidean(&coords)?)?];
    if n.is_multiple_of(2) && r > 1 {
        // the other chirality, last coordinate −1/2
        coords[r - 1] = -half;
        casimirs.push(rs.casimir(&rs.weight_from_euclidean(&coords)?)?);
    }
    let n_i = n as i64;
    let expected = ratio(n_i * (n_i + 7), 8);
    if let Some(c) = casimirs.iter().find(|c| **c != expected) {
        bail!(Consistency, "Casimir of the spin-3/2 module on S^{n} is {c}, expected {expected}");
    }
    let casimir = expected;
    let threshold = ratio((8 - n_i) * (n_i - 1), 8);
    let margin = &casimir - &threshold;
    if margin != ratio(n_i * n_i - n_i + 4, 4) || margin <= BigRational::zero() {
        bail!(Consistency, "sphere margin {margin} disagrees with (n^2 - n + 4)/4");
    }
    Ok(SphereCheck { n, realization: rs.describe(), casimir, threshold, margin })
}
