use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::{RepSum, RootSystem};
use crate::arith::int;
use crate::error::{bail, Result};

/// Highest moment used by the character oracle.
pub const MAX_MOMENT: u32 = 4;

/// Power moments `M_k = Σ_ν mult(ν) · ⟨ν, p⟩^k`, `k = 0..=MAX_MOMENT`, of the
/// formal character of `s`, with `⟨ν, p⟩ = Σ_i ν_i p_i` in Dynkin labels.
///
/// These are the Taylor coefficients (times `k!`) of the character at the
/// torus element `exp(t·p)`, computed from the weight system alone.
pub fn character_moments(rs: &RootSystem, s: &RepSum, point: &[BigRational]) -> Result<Vec<BigRational>> {
    if point.len() != rs.rank() {
        bail!(Domain, "evaluation point has {} coordinates, rank is {}", point.len(), rs.rank());
    }
    let mut moments = alloc::vec![BigRational::zero(); MAX_MOMENT as usize + 1];
    for (nu, m) in s.character(rs)? {
        let x: BigRational = nu.labels().iter().zip(point).map(|(&l, p)| int(l) * p).sum();
        let mut pow = int(m);
        for slot in moments.iter_mut() {
            *slot += &pow;
            pow *= &x;
        }
    }
    Ok(moments)
}

/// `M_k` of a tensor product from the factors: `Σ_j C(k, j) A_j B_{k−j}`.
pub fn product_moments(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut binom = 1i64;
            let mut acc = BigRational::zero();
            for j in 0..=k {
                acc += int(binom) * &a[j] * &b[k - j];
                binom = binom * (k - j) as i64 / (j + 1) as i64;
            }
            acc
        })
        .collect()
}

/// Single-number entry point: the moment of order `k`.
pub fn character_oracle(rs: &RootSystem, s: &RepSum, point: &[BigRational], k: u32) -> Result<BigRational> {
    if k > MAX_MOMENT {
        bail!(Range, "moments are computed up to order {MAX_MOMENT}");
    }
    Ok(character_moments(rs, s, point)?.swap_remove(k as usize))
}

/// Check a decomposition `V(λ) ⊗ V(μ) = s` against the product of the
/// factor moments.
pub fn check_tensor_moments(
    rs: &RootSystem,
    lambda: &super::Weight,
    mu: &super::Weight,
    s: &RepSum,
    point: &[BigRational],
) -> Result<()> {
    let a = character_moments(rs, &RepSum::irreducible(lambda.clone()), point)?;
    let b = character_moments(rs, &RepSum::irreducible(mu.clone()), point)?;
    let lhs = product_moments(&a, &b);
    let rhs = character_moments(rs, s, point)?;
    if lhs != rhs {
        bail!(Consistency, "character moments of V{lambda} ⊗ V{mu} disagree with the decomposition");
    }
    Ok(())
}

/// A generic rational test point: `p_i = (2i + 3) / (i + 5)`.
pub fn generic_point(rank: usize) -> Vec<BigRational> {
    (0..rank).map(|i| crate::arith::ratio(2 * i as i64 + 3, i as i64 + 5)).collect()
}
