use alloc::vec::Vec;

use num_rational::BigRational;

use super::genus::{evaluate_genus, genus_class, genus_number, GenusKind, GenusSpec};
use super::profile::{chern_to_power_sums, ChernProfile};
use crate::arith::{int, inv_factorial, TruncatedPoly};
use crate::error::{bail, Result};

/// `χ = c_n[M]`.
pub fn euler_characteristic(c: &ChernProfile) -> BigRational {
    c.integrate(&c.chern_class(c.complex_dimension())).expect("class built in the profile ring")
}

/// Signature via the L-genus. Zero when the real dimension is not divisible
/// by four.
pub fn signature(c: &ChernProfile) -> BigRational {
    genus_number(GenusKind::L, c).expect("series degree matches the profile")
}

/// `ch(TM ⊗ C) = Σ_i (e^{x_i} + e^{-x_i}) = 2n + 2 Σ_{k even} s_k / k!`.
pub fn ch_complexified_tangent(c: &ChernProfile) -> TruncatedPoly {
    let n = c.complex_dimension();
    let s = chern_to_power_sums(c);
    let mut out = TruncatedPoly::constant(c.ring(), int(2 * n as i64));
    for (k, sk) in (1..=n).zip(&s) {
        if k % 2 == 0 {
            out = &out + &sk.scale(&(inv_factorial(k) * int(2)));
        }
    }
    out
}

/// The spin-3/2 index `⟨Â(TM)(ch(TM⊗C) + 1), [M]⟩` and its two pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsIndex {
    /// Index of the Rarita-Schwinger operator.
    pub ind_q: BigRational,
    /// Index of the Dirac operator twisted by `TM ⊗ C`: `⟨Â·ch(TM⊗C), [M]⟩`.
    pub ind_d_tm: BigRational,
    /// Index of the Dirac operator: `Â[M]`.
    pub ind_d: BigRational,
}

pub fn rs_index(c: &ChernProfile) -> RsIndex {
    let spec = GenusSpec::new(GenusKind::AHat, c.complex_dimension());
    let ahat = genus_class(&spec, c).expect("series degree matches the profile");
    let ch = ch_complexified_tangent(c);
    let ind_d = c.integrate(&ahat).expect("same ring");
    let ind_d_tm = c.integrate(&(&ahat * &ch)).expect("same ring");
    RsIndex { ind_q: &ind_d_tm + &ind_d, ind_d_tm, ind_d }
}

/// Both evaluations of the spin-3/2 index of a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    /// `ind Q^M · ind D^N − ind D^M · ind D^N + ind D^M · ind Q^N`.
    pub combination: BigRational,
    /// Direct evaluation on the product profile.
    pub direct: BigRational,
}

/// Spin-3/2 index of `M × N`, computed from the factor indices and directly
/// on the product profile. Disagreement is reported as a consistency failure.
pub fn product_rs_index(m: &ChernProfile, n: &ChernProfile) -> Result<ProductIndex> {
    let a = rs_index(m);
    let b = rs_index(n);
    let combination = &a.ind_q * &b.ind_d - &a.ind_d * &b.ind_d + &a.ind_d * &b.ind_q;
    let direct = rs_index(&m.product(n)?).ind_q;
    if combination != direct {
        bail!(Consistency, "product index: factor combination {combination} but direct evaluation {direct}");
    }
    Ok(ProductIndex { combination, direct })
}

/// `χ_p = Σ_q (-1)^q h^{p,q}` for `p = 0..=n`, read off from χ_y.
pub fn hodge_from_chi_y(c: &ChernProfile) -> Vec<BigRational> {
    let spec = GenusSpec::new(GenusKind::ChiY, c.complex_dimension());
    match evaluate_genus(&spec, c).expect("series degree matches the profile") {
        super::GenusValue::Polynomial(p) => p,
        super::GenusValue::Number(_) => unreachable!("χ_y is polynomial valued"),
    }
}

/// Evaluate a coefficient list `Σ a_j y^j` at `y`.
pub fn eval_polynomial(coeffs: &[BigRational], y: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(int(0), |acc, a| acc * y + a)
}
