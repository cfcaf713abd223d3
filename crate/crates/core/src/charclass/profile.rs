use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, PolyRing, TruncatedPoly, MAX_VARS};
use crate::error::{bail, Result};

/// Total Chern class of a tangent bundle whose cohomology is generated by one
/// hyperplane-type class `h` per factor, together with the value of the top
/// monomial on the fundamental class.
///
/// A single-factor profile lives in `Q[h] / (h^(n+1))`; products of profiles
/// live in `Q[h1, h2, …] / (h_i^(n_i+1))`. One variable slot is always left
/// free so genera with an extra formal parameter (χ_y) fit in the same ring
/// family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernProfile {
    dims: Vec<u32>,
    ring: Arc<PolyRing>,
    total: TruncatedPoly,
    pairing: BigRational,
}

impl ChernProfile {
    /// Profile with `c_k = chern[k-1] · h^k` and `h^n[M] = pairing`.
    pub fn new(n: u32, chern: Vec<BigRational>, pairing: BigRational) -> Result<Self> {
        if n == 0 {
            bail!(Domain, "complex dimension must be at least 1");
        }
        if chern.len() != n as usize {
            bail!(Structural, "expected {n} Chern classes, got {}", chern.len());
        }
        if pairing.is_zero() {
            bail!(Domain, "pairing of h^{n} with the fundamental class must be nonzero");
        }
        let ring = PolyRing::univariate("h", n);
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        coeffs.push(BigRational::one());
        coeffs.extend(chern);
        let total = TruncatedPoly::from_coeffs(&ring, &coeffs);
        Ok(ChernProfile { dims: alloc::vec![n], ring, total, pairing })
    }

    /// Integer convenience constructor.
    pub fn from_ints(n: u32, chern: &[i64], pairing: i64) -> Result<Self> {
        Self::new(n, chern.iter().map(|&c| int(c)).collect(), int(pairing))
    }

    /// Profile with every Chern class zero and pairing one.
    pub fn flat(n: u32) -> Self {
        Self::new(n, alloc::vec![BigRational::zero(); n as usize], BigRational::one()).expect("flat profile is valid")
    }

    /// Profile of `M × N`: total Chern classes multiply, pairings multiply.
    pub fn product(&self, other: &ChernProfile) -> Result<Self> {
        let dims: Vec<u32> = self.dims.iter().chain(&other.dims).copied().collect();
        if dims.len() >= MAX_VARS {
            bail!(Structural, "product would need {} generators; at most {} supported", dims.len(), MAX_VARS - 1);
        }
        let names: Vec<String> = (1..=dims.len()).map(|i| format!("h{i}")).collect();
        let vars: Vec<(&str, u32)> = names.iter().map(|s| s.as_str()).zip(dims.iter().copied()).collect();
        let ring = PolyRing::new(&vars)?;
        let k = self.dims.len();
        let left: Vec<usize> = (0..k).collect();
        let right: Vec<usize> = (k..dims.len()).collect();
        let total = self.total.embed(&ring, &left)?.checked_mul(&other.total.embed(&ring, &right)?)?;
        Ok(ChernProfile { dims, ring, total, pairing: &self.pairing * &other.pairing })
    }

    pub fn complex_dimension(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn real_dimension(&self) -> u32 {
        2 * self.complex_dimension()
    }

    /// Complex dimension of each generator block.
    pub fn factor_dimensions(&self) -> &[u32] {
        &self.dims
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn pairing(&self) -> &BigRational {
        &self.pairing
    }

    /// `1 + c_1 + … + c_n`.
    pub fn total_chern(&self) -> &TruncatedPoly {
        &self.total
    }

    /// `c_k` as a homogeneous class (`c_0 = 1`).
    pub fn chern_class(&self, k: u32) -> TruncatedPoly {
        self.total.homogeneous_part(k)
    }

    /// Coefficients of `h^k` in `c_k` for single-generator profiles.
    pub fn chern_coefficients(&self) -> Option<Vec<BigRational>> {
        (self.dims.len() == 1).then(|| (1..=self.dims[0]).map(|k| self.total.coeff(&[k])).collect())
    }

    /// Exponent of the top monomial `h1^n1 h2^n2 …`.
    pub fn top_exponent(&self) -> Vec<u32> {
        self.dims.clone()
    }

    /// Evaluate a class on the fundamental class.
    pub fn integrate(&self, class: &TruncatedPoly) -> Result<BigRational> {
        if class.ring() != &self.ring {
            bail!(Structural, "class does not live in the cohomology ring of this profile");
        }
        Ok(class.coeff(&self.dims) * &self.pairing)
    }
}

/// Newton's identities: power sums `s_1..s_n` of the Chern roots.
pub fn chern_to_power_sums(c: &ChernProfile) -> Vec<TruncatedPoly> {
    let n = c.complex_dimension();
    let classes: Vec<TruncatedPoly> = (0..=n).map(|k| c.chern_class(k)).collect();
    elementary_to_power_sums(&classes)
}

/// Inverse Newton: recover `c_1..c_n` from `s_1..s_n`.
pub fn power_sums_to_chern(s: &[TruncatedPoly]) -> Vec<TruncatedPoly> {
    power_sums_to_elementary(s)
}

/// Power sums from elementary symmetric classes `e[0] = 1, e[1], …`.
/// Returns `s_1..s_{len-1}`.
pub(crate) fn elementary_to_power_sums(e: &[TruncatedPoly]) -> Vec<TruncatedPoly> {
    let mut s: Vec<TruncatedPoly> = Vec::with_capacity(e.len().saturating_sub(1));
    for k in 1..e.len() {
        let sign_k = if k % 2 == 1 { 1 } else { -1 };
        let mut acc = e[k].scale(&int(sign_k * k as i64));
        for i in 1..k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc = &acc + &(&e[i] * &s[k - i - 1]).scale(&int(sign));
        }
        s.push(acc);
    }
    s
}

/// Elementary symmetric classes `e_1..e_k` from power sums `s_1..s_k`.
pub(crate) fn power_sums_to_elementary(s: &[TruncatedPoly]) -> Vec<TruncatedPoly> {
    let Some(first) = s.first() else { return Vec::new() };
    let ring = first.ring().clone();
    let mut e: Vec<TruncatedPoly> = alloc::vec![TruncatedPoly::one(&ring)];
    for k in 1..=s.len() {
        let mut acc = TruncatedPoly::zero(&ring);
        for i in 1..=k {
            let term = &e[k - i] * &s[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&BigRational::new(1.into(), (k as i64).into())));
    }
    e.remove(0);
    e
}

/// A partition of `m`, written as the multiset of Pontryagin indices.
pub type Partition = Vec<u32>;

/// Partitions of `m` ordered by number of parts (descending), then
/// lexicographically: `m = 3` gives `[1,1,1], [1,2], [3]`.
pub fn partitions(m: u32) -> Vec<Partition> {
    fn rec(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, 1, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Human label of a Pontryagin monomial, e.g. `p1^2`, `p1*p2`.
pub fn monomial_label(part: &Partition) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < part.len() {
        let j = part[i..].iter().take_while(|&&x| x == part[i]).count();
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&format!("p{}", part[i]));
        if j > 1 {
            out.push_str(&format!("^{j}"));
        }
        i += j;
    }
    out
}

/// Pontryagin numbers `p_I[M]` on the basis of partitions of `real_dim / 4`.
/// Empty when the real dimension is not divisible by four.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginVector {
    pub real_dimension: u32,
    pub basis: Vec<Partition>,
    pub numbers: Vec<BigRational>,
}

impl PontryaginVector {
    pub fn get(&self, part: &[u32]) -> Option<&BigRational> {
        self.basis.iter().position(|b| b == part).map(|i| &self.numbers[i])
    }
}

/// Pontryagin classes `p_1..p_{⌊n/2⌋}` of the underlying real tangent bundle:
/// elementary symmetric functions in the squared Chern roots.
pub fn pontryagin_classes(c: &ChernProfile) -> Vec<TruncatedPoly> {
    let s = chern_to_power_sums(c);
    let squared: Vec<TruncatedPoly> = s.iter().skip(1).step_by(2).cloned().collect();
    power_sums_to_elementary(&squared)
}

pub fn chern_to_pontryagin(c: &ChernProfile) -> PontryaginVector {
    let real = c.real_dimension();
    if !real.is_multiple_of(4) {
        return PontryaginVector { real_dimension: real, basis: Vec::new(), numbers: Vec::new() };
    }
    let p = pontryagin_classes(c);
    let basis = partitions(real / 4);
    let numbers = basis
        .iter()
        .map(|part| {
            let class = part.iter().fold(TruncatedPoly::one(c.ring()), |acc, &i| &acc * &p[i as usize - 1]);
            c.integrate(&class).expect("class built in the profile ring")
        })
        .collect();
    PontryaginVector { real_dimension: real, basis, numbers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    fn k3() -> ChernProfile {
        ChernProfile::from_ints(2, &[0, 6], 4).unwrap()
    }

    #[test]
    fn k3_power_sums() {
        let s = chern_to_power_sums(&k3());
        assert!(s[0].is_zero());
        assert_eq!(s[1].coeff(&[2]), int(-12));
    }

    #[test]
    fn line_bundle_like_power_sum() {
        let c = ChernProfile::new(1, alloc::vec![ratio(7, 3)], int(1)).unwrap();
        assert_eq!(chern_to_power_sums(&c)[0].coeff(&[1]), ratio(7, 3));
        let flat = ChernProfile::flat(3);
        assert!(chern_to_power_sums(&flat).iter().all(|s| s.is_zero()));
    }

    #[test]
    fn k3_pontryagin() {
        let p = chern_to_pontryagin(&k3());
        assert_eq!(p.basis, alloc::vec![alloc::vec![1]]);
        assert_eq!(p.numbers, alloc::vec![int(-48)]);
        assert_eq!(pontryagin_classes(&k3())[0].coeff(&[2]), int(-12));
        let flat = chern_to_pontryagin(&ChernProfile::flat(2));
        assert!(flat.numbers.iter().all(|x| x.is_zero()));
        // real dimension 6: no Pontryagin numbers
        assert!(chern_to_pontryagin(&ChernProfile::flat(3)).basis.is_empty());
    }

    #[test]
    fn profile_validation() {
        assert!(matches!(ChernProfile::from_ints(2, &[0], 4), Err(crate::Error::Structural(_))));
        assert!(matches!(ChernProfile::from_ints(2, &[0, 6], 0), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn partition_order() {
        assert_eq!(partitions(2), alloc::vec![alloc::vec![1, 1], alloc::vec![2]]);
        assert_eq!(partitions(3), alloc::vec![alloc::vec![1, 1, 1], alloc::vec![1, 2], alloc::vec![3]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(monomial_label(&alloc::vec![1, 1, 2]), "p1^2*p2");
    }

    #[test]
    fn product_profile_multiplies_total_classes() {
        let pr = k3().product(&k3()).unwrap();
        assert_eq!(pr.complex_dimension(), 4);
        assert_eq!(pr.pairing(), &int(16));
        assert_eq!(pr.chern_class(2).coeff(&[2, 0]), int(6));
        assert_eq!(pr.chern_class(4).coeff(&[2, 2]), int(36));
        assert!(pr.chern_coefficients().is_none());
    }

    proptest! {
        #[test]
        fn newton_round_trip(n in 1u32..6, raw in proptest::collection::vec(-9i64..10, 6)) {
            let c = ChernProfile::from_ints(n, &raw[..n as usize], 3).unwrap();
            let back = power_sums_to_chern(&chern_to_power_sums(&c));
            for k in 1..=n {
                prop_assert_eq!(&back[k as usize - 1], &c.chern_class(k));
            }
        }
    }
}
