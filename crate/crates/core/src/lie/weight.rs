use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::RootSystem;
use crate::arith::{int, to_i64};
use crate::error::{bail, Result};

/// An integral weight in Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight(v.to_vec())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dominant weights of the irreducible module `V(λ)` with their
/// multiplicities, by Freudenthal's recursion
///
/// `(|λ+δ|² − |μ+δ|²) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) ⟨μ+kα, α⟩`.
///
/// Terms `m(μ+kα)` for non-dominant `μ+kα` are read off the dominant
/// representative of its Weyl orbit.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    rs.require_dominant(lambda)?;
    // dominant weights below λ, by depth = height of λ − μ
    let mut depth: BTreeMap<Weight, i64> = BTreeMap::new();
    depth.insert(lambda.clone(), 0);
    let mut frontier = alloc::vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        let d = depth[&mu];
        for root in rs.positive_roots() {
            let nu = &mu - &Weight::new(root.labels.clone());
            if rs.is_dominant(&nu) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + root.height());
                frontier.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();
    let delta = rs.delta();
    let top = rs.inner(&(lambda + &delta), &(lambda + &delta));
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    for (_, mu) in order.into_iter().skip(1) {
        let mut acc = BigRational::zero();
        for root in rs.positive_roots() {
            let alpha = Weight::new(root.labels.clone());
            let mut shifted = &mu + &alpha;
            loop {
                let (dom, _) = rs.to_dominant(&shifted);
                let Some(&m) = mult.get(&dom) else { break };
                acc += int(m as i64) * rs.inner_root(&shifted, root);
                shifted = &shifted + &alpha;
            }
        }
        let den = &top - rs.inner(&(&mu + &delta), &(&mu + &delta));
        let value = int(2) * acc / den;
        let Some(m) = to_i64(&value).and_then(|v| u64::try_from(v).ok()) else {
            bail!(Consistency, "Freudenthal multiplicity of {mu} in V{lambda} came out as {value}");
        };
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult)
}

/// Weyl orbit of a weight.
pub fn weyl_orbit(rs: &RootSystem, mu: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(mu.clone());
    let mut stack = alloc::vec![mu.clone()];
    while let Some(w) = stack.pop() {
        for i in 0..rs.rank() {
            if rs.has_root(i) && w.labels()[i] != 0 {
                let r = rs.reflect(&w, i);
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
    }
    seen
}

/// Full weight system of `V(λ)` with multiplicities. The multiplicities sum
/// to `weyl_dim(λ)`; a mismatch is reported as a consistency failure.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let dominant = dominant_multiplicities(rs, lambda)?;
    let mut all = BTreeMap::new();
    for (mu, m) in dominant {
        for w in weyl_orbit(rs, &mu) {
            all.insert(w, m);
        }
    }
    let total: u64 = all.values().sum();
    let dim = rs.weyl_dim(lambda)?;
    if total != dim {
        bail!(Consistency, "weight multiplicities of V{lambda} sum to {total}, Weyl dimension is {dim}");
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn sl2_adjoint() {
        let a1 = RootSystem::simple(CartanType::A(1)).unwrap();
        let m = weight_multiplicities(&a1, &Weight::new(alloc::vec![2])).unwrap();
        let expect: BTreeMap<Weight, u64> =
            [(-2, 1), (0, 1), (2, 1)].into_iter().map(|(w, m)| (Weight::new(alloc::vec![w]), m)).collect();
        assert_eq!(m, expect);
    }

    #[test]
    fn trivial_module() {
        let b3 = RootSystem::simple(CartanType::B(3)).unwrap();
        let m = weight_multiplicities(&b3, &b3.zero_weight()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&b3.zero_weight()], 1);
    }

    #[test]
    fn g2_seven() {
        let g2 = RootSystem::simple(CartanType::G2).unwrap();
        let m = weight_multiplicities(&g2, &Weight::new(alloc::vec![1, 0])).unwrap();
        assert_eq!(m.len(), 7);
        assert_eq!(m[&g2.zero_weight()], 1);
        assert_eq!(m.values().filter(|&&x| x == 1).count(), 7);
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        for (s, hw, rank) in
            [("A3", alloc::vec![1, 0, 1], 3), ("B3", alloc::vec![0, 1, 0], 3), ("G2", alloc::vec![0, 1], 2)]
        {
            let rs = RootSystem::parse(s).unwrap();
            let m = weight_multiplicities(&rs, &Weight::new(hw)).unwrap();
            assert_eq!(m[&rs.zero_weight()], rank, "{s}");
        }
    }

    #[test]
    fn multiplicities_are_weyl_invariant() {
        let c3 = RootSystem::simple(CartanType::C(3)).unwrap();
        let m = weight_multiplicities(&c3, &Weight::new(alloc::vec![1, 1, 0])).unwrap();
        for (w, k) in &m {
            for i in 0..3 {
                assert_eq!(m.get(&c3.reflect(w, i)), Some(k));
            }
        }
    }
}
