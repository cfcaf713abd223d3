use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{weight_multiplicities, RootSystem, Weight};
use crate::error::{bail, Result};

/// Formal sum of irreducible modules, keyed by highest weight. Negative
/// multiplicities are allowed and make the sum virtual.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepSum {
    terms: BTreeMap<Weight, i64>,
}

impl RepSum {
    pub fn new() -> Self {
        RepSum::default()
    }

    pub fn irreducible(lambda: Weight) -> Self {
        let mut s = RepSum::new();
        s.add_term(lambda, 1);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut s = RepSum::new();
        for (w, m) in terms {
            s.add_term(w, m);
        }
        s
    }

    pub fn add_term(&mut self, lambda: Weight, mult: i64) {
        let e = self.terms.entry(lambda).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_virtual(&self) -> bool {
        self.terms.values().any(|&m| m < 0)
    }

    pub fn sum(&self, other: &RepSum) -> RepSum {
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.clone(), m);
        }
        out
    }

    /// `self ⊖ other`. Unless `allow_virtual`, a negative multiplicity in the
    /// result is an error.
    pub fn subtract(&self, other: &RepSum, allow_virtual: bool) -> Result<RepSum> {
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.clone(), -m);
        }
        if !allow_virtual {
            if let Some((w, m)) = out.terms().find(|(_, m)| *m < 0) {
                bail!(ModelData, "subtraction leaves V{w} with multiplicity {m}");
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> RepSum {
        RepSum::from_terms(self.terms().map(|(w, m)| (w.clone(), m * k)))
    }

    /// `Σ mult · weyl_dim`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<i64> {
        let mut total = 0i64;
        for (w, m) in self.terms() {
            total += m * rs.weyl_dim(w)? as i64;
        }
        Ok(total)
    }

    /// Multiplicity of the trivial module.
    pub fn trivial_multiplicity(&self) -> i64 {
        self.terms.iter().find(|(w, _)| w.is_zero()).map_or(0, |(_, &m)| m)
    }

    /// Formal character: every weight with its total multiplicity.
    pub fn character(&self, rs: &RootSystem) -> Result<BTreeMap<Weight, i64>> {
        let mut ch: BTreeMap<Weight, i64> = BTreeMap::new();
        for (lambda, m) in self.terms() {
            for (w, k) in weight_multiplicities(rs, lambda)? {
                *ch.entry(w).or_insert(0) += m * k as i64;
            }
        }
        ch.retain(|_, v| *v != 0);
        Ok(ch)
    }

    /// Summands sorted by dimension, then highest weight.
    pub fn sorted_by_dimension(&self, rs: &RootSystem) -> Result<Vec<(Weight, i64, u64)>> {
        let mut v = Vec::new();
        for (w, m) in self.terms() {
            v.push((w.clone(), m, rs.weyl_dim(w)?));
        }
        v.sort_by(|a, b| a.2.cmp(&b.2).then_with(|| a.0.cmp(&b.0)));
        Ok(v)
    }
}

/// Tensor product decomposition by Klimyk's formula: for each weight `ν` of
/// the smaller factor, reflect `λ + ν + δ` into the dominant chamber and
/// record `±V(w(λ+ν+δ) − δ)`, dropping anything fixed by a reflection.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<RepSum> {
    rs.require_dominant(lambda)?;
    rs.require_dominant(mu)?;
    let (dl, dm) = (rs.weyl_dim(lambda)?, rs.weyl_dim(mu)?);
    // iterate over the weights of the smaller factor
    let (big, small) = if (dm, mu) <= (dl, lambda) { (lambda, mu) } else { (mu, lambda) };
    let delta = rs.delta();
    let base = big + &delta;
    let mut out = RepSum::new();
    for (nu, m) in weight_multiplicities(rs, small)? {
        let (dom, odd) = rs.to_dominant(&(&base + &nu));
        if (0..rs.rank()).any(|i| rs.has_root(i) && dom.labels()[i] == 0) {
            continue;
        }
        let k = if odd { -(m as i64) } else { m as i64 };
        out.add_term(&dom - &delta, k);
    }
    if out.is_virtual() {
        bail!(Consistency, "Klimyk decomposition of V{lambda} ⊗ V{mu} left negative multiplicities");
    }
    let dim = out.dimension(rs)?;
    if dim as u64 != dl * dm {
        bail!(Consistency, "V{lambda} ⊗ V{mu} decomposed into dimension {dim}, expected {}", dl * dm);
    }
    Ok(out)
}

/// `(Σ a_λ V_λ) ⊗ (Σ b_μ V_μ)` by bilinearity.
pub fn tensor_sums(rs: &RootSystem, a: &RepSum, b: &RepSum) -> Result<RepSum> {
    let mut out = RepSum::new();
    for (l, x) in a.terms() {
        for (m, y) in b.terms() {
            out = out.sum(&tensor_decompose(rs, l, m)?.scaled(x * y));
        }
    }
    Ok(out)
}
