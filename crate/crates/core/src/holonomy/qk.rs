use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::models::{sigma_three_half, HolonomyGroup, HolonomyModel};
use crate::arith::ratio;
use crate::error::{bail, Result};
use crate::lie::Weight;

/// `Sym^d H ⊗ Λ^{a,b}_0 E` for `Sp(1)·Sp(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QkSummand {
    pub d: u32,
    pub a: u32,
    pub b: u32,
}

impl QkSummand {
    pub fn validate(&self, m: u32) -> Result<()> {
        if self.b > self.a || self.a > m {
            bail!(Domain, "invalid labels (a, b) = ({}, {}) for m = {m}: need 0 <= b <= a <= m", self.a, self.b);
        }
        // Sym^{m+1} H ⊗ E occurs in Σ_3/2, so d runs up to m + 1
        if self.d > m + 1 {
            bail!(Domain, "Sym^{} H is out of range for m = {m}", self.d);
        }
        Ok(())
    }

    /// The number of `H` and `E` factors is even: the bundle is defined on
    /// every spin quaternion-Kähler manifold, not just on `HP^m`.
    pub fn is_globally_defined(&self) -> bool {
        (self.d + self.a + self.b).is_multiple_of(2)
    }

    pub fn is_trivial(&self) -> bool {
        self.d == 0 && self.a == 0 && self.b == 0
    }

    /// Highest weight in `C1 × C_m` Dynkin labels.
    pub fn weight(&self, m: u32) -> Result<Weight> {
        self.validate(m)?;
        let mut v = alloc::vec![0i64; m as usize + 1];
        v[0] = self.d as i64;
        for k in [self.a, self.b] {
            if k > 0 {
                v[k as usize] += 1;
            }
        }
        Ok(Weight::new(v))
    }

    /// Inverse of [`QkSummand::weight`]: the `Sp(m)` part must have
    /// Euclidean coordinates `(2,…,2,1,…,1,0,…)`.
    pub fn from_weight(m: u32, w: &Weight) -> Result<Self> {
        let labels = w.labels();
        if labels.len() != m as usize + 1 || labels.iter().any(|&x| x < 0) {
            bail!(Domain, "{w} is not a dominant C1×C{m} weight");
        }
        // x_j = Σ_{i ≥ j} c_i
        let mut coords = alloc::vec![0i64; m as usize];
        let mut acc = 0;
        for j in (0..m as usize).rev() {
            acc += labels[j + 1];
            coords[j] = acc;
        }
        if coords.iter().any(|&x| x > 2) {
            bail!(ModelData, "{w} is not of the form Sym^d H ⊗ Λ^(a,b)_0 E");
        }
        let a = coords.iter().filter(|&&x| x >= 1).count() as u32;
        let b = coords.iter().filter(|&&x| x == 2).count() as u32;
        Ok(QkSummand { d: labels[0] as u32, a, b })
    }
}

impl fmt::Display for QkSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym^{} H ⊗ Λ^({},{})_0 E", self.d, self.a, self.b)
    }
}

/// Coefficient `c` in the lower bound `Δ_V ≥ c · scal`:
/// `c = (d+a−b)(d−a−b+2m+2) / (8m(m+2))`.
pub fn qk_casimir_bound(m: u32, s: &QkSummand) -> Result<BigRational> {
    if m < 1 {
        bail!(Domain, "quaternionic dimension must be >= 1");
    }
    s.validate(m)?;
    let (d, a, b, m) = (s.d as i64, s.a as i64, s.b as i64, m as i64);
    Ok(ratio((d + a - b) * (d - a - b + 2 * m + 2), 8 * m * (m + 2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QkEntry {
    pub summand: QkSummand,
    pub multiplicity: i64,
    pub dimension: u64,
    pub bound: BigRational,
}

#[derive(Clone, Debug)]
pub struct QkKernelReport {
    pub m: u32,
    pub real_dimension: u32,
    /// All summands of `Σ_3/2`.
    pub summands: Vec<QkEntry>,
    /// Summands whose Laplacian bound vanishes (`d = 0`, `a = b`).
    pub zero_bound: Vec<QkEntry>,
    /// The curvature term `(n−8)/(8n)·scal` is non-positive only for
    /// `n = 4m ≤ 8`.
    pub threshold_allows_kernel: bool,
    /// Summands that can carry kernel; empty unless `m = 2`.
    pub kernel_summands: Vec<QkEntry>,
    pub kernel_formula: Option<String>,
    /// Every summand satisfies the even-factor-count condition.
    pub all_globally_defined: bool,
}

pub fn qk_kernel_analysis(m: u32) -> Result<QkKernelReport> {
    if m < 2 {
        bail!(Domain, "quaternion-Kähler analysis needs m >= 2");
    }
    let model = HolonomyModel::new(HolonomyGroup::SpSp(m))?;
    let rs = &model.root_system;
    let s = sigma_three_half(&model)?;
    let mut summands = Vec::new();
    for (w, mult, dim) in s.total.sorted_by_dimension(rs)? {
        let summand = QkSummand::from_weight(m, &w)?;
        let bound = qk_casimir_bound(m, &summand)?;
        if bound < BigRational::zero() {
            bail!(Consistency, "negative Laplacian bound on {summand}");
        }
        summands.push(QkEntry { summand, multiplicity: mult, dimension: dim, bound });
    }
    let zero_bound: Vec<QkEntry> = summands.iter().filter(|e| e.bound.is_zero()).cloned().collect();
    let n = 4 * m;
    let threshold_allows_kernel = ratio(n as i64 - 8, 8 * n as i64) <= BigRational::zero();
    let kernel_summands = if threshold_allows_kernel { zero_bound.clone() } else { Vec::new() };
    let kernel_formula = threshold_allows_kernel.then(|| String::from("b2 + 1"));
    let all_globally_defined = summands.iter().all(|e| e.summand.is_globally_defined());
    // the trivial summand contributes 1, Sym²E the harmonic 2-forms
    if threshold_allows_kernel {
        let expected = [QkSummand { d: 0, a: 0, b: 0 }, QkSummand { d: 0, a: 1, b: 1 }];
        let got: Vec<QkSummand> = kernel_summands.iter().map(|e| e.summand).collect();
        if got != expected || kernel_summands.iter().any(|e| e.multiplicity != 1) {
            bail!(Consistency, "zero-bound summands for m = 2 are not the trivial module and Sym^2 E");
        }
    }
    Ok(QkKernelReport {
        m,
        real_dimension: n,
        summands,
        zero_bound,
        threshold_allows_kernel,
        kernel_summands,
        kernel_formula,
        all_globally_defined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn bound_values() {
        let s = |d, a, b| QkSummand { d, a, b };
        assert_eq!(qk_casimir_bound(2, &s(0, 1, 1)).unwrap(), int(0));
        assert_eq!(qk_casimir_bound(2, &s(0, 0, 0)).unwrap(), int(0));
        assert_eq!(qk_casimir_bound(2, &s(2, 0, 0)).unwrap(), ratio(1, 4));
        assert!(qk_casimir_bound(2, &s(0, 1, 2)).is_err());
        assert!(qk_casimir_bound(2, &s(0, 3, 0)).is_err());
    }

    #[test]
    fn weight_round_trip() {
        for m in 1..=5 {
            for a in 0..=m {
                for b in 0..=a {
                    for d in 0..=m + 1 {
                        let s = QkSummand { d, a, b };
                        assert_eq!(QkSummand::from_weight(m, &s.weight(m).unwrap()).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn m2_kernel() {
        let r = qk_kernel_analysis(2).unwrap();
        assert!(r.threshold_allows_kernel);
        let got: Vec<QkSummand> = r.kernel_summands.iter().map(|e| e.summand).collect();
        assert_eq!(got, alloc::vec![QkSummand { d: 0, a: 0, b: 0 }, QkSummand { d: 0, a: 1, b: 1 }]);
        assert_eq!(r.kernel_formula.as_deref(), Some("b2 + 1"));
        assert!(r.all_globally_defined);
    }

    #[test]
    fn higher_m_has_no_kernel() {
        for m in 3..=6 {
            let r = qk_kernel_analysis(m).unwrap();
            assert!(r.kernel_summands.is_empty(), "m = {m}");
            assert!(r.kernel_formula.is_none());
        }
    }
}
