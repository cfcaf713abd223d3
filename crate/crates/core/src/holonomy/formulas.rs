use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::models::{sigma_three_half, HolonomyGroup, HolonomyModel};
use crate::arith::{int, ratio};
use crate::error::{bail, Error, Result};
use crate::lie::{RepSum, RootSystem};

/// Topological data feeding the kernel and index formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologicalInput {
    /// Calabi-Yau of complex dimension `n`; `h1p[p-1] = h^{1,p}` for
    /// `p = 1..n-1`.
    CalabiYau {
        n: u32,
        h1p: Vec<i64>,
    },
    /// Hyperkähler of quaternionic dimension `n`; `hk1[k-1] = h^{k,1}` for
    /// `k = 1..n`.
    HyperKahler {
        n: u32,
        hk1: Vec<i64>,
    },
    Spin7 {
        b2: i64,
        b3: i64,
        b4_minus: i64,
    },
    G2 {
        b2: i64,
        b3: i64,
    },
    /// Positive quaternion-Kähler in quaternionic dimension 2.
    QuaternionKahler {
        b2: i64,
    },
}

impl TopologicalInput {
    pub fn family(&self) -> &'static str {
        match self {
            TopologicalInput::CalabiYau { .. } => "CY",
            TopologicalInput::HyperKahler { .. } => "HK",
            TopologicalInput::Spin7 { .. } => "SPIN7",
            TopologicalInput::G2 { .. } => "G2",
            TopologicalInput::QuaternionKahler { .. } => "QK",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let entries: Vec<i64> = match self {
            TopologicalInput::CalabiYau { n, h1p } => {
                if *n < 2 {
                    bail!(Domain, "Calabi-Yau kernel formula needs complex dimension >= 2");
                }
                if h1p.len() != *n as usize - 1 {
                    bail!(Domain, "expected {} Hodge numbers h^(1,p), got {}", n - 1, h1p.len());
                }
                h1p.clone()
            }
            TopologicalInput::HyperKahler { n, hk1 } => {
                if *n < 1 {
                    bail!(Domain, "hyperkähler quaternionic dimension must be >= 1");
                }
                if hk1.len() != *n as usize {
                    bail!(Domain, "expected {n} Hodge numbers h^(k,1), got {}", hk1.len());
                }
                hk1.clone()
            }
            TopologicalInput::Spin7 { b2, b3, b4_minus } => alloc::vec![*b2, *b3, *b4_minus],
            TopologicalInput::G2 { b2, b3 } => alloc::vec![*b2, *b3],
            TopologicalInput::QuaternionKahler { b2 } => alloc::vec![*b2],
        };
        if let Some(x) = entries.iter().find(|&&x| x < 0) {
            bail!(Domain, "topological inputs must be non-negative, got {x}");
        }
        Ok(())
    }
}

/// `dim ker Q` from topological data.
pub fn kernel_dimension(t: &TopologicalInput) -> Result<i64> {
    t.validate()?;
    Ok(match t {
        TopologicalInput::CalabiYau { h1p, .. } => -2 + 2 * h1p.iter().sum::<i64>(),
        TopologicalInput::HyperKahler { n, hk1 } => {
            let n = *n as usize;
            -(n as i64 + 1) + 2 * hk1[n - 1] + 4 * hk1[..n - 1].iter().sum::<i64>()
        }
        TopologicalInput::Spin7 { b2, b3, b4_minus } => b2 + b3 + b4_minus,
        TopologicalInput::G2 { b2, b3 } => b2 + b3 - 1,
        TopologicalInput::QuaternionKahler { b2 } => b2 + 1,
    })
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ind Q` from topological data. Undefined for the odd-dimensional G2
/// family and for the quaternion-Kähler kernel count.
pub fn family_index(t: &TopologicalInput) -> Result<i64> {
    t.validate()?;
    Ok(match t {
        TopologicalInput::CalabiYau { n, h1p } => {
            if n % 2 == 1 {
                0
            } else {
                2 + 2 * h1p.iter().enumerate().map(|(i, h)| sign(i + 1) * h).sum::<i64>()
            }
        }
        TopologicalInput::HyperKahler { n, hk1 } => {
            let n = *n as usize;
            let inner: i64 = hk1[..n - 1].iter().enumerate().map(|(i, h)| sign(i + 1) * h).sum();
            (n as i64 + 1) + sign(n) * 2 * hk1[n - 1] + 4 * inner
        }
        TopologicalInput::Spin7 { b2, b3, b4_minus } => b3 - b4_minus - b2,
        TopologicalInput::G2 { .. } => {
            bail!(NotApplicable, "G2 manifolds are odd-dimensional; the index vanishes identically")
        }
        TopologicalInput::QuaternionKahler { .. } => {
            bail!(NotApplicable, "no index formula in terms of b2 for quaternion-Kähler input")
        }
    })
}

/// An affine form `c + Σ a_s · s` in named integer symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: BigRational,
    pub terms: BTreeMap<String, BigRational>,
}

impl LinearForm {
    pub fn constant(c: BigRational) -> Self {
        LinearForm { constant: c, terms: BTreeMap::new() }
    }

    pub fn symbol(name: &str) -> Self {
        let mut f = LinearForm::default();
        f.terms.insert(name.to_string(), BigRational::one());
        f
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = LinearForm::constant(&self.constant * k);
        for (s, a) in &self.terms {
            out.push(s, a * k);
        }
        out
    }

    fn push(&mut self, name: &str, a: BigRational) {
        let e = self.terms.entry(name.to_string()).or_insert_with(BigRational::zero);
        *e += a;
        if e.is_zero() {
            self.terms.remove(name);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn evaluate(&self, values: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        let mut acc = self.constant.clone();
        for (s, a) in &self.terms {
            let Some(v) = values.get(s) else { bail!(Domain, "no value for symbol {s}") };
            acc += a * v;
        }
        Ok(acc)
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;
    fn add(self, o: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out.constant += &o.constant;
        for (s, a) in &o.terms {
            out.push(s, a.clone());
        }
        out
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, o: &LinearForm) -> LinearForm {
        self + &o.scale(&-BigRational::one())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, a) in &self.terms {
            let neg = a.is_negative();
            let abs = a.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if abs.is_one() {
                f.write_str(s)?;
            } else {
                write!(f, "{abs}·{s}")?;
            }
            first = false;
        }
        if first {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            let sep = if self.constant.is_negative() { " - " } else { " + " };
            write!(f, "{sep}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

fn sym(name: &str) -> LinearForm {
    LinearForm::symbol(name)
}

fn cst(c: i64) -> LinearForm {
    LinearForm::constant(int(c))
}

/// `h(Σ_{3/2})` for a summand list, with `h` supplied per summand.
fn harmonic_count(
    rs: &RootSystem,
    s: &RepSum,
    h: &dyn Fn(&crate::lie::Weight, u64) -> Result<LinearForm>,
) -> Result<LinearForm> {
    let mut acc = LinearForm::default();
    for (w, m, d) in s.sorted_by_dimension(rs)? {
        acc = &acc + &h(&w, d)?.scale(&int(m));
    }
    Ok(acc)
}

/// Kernel and index derived from a computed `Σ^±_{3/2}` and a table of
/// refined Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFormulas {
    pub kernel: LinearForm,
    pub index: Option<LinearForm>,
}

fn derive(
    model: &HolonomyModel,
    h: &dyn Fn(&crate::lie::Weight, u64) -> Result<LinearForm>,
) -> Result<DerivedFormulas> {
    let rs = &model.root_system;
    let s = sigma_three_half(model)?;
    let kernel = harmonic_count(rs, &s.total, h)?;
    let index = match (&s.plus, &s.minus) {
        (Some(p), Some(m)) => Some(&harmonic_count(rs, p, h)? - &harmonic_count(rs, m, h)?),
        _ => None,
    };
    Ok(DerivedFormulas { kernel, index })
}

/// Refined Betti numbers of a Spin(7) manifold, keyed by the dimension of
/// the summand: no harmonic 1-forms, none in `Λ²_7`, `b²_21 = b2`,
/// `b³_48 = b3`, `b⁴_35 = b4-`.
pub fn spin7_derived_formulas() -> Result<DerivedFormulas> {
    let model = HolonomyModel::new(HolonomyGroup::Spin7)?;
    derive(&model, &|_, d| {
        Ok(match d {
            1 => cst(1),
            7 | 8 => LinearForm::default(),
            21 => sym("b2"),
            48 => sym("b3"),
            35 => sym("b4-"),
            _ => bail!(ModelData, "no refined Betti number for a {d}-dimensional Spin(7) summand"),
        })
    })
}

/// Same for G2: `b²_14 = b2`, `b³_27 = b3 − 1`, nothing in `T`.
pub fn g2_derived_formulas() -> Result<DerivedFormulas> {
    let model = HolonomyModel::new(HolonomyGroup::G2)?;
    derive(&model, &|_, d| {
        Ok(match d {
            1 => cst(1),
            7 => LinearForm::default(),
            14 => sym("b2"),
            27 => &sym("b3") - &cst(1),
            _ => bail!(ModelData, "no refined Betti number for a {d}-dimensional G2 summand"),
        })
    })
}

fn hk_symbol(k: i64) -> LinearForm {
    match k {
        -2 | 0 => LinearForm::default(),
        -1 => cst(1),
        _ => sym(&alloc::format!("h{k}1")),
    }
}

/// Hyperkähler refined Hodge numbers applied to the computed Sp(n)
/// decomposition: `h(C) = 1`, `h(Λ^k_0E) = 0` for `k ≥ 1`, and
/// `h(Λ^{k,1}_0E) = h^{k,1} − h^{k−2,1}` with `h^{−1,1} = 1`,
/// `h^{0,1} = h^{−2,1} = 0`. Symbols are named `h{k}1`.
pub fn hyperkahler_derived_formulas(n: u32) -> Result<DerivedFormulas> {
    let model = HolonomyModel::new(HolonomyGroup::Sp(n))?;
    derive(&model, &|w, _| {
        let labels = w.labels();
        let nonzero: Vec<(usize, i64)> = labels.iter().copied().enumerate().filter(|(_, x)| *x != 0).collect();
        Ok(match nonzero.as_slice() {
            [] => cst(1),
            // ω_k
            [(_, 1)] => LinearForm::default(),
            // ω_1 + ω_1
            [(0, 2)] => &hk_symbol(1) - &hk_symbol(-1),
            // ω_k + ω_1, k ≥ 2
            [(0, 1), (j, 1)] => {
                let k = *j as i64 + 1;
                &hk_symbol(k) - &hk_symbol(k - 2)
            }
            _ => bail!(ModelData, "unexpected Sp({n}) summand V{w} in Σ_3/2"),
        })
    })
}

/// The closed forms, as affine forms in the same `h{k}1` symbols.
pub fn hyperkahler_closed_forms(n: u32) -> (LinearForm, LinearForm) {
    let n = n as i64;
    let mut kernel = &cst(-(n + 1)) + &hk_symbol(n).scale(&int(2));
    let mut index = &cst(n + 1) + &hk_symbol(n).scale(&int(2 * sign(n as usize)));
    for k in 1..n {
        kernel = &kernel + &hk_symbol(k).scale(&int(4));
        index = &index + &hk_symbol(k).scale(&int(4 * sign(k as usize)));
    }
    (kernel, index)
}

/// Spin(7) index identity over symbolic Betti numbers `b2, b3, b4+, b4-`
/// (with `b1 = 0`). `Â` is the affine form
/// `(−1 − b2 + b3 + b4+ − 2 b4-)/24`, normalised to 1 on these manifolds.
#[derive(Clone, Debug)]
pub struct Spin7IndexIdentity {
    pub refined_index: LinearForm,
    pub ahat: LinearForm,
    pub signature: LinearForm,
    pub euler: LinearForm,
    /// `refined − (25 − σ)`, which must equal `24(Â − 1)`.
    pub residual_signature: LinearForm,
    /// `refined − (9 − χ/3)`, which must equal `8(Â − 1)`.
    pub residual_euler: LinearForm,
}

impl Spin7IndexIdentity {
    /// Both residuals are multiples of `Â − 1`, so the identities hold
    /// exactly whenever `Â = 1`.
    pub fn holds(&self) -> bool {
        let defect = &self.ahat - &cst(1);
        self.residual_signature == defect.scale(&int(24)) && self.residual_euler == defect.scale(&int(8))
    }
}

pub fn spin7_index_identity() -> Result<Spin7IndexIdentity> {
    let refined_index =
        spin7_derived_formulas()?.index.ok_or_else(|| Error::ModelData("Spin(7) spinors must be graded".into()))?;
    let (b2, b3, b4p, b4m) = (sym("b2"), sym("b3"), sym("b4+"), sym("b4-"));
    let ahat = (&(&(&(&b4p - &b4m.scale(&int(2))) - &cst(1)) - &b2) + &b3).scale(&ratio(1, 24));
    let signature = &b4p - &b4m;
    let euler = &(&(&(&cst(2) + &b2.scale(&int(2))) - &b3.scale(&int(2))) + &b4p) + &b4m;
    let residual_signature = &refined_index - &(&cst(25) - &signature);
    let residual_euler = &refined_index - &(&cst(9) - &euler.scale(&ratio(1, 3)));
    Ok(Spin7IndexIdentity { refined_index, ahat, signature, euler, residual_signature, residual_euler })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn calabi_yau_values() {
        let k3 = TopologicalInput::CalabiYau { n: 2, h1p: alloc::vec![20] };
        assert_eq!(kernel_dimension(&k3).unwrap(), 38);
        assert_eq!(family_index(&k3).unwrap(), -38);
        let quintic = TopologicalInput::CalabiYau { n: 3, h1p: alloc::vec![1, 101] };
        assert_eq!(kernel_dimension(&quintic).unwrap(), 202);
        assert_eq!(family_index(&quintic).unwrap(), 0);
        let sextic = TopologicalInput::CalabiYau { n: 4, h1p: alloc::vec![1, 0, 426] };
        assert_eq!(kernel_dimension(&sextic).unwrap(), 852);
    }

    #[test]
    fn other_families() {
        assert_eq!(kernel_dimension(&TopologicalInput::Spin7 { b2: 4, b3: 33, b4_minus: 60 }).unwrap(), 97);
        assert_eq!(kernel_dimension(&TopologicalInput::QuaternionKahler { b2: 1 }).unwrap(), 2);
        assert_eq!(kernel_dimension(&TopologicalInput::QuaternionKahler { b2: 0 }).unwrap(), 1);
        assert!(matches!(family_index(&TopologicalInput::G2 { b2: 0, b3: 0 }), Err(Error::NotApplicable(_))));
        assert!(matches!(family_index(&TopologicalInput::QuaternionKahler { b2: 0 }), Err(Error::NotApplicable(_))));
        assert!(kernel_dimension(&TopologicalInput::G2 { b2: -1, b3: 0 }).is_err());
        assert!(kernel_dimension(&TopologicalInput::CalabiYau { n: 3, h1p: alloc::vec![1] }).is_err());
    }

    #[test]
    fn refined_betti_derivations() {
        let s7 = spin7_derived_formulas().unwrap();
        assert_eq!(s7.kernel, &(&sym("b2") + &sym("b3")) + &sym("b4-"));
        assert_eq!(s7.index.unwrap(), &(&sym("b3") - &sym("b4-")) - &sym("b2"));
        let g2 = g2_derived_formulas().unwrap();
        assert_eq!(g2.kernel, &(&sym("b2") + &sym("b3")) - &cst(1));
        assert!(g2.index.is_none());
    }

    #[test]
    fn spin7_identity_holds() {
        let id = spin7_index_identity().unwrap();
        assert!(id.holds());
        assert!(!id.residual_signature.is_zero());
    }

    #[test]
    fn hyperkahler_rederivation() {
        for n in 1..=6 {
            let derived = hyperkahler_derived_formulas(n).unwrap();
            let (kernel, index) = hyperkahler_closed_forms(n);
            assert_eq!(derived.kernel, kernel, "kernel, n = {n}");
            assert_eq!(derived.index.unwrap(), index, "index, n = {n}");
        }
    }

    #[test]
    fn hyperkahler_surface_in_betti_numbers() {
        // b2 = 2 + h^{1,1}, b3 = 2 h^{2,1}
        for (h11, h21) in [(20, 0), (19, 0), (21, 10), (5, 3)] {
            let t = TopologicalInput::HyperKahler { n: 2, hk1: alloc::vec![h11, h21] };
            let (b2, b3) = (2 + h11, 2 * h21);
            assert_eq!(kernel_dimension(&t).unwrap(), 4 * b2 + b3 - 11);
        }
    }

    #[test]
    fn display_form() {
        let (k, _) = hyperkahler_closed_forms(2);
        assert_eq!(alloc::format!("{k}"), "4·h11 + 2·h21 - 3");
    }

    proptest! {
        #[test]
        fn closed_forms_match_evaluation(n in 1u32..=6, hs in proptest::collection::vec(0i64..500, 6)) {
            let hk1 = hs[..n as usize].to_vec();
            let t = TopologicalInput::HyperKahler { n, hk1: hk1.clone() };
            let (kernel, index) = hyperkahler_closed_forms(n);
            let values: BTreeMap<String, BigRational> =
                hk1.iter().enumerate().map(|(i, &h)| (alloc::format!("h{}1", i + 1), int(h))).collect();
            prop_assert_eq!(kernel.evaluate(&values).unwrap(), int(kernel_dimension(&t).unwrap()));
            prop_assert_eq!(index.evaluate(&values).unwrap(), int(family_index(&t).unwrap()));
        }

        #[test]
        fn kernel_and_index_have_equal_parity(n in 2u32..=8, hs in proptest::collection::vec(0i64..1000, 7)) {
            let t = TopologicalInput::CalabiYau { n, h1p: hs[..n as usize - 1].to_vec() };
            let (k, i) = (kernel_dimension(&t).unwrap(), family_index(&t).unwrap());
            prop_assert_eq!((k - i).rem_euclid(2), 0);
        }
    }
}
