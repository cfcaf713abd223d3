use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::ratio;
use crate::error::{bail, Error, Result};
use crate::lie::{tensor_sums, CartanType, RepSum, RootSystem, Weight};

/// Holonomy groups with their rank parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HolonomyGroup {
    /// Calabi-Yau, complex dimension `n`.
    SU(u32),
    /// Hyperkähler, quaternionic dimension `n`.
    Sp(u32),
    /// Quaternion-Kähler `Sp(1)·Sp(m)`.
    SpSp(u32),
    G2,
    Spin7,
    /// Generic Riemannian holonomy in dimension `n`.
    SO(u32),
    /// Kähler, complex dimension `n`.
    U(u32),
    /// The symmetric space `SU(3) = SU(3)×SU(3)/SU(3)`: isotropy SU(3) acting
    /// by the adjoint representation.
    Su3Symmetric,
}

impl HolonomyGroup {
    pub fn real_dimension(self) -> u32 {
        match self {
            HolonomyGroup::SU(n) | HolonomyGroup::U(n) => 2 * n,
            HolonomyGroup::Sp(n) | HolonomyGroup::SpSp(n) => 4 * n,
            HolonomyGroup::G2 => 7,
            HolonomyGroup::Spin7 | HolonomyGroup::Su3Symmetric => 8,
            HolonomyGroup::SO(n) => n,
        }
    }
}

impl fmt::Display for HolonomyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomyGroup::SU(n) => write!(f, "SU({n})"),
            HolonomyGroup::Sp(n) => write!(f, "Sp({n})"),
            HolonomyGroup::SpSp(m) => write!(f, "Sp(1)·Sp({m})"),
            HolonomyGroup::G2 => f.write_str("G2"),
            HolonomyGroup::Spin7 => f.write_str("Spin(7)"),
            HolonomyGroup::SO(n) => write!(f, "SO({n})"),
            HolonomyGroup::U(n) => write!(f, "U({n})"),
            HolonomyGroup::Su3Symmetric => f.write_str("SU(3) symmetric space"),
        }
    }
}

impl FromStr for HolonomyGroup {
    type Err = Error;

    /// Accepts `su:3`, `sp:2`, `spsp:2`, `g2`, `spin7`, `so:7`, `u:2`,
    /// `su3-symmetric`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (name, arg) = match lower.split_once([':', ' ']) {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (lower.as_str(), None),
        };
        let n = || -> Result<u32> {
            match arg.map(str::parse::<u32>) {
                Some(Ok(n)) => Ok(n),
                _ => bail!(Domain, "holonomy {name:?} needs a numeric rank parameter"),
            }
        };
        Ok(match name {
            "su" => HolonomyGroup::SU(n()?),
            "sp" => HolonomyGroup::Sp(n()?),
            "spsp" | "sp1sp" | "qk" => HolonomyGroup::SpSp(n()?),
            "g2" => HolonomyGroup::G2,
            "spin7" => HolonomyGroup::Spin7,
            "so" => HolonomyGroup::SO(n()?),
            "u" => HolonomyGroup::U(n()?),
            "su3-symmetric" | "su3sym" => HolonomyGroup::Su3Symmetric,
            _ => bail!(Domain, "unknown holonomy group {s:?}"),
        })
    }
}

/// Spinor module, split by chirality when the dimension is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spinors {
    Graded { plus: RepSum, minus: RepSum },
    Ungraded(RepSum),
}

impl Spinors {
    pub fn total(&self) -> RepSum {
        match self {
            Spinors::Graded { plus, minus } => plus.sum(minus),
            Spinors::Ungraded(s) => s.clone(),
        }
    }
}

/// Spinor and tangent representations of a holonomy group, as curated
/// tables.
#[derive(Clone, Debug)]
pub struct HolonomyModel {
    pub group: HolonomyGroup,
    pub root_system: RootSystem,
    pub sigma_half: Spinors,
    /// Complexified tangent representation.
    pub tangent: RepSum,
}

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

/// `ω_k` of a rank-`r` factor placed at label offset `off` in a weight of
/// total rank `total`; `ω_0` and `ω_{r+1}` are zero.
fn omega(total: usize, off: usize, r: usize, k: usize) -> Weight {
    let mut v = alloc::vec![0; total];
    if k >= 1 && k <= r {
        v[off + k - 1] = 1;
    }
    Weight::new(v)
}

impl HolonomyModel {
    pub fn new(group: HolonomyGroup) -> Result<Self> {
        let model = match group {
            HolonomyGroup::SU(n) => {
                if n < 2 {
                    bail!(Domain, "SU(n) holonomy needs n >= 2");
                }
                // Σ = ⊕ Λ^{0,p} ≅ ⊕ Λ^p E, graded by the parity of p
                let r = n as usize - 1;
                let rs = RootSystem::simple(CartanType::A(r as u32))?;
                let (mut plus, mut minus) = (RepSum::new(), RepSum::new());
                for p in 0..=r + 1 {
                    let target = if p % 2 == 0 { &mut plus } else { &mut minus };
                    target.add_term(omega(r, 0, r, p), 1);
                }
                let tangent = RepSum::from_terms([(omega(r, 0, r, 1), 1), (omega(r, 0, r, r), 1)]);
                HolonomyModel { group, root_system: rs, sigma_half: Spinors::Graded { plus, minus }, tangent }
            }
            HolonomyGroup::Sp(n) => {
                if n < 1 {
                    bail!(Domain, "Sp(n) holonomy needs n >= 1");
                }
                // Σ = ⊕_k (n−k+1) Λ^k_0 E
                let r = n as usize;
                let rs = RootSystem::simple(CartanType::C(n))?;
                let (mut plus, mut minus) = (RepSum::new(), RepSum::new());
                for k in 0..=r {
                    let target = if k % 2 == 0 { &mut plus } else { &mut minus };
                    target.add_term(omega(r, 0, r, k), (r - k + 1) as i64);
                }
                let tangent = RepSum::from_terms([(omega(r, 0, r, 1), 2)]);
                HolonomyModel { group, root_system: rs, sigma_half: Spinors::Graded { plus, minus }, tangent }
            }
            HolonomyGroup::SpSp(m) => {
                if m < 1 {
                    bail!(Domain, "Sp(1)·Sp(m) needs m >= 1");
                }
                // Σ = ⊕_k Sym^{m−k} H ⊗ Λ^k_0 E, T = H ⊗ E
                let r = m as usize;
                let total = r + 1;
                let rs = RootSystem::new(&[CartanType::C(1), CartanType::C(m)])?;
                let mut sigma = RepSum::new();
                for k in 0..=r {
                    let mut v = omega(total, 1, r, k).labels().to_vec();
                    v[0] = (r - k) as i64;
                    sigma.add_term(Weight::new(v), 1);
                }
                let mut t = omega(total, 1, r, 1).labels().to_vec();
                t[0] = 1;
                HolonomyModel {
                    group,
                    root_system: rs,
                    sigma_half: Spinors::Ungraded(sigma),
                    tangent: RepSum::irreducible(Weight::new(t)),
                }
            }
            HolonomyGroup::G2 => {
                // α1 short: ω1 is the 7-dimensional T
                let rs = RootSystem::simple(CartanType::G2)?;
                let sigma = RepSum::from_terms([(w(&[0, 0]), 1), (w(&[1, 0]), 1)]);
                HolonomyModel {
                    group,
                    root_system: rs,
                    sigma_half: Spinors::Ungraded(sigma),
                    tangent: RepSum::irreducible(w(&[1, 0])),
                }
            }
            HolonomyGroup::Spin7 => {
                // T is the 8-dimensional spin module ω3; Λ²_7 is the vector ω1
                let rs = RootSystem::simple(CartanType::B(3))?;
                let plus = RepSum::from_terms([(w(&[0, 0, 0]), 1), (w(&[1, 0, 0]), 1)]);
                let minus = RepSum::irreducible(w(&[0, 0, 1]));
                HolonomyModel {
                    group,
                    root_system: rs,
                    sigma_half: Spinors::Graded { plus, minus },
                    tangent: RepSum::irreducible(w(&[0, 0, 1])),
                }
            }
            HolonomyGroup::SO(n) => {
                if n < 3 {
                    bail!(Domain, "SO(n) holonomy needs n >= 3");
                }
                let rs = so_root_system(n)?;
                let r = (n / 2) as usize;
                let half = ratio(1, 2);
                let vector = {
                    let mut e1 = alloc::vec![ratio(0, 1); r];
                    e1[0] = ratio(1, 1);
                    rs.weight_from_euclidean(&e1)?
                };
                let spinor_plus = rs.weight_from_euclidean(&alloc::vec![half.clone(); r])?;
                let sigma_half = if n % 2 == 1 {
                    Spinors::Ungraded(RepSum::irreducible(spinor_plus))
                } else {
                    let mut c = alloc::vec![half.clone(); r];
                    c[r - 1] = -half;
                    let spinor_minus = rs.weight_from_euclidean(&c)?;
                    Spinors::Graded { plus: RepSum::irreducible(spinor_plus), minus: RepSum::irreducible(spinor_minus) }
                };
                HolonomyModel { group, root_system: rs, sigma_half, tangent: RepSum::irreducible(vector) }
            }
            HolonomyGroup::U(n) => {
                if n < 2 {
                    bail!(Domain, "U(n) holonomy needs n >= 2");
                }
                // A_{n−1} × U(1); spinors Λ^{0,p} ⊗ K^{1/2} carry charge p − n/2
                let r = n as usize - 1;
                let total = r + 1;
                let rs = RootSystem::new(&[CartanType::A(r as u32), CartanType::U1])?;
                let charged = |k: usize, label: i64| {
                    let mut v = omega(total, 0, r, k).labels().to_vec();
                    v[r] = label;
                    Weight::new(v)
                };
                let (mut plus, mut minus) = (RepSum::new(), RepSum::new());
                for p in 0..=n as usize {
                    let target = if p % 2 == 0 { &mut plus } else { &mut minus };
                    target.add_term(charged(p, 2 * p as i64 - n as i64), 1);
                }
                let tangent = RepSum::from_terms([(charged(1, 2), 1), (charged(r, -2), 1)]);
                HolonomyModel { group, root_system: rs, sigma_half: Spinors::Graded { plus, minus }, tangent }
            }
            HolonomyGroup::Su3Symmetric => {
                let rs = RootSystem::simple(CartanType::A(2))?;
                let adjoint = RepSum::irreducible(w(&[1, 1]));
                HolonomyModel {
                    group,
                    root_system: rs,
                    sigma_half: Spinors::Graded { plus: adjoint.clone(), minus: adjoint.clone() },
                    tangent: adjoint,
                }
            }
        };
        model.validate()?;
        Ok(model)
    }

    pub fn real_dimension(&self) -> u32 {
        self.group.real_dimension()
    }

    /// Dimension bookkeeping: `dim Σ = 2^{⌊n/2⌋}`, `dim T = n`, and equal
    /// chirality halves.
    fn validate(&self) -> Result<()> {
        let n = self.real_dimension();
        let rs = &self.root_system;
        let dim_sigma = self.sigma_half.total().dimension(rs)?;
        if dim_sigma != 1i64 << (n / 2) {
            bail!(ModelData, "{}: spinor module has dimension {dim_sigma}, expected 2^{}", self.group, n / 2);
        }
        let dim_t = self.tangent.dimension(rs)?;
        if dim_t != n as i64 {
            bail!(ModelData, "{}: tangent module has dimension {dim_t}, expected {n}", self.group);
        }
        if let Spinors::Graded { plus, minus } = &self.sigma_half {
            if plus.dimension(rs)? != minus.dimension(rs)? {
                bail!(ModelData, "{}: half-spinor modules have different dimensions", self.group);
            }
        }
        Ok(())
    }
}

/// `B_{(n−1)/2}` for odd `n`, `D_{n/2}` for even `n`.
pub fn so_root_system(n: u32) -> Result<RootSystem> {
    if n < 3 {
        bail!(Domain, "so(n) needs n >= 3");
    }
    RootSystem::simple(if n % 2 == 1 { CartanType::B(n / 2) } else { CartanType::D(n / 2) })
}

/// `Σ_{3/2}`, with its chirality halves when the spinors are graded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaThreeHalf {
    pub total: RepSum,
    pub plus: Option<RepSum>,
    pub minus: Option<RepSum>,
}

/// `Σ_{1/2} ⊗ T ⊖ Σ_{1/2}`; for graded spinors
/// `Σ^±_{3/2} = Σ^±_{1/2} ⊗ T ⊖ Σ^∓_{1/2}`.
pub fn sigma_three_half(h: &HolonomyModel) -> Result<SigmaThreeHalf> {
    let rs = &h.root_system;
    let sub =
        |a: &RepSum, b: &RepSum| a.subtract(b, false).map_err(|e| Error::ModelData(alloc::format!("{}: {e}", h.group)));
    let out = match &h.sigma_half {
        Spinors::Graded { plus, minus } => {
            let p = sub(&tensor_sums(rs, plus, &h.tangent)?, minus)?;
            let m = sub(&tensor_sums(rs, minus, &h.tangent)?, plus)?;
            SigmaThreeHalf { total: p.sum(&m), plus: Some(p), minus: Some(m) }
        }
        Spinors::Ungraded(s) => {
            let t = sub(&tensor_sums(rs, s, &h.tangent)?, s)?;
            SigmaThreeHalf { total: t, plus: None, minus: None }
        }
    };
    let d_half = h.sigma_half.total().dimension(rs)?;
    let expected = d_half * h.tangent.dimension(rs)? - d_half;
    if out.total.dimension(rs)? != expected {
        bail!(ModelData, "{}: Σ_3/2 has the wrong dimension", h.group);
    }
    Ok(out)
}

/// Multiplicity of the trivial module in `Σ_{3/2}`: the dimension of the
/// space of parallel spin-3/2 fields.
pub fn parallel_rs_dimension(h: &HolonomyModel) -> Result<i64> {
    Ok(sigma_three_half(h)?.total.trivial_multiplicity())
}

/// Human-readable listing such as `7 + 14 + 27` or `2·1 + 8`.
pub fn describe_by_dimension(rs: &RootSystem, s: &RepSum) -> Result<String> {
    let mut out = String::new();
    for (i, (_, m, d)) in s.sorted_by_dimension(rs)?.into_iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if m != 1 {
            out.push_str(&alloc::format!("{m}·"));
        }
        out.push_str(&alloc::format!("{d}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

/// `(dimension, multiplicity)` pairs, sorted.
pub fn dimension_profile(rs: &RootSystem, s: &RepSum) -> Result<Vec<(u64, i64)>> {
    Ok(s.sorted_by_dimension(rs)?.into_iter().map(|(_, m, d)| (d, m)).collect())
}
