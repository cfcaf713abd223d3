use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Weight;
use crate::arith::{int, linalg, ratio, to_i64};
use crate::error::{bail, Error, Result};

/// A simple factor of a compact connected Lie algebra, or a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    /// The Lie algebra of U(1). Its single label is twice the charge, so
    /// half-integral charges stay integral.
    U1,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n as usize,
            CartanType::G2 => 2,
            CartanType::U1 => 1,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) => n >= 1,
            CartanType::D(n) => n >= 2,
            CartanType::G2 | CartanType::U1 => true,
        };
        if !ok {
            bail!(Domain, "{self} is not a valid root system");
        }
        Ok(())
    }

    /// Simple roots in the standard Euclidean realization and the ambient
    /// dimension.
    fn euclidean_simple_roots(self) -> (usize, Vec<Vec<BigRational>>) {
        let e = |dim: usize, pairs: &[(usize, i64)]| {
            let mut v = alloc::vec![BigRational::zero(); dim];
            for &(i, c) in pairs {
                v[i] += int(c);
            }
            v
        };
        match self {
            CartanType::A(n) => {
                let d = n as usize + 1;
                (d, (0..n as usize).map(|i| e(d, &[(i, 1), (i + 1, -1)])).collect())
            }
            CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => {
                let d = n as usize;
                let mut roots: Vec<_> = (0..d - 1).map(|i| e(d, &[(i, 1), (i + 1, -1)])).collect();
                roots.push(match self {
                    CartanType::B(_) => e(d, &[(d - 1, 1)]),
                    CartanType::C(_) => e(d, &[(d - 1, 2)]),
                    _ => e(d, &[(d - 2, 1), (d - 1, 1)]),
                });
                (d, roots)
            }
            CartanType::G2 => (3, alloc::vec![e(3, &[(0, 1), (1, -1)]), e(3, &[(0, -2), (1, 1), (2, 1)])]),
            CartanType::U1 => (1, Vec::new()),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::G2 => f.write_str("G2"),
            CartanType::U1 => f.write_str("U1"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        if upper == "G2" {
            return Ok(CartanType::G2);
        }
        if upper == "U1" || upper == "T1" {
            return Ok(CartanType::U1);
        }
        let (head, tail) = upper.split_at(upper.len().min(1));
        let Ok(n) = tail.parse::<u32>() else {
            bail!(Domain, "cannot parse root system {s:?}");
        };
        let t = match head {
            "A" => CartanType::A(n),
            "B" => CartanType::B(n),
            "C" => CartanType::C(n),
            "D" => CartanType::D(n),
            _ => bail!(Domain, "unknown root system {s:?}"),
        };
        t.validate()?;
        Ok(t)
    }
}

/// A positive root, in simple-root and simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// `α = Σ c_j α_j`.
    pub coefficients: Vec<i64>,
    /// `α^∨ = Σ c_j α_j^∨`.
    pub coroot_coefficients: Vec<i64>,
    /// The root as a weight, in Dynkin labels.
    pub labels: Vec<i64>,
    /// `⟨α, α⟩`.
    pub norm: BigRational,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

/// A finite product of [`CartanType`] factors with weights written in
/// Dynkin labels (coordinates in the fundamental-weight basis, concatenated
/// over the factors). Euclidean coordinates are available through
/// [`RootSystem::euclidean`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<CartanType>,
    /// Block-diagonal Cartan matrix `C_ij = ⟨α_i, α_j^∨⟩`; rows and columns of
    /// circle factors are zero.
    cartan: Vec<Vec<i64>>,
    has_root: Vec<bool>,
    simple_norms: Vec<BigRational>,
    /// `⟨ω_i, ω_j⟩`.
    gram: Vec<Vec<BigRational>>,
    /// Euclidean coordinates of each fundamental weight in the ambient
    /// space of its factor, padded into the concatenated ambient space.
    fundamental: Vec<Vec<BigRational>>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(components: &[CartanType]) -> Result<Self> {
        if components.is_empty() {
            bail!(Domain, "a root system needs at least one factor");
        }
        for c in components {
            c.validate()?;
        }
        let rank: usize = components.iter().map(|c| c.rank()).sum();
        let ambient_total: usize = components.iter().map(|c| c.euclidean_simple_roots().0).sum();
        let mut cartan = alloc::vec![alloc::vec![0i64; rank]; rank];
        let mut has_root = alloc::vec![false; rank];
        let mut simple_norms = alloc::vec![BigRational::zero(); rank];
        let mut gram = alloc::vec![alloc::vec![BigRational::zero(); rank]; rank];
        let mut fundamental = alloc::vec![alloc::vec![BigRational::zero(); ambient_total]; rank];
        let (mut off, mut amb_off) = (0, 0);
        for &c in components {
            let (amb, simple) = c.euclidean_simple_roots();
            let r = c.rank();
            if c == CartanType::U1 {
                gram[off][off] = ratio(1, 4);
                fundamental[off][amb_off] = ratio(1, 2);
            } else {
                // simple roots have at most three non-zero coordinates
                let sparse: Vec<Vec<(usize, BigRational)>> = simple
                    .iter()
                    .map(|a| a.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
                    .collect();
                let dot = |a: &[(usize, BigRational)], b: &[(usize, BigRational)]| -> BigRational {
                    let mut acc = BigRational::zero();
                    for (k, x) in a {
                        if let Some((_, y)) = b.iter().find(|(l, _)| l == k) {
                            acc += x * y;
                        }
                    }
                    acc
                };
                let norms: Vec<BigRational> = sparse.iter().map(|a| dot(a, a)).collect();
                let mut block = alloc::vec![alloc::vec![0i64; r]; r];
                for i in 0..r {
                    for j in 0..r {
                        let q = int(2) * dot(&sparse[i], &sparse[j]) / &norms[j];
                        block[i][j] = to_i64(&q).ok_or_else(|| Error::ModelData("non-integral Cartan entry".into()))?;
                    }
                }
                let inv =
                    linalg::integer_inverse(&block).ok_or_else(|| Error::ModelData("singular Cartan matrix".into()))?;
                let mut omegas = alloc::vec![alloc::vec![BigRational::zero(); amb]; r];
                for (i, omega) in omegas.iter_mut().enumerate() {
                    for (j, alpha) in sparse.iter().enumerate() {
                        if inv[i][j].is_zero() {
                            continue;
                        }
                        for (k, x) in alpha {
                            omega[*k] += &inv[i][j] * x;
                        }
                    }
                }
                for i in 0..r {
                    has_root[off + i] = true;
                    simple_norms[off + i] = norms[i].clone();
                    for j in 0..r {
                        cartan[off + i][off + j] = block[i][j];
                        // ⟨ω_i, ω_j⟩ = (C⁻¹)_ij |α_j|² / 2
                        gram[off + i][off + j] = &inv[i][j] * &norms[j] / int(2);
                    }
                    for k in 0..amb {
                        fundamental[off + i][amb_off + k] = omegas[i][k].clone();
                    }
                }
            }
            off += r;
            amb_off += amb;
        }
        let mut rs = RootSystem {
            components: components.to_vec(),
            cartan,
            has_root,
            simple_norms,
            gram,
            fundamental,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.build_positive_roots();
        Ok(rs)
    }

    pub fn simple(t: CartanType) -> Result<Self> {
        Self::new(&[t])
    }

    /// Parse `"G2"`, `"B3"`, `"C1xC2"`, `"A2xU1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Result<Vec<CartanType>> = s.split(['x', 'X', '*']).map(str::parse).collect();
        Self::new(&parts?)
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Label indices carrying a simple root (all but circle factors).
    pub fn has_root(&self, i: usize) -> bool {
        self.has_root[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `δ`, the half-sum of positive roots: label 1 on every simple root.
    pub fn delta(&self) -> Weight {
        Weight::new(self.has_root.iter().map(|&b| b as i64).collect())
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(alloc::vec![0; self.rank()])
    }

    /// Weight with a single label `1` at index `i`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = alloc::vec![0; self.rank()];
        v[i] = 1;
        Weight::new(v)
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.labels().len() != self.rank() {
            bail!(Domain, "weight {w} has {} labels but the root system has rank {}", w.labels().len(), self.rank());
        }
        Ok(())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.labels().iter().zip(&self.has_root).all(|(&l, &r)| !r || l >= 0)
    }

    pub fn require_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !self.is_dominant(w) {
            bail!(Domain, "weight {w} is not dominant");
        }
        Ok(())
    }

    /// `⟨λ, μ⟩` for the Euclidean scalar product.
    pub fn inner(&self, a: &Weight, b: &Weight) -> BigRational {
        let (a, b) = (a.labels(), b.labels());
        let mut acc = BigRational::zero();
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..b.len() {
                if b[j] != 0 && !self.gram[i][j].is_zero() {
                    acc += &self.gram[i][j] * int(a[i] * b[j]);
                }
            }
        }
        acc
    }

    /// `⟨μ, α⟩` for a positive root.
    pub fn inner_root(&self, mu: &Weight, root: &Root) -> BigRational {
        let mut acc = BigRational::zero();
        for (j, &c) in root.coefficients.iter().enumerate() {
            if c != 0 && mu.labels()[j] != 0 {
                acc += &self.simple_norms[j] * int(c * mu.labels()[j]);
            }
        }
        acc / int(2)
    }

    /// `⟨μ, α^∨⟩`, an integer for integral weights.
    pub fn pair_coroot(&self, mu: &Weight, root: &Root) -> i64 {
        root.coroot_coefficients.iter().zip(mu.labels()).map(|(c, l)| c * l).sum()
    }

    /// Euclidean coordinates in the concatenated standard realizations.
    pub fn euclidean(&self, w: &Weight) -> Vec<BigRational> {
        let n = self.fundamental.first().map_or(0, Vec::len);
        let mut out = alloc::vec![BigRational::zero(); n];
        for (i, &l) in w.labels().iter().enumerate() {
            if l != 0 {
                for (k, x) in self.fundamental[i].iter().enumerate() {
                    if !x.is_zero() {
                        out[k] += x * int(l);
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`RootSystem::euclidean`]. Fails if the vector is not an
    /// integral weight of the realization.
    pub fn weight_from_euclidean(&self, coords: &[BigRational]) -> Result<Weight> {
        let n = self.fundamental.first().map_or(0, Vec::len);
        if coords.len() != n {
            bail!(Domain, "expected {n} Euclidean coordinates, got {}", coords.len());
        }
        // λ_i = 2⟨λ, α_i⟩ / ⟨α_i, α_i⟩, or twice the coordinate on a circle
        let mut labels = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let value = if self.has_root[i] {
                let alpha = self.euclidean(&self.simple_root_weight(i));
                let dot: BigRational = alpha.iter().zip(coords).map(|(a, b)| a * b).sum();
                int(2) * dot / &self.simple_norms[i]
            } else {
                let k = self.fundamental[i].iter().position(|x| !x.is_zero()).expect("circle coordinate");
                int(2) * &coords[k]
            };
            let Some(l) = to_i64(&value) else {
                bail!(Domain, "Euclidean vector is not an integral weight (label {i} = {value})");
            };
            labels.push(l);
        }
        let w = Weight::new(labels);
        if self.euclidean(&w) != coords {
            bail!(Domain, "Euclidean vector does not lie in the span of the weight lattice");
        }
        Ok(w)
    }

    fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::new(self.cartan[i].clone())
    }

    /// Simple reflection `s_i(μ)_j = μ_j − μ_i C_ij`.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let m = mu.labels();
        let k = m[i];
        Weight::new(m.iter().zip(&self.cartan[i]).map(|(x, c)| x - k * c).collect())
    }

    /// Dominant representative of the Weyl orbit of `mu`, with the parity of
    /// the number of reflections used.
    pub fn to_dominant(&self, mu: &Weight) -> (Weight, bool) {
        let mut w = mu.clone();
        let mut odd = false;
        while let Some(i) = (0..self.rank()).find(|&i| self.has_root[i] && w.labels()[i] < 0) {
            w = self.reflect(&w, i);
            odd = !odd;
        }
        (w, odd)
    }

    fn build_positive_roots(&self) -> Vec<Root> {
        let r = self.rank();
        let mut coefficient_lists = Vec::new();
        let mut off = 0;
        for &c in &self.components {
            for local in component_positive_roots(c) {
                let mut v = alloc::vec![0i64; r];
                v[off..off + local.len()].copy_from_slice(&local);
                coefficient_lists.push(v);
            }
            off += c.rank();
        }
        coefficient_lists
            .into_iter()
            .map(|c| {
                let labels: Vec<i64> = (0..r).map(|k| (0..r).map(|j| c[j] * self.cartan[j][k]).sum()).collect();
                // ⟨α, α⟩ = Σ_j c_j ⟨α, α_j⟩ = Σ_j c_j λ_j |α_j|² / 2
                let mut norm = BigRational::zero();
                for j in 0..r {
                    if c[j] != 0 && labels[j] != 0 {
                        norm += int(c[j] * labels[j]) * &self.simple_norms[j];
                    }
                }
                norm /= int(2);
                let coroot_coefficients = (0..r)
                    .map(|j| {
                        if c[j] == 0 {
                            0
                        } else {
                            to_i64(&(int(c[j]) * &self.simple_norms[j] / &norm))
                                .expect("coroot coefficients are integers")
                        }
                    })
                    .collect();
                Root { coefficients: c, coroot_coefficients, labels, norm }
            })
            .collect()
    }

    /// Dimension of the irreducible module with highest weight `lambda`:
    /// `Π ⟨λ+δ, α^∨⟩ / ⟨δ, α^∨⟩`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        self.require_dominant(lambda)?;
        let shifted = lambda + &self.delta();
        let mut num = num_bigint::BigInt::one();
        let mut den = num_bigint::BigInt::one();
        for root in &self.positive_roots {
            num *= self.pair_coroot(&shifted, root);
            den *= self.pair_coroot(&self.delta(), root);
        }
        let q = BigRational::new(num, den);
        to_i64(&q)
            .and_then(|v| u64::try_from(v).ok())
            .ok_or_else(|| Error::Consistency(alloc::format!("Weyl dimension of {lambda} is {q}")))
    }

    /// Casimir eigenvalue `⟨λ + 2δ, λ⟩`. This is the value the literature
    /// sometimes attributes to "Freudenthal's formula"; the multiplicity
    /// recursion lives in [`super::weight_multiplicities`].
    pub fn casimir(&self, lambda: &Weight) -> Result<BigRational> {
        self.require_dominant(lambda)?;
        let two_delta = &self.delta() + &self.delta();
        Ok(self.inner(&(lambda + &two_delta), lambda))
    }

    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                s.push('x');
            }
            s.push_str(&alloc::format!("{c}"));
        }
        s
    }
}

/// Positive roots of a simple factor in simple-root coordinates. Classical
/// types use the explicit `e_i ± e_j` lists; G2 runs the root-string
/// algorithm.
fn component_positive_roots(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let span = |ranges: &[(usize, usize, i64)]| {
        let mut v = alloc::vec![0i64; n];
        for &(lo, hi, c) in ranges {
            for x in &mut v[lo..hi] {
                *x += c;
            }
        }
        v
    };
    let mut out = Vec::new();
    match t {
        CartanType::U1 => {}
        CartanType::G2 => out = root_strings(&[alloc::vec![2, -1], alloc::vec![-3, 2]]),
        CartanType::A(_) => {
            for i in 0..n {
                for j in i + 1..=n {
                    out.push(span(&[(i, j, 1)]));
                }
            }
        }
        CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => {
            // e_i − e_j
            for i in 0..n {
                for j in i + 1..n {
                    out.push(span(&[(i, j, 1)]));
                }
            }
            // e_i + e_j
            for i in 0..n {
                for j in i + 1..n {
                    out.push(match t {
                        CartanType::B(_) => span(&[(i, j, 1), (j, n, 2)]),
                        CartanType::C(_) => span(&[(i, j, 1), (j, n - 1, 2), (n - 1, n, 1)]),
                        _ if j == n - 1 => span(&[(i, n - 2, 1), (n - 1, n, 1)]),
                        _ => span(&[(i, j, 1), (j, n - 2, 2), (n - 2, n, 1)]),
                    });
                }
            }
            // e_i or 2e_i
            for i in 0..n {
                match t {
                    CartanType::B(_) => out.push(span(&[(i, n, 1)])),
                    CartanType::C(_) => out.push(span(&[(i, n - 1, 2), (n - 1, n, 1)])),
                    _ => {}
                }
            }
        }
    }
    out
}

/// Positive roots from a Cartan matrix by the root-string algorithm.
fn root_strings(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let unit = |i: usize| {
        let mut v = alloc::vec![0i64; r];
        v[i] = 1;
        v
    };
    let mut roots: alloc::collections::BTreeSet<Vec<i64>> = (0..r).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..r).map(unit).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots.into_iter().collect()
}
