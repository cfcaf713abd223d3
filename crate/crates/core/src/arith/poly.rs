use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::is_canonical;
use crate::error::{bail, Result};

/// Largest number of formal variables a [`PolyRing`] may carry.
pub const MAX_VARS: usize = 4;

/// Exponent tuple; slots past the ring's variable count are always zero.
pub type Exponent = [u32; MAX_VARS];

/// A quotient `Q[v_1, …, v_k] / I` where `I` is the monomial ideal generated
/// by `v_i^(cutoff_i + 1)` and, when a grading is present, by every monomial
/// whose weighted degree exceeds the grading bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    cutoffs: Vec<u32>,
    grading: Option<(Vec<u32>, u32)>,
}

impl PolyRing {
    /// Ring in the given `(name, cutoff)` variables.
    pub fn new(vars: &[(&str, u32)]) -> Result<Arc<Self>> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            bail!(Structural, "a ring needs 1..={} variables, got {}", MAX_VARS, vars.len());
        }
        for (i, (a, _)) in vars.iter().enumerate() {
            if vars[..i].iter().any(|(b, _)| b == a) {
                bail!(Structural, "duplicate variable name {a:?}");
            }
        }
        Ok(Arc::new(PolyRing {
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            cutoffs: vars.iter().map(|&(_, c)| c).collect(),
            grading: None,
        }))
    }

    /// Single-variable ring `Q[name] / (name^(cutoff+1))`.
    pub fn univariate(name: &str, cutoff: u32) -> Arc<Self> {
        Self::new(&[(name, cutoff)]).expect("one variable is always valid")
    }

    /// Ring that additionally discards monomials of weighted degree above
    /// `max_weight`.
    pub fn graded(vars: &[(&str, u32)], weights: &[u32], max_weight: u32) -> Result<Arc<Self>> {
        if weights.len() != vars.len() {
            bail!(Structural, "{} weights for {} variables", weights.len(), vars.len());
        }
        let mut ring = Self::new(vars)?;
        Arc::make_mut(&mut ring).grading = Some((weights.to_vec(), max_weight));
        Ok(ring)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn cutoff(&self, i: usize) -> u32 {
        self.cutoffs[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Weighted degree of a monomial; total degree for ungraded rings.
    pub fn weight(&self, e: &Exponent) -> u32 {
        match &self.grading {
            Some((w, _)) => w.iter().zip(e).map(|(a, b)| a * b).sum(),
            None => e.iter().sum(),
        }
    }

    /// Whether the monomial survives truncation.
    pub fn admits(&self, e: &Exponent) -> bool {
        let within = (0..MAX_VARS).all(|i| match self.cutoffs.get(i) {
            Some(&c) => e[i] <= c,
            None => e[i] == 0,
        });
        within
            && match &self.grading {
                Some((_, max)) => self.weight(e) <= *max,
                None => true,
            }
    }

    /// Upper bound on the total degree of any surviving monomial.
    fn max_total_degree(&self) -> u32 {
        self.cutoffs.iter().sum()
    }
}

/// Sparse element of a [`PolyRing`]. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Exponent, BigRational>,
}

fn exponent(exps: &[u32]) -> Exponent {
    let mut e = [0; MAX_VARS];
    e[..exps.len()].copy_from_slice(exps);
    e
}

impl TruncatedPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        TruncatedPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        p.add_term([0; MAX_VARS], c);
        p
    }

    /// The `i`-th ring variable.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        let mut p = Self::zero(ring);
        p.add_term(e, BigRational::one());
        p
    }

    /// `c · v^exps`; dropped if the monomial is truncated away.
    pub fn monomial(ring: &Arc<PolyRing>, exps: &[u32], c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(exponent(exps), c);
        p
    }

    /// `Σ coeffs[k] v^k` in a univariate ring.
    pub fn from_coeffs(ring: &Arc<PolyRing>, coeffs: &[BigRational]) -> Self {
        let mut p = Self::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(exponent(&[k as u32]), c.clone());
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of `v^exps`.
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(&exponent(exps)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&[])
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() || !self.ring.admits(&e) {
            return;
        }
        debug_assert!(is_canonical(&c));
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            bail!(Structural, "operands live in different rings: {:?} vs {:?}", self.ring, other.ring)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                if self.ring.admits(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        TruncatedPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keep only the terms whose exponent satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Exponent) -> bool) -> Self {
        TruncatedPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Terms of weighted degree exactly `k` (total degree if ungraded).
    pub fn homogeneous_part(&self, k: u32) -> Self {
        self.filter(|e| self.ring.weight(e) == k)
    }

    /// Move into `target`, sending variable `i` to variable `map[i]`.
    pub fn embed(&self, target: &Arc<PolyRing>, map: &[usize]) -> Result<Self> {
        if map.len() != self.ring.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            bail!(Structural, "variable map {:?} does not fit {:?} -> {:?}", map, self.ring, target);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut f = [0; MAX_VARS];
            for (i, &j) in map.iter().enumerate() {
                f[j] += e[i];
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            bail!(Domain, "exp needs a zero constant term, got {}", self.constant_term());
        }
        let mut out = Self::one(&self.ring);
        let mut term = Self::one(&self.ring);
        for k in 1..=self.ring.max_total_degree() {
            term = (&term * self).scale(&BigRational::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `log(f)` for `f` with constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            bail!(Domain, "log needs constant term 1, got {}", self.constant_term());
        }
        let g = self - &Self::one(&self.ring);
        let mut out = Self::zero(&self.ring);
        let mut power = Self::one(&self.ring);
        for k in 1..=self.ring.max_total_degree() {
            power = &power * &g;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = &out + &power.scale(&BigRational::new(sign.into(), k.into()));
        }
        Ok(out)
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            bail!(Domain, "series with zero constant term is not invertible");
        }
        let c_inv = c.recip();
        let g = &self.scale(&c_inv) - &Self::one(&self.ring);
        let neg_g = -&g;
        let mut out = Self::one(&self.ring);
        let mut power = Self::one(&self.ring);
        for _ in 1..=self.ring.max_total_degree() {
            power = &power * &neg_g;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out.scale(&c_inv))
    }
}

/// Product in the common ring; mismatched rings are a structural error.
pub fn poly_mul(f: &TruncatedPoly, g: &TruncatedPoly) -> Result<TruncatedPoly> {
    f.checked_mul(g)
}

// Operator forms panic on ring mismatch; use the `checked_*` methods when the
// operands come from different sources.
impl Add for &TruncatedPoly {
    type Output = TruncatedPoly;
    fn add(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &TruncatedPoly {
    type Output = TruncatedPoly;
    fn sub(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &TruncatedPoly {
    type Output = TruncatedPoly;
    fn mul(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &TruncatedPoly {
    type Output = TruncatedPoly;
    fn neg(self) -> TruncatedPoly {
        TruncatedPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by_key(|e| (self.ring.weight(e), core::cmp::Reverse(**e)));
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = (0..self.ring.nvars())
                .filter(|&i| e[i] > 0)
                .map(|i| match e[i] {
                    1 => self.ring.name(i).to_string(),
                    k => alloc::format!("{}^{}", self.ring.name(i), k),
                })
                .collect();
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use proptest::prelude::*;

    fn h(cut: u32) -> Arc<PolyRing> {
        PolyRing::univariate("h", cut)
    }

    fn p(ring: &Arc<PolyRing>, c: &[i64]) -> TruncatedPoly {
        TruncatedPoly::from_coeffs(ring, &c.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn difference_of_squares() {
        let r = h(2);
        assert_eq!(&p(&r, &[1, 1]) * &p(&r, &[1, -1]), p(&r, &[1, 0, -1]));
        let r1 = h(1);
        assert_eq!(&p(&r1, &[1, 1]) * &p(&r1, &[1, -1]), TruncatedPoly::one(&r1));
    }

    #[test]
    fn k3_total_chern_class() {
        let r = h(2);
        assert_eq!(&p(&r, &[1, 4, 6]) * &p(&r, &[1, -4, 16]), p(&r, &[1, 0, 6]));
    }

    #[test]
    fn mismatched_rings_are_structural_errors() {
        let a = p(&h(2), &[1, 1]);
        let b = p(&h(3), &[1, 1]);
        assert!(matches!(poly_mul(&a, &b), Err(crate::Error::Structural(_))));
        let y = PolyRing::univariate("y", 2);
        assert!(a.checked_add(&TruncatedPoly::var(&y, 0)).is_err());
    }

    #[test]
    fn exp_and_log_small_cases() {
        let r = h(3);
        let e = TruncatedPoly::var(&r, 0).exp().unwrap();
        assert_eq!(e.coeff(&[2]), ratio(1, 2));
        assert_eq!(e.coeff(&[3]), ratio(1, 6));
        assert_eq!(TruncatedPoly::zero(&r).exp().unwrap(), TruncatedPoly::one(&r));
        let r2 = h(2);
        let l = p(&r2, &[1, 1]).log().unwrap();
        assert_eq!(l.coeff(&[1]), int(1));
        assert_eq!(l.coeff(&[2]), ratio(-1, 2));
        assert!(TruncatedPoly::one(&r2).log().unwrap().is_zero());
        assert!(p(&r2, &[2, 1]).log().is_err());
        assert!(p(&r2, &[1, 1]).exp().is_err());
    }

    #[test]
    fn log_turns_products_into_sums() {
        let r = h(4);
        let a = p(&r, &[1, 1]);
        let b = p(&r, &[1, 2]);
        let lhs = (&a * &b).log().unwrap();
        let rhs = &a.log().unwrap() + &b.log().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_truncation() {
        let r = PolyRing::graded(&[("p1", 3), ("p2", 1)], &[1, 2], 2).unwrap();
        let p1 = TruncatedPoly::var(&r, 0);
        let p2 = TruncatedPoly::var(&r, 1);
        assert!((&p1 * &p2).is_zero());
        assert_eq!((&p1 * &p1).coeff(&[2, 0]), int(1));
        assert!(p1.pow(3).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let r = h(2);
        assert_eq!(p(&r, &[4, 0, -12]).to_string(), "4 - 12*h^2");
    }

    fn arb_poly(ring: Arc<PolyRing>) -> impl Strategy<Value = TruncatedPoly> {
        proptest::collection::vec((0u32..4, 0u32..4, -5i64..6, 1i64..4), 0..6).prop_map(move |ts| {
            let mut out = TruncatedPoly::zero(&ring);
            for (a, b, n, d) in ts {
                out = &out + &TruncatedPoly::monomial(&ring, &[a, b], ratio(n, d));
            }
            out
        })
    }

    fn two_var() -> Arc<PolyRing> {
        PolyRing::new(&[("h", 3), ("y", 2)]).unwrap()
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(two_var()), g in arb_poly(two_var()), k in arb_poly(two_var())) {
            prop_assert_eq!(&(&f * &g) * &k, &f * &(&g * &k));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &k), &(&f * &g) + &(&f * &k));
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
            for (_, c) in (&f * &g).terms() {
                prop_assert!(is_canonical(c));
                prop_assert!(!c.is_zero());
            }
        }

        #[test]
        fn exp_log_inverse_pair(f in arb_poly(two_var())) {
            let f0 = &f - &TruncatedPoly::constant(f.ring(), f.constant_term());
            prop_assert_eq!(f0.exp().unwrap().log().unwrap(), f0.clone());
            let g = &f0 + &TruncatedPoly::one(f.ring());
            prop_assert_eq!(g.log().unwrap().exp().unwrap(), g.clone());
            prop_assert_eq!(&g * &g.inverse().unwrap(), TruncatedPoly::one(f.ring()));
        }
    }
}
