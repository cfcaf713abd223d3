//! Complete intersections `X_n(d_1, …, d_r) ⊂ CP^{n+r}`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{int, to_i64, PolyRing, RationalFunctionSeries, TruncatedPoly};
use crate::charclass::{euler_characteristic, hodge_from_chi_y, rs_index, signature, ChernProfile};
use crate::error::{bail, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CiSpec {
    pub n: u32,
    pub degrees: Vec<u32>,
}

impl CiSpec {
    pub fn new(n: u32, degrees: &[u32]) -> Result<Self> {
        if n == 0 {
            bail!(Domain, "complete intersections need complex dimension n >= 1");
        }
        if degrees.is_empty() {
            bail!(Domain, "at least one defining degree is required");
        }
        if degrees.contains(&0) {
            bail!(Domain, "degrees must be at least 1, got {degrees:?}");
        }
        Ok(CiSpec { n, degrees: degrees.to_vec() })
    }

    pub fn codimension(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

impl core::fmt::Display for CiSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "X_{}(", self.n)?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum C1Sign {
    Positive,
    Zero,
    Negative,
}

impl C1Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            C1Sign::Positive => "positive",
            C1Sign::Zero => "zero",
            C1Sign::Negative => "negative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiManifold {
    pub spec: CiSpec,
    pub profile: ChernProfile,
    pub total_degree: u32,
    pub spin: bool,
    pub c1_sign: C1Sign,
}

impl CiManifold {
    /// Coefficient of `h` in `c_1`: `n + r + 1 − d`.
    pub fn c1_coefficient(&self) -> i64 {
        (self.spec.n + self.spec.codimension() + 1) as i64 - self.total_degree as i64
    }
}

/// Chern classes from `c(TX) = (1+h)^{n+r+1} / Π(1 + d_j h)` and pairing
/// `h^n[X] = Π d_j`.
pub fn build_ci(spec: CiSpec) -> Result<CiManifold> {
    let n = spec.n;
    let r = spec.codimension();
    let ring = PolyRing::univariate("h", n);
    let one = TruncatedPoly::one(&ring);
    let h = TruncatedPoly::var(&ring, 0);
    let mut total = (&one + &h).pow(n + r + 1);
    for &d in &spec.degrees {
        total = &total * &(&one + &h.scale(&int(d as i64))).inverse()?;
    }
    let chern = (1..=n).map(|k| total.coeff(&[k])).collect();
    let pairing = spec.degrees.iter().fold(BigInt::from(1), |acc, &d| acc * d);
    let profile = ChernProfile::new(n, chern, BigRational::from_integer(pairing))?;
    let d = spec.total_degree();
    let c1 = (n + r + 1) as i64 - d as i64;
    // w_2 = c_1 mod 2, and on a curve c_1[X] = 2 - 2g is even
    let spin = n == 1 || ((n + r) as i64 - d as i64).rem_euclid(2) == 1;
    let c1_sign = match c1.signum() {
        1 => C1Sign::Positive,
        0 => C1Sign::Zero,
        _ => C1Sign::Negative,
    };
    Ok(CiManifold { spec, profile, total_degree: d, spin, c1_sign })
}

/// The quadric `Q_m = X_m(2)`.
pub fn quadric(m: u32) -> Result<CiManifold> {
    build_ci(CiSpec::new(m, &[2])?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiInvariants {
    pub euler: BigRational,
    /// Only for real dimension divisible by four.
    pub signature: Option<BigRational>,
    pub ahat: BigRational,
    pub ind_d: BigRational,
    pub ind_d_tm: BigRational,
    pub ind_q: BigRational,
}

pub fn ci_invariants(m: &CiManifold) -> CiInvariants {
    let p = &m.profile;
    let idx = rs_index(p);
    CiInvariants {
        euler: euler_characteristic(p),
        signature: m.spec.n.is_multiple_of(2).then(|| signature(p)),
        ahat: idx.ind_d.clone(),
        ind_d: idx.ind_d,
        ind_d_tm: idx.ind_d_tm,
        ind_q: idx.ind_q,
    }
}

fn binomial_poly(ring: &alloc::sync::Arc<PolyRing>, d: u32, sign: i64) -> TruncatedPoly {
    // (1 + sign·z)^d
    let mut c = BigInt::from(1);
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let s = if sign < 0 && k % 2 == 1 { -c.clone() } else { c.clone() };
        coeffs.push(BigRational::from_integer(s));
        c = c * (d - k) / (k + 1);
    }
    TruncatedPoly::from_coeffs(ring, &coeffs)
}

/// Signature of the hypersurface `X_m(d)` as the coefficient of `z^{m+1}` in
/// `[(1+z)^d − (1−z)^d] / [(1 − z²)((1+z)^d + (1−z)^d)]`.
pub fn fermat_signature(m: u32, d: u32) -> Result<BigRational> {
    if m == 0 || d == 0 {
        bail!(Domain, "fermat_signature needs m >= 1 and d >= 1");
    }
    let cut = (d + 2).max(m + 1);
    let ring = PolyRing::univariate("z", cut);
    let plus = binomial_poly(&ring, d, 1);
    let minus = binomial_poly(&ring, d, -1);
    let one_minus_z2 = TruncatedPoly::from_coeffs(&ring, &[int(1), int(0), int(-1)]);
    let s = RationalFunctionSeries::new(&plus - &minus, &one_minus_z2 * &(&plus + &minus), m + 1)?;
    s.coefficient(m + 1)
}

/// Hodge numbers `h^{p,q}`, `0 <= p, q <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    pub n: u32,
    pub entries: Vec<Vec<i64>>,
}

impl HodgeTable {
    pub fn get(&self, p: u32, q: u32) -> i64 {
        self.entries[p as usize][q as usize]
    }

    pub fn betti(&self, k: u32) -> i64 {
        (0..=k.min(self.n)).filter(|&p| k - p <= self.n).map(|p| self.get(p, k - p)).sum()
    }

    pub fn euler(&self) -> i64 {
        (0..=2 * self.n).map(|k| if k % 2 == 0 { self.betti(k) } else { -self.betti(k) }).sum()
    }
}

/// Hodge table from `χ_p = Σ_q (−1)^q h^{p,q}`, using that off the middle row
/// `h^{p,q} = δ_{p,q}`.
pub fn hodge_numbers(m: &CiManifold) -> Result<HodgeTable> {
    let n = m.spec.n;
    let chi = hodge_from_chi_y(&m.profile);
    let mut entries = alloc::vec![alloc::vec![0i64; n as usize + 1]; n as usize + 1];
    for p in 0..=n {
        let q = n - p;
        let sign = |k: u32| if k.is_multiple_of(2) { int(1) } else { int(-1) };
        let value = if 2 * p == n {
            sign(p) * &chi[p as usize]
        } else {
            entries[p as usize][p as usize] = 1;
            sign(q) * (&chi[p as usize] - sign(p))
        };
        let Some(v) = to_i64(&value).filter(|v| *v >= 0) else {
            bail!(Consistency, "{}: h^{{{p},{q}}} solved to {value}", m.spec);
        };
        entries[p as usize][q as usize] = v;
    }
    for p in 0..=n as usize {
        for q in 0..=n as usize {
            let (a, b, c) = (entries[p][q], entries[q][p], entries[n as usize - p][n as usize - q]);
            if a != b || a != c {
                bail!(Consistency, "{}: Hodge symmetry fails at ({p},{q})", m.spec);
            }
        }
    }
    let table = HodgeTable { n, entries };
    if int(table.euler()) != euler_characteristic(&m.profile) {
        bail!(Consistency, "{}: Hodge table Euler characteristic disagrees with c_n", m.spec);
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelCase {
    /// `c_1 = 0`: the holonomy is SU(n) and the kernel is a sum of Hodge
    /// numbers.
    CalabiYau,
    NegativeC1,
    PositiveC1,
    NotSpin,
}

impl KernelCase {
    pub fn as_str(self) -> &'static str {
        match self {
            KernelCase::CalabiYau => "calabi-yau",
            KernelCase::NegativeC1 => "negative-c1",
            KernelCase::PositiveC1 => "positive-c1",
            KernelCase::NotSpin => "not-spin",
        }
    }
}

/// What can be said about the kernel of the Rarita-Schwinger operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub case: KernelCase,
    /// Exact kernel dimension, Calabi-Yau case only.
    pub dim_ker_q: Option<i64>,
    pub ind_q: BigRational,
    pub ind_d: BigRational,
    /// `|Â|` from harmonic spinors pushed into `ker Q`, or `|ind Q|`.
    pub kernel_lower_bound: Option<BigRational>,
    /// Harmonic spinors exist, so `ker Q` is nontrivial on the image of the
    /// twistor-type map `P`.
    pub nontrivial_on_image_of_p: bool,
    pub ind_q_differs_from_ind_d: bool,
    pub note: String,
}

/// `dim ker Q = −2 + 2 Σ_{p=1}^{n−1} h^{1,p}` and
/// `ind Q = 2 + 2 Σ (−1)^p h^{1,p}` (even `n`; zero for odd `n`).
pub fn cy_kernel_and_index(h: &HodgeTable) -> Result<(i64, i64)> {
    let n = h.n;
    if n < 2 {
        bail!(NotApplicable, "the Hodge-number kernel formula needs complex dimension at least 2");
    }
    let sum: i64 = (1..n).map(|p| h.get(1, p)).sum();
    let alt: i64 = (1..n).map(|p| if p % 2 == 0 { h.get(1, p) } else { -h.get(1, p) }).sum();
    let ind = if n.is_multiple_of(2) { 2 + 2 * alt } else { 0 };
    Ok((-2 + 2 * sum, ind))
}

pub fn ci_rs_kernel(m: &CiManifold) -> Result<KernelReport> {
    let inv = ci_invariants(m);
    let mut report = KernelReport {
        case: KernelCase::NotSpin,
        dim_ker_q: None,
        ind_q_differs_from_ind_d: inv.ind_q != inv.ind_d,
        ind_q: inv.ind_q.clone(),
        ind_d: inv.ind_d.clone(),
        kernel_lower_bound: None,
        nontrivial_on_image_of_p: false,
        note: String::new(),
    };
    if !m.spin {
        report.note = "not spin: no spin-3/2 bundle".into();
        return Ok(report);
    }
    match m.c1_sign {
        C1Sign::Zero => {
            report.case = KernelCase::CalabiYau;
            if m.spec.n < 2 {
                report.note = "elliptic curve: the Hodge-number formula needs n >= 2".into();
                return Ok(report);
            }
            let (ker, ind) = cy_kernel_and_index(&hodge_numbers(m)?)?;
            if int(ind) != inv.ind_q {
                bail!(
                    Consistency,
                    "{}: Hodge-number index {ind} but characteristic-number index {}",
                    m.spec,
                    inv.ind_q
                );
            }
            report.dim_ker_q = Some(ker);
            report.note = "Ricci-flat: ker Q is exactly the harmonic-form count".into();
        }
        C1Sign::Negative => {
            report.case = KernelCase::NegativeC1;
            if !inv.ahat.is_zero() {
                report.nontrivial_on_image_of_p = true;
                report.kernel_lower_bound = Some(inv.ahat.abs());
                report.note = "harmonic spinors exist, so ker Q is nontrivial on Im P".into();
            } else if !inv.ind_q.is_zero() {
                report.kernel_lower_bound = Some(inv.ind_q.abs());
                report.note = "nonzero index".into();
            } else {
                report.note = "no conclusion from index data".into();
            }
        }
        C1Sign::Positive => {
            report.case = KernelCase::PositiveC1;
            if !inv.ind_q.is_zero() {
                report.kernel_lower_bound = Some(inv.ind_q.abs());
                report.note = "nonzero index".into();
            } else {
                report.note = "no conclusion from index data".into();
            }
        }
    }
    Ok(report)
}

/// Informational only: what is known about Kähler-Einstein metrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KahlerEinstein {
    /// Negative `c_1`: Aubin-Yau.
    NegativeScalar,
    /// `c_1 = 0`: Ricci-flat by Yau.
    RicciFlat,
    /// Hypersurface `X_m(d)` with `(m+1)/2 <= d <= m+1`.
    PositiveKnown,
    Unknown,
}

impl KahlerEinstein {
    pub fn as_str(self) -> &'static str {
        match self {
            KahlerEinstein::NegativeScalar => "negative scalar curvature (Aubin-Yau)",
            KahlerEinstein::RicciFlat => "Ricci-flat (Yau)",
            KahlerEinstein::PositiveKnown => "positive scalar curvature (Tian/Nadel window)",
            KahlerEinstein::Unknown => "unknown",
        }
    }
}

pub fn kahler_einstein(m: &CiManifold) -> KahlerEinstein {
    match m.c1_sign {
        C1Sign::Negative => KahlerEinstein::NegativeScalar,
        C1Sign::Zero => KahlerEinstein::RicciFlat,
        C1Sign::Positive => {
            let (n, d) = (m.spec.n, m.total_degree);
            if m.spec.degrees.len() == 1 && n < 2 * d && d <= n + 1 {
                KahlerEinstein::PositiveKnown
            } else {
                KahlerEinstein::Unknown
            }
        }
    }
}

/// Outcome of testing `Â(X_{2n}(d_1..d_r)) ≠ 0 ⇔ 2n + r + 1 < d` for `r − d`
/// odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AhatScan {
    pub checked: usize,
    pub counterexamples: Vec<(CiSpec, BigRational)>,
}

/// Scan `X_{2n}(d)` with `1 <= n <= max_half_dim`, `1 <= r <= max_codim`
/// and nondecreasing degrees `2 <= d_i <= max_degree`.
pub fn ahat_vanishing_scan(max_half_dim: u32, max_codim: u32, max_degree: u32) -> Result<AhatScan> {
    fn degree_lists(r: u32, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == r {
            out.push(cur.clone());
            return;
        }
        for d in lo..=hi {
            cur.push(d);
            degree_lists(r, d, hi, cur, out);
            cur.pop();
        }
    }
    let mut scan = AhatScan { checked: 0, counterexamples: Vec::new() };
    for half in 1..=max_half_dim {
        for r in 1..=max_codim {
            let mut lists = Vec::new();
            degree_lists(r, 2, max_degree, &mut Vec::new(), &mut lists);
            for degrees in lists {
                let d: u32 = degrees.iter().sum();
                if (r + d).is_multiple_of(2) {
                    continue;
                }
                let m = build_ci(CiSpec::new(2 * half, &degrees)?)?;
                let ahat = rs_index(&m.profile).ind_d;
                let predicted = 2 * half + r + 1 < d;
                scan.checked += 1;
                if predicted == ahat.is_zero() {
                    scan.counterexamples.push((m.spec, ahat));
                }
            }
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: u32, d: &[u32]) -> CiManifold {
        build_ci(CiSpec::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn k3() {
        let m = x(2, &[4]);
        assert_eq!(m.profile, ChernProfile::from_ints(2, &[0, 6], 4).unwrap());
        assert!(m.spin);
        assert_eq!(m.c1_sign, C1Sign::Zero);
        let h = hodge_numbers(&m).unwrap();
        assert_eq!(h.get(1, 1), 20);
        let k = ci_rs_kernel(&m).unwrap();
        assert_eq!(k.dim_ker_q, Some(38));
        assert_eq!(k.ind_q, int(-38));
    }

    #[test]
    fn classification() {
        let m = x(4, &[4]);
        assert!(m.spin);
        assert_eq!(m.c1_sign, C1Sign::Positive);
        let m = x(2, &[6]);
        assert!(m.spin);
        assert_eq!(m.c1_sign, C1Sign::Negative);
        assert!(!x(2, &[3]).spin);
        assert!(x(1, &[4]).spin);
        assert!(CiSpec::new(0, &[2]).is_err());
        assert!(CiSpec::new(2, &[]).is_err());
        assert!(CiSpec::new(2, &[0]).is_err());
    }

    #[test]
    fn fermat_invariants() {
        let inv = ci_invariants(&x(4, &[4]));
        assert_eq!(inv.signature, Some(int(100)));
        assert_eq!(inv.ahat, int(0));
        assert_eq!(inv.ind_q, int(-100));
        assert_eq!(ci_invariants(&x(6, &[4])).signature, Some(int(-576)));
        assert_eq!(ci_invariants(&x(6, &[6])).signature, Some(int(-12544)));
        let inv = ci_invariants(&x(4, &[8]));
        assert_eq!((inv.ahat, inv.signature), (int(12), Some(int(4040))));
        let inv = ci_invariants(&x(6, &[10]));
        assert_eq!((inv.ahat, inv.signature), (int(16), Some(int(-505088))));
        assert_eq!(ci_invariants(&x(2, &[6])).ahat, int(8));
        assert_eq!(ci_invariants(&x(3, &[5])).signature, None);
    }

    #[test]
    fn fermat_series() {
        assert_eq!(fermat_signature(4, 4).unwrap(), int(100));
        assert_eq!(fermat_signature(4, 2).unwrap(), int(2));
        assert_eq!(fermat_signature(6, 2).unwrap(), int(0));
        assert!(fermat_signature(0, 2).is_err());
    }

    #[test]
    fn fermat_series_matches_l_genus() {
        for m in 2..=8 {
            for d in 2..=10 {
                let via_l = signature(&x(m, &[d]).profile);
                assert_eq!(fermat_signature(m, d).unwrap(), via_l, "X_{m}({d})");
            }
        }
    }

    #[test]
    fn calabi_yau_hodge_numbers() {
        let h = hodge_numbers(&x(3, &[5])).unwrap();
        assert_eq!((h.get(1, 1), h.get(1, 2)), (1, 101));
        assert_eq!(ci_rs_kernel(&x(3, &[5])).unwrap().dim_ker_q, Some(202));
        let h = hodge_numbers(&x(4, &[6])).unwrap();
        assert_eq!((h.get(1, 1), h.get(1, 2), h.get(1, 3)), (1, 0, 426));
        assert_eq!(ci_rs_kernel(&x(4, &[6])).unwrap().dim_ker_q, Some(852));
        // other CY complete intersections: index route agrees inside ci_rs_kernel
        for d in [&[3u32, 3][..], &[2, 4], &[2, 2, 3], &[2, 2, 2, 2]] {
            let m = x(3, d);
            assert_eq!(m.c1_sign, C1Sign::Zero);
            assert!(ci_rs_kernel(&m).is_ok());
        }
        for d in [&[2u32, 5][..], &[3, 4], &[2, 2, 4], &[2, 3, 3]] {
            assert!(ci_rs_kernel(&x(4, d)).is_ok());
        }
    }

    #[test]
    fn hodge_off_middle_is_diagonal() {
        let h = hodge_numbers(&x(4, &[4])).unwrap();
        for p in 0..=4 {
            for q in 0..=4 {
                if p + q != 4 {
                    assert_eq!(h.get(p, q), (p == q) as i64);
                }
            }
        }
    }

    #[test]
    fn negative_c1_harmonic_spinors() {
        for (n, d) in [(2, 6), (4, 8), (6, 10)] {
            let k = ci_rs_kernel(&x(n, &[d])).unwrap();
            assert_eq!(k.case, KernelCase::NegativeC1);
            assert!(k.nontrivial_on_image_of_p);
            assert!(k.ind_q_differs_from_ind_d);
        }
        let k = ci_rs_kernel(&x(4, &[4])).unwrap();
        assert_eq!(k.kernel_lower_bound, Some(int(100)));
        assert_eq!(ci_rs_kernel(&x(2, &[3])).unwrap().case, KernelCase::NotSpin);
    }

    #[test]
    fn kahler_einstein_flags() {
        assert_eq!(kahler_einstein(&x(4, &[4])), KahlerEinstein::PositiveKnown);
        assert_eq!(kahler_einstein(&x(6, &[2])), KahlerEinstein::Unknown);
        assert_eq!(kahler_einstein(&x(2, &[6])), KahlerEinstein::NegativeScalar);
        assert_eq!(kahler_einstein(&x(3, &[5])), KahlerEinstein::RicciFlat);
    }

    #[test]
    fn ahat_equivalence_on_grid() {
        let scan = ahat_vanishing_scan(3, 2, 9).unwrap();
        assert!(scan.checked > 50);
        // the strict inequality misses the Calabi-Yau boundary, where Â = 2
        assert_eq!(scan.counterexamples.len(), 9);
        for (spec, ahat) in &scan.counterexamples {
            assert_eq!(spec.n + spec.codimension() + 1, spec.total_degree());
            assert_eq!(ahat, &int(2));
        }
    }

    #[test]
    fn quadric_index() {
        let q = quadric(4).unwrap();
        assert_eq!(ci_invariants(&q).ind_q, int(-2));
        assert_eq!(ci_invariants(&q).signature, Some(int(2)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn c1_and_pairing(n in 1u32..6, degrees in proptest::collection::vec(1u32..7, 1..4)) {
            let m = x(n, &degrees);
            let r = degrees.len() as i64;
            prop_assert_eq!(m.profile.chern_coefficients().unwrap()[0].clone(), int(n as i64 + r + 1 - m.total_degree as i64));
            let prod: i64 = degrees.iter().map(|&d| d as i64).product();
            prop_assert_eq!(m.profile.pairing().clone(), int(prod));
        }

        #[test]
        fn spin_signature_divisible_by_16(n in prop_oneof![Just(2u32), Just(6)], degrees in proptest::collection::vec(1u32..8, 1..3)) {
            let m = x(n, &degrees);
            prop_assume!(m.spin);
            let sigma = signature(&m.profile);
            prop_assert!((sigma / int(16)).is_integer());
            let idx = rs_index(&m.profile);
            if n == 6 {
                prop_assert!((idx.ind_d / int(2)).is_integer());
                prop_assert!((idx.ind_q / int(2)).is_integer());
            }
        }

        #[test]
        fn chi_p_alternating_sum_is_euler(n in 1u32..5, degrees in proptest::collection::vec(1u32..6, 1..3)) {
            let m = x(n, &degrees);
            let chi = hodge_from_chi_y(&m.profile);
            let alt = crate::charclass::eval_polynomial(&chi, &int(-1));
            prop_assert_eq!(alt, euler_characteristic(&m.profile));
        }
    }
}
