use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::profile::{chern_to_power_sums, ChernProfile};
use crate::arith::{int, inv_factorial, ratio, PolyRing, TruncatedPoly};
use crate::error::{bail, Result};

/// Multiplicative genera supported by [`evaluate_genus`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenusKind {
    /// `(x/2) / sinh(x/2)`; the index of the spin Dirac operator.
    AHat,
    /// `x / tanh(x)`; the signature.
    L,
    /// `x / (1 - e^(-x))`.
    Todd,
    /// `x (1 + y e^(-x(1+y))) / (1 - e^(-x(1+y)))`, a polynomial in `y`
    /// whose coefficients are the holomorphic Euler characteristics `χ_p`.
    ChiY,
}

/// Characteristic power series `Q(x)` of a genus, in the Chern-root variable
/// `x`, expanded to a fixed degree.
///
/// Â and L are even in `x`; in the Pontryagin variable `w = x²` they read
/// `(√w/2)/sinh(√w/2)` and `√w/tanh(√w)`.
#[derive(Clone, Debug)]
pub struct GenusSpec {
    kind: GenusKind,
    degree: u32,
    series: TruncatedPoly,
    log_series: TruncatedPoly,
}

impl GenusSpec {
    pub fn new(kind: GenusKind, degree: u32) -> Self {
        let series = characteristic_series(kind, degree);
        let log_series = series.log().expect("Q(0) = 1 for every supported genus");
        GenusSpec { kind, degree, series, log_series }
    }

    pub fn kind(&self) -> GenusKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `Q(x)`; bivariate in `(x, y)` for χ_y.
    pub fn series(&self) -> &TruncatedPoly {
        &self.series
    }

    /// Coefficient of `x^k` in `log Q(x)`, as a polynomial in `y` (constant
    /// for the scalar genera): `coeffs[j]` is the `y^j` part.
    pub fn log_coefficient(&self, k: u32) -> Vec<BigRational> {
        match self.kind {
            GenusKind::ChiY => (0..=self.degree).map(|j| self.log_series.coeff(&[k, j])).collect(),
            _ => alloc::vec![self.log_series.coeff(&[k])],
        }
    }
}

fn characteristic_series(kind: GenusKind, degree: u32) -> TruncatedPoly {
    let x = PolyRing::univariate("x", degree);
    let from =
        |f: &dyn Fn(u32) -> BigRational| TruncatedPoly::from_coeffs(&x, &(0..=degree).map(f).collect::<Vec<_>>());
    let even = |k: u32, v: BigRational| if k.is_multiple_of(2) { v } else { BigRational::zero() };
    match kind {
        GenusKind::AHat => {
            // sinh(x/2)/(x/2) = Σ (x/2)^(2j) / (2j+1)!
            from(&|k| even(k, inv_factorial(k + 1) * ratio(1, 1i64 << k))).inverse().unwrap()
        }
        GenusKind::L => {
            let cosh = from(&|k| even(k, inv_factorial(k)));
            let sinh_over_x = from(&|k| even(k, inv_factorial(k + 1)));
            &cosh * &sinh_over_x.inverse().unwrap()
        }
        GenusKind::Todd => todd_series(&x),
        GenusKind::ChiY => {
            // Q_y(x) = Td(x(1+y)) - x y
            let xy = PolyRing::new(&[("x", degree), ("y", degree)]).unwrap();
            let td = todd_series(&x);
            let one_plus_y = &TruncatedPoly::one(&xy) + &TruncatedPoly::var(&xy, 1);
            let mut out = TruncatedPoly::zero(&xy);
            let mut scale = TruncatedPoly::one(&xy);
            for k in 0..=degree {
                let term = TruncatedPoly::monomial(&xy, &[k, 0], td.coeff(&[k]));
                out = &out + &(&term * &scale);
                scale = &scale * &one_plus_y;
            }
            &out - &TruncatedPoly::monomial(&xy, &[1, 1], int(1))
        }
    }
}

fn todd_series(x: &Arc<PolyRing>) -> TruncatedPoly {
    // (1 - e^(-x)) / x = Σ (-1)^j x^j / (j+1)!
    let d = x.cutoff(0);
    let coeffs: Vec<BigRational> = (0..=d)
        .map(|j| {
            let c = inv_factorial(j + 1);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    TruncatedPoly::from_coeffs(x, &coeffs).inverse().unwrap()
}

/// Value of a genus on a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusValue {
    Number(BigRational),
    /// Coefficients of `y^0, …, y^n` (χ_y only).
    Polynomial(Vec<BigRational>),
}

impl GenusValue {
    pub fn number(&self) -> Option<&BigRational> {
        match self {
            GenusValue::Number(q) => Some(q),
            GenusValue::Polynomial(_) => None,
        }
    }

    pub fn polynomial(&self) -> Option<&[BigRational]> {
        match self {
            GenusValue::Polynomial(p) => Some(p),
            GenusValue::Number(_) => None,
        }
    }
}

/// Genus class `Π Q(x_i) = exp(Σ_k a_k s_k)` in the cohomology ring of `c`.
/// Not available for χ_y, whose class needs the extra `y` variable.
pub fn genus_class(spec: &GenusSpec, c: &ChernProfile) -> Result<TruncatedPoly> {
    if spec.kind == GenusKind::ChiY {
        bail!(Structural, "the χ_y class lives in a ring with an extra variable; use evaluate_genus");
    }
    check_degree(spec, c)?;
    let s = chern_to_power_sums(c);
    let mut log = TruncatedPoly::zero(c.ring());
    for (k, sk) in (1..).zip(&s) {
        let a = &spec.log_coefficient(k)[0];
        if !a.is_zero() {
            log = &log + &sk.scale(a);
        }
    }
    log.exp()
}

fn check_degree(spec: &GenusSpec, c: &ChernProfile) -> Result<()> {
    let n = c.complex_dimension();
    if spec.degree < n {
        bail!(Range, "genus series known to degree {} but profile has dimension {n}", spec.degree);
    }
    Ok(())
}

/// Value of the multiplicative sequence on the tangent bundle, paired with the
/// fundamental class.
pub fn evaluate_genus(spec: &GenusSpec, c: &ChernProfile) -> Result<GenusValue> {
    if spec.kind != GenusKind::ChiY {
        let class = genus_class(spec, c)?;
        return Ok(GenusValue::Number(c.integrate(&class)?));
    }
    check_degree(spec, c)?;
    let n = c.complex_dimension();
    let gens = c.factor_dimensions().len();
    let mut vars: Vec<(&str, u32)> = (0..gens).map(|i| (c.ring().name(i), c.ring().cutoff(i))).collect();
    vars.push(("y", n));
    let ring = PolyRing::new(&vars)?;
    let into: Vec<usize> = (0..gens).collect();
    let s = chern_to_power_sums(c);
    let mut log = TruncatedPoly::zero(&ring);
    for (k, sk) in (1..).zip(&s) {
        let mut a = TruncatedPoly::zero(&ring);
        for (j, cj) in spec.log_coefficient(k).into_iter().enumerate() {
            let mut e = alloc::vec![0u32; gens];
            e.push(j as u32);
            a = &a + &TruncatedPoly::monomial(&ring, &e, cj);
        }
        log = &log + &(&a * &sk.embed(&ring, &into)?);
    }
    let class = log.exp()?;
    let top = c.top_exponent();
    let coeffs = (0..=n)
        .map(|j| {
            let mut e = top.clone();
            e.push(j);
            class.coeff(&e) * c.pairing()
        })
        .collect();
    Ok(GenusValue::Polynomial(coeffs))
}

/// Shorthand for scalar genera.
pub fn genus_number(kind: GenusKind, c: &ChernProfile) -> Result<BigRational> {
    let spec = GenusSpec::new(kind, c.complex_dimension());
    match evaluate_genus(&spec, c)? {
        GenusValue::Number(q) => Ok(q),
        GenusValue::Polynomial(_) => bail!(Domain, "χ_y has no scalar value; evaluate it at a point"),
    }
}
