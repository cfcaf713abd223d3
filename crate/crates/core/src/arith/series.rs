use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::{PolyRing, TruncatedPoly};
use crate::error::{bail, Result};

/// `exp(f)` truncated to the ring of `f`.
pub fn series_exp(f: &TruncatedPoly) -> Result<TruncatedPoly> {
    f.exp()
}

/// `log(f)` truncated to the ring of `f`.
pub fn series_log(f: &TruncatedPoly) -> Result<TruncatedPoly> {
    f.log()
}

/// Power-series expansion of `numerator / denominator` in one variable,
/// computed by long division up to `cutoff`.
///
/// Numerator and denominator are taken as exact polynomials: their ring must
/// be wide enough to hold them untruncated.
#[derive(Clone, Debug)]
pub struct RationalFunctionSeries {
    numerator: TruncatedPoly,
    denominator: TruncatedPoly,
    cutoff: u32,
    expansion: Vec<BigRational>,
}

impl RationalFunctionSeries {
    pub fn new(numerator: TruncatedPoly, denominator: TruncatedPoly, cutoff: u32) -> Result<Self> {
        if numerator.ring().nvars() != 1 || numerator.ring() != denominator.ring() {
            bail!(Structural, "rational series need numerator and denominator in one common variable");
        }
        let b0 = denominator.constant_term();
        if b0.is_zero() {
            bail!(Domain, "denominator has zero constant term");
        }
        let a = |k: u32| numerator.coeff(&[k]);
        let b = |k: u32| denominator.coeff(&[k]);
        let deg_b = denominator.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
        let mut e: Vec<BigRational> = Vec::with_capacity(cutoff as usize + 1);
        for k in 0..=cutoff {
            let mut acc = a(k);
            for j in 1..=k.min(deg_b) {
                acc -= b(j) * &e[(k - j) as usize];
            }
            e.push(acc / &b0);
        }
        Ok(RationalFunctionSeries { numerator, denominator, cutoff, expansion: e })
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn numerator(&self) -> &TruncatedPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &TruncatedPoly {
        &self.denominator
    }

    /// Exact coefficient of `z^k`.
    pub fn coefficient(&self, k: u32) -> Result<BigRational> {
        match self.expansion.get(k as usize) {
            Some(c) => Ok(c.clone()),
            None => bail!(Range, "coefficient {k} requested beyond expansion cutoff {}", self.cutoff),
        }
    }

    /// The expansion as a polynomial truncated at the cutoff.
    pub fn expansion(&self) -> TruncatedPoly {
        let ring: Arc<PolyRing> = PolyRing::univariate(self.numerator.ring().name(0), self.cutoff);
        TruncatedPoly::from_coeffs(&ring, &self.expansion)
    }
}

/// Coefficient of `z^k` in the expansion of `s`.
pub fn series_coefficient(s: &RationalFunctionSeries, k: u32) -> Result<BigRational> {
    s.coefficient(k)
}
