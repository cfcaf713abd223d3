use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::genus::{GenusKind, GenusSpec};
use super::profile::{elementary_to_power_sums, partitions, Partition};
use crate::arith::linalg::{solve, SolutionSet};
use crate::arith::{int, inv_factorial, ratio, PolyRing, TruncatedPoly};
use crate::error::{bail, Result};

/// A characteristic number written as a linear functional on the Pontryagin
/// numbers of a given real dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub name: String,
    /// Coefficient of each basis monomial, in the order of
    /// [`DimensionIdentities::basis`].
    pub coefficients: Vec<BigRational>,
}

/// Attempt to write `target` as `Σ expected_i · terms_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelation {
    pub target: String,
    pub terms: Vec<String>,
    pub expected: Vec<BigRational>,
    /// Every solution of the linear system.
    pub solution: SolutionSet,
    /// `target − Σ expected_i · terms_i` on the monomial basis.
    pub residual: Vec<BigRational>,
}

impl LinearRelation {
    /// Whether the expected coefficients satisfy the relation exactly.
    pub fn holds(&self) -> bool {
        self.residual.iter().all(Zero::is_zero)
    }

    /// The found coefficients when the solution is unique.
    pub fn unique_solution(&self) -> Option<&[BigRational]> {
        if self.solution.is_unique() {
            self.solution.particular.as_deref()
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionIdentities {
    pub real_dimension: u32,
    pub basis: Vec<Partition>,
    pub functionals: Vec<Functional>,
    pub relations: Vec<LinearRelation>,
}

impl DimensionIdentities {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(LinearRelation::holds)
    }

    pub fn functional(&self, name: &str) -> Option<&Functional> {
        self.functionals.iter().find(|f| f.name == name)
    }
}

/// Universal characteristic classes of a real `4m`-dimensional manifold in
/// `Q[p_1, …, p_m]`, graded with `deg p_k = k`.
struct Universal {
    ring: alloc::sync::Arc<PolyRing>,
    m: u32,
    sigma: Vec<TruncatedPoly>,
}

impl Universal {
    fn new(m: u32) -> Result<Self> {
        let names: Vec<String> = (1..=m).map(|k| format!("p{k}")).collect();
        let vars: Vec<(&str, u32)> = names.iter().map(|n| (n.as_str(), m)).collect();
        let weights: Vec<u32> = (1..=m).collect();
        let ring = PolyRing::graded(&vars, &weights, m)?;
        let mut e = alloc::vec![TruncatedPoly::one(&ring)];
        e.extend((0..m as usize).map(|i| TruncatedPoly::var(&ring, i)));
        // σ_k = Σ x_j^{2k}, the power sums of the squared roots
        let sigma = elementary_to_power_sums(&e);
        Ok(Universal { ring, m, sigma })
    }

    fn even_genus(&self, kind: GenusKind) -> Result<TruncatedPoly> {
        let spec = GenusSpec::new(kind, 2 * self.m);
        let mut log = TruncatedPoly::zero(&self.ring);
        for (k, s) in (1..).zip(&self.sigma) {
            log = &log + &s.scale(&spec.log_coefficient(2 * k)[0]);
        }
        log.exp()
    }

    fn ch_complexified(&self) -> TruncatedPoly {
        let mut ch = TruncatedPoly::constant(&self.ring, int(4 * self.m as i64));
        for (k, s) in (1..).zip(&self.sigma) {
            ch = &ch + &s.scale(&(inv_factorial(2 * k) * int(2)));
        }
        ch
    }

    fn top_coefficients(&self, class: &TruncatedPoly, basis: &[Partition]) -> Vec<BigRational> {
        basis
            .iter()
            .map(|part| {
                let mut e = alloc::vec![0u32; self.m as usize];
                for &i in part {
                    e[i as usize - 1] += 1;
                }
                class.coeff(&e)
            })
            .collect()
    }
}

fn relation(target: &Functional, terms: &[&Functional], expected: Vec<BigRational>) -> LinearRelation {
    let rows = target.coefficients.len();
    let a: Vec<Vec<BigRational>> =
        (0..rows).map(|i| terms.iter().map(|f| f.coefficients[i].clone()).collect()).collect();
    let solution = solve(&a, &target.coefficients, terms.len());
    let residual = (0..rows)
        .map(|i| {
            let mut r = target.coefficients[i].clone();
            for (f, c) in terms.iter().zip(&expected) {
                r -= &f.coefficients[i] * c;
            }
            r
        })
        .collect();
    LinearRelation {
        target: target.name.clone(),
        terms: terms.iter().map(|f| f.name.clone()).collect(),
        expected,
        solution,
        residual,
    }
}

/// Express `ind Q`, `Â` and `σ` as functionals on the Pontryagin numbers of
/// real dimension 4, 8 or 12 and test the known linear relations between
/// them.
///
/// In dimension 8 the Euler characteristic is represented by
/// `χ = −(p_1² − 4p_2)/8`, valid for manifolds with a parallel spinor and
/// holonomy Spin(7).
///
/// In dimension 12 there are three Pontryagin numbers but only two terms, so
/// the relation is tested by substitution rather than by inverting.
pub fn verify_dimension_identities(real_dimension: u32) -> Result<DimensionIdentities> {
    if !matches!(real_dimension, 4 | 8 | 12) {
        bail!(Domain, "dimension identities are tabulated for real dimension 4, 8 and 12, not {real_dimension}");
    }
    let m = real_dimension / 4;
    let u = Universal::new(m)?;
    let basis = partitions(m);
    let ahat = u.even_genus(GenusKind::AHat)?;
    let l = u.even_genus(GenusKind::L)?;
    let ch = u.ch_complexified();
    let ind_q = &ahat * &(&ch + &TruncatedPoly::one(&u.ring));

    let f = |name: &str, class: &TruncatedPoly| Functional {
        name: name.into(),
        coefficients: u.top_coefficients(class, &basis),
    };
    let mut functionals = alloc::vec![f("ind_q", &ind_q), f("ahat", &ahat), f("sigma", &l)];
    let relations = match m {
        1 => alloc::vec![
            relation(&functionals[0], &[&functionals[1]], alloc::vec![int(-19)]),
            relation(&functionals[0], &[&functionals[2]], alloc::vec![ratio(19, 8)]),
        ],
        2 => {
            let p1 = TruncatedPoly::var(&u.ring, 0);
            let p2 = TruncatedPoly::var(&u.ring, 1);
            let chi = (&(&p1 * &p1) - &p2.scale(&int(4))).scale(&ratio(-1, 8));
            functionals.push(f("chi", &chi));
            let [q, a, s, c] = [&functionals[0], &functionals[1], &functionals[2], &functionals[3]];
            alloc::vec![
                relation(q, &[a, s], alloc::vec![int(25), int(-1)]),
                relation(q, &[a, c], alloc::vec![int(9), ratio(-1, 3)]),
                relation(c, &[a, s], alloc::vec![int(-48), int(3)]),
            ]
        }
        _ => alloc::vec![relation(
            &functionals[0],
            &[&functionals[1], &functionals[2]],
            alloc::vec![int(5), ratio(1, 8)]
        )],
    };
    Ok(DimensionIdentities { real_dimension, basis, functionals, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim4() {
        let r = verify_dimension_identities(4).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.relations[0].unique_solution().unwrap(), &[int(-19)][..]);
        assert_eq!(r.relations[1].unique_solution().unwrap(), &[ratio(19, 8)][..]);
        // Â = −p1/24, σ = p1/3
        assert_eq!(r.functional("ahat").unwrap().coefficients, alloc::vec![ratio(-1, 24)]);
        assert_eq!(r.functional("sigma").unwrap().coefficients, alloc::vec![ratio(1, 3)]);
    }

    #[test]
    fn dim8() {
        let r = verify_dimension_identities(8).unwrap();
        assert!(r.all_hold(), "{:?}", r.relations);
        assert_eq!(r.relations[0].unique_solution().unwrap(), &[int(25), int(-1)][..]);
        assert_eq!(r.relations[1].unique_solution().unwrap(), &[int(9), ratio(-1, 3)][..]);
        let a = &r.functional("ahat").unwrap().coefficients;
        assert_eq!(a, &alloc::vec![ratio(7, 5760), ratio(-4, 5760)]);
    }

    #[test]
    fn dim12() {
        let r = verify_dimension_identities(12).unwrap();
        assert_eq!(r.basis.len(), 3);
        let rel = &r.relations[0];
        assert!(rel.holds(), "residual {:?}", rel.residual);
        assert_eq!(rel.unique_solution().unwrap(), &[int(5), ratio(1, 8)][..]);
    }

    #[test]
    fn other_dimensions_rejected() {
        assert!(verify_dimension_identities(16).is_err());
        assert!(verify_dimension_identities(6).is_err());
    }
}
