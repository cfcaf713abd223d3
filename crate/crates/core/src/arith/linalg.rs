use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Solution set of `A x = b` over the rationals: `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: Option<Vec<BigRational>>,
    pub nullspace: Vec<Vec<BigRational>>,
}

impl SolutionSet {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn is_unique(&self) -> bool {
        self.particular.is_some() && self.nullspace.is_empty()
    }
}

/// Row-reduce `[A | b]` and describe every solution.
///
/// `a` is given row-major with `a.len()` equations in `ncols` unknowns.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> SolutionSet {
    let rows = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.resize(ncols, BigRational::zero());
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let consistent = m[r..].iter().all(|row| row[ncols].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![BigRational::zero(); ncols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = m[i][ncols].clone();
        }
        x
    });
    let nullspace = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][free].clone();
            }
            v
        })
        .collect();
    SolutionSet { particular, nullspace }
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..2 * n {
                    if !m[c][j].is_zero() {
                        let d = &f * &m[c][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Inverse of an integer matrix by fraction-free (Bareiss) Gauss-Jordan
/// elimination in `i128`. Intended for small-determinant matrices such as
/// Cartan matrices; `None` if singular or if an intermediate overflows.
pub fn integer_inverse(a: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            r.extend((0..n).map(|j| (i == j) as i128));
            r
        })
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let p = (k..n).find(|&i| m[i][k] != 0)?;
        m.swap(k, p);
        let pivot = m[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m[i][k];
            for j in 0..2 * n {
                let v = pivot.checked_mul(m[i][j])?.checked_sub(f.checked_mul(m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = pivot;
    }
    // every diagonal entry is now ±det
    Some(
        m.iter()
            .enumerate()
            .map(|(i, row)| row[n..].iter().map(|&x| BigRational::new(x.into(), row[i].into())).collect())
            .collect(),
    )
}
