// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices over either scalar mode.
//!
//! Dimensions here never exceed 28, so everything is a plain row-major
//! `Vec` with no blocking. The operator impls (`&a * &b`, ...) panic on shape
//! mismatch like other dense-matrix crates do; the `try_*` methods report it
//! as a [`LinalgError`] instead.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{Deviation, Exact, Float, Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op} requires a square matrix, got {shape:?}")]
    NotSquare {
        op: &'static str,
        shape: (usize, usize),
    },
    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("exact rank requested for a float-mode matrix")]
    FloatRank,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> CMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn diagonal(diag: &[S]) -> Self {
        let n = diag.len();
        Self::from_fn(
            n,
            n,
            |r, c| if r == c { diag[r].clone() } else { S::zero() },
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let expected = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * expected);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != expected {
                return Err(LinalgError::Ragged {
                    row,
                    len: entries.len(),
                    expected,
                });
            }
            data.extend(entries);
        }
        Ok(CMatrix {
            rows: n,
            cols: expected,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CMatrix<T> {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_float(&self) -> CMatrix<Float> {
        self.map(|z| z.to_c64())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn try_matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                // generator matrices are mostly monomial
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + c];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[r * rhs.cols + c];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: &'static str,
        f: impl Fn(&S, &S) -> S,
    ) -> Result<Self, LinalgError> {
        if self.shape() != rhs.shape() {
            return Err(LinalgError::ShapeMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b.clone())
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|z| z.clone() * s.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn trace(&self) -> Result<S, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                op: "trace",
                shape: self.shape(),
            });
        }
        Ok((0..self.rows).fold(S::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.try_matmul(rhs)?.try_sub(&rhs.try_matmul(self)?)
    }

    /// Frobenius distance to `other` (squared in exact mode).
    pub fn deviation(&self, other: &Self) -> Result<Deviation, LinalgError> {
        Ok(frobenius(&self.try_sub(other)?))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Rows of serialized entries (see [`Scalar::entry_string`]).
    pub fn entry_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Scalar::entry_string).collect())
            .collect()
    }
}

impl<S> Index<(usize, usize)> for CMatrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for CMatrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Mul for &CMatrix<S> {
    type Output = CMatrix<S>;
    fn mul(self, rhs: &CMatrix<S>) -> CMatrix<S> {
        self.try_matmul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for &CMatrix<S> {
    type Output = CMatrix<S>;
    fn add(self, rhs: &CMatrix<S>) -> CMatrix<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for &CMatrix<S> {
    type Output = CMatrix<S>;
    fn sub(self, rhs: &CMatrix<S>) -> CMatrix<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Neg for &CMatrix<S> {
    type Output = CMatrix<S>;
    fn neg(self) -> CMatrix<S> {
        self.map(|z| -z.clone())
    }
}

/// Frobenius norm in float mode; the exact sum of squared moduli in exact
/// mode (comparisons are done on squares there).
pub fn frobenius<S: Scalar>(m: &CMatrix<S>) -> Deviation {
    m.entries()
        .fold(Deviation::zero(S::MODE), |acc, z| acc + z.modulus_sqr())
        .finish()
}

type Gauss = Complex<BigInt>;

fn gauss_is_zero(z: &Gauss) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// Exact division in the Gaussian integers; the remainder must vanish.
fn gauss_div_exact(a: &Gauss, b: &Gauss) -> Gauss {
    let norm = &b.re * &b.re + &b.im * &b.im;
    let num = a * b.conj();
    let (qr, rr) = num.re.div_rem(&norm);
    let (qi, ri) = num.im.div_rem(&norm);
    assert!(
        rr.is_zero() && ri.is_zero(),
        "fraction-free elimination produced an inexact quotient"
    );
    Complex::new(qr, qi)
}

/// Clears denominators row by row, giving a Gaussian-integer matrix with
/// the same row space.
fn integer_rows(m: &CMatrix<Exact>) -> Vec<Vec<Gauss>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row
                .iter()
                .fold(1i64, |acc, z| acc.lcm(z.re.denom()).lcm(z.im.denom()));
            row.iter()
                .map(|z| {
                    let re = z.re.numer() * (lcm / z.re.denom());
                    let im = z.im.numer() * (lcm / z.im.denom());
                    Complex::new(BigInt::from(re), BigInt::from(im))
                })
                .collect()
        })
        .collect()
}

/// Row rank by fraction-free (Bareiss) elimination over the Gaussian
/// integers. Float-mode input is rejected.
pub fn rank_exact<S: Scalar>(m: &CMatrix<S>) -> Result<usize, LinalgError> {
    if S::MODE == Mode::Float {
        return Err(LinalgError::FloatRank);
    }
    let exact: CMatrix<Exact> = m.map(|z| z.to_exact().expect("exact mode"));
    let mut a = integer_rows(&exact);
    let (rows, cols) = exact.shape();
    let mut prev: Gauss = Complex::new(BigInt::one(), BigInt::zero());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !gauss_is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            let lead = a[r][col].clone();
            for c in col + 1..cols {
                let v = &pivot * &a[r][c] - &lead * &a[rank][c];
                a[r][c] = gauss_div_exact(&v, &prev);
            }
            a[r][col] = Complex::new(BigInt::zero(), BigInt::zero());
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

/// Determinant by Gaussian elimination with partial pivoting (float only).
pub fn det_float(m: &CMatrix<Float>) -> Result<Float, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            op: "det",
            shape: m.shape(),
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<Float>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut det = Float::new(1.0, 0.0);
    for col in 0..n {
        let p = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .expect("nonempty range");
        if a[p][col].norm() == 0.0 {
            return Ok(Float::new(0.0, 0.0));
        }
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col];
        det *= pivot;
        for r in col + 1..n {
            let f = a[r][col] / pivot;
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    Ok(det)
}

/// Largest absolute entry modulus, as a float. Used for `record` checks.
pub fn max_abs_entry<S: Scalar>(m: &CMatrix<S>) -> f64 {
    m.entries().map(|z| z.to_c64().norm()).fold(0.0, f64::max)
}

/// Helper for tests and reports: whether every entry is a real number.
pub fn is_real<S: Scalar>(m: &CMatrix<S>) -> bool {
    m.entries().all(|z| match z.to_exact() {
        Some(e) => e.im.is_zero(),
        None => z.to_c64().im.abs() == 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn ex(re: i64, im: i64) -> Exact {
        Exact::from_gauss(re, im)
    }

    #[test]
    fn identity_is_neutral() {
        let m = CMatrix::from_fn(3, 3, |r, c| ex(r as i64 - c as i64, (r * c) as i64));
        assert_eq!(&CMatrix::identity(3) * &m, m);
        assert_eq!(&m * &CMatrix::identity(3), m);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = CMatrix::<Exact>::zeros(2, 3);
        let b = CMatrix::<Exact>::zeros(2, 3);
        assert!(matches!(
            a.try_matmul(&b),
            Err(LinalgError::ShapeMismatch { op: "matmul", .. })
        ));
        assert!(a.try_add(&CMatrix::zeros(3, 2)).is_err());
        assert!(a.trace().is_err());
        assert!(matches!(
            CMatrix::from_rows(vec![vec![ex(1, 0)], vec![]]),
            Err(LinalgError::Ragged { row: 1, .. })
        ));
    }

    #[test]
    fn dagger_is_involution() {
        let m = CMatrix::from_fn(2, 3, |r, c| ex(r as i64 + 1, c as i64 - 1));
        assert_eq!(m.dagger().dagger(), m);
        assert_eq!(m.dagger(), m.transpose().conj());
    }

    #[test]
    fn frobenius_basics() {
        assert!(frobenius(&CMatrix::<Exact>::zeros(4, 4)).is_zero());
        assert_eq!(
            frobenius(&CMatrix::<Float>::identity(4)),
            Deviation::Float(2.0)
        );
        // exact mode keeps the square
        assert_eq!(frobenius(&CMatrix::<Exact>::identity(4)).as_f64(), 4.0);
    }

    #[test]
    fn frobenius_of_unitary() {
        let (c, s) = (0.3f64.cos(), 0.3f64.sin());
        let u = CMatrix::from_rows(vec![
            vec![Complex64::new(c, 0.0), Complex64::new(0.0, s)],
            vec![Complex64::new(0.0, s), Complex64::new(c, 0.0)],
        ])
        .unwrap();
        let f = frobenius(&u).as_f64();
        assert!((f * f - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(rank_exact(&CMatrix::<Exact>::identity(5)).unwrap(), 5);
        assert_eq!(rank_exact(&CMatrix::<Exact>::zeros(3, 4)).unwrap(), 0);
        let u = [ex(1, 2), ex(0, 1), ex(-3, 0)];
        let v = [ex(2, 0), ex(1, -1), ex(0, 0), ex(5, 1)];
        let outer = CMatrix::from_fn(3, 4, |r, c| u[r] * v[c]);
        assert_eq!(rank_exact(&outer).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_float() {
        assert_eq!(
            rank_exact(&CMatrix::<Float>::identity(2)),
            Err(LinalgError::FloatRank)
        );
    }

    #[test]
    fn rank_with_fractions() {
        let m = CMatrix::from_rows(vec![
            vec![Exact::from_ratio(1, 3), Exact::from_ratio(1, 2)],
            vec![Exact::from_ratio(2, 3), Exact::from_i64(1)],
        ])
        .unwrap();
        assert_eq!(rank_exact(&m).unwrap(), 1);
    }

    /// Cofactor expansion, used as an independent rank oracle.
    fn det_cofactor(m: &[Vec<Exact>]) -> Exact {
        if m.is_empty() {
            return <Exact as Scalar>::one();
        }
        let mut acc = <Exact as Scalar>::zero();
        for (j, a) in m[0].iter().enumerate() {
            if Scalar::is_zero(a) {
                continue;
            }
            let minor: Vec<Vec<Exact>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, z)| *z)
                        .collect()
                })
                .collect();
            let term = *a * det_cofactor(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect()
    }

    fn rank_by_minors(m: &CMatrix<Exact>) -> usize {
        let (r, c) = m.shape();
        for k in (1..=r.min(c)).rev() {
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    let sub: Vec<Vec<Exact>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m[(i, j)]).collect())
                        .collect();
                    if !Scalar::is_zero(&det_cofactor(&sub)) {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn low_rank(seed: u64, rank: usize) -> CMatrix<Exact> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = |r, c| {
            CMatrix::from_fn(r, c, |_, _| {
                Exact::from_gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
            })
        };
        let a = g(6, rank);
        let b = g(rank, 6);
        &a * &b
    }

    #[test]
    fn rank_agrees_with_minor_enumeration() {
        for seed in 0..12 {
            for rank in [1, 2, 3, 4, 5, 6] {
                let m = low_rank(seed, rank);
                assert_eq!(
                    rank_exact(&m).unwrap(),
                    rank_by_minors(&m),
                    "seed {seed} rank {rank}"
                );
            }
        }
    }

    #[test]
    fn dagger_of_product() {
        let m = low_rank(3, 6);
        let n = low_rank(4, 5);
        assert_eq!((&m * &n).dagger(), &n.dagger() * &m.dagger());
        assert_eq!(m.dagger().dagger(), m);
        assert_eq!(&CMatrix::identity(6) * &m, m);
        assert_eq!(&(&m + &n) - &n, m);
    }

    #[test]
    fn determinant_float() {
        let m = CMatrix::from_rows(vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)],
            vec![Complex64::new(3.0, 0.0), Complex64::new(1.0, 1.0)],
        ])
        .unwrap();
        assert!((det_float(&m).unwrap() - Complex64::new(-6.0, 0.0)).norm() < 1e-15);
        assert!(det_float(&CMatrix::<Float>::zeros(2, 3)).is_err());
    }

    proptest::proptest! {
        #[test]
        fn rank_invariant_under_row_ops(
            seed in 0u64..1000,
            rank in 1usize..6,
            scale_re in 1i64..4,
            scale_im in -3i64..4,
            swap in 0usize..6,
        ) {
            let m = low_rank(seed, rank);
            let r0 = rank_exact(&m).unwrap();
            let s = Exact::from_gauss(scale_re, scale_im);
            let moved = CMatrix::from_fn(6, 6, |r, c| {
                let src = if r == 0 { swap } else if r == swap { 0 } else { r };
                if r == 0 { m[(src, c)] * s } else { m[(src, c)] }
            });
            proptest::prop_assert_eq!(rank_exact(&moved).unwrap(), r0);
            proptest::prop_assert_eq!(rank_exact(&m.transpose()).unwrap(), r0);
        }
    }
}
