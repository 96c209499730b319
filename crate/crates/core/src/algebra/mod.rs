// SPDX-License-Identifier: Apache-2.0

//! Complexified quaternions and octonions.
//!
//! Elements are stored over the internal basis `{1, e_1, …, e_{n-1}}` with
//! complex coefficients, which makes both conjugations coefficientwise. The
//! Minkowski-signature basis used by the generator matrices replaces the unit
//! with `e_0 = i·1`; see [`Algebra::signature_basis`].

mod axioms;
pub mod table;

use std::ops::{Add, Neg, Sub};

use rand::Rng;
use thiserror::Error;

use crate::scalar::{Deviation, Scalar};

pub use axioms::{check_axiom_suite, check_axiom_suite_with, AXIOM_SAMPLES};
pub use table::{BasisProduct, StructureTable, TableError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("structure table rejected by the axiom suite: {0}")]
    AxiomsFailed(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Quaternion,
    Octonion,
}

impl AlgebraKind {
    pub fn dim(self) -> usize {
        match self {
            AlgebraKind::Quaternion => 4,
            AlgebraKind::Octonion => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Quaternion => "quaternion",
            AlgebraKind::Octonion => "octonion",
        }
    }
}

/// Element of C⊗H or C⊗O.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coeffs: vec![S::zero(); dim],
        }
    }

    /// Internal basis element: `1` for `k = 0`, `e_k` otherwise.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[k] = S::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of the unit.
    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn scale(&self, s: &S) -> Self {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Squared coefficient distance (float: Euclidean distance).
    pub fn deviation(&self, other: &Self) -> Deviation {
        assert_eq!(self.dim(), other.dim(), "element dimension mismatch");
        let mut d = Deviation::zero(S::MODE);
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            d = d + (a.clone() - b.clone()).modulus_sqr();
        }
        d.finish()
    }

    fn zip(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> Add for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn add(self, rhs: Self) -> AlgebraElement<S> {
        self.zip(rhs, |a, b| a + b)
    }
}

impl<S: Scalar> Sub for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn sub(self, rhs: Self) -> AlgebraElement<S> {
        self.zip(rhs, |a, b| a - b)
    }
}

impl<S: Scalar> Neg for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> AlgebraElement<S> {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// A composition algebra given by a validated structure table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    kind: AlgebraKind,
    table: StructureTable,
}

impl Algebra {
    pub fn quaternion() -> Self {
        Algebra {
            kind: AlgebraKind::Quaternion,
            table: StructureTable::quaternion(),
        }
    }

    pub fn octonion() -> Self {
        Algebra {
            kind: AlgebraKind::Octonion,
            table: StructureTable::octonion(),
        }
    }

    pub fn of_kind(kind: AlgebraKind) -> Self {
        match kind {
            AlgebraKind::Quaternion => Self::quaternion(),
            AlgebraKind::Octonion => Self::octonion(),
        }
    }

    /// Accepts a user table only if every identity of the axiom suite holds.
    pub fn from_table(table: StructureTable) -> Result<Self, AlgebraError> {
        let failed: Vec<String> = check_axiom_suite(&table)
            .into_iter()
            .filter(|c| c.is_failure())
            .map(|c| c.check_id)
            .collect();
        if !failed.is_empty() {
            return Err(AlgebraError::AxiomsFailed(failed.join(", ")));
        }
        Ok(Self::unchecked(table))
    }

    /// Wraps a table without running the axiom suite.
    pub fn unchecked(table: StructureTable) -> Self {
        let kind = if table.dim() == 4 {
            AlgebraKind::Quaternion
        } else {
            AlgebraKind::Octonion
        };
        Algebra { kind, table }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn one<S: Scalar>(&self) -> AlgebraElement<S> {
        AlgebraElement::unit(self.dim(), 0)
    }

    /// Signature basis `e_0 = i·1`, `e_a = e_a` for `a > 0`.
    pub fn signature_basis<S: Scalar>(&self, a: usize) -> AlgebraElement<S> {
        if a == 0 {
            self.one::<S>().scale(&S::imag_unit())
        } else {
            AlgebraElement::unit(self.dim(), a)
        }
    }

    /// `η_aa`: −1 for the time-like basis element, +1 otherwise.
    pub fn eta(&self, a: usize) -> i64 {
        if a == 0 {
            -1
        } else {
            1
        }
    }

    /// Raised basis element `e^a = η^{aa} e_a`.
    pub fn signature_basis_raised<S: Scalar>(&self, a: usize) -> AlgebraElement<S> {
        self.signature_basis::<S>(a)
            .scale(&S::from_i64(self.eta(a)))
    }

    pub fn element<S: Scalar>(&self, coeffs: Vec<S>) -> Result<AlgebraElement<S>, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                left: coeffs.len(),
                right: self.dim(),
            });
        }
        Ok(AlgebraElement::new(coeffs))
    }

    fn check_dims<S: Scalar>(&self, xs: &[&AlgebraElement<S>]) -> Result<(), AlgebraError> {
        for x in xs {
            if x.dim() != self.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    left: x.dim(),
                    right: self.dim(),
                });
            }
        }
        Ok(())
    }

    pub fn try_mul<S: Scalar>(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
    ) -> Result<AlgebraElement<S>, AlgebraError> {
        self.check_dims(&[x, y])?;
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = self.table.product(i, j);
                let term = xi.clone() * yj.clone();
                let acc = &mut out[p.index];
                *acc = if p.sign > 0 {
                    acc.clone() + term
                } else {
                    acc.clone() - term
                };
            }
        }
        Ok(AlgebraElement { coeffs: out })
    }

    /// Product `xy`. Panics on a dimension mismatch; see [`Algebra::try_mul`].
    pub fn mul<S: Scalar>(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
    ) -> AlgebraElement<S> {
        self.try_mul(x, y)
            .expect("algebra element dimension mismatch")
    }

    /// Complex conjugation of the coefficients in the internal basis.
    pub fn conj_complex<S: Scalar>(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        AlgebraElement {
            coeffs: x.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Quaternionic (octonionic) conjugation: negate the imaginary units.
    pub fn conj_quat<S: Scalar>(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        AlgebraElement {
            coeffs: x
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k == 0 { c.clone() } else { -c.clone() })
                .collect(),
        }
    }

    /// Scalar parts of `x ȳ` and `y x̄`; both equal `⟨x, y⟩`.
    pub fn inner_parts<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> (S, S) {
        let a = self.mul(x, &self.conj_quat(y));
        let b = self.mul(y, &self.conj_quat(x));
        (a.coeffs[0].clone(), b.coeffs[0].clone())
    }

    /// Bilinear form `2⟨x, y⟩ = x ȳ + y x̄`.
    pub fn inner<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> S {
        let (a, b) = self.inner_parts(x, y);
        (a + b).scale_ratio(1, 2)
    }

    pub fn try_inner<S: Scalar>(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
    ) -> Result<S, AlgebraError> {
        self.check_dims(&[x, y])?;
        Ok(self.inner(x, y))
    }

    /// `(xy)z − x(yz)`.
    pub fn associator<S: Scalar>(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
        z: &AlgebraElement<S>,
    ) -> AlgebraElement<S> {
        &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
    }

    /// Random element with Gaussian-integer coefficients in `[-3, 3] + i[-3, 3]`.
    pub fn random_element<S: Scalar, R: Rng>(&self, rng: &mut R) -> AlgebraElement<S> {
        AlgebraElement {
            coeffs: (0..self.dim())
                .map(|_| S::from_gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3)))
                .collect(),
        }
    }
}
