// SPDX-License-Identifier: Apache-2.0

//! Smooth test fields, their exact first derivatives, and pointwise samples.
//!
//! Every field is a polynomial of degree at most two (spinors additionally
//! carry a plane-wave factor), so values and gradients are computed by
//! forward-mode differentiation with no discretization error.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::CMatrix;
use crate::scalar::Float;

pub const DIM: usize = 4;

pub type Point = [f64; DIM];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Value and spacetime gradient of a complex function at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub v: Complex64,
    pub d: [Complex64; DIM],
}

impl Jet {
    pub fn constant(v: Complex64) -> Self {
        Jet { v, d: [ZERO; DIM] }
    }

    pub fn scale(self, c: Complex64) -> Self {
        Jet {
            v: self.v * c,
            d: self.d.map(|x| x * c),
        }
    }

    /// `exp(f)`, used for plane waves.
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Jet {
            v: e,
            d: self.d.map(|x| x * e),
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(o.d) {
            *a += b;
        }
        Jet { v: self.v + o.v, d }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut d = [ZERO; DIM];
        for (k, dk) in d.iter_mut().enumerate() {
            *dk = self.d[k] * o.v + self.v * o.d[k];
        }
        Jet { v: self.v * o.v, d }
    }
}

/// Real polynomial of degree at most two in the four coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2 {
    pub c0: f64,
    pub c1: [f64; DIM],
    /// Symmetric quadratic coefficients.
    pub c2: [[f64; DIM]; DIM],
}

impl Poly2 {
    pub fn constant(c0: f64) -> Self {
        Poly2 {
            c0,
            c1: [0.0; DIM],
            c2: [[0.0; DIM]; DIM],
        }
    }

    /// Coefficients uniform in `[-scale, scale]`; `degree` caps the order.
    pub fn random<R: Rng>(rng: &mut R, c0: f64, scale: f64, degree: usize) -> Self {
        let mut p = Poly2::constant(c0 + rng.gen_range(-scale..=scale));
        if degree >= 1 {
            for c in &mut p.c1 {
                *c = rng.gen_range(-scale..=scale);
            }
        }
        if degree >= 2 {
            for i in 0..DIM {
                for j in i..DIM {
                    let v = rng.gen_range(-scale..=scale) / 2.0;
                    p.c2[i][j] = v;
                    p.c2[j][i] = v;
                }
            }
        }
        p
    }

    pub fn eval(&self, x: &Point) -> Jet {
        let mut v = self.c0;
        let mut d = [0.0; DIM];
        for i in 0..DIM {
            v += self.c1[i] * x[i];
            d[i] += self.c1[i];
            for j in 0..DIM {
                v += self.c2[i][j] * x[i] * x[j];
                d[i] += 2.0 * self.c2[i][j] * x[j];
            }
        }
        Jet {
            v: Complex64::new(v, 0.0),
            d: d.map(|r| Complex64::new(r, 0.0)),
        }
    }
}

/// `ψ(x) = (base + x^μ lin_μ) e^{i k·x}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorField {
    pub base: [Complex64; DIM],
    pub lin: [[Complex64; DIM]; DIM],
    pub k: [f64; DIM],
}

impl SpinorField {
    pub fn zero() -> Self {
        SpinorField {
            base: [ZERO; DIM],
            lin: [[ZERO; DIM]; DIM],
            k: [0.0; DIM],
        }
    }

    pub fn plane_wave(chi: [Complex64; DIM], k: [f64; DIM]) -> Self {
        SpinorField {
            base: chi,
            lin: [[ZERO; DIM]; DIM],
            k,
        }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let base = [(); DIM].map(|_| c());
        let lin = [(); DIM].map(|_| [(); DIM].map(|_| c() * 0.5));
        let k = [(); DIM].map(|_| rng.gen_range(-1.5..1.5));
        SpinorField { base, lin, k }
    }

    pub fn eval(&self, x: &Point) -> Vec<Jet> {
        let mut phase = Jet::constant(ZERO);
        for mu in 0..DIM {
            phase.v += Complex64::new(0.0, self.k[mu] * x[mu]);
            phase.d[mu] = Complex64::new(0.0, self.k[mu]);
        }
        let wave = phase.exp();
        (0..DIM)
            .map(|i| {
                let mut amp = Jet::constant(self.base[i]);
                for mu in 0..DIM {
                    amp.v += self.lin[mu][i] * x[mu];
                    amp.d[mu] = self.lin[mu][i];
                }
                amp * wave
            })
            .collect()
    }
}

/// Spinors and external fields of the Lagrangian.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldConfiguration {
    pub psi_l: SpinorField,
    pub psi_r: SpinorField,
    /// `e^μ_a`, indexed `[μ][a]`.
    pub vierbein: Vec<Vec<Poly2>>,
    /// `ω_μ^{ab}` for `a < b`, indexed `[μ][pair]` in lexicographic pair order.
    pub spin_conn: Vec<Vec<Poly2>>,
    /// `W^i_μ`, indexed `[i-1][μ]`.
    pub w: Vec<Vec<Poly2>>,
    /// `B_μ`.
    pub b: Vec<Poly2>,
}

/// Lexicographic index of the pair `a < b` among the six pairs.
pub fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < DIM);
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

impl FieldConfiguration {
    /// Seeded configuration: a vierbein near the identity and small
    /// polynomial connections.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi_l = SpinorField::random(&mut rng);
        let psi_r = SpinorField::random(&mut rng);
        let vierbein = (0..DIM)
            .map(|mu| {
                (0..DIM)
                    .map(|a| Poly2::random(&mut rng, if mu == a { 1.0 } else { 0.0 }, 0.15, 2))
                    .collect()
            })
            .collect();
        let spin_conn = (0..DIM)
            .map(|_| {
                (0..6)
                    .map(|_| Poly2::random(&mut rng, 0.0, 0.5, 2))
                    .collect()
            })
            .collect();
        let w = (0..3)
            .map(|_| {
                (0..DIM)
                    .map(|_| Poly2::random(&mut rng, 0.0, 0.5, 2))
                    .collect()
            })
            .collect();
        let b = (0..DIM)
            .map(|_| Poly2::random(&mut rng, 0.0, 0.5, 2))
            .collect();
        FieldConfiguration {
            psi_l,
            psi_r,
            vierbein,
            spin_conn,
            w,
            b,
        }
    }

    /// Flat vierbein, no connections, zero spinors.
    pub fn vacuum() -> Self {
        FieldConfiguration {
            psi_l: SpinorField::zero(),
            psi_r: SpinorField::zero(),
            vierbein: (0..DIM)
                .map(|mu| {
                    (0..DIM)
                        .map(|a| Poly2::constant(if mu == a { 1.0 } else { 0.0 }))
                        .collect()
                })
                .collect(),
            spin_conn: (0..DIM)
                .map(|_| (0..6).map(|_| Poly2::constant(0.0)).collect())
                .collect(),
            w: (0..3)
                .map(|_| (0..DIM).map(|_| Poly2::constant(0.0)).collect())
                .collect(),
            b: (0..DIM).map(|_| Poly2::constant(0.0)).collect(),
        }
    }

    /// Values and spinor gradients at `x`.
    pub fn sample(&self, x: &Point) -> FieldSample<Float> {
        let psi = [self.psi_l.eval(x), self.psi_r.eval(x)];
        let values = |j: &[Jet]| j.iter().map(|z| z.v).collect::<Vec<_>>();
        let grads = |j: &[Jet]| {
            (0..DIM)
                .map(|mu| j.iter().map(|z| z.d[mu]).collect())
                .collect::<Vec<Vec<_>>>()
        };
        let mut omega = vec![vec![vec![ZERO; DIM]; DIM]; DIM];
        for (mu, om) in omega.iter_mut().enumerate() {
            for a in 0..DIM {
                for b in (a + 1)..DIM {
                    let v = self.spin_conn[mu][pair_index(a, b)].eval(x).v;
                    om[a][b] = v;
                    om[b][a] = -v;
                }
            }
        }
        FieldSample {
            psi: [values(&psi[0]), values(&psi[1])],
            dpsi: [grads(&psi[0]), grads(&psi[1])],
            vierbein: self
                .vierbein
                .iter()
                .map(|row| row.iter().map(|p| p.eval(x).v).collect())
                .collect(),
            omega,
            w: self
                .w
                .iter()
                .map(|row| row.iter().map(|p| p.eval(x).v).collect())
                .collect(),
            b: self.b.iter().map(|p| p.eval(x).v).collect(),
        }
    }
}

/// Gauge parameter fields: `ε_ab(x)` (lower indices), `α^i(x)`, `β(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamField {
    /// Indexed by lexicographic pair.
    pub eps: Vec<Poly2>,
    pub alpha: Vec<Poly2>,
    pub beta: Poly2,
}

impl ParamField {
    /// Seeded parameters; `local = false` gives constants.
    pub fn random(seed: u64, local: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let degree = if local { 2 } else { 0 };
        let mut p = || Poly2::random(&mut rng, 0.0, 0.6, degree);
        ParamField {
            eps: (0..6).map(|_| p()).collect(),
            alpha: (0..3).map(|_| p()).collect(),
            beta: p(),
        }
    }

    pub fn sample(&self, x: &Point) -> ParamSample {
        let mut eps = vec![vec![Jet::constant(ZERO); DIM]; DIM];
        for a in 0..DIM {
            for b in (a + 1)..DIM {
                let j = self.eps[pair_index(a, b)].eval(x);
                eps[a][b] = j;
                eps[b][a] = j.scale(Complex64::new(-1.0, 0.0));
            }
        }
        ParamSample {
            eps,
            alpha: self.alpha.iter().map(|p| p.eval(x)).collect(),
            beta: self.beta.eval(x),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParamSample {
    pub eps: Vec<Vec<Jet>>,
    pub alpha: Vec<Jet>,
    pub beta: Jet,
}

/// Arithmetic needed to evaluate the Lagrangian: complex numbers, or dual
/// numbers carrying a first-order variation.
pub trait Num:
    Copy + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_c(c: Complex64) -> Self;
    /// Complex conjugation; the variation parameter is real, so duals
    /// conjugate both parts.
    fn conj(self) -> Self;
    fn cmul(self, c: Complex64) -> Self;
    fn zero() -> Self {
        Self::from_c(ZERO)
    }
}

impl Num for Complex64 {
    fn from_c(c: Complex64) -> Self {
        c
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn cmul(self, c: Complex64) -> Self {
        self * c
    }
}

/// `v + s·δ` with `s² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual {
    pub v: Complex64,
    pub s: Complex64,
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual {
            v: self.v + o.v,
            s: self.s + o.s,
        }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual {
            v: self.v - o.v,
            s: self.s - o.s,
        }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual {
            v: self.v * o.v,
            s: self.v * o.s + self.s * o.v,
        }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            v: -self.v,
            s: -self.s,
        }
    }
}

impl Num for Dual {
    fn from_c(c: Complex64) -> Self {
        Dual { v: c, s: ZERO }
    }
    fn conj(self) -> Self {
        Dual {
            v: self.v.conj(),
            s: self.s.conj(),
        }
    }
    fn cmul(self, c: Complex64) -> Self {
        Dual {
            v: self.v * c,
            s: self.s * c,
        }
    }
}

/// Everything the Lagrangian needs at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldSample<T> {
    /// `[ψ_L, ψ_R]`.
    pub psi: [Vec<T>; 2],
    /// `∂_μψ_X`, indexed `[X][μ]`.
    pub dpsi: [Vec<Vec<T>>; 2],
    /// `e^μ_a`, `[μ][a]`.
    pub vierbein: Vec<Vec<T>>,
    /// `ω_μ^{ab}`, `[μ][a][b]`.
    pub omega: Vec<Vec<Vec<T>>>,
    /// `W^i_μ`, `[i-1][μ]`.
    pub w: Vec<Vec<T>>,
    pub b: Vec<T>,
}

fn zip_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Dual> {
    a.iter().zip(b).map(|(&v, &s)| Dual { v, s }).collect()
}

impl FieldSample<Float> {
    pub fn zeros_like(&self) -> Self {
        let z1 = |v: &Vec<Complex64>| vec![ZERO; v.len()];
        let z2 = |v: &Vec<Vec<Complex64>>| v.iter().map(z1).collect::<Vec<_>>();
        FieldSample {
            psi: [z1(&self.psi[0]), z1(&self.psi[1])],
            dpsi: [z2(&self.dpsi[0]), z2(&self.dpsi[1])],
            vierbein: z2(&self.vierbein),
            omega: self.omega.iter().map(z2).collect(),
            w: z2(&self.w),
            b: z1(&self.b),
        }
    }

    /// `self + s·delta` as dual numbers.
    pub fn with_variation(&self, delta: &FieldSample<Float>) -> FieldSample<Dual> {
        let z2 = |a: &[Vec<Complex64>], b: &[Vec<Complex64>]| {
            a.iter()
                .zip(b)
                .map(|(x, y)| zip_vec(x, y))
                .collect::<Vec<_>>()
        };
        FieldSample {
            psi: [
                zip_vec(&self.psi[0], &delta.psi[0]),
                zip_vec(&self.psi[1], &delta.psi[1]),
            ],
            dpsi: [
                z2(&self.dpsi[0], &delta.dpsi[0]),
                z2(&self.dpsi[1], &delta.dpsi[1]),
            ],
            vierbein: z2(&self.vierbein, &delta.vierbein),
            omega: self
                .omega
                .iter()
                .zip(&delta.omega)
                .map(|(a, b)| z2(a, b))
                .collect(),
            w: z2(&self.w, &delta.w),
            b: zip_vec(&self.b, &delta.b),
        }
    }

    /// The vierbein as a real-valued matrix `e^μ_a`.
    pub fn vierbein_matrix(&self) -> CMatrix<Float> {
        CMatrix::from_fn(DIM, DIM, |mu, a| self.vierbein[mu][a])
    }
}

/// `M v` for a complex matrix and a vector over `T`.
pub fn mat_vec<T: Num>(m: &CMatrix<Float>, v: &[T]) -> Vec<T> {
    (0..m.rows())
        .map(|r| {
            let mut acc = T::zero();
            for (c, x) in v.iter().enumerate() {
                let e = m[(r, c)];
                if e != ZERO {
                    acc = acc + x.cmul(e);
                }
            }
            acc
        })
        .collect()
}

/// `u† v`.
pub fn dot_conj<T: Num>(u: &[T], v: &[T]) -> T {
    u.iter()
        .zip(v)
        .fold(T::zero(), |acc, (a, b)| acc + a.conj() * *b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_gradient_matches_difference_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = Poly2::random(&mut rng, 0.3, 1.0, 2);
        let x = [0.1, -0.4, 0.7, 0.2];
        let j = p.eval(&x);
        for mu in 0..DIM {
            let h = 1e-6;
            let mut xp = x;
            let mut xm = x;
            xp[mu] += h;
            xm[mu] -= h;
            let fd = (p.eval(&xp).v - p.eval(&xm).v) / (2.0 * h);
            assert!((fd - j.d[mu]).norm() < 1e-8);
        }
    }

    #[test]
    fn plane_wave_gradient() {
        let chi = [
            Complex64::new(1.0, 0.5),
            ZERO,
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.0),
        ];
        let k = [0.3, -1.2, 0.5, 0.9];
        let f = SpinorField::plane_wave(chi, k);
        let x = [0.2, 0.4, -0.6, 0.1];
        for comp in f.eval(&x) {
            for mu in 0..DIM {
                assert!((comp.d[mu] - comp.v * Complex64::new(0.0, k[mu])).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn spinor_gradient_matches_difference_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = SpinorField::random(&mut rng);
        let x = [0.5, -0.1, 0.3, -0.8];
        let j = f.eval(&x);
        for mu in 0..DIM {
            let h = 1e-6;
            let mut xp = x;
            let mut xm = x;
            xp[mu] += h;
            xm[mu] -= h;
            let (p, m) = (f.eval(&xp), f.eval(&xm));
            for i in 0..DIM {
                let fd = (p[i].v - m[i].v) / (2.0 * h);
                assert!((fd - j[i].d[mu]).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn dual_product_rule() {
        let a = Dual {
            v: Complex64::new(1.0, 2.0),
            s: Complex64::new(0.5, 0.0),
        };
        let b = Dual {
            v: Complex64::new(-1.0, 1.0),
            s: Complex64::new(0.0, 3.0),
        };
        let p = a * b;
        assert_eq!(p.v, a.v * b.v);
        assert_eq!(p.s, a.v * b.s + a.s * b.v);
        assert_eq!(a.conj().s, a.s.conj());
    }

    #[test]
    fn sample_antisymmetric_connection() {
        let fc = FieldConfiguration::random(4);
        let s = fc.sample(&[0.1, 0.2, 0.3, 0.4]);
        for mu in 0..DIM {
            for a in 0..DIM {
                assert_eq!(s.omega[mu][a][a], ZERO);
                for b in 0..DIM {
                    assert_eq!(s.omega[mu][a][b], -s.omega[mu][b][a]);
                }
            }
        }
    }
}
