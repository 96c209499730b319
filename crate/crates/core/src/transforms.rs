// SPDX-License-Identifier: Apache-2.0

//! Finite Lorentz transformations `Λ = exp(−(i/2) θ^{ab} Σ_ab)` in the two
//! spinor representations and the vector representation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::check::{Expected, Measured};
use crate::generators::{GeneratorSet, Side};
use crate::linalg::{det_float, frobenius, CMatrix, LinalgError};
use crate::scalar::{Deviation, Float, Scalar};

/// Default bound on `‖θ‖`.
pub const THETA_CAP: f64 = 2.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("theta must be {n}x{n}")]
    Shape { n: usize },
    #[error("theta is not antisymmetric at ({a}, {b})")]
    NotAntisymmetric { a: usize, b: usize },
    #[error("|theta| = {norm} exceeds the cap {cap}")]
    TooLarge { norm: f64, cap: f64 },
}

/// Real antisymmetric parameters `θ_ab` (lower indices).
#[derive(Clone, Debug, PartialEq)]
pub struct BoostRotationParams {
    theta: Vec<Vec<f64>>,
}

impl BoostRotationParams {
    pub fn new(theta: Vec<Vec<f64>>, cap: f64) -> Result<Self, ParamError> {
        let n = theta.len();
        if theta.iter().any(|r| r.len() != n) {
            return Err(ParamError::Shape { n });
        }
        for a in 0..n {
            for b in 0..n {
                if theta[a][b] != -theta[b][a] {
                    return Err(ParamError::NotAntisymmetric { a, b });
                }
            }
        }
        let p = BoostRotationParams { theta };
        let norm = p.norm();
        if norm > cap {
            return Err(ParamError::TooLarge { norm, cap });
        }
        Ok(p)
    }

    pub fn zero(n: usize) -> Self {
        BoostRotationParams {
            theta: vec![vec![0.0; n]; n],
        }
    }

    /// A single parameter pair `θ_ab = −θ_ba = value`.
    pub fn single(n: usize, a: usize, b: usize, value: f64) -> Self {
        let mut p = Self::zero(n);
        p.theta[a][b] = value;
        p.theta[b][a] = -value;
        p
    }

    /// Random parameters with `‖θ‖` uniform in `[0, cap]`.
    pub fn random<R: Rng>(n: usize, cap: f64, rng: &mut R) -> Self {
        let mut p = Self::zero(n);
        for a in 0..n {
            for b in (a + 1)..n {
                let v: f64 = rng.gen_range(-1.0..1.0);
                p.theta[a][b] = v;
                p.theta[b][a] = -v;
            }
        }
        let norm = p.norm();
        let target = rng.gen_range(0.0..cap);
        if norm > 0.0 {
            for row in &mut p.theta {
                for v in row {
                    *v *= target / norm;
                }
            }
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.theta[a][b]
    }

    /// `sqrt(Σ_{a<b} θ_ab²)`.
    pub fn norm(&self) -> f64 {
        let n = self.dim();
        let mut s = 0.0;
        for a in 0..n {
            for b in (a + 1)..n {
                s += self.theta[a][b] * self.theta[a][b];
            }
        }
        s.sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        BoostRotationParams {
            theta: self
                .theta
                .iter()
                .zip(&other.theta)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    /// `−(i/2) θ^{ab} Σ_ab` summed over all `a, b`.
    pub fn generator(&self, sigma: &[Vec<CMatrix<Float>>]) -> CMatrix<Float> {
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let eta = if (a == 0) != (b == 0) { -1.0 } else { 1.0 };
                let t = eta * self.theta[a][b];
                if t != 0.0 {
                    m = &m + &sigma[a][b].scale(&Complex64::new(0.0, -0.5 * t));
                }
            }
        }
        m
    }
}

/// Matrix exponential by scaling and squaring with a Taylor core.
pub fn mat_exp(m: &CMatrix<Float>) -> Result<CMatrix<Float>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            op: "mat_exp",
            shape: m.shape(),
        });
    }
    let n = m.rows();
    let norm = frobenius(m).as_f64();
    let mut squarings = 0;
    let mut scaled = norm;
    while scaled > 0.5 {
        scaled /= 2.0;
        squarings += 1;
    }
    let a = m.scale(&Complex64::new(0.5f64.powi(squarings), 0.0));
    let mut sum = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=30 {
        term = (&term * &a).scale(&Complex64::new(1.0 / k as f64, 0.0));
        sum = &sum + &term;
        if frobenius(&term).as_f64() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

/// `Λ_L`, `Λ_R`, `Λ_V` for one parameter set, with their inverses.
#[derive(Clone, Debug)]
pub struct LambdaTriple {
    pub lam_l: CMatrix<Float>,
    pub lam_r: CMatrix<Float>,
    pub lam_v: CMatrix<Float>,
    pub inv_l: CMatrix<Float>,
    pub inv_r: CMatrix<Float>,
    pub inv_v: CMatrix<Float>,
}

impl LambdaTriple {
    pub fn lam(&self, side: Side) -> &CMatrix<Float> {
        match side {
            Side::L => &self.lam_l,
            Side::R => &self.lam_r,
        }
    }

    pub fn inv(&self, side: Side) -> &CMatrix<Float> {
        match side {
            Side::L => &self.inv_l,
            Side::R => &self.inv_r,
        }
    }
}

pub fn build_lambdas(p: &BoostRotationParams, gs: &GeneratorSet<Float>) -> LambdaTriple {
    let pair = |sigma: &[Vec<CMatrix<Float>>]| {
        let g = p.generator(sigma);
        (
            mat_exp(&g).expect("square generator"),
            mat_exp(&-&g).expect("square generator"),
        )
    };
    let (lam_l, inv_l) = pair(&gs.sigma_l);
    let (lam_r, inv_r) = pair(&gs.sigma_r);
    let (lam_v, inv_v) = pair(&gs.sigma_v);
    LambdaTriple {
        lam_l,
        lam_r,
        lam_v,
        inv_l,
        inv_r,
        inv_v,
    }
}

fn dev(a: &CMatrix<Float>, b: &CMatrix<Float>) -> f64 {
    a.deviation(b).expect("same shape").as_f64()
}

fn measured(id: &str, reference: &str, d: f64) -> Measured {
    Measured::new(id, reference, Deviation::Float(d), Expected::Hold)
}

/// Representation identities of one Λ triple and the vector/spinor
/// compatibility laws, in raised and lowered form.
pub fn verify_transformation_laws(t: &LambdaTriple, gs: &GeneratorSet<Float>) -> Vec<Measured> {
    let n = gs.dim();
    let eta = gs.eta_matrix();
    let sandwich = |m: &CMatrix<Float>| &(&eta * m) * &eta;

    let conj = dev(&t.lam_l.conj(), &t.lam_r).max(dev(&t.lam_r.conj(), &t.lam_l));
    let transpose = dev(&t.lam_l.transpose(), &sandwich(&t.inv_l))
        .max(dev(&t.lam_r.transpose(), &sandwich(&t.inv_r)))
        .max(dev(&t.lam_v.transpose(), &sandwich(&t.inv_v)));
    let dagger = dev(&t.lam_l.dagger(), &sandwich(&t.inv_r))
        .max(dev(&t.lam_r.dagger(), &sandwich(&t.inv_l)));
    let lorentz = dev(&(&(&t.lam_v.transpose() * &eta) * &t.lam_v), &eta);
    let real = t.lam_v.entries().map(|z| z.im.abs()).fold(0.0, f64::max);
    let det = (det_float(&t.lam_v).expect("square") - Complex64::new(1.0, 0.0)).norm();
    let inverse = dev(&(&t.lam_l * &t.inv_l), &CMatrix::identity(n));

    let mut raised = 0.0f64;
    let mut lowered = 0.0f64;
    for side in [Side::L, Side::R] {
        let lam = t.lam(side);
        let lam_dag = lam.dagger();
        let g = gs.gamma(side);
        for a in 0..n {
            let up = gs.gamma_raised(side, a);
            let rhs_up = &(&lam_dag * &up) * lam;
            let rhs_down = &(&lam_dag * &g[a]) * lam;
            let mut lhs_up = CMatrix::zeros(n, n);
            let mut lhs_down = CMatrix::zeros(n, n);
            for b in 0..n {
                lhs_up = &lhs_up + &gs.gamma_raised(side, b).scale(&t.lam_v[(a, b)]);
                lhs_down = &lhs_down + &g[b].scale(&t.inv_v[(b, a)]);
            }
            raised = raised.max(dev(&lhs_up, &rhs_up));
            lowered = lowered.max(dev(&lhs_down, &rhs_down));
        }
    }

    vec![
        measured("transforms.complex_conj", "Lam_L* = Lam_R", conj),
        measured(
            "transforms.eta_transpose",
            "Lam_X^T = eta Lam_X^-1 eta",
            transpose,
        ),
        measured(
            "transforms.hermitian_conj",
            "Lam_L^dag = eta Lam_R^-1 eta, Lam_R^dag = eta Lam_L^-1 eta",
            dagger,
        ),
        measured("transforms.lorentz", "Lam_V^T eta Lam_V = eta", lorentz),
        measured("transforms.vector_real", "Im Lam_V = 0", real),
        measured("transforms.vector_det", "det Lam_V = 1", det),
        measured("transforms.inverse", "exp(M) exp(-M) = 1", inverse),
        measured(
            "transforms.vector_raised",
            "(Lam_V)^a_b G^X|b = Lam_X^dag G^X|a Lam_X",
            raised,
        ),
        measured(
            "transforms.vector_lowered",
            "(Lam_V^-1)^b_a G_X|b = Lam_X^dag G_X|a Lam_X",
            lowered,
        ),
    ]
}

fn random_spinor<R: Rng>(n: usize, rng: &mut R) -> Vec<Float> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn form(u: &[Float], m: Option<&CMatrix<Float>>, v: &[Float]) -> Float {
    let mv = match m {
        Some(m) => m.apply(v).expect("shape"),
        None => v.to_vec(),
    };
    u.iter()
        .zip(&mv)
        .fold(Float::zero(), |acc, (a, b)| acc + a.conj() * b)
}

/// `ψ_L†ηψ_R`, `ψ_R†ηψ_L` and the kinetic form `ψ_X†Γ^{X|a}∂_aψ_X` before and
/// after `ψ_X → Λ_X ψ_X`, on `samples` random spinors.
pub fn verify_bilinear_invariants(
    t: &LambdaTriple,
    gs: &GeneratorSet<Float>,
    seed: u64,
    samples: usize,
) -> Vec<Measured> {
    let n = gs.dim();
    let eta = gs.eta_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bilinear = 0.0f64;
    let mut kinetic = 0.0f64;
    for _ in 0..samples {
        let psi_l = random_spinor(n, &mut rng);
        let psi_r = random_spinor(n, &mut rng);
        let pl = t.lam_l.apply(&psi_l).expect("shape");
        let pr = t.lam_r.apply(&psi_r).expect("shape");
        let before = form(&psi_l, Some(&eta), &psi_r);
        let after = form(&pl, Some(&eta), &pr);
        bilinear = bilinear.max((after - before).norm());
        let before = form(&psi_r, Some(&eta), &psi_l);
        let after = form(&pr, Some(&eta), &pl);
        bilinear = bilinear.max((after - before).norm());

        // ψ(x) = (1 + x^a K_a)χ at a random point; ∂_aψ = K_a χ
        for side in [Side::L, Side::R] {
            let chi = random_spinor(n, &mut rng);
            let ks: Vec<CMatrix<Float>> = (0..n)
                .map(|_| {
                    CMatrix::from_fn(n, n, |_, _| {
                        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                    })
                })
                .collect();
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mut op = CMatrix::identity(n);
            for (xa, k) in x.iter().zip(&ks) {
                op = &op + &k.scale(&Complex64::new(*xa, 0.0));
            }
            let psi = op.apply(&chi).expect("shape");
            let dpsi: Vec<Vec<Float>> = ks.iter().map(|k| k.apply(&chi).expect("shape")).collect();
            let lam = t.lam(side);
            let psi_p = lam.apply(&psi).expect("shape");
            let mut k_before = Float::zero();
            let mut k_after = Float::zero();
            for a in 0..n {
                let up = gs.gamma_raised(side, a);
                k_before += form(&psi, Some(&up), &dpsi[a]);
                // ∂'_a = (Λ_V^{-1})^b_a ∂_b
                let mut d = vec![Float::zero(); n];
                for (b, db) in dpsi.iter().enumerate() {
                    let w = t.inv_v[(b, a)];
                    for (di, v) in d.iter_mut().zip(db) {
                        *di += w * v;
                    }
                }
                let dp = lam.apply(&d).expect("shape");
                k_after += form(&psi_p, Some(&up), &dp);
            }
            kinetic = kinetic.max((k_after - k_before).norm());
        }
    }
    vec![
        measured(
            "transforms.bilinear",
            "psi_L^dag eta psi_R, psi_R^dag eta psi_L invariant",
            bilinear,
        ),
        measured(
            "transforms.kinetic",
            "psi_X^dag G^X|a d_a psi_X invariant",
            kinetic,
        ),
    ]
}

/// `ψ_L†ψ_R` without η under a boost; it must change by more than `1e-3`.
pub fn negative_control(
    gs: &GeneratorSet<Float>,
    rapidity: f64,
    seed: u64,
    samples: usize,
) -> Measured {
    let n = gs.dim();
    let t = build_lambdas(&BoostRotationParams::single(n, 0, 1, rapidity), gs);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut smallest = f64::INFINITY;
    for _ in 0..samples {
        let psi_l = random_spinor(n, &mut rng);
        let psi_r = random_spinor(n, &mut rng);
        let before = form(&psi_l, None, &psi_r);
        let after = form(
            &t.lam_l.apply(&psi_l).expect("shape"),
            None,
            &t.lam_r.apply(&psi_r).expect("shape"),
        );
        smallest = smallest.min((after - before).norm());
    }
    Measured::new(
        "transforms.negative_control",
        "psi_L^dag psi_R (no eta) varies under a boost",
        Deviation::Float(smallest),
        Expected::Fail,
    )
    .with_tol(1e-3)
}
