// SPDX-License-Identifier: Apache-2.0

//! Triple cross products, the structure constants `ε` and `χ` they induce,
//! and the self-duality operator on antisymmetric rank-2 tensors.
//!
//! ```text
//! 6 X_L(x,y,z) = x(ȳz - z̄y) + cyclic
//! 6 X_R(x,y,z) = (xȳ - yx̄)z + cyclic
//! χ_X|ABCD = i⟨X_X(e_A, e_B, e_C), e_D⟩
//! ```
//!
//! The duality operator is `F: T_AB ↦ (i/2) χ_ABCD T^CD`. A self-dual tensor
//! obeys `T = λ F T`, so the duality eigenvalues `λ` are reciprocals of the
//! eigenvalues of `F`. Spectra are certified with exact minimal polynomials
//! and exact ranks only.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, AlgebraKind};
use crate::check::{CheckResult, DeviationAcc, Expected};
use crate::generators::{MinkowskiEta, Side};
use crate::linalg::{frobenius, rank_exact, CMatrix};
use crate::scalar::{format_rational, Deviation, Exact, Scalar};

use num_rational::Rational64;

type El<S> = AlgebraElement<S>;

/// `X_side(x, y, z)`.
pub fn triple_cross<S: Scalar>(
    alg: &Algebra,
    side: Side,
    x: &El<S>,
    y: &El<S>,
    z: &El<S>,
) -> Result<El<S>, AlgebraError> {
    for v in [x, y, z] {
        if v.dim() != alg.dim() {
            return Err(AlgebraError::DimensionMismatch {
                left: alg.dim(),
                right: v.dim(),
            });
        }
    }
    let term = |a: &El<S>, b: &El<S>, c: &El<S>| match side {
        Side::L => {
            let inner = &alg.mul(&alg.conj_quat(b), c) - &alg.mul(&alg.conj_quat(c), b);
            alg.mul(a, &inner)
        }
        Side::R => {
            let outer = &alg.mul(a, &alg.conj_quat(b)) - &alg.mul(b, &alg.conj_quat(a));
            alg.mul(&outer, c)
        }
    };
    let sum = &(&term(x, y, z) + &term(y, z, x)) + &term(z, x, y);
    Ok(sum.scale(&S::from_ratio(1, 6)))
}

fn gram_det<S: Scalar>(alg: &Algebra, v: [&El<S>; 3]) -> S {
    let g = |i: usize, j: usize| alg.inner(v[i], v[j]);
    g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
        - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
        + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
}

/// Alternation, orthogonality and the Pythagorean property of `X_side` on
/// all basis triples and `samples` seeded random triples.
pub fn verify_cross_properties<S: Scalar>(
    alg: &Algebra,
    side: Side,
    seed: u64,
    samples: usize,
    tol: f64,
) -> Vec<CheckResult> {
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples: Vec<[El<S>; 3]> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                triples.push([
                    alg.signature_basis(a),
                    alg.signature_basis(b),
                    alg.signature_basis(c),
                ]);
            }
        }
    }
    for _ in 0..samples {
        triples.push([
            alg.random_element(&mut rng),
            alg.random_element(&mut rng),
            alg.random_element(&mut rng),
        ]);
    }

    let cross =
        |x: &El<S>, y: &El<S>, z: &El<S>| triple_cross(alg, side, x, y, z).expect("same algebra");
    let [mut alt, mut orth, mut pyth] = [DeviationAcc::new(S::MODE); 3];
    for [x, y, z] in &triples {
        let zero = El::zero(n);
        alt.push(
            cross(x, x, y)
                .deviation(&zero)
                .max(cross(x, y, x).deviation(&zero))
                .max(cross(y, x, x).deviation(&zero)),
        );
        let xc = cross(x, y, z);
        for v in [x, y, z] {
            orth.push(alg.inner(&xc, v).modulus_sqr());
        }
        pyth.push((gram_det(alg, [x, y, z]) - alg.inner(&xc, &xc)).modulus_sqr());
    }
    let fin = |a: DeviationAcc| a.get().finish();
    let s = side.label();
    vec![
        CheckResult::from_deviation(
            format!("cross.alternating_{s}"),
            format!("X_{s}(x,x,y) = X_{s}(x,y,x) = X_{s}(y,x,x) = 0"),
            fin(alt),
            tol,
            Expected::Hold,
        ),
        CheckResult::from_deviation(
            format!("cross.orthogonality_{s}"),
            format!("<X_{s}(x1,x2,x3), x_i> = 0"),
            fin(orth),
            tol,
            Expected::Hold,
        ),
        CheckResult::from_deviation(
            format!("cross.pythagorean_{s}"),
            format!("det(<x_i,x_j>) = <X_{s}, X_{s}>"),
            fin(pyth),
            tol,
            Expected::Hold,
        ),
    ]
}

/// A rank-4 array over the signature basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiTensor<S> {
    pub side: Side,
    pub n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> ChiTensor<S> {
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &S {
        &self.entries[((a * self.n + b) * self.n + c) * self.n + d]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Largest violation of antisymmetry under swapping the given slots.
    fn swap_deviation(&self, i: usize, j: usize) -> Deviation {
        let n = self.n;
        let mut acc = DeviationAcc::new(S::MODE);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let mut p = [a, b, c, d];
                        let v = self.get(a, b, c, d).clone();
                        p.swap(i, j);
                        acc.push((v + self.get(p[0], p[1], p[2], p[3]).clone()).modulus_sqr());
                    }
                }
            }
        }
        acc.get().finish()
    }

    /// Antisymmetry violation over the first three slots.
    pub fn first_three_antisymmetry(&self) -> Deviation {
        self.swap_deviation(0, 1).max(self.swap_deviation(1, 2))
    }

    /// Antisymmetry violation over all four slots.
    pub fn total_antisymmetry(&self) -> Deviation {
        self.first_three_antisymmetry()
            .max(self.swap_deviation(2, 3))
    }

    /// Squared size of the imaginary parts of all entries.
    pub fn imaginary_part(&self) -> Deviation {
        let mut acc = DeviationAcc::new(S::MODE);
        for z in &self.entries {
            let im = (z.clone() - z.conj()).scale_ratio(1, 2);
            acc.push(im.modulus_sqr());
        }
        acc.get().finish()
    }

    pub fn deviation(&self, other: &Self) -> Deviation {
        let mut acc = DeviationAcc::new(S::MODE);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc.push((a.clone() - b.clone()).modulus_sqr());
        }
        acc.get().finish()
    }
}

/// `χ_side|ABCD = i⟨X_side(e_A, e_B, e_C), e_D⟩` for any algebra.
pub fn build_chi<S: Scalar>(alg: &Algebra, side: Side) -> ChiTensor<S> {
    let n = alg.dim();
    let basis: Vec<El<S>> = (0..n).map(|a| alg.signature_basis(a)).collect();
    let mut entries = vec![S::zero(); n * n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let x =
                    triple_cross(alg, side, &basis[a], &basis[b], &basis[c]).expect("same algebra");
                for d in 0..n {
                    entries[((a * n + b) * n + c) * n + d] =
                        S::imag_unit() * alg.inner(&x, &basis[d]);
                }
            }
        }
    }
    ChiTensor { side, n, entries }
}

/// `ε_abcd = i⟨X_L(e_a, e_b, e_c), e_d⟩` on the quaternions.
pub fn build_epsilon4() -> ChiTensor<Exact> {
    build_chi(&Algebra::quaternion(), Side::L)
}

fn permutation_sign(p: [usize; 4]) -> i64 {
    let mut sign = 1;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return 0;
            }
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Compares a rank-4 quaternionic array with `ε_0123 · sign(permutation)`.
pub fn levi_civita_deviation<S: Scalar>(eps: &ChiTensor<S>) -> Deviation {
    let e0123 = eps.get(0, 1, 2, 3).clone();
    let mut acc = DeviationAcc::new(S::MODE);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let expect = e0123.clone() * S::from_i64(permutation_sign([a, b, c, d]));
                    acc.push((eps.get(a, b, c, d).clone() - expect).modulus_sqr());
                }
            }
        }
    }
    acc.get().finish()
}

/// Cross-product suite for one algebra: both sides, the `ε`/`χ` tensors and
/// the comparison of `X_L` with `X_R`.
pub fn verify_cross_suite<S: Scalar>(
    alg: &Algebra,
    seed: u64,
    samples: usize,
    tol: f64,
) -> Vec<CheckResult> {
    let mut out = verify_cross_properties::<S>(alg, Side::L, seed, samples, tol);
    out.extend(verify_cross_properties::<S>(
        alg,
        Side::R,
        seed.wrapping_add(1),
        samples,
        tol,
    ));

    let n = alg.dim();
    let chi_l = build_chi::<S>(alg, Side::L);
    let chi_r = build_chi::<S>(alg, Side::R);
    let associative = alg.kind() == AlgebraKind::Quaternion;
    let pick = |h: Expected, o: Expected| if associative { h } else { o };

    let mut sides = DeviationAcc::new(S::MODE);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (
                    alg.signature_basis(a),
                    alg.signature_basis(b),
                    alg.signature_basis(c),
                );
                let l = triple_cross::<S>(alg, Side::L, &x, &y, &z).expect("same algebra");
                let r = triple_cross::<S>(alg, Side::R, &x, &y, &z).expect("same algebra");
                sides.push(l.deviation(&r));
            }
        }
    }
    out.push(CheckResult::from_deviation(
        "cross.sides_agree",
        "X_L(e_A,e_B,e_C) = X_R(e_A,e_B,e_C)",
        sides.get(),
        tol,
        pick(Expected::Hold, Expected::Fail),
    ));
    out.push(CheckResult::from_deviation(
        "cross.chi_sides_agree",
        "chi_L = chi_R",
        chi_l.deviation(&chi_r),
        tol,
        pick(Expected::Hold, Expected::Fail),
    ));
    for chi in [&chi_l, &chi_r] {
        let s = chi.side.label();
        out.push(CheckResult::from_deviation(
            format!("cross.chi_antisymmetric_{s}"),
            format!("chi_{s}|ABCD totally antisymmetric"),
            chi.total_antisymmetry(),
            tol,
            Expected::Hold,
        ));
        out.push(CheckResult::from_deviation(
            format!("cross.chi_real_{s}"),
            format!("Im chi_{s}|ABCD = 0"),
            chi.imaginary_part(),
            tol,
            pick(Expected::Hold, Expected::Record),
        ));
    }
    if associative {
        out.push(CheckResult::from_deviation(
            "cross.epsilon_levi_civita",
            "eps_abcd = eps_0123 sign(abcd)",
            levi_civita_deviation(&chi_l),
            tol,
            Expected::Hold,
        ));
        // ε_0123 must not vanish for the tensor to carry an orientation
        out.push(CheckResult::from_deviation(
            "cross.epsilon_nonzero",
            "eps_0123 != 0",
            chi_l.get(0, 1, 2, 3).modulus_sqr(),
            tol,
            Expected::Fail,
        ));
    }
    out
}

/// The map `T_AB ↦ (i/2) χ_ABCD T^CD` on antisymmetric tensors, in the
/// lexicographic basis of pairs `A < B`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityOperator {
    pub side: Side,
    pub kind: AlgebraKind,
    pub pairs: Vec<(usize, usize)>,
    pub matrix: CMatrix<Exact>,
}

impl DualityOperator {
    pub fn new(alg: &Algebra, side: Side) -> Self {
        let chi = build_chi::<Exact>(alg, side);
        Self::from_chi(&chi, alg.kind())
    }

    pub fn from_chi(chi: &ChiTensor<Exact>, kind: AlgebraKind) -> Self {
        let n = chi.n;
        let eta = MinkowskiEta::new(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let half_i = <Exact as Scalar>::imag_unit().scale_ratio(1, 2);
        let matrix = CMatrix::from_fn(pairs.len(), pairs.len(), |r, s| {
            let (a, b) = pairs[r];
            let (c, d) = pairs[s];
            // T^CD and T^DC both contribute; raising uses η on each index
            let raise = <Exact as Scalar>::from_i64(eta.diag(c) * eta.diag(d));
            half_i * (*chi.get(a, b, c, d) - *chi.get(a, b, d, c)) * raise
        });
        DualityOperator {
            side: chi.side,
            kind,
            pairs,
            matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// `1 - λF`.
    fn shifted(&self, lambda: Rational64) -> CMatrix<Exact> {
        let id = CMatrix::<Exact>::identity(self.dim());
        let l = Exact::new(lambda, Rational64::from_integer(0));
        &id - &self.matrix.scale(&l)
    }

    /// `F - μ`.
    fn literal(&self, mu: Rational64) -> CMatrix<Exact> {
        let id = CMatrix::<Exact>::identity(self.dim());
        &self.matrix - &id.scale(&Exact::new(mu, Rational64::from_integer(0)))
    }
}

/// Duality eigenvalues expected for an algebra and side.
pub fn expected_eigenvalues(kind: AlgebraKind, side: Side) -> [Rational64; 2] {
    let r = Rational64::new;
    match (kind, side) {
        (AlgebraKind::Quaternion, _) => [r(1, 1), r(-1, 1)],
        (AlgebraKind::Octonion, Side::L) => [r(1, 1), r(-1, 3)],
        (AlgebraKind::Octonion, Side::R) => [r(-1, 1), r(1, 3)],
    }
}

/// Result of the spectral analysis of one duality operator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualitySpectrum {
    pub side: String,
    pub algebra: String,
    /// Duality eigenvalues `λ` with `T = λ F T`.
    pub eigenvalues: Vec<String>,
    /// Dimension of each `λ`-eigenspace, from exact ranks.
    pub multiplicities: Vec<usize>,
    /// Squared Frobenius norm of `(1 - λ₁F)(1 - λ₂F)`, exact.
    pub minimal_polynomial_residual: String,
    /// Eigenvalues of `F` itself, `1/λ`.
    pub operator_eigenvalues: Vec<String>,
    /// Dimension of the space of antisymmetric tensors.
    pub dimension: usize,
}

fn fmt_r(r: &Rational64) -> String {
    format_rational(r)
}

/// Certifies the spectrum of `op` against `lambdas` and measures each
/// eigenspace by exact rank.
pub fn duality_spectrum_with(
    op: &DualityOperator,
    lambdas: [Rational64; 2],
) -> (DualitySpectrum, Deviation) {
    let [l1, l2] = lambdas;
    let product = &op.shifted(l1) * &op.shifted(l2);
    let residual = frobenius(&product);
    let multiplicities: Vec<usize> = lambdas
        .iter()
        .map(|&l| op.dim() - rank_exact(&op.shifted(l)).expect("exact matrix"))
        .collect();
    let spectrum = DualitySpectrum {
        side: op.side.label().to_string(),
        algebra: op.kind.name().to_string(),
        eigenvalues: lambdas.iter().map(fmt_r).collect(),
        multiplicities,
        minimal_polynomial_residual: residual.to_string(),
        operator_eigenvalues: lambdas.iter().map(|l| fmt_r(&l.recip())).collect(),
        dimension: op.dim(),
    };
    (spectrum, residual)
}

/// Spectrum of the duality operator for `alg` and `side` against the
/// expected eigenvalue pair.
pub fn duality_spectrum(alg: &Algebra, side: Side) -> DualitySpectrum {
    let op = DualityOperator::new(alg, side);
    duality_spectrum_with(&op, expected_eigenvalues(alg.kind(), side)).0
}

/// Duality suite for one algebra (always exact) together with both spectra.
pub fn verify_duality_suite(alg: &Algebra, tol: f64) -> (Vec<CheckResult>, Vec<DualitySpectrum>) {
    let mut checks = Vec::new();
    let mut spectra = Vec::new();
    let ops = [
        DualityOperator::new(alg, Side::L),
        DualityOperator::new(alg, Side::R),
    ];
    for op in &ops {
        let s = op.side.label();
        let lambdas = expected_eigenvalues(alg.kind(), op.side);
        let (spectrum, residual) = duality_spectrum_with(op, lambdas);
        let reference = format!(
            "(1 - {} F_{s})(1 - {} F_{s}) = 0, T = lambda F T",
            spectrum.eigenvalues[0], spectrum.eigenvalues[1]
        );
        checks.push(CheckResult::from_deviation(
            format!("duality.minimal_polynomial_{s}"),
            reference,
            residual,
            tol,
            Expected::Hold,
        ));
        let missing = op.dim() as i64 - spectrum.multiplicities.iter().sum::<usize>() as i64;
        checks.push(CheckResult::from_deviation(
            format!("duality.multiplicities_{s}"),
            format!("eigenspace dimensions of F_{s} sum to {}", op.dim()),
            Deviation::Exact(Rational64::from_integer(missing * missing)),
            tol,
            Expected::Hold,
        ));
        // the eigenvalue pair read as roots of F rather than of F^-1
        let literal = &op.literal(lambdas[0]) * &op.literal(lambdas[1]);
        checks.push(CheckResult::from_deviation(
            format!("duality.literal_polynomial_{s}"),
            format!(
                "(F_{s} - {})(F_{s} - {}) = 0",
                spectrum.eigenvalues[0], spectrum.eigenvalues[1]
            ),
            frobenius(&literal),
            tol,
            Expected::Record,
        ));
        spectra.push(spectrum);
    }

    // antisymmetry preservation: χ_ABCD = -χ_BACD makes the image antisymmetric
    let mut preserve = Deviation::zero(crate::scalar::Mode::Exact);
    for side in [Side::L, Side::R] {
        preserve = preserve.max(build_chi::<Exact>(alg, side).swap_deviation(0, 1));
    }
    checks.push(CheckResult::from_deviation(
        "duality.preserves_antisymmetry",
        "(F T)_AB = -(F T)_BA for antisymmetric T",
        preserve,
        tol,
        Expected::Hold,
    ));

    // spectrum(F_R) = -spectrum(F_L): F_R obeys the L polynomial with λ -> -λ
    let neg = expected_eigenvalues(alg.kind(), Side::L).map(|l| -l);
    let (mirrored, residual) = duality_spectrum_with(&ops[1], neg);
    let same_dims = mirrored.multiplicities == spectra[0].multiplicities;
    checks.push(CheckResult::from_deviation(
        "duality.opposite_spectra",
        "spectrum(F_R) = -spectrum(F_L) with equal multiplicities",
        if same_dims {
            residual
        } else {
            residual + Deviation::Exact(Rational64::from_integer(1))
        },
        tol,
        Expected::Hold,
    ));
    (checks, spectra)
}
