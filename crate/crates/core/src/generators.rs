// SPDX-License-Identifier: Apache-2.0

//! The generator matrices Γ_{X|a}, Σ_{X|ab} and Σ_{V|ab} and their identities.
//!
//! Index placement: every matrix is stored with its row index raised, so
//! `(Γ_{L|a})[c][d] = η^{cc} ⟨e_c, e_a e_d⟩`. With this placement matrix
//! products contract an upper index against a lower one and the identities
//! hold as ordinary matrix equations. Lowering the row index is a left
//! multiplication by η.

use crate::algebra::{Algebra, AlgebraElement, AlgebraKind};
use crate::check::{CheckResult, DeviationAcc, Expected};
use crate::linalg::{CMatrix, LinalgError};
use crate::scalar::{Deviation, Exact, Float, Scalar};

/// Which side the basis element multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Side::L => "L",
            Side::R => "R",
        }
    }
}

/// Minkowski metric `diag(-1, +1, …, +1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinkowskiEta {
    n: usize,
}

impl MinkowskiEta {
    pub fn new(n: usize) -> Self {
        MinkowskiEta { n }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `η_aa` (equal to `η^{aa}`).
    #[inline]
    pub fn diag(&self, a: usize) -> i64 {
        if a == 0 {
            -1
        } else {
            1
        }
    }

    /// `η_ab`.
    pub fn at(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.diag(a)
        } else {
            0
        }
    }

    pub fn matrix<S: Scalar>(&self) -> CMatrix<S> {
        CMatrix::from_fn(self.n, self.n, |r, c| S::from_i64(self.at(r, c)))
    }
}

/// `η M^T η`.
pub fn eta_transpose<S: Scalar>(
    m: &CMatrix<S>,
    eta: &MinkowskiEta,
) -> Result<CMatrix<S>, LinalgError> {
    if m.shape() != (eta.dim(), eta.dim()) {
        return Err(LinalgError::ShapeMismatch {
            op: "eta_transpose",
            left: m.shape(),
            right: (eta.dim(), eta.dim()),
        });
    }
    Ok(CMatrix::from_fn(eta.dim(), eta.dim(), |r, c| {
        let v = m[(c, r)].clone();
        if eta.diag(r) * eta.diag(c) < 0 {
            -v
        } else {
            v
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketSign {
    Plus,
    Minus,
}

/// `M^η N ± N^η M`.
pub fn bracket_eta<S: Scalar>(
    m: &CMatrix<S>,
    n: &CMatrix<S>,
    sign: BracketSign,
    eta: &MinkowskiEta,
) -> Result<CMatrix<S>, LinalgError> {
    let a = eta_transpose(m, eta)?.try_matmul(n)?;
    let b = eta_transpose(n, eta)?.try_matmul(m)?;
    match sign {
        BracketSign::Plus => a.try_add(&b),
        BracketSign::Minus => a.try_sub(&b),
    }
}

fn basis_products<S: Scalar>(alg: &Algebra) -> Vec<Vec<AlgebraElement<S>>> {
    let n = alg.dim();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| alg.mul(&alg.signature_basis(x), &alg.signature_basis(y)))
                .collect()
        })
        .collect()
}

/// `Γ_{L|a}`: `η^{cc}⟨e_c, e_a e_d⟩`; `Γ_{R|a}`: `η^{cc}⟨e_c, e_d e_a⟩`.
pub fn build_gamma<S: Scalar>(side: Side, alg: &Algebra) -> Vec<CMatrix<S>> {
    let n = alg.dim();
    let eta = MinkowskiEta::new(n);
    let prods = basis_products::<S>(alg);
    let basis: Vec<AlgebraElement<S>> = (0..n).map(|c| alg.signature_basis(c)).collect();
    (0..n)
        .map(|a| {
            CMatrix::from_fn(n, n, |c, d| {
                let p = match side {
                    Side::L => &prods[a][d],
                    Side::R => &prods[d][a],
                };
                alg.inner(&basis[c], p) * S::from_i64(eta.diag(c))
            })
        })
        .collect()
}

/// Σ from the inner-product definition:
/// `4i Σ_{L|ab} = ⟨e_a e_c, e_b e_d⟩ − ⟨e_a e_d, e_b e_c⟩` (row index raised),
/// and the mirrored products for R.
pub fn build_sigma<S: Scalar>(side: Side, alg: &Algebra) -> Vec<Vec<CMatrix<S>>> {
    let n = alg.dim();
    let eta = MinkowskiEta::new(n);
    let prods = basis_products::<S>(alg);
    let p = |x: usize, y: usize| match side {
        Side::L => &prods[x][y],
        Side::R => &prods[y][x],
    };
    // 1/(4i) = -i/4
    let quarter_inv_i = -S::imag_unit().scale_ratio(1, 4);
    let mut out = vec![vec![CMatrix::zeros(n, n); n]; n];
    for a in 0..n {
        for b in (a + 1)..n {
            let m = CMatrix::from_fn(n, n, |c, d| {
                let v = alg.inner(p(a, c), p(b, d)) - alg.inner(p(a, d), p(b, c));
                v * quarter_inv_i.clone() * S::from_i64(eta.diag(c))
            });
            out[b][a] = -&m;
            out[a][b] = m;
        }
    }
    out
}

/// Σ from the η-commutator of the Γ's: `4i Σ_ab = [Γ_a, Γ_b]_{η−}`.
pub fn build_sigma_from_gamma<S: Scalar>(
    gammas: &[CMatrix<S>],
    eta: &MinkowskiEta,
) -> Vec<Vec<CMatrix<S>>> {
    let n = gammas.len();
    let quarter_inv_i = -S::imag_unit().scale_ratio(1, 4);
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    bracket_eta(&gammas[a], &gammas[b], BracketSign::Minus, eta)
                        .expect("generator shapes agree")
                        .scale(&quarter_inv_i)
                })
                .collect()
        })
        .collect()
}

/// Vector generators, `(Σ_{V|ab})^c_d = −i(δ^c_a η_bd − δ^c_b η_ad)`.
pub fn build_sigma_vector<S: Scalar>(n: usize) -> Vec<Vec<CMatrix<S>>> {
    let eta = MinkowskiEta::new(n);
    let mi = -S::imag_unit();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    CMatrix::from_fn(n, n, |c, d| {
                        let v = (c == a) as i64 * eta.at(b, d) - (c == b) as i64 * eta.at(a, d);
                        mi.clone() * S::from_i64(v)
                    })
                })
                .collect()
        })
        .collect()
}

/// The full generator family for one algebra.
#[derive(Clone, Debug)]
pub struct GeneratorSet<S> {
    pub kind: AlgebraKind,
    pub eta: MinkowskiEta,
    pub gamma_l: Vec<CMatrix<S>>,
    pub gamma_r: Vec<CMatrix<S>>,
    pub sigma_l: Vec<Vec<CMatrix<S>>>,
    pub sigma_r: Vec<Vec<CMatrix<S>>>,
    pub sigma_v: Vec<Vec<CMatrix<S>>>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn new(alg: &Algebra) -> Self {
        let n = alg.dim();
        GeneratorSet {
            kind: alg.kind(),
            eta: MinkowskiEta::new(n),
            gamma_l: build_gamma(Side::L, alg),
            gamma_r: build_gamma(Side::R, alg),
            sigma_l: build_sigma(Side::L, alg),
            sigma_r: build_sigma(Side::R, alg),
            sigma_v: build_sigma_vector(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.eta.dim()
    }

    pub fn gamma(&self, side: Side) -> &[CMatrix<S>] {
        match side {
            Side::L => &self.gamma_l,
            Side::R => &self.gamma_r,
        }
    }

    pub fn sigma(&self, side: Side) -> &[Vec<CMatrix<S>>] {
        match side {
            Side::L => &self.sigma_l,
            Side::R => &self.sigma_r,
        }
    }

    /// `Γ^{X|a} = η^{aa} Γ_{X|a}`.
    pub fn gamma_raised(&self, side: Side, a: usize) -> CMatrix<S> {
        self.gamma(side)[a].scale(&S::from_i64(self.eta.diag(a)))
    }

    pub fn eta_matrix(&self) -> CMatrix<S> {
        self.eta.matrix()
    }
}

impl GeneratorSet<Exact> {
    pub fn to_float(&self) -> GeneratorSet<Float> {
        let one = |v: &[CMatrix<Exact>]| v.iter().map(CMatrix::to_float).collect::<Vec<_>>();
        let two = |v: &[Vec<CMatrix<Exact>>]| v.iter().map(|r| one(r)).collect::<Vec<_>>();
        GeneratorSet {
            kind: self.kind,
            eta: self.eta,
            gamma_l: one(&self.gamma_l),
            gamma_r: one(&self.gamma_r),
            sigma_l: two(&self.sigma_l),
            sigma_r: two(&self.sigma_r),
            sigma_v: two(&self.sigma_v),
        }
    }
}

fn dev<S: Scalar>(a: &CMatrix<S>, b: &CMatrix<S>) -> Deviation {
    a.deviation(b).expect("generator shapes agree")
}

fn by_kind(kind: AlgebraKind, quaternion: Expected, octonion: Expected) -> Expected {
    match kind {
        AlgebraKind::Quaternion => quaternion,
        AlgebraKind::Octonion => octonion,
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| ((a + 1)..n).map(move |b| (a, b)))
}

/// Structure constant of the imaginary units: `e_i e_j = ε_ij^k e_k`.
fn structure_constant(
    alg_table: &crate::algebra::StructureTable,
    i: usize,
    j: usize,
    k: usize,
) -> i64 {
    if i == j {
        return 0;
    }
    let p = alg_table.product(i, j);
    if p.index == k {
        p.sign as i64
    } else {
        0
    }
}

/// Γ identities: involutions, Lie algebra, L/R commutation, η-anticommutator
/// and the η-transpose of a single Γ.
pub fn verify_gamma_identities<S: Scalar>(
    gs: &GeneratorSet<S>,
    alg: &Algebra,
    tol: f64,
) -> Vec<CheckResult> {
    let n = gs.dim();
    let kind = gs.kind;
    let (gl, gr) = (&gs.gamma_l, &gs.gamma_r);
    let mut out = Vec::new();
    let mut push = |id: &str, reference: &str, d: Deviation, e: Expected| {
        out.push(CheckResult::from_deviation(id, reference, d, tol, e));
    };

    let mut conj = DeviationAcc::new(S::MODE);
    let mut transpose = DeviationAcc::new(S::MODE);
    let mut dagger = DeviationAcc::new(S::MODE);
    let mut eta_t = DeviationAcc::new(S::MODE);
    for a in 0..n {
        conj.push(dev(&gl[a].conj(), &-&gr[a]));
        conj.push(dev(&gr[a].conj(), &-&gl[a]));
        transpose.push(dev(&gl[a].transpose(), &gr[a]));
        transpose.push(dev(&gr[a].transpose(), &gl[a]));
        dagger.push(dev(&gl[a].dagger(), &-&gl[a]));
        dagger.push(dev(&gr[a].dagger(), &-&gr[a]));
        let sign = S::from_i64(-gs.eta.diag(a));
        for g in [gl, gr] {
            let lhs = eta_transpose(&g[a], &gs.eta).expect("square");
            eta_t.push(dev(&lhs, &g[a].scale(&sign)));
        }
    }
    let hold = Expected::Hold;
    push(
        "gamma.complex_conj",
        "G_L|a* = -G_R|a, G_R|a* = -G_L|a",
        conj.get(),
        hold,
    );
    push(
        "gamma.transpose",
        "G_L|a^T = G_R|a, G_R|a^T = G_L|a",
        transpose.get(),
        hold,
    );
    push(
        "gamma.hermitian_conj",
        "G_X|a^dag = -G_X|a",
        dagger.get(),
        hold,
    );
    push(
        "gamma.eta_transpose",
        "G_X|a^eta = -eta_aa G_X|a",
        eta_t.get(),
        hold,
    );

    // the closed bracket carries +2 eps on L and -2 eps on R; the opposite
    // assignment is kept as an expected failure so the sign is pinned
    for (side, g, sign) in [(Side::L, gl, 2i64), (Side::R, gr, -2)] {
        let mut lie = DeviationAcc::new(S::MODE);
        let mut opposite = DeviationAcc::new(S::MODE);
        for i in 1..n {
            for j in 1..n {
                let lhs = g[i].commutator(&g[j]).expect("square");
                let mut rhs = CMatrix::zeros(n, n);
                for k in 1..n {
                    let e = structure_constant(alg.table(), i, j, k);
                    if e != 0 {
                        rhs = &rhs + &g[k].scale(&S::from_i64(sign * e));
                    }
                }
                lie.push(dev(&lhs, &rhs));
                opposite.push(dev(&lhs, &-&rhs));
            }
        }
        let x = side.label();
        let (r_ok, r_opp) = if sign > 0 {
            (
                "[G_X|i, G_X|j] = +2 eps_ij^k G_X|k",
                "[G_X|i, G_X|j] = -2 eps_ij^k G_X|k",
            )
        } else {
            (
                "[G_X|i, G_X|j] = -2 eps_ij^k G_X|k",
                "[G_X|i, G_X|j] = +2 eps_ij^k G_X|k",
            )
        };
        push(
            &format!("gamma.lie_algebra_{x}"),
            &r_ok.replace('X', x),
            lie.get(),
            by_kind(kind, Expected::Hold, Expected::Record),
        );
        push(
            &format!("gamma.lie_algebra_{x}_opposite_sign"),
            &r_opp.replace('X', x),
            opposite.get(),
            by_kind(kind, Expected::Fail, Expected::Record),
        );
    }

    let mut time = DeviationAcc::new(S::MODE);
    for g in [gl, gr] {
        for i in 1..n {
            time.push(crate::linalg::frobenius(
                &g[0].commutator(&g[i]).expect("square"),
            ));
        }
    }
    push(
        "gamma.lie_algebra_time",
        "[G_X|0, G_X|i] = 0",
        time.get(),
        hold,
    );

    let mut lr = DeviationAcc::new(S::MODE);
    for a in 0..n {
        for b in 0..n {
            lr.push(crate::linalg::frobenius(
                &gl[a].commutator(&gr[b]).expect("square"),
            ));
        }
    }
    push(
        "gamma.commute_LR",
        "[G_L|a, G_R|b] = 0",
        lr.get(),
        by_kind(kind, Expected::Hold, Expected::Fail),
    );

    let mut anti = DeviationAcc::new(S::MODE);
    for g in [gl, gr] {
        for a in 0..n {
            for b in a..n {
                let lhs = bracket_eta(&g[a], &g[b], BracketSign::Plus, &gs.eta).expect("square");
                let rhs = CMatrix::identity(n).scale(&S::from_i64(2 * gs.eta.at(a, b)));
                anti.push(dev(&lhs, &rhs));
            }
        }
    }
    push(
        "gamma.eta_anticommutator",
        "[G_X|a, G_X|b]_eta+ = 2 eta_ab 1",
        anti.get(),
        hold,
    );
    out
}

/// `i[S_ab, S_cd]` against `s·(η_ac S_bd − η_ad S_bc − η_bc S_ad + η_bd S_ac)`.
fn lie_deviation<S: Scalar>(sig: &[Vec<CMatrix<S>>], eta: &MinkowskiEta, sign: i64) -> Deviation {
    let n = sig.len();
    let i = S::imag_unit();
    let mut acc = DeviationAcc::new(S::MODE);
    for (a, b) in pairs(n) {
        for (c, d) in pairs(n) {
            let lhs = sig[a][b].commutator(&sig[c][d]).expect("square").scale(&i);
            let mut rhs = CMatrix::zeros(n, n);
            for (coef, m) in [
                (eta.at(a, c), &sig[b][d]),
                (-eta.at(a, d), &sig[b][c]),
                (-eta.at(b, c), &sig[a][d]),
                (eta.at(b, d), &sig[a][c]),
            ] {
                if coef != 0 {
                    rhs = &rhs + &m.scale(&S::from_i64(sign * coef));
                }
            }
            acc.push(dev(&lhs, &rhs));
        }
    }
    acc.get()
}

/// `½ Σ_{i,j spatial} S^{ij} S_ij`.
fn casimir<S: Scalar>(sig: &[Vec<CMatrix<S>>]) -> CMatrix<S> {
    let n = sig.len();
    let mut sum = CMatrix::zeros(n, n);
    for i in 1..n {
        for j in 1..n {
            if i != j {
                sum = &sum + &(&sig[i][j] * &sig[i][j]);
            }
        }
    }
    sum.scale(&S::from_ratio(1, 2))
}

/// Σ identities: both construction paths, involutions, Lie algebra, the
/// crossed Γ/Σ commutation, Casimirs and the vector/spinor compatibility.
pub fn verify_sigma_identities<S: Scalar>(gs: &GeneratorSet<S>, tol: f64) -> Vec<CheckResult> {
    let n = gs.dim();
    let kind = gs.kind;
    let eta_m = gs.eta_matrix();
    let mut out = Vec::new();
    let mut push = |id: &str, reference: &str, d: Deviation, e: Expected| {
        out.push(CheckResult::from_deviation(id, reference, d, tol, e));
    };
    let hold = Expected::Hold;

    let mut cross = DeviationAcc::new(S::MODE);
    let mut antisym = DeviationAcc::new(S::MODE);
    for side in [Side::L, Side::R] {
        let bracket = build_sigma_from_gamma(gs.gamma(side), &gs.eta);
        let direct = gs.sigma(side);
        for a in 0..n {
            for b in 0..n {
                cross.push(dev(&direct[a][b], &bracket[a][b]));
                antisym.push(dev(&direct[a][b], &-&direct[b][a]));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            antisym.push(dev(&gs.sigma_v[a][b], &-&gs.sigma_v[b][a]));
        }
    }
    push(
        "sigma.cross_construction",
        "4i S_X|ab = [G_X|a, G_X|b]_eta-",
        cross.get(),
        hold,
    );
    push("sigma.antisymmetric", "S_ab = -S_ba", antisym.get(), hold);

    let (sl, sr) = (&gs.sigma_l, &gs.sigma_r);
    let mut conj = DeviationAcc::new(S::MODE);
    let mut transpose = DeviationAcc::new(S::MODE);
    let mut dagger = DeviationAcc::new(S::MODE);
    for (a, b) in pairs(n) {
        conj.push(dev(&sl[a][b].conj(), &-&sr[a][b]));
        conj.push(dev(&sr[a][b].conj(), &-&sl[a][b]));
        for s in [sl, sr] {
            let rhs = -&(&(&eta_m * &s[a][b]) * &eta_m);
            transpose.push(dev(&s[a][b].transpose(), &rhs));
        }
        dagger.push(dev(&sl[a][b].dagger(), &(&(&eta_m * &sr[a][b]) * &eta_m)));
        dagger.push(dev(&sr[a][b].dagger(), &(&(&eta_m * &sl[a][b]) * &eta_m)));
    }
    push(
        "sigma.complex_conj",
        "S_L|ab* = -S_R|ab, S_R|ab* = -S_L|ab",
        conj.get(),
        hold,
    );
    push(
        "sigma.transpose",
        "S_X|ab^T = -eta S_X|ab eta",
        transpose.get(),
        hold,
    );
    push(
        "sigma.hermitian_conj",
        "S_L|ab^dag = eta S_R|ab eta, S_R|ab^dag = eta S_L|ab eta",
        dagger.get(),
        hold,
    );

    let lie_ref = "i[S_ab, S_cd] = -(eta_ac S_bd - eta_ad S_bc - eta_bc S_ad + eta_bd S_ac)";
    let opp_ref = "i[S_ab, S_cd] = eta_ac S_bd - eta_ad S_bc - eta_bc S_ad + eta_bd S_ac";
    for (label, sig) in [("L", sl), ("R", sr), ("V", &gs.sigma_v)] {
        push(
            &format!("sigma.lie_algebra_{label}"),
            &lie_ref
                .replace('S', &format!("S_{label}|"))
                .replace("|_", "|"),
            lie_deviation(sig, &gs.eta, -1),
            hold,
        );
        push(
            &format!("sigma.lie_algebra_{label}_opposite_sign"),
            &opp_ref
                .replace('S', &format!("S_{label}|"))
                .replace("|_", "|"),
            lie_deviation(sig, &gs.eta, 1),
            Expected::Fail,
        );
    }

    let mut gs_commute = DeviationAcc::new(S::MODE);
    for side in [Side::L, Side::R] {
        let g = gs.gamma(side);
        let s = gs.sigma(side.other());
        for a in 0..n {
            for (c, d) in pairs(n) {
                gs_commute.push(crate::linalg::frobenius(
                    &g[a].commutator(&s[c][d]).expect("square"),
                ));
            }
        }
    }
    push(
        "sigma.gamma_commute",
        "[G_L|a, S_R|cd] = 0, [G_R|a, S_L|cd] = 0",
        gs_commute.get(),
        by_kind(kind, hold, Expected::Record),
    );

    let three_quarters = CMatrix::identity(n).scale(&S::from_ratio(3, 4));
    for (label, sig) in [("L", sl), ("R", sr)] {
        push(
            &format!("sigma.casimir_{label}"),
            &format!("1/2 S^{label}|ij S_{label}|ij = 3/4 1"),
            dev(&casimir(sig), &three_quarters),
            by_kind(kind, hold, Expected::Record),
        );
    }
    let cv = casimir(&gs.sigma_v);
    let block = CMatrix::from_fn(n - 1, n - 1, |r, c| cv[(r + 1, c + 1)].clone());
    push(
        "sigma.casimir_V",
        "1/2 (S^V|ij S_V|ij)_kl = 2 delta_kl",
        dev(&block, &CMatrix::identity(n - 1).scale(&S::from_i64(2))),
        by_kind(kind, hold, Expected::Record),
    );

    let sv = &gs.sigma_v;
    for side in [Side::L, Side::R] {
        let g = gs.gamma(side);
        let s = gs.sigma(side);
        let raised: Vec<CMatrix<S>> = (0..n).map(|a| gs.gamma_raised(side, a)).collect();
        let mut up = DeviationAcc::new(S::MODE);
        let mut down = DeviationAcc::new(S::MODE);
        for (a, b) in pairs(n) {
            let sd = s[a][b].dagger();
            for c in 0..n {
                let mut lhs_up = CMatrix::zeros(n, n);
                let mut lhs_down = CMatrix::zeros(n, n);
                for d in 0..n {
                    let u = &sv[a][b][(c, d)];
                    if !u.is_zero() {
                        lhs_up = &lhs_up - &raised[d].scale(u);
                    }
                    let w = &sv[a][b][(d, c)];
                    if !w.is_zero() {
                        lhs_down = &lhs_down + &g[d].scale(w);
                    }
                }
                let rhs_up = &(&sd * &raised[c]) - &(&raised[c] * &s[a][b]);
                let rhs_down = &(&sd * &g[c]) - &(&g[c] * &s[a][b]);
                up.push(dev(&lhs_up, &rhs_up));
                down.push(dev(&lhs_down, &rhs_down));
            }
        }
        let x = side.label();
        push(
            &format!("sigma.double_cover_raised_{x}"),
            &format!("-(S_V|ab)^c_d G^{x}|d = S_{x}|ab^dag G^{x}|c - G^{x}|c S_{x}|ab"),
            up.get(),
            by_kind(kind, hold, Expected::Record),
        );
        push(
            &format!("sigma.double_cover_lowered_{x}"),
            &format!("(S_V|ab)^d_c G_{x}|d = S_{x}|ab^dag G_{x}|c - G_{x}|c S_{x}|ab"),
            down.get(),
            by_kind(kind, hold, Expected::Record),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_real;
    use crate::scalar::Exact;

    fn quaternion() -> (Algebra, GeneratorSet<Exact>) {
        let alg = Algebra::quaternion();
        let gs = GeneratorSet::new(&alg);
        (alg, gs)
    }

    #[test]
    fn eta_is_gram_matrix() {
        for alg in [Algebra::quaternion(), Algebra::octonion()] {
            let eta = MinkowskiEta::new(alg.dim());
            let m = eta.matrix::<Exact>();
            assert_eq!(&m * &m, CMatrix::identity(alg.dim()));
            assert_eq!(m.transpose(), m);
            let gram = CMatrix::from_fn(alg.dim(), alg.dim(), |a, b| {
                alg.inner(&alg.signature_basis::<Exact>(a), &alg.signature_basis(b))
            });
            assert_eq!(gram, m);
            assert_eq!(eta_transpose(&m, &eta).unwrap(), m);
        }
    }

    #[test]
    fn eta_transpose_is_an_involution() {
        let (_, gs) = quaternion();
        let m = &gs.gamma_l[1] + &gs.sigma_r[0][2];
        let tt = eta_transpose(&eta_transpose(&m, &gs.eta).unwrap(), &gs.eta).unwrap();
        assert_eq!(tt, m);
        assert!(eta_transpose(&CMatrix::<Exact>::zeros(3, 3), &gs.eta).is_err());
        let z = bracket_eta(&m, &m, BracketSign::Minus, &gs.eta).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn gamma_entries() {
        let (_, gs) = quaternion();
        let i = Exact::imag_unit();
        // e_0 = i is central, so both time-like generators are i times 1
        assert_eq!(gs.gamma_l[0], CMatrix::identity(4).scale(&i));
        assert_eq!(gs.gamma_r[0], gs.gamma_l[0]);
        // e_1 e_2 = e_3 and e_1 e_3 = -e_2
        assert_eq!(gs.gamma_l[1][(3, 2)], Exact::one());
        assert_eq!(gs.gamma_l[1][(2, 3)], -Exact::one());
        for g in gs.gamma_l.iter().chain(&gs.gamma_r) {
            for z in g.entries() {
                let ok = [Exact::zero(), Exact::one(), -Exact::one(), i, -i];
                assert!(ok.contains(z), "{z:?}");
            }
            // i Γ is hermitian
            let ig = g.scale(&i);
            assert_eq!(ig.dagger(), ig);
        }
    }

    #[test]
    fn octonion_gammas_are_monomial() {
        let alg = Algebra::octonion();
        let gs = GeneratorSet::<Exact>::new(&alg);
        for g in gs.gamma_l.iter().chain(&gs.gamma_r) {
            for c in 0..8 {
                let nz: Vec<&Exact> = (0..8)
                    .map(|r| &g[(r, c)])
                    .filter(|z| !z.is_zero())
                    .collect();
                assert_eq!(nz.len(), 1);
                assert_eq!(nz[0].modulus_sqr(), Exact::one().modulus_sqr());
            }
            let ig = g.scale(&Exact::imag_unit());
            assert_eq!(ig.dagger(), ig);
        }
    }

    #[test]
    fn sigma_vector_shape() {
        let sv = build_sigma_vector::<Exact>(4);
        for a in 0..4 {
            for b in 0..4 {
                assert!(sv[a][b].entries().all(|z| z.re == Exact::zero().re));
                assert_eq!(sv[a][b], -&sv[b][a]);
            }
        }
        let nz: Vec<(usize, usize)> = (0..4)
            .flat_map(|c| (0..4).map(move |d| (c, d)))
            .filter(|&(c, d)| !sv[0][1][(c, d)].is_zero())
            .collect();
        assert_eq!(nz, vec![(0, 1), (1, 0)]);
        // purely imaginary entries: i Σ_V is real
        assert!(is_real(&sv[0][1].scale(&Exact::imag_unit())));
    }

    #[test]
    fn quaternion_suites_hold() {
        let (alg, gs) = quaternion();
        let mut checks = verify_gamma_identities(&gs, &alg, 0.0);
        checks.extend(verify_sigma_identities(&gs, 0.0));
        for c in &checks {
            assert!(c.passed, "{} deviation {}", c.check_id, c.deviation);
            if c.expected == Expected::Hold {
                assert_eq!(c.deviation, "0", "{}", c.check_id);
            }
        }
        let opp = checks
            .iter()
            .find(|c| c.check_id == "sigma.lie_algebra_L_opposite_sign")
            .unwrap();
        assert!(!opp.held);
    }

    #[test]
    fn sigma_lie_example() {
        // i[Σ_01, Σ_12] = η_11 Σ_02
        let (_, gs) = quaternion();
        for s in [&gs.sigma_l, &gs.sigma_r, &gs.sigma_v] {
            let lhs = s[0][1]
                .commutator(&s[1][2])
                .unwrap()
                .scale(&Exact::imag_unit());
            assert_eq!(lhs, s[0][2]);
        }
    }

    #[test]
    fn gamma_lie_example() {
        let (_, gs) = quaternion();
        let c = gs.gamma_l[1].commutator(&gs.gamma_l[2]).unwrap();
        assert_eq!(c, gs.gamma_l[3].scale(&Exact::from_i64(2)));
        let c = gs.gamma_r[1].commutator(&gs.gamma_r[2]).unwrap();
        assert_eq!(c, gs.gamma_r[3].scale(&Exact::from_i64(-2)));
    }

    #[test]
    fn float_set_matches_exact() {
        let (alg, gs) = quaternion();
        let fs = gs.to_float();
        let checks = verify_gamma_identities(&fs, &alg, 1e-12);
        assert!(checks.iter().all(|c| c.passed));
    }

    #[test]
    fn octonion_outcomes() {
        let alg = Algebra::octonion();
        let gs = GeneratorSet::<Exact>::new(&alg);
        let mut checks = verify_gamma_identities(&gs, &alg, 0.0);
        checks.extend(verify_sigma_identities(&gs, 0.0));
        let get = |id: &str| checks.iter().find(|c| c.check_id == id).unwrap();
        for id in [
            "gamma.complex_conj",
            "gamma.transpose",
            "gamma.hermitian_conj",
            "gamma.eta_anticommutator",
            "sigma.cross_construction",
            "sigma.complex_conj",
            "sigma.transpose",
            "sigma.hermitian_conj",
            "sigma.lie_algebra_L",
            "sigma.lie_algebra_R",
            "sigma.lie_algebra_V",
        ] {
            assert!(get(id).held && get(id).passed, "{id}");
        }
        let commute = get("gamma.commute_LR");
        assert!(!commute.held && commute.passed);
        assert!(!get("sigma.casimir_L").held);
        assert!(
            checks.iter().all(|c| !c.is_failure()),
            "{:?}",
            checks
                .iter()
                .filter(|c| c.is_failure())
                .map(|c| &c.check_id)
                .collect::<Vec<_>>()
        );
    }
}
