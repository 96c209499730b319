// SPDX-License-Identifier: Apache-2.0

//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

// Tensor code reads best with explicit indices; negated comparisons reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use spinlink::algebra::{Algebra, AlgebraKind};
use spinlink::check::{CheckResult, Expected};
use spinlink::crossprod::{build_chi, expected_eigenvalues};
use spinlink::generators::{GeneratorSet, Side};
use spinlink::linalg::{rank_exact, CMatrix};
use spinlink::scalar::{Exact, Mode, Scalar};
use spinlink::suites::{run_suites, RunConfig, Suite};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn report(kind: AlgebraKind, mode: Mode, suites: &[Suite]) -> Vec<CheckResult> {
    let mut cfg = RunConfig::new(kind);
    cfg.mode = mode;
    cfg.suites = suites.to_vec();
    run_suites(&cfg).expect("suite run").checks
}

fn find<'a>(checks: &'a [CheckResult], id: &str) -> Result<&'a CheckResult, String> {
    checks
        .iter()
        .find(|c| c.check_id == id)
        .ok_or_else(|| format!("missing check {id}"))
}

/// Every listed check must have held with an exact zero deviation.
fn exact_zero(checks: &[CheckResult], ids: &[&str]) -> Result<(), String> {
    for id in ids {
        let c = find(checks, id)?;
        if c.mode != Mode::Exact || c.deviation != "0" || !c.held {
            return Err(format!("{id}: deviation {} ({:?})", c.deviation, c.mode));
        }
    }
    Ok(())
}

fn within(checks: &[CheckResult], ids: &[&str], tol: f64) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for id in ids {
        let c = find(checks, id)?;
        if !(c.deviation_value <= tol) {
            return Err(format!("{id}: deviation {} exceeds {tol:e}", c.deviation));
        }
        worst = worst.max(c.deviation_value);
    }
    Ok(worst)
}

fn budget(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit_s) {
        Err(format!(
            "took {:.2}s, budget {limit_s}s",
            elapsed.as_secs_f64()
        ))
    } else {
        Ok(())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ids = [
        "axioms.inner_symmetric",
        "axioms.inner_conjugation",
        "axioms.move_left",
        "axioms.move_right",
        "axioms.sum_left",
        "axioms.sum_right",
        "axioms.completeness",
    ];
    for kind in [AlgebraKind::Quaternion, AlgebraKind::Octonion] {
        exact_zero(&report(kind, Mode::Exact, &[Suite::Axioms]), &ids)
            .map_err(|e| format!("{}: {e}", kind.name()))?;
    }
    budget(start.elapsed(), 5)?;
    Ok("seven axiom identities exact on both algebras".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let checks = report(
        AlgebraKind::Quaternion,
        Mode::Exact,
        &[Suite::Gamma, Suite::Sigma],
    );
    exact_zero(
        &checks,
        &[
            "gamma.complex_conj",
            "gamma.transpose",
            "gamma.hermitian_conj",
            "gamma.lie_algebra_L",
            "gamma.lie_algebra_R",
            "gamma.lie_algebra_time",
            "gamma.commute_LR",
            "gamma.eta_anticommutator",
            "sigma.complex_conj",
            "sigma.transpose",
            "sigma.hermitian_conj",
            "sigma.antisymmetric",
            "sigma.lie_algebra_L",
            "sigma.lie_algebra_R",
            "sigma.lie_algebra_V",
            "sigma.gamma_commute",
            "sigma.double_cover_raised_L",
            "sigma.double_cover_raised_R",
            "sigma.double_cover_lowered_L",
            "sigma.double_cover_lowered_R",
            "sigma.cross_construction",
        ],
    )?;
    // Independent look at the two construction paths.
    let h = Algebra::quaternion();
    let gs = GeneratorSet::<Exact>::new(&h);
    let rebuilt = spinlink::generators::build_sigma_from_gamma(&gs.gamma_l, &gs.eta);
    for a in 0..4 {
        for b in 0..4 {
            if rebuilt[a][b] != gs.sigma_l[a][b] {
                return Err(format!("Sigma_L[{a}{b}] construction paths differ"));
            }
        }
    }
    budget(start.elapsed(), 5)?;
    Ok("quaternionic generator identities exact, construction paths agree".into())
}

/// `Σ_{i<j} M_ij M_ij` over spatial indices, the spatial-only half sum.
fn spatial_casimir(ms: &[Vec<CMatrix<Exact>>]) -> CMatrix<Exact> {
    let n = ms[0][0].rows();
    let mut acc = CMatrix::<Exact>::zeros(n, n);
    for i in 1..4 {
        for j in (i + 1)..4 {
            acc = acc
                .try_add(&ms[i][j].try_matmul(&ms[i][j]).unwrap())
                .unwrap();
        }
    }
    acc
}

fn criterion_3() -> Outcome {
    let checks = report(AlgebraKind::Quaternion, Mode::Exact, &[Suite::Sigma]);
    exact_zero(
        &checks,
        &["sigma.casimir_L", "sigma.casimir_R", "sigma.casimir_V"],
    )?;
    let gs = GeneratorSet::<Exact>::new(&Algebra::quaternion());
    let three_quarters = CMatrix::<Exact>::identity(4).scale(&Exact::from_ratio(3, 4));
    for (label, ms) in [("L", &gs.sigma_l), ("R", &gs.sigma_r)] {
        if spatial_casimir(ms) != three_quarters {
            return Err(format!("direct Sigma_{label} Casimir is not 3/4"));
        }
    }
    let v = spatial_casimir(&gs.sigma_v);
    for i in 1..4 {
        for j in 1..4 {
            let want = if i == j {
                Exact::from_i64(2)
            } else {
                Exact::zero()
            };
            if v[(i, j)] != want {
                return Err(format!(
                    "direct Sigma_V Casimir entry ({i},{j}) = {}",
                    v[(i, j)].entry_string()
                ));
            }
        }
    }
    Ok("spinor Casimirs 3/4, vector spatial Casimir 2, exact".into())
}

fn criterion_4() -> Outcome {
    let checks = report(
        AlgebraKind::Octonion,
        Mode::Exact,
        &[Suite::Gamma, Suite::Sigma],
    );
    exact_zero(
        &checks,
        &[
            "gamma.complex_conj",
            "gamma.transpose",
            "gamma.hermitian_conj",
            "gamma.eta_anticommutator",
            "sigma.complex_conj",
            "sigma.transpose",
            "sigma.hermitian_conj",
            "sigma.antisymmetric",
            "sigma.lie_algebra_L",
            "sigma.lie_algebra_R",
            "sigma.lie_algebra_V",
        ],
    )?;
    let c = find(&checks, "gamma.commute_LR")?;
    if c.expected != Expected::Fail || c.held || !c.passed {
        return Err(format!(
            "left/right commutator did not register as violated: {c:?}"
        ));
    }
    // Independent witness: some pair of left and right generators fails to commute.
    let gs = GeneratorSet::<Exact>::new(&Algebra::octonion());
    let witness = (0..8)
        .flat_map(|a| (0..8).map(move |b| (a, b)))
        .find(|&(a, b)| !gs.gamma_l[a].commutator(&gs.gamma_r[b]).unwrap().is_zero());
    match witness {
        Some((a, b)) => Ok(format!(
            "octonionic carry-over exact, [Gamma_L{a}, Gamma_R{b}] != 0"
        )),
        None => Err("all left and right generators commute".into()),
    }
}

fn criterion_5() -> Outcome {
    let checks = report(AlgebraKind::Quaternion, Mode::Float, &[Suite::Transforms]);
    let worst = within(
        &checks,
        &[
            "transforms.complex_conj",
            "transforms.eta_transpose",
            "transforms.hermitian_conj",
            "transforms.inverse",
            "transforms.lorentz",
            "transforms.vector_real",
            "transforms.vector_det",
            "transforms.vector_raised",
            "transforms.vector_lowered",
            "transforms.bilinear",
            "transforms.kinetic",
        ],
        1e-9,
    )?;
    let nc = find(&checks, "transforms.negative_control")?;
    if !(nc.deviation_value > 1e-3) {
        return Err(format!("negative control varied by only {}", nc.deviation));
    }
    Ok(format!(
        "worst deviation {worst:.1e}, negative control {:.3}",
        nc.deviation_value
    ))
}

fn criterion_6() -> Outcome {
    let checks = report(AlgebraKind::Quaternion, Mode::Exact, &[Suite::Lagrangian]);
    exact_zero(
        &checks,
        &[
            "projectors.idempotent",
            "projectors.complete",
            "projectors.orthogonal",
            "projectors.eta_orthogonal",
            "projectors.commute_gamma",
            "projectors.commute_sigma",
            "projectors.commute_inner_diagonal",
        ],
    )?;
    for id in [
        "projectors.eta_pairing_nonzero",
        "projectors.noncommute_inner_offdiagonal",
    ] {
        let c = find(&checks, id)?;
        if c.held || !c.passed {
            return Err(format!("{id}: required non-commutation not observed"));
        }
    }
    Ok("projector algebra and commutation pattern exact".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let checks = report(AlgebraKind::Quaternion, Mode::Float, &[Suite::Lagrangian]);
    let worst = within(
        &checks,
        &[
            "lagrangian.real",
            "lagrangian.rigid_lorentz",
            "lagrangian.rigid_su2",
            "lagrangian.rigid_u1",
        ],
        1e-9,
    )?;
    exact_zero(&checks, &["lagrangian.mass_channels"])?;
    within(&checks, &["lagrangian.local_u1_mass"], 1e-10)?;
    let w = find(&checks, "lagrangian.local_u1_mass_unequal_charges")?;
    if !(w.deviation_value > 1e-4) {
        return Err(format!("unequal hypercharge witness only {}", w.deviation));
    }
    budget(start.elapsed(), 30)?;
    Ok(format!(
        "rigid invariance {worst:.1e}, U(1) mass witness {:.2e}",
        w.deviation_value
    ))
}

fn criterion_8() -> Outcome {
    let h = report(AlgebraKind::Quaternion, Mode::Exact, &[Suite::Cross]);
    let o = report(AlgebraKind::Octonion, Mode::Exact, &[Suite::Cross]);
    let ids = [
        "cross.orthogonality_L",
        "cross.orthogonality_R",
        "cross.pythagorean_L",
        "cross.pythagorean_R",
    ];
    exact_zero(&h, &ids)?;
    exact_zero(&o, &ids)?;
    exact_zero(&h, &["cross.epsilon_levi_civita"])?;
    let c = find(&o, "cross.chi_sides_agree")?;
    if c.held {
        return Err("chi_L equals chi_R on the octonions".into());
    }
    let alg = Algebra::octonion();
    let (l, r) = (
        build_chi::<Exact>(&alg, Side::L),
        build_chi::<Exact>(&alg, Side::R),
    );
    let differing = l
        .entries()
        .iter()
        .zip(r.entries())
        .filter(|(a, b)| a != b)
        .count();
    Ok(format!(
        "cross identities exact, chi_L and chi_R differ in {differing} entries"
    ))
}

/// `F[(A,B)][(C,D)] = (i/2)(χ_ABCD − χ_ABDC) η_CC η_DD` rebuilt directly from χ.
fn duality_matrix(alg: &Algebra, side: Side) -> CMatrix<Exact> {
    let chi = build_chi::<Exact>(alg, side);
    let n = chi.n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let half_i = Exact::new(Rational64::from_integer(0), Rational64::new(1, 2));
    CMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
        let (a, b) = pairs[r];
        let (cc, d) = pairs[c];
        let sign = Exact::from_i64(alg.eta(cc) * alg.eta(d));
        half_i * (*chi.get(a, b, cc, d) - *chi.get(a, b, d, cc)) * sign
    })
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for kind in [AlgebraKind::Quaternion, AlgebraKind::Octonion] {
        let alg = Algebra::of_kind(kind);
        let checks = report(kind, Mode::Exact, &[Suite::Duality]);
        exact_zero(
            &checks,
            &[
                "duality.minimal_polynomial_L",
                "duality.minimal_polynomial_R",
                "duality.multiplicities_L",
                "duality.multiplicities_R",
            ],
        )?;
        for side in [Side::L, Side::R] {
            let f = duality_matrix(&alg, side);
            let n = f.rows();
            let one = CMatrix::<Exact>::identity(n);
            let [l1, l2] = expected_eigenvalues(kind, side);
            let shifted = |l: Rational64| {
                one.try_sub(&f.scale(&Exact::new(l, Rational64::from_integer(0))))
                    .unwrap()
            };
            let (a, b) = (shifted(l1), shifted(l2));
            if !a.try_matmul(&b).unwrap().is_zero() {
                return Err(format!(
                    "{} {}: minimal polynomial residual nonzero",
                    kind.name(),
                    side.label()
                ));
            }
            let m1 = n - rank_exact(&a).unwrap();
            let m2 = n - rank_exact(&b).unwrap();
            if m1 + m2 != n {
                return Err(format!(
                    "{} {}: eigenspaces {m1}+{m2} != {n}",
                    kind.name(),
                    side.label()
                ));
            }
            summary.push(format!(
                "{}{} {l1}:{m1} {l2}:{m2}",
                kind.name(),
                side.label()
            ));
        }
    }
    budget(start.elapsed(), 10)?;
    Ok(summary.join(", "))
}

fn criterion_10() -> Outcome {
    for kind in [AlgebraKind::Quaternion, AlgebraKind::Octonion] {
        let mut cfg = RunConfig::new(kind);
        cfg.seed = 7;
        let a = run_suites(&cfg).map_err(|e| e.to_string())?.to_json();
        let b = run_suites(&cfg).map_err(|e| e.to_string())?.to_json();
        if a != b {
            return Err(format!("{} reports differ between runs", kind.name()));
        }
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_spinlink"))
            .args(["verify", "--seed", "11", "--mode", "float"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (x, y) = (run()?, run()?);
    if x.stdout.is_empty() || x.stdout != y.stdout {
        return Err("CLI reports differ between runs".into());
    }
    Ok("library and CLI reports byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom identities", criterion_1),
        ("quaternionic generators", criterion_2),
        ("Casimir operators", criterion_3),
        ("octonionic carry-over", criterion_4),
        ("finite transforms", criterion_5),
        ("helicity-isospin projectors", criterion_6),
        ("gauge Lagrangian", criterion_7),
        ("triple cross products", criterion_8),
        ("self-duality spectra", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
