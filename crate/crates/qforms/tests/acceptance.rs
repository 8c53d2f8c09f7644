//! Acceptance run: every criterion is evaluated at its stated tolerance and
//! reported as `criterion N: PASS` or `criterion N: FAIL`. The process
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use qforms_core::bimodule::verify_braidings;
use qforms_core::exterior::{antisymmetrizer, kernel_equality_check, lambda_dims, top_form, top_form_sigma_eigenvalue_holds, RankMode};
use qforms_core::laplace::{
    classical_eigenvalue, classical_limit, eigenvalue, enumerate_diagrams, hecke_projectors, min_positive, su2_eigenvalue, word_laplace, YoungDiagram,
};
use qforms_core::linalg::rank_probabilistic;
use qforms_core::metric::{laplace_on_generators, verify_metric, FormCalculus, MetricData, Side};
use qforms_core::{Calculus, OpMatrix, QParams, Sign};

type Outcome = Result<Vec<String>, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn dimension_table() -> Outcome {
    let dims = lambda_dims(2, Sign::Plus, 5, RankMode::Auto { seed: 20240611 }, 1024).map_err(|e| e.to_string())?;
    let got: Vec<String> = dims.iter().map(|d| d.map_or("-".into(), |d| d.to_string())).collect();
    ensure(dims == [Some(1), Some(4), Some(6), Some(4), Some(1), Some(0)], format!("dims {got:?}"))?;
    Ok(vec![format!("rank A_k, k = 0..5: {}", got.join(", "))])
}

fn braid_suite() -> Outcome {
    let mut notes = Vec::new();
    for n in [2, 3] {
        let r = verify_braidings(&Calculus::new(QParams::symbolic(n)));
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        ensure(failed.is_empty(), format!("N={n}: failed {failed:?}"))?;
        notes.push(format!("N={n}: {} checks passed", r.checks.len()));
    }
    Ok(notes)
}

fn metric_suite() -> Outcome {
    let mut notes = Vec::new();
    for n in [2, 3] {
        let p = QParams::symbolic(n);
        let calc = Calculus::new(p.clone());
        let metric = MetricData::new(&p);
        let r = verify_metric(&calc, &metric);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        ensure(failed.is_empty(), format!("N={n}: failed {failed:?}"))?;
        notes.push(format!("N={n}: {} checks passed", r.checks.len()));
        let mut f2 = metric.f2.clone();
        f2.swap(0, 1);
        let bad = MetricData::from_diagonals(metric.f1.clone(), f2, metric.g1.clone(), metric.g2.clone());
        let rb = verify_metric(&calc, &bad);
        let sigma_fails = rb.checks.iter().any(|c| c.name.starts_with("sigma-symmetry") && !c.passed);
        ensure(sigma_fails, format!("N={n}: perturbed metric still passes sigma-symmetry"))?;
        notes.push(format!("N={n}: perturbed F2 fails sigma-symmetry"));
    }
    Ok(notes)
}

fn kernel_equality() -> Outcome {
    let calc = Calculus::new(QParams::symbolic(2));
    for k in [2, 3] {
        for tau in Sign::BOTH {
            ensure(kernel_equality_check(&calc, k, tau).map_err(|e| e.to_string())?, format!("k={k} tau={tau}"))?;
        }
    }
    Ok(vec!["ker A^+_k = ker A^-_k for k = 2, 3 on both calculi".into()])
}

fn top_form_and_hodge() -> Outcome {
    let p = QParams::symbolic(2);
    let calc = Calculus::new(p.clone());
    let metric = MetricData::new(&p);
    let err = |e: qforms_core::Error| e.to_string();
    let mut notes = Vec::new();
    for tau in Sign::BOTH {
        let top = top_form(&calc, tau, 11, 1024).map_err(err)?;
        ensure(top.n0 == 4, format!("n0 = {} for tau={tau}", top.n0))?;
        let a4 = antisymmetrizer(&calc, 4, tau, Sign::Plus).map_err(err)?;
        let r4 = rank_probabilistic(&a4.matrix, 11);
        ensure(r4 == 1, format!("rank A_4 = {r4} for tau={tau}"))?;
        for sign in Sign::BOTH {
            ensure(top_form_sigma_eigenvalue_holds(&calc, &top, sign).map_err(err)?, format!("sigma_(4) eigenvalue tau={tau} sign={sign}"))?;
        }
    }
    notes.push("n0 = 4, rank A_4 = 1, sigma_(4) acts as +1 on both top forms".into());
    let mut forms = FormCalculus::new(&calc, &metric, 11, 1024).map_err(err)?;
    let n0 = forms.n0();
    let mut count = 0;
    for k in 0..=n0 {
        for tau in Sign::BOTH {
            for side in [Side::Left, Side::Right] {
                for sign in Sign::BOTH {
                    let h = forms.hodge(k, tau, side, sign).map_err(err)?;
                    let back = forms.hodge(n0 - k, tau.flip(), side, sign.flip()).map_err(err)?;
                    let id = back.mul(&h).map_err(err)?;
                    ensure(id.is_identity(), format!("round trip k={k} tau={tau} side={side:?} sign={sign}"))?;
                    count += 1;
                }
            }
        }
    }
    notes.push(format!("{count} round trips *^∓ ∘ *^± are the identity"));
    Ok(notes)
}

fn su2_identity() -> Outcome {
    for m in 0..=6 {
        let d = YoungDiagram::new(vec![m, 0]).expect("partition");
        let e = eigenvalue(&d, 2).map_err(|e| e.to_string())?;
        let s = su2_eigenvalue(m).map_err(|e| e.to_string())?;
        ensure(e.to_text() == s.to_text(), format!("m={m}: {e} vs {s}"))?;
    }
    Ok(vec!["E_[m,0] = 2(z - 1/z)^2 [m]_z [m+2]_z for m = 0..6".into()])
}

fn oracle_agreement() -> Outcome {
    let err = |e: qforms_core::Error| e.to_string();
    let p = QParams::symbolic(2);
    let calc = Calculus::new(p.clone());
    let e1 = eigenvalue(&YoungDiagram::new(vec![1, 0]).expect("partition"), 2).map_err(err)?;
    let gens = laplace_on_generators(&calc, &MetricData::new(&p));
    ensure(gens == OpMatrix::identity(4).scale(&e1), "laplace on generators differs from E_[1,0] I_4")?;
    let l1 = word_laplace(&p, 1).map_err(err)?;
    ensure(l1 == OpMatrix::identity(2).scale(&e1), "L_1 differs from E_[1,0] I_2")?;
    let l2 = word_laplace(&p, 2).map_err(err)?;
    let (sym, anti) = hecke_projectors(&p).map_err(err)?;
    let e20 = eigenvalue(&YoungDiagram::new(vec![2, 0]).expect("partition"), 2).map_err(err)?;
    let e11 = eigenvalue(&YoungDiagram::new(vec![1, 1]).expect("partition"), 2).map_err(err)?;
    ensure(l2.mul(&sym).map_err(err)? == sym.scale(&e20), "L_2 on the symmetric projector")?;
    ensure(l2.mul(&anti).map_err(err)? == anti.scale(&e11), "L_2 on the antisymmetric projector")?;
    Ok(vec![
        format!("E_[1,0] = {e1}"),
        "Laplacian on u^i_j (4x4) = L_1 on upper indices (2x2) = E_[1,0] id".into(),
        format!("L_2 P_sym = E_[2,0] P_sym, L_2 P_anti = E_[1,1] P_anti = {e11}"),
    ])
}

fn classical() -> Outcome {
    let mut count = 0;
    for n in [2, 3] {
        for d in enumerate_diagrams(n, 3) {
            let lim = classical_limit(&d, n).map_err(|e| e.to_string())?;
            let cl = classical_eigenvalue(&d, n).map_err(|e| e.to_string())?;
            ensure(lim == cl, format!("N={n} {d}: limit {lim} vs classical {cl}"))?;
            count += 1;
        }
    }
    let v = classical_limit(&YoungDiagram::new(vec![1, 0]).expect("partition"), 2).map_err(|e| e.to_string())?;
    ensure(v == rat(3, 2), format!("N=2 [1,0] limit is {v}"))?;
    Ok(vec![format!("{count} diagrams agree; N=2 [1,0] gives {v}")])
}

/// Diagrams with at most `N` rows represent `SU(N)` modulo full columns,
/// which carry the trivial determinant representation; zeros are expected
/// exactly at diagrams made of full columns.
fn ordering() -> Outcome {
    let mut notes = Vec::new();
    for (n, z) in [(2, rat(3, 2)), (3, rat(5, 4))] {
        let mut zeros = Vec::new();
        for d in enumerate_diagrams(n, 4) {
            let v = eigenvalue(&d, n).and_then(|e| e.eval(&z)).map_err(|e| e.to_string())?;
            ensure(!v.is_negative(), format!("N={n} {d}: E = {v} < 0"))?;
            if v.is_zero() {
                zeros.push(d.to_string());
                ensure(d.strip_full_columns(n).is_empty(), format!("N={n} {d}: zero eigenvalue on a nontrivial representation"))?;
            } else {
                ensure(!d.strip_full_columns(n).is_empty(), format!("N={n} {d}: trivial representation with nonzero eigenvalue"))?;
            }
        }
        let m = min_positive(n, 4, &z).map_err(|e| e.to_string())?.ok_or("no positive eigenvalue")?;
        ensure(m.column_shape, format!("N={n}: minimum at {}", m.diagram))?;
        notes.push(format!("N={n}, z={z}: all >= 0, zeros at {}, minimum {} at {}", zeros.join(" "), m.value, m.diagram));
    }
    Ok(notes)
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qforms");
    let runs: [&[&str]; 6] = [
        &["dims", "--n", "2", "--max-degree", "5", "--mode", "probabilistic", "--seed", "17"],
        &["hodge", "--n", "2", "--k", "2", "--seed", "17"],
        &["spectrum", "--n", "3", "--max-boxes", "4", "--at", "5/4", "--classical"],
        &["verify-metric", "--n", "2"],
        &["rform", "--n", "2"],
        &["laplace-oracle", "--n", "2", "--m", "2"],
    ];
    for args in runs {
        let run = || Command::new(bin).args(args).env_remove("QFORMS_MAX_DIM").output().map_err(|e| e.to_string());
        let a = run()?;
        let b = run()?;
        ensure(a.status.code() == Some(0), format!("{args:?} exited with {:?}", a.status.code()))?;
        ensure(a.stdout == b.stdout && a.status.code() == b.status.code(), format!("{args:?} differs between runs"))?;
        serde_json::from_slice::<serde_json::Value>(&a.stdout).map_err(|e| format!("{args:?}: invalid JSON: {e}"))?;
    }
    Ok(vec![format!("{} commands produce byte-identical JSON on repeated runs", runs.len())])
}

type Criterion = (u32, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, dimension_table, Duration::from_secs(300)),
        (2, braid_suite, Duration::from_secs(60)),
        (3, metric_suite, Duration::from_secs(120)),
        (4, kernel_equality, Duration::MAX),
        (5, top_form_and_hodge, Duration::MAX),
        (6, su2_identity, Duration::MAX),
        (7, oracle_agreement, Duration::from_secs(120)),
        (8, classical, Duration::MAX),
        (9, ordering, Duration::MAX),
        (10, determinism, Duration::MAX),
    ];
    let mut failures = 0;
    for (id, run, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|notes| {
            if elapsed > limit {
                Err(format!("took {elapsed:.1?}, limit {limit:?}"))
            } else {
                Ok(notes)
            }
        });
        match result {
            Ok(notes) => {
                println!("criterion {id}: PASS");
                for n in notes {
                    println!("    {n}");
                }
            }
            Err(why) => {
                failures += 1;
                println!("criterion {id}: FAIL");
                println!("    {why}");
            }
        }
        println!("    ({elapsed:.2?})");
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
