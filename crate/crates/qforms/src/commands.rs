use qforms_core::bimodule::verify_braidings;
use qforms_core::exterior::{lambda_dims, RankMode};
use qforms_core::laplace::{classical_eigenvalue, eigenvalue, hecke_projectors, spectrum, word_laplace, YoungDiagram};
use qforms_core::metric::{laplace_on_generators, verify_metric, FormCalculus, MetricData, Side};
use qforms_core::{Calculus, Error, OpMatrix, QParams, RatFunc, Sign};
use serde::Serialize;

use crate::cli::{DimsArgs, HodgeArgs, Mode, OracleArgs, SideArg, SizeArgs, SpectrumArgs};
use crate::output::{rational_text, CheckJson, Document, MatrixJson, SuiteJson, Table};
use crate::{Outcome, RunError, Status};

fn bound(dim: Option<usize>, max_dim: usize) -> Result<(), RunError> {
    match dim {
        Some(d) if d <= max_dim => Ok(()),
        Some(d) => Err(RunError::Core(Error::ResourceBound { dim: d, limit: max_dim })),
        None => Err(RunError::Core(Error::ResourceBound { dim: usize::MAX, limit: max_dim })),
    }
}

fn status(passed: bool) -> Status {
    if passed {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub fn dims(a: &DimsArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let mode = match (a.mode, a.seed) {
        (Mode::Exact, _) => RankMode::Exact,
        (Mode::Probabilistic, Some(seed)) => RankMode::Probabilistic { seed },
        (Mode::Auto, Some(seed)) => RankMode::Auto { seed },
        (_, None) => return Err(RunError::Usage("--seed is required unless --mode exact".into())),
    };
    let dims = lambda_dims(a.n as usize, a.tau.into(), a.max_degree, mode, max_dim)?;
    let table = Table {
        header: vec!["degree", "dim"],
        rows: dims.iter().enumerate().map(|(k, d)| vec![k.to_string(), d.map(|d| d.to_string()).unwrap_or_default()]).collect(),
    };
    let st = if dims.iter().any(Option::is_none) { Status::Truncated } else { Status::Pass };
    Ok(Outcome { status: st, document: Document::new(&dims, table) })
}

#[derive(Serialize)]
struct SpectrumRow {
    diagram: Vec<usize>,
    #[serde(rename = "E")]
    e: String,
    value: Option<String>,
    classical: Option<String>,
}

/// Rows for every nonempty diagram; the empty one carries the eigenvalue 0.
pub fn spectrum_rows(a: &SpectrumArgs) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    let entries = spectrum(n, a.max_boxes, a.at.as_ref()).map_err(|e| match e {
        Error::Pole { at } => RunError::Usage(format!("E has a pole at z = {at}; pick another z")),
        e => RunError::Core(e),
    })?;
    let mut rows = Vec::new();
    for e in entries.into_iter().filter(|e| !e.diagram.is_empty()) {
        let classical = if a.classical { Some(rational_text(&classical_eigenvalue(&e.diagram, n)?)) } else { None };
        rows.push(SpectrumRow { diagram: e.diagram.rows().to_vec(), e: e.eigenvalue.to_text(), value: e.value.as_ref().map(rational_text), classical });
    }
    let table = Table {
        header: vec!["diagram", "E", "value", "classical"],
        rows: rows
            .iter()
            .map(|r| {
                let d = YoungDiagram::new(r.diagram.clone()).expect("enumerated").to_string();
                vec![d, r.e.clone(), r.value.clone().unwrap_or_default(), r.classical.clone().unwrap_or_default()]
            })
            .collect(),
    };
    Ok(Outcome { status: Status::Pass, document: Document::new(&rows, table) })
}

pub fn verify_metric_suite(a: &SizeArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    bound(n.checked_pow(6), max_dim)?;
    let p = QParams::symbolic(n);
    let calc = Calculus::new(p.clone());
    let report = verify_metric(&calc, &MetricData::new(&p));
    let suite = SuiteJson::from_report("verify-metric", &report);
    let table = suite.table();
    Ok(Outcome { status: status(suite.passed), document: Document::new(&suite, table) })
}

pub fn braid_check(a: &SizeArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    bound(n.checked_pow(6), max_dim)?;
    let report = verify_braidings(&Calculus::new(QParams::symbolic(n)));
    let suite = SuiteJson::from_report("braid-check", &report);
    let table = suite.table();
    Ok(Outcome { status: status(suite.passed), document: Document::new(&suite, table) })
}

#[derive(Serialize)]
struct RFormEntry {
    index: [usize; 4],
    value: String,
}

#[derive(Serialize)]
struct RFormTableJson {
    name: &'static str,
    entries: Vec<RFormEntry>,
}

#[derive(Serialize)]
struct RFormJson {
    n: usize,
    tables: Vec<RFormTableJson>,
    f: MatrixJson,
    fbar: MatrixJson,
    antipode_duality: bool,
}

pub fn rform(a: &SizeArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    bound(n.checked_pow(4), max_dim)?;
    let calc = Calculus::new(QParams::symbolic(n));
    let t = calc.rform();
    type Getter = fn(&qforms_core::rmatrix::RFormTable<RatFunc>, usize, usize, usize, usize) -> &RatFunc;
    let getters: [(&'static str, Getter); 3] = [
        ("r(u^i_j, u^k_l)", |t, i, j, k, l| t.r_uu(i, j, k, l)),
        ("r(u^i_j, S u^k_l)", |t, i, j, k, l| t.r_u_su(i, j, k, l)),
        ("r(S u^i_j, u^k_l)", |t, i, j, k, l| t.r_su_u(i, j, k, l)),
    ];
    let mut table = Table { header: vec!["table", "i", "j", "k", "l", "value"], rows: Vec::new() };
    let mut tables = Vec::new();
    for (name, get) in getters {
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = get(t, i, j, k, l);
                        if v.is_zero() {
                            continue;
                        }
                        let index = [i + 1, j + 1, k + 1, l + 1];
                        table.rows.push(vec![name.to_string(), index[0].to_string(), index[1].to_string(), index[2].to_string(), index[3].to_string(), v.to_text()]);
                        entries.push(RFormEntry { index, value: v.to_text() });
                    }
                }
            }
        }
        tables.push(RFormTableJson { name, entries });
    }
    let (f, fbar) = t.f_functionals();
    let duality = t.antipode_duality_holds();
    let doc = RFormJson { n, tables, f: MatrixJson::new(&f), fbar: MatrixJson::new(&fbar), antipode_duality: duality };
    Ok(Outcome { status: status(duality), document: Document::new(&doc, table) })
}

#[derive(Serialize)]
struct HodgeJson {
    n: usize,
    k: usize,
    tau: String,
    side: &'static str,
    sign: String,
    seed: u64,
    n0: usize,
    matrix: MatrixJson,
    /// Whether the operator followed by its partner `Λ^{n0-k}_{-τ} → Λ^k_τ`
    /// with the opposite braiding sign is the identity.
    round_trip: bool,
}

pub fn hodge(a: &HodgeArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    let p = QParams::symbolic(n);
    let calc = Calculus::new(p.clone());
    let metric = MetricData::new(&p);
    let mut forms = FormCalculus::new(&calc, &metric, a.seed, max_dim)?;
    let n0 = forms.n0();
    if a.k > n0 {
        return Err(RunError::Usage(format!("--k must be at most the top degree {n0}")));
    }
    let (tau, sign): (Sign, Sign) = (a.tau.into(), a.sign.into());
    let side = match a.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let h = forms.hodge(a.k, tau, side, sign)?;
    let back = forms.hodge(n0 - a.k, tau.flip(), side, sign.flip())?;
    let round_trip = back.mul(&h).is_ok_and(|m| m.is_identity());
    let matrix = MatrixJson::new(&h);
    let table = matrix.table();
    let doc = HodgeJson {
        n,
        k: a.k,
        tau: tau.to_string(),
        side: if side == Side::Left { "left" } else { "right" },
        sign: sign.to_string(),
        seed: a.seed,
        n0,
        matrix,
        round_trip,
    };
    Ok(Outcome { status: status(round_trip), document: Document::new(&doc, table) })
}

pub fn laplace_oracle(a: &OracleArgs, max_dim: usize) -> Result<Outcome, RunError> {
    let n = a.n as usize;
    let m = a.m as usize;
    bound(n.checked_pow(m as u32 + 1).filter(|_| n * n <= max_dim), max_dim)?;
    let p = QParams::symbolic(n);
    let l = word_laplace(&p, m)?;
    let mut checks = Vec::new();
    let mut push = |name: String, anchor: &str, passed: bool, expected: &RatFunc| {
        checks.push(CheckJson { name, anchor: anchor.to_string(), passed, expected: Some(expected.to_text()) })
    };
    if m == 1 {
        let e1 = eigenvalue(&YoungDiagram::column(1, n), n)?;
        push("word-laplace[1]".into(), "L_1 = E_[1] id", l == OpMatrix::identity(n).scale(&e1), &e1);
        let calc = Calculus::new(p.clone());
        let gens = laplace_on_generators(&calc, &MetricData::new(&p));
        push("generators".into(), "Δ u^i_j = E_[1] u^i_j", gens == OpMatrix::identity(n * n).scale(&e1), &e1);
    } else {
        let (sym, anti) = hecke_projectors(&p)?;
        let mut two = vec![0; n];
        two[0] = 2;
        for (proj, lambda, anchor) in [
            (sym, YoungDiagram::new(two).expect("partition"), "L_2 P = E_[2] P, P = (R̂ + q^{-1})/(q + q^{-1})"),
            (anti, YoungDiagram::column(2, n), "L_2 P = E_[1,1] P, P = (q - R̂)/(q + q^{-1})"),
        ] {
            let e = eigenvalue(&lambda, n)?;
            let ok = l.mul(&proj).is_ok_and(|lp| lp == proj.scale(&e));
            push(format!("projector{lambda}"), anchor, ok, &e);
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    let suite = SuiteJson { suite: "laplace-oracle", n, passed, checks };
    let table = suite.table();
    Ok(Outcome { status: status(passed), document: Document::new(&suite, table) })
}

