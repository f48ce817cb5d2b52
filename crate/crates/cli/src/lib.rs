//! Command implementations for the `singlab` binary, the graph corpus and
//! the acceptance runner. Every command renders both a text and a JSON
//! report; `main` only parses arguments and picks one.

pub mod corpus;
pub mod verify;

use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use singlab_core::artinian::{colength, colength_saturating, MonomialIdeal};
use singlab_core::classify::{classify_gorenstein_elliptic_ideals, CandidateCheck};
use singlab_core::cycles::{canonical_cycle, chi, fundamental_cycle_full};
use singlab_core::elliptic::{ellipticity, elliptic_sequence, Sweep};
use singlab_core::linalg;
use singlab_core::poly::Poly;
use singlab_core::wh::{a_invariant, brieskorn_invariants, pg_weighted_homogeneous, WeightedPoly};
use singlab_core::{DualGraph, Error, QCycle};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, message: String },
    Corpus(verify::CorpusFileError),
}

impl CliError {
    /// 2 for failed internal cross-checks, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Corpus(e) => write!(f, "corrupted corpus file {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A command's output in both formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Exit code for a command that completed but found failures.
    pub exit_code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, exit_code: 0 }
    }
}

pub fn read_graph(path: &Path) -> CliResult<DualGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    DualGraph::parse(&text).map_err(|e| match e {
        Error::Syntax { pos, msg } => CliError::Io {
            path: path.to_path_buf(),
            message: format!("syntax error at byte {pos}: {msg}"),
        },
        other => CliError::Core(other),
    })
}

fn qcycle_text(g: &DualGraph, k: &QCycle) -> String {
    k.0.iter()
        .enumerate()
        .map(|(i, c)| format!("{}={c}", g.id(i)))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn graph_analyze(g: &DualGraph) -> CliResult<Report> {
    let matrix = g.intersection_matrix();
    let minors: Vec<String> = linalg::leading_principal_minors(&linalg::to_big(matrix))
        .iter()
        .map(ToString::to_string)
        .collect();
    let ze = fundamental_cycle_full(g)?;
    let chi_ze = chi(g, &ze)?;
    let k = canonical_cycle(g)?;
    let gorenstein = k.is_integral();
    let ell = ellipticity(g)?;
    let sweep = match ell.sweep {
        Sweep::Checked { candidates } => json!({ "status": "checked", "candidates": candidates.to_string() }),
        Sweep::Skipped { needed, limit } => {
            json!({ "status": "skipped", "needed": needed.to_string(), "limit": limit.to_string() })
        }
        Sweep::NotApplicable => json!({ "status": "not-applicable" }),
    };
    let json = json!({
        "valid": true,
        "vertices": g.len(),
        "matrix": matrix,
        "leading_minors": minors,
        "negative_definite": g.is_negative_definite(),
        "minimal": g.is_minimal(),
        "fundamental_cycle": g.cycle_json(&ze),
        "canonical_cycle": g.qcycle_json(&k),
        "chi_fundamental": chi_ze,
        "numerically_gorenstein": gorenstein,
        "elliptic": ell.elliptic,
        "chi_sweep": sweep,
    });
    let mut text = vec![
        format!("valid graph with {} vertices", g.len()),
        "intersection matrix:".to_string(),
    ];
    for row in matrix {
        text.push(format!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>()));
    }
    text.push(format!("leading minors: {}", minors.join(" ")));
    text.push(format!("minimal resolution: {}", g.is_minimal()));
    text.push(format!("Z_E = {}", g.format_cycle(&ze)));
    text.push(format!("K = {}", qcycle_text(g, &k)));
    text.push(format!("chi(Z_E) = {chi_ze}"));
    text.push(format!("numerically Gorenstein: {gorenstein}"));
    text.push(format!("elliptic: {}", ell.elliptic));
    match ell.sweep {
        Sweep::Checked { candidates } => text.push(format!("chi >= 0 on (0, 2Z_E]: checked {candidates} cycles")),
        Sweep::Skipped { needed, limit } => {
            text.push(format!("chi >= 0 sweep skipped: {needed} cycles exceed the guard {limit}"))
        }
        Sweep::NotApplicable => {}
    }
    Ok(Report::ok(text.join("\n"), json))
}

pub fn elliptic_sequence_report(g: &DualGraph) -> CliResult<Report> {
    let seq = elliptic_sequence(g)?;
    let ids = |s: &[usize]| s.iter().map(|&i| g.id(i)).collect::<Vec<_>>().join(" ");
    let mut text = vec![format!("m = {}", seq.m()), format!("E_min = {}", g.format_cycle(seq.e_min()))];
    for i in 0..=seq.m() {
        let z = seq.z(i);
        text.push(format!(
            "Z_{i} = {}   (Z_{i}^2 = {}, B_{i} = {})",
            g.format_cycle(z),
            g.self_intersection(z)?,
            ids(seq.support(i))
        ));
    }
    for t in 0..=seq.m() {
        text.push(format!("C_{t} = {}", g.format_cycle(&seq.c(t as isize))));
    }
    text.push(format!("verified: {}", seq.checks().join("; ")));
    Ok(Report::ok(text.join("\n"), seq.to_json(g)))
}

/// Where `classify` takes `p_g` from.
pub enum PgSource {
    Given(i64),
    Equation { weights: [i64; 3], poly: String },
}

pub fn classify(g: &DualGraph, source: &PgSource, char0: bool) -> CliResult<Report> {
    let p_g = match source {
        PgSource::Given(p) => *p,
        PgSource::Equation { weights, poly } => {
            pg_weighted_homogeneous(&WeightedPoly::new(*weights, Poly::parse(poly)?)?)
        }
    };
    let report = classify_gorenstein_elliptic_ideals(g, p_g, char0)?;
    let mut json = report.to_json(g);
    let candidates = match report.candidate_check {
        CandidateCheck::Passed { candidates } => json!({ "status": "checked", "candidates": candidates.to_string() }),
        CandidateCheck::Skipped { needed, limit } => {
            json!({ "status": "skipped", "needed": needed.to_string(), "limit": limit.to_string() })
        }
    };
    json["candidate_check"] = candidates;

    let mut text = vec![
        format!("p_g = {p_g}, m = {}", report.m),
        format!(
            "gamma = {}, beta = {}, A_f = {:?}{}",
            report.af.gamma,
            report.af.beta,
            report.af.af,
            if report.af.maximal { " (maximally elliptic)" } else { "" }
        ),
        format!("zeta = {}", report.zeta),
    ];
    for i in &report.ideals {
        text.push(format!(
            "  C_{} = {}: colength {}, e0 = {}, e2bar = {}, q = {}, {}",
            i.t,
            g.format_cycle(&i.cycle),
            i.colength,
            i.e0,
            i.eb2,
            i.q,
            i.kind
        ));
    }
    match report.candidate_check {
        CandidateCheck::Passed { candidates } => {
            text.push(format!("candidate set below C_m checked over {candidates} cycles"))
        }
        CandidateCheck::Skipped { needed, limit } => {
            text.push(format!("candidate check skipped: {needed} cycles exceed the guard {limit}"))
        }
    }
    text.extend(report.notes.iter().map(|n| format!("note: {n}")));
    Ok(Report::ok(text.join("\n"), json))
}

pub fn brieskorn(a: i64, b: i64, c: i64) -> CliResult<Report> {
    let inv = brieskorn_invariants(a, b, c)?;
    let text = format!(
        "x^{a} + y^{b} + z^{c}: p_g = {}, a-invariant = {}, br(m) = {}",
        inv.p_g, inv.a_invariant, inv.br
    );
    let json = json!({
        "exponents": [a, b, c],
        "pg": inv.p_g,
        "a_invariant": inv.a_invariant,
        "br": inv.br,
    });
    Ok(Report::ok(text, json))
}

pub fn weighted_homogeneous(weights: [i64; 3], poly: &str) -> CliResult<Report> {
    let wp = WeightedPoly::new(weights, Poly::parse(poly)?)?;
    let p_g = pg_weighted_homogeneous(&wp);
    let a = a_invariant(weights, wp.degree());
    let text = format!(
        "{} with weights {weights:?}: degree {}, a-invariant {a}, p_g = {p_g}",
        wp.poly(),
        wp.degree()
    );
    let json = json!({
        "poly": wp.poly().to_string(),
        "weights": weights,
        "degree": wp.degree(),
        "a_invariant": a,
        "pg": p_g,
    });
    Ok(Report::ok(text, json))
}

pub fn artinian_colength(poly: &str, ideal: &str, saturate: Option<u32>) -> CliResult<Report> {
    let f = Poly::parse(poly)?;
    let m = MonomialIdeal::parse(ideal)?;
    let value = match saturate {
        Some(cap) => colength_saturating(&f, &m, cap)?,
        None => colength(&f, &m)?,
    };
    let text = format!("dim_k k[x,y,z]/(({f}) + {m}) = {value}");
    let json = json!({
        "poly": f.to_string(),
        "ideal": m.to_string(),
        "saturated": saturate.is_some(),
        "colength": value,
    });
    Ok(Report::ok(text, json))
}

pub fn corpus_emit(name: &str, param: usize) -> CliResult<Report> {
    let family: corpus::Family = name.parse()?;
    let g = corpus::graph(family, param)?;
    let json: Value = serde_json::from_str(&g.to_json()).expect("graph JSON re-reads");
    Ok(Report::ok(g.to_json(), json))
}

pub fn verify_paper(corpus_dir: Option<&Path>) -> CliResult<Report> {
    if let Some(dir) = corpus_dir {
        verify::check_corpus_dir(dir).map_err(CliError::Corpus)?;
    }
    let report = verify::verify_paper();
    Ok(Report {
        text: report.to_text(),
        json: report.to_json(),
        exit_code: report.exit_code(),
    })
}

/// Parses `WX,WY,WZ`.
pub fn parse_weights(s: &str) -> Result<[i64; 3], String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("bad weight {p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    <[i64; 3]>::try_from(parts).map_err(|p| format!("expected three weights, got {}", p.len()))
}
