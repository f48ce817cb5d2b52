//! The acceptance suite behind `verify-paper`.
//!
//! Every check recomputes what it compares against through code that does
//! not share a path with the library routine under test: intersection
//! numbers by direct matrix products, `K·D` from the solved rational
//! canonical cycle, candidate sets by plain box enumeration.

use std::fmt;
use std::path::{Path, PathBuf};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use singlab_core::artinian::{colength, colength_saturating, MonomialIdeal, DEFAULT_SATURATION_CAP};
use singlab_core::classify::{classify_gorenstein_elliptic_ideals, normal_hilbert_data, ClassificationReport};
use singlab_core::cycles::{
    canonical_cycle, fundamental_cycle, fundamental_cycle_full, fundamental_cycle_with_order, riemann_roch_colength,
};
use singlab_core::elliptic::{
    chi_nonnegative_sweep, elliptic_sequence, enumerate_antinef_upto, minimally_elliptic_cycle, EllipticSequence,
};
use singlab_core::poly::Poly;
use singlab_core::wh::{brieskorn_invariants, pg_brieskorn, pg_weighted_homogeneous, WeightedPoly};
use singlab_core::{Cycle, DualGraph, Error, QCycle};

use crate::corpus::{self, Family};

/// Why a criterion did not pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Mismatch(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(s) => f.write_str(s),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

type Check<T = ()> = Result<T, Failure>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(Failure::Mismatch(format!($($arg)+)));
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// A library cross-check fired.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn line(&self) -> String {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Internal => "FAIL (internal)",
        };
        format!("{tag} [{}] {}: {}", self.id, self.name, self.detail)
    }
}

fn finish(id: u8, name: &'static str, result: Check<String>) -> CriterionResult {
    let (outcome, detail) = match result {
        Ok(summary) => (Outcome::Pass, summary),
        Err(Failure::Core(e)) if e.is_internal() => (Outcome::Internal, e.to_string()),
        Err(f) => (Outcome::Fail, f.to_string()),
    };
    CriterionResult { id, name, outcome, detail }
}

// ---------------------------------------------------------------------------
// Independent arithmetic

fn pair(g: &DualGraph, a: &Cycle, b: &Cycle) -> i64 {
    let m = g.intersection_matrix();
    let mut s = 0;
    for (row, ai) in m.iter().zip(&a.0) {
        for (mij, bj) in row.iter().zip(&b.0) {
            s += ai * mij * bj;
        }
    }
    s
}

fn pair_k(g: &DualGraph, k: &QCycle, d: &Cycle) -> BigRational {
    let m = g.intersection_matrix();
    let mut s = BigRational::zero();
    for (row, ki) in m.iter().zip(&k.0) {
        for (mij, dj) in row.iter().zip(&d.0) {
            s += ki * BigRational::from_integer((mij * dj).into());
        }
    }
    s
}

fn as_int(q: &BigRational) -> Check<i64> {
    ensure!(q.is_integer(), "expected an integer, got {q}");
    i64::try_from(q.to_integer()).map_err(|_| Failure::Mismatch(format!("{q} out of range")))
}

/// `χ(D) = -(D² + K·D)/2` with `K` the solved canonical cycle.
fn chi_via_k(g: &DualGraph, k: &QCycle, d: &Cycle) -> Check<i64> {
    let twice = BigRational::from_integer(pair(g, d, d).into()) + pair_k(g, k, d);
    as_int(&(-twice / BigRational::from_integer(2.into())))
}

fn is_anti_nef(g: &DualGraph, d: &Cycle) -> bool {
    (0..g.len()).all(|i| pair(g, d, &g.basis(i)) <= 0)
}

/// All cycles `0 ≤ D ≤ upper`.
fn box_cycles(upper: &Cycle) -> impl Iterator<Item = Cycle> + '_ {
    upper
        .0
        .iter()
        .map(|&c| 0..=c)
        .multi_cartesian_product()
        .map(Cycle)
}

fn cycle_of(g: &DualGraph, terms: &[(String, i64)]) -> Check<Cycle> {
    let mut d = Cycle::zero(g.len());
    for (id, c) in terms {
        let i = g
            .index_of(id)
            .ok_or_else(|| Failure::Mismatch(format!("no vertex {id}")))?;
        d.0[i] += c;
    }
    Ok(d)
}

fn pg_of(eq: &corpus::Equation) -> Check<i64> {
    let wp = WeightedPoly::new(eq.weights, Poly::parse(&eq.poly)?)?;
    Ok(pg_weighted_homogeneous(&wp))
}

fn label(family: Family, param: usize) -> String {
    format!("{family}({param})")
}

// ---------------------------------------------------------------------------
// 1

pub fn brieskorn() -> CriterionResult {
    finish(1, "Brieskorn p_g and br(m)", check_brieskorn())
}

fn check_brieskorn() -> Check<String> {
    let triples = corpus::brieskorn_triples();
    for ([a, b, c], pg, br) in &triples {
        let inv = brieskorn_invariants(*a, *b, *c)?;
        ensure!(
            inv.p_g == *pg && inv.br == *br,
            "({a},{b},{c}): p_g = {}, br = {}; expected {pg}, {br}",
            inv.p_g,
            inv.br
        );
    }
    Ok(format!("{} exponent triples", triples.len()))
}

// 2

pub fn weighted_homogeneous_pg() -> CriterionResult {
    finish(2, "weighted homogeneous p_g", check_wh())
}

fn check_wh() -> Check<String> {
    for n in 1..=4i64 {
        let eqs = corpus::equations(Family::Fig2312, n as usize)?;
        let pg_f = pg_of(&eqs[0])?;
        let pg_g = pg_of(&eqs[1])?;
        ensure!(pg_f == n + 1, "n = {n}: p_g({}) = {pg_f}, expected {}", eqs[0].poly, n + 1);
        ensure!(pg_g == 2 * n + 1, "n = {n}: p_g({}) = {pg_g}, expected {}", eqs[1].poly, 2 * n + 1);
        // the second equation is Brieskorn, so the lattice count applies too
        let lattice = pg_brieskorn(2, 3, 6 * (2 * n + 1))?;
        ensure!(lattice == pg_g, "n = {n}: lattice count {lattice} vs graded sum {pg_g}");
    }
    Ok("n = 1..4, both equations".into())
}

// 3

pub fn elliptic_sequences() -> CriterionResult {
    finish(3, "elliptic sequences", check_sequences())
}

/// Recomputes the structural properties of an elliptic sequence.
fn sequence_invariants(g: &DualGraph, seq: &EllipticSequence) -> Check {
    let m = seq.m();
    let k = canonical_cycle(g)?;
    ensure!(seq.z(m) == seq.e_min(), "Z_m differs from E_min");
    ensure!(*seq.e_min() == minimally_elliptic_cycle(g)?, "E_min differs from the minimal χ = 0 cycle");
    ensure!(*seq.z(0) == fundamental_cycle_full(g)?, "Z_0 differs from Z_E");
    for i in 0..=m {
        ensure!(seq.z(i).support() == seq.support(i), "supp Z_{i} differs from B_{i}");
        ensure!(*seq.z(i) == fundamental_cycle(g, seq.support(i))?, "Z_{i} is not the fundamental cycle of B_{i}");
        if i < m {
            let (outer, inner) = (seq.support(i), seq.support(i + 1));
            ensure!(
                inner.len() < outer.len() && inner.iter().all(|v| outer.contains(v)),
                "B_{} is not strictly inside B_{i}",
                i + 1
            );
            for &j in inner {
                ensure!(pair(g, seq.z(i), &g.basis(j)) == 0, "Z_{i}·E_{} ≠ 0 on B_{}", g.id(j), i + 1);
            }
            ensure!(
                pair(g, seq.z(i), seq.z(i)) <= pair(g, seq.z(i + 1), seq.z(i + 1)),
                "-Z_i² increases at i = {i}"
            );
        }
        for j in 0..=m {
            if i != j {
                ensure!(pair(g, seq.z(i), seq.z(j)) == 0, "Z_{i}·Z_{j} ≠ 0");
            }
        }
    }
    ensure!(pair(g, seq.z(m), seq.e_min()) < 0, "sequence stopped early: Z_m·E_min = 0");
    for t in 0..=m {
        let c = seq.c(t as isize);
        let cp = seq.c_prime(t);
        ensure!(is_anti_nef(g, &c), "C_{t} is not anti-nef");
        for (name, d) in [("C", &c), ("C'", &cp), ("Z", seq.z(t))] {
            ensure!(chi_via_k(g, &k, d)? == 0, "χ({name}_{t}) ≠ 0");
        }
        for &i in seq.support(t) {
            let e = g.basis(i);
            let v = pair_k(g, &k, &e) + BigRational::from_integer(pair(g, &cp, &e).into());
            ensure!(v.is_zero(), "(K + C'_{t})·E_{} = {v}", g.id(i));
        }
    }
    let minus_k = k.neg();
    ensure!(minus_k == seq.c(m as isize).to_q(), "-K ≠ C_m");
    Ok(())
}

fn check_sequences() -> Check<String> {
    let mut graphs = 0;
    for n in 1..=6 {
        let g = corpus::fig2312(n);
        let seq = elliptic_sequence(&g)?;
        let m = 2 * n;
        ensure!(seq.m() == m, "fig2312({n}): m = {}, expected {m}", seq.m());
        for i in 0..=m {
            let expected = cycle_of(&g, &(i..=m).map(|j| (format!("E{j}"), 1)).collect::<Vec<_>>())?;
            ensure!(*seq.z(i) == expected, "fig2312({n}): Z_{i} = {}", g.format_cycle(seq.z(i)));
            ensure!(pair(&g, seq.z(i), seq.z(i)) == -1, "fig2312({n}): Z_{i}² ≠ -1");
            let c = seq.c(i as isize);
            for j in 0..=m {
                let e = g.basis(g.index_of(&format!("E{j}")).expect("chain vertex"));
                let expected = if i == j { -1 } else { 0 };
                ensure!(pair(&g, &c, &e) == expected, "fig2312({n}): C_{i}·E_{j} ≠ {expected}");
            }
        }
        sequence_invariants(&g, &seq).map_err(|f| prefix(&label(Family::Fig2312, n), f))?;
        graphs += 1;
    }
    for m in 0..=6 {
        let g = corpus::fig244(m);
        let seq = elliptic_sequence(&g)?;
        ensure!(seq.m() == m, "fig244({m}): m = {}", seq.m());
        for i in 0..=m {
            let mut terms = vec![(format!("E{m}"), 1)];
            for j in i..m {
                terms.push((format!("E{j}_1"), 1));
                terms.push((format!("E{j}_2"), 1));
            }
            ensure!(*seq.z(i) == cycle_of(&g, &terms)?, "fig244({m}): Z_{i} = {}", g.format_cycle(seq.z(i)));
        }
        sequence_invariants(&g, &seq).map_err(|f| prefix(&label(Family::Fig244, m), f))?;
        graphs += 1;
    }
    for (family, self_sq) in [(Family::Brell3, -3), (Family::Brell1, -1)] {
        for m in 0..=6 {
            let g = corpus::graph(family, m)?;
            let seq = elliptic_sequence(&g)?;
            ensure!(seq.cycles().len() == m + 1, "{family}({m}): {} cycles", seq.cycles().len());
            ensure!(pair(&g, seq.z(m), seq.z(m)) == self_sq, "{family}({m}): Z_m² ≠ {self_sq}");
            ensure!(*seq.z(0) == g.reduced(&(0..g.len()).collect::<Vec<_>>()), "{family}({m}): Z_0 ≠ E");
            sequence_invariants(&g, &seq).map_err(|f| prefix(&label(family, m), f))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs, parameters ≤ 6"))
}

fn prefix(label: &str, f: Failure) -> Failure {
    match f {
        Failure::Mismatch(s) => Failure::Mismatch(format!("{label}: {s}")),
        other => other,
    }
}

// 4

/// A classified corpus graph: family member, `p_g` source and report.
pub struct Classified {
    pub family: Family,
    pub param: usize,
    pub p_g: i64,
    pub graph: DualGraph,
    pub report: ClassificationReport,
}

/// Classifies every family member up to `max_param` with `p_g` taken from
/// each of its equations.
pub fn classify_corpus(max_param: usize) -> Check<Vec<Classified>> {
    let mut out = Vec::new();
    for family in corpus::FAMILIES {
        for param in family.min_param()..=max_param {
            let graph = corpus::graph(family, param)?;
            for eq in corpus::equations(family, param)? {
                let p_g = pg_of(&eq)?;
                let report = classify_gorenstein_elliptic_ideals(&graph, p_g, true)?;
                out.push(Classified { family, param, p_g, graph: graph.clone(), report });
            }
        }
    }
    Ok(out)
}

pub fn classification() -> CriterionResult {
    finish(4, "classification of Gorenstein elliptic ideals", check_classification())
}

fn check_classification() -> Check<String> {
    let all = classify_corpus(6)?;
    for c in &all {
        let (n, r) = (c.param as i64, &c.report);
        let who = format!("{}({n}) with p_g = {}", c.family, c.p_g);
        let seq = elliptic_sequence(&c.graph)?;
        let m = seq.m() as i64;
        ensure!(r.m == m, "{who}: m = {}", r.m);
        let ideal_ts: Vec<i64> = r.ideals.iter().map(|i| i.t).collect();
        let colengths: Vec<i64> = r.ideals.iter().map(|i| i.colength).collect();
        for i in &r.ideals {
            ensure!(i.cycle == seq.c(i.t as isize), "{who}: ideal t = {} is not C_t", i.t);
        }
        match (c.family, c.p_g) {
            (Family::Fig2312, p) if p == n + 1 => {
                let mut af: Vec<i64> = (1..=n).map(|j| 2 * j - 1).collect();
                af.push(2 * n);
                ensure!(r.af.gamma == 2 && !r.af.maximal, "{who}: γ = {}", r.af.gamma);
                ensure!(r.af.af == af, "{who}: A_f = {:?}", r.af.af);
                ensure!(r.zeta == n, "{who}: ζ = {}", r.zeta);
                ensure!(ideal_ts == (1..=n).map(|j| 2 * j - 1).collect::<Vec<_>>(), "{who}: t = {ideal_ts:?}");
                ensure!(colengths == (1..=n).collect::<Vec<_>>(), "{who}: colengths {colengths:?}");
                let refused = classify_gorenstein_elliptic_ideals(&c.graph, c.p_g, false);
                ensure!(
                    matches!(refused, Err(Error::Precondition(_))),
                    "{who}: non-maximal case accepted without characteristic 0"
                );
            }
            (Family::Fig2312, p) => {
                ensure!(p == 2 * n + 1, "{who}: unexpected p_g");
                ensure!(r.af.maximal && r.zeta == 0, "{who}: maximal = {}, ζ = {}", r.af.maximal, r.zeta);
            }
            (Family::Brell1, p) => {
                ensure!(p == n + 1, "{who}: unexpected p_g");
                ensure!(r.af.maximal && r.zeta == 0, "{who}: maximal = {}, ζ = {}", r.af.maximal, r.zeta);
            }
            (Family::Fig244 | Family::Brell3, p) => {
                ensure!(p == n + 1, "{who}: unexpected p_g");
                ensure!(r.af.maximal && r.af.af == (0..=n).collect::<Vec<_>>(), "{who}: A_f = {:?}", r.af.af);
                ensure!(r.zeta == n + 1, "{who}: ζ = {}", r.zeta);
                ensure!(colengths == (1..=n + 1).collect::<Vec<_>>(), "{who}: colengths {colengths:?}");
            }
        }
        let zm2 = pair(&c.graph, seq.z(m as usize), seq.z(m as usize));
        ensure!(r.zeta <= c.p_g, "{who}: ζ > p_g");
        ensure!((r.zeta == c.p_g) == (-zm2 >= 2), "{who}: ζ = p_g ⇔ -Z_m² ≥ 2 fails (Z_m² = {zm2})");
    }
    Ok(format!("{} (graph, p_g) pairs, parameters ≤ 6", all.len()))
}

// 5

pub fn ideal_numerics() -> CriterionResult {
    finish(5, "numerical Gorenstein conditions for each ideal", check_ideal_numerics())
}

fn check_ideal_numerics() -> Check<String> {
    let mut count = 0;
    for c in classify_corpus(4)? {
        let g = &c.graph;
        let k = canonical_cycle(g)?;
        let b: Vec<i64> = g.vertices().iter().map(|v| 2 * v.genus - 2 - v.self_int).collect();
        for ideal in &c.report.ideals {
            let who = format!("{}({}) p_g = {} t = {}", c.family, c.param, c.p_g, ideal.t);
            let d = &ideal.cycle;
            let d2 = pair(g, d, d);
            let kd_solved = as_int(&pair_k(g, &k, d))?;
            let kd_adjunction: i64 = d.0.iter().zip(&b).map(|(x, y)| x * y).sum();
            ensure!(kd_solved == kd_adjunction, "{who}: K·C {kd_solved} vs {kd_adjunction}");
            ensure!(kd_solved == -d2 && ideal.kz == kd_solved, "{who}: K·C = {kd_solved}, -C² = {}", -d2);
            ensure!(chi_via_k(g, &k, d)? == 0 && ideal.chi == 0, "{who}: χ(C) ≠ 0");
            // ē₂ is the constant term of the Hilbert polynomial: extrapolate
            // ℓ(A/Ī^k) for k = 1, 2, 3 back to k = 0
            let q = ideal.q;
            let l: Vec<i64> = (1..=3)
                .map(|s| riemann_roch_colength(g, &d.scaled(s), c.p_g, q))
                .collect::<Result<_, _>>()?;
            let e2 = 3 * l[0] - 3 * l[1] + l[2];
            ensure!(e2 == ideal.eb2 && e2 == l[0], "{who}: ē₂ = {e2}, ℓ = {}", l[0]);
            ensure!(l[0] == ideal.colength && l[0] <= c.p_g, "{who}: ℓ = {}, p_g = {}", l[0], c.p_g);
            count += 1;
        }
    }
    Ok(format!("{count} ideals"))
}

// 6

pub fn hilbert_data() -> CriterionResult {
    finish(6, "Riemann-Roch and normal Hilbert data", check_hilbert())
}

fn check_hilbert() -> Check<String> {
    let mut count = 0;
    for c in classify_corpus(4)? {
        let g = &c.graph;
        let seq = elliptic_sequence(g)?;
        for (rank, &t) in c.report.af.af.iter().enumerate() {
            let who = format!("{}({}) p_g = {} t = {t}", c.family, c.param, c.p_g);
            let z = seq.c(t as isize);
            let ell = rank as i64 + 1;
            let q = c.p_g - ell;
            let hd = normal_hilbert_data(g, &z, c.p_g, q, 8)?;
            for n in 1..=8i64 {
                let rr = riemann_roch_colength(g, &z.scaled(n + 1), c.p_g, q)?;
                ensure!(hd.polynomial(n) == rr, "{who}: P̄({n}) = {} vs {rr}", hd.polynomial(n));
            }
            ensure!(hd.e0bar == -pair(g, &z, &z), "{who}: ē₀ ≠ -Z²");
            ensure!(hd.e1bar - hd.e0bar + ell == c.p_g - q, "{who}: ē₁ - ē₀ + ℓ ≠ p_g - q");
            ensure!(hd.br <= c.p_g + 1, "{who}: br = {}", hd.br);
            count += 1;
        }
    }
    Ok(format!("{count} ideals, n ≤ 8"))
}

// 7

pub fn artinian_colengths() -> CriterionResult {
    finish(7, "Artinian colength cross-check", check_artinian())
}

fn check_artinian() -> Check<String> {
    let mut count = 0;
    for n in 1..=4 {
        let f = Poly::parse(&corpus::equations(Family::Fig2312, n)?[0].poly)?;
        for j in 1..=n {
            let ideal = MonomialIdeal::parse(&format!("x,y,z^{j}"))?;
            let l = colength(&f, &ideal)?;
            ensure!(l == j, "n = {n}: colength (f, x, y, z^{j}) = {l}");
            count += 1;
        }
    }
    for m in 0..=3 {
        let f = Poly::parse(&corpus::equations(Family::Fig244, m)?[0].poly)?;
        let g = corpus::fig244(m);
        let seq = elliptic_sequence(&g)?;
        for i in 1..=m + 1 {
            let l = colength(&f, &MonomialIdeal::parse(&format!("x,y,z^{i}"))?)?;
            ensure!(l == i, "m = {m}: colength (f, x, y, z^{i}) = {l}");
            let sat = colength_saturating(&f, &MonomialIdeal::parse(&format!("y,z^{i}"))?, DEFAULT_SATURATION_CAP)?;
            let c = seq.c(i as isize - 1);
            let minus_c2 = -pair(&g, &c, &c);
            ensure!(sat == 2 * i, "m = {m}: colength (f, y, z^{i}) = {sat}");
            ensure!(minus_c2 == 2 * i as i64, "m = {m}: -C_{}² = {minus_c2}", i - 1);
            count += 2;
        }
    }
    Ok(format!("{count} colengths"))
}

// 8

pub fn property_suites() -> CriterionResult {
    finish(8, "exhaustive property suites", check_properties())
}

/// Graphs small enough for the plain-enumeration oracles.
pub fn property_corpus() -> Vec<(String, DualGraph)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((label(Family::Fig2312, n), corpus::fig2312(n)));
    }
    for m in 0..=4 {
        out.push((label(Family::Fig244, m), corpus::fig244(m)));
        out.push((label(Family::Brell1, m), corpus::brell1(m)));
    }
    for m in 0..=3 {
        out.push((label(Family::Brell3, m), corpus::brell3(m)));
    }
    out
}

fn check_properties() -> Check<String> {
    let graphs = property_corpus();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut points = 0u128;
    for (name, g) in &graphs {
        let name = name.as_str();
        let k = canonical_cycle(g)?;
        let ze = fundamental_cycle_full(g)?;

        // E_min: unique minimal χ = 0 cycle in [0, Z_E], below every other
        let e_min = minimally_elliptic_cycle(g)?;
        let mut zeros = Vec::new();
        for d in box_cycles(&ze).filter(|d| !d.is_zero()) {
            if chi_via_k(g, &k, &d)? == 0 {
                zeros.push(d);
            }
        }
        let minimal: Vec<&Cycle> = zeros.iter().filter(|d| !zeros.iter().any(|o| o != *d && o.le(d))).collect();
        ensure!(minimal == [&e_min], "{name}: minimal χ = 0 cycles {minimal:?}, E_min = {e_min:?}");

        // χ ≥ 0 on (0, 2Z_E]
        let upper = ze.scaled(2);
        for d in box_cycles(&upper).filter(|d| !d.is_zero()) {
            let c = chi_via_k(g, &k, &d)?;
            ensure!(c >= 0, "{name}: χ({}) = {c}", g.format_cycle(&d));
            if c == 0 {
                ensure!(e_min.le(&d), "{name}: χ({}) = 0 but not ≥ E_min", g.format_cycle(&d));
            }
        }
        points += chi_nonnegative_sweep(g, &upper, Some(&e_min))?;

        // anti-nef cycles below C_m
        let seq = elliptic_sequence(g)?;
        let m = seq.m() as isize;
        let c_m = seq.c(m);
        let mut expected: Vec<Cycle> = (-1..=m).map(|t| seq.c(t)).collect();
        let mut found: Vec<Cycle> = box_cycles(&c_m).filter(|d| is_anti_nef(g, d)).collect();
        expected.sort();
        found.sort();
        ensure!(found == expected, "{name}: {} anti-nef cycles below C_m, expected {}", found.len(), expected.len());
        let mut library = enumerate_antinef_upto(g, &c_m)?;
        library.sort();
        ensure!(library == found, "{name}: library anti-nef enumeration disagrees");
        let mut chi_zero = Vec::new();
        for d in found.iter().filter(|d| !d.is_zero()) {
            if chi_via_k(g, &k, d)? == 0 {
                chi_zero.push(d.clone());
            }
        }
        expected.retain(|d| !d.is_zero());
        ensure!(chi_zero == expected, "{name}: χ = 0 anti-nef cycles {chi_zero:?}");
        points += found.len() as u128;

        // Laufer order independence on Z_E and every B_i
        for i in 0..=seq.m() {
            let support = seq.support(i);
            let reference = fundamental_cycle(g, support)?;
            let mut order: Vec<usize> = (0..g.len()).collect();
            for _ in 0..100 {
                order.shuffle(&mut rng);
                let z = fundamental_cycle_with_order(g, support, &order)?;
                ensure!(z == reference, "{name}: Laufer order {order:?} on B_{i} gives {z:?}");
            }
        }
    }
    Ok(format!("{} graphs, {points} enumerated cycles, 100 orders per support", graphs.len()))
}

// ---------------------------------------------------------------------------

/// Problem with a stored corpus snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFileError {
    pub file: PathBuf,
    pub message: String,
}

impl fmt::Display for CorpusFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.file.display(), self.message)
    }
}

/// Parses every snapshot in `dir` and compares it with the generator.
pub fn check_corpus_dir(dir: &Path) -> Result<usize, CorpusFileError> {
    for (family, param) in corpus::SNAPSHOTS {
        let file = dir.join(corpus::snapshot_name(family, param));
        let err = |message: String| CorpusFileError { file: file.clone(), message };
        let text = std::fs::read_to_string(&file).map_err(|e| err(e.to_string()))?;
        let stored = DualGraph::parse(&text).map_err(|e| err(e.to_string()))?;
        let generated = corpus::graph(family, param).map_err(|e| err(e.to_string()))?;
        if stored != generated {
            return Err(err(format!("does not match the generated {family}({param})")));
        }
    }
    Ok(corpus::SNAPSHOTS.len())
}

pub struct VerifyReport {
    pub results: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(CriterionResult::passed)
    }

    /// 0 when everything passed, 2 if a library cross-check fired, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.results.iter().any(|r| r.outcome == Outcome::Internal) {
            2
        } else if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out: Vec<String> = self.results.iter().map(CriterionResult::line).collect();
        let passed = self.results.iter().filter(|r| r.passed()).count();
        out.push(format!("{passed}/{} criteria passed", self.results.len()));
        out.join("\n")
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "name": r.name,
                    "pass": r.passed(),
                    "internal": r.outcome == Outcome::Internal,
                    "detail": r.detail,
                })
            })
            .collect();
        json!({ "passed": self.all_passed(), "criteria": rows })
    }
}

pub const CRITERIA: [fn() -> CriterionResult; 8] = [
    brieskorn,
    weighted_homogeneous_pg,
    elliptic_sequences,
    classification,
    ideal_numerics,
    hilbert_data,
    artinian_colengths,
    property_suites,
];

/// Runs all criteria in parallel and reports them in order.
pub fn verify_paper() -> VerifyReport {
    let results = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA.iter().map(|c| s.spawn(*c)).collect();
        handles
            .into_iter()
            .zip(1u8..)
            .map(|(h, id)| {
                h.join().unwrap_or_else(|_| CriterionResult {
                    id,
                    name: "panicked",
                    outcome: Outcome::Internal,
                    detail: "check panicked".into(),
                })
            })
            .collect()
    });
    VerifyReport { results }
}
