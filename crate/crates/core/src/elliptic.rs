//! Elliptic singularities: the minimally elliptic cycle and the elliptic
//! sequence `Z_0, …, Z_m`, plus exhaustive checkers for the structural
//! facts the classification relies on.

use serde_json::{json, Map, Value};

use crate::cycles::{self, chi, chi_data, fundamental_cycle, fundamental_cycle_full};
use crate::enumerate::{box_size, check_guard, enumeration_limit, walk_box};
use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph};

/// Outcome of the bounded `χ(D) ≥ 0` sweep run alongside the ellipticity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Checked { candidates: u128 },
    Skipped { needed: u128, limit: u128 },
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ellipticity {
    pub elliptic: bool,
    pub fundamental_cycle: Cycle,
    pub chi_fundamental: i64,
    pub sweep: Sweep,
}

/// Decides ellipticity by `χ(Z_E) = 0`, then sweeps `0 < D ≤ 2Z_E` for a
/// negative `χ` when the box fits under the enumeration guard.
pub fn ellipticity(g: &DualGraph) -> Result<Ellipticity> {
    let ze = fundamental_cycle_full(g)?;
    let chi_ze = chi(g, &ze)?;
    let elliptic = chi_ze == 0;
    let sweep = if !elliptic {
        Sweep::NotApplicable
    } else {
        let upper = ze.scaled(2);
        let needed = box_size(&upper);
        let limit = enumeration_limit();
        if needed > limit {
            Sweep::Skipped { needed, limit }
        } else {
            let candidates = chi_nonnegative_sweep(g, &upper, None)?;
            Sweep::Checked { candidates }
        }
    };
    Ok(Ellipticity {
        elliptic,
        fundamental_cycle: ze,
        chi_fundamental: chi_ze,
        sweep,
    })
}

pub fn is_elliptic(g: &DualGraph) -> Result<bool> {
    Ok(ellipticity(g)?.elliptic)
}

/// Checks `χ(D) ≥ 0` on every `0 < D ≤ upper`; with `e_min` given, also
/// that `χ(D) = 0` forces `D ≥ E_min` and connected support.
pub fn chi_nonnegative_sweep(g: &DualGraph, upper: &Cycle, e_min: Option<&Cycle>) -> Result<u128> {
    let mut failure: Option<Error> = None;
    let count = walk_box(g, upper, |p| {
        if failure.is_some() || p.is_zero() {
            return;
        }
        let c = p.chi();
        if c < 0 {
            failure = Some(Error::invariant(
                "chi(D) >= 0 on elliptic graphs",
                format!("χ = {c} for D = {}", g.format_cycle(&p.to_cycle())),
            ));
        } else if c == 0 {
            if let Some(em) = e_min {
                let d = p.to_cycle();
                if !em.le(&d) || !g.is_connected_subset(&d.support()) {
                    failure = Some(Error::invariant(
                        "chi(D) = 0 implies D >= E_min and D connected",
                        format!("D = {}", g.format_cycle(&d)),
                    ));
                }
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// The unique minimal `0 < D ≤ Z_E` with `χ(D) = 0`.
pub fn minimally_elliptic_cycle(g: &DualGraph) -> Result<Cycle> {
    let ze = fundamental_cycle_full(g)?;
    if chi(g, &ze)? != 0 {
        return Err(Error::Precondition("graph is not elliptic (χ(Z_E) ≠ 0)".into()));
    }
    let mut zeros = Vec::new();
    walk_box(g, &ze, |p| {
        if !p.is_zero() && p.chi() == 0 {
            zeros.push(p.to_cycle());
        }
    })?;
    let minimal: Vec<&Cycle> = zeros
        .iter()
        .filter(|d| !zeros.iter().any(|o| o != *d && o.le(d)))
        .collect();
    if minimal.len() != 1 {
        return Err(Error::invariant(
            "uniqueness of E_min",
            format!("{} minimal cycles with χ = 0", minimal.len()),
        ));
    }
    let e_min = minimal[0].clone();
    if let Some(d) = zeros.iter().find(|d| !e_min.le(d)) {
        return Err(Error::invariant(
            "chi(D) = 0 implies D >= E_min",
            format!("D = {} is not above E_min", g.format_cycle(d)),
        ));
    }
    if !g.is_connected_subset(&e_min.support()) {
        return Err(Error::invariant("E_min connected", g.format_cycle(&e_min)));
    }
    Ok(e_min)
}

/// The elliptic sequence together with its minimally elliptic cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticSequence {
    supports: Vec<Vec<usize>>,
    cycles: Vec<Cycle>,
    e_min: Cycle,
    checks: Vec<&'static str>,
}

impl EllipticSequence {
    /// Index of the last cycle.
    pub fn m(&self) -> usize {
        self.cycles.len() - 1
    }

    pub fn z(&self, i: usize) -> &Cycle {
        &self.cycles[i]
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Support `B_i`, as sorted vertex indices.
    pub fn support(&self, i: usize) -> &[usize] {
        &self.supports[i]
    }

    pub fn e_min(&self) -> &Cycle {
        &self.e_min
    }

    /// `C_t = Z_0 + … + Z_t`, with `C_{-1} = 0`.
    pub fn c(&self, t: isize) -> Cycle {
        let n = self.e_min.len();
        let upto = (t + 1).clamp(0, self.cycles.len() as isize) as usize;
        self.cycles[..upto]
            .iter()
            .fold(Cycle::zero(n), |acc, z| &acc + z)
    }

    /// `C'_t = Z_t + … + Z_m`, with `C'_{m+1} = 0`.
    pub fn c_prime(&self, t: usize) -> Cycle {
        let n = self.e_min.len();
        self.cycles[t.min(self.cycles.len())..]
            .iter()
            .fold(Cycle::zero(n), |acc, z| &acc + z)
    }

    /// Names of the structural checks that passed during construction.
    pub fn checks(&self) -> &[&'static str] {
        &self.checks
    }

    pub fn to_json(&self, g: &DualGraph) -> Value {
        let ids = |s: &[usize]| Value::from(s.iter().map(|&i| g.id(i).to_string()).collect::<Vec<_>>());
        let mut checks = Map::new();
        for c in &self.checks {
            checks.insert((*c).to_string(), Value::Bool(true));
        }
        json!({
            "m": self.m(),
            "Z": self.cycles.iter().map(|z| g.cycle_json(z)).collect::<Vec<_>>(),
            "B": self.supports.iter().map(|s| ids(s)).collect::<Vec<_>>(),
            "Emin": g.cycle_json(&self.e_min),
            "C": (0..=self.m()).map(|t| g.cycle_json(&self.c(t as isize))).collect::<Vec<_>>(),
            "Cprime": (0..=self.m()).map(|t| g.cycle_json(&self.c_prime(t))).collect::<Vec<_>>(),
            "checks": checks,
        })
    }
}

fn fail(check: &str, detail: String) -> Error {
    Error::invariant(check, detail)
}

/// Computes the elliptic sequence of a numerically Gorenstein elliptic
/// graph and verifies its structural properties.
pub fn elliptic_sequence(g: &DualGraph) -> Result<EllipticSequence> {
    if chi(g, &fundamental_cycle_full(g)?)? != 0 {
        return Err(Error::Precondition("graph is not elliptic (χ(Z_E) ≠ 0)".into()));
    }
    let k = cycles::canonical_cycle(g)?;
    let Some(k) = k.to_integral() else {
        return Err(Error::Precondition("graph is not numerically Gorenstein".into()));
    };
    let e_min = minimally_elliptic_cycle(g)?;
    let anchor = e_min.support()[0];

    let all: Vec<usize> = (0..g.len()).collect();
    let mut supports = vec![all.clone()];
    let mut cycles = vec![fundamental_cycle(g, &all)?];
    loop {
        let z = cycles.last().unwrap();
        let zem = g.pairing(z, &e_min)?;
        if zem < 0 {
            break;
        }
        if zem > 0 || cycles.len() > g.len() {
            return Err(fail("Z_i·E_min <= 0", format!("Z_i·E_min = {zem}")));
        }
        let prods = g.products(z)?;
        let current = supports.last().unwrap();
        let orthogonal: Vec<usize> = current.iter().copied().filter(|&i| prods[i] == 0).collect();
        let next = g.component_containing(&orthogonal, anchor);
        if next.is_empty() || !e_min.support().iter().all(|i| next.contains(i)) {
            return Err(fail(
                "B_i contains supp(E_min)",
                format!("step {} lost part of E_min", supports.len()),
            ));
        }
        let zn = fundamental_cycle(g, &next)?;
        supports.push(next);
        cycles.push(zn);
    }

    let mut seq = EllipticSequence {
        supports,
        cycles,
        e_min,
        checks: Vec::new(),
    };
    seq.checks = verify_sequence(g, &seq, &k)?;
    Ok(seq)
}

fn verify_sequence(g: &DualGraph, seq: &EllipticSequence, k: &Cycle) -> Result<Vec<&'static str>> {
    let m = seq.m();
    let mut passed = Vec::new();

    if seq.z(m) != seq.e_min() {
        return Err(fail("Z_m = E_min", format!("Z_m = {}", g.format_cycle(seq.z(m)))));
    }
    passed.push("Z_m = E_min");

    for w in seq.supports.windows(2) {
        let strict = w[1].len() < w[0].len() && w[1].iter().all(|i| w[0].contains(i));
        if !strict {
            return Err(fail("B_0 > B_1 > ... > B_m", format!("{:?} vs {:?}", w[0], w[1])));
        }
    }
    passed.push("B_0 > B_1 > ... > B_m");

    let mut squares = Vec::with_capacity(m + 1);
    for i in 0..=m {
        for j in i + 1..=m {
            let p = g.pairing(seq.z(i), seq.z(j))?;
            if p != 0 {
                return Err(fail("Z_i·Z_j = 0 for i != j", format!("Z_{i}·Z_{j} = {p}")));
            }
        }
        squares.push(-g.self_intersection(seq.z(i))?);
    }
    passed.push("Z_i·Z_j = 0 for i != j");
    if squares.windows(2).any(|w| w[0] < w[1]) {
        return Err(fail("-Z_0^2 >= ... >= -Z_m^2", format!("{squares:?}")));
    }
    passed.push("-Z_0^2 >= ... >= -Z_m^2");

    for t in 0..=m {
        let ct = seq.c(t as isize);
        if !g.is_anti_nef(&ct)? {
            return Err(fail("C_t anti-nef", format!("C_{t} = {}", g.format_cycle(&ct))));
        }
    }
    passed.push("C_t anti-nef");

    for t in 0..=m {
        let sum = k + &seq.c_prime(t);
        let prods = g.products(&sum)?;
        if let Some(&i) = seq.support(t).iter().find(|&&i| prods[i] != 0) {
            return Err(fail(
                "(K + C'_t)·E_i = 0 on B_t",
                format!("t = {t}, E_i = {}, value {}", g.id(i), prods[i]),
            ));
        }
    }
    passed.push("(K + C'_t)·E_i = 0 on B_t");

    for t in 0..=m {
        for (name, d) in [
            ("C", seq.c(t as isize)),
            ("C'", seq.c_prime(t)),
            ("Z", seq.z(t).clone()),
        ] {
            let c = chi(g, &d)?;
            if c != 0 {
                return Err(fail("chi(C_t) = chi(C'_t) = chi(Z_t) = 0", format!("χ({name}_{t}) = {c}")));
            }
        }
    }
    passed.push("chi(C_t) = chi(C'_t) = chi(Z_t) = 0");

    let minus_k = k.scaled(-1);
    if minus_k != seq.c(m as isize) {
        return Err(fail(
            "-K = C_m",
            format!("-K = {}, C_m = {}", g.format_cycle(&minus_k), g.format_cycle(&seq.c(m as isize))),
        ));
    }
    passed.push("-K = C_m");
    Ok(passed)
}

/// All effective anti-nef `D` with `0 ≤ D ≤ upper`, ordered by total
/// coefficient and then lexicographically.
pub fn enumerate_antinef_upto(g: &DualGraph, upper: &Cycle) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    walk_box(g, upper, |p| {
        if p.is_anti_nef() {
            out.push(p.to_cycle());
        }
    })?;
    out.sort_by_key(|d| (d.coeffs().iter().sum::<i64>(), d.clone()));
    Ok(out)
}

/// Decomposition of `Z_i - Z_m` into (-2)-curves `F_{m-1}, …, F_i` for the
/// indices following the first `j` with `Z_j² = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinusOneChains {
    /// Indices `j` with `Z_j² = -1`.
    pub indices: Vec<usize>,
    /// `(i, F_i)` for `j_min ≤ i < m`, `F_i` as a vertex index.
    pub components: Vec<(usize, usize)>,
}

impl MinusOneChains {
    pub fn is_vacuous(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn check_minus_one_chains(g: &DualGraph, seq: &EllipticSequence) -> Result<MinusOneChains> {
    const CHECK: &str = "Z_j^2 = -1 chain structure";
    let m = seq.m();
    let mut indices = Vec::new();
    for j in 0..=m {
        if g.self_intersection(seq.z(j))? == -1 {
            indices.push(j);
        }
    }
    let Some(&first) = indices.first() else {
        return Ok(MinusOneChains { indices, components: Vec::new() });
    };

    let c_m = seq.c(m as isize);
    let c_m_prods = g.products(&c_m)?;
    let adjunction = g.adjunction_vector();
    let mut components = Vec::new();
    for i in first..m {
        let zi = seq.z(i);
        let prods = g.products(zi)?;
        let touching: Vec<usize> = zi.support().into_iter().filter(|&v| prods[v] != 0).collect();
        let [f] = touching[..] else {
            return Err(fail(CHECK, format!("Z_{i} meets {} components nontrivially", touching.len())));
        };
        if prods[f] != -1 || zi.coeffs()[f] != 1 {
            return Err(fail(CHECK, format!("Z_{i}·F_{i} = {} with coefficient {}", prods[f], zi.coeffs()[f])));
        }
        let v = g.vertex(f);
        if v.self_int != -2 || v.genus != 0 {
            return Err(fail(CHECK, format!("F_{i} = {} is not a rational (-2)-curve", v.id)));
        }
        if c_m_prods[f] != 0 || adjunction[f] != 0 {
            return Err(fail(CHECK, format!("C_m·F_{i} = {}, K·F_{i} = {}", c_m_prods[f], adjunction[f])));
        }
        components.push((i, f));
    }

    for j in &indices {
        for i in *j..m {
            let tail: Vec<usize> = components
                .iter()
                .filter(|(k, _)| *k >= i)
                .map(|&(_, f)| f)
                .collect();
            let diff = seq.z(i) - seq.z(m);
            let sum = g.reduced(&tail);
            if tail.len() != m - i || diff != sum {
                return Err(fail(CHECK, format!("Z_{i} - Z_m ≠ F_{} + … + F_{i}", m - 1)));
            }
            let is_chain = g.is_connected_subset(&tail)
                && tail.iter().all(|&v| g.neighbors(v).iter().filter(|w| tail.contains(w)).count() <= 2)
                && tail.len().saturating_sub(1)
                    == tail
                        .iter()
                        .map(|&v| g.neighbors(v).iter().filter(|w| tail.contains(w)).count())
                        .sum::<usize>()
                        / 2;
            if !is_chain {
                return Err(fail(CHECK, format!("F_{}, …, F_{i} is not a chain", m - 1)));
            }
        }
    }
    Ok(MinusOneChains { indices, components })
}

/// For every connected reduced `D` avoiding `supp(E_min)`: `E_min·D ≤ 1`
/// and `χ(Z_D) = 1`. Returns the number of subsets checked.
pub fn check_reduced_cycles_off_emin(g: &DualGraph, e_min: &Cycle) -> Result<u128> {
    let free: Vec<usize> = (0..g.len()).filter(|&i| e_min.coeffs()[i] == 0).collect();
    if free.len() >= 127 {
        return Err(Error::GuardExceeded { needed: u128::MAX, limit: enumeration_limit() });
    }
    let subsets = 1u128 << free.len();
    check_guard(subsets)?;
    let mut checked = 0;
    for mask in 1..subsets {
        let subset: Vec<usize> = free
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if !g.is_connected_subset(&subset) {
            continue;
        }
        let d = g.reduced(&subset);
        let meet = g.pairing(e_min, &d)?;
        let zd = fundamental_cycle(g, &subset)?;
        let chi_zd = chi_data(g, &zd)?.chi;
        if meet > 1 || chi_zd != 1 {
            return Err(fail(
                "E_min·D <= 1 and chi(Z_D) = 1",
                format!("D = {}: E_min·D = {meet}, χ(Z_D) = {chi_zd}", g.format_cycle(&d)),
            ));
        }
        checked += 1;
    }
    Ok(checked)
}
