//! Parameterised graph families and their defining equations.
//!
//! Vertex ids follow the figures: `Ej` on chains, `Ej_s` on the `s`-th arm
//! of a star, with `j` counting up towards the elliptic centre.

use std::fmt;
use std::str::FromStr;

use singlab_core::{DualGraph, Error, Result, Vertex};

/// Largest parameter accepted by the generators.
pub const MAX_PARAM: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Genus-1 (-2)-curve with two (-2)-arms of length `m`.
    Fig244,
    /// Chain `E0 … E{2n}` of (-2)-curves ending in a genus-1 (-1)-curve.
    Fig2312,
    /// Genus-1 (-1)-curve at the end of a chain of `m` (-2)-curves.
    Brell1,
    /// Genus-1 (-3)-curve with three (-2)-arms of length `m`.
    Brell3,
}

pub const FAMILIES: [Family; 4] = [Family::Fig244, Family::Fig2312, Family::Brell1, Family::Brell3];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fig244 => "fig244",
            Family::Fig2312 => "fig2312",
            Family::Brell1 => "brell1",
            Family::Brell3 => "brell3",
        }
    }

    pub fn min_param(self) -> usize {
        match self {
            Family::Fig2312 => 1,
            _ => 0,
        }
    }

    /// Length `m` of the elliptic sequence of the family member.
    pub fn sequence_length(self, param: usize) -> usize {
        match self {
            Family::Fig2312 => 2 * param,
            _ => param,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FAMILIES
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = FAMILIES.iter().map(|f| f.name()).collect();
                Error::Input(format!("unknown corpus family {s:?} (expected one of {})", names.join(", ")))
            })
    }
}

fn rational(id: String, self_int: i64) -> Vertex {
    Vertex { id, self_int, genus: 0 }
}

fn elliptic(id: String, self_int: i64) -> Vertex {
    Vertex { id, self_int, genus: 1 }
}

/// Star with a genus-1 centre `E{m}` and `arms` chains `E0_s … E{m-1}_s`.
/// The first arm is listed outward-in, the centre next, the others inward-out.
fn star(m: usize, arms: usize, centre_self: i64) -> Result<DualGraph> {
    let centre = format!("E{m}");
    let mut vertices: Vec<Vertex> = (0..m).map(|j| rational(format!("E{j}_1"), -2)).collect();
    vertices.push(elliptic(centre.clone(), centre_self));
    for s in 2..=arms {
        vertices.extend((0..m).rev().map(|j| rational(format!("E{j}_{s}"), -2)));
    }
    let mut edges = Vec::new();
    for s in 1..=arms {
        for j in 0..m {
            let next = if j + 1 == m { centre.clone() } else { format!("E{}_{s}", j + 1) };
            edges.push((format!("E{j}_{s}"), next, 1));
        }
    }
    DualGraph::new(vertices, edges)
}

/// Chain `E0 – E1 – … – E{len}` with `E{len}` a genus-1 (-1)-curve.
fn chain(len: usize) -> Result<DualGraph> {
    let mut vertices: Vec<Vertex> = (0..len).map(|j| rational(format!("E{j}"), -2)).collect();
    vertices.push(elliptic(format!("E{len}"), -1));
    let edges = (0..len).map(|j| (format!("E{j}"), format!("E{}", j + 1), 1)).collect();
    DualGraph::new(vertices, edges)
}

fn check_param(family: Family, param: usize) -> Result<()> {
    if param < family.min_param() || param > MAX_PARAM {
        return Err(Error::Input(format!(
            "{family} needs a parameter in {}..={MAX_PARAM}, got {param}",
            family.min_param()
        )));
    }
    Ok(())
}

pub fn graph(family: Family, param: usize) -> Result<DualGraph> {
    check_param(family, param)?;
    match family {
        Family::Fig244 => star(param, 2, -2),
        Family::Fig2312 => chain(2 * param),
        Family::Brell1 => chain(param),
        Family::Brell3 => star(param, 3, -3),
    }
}

pub fn fig244(m: usize) -> DualGraph {
    graph(Family::Fig244, m).expect("fig244 is valid")
}

pub fn fig2312(n: usize) -> DualGraph {
    graph(Family::Fig2312, n).expect("fig2312 is valid")
}

pub fn brell1(m: usize) -> DualGraph {
    graph(Family::Brell1, m).expect("brell1 is valid")
}

pub fn brell3(m: usize) -> DualGraph {
    graph(Family::Brell3, m).expect("brell3 is valid")
}

/// A weighted homogeneous equation whose singularity has the family graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub label: &'static str,
    pub poly: String,
    pub weights: [i64; 3],
}

/// Equations realising a family member. `fig2312(n)` carries two with
/// different `p_g`, the rest one each.
pub fn equations(family: Family, param: usize) -> Result<Vec<Equation>> {
    check_param(family, param)?;
    let (n, k) = (param as i64, param as i64 + 1);
    Ok(match family {
        Family::Fig244 => vec![Equation {
            label: "f",
            poly: format!("x^2+y^4+z^{}", 4 * k),
            weights: [2 * k, k, 1],
        }],
        Family::Fig2312 => vec![
            Equation {
                label: "f",
                poly: format!("x^2+z(z^{}+y^4)", 4 * n + 2),
                weights: [4 * n + 3, 2 * n + 1, 2],
            },
            Equation {
                label: "g",
                poly: format!("x^2+y^3+z^{}", 6 * (2 * n + 1)),
                weights: [3 * (2 * n + 1), 2 * (2 * n + 1), 1],
            },
        ],
        Family::Brell1 => vec![Equation {
            label: "f",
            poly: format!("x^2+y^3+z^{}", 6 * k),
            weights: [3 * k, 2 * k, 1],
        }],
        Family::Brell3 => vec![Equation {
            label: "f",
            poly: format!("x^3+y^3+z^{}", 3 * k),
            weights: [k, k, 1],
        }],
    })
}

/// Brieskorn exponent triples `(a, b, c)` with known `p_g` and `br(𝔪)`.
pub fn brieskorn_triples() -> Vec<([i64; 3], i64, i64)> {
    let mut out = vec![([3, 5, 5], 3, 3)];
    for g in 1..=5 {
        out.push(([2, 3, 6 * g + 1], g, 1));
        out.push(([3, 3, 3 * g], g, 2));
        out.push(([2, 4, 4 * g], g, 2));
    }
    out
}

/// File name of the snapshot of a family member.
pub fn snapshot_name(family: Family, param: usize) -> String {
    format!("{family}_{param}.json")
}

/// Family members pinned by the snapshot files.
pub const SNAPSHOTS: [(Family, usize); 8] = [
    (Family::Fig244, 0),
    (Family::Fig244, 1),
    (Family::Fig244, 2),
    (Family::Fig2312, 1),
    (Family::Fig2312, 2),
    (Family::Brell1, 2),
    (Family::Brell3, 0),
    (Family::Brell3, 1),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(fig244(0).len(), 1);
        assert_eq!(fig244(3).len(), 7);
        assert_eq!(fig2312(2).len(), 5);
        assert_eq!(brell1(0).len(), 1);
        assert_eq!(brell3(2).len(), 7);
    }

    #[test]
    fn degenerate_members() {
        let g = fig244(0);
        assert_eq!(g.vertex(0).genus, 1);
        assert_eq!(g.vertex(0).self_int, -2);
        assert!(graph(Family::Fig2312, 0).is_err());
        assert!(graph(Family::Brell3, MAX_PARAM + 1).is_err());
    }

    #[test]
    fn star_layout() {
        let g = fig244(2);
        let ids: Vec<_> = (0..g.len()).map(|i| g.id(i)).collect();
        assert_eq!(ids, ["E0_1", "E1_1", "E2", "E1_2", "E0_2"]);
        let centre = g.index_of("E2").unwrap();
        assert_eq!(g.neighbors(centre).len(), 2);
        assert_eq!(brell3(1).neighbors(1).len(), 3);
    }

    #[test]
    fn family_names_round_trip() {
        for f in FAMILIES {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("fig999".parse::<Family>().is_err());
    }
}
