//! Exhaustive enumeration of cycles in a coefficient box.
//!
//! The walk is an odometer over `0 ≤ D ≤ upper` that keeps `D·E_i`, `D²`
//! and `K·D` up to date incrementally, so each step costs O(degree).

use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph};

pub const DEFAULT_MAX_ENUM: u128 = 10_000_000;
pub const MAX_ENUM_VAR: &str = "SINGLAB_MAX_ENUM";

/// Candidate-count guard; `SINGLAB_MAX_ENUM` overrides the default of 10⁷.
pub fn enumeration_limit() -> u128 {
    std::env::var(MAX_ENUM_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

pub fn box_size(upper: &Cycle) -> u128 {
    upper
        .coeffs()
        .iter()
        .fold(1u128, |acc, &c| acc.saturating_mul((c.max(0) as u128) + 1))
}

pub fn check_guard(needed: u128) -> Result<()> {
    let limit = enumeration_limit();
    if needed > limit {
        return Err(Error::GuardExceeded { needed, limit });
    }
    Ok(())
}

/// Current point of a box walk.
pub struct BoxPoint<'a> {
    pub coeffs: &'a [i64],
    /// `D·E_i` for every vertex.
    pub products: &'a [i64],
    pub self_intersection: i64,
    /// `K·D`, from the adjunction relations.
    pub canonical_degree: i64,
}

impl BoxPoint<'_> {
    pub fn chi(&self) -> i64 {
        -(self.self_intersection + self.canonical_degree) / 2
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_anti_nef(&self) -> bool {
        self.products.iter().all(|&p| p <= 0)
    }

    pub fn to_cycle(&self) -> Cycle {
        Cycle(self.coeffs.to_vec())
    }
}

/// Calls `visit` on every `0 ≤ D ≤ upper` (including `D = 0`), after
/// checking the guard. Returns the number of points visited.
pub fn walk_box(g: &DualGraph, upper: &Cycle, mut visit: impl FnMut(&BoxPoint<'_>)) -> Result<u128> {
    if !upper.is_effective() {
        return Err(Error::Input("box upper bound must be effective".into()));
    }
    g.products(upper)?;
    let total = box_size(upper);
    check_guard(total)?;

    let n = g.len();
    let m = g.intersection_matrix();
    let b = g.adjunction_vector();
    let mut coeffs = vec![0i64; n];
    let mut products = vec![0i64; n];
    let mut d2 = 0i64;
    let mut kd = 0i64;
    let active: Vec<usize> = (0..n).filter(|&i| upper.0[i] > 0).collect();

    let shift = |i: usize, t: i64, coeffs: &mut [i64], products: &mut [i64], d2: &mut i64, kd: &mut i64| {
        *d2 += 2 * t * products[i] + t * t * m[i][i];
        *kd += t * b[i];
        coeffs[i] += t;
        products[i] += t * m[i][i];
        for &j in g.neighbors(i) {
            products[j] += t * m[j][i];
        }
    };

    let mut visited = 0u128;
    loop {
        visit(&BoxPoint {
            coeffs: &coeffs,
            products: &products,
            self_intersection: d2,
            canonical_degree: kd,
        });
        visited += 1;
        let mut advanced = false;
        for &i in &active {
            if coeffs[i] < upper.0[i] {
                shift(i, 1, &mut coeffs, &mut products, &mut d2, &mut kd);
                advanced = true;
                break;
            }
            let back = -coeffs[i];
            shift(i, back, &mut coeffs, &mut products, &mut d2, &mut kd);
        }
        if !advanced {
            break;
        }
    }
    debug_assert_eq!(visited, total);
    Ok(visited)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    fn a2() -> DualGraph {
        DualGraph::new(
            vec![
                Vertex { id: "A".into(), self_int: -2, genus: 0 },
                Vertex { id: "B".into(), self_int: -3, genus: 1 },
            ],
            vec![("A".into(), "B".into(), 1)],
        )
        .unwrap()
    }

    #[test]
    fn walk_matches_direct_evaluation() {
        let g = a2();
        let upper = Cycle(vec![2, 3]);
        let b = g.adjunction_vector();
        let mut seen = Vec::new();
        let count = walk_box(&g, &upper, |p| {
            let d = p.to_cycle();
            assert_eq!(p.products, g.products(&d).unwrap().as_slice());
            assert_eq!(p.self_intersection, g.pairing(&d, &d).unwrap());
            let kd: i64 = d.0.iter().zip(&b).map(|(x, y)| x * y).sum();
            assert_eq!(p.canonical_degree, kd);
            seen.push(d);
        })
        .unwrap();
        assert_eq!(count, 12);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn zero_box_visits_once() {
        let g = a2();
        assert_eq!(walk_box(&g, &Cycle::zero(2), |p| assert!(p.is_zero())).unwrap(), 1);
    }

    #[test]
    fn box_size_saturates() {
        assert_eq!(box_size(&Cycle(vec![1, 2, 0])), 6);
        assert_eq!(box_size(&Cycle(vec![i64::MAX; 8])), u128::MAX);
    }
}
