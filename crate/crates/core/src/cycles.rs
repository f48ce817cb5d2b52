//! Fundamental cycles, the canonical cycle, χ and Riemann–Roch colengths.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{Cycle, DualGraph, QCycle};
use crate::linalg;

/// Fundamental cycle of a connected vertex subset, by Laufer's loop with
/// lowest-index tie-break.
pub fn fundamental_cycle(g: &DualGraph, support: &[usize]) -> Result<Cycle> {
    let order: Vec<usize> = (0..g.len()).collect();
    fundamental_cycle_with_order(g, support, &order)
}

/// Laufer's loop where the first vertex of `order` violating anti-nefness
/// is raised at every step. The result does not depend on `order`.
pub fn fundamental_cycle_with_order(g: &DualGraph, support: &[usize], order: &[usize]) -> Result<Cycle> {
    if support.is_empty() {
        return Err(Error::Input("fundamental cycle of an empty support".into()));
    }
    if let Some(&bad) = support.iter().find(|&&i| i >= g.len()) {
        return Err(Error::Input(format!("vertex index {bad} out of range")));
    }
    if !g.is_connected_subset(support) {
        return Err(Error::Input("support of a fundamental cycle must be connected".into()));
    }
    let mut inside = vec![false; g.len()];
    for &i in support {
        inside[i] = true;
    }
    let scan: Vec<usize> = order.iter().copied().filter(|&i| inside[i]).collect();
    if scan.len() != support.iter().filter(|&&i| inside[i]).count() {
        return Err(Error::Input("vertex order does not cover the support".into()));
    }

    let m = g.intersection_matrix();
    let mut z = g.reduced(support);
    let mut products = g.products(&z)?;
    let cap: i64 = g.vertices().iter().map(|v| v.self_int.abs()).sum::<i64>() * g.len() as i64 * 64;
    let mut steps = 0i64;
    while let Some(&i) = scan.iter().find(|&&i| products[i] > 0) {
        steps += 1;
        if steps > cap {
            return Err(Error::invariant(
                "Laufer termination",
                format!("no anti-nef cycle after {cap} steps"),
            ));
        }
        z.0[i] += 1;
        products[i] += m[i][i];
        for &j in g.neighbors(i) {
            products[j] += m[j][i];
        }
    }
    Ok(z)
}

/// Fundamental cycle `Z_E` of the whole exceptional set.
pub fn fundamental_cycle_full(g: &DualGraph) -> Result<Cycle> {
    let all: Vec<usize> = (0..g.len()).collect();
    fundamental_cycle(g, &all)
}

/// The rational cycle `K` with `K·E_i = 2g_i - 2 - E_i²` for all `i`.
pub fn canonical_cycle(g: &DualGraph) -> Result<QCycle> {
    let m = linalg::to_big(g.intersection_matrix());
    let b: Vec<BigInt> = g.adjunction_vector().into_iter().map(BigInt::from).collect();
    let k = linalg::solve(&m, &b).ok_or_else(|| {
        Error::invariant("canonical cycle", "intersection matrix is singular")
    })?;
    let k = QCycle(k);
    // re-substitute
    for (i, bi) in b.iter().enumerate() {
        let lhs = g.pairing_q(&k, &g.basis(i).to_q())?;
        if lhs != BigRational::from_integer(bi.clone()) {
            return Err(Error::invariant(
                "canonical cycle",
                format!("K·{} = {lhs}, expected {bi}", g.id(i)),
            ));
        }
    }
    Ok(k)
}

pub fn is_numerically_gorenstein(g: &DualGraph) -> Result<bool> {
    Ok(canonical_cycle(g)?.is_integral())
}

/// `K·D` computed from the adjunction relations, without solving for `K`.
pub fn canonical_degree(g: &DualGraph, d: &Cycle) -> Result<i64> {
    g.products(d)?;
    Ok(g.adjunction_vector().iter().zip(d.coeffs()).map(|(b, c)| b * c).sum())
}

/// Intersection data of a cycle: `D²`, `K·D` and `χ(D) = -(D² + K·D)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiData {
    pub self_intersection: i64,
    pub canonical_degree: i64,
    pub chi: i64,
}

pub fn chi_data(g: &DualGraph, d: &Cycle) -> Result<ChiData> {
    let d2 = g.self_intersection(d)?;
    let kd = canonical_degree(g, d)?;
    if (d2 + kd) % 2 != 0 {
        return Err(Error::invariant(
            "adjunction parity",
            format!("D² + K·D = {} is odd for D = {}", d2 + kd, g.format_cycle(d)),
        ));
    }
    Ok(ChiData {
        self_intersection: d2,
        canonical_degree: kd,
        chi: -(d2 + kd) / 2,
    })
}

pub fn chi(g: &DualGraph, d: &Cycle) -> Result<i64> {
    Ok(chi_data(g, d)?.chi)
}

/// Colength `ℓ(A/I_Z) = -(Z² + K·Z)/2 + p_g - q` of the ideal represented by `Z`.
pub fn riemann_roch_colength(g: &DualGraph, z: &Cycle, p_g: i64, q: i64) -> Result<i64> {
    if !z.is_effective() || z.is_zero() {
        return Err(Error::Input("Z must be a nonzero effective cycle".into()));
    }
    if !g.is_anti_nef(z)? {
        return Err(Error::Input(format!("{} is not anti-nef", g.format_cycle(z))));
    }
    if p_g < 0 || q < 0 || q > p_g {
        return Err(Error::Input(format!("need 0 ≤ q ≤ p_g, got q = {q}, p_g = {p_g}")));
    }
    let ell = chi(g, z)? + p_g - q;
    if ell < 1 {
        return Err(Error::Input(format!(
            "inconsistent data: colength {ell} < 1 for Z = {}, p_g = {p_g}, q = {q}",
            g.format_cycle(z)
        )));
    }
    Ok(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn single(self_int: i64, genus: i64) -> DualGraph {
        DualGraph::new(vec![Vertex { id: "E".into(), self_int, genus }], vec![]).unwrap()
    }

    fn chain_elliptic_end() -> DualGraph {
        DualGraph::new(
            vec![
                Vertex { id: "E0".into(), self_int: -2, genus: 0 },
                Vertex { id: "E1".into(), self_int: -2, genus: 0 },
                Vertex { id: "E2".into(), self_int: -1, genus: 1 },
            ],
            vec![("E0".into(), "E1".into(), 1), ("E1".into(), "E2".into(), 1)],
        )
        .unwrap()
    }

    fn two_arms() -> DualGraph {
        DualGraph::new(
            vec![
                Vertex { id: "A0".into(), self_int: -2, genus: 0 },
                Vertex { id: "C".into(), self_int: -2, genus: 1 },
                Vertex { id: "B0".into(), self_int: -2, genus: 0 },
            ],
            vec![("A0".into(), "C".into(), 1), ("C".into(), "B0".into(), 1)],
        )
        .unwrap()
    }

    fn d4() -> DualGraph {
        let v = |id: &str| Vertex { id: id.into(), self_int: -2, genus: 0 };
        DualGraph::new(
            vec![v("C"), v("L1"), v("L2"), v("L3")],
            vec![
                ("C".into(), "L1".into(), 1),
                ("C".into(), "L2".into(), 1),
                ("C".into(), "L3".into(), 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fundamental_cycles() {
        assert_eq!(fundamental_cycle_full(&two_arms()).unwrap(), Cycle(vec![1, 1, 1]));
        let g = chain_elliptic_end();
        let z = fundamental_cycle_full(&g).unwrap();
        assert_eq!(z, Cycle(vec![1, 1, 1]));
        assert_eq!(g.self_intersection(&z).unwrap(), -1);
        assert_eq!(fundamental_cycle_full(&d4()).unwrap(), Cycle(vec![2, 1, 1, 1]));
        assert_eq!(fundamental_cycle(&g, &[1, 2]).unwrap(), Cycle(vec![0, 1, 1]));
    }

    #[test]
    fn fundamental_cycle_errors() {
        let g = chain_elliptic_end();
        assert!(fundamental_cycle(&g, &[]).is_err());
        assert!(fundamental_cycle(&g, &[0, 2]).is_err());
    }

    #[test]
    fn canonical_cycles() {
        assert_eq!(canonical_cycle(&single(-2, 0)).unwrap(), QCycle(vec![q(0)]));
        assert_eq!(
            canonical_cycle(&chain_elliptic_end()).unwrap(),
            QCycle(vec![q(-1), q(-2), q(-3)])
        );
        assert_eq!(
            canonical_cycle(&two_arms()).unwrap(),
            QCycle(vec![q(-1), q(-2), q(-1)])
        );
        let k = canonical_cycle(&single(-3, 0)).unwrap();
        assert_eq!(k, QCycle(vec![BigRational::new((-1).into(), 3.into())]));
        assert!(!is_numerically_gorenstein(&single(-3, 0)).unwrap());
        assert!(is_numerically_gorenstein(&single(-2, 0)).unwrap());
        assert!(is_numerically_gorenstein(&chain_elliptic_end()).unwrap());
    }

    #[test]
    fn chi_values() {
        let g = chain_elliptic_end();
        assert_eq!(chi(&g, &Cycle(vec![1, 1, 1])).unwrap(), 0);
        assert_eq!(chi(&g, &Cycle(vec![0, 0, 1])).unwrap(), 0);
        assert_eq!(chi(&single(-2, 0), &Cycle(vec![1])).unwrap(), 1);
        let data = chi_data(&g, &Cycle(vec![1, 2, 2])).unwrap();
        assert_eq!((data.self_intersection, data.canonical_degree, data.chi), (-2, 2, 0));
    }

    #[test]
    fn riemann_roch() {
        let g = chain_elliptic_end();
        assert_eq!(riemann_roch_colength(&g, &Cycle(vec![1, 2, 2]), 2, 1).unwrap(), 1);
        assert_eq!(riemann_roch_colength(&two_arms(), &Cycle(vec![1, 1, 1]), 2, 1).unwrap(), 1);
        // χ(Z) = 0 and q = p_g: colength 0 is inconsistent
        assert!(riemann_roch_colength(&g, &Cycle(vec![1, 1, 1]), 2, 2).is_err());
        assert!(riemann_roch_colength(&g, &Cycle(vec![1, 0, 0]), 2, 1).is_err());
        assert!(riemann_roch_colength(&g, &Cycle(vec![1, 2, 2]), 1, 2).is_err());
    }
}
