//! Weighted homogeneous hypersurfaces `k[x,y,z]/(f)`: a-invariant, graded
//! dimensions and geometric genus by lattice-point counting.

use crate::error::{Error, Result};
use crate::poly::Poly;

pub type Weights = [i64; 3];

/// A weighted homogeneous polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoly {
    weights: Weights,
    poly: Poly,
    degree: i64,
}

impl WeightedPoly {
    pub fn new(weights: Weights, poly: Poly) -> Result<Self> {
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::Input(format!("weights must be positive, got {weights:?}")));
        }
        if poly.num_terms() < 2 {
            return Err(Error::Input("a weighted homogeneous equation needs at least two terms".into()));
        }
        let degrees: Vec<i64> = poly
            .terms()
            .map(|(e, _)| e.iter().zip(&weights).map(|(&a, &w)| a as i64 * w).sum())
            .collect();
        let degree = degrees[0];
        if let Some(bad) = degrees.iter().find(|&&d| d != degree) {
            return Err(Error::Input(format!(
                "{poly} is not weighted homogeneous for weights {weights:?} (degrees {degree} and {bad})"
            )));
        }
        if degree < 1 {
            return Err(Error::Input("equation must have positive degree".into()));
        }
        Ok(WeightedPoly { weights, poly, degree })
    }

    pub fn weights(&self) -> Weights {
        self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// `x^a + y^b + z^c` with weights `(bc, ac, ab)`.
    pub fn brieskorn(a: u32, b: u32, c: u32) -> Result<Self> {
        let one = num_rational::BigRational::from_integer(1.into());
        let mut p = Poly::zero();
        p.add_term([a, 0, 0], one.clone());
        p.add_term([0, b, 0], one.clone());
        p.add_term([0, 0, c], one);
        let (a, b, c) = (a as i64, b as i64, c as i64);
        WeightedPoly::new([b * c, a * c, a * b], p)
    }
}

/// `a(S) = d - (w_x + w_y + w_z)` for a hypersurface of degree `d`.
pub fn a_invariant(weights: Weights, degree: i64) -> i64 {
    degree - weights.iter().sum::<i64>()
}

/// Number of monomials of weighted degree `i`.
pub fn count_monomials(weights: Weights, i: i64) -> i64 {
    if i < 0 {
        return 0;
    }
    let [wx, wy, wz] = weights;
    let mut count = 0;
    for a in 0..=i / wx {
        let rest = i - a * wx;
        for b in 0..=rest / wy {
            if (rest - b * wy) % wz == 0 {
                count += 1;
            }
        }
    }
    count
}

/// `dim_k S_i` for `S = k[x,y,z]/(f)`, `f` of degree `d`.
pub fn graded_dim(weights: Weights, degree: i64, i: i64) -> i64 {
    count_monomials(weights, i) - count_monomials(weights, i - degree)
}

/// `p_g = Σ_{i=0}^{a(S)} dim_k S_i`.
pub fn pg_weighted_homogeneous(p: &WeightedPoly) -> i64 {
    let a = a_invariant(p.weights, p.degree);
    (0..=a).map(|i| graded_dim(p.weights, p.degree, i)).sum()
}

fn check_order(a: i64, b: i64, c: i64) -> Result<()> {
    if !(2 <= a && a <= b && b <= c) {
        return Err(Error::Input(format!("Brieskorn exponents must satisfy 2 ≤ a ≤ b ≤ c, got ({a},{b},{c})")));
    }
    Ok(())
}

/// `#{(i,j,k) ≥ 0 : ibc + jac + kab ≤ abc - (ab+bc+ca)}`.
pub fn pg_brieskorn(a: i64, b: i64, c: i64) -> Result<i64> {
    check_order(a, b, c)?;
    let bound = a * b * c - (a * b + b * c + c * a);
    if bound < 0 {
        return Ok(0);
    }
    let (u, v, w) = (b * c, a * c, a * b);
    let mut count = 0;
    for i in 0..=bound / u {
        for j in 0..=(bound - i * u) / v {
            count += (bound - i * u - j * v) / w + 1;
        }
    }
    Ok(count)
}

/// Closed form `⌊(a-1)b/a⌋` for the normal reduction number of the maximal
/// ideal of a Brieskorn hypersurface.
pub fn br_maximal_ideal_brieskorn(a: i64, b: i64, c: i64) -> Result<i64> {
    check_order(a, b, c)?;
    Ok((a - 1) * b / a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrieskornInvariants {
    pub p_g: i64,
    pub a_invariant: i64,
    pub br: i64,
}

/// `p_g`, `a(A)` and `br(𝔪)` of `x^a + y^b + z^c`, with the lattice count
/// cross-checked against the graded-dimension sum.
pub fn brieskorn_invariants(a: i64, b: i64, c: i64) -> Result<BrieskornInvariants> {
    let p_g = pg_brieskorn(a, b, c)?;
    let wp = WeightedPoly::brieskorn(a as u32, b as u32, c as u32)?;
    let graded = pg_weighted_homogeneous(&wp);
    if graded != p_g {
        return Err(Error::invariant(
            "Brieskorn p_g: lattice count = graded sum",
            format!("{p_g} vs {graded}"),
        ));
    }
    Ok(BrieskornInvariants {
        p_g,
        a_invariant: a * b * c - (a * b + b * c + c * a),
        br: br_maximal_ideal_brieskorn(a, b, c)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(weights: Weights, text: &str) -> WeightedPoly {
        WeightedPoly::new(weights, Poly::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn a_invariants() {
        assert_eq!(a_invariant([7, 3, 2], 14), 2);
        assert_eq!(a_invariant([1, 1, 1], 3), 0);
        let (a, b, c) = (3, 5, 5);
        assert_eq!(a_invariant([b * c, a * c, a * b], a * b * c), a * b * c - (a * b + b * c + c * a));
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim([9, 6, 1], 18, 2), 1);
        assert_eq!(graded_dim([7, 3, 2], 14, 1), 0);
        assert_eq!(graded_dim([7, 3, 2], 14, 0), 1);
        // degree 3 in k[x,y,z]/(cubic): 10 monomials minus the relation
        assert_eq!(graded_dim([1, 1, 1], 3, 3), 9);
    }

    #[test]
    fn geometric_genera() {
        assert_eq!(pg_weighted_homogeneous(&wp([7, 3, 2], "x^2+z(z^6+y^4)")), 2);
        assert_eq!(pg_weighted_homogeneous(&wp([9, 6, 1], "x^2+y^3+z^18")), 3);
        assert_eq!(pg_weighted_homogeneous(&wp([1, 1, 1], "x^3+y^3+z^3")), 1);
        assert_eq!(pg_brieskorn(3, 5, 5).unwrap(), 3);
        assert_eq!(pg_brieskorn(2, 3, 13).unwrap(), 2);
        assert_eq!(pg_brieskorn(2, 3, 5).unwrap(), 0);
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(br_maximal_ideal_brieskorn(3, 5, 5).unwrap(), 3);
        assert_eq!(br_maximal_ideal_brieskorn(2, 4, 8).unwrap(), 2);
        assert_eq!(br_maximal_ideal_brieskorn(2, 3, 7).unwrap(), 1);
        assert!(br_maximal_ideal_brieskorn(3, 2, 5).is_err());
        assert!(pg_brieskorn(1, 2, 5).is_err());
    }

    #[test]
    fn weighted_poly_validation() {
        assert!(WeightedPoly::new([7, 3, 2], Poly::parse("x^2+y^3").unwrap()).is_err());
        assert!(WeightedPoly::new([7, 3, 2], Poly::parse("x^2").unwrap()).is_err());
        assert!(WeightedPoly::new([0, 3, 2], Poly::parse("x^2+y").unwrap()).is_err());
        assert_eq!(wp([7, 3, 2], "x^2+z^7").degree(), 14);
    }

    #[test]
    fn brieskorn_formulas_agree() {
        for a in 2..=12 {
            for b in a..=12 {
                for c in b..=12 {
                    let lattice = pg_brieskorn(a, b, c).unwrap();
                    let graded = pg_weighted_homogeneous(&WeightedPoly::brieskorn(a as u32, b as u32, c as u32).unwrap());
                    assert_eq!(lattice, graded, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn pg_monotone_in_c() {
        for a in 2..=5 {
            for b in a..=6 {
                let values: Vec<i64> = (b..=20).map(|c| pg_brieskorn(a, b, c).unwrap()).collect();
                assert!(values.windows(2).all(|w| w[0] <= w[1]), "({a},{b}): {values:?}");
            }
        }
    }

    #[test]
    fn graded_dims_nonnegative() {
        for weights in [[7, 3, 2], [9, 6, 1], [1, 1, 1], [15, 10, 6]] {
            let d = 2 * weights[0];
            for i in 0..3 * d {
                assert!(graded_dim(weights, d, i) >= 0);
                if i < d {
                    assert_eq!(graded_dim(weights, d, i), count_monomials(weights, i));
                }
            }
        }
    }
}
