//! Colengths `dim_k k[x,y,z]/((f) + M)` for a monomial ideal `M`.
//!
//! When `M` is zero-dimensional, `k[x,y,z]/M` has the standard monomials
//! as a basis and the image of `(f)` is the image of multiplication by `f`,
//! so the colength is `#std(M) - rank(μ_f)`.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::enumerate::check_guard;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Exponent, Poly};

fn divides(a: &Exponent, b: &Exponent) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Monomial ideal in `k[x,y,z]`, kept as a minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(mut gens: Vec<Exponent>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<Exponent> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .copied()
            .collect();
        MonomialIdeal { gens: minimal }
    }

    /// Parses a comma-separated list of monomials, e.g. `x,y,z^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for item in text.split(',') {
            let p = Poly::parse(item).map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::Syntax { pos: pos + offset, msg },
                other => other,
            })?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((e, _)), None) => gens.push(*e),
                _ => {
                    return Err(Error::Syntax {
                        pos: offset,
                        msg: format!("{:?} is not a single monomial", item.trim()),
                    })
                }
            }
            offset += item.len() + 1;
        }
        Ok(MonomialIdeal::new(gens))
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.gens.iter().any(|g| divides(g, e))
    }

    /// Smallest pure power of each variable in the ideal, if any.
    fn pure_powers(&self) -> [Option<u32>; 3] {
        let mut out = [None; 3];
        for g in &self.gens {
            let nonzero: Vec<usize> = (0..3).filter(|&i| g[i] > 0).collect();
            if let [i] = nonzero[..] {
                out[i] = Some(out[i].map_or(g[i], |p: u32| p.min(g[i])));
            }
        }
        out
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_powers().iter().all(Option::is_some)
    }

    /// `M + (x^n, y^n, z^n)`.
    pub fn with_powers(&self, n: u32) -> Self {
        let mut gens = self.gens.clone();
        gens.extend([[n, 0, 0], [0, n, 0], [0, 0, n]]);
        MonomialIdeal::new(gens)
    }

    /// Monomials outside the ideal, in lexicographic exponent order.
    pub fn standard_monomials(&self) -> Result<Vec<Exponent>> {
        let [Some(px), Some(py), Some(pz)] = self.pure_powers() else {
            return Err(Error::Input(format!("ideal {self} is not zero-dimensional")));
        };
        check_guard(px as u128 * py as u128 * pz as u128)?;
        let mut out = Vec::new();
        for a in 0..px {
            for b in 0..py {
                for c in 0..pz {
                    let e = [a, b, c];
                    if !self.contains(&e) {
                        out.push(e);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|e| Poly::monomial(*e, BigRational::from_integer(1.into())).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `dim_k k[x,y,z]/((f) + M)` for zero-dimensional `M`.
pub fn colength(f: &Poly, ideal: &MonomialIdeal) -> Result<usize> {
    let basis = ideal.standard_monomials()?;
    let size = basis.len();
    check_guard((size as u128).pow(2))?;
    let position: HashMap<Exponent, usize> = basis.iter().enumerate().map(|(i, e)| (*e, i)).collect();

    // column j holds f·basis[j] reduced modulo M
    let mut matrix = vec![vec![BigRational::zero(); size]; size];
    for (j, m) in basis.iter().enumerate() {
        for (e, c) in f.terms() {
            let prod = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
            if let Some(&i) = position.get(&prod) {
                matrix[i][j] += c;
            }
        }
    }
    let rank = linalg::rank(&linalg::clear_denominators(&matrix));
    Ok(size - rank)
}

pub const DEFAULT_SATURATION_CAP: u32 = 256;

/// Colength for `M` that need not be zero-dimensional, by truncating with
/// `(x^N, y^N, z^N)` for `N = 2, 4, 8, …` until two consecutive values
/// agree. Stabilisation is a heuristic; failing to stabilise by `cap`
/// indicates that `(f) + M` is not zero-dimensional.
pub fn colength_saturating(f: &Poly, ideal: &MonomialIdeal, cap: u32) -> Result<usize> {
    let mut previous = None;
    let mut n = 2u32;
    while n <= cap {
        let value = colength(f, &ideal.with_powers(n))?;
        if previous == Some(value) {
            return Ok(value);
        }
        previous = Some(value);
        n *= 2;
    }
    Err(Error::Input(format!(
        "colength of (f) + {ideal} did not stabilise up to N = {cap}; the quotient is probably not finite"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s).unwrap()
    }

    fn poly(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(ideal("x, x^2 y, y^3, y^4, z").generators(), &[[0, 0, 1], [0, 3, 0], [1, 0, 0]]);
        assert_eq!(ideal("x,y,z^2").to_string(), "(z^2, y, x)");
    }

    #[test]
    fn standard_monomial_sets() {
        assert_eq!(ideal("x,y,z^2").standard_monomials().unwrap(), vec![[0, 0, 0], [0, 0, 1]]);
        assert_eq!(ideal("x^2,y^2,z^2").standard_monomials().unwrap().len(), 8);
        assert_eq!(
            ideal("x, y^2, yz, z^3").standard_monomials().unwrap(),
            vec![[0, 0, 0], [0, 0, 1], [0, 0, 2], [0, 1, 0]]
        );
        assert!(ideal("y,z").standard_monomials().is_err());
    }

    #[test]
    fn colengths() {
        assert_eq!(colength(&poly("x^2+z(z^6+y^4)"), &ideal("x,y,z")).unwrap(), 1);
        assert_eq!(colength(&poly("x^2+z(z^10+y^4)"), &ideal("x,y,z^2")).unwrap(), 2);
        assert_eq!(colength(&poly("x^2+xy+z^3"), &ideal("x,y,z")).unwrap(), 1);
        // a unit kills everything
        assert_eq!(colength(&poly("1+x"), &ideal("x^3,y^2,z")).unwrap(), 0);
        assert_eq!(colength(&poly("x"), &ideal("x^3,y,z")).unwrap(), 1);
    }

    #[test]
    fn saturating_colengths() {
        let f = poly("x^2+y^4+z^8");
        let cap = DEFAULT_SATURATION_CAP;
        assert_eq!(colength_saturating(&f, &ideal("y,z"), cap).unwrap(), 2);
        assert_eq!(colength_saturating(&f, &ideal("y,z^2"), cap).unwrap(), 4);
        assert_eq!(colength_saturating(&f, &ideal("y,z^4"), cap).unwrap(), 8);
        assert!(colength_saturating(&poly("x^2"), &ideal("y"), 16).is_err());
    }

    #[test]
    fn colength_bounded_by_staircase() {
        let m = ideal("x^2,y^3,z^2,xyz");
        let s = m.standard_monomials().unwrap().len();
        for (f, inside) in [("x^2+y", false), ("xyz", true), ("x^2 + y^3", true), ("y^2 z + x", false)] {
            let c = colength(&poly(f), &m).unwrap();
            assert!(c <= s);
            assert_eq!(c == s, inside, "{f}");
        }
    }

    #[test]
    fn colength_scale_invariant() {
        let m = ideal("x^3,y^2,z^3");
        let f = poly("x^2 + 3 y z + z^2");
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(colength(&f, &m).unwrap(), colength(&f.scale(&half), &m).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(MonomialIdeal::parse("x, y+z"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(MonomialIdeal::parse("x, y^"), Err(Error::Syntax { pos: 5, .. })));
    }
}
