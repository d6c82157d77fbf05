use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{PolyRing, SparsePolynomial};
use super::univariate::{interpolate_consecutive, IntPoly};
use crate::error::{Error, Result};

/// Largest supported degree in the main variable.
pub const MAX_DISCRIMINANT_DEGREE: i32 = 12;

/// Discriminant in `var` of a polynomial whose other variables (at most two)
/// are parameters, reconstructed by evaluation on an integer grid.
///
/// The result lives in the ring of the parameters, in their original order.
pub fn discriminant_bivariate(f: &SparsePolynomial, var: &str) -> Result<SparsePolynomial> {
    let d = f.degree_in(var).ok_or_else(|| Error::Domain(format!("{var} is not a variable of f")))?;
    if d > MAX_DISCRIMINANT_DEGREE {
        return Err(Error::SizeGuard(format!("degree {d} in {var} exceeds {MAX_DISCRIMINANT_DEGREE}")));
    }
    let params: Vec<String> = f.ring().vars().iter().filter(|v| v.as_str() != var).cloned().collect();
    if params.len() > 2 {
        return Err(Error::Domain("more than two parameters".into()));
    }
    let lc = f.coefficient_in(var, d);
    if !lc.is_constant() {
        return Err(Error::Domain("leading coefficient must be constant".into()));
    }
    let out_ring = PolyRing::new(&params);
    if d == 0 {
        return Ok(out_ring.zero());
    }

    // Per power of var: list of (parameter exponents, coefficient).
    let pidx: Vec<usize> = params.iter().map(|p| f.ring().index(p).expect("own variable")).collect();
    let vi = f.ring().index(var).expect("own variable");
    let mut rows: Vec<Vec<([u32; 2], BigInt)>> = vec![Vec::new(); d as usize + 1];
    for (exps, c) in f.terms() {
        let mut pe = [0u32; 2];
        for (k, &i) in pidx.iter().enumerate() {
            pe[k] = exps[i] as u32;
        }
        rows[exps[vi] as usize].push((pe, c.clone()));
    }
    let bound = |k: usize| -> usize {
        let deg = rows.iter().flatten().map(|(e, _)| e[k]).max().unwrap_or(0) as usize;
        (2 * d as usize - 1) * deg
    };
    let (b1, b2) = (bound(0), bound(1));
    let start = |b: usize| -> i64 { -(b as i64 / 2) };
    let (s1, s2) = (start(b1), start(b2));

    let powers = |x: i64, n: usize| -> Vec<BigInt> {
        let mut v = vec![BigInt::one()];
        for _ in 0..n {
            let next = v.last().unwrap() * x;
            v.push(next);
        }
        v
    };
    let max_e = |k: usize| rows.iter().flatten().map(|(e, _)| e[k]).max().unwrap_or(0) as usize;
    let (m1, m2) = (max_e(0), max_e(1));

    // For each x, the discriminant as a polynomial in the second parameter.
    let mut per_x: Vec<IntPoly> = Vec::with_capacity(b1 + 1);
    for a in 0..=b1 {
        let x = s1 + a as i64;
        let px = powers(x, m1);
        let mut ys = Vec::with_capacity(b2 + 1);
        for b in 0..=b2 {
            let y = s2 + b as i64;
            let py = powers(y, m2);
            let coeffs: Vec<BigInt> = rows
                .iter()
                .map(|terms| terms.iter().fold(BigInt::zero(), |acc, (e, c)| acc + c * &px[e[0] as usize] * &py[e[1] as usize]))
                .collect();
            ys.push(IntPoly::new(coeffs).discriminant());
        }
        per_x.push(interpolate_consecutive(s2, &ys).ok_or_else(|| Error::Domain("non-integral interpolant".into()))?);
    }
    let mut out = out_ring.zero();
    let deg2 = per_x.iter().filter_map(IntPoly::degree).max();
    let Some(deg2) = deg2 else { return Ok(out) };
    for j in 0..=deg2 {
        let vals: Vec<BigInt> = per_x.iter().map(|p| p.coeff(j)).collect();
        let pj = interpolate_consecutive(s1, &vals).ok_or_else(|| Error::Domain("non-integral interpolant".into()))?;
        for (i, c) in pj.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; params.len()];
            if !params.is_empty() {
                e[0] = i as u32;
            }
            if params.len() > 1 {
                e[1] = j as u32;
            }
            out += &out_ring.monomial(&e, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::univariate::sylvester_resultant;
    use proptest::prelude::*;

    #[test]
    fn quadratic() {
        let r = PolyRing::new(&["zeta", "q1"]);
        let f = r.parse("zeta^2 - 4*q1").unwrap();
        assert_eq!(discriminant_bivariate(&f, "zeta").unwrap(), PolyRing::new(&["q1"]).parse("16*q1").unwrap());
    }

    #[test]
    fn size_guard() {
        let r = PolyRing::new(&["x"]);
        assert!(matches!(discriminant_bivariate(&r.parse("x^13 + 1").unwrap(), "x"), Err(Error::SizeGuard(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn agrees_with_sylvester(
            d in 1usize..=4,
            raw in prop::collection::vec((0u32..=2, 0u32..=2, -5i64..=5), 0..8),
            pts in prop::collection::vec((-3i64..=3, -3i64..=3), 3),
        ) {
            let r = PolyRing::new(&["x", "a", "b"]);
            let mut f = r.monomial(&[d as u32, 0, 0], 1);
            for (i, (e1, e2, c)) in raw.iter().enumerate() {
                f += &r.monomial(&[(i % d) as u32, *e1, *e2], *c);
            }
            let disc = discriminant_bivariate(&f, "x").unwrap().embed(&PolyRing::new(&["a", "b"])).unwrap();
            for (x, y) in pts {
                let g = f.specialize(&[("a", BigInt::from(x)), ("b", BigInt::from(y))]);
                let g = IntPoly::from_sparse(&g, "x").unwrap();
                let res = sylvester_resultant(&g, &g.derivative());
                let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
                let expect = res * sign;
                prop_assert_eq!(disc.eval(&[BigInt::from(x), BigInt::from(y)]), expect);
            }
        }
    }
}
