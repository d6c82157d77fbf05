//! Multivariate gcd over ℤ by recursive primitive remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::poly::SparsePolynomial;
use super::univariate::IntPoly;

/// Gcd with positive leading coefficient (canonical order).
pub fn poly_gcd(a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
    let ring = a.ring().union(b.ring());
    let a = a.embed(&ring).expect("union ring");
    let b = b.embed(&ring).expect("union ring");
    let g = gcd_rec(&a, &b, ring.nvars());
    normalize_sign(g)
}

fn normalize_sign(g: SparsePolynomial) -> SparsePolynomial {
    match g.leading() {
        Some((_, c)) if c.is_negative() => -g,
        _ => g,
    }
}

fn var_name(p: &SparsePolynomial, k: usize) -> String {
    p.ring().vars()[k].clone()
}

fn content_in(p: &SparsePolynomial, k: usize) -> SparsePolynomial {
    let v = var_name(p, k - 1);
    let mut acc = p.ring().zero();
    for c in p.coefficients_in(&v).values() {
        acc = gcd_rec(&acc, c, k - 1);
        if acc.is_constant() && acc.constant_term().abs() == BigInt::from(1) {
            break;
        }
    }
    acc
}

fn primitive_in(p: &SparsePolynomial, k: usize) -> SparsePolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, k);
    p.div_exact(&c).expect("content divides")
}

fn lead_in(p: &SparsePolynomial, v: &str) -> (i32, SparsePolynomial) {
    let mut coeffs = p.coefficients_in(v);
    let (d, c) = coeffs.pop_last().expect("nonzero");
    (d, c)
}

/// `lc(b)^e·a − q·b` with deg_v below deg_v b.
fn prem_in(a: &SparsePolynomial, b: &SparsePolynomial, v: &str, vi: usize) -> SparsePolynomial {
    let (db, lb) = lead_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = lead_in(&r, v);
        if dr < db {
            break;
        }
        let mut shift = r.ring().unit_monomial();
        shift.0[vi] = dr - db;
        let sub = (&lr * b).mul_term(&shift, &BigInt::from(1));
        r = &(&lb * &r) - &sub;
    }
    r
}

/// Cheap coprimality test: specialize the lower variables and compare in ℤ[v].
fn coprime_by_specialization(a: &SparsePolynomial, b: &SparsePolynomial, k: usize) -> bool {
    let v = var_name(a, k - 1);
    let (_, la) = lead_in(a, &v);
    let (_, lb) = lead_in(b, &v);
    let lower: Vec<String> = (0..k - 1).map(|i| var_name(a, i)).collect();
    for attempt in 0..4i64 {
        let vals: Vec<(&str, BigInt)> =
            lower.iter().enumerate().map(|(i, name)| (name.as_str(), BigInt::from(3 + 7 * attempt + 11 * i as i64))).collect();
        if la.specialize(&vals).is_zero() || lb.specialize(&vals).is_zero() {
            continue;
        }
        let (Ok(pa), Ok(pb)) = (
            IntPoly::from_sparse(&a.specialize(&vals), &v),
            IntPoly::from_sparse(&b.specialize(&vals), &v),
        ) else {
            return false;
        };
        return pa.gcd(&pb).degree() == Some(0);
    }
    false
}

/// Gcd up to sign; only the first `k` variables may occur.
fn gcd_rec(a: &SparsePolynomial, b: &SparsePolynomial, k: usize) -> SparsePolynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if k == 0 {
        return a.ring().constant(a.constant_term().gcd(&b.constant_term()));
    }
    let v = var_name(a, k - 1);
    let ca = content_in(a, k);
    let cb = content_in(b, k);
    let c = gcd_rec(&ca, &cb, k - 1);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    let da = pa.degree_in(&v).unwrap_or(0);
    let db = pb.degree_in(&v).unwrap_or(0);
    if da == 0 || db == 0 {
        return c;
    }
    if coprime_by_specialization(&pa, &pb, k) {
        return c;
    }
    if da < db {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_zero() {
        if pb.degree_in(&v) == Some(0) {
            return c;
        }
        let r = prem_in(&pa, &pb, &v, k - 1);
        pa = pb;
        pb = primitive_in(&r, k);
    }
    &c * &primitive_in(&pa, k)
}

impl SparsePolynomial {
    /// Greatest common divisor in ℤ[vars], positive leading coefficient.
    pub fn gcd(&self, other: &SparsePolynomial) -> SparsePolynomial {
        poly_gcd(self, other)
    }

    /// Makes the leading coefficient positive and removes integer content.
    pub fn primitive(&self) -> SparsePolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        normalize_sign(self.div_exact_scalar(&c).expect("content divides"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolyRing;

    #[test]
    fn bivariate_gcd() {
        let r = PolyRing::new(&["z", "t"]);
        let g = r.parse("1 - z*t + z^2").unwrap();
        let a = &g * &r.parse("t^2 + z + 3").unwrap();
        let b = &g * &r.parse("2*z*t - 5").unwrap();
        assert_eq!(poly_gcd(&a, &b), g);
        let h = poly_gcd(&r.parse("6*z^2*t").unwrap(), &r.parse("4*z*t^3").unwrap());
        assert_eq!(h, r.parse("2*z*t").unwrap());
        assert_eq!(poly_gcd(&r.parse("z+t").unwrap(), &r.parse("z-t").unwrap()), r.one());
    }

    #[test]
    fn content_in_lower_variable() {
        let r = PolyRing::new(&["z", "t"]);
        let a = r.parse("(1-z)*(t^2+1)").unwrap();
        let b = r.parse("(1-z)^2*(t+1)").unwrap();
        assert_eq!(poly_gcd(&a, &b), r.parse("z-1").unwrap());
    }
}
