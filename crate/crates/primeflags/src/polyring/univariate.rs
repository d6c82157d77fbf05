//! Dense univariate polynomials over ℤ and ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{PolyRing, SparsePolynomial};
use crate::error::{Error, Result};

/// Integer polynomial; `coeffs[k]` multiplies `x^k`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: c }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Non-negative gcd of coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content; leading coefficient made positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_exact_scalar(&c).expect("content divides")
    }

    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }

    /// Pseudo-remainder: `lc(b)^(deg a − deg b + 1)·a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let Some(da) = self.degree() else { return IntPoly::zero() };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut steps = da - db + 1;
        let mut top = da;
        loop {
            let lr = r[top].clone();
            for x in r.iter_mut() {
                *x *= &lb;
            }
            if !lr.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[top - db + j] -= &lr * bc;
                }
            }
            steps -= 1;
            if top == db {
                break;
            }
            top -= 1;
        }
        let mut out = IntPoly::new(r);
        while steps > 0 {
            out = out.scale(&lb);
            steps -= 1;
        }
        out
    }

    /// Exact division in ℤ[x]; `None` if it does not divide.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        let db = b.degree()?;
        let Some(da) = self.degree() else { return Some(IntPoly::zero()) };
        if da < db {
            return None;
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for top in (db..=da).rev() {
            let (qc, rem) = r[top].div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            if !qc.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[top - db + j] -= &qc * bc;
                }
            }
            q[top - db] = qc;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    /// Gcd in ℤ[x] by the primitive remainder sequence; positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Resultant by the subresultant algorithm.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return BigInt::zero();
        };
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut s = BigInt::one();
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
        }
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if db == 0 {
            return s * num_traits::pow(b.lc(), da);
        }
        let ca = a.content();
        let cb = b.content();
        a = a.div_exact_scalar(&ca).unwrap();
        b = b.div_exact_scalar(&cb).unwrap();
        let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let (d_a, d_b) = (a.degree().unwrap(), b.degree().unwrap());
            let delta = d_a - d_b;
            if d_a % 2 == 1 && d_b % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            let divisor = &g * num_traits::pow(h.clone(), delta);
            b = r.div_exact_scalar(&divisor).expect("subresultant division is exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let num = num_traits::pow(g.clone(), delta);
                let den = num_traits::pow(h.clone(), delta - 1);
                num / den
            };
            match b.degree() {
                None => return BigInt::zero(),
                Some(0) => {
                    let d_a = a.degree().unwrap();
                    let lb = b.lc();
                    let hh = if d_a == 0 {
                        h
                    } else {
                        num_traits::pow(lb, d_a) / num_traits::pow(h, d_a - 1)
                    };
                    return s * t * hh;
                }
                Some(_) => {}
            }
        }
    }

    /// Discriminant `(−1)^{d(d−1)/2}·Res(f, f′)/lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let d = self.degree().unwrap_or(0);
        if d < 1 {
            return BigInt::zero();
        }
        let res = self.resultant(&self.derivative());
        let q = res / self.lc();
        if (d * (d - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    pub fn to_sparse(&self, var: &str) -> SparsePolynomial {
        let ring = PolyRing::new(&[var]);
        let mut out = ring.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out += &ring.monomial(&[k as u32], c.clone());
        }
        out
    }

    /// Reads a polynomial mentioning at most `var`.
    pub fn from_sparse(p: &SparsePolynomial, var: &str) -> Result<IntPoly> {
        let mut coeffs = Vec::new();
        for (k, c) in p.coefficients_in(var) {
            if !c.is_constant() || k < 0 {
                return Err(Error::Domain(format!("polynomial is not univariate in {var}")));
            }
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] = c.constant_term();
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Sylvester-matrix resultant by fraction-free elimination.
pub fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else { return BigInt::zero() };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (k, c) in a.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    super::matrix::det_bareiss(rows)
}

/// True iff `f` (one variable, nonzero) has no repeated factor over ℚ.
pub fn is_squarefree_univariate(f: &SparsePolynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Domain("zero polynomial".into()));
    }
    let f = f.trim_vars();
    let var = match f.ring().vars() {
        [] => return Ok(true),
        [v] => v.clone(),
        _ => return Err(Error::Domain("polynomial is not univariate".into())),
    };
    Ok(IntPoly::from_sparse(&f, &var)?.is_squarefree())
}

/// Rational polynomial; `coeffs[k]` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// From `(numerator, denominator)` pairs, lowest degree first.
    pub fn from_fractions(c: &[(i64, i64)]) -> Self {
        RatPoly::new(c.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
    }

    /// `p / d`.
    pub fn from_int(p: &IntPoly, d: i64) -> Self {
        let d = BigInt::from(d);
        RatPoly::new(p.coeffs().iter().map(|c| BigRational::new(c.clone(), d.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigRational::zero();
        RatPoly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return RatPoly::default();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Least common denominator and the integer numerator polynomial.
    pub fn to_int_over_denominator(&self) -> (IntPoly, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        (IntPoly::new(num), den)
    }

    /// Text such as `(n^2 + n - 2)/2`.
    pub fn display_in(&self, var: &str) -> String {
        let (num, den) = self.to_int_over_denominator();
        let body = num.to_sparse(var).to_string();
        if den.is_one() {
            body
        } else if num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({body})/{den}")
        } else {
            format!("{body}/{den}")
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("n"))
    }
}

/// Newton interpolation through `(x_k, y_k)` in monomial form.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPoly::default();
    for k in (0..n).rev() {
        let shift = RatPoly::new(vec![-xs[k].clone(), BigRational::one()]);
        acc = acc.mul(&shift).add(&RatPoly::new(vec![dd[k].clone()]));
    }
    acc
}

/// Interpolates integer-valued data at `x0, x0+1, …` whose interpolant has
/// integer coefficients; `None` otherwise.
pub fn interpolate_consecutive(x0: i64, ys: &[BigInt]) -> Option<IntPoly> {
    let n = ys.len();
    if n == 0 {
        return Some(IntPoly::zero());
    }
    let mut diffs = Vec::with_capacity(n);
    let mut row = ys.to_vec();
    for _ in 0..n {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let deg = n - 1;
    let total = crate::arith::factorial(deg as u64);
    let total = BigInt::from(total);
    // a_k = Δ^k y0 · deg!/k!, accumulated in Horner form over (x − x0 − k).
    let mut scale = BigInt::from(1);
    let mut a = vec![BigInt::zero(); n];
    for k in (0..n).rev() {
        a[k] = &diffs[k] * &scale;
        scale *= BigInt::from(k.max(1));
    }
    let mut acc = IntPoly::new(vec![a[deg].clone()]);
    for k in (0..deg).rev() {
        let lin = IntPoly::new(vec![BigInt::from(-x0 - k as i64), BigInt::from(1)]);
        acc = acc.mul(&lin).add(&IntPoly::new(vec![a[k].clone()]));
    }
    acc.div_exact_scalar(&total)
}

/// Outcome of [`newton_forward_polynomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonReport {
    pub polynomial: RatPoly,
    /// First argument from which the polynomial reproduces the data.
    pub valid_from: i64,
    /// Order of the constant difference row.
    pub order: usize,
    pub inconclusive: bool,
}

/// Fits the data at `n0, n0+1, …` by the shortest prefix cut after which
/// some finite-difference row is constant (and has at least two entries).
pub fn newton_forward_polynomial(values: &[BigRational], n0: i64) -> Result<NewtonReport> {
    if values.len() < 2 {
        return Err(Error::Domain("need at least two values".into()));
    }
    for s in 0..values.len() - 1 {
        let tail = &values[s..];
        let mut row = tail.to_vec();
        for order in 0..tail.len() - 1 {
            if row.len() >= 2 && row.iter().all(|v| v == &row[0]) {
                let xs: Vec<BigRational> =
                    (0..=order).map(|k| BigRational::from_integer((n0 + (s + k) as i64).into())).collect();
                let poly = interpolate(&xs, &tail[..=order]);
                let mut valid_from = n0 + s as i64;
                while valid_from > n0 {
                    let k = (valid_from - 1 - n0) as usize;
                    if poly.eval_int(valid_from - 1) != values[k] {
                        break;
                    }
                    valid_from -= 1;
                }
                return Ok(NewtonReport { polynomial: poly, valid_from, order, inconclusive: false });
            }
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
    }
    let xs: Vec<BigRational> = (0..values.len()).map(|k| BigRational::from_integer((n0 + k as i64).into())).collect();
    Ok(NewtonReport { polynomial: interpolate(&xs, values), valid_from: n0, order: values.len() - 1, inconclusive: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(ip(&[5, 0, 1]).discriminant(), BigInt::from(-20));
        assert_eq!(ip(&[-1, 0, 0, 1]).discriminant(), BigInt::from(-27));
        assert_eq!(ip(&[1, -2, 1]).discriminant(), BigInt::zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = ip(&[-1, 0, 1]).mul(&ip(&[2, 3]));
        let g = ip(&[1, 1]).mul(&ip(&[4, 0, 1]));
        assert_eq!(f.gcd(&g), ip(&[1, 1]));
        assert!(ip(&[-1, 0, 1]).is_squarefree());
        assert!(!ip(&[1, -2, 1]).is_squarefree());
    }

    #[test]
    fn newton_examples() {
        let r = newton_forward_polynomial(&rats(&[1, 2, 5, 9, 14, 20, 27]), 1).unwrap();
        assert_eq!(r.polynomial, RatPoly::from_fractions(&[(-1, 1), (1, 2), (1, 2)]));
        assert_eq!(r.valid_from, 2);
        let r = newton_forward_polynomial(&rats(&[1, 4, 9, 16, 26, 40, 59, 84]), 1).unwrap();
        assert_eq!(r.polynomial, RatPoly::from_int(&ip(&[-24, 26, -3, 1]), 6));
        assert_eq!(r.valid_from, 2);
        let r = newton_forward_polynomial(&rats(&[1, 1, 1, 1]), 0).unwrap();
        assert_eq!(r.polynomial, RatPoly::from_fractions(&[(1, 1)]));
        assert!(newton_forward_polynomial(&rats(&[1, 5, 2]), 0).unwrap().inconclusive);
    }

    #[test]
    fn consecutive_interpolation() {
        let f = IntPoly::from_i64(&[7, -3, 0, 2]);
        let ys: Vec<BigInt> = (-2..=1).map(|x| f.eval(&BigInt::from(x))).collect();
        assert_eq!(interpolate_consecutive(-2, &ys), Some(f));
        let half: Vec<BigInt> = [0, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(interpolate_consecutive(0, &half), None);
    }

    #[test]
    fn rat_display() {
        assert_eq!(RatPoly::from_fractions(&[(-1, 1), (1, 2), (1, 2)]).to_string(), "(n^2 + n - 2)/2");
        assert_eq!(RatPoly::from_fractions(&[(1, 1)]).to_string(), "1");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 1..6).prop_map(|v| IntPoly::from_i64(&v))
    }

    proptest! {
        #[test]
        fn subresultant_matches_sylvester(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a.resultant(&b), sylvester_resultant(&a, &b));
        }

        #[test]
        fn square_is_not_squarefree(f in small_poly()) {
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            prop_assert!(!f.mul(&f).is_squarefree());
        }

        #[test]
        fn exact_division_inverts_product(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
        }
    }
}
