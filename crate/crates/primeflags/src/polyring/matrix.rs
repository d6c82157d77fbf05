//! Square matrices of polynomials and their characteristic polynomials.
//!
//! Characteristic polynomials first split the matrix into strongly connected
//! blocks of its nonzero pattern (the matrix is block triangular in that
//! order), then run the Faddeev–LeVerrier recursion on each block.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{PolyRing, SparsePolynomial};
use super::univariate::IntPoly;
use crate::error::{Error, Result};

/// Largest irreducible block accepted with non-constant entries.
pub const SYMBOLIC_BLOCK_LIMIT: usize = 40;
/// Largest irreducible block accepted with integer entries.
pub const NUMERIC_BLOCK_LIMIT: usize = 1000;

pub(crate) trait FlScalar: Clone {
    fn is_nil(&self) -> bool;
    fn add_assign(&mut self, o: &Self);
    fn mul(&self, o: &Self) -> Self;
    fn div_int(&self, k: &BigInt) -> Self;
    fn neg(&self) -> Self;
    fn one_like(&self) -> Self;
    fn block_char_poly(rows: &SparseRows<Self>, zero: &Self) -> Vec<Self> {
        faddeev_leverrier(rows, zero)
    }
}

impl FlScalar for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_int(&self, k: &BigInt) -> Self {
        let (q, r) = self.div_rem(k);
        debug_assert!(Zero::is_zero(&r));
        q
    }
    fn neg(&self) -> Self {
        -self
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn block_char_poly(rows: &SparseRows<Self>, zero: &Self) -> Vec<Self> {
        if rows.len() > MODULAR_THRESHOLD {
            modular_char_poly(rows)
        } else {
            faddeev_leverrier(rows, zero)
        }
    }
}

/// Integer blocks above this size go through the multimodular path.
const MODULAR_THRESHOLD: usize = 12;

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Char poly mod `p` (< 2³¹) by Hessenberg reduction; `a` is dense row-major.
fn char_poly_mod(a: &mut [u64], n: usize, p: u64) -> Vec<u64> {
    for m in 0..n.saturating_sub(2) {
        let Some(piv) = (m + 1..n).find(|&i| a[i * n + m] != 0) else { continue };
        if piv != m + 1 {
            for j in 0..n {
                a.swap(piv * n + j, (m + 1) * n + j);
            }
            for r in 0..n {
                a.swap(r * n + piv, r * n + m + 1);
            }
        }
        let inv = inv_mod(a[(m + 1) * n + m], p);
        for i in m + 2..n {
            let u = a[i * n + m] * inv % p;
            if u == 0 {
                continue;
            }
            for j in m..n {
                let s = a[(m + 1) * n + j] * u % p;
                a[i * n + j] = (a[i * n + j] + p - s) % p;
            }
            for r in 0..n {
                let s = a[r * n + i] * u % p;
                a[r * n + m + 1] = (a[r * n + m + 1] + s) % p;
            }
        }
    }
    let h = |i: usize, j: usize| a[i * n + j];
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        let d = h(k - 1, k - 1);
        for (e, &c) in prev.iter().enumerate() {
            next[e + 1] = (next[e + 1] + c) % p;
            next[e] = (next[e] + p - c * d % p) % p;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = t * h(k - i, k - i - 1) % p;
            if t == 0 {
                break;
            }
            let f = h(k - i - 1, k - 1) * t % p;
            if f == 0 {
                continue;
            }
            for (e, &c) in polys[k - i - 1].iter().enumerate() {
                next[e] = (next[e] + p - c * f % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

/// Exact integer char poly by Hessenberg reduction modulo word-sized primes
/// and Chinese remaindering up to a Hadamard bound.
fn modular_char_poly(rows: &SparseRows<BigInt>) -> Vec<BigInt> {
    let n = rows.len();
    let bits: f64 = rows
        .iter()
        .map(|r| {
            let norm2: f64 = r.iter().map(|(_, x)| x.to_f64().unwrap_or(f64::MAX).powi(2)).sum();
            (1.0 + norm2.sqrt()).log2()
        })
        .sum::<f64>()
        + 2.0;
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut p: u64 = 1 << 31;
    while (modulus.bits() as f64) < bits {
        p -= 1;
        while !crate::arith::is_prime_u64(p) {
            p -= 1;
        }
        let pb = BigInt::from(p);
        let mut dense = vec![0u64; n * n];
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r {
                dense[i * n + j] = x.mod_floor(&pb).to_u64().expect("reduced");
            }
        }
        let res = char_poly_mod(&mut dense, n, p);
        let m_mod = modulus.mod_floor(&pb).to_u64().expect("reduced");
        let m_inv = inv_mod(m_mod, p);
        for (x, &r) in acc.iter_mut().zip(&res) {
            let x_mod = x.mod_floor(&pb).to_u64().expect("reduced");
            let k = (r + p - x_mod) % p * m_inv % p;
            *x += &modulus * BigInt::from(k);
        }
        modulus *= &pb;
    }
    let half = &modulus >> 1;
    for x in &mut acc {
        if *x > half {
            *x -= &modulus;
        }
    }
    acc
}

impl FlScalar for SparsePolynomial {
    fn is_nil(&self) -> bool {
        SparsePolynomial::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_int(&self, k: &BigInt) -> Self {
        self.div_exact_scalar(k).expect("Faddeev-LeVerrier division is exact")
    }
    fn neg(&self) -> Self {
        -self
    }
    fn one_like(&self) -> Self {
        self.ring().one()
    }
}

type SparseRows<T> = Vec<Vec<(usize, T)>>;

/// Coefficients `c_0..c_d` (c_d = 1) of det(x·Id − A) for a sparse block.
fn faddeev_leverrier<T: FlScalar>(rows: &SparseRows<T>, zero: &T) -> Vec<T> {
    let d = rows.len();
    let one = zero.one_like();
    let mut c = vec![zero.clone(); d + 1];
    c[d] = one;
    let mut m: Vec<T> = vec![zero.clone(); d * d];
    for k in 1..=d {
        let mut next = vec![zero.clone(); d * d];
        if k > 1 {
            for (i, row) in rows.iter().enumerate() {
                for (l, a) in row {
                    for j in 0..d {
                        let x = &m[l * d + j];
                        if !x.is_nil() {
                            next[i * d + j].add_assign(&a.mul(x));
                        }
                    }
                }
            }
        }
        for i in 0..d {
            next[i * d + i].add_assign(&c[d - k + 1]);
        }
        m = next;
        let mut tr = zero.clone();
        for (i, row) in rows.iter().enumerate() {
            for (l, a) in row {
                let x = &m[l * d + i];
                if !x.is_nil() {
                    tr.add_assign(&a.mul(x));
                }
            }
        }
        c[d - k] = tr.div_int(&BigInt::from(k)).neg();
    }
    c
}

/// Strongly connected components of the pattern graph (i → j iff a_ij ≠ 0).
fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut radj = vec![Vec::new(); n];
    for (i, out) in adj.iter().enumerate() {
        for &j in out {
            radj[j].push(i);
        }
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k < adj[v].len() {
                let w = adj[v][*k];
                *k += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        while k < members.len() {
            let v = members[k];
            k += 1;
            for &w in &radj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn poly_mul<T: FlScalar>(a: &[T], b: &[T], zero: &T) -> Vec<T> {
    let mut c = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !x.is_nil() && !y.is_nil() {
                c[i + j].add_assign(&x.mul(y));
            }
        }
    }
    c
}

/// Char-poly coefficients of a sparse matrix, block by block.
fn block_char_poly<T: FlScalar>(rows: &SparseRows<T>, zero: &T, limit: usize) -> Result<Vec<T>> {
    let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|(j, _)| *j).collect()).collect();
    let mut acc = vec![zero.one_like()];
    for block in components(&adj) {
        if block.len() > limit {
            return Err(Error::SizeGuard(format!("irreducible block of size {} exceeds {limit}", block.len())));
        }
        let mut pos = vec![usize::MAX; rows.len()];
        for (k, &v) in block.iter().enumerate() {
            pos[v] = k;
        }
        let sub: SparseRows<T> = block
            .iter()
            .map(|&v| rows[v].iter().filter(|(j, _)| pos[*j] != usize::MAX).map(|(j, a)| (pos[*j], a.clone())).collect())
            .collect();
        let c = T::block_char_poly(&sub, zero);
        acc = poly_mul(&acc, &c, zero);
    }
    Ok(acc)
}

/// Characteristic polynomial det(x·Id − A) of an integer matrix.
pub fn int_char_poly(rows: &[Vec<BigInt>]) -> Result<IntPoly> {
    let sparse: SparseRows<BigInt> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(j, a)| (j, a.clone())).collect())
        .collect();
    Ok(IntPoly::new(block_char_poly(&sparse, &BigInt::zero(), NUMERIC_BLOCK_LIMIT)?))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Square matrix with polynomial entries over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialMatrix {
    ring: PolyRing,
    dim: usize,
    entries: Vec<SparsePolynomial>,
}

impl PolynomialMatrix {
    pub fn zero(ring: &PolyRing, dim: usize) -> Self {
        PolynomialMatrix { ring: ring.clone(), dim, entries: vec![ring.zero(); dim * dim] }
    }

    pub fn identity(ring: &PolyRing, dim: usize) -> Self {
        let mut m = Self::zero(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ring.one();
        }
        m
    }

    /// Builds from rows, unifying variable lists.
    pub fn from_rows(rows: Vec<Vec<SparsePolynomial>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape("matrix is not square".into()));
        }
        let mut ring = PolyRing::new::<&str>(&[]);
        for e in rows.iter().flatten() {
            ring = ring.union(e.ring());
        }
        let entries = rows.into_iter().flatten().map(|e| e.embed(&ring)).collect::<Result<_>>()?;
        Ok(PolynomialMatrix { ring, dim, entries })
    }

    /// Parses textual rows over `ring`.
    pub fn parse_rows<S: AsRef<str>>(ring: &PolyRing, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape("matrix is not square".into()));
        }
        Ok(PolynomialMatrix { ring: ring.clone(), dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let ring = PolyRing::new::<&str>(&[]);
        let rows = rows.iter().map(|r| r.iter().map(|&x| ring.constant(x)).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePolynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SparsePolynomial) {
        let p = if p.ring() == &self.ring {
            p
        } else {
            self.widen(p.ring());
            p.embed(&self.ring).expect("widened ring")
        };
        self.entries[i * self.dim + j] = p;
    }

    fn widen(&mut self, other: &PolyRing) {
        let ring = self.ring.union(other);
        if ring != self.ring {
            for e in &mut self.entries {
                *e = e.embed(&ring).expect("union ring");
            }
            self.ring = ring;
        }
    }

    pub fn rows(&self) -> Vec<Vec<SparsePolynomial>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&SparsePolynomial) -> SparsePolynomial) -> Self {
        let entries: Vec<SparsePolynomial> = self.entries.iter().map(f).collect();
        let mut ring = self.ring.clone();
        for e in &entries {
            ring = ring.union(e.ring());
        }
        let entries = entries.into_iter().map(|e| e.embed(&ring).expect("union ring")).collect();
        PolynomialMatrix { ring, dim: self.dim, entries }
    }

    pub fn specialize(&self, values: &[(&str, BigInt)]) -> Self {
        self.map(|e| e.specialize(values))
    }

    pub fn scale(&self, c: &SparsePolynomial) -> Self {
        self.map(|e| e * c)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim {
            return Err(Error::Shape("dimension mismatch".into()));
        }
        let rows = (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j) + o.get(i, j)).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim {
            return Err(Error::Shape("dimension mismatch".into()));
        }
        let ring = self.ring.union(&o.ring);
        let d = self.dim;
        let mut out = Self::zero(&ring, d);
        for i in 0..d {
            for l in 0..d {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.entries[i * d + j] = self.entries[j * d + i].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SparsePolynomial::is_zero)
    }

    /// Permutes rows and columns simultaneously: new (i,j) = old (perm[i], perm[j]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.entries[i * d + j] = self.entries[perm[i] * d + perm[j]].clone();
            }
        }
        out
    }

    /// Integer entries, if every entry is constant.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.entries.iter().all(SparsePolynomial::is_constant) {
            return None;
        }
        Some(self.rows().iter().map(|r| r.iter().map(SparsePolynomial::constant_term).collect()).collect())
    }

    /// det(var·Id − M).
    pub fn char_poly(&self, var: &str) -> Result<SparsePolynomial> {
        if self.ring.index(var).is_some() {
            return Err(Error::Domain(format!("variable {var} already used by the matrix")));
        }
        let mut vars = vec![var.to_string()];
        vars.extend(self.ring.vars().iter().cloned());
        let out_ring = PolyRing::new(&vars);
        let coeffs: Vec<SparsePolynomial> = if let Some(int_rows) = self.to_int_rows() {
            int_char_poly(&int_rows)?.coeffs().iter().map(|c| self.ring.constant(c.clone())).collect()
        } else {
            let rows: SparseRows<SparsePolynomial> = self
                .rows()
                .into_iter()
                .map(|r| r.into_iter().enumerate().filter(|(_, a)| !a.is_zero()).collect())
                .collect();
            block_char_poly(&rows, &self.ring.zero(), SYMBOLIC_BLOCK_LIMIT)?
        };
        let x = out_ring.var(var);
        let mut acc = out_ring.zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &x) + &c.embed(&out_ring)?;
        }
        Ok(acc)
    }

    /// Char poly of an integer matrix as a dense polynomial.
    pub fn int_char_poly(&self) -> Result<IntPoly> {
        let rows = self.to_int_rows().ok_or_else(|| Error::Domain("matrix has symbolic entries".into()))?;
        int_char_poly(&rows)
    }
}

impl fmt::Display for PolynomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let m = PolynomialMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.char_poly("t").unwrap().to_string(), "t^2 - 1");
        let id = PolynomialMatrix::identity(&PolyRing::new::<&str>(&[]), 3);
        let r = PolyRing::new(&["t"]);
        assert_eq!(id.char_poly("t").unwrap(), r.parse("(t-1)^3").unwrap());
        let empty = PolynomialMatrix::zero(&r, 0);
        assert_eq!(empty.char_poly("x").unwrap().to_string(), "1");
    }

    #[test]
    fn symbolic_two_by_two() {
        let r = PolyRing::new(&["a", "b"]);
        let m = PolynomialMatrix::parse_rows(&r, &[vec!["a", "b"], vec!["1", "a"]]).unwrap();
        let f = m.char_poly("x").unwrap();
        assert_eq!(f, PolyRing::new(&["x", "a", "b"]).parse("x^2 - 2*a*x + a^2 - b").unwrap());
        assert!(m.char_poly("a").is_err());
    }

    #[test]
    fn components_split_triangular() {
        let m = PolynomialMatrix::from_int_rows(&[vec![1, 5, 7], vec![0, 2, 3], vec![0, 0, 3]]).unwrap();
        assert_eq!(m.int_char_poly().unwrap(), IntPoly::from_i64(&[-6, 11, -6, 1]));
    }

    #[test]
    fn bareiss_known() {
        let a = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]];
        let a: Vec<Vec<BigInt>> = a.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(det_bareiss(a), BigInt::from(6));
    }

    fn matrix_strategy() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, i64, i64)> {
        (1usize..=8).prop_flat_map(|d| {
            (
                Just(d),
                prop::collection::vec(-3i64..=3, d * d),
                prop::collection::vec(-2i64..=2, d * d),
                -4i64..=4,
                -5i64..=5,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn modular_matches_faddeev_leverrier(d in 13usize..=30, seed in prop::collection::vec(-40i64..=40, 900), sparsity in 0usize..4) {
            let rows: SparseRows<BigInt> = (0..d)
                .map(|i| (0..d).filter(|j| (i + 2 * j) % 4 >= sparsity || i == *j).map(|j| (j, BigInt::from(seed[i * 30 + j]).pow(3))).collect())
                .collect();
            prop_assert_eq!(modular_char_poly(&rows), faddeev_leverrier(&rows, &BigInt::zero()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn char_poly_matches_determinant((d, a, b, y, x) in matrix_strategy()) {
            let r = PolyRing::new(&["y"]);
            let yv = r.var("y");
            let rows: Vec<Vec<SparsePolynomial>> = (0..d)
                .map(|i| (0..d).map(|j| &r.constant(a[i * d + j]) + &yv.scale(&BigInt::from(b[i * d + j]))).collect())
                .collect();
            let m = PolynomialMatrix::from_rows(rows).unwrap();
            let f = m.char_poly("x").unwrap().embed(&PolyRing::new(&["x", "y"])).unwrap();
            let lhs = f.eval(&[BigInt::from(x), BigInt::from(y)]);
            let pt: Vec<Vec<BigInt>> = (0..d)
                .map(|i| (0..d).map(|j| {
                    let e = BigInt::from(a[i * d + j] + b[i * d + j] * y);
                    if i == j { BigInt::from(x) - e } else { -e }
                }).collect())
                .collect();
            prop_assert_eq!(lhs, det_bareiss(pt));
        }
    }
}
