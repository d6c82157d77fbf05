use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[i32; 4]>;

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) Exps);

impl Monomial {
    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered list of variable names shared by polynomials.
#[derive(Clone, Debug)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    /// Panics on duplicate names.
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate variable {v}");
        }
        PolyRing { vars: vars.into() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> SparsePolynomial {
        SparsePolynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> SparsePolynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> SparsePolynomial {
        let c = c.into();
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(self.unit_monomial(), c);
        }
        p
    }

    /// The variable `name`; panics if absent.
    pub fn var(&self, name: &str) -> SparsePolynomial {
        let i = self.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = self.unit_monomial();
        e.0[i] = 1;
        let mut p = self.zero();
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn monomial(&self, exps: &[u32], c: impl Into<BigInt>) -> SparsePolynomial {
        assert_eq!(exps.len(), self.nvars());
        let c = c.into();
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(exps.iter().map(|&e| e as i32).collect()), c);
        }
        p
    }

    pub fn parse(&self, text: &str) -> Result<SparsePolynomial> {
        super::parse::parse_polynomial(self, text)
    }

    pub(crate) fn unit_monomial(&self) -> Monomial {
        Monomial(SmallVec::from_elem(0, self.nvars()))
    }

    /// Variables of `self` followed by the new ones of `other`.
    pub fn union(&self, other: &PolyRing) -> PolyRing {
        if self == other {
            return self.clone();
        }
        let mut vars: Vec<String> = self.vars.to_vec();
        for v in other.vars.iter() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        PolyRing { vars: vars.into() }
    }
}

/// Sparse multivariate polynomial with big-integer coefficients.
///
/// Exponents are non-negative; see [`LaurentPolynomial`] for the signed variant.
#[derive(Clone, Debug)]
pub struct SparsePolynomial {
    pub(crate) ring: PolyRing,
    pub(crate) terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending graded-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.exponents(), c))
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&self.ring.unit_monomial()).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        let m = Monomial(exps.iter().map(|&e| e as i32).collect());
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.ring.index(var).ok_or_else(|| Error::Domain(format!("unknown variable {var}")))
    }

    /// Largest exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<i32> {
        let i = self.ring.index(var)?;
        self.terms.keys().map(|m| m.0[i]).max().or(if self.is_zero() { None } else { Some(0) })
    }

    pub fn min_degree_in(&self, var: &str) -> Option<i32> {
        let i = self.ring.index(var)?;
        self.terms.keys().map(|m| m.0[i]).min()
    }

    /// Collects terms by the power of `var`; each value has `var` removed.
    pub fn coefficients_in(&self, var: &str) -> BTreeMap<i32, SparsePolynomial> {
        let mut out: BTreeMap<i32, SparsePolynomial> = BTreeMap::new();
        let Some(i) = self.ring.index(var) else {
            if !self.is_zero() {
                out.insert(0, self.clone());
            }
            return out;
        };
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.0[i], 0);
            out.entry(e).or_insert_with(|| self.ring.zero()).terms.insert(m2, c.clone());
        }
        out
    }

    pub fn coefficient_in(&self, var: &str, power: i32) -> SparsePolynomial {
        self.coefficients_in(var).remove(&power).unwrap_or_else(|| self.ring.zero())
    }

    /// Re-expresses over a ring containing every variable that occurs.
    pub fn embed(&self, target: &PolyRing) -> Result<SparsePolynomial> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        for (k, v) in self.ring.vars().iter().enumerate() {
            if target.index(v).is_none() && self.terms.keys().any(|m| m.0[k] != 0) {
                return Err(Error::Domain(format!("variable {v} missing from target ring")));
            }
        }
        Ok(self.embed_lossy(target))
    }

    /// Drops to the variables that actually occur, keeping their relative order.
    pub fn trim_vars(&self) -> SparsePolynomial {
        let used: Vec<&String> = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] != 0))
            .map(|(_, v)| v)
            .collect();
        let ring = PolyRing::new(&used);
        self.embed_lossy(&ring)
    }

    /// Projects onto `target`, dropping exponents of variables it lacks.
    fn embed_lossy(&self, target: &PolyRing) -> SparsePolynomial {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.index(v)).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e = target.unit_monomial();
            for (k, j) in map.iter().enumerate() {
                if let Some(j) = j {
                    e.0[*j] = m.0[k];
                }
            }
            add_term(&mut out.terms, e, c.clone());
        }
        out
    }

    /// Renames variables; `renames` maps old names to new ones.
    pub fn rename(&self, renames: &[(&str, &str)]) -> SparsePolynomial {
        let vars: Vec<String> = self
            .ring
            .vars()
            .iter()
            .map(|v| renames.iter().find(|(a, _)| a == v).map(|(_, b)| b.to_string()).unwrap_or_else(|| v.clone()))
            .collect();
        SparsePolynomial { ring: PolyRing::new(&vars), terms: self.terms.clone() }
    }

    fn aligned<'a>(&'a self, other: &'a SparsePolynomial) -> (Cow<'a, SparsePolynomial>, Cow<'a, SparsePolynomial>) {
        if self.ring == other.ring {
            (Cow::Borrowed(self), Cow::Borrowed(other))
        } else {
            let ring = self.ring.union(&other.ring);
            (
                Cow::Owned(self.embed(&ring).expect("union ring")),
                Cow::Owned(other.embed(&ring).expect("union ring")),
            )
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePolynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        SparsePolynomial { ring: self.ring.clone(), terms }
    }

    /// Divides every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<SparsePolynomial> {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(SparsePolynomial { ring: self.ring.clone(), terms })
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn pow(&self, e: u32) -> SparsePolynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> SparsePolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(k, x)| {
                let e: Exps = k.0.iter().zip(m.0.iter()).map(|(a, b)| a + b).collect();
                (Monomial(e), x * c)
            })
            .collect();
        SparsePolynomial { ring: self.ring.clone(), terms }
    }

    pub fn derivative(&self, var: &str) -> Result<SparsePolynomial> {
        let i = self.var_index(var)?;
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                add_term(&mut out.terms, m2, c * e);
            }
        }
        Ok(out)
    }

    /// Evaluates with every variable bound to an integer.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.ring.nvars());
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes polynomials for the named variables.
    pub fn substitute(&self, bindings: &[(&str, &SparsePolynomial)]) -> SparsePolynomial {
        let mut ring = self.ring.clone();
        for (_, p) in bindings {
            ring = ring.union(&p.ring);
        }
        let me = self.embed(&ring).expect("union ring");
        let idx: Vec<(usize, SparsePolynomial)> = bindings
            .iter()
            .filter_map(|(v, p)| ring.index(v).filter(|_| self.ring.index(v).is_some()).map(|i| (i, p.embed(&ring).expect("union ring"))))
            .collect();
        let mut powers: Vec<Vec<SparsePolynomial>> = idx.iter().map(|(_, p)| vec![ring.one(), p.clone()]).collect();
        let mut out = ring.zero();
        for (m, c) in &me.terms {
            let mut rest = m.clone();
            let mut factor = ring.one();
            for (k, (i, p)) in idx.iter().enumerate() {
                let e = std::mem::replace(&mut rest.0[*i], 0) as usize;
                while powers[k].len() <= e {
                    let next = &powers[k][powers[k].len() - 1] * p;
                    powers[k].push(next);
                }
                if e > 0 {
                    factor = &factor * &powers[k][e];
                }
            }
            out += &factor.mul_term(&rest, c);
        }
        out
    }

    /// Binds variables to integers, keeping the others.
    pub fn specialize(&self, values: &[(&str, BigInt)]) -> SparsePolynomial {
        let idx: Vec<(usize, &BigInt)> =
            values.iter().filter_map(|(v, x)| self.ring.index(v).map(|i| (i, x))).collect();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut t = c.clone();
            for (i, x) in &idx {
                let e = std::mem::replace(&mut m2.0[*i], 0);
                if e > 0 {
                    t *= num_traits::pow((*x).clone(), e as usize);
                }
            }
            add_term(&mut out.terms, m2, t);
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self` in ℤ[vars].
    pub fn div_exact(&self, divisor: &SparsePolynomial) -> Option<SparsePolynomial> {
        let (a, b) = self.aligned(divisor);
        let (lm, lc) = b.leading()?;
        let mut rem = a.into_owned();
        let mut quo = rem.ring.zero();
        while let Some((rm, rc)) = rem.leading() {
            let e: Option<Exps> = rm.0.iter().zip(lm.0.iter()).map(|(x, y)| (x >= y).then_some(x - y)).collect();
            let e = e?;
            let (qc, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm = Monomial(e);
            rem -= &b.mul_term(&qm, &qc);
            add_term(&mut quo.terms, qm, qc);
        }
        Some(quo)
    }

    /// Canonical text form: descending graded-lex terms, `coeff*var^e` factors.
    pub fn to_canonical_string(&self) -> String {
        format_terms(self.ring.vars(), self.terms.iter().rev())
    }
}

pub(crate) fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn format_terms<'a>(vars: &[String], terms: impl Iterator<Item = (&'a Monomial, &'a BigInt)>) -> String {
    let mut s = String::new();
    for (m, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if m.is_constant() || !abs.is_one() {
            factors.push(abs.to_string());
        }
        for (v, &e) in vars.iter().zip(m.0.iter()) {
            match e {
                0 => {}
                1 => factors.push(v.clone()),
                _ if e < 0 => factors.push(format!("{v}^({e})")),
                _ => factors.push(format!("{v}^{e}")),
            }
        }
        s.push_str(&factors.join("*"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl PartialEq for SparsePolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring == other.ring {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for SparsePolynomial {}

impl<'a> AddAssign<&'a SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &'a SparsePolynomial) {
        if self.ring != rhs.ring {
            *self = &*self + rhs;
            return;
        }
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a SparsePolynomial> for SparsePolynomial {
    fn sub_assign(&mut self, rhs: &'a SparsePolynomial) {
        if self.ring != rhs.ring {
            *self = &*self - rhs;
            return;
        }
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, m.clone(), -c);
        }
    }
}

impl<'a> Add<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let (a, b) = self.aligned(rhs);
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let (a, b) = self.aligned(rhs);
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            add_term(&mut out.terms, m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let (a, b) = self.aligned(rhs);
        let mut out = a.ring.zero();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                let e: Exps = m1.0.iter().zip(m2.0.iter()).map(|(x, y)| x + y).collect();
                add_term(&mut out.terms, Monomial(e), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        SparsePolynomial { ring: self.ring.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $f(self, rhs: &'a $t) -> $t { (&self).$f(rhs) }
        }
    )*};
}

forward_owned!(SparsePolynomial, Add add, Sub sub, Mul mul);

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

/// Polynomial whose exponents may be negative (finitely many terms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial(pub(crate) SparsePolynomial);

impl LaurentPolynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        LaurentPolynomial(ring.zero())
    }

    pub fn monomial(ring: &PolyRing, exps: &[i32], c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), ring.nvars());
        let mut p = ring.zero();
        add_term(&mut p.terms, Monomial(exps.iter().copied().collect()), c.into());
        LaurentPolynomial(p)
    }

    pub fn from_polynomial(p: &SparsePolynomial) -> Self {
        LaurentPolynomial(p.clone())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.0.ring
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.0.terms()
    }

    /// `None` if some exponent is negative.
    pub fn to_polynomial(&self) -> Option<SparsePolynomial> {
        self.0.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0)).then(|| self.0.clone())
    }

    pub fn min_degree_in(&self, var: &str) -> Option<i32> {
        self.0.min_degree_in(var)
    }

    pub fn max_degree_in(&self, var: &str) -> Option<i32> {
        let i = self.0.ring.index(var)?;
        self.0.terms.keys().map(|m| m.0[i]).max()
    }

    /// The coefficient of `var^power`, as a Laurent polynomial without `var`.
    pub fn coefficient_in(&self, var: &str, power: i32) -> LaurentPolynomial {
        LaurentPolynomial(self.0.coefficient_in(var, power))
    }

    pub fn pow(&self, e: u32) -> LaurentPolynomial {
        LaurentPolynomial(self.0.pow(e))
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPolynomial {
        LaurentPolynomial(self.0.scale(c))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial(&self.0 * &rhs.0)
    }
}

forward_owned!(LaurentPolynomial, Add add, Sub sub, Mul mul);
