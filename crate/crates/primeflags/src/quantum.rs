//! Quantum multiplication by c₁ on partial flag varieties, built from the
//! dynamical operators acting on a weight space of (ℂᴺ)^{⊗n}.
//!
//! Conventions: positions and blocks are 1-based; a matrix acts on columns,
//! so `M[r][c]` is the coefficient of basis vector `r` in the image of `c`.
//! Quantum parameters are normalized by `p = (1, q₁, q₁q₂, …)`, so every ratio
//! `p_j/p_i` with `i < j` becomes the monomial `q_i ⋯ q_{j−1}`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::multinomial;
use crate::compositions::{pair_is_exceeding, Composition};
use crate::error::{Error, Result};
use crate::polyring::{int_char_poly, IntPoly, PolyRing, PolynomialMatrix, SparsePolynomial};

/// Largest `n` accepted by [`weight_basis`].
pub const MAX_BASIS_N: usize = 9;
/// Largest weight-space dimension accepted by [`weight_basis`].
pub const MAX_BASIS_DIM: usize = 10_000;
/// Largest dimension for [`simplicity_at_one`].
pub const MAX_SIMPLICITY_DIM: usize = 1_000;
/// Largest fiber dimension for the spectral route of [`classify_semiclassical`].
pub const MAX_FIBER_DIM: usize = 70;

/// Name of the spectral variable in characteristic polynomials.
pub const ZETA: &str = "zeta";

/// Ordered partition `(I₁,…,I_N)` of `{1..n}`, equivalently a word `i₁…i_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    word: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// `word[a-1]` is the block holding position `a`; blocks are numbered `1..=nblocks`.
    pub fn from_word(word: Vec<usize>, nblocks: usize) -> Result<Self> {
        let mut blocks = vec![Vec::new(); nblocks];
        for (a, &b) in word.iter().enumerate() {
            if b == 0 || b > nblocks {
                return Err(Error::Domain(format!("block index {b} outside 1..={nblocks}")));
            }
            blocks[b - 1].push(a + 1);
        }
        Ok(OrderedSetPartition { word, blocks })
    }

    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut word = vec![0; n];
        for (k, b) in blocks.iter().enumerate() {
            for &a in b {
                if a == 0 || a > n || word[a - 1] != 0 {
                    return Err(Error::Domain(format!("blocks do not partition 1..={n}")));
                }
                word[a - 1] = k + 1;
            }
        }
        Self::from_word(word, blocks.len())
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Block containing position `a`.
    pub fn block_of(&self, a: usize) -> usize {
        self.word[a - 1]
    }

    /// The partition with positions `a` and `b` exchanged between their blocks.
    pub fn swapped(&self, a: usize, b: usize) -> OrderedSetPartition {
        let mut w = self.word.clone();
        w.swap(a - 1, b - 1);
        OrderedSetPartition::from_word(w, self.blocks.len()).expect("same block range")
    }

    /// Block sizes.
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

fn multiset_words(counts: &mut [usize], prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for k in 0..counts.len() {
        if counts[k] > 0 {
            counts[k] -= 1;
            prefix.push(k + 1);
            multiset_words(counts, prefix, n, out);
            prefix.pop();
            counts[k] += 1;
        }
    }
}

fn dimension(lambda: &Composition) -> BigInt {
    BigInt::from(multinomial(lambda.parts()))
}

/// All ordered partitions of shape λ, sorted lexicographically by their
/// sorted blocks `(I₁, I₂, …)`.
pub fn weight_basis(lambda: &Composition) -> Result<Vec<OrderedSetPartition>> {
    let n = lambda.n();
    if n > MAX_BASIS_N {
        return Err(Error::SizeGuard(format!("n = {n} exceeds {MAX_BASIS_N}")));
    }
    let dim = dimension(lambda);
    if dim > BigInt::from(MAX_BASIS_DIM) {
        return Err(Error::SizeGuard(format!("weight space of dimension {dim} exceeds {MAX_BASIS_DIM}")));
    }
    let mut counts = lambda.parts().to_vec();
    let mut words = Vec::new();
    multiset_words(&mut counts, &mut Vec::with_capacity(n), n, &mut words);
    let mut basis: Vec<OrderedSetPartition> =
        words.into_iter().map(|w| OrderedSetPartition::from_word(w, lambda.len()).expect("valid word")).collect();
    basis.sort_by(|x, y| x.blocks.cmp(&y.blocks));
    Ok(basis)
}

/// Whether `(a, b)` is I-admissible.
pub fn admissible(part: &OrderedSetPartition, a: usize, b: usize) -> bool {
    let n = part.n();
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return false;
    }
    let (i, j) = (part.block_of(a), part.block_of(b));
    if i == j {
        return false;
    }
    let (blo, bhi) = (i.min(j), i.max(j));
    let hit = |x: usize| (blo..=bhi).contains(&part.block_of(x));
    let (lo, hi) = (a.min(b), a.max(b));
    let disordered = (a < b) == (i > j);
    if disordered {
        !(lo + 1..hi).any(hit)
    } else {
        !(1..lo).chain(hi + 1..=n).any(hit)
    }
}

/// One off-diagonal contribution `sign · q^exps` at `(row, col)`.
#[derive(Clone, Debug)]
struct Term {
    row: usize,
    col: usize,
    sign: i64,
    q: Vec<u32>,
}

struct Basis {
    parts: Vec<OrderedSetPartition>,
    index: HashMap<Vec<usize>, usize>,
    nblocks: usize,
}

impl Basis {
    fn new(lambda: &Composition) -> Result<Self> {
        let parts = weight_basis(lambda)?;
        let index = parts.iter().enumerate().map(|(k, p)| (p.word.clone(), k)).collect();
        Ok(Basis { parts, index, nblocks: lambda.len() })
    }

    fn dim(&self) -> usize {
        self.parts.len()
    }

    /// Off-diagonal terms of X_i.
    fn terms(&self, i: usize) -> Vec<Term> {
        let nq = self.nblocks - 1;
        let qprod = |lo: usize, hi: usize| {
            let mut e = vec![0u32; nq];
            for slot in e.iter_mut().take(hi - 1).skip(lo - 1) {
                *slot = 1;
            }
            e
        };
        let mut out = Vec::new();
        for (col, part) in self.parts.iter().enumerate() {
            for &a in &part.blocks[i - 1] {
                for b in 1..=part.n() {
                    let j = part.block_of(b);
                    if j == i || !admissible(part, a, b) {
                        continue;
                    }
                    let row = self.index[&part.swapped(a, b).word];
                    let (sign, q) = match (b < a, j > i) {
                        (true, true) => (1, vec![0; nq]),
                        (true, false) => (-1, qprod(j, i)),
                        (false, true) => (1, qprod(i, j)),
                        (false, false) => (-1, vec![0; nq]),
                    };
                    out.push(Term { row, col, sign, q });
                }
            }
        }
        out
    }
}

fn q_names(nblocks: usize) -> Vec<String> {
    (1..nblocks).map(|k| format!("q{k}")).collect()
}

/// Coefficients `c_i = Σ_{j<i} λ_j − Σ_{j>i} λ_j` of c₁ in the classes c₁(Q_i).
pub fn c1_coefficients(lambda: &Composition) -> Vec<i64> {
    let p = lambda.parts();
    (0..p.len())
        .map(|i| p[..i].iter().sum::<usize>() as i64 - p[i + 1..].iter().sum::<usize>() as i64)
        .collect()
}

/// Matrix of X_i on the λ-weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalOperator {
    pub i: usize,
    pub matrix: PolynomialMatrix,
}

/// X_i(z; p) over `z1..zn, q1..q_{N−1}`.
pub fn dynamical_matrix(lambda: &Composition, i: usize) -> Result<DynamicalOperator> {
    if i == 0 || i > lambda.len() {
        return Err(Error::Domain(format!("operator index {i} outside 1..={}", lambda.len())));
    }
    let basis = Basis::new(lambda)?;
    let n = lambda.n();
    let mut vars: Vec<String> = (1..=n).map(|a| format!("z{a}")).collect();
    vars.extend(q_names(lambda.len()));
    let ring = PolyRing::new(&vars);
    let mut m = PolynomialMatrix::zero(&ring, basis.dim());
    for (c, part) in basis.parts.iter().enumerate() {
        let mut diag = ring.zero();
        for &a in &part.blocks[i - 1] {
            diag += &ring.var(&format!("z{a}"));
        }
        m.set(c, c, diag);
    }
    for t in basis.terms(i) {
        let mut exps = vec![0u32; n];
        exps.extend(&t.q);
        let e = m.get(t.row, t.col) + &ring.monomial(&exps, t.sign);
        m.set(t.row, t.col, e);
    }
    Ok(DynamicalOperator { i, matrix: m })
}

/// Quantum multiplication by c₁ on cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumOperator {
    pub lambda: Composition,
    pub matrix: PolynomialMatrix,
}

impl QuantumOperator {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Accumulated entries `coefficient · q^exps` of Σ c_i X_i(0; p(q)).
fn c1_terms(lambda: &Composition) -> Result<(usize, HashMap<(usize, usize), HashMap<Vec<u32>, i64>>)> {
    let basis = Basis::new(lambda)?;
    let c = c1_coefficients(lambda);
    let mut acc: HashMap<(usize, usize), HashMap<Vec<u32>, i64>> = HashMap::new();
    for i in 1..=lambda.len() {
        if c[i - 1] == 0 {
            continue;
        }
        for t in basis.terms(i) {
            *acc.entry((t.row, t.col)).or_default().entry(t.q).or_insert(0) += c[i - 1] * t.sign;
        }
    }
    Ok((basis.dim(), acc))
}

/// The operator with entries over `q1..q_{N−1}`.
pub fn quantum_c1_operator(lambda: &Composition) -> Result<QuantumOperator> {
    let (dim, acc) = c1_terms(lambda)?;
    let ring = PolyRing::new(&q_names(lambda.len()));
    let mut m = PolynomialMatrix::zero(&ring, dim);
    for ((r, c), mons) in acc {
        let mut e = ring.zero();
        for (q, k) in mons {
            e += &ring.monomial(&q, k);
        }
        m.set(r, c, e);
    }
    Ok(QuantumOperator { lambda: lambda.clone(), matrix: m })
}

/// The operator with every `q_k` bound to `q[k-1]`.
pub fn quantum_c1_numeric(lambda: &Composition, q: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    if q.len() + 1 != lambda.len() {
        return Err(Error::Shape(format!("expected {} quantum parameters, got {}", lambda.len() - 1, q.len())));
    }
    let (dim, acc) = c1_terms(lambda)?;
    let mut m = vec![vec![BigInt::zero(); dim]; dim];
    for ((r, c), mons) in acc {
        for (exps, k) in mons {
            let mut v = BigInt::from(k);
            for (x, &e) in q.iter().zip(&exps) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            m[r][c] += v;
        }
    }
    Ok(m)
}

/// Characteristic polynomial in `zeta` over `q1..q_{N−1}`.
pub fn quantum_char_poly(lambda: &Composition) -> Result<SparsePolynomial> {
    quantum_c1_operator(lambda)?.matrix.char_poly(ZETA)
}

/// Characteristic polynomial at integer quantum parameters.
pub fn quantum_char_poly_at(lambda: &Composition, q: &[BigInt]) -> Result<IntPoly> {
    int_char_poly(&quantum_c1_numeric(lambda, q)?)
}

fn check_pair_index(lambda: &Composition, i: usize) -> Result<()> {
    if i == 0 || i >= lambda.len() {
        return Err(Error::Domain(format!("semiclassical index {i} outside 1..{}", lambda.len())));
    }
    Ok(())
}

/// Limit `q_j → 0` (j ≠ i) of the characteristic polynomial, over `zeta, q_i`.
pub fn semiclassical_char_poly(lambda: &Composition, i: usize) -> Result<SparsePolynomial> {
    check_pair_index(lambda, i)?;
    let (dim, acc) = c1_terms(lambda)?;
    let name = format!("q{i}");
    let ring = PolyRing::new(&[name.as_str()]);
    let mut m = PolynomialMatrix::zero(&ring, dim);
    for ((r, c), mons) in acc {
        let mut e = ring.zero();
        for (q, k) in mons {
            if q.iter().enumerate().all(|(j, &x)| j + 1 == i || x == 0) {
                e += &ring.monomial(&[q[i - 1]], k);
            }
        }
        if !e.is_zero() {
            m.set(r, c, e);
        }
    }
    let f = m.char_poly(ZETA)?;
    f.embed(&PolyRing::new(&[ZETA, name.as_str()]))
}

/// `λ` with parts `i` and `i+1` merged.
fn merged(lambda: &Composition, i: usize) -> Composition {
    let p = lambda.parts();
    let mut v = p[..i - 1].to_vec();
    v.push(p[i - 1] + p[i]);
    v.extend_from_slice(&p[i + 1..]);
    Composition::new(v).expect("positive parts")
}

/// Characteristic polynomial of the fiber Grassmannian `G(λ_i, λ_i+λ_{i+1})`
/// in `zeta, q_i`, together with the exponent `D`.
pub fn fiber_char_poly(lambda: &Composition, i: usize) -> Result<(SparsePolynomial, u32)> {
    check_pair_index(lambda, i)?;
    let p = lambda.parts();
    let fiber = Composition::new(vec![p[i - 1], p[i]])?;
    let name = format!("q{i}");
    let f = quantum_char_poly(&fiber)?.rename(&[("q1", name.as_str())]);
    let d = multinomial(merged(lambda, i).parts())
        .to_u32()
        .ok_or_else(|| Error::SizeGuard("base dimension too large".into()))?;
    Ok((f.embed(&PolyRing::new(&[ZETA, name.as_str()]))?, d))
}

/// Whether the i-th semiclassical polynomial is the D-th power of the fiber polynomial.
pub fn fiber_power_check(lambda: &Composition, i: usize) -> Result<bool> {
    let (f, d) = fiber_char_poly(lambda, i)?;
    Ok(semiclassical_char_poly(lambda, i)? == f.pow(d))
}

/// Exceeding or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumType {
    Exceeding,
    NonExceeding,
}

impl fmt::Display for SpectrumType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumType::Exceeding => "exceeding",
            SpectrumType::NonExceeding => "non-exceeding",
        })
    }
}

/// Outcome of both classification routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// From the prime inequality on `(λ_i, λ_{i+1})`.
    pub arithmetic: SpectrumType,
    /// From square-freeness of the fiber polynomial; `None` above [`MAX_FIBER_DIM`].
    pub spectral: Option<SpectrumType>,
}

impl Classification {
    /// True when the spectral route was skipped or agrees.
    pub fn consistent(&self) -> bool {
        self.spectral.is_none_or(|s| s == self.arithmetic)
    }
}

fn fiber_squarefree_at(a: usize, b: usize, q: i64) -> Result<bool> {
    let fiber = Composition::new(vec![a, b])?;
    Ok(quantum_char_poly_at(&fiber, &[BigInt::from(q)])?.is_squarefree())
}

/// Classifies the i-th semiclassical spectrum by both routes.
pub fn classify_semiclassical(lambda: &Composition, i: usize) -> Result<Classification> {
    check_pair_index(lambda, i)?;
    let (a, b) = (lambda.parts()[i - 1], lambda.parts()[i]);
    let kind = |exceeding: bool| if exceeding { SpectrumType::Exceeding } else { SpectrumType::NonExceeding };
    let arithmetic = kind(pair_is_exceeding(a, b));
    let spectral = if multinomial(&[a, b]) <= MAX_FIBER_DIM.into() {
        let (s1, s2) = (fiber_squarefree_at(a, b, 1)?, fiber_squarefree_at(a, b, 2)?);
        let sq = if s1 == s2 {
            s1
        } else if fiber_squarefree_at(a, b, 3)? == s2 {
            s2
        } else {
            return Err(Error::Inconclusive(format!("square-freeness of the ({a},{b}) fiber varies with q")));
        };
        Some(kind(!sq))
    } else {
        None
    };
    Ok(Classification { arithmetic, spectral })
}

/// Whether the spectrum at `q = (1,…,1)` is simple.
pub fn simplicity_at_one(lambda: &Composition) -> Result<bool> {
    let dim = dimension(lambda);
    if dim > BigInt::from(MAX_SIMPLICITY_DIM) {
        return Err(Error::SizeGuard(format!("dimension {dim} exceeds {MAX_SIMPLICITY_DIM}")));
    }
    let ones = vec![BigInt::one(); lambda.len() - 1];
    Ok(quantum_char_poly_at(lambda, &ones)?.is_squarefree())
}

/// The n×n matrix whose shifted characteristic polynomial gives the
/// relations of the quantum cohomology ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionMatrixA {
    pub lambda: Composition,
    pub matrix: PolynomialMatrix,
}

/// Name used for the Chern-root symmetric function γ_{i,j}.
pub fn gamma_name(i: usize, j: usize) -> String {
    format!("g{i}_{j}")
}

/// Builds A over `g{i}_{j}` and `q1..q_{N−1}`.
pub fn companion_matrix_a(lambda: &Composition) -> CompanionMatrixA {
    let p = lambda.parts();
    let nb = p.len();
    let mut vars = Vec::new();
    for (i, &l) in p.iter().enumerate() {
        vars.extend((1..=l).map(|j| gamma_name(i + 1, j)));
    }
    vars.extend(q_names(nb));
    let ring = PolyRing::new(&vars);
    let n = lambda.n();
    let mut m = PolynomialMatrix::zero(&ring, n);
    for r in 1..n {
        m.set(r, r - 1, ring.constant(-1));
    }
    let mut s = 0;
    for i in 0..nb {
        for j in 1..=p[i] {
            m.set(s, s + j - 1, ring.var(&gamma_name(i + 1, j)));
        }
        if i + 1 < nb {
            let sign = if p[i + 1] % 2 == 0 { -1 } else { 1 };
            m.set(s, s + p[i] + p[i + 1] - 1, ring.var(&format!("q{}", i + 1)).scale(&BigInt::from(sign)));
        }
        s += p[i];
    }
    CompanionMatrixA { lambda: lambda.clone(), matrix: m }
}

/// A permutation `perm` with `b[r][c] = a[perm[r]][perm[c]]`, if one exists.
pub fn find_basis_permutation(a: &PolynomialMatrix, b: &PolynomialMatrix) -> Option<Vec<usize>> {
    let d = a.dim();
    if b.dim() != d {
        return None;
    }
    let ring = a.ring().union(b.ring());
    let a = a.map(|e| e.embed(&ring).expect("union ring"));
    let b = b.map(|e| e.embed(&ring).expect("union ring"));
    let signature = |m: &PolynomialMatrix, k: usize| {
        let mut row: Vec<String> = (0..d).map(|j| m.get(k, j).to_string()).collect();
        let mut col: Vec<String> = (0..d).map(|j| m.get(j, k).to_string()).collect();
        row.sort();
        col.sort();
        (m.get(k, k).to_string(), row, col)
    };
    let sa: Vec<_> = (0..d).map(|k| signature(&a, k)).collect();
    let sb: Vec<_> = (0..d).map(|k| signature(&b, k)).collect();
    let candidates: Vec<Vec<usize>> = (0..d).map(|r| (0..d).filter(|&x| sa[x] == sb[r]).collect()).collect();
    let mut perm = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn search(
        a: &PolynomialMatrix,
        b: &PolynomialMatrix,
        cand: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let r = perm.len();
        if r == cand.len() {
            return true;
        }
        for &x in &cand[r] {
            if used[x] {
                continue;
            }
            let ok = (0..r).all(|s| b.get(r, s) == a.get(x, perm[s]) && b.get(s, r) == a.get(perm[s], x));
            if ok {
                perm.push(x);
                used[x] = true;
                if search(a, b, cand, perm, used) {
                    return true;
                }
                perm.pop();
                used[x] = false;
            }
        }
        false
    }
    search(&a, &b, &candidates, &mut perm, &mut used).then_some(perm)
}
