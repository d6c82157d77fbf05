//! Walk graphs on {1..m}, their transfer matrices and walk generating functions.
//!
//! Vertex `j` carries weight `z^j`. In `Gamma` there is an arrow (i, j) iff the
//! pair is non-exceeding; in `Pi` iff i + j is prime.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::is_prime;
use crate::compositions::pair_is_exceeding;
use crate::error::{Error, Result};
use crate::polyring::{IntPoly, PolyRing, PolynomialMatrix, RationalFunction, SparsePolynomial};

/// Largest m accepted by [`bivariate_genfun`].
pub const MAX_GENFUN_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Gamma,
    Pi,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Gamma => "gamma",
            GraphKind::Pi => "pi",
        }
    }

    pub fn has_edge(self, i: usize, j: usize) -> bool {
        match self {
            GraphKind::Gamma => !pair_is_exceeding(i, j),
            GraphKind::Pi => is_prime((i + j) as u64),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" => Ok(GraphKind::Gamma),
            "pi" => Ok(GraphKind::Pi),
            _ => Err(Error::Parse(format!("unknown graph kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedWalkGraph {
    pub m: usize,
    pub kind: GraphKind,
    adjacency: Vec<Vec<bool>>,
}

pub fn build_graph(kind: GraphKind, m: usize) -> Result<WeightedWalkGraph> {
    if m == 0 {
        return Err(Error::Domain("a walk graph needs m >= 1".into()));
    }
    let adjacency = (1..=m).map(|i| (1..=m).map(|j| kind.has_edge(i, j)).collect()).collect();
    Ok(WeightedWalkGraph { m, kind, adjacency })
}

impl WeightedWalkGraph {
    /// Arrow between 1-based vertices `i` and `j`.
    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i - 1][j - 1]
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        self.adjacency.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect()
    }

    /// Matrix with entry (i, j) equal to z^j on arrows, over the ring `[z]`.
    pub fn transfer_matrix(&self) -> PolynomialMatrix {
        let ring = PolyRing::new(&["z"]);
        let rows = (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| if self.adjacency[i][j] { ring.monomial(&[j as u32 + 1], 1) } else { ring.zero() })
                    .collect()
            })
            .collect();
        PolynomialMatrix::from_rows(rows).expect("square")
    }

    /// Walk polynomials for N = 1..=n_max as dense polynomials in z.
    pub fn walk_polynomials(&self, n_max: usize) -> Vec<IntPoly> {
        let mut out = Vec::with_capacity(n_max);
        if n_max == 0 {
            return out;
        }
        // w[j] = Σ over walks of the current length ending at vertex j+1.
        let mut w: Vec<IntPoly> = (1..=self.m).map(IntPoly::monomial).collect();
        loop {
            out.push(w.iter().fold(IntPoly::zero(), |acc, p| acc.add(p)));
            if out.len() == n_max {
                return out;
            }
            w = (0..self.m)
                .map(|j| {
                    let s = (0..self.m).filter(|&i| self.adjacency[i][j]).fold(IntPoly::zero(), |acc, i| acc.add(&w[i]));
                    s.shift(j + 1)
                })
                .collect();
        }
    }

    /// Σ over walks with N vertices of z^(sum of the vertices).
    pub fn walk_polynomial(&self, parts: usize) -> Result<SparsePolynomial> {
        if parts == 0 {
            return Err(Error::Domain("walks need N >= 1".into()));
        }
        Ok(self.walk_polynomials(parts).pop().expect("nonempty").to_sparse("z"))
    }

    /// Cayley–Hamilton closed form of Σ_N L_N(z) t^N, over the ring `[z, t]`.
    pub fn bivariate_genfun(&self) -> Result<RationalFunction> {
        if self.m > MAX_GENFUN_VERTICES {
            return Err(Error::SizeGuard(format!("m = {} exceeds {MAX_GENFUN_VERTICES}", self.m)));
        }
        let m = self.m;
        let ring = PolyRing::new(&["z", "t"]);
        let cp = self.transfer_matrix().char_poly("zeta")?;
        let a: Vec<SparsePolynomial> =
            (0..m).map(|i| cp.coefficient_in("zeta", i as i32).embed(&ring).expect("z only")).collect();
        let walks: Vec<SparsePolynomial> =
            self.walk_polynomials(m).iter().map(|p| p.to_sparse("z").embed(&ring).expect("z only")).collect();
        let t = |e: usize| ring.monomial(&[0, e as u32], 1);
        let mut num = ring.zero();
        for (i, l) in walks.iter().enumerate() {
            num += &(l * &t(i + 1));
        }
        for (i, ai) in a.iter().enumerate() {
            for (j, l) in walks.iter().enumerate().take(i) {
                num += &(&(ai * l) * &t(m - i + j + 1));
            }
        }
        let mut den = ring.one();
        for (i, ai) in a.iter().enumerate() {
            den += &(ai * &t(m - i));
        }
        RationalFunction::new(num, den)
    }
}

pub fn walk_polynomial(g: &WeightedWalkGraph, parts: usize) -> Result<SparsePolynomial> {
    g.walk_polynomial(parts)
}

pub fn bivariate_genfun(g: &WeightedWalkGraph) -> Result<RationalFunction> {
    g.bivariate_genfun()
}

/// tlcyr (Gamma) or ell (Pi) at (n, N) as a coefficient of a walk polynomial
/// on the graph with m = n − N + 1 vertices.
pub fn count_via_transfer(kind: GraphKind, n: usize, parts: usize) -> BigUint {
    if parts == 0 || parts > n {
        return BigUint::zero();
    }
    let g = build_graph(kind, n - parts + 1).expect("m >= 1");
    let c: BigInt = g.walk_polynomials(parts).pop().expect("nonempty").coeff(n);
    c.to_biguint().expect("walk counts are non-negative")
}
