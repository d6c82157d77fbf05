//! Diagonal generating functions Σ_N a(N + k, N) t^N and their eventual
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial_i, factorial};
use crate::error::{Error, Result};
use crate::polyring::{IntPoly, LaurentPolynomial, PolyRing, RatPoly, RationalFunction, SparsePolynomial};
use crate::sequences::{lcyr, SequenceKind};
use crate::walkgraphs::{build_graph, GraphKind};

/// R(t) / (1 − t)^s with no factor (1 − t) left in R (unless R = 0, s = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSeries {
    pub k: usize,
    pub numerator: IntPoly,
    pub s: usize,
}

impl DiagonalSeries {
    pub fn new(k: usize, numerator: IntPoly, s: usize) -> Self {
        let (numerator, s) = strip_one_minus_t(numerator, s);
        DiagonalSeries { k, numerator, s }
    }

    /// As a rational function over the ring `[t]`.
    pub fn rational_form(&self) -> RationalFunction {
        let one_minus_t = IntPoly::from_i64(&[1, -1]).pow(self.s as u32);
        RationalFunction::new(self.numerator.to_sparse("t"), one_minus_t.to_sparse("t")).expect("nonzero")
    }

    /// Coefficient of t^n.
    pub fn coefficient(&self, n: usize) -> BigInt {
        if self.s == 0 {
            return self.numerator.coeff(n);
        }
        let r = self.s as i64 - 1;
        (0..=n.min(self.numerator.degree().unwrap_or(0)))
            .map(|j| self.numerator.coeff(j) * BigInt::from(binomial_i((n - j) as i64 + r, r)))
            .sum()
    }

    /// Numerator degree (0 for the zero series).
    pub fn numerator_degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0)
    }
}

impl fmt::Display for DiagonalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_sparse("t");
        match self.s {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1 - t)"),
            s => write!(f, "({num})/(1 - t)^{s}"),
        }
    }
}

fn strip_one_minus_t(mut num: IntPoly, mut s: usize) -> (IntPoly, usize) {
    if num.is_zero() {
        return (num, 0);
    }
    let one_minus_t = IntPoly::from_i64(&[1, -1]);
    while s > 0 && num.eval(&BigInt::one()).is_zero() {
        num = num.div_exact(&one_minus_t).expect("root at 1");
        s -= 1;
    }
    (num, s)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b) + i64::from(a.mod_floor(&b) != 0)
}

/// [u^k] F(u, t/u) for F = z·t·Q₁ / (1 − z·t + Q₂) with Q₂(0, 0) = 0.
pub fn extract_diagonal(f: &RationalFunction, k: usize) -> Result<DiagonalSeries> {
    let zt = PolyRing::new(&["z", "t"]);
    let shape = |m: &str| Error::Shape(m.to_string());
    let mut num = f.numerator().embed(&zt).map_err(|_| shape("expected a function of z and t"))?;
    let mut den = f.denominator().embed(&zt).map_err(|_| shape("expected a function of z and t"))?;
    let c0 = den.constant_term();
    if c0 == -BigInt::one() {
        num = -num;
        den = -den;
    } else if !c0.is_one() {
        return Err(shape("denominator must be 1 at the origin"));
    }
    if num.is_zero() {
        return Ok(DiagonalSeries::new(k, IntPoly::zero(), 0));
    }
    let q1 = num.div_exact(&zt.parse("z*t").expect("literal")).ok_or_else(|| shape("numerator is not a multiple of z*t"))?;
    let q2 = &(&den - &zt.one()) + &zt.parse("z*t").expect("literal");

    // z^a t^b ↦ u^(a−b) t^b.
    let ut = PolyRing::new(&["u", "t"]);
    let to_ut = |p: &SparsePolynomial| -> LaurentPolynomial {
        p.terms().fold(LaurentPolynomial::zero(&ut), |acc, (e, c)| {
            &acc + &LaurentPolynomial::monomial(&ut, &[e[0] - e[1], e[1]], c.clone())
        })
    };
    let a = to_ut(&q1);
    let b = to_ut(&q2);
    let k = k as i64;
    let (amin, amax) = (a.min_degree_in("u").expect("nonzero") as i64, a.max_degree_in("u").expect("nonzero") as i64);

    let (lo, hi) = if b.is_zero() {
        (0, 0)
    } else {
        let (bmin, bmax) = (b.min_degree_in("u").expect("nonzero") as i64, b.max_degree_in("u").expect("nonzero") as i64);
        let mut lo = 0i64;
        let mut hi: Option<i64> = None;
        let mut cap = |v: i64| hi = Some(hi.map_or(v, |h| h.min(v)));
        if bmin > 0 {
            cap(Integer::div_floor(&(k - amin), &bmin));
        }
        if bmax < 0 {
            cap(Integer::div_floor(&(k - amax), &bmax));
        }
        if bmax > 0 {
            lo = lo.max(ceil_div(k - amax, bmax));
        }
        if bmin < 0 {
            lo = lo.max(ceil_div(k - amin, bmin));
        }
        let hi = hi.ok_or_else(|| shape("the r-window is unbounded"))?;
        (lo, hi)
    };
    if lo > hi {
        return Ok(DiagonalSeries::new(k as usize, IntPoly::zero(), 0));
    }

    // t · Σ_r (−1)^r (1 − t)^(hi − r) [u^k](A·B^r), over (1 − t)^(hi + 1).
    let one_minus_t = IntPoly::from_i64(&[1, -1]);
    let mut total = IntPoly::zero();
    let mut ab = a.clone();
    for r in 0..=hi {
        if r > 0 {
            ab = &ab * &b;
        }
        if r < lo {
            continue;
        }
        let c = ab.coefficient_in("u", k as i32).to_polynomial().expect("t exponents are non-negative");
        let c = IntPoly::from_sparse(&c.trim_vars(), "t")?;
        let mut term = c.mul(&one_minus_t.pow((hi - r) as u32));
        if r % 2 == 1 {
            term = term.scale(&BigInt::from(-1));
        }
        total = total.add(&term);
    }
    Ok(DiagonalSeries::new(k as usize, total.shift(1), hi as usize + 1))
}

/// C(n + shift, r) as a polynomial in n.
fn binomial_poly(shift: i64, r: usize) -> RatPoly {
    let mut p = RatPoly::new(vec![BigRational::one()]);
    for i in 0..r as i64 {
        p = p.mul(&RatPoly::new(vec![BigRational::from_integer(BigInt::from(shift - i)), BigRational::one()]));
    }
    p.scale(&BigRational::new(BigInt::one(), BigInt::from(factorial(r as u64))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventualPolynomial {
    pub polynomial: RatPoly,
    /// Least n from which the polynomial matches every coefficient.
    pub threshold: i64,
    /// Bound guaranteed a priori: the numerator degree.
    pub guaranteed_from: i64,
}

/// Q(n) = Σ_j p_j C(n − j + s − 1, s − 1) together with the least n from
/// which a_n = Q(n).
pub fn eventual_polynomial(d: &DiagonalSeries) -> EventualPolynomial {
    let deg = d.numerator_degree();
    let polynomial = if d.s == 0 {
        RatPoly::default()
    } else {
        d.numerator.coeffs().iter().enumerate().fold(RatPoly::default(), |acc, (j, p)| {
            acc.add(&binomial_poly(d.s as i64 - 1 - j as i64, d.s - 1).scale(&BigRational::from_integer(p.clone())))
        })
    };
    let mut threshold = deg as i64;
    while threshold > 0 {
        let n = threshold - 1;
        if polynomial.eval_int(n) != BigRational::from_integer(d.coefficient(n as usize)) {
            break;
        }
        threshold = n;
    }
    EventualPolynomial { polynomial, threshold, guaranteed_from: deg as i64 }
}

/// P_k(n) = Σ_j lcyr(k + 2, 2 + j)·C(n − 2, j).
pub fn lcyr_diagonal_poly(k: usize) -> RatPoly {
    (0..=k).fold(RatPoly::default(), |acc, j| {
        let c = BigRational::from_integer(BigInt::from(lcyr(k + 2, 2 + j)));
        acc.add(&binomial_poly(-2, j).scale(&c))
    })
}

/// The graph behind a walk-countable sequence.
pub fn graph_kind(kind: SequenceKind) -> Option<GraphKind> {
    match kind {
        SequenceKind::Lcyr => None,
        SequenceKind::Tlcyr => Some(GraphKind::Gamma),
        SequenceKind::Ell => Some(GraphKind::Pi),
    }
}

/// Diagonal series of tlcyr or ell through the walk generating function on m vertices (m ≥ k + 1).
pub fn walk_diagonal(kind: SequenceKind, k: usize, m: usize) -> Result<DiagonalSeries> {
    let g = graph_kind(kind).ok_or_else(|| Error::Domain("lcyr has no walk graph".into()))?;
    if m < k + 1 {
        return Err(Error::Domain(format!("m = {m} must be at least k + 1 = {}", k + 1)));
    }
    extract_diagonal(&build_graph(g, m)?.bivariate_genfun()?, k)
}

/// N ↦ a(N + k, N) for N ≥ 1 as an eventual polynomial, with m = k + 1 for the graph routes.
pub fn diagonal_polynomial(kind: SequenceKind, k: usize) -> Result<EventualPolynomial> {
    match kind {
        SequenceKind::Lcyr => {
            let polynomial = lcyr_diagonal_poly(k);
            let threshold = if polynomial.eval_int(1) == BigRational::from_integer(BigInt::from(lcyr(k + 1, 1))) { 1 } else { 2 };
            Ok(EventualPolynomial { polynomial, threshold, guaranteed_from: 2 })
        }
        _ => {
            let mut e = eventual_polynomial(&walk_diagonal(kind, k, k + 1)?);
            e.threshold = e.threshold.max(1);
            Ok(e)
        }
    }
}

/// Text in the binomial basis: Σ_j c_j·C(n + shift, j).
pub fn binomial_basis_text(p: &RatPoly, shift: i64) -> String {
    // Forward differences at n = −shift give the coefficients.
    let deg = p.degree().unwrap_or(0);
    let mut vals: Vec<BigRational> = (0..=deg as i64).map(|i| p.eval_int(i - shift)).collect();
    let mut coeffs = Vec::with_capacity(deg + 1);
    for _ in 0..=deg {
        coeffs.push(vals[0].clone());
        vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let arg = match shift.cmp(&0) {
        std::cmp::Ordering::Equal => "n".to_string(),
        std::cmp::Ordering::Greater => format!("n + {shift}"),
        std::cmp::Ordering::Less => format!("n - {}", -shift),
    };
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(&format!("C({arg}, {j})"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
