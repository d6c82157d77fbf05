//! The double sequences `lcyr`, `tlcyr` and `ell`.
//!
//! * `lcyr(n, N)`: compositions of n into N parts whose first adjacent pair is
//!   non-exceeding.
//! * `tlcyr(n, N)`: compositions whose every adjacent pair is non-exceeding.
//! * `ell(n, N)`: compositions whose every adjacent sum is prime.
//!
//! All three equal 1 for N = 1 and vanish for N > n.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{divisors, factorial, is_prime, mobius, omega0, omega1, prime_factors, smallest_prime_factor};
use crate::compositions::{enumerate, pair_is_exceeding};
use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    Lcyr,
    Tlcyr,
    Ell,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 3] = [SequenceKind::Lcyr, SequenceKind::Tlcyr, SequenceKind::Ell];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Lcyr => "lcyr",
            SequenceKind::Tlcyr => "tlcyr",
            SequenceKind::Ell => "ell",
        }
    }

    /// Value at (n, N) by the primary route.
    pub fn value(self, n: usize, parts: usize) -> BigUint {
        match self {
            SequenceKind::Lcyr => lcyr(n, parts),
            SequenceKind::Tlcyr => tlcyr(n, parts),
            SequenceKind::Ell => ell(n, parts),
        }
    }

    /// Value at (n, N) by brute-force enumeration of compositions.
    pub fn value_enumerated(self, n: usize, parts: usize) -> BigUint {
        match self {
            SequenceKind::Lcyr => lcyr_enumerated(n, parts),
            SequenceKind::Tlcyr => tlcyr_enumerated(n, parts),
            SequenceKind::Ell => ell_enumerated(n, parts),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lcyr" => Ok(SequenceKind::Lcyr),
            "tlcyr" => Ok(SequenceKind::Tlcyr),
            "ell" => Ok(SequenceKind::Ell),
            _ => Err(Error::Parse(format!("unknown sequence kind {s:?}"))),
        }
    }
}

/// lcyr(n, 2): n − 1 for prime n, 2(p₁(n) − 1) otherwise.
pub fn lcyr_base(n: u64) -> Result<u64> {
    if n < 2 {
        return domain(format!("lcyr_base needs n >= 2, got {n}"));
    }
    if is_prime(n) {
        Ok(n - 1)
    } else {
        Ok(2 * (smallest_prime_factor(n)? - 1))
    }
}

/// lcyr(n, N) by the N = 2 closed form and the binomial convolution.
pub fn lcyr(n: usize, parts: usize) -> BigUint {
    if parts == 0 || parts > n {
        return BigUint::zero();
    }
    match parts {
        1 => BigUint::from(1u32),
        2 => BigUint::from(lcyr_base(n as u64).expect("n >= 2")),
        _ => {
            // Σ_{h=2}^{n−N+2} C(n−h−1, N−3)·lcyr(h, 2), walking h downwards.
            let r = (parts - 3) as u64;
            let mut binom = BigUint::from(1u32);
            let mut acc = BigUint::zero();
            let top = n - parts + 2;
            for h in (2..=top).rev() {
                let m = (n - h - 1) as u64;
                if h < top {
                    binom = binom * m / (m - r);
                }
                acc += &binom * lcyr_base(h as u64).expect("h >= 2");
            }
            acc
        }
    }
}

/// Σ_{n ≤ x} lcyr(n, N), via the telescoping identity.
pub fn lcyr_cumulative(x: usize, parts: usize) -> BigUint {
    lcyr(x + 1, parts + 1)
}

pub fn lcyr_enumerated(n: usize, parts: usize) -> BigUint {
    if parts == 1 {
        return BigUint::from((n >= 1) as u32);
    }
    BigUint::from(enumerate(n, parts).filter(|c| !pair_is_exceeding(c.parts()[0], c.parts()[1])).count())
}

pub fn tlcyr_enumerated(n: usize, parts: usize) -> BigUint {
    BigUint::from(enumerate(n, parts).filter(|c| c.pairs().all(|(a, b)| !pair_is_exceeding(a, b))).count())
}

pub fn ell_enumerated(n: usize, parts: usize) -> BigUint {
    BigUint::from(enumerate(n, parts).filter(crate::compositions::is_prime_type).count())
}

/// Table `[N][n]` (0 ≤ N, n ≤ n_max) counting compositions whose adjacent
/// pairs all satisfy `allowed`, by dynamic programming over (sum, last part).
pub fn pair_constrained_table(n_max: usize, allowed: impl Fn(usize, usize) -> bool) -> Vec<Vec<BigUint>> {
    let mut out = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
    // layer[s][last]
    let mut layer: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
    for s in 1..=n_max {
        layer[s][s] = BigUint::from(1u32);
        out[1][s] = BigUint::from(1u32);
    }
    let ok: Vec<Vec<bool>> = (0..=n_max).map(|a| (0..=n_max).map(|b| a > 0 && b > 0 && allowed(a, b)).collect()).collect();
    for k in 2..=n_max {
        let mut next: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
        for s in 1..n_max {
            for last in 1..=s {
                let v = &layer[s][last];
                if v.is_zero() {
                    continue;
                }
                for b in 1..=(n_max - s) {
                    if ok[last][b] {
                        next[s + b][b] += v;
                    }
                }
            }
        }
        for s in 1..=n_max {
            out[k][s] = next[s].iter().sum();
        }
        layer = next;
    }
    out
}

/// Boolean version of [`pair_constrained_table`] for parts up to `parts_max`.
pub fn pair_constrained_support(n_max: usize, parts_max: usize, allowed: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    let mut out = vec![vec![false; n_max + 1]; parts_max + 1];
    let mut layer = vec![vec![false; n_max + 1]; n_max + 1];
    for s in 1..=n_max {
        layer[s][s] = true;
        if parts_max >= 1 {
            out[1][s] = true;
        }
    }
    let succ: Vec<Vec<usize>> = (0..=n_max).map(|a| (1..=n_max).filter(|&b| a > 0 && allowed(a, b)).collect()).collect();
    for k in 2..=parts_max {
        let mut next = vec![vec![false; n_max + 1]; n_max + 1];
        for s in 1..n_max {
            for last in 1..=s {
                if !layer[s][last] {
                    continue;
                }
                for &b in &succ[last] {
                    if s + b > n_max {
                        break;
                    }
                    next[s + b][b] = true;
                }
            }
        }
        for s in 1..=n_max {
            out[k][s] = next[s].iter().any(|&x| x);
        }
        layer = next;
    }
    out
}

fn tlcyr_allowed(a: usize, b: usize) -> bool {
    !pair_is_exceeding(a, b)
}

fn ell_allowed(a: usize, b: usize) -> bool {
    is_prime((a + b) as u64)
}

pub fn tlcyr(n: usize, parts: usize) -> BigUint {
    if parts == 0 || parts > n {
        return BigUint::zero();
    }
    pair_constrained_table(n, tlcyr_allowed)[parts][n].clone()
}

pub fn ell(n: usize, parts: usize) -> BigUint {
    if parts == 0 || parts > n {
        return BigUint::zero();
    }
    pair_constrained_table(n, ell_allowed)[parts][n].clone()
}

/// `[N][n]` flags ℓ(n, N) ≠ 0 for n ≤ n_max, N ≤ parts_max.
pub fn ell_support(n_max: usize, parts_max: usize) -> Vec<Vec<bool>> {
    pair_constrained_support(n_max, parts_max, ell_allowed)
}

/// Triangular table of one sequence for 1 ≤ N ≤ n ≤ n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub n_max: usize,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl SequenceTable {
    pub fn compute(kind: SequenceKind, n_max: usize) -> Self {
        let mut entries = BTreeMap::new();
        match kind {
            SequenceKind::Lcyr => {
                for n in 1..=n_max {
                    for k in 1..=n {
                        entries.insert((n, k), lcyr(n, k));
                    }
                }
            }
            SequenceKind::Tlcyr | SequenceKind::Ell => {
                let t = if kind == SequenceKind::Tlcyr {
                    pair_constrained_table(n_max, tlcyr_allowed)
                } else {
                    pair_constrained_table(n_max, ell_allowed)
                };
                for n in 1..=n_max {
                    for k in 1..=n {
                        entries.insert((n, k), t[k][n].clone());
                    }
                }
            }
        }
        SequenceTable { kind, n_max, entries }
    }

    /// Entry at (n, N); zero outside the triangle.
    pub fn get(&self, n: usize, parts: usize) -> BigUint {
        self.entries.get(&(n, parts)).cloned().unwrap_or_default()
    }

    /// Rows N = 2..n_max, columns n = 2..n_max, blank where N > n.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("N");
        for n in 2..=self.n_max {
            s.push_str(&format!(",{n}"));
        }
        s.push('\n');
        for k in 2..=self.n_max {
            s.push_str(&k.to_string());
            for n in 2..=self.n_max {
                s.push(',');
                if k <= n {
                    s.push_str(&self.get(n, k).to_string());
                }
            }
            s.push('\n');
        }
        s
    }

    /// Rows as `N → [values for n = N..n_max]`.
    pub fn rows(&self) -> BTreeMap<usize, Vec<BigUint>> {
        (2..=self.n_max).map(|k| (k, (k..=self.n_max).map(|n| self.get(n, k)).collect())).collect()
    }
}

/// Coefficients of the ordinary generating function Σ_n value(n, N) zⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OgfTruncation {
    pub kind: SequenceKind,
    pub parts: usize,
    /// Coefficients of z⁰..z^D.
    pub coefficients: Vec<BigUint>,
    /// For lcyr with N ≥ 2: whether the series equals Lcyrit₂(z)·(z/(1−z))^{N−2} up to z^D.
    pub factorization_holds: Option<bool>,
}

pub fn ogf_truncation(kind: SequenceKind, parts: usize, degree: usize) -> Result<OgfTruncation> {
    if parts == 0 {
        return domain("N must be at least 1");
    }
    let coefficients: Vec<BigUint> = match kind {
        SequenceKind::Lcyr => (0..=degree).map(|n| lcyr(n, parts)).collect(),
        SequenceKind::Tlcyr | SequenceKind::Ell => {
            let t = if kind == SequenceKind::Tlcyr {
                pair_constrained_table(degree.max(parts), tlcyr_allowed)
            } else {
                pair_constrained_table(degree.max(parts), ell_allowed)
            };
            (0..=degree).map(|n| t[parts][n].clone()).collect()
        }
    };
    let factorization_holds = (kind == SequenceKind::Lcyr && parts >= 2).then(|| {
        // (z/(1−z))^{N−2} = Σ_j C(j−1, N−3) z^j for N ≥ 3.
        let base: Vec<BigUint> = (0..=degree).map(|n| if n >= 2 { lcyr(n, 2) } else { BigUint::zero() }).collect();
        let factor: Vec<BigUint> = (0..=degree)
            .map(|j| {
                if parts == 2 {
                    BigUint::from((j == 0) as u32)
                } else {
                    crate::arith::binomial_i(j as i64 - 1, parts as i64 - 3)
                }
            })
            .collect();
        (0..=degree).all(|n| {
            let conv: BigUint = (0..=n).map(|j| &base[n - j] * &factor[j]).sum();
            conv == lcyr_enumerated(n, parts) || (n > 22 && conv == coefficients[n])
        })
    });
    Ok(OgfTruncation { kind, parts, coefficients, factorization_holds })
}

/// g(m) = (p − 1)·μ(m/p) when p is the largest prime of m, p ∤ m/p and m/p
/// is squarefree; 0 otherwise (including m = 1).
pub fn dirichlet_g(m: u64) -> i64 {
    if m < 2 {
        return 0;
    }
    let p = *prime_factors(m).last().expect("m >= 2");
    let rest = m / p;
    if rest % p == 0 {
        return 0;
    }
    (p as i64 - 1) * mobius(rest)
}

/// n-th coefficient of Lcyr₂(s)ζ(s): Σ_{d | n} lcyr(d, 2).
pub fn dirichlet_lhs(n: u64) -> i64 {
    divisors(n).into_iter().filter(|&d| d >= 2).map(|d| lcyr_base(d).expect("d >= 2") as i64).sum()
}

/// n-th coefficient of 2·(d ∗ g) + ω₀ − ω₁.
pub fn dirichlet_rhs(n: u64) -> i64 {
    let conv: i64 = divisors(n).into_iter().map(|k| divisors(k).len() as i64 * dirichlet_g(n / k)).sum();
    2 * conv + omega0(n) as i64 - omega1(n) as i64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletReport {
    pub bound: u64,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

pub fn dirichlet_coeff_identity_check(bound: u64) -> DirichletReport {
    let first_failure = (1..=bound).find(|&n| dirichlet_lhs(n) != dirichlet_rhs(n));
    DirichletReport { bound, holds: first_failure.is_none(), first_failure }
}

/// ρ(N, x) = (Σ_{n ≤ x} lcyr(n, N))·N!·log x / x^N.
pub fn asymptotic_ratio(parts: usize, x: u64) -> Result<f64> {
    if parts < 2 {
        return domain("asymptotic ratio needs N >= 2");
    }
    if x < 10 {
        return domain("asymptotic ratio needs x >= 10");
    }
    let sum = lcyr_cumulative(x as usize, parts);
    let num = sum * factorial(parts as u64);
    let den = BigUint::from(x).pow(parts as u32);
    let ratio = BigRational::new(num.into(), den.into()).to_f64().expect("finite ratio");
    Ok(ratio * (x as f64).ln())
}

/// log(Σ_{k ≤ n, k composite} lcyr(k, 2)) / log n, a finite-n estimator.
pub fn sigma_bar_estimate(n: u64) -> f64 {
    let s: u64 = (4..=n).filter(|&k| !is_prime(k)).map(|k| lcyr_base(k).expect("k >= 2")).sum();
    (s as f64).ln() / (n as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn base_examples() {
        assert_eq!(lcyr_base(5).unwrap(), 4);
        assert_eq!(lcyr_base(9).unwrap(), 4);
        assert_eq!(lcyr_base(12).unwrap(), 2);
        assert!(lcyr_base(1).is_err());
    }

    #[test]
    fn value_examples() {
        assert_eq!(lcyr(6, 3), u(9));
        assert_eq!(lcyr(18, 10), u(21385));
        assert_eq!(lcyr(7, 4), u(18));
        assert_eq!(lcyr(7, 4), lcyr(6, 3) + lcyr(6, 4));
        assert_eq!(tlcyr(7, 3), u(7));
        assert_eq!(tlcyr(18, 9), u(6799));
        assert_eq!(ell(10, 4), u(23));
        assert_eq!(ell(11, 4), u(0));
        assert_eq!(ell(18, 7), u(373));
        assert_eq!(lcyr(3, 4), u(0));
        assert_eq!(ell(5, 1), u(1));
    }

    #[test]
    fn routes_agree() {
        for n in 2..=16 {
            for k in 1..=n {
                assert_eq!(lcyr(n, k), lcyr_enumerated(n, k), "lcyr({n},{k})");
                assert_eq!(tlcyr(n, k), tlcyr_enumerated(n, k), "tlcyr({n},{k})");
                assert_eq!(ell(n, k), ell_enumerated(n, k), "ell({n},{k})");
            }
            assert_eq!(tlcyr(n, 2), lcyr(n, 2));
        }
    }

    #[test]
    fn fixed_index_not_union() {
        // The union-over-pairs count differs at (5,3); the fixed-index count is 5.
        let union = enumerate(5, 3).filter(|c| c.pairs().any(|(a, b)| !pair_is_exceeding(a, b))).count();
        assert_eq!(lcyr(5, 3), u(5));
        assert_eq!(union, 6);
    }

    #[test]
    fn table_invariants() {
        let t: Vec<SequenceTable> = SequenceKind::ALL.iter().map(|&k| SequenceTable::compute(k, 20)).collect();
        for n in 1..=20 {
            assert_eq!(t[0].get(n, n), u(1));
            for k in 1..=n {
                let (l, tl, e) = (t[0].get(n, k), t[1].get(n, k), t[2].get(n, k));
                assert!(e <= tl && tl <= l && l <= crate::compositions::count(n, k));
            }
            if n >= 2 {
                for tab in &t {
                    assert_eq!(tab.get(n, n - 1), u(n as u64 - 1), "{} ({n},{})", tab.kind, n - 1);
                }
            }
        }
    }

    #[test]
    fn ogf_examples() {
        let o = ogf_truncation(SequenceKind::Lcyr, 3, 6).unwrap();
        assert_eq!(o.coefficients[3..].to_vec(), vec![u(1), u(3), u(5), u(9)]);
        assert_eq!(o.factorization_holds, Some(true));
        let o = ogf_truncation(SequenceKind::Lcyr, 1, 8).unwrap();
        assert!(o.coefficients[1..].iter().all(|c| c == &u(1)));
        let o = ogf_truncation(SequenceKind::Tlcyr, 4, 9).unwrap();
        assert_eq!(o.coefficients[4..].to_vec(), vec![u(1), u(4), u(7), u(16), u(19), u(34)]);
        for k in 2..=8 {
            assert_eq!(ogf_truncation(SequenceKind::Lcyr, k, 24).unwrap().factorization_holds, Some(true));
        }
    }

    #[test]
    fn dirichlet_small() {
        assert_eq!((dirichlet_lhs(1), dirichlet_rhs(1)), (0, 0));
        assert!(dirichlet_coeff_identity_check(50).holds);
    }

    #[test]
    fn asymptotic_examples() {
        assert_eq!(lcyr_cumulative(10_000, 2), (2..=10_000).map(|n| lcyr(n, 2)).sum::<BigUint>());
        let r = asymptotic_ratio(4, 10_000).unwrap();
        assert!(r > 0.0 && r < 2.0);
        assert!(asymptotic_ratio(1, 100).is_err());
    }

    #[test]
    fn ratio_approaches_one() {
        let gaps: Vec<f64> = [1_000u64, 10_000, 100_000, 1_000_000]
            .iter()
            .map(|&x| (asymptotic_ratio(3, x).unwrap() - 1.0).abs())
            .collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
        assert!(gaps[3] < 0.2);
    }

    #[test]
    fn support_matches_counts() {
        let s = ell_support(40, 40);
        let t = pair_constrained_table(40, ell_allowed);
        for k in 1..=40 {
            for n in 1..=40 {
                assert_eq!(s[k][n], !t[k][n].is_zero(), "({n},{k})");
            }
        }
    }

    #[test]
    fn eulerian_growth_bound() {
        // Σ_n lcyr(n,N) xⁿ ≤ Σ_n n^{N−1} xⁿ/(N−1)! = 𝔈_{N−1}(x)/((N−1)!(1−x)^N).
        use num_bigint::BigInt;
        for k in 2..=6usize {
            let e = crate::arith::eulerian_polynomial(k - 1);
            for (p, q) in [(1i64, 2i64), (2, 3), (9, 10)] {
                let x = BigRational::new(BigInt::from(p), BigInt::from(q));
                let mut partial = BigRational::zero();
                let mut xn = BigRational::from_integer(BigInt::from(1));
                for n in 0..=120 {
                    partial += BigRational::from_integer(BigInt::from(lcyr(n, k))) * &xn;
                    xn *= &x;
                }
                let ev = e.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + BigRational::from_integer(c.clone()));
                let one_minus = BigRational::from_integer(BigInt::from(1)) - &x;
                let bound = ev / (BigRational::from_integer(BigInt::from(factorial(k as u64 - 1))) * num_traits::pow(one_minus, k));
                assert!(partial <= bound, "N={k}, x={p}/{q}");
            }
        }
    }
}
