//! Compositions of `n` and the adjacent-pair predicates on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::arith::{binomial, is_prime, smallest_prime_factor};
use crate::error::{Error, Result};

/// Ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("a composition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Composition {
        Composition { parts: self.parts.iter().rev().copied().collect() }
    }

    /// Adjacent pairs `(λ_i, λ_{i+1})`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `1,2,3` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad part {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Lazy lexicographic stream of the compositions of `n` into `k` parts.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut tail = *next.last().unwrap();
        let mut advanced = false;
        for i in (0..k.saturating_sub(1)).rev() {
            // The tail after i must keep one unit per remaining part after losing one.
            if tail > k - 1 - i {
                next[i] += 1;
                let rest = tail - 1;
                for slot in next.iter_mut().take(k - 1).skip(i + 1) {
                    *slot = 1;
                }
                next[k - 1] = rest - (k - 2 - i);
                advanced = true;
                break;
            }
            tail += next[i];
        }
        if advanced {
            self.current = Some(next);
        }
        Some(Composition { parts: cur })
    }
}

/// Compositions of `n` into `k` positive parts in lexicographic order; empty if `k > n` or `k = 0`.
pub fn enumerate(n: usize, k: usize) -> Compositions {
    if k == 0 || k > n {
        return Compositions { current: None };
    }
    let mut first = vec![1; k];
    first[k - 1] = n - (k - 1);
    Compositions { current: Some(first) }
}

/// binomial(n−1, k−1).
pub fn count(n: usize, k: usize) -> BigUint {
    if k == 0 || k > n {
        return BigUint::default();
    }
    binomial(n as u64 - 1, k as u64 - 1)
}

/// p₁(a+b) ≤ min(a, b).
pub fn pair_is_exceeding(a: usize, b: usize) -> bool {
    let s = (a + b) as u64;
    let p = smallest_prime_factor(s).expect("a + b >= 2");
    p <= a.min(b) as u64
}

/// The two-sided form p₁(s) ≤ min(a,b) and max(a,b) ≤ s − p₁(s).
pub fn pair_is_exceeding_two_sided(a: usize, b: usize) -> bool {
    let s = (a + b) as u64;
    let p = smallest_prime_factor(s).expect("a + b >= 2");
    (a.min(b) as u64) >= p && (a.max(b) as u64) <= s - p
}

/// Every adjacent sum is prime (vacuous for one part).
pub fn is_prime_type(c: &Composition) -> bool {
    c.pairs().all(|(a, b)| is_prime((a + b) as u64))
}
