//! Integer arithmetic and number-theoretic predicates.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Default size of the process-wide sieve.
pub const DEFAULT_SIEVE_LIMIT: usize = 1 << 21;

/// Smallest-prime-factor table for `0..=limit`.
///
/// Entries 0 and 1 are stored as 0. Lookups beyond `limit` fall back to trial
/// division, so every method is total on its documented domain.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: usize,
    smallest_factor: Vec<u32>,
}

impl PrimeSieve {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(2);
        let mut spf = vec![0u32; limit + 1];
        let mut i = 2;
        while i <= limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                if let Some(start) = i.checked_mul(i) {
                    let mut j = start;
                    while j <= limit {
                        if spf[j] == 0 {
                            spf[j] = i as u32;
                        }
                        j += i;
                    }
                }
            }
            i += 1;
        }
        PrimeSieve { limit, smallest_factor: spf }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// The raw table; entry `k ≥ 2` is p₁(k).
    pub fn table(&self) -> &[u32] {
        &self.smallest_factor
    }

    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        if n < 2 {
            return domain(format!("smallest prime factor undefined for n = {n}"));
        }
        if n as u128 <= self.limit as u128 {
            return Ok(self.smallest_factor[n as usize] as u64);
        }
        Ok(self.trial_division(n))
    }

    fn trial_division(&self, n: u64) -> u64 {
        if n % 2 == 0 {
            return 2;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                return d;
            }
            d += 2;
        }
        n
    }

    pub fn is_prime(&self, n: u64) -> bool {
        if n < 2 {
            return false;
        }
        if n as u128 <= self.limit as u128 {
            return self.smallest_factor[n as usize] as u64 == n;
        }
        is_prime_u64(n)
    }

    /// Primes in `lo..=hi`, ascending.
    pub fn primes_between(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (lo.max(2)..=hi).filter(move |&k| self.is_prime(k))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The shared sieve of size [`DEFAULT_SIEVE_LIMIT`].
pub fn sieve() -> &'static PrimeSieve {
    static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
    SIEVE.get_or_init(|| PrimeSieve::new(DEFAULT_SIEVE_LIMIT))
}

/// p₁(n), the least prime dividing `n`.
pub fn smallest_prime_factor(n: u64) -> Result<u64> {
    sieve().smallest_prime_factor(n)
}

pub fn is_prime(n: u64) -> bool {
    sieve().is_prime(n)
}

/// Whether `n = p + q` for primes `p, q`. False for every `n` in Ω.
pub fn is_sum_of_two_primes(n: u64) -> bool {
    if n < 4 {
        return false;
    }
    if n % 2 == 1 {
        return is_prime(n - 2);
    }
    let s = sieve();
    (2..=n / 2).any(|p| s.is_prime(p) && s.is_prime(n - p))
}

/// Lexicographically least nondecreasing `k`-tuple of primes summing to `n`.
pub fn sum_of_k_primes_witness(n: u64, k: usize) -> Option<Vec<u64>> {
    sum_of_k_primes_at_least(n, k, 2)
}

/// As [`sum_of_k_primes_witness`] but every prime is at least `min_prime`.
pub fn sum_of_k_primes_at_least(n: u64, k: usize, min_prime: u64) -> Option<Vec<u64>> {
    if k == 0 {
        return None;
    }
    let mut dead = HashSet::new();
    let mut out = Vec::with_capacity(k);
    if k_primes(n, k, min_prime.max(2), &mut dead, &mut out) {
        Some(out)
    } else {
        None
    }
}

fn k_primes(n: u64, k: usize, minp: u64, dead: &mut HashSet<(u64, usize, u64)>, out: &mut Vec<u64>) -> bool {
    if k == 1 {
        if n >= minp && is_prime(n) {
            out.push(n);
            return true;
        }
        return false;
    }
    if dead.contains(&(n, k, minp)) {
        return false;
    }
    let mut p = minp;
    while p.saturating_mul(k as u64) <= n {
        if is_prime(p) {
            out.push(p);
            if k_primes(n - p, k - 1, p, dead, out) {
                return true;
            }
            out.pop();
        }
        p += 1;
    }
    dead.insert((n, k, minp));
    false
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a possibly negative upper entry treated combinatorially
/// (zero whenever `n < 0` or `k > n`).
pub fn binomial_i(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// n! / ∏ parts!, with n = Σ parts.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &p in parts {
        for i in 1..=p as u64 {
            total += 1;
            acc *= total;
            acc /= i;
        }
    }
    acc
}

/// Distinct prime factors of `n ≥ 1`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n).expect("n >= 2");
        out.push(p);
        while n % p == 0 {
            n /= p;
        }
    }
    out
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut sign = 1;
    while n > 1 {
        let p = smallest_prime_factor(n).expect("n >= 2");
        n /= p;
        if n % p == 0 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Number of distinct prime factors; ω₀(1) = 0.
pub fn omega0(n: u64) -> u64 {
    prime_factors(n).len() as u64
}

/// Sum of distinct prime factors; ω₁(1) = 0.
pub fn omega1(n: u64) -> u64 {
    prime_factors(n).iter().sum()
}

/// Divisors of `n ≥ 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Eulerian polynomial 𝔈_k with integer coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianPolynomial {
    pub degree: usize,
    pub coefficients: Vec<BigInt>,
}

impl EulerianPolynomial {
    pub fn eval(&self, r: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * r + c)
    }

    pub fn is_palindromic(&self) -> bool {
        // The constant term vanishes for k ≥ 1, so the symmetry is r ↦ r^{k+1} of coefficients 1..=k.
        if self.degree == 0 {
            return true;
        }
        let c = &self.coefficients[1..];
        c.iter().eq(c.iter().rev())
    }
}

/// 𝔈_k via 𝔈_{k+1} = (k+1) r 𝔈_k + r(1−r) 𝔈_k′.
pub fn eulerian_polynomial(k: usize) -> EulerianPolynomial {
    let mut e = vec![BigInt::one()];
    for step in 0..k {
        let mut next = vec![BigInt::zero(); e.len() + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < e.len() {
                *slot += &e[j] * j;
            }
            if j >= 1 {
                let w = step as i64 + 2 - j as i64;
                *slot += &e[j - 1] * w;
            }
        }
        while next.len() > 1 && next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        e = next;
    }
    EulerianPolynomial { degree: k, coefficients: e }
}
