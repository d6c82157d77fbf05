//! Explicit prime-flag compositions and the Goldbach-type report.

use std::collections::HashSet;
use std::fmt;

use crate::arith::{is_prime, is_sum_of_two_primes, sum_of_k_primes_at_least, sum_of_k_primes_witness};
use crate::compositions::{is_prime_type, Composition};

/// How a witness was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    /// Two equal primes in `(n/2, n)`, for three parts.
    Bertrand,
    /// Tabulated compositions for five parts and `n ≤ 7`.
    SmallCase,
    /// Three primes summing to `n+1` (n even) or three odd primes summing to `n+2` (n odd), five parts.
    ThreePrimes,
    /// `λ_{2i−1} = q_i − 1`, `λ_{2i} = 1` from a decomposition into primes.
    SumOfPrimes,
    /// Depth-first search.
    Search,
}

impl WitnessSource {
    pub fn name(self) -> &'static str {
        match self {
            WitnessSource::Bertrand => "bertrand",
            WitnessSource::SmallCase => "small-case",
            WitnessSource::ThreePrimes => "three-primes",
            WitnessSource::SumOfPrimes => "sum-of-primes",
            WitnessSource::Search => "search",
        }
    }
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A composition all of whose adjacent sums are prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFlagWitness {
    pub lambda: Composition,
    /// `(i, λ_i + λ_{i+1})` for each adjacent pair, 1-based.
    pub certificates: Vec<(usize, u64)>,
    pub source: WitnessSource,
}

impl PrimeFlagWitness {
    fn new(parts: Vec<usize>, source: WitnessSource) -> Option<Self> {
        let lambda = Composition::new(parts).ok()?;
        if !is_prime_type(&lambda) {
            return None;
        }
        let certificates = lambda.pairs().enumerate().map(|(i, (a, b))| (i + 1, (a + b) as u64)).collect();
        Some(PrimeFlagWitness { lambda, certificates, source })
    }
}

fn bertrand(n: usize) -> Option<Vec<usize>> {
    let p = (n / 2 + 1..n).find(|&p| is_prime(p as u64))?;
    let mid = 2 * p - n;
    Some(vec![p - mid, mid, p - mid])
}

fn five_parts(n: usize) -> Option<(Vec<usize>, WitnessSource)> {
    match n {
        5 => Some((vec![1; 5], WitnessSource::SmallCase)),
        6 => Some((vec![1, 1, 1, 1, 2], WitnessSource::SmallCase)),
        7 => Some((vec![1, 1, 2, 1, 2], WitnessSource::SmallCase)),
        _ if n % 2 == 0 => {
            let p = sum_of_k_primes_witness(n as u64 + 1, 3)?;
            let p: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            Some((vec![p[0] - 1, 1, p[1] - 1, 1, p[2] - 1], WitnessSource::ThreePrimes))
        }
        _ => {
            let p = sum_of_k_primes_at_least(n as u64 + 2, 3, 3)?;
            let p: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            Some((vec![p[0] - 2, 2, p[1] - 2, 2, p[2] - 2], WitnessSource::ThreePrimes))
        }
    }
}

/// Alternating `q_i − 1, 1` pattern; odd lengths end with `q_{r+1} − 1`.
fn sum_of_primes(n: usize, parts: usize) -> Option<Vec<usize>> {
    let r = parts / 2;
    let qs = if parts % 2 == 0 {
        sum_of_k_primes_witness(n as u64, r)?
    } else {
        sum_of_k_primes_witness(n as u64 + 1, r + 1)?
    };
    let mut out = Vec::with_capacity(parts);
    for (i, &q) in qs.iter().enumerate() {
        out.push(q as usize - 1);
        if i < r {
            out.push(1);
        }
    }
    Some(out)
}

fn dfs(
    remaining: usize,
    left: usize,
    prev: usize,
    out: &mut Vec<usize>,
    dead: &mut HashSet<(usize, usize, usize)>,
) -> bool {
    if left == 0 {
        return remaining == 0;
    }
    if remaining < left || dead.contains(&(remaining, left, prev)) {
        return false;
    }
    let hi = remaining - (left - 1);
    let candidates: Box<dyn Iterator<Item = usize>> = if left == 1 { Box::new(std::iter::once(hi)) } else { Box::new(1..=hi) };
    for x in candidates {
        if prev != 0 && !is_prime((prev + x) as u64) {
            continue;
        }
        out.push(x);
        if dfs(remaining - x, left - 1, x, out, dead) {
            return true;
        }
        out.pop();
    }
    dead.insert((remaining, left, prev));
    false
}

/// Lexicographically least prime-type composition of `n` into `parts` parts.
pub fn search_witness(n: usize, parts: usize) -> Option<PrimeFlagWitness> {
    if parts == 0 || parts > n {
        return None;
    }
    let mut out = Vec::with_capacity(parts);
    let mut dead = HashSet::new();
    dfs(n, parts, 0, &mut out, &mut dead).then(|| PrimeFlagWitness::new(out, WitnessSource::Search)).flatten()
}

/// A prime-type composition of `n` into `parts` parts, if any exists.
///
/// Three, five and seven-or-more parts use explicit constructions when they
/// apply; two, four and six parts, and the remaining small cases, use search.
pub fn witness(n: usize, parts: usize) -> Option<PrimeFlagWitness> {
    if parts < 2 || parts > n {
        return if parts == 1 && n >= 1 { PrimeFlagWitness::new(vec![n], WitnessSource::Search) } else { None };
    }
    let built = match parts {
        3 => bertrand(n).and_then(|p| PrimeFlagWitness::new(p, WitnessSource::Bertrand)),
        5 => five_parts(n).and_then(|(p, s)| PrimeFlagWitness::new(p, s)),
        k if k >= 7 => sum_of_primes(n, k).and_then(|p| PrimeFlagWitness::new(p, WitnessSource::SumOfPrimes)),
        _ => None,
    };
    built.or_else(|| search_witness(n, parts))
}

/// One row of [`goldbach_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldbachEntry {
    pub n: usize,
    pub in_omega: bool,
    pub six_parts: Option<PrimeFlagWitness>,
    pub four_parts: Option<PrimeFlagWitness>,
}

/// Checks six-part witnesses exist and four-part witnesses exist exactly off Ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldbachReport {
    pub n_max: usize,
    pub entries: Vec<GoldbachEntry>,
    /// `n ≥ 6` with no six-part witness.
    pub six_part_counterexamples: Vec<usize>,
    /// `n ≥ 4` where the existence of a four-part witness disagrees with `n ∉ Ω`.
    pub four_part_mismatches: Vec<usize>,
    /// Members of Ω in `4..=n_max`.
    pub omega: Vec<usize>,
}

impl GoldbachReport {
    pub fn holds(&self) -> bool {
        self.six_part_counterexamples.is_empty() && self.four_part_mismatches.is_empty()
    }
}

pub fn goldbach_report(n_max: usize) -> GoldbachReport {
    let mut report = GoldbachReport {
        n_max,
        entries: Vec::new(),
        six_part_counterexamples: Vec::new(),
        four_part_mismatches: Vec::new(),
        omega: Vec::new(),
    };
    for n in 4..=n_max {
        let in_omega = !is_sum_of_two_primes(n as u64);
        let four_parts = witness(n, 4);
        let six_parts = if n >= 6 { witness(n, 6) } else { None };
        if in_omega {
            report.omega.push(n);
        }
        if four_parts.is_some() == in_omega {
            report.four_part_mismatches.push(n);
        }
        if n >= 6 && six_parts.is_none() {
            report.six_part_counterexamples.push(n);
        }
        report.entries.push(GoldbachEntry { n, in_omega, six_parts, four_parts });
    }
    report
}
