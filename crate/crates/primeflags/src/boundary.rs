//! Fabry–Lindelöf probes `b_n(θ) = ½·|Σ_k lcyr(k,2)·C(n,k)·e^{ikθ}|^{1/n}`
//! at rational angles `θ = 2π·m/M`.
//!
//! The sum is regrouped by `k mod M` into `M` exact integers, so only `M`
//! trigonometric values are needed at high precision.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::sequences::lcyr;

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 64;

/// One evaluated probe.
#[derive(Clone, Debug)]
pub struct BoundaryProbe {
    pub n: usize,
    /// θ/2π = m / divisions.
    pub m: u64,
    pub divisions: u64,
    pub precision_bits: usize,
    pub value: BigFloat,
}

impl BoundaryProbe {
    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        decimal_string(&self.value).parse().unwrap_or(f64::NAN)
    }

    /// Full-precision decimal representation.
    pub fn to_decimal(&self) -> String {
        decimal_string(&self.value)
    }
}

fn consts() -> Consts {
    Consts::new().expect("constant cache allocation")
}

fn decimal_string(x: &BigFloat) -> String {
    let mut cc = consts();
    x.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| "NaN".into())
}

fn to_float(x: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&x.to_string(), Radix::Dec, p, RM, cc)
}

/// `Σ_{k ≡ r (mod M)} lcyr(k,2)·C(n,k)` for `r = 0..M`.
pub fn residue_sums(n: usize, divisions: u64) -> Vec<BigInt> {
    let mut sums = vec![BigInt::zero(); divisions as usize];
    for k in 2..=n {
        let a = lcyr(k, 2);
        if !a.is_zero() {
            sums[k % divisions as usize] += BigInt::from(a * binomial(n as u64, k as u64));
        }
    }
    sums
}

/// `b_n(2π·m/divisions)` computed with `precision_bits` bits (at least `n + 64`).
pub fn fabry_lindelof(n: usize, m: u64, divisions: u64, precision_bits: usize) -> Result<BoundaryProbe> {
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    if divisions == 0 {
        return Err(Error::Domain("the angle denominator must be positive".into()));
    }
    if precision_bits < n + GUARD_BITS {
        return Err(Error::Domain(format!("precision {precision_bits} below the required {} bits", n + GUARD_BITS)));
    }
    let p = precision_bits + GUARD_BITS;
    let mut cc = consts();
    let two_pi = cc.pi(p, RM).mul(&BigFloat::from_u8(2, p), p, RM);
    let mut re = BigFloat::from_u8(0, p);
    let mut im = BigFloat::from_u8(0, p);
    for (r, a) in residue_sums(n, divisions).iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let turn = (r as u64 * (m % divisions)) % divisions;
        let angle = two_pi.mul(&BigFloat::from_u64(turn, p), p, RM).div(&BigFloat::from_u64(divisions, p), p, RM);
        let af = to_float(a, p, &mut cc);
        re = re.add(&af.mul(&angle.cos(p, RM, &mut cc), p, RM), p, RM);
        im = im.add(&af.mul(&angle.sin(p, RM, &mut cc), p, RM), p, RM);
    }
    let modulus = re.mul(&re, p, RM).add(&im.mul(&im, p, RM), p, RM).sqrt(p, RM);
    if modulus.is_zero() {
        return Err(Error::Domain("the probe sum vanishes".into()));
    }
    let root = modulus.ln(p, RM, &mut cc).div(&BigFloat::from_u64(n as u64, p), p, RM).exp(p, RM, &mut cc);
    let value = root.div(&BigFloat::from_u8(2, p), precision_bits, RM);
    Ok(BoundaryProbe { n, m, divisions, precision_bits, value })
}

/// `rows[m-1][j] = b_{ns[j]}(2π·m/divisions)` for `m = 1..=divisions`.
pub fn boundary_table(ns: &[usize], divisions: u64, precision_bits: Option<usize>) -> Result<Vec<Vec<f64>>> {
    (1..=divisions)
        .map(|m| {
            ns.iter()
                .map(|&n| fabry_lindelof(n, m, divisions, precision_bits.unwrap_or(n + 2 * GUARD_BITS)).map(|b| b.to_f64()))
                .collect()
        })
        .collect()
}
