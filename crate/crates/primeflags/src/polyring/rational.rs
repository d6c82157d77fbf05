use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::{PolyRing, SparsePolynomial};
use crate::error::{Error, Result};

/// Quotient of polynomials kept in normal form.
///
/// Normal form: common factors cancelled when at most two variables occur,
/// integer content removed, denominator leading coefficient positive.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: SparsePolynomial,
    den: SparsePolynomial,
}

impl RationalFunction {
    pub fn new(num: SparsePolynomial, den: SparsePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let ring = num.ring().union(den.ring());
        let mut num = num.embed(&ring)?;
        let mut den = den.embed(&ring)?;
        let used = num.ring().vars().iter().filter(|v| num.degree_in(v).unwrap_or(0) > 0 || den.degree_in(v).unwrap_or(0) > 0).count();
        if used <= 2 && !num.is_zero() {
            let g = num.gcd(&den);
            if !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides");
                den = den.div_exact(&g).expect("gcd divides");
            }
        }
        if num.is_zero() {
            den = ring.one();
        }
        let c = num.content().gcd(&den.content());
        let mut c = if c.is_zero() { BigInt::from(1) } else { c };
        if den.leading().is_some_and(|(_, l)| l.is_negative()) {
            c = -c;
        }
        Ok(RationalFunction {
            num: num.div_exact_scalar(&c).expect("content divides"),
            den: den.div_exact_scalar(&c).expect("content divides"),
        })
    }

    pub fn from_poly(p: &SparsePolynomial) -> Self {
        RationalFunction::new(p.clone(), p.ring().one()).expect("unit denominator")
    }

    pub fn constant(ring: &PolyRing, num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        RationalFunction::new(ring.constant(num), ring.constant(den))
    }

    pub fn parse(ring: &PolyRing, num: &str, den: &str) -> Result<Self> {
        RationalFunction::new(ring.parse(num)?, ring.parse(den)?)
    }

    pub fn numerator(&self) -> &SparsePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &SparsePolynomial {
        &self.den
    }

    pub fn ring(&self) -> &PolyRing {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.num.pow(e), self.den.pow(e)).expect("nonzero")
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, bindings: &[(&str, &RationalFunction)]) -> Result<Self> {
        let n = substitute_poly(&self.num, bindings)?;
        let d = substitute_poly(&self.den, bindings)?;
        n.div(&d)
    }

    /// Power-series coefficients in `var` up to `var^order`; the denominator
    /// at `var = 0` must be ±1.
    pub fn series(&self, var: &str, order: usize) -> Result<Vec<SparsePolynomial>> {
        let ring = self.ring().clone();
        let nc = self.num.coefficients_in(var);
        let dc = self.den.coefficients_in(var);
        let d0 = dc.get(&0).cloned().unwrap_or_else(|| ring.zero());
        let unit = if d0 == ring.one() {
            BigInt::from(1)
        } else if d0 == -&ring.one() {
            BigInt::from(-1)
        } else {
            return Err(Error::Domain(format!("denominator is not a unit at {var} = 0")));
        };
        let mut out: Vec<SparsePolynomial> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = nc.get(&(k as i32)).cloned().unwrap_or_else(|| ring.zero());
            for (j, dj) in dc.range(1..).take_while(|(j, _)| **j as usize <= k) {
                acc -= &(dj * &out[k - *j as usize]);
            }
            out.push(acc.scale(&unit));
        }
        Ok(out)
    }

    /// Evaluates at integer values of every variable; `None` on a pole.
    pub fn eval(&self, values: &[BigInt]) -> Option<num_rational::BigRational> {
        let d = self.den.eval(values);
        (!d.is_zero()).then(|| num_rational::BigRational::new(self.num.eval(values), d))
    }
}

fn substitute_poly(p: &SparsePolynomial, bindings: &[(&str, &RationalFunction)]) -> Result<RationalFunction> {
    let mut ring = p.ring().clone();
    for (_, r) in bindings {
        ring = ring.union(r.ring());
    }
    let mut acc = RationalFunction::from_poly(&ring.zero());
    for (exps, c) in p.terms() {
        let mut rest = vec![0u32; ring.nvars()];
        let mut term = RationalFunction::from_poly(&ring.one());
        for (i, &e) in exps.iter().enumerate() {
            let name = &p.ring().vars()[i];
            if let Some((_, r)) = bindings.iter().find(|(v, _)| v == name) {
                if e > 0 {
                    term = term.mul(&r.pow(e as u32));
                }
            } else {
                rest[ring.index(name).expect("union ring")] = e as u32;
            }
        }
        let mono = ring.monomial(&rest, c.clone());
        acc = acc.add(&term.mul(&RationalFunction::from_poly(&mono)));
    }
    Ok(acc)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term() == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let r = PolyRing::new(&["z", "t"]);
        let f = RationalFunction::parse(&r, "2*(z-1)*(z+t)", "-4*(z-1)*t").unwrap();
        assert_eq!(f.numerator(), &r.parse("-z - t").unwrap());
        assert_eq!(f.denominator(), &r.parse("2*t").unwrap());
    }

    #[test]
    fn composition_series() {
        let r = PolyRing::new(&["z"]);
        let f = RationalFunction::parse(&r, "z", "1 - z").unwrap();
        let ff = f.substitute(&[("z", &f)]).unwrap();
        assert_eq!(ff, RationalFunction::parse(&r, "z", "1 - 2*z").unwrap());
        let s = ff.series("z", 20).unwrap();
        for (k, c) in s.iter().enumerate() {
            let expect = if k == 0 { BigInt::zero() } else { BigInt::from(2).pow(k as u32 - 1) };
            assert_eq!(c.constant_term(), expect);
        }
    }

    #[test]
    fn rational_value_substitution() {
        let r = PolyRing::new(&["x", "y"]);
        let p = RationalFunction::from_poly(&r.parse("x^2 + y").unwrap());
        let half = RationalFunction::constant(&r, 1, 2).unwrap();
        let s = p.substitute(&[("x", &half)]).unwrap();
        assert_eq!(s, RationalFunction::parse(&r, "1 + 4*y", "4").unwrap());
    }
}
