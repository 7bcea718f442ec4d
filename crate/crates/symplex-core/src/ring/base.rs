//! Coefficient rings: the integers, the rationals, and prime fields
//! F_p for p < 2^31 (primality checked by trial division).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRing {
    Integers,
    Rationals,
    PrimeField(u32),
}

/// A coefficient in one of the base rings. The variant must match the
/// ring that operates on it; `RingElement` enforces this at its API
/// boundary, so a mismatch inside arithmetic is a programming error
/// and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Fp(u64),
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl BaseRing {
    pub fn prime_field(p: u64) -> Result<BaseRing> {
        if p >= (1u64 << 31) || !is_prime_u64(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(BaseRing::PrimeField(p as u32))
    }

    /// Parse a ring label: `Z`, `Q`, or `Fp:<p>`.
    pub fn parse(label: &str) -> Result<BaseRing> {
        match label {
            "Z" => Ok(BaseRing::Integers),
            "Q" => Ok(BaseRing::Rationals),
            _ => {
                if let Some(rest) = label.strip_prefix("Fp:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad modulus in ring label {label:?}")))?;
                    BaseRing::prime_field(p)
                } else {
                    Err(Error::Parse(format!("unknown ring label {label:?}")))
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            BaseRing::Integers => "Z".to_string(),
            BaseRing::Rationals => "Q".to_string(),
            BaseRing::PrimeField(p) => format!("Fp:{p}"),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, BaseRing::Integers)
    }

    pub fn zero(&self) -> Coeff {
        match self {
            BaseRing::Integers => Coeff::Int(BigInt::zero()),
            BaseRing::Rationals => Coeff::Rat(BigRational::zero()),
            BaseRing::PrimeField(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            BaseRing::Integers => Coeff::Int(BigInt::from(v)),
            BaseRing::Rationals => Coeff::Rat(BigRational::from(BigInt::from(v))),
            BaseRing::PrimeField(p) => {
                let p = *p as i64;
                Coeff::Fp(v.rem_euclid(p) as u64)
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            BaseRing::PrimeField(p) => *p as u64,
            _ => panic!("modulus of a ring without one"),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % self.modulus()),
            _ => panic!("coefficient from a different ring"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Int(x) => Coeff::Int(-x),
            Coeff::Rat(x) => Coeff::Rat(-x),
            Coeff::Fp(x) => {
                let p = self.modulus();
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x * y) % self.modulus()),
            _ => panic!("coefficient from a different ring"),
        }
    }

    /// Multiplicative inverse, or `None` when `a` is not a unit.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match a {
            Coeff::Int(x) => {
                if x.abs().is_one() {
                    Some(Coeff::Int(x.clone()))
                } else {
                    None
                }
            }
            Coeff::Rat(x) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(x.recip()))
                }
            }
            Coeff::Fp(x) => {
                if *x == 0 {
                    None
                } else {
                    Some(Coeff::Fp(pow_mod(*x, self.modulus() - 2, self.modulus())))
                }
            }
        }
    }

    /// Exact division `a / b`; `None` when `b` does not divide `a`.
    pub fn divide(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        if self.is_zero(b) {
            return None;
        }
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => {
                let (q, r) = num_integer::Integer::div_rem(x, y);
                if r.is_zero() {
                    Some(Coeff::Int(q))
                } else {
                    None
                }
            }
            _ => self.inv(b).map(|bi| self.mul(a, &bi)),
        }
    }

    pub fn coeff_string(&self, a: &Coeff) -> String {
        match a {
            Coeff::Int(x) => x.to_string(),
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => x.to_string(),
        }
    }

    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let bad = || Error::Parse(format!("bad coefficient {s:?} for ring {}", self.label()));
        match self {
            BaseRing::Integers => BigInt::from_str(s).map(Coeff::Int).map_err(|_| bad()),
            BaseRing::Rationals => {
                let (ns, ds) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n = BigInt::from_str(ns).map_err(|_| bad())?;
                let d = BigInt::from_str(ds).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Coeff::Rat(BigRational::new(n, d)))
            }
            BaseRing::PrimeField(p) => {
                let v = i64::from_str(s).map_err(|_| bad())?;
                Ok(self.from_i64(v.rem_euclid(*p as i64)))
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_gate() {
        assert!(BaseRing::prime_field(2).is_ok());
        assert!(BaseRing::prime_field(11).is_ok());
        assert!(BaseRing::prime_field(2147483647).is_ok());
        assert_eq!(BaseRing::prime_field(1), Err(Error::NonPrimeModulus(1)));
        assert_eq!(BaseRing::prime_field(9), Err(Error::NonPrimeModulus(9)));
        assert_eq!(BaseRing::prime_field(91), Err(Error::NonPrimeModulus(91)));
        assert!(BaseRing::prime_field(1u64 << 32).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for r in [
            BaseRing::Integers,
            BaseRing::Rationals,
            BaseRing::PrimeField(7),
        ] {
            assert_eq!(BaseRing::parse(&r.label()).unwrap(), r);
        }
        assert!(BaseRing::parse("R").is_err());
        assert!(BaseRing::parse("Fp:10").is_err());
    }

    #[test]
    fn field_inverses() {
        let f = BaseRing::prime_field(11).unwrap();
        for v in 1..11i64 {
            let a = f.from_i64(v);
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), f.one());
        }
        assert_eq!(f.inv(&f.zero()), None);

        let z = BaseRing::Integers;
        assert_eq!(z.inv(&z.from_i64(-1)), Some(z.from_i64(-1)));
        assert_eq!(z.inv(&z.from_i64(2)), None);

        let q = BaseRing::Rationals;
        let two_thirds = q.parse_coeff("2/3").unwrap();
        let inv = q.inv(&two_thirds).unwrap();
        assert_eq!(q.coeff_string(&inv), "3/2");
    }

    #[test]
    fn rational_parse_normalizes() {
        let q = BaseRing::Rationals;
        assert_eq!(q.coeff_string(&q.parse_coeff("4/6").unwrap()), "2/3");
        assert_eq!(q.coeff_string(&q.parse_coeff("-4/2").unwrap()), "-2");
        assert_eq!(q.coeff_string(&q.parse_coeff("3/-6").unwrap()), "-1/2");
        assert!(q.parse_coeff("1/0").is_err());
    }

    #[test]
    fn exact_integer_division() {
        let z = BaseRing::Integers;
        assert_eq!(
            z.divide(&z.from_i64(6), &z.from_i64(-3)),
            Some(z.from_i64(-2))
        );
        assert_eq!(z.divide(&z.from_i64(7), &z.from_i64(3)), None);
        assert_eq!(z.divide(&z.from_i64(7), &z.from_i64(0)), None);
    }
}
