//! Exponent vectors with rational entries.
//!
//! Monoids with c-divisible truncation need exponents like v/c^k, so
//! coordinates are rationals. Each vector carries a denominator bound
//! D with D * coords integral; comparisons are lexicographic, which on
//! vectors sharing a bound agrees with lexicographic order of the
//! D-scaled integer vectors.

use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use std::cmp::Ordering;

pub type Exp = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    coords: Vec<Exp>,
    denominator_bound: u64,
}

pub fn exp_int(v: i128) -> Exp {
    Ratio::from_integer(v)
}

pub fn exp_frac(n: i128, d: i128) -> Exp {
    Ratio::new(n, d)
}

impl ExponentVector {
    /// Build from coordinates, computing the least denominator bound.
    pub fn new(coords: Vec<Exp>) -> ExponentVector {
        let mut d: i128 = 1;
        for c in &coords {
            d = d.lcm(c.denom());
        }
        ExponentVector {
            coords,
            denominator_bound: d as u64,
        }
    }

    /// Build with an explicit denominator bound, validating that the
    /// scaled coordinates are integral.
    pub fn with_bound(coords: Vec<Exp>, bound: u64) -> Result<ExponentVector> {
        if bound == 0 {
            return Err(Error::Parse("denominator bound must be positive".into()));
        }
        for c in &coords {
            if (c * exp_int(bound as i128)).denom() != &1 {
                return Err(Error::Parse(format!(
                    "coordinate {c} not integral after scaling by {bound}"
                )));
            }
        }
        Ok(ExponentVector {
            coords,
            denominator_bound: bound,
        })
    }

    pub fn from_ints(coords: &[i128]) -> ExponentVector {
        ExponentVector::new(coords.iter().map(|&v| exp_int(v)).collect())
    }

    pub fn zero(rank: usize) -> ExponentVector {
        ExponentVector::from_ints(&vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Exp] {
        &self.coords
    }

    pub fn denominator_bound(&self) -> u64 {
        self.denominator_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c.numer() == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| *c.denom() == 1)
    }

    /// Integer coordinates; `None` if any coordinate is fractional.
    pub fn integer_coords(&self) -> Option<Vec<i128>> {
        self.coords
            .iter()
            .map(|c| if *c.denom() == 1 { Some(*c.numer()) } else { None })
            .collect()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in exponent add");
        ExponentVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: Exp) -> ExponentVector {
        ExponentVector::new(self.coords.iter().map(|a| a * k).collect())
    }

    /// Coordinate strings, `num` or `num/den`, for serialization.
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords
            .iter()
            .map(|c| {
                if *c.denom() == 1 {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }

    pub fn parse_coords(parts: &[String]) -> Result<ExponentVector> {
        let mut coords = Vec::with_capacity(parts.len());
        for s in parts {
            let bad = || Error::Parse(format!("bad exponent coordinate {s:?}"));
            let (ns, ds) = match s.split_once('/') {
                Some((n, d)) => (n, d),
                None => (s.as_str(), "1"),
            };
            let n: i128 = ns.parse().map_err(|_| bad())?;
            let d: i128 = ds.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            coords.push(Ratio::new(n, d));
        }
        Ok(ExponentVector::new(coords))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_computed_and_validated() {
        let v = ExponentVector::new(vec![exp_frac(1, 2), exp_frac(1, 3)]);
        assert_eq!(v.denominator_bound(), 6);
        assert!(ExponentVector::with_bound(vec![exp_frac(1, 2)], 4).is_ok());
        assert!(ExponentVector::with_bound(vec![exp_frac(1, 3)], 4).is_err());
    }

    #[test]
    fn order_is_lexicographic() {
        let a = ExponentVector::from_ints(&[1, 5]);
        let b = ExponentVector::from_ints(&[2, 0]);
        let c = ExponentVector::from_ints(&[1, 6]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
        let h = ExponentVector::new(vec![exp_frac(1, 2)]);
        let one = ExponentVector::from_ints(&[1]);
        assert!(h < one);
    }

    #[test]
    fn strings_round_trip() {
        let v = ExponentVector::new(vec![exp_frac(3, 4), exp_int(-2)]);
        let s = v.coord_strings();
        assert_eq!(s, ["3/4", "-2"]);
        assert_eq!(ExponentVector::parse_coords(&s).unwrap(), v);
    }

    #[test]
    fn arithmetic() {
        let a = ExponentVector::from_ints(&[1, -2]);
        let b = ExponentVector::new(vec![exp_frac(1, 2), exp_int(2)]);
        let s = a.add(&b);
        assert_eq!(s.coords(), &[exp_frac(3, 2), exp_int(0)]);
        assert_eq!(s.neg().coords(), &[exp_frac(-3, 2), exp_int(0)]);
        assert_eq!(a.scale(exp_frac(1, 2)).coords(), &[exp_frac(1, 2), exp_int(-1)]);
    }
}
