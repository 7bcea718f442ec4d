//! Sparse elements of monoid algebras R[M].
//!
//! An element is a finite map from exponent vectors (members of the
//! monoid) to nonzero coefficients. The map is a BTreeMap under the
//! lexicographic exponent order, which makes equality, iteration and
//! serialization canonical: equal elements have equal representations
//! byte for byte.

use crate::error::{Error, Result};
use crate::ring::base::{BaseRing, Coeff};
use crate::ring::exponent::{exp_int, ExponentVector};
use crate::ring::monoid::{MonoidKind, MonoidSpec};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A (base ring, exponent monoid) pair naming a monoid algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDesc {
    pub base: BaseRing,
    pub monoid: Arc<MonoidSpec>,
}

impl RingDesc {
    pub fn new(base: BaseRing, monoid: Arc<MonoidSpec>) -> RingDesc {
        RingDesc { base, monoid }
    }

    /// The plain base ring, seen as an algebra over the rank zero
    /// monoid.
    pub fn scalars(base: BaseRing) -> RingDesc {
        RingDesc::new(base, MonoidSpec::constants())
    }

    pub fn zero(&self) -> RingElement {
        RingElement::zero(self.clone())
    }

    pub fn one(&self) -> RingElement {
        RingElement::one(self.clone())
    }

    pub fn from_i64(&self, v: i64) -> RingElement {
        RingElement::constant(self.clone(), self.base.from_i64(v))
    }

    pub fn var(&self, index: usize) -> Result<RingElement> {
        let rank = self.monoid.rank();
        if index >= rank {
            return Err(Error::BadIndices(format!(
                "variable index {index} out of range for rank {rank}"
            )));
        }
        let mut coords = vec![0i128; rank];
        coords[index] = 1;
        RingElement::monomial(
            self.clone(),
            ExponentVector::from_ints(&coords),
            self.base.one(),
        )
    }

    pub fn label(&self) -> String {
        format!("{}[{:?}-rank{}]", self.base.label(), kind_tag(self.monoid.kind()), self.monoid.rank())
    }
}

fn kind_tag(kind: &MonoidKind) -> &'static str {
    match kind {
        MonoidKind::FreeMixed { .. } => "free",
        MonoidKind::Affine { .. } => "affine",
        MonoidKind::CDivisibleTruncation { .. } => "cdiv",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: RingDesc,
    terms: BTreeMap<ExponentVector, Coeff>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitAnswer {
    Yes(Box<RingElement>),
    No,
    Unknown(String),
}

impl RingElement {
    pub fn zero(ring: RingDesc) -> RingElement {
        RingElement {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: RingDesc) -> RingElement {
        let c = ring.base.one();
        RingElement::constant(ring, c)
    }

    pub fn constant(ring: RingDesc, c: Coeff) -> RingElement {
        let mut terms = BTreeMap::new();
        if !ring.base.is_zero(&c) {
            terms.insert(ExponentVector::zero(ring.monoid.rank()), c);
        }
        RingElement { ring, terms }
    }

    /// Single-term element; the exponent must belong to the monoid.
    pub fn monomial(ring: RingDesc, exp: ExponentVector, c: Coeff) -> Result<RingElement> {
        if !ring.monoid.membership(&exp)? {
            return Err(Error::NotInMonoid(format!(
                "exponent {:?}",
                exp.coord_strings()
            )));
        }
        let mut terms = BTreeMap::new();
        if !ring.base.is_zero(&c) {
            terms.insert(exp, c);
        }
        Ok(RingElement { ring, terms })
    }

    pub fn from_term_list(
        ring: RingDesc,
        list: Vec<(ExponentVector, Coeff)>,
    ) -> Result<RingElement> {
        let mut terms: BTreeMap<ExponentVector, Coeff> = BTreeMap::new();
        for (e, c) in list {
            if !ring.monoid.membership(&e)? {
                return Err(Error::NotInMonoid(format!(
                    "exponent {:?}",
                    e.coord_strings()
                )));
            }
            let cur = match terms.remove(&e) {
                Some(prev) => ring.base.add(&prev, &c),
                None => c,
            };
            if !ring.base.is_zero(&cur) {
                terms.insert(e, cur);
            }
        }
        Ok(RingElement { ring, terms })
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn base(&self) -> &BaseRing {
        &self.ring.base
    }

    pub fn monoid(&self) -> &Arc<MonoidSpec> {
        &self.ring.monoid
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant()
            .map(|c| c == &self.ring.base.one())
            .unwrap_or(false)
    }

    pub fn constant_coeff(&self) -> Coeff {
        let zero_exp = ExponentVector::zero(self.ring.monoid.rank());
        self.terms
            .get(&zero_exp)
            .cloned()
            .unwrap_or_else(|| self.ring.base.zero())
    }

    /// The coefficient if the element is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<&Coeff> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.is_zero() {
                    Some(c)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRing(format!(
                "{} vs {}",
                self.ring.label(),
                other.ring.label()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let cur = match terms.remove(e) {
                Some(prev) => self.ring.base.add(&prev, c),
                None => c.clone(),
            };
            if !self.ring.base.is_zero(&cur) {
                terms.insert(e.clone(), cur);
            }
        }
        Ok(RingElement {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> RingElement {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), self.ring.base.neg(c)))
            .collect();
        RingElement {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        let base = &self.ring.base;
        let mut terms: BTreeMap<ExponentVector, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                if cfg!(debug_assertions) && self.ring.monoid.as_free_mixed().is_some() {
                    debug_assert!(
                        self.ring.monoid.membership(&e).unwrap_or(false),
                        "product exponent escaped the monoid"
                    );
                }
                let c = base.mul(ca, cb);
                let cur = match terms.remove(&e) {
                    Some(prev) => base.add(&prev, &c),
                    None => c,
                };
                if !base.is_zero(&cur) {
                    terms.insert(e, cur);
                }
            }
        }
        Ok(RingElement {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scalar_mul(&self, c: &Coeff) -> RingElement {
        let base = &self.ring.base;
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, a)| {
                let p = base.mul(a, c);
                if base.is_zero(&p) {
                    None
                } else {
                    Some((e.clone(), p))
                }
            })
            .collect();
        RingElement {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Result<RingElement> {
        let mut acc = RingElement::one(self.ring.clone());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Unit test with witness: `Yes` carries the inverse. Sound for
    /// these algebras because the exponent monoids embed in Q^r, so
    /// the rings are integral domains and units are single terms with
    /// unit coefficient and invertible exponent.
    pub fn is_unit(&self) -> UnitAnswer {
        let Some((e, c)) = self.as_monomial() else {
            return UnitAnswer::No;
        };
        let Some(ci) = self.ring.base.inv(c) else {
            return UnitAnswer::No;
        };
        match self.ring.monoid.membership(&e.neg()) {
            Ok(true) => {
                let inv = RingElement::monomial(self.ring.clone(), e.neg(), ci)
                    .expect("membership verified");
                UnitAnswer::Yes(Box::new(inv))
            }
            Ok(false) => UnitAnswer::No,
            Err(err) => UnitAnswer::Unknown(err.to_string()),
        }
    }

    pub fn inverse(&self) -> Result<RingElement> {
        match self.is_unit() {
            UnitAnswer::Yes(inv) => Ok(*inv),
            UnitAnswer::No => Err(Error::NotUnit(self.to_string())),
            UnitAnswer::Unknown(why) => Err(Error::NotUnit(format!(
                "{self} (membership inconclusive: {why})"
            ))),
        }
    }

    /// Divide by a coefficient that must be invertible in the base.
    pub fn divide_by_coeff(&self, c: &Coeff) -> Result<RingElement> {
        match self.ring.base.inv(c) {
            Some(ci) => Ok(self.scalar_mul(&ci)),
            None => Err(Error::NotUnit(format!(
                "coefficient {}",
                self.ring.base.coeff_string(c)
            ))),
        }
    }

    /// Re-read this element in another ring over the same base and
    /// exponent rank, typically a monoid extension or restriction.
    /// Every term exponent must be a member of the target monoid.
    pub fn transport(&self, target: &RingDesc) -> Result<RingElement> {
        if target.base != self.ring.base {
            return Err(Error::MixedRing(
                "transport cannot change the coefficient ring".into(),
            ));
        }
        if target.monoid.rank() != self.ring.monoid.rank() {
            return Err(Error::DimensionMismatch(format!(
                "transport from rank {} to rank {}",
                self.ring.monoid.rank(),
                target.monoid.rank()
            )));
        }
        let terms: Vec<(ExponentVector, Coeff)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        RingElement::from_term_list(target.clone(), terms)
    }

    /// Substitution. Images in the same ring give partial
    /// substitution (unassigned variables persist); images in another
    /// ring require every occurring variable to be assigned.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, RingElement>,
        target: &RingDesc,
    ) -> Result<RingElement> {
        if target.base != self.ring.base {
            return Err(Error::MixedRing(
                "substitution cannot change the coefficient ring".into(),
            ));
        }
        for img in assignment.values() {
            if img.ring() != target {
                return Err(Error::MixedRing(
                    "assignment image outside the target ring".into(),
                ));
            }
        }
        let same_ring = *target == self.ring;
        let rank = self.ring.monoid.rank();
        let mut acc = RingElement::zero(target.clone());
        for (e, c) in &self.terms {
            let mut factor = RingElement::constant(target.clone(), c.clone());
            let mut residual = vec![exp_int(0); rank];
            for (i, exp) in e.coords().iter().enumerate() {
                if exp.is_zero() {
                    continue;
                }
                match assignment.get(&i) {
                    Some(img) => {
                        factor = factor.mul(&power_image(img, *exp)?)?;
                    }
                    None => {
                        if !same_ring {
                            return Err(Error::IncompleteAssignment(format!(
                                "variable {i} has no image"
                            )));
                        }
                        residual[i] = *exp;
                    }
                }
            }
            let residual = ExponentVector::new(residual);
            if !residual.is_zero() {
                let m = RingElement::monomial(
                    target.clone(),
                    residual,
                    target.base.one(),
                )?;
                factor = factor.mul(&m)?;
            }
            acc = acc.add(&factor)?;
        }
        Ok(acc)
    }

    /// Quotient and remainder. Euclidean structure exists for the
    /// integers (rank zero, |r| < |b| with r normalized to [0, |b|)),
    /// for fields (r = 0), and for univariate polynomials over a
    /// field (degree descent).
    pub fn euclidean_divmod(&self, b: &RingElement) -> Result<(RingElement, RingElement)> {
        self.check_same_ring(b)?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = &self.ring;
        if ring.monoid.is_constants() {
            match &ring.base {
                BaseRing::Integers => {
                    let a = match self.constant_coeff() {
                        Coeff::Int(x) => x,
                        _ => unreachable!(),
                    };
                    let bb = match b.constant_coeff() {
                        Coeff::Int(x) => x,
                        _ => unreachable!(),
                    };
                    let (mut q, mut r) = num_integer::Integer::div_rem(&a, &bb);
                    if num_traits::Signed::is_negative(&r) {
                        let babs = num_traits::Signed::abs(&bb);
                        r += &babs;
                        q = (&a - &r) / &bb;
                    }
                    return Ok((
                        RingElement::constant(ring.clone(), Coeff::Int(q)),
                        RingElement::constant(ring.clone(), Coeff::Int(r)),
                    ));
                }
                _ => {
                    let q = self.mul(&b.inverse()?)?;
                    return Ok((q, RingElement::zero(ring.clone())));
                }
            }
        }
        if ring.base.is_field() && ring.monoid.as_free_mixed() == Some((1, 0)) {
            return self.univariate_divmod(b);
        }
        Err(Error::NotEuclidean(format!(
            "ring {} has no division algorithm here",
            ring.label()
        )))
    }

    fn univariate_divmod(&self, b: &RingElement) -> Result<(RingElement, RingElement)> {
        let ring = self.ring.clone();
        let base = ring.base.clone();
        let (eb, cb) = b.terms.iter().next_back().expect("b nonzero");
        let db = eb.coords()[0].to_integer();
        let cbi = base.inv(cb).expect("field coefficient");
        let mut q = RingElement::zero(ring.clone());
        let mut r = self.clone();
        loop {
            let Some((er, cr)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))
            else {
                break;
            };
            let dr = er.coords()[0].to_integer();
            if dr < db {
                break;
            }
            let shift = ExponentVector::from_ints(&[dr - db]);
            let coef = base.mul(&cr, &cbi);
            let t = RingElement::monomial(ring.clone(), shift, coef)?;
            q = q.add(&t)?;
            r = r.sub(&t.mul(b)?)?;
        }
        Ok((q, r))
    }

    /// True if every coefficient is divisible by `c` in the base ring
    /// (always true over a field for nonzero c).
    pub fn coeffs_divisible_by(&self, c: &Coeff) -> bool {
        self.terms
            .values()
            .all(|a| self.ring.base.divide(a, c).is_some())
    }
}

fn power_image(img: &RingElement, exp: crate::ring::exponent::Exp) -> Result<RingElement> {
    if *exp.denom() == 1 {
        let n = *exp.numer();
        if n >= 0 {
            return img.pow(n as u32);
        }
        let inv = img.inverse()?;
        return inv.pow((-n) as u32);
    }
    // fractional power: only monomials with coefficient one make sense
    let Some((e, c)) = img.as_monomial() else {
        return Err(Error::Unsupported(format!(
            "fractional power of a non-monomial image {img}"
        )));
    };
    if c != &img.ring().base.one() {
        return Err(Error::Unsupported(
            "fractional power of a coefficient other than 1".into(),
        ));
    }
    RingElement::monomial(img.ring().clone(), e.scale(exp), c.clone())
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.ring.base.coeff_string(c);
            if e.is_zero() {
                write!(f, "{cs}")?;
                continue;
            }
            if cs != "1" {
                write!(f, "{cs}*")?;
            }
            let mut started = false;
            for (i, x) in e.coords().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                if *x.denom() == 1 && *x.numer() == 1 {
                    write!(f, "x{i}")?;
                } else if *x.denom() == 1 {
                    write!(f, "x{i}^{}", x.numer())?;
                } else {
                    write!(f, "x{i}^({}/{})", x.numer(), x.denom())?;
                }
            }
        }
        Ok(())
    }
}
