//! Commutative monoid specifications for exponents of monoid algebras.
//!
//! Three kinds are supported: free mixed monoids Z+^m x Z^n, finitely
//! generated (affine) submonoids of Z^r given by generator lists, and
//! c-divisible truncations {v : c^level * v in base}.
//!
//! Membership for affine monoids runs a depth-first search over
//! generator combinations. The search is conclusive whenever it can
//! be: vectors outside the linear span or the rational cone of the
//! generators are rejected outright, and for positive monoids a
//! strictly positive grading bounds the length of any representation,
//! so a failed search below that bound is a definite "no". Only when
//! the bound cannot be established below the configured search bound
//! does membership return a `BoundExceeded` error; it never reports a
//! silent "no" it cannot justify.

use crate::error::{Error, Result};
use crate::geometry::cone::RationalCone;
use crate::geometry::linalg::{self, Q};
use crate::ring::exponent::{exp_frac, exp_int, Exp, ExponentVector};
use num_traits::Zero;
use std::sync::Arc;

pub const DEFAULT_SEARCH_BOUND: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidKind {
    /// Product of copies of Z+ and Z, one factor per coordinate;
    /// `free[k]` is true when coordinate k is a full Z factor.
    FreeMixed {
        free: Vec<bool>,
    },
    Affine {
        generators: Vec<ExponentVector>,
    },
    CDivisibleTruncation {
        base: Arc<MonoidSpec>,
        c: u32,
        level: u32,
    },
}

#[derive(Debug, Clone)]
pub struct MonoidSpec {
    kind: MonoidKind,
    rank: usize,
    denominator_bound: u64,
    search_bound: u32,
    /// Absent only for free mixed monoids above the geometry rank
    /// cap; their membership is a sign check and needs no cone.
    cone: Option<RationalCone>,
    positive: bool,
    grading: Option<Vec<i128>>,
}

impl PartialEq for MonoidSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for MonoidSpec {}

impl MonoidSpec {
    /// Z+^poly x Z^laurent with the polynomial coordinates first.
    pub fn free_mixed(poly: usize, laurent: usize) -> Result<Arc<MonoidSpec>> {
        let mut free = vec![false; poly];
        free.extend(std::iter::repeat(true).take(laurent));
        MonoidSpec::free_mixed_axes(free)
    }

    /// Free mixed monoid with an explicit per-coordinate choice of
    /// Z+ (false) or Z (true).
    pub fn free_mixed_axes(free: Vec<bool>) -> Result<Arc<MonoidSpec>> {
        let rank = free.len();
        MonoidSpec::build(MonoidKind::FreeMixed { free }, rank, DEFAULT_SEARCH_BOUND)
    }

    /// The constant-exponent monoid {0}; its algebra is the base ring.
    pub fn constants() -> Arc<MonoidSpec> {
        MonoidSpec::free_mixed(0, 0).expect("rank zero monoid")
    }

    pub fn affine(rank: usize, generators: Vec<ExponentVector>) -> Result<Arc<MonoidSpec>> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::Parse(format!(
                    "generator rank {} does not match monoid rank {rank}",
                    g.rank()
                )));
            }
            if g.is_zero() {
                return Err(Error::Parse("zero generator in affine monoid".into()));
            }
        }
        MonoidSpec::build(MonoidKind::Affine { generators }, rank, DEFAULT_SEARCH_BOUND)
    }

    pub fn c_divisible(base: Arc<MonoidSpec>, c: u32, level: u32) -> Result<Arc<MonoidSpec>> {
        if c < 2 {
            return Err(Error::Parse(format!("divisibility constant c = {c} must be >= 2")));
        }
        let rank = base.rank;
        MonoidSpec::build(
            MonoidKind::CDivisibleTruncation { base, c, level },
            rank,
            DEFAULT_SEARCH_BOUND,
        )
    }

    pub fn with_search_bound(&self, bound: u32) -> Arc<MonoidSpec> {
        let mut m = self.clone();
        m.search_bound = bound;
        Arc::new(m)
    }

    fn build(kind: MonoidKind, rank: usize, search_bound: u32) -> Result<Arc<MonoidSpec>> {
        let denominator_bound = match &kind {
            MonoidKind::FreeMixed { .. } => 1,
            MonoidKind::Affine { generators } => {
                let mut d = 1u64;
                for g in generators {
                    d = num_integer::lcm(d, g.denominator_bound());
                }
                d
            }
            MonoidKind::CDivisibleTruncation { base, c, level } => {
                base.denominator_bound * (*c as u64).pow(*level)
            }
        };

        let gen_vectors = generator_vectors(&kind, rank);
        let ray_dirs: Vec<Vec<i128>> = gen_vectors
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| linalg::primitive(g.coords()))
            .collect();
        let cone = match RationalCone::new(rank, ray_dirs) {
            Ok(c) => Some(c),
            // free mixed monoids work without geometry at any rank;
            // the other kinds need their cone for membership and
            // positivity, so the cap stays binding for them
            Err(Error::RankTooLarge(_)) if matches!(kind, MonoidKind::FreeMixed { .. }) => None,
            Err(e) => return Err(e),
        };
        let positive = match &kind {
            MonoidKind::FreeMixed { free } => free.iter().all(|f| !*f),
            _ => cone
                .as_ref()
                .expect("non-free monoids always carry their cone")
                .is_pointed(),
        };
        let grading = match &cone {
            Some(cone) if positive && !cone.facet_normals().is_empty() => {
                let mut h = vec![0i128; rank];
                for n in cone.facet_normals() {
                    for (hi, ni) in h.iter_mut().zip(n) {
                        *hi += ni;
                    }
                }
                Some(h)
            }
            _ => None,
        };

        Ok(Arc::new(MonoidSpec {
            kind,
            rank,
            denominator_bound,
            search_bound,
            cone,
            positive,
            grading,
        }))
    }

    pub fn kind(&self) -> &MonoidKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn denominator_bound(&self) -> u64 {
        self.denominator_bound
    }

    pub fn search_bound(&self) -> u32 {
        self.search_bound
    }

    /// The rational cone spanned by the generators. Errors only for
    /// free mixed monoids above the geometry rank cap.
    pub fn cone(&self) -> Result<&RationalCone> {
        self.cone.as_ref().ok_or(Error::RankTooLarge(self.rank))
    }

    /// No nonzero element has its negative in the monoid.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn is_constants(&self) -> bool {
        self.rank == 0
    }

    /// The (poly, laurent) block sizes when this is a free mixed
    /// monoid in the canonical layout (all Z+ coordinates first).
    pub fn as_free_mixed(&self) -> Option<(usize, usize)> {
        match &self.kind {
            MonoidKind::FreeMixed { free } => {
                let poly = free.iter().take_while(|f| !**f).count();
                if free[poly..].iter().all(|f| *f) {
                    Some((poly, free.len() - poly))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Per-coordinate freeness flags for free mixed monoids.
    pub fn free_axes(&self) -> Option<&[bool]> {
        match &self.kind {
            MonoidKind::FreeMixed { free } => Some(free),
            _ => None,
        }
    }

    /// The smallest supported monoid containing this one in which the
    /// member `e` is invertible. Free mixed monoids stay free mixed:
    /// every coordinate in the support of `e` becomes a Z factor
    /// (exact, since the other generators recover each single inverse
    /// from the inverse of the product). Affine monoids gain -e as a
    /// generator; membership in the extension then relies on the
    /// bounded search. Truncations of c-divisible monoids are not
    /// extended.
    pub fn laurent_extension(self: &Arc<Self>, e: &ExponentVector) -> Result<Arc<MonoidSpec>> {
        if e.rank() != self.rank {
            return Err(Error::Parse(format!(
                "exponent rank {} does not match monoid rank {}",
                e.rank(),
                self.rank
            )));
        }
        if !self.membership(e)? {
            return Err(Error::NotInMonoid(format!(
                "cannot invert {:?}: not a member",
                e.coord_strings()
            )));
        }
        if matches!(self.membership(&e.neg()), Ok(true)) {
            return Ok(self.clone());
        }
        match &self.kind {
            MonoidKind::FreeMixed { free } => {
                let mut free = free.clone();
                for (k, c) in e.coords().iter().enumerate() {
                    if !c.is_zero() {
                        free[k] = true;
                    }
                }
                MonoidSpec::build(MonoidKind::FreeMixed { free }, self.rank, self.search_bound)
            }
            MonoidKind::Affine { generators } => {
                let mut gens = generators.clone();
                gens.push(e.neg());
                MonoidSpec::build(
                    MonoidKind::Affine { generators: gens },
                    self.rank,
                    self.search_bound,
                )
            }
            MonoidKind::CDivisibleTruncation { .. } => Err(Error::Unsupported(
                "inversion inside a c-divisible truncation".into(),
            )),
        }
    }

    /// A finite generating list. For free mixed monoids these are the
    /// unit vectors, with both signs on the Laurent block.
    pub fn generator_list(&self) -> Vec<ExponentVector> {
        generator_vectors(&self.kind, self.rank)
    }

    pub fn membership(&self, v: &ExponentVector) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::Parse(format!(
                "vector rank {} does not match monoid rank {}",
                v.rank(),
                self.rank
            )));
        }
        match &self.kind {
            MonoidKind::FreeMixed { free } => {
                if !v.is_integral() {
                    return Ok(false);
                }
                Ok(v
                    .coords()
                    .iter()
                    .zip(free)
                    .all(|(c, f)| *f || *c.numer() >= 0))
            }
            MonoidKind::Affine { generators } => self.affine_membership(generators, v),
            MonoidKind::CDivisibleTruncation { base, c, level } => {
                let scale = (*c as i128).pow(*level);
                base.membership(&v.scale(exp_int(scale)))
            }
        }
    }

    fn affine_membership(&self, generators: &[ExponentVector], v: &ExponentVector) -> Result<bool> {
        if v.is_zero() {
            return Ok(true);
        }
        if generators.is_empty() {
            return Ok(false);
        }
        let cone = self
            .cone
            .as_ref()
            .expect("affine monoids always carry their cone");
        if !cone.contains_q(v.coords()) {
            return Ok(false);
        }
        let budget = if let Some(h) = &self.grading {
            let hv = grade(h, v.coords());
            let min_g = generators
                .iter()
                .map(|g| grade(h, g.coords()))
                .min()
                .expect("nonempty generator list");
            debug_assert!(min_g > Q::zero());
            let max_len = (hv / min_g).floor().to_integer();
            if max_len < 0 {
                return Ok(false);
            }
            if max_len as u64 <= self.search_bound as u64 {
                Some(max_len as u32)
            } else {
                None
            }
        } else {
            None
        };
        let conclusive = budget.is_some();
        let budget = budget.unwrap_or(self.search_bound);
        let target: Vec<Exp> = v.coords().to_vec();
        if dfs(generators, 0, &target, budget, self.grading.as_deref()) {
            Ok(true)
        } else if conclusive {
            Ok(false)
        } else {
            Err(Error::BoundExceeded(format!(
                "affine membership for {:?} undecided within {} generator applications",
                v.coord_strings(),
                budget
            )))
        }
    }

    /// Enumerate members reachable with at most `bound` generator
    /// applications (including 0), deduplicated and sorted.
    pub fn enumerate_members(&self, bound: u32) -> Vec<ExponentVector> {
        let gens = self.generator_list();
        let mut seen: std::collections::BTreeSet<ExponentVector> = Default::default();
        let zero = ExponentVector::zero(self.rank);
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        for _ in 0..bound {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &gens {
                    let s = f.add(g);
                    if seen.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }
}

fn generator_vectors(kind: &MonoidKind, rank: usize) -> Vec<ExponentVector> {
    match kind {
        MonoidKind::FreeMixed { free } => {
            let mut out = Vec::new();
            for (i, f) in free.iter().enumerate() {
                let mut c = vec![0i128; rank];
                c[i] = 1;
                out.push(ExponentVector::from_ints(&c));
                if *f {
                    c[i] = -1;
                    out.push(ExponentVector::from_ints(&c));
                }
            }
            out
        }
        MonoidKind::Affine { generators } => generators.clone(),
        MonoidKind::CDivisibleTruncation { base, c, level } => {
            let scale = exp_frac(1, (*c as i128).pow(*level));
            base.generator_list()
                .iter()
                .map(|g| g.scale(scale))
                .collect()
        }
    }
}

fn grade(h: &[i128], v: &[Exp]) -> Q {
    h.iter().zip(v).map(|(hi, vi)| exp_int(*hi) * vi).sum()
}

fn dfs(gens: &[ExponentVector], i: usize, target: &[Exp], budget: u32, h: Option<&[i128]>) -> bool {
    if target.iter().all(|c| c.is_zero()) {
        return true;
    }
    if i == gens.len() || budget == 0 {
        return false;
    }
    if let Some(h) = h {
        if grade(h, target) < Q::zero() {
            return false;
        }
    }
    let g = gens[i].coords();
    let mut t: Vec<Exp> = target.to_vec();
    let mut m = 0u32;
    loop {
        if dfs(gens, i + 1, &t, budget - m, h) {
            return true;
        }
        m += 1;
        if m > budget {
            return false;
        }
        for (tc, gc) in t.iter_mut().zip(g) {
            *tc -= gc;
        }
    }
}
