//! Locally finite configurations with finite support over the integer
//! basepoint, and the product, vague, and sum metrics with certified
//! rational bounds.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::interval::{norm_from_sq, Interval};
use super::testfamily::phi;
use super::{pow2_neg, Point, Rational};

/// A configuration that agrees with the basepoint `(1, 2, 3, ...)` outside
/// a finite set of moved strands.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Configuration {
    moved: BTreeMap<u32, Point>,
}

impl Configuration {
    /// The basepoint: strand `k` at the integer `k`.
    pub fn basepoint() -> Self {
        Configuration {
            moved: BTreeMap::new(),
        }
    }

    pub fn home(strand: u32) -> Point {
        Point::from_ints(strand as i64, 0)
    }

    pub fn set(&mut self, strand: u32, pos: Point) {
        assert!(strand >= 1);
        self.moved.insert(strand, pos);
    }

    pub fn with(mut self, strand: u32, pos: Point) -> Self {
        self.set(strand, pos);
        self
    }

    pub fn position(&self, strand: u32) -> Point {
        self.moved
            .get(&strand)
            .cloned()
            .unwrap_or_else(|| Self::home(strand))
    }

    pub fn moved_strands(&self) -> impl Iterator<Item = u32> + '_ {
        self.moved.keys().copied()
    }
}

/// Which metric a certified bound refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricKind {
    Prod,
    Vague,
    Sum,
    Sup,
}

/// A certified evaluation: the true value lies in
/// `[exact_part, exact_part + tail_bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedBound {
    pub kind: MetricKind,
    pub exact_part: Rational,
    pub tail_bound: Rational,
}

impl CertifiedBound {
    pub fn zero(kind: MetricKind) -> Self {
        CertifiedBound {
            kind,
            exact_part: Rational::zero(),
            tail_bound: Rational::zero(),
        }
    }

    pub fn from_interval(kind: MetricKind, iv: &Interval) -> Self {
        CertifiedBound {
            kind,
            exact_part: iv.lo.clone(),
            tail_bound: iv.width(),
        }
    }

    /// Largest value consistent with the bound.
    pub fn upper(&self) -> Rational {
        &self.exact_part + &self.tail_bound
    }

    pub fn add(&self, other: &CertifiedBound, kind: MetricKind) -> CertifiedBound {
        CertifiedBound {
            kind,
            exact_part: &self.exact_part + &other.exact_part,
            tail_bound: &self.tail_bound + &other.tail_bound,
        }
    }
}

fn moved_union(x: &Configuration, y: &Configuration) -> Vec<u32> {
    let mut strands: Vec<u32> = x.moved_strands().chain(y.moved_strands()).collect();
    strands.sort_unstable();
    strands.dedup();
    strands
}

/// The product metric `sum_j 2^{-j} min(|x_j - y_j|, 1)`. Both
/// configurations share the canonical integer tail, so the series is a
/// finite sum; the tail bound collects only enclosure widths of irrational
/// norms. `_j_budget` is accepted for interface parity; the shared tail
/// makes it irrelevant here.
pub fn d_prod_cfg(x: &Configuration, y: &Configuration, _j_budget: u32) -> CertifiedBound {
    let mut total = Interval::zero();
    for j in moved_union(x, y) {
        let delta = x.position(j).sub(&y.position(j));
        if delta.is_zero() {
            continue;
        }
        let d_sq = delta.norm_sq();
        let term = if d_sq >= Rational::one() {
            Interval::point(Rational::one())
        } else {
            norm_from_sq(&d_sq).min_one()
        };
        total = total.add(&term.scale(&pow2_neg(j)));
    }
    CertifiedBound::from_interval(MetricKind::Prod, &total)
}

/// One summand `2^{-j} · t/(1+t)` of the vague metric, with
/// `t = |sum phi_j(x) - sum phi_j(y)|` over the points of the two
/// configurations.
pub fn vague_summand(j: &BigUint, x: &Configuration, y: &Configuration) -> Interval {
    let bump = match phi(j) {
        None => return Interval::zero(),
        Some(b) => b,
    };
    // strands moved in neither configuration contribute equally and cancel
    let mut diff = Interval::zero();
    for s in moved_union(x, y) {
        let vx = bump.value(&x.position(s));
        let vy = bump.value(&y.position(s));
        diff = diff.add(&vx.sub(&vy));
    }
    let t = diff.abs();
    let weight = pow2_neg_big(j);
    t.ratio_compress().scale(&weight)
}

fn pow2_neg_big(j: &BigUint) -> Rational {
    use num_bigint::BigInt;
    let exp = u64::try_from(j).expect("index fits in u64");
    Rational::new(BigInt::one(), BigInt::one() << exp as usize)
}

/// The vague metric truncated at index budget `J`: exact evaluation of the
/// first `J` summands plus the series tail `2^{-J}`. Identical
/// configurations are exactly at distance zero.
pub fn d_vague_cfg(x: &Configuration, y: &Configuration, j_budget: u32) -> CertifiedBound {
    assert!(j_budget >= 1);
    if x == y {
        return CertifiedBound::zero(MetricKind::Vague);
    }
    let mut total = Interval::zero();
    for j in 1..=j_budget {
        total = total.add(&vague_summand(&BigUint::from(j), x, y));
    }
    let mut out = CertifiedBound::from_interval(MetricKind::Vague, &total);
    out.tail_bound += pow2_neg(j_budget);
    out
}

/// The sum metric: product part plus vague part.
pub fn d_sum_cfg(x: &Configuration, y: &Configuration, j_budget: u32) -> CertifiedBound {
    d_prod_cfg(x, y, j_budget).add(&d_vague_cfg(x, y, j_budget), MetricKind::Sum)
}
