//! Piecewise-linear based loops in the plane with exact rational
//! coordinates, the configuration metrics with certified bounds, winding
//! degrees, the small-essential-loop construction, and the sweep that
//! converts loops to braid words.

pub mod config;
pub mod construct;
pub mod interval;
pub mod plloop;
pub mod supdist;
pub mod sweep;
pub mod testfamily;
pub mod winding;

use alloc::string::String;
use core::fmt;

use num_rational::BigRational;

use crate::word::BraidError;

pub use config::{
    d_prod_cfg, d_sum_cfg, d_vague_cfg, vague_summand, CertifiedBound, Configuration, MetricKind,
};
pub use construct::{
    beta_loop, circle_loop, make_small_essential_loop, schedule_concat, schedule_tails,
    SmallLoopWitness,
};
pub use interval::Interval;
pub use plloop::{Breakpoint, PLLoop};
pub use supdist::sup_dist_certified;
pub use sweep::loop_to_word;
pub use testfamily::{bump_index, phi, Bump};
pub use winding::winding_degree;

/// Exact rational scalar used throughout the geometry layer.
pub type Rational = BigRational;

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub re: Rational,
    pub im: Rational,
}

impl Point {
    pub fn new(re: Rational, im: Rational) -> Self {
        Point { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Point {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

/// Errors from the geometry layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeomError {
    /// A loop violates a shape invariant (breakpoint times, basepoints).
    BadLoop(String),
    /// Two strands meet at a common time.
    Collision {
        strand_a: u32,
        strand_b: u32,
        t: Rational,
    },
    /// A sweep event is not generic (tangential touch or multiple
    /// coincidence); carries the offending time.
    NonGeneric {
        t: Rational,
        reason: String,
    },
    /// A parameter is out of range.
    BadRange(String),
    /// A concatenation stage violates its support or avoidance contract.
    StageViolation {
        stage: u32,
        reason: String,
    },
    Braid(BraidError),
}

impl From<BraidError> for GeomError {
    fn from(e: BraidError) -> Self {
        GeomError::Braid(e)
    }
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::BadLoop(msg) => write!(f, "invalid loop: {msg}"),
            GeomError::Collision {
                strand_a,
                strand_b,
                t,
            } => {
                write!(f, "strands {strand_a} and {strand_b} collide at t = {t}")
            }
            GeomError::NonGeneric { t, reason } => {
                write!(f, "non-generic event at t = {t}: {reason}")
            }
            GeomError::BadRange(msg) => write!(f, "{msg}"),
            GeomError::StageViolation { stage, reason } => {
                write!(f, "stage {stage} violates its contract: {reason}")
            }
            GeomError::Braid(e) => write!(f, "{e}"),
        }
    }
}

/// `2^{-k}` as a rational.
pub fn pow2_neg(k: u32) -> Rational {
    crate::tower::pow2_neg(k)
}

/// Squared distance from a point to a segment, exactly.
pub fn dist_sq_point_segment(q: &Point, a: &Point, b: &Point) -> Rational {
    use num_traits::Zero;
    let v = b.sub(a);
    let w = q.sub(a);
    let vv = v.norm_sq();
    if vv.is_zero() {
        return w.norm_sq();
    }
    let s = (&w.re * &v.re + &w.im * &v.im) / &vv;
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    let s = if s < zero {
        zero
    } else if s > one {
        one
    } else {
        s
    };
    let proj = a.add(&v.scale(&s));
    q.sub(&proj).norm_sq()
}
