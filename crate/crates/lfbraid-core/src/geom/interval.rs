//! Closed rational intervals and certified square-root enclosures.
//!
//! Norms of rational points are usually irrational; every predicate in the
//! crate compares squared norms exactly, and whenever a norm value itself
//! is needed it is enclosed in a rational interval whose width is folded
//! into the certified tail of the answer.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Bits of dyadic precision used for square-root enclosures.
pub const SQRT_BITS: u32 = 32;

/// A closed interval `[lo, hi]` of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Interval::point(Rational::zero())
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    /// Scale by a nonnegative rational.
    pub fn scale(&self, s: &Rational) -> Interval {
        debug_assert!(!s.is_negative());
        Interval {
            lo: &self.lo * s,
            hi: &self.hi * s,
        }
    }

    /// `|x|` over the interval.
    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            Interval {
                lo: -self.hi.clone(),
                hi: -self.lo.clone(),
            }
        } else {
            let hi = if -&self.lo > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            Interval {
                lo: Rational::zero(),
                hi,
            }
        }
    }

    /// `min(x, 1)` over the interval.
    pub fn min_one(&self) -> Interval {
        let one = Rational::one();
        Interval {
            lo: if self.lo > one {
                one.clone()
            } else {
                self.lo.clone()
            },
            hi: if self.hi > one { one } else { self.hi.clone() },
        }
    }

    /// Clamp into `[0, 1]`.
    pub fn clamp01(&self) -> Interval {
        let clamp = |x: &Rational| {
            if x.is_negative() {
                Rational::zero()
            } else if *x > Rational::one() {
                Rational::one()
            } else {
                x.clone()
            }
        };
        Interval {
            lo: clamp(&self.lo),
            hi: clamp(&self.hi),
        }
    }

    /// `x / (1 + x)` for `x >= 0`, monotone increasing.
    pub fn ratio_compress(&self) -> Interval {
        debug_assert!(!self.lo.is_negative());
        let f = |x: &Rational| x / (Rational::one() + x);
        Interval {
            lo: f(&self.lo),
            hi: f(&self.hi),
        }
    }
}

/// Certified enclosure of `sqrt(q)` for `q >= 0`. Exact (a point interval)
/// when `q` is a square of a rational; otherwise a dyadic enclosure of
/// width `1/(2^SQRT_BITS · denom(q))`.
pub fn sqrt_enclosure(q: &Rational) -> Interval {
    assert!(!q.is_negative(), "sqrt of a negative rational");
    if q.is_zero() {
        return Interval::zero();
    }
    let num = q.numer();
    let den = q.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        return Interval::point(Rational::new(sn, sd));
    }
    // sqrt(num/den) = sqrt(num*den)/den
    let s = num * den;
    let shifted = &s << (2 * SQRT_BITS);
    let t = shifted.sqrt();
    let scale = BigInt::one() << SQRT_BITS;
    let lo = Rational::new(t.clone(), &scale * den);
    let hi = Rational::new(t + BigInt::one(), &scale * den);
    Interval { lo, hi }
}

/// Enclosure of the Euclidean norm of a point, given its squared norm.
pub fn norm_from_sq(norm_sq: &Rational) -> Interval {
    sqrt_enclosure(norm_sq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_enclosure(&rat(9, 4)), Interval::point(rat(3, 2)));
        assert_eq!(sqrt_enclosure(&rat(0, 1)), Interval::zero());
        assert_eq!(sqrt_enclosure(&rat(1, 1)), Interval::point(rat(1, 1)));
    }

    #[test]
    fn irrational_roots_are_tightly_enclosed() {
        let e = sqrt_enclosure(&rat(2, 1));
        assert!(&e.lo * &e.lo <= rat(2, 1));
        assert!(&e.hi * &e.hi >= rat(2, 1));
        assert!(e.width() <= rat(1, 1 << 30));
    }

    #[test]
    fn interval_arithmetic() {
        let a = Interval::new(rat(-1, 2), rat(1, 3));
        assert_eq!(a.abs(), Interval::new(rat(0, 1), rat(1, 2)));
        let b = Interval::new(rat(2, 1), rat(3, 1));
        assert_eq!(b.min_one(), Interval::point(rat(1, 1)));
        let c = Interval::new(rat(1, 1), rat(3, 1));
        assert_eq!(c.ratio_compress(), Interval::new(rat(1, 2), rat(3, 4)));
        assert_eq!(a.clamp01(), Interval::new(rat(0, 1), rat(1, 3)));
    }
}
