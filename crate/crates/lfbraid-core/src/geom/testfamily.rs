//! The computable test-function family behind the vague metric.
//!
//! The j-th member is either identically zero or a radial bump
//! `clamp((r2 - |z - q|) / (r2 - r1), 0, 1)` with rational center and
//! radii. Bumps are enumerated by a pairing function and placed at indices
//! `j = 2^m (2k - 1)` where `m` bounds their support: the closure of the
//! support of the j-th member is contained in the disk of radius `j`, and
//! every rational triple `(q, r1, r2)` occurs at some index with plateau
//! radius `r1` and support radius `r2`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::interval::{norm_from_sq, Interval};
use super::{Point, Rational};

/// A radial bump: value 1 on the closed `r1`-ball around `center`, support
/// inside the open `r2`-ball, affine in between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bump {
    pub center: Point,
    pub r1: Rational,
    pub r2: Rational,
}

impl Bump {
    /// Recorded Lipschitz constant `1 / (r2 - r1)`.
    pub fn lipschitz(&self) -> Rational {
        Rational::one() / (&self.r2 - &self.r1)
    }

    /// Value enclosure at a point. Exact 0 and 1 outside/inside the radii;
    /// a tight enclosure on the affine ramp.
    pub fn value(&self, p: &Point) -> Interval {
        let d_sq = p.sub(&self.center).norm_sq();
        let r1_sq = &self.r1 * &self.r1;
        let r2_sq = &self.r2 * &self.r2;
        if d_sq >= r2_sq {
            return Interval::zero();
        }
        if d_sq <= r1_sq {
            return Interval::point(Rational::one());
        }
        let d = norm_from_sq(&d_sq);
        let denom = &self.r2 - &self.r1;
        let lo = (&self.r2 - &d.hi) / &denom;
        let hi = (&self.r2 - &d.lo) / &denom;
        Interval::new(lo, hi).clamp01()
    }

    /// Whether the closed disk of radius `m` contains the support closure.
    pub fn supported_in_radius(&self, m: &Rational) -> bool {
        if &self.r2 > m {
            return false;
        }
        let margin = m - &self.r2;
        self.center.norm_sq() <= &margin * &margin
    }
}

fn cantor(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + BigUint::one())) / BigUint::from(2u32) + b
}

fn uncantor(z: &BigUint) -> (BigUint, BigUint) {
    // w = floor((sqrt(8z+1) - 1) / 2)
    let eight_z_plus_1 = z * BigUint::from(8u32) + BigUint::one();
    let w = (eight_z_plus_1.sqrt() - BigUint::one()) / BigUint::from(2u32);
    let t = (&w * (&w + BigUint::one())) / BigUint::from(2u32);
    let b = z - t;
    let a = &w - &b;
    (a, b)
}

fn zigzag(n: &BigInt) -> BigUint {
    let two = BigInt::from(2);
    if n.is_negative() {
        (-(n * &two) - BigInt::one()).to_biguint().unwrap()
    } else {
        (n * &two).to_biguint().unwrap()
    }
}

fn unzigzag(u: &BigUint) -> BigInt {
    use num_integer::Integer;
    let i = BigInt::from(u.clone());
    let two = BigInt::from(2);
    if u.is_even() {
        i / two
    } else {
        -((i + BigInt::one()) / two)
    }
}

fn encode_rational(r: &Rational) -> BigUint {
    let z = zigzag(r.numer());
    let d = (r.denom() - BigInt::one()).to_biguint().unwrap();
    cantor(&z, &d)
}

fn decode_rational(u: &BigUint) -> Rational {
    let (z, d) = uncantor(u);
    let numer = unzigzag(&z);
    let denom = BigInt::from(d) + BigInt::one();
    Rational::new(numer, denom)
}

fn encode_point(p: &Point) -> BigUint {
    cantor(&encode_rational(&p.re), &encode_rational(&p.im))
}

fn decode_point(u: &BigUint) -> Point {
    let (a, b) = uncantor(u);
    Point::new(decode_rational(&a), decode_rational(&b))
}

/// The j-th test function: `None` stands for the zero function.
pub fn phi(index: &BigUint) -> Option<Bump> {
    if index.is_zero() {
        return None;
    }
    let m = index.trailing_zeros().unwrap_or(0);
    if m == 0 {
        return None; // odd indices are zero functions
    }
    let odd = index >> m;
    let k = (&odd + BigUint::one()) / BigUint::from(2u32);
    let nat = k - BigUint::one();
    let (point_code, radii_code) = uncantor(&nat);
    let (r1_code, r2_code) = uncantor(&radii_code);
    let center = decode_point(&point_code);
    let r1 = decode_rational(&r1_code);
    let r2 = decode_rational(&r2_code);
    if !r1.is_positive() || r2 <= r1 {
        return None;
    }
    let bump = Bump { center, r1, r2 };
    let m_rat = Rational::from_integer(BigInt::from(m));
    if !bump.supported_in_radius(&m_rat) {
        return None;
    }
    Some(bump)
}

/// The index at which this bump occurs in the enumeration.
pub fn bump_index(bump: &Bump) -> BigUint {
    let nat = cantor(
        &encode_point(&bump.center),
        &cantor(&encode_rational(&bump.r1), &encode_rational(&bump.r2)),
    );
    let k = nat + BigUint::one();
    // smallest m with |center| + r2 <= m
    let mut m: u64 = 1;
    loop {
        let m_rat = Rational::from_integer(BigInt::from(m));
        if bump.supported_in_radius(&m_rat) {
            break;
        }
        m += 1;
    }
    (BigUint::from(2u32) * &k - BigUint::one()) << (m as usize)
}
