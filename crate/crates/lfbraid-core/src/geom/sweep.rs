//! The crossing sweep: convert a PL loop to a braid word on its first `n`
//! strands.
//!
//! Strands are kept sorted by real part; every time two adjacent strands
//! exchange real parts the sweep emits one Artin letter. The crossing sign
//! is fixed so that a counterclockwise full exchange of two strands maps
//! to a positive square, matching the sign convention of the word-level
//! winding numbers: a crossing is positive when the strand with the larger
//! imaginary part arrives from the right. Non-generic events (tangential
//! touches, triple coincidences of real parts) are rejected, never
//! perturbed.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::word::BraidWord;

use super::plloop::PLLoop;
use super::{GeomError, Rational};

struct Event {
    t: Rational,
    a: u32,
    b: u32,
    /// shared real part of the two strands at the event
    re: Rational,
    /// positive letter iff the higher strand comes from the right
    positive: bool,
}

/// Convert the loop restricted to strands `1..=n` into a braid word on `n`
/// strands, by the crossing sweep.
pub fn loop_to_word(gamma: &PLLoop, n: u32) -> Result<BraidWord, GeomError> {
    if n < 1 {
        return Err(GeomError::BadRange("level must be >= 1".into()));
    }
    let times = gamma.merged_times();
    let moving: Vec<u32> = gamma.support().filter(|&s| s <= n).collect();
    let mut events: Vec<Event> = Vec::new();

    // pairs with at least one moving strand
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for &a in &moving {
        for b in 1..=n {
            if b != a && (b > a || !moving.contains(&b)) {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();

    for &(a, b) in &pairs {
        collect_pair_events(gamma, a, b, &times, &mut events)?;
    }

    // sort by time; exact rational comparisons
    events.sort_by(|x, y| x.t.cmp(&y.t).then(x.re.cmp(&y.re)));

    // reject multiple coincidences at one time
    let mut k = 0;
    while k < events.len() {
        let mut j = k + 1;
        while j < events.len() && events[j].t == events[k].t {
            j += 1;
        }
        if j - k > 1 {
            for x in k..j {
                for y in x + 1..j {
                    let (e, f) = (&events[x], &events[y]);
                    let share = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
                    if share || e.re == f.re {
                        return Err(GeomError::NonGeneric {
                            t: e.t.clone(),
                            reason: "multiple strands share a real part".into(),
                        });
                    }
                }
            }
        }
        k = j;
    }

    // the sweep: order starts as 1..n by real part at the basepoint
    let mut order: Vec<u32> = (1..=n).collect();
    let mut letters: Vec<i32> = Vec::new();
    for e in &events {
        let pa = order.iter().position(|&s| s == e.a).unwrap();
        let pb = order.iter().position(|&s| s == e.b).unwrap();
        let (left, right) = if pa < pb { (pa, pb) } else { (pb, pa) };
        if right != left + 1 {
            return Err(GeomError::NonGeneric {
                t: e.t.clone(),
                reason: format!(
                    "strands {} and {} exchange real parts while not adjacent",
                    e.a, e.b
                ),
            });
        }
        let index = left as i32 + 1;
        letters.push(if e.positive { index } else { -index });
        order.swap(left, right);
    }
    Ok(BraidWord::from_letters(n, letters).expect("indices in range"))
}

/// Find all real-part exchanges of strands `a < b`, verifying genericity.
fn collect_pair_events(
    gamma: &PLLoop,
    a: u32,
    b: u32,
    times: &[Rational],
    events: &mut Vec<Event>,
) -> Result<(), GeomError> {
    // zeros of f(t) = re_a(t) - re_b(t), piecewise linear on merged times
    let mut zeros: Vec<Rational> = Vec::new();
    for w in times.windows(2) {
        let (t0, t1) = (&w[0], &w[1]);
        let f0 = &gamma.position(a, t0).re - &gamma.position(b, t0).re;
        let f1 = &gamma.position(a, t1).re - &gamma.position(b, t1).re;
        if f0.is_zero() && f1.is_zero() {
            return Err(GeomError::NonGeneric {
                t: t0.clone(),
                reason: format!("strands {a} and {b} share real parts on an interval"),
            });
        }
        if f0.is_zero() {
            zeros.push(t0.clone());
        } else if (f0.is_positive() && f1.is_negative()) || (f0.is_negative() && f1.is_positive()) {
            let s = &f0 / (&f0 - &f1);
            zeros.push(t0 + s * (t1 - t0));
        }
        // a zero exactly at t1 is collected when the next window starts
    }
    let one = num_traits::One::one();
    if zeros.iter().any(|z| z.is_zero() || *z == one) {
        return Err(GeomError::NonGeneric {
            t: Rational::zero(),
            reason: format!("strands {a} and {b} meet in real part at the basepoint"),
        });
    }
    zeros.sort();
    zeros.dedup();

    for (k, z) in zeros.iter().enumerate() {
        // signs strictly before and after the event
        let prev = if k == 0 {
            Rational::zero()
        } else {
            zeros[k - 1].clone()
        };
        let next = if k + 1 < zeros.len() {
            zeros[k + 1].clone()
        } else {
            one.clone()
        };
        let before_t = (&prev + z) / Rational::from_integer(2.into());
        let after_t = (z + &next) / Rational::from_integer(2.into());
        let f_before = &gamma.position(a, &before_t).re - &gamma.position(b, &before_t).re;
        let f_after = &gamma.position(a, &after_t).re - &gamma.position(b, &after_t).re;
        if f_before.is_zero()
            || f_after.is_zero()
            || (f_before.is_positive() == f_after.is_positive())
        {
            return Err(GeomError::NonGeneric {
                t: z.clone(),
                reason: format!("tangential real-part touch of strands {a} and {b}"),
            });
        }
        let pa = gamma.position(a, z);
        let pb = gamma.position(b, z);
        debug_assert_eq!(pa.re, pb.re);
        if pa.im == pb.im {
            return Err(GeomError::Collision {
                strand_a: a,
                strand_b: b,
                t: z.clone(),
            });
        }
        // which strand is higher, and does it come from the right?
        let higher_is_a = pa.im > pb.im;
        // f_before > 0 means a was to the right of b before the event
        let higher_from_right = if higher_is_a {
            f_before.is_positive()
        } else {
            f_before.is_negative()
        };
        events.push(Event {
            t: z.clone(),
            a,
            b,
            re: pa.re,
            positive: higher_from_right,
        });
    }
    Ok(())
}
