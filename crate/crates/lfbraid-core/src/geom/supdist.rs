//! Certified upper bounds on the sup-distance of a loop from the constant
//! loop at the basepoint, in the (capped) sum metric.
//!
//! The bound is computed segment by segment. On a time interval where all
//! strands are linear, the distance of a strand from its home is convex,
//! so its maximum sits at the endpoints; test-function values are bounded
//! through the exact point-segment distance to the bump center. The
//! reported bound is sound: the true supremum lies in
//! `[exact_part, exact_part + tail_bound]`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::config::{d_sum_cfg, CertifiedBound, Configuration, MetricKind};
use super::interval::{norm_from_sq, Interval};
use super::plloop::PLLoop;
use super::testfamily::{phi, Bump};
use super::{dist_sq_point_segment, pow2_neg, Point, Rational};

/// A certified bound on `sup_t min(d_sum(gamma(t), basepoint), 1)`.
///
/// `j_budget` truncates the vague metric; `grid` subdivides every merged
/// segment to tighten the per-segment bounds.
pub fn sup_dist_certified(gamma: &PLLoop, j_budget: u32, grid: u32) -> CertifiedBound {
    assert!(j_budget >= 1);
    let grid = grid.max(1);
    if gamma.is_constant() {
        return CertifiedBound::zero(MetricKind::Sup);
    }
    let bumps: Vec<(u32, Bump)> = (1..=j_budget)
        .filter_map(|j| phi(&BigUint::from(j)).map(|b| (j, b)))
        .collect();
    let moving: Vec<u32> = gamma.support().collect();
    let base = Configuration::basepoint();
    let one = Rational::one();

    let merged = gamma.merged_times();
    let mut upper = Rational::from_integer(0.into());
    let mut lower = Rational::from_integer(0.into());

    // lower bound: sample exactly at the breakpoint and grid times
    let sample_lower = |t: &Rational, lower: &mut Rational| {
        let lo = d_sum_cfg(&gamma.at(t), &base, j_budget).exact_part;
        let lo = if lo > one { one.clone() } else { lo };
        if lo > *lower {
            *lower = lo;
        }
    };
    sample_lower(&merged[0], &mut lower);

    for w in merged.windows(2) {
        for g in 0..grid {
            let t0 = interpolate(&w[0], &w[1], g, grid);
            let t1 = interpolate(&w[0], &w[1], g + 1, grid);
            sample_lower(&t1, &mut lower);
            let piece = piece_upper(gamma, &moving, &bumps, j_budget, &t0, &t1);
            let piece = if piece > one { one.clone() } else { piece };
            if piece > upper {
                upper = piece;
            }
        }
    }
    if upper < lower {
        upper = lower.clone();
    }
    CertifiedBound {
        kind: MetricKind::Sup,
        exact_part: lower.clone(),
        tail_bound: upper - lower,
    }
}

fn interpolate(a: &Rational, b: &Rational, k: u32, grid: u32) -> Rational {
    let s = Rational::new((k as i64).into(), (grid as i64).into());
    a + (b - a) * s
}

fn piece_upper(
    gamma: &PLLoop,
    moving: &[u32],
    bumps: &[(u32, Bump)],
    j_budget: u32,
    t0: &Rational,
    t1: &Rational,
) -> Rational {
    let mut displaced = false;
    let mut prod = Rational::from_integer(0.into());
    let segments: Vec<(u32, Point, Point, Point)> = moving
        .iter()
        .map(|&m| {
            let home = Configuration::home(m);
            (m, gamma.position(m, t0), gamma.position(m, t1), home)
        })
        .collect();
    for (m, p0, p1, home) in &segments {
        let d0 = p0.sub(home).norm_sq();
        let d1 = p1.sub(home).norm_sq();
        if d0 == Rational::from_integer(0.into()) && d1 == d0 {
            continue;
        }
        displaced = true;
        // |gamma_m(t) - m| is convex on the segment: max at the endpoints
        let dmax_sq = if d0 > d1 { d0 } else { d1 };
        let term = if dmax_sq >= Rational::one() {
            Rational::one()
        } else {
            norm_from_sq(&dmax_sq).min_one().hi
        };
        prod += pow2_neg(*m) * term;
    }
    if !displaced {
        return Rational::from_integer(0.into());
    }
    let mut vague = pow2_neg(j_budget); // series tail of the vague metric
    for (j, bump) in bumps {
        let mut u = Interval::zero();
        for (_, p0, p1, home) in &segments {
            let seg_range = phi_range_on_segment(bump, p0, p1);
            let home_val = bump.value(home);
            let diff = seg_range.sub(&home_val).abs();
            u = u.add(&diff);
        }
        vague += pow2_neg(*j) * u.ratio_compress().hi;
    }
    prod + vague
}

/// Range of a bump over a segment: the distance to the center is convex,
/// so it is minimized at the exact point-segment distance and maximized at
/// an endpoint; the bump value is monotone decreasing in the distance.
fn phi_range_on_segment(bump: &Bump, p0: &Point, p1: &Point) -> Interval {
    let dmin_sq = dist_sq_point_segment(&bump.center, p0, p1);
    let d0 = p0.sub(&bump.center).norm_sq();
    let d1 = p1.sub(&bump.center).norm_sq();
    let dmax_sq = if d0 > d1 { d0 } else { d1 };
    let hi = phi_at_dist_sq(bump, &dmin_sq).hi;
    let lo = phi_at_dist_sq(bump, &dmax_sq).lo;
    Interval::new(lo, hi)
}

fn phi_at_dist_sq(bump: &Bump, d_sq: &Rational) -> Interval {
    let r1_sq = &bump.r1 * &bump.r1;
    let r2_sq = &bump.r2 * &bump.r2;
    if *d_sq >= r2_sq {
        return Interval::zero();
    }
    if *d_sq <= r1_sq {
        return Interval::point(Rational::one());
    }
    let d = norm_from_sq(d_sq);
    let denom = &bump.r2 - &bump.r1;
    Interval::new((&bump.r2 - &d.hi) / &denom, (&bump.r2 - &d.lo) / &denom).clamp01()
}
