//! Built-in loop constructions: circling loops (band generators and
//! small essential loops) and schedule concatenations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::word::BraidWord;

use super::config::{CertifiedBound, Configuration};
use super::plloop::{Breakpoint, PLLoop};
use super::supdist::sup_dist_certified;
use super::sweep::loop_to_word;
use super::{dist_sq_point_segment, pow2_neg, GeomError, Point, Rational};

/// Twelve exact rational points on the unit circle, counterclockwise from
/// the angle with cosine 4/5.
fn unit_circle_points() -> [(i64, i64, i64); 12] {
    // (numerator of cos, numerator of sin, denominator)
    [
        (4, 3, 5),
        (3, 4, 5),
        (0, 1, 1),
        (-3, 4, 5),
        (-4, 3, 5),
        (-1, 0, 1),
        (-4, -3, 5),
        (-3, -4, 5),
        (0, -1, 1),
        (3, -4, 5),
        (4, -3, 5),
        (1, 0, 1),
    ]
}

/// The loop in which strand `mover` walks over to `target` above the real
/// axis, traverses a counterclockwise 12-gon of radius `rho` inscribed in
/// the circle around `target`, and walks back. All other strands are
/// constant. Requires `target < mover` and `0 < rho < 1/2`.
pub fn circle_loop(mover: u32, target: u32, rho: &Rational) -> Result<PLLoop, GeomError> {
    if target < 1 || mover <= target {
        return Err(GeomError::BadRange(format!(
            "circle loop needs 1 <= target < mover, got target {target}, mover {mover}"
        )));
    }
    if !rho.is_positive() || *rho >= Rational::new(1.into(), 2.into()) {
        return Err(GeomError::BadRange(
            "circle radius must lie in (0, 1/2)".into(),
        ));
    }
    let center = Configuration::home(target);
    let home = Configuration::home(mover);
    let verts: Vec<Point> = unit_circle_points()
        .iter()
        .map(|&(cx, cy, d)| {
            let dx = Rational::new(cx.into(), d.into()) * rho;
            let dy = Rational::new(cy.into(), d.into()) * rho;
            Point::new(&center.re + dx, &center.im + dy)
        })
        .collect();
    let quarter = Rational::new(1.into(), 4.into());
    let step = Rational::new(1.into(), 24.into());
    let mut path = Vec::with_capacity(15);
    path.push(Breakpoint::new(Rational::zero(), home.clone()));
    path.push(Breakpoint::new(quarter.clone(), verts[0].clone()));
    for k in 1..=12usize {
        let t = &quarter + Rational::from_integer((k as i64).into()) * &step;
        path.push(Breakpoint::new(t, verts[k % 12].clone()));
    }
    path.push(Breakpoint::new(Rational::one(), home));
    let mut paths = BTreeMap::new();
    paths.insert(mover, path);
    let gamma = PLLoop::from_paths(paths)?;
    gamma.validate()?;
    Ok(gamma)
}

/// The band-generator loop: strand `m` circles the puncture `1` once
/// positively (`m >= 3`). Its level-m word is equivalent to the band
/// generator `a_m`.
pub fn beta_loop(m: u32) -> Result<PLLoop, GeomError> {
    if m < 3 {
        return Err(GeomError::BadRange(format!(
            "beta loop needs m >= 3, got {m}"
        )));
    }
    circle_loop(m, 1, &Rational::new(1.into(), 5.into()))
}

/// Output of [`make_small_essential_loop`]: the loop, the chosen
/// parameters, the certified sup-distance bound, and the (nontrivial)
/// level-m braid word.
#[derive(Clone, Debug)]
pub struct SmallLoopWitness {
    pub gamma: PLLoop,
    pub j_budget: u32,
    pub m: u32,
    pub rho: Rational,
    pub sup_bound: CertifiedBound,
    pub word: BraidWord,
}

/// An essential loop inside the epsilon-ball of the basepoint: choose `J`
/// with `2^{-J} < eps/2` and `m = J + 3`, and let strand `m` circle the
/// puncture `m - 1` at radius `1/5`. The loop stays outside the disk of
/// radius `J`, so the certified sup-distance is below `eps` while the
/// level-m word is a nontrivial positive square.
pub fn make_small_essential_loop(eps: &Rational) -> Result<SmallLoopWitness, GeomError> {
    if !eps.is_positive() || *eps > Rational::one() {
        return Err(GeomError::BadRange("epsilon must lie in (0, 1]".into()));
    }
    let half_eps = eps / Rational::from_integer(2.into());
    let mut j_budget = 1u32;
    while pow2_neg(j_budget) >= half_eps {
        j_budget += 1;
    }
    let m = j_budget + 3;
    let rho = Rational::new(1.into(), 5.into());
    let gamma = circle_loop(m, m - 1, &rho)?;
    let sup_bound = sup_dist_certified(&gamma, j_budget, 16);
    let word = loop_to_word(&gamma, m)?;
    Ok(SmallLoopWitness {
        gamma,
        j_budget,
        m,
        rho,
        sup_bound,
        word,
    })
}

/// Concatenate stage loops on the dyadic windows `[1-2^{1-k}, 1-2^{-k}]`.
/// Stage `k` (1-based) must fix all strands below `k` and keep its strands
/// above `k` outside the closed disk of radius `k - 1`; violations are
/// reported with the stage index.
pub fn schedule_concat(stages: &[PLLoop]) -> Result<PLLoop, GeomError> {
    for (idx, stage) in stages.iter().enumerate() {
        let k = idx as u32 + 1;
        validate_stage(stage, k)?;
    }
    assemble(stages)
}

/// The tail sub-loops of a schedule: for each `k`, the concatenation of
/// stages `k..` rescaled to `[0, 1]`. Useful for certifying that the tail
/// sup-distances shrink.
pub fn schedule_tails(stages: &[PLLoop]) -> Result<Vec<PLLoop>, GeomError> {
    (0..stages.len()).map(|k| assemble(&stages[k..])).collect()
}

fn validate_stage(stage: &PLLoop, k: u32) -> Result<(), GeomError> {
    let radius = Rational::from_integer(((k - 1) as i64).into());
    let radius_sq = &radius * &radius;
    for strand in stage.support() {
        if strand < k {
            return Err(GeomError::StageViolation {
                stage: k,
                reason: format!("moves strand {strand} below its level"),
            });
        }
        if strand > k {
            let path = stage.path(strand).unwrap();
            for w in path.windows(2) {
                let d_sq = dist_sq_point_segment(&Point::from_ints(0, 0), &w[0].pos, &w[1].pos);
                if d_sq <= radius_sq {
                    return Err(GeomError::StageViolation {
                        stage: k,
                        reason: format!(
                            "strand {strand} enters the closed disk of radius {}",
                            k - 1
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

fn assemble(stages: &[PLLoop]) -> Result<PLLoop, GeomError> {
    if stages.is_empty() {
        return Ok(PLLoop::constant());
    }
    let mut strands: Vec<u32> = stages.iter().flat_map(|s| s.support()).collect();
    strands.sort_unstable();
    strands.dedup();
    let windows: Vec<(Rational, Rational)> = (1..=stages.len() as u32)
        .map(|k| {
            (
                Rational::one() - pow2_neg(k - 1),
                Rational::one() - pow2_neg(k),
            )
        })
        .collect();
    let mut paths = BTreeMap::new();
    for &s in &strands {
        let home = Configuration::home(s);
        let mut path = Vec::new();
        path.push(Breakpoint::new(Rational::zero(), home.clone()));
        for (stage, (t_in, t_out)) in stages.iter().zip(&windows) {
            if let Some(p) = stage.path(s) {
                let span = t_out - t_in;
                for bp in p {
                    let t = t_in + &bp.t * &span;
                    if path.last().map(|last: &Breakpoint| last.t == t) == Some(true) {
                        continue; // stage boundary, both at home
                    }
                    path.push(Breakpoint::new(t, bp.pos.clone()));
                }
            }
        }
        if path.last().map(|last| last.t == Rational::one()) != Some(true) {
            path.push(Breakpoint::new(Rational::one(), home));
        }
        paths.insert(s, path);
    }
    PLLoop::from_paths(paths)
}
