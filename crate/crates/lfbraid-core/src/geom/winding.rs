//! Exact winding degree of a strand pair along a loop: the degree of the
//! normalized difference path, computed as the signed count of crossings
//! of the positive real axis.

use num_traits::{Signed, Zero};

use super::plloop::PLLoop;
use super::{GeomError, Point};

/// Degree of `(gamma_j - gamma_i) / |gamma_j - gamma_i|`. Fails if the
/// difference path meets the origin (a strand collision, excluded by the
/// loop invariants).
pub fn winding_degree(gamma: &PLLoop, i: u32, j: u32) -> Result<i64, GeomError> {
    if i == 0 || j == 0 || i == j {
        return Err(GeomError::BadRange(
            "winding needs two distinct strands".into(),
        ));
    }
    let times = gamma.merged_times();
    let verts: alloc::vec::Vec<Point> = times
        .iter()
        .map(|t| gamma.position(j, t).sub(&gamma.position(i, t)))
        .collect();
    let mut winding: i64 = 0;
    for k in 0..verts.len() - 1 {
        let (p, q) = (&verts[k], &verts[k + 1]);
        if p.is_zero() || q.is_zero() {
            return Err(GeomError::NonGeneric {
                t: times[k].clone(),
                reason: "difference path meets the origin".into(),
            });
        }
        // segment through the origin without a vertex there
        if origin_interior(p, q) {
            return Err(GeomError::NonGeneric {
                t: times[k].clone(),
                reason: "difference segment passes through the origin".into(),
            });
        }
        let up_p = p.im.is_positive();
        let up_q = q.im.is_positive();
        if up_p == up_q {
            continue;
        }
        // x-intercept of the segment on the real axis
        let x = (&p.im * &q.re - &q.im * &p.re) / (&p.im - &q.im);
        if x.is_positive() {
            winding += if up_q { 1 } else { -1 };
        } else if x.is_zero() {
            return Err(GeomError::NonGeneric {
                t: times[k].clone(),
                reason: "difference segment crosses exactly at the origin".into(),
            });
        }
    }
    Ok(winding)
}

fn origin_interior(p: &Point, q: &Point) -> bool {
    // origin strictly between p and q on the segment
    let cross = &p.re * &q.im - &p.im * &q.re;
    if !cross.is_zero() {
        return false;
    }
    // collinear with the origin: opposite directions means it lies between
    let dot = &p.re * &q.re + &p.im * &q.im;
    dot.is_negative()
}
