//! Based piecewise-linear loops in the locally finite configuration space:
//! finitely many moving strands, each a closed PL path with rational
//! breakpoints, all other strands constant at their integers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::config::Configuration;
use super::{GeomError, Point, Rational};

/// A time-stamped position on a strand path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub t: Rational,
    pub pos: Point,
}

impl Breakpoint {
    pub fn new(t: Rational, pos: Point) -> Self {
        Breakpoint { t, pos }
    }
}

/// A based loop with finite moving support. Strand `m` of the basepoint
/// sits at the integer `m`; each supported strand carries a closed path
/// from its integer back to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLLoop {
    paths: BTreeMap<u32, Vec<Breakpoint>>,
}

impl PLLoop {
    /// The constant loop at the basepoint.
    pub fn constant() -> Self {
        PLLoop {
            paths: BTreeMap::new(),
        }
    }

    /// Build from strand paths, checking the shape invariants (times from 0
    /// to 1 strictly increasing, closed at the strand's integer).
    pub fn from_paths(paths: BTreeMap<u32, Vec<Breakpoint>>) -> Result<Self, GeomError> {
        for (&strand, path) in &paths {
            if strand < 1 {
                return Err(GeomError::BadLoop("strand indices start at 1".into()));
            }
            if path.len() < 2 {
                return Err(GeomError::BadLoop(format!(
                    "strand {strand} needs at least 2 breakpoints"
                )));
            }
            if !path[0].t.is_zero() || !path[path.len() - 1].t.is_one() {
                return Err(GeomError::BadLoop(format!(
                    "strand {strand} must span t = 0 to t = 1"
                )));
            }
            for w in path.windows(2) {
                if w[0].t >= w[1].t {
                    return Err(GeomError::BadLoop(format!(
                        "strand {strand} has non-increasing breakpoint times"
                    )));
                }
            }
            let home = Configuration::home(strand);
            if path[0].pos != home || path[path.len() - 1].pos != home {
                return Err(GeomError::BadLoop(format!(
                    "strand {strand} is not a based loop at its integer"
                )));
            }
        }
        Ok(PLLoop { paths })
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.paths.keys().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, strand: u32) -> Option<&[Breakpoint]> {
        self.paths.get(&strand).map(|v| v.as_slice())
    }

    pub fn paths(&self) -> &BTreeMap<u32, Vec<Breakpoint>> {
        &self.paths
    }

    /// Position of a strand at a time in `[0, 1]`.
    pub fn position(&self, strand: u32, t: &Rational) -> Point {
        match self.paths.get(&strand) {
            None => Configuration::home(strand),
            Some(path) => {
                // find the segment containing t
                let mut k = 0;
                while k + 2 < path.len() && path[k + 1].t <= *t {
                    k += 1;
                }
                let (a, b) = (&path[k], &path[k + 1]);
                if *t <= a.t {
                    return a.pos.clone();
                }
                if *t >= b.t {
                    return b.pos.clone();
                }
                let s = (t - &a.t) / (&b.t - &a.t);
                a.pos.add(&b.pos.sub(&a.pos).scale(&s))
            }
        }
    }

    /// The configuration at a time.
    pub fn at(&self, t: &Rational) -> Configuration {
        let mut c = Configuration::basepoint();
        for &s in self.paths.keys() {
            c.set(s, self.position(s, t));
        }
        c
    }

    /// Sorted union of all breakpoint times (always contains 0 and 1).
    pub fn merged_times(&self) -> Vec<Rational> {
        let mut ts: Vec<Rational> = alloc::vec![Rational::zero(), Rational::one()];
        for path in self.paths.values() {
            for bp in path {
                ts.push(bp.t.clone());
            }
        }
        ts.sort();
        ts.dedup();
        ts
    }

    /// Concatenation: `self` on `[0, 1/2]`, then `other` on `[1/2, 1]`.
    pub fn concat(&self, other: &PLLoop) -> Result<PLLoop, GeomError> {
        let half = Rational::new(1.into(), 2.into());
        let one = Rational::one();
        let mut paths: BTreeMap<u32, Vec<Breakpoint>> = BTreeMap::new();
        let mut strands: Vec<u32> = self.support().chain(other.support()).collect();
        strands.sort_unstable();
        strands.dedup();
        for s in strands {
            let home = Configuration::home(s);
            let mut path: Vec<Breakpoint> = Vec::new();
            match self.paths.get(&s) {
                Some(p) => {
                    for bp in p {
                        path.push(Breakpoint::new(&bp.t * &half, bp.pos.clone()));
                    }
                }
                None => {
                    path.push(Breakpoint::new(Rational::zero(), home.clone()));
                    path.push(Breakpoint::new(half.clone(), home.clone()));
                }
            }
            match other.paths.get(&s) {
                Some(p) => {
                    // first breakpoint of the second half coincides with the
                    // last of the first half (both at home)
                    for bp in p.iter().skip(1) {
                        path.push(Breakpoint::new(&half + &bp.t * &half, bp.pos.clone()));
                    }
                }
                None => {
                    path.push(Breakpoint::new(one.clone(), home.clone()));
                }
            }
            paths.insert(s, path);
        }
        PLLoop::from_paths(paths)
    }

    /// Time reversal; represents the inverse loop.
    pub fn reverse(&self) -> PLLoop {
        let one = Rational::one();
        let paths = self
            .paths
            .iter()
            .map(|(&s, path)| {
                let rev: Vec<Breakpoint> = path
                    .iter()
                    .rev()
                    .map(|bp| Breakpoint::new(&one - &bp.t, bp.pos.clone()))
                    .collect();
                (s, rev)
            })
            .collect();
        PLLoop { paths }
    }

    /// Full geometric validation: at every common time, all strand
    /// positions (moving and constant) are pairwise distinct. Checked
    /// exactly, segment pair by segment pair.
    pub fn validate(&self) -> Result<(), GeomError> {
        let times = self.merged_times();
        let strands: Vec<u32> = self.support().collect();
        for w in times.windows(2) {
            let (t0, t1) = (&w[0], &w[1]);
            // moving vs moving
            for (ia, &a) in strands.iter().enumerate() {
                for &b in &strands[ia + 1..] {
                    let pa0 = self.position(a, t0);
                    let pa1 = self.position(a, t1);
                    let pb0 = self.position(b, t0);
                    let pb1 = self.position(b, t1);
                    if let Some(t) = segment_meet(t0, t1, &pa0.sub(&pb0), &pa1.sub(&pb1)) {
                        return Err(GeomError::Collision {
                            strand_a: a,
                            strand_b: b,
                            t,
                        });
                    }
                }
            }
            // moving vs constant integers: find where the segment meets the
            // real axis and test whether the intercept is a puncture
            for &a in &strands {
                let pa0 = self.position(a, t0);
                let pa1 = self.position(a, t1);
                if let Some((k, t)) = self.puncture_on_segment(t0, t1, &pa0, &pa1) {
                    return Err(GeomError::Collision {
                        strand_a: a,
                        strand_b: k,
                        t,
                    });
                }
            }
        }
        Ok(())
    }

    /// The first constant strand met by the linear piece from `p0` (at
    /// `t0`) to `p1` (at `t1`), if any.
    fn puncture_on_segment(
        &self,
        t0: &Rational,
        t1: &Rational,
        p0: &Point,
        p1: &Point,
    ) -> Option<(u32, Rational)> {
        let hit = |re: &Rational, s: &Rational| -> Option<(u32, Rational)> {
            if !re.is_integer() || re.numer().is_negative() || re.numer().is_zero() {
                return None;
            }
            let k = u32::try_from(re.numer().clone()).ok()?;
            if self.paths.contains_key(&k) {
                return None;
            }
            Some((k, t0 + s * (t1 - t0)))
        };
        let (i0, i1) = (&p0.im, &p1.im);
        if i0.is_zero() && i1.is_zero() {
            // the whole piece lies on the real axis: the support is finite,
            // so it suffices to probe the few integers past the left end
            let (lo, hi) = if p0.re <= p1.re {
                (&p0.re, &p1.re)
            } else {
                (&p1.re, &p0.re)
            };
            let mut k = lo.ceil();
            if k < Rational::one() {
                k = Rational::one();
            }
            for _ in 0..=self.paths.len() {
                if k > *hi {
                    return None;
                }
                let span = &p1.re - &p0.re;
                let s = if span.is_zero() {
                    Rational::zero()
                } else {
                    (&k - &p0.re) / span
                };
                if let Some(found) = hit(&k, &s) {
                    return Some(found);
                }
                k += Rational::one();
            }
            None
        } else if (i0.is_positive() && i1.is_positive()) || (i0.is_negative() && i1.is_negative()) {
            None
        } else {
            // exactly one axis contact: im is linear and changes side
            let s = i0 / (i0 - i1);
            let re = &p0.re + &s * (&p1.re - &p0.re);
            hit(&re, &s)
        }
    }
}

/// Whether the linear path `delta(t)` from `d0` (at `t0`) to `d1` (at `t1`)
/// passes through zero; returns the meeting time.
fn segment_meet(t0: &Rational, t1: &Rational, d0: &Point, d1: &Point) -> Option<Rational> {
    let v = d1.sub(d0);
    if v.is_zero() {
        return if d0.is_zero() { Some(t0.clone()) } else { None };
    }
    // solve d0 + s*v = 0 with s in [0, 1]
    let s = if !v.re.is_zero() {
        let s = -&d0.re / &v.re;
        let im_at = &d0.im + &s * &v.im;
        if im_at.is_zero() {
            s
        } else {
            return None;
        }
    } else {
        if !d0.re.is_zero() {
            return None;
        }
        if v.im.is_zero() {
            return None; // constant nonzero handled above
        }
        -&d0.im / &v.im
    };
    if s.is_negative() || s > Rational::one() {
        return None;
    }
    Some(t0 + s * (t1 - t0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn simple_loop(strand: u32, apex: Point) -> PLLoop {
        let home = Configuration::home(strand);
        let mut paths = BTreeMap::new();
        paths.insert(
            strand,
            vec![
                Breakpoint::new(rat(0, 1), home.clone()),
                Breakpoint::new(rat(1, 2), apex),
                Breakpoint::new(rat(1, 1), home),
            ],
        );
        PLLoop::from_paths(paths).unwrap()
    }

    #[test]
    fn shape_validation() {
        let bad = PLLoop::from_paths(
            [(
                1u32,
                vec![
                    Breakpoint::new(rat(0, 1), Point::from_ints(1, 0)),
                    Breakpoint::new(rat(1, 1), Point::from_ints(2, 0)),
                ],
            )]
            .into_iter()
            .collect(),
        );
        assert!(matches!(bad, Err(GeomError::BadLoop(_))));
        let ok = simple_loop(2, Point::from_ints(2, 1));
        assert!(ok.validate().is_ok());
    }

    #[test]
    fn evaluation_and_configurations() {
        let l = simple_loop(3, Point::from_ints(3, 2));
        assert_eq!(l.position(3, &rat(1, 4)), Point::from_ints(3, 1));
        assert_eq!(l.position(5, &rat(1, 4)), Point::from_ints(5, 0));
        let c = l.at(&rat(1, 2));
        assert_eq!(c.position(3), Point::from_ints(3, 2));
        assert_eq!(c.position(4), Point::from_ints(4, 0));
    }

    #[test]
    fn collisions_are_detected() {
        // strand 2 crosses through the constant strand 1
        let l = simple_loop(2, Point::from_ints(0, 0));
        match l.validate() {
            Err(GeomError::Collision { strand_b: 1, .. }) => {}
            other => panic!("expected collision with strand 1, got {other:?}"),
        }
        // two moving strands meeting at a common time
        let mut paths = BTreeMap::new();
        let home1 = Configuration::home(1);
        let home2 = Configuration::home(2);
        paths.insert(
            1u32,
            vec![
                Breakpoint::new(rat(0, 1), home1.clone()),
                Breakpoint::new(rat(1, 2), Point::new(rat(3, 2), rat(1, 1))),
                Breakpoint::new(rat(1, 1), home1),
            ],
        );
        paths.insert(
            2u32,
            vec![
                Breakpoint::new(rat(0, 1), home2.clone()),
                Breakpoint::new(rat(1, 2), Point::new(rat(3, 2), rat(1, 1))),
                Breakpoint::new(rat(1, 1), home2),
            ],
        );
        let l = PLLoop::from_paths(paths).unwrap();
        match l.validate() {
            Err(GeomError::Collision {
                strand_a: 1,
                strand_b: 2,
                t,
            }) => {
                assert_eq!(t, rat(1, 2));
            }
            other => panic!("expected moving collision, got {other:?}"),
        }
    }

    #[test]
    fn on_axis_slides_hit_punctures() {
        // strand 3 slides along the real axis across the puncture 2
        let home = Configuration::home(3);
        let mut paths = BTreeMap::new();
        paths.insert(
            3u32,
            vec![
                Breakpoint::new(rat(0, 1), home.clone()),
                Breakpoint::new(rat(1, 2), Point::new(rat(3, 2), rat(0, 1))),
                Breakpoint::new(rat(1, 1), home),
            ],
        );
        let l = PLLoop::from_paths(paths).unwrap();
        match l.validate() {
            Err(GeomError::Collision {
                strand_a: 3,
                strand_b: 2,
                ..
            }) => {}
            other => panic!("expected on-axis collision with strand 2, got {other:?}"),
        }
        // the same slide stopping right of the puncture is clean
        let home = Configuration::home(3);
        let mut paths = BTreeMap::new();
        paths.insert(
            3u32,
            vec![
                Breakpoint::new(rat(0, 1), home.clone()),
                Breakpoint::new(rat(1, 2), Point::new(rat(5, 2), rat(0, 1))),
                Breakpoint::new(rat(1, 1), home),
            ],
        );
        let l = PLLoop::from_paths(paths).unwrap();
        assert!(l.validate().is_ok());
    }

    #[test]
    fn concat_and_reverse() {
        let l = simple_loop(2, Point::from_ints(2, 1));
        let r = l.reverse();
        assert_eq!(r.position(2, &rat(1, 2)), Point::from_ints(2, 1));
        assert_eq!(r.reverse(), l);
        let c = l.concat(&r).unwrap();
        assert_eq!(c.position(2, &rat(1, 4)), Point::from_ints(2, 1));
        assert_eq!(c.position(2, &rat(3, 4)), Point::from_ints(2, 1));
        assert!(c.validate().is_ok());
    }
}
