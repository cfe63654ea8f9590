//! Cross-cutting geometry properties: reparametrization invariance of the
//! degree and the sweep, and consistency between loop winding degrees and
//! word-level winding numbers.

use std::collections::BTreeMap;

use lfbraid_core::geom::{
    beta_loop, circle_loop, loop_to_word, winding_degree, Breakpoint, PLLoop, Rational,
};
use lfbraid_core::word::band_generator;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Insert the midpoint of every segment as an extra (collinear) breakpoint.
fn subdivide(gamma: &PLLoop) -> PLLoop {
    let mut paths: BTreeMap<u32, Vec<Breakpoint>> = BTreeMap::new();
    for (&s, path) in gamma.paths() {
        let mut out: Vec<Breakpoint> = Vec::new();
        for w in path.windows(2) {
            out.push(w[0].clone());
            let tm = (&w[0].t + &w[1].t) / rat(2, 1);
            let half = rat(1, 2);
            let mid = w[0].pos.add(&w[1].pos.sub(&w[0].pos).scale(&half));
            out.push(Breakpoint::new(tm, mid));
        }
        out.push(path.last().unwrap().clone());
        paths.insert(s, out);
    }
    PLLoop::from_paths(paths).unwrap()
}

#[test]
fn collinear_breakpoints_change_nothing() {
    let gamma = beta_loop(4).unwrap();
    let fine = subdivide(&gamma);
    fine.validate().unwrap();
    for i in 1..4u32 {
        for j in (i + 1)..=4 {
            assert_eq!(
                winding_degree(&gamma, i, j).unwrap(),
                winding_degree(&fine, i, j).unwrap()
            );
        }
    }
    for n in 1..=4u32 {
        let a = loop_to_word(&gamma, n).unwrap();
        let b = loop_to_word(&fine, n).unwrap();
        assert!(a.equivalent(&b).unwrap(), "level {n}: {a} vs {b}");
    }
}

#[test]
fn winding_consistency_between_loops_and_words() {
    let gamma = beta_loop(5)
        .unwrap()
        .concat(&circle_loop(4, 2, &rat(1, 5)).unwrap())
        .unwrap();
    gamma.validate().unwrap();
    let w = loop_to_word(&gamma, 5).unwrap();
    for i in 1..5u32 {
        for j in (i + 1)..=5 {
            assert_eq!(
                w.winding(i, j).unwrap(),
                winding_degree(&gamma, i, j).unwrap(),
                "pair ({i},{j})"
            );
        }
    }
    // and functoriality down the levels
    for n in 1..5u32 {
        let direct = loop_to_word(&gamma, n).unwrap();
        let forgotten = w.forget_down_to(n).unwrap();
        assert!(direct.equivalent(&forgotten).unwrap());
    }
}

#[test]
fn inverse_loops_give_inverse_words() {
    let gamma = beta_loop(3).unwrap();
    let back = gamma.reverse();
    let cancel = gamma.concat(&back).unwrap();
    for n in 1..=3u32 {
        assert!(loop_to_word(&cancel, n).unwrap().is_trivial());
    }
    let w = loop_to_word(&back, 3).unwrap();
    assert!(w.equivalent(&band_generator(3).unwrap().inverse()).unwrap());
}
