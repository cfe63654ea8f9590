//! The verification property suite: deterministic, seeded reproductions of
//! the library's structural guarantees. Shared by the `verify` subcommand
//! and the acceptance tests.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;

use lfbraid_core::ext::{ext_distance, ExtDistance, ExtElement};
use lfbraid_core::geom::{
    beta_loop, circle_loop, loop_to_word, make_small_essential_loop, pow2_neg, winding_degree,
    PLLoop, Rational,
};
use lfbraid_core::tower::{cauchy_diagonal, ultrametric, DyadicDistance, Rule, TowerElement};
use lfbraid_core::word::{band_generator, BraidWord, Solver};

use crate::gen;

/// Configuration of a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub depth: u32,
    /// Corrupt a built-in fixture to demonstrate a targeted failure.
    pub corrupt: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 7,
            depth: 8,
            corrupt: false,
        }
    }
}

/// Outcome of one property run.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: &'static str,
    pub pass: bool,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl PropertyReport {
    fn new(name: &'static str) -> Self {
        PropertyReport {
            name,
            pass: true,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.pass = false;
            if self.failures.len() < 4 {
                self.failures.push(detail());
            }
        }
    }
}

/// Names of all properties, in output order.
pub const PROPERTY_NAMES: &[&str] = &[
    "ball_identity",
    "cauchy_realization",
    "counterexample_windings",
    "density",
    "extension_metric",
    "functoriality_loops",
    "small_loops",
    "ultrametric_axioms",
    "winding_laws",
    "word_problem_agreement",
];

/// Run every property, in name order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<PropertyReport> {
    PROPERTY_NAMES
        .iter()
        .map(|name| run_property(name, cfg).unwrap())
        .collect()
}

/// Run a single property by name.
pub fn run_property(name: &str, cfg: &VerifyConfig) -> Option<PropertyReport> {
    Some(match name {
        "ball_identity" => ball_identity(cfg),
        "cauchy_realization" => cauchy_realization(cfg),
        "counterexample_windings" => counterexample_windings(cfg),
        "density" => density(cfg),
        "extension_metric" => extension_metric(cfg),
        "functoriality_loops" => functoriality_loops(cfg),
        "small_loops" => small_loops(cfg),
        "ultrametric_axioms" => ultrametric_axioms(cfg),
        "winding_laws" => winding_laws(cfg),
        "word_problem_agreement" => word_problem_agreement(cfg),
        _ => return None,
    })
}

/// The counterexample schedule, optionally corrupted at level 5.
pub fn counterexample_fixture(corrupt: bool) -> TowerElement {
    if corrupt {
        let extra = lfbraid_core::word::pure_generator_a(1, 5, 5).unwrap();
        TowerElement::from_schedule(vec![(5, extra)], Some(Rule::BandGenerators)).unwrap()
    } else {
        TowerElement::counterexample_schedule()
    }
}

/// Criterion: the counterexample windings are `(1, 0)` at every level.
fn counterexample_windings(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("counterexample_windings");
    let depth = cfg.depth.max(12);
    let g = counterexample_fixture(cfg.corrupt);
    for m in 3..=depth {
        let w = g.truncate(m);
        let w1 = w.winding(1, m).unwrap();
        let w2 = w.winding(2, m).unwrap();
        report.check(w1 == 1 && w2 == 0, || {
            format!("level {m}: windings ({w1}, {w2}), expected (1, 0)")
        });
    }
    let violations = lfbraid_core::tower::winding_violations(&g, 1, 2, depth).unwrap();
    report.check(violations == (3..=depth).collect::<Vec<_>>(), || {
        format!("violation list {violations:?} is not 3..={depth}")
    });
    report
}

/// Criterion: 200 seeded tower elements, depth 8: `d(1, g) < 2^{-n}` iff
/// the level-n truncation is trivial, for all `n < depth`.
///
/// The population consists of forgetful-compatible schedules (products of
/// the standard generators at their own level): the ball identity is a
/// statement about elements of the inverse limit, and triviality is only
/// nested across levels for compatible families.
fn ball_identity(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("ball_identity");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0xba11);
    let one = TowerElement::identity();
    for k in 0..200 {
        let g = gen::random_compatible_tower(&mut rng, 8);
        let d = ultrametric(&one, &g, cfg.depth);
        for n in 1..cfg.depth {
            let in_ball = d.lt_pow2(n);
            let trivial = g.truncate(n).is_trivial();
            report.check(in_ball == trivial, || {
                format!("element {k}, level {n}: ball membership {in_ball} vs triviality {trivial}")
            });
        }
    }
    report
}

/// Criterion: ultrametric axioms and left invariance on the seeded
/// population, exactly.
fn ultrametric_axioms(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("ultrametric_axioms");
    // the same population as the ball-identity criterion, plus a few
    // incompatible schedules: the axioms hold for arbitrary truncation
    // families
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0xba11);
    let depth = cfg.depth;
    let mut pop: Vec<TowerElement> = (0..200)
        .map(|_| gen::random_compatible_tower(&mut rng, 8))
        .collect();
    pop.extend((0..10).map(|_| gen::random_tower(&mut rng, 8)));
    for chunk in pop.chunks(3) {
        if chunk.len() < 3 {
            continue;
        }
        let (g, h, l) = (&chunk[0], &chunk[1], &chunk[2]);
        let dgh = ultrametric(g, h, depth);
        let dhg = ultrametric(h, g, depth);
        report.check(dgh == dhg, || format!("symmetry: {dgh} vs {dhg}"));
        let dhl = ultrametric(h, l, depth);
        let dgl = ultrametric(g, l, depth);
        if dgh.is_exact() && dhl.is_exact() && dgl.is_exact() {
            let max = dgh.upper().max(dhl.upper());
            report.check(dgl.upper() <= max, || {
                format!("strong triangle: d(g,l)={dgl} > max({dgh}, {dhl})")
            });
        }
        // exact zero at matched depth implies levelwise triviality
        if dgh == DyadicDistance::Zero {
            for n in 1..=depth {
                let w = g.truncate(n).inverse().multiply(&h.truncate(n)).unwrap();
                report.check(w.is_trivial(), || {
                    format!("zero distance but level {n} differs")
                });
            }
        }
        // left invariance, including the certified kind of the answer
        let a = l;
        let left = ultrametric(&a.multiply(g), &a.multiply(h), depth);
        report.check(left == dgh, || format!("left invariance: {left} vs {dgh}"));
    }
    report
}

/// Criterion: the two word-problem solvers agree on 1000 seeded words, and
/// `w · w^{-1}` is trivial for all of them.
fn word_problem_agreement(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("word_problem_agreement");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0x3012d);
    for k in 0..1000 {
        let strands = 2 + (k % 7) as u32; // strands 2..=8
        let w = gen::random_word(&mut rng, strands, 64);
        let dyn_t = w.is_trivial_by(Solver::Dynnikov);
        let han_t = w.is_trivial_by(Solver::HandleReduction);
        report.check(dyn_t == han_t, || {
            format!("solver disagreement on word {k}: dynnikov {dyn_t}, handle {han_t}")
        });
        let cancel = w.multiply(&w.inverse()).unwrap();
        report.check(cancel.is_trivial_by(Solver::Dynnikov), || {
            format!("w w^-1 not trivial (dynnikov), word {k}")
        });
        report.check(cancel.is_trivial_by(Solver::HandleReduction), || {
            format!("w w^-1 not trivial (handle), word {k}")
        });
    }
    report
}

/// Criterion: winding homomorphism on 500 pure pairs and forgetful
/// naturality on 200 pure words, exactly.
fn winding_laws(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("winding_laws");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0x317d);
    for k in 0..500 {
        let strands = 2 + (k % 5) as u32;
        let u = gen::random_pure_word(&mut rng, strands, 3);
        let v = gen::random_pure_word(&mut rng, strands, 3);
        let uv = u.multiply(&v).unwrap();
        for i in 1..strands {
            for j in (i + 1)..=strands {
                let lhs = uv.winding(i, j).unwrap();
                let rhs = u.winding(i, j).unwrap() + v.winding(i, j).unwrap();
                report.check(lhs == rhs, || {
                    format!("homomorphism fails at pair {k}, ({i},{j}): {lhs} vs {rhs}")
                });
            }
        }
    }
    for k in 0..200 {
        let m = 4 + (k % 4) as u32; // 4..=7 strands
        let w = gen::random_pure_word(&mut rng, m, 3);
        let n = 2 + (k % 3) as u32; // forget down to 2..=4
        let n = n.min(m);
        let down = w.forget_down_to(n).unwrap();
        for i in 1..n {
            for j in (i + 1)..=n {
                let lhs = down.winding(i, j).unwrap();
                let rhs = w.winding(i, j).unwrap();
                report.check(lhs == rhs, || {
                    format!("naturality fails at word {k}, ({i},{j}): {lhs} vs {rhs}")
                });
            }
        }
    }
    report
}

/// Criterion: loop-to-word functoriality and winding consistency on 100
/// generated loops.
fn functoriality_loops(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("functoriality_loops");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0x100b);
    use rand::Rng;
    for k in 0..100u32 {
        // random concatenation of circling loops on up to 7 strands
        let stages = rng.gen_range(1..=3);
        let mut gamma: Option<PLLoop> = None;
        for _ in 0..stages {
            let target = rng.gen_range(1..=5u32);
            let mover = rng.gen_range(target + 1..=7u32);
            let rho = Rational::new(1.into(), 5.into());
            let mut stage = circle_loop(mover, target, &rho).unwrap();
            if rng.gen_bool(0.3) {
                stage = stage.reverse();
            }
            gamma = Some(match gamma {
                None => stage,
                Some(g) => g.concat(&stage).unwrap(),
            });
        }
        let gamma = gamma.unwrap();
        let top = 7u32;
        let words: Vec<BraidWord> = (1..=top)
            .map(|n| loop_to_word(&gamma, n).unwrap())
            .collect();
        for m in 1..=top {
            for n in 1..=m {
                let down = words[(m - 1) as usize].forget_down_to(n).unwrap();
                let ok = down.equivalent(&words[(n - 1) as usize]).unwrap();
                report.check(ok, || {
                    format!("loop {k}: word at {m} forgotten to {n} differs from direct sweep")
                });
            }
        }
        // winding consistency at the top level
        for i in 1..top {
            for j in (i + 1)..=top {
                let lhs = words[(top - 1) as usize].winding(i, j).unwrap();
                let rhs = winding_degree(&gamma, i, j).unwrap();
                report.check(lhs == rhs, || {
                    format!("loop {k}: winding ({i},{j}) word {lhs} vs degree {rhs}")
                });
            }
        }
    }
    report
}

/// Criterion: Cauchy realization on the partial products of the
/// counterexample and on 20 seeded promise sequences.
fn cauchy_realization(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("cauchy_realization");
    let depth = cfg.depth;
    let g = TowerElement::counterexample_schedule();
    let partials: Vec<TowerElement> = (1..=depth)
        .map(|n| TowerElement::embed(&g.truncate(n)).unwrap())
        .collect();
    match cauchy_diagonal(&partials) {
        Err(e) => report.check(false, || format!("partial products rejected: {e}")),
        Ok(diag) => {
            for n in 1..=depth {
                let d = ultrametric(&diag, &partials[(n - 1) as usize], depth);
                report.check(d.le_pow2(n), || {
                    format!("partial products: d(limit, x_{n}) = {d} exceeds 2^-{n}")
                });
                let quot = diag.truncate(n).inverse().multiply(&g.truncate(n)).unwrap();
                report.check(quot.is_trivial(), || {
                    format!("diagonal of partial products differs from G at level {n}")
                });
            }
        }
    }
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0xca0c);
    for k in 0..20 {
        let xs = gen::random_promise_sequence(&mut rng, depth as usize, 6);
        match cauchy_diagonal(&xs) {
            Err(e) => report.check(false, || format!("sequence {k} rejected: {e}")),
            Ok(diag) => {
                for n in 1..=depth.min(xs.len() as u32) {
                    let d = ultrametric(&diag, &xs[(n - 1) as usize], depth);
                    report.check(d.le_pow2(n), || {
                        format!("sequence {k}: d(limit, x_{n}) = {d} exceeds 2^-{n}")
                    });
                }
            }
        }
    }
    report
}

/// Criterion: density of finitary approximations at every level `n <= 6`,
/// evaluated at depth 10.
fn density(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("density");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0xde52);
    let depth = cfg.depth.max(10);
    for k in 0..50 {
        let g = if k == 0 {
            TowerElement::counterexample_schedule()
        } else {
            gen::random_compatible_tower(&mut rng, 8)
        };
        for n in 1..=6 {
            let approx = TowerElement::embed(&g.dense_approx(n)).unwrap();
            let d = ultrametric(&g, &approx, depth);
            report.check(d.le_pow2(n + 1), || {
                format!("element {k}, level {n}: d = {d} exceeds 2^-{}", n + 1)
            });
        }
    }
    report
}

/// Criterion: extension metric axioms, the permutation branch, and closure
/// witnesses.
fn extension_metric(cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("extension_metric");
    let mut rng = gen::rng_from_seed(cfg.seed ^ 0xe872);
    let depth = cfg.depth;
    let pop: Vec<ExtElement> = (0..100).map(|_| gen::random_ext(&mut rng, 5, 6)).collect();
    for chunk in pop.chunks(3) {
        if chunk.len() < 3 {
            continue;
        }
        let (x, y, z) = (&chunk[0], &chunk[1], &chunk[2]);
        let dxy = ext_distance(x, y, depth);
        let dyx = ext_distance(y, x, depth);
        report.check(dxy == dyx, || format!("ext symmetry: {dxy} vs {dyx}"));
        report.check(
            (dxy == ExtDistance::One) == (x.pi_star() != y.pi_star()),
            || "distance 1 must coincide with permutation mismatch".to_string(),
        );
        let dyz = ext_distance(y, z, depth);
        let dxz = ext_distance(x, z, depth);
        if dxy.is_exact() && dyz.is_exact() && dxz.is_exact() {
            let max = value_of(&dxy).max(value_of(&dyz));
            report.check(value_of(&dxz) <= max, || {
                format!("ext strong triangle: {dxz} > max({dxy}, {dyz})")
            });
        }
        // restricted to a coset the metric is the pure ultrametric
        if x.pi_star() == y.pi_star() {
            let pure = ultrametric(x.pure_part(), y.pure_part(), depth);
            report.check(dxy == ExtDistance::Dyadic(pure), || {
                format!("coset restriction: {dxy} vs pure {pure}")
            });
        }
    }
    for k in 0..20 {
        let x = gen::random_ext(&mut rng, 4, 6);
        for n in 1..=5 {
            let w = x.closure_witness(n);
            let back = ExtElement::from_word(&w).unwrap();
            let d = ext_distance(&back, &x, depth.max(n + 2));
            report.check(d.le_pow2(n + 1), || {
                format!("witness {k} at level {n}: d = {d} exceeds 2^-{}", n + 1)
            });
        }
    }
    report
}

fn value_of(d: &ExtDistance) -> BigRational {
    match d {
        ExtDistance::One => BigRational::one(),
        ExtDistance::Dyadic(dd) => dd.upper(),
    }
}

/// Criterion: small essential loops for `eps = 2^{-k}`, `3 <= k <= 8`.
fn small_loops(_cfg: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new("small_loops");
    for k in 3..=8u32 {
        let eps = pow2_neg(k);
        match make_small_essential_loop(&eps) {
            Err(e) => report.check(false, || format!("eps=2^-{k}: construction failed: {e}")),
            Ok(w) => {
                report.check(w.sup_bound.upper() < eps, || {
                    format!(
                        "eps=2^-{k}: bound {} not below epsilon",
                        w.sup_bound.upper()
                    )
                });
                report.check(!w.word.is_trivial(), || {
                    format!("eps=2^-{k}: level-{} word is trivial", w.m)
                });
                report.check(winding_degree(&w.gamma, w.m - 1, w.m).unwrap() == 1, || {
                    format!("eps=2^-{k}: winding degree not 1")
                });
            }
        }
    }
    // the band-generator loops reproduce a_m
    for m in 3..=4 {
        let l = beta_loop(m).unwrap();
        let w = loop_to_word(&l, m).unwrap();
        report.check(w.equivalent(&band_generator(m).unwrap()).unwrap(), || {
            format!("beta loop {m} does not sweep to a_{m}")
        });
    }
    report
}

/// Format reports as the verify command's output.
pub fn format_reports(reports: &[PropertyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {} checks={}", r.name, r.checks);
        for f in &r.failures {
            let _ = writeln!(out, "  failure: {f}");
        }
    }
    let all = reports.iter().all(|r| r.pass);
    let _ = writeln!(out, "ok={all}");
    out
}
