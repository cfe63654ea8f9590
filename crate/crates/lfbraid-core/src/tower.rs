//! Level-indexed families of pure braid words: a finitely described model
//! of elements of the inverse limit of the pure braid groups under the
//! forgetful maps, together with the dyadic ultrametric, the product
//! metric, winding obstructions, Cauchy diagonals, and dense finitary
//! approximation.
//!
//! An element is described by an event schedule: finitely many events
//! `(level, pure word on that many strands)` plus an optional built-in rule
//! generating the band generator `a_m` at every level `m >= 3`. The level-n
//! truncation is the ordered product of the stabilized events at levels
//! `<= n`. Group operations (products, inverses, conjugation by a finite
//! braid, Cauchy diagonals) are evaluated lazily per level, so infinite
//! schedules stay closed under them.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::word::{band_generator, BraidError, BraidWord};

/// Built-in level rules for infinite schedules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Event `a_m` at every level `m >= 3`.
    BandGenerators,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Schedule {
        events: Vec<(u32, BraidWord)>,
        rule: Option<Rule>,
    },
    Product(Vec<TowerElement>),
    Inverse(Box<TowerElement>),
    /// `by · inner · by^{-1}`, stabilized levelwise; levels below the
    /// support of `by` are reached by forgetting strands.
    Conjugate {
        inner: Box<TowerElement>,
        by: BraidWord,
    },
    /// Level-n truncation taken from the n-th stage (clamped to the last).
    Diagonal(Vec<TowerElement>),
}

/// Errors from the tower layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerError {
    Braid(BraidError),
    /// An event word is not pure or not on exactly `level` strands.
    BadEvent {
        level: u32,
        reason: String,
    },
    /// The Cauchy promise `x_{n+1} ∈ x_n V_n` failed at this level.
    PromiseViolated {
        level: u32,
    },
    EmptySequence,
}

impl From<BraidError> for TowerError {
    fn from(e: BraidError) -> Self {
        TowerError::Braid(e)
    }
}

impl fmt::Display for TowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerError::Braid(e) => write!(f, "{e}"),
            TowerError::BadEvent { level, reason } => {
                write!(f, "bad event at level {level}: {reason}")
            }
            TowerError::PromiseViolated { level } => {
                write!(f, "Cauchy promise violated at level {level}")
            }
            TowerError::EmptySequence => write!(f, "empty sequence"),
        }
    }
}

/// A finitely described element of the pure-braid tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerElement {
    node: Node,
    depth_hint: u32,
}

pub const DEFAULT_DEPTH_HINT: u32 = 8;

impl TowerElement {
    /// The identity: empty schedule.
    pub fn identity() -> Self {
        TowerElement {
            node: Node::Schedule {
                events: Vec::new(),
                rule: None,
            },
            depth_hint: DEFAULT_DEPTH_HINT,
        }
    }

    /// Build from an explicit event list. Each event word must be pure and
    /// live on exactly `level` strands.
    pub fn from_events(events: Vec<(u32, BraidWord)>) -> Result<Self, TowerError> {
        Self::from_schedule(events, None)
    }

    /// Build from events plus an optional rule.
    pub fn from_schedule(
        mut events: Vec<(u32, BraidWord)>,
        rule: Option<Rule>,
    ) -> Result<Self, TowerError> {
        for (level, w) in &events {
            if *level < 1 {
                return Err(TowerError::BadEvent {
                    level: *level,
                    reason: "level must be >= 1".into(),
                });
            }
            if w.strands() != *level {
                return Err(TowerError::BadEvent {
                    level: *level,
                    reason: format!("word is on {} strands", w.strands()),
                });
            }
            if !w.is_pure() {
                return Err(TowerError::BadEvent {
                    level: *level,
                    reason: "word is not pure".into(),
                });
            }
        }
        // stable sort keeps the order of same-level events
        events.sort_by_key(|(l, _)| *l);
        Ok(TowerElement {
            node: Node::Schedule { events, rule },
            depth_hint: DEFAULT_DEPTH_HINT,
        })
    }

    /// The counterexample schedule: the rule `m -> a_m`, whose level-n
    /// truncation is `a_3 a_4 ... a_n`.
    pub fn counterexample_schedule() -> Self {
        TowerElement {
            node: Node::Schedule {
                events: Vec::new(),
                rule: Some(Rule::BandGenerators),
            },
            depth_hint: DEFAULT_DEPTH_HINT,
        }
    }

    /// Embed a finite pure braid: truncations are the forgetful images
    /// below its strand count and stabilizations above it.
    pub fn embed(word: &BraidWord) -> Result<Self, TowerError> {
        if !word.is_pure() {
            return Err(TowerError::Braid(BraidError::NotPure));
        }
        // telescoping events: e_n = stab(p_{n}(w)... recovered so that the
        // partial products reproduce the forgetful chain of `word`
        let n = word.strands();
        let mut events = Vec::new();
        let mut prev: Option<BraidWord> = None; // image at level-1 of current
        for level in 1..=n {
            let here = word.forget_down_to(level)?;
            let event = match &prev {
                None => here.clone(),
                Some(p) => p.stabilize(level)?.inverse().multiply(&here)?,
            };
            if !event.is_empty() {
                events.push((level, event.free_reduce()));
            }
            prev = Some(here);
        }
        Self::from_events(events)
    }

    pub fn depth_hint(&self) -> u32 {
        self.depth_hint
    }

    pub fn with_depth_hint(mut self, depth: u32) -> Self {
        self.depth_hint = depth;
        self
    }

    /// Event list and rule, when this element is a plain schedule.
    #[allow(clippy::type_complexity)]
    pub fn as_schedule(&self) -> Option<(&[(u32, BraidWord)], Option<&Rule>)> {
        match &self.node {
            Node::Schedule { events, rule } => Some((events, rule.as_ref())),
            _ => None,
        }
    }

    /// Levelwise product `self · other`.
    pub fn multiply(&self, other: &TowerElement) -> TowerElement {
        TowerElement {
            node: Node::Product(vec![self.clone(), other.clone()]),
            depth_hint: self.depth_hint.max(other.depth_hint),
        }
    }

    /// Levelwise inverse.
    pub fn inverse(&self) -> TowerElement {
        TowerElement {
            node: Node::Inverse(Box::new(self.clone())),
            depth_hint: self.depth_hint,
        }
    }

    /// Conjugation `by · self · by^{-1}` by a finite braid word, evaluated
    /// lazily per level.
    pub fn conjugated_by(&self, by: &BraidWord) -> TowerElement {
        TowerElement {
            node: Node::Conjugate {
                inner: Box::new(self.clone()),
                by: by.clone(),
            },
            depth_hint: self.depth_hint,
        }
    }

    /// The level-n truncation: a pure word on `n` strands.
    pub fn truncate(&self, n: u32) -> BraidWord {
        assert!(n >= 1, "level must be >= 1");
        match &self.node {
            Node::Schedule { events, rule } => {
                let mut out = BraidWord::identity(n);
                let push = |w: &BraidWord, out: &mut BraidWord| {
                    let stab = w.stabilize(n).expect("event level <= n");
                    *out = out.multiply(&stab).expect("same strand count");
                };
                let mut ev = events.iter().peekable();
                for level in 1..=n {
                    while let Some((l, w)) = ev.peek() {
                        if *l == level {
                            push(w, &mut out);
                            ev.next();
                        } else {
                            break;
                        }
                    }
                    if let Some(Rule::BandGenerators) = rule {
                        if level >= 3 {
                            push(&band_generator(level).unwrap(), &mut out);
                        }
                    }
                }
                out
            }
            Node::Product(parts) => {
                let mut out = BraidWord::identity(n);
                for p in parts {
                    out = out.multiply(&p.truncate(n)).unwrap();
                }
                out
            }
            Node::Inverse(inner) => inner.truncate(n).inverse(),
            Node::Conjugate { inner, by } => {
                let s = by.strands();
                if n >= s {
                    let b = by.stabilize(n).unwrap();
                    b.multiply(&inner.truncate(n))
                        .unwrap()
                        .multiply(&b.inverse())
                        .unwrap()
                } else {
                    // evaluate at the support level and forget back down;
                    // the conjugated word is pure, so this is the bonding map
                    let word = by
                        .multiply(&inner.truncate(s))
                        .unwrap()
                        .multiply(&by.inverse())
                        .unwrap();
                    word.forget_down_to(n).unwrap()
                }
            }
            Node::Diagonal(stages) => {
                let k = (n as usize).min(stages.len());
                stages[k - 1].truncate(n)
            }
        }
    }

    /// Forgetful compatibility of the truncation family up to `depth`.
    pub fn check_compat(&self, depth: u32) -> bool {
        for n in 1..depth {
            let down = self.truncate(n + 1).forget_strand(n + 1).unwrap();
            let quot = down.inverse().multiply(&self.truncate(n)).unwrap();
            if !quot.is_trivial() {
                return false;
            }
        }
        true
    }

    /// Finitary dense approximation: the level-n truncation regarded as a
    /// finite pure braid. Its embedding is within `2^{-(n+1)}` of `self`
    /// whenever the element is compatible.
    pub fn dense_approx(&self, n: u32) -> BraidWord {
        self.truncate(n)
    }
}

/// An exact dyadic distance value, or a certified interval when the depth
/// budget is exhausted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyadicDistance {
    /// Exactly zero (identical finite descriptions).
    Zero,
    /// Exactly `2^{-k}`.
    Exact(u32),
    /// Somewhere in `(0, 2^{-depth}]`; undecided at this depth.
    Bounded(u32),
}

impl DyadicDistance {
    pub fn is_exact(&self) -> bool {
        !matches!(self, DyadicDistance::Bounded(_))
    }

    /// Largest value consistent with the answer.
    pub fn upper(&self) -> BigRational {
        match self {
            DyadicDistance::Zero => BigRational::zero(),
            DyadicDistance::Exact(k) | DyadicDistance::Bounded(k) => pow2_neg(*k),
        }
    }

    /// Certified `< 2^{-n}`.
    pub fn lt_pow2(&self, n: u32) -> bool {
        match self {
            DyadicDistance::Zero => true,
            DyadicDistance::Exact(k) | DyadicDistance::Bounded(k) => *k > n,
        }
    }

    /// Certified `<= 2^{-n}`.
    pub fn le_pow2(&self, n: u32) -> bool {
        match self {
            DyadicDistance::Zero => true,
            DyadicDistance::Exact(k) | DyadicDistance::Bounded(k) => *k >= n,
        }
    }
}

impl fmt::Display for DyadicDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyadicDistance::Zero => write!(f, "0"),
            DyadicDistance::Exact(k) => write!(f, "1/{}", BigInt::one() << *k),
            DyadicDistance::Bounded(k) => write!(f, "(0,1/{}]", BigInt::one() << *k),
        }
    }
}

pub fn pow2_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

/// The ultrametric `d(g,h) = 2^{-N}` with `N` the least level at which the
/// truncations of `g` and `h` differ, evaluated to `depth` levels.
pub fn ultrametric(g: &TowerElement, h: &TowerElement, depth: u32) -> DyadicDistance {
    assert!(depth >= 1);
    if g == h {
        return DyadicDistance::Zero;
    }
    for n in 1..=depth {
        let w = g.truncate(n).inverse().multiply(&h.truncate(n)).unwrap();
        if !w.is_trivial() {
            return DyadicDistance::Exact(n);
        }
    }
    DyadicDistance::Bounded(depth)
}

/// A truncated evaluation of the product metric: the true value lies in
/// `[exact, exact + tail]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDistance {
    pub exact: BigRational,
    pub tail: BigRational,
}

/// The product metric `sum_n 2^{-n} δ(g_n, h_n)` evaluated to `depth`
/// levels, with `δ` decided by the word problem.
pub fn product_distance(g: &TowerElement, h: &TowerElement, depth: u32) -> ProductDistance {
    assert!(depth >= 1);
    let mut exact = BigRational::zero();
    for n in 1..=depth {
        let w = g.truncate(n).inverse().multiply(&h.truncate(n)).unwrap();
        if !w.is_trivial() {
            exact += pow2_neg(n);
        }
    }
    ProductDistance {
        exact,
        tail: pow2_neg(depth),
    }
}

/// Levels `m` in `(max(i,j), depth]` at which the windings of strands `i`
/// and `j` against the top strand `m` disagree. A nonempty list refutes
/// membership in the locally finite subgroup up to the tested depth; an
/// empty list proves nothing.
pub fn winding_violations(
    g: &TowerElement,
    i: u32,
    j: u32,
    depth: u32,
) -> Result<Vec<u32>, TowerError> {
    if i == 0 || j <= i {
        return Err(TowerError::Braid(BraidError::BadRange(format!(
            "need 1 <= i < j, got ({i},{j})"
        ))));
    }
    if depth < j {
        return Err(TowerError::Braid(BraidError::BadRange(format!(
            "depth {depth} below strand {j}"
        ))));
    }
    let mut out = Vec::new();
    for m in (j + 1)..=depth {
        let w = g.truncate(m);
        if w.winding(i, m)? != w.winding(j, m)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// Realize the diagonal limit of a sequence with the promise
/// `x_{n+1} ∈ x_n · V_n`. The promise is verified exactly; a violation is
/// reported with its level. The result's level-n truncation is the level-n
/// truncation of `x_n` (of the last element beyond the sequence).
pub fn cauchy_diagonal(xs: &[TowerElement]) -> Result<TowerElement, TowerError> {
    if xs.is_empty() {
        return Err(TowerError::EmptySequence);
    }
    for n in 1..xs.len() {
        let level = n as u32;
        let w = xs[n - 1]
            .truncate(level)
            .inverse()
            .multiply(&xs[n].truncate(level))
            .unwrap();
        if !w.is_trivial() {
            return Err(TowerError::PromiseViolated { level });
        }
    }
    let depth_hint = xs.iter().map(|x| x.depth_hint).max().unwrap();
    Ok(TowerElement {
        node: Node::Diagonal(xs.to_vec()),
        depth_hint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::pure_generator_a;

    fn g_schedule() -> TowerElement {
        TowerElement::counterexample_schedule()
    }

    fn embed(w: &BraidWord) -> TowerElement {
        TowerElement::embed(w).unwrap()
    }

    #[test]
    fn truncations_of_the_counterexample() {
        let g = g_schedule();
        assert!(g.truncate(1).is_empty());
        assert!(g.truncate(2).is_empty());
        // g_n = a_3 a_4 ... a_n, letter for letter
        for n in 3..=6 {
            let mut expect = BraidWord::identity(n);
            for m in 3..=n {
                expect = expect
                    .multiply(&band_generator(m).unwrap().stabilize(n).unwrap())
                    .unwrap();
            }
            assert_eq!(g.truncate(n), expect);
        }
    }

    #[test]
    fn embed_truncations_follow_the_forgetful_chain() {
        let a3 = band_generator(3).unwrap();
        let e = embed(&a3);
        assert!(e.truncate(2).is_trivial());
        assert!(e.truncate(1).is_empty());
        assert!(e.truncate(3).equivalent(&a3).unwrap());
        assert!(e.truncate(5).equivalent(&a3.stabilize(5).unwrap()).unwrap());
        // a pure word that does not use its top strand still embeds faithfully
        let w = pure_generator_a(1, 2, 4).unwrap(); // s1^2 on 4 strands
        let e = embed(&w);
        assert!(e
            .truncate(2)
            .equivalent(&pure_generator_a(1, 2, 2).unwrap())
            .unwrap());
        assert!(e.check_compat(8));
    }

    #[test]
    fn compatibility_checks() {
        assert!(g_schedule().check_compat(10));
        assert!(embed(&band_generator(4).unwrap()).check_compat(8));
        assert!(TowerElement::identity().check_compat(8));
        // corrupted family: an event at level 5 that does not vanish when
        // strand 5 is forgotten
        let bad_event = pure_generator_a(1, 2, 5).unwrap();
        let bad = TowerElement::from_events(vec![(5, bad_event)]).unwrap();
        assert!(!bad.check_compat(6));
    }

    #[test]
    fn ultrametric_examples() {
        let one = TowerElement::identity();
        let g = g_schedule();
        assert_eq!(ultrametric(&g, &g, 6), DyadicDistance::Zero);
        let a3 = embed(&band_generator(3).unwrap());
        assert_eq!(ultrametric(&one, &a3, 8), DyadicDistance::Exact(3));
        let sq = embed(&pure_generator_a(1, 2, 2).unwrap());
        assert_eq!(ultrametric(&one, &sq, 8), DyadicDistance::Exact(2));
        // equivalent but structurally different descriptions stay undecided
        let other = embed(&band_generator(3).unwrap().free_reduce());
        match ultrametric(&a3, &other, 6) {
            DyadicDistance::Zero | DyadicDistance::Bounded(6) => {}
            d => panic!("unexpected {d:?}"),
        }
    }

    #[test]
    fn dyadic_distance_display_and_bounds() {
        assert_eq!(format!("{}", DyadicDistance::Zero), "0");
        assert_eq!(format!("{}", DyadicDistance::Exact(3)), "1/8");
        assert_eq!(format!("{}", DyadicDistance::Bounded(8)), "(0,1/256]");
        assert!(DyadicDistance::Exact(3).lt_pow2(2));
        assert!(!DyadicDistance::Exact(3).lt_pow2(3));
        assert!(DyadicDistance::Exact(3).le_pow2(3));
        assert!(DyadicDistance::Bounded(8).lt_pow2(7));
        assert!(!DyadicDistance::Bounded(8).lt_pow2(8));
    }

    #[test]
    fn product_distance_examples() {
        let one = TowerElement::identity();
        let g = g_schedule();
        let d = product_distance(&g, &g, 5);
        assert_eq!(d.exact, BigRational::zero());
        assert_eq!(d.tail, pow2_neg(5));
        let a3 = embed(&band_generator(3).unwrap());
        let expect = pow2_neg(3) + pow2_neg(4) + pow2_neg(5);
        assert_eq!(product_distance(&one, &a3, 5).exact, expect);
        assert_eq!(product_distance(&one, &g, 5).exact, expect);
    }

    #[test]
    fn winding_violation_lists() {
        let g = g_schedule();
        let v = winding_violations(&g, 1, 2, 12).unwrap();
        assert_eq!(v, (3..=12).collect::<Vec<_>>());
        let one = TowerElement::identity();
        assert!(winding_violations(&one, 1, 2, 12).unwrap().is_empty());
        // an embedded finite word has no violations above its strand count
        let e = embed(&band_generator(4).unwrap());
        let v = winding_violations(&e, 1, 2, 10).unwrap();
        assert!(v.iter().all(|&m| m <= 4));
        assert!(winding_violations(&g, 2, 2, 12).is_err());
        assert!(winding_violations(&g, 1, 2, 1).is_err());
    }

    #[test]
    fn group_laws_levelwise() {
        let g = g_schedule();
        let a4 = embed(&band_generator(4).unwrap());
        let prod = g.multiply(&a4);
        for n in 1..=6 {
            let expect = g.truncate(n).multiply(&a4.truncate(n)).unwrap();
            assert_eq!(prod.truncate(n), expect);
        }
        let inv = g.inverse();
        for n in 1..=6 {
            assert!(g
                .truncate(n)
                .multiply(&inv.truncate(n))
                .unwrap()
                .is_trivial());
        }
    }

    #[test]
    fn conjugation_acts_levelwise_and_below_support() {
        let a3 = embed(&band_generator(3).unwrap());
        let by = BraidWord::parse("s1 s2", 3).unwrap();
        let conj = a3.conjugated_by(&by);
        for n in 3..=6 {
            let b = by.stabilize(n).unwrap();
            let expect = b
                .multiply(&a3.truncate(n))
                .unwrap()
                .multiply(&b.inverse())
                .unwrap();
            assert!(conj.truncate(n).equivalent(&expect).unwrap());
        }
        // below the support of `by`: the forgetful image of the level-3 value
        let w3 = conj.truncate(3);
        assert!(conj
            .truncate(2)
            .equivalent(&w3.forget_strand(3).unwrap())
            .unwrap());
        assert!(conj.check_compat(7));
    }

    #[test]
    fn cauchy_diagonal_examples() {
        let g = g_schedule();
        // constant sequence: same truncations
        let diag = cauchy_diagonal(&[g.clone(), g.clone(), g.clone()]).unwrap();
        for n in 1..=5 {
            assert!(diag.truncate(n).equivalent(&g.truncate(n)).unwrap());
        }
        // partial products x_n = embed(a_3 ... a_n) realize G
        let mut xs = Vec::new();
        for n in 1..=8u32 {
            xs.push(embed(&g.truncate(n)));
        }
        let diag = cauchy_diagonal(&xs).unwrap();
        for n in 1..=8 {
            assert!(diag.truncate(n).equivalent(&g.truncate(n)).unwrap());
            assert!(ultrametric(&diag, &xs[(n - 1) as usize], 8).le_pow2(n));
        }
        // a violation at level 4
        let mut bad = xs[..5].to_vec();
        bad[4] = bad[3].multiply(&embed(&pure_generator_a(1, 2, 2).unwrap()));
        assert_eq!(
            cauchy_diagonal(&bad),
            Err(TowerError::PromiseViolated { level: 4 })
        );
        assert_eq!(cauchy_diagonal(&[]), Err(TowerError::EmptySequence));
    }

    #[test]
    fn density_of_finitary_approximations() {
        let g = g_schedule();
        let b4 = g.dense_approx(4);
        assert!(b4.equivalent(&g.truncate(4)).unwrap());
        let d = ultrametric(&g, &TowerElement::embed(&b4).unwrap(), 8);
        assert_eq!(d, DyadicDistance::Exact(5));
        for n in 1..=6 {
            let approx = TowerElement::embed(&g.dense_approx(n)).unwrap();
            assert!(ultrametric(&g, &approx, 10).le_pow2(n + 1));
        }
        assert!(TowerElement::identity().dense_approx(4).is_empty());
    }

    #[test]
    fn ball_identity_and_left_invariance() {
        let one = TowerElement::identity();
        let g = g_schedule();
        let a = embed(&band_generator(5).unwrap());
        for n in 1..=7 {
            let lhs = ultrametric(&one, &g, 8).lt_pow2(n);
            let rhs = g.truncate(n).is_trivial();
            assert_eq!(lhs, rhs);
        }
        let h = embed(&band_generator(3).unwrap());
        assert_eq!(
            ultrametric(&a.multiply(&g), &a.multiply(&h), 8),
            ultrametric(&g, &h, 8)
        );
    }

    #[test]
    fn event_validation() {
        let not_pure = BraidWord::parse("s1", 2).unwrap();
        assert!(matches!(
            TowerElement::from_events(vec![(2, not_pure)]),
            Err(TowerError::BadEvent { level: 2, .. })
        ));
        let wrong_level = pure_generator_a(1, 2, 2).unwrap();
        assert!(matches!(
            TowerElement::from_events(vec![(3, wrong_level)]),
            Err(TowerError::BadEvent { level: 3, .. })
        ));
    }
}
