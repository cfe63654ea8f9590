//! Braid words in the Artin generators and exact operations on them.
//!
//! A word on `n` strands is a finite sequence of letters `±i` with
//! `1 <= i <= n-1`; the letter `i` is the positive generator crossing the
//! strands in positions `i`, `i+1`, and `-i` is its inverse. Words are kept
//! unreduced; equality of the group elements they represent is always
//! decided semantically through the word problem ([`BraidWord::is_trivial`]).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{dynnikov, handle};

/// Errors from the braid-word layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidError {
    /// A token in a word string could not be parsed.
    MalformedToken(String),
    /// A generator index is zero or not below the strand count.
    IndexOutOfRange { index: u32, strands: u32 },
    /// Two words on different strand counts were combined.
    StrandMismatch { left: u32, right: u32 },
    /// A strand count argument is too small for the operation.
    StrandsTooSmall { have: u32, want: u32 },
    /// A strand index argument is outside `1..=strands`.
    StrandOutOfRange { strand: u32, strands: u32 },
    /// An operation defined on pure braids was given a non-pure word.
    NotPure,
    /// A range precondition such as `i < j` or `m >= 3` failed.
    BadRange(String),
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::MalformedToken(t) => write!(f, "malformed token `{t}`"),
            BraidError::IndexOutOfRange { index, strands } => {
                write!(
                    f,
                    "generator index {index} out of range for {strands} strands"
                )
            }
            BraidError::StrandMismatch { left, right } => {
                write!(f, "strand mismatch: {left} vs {right}")
            }
            BraidError::StrandsTooSmall { have, want } => {
                write!(f, "strand count {have} too small, need at least {want}")
            }
            BraidError::StrandOutOfRange { strand, strands } => {
                write!(f, "strand {strand} out of range for {strands} strands")
            }
            BraidError::NotPure => write!(f, "word is not a pure braid"),
            BraidError::BadRange(msg) => write!(f, "{msg}"),
        }
    }
}

/// Which exact word-problem solver to run.
///
/// The two algorithms are independent; [`BraidWord::is_trivial`] uses the
/// Dynnikov action, and cross-validation suites run both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    /// Piecewise-linear action on integer lamination coordinates.
    Dynnikov,
    /// Dehornoy handle reduction.
    HandleReduction,
}

/// A finite word in the Artin generators of the braid group `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The empty word, the identity of `B_n`.
    pub fn identity(strands: u32) -> Self {
        assert!(strands >= 1, "strand count must be positive");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single positive generator `sigma_i` in `B_n`.
    pub fn generator(index: u32, strands: u32) -> Result<Self, BraidError> {
        Self::from_letters(strands, vec![index as i32])
    }

    /// Build a word from signed letters, validating every index.
    pub fn from_letters(strands: u32, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::StrandsTooSmall {
                have: strands,
                want: 1,
            });
        }
        for &l in &letters {
            let idx = l.unsigned_abs();
            if l == 0 || idx >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: idx,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse a whitespace-separated word of tokens `s<i>` and `s<i>^-1`.
    pub fn parse(text: &str, strands: u32) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (body, sign) = match tok.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (tok, 1),
            };
            let digits = body
                .strip_prefix('s')
                .ok_or_else(|| BraidError::MalformedToken(tok.to_string()))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(BraidError::MalformedToken(tok.to_string()));
            }
            let index: u32 = digits
                .parse()
                .map_err(|_| BraidError::MalformedToken(tok.to_string()))?;
            if index == 0 || index >= strands {
                return Err(BraidError::IndexOutOfRange { index, strands });
            }
            letters.push(sign * index as i32);
        }
        Ok(BraidWord { strands, letters })
    }

    /// Render in the same token format accepted by [`BraidWord::parse`].
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            if l > 0 {
                out.push_str(&format!("s{l}"));
            } else {
                out.push_str(&format!("s{}^-1", -l));
            }
        }
        out
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`. Both words must live in the same `B_n`.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The letter-reversed, sign-flipped word.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&l| -l).collect();
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The underlying permutation: strand starting at position `p` ends at
    /// position `permutation().apply(p)`. Signs are ignored.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            // post-compose with the transposition (i, i+1)
            for img in perm.images.iter_mut() {
                if *img == i as u32 {
                    *img = i as u32 + 1;
                } else if *img == i as u32 + 1 {
                    *img = i as u32;
                }
            }
        }
        perm
    }

    /// Membership in the pure braid group `P_n`.
    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// The same letters regarded in `B_m`, `m >= strands` (append trivial
    /// strands).
    pub fn stabilize(&self, m: u32) -> Result<BraidWord, BraidError> {
        if m < self.strands {
            return Err(BraidError::StrandsTooSmall {
                have: m,
                want: self.strands,
            });
        }
        Ok(BraidWord {
            strands: m,
            letters: self.letters.clone(),
        })
    }

    /// Delete the geometric strand starting at position `k` and re-index.
    ///
    /// For pure words this is the forgetful homomorphism `P_n -> P_{n-1}`.
    /// For non-pure words the operation is still defined by position
    /// tracking but is not a group homomorphism.
    pub fn forget_strand(&self, k: u32) -> Result<BraidWord, BraidError> {
        if k == 0 || k > self.strands {
            return Err(BraidError::StrandOutOfRange {
                strand: k,
                strands: self.strands,
            });
        }
        if self.strands < 2 {
            return Err(BraidError::StrandsTooSmall {
                have: self.strands,
                want: 2,
            });
        }
        // pos[p-1] = geometric strand currently at position p
        let mut pos: Vec<u32> = (1..=self.strands).collect();
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize; // crossing at positions i, i+1
            let (a, b) = (pos[i - 1], pos[i]);
            if a != k && b != k {
                // index shifts down by one if the tracked strand sits to the left
                let t = pos.iter().position(|&s| s == k).unwrap() as u32 + 1;
                let idx = if t < i as u32 { i as u32 - 1 } else { i as u32 };
                out.push(l.signum() * idx as i32);
            }
            pos.swap(i - 1, i);
        }
        Ok(BraidWord {
            strands: self.strands - 1,
            letters: out,
        })
    }

    /// Iterated forgetting of strands `strands, strands-1, ..., n+1`,
    /// realizing the bonding map down to `n` strands.
    pub fn forget_down_to(&self, n: u32) -> Result<BraidWord, BraidError> {
        if n < 1 || n > self.strands {
            return Err(BraidError::BadRange(format!(
                "cannot forget down to {n} strands from {}",
                self.strands
            )));
        }
        let mut w = self.clone();
        while w.strands > n {
            let top = w.strands;
            w = w.forget_strand(top)?;
        }
        Ok(w)
    }

    /// Pairwise winding number of geometric strands `i < j` in a pure word:
    /// half the signed count of crossings between them.
    pub fn winding(&self, i: u32, j: u32) -> Result<i64, BraidError> {
        if i == 0 || j <= i || j > self.strands {
            return Err(BraidError::BadRange(format!(
                "winding pair ({i},{j}) invalid for {} strands",
                self.strands
            )));
        }
        if !self.is_pure() {
            return Err(BraidError::NotPure);
        }
        let mut pos: Vec<u32> = (1..=self.strands).collect();
        let mut count: i64 = 0;
        for &l in &self.letters {
            let p = l.unsigned_abs() as usize;
            let (a, b) = (pos[p - 1], pos[p]);
            if (a == i && b == j) || (a == j && b == i) {
                count += l.signum() as i64;
            }
            pos.swap(p - 1, p);
        }
        // signed crossing counts of pure braids are even
        assert!(count % 2 == 0, "odd crossing count on a pure braid");
        Ok(count / 2)
    }

    /// Triviality in `B_n`, decided by the primary solver (Dynnikov action).
    pub fn is_trivial(&self) -> bool {
        self.is_trivial_by(Solver::Dynnikov)
    }

    /// Triviality by a chosen solver.
    pub fn is_trivial_by(&self, solver: Solver) -> bool {
        match solver {
            Solver::Dynnikov => dynnikov::is_trivial(self),
            Solver::HandleReduction => handle::is_trivial(self),
        }
    }

    /// Whether `self` and `other` represent the same element of `B_n`.
    pub fn equivalent(&self, other: &BraidWord) -> Result<bool, BraidError> {
        Ok(self.inverse().multiply(other)?.is_trivial())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The standard pure generator `A_{ij}` on `n` strands:
/// `sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}`.
pub fn pure_generator_a(i: u32, j: u32, n: u32) -> Result<BraidWord, BraidError> {
    if i == 0 || i >= j || j > n {
        return Err(BraidError::BadRange(format!(
            "pure generator A_({i},{j}) needs 1 <= i < j <= n, got n = {n}"
        )));
    }
    let mut letters: Vec<i32> = Vec::with_capacity(2 * (j - i) as usize);
    for k in (i + 1..j).rev() {
        letters.push(k as i32);
    }
    letters.push(i as i32);
    letters.push(i as i32);
    for k in i + 1..j {
        letters.push(-(k as i32));
    }
    BraidWord::from_letters(n, letters)
}

/// The band generator `a_m = A_{1,m}` on `m` strands (`m >= 3`), linking
/// strands `1` and `m`: winding `(1,m)` is `1`, winding `(2,m)` is `0`, and
/// forgetting strand `m` kills it.
pub fn band_generator(m: u32) -> Result<BraidWord, BraidError> {
    if m < 3 {
        return Err(BraidError::BadRange(format!(
            "band generator a_m needs m >= 3, got {m}"
        )));
    }
    pure_generator_a(1, m, m)
}

/// A permutation of `{1..n}`, with equality taken in the finitary sense
/// (trailing fixed points are ignored).
#[derive(Clone, Debug, Eq)]
pub struct Permutation {
    /// `images[p-1]` is the image of `p`, values in `1..=n`.
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from the image list (1-based). Must be a bijection of `{1..n}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self, BraidError> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(BraidError::BadRange("image list is not a bijection".into()));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` inside `{1..n}`.
    pub fn transposition(i: u32, j: u32, n: u32) -> Result<Self, BraidError> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(BraidError::BadRange(format!(
                "bad transposition ({i} {j}) in size {n}"
            )));
        }
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap((i - 1) as usize, (j - 1) as usize);
        Ok(Permutation { images })
    }

    pub fn size(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of `p`; points beyond the stored size are fixed.
    pub fn apply(&self, p: u32) -> u32 {
        if p == 0 || p > self.size() {
            p
        } else {
            self.images[(p - 1) as usize]
        }
    }

    /// Composition "self then other": `(self.then(other))(p) = other(self(p))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        let n = self.size().max(other.size());
        let images = (1..=n).map(|p| other.apply(self.apply(p))).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (p, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = p as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as u32 + 1)
    }

    /// The moved points, in increasing order.
    pub fn support(&self) -> Vec<u32> {
        (1..=self.size()).filter(|&p| self.apply(p) != p).collect()
    }

    /// Drop trailing fixed points (canonical finitary representative).
    pub fn trimmed(&self) -> Permutation {
        let mut n = self.images.len();
        while n > 0 && self.images[n - 1] == n as u32 {
            n -= 1;
        }
        Permutation {
            images: self.images[..n].to_vec(),
        }
    }

    /// Image list (1-based).
    pub fn images(&self) -> &[u32] {
        &self.images
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        let n = self.size().max(other.size());
        (1..=n).all(|p| self.apply(p) == other.apply(p))
    }
}

/// The positive permutation braid of `sigma` (half-twist lift): the unique
/// positive braid word of minimal length (one letter per inversion) whose
/// permutation is `sigma`.
pub fn permutation_braid(sigma: &Permutation) -> BraidWord {
    let sigma = sigma.trimmed();
    let n = sigma.size().max(1);
    let mut v: Vec<u32> = (1..=n).map(|p| sigma.apply(p)).collect();
    let mut letters: Vec<i32> = Vec::new();
    // bubble sort to the identity, recording adjacent swaps
    loop {
        let mut swapped = false;
        for p in 0..v.len().saturating_sub(1) {
            if v[p] > v[p + 1] {
                v.swap(p, p + 1);
                letters.push(p as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord {
        strands: n,
        letters,
    }
}
