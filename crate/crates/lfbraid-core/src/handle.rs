//! Dehornoy handle reduction: the secondary, independent word-problem
//! solver.
//!
//! A `sigma_i`-handle is a subword `sigma_i^e u sigma_i^{-e}` whose interior
//! `u` only uses generators with index `> i`. Reducing it removes the two
//! outer letters and rewrites each `sigma_{i+1}^d` in `u` as
//! `sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e`; this is an equality in the
//! braid group. Reduction of permitted handles always terminates, and a
//! fully reduced word is either empty (the trivial braid) or sigma-definite
//! in its lowest generator, hence nontrivial. We always reduce the handle
//! with the leftmost closing letter, which is automatically permitted.

use alloc::vec::Vec;

use crate::word::BraidWord;

/// One reduction pass target: positions `(q, p)` of the opening and closing
/// letters of the leftmost handle, or `None` if the word is reduced.
fn find_leftmost_handle(w: &[i32]) -> Option<(usize, usize)> {
    // last_at[j-1] = position of the most recent occurrence of index j
    let mut last_at: Vec<Option<usize>> = Vec::new();
    for (p, &l) in w.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        if last_at.len() < i {
            last_at.resize(i, None);
        }
        // most recent previous letter with index <= i
        let q = last_at[..i].iter().flatten().copied().max();
        if let Some(q) = q {
            if w[q] == -l {
                return Some((q, p));
            }
        }
        last_at[i - 1] = Some(p);
    }
    None
}

fn reduce_handle(w: &mut Vec<i32>, q: usize, p: usize) {
    let opener = w[q];
    let e = opener.signum();
    let i = opener.unsigned_abs() as i32;
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..q]);
    for &x in &w[q + 1..p] {
        if x.unsigned_abs() as i32 == i + 1 {
            out.push(-e * (i + 1));
            out.push(x.signum() * i);
            out.push(e * (i + 1));
        } else {
            out.push(x);
        }
    }
    out.extend_from_slice(&w[p + 1..]);
    *w = out;
}

/// Fully handle-reduce the letter sequence.
pub fn reduce(letters: &[i32]) -> Vec<i32> {
    let mut w = letters.to_vec();
    while let Some((q, p)) = find_leftmost_handle(&w) {
        reduce_handle(&mut w, q, p);
    }
    w
}

/// Exact triviality test: the handle-reduced word is empty iff the braid is
/// trivial.
pub fn is_trivial(word: &BraidWord) -> bool {
    reduce(word.letters()).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::band_generator;

    #[test]
    fn free_cancellation_is_a_handle() {
        assert!(reduce(&[1, -1]).is_empty());
        assert!(reduce(&[-2, 2]).is_empty());
        assert!(!reduce(&[1, 1]).is_empty());
    }

    #[test]
    fn braid_relation_collapses() {
        // s1 s2 s1 (s2 s1 s2)^-1
        assert!(reduce(&[1, 2, 1, -2, -1, -2]).is_empty());
        assert!(reduce(&[2, 1, 2, -1, -2, -1]).is_empty());
    }

    #[test]
    fn reduced_words_are_sigma_definite() {
        let a3 = band_generator(3).unwrap();
        let r = reduce(a3.letters());
        assert!(!r.is_empty());
        let main = r.iter().map(|l| l.unsigned_abs()).min().unwrap();
        let signs: Vec<i32> = r
            .iter()
            .filter(|l| l.unsigned_abs() == main)
            .map(|l| l.signum())
            .collect();
        assert!(signs.iter().all(|&s| s == signs[0]));
    }

    #[test]
    fn agrees_with_identities() {
        assert!(is_trivial(&BraidWord::identity(5)));
        let w = band_generator(4).unwrap();
        assert!(is_trivial(&w.multiply(&w.inverse()).unwrap()));
        assert!(!is_trivial(&w));
    }
}
