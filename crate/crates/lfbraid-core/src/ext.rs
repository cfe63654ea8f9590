//! The finitary full group: pairs of a finitary permutation and a pure
//! tower element, multiplied through the positive permutation-braid
//! section.
//!
//! An element `(sigma, k)` stands for `b_sigma · k`, where `b_sigma` is the
//! positive permutation braid of `sigma` on its support, extended by the
//! identity. The group law is
//! `(sigma, k)(tau, l) = (sigma tau, c(sigma,tau) · k^{b_tau} · l)` with the
//! pure cocycle `c(sigma,tau) = b_{sigma tau}^{-1} b_sigma b_tau` and
//! `k^{b} = b^{-1} k b`. The extension metric is `1` across distinct
//! permutation cosets and the tower ultrametric inside a coset.

use core::fmt;

use crate::tower::{ultrametric, DyadicDistance, TowerElement, TowerError};
use crate::word::{permutation_braid, BraidWord, Permutation};

/// An element of the finitary full group as (permutation, pure part).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    perm: Permutation,
    pure: TowerElement,
}

impl ExtElement {
    pub fn identity() -> Self {
        ExtElement {
            perm: Permutation::identity(0),
            pure: TowerElement::identity(),
        }
    }

    /// Pair a finitary permutation with a pure tower element.
    pub fn new(perm: Permutation, pure: TowerElement) -> Self {
        ExtElement {
            perm: perm.trimmed(),
            pure,
        }
    }

    /// Embed a finite braid word: split off its permutation through the
    /// positive section, leaving a pure remainder.
    pub fn from_word(w: &BraidWord) -> Result<Self, TowerError> {
        let perm = w.permutation();
        let section = permutation_braid(&perm).stabilize(w.strands())?;
        let pure_word = section.inverse().multiply(w)?;
        debug_assert!(pure_word.is_pure());
        Ok(ExtElement {
            perm: perm.trimmed(),
            pure: TowerElement::embed(&pure_word)?,
        })
    }

    /// The image under the projection to the finitary permutations.
    pub fn pi_star(&self) -> &Permutation {
        &self.perm
    }

    pub fn pure_part(&self) -> &TowerElement {
        &self.pure
    }

    /// The positive permutation braid of this element's permutation.
    pub fn section_word(&self) -> BraidWord {
        permutation_braid(&self.perm)
    }

    /// Group multiplication through the fixed section.
    pub fn multiply(&self, other: &ExtElement) -> ExtElement {
        let (sigma, k) = (&self.perm, &self.pure);
        let (tau, l) = (&other.perm, &other.pure);
        let sigma_tau = sigma.then(tau);
        let n = permutation_braid(sigma)
            .strands()
            .max(permutation_braid(tau).strands())
            .max(permutation_braid(&sigma_tau).strands());
        let b_sigma = permutation_braid(sigma).stabilize(n).unwrap();
        let b_tau = permutation_braid(tau).stabilize(n).unwrap();
        let b_st = permutation_braid(&sigma_tau).stabilize(n).unwrap();
        // pure cocycle c = b_{sigma tau}^{-1} b_sigma b_tau
        let cocycle = b_st
            .inverse()
            .multiply(&b_sigma)
            .unwrap()
            .multiply(&b_tau)
            .unwrap();
        debug_assert!(cocycle.is_pure());
        let conj_k = k.conjugated_by(&b_tau.inverse());
        let pure = TowerElement::embed(&cocycle)
            .unwrap()
            .multiply(&conj_k)
            .multiply(l);
        ExtElement {
            perm: sigma_tau.trimmed(),
            pure,
        }
    }

    /// Group inverse through the fixed section.
    pub fn inverse(&self) -> ExtElement {
        let sigma = &self.perm;
        let sigma_inv = sigma.inverse();
        let n = permutation_braid(sigma)
            .strands()
            .max(permutation_braid(&sigma_inv).strands());
        let b_sigma = permutation_braid(sigma).stabilize(n).unwrap();
        let b_inv = permutation_braid(&sigma_inv).stabilize(n).unwrap();
        // (b_sigma k)^{-1} = b_{sigma^{-1}} · (b_sigma b_{sigma^{-1}})^{-1} · b_sigma k^{-1} b_sigma^{-1}
        let cocycle = b_sigma.multiply(&b_inv).unwrap().inverse();
        debug_assert!(cocycle.is_pure());
        let conj = self.pure.inverse().conjugated_by(&b_sigma);
        let pure = TowerElement::embed(&cocycle).unwrap().multiply(&conj);
        ExtElement {
            perm: sigma_inv.trimmed(),
            pure,
        }
    }

    /// A finite braid word within `2^{-(n+1)}` of this element: the section
    /// word times the level-n dense approximation of the pure part.
    pub fn closure_witness(&self, n: u32) -> BraidWord {
        let b = permutation_braid(&self.perm);
        let approx = self.pure.dense_approx(n);
        let m = b.strands().max(approx.strands()).max(1);
        b.stabilize(m)
            .unwrap()
            .multiply(&approx.stabilize(m).unwrap())
            .unwrap()
    }
}

/// The extension metric value: `1` across permutation cosets, dyadic inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtDistance {
    One,
    Dyadic(DyadicDistance),
}

impl ExtDistance {
    pub fn is_exact(&self) -> bool {
        match self {
            ExtDistance::One => true,
            ExtDistance::Dyadic(d) => d.is_exact(),
        }
    }

    /// Certified `<= 2^{-n}`.
    pub fn le_pow2(&self, n: u32) -> bool {
        match self {
            ExtDistance::One => n == 0,
            ExtDistance::Dyadic(d) => d.le_pow2(n),
        }
    }
}

impl fmt::Display for ExtDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDistance::One => write!(f, "1"),
            ExtDistance::Dyadic(d) => write!(f, "{d}"),
        }
    }
}

/// The extension metric: `1` if the permutations differ, otherwise the
/// ultrametric of the pure parts (`x^{-1}y` is pure inside a coset).
pub fn ext_distance(x: &ExtElement, y: &ExtElement, depth: u32) -> ExtDistance {
    if x.perm != y.perm {
        ExtDistance::One
    } else {
        ExtDistance::Dyadic(ultrametric(&x.pure, &y.pure, depth))
    }
}
