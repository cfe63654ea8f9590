//! Seeded random generators for words, tower elements, and finitary
//! elements. Everything is driven by a named deterministic generator so
//! that identical seeds reproduce identical populations.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use lfbraid_core::tower::TowerElement;
use lfbraid_core::word::{band_generator, pure_generator_a, BraidWord, Permutation};
use lfbraid_core::ExtElement;

pub fn rng_from_seed(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniform random word: up to `max_len` letters on `strands` strands.
pub fn random_word(rng: &mut ChaCha20Rng, strands: u32, max_len: usize) -> BraidWord {
    assert!(strands >= 2);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::from_letters(strands, letters).unwrap()
}

/// Random pure word: a product of conjugated standard generators.
pub fn random_pure_word(rng: &mut ChaCha20Rng, strands: u32, factors: usize) -> BraidWord {
    assert!(strands >= 2);
    let mut out = BraidWord::identity(strands);
    let count = rng.gen_range(0..=factors);
    for _ in 0..count {
        let i = rng.gen_range(1..strands);
        let j = rng.gen_range(i + 1..=strands);
        let mut f = pure_generator_a(i, j, strands).unwrap();
        if rng.gen_bool(0.5) {
            f = f.inverse();
        }
        let conj = random_word(rng, strands, 4);
        let f = conj
            .multiply(&f)
            .unwrap()
            .multiply(&conj.inverse())
            .unwrap();
        out = out.multiply(&f).unwrap();
    }
    out
}

/// A random event word on `level` strands, drawn from products of the
/// standard generators `A_{ij}` (stabilized) and the band generator
/// `a_level`. With `compatible` the factors are restricted to words that
/// die under forgetting the top strand, so the schedule stays
/// forgetful-compatible.
fn random_event(rng: &mut ChaCha20Rng, level: u32, compatible: bool) -> BraidWord {
    let mut out = BraidWord::identity(level);
    let count = rng.gen_range(1..=2);
    for _ in 0..count {
        let pick_am = level >= 3 && rng.gen_bool(0.4);
        let mut f = if pick_am {
            band_generator(level).unwrap()
        } else if compatible {
            // A_{i, level} vanishes when strand `level` is forgotten
            let i = rng.gen_range(1..level);
            pure_generator_a(i, level, level).unwrap()
        } else {
            let i = rng.gen_range(1..level);
            let j = rng.gen_range(i + 1..=level);
            pure_generator_a(i, j, level).unwrap()
        };
        if rng.gen_bool(0.5) {
            f = f.inverse();
        }
        out = out.multiply(&f).unwrap();
    }
    out
}

/// Random tower element described by an event schedule with levels up to
/// `max_level`. Not necessarily forgetful-compatible.
pub fn random_tower(rng: &mut ChaCha20Rng, max_level: u32) -> TowerElement {
    random_tower_inner(rng, max_level, false)
}

/// Random forgetful-compatible tower element.
pub fn random_compatible_tower(rng: &mut ChaCha20Rng, max_level: u32) -> TowerElement {
    random_tower_inner(rng, max_level, true)
}

fn random_tower_inner(rng: &mut ChaCha20Rng, max_level: u32, compatible: bool) -> TowerElement {
    assert!(max_level >= 2);
    let count = rng.gen_range(0..=3);
    let mut events = Vec::new();
    for _ in 0..count {
        let level = rng.gen_range(2..=max_level);
        events.push((level, random_event(rng, level, compatible)));
    }
    let base = TowerElement::from_events(events).unwrap();
    // occasionally wrap in a lazy product or conjugation to exercise the
    // non-schedule nodes; both preserve forgetful compatibility
    match rng.gen_range(0..4) {
        0 => {
            let level = rng.gen_range(2..=max_level);
            let other =
                TowerElement::from_events(vec![(level, random_event(rng, level, compatible))])
                    .unwrap();
            base.multiply(&other)
        }
        1 => {
            let by_strands = rng.gen_range(2..=3);
            let by = random_word(rng, by_strands, 4);
            base.conjugated_by(&by)
        }
        _ => base,
    }
}

/// Random finitary permutation with support inside `1..=max_point`.
pub fn random_permutation(rng: &mut ChaCha20Rng, max_point: u32) -> Permutation {
    let n = rng.gen_range(1..=max_point);
    let mut images: Vec<u32> = (1..=n).collect();
    for k in (1..images.len()).rev() {
        let j = rng.gen_range(0..=k);
        images.swap(k, j);
    }
    Permutation::from_images(images).unwrap()
}

/// Random finitary full-group element.
pub fn random_ext(rng: &mut ChaCha20Rng, max_point: u32, max_level: u32) -> ExtElement {
    ExtElement::new(
        random_permutation(rng, max_point),
        random_compatible_tower(rng, max_level),
    )
}

/// A sequence honoring the Cauchy promise `x_{n+1} ∈ x_n V_n`: each step
/// multiplies by an embedded word that is trivial on the first `n` strands.
pub fn random_promise_sequence(
    rng: &mut ChaCha20Rng,
    len: usize,
    max_level: u32,
) -> Vec<TowerElement> {
    let mut xs = Vec::with_capacity(len);
    let mut current = random_compatible_tower(rng, max_level.max(2));
    xs.push(current.clone());
    for n in 1..len as u32 {
        // an element of V_n: the generator A_{i, n+1} dies under forgetting
        // the top strand, so its embedding is trivial at all levels <= n
        let level = n + 1;
        let step = if level >= 2 {
            let i = rng.gen_range(1..level);
            TowerElement::embed(&pure_generator_a(i, level, level).unwrap()).unwrap()
        } else {
            TowerElement::identity()
        };
        current = current.multiply(&step);
        xs.push(current.clone());
    }
    xs
}
