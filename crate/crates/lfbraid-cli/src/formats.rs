//! Plain-text document formats: braid-word files, tower-element documents,
//! and loop documents. Canonical renderings round-trip bit-exactly.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};

use lfbraid_core::geom::{Breakpoint, PLLoop, Point, Rational};
use lfbraid_core::tower::{Rule, TowerElement, DEFAULT_DEPTH_HINT};
use lfbraid_core::word::{BraidWord, Permutation};
use lfbraid_core::ExtElement;

/// Braid-word file: a `strands=<n>` header followed by one word per line.
pub fn parse_word_file(text: &str) -> Result<(u32, Vec<BraidWord>)> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| anyhow!("empty word file"))?;
    let strands: u32 = header
        .strip_prefix("strands=")
        .ok_or_else(|| anyhow!("word file must start with `strands=<n>`"))?
        .trim()
        .parse()
        .context("bad strand count")?;
    let mut words = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        words.push(BraidWord::parse(line, strands).map_err(|e| anyhow!("{e}"))?);
    }
    Ok((strands, words))
}

pub fn render_word_file(strands: u32, words: &[BraidWord]) -> String {
    let mut out = format!("strands={strands}\n");
    for w in words {
        out.push_str(&w.render());
        out.push('\n');
    }
    out
}

/// A parsed tower document: an optional finitary permutation (making it an
/// element of the finitary full group) and the schedule-described pure
/// part.
#[derive(Clone, Debug, PartialEq)]
pub struct TowerDoc {
    pub perm: Permutation,
    pub element: TowerElement,
}

impl TowerDoc {
    pub fn to_ext(&self) -> ExtElement {
        ExtElement::new(self.perm.clone(), self.element.clone())
    }
}

/// Tower document lines, in canonical order:
///
/// ```text
/// perm=2,1                       (optional; identity if absent)
/// rule=a_m                       (optional)
/// event level=3 word="s2 s1 s1 s2^-1"
/// depth_hint=10                  (optional; default 8)
/// ```
pub fn parse_tower_doc(text: &str) -> Result<TowerDoc> {
    let mut perm = Permutation::identity(0);
    let mut rule = None;
    let mut events: Vec<(u32, BraidWord)> = Vec::new();
    let mut depth_hint = DEFAULT_DEPTH_HINT;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(images) = line.strip_prefix("perm=") {
            let images: Vec<u32> = images
                .split(',')
                .map(|t| t.trim().parse().context("bad permutation image"))
                .collect::<Result<_>>()?;
            perm = Permutation::from_images(images).map_err(|e| anyhow!("{e}"))?;
        } else if let Some(r) = line.strip_prefix("rule=") {
            match r.trim() {
                "a_m" => rule = Some(Rule::BandGenerators),
                other => bail!("unknown rule `{other}`"),
            }
        } else if let Some(rest) = line.strip_prefix("event ") {
            let rest = rest.trim();
            let rest = rest
                .strip_prefix("level=")
                .ok_or_else(|| anyhow!("event line must read `event level=<l> word=\"...\"`"))?;
            let (level_str, rest) = rest
                .split_once(' ')
                .ok_or_else(|| anyhow!("event line missing word"))?;
            let level: u32 = level_str.trim().parse().context("bad event level")?;
            let word_part = rest
                .trim()
                .strip_prefix("word=\"")
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| anyhow!("event word must be quoted"))?;
            let word = BraidWord::parse(word_part, level).map_err(|e| anyhow!("{e}"))?;
            events.push((level, word));
        } else if let Some(d) = line.strip_prefix("depth_hint=") {
            depth_hint = d.trim().parse().context("bad depth hint")?;
        } else {
            bail!("unrecognized tower document line: `{line}`");
        }
    }
    let element = TowerElement::from_schedule(events, rule)
        .map_err(|e| anyhow!("{e}"))?
        .with_depth_hint(depth_hint);
    Ok(TowerDoc { perm, element })
}

pub fn render_tower_doc(doc: &TowerDoc) -> String {
    let mut out = String::new();
    let perm = doc.perm.trimmed();
    if !perm.is_identity() {
        let images: Vec<String> = perm.images().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("perm={}\n", images.join(",")));
    }
    let (events, rule) = doc
        .element
        .as_schedule()
        .expect("only schedule elements are serializable");
    if let Some(Rule::BandGenerators) = rule {
        out.push_str("rule=a_m\n");
    }
    for (level, word) in events {
        out.push_str(&format!(
            "event level={} word=\"{}\"\n",
            level,
            word.render()
        ));
    }
    if doc.element.depth_hint() != DEFAULT_DEPTH_HINT {
        out.push_str(&format!("depth_hint={}\n", doc.element.depth_hint()));
    }
    out
}

/// Loop document: per-strand breakpoint blocks.
///
/// ```text
/// strand 8:
/// t=0 x=8 y=0
/// t=1/4 x=36/5 y=3/25
/// ```
pub fn parse_loop_doc(text: &str) -> Result<PLLoop> {
    let mut paths: BTreeMap<u32, Vec<Breakpoint>> = BTreeMap::new();
    let mut current: Option<u32> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(s) = line.strip_prefix("strand ") {
            let s = s
                .strip_suffix(':')
                .ok_or_else(|| anyhow!("strand header must end with `:`"))?;
            let strand: u32 = s.trim().parse().context("bad strand index")?;
            if paths.contains_key(&strand) {
                bail!("duplicate strand {strand}");
            }
            paths.insert(strand, Vec::new());
            current = Some(strand);
        } else if line.starts_with("t=") {
            let strand = current.ok_or_else(|| anyhow!("breakpoint before any strand header"))?;
            let mut t = None;
            let mut x = None;
            let mut y = None;
            for tok in line.split_whitespace() {
                if let Some(v) = tok.strip_prefix("t=") {
                    t = Some(parse_rational(v)?);
                } else if let Some(v) = tok.strip_prefix("x=") {
                    x = Some(parse_rational(v)?);
                } else if let Some(v) = tok.strip_prefix("y=") {
                    y = Some(parse_rational(v)?);
                } else {
                    bail!("unrecognized breakpoint token `{tok}`");
                }
            }
            let (t, x, y) = (
                t.ok_or_else(|| anyhow!("breakpoint missing t"))?,
                x.ok_or_else(|| anyhow!("breakpoint missing x"))?,
                y.ok_or_else(|| anyhow!("breakpoint missing y"))?,
            );
            paths
                .get_mut(&strand)
                .unwrap()
                .push(Breakpoint::new(t, Point::new(x, y)));
        } else {
            bail!("unrecognized loop document line: `{line}`");
        }
    }
    PLLoop::from_paths(paths).map_err(|e| anyhow!("{e}"))
}

pub fn render_loop_doc(gamma: &PLLoop) -> String {
    let mut out = String::new();
    for (strand, path) in gamma.paths() {
        out.push_str(&format!("strand {strand}:\n"));
        for bp in path {
            out.push_str(&format!("t={} x={} y={}\n", bp.t, bp.pos.re, bp.pos.im));
        }
    }
    out
}

/// Parse an exact rational `p`, `-p`, or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.parse::<Rational>()
        .map_err(|e| anyhow!("bad rational `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lfbraid_core::geom::beta_loop;
    use lfbraid_core::word::band_generator;

    #[test]
    fn word_file_round_trip() {
        let text = "strands=3\ns1 s2^-1\n\ns1 s1\n";
        let (n, words) = parse_word_file(text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(words.len(), 2);
        let canonical = render_word_file(n, &words);
        let (n2, words2) = parse_word_file(&canonical).unwrap();
        assert_eq!(n, n2);
        assert_eq!(words, words2);
        assert_eq!(render_word_file(n2, &words2), canonical);
    }

    #[test]
    fn tower_doc_round_trip() {
        let text = "rule=a_m\nevent level=3 word=\"s2 s1 s1 s2^-1\"\n";
        let doc = parse_tower_doc(text).unwrap();
        assert_eq!(render_tower_doc(&doc), text);
        let with_perm = "perm=2,1\nevent level=2 word=\"s1 s1\"\ndepth_hint=10\n";
        let doc = parse_tower_doc(with_perm).unwrap();
        assert_eq!(render_tower_doc(&doc), with_perm);
        assert_eq!(doc.element.depth_hint(), 10);
        // identity document
        let empty = parse_tower_doc("").unwrap();
        assert!(empty.perm.is_identity());
        assert_eq!(render_tower_doc(&empty), "");
    }

    #[test]
    fn tower_doc_rejects_bad_lines() {
        assert!(parse_tower_doc("rule=b_m").is_err());
        assert!(parse_tower_doc("event level=2 word=\"s1\"").is_err()); // not pure
        assert!(parse_tower_doc("bogus").is_err());
    }

    #[test]
    fn tower_doc_matches_band_schedule() {
        let doc = parse_tower_doc("rule=a_m\n").unwrap();
        let g = TowerElement::counterexample_schedule();
        for n in 1..=6 {
            assert_eq!(doc.element.truncate(n), g.truncate(n));
        }
        // explicit embed document
        let a3 = band_generator(3).unwrap();
        let text = format!("event level=3 word=\"{}\"\n", a3.render());
        let doc = parse_tower_doc(&text).unwrap();
        assert!(doc.element.truncate(3).equivalent(&a3).unwrap());
    }

    #[test]
    fn loop_doc_round_trip() {
        let l = beta_loop(3).unwrap();
        let text = render_loop_doc(&l);
        let back = parse_loop_doc(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(render_loop_doc(&back), text);
    }
}
