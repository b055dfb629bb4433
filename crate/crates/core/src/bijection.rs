//! The multiplication-compatible bijection between FC elements of
//! `W(A_n)` and non-crossing diagrams on `n + 1` strings.
//!
//! [`fc_to_diagram`] draws the diagram directly from the canonical form,
//! [`diagram_to_fc`] reads the canonical form back off the diagram, and
//! [`fc_to_diagram_reference`] multiplies generator diagrams along the
//! canonical word. The last one is the defining construction and serves as
//! the oracle for the first.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Arrow, Diagram, Dot};
use crate::fc::{is_saturated_in, Block, FcElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("block indices s={s}, t={t} must satisfy 1 <= t < s <= {size}")]
    IndexOutOfRange { s: usize, t: usize, size: usize },
    #[error("multiplying out a reduced word produced {loops} loop(s)")]
    UnexpectedLoop { loops: usize },
}

/// A positive arrow `(i_s, (j_t + 1)')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositiveArrow {
    pub s: usize,
    pub t: usize,
    pub tail: usize,
    pub head: usize,
}

/// Candidate set for one block and the dot the algorithm picked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateStep {
    /// Block number `r`, 1-based.
    pub r: usize,
    /// `A(r)` (top) or `B(r)` (bottom); empty when the block's dot is
    /// already used by a positive arrow.
    pub set: Vec<usize>,
    /// Partner dot drawn by the algorithm, if any.
    pub chosen: Option<usize>,
}

/// Intermediate data of [`fc_to_diagram`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    pub positive: Vec<PositiveArrow>,
    pub top: Vec<CandidateStep>,
    pub bottom: Vec<CandidateStep>,
}

/// Whether `(i_s, (j_t + 1)')` is a positive arrow of the diagram of `w`
/// (1-based block numbers, `t < s`).
///
/// The conditions: `j_t = i_s + 2(s - t) - 1`; no block strictly between
/// `t` and `s` satisfies the analogous equation with either endpoint; and
/// the blocks strictly between are saturated in the generators
/// `i_s + 1 ..= j_t - 1`.
pub fn dplus_condition(w: &FcElement, s: usize, t: usize) -> Result<bool, BijectionError> {
    let blocks = w.blocks();
    if t == 0 || t >= s || s > blocks.len() {
        return Err(BijectionError::IndexOutOfRange {
            s,
            t,
            size: blocks.len(),
        });
    }
    let i = |r: usize| blocks[r - 1].start as isize;
    let j = |r: usize| blocks[r - 1].end as isize;
    let gap = |a: usize, b: usize| 2 * (b as isize - a as isize) - 1;
    if j(t) != i(s) + gap(t, s) {
        return Ok(false);
    }
    let minimal = (t + 1..s).all(|r| j(r) != i(s) + gap(r, s) && j(t) != i(r) + gap(t, r));
    if !minimal {
        return Ok(false);
    }
    let lo = blocks[s - 1].start + 1;
    let hi = blocks[t - 1].end - 1;
    Ok(is_saturated_in(&blocks[t..s - 1], lo, hi))
}

/// All positive arrows predicted by [`dplus_condition`], as `(s, t)` pairs.
pub fn dplus_pairs(w: &FcElement) -> Vec<(usize, usize)> {
    let p = w.size();
    let mut pairs = Vec::new();
    for s in 2..=p {
        for t in 1..s {
            if dplus_condition(w, s, t).expect("indices are in range") {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

struct Canvas {
    strings: usize,
    partner: Vec<Option<usize>>,
}

impl Canvas {
    fn new(strings: usize) -> Self {
        Self {
            strings,
            partner: vec![None; 2 * strings],
        }
    }

    fn top(&self, x: usize) -> usize {
        x - 1
    }

    fn bottom(&self, y: usize) -> usize {
        self.strings + y - 1
    }

    fn is_free(&self, slot: usize) -> bool {
        self.partner[slot].is_none()
    }

    fn join(&mut self, a: usize, b: usize) {
        debug_assert!(self.is_free(a) && self.is_free(b), "dot drawn twice");
        self.partner[a] = Some(b);
        self.partner[b] = Some(a);
    }

    fn finish(self) -> Diagram {
        let partner = self
            .partner
            .into_iter()
            .map(|x| x.expect("every dot is joined"))
            .collect();
        Diagram::from_partner(self.strings, partner).expect("drawn diagram is non-crossing")
    }
}

/// Draws the diagram of `w` directly from its canonical form.
///
/// Steps: verticals outside `i_p ..= j_1 + 1`; positive arrows for
/// increasing `s`; top-row arrows from each block start not already used,
/// to the lowest free dot on its right that is not a block start; bottom-row
/// arrows into each `(j_k + 1)'` not already used, from the highest free
/// dot on its left that is not some `(j_s + 1)'`; finally the remaining free
/// dots are joined left to right.
pub fn fc_to_diagram(w: &FcElement) -> (Diagram, BijectionTrace) {
    let n = w.rank();
    let strings = n + 1;
    let blocks = w.blocks();
    let p = blocks.len();
    let mut trace = BijectionTrace::default();
    if p == 0 {
        return (Diagram::identity(strings), trace);
    }
    let i = |r: usize| blocks[r - 1].start;
    let j = |r: usize| blocks[r - 1].end;
    let mut canvas = Canvas::new(strings);

    for u in (1..i(p)).chain(j(1) + 2..=strings) {
        canvas.join(canvas.top(u), canvas.bottom(u));
    }

    for s in 2..=p {
        if i(s) + 1 != i(s - 1) {
            continue;
        }
        let found = (1..s).rev().find(|&t| {
            j(t) == i(s - 1) + 2 * (s - 1 - t) && canvas.is_free(canvas.bottom(j(t) + 1))
        });
        let Some(t) = found else { continue };
        if !is_saturated_in(&blocks[t..s - 1], i(s - 1), j(t) - 1) {
            continue;
        }
        canvas.join(canvas.top(i(s)), canvas.bottom(j(t) + 1));
        trace.positive.push(PositiveArrow {
            s,
            t,
            tail: i(s),
            head: j(t) + 1,
        });
    }
    let positive_tails: BTreeSet<usize> = trace.positive.iter().map(|a| a.tail).collect();
    let positive_heads: BTreeSet<usize> = trace.positive.iter().map(|a| a.head).collect();
    let starts: BTreeSet<usize> = w.starts().collect();
    let heads: BTreeSet<usize> = w.ends().map(|e| e + 1).collect();

    let mut chosen_tops: Vec<usize> = Vec::new();
    for r in 1..=p {
        let set: Vec<usize> = if r > 1 && positive_tails.contains(&i(r)) {
            Vec::new()
        } else {
            (i(r) + 1..=j(1) + 1)
                .filter(|x| r == 1 || (!starts.contains(x) && !chosen_tops.contains(x)))
                .collect()
        };
        let chosen = if r == 1 {
            Some(i(1) + 1)
        } else if positive_tails.contains(&i(r)) {
            None
        } else {
            (i(r) + 1..=strings).find(|&x| canvas.is_free(canvas.top(x)) && !starts.contains(&x))
        };
        if let Some(f) = chosen {
            canvas.join(canvas.top(i(r)), canvas.top(f));
            chosen_tops.push(f);
        }
        trace.top.push(CandidateStep { r, set, chosen });
    }

    let mut chosen_bottoms: Vec<usize> = Vec::new();
    for r in (1..=p).rev() {
        let set: Vec<usize> = if r < p && positive_heads.contains(&(j(r) + 1)) {
            Vec::new()
        } else {
            (i(p)..=j(r))
                .filter(|y| r == p || (!heads.contains(y) && !chosen_bottoms.contains(y)))
                .collect()
        };
        let chosen = if r == p {
            Some(j(p))
        } else if positive_heads.contains(&(j(r) + 1)) {
            None
        } else {
            (1..=j(r))
                .rev()
                .find(|&y| canvas.is_free(canvas.bottom(y)) && !heads.contains(&y))
        };
        if let Some(g) = chosen {
            canvas.join(canvas.bottom(g), canvas.bottom(j(r) + 1));
            chosen_bottoms.push(g);
        }
        trace.bottom.push(CandidateStep { r, set, chosen });
    }

    let free_top: Vec<usize> = (1..=strings)
        .filter(|&x| canvas.is_free(canvas.top(x)))
        .collect();
    let free_bottom: Vec<usize> = (1..=strings)
        .filter(|&y| canvas.is_free(canvas.bottom(y)))
        .collect();
    for (x, y) in free_top.into_iter().zip(free_bottom) {
        canvas.join(canvas.top(x), canvas.bottom(y));
    }
    (canvas.finish(), trace)
}

/// The diagram of `w` as the product `E_{i_1} ... E_{j_1} ... E_{i_p} ... E_{j_p}`.
pub fn fc_to_diagram_reference(w: &FcElement) -> Result<Diagram, BijectionError> {
    let strings = w.rank() + 1;
    let mut diagram = Diagram::identity(strings);
    let mut loops = 0;
    for g in w.word() {
        let e = Diagram::generator(strings, g).expect("canonical word uses valid generators");
        let (next, m) = diagram.concatenate(&e).expect("same string count");
        diagram = next;
        loops += m;
    }
    if loops > 0 {
        return Err(BijectionError::UnexpectedLoop { loops });
    }
    Ok(diagram)
}

/// Reads the canonical form off a diagram: block starts are the tails of
/// top-row and positive arrows, block ends are the heads of bottom-row and
/// positive arrows minus one, both listed decreasingly.
pub fn diagram_to_fc(d: &Diagram) -> FcElement {
    let c = d.components();
    let blocks = c
        .starts
        .iter()
        .rev()
        .zip(c.ends.iter().rev())
        .map(|(&i, &j)| Block::new(i, j))
        .collect();
    FcElement::new(d.strings() - 1, blocks).expect("diagram index sets form standard pairs")
}

/// The positive arrows of `w`'s diagram as predicted by [`dplus_condition`].
pub fn predicted_positive_arrows(w: &FcElement) -> Vec<Arrow> {
    let blocks = w.blocks();
    let mut arrows: Vec<Arrow> = dplus_pairs(w)
        .into_iter()
        .map(|(s, t)| {
            Arrow::new(
                Dot::top(blocks[s - 1].start),
                Dot::bottom(blocks[t - 1].end + 1),
            )
        })
        .collect();
    arrows.sort();
    arrows
}
