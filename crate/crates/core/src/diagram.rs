//! Non-crossing Temperley-Lieb diagrams on `k` strings.
//!
//! Dots are `1..=k` on the top row and `1'..=k'` on the bottom row, totally
//! ordered `1 < .. < k < 1' < .. < k'`. An arrow is a join written with its
//! smaller dot (tail) first. Storage is a flat involution over the `2k`
//! dots: top `x` has slot `x - 1`, bottom `y'` has slot `k + y - 1`, so the
//! slot order is the total order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    Top,
    Bottom,
}

/// A dot, 1-based within its row. The derived order is the total dot order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dot {
    pub row: Row,
    pub index: usize,
}

impl Dot {
    pub const fn top(index: usize) -> Self {
        Self {
            row: Row::Top,
            index,
        }
    }

    pub const fn bottom(index: usize) -> Self {
        Self {
            row: Row::Bottom,
            index,
        }
    }

    fn slot(self, strings: usize) -> usize {
        match self.row {
            Row::Top => self.index - 1,
            Row::Bottom => strings + self.index - 1,
        }
    }

    fn from_slot(slot: usize, strings: usize) -> Self {
        if slot < strings {
            Self::top(slot + 1)
        } else {
            Self::bottom(slot - strings + 1)
        }
    }

    /// Position when walking the boundary: along the top row left to right,
    /// then back along the bottom row right to left.
    fn boundary_position(self, strings: usize) -> usize {
        match self.row {
            Row::Top => self.index - 1,
            Row::Bottom => 2 * strings - self.index,
        }
    }
}

impl fmt::Display for Dot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "{}", self.index),
            Row::Bottom => write!(f, "{}'", self.index),
        }
    }
}

/// A join between two dots, `tail < head` in the total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tail: Dot,
    pub head: Dot,
}

impl Arrow {
    /// Orders the two endpoints.
    pub fn new(a: Dot, b: Dot) -> Self {
        if a <= b {
            Self { tail: a, head: b }
        } else {
            Self { tail: b, head: a }
        }
    }

    pub fn is_top(&self) -> bool {
        self.head.row == Row::Top
    }

    pub fn is_bottom(&self) -> bool {
        self.tail.row == Row::Bottom
    }

    pub fn is_through(&self) -> bool {
        self.tail.row == Row::Top && self.head.row == Row::Bottom
    }

    /// Through-string going strictly right: `head > tail'`.
    pub fn is_positive(&self) -> bool {
        self.is_through() && self.head.index > self.tail.index
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.tail, self.head)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs at least one string")]
    NoStrings,
    #[error("dot {0} is outside the diagram")]
    DotOutOfRange(Dot),
    #[error("dot {0} is not matched exactly once")]
    NotMatching(Dot),
    #[error("arrows {0} and {1} cross")]
    Crossing(Arrow, Arrow),
    #[error("arrow {0} joins dots of the wrong parity")]
    ParityViolation(Arrow),
    #[error("generator index {index} out of range for {strings} strings")]
    IndexOutOfRange { strings: usize, index: usize },
    #[error("cannot concatenate diagrams on {0} and {1} strings")]
    StringMismatch(usize, usize),
    #[error("cannot parse diagram from {input:?}: {message}")]
    Parse { input: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct Diagram {
    strings: usize,
    partner: Vec<usize>,
}

/// The four-way split of a diagram's arrows and the index sets read off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Arrows inside the top row.
    pub top: Vec<Arrow>,
    /// Arrows inside the bottom row.
    pub bottom: Vec<Arrow>,
    /// Through-strings going strictly right.
    pub positive: Vec<Arrow>,
    /// Through-strings that are vertical or go left.
    pub negative: Vec<Arrow>,
    /// Tails of top-row and positive arrows.
    pub starts: BTreeSet<usize>,
    /// `y - 1` for every head `y'` of a bottom-row or positive arrow.
    pub ends: BTreeSet<usize>,
}

impl Components {
    pub fn size(&self) -> usize {
        self.top.len() + self.positive.len()
    }
}

impl Diagram {
    /// Validates a set of arrows on `strings` strings.
    pub fn new(strings: usize, arrows: &[Arrow]) -> Result<Self, DiagramError> {
        if strings == 0 {
            return Err(DiagramError::NoStrings);
        }
        let mut partner = vec![usize::MAX; 2 * strings];
        for arrow in arrows {
            for dot in [arrow.tail, arrow.head] {
                if dot.index == 0 || dot.index > strings {
                    return Err(DiagramError::DotOutOfRange(dot));
                }
            }
            let (a, b) = (arrow.tail.slot(strings), arrow.head.slot(strings));
            if a == b {
                return Err(DiagramError::NotMatching(arrow.tail));
            }
            for (x, y) in [(a, b), (b, a)] {
                if partner[x] != usize::MAX {
                    return Err(DiagramError::NotMatching(Dot::from_slot(x, strings)));
                }
                partner[x] = y;
            }
        }
        if let Some(x) = partner.iter().position(|&y| y == usize::MAX) {
            return Err(DiagramError::NotMatching(Dot::from_slot(x, strings)));
        }
        let diagram = Self { strings, partner };
        diagram.check_planar()?;
        Ok(diagram)
    }

    /// Builds from a dot -> partner slot array, validating it.
    pub fn from_partner(strings: usize, partner: Vec<usize>) -> Result<Self, DiagramError> {
        if strings == 0 {
            return Err(DiagramError::NoStrings);
        }
        if partner.len() != 2 * strings {
            return Err(DiagramError::NotMatching(Dot::from_slot(
                partner.len().min(2 * strings),
                strings,
            )));
        }
        for (x, &y) in partner.iter().enumerate() {
            if y >= 2 * strings || y == x || partner[y] != x {
                return Err(DiagramError::NotMatching(Dot::from_slot(x, strings)));
            }
        }
        let diagram = Self { strings, partner };
        diagram.check_planar()?;
        Ok(diagram)
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let k = self.strings;
        let mut by_position = vec![0; 2 * k];
        for slot in 0..2 * k {
            by_position[Dot::from_slot(slot, k).boundary_position(k)] = slot;
        }
        let mut open: Vec<usize> = Vec::new();
        for &slot in &by_position {
            let mate = self.partner[slot];
            let mate_pos = Dot::from_slot(mate, k).boundary_position(k);
            if mate_pos > Dot::from_slot(slot, k).boundary_position(k) {
                open.push(slot);
                continue;
            }
            let top = open.pop().expect("every close has an open before it");
            if top != mate {
                return Err(DiagramError::Crossing(
                    self.arrow_at(top),
                    self.arrow_at(slot),
                ));
            }
        }
        for arrow in self.arrows() {
            let same_row = arrow.tail.row == arrow.head.row;
            let same_parity = arrow.tail.index % 2 == arrow.head.index % 2;
            if same_row == same_parity {
                return Err(DiagramError::ParityViolation(arrow));
            }
        }
        Ok(())
    }

    fn arrow_at(&self, slot: usize) -> Arrow {
        Arrow::new(
            Dot::from_slot(slot, self.strings),
            Dot::from_slot(self.partner[slot], self.strings),
        )
    }

    pub fn identity(strings: usize) -> Self {
        let partner = (0..2 * strings)
            .map(|x| (x + strings) % (2 * strings))
            .collect();
        Self { strings, partner }
    }

    /// `E_i`: cups joining `i, i+1` on both rows, verticals elsewhere.
    pub fn generator(strings: usize, i: usize) -> Result<Self, DiagramError> {
        if i == 0 || i + 1 > strings {
            return Err(DiagramError::IndexOutOfRange { strings, index: i });
        }
        let mut d = Self::identity(strings);
        let (a, b) = (i - 1, i);
        let (c, e) = (strings + i - 1, strings + i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[c] = e;
        d.partner[e] = c;
        Ok(d)
    }

    pub fn strings(&self) -> usize {
        self.strings
    }

    /// Partner slot of every slot (0-based, top then bottom).
    pub fn partner_slots(&self) -> &[usize] {
        &self.partner
    }

    pub fn partner(&self, dot: Dot) -> Dot {
        Dot::from_slot(self.partner[dot.slot(self.strings)], self.strings)
    }

    /// All arrows in increasing order of tail.
    pub fn arrows(&self) -> Vec<Arrow> {
        (0..2 * self.strings)
            .filter(|&x| x < self.partner[x])
            .map(|x| self.arrow_at(x))
            .collect()
    }

    pub fn components(&self) -> Components {
        let mut c = Components {
            top: Vec::new(),
            bottom: Vec::new(),
            positive: Vec::new(),
            negative: Vec::new(),
            starts: BTreeSet::new(),
            ends: BTreeSet::new(),
        };
        for arrow in self.arrows() {
            if arrow.is_top() {
                c.starts.insert(arrow.tail.index);
                c.top.push(arrow);
            } else if arrow.is_bottom() {
                c.ends.insert(arrow.head.index - 1);
                c.bottom.push(arrow);
            } else if arrow.is_positive() {
                c.starts.insert(arrow.tail.index);
                c.ends.insert(arrow.head.index - 1);
                c.positive.push(arrow);
            } else {
                c.negative.push(arrow);
            }
        }
        c
    }

    /// Places `other` below `self`, traces the composite strands and removes
    /// closed loops. Returns the product diagram and the number of loops.
    pub fn concatenate(&self, other: &Diagram) -> Result<(Diagram, usize), DiagramError> {
        let k = self.strings;
        if other.strings != k {
            return Err(DiagramError::StringMismatch(k, other.strings));
        }
        // Nodes: 0..k top of self, k..2k middle row, 2k..3k bottom of other.
        // `self` acts on nodes 0..2k; `other` on nodes k..3k.
        let upper = |node: usize| self.partner[node];
        let lower = |node: usize| other.partner[node - k] + k;
        let is_middle = |node: usize| (k..2 * k).contains(&node);

        let mut visited = vec![false; k];
        let mut partner = vec![usize::MAX; 2 * k];
        let outer_slot = |node: usize| if node < k { node } else { node - k };
        for start in (0..k).chain(2 * k..3 * k) {
            if partner[outer_slot(start)] != usize::MAX {
                continue;
            }
            let mut use_upper = start < k;
            let mut node = start;
            loop {
                node = if use_upper { upper(node) } else { lower(node) };
                if !is_middle(node) {
                    break;
                }
                visited[node - k] = true;
                use_upper = !use_upper;
            }
            partner[outer_slot(start)] = outer_slot(node);
            partner[outer_slot(node)] = outer_slot(start);
        }

        let mut loops = 0;
        for m in 0..k {
            if visited[m] {
                continue;
            }
            loops += 1;
            let mut node = m + k;
            let mut use_upper = true;
            loop {
                visited[node - k] = true;
                node = if use_upper { upper(node) } else { lower(node) };
                use_upper = !use_upper;
                if node == m + k {
                    break;
                }
            }
        }
        Ok((
            Diagram {
                strings: k,
                partner,
            },
            loops,
        ))
    }

    /// Mirror across the horizontal axis: `x <-> x'`.
    pub fn flip_vertical(&self) -> Self {
        let k = self.strings;
        let swap = |x: usize| if x < k { x + k } else { x - k };
        let mut partner = vec![0; 2 * k];
        for x in 0..2 * k {
            partner[swap(x)] = swap(self.partner[x]);
        }
        Self {
            strings: k,
            partner,
        }
    }

    /// Mirror across the vertical axis: `x -> k + 1 - x` on both rows.
    pub fn flip_horizontal(&self) -> Self {
        let k = self.strings;
        let reflect = |x: usize| if x < k { k - 1 - x } else { 3 * k - 1 - x };
        let mut partner = vec![0; 2 * k];
        for x in 0..2 * k {
            partner[reflect(x)] = reflect(self.partner[x]);
        }
        Self {
            strings: k,
            partner,
        }
    }

    /// Rebuilds a diagram from its top-row and bottom-row arrows: the free
    /// dots are joined left to right, leftmost free top to leftmost free
    /// bottom.
    pub fn from_rows(
        strings: usize,
        top: &[Arrow],
        bottom: &[Arrow],
    ) -> Result<Self, DiagramError> {
        let mut arrows: Vec<Arrow> = top.iter().chain(bottom).copied().collect();
        let used: BTreeSet<Dot> = arrows.iter().flat_map(|a| [a.tail, a.head]).collect();
        let free_top = (1..=strings).map(Dot::top).filter(|d| !used.contains(d));
        let free_bottom = (1..=strings).map(Dot::bottom).filter(|d| !used.contains(d));
        arrows.extend(free_top.zip(free_bottom).map(|(a, b)| Arrow::new(a, b)));
        Self::new(strings, &arrows)
    }
}

/// Every non-crossing diagram on `strings` strings, each once.
pub fn enumerate_diagrams(strings: usize) -> Vec<Diagram> {
    // Non-crossing perfect matchings of the boundary positions 0..2k.
    fn matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for mate in (lo + 1..hi).step_by(2) {
            let inner = matchings(lo + 1, mate);
            let outer = matchings(mate + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                    m.push((lo, mate));
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    out.push(m);
                }
            }
        }
        out
    }
    if strings == 0 {
        return Vec::new();
    }
    let k = strings;
    let slot_of_position = |pos: usize| if pos < k { pos } else { 3 * k - 1 - pos };
    matchings(0, 2 * k)
        .into_iter()
        .map(|m| {
            let mut partner = vec![0; 2 * k];
            for (a, b) in m {
                let (x, y) = (slot_of_position(a), slot_of_position(b));
                partner[x] = y;
                partner[y] = x;
            }
            Diagram {
                strings: k,
                partner,
            }
        })
        .collect()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strings={};", self.strings)?;
        for (n, arrow) in self.arrows().iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{arrow}")?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    /// Parses `strings=<k>;a-b,c-d,...` with bottom dots written `y'`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |message: &str| DiagramError::Parse {
            input: s.to_owned(),
            message: message.to_owned(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact
            .strip_prefix("strings=")
            .ok_or_else(|| fail("expected `strings=`"))?;
        let (count, body) = rest
            .split_once(';')
            .ok_or_else(|| fail("expected `;` after the string count"))?;
        let strings: usize = count.parse().map_err(|_| fail("bad string count"))?;
        let parse_dot = |token: &str| -> Result<Dot, DiagramError> {
            let (digits, row) = match token.strip_suffix('\'') {
                Some(d) => (d, Row::Bottom),
                None => (token, Row::Top),
            };
            let index = digits.parse().map_err(|_| fail("bad dot"))?;
            Ok(Dot { row, index })
        };
        let mut arrows = Vec::new();
        for item in body.split(',').filter(|item| !item.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| fail("arrow must be `a-b`"))?;
            arrows.push(Arrow::new(parse_dot(a)?, parse_dot(b)?));
        }
        Self::new(strings, &arrows)
    }
}

/// JSON form: `partner[d - 1]` is the partner of dot `d`, where top dots are
/// numbered `1..=k` and bottom dots `k+1..=2k`.
#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    strings: usize,
    partner: Vec<usize>,
}

impl TryFrom<DiagramRepr> for Diagram {
    type Error = DiagramError;

    fn try_from(repr: DiagramRepr) -> Result<Self, Self::Error> {
        let partner = repr.partner.iter().map(|&d| d.wrapping_sub(1)).collect();
        Diagram::from_partner(repr.strings, partner)
    }
}

impl From<Diagram> for DiagramRepr {
    fn from(d: Diagram) -> Self {
        DiagramRepr {
            strings: d.strings,
            partner: d.partner.iter().map(|x| x + 1).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(a: Dot, b: Dot) -> Arrow {
        Arrow::new(a, b)
    }

    use Dot as D;

    #[test]
    fn identity_and_generators() {
        assert_eq!(Diagram::identity(3).to_string(), "strings=3;1-1',2-2',3-3'");
        assert_eq!(
            Diagram::generator(2, 1).unwrap().to_string(),
            "strings=2;1-2,1'-2'"
        );
        assert_eq!(
            Diagram::generator(6, 3).unwrap().to_string(),
            "strings=6;1-1',2-2',3-4,5-5',6-6',3'-4'"
        );
        assert_eq!(
            Diagram::generator(3, 3),
            Err(DiagramError::IndexOutOfRange {
                strings: 3,
                index: 3
            })
        );
        assert!(Diagram::generator(3, 0).is_err());
    }

    #[test]
    fn validation_errors() {
        let crossing = Diagram::new(
            2,
            &[
                arrow(D::top(1), D::bottom(2)),
                arrow(D::top(2), D::bottom(1)),
            ],
        );
        assert!(matches!(crossing, Err(DiagramError::Crossing(..))));
        assert!(Diagram::new(
            2,
            &[
                arrow(D::top(1), D::top(2)),
                arrow(D::bottom(1), D::bottom(2))
            ]
        )
        .is_ok());
        assert!(matches!(
            Diagram::new(2, &[arrow(D::top(1), D::bottom(1))]),
            Err(DiagramError::NotMatching(_))
        ));
        assert!(matches!(
            Diagram::new(
                2,
                &[
                    arrow(D::top(1), D::bottom(1)),
                    arrow(D::top(1), D::bottom(2)),
                    arrow(D::top(2), D::bottom(2))
                ]
            ),
            Err(DiagramError::NotMatching(_))
        ));
        assert!(matches!(
            Diagram::new(2, &[arrow(D::top(1), D::bottom(3))]),
            Err(DiagramError::DotOutOfRange(_))
        ));
        assert_eq!(Diagram::new(0, &[]), Err(DiagramError::NoStrings));
        // A top cup nested around a through-string.
        assert!(matches!(
            Diagram::new(
                3,
                &[
                    arrow(D::top(1), D::top(3)),
                    arrow(D::top(2), D::bottom(2)),
                    arrow(D::bottom(1), D::bottom(3))
                ]
            ),
            Err(DiagramError::Crossing(..))
        ));
    }

    #[test]
    fn concatenation_examples() {
        let e1 = Diagram::generator(3, 1).unwrap();
        let e2 = Diagram::generator(3, 2).unwrap();
        assert_eq!(e1.concatenate(&e1).unwrap(), (e1.clone(), 1));
        let (e12, m1) = e1.concatenate(&e2).unwrap();
        let (e121, m2) = e12.concatenate(&e1).unwrap();
        assert_eq!((e121, m1 + m2), (e1.clone(), 0));
        let id = Diagram::identity(3);
        assert_eq!(id.concatenate(&e2).unwrap(), (e2.clone(), 0));
        assert_eq!(e2.concatenate(&id).unwrap(), (e2.clone(), 0));
        assert_eq!(
            e1.concatenate(&Diagram::identity(4)),
            Err(DiagramError::StringMismatch(3, 4))
        );
    }

    #[test]
    fn components_examples() {
        let c = Diagram::identity(4).components();
        assert_eq!(c.negative.len(), 4);
        assert_eq!(c.size(), 0);
        assert!(c.starts.is_empty() && c.ends.is_empty());

        let c = Diagram::generator(5, 2).unwrap().components();
        assert_eq!(c.top, vec![arrow(D::top(2), D::top(3))]);
        assert_eq!(c.bottom, vec![arrow(D::bottom(2), D::bottom(3))]);
        assert!(c.positive.is_empty());
        assert_eq!(c.starts, BTreeSet::from([2]));
        assert_eq!(c.ends, BTreeSet::from([2]));
        assert_eq!(c.size(), 1);

        // [1,3] on 4 strings: E_1 E_2 E_3.
        let mut d = Diagram::identity(4);
        for i in 1..=3 {
            d = d.concatenate(&Diagram::generator(4, i).unwrap()).unwrap().0;
        }
        let c = d.components();
        assert_eq!(c.top, vec![arrow(D::top(1), D::top(2))]);
        assert_eq!(c.bottom, vec![arrow(D::bottom(3), D::bottom(4))]);
        assert_eq!(
            c.negative,
            vec![
                arrow(D::top(3), D::bottom(1)),
                arrow(D::top(4), D::bottom(2))
            ]
        );
    }

    #[test]
    fn flips() {
        let e = Diagram::generator(4, 2).unwrap();
        assert_eq!(e.flip_vertical(), e);
        assert_eq!(
            Diagram::generator(6, 1).unwrap().flip_horizontal(),
            Diagram::generator(6, 5).unwrap()
        );
        // [1,2] on 3 strings flipped is the diagram of the reversed word s_2 s_1.
        let e1 = Diagram::generator(3, 1).unwrap();
        let e2 = Diagram::generator(3, 2).unwrap();
        let forward = e1.concatenate(&e2).unwrap().0;
        let backward = e2.concatenate(&e1).unwrap().0;
        assert_eq!(forward.flip_vertical(), backward);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=6).map(|k| enumerate_diagrams(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
        let all = enumerate_diagrams(4);
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for d in &all {
            assert_eq!(Diagram::new(4, &d.arrows()).as_ref(), Ok(d));
        }
    }

    #[test]
    fn rows_determine_diagram() {
        for d in enumerate_diagrams(5) {
            let c = d.components();
            assert_eq!(Diagram::from_rows(5, &c.top, &c.bottom).unwrap(), d);
        }
    }

    #[test]
    fn text_and_json_formats() {
        let d: Diagram = "strings=2;1-2,1'-2'".parse().unwrap();
        assert_eq!(d, Diagram::generator(2, 1).unwrap());
        let d2: Diagram = "strings=2; 2'-1', 2-1".parse().unwrap();
        assert_eq!(d2, d);
        assert!(matches!(
            "strings=2;1-2".parse::<Diagram>(),
            Err(DiagramError::NotMatching(_))
        ));
        assert!(matches!(
            "2;1-2".parse::<Diagram>(),
            Err(DiagramError::Parse { .. })
        ));
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"strings":2,"partner":[2,1,4,3]}"#);
        assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), d);
        assert!(serde_json::from_str::<Diagram>(r#"{"strings":2,"partner":[4,3,2,1]}"#).is_err());
        assert!(serde_json::from_str::<Diagram>(r#"{"strings":2,"partner":[0,1,4,3]}"#).is_err());
    }
}
