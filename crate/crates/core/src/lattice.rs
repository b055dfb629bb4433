//! Dyck paths and ballot sequences, and the maps tying them to FC elements
//! and diagrams.
//!
//! A path of semilength `k` runs from `(0,0)` to `(k,k)` with Right `(1,0)`
//! and Up `(0,1)` steps and never rises above `y = x`. Reading Right as `+`
//! and Up as `-` gives the ballot. A peak is an Up step immediately
//! followed by a Right step; the FC element with blocks `(i_t, j_t)` is the
//! path whose peaks sit at `(j_t, i_t)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{Diagram, Dot};
use crate::fc::{Block, FcElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a ballot sequence: {0}")]
    InvalidBallot(String),
    #[error("not a Dyck path: {0}")]
    InvalidPath(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ballot {
    signs: Vec<Sign>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, LatticeError> {
        let mut height: isize = 0;
        for (n, step) in steps.iter().enumerate() {
            height += match step {
                Step::Right => 1,
                Step::Up => -1,
            };
            if height < 0 {
                return Err(LatticeError::InvalidPath(format!(
                    "rises above the diagonal at step {}",
                    n + 1
                )));
            }
        }
        if height != 0 {
            return Err(LatticeError::InvalidPath(
                "does not end on the diagonal".into(),
            ));
        }
        if steps.is_empty() {
            return Err(LatticeError::InvalidPath("empty path".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Coordinates of every Up step immediately followed by a Right step.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        let (mut x, mut y) = (0, 0);
        let mut peaks = Vec::new();
        for (n, step) in self.steps.iter().enumerate() {
            match step {
                Step::Right => x += 1,
                Step::Up => {
                    y += 1;
                    if self.steps.get(n + 1) == Some(&Step::Right) {
                        peaks.push((x, y));
                    }
                }
            }
        }
        peaks
    }
}

impl Ballot {
    pub fn new(signs: Vec<Sign>) -> Result<Self, LatticeError> {
        let mut sum: isize = 0;
        for (n, s) in signs.iter().enumerate() {
            sum += match s {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
            if sum < 0 {
                return Err(LatticeError::InvalidBallot(format!(
                    "negative partial sum at position {}",
                    n + 1
                )));
            }
        }
        if sum != 0 {
            return Err(LatticeError::InvalidBallot("total is not zero".into()));
        }
        if signs.is_empty() {
            return Err(LatticeError::InvalidBallot("empty sequence".into()));
        }
        Ok(Self { signs })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

/// The path with peaks at `(j_t, i_t)`:
/// `R^{j_p} U^{i_p} R^{j_{p-1}-j_p} U^{i_{p-1}-i_p} ... R^{n+1-j_1} U^{n+1-i_1}`.
pub fn fc_to_dyck(w: &FcElement) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * (w.rank() + 1));
    let (mut x, mut y) = (0, 0);
    let corners = w.blocks().iter().rev().map(|b| (b.end, b.start));
    for (px, py) in corners.chain(std::iter::once((w.rank() + 1, w.rank() + 1))) {
        steps.extend(std::iter::repeat_n(Step::Right, px - x));
        steps.extend(std::iter::repeat_n(Step::Up, py - y));
        (x, y) = (px, py);
    }
    DyckPath { steps }
}

/// Reads the peaks `(x, y)` of the path as blocks `(y, x)`.
pub fn dyck_to_fc(path: &DyckPath) -> FcElement {
    let blocks = path
        .peaks()
        .into_iter()
        .rev()
        .map(|(x, y)| Block::new(y, x))
        .collect();
    FcElement::new(path.semilength() - 1, blocks).expect("peaks of a Dyck path form standard pairs")
}

pub fn dyck_to_ballot(path: &DyckPath) -> Ballot {
    let signs = path
        .steps
        .iter()
        .map(|s| match s {
            Step::Right => Sign::Plus,
            Step::Up => Sign::Minus,
        })
        .collect();
    Ballot { signs }
}

pub fn ballot_to_dyck(ballot: &Ballot) -> DyckPath {
    let steps = ballot
        .signs
        .iter()
        .map(|s| match s {
            Sign::Plus => Step::Right,
            Sign::Minus => Step::Up,
        })
        .collect();
    DyckPath { steps }
}

/// The ballot of `w` written directly from its blocks:
/// `+^{j_p} -^{i_p} ... +^{j_t - j_{t+1}} -^{i_t - i_{t+1}} ... +^{n+1-j_1} -^{n+1-i_1}`.
pub fn fc_to_ballot(w: &FcElement) -> Ballot {
    let n = w.rank();
    let mut signs = Vec::with_capacity(2 * (n + 1));
    let mut below = (0, 0);
    for b in w
        .blocks()
        .iter()
        .rev()
        .copied()
        .chain(std::iter::once(Block::new(n + 1, n + 1)))
    {
        signs.extend(std::iter::repeat_n(Sign::Plus, b.end - below.1));
        signs.extend(std::iter::repeat_n(Sign::Minus, b.start - below.0));
        below = (b.start, b.end);
    }
    Ballot { signs }
}

pub fn ballot_to_fc(ballot: &Ballot) -> FcElement {
    dyck_to_fc(&ballot_to_dyck(ballot))
}

/// Tails become `+` and heads `-`, reading the dots in the total order
/// `1 < .. < k < 1' < .. < k'`.
pub fn diagram_to_ballot(d: &Diagram) -> Ballot {
    let k = d.strings();
    let signs = (1..=k)
        .map(Dot::top)
        .chain((1..=k).map(Dot::bottom))
        .map(|dot| {
            if dot < d.partner(dot) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    Ballot { signs }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Ballot {
    type Err = LatticeError;

    /// Accepts `+`, `-` and the Unicode minus sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(LatticeError::InvalidBallot(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<_, _>>()?;
        Ballot::new(signs)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Right => "R",
                Step::Up => "U",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'R' => Ok(Step::Right),
                'U' => Ok(Step::Up),
                other => Err(LatticeError::InvalidPath(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<_, _>>()?;
        DyckPath::new(steps)
    }
}
