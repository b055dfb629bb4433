//! Fully commutative elements of the type-A Coxeter group `W(A_n)` in
//! canonical form.
//!
//! Every FC element has a unique reduced word
//! `[i_1, j_1][i_2, j_2]...[i_p, j_p]` where `[i, j] = s_i s_{i+1} ... s_j`,
//! both index sequences strictly decrease and `i_t <= j_t`. That block list
//! is the only representation stored here. All indices are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One ascending run `s_start s_{start+1} ... s_end` of a canonical word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub const fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }

    /// Number of generators in the run.
    pub fn length(&self) -> usize {
        self.end + 1 - self.start
    }

    /// Generator indices of the run, in word order.
    pub fn generators(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl From<(usize, usize)> for Block {
    fn from((start, end): (usize, usize)) -> Self {
        Self { start, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FcError {
    #[error("index {index} in block {block} lies outside 1..={rank}")]
    RankOutOfRange {
        rank: usize,
        block: usize,
        index: usize,
    },
    #[error("block {block} is not standard: {reason}")]
    NotStandard { block: usize, reason: Violation },
    #[error("element is not thick")]
    NotThick,
    #[error("the identity has no descents")]
    IdentityHasNoDescents,
    #[error("cannot parse FC element from {input:?}: {message}")]
    Parse { input: String, message: String },
}

/// Which inequality of the standard-pair conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `i_t > j_t`
    StartAfterEnd,
    /// `i_{t-1} <= i_t`
    StartsNotDecreasing,
    /// `j_{t-1} <= j_t`
    EndsNotDecreasing,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::StartAfterEnd => "start exceeds end",
            Violation::StartsNotDecreasing => "starts are not strictly decreasing",
            Violation::EndsNotDecreasing => "ends are not strictly decreasing",
        })
    }
}

/// Thick / slim split of non-identity elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Identity,
    Thick,
    Slim,
}

/// An FC element of `W(A_rank)` given by its standard block list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FcRepr", into = "FcRepr")]
pub struct FcElement {
    rank: usize,
    blocks: Vec<Block>,
}

impl FcElement {
    /// Checks the standard-pair conditions and builds the element.
    pub fn new(rank: usize, blocks: Vec<Block>) -> Result<Self, FcError> {
        for (t, b) in blocks.iter().enumerate() {
            for index in [b.start, b.end] {
                if index == 0 || index > rank {
                    return Err(FcError::RankOutOfRange {
                        rank,
                        block: t + 1,
                        index,
                    });
                }
            }
            let violation = if b.start > b.end {
                Some(Violation::StartAfterEnd)
            } else if t > 0 && blocks[t - 1].start <= b.start {
                Some(Violation::StartsNotDecreasing)
            } else if t > 0 && blocks[t - 1].end <= b.end {
                Some(Violation::EndsNotDecreasing)
            } else {
                None
            };
            if let Some(reason) = violation {
                return Err(FcError::NotStandard {
                    block: t + 1,
                    reason,
                });
            }
        }
        Ok(Self { rank, blocks })
    }

    /// Convenience constructor from `(i, j)` tuples.
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize)]) -> Result<Self, FcError> {
        Self::new(rank, pairs.iter().copied().map(Block::from).collect())
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            blocks: Vec::new(),
        }
    }

    /// The single run `[start, end]`.
    pub fn block(rank: usize, start: usize, end: usize) -> Result<Self, FcError> {
        Self::new(rank, vec![Block::new(start, end)])
    }

    /// The generator `s_i`.
    pub fn generator(rank: usize, i: usize) -> Result<Self, FcError> {
        Self::block(rank, i, i)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().map(|b| (b.start, b.end)).collect()
    }

    /// Number of blocks `p`.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(|b| b.start)
    }

    pub fn ends(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(|b| b.end)
    }

    /// The canonical reduced word as generator indices.
    pub fn word(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(Block::generators).collect()
    }

    /// Coxeter length, i.e. the length of the canonical word.
    pub fn length(&self) -> usize {
        self.blocks.iter().map(Block::length).sum()
    }

    pub fn classify(&self) -> Class {
        if self.blocks.is_empty() {
            Class::Identity
        } else if self.blocks.iter().all(|b| b.end > b.start) {
            Class::Thick
        } else {
            Class::Slim
        }
    }

    /// Thick element of rank `n` to the element of rank `n - 1` with every
    /// end lowered by one. Size is kept and length drops by the size.
    pub fn shrink(&self) -> Result<Self, FcError> {
        if self.classify() != Class::Thick {
            return Err(FcError::NotThick);
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block::new(b.start, b.end - 1))
            .collect();
        Self::new(self.rank - 1, blocks)
    }

    /// Inverse of [`shrink`](Self::shrink): raises every end by one and the rank by one.
    pub fn expand(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block::new(b.start, b.end + 1))
            .collect();
        Self {
            rank: self.rank + 1,
            blocks,
        }
    }

    /// The dual element `w*`: its starts are the complement of the ends of
    /// `w` and its ends the complement of the starts, both listed
    /// decreasingly. Size `p` becomes `n - p`.
    pub fn dual(&self) -> Self {
        let n = self.rank;
        let complement = |taken: BTreeSet<usize>| -> Vec<usize> {
            (1..=n).rev().filter(|x| !taken.contains(x)).collect()
        };
        let starts = complement(self.ends().collect());
        let ends = complement(self.starts().collect());
        let blocks = starts
            .into_iter()
            .zip(ends)
            .map(|(s, e)| Block::new(s, e))
            .collect();
        Self { rank: n, blocks }
    }

    /// The anti-involution `Delta`: inverse followed by the graph
    /// automorphism `s_j -> s_{n+1-j}`. On blocks it reverses the order and
    /// reflects each run.
    pub fn delta_involution(&self) -> Self {
        let n = self.rank;
        let blocks = self
            .blocks
            .iter()
            .rev()
            .map(|b| Block::new(n + 1 - b.end, n + 1 - b.start))
            .collect();
        Self { rank: n, blocks }
    }

    /// `{i_1} ∪ {i_k : i_k < i_{k-1} - 1}`.
    pub fn left_descents(&self) -> Result<BTreeSet<usize>, FcError> {
        let first = self.blocks.first().ok_or(FcError::IdentityHasNoDescents)?;
        let mut set = BTreeSet::from([first.start]);
        set.extend(
            self.blocks
                .windows(2)
                .filter(|w| w[1].start + 1 < w[0].start)
                .map(|w| w[1].start),
        );
        Ok(set)
    }

    /// `{j_p} ∪ {j_k : j_k > j_{k+1} + 1}`.
    pub fn right_descents(&self) -> Result<BTreeSet<usize>, FcError> {
        let last = self.blocks.last().ok_or(FcError::IdentityHasNoDescents)?;
        let mut set = BTreeSet::from([last.end]);
        set.extend(
            self.blocks
                .windows(2)
                .filter(|w| w[0].end > w[1].end + 1)
                .map(|w| w[0].end),
        );
        Ok(set)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.blocks.iter().flat_map(Block::generators).collect()
    }

    /// Splits a slim element as `g · s_i · d` where `s_i` is the first
    /// single-generator block, `g` the (thick or empty) prefix and `d` the
    /// suffix, which lives in `W(A_{i-1})`.
    pub fn slim_split(&self) -> Option<(Vec<Block>, usize, Vec<Block>)> {
        let r = self.blocks.iter().position(|b| b.start == b.end)?;
        Some((
            self.blocks[..r].to_vec(),
            self.blocks[r].start,
            self.blocks[r + 1..].to_vec(),
        ))
    }

    /// The permutation of `{1..n+1}` obtained by multiplying out the
    /// canonical word with `s_k = (k, k+1)`.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank + 1).collect();
        for k in self.word() {
            images.swap(k - 1, k);
        }
        Permutation { images }
    }
}

/// `true` when every generator in `lo..=hi` occurs in some block.
/// An empty interval is vacuously saturated.
pub fn is_saturated_in(blocks: &[Block], lo: usize, hi: usize) -> bool {
    (lo..=hi).all(|h| blocks.iter().any(|b| b.start <= h && h <= b.end))
}

/// All FC elements of `W(A_n)`, each exactly once.
///
/// Depth-first over block lists: after a list is emitted, its extensions by
/// one more block `(i, j)` with `i` below the last start and `j` below the
/// last end are visited in increasing `(i, j)` order.
pub fn enumerate_fc(n: usize) -> Vec<FcElement> {
    fn extend(n: usize, blocks: &mut Vec<Block>, out: &mut Vec<FcElement>) {
        out.push(FcElement {
            rank: n,
            blocks: blocks.clone(),
        });
        let (start_cap, end_cap) = match blocks.last() {
            Some(b) => (b.start - 1, b.end - 1),
            None => (n, n),
        };
        for i in 1..=start_cap {
            for j in i..=end_cap {
                blocks.push(Block::new(i, j));
                extend(n, blocks, out);
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// One-line notation of a permutation of `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > images.len() || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count())
            .sum()
    }

    /// `s_k ∘ self`: swaps the values `k` and `k + 1`.
    pub fn left_mul_generator(&self, k: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == k {
                    k + 1
                } else if x == k + 1 {
                    k
                } else {
                    x
                }
            })
            .collect();
        Self { images }
    }

    /// `self ∘ s_k`: swaps positions `k` and `k + 1`.
    pub fn right_mul_generator(&self, k: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(k - 1, k);
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (pos, &x) in self.images.iter().enumerate() {
            images[x - 1] = pos + 1;
        }
        Self { images }
    }

    /// `w0 ∘ self ∘ w0`, the image under the diagram automorphism.
    pub fn conjugate_by_longest(&self) -> Self {
        let m = self.images.len();
        let images = self.images.iter().rev().map(|&x| m + 1 - x).collect();
        Self { images }
    }

    /// No indices `a < b < c` with `images[a] > images[b] > images[c]`.
    pub fn avoids_321(&self) -> bool {
        // A 321 pattern exists iff some entry has a larger entry on its left
        // and a smaller entry on its right.
        let v = &self.images;
        let mut prefix_max = 0;
        let mut suffix_min = vec![usize::MAX; v.len() + 1];
        for a in (0..v.len()).rev() {
            suffix_min[a] = suffix_min[a + 1].min(v[a]);
        }
        for (b, &x) in v.iter().enumerate() {
            if prefix_max > x && suffix_min[b + 1] < x {
                return false;
            }
            prefix_max = prefix_max.max(x);
        }
        true
    }

    /// Left descents computed by length comparison.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        let len = self.inversions();
        (1..self.degree())
            .filter(|&k| self.left_mul_generator(k).inversions() < len)
            .collect()
    }

    /// Right descents computed by length comparison.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        let len = self.inversions();
        (1..self.degree())
            .filter(|&k| self.right_mul_generator(k).inversions() < len)
            .collect()
    }
}

impl fmt::Display for FcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.rank)?;
        if self.blocks.is_empty() {
            return f.write_str("[]");
        }
        for b in &self.blocks {
            write!(f, "[{},{}]", b.start, b.end)?;
        }
        Ok(())
    }
}

impl FromStr for FcElement {
    type Err = FcError;

    /// Parses `n=<rank>:[i1,j1][i2,j2]...`; the identity is `n=<rank>:[]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |message: &str| FcError::Parse {
            input: s.to_owned(),
            message: message.to_owned(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact
            .strip_prefix("n=")
            .ok_or_else(|| fail("expected `n=`"))?;
        let (rank, body) = rest
            .split_once(':')
            .ok_or_else(|| fail("expected `:` after the rank"))?;
        let rank: usize = rank
            .parse()
            .map_err(|_| fail("rank is not a nonnegative integer"))?;
        let mut blocks = Vec::new();
        if body != "[]" {
            let inner = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| fail("blocks must be written as [i,j]"))?;
            for chunk in inner.split("][") {
                let (i, j) = chunk
                    .split_once(',')
                    .ok_or_else(|| fail("block needs two indices"))?;
                let i = i.parse().map_err(|_| fail("bad block start"))?;
                let j = j.parse().map_err(|_| fail("bad block end"))?;
                blocks.push(Block::new(i, j));
            }
        }
        Self::new(rank, blocks)
    }
}

#[derive(Serialize, Deserialize)]
struct FcRepr {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl TryFrom<FcRepr> for FcElement {
    type Error = FcError;

    fn try_from(repr: FcRepr) -> Result<Self, Self::Error> {
        Self::new(
            repr.n,
            repr.pairs
                .into_iter()
                .map(|[i, j]| Block::new(i, j))
                .collect(),
        )
    }
}

impl From<FcElement> for FcRepr {
    fn from(w: FcElement) -> Self {
        FcRepr {
            n: w.rank,
            pairs: w.blocks.iter().map(|b| [b.start, b.end]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(rank: usize, pairs: &[(usize, usize)]) -> FcElement {
        FcElement::from_pairs(rank, pairs).unwrap()
    }

    fn example() -> FcElement {
        fc(5, &[(4, 5), (3, 3), (1, 1)])
    }

    #[test]
    fn validate_examples() {
        assert!(FcElement::from_pairs(5, &[(4, 5), (3, 3), (1, 1)]).is_ok());
        assert!(FcElement::from_pairs(5, &[]).is_ok());
        assert_eq!(
            FcElement::from_pairs(5, &[(3, 3), (4, 5)]),
            Err(FcError::NotStandard {
                block: 2,
                reason: Violation::StartsNotDecreasing
            })
        );
        assert_eq!(
            FcElement::from_pairs(5, &[(3, 2)]),
            Err(FcError::NotStandard {
                block: 1,
                reason: Violation::StartAfterEnd
            })
        );
        assert_eq!(
            FcElement::from_pairs(5, &[(4, 4), (3, 4)]),
            Err(FcError::NotStandard {
                block: 2,
                reason: Violation::EndsNotDecreasing
            })
        );
        assert!(matches!(
            FcElement::from_pairs(3, &[(2, 4)]),
            Err(FcError::RankOutOfRange { index: 4, .. })
        ));
        assert!(matches!(
            FcElement::from_pairs(3, &[(0, 1)]),
            Err(FcError::RankOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn length_examples() {
        assert_eq!(example().length(), 4);
        assert_eq!(example().to_permutation().inversions(), 4);
        assert_eq!(FcElement::identity(5).length(), 0);
        assert_eq!(fc(6, &[(1, 6)]).length(), 6);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(example().classify(), Class::Slim);
        assert_eq!(fc(3, &[(2, 3), (1, 2)]).classify(), Class::Thick);
        assert_eq!(FcElement::identity(3).classify(), Class::Identity);
    }

    #[test]
    fn shrink_examples() {
        assert_eq!(
            fc(3, &[(2, 3), (1, 2)]).shrink().unwrap(),
            fc(2, &[(2, 2), (1, 1)])
        );
        assert_eq!(fc(4, &[(1, 4)]).shrink().unwrap(), fc(3, &[(1, 3)]));
        assert_eq!(fc(4, &[(3, 3)]).shrink(), Err(FcError::NotThick));
        assert_eq!(FcElement::identity(4).shrink(), Err(FcError::NotThick));
    }

    #[test]
    fn dual_examples() {
        let w = fc(3, &[(1, 1)]);
        let d = w.dual();
        assert_eq!(d, fc(3, &[(3, 3), (2, 2)]));
        assert_eq!(w.length() as isize - d.length() as isize, -1);
        assert_eq!(FcElement::identity(2).dual(), fc(2, &[(2, 2), (1, 1)]));
        assert_eq!(
            fc(4, &[(4, 4), (3, 3), (2, 2), (1, 1)]).dual(),
            FcElement::identity(4)
        );
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            example().delta_involution(),
            fc(5, &[(5, 5), (3, 3), (1, 2)])
        );
        assert_eq!(
            FcElement::identity(5).delta_involution(),
            FcElement::identity(5)
        );
        assert_eq!(fc(3, &[(1, 3)]).delta_involution(), fc(3, &[(1, 3)]));
        let perm = example().to_permutation();
        assert_eq!(
            example().delta_involution().to_permutation(),
            perm.inverse().conjugate_by_longest()
        );
    }

    #[test]
    fn descent_examples() {
        let w = example();
        assert_eq!(w.left_descents().unwrap(), BTreeSet::from([4, 1]));
        assert_eq!(w.right_descents().unwrap(), BTreeSet::from([5, 3, 1]));
        let perm = w.to_permutation();
        assert_eq!(perm.left_descents(), BTreeSet::from([4, 1]));
        assert_eq!(perm.right_descents(), BTreeSet::from([5, 3, 1]));
        let full = fc(4, &[(1, 4)]);
        assert_eq!(full.left_descents().unwrap(), BTreeSet::from([1]));
        assert_eq!(full.right_descents().unwrap(), BTreeSet::from([4]));
        assert_eq!(
            FcElement::identity(3).left_descents(),
            Err(FcError::IdentityHasNoDescents)
        );
        assert_eq!(
            FcElement::identity(3).right_descents(),
            Err(FcError::IdentityHasNoDescents)
        );
    }

    #[test]
    fn support_and_saturation() {
        assert_eq!(example().support(), BTreeSet::from([1, 3, 4, 5]));
        assert!(FcElement::identity(3).support().is_empty());
        assert_eq!(fc(3, &[(1, 3)]).support(), BTreeSet::from([1, 2, 3]));
        assert!(is_saturated_in(&[Block::new(3, 4), Block::new(2, 2)], 2, 4));
        assert!(!is_saturated_in(&[Block::new(4, 4)], 2, 4));
        assert!(is_saturated_in(&[], 3, 2));
    }

    #[test]
    fn enumeration_counts() {
        let one = enumerate_fc(1);
        assert_eq!(one, vec![FcElement::identity(1), fc(1, &[(1, 1)])]);
        assert_eq!(enumerate_fc(0).len(), 1);
        assert_eq!(enumerate_fc(2).len(), 5);
        assert_eq!(enumerate_fc(3).len(), 14);
        assert_eq!(enumerate_fc(8).len(), 4862);
    }

    #[test]
    fn slim_split_reassembles() {
        let (g, i, d) = example().slim_split().unwrap();
        assert_eq!(g, vec![Block::new(4, 5)]);
        assert_eq!(i, 3);
        assert_eq!(d, vec![Block::new(1, 1)]);
        assert!(fc(3, &[(2, 3), (1, 2)]).slim_split().is_none());
    }

    #[test]
    fn text_and_json_formats() {
        let w = example();
        assert_eq!(w.to_string(), "n=5:[4,5][3,3][1,1]");
        assert_eq!("n=5:[4,5][3,3][1,1]".parse::<FcElement>().unwrap(), w);
        assert_eq!(
            "n=5:[]".parse::<FcElement>().unwrap(),
            FcElement::identity(5)
        );
        assert_eq!(FcElement::identity(3).to_string(), "n=3:[]");
        assert!("n=5:[3,3][4,5]".parse::<FcElement>().is_err());
        assert!(matches!(
            "5:[1,1]".parse::<FcElement>(),
            Err(FcError::Parse { .. })
        ));
        assert!(matches!(
            "n=5:[1,1".parse::<FcElement>(),
            Err(FcError::Parse { .. })
        ));

        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"n":5,"pairs":[[4,5],[3,3],[1,1]]}"#);
        assert_eq!(serde_json::from_str::<FcElement>(&json).unwrap(), w);
        assert!(serde_json::from_str::<FcElement>(r#"{"n":5,"pairs":[[3,3],[4,5]]}"#).is_err());
    }

    #[test]
    fn permutation_helpers() {
        assert!(Permutation::new(vec![2, 1, 3]).is_some());
        assert!(Permutation::new(vec![2, 2, 3]).is_none());
        assert!(Permutation::new(vec![3, 2, 1])
            .map(|p| !p.avoids_321())
            .unwrap());
        assert!(Permutation::new(vec![2, 3, 1]).unwrap().avoids_321());
    }
}
