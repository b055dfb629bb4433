//! The Temperley-Lieb algebra `TL(A_n)` in its monomial basis `e_w`,
//! with coefficients polynomial in the loop parameter `delta`.
//!
//! Products are computed through diagrams: `e_u · e_v = delta^m · e_w` where
//! the diagram of `w` and the loop count `m` come from concatenating the
//! diagrams of `u` and `v`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::bijection::{diagram_to_fc, fc_to_diagram};
use crate::counting::catalan;
use crate::diagram::{enumerate_diagrams, Arrow, Diagram, Row};
use crate::fc::{enumerate_fc, FcElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

/// A polynomial in `delta` with coefficients in `C`. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaPoly<C> {
    coefficients: BTreeMap<u32, C>,
}

impl<C: Clone + Zero + One + PartialEq> DeltaPoly<C> {
    /// `delta^exponent`.
    pub fn delta_pow(exponent: u32) -> Self {
        Self::term(C::one(), exponent)
    }

    pub fn term(coefficient: C, exponent: u32) -> Self {
        let mut coefficients = BTreeMap::new();
        if !coefficient.is_zero() {
            coefficients.insert(exponent, coefficient);
        }
        Self { coefficients }
    }

    pub fn coefficient(&self, exponent: u32) -> C {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.coefficients.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    fn add_term(&mut self, exponent: u32, coefficient: C) {
        let slot = self.coefficients.entry(exponent).or_insert_with(C::zero);
        *slot = slot.clone() + coefficient;
        if slot.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }

    /// Multiplies by `delta^shift`.
    pub fn shifted(&self, shift: u32) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .map(|(&e, c)| (e + shift, c.clone()))
            .collect();
        Self { coefficients }
    }
}

impl<C: Clone + Zero + One + PartialEq> Zero for DeltaPoly<C> {
    fn zero() -> Self {
        Self {
            coefficients: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl<C: Clone + Zero + One + PartialEq> One for DeltaPoly<C> {
    fn one() -> Self {
        Self::delta_pow(0)
    }
}

impl<C: Clone + Zero + One + PartialEq> Add for DeltaPoly<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.coefficients {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Clone + Zero + One + PartialEq> Mul for DeltaPoly<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Clone + Zero + One + PartialEq> Mul for &DeltaPoly<C> {
    type Output = DeltaPoly<C>;

    fn mul(self, rhs: Self) -> DeltaPoly<C> {
        let mut out = DeltaPoly::zero();
        for (a, x) in &self.coefficients {
            for (b, y) in &rhs.coefficients {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: fmt::Display + Clone + Zero + One + PartialEq> fmt::Display for DeltaPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.coefficients.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match (c.is_one(), e) {
                (_, 0) => write!(f, "{c}")?,
                (true, _) => write!(f, "delta^{e}")?,
                (false, _) => write!(f, "{c}*delta^{e}")?,
            }
        }
        Ok(())
    }
}

/// A finite linear combination of monomials `e_w`, all of one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement<C> {
    rank: usize,
    terms: BTreeMap<FcElement, DeltaPoly<C>>,
}

impl<C: Clone + Zero + One + PartialEq> TlElement<C> {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e_1`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(FcElement::identity(rank))
    }

    pub fn monomial(w: FcElement) -> Self {
        Self::scaled_monomial(DeltaPoly::one(), w)
    }

    pub fn scaled_monomial(coefficient: DeltaPoly<C>, w: FcElement) -> Self {
        let mut out = Self::zero(w.rank());
        out.add_term(w, coefficient);
        out
    }

    /// The generator `e_i`.
    pub fn generator(rank: usize, i: usize) -> Option<Self> {
        FcElement::generator(rank, i).ok().map(Self::monomial)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &FcElement) -> DeltaPoly<C> {
        self.terms.get(w).cloned().unwrap_or_else(DeltaPoly::zero)
    }

    /// Terms in increasing order of the canonical pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&FcElement, &DeltaPoly<C>)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: FcElement, coefficient: DeltaPoly<C>) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(DeltaPoly::zero);
        *slot = std::mem::replace(slot, DeltaPoly::zero()) + coefficient;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        if self.rank != other.rank {
            return Err(TlError::RankMismatch(self.rank, other.rank));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of [`monomial_product`].
    pub fn multiply(&self, other: &Self) -> Result<Self, TlError> {
        if self.rank != other.rank {
            return Err(TlError::RankMismatch(self.rank, other.rank));
        }
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let (w, loops) = monomial_product(u, v)?;
                out.add_term(w, (a * b).shifted(loops as u32));
            }
        }
        Ok(out)
    }
}

impl<C: fmt::Display + Clone + Zero + One + PartialEq> fmt::Display for TlElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else if c.terms().count() == 1 {
                write!(f, "{c} * {w}")?;
            } else {
                write!(f, "({c}) * {w}")?;
            }
        }
        Ok(())
    }
}

/// `e_u · e_v = delta^m · e_w`; returns `(w, m)`. The result is already in
/// canonical form.
pub fn monomial_product(u: &FcElement, v: &FcElement) -> Result<(FcElement, usize), TlError> {
    if u.rank() != v.rank() {
        return Err(TlError::RankMismatch(u.rank(), v.rank()));
    }
    let (du, _) = fc_to_diagram(u);
    let (dv, _) = fc_to_diagram(v);
    let (product, loops) = du
        .concatenate(&dv)
        .expect("equal ranks give equal string counts");
    Ok((diagram_to_fc(&product), loops))
}

/// Left and right descent sets read off a diagram: tails of the top-row
/// arrows `(i, i+1)` and of the bottom-row arrows `(j', (j+1)')`.
pub fn descents_from_diagram(d: &Diagram) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let c = d.components();
    let shortest = |arrows: &[Arrow]| -> BTreeSet<usize> {
        arrows
            .iter()
            .filter(|a| a.head.index == a.tail.index + 1)
            .map(|a| a.tail.index)
            .collect()
    };
    (shortest(&c.top), shortest(&c.bottom))
}

/// The through-strings of a diagram, which is what `≈` compares.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivalenceKey {
    strings: usize,
    arrows: Vec<Arrow>,
}

impl EquivalenceKey {
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Product over maximal runs of free dots on each row of
    /// `C_{run / 2}`: the number of ways to fill the runs with cups.
    pub fn gap_catalan_product(&self) -> usize {
        let mut product = 1usize;
        for row in [Row::Top, Row::Bottom] {
            let used: BTreeSet<usize> = self
                .arrows
                .iter()
                .flat_map(|a| [a.tail, a.head])
                .filter(|d| d.row == row)
                .map(|d| d.index)
                .collect();
            let mut run = 0;
            for x in 1..=self.strings + 1 {
                if x <= self.strings && !used.contains(&x) {
                    run += 1;
                    continue;
                }
                if run % 2 == 1 {
                    return 0;
                }
                product *= catalan::<usize>(run / 2);
                run = 0;
            }
        }
        product
    }
}

impl fmt::Display for EquivalenceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return f.write_str("-");
        }
        for (n, a) in self.arrows.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

pub fn equivalence_key(d: &Diagram) -> EquivalenceKey {
    let c = d.components();
    let mut arrows: Vec<Arrow> = c.positive.into_iter().chain(c.negative).collect();
    arrows.sort();
    EquivalenceKey {
        strings: d.strings(),
        arrows,
    }
}

/// One `≈`-class of size-`p` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub key: EquivalenceKey,
    pub size: usize,
    pub members: Vec<FcElement>,
}

/// Groups the size-`p` elements of `W(A_n)` by the through-strings of their
/// diagrams. Classes are sorted by key.
pub fn census(n: usize, p: usize) -> Vec<CensusClass> {
    let mut classes: BTreeMap<EquivalenceKey, Vec<FcElement>> = BTreeMap::new();
    for w in enumerate_fc(n).into_iter().filter(|w| w.size() == p) {
        let (d, _) = fc_to_diagram(&w);
        classes.entry(equivalence_key(&d)).or_default().push(w);
    }
    classes
        .into_iter()
        .map(|(key, members)| CensusClass {
            key,
            size: members.len(),
            members,
        })
        .collect()
}

/// Number of diagrams on the key's strings whose through-strings are
/// exactly the key, by filtering the full diagram enumeration.
pub fn count_completions(key: &EquivalenceKey) -> usize {
    enumerate_diagrams(key.strings)
        .iter()
        .filter(|d| equivalence_key(d) == *key)
        .count()
}
