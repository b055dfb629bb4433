//! Closed-form counts of FC elements and the recurrences they come from.
//!
//! Everything is generic over an exact integer type. Rational prefactors are
//! evaluated by exact division; a nonzero remainder is a bug and panics.
//! Out-of-range parameters count nothing and return zero.
//!
//! Notation used in the doc comments: `C_m` Catalan, `N(n, p)` Narayana,
//! `S(n, i)` the Catalan triangle (elements whose word starts with `s_i`).

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;

use crate::fc::{enumerate_fc, FcElement};

/// Exact integer scalar usable by the counting functions.
pub trait Count: Integer + Clone + FromPrimitive + Debug {}

impl<T: Integer + Clone + FromPrimitive + Debug> Count for T {}

fn int<C: Count>(x: usize) -> C {
    C::from_usize(x).expect("value does not fit in the count type")
}

/// `num / den`, which must be exact.
fn exact_div<C: Count>(num: C, den: C) -> C {
    let (q, r) = num.div_rem(&den);
    assert!(
        r.is_zero(),
        "internal error: non-integral count {num:?} / {den:?}"
    );
    q
}

/// `C_0..=C_m` from `C_{k+1} = sum_{a=0}^{k} C_a C_{k-a}`.
pub fn catalan_table<C: Count>(m: usize) -> Vec<C> {
    let mut table: Vec<C> = vec![C::one()];
    for k in 0..m {
        let next = (0..=k).fold(C::zero(), |acc, a| {
            acc + table[a].clone() * table[k - a].clone()
        });
        table.push(next);
    }
    table
}

pub fn catalan<C: Count>(m: usize) -> C {
    catalan_table::<C>(m).pop().expect("table is never empty")
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial<C: Count>(n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(C::one(), |acc, t| {
        exact_div(acc * int::<C>(n - t), int::<C>(t + 1))
    })
}

/// `N(n, p) = 1/(p+1) · C(n, p) · C(n+1, p)`, the number of size-`p`
/// elements of `W(A_n)`. Zero for `n < 0`, `p < 0` or `p > n`.
pub fn narayana<C: Count>(n: isize, p: isize) -> C {
    if n < 0 || p < 0 || p > n {
        return C::zero();
    }
    let (n, p) = (n as usize, p as usize);
    exact_div(
        binomial::<C>(n, p) * binomial::<C>(n + 1, p),
        int::<C>(p + 1),
    )
}

/// `S(n, i) = (n+1-i)/(n+1) · C(n+i, i)`: elements whose canonical word
/// starts with `s_i`. `i = 0` counts the identity alone.
pub fn triangle_start<C: Count>(n: usize, i: usize) -> C {
    if i > n {
        return C::zero();
    }
    exact_div(
        int::<C>(n + 1 - i) * binomial::<C>(n + i, i),
        int::<C>(n + 1),
    )
}

/// Elements whose canonical word ends with `s_j`:
/// `j/(n+1) · C(2n-j+1, n)`, for `1 <= j <= n`.
pub fn triangle_end<C: Count>(n: usize, j: usize) -> C {
    if j == 0 || j > n {
        return C::zero();
    }
    exact_div(
        int::<C>(j) * binomial::<C>(2 * n + 1 - j, n),
        int::<C>(n + 1),
    )
}

/// Elements with first block `[i1, j1]`:
/// `(j1-i1+2)/(j1+1) · C(j1+i1-1, j1)`. Does not depend on `n` beyond
/// the range check.
pub fn count_first_block<C: Count>(n: usize, i1: usize, j1: usize) -> C {
    if i1 == 0 || i1 > j1 || j1 > n {
        return C::zero();
    }
    exact_div(
        int::<C>(j1 - i1 + 2) * binomial::<C>(j1 + i1 - 1, j1),
        int::<C>(j1 + 1),
    )
}

/// Elements with last block `[ip, jp]`:
/// `(jp-ip+2)/(n-ip+2) · C(2n-jp-ip+1, n-jp)`.
pub fn count_last_block<C: Count>(n: usize, ip: usize, jp: usize) -> C {
    if ip == 0 || ip > jp || jp > n {
        return C::zero();
    }
    exact_div(
        int::<C>(jp - ip + 2) * binomial::<C>(2 * n + 1 - jp - ip, n - jp),
        int::<C>(n - ip + 2),
    )
}

/// Size-`p` elements starting with `s_i`:
/// `(n+1-i)/(n+1-p) · C(i-1, p-1) · C(n, p)`; zero when `p > i`.
pub fn count_start_size<C: Count>(n: usize, i: usize, p: usize) -> C {
    if i == 0 || p == 0 {
        return if i == 0 && p == 0 {
            C::one()
        } else {
            C::zero()
        };
    }
    if p > i || i > n {
        return C::zero();
    }
    exact_div(
        int::<C>(n + 1 - i) * binomial::<C>(i - 1, p - 1) * binomial::<C>(n, p),
        int::<C>(n + 1 - p),
    )
}

/// Size-`p` elements ending with `s_j`:
/// `j/(n+1-p) · C(n-j, p-1) · C(n, p)`.
pub fn count_size_end<C: Count>(n: usize, p: usize, j: usize) -> C {
    if p == 0 || j == 0 || j > n || p > n {
        return C::zero();
    }
    exact_div(
        int::<C>(j) * binomial::<C>(n - j, p - 1) * binomial::<C>(n, p),
        int::<C>(n + 1 - p),
    )
}

/// Where a [`StartEndCount`] value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    /// `j < i - 1`: no closed form is known, the value was enumerated.
    NoClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartEndCount<C> {
    pub value: C,
    pub provenance: Provenance,
}

/// Elements whose word starts with `s_i` and ends with `s_j`.
///
/// Closed forms: `C(n-j+i-1, i-1)` for `i <= j` and `C(n, i-1) - 1` for
/// `j = i - 1`. Below that the count is enumerated and flagged.
pub fn count_start_end<C: Count>(n: usize, i: usize, j: usize) -> StartEndCount<C> {
    let closed = |value| StartEndCount {
        value,
        provenance: Provenance::ClosedForm,
    };
    if i == 0 || j == 0 || i > n || j > n {
        return closed(C::zero());
    }
    if i <= j {
        closed(binomial(n - j + i - 1, i - 1))
    } else if j == i - 1 {
        closed(binomial::<C>(n, i - 1) - C::one())
    } else {
        let value = enumerate_fc(n)
            .iter()
            .filter(|w| first_start(w) == Some(i) && last_end(w) == Some(j))
            .count();
        StartEndCount {
            value: int(value),
            provenance: Provenance::NoClosedForm,
        }
    }
}

/// Both sides of `sum_t 1/(t+1) · C(p,t) · C(n-p,t) = 1/(p+1) · C(n+1,p)`.
pub fn binomial_identity_sides<C: Count>(n: usize, p: usize) -> (Ratio<C>, Ratio<C>) {
    let lhs = (0..=p.min(n.saturating_sub(p))).fold(Ratio::from_integer(C::zero()), |acc, t| {
        acc + Ratio::new(
            binomial::<C>(p, t) * binomial::<C>(n - p, t),
            int::<C>(t + 1),
        )
    });
    let rhs = Ratio::new(binomial::<C>(n + 1, p), int::<C>(p + 1));
    (lhs, rhs)
}

/// Exact check of the binomial-sum identity for `0 <= p <= n`.
pub fn appendix_binomial_identity_check<C: Count>(n: usize, p: usize) -> bool {
    if p > n {
        return false;
    }
    let (lhs, rhs) = binomial_identity_sides::<C>(n, p);
    lhs == rhs
}

fn first_start(w: &FcElement) -> Option<usize> {
    w.blocks().first().map(|b| b.start)
}

fn last_end(w: &FcElement) -> Option<usize> {
    w.blocks().last().map(|b| b.end)
}

/// The recurrences that produce the closed forms, evaluated independently
/// of them.
pub mod recurrence {
    use super::*;

    /// `N(n, p)` from the thick/slim split:
    /// `N(n,p) = N(n-1,p) + N(n-1,p-1) + sum_{r=1}^{p} sum_{i=1}^{n-1} N(n-i-1,r-1) N(i-1,p-r)`
    /// with `N(n, 0) = 1` and zero outside `0 <= p <= n`.
    pub fn narayana_thick_slim<C: Count>(n: usize, p: usize) -> C {
        narayana_thick_slim_table::<C>(n)
            .swap_remove(n)
            .into_iter()
            .nth(p)
            .unwrap_or_else(C::zero)
    }

    /// Rows `0..=n` of the thick/slim recurrence.
    pub fn narayana_thick_slim_table<C: Count>(n: usize) -> Vec<Vec<C>> {
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(n + 1);
        let at = |rows: &Vec<Vec<C>>, m: isize, q: isize| -> C {
            if m < 0 || q < 0 || q > m {
                C::zero()
            } else {
                rows[m as usize][q as usize].clone()
            }
        };
        for m in 0..=n {
            let mut row = vec![C::one()];
            for p in 1..=m {
                let (mi, pi) = (m as isize, p as isize);
                let mut total = at(&rows, mi - 1, pi) + at(&rows, mi - 1, pi - 1);
                for r in 1..=pi {
                    for i in 1..mi {
                        total = total + at(&rows, mi - i - 1, r - 1) * at(&rows, i - 1, pi - r);
                    }
                }
                row.push(total);
            }
            rows.push(row);
        }
        rows
    }

    /// Right-hand side of `S(n,i) = C_i + sum_{k=0}^{i-1} S(n-k-1, i-k) C_k`.
    pub fn triangle_start_mixed<C: Count>(n: usize, i: usize) -> C {
        if i > n {
            return C::zero();
        }
        let cat = catalan_table::<C>(i);
        (0..i).fold(cat[i].clone(), |acc, k| {
            let term = match n.checked_sub(k + 1) {
                Some(m) => triangle_start::<C>(m, i - k),
                None => C::zero(),
            };
            acc + term * cat[k].clone()
        })
    }

    /// `S(n, i)` from the Pascal-like rule `S(n,i) = S(n,i-1) + S(n-1,i)`
    /// with `S(n, 0) = 1` and `S(n, i) = 0` for `i > n`.
    pub fn triangle_start_table<C: Count>(n: usize) -> Vec<Vec<C>> {
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut row = vec![C::one()];
            for i in 1..=m {
                let above = if i < m {
                    rows[m - 1][i].clone()
                } else {
                    C::zero()
                };
                let left = row[i - 1].clone();
                row.push(left + above);
            }
            rows.push(row);
        }
        rows
    }
}

/// Counts by direct filtering of [`enumerate_fc`]. This is the oracle the
/// closed forms are checked against.
pub mod brute {
    use super::*;

    pub fn count(elements: &[FcElement], pred: impl Fn(&FcElement) -> bool) -> usize {
        elements.iter().filter(|w| pred(w)).count()
    }

    pub fn size(elements: &[FcElement], p: usize) -> usize {
        count(elements, |w| w.size() == p)
    }

    /// `i = 0` selects the identity.
    pub fn start(elements: &[FcElement], i: usize) -> usize {
        count(elements, |w| first_start(w).unwrap_or(0) == i)
    }

    pub fn end(elements: &[FcElement], j: usize) -> usize {
        count(elements, |w| last_end(w) == Some(j))
    }

    pub fn first_block(elements: &[FcElement], i1: usize, j1: usize) -> usize {
        count(elements, |w| {
            w.blocks().first().map(|b| (b.start, b.end)) == Some((i1, j1))
        })
    }

    pub fn last_block(elements: &[FcElement], ip: usize, jp: usize) -> usize {
        count(elements, |w| {
            w.blocks().last().map(|b| (b.start, b.end)) == Some((ip, jp))
        })
    }

    pub fn start_size(elements: &[FcElement], i: usize, p: usize) -> usize {
        count(elements, |w| {
            first_start(w).unwrap_or(0) == i && w.size() == p
        })
    }

    pub fn size_end(elements: &[FcElement], p: usize, j: usize) -> usize {
        count(elements, |w| w.size() == p && last_end(w) == Some(j))
    }

    pub fn start_end(elements: &[FcElement], i: usize, j: usize) -> usize {
        count(elements, |w| {
            first_start(w) == Some(i) && last_end(w) == Some(j)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn catalan_values() {
        let got: Vec<u64> = (0..=4).map(catalan::<u64>).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14]);
        assert_eq!(catalan::<u64>(9), 4862);
        assert_eq!(catalan::<BigUint>(15), big(9_694_845));
    }

    #[test]
    fn narayana_values() {
        for n in 0..8 {
            assert_eq!(narayana::<u64>(n, 0), 1);
            assert_eq!(narayana::<u64>(n, n), 1);
        }
        assert_eq!(narayana::<u64>(4, 2), 20);
        assert_eq!(narayana::<u64>(-1, 0), 0);
        assert_eq!(narayana::<u64>(3, -1), 0);
        assert_eq!(narayana::<u64>(3, 4), 0);
        let row: Vec<u64> = (0..=4).map(|p| narayana(4, p)).collect();
        assert_eq!(row, vec![1, 10, 20, 10, 1]);
    }

    #[test]
    fn triangle_values() {
        for n in 1..8 {
            assert_eq!(triangle_start::<u64>(n, 1), n as u64);
            assert_eq!(triangle_start::<u64>(n, n), catalan::<u64>(n));
            assert_eq!(triangle_start::<u64>(n, 0), 1);
            assert_eq!(triangle_end::<u64>(n, 1), triangle_start::<u64>(n, n));
        }
        assert_eq!(triangle_start::<u64>(5, 3), 28);
        assert_eq!(triangle_end::<u64>(5, 5), 5);
        assert_eq!(triangle_end::<u64>(4, 2), 14);
        assert_eq!(triangle_end::<u64>(4, 0), 0);
    }

    #[test]
    fn block_counts() {
        for n in 1..7 {
            for i in 1..=n {
                assert_eq!(count_first_block::<u64>(n, i, i), catalan::<u64>(i));
            }
            for j in 1..=n {
                assert_eq!(count_first_block::<u64>(n, 1, j), 1);
            }
        }
        assert_eq!(count_first_block::<u64>(5, 2, 4), 4);
        assert_eq!(count_last_block::<u64>(5, 2, 4), 4);
        assert_eq!(count_last_block::<u64>(5, 5, 5), 1);
        assert_eq!(count_last_block::<u64>(4, 1, 1), 14);
        assert_eq!(count_first_block::<u64>(5, 3, 2), 0);
    }

    #[test]
    fn start_size_and_size_end() {
        assert_eq!(count_start_size::<u64>(5, 2, 3), 0);
        assert_eq!(count_start_size::<u64>(5, 3, 2), 15);
        assert_eq!(count_start_size::<u64>(4, 4, 1), 1);
        assert_eq!(count_start_size::<u64>(4, 0, 0), 1);
        assert_eq!(count_size_end::<u64>(4, 0, 2), 0);
    }

    #[test]
    fn start_end_values() {
        for n in 1..7 {
            for j in 1..=n {
                assert_eq!(count_start_end::<u64>(n, 1, j).value, 1);
            }
        }
        let c = count_start_end::<u64>(5, 3, 2);
        assert_eq!((c.value, c.provenance), (9, Provenance::ClosedForm));
        assert_eq!(count_start_end::<u64>(5, 2, 4).value, 2);
        let e = count_start_end::<u64>(5, 4, 1);
        assert_eq!(e.provenance, Provenance::NoClosedForm);
        assert_eq!(e.value as usize, brute::start_end(&enumerate_fc(5), 4, 1));
    }

    #[test]
    fn binomial_identity_examples() {
        assert!(appendix_binomial_identity_check::<BigUint>(4, 0));
        assert!(appendix_binomial_identity_check::<BigUint>(6, 3));
        assert!(appendix_binomial_identity_check::<BigUint>(10, 7));
        assert!(!appendix_binomial_identity_check::<BigUint>(3, 4));
        let (lhs, _) = binomial_identity_sides::<u64>(2, 1);
        assert_eq!(lhs, Ratio::new(3, 2));
    }

    #[test]
    fn generic_over_scalar() {
        assert_eq!(
            BigUint::from(narayana::<u128>(20, 10)),
            narayana::<BigUint>(20, 10)
        );
        assert_eq!(catalan::<i64>(10), 16796);
    }

    #[test]
    fn recurrences_match_closed_forms() {
        let rows = recurrence::narayana_thick_slim_table::<u64>(9);
        for (n, row) in rows.iter().enumerate() {
            for (p, value) in row.iter().enumerate() {
                assert_eq!(
                    *value,
                    narayana::<u64>(n as isize, p as isize),
                    "N({n},{p})"
                );
            }
        }
        let tri = recurrence::triangle_start_table::<u64>(9);
        for (n, row) in tri.iter().enumerate().skip(1) {
            for (i, value) in row.iter().enumerate().skip(1) {
                assert_eq!(*value, triangle_start::<u64>(n, i));
                assert_eq!(
                    recurrence::triangle_start_mixed::<u64>(n, i),
                    triangle_start::<u64>(n, i)
                );
            }
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial::<u64>(5, 2), 10);
        assert_eq!(binomial::<u64>(2, 5), 0);
        assert_eq!(binomial::<u64>(0, 0), 1);
        assert_eq!(binomial::<BigUint>(40, 20), big(137_846_528_820));
    }
}
