use std::fmt;

use super::rational::{int, Rat};
use crate::{Error, Result};

/// An integer vector `n ∈ Z^N`. Negative parts are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<i64>);

impl IntVec {
    pub fn new(parts: Vec<i64>) -> Self {
        IntVec(parts)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![0; n])
    }

    /// The basis vector `e_j` (0-based `j`).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        IntVec(v)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|n| = n_1 + ⋯ + n_N`.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `S_j = n_j + ⋯ + n_N` for `j = 1..N` (stored 0-based).
    pub fn suffix_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.0.len()];
        let mut acc = 0;
        for (j, &v) in self.0.iter().enumerate().rev() {
            acc += v;
            out[j] = acc;
        }
        out
    }

    pub fn prefix_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    /// `0 ⪯ n`, i.e. every suffix sum is nonnegative.
    pub fn is_suffix_nonnegative(&self) -> bool {
        self.suffix_sums().iter().all(|&s| s >= 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn is_partition(&self) -> bool {
        self.is_nonnegative() && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn reversed(&self) -> IntVec {
        IntVec(self.0.iter().rev().copied().collect())
    }

    pub fn plus(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Adds `delta` to component `j` in place.
    pub fn bump(&mut self, j: usize, delta: i64) {
        self.0[j] += delta;
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl From<&Partition> for IntVec {
    fn from(p: &Partition) -> Self {
        IntVec(p.0.iter().map(|&v| v as i64).collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A partition padded with explicit trailing zeros to a fixed length `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_intvec(&self) -> IntVec {
        IntVec::from(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_intvec(), f)
    }
}

/// `m ⪯ n`: every suffix sum of `m` is at most the matching suffix sum of `n`.
pub fn suffix_leq(m: &IntVec, n: &IntVec) -> Result<bool> {
    Error::check_len(n.len(), m.len())?;
    Ok(m.suffix_sums()
        .iter()
        .zip(n.suffix_sums())
        .all(|(a, b)| *a <= b))
}

/// Dominance order: every prefix sum of `mu` is at most that of `lam`.
pub fn dominance_leq(mu: &IntVec, lam: &IntVec) -> Result<bool> {
    Error::check_len(lam.len(), mu.len())?;
    Ok(mu
        .prefix_sums()
        .iter()
        .zip(lam.prefix_sums())
        .all(|(a, b)| *a <= b))
}

/// Sort key whose lexicographic order is a linear extension of `⪯`:
/// `(S_N, S_{N−1}, …, S_1)`.
pub fn suffix_order_key(n: &IntVec) -> Vec<i64> {
    let mut s = n.suffix_sums();
    s.reverse();
    s
}

pub fn to_partition(n: &IntVec) -> Result<Partition> {
    let parts = n
        .parts()
        .iter()
        .map(|&v| {
            u32::try_from(v).map_err(|_| Error::invalid(format!("negative part in {n}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_unsorted(parts))
}

/// `n⁺_j = n_j + κ(N + 1 − j)` with 1-based `j`.
pub fn shifted_plus(n: &IntVec, kappa: &Rat) -> Vec<Rat> {
    let len = n.len() as i64;
    n.parts()
        .iter()
        .enumerate()
        .map(|(j, &v)| int(v) + kappa * int(len - j as i64))
        .collect()
}

/// All partitions of `weight` with at most `nparts` parts, padded to length
/// `nparts`, in decreasing lexicographic order.
pub fn partitions_of_weight(weight: u32, nparts: usize) -> Vec<Partition> {
    fn rec(left: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if left == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        // remaining slots can absorb at most `max * slots`
        if (left as u64) > max as u64 * slots as u64 {
            return;
        }
        for v in (0..=left.min(max)).rev() {
            cur.push(v);
            rec(left - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nparts == 0 {
        if weight == 0 {
            out.push(Partition(Vec::new()));
        }
        return out;
    }
    rec(weight, weight, nparts, &mut Vec::with_capacity(nparts), &mut out);
    out
}

/// All partitions with at most `nparts` parts and weight `≤ maxweight`,
/// grouped by increasing weight.
pub fn partitions_up_to(maxweight: u32, nparts: usize) -> Vec<Partition> {
    (0..=maxweight)
        .flat_map(|w| partitions_of_weight(w, nparts))
        .collect()
}
