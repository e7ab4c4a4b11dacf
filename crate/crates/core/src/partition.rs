//! Partitions, beta-sets and the bijection between them.
//!
//! A beta-set lists the first-column hook lengths of a partition. Both types
//! keep their entries sorted in descending order, so the i-th part of the
//! partition of a beta-set with `n` elements is `b[i] - (n - 1 - i)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing tuple of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Finite set of positive integers, stored strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BetaSet {
    elements: Vec<u32>,
}

/// Hook numbers of one row of the hook diagram, 1-based row index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookRow {
    pub row: usize,
    pub hooks: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let weakly_decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !weakly_decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in the Ferrers diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Concatenates two partitions; fails if the result is not weakly decreasing.
    pub fn concat(&self, tail: &Partition) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&tail.parts);
        Partition::new(parts)
    }

    pub fn to_beta_set(&self) -> BetaSet {
        beta_of_partition(self)
    }
}

impl BetaSet {
    /// Builds a beta-set from elements already in strictly decreasing order.
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        let strictly_decreasing = elements.windows(2).all(|w| w[0] > w[1]);
        if !strictly_decreasing || elements.last() == Some(&0) {
            return Err(Error::InvalidBetaSet(elements));
        }
        Ok(BetaSet { elements })
    }

    /// Builds a beta-set from elements in any order. Duplicates are an error.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(iter: I) -> Result<Self> {
        let mut elements: Vec<u32> = iter.into_iter().collect();
        elements.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet::new(elements)
    }

    /// Builds a beta-set from a descending vector that is known to be valid.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(elements.last() != Some(&0));
        BetaSet { elements }
    }

    /// Collects the `true` positions of a membership table indexed by value.
    pub(crate) fn from_membership(member: &[bool]) -> Self {
        let elements = member
            .iter()
            .enumerate()
            .rev()
            .filter(|&(x, &m)| m && x > 0)
            .map(|(x, _)| x as u32)
            .collect();
        BetaSet { elements }
    }

    pub fn empty() -> Self {
        BetaSet::default()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.elements.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.elements.last().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.elements.iter().copied()
    }

    pub fn is_subset_of(&self, other: &BetaSet) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &BetaSet) -> BetaSet {
        let mut elements = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            let (a, b) = (self.elements[i], other.elements[j]);
            elements.push(a.max(b));
            if a >= b {
                i += 1;
            }
            if b >= a {
                j += 1;
            }
        }
        elements.extend_from_slice(&self.elements[i..]);
        elements.extend_from_slice(&other.elements[j..]);
        BetaSet { elements }
    }

    pub fn difference(&self, other: &BetaSet) -> BetaSet {
        let elements = self.iter().filter(|&x| !other.contains(x)).collect();
        BetaSet { elements }
    }

    pub fn intersection(&self, other: &BetaSet) -> BetaSet {
        let elements = self.iter().filter(|&x| other.contains(x)).collect();
        BetaSet { elements }
    }

    /// Elements that are at most `bound`.
    pub fn at_most(&self, bound: u32) -> BetaSet {
        let elements = self.iter().filter(|&x| x <= bound).collect();
        BetaSet { elements }
    }

    pub fn to_partition(&self) -> Partition {
        partition_of_beta(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_list(f, &self.parts)?;
        write!(f, ")")
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write_list(f, &self.elements)?;
        write!(f, "}}")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for BetaSet {
    type Error = Error;

    fn try_from(elements: Vec<u32>) -> Result<Self> {
        BetaSet::new(elements)
    }
}

impl From<BetaSet> for Vec<u32> {
    fn from(b: BetaSet) -> Self {
        b.elements
    }
}

/// `(b_1 - (n-1), b_2 - (n-2), ..., b_n)`.
pub fn partition_of_beta(b: &BetaSet) -> Partition {
    let n = b.len();
    let parts = b
        .iter()
        .enumerate()
        .map(|(i, x)| x - (n - 1 - i) as u32)
        .collect();
    Partition { parts }
}

/// `{p_1 + (n-1), p_2 + (n-2), ..., p_n}`.
pub fn beta_of_partition(p: &Partition) -> BetaSet {
    let n = p.len();
    let elements = p
        .parts
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (n - 1 - i) as u32)
        .collect();
    BetaSet { elements }
}

/// Hook numbers of row `row` (1-based): `{1..b_i} \ {b_i - b_j | j > i}`.
pub fn hook_row(b: &BetaSet, row: usize) -> Result<HookRow> {
    if row == 0 || row > b.len() {
        return Err(Error::IndexOutOfRange { index: row, len: b.len() });
    }
    let head = b.elements[row - 1];
    let below = &b.elements[row..];
    let hooks = (1..=head)
        .rev()
        .filter(|&h| !below.contains(&(head - h)))
        .collect();
    Ok(HookRow { row, hooks })
}

/// All hook numbers of `p` with multiplicity, sorted descending.
pub fn hook_multiset(p: &Partition) -> Vec<u32> {
    let b = beta_of_partition(p);
    let mut hooks: Vec<u32> = (1..=b.len())
        .flat_map(|row| hook_row(&b, row).expect("row in range").hooks)
        .collect();
    hooks.sort_unstable_by(|x, y| y.cmp(x));
    hooks
}

/// Element-wise shifts. Subtraction deletes every entry that would drop
/// below 1, so `x.add(a).subtract(a) == x` but not the other way round.
pub trait Shift: Sized {
    fn add(&self, a: u32) -> Result<Self>;
    fn subtract(&self, a: u32) -> Self;
}

impl Shift for Partition {
    fn add(&self, a: u32) -> Result<Self> {
        let parts = shift_up(&self.parts, a)?;
        Ok(Partition { parts })
    }

    fn subtract(&self, a: u32) -> Self {
        Partition { parts: shift_down(&self.parts, a) }
    }
}

impl Shift for BetaSet {
    fn add(&self, a: u32) -> Result<Self> {
        let elements = shift_up(&self.elements, a)?;
        Ok(BetaSet { elements })
    }

    fn subtract(&self, a: u32) -> Self {
        BetaSet { elements: shift_down(&self.elements, a) }
    }
}

fn shift_up(values: &[u32], a: u32) -> Result<Vec<u32>> {
    values
        .iter()
        .map(|&x| x.checked_add(a).ok_or(Error::Overflow))
        .collect()
}

fn shift_down(values: &[u32], a: u32) -> Vec<u32> {
    values.iter().filter(|&&x| x > a).map(|&x| x - a).collect()
}

/// Partition-wise containment, written `≺` for beta-sets.
pub trait PartitionOrder {
    fn contained_in(&self, other: &Self) -> bool;
}

impl PartitionOrder for Partition {
    fn contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

impl PartitionOrder for BetaSet {
    /// `n <= m` and `b_i <= b'_i - (m - n)` for every `i <= n`.
    fn contained_in(&self, other: &Self) -> bool {
        let (n, m) = (self.len(), other.len());
        if n > m {
            return false;
        }
        let gap = (m - n) as u64;
        self.iter()
            .zip(other.iter())
            .all(|(a, b)| u64::from(a) + gap <= u64::from(b))
    }
}

/// Splits a beta-set whose upper block `upper` lies entirely above `lower`:
/// `P(upper ∪ lower) = P(upper - |lower|)` followed by `P(lower)`.
pub fn concat_split_check(upper: &BetaSet, lower: &BetaSet) -> Result<Partition> {
    if let (Some(lo), Some(hi)) = (upper.smallest(), lower.largest()) {
        if lo <= hi {
            return Err(Error::Precondition(format!(
                "every element of {upper} must exceed every element of {lower}"
            )));
        }
    }
    let joined = partition_of_beta(&upper.union(lower));
    let shifted = upper.subtract(lower.len() as u32);
    let split = partition_of_beta(&shifted).concat(&partition_of_beta(lower))?;
    assert_eq!(joined, split, "concatenation identity failed for {upper} and {lower}");
    Ok(joined)
}

/// Replaces the `j`-th element (1-based) by `b_j + a`; the result always
/// contains `b` partition-wise.
pub fn bump_element(b: &BetaSet, j: usize, a: u32) -> Result<BetaSet> {
    if j == 0 || j > b.len() {
        return Err(Error::IndexOutOfRange { index: j, len: b.len() });
    }
    let old = b.elements[j - 1];
    let new = old.checked_add(a).ok_or(Error::Overflow)?;
    if a == 0 || b.contains(new) {
        return Err(Error::Precondition(format!("{new} is already in {b}")));
    }
    let bumped = BetaSet::from_unsorted(b.iter().filter(|&x| x != old).chain([new]))?;
    assert!(b.contained_in(&bumped), "{b} is not contained in its bump {bumped}");
    Ok(bumped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(v: &[u32]) -> BetaSet {
        BetaSet::from_unsorted(v.iter().copied()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(partition_of_beta(&beta(&[11, 9, 6, 5, 1])), part(&[7, 6, 4, 4, 1]));
        assert_eq!(beta_of_partition(&part(&[7, 6, 4, 4, 1])), beta(&[11, 9, 6, 5, 1]));
        assert_eq!(partition_of_beta(&BetaSet::empty()), Partition::empty());
        assert_eq!(beta_of_partition(&Partition::empty()), BetaSet::empty());
        assert_eq!(partition_of_beta(&beta(&[3, 2, 1])), part(&[1, 1, 1]));
        assert_eq!(beta_of_partition(&part(&[1, 1, 1])), beta(&[3, 2, 1]));
    }

    #[test]
    fn rejects_malformed_values() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(BetaSet::new(vec![3, 3]).is_err());
        assert!(BetaSet::new(vec![1, 2]).is_err());
        assert!(BetaSet::new(vec![2, 0]).is_err());
        assert!(BetaSet::from_unsorted([4, 1, 4]).is_err());
    }

    #[test]
    fn hook_rows_of_six_four_one() {
        let b = beta(&[6, 4, 1]);
        assert_eq!(hook_row(&b, 1).unwrap().hooks, vec![6, 4, 3, 1]);
        assert_eq!(hook_row(&b, 2).unwrap().hooks, vec![4, 2, 1]);
        assert_eq!(hook_row(&b, 3).unwrap().hooks, vec![1]);
        assert_eq!(
            hook_row(&b, 4),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        );
        assert!(hook_row(&b, 0).is_err());
        assert_eq!(hook_row(&beta(&[5]), 1).unwrap().hooks, vec![5, 4, 3, 2, 1]);
    }

    #[test]
    fn hook_multisets() {
        assert_eq!(hook_multiset(&part(&[1])), vec![1]);
        assert_eq!(hook_multiset(&part(&[2, 1])), vec![3, 1, 1]);
        assert!(hook_multiset(&Partition::empty()).is_empty());
        let hooks = hook_multiset(&part(&[7, 6, 4, 4, 1]));
        assert_eq!(hooks.len(), 22);
        assert!(hooks.contains(&7));
        assert_eq!(hooks[0], 11);
    }

    #[test]
    fn shifts() {
        assert_eq!(part(&[3, 1]).add(2).unwrap(), part(&[5, 3]));
        assert_eq!(BetaSet::empty().add(5).unwrap(), BetaSet::empty());
        assert_eq!(beta(&[6, 1]).add(3).unwrap(), beta(&[9, 4]));
        assert_eq!(beta(&[5, 3, 1]).subtract(2), beta(&[3, 1]));
        assert_eq!(beta(&[3, 2, 1]).subtract(5), BetaSet::empty());
        assert_eq!(part(&[4, 2, 2]).subtract(2), part(&[2]));
        let round = beta(&[6, 1]).subtract(3).add(3).unwrap();
        assert_eq!(round, beta(&[6]));
        assert_ne!(round, beta(&[6, 1]));
        assert_eq!(beta(&[u32::MAX]).add(1), Err(Error::Overflow));
    }

    #[test]
    fn containment() {
        assert!(beta(&[3, 2, 1]).contained_in(&beta(&[9, 4, 3])));
        assert!(!beta(&[9, 4, 3]).contained_in(&beta(&[3, 2, 1])));
        let x = beta(&[11, 9, 6, 5, 1]);
        assert!(x.contained_in(&x));
        assert!(BetaSet::empty().contained_in(&x));
        assert!(!x.contained_in(&BetaSet::empty()));
        assert!(part(&[1, 1, 1]).contained_in(&part(&[7, 3, 3])));
        assert!(!part(&[1, 1, 1, 1]).contained_in(&part(&[7, 3, 3])));
    }

    #[test]
    fn concatenation_split() {
        let upper = beta(&[11, 9]);
        let lower = beta(&[2, 1]);
        assert_eq!(concat_split_check(&upper, &lower).unwrap(), part(&[8, 7, 1, 1]));
        assert_eq!(concat_split_check(&beta(&[5]), &BetaSet::empty()).unwrap(), part(&[5]));
        assert_eq!(concat_split_check(&BetaSet::empty(), &beta(&[3, 1])).unwrap(), part(&[2, 1]));
        assert!(matches!(
            concat_split_check(&beta(&[5, 2]), &beta(&[3])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bumps() {
        let b = beta(&[6, 4, 1]);
        assert_eq!(bump_element(&b, 3, 1).unwrap(), beta(&[6, 4, 2]));
        assert_eq!(bump_element(&b, 2, 3).unwrap(), beta(&[7, 6, 1]));
        assert!(matches!(bump_element(&b, 2, 2), Err(Error::Precondition(_))));
        assert!(matches!(bump_element(&b, 4, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn display_uses_braces_and_parentheses() {
        assert_eq!(beta(&[11, 9, 6]).to_string(), "{11, 9, 6}");
        assert_eq!(part(&[7, 6, 4]).to_string(), "(7, 6, 4)");
        assert_eq!(BetaSet::empty().to_string(), "{}");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn set_helpers() {
        let a = beta(&[9, 5, 2]);
        let b = beta(&[7, 5, 1]);
        assert_eq!(a.union(&b), beta(&[9, 7, 5, 2, 1]));
        assert_eq!(a.difference(&b), beta(&[9, 2]));
        assert_eq!(a.intersection(&b), beta(&[5]));
        assert!(beta(&[5, 2]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.at_most(5), beta(&[5, 2]));
    }
}
