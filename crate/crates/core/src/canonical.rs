//! Canonical forms of beta-sets inside a triangular region.
//!
//! A region is `D = {n - as - bt | a, b >= 0, a + b <= i}` for an apex `n`
//! and depth `i`, split into diagonals `D_j = {n - as - bt | a + b = j}`.
//! A set closed in `D` is first top-justified along every diagonal and then
//! pushed through the sliding procedure of [`slide_step2`]. Every closed set
//! of a given size ends at the same canonical set, and each step only moves
//! elements upward, so the input is partition-wise contained in the output.

use serde::{Deserialize, Serialize};

use crate::closure::{closure, CoreParams};
use crate::error::{Error, Result};
use crate::partition::{BetaSet, PartitionOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleRegion {
    #[serde(flatten)]
    params: CoreParams,
    apex: u32,
    depth: u32,
}

impl TriangleRegion {
    /// Requires `apex - depth * t >= 1` so every cell is positive, and
    /// `depth <= s` so every cell has exactly one `(a, b)` representation.
    pub fn new(params: CoreParams, apex: u32, depth: u32) -> Result<Self> {
        if depth > params.s() {
            return Err(Error::Precondition(format!(
                "region depth {depth} exceeds s = {}",
                params.s()
            )));
        }
        if u64::from(apex) < u64::from(depth) * u64::from(params.t()) + 1 {
            return Err(Error::Precondition(format!(
                "apex {apex} is too small for depth {depth}: the cell {apex} - {depth}·{} is not positive",
                params.t()
            )));
        }
        Ok(TriangleRegion { params, apex, depth })
    }

    /// The deepest valid region under `apex`.
    pub fn deepest(params: CoreParams, apex: u32) -> Result<Self> {
        if apex == 0 {
            return Err(Error::Precondition("apex must be positive".into()));
        }
        let depth = ((apex - 1) / params.t()).min(params.s());
        TriangleRegion::new(params, apex, depth)
    }

    /// Region with apex `st - s - t`. For `t = s + 1` its cells are exactly `β_{s,t}`.
    pub fn for_maximal(params: CoreParams) -> Result<Self> {
        let apex = u32::try_from(params.frobenius())
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Precondition("β_{s,t} is empty".into()))?;
        TriangleRegion::deepest(params, apex)
    }

    pub fn params(&self) -> CoreParams {
        self.params
    }

    pub fn apex(&self) -> u32 {
        self.apex
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    fn value(&self, a: u32, b: u32) -> u32 {
        self.apex - a * self.params.s() - b * self.params.t()
    }

    /// `D_j` in descending order: the cell with the most `s` steps first.
    pub fn diagonal(&self, j: u32) -> Vec<u32> {
        if j > self.depth {
            return Vec::new();
        }
        (0..=j).rev().map(|a| self.value(a, j - a)).collect()
    }

    pub fn diagonals(&self) -> Vec<Vec<u32>> {
        (0..=self.depth).map(|j| self.diagonal(j)).collect()
    }

    pub fn cells(&self) -> BetaSet {
        BetaSet::from_unsorted(self.diagonals().into_iter().flatten())
            .expect("cells of a valid region are distinct")
    }

    /// The `(a, b)` with `x = apex - as - bt`, if `x` is a cell.
    pub fn coordinates(&self, x: u32) -> Option<(u32, u32)> {
        let (s, t) = (self.params.s(), self.params.t());
        (0..=self.depth).find_map(|b| {
            let rest = self.apex.checked_sub(b * t)?.checked_sub(x)?;
            (rest % s == 0 && rest / s + b <= self.depth).then_some((rest / s, b))
        })
    }

    pub fn contains(&self, x: u32) -> bool {
        self.coordinates(x).is_some()
    }

    /// Cells laid out like a bead diagram: row `a` from the top (`a = depth`)
    /// down to `a = 0`, column `b` from the left.
    pub fn grid_rows(&self) -> Vec<Vec<Option<u32>>> {
        (0..=self.depth)
            .rev()
            .map(|a| {
                (0..=self.depth)
                    .map(|b| (a + b <= self.depth).then(|| self.value(a, b)))
                    .collect()
            })
            .collect()
    }

    fn diagonal_of(&self, x: u32) -> Option<u32> {
        self.coordinates(x).map(|(a, b)| a + b)
    }

    fn require_inside(&self, b: &BetaSet) -> Result<()> {
        match b.iter().find(|&x| !self.contains(x)) {
            Some(x) => Err(Error::Precondition(format!("{x} is not a cell of the region"))),
            None => Ok(()),
        }
    }
}

/// Canonical form together with its characterizing element `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub region: TriangleRegion,
    pub elements: BetaSet,
    pub anchor: Option<Anchor>,
}

/// Among the minima `x_j` of the nonempty diagonals, the one with the least
/// `a`, ties broken by the least `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub element: u32,
    pub a: u32,
    pub b: u32,
}

/// One accepted move of the sliding procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideMove {
    pub diagonal: u32,
    pub removed: u32,
    pub inserted: u32,
    pub landed: u32,
    /// The set right after the insertion, before sliding.
    pub before_slide: BetaSet,
    /// The set after sliding the inserted element up its diagonal.
    pub after_slide: BetaSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CanonicalType {
    TypeI,
    TypeII,
}

/// `closure(b) ∩ D == b`.
pub fn is_closed_in_region(r: &TriangleRegion, b: &BetaSet) -> Result<bool> {
    r.require_inside(b)?;
    Ok(closure(r.params, b).intersection(&r.cells()) == *b)
}

fn require_closed(r: &TriangleRegion, b: &BetaSet) -> Result<()> {
    if is_closed_in_region(r, b)? {
        Ok(())
    } else {
        Err(Error::NotClosed(format!("{b} in the region")))
    }
}

/// Keeps the size of `b ∩ D_j` on every diagonal but moves those elements
/// to the largest cells of `D_j`.
pub fn top_justify(r: &TriangleRegion, b: &BetaSet) -> Result<BetaSet> {
    require_closed(r, b)?;
    let justified = BetaSet::from_unsorted(r.diagonals().into_iter().flat_map(|diag| {
        let count = diag.iter().filter(|&&x| b.contains(x)).count();
        diag.into_iter().take(count)
    }))?;
    assert!(b.contained_in(&justified), "top justification must not shrink {b}");
    Ok(justified)
}

fn is_top_justified(r: &TriangleRegion, b: &BetaSet) -> bool {
    r.diagonals().into_iter().all(|diag| {
        let count = diag.iter().filter(|&&x| b.contains(x)).count();
        diag[..count].iter().all(|&x| b.contains(x))
    })
}

/// Second stage of the canonical form.
///
/// Starting at `j = 2`, let `x_j` be the least element of `b` on `D_j`. If
/// `x_j + t` is in `b`, or no cell of `E(x_j) = {x_j + t - s + kt | k > 0}`
/// is a free cell of `D`, move on to `j + 1`. Otherwise replace `x_j` by
/// `min E(x_j)`, slide the new element up its diagonal (`+ (t - s)` per
/// step) while the next cell is free, and restart at `j = 2`. Stops once
/// `j` passes the depth.
pub fn slide_step2(r: &TriangleRegion, b: &BetaSet) -> Result<BetaSet> {
    slide_step2_traced(r, b).map(|(out, _)| out)
}

pub fn slide_step2_traced(r: &TriangleRegion, b: &BetaSet) -> Result<(BetaSet, Vec<SlideMove>)> {
    require_closed(r, b)?;
    if !is_top_justified(r, b) {
        return Err(Error::Precondition(format!("{b} is not diagonally top justified")));
    }
    let (s, t) = (r.params.s(), r.params.t());
    let lift = t - s;
    let mut current = b.clone();
    let mut moves = Vec::new();
    let mut j = 2;
    while j <= r.depth {
        let Some(x) = r.diagonal(j).into_iter().filter(|&x| current.contains(x)).min() else {
            j += 1;
            continue;
        };
        if current.contains(x + t) {
            j += 1;
            continue;
        }
        let candidate = (1..)
            .map(|k| x + t - s + k * t)
            .take_while(|&y| y <= r.apex)
            .find(|&y| r.contains(y) && !current.contains(y));
        let Some(inserted) = candidate else {
            j += 1;
            continue;
        };
        let without = current.difference(&BetaSet::from_sorted_unchecked(vec![x]));
        let before_slide = without.union(&BetaSet::from_sorted_unchecked(vec![inserted]));
        let mut landed = inserted;
        while r.contains(landed + lift)
            && r.diagonal_of(landed + lift) == r.diagonal_of(landed)
            && !without.contains(landed + lift)
        {
            landed += lift;
        }
        let next = without.union(&BetaSet::from_sorted_unchecked(vec![landed]));
        assert!(current.contained_in(&next), "sliding must move {x} upward");
        moves.push(SlideMove {
            diagonal: j,
            removed: x,
            inserted,
            landed,
            before_slide,
            after_slide: next.clone(),
        });
        current = next;
        j = 2;
    }
    Ok((current, moves))
}

/// `slide_step2(top_justify(b))`, with its anchor.
pub fn canonical_form(r: &TriangleRegion, b: &BetaSet) -> Result<CanonicalForm> {
    let justified = top_justify(r, b)?;
    let elements = slide_step2(r, &justified)?;
    assert!(b.contained_in(&elements), "{b} must lie inside its canonical form");
    assert!(elements.is_subset_of(&r.cells()));
    assert_eq!(elements.len(), b.len());
    let anchor = anchor_of(r, &elements);
    Ok(CanonicalForm { region: *r, elements, anchor })
}

fn anchor_of(r: &TriangleRegion, elements: &BetaSet) -> Option<Anchor> {
    r.diagonals()
        .into_iter()
        .filter_map(|diag| diag.into_iter().filter(|&x| elements.contains(x)).min())
        .map(|x| {
            let (a, b) = r.coordinates(x).expect("cell of the region");
            Anchor { element: x, a, b }
        })
        .min_by_key(|anchor| (anchor.a, anchor.b))
}

/// Rebuilds a canonical set from its anchor:
/// `{n - as - bt | a > a_y, a + b <= i} ∪ {y, y - t, ..., y - (i - a_y - b_y)t}`.
pub fn from_anchor(r: &TriangleRegion, anchor: &Anchor) -> BetaSet {
    let triangle = (anchor.a + 1..=r.depth)
        .flat_map(|a| (0..=r.depth - a).map(move |b| (a, b)))
        .map(|(a, b)| r.value(a, b));
    let column = (anchor.b..=r.depth - anchor.a).map(|b| r.value(anchor.a, b));
    BetaSet::from_unsorted(triangle.chain(column)).expect("distinct cells")
}

/// Text picture of the region with the members of `b` circled.
pub fn render_region(r: &TriangleRegion, b: &BetaSet) -> String {
    crate::bead::render_rows(&r.grid_rows(), b)
}

/// Closed-form canonical set of size `m`: with `T_k <= m < T_{k+1}`,
/// `{n - (i-k+1)s - as - bt | a + b <= k - 1} ∪ A` where `A` is empty when
/// `m = T_k` and `{n - (i-k)s - bt | k + T_k - m < b <= k}` otherwise.
pub fn closed_form_canonical(r: &TriangleRegion, m: usize) -> Result<BetaSet> {
    let cells = r.cells().len();
    if m > cells {
        return Err(Error::Precondition(format!(
            "size {m} exceeds the {cells} cells of the region"
        )));
    }
    let k = (0..).take_while(|&k| triangular(k) <= m).last().expect("T_0 = 0");
    let tk = triangular(k);
    let (s, t, n, i) = (
        i64::from(r.params.s()),
        i64::from(r.params.t()),
        i64::from(r.apex),
        i64::from(r.depth),
    );
    let k = k as i64;
    let mut values = Vec::new();
    for a in 0..k {
        for b in 0..k - a {
            values.push(n - (i - k + 1) * s - a * s - b * t);
        }
    }
    if tk != m {
        let low = k + tk as i64 - m as i64;
        values.extend((low + 1..=k).map(|b| n - (i - k) * s - b * t));
    }
    let values = values
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    BetaSet::from_unsorted(values)
}

fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

/// For `t = s + 1`: type I when the canonical set is a full triangle
/// (its size is triangular), type II otherwise.
pub fn classify_type(c: &CanonicalForm) -> Result<CanonicalType> {
    let params = c.region.params;
    if params.t() != params.s() + 1 {
        return Err(Error::Precondition(format!(
            "type classification needs t = s + 1, got ({}, {})",
            params.s(),
            params.t()
        )));
    }
    let m = c.elements.len();
    let k = (0..).take_while(|&k| triangular(k) <= m).last().expect("T_0 = 0");
    Ok(if triangular(k) == m {
        CanonicalType::TypeI
    } else {
        CanonicalType::TypeII
    })
}
