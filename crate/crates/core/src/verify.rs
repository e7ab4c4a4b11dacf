//! Exhaustive enumeration and checkers for the containment results.
//!
//! Every checker returns an [`EnumerationReport`]. A claim that fails on
//! some set lands in `violations` with both sets and their partitions, so a
//! report with no violations is the positive outcome. `observations` holds
//! expected non-results, such as sets that escape `MΔ_n` until it is shifted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::closure::{
    closure, delta, is_closed, max_delta_with_size, maximal_beta, width, height, CoreParams,
    DeltaSet,
};
use crate::error::{Error, Result};
use crate::ideals::OrderIdeals;
use crate::partition::{BetaSet, Partition, PartitionOrder, Shift};

/// Default limit on the size of a universe walked by the enumerators.
pub const DEFAULT_GUARD: usize = 40;

/// Default limit on `n` for size-indexed checkers.
pub const DEFAULT_SIZE_GUARD: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub s: u32,
    pub t: u32,
    pub count: usize,
    pub by_size: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<BetaSet>>,
    pub violations: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Finding>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tallies: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub claim: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub beta: BetaSet,
    pub beta_partition: Partition,
    pub bound: BetaSet,
    pub bound_partition: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Witness {
    pub fn new(beta: &BetaSet, bound: &BetaSet, n: Option<usize>) -> Self {
        Witness {
            beta: beta.clone(),
            beta_partition: beta.to_partition(),
            bound: bound.clone(),
            bound_partition: bound.to_partition(),
            n,
        }
    }
}

impl EnumerationReport {
    pub fn new(params: CoreParams) -> Self {
        EnumerationReport {
            s: params.s(),
            t: params.t(),
            count: 0,
            by_size: BTreeMap::new(),
            witnesses: None,
            violations: Vec::new(),
            observations: Vec::new(),
            tallies: BTreeMap::new(),
            status: None,
        }
    }

    pub fn record(&mut self, size: usize) {
        self.count += 1;
        *self.by_size.entry(size).or_default() += 1;
    }

    pub fn violate(&mut self, claim: &str, witness: Witness) {
        self.violations.push(Finding { claim: claim.to_string(), witness });
    }

    pub fn observe(&mut self, claim: &str, witness: Witness) {
        self.observations.push(Finding { claim: claim.to_string(), witness });
    }

    pub fn tally(&mut self, key: &str) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn guard(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::GuardExceeded { size, limit })
    } else {
        Ok(())
    }
}

/// Every (s,t)-core beta-set, i.e. every closed subset of `β_{s,t}`,
/// including the empty set. Fails when `|β_{s,t}|` exceeds `limit`.
pub fn enumerate_core(params: CoreParams, limit: usize) -> Result<OrderIdeals> {
    let universe = maximal_beta(params);
    guard(universe.len(), limit)?;
    Ok(OrderIdeals::new(&universe, &params.steps(), None))
}

/// Every (s,t)-closed beta-set with exactly `n` elements.
///
/// The maximum `m` of such a set satisfies `|closure({m})| <= n`, so `m` is
/// at most the generator of `MΔ_n` and the walk stays inside `1..=gen(MΔ_n)`.
pub fn enumerate_closed_of_size(params: CoreParams, n: usize) -> Result<OrderIdeals> {
    let top = max_delta_with_size(params, n)?.generator();
    let universe = BetaSet::from_sorted_unchecked((1..=top).rev().collect());
    Ok(OrderIdeals::new(&universe, &params.steps(), Some(n)))
}

/// Enumerates the cores with per-size counts, optionally keeping every set.
pub fn core_report(params: CoreParams, limit: usize, keep: bool) -> Result<EnumerationReport> {
    let mut report = EnumerationReport::new(params);
    let mut kept = Vec::new();
    for b in enumerate_core(params, limit)? {
        report.record(b.len());
        if keep {
            kept.push(b);
        }
    }
    if keep {
        kept.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        report.witnesses = Some(kept);
    }
    Ok(report)
}

/// Every core is contained in `β_{s,t}`, and no other core contains it.
pub fn check_maximal_theorem(params: CoreParams, limit: usize) -> Result<EnumerationReport> {
    let top = maximal_beta(params);
    let mut report = EnumerationReport::new(params);
    for b in enumerate_core(params, limit)? {
        report.record(b.len());
        if !b.contained_in(&top) {
            report.violate("maximal", Witness::new(&b, &top, None));
        }
        if b != top && top.contained_in(&b) {
            report.violate("maximal-strict", Witness::new(&top, &b, None));
        }
    }
    Ok(report)
}

/// For each generator `g <= gen_bound`, every closed subset of `closure({g})`
/// is contained in it.
pub fn check_first_generalization(
    params: CoreParams,
    gen_bound: u32,
    limit: usize,
) -> Result<EnumerationReport> {
    let mut report = EnumerationReport::new(params);
    for g in 1..=gen_bound {
        let d = delta(params, g);
        guard(d.len(), limit)?;
        for b in OrderIdeals::new(d.elements(), &params.steps(), None) {
            report.record(b.len());
            if !b.contained_in(d.elements()) {
                report.violate("first-generalization", Witness::new(&b, d.elements(), None));
            }
        }
    }
    Ok(report)
}

/// `closure(MΔ_n + s)`, the bound for closed sets of size `n`.
pub fn shifted_max_delta(params: CoreParams, n: usize) -> Result<BetaSet> {
    let m = max_delta_with_size(params, n)?;
    Ok(closure(params, &m.elements().add(params.s())?))
}

/// Every closed set of size `n <= n_max` is contained in `closure(MΔ_n + s)`.
/// Sets that are not contained in `MΔ_n` itself are kept as observations.
pub fn check_second_generalization(
    params: CoreParams,
    n_max: usize,
    limit: usize,
) -> Result<EnumerationReport> {
    guard(n_max, limit)?;
    let mut report = EnumerationReport::new(params);
    for n in 0..=n_max {
        let m = max_delta_with_size(params, n)?;
        let bound = closure(params, &m.elements().add(params.s())?);
        for b in enumerate_closed_of_size(params, n)? {
            report.record(n);
            if !b.contained_in(&bound) {
                report.violate("second-generalization", Witness::new(&b, &bound, Some(n)));
            }
            if !b.contained_in(m.elements()) {
                report.observe("unshifted", Witness::new(&b, m.elements(), Some(n)));
            }
        }
    }
    Ok(report)
}

fn precondition(ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(message.to_string()))
    }
}

/// Given `b ≺ g`, `A, B ⊆ {1..k}`, `|A| >= |B|` and `|g| >= |(b + k) ∪ A|`,
/// returns whether `(b + k) ∪ A ≺ (g + k) ∪ B`.
pub fn shift_union_predicate(
    b: &BetaSet,
    g: &BetaSet,
    k: u32,
    a_set: &BetaSet,
    b_set: &BetaSet,
) -> Result<bool> {
    precondition(k > 0, "k must be positive")?;
    precondition(a_set.largest().is_none_or(|x| x <= k), "A must lie in 1..=k")?;
    precondition(b_set.largest().is_none_or(|x| x <= k), "B must lie in 1..=k")?;
    precondition(a_set.len() >= b_set.len(), "|A| must be at least |B|")?;
    precondition(b.contained_in(g), "b must be contained in g")?;
    let left = b.add(k)?.union(a_set);
    precondition(g.len() >= left.len(), "|g| must be at least |(b + k) ∪ A|")?;
    let right = g.add(k)?.union(b_set);
    Ok(left.contained_in(&right))
}

/// Closure form of [`shift_union_predicate`]: for closed `b ≺ g` with
/// `|cl(b+k)| - |b| >= |cl(g+k)| - |g|` and `|g| >= |cl(b+k)|`, returns
/// whether `cl(b + k) ≺ cl(g + k)`.
pub fn shift_closure_predicate(params: CoreParams, b: &BetaSet, g: &BetaSet, k: u32) -> Result<bool> {
    precondition(k > 0, "k must be positive")?;
    precondition(is_closed(params, b) && is_closed(params, g), "b and g must be closed")?;
    precondition(b.contained_in(g), "b must be contained in g")?;
    let left = closure(params, &b.add(k)?);
    let right = closure(params, &g.add(k)?);
    precondition(
        left.len() - b.len() >= right.len() - g.len(),
        "cl(b + k) must gain at least as many elements as cl(g + k)",
    )?;
    precondition(g.len() >= left.len(), "|g| must be at least |cl(b + k)|")?;
    Ok(left.contained_in(&right))
}

/// For closed `b ⊆ d` with `|d| - |b| <= width(d)`, returns whether `b ≺ d`.
pub fn width_gap_predicate(params: CoreParams, d: &DeltaSet, b: &BetaSet) -> Result<bool> {
    precondition(is_closed(params, b), "b must be closed")?;
    precondition(b.is_subset_of(d.elements()), "b must be a subset of the delta-set")?;
    precondition(
        d.len() - b.len() <= width(params, d.elements()),
        "|d| - |b| must not exceed width(d)",
    )?;
    Ok(b.contained_in(d.elements()))
}

/// For more than two pairwise disjoint delta-sets, one of width above 1,
/// returns whether `height(MΔ_n)` is below the sum of their heights, where
/// `n` is their total size.
pub fn height_sum_predicate(params: CoreParams, deltas: &[DeltaSet]) -> Result<bool> {
    precondition(deltas.len() > 2, "needs more than two delta-sets")?;
    let disjoint = deltas.iter().enumerate().all(|(i, a)| {
        deltas[i + 1..]
            .iter()
            .all(|b| a.elements().intersection(b.elements()).is_empty())
    });
    precondition(disjoint, "delta-sets must be pairwise disjoint")?;
    precondition(
        deltas.iter().any(|d| width(params, d.elements()) > 1),
        "some delta-set must have width above 1",
    )?;
    let n = deltas.iter().map(DeltaSet::len).sum();
    let m = max_delta_with_size(params, n)?;
    let total: usize = deltas.iter().map(|d| height(params, d.elements())).sum();
    Ok(height(params, m.elements()) < total)
}

/// For closed `b` of size `n` whose width and height match `MΔ_n`, with the
/// width below `s`, returns whether the smallest delta-set containing `b`
/// still has the same width and height.
pub fn containing_delta_predicate(params: CoreParams, b: &BetaSet, n: usize) -> Result<bool> {
    precondition(b.len() == n, "|b| must equal n")?;
    precondition(is_closed(params, b), "b must be closed")?;
    let m = max_delta_with_size(params, n)?;
    let w = width(params, b);
    precondition(w == width(params, m.elements()), "width(b) must equal width(MΔ_n)")?;
    precondition(w < params.s() as usize, "width(b) must be below s")?;
    let h = height(params, b);
    precondition(h == height(params, m.elements()), "height(b) must equal height(MΔ_n)")?;
    let d = smallest_containing_delta(params, b)?;
    Ok(width(params, d.elements()) == w && height(params, d.elements()) == h)
}

/// The delta-set with the least generator that contains `b` as a subset.
///
/// `x ∈ closure({g})` iff `x <= g` and `g - x` is representable, so the
/// scan upward from `max(b)` needs no closures.
pub fn smallest_containing_delta(params: CoreParams, b: &BetaSet) -> Result<DeltaSet> {
    let top = b
        .largest()
        .ok_or_else(|| Error::Precondition("b must be nonempty".into()))?;
    if !is_closed(params, b) {
        return Err(Error::NotClosed(b.to_string()));
    }
    let mut g = top;
    while !b.iter().all(|x| params.is_representable(g - x)) {
        g = g.checked_add(1).ok_or(Error::Overflow)?;
    }
    let d = delta(params, g);
    debug_assert!(b.is_subset_of(d.elements()));
    Ok(d)
}

/// Bounds for [`check_lemmas`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaBounds {
    /// Largest delta generator for the width-gap checks.
    pub gen_bound: u32,
    /// Largest set size for the containing-delta checks.
    pub n_max: usize,
    /// Generators of the delta-set triples stay below this.
    pub triple_bound: u32,
    /// Largest shift for the shift-closure checks over cores.
    pub k_max: u32,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        LemmaBounds { gen_bound: 23, n_max: 8, triple_bound: 40, k_max: 7 }
    }
}

/// Runs every predicate over exhaustive families. Only instances meeting
/// the preconditions are counted; `tallies` records how many per claim.
pub fn check_lemmas(params: CoreParams, bounds: LemmaBounds, limit: usize) -> Result<EnumerationReport> {
    let mut report = EnumerationReport::new(params);
    let run = |report: &mut EnumerationReport, claim: &str, size: usize, outcome: Result<bool>, witness: &dyn Fn() -> Witness| {
        match outcome {
            Ok(true) => {
                report.record(size);
                report.tally(claim);
            }
            Ok(false) => {
                report.record(size);
                report.tally(claim);
                report.violate(claim, witness());
            }
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
        Ok(())
    };

    let cores: Vec<BetaSet> = enumerate_core(params, limit)?.collect();
    for b in &cores {
        for g in &cores {
            for k in 1..=bounds.k_max {
                let outcome = shift_closure_predicate(params, b, g, k);
                run(&mut report, "shift-closure", b.len(), outcome, &|| {
                    Witness::new(b, g, Some(k as usize))
                })?;
            }
        }
    }

    for g in 1..=bounds.gen_bound {
        let d = delta(params, g);
        guard(d.len(), limit)?;
        for b in OrderIdeals::new(d.elements(), &params.steps(), None) {
            let outcome = width_gap_predicate(params, &d, &b);
            run(&mut report, "width-gap", b.len(), outcome, &|| Witness::new(&b, d.elements(), None))?;
        }
    }

    let deltas: Vec<DeltaSet> = (1..bounds.triple_bound).map(|g| delta(params, g)).collect();
    for (i, a) in deltas.iter().enumerate() {
        for b in &deltas[i + 1..] {
            if !a.elements().intersection(b.elements()).is_empty() {
                continue;
            }
            for c in deltas.iter().skip(i + 1).filter(|c| c.generator() > b.generator()) {
                let triple = [a.clone(), b.clone(), c.clone()];
                let n = triple.iter().map(DeltaSet::len).sum();
                let outcome = height_sum_predicate(params, &triple);
                run(&mut report, "height-sum", n, outcome, &|| {
                    let union = a.elements().union(b.elements()).union(c.elements());
                    let bound = max_delta_with_size(params, n)
                        .map(DeltaSet::into_elements)
                        .unwrap_or_else(|_| BetaSet::empty());
                    Witness::new(&union, &bound, Some(n))
                })?;
            }
        }
    }

    guard(bounds.n_max, limit)?;
    for n in 1..=bounds.n_max {
        for b in enumerate_closed_of_size(params, n)? {
            let outcome = containing_delta_predicate(params, &b, n);
            run(&mut report, "containing-delta", n, outcome, &|| {
                let d = smallest_containing_delta(params, &b)
                    .map(DeltaSet::into_elements)
                    .unwrap_or_else(|_| BetaSet::empty());
                Witness::new(&b, &d, Some(n))
            })?;
        }
    }
    Ok(report)
}
