//! Cores for a tuple `T = (t_1, ..., t_n)` of pairwise coprime integers.
//!
//! A beta-set is T-core when it is closed under subtracting every `t_i`
//! and lies inside `β_T`, the gaps of the numerical semigroup generated by
//! `T`. With more than two entries there can be several maximal T-cores.

use serde::{Deserialize, Serialize};

use crate::closure::{gcd, max_delta_with_size, closure, width, CoreParams};
use crate::error::{Error, Result};
use crate::ideals::{is_closed_under, OrderIdeals};
use crate::partition::{BetaSet, Partition, PartitionOrder, Shift};
use crate::verify::{enumerate_closed_of_size, EnumerationReport, Witness};

/// Sorted, pairwise coprime tuple with at least two entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTParams")]
pub struct TParams {
    ts: Vec<u32>,
}

#[derive(Deserialize)]
struct RawTParams {
    ts: Vec<u32>,
}

impl TryFrom<RawTParams> for TParams {
    type Error = Error;

    fn try_from(raw: RawTParams) -> Result<Self> {
        TParams::new(raw.ts)
    }
}

impl TParams {
    /// Accepts the entries in any order.
    pub fn new(mut ts: Vec<u32>) -> Result<Self> {
        ts.sort_unstable();
        let invalid = |ts: &[u32], reason| {
            Err(Error::InvalidTParams { ts: ts.to_vec(), reason })
        };
        if ts.len() < 2 {
            return invalid(&ts, "at least two entries are required");
        }
        if ts[0] == 0 {
            return invalid(&ts, "entries must be positive");
        }
        if ts.windows(2).any(|w| w[0] == w[1]) {
            return invalid(&ts, "entries must be distinct");
        }
        if ts.last().is_some_and(|&t| t > CoreParams::MAX) {
            return invalid(&ts, "entries exceed the supported maximum of 1024");
        }
        let coprime = ts
            .iter()
            .enumerate()
            .all(|(i, &a)| ts[i + 1..].iter().all(|&b| gcd(a, b) == 1));
        if !coprime {
            return invalid(&ts, "entries must be pairwise relatively prime");
        }
        Ok(TParams { ts })
    }

    pub fn ts(&self) -> &[u32] {
        &self.ts
    }
}

impl From<CoreParams> for TParams {
    fn from(p: CoreParams) -> Self {
        TParams { ts: vec![p.s(), p.t()] }
    }
}

/// Positive integers that are not non-negative combinations of the entries.
/// Every gap is at most `(t_1 - 1)(t_n - 1)`.
pub fn beta_t(params: &TParams) -> BetaSet {
    let first = params.ts[0] as usize;
    let last = *params.ts.last().expect("at least two entries") as usize;
    let bound = (first - 1) * (last - 1);
    let mut representable = vec![false; bound + 1];
    representable[0] = true;
    for x in 1..=bound {
        representable[x] = params
            .ts
            .iter()
            .any(|&t| x >= t as usize && representable[x - t as usize]);
    }
    let gaps = (1..=bound).rev().filter(|&x| !representable[x]).map(|x| x as u32);
    BetaSet::from_sorted_unchecked(gaps.collect())
}

pub fn is_t_closed(params: &TParams, b: &BetaSet) -> bool {
    is_closed_under(b, &params.ts)
}

pub fn is_t_core(params: &TParams, b: &BetaSet) -> bool {
    is_t_closed(params, b) && b.is_subset_of(&beta_t(params))
}

/// Every T-core beta-set, each once. Fails when `|β_T|` exceeds `limit`.
pub fn enumerate_t_core(params: &TParams, limit: usize) -> Result<OrderIdeals> {
    let universe = beta_t(params);
    if universe.len() > limit {
        return Err(Error::GuardExceeded { size: universe.len(), limit });
    }
    Ok(OrderIdeals::new(&universe, &params.ts, None))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSetReport {
    pub ts: Vec<u32>,
    pub maximal_elements: Vec<MaximalElement>,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalElement {
    pub beta: BetaSet,
    pub partition: Partition,
}

/// The ≺-maximal T-cores, largest set first.
pub fn maximal_elements(params: &TParams, limit: usize) -> Result<MaximalSetReport> {
    let all: Vec<BetaSet> = enumerate_t_core(params, limit)?.collect();
    let mut maxima: Vec<BetaSet> = all
        .iter()
        .filter(|b| !all.iter().any(|c| c != *b && b.contained_in(c)))
        .cloned()
        .collect();
    maxima.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
    debug_assert!(all.iter().all(|b| maxima.iter().any(|m| b.contained_in(m))));
    let maximal_elements = maxima
        .into_iter()
        .map(|beta| MaximalElement { partition: beta.to_partition(), beta })
        .collect::<Vec<_>>();
    Ok(MaximalSetReport {
        ts: params.ts.clone(),
        unique: maximal_elements.len() == 1,
        maximal_elements,
    })
}

pub const OPEN_CONFIRMED: &str = "OPEN-CONFIRMED";
pub const OPEN_REFUTED: &str = "OPEN-REFUTED";

/// Tests the conjectured sharper bound `b ≺ closure(MΔ_n + (s - width(b)))`
/// for every closed `b` with `1 <= |b| = n <= n_max`; a zero shift means
/// `MΔ_n` itself.
///
/// The statement is open, so failures are findings rather than errors: the
/// report's `status` is [`OPEN_REFUTED`] when any set fails and
/// [`OPEN_CONFIRMED`] otherwise. Zero-shift cases are tallied separately.
pub fn conjecture_error_term(params: CoreParams, n_max: usize, limit: usize) -> Result<EnumerationReport> {
    if n_max > limit {
        return Err(Error::GuardExceeded { size: n_max, limit });
    }
    let s = params.s() as usize;
    let mut report = EnumerationReport::new(params);
    for n in 1..=n_max {
        let m = max_delta_with_size(params, n)?;
        for b in enumerate_closed_of_size(params, n)? {
            report.record(n);
            let shift = s - width(params, &b);
            let bound = if shift == 0 {
                m.elements().clone()
            } else {
                closure(params, &m.elements().add(shift as u32)?)
            };
            let holds = b.contained_in(&bound);
            if shift == 0 {
                report.tally("zero-shift");
                if !holds {
                    report.tally("zero-shift-refuted");
                }
            }
            if !holds {
                report.violate("error-term", Witness::new(&b, &bound, Some(n)));
            }
        }
    }
    report.status = Some(if report.passed() { OPEN_CONFIRMED } else { OPEN_REFUTED }.to_string());
    Ok(report)
}
