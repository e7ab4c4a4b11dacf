//! Closure, cores, generators and delta-sets for a coprime pair `(s, t)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{closure_under, is_closed_under};
use crate::partition::{BetaSet, Shift};

/// Validated coprime pair `s < t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct CoreParams {
    s: u32,
    t: u32,
    /// Inverse of `t` modulo `s`, used for O(1) representability.
    #[serde(skip)]
    t_inv_mod_s: u32,
}

#[derive(Deserialize)]
struct RawParams {
    s: u32,
    t: u32,
}

impl TryFrom<RawParams> for CoreParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        CoreParams::new(raw.s, raw.t)
    }
}

impl CoreParams {
    /// Largest accepted value of `t`.
    pub const MAX: u32 = 1024;

    pub fn new(s: u32, t: u32) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidParams { s, t, reason });
        if s == 0 {
            return invalid("s must be positive");
        }
        if s >= t {
            return invalid("s must be smaller than t");
        }
        if t > Self::MAX {
            return invalid("t exceeds the supported maximum of 1024");
        }
        if gcd(s, t) != 1 {
            return invalid("s and t must be relatively prime");
        }
        let t_inv_mod_s = (0..s).find(|&k| (k * (t % s)) % s == 1 % s).unwrap_or(0);
        Ok(CoreParams { s, t, t_inv_mod_s })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn steps(&self) -> [u32; 2] {
        [self.s, self.t]
    }

    /// `st - s - t`, the largest integer not of the form `as + bt`.
    pub fn frobenius(&self) -> i64 {
        i64::from(self.s) * i64::from(self.t) - i64::from(self.s) - i64::from(self.t)
    }

    /// Whether `x = as + bt` for some `a, b >= 0` (so 0 is representable).
    pub fn is_representable(&self, x: u32) -> bool {
        // The smallest b with bt ≡ x (mod s) decides it.
        let b = u64::from((x % self.s) * self.t_inv_mod_s % self.s);
        b * u64::from(self.t) <= u64::from(x)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Closure of a single generator. Generator 0 stands for the empty delta-set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDelta")]
pub struct DeltaSet {
    #[serde(flatten)]
    params: CoreParams,
    generator: u32,
    elements: BetaSet,
}

#[derive(Deserialize)]
struct RawDelta {
    s: u32,
    t: u32,
    generator: u32,
    elements: BetaSet,
}

impl TryFrom<RawDelta> for DeltaSet {
    type Error = Error;

    fn try_from(raw: RawDelta) -> Result<Self> {
        let d = delta(CoreParams::new(raw.s, raw.t)?, raw.generator);
        if d.elements != raw.elements {
            return Err(Error::Precondition(format!(
                "elements {} are not the closure of {{{}}}",
                raw.elements, raw.generator
            )));
        }
        Ok(d)
    }
}

impl DeltaSet {
    pub fn params(&self) -> CoreParams {
        self.params
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn elements(&self) -> &BetaSet {
        &self.elements
    }

    pub fn into_elements(self) -> BetaSet {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `{x - as - bt | x ∈ b, a, b >= 0, x > as + bt}`.
pub fn closure(params: CoreParams, b: &BetaSet) -> BetaSet {
    closure_under(b.iter(), &params.steps())
}

/// Closed under subtracting `s` and `t` whenever the result stays positive.
pub fn is_closed(params: CoreParams, b: &BetaSet) -> bool {
    is_closed_under(b, &params.steps())
}

/// The minimal generating set: members `x` with `x + s` and `x + t` absent.
pub fn generators(params: CoreParams, b: &BetaSet) -> Result<BetaSet> {
    if !is_closed(params, b) {
        return Err(Error::NotClosed(b.to_string()));
    }
    let gens = b
        .iter()
        .filter(|&x| !b.contains(x + params.s) && !b.contains(x + params.t))
        .collect();
    Ok(BetaSet::from_sorted_unchecked(gens))
}

/// A beta-set is (s,t)-core iff it is closed and lies inside `β_{s,t}`,
/// i.e. no member is representable as `as + bt`.
pub fn is_core(params: CoreParams, b: &BetaSet) -> bool {
    is_closed(params, b) && b.iter().all(|x| !params.is_representable(x))
}

/// `β_{s,t}`, the closure of `{st - s - t}`.
pub fn maximal_beta(params: CoreParams) -> BetaSet {
    match u32::try_from(params.frobenius()) {
        Ok(top) if top > 0 => closure(params, &BetaSet::from_sorted_unchecked(vec![top])),
        _ => BetaSet::empty(),
    }
}

pub fn delta(params: CoreParams, generator: u32) -> DeltaSet {
    let elements = closure_under([generator], &params.steps());
    DeltaSet { params, generator, elements }
}

/// The delta-set generated by `generator + shift`, or the empty one when
/// the shift pushes the generator to zero or below.
pub fn delta_shift(d: &DeltaSet, shift: i64) -> Result<DeltaSet> {
    let params = d.params;
    let target = i64::from(d.generator) + shift;
    let target = u32::try_from(target.max(0)).map_err(|_| Error::Overflow)?;
    let shifted = delta(params, target);
    if shift < 0 {
        let down = d.elements.subtract(shift.unsigned_abs().min(u64::from(u32::MAX)) as u32);
        assert_eq!(down, shifted.elements, "downward shift of a delta-set");
    } else if shift > 0 {
        let up = d.elements.add(shift as u32)?;
        assert_eq!(closure(params, &up), shifted.elements, "upward shift of a delta-set");
    }
    Ok(shifted)
}

/// `|closure({g})|`, counted as the representable integers in `[0, g)`.
pub fn delta_size(params: CoreParams, generator: u32) -> usize {
    (0..generator).filter(|&y| params.is_representable(y)).count()
}

/// `MΔ_n`: the delta-set with `n` elements and the largest generator.
///
/// Sizes grow by at most one per generator, and grow exactly when `s` or
/// `t` lies in the previous delta-set, i.e. when `g - s` or `g - t` is
/// representable. The scan therefore never builds a closure until the end.
pub fn max_delta_with_size(params: CoreParams, n: usize) -> Result<DeltaSet> {
    if n == 0 {
        return Ok(delta(params, 0));
    }
    let (s, t) = (params.s, params.t);
    let mut generator: u32 = 1;
    let mut size = 1usize;
    loop {
        let grows = (generator >= s && params.is_representable(generator - s))
            || (generator >= t && params.is_representable(generator - t));
        let next = size + usize::from(grows);
        if size == n && next > n {
            return Ok(delta(params, generator));
        }
        size = next;
        generator = generator.checked_add(1).ok_or(Error::Overflow)?;
    }
}

/// Number of residue classes modulo `t` (rows of the bead diagram).
pub fn height(params: CoreParams, b: &BetaSet) -> usize {
    residue_classes(b, params.t)
}

/// Number of residue classes modulo `s` (columns of the bead diagram).
pub fn width(params: CoreParams, b: &BetaSet) -> usize {
    residue_classes(b, params.s)
}

pub(crate) fn residue_classes(b: &BetaSet, modulus: u32) -> usize {
    let mut seen = vec![false; modulus as usize];
    b.iter().for_each(|x| seen[(x % modulus) as usize] = true);
    seen.into_iter().filter(|&v| v).count()
}
