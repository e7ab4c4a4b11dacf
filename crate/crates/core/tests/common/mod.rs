//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the library's algorithms: hooks are counted on
//! the Ferrers diagram, closed sets are found by filtering every subset,
//! and gap sets come from Apéry sets instead of a representability table.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Hook lengths `arm + leg + 1` of every box, sorted descending.
pub fn ferrers_hooks(parts: &[u32]) -> Vec<u32> {
    let mut hooks = Vec::new();
    for (row, &len) in parts.iter().enumerate() {
        for col in 0..len {
            let arm = len - col - 1;
            let leg = parts[row + 1..].iter().filter(|&&p| p > col).count() as u32;
            hooks.push(arm + leg + 1);
        }
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    hooks
}

/// Partition of a descending beta-set: `b_i - (n - i)` with 1-based `i`.
pub fn partition_of(beta: &[u32]) -> Vec<u32> {
    let n = beta.len();
    beta.iter().enumerate().map(|(i, &x)| x - (n - 1 - i) as u32).collect()
}

/// First-column hook lengths of a partition.
pub fn first_column_hooks(parts: &[u32]) -> Vec<u32> {
    let hooks_of_row = |row: usize| parts[row] + (parts.len() - row - 1) as u32;
    (0..parts.len()).map(hooks_of_row).collect()
}

/// Containment of Ferrers diagrams, compared partition against partition.
pub fn partition_leq(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn beta_precedes(a: &[u32], b: &[u32]) -> bool {
    partition_leq(&partition_of(a), &partition_of(b))
}

pub fn is_closed(set: &BTreeSet<u32>, steps: &[u32]) -> bool {
    set.iter().all(|&x| steps.iter().all(|&d| x <= d || set.contains(&(x - d))))
}

/// Every subset of `universe` that is closed under `steps`, as descending vectors.
pub fn closed_subsets(universe: &[u32], steps: &[u32]) -> Vec<Vec<u32>> {
    assert!(universe.len() <= 20, "brute force over 2^{} subsets", universe.len());
    let mut out = Vec::new();
    for mask in 0u32..(1 << universe.len()) {
        let set: BTreeSet<u32> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        if is_closed(&set, steps) {
            out.push(set.into_iter().rev().collect());
        }
    }
    out.sort();
    out
}

/// Repeats `x -> x - d` until nothing new appears.
pub fn fixed_point_closure(seed: &[u32], steps: &[u32]) -> Vec<u32> {
    let mut set: BTreeSet<u32> = seed.iter().copied().filter(|&x| x > 0).collect();
    loop {
        let extra: Vec<u32> = set
            .iter()
            .flat_map(|&x| steps.iter().filter(move |&&d| x > d).map(move |&d| x - d))
            .filter(|y| !set.contains(y))
            .collect();
        if extra.is_empty() {
            return set.into_iter().rev().collect();
        }
        set.extend(extra);
    }
}

pub fn representable(x: u32, s: u32, t: u32) -> bool {
    (0..=x / t).any(|b| (x - b * t) % s == 0)
}

/// Gaps of the semigroup generated by `ts`, descending, via the Apéry set
/// of the smallest generator: for each residue `r` the least representable
/// `w_r`, found by relaxing `w_{(r + t) mod m} <= w_r + t` to a fixed point.
pub fn apery_gaps(ts: &[u32]) -> Vec<u32> {
    let m = *ts.iter().min().unwrap() as usize;
    let mut w = vec![u64::MAX; m];
    w[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..m {
            if w[r] == u64::MAX {
                continue;
            }
            for &t in ts {
                let next = (r + t as usize) % m;
                if w[r] + u64::from(t) < w[next] {
                    w[next] = w[r] + u64::from(t);
                    changed = true;
                }
            }
        }
    }
    let mut gaps: Vec<u32> = (0..m)
        .flat_map(|r| {
            let top = w[r];
            (0..)
                .map(move |q| (r + q * m) as u64)
                .take_while(move |&x| x < top)
                .filter(|&x| x > 0)
                .map(|x| x as u32)
        })
        .collect();
    gaps.sort_unstable_by(|a, b| b.cmp(a));
    gaps
}

/// Coprime pairs `s < t` whose maximal core has at most `limit` elements.
pub fn small_pairs(limit: usize) -> Vec<(u32, u32)> {
    let gcd = |mut a: u32, mut b: u32| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut pairs = Vec::new();
    for s in 2..=limit as u32 + 1 {
        for t in s + 1..=2 * limit as u32 + 2 {
            if gcd(s, t) == 1 && ((s - 1) * (t - 1) / 2) as usize <= limit {
                pairs.push((s, t));
            }
        }
    }
    pairs
}
