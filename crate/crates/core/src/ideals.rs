//! Closure and order-ideal enumeration under a fixed list of downward steps.
//!
//! A set is closed under steps `d_1, ..., d_k` when `x - d_i` belongs to it
//! for every member `x > d_i`. Closed subsets of a closed universe are the
//! order ideals of the poset whose covers are `x -> x - d_i`.

use crate::partition::BetaSet;

/// Smallest superset of `seeds` closed under subtracting any step.
pub(crate) fn closure_under<I>(seeds: I, steps: &[u32]) -> BetaSet
where
    I: IntoIterator<Item = u32>,
{
    let seeds: Vec<u32> = seeds.into_iter().filter(|&x| x > 0).collect();
    let Some(&top) = seeds.iter().max() else {
        return BetaSet::empty();
    };
    let mut member = vec![false; top as usize + 1];
    let mut queue = seeds;
    while let Some(x) = queue.pop() {
        if member[x as usize] {
            continue;
        }
        member[x as usize] = true;
        for &d in steps {
            if x > d && !member[(x - d) as usize] {
                queue.push(x - d);
            }
        }
    }
    BetaSet::from_membership(&member)
}

pub(crate) fn is_closed_under(b: &BetaSet, steps: &[u32]) -> bool {
    b.iter()
        .all(|x| steps.iter().all(|&d| x <= d || b.contains(x - d)))
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    index: usize,
    phase: Phase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Phase {
    Fresh,
    Excluded,
    Included,
    Done,
}

/// Streams every closed subset of a closed universe exactly once.
///
/// The walk visits universe elements in increasing order and decides
/// exclude-then-include for each; an element may be included only when all
/// of its lower covers already are. Every partial choice extends to a closed
/// set, so without a size target there are no dead branches.
#[derive(Clone, Debug)]
pub struct OrderIdeals {
    universe: Vec<u32>,
    steps: Vec<u32>,
    member: Vec<bool>,
    chosen: Vec<u32>,
    stack: Vec<Frame>,
    target: Option<usize>,
}

impl OrderIdeals {
    pub(crate) fn new(universe: &BetaSet, steps: &[u32], target: Option<usize>) -> Self {
        let universe: Vec<u32> = universe.iter().rev().collect();
        let top = universe.last().copied().unwrap_or(0);
        let feasible = target.is_none_or(|n| n <= universe.len());
        OrderIdeals {
            universe,
            steps: steps.to_vec(),
            member: vec![false; top as usize + 1],
            chosen: Vec::new(),
            stack: if feasible {
                vec![Frame { index: 0, phase: Phase::Fresh }]
            } else {
                Vec::new()
            },
            target,
        }
    }

    fn includable(&self, x: u32) -> bool {
        self.steps
            .iter()
            .all(|&d| x <= d || self.member.get((x - d) as usize).copied().unwrap_or(false))
    }

    fn at_leaf(&self, index: usize) -> bool {
        index == self.universe.len() || self.target == Some(self.chosen.len())
    }

    fn current(&self) -> BetaSet {
        BetaSet::from_sorted_unchecked(self.chosen.iter().rev().copied().collect())
    }
}

impl Iterator for OrderIdeals {
    type Item = BetaSet;

    fn next(&mut self) -> Option<BetaSet> {
        while let Some(&Frame { index, phase }) = self.stack.last() {
            if phase == Phase::Fresh && self.at_leaf(index) {
                self.stack.pop();
                if self.target.is_none_or(|n| n == self.chosen.len()) {
                    return Some(self.current());
                }
                continue;
            }
            let remaining = self.universe.len() - index - 1;
            let x = self.universe[index];
            let pos = self.stack.len() - 1;
            let next = match phase {
                Phase::Fresh => {
                    let reachable = self
                        .target
                        .is_none_or(|n| self.chosen.len() + remaining >= n);
                    if reachable {
                        self.stack.push(Frame { index: index + 1, phase: Phase::Fresh });
                    }
                    Phase::Excluded
                }
                Phase::Excluded if self.includable(x) => {
                    self.member[x as usize] = true;
                    self.chosen.push(x);
                    self.stack.push(Frame { index: index + 1, phase: Phase::Fresh });
                    Phase::Included
                }
                Phase::Excluded => Phase::Done,
                Phase::Included => {
                    self.member[x as usize] = false;
                    self.chosen.pop();
                    Phase::Done
                }
                Phase::Done => {
                    self.stack.pop();
                    continue;
                }
            };
            self.stack[pos].phase = next;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(v: &[u32]) -> BetaSet {
        BetaSet::from_unsorted(v.iter().copied()).unwrap()
    }

    #[test]
    fn closure_of_nine_under_five_seven() {
        assert_eq!(closure_under([9], &[5, 7]), beta(&[9, 4, 2]));
        assert_eq!(closure_under([], &[5, 7]), BetaSet::empty());
        assert_eq!(closure_under([0, 3], &[5, 7]), beta(&[3]));
    }

    #[test]
    fn ideals_of_beta_three_four() {
        let all: Vec<BetaSet> = OrderIdeals::new(&beta(&[5, 2, 1]), &[3, 4], None).collect();
        assert_eq!(
            all,
            vec![
                BetaSet::empty(),
                beta(&[2]),
                beta(&[1]),
                beta(&[2, 1]),
                beta(&[5, 2, 1]),
            ]
        );
    }

    #[test]
    fn ideals_with_size_target() {
        let universe = beta(&[5, 2, 1]);
        let pairs: Vec<BetaSet> = OrderIdeals::new(&universe, &[3, 4], Some(2)).collect();
        assert_eq!(pairs, vec![beta(&[2, 1])]);
        assert_eq!(OrderIdeals::new(&universe, &[3, 4], Some(4)).count(), 0);
        assert_eq!(
            OrderIdeals::new(&BetaSet::empty(), &[3, 4], Some(0)).collect::<Vec<_>>(),
            vec![BetaSet::empty()]
        );
    }
}
