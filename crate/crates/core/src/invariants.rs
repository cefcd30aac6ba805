//! Exact forcing numbers and failed forcing numbers.
//!
//! A set is stalled when no force is available. Its complement is then a
//! *fort*: under the standard rule no vertex outside the fort has exactly one
//! neighbour inside it, and under the skew rule no vertex at all does. The
//! largest proper stalled set is the complement of the smallest fort, so the
//! failed forcing number is found by an ascending fort search rather than a
//! descending sweep over stalled sets.

use serde::{Deserialize, Serialize};

use crate::error::{check_size, Result};
use crate::forcing::{closure_set, forces_all, is_stalled, ForcingRule};
use crate::graph::{Graph, VertexSet};

/// Largest graph the exhaustive searches accept.
pub const MAX_EXHAUSTIVE: usize = 24;

/// Integer form of "every subset forces the whole graph".
pub const NO_FAILED_SET: i64 = -1;

/// A smallest fort under one rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FortRecord {
    pub rule: ForcingRule,
    pub members: VertexSet,
    pub size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub z_standard: usize,
    pub z_skew: usize,
    pub f_standard: Option<usize>,
    pub f_skew: Option<usize>,
    /// `n - f_standard`.
    pub zero_blocking: Option<usize>,
}

/// `-1` for [`None`], the value otherwise.
pub fn failed_as_i64(f: Option<usize>) -> i64 {
    f.map_or(NO_FAILED_SET, |v| v as i64)
}

#[inline]
fn fort_violation(g: &Graph, c: VertexSet, rule: ForcingRule, w: usize) -> bool {
    let relevant = match rule {
        ForcingRule::Standard => !c.contains(w),
        ForcingRule::Skew => true,
    };
    relevant && (g.neighbors(w) & c).len() == 1
}

pub fn is_fort(g: &Graph, c: VertexSet, rule: ForcingRule) -> bool {
    !c.is_empty() && c.is_subset(g.vertices()) && (0..g.n()).all(|w| !fort_violation(g, c, rule, w))
}

struct FortSearch<'a> {
    g: &'a Graph,
    rule: ForcingRule,
    /// `settle[w]`: the largest vertex whose membership affects whether `w`
    /// violates the fort condition.
    settle: Vec<usize>,
}

impl FortSearch<'_> {
    /// Depth-first over k-subsets in lexicographic order of sorted members.
    /// `next` is the smallest undecided vertex; vertices whose whole relevant
    /// neighbourhood is decided are checked eagerly.
    fn search(&self, chosen: VertexSet, next: usize, remaining: usize) -> Option<VertexSet> {
        let n = self.g.n();
        for w in 0..n {
            if self.settle[w] < next && fort_violation(self.g, chosen, self.rule, w) {
                return None;
            }
        }
        if remaining == 0 {
            return is_fort(self.g, chosen, self.rule).then_some(chosen);
        }
        for v in next..=n - remaining {
            if let Some(found) = self.search(chosen.with(v), v + 1, remaining - 1) {
                return Some(found);
            }
        }
        None
    }
}

/// The smallest nonempty fort, ties broken by the lexicographically smallest
/// sorted member list. `None` when the graph has no fort at all.
pub fn min_fort(g: &Graph, rule: ForcingRule) -> Result<Option<FortRecord>> {
    check_size("exhaustive fort search", g.n(), MAX_EXHAUSTIVE)?;
    let settle = (0..g.n())
        .map(|w| {
            let hood = match rule {
                ForcingRule::Standard => g.neighbors(w).with(w),
                ForcingRule::Skew => g.neighbors(w),
            };
            hood.last().unwrap_or(0)
        })
        .collect();
    let search = FortSearch { g, rule, settle };
    for k in 1..=g.n() {
        if let Some(members) = search.search(VertexSet::EMPTY, 0, k) {
            debug_assert!(is_fort(g, members, rule));
            return Ok(Some(FortRecord {
                rule,
                members,
                size: k,
            }));
        }
    }
    Ok(None)
}

/// Largest size of a set whose closure is not the whole vertex set;
/// `None` when every set, including the empty one, forces everything.
pub fn failed_number(g: &Graph, rule: ForcingRule) -> Result<Option<usize>> {
    Ok(min_fort(g, rule)?.map(|f| g.n() - f.size))
}

/// A largest stalled proper subset (complement of [`min_fort`]).
pub fn max_stalled_witness(g: &Graph, rule: ForcingRule) -> Result<Option<VertexSet>> {
    Ok(min_fort(g, rule)?.map(|f| {
        let w = f.members.complement(g.n());
        debug_assert!(is_stalled(g, w, rule));
        w
    }))
}

/// Failed number straight from the definition: the largest `|S|` with
/// `closure(S) != V`, sweeping subsets from large to small. Exponential in
/// `n` with no pruning; kept as the ground truth for the fort search.
pub fn failed_number_direct(g: &Graph, rule: ForcingRule) -> Result<Option<usize>> {
    check_size("direct failed-set sweep", g.n(), 20)?;
    let n = g.n();
    let mut best: Option<usize> = None;
    for bits in 0u64..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        if best.is_some_and(|b| s.len() <= b) {
            continue;
        }
        if closure_set(g, s, rule) != g.vertices() {
            best = Some(s.len());
        }
    }
    Ok(best)
}

fn first_forcing_subset(
    g: &Graph,
    rule: ForcingRule,
    chosen: VertexSet,
    next: usize,
    remaining: usize,
) -> Option<VertexSet> {
    if remaining == 0 {
        return forces_all(g, chosen, rule).then_some(chosen);
    }
    (next..=g.n() - remaining)
        .find_map(|v| first_forcing_subset(g, rule, chosen.with(v), v + 1, remaining - 1))
}

/// A smallest forcing set, lexicographically first among those of minimum size.
pub fn min_forcing_set(g: &Graph, rule: ForcingRule) -> Result<VertexSet> {
    check_size("exhaustive forcing search", g.n(), MAX_EXHAUSTIVE)?;
    for k in 0..=g.n() {
        if let Some(s) = first_forcing_subset(g, rule, VertexSet::EMPTY, 0, k) {
            return Ok(s);
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Minimum size of a forcing set (`Z` or `Z⁻`).
pub fn forcing_number(g: &Graph, rule: ForcingRule) -> Result<usize> {
    Ok(min_forcing_set(g, rule)?.len())
}

/// Vertices `v` for which `{v}` is stalled.
pub fn singleton_stalled_vertices(g: &Graph, rule: ForcingRule) -> VertexSet {
    (0..g.n())
        .filter(|&v| is_stalled(g, VertexSet::singleton(v), rule))
        .collect()
}

pub fn invariants(g: &Graph) -> Result<InvariantBundle> {
    let f_standard = failed_number(g, ForcingRule::Standard)?;
    Ok(InvariantBundle {
        z_standard: forcing_number(g, ForcingRule::Standard)?,
        z_skew: forcing_number(g, ForcingRule::Skew)?,
        f_standard,
        f_skew: failed_number(g, ForcingRule::Skew)?,
        zero_blocking: f_standard.map(|f| g.n() - f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use ForcingRule::{Skew, Standard};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn fort_examples() {
        let k4 = Graph::complete(4);
        assert!(is_fort(&k4, vs(&[0, 1, 2]), Skew));
        assert!(!is_fort(&k4, vs(&[0]), Skew));
        assert!(is_fort(&Graph::path(3), vs(&[0, 2]), Skew));
        assert!(!is_fort(&k4, VertexSet::EMPTY, Skew));
    }

    #[test]
    fn min_fort_examples() {
        let f = min_fort(&Graph::complete(4), Skew).unwrap().unwrap();
        assert_eq!((f.size, f.members), (3, vs(&[0, 1, 2])));
        let f = min_fort(&Graph::cycle(5), Skew).unwrap().unwrap();
        assert_eq!((f.size, f.members), (5, VertexSet::full(5)));
        let f = min_fort(&Graph::path(3), Skew).unwrap().unwrap();
        assert_eq!((f.size, f.members), (2, vs(&[0, 2])));
        assert_eq!(min_fort(&Graph::path(2), Skew).unwrap(), None);
        assert_eq!(min_fort(&Graph::empty(0), Standard).unwrap(), None);
    }

    #[test]
    fn min_fort_matches_exhaustive_listing() {
        // brute-force every nonempty subset of K4, C5, P3
        for g in [Graph::complete(4), Graph::cycle(5), Graph::path(3)] {
            for rule in ForcingRule::ALL {
                let mut best: Option<VertexSet> = None;
                for bits in 1u64..(1 << g.n()) {
                    let c = VertexSet::from_bits(bits);
                    let ok = (0..g.n()).all(|w| {
                        let relevant = rule == Skew || !c.contains(w);
                        !relevant || (g.neighbors(w) & c).len() != 1
                    });
                    if ok && best.is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
                let got = min_fort(&g, rule).unwrap().map(|f| f.size);
                assert_eq!(got, best.map(|b| b.len()), "{g:?} {rule}");
            }
        }
    }

    #[test]
    fn failed_number_examples() {
        assert_eq!(failed_number(&Graph::path(3), Skew).unwrap(), Some(1));
        assert_eq!(failed_number(&Graph::complete(4), Skew).unwrap(), Some(1));
        assert_eq!(failed_number(&Graph::empty(2), Skew).unwrap(), Some(1));
        assert_eq!(
            failed_number(&Graph::complete(4), Standard).unwrap(),
            Some(2)
        );
        assert_eq!(failed_number(&Graph::path(2), Skew).unwrap(), None);
        assert_eq!(
            failed_as_i64(failed_number(&Graph::path(2), Skew).unwrap()),
            -1
        );
        // C7 plus the chord {0,4} closes the 5-cycle 0-1-2-3-4
        let g = Graph::cycle(7).with_edge(0, 4).unwrap();
        assert_eq!(failed_number(&g, Skew).unwrap(), Some(2));
    }

    #[test]
    fn forcing_number_examples() {
        assert_eq!(forcing_number(&Graph::path(5), Standard).unwrap(), 1);
        assert_eq!(forcing_number(&Graph::complete(4), Standard).unwrap(), 3);
        assert_eq!(forcing_number(&Graph::cycle(5), Skew).unwrap(), 1);
        assert_eq!(forcing_number(&Graph::path(2), Skew).unwrap(), 0);
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_stalled_vertices(&Graph::path(3), Skew), vs(&[1]));
        assert_eq!(
            singleton_stalled_vertices(&Graph::complete(4), Skew),
            VertexSet::full(4)
        );
        let g = Graph::cycle(5).with_edge(0, 2).unwrap();
        assert_eq!(singleton_stalled_vertices(&g, Skew), vs(&[1]));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            max_stalled_witness(&Graph::path(3), Skew).unwrap(),
            Some(vs(&[1]))
        );
        let w = max_stalled_witness(&Graph::cycle(4), Skew)
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 2);
        let [a, b] = w.to_vec()[..] else { panic!() };
        assert!(!Graph::cycle(4).has_edge(a, b), "opposite vertices");
        let w = max_stalled_witness(&Graph::complete(4), Skew)
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn direct_sweep_agrees_on_fixtures() {
        for g in [
            Graph::path(3),
            Graph::complete(4),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::star(3),
            Graph::empty(2),
            Graph::path(2),
        ] {
            for rule in ForcingRule::ALL {
                assert_eq!(
                    failed_number(&g, rule).unwrap(),
                    failed_number_direct(&g, rule).unwrap(),
                    "{g:?} {rule}"
                );
            }
        }
    }

    #[test]
    fn size_limits() {
        let g = Graph::empty(25);
        assert!(matches!(
            min_fort(&g, Skew),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(forcing_number(&g, Skew).is_err());
    }

    #[test]
    fn bundle() {
        let b = invariants(&Graph::complete(4)).unwrap();
        assert_eq!(b.f_skew, Some(1));
        assert_eq!(b.f_standard, Some(2));
        assert_eq!(b.z_standard, 3);
        assert_eq!(b.zero_blocking, Some(2));
        let b = invariants(&Graph::path(3)).unwrap();
        assert_eq!(b.zero_blocking, Some(3 - b.f_standard.unwrap()));
    }
}
