//! Standard and skew forcing rules, closures with traces, and stall checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Which vertices may force.
///
/// Under both rules a vertex `v` forces `u` when `u` is the only neighbour of
/// `v` outside the coloured set. The standard rule additionally requires `v`
/// to be coloured; the skew rule lets any vertex force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForcingRule {
    Standard,
    Skew,
}

impl ForcingRule {
    pub const ALL: [ForcingRule; 2] = [ForcingRule::Standard, ForcingRule::Skew];

    pub fn as_str(self) -> &'static str {
        match self {
            ForcingRule::Standard => "standard",
            ForcingRule::Skew => "skew",
        }
    }

    #[inline]
    fn may_force(self, v: usize, colored: VertexSet) -> bool {
        match self {
            ForcingRule::Standard => colored.contains(v),
            ForcingRule::Skew => true,
        }
    }
}

impl fmt::Display for ForcingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ForcingRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "standard" => Ok(ForcingRule::Standard),
            "skew" => Ok(ForcingRule::Skew),
            _ => Err(Error::MalformedInput(format!(
                "unknown rule `{s}` (expected standard or skew)"
            ))),
        }
    }
}

/// One force: `forcer` colours `forced`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureOutcome {
    pub initial: VertexSet,
    pub final_set: VertexSet,
    pub trace: Vec<Force>,
    pub forced_all: bool,
}

/// The force `v` could perform on `s`, if any.
#[inline]
fn force_of(g: &Graph, s: VertexSet, rule: ForcingRule, v: usize) -> Option<usize> {
    let open = g.neighbors(v) - s;
    (open.len() == 1 && rule.may_force(v, s)).then(|| open.first().unwrap())
}

/// All forces available on `s`, ascending by forcer.
pub fn eligible_forces(g: &Graph, s: VertexSet, rule: ForcingRule) -> Vec<Force> {
    (0..g.n())
        .filter_map(|v| force_of(g, s, rule, v).map(|forced| Force { forcer: v, forced }))
        .collect()
}

pub fn is_stalled(g: &Graph, s: VertexSet, rule: ForcingRule) -> bool {
    (0..g.n()).all(|v| force_of(g, s, rule, v).is_none())
}

/// Applies forces until none is available, always taking the lowest-indexed
/// eligible forcer first. Only vertices next to a newly coloured vertex are
/// re-examined after each step.
pub fn closure(g: &Graph, s: VertexSet, rule: ForcingRule) -> ClosureOutcome {
    let mut trace = Vec::new();
    let final_set = run(g, s, rule, Some(&mut trace));
    ClosureOutcome {
        initial: s,
        final_set,
        trace,
        forced_all: final_set == g.vertices(),
    }
}

/// Final coloured set only; the hot path for exhaustive searches.
#[inline]
pub fn closure_set(g: &Graph, s: VertexSet, rule: ForcingRule) -> VertexSet {
    run(g, s, rule, None)
}

#[inline]
pub fn forces_all(g: &Graph, s: VertexSet, rule: ForcingRule) -> bool {
    closure_set(g, s, rule) == g.vertices()
}

/// Closure under an arbitrary schedule: `choose` picks an index into the
/// currently eligible forces (taken modulo their count) at every step.
pub fn closure_by(
    g: &Graph,
    s: VertexSet,
    rule: ForcingRule,
    mut choose: impl FnMut(&[Force]) -> usize,
) -> ClosureOutcome {
    let mut cur = s;
    let mut trace = Vec::new();
    loop {
        let options = eligible_forces(g, cur, rule);
        if options.is_empty() {
            break;
        }
        let f = options[choose(&options) % options.len()];
        cur.insert(f.forced);
        trace.push(f);
    }
    ClosureOutcome {
        initial: s,
        final_set: cur,
        trace,
        forced_all: cur == g.vertices(),
    }
}

fn run(
    g: &Graph,
    mut s: VertexSet,
    rule: ForcingRule,
    mut trace: Option<&mut Vec<Force>>,
) -> VertexSet {
    let mut ready = VertexSet::EMPTY;
    for v in 0..g.n() {
        if force_of(g, s, rule, v).is_some() {
            ready.insert(v);
        }
    }
    while let Some(v) = ready.first() {
        ready.remove(v);
        let Some(u) = force_of(g, s, rule, v) else {
            continue;
        };
        s.insert(u);
        if let Some(t) = trace.as_deref_mut() {
            t.push(Force {
                forcer: v,
                forced: u,
            });
        }
        // u's neighbours lost an open neighbour; u itself may now force (standard rule)
        for w in g.neighbors(u).with(u) {
            if force_of(g, s, rule, w).is_some() {
                ready.insert(w);
            } else {
                ready.remove(w);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    /// C5 on 0..5 with chord {0,2}.
    pub(crate) fn c5_chord() -> Graph {
        Graph::cycle(5).with_edge(0, 2).unwrap()
    }

    #[test]
    fn eligible_examples() {
        let p3 = Graph::path(3);
        assert!(eligible_forces(&p3, vs(&[1]), ForcingRule::Skew).is_empty());
        assert_eq!(
            eligible_forces(&p3, VertexSet::EMPTY, ForcingRule::Skew),
            vec![
                Force {
                    forcer: 0,
                    forced: 1
                },
                Force {
                    forcer: 2,
                    forced: 1
                }
            ]
        );
        let k4 = Graph::complete(4);
        assert!(eligible_forces(&k4, vs(&[0, 1]), ForcingRule::Standard).is_empty());
    }

    #[test]
    fn k4_pairs_stall_under_standard_by_enumeration() {
        let k4 = Graph::complete(4);
        for bits in 0u64..16 {
            let s = VertexSet::from_bits(bits);
            let stalled = is_stalled(&k4, s, ForcingRule::Standard);
            // brute force: a coloured vertex with exactly one uncoloured neighbour
            let can = s.iter().any(|v| (k4.neighbors(v) - s).len() == 1);
            assert_eq!(stalled, !can);
            if s.len() == 2 {
                assert!(stalled);
            }
        }
    }

    #[test]
    fn closure_examples() {
        let c5 = Graph::cycle(5);
        let out = closure(&c5, vs(&[0]), ForcingRule::Skew);
        assert!(out.forced_all);
        assert_eq!(out.final_set, c5.vertices());

        let out = closure(&c5, VertexSet::EMPTY, ForcingRule::Skew);
        assert_eq!(out.final_set, VertexSet::EMPTY);
        assert!(out.trace.is_empty());
        assert!(!out.forced_all);

        let k4 = Graph::complete(4);
        assert!(closure(&k4, vs(&[0, 1]), ForcingRule::Skew).forced_all);
    }

    #[test]
    fn closure_trace_is_lowest_forcer_first() {
        // P3 from nothing under skew: 0 forces the middle, which then stalls
        let out = closure(&Graph::path(3), VertexSet::EMPTY, ForcingRule::Skew);
        assert_eq!(
            out.trace,
            vec![Force {
                forcer: 0,
                forced: 1
            }]
        );
        assert_eq!(out.final_set, vs(&[1]));
        let out = closure(&Graph::path(5), vs(&[0]), ForcingRule::Standard);
        let forcers: Vec<_> = out.trace.iter().map(|f| f.forcer).collect();
        assert_eq!(forcers, vec![0, 1, 2, 3]);
    }

    #[test]
    fn scheduled_closure_reaches_the_same_set() {
        let g = c5_chord();
        for pick in 0..4 {
            let a = closure_by(&g, vs(&[3]), ForcingRule::Skew, |_| pick);
            assert_eq!(
                a.final_set,
                closure(&g, vs(&[3]), ForcingRule::Skew).final_set
            );
        }
        let last = closure_by(&Graph::path(3), VertexSet::EMPTY, ForcingRule::Skew, |o| {
            o.len() - 1
        });
        assert_eq!(
            last.trace,
            vec![Force {
                forcer: 2,
                forced: 1
            }]
        );
    }

    #[test]
    fn stall_examples() {
        assert!(is_stalled(&Graph::path(3), vs(&[1]), ForcingRule::Skew));
        assert!(is_stalled(&Graph::complete(4), vs(&[0]), ForcingRule::Skew));
        // with S = {1} every vertex has zero or at least two uncoloured neighbours
        let g = c5_chord();
        let s = vs(&[1]);
        for v in 0..5 {
            assert_ne!((g.neighbors(v) - s).len(), 1, "vertex {v}");
        }
        assert!(is_stalled(&g, s, ForcingRule::Skew));
    }

    #[test]
    fn rule_parsing() {
        assert_eq!("skew".parse::<ForcingRule>().unwrap(), ForcingRule::Skew);
        assert_eq!(
            "standard".parse::<ForcingRule>().unwrap(),
            ForcingRule::Standard
        );
        assert!("psd".parse::<ForcingRule>().is_err());
    }
}
