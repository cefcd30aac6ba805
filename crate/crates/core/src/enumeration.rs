//! Canonical labels and isomorph-free enumeration of small graphs.
//!
//! The canonical label of a graph is the smallest graph6 bit string among the
//! relabelings reached by an individualization-refinement search: vertices are
//! coloured by iterated neighbour-colour refinement, the first non-singleton
//! colour class is split by individualizing each of its members in turn, and
//! every discrete colouring found this way is a candidate ordering. Members of
//! a class that are twins (same neighbourhood apart from each other) give
//! identical subtrees, so only one of them is tried.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_size, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;

pub const MAX_CANONICAL: usize = 10;
/// Largest order for routine sweeps.
pub const MAX_ENUMERATION: usize = 8;
/// Largest order accepted by [`enumerate_graphs_long`].
pub const MAX_ENUMERATION_LONG: usize = 9;

/// Upper-triangle bit string of the canonically relabelled graph, packed most
/// significant bit first so that numeric order is string order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalLabel {
    n: u8,
    bits: u128,
}

impl CanonicalLabel {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).expect("label decodes to a valid graph")
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(&self.to_graph()).expect("canonical graphs are small")
    }
}

fn pack(g: &Graph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    for j in 1..order.len() {
        let row = g.neighbors(order[j]);
        for &vi in &order[..j] {
            bits = bits << 1 | row.contains(vi) as u128;
        }
    }
    bits
}

/// Refines `colors` (values are ranks `0..k`) until stable. Vertices are
/// re-ranked by (colour, sorted neighbour colours).
fn refine(g: &Graph, colors: &mut [u8]) {
    let n = g.n();
    let mut classes = distinct(colors);
    loop {
        let mut keyed: Vec<(u8, Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let mut sig: Vec<u8> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                sig.sort_unstable();
                (colors[v], sig, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                rank += 1;
            }
            colors[keyed[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn distinct(colors: &[u8]) -> usize {
    let mut seen = [false; 256];
    colors
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
        .count()
}

fn search(g: &Graph, colors: &mut [u8], best: &mut Option<u128>) {
    refine(g, colors);
    let n = g.n();
    let mut counts = [0usize; 256];
    for &c in colors.iter() {
        counts[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let bits = pack(g, &order);
        if best.is_none_or(|b| bits < b) {
            *best = Some(bits);
        }
        return;
    };
    let cell: VertexSet = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried = Vec::<usize>::new();
    for u in cell {
        let twin = tried
            .iter()
            .any(|&t| g.neighbors(t).without(u) == g.neighbors(u).without(t));
        if twin {
            continue;
        }
        tried.push(u);
        // u keeps the cell's rank; the rest of the cell moves just above it
        let mut child: Vec<u8> = colors
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                let c = c as usize;
                let r = if c < target || v == u { c } else { c + 1 };
                r as u8
            })
            .collect();
        search(g, &mut child, best);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    check_size("canonical labelling", g.n(), MAX_CANONICAL)?;
    Ok(canonical_unchecked(g))
}

fn canonical_unchecked(g: &Graph) -> CanonicalLabel {
    let mut colors = vec![0u8; g.n()];
    let mut best = None;
    search(g, &mut colors, &mut best);
    CanonicalLabel {
        n: g.n() as u8,
        bits: best.unwrap_or(0),
    }
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// ascending canonical-label order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    check_size("graph enumeration", n, MAX_ENUMERATION)?;
    Ok(enumerate_unchecked(n, connected_only))
}

/// As [`enumerate_graphs`], also admitting the slow `n = 9` sweep.
pub fn enumerate_graphs_long(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    check_size("graph enumeration", n, MAX_ENUMERATION_LONG)?;
    Ok(enumerate_unchecked(n, connected_only))
}

fn enumerate_unchecked(n: usize, connected_only: bool) -> Vec<Graph> {
    let mut level: Vec<CanonicalLabel> = vec![canonical_unchecked(&Graph::empty(0))];
    for k in 1..=n {
        level = extend_level(&level, k);
    }
    level
        .into_iter()
        .map(|l| l.to_graph())
        .filter(|g| !connected_only || g.is_connected())
        .collect()
}

/// All graphs on `k` vertices: each graph on `k - 1` vertices plus a new
/// vertex joined to every possible neighbour subset, deduplicated by label.
fn extend_level(prev: &[CanonicalLabel], k: usize) -> Vec<CanonicalLabel> {
    let children: Vec<Vec<CanonicalLabel>> = prev
        .par_iter()
        .map(|label| {
            let parent = label.to_graph();
            let mut adj = parent.adjacency().to_vec();
            adj.push(VertexSet::EMPTY);
            let mut out = Vec::with_capacity(1 << (k - 1));
            for bits in 0u64..(1u64 << (k - 1)) {
                let hood = VertexSet::from_bits(bits);
                let mut rows = adj.clone();
                rows[k - 1] = hood;
                for v in hood {
                    rows[v].insert(k - 1);
                }
                let child = Graph::from_adjacency(rows).expect("augmented graph is simple");
                out.push(canonical_unchecked(&child));
            }
            out
        })
        .collect();
    let set: BTreeSet<CanonicalLabel> = children.into_iter().flatten().collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_paths_share_a_label() {
        let a = Graph::path(3);
        let b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(
            canonical_form(&Graph::complete(3)).unwrap(),
            canonical_form(&a).unwrap()
        );
    }

    #[test]
    fn c4_label_is_fixed_under_relabeling() {
        let c4 = Graph::cycle(4);
        let want = canonical_form(&c4).unwrap();
        for perm in [[0, 1, 2, 3], [1, 0, 2, 3], [3, 1, 0, 2], [2, 3, 1, 0]] {
            assert_eq!(canonical_form(&c4.relabel(&perm)).unwrap(), want);
        }
        assert!(want.to_graph().degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn label_round_trips_to_an_isomorphic_graph() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let l = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&l.to_graph()).unwrap(), l);
        assert_eq!(l.to_graph().edge_count(), 5);
    }

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (0..=6)
            .map(|n| enumerate_graphs(n, false).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, true).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn size_limits() {
        assert!(enumerate_graphs(9, true).is_err());
        assert!(enumerate_graphs_long(10, true).is_err());
        assert!(canonical_form(&Graph::empty(11)).is_err());
    }
}
