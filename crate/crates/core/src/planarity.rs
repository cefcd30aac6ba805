//! Planarity for desk-sized graphs by searching for subdivisions of `K_5` and
//! `K_{3,3}`.
//!
//! The graph is first shrunk without changing whether such a subdivision
//! exists: vertices of degree at most one are dropped and degree-two vertices
//! are smoothed away. What remains is checked against `m <= 3n - 6` and then
//! searched exhaustively: every choice of branch vertices, then internally
//! disjoint paths for every required pair, with a reachability cut before
//! each path is routed.

use crate::error::{check_size, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_PLANARITY: usize = 12;

pub fn is_planar_desk(g: &Graph) -> Result<bool> {
    check_size("planarity search", g.n(), MAX_PLANARITY)?;
    let (adj, alive) = reduce(g);
    let n = alive.len();
    let m = alive.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return Ok(false);
    }
    Ok(!has_k5_subdivision(&adj, alive) && !has_k33_subdivision(&adj, alive))
}

fn reduce(g: &Graph) -> (Vec<VertexSet>, VertexSet) {
    let mut adj = g.adjacency().to_vec();
    let mut alive = g.vertices();
    loop {
        let mut changed = false;
        for v in alive {
            match adj[v].len() {
                0 | 1 => {
                    for u in adj[v] {
                        adj[u].remove(v);
                    }
                    adj[v] = VertexSet::EMPTY;
                    alive.remove(v);
                    changed = true;
                }
                2 => {
                    let a = adj[v].first().unwrap();
                    let b = adj[v].last().unwrap();
                    adj[a].remove(v);
                    adj[b].remove(v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v] = VertexSet::EMPTY;
                    alive.remove(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return (adj, alive);
        }
    }
}

fn has_k5_subdivision(adj: &[VertexSet], alive: VertexSet) -> bool {
    let candidates: Vec<usize> = alive.iter().filter(|&v| adj[v].len() >= 4).collect();
    subsets(&candidates, 5).into_iter().any(|branch| {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        let free = alive - branch.iter().copied().collect();
        route(adj, free, &pairs)
    })
}

fn has_k33_subdivision(adj: &[VertexSet], alive: VertexSet) -> bool {
    let candidates: Vec<usize> = alive.iter().filter(|&v| adj[v].len() >= 3).collect();
    subsets(&candidates, 6).into_iter().any(|six| {
        let free = alive - six.iter().copied().collect();
        // six[0] is always on the left side
        subsets(&six[1..], 2).into_iter().any(|rest| {
            let left = [six[0], rest[0], rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&a| right.iter().map(move |&b| (a, b)))
                .collect();
            route(adj, free, &pairs)
        })
    })
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for (i, &x) in items.iter().enumerate() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(x);
            go(&items[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, &mut Vec::new(), &mut out);
    out
}

/// Can every pair be joined by paths whose interiors are disjoint subsets of `free`?
fn route(adj: &[VertexSet], free: VertexSet, pairs: &[(usize, usize)]) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    if adj[a].contains(b) {
        return route(adj, free, rest);
    }
    if !pairs.iter().all(|&(x, y)| joinable(adj, free, x, y)) {
        return false;
    }
    extend(adj, free, a, b, VertexSet::EMPTY, rest)
}

fn joinable(adj: &[VertexSet], free: VertexSet, a: usize, b: usize) -> bool {
    if adj[a].contains(b) {
        return true;
    }
    let mut seen = adj[a] & free;
    let mut frontier = seen;
    while !frontier.is_empty() {
        if frontier.iter().any(|v| adj[v].contains(b)) {
            return true;
        }
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= adj[v];
        }
        frontier = next & (free - seen);
        seen |= frontier;
    }
    false
}

/// Grows a path from `cur` towards `target` through `free`, then routes `rest`.
fn extend(
    adj: &[VertexSet],
    free: VertexSet,
    cur: usize,
    target: usize,
    used: VertexSet,
    rest: &[(usize, usize)],
) -> bool {
    for next in adj[cur] & (free - used) {
        let used = used.with(next);
        if adj[next].contains(target) && route(adj, free - used, rest) {
            return true;
        }
        if joinable(adj, free - used, next, target) && extend(adj, free, next, target, used, rest) {
            return true;
        }
    }
    false
}
