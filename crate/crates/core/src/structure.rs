//! Degree-two chains, blockings, and the structural recognizers for graphs
//! with failed skew forcing number 0 and 1.
//!
//! Most of the work is done on the *skeleton*: the vertices whose degree is
//! not two, joined by the maximal chains of degree-two vertices between them
//! (plus the direct edges between skeleton vertices, which are chains with an
//! empty interior). Path orders always count vertices, both ends included.

use serde::{Deserialize, Serialize};

use crate::enumeration::canonical_form;
use crate::error::Result;
use crate::forcing::ForcingRule;
use crate::graph::{components, cut_vertices, Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::invariants::{failed_as_i64, failed_number, MAX_EXHAUSTIVE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// Both ends attach to vertices of degree at least three.
    AnchoredPath,
    /// At least one end is a vertex of degree one.
    PendantPath,
    /// A whole component that is a cycle.
    IsolatedCycle,
    /// A cycle through exactly one vertex of degree other than two.
    AttachedCycle,
}

/// A maximal run of degree-two vertices.
///
/// Interiors are oriented so the first interior vertex is smaller than the
/// last (for single-vertex interiors, so the left anchor is the smaller);
/// attached cycles start next to the anchor at its smaller chain neighbour and
/// isolated cycles start at their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub interior: Vec<usize>,
    pub left_anchor: Option<usize>,
    pub right_anchor: Option<usize>,
    pub kind: ChainKind,
}

impl Chain {
    pub fn interior_set(&self) -> VertexSet {
        self.interior.iter().copied().collect()
    }

    /// Number of vertices on the path (anchors included), or the cycle length.
    pub fn order(&self) -> usize {
        match self.kind {
            ChainKind::IsolatedCycle => self.interior.len(),
            ChainKind::AttachedCycle => self.interior.len() + 1,
            ChainKind::AnchoredPath | ChainKind::PendantPath => self.interior.len() + 2,
        }
    }

    /// The anchors followed by the interior.
    pub fn vertex_set(&self) -> VertexSet {
        let mut s = self.interior_set();
        s.extend_opt(self.left_anchor);
        s.extend_opt(self.right_anchor);
        s
    }
}

trait ExtendOpt {
    fn extend_opt(&mut self, v: Option<usize>);
}

impl ExtendOpt for VertexSet {
    fn extend_opt(&mut self, v: Option<usize>) {
        if let Some(v) = v {
            self.insert(v);
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDecomposition {
    pub chains: Vec<Chain>,
}

/// Splits the degree-two vertices into maximal chains, ordered by smallest
/// interior vertex.
pub fn chain_decomposition(g: &Graph) -> ChainDecomposition {
    let deg2 = g.vertices_of_degree(2);
    let mut seen = VertexSet::EMPTY;
    let mut chains = Vec::new();
    for start in deg2 {
        if seen.contains(start) {
            continue;
        }
        // walk from `start` towards each neighbour until leaving the degree-two set
        let [a, b] = two(g.neighbors(start));
        let (fwd, end_a) = walk(g, deg2, start, a);
        if end_a == Some(start) {
            // closed loop of degree-two vertices
            let mut cyc = vec![start];
            cyc.extend(fwd.iter().copied().filter(|&v| v != start));
            let cyc = orient_cycle(g, cyc);
            seen |= cyc.iter().copied().collect();
            chains.push(Chain {
                interior: cyc,
                left_anchor: None,
                right_anchor: None,
                kind: ChainKind::IsolatedCycle,
            });
            continue;
        }
        let (bwd, end_b) = walk(g, deg2, start, b);
        let mut interior: Vec<usize> = bwd.into_iter().rev().collect();
        interior.push(start);
        interior.extend(fwd);
        let (mut left, mut right) = (end_b.unwrap(), end_a.unwrap());
        seen |= interior.iter().copied().collect();

        let kind = if left == right {
            ChainKind::AttachedCycle
        } else if g.degree(left) == 1 || g.degree(right) == 1 {
            ChainKind::PendantPath
        } else {
            ChainKind::AnchoredPath
        };
        let flip = if kind == ChainKind::AttachedCycle || interior.len() > 1 {
            interior.first() > interior.last()
        } else {
            left > right
        };
        if flip {
            interior.reverse();
            std::mem::swap(&mut left, &mut right);
        }
        chains.push(Chain {
            interior,
            left_anchor: Some(left),
            right_anchor: Some(right),
            kind,
        });
    }
    chains.sort_by_key(|c| c.interior.iter().copied().min());
    ChainDecomposition { chains }
}

fn two(s: VertexSet) -> [usize; 2] {
    let mut it = s.iter();
    [it.next().unwrap(), it.next().unwrap()]
}

/// Steps from `from` into `to` and keeps going while on degree-two vertices.
/// Returns the degree-two vertices visited after `from` and the first vertex
/// of other degree (or `from` itself when the walk closes a cycle).
fn walk(g: &Graph, deg2: VertexSet, from: usize, to: usize) -> (Vec<usize>, Option<usize>) {
    let mut out = Vec::new();
    let (mut prev, mut cur) = (from, to);
    loop {
        if cur == from {
            return (out, Some(from));
        }
        if !deg2.contains(cur) {
            return (out, Some(cur));
        }
        out.push(cur);
        let next = g.neighbors(cur).without(prev).first().unwrap();
        prev = cur;
        cur = next;
    }
}

fn orient_cycle(g: &Graph, cyc: Vec<usize>) -> Vec<usize> {
    let start = *cyc.iter().min().unwrap();
    let [a, _] = two(g.neighbors(start));
    let mut out = vec![start];
    let (mut prev, mut cur) = (start, a);
    while cur != start {
        out.push(cur);
        let next = g.neighbors(cur).without(prev).first().unwrap();
        prev = cur;
        cur = next;
    }
    out
}

/// A path on `2n + 1` vertices whose ends have degree at least three and whose
/// `2n - 1` interior vertices have degree two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingRecord {
    pub path_vertices: Vec<usize>,
    pub n: usize,
}

impl BlockingRecord {
    pub fn vertex_set(&self) -> VertexSet {
        self.path_vertices.iter().copied().collect()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.path_vertices[0], *self.path_vertices.last().unwrap())
    }

    /// For a 1-blocking, the degree-two midpoint.
    pub fn middle(&self) -> usize {
        self.path_vertices[self.path_vertices.len() / 2]
    }
}

/// Every maximal anchored chain of odd order. Sub-paths of longer chains are
/// not reported.
pub fn find_blockings(g: &Graph) -> Vec<BlockingRecord> {
    chain_decomposition(g)
        .chains
        .into_iter()
        .filter(|c| c.kind == ChainKind::AnchoredPath && c.order() % 2 == 1)
        .map(|c| {
            let mut path = vec![c.left_anchor.unwrap()];
            path.extend(&c.interior);
            path.push(c.right_anchor.unwrap());
            let n = (path.len() - 1) / 2;
            BlockingRecord {
                path_vertices: path,
                n,
            }
        })
        .collect()
}

/// Largest total size of pairwise vertex-disjoint blockings (anchors count),
/// or 0 when the graph has a vertex of degree one.
pub fn disjoint_blocking_bound(g: &Graph) -> usize {
    if (0..g.n()).any(|v| g.degree(v) == 1) {
        return 0;
    }
    let blockings: Vec<(VertexSet, usize)> = find_blockings(g)
        .iter()
        .map(|b| (b.vertex_set(), b.n))
        .collect();
    best_packing(&blockings, VertexSet::EMPTY)
}

fn best_packing(items: &[(VertexSet, usize)], used: VertexSet) -> usize {
    let Some((&(set, weight), rest)) = items.split_first() else {
        return 0;
    };
    let skip = best_packing(rest, used);
    if set.is_disjoint(used) {
        skip.max(weight + best_packing(rest, used | set))
    } else {
        skip
    }
}

/// `max(1 + |H_1| + ... + |H_{t-2}|)` over cut vertices of degree above two,
/// where `H_1, ..., H_t` are the components of `G - v` by decreasing size.
pub fn cut_vertex_bound(g: &Graph) -> usize {
    cut_vertices(g)
        .iter()
        .filter(|&v| g.degree(v) > 2)
        .map(|v| {
            let parts = components(g)
                .into_iter()
                .flat_map(|c| g.components_within(c.without(v)))
                .filter(|c| !c.is_empty())
                .map(|c| c.len())
                .collect::<Vec<_>>();
            let mut sizes = parts;
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let t = sizes.len();
            1 + sizes[..t.saturating_sub(2)].iter().sum::<usize>()
        })
        .max()
        .unwrap_or(0)
}

/// A single odd cycle, or several odd cycles sharing one vertex with every
/// other vertex of degree two.
pub fn is_odd_cycle_bouquet(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    let chains = chain_decomposition(g).chains;
    let hubs = (0..g.n()).filter(|&v| g.degree(v) != 2).count();
    match hubs {
        0 => g.n() % 2 == 1,
        1 => chains
            .iter()
            .all(|c| c.kind == ChainKind::AttachedCycle && c.order() % 2 == 1),
        _ => false,
    }
}

/// A connection between two skeleton vertices through a chain or a direct edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Link {
    a: usize,
    b: usize,
    /// Vertices on the path, ends included.
    order: usize,
    interior: VertexSet,
}

/// Skeleton view: links between vertices of degree other than two, plus the
/// cycles hanging off single vertices.
#[derive(Debug, Clone)]
struct Skeleton {
    links: Vec<Link>,
    /// `(anchor, cycle length, interior)` for every attached cycle.
    loops: Vec<(usize, usize, VertexSet)>,
    /// Whether some chain is pendant or an isolated cycle.
    irregular: bool,
}

impl Skeleton {
    fn new(g: &Graph) -> Self {
        let mut links = Vec::new();
        let mut loops = Vec::new();
        let mut irregular = false;
        for c in chain_decomposition(g).chains {
            match c.kind {
                ChainKind::AnchoredPath => {
                    let (a, b) = (c.left_anchor.unwrap(), c.right_anchor.unwrap());
                    links.push(Link {
                        a: a.min(b),
                        b: a.max(b),
                        order: c.order(),
                        interior: c.interior_set(),
                    });
                }
                ChainKind::AttachedCycle => {
                    loops.push((c.left_anchor.unwrap(), c.order(), c.interior_set()))
                }
                ChainKind::PendantPath | ChainKind::IsolatedCycle => irregular = true,
            }
        }
        for (a, b) in g.edges() {
            if g.degree(a) != 2 && g.degree(b) != 2 {
                links.push(Link {
                    a,
                    b,
                    order: 2,
                    interior: VertexSet::EMPTY,
                });
            }
        }
        links.sort_by_key(|l| (l.a, l.b, l.order, l.interior));
        Skeleton {
            links,
            loops,
            irregular,
        }
    }

    fn links_at(&self, v: usize) -> impl Iterator<Item = &Link> {
        self.links.iter().filter(move |l| l.a == v || l.b == v)
    }

    fn loops_at(&self, v: usize) -> impl Iterator<Item = &(usize, usize, VertexSet)> {
        self.loops.iter().filter(move |l| l.0 == v)
    }
}

/// Two bouquet centres `u` and `v`, each on at least one odd cycle whose other
/// vertices have degree two, joined by a connection that alternates between
/// single paths and bundles of at least two parallel paths. Every path in the
/// connection has even order and degree-two interior, and the connection
/// starts and ends with a single path:
///
/// ```text
/// u =single= x1 =bundle= x2 =single= ... =single= v
/// ```
pub fn is_doubly_extended_bouquet_dipole(g: &Graph) -> bool {
    if g.n() < 2 || !g.is_connected() || g.min_degree() < 2 {
        return false;
    }
    let sk = Skeleton::new(g);
    if sk.irregular
        || sk.loops.iter().any(|l| l.1 % 2 == 0)
        || sk.links.iter().any(|l| l.order % 2 == 1)
    {
        return false;
    }
    let centres: VertexSet = sk.loops.iter().map(|l| l.0).collect();
    if centres.len() != 2 {
        return false;
    }
    let [u, v] = two(centres);
    // walk the skeleton from u; every junction must have links on exactly two sides
    let mut prev = None;
    let mut cur = u;
    let mut expect_single = true;
    let mut visited = VertexSet::singleton(u);
    loop {
        let ahead: Vec<&Link> = sk
            .links_at(cur)
            .filter(|l| Some(other(l, cur)) != prev)
            .collect();
        if cur == v {
            return ahead.is_empty() && !expect_single;
        }
        let Some(first) = ahead.first() else {
            return false;
        };
        let next = other(first, cur);
        if ahead.iter().any(|l| other(l, cur) != next) || visited.contains(next) {
            return false;
        }
        let single = ahead.len() == 1;
        if single != expect_single {
            return false;
        }
        visited.insert(next);
        expect_single = !expect_single;
        prev = Some(cur);
        cur = next;
    }
}

fn other(l: &Link, v: usize) -> usize {
    if l.a == v {
        l.b
    } else {
        l.a
    }
}

/// Failed skew forcing number zero, decided structurally. The one-vertex graph
/// is included: its only proper subset, the empty set, does not force it.
pub fn recognize_f_zero(g: &Graph) -> bool {
    g.n() == 1 || is_odd_cycle_bouquet(g) || is_doubly_extended_bouquet_dipole(g)
}

/// Some cycle of even length meets the rest of the graph in a single vertex.
pub fn has_pendant_even_cycle(g: &Graph) -> bool {
    chain_decomposition(g)
        .chains
        .iter()
        .any(|c| c.kind == ChainKind::AttachedCycle && c.order() % 2 == 0)
}

/// Per-criterion outcome of the failed-skew-number-one characterization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FOneCriteria {
    /// Every blocking is a 1-blocking, at least one exists, no two are
    /// disjoint, and there are at most two; two must share a degree-3 end.
    pub blockings: bool,
    /// Every degree-two vertex lies on a 1-blocking, an even-order path between
    /// vertices of degree at least three, or an odd cycle attached at one vertex.
    pub degree_two_coverage: bool,
    /// No pendant even cycle and no vertex of degree one.
    pub no_pendants: bool,
    /// Off the 1-blockings, no vertex has two or more neighbours of degree
    /// three or more.
    pub degree_three_neighbors: bool,
    /// Some 1-blocking end has every other neighbour on an odd cycle through
    /// it or on an even-order path to another 1-blocking end.
    pub closed_exterior: bool,
}

impl FOneCriteria {
    pub fn all(&self) -> bool {
        self.blockings
            && self.degree_two_coverage
            && self.no_pendants
            && self.degree_three_neighbors
            && self.closed_exterior
    }
}

pub fn f_one_criteria(g: &Graph) -> FOneCriteria {
    if g.n() < 2 || !g.is_connected() {
        return FOneCriteria::default();
    }
    let blockings = find_blockings(g);
    let sk = Skeleton::new(g);
    let ones: Vec<&BlockingRecord> = blockings.iter().filter(|b| b.n == 1).collect();

    let blockings_ok = !ones.is_empty()
        && ones.len() == blockings.len()
        && match ones[..] {
            [_] => true,
            [x, y] => {
                let shared = x.vertex_set() & y.vertex_set();
                shared.len() == 1 && g.degree(shared.first().unwrap()) == 3
            }
            _ => false,
        };

    let coverage = !sk.irregular
        && sk.loops.iter().all(|l| l.1 % 2 == 1)
        && sk.links.iter().all(|l| l.order % 2 == 0 || l.order == 3);

    let no_pendants = !has_pendant_even_cycle(g) && g.min_degree() >= 2;

    let on_blocking: VertexSet = ones
        .iter()
        .fold(VertexSet::EMPTY, |s, b| s | b.vertex_set());
    let degree_three_neighbors = (0..g.n()).all(|v| {
        on_blocking.contains(v) || g.neighbors(v).iter().filter(|&u| g.degree(u) >= 3).count() <= 1
    });

    let ends: VertexSet = ones
        .iter()
        .fold(VertexSet::EMPTY, |s, b| s.with(b.ends().0).with(b.ends().1));
    let middles: VertexSet = ones.iter().map(|b| b.middle()).collect();
    let closed_exterior = ends.iter().any(|x| {
        let mut ok = VertexSet::EMPTY;
        for &(_, len, interior) in sk.loops_at(x) {
            if len % 2 == 1 {
                ok |= interior;
            }
        }
        for l in sk.links_at(x) {
            if l.order % 2 == 0 && ends.contains(other(l, x)) {
                ok |= (l.interior | VertexSet::singleton(other(l, x))) & g.neighbors(x);
            }
        }
        (g.neighbors(x) - middles).is_subset(ok)
    });

    FOneCriteria {
        blockings: blockings_ok,
        degree_two_coverage: coverage,
        no_pendants,
        degree_three_neighbors,
        closed_exterior,
    }
}

/// Failed skew forcing number one, decided structurally: `2K_1`, `P_3`, `K_4`,
/// or a connected graph meeting every criterion of [`FOneCriteria`].
pub fn is_f_one(g: &Graph) -> bool {
    is_special_f_one(g) || f_one_criteria(g).all()
}

/// `2K_1`, `P_3` or `K_4` up to isomorphism.
pub fn is_special_f_one(g: &Graph) -> bool {
    if !(2..=4).contains(&g.n()) {
        return false;
    }
    let label = canonical_form(g).expect("tiny graph");
    [Graph::empty(2), Graph::path(3), Graph::complete(4)]
        .iter()
        .any(|h| canonical_form(h).expect("tiny graph") == label)
}

/// Recognizer verdicts next to the exhaustive failed skew forcing number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub graph6: String,
    pub f_zero_recognized: bool,
    pub f_one_recognized: bool,
    /// `-1` when no failed set exists; absent above the exhaustive size limit.
    pub oracle_f_skew: Option<i64>,
    /// Both recognizers match the oracle; absent when the oracle is.
    pub agreement: Option<bool>,
    pub criteria_detail: FOneCriteria,
}

impl RecognitionReport {
    pub const CSV_HEADER: &'static str = "graph6,oracle_f_skew,f_zero_recognized,f_one_recognized,\
blockings,degree_two_coverage,no_pendants,degree_three_neighbors,closed_exterior,agreement";

    pub fn to_csv_row(&self) -> String {
        let c = &self.criteria_detail;
        let bit = |b: bool| if b { "1" } else { "0" };
        let opt = |o: Option<String>| o.unwrap_or_default();
        [
            self.graph6.clone(),
            opt(self.oracle_f_skew.map(|f| f.to_string())),
            bit(self.f_zero_recognized).into(),
            bit(self.f_one_recognized).into(),
            bit(c.blockings).into(),
            bit(c.degree_two_coverage).into(),
            bit(c.no_pendants).into(),
            bit(c.degree_three_neighbors).into(),
            bit(c.closed_exterior).into(),
            opt(self.agreement.map(|a| bit(a).to_string())),
        ]
        .join(",")
    }
}

/// Runs both recognizers and, when the graph is small enough, the oracle.
pub fn recognize_f_one(g: &Graph) -> Result<RecognitionReport> {
    let graph6 = emit_graph6(g)?;
    let f_zero_recognized = recognize_f_zero(g);
    let f_one_recognized = is_f_one(g);
    let oracle_f_skew = if g.n() <= MAX_EXHAUSTIVE {
        Some(failed_as_i64(failed_number(g, ForcingRule::Skew)?))
    } else {
        None
    };
    let agreement =
        oracle_f_skew.map(|f| f_zero_recognized == (f == 0) && f_one_recognized == (f == 1));
    Ok(RecognitionReport {
        graph6,
        f_zero_recognized,
        f_one_recognized,
        oracle_f_skew,
        agreement,
        criteria_detail: f_one_criteria(g),
    })
}
