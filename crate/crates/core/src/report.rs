//! Per-graph invariant records and exhaustive verification suites.
//!
//! Suites sweep every graph (or every connected graph) up to a given order,
//! test one claim per graph and collect the graphs that break it. Results are
//! gathered in enumeration order, so reports do not depend on thread count.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{canonical_form, enumerate_graphs, enumerate_graphs_long};
use crate::error::{Error, Result};
use crate::forcing::{closure_by, closure_set, is_stalled, ForcingRule};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::invariants::{
    failed_as_i64, failed_number, failed_number_direct, forcing_number, is_fort,
    max_stalled_witness, singleton_stalled_vertices,
};
use crate::planarity::{is_planar_desk, MAX_PLANARITY};
use crate::structure::{
    cut_vertex_bound, disjoint_blocking_bound, f_one_criteria, find_blockings, is_f_one,
    recognize_f_zero,
};

/// Invariants of one graph, in CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub z_standard: usize,
    pub z_skew: usize,
    /// `-1` when every subset forces.
    pub f_standard: i64,
    pub f_skew: i64,
    pub zero_blocking: Option<usize>,
    pub singleton_stalled: usize,
    pub blocking_bound: usize,
    pub cut_vertex_bound: usize,
    /// Absent above the planarity size limit.
    pub planar: Option<bool>,
}

impl ComputeRecord {
    pub const CSV_HEADER: &'static str = "graph6,n,m,z_standard,z_skew,f_standard,f_skew,\
zero_blocking,singleton_stalled,blocking_bound,cut_vertex_bound,planar";

    pub fn to_csv_row(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_default();
        [
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.z_standard.to_string(),
            self.z_skew.to_string(),
            self.f_standard.to_string(),
            self.f_skew.to_string(),
            opt(self.zero_blocking.map(|z| z.to_string())),
            self.singleton_stalled.to_string(),
            self.blocking_bound.to_string(),
            self.cut_vertex_bound.to_string(),
            opt(self.planar.map(|p| (p as u8).to_string())),
        ]
        .join(",")
    }
}

/// The singleton column counts vertices that are stalled alone under the skew rule.
pub fn compute_line(g: &Graph) -> Result<ComputeRecord> {
    let f_standard = failed_number(g, ForcingRule::Standard)?;
    Ok(ComputeRecord {
        graph6: emit_graph6(g)?,
        n: g.n(),
        m: g.edge_count(),
        z_standard: forcing_number(g, ForcingRule::Standard)?,
        z_skew: forcing_number(g, ForcingRule::Skew)?,
        f_standard: failed_as_i64(f_standard),
        f_skew: failed_as_i64(failed_number(g, ForcingRule::Skew)?),
        zero_blocking: f_standard.map(|f| g.n() - f),
        singleton_stalled: singleton_stalled_vertices(g, ForcingRule::Skew).len(),
        blocking_bound: disjoint_blocking_bound(g),
        cut_vertex_bound: cut_vertex_bound(g),
        planar: if g.n() <= MAX_PLANARITY {
            Some(is_planar_desk(g)?)
        } else {
            None
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Thm22,
    Thm31,
    Thm38,
    BlockingLemma,
    CutVertexLemma,
    SingletonLemma,
    Deg2NeighborLemma,
    OneBlockingLemma,
    PlanarityCorollary,
    FStandardEq1,
    Duality,
    Confluence,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Thm22,
        Suite::Thm31,
        Suite::Thm38,
        Suite::BlockingLemma,
        Suite::CutVertexLemma,
        Suite::SingletonLemma,
        Suite::Deg2NeighborLemma,
        Suite::OneBlockingLemma,
        Suite::PlanarityCorollary,
        Suite::FStandardEq1,
        Suite::Duality,
        Suite::Confluence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Thm22 => "thm2.2",
            Suite::Thm31 => "thm3.1",
            Suite::Thm38 => "thm3.8",
            Suite::BlockingLemma => "blocking-lemma",
            Suite::CutVertexLemma => "cutvertex-lemma",
            Suite::SingletonLemma => "singleton-lemma",
            Suite::Deg2NeighborLemma => "deg2-neighbor-lemma",
            Suite::OneBlockingLemma => "one-blocking-lemma",
            Suite::PlanarityCorollary => "planarity-corollary",
            Suite::FStandardEq1 => "f-standard-eq-1",
            Suite::Duality => "duality",
            Suite::Confluence => "confluence",
        }
    }

    /// The claim under test.
    pub fn claim(self) -> &'static str {
        match self {
            Suite::Thm22 => "connected: F- = 0 iff odd cycle bouquet or doubly extended bouquet-dipole",
            Suite::Thm31 => "disconnected: F- = 1 iff 2K1",
            Suite::Thm38 => "F- = 1 iff 2K1, P3, K4, or all five structural criteria hold",
            Suite::BlockingLemma => "connected, min degree >= 2: F- >= disjoint blocking bound",
            Suite::CutVertexLemma => "connected: F- >= cut vertex bound",
            Suite::SingletonLemma => "connected, F- = 1, not K4: at most two singleton stalled vertices",
            Suite::Deg2NeighborLemma => "connected, F- = 1, not P3: no singleton stalled vertex has a degree-2 neighbour",
            Suite::OneBlockingLemma => "connected, F- = 1, not P3 or K4: a 1-blocking exists and the blocking bound is 1",
            Suite::PlanarityCorollary => "F- <= 1 implies planar",
            Suite::FStandardEq1 => "F = 1 exactly for 2K1, K3, P3, P4",
            Suite::Duality => "stalled sets are fort complements; fort search matches the direct sweep; F- <= F and Z- <= Z",
            Suite::Confluence => "closures are schedule independent, monotone and idempotent",
        }
    }

    /// Whether violations make `verify --strict` fail. The cut-vertex suite
    /// only collects findings.
    pub fn strict(self) -> bool {
        self != Suite::CutVertexLemma
    }

    fn connected_only(self) -> bool {
        !matches!(
            self,
            Suite::Thm31
                | Suite::Thm38
                | Suite::PlanarityCorollary
                | Suite::FStandardEq1
                | Suite::Duality
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub claim: String,
    pub strict: bool,
    pub range: Vec<usize>,
    /// Graphs meeting the suite's hypothesis.
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    /// Aggregate observations, such as the list of graphs a suite singles out.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub const CSV_HEADER: &'static str = "suite,graph6,expected,actual,detail";

    pub fn csv_rows(&self) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                format!(
                    "{},{},{},{},{}",
                    self.suite,
                    v.graph6,
                    csv_field(&v.expected),
                    csv_field(&v.actual),
                    csv_field(&v.detail)
                )
            })
            .collect()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Sweeps orders `1..=max_n` (at most 8).
pub fn run_suite(suite: &str, max_n: usize) -> Result<VerificationReport> {
    run(suite.parse()?, max_n, false)
}

/// As [`run_suite`], also admitting `max_n = 9`.
pub fn run_suite_long(suite: &str, max_n: usize) -> Result<VerificationReport> {
    run(suite.parse()?, max_n, true)
}

/// What one graph contributes: `None` when outside the suite's hypothesis.
struct Outcome {
    violations: Vec<Violation>,
    /// Marks graphs the suite lists in its notes.
    flagged: bool,
}

fn run(suite: Suite, max_n: usize, long: bool) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut flagged = Vec::new();
    for n in 1..=max_n {
        let graphs = if long {
            enumerate_graphs_long(n, suite.connected_only())?
        } else {
            enumerate_graphs(n, suite.connected_only())?
        };
        let outcomes: Vec<Option<Outcome>> = graphs
            .par_iter()
            .map(|g| check(suite, g))
            .collect::<Result<_>>()?;
        for (g, o) in graphs.iter().zip(outcomes) {
            let Some(o) = o else { continue };
            checked += 1;
            violations.extend(o.violations);
            if o.flagged {
                flagged.push(emit_graph6(g)?);
            }
        }
    }
    let notes = notes(suite, max_n, &flagged, &mut violations)?;
    Ok(VerificationReport {
        suite: suite.as_str().to_string(),
        claim: suite.claim().to_string(),
        strict: suite.strict(),
        range: (1..=max_n).collect(),
        graphs_checked: checked,
        violations,
        notes,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

fn notes(
    suite: Suite,
    max_n: usize,
    flagged: &[String],
    violations: &mut Vec<Violation>,
) -> Result<Vec<String>> {
    let list = if flagged.is_empty() {
        "none".to_string()
    } else {
        flagged.join(" ")
    };
    Ok(match suite {
        Suite::SingletonLemma => {
            // the smallest such graph has 7 vertices
            if flagged.is_empty() && max_n >= 7 {
                violations.push(Violation {
                    graph6: String::new(),
                    expected: "some graph with two singleton stalled vertices".into(),
                    actual: "none found".into(),
                    detail: String::new(),
                });
            }
            vec![format!(
                "graphs with exactly two singleton stalled vertices: {list}"
            )]
        }
        Suite::FStandardEq1 => {
            let k4 = failed_as_i64(failed_number(&Graph::complete(4), ForcingRule::Standard)?);
            vec![
                format!("graphs with F = 1: {list}"),
                format!("K4 has F = {k4}"),
            ]
        }
        _ => Vec::new(),
    })
}

fn violation(
    g: &Graph,
    expected: impl Into<String>,
    actual: impl Into<String>,
    detail: impl Into<String>,
) -> Result<Violation> {
    Ok(Violation {
        graph6: emit_graph6(g)?,
        expected: expected.into(),
        actual: actual.into(),
        detail: detail.into(),
    })
}

fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && canonical_form(g)? == canonical_form(h)?)
}

fn check(suite: Suite, g: &Graph) -> Result<Option<Outcome>> {
    let mut out = Vec::new();
    let mut flagged = false;
    let skew = || -> Result<i64> { Ok(failed_as_i64(failed_number(g, ForcingRule::Skew)?)) };
    match suite {
        Suite::Thm22 => {
            let f = skew()?;
            let rec = recognize_f_zero(g);
            if rec != (f == 0) {
                out.push(violation(
                    g,
                    format!("recognized={}", f == 0),
                    format!("recognized={rec}"),
                    format!("F- = {f}"),
                )?);
            }
        }
        Suite::Thm31 => {
            if g.is_connected() {
                return Ok(None);
            }
            let f = skew()?;
            let two_k1 = g.n() == 2 && g.edge_count() == 0;
            if (f == 1) != two_k1 {
                out.push(violation(
                    g,
                    format!("F- = 1 is {two_k1}"),
                    format!("F- = {f}"),
                    "",
                )?);
            }
        }
        Suite::Thm38 => {
            let f = skew()?;
            let rec = is_f_one(g);
            if rec != (f == 1) {
                let c = f_one_criteria(g);
                let detail = format!(
                    "F- = {f}; blockings={} degree_two_coverage={} no_pendants={} degree_three_neighbors={} closed_exterior={}",
                    c.blockings as u8,
                    c.degree_two_coverage as u8,
                    c.no_pendants as u8,
                    c.degree_three_neighbors as u8,
                    c.closed_exterior as u8
                );
                out.push(violation(
                    g,
                    format!("recognized={}", f == 1),
                    format!("recognized={rec}"),
                    detail,
                )?);
            }
        }
        Suite::BlockingLemma => {
            if g.n() < 3 || g.min_degree() < 2 {
                return Ok(None);
            }
            let (f, bound) = (skew()?, disjoint_blocking_bound(g) as i64);
            if f < bound {
                out.push(violation(
                    g,
                    format!("F- >= {bound}"),
                    format!("F- = {f}"),
                    "",
                )?);
            }
        }
        Suite::CutVertexLemma => {
            let bound = cut_vertex_bound(g) as i64;
            if bound == 0 {
                return Ok(None);
            }
            let f = skew()?;
            if f < bound {
                out.push(violation(
                    g,
                    format!("F- >= {bound}"),
                    format!("F- = {f}"),
                    "",
                )?);
            }
        }
        Suite::SingletonLemma => {
            if skew()? != 1 || isomorphic(g, &Graph::complete(4))? {
                return Ok(None);
            }
            let s = singleton_stalled_vertices(g, ForcingRule::Skew);
            flagged = s.len() == 2;
            if s.len() > 2 {
                out.push(violation(
                    g,
                    "at most 2 singleton stalled vertices",
                    format!("{}", s.len()),
                    format!("{s}"),
                )?);
            }
        }
        Suite::Deg2NeighborLemma => {
            if skew()? != 1 || isomorphic(g, &Graph::path(3))? {
                return Ok(None);
            }
            for v in singleton_stalled_vertices(g, ForcingRule::Skew) {
                let bad: VertexSet = g
                    .neighbors(v)
                    .iter()
                    .filter(|&u| g.degree(u) == 2)
                    .collect();
                if !bad.is_empty() {
                    out.push(violation(
                        g,
                        "no degree-2 neighbour",
                        format!("vertex {v} has degree-2 neighbours {bad}"),
                        "",
                    )?);
                }
            }
        }
        Suite::OneBlockingLemma => {
            if skew()? != 1
                || isomorphic(g, &Graph::path(3))?
                || isomorphic(g, &Graph::complete(4))?
            {
                return Ok(None);
            }
            let ones = find_blockings(g).iter().filter(|b| b.n == 1).count();
            let bound = disjoint_blocking_bound(g);
            if ones == 0 || bound != 1 {
                out.push(violation(
                    g,
                    "a 1-blocking and bound 1",
                    format!("{ones} 1-blockings, bound {bound}"),
                    format!("min degree {}", g.min_degree()),
                )?);
            }
        }
        Suite::PlanarityCorollary => {
            let f = skew()?;
            if !(0..=1).contains(&f) {
                return Ok(None);
            }
            if !is_planar_desk(g)? {
                out.push(violation(g, "planar", "not planar", format!("F- = {f}"))?);
            }
        }
        Suite::FStandardEq1 => {
            let f = failed_as_i64(failed_number(g, ForcingRule::Standard)?);
            flagged = f == 1;
            let claimed = [
                Graph::empty(2),
                Graph::complete(3),
                Graph::path(3),
                Graph::path(4),
            ]
            .iter()
            .map(|h| isomorphic(g, h))
            .collect::<Result<Vec<_>>>()?
            .contains(&true);
            if flagged != claimed {
                out.push(violation(
                    g,
                    format!("F = 1 is {claimed}"),
                    format!("F = {f}"),
                    "",
                )?);
            }
        }
        Suite::Duality => out = duality(g)?,
        Suite::Confluence => out = confluence(g)?,
    }
    Ok(Some(Outcome {
        violations: out,
        flagged,
    }))
}

fn duality(g: &Graph) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let all = g.vertices();
    for rule in ForcingRule::ALL {
        for bits in 0..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            let stalled = is_stalled(g, s, rule);
            let dual = s == all || is_fort(g, all - s, rule);
            if stalled != dual {
                out.push(violation(
                    g,
                    format!("stalled={dual}"),
                    format!("stalled={stalled}"),
                    format!("{rule} S = {s}"),
                )?);
            }
        }
        let fast = failed_number(g, rule)?;
        let slow = failed_number_direct(g, rule)?;
        if fast != slow {
            out.push(violation(
                g,
                format!("{slow:?}"),
                format!("{fast:?}"),
                format!("{rule} fort search vs direct sweep"),
            )?);
        }
        if let Some(w) = max_stalled_witness(g, rule)? {
            if !is_stalled(g, w, rule) || Some(w.len()) != fast {
                out.push(violation(
                    g,
                    "valid witness",
                    format!("{w}"),
                    format!("{rule} max stalled witness"),
                )?);
            }
        }
    }
    let f = |r| -> Result<i64> { Ok(failed_as_i64(failed_number(g, r)?)) };
    let (fs, fk) = (f(ForcingRule::Standard)?, f(ForcingRule::Skew)?);
    if fk > fs {
        out.push(violation(
            g,
            format!("F- <= F = {fs}"),
            format!("F- = {fk}"),
            "rule dominance",
        )?);
    }
    let (zs, zk) = (
        forcing_number(g, ForcingRule::Standard)?,
        forcing_number(g, ForcingRule::Skew)?,
    );
    if zk > zs {
        out.push(violation(
            g,
            format!("Z- <= Z = {zs}"),
            format!("Z- = {zk}"),
            "rule dominance",
        )?);
    }
    Ok(out)
}

pub const SCHEDULES_PER_GRAPH: usize = 100;

fn seed(g6: &str) -> u64 {
    g6.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn confluence(g: &Graph) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(seed(&emit_graph6(g)?));
    let full = g.vertices().bits();
    for _ in 0..SCHEDULES_PER_GRAPH {
        let s = VertexSet::from_bits(rng.random::<u64>() & full);
        let t = s | VertexSet::from_bits(rng.random::<u64>() & full);
        for rule in ForcingRule::ALL {
            let reference = closure_set(g, s, rule);
            let scheduled = closure_by(g, s, rule, |_| rng.random_range(0..usize::MAX)).final_set;
            if scheduled != reference {
                out.push(violation(
                    g,
                    format!("{reference}"),
                    format!("{scheduled}"),
                    format!("{rule} schedule from {s}"),
                )?);
            }
            if closure_set(g, reference, rule) != reference {
                out.push(violation(
                    g,
                    "idempotent",
                    format!("{reference}"),
                    format!("{rule} closure of {s}"),
                )?);
            }
            let bigger = closure_set(g, t, rule);
            if !reference.is_subset(bigger) {
                out.push(violation(
                    g,
                    format!("{reference} within {bigger}"),
                    "not monotone",
                    format!("{rule} {s} within {t}"),
                )?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_line_examples() {
        let k4 = compute_line(&Graph::complete(4)).unwrap();
        assert_eq!((k4.f_skew, k4.f_standard, k4.z_standard), (1, 2, 3));
        let p3 = compute_line(&Graph::path(3)).unwrap();
        assert_eq!(p3.f_skew, 1);
        assert_eq!(p3.zero_blocking, Some(3 - p3.f_standard as usize));
        assert_eq!(compute_line(&Graph::cycle(5)).unwrap().f_skew, 0);
        let k2 = compute_line(&Graph::complete(2)).unwrap();
        assert_eq!(k2.f_skew, -1);
    }

    #[test]
    fn csv_row_matches_header() {
        let r = compute_line(&Graph::cycle(5)).unwrap();
        assert_eq!(r.to_csv_row(), "Dhc,5,5,2,1,2,0,3,0,0,0,1");
        assert_eq!(
            r.to_csv_row().split(',').count(),
            ComputeRecord::CSV_HEADER.split(',').count()
        );
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!(
            run_suite("thm9.9", 3),
            Err(Error::UnknownSuite(_))
        ));
        assert!(run_suite("duality", 9).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for s in [
            "thm2.2",
            "thm3.1",
            "duality",
            "confluence",
            "planarity-corollary",
        ] {
            let r = run_suite(s, 5).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.violations);
            assert_eq!(r.range, vec![1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn f_standard_list_at_small_orders() {
        let r = run_suite("f-standard-eq-1", 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.notes[0], "graphs with F = 1: A? BW Bw CR");
        assert_eq!(r.notes[1], "K4 has F = 2");
    }

    #[test]
    fn csv_fields_are_quoted() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
