//! Published examples of graphs with failed skew forcing number one. Vertex
//! numbers follow the drawings (1-based, or from the drawing's first label).

use zforce::structure::{f_one_criteria, recognize_f_one};
use zforce::{failed_number, singleton_stalled_vertices, ForcingRule, Graph, VertexSet};

fn build(n: usize, base: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<_> = edges.iter().map(|&(a, b)| (a - base, b - base)).collect();
    Graph::new(n, &e).unwrap()
}

fn path(v: &[usize]) -> Vec<(usize, usize)> {
    v.windows(2).map(|w| (w[0], w[1])).collect()
}

fn vs(base: usize, v: &[usize]) -> VertexSet {
    v.iter().map(|x| x - base).collect()
}

/// Triangle, a six-vertex path with a triangle on its middle, triangle.
fn two_singletons() -> Graph {
    let mut e = path(&[1, 2, 3, 1]);
    e.extend(path(&[3, 4, 5, 6, 7, 8]));
    e.extend(path(&[8, 9, 10, 8]));
    e.push((4, 6));
    build(10, 1, &e)
}

fn bundle_example() -> Graph {
    let mut e = path(&[1, 2, 3, 4, 5, 1]);
    e.extend(path(&[5, 6, 7, 5]));
    e.extend(path(&[5, 8, 9, 5]));
    e.push((5, 10));
    e.push((5, 11));
    e.extend(path(&(10..=20).collect::<Vec<_>>()));
    e.extend(path(&[20, 21, 22, 23, 24, 25, 26, 20]));
    e.extend(path(&[12, 27, 28, 29, 30, 15]));
    e.extend(path(&[12, 31, 32, 15]));
    build(32, 1, &e)
}

fn two_pentagons() -> Graph {
    let mut e = path(&[1, 2, 3, 4, 5]);
    e.extend(path(&[1, 6, 7, 8, 9, 1]));
    e.extend(path(&[5, 10, 11, 12, 13, 5]));
    e.extend(path(&[1, 14, 15, 3]));
    build(15, 1, &e)
}

fn triangle_chain() -> Graph {
    let mut e = path(&[16, 17, 18, 16]);
    e.extend(path(&[18, 19, 20, 21, 22, 23]));
    e.extend(path(&[23, 24, 25, 23]));
    e.push((20, 22));
    build(10, 16, &e)
}

fn decagon() -> Graph {
    let mut e = path(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 1]);
    e.extend(path(&[1, 11, 6]));
    e.extend(path(&[4, 12, 13, 4]));
    build(13, 1, &e)
}

fn hub_example() -> Graph {
    let mut e = path(&[14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 14]);
    e.extend(path(&[22, 24, 25, 26, 17]));
    e.extend(path(&[25, 27, 28, 29, 27]));
    e.extend(path(&[17, 30, 31, 17]));
    e.extend(path(&[17, 32, 33, 17]));
    e.extend(path(&[22, 34, 35, 36, 37, 38, 39, 17]));
    build(26, 14, &e)
}

#[test]
fn two_singleton_stalling_sets() {
    let g = two_singletons();
    assert_eq!(failed_number(&g, ForcingRule::Skew).unwrap(), Some(1));
    assert_eq!(
        singleton_stalled_vertices(&g, ForcingRule::Skew),
        vs(1, &[5, 7])
    );
    assert!(recognize_f_one(&g).unwrap().f_one_recognized);
}

#[test]
fn oracle_sized_examples() {
    let cases = [
        (two_pentagons(), vs(1, &[2, 4])),
        (triangle_chain(), vs(16, &[19, 21])),
        (decagon(), vs(1, &[5, 11])),
    ];
    for (g, singles) in cases {
        let r = recognize_f_one(&g).unwrap();
        assert_eq!(r.oracle_f_skew, Some(1), "{}", r.graph6);
        assert_eq!(r.agreement, Some(true), "{}", r.graph6);
        assert_eq!(singleton_stalled_vertices(&g, ForcingRule::Skew), singles);
    }
}

#[test]
fn large_examples_are_recognized() {
    let cases = [
        (bundle_example(), vs(1, &[10])),
        (hub_example(), vs(14, &[24, 26])),
    ];
    for (g, singles) in cases {
        assert!(f_one_criteria(&g).all());
        let r = recognize_f_one(&g).unwrap();
        assert!(r.f_one_recognized && !r.f_zero_recognized);
        assert_eq!(r.oracle_f_skew, None);
        assert_eq!(singleton_stalled_vertices(&g, ForcingRule::Skew), singles);
    }
}
