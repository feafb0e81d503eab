//! Generators for the minimally tough families and recognizers based on
//! their structural characterizations.
//!
//! Vertex numbering of the generators is fixed:
//! - `Star(b)`: center 0, leaves `1..=b`.
//! - `Path(n)`, `Cycle(n)`: `0, 1, .., n-1` in order.
//! - `DoubleStar(b, k)`: centers 0 and 1; the `b-1` leaves of 0 are
//!   `2..=b`, the `k` leaves of 1 follow.
//! - `SplitTriangle(b)`: triangle 0, 1, 2; the `j`-th leaf of triangle
//!   vertex `i` is `3 + i(b-1) + j`.
//! - `ClawfreeHalfFromTree(T)`: the non-degree-3 vertices of `T` in
//!   ascending order.

use std::fmt;

use crate::classes::{is_2k2_free, is_claw_free, is_split};
use crate::error::{Error, Result};
use crate::graph::{blocks, bridges, is_connected, Edge, Graph, VertexSet};
use crate::rational::{ratio, Rational};
use crate::toughness::toughness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    Star(usize),
    Path(usize),
    Cycle(usize),
    DoubleStar(usize, usize),
    SplitTriangle(usize),
    ClawfreeHalfFromTree(Graph),
}

impl FamilyDescriptor {
    /// Parses `star:3`, `path:5`, `cycle:4`, `doublestar:b,k`,
    /// `splittriangle:b` or `clawhalf:<file>`, loading the tree through
    /// `load_tree`.
    pub fn parse(text: &str, load_tree: impl FnOnce(&str) -> Result<Graph>) -> Result<FamilyDescriptor> {
        let bad = || Error::InvalidArgument(format!("unknown family descriptor {text:?}"));
        let (name, args) = text.split_once(':').ok_or_else(bad)?;
        let ints = || -> Result<Vec<usize>> {
            args.split(',').map(|a| a.parse::<usize>().map_err(|_| bad())).collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [x] => Ok(*x),
                _ => Err(bad()),
            }
        };
        let d = match name {
            "star" => FamilyDescriptor::Star(one()?),
            "path" => FamilyDescriptor::Path(one()?),
            "cycle" => FamilyDescriptor::Cycle(one()?),
            "splittriangle" => FamilyDescriptor::SplitTriangle(one()?),
            "doublestar" => match ints()?.as_slice() {
                [b, k] => FamilyDescriptor::DoubleStar(*b, *k),
                _ => return Err(bad()),
            },
            "clawhalf" => FamilyDescriptor::ClawfreeHalfFromTree(load_tree(args)?),
            _ => return Err(bad()),
        };
        d.check()?;
        Ok(d)
    }

    /// The toughness every member is minimally tough for.
    pub fn claimed_toughness(&self) -> Rational {
        match *self {
            FamilyDescriptor::Star(b)
            | FamilyDescriptor::DoubleStar(b, _)
            | FamilyDescriptor::SplitTriangle(b) => ratio(1, b),
            FamilyDescriptor::Path(_) | FamilyDescriptor::ClawfreeHalfFromTree(_) => ratio(1, 2),
            FamilyDescriptor::Cycle(_) => ratio(1, 1),
        }
    }

    fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidArgument(msg));
        match self {
            FamilyDescriptor::Star(b) if *b < 1 => fail("star needs b >= 1".into()),
            FamilyDescriptor::Path(n) if *n < 1 => fail("path needs n >= 1".into()),
            FamilyDescriptor::Cycle(n) if *n < 3 => fail("cycle needs n >= 3".into()),
            FamilyDescriptor::DoubleStar(b, k) if *b < 2 || *k > b - 1 => {
                fail(format!("doublestar needs b >= 2 and k <= b - 1, got b={b}, k={k}"))
            }
            FamilyDescriptor::SplitTriangle(b) if *b < 2 => fail("splittriangle needs b >= 2".into()),
            FamilyDescriptor::ClawfreeHalfFromTree(t) => check_construction_tree(t),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::Star(b) => write!(f, "star:{b}"),
            FamilyDescriptor::Path(n) => write!(f, "path:{n}"),
            FamilyDescriptor::Cycle(n) => write!(f, "cycle:{n}"),
            FamilyDescriptor::DoubleStar(b, k) => write!(f, "doublestar:{b},{k}"),
            FamilyDescriptor::SplitTriangle(b) => write!(f, "splittriangle:{b}"),
            FamilyDescriptor::ClawfreeHalfFromTree(t) => write!(f, "clawhalf:{}", crate::graph::encode_graph6(t)),
        }
    }
}

fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1
}

/// A tree with at least 3 vertices, maximum degree 3, and its degree-1 and
/// degree-3 vertices forming an independent set.
fn check_construction_tree(t: &Graph) -> Result<()> {
    let fail = |msg: &str| Err(Error::InvalidArgument(format!("construction tree: {msg}")));
    if !is_tree(t) {
        return fail("not a tree");
    }
    if t.order() < 3 {
        return fail("needs at least 3 vertices");
    }
    if t.max_degree().unwrap_or(0) > 3 {
        return fail("maximum degree exceeds 3");
    }
    let odd: VertexSet = (0..t.order()).filter(|&v| matches!(t.degree(v), 1 | 3)).collect();
    if !t.is_independent(odd) {
        return fail("degree-1 and degree-3 vertices are not independent");
    }
    Ok(())
}

pub fn generate(d: &FamilyDescriptor) -> Result<Graph> {
    d.check()?;
    let mut edges = Vec::new();
    let n = match *d {
        FamilyDescriptor::Star(b) => {
            edges.extend((1..=b).map(|i| (0, i)));
            b + 1
        }
        FamilyDescriptor::Path(n) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FamilyDescriptor::Cycle(n) => {
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        FamilyDescriptor::DoubleStar(b, k) => {
            edges.push((0, 1));
            edges.extend((2..=b).map(|i| (0, i)));
            edges.extend((b + 1..b + 1 + k).map(|i| (1, i)));
            b + 1 + k
        }
        FamilyDescriptor::SplitTriangle(b) => {
            edges.extend([(0, 1), (0, 2), (1, 2)]);
            for i in 0..3 {
                edges.extend((0..b - 1).map(|j| (i, 3 + i * (b - 1) + j)));
            }
            3 + 3 * (b - 1)
        }
        FamilyDescriptor::ClawfreeHalfFromTree(ref t) => return Ok(clawfree_half_from_tree(t)),
    };
    Graph::from_edges(n, &edges)
}

/// Deletes every degree-3 vertex and joins its three neighbors by a triangle.
fn clawfree_half_from_tree(t: &Graph) -> Graph {
    let kept: VertexSet = (0..t.order()).filter(|&v| t.degree(v) != 3).collect();
    let mut g = t.clone();
    for v in 0..t.order() {
        if t.degree(v) == 3 {
            g = g.with_clique(t.neighbors(v));
        }
    }
    g.induced_subgraph(kept).0
}

/// Accepts the graphs built by the tree construction and returns the tree:
/// original vertices keep their numbers, each triangle block becomes a new
/// vertex after them, in block order.
pub fn recognize_clawfree_half(g: &Graph) -> Option<Graph> {
    let n = g.order();
    if n < 3 || !is_connected(g) || !is_claw_free(g).verdict() {
        return None;
    }
    let decomposition = blocks(g).ok()?;
    if decomposition.blocks.iter().any(|b| b.len() > 3) {
        return None;
    }
    let triangles: Vec<VertexSet> = decomposition.blocks.iter().copied().filter(|b| b.len() == 3).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in g.edges() {
        if !triangles.iter().any(|t| e.endpoints().is_subset(*t)) {
            edges.push((e.u, e.v));
        }
    }
    for (i, t) in triangles.iter().enumerate() {
        edges.extend(t.iter().map(|v| (v, n + i)));
    }
    let tree = Graph::from_edges(n + triangles.len(), &edges).ok()?;
    let red: VertexSet = (n..tree.order()).collect();
    let degree3: VertexSet = (0..tree.order()).filter(|&v| tree.degree(v) == 3).collect();
    (check_construction_tree(&tree).is_ok() && degree3 == red).then_some(tree)
}

/// `1/b` for the two minimally tough split shapes: a tree with at most two
/// internal vertices and maximum degree `b`, or a triangle whose vertices
/// all have degree `b + 1` with every other vertex a leaf.
pub fn recognize_split_min_tough(g: &Graph) -> Option<Rational> {
    let n = g.order();
    if n < 3 || !is_connected(g) || !is_split(g).verdict() {
        return None;
    }
    let internal: VertexSet = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    if is_tree(g) {
        return (internal.len() <= 2).then(|| ratio(1, g.max_degree().unwrap_or(0)));
    }
    let d = g.degree(internal.first()?);
    let shaped = internal.len() == 3
        && g.is_clique(internal)
        && d >= 3
        && internal.iter().all(|v| g.degree(v) == d)
        && (0..n).all(|v| internal.contains(v) || g.degree(v) == 1);
    shaped.then(|| ratio(1, d - 1))
}

/// 1 for cycles of length at least 4, 1/2 for the tree construction;
/// nothing otherwise.
pub fn recognize_clawfree_min_tough(g: &Graph) -> Option<Rational> {
    let is_long_cycle = g.order() >= 4 && is_connected(g) && (0..g.order()).all(|v| g.degree(v) == 2);
    if is_long_cycle {
        Some(ratio(1, 1))
    } else {
        recognize_clawfree_half(g).map(|_| ratio(1, 2))
    }
}

/// `G - e` with the open neighborhood of `{u, v}` turned into a clique.
pub fn split_expand(g: &Graph, e: Edge) -> Result<Graph> {
    if e.v >= g.order() || !g.has_edge(e.u, e.v) {
        return Err(Error::InvalidArgument(format!("{e} is not an edge of the graph")));
    }
    if let Some(w) = is_2k2_free(g).negative() {
        return Err(Error::Precondition(format!("graph contains the induced {w}")));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if bridges(g).contains(&e) {
        return Err(Error::Precondition(format!("{e} is a bridge")));
    }
    Ok(g.without_edge(e).with_clique(g.set_neighbors(e.endpoints())))
}

/// Decides minimal toughness of a 2K2-free graph by comparing each
/// expanded split graph against `tau(g)`.
pub fn recognize_2k2_min_tough(g: &Graph) -> Result<Option<Rational>> {
    if let Some(w) = is_2k2_free(g).negative() {
        return Err(Error::Precondition(format!("graph contains the induced {w}")));
    }
    let Some(t) = toughness(g).value.finite() else {
        return Ok(None);
    };
    let cut_edges = bridges(g);
    for e in g.edges() {
        if cut_edges.contains(&e) {
            continue;
        }
        if !toughness(&split_expand(g, e)?).value.is_below(t) {
            return Ok(None);
        }
    }
    Ok(Some(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_code, enumerate_trees};
    use crate::minimal::is_minimally_t_tough;
    use crate::toughness::ToughnessValue;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn spider(leg: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..3 {
            let mut prev = 0;
            for _ in 0..leg {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        g(next, &edges)
    }

    fn no_tree(_: &str) -> Result<Graph> {
        unreachable!()
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(FamilyDescriptor::parse("star:3", no_tree).unwrap(), FamilyDescriptor::Star(3));
        assert_eq!(
            FamilyDescriptor::parse("doublestar:4,2", no_tree).unwrap(),
            FamilyDescriptor::DoubleStar(4, 2)
        );
        for bad in ["star", "star:", "star:x", "cycle:2", "doublestar:3", "doublestar:3,3", "blob:1"] {
            assert!(FamilyDescriptor::parse(bad, no_tree).is_err(), "{bad}");
        }
        let d = FamilyDescriptor::parse("clawhalf:t", |_| Ok(spider(2))).unwrap();
        assert_eq!(d, FamilyDescriptor::ClawfreeHalfFromTree(spider(2)));
    }

    #[test]
    fn generated_shapes() {
        let s = generate(&FamilyDescriptor::Star(3)).unwrap();
        assert_eq!((s.order(), s.degree(0)), (4, 3));
        let t = generate(&FamilyDescriptor::SplitTriangle(2)).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.is_clique([0, 1, 2].into_iter().collect()));
        assert!((3..6).all(|v| t.degree(v) == 1));
        let d = generate(&FamilyDescriptor::DoubleStar(4, 2)).unwrap();
        assert_eq!((d.order(), d.degree(0), d.degree(1)), (7, 4, 3));
    }

    #[test]
    fn tree_construction() {
        // the construction removes each degree-3 vertex
        let h = generate(&FamilyDescriptor::ClawfreeHalfFromTree(spider(2))).unwrap();
        assert_eq!((h.order(), h.size()), (6, 6));
        let h = generate(&FamilyDescriptor::ClawfreeHalfFromTree(spider(3))).unwrap();
        assert_eq!((h.order(), h.size()), (9, 9));
        assert!(is_minimally_t_tough(&h, ratio(1, 2)).unwrap());
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(generate(&FamilyDescriptor::ClawfreeHalfFromTree(claw)).is_err());
    }

    #[test]
    fn clawfree_half_recognition() {
        let p5 = generate(&FamilyDescriptor::Path(5)).unwrap();
        assert_eq!(recognize_clawfree_half(&p5), Some(p5.clone()));
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(recognize_clawfree_half(&bowtie), None);
        assert_eq!(recognize_clawfree_half(&Graph::complete(2)), None);
        let h = generate(&FamilyDescriptor::ClawfreeHalfFromTree(spider(3))).unwrap();
        let tree = recognize_clawfree_half(&h).unwrap();
        assert_eq!(canonical_code(&tree), canonical_code(&spider(3)));
    }

    #[test]
    fn round_trip_small_trees() {
        for n in 3..=8 {
            for t in enumerate_trees(n).unwrap() {
                let d = FamilyDescriptor::ClawfreeHalfFromTree(t.clone());
                if d.check().is_err() {
                    continue;
                }
                let back = recognize_clawfree_half(&generate(&d).unwrap()).unwrap();
                assert_eq!(canonical_code(&back), canonical_code(&t));
            }
        }
    }

    #[test]
    fn split_recognition() {
        assert_eq!(recognize_split_min_tough(&generate(&FamilyDescriptor::Star(4)).unwrap()), Some(ratio(1, 4)));
        let t3 = generate(&FamilyDescriptor::SplitTriangle(3)).unwrap();
        assert_eq!(recognize_split_min_tough(&t3), Some(ratio(1, 3)));
        assert_eq!(recognize_split_min_tough(&generate(&FamilyDescriptor::Cycle(4)).unwrap()), None);
        assert_eq!(recognize_split_min_tough(&Graph::complete(3)), None);
    }

    #[test]
    fn clawfree_recognition() {
        assert_eq!(recognize_clawfree_min_tough(&generate(&FamilyDescriptor::Cycle(6)).unwrap()), Some(ratio(1, 1)));
        assert_eq!(recognize_clawfree_min_tough(&generate(&FamilyDescriptor::Path(3)).unwrap()), Some(ratio(1, 2)));
        assert_eq!(recognize_clawfree_min_tough(&Graph::complete(3)), None);
    }

    #[test]
    fn expansion_examples() {
        let c5 = generate(&FamilyDescriptor::Cycle(5)).unwrap();
        let h = split_expand(&c5, Edge::new(0, 1)).unwrap();
        assert!(h.has_edge(2, 4) && !h.has_edge(0, 1));
        assert_eq!(toughness(&h).value, ToughnessValue::Finite(ratio(1, 2)));
        let c4 = generate(&FamilyDescriptor::Cycle(4)).unwrap();
        assert_eq!(split_expand(&c4, Edge::new(0, 1)).unwrap(), g(4, &[(1, 2), (2, 3), (3, 0)]));
        let paw = g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]);
        let h = split_expand(&paw, Edge::new(1, 2)).unwrap();
        assert_eq!(toughness(&h).value, ToughnessValue::Finite(ratio(1, 3)));
        assert!(split_expand(&paw, Edge::new(0, 3)).is_err());
    }

    #[test]
    fn twok2_recognition() {
        let c4 = generate(&FamilyDescriptor::Cycle(4)).unwrap();
        assert_eq!(recognize_2k2_min_tough(&c4).unwrap(), Some(ratio(1, 1)));
        let star = generate(&FamilyDescriptor::Star(3)).unwrap();
        assert_eq!(recognize_2k2_min_tough(&star).unwrap(), Some(ratio(1, 3)));
        assert!(recognize_2k2_min_tough(&generate(&FamilyDescriptor::Path(5)).unwrap()).is_err());
    }
}
