//! Membership in the chordal, split, claw-free and 2K2-free classes, each
//! answered with a certificate that can be re-checked.
//!
//! Negative certificates are induced subgraphs, reported as the
//! lexicographically smallest vertex list among all occurrences:
//! cycles start at their smallest vertex and continue towards its smaller
//! cycle neighbor, claws list the center first, and a 2K2 lists its two
//! edges with the smaller first endpoint first.

use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::subsets::LexSubsets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Chordal,
    Split,
    ClawFree,
    TwoK2Free,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] =
        [GraphClass::Chordal, GraphClass::Split, GraphClass::ClawFree, GraphClass::TwoK2Free];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::Split => "split",
            GraphClass::ClawFree => "claw-free",
            GraphClass::TwoK2Free => "2K2-free",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducedKind {
    /// Chordless cycle on at least four vertices.
    Cycle,
    Claw,
    TwoK2,
}

/// An occurrence of a forbidden induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InducedWitness {
    pub kind: InducedKind,
    pub vertices: Vec<usize>,
}

impl InducedWitness {
    /// Re-checks that the listed vertices induce the claimed subgraph.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let distinct = vs.iter().copied().collect::<VertexSet>().len() == vs.len();
        if !distinct || vs.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let adjacent_exactly = |pairs: &[(usize, usize)]| {
            (0..vs.len()).all(|i| {
                (i + 1..vs.len()).all(|j| {
                    let want = pairs.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
                    g.has_edge(vs[i], vs[j]) == want
                })
            })
        };
        match self.kind {
            InducedKind::Cycle => {
                let k = vs.len();
                k >= 4 && adjacent_exactly(&(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
            }
            InducedKind::Claw => vs.len() == 4 && adjacent_exactly(&[(0, 1), (0, 2), (0, 3)]),
            InducedKind::TwoK2 => vs.len() == 4 && adjacent_exactly(&[(0, 1), (2, 3)]),
        }
    }
}

impl fmt::Display for InducedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let vs = &self.vertices;
        match self.kind {
            InducedKind::Cycle => write!(f, "C{} [{}]", vs.len(), list(vs)),
            InducedKind::Claw => write!(f, "claw center {} leaves [{}]", vs[0], list(&vs[1..])),
            InducedKind::TwoK2 => write!(f, "2K2 [{}-{}, {}-{}]", vs[0], vs[1], vs[2], vs[3]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positive {
    /// Perfect elimination order: each vertex is simplicial among the later ones.
    EliminationOrder(Vec<usize>),
    /// A maximum clique whose complement is independent.
    SplitPartition { clique: VertexSet, independent: VertexSet },
    /// Claw-free and 2K2-free verdicts carry no witness.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Positive(Positive),
    Negative(InducedWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCertificate {
    pub class: GraphClass,
    pub certificate: Certificate,
}

impl ClassCertificate {
    pub fn verdict(&self) -> bool {
        matches!(self.certificate, Certificate::Positive(_))
    }

    pub fn negative(&self) -> Option<&InducedWitness> {
        match &self.certificate {
            Certificate::Negative(w) => Some(w),
            Certificate::Positive(_) => None,
        }
    }

    pub fn positive(&self) -> Option<&Positive> {
        match &self.certificate {
            Certificate::Positive(p) => Some(p),
            Certificate::Negative(_) => None,
        }
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.certificate {
            Certificate::Negative(w) => {
                let kind_fits = match self.class {
                    GraphClass::Chordal => w.kind == InducedKind::Cycle,
                    GraphClass::Split => match w.kind {
                        InducedKind::TwoK2 => true,
                        InducedKind::Cycle => matches!(w.vertices.len(), 4 | 5),
                        InducedKind::Claw => false,
                    },
                    GraphClass::ClawFree => w.kind == InducedKind::Claw,
                    GraphClass::TwoK2Free => w.kind == InducedKind::TwoK2,
                };
                kind_fits && w.verify(g)
            }
            Certificate::Positive(Positive::EliminationOrder(order)) => {
                is_perfect_elimination_order(g, order)
            }
            Certificate::Positive(Positive::SplitPartition { clique, independent }) => {
                clique.union(*independent) == g.vertices()
                    && !clique.intersects(*independent)
                    && g.is_clique(*clique)
                    && g.is_independent(*independent)
            }
            Certificate::Positive(Positive::Exhausted) => match self.class {
                GraphClass::ClawFree => first_claw(g).is_none(),
                GraphClass::TwoK2Free => first_2k2(g).is_none(),
                _ => false,
            },
        }
    }
}

pub fn classify(g: &Graph) -> [ClassCertificate; 4] {
    [is_chordal(g), is_split(g), is_claw_free(g), is_2k2_free(g)]
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.order() || order.iter().copied().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// Strips the smallest simplicial vertex until none is left; a nonempty
/// remainder holds every chordless cycle of `g`, and the smallest is reported.
pub fn is_chordal(g: &Graph) -> ClassCertificate {
    let mut rest = g.vertices();
    let mut order = Vec::with_capacity(g.order());
    'strip: while !rest.is_empty() {
        for v in rest.iter() {
            if g.is_clique(g.neighbors(v).intersection(rest)) {
                order.push(v);
                rest.remove(v);
                continue 'strip;
            }
        }
        break;
    }
    let certificate = if rest.is_empty() {
        Certificate::Positive(Positive::EliminationOrder(order))
    } else {
        let cycle = smallest_chordless_cycle(g, rest)
            .expect("a graph without simplicial vertices has a chordless cycle");
        Certificate::Negative(InducedWitness { kind: InducedKind::Cycle, vertices: cycle })
    };
    ClassCertificate { class: GraphClass::Chordal, certificate }
}

/// Depth-first over induced paths in lexicographic order, so the first
/// closed cycle is the smallest vertex list.
fn smallest_chordless_cycle(g: &Graph, within: VertexSet) -> Option<Vec<usize>> {
    fn extend(g: &Graph, allowed: VertexSet, path: &mut Vec<usize>, on_path: VertexSet) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        let interior = on_path.without(start).without(last);
        for x in g.neighbors(last).intersection(allowed).difference(on_path).iter() {
            if g.neighbors(x).intersects(interior) {
                continue;
            }
            if g.has_edge(x, start) {
                if path.len() >= 3 && path[1] < x {
                    path.push(x);
                    return true;
                }
                continue;
            }
            path.push(x);
            if extend(g, allowed, path, on_path.with(x)) {
                return true;
            }
            path.pop();
        }
        false
    }

    for start in within.iter() {
        let allowed = VertexSet::from_bits(within.bits() & !((2u64 << start) - 1));
        for second in g.neighbors(start).intersection(allowed).iter() {
            let mut path = vec![start, second];
            if extend(g, allowed, &mut path, VertexSet::singleton(start).with(second)) {
                return Some(path);
            }
        }
    }
    None
}

/// Split iff no induced 2K2, C4 or C5; the partition uses the
/// lexicographically first maximum clique with an independent complement.
pub fn is_split(g: &Graph) -> ClassCertificate {
    let certificate = match smallest_split_obstruction(g) {
        Some(w) => Certificate::Negative(w),
        None => {
            let clique = maximum_cliques(g)
                .into_iter()
                .find(|&c| g.is_independent(g.vertices().difference(c)))
                .expect("a (2K2, C4, C5)-free graph has a split partition");
            Certificate::Positive(Positive::SplitPartition {
                clique,
                independent: g.vertices().difference(clique),
            })
        }
    };
    ClassCertificate { class: GraphClass::Split, certificate }
}

fn smallest_split_obstruction(g: &Graph) -> Option<InducedWitness> {
    let mut best: Option<InducedWitness> = None;
    let mut offer = |w: InducedWitness| {
        if best.as_ref().is_none_or(|b| w.vertices < b.vertices) {
            best = Some(w);
        }
    };
    for s in LexSubsets::new(g.vertices(), 4) {
        let vs = s.to_vec();
        let (a, b, c, d) = (vs[0], vs[1], vs[2], vs[3]);
        for (p, q) in [([a, b], [c, d]), ([a, c], [b, d]), ([a, d], [b, c])] {
            let w = InducedWitness { kind: InducedKind::TwoK2, vertices: vec![p[0], p[1], q[0], q[1]] };
            if w.verify(g) {
                offer(w);
            }
        }
        if let Some(cycle) = induced_cycle_order(g, s) {
            offer(InducedWitness { kind: InducedKind::Cycle, vertices: cycle });
        }
    }
    for s in LexSubsets::new(g.vertices(), 5) {
        if let Some(cycle) = induced_cycle_order(g, s) {
            offer(InducedWitness { kind: InducedKind::Cycle, vertices: cycle });
        }
    }
    best
}

/// If `s` induces a single cycle, its canonical vertex order.
fn induced_cycle_order(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    if s.iter().any(|v| g.neighbors(v).intersection(s).len() != 2) {
        return None;
    }
    let start = s.first()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).intersection(s).first()?;
    while cur != start {
        order.push(cur);
        let next = g.neighbors(cur).intersection(s).without(prev).first()?;
        prev = cur;
        cur = next;
    }
    (order.len() == s.len()).then_some(order)
}

/// Maximum cliques in lexicographic order (Bron-Kerbosch with pivoting).
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p.union(x).iter().max_by_key(|&u| g.neighbors(u).intersection(p).len());
        let skip = pivot.map_or(VertexSet::EMPTY, |u| g.neighbors(u));
        for v in p.difference(skip).iter() {
            let nv = g.neighbors(v);
            expand(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut maximal = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut maximal);
    let top = maximal.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut out: Vec<VertexSet> = maximal.into_iter().filter(|c| c.len() == top).collect();
    out.sort();
    out
}

fn first_claw(g: &Graph) -> Option<InducedWitness> {
    for c in 0..g.order() {
        for leaves in LexSubsets::new(g.neighbors(c), 3) {
            if g.is_independent(leaves) {
                let mut vertices = vec![c];
                vertices.extend(leaves.iter());
                return Some(InducedWitness { kind: InducedKind::Claw, vertices });
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> ClassCertificate {
    let certificate = match first_claw(g) {
        Some(w) => Certificate::Negative(w),
        None => Certificate::Positive(Positive::Exhausted),
    };
    ClassCertificate { class: GraphClass::ClawFree, certificate }
}

fn first_2k2(g: &Graph) -> Option<InducedWitness> {
    let edges: Vec<_> = g.edges().collect();
    for (i, e) in edges.iter().enumerate() {
        let closed = g.neighbors(e.u).union(g.neighbors(e.v)).union(e.endpoints());
        for f in &edges[i + 1..] {
            if !f.endpoints().intersects(closed) {
                return Some(InducedWitness { kind: InducedKind::TwoK2, vertices: vec![e.u, e.v, f.u, f.v] });
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> ClassCertificate {
    let certificate = match first_2k2(g) {
        Some(w) => Certificate::Negative(w),
        None => Certificate::Positive(Positive::Exhausted),
    };
    ClassCertificate { class: GraphClass::TwoK2Free, certificate }
}
