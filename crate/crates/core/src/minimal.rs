//! Minimal t-toughness and per-edge witness sets.
//!
//! For a minimally t-tough graph every edge `e` comes with a set `S`:
//! either `e` is a bridge and `S` is empty, or `t * w(G - S) <= |S|` while
//! `t * w((G - e) - S) > |S|`, which makes `e` a bridge of `G - S`.

use std::fmt;

use crate::classes::{is_2k2_free, is_claw_free};
use crate::error::{Error, Result};
use crate::graph::{bridges, component_count, components, Edge, Graph, VertexSet};
use crate::rational::{ratio, require_positive, scaled_le, Rational};
use crate::toughness::{first_violating_cutset, first_violation_within, toughness, ToughnessValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeWitness {
    pub edge: Edge,
    pub set: VertexSet,
    pub bridge_case: bool,
    pub t: Rational,
    /// `w(G - S)`.
    pub components_before: usize,
    /// `w((G - e) - S)`.
    pub components_after: usize,
}

impl EdgeWitness {
    /// Evaluates `set` for `edge`; the bridge case is recognized when `set`
    /// is empty and `edge` is a bridge of `g`.
    pub fn evaluate(g: &Graph, t: Rational, edge: Edge, set: VertexSet) -> EdgeWitness {
        let before = component_count(g, set);
        let after = component_count(&g.without_edge(edge), set);
        EdgeWitness {
            edge,
            set,
            bridge_case: set.is_empty() && after > before,
            t,
            components_before: before,
            components_after: after,
        }
    }

    /// `|S| / t`.
    pub fn bound(&self) -> Rational {
        ratio(self.set.len(), 1) / self.t
    }

    /// `w(G - S) <= |S| / t`.
    pub fn before_holds(&self) -> bool {
        scaled_le(self.t, self.components_before, self.set.len())
    }

    /// `w((G - e) - S) > |S| / t`.
    pub fn after_holds(&self) -> bool {
        !scaled_le(self.t, self.components_after, self.set.len())
    }

    /// Whether the recorded numbers certify the edge.
    pub fn certifies(&self) -> bool {
        if self.bridge_case {
            return self.set.is_empty() && self.components_after > self.components_before;
        }
        self.before_holds()
            && self.after_holds()
            && self.components_after > self.components_before
            && !self.set.contains(self.edge.u)
            && !self.set.contains(self.edge.v)
    }
}

impl fmt::Display for EdgeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "edge {}", self.edge)?;
        if self.bridge_case {
            writeln!(f, "bridge: S = {{}}")?;
            return write!(f, "w(G-e) = {} > w(G) = {}", self.components_after, self.components_before);
        }
        let bound = self.bound();
        writeln!(f, "S = {}", self.set)?;
        writeln!(
            f,
            "w(G-S) = {} {} |S|/t = {bound}",
            self.components_before,
            if self.before_holds() { "<=" } else { ">" }
        )?;
        write!(
            f,
            "w((G-e)-S) = {} {} |S|/t = {bound}",
            self.components_after,
            if self.after_holds() { ">" } else { "<=" }
        )
    }
}

/// Re-evaluates `w` on `g` from scratch and checks it.
pub fn verify_edge_witness(g: &Graph, w: &EdgeWitness) -> bool {
    g.has_edge(w.edge.u, w.edge.v) && {
        let fresh = EdgeWitness::evaluate(g, w.t, w.edge, w.set);
        fresh == *w && fresh.certifies()
    }
}

/// The first edge whose deletion keeps the graph t-tough.
fn first_robust_edge(g: &Graph, t: Rational) -> Option<Edge> {
    let cut_edges = bridges(g);
    g.edges().find(|e| !cut_edges.contains(e) && first_violating_cutset(&g.without_edge(*e), t).is_none())
}

pub fn is_minimally_t_tough(g: &Graph, t: Rational) -> Result<bool> {
    require_positive(t)?;
    Ok(toughness(g).value == ToughnessValue::Finite(t) && first_robust_edge(g, t).is_none())
}

/// Why a graph fails to be minimally tough.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotMinimal {
    /// Toughness is zero or infinite.
    Degenerate(ToughnessValue),
    /// Deleting this edge leaves the graph t-tough.
    RobustEdge(Rational, Edge),
}

/// `Ok(t)` when `g` is minimally `tau(g)`-tough.
pub fn minimal_toughness(g: &Graph) -> std::result::Result<Rational, NotMinimal> {
    let value = toughness(g).value;
    let t = value.finite().ok_or(NotMinimal::Degenerate(value))?;
    match first_robust_edge(g, t) {
        Some(e) => Err(NotMinimal::RobustEdge(t, e)),
        None => Ok(t),
    }
}

pub fn minimal_toughness_value(g: &Graph) -> Option<Rational> {
    minimal_toughness(g).ok()
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    if e.v >= g.order() || !g.has_edge(e.u, e.v) {
        return Err(Error::InvalidArgument(format!("{e} is not an edge of the graph")));
    }
    Ok(())
}

fn require_minimal(g: &Graph, t: Rational) -> Result<()> {
    if !is_minimally_t_tough(g, t)? {
        return Err(Error::Precondition(format!("graph is not minimally {t}-tough")));
    }
    Ok(())
}

fn is_bridge(g: &Graph, e: Edge) -> bool {
    component_count(&g.without_edge(e), VertexSet::EMPTY) > component_count(g, VertexSet::EMPTY)
}

fn checked(w: EdgeWitness) -> Result<EdgeWitness> {
    if w.certifies() {
        Ok(w)
    } else {
        Err(Error::Internal(format!("witness {} fails for edge {}", w.set, w.edge)))
    }
}

/// The smallest (then lexicographically first) set certifying `e`.
pub fn claim1_witness(g: &Graph, t: Rational, e: Edge) -> Result<EdgeWitness> {
    require_edge(g, e)?;
    require_minimal(g, t)?;
    edge_witness_unchecked(g, t, e)
}

/// As [`claim1_witness`] without re-deciding minimality of `g`.
pub(crate) fn edge_witness_unchecked(g: &Graph, t: Rational, e: Edge) -> Result<EdgeWitness> {
    if is_bridge(g, e) {
        return checked(EdgeWitness::evaluate(g, t, e, VertexSet::EMPTY));
    }
    let s = first_violating_cutset(&g.without_edge(e), t)
        .ok_or_else(|| Error::Internal(format!("no violating cutset after deleting {e}")))?;
    checked(EdgeWitness::evaluate(g, t, e, s.set))
}

/// The set `(C \ {u, v}) + {w in I : uw, vw in E}` for a clique edge `uv`,
/// evaluated against `t = tau(g)`. Whether it certifies is left to
/// [`EdgeWitness::certifies`].
pub fn split_clique_edge_witness(
    g: &Graph,
    clique: VertexSet,
    independent: VertexSet,
    e: Edge,
) -> Result<EdgeWitness> {
    require_edge(g, e)?;
    if clique.union(independent) != g.vertices()
        || clique.intersects(independent)
        || !g.is_clique(clique)
        || !g.is_independent(independent)
    {
        return Err(Error::InvalidArgument("not a split partition of the graph".into()));
    }
    if !clique.contains(e.u) || !clique.contains(e.v) {
        return Err(Error::InvalidArgument(format!("{e} does not lie inside the clique")));
    }
    let t = toughness(g)
        .value
        .finite()
        .ok_or_else(|| Error::Precondition("toughness is not a positive rational".into()))?;
    let common = independent.intersection(g.neighbors(e.u)).intersection(g.neighbors(e.v));
    let set = clique.without(e.u).without(e.v).union(common);
    Ok(EdgeWitness::evaluate(g, t, e, set))
}

/// For a minimally 1/2-tough claw-free graph: a witness of size at most
/// one, the neighborhood of the component of `G - S` that contains `e`.
pub fn clawfree_half_witness(g: &Graph, e: Edge) -> Result<EdgeWitness> {
    require_edge(g, e)?;
    if let Some(w) = is_claw_free(g).negative() {
        return Err(Error::Precondition(format!("graph contains the claw {w}")));
    }
    require_minimal(g, ratio(1, 2))?;
    clawfree_half_witness_unchecked(g, e)
}

pub(crate) fn clawfree_half_witness_unchecked(g: &Graph, e: Edge) -> Result<EdgeWitness> {
    let half = ratio(1, 2);
    let base = edge_witness_unchecked(g, half, e)?;
    if base.bridge_case {
        return Ok(base);
    }
    let comps = components(g, base.set);
    let label = comps.label(e.u).expect("edge endpoints lie outside the witness");
    let set = g.set_neighbors(comps.sets()[label]);
    Ok(EdgeWitness::evaluate(g, half, e, set))
}

/// For a minimally t-tough 2K2-free graph: the first certifying set inside
/// the open neighborhood of `{u, v}`.
pub fn twok2_witness(g: &Graph, t: Rational, e: Edge) -> Result<EdgeWitness> {
    require_edge(g, e)?;
    if let Some(w) = is_2k2_free(g).negative() {
        return Err(Error::Precondition(format!("graph contains the induced {w}")));
    }
    require_minimal(g, t)?;
    twok2_witness_unchecked(g, t, e)
}

pub(crate) fn twok2_witness_unchecked(g: &Graph, t: Rational, e: Edge) -> Result<EdgeWitness> {
    if is_bridge(g, e) {
        return checked(EdgeWitness::evaluate(g, t, e, VertexSet::EMPTY));
    }
    let within = g.set_neighbors(e.endpoints());
    let s = first_violation_within(&g.without_edge(e), t, within).ok_or_else(|| {
        Error::Internal(format!("no certifying set inside N({{{},{}}}) = {within}", e.u, e.v))
    })?;
    checked(EdgeWitness::evaluate(g, t, e, s.set))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &edges)
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &edges)
    }

    fn star(b: usize) -> Graph {
        let edges: Vec<_> = (1..=b).map(|i| (0, i)).collect();
        g(b + 1, &edges)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimally_t_tough(&cycle(4), ratio(1, 1)).unwrap());
        assert!(is_minimally_t_tough(&path(4), ratio(1, 2)).unwrap());
        let paw = g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]);
        assert!(!is_minimally_t_tough(&paw, ratio(1, 2)).unwrap());
        assert!(!is_minimally_t_tough(&Graph::complete(4), ratio(1, 1)).unwrap());
        assert!(!is_minimally_t_tough(&cycle(4), ratio(1, 2)).unwrap());
        assert!(is_minimally_t_tough(&cycle(4), Rational::from_integer(0)).is_err());
    }

    #[test]
    fn minimal_values() {
        assert_eq!(minimal_toughness_value(&cycle(5)), Some(ratio(1, 1)));
        assert_eq!(minimal_toughness_value(&star(4)), Some(ratio(1, 4)));
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(minimal_toughness_value(&bowtie), None);
        assert_eq!(minimal_toughness_value(&Graph::complete(3)), None);
        assert!(matches!(
            minimal_toughness(&Graph::empty(2)),
            Err(NotMinimal::Degenerate(ToughnessValue::Zero))
        ));
    }

    #[test]
    fn edge_witness_examples() {
        let w = claim1_witness(&cycle(4), ratio(1, 1), Edge::new(0, 1)).unwrap();
        assert_eq!(w.set, set(&[2]));
        assert_eq!((w.components_before, w.components_after), (1, 2));
        assert!(verify_edge_witness(&cycle(4), &w));

        let w = claim1_witness(&path(5), ratio(1, 2), Edge::new(1, 2)).unwrap();
        assert!(w.bridge_case && w.set.is_empty());

        // (size, lex) order hits {2} first; {3} certifies as well
        let c5 = cycle(5);
        let w = claim1_witness(&c5, ratio(1, 1), Edge::new(0, 1)).unwrap();
        assert_eq!(w.set, set(&[2]));
        let far = EdgeWitness::evaluate(&c5, ratio(1, 1), Edge::new(0, 1), set(&[3]));
        assert!(verify_edge_witness(&c5, &far));
    }

    #[test]
    fn edge_witness_preconditions() {
        assert!(claim1_witness(&cycle(4), ratio(1, 1), Edge::new(0, 2)).is_err());
        assert!(claim1_witness(&cycle(4), ratio(1, 2), Edge::new(0, 1)).is_err());
    }

    #[test]
    fn split_formula_examples() {
        // triangle 0,1,2 with one leaf each: 3,4,5
        let t2 = g(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]);
        let w = split_clique_edge_witness(&t2, set(&[0, 1, 2]), set(&[3, 4, 5]), Edge::new(0, 1)).unwrap();
        assert_eq!(w.set, set(&[2]));
        assert_eq!((w.components_before, w.components_after), (2, 3));
        assert!(w.certifies());

        let double = g(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]);
        let w = split_clique_edge_witness(&double, set(&[0, 1]), set(&[2, 3, 4]), Edge::new(0, 1)).unwrap();
        assert!(w.bridge_case && w.certifies());

        assert!(split_clique_edge_witness(&double, set(&[0, 1]), set(&[2, 3, 4]), Edge::new(0, 2)).is_err());
    }

    #[test]
    fn clawfree_half_examples() {
        // triangle 0,1,2 with tails 0-3-4, 1-5-6, 2-7-8
        let h = g(9, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6), (2, 7), (7, 8)]);
        let w = clawfree_half_witness(&h, Edge::new(0, 1)).unwrap();
        assert_eq!(w.set, set(&[2]));
        assert!(verify_edge_witness(&h, &w));
        assert!(clawfree_half_witness(&path(4), Edge::new(1, 2)).unwrap().bridge_case);
        assert!(clawfree_half_witness(&star(3), Edge::new(0, 1)).is_err());
    }

    #[test]
    fn neighborhood_witnesses() {
        let w = twok2_witness(&cycle(4), ratio(1, 1), Edge::new(0, 1)).unwrap();
        assert!(w.set.is_subset(set(&[2, 3])));
        let w = twok2_witness(&cycle(5), ratio(1, 1), Edge::new(0, 1)).unwrap();
        assert_eq!(w.set, set(&[2]));
        assert!(twok2_witness(&star(3), ratio(1, 3), Edge::new(0, 1)).unwrap().bridge_case);
        assert!(twok2_witness(&path(5), ratio(1, 2), Edge::new(0, 1)).is_err());
    }

    #[test]
    fn display_shows_both_inequalities() {
        let w = claim1_witness(&cycle(4), ratio(1, 1), Edge::new(0, 1)).unwrap();
        let text = w.to_string();
        assert!(text.contains("w(G-S) = 1 <= |S|/t = 1"), "{text}");
        assert!(text.contains("w((G-e)-S) = 2 > |S|/t = 1"), "{text}");
    }
}
