//! Exact toughness: `min |S| / w(G - S)` over cutsets `S`.
//!
//! The search walks subsets by increasing size, lexicographically within a
//! size, and keeps the first strict improvement, so witnesses are the
//! smallest, then lexicographically first, minimizers. Two cuts keep it
//! cheap without changing that answer:
//!
//! * a cutset containing a vertex adjacent to at most one component of
//!   `G - S` is skipped; dropping that vertex leaves a cutset with no fewer
//!   components and a strictly smaller ratio;
//! * sizes stop once `k / (n - k)`, the best any `k`-set could reach, is no
//!   better than the incumbent.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::structure::fill_components;
use crate::graph::{components, is_connected, vertex_connectivity, Connectivity, Graph, VertexSet, MAX_VERTICES};
use crate::rational::{ratio, require_positive, scaled_le, Rational};
use crate::subsets::LexSubsets;

/// `tau(G)`: infinite for complete graphs, zero for disconnected ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ToughnessValue {
    Zero,
    Finite(Rational),
    Infinite,
}

impl ToughnessValue {
    pub fn finite(self) -> Option<Rational> {
        match self {
            ToughnessValue::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// `self < t` for a positive rational `t`; zero is below everything.
    pub fn is_below(self, t: Rational) -> bool {
        match self {
            ToughnessValue::Zero => true,
            ToughnessValue::Finite(r) => r < t,
            ToughnessValue::Infinite => false,
        }
    }

    fn rank(self) -> u8 {
        match self {
            ToughnessValue::Zero => 0,
            ToughnessValue::Finite(_) => 1,
            ToughnessValue::Infinite => 2,
        }
    }
}

impl Ord for ToughnessValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ToughnessValue::Finite(a), ToughnessValue::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for ToughnessValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Zero => f.write_str("0"),
            ToughnessValue::Finite(r) => write!(f, "{r}"),
            ToughnessValue::Infinite => f.write_str("inf"),
        }
    }
}

/// A vertex set together with what removing it does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WitnessSet {
    pub set: VertexSet,
    pub cut_size: usize,
    pub component_count: usize,
    /// `cut_size / component_count`.
    pub ratio: Rational,
}

impl WitnessSet {
    /// Evaluates `set` on `g`; `None` unless it leaves at least two components.
    pub fn evaluate(g: &Graph, set: VertexSet) -> Option<WitnessSet> {
        let count = components(g, set).count();
        (count >= 2).then(|| WitnessSet {
            set,
            cut_size: set.len(),
            component_count: count,
            ratio: ratio(set.len(), count),
        })
    }

    /// Recomputes the component count on `g` and checks the stored fields.
    pub fn revalidates(&self, g: &Graph) -> bool {
        WitnessSet::evaluate(g, self.set).as_ref() == Some(self)
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (|S|={}, components={})", self.set, self.cut_size, self.component_count)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Toughness {
    pub value: ToughnessValue,
    /// A minimizing cutset; `None` only for complete graphs.
    pub witness: Option<WitnessSet>,
}

/// True when every vertex of `set` has neighbors in at least two of `comps`.
fn all_vertices_split(adj: &[u64], set: VertexSet, comps: &[u64]) -> bool {
    set.iter().all(|v| comps.iter().filter(|&&c| adj[v] & c != 0).take(2).count() == 2)
}

pub fn toughness(g: &Graph) -> Toughness {
    let n = g.order();
    if g.is_complete() {
        return Toughness { value: ToughnessValue::Infinite, witness: None };
    }
    if !is_connected(g) {
        return Toughness {
            value: ToughnessValue::Zero,
            witness: WitnessSet::evaluate(g, VertexSet::EMPTY),
        };
    }

    let adj = g.adjacency();
    let all = g.vertices();
    let mut buf = [0u64; MAX_VERTICES];
    let mut best: Option<WitnessSet> = None;
    // a connected noncomplete graph has n >= 3 and a cutset of size <= n - 2
    for k in 1..=n - 2 {
        let floor = ratio(k, n - k);
        if best.is_some_and(|b| floor >= b.ratio) {
            break;
        }
        for s in LexSubsets::new(all, k) {
            let count = fill_components(adj, all.difference(s).bits(), &mut buf);
            if count < 2 || !all_vertices_split(adj, s, &buf[..count]) {
                continue;
            }
            let r = ratio(k, count);
            if best.is_none_or(|b| r < b.ratio) {
                best = Some(WitnessSet { set: s, cut_size: k, component_count: count, ratio: r });
                if r == floor {
                    break;
                }
            }
        }
    }
    let witness = best.expect("a connected noncomplete graph has a cutset");
    Toughness { value: ToughnessValue::Finite(witness.ratio), witness: Some(witness) }
}

/// Unpruned reference: every one of the `2^n` subsets, components counted
/// by an explicit stack walk over neighbor lists.
pub fn naive_toughness_oracle(g: &Graph) -> Result<ToughnessValue> {
    let n = g.order();
    if n > 16 {
        return Err(Error::InvalidArgument(format!("oracle is limited to 16 vertices, got {n}")));
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&u| g.has_edge(u, v)).collect()).collect();
    // best ratio as (numerator, denominator)
    let mut best: Option<(u64, u64)> = None;
    let mut seen = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    for mask in 0u32..1 << n {
        let removed = |v: usize| mask >> v & 1 == 1;
        seen.iter_mut().for_each(|s| *s = false);
        let mut count = 0u64;
        for start in 0..n {
            if removed(start) || seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &u in &lists[v] {
                    if !removed(u) && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        if count < 2 {
            continue;
        }
        let size = u64::from(mask.count_ones());
        let better = match best {
            None => true,
            Some((p, q)) => size * q < p * count,
        };
        if better {
            best = Some((size, count));
        }
    }
    Ok(match best {
        None => ToughnessValue::Infinite,
        Some((0, _)) => ToughnessValue::Zero,
        Some((p, q)) => ToughnessValue::Finite(Rational::new(p, q)),
    })
}

/// Decides `t`-toughness: `t * w(G - S) <= |S|` for every cutset `S`.
///
/// On failure the witness maximizes `t * w(G - S) - |S|` (smallest, then
/// lexicographically first). Disconnected graphs fail with `S = {}`.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<(bool, Option<WitnessSet>)> {
    require_positive(t)?;
    if g.is_complete() {
        return Ok((true, None));
    }
    if !is_connected(g) {
        return Ok((false, WitnessSet::evaluate(g, VertexSet::EMPTY)));
    }
    let (p, q) = (*t.numer() as i128, *t.denom() as i128);
    let n = g.order();
    let adj = g.adjacency();
    let all = g.vertices();
    let mut buf = [0u64; MAX_VERTICES];
    let mut best: Option<(i128, WitnessSet)> = None;
    for k in 1..=n - 2 {
        let ceiling = p * (n - k) as i128 - q * k as i128;
        if best.as_ref().is_some_and(|(score, _)| ceiling <= *score) {
            break;
        }
        for s in LexSubsets::new(all, k) {
            let count = fill_components(adj, all.difference(s).bits(), &mut buf);
            if count < 2 || !all_vertices_split(adj, s, &buf[..count]) {
                continue;
            }
            let score = p * count as i128 - q * k as i128;
            if best.as_ref().is_none_or(|(b, _)| score > *b) {
                let w = WitnessSet { set: s, cut_size: k, component_count: count, ratio: ratio(k, count) };
                best = Some((score, w));
            }
        }
    }
    match best {
        Some((score, w)) if score > 0 => Ok((false, Some(w))),
        _ => Ok((true, None)),
    }
}

/// The first cutset, by size then lexicographically, with
/// `t * w(G - S) > |S|`; `S = {}` when `g` is disconnected.
pub fn first_violating_cutset(g: &Graph, t: Rational) -> Option<WitnessSet> {
    first_violation_within(g, t, g.vertices())
}

/// As [`first_violating_cutset`], only considering subsets of `universe`.
/// No dominance cut here: the first hit must be first in plain order.
pub(crate) fn first_violation_within(g: &Graph, t: Rational, universe: VertexSet) -> Option<WitnessSet> {
    let adj = g.adjacency();
    let all = g.vertices();
    let mut buf = [0u64; MAX_VERTICES];
    for k in 0..=universe.len() {
        // once t * (n - k) <= k no set of this size or larger can violate
        if k > 0 && scaled_le(t, all.len() - k, k) {
            break;
        }
        for s in LexSubsets::new(universe, k) {
            let count = fill_components(adj, all.difference(s).bits(), &mut buf);
            if count >= 2 && !scaled_le(t, count, k) {
                return Some(WitnessSet { set: s, cut_size: k, component_count: count, ratio: ratio(k, count) });
            }
        }
    }
    None
}

/// Toughness of a claw-free graph as `kappa / 2`.
///
/// With `validate` set the graph is first checked for an induced claw.
pub fn clawfree_toughness(g: &Graph, validate: bool) -> Result<ToughnessValue> {
    if validate {
        if let Some(w) = crate::classes::is_claw_free(g).negative() {
            return Err(Error::Precondition(format!("graph contains the claw {w}")));
        }
    }
    Ok(match vertex_connectivity(g) {
        Connectivity::Complete(_) => ToughnessValue::Infinite,
        Connectivity::Finite(0) => ToughnessValue::Zero,
        Connectivity::Finite(k) => ToughnessValue::Finite(ratio(k, 2)),
    })
}

/// Outcome of checking a claw-free tough set against the structure every
/// tough set of a claw-free graph must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughSetCheck {
    pub witness: WitnessSet,
    /// `|S| / w(G - S) = tau(G)`.
    pub minimizing: bool,
    /// For each vertex of `S`, the number of components it touches.
    pub touched_components: Vec<(usize, usize)>,
    /// For each component, the number of distinct neighbors it has in `S`.
    pub component_neighbors: Vec<usize>,
    /// `2t`, the neighbor count every component must have.
    pub required_neighbors: usize,
    pub holds: bool,
}

pub fn validate_tough_set(g: &Graph, set: VertexSet, t: Rational) -> Result<ToughSetCheck> {
    require_positive(t)?;
    let witness = WitnessSet::evaluate(g, set)
        .ok_or_else(|| Error::InvalidArgument(format!("{set} is not a cutset")))?;
    let tau = toughness(g).value;
    if tau != ToughnessValue::Finite(t) {
        return Err(Error::Precondition(format!("t = {t} but the toughness is {tau}")));
    }
    let doubled = t * Rational::from_integer(2);
    if !doubled.is_integer() {
        return Err(Error::Precondition(format!("2t = {doubled} is not an integer")));
    }
    let required = *doubled.numer() as usize;
    let comps = components(g, set);
    let touched_components: Vec<(usize, usize)> = set
        .iter()
        .map(|v| (v, comps.sets().iter().filter(|c| c.intersects(g.neighbors(v))).count()))
        .collect();
    let component_neighbors: Vec<usize> =
        comps.sets().iter().map(|&c| g.set_neighbors(c).intersection(set).len()).collect();
    let minimizing = witness.ratio == t;
    let holds = minimizing
        && touched_components.iter().all(|&(_, c)| c == 2)
        && component_neighbors.iter().all(|&c| c == required);
    Ok(ToughSetCheck { witness, minimizing, touched_components, component_neighbors, required_neighbors: required, holds })
}
