use std::collections::VecDeque;

use super::{Edge, Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Connected components of `g - removed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    labels: Vec<Option<usize>>,
    sets: Vec<VertexSet>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sets.len()
    }

    /// Component id of `v`, `None` for removed vertices. Ids are dense and
    /// ordered by the smallest vertex of each component.
    pub fn label(&self, v: usize) -> Option<usize> {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Option<usize>] {
        &self.labels
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.len()).collect()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }
}

/// Flood fill over the vertices in `alive`; writes one mask per component
/// into `out` in order of smallest member and returns the count.
pub(crate) fn fill_components(adj: &[u64], alive: u64, out: &mut [u64; MAX_VERTICES]) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= rest & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        out[count] = comp;
        count += 1;
    }
    count
}

pub(crate) fn count_components(adj: &[u64], alive: u64) -> usize {
    let mut buf = [0u64; MAX_VERTICES];
    fill_components(adj, alive, &mut buf)
}

pub fn components(g: &Graph, removed: VertexSet) -> Components {
    let mut buf = [0u64; MAX_VERTICES];
    let alive = g.vertices().difference(removed).bits();
    let count = fill_components(g.adjacency(), alive, &mut buf);
    let sets: Vec<VertexSet> = buf[..count].iter().map(|&m| VertexSet::from_bits(m)).collect();
    let mut labels = vec![None; g.order()];
    for (id, s) in sets.iter().enumerate() {
        for v in s.iter() {
            labels[v] = Some(id);
        }
    }
    Components { labels, sets }
}

pub fn component_count(g: &Graph, removed: VertexSet) -> usize {
    count_components(g.adjacency(), g.vertices().difference(removed).bits())
}

/// The null graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    component_count(g, VertexSet::EMPTY) <= 1
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    bridges: Vec<Edge>,
    cut_vertices: VertexSet,
    blocks: Vec<VertexSet>,
}

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.order();
        let mut ll = LowLink {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            bridges: Vec::new(),
            cut_vertices: VertexSet::EMPTY,
            blocks: Vec::new(),
        };
        for root in 0..n {
            if ll.disc[root] == usize::MAX {
                ll.visit(root, None);
                if g.degree(root) == 0 {
                    ll.blocks.push(VertexSet::singleton(root));
                }
            }
        }
        ll.bridges.sort();
        ll.blocks.sort();
        ll
    }

    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in self.g.neighbors(u).iter() {
            if self.disc[v] == usize::MAX {
                children += 1;
                self.stack.push(Edge::new(u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] > self.disc[u] {
                    self.bridges.push(Edge::new(u, v));
                }
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut_vertices.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    let closing = Edge::new(u, v);
                    while let Some(e) = self.stack.pop() {
                        block = block.union(e.endpoints());
                        if e == closing {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push(Edge::new(u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Bridges in lexicographic order.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    LowLink::run(g).bridges
}

/// Block-cut decomposition of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, in lexicographic order. A block's edges are
    /// exactly the graph edges with both ends inside it.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if g.order() == 0 || !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let ll = LowLink::run(g);
    Ok(BlockDecomposition { blocks: ll.blocks, cut_vertices: ll.cut_vertices })
}

/// Vertex connectivity, with complete graphs marked separately since they
/// have no vertex cut at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    /// `K_n`; carries the conventional value `n - 1`.
    Complete(usize),
    /// Size of a minimum vertex cut, 0 for disconnected graphs.
    Finite(usize),
}

impl Connectivity {
    pub fn value(self) -> usize {
        match self {
            Connectivity::Complete(k) | Connectivity::Finite(k) => k,
        }
    }

    pub fn is_complete(self) -> bool {
        matches!(self, Connectivity::Complete(_))
    }
}

/// Minimum over nonadjacent pairs of the number of internally disjoint
/// paths, each computed as a unit vertex-capacity max flow.
pub fn vertex_connectivity(g: &Graph) -> Connectivity {
    let n = g.order();
    if g.is_complete() {
        return Connectivity::Complete(n.saturating_sub(1));
    }
    if !is_connected(g) {
        return Connectivity::Finite(0);
    }
    let mut flow = SplitNetwork::new(g);
    let mut best = g.min_degree().unwrap_or(0);
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(flow.local_connectivity(s, t, best));
            }
        }
    }
    Connectivity::Finite(best)
}

/// Residual network where each vertex `v` is split into `2v -> 2v+1`.
struct SplitNetwork {
    nodes: usize,
    base: Vec<Vec<i32>>,
    residual: Vec<Vec<i32>>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let nodes = 2 * n;
        let inf = n as i32 + 1;
        let mut base = vec![vec![0; nodes]; nodes];
        let mut out = vec![Vec::new(); nodes];
        let mut connect = |a: usize, b: usize, cap: i32, base: &mut Vec<Vec<i32>>| {
            base[a][b] += cap;
            out[a].push(b);
            out[b].push(a);
        };
        for v in 0..n {
            connect(2 * v, 2 * v + 1, 1, &mut base);
        }
        for e in g.edges() {
            connect(2 * e.u + 1, 2 * e.v, inf, &mut base);
            connect(2 * e.v + 1, 2 * e.u, inf, &mut base);
        }
        SplitNetwork { nodes, residual: base.clone(), base, out }
    }

    /// Number of internally disjoint s-t paths, stopping once `limit` is hit.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        for (r, b) in self.residual.iter_mut().zip(&self.base) {
            r.copy_from_slice(b);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut paths = 0;
        let mut pred = vec![usize::MAX; self.nodes];
        while paths < limit {
            pred.fill(usize::MAX);
            pred[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if a == sink {
                    break;
                }
                for &b in &self.out[a] {
                    if pred[b] == usize::MAX && self.residual[a][b] > 0 {
                        pred[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = pred[b];
                self.residual[a][b] -= 1;
                self.residual[b][a] += 1;
                b = a;
            }
            paths += 1;
        }
        paths
    }
}

/// Vertices whose neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&v| g.is_clique(g.neighbors(v))).collect()
}
