//! Fixed-size subsets in lexicographic order of their sorted member lists.

use crate::graph::VertexSet;

/// `k`-subsets of `universe`, lexicographically: `{0,1,2}, {0,1,3}, ..,
/// {0,2,3}, ..`. Searches that keep the first hit in (size, this order)
/// produce the tie-broken witness directly.
pub struct LexSubsets {
    items: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl LexSubsets {
    pub fn new(universe: VertexSet, k: usize) -> Self {
        let items = universe.to_vec();
        let done = k > items.len();
        LexSubsets { idx: (0..k).collect(), items, done }
    }
}

impl Iterator for LexSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.items[i]).collect();
        let k = self.idx.len();
        let n = self.items.len();
        // advance the rightmost index that still has room
        match (0..k).rev().find(|&i| self.idx[i] < n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// All subsets of `universe` by increasing size, lexicographic within a size.
pub fn subsets_by_size(universe: VertexSet) -> impl Iterator<Item = VertexSet> {
    (0..=universe.len()).flat_map(move |k| LexSubsets::new(universe, k))
}
