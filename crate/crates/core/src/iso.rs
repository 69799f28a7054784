//! Canonical labelling for small graphs.
//!
//! Vertices are first split into an ordered equitable partition by iterated
//! degree refinement; the cell order is an isomorphism invariant. The
//! canonical form is then the lexicographically least sequence of
//! "adjacency to earlier positions" rows over all labellings that place each
//! cell in its block of positions. Because each row only depends on the
//! positions already chosen, the search prunes any branch whose prefix is
//! already larger than the incumbent.

use crate::graph::Graph;
use crate::set::Members;

/// A canonical form together with the labelling that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    /// The graph whose labelling realises this canonical form.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut adj = vec![0u64; n];
        for (i, &row) in self.rows.iter().enumerate() {
            for j in Members(row) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Graph::from_adjacency(adj)
    }
}

/// Ordered equitable partition: `colour[v]` is the index of v's cell.
fn refine(graph: &Graph) -> Vec<usize> {
    let n = graph.order();
    let mut colour: Vec<usize> = vec![0; n];
    let mut cells = 1usize;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; cells];
                for w in Members(graph.adjacency_bits(v)) {
                    counts[colour[w]] += 1;
                }
                (colour[v], counts)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys.iter().map(|k| sorted.binary_search(k).expect("key present")).collect();
        let changed = sorted.len() != cells;
        colour = next;
        cells = sorted.len();
        if !changed {
            return colour;
        }
    }
}

struct Search<'a> {
    graph: &'a Graph,
    /// Cell required at each position.
    slot_cell: Vec<usize>,
    colour: Vec<usize>,
    perm: Vec<usize>,
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// `tied`: the current prefix equals the incumbent's prefix (or there is
    /// no incumbent yet).
    fn run(&mut self, pos: usize, used: u64, mut tied: bool) {
        let n = self.graph.order();
        if pos == n {
            if !tied || self.best.is_none() {
                self.best = Some(self.rows.clone());
                self.best_perm = self.perm.clone();
            }
            return;
        }
        let cell = self.slot_cell[pos];
        for v in 0..n {
            if used >> v & 1 == 1 || self.colour[v] != cell {
                continue;
            }
            let adj = self.graph.adjacency_bits(v);
            let row = (0..pos).fold(0u64, |acc, j| acc | ((adj >> self.perm[j]) & 1) << j);
            let mut now_tied = false;
            if tied {
                if let Some(best) = &self.best {
                    match row.cmp(&best[pos]) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Equal => now_tied = true,
                        std::cmp::Ordering::Less => {}
                    }
                }
            }
            self.perm[pos] = v;
            self.rows[pos] = row;
            self.run(pos + 1, used | 1 << v, now_tied);
            // any completed child leaves an incumbent sharing this prefix
            tied = true;
        }
    }
}

/// Canonical form and a permutation `perm` with `perm[position] = original vertex`.
pub fn canonical_labelling(graph: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = graph.order();
    let colour = refine(graph);
    let mut slot_cell: Vec<usize> = colour.clone();
    slot_cell.sort_unstable();
    let mut search =
        Search { graph, slot_cell, colour, perm: vec![0; n], rows: vec![0; n], best: None, best_perm: Vec::new() };
    search.run(0, 0, true);
    let rows = search.best.unwrap_or_default();
    (CanonicalForm { order: n, rows }, search.best_perm)
}

pub fn canonical_form(graph: &Graph) -> CanonicalForm {
    canonical_labelling(graph).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
