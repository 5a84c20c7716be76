//! Exact maximal-clique enumeration (Bron–Kerbosch with Tomita pivoting)
//! over bitset adjacency rows, with an optional count/time budget.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

/// Undirected simple graph on vertices `0..n` stored as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    rows: Vec<FixedBitSet>,
}

impl Adjacency {
    pub fn new(n: usize) -> Self {
        Adjacency {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the undirected edge `{u, v}`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// True if `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.is_adjacent(u, v)))
    }

    /// True if `vertices` is a clique that no outside vertex extends.
    pub fn is_maximal_clique(&self, vertices: &[usize]) -> bool {
        self.is_clique(vertices)
            && (0..self.len())
                .filter(|v| !vertices.contains(v))
                .all(|v| vertices.iter().any(|&u| !self.is_adjacent(u, v)))
    }
}

/// Limits on a clique search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_cliques: Option<usize>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

/// Cliques found by a search, each sorted ascending, listed in lexicographic
/// order. `complete` is false when the budget cut the search short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<Vec<usize>>,
    pub complete: bool,
}

/// Every maximal clique of `graph`, within `budget`.
pub fn maximal_cliques(graph: &Adjacency, budget: Budget) -> CliqueList {
    let mut found = Vec::new();
    let complete = run(graph, budget, false, |clique| found.push(clique.to_vec()));
    finish(found, complete)
}

/// The maximal cliques of largest cardinality.
///
/// Branches that cannot reach the best size seen so far are pruned, so the
/// budget counts only cliques that were at least as large as the running
/// best when found.
pub fn maximum_cliques(graph: &Adjacency, budget: Budget) -> CliqueList {
    let mut best: Vec<Vec<usize>> = Vec::new();
    let complete = run(graph, budget, true, |clique| {
        let best_len = best.first().map_or(0, Vec::len);
        if clique.len() > best_len {
            best.clear();
        }
        if clique.len() >= best_len {
            best.push(clique.to_vec());
        }
    });
    finish(best, complete)
}

fn finish(mut cliques: Vec<Vec<usize>>, complete: bool) -> CliqueList {
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    CliqueList { cliques, complete }
}

struct Search<'g, F> {
    graph: &'g Adjacency,
    report: F,
    prune: bool,
    best: usize,
    reported: usize,
    max_cliques: Option<usize>,
    deadline: Option<Instant>,
    steps: u64,
    stopped: bool,
}

/// Returns true when the search ran to completion.
fn run<F: FnMut(&[usize])>(graph: &Adjacency, budget: Budget, prune: bool, report: F) -> bool {
    let n = graph.len();
    if n == 0 {
        return true;
    }
    let mut s = Search {
        graph,
        report,
        prune,
        best: 0,
        reported: 0,
        max_cliques: budget.max_cliques,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
        steps: 0,
        stopped: false,
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    s.expand(&mut r, p, x);
    !s.stopped
}

impl<F: FnMut(&[usize])> Search<'_, F> {
    fn out_of_time(&mut self) -> bool {
        self.steps += 1;
        if let Some(deadline) = self.deadline {
            if self.steps.is_multiple_of(64) && Instant::now() >= deadline {
                self.stopped = true;
            }
        }
        self.stopped
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if self.out_of_time() {
            return;
        }
        let p_count = p.count_ones(..);
        if p_count == 0 {
            if x.is_clear() {
                self.emit(r);
            }
            return;
        }
        if self.prune && r.len() + p_count < self.best {
            return;
        }
        // pivot: the vertex of P ∪ X with the most neighbours in P
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection_count(self.graph.neighbors(u)), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let mut branch = p.clone();
        branch.difference_with(self.graph.neighbors(pivot));
        for v in branch.ones() {
            let nv = self.graph.neighbors(v);
            let mut next_p = p.clone();
            next_p.intersect_with(nv);
            let mut next_x = x.clone();
            next_x.intersect_with(nv);
            r.push(v);
            self.expand(r, next_p, next_x);
            r.pop();
            if self.stopped {
                return;
            }
            p.set(v, false);
            x.insert(v);
        }
    }

    fn emit(&mut self, r: &[usize]) {
        if self.prune && r.len() < self.best {
            return;
        }
        if self.max_cliques.is_some_and(|m| self.reported >= m) {
            self.stopped = true;
            return;
        }
        self.reported += 1;
        self.best = self.best.max(r.len());
        (self.report)(r);
    }
}
