//! Undirected simple graphs on dense 0-based vertex ids.

mod change;
mod dimacs;
mod generate;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use change::{ChangeEffect, GraphChange};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use generate::{generate, generate_with, Generated, GraphFamily, SplitPartition};

pub type Vertex = usize;

/// An undirected simple graph with vertices `0..n`.
///
/// Neighborhoods are kept as ordered sets, so membership queries are
/// `O(log Δ)` and iteration is in increasing id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.debug_validate();
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self { adj }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Star on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|nbrs| nbrs.contains(&v))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Maximum degree Δ; 0 for the empty and edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn is_clique<'a, I>(&self, vertices: I) -> bool
    where
        I: IntoIterator<Item = &'a Vertex>,
        I::IntoIter: Clone,
    {
        let iter = vertices.into_iter();
        let mut rest = iter.clone();
        for u in iter {
            rest.next();
            if rest.clone().any(|v| v != u && !self.has_edge(*u, *v)) {
                return false;
            }
        }
        true
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && !self.adj[v].contains(&u))
                    .collect()
            })
            .collect();
        Self { adj }
    }

    /// Subgraph induced by `keep`. New ids follow the increasing order of
    /// the kept old ids; the returned map sends new id to old id.
    pub fn induced_subgraph<'a, I>(&self, keep: I) -> Result<(Self, Vec<Vertex>)>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut kept = BTreeSet::new();
        for &v in keep {
            self.check_vertex(v)?;
            kept.insert(v);
        }
        let new_to_old: Vec<Vertex> = kept.into_iter().collect();
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let adj = new_to_old
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&u| Some(old_to_new[u]).filter(|&x| x != usize::MAX))
                    .collect()
            })
            .collect();
        Ok((Self { adj }, new_to_old))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    /// Checks the simple-graph invariants: no loops, symmetric adjacency,
    /// all neighbor ids in range.
    pub fn validate(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(v, nbrs)| {
            nbrs.iter()
                .all(|&u| u < n && u != v && self.adj[u].contains(&v))
        })
    }

    #[inline]
    pub(crate) fn debug_validate(&self) {
        debug_assert!(self.validate(), "graph invariant violated");
    }
}

/// Every labeled graph on `n` vertices, in order of the edge bitmask over
/// the pairs `(0,1), (0,2), …, (n-2,n-1)`. There are `2^(n(n-1)/2)` of them,
/// so this is only meant for `n <= 6` or so.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    })
}
