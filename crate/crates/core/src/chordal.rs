//! Simplicial vertices, perfect elimination orderings and chordal
//! recognition by repeated simplicial elimination.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex sequence `v1 … vn` claimed to be a perfect elimination
/// ordering: each `vi` is simplicial in the subgraph induced by
/// `{vi, …, vn}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EliminationOrder(Vec<Vertex>);

impl EliminationOrder {
    pub fn new(order: Vec<Vertex>) -> Self {
        Self(order)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Position of each vertex in the order. Fails unless the order is a
    /// permutation of `0..n`.
    pub fn positions(&self, n: usize) -> Result<Vec<usize>> {
        permutation_positions(&self.0, n)
    }
}

impl From<Vec<Vertex>> for EliminationOrder {
    fn from(order: Vec<Vertex>) -> Self {
        Self(order)
    }
}

/// Whitespace-separated 1-based ids, matching DIMACS numbering.
impl fmt::Display for EliminationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

pub(crate) fn permutation_positions(order: &[Vertex], n: usize) -> Result<Vec<usize>> {
    let fail = |reason: String| Error::NotAPermutation { n, reason };
    if order.len() != n {
        return Err(fail(format!("length {} != {n}", order.len())));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(fail(format!("vertex {v} out of range")));
        }
        if pos[v] != usize::MAX {
            return Err(fail(format!("vertex {v} repeated")));
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// The elimination got stuck: `residual` is a nonempty vertex set whose
/// induced subgraph has no simplicial vertex.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("graph is not chordal: {} vertices remain with no simplicial vertex", residual.len())]
pub struct NotChordal {
    pub residual: Vec<Vertex>,
}

/// A maximum clique and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub members: Vec<Vertex>,
}

/// True iff the neighborhood of `v` is a clique. Isolated and degree-one
/// vertices are simplicial.
pub fn is_simplicial(g: &Graph, v: Vertex) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(neighborhood_is_clique(g.neighbors(v), |a, b| {
        g.has_edge(a, b)
    }))
}

fn neighborhood_is_clique(
    nbrs: &BTreeSet<Vertex>,
    adjacent: impl Fn(Vertex, Vertex) -> bool,
) -> bool {
    let mut rest = nbrs.iter();
    while let Some(&a) = rest.next() {
        if rest.clone().any(|&b| !adjacent(a, b)) {
            return false;
        }
    }
    true
}

/// All simplicial vertices, in increasing id order.
pub fn simplicial_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| neighborhood_is_clique(g.neighbors(v), |a, b| g.has_edge(a, b)))
        .collect()
}

/// Repeatedly removes the smallest-id simplicial vertex of the remaining
/// graph.
///
/// Removing a vertex never makes a simplicial vertex non-simplicial, so
/// only the non-simplicial neighbors of the removed vertex are rechecked.
pub fn perfect_elimination_order(g: &Graph) -> Result<EliminationOrder, NotChordal> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = g.vertices().map(|v| g.neighbors(v).clone()).collect();
    let mut simplicial = vec![false; n];
    let mut ready = BTreeSet::new();
    for v in g.vertices() {
        if neighborhood_is_clique(&adj[v], |a, b| adj[a].contains(&b)) {
            simplicial[v] = true;
            ready.insert(v);
        }
    }

    let mut order = Vec::with_capacity(n);
    let mut removed = vec![false; n];
    while let Some(v) = ready.pop_first() {
        order.push(v);
        removed[v] = true;
        let nbrs = std::mem::take(&mut adj[v]);
        for &u in &nbrs {
            adj[u].remove(&v);
        }
        for u in nbrs {
            if !simplicial[u] && neighborhood_is_clique(&adj[u], |a, b| adj[a].contains(&b)) {
                simplicial[u] = true;
                ready.insert(u);
            }
        }
    }

    if order.len() == n {
        Ok(EliminationOrder(order))
    } else {
        Err(NotChordal {
            residual: g.vertices().filter(|&v| !removed[v]).collect(),
        })
    }
}

/// Peels every simplicial vertex of the remaining graph at once, round by
/// round. Concatenating the rounds gives a perfect elimination ordering.
pub fn elimination_waves(g: &Graph) -> Result<Vec<Vec<Vertex>>, NotChordal> {
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut waves = Vec::new();
    while !alive.is_empty() {
        let wave: Vec<Vertex> = alive
            .iter()
            .copied()
            .filter(|&v| {
                let nbrs: BTreeSet<Vertex> = g.neighbors(v).intersection(&alive).copied().collect();
                neighborhood_is_clique(&nbrs, |a, b| g.has_edge(a, b))
            })
            .collect();
        if wave.is_empty() {
            return Err(NotChordal {
                residual: alive.into_iter().collect(),
            });
        }
        for v in &wave {
            alive.remove(v);
        }
        waves.push(wave);
    }
    Ok(waves)
}

/// True iff, for every `i`, the neighbors of `order[i]` that come later in
/// the order form a clique.
pub fn verify_peo(g: &Graph, order: &EliminationOrder) -> Result<bool> {
    let pos = order.positions(g.n())?;
    Ok(order.as_slice().iter().all(|&v| {
        let later: BTreeSet<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        neighborhood_is_clique(&later, |a, b| g.has_edge(a, b))
    }))
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_ok()
}

/// Split graphs are exactly those where both `g` and its complement are
/// chordal.
pub fn is_split(g: &Graph) -> bool {
    is_chordal(g) && is_chordal(&g.complement())
}

/// Maximum clique of a chordal graph: the largest set `{v} ∪ later(v)`
/// along a perfect elimination ordering.
pub fn max_clique_chordal(g: &Graph) -> Result<Clique, NotChordal> {
    let order = perfect_elimination_order(g)?;
    let pos = order
        .positions(g.n())
        .expect("elimination produces a permutation");
    let mut best: Vec<Vertex> = Vec::new();
    for &v in order.as_slice() {
        let later = g.neighbors(v).iter().filter(|&&u| pos[u] > pos[v]).count();
        if later + 1 > best.len() {
            best = std::iter::once(v)
                .chain(g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]))
                .collect();
        }
    }
    best.sort_unstable();
    debug_assert!(g.is_clique(&best));
    Ok(Clique {
        size: best.len(),
        members: best,
    })
}
