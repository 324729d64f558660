use std::collections::BTreeSet;

use rand::seq::IteratorRandom;
use rand::Rng;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// An atomic topology mutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphChange {
    /// Appends a vertex with id `n` adjacent to the listed vertices.
    AddVertex {
        neighbors: Vec<Vertex>,
    },
    /// Removes a vertex and its incident edges. The last vertex is moved
    /// into the freed slot so ids stay dense.
    RemoveVertex(Vertex),
    AddEdge(Vertex, Vertex),
    RemoveEdge(Vertex, Vertex),
}

/// How ids moved as a result of a change.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChangeEffect {
    /// Id of the vertex created by `AddVertex`.
    pub added: Option<Vertex>,
    /// `(old, new)` when `RemoveVertex` relabeled the former last vertex.
    pub moved: Option<(Vertex, Vertex)>,
}

impl ChangeEffect {
    /// Maps a pre-change id to its post-change id, or `None` if the vertex
    /// was removed.
    pub fn remap(&self, removed: Option<Vertex>, v: Vertex) -> Option<Vertex> {
        if Some(v) == removed {
            return None;
        }
        match self.moved {
            Some((old, new)) if old == v => Some(new),
            _ => Some(v),
        }
    }
}

impl Graph {
    /// Checks `change` against this graph without mutating it.
    pub fn validate_change(&self, change: &GraphChange) -> Result<()> {
        match *change {
            GraphChange::AddVertex { ref neighbors } => {
                neighbors.iter().try_for_each(|&u| self.check_vertex(u))
            }
            GraphChange::RemoveVertex(v) => self.check_vertex(v),
            GraphChange::AddEdge(u, v) => {
                self.check_vertex(u)?;
                self.check_vertex(v)?;
                if u == v {
                    Err(Error::SelfLoop(u))
                } else if self.has_edge(u, v) {
                    Err(Error::DuplicateEdge(u, v))
                } else {
                    Ok(())
                }
            }
            GraphChange::RemoveEdge(u, v) => {
                self.check_vertex(u)?;
                self.check_vertex(v)?;
                if self.has_edge(u, v) {
                    Ok(())
                } else {
                    Err(Error::MissingEdge(u, v))
                }
            }
        }
    }

    /// Applies `change` in place. On error the graph is left untouched.
    pub fn apply_change(&mut self, change: &GraphChange) -> Result<ChangeEffect> {
        self.validate_change(change)?;
        let mut effect = ChangeEffect::default();
        match *change {
            GraphChange::AddVertex { ref neighbors } => {
                let v = self.n();
                let nbrs: BTreeSet<Vertex> = neighbors.iter().copied().collect();
                for &u in &nbrs {
                    self.adj[u].insert(v);
                }
                self.adj.push(nbrs);
                effect.added = Some(v);
            }
            GraphChange::RemoveVertex(v) => {
                let nbrs = std::mem::take(&mut self.adj[v]);
                for u in nbrs {
                    self.adj[u].remove(&v);
                }
                let last = self.n() - 1;
                if v != last {
                    let moved = std::mem::take(&mut self.adj[last]);
                    for &u in &moved {
                        self.adj[u].remove(&last);
                        self.adj[u].insert(v);
                    }
                    self.adj[v] = moved;
                    effect.moved = Some((last, v));
                }
                self.adj.pop();
            }
            GraphChange::AddEdge(u, v) => self.add_edge_unchecked(u, v),
            GraphChange::RemoveEdge(u, v) => self.remove_edge_unchecked(u, v),
        }
        self.debug_validate();
        Ok(effect)
    }

    /// Draws a change that is valid for this graph: one of the four kinds
    /// uniformly, falling back to `AddVertex` when the drawn kind has no
    /// valid instance (no edges to remove, complete graph, single vertex).
    /// New vertices get each existing vertex as a neighbor with probability
    /// `2 / n`.
    pub fn random_change<R: Rng + ?Sized>(&self, rng: &mut R) -> GraphChange {
        let n = self.n();
        match rng.random_range(0..4) {
            0 if self.edge_count() > 0 => {
                let (u, v) = self.edges().choose(rng).expect("graph has an edge");
                GraphChange::RemoveEdge(u, v)
            }
            1 if self.edge_count() < n * n.saturating_sub(1) / 2 => {
                let (u, v) = self
                    .vertices()
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !self.has_edge(u, v))
                    .choose(rng)
                    .expect("graph has a non-edge");
                GraphChange::AddEdge(u, v)
            }
            2 if n > 1 => GraphChange::RemoveVertex(rng.random_range(0..n)),
            _ => {
                let p = if n == 0 {
                    0.0
                } else {
                    (2.0 / n as f64).min(1.0)
                };
                let neighbors = self.vertices().filter(|_| rng.random_bool(p)).collect();
                GraphChange::AddVertex { neighbors }
            }
        }
    }

    /// Non-mutating form of [`Graph::apply_change`].
    pub fn with_change(&self, change: &GraphChange) -> Result<(Graph, ChangeEffect)> {
        let mut g = self.clone();
        let effect = g.apply_change(change)?;
        Ok((g, effect))
    }
}
