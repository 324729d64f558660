//! Exponential exact computations for small graphs.
//!
//! Nothing outside this module and the test suites depends on it; the fast
//! algorithms are checked against it, never built on it.

use std::collections::HashSet;

use crate::coloring::{is_grundy_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Size caps above which the oracles refuse to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Γ by enumeration of vertex orderings.
    pub max_n_orderings: usize,
    /// α, ω and induced-hole search by subset enumeration.
    pub max_n_subsets: usize,
    /// χ by backtracking.
    pub max_n_coloring: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_n_orderings: 9,
            max_n_subsets: 20,
            max_n_coloring: 12,
        }
    }
}

impl OracleLimits {
    /// Same cap for every oracle.
    pub fn uniform(cap: usize) -> Self {
        Self {
            max_n_orderings: cap,
            max_n_subsets: cap,
            max_n_coloring: cap,
        }
    }
}

/// Hard cap for [`enumerate_grundy_colorings`], which walks all `n^n`
/// candidate colorings.
pub const MAX_N_ENUMERATE_COLORINGS: usize = 6;

// subset oracles pack vertex sets into a u64
const MASK_BITS: usize = 64;

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::OracleCapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

/// Γ together with an ordering whose first-fit coloring attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrundyWitness {
    pub gamma: usize,
    /// Lexicographically smallest ordering attaining `gamma`.
    pub order: Vec<Vertex>,
}

/// How [`grundy_number_with`] walks the orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundySearch {
    /// Every one of the `n!` orderings.
    Exhaustive,
    /// Skips prefixes that reproduce an already-explored partial coloring,
    /// and branches that cannot beat the best count so far.
    Pruned,
}

/// Γ(G), the largest number of colors first-fit can be made to use.
///
/// Uses [`GrundySearch::Pruned`] for `n >= 8` and plain enumeration below.
pub fn grundy_number_exact(g: &Graph, limits: &OracleLimits) -> Result<GrundyWitness> {
    let search = if g.n() >= 8 {
        GrundySearch::Pruned
    } else {
        GrundySearch::Exhaustive
    };
    grundy_number_with(g, limits, search)
}

pub fn grundy_number_with(
    g: &Graph,
    limits: &OracleLimits,
    search: GrundySearch,
) -> Result<GrundyWitness> {
    let n = g.n();
    check_cap(
        "Grundy number enumeration",
        n,
        limits.max_n_orderings.min(MASK_BITS - 1),
    )?;
    let mut state = OrderSearch {
        g,
        search,
        colors: vec![0; n],
        order: Vec::with_capacity(n),
        best: GrundyWitness {
            gamma: 0,
            order: (0..n).collect(),
        },
        seen: HashSet::new(),
        degree_cap: g.vertices().map(|v| g.degree(v) + 1).collect(),
    };
    state.descend(0);
    Ok(state.best)
}

struct OrderSearch<'a> {
    g: &'a Graph,
    search: GrundySearch,
    colors: Vec<u8>,
    order: Vec<Vertex>,
    best: GrundyWitness,
    seen: HashSet<Vec<u8>>,
    degree_cap: Vec<usize>,
}

impl OrderSearch<'_> {
    // DFS visits orderings lexicographically and only replaces the best on a
    // strict improvement, so the kept witness is the smallest one.
    fn descend(&mut self, current_max: usize) {
        let n = self.g.n();
        if self.order.len() == n {
            if current_max > self.best.gamma {
                self.best = GrundyWitness {
                    gamma: current_max,
                    order: self.order.clone(),
                };
            }
            return;
        }
        if self.search == GrundySearch::Pruned {
            let reachable = self
                .g
                .vertices()
                .filter(|&v| self.colors[v] == 0)
                .map(|v| self.degree_cap[v])
                .max()
                .unwrap_or(0)
                .max(current_max);
            if reachable <= self.best.gamma {
                return;
            }
            // the future depends only on which vertices hold which colors
            if !self.seen.insert(self.colors.clone()) {
                return;
            }
        }
        for v in 0..n {
            if self.colors[v] != 0 {
                continue;
            }
            let c = self.first_free(v);
            self.colors[v] = c as u8;
            self.order.push(v);
            self.descend(current_max.max(c));
            self.order.pop();
            self.colors[v] = 0;
        }
    }

    fn first_free(&self, v: Vertex) -> usize {
        let mut taken = 0u64;
        for &u in self.g.neighbors(v) {
            taken |= 1 << self.colors[u];
        }
        (!(taken | 1)).trailing_zeros() as usize
    }
}

/// χ(G) by backtracking over k = ω-lower-bound, ω+1, …
pub fn chromatic_number_exact(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    let n = g.n();
    check_cap("chromatic number", n, limits.max_n_coloring)?;
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = greedy_clique(g, &order).max(1);
    let mut colors = vec![0usize; n];
    for k in lower..=n {
        if try_color(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn greedy_clique(g: &Graph, order: &[Vertex]) -> usize {
    let mut clique: Vec<Vertex> = Vec::new();
    for &v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

fn try_color(
    g: &Graph,
    order: &[Vertex],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // a fresh color is interchangeable with any other fresh color
    for c in 1..=k.min(used + 1) {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if try_color(g, order, idx + 1, k, used.max(c), colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

/// α(G), the size of a largest independent set.
pub fn independence_number_exact(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    let n = g.n();
    check_cap(
        "independence number",
        n,
        limits.max_n_subsets.min(MASK_BITS - 1),
    )?;
    let adj = adjacency_masks(g);
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut best = 0;
    max_independent(&adj, all, 0, &mut best);
    Ok(best)
}

fn max_independent(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    max_independent(adj, rest & !adj[v], size + 1, best);
    max_independent(adj, rest, size, best);
}

/// ω(G), the size of a largest clique.
pub fn clique_number_exact(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    independence_number_exact(&g.complement(), limits)
}

/// Chordality straight from the definition: no vertex subset of size at
/// least four induces a cycle.
pub fn is_chordal_by_definition(g: &Graph, limits: &OracleLimits) -> Result<bool> {
    let n = g.n();
    check_cap(
        "induced cycle search",
        n,
        limits.max_n_subsets.min(MASK_BITS - 1),
    )?;
    let adj = adjacency_masks(g);
    let subsets = if n == 0 { 0u64 } else { 1u64 << n };
    Ok(!(0..subsets).any(|s| s.count_ones() >= 4 && induces_cycle(&adj, s)))
}

/// A subset induces a cycle iff it is connected and 2-regular.
fn induces_cycle(adj: &[u64], subset: u64) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        if (adj[v] & subset).count_ones() != 2 {
            return false;
        }
        rest &= rest - 1;
    }
    let mut reached = subset & subset.wrapping_neg();
    loop {
        let mut grown = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            grown |= adj[v] & subset;
            frontier &= frontier - 1;
        }
        if grown == reached {
            return reached == subset;
        }
        reached = grown;
    }
}

/// Every Grundy coloring of `g` with its number of colors, found by testing
/// all `n^n` assignments against the definition. Independent of first-fit.
pub fn enumerate_grundy_colorings(g: &Graph) -> Result<Vec<(Coloring, usize)>> {
    let n = g.n();
    check_cap("Grundy coloring enumeration", n, MAX_N_ENUMERATE_COLORINGS)?;
    let mut found = Vec::new();
    let mut colors = vec![1usize; n];
    loop {
        let candidate = Coloring::new(colors.clone()).expect("colors start at 1");
        if is_grundy_coloring(g, &candidate)? {
            let k = candidate.num_colors();
            found.push((candidate, k));
        }
        // odometer over {1..n}^n
        let mut i = 0;
        loop {
            if i == n {
                return Ok(found);
            }
            if colors[i] < n {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn grundy_complete_graphs() {
        for n in 0..=7 {
            assert_eq!(
                grundy_number_exact(&Graph::complete(n), &lim())
                    .unwrap()
                    .gamma,
                n
            );
        }
    }

    #[test]
    fn grundy_star_and_path() {
        assert_eq!(
            grundy_number_exact(&Graph::star(5), &lim()).unwrap().gamma,
            2
        );
        let p4 = grundy_number_exact(&Graph::path(4), &lim()).unwrap();
        assert_eq!(p4.gamma, 3);
        // 0,1,2,3 uses two colors; 0,1,3,2 ends with 2 seeing colors 2 and 1
        assert_eq!(p4.order, vec![0, 1, 3, 2]);
        let c = crate::coloring::first_fit_color(&Graph::path(4), &p4.order).unwrap();
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn grundy_cap() {
        let err = grundy_number_exact(&Graph::path(10), &lim()).unwrap_err();
        assert_eq!(
            err,
            Error::OracleCapExceeded {
                what: "Grundy number enumeration",
                n: 10,
                cap: 9
            }
        );
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number_exact(&Graph::new(4), &lim()).unwrap(), 1);
        assert_eq!(chromatic_number_exact(&Graph::new(0), &lim()).unwrap(), 0);
        assert_eq!(chromatic_number_exact(&Graph::cycle(5), &lim()).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&Graph::cycle(6), &lim()).unwrap(), 2);
        assert_eq!(
            chromatic_number_exact(&Graph::complete(6), &lim()).unwrap(),
            6
        );
        assert!(chromatic_number_exact(&Graph::path(13), &lim()).is_err());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(
            independence_number_exact(&Graph::complete(4), &lim()).unwrap(),
            1
        );
        assert_eq!(
            independence_number_exact(&Graph::new(5), &lim()).unwrap(),
            5
        );
        assert_eq!(
            independence_number_exact(&Graph::cycle(5), &lim()).unwrap(),
            2
        );
        assert_eq!(
            independence_number_exact(&Graph::new(0), &lim()).unwrap(),
            0
        );
        assert_eq!(
            independence_number_exact(&Graph::path(20), &lim()).unwrap(),
            10
        );
        assert!(independence_number_exact(&Graph::path(21), &lim()).is_err());
        assert_eq!(clique_number_exact(&Graph::cycle(5), &lim()).unwrap(), 2);
    }

    #[test]
    fn definitional_chordality() {
        assert!(!is_chordal_by_definition(&Graph::cycle(4), &lim()).unwrap());
        assert!(is_chordal_by_definition(&Graph::complete(4), &lim()).unwrap());
        assert!(is_chordal_by_definition(&Graph::new(0), &lim()).unwrap());
        // C5 with chord 0-2 still contains the hole 0-2-3-4
        let one_chord =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_chordal_by_definition(&one_chord, &lim()).unwrap());
        let two_chords =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap();
        assert!(is_chordal_by_definition(&two_chords, &lim()).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let k2 = enumerate_grundy_colorings(&Graph::complete(2)).unwrap();
        let mut found: Vec<Vec<usize>> = k2.iter().map(|(c, _)| c.as_slice().to_vec()).collect();
        found.sort();
        assert_eq!(found, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(k2.iter().map(|&(_, k)| k).max(), Some(2));

        let e2 = enumerate_grundy_colorings(&Graph::new(2)).unwrap();
        assert_eq!(e2.len(), 1);
        assert_eq!(e2[0].0.as_slice(), &[1, 1]);

        let p4 = enumerate_grundy_colorings(&Graph::path(4)).unwrap();
        assert_eq!(p4.iter().map(|&(_, k)| k).max(), Some(3));

        assert!(enumerate_grundy_colorings(&Graph::path(7)).is_err());
    }

    #[test]
    fn pruned_matches_exhaustive_small() {
        for g in crate::graph::all_labeled_graphs(5) {
            let a = grundy_number_with(&g, &lim(), GrundySearch::Exhaustive).unwrap();
            let b = grundy_number_with(&g, &lim(), GrundySearch::Pruned).unwrap();
            assert_eq!(a, b, "{g:?}");
        }
    }
}
