//! First-fit coloring, Grundy verification, bound reports and repair of a
//! Grundy coloring after a topology change.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::chordal::{perfect_elimination_order, permutation_positions, EliminationOrder};
use crate::error::{Error, Result};
use crate::graph::{ChangeEffect, Graph, GraphChange, Vertex};
use crate::oracle::{self, OracleLimits};

/// A total vertex coloring with 1-based colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(v));
        }
        Ok(Self { colors })
    }

    /// The constant coloring `1` on `n` vertices.
    pub fn uniform(n: usize) -> Self {
        Self { colors: vec![1; n] }
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// `v <vertex> <color>` per line, 1-based vertex ids.
    pub fn to_solution_lines(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            writeln!(out, "v {} {}", v + 1, c).unwrap();
        }
        out
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::PartialColoring {
                got: self.len(),
                n: g.n(),
            })
        }
    }
}

/// Colors vertices in `order`, each with the least positive color not
/// already used by one of its colored neighbors.
pub fn first_fit_color(g: &Graph, order: &[Vertex]) -> Result<Coloring> {
    let n = g.n();
    permutation_positions(order, n)?;
    let mut colors = vec![0usize; n];
    // stamp[c] == step + 1 marks color c as taken around the current vertex
    let mut stamp = vec![0usize; n + 2];
    for (step, &v) in order.iter().enumerate() {
        let mark = step + 1;
        for &u in g.neighbors(v) {
            let c = colors[u];
            if c != 0 {
                stamp[c] = mark;
            }
        }
        let mut c = 1;
        while stamp[c] == mark {
            c += 1;
        }
        colors[v] = c;
    }
    Ok(Coloring { colors })
}

/// Which way the perfect elimination ordering is walked when coloring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Simplicial vertices first: the ordering exactly as eliminated.
    #[default]
    Peo,
    /// Last eliminated first. First-fit along this order uses ω(G) colors.
    ReversePeo,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "peo" => Ok(Direction::Peo),
            "reverse-peo" | "reverse_peo" | "reverse" => Ok(Direction::ReversePeo),
            other => Err(format!(
                "unknown direction `{other}` (expected peo or reverse-peo)"
            )),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Peo => "peo",
            Direction::ReversePeo => "reverse-peo",
        })
    }
}

/// Computes a perfect elimination ordering, then first-fit colors along it
/// (or its reverse). Returns the coloring and the elimination ordering
/// itself, not reversed.
pub fn greedy_grundy_chordal(
    g: &Graph,
    direction: Direction,
) -> Result<(Coloring, EliminationOrder)> {
    let peo = perfect_elimination_order(g)?;
    let coloring = match direction {
        Direction::Peo => first_fit_color(g, peo.as_slice())?,
        Direction::ReversePeo => first_fit_color(g, peo.reversed().as_slice())?,
    };
    Ok((coloring, peo))
}

/// True iff no edge joins two vertices of the same color.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// True iff `c` is proper and every vertex of color `i` sees each of the
/// colors `1..i` on some neighbor.
pub fn is_grundy_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let mut stamp = vec![usize::MAX; c.max_color() + 1];
    Ok(g.vertices().all(|v| {
        let mine = c.color(v);
        let mut seen = 0;
        for &u in g.neighbors(v) {
            let other = c.color(u);
            if other < mine && stamp[other] != v {
                stamp[other] = v;
                seen += 1;
            }
        }
        seen == mine - 1
    }))
}

/// One evaluated inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    /// Stable key used in JSON output.
    pub name: &'static str,
    pub statement: &'static str,
    /// Where the inequality comes from.
    pub source: &'static str,
    pub holds: bool,
}

/// What [`grundy_bounds`] should compute.
#[derive(Clone, Debug, Default)]
pub struct BoundsRequest {
    /// Run the exact oracles under these limits.
    pub oracle: Option<OracleLimits>,
    /// Treat the graph as a partial k-tree of this width and evaluate the
    /// logarithmic bound.
    pub partial_k_tree_width: Option<usize>,
}

impl BoundsRequest {
    pub fn with_oracle(limits: OracleLimits) -> Self {
        Self {
            oracle: Some(limits),
            partial_k_tree_width: None,
        }
    }
}

/// Grundy-related quantities of one graph and the inequalities between
/// them. The achromatic number is never computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub edges: usize,
    pub delta: usize,
    /// Colors used by the elimination-order greedy (chordal graphs) or by
    /// first-fit in id order (otherwise). A lower bound on Γ.
    pub gamma_greedy: usize,
    pub gamma_exact: Option<usize>,
    pub gamma_witness: Option<Vec<Vertex>>,
    pub gamma_complement_exact: Option<usize>,
    pub chi_exact: Option<usize>,
    pub chi_complement_exact: Option<usize>,
    pub alpha_exact: Option<usize>,
    pub partial_k_tree_width: Option<usize>,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Flat JSON object: integers (or null) per quantity, one boolean per
    /// check.
    pub fn to_json(&self) -> Value {
        let opt = |x: Option<usize>| x.map_or(Value::Null, Value::from);
        let mut obj = Map::new();
        obj.insert("n".into(), self.n.into());
        obj.insert("edges".into(), self.edges.into());
        obj.insert("delta".into(), self.delta.into());
        obj.insert("gamma_greedy".into(), self.gamma_greedy.into());
        obj.insert("gamma_exact".into(), opt(self.gamma_exact));
        obj.insert(
            "gamma_complement_exact".into(),
            opt(self.gamma_complement_exact),
        );
        obj.insert("chi_exact".into(), opt(self.chi_exact));
        obj.insert(
            "chi_complement_exact".into(),
            opt(self.chi_complement_exact),
        );
        obj.insert("alpha_exact".into(), opt(self.alpha_exact));
        obj.insert(
            "partial_k_tree_width".into(),
            opt(self.partial_k_tree_width),
        );
        obj.insert("achromatic_number".into(), Value::Null);
        for check in &self.checks {
            obj.insert(check.name.into(), check.holds.into());
        }
        Value::Object(obj)
    }
}

/// Evaluates the Grundy bounds battery on `g`.
///
/// Without an oracle only the greedy count is available. With one, Γ, χ and
/// α of `g` and Γ, χ of its complement are computed exactly and every
/// inequality is reported as a named boolean. Nothing is asserted here; a
/// `false` is returned as data.
pub fn grundy_bounds(g: &Graph, request: &BoundsRequest) -> Result<BoundsReport> {
    let n = g.n();
    let delta = g.max_degree();
    let gamma_greedy = match greedy_grundy_chordal(g, Direction::Peo) {
        Ok((c, _)) => c.num_colors(),
        Err(Error::NotChordal(_)) => {
            let ids: Vec<Vertex> = g.vertices().collect();
            first_fit_color(g, &ids)?.num_colors()
        }
        Err(e) => return Err(e),
    };

    let mut report = BoundsReport {
        n,
        edges: g.edge_count(),
        delta,
        gamma_greedy,
        gamma_exact: None,
        gamma_witness: None,
        gamma_complement_exact: None,
        chi_exact: None,
        chi_complement_exact: None,
        alpha_exact: None,
        partial_k_tree_width: request.partial_k_tree_width,
        checks: vec![BoundCheck {
            name: "greedy_le_delta_plus_1",
            statement: "greedy colors <= Δ + 1",
            source: "first-fit degree bound",
            holds: gamma_greedy <= delta + 1,
        }],
    };

    let Some(limits) = &request.oracle else {
        return Ok(report);
    };

    let complement = g.complement();
    let gamma = oracle::grundy_number_exact(g, limits)?;
    let gamma_bar = oracle::grundy_number_exact(&complement, limits)?.gamma;
    let chi = oracle::chromatic_number_exact(g, limits)?;
    let chi_bar = oracle::chromatic_number_exact(&complement, limits)?;
    let alpha = oracle::independence_number_exact(g, limits)?;
    let big_gamma = gamma.gamma;

    report.gamma_exact = Some(big_gamma);
    report.gamma_witness = Some(gamma.order);
    report.gamma_complement_exact = Some(gamma_bar);
    report.chi_exact = Some(chi);
    report.chi_complement_exact = Some(chi_bar);
    report.alpha_exact = Some(alpha);

    let chi_sum = chi + chi_bar;
    report.checks.extend([
        BoundCheck {
            name: "greedy_le_gamma",
            statement: "greedy colors <= Γ(G)",
            source: "Γ is the worst case of first-fit",
            holds: gamma_greedy <= big_gamma,
        },
        BoundCheck {
            name: "chi_le_gamma",
            statement: "χ(G) <= Γ(G)",
            source: "chromatic/Grundy ordering (Christen and Selkow)",
            holds: chi <= big_gamma,
        },
        BoundCheck {
            name: "gamma_le_delta_plus_1",
            statement: "Γ(G) <= Δ(G) + 1",
            source: "Grundy degree bound",
            holds: big_gamma <= delta + 1,
        },
        BoundCheck {
            name: "gamma_le_n_plus_1_minus_alpha",
            statement: "Γ(G) <= n + 1 - α(G)",
            source: "stability bound",
            holds: big_gamma + alpha <= n + 1,
        },
        BoundCheck {
            name: "gamma_sum_complement_le_n_plus_1",
            statement: "Γ(G) + Γ(Ḡ) <= n + 1",
            source: "Nordhaus-Gaddum upper bound, Grundy form",
            holds: big_gamma + gamma_bar <= n + 1,
        },
        BoundCheck {
            name: "chi_sum_complement_ge_2_sqrt_n",
            statement: "2√n <= χ(G) + χ(Ḡ)",
            source: "Nordhaus-Gaddum lower bound (Nordhaus and Gaddum, 1956)",
            holds: chi_sum * chi_sum >= 4 * n,
        },
        BoundCheck {
            name: "chi_sum_complement_le_n_plus_1",
            statement: "χ(G) + χ(Ḡ) <= n + 1",
            source: "Nordhaus-Gaddum upper bound (Nordhaus and Gaddum, 1956)",
            holds: chi_sum <= n + 1,
        },
    ]);

    if let Some(k) = request.partial_k_tree_width {
        let bound = 1.0 + k as f64 * (n.max(1) as f64).log2();
        report.checks.push(BoundCheck {
            name: "gamma_le_1_plus_k_log2_n",
            statement: "Γ(G) <= 1 + k·log2(n) for a partial k-tree",
            source: "partial k-tree logarithmic bound",
            holds: big_gamma as f64 <= bound + 1e-9,
        });
    }

    Ok(report)
}

/// Result of [`recolor_after_change`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recoloring {
    pub graph: Graph,
    pub coloring: Coloring,
    pub effect: ChangeEffect,
    /// Post-change ids of the vertices that were uncolored and colored
    /// again, increasing. A new vertex counts as recolored.
    pub recolored: Vec<Vertex>,
}

/// Applies `change` and repairs `c` into a Grundy coloring of the new graph.
///
/// Vertices whose properness or Grundy condition broke are uncolored;
/// uncoloring can strip a witness color from a neighbor, so this runs to a
/// fixpoint. The uncolored vertices are then first-fit colored in
/// increasing id order against everything still colored. The kept colors
/// keep all their witnesses and each recolored vertex sees every smaller
/// color when it is colored, so the result is Grundy.
pub fn recolor_after_change(g: &Graph, c: &Coloring, change: &GraphChange) -> Result<Recoloring> {
    if !is_grundy_coloring(g, c)? {
        return Err(Error::InvalidColoring);
    }
    let (graph, effect) = g.with_change(change)?;

    let mut colors = c.colors.clone();
    let mut touched: Vec<Vertex> = Vec::new();
    match *change {
        GraphChange::AddVertex { .. } => colors.push(0),
        GraphChange::RemoveVertex(v) => {
            colors.swap_remove(v);
            touched.extend(
                g.neighbors(v)
                    .iter()
                    .filter_map(|&u| effect.remap(Some(v), u)),
            );
        }
        GraphChange::AddEdge(u, v) => {
            if colors[u] == colors[v] {
                colors[u.max(v)] = 0;
            }
            touched.extend([u, v]);
        }
        GraphChange::RemoveEdge(u, v) => touched.extend([u, v]),
    }
    for v in graph.vertices().filter(|&v| colors[v] == 0) {
        touched.extend(graph.neighbors(v).iter().copied());
    }

    let broken = |colors: &[usize], v: Vertex| -> bool {
        let mine = colors[v];
        if mine == 0 {
            return false;
        }
        let mut witnesses = BTreeSet::new();
        for &u in graph.neighbors(v) {
            let other = colors[u];
            if other == mine {
                return true;
            }
            if other != 0 && other < mine {
                witnesses.insert(other);
            }
        }
        witnesses.len() + 1 < mine
    };

    while let Some(v) = touched.pop() {
        if broken(&colors, v) {
            colors[v] = 0;
            touched.extend(
                graph
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| colors[u] != 0),
            );
        }
    }

    let recolored: Vec<Vertex> = graph.vertices().filter(|&v| colors[v] == 0).collect();
    for &v in &recolored {
        let taken: BTreeSet<usize> = graph.neighbors(v).iter().map(|&u| colors[u]).collect();
        colors[v] = (1..).find(|c| !taken.contains(c)).expect("unbounded range");
    }

    let coloring = Coloring { colors };
    debug_assert!(is_grundy_coloring(&graph, &coloring).unwrap_or(false));
    Ok(Recoloring {
        graph,
        coloring,
        effect,
        recolored,
    })
}
