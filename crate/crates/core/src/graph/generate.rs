//! Seeded graph generators and the `name:key=val,…` family micro-format.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A parameterized graph family.
///
/// String form (see [`FromStr`]):
///
/// | family | string |
/// |---|---|
/// | path on n vertices | `path:n=5` |
/// | cycle on n ≥ 3 vertices | `cycle:n=6` |
/// | complete graph | `complete:n=4` |
/// | star on n vertices, center 0 | `star:n=6` |
/// | k-tree | `ktree:n=20,k=2` |
/// | partial k-tree, each k-tree edge kept with prob. p | `pktree:n=9,k=2,p=0.7` |
/// | split graph, clique C, independent set S | `split:s=5,c=5,p=0.5` |
/// | Erdős–Rényi G(n, p) | `gnp:n=7,p=0.5` |
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Star {
        n: usize,
    },
    KTree {
        n: usize,
        k: usize,
    },
    PartialKTree {
        n: usize,
        k: usize,
        keep: f64,
    },
    Split {
        independent: usize,
        clique: usize,
        cross: f64,
    },
    Gnp {
        n: usize,
        p: f64,
    },
}

/// Clique/independent-set partition that produced a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub graph: Graph,
    pub partition: Option<SplitPartition>,
}

impl GraphFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidGenerator(msg.to_string()));
        match *self {
            GraphFamily::Cycle { n } if n < 3 => bad("cycle needs n >= 3"),
            GraphFamily::KTree { k: 0, .. } | GraphFamily::PartialKTree { k: 0, .. } => {
                bad("k must be positive")
            }
            GraphFamily::KTree { n, k } | GraphFamily::PartialKTree { n, k, .. } if n <= k => {
                bad("n must exceed k")
            }
            GraphFamily::PartialKTree { keep: p, .. }
            | GraphFamily::Split { cross: p, .. }
            | GraphFamily::Gnp { p, .. }
                if !(0.0..=1.0).contains(&p) =>
            {
                bad("probability must lie in [0, 1]")
            }
            _ => Ok(()),
        }
    }

    /// Width of the underlying k-tree, for the k-tree families.
    pub fn tree_width_bound(&self) -> Option<usize> {
        match *self {
            GraphFamily::KTree { k, .. } | GraphFamily::PartialKTree { k, .. } => Some(k),
            _ => None,
        }
    }
}

/// Generates `family` from a ChaCha8 stream seeded with `seed`.
pub fn generate(family: &GraphFamily, seed: u64) -> Result<Generated> {
    generate_with(family, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Generates `family`, drawing randomness only from `rng`.
pub fn generate_with<R: Rng + ?Sized>(family: &GraphFamily, rng: &mut R) -> Result<Generated> {
    family.validate()?;
    let plain = |graph| Generated {
        graph,
        partition: None,
    };
    let generated = match *family {
        GraphFamily::Path { n } => plain(Graph::path(n)),
        GraphFamily::Cycle { n } => plain(Graph::cycle(n)),
        GraphFamily::Complete { n } => plain(Graph::complete(n)),
        GraphFamily::Star { n } => plain(Graph::star(n)),
        GraphFamily::KTree { n, k } => plain(k_tree(n, k, rng)),
        GraphFamily::PartialKTree { n, k, keep } => {
            let full = k_tree(n, k, rng);
            let mut g = Graph::new(n);
            for (u, v) in full.edges() {
                if rng.random_bool(keep) {
                    g.add_edge_unchecked(u, v);
                }
            }
            plain(g)
        }
        GraphFamily::Split {
            independent,
            clique,
            cross,
        } => split(independent, clique, cross, rng),
        GraphFamily::Gnp { n, p } => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            plain(g)
        }
    };
    generated.graph.debug_validate();
    Ok(generated)
}

/// Starts from K_{k+1} on `0..=k`; vertex `v > k` is joined to a k-clique
/// obtained by dropping one random member of a random existing
/// (k+1)-clique. Every k-clique of a k-tree lies in some (k+1)-clique, so
/// this reaches every k-clique with positive probability.
fn k_tree<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let mut g = Graph::complete(k + 1);
    g.adj.resize(n, Default::default());
    let mut cliques: Vec<Vec<Vertex>> = vec![(0..=k).collect()];
    for v in k + 1..n {
        let mut base = cliques[rng.random_range(0..cliques.len())].clone();
        base.swap_remove(rng.random_range(0..base.len()));
        for &u in &base {
            g.add_edge_unchecked(u, v);
        }
        base.push(v);
        cliques.push(base);
    }
    g
}

/// Clique vertices take ids `0..c`, independent vertices `c..c+s`; the
/// assignment of ids to roles is then shuffled.
fn split<R: Rng + ?Sized>(s: usize, c: usize, p: f64, rng: &mut R) -> Generated {
    let n = s + c;
    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(rng);
    let (clique, independent) = ids.split_at(c);
    let mut g = Graph::new(n);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            g.add_edge_unchecked(u, v);
        }
    }
    for &u in clique {
        for &v in independent {
            if rng.random_bool(p) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    let mut clique = clique.to_vec();
    let mut independent = independent.to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Generated {
        graph: g,
        partition: Some(SplitPartition {
            clique,
            independent,
        }),
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Path { n } => write!(f, "path:n={n}"),
            GraphFamily::Cycle { n } => write!(f, "cycle:n={n}"),
            GraphFamily::Complete { n } => write!(f, "complete:n={n}"),
            GraphFamily::Star { n } => write!(f, "star:n={n}"),
            GraphFamily::KTree { n, k } => write!(f, "ktree:n={n},k={k}"),
            GraphFamily::PartialKTree { n, k, keep } => write!(f, "pktree:n={n},k={k},p={keep}"),
            GraphFamily::Split {
                independent,
                clique,
                cross,
            } => write!(f, "split:s={independent},c={clique},p={cross}"),
            GraphFamily::Gnp { n, p } => write!(f, "gnp:n={n},p={p}"),
        }
    }
}

struct Params<'a> {
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn parse(body: &'a str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item.split_once('=').ok_or_else(|| {
                Error::InvalidGenerator(format!("expected key=value, got `{item}`"))
            })?;
            let key = key.trim();
            if pairs.iter().any(|&(k, _)| k == key) {
                return Err(Error::InvalidGenerator(format!(
                    "parameter `{key}` given twice"
                )));
            }
            pairs.push((key, val.trim()));
        }
        Ok(Self { pairs })
    }

    fn take<T: FromStr>(&mut self, key: &str) -> Result<T> {
        let pos = self
            .pairs
            .iter()
            .position(|&(k, _)| k == key)
            .ok_or_else(|| Error::InvalidGenerator(format!("missing parameter `{key}`")))?;
        let (_, raw) = self.pairs.remove(pos);
        raw.parse()
            .map_err(|_| Error::InvalidGenerator(format!("bad value `{raw}` for `{key}`")))
    }

    fn finish(self) -> Result<()> {
        match self.pairs.first() {
            None => Ok(()),
            Some((k, _)) => Err(Error::InvalidGenerator(format!("unknown parameter `{k}`"))),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, body) = s.split_once(':').unwrap_or((s, ""));
        let mut p = Params::parse(body)?;
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "path" => GraphFamily::Path { n: p.take("n")? },
            "cycle" => GraphFamily::Cycle { n: p.take("n")? },
            "complete" => GraphFamily::Complete { n: p.take("n")? },
            "star" => GraphFamily::Star { n: p.take("n")? },
            "ktree" | "k-tree" | "k_tree" => GraphFamily::KTree {
                n: p.take("n")?,
                k: p.take("k")?,
            },
            "pktree" | "partial-ktree" | "partial_k_tree" => GraphFamily::PartialKTree {
                n: p.take("n")?,
                k: p.take("k")?,
                keep: p.take("p")?,
            },
            "split" => GraphFamily::Split {
                independent: p.take("s")?,
                clique: p.take("c")?,
                cross: p.take("p")?,
            },
            "gnp" => GraphFamily::Gnp {
                n: p.take("n")?,
                p: p.take("p")?,
            },
            other => return Err(Error::InvalidGenerator(format!("unknown family `{other}`"))),
        };
        p.finish()?;
        family.validate()?;
        Ok(family)
    }
}
