//! Bound battery over many instances, evaluated in parallel and aggregated
//! in instance order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use grundy_core::{
    all_labeled_graphs, generate, grundy_bounds, BoundsReport, BoundsRequest, Error, Graph,
    GraphFamily, OracleLimits,
};

#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
    pub ktree_width: Option<usize>,
}

pub fn exhaustive_instances(n: usize) -> Vec<Instance> {
    all_labeled_graphs(n)
        .enumerate()
        .map(|(i, graph)| Instance {
            label: format!("exhaustive:n={n}#{i}"),
            graph,
            ktree_width: None,
        })
        .collect()
}

/// `count` graphs of `family` with seeds `seed, seed + 1, …`.
pub fn family_instances(
    family: &GraphFamily,
    count: usize,
    seed: u64,
    ktree_width: Option<usize>,
) -> Result<Vec<Instance>, Error> {
    let width = ktree_width.or(family.tree_width_bound());
    (0..count as u64)
        .map(|i| {
            let s = seed.wrapping_add(i);
            Ok(Instance {
                label: format!("{family}@{s}"),
                graph: generate(family, s)?.graph,
                ktree_width: width,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckTally {
    pub statement: &'static str,
    pub source: &'static str,
    pub holds: usize,
    pub violated: usize,
    pub first_violation: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub instance: usize,
    pub label: String,
    pub check: &'static str,
    pub n: usize,
    /// 1-based edge list of the offending graph.
    pub edges: Vec<(usize, usize)>,
    pub report: Value,
}

#[derive(Debug, Default)]
pub struct BoundsSweep {
    pub instances: usize,
    pub evaluated: usize,
    pub skipped: Vec<(usize, String)>,
    pub tallies: BTreeMap<&'static str, CheckTally>,
    pub violations: Vec<Violation>,
    pub reports: Vec<Option<BoundsReport>>,
}

impl BoundsSweep {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, check: &str) -> Option<&CheckTally> {
        self.tallies.get(check)
    }

    pub fn to_json(&self, per_instance: bool, max_violations: usize) -> Value {
        let skipped: Vec<Value> = self
            .skipped
            .iter()
            .map(|(i, why)| json!({ "instance": i, "reason": why }))
            .collect();
        let mut out = json!({
            "instances": self.instances,
            "evaluated": self.evaluated,
            "skipped": skipped,
            "all_hold": self.all_hold(),
            "checks": self.tallies,
            "violation_count": self.violations.len(),
            "violations": &self.violations[..self.violations.len().min(max_violations)],
        });
        if per_instance {
            out["reports"] = self
                .reports
                .iter()
                .map(|r| r.as_ref().map_or(Value::Null, BoundsReport::to_json))
                .collect();
        }
        out
    }
}

/// Runs the full oracle battery on every instance. Instances over an oracle
/// cap are skipped and listed, not treated as failures.
pub fn sweep_bounds(instances: &[Instance], limits: &OracleLimits) -> Result<BoundsSweep, Error> {
    let results: Vec<Result<BoundsReport, Error>> = instances
        .par_iter()
        .map(|inst| {
            grundy_bounds(
                &inst.graph,
                &BoundsRequest {
                    oracle: Some(*limits),
                    partial_k_tree_width: inst.ktree_width,
                },
            )
        })
        .collect();

    let mut sweep = BoundsSweep {
        instances: instances.len(),
        ..Default::default()
    };
    for (i, (inst, result)) in instances.iter().zip(results).enumerate() {
        let report = match result {
            Ok(r) => r,
            Err(e @ Error::OracleCapExceeded { .. }) => {
                sweep.skipped.push((i, e.to_string()));
                sweep.reports.push(None);
                continue;
            }
            Err(e) => return Err(e),
        };
        sweep.evaluated += 1;
        for check in &report.checks {
            let tally = sweep
                .tallies
                .entry(check.name)
                .or_insert_with(|| CheckTally {
                    statement: check.statement,
                    source: check.source,
                    ..Default::default()
                });
            if check.holds {
                tally.holds += 1;
            } else {
                tally.violated += 1;
                tally.first_violation.get_or_insert(i);
                sweep.violations.push(Violation {
                    instance: i,
                    label: inst.label.clone(),
                    check: check.name,
                    n: inst.graph.n(),
                    edges: inst.graph.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
                    report: report.to_json(),
                });
            }
        }
        sweep.reports.push(Some(report));
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_four_holds_except_grundy_nordhaus_gaddum() {
        let sweep = sweep_bounds(&exhaustive_instances(4), &OracleLimits::default()).unwrap();
        assert_eq!(sweep.instances, 64);
        assert_eq!(sweep.evaluated, 64);
        for (name, tally) in &sweep.tallies {
            if *name == "gamma_sum_complement_le_n_plus_1" {
                // the 12 labeled copies of the self-complementary P4
                assert_eq!(tally.violated, 12);
            } else {
                assert_eq!(tally.violated, 0, "{name}");
            }
        }
    }

    #[test]
    fn caps_are_skipped_not_fatal() {
        let family: GraphFamily = "path:n=11".parse().unwrap();
        let instances = family_instances(&family, 2, 0, None).unwrap();
        let sweep = sweep_bounds(&instances, &OracleLimits::default()).unwrap();
        assert_eq!(sweep.evaluated, 0);
        assert_eq!(sweep.skipped.len(), 2);
        assert!(sweep.all_hold());
    }

    #[test]
    fn ktree_families_imply_width() {
        let family: GraphFamily = "pktree:n=6,k=2,p=0.8".parse().unwrap();
        let instances = family_instances(&family, 3, 9, None).unwrap();
        assert!(instances.iter().all(|i| i.ktree_width == Some(2)));
        assert_eq!(instances[1].label, "pktree:n=6,k=2,p=0.8@10");
    }
}
