use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, Context};
use serde_json::{json, Value};

use grundy_core::oracle::{chromatic_number_exact, grundy_number_exact, independence_number_exact};
use grundy_core::{
    elimination_waves, first_fit_color, generate, greedy_grundy_chordal, is_chordal,
    is_grundy_coloring, is_proper, is_split, max_clique_chordal, parse_dimacs,
    perfect_elimination_order, recolor_after_change, simplicial_vertices, verify_peo, write_dimacs,
    Coloring, Graph, OracleLimits, Vertex,
};

use crate::args::{
    Args, CheckBoundsArgs, ColorArgs, Command, ExactArgs, GenArgs, InputArgs, MutateArgs, Which,
};
use crate::report::{one_based, CliError, Execution, ExitStatus, RunReport};
use crate::script::parse_script;
use crate::sweep::{exhaustive_instances, family_instances, sweep_bounds, Instance};

type CmdResult = Result<Outcome, CliError>;

struct Outcome {
    outputs: Value,
    status: ExitStatus,
    text: String,
    raw: Option<String>,
}

impl Outcome {
    fn new(outputs: Value, status: ExitStatus, text: String) -> Self {
        Self {
            outputs,
            status,
            text,
            raw: None,
        }
    }
}

/// Runs one invocation. Failures are folded into the report, so this never
/// returns an error.
pub fn run(args: &Args) -> Execution {
    let started = Instant::now();
    let (name, input, result) = match &args.command {
        Command::Gen(a) => (
            "gen",
            json!({ "family": a.family.to_string(), "seed": a.seed }),
            gen(a),
        ),
        Command::Recognize(a) => ("recognize", json!({ "file": a.input }), recognize(a)),
        Command::Color(a) => ("color", json!({ "file": a.input }), color(a)),
        Command::Exact(a) => ("exact", json!({ "file": a.input }), exact(a)),
        Command::CheckBounds(a) => ("check-bounds", bounds_input(a), check_bounds(a)),
        Command::Mutate(a) => (
            "mutate",
            json!({ "file": a.input, "script": a.script }),
            mutate(a),
        ),
    };
    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    let outcome = result.unwrap_or_else(|e| Outcome {
        outputs: json!({ "error": format!("{:#}", e.error) }),
        status: e.status,
        text: format!("error: {:#}\n", e.error),
        raw: None,
    });
    Execution {
        report: RunReport {
            command: name,
            input,
            outputs: outcome.outputs,
            timing_ms,
            exit_status: outcome.status,
        },
        text: outcome.text,
        raw: outcome.raw,
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::usage)?;
    parse_dimacs(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(CliError::usage)
}

fn gen(a: &GenArgs) -> CmdResult {
    let generated = generate(&a.family, a.seed)?;
    let g = &generated.graph;
    let dimacs = write_dimacs(g);
    let mut outputs = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "path": a.out,
    });
    if let Some(p) = &generated.partition {
        outputs["partition"] = json!({
            "clique": one_based(&p.clique),
            "independent": one_based(&p.independent),
        });
    }
    let text = format!(
        "{} (seed {}): n = {}, m = {}\n",
        a.family,
        a.seed,
        g.n(),
        g.edge_count()
    );
    let mut outcome = Outcome::new(outputs, ExitStatus::Success, text);
    match &a.out {
        Some(path) => fs::write(path, dimacs)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(CliError::usage)?,
        None => outcome.raw = Some(dimacs),
    }
    Ok(outcome)
}

fn recognize(a: &InputArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let peo = perfect_elimination_order(&g);
    let chordal = peo.is_ok();
    let split = chordal && is_chordal(&g.complement());
    debug_assert_eq!(split, is_split(&g));

    let mut outputs = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "delta": g.max_degree(),
        "chordal": chordal,
        "split": split,
        "simplicial": one_based(&simplicial_vertices(&g)),
    });
    let mut text = format!(
        "n = {}, m = {}, Δ = {}\nchordal: {}\nsplit: {}\n",
        g.n(),
        g.edge_count(),
        g.max_degree(),
        yes_no(chordal),
        yes_no(split)
    );

    match peo {
        Ok(order) => {
            let verified = verify_peo(&g, &order)?;
            let waves = elimination_waves(&g).expect("chordal graphs peel completely");
            let clique = max_clique_chordal(&g).expect("chordal graphs have a maximum clique");
            outputs["peo"] = json!(one_based(order.as_slice()));
            outputs["peo_verified"] = json!(verified);
            outputs["waves"] = json!(waves.iter().map(|w| one_based(w)).collect::<Vec<_>>());
            outputs["max_clique"] = json!({
                "size": clique.size,
                "members": one_based(&clique.members),
            });
            writeln!(text, "perfect elimination order: {order}").unwrap();
            let mut so_far: Vec<String> = Vec::new();
            for (i, wave) in waves.iter().enumerate() {
                let ids = braces(wave);
                so_far.push(ids.clone());
                writeln!(
                    text,
                    "round {}: simplicial {}  scheme {}",
                    i + 1,
                    ids,
                    so_far.join(" < ")
                )
                .unwrap();
            }
            writeln!(
                text,
                "max clique: {} {}",
                clique.size,
                braces(&clique.members)
            )
            .unwrap();
        }
        Err(stuck) => {
            outputs["peo"] = Value::Null;
            outputs["residual"] = json!(one_based(&stuck.residual));
            writeln!(
                text,
                "no simplicial vertex among {}",
                braces(&stuck.residual)
            )
            .unwrap();
        }
    }
    Ok(Outcome::new(outputs, ExitStatus::Success, text))
}

fn parse_order(raw: &str) -> Result<Vec<Vertex>, CliError> {
    raw.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(CliError::usage(anyhow!("bad vertex id `{t}` in --order"))),
        })
        .collect()
}

fn color(a: &ColorArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let (coloring, order, mode) = match &a.order {
        Some(raw) => {
            let order = parse_order(raw)?;
            (first_fit_color(&g, &order)?, order, "override".to_string())
        }
        None => {
            let (c, peo) = greedy_grundy_chordal(&g, a.direction)?;
            let used = match a.direction {
                grundy_core::Direction::Peo => peo.into_inner(),
                grundy_core::Direction::ReversePeo => peo.reversed().into_inner(),
            };
            (c, used, a.direction.to_string())
        }
    };
    let proper = is_proper(&g, &coloring)?;
    let grundy = is_grundy_coloring(&g, &coloring)?;
    if let Some(path) = &a.solution {
        fs::write(path, coloring.to_solution_lines())
            .with_context(|| format!("writing {}", path.display()))
            .map_err(CliError::usage)?;
    }
    let status = if proper && grundy {
        ExitStatus::Success
    } else {
        ExitStatus::DomainFailure
    };
    let outputs = json!({
        "mode": mode,
        "order": one_based(&order),
        "colors_used": coloring.num_colors(),
        "coloring": coloring.as_slice(),
        "proper": proper,
        "grundy": grundy,
    });
    let mut text = coloring.to_solution_lines();
    writeln!(
        text,
        "c colors {} order {} proper {} grundy {}",
        coloring.num_colors(),
        mode,
        proper,
        grundy
    )
    .unwrap();
    Ok(Outcome::new(outputs, status, text))
}

fn limits_from(cap: Option<usize>) -> OracleLimits {
    cap.map(OracleLimits::uniform).unwrap_or_default()
}

fn exact(a: &ExactArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let limits = limits_from(a.cap_n);
    let mut outputs = json!({ "n": g.n() });
    let mut text = String::new();
    if matches!(a.which, Which::Gamma | Which::All) {
        let w = grundy_number_exact(&g, &limits)?;
        outputs["gamma"] = json!(w.gamma);
        outputs["gamma_witness"] = json!(one_based(&w.order));
        writeln!(
            text,
            "gamma = {} (order {:?})",
            w.gamma,
            one_based(&w.order)
        )
        .unwrap();
    }
    if matches!(a.which, Which::Chi | Which::All) {
        let chi = chromatic_number_exact(&g, &limits)?;
        outputs["chi"] = json!(chi);
        writeln!(text, "chi = {chi}").unwrap();
    }
    if matches!(a.which, Which::Alpha | Which::All) {
        let alpha = independence_number_exact(&g, &limits)?;
        outputs["alpha"] = json!(alpha);
        writeln!(text, "alpha = {alpha}").unwrap();
    }
    Ok(Outcome::new(outputs, ExitStatus::Success, text))
}

fn bounds_input(a: &CheckBoundsArgs) -> Value {
    json!({
        "file": a.input,
        "family": a.family.as_ref().map(ToString::to_string),
        "exhaustive": a.exhaustive,
        "count": a.count,
        "seed": a.seed,
    })
}

fn check_bounds(a: &CheckBoundsArgs) -> CmdResult {
    let instances: Vec<Instance> = if let Some(path) = &a.input {
        vec![Instance {
            label: path.display().to_string(),
            graph: read_graph(path)?,
            ktree_width: a.ktree_width,
        }]
    } else if let Some(family) = &a.family {
        family_instances(family, a.count, a.seed, a.ktree_width)?
    } else if let Some(n) = a.exhaustive {
        let mut v = exhaustive_instances(n);
        v.iter_mut().for_each(|i| i.ktree_width = a.ktree_width);
        v
    } else {
        return Err(CliError::usage(anyhow!("no instances given")));
    };

    let sweep = sweep_bounds(&instances, &limits_from(a.cap_n))?;
    let per_instance = a.per_instance || instances.len() == 1;
    let outputs = sweep.to_json(per_instance, 20);

    let mut text = format!(
        "{} instances, {} evaluated, {} skipped\n",
        sweep.instances,
        sweep.evaluated,
        sweep.skipped.len()
    );
    for (i, why) in &sweep.skipped {
        eprintln!("warning: instance {i} skipped: {why}");
    }
    for (name, t) in &sweep.tallies {
        writeln!(
            text,
            "{:<36} {:<44} holds {:>6}  violated {:>6}",
            name, t.statement, t.holds, t.violated
        )
        .unwrap();
    }
    if let Some(v) = sweep.violations.first() {
        writeln!(
            text,
            "first violation: {} on {} (edges {:?})",
            v.check, v.label, v.edges
        )
        .unwrap();
    }
    let status = if sweep.all_hold() {
        ExitStatus::Success
    } else {
        ExitStatus::DomainFailure
    };
    Ok(Outcome::new(outputs, status, text))
}

fn initial_coloring(g: &Graph, direction: grundy_core::Direction) -> Result<Coloring, CliError> {
    match greedy_grundy_chordal(g, direction) {
        Ok((c, _)) => Ok(c),
        Err(grundy_core::Error::NotChordal(_)) => {
            let ids: Vec<Vertex> = g.vertices().collect();
            Ok(first_fit_color(g, &ids)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn mutate(a: &MutateArgs) -> CmdResult {
    let mut g = read_graph(&a.input)?;
    let script_text = fs::read_to_string(&a.script)
        .with_context(|| format!("reading {}", a.script.display()))
        .map_err(CliError::usage)?;
    let lines = parse_script(&script_text).map_err(CliError::usage)?;

    let mut coloring = initial_coloring(&g, a.direction)?;
    let initial_ok = is_grundy_coloring(&g, &coloring)?;
    let mut all_verified = initial_ok;
    let mut steps = Vec::with_capacity(lines.len());
    let mut text = format!(
        "initial: n = {}, m = {}, {} colors, grundy {}\n",
        g.n(),
        g.edge_count(),
        coloring.num_colors(),
        initial_ok
    );

    for (step, line) in lines.iter().enumerate() {
        let at_line = |e: anyhow::Error| {
            CliError::usage(e.context(format!("change script line {}", line.line)))
        };
        if let Some(declared) = line.declared_id {
            if declared != g.n() {
                return Err(at_line(anyhow!(
                    "new vertex must be numbered {}, got {}",
                    g.n() + 1,
                    declared + 1
                )));
            }
        }
        let out = recolor_after_change(&g, &coloring, &line.change).map_err(|e| match e {
            grundy_core::Error::InvalidColoring => CliError::domain(e),
            other => at_line(other.into()),
        })?;
        let proper = is_proper(&out.graph, &out.coloring)?;
        let grundy = is_grundy_coloring(&out.graph, &out.coloring)?;
        all_verified &= proper && grundy;
        writeln!(
            text,
            "step {:>3} (line {:>3}) {:<24} recolored {:>3}  colors {:>3}  ok {}",
            step + 1,
            line.line,
            line.text,
            out.recolored.len(),
            out.coloring.num_colors(),
            proper && grundy
        )
        .unwrap();
        steps.push(json!({
            "step": step + 1,
            "line": line.line,
            "change": line.text,
            "recolored": out.recolored.len(),
            "recolored_vertices": one_based(&out.recolored),
            "colors_used": out.coloring.num_colors(),
            "proper": proper,
            "grundy": grundy,
        }));
        g = out.graph;
        coloring = out.coloring;
    }

    let outputs = json!({
        "steps": steps,
        "initial_verified": initial_ok,
        "all_verified": all_verified,
        "final": {
            "n": g.n(),
            "m": g.edge_count(),
            "colors_used": coloring.num_colors(),
            "coloring": coloring.as_slice(),
        },
    });
    let status = if all_verified {
        ExitStatus::Success
    } else {
        ExitStatus::DomainFailure
    };
    Ok(Outcome::new(outputs, status, text))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braces(vs: &[Vertex]) -> String {
    let ids: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", ids.join(", "))
}
