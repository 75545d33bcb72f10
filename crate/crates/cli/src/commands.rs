use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use cdgraph_core::constructions::{EntryReport, Status};
use cdgraph_core::graphs::emit::{to_dot, to_json};
use cdgraph_core::{
    build_graph, character_degrees, classify_shape, load_corpus, realize, shipped_corpus,
    verify_corpus, DivisorGraph, Error, GraphKind, GroupSpec, Limits, ShapeClaim,
};
use serde_json::{json, Value};

use crate::{Failure, Format, GraphInput};

fn envelope(command: &str, input: Value, result: Value, status: &str) -> String {
    let v = json!({
        "command": command,
        "input": input,
        "result": result,
        "status": status,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn braces(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    Ok(text.parse::<GroupSpec>()?)
}

/// Parses `12,15` or `{1,12,15}`; drops 1 and repeats, sorts.
fn parse_set(text: &str) -> Result<Vec<u64>, Failure> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let n: u64 = part
            .parse()
            .map_err(|_| Failure::Usage(format!("--set: {part:?} is not a positive integer")))?;
        match n {
            0 => return Err(Failure::Usage("--set: 0 is not a degree".into())),
            1 => {}
            n => set.push(n),
        }
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn no_dot(command: &str, format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(format!(
            "{command} supports --format json or text, not dot"
        )));
    }
    Ok(())
}

fn degree_result(spec: &GroupSpec, limits: Limits) -> Result<(Value, String), Failure> {
    let group = realize(spec, limits)?;
    let data = character_degrees(&group)?;
    let classes = group.conjugacy_classes()?.len();
    let series = group.derived_series()?;
    let order = group.order();
    let result = json!({
        "order": order as u64,
        "classes": classes,
        "degrees": data.degrees,
        "cd": data.cd,
        "cd_star": data.cd_star,
        "rho": data.rho,
        "solvable": series.solvable,
        "derived_length": series.derived_length,
        "derived_series": series.subgroup_orders,
    });

    let mut text = String::new();
    writeln!(text, "group: {spec}").unwrap();
    writeln!(text, "order: {order}").unwrap();
    writeln!(text, "classes: {classes}").unwrap();
    let multiset: Vec<String> = data
        .cd
        .iter()
        .map(|&d| match data.multiplicity(d) {
            1 => d.to_string(),
            m => format!("{d}^{m}"),
        })
        .collect();
    writeln!(text, "degrees: {}", multiset.join(" ")).unwrap();
    writeln!(text, "cd: {}", braces(&data.cd)).unwrap();
    writeln!(text, "cd*: {}", braces(&data.cd_star)).unwrap();
    writeln!(text, "rho: {}", braces(&data.rho)).unwrap();
    writeln!(
        text,
        "solvable: {}",
        if series.solvable { "yes" } else { "no" }
    )
    .unwrap();
    match series.derived_length {
        Some(dl) => writeln!(text, "derived length: {dl}").unwrap(),
        None => writeln!(text, "derived length: -").unwrap(),
    }
    let chain: Vec<String> = series
        .subgroup_orders
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(text, "derived series: {}", chain.join(" > ")).unwrap();
    Ok((result, text))
}

pub fn degrees(input: &str, format: Format, limits: Limits) -> Result<ExitCode, Failure> {
    no_dot("degrees", format)?;
    let spec = parse_spec(input)?;
    let (result, text) = degree_result(&spec, limits)?;
    match format {
        Format::Json => print!(
            "{}",
            envelope(
                "degrees",
                json!({ "spec": spec.to_string() }),
                result,
                "info"
            )
        ),
        _ => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// The degree set behind a graph command, with its normalized echo.
fn graph_input(input: &GraphInput, limits: Limits) -> Result<(Value, Vec<u64>), Failure> {
    if let Some(set) = &input.set {
        let set = parse_set(set)?;
        return Ok((json!({ "set": set }), set));
    }
    let text = input
        .positional
        .as_deref()
        .or(input.flag.as_deref())
        .expect("clap requires one input");
    let spec = parse_spec(text)?;
    let group = realize(&spec, limits)?;
    let data = character_degrees(&group)?;
    Ok((json!({ "spec": spec.to_string() }), data.cd_star))
}

fn with_kind(mut echo: Value, kind: GraphKind) -> Value {
    echo["kind"] = json!(kind.to_string());
    echo
}

fn graph_text(g: &DivisorGraph) -> String {
    let mut out = String::new();
    writeln!(out, "kind: {}", g.kind).unwrap();
    if g.kind != GraphKind::Gamma {
        writeln!(out, "primes: {}", braces(&g.prime_vertices)).unwrap();
    }
    if g.kind != GraphKind::Delta {
        writeln!(out, "numbers: {}", braces(&g.number_vertices)).unwrap();
    }
    let edges: Vec<String> = g
        .edges
        .iter()
        .map(|&(a, b)| format!("{}-{}", g.vertex(a).value(), g.vertex(b).value()))
        .collect();
    writeln!(out, "edges: {}", edges.join(" ")).unwrap();
    writeln!(out, "shape: {}", classify_shape(g).tag).unwrap();
    out
}

pub fn graph(
    input: &GraphInput,
    kind: GraphKind,
    format: Format,
    limits: Limits,
) -> Result<ExitCode, Failure> {
    let (echo, set) = graph_input(input, limits)?;
    let g = build_graph(&set, kind)?;
    match format {
        Format::Dot => print!("{}", to_dot(&g)),
        Format::Json => print!(
            "{}",
            envelope("graph", with_kind(echo, kind), to_json(&g), "info")
        ),
        Format::Text => print!("{}", graph_text(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn classify(
    input: &GraphInput,
    kind: GraphKind,
    claim: Option<&str>,
    format: Format,
    limits: Limits,
) -> Result<ExitCode, Failure> {
    no_dot("classify", format)?;
    let claim: Option<ShapeClaim> = claim.map(str::parse).transpose()?;
    let (echo, set) = graph_input(input, limits)?;
    let g = build_graph(&set, kind)?;
    let shape = classify_shape(&g);
    let stats = g.stats();
    let failures: Vec<String> = claim
        .as_ref()
        .map(|c| c.failures(&g).iter().map(ToString::to_string).collect())
        .unwrap_or_default();
    let status = match (&claim, failures.is_empty()) {
        (None, _) => "info",
        (Some(_), true) => "pass",
        (Some(_), false) => "fail",
    };

    match format {
        Format::Json => {
            let mut echo = with_kind(echo, kind);
            if let Some(c) = &claim {
                echo["claim"] = json!(c.to_string());
            }
            let mut result = json!({
                "shape": shape.tag.to_string(),
                "components": shape.components,
                "diameter": shape.diameter,
                "order": shape.order,
                "edge_count": stats.edge_count,
            });
            if claim.is_some() {
                result["failed_predicates"] = json!(failures);
            }
            print!("{}", envelope("classify", echo, result, status));
        }
        _ => {
            println!("shape: {}", shape.tag);
            println!("components: {}", shape.components);
            println!("diameter: {}", shape.diameter);
            println!("vertices: {}", shape.order);
            println!("edges: {}", stats.edge_count);
            if let Some(c) = &claim {
                println!("claim: {c}");
                if failures.is_empty() {
                    println!("claim holds");
                } else {
                    println!("claim fails: {}", failures.join(", "));
                }
            }
        }
    }
    Ok(if status == "fail" {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn shown_cd(e: &EntryReport) -> String {
    match &e.computed {
        Some(c) => braces(&c.degrees.cd),
        None => braces(&e.claimed_cd),
    }
}

fn verify_table(entries: &[EntryReport], passed: usize, failed: usize) -> String {
    let name_w = entries
        .iter()
        .map(|e| e.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let shape_w = entries
        .iter()
        .map(|e| e.shape.as_ref().map_or(1, |s| s.tag.to_string().len()))
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = String::new();
    writeln!(
        out,
        "STATUS  {:name_w$}  {:8}  {:shape_w$}  CD",
        "NAME", "SOURCE", "SHAPE"
    )
    .unwrap();
    for e in entries {
        let status = match e.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let source = if e.recorded_only {
            "recorded"
        } else {
            "computed"
        };
        let shape = e
            .shape
            .as_ref()
            .map_or("-".to_string(), |s| s.tag.to_string());
        writeln!(
            out,
            "{status:6}  {:name_w$}  {source:8}  {shape:shape_w$}  {}",
            e.name,
            shown_cd(e)
        )
        .unwrap();
        for p in &e.problems {
            writeln!(out, "        {p}").unwrap();
        }
    }
    writeln!(
        out,
        "{} entries: {passed} passed, {failed} failed",
        entries.len()
    )
    .unwrap();
    out
}

pub fn verify(
    corpus: Option<&Path>,
    report_path: Option<&Path>,
    format: Format,
    limits: Limits,
) -> Result<ExitCode, Failure> {
    no_dot("verify", format)?;
    let (entries, source) = match corpus {
        Some(path) => (load_corpus(path)?, path.display().to_string()),
        None => (shipped_corpus(), "built-in".to_string()),
    };
    let report = verify_corpus(&entries, limits);
    let status = if report.all_passed() { "pass" } else { "fail" };
    let json_report = envelope(
        "verify",
        json!({ "corpus": source }),
        serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
        status,
    );
    if let Some(path) = report_path {
        std::fs::write(path, &json_report)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    match format {
        Format::Json => print!("{json_report}"),
        _ => print!(
            "{}",
            verify_table(&report.entries, report.passed, report.failed)
        ),
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
