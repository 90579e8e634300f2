//! Implementations of the CLI subcommands.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use npc_core::disk::{find_minimal_spanning_disks, DiskSearchOutcome, SpanningDisk};
use npc_core::generators::GeneratorSpec;
use npc_core::metric::{codim2_simplices, edge_link_passes, MetricGraph};
use npc_core::polygon;
use npc_core::{io, CombinatorialLoop, Error, Simplex, SimplicialComplex, VertexId};

use crate::report::{
    empty_gon_value, girth_value, largeness_summary, largeness_value, snpc_value, AuditReport,
    CheckResult, TWO_PI,
};
use crate::{ExitStatus, Format};

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct AuditOptions {
    pub file: PathBuf,
    pub flag: bool,
    pub empty_gons: Option<usize>,
    pub k_large: Option<usize>,
    pub snpc: bool,
    pub edge_links: bool,
    pub full: Option<PathBuf>,
    pub tol: f64,
    pub format: Format,
}

pub fn cmd_audit(opts: AuditOptions) -> Result<ExitStatus, Error> {
    let (complex, name) = io::read_complex(&opts.file)?;
    let input = describe_input(&opts.file, name.as_deref(), &complex);

    // with no explicit selection, run the standard suite
    let default_suite = !opts.flag
        && opts.empty_gons.is_none()
        && opts.k_large.is_none()
        && !opts.snpc
        && !opts.edge_links
        && opts.full.is_none();
    let run_flag = opts.flag || default_suite;
    let empty_gons = opts
        .empty_gons
        .or(if default_suite { Some(6) } else { None });
    let run_snpc = opts.snpc || default_suite;
    let run_edge_links = opts.edge_links || default_suite;

    let mut checks = Vec::new();
    if run_flag {
        checks.push(check_flag(&complex));
    }
    if let Some(bound) = empty_gons {
        checks.push(check_empty_gons(&complex, bound)?);
    }
    if let Some(bound) = opts.k_large {
        checks.push(check_k_large(&complex, bound)?);
    }
    if run_snpc {
        checks.push(check_snpc(&complex)?);
    }
    if run_edge_links {
        checks.push(check_edge_links(&complex, opts.tol)?);
    }
    if let Some(ambient_path) = &opts.full {
        checks.push(check_full(&complex, ambient_path)?);
    }

    let report = AuditReport {
        tool_version: TOOL_VERSION,
        input,
        checks,
    };
    match opts.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).unwrap()
        ),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(if report.all_pass() {
        ExitStatus::Pass
    } else {
        ExitStatus::Fail
    })
}

fn describe_input(path: &Path, name: Option<&str>, k: &SimplicialComplex) -> String {
    let base = match name {
        Some(n) => format!("{} ({n})", path.display()),
        None => path.display().to_string(),
    };
    format!(
        "{base}: {} facets, {} vertices, dimension {}",
        k.facets().len(),
        k.vertex_count(),
        k.dimension()
    )
}

fn check_flag(k: &SimplicialComplex) -> CheckResult {
    match k.flag_violation() {
        None => CheckResult {
            id: "flag",
            pass: true,
            witness: None,
            details: "every clique of the 1-skeleton spans a simplex".into(),
        },
        Some(clique) => CheckResult {
            id: "flag",
            pass: false,
            witness: Some(json!({
                "clique": clique.iter().map(|v| v.0).collect::<Vec<_>>()
            })),
            details: format!(
                "clique {{{}}} spans no simplex",
                clique
                    .iter()
                    .map(|v| v.0.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        },
    }
}

fn check_empty_gons(k: &SimplicialComplex, bound: usize) -> Result<CheckResult, Error> {
    let witnesses = polygon::find_empty_ngons(k, bound)?;
    Ok(if witnesses.is_empty() {
        CheckResult {
            id: "empty-gons",
            pass: true,
            witness: None,
            details: format!("no empty n-gons for n < {bound}"),
        }
    } else {
        CheckResult {
            id: "empty-gons",
            pass: false,
            witness: Some(Value::Array(
                witnesses.iter().map(empty_gon_value).collect(),
            )),
            details: format!(
                "{} empty n-gon(s) with n < {bound}; first: empty {}-gon {}",
                witnesses.len(),
                witnesses[0].n(),
                witnesses[0].ngon
            ),
        }
    })
}

fn check_k_large(k: &SimplicialComplex, bound: usize) -> Result<CheckResult, Error> {
    Ok(match polygon::largeness_violation(k, bound)? {
        None => CheckResult {
            id: "k-large",
            pass: true,
            witness: None,
            details: format!("complex is {bound}-large"),
        },
        Some(failure) => CheckResult {
            id: "k-large",
            pass: false,
            witness: Some(largeness_value(&failure)),
            details: format!("not {bound}-large: {}", largeness_summary(&failure)),
        },
    })
}

fn check_snpc(k: &SimplicialComplex) -> Result<CheckResult, Error> {
    let report = polygon::snpc_report(k)?;
    let details = if report.passes() {
        "every combinatorial link (and the complex itself) is 6-large".to_string()
    } else if let Some(w) = &report.proper {
        format!(
            "link of {} is not 6-large: {}{}",
            w.simplex,
            largeness_summary(&w.failure),
            match &report.whole_complex {
                Some(f) => format!("; complex itself: {}", largeness_summary(f)),
                None => String::new(),
            }
        )
    } else {
        format!(
            "links of simplices pass, but the complex itself is not 6-large: {}",
            largeness_summary(report.whole_complex.as_ref().unwrap())
        )
    };
    Ok(CheckResult {
        id: "snpc",
        pass: report.passes(),
        witness: if report.passes() {
            None
        } else {
            Some(snpc_value(&report))
        },
        details,
    })
}

fn check_edge_links(k: &SimplicialComplex, tol: f64) -> Result<CheckResult, Error> {
    let simplices = codim2_simplices(k)?;
    let mut failures = Vec::new();
    for s in &simplices {
        let check = edge_link_passes::<f64>(k, s, tol)?;
        if !check.pass {
            failures.push((s.clone(), check));
        }
    }
    let witness_values: Vec<Value> = failures
        .iter()
        .map(|(s, check)| {
            let mut value = girth_value(&check.girth, false);
            value
                .as_object_mut()
                .unwrap()
                .insert("simplex".into(), json!(s.ids()));
            value
        })
        .collect();
    let pass = failures.is_empty();
    let details = if simplices.is_empty() {
        "no codimension-2 simplices; vacuously true".to_string()
    } else if pass {
        format!(
            "all {} codimension-2 links have girth ≥ 2π",
            simplices.len()
        )
    } else {
        let (s, check) = &failures[0];
        format!(
            "{} of {} codimension-2 links below 2π; first: link of {s} has girth {:.6} < {TWO_PI:.6}",
            failures.len(),
            simplices.len(),
            check.girth.length.unwrap_or(f64::INFINITY),
        )
    };
    Ok(CheckResult {
        id: "edge-links",
        pass,
        witness: if pass {
            None
        } else {
            Some(Value::Array(witness_values))
        },
        details,
    })
}

fn check_full(l: &SimplicialComplex, ambient_path: &Path) -> Result<CheckResult, Error> {
    let (ambient, _) = io::read_complex(ambient_path)?;
    Ok(match l.fullness_violation(&ambient)? {
        None => CheckResult {
            id: "full",
            pass: true,
            witness: None,
            details: format!("full in {}", ambient_path.display()),
        },
        Some(simplex) => CheckResult {
            id: "full",
            pass: false,
            witness: Some(json!({ "violating_simplex": simplex.ids() })),
            details: format!(
                "not full in {}: simplex {simplex} has all vertices in the subcomplex but is missing",
                ambient_path.display()
            ),
        },
    })
}

pub struct LinkOptions {
    pub file: PathBuf,
    pub simplex: Vec<u32>,
    pub metric: bool,
    pub tol: f64,
    pub format: Format,
}

pub fn cmd_link(opts: LinkOptions) -> Result<ExitStatus, Error> {
    let (complex, _) = io::read_complex(&opts.file)?;
    let simplex = Simplex::from_ids(opts.simplex.iter().copied())?;
    let link = complex.link(&simplex)?;
    let metric = if opts.metric {
        let graph = MetricGraph::<f64>::codim2_link(&complex, &simplex)?;
        let girth = graph.girth();
        let pass = girth.passes_two_pi(opts.tol);
        Some((graph, girth, pass))
    } else {
        None
    };
    match opts.format {
        Format::Json => {
            let metric_json = metric.as_ref().map(|(graph, girth, pass)| {
                let mut value = girth_value(girth, *pass);
                value.as_object_mut().unwrap().insert(
                    "edges".into(),
                    Value::Array(
                        graph
                            .edges()
                            .iter()
                            .map(|e| {
                                json!({
                                    "endpoints": [e.endpoints.0.0, e.endpoints.1.0],
                                    "weight": e.weight,
                                })
                            })
                            .collect(),
                    ),
                );
                value
            });
            let out = json!({
                "simplex": simplex.ids(),
                "link_facets": link.facets().iter().map(|f| f.ids()).collect::<Vec<_>>(),
                "metric": metric_json,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!(
                "link of {simplex}: {} facets, {} vertices",
                link.facets().len(),
                link.vertex_count()
            );
            for f in link.facets() {
                println!("  {f}");
            }
            if let Some((graph, girth, pass)) = &metric {
                println!(
                    "metric link: {} vertices, {} weighted edges",
                    graph.vertices().len(),
                    graph.edges().len()
                );
                for e in graph.edges() {
                    println!(
                        "  {{{},{}}} weight {:.9}",
                        e.endpoints.0, e.endpoints.1, e.weight
                    );
                }
                match (girth.length, &girth.cycle) {
                    (Some(len), Some(cycle)) => println!(
                        "girth {:.9} on cycle {cycle}; threshold 2π = {TWO_PI:.9}: {}",
                        len,
                        if *pass { "pass" } else { "fail" }
                    ),
                    _ => println!("girth infinite (no cycle): pass"),
                }
            }
        }
    }
    Ok(match metric {
        Some((_, _, false)) => ExitStatus::Fail,
        _ => ExitStatus::Pass,
    })
}

pub struct DiskOptions {
    pub file: PathBuf,
    pub loop_ids: Vec<u32>,
    pub max_interior: usize,
    pub max_area: usize,
    pub format: Format,
}

pub fn cmd_disk(opts: DiskOptions) -> Result<ExitStatus, Error> {
    let (complex, _) = io::read_complex(&opts.file)?;
    let target = CombinatorialLoop::from_ids(opts.loop_ids.iter().copied())?;
    let outcome = find_minimal_spanning_disks(&complex, &target, opts.max_interior, opts.max_area)?;
    match outcome {
        DiskSearchOutcome::Found { area, solutions } => {
            match opts.format {
                Format::Json => {
                    let out = json!({
                        "status": "found",
                        "area": area,
                        "solutions": solutions.iter().map(solution_value).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => {
                    println!(
                        "minimal spanning disks for {target}: area {area}, {} solution(s)",
                        solutions.len()
                    );
                    for (i, s) in solutions.iter().enumerate() {
                        print_solution_text(i + 1, s);
                    }
                }
            }
            Ok(ExitStatus::Pass)
        }
        DiskSearchOutcome::NotFound {
            searched_areas,
            truncated,
        } => {
            match opts.format {
                Format::Json => {
                    let out = json!({
                        "status": if truncated { "truncated" } else { "not-found" },
                        "searched_areas": searched_areas,
                        "max_interior": opts.max_interior,
                        "max_area": opts.max_area,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => {
                    if truncated {
                        println!(
                            "search truncated by --max-interior {} before exhausting areas ≤ {} \
                             (searched {searched_areas:?}); no spanning disk found so far",
                            opts.max_interior, opts.max_area
                        );
                    } else {
                        println!(
                            "no spanning disk of area ≤ {} exists (searched areas {searched_areas:?})",
                            opts.max_area
                        );
                    }
                }
            }
            Ok(ExitStatus::Fail)
        }
    }
}

fn solution_value(s: &SpanningDisk) -> Value {
    let map: serde_json::Map<String, Value> = s
        .map
        .assignments()
        .iter()
        .map(|(k, v)| (k.0.to_string(), json!(v.0)))
        .collect();
    json!({
        "boundary": s.disk.boundary().ids(),
        "faces": s.disk.faces().iter().map(|f| f.ids()).collect::<Vec<_>>(),
        "map": map,
        "area": s.disk.area(),
        "gauss_bonnet_total": s.disk.gauss_bonnet_total(),
        "cat0": s.disk.is_cat0(),
        "boundary_curvature": s.disk.boundary_curvature(),
    })
}

fn print_solution_text(idx: usize, s: &SpanningDisk) {
    println!("solution {idx}:");
    println!("  boundary {}", s.disk.boundary());
    println!(
        "  faces {}",
        s.disk
            .faces()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "  map {}",
        s.map
            .assignments()
            .iter()
            .map(|(k, v)| format!("{k}→{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("  gauss-bonnet total {}", s.disk.gauss_bonnet_total());
    match s.disk.cat0_violation() {
        None => println!("  cat0 disk: true"),
        Some((v, d)) => println!("  cat0 disk: false (interior vertex {v} has degree {d})"),
    }
    println!("  boundary curvature {}", s.disk.boundary_curvature());
}

pub struct GenOptions {
    pub spec: GeneratorSpec,
    pub output: Option<PathBuf>,
}

pub fn cmd_gen(opts: GenOptions) -> Result<ExitStatus, Error> {
    let complex = opts.spec.build()?;
    let name = opts.spec.name();
    let summary = format!(
        "{name}: {} facets, {} vertices, dimension {}",
        complex.facets().len(),
        complex.vertex_count(),
        complex.dimension()
    );
    match &opts.output {
        Some(path) => {
            io::write_complex(path, &complex, Some(&name))?;
            println!("wrote {}: {summary}", path.display());
        }
        None => {
            print!("{}", io::to_canonical_json(&complex, Some(&name)));
            eprintln!("{summary}");
        }
    }
    Ok(ExitStatus::Pass)
}

pub struct DistanceOptions {
    pub file: PathBuf,
    pub from: u32,
    pub to: u32,
}

pub fn cmd_distance(opts: DistanceOptions) -> Result<ExitStatus, Error> {
    let (complex, _) = io::read_complex(&opts.file)?;
    match complex.combinatorial_distance(VertexId(opts.from), VertexId(opts.to))? {
        Some(d) => {
            println!("{d}");
            Ok(ExitStatus::Pass)
        }
        None => {
            println!("unreachable");
            Ok(ExitStatus::Fail)
        }
    }
}
