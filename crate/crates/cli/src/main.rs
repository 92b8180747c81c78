//! `symspec` -- spectral gaps of Cayley and Schreier graphs on the symmetric
//! group from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symspec::bounds::{
    branching_lower_bound, branching_terms, default_decomposition, has_property_a,
    psi_n11_via_defining, recursion_check, render_gap_table, GAP_TOL,
};
use symspec::cayley::{cayley_gap_irrep, cayley_laplacian_dense_with_cap, full_spectrum_irrep};
use symspec::perm::GeneratingSet;
use symspec::schreier::{schreier_graph_n22_weighted, schreier_spectrum};
use symspec::spectrum::{round_sig, sym_eigenvalues};
use symspec::verify::verify_all_with_caps;
use symspec::{GroupAlgebraElement, DEFAULT_DENSE_CAP, DEFAULT_IRREP_CAP};

#[derive(Parser)]
#[command(
    name = "symspec",
    version,
    about = "Spectral gaps of Cayley and Schreier graphs on the symmetric group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    /// Per-irreducible-representation scan (exact decomposition of the Laplacian).
    Irrep,
    /// Dense n! x n! regular-representation Laplacian.
    Dense,
    /// Defining-representation shortcut for psi((n-1,1), w); equals the gap
    /// exactly when the element has property (A).
    Defining,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Irrep => "irrep",
            Method::Dense => "dense",
            Method::Defining => "defining",
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct CommonOpts {
    /// Degree n of the symmetric group (required for named generator families).
    #[arg(long)]
    n: Option<usize>,

    /// Generating set: reversals | adjacent-transpositions |
    /// all-transpositions | a path to a group-algebra-element JSON file.
    #[arg(long, default_value = "reversals")]
    generators: String,

    /// Comparison tolerance attached to emitted spectra.
    #[arg(long, default_value_t = 1e-7)]
    tolerance: f64,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    /// Cap for the dense n! x n! path (default 7; env SYMSPEC_DENSE_CAP).
    #[arg(long)]
    dense_cap: Option<usize>,

    /// Cap for per-irrep scans (default 8; env SYMSPEC_IRREP_CAP).
    #[arg(long)]
    irrep_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral gap of the weighted Cayley graph X(S_n, w).
    Gap {
        #[command(flatten)]
        opts: CommonOpts,
        #[arg(long, value_enum, default_value_t = Method::Irrep)]
        method: Method,
    },
    /// Full Laplacian spectrum of the Cayley graph, or of the (n-2,2)
    /// Schreier coset graph with --schreier.
    Spectrum {
        #[command(flatten)]
        opts: CommonOpts,
        #[arg(long, value_enum, default_value_t = Method::Irrep)]
        method: Method,
        /// Compute the (n-2,2) Schreier coset spectrum instead.
        #[arg(long)]
        schreier: bool,
    },
    /// The (n-2,2) Schreier coset graph as an edge list.
    Schreier {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Branching-rule lower bound on the gap, with the recursion table.
    Bound {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Property (A): is lambda_max maximized at the partition (n-1,1)?
    PropertyA {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the full verification battery up to a maximum degree.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        #[arg(long)]
        dense_cap: Option<usize>,
        #[arg(long)]
        irrep_cap: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn cap_value(flag: Option<usize>, env: &str, default: usize) -> usize {
    flag.or_else(|| std::env::var(env).ok().and_then(|s| s.parse().ok()))
        .unwrap_or(default)
}

fn dense_cap(flag: Option<usize>) -> usize {
    cap_value(flag, "SYMSPEC_DENSE_CAP", DEFAULT_DENSE_CAP)
}

fn irrep_cap(flag: Option<usize>) -> usize {
    cap_value(flag, "SYMSPEC_IRREP_CAP", DEFAULT_IRREP_CAP)
}

/// Resolves the generator specification to a group-algebra element plus a
/// label for the output.
fn load_element(opts: &CommonOpts) -> Result<(GroupAlgebraElement, String), String> {
    let named = |n: Option<usize>| -> Result<usize, String> {
        n.ok_or_else(|| "--n is required with a named generator family".to_string())
    };
    let w = match opts.generators.as_str() {
        "reversals" => {
            GroupAlgebraElement::reversal_element(named(opts.n)?).map_err(|e| e.to_string())?
        }
        "adjacent-transpositions" => GroupAlgebraElement::indicator(
            &GeneratingSet::adjacent_transpositions(named(opts.n)?).map_err(|e| e.to_string())?,
        ),
        "all-transpositions" => GroupAlgebraElement::indicator(
            &GeneratingSet::all_transpositions(named(opts.n)?).map_err(|e| e.to_string())?,
        ),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read generator file {path}: {e}"))?;
            let w = GroupAlgebraElement::from_json(&text)
                .map_err(|e| format!("malformed generator file {path}: {e}"))?;
            if let Some(n) = opts.n {
                if n != w.degree() {
                    return Err(format!(
                        "--n {n} disagrees with degree {} in {path}",
                        w.degree()
                    ));
                }
            }
            w
        }
    };
    Ok((w, opts.generators.clone()))
}

/// Rounds every float in a JSON tree to 12 significant digits so identical
/// inputs serialize byte-identically.
fn round_floats(value: &mut Value) {
    match value {
        Value::Number(num) => {
            if num.is_f64() {
                if let Some(f) = num.as_f64() {
                    if let Some(rounded) = serde_json::Number::from_f64(round_sig(f, 12)) {
                        *value = Value::Number(rounded);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn emit_json(mut value: Value) {
    round_floats(&mut value);
    println!("{value}");
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gap { opts, method } => run_gap(opts, method),
        Command::Spectrum {
            opts,
            method,
            schreier,
        } => run_spectrum(opts, method, schreier),
        Command::Schreier { opts } => run_schreier(opts),
        Command::Bound { opts } => run_bound(opts),
        Command::PropertyA { opts } => run_property_a(opts),
        Command::Verify {
            n_max,
            output,
            dense_cap: dc,
            irrep_cap: ic,
        } => run_verify(n_max, output, dense_cap(dc), irrep_cap(ic)),
    }
}

fn run_gap(opts: CommonOpts, method: Method) -> Result<ExitCode, String> {
    let (w, label) = load_element(&opts)?;
    let n = w.degree();
    let mut payload = json!({
        "command": "gap",
        "n": n,
        "generators": label,
        "method": method.label(),
        "tolerance": opts.tolerance,
    });
    let gap = match method {
        Method::Irrep => {
            if n > irrep_cap(opts.irrep_cap) {
                return Err(format!(
                    "degree {n} exceeds irrep cap {} (override with --irrep-cap)",
                    irrep_cap(opts.irrep_cap)
                ));
            }
            let scan = cayley_gap_irrep(&w).map_err(|e| e.to_string())?;
            payload["argmin_partition"] = json!(scan.argmin);
            payload["generates"] = json!(scan.generates);
            scan.gap
        }
        Method::Dense => {
            let lap = cayley_laplacian_dense_with_cap(&w, dense_cap(opts.dense_cap))
                .map_err(|e| e.to_string())?;
            let spec = sym_eigenvalues(&lap).map_err(|e| e.to_string())?;
            spec.gap().ok_or("degree too small for a spectral gap")?
        }
        Method::Defining => psi_n11_via_defining(&w).map_err(|e| e.to_string())?,
    };
    payload["gap"] = json!(gap);
    match opts.output {
        OutputFormat::Json => emit_json(payload),
        OutputFormat::Csv => {
            println!("key,value");
            println!("gap,{}", round_sig(gap, 12));
            println!("method,{}", method.label());
        }
        OutputFormat::Table => {
            println!("gap = {} (method {})", round_sig(gap, 12), method.label());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_spectrum(opts: CommonOpts, method: Method, schreier: bool) -> Result<ExitCode, String> {
    let (w, _) = load_element(&opts)?;
    let n = w.degree();
    let (spectrum, method_label) = if schreier {
        let graph = schreier_graph_n22_weighted(&w).map_err(|e| e.to_string())?;
        (
            schreier_spectrum(&graph).map_err(|e| e.to_string())?,
            "schreier",
        )
    } else {
        match method {
            Method::Irrep => {
                if n > irrep_cap(opts.irrep_cap) {
                    return Err(format!(
                        "degree {n} exceeds irrep cap {} (override with --irrep-cap)",
                        irrep_cap(opts.irrep_cap)
                    ));
                }
                (full_spectrum_irrep(&w).map_err(|e| e.to_string())?, "irrep")
            }
            Method::Dense => {
                let lap = cayley_laplacian_dense_with_cap(&w, dense_cap(opts.dense_cap))
                    .map_err(|e| e.to_string())?;
                (sym_eigenvalues(&lap).map_err(|e| e.to_string())?, "dense")
            }
            Method::Defining => return Err("spectrum supports --method irrep or dense".to_string()),
        }
    };
    let spectrum = spectrum.with_tolerance(opts.tolerance);
    match opts.output {
        OutputFormat::Json => {
            emit_json(serde_json::to_value(spectrum.export(n, method_label)).unwrap())
        }
        OutputFormat::Csv => print!("{}", spectrum.to_csv()),
        OutputFormat::Table => {
            println!(
                "n = {n}, method = {method_label}, {} eigenvalues",
                spectrum.len()
            );
            let rendered: Vec<String> = spectrum
                .values()
                .iter()
                .map(|v| format!("{}", round_sig(*v, 12)))
                .collect();
            println!("[{}]", rendered.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_schreier(opts: CommonOpts) -> Result<ExitCode, String> {
    let (w, label) = load_element(&opts)?;
    let graph = schreier_graph_n22_weighted(&w).map_err(|e| e.to_string())?;
    match opts.output {
        OutputFormat::Csv => print!("{}", graph.edge_list_csv()),
        OutputFormat::Json => {
            let vertices: Vec<String> = graph
                .vertices()
                .iter()
                .map(|(i, j)| format!("{i},{j}"))
                .collect();
            let edges: Vec<Value> = graph
                .actions()
                .iter()
                .enumerate()
                .flat_map(|(g, action)| {
                    let vertices = &vertices;
                    action.iter().enumerate().map(move |(v, &image)| {
                        json!({
                            "src": vertices[v],
                            "dst": vertices[image],
                            "generator": g,
                        })
                    })
                })
                .collect();
            emit_json(json!({
                "command": "schreier",
                "n": graph.degree(),
                "generators": label,
                "vertices": vertices,
                "edges": edges,
            }));
        }
        OutputFormat::Table => {
            println!(
                "Schreier graph on {} cosets ({} generators, total weight {})",
                graph.vertex_count(),
                graph.actions().len(),
                graph.total_weight()
            );
            print!("{}", graph.edge_list_csv());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bound(opts: CommonOpts) -> Result<ExitCode, String> {
    let (w, label) = load_element(&opts)?;
    let n = w.degree();
    if n > irrep_cap(opts.irrep_cap) {
        return Err(format!(
            "degree {n} exceeds irrep cap {} (override with --irrep-cap)",
            irrep_cap(opts.irrep_cap)
        ));
    }
    let d = default_decomposition(&w).map_err(|e| e.to_string())?;
    let terms = branching_terms(&d).map_err(|e| e.to_string())?;
    let bound = branching_lower_bound(&d).map_err(|e| e.to_string())?;
    let recursion = recursion_check(&d).map_err(|e| e.to_string())?;
    let sound = recursion.iter().all(|l| l.lhs >= l.rhs - GAP_TOL);
    match opts.output {
        OutputFormat::Json => emit_json(json!({
            "command": "bound",
            "n": n,
            "generators": label,
            "method": "irrep",
            "lower_bound": bound,
            "terms": terms.iter().map(|(k, v)| json!({"k": k, "psi_hook": v})).collect::<Vec<_>>(),
            "recursion": recursion,
            "recursion_sound": sound,
        })),
        OutputFormat::Csv => {
            println!("k,psi_hook");
            for (k, v) in &terms {
                println!("{k},{}", round_sig(*v, 12));
            }
            println!("bound,{}", round_sig(bound, 12));
        }
        OutputFormat::Table => {
            println!(
                "branching lower bound = {} (method irrep)",
                round_sig(bound, 12)
            );
            for (k, v) in &terms {
                println!("  k = {k}: psi((k-1,1), w_k) = {}", round_sig(*v, 12));
            }
            for level in &recursion {
                println!(
                    "  recursion n = {}: gap {} >= min {}",
                    level.degree,
                    round_sig(level.lhs, 12),
                    round_sig(level.rhs, 12)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_property_a(opts: CommonOpts) -> Result<ExitCode, String> {
    let (w, label) = load_element(&opts)?;
    let n = w.degree();
    if n > irrep_cap(opts.irrep_cap) {
        return Err(format!(
            "degree {n} exceeds irrep cap {} (override with --irrep-cap)",
            irrep_cap(opts.irrep_cap)
        ));
    }
    let result = has_property_a(&w).map_err(|e| e.to_string())?;
    match opts.output {
        OutputFormat::Json => emit_json(json!({
            "command": "property-a",
            "n": n,
            "generators": label,
            "method": "irrep",
            "holds": result.holds,
            "worst_partition": result.worst,
            "lambda_max_worst": result.lambda_max_worst,
            "lambda_max_hook": result.lambda_max_hook,
        })),
        OutputFormat::Csv => {
            println!("key,value");
            println!("holds,{}", result.holds);
            println!("worst_partition,{}", result.worst);
            println!(
                "lambda_max_worst,{}",
                round_sig(result.lambda_max_worst, 12)
            );
            println!("lambda_max_hook,{}", round_sig(result.lambda_max_hook, 12));
        }
        OutputFormat::Table => {
            println!(
                "property (A) {} (worst partition {}, lambda_max {} vs hook {})",
                if result.holds { "holds" } else { "fails" },
                result.worst,
                round_sig(result.lambda_max_worst, 12),
                round_sig(result.lambda_max_hook, 12)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    n_max: usize,
    output: OutputFormat,
    dense_cap: usize,
    irrep_cap: usize,
) -> Result<ExitCode, String> {
    if n_max < 2 {
        return Err("--n-max must be at least 2".to_string());
    }
    let outcome = verify_all_with_caps(n_max, irrep_cap, dense_cap).map_err(|e| e.to_string())?;
    let all_passed = outcome.all_passed();
    match output {
        OutputFormat::Json => {
            let failures: Vec<&str> = outcome.failures().iter().map(|c| c.name.as_str()).collect();
            emit_json(json!({
                "command": "verify",
                "n_max": n_max,
                "all_passed": all_passed,
                "checks": outcome.checks,
                "failures": failures,
                "reports": outcome.reports,
            }));
        }
        OutputFormat::Csv => {
            println!("check,passed");
            for c in &outcome.checks {
                println!("{},{}", c.name, c.passed);
            }
        }
        OutputFormat::Table => {
            for c in &outcome.checks {
                println!(
                    "{} {} - {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            if !outcome.reports.is_empty() {
                print!("{}", render_gap_table(&outcome.reports));
            }
            println!(
                "{}",
                if all_passed {
                    "all checks passed"
                } else {
                    "FAILURES PRESENT"
                }
            );
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
