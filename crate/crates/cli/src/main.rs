//! `colorcut`: solve, kernelize, generate and verify colored cut instances.
//!
//! Exit codes: 0 yes / all checks passed, 1 no / a check failed, 2 usage or
//! input error, 3 refused because the search space exceeds the cap.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use colorcut::reductions::{
    cut_to_assignment, generate, parse_provenance, serialize_provenance, verify_graph,
    verify_structural, CheckResult, ReductionKind, StructuralReport,
};
use colorcut::sat::parse_dimacs;
use colorcut::solve::{brute_force_max_with_cap, decide_max_with_cap, DEFAULT_BRUTE_FORCE_CAP};
use colorcut::{
    colorful_cut_decide, greedy_half_colors, kernelize_colors, kernelize_value, parse_cut,
    parse_graph, serialize_cut, serialize_graph, ColoredGraph, Cut, SolveError, Verdict,
};

#[derive(Parser)]
#[command(name = "colorcut", version, about = "Maximum colored cut and colorful cut toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum colored cut; with -k, decide whether k colors can be cut.
    Solve {
        /// Graph file in edge-colored graph format (`-` for stdin).
        graph: PathBuf,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = SolveAlgo::Brute)]
        algo: SolveAlgo,
        /// Largest vertex count searched exhaustively.
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: usize,
        /// Write the witness cut here instead of standard output.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Decide whether some cut carries every color.
    Colorful {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ColorfulAlgo::Sat)]
        algo: ColorfulAlgo,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: usize,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Remove color classes that every maximum cut must contain.
    Kernelize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        param: KernelParam,
        /// Cost threshold, required with `--param k`.
        #[arg(short = 'k')]
        k: Option<usize>,
        /// Write the reduced graph here instead of standard output.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Build a hard colorful cut instance from a CNF formula.
    Generate {
        #[arg(long, value_parser = parse_kind)]
        reduction: ReductionKind,
        #[arg(long)]
        cnf: PathBuf,
        /// Graph output file; the provenance sidecar goes to `<out>.prov`.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        /// Provenance sidecar location, overriding `<out>.prov`.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Check a graph (and optionally a cut) against the properties of a kind.
    Verify {
        /// A reduction kind, or `any` for cut checks only.
        #[arg(long, value_parser = parse_kind_filter)]
        kind: KindFilter,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cut: Option<PathBuf>,
        /// Source formula; the graph must equal the one generated from it.
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long)]
        provenance: Option<PathBuf>,
        /// Require at least this many cut colors instead of all of them.
        #[arg(long)]
        min_colors: Option<usize>,
    },
    /// Print size and per-color statistics.
    Stats { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveAlgo {
    Brute,
    Kernel,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorfulAlgo {
    Sat,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelParam {
    Colors,
    K,
}

fn parse_kind(s: &str) -> Result<ReductionKind, String> {
    s.parse()
}

/// A reduction kind, or none for `any`.
#[derive(Clone, Copy)]
struct KindFilter(Option<ReductionKind>);

fn parse_kind_filter(s: &str) -> Result<KindFilter, String> {
    if s == "any" {
        Ok(KindFilter(None))
    } else {
        s.parse().map(|k| KindFilter(Some(k)))
    }
}

enum Failure {
    Usage(String),
    Refused(String),
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::CapExceeded { .. } => Failure::Refused(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<ColoredGraph, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Sends a cut to `out` or appends it to the report.
fn emit_cut(report: &mut String, cut: &Cut, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => write_text(path, &serialize_cut(cut)),
        None => {
            report.push_str(&serialize_cut(cut));
            Ok(())
        }
    }
}

fn solve(
    graph: &Path,
    k: Option<usize>,
    algo: SolveAlgo,
    cap: usize,
    out: Option<&Path>,
) -> Outcome {
    if matches!(algo, SolveAlgo::Kernel) && k.is_none() {
        return Err(usage("--algo kernel requires -k"));
    }
    if k == Some(0) {
        return Err(usage("-k must be positive"));
    }
    let g = read_graph(graph)?;
    let mut report = String::new();
    let witness = match algo {
        SolveAlgo::Brute => Some(brute_force_max_with_cap(&g, cap)?.witness),
        SolveAlgo::Greedy => Some(greedy_half_colors(&g)?),
        SolveAlgo::Kernel => decide_max_with_cap(&g, k.unwrap(), cap)?.witness,
    };
    let value = match &witness {
        Some(cut) => g.cut_colors(cut).map_err(usage)?.len(),
        None => 0,
    };
    let yes = match k {
        Some(k) => witness.is_some() && value >= k,
        None => true,
    };
    if witness.is_some() {
        let _ = writeln!(report, "value {value}");
    }
    if let Some(k) = k {
        let answer = match (yes, algo) {
            (true, _) => "yes",
            (false, SolveAlgo::Greedy) => "unknown",
            (false, _) => "no",
        };
        let _ = writeln!(report, "answer {answer} (k = {k})");
    }
    if let Some(cut) = &witness {
        emit_cut(&mut report, cut, out)?;
    }
    Ok((report, yes))
}

fn colorful(graph: &Path, algo: ColorfulAlgo, cap: usize, out: Option<&Path>) -> Outcome {
    let g = read_graph(graph)?;
    let cut = match algo {
        ColorfulAlgo::Sat => colorful_cut_decide(&g)?,
        ColorfulAlgo::Brute => {
            let best = brute_force_max_with_cap(&g, cap)?;
            (best.value == g.p()).then_some(best.witness)
        }
    };
    let mut report = String::new();
    match &cut {
        Some(cut) => {
            report.push_str("colorful yes\n");
            emit_cut(&mut report, cut, out)?;
        }
        None => report.push_str("colorful no\n"),
    }
    Ok((report, cut.is_some()))
}

fn kernelize(graph: &Path, param: KernelParam, k: Option<usize>, out: Option<&Path>) -> Outcome {
    let outcome = match (param, k) {
        (KernelParam::Colors, None) => None,
        (KernelParam::Colors, Some(_)) => return Err(usage("-k applies to --param k only")),
        (KernelParam::K, None) => return Err(usage("--param k requires -k")),
        (KernelParam::K, Some(k)) => Some(k),
    };
    let g = read_graph(graph)?;
    let kernel = match outcome {
        None => kernelize_colors(&g),
        Some(k) => kernelize_value(&g, k).map_err(usage)?,
    };
    let mut report = format!(
        "removed {} colors, p' {}",
        kernel.removed_colors.len(),
        kernel.last.p()
    );
    if let Some(k) = kernel.remaining_k {
        let _ = write!(report, ", k' {k}");
    }
    report.push('\n');
    if kernel.verdict == Verdict::EarlyYes {
        report.push_str("answer yes (k' <= ceil(p'/2))\n");
    }
    let text = serialize_graph(&kernel.last);
    match out {
        Some(path) => write_text(path, &text)?,
        None => report.push_str(&text),
    }
    Ok((report, true))
}

fn generate_cmd(
    kind: ReductionKind,
    cnf: &Path,
    out: &Path,
    provenance: Option<&Path>,
) -> Outcome {
    let f = parse_dimacs(&read_text(cnf)?).map_err(|e| usage(format!("{}: {e}", cnf.display())))?;
    let a = generate(kind, &f).map_err(usage)?;
    let sidecar = match provenance {
        Some(p) => p.to_path_buf(),
        None => {
            let mut s = out.as_os_str().to_owned();
            s.push(".prov");
            PathBuf::from(s)
        }
    };
    write_text(out, &serialize_graph(&a.graph))?;
    write_text(&sidecar, &serialize_provenance(&a.provenance()))?;
    let report = format!(
        "{kind}: n {}, m {}, p {}, clauses kept {}, removed {}\n",
        a.graph.n(),
        a.graph.m(),
        a.graph.p(),
        a.core.clauses().len(),
        a.removed_clauses.len()
    );
    Ok((report, true))
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn verify(
    kind: Option<ReductionKind>,
    graph: &Path,
    cut: Option<&Path>,
    cnf: Option<&Path>,
    provenance: Option<&Path>,
    min_colors: Option<usize>,
) -> Outcome {
    if cnf.is_some() && kind.is_none() {
        return Err(usage("--cnf needs a concrete --kind"));
    }
    let g = read_graph(graph)?;
    let formula = match cnf {
        Some(p) => Some(
            parse_dimacs(&read_text(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    let sidecar = match provenance {
        Some(p) => Some(
            parse_provenance(&read_text(p)?)
                .map_err(|e| usage(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    let cut = match cut {
        Some(p) => {
            Some(parse_cut(&read_text(p)?, g.n()).map_err(|e| usage(format!("{}: {e}", p.display())))?)
        }
        None => None,
    };

    let artifact = match (kind, &formula) {
        (Some(kind), Some(f)) => Some(generate(kind, f).map_err(usage)?),
        _ => None,
    };
    let mut checks = match (&artifact, kind) {
        (Some(a), _) => {
            let mut r = verify_structural(a).checks;
            r.insert(
                0,
                check(
                    "matches-generator",
                    a.graph == g,
                    if a.graph == g {
                        "graph equals the one generated from the formula".to_string()
                    } else {
                        format!("generated n {}, m {}, p {}", a.graph.n(), a.graph.m(), a.graph.p())
                    },
                ),
            );
            r
        }
        (None, Some(kind)) => {
            let apex = sidecar.as_ref().and_then(|p| {
                p.vertices
                    .iter()
                    .position(|r| *r == colorcut::reductions::VertexRole::Apex)
                    .map(|i| i + 1)
            });
            verify_graph(kind, &g, apex).checks
        }
        (None, None) => Vec::new(),
    };

    if let Some(p) = &sidecar {
        let sized = p.colors.len() == g.p() && p.vertices.len() == g.n();
        checks.push(check(
            "provenance-size",
            sized,
            format!("{} colors, {} vertices", p.colors.len(), p.vertices.len()),
        ));
        if let Some(a) = &artifact {
            let same = *p == a.provenance();
            checks.push(check("provenance-matches", same, if same { "identical" } else { "differs" }));
        }
    }

    let mut assignment_line = None;
    if let Some(cut) = &cut {
        let colors = g.cut_colors(cut).map_err(usage)?.len();
        let (name, need) = match min_colors {
            Some(k) => ("cut-colors", k),
            None => ("cut-colorful", g.p()),
        };
        checks.push(check(
            name,
            colors >= need,
            format!("{colors} of {} colors cut, {need} required", g.p()),
        ));
        if let (Some(a), true) = (&artifact, a_matches(&artifact, &g)) {
            match cut_to_assignment(a, cut) {
                Ok(asg) => {
                    let goal = if a.kind.is_sat_based() { "satisfies" } else { "NAE-satisfies" };
                    checks.push(check("decoded-assignment", true, format!("{goal} the formula")));
                    assignment_line = Some(asg.to_dimacs_line());
                }
                Err(e) => checks.push(check("decoded-assignment", false, e.to_string())),
            }
        }
    }

    let report = StructuralReport { kind: kind.unwrap_or(ReductionKind::Planar3SatMulti), checks };
    let passed = report.all_passed();
    let mut text = report.to_string();
    if let Some(line) = assignment_line {
        text.push_str(&line);
        text.push('\n');
    }
    let _ = writeln!(
        text,
        "{} ({} of {} checks passed)",
        if passed { "PASS" } else { "FAIL" },
        report.checks.iter().filter(|c| c.passed).count(),
        report.checks.len()
    );
    Ok((text, passed))
}

fn a_matches(artifact: &Option<colorcut::ReductionArtifact>, g: &ColoredGraph) -> bool {
    artifact.as_ref().is_some_and(|a| a.graph == *g)
}

fn stats(graph: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let mut report = format!("n {}\nm {}\np {}\n", g.n(), g.m(), g.p());
    for (i, class) in g.color_classes().iter().enumerate() {
        let c = i + 1;
        let pairs = g.distinct_pairs_of_color(c).map_err(usage)?;
        let span = g.color_span(c).map_err(usage)?;
        let _ = writeln!(
            report,
            "color {c} edges {} pairs {pairs} span {span}",
            class.len()
        );
    }
    Ok((report, true))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve { graph, k, algo, cap, out } => solve(&graph, k, algo, cap, out.as_deref()),
        Command::Colorful { graph, algo, cap, out } => colorful(&graph, algo, cap, out.as_deref()),
        Command::Kernelize { graph, param, k, out } => kernelize(&graph, param, k, out.as_deref()),
        Command::Generate { reduction, cnf, out, provenance } => {
            generate_cmd(reduction, &cnf, &out, provenance.as_deref())
        }
        Command::Verify { kind: KindFilter(kind), graph, cut, cnf, provenance, min_colors } => verify(
            kind,
            &graph,
            cut.as_deref(),
            cnf.as_deref(),
            provenance.as_deref(),
            min_colors,
        ),
        Command::Stats { graph } => stats(&graph),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, yes)) => {
            print!("{report}");
            ExitCode::from(if yes { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
