use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prime_spectra::closed_forms::{oracle_spectrum, SpectrumReport};
use prime_spectra::graph::{self, adjacency_matrix, find_isomorphism, Family, Graph};
use prime_spectra::linalg::{char_poly, det_bareiss, inverse_exact, Factorization};
use prime_spectra::recognition::{classify, ClassificationReport};
use prime_spectra::scalar::fmt_rational;
use prime_spectra::verify::{self, Formulas, SweepConfig};
use prime_spectra::{BigInt, BigRational};

/// Exact spectra and prime-graph recognition for bridge, suspension and
/// reseminant graphs.
#[derive(Parser)]
#[command(name = "prime-spectra", version)]
struct Cli {
    /// Disable ANSI colour (also honoured: the NO_COLOR variable).
    #[arg(long, global = true)]
    no_color: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family member as graph JSON, DOT or an adjacency table.
    Gen {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Prime-graph predicates with witnesses.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact determinant of the adjacency matrix.
    Det {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exact inverse of the adjacency matrix.
    Inverse {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Characteristic polynomial det(xI - A).
    Charpoly {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Certified spectrum: exact values and isolating intervals.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Isolating intervals are refined to width 2^-WIDTH_EXP.
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=200))]
        width_exp: u32,
        /// Also print decimal approximations with this many digits.
        #[arg(long)]
        decimals: Option<usize>,
    },
    /// Run the verification suite; exits 2 if any check fails.
    Verify {
        /// TOML file with sweep ranges; missing keys take the defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Run only these check ids (repeatable).
        #[arg(long = "only")]
        only: Vec<String>,
        /// List check ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Decide isomorphism of two graphs; each is a family spec such as
    /// `bridge:m=4,n=3` or a path to a graph JSON file.
    Isomorphic {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct Source {
    /// bridge, bridge-mm1, suspension, c5, reseminant or complete.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    family: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Graph JSON file: {"n": 5, "edges": [[0, 1], ...]}.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
    Factored,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Verification,
}

impl From<prime_spectra::Error> for Failure {
    fn from(e: prime_spectra::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

struct Loaded {
    graph: Graph,
    family: Option<Family>,
}

impl Source {
    fn load(&self) -> Result<Loaded, Failure> {
        match (&self.family, &self.graph) {
            (Some(name), None) => {
                let family = Family::from_parts(name, self.m, self.n, self.k)?;
                Ok(Loaded { graph: family.build()?, family: Some(family) })
            }
            (None, Some(path)) => Ok(Loaded { graph: read_graph(path)?, family: None }),
            _ => Err(Failure::Domain("give exactly one of --family or --graph".into())),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    graph::from_json(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_spec(spec: &str) -> Result<Graph, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        return read_graph(path);
    }
    let family: Family = spec.parse()?;
    Ok(family.build()?)
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::Domain(format!("`{cmd}` does not support --format {name}"))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn gen(source: &Source, format: Format) -> Outcome {
    let l = source.load()?;
    match format {
        Format::Json => Ok(graph::to_json(&l.graph)),
        Format::Dot => {
            let labels = l.family.map(|f| f.labels()).transpose()?;
            Ok(graph::to_dot(&l.graph, labels.as_deref()).trim_end().to_string())
        }
        Format::Table => Ok(adjacency_matrix(&l.graph).to_string()),
        f => Err(unsupported("gen", f)),
    }
}

fn classification_table(r: &ClassificationReport) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let edge = |w: Option<[usize; 2]>| w.map(|[u, v]| format!(" (edge {u}-{v})")).unwrap_or_default();
    let mut lines = vec![
        format!("order                        {}", r.order),
        format!("edges                        {}", r.edges),
        format!("connected                    {}", yes(r.connected)),
        format!(
            "complement triangle-free     {}{}",
            yes(r.complement_triangle_free),
            r.complement_triangle.map(|t| format!(" (triangle {t:?})")).unwrap_or_default()
        ),
        format!("complement 3-colourable      {}", yes(r.complement_three_colorable)),
        format!("prime graph                  {}", yes(r.is_prime_graph)),
        format!("minimal prime                {}{}", yes(r.is_minimal_prime), edge(r.minimal_prime_witness)),
        format!(
            "minimally connected prime    {}{}",
            yes(r.is_minimally_connected_prime),
            edge(r.minimally_connected_witness)
        ),
    ];
    if let Some(c) = &r.complement_coloring {
        lines.push(format!("complement colouring         {c:?}"));
    }
    lines.join("\n")
}

fn classify_cmd(source: &Source, format: Format) -> Outcome {
    let l = source.load()?;
    let r = classify(&l.graph);
    match format {
        Format::Json => Ok(pretty(&serde_json::to_value(&r).expect("report serializes"))),
        Format::Table => Ok(classification_table(&r)),
        f => Err(unsupported("classify", f)),
    }
}

fn det_cmd(source: &Source, format: Format) -> Outcome {
    let l = source.load()?;
    let d = det_bareiss(&adjacency_matrix(&l.graph))?;
    match format {
        Format::Table => Ok(d.to_string()),
        Format::Json => Ok(json!({"order": l.graph.n(), "determinant": d.to_string()}).to_string()),
        f => Err(unsupported("det", f)),
    }
}

fn inverse_cmd(source: &Source, format: Format) -> Outcome {
    let l = source.load()?;
    let inv = inverse_exact(&adjacency_matrix(&l.graph))?;
    match format {
        Format::Table => Ok(inv.to_string()),
        Format::Json => Ok(json!({"order": l.graph.n(), "inverse": inv.to_string_rows()}).to_string()),
        f => Err(unsupported("inverse", f)),
    }
}

fn charpoly_cmd(source: &Source, format: Format) -> Outcome {
    let l = source.load()?;
    let chi = char_poly(&adjacency_matrix(&l.graph))?;
    match format {
        Format::Table => Ok(chi.to_string()),
        Format::Factored => Ok(Factorization::of(&chi)?.to_string()),
        Format::Json => Ok(json!({
            "order": l.graph.n(),
            "coefficients": chi.to_json(),
            "polynomial": chi.to_string(),
            "factored": Factorization::of(&chi)?.to_string(),
        })
        .to_string()),
        f => Err(unsupported("charpoly", f)),
    }
}

fn spectrum_table(s: &SpectrumReport, decimals: Option<usize>) -> String {
    let rows: Vec<[String; 3]> = s
        .entries
        .iter()
        .map(|e| {
            let approx = decimals
                .map(|d| format!("~{}", e.descriptor.approx_text(d, &s.width)))
                .unwrap_or_default();
            [e.descriptor.exact_text(), format!("x{}", e.multiplicity), approx]
        })
        .collect();
    let w0 = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r[1].len()).max().unwrap_or(0);
    let mut lines: Vec<String> = rows
        .iter()
        .map(|r| format!("{:<w0$}  {:<w1$}  {}", r[0], r[1], r[2]).trim_end().to_string())
        .collect();
    let (lo, hi) = s.trace_interval();
    lines.push(format!("trace in [{}, {}]", fmt_rational(&lo), fmt_rational(&hi)));
    lines.join("\n")
}

fn spectrum_cmd(source: &Source, format: Format, width_exp: u32, decimals: Option<usize>) -> Outcome {
    let l = source.load()?;
    let width = BigRational::new(BigInt::from(1), BigInt::from(1) << width_exp as usize);
    let s = oracle_spectrum(&adjacency_matrix(&l.graph), &width)?;
    match format {
        Format::Table => Ok(spectrum_table(&s, decimals)),
        Format::Json => {
            let mut v = s.to_json();
            if let Some(d) = decimals {
                for (e, out) in s.entries.iter().zip(v["entries"].as_array_mut().expect("array")) {
                    out["approx"] = json!(e.descriptor.approx_text(d, &s.width));
                }
                v["approx_digits"] = json!(d);
            }
            Ok(pretty(&v))
        }
        f => Err(unsupported("spectrum", f)),
    }
}

fn verify_cmd(
    config: Option<&Path>,
    format: Format,
    only: &[String],
    list: bool,
    fault: Option<&str>,
    color: bool,
) -> Outcome {
    if list {
        return Ok(verify::check_ids().join("\n"));
    }
    let cfg = match config {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display())))?;
            SweepConfig::from_toml(&text)?
        }
        None => SweepConfig::default(),
    };
    let known = verify::check_ids();
    if let Some(bad) = only.iter().find(|id| !known.contains(&id.as_str())) {
        return Err(Failure::Domain(format!("unknown check id `{bad}`")));
    }
    let formulas = match fault {
        Some(name) => Formulas::with_fault(name)?,
        None => Formulas::default(),
    };
    let card = verify::run_selected(&cfg, &formulas, (!only.is_empty()).then_some(only));
    let text = match format {
        Format::Json => pretty(&card.to_json()),
        Format::Table => card.to_table(color).trim_end().to_string(),
        f => return Err(unsupported("verify", f)),
    };
    if card.exit_code() == 0 {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::Verification)
    }
}

fn isomorphic_cmd(first: &str, second: &str, format: Format) -> Outcome {
    let g = load_spec(first)?;
    let h = load_spec(second)?;
    let iso = find_isomorphism(&g, &h);
    match format {
        Format::Json => Ok(json!({
            "isomorphic": iso.is_some(),
            "mapping": iso.map(|i| i.mapping),
        })
        .to_string()),
        Format::Table => Ok(match iso {
            Some(i) => {
                let pairs: Vec<String> = i.mapping.iter().enumerate().map(|(u, v)| format!("{u}->{v}")).collect();
                format!("isomorphic: {}", pairs.join(" "))
            }
            None => "not isomorphic".into(),
        }),
        f => Err(unsupported("isomorphic", f)),
    }
}

fn run(cli: &Cli, color: bool) -> Outcome {
    match &cli.command {
        Command::Gen { source, format } => gen(source, *format),
        Command::Classify { source, format } => classify_cmd(source, *format),
        Command::Det { source, format } => det_cmd(source, *format),
        Command::Inverse { source, format } => inverse_cmd(source, *format),
        Command::Charpoly { source, format } => charpoly_cmd(source, *format),
        Command::Spectrum { source, format, width_exp, decimals } => {
            spectrum_cmd(source, *format, *width_exp, *decimals)
        }
        Command::Verify { config, format, only, list, inject_fault } => {
            verify_cmd(config.as_deref(), *format, only, *list, inject_fault.as_deref(), color)
        }
        Command::Isomorphic { first, second, format } => isomorphic_cmd(first, second, *format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let color = !cli.no_color && std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    match run(&cli, color) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}
