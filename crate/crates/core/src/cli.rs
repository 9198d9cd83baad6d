//! Command-line front end. Exit codes: 0 success, 1 a check disagreed,
//! 2 usage or parse error, 3 an enumeration hit its budget.

use crate::counting::{
    affine_groups_table, apq_table, d4_affine_table, doubly_extended_clusters_table, doubly_extended_codim_table,
    series_identity_check, series_identity_ids, Cell, Table,
};
use crate::error::{Error, Result};
use crate::explorer::{classify_subalgebra, count_faces, enumerate_exchange, enumerate_mutation_class, Budget, Status};
use crate::families::{build_named, build_special_framing, classify, parse_signature};
use crate::framing::frame_principal;
use crate::mcg::{parse_word, NamedElements};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "clustermod", version, about = "Quiver mutation classes, cluster modular groups and associahedron counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Vertex budget for enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_vertices: u64,
    /// Depth budget for enumerations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_depth: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Framing {
    None,
    Principal,
    Special,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableName {
    D4aff,
    DblClusters,
    DblCodims,
    AffineGroups,
    Apq,
    Series,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Family and type of a signature (`T:n/w`, `TBC:n`) or catalog name.
    Classify { name: String },
    /// Mutation class (no framing) or exchange complex of a seed.
    Explore {
        seed: String,
        #[arg(long, value_enum, default_value_t = Framing::None)]
        framing: Framing,
    },
    /// Reproduces a count table.
    Count {
        table: TableName,
        /// Largest p and q for `apq`, series order for `series`.
        #[arg(long)]
        max: Option<u64>,
        /// Comma-separated row names for `dbl-codims`.
        #[arg(long)]
        only: Option<String>,
    },
    /// Checks that each relation word in a file is a trivial transformation.
    Group { signature: String, file: std::path::PathBuf },
}

/// Result of a command: the text to emit and the exit code.
pub struct Outcome {
    pub code: i32,
    pub output: String,
    /// Diagnostics rather than results.
    pub is_error: bool,
}

impl Outcome {
    fn ok(code: i32, output: String) -> Self {
        Self { code, output, is_error: false }
    }
}

impl Common {
    fn budget(&self) -> Budget {
        Budget {
            max_vertices: self.budget_vertices as usize,
            max_depth: self.budget_depth.map_or(usize::MAX, |d| d as usize),
            ..Budget::default()
        }
    }

    fn render(&self, t: &Table) -> String {
        match self.format {
            Format::Text => t.to_text(),
            Format::Tsv => t.to_tsv(),
        }
    }

    fn pairs(&self, rows: &[(&str, String)]) -> String {
        rows.iter()
            .map(|(k, v)| match self.format {
                Format::Text => format!("{k}: {v}\n"),
                Format::Tsv => format!("{k}\t{v}\n"),
            })
            .collect()
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::IncompleteComplex => EXIT_TRUNCATED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome { code, output: e.to_string(), is_error: e.use_stderr() };
        }
    };
    if let Some(j) = cli.common.jobs {
        // Fails only when a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { code: exit_for(&e), output: format!("error: {e}\n"), is_error: true },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Classify { name } => cmd_classify(c, name),
        Command::Explore { seed, framing } => cmd_explore(c, seed, *framing),
        Command::Count { table, max, only } => cmd_count(c, *table, *max, only.as_deref()),
        Command::Group { signature, file } => cmd_group(c, signature, file),
    }
}

fn cmd_classify(c: &Common, name: &str) -> Result<Outcome> {
    let label = match parse_signature(name) {
        Ok(sig) => vec![classify(&sig)],
        Err(_) => classify_subalgebra(&build_named(name)?.quiver, &[])?,
    };
    let text: Vec<String> = label.iter().map(|l| l.to_string()).collect();
    let output = match c.format {
        Format::Text => format!("{}\n", text.join(" x ")),
        Format::Tsv => format!("{name}\t{}\n", text.join("\t")),
    };
    Ok(Outcome::ok(EXIT_OK, output))
}

fn status_code(s: Status) -> i32 {
    if s.is_complete() {
        EXIT_OK
    } else {
        EXIT_TRUNCATED
    }
}

fn cmd_explore(c: &Common, seed: &str, framing: Framing) -> Result<Outcome> {
    let named = build_named(seed)?;
    let budget = c.budget();
    match framing {
        Framing::None => {
            let g = enumerate_mutation_class(&named.quiver, &budget)?;
            let loops: usize = g.undirected.iter().filter(|e| e.is_loop()).count();
            let mut out = c.pairs(&[
                ("seed", seed.to_string()),
                ("status", g.status.to_string()),
                ("classes", g.class_count().to_string()),
                ("undirected edges", g.undirected.len().to_string()),
                ("loops", loops.to_string()),
                ("diameter", g.diameter.to_string()),
            ]);
            out.push_str(&g.to_text());
            Ok(Outcome::ok(status_code(g.status), out))
        }
        Framing::Principal | Framing::Special => {
            let fq = if framing == Framing::Principal {
                frame_principal(&named.quiver)?
            } else {
                let sig = named
                    .sig
                    .ok_or_else(|| Error::Usage("the special framing needs a T signature".into()))?;
                build_special_framing(&sig)?
            };
            let ec = enumerate_exchange(&fq, &budget)?;
            let mut rows = vec![
                ("seed", seed.to_string()),
                ("status", ec.status.to_string()),
                ("vertices", ec.vertex_count().to_string()),
                ("variables", ec.variable_count().to_string()),
            ];
            if ec.status.is_complete() {
                let faces = (1..=ec.rank).map(|k| count_faces(&ec, k).map(|x| x.to_string())).collect::<Result<Vec<_>>>()?;
                rows.push(("faces by codimension", faces.join(" ")));
            }
            let mut out = c.pairs(&rows);
            out.push_str(&ec.to_text());
            Ok(Outcome::ok(status_code(ec.status), out))
        }
    }
}

fn table_outcome(c: &Common, tables: &[Table]) -> Outcome {
    let code = if tables.iter().any(|t| t.mismatches() > 0) { EXIT_MISMATCH } else { EXIT_OK };
    let output = tables.iter().map(|t| c.render(t)).collect::<Vec<_>>().join("\n");
    Outcome::ok(code, output)
}

fn cmd_count(c: &Common, table: TableName, max: Option<u64>, only: Option<&str>) -> Result<Outcome> {
    let budget = c.budget();
    let t = match table {
        TableName::D4aff => d4_affine_table(&budget)?,
        TableName::DblClusters => doubly_extended_clusters_table()?,
        TableName::DblCodims => {
            let names: Option<Vec<&str>> = only.map(|s| s.split(',').map(str::trim).collect());
            doubly_extended_codim_table(&budget, names.as_deref())?
        }
        TableName::AffineGroups => affine_groups_table(),
        TableName::Apq => apq_table(max.unwrap_or(10))?,
        TableName::Series => {
            let order = max.unwrap_or(30) as usize;
            let mut t = Table { title: format!("series identities to order {order}"), header: vec!["identity".into(), "holds".into()], rows: Vec::new() };
            for id in series_identity_ids() {
                let ok = series_identity_check(&id, order)?;
                let cell = if ok {
                    Cell::Match("true".into())
                } else {
                    Cell::Mismatch { computed: "false".into(), published: "true".into() }
                };
                t.rows.push(vec![Cell::Text(id), cell]);
            }
            t
        }
    };
    Ok(table_outcome(c, &[t]))
}

fn cmd_group(c: &Common, signature: &str, file: &std::path::Path) -> Result<Outcome> {
    let sig = parse_signature(signature)?;
    let text = std::fs::read_to_string(file).map_err(|e| Error::Usage(format!("{}: {e}", file.display())))?;
    let named = NamedElements::new(&sig)?;
    let mut out = String::new();
    let mut failed = false;
    for (i, line) in text.lines().enumerate() {
        let word = parse_word(line, i + 1)?;
        if word.is_empty() {
            continue;
        }
        let trivial = named.evaluate(&word)?.is_trivial();
        failed |= !trivial;
        let verdict = if trivial { "TRIVIAL" } else { "NONTRIVIAL" };
        let shown = line.split('#').next().unwrap_or("").trim();
        out.push_str(&match c.format {
            Format::Text => format!("{verdict}  {shown}\n"),
            Format::Tsv => format!("{}\t{shown}\t{verdict}\n", i + 1),
        });
    }
    Ok(Outcome::ok(if failed { EXIT_MISMATCH } else { EXIT_OK }, out))
}

/// Runs the process: output to `--out` or stdout, errors to stderr.
pub fn main_entry() -> i32 {
    let args: Vec<OsString> = std::env::args_os().collect();
    let out_path = Cli::try_parse_from(&args).ok().and_then(|c| c.common.out);
    let outcome = run(args);
    if outcome.is_error {
        eprint!("{}", outcome.output);
        return outcome.code;
    }
    match out_path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, &outcome.output) {
                eprintln!("error: {}: {e}", p.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.code
}
