//! Command-line front end: `construct`, `classify` and `verify`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parameter error,
//! 3 a resource cap was exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::canon;
use crate::classify::{self, ClassifyOptions, Existence};
use crate::constructions::{self, CoversnRecipe, K2mRecipe, KabRecipe, Recipe, Report};
use crate::cosetgraph;
use crate::error::Error;
use crate::io::{self, GraphFormat};
use crate::perm::Permutation;
use crate::quotient;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "symcover", version, about = "Arc-transitive covers and pseudocovers of complete graphs")]
pub struct Cli {
    /// Largest coset graph materialized.
    #[arg(long, global = true, env = "SYMCOVER_VERTEX_CAP", default_value_t = cosetgraph::DEFAULT_VERTEX_CAP)]
    pub vertex_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a coset graph from a construction and report its verdict.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Enumerate covers or pseudocovers of K_n up to isomorphism.
    Classify {
        #[command(subcommand)]
        which: Classify,
    },
    /// Run a verification sweep; exits 1 if any check fails.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
}

#[derive(Debug, Args)]
pub struct Output {
    /// Graph file format: graph6, dot or edgelist.
    #[arg(long, default_value = "graph6")]
    pub format: GraphFormat,
    /// Where to write the graph; `-` for stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the recipe in key-value form.
    #[arg(long)]
    pub save_recipe: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Faithful cover of K_n from L < S_{n-1}.
    Coversn {
        #[arg(long)]
        n: usize,
        /// Generator in cycle notation or a preset name; repeatable.
        #[arg(long = "L", required = true)]
        l: Vec<String>,
        /// Extra factor g0 in g = (1,2) g0.
        #[arg(long)]
        g0: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Dihedral pseudocover of K_{2m+1}.
    K2m {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Abelian pseudocover of K_{ab+1}.
    Kab {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Any construction described by a recipe file.
    Recipe {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Ambient group: S<n>, A<n> or F5.
    #[arg(long)]
    pub group: String,
    /// Worker threads for the candidate sweep.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Largest ambient group order enumerated.
    #[arg(long, default_value_t = 10_000)]
    pub group_cap: usize,
    /// Largest automorphism group used in the normal-cover search.
    #[arg(long, default_value_t = 20_000)]
    pub aut_cap: usize,
    /// Allow n > 5, where completeness is not asserted.
    #[arg(long)]
    pub explore: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Classify {
    Covers(ClassifyArgs),
    Pseudocovers(ClassifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Dihedral family for m = 2..=m_max.
    K2m {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Abelian family for 2 <= a <= b with a <= a_max, b <= b_max.
    Kab {
        #[arg(long, default_value_t = 5)]
        a_max: usize,
        #[arg(long, default_value_t = 5)]
        b_max: usize,
    },
    /// Cover table of K_5 and the pseudocover counts around it.
    TableK5 {
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Pseudocover existence for the listed n.
    Existence {
        #[arg(long, value_delimiter = ',', default_values_t = [4, 5, 6, 7, 9, 10, 13])]
        n: Vec<usize>,
        /// Largest n with prime n-1 searched exhaustively.
        #[arg(long, default_value_t = 6)]
        exhaustive_max: usize,
    },
    /// Arc-regular covers from the regular cyclic subgroup, n = 4..=n_max.
    Series {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Usage(String),
    Checks(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` and runs the command, writing to stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(run(&cli, &mut out))
}

/// Runs a parsed command; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> u8 {
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Checks(report)) => {
            let _ = write!(out, "{report}");
            for c in report.failures() {
                eprintln!("counterexample: {}: {}", c.name, c.detail);
            }
            EXIT_CHECK_FAILED
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_cap_exceeded() {
                EXIT_CAP
            } else {
                EXIT_USAGE
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct { which } => cmd_construct(which, cli.vertex_cap, out),
        Command::Classify { which } => cmd_classify(which, cli.vertex_cap, out),
        Command::Verify { which } => cmd_verify(which, cli.vertex_cap, out),
    }
}

fn cmd_construct(which: &Construct, vertex_cap: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let (recipe, output) = match which {
        Construct::Coversn { n, l, g0, output } => {
            let mut gens = Vec::new();
            for s in l {
                if s.trim_start().starts_with('(') {
                    gens.push(Permutation::parse_cycles(s, *n)?);
                } else {
                    gens.extend(constructions::coversn_preset(s, *n)?);
                }
            }
            let mut r = CoversnRecipe::new(*n, gens)?;
            if let Some(g0) = g0 {
                r = r.with_g0(Permutation::parse_cycles(g0, *n)?)?;
            }
            (Recipe::Coversn(r), output)
        }
        Construct::K2m { m, output } => (Recipe::K2m(K2mRecipe::new(*m)?), output),
        Construct::Kab { a, b, output } => (Recipe::Kab(KabRecipe::new(*a, *b)?), output),
        Construct::Recipe { path, output } => {
            let text = fs::read_to_string(path)?;
            (text.parse::<Recipe>()?, output)
        }
    };
    let spec = recipe.build()?.with_vertex_cap(vertex_cap);
    let h = spec.group().point_stabilizer(recipe.omega())?;
    let verdict = quotient::classify_extender(&spec, &h)?;
    let graph = cosetgraph::build_coset_graph(&spec)?;
    let digest = canon::canonical_form_capped(&graph, vertex_cap)?.digest();
    let group = spec.group();
    writeln!(out, "recipe {} n={}", recipe.kind(), recipe.n())?;
    writeln!(out, "verdict {verdict}")?;
    writeln!(
        out,
        "vertices {} valency {} group_order {} giant {} digest {}",
        graph.vertex_count(),
        verdict.valency_gamma,
        group.order(),
        group.classify_giant(),
        digest
    )?;
    if let Some(path) = &output.save_recipe {
        fs::write(path, recipe.to_text())?;
    }
    if let Some(path) = &output.out {
        let bytes = io::export(&graph, output.format)?;
        if path.as_os_str() == "-" {
            out.write_all(&bytes)?;
        } else {
            fs::write(path, bytes)?;
        }
    }
    Ok(())
}

fn classify_options(args: &ClassifyArgs, vertex_cap: usize) -> ClassifyOptions {
    ClassifyOptions {
        group_cap: args.group_cap,
        vertex_cap,
        aut_cap: args.aut_cap,
        jobs: args.jobs,
    }
}

fn cmd_classify(which: &Classify, vertex_cap: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let (args, covers) = match which {
        Classify::Covers(a) => (a, true),
        Classify::Pseudocovers(a) => (a, false),
    };
    if args.n > 5 && !args.explore {
        return Err(Failure::Usage(format!(
            "n = {} is beyond the range where completeness is asserted; pass --explore",
            args.n
        )));
    }
    let group = classify::ambient_group(&args.group, args.n)?;
    let opts = classify_options(args, vertex_cap);
    let report = if covers {
        classify::enumerate_covers(args.n, &args.group, &group, &opts)?
    } else {
        classify::enumerate_pseudocovers(args.n, &args.group, &group, &opts)?
    };
    let text = report.to_string();
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn finish(report: Report, out: &mut dyn Write) -> Result<(), Failure> {
    if report.all_passed() {
        write!(out, "{report}")?;
        Ok(())
    } else {
        Err(Failure::Checks(report))
    }
}

fn cmd_verify(which: &Verify, vertex_cap: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let mut report = Report::default();
    match which {
        Verify::K2m { m_max } => {
            if *m_max < 2 {
                return Err(Failure::Usage("--m-max must be at least 2".into()));
            }
            for m in 2..=*m_max {
                report.extend(constructions::verify_k2m(m)?);
            }
        }
        Verify::Kab { a_max, b_max } => {
            if *a_max < 2 || *b_max < 2 {
                return Err(Failure::Usage("--a-max and --b-max must be at least 2".into()));
            }
            for a in 2..=*a_max {
                for b in a..=*b_max {
                    report.extend(constructions::verify_kab(a, b)?);
                }
            }
        }
        Verify::TableK5 { jobs } => {
            let opts = ClassifyOptions {
                vertex_cap,
                jobs: *jobs,
                ..ClassifyOptions::default()
            };
            report.extend(classify::verify_table_k5(&opts)?);
        }
        Verify::Existence { n, exhaustive_max } => {
            let opts = ClassifyOptions {
                vertex_cap,
                ..ClassifyOptions::default()
            };
            for &k in n {
                match classify::check_pseudocover_existence(k, *exhaustive_max, &opts) {
                    Ok(Existence::Exists { a, b, verdict }) => {
                        report.check(format!("K{k} pseudocover"), true, format!("kab({a},{b}): {verdict}"))
                    }
                    Ok(Existence::NoneProven { groups_searched }) => report.check(
                        format!("K{k} pseudocover"),
                        true,
                        format!("none over {groups_searched} 2-transitive groups"),
                    ),
                    Ok(Existence::Inconclusive(why)) => {
                        writeln!(out, "SKIP K{k} pseudocover: {why}")?;
                    }
                    Err(e) if e.is_cap_exceeded() => {
                        writeln!(out, "SKIP K{k} pseudocover: {e}")?;
                    }
                    Err(e) => report.check(format!("K{k} pseudocover"), false, e.to_string()),
                }
            }
        }
        Verify::Series { n_max } => {
            for row in classify::arc_regular_cover_series(*n_max, vertex_cap)? {
                let ok = row.vertex_formula && row.arc_regular && row.materialized != Some(false);
                report.check(
                    format!("n={} arc-regular cover", row.n),
                    ok,
                    format!(
                        "|V| = {} |G| = {} arc-transitive {}",
                        row.vertex_count,
                        row.group_order,
                        match row.materialized {
                            Some(b) => b.to_string(),
                            None => "not materialized".into(),
                        }
                    ),
                );
            }
        }
    }
    finish(report, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String) {
        let cli = match Cli::try_parse_from(std::iter::once("symcover").chain(args.iter().copied())) {
            Ok(c) => c,
            Err(_) => return (EXIT_USAGE, String::new()),
        };
        let mut buf = Vec::new();
        let code = run(&cli, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn construct_k2m() {
        let (code, text) = run_args(&["construct", "k2m", "--m", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("verdict pseudocover 4 4 5 6"), "{text}");
        assert!(text.contains("vertices 30 valency 4 group_order 120 giant symmetric"), "{text}");
    }

    #[test]
    fn construct_cube_graph6() {
        let (code, text) = run_args(&["construct", "coversn", "--n", "4", "--L", "cyclic", "--out", "-"]);
        assert_eq!(code, EXIT_OK);
        let g6 = text.lines().last().unwrap();
        let g = io::from_graph6(g6).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.is_bipartite());
    }

    #[test]
    fn kab_and_k2m_agree() {
        let digest = |t: &str| t.split("digest ").nth(1).unwrap().trim().to_string();
        let (_, a) = run_args(&["construct", "kab", "--a", "2", "--b", "2"]);
        let (_, b) = run_args(&["construct", "k2m", "--m", "2"]);
        assert_eq!(digest(&a), digest(&b));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["construct", "k2m", "--m", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["construct", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["classify", "covers", "--n", "6", "--group", "S6"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--vertex-cap", "10", "construct", "k2m", "--m", "2"]).0, EXIT_CAP);
    }

    #[test]
    fn classify_empty_reports() {
        let (code, text) = run_args(&["classify", "pseudocovers", "--n", "4", "--group", "S4"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("classes=0"));
        let (code, text) = run_args(&["classify", "pseudocovers", "--n", "5", "--group", "A5"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("classes=0"));
    }

    #[test]
    fn verify_families() {
        assert_eq!(run_args(&["verify", "k2m", "--m-max", "4"]).0, EXIT_OK);
        assert_eq!(run_args(&["verify", "kab", "--a-max", "3", "--b-max", "3"]).0, EXIT_OK);
        assert_eq!(run_args(&["verify", "series", "--n-max", "5"]).0, EXIT_OK);
    }
}
