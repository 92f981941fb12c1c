//! The `graphcone` command line.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but the
//! computation fails or a check comes out negative, 2 on usage and parse
//! errors. Output is deterministic.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cone::{check_cone, ConeElement, ConeError};
use crate::graph::{
    caterpillar_normal_form, enumerate_networks, mutate, parse_graph, MutationStep, TrivalentGraph,
    Variant,
};
use crate::hilbert::{
    hilbert_brute_with, hilbert_compose, hilbert_series, verify_mutation_invariance, HilbertTable,
};
use crate::semigroup::{
    decompose, minimal_generators, verify_relation, EnumOptions, DEFAULT_DEGREE_CAP,
};

#[derive(Debug, Parser)]
#[command(
    name = "graphcone",
    version,
    about = "Lattice cones, generators and Hilbert functions of trivalent graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Compose,
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print vertex, edge, leaf, Betti and component counts.
    Info { graph: PathBuf },
    /// List all networks as degree-one elements.
    Networks { graph: PathBuf },
    /// List the minimal generators.
    Generators {
        graph: PathBuf,
        /// Highest degree searched when no closed form applies.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        max_degree: u32,
    },
    /// Write an element as a sum of generators (first Betti number at most 1).
    Decompose {
        graph: PathBuf,
        /// Element text, e.g. `deg=2;loop=1,bar=2,p3=1,p4=1`.
        element: String,
    },
    /// Print the Hilbert table.
    Hilbert {
        graph: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        /// Comma-separated leaves to grade by.
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// With `--method series`, use the printed balloon series.
        #[arg(long)]
        paper_literal: bool,
        /// Worker threads for enumeration.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Apply one mutation, or replay the steps listed in a file (`-` for stdin).
    Mutate {
        graph: PathBuf,
        #[arg(long, requires = "variant", conflicts_with = "replay")]
        edge: Option<String>,
        #[arg(long, requires = "edge")]
        variant: Option<Variant>,
        #[arg(long, required_unless_present = "edge")]
        replay: Option<PathBuf>,
    },
    /// Print the mutation steps to the caterpillar normal form and the result.
    Normalize { graph: PathBuf },
    /// Compare the Hilbert tables of two graphs.
    VerifyEquivalence {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<String>,
        /// Leaves of the second graph paired with `--leaves`; defaults to the same ids.
        #[arg(long, value_delimiter = ',')]
        leaves2: Option<Vec<String>>,
    },
    /// Check that two lists of cone elements have the same sum.
    Relation {
        graph: PathBuf,
        #[arg(long, required = true)]
        lhs: Vec<String>,
        #[arg(long, required = true)]
        rhs: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<String, Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        if path == Path::new("-") {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(Failure::Usage(
                    "standard input can be read only once".into(),
                ));
            }
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<TrivalentGraph, Failure> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn element(g: &TrivalentGraph, text: &str) -> Result<ConeElement, Failure> {
    ConeElement::parse(g, text).map_err(|e| match e {
        ConeError::Syntax(_) | ConeError::UnknownEdge(_) => Failure::Usage(e.to_string()),
        other => domain(other),
    })
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn with_steps(steps: &[MutationStep], g: &TrivalentGraph) -> String {
    let mut s = lines(steps.iter().map(|st| format!("# step {st}")));
    s.push_str(&g.to_text());
    s
}

/// Steps from lines `# step <edge> <variant>` or `<edge> <variant>`; edge
/// lines and other comments are skipped.
fn parse_steps(text: &str) -> Result<Vec<MutationStep>, Failure> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let body = match line.strip_prefix('#') {
            Some(c) => match c.trim_start().strip_prefix("step ") {
                Some(b) => b,
                None => continue,
            },
            None if line.is_empty() || line.starts_with("edge ") => continue,
            None => line,
        };
        let parts: Vec<&str> = body.split_whitespace().collect();
        let [edge, variant] = parts[..] else {
            return Err(Failure::Usage(format!(
                "line {}: expected `<edge> <variant>`",
                i + 1
            )));
        };
        let variant = variant
            .parse::<Variant>()
            .map_err(|e| Failure::Usage(format!("line {}: {e}", i + 1)))?;
        steps.push(MutationStep::new(edge, variant));
    }
    Ok(steps)
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn render(t: &HilbertTable, format: Format) -> String {
    match format {
        Format::Table => t.to_table(),
        Format::Json => t.to_json() + "\n",
    }
}

fn execute(cmd: Command, io: &mut Io<'_>, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Info { graph } => Ok(format!("{}\n", io.graph(&graph)?.invariants())),
        Command::Networks { graph } => {
            let g = io.graph(&graph)?;
            Ok(lines(
                enumerate_networks(&g)
                    .iter()
                    .map(|n| ConeElement::from_network(n).to_text(&g)),
            ))
        }
        Command::Generators { graph, max_degree } => {
            let g = io.graph(&graph)?;
            let set = minimal_generators(&g, max_degree).map_err(domain)?;
            if set.truncation_warning {
                let _ = writeln!(
                    err,
                    "warning: generators found at the degree cap {max_degree}; higher degrees may hold more"
                );
            }
            let mut text = String::new();
            for (d, gens) in set.by_degree() {
                text.push_str(&format!("# degree {d}: {} generators\n", gens.len()));
                text.push_str(&lines(gens.iter().map(|w| w.to_text(&g))));
            }
            Ok(text)
        }
        Command::Decompose {
            graph,
            element: text,
        } => {
            let g = io.graph(&graph)?;
            let w = element(&g, &text)?;
            check_cone(&g, &w).map_err(domain)?;
            let d = decompose(&g, &w).map_err(domain)?;
            Ok(lines(d.parts.iter().map(|p| p.to_text(&g))))
        }
        Command::Hilbert {
            graph,
            max_degree,
            leaves,
            method,
            format,
            paper_literal,
            threads,
        } => {
            let g = io.graph(&graph)?;
            let leaves = strs(&leaves);
            if paper_literal && method != Method::Series {
                return Err(Failure::Usage(
                    "--paper-literal needs --method series".into(),
                ));
            }
            let mut opts = EnumOptions::default();
            if let Some(n) = threads {
                // A second call finds the pool already built; the first size wins.
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
                opts.parallel = n > 1;
            }
            let t = match method {
                Method::Brute => hilbert_brute_with(&g, max_degree, &leaves, &opts),
                Method::Compose => hilbert_compose(&g, max_degree, &leaves),
                Method::Series => hilbert_series(&g, max_degree, &leaves, paper_literal),
            }
            .map_err(domain)?;
            if paper_literal {
                let _ = writeln!(
                    err,
                    "warning: the printed balloon series disagrees with the lattice-point count"
                );
            }
            Ok(render(&t, format))
        }
        Command::Mutate {
            graph,
            edge,
            variant,
            replay,
        } => {
            let g = io.graph(&graph)?;
            let steps = match (edge, variant, replay) {
                (Some(e), Some(v), None) => vec![MutationStep::new(e, v)],
                (None, None, Some(path)) => parse_steps(&io.read(&path)?)?,
                _ => {
                    return Err(Failure::Usage(
                        "give --edge with --variant, or --replay".into(),
                    ))
                }
            };
            let mut cur = g;
            for s in &steps {
                cur = mutate(&cur, s).map_err(domain)?;
            }
            Ok(with_steps(&steps, &cur))
        }
        Command::Normalize { graph } => {
            let g = io.graph(&graph)?;
            let nf = caterpillar_normal_form(&g).map_err(domain)?;
            Ok(with_steps(&nf.steps, &nf.graph))
        }
        Command::VerifyEquivalence {
            first,
            second,
            max_degree,
            leaves,
            leaves2,
        } => {
            let g1 = io.graph(&first)?;
            let g2 = io.graph(&second)?;
            let l2 = leaves2.unwrap_or_else(|| leaves.clone());
            let report =
                verify_mutation_invariance(&g1, &g2, max_degree, &strs(&leaves), &strs(&l2))
                    .map_err(domain)?;
            if report.is_equal() {
                Ok(format!("{report}\n"))
            } else {
                Err(Failure::Domain(report.to_string()))
            }
        }
        Command::Relation { graph, lhs, rhs } => {
            let g = io.graph(&graph)?;
            let parse = |v: &[String]| {
                v.iter()
                    .map(|t| element(&g, t))
                    .collect::<Result<Vec<_>, _>>()
            };
            let (l, r) = (parse(&lhs)?, parse(&rhs)?);
            if verify_relation(&g, &l, &r).map_err(domain)? {
                Ok(format!(
                    "relation holds: {}\n",
                    ConeElement::sum(&g, &l).to_text(&g)
                ))
            } else {
                Err(Failure::Domain(format!(
                    "relation fails: {} vs {}",
                    ConeElement::sum(&g, &l).to_text(&g),
                    ConeElement::sum(&g, &r).to_text(&g)
                )))
            }
        }
    }
}

/// Runs one command line and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut io, err) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> String {
        format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"))
    }

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("graphcone").chain(args.iter().copied()),
            &mut input.as_bytes(),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn info() {
        let (code, out, _) = call(&["info", &fixture("littleman")], "");
        assert_eq!((code, out.as_str()), (0, "V=4 E=4 n=2 g=1 comp=1 dim=4\n"));
    }

    #[test]
    fn hilbert_table_row() {
        let lm = fixture("littleman");
        let (code, out, _) = call(
            &[
                "hilbert",
                &lm,
                "--max-degree",
                "7",
                "--method",
                "brute",
                "--format",
                "table",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "m=2: 12"));
    }

    #[test]
    fn hammock_generators() {
        let (code, out, _) = call(&["generators", &fixture("hammock")], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("# degree 1: 4 generators\n"));
        assert!(out.contains("# degree 2: 2 generators\n"));
        let degs: Vec<&str> = out
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.split(';').next().unwrap())
            .collect();
        assert_eq!(degs.len(), 6);
        assert_eq!(degs.iter().filter(|d| **d == "deg=1").count(), 4);
        assert_eq!(degs.iter().filter(|d| **d == "deg=2").count(), 2);
    }

    #[test]
    fn parity_violation_exits_one() {
        let (code, _, err) = call(
            &["decompose", &fixture("littleman"), "deg=1;loop=1,bar=1"],
            "",
        );
        assert_eq!(code, 1);
        assert!(err.contains("parity fails at vertex u"), "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["info"], "").0, 2);
        assert_eq!(call(&["info", &fixture("tripod"), "--bogus"], "").0, 2);
        assert_eq!(call(&["info", "-"], "edge x a\n").0, 2);
        assert_eq!(
            call(&["decompose", &fixture("tripod"), "deg=1;zz=1"], "").0,
            2
        );
    }

    #[test]
    fn normalize_then_replay() {
        let hm = fixture("hammock");
        let (code, normal, _) = call(&["normalize", &hm], "");
        assert_eq!(code, 0);
        assert!(normal.starts_with("# step "));
        let (code, replayed, _) = call(&["mutate", &hm, "--replay", "-"], &normal);
        assert_eq!(code, 0);
        assert_eq!(replayed, normal);
    }

    #[test]
    fn compose_and_series_match_brute() {
        let lm = fixture("littleman");
        let base = [
            "hilbert",
            lm.as_str(),
            "--max-degree",
            "4",
            "--leaves",
            "a,b",
            "--format",
            "json",
        ];
        let outs: Vec<String> = ["brute", "compose", "series"]
            .iter()
            .map(|m| {
                let mut a = base.to_vec();
                a.extend(["--method", m]);
                call(&a, "").1
            })
            .collect();
        assert_eq!(outs[0], outs[1]);
        assert_eq!(outs[0], outs[2]);
    }

    #[test]
    fn paper_literal_balloon() {
        let b = fixture("balloon");
        let (code, out, err) = call(
            &[
                "hilbert",
                &b,
                "--max-degree",
                "2",
                "--method",
                "series",
                "--paper-literal",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.contains("m=2: 2\n"));
        assert!(err.contains("disagrees"));
    }

    #[test]
    fn equivalence_and_relation() {
        let (code, out, _) = call(
            &[
                "verify-equivalence",
                &fixture("theta"),
                &fixture("dumbbell"),
            ],
            "",
        );
        assert_eq!((code, out.as_str()), (0, "tables agree up to degree 5\n"));
        let (code, _, err) = call(
            &[
                "verify-equivalence",
                &fixture("littleman"),
                &fixture("dumbbell"),
            ],
            "",
        );
        assert_eq!(code, 1);
        assert!(err.contains("invariants differ"));
        let lm = fixture("littleman");
        let mut args = vec![
            "relation",
            &lm,
            "--lhs",
            "deg=1;loop=1",
            "--lhs",
            "deg=1;p3=1,p4=1",
            "--rhs",
            "deg=1;",
        ];
        let (code, out, _) = call(
            &[args.as_slice(), &["--rhs", "deg=1;loop=1,p3=1,p4=1"]].concat(),
            "",
        );
        assert_eq!(
            (code, out.as_str()),
            (0, "relation holds: deg=2;loop=1,p3=1,p4=1\n")
        );
        args.extend(["--rhs", "deg=1;loop=1"]);
        let (code, _, err) = call(&args, "");
        assert_eq!(code, 1);
        assert!(err.contains("relation fails"));
    }
}
