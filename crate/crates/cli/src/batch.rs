//! Command line parsing and the non-interactive commands.

use std::ffi::OsString;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, IsTerminal, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use curvedist_core::catalog::{distance_four_vectors, query, CatalogQuery};
use curvedist_core::fixtures::{builtin_template_text, BUILTIN_TEMPLATES};
use curvedist_core::ilp::format_weights;
use curvedist_core::report::{run_with, Command, IlpReport};
use curvedist_core::template::{pipeline, PipelineOptions};
use curvedist_core::{ArcTemplate, Catalog, DistanceOptions, Ladder, Verdict};

use crate::repl::Session;
use crate::{Busy, CANCEL};

#[derive(Debug, Parser)]
#[command(
    name = "curvedist",
    version,
    about = "Curve complex distance of filling pairs given as ladders",
    long_about = "Curve complex distance of filling pairs given as ladders.\n\n\
        With no arguments, starts an interactive session. With --top/--bottom \
        or --input, runs one command on that ladder.",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub action: Option<Action>,
    #[command(flatten)]
    pub ladder: LadderArgs,
}

#[derive(Debug, Args)]
pub struct LadderArgs {
    /// Top row of the ladder, comma separated.
    #[arg(long, requires = "bottom", conflicts_with = "input")]
    pub top: Option<String>,
    /// Bottom row of the ladder, comma separated.
    #[arg(long, requires = "top")]
    pub bottom: Option<String>,
    /// File whose first two non-comment lines are the top and bottom rows.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// genus, distance, curves, matrix, faces or perm.
    #[arg(long, default_value = "distance")]
    pub command: Command,
    /// Genus of the surface the pair lives on, if larger than the filled one.
    #[arg(long)]
    pub ambient_genus: Option<usize>,
    /// Give up when the dual graph has more elementary circuits than this.
    #[arg(long)]
    pub circuit_limit: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Action {
    /// Interactive session (the default when no arguments are given).
    Repl {
        #[arg(long)]
        ambient_genus: Option<usize>,
    },
    /// Constraint system of an arc template and its weight solutions.
    Ilp {
        /// Template file, or builtin:NAME.
        template: String,
        /// Find the least objective value and all solutions attaining it.
        #[arg(long, required_unless_present = "objective")]
        minimize: bool,
        /// List all solutions with this weight total.
        #[arg(long, conflicts_with = "minimize")]
        objective: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every single-curve gluing of every weight solution in a range.
    Pipeline {
        /// Template file, or builtin:NAME.
        template: String,
        #[arg(long)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        circuit_limit: Option<usize>,
        /// Print the catalog as JSON.
        #[arg(long)]
        json: bool,
        /// Append records to this catalog file, creating it if needed.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Query a saved catalog.
    Catalog {
        file: PathBuf,
        #[arg(long)]
        objective: Option<u64>,
        /// 2, 3 or 4+.
        #[arg(long, value_parser = parse_verdict)]
        distance: Option<Verdict>,
        /// Weight vector, e.g. 2,2,2,0,2,0.
        #[arg(long)]
        weights: Option<String>,
        /// Check the catalog header against this template.
        #[arg(long)]
        template: Option<String>,
        /// Summarize as distance 4+ weight vectors with their gluing counts.
        #[arg(long)]
        vectors: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the bundled templates, or print one.
    Templates { name: Option<String> },
}

fn parse_verdict(s: &str) -> Result<Verdict, String> {
    match s.trim() {
        "2" => Ok(Verdict::Distance2),
        "3" => Ok(Verdict::Distance3),
        "4" | "4+" => Ok(Verdict::Distance4Plus),
        other => Err(format!("`{other}` is not one of 2, 3, 4+")),
    }
}

fn parse_weights(s: &str) -> anyhow::Result<Vec<u64>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|w| {
            w.trim()
                .parse::<u64>()
                .with_context(|| format!("bad weight `{}`", w.trim()))
        })
        .collect()
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    1
                }
            };
        }
    };
    match execute(cli, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            crate::exit_code(&e)
        }
    }
}

pub fn execute(
    cli: Cli,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<()> {
    match cli.action {
        Some(Action::Repl { ambient_genus }) => repl(stdin, stdout, ambient_genus),
        Some(Action::Ilp {
            template,
            minimize,
            objective,
            output,
        }) => ilp(&template, minimize, objective, &output, stdout),
        Some(Action::Pipeline {
            template,
            p_min,
            p_max,
            circuit_limit,
            json,
            out,
        }) => run_pipeline(
            &template,
            p_min..=p_max,
            circuit_limit,
            json,
            out.as_deref(),
            stdout,
            stderr,
        ),
        Some(Action::Catalog {
            file,
            objective,
            distance,
            weights,
            template,
            vectors,
            json,
        }) => {
            let q = CatalogQuery {
                objective,
                verdict: distance,
                weights: weights.as_deref().map(parse_weights).transpose()?,
            };
            catalog(&file, &q, template.as_deref(), vectors, json, stdout)
        }
        Some(Action::Templates { name }) => templates(name.as_deref(), stdout),
        None if cli.ladder.top.is_none() && cli.ladder.input.is_none() => {
            repl(stdin, stdout, cli.ladder.ambient_genus)
        }
        None => ladder_command(&cli.ladder, stdout),
    }
}

fn repl(stdin: &mut dyn BufRead, stdout: &mut dyn Write, ambient_genus: Option<usize>) -> anyhow::Result<()> {
    let mut session = Session::new(stdin, stdout);
    session.echo = !std::io::stdin().is_terminal();
    session.ambient_genus = ambient_genus;
    session.run()?;
    Ok(())
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display()))?,
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn load_ladder(args: &LadderArgs) -> anyhow::Result<Ladder> {
    if let (Some(top), Some(bottom)) = (&args.top, &args.bottom) {
        return Ok(Ladder::parse(top, bottom)?);
    }
    let Some(path) = &args.input else {
        bail!("give --top and --bottom, or --input");
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ladder::from_text(&text).with_context(|| format!("in {}", path.display()))
}

fn ladder_command(args: &LadderArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let ladder = load_ladder(args)?;
    let report = {
        let _busy = Busy::start();
        let options = DistanceOptions {
            ambient_genus: args.ambient_genus,
            circuit_limit: args.circuit_limit,
            cancel: Some(&CANCEL),
        };
        run_with(&ladder, args.command, &options)?
    };
    let text = if args.output.json {
        to_json(&report)?
    } else {
        report.to_string()
    };
    emit(&text, args.output.out.as_deref(), stdout)
}

/// Template text and its parse. `source` is a path or `builtin:NAME`.
pub fn load_template(source: &str) -> anyhow::Result<(String, ArcTemplate)> {
    let text = match source.strip_prefix("builtin:") {
        Some(name) => match builtin_template_text(name) {
            Some(t) => t.to_string(),
            None => bail!(
                "no bundled template `{name}`; available: {}",
                BUILTIN_TEMPLATES.join(", ")
            ),
        },
        None => fs::read_to_string(source).with_context(|| format!("reading {source}"))?,
    };
    let template = text
        .parse::<ArcTemplate>()
        .with_context(|| format!("in template {source}"))?;
    Ok((text, template))
}

fn ilp(
    source: &str,
    minimize: bool,
    objective: Option<u64>,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> anyhow::Result<()> {
    let (_, template) = load_template(source)?;
    let system = template.constraints()?;
    let report = match objective {
        Some(p) if !minimize => IlpReport::at(system, p),
        _ => IlpReport::minimize(system)?,
    };
    let text = if output.json {
        to_json(&report)?
    } else {
        report.to_string()
    };
    emit(&text, output.out.as_deref(), stdout)
}

fn run_pipeline(
    source: &str,
    objectives: std::ops::RangeInclusive<u64>,
    circuit_limit: Option<usize>,
    json: bool,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<()> {
    if objectives.is_empty() {
        bail!("--p-min must not exceed --p-max");
    }
    let (text, template) = load_template(source)?;
    let mut existing = Catalog::new(&text);
    if let Some(path) = out {
        if path.exists() {
            let saved = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            existing = Catalog::parse(&saved).with_context(|| format!("in {}", path.display()))?;
            existing
                .verify(&text)
                .with_context(|| format!("{} was built from a different template", path.display()))?;
        } else {
            fs::write(path, existing.header()).with_context(|| format!("creating {}", path.display()))?;
        }
    }
    let mut fresh = Catalog::new(&text);
    let _busy = Busy::start();
    let options = PipelineOptions {
        cancel: Some(&CANCEL),
        circuit_limit,
    };
    for p in objectives {
        if existing.records.iter().any(|r| r.objective == p) {
            writeln!(stderr, "P = {p}: already in catalog, skipped")?;
            continue;
        }
        let records = pipeline(&template, p..=p, &options)?;
        let four = distance_four_vectors(&records);
        writeln!(
            stderr,
            "P = {p}: {} single-curve gluings, {} weight vectors at distance 4+",
            records.len(),
            four.len()
        )?;
        if let Some(path) = out {
            let mut file = OpenOptions::new()
                .append(true)
                .open(path)
                .with_context(|| format!("opening {}", path.display()))?;
            for r in &records {
                writeln!(file, "{}", r.to_line())?;
            }
        }
        fresh.records.extend(records);
    }
    if out.is_none() {
        let rendered = if json {
            to_json(&fresh)?
        } else {
            fresh.to_text().trim_end().to_string()
        };
        writeln!(stdout, "{rendered}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct VectorCount {
    weights: Vec<u64>,
    gluings: usize,
}

fn catalog(
    path: &Path,
    q: &CatalogQuery,
    template: Option<&str>,
    vectors: bool,
    json: bool,
    stdout: &mut dyn Write,
) -> anyhow::Result<()> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let catalog = Catalog::parse(&text).with_context(|| format!("in {}", path.display()))?;
    if let Some(source) = template {
        let (template_text, _) = load_template(source)?;
        catalog.verify(&template_text)?;
    }
    let matched: Vec<_> = query(&catalog.records, q).into_iter().cloned().collect();
    let rendered = if vectors {
        let counts: Vec<VectorCount> = distance_four_vectors(&matched)
            .into_iter()
            .map(|(weights, gluings)| VectorCount { weights, gluings })
            .collect();
        if json {
            to_json(&counts)?
        } else {
            counts
                .iter()
                .map(|c| format!("{}\t{}", format_weights(&c.weights), c.gluings))
                .collect::<Vec<_>>()
                .join("\n")
        }
    } else if json {
        to_json(&matched)?
    } else {
        matched.iter().map(|r| r.to_line()).collect::<Vec<_>>().join("\n")
    };
    if !rendered.is_empty() {
        writeln!(stdout, "{rendered}")?;
    }
    Ok(())
}

fn templates(name: Option<&str>, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match name {
        None => {
            for n in BUILTIN_TEMPLATES {
                writeln!(stdout, "builtin:{n}")?;
            }
        }
        Some(n) => {
            let n = n.strip_prefix("builtin:").unwrap_or(n);
            match builtin_template_text(n) {
                Some(text) => write!(stdout, "{text}")?,
                None => bail!("no bundled template `{n}`; available: {}", BUILTIN_TEMPLATES.join(", ")),
            }
        }
    }
    Ok(())
}
