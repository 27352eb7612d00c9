//! Command-line front end for `stackgame-core`.
//!
//! The binary is a thin wrapper over [`run`], which writes every report to the
//! given writer and maps failures to exit codes: 1 for an infeasible
//! instance, 2 for parse or usage errors, 3 for a violated invariant.

pub mod instance;
pub mod report;
pub mod selftest;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use stackgame_core::oracles::DEFAULT_GRID_CAP;
use stackgame_core::rational::parse_rational;
use stackgame_core::region::{render_svg, write_coordinate_table};
use stackgame_core::*;

use instance::{echo_instance, parse_instance, resolve_anchor, InstanceError, ParsedInstance, EIGHT_TANKS};
use report::{to_json, BoundsDoc, FeasibilityDoc, Num, RegionDoc, SolveDoc, ThresholdDoc};

pub const GRID_CAP_VAR: &str = "STACKGAME_GRID_CAP";

#[derive(Debug, Parser)]
#[command(name = "stackgame", version, about = "Exact solver for the attacker-defender allocation game")]
pub struct Cli {
    /// Instance file (TOML). Defaults to the bundled eight-tank instance.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub instance: Option<PathBuf>,
    /// Asset to use as the anchor, by name or one-based index.
    #[arg(long, global = true, value_name = "ASSET")]
    pub anchor: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the anchor feasibility conditions.
    Validate,
    /// Solve for the defender's optimal response to an announced attack.
    Solve {
        /// `e<k>`, `uniform`, comma-separated rationals, or a file holding one of those.
        #[arg(long, conflicts_with = "attack_file")]
        attack: Option<String>,
        /// One attack per line; emits a JSON array of reports in input order.
        #[arg(long, value_name = "FILE")]
        attack_file: Option<PathBuf>,
    },
    /// Attacker payoff bounds on the zero-slope hyperplane.
    AttackerBounds {
        /// Also report whether the maximum exceeds this value.
        #[arg(long)]
        threshold: Option<String>,
    },
    /// Payoff region: vertex images, hull and Pareto frontier.
    Region {
        /// Write an SVG plot here.
        #[arg(long, value_name = "FILE")]
        plot: Option<PathBuf>,
        /// Write the coordinate table (CSV) here.
        #[arg(long, value_name = "FILE")]
        table: Option<PathBuf>,
    },
    /// Resource-assignment matrix for a family member, as CSV.
    Allocate {
        #[arg(long)]
        resources: usize,
        #[arg(long, value_name = "P")]
        anchor_prob: String,
    },
    /// Run the golden checks and print a pass/fail table.
    Selftest,
    /// Print the instance back in canonical form.
    Echo,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("instance is infeasible: {}", .0.join("; "))]
    Infeasible(Vec<String>),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("{0} golden checks failed")]
    SelftestFailed(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => 1,
            CliError::Game(e) => match e {
                GameError::Infeasible
                | GameError::EmptyAnchorInterval
                | GameError::DegenerateHyperplane
                | GameError::EmptyIntersection => 1,
                GameError::InvariantViolation(_) => 3,
                _ => 2,
            },
            CliError::SelftestFailed(_) => 3,
            CliError::Usage(_) | CliError::Instance(_) | CliError::Io(_) | CliError::Csv(_) => 2,
        }
    }
}

fn load(cli: &Cli) -> Result<ParsedInstance, CliError> {
    let text = match &cli.instance {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => EIGHT_TANKS.to_string(),
    };
    let mut parsed = parse_instance(&text)?;
    if let Some(key) = &cli.anchor {
        let index = resolve_anchor(&parsed.instance, key)
            .ok_or_else(|| CliError::Usage(format!("no asset named or numbered {key:?}")))?;
        parsed.instance = parsed.instance.with_anchor(index)?;
        if let Some(attack) = &parsed.attack {
            let mut entries = attack.entries().to_vec();
            let moved = entries.remove(index);
            entries.push(moved);
            parsed.attack = Some(AttackVector::new(entries)?);
        }
    }
    Ok(parsed)
}

fn require_feasible(instance: &GameInstance) -> Result<(), CliError> {
    let report = check_feasibility(instance);
    if report.feasible {
        Ok(())
    } else {
        Err(CliError::Infeasible(FeasibilityDoc::new(instance, &report).failed_conditions))
    }
}

fn rational_arg(flag: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}

/// Parses `e<k>`, `uniform`, a comma-separated list, or a file holding one
/// of those.
pub fn parse_attack(spec: &str, len: usize) -> Result<AttackVector, CliError> {
    let spec = spec.trim();
    if spec == "uniform" {
        return Ok(AttackVector::uniform(len)?);
    }
    if let Some(k) = spec.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
        if k == 0 || k > len {
            return Err(CliError::Usage(format!("attack {spec}: vertex index must be in 1..={len}")));
        }
        return Ok(AttackVector::vertex(len, k - 1)?);
    }
    let parsed: Result<Vec<_>, _> = spec.split(',').map(|s| parse_rational(s.trim())).collect();
    match parsed {
        Ok(entries) => {
            if entries.len() != len {
                return Err(GameError::LengthMismatch { expected: len, found: entries.len() }.into());
            }
            Ok(AttackVector::new(entries)?)
        }
        Err(e) => {
            let path = PathBuf::from(spec);
            if path.is_file() {
                parse_attack(&fs::read_to_string(&path)?, len)
            } else {
                Err(CliError::Usage(format!("attack {spec:?}: {e}")))
            }
        }
    }
}

fn solve_doc(instance: &GameInstance, attack: &AttackVector) -> Result<SolveDoc, CliError> {
    let report = solve(instance, attack)?;
    let interval = feasible_anchor_interval(instance)?;
    let best = attacker_best_response(instance, report.optimal_defense.defense())?;
    Ok(SolveDoc::new(instance, attack, &interval, &report, &best.support))
}

/// Reads the enumeration cap for oracle grids from the environment.
pub fn grid_cap() -> Result<u128, CliError> {
    match std::env::var(GRID_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{GRID_CAP_VAR}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_GRID_CAP),
    }
}

/// Runs one command, writing its report to `out`. Returns the exit code for
/// runs that completed; errors carry their own code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    if let Command::Selftest = cli.command {
        return selftest(out);
    }
    let parsed = load(cli)?;
    let g = &parsed.instance;
    match &cli.command {
        Command::Validate => {
            let report = check_feasibility(g);
            out.write_all(to_json(&FeasibilityDoc::new(g, &report)).as_bytes())?;
            return Ok(if report.feasible { 0 } else { 1 });
        }
        Command::Solve { attack, attack_file } => {
            require_feasible(g)?;
            if let Some(path) = attack_file {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let docs = text
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(|l| parse_attack(l, g.len()).and_then(|a| solve_doc(g, &a)))
                    .collect::<Result<Vec<_>, _>>()?;
                out.write_all(to_json(&docs).as_bytes())?;
            } else {
                let attack = match (attack, &parsed.attack) {
                    (Some(spec), _) => parse_attack(spec, g.len())?,
                    (None, Some(a)) => a.clone(),
                    (None, None) => {
                        return Err(CliError::Usage(
                            "solve needs --attack, --attack-file or an attack in the instance".into(),
                        ))
                    }
                };
                out.write_all(to_json(&solve_doc(g, &attack)?).as_bytes())?;
            }
        }
        Command::AttackerBounds { threshold } => {
            require_feasible(g)?;
            let problem = build_hyperplane_problem(g)?;
            let ratios = payoff_ratios(&problem)?;
            let extrema = constrained_extrema(&problem)?;
            let mut doc = BoundsDoc::new(&problem, &ratios, &extrema);
            if let Some(t) = threshold {
                let t = rational_arg("--threshold", t)?;
                doc.exceeds_threshold = Some(ThresholdDoc { exceeded: exceeds_threshold(&problem, &t)?, threshold: Num::from(&t) });
            }
            out.write_all(to_json(&doc).as_bytes())?;
        }
        Command::Region { plot, table } => {
            require_feasible(g)?;
            let region = PayoffRegion::new(g)?;
            if let Some(path) = plot {
                fs::write(path, render_svg(&region))?;
            }
            if let Some(path) = table {
                write_coordinate_table(&region, fs::File::create(path)?)?;
            }
            out.write_all(to_json(&RegionDoc::new(&region)).as_bytes())?;
        }
        Command::Allocate { resources, anchor_prob } => {
            require_feasible(g)?;
            let d = rational_arg("--anchor-prob", anchor_prob)?;
            let defense = defense_family_at(g, &d)?;
            let matrix = uniform_allocation(&defense, *resources)?;
            let verdict = validate_allocation(&matrix, &defense)?;
            if !verdict.is_valid() {
                return Err(GameError::InvariantViolation(format!("allocation check failed: {:?}", verdict.violations)).into());
            }
            let mut csv = csv::Writer::from_writer(out);
            let mut header = vec!["asset".to_string(), "name".to_string()];
            header.extend((1..=matrix.resource_count()).map(|m| format!("r{m}")));
            header.push("row_sum".to_string());
            csv.write_record(&header)?;
            for (n, row) in matrix.rows().iter().enumerate() {
                let mut record = vec![(n + 1).to_string(), g.assets()[n].name.clone()];
                record.extend(row.iter().map(ToString::to_string));
                record.push(matrix.row_sum(n).to_string());
                csv.write_record(&record)?;
            }
            csv.flush()?;
        }
        Command::Echo => out.write_all(echo_instance(&parsed).as_bytes())?,
        Command::Selftest => unreachable!("handled above"),
    }
    Ok(0)
}

fn selftest(out: &mut dyn Write) -> Result<u8, CliError> {
    let checks = selftest::run_checks(grid_cap()?);
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(5);
    writeln!(out, "{:width$}  result  detail", "check")?;
    for c in &checks {
        writeln!(out, "{:width$}  {:6}  {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail)?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{}/{} checks passed", checks.len() - failed, checks.len())?;
    if failed > 0 {
        return Err(CliError::SelftestFailed(failed));
    }
    Ok(0)
}
