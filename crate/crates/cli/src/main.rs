//! Command-line front end: computing the duality maps, enumerating label
//! posets, rendering Hasse diagrams, querying the exceptional datasets and
//! running the verification suites.
//!
//! Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure,
//! 4 dataset integrity error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbit_duality::{
    canonical_inverse, check_axioms, check_blocks, check_collapse_oracle, check_cupvee,
    check_reflection, check_special_alt, check_theorem_po, d_bv, d_ls, d_s, dbar, exceptional,
    hasse, load_group, parse_marked, specialize, Error, ExceptionalGroup, GroupType,
    MarkedPartition, Partition, SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "orbit-duality",
    about = "Duality maps and partial orders for marked nilpotent orbits",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Dls,
    Dbv,
    Ds,
    Dbar,
    CanonicalInverse,
    Specialize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    Collapse,
    Cupvee,
    Po,
    Axioms,
    Blocks,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a duality or specialization map to a (marked) partition.
    Compute {
        /// Classical group type: B, C or D.
        #[arg(long)]
        group_type: GroupType,
        /// Underlying partition, e.g. "7,5,4^2,3,2^2,1^2".
        #[arg(long)]
        lam: String,
        /// Marking partition (omit for the trivial marking).
        #[arg(long)]
        mark: Option<String>,
        #[arg(long)]
        map: MapKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the reduced labels of a classical type and size with special
    /// flags and duality values.
    Enumerate {
        #[arg(long)]
        group_type: GroupType,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build and render the labeled poset of a classical type and size, or
    /// of an exceptional group.
    Hasse {
        #[arg(long, conflicts_with = "group")]
        group_type: Option<GroupType>,
        #[arg(long, requires = "group_type")]
        n: Option<usize>,
        /// Exceptional group: G2, F4, E6, E7 or E8.
        #[arg(long)]
        group: Option<ExceptionalGroup>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the named verification suites up to a size bound.
    Verify {
        #[arg(long)]
        suite: SuiteKind,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Query or render an exceptional dataset.
    Exceptional {
        #[arg(long, conflicts_with = "path")]
        group: Option<ExceptionalGroup>,
        /// Load a dataset file instead of an embedded one.
        #[arg(long)]
        path: Option<PathBuf>,
        /// Print the extended duality value of the node with this id.
        #[arg(long)]
        dual: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn marked_from_flags(
    ty: GroupType,
    lam: &str,
    mark: Option<&str>,
) -> Result<MarkedPartition, Error> {
    match mark {
        Some(m) => parse_marked(ty, &format!("{lam}|{m}")),
        None => Ok(MarkedPartition::trivial(ty, parse_partition(lam)?)),
    }
}

fn no_dot(format: Format) -> Result<(), Error> {
    if format == Format::Dot {
        return Err(Error::Parse(
            "dot output is only available for hasse and exceptional".into(),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute {
            group_type,
            lam,
            mark,
            map,
            format,
        } => {
            no_dot(format)?;
            let value = match map {
                MapKind::Dls => {
                    let v = d_ls(&parse_partition(&lam)?, group_type)?;
                    render::partition_value(v, group_type, format)
                }
                MapKind::Dbv => {
                    let v = d_bv(&parse_partition(&lam)?, group_type)?;
                    render::partition_value(v, group_type.dual(), format)
                }
                MapKind::Ds => {
                    let v = d_s(&marked_from_flags(group_type, &lam, mark.as_deref())?)?;
                    render::partition_value(v, group_type.dual(), format)
                }
                MapKind::Dbar => {
                    let v = dbar(&marked_from_flags(group_type, &lam, mark.as_deref())?)?;
                    render::marked_value(v, format)
                }
                MapKind::CanonicalInverse => {
                    if mark.is_some() {
                        return Err(Error::Parse(
                            "canonical-inverse takes a plain partition, not a marked one".into(),
                        ));
                    }
                    let v = canonical_inverse(&parse_partition(&lam)?, group_type)?;
                    render::marked_value(v, format)
                }
                MapKind::Specialize => {
                    let v = specialize(&marked_from_flags(group_type, &lam, mark.as_deref())?)?;
                    render::marked_value(v, format)
                }
            };
            println!("{value}");
            Ok(0)
        }
        Command::Enumerate {
            group_type,
            n,
            format,
        } => {
            no_dot(format)?;
            let poset = hasse(group_type, n)?;
            print!("{}", render::enumeration(&poset, format));
            Ok(0)
        }
        Command::Hasse {
            group_type,
            n,
            group,
            format,
        } => match (group_type, group) {
            (Some(ty), None) => {
                let n =
                    n.ok_or_else(|| Error::Parse("--n is required with --group-type".into()))?;
                let poset = hasse(ty, n)?;
                print!("{}", render::poset(&poset, format));
                Ok(0)
            }
            (None, Some(g)) => {
                let ds = load_group(g)?;
                print!("{}", render::dataset(&ds, format));
                Ok(0)
            }
            _ => Err(Error::Parse(
                "hasse needs either --group-type with --n, or --group".into(),
            )),
        },
        Command::Verify {
            suite,
            max_size,
            format,
        } => {
            no_dot(format)?;
            let reports = run_suites(suite, max_size)?;
            print!("{}", render::reports(&reports, format));
            if reports.iter().all(|r| r.passed()) {
                Ok(0)
            } else {
                Ok(3)
            }
        }
        Command::Exceptional {
            group,
            path,
            dual,
            format,
        } => {
            let ds = match (group, &path) {
                (Some(g), None) => load_group(g)?,
                (None, Some(p)) => exceptional::load_path(p)?,
                _ => {
                    return Err(Error::Parse(
                        "exceptional needs either --group or --path".into(),
                    ))
                }
            };
            let report = ds.validate();
            if !report.passed() {
                eprint!("{}", report.render_text());
                return Err(Error::Integrity(format!(
                    "dataset {} failed validation",
                    ds.group
                )));
            }
            match dual {
                Some(id) => {
                    let node = ds.exceptional_dbar(&id)?;
                    println!("{}", render::exceptional_node(node, format));
                }
                None => print!("{}", render::dataset(&ds, format)),
            }
            Ok(0)
        }
    }
}

fn run_suites(suite: SuiteKind, max_size: usize) -> Result<Vec<SuiteReport>, Error> {
    let types = [GroupType::B, GroupType::C, GroupType::D];
    let mut reports = Vec::new();
    let all = matches!(suite, SuiteKind::All);
    if all || matches!(suite, SuiteKind::Collapse) {
        reports.push(check_collapse_oracle(max_size));
    }
    if all || matches!(suite, SuiteKind::Cupvee) {
        reports.push(check_cupvee(max_size));
        reports.push(check_special_alt(max_size));
    }
    if all || matches!(suite, SuiteKind::Po) {
        for ty in types {
            reports.push(check_theorem_po(ty, max_size));
        }
    }
    if all || matches!(suite, SuiteKind::Axioms) {
        for ty in types {
            reports.push(check_axioms(ty, max_size)?);
            reports.push(check_reflection(ty, max_size)?);
        }
    }
    if all || matches!(suite, SuiteKind::Blocks) {
        reports.push(check_blocks(max_size)?);
    }
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap treats --help and --version as errors that print to stdout
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 1,
                Error::Domain(_) => 2,
                Error::Integrity(_) | Error::Unavailable(_) => 4,
            };
            ExitCode::from(code)
        }
    }
}
