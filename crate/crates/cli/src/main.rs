//! `cutset`: decides which level profiles are realized by cutsets of the
//! Boolean lattice `2^[n]`, computes the least banded cutset size
//! `g_n(m, l)`, materializes explicit extremal constructions, and offers
//! brute-force verification on small ground sets.

mod cache;
mod error;
mod famio;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use cutset_core::binom::{binomial, boundary, cascade};
use cutset_core::canonical::{canonical, feasibility, Profile, DEFAULT_MATERIALIZE_BUDGET};
use cutset_core::colex::{rank, shade, shadow, unrank, Family, Subset};
use cutset_core::constructions::{
    double_by_complements, is_cutset, three_level, two_level, MultiFamily,
};
use cutset_core::profiles::{conjectured_g, g, g_bounds, g_table, pascal_column_identity, GTable};

use crate::cache::{Cache, CACHE_ENV, DEFAULT_CACHE_PATH};
use crate::error::{CliError, Result};
use crate::render::{human_uint, json_int, json_uint, Format};

#[derive(Parser)]
#[command(
    name = "cutset",
    version,
    about = "Cutset profiles in the Boolean lattice 2^[n]",
    long_about = "Decides which level profiles (f-vectors) are realized by cutsets of the \
                  Boolean lattice 2^[n], computes the least size g_n(m,l) of a cutset \
                  confined to levels m..=l, materializes explicit extremal constructions, \
                  and verifies families by brute force on small ground sets."
)]
struct Cli {
    /// Output format; tables default to csv, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Cache file for computed g values (default `cutset_cache.csv`, or the
    /// CUTSET_CACHE environment variable).
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "no_cache")]
    cache: Option<PathBuf>,

    /// Neither read nor write the g-value cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy m-binomial (cascade) representation of K.
    Repr {
        /// Positive integer to decompose; digit grouping (`,` or `_`) is accepted.
        k: String,
        /// Leading binomial index, at least 1.
        m: u32,
    },
    /// Boundary operator on K at index m: lowers every index of the
    /// m-binomial representation by one; 0 for K <= 0.
    Boundary {
        /// Integer input, possibly negative.
        #[arg(allow_hyphen_values = true)]
        k: String,
        /// Representation index, at least 1.
        m: u32,
    },
    /// 1-based rank of a set in the squashed (colex) order of its level.
    Rank {
        /// JSON integer array, e.g. `[1,3,5]`.
        set: String,
    },
    /// The m-subset of [n] at 1-based squashed-order rank K.
    Unrank { k: String, m: u32, n: u32 },
    /// All sets one element below a family (stdin: one JSON array per line,
    /// all of one size, `#` comments ignored).
    Shadow {
        /// Ground-set size; inferred from the largest element if omitted.
        #[arg(long)]
        n: Option<u32>,
    },
    /// All sets one element above a family read from stdin.
    Shade {
        /// Ground-set size (determines which elements can be added).
        #[arg(long)]
        n: u32,
    },
    /// Whether a profile is realized by some cutset of 2^[n].
    Feasible {
        #[arg(long)]
        n: u32,
        /// JSON array of n + 1 level counts, e.g. `[0,2,5,6,0,0]`.
        #[arg(long)]
        profile: String,
        /// Re-derive the verdict at every level and fail if any disagrees.
        #[arg(long)]
        validate_all_levels: bool,
    },
    /// The canonical collection of a profile: per-level rank segments,
    /// last-anchored at and below the pivot, first-anchored above it.
    Canonical {
        #[arg(long)]
        n: u32,
        /// JSON array of n + 1 level counts.
        #[arg(long)]
        profile: String,
        /// Level at which the upward and downward sweeps meet.
        #[arg(long)]
        pivot: u32,
        /// Also list every member set (pipeable into `verify`).
        #[arg(long)]
        emit_sets: bool,
        /// Refuse to materialize any nonempty level wider than this.
        #[arg(long, default_value_t = DEFAULT_MATERIALIZE_BUDGET)]
        budget: u64,
    },
    /// Least size of a cutset with equal counts on levels m..=l of 2^[n]
    /// and nothing elsewhere.
    G { n: u32, m: u32, l: u32 },
    /// g values over a range of l, as a table.
    Table {
        n: u32,
        m: u32,
        /// First l of the table (default m).
        #[arg(long)]
        from: Option<u32>,
        /// Last l of the table (default n - m).
        #[arg(long)]
        to: Option<u32>,
        /// Worker threads for independent rows (default: available cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Proven bracketing of g for bands with no known closed form.
    Bounds { n: u32, m: u32, l: u32 },
    /// Materializes an explicit cutset construction (family on stdout).
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        n: u32,
        m: u32,
        /// Top band level: m+1 for two-level, m+2 for qrs; for double, the
        /// band of the input construction over [n-1] (default m+2).
        l: Option<u32>,
    },
    /// Chain-reachability check: is the family on stdin a cutset of 2^[n]?
    Verify {
        #[arg(long)]
        n: u32,
    },
    /// Conjectured exact g value in the flat part of the band (unproven;
    /// cross-check against `g` where affordable).
    Conjecture { n: u32, m: u32, l: u32 },
    /// Checks the column identity tying three-level construction sizes to
    /// C(n, m+2), with the split at depth d.
    Identity { n: u32, m: u32, d: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// All m-subsets of [n-1] plus all (m+1)-subsets containing n.
    TwoLevel,
    /// The three-level construction on levels m, m+1, m+2.
    Qrs,
    /// A banded construction over [n-1], doubled by complements into [n].
    Double,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = std::panic::catch_unwind(|| {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        run(cli, &mut out)
    });
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unexpected panic".into());
            eprintln!("internal error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

/// Resolves `--format` for commands that produce reports, not tables.
fn report_format(requested: Option<Format>, command: &str) -> Result<Format> {
    match requested.unwrap_or(Format::Text) {
        Format::Csv => Err(CliError::Usage(format!(
            "--format csv is only available for `table`, not `{command}`"
        ))),
        f => Ok(f),
    }
}

fn parse_biguint(s: &str) -> Result<BigUint> {
    let cleaned: String = s.chars().filter(|&c| c != ',' && c != '_').collect();
    cleaned
        .parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not a nonnegative integer")))
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    let cleaned: String = s.chars().filter(|&c| c != ',' && c != '_').collect();
    cleaned
        .parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not an integer")))
}

fn parse_profile(n: u32, text: &str) -> Result<Profile> {
    let numbers: Vec<serde_json::Number> = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("--profile must be a JSON integer array: {e}")))?;
    if numbers.len() != n as usize + 1 {
        return Err(CliError::Usage(format!(
            "profile has {} entries, expected n + 1 = {}",
            numbers.len(),
            n + 1
        )));
    }
    let counts = numbers
        .iter()
        .map(|v| {
            v.to_string().parse::<BigUint>().map_err(|_| {
                CliError::Usage(format!("profile entry {v} is not a nonnegative integer"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Profile::new(n, counts)?)
}

fn json_set(s: &Subset) -> Value {
    json!(s.elements())
}

fn json_profile(p: &Profile) -> Value {
    Value::Array(p.counts().iter().map(json_uint).collect())
}

fn profile_text(p: &Profile) -> String {
    let entries: Vec<String> = p.counts().iter().map(ToString::to_string).collect();
    format!("[{}]", entries.join(","))
}

fn open_cache(cli: &Cli) -> Result<Option<Cache>> {
    if cli.no_cache {
        return Ok(None);
    }
    let path = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_PATH));
    Cache::open(path).map(Some)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    match &cli.command {
        Command::Repr { k, m } => {
            let fmt = report_format(cli.format, "repr")?;
            let k = parse_biguint(k)?;
            let rep = cascade(&k, *m)?;
            match fmt {
                Format::Text => writeln!(out, "{} = {rep}", human_uint(&k))?,
                Format::Json => {
                    let terms: Vec<Value> = rep
                        .terms()
                        .iter()
                        .map(|t| json!({"upper": json_uint(&t.upper), "index": t.index}))
                        .collect();
                    let doc = json!({
                        "k": json_uint(&k),
                        "m": m,
                        "cascade": rep.to_string(),
                        "terms": terms,
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Boundary { k, m } => {
            let fmt = report_format(cli.format, "boundary")?;
            let k = parse_bigint(k)?;
            let value = boundary(&k, *m)?;
            match fmt {
                Format::Text => writeln!(out, "{}", human_uint(&value))?,
                Format::Json => {
                    let doc = json!({
                        "k": json_int(&k),
                        "m": m,
                        "boundary": json_uint(&value),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Rank { set } => {
            let fmt = report_format(cli.format, "rank")?;
            let set = famio::parse_set(set).map_err(|msg| CliError::Usage(format!("SET: {msg}")))?;
            let r = rank(&set);
            match fmt {
                Format::Text => writeln!(out, "{}", human_uint(&r))?,
                Format::Json => {
                    let doc = json!({"set": json_set(&set), "rank": json_uint(&r)});
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Unrank { k, m, n } => {
            let fmt = report_format(cli.format, "unrank")?;
            let k = parse_biguint(k)?;
            let set = unrank(&k, *m, *n)?;
            match fmt {
                Format::Text => writeln!(out, "{set}")?,
                Format::Json => {
                    let doc = json!({
                        "rank": json_uint(&k),
                        "m": m,
                        "n": n,
                        "set": json_set(&set),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Shadow { n } => {
            let fmt = report_format(cli.format, "shadow")?;
            let sets = famio::read_sets(std::io::stdin().lock())?;
            let result = match level_family(*n, sets)? {
                None => None,
                Some(fam) => Some(shadow(&fam)?),
            };
            emit_level_family(out, fmt, result)?;
        }
        Command::Shade { n } => {
            let fmt = report_format(cli.format, "shade")?;
            let sets = famio::read_sets(std::io::stdin().lock())?;
            let result = match level_family(Some(*n), sets)? {
                None => None,
                Some(fam) => Some(shade(&fam)?),
            };
            emit_level_family(out, fmt, result)?;
        }
        Command::Feasible {
            n,
            profile,
            validate_all_levels,
        } => {
            let fmt = report_format(cli.format, "feasible")?;
            let p = parse_profile(*n, profile)?;
            let verdict = feasibility(&p);
            if *validate_all_levels {
                assert!(
                    verdict.verdicts_agree(),
                    "slack verdicts disagree across levels for profile {}",
                    profile_text(&p)
                );
            }
            match fmt {
                Format::Text => writeln!(out, "{}", verdict.feasible)?,
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "profile": json_profile(&p),
                        "feasible": verdict.feasible,
                        "check_level": verdict.check_level,
                        "u": Value::Array(verdict.uv.u.iter().map(json_uint).collect()),
                        "v": Value::Array(verdict.uv.v.iter().map(json_uint).collect()),
                        "slack": Value::Array(verdict.slack.iter().map(json_int).collect()),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Canonical {
            n,
            profile,
            pivot,
            emit_sets,
            budget,
        } => {
            let fmt = report_format(cli.format, "canonical")?;
            let p = parse_profile(*n, profile)?;
            let coll = canonical(&p, *pivot)?;
            let feasible = feasibility(&p).feasible;
            let families = if *emit_sets {
                Some(coll.emit_sets(*budget)?)
            } else {
                None
            };
            match fmt {
                Format::Text => {
                    // With --emit-sets the summary turns into `#` comments so
                    // stdout stays a valid family file.
                    let prefix = if *emit_sets { "# " } else { "" };
                    writeln!(out, "{prefix}feasible: {feasible}")?;
                    writeln!(out, "{prefix}pivot: {pivot}")?;
                    for seg in coll.segments() {
                        if seg.is_empty() {
                            continue;
                        }
                        let width = binomial(*n as u64, seg.level() as i64);
                        writeln!(
                            out,
                            "{prefix}level {}: ranks {}..{} ({} of {})",
                            seg.level(),
                            seg.start(),
                            seg.end(),
                            seg.len(),
                            width,
                        )?;
                        if let Some(families) = &families {
                            for s in families[seg.level() as usize].members() {
                                writeln!(out, "{s}")?;
                            }
                        }
                    }
                }
                Format::Json => {
                    let levels: Vec<Value> = coll
                        .segments()
                        .iter()
                        .filter(|seg| !seg.is_empty())
                        .map(|seg| {
                            json!({
                                "level": seg.level(),
                                "start": json_uint(seg.start()),
                                "end": json_uint(seg.end()),
                                "count": json_uint(&seg.len()),
                            })
                        })
                        .collect();
                    let mut doc = json!({
                        "n": n,
                        "profile": json_profile(&p),
                        "pivot": pivot,
                        "feasible": feasible,
                        "levels": levels,
                    });
                    if let Some(families) = &families {
                        let sets: Vec<Value> = families
                            .iter()
                            .flat_map(|fam| fam.members().iter().map(json_set))
                            .collect();
                        doc["sets"] = Value::Array(sets);
                    }
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::G { n, m, l } => {
            let fmt = report_format(cli.format, "g")?;
            let mut cache = open_cache(&cli)?;
            let value = match cache.as_ref().and_then(|c| c.get(*n, *m, *l)) {
                Some(v) => v.clone(),
                None => {
                    let v = g(*n, *m, *l)?;
                    if let Some(c) = cache.as_mut() {
                        c.put(*n, *m, *l, v.clone());
                        c.flush()?;
                    }
                    v
                }
            };
            let rep = cascade(&value, (*m).max(1))?;
            match fmt {
                Format::Text => {
                    writeln!(out, "g_{n}({m},{l}) = {} = {rep}", human_uint(&value))?
                }
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "m": m,
                        "l": l,
                        "g": json_uint(&value),
                        "cascade": rep.to_string(),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Table { n, m, from, to, jobs } => {
            let fmt = cli.format.unwrap_or(Format::Csv);
            let from = from.unwrap_or(*m);
            let to = to.unwrap_or_else(|| n.saturating_sub(*m));
            let jobs = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |p| p.get())
            });
            let mut cache = open_cache(&cli)?;
            let cached: Option<Vec<BigUint>> = match (&cache, from <= to) {
                (Some(c), true) => (from..=to).map(|l| c.get(*n, *m, l).cloned()).collect(),
                _ => None,
            };
            let table = match cached {
                Some(values) => GTable::from_values(*n, *m, from, &values)?,
                None => g_table(*n, *m, from, to, jobs)?,
            };
            if let Some(c) = cache.as_mut() {
                for row in &table.rows {
                    c.put(*n, *m, row.l, row.g.clone());
                }
                c.flush()?;
            }
            match fmt {
                Format::Csv => write!(out, "{}", table.to_csv_string())?,
                Format::Json => writeln!(out, "{}", table.to_json_string())?,
                Format::Text => {
                    let g_texts: Vec<String> =
                        table.rows.iter().map(|r| human_uint(&r.g)).collect();
                    let l_width = table
                        .rows
                        .iter()
                        .map(|r| r.l.to_string().len())
                        .max()
                        .unwrap_or(1);
                    let g_width = g_texts.iter().map(String::len).max().unwrap_or(1);
                    writeln!(
                        out,
                        "{:<l_width$}  {:>g_width$}  {}",
                        "l", "g", "cascade"
                    )?;
                    for (row, g_text) in table.rows.iter().zip(&g_texts) {
                        writeln!(
                            out,
                            "{:<l_width$}  {:>g_width$}  {}",
                            row.l, g_text, row.cascade
                        )?;
                    }
                }
            }
        }
        Command::Bounds { n, m, l } => {
            let fmt = report_format(cli.format, "bounds")?;
            let b = g_bounds(*n, *m, *l)?;
            match fmt {
                Format::Text => writeln!(
                    out,
                    "{} < g_{n}({m},{l}) <= {}",
                    human_uint(&b.lower_exclusive),
                    human_uint(&b.upper_inclusive),
                )?,
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "m": m,
                        "l": l,
                        "lower_exclusive": json_uint(&b.lower_exclusive),
                        "upper_inclusive": json_uint(&b.upper_inclusive),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Construct { kind, n, m, l } => {
            let fmt = report_format(cli.format, "construct")?;
            let (family, input_verified) = build_construction(*kind, *n, *m, *l)?;
            if let Some(false) = input_verified {
                eprintln!(
                    "warning: the input cutset was too large for the reachability \
                     oracle and is trusted unverified"
                );
            }
            let kind_name = match kind {
                ConstructKind::TwoLevel => "two-level",
                ConstructKind::Qrs => "qrs",
                ConstructKind::Double => "double",
            };
            match fmt {
                Format::Text => {
                    writeln!(out, "# kind: {kind_name}")?;
                    writeln!(out, "# n: {n}")?;
                    writeln!(out, "# profile: {}", profile_text(&family.profile()))?;
                    if let Some(v) = input_verified {
                        writeln!(out, "# input cutset verified: {v}")?;
                    }
                    for s in family.members() {
                        writeln!(out, "{s}")?;
                    }
                }
                Format::Json => {
                    let sets: Vec<Value> = family.members().iter().map(json_set).collect();
                    let mut doc = json!({
                        "kind": kind_name,
                        "n": n,
                        "profile": json_profile(&family.profile()),
                        "sets": sets,
                    });
                    if let Some(v) = input_verified {
                        doc["input_verified"] = Value::Bool(v);
                    }
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Verify { n } => {
            let fmt = report_format(cli.format, "verify")?;
            let sets = famio::read_sets(std::io::stdin().lock())?;
            let family = MultiFamily::new(*n, sets)?;
            let verdict = is_cutset(&family)?;
            match fmt {
                Format::Text => writeln!(out, "{verdict}")?,
                Format::Json => {
                    let doc = json!({"n": n, "sets": family.len(), "cutset": verdict});
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Conjecture { n, m, l } => {
            let fmt = report_format(cli.format, "conjecture")?;
            let value = conjectured_g(*n, *m, *l)?;
            let rep = cascade(&value, (*m).max(1))?;
            match fmt {
                Format::Text => writeln!(
                    out,
                    "conjectured g_{n}({m},{l}) = {} = {rep}",
                    human_uint(&value),
                )?,
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "m": m,
                        "l": l,
                        "conjectured_g": json_uint(&value),
                        "cascade": rep.to_string(),
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Identity { n, m, d } => {
            let fmt = report_format(cli.format, "identity")?;
            let holds = pascal_column_identity(*n, *m, *d)?;
            match fmt {
                Format::Text => writeln!(out, "{holds}")?,
                Format::Json => {
                    let doc = json!({"n": n, "m": m, "d": d, "holds": holds});
                    writeln!(out, "{doc}")?;
                }
                Format::Csv => unreachable!(),
            }
        }
    }
    Ok(())
}

/// Bundles stdin sets into a single-level family; `None` for empty input.
/// The ground-set size is inferred from the largest element when absent.
fn level_family(n: Option<u32>, sets: Vec<Subset>) -> Result<Option<Family>> {
    let Some(first) = sets.first() else {
        return Ok(None);
    };
    let level = first.len() as u32;
    let n = n.unwrap_or_else(|| {
        sets.iter()
            .filter_map(|s| s.elements().last().copied())
            .max()
            .unwrap_or(0)
    });
    Ok(Some(Family::new(n, level, sets)?))
}

fn emit_level_family(out: &mut impl Write, fmt: Format, fam: Option<Family>) -> Result<()> {
    match fmt {
        Format::Text => {
            if let Some(fam) = fam {
                for s in fam.members() {
                    writeln!(out, "{s}")?;
                }
            }
        }
        Format::Json => {
            let doc = match fam {
                Some(fam) => {
                    let sets: Vec<Value> = fam.members().iter().map(json_set).collect();
                    json!({"n": fam.n(), "level": fam.level(), "sets": sets})
                }
                None => json!({"sets": []}),
            };
            writeln!(out, "{doc}")?;
        }
        Format::Csv => unreachable!(),
    }
    Ok(())
}

/// Builds the requested construction; the second component is the doubled
/// input's verification flag, when applicable.
fn build_construction(
    kind: ConstructKind,
    n: u32,
    m: u32,
    l: Option<u32>,
) -> Result<(MultiFamily, Option<bool>)> {
    let check_band = |expected: u32, what: &str| -> Result<()> {
        match l {
            Some(l) if l != expected => Err(CliError::Usage(format!(
                "the {what} construction spans levels {m}..={expected}; l = {l} does not apply"
            ))),
            _ => Ok(()),
        }
    };
    match kind {
        ConstructKind::TwoLevel => {
            check_band(m + 1, "two-level")?;
            Ok((two_level(n, m)?, None))
        }
        ConstructKind::Qrs => {
            check_band(m + 2, "qrs")?;
            Ok((three_level(n, m)?.union(), None))
        }
        ConstructKind::Double => {
            if n == 0 {
                return Err(cutset_core::Error::InvalidInput(
                    "doubling builds its input over [n-1], so n >= 1 is required".into(),
                )
                .into());
            }
            let input = match l.unwrap_or(m + 2) {
                x if x == m + 1 => two_level(n - 1, m)?,
                x if x == m + 2 => three_level(n - 1, m)?.union(),
                other => {
                    return Err(CliError::Usage(format!(
                        "double takes l = {} (two-level input) or l = {} (qrs input), got {other}",
                        m + 1,
                        m + 2
                    )))
                }
            };
            let doubled = double_by_complements(&input, n)?;
            Ok((doubled.family, Some(doubled.input_verified)))
        }
    }
}
