//! Command surface of the `twobridge` binary.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors (printed
//! as a JSON error object) and failed self-checks.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use twobridge::contfrac::{cf_even, cf_positive, even_symmetry_class, pos_symmetry_class};
use twobridge::epi::epi_exists;
use twobridge::farey::orbit_bfs;
use twobridge::heckoid::{heckoid_classification, parse_half_integer};
use twobridge::pairs::{classify, isometry_group};
use twobridge::selfcheck::selfcheck;
use twobridge::{Error, Slope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twobridge", version, about = "Arithmetic of 2-bridge links and Heckoid groups")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SlopeArg {
    /// Slope `q/p`, e.g. 5/17.
    #[arg(allow_hyphen_values = true)]
    r: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Candidate parabolic generating pairs of a hyperbolic 2-bridge link.
    Classify(SlopeArg),
    /// Even (default) or positive continued fraction.
    Cf {
        #[command(flatten)]
        slope: SlopeArg,
        #[arg(long, conflicts_with = "even")]
        positive: bool,
        #[arg(long)]
        even: bool,
    },
    /// Symmetry classes of both expansions and the isometry group.
    Symmetry(SlopeArg),
    /// Whether the knot group of `r_tilde` maps onto that of `r`.
    Epi {
        #[arg(allow_hyphen_values = true)]
        r_tilde: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Orbit of `{r, inf}` under the reflection group at `r` and `inf`.
    Orbit {
        #[command(flatten)]
        slope: SlopeArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long = "max-den", default_value_t = 500)]
        max_den: u64,
    },
    /// Heckoid group G(r; n); `n` is an integer or `m/2`.
    Heckoid {
        #[command(flatten)]
        slope: SlopeArg,
        n: String,
    },
    /// Run every property sweep up to denominator `max_p`.
    Selfcheck {
        #[arg(default_value_t = 300)]
        max_p: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<(i32, String), Failure>;

fn parse_slope(s: &str) -> Result<Slope, Failure> {
    s.parse::<Slope>().map_err(|e| match e {
        Error::Parse(_) => Failure::Usage(format!("invalid slope {s:?}: expected q/p or inf")),
        other => Failure::Domain(other),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn error_json(e: &Error) -> String {
    to_json(&json!({ "error": { "code": e.code(), "message": e.to_string() } }))
}

/// Parses `argv` (without the program name) and returns the exit code and
/// the text to print.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("twobridge".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Domain(e)) => (EXIT_DOMAIN, error_json(&e) + "\n"),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let out = match &cli.command {
        Command::Classify(a) => cmd_classify(&parse_slope(&a.r)?, cli.json)?,
        Command::Cf { slope, positive, .. } => cmd_cf(&parse_slope(&slope.r)?, *positive, cli.json)?,
        Command::Symmetry(a) => cmd_symmetry(&parse_slope(&a.r)?, cli.json)?,
        Command::Epi { r_tilde, r } => cmd_epi(&parse_slope(r_tilde)?, &parse_slope(r)?, cli.json)?,
        Command::Orbit {
            slope,
            depth,
            max_den,
        } => cmd_orbit(&parse_slope(&slope.r)?, *depth, *max_den, cli.json)?,
        Command::Heckoid { slope, n } => {
            let twice_n = parse_half_integer(n)?;
            cmd_heckoid(&parse_slope(&slope.r)?, twice_n, cli.json)?
        }
        Command::Selfcheck { max_p } => return Ok(cmd_selfcheck(*max_p, cli.seed, cli.json)),
    };
    Ok((EXIT_OK, out))
}

fn cmd_classify(r: &Slope, as_json: bool) -> Result<String, Error> {
    let rep = classify(r)?;
    if as_json {
        return Ok(to_json(&rep) + "\n");
    }
    let mut s = String::new();
    let _ = writeln!(s, "slope {} ({:?})", rep.slope, rep.link_kind);
    let _ = writeln!(s, "isometry group {}", rep.isometry_group);
    if let Some(split) = &rep.extra_split {
        let _ = writeln!(s, "extra split {}, {} ({:?})", split.s1, split.s2, split.case);
    }
    let _ = writeln!(s, "candidates:");
    for c in &rep.candidates {
        let _ = writeln!(
            s,
            "  {:<44} omega {:<10} {}",
            c.kind.to_string(),
            c.omega.to_string(),
            if c.generates { "generates" } else { "does not generate" }
        );
    }
    let _ = writeln!(s, "verdict: {}", rep.verdict.join(", "));
    for st in &rep.statements {
        let _ = writeln!(s, "- {st}");
    }
    Ok(s)
}

fn cmd_cf(r: &Slope, positive: bool, as_json: bool) -> Result<String, Error> {
    let (form, text, entries) = if positive {
        let cf = cf_positive(r)?;
        let e: Vec<String> = cf.entries().iter().map(ToString::to_string).collect();
        ("positive", cf.to_string(), e)
    } else {
        let cf = cf_even(r)?;
        let e: Vec<String> = cf.entries().iter().map(ToString::to_string).collect();
        ("even", cf.to_string(), e)
    };
    if as_json {
        let entries: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| e.parse::<i64>().map_or_else(|_| json!(e), |n| json!(n)))
            .collect();
        return Ok(to_json(&json!({ "slope": r, "form": form, "entries": entries })) + "\n");
    }
    Ok(text + "\n")
}

fn cmd_symmetry(r: &Slope, as_json: bool) -> Result<String, Error> {
    let even = match even_symmetry_class(r) {
        Ok(c) => Some(c),
        Err(Error::BothOdd(_)) => None,
        Err(e) => return Err(e),
    };
    let positive = pos_symmetry_class(r)?;
    let isom = match isometry_group(r) {
        Ok(g) => Some(g),
        Err(Error::NotHyperbolic(_)) => None,
        Err(e) => return Err(e),
    };
    if as_json {
        return Ok(to_json(&json!({
            "slope": r,
            "even": even,
            "positive": positive,
            "isometry_group": isom,
        })) + "\n");
    }
    let even_text = even.map_or("none (p and q both odd)".to_string(), |c| format!("{c:?}"));
    let isom_text = isom.map_or("not hyperbolic".to_string(), |g| g.to_string());
    Ok(format!(
        "even: {even_text}\npositive: {positive:?}\nisometry group: {isom_text}\n"
    ))
}

fn cmd_epi(r_tilde: &Slope, r: &Slope, as_json: bool) -> Result<String, Error> {
    let v = epi_exists(r_tilde, r)?;
    if as_json {
        return Ok(to_json(&v) + "\n");
    }
    let mut s = format!("{v}\n");
    if let (Some(w), Some(x), Some(b)) = (&v.witness, &v.tested, &v.base) {
        if !w.is_empty() {
            let _ = writeln!(s, "{} -> {} by {}", x, w.apply(x), w);
        } else {
            let _ = writeln!(s, "{x} is {b}");
        }
    }
    Ok(s)
}

fn cmd_orbit(r: &Slope, depth: usize, max_den: u64, as_json: bool) -> Result<String, Error> {
    let elems = orbit_bfs(r, depth, &max_den.into())?;
    if as_json {
        return Ok(to_json(&json!({
            "slope": r,
            "depth": depth,
            "max_den": max_den,
            "elements": elems,
        })) + "\n");
    }
    let lines: Vec<String> = elems.iter().map(ToString::to_string).collect();
    Ok(lines.join("\n") + "\n")
}

fn cmd_heckoid(r: &Slope, twice_n: u64, as_json: bool) -> Result<String, Error> {
    let rep = heckoid_classification(r, twice_n)?;
    if as_json {
        return Ok(to_json(&rep) + "\n");
    }
    let d = &rep.descriptor;
    let mut s = format!("{d}\n");
    let weights: Vec<String> = d.weights.iter().map(|(k, v)| format!("{k:?}: {v}")).collect();
    let _ = writeln!(s, "weights {{{}}}", weights.join(", "));
    let _ = writeln!(s, "parabolic locus {:?}", d.parabolic_locus);
    let _ = writeln!(s, "isometry group {}", d.isometry_group);
    let _ = writeln!(s, "figure type ({})", rep.figure_type);
    if let Some(a) = &rep.annotation {
        let _ = writeln!(s, "fuchsian degenerate: {a}");
    }
    for st in &rep.statements {
        let _ = writeln!(s, "- {st}");
    }
    Ok(s)
}

fn cmd_selfcheck(max_p: u64, seed: u64, as_json: bool) -> (i32, String) {
    let rep = selfcheck(max_p, seed);
    let code = if rep.passed() { EXIT_OK } else { EXIT_DOMAIN };
    if as_json {
        return (code, to_json(&rep) + "\n");
    }
    let mut s = String::new();
    for sw in &rep.sweeps {
        let _ = writeln!(
            s,
            "{} {}: {} checks, {} violations",
            if sw.passed() { "PASS" } else { "FAIL" },
            sw.name,
            sw.checked,
            sw.violation_count
        );
        for v in &sw.violations {
            let _ = writeln!(s, "    {v}");
        }
    }
    let _ = writeln!(
        s,
        "{} (max_p {}, seed {})",
        if rep.passed() { "all sweeps passed" } else { "selfcheck failed" },
        max_p,
        seed
    );
    (code, s)
}
