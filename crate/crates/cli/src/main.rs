//! `logbps`: command-line access to log and local BPS computations.
//!
//! Every number is printed exactly, as `p/q` or an integer. `--json` switches
//! any subcommand to machine-readable output; fractions are JSON strings,
//! generating-series coefficients are JSON integers.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use logbps::bps::{local_bps_map, local_gw_map, log_bps_map, log_gw_map, DivisorMap, PointClassProfile};
use logbps::exceptional::{conic_classes, line_classes};
use logbps::numtheory::{format_rat, parse_rat};
use logbps::p2cycles::reproduce_p2_table;
use logbps::quiver::{dt, dt_product_expansion};
use logbps::tables::{log_bps_closed_form, BpsRecord};
use logbps::torsion::strata_p2;
use logbps::{Error, Rat, Surface};

#[derive(Parser)]
#[command(name = "logbps", version, about = "Exact log and local BPS numbers of del Pezzo pairs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice data of a surface (P2, S1..S8, P1xP1).
    Surface { spec: Surface },
    /// List the line or conic classes of a surface.
    Classes { kind: ClassKind, surface: Surface },
    /// Closed-form BPS numbers of a curve class.
    Bps {
        #[arg(long)]
        surface: Surface,
        /// "d;a1,..,ar" on a blowup of the plane, "a,b" on P1xP1.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Convert between Gromov-Witten and BPS numbers of the classes beta/k.
    Invert {
        kind: InvertKind,
        /// Tangency weight w = -K.beta (used by the log conversion).
        #[arg(long, default_value_t = 1)]
        w: u64,
        /// Comma-separated k=value pairs, one per divisor k.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Go from BPS numbers to invariants instead.
        #[arg(long)]
        forward: bool,
    },
    /// DT invariants of the loop quiver.
    Quiver {
        #[command(subcommand)]
        command: QuiverCommand,
    },
    /// Contact-point strata of the plane.
    Torsion {
        #[command(subcommand)]
        command: TorsionCommand,
    },
    /// Recompute the invariants of (P2, E) in degrees up to 4.
    Reproduce {
        target: ReproduceTarget,
        /// Use a curve with j = 0 (a cuspidal cubic through the flexes).
        #[arg(long)]
        j_zero: bool,
    },
}

#[derive(Subcommand)]
enum QuiverCommand {
    /// dt(m, n).
    Dt {
        #[arg(long)]
        loops: u64,
        #[arg(long)]
        n: u64,
    },
    /// Coefficients of the Hilbert-scheme generating series up to t^order.
    Series {
        #[arg(long)]
        loops: u64,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum TorsionCommand {
    /// Sizes of the primitive strata of E(dh).
    Strata {
        #[arg(long)]
        degree: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassKind {
    Lines,
    Conics,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvertKind {
    Log,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproduceTarget {
    P2,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let (text, value) = match &cli.command {
        Command::Surface { spec } => surface(spec),
        Command::Classes { kind, surface } => classes(*kind, surface),
        Command::Bps { surface, class } => bps(surface, class)?,
        Command::Invert {
            kind,
            w,
            values,
            forward,
        } => invert(*kind, *w, values, *forward)?,
        Command::Quiver { command } => quiver(command)?,
        Command::Torsion {
            command: TorsionCommand::Strata { degree },
        } => torsion(*degree)?,
        Command::Reproduce { target: ReproduceTarget::P2, j_zero } => reproduce(*j_zero)?,
    };
    Ok(if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("JSON values serialize"))
    } else {
        text
    })
}

type Output = (String, Value);

fn rat_json(q: &Option<Rat>) -> Value {
    q.as_ref().map_or(Value::Null, |q| Value::String(format_rat(q)))
}

fn surface(s: &Surface) -> Output {
    let k = s.canonical_class();
    let text = format!(
        "surface {}\nrank {}\neuler characteristic {}\ncanonical class {}\nK^2 {}\n",
        s.name(),
        s.rank(),
        s.euler_characteristic(),
        s.format_class(&k),
        s.self_intersection(&k).expect("K lives on S"),
    );
    let value = json!({
        "surface": s.name(),
        "rank": s.rank(),
        "euler_characteristic": s.euler_characteristic(),
        "canonical_class": s.format_class(&k),
        "k_squared": s.self_intersection(&k).expect("K lives on S"),
    });
    (text, value)
}

fn classes(kind: ClassKind, s: &Surface) -> Output {
    let list = match kind {
        ClassKind::Lines => line_classes(s),
        ClassKind::Conics => conic_classes(s),
    };
    let names: Vec<String> = list.iter().map(|c| s.format_class(c)).collect();
    let text = names.iter().map(|n| format!("{n}\n")).collect();
    (text, json!(names))
}

fn bps(s: &Surface, class: &str) -> Result<Output, Error> {
    let beta = s.parse_class(class)?;
    let r: BpsRecord = log_bps_closed_form(s, &beta)?;
    let show = |q: &Option<Rat>| q.as_ref().map_or("-".to_string(), format_rat);
    let text = format!(
        "surface {}\nclass {}\nw {}\npa {}\neta {}\nm_point {}\nm_total {}\nn_local {}\nformula {}\n",
        s.name(),
        s.format_class(&r.class),
        r.w,
        r.p_a,
        r.eta,
        show(&r.m_point),
        show(&r.m_total),
        show(&r.n_local),
        r.formula.as_str(),
    );
    let value = json!({
        "surface": s.name(),
        "class": s.format_class(&r.class),
        "w": r.w,
        "pa": r.p_a,
        "eta": r.eta,
        "m_point": rat_json(&r.m_point),
        "m_total": rat_json(&r.m_total),
        "n_local": rat_json(&r.n_local),
        "formula": r.formula.as_str(),
        "assumes_general": r.formula.assumes_general_pair(),
    });
    Ok((text, value))
}

fn parse_values(text: &str) -> Result<DivisorMap, Error> {
    let mut map = DivisorMap::new();
    for entry in text.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let bad = |reason: &str| Error::Parse {
            token: entry.to_string(),
            reason: reason.to_string(),
        };
        let (k, v) = entry.split_once('=').ok_or_else(|| bad("expected k=value"))?;
        let k: u64 = k.trim().parse().map_err(|_| bad("k must be a positive integer"))?;
        if k == 0 {
            return Err(bad("k must be a positive integer"));
        }
        if map.insert(k, parse_rat(v.trim())?).is_some() {
            return Err(bad("k given twice"));
        }
    }
    if map.is_empty() {
        return Err(Error::Domain("no values given".into()));
    }
    Ok(map)
}

fn invert(kind: InvertKind, w: u64, values: &str, forward: bool) -> Result<Output, Error> {
    let input = parse_values(values)?;
    let out = match kind {
        InvertKind::Log => {
            let content = input.keys().copied().fold(1, num_lcm);
            let profile = PointClassProfile::new(input.keys().copied(), content)?;
            if forward {
                log_gw_map(w, &input, &profile)?
            } else {
                log_bps_map(w, &input, &profile)?
            }
        }
        InvertKind::Local if forward => local_gw_map(&input)?,
        InvertKind::Local => local_bps_map(&input)?,
    };
    let text = out
        .iter()
        .map(|(k, v)| format!("{k}={}\n", format_rat(v)))
        .collect();
    let value: serde_json::Map<String, Value> = out
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(format_rat(v))))
        .collect();
    Ok((text, Value::Object(value)))
}

fn num_lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn quiver(command: &QuiverCommand) -> Result<Output, Error> {
    match *command {
        QuiverCommand::Dt { loops, n } => {
            let v = format_rat(&dt(loops, n)?);
            Ok((format!("{v}\n"), json!({ "loops": loops, "n": n, "dt": v })))
        }
        QuiverCommand::Series { loops, order } => {
            let series = dt_product_expansion(loops, order)?;
            let coeffs: Vec<String> = series.coeffs().iter().map(format_rat).collect();
            let numbers = coeffs
                .iter()
                .map(|c| serde_json::from_str::<Value>(c).expect("series coefficients are integers"))
                .collect();
            Ok((format!("{}\n", coeffs.join(" ")), Value::Array(numbers)))
        }
    }
}

fn torsion(degree: u64) -> Result<Output, Error> {
    let rows = strata_p2(degree)?;
    let mut text = format!("{:>4} {:>10} {:>8}\n", "k", "orders", "count");
    for r in &rows {
        let orders: Vec<String> = r.orders.iter().map(u64::to_string).collect();
        text += &format!("{:>4} {:>10} {:>8}\n", r.k, orders.join(","), r.count);
    }
    let total: u64 = rows.iter().map(|r| r.count).sum();
    text += &format!("total {total}\n");
    let value = json!({ "degree": degree, "strata": rows, "total": total });
    Ok((text, value))
}

fn reproduce(j_zero: bool) -> Result<Output, Error> {
    let rows = reproduce_p2_table(!j_zero)?;
    let mut text = format!("{:>2} {:>2} {:>10} {:>4} {}\n", "d", "k", "N", "m", "check");
    let mut values = Vec::new();
    for r in &rows {
        let status = if r.consistent() { "PASS" } else { "FAIL" };
        text += &format!(
            "{:>2} {:>2} {:>10} {:>4} {status}\n",
            r.d,
            r.k,
            format_rat(&r.n),
            format_rat(&r.m)
        );
        values.push(json!({
            "d": r.d,
            "k": r.k,
            "n": format_rat(&r.n),
            "m": format_rat(&r.m),
            "status": status,
        }));
    }
    Ok((text, json!({ "j_zero": j_zero, "rows": values })))
}
