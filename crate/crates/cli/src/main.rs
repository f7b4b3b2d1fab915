use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use curvesing::arith::{fmt_rat, parse_rat, Rat};
use curvesing::catalog::{all_classes, self_check};
use curvesing::classify::{
    classify_all, classify_point_with, expand_at, localize, ContextMode, Options, SCHEMA_VERSION,
    WARN_IRRATIONAL,
};
use curvesing::curve::{factor_rational, parse_poly, BiPoly};
use curvesing::newton::analyze;
use curvesing::Error;

#[derive(Parser, Debug)]
#[command(name = "curvesing", version, about = "Classify singular points of real plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    format: Format,
    /// Print exact coefficients and field descriptions.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the singular points of a curve.
    Classify {
        input: String,
        #[command(flatten)]
        local: LocalArgs,
        /// Which catalog list to match against.
        #[arg(long, value_enum, default_value_t = Context::Auto)]
        context: Context,
    },
    /// Print the branch-separating Puiseux expansions and the diagram.
    Expand {
        input: String,
        #[command(flatten)]
        local: LocalArgs,
    },
    /// Print the Newton polygon at a point.
    Polygon {
        input: String,
        #[arg(long, value_parser = parse_point)]
        point: Option<(Rat, Rat)>,
    },
    /// Factor a polynomial over the rationals.
    Factor { input: String },
    /// Inspect the catalog of singularity types.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(clap::Args, Debug)]
struct LocalArgs {
    /// Point to analyze, as `x,y` with rational coordinates.
    #[arg(long, value_parser = parse_point)]
    point: Option<(Rat, Rat)>,
    /// Largest exponent computed before giving up.
    #[arg(long, value_parser = parse_cap, default_value = "8")]
    cap: Rat,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Selfcheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Context {
    Irreducible,
    Reducible,
    Auto,
}

fn parse_point(s: &str) -> Result<(Rat, Rat), String> {
    let (a, b) = s.split_once(',').ok_or("expected x,y")?;
    let x = parse_rat(a).ok_or_else(|| format!("bad coordinate {a:?}"))?;
    let y = parse_rat(b).ok_or_else(|| format!("bad coordinate {b:?}"))?;
    Ok((x, y))
}

fn parse_cap(s: &str) -> Result<Rat, String> {
    let r = parse_rat(s).ok_or_else(|| format!("bad rational {s:?}"))?;
    if r <= Rat::from_integer(0.into()) {
        return Err("cap must be positive".into());
    }
    Ok(r)
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::UnknownIdentifier { .. } | Error::BadExponent { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn read_input(input: &str) -> Result<BiPoly, Failure> {
    let text = if Path::new(input).is_file() {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::Usage(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(parse_poly(text.trim())?)
}

fn origin() -> (Rat, Rat) {
    (Rat::from_integer(0.into()), Rat::from_integer(0.into()))
}

// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn emit(format: Format, v: Value, text: String) {
    let mut out = std::io::stdout().lock();
    let _ = match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Ascii => write!(out, "{text}"),
    };
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Classify { input, local, context } => {
            let f = read_input(&input)?;
            let opts = Options {
                cap: local.cap,
                context: match context {
                    Context::Auto => ContextMode::Auto,
                    Context::Irreducible => ContextMode::Irreducible,
                    Context::Reducible => ContextMode::Reducible,
                },
            };
            if let Some(p) = local.point {
                let r = classify_point_with(&f, &p, &opts)?;
                let mut v = r.to_json();
                v["schema_version"] = json!(SCHEMA_VERSION);
                emit(format, v, r.render_text());
                return Ok(());
            }
            let all = classify_all(&f, &opts)?;
            let mut reports = Vec::new();
            let mut errors = Vec::new();
            let mut text = String::new();
            for pr in &all.results {
                match &pr.report {
                    Ok(r) => {
                        reports.push(r.to_json());
                        text.push_str(&r.render_text());
                        text.push('\n');
                    }
                    Err(e) => {
                        let (x, y) = (fmt_rat(&pr.point.0), fmt_rat(&pr.point.1));
                        errors.push(json!({"point": [x, y], "error": e.to_string()}));
                        text.push_str(&format!("point ({x}, {y}): error: {e}\n\n"));
                    }
                }
            }
            if all.results.is_empty() {
                text.push_str("no singular points\n");
            }
            if all.may_miss_points {
                text.push_str(&format!("warning: {WARN_IRRATIONAL}\n"));
            }
            let warnings: Vec<&str> =
                if all.may_miss_points { vec![WARN_IRRATIONAL] } else { vec![] };
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "input": f.to_string(),
                "reports": reports,
                "errors": errors,
                "warnings": warnings,
            });
            emit(format, v, text);
            if errors.is_empty() {
                Ok(())
            } else {
                Err(Failure::Domain(format!("{} point(s) failed", errors.len())))
            }
        }
        Command::Expand { input, local } => {
            let f = read_input(&input)?;
            let p = local.point.unwrap_or_else(origin);
            let e = expand_at(&f, &p, &local.cap)?;
            emit(format, e.to_json(), e.render_text(cli.verbose > 0));
            Ok(())
        }
        Command::Polygon { input, point } => {
            let f = read_input(&input)?;
            let p = point.unwrap_or_else(origin);
            let (g, shear) = localize(&f, &p)?;
            let (poly, data) = analyze(&g)?;
            let mut v = poly.to_json(&data);
            v["schema_version"] = json!(SCHEMA_VERSION);
            v["shear"] = json!(shear);
            let mut text = String::new();
            if let Some(l) = shear {
                text.push_str(&format!("shear (x, y) <- (x + {l}*y, y)\n"));
            }
            let verts: Vec<String> =
                poly.vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
            text.push_str(&format!("vertices {}\n", verts.join(" ")));
            for d in &data {
                text.push_str(&format!(
                    "segment ({},{})-({},{}) exponent {} poly {}{}\n",
                    d.segment.from.0,
                    d.segment.from.1,
                    d.segment.to.0,
                    d.segment.to.1,
                    fmt_rat(&d.segment.exponent),
                    curvesing::newton::fmt_zpoly(&d.poly),
                    if d.multiple_root { " (multiple root)" } else { "" }
                ));
            }
            emit(format, v, text);
            Ok(())
        }
        Command::Factor { input } => {
            let f = read_input(&input)?;
            let l = factor_rational(&f)?;
            let factors: Vec<Value> = l
                .factors
                .iter()
                .map(|(g, m)| json!({"factor": g.to_string(), "multiplicity": m}))
                .collect();
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "unit": fmt_rat(&l.unit),
                "factors": factors,
                "irreducible": l.factors.len() == 1 && l.factors[0].1 == 1,
            });
            let mut text = format!("unit {}\n", fmt_rat(&l.unit));
            for (g, m) in &l.factors {
                text.push_str(&format!("({g})^{m}\n"));
            }
            emit(format, v, text);
            Ok(())
        }
        Command::Catalog { action: CatalogAction::List } => {
            let classes = all_classes();
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "classes": classes.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            });
            let mut text = format!("{:>3}  {:<13} {:>4} {:>4}  {}\n", "id", "label", "irr", "red", "code");
            let no = |n: Option<u32>| n.map_or("-".to_string(), |n| n.to_string());
            for c in classes {
                text.push_str(&format!(
                    "{:>3}  {:<13} {:>4} {:>4}  {}\n",
                    c.id,
                    c.arnold_label,
                    no(c.irreducible_no),
                    no(c.reducible_no),
                    c.code
                ));
            }
            emit(format, v, text);
            Ok(())
        }
        Command::Catalog { action: CatalogAction::Selfcheck } => {
            let r = self_check();
            let mut v = r.to_json();
            v["schema_version"] = json!(SCHEMA_VERSION);
            let mut text = format!(
                "{} classes, {} irreducible, {} reducible\n",
                r.classes, r.irreducible_count, r.reducible_count
            );
            for (id, msg) in &r.mismatches {
                text.push_str(&format!("mismatch in class {id}: {msg}\n"));
            }
            for ids in &r.duplicates {
                text.push_str(&format!("shared code among classes {ids:?}\n"));
            }
            text.push_str(if r.passed() { "selfcheck passed\n" } else { "selfcheck FAILED\n" });
            emit(format, v, text);
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Domain("catalog selfcheck failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
