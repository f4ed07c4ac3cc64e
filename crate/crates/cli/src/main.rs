mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use relkl::closedform::{mark, r_poly_closed};
use relkl::diagrams::{contains, QuotientSpec, ShapeDiagram};
use relkl::invariance::invariance_report_for;
use relkl::poly::Polynomial;
use relkl::verify::{verify, Quotient};
use serde_json::json;

use render::{coeffs, PolyRecord};

#[derive(Parser)]
#[command(name = "relkl", version, about = "Relative R- and Kazhdan-Lusztig polynomials of Hermitian symmetric quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relative R-polynomial of a pair of shapes.
    Rpoly {
        /// Quotient: A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7.
        spec: String,
        /// Row lengths of u, e.g. 3,2 (empty for the identity).
        #[arg(short, allow_hyphen_values = true)]
        u: String,
        /// Row lengths of v.
        #[arg(short, allow_hyphen_values = true)]
        v: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Relative Kazhdan-Lusztig polynomial of a pair of shapes.
    Klpoly {
        spec: String,
        #[arg(short, allow_hyphen_values = true)]
        u: String,
        #[arg(short, allow_hyphen_values = true)]
        v: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the closed form with the recursion on every pair.
    Verify {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Hasse diagram of the quotient as a DOT graph.
    Hasse {
        spec: String,
        /// Output file; stdout if omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// The marked skew diagram of a pair.
    Marks {
        spec: String,
        #[arg(short, allow_hyphen_values = true)]
        u: String,
        #[arg(short, allow_hyphen_values = true)]
        v: String,
    },
    /// Group intervals into isomorphism classes and compare their polynomials.
    Invariance {
        #[arg(required = true)]
        specs: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

/// Exit status 1: something was checked and found wrong.
const FAILED: u8 = 1;
/// Exit status 2: bad input.
const USAGE: u8 = 2;

enum Failure {
    Usage(String),
    Check(String),
}

impl From<relkl::Error> for Failure {
    fn from(e: relkl::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rpoly { spec, u, v, method, format } => rpoly(&spec, &u, &v, method, format),
        Command::Klpoly { spec, u, v, format } => klpoly(&spec, &u, &v, format),
        Command::Verify { specs } => verify_cmd(&specs),
        Command::Hasse { spec, dot } => hasse(&spec, dot),
        Command::Marks { spec, u, v } => marks(&spec, &u, &v),
        Command::Invariance { specs, max_length, format } => invariance(&specs, max_length, format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(FAILED)
        }
    }
}

fn parse_spec(s: &str) -> Result<QuotientSpec, Failure> {
    Ok(s.parse()?)
}

fn load(spec: &str, u: &str, v: &str) -> Result<(Quotient, ShapeDiagram, ShapeDiagram), Failure> {
    let q = Quotient::new(parse_spec(spec)?)?;
    let u = q.parse_shape(u)?;
    let v = q.parse_shape(v)?;
    Ok((q, u, v))
}

fn oracle_value(q: &Quotient, u: &ShapeDiagram, v: &ShapeDiagram) -> Polynomial {
    let (i, j) = (q.index_of(u).unwrap(), q.index_of(v).unwrap());
    let o = q.oracle();
    o.r_poly_memo(q.oracle_index(i), q.oracle_index(j), relkl::oracle::XParam::MinusOne, &mut Default::default())
}

fn show(p: &Polynomial, format: Format, record: PolyRecord) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => p.to_string(),
        Format::Latex => render::latex(p),
        Format::Json => serde_json::to_string(&record).expect("serializable"),
    })
}

fn record(spec: &str, u: &ShapeDiagram, v: &ShapeDiagram, method: &str, p: &Polynomial) -> Result<PolyRecord, Failure> {
    Ok(PolyRecord {
        quotient: spec.to_string(),
        u: u.to_string(),
        v: v.to_string(),
        method: method.into(),
        coeffs: coeffs(p).map_err(Failure::Check)?,
    })
}

fn rpoly(spec: &str, u: &str, v: &str, method: Method, format: Format) -> Outcome {
    let (q, u, v) = load(spec, u, v)?;
    let spec = q.spec().to_string();
    let closed = || r_poly_closed(&u, &v).map(|r| r.value).map_err(|e| Failure::Check(e.to_string()));
    match method {
        Method::Closed => {
            let p = closed()?;
            println!("{}", show(&p, format, record(&spec, &u, &v, "closed", &p)?)?);
            Ok(true)
        }
        Method::Oracle => {
            let p = oracle_value(&q, &u, &v);
            println!("{}", show(&p, format, record(&spec, &u, &v, "oracle", &p)?)?);
            Ok(true)
        }
        Method::Both => {
            let o = oracle_value(&q, &u, &v);
            let c = closed();
            let verdict = matches!(&c, Ok(p) if *p == o);
            if format == Format::Json {
                let closed_json = match &c {
                    Ok(p) => serde_json::to_value(record(&spec, &u, &v, "closed", p)?).unwrap(),
                    Err(Failure::Check(e) | Failure::Usage(e)) => json!({ "error": e }),
                };
                let out = json!({
                    "closed": closed_json,
                    "oracle": record(&spec, &u, &v, "oracle", &o)?,
                    "match": verdict,
                });
                println!("{out}");
            } else {
                let closed_text = match &c {
                    Ok(p) => show(p, format, record(&spec, &u, &v, "closed", p)?)?,
                    Err(Failure::Check(e) | Failure::Usage(e)) => format!("error: {e}"),
                };
                println!("closed: {closed_text}");
                println!("oracle: {}", show(&o, format, record(&spec, &u, &v, "oracle", &o)?)?);
                println!("{}", if verdict { "MATCH" } else { "MISMATCH" });
            }
            Ok(verdict)
        }
    }
}

/// R table in oracle order, from the closed form when it succeeds on every
/// pair and from the recursion otherwise.
fn r_for_kl(q: &Quotient) -> Vec<Vec<Polynomial>> {
    let shapes = q.shapes();
    let n = shapes.len();
    let mut r = vec![vec![Polynomial::zero(); n]; n];
    for (i, u) in shapes.iter().enumerate() {
        for (j, v) in shapes.iter().enumerate() {
            match r_poly_closed(u, v) {
                Ok(c) => r[q.oracle_index(i)][q.oracle_index(j)] = c.value,
                Err(_) => return q.oracle().r_table(relkl::oracle::XParam::MinusOne),
            }
        }
    }
    r
}

fn klpoly(spec: &str, u: &str, v: &str, format: Format) -> Outcome {
    let (q, u, v) = load(spec, u, v)?;
    let p = if contains(&u, &v)? {
        let kl = q.oracle().kl_table(&r_for_kl(&q)).map_err(|e| Failure::Check(e.to_string()))?;
        let (i, j) = (q.index_of(&u).unwrap(), q.index_of(&v).unwrap());
        kl[q.oracle_index(i)][q.oracle_index(j)].clone()
    } else {
        Polynomial::zero()
    };
    let spec = q.spec().to_string();
    println!("{}", show(&p, format, record(&spec, &u, &v, "kl", &p)?)?);
    Ok(true)
}

fn verify_cmd(specs: &[String]) -> Outcome {
    let specs = specs.iter().map(|s| parse_spec(s)).collect::<Result<Vec<_>, _>>()?;
    let mut ok = true;
    for spec in specs {
        let v = verify(&Quotient::new(spec)?);
        println!(
            "{spec}: {} elements, {} pairs, {} mismatches",
            v.elements,
            v.pairs,
            v.mismatches.len()
        );
        for m in &v.mismatches {
            let closed = m.closed.as_ref().map_or_else(|e| format!("error: {e}"), ToString::to_string);
            println!("  MISMATCH u=({}) v=({}): closed {closed}, oracle {}", m.u, m.v, m.oracle);
        }
        ok &= v.passed();
    }
    Ok(ok)
}

fn hasse(spec: &str, dot: Option<PathBuf>) -> Outcome {
    let q = Quotient::new(parse_spec(spec)?)?;
    let (text, edges) = render::hasse_dot(&q.spec().to_string(), q.shapes());
    match dot {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            println!("{}: {} nodes, {edges} edges -> {}", q.spec(), q.shapes().len(), path.display());
        }
        None => print!("{text}"),
    }
    Ok(true)
}

fn marks(spec: &str, u: &str, v: &str) -> Outcome {
    let (_, u, v) = load(spec, u, v)?;
    let marked = mark(&u, &v)?;
    print!("{}", render::marks(&u, &marked));
    Ok(true)
}

fn invariance(specs: &[String], max_length: usize, format: Format) -> Outcome {
    let quotients = specs
        .iter()
        .map(|s| Ok(Quotient::new(parse_spec(s)?)?))
        .collect::<Result<Vec<_>, Failure>>()?;
    let report = invariance_report_for(&quotients, max_length)?;
    let poly_list = |ps: &[Polynomial]| ps.iter().map(coeffs).collect::<Result<Vec<_>, _>>();
    match format {
        Format::Json => {
            let mut classes = Vec::new();
            for c in &report.classes {
                let r = c.representative();
                classes.push(json!({
                    "length": c.length,
                    "size": c.size,
                    "members": c.members.len(),
                    "representative": { "quotient": r.spec.to_string(), "u": r.u.to_string(), "v": r.v.to_string() },
                    "r_polys": poly_list(&c.r_polys).map_err(Failure::Check)?,
                    "kl_polys": poly_list(&c.kl_polys).map_err(Failure::Check)?,
                }));
            }
            let out = json!({
                "quotients": report.quotients.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "max_length": report.max_len,
                "intervals": report.intervals,
                "classes": classes,
                "violations": report.violations().len(),
            });
            println!("{out}");
        }
        Format::Text | Format::Latex => {
            let poly = |p: &Polynomial| if format == Format::Latex { render::latex(p) } else { p.to_string() };
            for c in &report.classes {
                let r = c.representative();
                let mark = if c.is_violation() { "VIOLATION " } else { "" };
                let rs: Vec<_> = c.r_polys.iter().map(poly).collect();
                let kls: Vec<_> = c.kl_polys.iter().map(poly).collect();
                println!(
                    "{mark}length {} size {} members {} rep {} ({}) < ({}): R = {}; P = {}",
                    c.length,
                    c.size,
                    c.members.len(),
                    r.spec,
                    r.u,
                    r.v,
                    rs.join(" | "),
                    kls.join(" | ")
                );
            }
            println!(
                "{} intervals, {} classes, {} violations",
                report.intervals,
                report.classes.len(),
                report.violations().len()
            );
        }
    }
    Ok(report.passed())
}
