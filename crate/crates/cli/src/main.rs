use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use splitfield::extension::{analyze_tower, max_ratio_check, ExtensionReport, ExtensionSpec};
use splitfield::io::{self, element_from_json, poly_from_json, poly_to_json};
use splitfield::oracle::{brute_force_count, verify_report, OracleCount, OracleOptions, PlaceCount, Verification};
use splitfield::poly::{factorize, DEFAULT_SEED};
use splitfield::quasisym::{
    compose_with_irreducible, is_quasisymmetric_semantic, is_quasisymmetric_syntactic, is_zero_free, lift,
    maps_into_fq, power_minus_nonresidue,
};
use splitfield::{Error, FieldCtx, Poly};

#[derive(Parser)]
#[command(name = "splitfield", version, about = "Function field extensions with many rational places")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[arg(long, default_value_t = splitfield::oracle::DEFAULT_SIZE_GUARD, global = true)]
    size_guard: u64,
    /// Run the brute-force oracle on all cores.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Compose,
    Power,
}

#[derive(Args)]
struct SpecArg {
    /// Extension spec: a JSON file path, or inline JSON.
    spec: String,
}

#[derive(Args)]
struct FieldArg {
    /// `p,m,n`, or a field JSON object.
    #[arg(long)]
    field: String,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze every rational and ramified place of an extension.
    Analyze(SpecArg),
    /// Count degree-one places by exhaustive enumeration.
    Oracle(SpecArg),
    /// Run both and compare place by place.
    Verify(SpecArg),
    /// Quasi-symmetry verdicts for a polynomial.
    QsCheck {
        #[command(flatten)]
        field: FieldArg,
        /// JSON array of coefficients (elements or integers), lowest degree first.
        #[arg(long)]
        poly: String,
    },
    /// Build a zero-free quasi-symmetric polynomial.
    QsConstruct {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, required = true)]
        zero_free: bool,
        #[arg(long, value_enum)]
        method: Method,
        /// The quasi-symmetric inner polynomial.
        #[arg(long)]
        inner: String,
        /// Outer polynomial over F_q without roots in F_q (compose).
        #[arg(long, required_if_eq("method", "compose"))]
        outer: Option<String>,
        /// Exponent m (power).
        #[arg(long, required_if_eq("method", "power"))]
        m: Option<u64>,
        /// Element of F_q that is not an m-th power (power).
        #[arg(long, required_if_eq("method", "power"))]
        beta: Option<String>,
    },
    /// Degree-p tower of a full-trace extension and its intermediate fields.
    Tower(SpecArg),
    /// Canonical factorization of a polynomial.
    Factor {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
    },
    /// Frobenius orbits of the field.
    Orbits {
        #[command(flatten)]
        field: FieldArg,
    },
}

enum Failure {
    Mismatch(Value),
    Invalid(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } | Error::DimensionGuard { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn parse_json(src: &str) -> Result<Value, Failure> {
    serde_json::from_str(src).map_err(|e| Failure::Invalid(format!("invalid JSON: {e}")))
}

fn load_spec(arg: &str) -> Result<ExtensionSpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Invalid(format!("{arg}: {e}")))?
    };
    Ok(io::spec_from_json(&parse_json(&text)?)?)
}

fn parse_field(arg: &str) -> Result<FieldCtx, Failure> {
    if arg.trim_start().starts_with('{') {
        return Ok(io::field_from_json(&parse_json(arg)?)?);
    }
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    let [p, m, n] = parts.as_slice() else {
        return Err(Failure::Invalid(format!("field must be p,m,n (got {arg})")));
    };
    let bad = |s: &str| Failure::Invalid(format!("not a number: {s}"));
    Ok(FieldCtx::new(p.parse().map_err(|_| bad(p))?, m.parse().map_err(|_| bad(m))?, n.parse().map_err(|_| bad(n))?)?)
}

fn parse_poly(k: &FieldCtx, arg: &str) -> Result<Poly, Failure> {
    Ok(poly_from_json(k, &parse_json(arg)?)?)
}

fn bool_mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_text(k: &FieldCtx, r: &ExtensionReport) -> String {
    let mut out = format!(
        "{} extension of degree {} over F_{}(x)\nirreducible: {}\n",
        r.kind, r.degree, r.field_order, r.irreducibility
    );
    for v in &r.verdicts {
        let status = serde_json::to_value(v.status).expect("status serializes");
        let kind = status["kind"].as_str().unwrap_or("?").to_string();
        let extra: Vec<String> = status
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(key, _)| *key != "kind")
            .map(|(key, val)| format!("{key}={val}"))
            .collect();
        out += &format!(
            "  {:<24} v={:<4} {}{} places_above_deg1={}\n",
            v.place.render(k),
            v.valuation,
            kind,
            if extra.is_empty() { String::new() } else { format!(" ({})", extra.join(", ")) },
            v.places_above_degree1
        );
    }
    let opt = |x: Option<u64>| x.map_or("unresolved".to_string(), |v| v.to_string());
    out += &format!(
        "degDiff = {}\ngenus = {}\nN(E) = {}\nN(E)/[E:F] = {}/{}\nmaximal: {}\n",
        opt(r.deg_different),
        opt(r.genus),
        r.n_rational,
        r.ratio.num,
        r.ratio.den,
        bool_mark(max_ratio_check(r))
    );
    out
}

fn oracle_text(k: &FieldCtx, o: &OracleCount) -> String {
    let show = |c: PlaceCount| match c {
        PlaceCount::Counted(n) => n.to_string(),
        PlaceCount::Delegated => "delegated".into(),
    };
    let mut out = format!("P_inf: {}\n", show(o.infinity));
    for &(a, c) in &o.per_alpha {
        out += &format!("x = {}: {}\n", k.render(a), show(c));
    }
    out += &format!("total degree-one places: {}\n", o.total_degree1);
    out
}

fn qs_verdicts(k: &FieldCtx, f: &Poly) -> Result<Value, Failure> {
    let r = f.reduce_mod_field_poly(k);
    let l = lift(&r, k)?;
    Ok(json!({
        "poly": poly_to_json(k, f),
        "render": f.render(k, "t"),
        "semantic": is_quasisymmetric_semantic(&r, k),
        "syntactic": is_quasisymmetric_syntactic(&r, k)?,
        "lift": l.is_cyclic_invariant(),
        "lift_fully_symmetric": l.is_fully_symmetric(),
        "fq_valued": maps_into_fq(&r, k),
        "zero_free": is_zero_free(&r, k),
    }))
}

fn flat_text(v: &Value) -> String {
    v.as_object()
        .map(|o| o.iter().map(|(key, val)| format!("{key}: {val}\n")).collect())
        .unwrap_or_else(|| format!("{v}\n"))
}

fn run(cli: &Cli) -> Result<(Value, String), Failure> {
    let opts = OracleOptions { size_guard: cli.size_guard, parallel: cli.parallel };
    match &cli.command {
        Command::Analyze(a) => {
            let spec = load_spec(&a.spec)?;
            let r = spec.analyze(cli.seed)?;
            Ok((io::report_to_json(&spec.field, &r), report_text(&spec.field, &r)))
        }
        Command::Oracle(a) => {
            let spec = load_spec(&a.spec)?;
            let o = brute_force_count(&spec, opts)?;
            Ok((io::oracle_to_json(&spec.field, &o), oracle_text(&spec.field, &o)))
        }
        Command::Verify(a) => {
            let spec = load_spec(&a.spec)?;
            let k = &spec.field;
            let r = spec.analyze(cli.seed)?;
            let o = brute_force_count(&spec, opts)?;
            let verdict = verify_report(k, &r, &o);
            let v = json!({
                "report": io::report_to_json(k, &r),
                "oracle": io::oracle_to_json(k, &o),
                "verification": io::verification_to_json(&verdict),
            });
            match verdict {
                Verification::Verified => Ok((v, format!("{}verified\n", report_text(k, &r)))),
                Verification::Mismatch(_) => Err(Failure::Mismatch(v)),
            }
        }
        Command::QsCheck { field, poly } => {
            let k = parse_field(&field.field)?;
            let v = qs_verdicts(&k, &parse_poly(&k, poly)?)?;
            let text = flat_text(&v);
            Ok((v, text))
        }
        Command::QsConstruct { field, zero_free: _, method, inner, outer, m, beta } => {
            let k = parse_field(&field.field)?;
            let s = parse_poly(&k, inner)?;
            let f = match method {
                Method::Compose => {
                    let outer = parse_poly(&k, outer.as_deref().expect("required by clap"))?;
                    compose_with_irreducible(&k, &outer, &s)?
                }
                Method::Power => {
                    let beta = element_from_json(&k, &parse_json(beta.as_deref().expect("required by clap"))?)?;
                    power_minus_nonresidue(&k, &s, m.expect("required by clap"), beta)?
                }
            };
            let v = qs_verdicts(&k, &f)?;
            let text = flat_text(&v);
            Ok((v, text))
        }
        Command::Tower(a) => {
            let spec = load_spec(&a.spec)?;
            let k = &spec.field;
            let t = analyze_tower(&spec, cli.seed)?;
            let mut text = String::new();
            for s in &t.tower.steps {
                text += &format!("{}\n", s.equation(k));
            }
            for (i, r) in t.prefixes.iter().enumerate() {
                text += &format!("-- E^{} --\n{}", i + 1, report_text(k, r));
            }
            Ok((io::tower_to_json(k, &t), text))
        }
        Command::Factor { field, poly } => {
            let k = parse_field(&field.field)?;
            let f = parse_poly(&k, poly)?;
            let fac = factorize(&f, &k, cli.seed)?;
            let mut text = format!("unit {}\n", k.render(fac.unit));
            for (p, e) in &fac.factors {
                text += &format!("({})^{e}\n", p.render(&k, "x"));
            }
            Ok((io::factorization_to_json(&k, &fac), text))
        }
        Command::Orbits { field } => {
            let k = parse_field(&field.field)?;
            let orbits = k.galois_orbits();
            let mut text = format!("{} orbits\n", orbits.len());
            let rows: Vec<Value> = orbits
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    let names: Vec<String> = o.iter().map(|&a| k.render(a)).collect();
                    text += &format!("{i}: {{{}}}\n", names.join(", "));
                    json!({
                        "index": i,
                        "size": o.len(),
                        "elements": o.iter().map(|&a| io::element_to_json(&k, a)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok((json!({ "count": orbits.len(), "orbits": rows }), text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = |v: &Value, text: &str| match cli.format {
        Format::Json => print!("{}", io::to_pretty(v)),
        Format::Text => print!("{text}"),
    };
    match run(&cli) {
        Ok((v, text)) => {
            emit(&v, &text);
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(v)) => {
            emit(&v, "mismatch\n");
            eprintln!("analysis and oracle disagree: {}", v["verification"]["details"]);
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
