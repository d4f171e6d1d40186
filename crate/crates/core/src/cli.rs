//! Command-line front end. Every subcommand reads one JSON document and
//! writes one JSON document; `--format text` renders the same document as
//! `key: value` lines.

use std::ffi::OsString;
use std::io::Read;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};

use crate::apps::{bundle_s1_min_circles, bundle_t2_min_circles, T2BundleMapData};
use crate::error::{Error, Result};
use crate::hochschild::{
    boundary_d1, boundary_d2, homology_coefficients, reduce_to_canonical, tensor_trace, Chain1, Chain2,
    GroupElement, RingElement, RingMatrix,
};
use crate::intlin::{GroupOrder, IntMatrix};
use crate::nielsen::{
    classical_nielsen, jezierski_d, lefschetz_class, one_param_nielsen, semicentralizer, semiconjugacy_classes,
    HomotopyDescriptor,
};
use crate::oracle::{choose_generic_epsilon, fixed_set_exact, fixed_set_grid, LinearHomotopy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "torus-nielsen", version, about = "One-parameter Nielsen theory on the n-torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Grid,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline JSON (starting with '{'), a file path, or '-' for stdin
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    /// Grid points per axis [default: 192 for n <= 2, 48 for n = 3]
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Grid marking tolerance [default: 1.5/resolution * (1 + max row sum)]
    #[arg(long)]
    pub tol: Option<f64>,
    /// Translation offset as comma-separated rationals, e.g. "1/11,1/13"
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    /// Selects the generic offset when --epsilon is absent
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include one sample point per component
    #[arg(long)]
    pub samples: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// |det(φ − I)|
    #[command(name = "classic")]
    Classic(InputArgs),
    /// One-parameter Nielsen number N(F) and its case
    #[command(name = "one-param")]
    OneParam(InputArgs),
    /// Lefschetz class ±N(F)·α
    #[command(name = "lefschetz")]
    Lefschetz(InputArgs),
    /// Semiconjugacy classes and representatives
    #[command(name = "semiconj")]
    Semiconj(InputArgs),
    /// Basis of ker(φ − I)
    #[command(name = "semicentralizer")]
    Semicentralizer(InputArgs),
    /// gcd of the maximal minors of [(φ − I) | c]
    #[command(name = "jezierski")]
    Jezierski(InputArgs),
    /// Boundary of a 1-chain
    #[command(name = "hochschild-d1")]
    HochschildD1(InputArgs),
    /// Boundary of a 2-chain
    #[command(name = "hochschild-d2")]
    HochschildD2(InputArgs),
    /// Canonical form of a 1-cycle with its boundary certificate
    #[command(name = "hochschild-reduce")]
    HochschildReduce(InputArgs),
    /// Trace of a tensor product of matrices over the group ring
    #[command(name = "trace")]
    Trace(InputArgs),
    /// Geometric count of fixed circles of a linear homotopy
    #[command(name = "oracle")]
    Oracle(OracleArgs),
    /// Minimum fixed circles on a T²-bundle over the circle
    #[command(name = "bundle-t2")]
    BundleT2(InputArgs),
    /// Minimum fixed circles on a circle bundle over the circle
    #[command(name = "bundle-s1")]
    BundleS1(InputArgs),
}

impl Command {
    fn io(&self) -> &InputArgs {
        match self {
            Command::Classic(a)
            | Command::OneParam(a)
            | Command::Lefschetz(a)
            | Command::Semiconj(a)
            | Command::Semicentralizer(a)
            | Command::Jezierski(a)
            | Command::HochschildD1(a)
            | Command::HochschildD2(a)
            | Command::HochschildReduce(a)
            | Command::Trace(a)
            | Command::BundleT2(a)
            | Command::BundleS1(a) => a,
            Command::Oracle(o) => &o.io,
        }
    }
}

/// Parses arguments, executes, and returns the exit code with the document
/// to print (stdout on success, stderr otherwise).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_OK, e.to_string()),
                _ => (EXIT_INPUT, error_document(&Error::MalformedInput(e.to_string().trim().to_string()))),
            };
        }
    };
    let format = cli.command.io().format;
    match load_input(&cli.command.io().input).and_then(|input| execute(&cli.command, &input)) {
        Ok(doc) => (EXIT_OK, render(&doc, format)),
        Err(e) => {
            let code = if matches!(e, Error::Internal(_)) { EXIT_INTERNAL } else { EXIT_INPUT };
            (code, error_document(&e))
        }
    }
}

pub fn error_document(e: &Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

pub fn render(doc: &Value, format: Format) -> String {
    match (format, doc) {
        (Format::Text, Value::Object(map)) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => doc.to_string(),
    }
}

fn load_input(source: &str) -> Result<Value> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::MalformedInput(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| Error::MalformedInput(format!("reading {source}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::MalformedInput(format!("invalid JSON: {e}")))
}

/// Runs one subcommand on an already parsed input document.
pub fn execute(command: &Command, input: &Value) -> Result<Value> {
    match command {
        Command::Classic(_) => {
            let (phi, _) = parse_phi(input)?;
            Ok(json!({"N": int_json(&classical_nielsen(&phi)?)}))
        }
        Command::OneParam(_) => {
            let r = one_param_nielsen(&parse_problem(input)?);
            let mut doc = json!({"N": int_json(&r.nielsen), "case": r.case.as_str()});
            if let Some(alpha) = &r.alpha_direction {
                doc["alpha"] = vec_json(alpha);
                doc["sign_ambiguous"] = Value::Bool(r.sign_ambiguous);
            }
            Ok(doc)
        }
        Command::Lefschetz(_) => {
            let l = lefschetz_class(&parse_problem(input)?);
            let mut doc = json!({"magnitude": int_json(&l.magnitude)});
            if let Some(alpha) = &l.alpha_direction {
                doc["alpha"] = vec_json(alpha);
                doc["sign_ambiguous"] = Value::Bool(l.sign_ambiguous);
            }
            Ok(doc)
        }
        Command::Semiconj(_) => {
            let s = semiconjugacy_classes(&parse_problem(input)?);
            let order = match &s.structure.order {
                GroupOrder::Finite(k) => int_json(k),
                GroupOrder::Infinite => json!("INFINITE"),
            };
            let reps = match &s.representatives {
                Some(reps) => Value::Array(reps.iter().map(|g| vec_json(g.exponents())).collect()),
                None => json!("INFINITE"),
            };
            Ok(json!({
                "invariant_factors": vec_json(&s.structure.invariant_factors),
                "free_rank": s.structure.free_rank,
                "order": order,
                "representatives": reps,
            }))
        }
        Command::Semicentralizer(_) => {
            let basis = semicentralizer(&parse_problem(input)?);
            Ok(json!({"basis": basis.iter().map(|v| vec_json(v)).collect::<Vec<_>>()}))
        }
        Command::Jezierski(_) => Ok(json!({"D": int_json(&jezierski_d(&parse_problem(input)?))})),
        Command::HochschildD1(_) => {
            let ch = parse_chain1(input)?;
            Ok(json!({"n": ch.dim(), "terms": ring_json(&boundary_d1(&ch))}))
        }
        Command::HochschildD2(_) => Ok(chain1_json(&boundary_d2(&parse_chain2(input)?))),
        Command::HochschildReduce(_) => {
            let ch = parse_chain1(input)?;
            let red = reduce_to_canonical(&ch)?;
            let mut doc = json!({
                "canonical": chain1_json(&red.canonical),
                "certificate": chain2_json(&red.certificate),
            });
            if input.get("c").is_some() {
                let c = parse_vec(field(input, "c")?, "c")?;
                let desc = HomotopyDescriptor::new(ch.phi().clone(), c)?;
                let coeffs = homology_coefficients(&red.canonical, &desc)?;
                doc["coefficients"] = coeffs
                    .iter()
                    .map(|(g, k)| json!({"class": vec_json(g.exponents()), "coefficient": int_json(k)}))
                    .collect();
            }
            Ok(doc)
        }
        Command::Trace(_) => {
            let (phi, n) = parse_phi(input)?;
            let p = parse_ring_matrix(field(input, "P")?, n, "P")?;
            let q = parse_ring_matrix(field(input, "Q")?, n, "Q")?;
            let sign = match input.get("sign") {
                None => 1,
                Some(v) => parse_int(v, "sign")?
                    .try_into()
                    .map_err(|_| Error::MalformedInput("sign must be 1 or -1".into()))?,
            };
            Ok(chain1_json(&tensor_trace(&phi, &p, &q, sign)?))
        }
        Command::Oracle(args) => oracle(args, input),
        Command::BundleT2(_) => {
            let mut d = T2BundleMapData::new(
                parse_int(field(input, "b12")?, "b12")?,
                parse_int(field(input, "b22")?, "b22")?,
                parse_int(field(input, "c1")?, "c1")?,
                parse_int(field(input, "c2")?, "c2")?,
            );
            d.case = match input.get("case") {
                None | Some(Value::Null) => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(other) => return Err(Error::MalformedInput(format!("case must be a string, got {other}"))),
            };
            Ok(json!({"N": int_json(&bundle_t2_min_circles(&d))}))
        }
        Command::BundleS1(_) => Ok(json!({"N": int_json(&bundle_s1_min_circles(&parse_int(field(input, "k")?, "k")?))})),
    }
}

fn oracle(args: &OracleArgs, input: &Value) -> Result<Value> {
    let desc = parse_problem(input)?;
    let n = desc.n();
    let epsilon = match &args.epsilon {
        Some(text) => parse_epsilon(text)?,
        None => choose_generic_epsilon(&desc, args.seed),
    };
    let h = LinearHomotopy::new(desc, epsilon)?;
    let report = match args.method {
        Method::Exact => fixed_set_exact(&h),
        Method::Grid => {
            let per_axis = args.resolution.unwrap_or(if n <= 2 { 192 } else { 48 });
            fixed_set_grid(&h, &vec![per_axis; n + 1], args.tol)?
        }
    };
    let mut doc = json!({"components": int_json(&report.component_count), "method": report.method.as_str()});
    if args.samples {
        doc["samples"] = match &report.samples {
            Some(points) => points
                .iter()
                .map(|p| Value::Array(p.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
            None => Value::Null,
        };
    }
    Ok(doc)
}

fn parse_epsilon(text: &str) -> Result<Vec<BigRational>> {
    text.split(',')
        .map(|part| {
            BigRational::from_str(part.trim())
                .map_err(|_| Error::MalformedInput(format!("epsilon entry {part:?} is not a rational p/q")))
        })
        .collect()
}

pub fn int_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vec_json(r)).collect())
}

fn ring_json(r: &RingElement) -> Value {
    r.terms()
        .map(|(g, k)| json!({"coeff": int_json(k), "g": vec_json(g.exponents())}))
        .collect()
}

pub fn chain1_json(ch: &Chain1) -> Value {
    let terms: Vec<Value> = ch
        .terms()
        .map(|(b, d, k)| json!({"coeff": int_json(k), "B": vec_json(b.exponents()), "D": vec_json(d.exponents())}))
        .collect();
    json!({"n": ch.dim(), "phi": matrix_json(ch.phi()), "terms": terms})
}

pub fn chain2_json(ch: &Chain2) -> Value {
    let terms: Vec<Value> = ch
        .terms()
        .map(|(b, d, e, k)| {
            json!({
                "coeff": int_json(k),
                "B": vec_json(b.exponents()),
                "D": vec_json(d.exponents()),
                "E": vec_json(e.exponents()),
            })
        })
        .collect();
    json!({"n": ch.dim(), "phi": matrix_json(ch.phi()), "terms": terms})
}

fn malformed(what: &str, v: &Value) -> Error {
    Error::MalformedInput(format!("{what}: unexpected value {v}"))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    let obj: &Map<String, Value> = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("input must be a JSON object".into()))?;
    obj.get(name)
        .ok_or_else(|| Error::MalformedInput(format!("missing field {name:?}")))
}

pub fn parse_int(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::MalformedInput(format!("{what}: {n} is not an integer"))),
        other => Err(malformed(what, other)),
    }
}

fn parse_vec(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| malformed(what, v))?
        .iter()
        .map(|x| parse_int(x, what))
        .collect()
}

fn parse_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::MalformedInput(format!("{what} must be a nonnegative integer")))
}

/// Reads `"phi"` and checks it against `"n"`.
fn parse_phi(input: &Value) -> Result<(IntMatrix, usize)> {
    let n = parse_usize(field(input, "n")?, "n")?;
    let rows = field(input, "phi")?
        .as_array()
        .ok_or_else(|| Error::MalformedInput("phi must be an array of rows".into()))?
        .iter()
        .map(|r| parse_vec(r, "phi row"))
        .collect::<Result<Vec<_>>>()?;
    let phi = IntMatrix::try_from_rows(&rows)?;
    if !phi.is_square() {
        return Err(Error::NonSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    if phi.rows() != n || n == 0 {
        return Err(Error::mismatch(format!("n = {n} but phi is {}x{}", phi.rows(), phi.cols())));
    }
    Ok((phi, n))
}

pub fn parse_problem(input: &Value) -> Result<HomotopyDescriptor> {
    let (phi, _) = parse_phi(input)?;
    HomotopyDescriptor::new(phi, parse_vec(field(input, "c")?, "c")?)
}

fn parse_element(v: &Value, n: usize, what: &str) -> Result<GroupElement> {
    let g = GroupElement::new(parse_vec(v, what)?);
    if g.dim() != n {
        return Err(Error::mismatch(format!("{what} has {} exponents, n = {n}", g.dim())));
    }
    Ok(g)
}

fn chain_terms(input: &Value) -> Result<&Vec<Value>> {
    field(input, "terms")?
        .as_array()
        .ok_or_else(|| Error::MalformedInput("terms must be an array".into()))
}

pub fn parse_chain1(input: &Value) -> Result<Chain1> {
    let (phi, n) = parse_phi(input)?;
    let mut ch = Chain1::new(phi)?;
    for t in chain_terms(input)? {
        ch.add_term(
            parse_int(field(t, "coeff")?, "coeff")?,
            parse_element(field(t, "B")?, n, "B")?,
            parse_element(field(t, "D")?, n, "D")?,
        )?;
    }
    Ok(ch)
}

pub fn parse_chain2(input: &Value) -> Result<Chain2> {
    let (phi, n) = parse_phi(input)?;
    let mut ch = Chain2::new(phi)?;
    for t in chain_terms(input)? {
        ch.add_term(
            parse_int(field(t, "coeff")?, "coeff")?,
            parse_element(field(t, "B")?, n, "B")?,
            parse_element(field(t, "D")?, n, "D")?,
            parse_element(field(t, "E")?, n, "E")?,
        )?;
    }
    Ok(ch)
}

fn parse_ring(v: &Value, n: usize, what: &str) -> Result<RingElement> {
    let mut r = RingElement::zero();
    for m in v.as_array().ok_or_else(|| malformed(what, v))? {
        r.add_term(parse_int(field(m, "coeff")?, "coeff")?, parse_element(field(m, "g")?, n, "g")?);
    }
    Ok(r)
}

fn parse_ring_matrix(v: &Value, n: usize, what: &str) -> Result<RingMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| malformed(what, v))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| malformed(what, row))?
                .iter()
                .map(|e| parse_ring(e, n, what))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RingMatrix::from_rows(rows)
}
