use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::lcm;
use serde_json::{json, Value};

use quartic::atlas::catalog::native_conductor;
use quartic::atlas::{form_catalog, matrix_catalog, run_all, theorem_check, CatalogId, VerificationReport};
use quartic::eigenmod::{
    canonical_residues, classify_cyclic, eigenspace_basis, index_table, monomial_eigenspace, projective_order,
};
use quartic::field::context;
use quartic::projgroup::closure;
use quartic::singular::{singular_report, witness_search, FamilyParams};
use quartic::text::{matrix_json, parse_form, parse_matrix, parse_scalar};
use quartic::{Cyc, CycContext, Error, Form, SquareMatrix};

#[derive(Parser)]
#[command(
    name = "quartic",
    version,
    about = "Exact computations with quartic forms over cyclotomic fields"
)]
struct Cli {
    /// Conductor N of the working field Q(zeta_N).
    #[arg(long, global = true, default_value_t = 1)]
    conductor: u32,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Basis of a simultaneous eigenspace in the forms of degree d.
    Eigenspace(EigenspaceArgs),
    /// Index of every monomial under a diagonal matrix of order q.
    IndexTable(DiagonalArgs),
    /// Normal form of the cyclic group generated by a diagonal matrix.
    Classify(ClassifyArgs),
    /// Closed-form singularity criterion for the named families.
    Singular(SingularArgs),
    /// The transformed form f(A^-1 x), or f(A x) with --substitute.
    Act(ActArgs),
    /// Hessian determinant of a form.
    Hessian(HessianArgs),
    /// Projective closure of a set of matrices.
    Closure(ClosureArgs),
    /// Run registered checks.
    Verify(VerifyArgs),
    /// Parse and print in canonical form.
    Parse(ParseArgs),
}

#[derive(Args)]
struct FormInput {
    /// Form text, e.g. "x^3*y + y^3*z + z^3*x".
    #[arg(long, conflicts_with = "form_id")]
    form: Option<String>,
    /// Catalog id of a form.
    #[arg(long)]
    form_id: Option<String>,
    /// Comma-separated catalog parameters.
    #[arg(long)]
    form_params: Option<String>,
    /// Number of variables for --form.
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(Args)]
struct MatrixInput {
    /// Matrix as JSON; may be repeated.
    #[arg(long = "matrix")]
    matrices: Vec<String>,
    /// Catalog id of a matrix, optionally `name:p1,p2`; may be repeated.
    #[arg(long = "matrix-id")]
    matrix_ids: Vec<String>,
}

#[derive(Args)]
struct EigenspaceArgs {
    #[command(flatten)]
    mats: MatrixInput,
    /// Character value for each generator, in order (--matrix first, then
    /// --matrix-id); defaults to 1.
    #[arg(long)]
    rho: Vec<String>,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    d: u32,
    /// Diagonal mode: order of the diagonal generator.
    #[arg(long, requires = "exps")]
    q: Option<u64>,
    /// Diagonal mode: exponents of the generator.
    #[arg(long, value_delimiter = ',')]
    exps: Option<Vec<u64>>,
    /// Diagonal mode: index j of the eigenvalue zeta_q^j.
    #[arg(long, default_value_t = 0)]
    j: u64,
}

#[derive(Args)]
struct DiagonalArgs {
    #[arg(long)]
    q: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    exps: Vec<u64>,
    #[arg(long, default_value_t = 4)]
    d: u32,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    q: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    exps: Vec<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "F5")]
    F5,
    #[value(name = "F7")]
    F7,
    #[value(name = "M")]
    M,
}

#[derive(Args)]
struct SingularArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated parameters (mu,nu,lam for F5; lam otherwise).
    #[arg(long)]
    params: String,
    /// Also search for an explicit singular point.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct ActArgs {
    #[command(flatten)]
    form: FormInput,
    #[command(flatten)]
    mats: MatrixInput,
    /// Compute f(Ax) instead of f(A^-1 x).
    #[arg(long)]
    substitute: bool,
}

#[derive(Args)]
struct HessianArgs {
    #[command(flatten)]
    form: FormInput,
    /// Report the constant c with Hess(f) = c * g for this form g.
    #[arg(long)]
    against: Option<String>,
}

#[derive(Args)]
struct ClosureArgs {
    #[command(flatten)]
    mats: MatrixInput,
    /// Give up once the group exceeds this many elements.
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registered id.
    #[arg(required_unless_present_any = ["all", "list"], conflicts_with_all = ["all", "list"])]
    id: Option<String>,
    /// Run every registered id.
    #[arg(long)]
    all: bool,
    /// List the registered ids.
    #[arg(long)]
    list: bool,
    /// Report ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Scalar,
    Form,
    Matrix,
}

#[derive(Args)]
struct ParseArgs {
    #[arg(long, value_enum, default_value_t = Kind::Scalar)]
    kind: Kind,
    #[arg(long, default_value_t = 4)]
    n: usize,
    text: String,
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = std::result::Result<Value, Failure>;

/// Splits on commas outside parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

fn scalars(text: &str, conductor: u32) -> Result<Vec<Cyc>, Error> {
    split_top(text)
        .into_iter()
        .map(|t| parse_scalar(t, conductor))
        .collect()
}

fn catalog_conductor(name: &str) -> Result<u32, Error> {
    native_conductor(name).ok_or_else(|| Error::UnknownId(name.to_string()))
}

/// Working conductor: the requested one enlarged to hold every catalog
/// object mentioned on the command line.
fn working_conductor(base: u32, form: Option<&FormInput>, mats: Option<&MatrixInput>) -> Result<u32, Error> {
    let mut n = base;
    if let Some(id) = form.and_then(|f| f.form_id.as_deref()) {
        n = lcm(n, catalog_conductor(id)?);
    }
    if let Some(m) = mats {
        for item in &m.matrix_ids {
            let name = item.split_once(':').map_or(item.as_str(), |(a, _)| a);
            n = lcm(n, catalog_conductor(name)?);
        }
    }
    Ok(n)
}

fn load_form(f: &FormInput, cond: u32) -> Result<Form<Cyc>, Error> {
    match (&f.form, &f.form_id) {
        (Some(text), _) => parse_form(text, f.n, cond),
        (None, Some(id)) => {
            let params = match &f.form_params {
                Some(p) => scalars(p, cond)?,
                None => Vec::new(),
            };
            form_catalog(&CatalogId::with_params(id, params), cond)
        }
        (None, None) => Err(Error::InvalidInput("give --form or --form-id".into())),
    }
}

fn load_matrices(m: &MatrixInput, cond: u32) -> Result<Vec<SquareMatrix<Cyc>>, Error> {
    let mut out = Vec::new();
    for text in &m.matrices {
        out.push(parse_matrix(text, cond)?);
    }
    for item in &m.matrix_ids {
        let (name, params) = match item.split_once(':') {
            Some((name, p)) => (name, scalars(p, cond)?),
            None => (item.as_str(), Vec::new()),
        };
        out.push(matrix_catalog(&CatalogId::with_params(name, params), cond)?);
    }
    Ok(out)
}

/// Moves everything into one field.
fn unify(mats: Vec<SquareMatrix<Cyc>>, cond: u32) -> Result<(CycContext, Vec<SquareMatrix<Cyc>>), Error> {
    let n = mats.iter().fold(cond, |a, m| lcm(a, m.context().conductor()));
    let ctx = context(n)?;
    let mats = mats.iter().map(|m| m.embed(&ctx)).collect::<Result<_, _>>()?;
    Ok((ctx, mats))
}

fn monomial_indices(t: &quartic::eigenmod::IndexTable) -> Value {
    Value::Array(
        t.entries()
            .iter()
            .map(|(m, j)| json!({ "monomial": m.to_string(), "index": j }))
            .collect(),
    )
}

/// Columns `x_i^{d-1} x_j`, ordered by `i` then `j`.
fn checking_row(t: &quartic::eigenmod::IndexTable) -> Value {
    let (n, d) = (t.nvars(), t.degree() as u16);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u16; n];
            e[i] += d - 1;
            e[j] += 1;
            let m = quartic::Monomial::new(&e);
            out.push(json!({ "monomial": m.to_string(), "index": t.index(&m) }));
        }
    }
    Value::Array(out)
}

fn run(cli: &Cli) -> Out {
    let cond = cli.conductor;
    match &cli.cmd {
        Cmd::Eigenspace(a) => {
            if let (Some(q), Some(exps)) = (a.q, &a.exps) {
                let t = index_table(exps, q, a.d)?;
                let basis = monomial_eigenspace(&t, a.j);
                return Ok(json!({
                    "dimension": basis.len(),
                    "basis": basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                }));
            }
            let c = working_conductor(cond, None, Some(&a.mats))?;
            let (ctx, gens) = unify(load_matrices(&a.mats, c)?, c)?;
            if gens.is_empty() {
                return Err(Failure::Usage("give --matrix, --matrix-id, or --q with --exps".into()));
            }
            let rho = if a.rho.is_empty() {
                vec![Cyc::int(&ctx, 1); gens.len()]
            } else {
                a.rho
                    .iter()
                    .map(|t| parse_scalar(t, ctx.conductor()))
                    .collect::<Result<_, _>>()?
            };
            let basis = eigenspace_basis(&gens, &rho, a.n, a.d, &ctx)?;
            Ok(json!({
                "conductor": ctx.conductor(),
                "dimension": basis.len(),
                "basis": basis.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            }))
        }
        Cmd::IndexTable(a) => {
            let t = index_table(&a.exps, a.q, a.d)?;
            Ok(json!({
                "q": a.q,
                "d": a.d,
                "exps": a.exps,
                "checking": checking_row(&t),
                "entries": monomial_indices(&t),
            }))
        }
        Cmd::Classify(a) => {
            let class = classify_cyclic(a.q, &a.exps)?;
            let exps: [u64; 4] = a
                .exps
                .as_slice()
                .try_into()
                .map_err(|_| Failure::Usage("classify needs four exponents".into()))?;
            Ok(json!({
                "class": class.to_string(),
                "order": projective_order(a.q, &a.exps),
                "canonical": canonical_residues(a.q, &exps),
            }))
        }
        Cmd::Singular(a) => {
            let (name, needed) = match a.family {
                Family::F5 => ("F5", 3),
                Family::F7 => ("F7", 1),
                Family::M => ("M", 1),
            };
            let p = scalars(&a.params, cond)?;
            if p.len() != needed {
                return Err(Failure::Usage(format!("{name} takes {needed} parameter(s)")));
            }
            let fp = FamilyParams::from_parts(name, p)?;
            let mut v = serde_json::to_value(singular_report(&fp)).expect("serializable");
            if a.witness {
                v["witness"] = serde_json::to_value(witness_search(&fp)?).expect("serializable");
            }
            Ok(v)
        }
        Cmd::Act(a) => {
            let c = working_conductor(cond, Some(&a.form), Some(&a.mats))?;
            let f = load_form(&a.form, c)?;
            let (ctx, mats) = unify(load_matrices(&a.mats, c)?, c)?;
            let [m] = mats.as_slice() else {
                return Err(Failure::Usage("act takes exactly one matrix".into()));
            };
            let f = f.embed(&ctx)?;
            let g = if a.substitute { f.substitute(m)? } else { f.act(m)? };
            Ok(json!({ "conductor": ctx.conductor(), "form": g.to_string() }))
        }
        Cmd::Hessian(a) => {
            let c = working_conductor(cond, Some(&a.form), None)?;
            let f = load_form(&a.form, c)?;
            let h = f.hessian();
            let mut v = json!({ "conductor": c, "form": h.to_string() });
            if let Some(text) = &a.against {
                let g = parse_form(text, f.nvars(), c)?;
                v["constant"] = match h.proportionality(&g)? {
                    Some(k) => Value::String(k.to_string()),
                    None => Value::Null,
                };
            }
            Ok(v)
        }
        Cmd::Closure(a) => {
            let c = working_conductor(cond, None, Some(&a.mats))?;
            let (ctx, gens) = unify(load_matrices(&a.mats, c)?, c)?;
            let Some(n) = gens.first().map(|g| g.dim()) else {
                return Err(Failure::Usage("give at least one matrix".into()));
            };
            let g = closure(&gens, n, &ctx, a.cap)?;
            let stats: BTreeMap<usize, usize> = g.order_statistics();
            Ok(json!({ "order": g.order(), "order_statistics": stats }))
        }
        Cmd::Verify(a) => {
            if a.list {
                return Ok(json!(quartic::atlas::theorem_ids()));
            }
            let clean = |mut r: VerificationReport| {
                if a.no_timing {
                    r.ms = 0;
                }
                r
            };
            if a.all {
                let reports: Vec<_> = run_all().into_iter().map(clean).collect();
                let ok = reports.iter().all(|r| r.status.passed());
                let v = json!({
                    "status": if ok { "verified" } else { "failed" },
                    "reports": reports,
                });
                return if ok { Ok(v) } else { Err(Failure::Verification(v)) };
            }
            let id = a.id.as_deref().expect("clap requires an id");
            let r = clean(theorem_check(id)?);
            let ok = r.status.passed();
            let v = serde_json::to_value(&r).expect("serializable");
            if ok {
                Ok(v)
            } else {
                Err(Failure::Verification(v))
            }
        }
        Cmd::Parse(a) => match a.kind {
            Kind::Scalar => Ok(json!({ "scalar": parse_scalar(&a.text, cond)?.to_string() })),
            Kind::Form => {
                let f = parse_form(&a.text, a.n, cond)?;
                Ok(json!({ "degree": f.degree(), "form": f.to_string() }))
            }
            Kind::Matrix => Ok(matrix_json(&parse_matrix(&a.text, cond)?)),
        },
    }
}

fn plain(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match x {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        plain(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(x))),
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match x {
                    Value::Object(o) if o.values().all(|y| !y.is_object() && !y.is_array()) => {
                        let fields: Vec<String> = o.iter().map(|(k, y)| format!("{k}={}", scalar_text(y))).collect();
                        out.push_str(&format!("{pad}{}\n", fields.join(" ")));
                    }
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        plain(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{}\n", scalar_text(x))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(v))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(v: &Value, as_plain: bool) -> String {
    if as_plain {
        let mut s = String::new();
        plain(v, 0, &mut s);
        s
    } else {
        format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            print!("{}", render(&v, cli.plain));
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            print!("{}", render(&v, cli.plain));
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
