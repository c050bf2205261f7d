//! Command-line front end. `run` never touches the process streams, so the
//! binary and the tests share it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::autact::{pullback, Automorphism};
use crate::bialg::{
    char_derivation, coboundary_preimage, cocycle_residual, dual_jacobi_residual,
    kernel_subalgebra, quotient_bialgebra, schouten_self_bracket, LieBialgebra,
};
use crate::classify::{classify, normal_form_catalog, orbit_check, recognize};
use crate::cohom::h1_report;
use crate::error::Error;
use crate::exactnum::{is_zero_vec, Mat, Rat};
use crate::format::*;
use crate::liealg::{
    catalog_build, center, check_jacobi, derived_subalgebra, invariant_wedge_subspace,
    CatalogLabel, Family, LieAlgebra,
};

/// Seed used by `orbit-check` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug)]
#[command(
    name = "liebialg",
    version,
    about = "Exact computations with real Lie bialgebras of dimension 2 and 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi, cocycle and co-Jacobi identities of a bialgebra document.
    Validate {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic derivation, kernel, structure subspaces and [r,r].
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dimensions of invariants, coboundaries, cocycles and H^1(g, L^2 g).
    Cohomology {
        #[arg(long, required_unless_present = "input")]
        label: Option<String>,
        /// Algebra or bialgebra document.
        #[arg(long, conflicts_with = "label")]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Isomorphism class of a bialgebra document.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Pull a cobracket back along an automorphism.
    Act {
        #[arg(long, visible_alias = "input")]
        bialgebra: PathBuf,
        /// Square matrix of rational strings, columns are images of basis vectors.
        #[arg(long)]
        phi: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Classify random automorphism images of every published representative.
    OrbitCheck {
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// List catalog algebras, print one, or list its representative cobrackets.
    Catalog {
        #[arg(long)]
        label: Option<String>,
        #[arg(long, requires = "label")]
        normal_forms: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, code: 0 })
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: msg,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: msg,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(Output { mut text, code }) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Semantic(m)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: crate::error::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse { .. } => Failure::Usage(format!("{}: {e}", path.display())),
        other => Failure::from(other),
    })
}

fn parse_label(s: &str) -> Result<CatalogLabel, Failure> {
    CatalogLabel::parse(s).map_err(|e| Failure::Usage(format!("--label: {e}")))
}

fn render(format: Format, v: Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_pretty(&v),
        Format::Text => text(),
    }
}

fn row(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn matrix_text(m: &Mat, indent: &str) -> String {
    m.to_rows()
        .iter()
        .map(|r| {
            let parts: Vec<String> = r.iter().map(|x| format!("{x:>6}")).collect();
            format!("{indent}[{} ]", parts.join(""))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn span_text(vs: &[Vec<Rat>]) -> String {
    if vs.is_empty() {
        "0".into()
    } else {
        format!(
            "span{{{}}}",
            vs.iter().map(|v| row(v)).collect::<Vec<_>>().join(", ")
        )
    }
}

fn load_bialgebra(path: &Path) -> Result<(LieAlgebra, crate::bialg::Cobracket), Failure> {
    let v = read_json(path)?;
    in_file(path, bialgebra_from(&v))
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Validate { input, common } => validate(&input, common.format),
        Command::Invariants { input, common } => invariants(&input, common.format),
        Command::Cohomology {
            label,
            input,
            common,
        } => {
            let g = match (label, input) {
                (Some(l), _) => catalog_build(&parse_label(&l)?)?,
                (None, Some(p)) => {
                    let v = read_json(&p)?;
                    match v.get("algebra") {
                        Some(a) => in_file(&p, algebra_from(a, "algebra"))?,
                        None => in_file(&p, algebra_from(&v, "document"))?,
                    }
                }
                (None, None) => {
                    return Err(Failure::Usage("--label or --input is required".into()))
                }
            };
            let r = h1_report(&g);
            ok(render(common.format, cohomology_value(&r), || {
                format!(
                    "invariants   {}\ncoboundaries {}\ncocycles     {}\nH1           {}",
                    r.dim_invariants, r.dim_coboundaries, r.dim_cocycles, r.dim_h1
                )
            }))
        }
        Command::Classify { input, common } => {
            let (g, d) = load_bialgebra(&input)?;
            let b = LieBialgebra::new(g, d)?;
            let c = classify(&b)?;
            ok(render(common.format, classification_value(&c), || {
                let mut s = c.tag.to_string();
                match &c.witness {
                    Some(w) => write!(s, "\nwitness:\n{}", matrix_text(w.mat(), "  ")).unwrap(),
                    None => s.push_str("\nwitness: unavailable"),
                }
                s
            }))
        }
        Command::Act {
            bialgebra,
            phi,
            common,
        } => {
            let (g, d) = load_bialgebra(&bialgebra)?;
            let b = LieBialgebra::new(g, d)?;
            let pv = read_json(&phi)?;
            let m = in_file(&phi, mat_from(&pv, "phi"))?;
            let a = Automorphism::new(b.algebra(), m)?;
            let image = pullback(&a, b.delta())?;
            let doc = bialgebra_value(b.algebra(), &image);
            let text = matrix_text(image.mat(), "");
            ok(render(common.format, doc, || format!("cobracket:\n{text}")))
        }
        Command::OrbitCheck {
            label,
            samples,
            seed,
            common,
        } => {
            let l = parse_label(&label)?;
            let r = orbit_check(&l, samples, seed)?;
            let code = if r.passed() { 0 } else { 1 };
            let text = render(common.format, orbit_value(&r), || {
                let mut s = format!(
                    "{}: {} representatives x {} samples, seed {seed}\nfailures {}\nwitness checks {} (mismatches {})\ntag collisions {}\n{}",
                    r.label,
                    r.representatives,
                    r.samples,
                    r.failures,
                    r.witness_checks,
                    r.witness_mismatches,
                    r.tag_collisions,
                    if r.passed() { "PASS" } else { "FAIL" }
                );
                for d in &r.details {
                    write!(s, "\n  {d}").unwrap();
                }
                s
            });
            Ok(Output { text, code })
        }
        Command::Catalog {
            label,
            normal_forms,
            common,
        } => catalog(label, normal_forms, common.format),
    }
}

fn validate(input: &Path, format: Format) -> Result<Output, Failure> {
    let (g, d) = load_bialgebra(input)?;
    let jacobi: Vec<Rat> = check_jacobi(&g).into_iter().flatten().collect();
    let cocycle: Vec<Rat> = cocycle_residual(&g, &d)?.into_iter().flatten().collect();
    let cojacobi = dual_jacobi_residual(&g, &d)?;
    let nonzero = |v: &[Rat]| v.iter().filter(|x| !x.is_zero()).count();
    let checks = [
        ("jacobi", &jacobi),
        ("cocycle", &cocycle),
        ("cojacobi", &cojacobi),
    ];
    let valid = checks.iter().all(|(_, v)| is_zero_vec(v));
    let mut doc = serde_json::Map::new();
    for (name, v) in &checks {
        doc.insert(
            name.to_string(),
            json!({"nonzero": nonzero(v), "residual": v.iter().map(rat_value).collect::<Vec<_>>()}),
        );
    }
    doc.insert("valid".into(), Value::Bool(valid));
    let text = render(format, Value::Object(doc), || {
        let mut s = String::new();
        for (name, v) in &checks {
            let n = nonzero(v);
            if n == 0 {
                writeln!(s, "{name:<9} ok").unwrap();
            } else {
                writeln!(s, "{name:<9} {n} nonzero residual entries").unwrap();
            }
        }
        s.push_str(if valid { "valid" } else { "invalid" });
        s
    });
    Ok(Output {
        text,
        code: if valid { 0 } else { 1 },
    })
}

fn invariants(input: &Path, format: Format) -> Result<Output, Failure> {
    let (g, d) = load_bialgebra(input)?;
    let b = LieBialgebra::new(g, d)?;
    let g = b.algebra();
    let rep = char_derivation(&b);
    let kernel = kernel_subalgebra(&b)?;
    let z = center(g);
    let derived = derived_subalgebra(g);
    let inv = if g.dim() == 3 {
        invariant_wedge_subspace(g)?
    } else {
        Vec::new()
    };
    let label = recognize(g).ok();
    let quotient = quotient_bialgebra(&b);
    let r = coboundary_preimage(g, b.delta()).ok();
    let rr = match &r {
        Some(r) => Some(schouten_self_bracket(g, r)?),
        None => None,
    };
    let mut doc = serde_json::Map::new();
    doc.insert("derivation".into(), derivation_value(&rep));
    doc.insert("kernel".into(), vectors_value(&kernel));
    doc.insert("center".into(), vectors_value(&z));
    doc.insert("derived".into(), vectors_value(&derived));
    doc.insert("invariant_wedges".into(), vectors_value(&inv));
    doc.insert(
        "label".into(),
        label.as_ref().map(label_value).unwrap_or(Value::Null),
    );
    doc.insert(
        "quotient_cobracket".into(),
        cobracket_value(quotient.delta()),
    );
    doc.insert(
        "r".into(),
        r.as_ref()
            .map(|r| json!(r.coords.iter().map(rat_value).collect::<Vec<_>>()))
            .unwrap_or(Value::Null),
    );
    doc.insert(
        "schouten".into(),
        rr.as_ref().map(rat_value).unwrap_or(Value::Null),
    );
    let text = render(format, Value::Object(doc), || {
        let mut s = String::new();
        if let Some(l) = &label {
            writeln!(s, "algebra   {l}").unwrap();
        }
        writeln!(s, "D =\n{}", matrix_text(&rep.d, "  ")).unwrap();
        writeln!(s, "tr D      {}", rep.trace).unwrap();
        writeln!(s, "det D     {}", rep.det).unwrap();
        writeln!(s, "charpoly  {}", row(&rep.charpoly)).unwrap();
        writeln!(s, "ker delta {}", span_text(&kernel)).unwrap();
        writeln!(s, "center    {}", span_text(&z)).unwrap();
        writeln!(s, "[g,g]     {}", span_text(&derived)).unwrap();
        if g.dim() == 3 {
            writeln!(s, "(L2 g)^g  {}", span_text(&inv)).unwrap();
        }
        if quotient.algebra().dim() > 0 {
            writeln!(s, "quotient  {}", row(&quotient.delta().to_flat())).unwrap();
        }
        if let (Some(r), Some(rr)) = (&r, &rr) {
            writeln!(s, "r         {}", row(&r.coords)).unwrap();
            write!(s, "[r,r]     {rr}").unwrap();
        }
        s
    });
    ok(text)
}

fn catalog(label: Option<String>, normal_forms: bool, format: Format) -> Result<Output, Failure> {
    let Some(label) = label else {
        let list: Vec<Value> = Family::ALL
            .iter()
            .map(|f| json!({"family": f.name(), "dim": f.dim(), "takes_lambda": f.takes_lambda()}))
            .collect();
        return ok(render(format, Value::Array(list), || {
            Family::ALL
                .iter()
                .map(|f| {
                    let lam = match f {
                        Family::R3Lambda => ",lambda=p/q  (-1 <= lambda <= 1)",
                        Family::R3PrimeLambda => ",lambda=p/q  (lambda >= 0)",
                        _ => "",
                    };
                    format!("{}{lam}  dim {}", f.name(), f.dim())
                })
                .collect::<Vec<_>>()
                .join("\n")
        }));
    };
    let l = parse_label(&label)?;
    let g = catalog_build(&l)?;
    if !normal_forms {
        return ok(render(format, algebra_value(&g), || {
            let names = g.basis_names();
            let mut s = format!("{l}  basis ({})", names.join(", "));
            for i in 0..g.dim() {
                for j in i + 1..g.dim() {
                    let c = g.bracket_basis(i, j);
                    if !is_zero_vec(&c) {
                        write!(s, "\n  [{}, {}] = {}", names[i], names[j], row(&c)).unwrap();
                    }
                }
            }
            s
        }));
    }
    let forms = normal_form_catalog(&l)?;
    let list: Vec<Value> = forms.iter().map(normal_form_value).collect();
    ok(render(format, Value::Array(list), || {
        forms
            .iter()
            .map(|f| {
                let ps: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!(
                    "{} [{}] -> {}\n{}",
                    f.name,
                    ps.join(", "),
                    f.tag,
                    matrix_text(f.cobracket.mat(), "  ")
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }))
}
