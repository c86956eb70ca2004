//! Command-line frontend. Every command prints one JSON document.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thetapos_core::classify::{admits_theta_positive, enumerate_positive_thetas, Reason, Verdict};
use thetapos_core::flags::{
    circle_point, circle_tuple_positive, is_transverse, positive_tuple, relative_position, standard_flags, CircleParam,
    Flag, Signature,
};
use thetapos_core::linalg::{fmt_rat, int, Matrix, Rat};
use thetapos_core::rootsys::{DynkinDiagram, Family};
use thetapos_core::semigroup::{
    braid_change, decode, f_gamma, is_positive, stratify, ur_product, Order, Stratification, UCoord, UrElem,
};
use thetapos_core::somodel::{
    model, principal_coefficients, principal_sl2, serre_check, theta_base, weight_spaces, SOModel, Sl2Triple,
};
use thetapos_core::weyl::{
    all_reduced_theta_words, all_reduced_words, coxeter_type_of_wtheta, length, longest_element, longest_word,
    reduced_word, theta_length, theta_structure, w_max_theta, ThetaStructure, WeylElement, WeylGroup, WeylWord,
    DEFAULT_WORD_CAP,
};

use crate::catalog::{self, parse_theta, resolve};
use crate::error::CliError;
use crate::fixtures;
use crate::json::{matrix_from_json, matrix_json, rat, strs, CoordsJson, FlagJson, UrJson};
use crate::sample;

/// Exact Θ-positivity toolkit.
#[derive(Debug, Parser)]
#[command(name = "thetapos", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether (diagram, Θ) admits a Θ-positive structure; without --theta, list all admissible Θ.
    Classify(ClassifyArgs),
    /// Weyl group computations.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// The SO(3,q) Lie algebra model.
    #[command(subcommand)]
    Som(SomCmd),
    /// The positive semigroup of SO(3,q).
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Flags of SO(3,q) and positivity.
    #[command(subcommand)]
    Flags(FlagsCmd),
    /// Tables and identity checks.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Catalog name or path to a diagram JSON file.
    #[arg(long)]
    pub diagram: String,
    /// Comma-separated node labels or 1-based indices.
    #[arg(long)]
    pub theta: Option<String>,
}

#[derive(Debug, Args)]
pub struct DiagramTheta {
    /// Catalog name or path to a diagram JSON file.
    #[arg(long)]
    pub diagram: String,
    #[arg(long)]
    pub theta: String,
}

#[derive(Debug, Subcommand)]
pub enum WeylCmd {
    /// Longest element of W or of a parabolic subgroup.
    Longest {
        #[arg(long)]
        diagram: String,
        /// Nodes generating the parabolic subgroup (default: all).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Generators σ_α of W(Θ).
    Sigma(DiagramTheta),
    /// Θ-length of the element given by a word.
    ThetaLength {
        #[command(flatten)]
        dt: DiagramTheta,
        /// Comma-separated 1-based letters.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// All reduced words of an element.
    Reduced {
        #[arg(long)]
        diagram: String,
        /// With Θ, words over the generators of W(Θ).
        #[arg(long)]
        theta: Option<String>,
        /// Word of the element (1-based letters).
        #[arg(long, conflicts_with = "element")]
        word: Option<String>,
        /// A distinguished element.
        #[arg(long, value_enum)]
        element: Option<Element>,
        /// Largest element length for which words are listed.
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Coxeter type of W(Θ).
    Type(DiagramTheta),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Element {
    WDelta,
    WComplement,
    WMaxTheta,
}

#[derive(Debug, Args)]
pub struct QArg {
    /// The model is SO(3,q), q >= 4.
    #[arg(long)]
    pub q: usize,
}

#[derive(Debug, Subcommand)]
pub enum SomCmd {
    /// The Θ-base (E, F, D) for Θ = {α₁, α₂}.
    ThetaBase(QArg),
    /// Serre relations of the Θ-base.
    Serre(QArg),
    /// The Θ-principal sl₂.
    Sl2(QArg),
    /// Weight-space dimensions of so(3,q).
    Weights(QArg),
}

#[derive(Debug, Args)]
pub struct Sampling {
    /// Seed of the sampler; required for sampled runs.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of samples.
    #[arg(long, default_value_t = 100, requires = "seed")]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct Subject {
    /// Coordinates as inline JSON, a file path, or `-` for stdin.
    #[arg(long, conflicts_with = "matrix")]
    pub coords: Option<String>,
    /// Matrix as rows of rational strings (inline JSON, path or `-`).
    #[arg(long)]
    pub matrix: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum SemigroupCmd {
    /// The matrix F(s₁, v₁, s₂, v₂).
    Eval {
        #[command(flatten)]
        q: QArg,
        #[arg(long)]
        coords: String,
    },
    /// Coordinates of an element of U_Θ in a given order.
    Decode {
        #[command(flatten)]
        q: QArg,
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value = "1212")]
        order: String,
    },
    /// Membership in the positive semigroup.
    Member {
        #[command(flatten)]
        q: QArg,
        #[command(flatten)]
        subject: Subject,
    },
    /// Change of coordinates 1212 → 2121, checked against the matrix product.
    Braid {
        #[command(flatten)]
        q: QArg,
        #[arg(long, conflicts_with = "seed")]
        coords: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Stratum of an element of the nonnegative semigroup.
    Stratify {
        #[command(flatten)]
        q: QArg,
        #[command(flatten)]
        subject: Subject,
    },
    /// Products in the semigroup U_r of 3×3 unipotent matrices.
    Ur {
        /// Parameter r >= 1, a rational.
        #[arg(long)]
        r: String,
        /// First factor `{"a","b","c"}`.
        #[arg(long, requires = "y", conflicts_with = "seed")]
        x: Option<String>,
        /// Second factor.
        #[arg(long)]
        y: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlagsCmd {
    /// Relative position of two flags.
    Position {
        #[command(flatten)]
        q: QArg,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Transversality of two flags.
    Transverse {
        #[command(flatten)]
        q: QArg,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Positivity of (E⁺, x, E⁻), or of a given triple.
    Triple {
        #[command(flatten)]
        q: QArg,
        /// Middle flag of the standard triple.
        #[arg(long, conflicts_with = "flags")]
        x: Option<String>,
        /// Array of three flags.
        #[arg(long)]
        flags: Option<String>,
    },
    /// Positivity of a tuple of flags.
    Tuple {
        #[command(flatten)]
        q: QArg,
        /// Array of flags.
        #[arg(long)]
        flags: String,
    },
    /// Points of the positive circle and positivity of the tuple they form.
    Circle {
        #[command(flatten)]
        q: QArg,
        /// Strictly increasing comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "seed")]
        t: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Admissible Θ for every catalog diagram, grouped by family.
    ClassificationTable,
    /// Re-derives the B_n and F₄ Weyl group identities.
    AppendixFixtures,
}

/// Exit status of a successful run: `semigroup member` reports a negative verdict as 1.
pub fn verdict_code(cli: &Cli, out: &Value) -> u8 {
    match &cli.command {
        Command::Semigroup(SemigroupCmd::Member { .. }) if out["positive"] == Value::Bool(false) => 1,
        _ => 0,
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Weyl(c) => weyl(c),
        Command::Som(c) => som(c),
        Command::Semigroup(c) => semigroup(c),
        Command::Flags(c) => flags(c),
        Command::Report(ReportCmd::ClassificationTable) => Ok(classification_table()?),
        Command::Report(ReportCmd::AppendixFixtures) => Ok(fixtures::report()),
    }
}

/// Renders a result in the requested format.
pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable"),
        Format::Table => table(v),
    }
}

fn table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in map {
                match x {
                    Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                        out.push_str(&format!("{k}:\n"));
                        out.push_str(&rows_table(rows));
                    }
                    _ => out.push_str(&format!("{k:width$}  {}\n", cell(x))),
                }
            }
        }
        Value::Array(rows) if rows.iter().all(Value::is_object) => out.push_str(&rows_table(rows)),
        other => out.push_str(&format!("{}\n", cell(other))),
    }
    out
}

fn rows_table(rows: &[Value]) -> String {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("object rows").keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c).map(cell).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> =
        (0..cols.len()).map(|i| cells.iter().map(|r| r[i].len()).chain([cols[i].len()]).max().unwrap_or(0)).collect();
    let line = |xs: &[String]| {
        let parts: Vec<String> = xs.iter().zip(&widths).map(|(x, w)| format!("{x:w$}")).collect();
        format!("  {}\n", parts.join("  ").trim_end())
    };
    let mut out = line(&cols);
    for r in &cells {
        out.push_str(&line(r));
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::from("-"),
        other => other.to_string(),
    }
}

/// Reads a payload: inline JSON, `-` for stdin, or a file path.
pub fn payload(arg: &str) -> Result<Value, CliError> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') || t.starts_with('"') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn decode_payload<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    Ok(serde_json::from_value(payload(arg)?)?)
}

fn parse_word(s: &str) -> Result<WeylWord, CliError> {
    let letters = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| CliError::Usage(format!("bad letter {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeylWord(letters))
}

fn check_word(d: &DynkinDiagram, w: &WeylWord) -> Result<(), CliError> {
    match w.0.iter().find(|&&l| l == 0 || l > d.rank()) {
        Some(l) => Err(CliError::Usage(format!("letter {l} out of range 1..={}", d.rank()))),
        None => Ok(()),
    }
}

fn labels(d: &DynkinDiagram, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| d.nodes[i].label.clone()).collect()
}

fn reason_str(d: &DynkinDiagram, r: Reason) -> String {
    match r {
        Reason::SplitTotalPositivity => String::from("split-total-positivity"),
        Reason::ThetaPositive => String::from("theta-positive"),
        Reason::NotProximal(i) => format!("not-proximal({})", d.nodes[i].label),
        Reason::NotEven(i) => format!("not-even({})", d.nodes[i].label),
        Reason::NonReducedSystem => String::from("non-reduced-system"),
    }
}

fn verdict_json(d: &DynkinDiagram, v: &Verdict) -> Value {
    json!({
        "admits": v.admits,
        "specialRoot": v.special_root.map(|i| d.nodes[i].label.clone()),
        "reason": reason_str(d, v.reason),
    })
}

fn classify(a: &ClassifyArgs) -> Result<Value, CliError> {
    let (name, d) = resolve(&a.diagram)?;
    match &a.theta {
        Some(t) => {
            let theta = parse_theta(&d, t)?;
            let v = admits_theta_positive(&d, &theta)?;
            let mut out = verdict_json(&d, &v);
            let obj = out.as_object_mut().expect("object");
            obj.insert("diagram".into(), json!(name));
            obj.insert("theta".into(), json!(labels(&d, &theta)));
            Ok(out)
        }
        None => {
            let all: Vec<Vec<String>> = enumerate_positive_thetas(&d).iter().map(|t| labels(&d, t)).collect();
            Ok(json!({ "diagram": name, "admissible": all }))
        }
    }
}

fn structure(dt: &DiagramTheta) -> Result<(DynkinDiagram, ThetaStructure), CliError> {
    let (_, d) = resolve(&dt.diagram)?;
    let theta = parse_theta(&d, &dt.theta)?;
    let ts = theta_structure(&d, &theta)?;
    Ok((d, ts))
}

fn weyl(c: &WeylCmd) -> Result<Value, CliError> {
    match c {
        WeylCmd::Longest { diagram, subset } => {
            let (_, d) = resolve(diagram)?;
            let s = match subset {
                Some(s) => parse_theta(&d, s)?,
                None => (0..d.rank()).collect(),
            };
            let g = WeylGroup::of_diagram(&d)?;
            let w = longest_word(&g, &s);
            Ok(json!({
                "subset": labels(&d, &s),
                "word": w.0,
                "length": w.len(),
                "matrix": matrix_json(&longest_element(&g, &s).matrix),
            }))
        }
        WeylCmd::Sigma(dt) => {
            let (d, ts) = structure(dt)?;
            let sigmas: Vec<Value> = ts
                .theta
                .iter()
                .enumerate()
                .map(|(k, &node)| {
                    json!({
                        "node": d.nodes[node].label,
                        "word": ts.sigma_words[k].0,
                        "matrix": matrix_json(&ts.sigma(k + 1).matrix),
                    })
                })
                .collect();
            Ok(json!({ "specialRoot": ts.special_root.map(|i| d.nodes[i].label.clone()), "sigmas": sigmas }))
        }
        WeylCmd::ThetaLength { dt, word } => {
            let (d, ts) = structure(dt)?;
            let w = parse_word(word)?;
            check_word(&d, &w)?;
            let e = ts.group.element(&w);
            Ok(json!({ "thetaLength": theta_length(&ts, &e)?, "length": length(&ts.group, &e)? }))
        }
        WeylCmd::Reduced { diagram, theta, word, element, cap } => {
            let (_, d) = resolve(diagram)?;
            let ts = match theta {
                Some(t) => Some(theta_structure(&d, &parse_theta(&d, t)?)?),
                None => None,
            };
            let g = WeylGroup::of_diagram(&d)?;
            let e: WeylElement = match (word, element) {
                (Some(w), _) => {
                    let w = parse_word(w)?;
                    check_word(&d, &w)?;
                    g.element(&w)
                }
                (None, Some(el)) => {
                    let full: Vec<usize> = (0..d.rank()).collect();
                    let rest: Vec<usize> = match &ts {
                        Some(ts) => ts.complement(),
                        None => Vec::new(),
                    };
                    match el {
                        Element::WDelta => longest_element(&g, &full),
                        Element::WComplement => longest_element(&g, &rest),
                        Element::WMaxTheta => match &ts {
                            Some(ts) => w_max_theta(ts),
                            None => return Err(CliError::Usage("w-max-theta needs --theta".into())),
                        },
                    }
                }
                (None, None) => return Err(CliError::Usage("give --word or --element".into())),
            };
            let words = match &ts {
                Some(ts) => all_reduced_theta_words(ts, &e, *cap)?,
                None => all_reduced_words(&g, &e, *cap)?,
            };
            let words: Vec<Vec<usize>> = words.into_iter().map(|w| w.0).collect();
            Ok(json!({
                "over": if ts.is_some() { "theta" } else { "delta" },
                "length": length(&g, &e)?,
                "canonical": reduced_word(&g, &e)?.0,
                "count": words.len(),
                "words": words,
            }))
        }
        WeylCmd::Type(dt) => {
            let (_, ts) = structure(dt)?;
            let t = coxeter_type_of_wtheta(&ts);
            Ok(json!({ "label": t.label, "sameAsG": t.same_as_g, "orders": t.orders }))
        }
    }
}

fn so_model(q: &QArg) -> Result<SOModel, CliError> {
    Ok(model(q.q)?)
}

fn triple_json(t: &Sl2Triple) -> Value {
    json!({ "E": matrix_json(&t.e), "F": matrix_json(&t.f), "D": matrix_json(&t.d), "holds": t.holds() })
}

fn som(c: &SomCmd) -> Result<Value, CliError> {
    match c {
        SomCmd::ThetaBase(q) => {
            let m = so_model(q)?;
            let b = theta_base(&m)?;
            Ok(json!({
                "q": m.q,
                "basis": m.basis_labels,
                "alpha1": triple_json(&b.alpha1),
                "alpha2": triple_json(&b.alpha2),
                "Z0": matrix_json(&b.z0),
                "Z1": matrix_json(&b.z1),
                "e2Coords": strs(&b.e2_coords),
            }))
        }
        SomCmd::Serre(q) => {
            let m = so_model(q)?;
            let r = serre_check(&theta_base(&m)?);
            let entries: Vec<Value> = r
                .entries
                .iter()
                .map(|e| json!({ "group": e.equation, "statement": e.statement, "pass": e.pass }))
                .collect();
            Ok(json!({
                "q": m.q,
                "allPass": r.all_pass(),
                "cartan": r.cartan,
                "type": r.type_label,
                "generatedDim": r.generated_dim,
                "relations": entries,
            }))
        }
        SomCmd::Sl2(q) => {
            let m = so_model(q)?;
            let t = principal_sl2(&theta_base(&m)?);
            let mut out = triple_json(&t);
            out.as_object_mut()
                .expect("object")
                .insert("coefficients".into(), json!(strs(&principal_coefficients())));
            Ok(out)
        }
        SomCmd::Weights(q) => {
            let m = so_model(q)?;
            let ws: Vec<Value> = weight_spaces(&m)
                .iter()
                .map(|(w, b)| {
                    let (t1, t2) = SOModel::theta_coefficients(*w);
                    json!({ "weight": w, "thetaCoefficients": [t1, t2], "dim": b.len() })
                })
                .collect();
            Ok(json!({ "q": m.q, "weights": ws }))
        }
    }
}

fn coords_arg(m: &SOModel, arg: &str) -> Result<UCoord, CliError> {
    Ok(decode_payload::<CoordsJson>(arg)?.to_coords(m)?)
}

fn matrix_arg(m: &SOModel, arg: &str) -> Result<Matrix, CliError> {
    let rows: Vec<Vec<String>> = decode_payload(arg)?;
    let g = matrix_from_json(&rows)?;
    if g.nrows() != m.n || g.ncols() != m.n {
        return Err(CliError::Usage(format!("matrix must be {0}x{0}", m.n)));
    }
    Ok(g)
}

fn subject(m: &SOModel, s: &Subject) -> Result<Matrix, CliError> {
    match (&s.coords, &s.matrix) {
        (Some(c), _) => Ok(f_gamma(m, &coords_arg(m, c)?)),
        (None, Some(x)) => matrix_arg(m, x),
        (None, None) => Err(CliError::Usage("give --coords or --matrix".into())),
    }
}

fn braid_one(m: &SOModel, u: &UCoord) -> Result<(UCoord, bool, bool), CliError> {
    let w = braid_change(m, u)?;
    let identity = f_gamma(m, u) == f_gamma(m, &w);
    Ok((w.clone(), identity, w.is_interior(m)))
}

fn seed_of(s: &Sampling) -> Result<u64, CliError> {
    s.seed.ok_or_else(|| CliError::Usage("sampled runs need --seed".into()))
}

fn semigroup(c: &SemigroupCmd) -> Result<Value, CliError> {
    match c {
        SemigroupCmd::Eval { q, coords } => {
            let m = so_model(q)?;
            let u = coords_arg(&m, coords)?;
            Ok(json!({ "matrix": matrix_json(&f_gamma(&m, &u)), "interior": u.is_interior(&m) }))
        }
        SemigroupCmd::Decode { q, matrix, order } => {
            let m = so_model(q)?;
            let g = matrix_arg(&m, matrix)?;
            let u = decode(&m, &g, Order::parse(order)?)?;
            Ok(json!({ "coords": CoordsJson::from_coords(&u), "interior": u.is_interior(&m) }))
        }
        SemigroupCmd::Member { q, subject: s } => {
            let m = so_model(q)?;
            let g = subject(&m, s)?;
            Ok(json!({ "positive": is_positive(&m, &g)? }))
        }
        SemigroupCmd::Braid { q, coords, sampling } => {
            let m = so_model(q)?;
            if let Some(c) = coords {
                let u = coords_arg(&m, c)?;
                if u.order != Order::O1212 {
                    return Err(CliError::Usage("braid expects coordinates in order 1212".into()));
                }
                let (w, identity, positive) = braid_one(&m, &u)?;
                return Ok(json!({
                    "input": CoordsJson::from_coords(&u),
                    "output": CoordsJson::from_coords(&w),
                    "identity": identity,
                    "positive": positive,
                }));
            }
            let seed = seed_of(sampling)?;
            let mut r = sample::rng(seed);
            let (mut ok, mut pos) = (0usize, 0usize);
            for _ in 0..sampling.samples {
                let u = sample::interior_coords(&mut r, &m);
                let (_, identity, positive) = braid_one(&m, &u)?;
                ok += identity as usize;
                pos += positive as usize;
            }
            Ok(json!({
                "q": m.q, "seed": seed, "samples": sampling.samples,
                "identityHolds": ok, "positiveOutputs": pos,
                "pass": ok == sampling.samples && pos == sampling.samples,
            }))
        }
        SemigroupCmd::Stratify { q, subject: s } => {
            let m = so_model(q)?;
            let g = subject(&m, s)?;
            Ok(match stratify(&m, &g)? {
                Stratification::Nonnegative(st) => json!({
                    "nonnegative": true,
                    "index": st.index,
                    "label": st.label,
                    "word": st.word,
                    "params": CoordsJson::from_coords(&st.params),
                }),
                Stratification::NotNonnegative => json!({ "nonnegative": false }),
            })
        }
        SemigroupCmd::Ur { r, x, y, sampling } => {
            let rr = rat(r)?;
            if rr < int(1) {
                return Err(CliError::Usage("r must be at least 1".into()));
            }
            if let (Some(x), Some(y)) = (x, y) {
                let x = ur_arg(x, &rr)?;
                let y = ur_arg(y, &rr)?;
                let p = ur_product(&x, &y)?;
                return Ok(json!({ "product": UrJson::from_elem(&p), "member": p.is_member() }));
            }
            let seed = seed_of(sampling)?;
            let mut g = sample::rng(seed);
            let (mut closed, mut sharp) = (0usize, 0usize);
            for _ in 0..sampling.samples {
                let a = sample::ur_elem(&mut g, &rr);
                let b = sample::ur_elem(&mut g, &rr);
                let p = ur_product(&a, &b)?;
                closed += (p.is_member() && p.matrix() == &a.matrix() * &b.matrix()) as usize;
                let id = UrElem::identity(rr.clone());
                sharp += (p != id || (a == id && b == id)) as usize;
            }
            Ok(json!({
                "r": fmt_rat(&rr), "seed": seed, "samples": sampling.samples,
                "closed": closed, "sharp": sharp,
                "pass": closed == sampling.samples && sharp == sampling.samples,
            }))
        }
    }
}

fn ur_arg(arg: &str, r: &Rat) -> Result<UrElem, CliError> {
    let v = payload(arg)?;
    let get = |k: &str| -> Result<Rat, CliError> {
        let s = v.get(k).and_then(Value::as_str).ok_or_else(|| CliError::Usage(format!("missing field {k:?}")))?;
        Ok(rat(s)?)
    };
    Ok(UrElem { a: get("a")?, b: get("b")?, c: get("c")?, r: r.clone() })
}

fn flag_arg(m: &SOModel, arg: &str) -> Result<Flag, CliError> {
    flag_value(m, payload(arg)?)
}

fn flag_value(m: &SOModel, v: Value) -> Result<Flag, CliError> {
    if let Some(name) = v.as_str() {
        let (plus, minus) = standard_flags(m);
        return match name {
            "E+" => Ok(plus),
            "E-" => Ok(minus),
            _ => Err(CliError::Usage(format!("unknown flag name {name:?}"))),
        };
    }
    let f: FlagJson = serde_json::from_value(v)?;
    Ok(f.to_flag(m)?)
}

fn flag_list(m: &SOModel, arg: &str) -> Result<Vec<Flag>, CliError> {
    match payload(arg)? {
        Value::Array(xs) => xs.into_iter().map(|x| flag_value(m, x)).collect(),
        _ => Err(CliError::Usage("expected a JSON array of flags".into())),
    }
}

fn signature_json(s: &Signature) -> Value {
    json!({
        "gramRank": s.gram_rank,
        "linesPaired": s.lines_paired,
        "linePerpPlane": s.line_perp_plane,
        "planePerpLine": s.plane_perp_line,
        "meetDim": s.meet_dim,
        "lineInOtherPlane": s.line_in_other_plane,
        "otherLineInPlane": s.other_line_in_plane,
        "perpDim": s.perp_dim,
        "sameLine": s.same_line,
    })
}

fn flags(c: &FlagsCmd) -> Result<Value, CliError> {
    match c {
        FlagsCmd::Position { q, f, g } => {
            let m = so_model(q)?;
            let p = relative_position(&m, &flag_arg(&m, f)?, &flag_arg(&m, g)?)?;
            Ok(json!({ "index": p.index, "label": p.label, "signature": signature_json(&p.signature) }))
        }
        FlagsCmd::Transverse { q, f, g } => {
            let m = so_model(q)?;
            Ok(json!({ "transverse": is_transverse(&m, &flag_arg(&m, f)?, &flag_arg(&m, g)?) }))
        }
        FlagsCmd::Triple { q, x, flags } => {
            let m = so_model(q)?;
            let triple = match (x, flags) {
                (Some(x), _) => {
                    let (plus, minus) = standard_flags(&m);
                    vec![plus, flag_arg(&m, x)?, minus]
                }
                (None, Some(fs)) => flag_list(&m, fs)?,
                (None, None) => return Err(CliError::Usage("give --x or --flags".into())),
            };
            if triple.len() != 3 {
                return Err(CliError::Usage("a triple has three flags".into()));
            }
            Ok(json!({ "positive": positive_tuple(&m, &triple)? }))
        }
        FlagsCmd::Tuple { q, flags } => {
            let m = so_model(q)?;
            let fs = flag_list(&m, flags)?;
            Ok(json!({ "length": fs.len(), "positive": positive_tuple(&m, &fs)? }))
        }
        FlagsCmd::Circle { q, t, sampling } => {
            let m = so_model(q)?;
            let base = theta_base(&m)?;
            if let Some(t) = t {
                let ts = t
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(rat)
                    .collect::<Result<Vec<_>, _>>()?;
                let positive = circle_tuple_positive(&m, &base, &ts)?;
                let mut points: Vec<Value> = vec![json!({
                    "t": "infinity",
                    "flag": FlagJson::from_flag(&circle_point(&m, &base, &CircleParam::Infinity)),
                })];
                for x in ts.iter().rev() {
                    let f = circle_point(&m, &base, &CircleParam::Finite(x.clone()));
                    points.push(json!({ "t": fmt_rat(x), "flag": FlagJson::from_flag(&f) }));
                }
                return Ok(json!({ "positive": positive, "points": points }));
            }
            let seed = seed_of(sampling)?;
            let mut r = sample::rng(seed);
            let mut ok = 0usize;
            let mut runs = Vec::new();
            for _ in 0..sampling.samples {
                let ts = sample::increasing(&mut r, 3);
                let pos = circle_tuple_positive(&m, &base, &ts)?;
                ok += pos as usize;
                runs.push(json!({ "t": strs(&ts), "positive": pos }));
            }
            Ok(json!({ "seed": seed, "samples": sampling.samples, "positive": ok, "runs": runs }))
        }
    }
}

/// Family of an admissible pair, for the classification table.
pub fn family_label(d: &DynkinDiagram, theta: &[usize]) -> &'static str {
    let n = d.rank();
    if theta.len() == n {
        return "split";
    }
    let is_f = matches!(d.cartan_type().map(|(t, _)| t.family), Ok(Family::F));
    if is_f {
        "exceptional-F4"
    } else if theta == [n - 1] {
        "hermitian-tube"
    } else {
        "so(p,q)"
    }
}

fn classification_table() -> Result<Value, CliError> {
    let cat = catalog::load()?;
    let mut rows = Vec::new();
    for entry in &cat.diagrams {
        let d = entry.to_diagram()?;
        let ty = match d.cartan_type() {
            Ok((t, _)) if d.non_reduced => format!("BC{}", t.rank),
            Ok((t, _)) if t.rank == 2 && t.family == Family::B && d.edges[0].arrow_toward == Some(0) => {
                String::from("C2")
            }
            Ok((t, _)) => t.to_string(),
            Err(_) => String::from("infinite"),
        };
        let thetas = enumerate_positive_thetas(&d);
        let families: Vec<&str> = thetas.iter().map(|t| family_label(&d, t)).collect();
        let mut row = Map::new();
        row.insert("diagram".into(), json!(entry.name));
        row.insert("type".into(), json!(ty));
        row.insert("mults".into(), json!(d.nodes.iter().map(|n| n.mult).collect::<Vec<_>>()));
        row.insert("admissible".into(), json!(thetas.iter().map(|t| labels(&d, t)).collect::<Vec<_>>()));
        row.insert("families".into(), json!(families));
        rows.push(Value::Object(row));
    }
    Ok(json!({ "catalogVersion": cat.version, "rows": rows }))
}
