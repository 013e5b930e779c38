//! The `eulercat` command line.
//!
//! Every verb except `gen` prints one report line,
//! `{"status":…,"payload":…,"diagnostics":[…]}`, with diagnostics omitted
//! when empty. Exit codes: 0 ok, 1 χ undefined, 2 invalid input,
//! 3 hypotheses of a theorem not met.

use std::collections::HashMap;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enriched::{
    coproduct_category, coweighting, euler_characteristic, tensor_category, transfer_weighting, weighting,
    EnrichedCategory, EnrichedError,
};
use crate::fincat::{
    is_equivalence, is_isofibration, to_enriched, verify_product_formula, FinCatError, FiniteCategory, Functor,
};
use crate::json::{self, Document, JsonError};
use crate::linalg::Rational;
use crate::measure::{Enrichment, MeasureError};
use crate::stratified::{
    chi_stratified, face_category, gen_cpn, gen_half_open_interval, gen_simplex, gen_sphere_product_minus_point,
    StratifiedError, StratifiedSpaceDescriptor,
};
use crate::topcat::{
    chain_chi, chain_coweighting, classifying_chi, nerve_cell_census, AcyclicTopCategory, TopCatError,
};

#[derive(Parser, Debug)]
#[command(
    name = "eulercat",
    version,
    about = "Exact Euler characteristics of finite enriched categories"
)]
struct Cli {
    /// Print the bare payload instead of a JSON report.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristic of a category or descriptor.
    Chi { input: String },
    /// Canonical weighting.
    Weighting { input: String },
    /// Canonical coweighting.
    Coweighting { input: String },
    /// Cell census of the classifying space of an acyclic category.
    Nerve {
        input: String,
        /// Report cells up to this dimension only.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Print a stratified-space descriptor.
    Gen {
        #[command(subcommand)]
        space: Space,
    },
    /// Cross-check a theorem on an instance.
    Verify { check: Check, input: String },
    /// Audit an input's invariants.
    Validate { input: String },
}

#[derive(Subcommand, Debug)]
enum Space {
    /// Complex projective space.
    Cpn { n: usize },
    /// Product of spheres minus a point.
    SphereProduct { n: usize, m: usize },
    /// The interval (0,1].
    HalfOpenInterval,
    /// The closed simplex.
    Simplex { n: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Check {
    Classifying,
    ProductFormula,
    Tensor,
    Coproduct,
    EquivalenceInvariance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Undefined,
    InvalidInput,
    HypothesisFailed,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Undefined => "undefined",
            Status::InvalidInput => "invalid-input",
            Status::HypothesisFailed => "hypothesis-failed",
        }
    }

    fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Undefined => 1,
            Status::InvalidInput => 2,
            Status::HypothesisFailed => 3,
        }
    }
}

#[derive(Debug)]
struct Report {
    status: Status,
    payload: Option<Value>,
    diagnostics: Vec<String>,
}

impl Report {
    fn ok(payload: Value) -> Self {
        Self {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: Vec::new(),
        }
    }

    fn fail(status: Status, msg: impl Into<String>) -> Self {
        Self {
            status,
            payload: None,
            diagnostics: vec![msg.into()],
        }
    }

    fn invalid(msg: impl Into<String>) -> Self {
        Self::fail(Status::InvalidInput, msg)
    }

    fn to_json(&self) -> Value {
        let mut out = json!({"status": self.status.name()});
        if let Some(p) = &self.payload {
            out["payload"] = p.clone();
        }
        if !self.diagnostics.is_empty() {
            out["diagnostics"] = json!(self.diagnostics);
        }
        out
    }

    fn to_plain(&self) -> String {
        match (&self.payload, self.status) {
            (Some(Value::String(s)), Status::Ok) => s.clone(),
            (Some(p), Status::Ok) => p.to_string(),
            _ => std::iter::once(self.status.name().to_string())
                .chain(self.diagnostics.iter().cloned())
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

type Outcome<T> = Result<T, Report>;

impl From<JsonError> for Report {
    fn from(e: JsonError) -> Self {
        Report::invalid(e.to_string())
    }
}

fn measure_status(e: &MeasureError) -> Status {
    match e {
        MeasureError::ChiUndefined => Status::Undefined,
        _ => Status::InvalidInput,
    }
}

impl From<EnrichedError> for Report {
    fn from(e: EnrichedError) -> Self {
        let status = match &e {
            EnrichedError::Measure(m) | EnrichedError::NotMeasurable(_, _, m) => measure_status(m),
            _ => Status::InvalidInput,
        };
        Report::fail(status, e.to_string())
    }
}

impl From<FinCatError> for Report {
    fn from(e: FinCatError) -> Self {
        let status = match &e {
            FinCatError::NotAGroupoid { .. }
            | FinCatError::NotAnIsofibration { .. }
            | FinCatError::NotA2Groupoid(_) => Status::HypothesisFailed,
            FinCatError::ChiUndefined(_) => Status::Undefined,
            FinCatError::Enriched(inner) => return inner.clone().into(),
            _ => Status::InvalidInput,
        };
        Report::fail(status, e.to_string())
    }
}

impl From<TopCatError> for Report {
    fn from(e: TopCatError) -> Self {
        match e {
            TopCatError::Enriched(inner) => inner.into(),
            TopCatError::Measure(inner) => Report::fail(measure_status(&inner), inner.to_string()),
            other => Report::invalid(other.to_string()),
        }
    }
}

impl From<StratifiedError> for Report {
    fn from(e: StratifiedError) -> Self {
        match e {
            StratifiedError::TopCat(inner) => inner.into(),
            other => Report::invalid(other.to_string()),
        }
    }
}

fn wrong_kind(verb: &str, d: &Document) -> Report {
    Report::invalid(format!("{verb} does not accept a {} document", d.kind()))
}

/// The category a document describes, as an enriched category.
fn as_enriched(d: &Document, verb: &str) -> Outcome<EnrichedCategory> {
    match d {
        Document::Enriched(c) => Ok(c.clone()),
        Document::Category(c) => Ok(to_enriched(c)),
        Document::Acyclic(a) => Ok(a.to_enriched()),
        Document::Descriptor(x) => Ok(face_category(x)?.to_enriched()),
        _ => Err(wrong_kind(verb, d)),
    }
}

fn as_acyclic(d: &Document, verb: &str) -> Outcome<AcyclicTopCategory> {
    match d {
        Document::Acyclic(a) => Ok(a.clone()),
        Document::Descriptor(x) => Ok(face_category(x)?),
        Document::Enriched(c) if c.enrichment() == Enrichment::Top => Ok(AcyclicTopCategory::from_enriched(c)?),
        _ => Err(wrong_kind(verb, d)),
    }
}

fn matrix_chi(c: &EnrichedCategory) -> Outcome<Rational> {
    euler_characteristic(c)?.ok_or_else(|| {
        Report::fail(
            Status::Undefined,
            "no weighting and coweighting pair exists, so the Euler characteristic is undefined",
        )
    })
}

fn chi(d: &Document) -> Outcome<Value> {
    let q = match d {
        Document::Descriptor(x) => chi_stratified(x)?,
        Document::Acyclic(a) => chain_chi(a),
        _ => matrix_chi(&as_enriched(d, "chi")?)?,
    };
    Ok(json::rational(&q))
}

fn weighting_report(d: &Document) -> Outcome<Value> {
    let c = as_enriched(d, "weighting")?;
    weighting(&c)?
        .map(|w| json::weighting(&w))
        .ok_or_else(|| Report::fail(Status::Undefined, "no weighting exists"))
}

fn coweighting_report(d: &Document) -> Outcome<Value> {
    if let Document::Acyclic(_) | Document::Descriptor(_) = d {
        return Ok(json::coweighting(&chain_coweighting(&as_acyclic(d, "coweighting")?)?));
    }
    let c = as_enriched(d, "coweighting")?;
    coweighting(&c)?
        .map(|v| json::coweighting(&v))
        .ok_or_else(|| Report::fail(Status::Undefined, "no coweighting exists"))
}

fn verify_classifying(d: &Document) -> Outcome<Value> {
    let a = as_acyclic(d, "verify classifying")?;
    let chain = chain_chi(&a);
    let classifying = classifying_chi(&a);
    let matrix = matrix_chi(&a.to_enriched())?;
    let equal = chain == classifying && classifying == matrix;
    Ok(json!({
        "chain_chi": json::rational(&chain),
        "classifying_chi": json::rational(&classifying),
        "matrix_chi": json::rational(&matrix),
        "equal": equal,
    }))
}

fn verify_product(d: &Document) -> Outcome<Value> {
    let Document::Functor(p) = d else {
        return Err(wrong_kind("verify product-formula", d));
    };
    let r = verify_product_formula(p)?;
    Ok(json!({
        "base_components": r.base_components.iter().map(|b| json!({
            "representative": b.representative,
            "chi_base": json::rational(&b.chi_base),
            "chi_fiber": json::rational(&b.chi_fiber),
        })).collect::<Vec<_>>(),
        "lhs": json::rational(&r.lhs),
        "rhs": json::rational(&r.rhs),
        "equal": r.equal,
    }))
}

fn verify_monoidal(d: &Document, tensor: bool) -> Outcome<Value> {
    let verb = if tensor { "verify tensor" } else { "verify coproduct" };
    let Document::Pair(l, r) = d else {
        return Err(wrong_kind(verb, d));
    };
    let (a, b) = (as_enriched(l, verb)?, as_enriched(r, verb)?);
    let (ca, cb) = (matrix_chi(&a)?, matrix_chi(&b)?);
    let (combined, expected) = if tensor {
        (tensor_category(&a, &b)?, &ca * &cb)
    } else {
        (coproduct_category(&a, &b)?, &ca + &cb)
    };
    let c = matrix_chi(&combined)?;
    Ok(json!({
        "chi_left": json::rational(&ca),
        "chi_right": json::rational(&cb),
        "chi_combined": json::rational(&c),
        "expected": json::rational(&expected),
        "equal": c == expected,
    }))
}

fn class_sizes(c: &FiniteCategory) -> HashMap<String, u64> {
    let mut out = HashMap::new();
    for class in c.isomorphism_classes() {
        for &o in &class {
            out.insert(c.objects()[o].clone(), class.len() as u64);
        }
    }
    out
}

fn verify_equivalence(d: &Document) -> Outcome<Value> {
    let f = match d {
        Document::Functor(f) => f.clone(),
        Document::Category(c) => Functor::collapse_copies(c, 2),
        _ => return Err(wrong_kind("verify equivalence-invariance", d)),
    };
    let verdict = is_equivalence(&f);
    if !verdict.holds() {
        return Err(Report::fail(
            Status::HypothesisFailed,
            format!("not an equivalence: {verdict:?}"),
        ));
    }
    let (s, t) = (to_enriched(f.source()), to_enriched(f.target()));
    let chi_t = matrix_chi(&t)?;
    let chi_s = matrix_chi(&s)?;
    let w_t = weighting(&t)?.expect("χ defined implies a weighting");
    let object_map: Vec<(String, String)> = (0..f.source().object_count())
        .map(|a| {
            (
                f.source().objects()[a].clone(),
                f.target().objects()[f.on_object(a)].clone(),
            )
        })
        .collect();
    let w_s = transfer_weighting(&w_t, &object_map, &class_sizes(f.source()), &class_sizes(f.target()))?;
    let certified = w_s.certifies(&s)?;
    Ok(json!({
        "chi_source": json::rational(&chi_s),
        "chi_target": json::rational(&chi_t),
        "transferred_weighting": json::weighting(&w_s),
        "transferred_weighting_certified": certified,
        "equal": chi_s == chi_t,
    }))
}

fn closed(x: &StratifiedSpaceDescriptor) -> bool {
    x.params.values().all(|p| p.is_point())
}

fn validate(d: &Document) -> Outcome<Value> {
    Ok(match d {
        Document::Descriptor(x) => {
            x.validate()?;
            let c = face_category(x)?;
            json!({
                "kind": d.kind(),
                "faces": x.faces.len(),
                "closed": closed(x),
                "naive_cell_chi": x.naive_cell_chi().to_string(),
                "census_dimension": c.census_dimension(),
            })
        }
        Document::Acyclic(a) => json!({
            "kind": d.kind(),
            "objects": a.object_count(),
            "census_dimension": a.census_dimension(),
        }),
        Document::Category(c) => json!({
            "kind": d.kind(),
            "objects": c.object_count(),
            "morphisms": c.morphism_count(),
            "groupoid": c.is_groupoid(),
            "components": c.pi0_count(),
            "isomorphism_classes": c.isomorphism_classes().len(),
        }),
        Document::Functor(f) => json!({
            "kind": d.kind(),
            "equivalence": is_equivalence(f).holds(),
            "isofibration": is_isofibration(f).holds(),
            "source_groupoid": f.source().is_groupoid(),
            "target_groupoid": f.target().is_groupoid(),
        }),
        Document::Enriched(c) => {
            let w = weighting(c)?.is_some();
            let v = coweighting(c)?.is_some();
            json!({
                "kind": d.kind(),
                "enrichment": c.enrichment(),
                "objects": c.object_count(),
                "weighting": w,
                "coweighting": v,
                "admits_chi": w && v,
            })
        }
        Document::Pair(l, r) => json!({"kind": d.kind(), "left": validate(l)?, "right": validate(r)?}),
    })
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Outcome<Document> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Report::invalid(format!("cannot read standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Report::invalid(format!("cannot read {path}: {e}")))?;
    }
    Ok(json::parse_document(&text)?)
}

fn generate(space: &Space) -> Outcome<StratifiedSpaceDescriptor> {
    Ok(match *space {
        Space::Cpn { n } => gen_cpn(n),
        Space::SphereProduct { n, m } => gen_sphere_product_minus_point(n, m)?,
        Space::HalfOpenInterval => gen_half_open_interval(),
        Space::Simplex { n } => gen_simplex(n),
    })
}

fn dispatch(command: &Command, stdin: &mut dyn Read) -> Outcome<Value> {
    match command {
        Command::Chi { input } => chi(&read_input(input, stdin)?),
        Command::Weighting { input } => weighting_report(&read_input(input, stdin)?),
        Command::Coweighting { input } => coweighting_report(&read_input(input, stdin)?),
        Command::Nerve { input, max_dim } => {
            let a = as_acyclic(&read_input(input, stdin)?, "nerve")?;
            Ok(json::census(&nerve_cell_census(&a), *max_dim))
        }
        Command::Verify { check, input } => {
            let d = read_input(input, stdin)?;
            match check {
                Check::Classifying => verify_classifying(&d),
                Check::ProductFormula => verify_product(&d),
                Check::Tensor => verify_monoidal(&d, true),
                Check::Coproduct => verify_monoidal(&d, false),
                Check::EquivalenceInvariance => verify_equivalence(&d),
            }
        }
        Command::Validate { input } => validate(&read_input(input, stdin)?),
        Command::Gen { .. } => unreachable!("handled before dispatch"),
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let report = Report::invalid(e.to_string().trim_end());
            let _ = writeln!(stdout, "{}", report.to_json());
            return report.status.code();
        }
    };
    if let Command::Gen { space } = &cli.command {
        return match generate(space) {
            Ok(x) => {
                let _ = writeln!(stdout, "{}", json::descriptor(&x));
                0
            }
            Err(report) => emit(&report, cli.plain, stdout),
        };
    }
    let report = dispatch(&cli.command, stdin).map_or_else(|r| r, Report::ok);
    emit(&report, cli.plain, stdout)
}

fn emit(report: &Report, plain: bool, stdout: &mut dyn Write) -> i32 {
    let text = if plain {
        report.to_plain()
    } else {
        report.to_json().to_string()
    };
    let _ = writeln!(stdout, "{text}");
    report.status.code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String) {
        let mut out = Vec::new();
        let code = run(
            std::iter::once("eulercat").chain(args.iter().copied()),
            &mut stdin.as_bytes(),
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    fn pipe(gen: &[&str], then: &[&str]) -> (i32, String) {
        let (code, descriptor) = call(gen, "");
        assert_eq!(code, 0);
        call(then, &descriptor)
    }

    #[test]
    fn generators_pipe_into_chi() {
        assert_eq!(
            pipe(&["gen", "cpn", "2"], &["chi", "-"]),
            (0, "{\"status\":\"ok\",\"payload\":\"3\"}\n".into())
        );
        assert_eq!(
            pipe(&["gen", "sphere-product", "3", "5"], &["chi", "-", "--plain"]),
            (0, "-1\n".into())
        );
        assert_eq!(
            pipe(&["gen", "simplex", "2"], &["--plain", "chi", "-"]),
            (0, "1\n".into())
        );
        assert_eq!(
            pipe(&["gen", "half-open-interval"], &["chi", "--plain", "-"]),
            (0, "1\n".into())
        );
    }

    #[test]
    fn empty_category() {
        assert_eq!(
            call(&["chi", "-"], r#"{"objects":[],"morphisms":[]}"#).1,
            "{\"status\":\"ok\",\"payload\":\"0\"}\n"
        );
        assert_eq!(call(&["chi", "-"], r#"{"objects":[]}"#).0, 0);
    }

    #[test]
    fn undefined_chi_exits_one() {
        let input = r#"{"enrichment":"set","objects":["a","b"],"hom":{"a->a":{"kind":"finset","n":1},"a->b":{"kind":"finset","n":2},"b->a":{"kind":"finset","n":1},"b->b":{"kind":"finset","n":2}}}"#;
        let (code, out) = call(&["chi", "-"], input);
        assert_eq!(code, 1, "{out}");
        assert!(out.starts_with("{\"status\":\"undefined\""));
    }

    #[test]
    fn bad_input_exits_two() {
        for (args, input) in [
            (vec!["chi", "-"], "not json"),
            (
                vec!["chi", "-"],
                "{\"objects\":[\"a\"],\"hom\":{\"a->a\":{\"kind\":\"cw\",\"components\":[[0]]}}}",
            ),
            (vec!["chi", "/nonexistent/file.json"], ""),
            (vec!["frobnicate"], ""),
            (vec!["gen", "sphere-product", "0", "1"], ""),
            (vec!["nerve", "-"], "{\"objects\":[\"a\"],\"morphisms\":[]}"),
        ] {
            let (code, out) = call(&args, input);
            assert_eq!(code, 2, "{args:?}: {out}");
            let v: Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v["status"], "invalid-input");
            assert!(v["diagnostics"][0].is_string());
        }
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("chi"));
    }

    #[test]
    fn nerve_caps_dimension() {
        let input = r#"{"objects":["a","b"],"hom":{"a->b":{"kind":"cw","components":[[1,1]]}}}"#;
        assert_eq!(
            call(&["nerve", "-"], input).1,
            "{\"status\":\"ok\",\"payload\":{\"cells\":{\"0\":2,\"1\":1,\"2\":1},\"chi\":\"2\"}}\n"
        );
        assert_eq!(
            call(&["nerve", "--max-dim", "1", "-"], input).1,
            "{\"status\":\"ok\",\"payload\":{\"cells\":{\"0\":2,\"1\":1},\"chi\":\"2\"}}\n"
        );
    }

    #[test]
    fn verify_classifying_report() {
        let (code, out) = pipe(&["gen", "cpn", "3"], &["verify", "classifying", "-"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"status\":\"ok\",\"payload\":{\"chain_chi\":\"4\",\"classifying_chi\":\"4\",\"matrix_chi\":\"4\",\"equal\":true}}\n"
        );
    }

    #[test]
    fn product_formula_hypotheses() {
        use crate::fincat::{
            self,
            group::{FiniteGroup, GroupAction},
        };
        let p = Functor::projection(&fincat::from_group(&FiniteGroup::cyclic(2)), &fincat::indiscrete(3));
        let (code, out) = call(&["verify", "product-formula", "-"], &json::functor(&p).to_string());
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("\"equal\":true"));
        let a_g = Functor::group_set_projection(&GroupAction::regular(FiniteGroup::cyclic(2)));
        let (code, out) = call(&["verify", "product-formula", "-"], &json::functor(&a_g).to_string());
        assert_eq!(code, 3, "{out}");
        assert!(out.contains("hypothesis-failed"));
    }

    #[test]
    fn monoidal_and_equivalence_checks() {
        let pair = r#"{"left":{"enrichment":"set","objects":["x","y"],"hom":{"x->y":{"kind":"finset","n":2}}},"right":{"objects":["a"],"morphisms":[{"id":"1","src":"a","tgt":"a"},{"id":"t","src":"a","tgt":"a"}],"identity":{"a":"1"},"compose":{"1∘1":"1","1∘t":"t","t∘1":"t","t∘t":"1"}}}"#;
        for check in ["tensor", "coproduct"] {
            let (code, out) = call(&["verify", check, "-"], pair);
            assert_eq!(code, 0, "{out}");
            assert!(out.contains("\"equal\":true"), "{out}");
        }
        let right = r#"{"objects":["a","b"],"morphisms":[{"id":"1a","src":"a","tgt":"a"},{"id":"1b","src":"b","tgt":"b"},{"id":"f","src":"a","tgt":"b"}],"identity":{"a":"1a","b":"1b"},"compose":{"1a∘1a":"1a","1b∘1b":"1b","f∘1a":"f","1b∘f":"f"}}"#;
        let (code, out) = call(&["verify", "equivalence-invariance", "-"], right);
        assert_eq!(code, 0, "{out}");
        assert!(
            out.contains("\"transferred_weighting_certified\":true") && out.contains("\"equal\":true"),
            "{out}"
        );
        let mixed = r#"{"left":{"objects":["a"]},"right":{"objects":[],"morphisms":[]}}"#;
        assert_eq!(call(&["verify", "tensor", "-"], mixed).0, 2);
    }

    #[test]
    fn weightings_and_validate() {
        let (code, out) = pipe(&["gen", "half-open-interval"], &["coweighting", "-"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"status\":\"ok\",\"payload\":{\"values\":{\"v\":\"1\",\"e\":\"0\"},\"unique\":true,\"total\":\"1\"}}\n"
        );
        let (code, out) = pipe(&["gen", "half-open-interval"], &["weighting", "-"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"total\":\"1\""));
        let (code, out) = pipe(&["gen", "half-open-interval"], &["validate", "-"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"naive_cell_chi\":\"0\""), "{out}");
        let bad = r#"{"faces":[{"id":"a","dim":1},{"id":"b","dim":1}],"order":[["a","b"]],"params":{"a<b":{"kind":"finset","n":1}}}"#;
        assert_eq!(call(&["validate", "-"], bad).0, 2);
    }

    #[test]
    fn output_is_byte_stable() {
        let a = pipe(&["gen", "sphere-product", "2", "4"], &["verify", "classifying", "-"]);
        let b = pipe(&["gen", "sphere-product", "2", "4"], &["verify", "classifying", "-"]);
        assert_eq!(a, b);
        assert_eq!(call(&["gen", "cpn", "1"], "").1, call(&["gen", "cpn", "1"], "").1);
    }
}
