//! JSON problem descriptions, command dispatch and report rendering for the
//! `hopfkit` binary.
//!
//! Coefficients travel as exact strings (`"p/q"`, `"p/q+r/s i"`), exponents as
//! integer arrays and variable indices are 1-based throughout.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::polynomial::monomial_from_signed;
use crate::algebra::{DifferentialForm, Polynomial, VectorField};
use crate::classify::{self, FoliationClassification, FoliationObject, Nonsingularity, Side};
use crate::error::{HopfError, Result};
use crate::invariants::{self, BrunellaVerdict, FixedPointCount};
use crate::multiplier::{BundleParam, MultiplierStructure};
use crate::scalar::{self, Scalar};
use crate::sections::{self, BasisElement, ExistencePredicate, SectionKind};

pub const DEFAULT_MAX_DEGREE: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Sections,
    Dim,
    Classify,
    Integrability,
    Brunella,
    Leafcount,
    Hodge,
    Singlocus,
    Obstruction,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Sections,
        Command::Dim,
        Command::Classify,
        Command::Integrability,
        Command::Brunella,
        Command::Leafcount,
        Command::Hodge,
        Command::Singlocus,
        Command::Obstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Sections => "sections",
            Command::Dim => "dim",
            Command::Classify => "classify",
            Command::Integrability => "integrability",
            Command::Brunella => "brunella",
            Command::Leafcount => "leafcount",
            Command::Hodge => "hodge",
            Command::Singlocus => "singlocus",
            Command::Obstruction => "obstruction",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HopfError::InvalidInput(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<i64>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTermSpec {
    pub indices: Vec<usize>,
    pub poly: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub degree: usize,
    pub terms: Vec<FormTermSpec>,
}

/// Input problem description. Every field is optional at the schema level;
/// each command checks for what it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector_field: Option<Vec<Vec<TermSpec>>>,
    /// Section space for `sections`/`dim`: `tangent`, `oneform` or `nminus1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    /// Treat `Unknown` nonsingularity verdicts as unsupported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            HopfError::InvalidInput(format!("malformed config: {e}"))
        })
    }

    fn structure(&self) -> Result<MultiplierStructure> {
        let groups = self
            .groups
            .clone()
            .ok_or_else(|| HopfError::InvalidInput("config needs `groups`".into()))?;
        let n = match self.n {
            Some(n) => n,
            None => groups.iter().map(Vec::len).sum(),
        };
        MultiplierStructure::new(n, groups)
    }

    fn structure_or_generic(&self, n: usize) -> Result<MultiplierStructure> {
        if self.groups.is_some() {
            self.structure()
        } else {
            MultiplierStructure::generic(n)
        }
    }

    fn bundle(&self) -> Result<BundleParam> {
        self.bundle.clone().ok_or_else(|| HopfError::InvalidInput("config needs `bundle`".into()))
    }

    fn coefficients(&self) -> Result<Option<Vec<Scalar>>> {
        self.coefficients
            .as_ref()
            .map(|cs| cs.iter().map(|c| scalar::parse_scalar(c)).collect())
            .transpose()
    }

    fn n_hint(&self) -> Option<usize> {
        self.n.or_else(|| self.groups.as_ref().map(|g| g.iter().map(Vec::len).sum()))
    }

    fn form(&self) -> Result<DifferentialForm> {
        let spec = self.form.as_ref().ok_or_else(|| HopfError::InvalidInput("config needs `form`".into()))?;
        let n = self.form_n(spec)?;
        parse_form(n, spec)
    }

    fn form_n(&self, spec: &FormSpec) -> Result<usize> {
        if let Some(n) = self.n_hint() {
            return Ok(n);
        }
        spec.terms
            .iter()
            .flat_map(|t| t.poly.first())
            .map(|t| t.exponents.len())
            .next()
            .ok_or_else(|| HopfError::InvalidInput("cannot infer n: give `n` or a nonzero form".into()))
    }

    fn object(&self) -> Result<FoliationObject> {
        match (&self.vector_field, &self.form) {
            (Some(v), None) => Ok(FoliationObject::Field(parse_field(v)?)),
            (None, Some(_)) => Ok(FoliationObject::Form(self.form()?)),
            (Some(_), Some(_)) => Err(HopfError::InvalidInput("give either `vector_field` or `form`, not both".into())),
            (None, None) => Err(HopfError::InvalidInput("config needs `vector_field` or `form`".into())),
        }
    }
}

pub fn parse_polynomial(n: usize, terms: &[TermSpec]) -> Result<Polynomial> {
    let mut p = Polynomial::zero(n);
    for t in terms {
        if t.exponents.len() != n {
            return Err(HopfError::DimensionMismatch { expected: n, found: t.exponents.len() });
        }
        p.add_term(monomial_from_signed(&t.exponents)?, scalar::parse_scalar(&t.coeff)?);
    }
    Ok(p)
}

pub fn parse_field(components: &[Vec<TermSpec>]) -> Result<VectorField> {
    let n = components.len();
    VectorField::new(components.iter().map(|c| parse_polynomial(n, c)).collect::<Result<_>>()?)
}

pub fn parse_form(n: usize, spec: &FormSpec) -> Result<DifferentialForm> {
    let mut w = DifferentialForm::zero(n, spec.degree);
    for t in &spec.terms {
        w.insert(&t.indices, parse_polynomial(n, &t.poly)?)?;
    }
    Ok(w)
}

pub fn polynomial_terms(p: &Polynomial) -> Vec<TermSpec> {
    p.ordered_terms()
        .into_iter()
        .map(|(m, c)| TermSpec {
            exponents: m.0.iter().map(|&e| i64::from(e)).collect(),
            coeff: scalar::format_scalar(c),
        })
        .collect()
}

pub fn form_spec(w: &DifferentialForm) -> FormSpec {
    FormSpec {
        degree: w.degree(),
        terms: w
            .terms()
            .map(|(idx, g)| FormTermSpec { indices: idx.clone(), poly: polynomial_terms(g) })
            .collect(),
    }
}

fn object_json(obj: &FoliationObject) -> Value {
    match obj {
        FoliationObject::Field(v) => json!({
            "type": "vector_field",
            "components": v.components().iter().map(polynomial_terms).collect::<Vec<_>>(),
            "text": v.to_string(),
        }),
        FoliationObject::Form(w) => json!({
            "type": "form",
            "form": form_spec(w),
            "text": w.to_string(),
        }),
    }
}

fn big_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn monomial_text(exponents: &[u32]) -> String {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("z_{}", i + 1) } else { format!("z_{}^{e}", i + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

/// `z^α ∂/∂z_k`, `z^α dz_k` or `z^α dz_1∧…(no dz_k)…∧dz_n`.
pub fn basis_element_text(kind: SectionKind, n: usize, e: &BasisElement) -> String {
    let basis = match kind {
        SectionKind::Tangent => format!("∂/∂z_{}", e.component),
        SectionKind::OneForm => format!("dz_{}", e.component),
        SectionKind::TopMinusOneForm => (1..=n)
            .filter(|&i| i != e.component)
            .map(|i| format!("dz_{i}"))
            .collect::<Vec<_>>()
            .join("∧"),
    };
    let mono = monomial_text(&e.exponents);
    if mono.is_empty() {
        basis
    } else {
        format!("{mono} {basis}")
    }
}

fn kind_name(kind: SectionKind) -> &'static str {
    match kind {
        SectionKind::Tangent => "tangent",
        SectionKind::OneForm => "oneform",
        SectionKind::TopMinusOneForm => "nminus1",
    }
}

fn predicate_name(p: ExistencePredicate) -> &'static str {
    match p {
        ExistencePredicate::NMinusOneForms => "nminus1_forms",
        ExistencePredicate::TangentTwist => "tangent_twist",
        ExistencePredicate::OneForms => "one_forms",
        ExistencePredicate::ConormalBundle => "conormal_bundle",
    }
}

fn nonsingularity_json(v: &Nonsingularity) -> Value {
    let mut out = serde_json::to_value(v).expect("serializable verdict");
    if let Nonsingularity::Singular { locus: classify::SingularSet::Coordinate(l) } = v {
        out["text"] = json!(l.to_string());
    }
    out
}

fn locus_json(locus: &classify::CoordinateLocus) -> Value {
    json!({
        "empty": locus.is_empty(),
        "components": locus.components.iter().map(|s| json!({
            "zero_indices": s,
            "dimension": locus.n - s.len(),
            "text": locus.render_component(s),
        })).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub structure_kind: Option<String>,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl Report {
    fn new(command: Command, ms: Option<&MultiplierStructure>) -> Self {
        Report {
            command: command.name().into(),
            structure_kind: ms.map(|m| m.kind().to_string()),
            results: Value::Null,
            warnings: Vec::new(),
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HopfError::InvalidInput(format!("malformed report: {e}")))
    }
}

fn classification_json(ms: &MultiplierStructure, c: &FoliationClassification) -> Value {
    json!({
        "bundle": c.bundle,
        "display": c.bundle.display(ms),
        "bundle_inverse_display": c.bundle.inverse().display(ms),
        "kind": c.kind,
        "representative": object_json(&c.representative),
        "nonsingularity": nonsingularity_json(&c.nonsingularity),
    })
}

pub fn run_command(command: Command, config: &ProblemConfig) -> Result<Report> {
    match command {
        Command::Sections | Command::Dim => run_sections(command, config),
        Command::Classify => run_classify(config),
        Command::Integrability => run_integrability(config),
        Command::Brunella => run_brunella(config),
        Command::Leafcount => run_leafcount(config),
        Command::Hodge => run_hodge(config),
        Command::Singlocus => run_singlocus(config),
        Command::Obstruction => run_obstruction(config),
    }
}

fn run_sections(command: Command, config: &ProblemConfig) -> Result<Report> {
    let ms = config.structure()?;
    let bundle = config.bundle()?;
    let kind = SectionKind::parse(config.kind.as_deref().unwrap_or("tangent"))?;
    let basis = sections::solve(&ms, kind, &bundle)?;
    let mut report = Report::new(command, Some(&ms));
    let predicate = match kind {
        SectionKind::Tangent => ExistencePredicate::TangentTwist,
        SectionKind::OneForm => ExistencePredicate::OneForms,
        SectionKind::TopMinusOneForm => ExistencePredicate::NMinusOneForms,
    };
    // the tangent criterion is phrased in terms of a = b⁻¹
    let predicate_param = if kind == SectionKind::Tangent { bundle.inverse() } else { bundle.clone() };
    let predicate_value = match sections::predicate_existence(predicate, &ms, &predicate_param) {
        Ok(v) => {
            if v != (basis.dimension() > 0) {
                report.warnings.push(format!(
                    "closed-form criterion `{}` disagrees with the computed dimension",
                    predicate_name(predicate)
                ));
            }
            json!(v)
        }
        Err(HopfError::Unsupported(msg)) => {
            report.warnings.push(format!("{msg}; using dimension > 0"));
            Value::Null
        }
        Err(e) => return Err(e),
    };
    let mut results = json!({
        "kind": kind_name(kind),
        "bundle": bundle,
        "bundle_display": bundle.display(&ms),
        "dimension": basis.dimension(),
        "predicate": { "name": predicate_name(predicate), "value": predicate_value },
    });
    if command == Command::Sections {
        results["basis"] = json!(basis
            .elements
            .iter()
            .map(|e| json!({
                "component": e.component,
                "exponents": e.exponents,
                "text": basis_element_text(kind, ms.n(), e),
            }))
            .collect::<Vec<_>>());
    }
    report.results = results;
    Ok(report)
}

fn run_classify(config: &ProblemConfig) -> Result<Report> {
    let ms = config.structure()?;
    let side = Side::parse(config.side.as_deref().unwrap_or("tangent"))?;
    let max_degree = config.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let coefficients = config.coefficients()?;
    let list = match side {
        Side::Tangent => classify::admissible_tangent_bundles(&ms, max_degree, coefficients.as_deref())?,
        Side::Conormal => classify::admissible_conormal_bundles(&ms, max_degree, coefficients.as_deref())?,
    };
    let mut report = Report::new(Command::Classify, Some(&ms));
    for c in &list {
        match &c.nonsingularity {
            Nonsingularity::Nonsingular => {}
            Nonsingularity::Unknown if config.strict.unwrap_or(false) => {
                return Err(HopfError::Unsupported(format!(
                    "nonsingularity of the representative for {} could not be decided",
                    c.bundle.display(&ms)
                )));
            }
            Nonsingularity::Unknown => report
                .warnings
                .push(format!("nonsingularity unknown for bundle {}", c.bundle.display(&ms))),
            Nonsingularity::Singular { .. } => report.warnings.push(format!(
                "representative for bundle {} is singular with the given coefficients",
                c.bundle.display(&ms)
            )),
        }
    }
    report.results = json!({
        "side": side,
        "max_degree": max_degree,
        "count": list.len(),
        "bundles": list.iter().map(|c| classification_json(&ms, c)).collect::<Vec<_>>(),
    });
    Ok(report)
}

fn run_integrability(config: &ProblemConfig) -> Result<Report> {
    let w = config.form()?;
    let defect = invariants::frobenius_defect(&w)?;
    let mut report = Report::new(Command::Integrability, config.structure().ok().as_ref());
    if defect.vacuous {
        report.warnings.push("n < 3: the integrability condition holds vacuously".into());
    }
    let first_integral = invariants::primitive_of_closed(&w).ok();
    report.results = json!({
        "integrable": defect.is_integrable(),
        "defect_terms": defect.defect.term_count(),
        "defect": form_spec(&defect.defect),
        "defect_text": defect.defect.to_string(),
        "closed": invariants::is_closed(&w),
        "first_integral": first_integral.as_ref().map(|t| json!({
            "terms": polynomial_terms(t),
            "text": t.to_string(),
        })),
    });
    Ok(report)
}

fn run_brunella(config: &ProblemConfig) -> Result<Report> {
    let w = config.form()?;
    let mut report = Report::new(Command::Brunella, config.structure().ok().as_ref());
    let verdict = invariants::brunella_alternative(&w)?;
    let cartan = invariants::cartan_radial_check(&w)?;
    let mut results = match &verdict {
        BrunellaVerdict::InvariantHypersurface { f, verified } => {
            if !verified {
                report.warnings.push("invariance identity df∧ω = f·dω failed".into());
            }
            json!({
                "verdict": "invariant_hypersurface",
                "f": { "terms": polynomial_terms(f), "text": f.to_string() },
                "verified": verified,
            })
        }
        BrunellaVerdict::TangentToFibration => json!({ "verdict": "tangent_to_fibration" }),
    };
    results["cartan_identity"] = json!(cartan);
    report.results = results;
    Ok(report)
}

fn run_leafcount(config: &ProblemConfig) -> Result<Report> {
    let mut report = Report::new(Command::Leafcount, None);
    let mut results = serde_json::Map::new();
    if let Some(m) = config.m {
        let n = config.n_hint().ok_or_else(|| HopfError::InvalidInput("leafcount needs `n`".into()))?;
        let count = invariants::leaf_count_classical(n as u32, m)?;
        if count.extrapolated {
            report
                .warnings
                .push("m = 1: closed formula has a zero denominator; returning the limit value n".into());
        }
        results.insert("count".into(), big_json(&count.count));
        results.insert("extrapolated".into(), json!(count.extrapolated));
    }
    if let Some(v) = &config.vector_field {
        let field = parse_field(v)?;
        let diag = invariants::leaf_count_diagnostic(&field)?;
        let oracle = match diag.oracle {
            FixedPointCount::Infinite => json!({ "fixed_points": "infinite" }),
            FixedPointCount::Finite { with_multiplicity, distinct } => {
                json!({ "with_multiplicity": with_multiplicity, "distinct": distinct })
            }
        };
        results.insert(
            "oracle".into(),
            json!({
                "field_degree": diag.field_degree,
                "m": diag.m,
                "counts": oracle,
                "formula_at_n2": diag.formula.as_ref().map(|f| big_json(&f.count)),
                "degree_based_at_n2": big_json(&diag.degree_based),
                "formula_matches_oracle": diag.formula_matches_oracle,
                "degree_based_matches_oracle": diag.degree_based_matches_oracle,
            }),
        );
        report.warnings.push(format!(
            "diagnostic only: closed formula gives {}, degree-based count gives {}, planar oracle gives {}",
            diag.formula.as_ref().map_or("n/a".to_string(), |f| f.count.to_string()),
            diag.degree_based,
            match diag.oracle {
                FixedPointCount::Infinite => "infinitely many".to_string(),
                FixedPointCount::Finite { distinct, .. } => distinct.to_string(),
            }
        ));
    }
    if results.is_empty() {
        return Err(HopfError::InvalidInput("leafcount needs `m` (with `n`) or a planar `vector_field`".into()));
    }
    report.results = Value::Object(results);
    Ok(report)
}

fn run_hodge(config: &ProblemConfig) -> Result<Report> {
    let n = config.n_hint().ok_or_else(|| HopfError::InvalidInput("hodge needs `n`".into()))?;
    let table = invariants::hodge_numbers(n)?;
    let mut report = Report::new(Command::Hodge, None);
    report.results = json!({
        "n": n,
        "table": table.values,
        "nonzero": table.nonzero_entries().iter().map(|(p, q, h)| json!([p, q, h])).collect::<Vec<_>>(),
        "chern_top": invariants::chern_top(n)?,
    });
    Ok(report)
}

fn run_singlocus(config: &ProblemConfig) -> Result<Report> {
    let obj = config.object()?;
    let ms = config.structure_or_generic(obj.n())?;
    let mut report = Report::new(Command::Singlocus, config.groups.as_ref().map(|_| &ms));
    let verdict = classify::nonsingularity_check(&obj, &ms)?;
    let locus = match classify::singular_locus_monomial(&obj) {
        Ok(l) => Some(locus_json(&l)),
        Err(HopfError::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    if verdict == Nonsingularity::Unknown {
        if config.strict.unwrap_or(false) {
            return Err(HopfError::Unsupported("nonsingularity could not be decided".into()));
        }
        report.warnings.push("nonsingularity verdict unknown".into());
    }
    report.results = json!({
        "object": object_json(&obj),
        "locus": locus,
        "nonsingularity": nonsingularity_json(&verdict),
    });
    Ok(report)
}

fn run_obstruction(config: &ProblemConfig) -> Result<Report> {
    let obj = config.object()?;
    let ms = config.structure_or_generic(obj.n())?;
    let r = invariants::isolated_singularity_obstruction(&obj, &ms)?;
    let mut report = Report::new(Command::Obstruction, config.groups.as_ref().map(|_| &ms));
    if !r.consistent {
        report.warnings.push("isolated singular points contradict c_n(TX ⊗ L) = 0".into());
    }
    report.results = json!({
        "object": object_json(&obj),
        "locus": locus_json(&r.locus),
        "consistent": r.consistent,
        "chern_top": r.chern_top,
        "chain": r.chain,
    });
    Ok(report)
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Line-oriented rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let r = &report.results;
    let _ = writeln!(out, "command: {}", report.command);
    if let Some(k) = &report.structure_kind {
        let _ = writeln!(out, "structure: {k}");
    }
    match report.command.as_str() {
        "sections" | "dim" => {
            let _ = writeln!(out, "space: {} twisted by {}", value_text(&r["kind"]), value_text(&r["bundle_display"]));
            let _ = writeln!(out, "dimension: {}", r["dimension"]);
            if let Some(basis) = r["basis"].as_array() {
                for e in basis {
                    let _ = writeln!(out, "  {}", value_text(&e["text"]));
                }
            }
        }
        "classify" => {
            let _ = writeln!(out, "side: {}", value_text(&r["side"]));
            for b in r["bundles"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "  L_b, b = {}: {}, {} [{}]",
                    value_text(&b["display"]),
                    value_text(&b["kind"]["kind"]),
                    value_text(&b["representative"]["text"]),
                    value_text(&b["nonsingularity"]["verdict"]),
                );
            }
        }
        "integrability" => {
            let _ = writeln!(out, "integrable: {}", r["integrable"]);
            let _ = writeln!(out, "omega ^ d omega = {}", value_text(&r["defect_text"]));
            if let Some(t) = r["first_integral"].get("text") {
                let _ = writeln!(out, "first integral: {}", value_text(t));
            }
        }
        "brunella" => {
            let _ = writeln!(out, "verdict: {}", value_text(&r["verdict"]));
            if let Some(f) = r.get("f") {
                let _ = writeln!(out, "f = i_R omega = {}", value_text(&f["text"]));
                let _ = writeln!(out, "verified: {}", r["verified"]);
            }
            let _ = writeln!(out, "radial identity: {}", r["cartan_identity"]);
        }
        "singlocus" | "obstruction" => {
            let _ = writeln!(out, "object: {}", value_text(&r["object"]["text"]));
            match r["locus"]["components"].as_array() {
                Some(cs) if cs.is_empty() => {
                    let _ = writeln!(out, "locus: empty");
                }
                Some(cs) => {
                    for c in cs {
                        let _ = writeln!(out, "locus: {}", value_text(&c["text"]));
                    }
                }
                None => {}
            }
            if let Some(v) = r.get("nonsingularity") {
                let _ = writeln!(out, "verdict: {}", value_text(&v["verdict"]));
            }
            if let Some(chain) = r.get("chain").and_then(Value::as_array) {
                for step in chain {
                    let _ = writeln!(out, "  {}", value_text(step));
                }
            }
        }
        _ => {
            if let Some(map) = r.as_object() {
                for (k, v) in map {
                    let _ = writeln!(out, "{k}: {}", value_text(v));
                }
            }
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> ProblemConfig {
        ProblemConfig::from_json(text).unwrap()
    }

    #[test]
    fn basis_text() {
        let e = BasisElement { component: 1, exponents: vec![0, 0, 0] };
        assert_eq!(basis_element_text(SectionKind::Tangent, 3, &e), "∂/∂z_1");
        let e = BasisElement { component: 2, exponents: vec![0, 0, 0] };
        assert_eq!(basis_element_text(SectionKind::OneForm, 3, &e), "dz_2");
        let e = BasisElement { component: 2, exponents: vec![2, 0, 1] };
        assert_eq!(basis_element_text(SectionKind::TopMinusOneForm, 3, &e), "z_1^2*z_3 dz_1∧dz_3");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = ProblemConfig::from_json("{\n  \"n\": 3,\n  \"groups\": [[1,2,3]\n}").unwrap_err();
        match err {
            HopfError::InvalidInput(msg) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(ProblemConfig::from_json("{\"unknown_field\": 1}").is_err());
    }

    #[test]
    fn sections_report() {
        let c = config(r#"{"n": 3, "groups": [[1],[2],[3]], "bundle": {"type": "monomial", "exponents": [1,0,0]}}"#);
        let r = run_command(Command::Sections, &c).unwrap();
        assert_eq!(r.results["dimension"], json!(1));
        assert_eq!(r.results["basis"][0]["text"], json!("∂/∂z_1"));
        assert_eq!(r.results["predicate"]["value"], json!(true));
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn general_structure_falls_back_with_warning() {
        let c = config(
            r#"{"n": 4, "groups": [[1,2],[3,4]], "kind": "oneform", "bundle": {"type": "monomial", "exponents": [1,0,0,0]}}"#,
        );
        let r = run_command(Command::Dim, &c).unwrap();
        assert_eq!(r.results["predicate"]["value"], Value::Null);
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.structure_kind.as_deref(), Some("general"));
    }

    #[test]
    fn unsupported_classification_exit_code() {
        let c = config(r#"{"n": 4, "groups": [[1,2],[3,4]]}"#);
        let err = run_command(Command::Classify, &c).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn integrability_of_example_form() {
        let c = config(
            r#"{"n": 3, "form": {"degree": 1, "terms": [
                {"indices": [1], "poly": [{"exponents": [0,2,0], "coeff": "1"}]},
                {"indices": [2], "poly": [{"exponents": [2,0,0], "coeff": "1"}]},
                {"indices": [3], "poly": [{"exponents": [0,0,2], "coeff": "1"}]}]}}"#,
        );
        let r = run_command(Command::Integrability, &c).unwrap();
        assert_eq!(r.results["integrable"], json!(false));
        assert_eq!(r.results["defect_terms"], json!(1));
        assert_eq!(r.results["first_integral"], Value::Null);
    }

    #[test]
    fn leafcount_report() {
        let c = ProblemConfig { n: Some(3), m: Some(2), ..Default::default() };
        let r = run_command(Command::Leafcount, &c).unwrap();
        assert_eq!(r.results["count"], json!(7));
        let c = ProblemConfig { n: Some(3), m: Some(1), ..Default::default() };
        let r = run_command(Command::Leafcount, &c).unwrap();
        assert_eq!(r.results["extrapolated"], json!(true));
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let c = config(r#"{"n": 3, "groups": [[1],[2],[3]], "side": "conormal"}"#);
        let r = run_command(Command::Classify, &c).unwrap();
        let text = r.render_json();
        assert_eq!(Report::parse_json(&text).unwrap(), r);
        assert_eq!(run_command(Command::Classify, &c).unwrap().render_json(), text);
    }

    #[test]
    fn text_rendering() {
        let c = config(
            r#"{"n": 3, "vector_field": [
                [{"exponents": [2,0,0], "coeff": "1"}],
                [{"exponents": [1,1,0], "coeff": "1"}],
                [{"exponents": [1,0,1], "coeff": "1"}]]}"#,
        );
        let r = run_command(Command::Singlocus, &c).unwrap();
        let text = render_text(&r);
        assert!(text.contains("locus: V(z_1) \\ {0}, dim 2"), "{text}");
        assert!(text.contains("verdict: singular"), "{text}");
    }
}
