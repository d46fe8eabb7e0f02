//! Admissible bundles and normal forms of nonsingular one-dimensional
//! foliations (`T_F = L_b → TX`) and codimension-one distributions
//! (`N*_F = L_b → Ω¹_X`).

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg;
use crate::algebra::polynomial::Monomial;
use crate::algebra::{DifferentialForm, Polynomial, VectorField};
use crate::error::{check_dim, HopfError, Result};
use crate::multiplier::{BundleParam, ExponentVector, MultiplierStructure, StructureKind};
use crate::scalar::Scalar;
use crate::sections::{self, SectionKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Tangent,
    Conormal,
}

impl Side {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(Side::Tangent),
            "conormal" => Ok(Side::Conormal),
            other => Err(HopfError::InvalidInput(format!("unknown side `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FoliationKind {
    Constant,
    Linear,
    Polynomial { degree: u32 },
}

impl FoliationKind {
    /// Kind determined by the coefficient degree of a representative.
    pub fn from_degree(degree: u32) -> Self {
        match degree {
            0 => FoliationKind::Constant,
            1 => FoliationKind::Linear,
            d => FoliationKind::Polynomial { degree: d },
        }
    }

    pub fn coefficient_degree(self) -> u32 {
        match self {
            FoliationKind::Constant => 0,
            FoliationKind::Linear => 1,
            FoliationKind::Polynomial { degree } => degree,
        }
    }
}

impl fmt::Display for FoliationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoliationKind::Constant => write!(f, "constant"),
            FoliationKind::Linear => write!(f, "linear"),
            FoliationKind::Polynomial { degree } => write!(f, "polynomial(degree {degree})"),
        }
    }
}

/// A vector field or a 1-form on ℂⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoliationObject {
    Field(VectorField),
    Form(DifferentialForm),
}

impl FoliationObject {
    pub fn n(&self) -> usize {
        match self {
            FoliationObject::Field(v) => v.n(),
            FoliationObject::Form(w) => w.n(),
        }
    }

    /// `(g_1, …, g_n)` of the field or of the 1-form.
    pub fn components(&self) -> Result<Vec<Polynomial>> {
        match self {
            FoliationObject::Field(v) => Ok(v.components().to_vec()),
            FoliationObject::Form(w) if w.degree() == 1 => w.one_form_coefficients(),
            FoliationObject::Form(w) => Err(HopfError::Unsupported(format!(
                "singular loci are computed for vector fields and 1-forms, got a {}-form",
                w.degree()
            ))),
        }
    }
}

impl fmt::Display for FoliationObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoliationObject::Field(v) => write!(f, "{v}"),
            FoliationObject::Form(w) => write!(f, "{w}"),
        }
    }
}

/// Union of coordinate subspaces `{z_i = 0, i ∈ S}` minus the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoordinateLocus {
    pub n: usize,
    pub components: Vec<Vec<usize>>,
}

impl CoordinateLocus {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.components.iter().map(|s| self.n - s.len()).collect()
    }

    pub fn render_component(&self, s: &[usize]) -> String {
        let vars: Vec<String> = s.iter().map(|i| format!("z_{i}")).collect();
        format!("V({}) \\ {{0}}, dim {}", vars.join(", "), self.n - s.len())
    }
}

impl fmt::Display for CoordinateLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.components.iter().map(|s| self.render_component(s)).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum SingularSet {
    Coordinate(CoordinateLocus),
    /// Kernel of a singular linear field or form.
    LinearSubspace { dimension: usize },
    /// Nonempty common zero set of homogeneous components; a cone of
    /// dimension at least one.
    Cone,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Nonsingularity {
    Nonsingular,
    Singular { locus: SingularSet },
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoliationClassification {
    pub side: Side,
    /// `T_F = L_b` on the tangent side, `N*_F = L_b` on the conormal side.
    pub bundle: BundleParam,
    pub kind: FoliationKind,
    pub representative: FoliationObject,
    pub nonsingularity: Nonsingularity,
}

impl FoliationClassification {
    /// Checks that every monomial of the representative is a basis element of
    /// the twisted section space the bundle prescribes.
    pub fn lies_in_section_space(&self, ms: &MultiplierStructure) -> Result<bool> {
        let (kind, param) = match self.side {
            Side::Tangent => (SectionKind::Tangent, self.bundle.clone()),
            Side::Conormal => (SectionKind::OneForm, self.bundle.inverse()),
        };
        let basis = sections::solve(ms, kind, &param)?;
        let comps = self.representative.components()?;
        Ok(comps.iter().enumerate().all(|(k, g)| g.terms().all(|(m, _)| basis.contains(k + 1, &m.0))))
    }
}

fn require_paper_kind(ms: &MultiplierStructure) -> Result<StructureKind> {
    match ms.kind() {
        StructureKind::General => Err(HopfError::Unsupported(
            "classification is only available for classical, generic and intermediary structures".into(),
        )),
        k => Ok(k),
    }
}

fn coefficient_list(n: usize, overrides: Option<&[Scalar]>) -> Result<Vec<Scalar>> {
    match overrides {
        None => Ok(vec![Scalar::one(); n]),
        Some(c) => {
            check_dim(n, c.len())?;
            Ok(c.to_vec())
        }
    }
}

/// `b = μ_i` for some `i` gives a constant foliation, `b = 1` a linear one;
/// anything else is polynomial of the representative's degree.
fn tangent_kind(ms: &MultiplierStructure, bundle: &BundleParam, degree: u32) -> FoliationKind {
    let Some(e) = bundle.exponents() else {
        return FoliationKind::from_degree(degree);
    };
    let key = ms.class_of(e).expect("bundle matches structure");
    if key.0.iter().all(|&s| s == 0) {
        return FoliationKind::Linear;
    }
    let is_multiplier = (1..=ms.n()).any(|i| ms.class_of(&ExponentVector::unit(ms.n(), i)).ok().as_ref() == Some(&key));
    if is_multiplier {
        FoliationKind::Constant
    } else {
        FoliationKind::Polynomial { degree }
    }
}

fn diagonal_linear(n: usize, c: &[Scalar], indices: impl Iterator<Item = usize>) -> Vec<Polynomial> {
    let mut comps = vec![Polynomial::zero(n); n];
    for k in indices {
        comps[k - 1] = Polynomial::var(n, k).scale(&c[k - 1]);
    }
    comps
}

fn constant_on(n: usize, c: &[Scalar], indices: &[usize]) -> Vec<Polynomial> {
    let mut comps = vec![Polynomial::zero(n); n];
    for &k in indices {
        comps[k - 1] = Polynomial::constant(n, c[k - 1].clone());
    }
    comps
}

fn fermat(n: usize, c: &[Scalar], degree: u32) -> Vec<Polynomial> {
    (1..=n)
        .map(|k| {
            let mut e = vec![0; n];
            e[k - 1] = degree;
            Polynomial::monomial(n, e, c[k - 1].clone())
        })
        .collect()
}

/// Nonsingular degree-`(m+1)` witness `g_k = z_k^{m+1}` on a classical
/// manifold (`m = -1` gives `Σ ∂/∂z_k`).
pub fn witness_classical_vf(n: usize, m: i64) -> Result<VectorField> {
    if m < -1 {
        return Err(HopfError::InvalidInput(format!("classical tangent family needs m >= -1, got {m}")));
    }
    VectorField::new(fermat(n, &vec![Scalar::one(); n], (m + 1) as u32))
}

fn classify_entry(
    ms: &MultiplierStructure,
    side: Side,
    bundle: BundleParam,
    kind: FoliationKind,
    representative: FoliationObject,
) -> Result<FoliationClassification> {
    let nonsingularity = nonsingularity_check(&representative, ms)?;
    Ok(FoliationClassification { side, bundle, kind, representative, nonsingularity })
}

fn field_entry(ms: &MultiplierStructure, bundle: BundleParam, comps: Vec<Polynomial>) -> Result<FoliationClassification> {
    let v = VectorField::new(comps)?;
    let degree = v.homogeneity().unwrap_or(0);
    let kind = tangent_kind(ms, &bundle, degree);
    classify_entry(ms, Side::Tangent, bundle, kind, FoliationObject::Field(v))
}

fn form_entry(ms: &MultiplierStructure, bundle_inverse: BundleParam, comps: Vec<Polynomial>) -> Result<FoliationClassification> {
    let w = DifferentialForm::one_form(comps)?;
    let kind = FoliationKind::from_degree(w.homogeneity().unwrap_or(0));
    classify_entry(ms, Side::Conormal, bundle_inverse.inverse(), kind, FoliationObject::Form(w))
}

/// Admissible tangent bundles `T_F = L_b` of nonsingular one-dimensional
/// foliations, each with a witness vector field. The classical family is
/// listed for `m ∈ {-1, …, max_degree}` with `b = μ^{-m}`.
pub fn admissible_tangent_bundles(
    ms: &MultiplierStructure,
    max_degree: i64,
    coefficients: Option<&[Scalar]>,
) -> Result<Vec<FoliationClassification>> {
    let kind = require_paper_kind(ms)?;
    let n = ms.n();
    let c = coefficient_list(n, coefficients)?;
    let unit = |i: usize| BundleParam::monomial(ExponentVector::unit(n, i).0);
    let mut out = Vec::new();
    match kind {
        StructureKind::Classical => {
            for m in -1..=max_degree {
                let mut e = vec![0; n];
                e[0] = -m;
                out.push(field_entry(ms, BundleParam::monomial(e), fermat(n, &c, (m + 1) as u32))?);
            }
        }
        StructureKind::Generic => {
            out.push(field_entry(ms, BundleParam::trivial(n), diagonal_linear(n, &c, 1..=n))?);
            for j in 1..=n {
                out.push(field_entry(ms, unit(j), VectorField::coordinate(n, j).components().to_vec())?);
            }
        }
        StructureKind::Intermediary { .. } => {
            let g = ms.coincident_group().expect("intermediary");
            let block = ms.groups()[g].clone();
            out.push(field_entry(ms, BundleParam::trivial(n), diagonal_linear(n, &c, 1..=n))?);
            out.push(field_entry(ms, unit(block[0]), constant_on(n, &c, &block))?);
            for j in (1..=n).filter(|j| !block.contains(j)) {
                out.push(field_entry(ms, unit(j), VectorField::coordinate(n, j).components().to_vec())?);
            }
        }
        StructureKind::General => unreachable!(),
    }
    Ok(out)
}

/// Admissible conormal bundles `N*_F = L_b` of nonsingular codimension-one
/// distributions with witness 1-forms. The classical family is listed for
/// `b⁻¹ = μ^m`, `m ∈ {1, …, max_degree}`.
pub fn admissible_conormal_bundles(
    ms: &MultiplierStructure,
    max_degree: i64,
    coefficients: Option<&[Scalar]>,
) -> Result<Vec<FoliationClassification>> {
    let kind = require_paper_kind(ms)?;
    let n = ms.n();
    let c = coefficient_list(n, coefficients)?;
    let unit = |i: usize| BundleParam::monomial(ExponentVector::unit(n, i).0);
    let dz = |j: usize| {
        let mut comps = vec![Polynomial::zero(n); n];
        comps[j - 1] = Polynomial::one(n);
        comps
    };
    let mut out = Vec::new();
    match kind {
        StructureKind::Classical => {
            for m in 1..=max_degree {
                let mut e = vec![0; n];
                e[0] = m;
                out.push(form_entry(ms, BundleParam::monomial(e), fermat(n, &c, (m - 1) as u32))?);
            }
        }
        StructureKind::Generic => {
            for j in 1..=n {
                out.push(form_entry(ms, unit(j), dz(j))?);
            }
        }
        StructureKind::Intermediary { .. } => {
            let g = ms.coincident_group().expect("intermediary");
            let block = ms.groups()[g].clone();
            out.push(form_entry(ms, unit(block[0]), constant_on(n, &c, &block))?);
            for j in (1..=n).filter(|j| !block.contains(j)) {
                out.push(form_entry(ms, unit(j), dz(j))?);
            }
        }
        StructureKind::General => unreachable!(),
    }
    Ok(out)
}

fn require_generic(ms: &MultiplierStructure) -> Result<()> {
    if ms.kind() == StructureKind::Generic {
        Ok(())
    } else {
        Err(HopfError::Unsupported(format!(
            "monomial normal forms are defined on generic structures, got {}",
            ms.kind()
        )))
    }
}

/// Components `c_k z^{exp(b⁻¹) + shift_k}`, dropping those leaving `ℕⁿ`.
fn monomial_components(
    ms: &MultiplierStructure,
    b: &BundleParam,
    coefficients: &[Scalar],
    shift: i64,
) -> Result<Vec<Polynomial>> {
    require_generic(ms)?;
    b.check(ms)?;
    let n = ms.n();
    check_dim(n, coefficients.len())?;
    let Some(e) = b.exponents() else {
        return Err(HopfError::EmptyNormalForm);
    };
    let base = e.negated();
    let mut comps = vec![Polynomial::zero(n); n];
    for k in 1..=n {
        let exps: Option<Vec<u32>> = base
            .0
            .iter()
            .enumerate()
            .map(|(i, &d)| u32::try_from(d + if i + 1 == k { shift } else { 0 }).ok())
            .collect();
        if let Some(exps) = exps {
            comps[k - 1] = Polynomial::monomial(n, exps, coefficients[k - 1].clone());
        }
    }
    if comps.iter().all(Polynomial::is_zero) {
        return Err(HopfError::EmptyNormalForm);
    }
    Ok(comps)
}

/// `Σ c^k z^{d + e_k} ∂/∂z_k` with `d = exp(b⁻¹)` on a generic structure.
pub fn monomial_vf_from_bundle(ms: &MultiplierStructure, b: &BundleParam, coefficients: &[Scalar]) -> Result<VectorField> {
    VectorField::new(monomial_components(ms, b, coefficients, 1)?)
}

/// `Σ c_k z^{m − e_k} dz_k` with `m = exp(b⁻¹)` on a generic structure.
pub fn monomial_form_from_bundle(
    ms: &MultiplierStructure,
    b: &BundleParam,
    coefficients: &[Scalar],
) -> Result<DifferentialForm> {
    DifferentialForm::one_form(monomial_components(ms, b, coefficients, -1)?)
}

const MAX_LOCUS_VARS: usize = 24;

/// Common zeros in ℂⁿ∖{0} of components that are single monomials (or zero),
/// as the union of coordinate subspaces given by the minimal index sets
/// meeting the support of every nonzero component.
pub fn singular_locus_monomial(object: &FoliationObject) -> Result<CoordinateLocus> {
    let comps = object.components()?;
    let n = comps.len();
    let mut supports: Vec<u32> = Vec::new();
    for g in comps.iter().filter(|g| !g.is_zero()) {
        if !g.is_monomial() {
            return Err(HopfError::Unsupported(format!("component `{g}` is not a monomial")));
        }
        let (m, _) = g.terms().next().unwrap();
        supports.push(m.support().iter().fold(0u32, |acc, i| acc | 1 << (i - 1)));
    }
    if supports.is_empty() {
        return Err(HopfError::InvalidInput("the zero object defines no foliation".into()));
    }
    if supports.contains(&0) {
        return Ok(CoordinateLocus { n, components: Vec::new() });
    }
    if n > MAX_LOCUS_VARS {
        return Err(HopfError::Unsupported(format!("singular loci limited to n <= {MAX_LOCUS_VARS}")));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let hits = |s: u32| supports.iter().all(|&sup| sup & s != 0);
    let mut minimal: Vec<u32> = Vec::new();
    let mut candidates: Vec<u32> = (1..=full).collect();
    candidates.sort_by_key(|s| (s.count_ones(), *s));
    for s in candidates {
        if s == full || !hits(s) {
            continue;
        }
        if minimal.iter().any(|&t| t & s == t) {
            continue;
        }
        minimal.push(s);
    }
    let mut components: Vec<Vec<usize>> = minimal
        .into_iter()
        .map(|s| (1..=n).filter(|i| s & (1 << (i - 1)) != 0).collect())
        .collect();
    components.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(CoordinateLocus { n, components })
}

/// Largest `n` for which the elimination test on general homogeneous
/// components is run.
pub const ELIMINATION_MAX_N: usize = 3;

/// Decides whether homogeneous polynomials `g_1, …, g_n` in `n` variables
/// vanish simultaneously away from the origin.
///
/// With exactly `n` forms of degrees `d_i ≥ 1`, the common zero set is the
/// origin alone iff the degree-`D` part of the ideal is everything, where
/// `D = Σ(d_i − 1) + 1`; this is a rank computation on the Macaulay matrix.
pub fn has_nontrivial_common_zero(comps: &[Polynomial]) -> Result<bool> {
    let n = comps.len();
    let mut degrees = Vec::with_capacity(n);
    for g in comps {
        if g.is_zero() {
            // fewer than n hypersurfaces always meet in projective space
            return Ok(true);
        }
        match g.homogeneity() {
            Some(0) => return Ok(false),
            Some(d) => degrees.push(d),
            None => return Err(HopfError::Inhomogeneous),
        }
    }
    let target: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
    let columns = sections::compositions(target, n);
    let index: std::collections::HashMap<&[u32], usize> =
        columns.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut rows = Vec::new();
    for (g, &d) in comps.iter().zip(&degrees) {
        for shift in sections::compositions(target - d, n) {
            let mut row = vec![Scalar::zero(); columns.len()];
            let shifted = g.mul_monomial(&Monomial(shift), &Scalar::one());
            for (m, c) in shifted.terms() {
                row[index[m.0.as_slice()]] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(linalg::rank(&rows) < columns.len())
}

/// Exact nonsingularity verdict on ℂⁿ∖{0}.
///
/// Monomial components use the coordinate-locus computation, linear ones the
/// determinant of the coefficient matrix, homogeneous ones with `n ≤ 3` the
/// elimination test. Anything else is `Unknown`.
pub fn nonsingularity_check(object: &FoliationObject, ms: &MultiplierStructure) -> Result<Nonsingularity> {
    check_dim(ms.n(), object.n())?;
    let comps = object.components()?;
    let n = comps.len();
    if comps.iter().all(Polynomial::is_zero) {
        return Err(HopfError::InvalidInput("the zero object defines no foliation".into()));
    }
    if comps.iter().any(|g| g.as_constant().is_some_and(|c| !c.is_zero())) {
        return Ok(Nonsingularity::Nonsingular);
    }
    if comps.iter().all(|g| g.is_zero() || g.is_monomial()) {
        let locus = singular_locus_monomial(object)?;
        return Ok(if locus.is_empty() {
            Nonsingularity::Nonsingular
        } else {
            Nonsingularity::Singular { locus: SingularSet::Coordinate(locus) }
        });
    }
    let nonzero_degrees: Vec<Option<u32>> = comps.iter().filter(|g| !g.is_zero()).map(Polynomial::homogeneity).collect();
    if nonzero_degrees.iter().all(|d| *d == Some(1)) {
        let matrix: Vec<Vec<Scalar>> = comps
            .iter()
            .map(|g| {
                (0..n)
                    .map(|i| {
                        let mut e = vec![0; n];
                        e[i] = 1;
                        g.coefficient(&Monomial(e))
                    })
                    .collect()
            })
            .collect();
        let rank = linalg::rank(&matrix);
        return Ok(if rank == n {
            Nonsingularity::Nonsingular
        } else {
            Nonsingularity::Singular { locus: SingularSet::LinearSubspace { dimension: n - rank } }
        });
    }
    if n <= ELIMINATION_MAX_N && nonzero_degrees.iter().all(Option::is_some) {
        return Ok(if has_nontrivial_common_zero(&comps)? {
            Nonsingularity::Singular { locus: SingularSet::Cone }
        } else {
            Nonsingularity::Nonsingular
        });
    }
    Ok(Nonsingularity::Unknown)
}
