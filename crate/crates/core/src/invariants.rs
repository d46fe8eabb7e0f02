//! Geometric identities and counts: Frobenius integrability, first integrals
//! of closed forms, the radial (Cartan) identity, the invariant-hypersurface
//! alternative, compact-leaf counts and the Hodge/Chern arithmetic that rules
//! out isolated singularities.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::univariate::UniPoly;
use crate::algebra::{DifferentialForm, Polynomial, VectorField};
use crate::classify::{singular_locus_monomial, CoordinateLocus, FoliationObject};
use crate::error::{check_dim, HopfError, Result};
use crate::multiplier::MultiplierStructure;
use crate::scalar::{self, Scalar};

fn require_one_form(w: &DifferentialForm) -> Result<()> {
    if w.degree() == 1 {
        Ok(())
    } else {
        Err(HopfError::InvalidInput(format!("expected a 1-form, got degree {}", w.degree())))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusDefect {
    /// `ω ∧ dω`.
    pub defect: DifferentialForm,
    /// Set when `n < 3`: 3-forms vanish identically, so the check says nothing.
    pub vacuous: bool,
}

impl FrobeniusDefect {
    pub fn is_integrable(&self) -> bool {
        self.defect.is_zero()
    }
}

pub fn frobenius_defect(w: &DifferentialForm) -> Result<FrobeniusDefect> {
    require_one_form(w)?;
    let defect = w.wedge(&w.exterior_derivative())?;
    Ok(FrobeniusDefect { defect, vacuous: w.n() < 3 })
}

pub fn is_closed(w: &DifferentialForm) -> bool {
    w.exterior_derivative().is_zero()
}

/// First integral `T` of a closed 1-form, `dT = ω`, with `T(0) = 0`.
///
/// Each monomial `c z^α dz_i` contributes `c z_i z^α / (|α| + 1)`, i.e. the
/// radial homotopy `T(z) = ∫₀¹ Σ z_i g_i(tz) dt`.
pub fn primitive_of_closed(w: &DifferentialForm) -> Result<Polynomial> {
    require_one_form(w)?;
    let dw = w.exterior_derivative();
    if let Some((idx, g)) = dw.terms().next() {
        let basis: Vec<String> = idx.iter().map(|i| format!("dz_{i}")).collect();
        return Err(HopfError::NotClosed(format!("({g}) {}", basis.join("∧"))));
    }
    let n = w.n();
    let mut t = Polynomial::zero(n);
    for (idx, g) in w.terms() {
        let i = idx[0];
        for (m, c) in g.terms() {
            let mut e = m.0.clone();
            e[i - 1] += 1;
            let weight = scalar::from_ratio(1, i64::from(m.degree()) + 1);
            t.add_term(crate::algebra::Monomial(e), c.clone() * weight);
        }
    }
    debug_assert_eq!(DifferentialForm::from_polynomial(t.clone()).exterior_derivative(), *w);
    Ok(t)
}

/// Checks `i_R dω + d(i_R ω) = (k + p) ω` for a `p`-form whose coefficients
/// are homogeneous of degree `k`; for 1-forms the factor is `k + 1`.
pub fn cartan_radial_check(w: &DifferentialForm) -> Result<bool> {
    if w.degree() == 0 {
        return Err(HopfError::InvalidInput("radial identity needs a form of positive degree".into()));
    }
    let k = w.homogeneity().ok_or(HopfError::Inhomogeneous)?;
    let r = VectorField::radial(w.n());
    let lhs = r
        .interior_product(&w.exterior_derivative())?
        .try_add(&r.interior_product(w)?.exterior_derivative())?;
    let factor = scalar::from_int(i64::from(k) + w.degree() as i64);
    Ok(lhs == w.scale(&factor))
}

#[derive(Debug, Clone, PartialEq)]
pub enum BrunellaVerdict {
    /// `{f = 0}` with `f = i_R ω ≢ 0`; `verified` records `df ∧ ω = f·dω`.
    InvariantHypersurface { f: Polynomial, verified: bool },
    /// `i_R ω ≡ 0`: the foliation is tangent to the radial fibration.
    TangentToFibration,
}

pub fn brunella_alternative(w: &DifferentialForm) -> Result<BrunellaVerdict> {
    require_one_form(w)?;
    w.homogeneity().ok_or(HopfError::Inhomogeneous)?;
    let defect = frobenius_defect(w)?;
    if !defect.is_integrable() {
        return Err(HopfError::NotIntegrable(defect.defect.term_count()));
    }
    let f = VectorField::radial(w.n())
        .interior_product(w)?
        .as_polynomial()
        .expect("contraction of a 1-form is a function");
    if f.is_zero() {
        return Ok(BrunellaVerdict::TangentToFibration);
    }
    let df = DifferentialForm::from_polynomial(f.clone()).exterior_derivative();
    let lhs = df.wedge(w)?;
    let rhs = w.exterior_derivative().mul_polynomial(&f)?;
    Ok(BrunellaVerdict::InvariantHypersurface { verified: lhs == rhs, f })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafCount {
    pub count: BigInt,
    /// `m = 1`, where the closed formula has a zero denominator and the
    /// geometric-series limit `n` is returned instead.
    pub extrapolated: bool,
}

fn geometric_count(n: u32, m: u64) -> LeafCount {
    if m == 1 {
        return LeafCount { count: BigInt::from(n), extrapolated: true };
    }
    let m = BigInt::from(m);
    let count = (num_traits::pow(m.clone(), n as usize) - BigInt::one()) / (m - BigInt::one());
    LeafCount { count, extrapolated: false }
}

/// `(mⁿ − 1)/(m − 1)` compact leaves of a generic foliation with tangent
/// bundle `L_{μ^{-m}}` on a classical manifold.
pub fn leaf_count_classical(n: u32, m: i64) -> Result<LeafCount> {
    if n < 3 {
        return Err(HopfError::InvalidInput(format!("leaf count is stated for n >= 3, got n = {n}")));
    }
    if m < 1 {
        return Err(HopfError::InvalidInput(format!("leaf count needs m >= 1, got m = {m}")));
    }
    Ok(geometric_count(n, m as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fixed_points", rename_all = "snake_case")]
pub enum FixedPointCount {
    /// `z₁g₂ − z₂g₁ ≡ 0`: every direction is invariant.
    Infinite,
    Finite { with_multiplicity: usize, distinct: usize },
}

/// Invariant directions `[z₁ : z₂]` of a homogeneous planar field, i.e. the
/// projective roots of `P = z₁g₂ − z₂g₁`.
pub fn fixed_point_oracle_p1(v: &VectorField) -> Result<FixedPointCount> {
    check_dim(2, v.n())?;
    if v.is_zero() {
        return Err(HopfError::InvalidInput("zero vector field".into()));
    }
    v.homogeneity().ok_or(HopfError::Inhomogeneous)?;
    let (z1, z2) = (Polynomial::var(2, 1), Polynomial::var(2, 2));
    let p = &(&z1 * v.component(2)) - &(&z2 * v.component(1));
    if p.is_zero() {
        return Ok(FixedPointCount::Infinite);
    }
    let total = p.homogeneity().expect("homogeneous") as usize;
    // dehomogenize at z₂ = 1; a missing top coefficient is the root [1 : 0]
    let mut coeffs = vec![Scalar::zero(); total + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[0] as usize] = c.clone();
    }
    let affine = UniPoly::new(coeffs);
    let at_infinity = usize::from(affine.degree() != Some(total));
    Ok(FixedPointCount::Finite {
        with_multiplicity: total,
        distinct: affine.distinct_root_count() + at_infinity,
    })
}

/// Compares the closed leaf-count formula with the degree-based fixed-point
/// count and the planar oracle. Purely diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafCountDiagnostic {
    pub field_degree: u32,
    /// `m` with `T_F = L_{μ^{-m}}`, i.e. field degree minus one.
    pub m: i64,
    pub formula: Option<LeafCount>,
    /// `((m+1)ⁿ − 1)/m` for `n = 2`, the fixed-point count of a degree-`(m+1)` map.
    pub degree_based: BigInt,
    pub oracle: FixedPointCount,
    pub formula_matches_oracle: bool,
    pub degree_based_matches_oracle: bool,
}

pub fn leaf_count_diagnostic(v: &VectorField) -> Result<LeafCountDiagnostic> {
    let oracle = fixed_point_oracle_p1(v)?;
    let d = v.homogeneity().ok_or(HopfError::Inhomogeneous)?;
    let m = i64::from(d) - 1;
    let formula = (m >= 1).then(|| geometric_count(2, m as u64));
    let degree_based = geometric_count(2, u64::from(d)).count;
    let distinct = match oracle {
        FixedPointCount::Finite { distinct, .. } => Some(BigInt::from(distinct)),
        FixedPointCount::Infinite => None,
    };
    Ok(LeafCountDiagnostic {
        field_degree: d,
        m,
        formula_matches_oracle: match (&formula, &distinct) {
            (Some(f), Some(c)) => f.count == *c,
            _ => false,
        },
        degree_based_matches_oracle: distinct.as_ref() == Some(&degree_based),
        formula,
        degree_based,
        oracle,
    })
}

/// Hodge numbers of a Hopf manifold: only `h^{0,0}`, `h^{0,1}`, `h^{n,n-1}`
/// and `h^{n,n}` are nonzero, all equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeTable {
    pub n: usize,
    /// `values[p][q] = h^{p,q}`.
    pub values: Vec<Vec<u32>>,
}

impl HodgeTable {
    pub fn get(&self, p: usize, q: usize) -> u32 {
        self.values[p][q]
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (p, row) in self.values.iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                if h != 0 {
                    out.push((p, q, h));
                }
            }
        }
        out
    }
}

pub fn hodge_numbers(n: usize) -> Result<HodgeTable> {
    if n < 2 {
        return Err(HopfError::InvalidInput(format!("Hopf manifolds have n >= 2, got {n}")));
    }
    let mut values = vec![vec![0u32; n + 1]; n + 1];
    values[0][0] = 1;
    values[0][1] = 1;
    values[n][n] = 1;
    values[n][n - 1] = 1;
    Ok(HodgeTable { n, values })
}

/// `c_n(TX) = Σ (−1)^{p+q} h^{p,q}`.
pub fn chern_top(n: usize) -> Result<i64> {
    let table = hodge_numbers(n)?;
    Ok(table
        .nonzero_entries()
        .into_iter()
        .map(|(p, q, h)| if (p + q) % 2 == 0 { i64::from(h) } else { -i64::from(h) })
        .sum())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub locus: CoordinateLocus,
    /// Locus is empty or every component has dimension at least one.
    pub consistent: bool,
    pub chern_top: i64,
    pub chain: Vec<String>,
}

/// Singular locus of a monomial normal form checked against the vanishing of
/// the top Chern class, which forbids a nonempty set of isolated zeros.
pub fn isolated_singularity_obstruction(
    object: &FoliationObject,
    ms: &MultiplierStructure,
) -> Result<ObstructionReport> {
    check_dim(ms.n(), object.n())?;
    let locus = singular_locus_monomial(object)?;
    let n = ms.n();
    let chern = chern_top(n)?;
    let consistent = locus.dimensions().iter().all(|&d| d >= 1);
    let chain = vec![
        "H^2(X, Z) = 0, so c_1(L) = 0".to_string(),
        format!("c_{n}(TX ⊗ L) = c_{n}(TX) = Σ(-1)^(p+q) h^(p,q) = {chern}"),
        "a nonempty isolated zero set would force c_n(TX ⊗ L) = Σ Milnor numbers > 0".to_string(),
        if consistent {
            "singular set is empty or positive dimensional".to_string()
        } else {
            "singular set contains isolated points".to_string()
        },
    ];
    Ok(ObstructionReport { locus, consistent, chern_top: chern, chain })
}
