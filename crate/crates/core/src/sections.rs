//! Monomial bases of twisted section spaces on a diagonal Hopf manifold.
//!
//! A section of `E ⊗ L_b` pulls back to ℂⁿ∖{0} as a tuple of power series
//! whose coefficients survive only on exponents solving a multiplier
//! equation. With symbolic multipliers the equation for component `k` reads
//! `class(α) = class(target_k)`, where the target depends on the sheaf:
//!
//! | sheaf                  | parameter | target for component `k` |
//! |------------------------|-----------|--------------------------|
//! | `TX ⊗ L_{b⁻¹}`         | `b`       | `−exp(b) + e_k`          |
//! | `Ω¹ ⊗ L_a`             | `a`       | `exp(a) − e_k`           |
//! | `Ωⁿ⁻¹ ⊗ L_b`           | `b`       | `exp(b) − 𝟙 + e_k`       |
//!
//! The solutions `α ∈ ℕⁿ` of one target are the product over multiplier
//! groups of the compositions of the required group sum.

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::multiplier::{BundleParam, ExponentVector, MultiplierStructure, StructureKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionKind {
    /// `H⁰(X, TX ⊗ L_{b⁻¹})`, the sections defining a foliation with `T_F = L_b`.
    Tangent,
    /// `H⁰(X, Ω¹ ⊗ L_a)`.
    OneForm,
    /// `H⁰(X, Ωⁿ⁻¹ ⊗ L_b)`.
    TopMinusOneForm,
}

impl SectionKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(SectionKind::Tangent),
            "oneform" | "one_form" => Ok(SectionKind::OneForm),
            "nminus1" | "top_minus_one_form" | "topminusoneform" => Ok(SectionKind::TopMinusOneForm),
            other => Err(HopfError::InvalidInput(format!("unknown section kind `{other}`"))),
        }
    }

    /// Exponent vector that `α` must be equivalent to for component `k`
    /// (1-based).
    fn target(self, param: &ExponentVector, k: usize) -> Vec<i64> {
        let n = param.len();
        (0..n)
            .map(|i| {
                let unit = i64::from(i + 1 == k);
                let p = param.0[i];
                match self {
                    SectionKind::Tangent => -p + unit,
                    SectionKind::OneForm => p - unit,
                    SectionKind::TopMinusOneForm => p - 1 + unit,
                }
            })
            .collect()
    }
}

/// One basis monomial: `z^α ∂/∂z_k`, `z^α dz_k`, or
/// `z^α dz_1∧…∧\widehat{dz_k}∧…∧dz_n` depending on the section kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisElement {
    pub component: usize,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub kind: SectionKind,
    pub n: usize,
    pub elements: Vec<BasisElement>,
}

impl SolutionSet {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, component: usize, exponents: &[u32]) -> bool {
        self.elements
            .binary_search_by(|e| (e.component, e.exponents.as_slice()).cmp(&(component, exponents)))
            .is_ok()
    }
}

/// All ways to write `total` as an ordered sum of `parts` non-negative
/// integers, in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Every `α ∈ ℕⁿ` with the given per-group sums.
fn fiber(ms: &MultiplierStructure, sums: &[i64]) -> Vec<Vec<u32>> {
    if sums.iter().any(|&s| s < 0) {
        return Vec::new();
    }
    let mut partial: Vec<Vec<u32>> = vec![vec![0; ms.n()]];
    for (group, &s) in ms.groups().iter().zip(sums) {
        let parts = compositions(s as u32, group.len());
        let mut next = Vec::with_capacity(partial.len() * parts.len());
        for base in &partial {
            for comp in &parts {
                let mut alpha = base.clone();
                for (&idx, &v) in group.iter().zip(comp) {
                    alpha[idx - 1] = v;
                }
                next.push(alpha);
            }
        }
        partial = next;
    }
    partial
}

/// Monomial basis of the section space of `kind` twisted by `param`.
pub fn solve(ms: &MultiplierStructure, kind: SectionKind, param: &BundleParam) -> Result<SolutionSet> {
    param.check(ms)?;
    let n = ms.n();
    if kind == SectionKind::TopMinusOneForm && n < 3 {
        return Err(HopfError::InvalidInput(format!(
            "(n-1)-form sections are only computed for n >= 3, got n = {n}"
        )));
    }
    let mut elements = Vec::new();
    if let Some(exps) = param.exponents() {
        for k in 1..=n {
            let target = ExponentVector(kind.target(exps, k));
            let key = ms.class_of(&target)?;
            let mut alphas = fiber(ms, &key.0);
            alphas.sort();
            elements.extend(alphas.into_iter().map(|exponents| BasisElement { component: k, exponents }));
        }
    }
    Ok(SolutionSet { kind, n, elements })
}

pub fn solve_tangent_sections(ms: &MultiplierStructure, b: &BundleParam) -> Result<SolutionSet> {
    solve(ms, SectionKind::Tangent, b)
}

pub fn solve_oneform_sections(ms: &MultiplierStructure, a: &BundleParam) -> Result<SolutionSet> {
    solve(ms, SectionKind::OneForm, a)
}

pub fn solve_nminus1form_sections(ms: &MultiplierStructure, b: &BundleParam) -> Result<SolutionSet> {
    solve(ms, SectionKind::TopMinusOneForm, b)
}

pub fn dim_h0(kind: SectionKind, ms: &MultiplierStructure, param: &BundleParam) -> Result<usize> {
    solve(ms, kind, param).map(|s| s.dimension())
}

/// Closed-form existence criteria for nonzero twisted sections, valid for
/// classical, generic and intermediary structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExistencePredicate {
    /// `H⁰(Ωⁿ⁻¹ ⊗ L_b) ≠ 0`, parameter `b`.
    NMinusOneForms,
    /// `H⁰(TX ⊗ L_a) ≠ 0`, parameter `a`.
    TangentTwist,
    /// `H⁰(Ω¹ ⊗ L_a) ≠ 0`, parameter `a`.
    OneForms,
    /// Admissible conormal bundle `N*_F = L_b` of a codimension-one
    /// distribution; the parameter is `b⁻¹`.
    ConormalBundle,
}

impl ExistencePredicate {
    pub const ALL: [ExistencePredicate; 4] = [
        ExistencePredicate::NMinusOneForms,
        ExistencePredicate::TangentTwist,
        ExistencePredicate::OneForms,
        ExistencePredicate::ConormalBundle,
    ];

    /// The section space whose non-vanishing the predicate decides, and the
    /// parameter to hand to the solver.
    pub fn section_space(self, param: &BundleParam) -> (SectionKind, BundleParam) {
        match self {
            ExistencePredicate::NMinusOneForms => (SectionKind::TopMinusOneForm, param.clone()),
            ExistencePredicate::TangentTwist => (SectionKind::Tangent, param.inverse()),
            ExistencePredicate::OneForms | ExistencePredicate::ConormalBundle => (SectionKind::OneForm, param.clone()),
        }
    }
}

/// Key of `param` split into the coincident-group sum and the free
/// exponents, for intermediary structures.
struct Split {
    r: i64,
    big: i64,
    free: Vec<i64>,
}

/// `∃ j₀: free[j₀] ≥ lo_special ∧ ∀ j ≠ j₀: free[j] ≥ lo_rest`
fn one_relaxed(free: &[i64], lo_special: i64, lo_rest: i64) -> bool {
    (0..free.len()).any(|j0| {
        free.iter()
            .enumerate()
            .all(|(j, &m)| if j == j0 { m >= lo_special } else { m >= lo_rest })
    })
}

pub fn predicate_existence(pred: ExistencePredicate, ms: &MultiplierStructure, param: &BundleParam) -> Result<bool> {
    param.check(ms)?;
    let kind = ms.kind();
    if kind == StructureKind::General {
        return Err(HopfError::Unsupported(
            "closed-form existence criteria are only available for classical, generic and intermediary structures"
                .into(),
        ));
    }
    let Some(exps) = param.exponents() else {
        return Ok(false);
    };
    let key = ms.class_of(exps)?;
    let n = ms.n() as i64;
    use ExistencePredicate::*;

    Ok(match kind {
        StructureKind::Classical => {
            let m = key.0[0];
            match pred {
                NMinusOneForms => m >= n - 1,
                TangentTwist => m >= -1,
                OneForms | ConormalBundle => m >= 1,
            }
        }
        StructureKind::Generic => {
            let m = &key.0;
            match pred {
                NMinusOneForms => one_relaxed(m, 0, 1),
                TangentTwist => one_relaxed(m, -1, 0),
                OneForms => m.iter().all(|&v| v >= 0) && m.iter().any(|&v| v >= 1),
                ConormalBundle => m.iter().all(|&v| v >= 0) && m.iter().sum::<i64>() >= 1,
            }
        }
        StructureKind::Intermediary { r } => {
            let g = ms.coincident_group().expect("intermediary structure has a coincident group");
            let s = Split {
                r: r as i64,
                big: key.0[g],
                free: key.0.iter().enumerate().filter(|(i, _)| *i != g).map(|(_, &v)| v).collect(),
            };
            let all = |lo: i64| s.free.iter().all(|&v| v >= lo);
            match pred {
                NMinusOneForms => {
                    (s.big >= s.r - 1 && all(1)) || (s.big >= s.r && one_relaxed(&s.free, 0, 1))
                }
                TangentTwist => (s.big >= -1 && all(0)) || (s.big >= 0 && one_relaxed(&s.free, -1, 0)),
                OneForms | ConormalBundle => {
                    (s.big >= 1 && all(0)) || (s.big >= 0 && all(0) && s.free.iter().any(|&v| v >= 1))
                }
            }
        }
        StructureKind::General => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(n: usize) -> MultiplierStructure {
        MultiplierStructure::generic(n).unwrap()
    }

    fn classical(n: usize) -> MultiplierStructure {
        MultiplierStructure::classical(n).unwrap()
    }

    fn mono(v: &[i64]) -> BundleParam {
        BundleParam::monomial(v.to_vec())
    }

    fn el(k: usize, a: &[u32]) -> BasisElement {
        BasisElement { component: k, exponents: a.to_vec() }
    }

    #[test]
    fn tangent_examples() {
        let s = solve_tangent_sections(&generic(3), &mono(&[1, 0, 0])).unwrap();
        assert_eq!(s.elements, vec![el(1, &[0, 0, 0])]);

        let s = solve_tangent_sections(&generic(3), &BundleParam::trivial(3)).unwrap();
        assert_eq!(s.elements, vec![el(1, &[1, 0, 0]), el(2, &[0, 1, 0]), el(3, &[0, 0, 1])]);

        // b⁻¹ = μ: every |α| = 2, six monomials per component
        let s = solve_tangent_sections(&classical(3), &mono(&[-1, 0, 0])).unwrap();
        assert_eq!(s.dimension(), 18);
        assert!(s.elements.iter().all(|e| e.exponents.iter().sum::<u32>() == 2));
    }

    #[test]
    fn oneform_examples() {
        let s = solve_oneform_sections(&generic(3), &mono(&[0, 1, 0])).unwrap();
        assert_eq!(s.elements, vec![el(2, &[0, 0, 0])]);
        let s = solve_oneform_sections(&classical(3), &mono(&[2, 0, 0])).unwrap();
        assert_eq!(s.dimension(), 9);
        assert!(solve_oneform_sections(&classical(3), &BundleParam::Unrelated).unwrap().is_empty());
    }

    #[test]
    fn nminus1_examples() {
        let s = solve_nminus1form_sections(&classical(3), &mono(&[2, 0, 0])).unwrap();
        assert_eq!(s.elements, vec![el(1, &[0, 0, 0]), el(2, &[0, 0, 0]), el(3, &[0, 0, 0])]);
        assert!(solve_nminus1form_sections(&classical(3), &mono(&[1, 0, 0])).unwrap().is_empty());
        // b = μ₁μ₂μ₃: α + 𝟙 − e_i = 𝟙 forces α = e_i
        let s = solve_nminus1form_sections(&generic(3), &mono(&[1, 1, 1])).unwrap();
        assert_eq!(s.elements, vec![el(1, &[1, 0, 0]), el(2, &[0, 1, 0]), el(3, &[0, 0, 1])]);
        assert!(solve_nminus1form_sections(&generic(2), &mono(&[1, 1])).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_h0(SectionKind::Tangent, &generic(4), &BundleParam::trivial(4)).unwrap(), 4);
        assert_eq!(dim_h0(SectionKind::OneForm, &classical(3), &mono(&[3, 0, 0])).unwrap(), 18);
        assert_eq!(dim_h0(SectionKind::TopMinusOneForm, &classical(3), &mono(&[1, 0, 0])).unwrap(), 0);
        assert!(dim_h0(SectionKind::OneForm, &classical(3), &mono(&[1, 0])).is_err());
    }

    #[test]
    fn predicate_examples() {
        use ExistencePredicate::*;
        assert!(predicate_existence(NMinusOneForms, &classical(3), &mono(&[2, 0, 0])).unwrap());
        assert!(predicate_existence(TangentTwist, &generic(3), &mono(&[-1, 0, 0])).unwrap());
        assert!(!predicate_existence(OneForms, &generic(3), &BundleParam::trivial(3)).unwrap());
        assert!(!predicate_existence(OneForms, &generic(3), &BundleParam::Unrelated).unwrap());
        let general = MultiplierStructure::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(matches!(
            predicate_existence(OneForms, &general, &BundleParam::trivial(4)),
            Err(HopfError::Unsupported(_))
        ));
    }

    #[test]
    fn general_structures_still_solve() {
        let general = MultiplierStructure::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        // key (2, 1); components 1,2 need group sums (1, 1), components 3,4 need (2, 0)
        let s = solve_oneform_sections(&general, &mono(&[2, 0, 1, 0])).unwrap();
        assert_eq!(s.dimension(), 2 * (2 * 2) + 2 * (3 * 1));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 4), vec![vec![0, 0, 0, 0]]);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        let c = compositions(4, 3);
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(c, sorted);
    }

    #[test]
    fn ordering_is_deterministic() {
        let ms = MultiplierStructure::new(4, vec![vec![3, 1], vec![2], vec![4]]).unwrap();
        let s = solve_tangent_sections(&ms, &mono(&[-2, 0, 0, 0])).unwrap();
        let mut sorted = s.elements.clone();
        sorted.sort();
        assert_eq!(s.elements, sorted);
        assert!(s.contains(1, &[3, 0, 0, 0]));
    }
}
