//! Multiplier relation patterns of a diagonal contraction
//! `f(z) = (μ₁z₁, …, μₙzₙ)`.
//!
//! Multipliers are symbolic. A structure declares which of them coincide as an
//! ordered partition of the (1-based) indices; distinct groups are assumed to
//! satisfy no multiplicative relation. Two monomials `Πμᵢ^{eᵢ}` are then equal
//! exactly when their per-group exponent sums agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, HopfError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StructureKind {
    Classical,
    Generic,
    Intermediary { r: usize },
    General,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Classical => write!(f, "classical"),
            StructureKind::Generic => write!(f, "generic"),
            StructureKind::Intermediary { r } => write!(f, "intermediary(r={r})"),
            StructureKind::General => write!(f, "general"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierStructure {
    n: usize,
    groups: Vec<Vec<usize>>,
    // 0-based index -> position of its group in `groups`
    group_of: Vec<usize>,
}

impl MultiplierStructure {
    /// Builds a structure from 1-based index groups. Groups must partition
    /// `{1, …, n}`; indices inside a group are kept sorted.
    pub fn new(n: usize, groups: Vec<Vec<usize>>) -> Result<Self> {
        if n < 2 {
            return Err(HopfError::InvalidStructure(format!(
                "ambient dimension must be at least 2, got {n}"
            )));
        }
        let mut group_of = vec![usize::MAX; n];
        let mut sorted = Vec::with_capacity(groups.len());
        for (g, group) in groups.into_iter().enumerate() {
            if group.is_empty() {
                return Err(HopfError::InvalidStructure(format!("group {} is empty", g + 1)));
            }
            let mut group = group;
            group.sort_unstable();
            for &i in &group {
                if i == 0 || i > n {
                    return Err(HopfError::InvalidStructure(format!(
                        "index {i} outside 1..={n}"
                    )));
                }
                if group_of[i - 1] != usize::MAX {
                    return Err(HopfError::InvalidStructure(format!(
                        "index {i} appears in more than one group"
                    )));
                }
                group_of[i - 1] = g;
            }
            sorted.push(group);
        }
        if let Some(missing) = group_of.iter().position(|&g| g == usize::MAX) {
            return Err(HopfError::InvalidStructure(format!(
                "index {} is not covered by any group",
                missing + 1
            )));
        }
        Ok(Self { n, groups: sorted, group_of })
    }

    pub fn classical(n: usize) -> Result<Self> {
        Self::new(n, vec![(1..=n).collect()])
    }

    pub fn generic(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// `μ₁ = … = μ_r`, remaining multipliers free.
    pub fn intermediary(n: usize, r: usize) -> Result<Self> {
        if r < 2 || r + 1 > n {
            return Err(HopfError::InvalidStructure(format!(
                "intermediary structure needs 2 <= r <= n-1, got r={r}, n={n}"
            )));
        }
        let mut groups = vec![(1..=r).collect::<Vec<_>>()];
        groups.extend((r + 1..=n).map(|i| vec![i]));
        Self::new(n, groups)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Position of the group containing the 1-based index `i`.
    pub fn group_of(&self, i: usize) -> usize {
        self.group_of[i - 1]
    }

    pub fn kind(&self) -> StructureKind {
        let g = self.groups.len();
        if g == 1 {
            return StructureKind::Classical;
        }
        if g == self.n {
            return StructureKind::Generic;
        }
        let big: Vec<_> = self.groups.iter().filter(|grp| grp.len() > 1).collect();
        if big.len() == 1 {
            StructureKind::Intermediary { r: big[0].len() }
        } else {
            StructureKind::General
        }
    }

    /// For intermediary structures, the position of the group of equal
    /// multipliers.
    pub fn coincident_group(&self) -> Option<usize> {
        match self.kind() {
            StructureKind::Intermediary { .. } => self.groups.iter().position(|g| g.len() > 1),
            _ => None,
        }
    }

    pub fn class_of(&self, e: &ExponentVector) -> Result<EquivalenceKey> {
        check_dim(self.n, e.len())?;
        let mut sums = vec![0i64; self.groups.len()];
        for (i, &v) in e.0.iter().enumerate() {
            sums[self.group_of[i]] += v;
        }
        Ok(EquivalenceKey(sums))
    }

    pub fn classes_equal(&self, a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
        Ok(self.class_of(a)? == self.class_of(b)?)
    }

    /// Human readable name of the monomial with the given key, e.g. `μ_1^2 μ_3`
    /// or `μ^-1` for classical structures.
    pub fn display_key(&self, key: &EquivalenceKey) -> String {
        let classical = self.groups.len() == 1;
        let parts: Vec<String> = key
            .0
            .iter()
            .zip(&self.groups)
            .filter(|(s, _)| **s != 0)
            .map(|(&s, g)| {
                let base = if classical { "μ".to_string() } else { format!("μ_{}", g[0]) };
                if s == 1 {
                    base
                } else {
                    format!("{base}^{s}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Integer exponents of a monomial `Πμᵢ^{eᵢ}` (entries may be negative).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The exponent vector of `μ_i` (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|v| -v).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Per-group exponent sums, in group declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EquivalenceKey(pub Vec<i64>);

/// The factor `b` of a flat line bundle `L_b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BundleParam {
    Monomial { exponents: ExponentVector },
    /// `b` has no monomial expression in the multipliers.
    Unrelated,
}

impl BundleParam {
    pub fn monomial(exponents: Vec<i64>) -> Self {
        BundleParam::Monomial { exponents: ExponentVector(exponents) }
    }

    pub fn trivial(n: usize) -> Self {
        Self::monomial(vec![0; n])
    }

    pub fn exponents(&self) -> Option<&ExponentVector> {
        match self {
            BundleParam::Monomial { exponents } => Some(exponents),
            BundleParam::Unrelated => None,
        }
    }

    /// `b⁻¹`; an unrelated value stays unrelated.
    pub fn inverse(&self) -> Self {
        match self {
            BundleParam::Monomial { exponents } => BundleParam::Monomial { exponents: exponents.negated() },
            BundleParam::Unrelated => BundleParam::Unrelated,
        }
    }

    pub fn check(&self, ms: &MultiplierStructure) -> Result<()> {
        match self {
            BundleParam::Monomial { exponents } => check_dim(ms.n(), exponents.len()),
            BundleParam::Unrelated => Ok(()),
        }
    }

    pub fn display(&self, ms: &MultiplierStructure) -> String {
        match self {
            BundleParam::Monomial { exponents } => match ms.class_of(exponents) {
                Ok(key) => ms.display_key(&key),
                Err(_) => format!("{:?}", exponents.0),
            },
            BundleParam::Unrelated => "unrelated".into(),
        }
    }
}
