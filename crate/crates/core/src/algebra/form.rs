use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use crate::error::{check_dim, HopfError, Result};
use crate::scalar::Scalar;

/// Sorts `indices` in place and returns whether an odd permutation was
/// applied, or `None` when an index repeats.
pub(crate) fn sort_with_parity(indices: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    // insertion sort; tuples are short
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(odd)
    }
}

/// A `p`-form `Σ g_I dz_I` on ℂⁿ with polynomial coefficients, stored on
/// strictly increasing 1-based index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Polynomial>,
}

impl DifferentialForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self { n, degree, terms: BTreeMap::new() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let mut f = Self::zero(p.nvars(), 0);
        f.add_term(Vec::new(), p);
        f
    }

    /// `dz_i`.
    pub fn dz(n: usize, i: usize) -> Self {
        Self::basis(n, &[i]).expect("valid index")
    }

    /// `dz_{i₁} ∧ … ∧ dz_{i_p}` for an arbitrary index order.
    pub fn basis(n: usize, indices: &[usize]) -> Result<Self> {
        let mut f = Self::zero(n, indices.len());
        f.insert(indices, Polynomial::one(n))?;
        Ok(f)
    }

    /// `Σ g_i dz_i`.
    pub fn one_form(coefficients: Vec<Polynomial>) -> Result<Self> {
        let n = coefficients.len();
        let mut f = Self::zero(n, 1);
        for (i, g) in coefficients.into_iter().enumerate() {
            check_dim(n, g.nvars())?;
            f.add_term(vec![i + 1], g);
        }
        Ok(f)
    }

    /// Adds `g · dz_{indices}`; the tuple may be unsorted and is normalized
    /// with the matching sign. Repeated indices contribute nothing.
    pub fn insert(&mut self, indices: &[usize], g: Polynomial) -> Result<()> {
        check_dim(self.n, g.nvars())?;
        check_dim(self.degree, indices.len())?;
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(HopfError::InvalidInput(format!("form index {bad} outside 1..={}", self.n)));
        }
        let mut idx = indices.to_vec();
        match sort_with_parity(&mut idx) {
            None => Ok(()),
            Some(odd) => {
                self.add_term(idx, if odd { -g } else { g });
                Ok(())
            }
        }
    }

    fn add_term(&mut self, idx: Vec<usize>, g: Polynomial) {
        if g.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&idx) {
            Some(prev) => &prev + &g,
            None => g,
        };
        if !sum.is_zero() {
            self.terms.insert(idx, sum);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Polynomial {
        self.terms.get(indices).cloned().unwrap_or_else(|| Polynomial::zero(self.n))
    }

    /// `(g_1, …, g_n)` of a 1-form.
    pub fn one_form_coefficients(&self) -> Result<Vec<Polynomial>> {
        if self.degree != 1 {
            return Err(HopfError::InvalidInput(format!("expected a 1-form, got degree {}", self.degree)));
        }
        Ok((1..=self.n).map(|i| self.coefficient(&[i])).collect())
    }

    /// The coefficient of a 0-form.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        (self.degree == 0).then(|| self.coefficient(&[]))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        check_dim(self.degree, other.degree)?;
        let mut out = self.clone();
        for (idx, g) in &other.terms {
            out.add_term(idx.clone(), g.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (idx, g) in &self.terms {
            out.add_term(idx.clone(), g.scale(c));
        }
        out
    }

    /// Multiplication by a function.
    pub fn mul_polynomial(&self, p: &Polynomial) -> Result<Self> {
        check_dim(self.n, p.nvars())?;
        let mut out = Self::zero(self.n, self.degree);
        for (idx, g) in &self.terms {
            out.add_term(idx.clone(), g * p);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = Self::zero(self.n, self.degree + other.degree);
        if out.degree > self.n {
            return Ok(out);
        }
        for (a, ga) in &self.terms {
            for (b, gb) in &other.terms {
                let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some(odd) = sort_with_parity(&mut idx) {
                    let prod = ga * gb;
                    out.add_term(idx, if odd { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative. The derivative of an `n`-form is the empty form of
    /// degree `n + 1`.
    pub fn exterior_derivative(&self) -> Self {
        let mut out = Self::zero(self.n, self.degree + 1);
        if self.degree >= self.n {
            return out;
        }
        for (idx, g) in &self.terms {
            for j in 1..=self.n {
                if idx.contains(&j) {
                    continue;
                }
                let dg = g.partial(j);
                if dg.is_zero() {
                    continue;
                }
                // dz_j ∧ dz_I: moving dz_j past the smaller indices
                let pos = idx.iter().filter(|&&i| i < j).count();
                let mut new_idx = idx.clone();
                new_idx.insert(pos, j);
                out.add_term(new_idx, if pos % 2 == 1 { -dg } else { dg });
            }
        }
        out
    }

    /// Common total degree of all coefficient polynomials.
    pub fn homogeneity(&self) -> Option<u32> {
        let mut degrees = self.terms.values().map(Polynomial::homogeneity);
        let first = degrees.next()??;
        degrees.all(|d| d == Some(first)).then_some(first)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<BTreeMap<Vec<usize>, Scalar>> {
        let mut out = BTreeMap::new();
        for (idx, g) in &self.terms {
            let v = g.evaluate(point)?;
            if !v.is_zero() {
                out.insert(idx.clone(), v);
            }
        }
        Ok(out)
    }
}

fn fmt_indices(idx: &[usize]) -> String {
    idx.iter().map(|i| format!("dz_{i}")).collect::<Vec<_>>().join("∧")
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, g)| {
                let basis = fmt_indices(idx);
                match (g.as_constant(), basis.is_empty()) {
                    (_, true) => format!("{g}"),
                    (Some(c), false) if c.is_one() => basis,
                    (_, false) if g.is_monomial() => format!("{g} {basis}"),
                    _ => format!("({g}) {basis}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ g_i ∂/∂z_i` on ℂⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        for g in &components {
            check_dim(n, g.nvars())?;
        }
        Ok(Self { components })
    }

    pub fn zero(n: usize) -> Self {
        Self { components: vec![Polynomial::zero(n); n] }
    }

    /// `∂/∂z_j`.
    pub fn coordinate(n: usize, j: usize) -> Self {
        let mut v = Self::zero(n);
        v.components[j - 1] = Polynomial::one(n);
        v
    }

    /// The radial field `R = Σ z_i ∂/∂z_i`.
    pub fn radial(n: usize) -> Self {
        Self { components: (1..=n).map(|i| Polynomial::var(n, i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// Component `g_k`, 1-based.
    pub fn component(&self, k: usize) -> &Polynomial {
        &self.components[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn homogeneity(&self) -> Option<u32> {
        let mut degrees = self.components.iter().filter(|g| !g.is_zero()).map(Polynomial::homogeneity);
        let first = degrees.next()??;
        degrees.all(|d| d == Some(first)).then_some(first)
    }

    /// Contraction `i_v ω`; lowers the degree by one.
    pub fn interior_product(&self, form: &DifferentialForm) -> Result<DifferentialForm> {
        check_dim(self.n(), form.n())?;
        if form.degree() == 0 {
            return Err(HopfError::InvalidInput("interior product of a 0-form".into()));
        }
        let mut out = DifferentialForm::zero(form.n(), form.degree() - 1);
        for (idx, g) in form.terms() {
            for (pos, &i) in idx.iter().enumerate() {
                let vi = &self.components[i - 1];
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let coeff = vi * g;
                out.add_term(rest, if pos % 2 == 1 { -coeff } else { coeff });
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Scalar>> {
        self.components.iter().map(|g| g.evaluate(point)).collect()
    }

    pub fn is_zero_at(&self, point: &[Scalar]) -> Result<bool> {
        Ok(self.evaluate(point)?.iter().all(Zero::is_zero))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| {
                let basis = format!("∂/∂z_{}", k + 1);
                match g.as_constant() {
                    Some(c) if c.is_one() => basis,
                    _ if g.is_monomial() => format!("{g} {basis}"),
                    _ => format!("({g}) {basis}"),
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
