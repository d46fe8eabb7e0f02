#![allow(dead_code)]

use hopfkit::algebra::{DifferentialForm, Monomial, Polynomial, VectorField};
use hopfkit::scalar::{self, Scalar};
use hopfkit::sections::SectionKind;
use hopfkit::{BundleParam, MultiplierStructure};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Small rational, occasionally with an imaginary part.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let re = scalar::from_ratio(nonzero_int(rng, 5), rng.gen_range(1..=3));
    if rng.gen_bool(0.2) {
        re + scalar::from_ratio(nonzero_int(rng, 3), rng.gen_range(1..=2)) * Scalar::i()
    } else {
        re
    }
}

pub fn random_exponents(rng: &mut impl Rng, n: usize, degree: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

pub fn random_poly(rng: &mut impl Rng, n: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let d = rng.gen_range(0..=max_degree);
        p.add_term(Monomial(random_exponents(rng, n, d)), random_scalar(rng));
    }
    p
}

pub fn random_homogeneous_poly(rng: &mut impl Rng, n: usize, degree: u32, max_terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=max_terms) {
            p.add_term(Monomial(random_exponents(rng, n, degree)), random_scalar(rng));
        }
    }
    p
}

pub fn random_form(rng: &mut impl Rng, n: usize, degree: usize, max_poly_degree: u32, max_terms: usize) -> DifferentialForm {
    let mut w = DifferentialForm::zero(n, degree);
    let mut idx: Vec<usize> = (1..=n).collect();
    for _ in 0..rng.gen_range(0..=max_terms) {
        idx.shuffle(rng);
        let chosen: Vec<usize> = idx[..degree].to_vec();
        w.insert(&chosen, random_poly(rng, n, max_poly_degree, 2)).unwrap();
    }
    w
}

pub fn random_homogeneous_one_form(rng: &mut impl Rng, n: usize, k: u32) -> DifferentialForm {
    let mut coeffs = vec![Polynomial::zero(n); n];
    while coeffs.iter().all(Polynomial::is_zero) {
        for c in coeffs.iter_mut() {
            *c = if rng.gen_bool(0.7) { random_homogeneous_poly(rng, n, k, 3) } else { Polynomial::zero(n) };
        }
    }
    DifferentialForm::one_form(coeffs).unwrap()
}

pub fn random_field(rng: &mut impl Rng, n: usize, max_degree: u32) -> VectorField {
    VectorField::new((0..n).map(|_| random_poly(rng, n, max_degree, 2)).collect()).unwrap()
}

pub fn random_point(rng: &mut impl Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| random_scalar(rng)).collect()
}

pub fn random_structure(rng: &mut impl Rng, n: usize) -> MultiplierStructure {
    match rng.gen_range(0..3) {
        0 => MultiplierStructure::classical(n).unwrap(),
        1 => MultiplierStructure::generic(n).unwrap(),
        _ => MultiplierStructure::intermediary(n, rng.gen_range(2..n)).unwrap(),
    }
}

/// Structures of the three classified kinds for a given `n`, with every
/// block size for the intermediary kind.
pub fn paper_structures(n: usize) -> Vec<MultiplierStructure> {
    let mut out = vec![MultiplierStructure::classical(n).unwrap(), MultiplierStructure::generic(n).unwrap()];
    for r in 2..n {
        out.push(MultiplierStructure::intermediary(n, r).unwrap());
    }
    out
}

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Concrete multipliers realizing the declared pattern: indices in the same
/// group share `1/p`, distinct groups get distinct primes, so the only
/// multiplicative relations are the declared ones.
pub fn concrete_multipliers(ms: &MultiplierStructure) -> Vec<BigRational> {
    (1..=ms.n())
        .map(|i| BigRational::new(BigInt::from(1), BigInt::from(PRIMES[ms.group_of(i)])))
        .collect()
}

fn weight(mu: &[BigRational], exps: &[i64]) -> BigRational {
    let mut w = BigRational::from_integer(BigInt::from(1));
    for (m, &e) in mu.iter().zip(exps) {
        let p = if e >= 0 { m.clone() } else { m.recip() };
        for _ in 0..e.unsigned_abs() {
            w *= &p;
        }
    }
    w
}

/// Section targets `τ_k`: a monomial `z^α` in slot `k` is invariant iff
/// `μ^α = μ^{τ_k}`.
fn targets(kind: SectionKind, n: usize, param: &[i64]) -> Vec<Vec<i64>> {
    (1..=n)
        .map(|k| {
            (0..n)
                .map(|i| {
                    let unit = i64::from(i + 1 == k);
                    match kind {
                        SectionKind::Tangent => -param[i] + unit,
                        SectionKind::OneForm => param[i] - unit,
                        SectionKind::TopMinusOneForm => param[i] - 1 + unit,
                    }
                })
                .collect()
        })
        .collect()
}

/// Brute-force section count: every `(k, α)` with `α` in the box
/// `[0, bound]ⁿ` whose weight under concrete multipliers matches the target.
pub fn oracle_dimension(ms: &MultiplierStructure, kind: SectionKind, param: &BundleParam, bound: u32) -> usize {
    let Some(e) = param.exponents() else {
        return 0;
    };
    let n = ms.n();
    let mu = concrete_multipliers(ms);
    let goals: Vec<BigRational> = targets(kind, n, &e.0).iter().map(|t| weight(&mu, t)).collect();
    let mut count = 0;
    let mut alpha = vec![0i64; n];
    loop {
        let w = weight(&mu, &alpha);
        count += goals.iter().filter(|g| **g == w).count();
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            alpha[i] += 1;
            if alpha[i] <= i64::from(bound) {
                break;
            }
            alpha[i] = 0;
            i += 1;
        }
    }
}

/// A box large enough to contain every solution: each coordinate of a
/// solution is bounded by the positive part of the largest target entry sum.
pub fn oracle_bound(kind: SectionKind, param: &[i64]) -> u32 {
    targets(kind, param.len(), param)
        .iter()
        .map(|t| t.iter().filter(|&&x| x > 0).sum::<i64>())
        .max()
        .unwrap_or(0) as u32
}
