mod common;

use hopfkit::algebra::{DifferentialForm, Polynomial, VectorField};
use hopfkit::classify::{self, FoliationObject, Nonsingularity, Side};
use hopfkit::invariants;
use hopfkit::scalar;
use hopfkit::sections::{self, ExistencePredicate, SectionKind};
use hopfkit::{BundleParam, MultiplierStructure};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn seeded() -> impl Strategy<Value = u64> {
    any::<u64>()
}

fn sign(k: usize) -> hopfkit::scalar::Scalar {
    scalar::from_int(if k % 2 == 0 { 1 } else { -1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes(seed in seeded(), n in 2usize..=5, p in 0usize..=3) {
        let mut r = rng(seed);
        let w = random_form(&mut r, n, p.min(n), 4, 4);
        prop_assert!(w.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn wedge_graded_commutative(seed in seeded(), n in 2usize..=5, p in 0usize..=2, q in 0usize..=2) {
        let mut r = rng(seed);
        let a = random_form(&mut r, n, p.min(n), 3, 3);
        let b = random_form(&mut r, n, q.min(n), 3, 3);
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap().scale(&sign(a.degree() * b.degree()));
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn exterior_derivative_leibniz(seed in seeded(), n in 2usize..=5, p in 0usize..=2, q in 0usize..=2) {
        let mut r = rng(seed);
        let a = random_form(&mut r, n, p.min(n), 3, 3);
        let b = random_form(&mut r, n, q.min(n), 3, 3);
        let lhs = a.wedge(&b).unwrap().exterior_derivative();
        let rhs = a
            .exterior_derivative()
            .wedge(&b)
            .unwrap()
            .try_add(&a.wedge(&b.exterior_derivative()).unwrap().scale(&sign(a.degree())))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_product_rule(seed in seeded(), n in 1usize..=5, i in 1usize..=5) {
        let mut r = rng(seed);
        let i = i.min(n);
        let f = random_poly(&mut r, n, 4, 4);
        let g = random_poly(&mut r, n, 4, 4);
        prop_assert_eq!((&f * &g).partial(i), &f.partial(i) * &g + &f * &g.partial(i));
    }

    #[test]
    fn interior_product_antiderivation(seed in seeded(), n in 2usize..=5, p in 1usize..=2, q in 0usize..=2) {
        let mut r = rng(seed);
        let v = random_field(&mut r, n, 3);
        let a = random_form(&mut r, n, p.min(n), 3, 3);
        let b = random_form(&mut r, n, q.min(n), 3, 3);
        let lhs = v.interior_product(&a.wedge(&b).unwrap()).unwrap();
        let first = v.interior_product(&a).unwrap().wedge(&b).unwrap();
        let second = if b.degree() == 0 {
            DifferentialForm::zero(n, a.degree() + b.degree() - 1)
        } else {
            a.wedge(&v.interior_product(&b).unwrap()).unwrap().scale(&sign(a.degree()))
        };
        prop_assert_eq!(lhs, first.try_add(&second).unwrap());
    }

    #[test]
    fn evaluation_is_multiplicative(seed in seeded(), n in 1usize..=5) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 4, 4);
        let g = random_poly(&mut r, n, 4, 4);
        let x = random_point(&mut r, n);
        prop_assert_eq!((&f * &g).evaluate(&x).unwrap(), f.evaluate(&x).unwrap() * g.evaluate(&x).unwrap());
        prop_assert_eq!((&f + &g).evaluate(&x).unwrap(), f.evaluate(&x).unwrap() + g.evaluate(&x).unwrap());
    }

    #[test]
    fn solver_matches_concrete_multiplier_oracle(
        seed in seeded(),
        n in 3usize..=4,
        kind in prop_oneof![Just(SectionKind::Tangent), Just(SectionKind::OneForm), Just(SectionKind::TopMinusOneForm)],
    ) {
        let mut r = rng(seed);
        let groups_general = n == 4 && r.gen_bool(0.3);
        let ms = if groups_general {
            MultiplierStructure::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap()
        } else {
            random_structure(&mut r, n)
        };
        let e: Vec<i64> = (0..n).map(|_| r.gen_range(-2..=2)).collect();
        let b = BundleParam::monomial(e.clone());
        let dim = sections::dim_h0(kind, &ms, &b).unwrap();
        prop_assert_eq!(dim, oracle_dimension(&ms, kind, &b, oracle_bound(kind, &e)));
    }

    #[test]
    fn solution_count_is_product_of_simplex_counts(seed in seeded(), n in 3usize..=5) {
        let mut r = rng(seed);
        let ms = random_structure(&mut r, n);
        let e: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
        let b = BundleParam::monomial(e.clone());
        let set = sections::solve_tangent_sections(&ms, &b).unwrap();
        let mut expected = 0u64;
        for k in 1..=n {
            let target: Vec<i64> = (0..n).map(|i| -e[i] + i64::from(i + 1 == k)).collect();
            let mut per_k = 1u64;
            for g in ms.groups() {
                let s: i64 = g.iter().map(|&i| target[i - 1]).sum();
                per_k *= if s < 0 { 0 } else { binomial(s as u64 + g.len() as u64 - 1, g.len() as u64 - 1) };
            }
            expected += per_k;
        }
        prop_assert_eq!(set.dimension() as u64, expected);
        let mut sorted = set.elements.clone();
        sorted.sort();
        prop_assert_eq!(sorted, set.elements);
    }

    #[test]
    fn classical_sections_are_homogeneous(m in -1i64..=5, n in 3usize..=5) {
        let ms = MultiplierStructure::classical(n).unwrap();
        let mut e = vec![0i64; n];
        e[0] = -m;
        let tangent = sections::solve_tangent_sections(&ms, &BundleParam::monomial(e.clone())).unwrap();
        prop_assert!(tangent.elements.iter().all(|x| x.exponents.iter().sum::<u32>() as i64 == m + 1));
        e[0] = m;
        let forms = sections::solve_oneform_sections(&ms, &BundleParam::monomial(e)).unwrap();
        prop_assert!(forms.elements.iter().all(|x| x.exponents.iter().sum::<u32>() as i64 == m - 1));
    }

    #[test]
    fn predicates_match_dimensions(seed in seeded(), n in 3usize..=5) {
        let mut r = rng(seed);
        let ms = random_structure(&mut r, n);
        let e: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
        let b = BundleParam::monomial(e);
        for pred in ExistencePredicate::ALL {
            let (kind, param) = pred.section_space(&b);
            prop_assert_eq!(
                sections::predicate_existence(pred, &ms, &b).unwrap(),
                sections::dim_h0(kind, &ms, &param).unwrap() > 0
            );
        }
    }

    #[test]
    fn generic_tangent_sections_are_single_monomials(seed in seeded(), n in 3usize..=5) {
        let mut r = rng(seed);
        let ms = MultiplierStructure::generic(n).unwrap();
        let e: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
        let set = sections::solve_tangent_sections(&ms, &BundleParam::monomial(e)).unwrap();
        for k in 1..=n {
            prop_assert!(set.elements.iter().filter(|x| x.component == k).count() <= 1);
        }
    }

    #[test]
    fn generic_monomial_forms_are_integrable(seed in seeded(), n in 3usize..=5) {
        let mut r = rng(seed);
        let ms = MultiplierStructure::generic(n).unwrap();
        let m: Vec<i64> = (0..n).map(|_| r.gen_range(-1..=4)).collect();
        let b = BundleParam::monomial(m).inverse();
        let coeffs: Vec<_> = (0..n).map(|_| random_scalar(&mut r)).collect();
        match classify::monomial_form_from_bundle(&ms, &b, &coeffs) {
            Ok(w) => prop_assert!(invariants::frobenius_defect(&w).unwrap().is_integrable()),
            Err(hopfkit::HopfError::EmptyNormalForm) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn monomial_loci_never_isolated(seed in seeded(), n in 2usize..=5, conormal in any::<bool>()) {
        let mut r = rng(seed);
        let ms = MultiplierStructure::generic(n).unwrap();
        let a: Vec<i64> = (0..n).map(|_| r.gen_range(-2..=3)).collect();
        let b = BundleParam::monomial(a).inverse();
        let coeffs: Vec<_> = (0..n).map(|_| random_scalar(&mut r)).collect();
        let obj = if conormal {
            classify::monomial_form_from_bundle(&ms, &b, &coeffs).map(FoliationObject::Form)
        } else {
            classify::monomial_vf_from_bundle(&ms, &b, &coeffs).map(FoliationObject::Field)
        };
        if let Ok(obj) = obj {
            let locus = classify::singular_locus_monomial(&obj).unwrap();
            prop_assert!(locus.dimensions().iter().all(|&d| d >= 1));
        }
    }

    #[test]
    fn leaf_count_finiteness(n in 3u32..=8, m in 2i64..=9) {
        let c = invariants::leaf_count_classical(n, m).unwrap();
        prop_assert!(!c.extrapolated);
        prop_assert_eq!(c.count * BigInt::from(m - 1), BigInt::from(m).pow(n) - 1);
    }

    #[test]
    fn radial_identity_on_forms(seed in seeded(), n in 2usize..=4, k in 0u32..=3) {
        let mut r = rng(seed);
        let w = random_homogeneous_one_form(&mut r, n, k);
        prop_assert!(invariants::cartan_radial_check(&w).unwrap());
    }

    #[test]
    fn exact_forms_have_their_primitive(seed in seeded(), n in 2usize..=4, d in 1u32..=4) {
        let mut r = rng(seed);
        let t = random_homogeneous_poly(&mut r, n, d, 4);
        let w = DifferentialForm::from_polynomial(t.clone()).exterior_derivative();
        prop_assert!(invariants::is_closed(&w));
        prop_assert_eq!(invariants::primitive_of_closed(&w).unwrap(), t);
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn unrelated_parameter_has_no_sections() {
    for ms in paper_structures(4) {
        for kind in [SectionKind::Tangent, SectionKind::OneForm, SectionKind::TopMinusOneForm] {
            assert!(sections::solve(&ms, kind, &BundleParam::Unrelated).unwrap().is_empty());
        }
    }
}

#[test]
fn admissible_representatives_are_nonsingular_and_lie_in_their_sections() {
    for n in 3..=5 {
        for ms in paper_structures(n) {
            for side in [Side::Tangent, Side::Conormal] {
                let list = match side {
                    Side::Tangent => classify::admissible_tangent_bundles(&ms, 3, None).unwrap(),
                    Side::Conormal => classify::admissible_conormal_bundles(&ms, 3, None).unwrap(),
                };
                for c in list {
                    // the elimination test stops at n = 3
                    if n <= 3 || c.nonsingularity != Nonsingularity::Unknown {
                        assert_eq!(c.nonsingularity, Nonsingularity::Nonsingular, "{ms:?} {side:?} {:?}", c.bundle);
                    }
                    assert!(c.lies_in_section_space(&ms).unwrap());
                    let (pred, param) = match side {
                        Side::Tangent => (ExistencePredicate::TangentTwist, c.bundle.inverse()),
                        Side::Conormal => (ExistencePredicate::ConormalBundle, c.bundle.inverse()),
                    };
                    assert!(sections::predicate_existence(pred, &ms, &param).unwrap());
                }
            }
        }
    }
}

#[test]
fn fixed_point_oracle_on_planar_fields() {
    let z = |i| Polynomial::var(2, i);
    let v = VectorField::new(vec![&z(1) * &z(1), &z(2) * &z(2)]).unwrap();
    assert_eq!(
        invariants::fixed_point_oracle_p1(&v).unwrap(),
        invariants::FixedPointCount::Finite { with_multiplicity: 3, distinct: 3 }
    );
    // the radial field fixes every direction
    let radial = VectorField::radial(2);
    assert_eq!(invariants::fixed_point_oracle_p1(&radial).unwrap(), invariants::FixedPointCount::Infinite);
    let c = Polynomial::monomial(2, vec![0, 0], scalar::one());
    assert!(invariants::fixed_point_oracle_p1(&VectorField::new(vec![c.clone(), c]).unwrap()).is_ok());
}
