//! Fixture-level tests: every constructed hypergroup is compared against
//! independent group-level oracles (brute-force sums over the Cayley table),
//! and the worked numeric values for the two-coset fixture are frozen here.

mod common;

use common::{r, s};
use qhg_core::constructions::{
    double_coset_hypergroup, function_algebra, group_algebra_hopf, sweedler_fixture,
};
use qhg_core::dual::build_dual;
use qhg_core::group::FiniteGroup;
use qhg_core::hypergroup::Side;
use qhg_core::linalg::{basis, dot, proportionality, Matrix, Tensor2};
use qhg_core::scalar::Scalar;

/// Brute-force evaluation of the coset coproduct over the whole group:
/// `Δ(e_m)(p, q) = (1/|H|)·Σ_h [p·h·q ∈ D_m]`, checked constant on coset
/// blocks and compared entry-by-entry with the built comultiplication.
fn assert_comult_matches_group_oracle(g: &FiniteGroup, subgroup: &[usize]) {
    let h = double_coset_hypergroup(g, subgroup).unwrap();
    let cosets = g.double_cosets(subgroup);
    let k = cosets.len();
    let mut coset_of = vec![0usize; g.order()];
    for (m, coset) in cosets.iter().enumerate() {
        for &x in coset {
            coset_of[x] = m;
        }
    }
    let order = Scalar::from_int(subgroup.len() as i64);
    for m in 0..k {
        let computed = h.comult_apply(&basis(k, m));
        for p in 0..g.order() {
            for q in 0..g.order() {
                let hits = subgroup
                    .iter()
                    .filter(|&&hh| coset_of[g.mul(g.mul(p, hh), q)] == m)
                    .count();
                let value = Scalar::from_int(hits as i64).checked_div(&order).unwrap();
                assert_eq!(
                    computed.at(coset_of[p], coset_of[q]),
                    &value,
                    "oracle mismatch at basis {m}, pair ({p}, {q})"
                );
            }
        }
    }
}

#[test]
fn coset_coproducts_match_the_group_oracle() {
    let g = common::s3();
    assert_comult_matches_group_oracle(&g, &common::s3_transposition_subgroup(&g));
    assert_comult_matches_group_oracle(&g, &common::s3_alternating_subgroup(&g));
    assert_comult_matches_group_oracle(&g, &[g.identity()]);
    let d = common::d4();
    assert_comult_matches_group_oracle(&d, &common::d4_reflection_subgroup(&d));
}

#[test]
fn s3_fixture_frozen_values() {
    let g = common::s3();
    let h = double_coset_hypergroup(&g, &common::s3_transposition_subgroup(&g)).unwrap();
    assert_eq!(h.dim(), 2);
    assert_eq!(h.comult_matrix().column(0), vec![s(1), s(0), s(0), r(1, 2)]);
    assert_eq!(h.comult_matrix().column(1), vec![s(0), s(1), s(1), r(1, 2)]);
    assert_eq!(h.counit(), &vec![s(1), s(0)]);
    assert_eq!(h.left_integral(), &vec![s(2), s(4)]);
    assert_eq!(h.comult_apply(h.unit()), Tensor2::outer(h.unit(), h.unit()));

    // Counit and integral spaces are single lines.
    let counits = h.data().counit_space();
    assert_eq!(counits.unique(), Some(h.counit()));
    let left = h.data().integral_space(Side::Left);
    assert_eq!(left.len(), 1);
    assert!(proportionality(h.left_integral(), &left[0]).is_some());
    let right = h.data().integral_space(Side::Right);
    assert_eq!(right.len(), 1);
    assert!(proportionality(&left[0], &right[0]).is_some());

    // Gram of φ is diag(2, 4); ε and 0 are not faithful.
    let gram = h.data().gram_of(h.left_integral());
    assert_eq!(
        gram,
        Matrix::from_rows(vec![vec![s(2), s(0)], vec![s(0), s(4)]])
    );
    assert!(h.data().verify_faithful(h.left_integral()).passed());
    assert!(!h.data().verify_faithful(h.counit()).passed());
    assert!(!h.data().verify_faithful(&[s(0), s(0)]).passed());
}

#[test]
fn s3_fixture_dual_frozen_values() {
    let g = common::s3();
    let h = double_coset_hypergroup(&g, &common::s3_transposition_subgroup(&g)).unwrap();
    let pkg = build_dual(&h).unwrap();
    let dual = pkg.dual();
    // Pairing P[i][j] = φ(e_j·e_i) is diag(2, 4).
    assert_eq!(
        pkg.pairing(),
        &Matrix::from_rows(vec![vec![s(2), s(0)], vec![s(0), s(4)]])
    );
    // ω0·ω0 = 2ω0, ω0·ω1 = 2ω1 and ω1·ω1 = 4ω0 + 2ω1.
    let alg = dual.algebra();
    assert_eq!(alg.basis_product(0, 0), &vec![s(2), s(0)]);
    assert_eq!(alg.basis_product(0, 1), &vec![s(0), s(2)]);
    assert_eq!(alg.basis_product(1, 1), &vec![s(4), s(2)]);
    // Unit of the dual is ω0/2, which is the counit as a functional.
    assert_eq!(dual.unit(), &vec![r(1, 2), s(0)]);
    assert_eq!(pkg.values_of(dual.unit()), *h.counit());
    // Dual counit and integral: ε̂ = φ and φ̂ supported on ω0.
    assert_eq!(dual.counit(), &vec![s(2), s(4)]);
    assert_eq!(dual.left_integral(), &vec![s(1), s(0)]);
    // Δ̂(ω0) = (1/2)ω0⊗ω0.
    assert_eq!(
        dual.comult_matrix().column(0),
        vec![r(1, 2), s(0), s(0), s(0)]
    );
    // δ̂ is the unit of the dual, and δ̂ ▸ a = a since σ is trivial.
    assert_eq!(&dual.derived().delta, dual.unit());
    let x = vec![s(3), r(-2, 7)];
    assert_eq!(pkg.act_on_primal_left(&dual.derived().delta, &x), x);
    // The left co-integral space of the dual is the line through φ viewed
    // inside the dual via the pairing.
    let co = dual.cointegral_space(Side::Left);
    assert_eq!(co.len(), 1);
    let phi_in_dual = pkg.coeffs_of_values(h.left_integral());
    assert!(proportionality(&co[0], &phi_in_dual).is_some());
}

#[test]
fn normal_subgroup_coproduct_is_multiplicative_nonnormal_is_not() {
    let g = common::s3();
    let normal = double_coset_hypergroup(&g, &common::s3_alternating_subgroup(&g)).unwrap();
    assert!(normal.coproduct_is_homomorphism());
    let nonnormal = double_coset_hypergroup(&g, &common::s3_transposition_subgroup(&g)).unwrap();
    assert!(!nonnormal.coproduct_is_homomorphism());
    // Δ(e0)Δ(e1) = (1/4)e1⊗e1 while Δ(e0·e1) = 0.
    let prod = nonnormal.algebra().tensor_multiply(
        &nonnormal.comult_apply(&basis(2, 0)),
        &nonnormal.comult_apply(&basis(2, 1)),
    );
    let mut expected = Tensor2::zero(2);
    expected.set(1, 1, r(1, 4));
    assert_eq!(prod, expected);
}

#[test]
fn d4_fixture_has_three_cosets_and_full_duality() {
    let g = common::d4();
    let sub = common::d4_reflection_subgroup(&g);
    assert!(!g.is_normal(&sub));
    let h = double_coset_hypergroup(&g, &sub).unwrap();
    assert_eq!(h.dim(), 3);
    assert!(!h.coproduct_is_homomorphism());
    let t = h.classify_type();
    assert!(t.compact && t.discrete && t.finite);
    let pkg = build_dual(&h).unwrap();
    assert!(pkg.check_product_formulas().passed());
    assert!(pkg.check_slice_formulas().passed());
    assert!(pkg.bidual_check().unwrap().passed());
    assert!(pkg.dual_data_check().passed());
    assert!(pkg.radford_check().passed());
    assert!(pkg.compact_discrete_duality_check().passed());
}

#[test]
fn function_algebra_of_z2_matches_the_group_algebra_dual() {
    let z2 = qhg_core::group::cyclic_group(2);
    let kz2 = function_algebra(&z2).unwrap();
    let cz2 = group_algebra_hopf(&z2).unwrap();
    // Both are two-dimensional Hopf fixtures with homomorphic coproducts.
    assert!(kz2.coproduct_is_homomorphism());
    assert!(cz2.coproduct_is_homomorphism());
    // The dual of K(Z2) has the convolution table of the group algebra.
    let pkg = build_dual(&kz2).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(
                pkg.dual().algebra().basis_product(i, j),
                cz2.algebra().basis_product(i, j)
            );
        }
    }
}

#[test]
fn sweedler_phi_antipode_modular_interplay() {
    let h = sweedler_fixture().unwrap();
    let phi = h.left_integral();
    let d = h.derived();
    let n = h.dim();
    // φ(S(a)) = φ(a·δ) on the whole basis, with δ = g.
    for j in 0..n {
        assert_eq!(
            dot(phi, &d.antipode.column(j)),
            dot(phi, &h.multiply(&basis(n, j), &d.delta))
        );
    }
    // ψ = φ∘S is right invariant but not left invariant here.
    let left = h.data().integral_space(Side::Left);
    assert!(proportionality(&d.psi, &left[0]).is_none());
    // ε(δ) = 1 and S(δ) = δ⁻¹.
    assert_eq!(dot(h.counit(), &d.delta), s(1));
    assert_eq!(d.antipode.mul_vec(&d.delta), d.delta_inv);
}

#[test]
fn group_algebra_star_and_positivity() {
    let h = group_algebra_hopf(&common::s3()).unwrap();
    assert!(h.verify_star_axioms().unwrap().passed());
    assert_eq!(h.integral_positivity(h.left_integral()), Ok(true));
    assert_eq!(h.integral_positivity(&h.derived().psi), Ok(true));
    // The negated integral fails positivity.
    let neg: Vec<Scalar> = h.left_integral().iter().map(|c| -c).collect();
    assert_eq!(h.integral_positivity(&neg), Ok(false));
}
