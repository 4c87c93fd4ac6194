//! Property tests for the exact arithmetic and linear-algebra layer.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use qhg_core::constructions::double_coset_hypergroup;
use qhg_core::dual::DualPackage;
use qhg_core::linalg::{self, basis, dot, Matrix, Tensor2};
use qhg_core::scalar::Scalar;
use qhg_core::QuantumHypergroup;

fn coset_fixture() -> &'static QuantumHypergroup {
    static FIXTURE: OnceLock<QuantumHypergroup> = OnceLock::new();
    FIXTURE.get_or_init(|| {
        let g = common::s3();
        double_coset_hypergroup(&g, &common::s3_transposition_subgroup(&g)).unwrap()
    })
}

fn coset_dual() -> &'static DualPackage {
    static FIXTURE: OnceLock<DualPackage> = OnceLock::new();
    FIXTURE.get_or_init(|| qhg_core::dual::build_dual(coset_fixture()).unwrap())
}

fn group_algebra_fixture() -> &'static QuantumHypergroup {
    static FIXTURE: OnceLock<QuantumHypergroup> = OnceLock::new();
    FIXTURE.get_or_init(|| qhg_core::constructions::group_algebra_hopf(&common::s3()).unwrap())
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
        .prop_map(|(rn, rd, in_, id)| Scalar::from_parts(rn, rd, in_, id))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar_strategy().prop_filter("non-zero", |s| !s.is_zero())
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols).prop_map(move |data| {
        let mut idx = 0;
        Matrix::from_fn(rows, cols, |_, _| {
            let v = data[idx].clone();
            idx += 1;
            v
        })
    })
}

fn vector_strategy(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar_strategy(), n)
}

/// Cofactor determinant, independent of the elimination code under test.
fn det3(m: &Matrix) -> Scalar {
    let a = |i, j| m[(i, j)].clone();
    &a(0, 0) * &(&(&a(1, 1) * &a(2, 2)) - &(&a(1, 2) * &a(2, 1)))
        - &(&a(0, 1) * &(&(&a(1, 0) * &a(2, 2)) - &(&a(1, 2) * &a(2, 0))))
        + &(&a(0, 2) * &(&(&a(1, 0) * &a(2, 1)) - &(&a(1, 1) * &a(2, 0))))
}

fn is_positive_real(s: &Scalar) -> bool {
    s.is_positive_real()
}

proptest! {
    #[test]
    fn field_axioms_hold_exactly(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Scalar::zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in scalar_strategy(), b in nonzero_scalar()) {
        prop_assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn conjugation_is_a_multiplicative_involution(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn solve_resubstitutes_exactly(m in matrix_strategy(3, 3), x in vector_strategy(3)) {
        let rhs = m.mul_vec(&x);
        let sol = m.solve(&rhs).expect("constructed system is consistent");
        prop_assert_eq!(m.mul_vec(&sol), rhs);
    }

    #[test]
    fn kernel_vectors_annihilate_and_count(m in matrix_strategy(3, 4)) {
        let kernel = m.kernel();
        for v in &kernel {
            prop_assert!(linalg::is_zero_vec(&m.mul_vec(v)));
        }
        prop_assert_eq!(m.rank() + kernel.len(), 4);
    }

    #[test]
    fn kron_satisfies_the_mixed_product_rule(
        a in matrix_strategy(2, 2),
        b in matrix_strategy(2, 2),
        c in matrix_strategy(2, 2),
        d in matrix_strategy(2, 2),
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn kron_acts_factorwise_on_tensors(
        m in matrix_strategy(2, 2),
        n in matrix_strategy(2, 2),
        x in vector_strategy(2),
        y in vector_strategy(2),
    ) {
        let lhs = m.kron(&n).mul_vec(&Tensor2::outer(&x, &y).data);
        let rhs = Tensor2::outer(&m.mul_vec(&x), &n.mul_vec(&y)).data;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_is_associative_on_the_flattening(
        a in matrix_strategy(2, 2),
        b in matrix_strategy(2, 2),
        c in matrix_strategy(2, 2),
    ) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    /// For nonsingular Hermitian matrices, exact PSD (= PD here) agrees
    /// with positivity of all leading principal minors.
    #[test]
    fn psd_matches_leading_principal_minors(
        d in proptest::collection::vec((-9i64..=9, 1i64..=9), 3),
        off in proptest::collection::vec(scalar_strategy(), 3),
    ) {
        let mut g = Matrix::zero(3, 3);
        for i in 0..3 {
            g[(i, i)] = Scalar::from_ratio(d[i].0, d[i].1);
        }
        let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            g[(i, j)] = off[k].clone();
            g[(j, i)] = off[k].conj();
        }
        let m1 = g[(0, 0)].clone();
        let m2 = &(&g[(0, 0)] * &g[(1, 1)]) - &(&g[(0, 1)] * &g[(1, 0)]);
        let m3 = det3(&g);
        prop_assume!(!m3.is_zero());
        let minors_positive =
            is_positive_real(&m1) && is_positive_real(&m2) && is_positive_real(&m3);
        prop_assert_eq!(g.psd_check().unwrap(), minors_positive);
    }
}

proptest! {
    /// Bilinearity of the structure-constant product and the unit law,
    /// probed on the two-coset fixture.
    #[test]
    fn multiplication_is_bilinear_with_unit(
        x in vector_strategy(2),
        y in vector_strategy(2),
        z in vector_strategy(2),
        c in scalar_strategy(),
    ) {
        let h = coset_fixture();
        let lhs = h.multiply(&linalg::add_vec(&x, &linalg::scale_vec(&c, &y)), &z);
        let rhs = linalg::add_vec(
            &h.multiply(&x, &z),
            &linalg::scale_vec(&c, &h.multiply(&y, &z)),
        );
        prop_assert_eq!(lhs, rhs);
        let lhs = h.multiply(&z, &linalg::add_vec(&x, &linalg::scale_vec(&c, &y)));
        let rhs = linalg::add_vec(
            &h.multiply(&z, &x),
            &linalg::scale_vec(&c, &h.multiply(&z, &y)),
        );
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(h.multiply(h.unit(), &x), x.clone());
        prop_assert_eq!(h.multiply(&x, h.unit()), x);
    }

    /// Star axioms on random vectors of the group algebra fixture.
    #[test]
    fn star_is_an_antimultiplicative_involution(
        x in vector_strategy(6),
        y in vector_strategy(6),
    ) {
        let alg = group_algebra_fixture().algebra();
        let star = |v: &[Scalar]| alg.apply_star(v).unwrap();
        prop_assert_eq!(star(&star(&x)), x.clone());
        prop_assert_eq!(
            star(&alg.multiply(&x, &y)),
            alg.multiply(&star(&y), &star(&x))
        );
    }

    /// Pairing compatibility of the module actions on random triples.
    #[test]
    fn actions_are_adjoint_to_the_dual_product(
        w1 in vector_strategy(2),
        w2 in vector_strategy(2),
        a in vector_strategy(2),
    ) {
        let pkg = coset_dual();
        let lhs = dot(&pkg.values_of(&w2), &pkg.act_on_primal_left(&w1, &a));
        let rhs = dot(&pkg.values_of(&pkg.dual_product(&w2, &w1)), &a);
        prop_assert_eq!(lhs, rhs);
        let lhs = dot(&pkg.values_of(&w2), &pkg.act_on_primal_right(&a, &w1));
        let rhs = dot(&pkg.values_of(&pkg.dual_product(&w1, &w2)), &a);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn kernel_of_injective_fixture_maps_is_empty() {
    // The comultiplications of the fixtures are injective: Δ has a left
    // inverse by the counit law.
    let h = coset_fixture();
    assert!(h.comult_matrix().kernel().is_empty());
    assert_eq!(h.comult_matrix().rank(), 2);
    let _ = basis(2, 0);
}
