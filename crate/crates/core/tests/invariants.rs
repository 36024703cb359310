//! Structural invariants on randomly drawn inputs.

use std::sync::OnceLock;

use proptest::prelude::*;

use hopf12::bosonization::{radford_biproduct, Biproduct};
use hopf12::catalog::{build_c, double};
use hopf12::hopfcore::{Elem, FinDimHopf};
use hopf12::linalg::Matrix;
use hopf12::nichols::{poly_to_tensor, printed_presentation, symmetrizer_bruteforce, Poly, SparseBraiding, SymmetrizerStack};
use hopf12::repmod::{character, dual_module, index_set, is_isomorphic, tensor_module, v_ij};
use hopf12::scalars::{Rat, Scalar, ThetaSign};
use hopf12::ydcat::module_braiding;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-7i64..=7, 1i64..=5, -7i64..=7, 1i64..=5).prop_map(|(a, b, c, d)| Scalar::new(Rat::new(a, b), Rat::new(c, d)))
}

fn sparse_elem(dim: usize) -> impl Strategy<Value = Elem> {
    prop::collection::vec((0..dim, -3i64..=3, -3i64..=3), 1..4).prop_map(move |terms| {
        let mut v = vec![Scalar::zero(); dim];
        for (i, a, b) in terms {
            v[i] += &Scalar::from_ints(a, b);
        }
        v
    })
}

fn sign() -> impl Strategy<Value = ThetaSign> {
    prop_oneof![Just(ThetaSign::Plus), Just(ThetaSign::Minus)]
}

fn simple_index() -> impl Strategy<Value = (i64, i64)> {
    (0..index_set().len()).prop_map(|k| index_set()[k])
}

fn c_algebra() -> &'static FinDimHopf {
    static C: OnceLock<FinDimHopf> = OnceLock::new();
    C.get_or_init(build_c)
}

fn exterior_biproduct() -> &'static Biproduct {
    static B: OnceLock<Biproduct> = OnceLock::new();
    B.get_or_init(|| radford_biproduct(double(ThetaSign::Plus), "chi1").expect("biproduct"))
}

fn bialgebra_laws(h: &FinDimHopf, x: &Elem, y: &Elem) {
    let xy = h.mul(x, y);
    assert!(h.comult(&xy).sub(&h.mul_tensor(&h.comult(x), &h.comult(y))).is_zero(), "Δ multiplicative");
    assert_eq!(h.counit_of(&xy), &h.counit_of(x) * &h.counit_of(y));
    assert_eq!(h.antipode_of(&xy), h.mul(&h.antipode_of(y), &h.antipode_of(x)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..5)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), 5);
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn c_is_a_hopf_algebra_on_random_elements(x in sparse_elem(12), y in sparse_elem(12)) {
        bialgebra_laws(c_algebra(), &x, &y);
    }

    #[test]
    fn double_is_a_hopf_algebra_on_random_elements(s in sign(), x in sparse_elem(144), y in sparse_elem(144)) {
        bialgebra_laws(&double(s).hopf, &x, &y);
    }

    #[test]
    fn biproduct_is_a_hopf_algebra_on_random_elements(x in sparse_elem(24), y in sparse_elem(24)) {
        bialgebra_laws(&exterior_biproduct().hopf, &x, &y);
    }

    #[test]
    fn tensoring_with_a_character_shifts_indices(s in sign(), (i, j) in simple_index(), k in 0i64..6) {
        let d = double(s);
        let t = tensor_module(&v_ij(d, i, j).unwrap(), &character(d, k));
        prop_assert!(is_isomorphic(&t, &v_ij(d, i + k, j + 3 * k).unwrap()).is_yes());
    }

    #[test]
    fn double_dual_is_isomorphic(s in sign(), (i, j) in simple_index()) {
        let d = double(s);
        let v = v_ij(d, i, j).unwrap();
        prop_assert!(is_isomorphic(&dual_module(&dual_module(&v)), &v).is_yes());
    }

    #[test]
    fn braidings_satisfy_the_braid_relation(s in sign(), (i, j) in simple_index(), k in 0i64..6) {
        let d = double(s);
        let m = tensor_module(&character(d, k), &v_ij(d, i, j).unwrap());
        prop_assert!(module_braiding(&m).unwrap().braid_relation());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn factorized_symmetrizer_equals_permutation_sum((i, j) in simple_index()) {
        let b = module_braiding(&v_ij(double(ThetaSign::Plus), i, j).unwrap()).unwrap();
        let stack = SymmetrizerStack::new(&b, 4, 1024);
        let c = SparseBraiding::new(&b);
        for n in 2..=4 {
            prop_assert_eq!(&symmetrizer_bruteforce(&c, n), stack.symmetrizer(n));
        }
    }

    /// Once a symmetrizer vanishes, every later one does; finite rank sequences are palindromic.
    #[test]
    fn vanishing_propagates_and_finite_ranks_are_palindromic((i, j) in simple_index()) {
        let b = module_braiding(&v_ij(double(ThetaSign::Plus), i, j).unwrap()).unwrap();
        let ranks = SymmetrizerStack::new(&b, 6, 1024).ranks;
        if let Some(z) = ranks.iter().position(|&r| r == 0) {
            prop_assert!(ranks[z..].iter().all(|&r| r == 0));
            let top = &ranks[..z];
            prop_assert!(top.iter().eq(top.iter().rev()));
        }
    }

    /// Rewriting to normal form is idempotent and does not change the class in the Nichols algebra.
    #[test]
    fn normal_forms_are_stable(
        name in prop_oneof![Just("V31"), Just("V35"), Just("V22"), Just("V24")],
        word in prop::collection::vec(0usize..2, 2..5),
    ) {
        let p = printed_presentation(name).unwrap();
        let w: Poly = [(word.clone(), Scalar::one())].into_iter().collect();
        let r = p.reduce(&w);
        prop_assert_eq!(p.reduce(&r), r.clone());
        let b = module_braiding(&hopf12::repmod::module_by_name(double(ThetaSign::Plus), name).unwrap()).unwrap();
        let n = word.len();
        let stack = SymmetrizerStack::new(&b, n, 1024);
        let mut diff = poly_to_tensor(&w, 2);
        let nf = if r.is_empty() { vec![Scalar::zero(); diff.len()] } else { poly_to_tensor(&r, 2) };
        for (a, c) in diff.iter_mut().zip(&nf) {
            *a -= c;
        }
        prop_assert!(stack.is_relation_of_degree(n, &diff));
    }
}
