use artin_core::braid::BraidedSpace;
use artin_core::field::Field;
use artin_core::fixtures::hecke_space;
use artin_core::shuffle_algebra::{
    closed_form_xy, closed_form_yx, gamma_product, shuffle_product, AlgebraElement, OneDimParams,
};
use proptest::prelude::*;

fn algebra_element(f: &Field, dv: usize, terms: &[(usize, usize, i64)]) -> AlgebraElement {
    let mut a = AlgebraElement::zero(f);
    for &(deg, idx, c) in terms {
        let deg = deg % 3;
        a.add(deg, idx % dv.pow(deg as u32), f.from_int(c));
    }
    a
}

fn terms() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..3, 0usize..8, -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shuffle_product_is_associative(t in 2i64..=4, a in terms(), b in terms(), c in terms()) {
        let f = Field::rationals();
        let v: BraidedSpace = hecke_space(&f.from_int(t)).unwrap();
        let (a, b, c) = (algebra_element(&f, 2, &a), algebra_element(&f, 2, &b), algebra_element(&f, 2, &c));
        let left = shuffle_product(&shuffle_product(&a, &b, &v).unwrap(), &c, &v).unwrap();
        let right = shuffle_product(&a, &shuffle_product(&b, &c, &v).unwrap(), &v).unwrap();
        prop_assert_eq!(left, right);
        let unit = AlgebraElement::unit(&f);
        prop_assert_eq!(shuffle_product(&unit, &a, &v).unwrap(), a.clone());
        prop_assert_eq!(shuffle_product(&a, &unit, &v).unwrap(), a);
    }

    #[test]
    fn divided_powers_match_shuffles(qn in -4i64..=4, n in 0usize..=4, m in 0usize..=4) {
        prop_assume!(qn != 0);
        let f = Field::rationals();
        let q = f.from_int(qn);
        let v = BraidedSpace::one_dim(&q).unwrap();
        let prod = shuffle_product(&AlgebraElement::x(&f, n), &AlgebraElement::x(&f, m), &v).unwrap();
        prop_assert_eq!(prod.coeff(n + m, 0), gamma_product(n, m, &q).unwrap());
    }

    #[test]
    fn closed_forms_at_unit_n_m(qn in 1i64..=3, pn in -3i64..=3, un in 1i64..=3) {
        prop_assume!(pn != 0);
        let f = Field::rationals();
        let pr = OneDimParams::new(f.from_int(qn), f.from_int(pn), f.from_int(un)).unwrap();
        // h = m term of x_m y_n is binom(n−1+m, m)_q; h = 0 term of y_n x_m is 1
        let xy = closed_form_xy(2, 2, &pr).unwrap();
        prop_assert_eq!(xy.coeff(4, 4, 0), artin_core::shuffles::quantum_binomial(3, 2, &pr.q).unwrap());
        let yx = closed_form_yx(2, 2, &pr).unwrap();
        prop_assert!(yx.coeff(4, 2, 0).is_one());
    }
}
