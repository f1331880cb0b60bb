use artin_core::field::Field;
use artin_core::shuffles::{
    c_constant, c_marked, c_marked_enumerated, compositions, decompose_marked, enumerate_marked, enumerate_shuffles,
    quantum_binomial, MarkKind, ShufflePerm,
};
use proptest::prelude::*;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Applies adjacent transpositions (1-based positions) to the identity arrangement.
fn realise(word: &[usize], len: usize) -> Vec<usize> {
    let mut at: Vec<usize> = (1..=len).collect();
    for &g in word {
        at.swap(g - 1, g);
    }
    // at[k] is the letter now in position k+1; invert to get letter -> position
    let mut image = vec![0; len];
    for (pos, &letter) in at.iter().enumerate() {
        image[letter - 1] = pos + 1;
    }
    image
}

proptest! {
    #[test]
    fn shuffle_recurrences(p in 1usize..=8, q in 1usize..=8) {
        let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(c_constant(p, q), sign(p) * c_constant(p, q - 1) + c_constant(p - 1, q));
        prop_assert_eq!(c_constant(p, q), sign(q) * c_constant(p - 1, q) + c_constant(p, q - 1));
    }

    #[test]
    fn shuffles_are_counted_and_signed(p in 0usize..=5, q in 0usize..=5) {
        let all = enumerate_shuffles(p, q);
        prop_assert_eq!(all.len(), binom(p + q, p));
        let signed: i64 = all.iter().map(ShufflePerm::sign).sum();
        prop_assert_eq!(signed, c_constant(p, q));
        let qb = quantum_binomial(p + q, q, &Field::rationals().from_int(-1)).unwrap();
        prop_assert_eq!(qb, Field::rationals().from_int(signed));
        for s in &all {
            let word = s.word(0, p + q).unwrap();
            prop_assert_eq!(word.len(), s.inversions());
            prop_assert_eq!(realise(&word, p + q), s.image().to_vec());
        }
    }

    #[test]
    fn marked_decomposition(p in 1usize..=4, q in 1usize..=3, h in 0usize..=3, j in 0usize..=3, left in any::<bool>()) {
        let kind = if left { MarkKind::Left } else { MarkKind::Right };
        let shuffles = enumerate_marked(kind, p, q, h, j);
        prop_assume!(shuffles.is_ok());
        let shuffles = shuffles.unwrap();
        for s in &shuffles {
            let d = decompose_marked(s).unwrap();
            prop_assert_eq!(d.recompose(), s.base.image().to_vec());
        }
        prop_assert_eq!(c_marked(kind, p, q, h, j).unwrap(), c_marked_enumerated(kind, p, q, h, j).unwrap());
    }

    #[test]
    fn quantum_pascal_is_symmetric(a in 0usize..=9, b in 0usize..=9, qn in -4i64..=4) {
        prop_assume!(b <= a && qn != 0);
        let q = Field::rationals().from_int(qn);
        prop_assert_eq!(quantum_binomial(a, b, &q).unwrap(), quantum_binomial(a, a - b, &q).unwrap());
    }
}

#[test]
fn composition_counts() {
    for n in 1..=9 {
        for l in 1..=n {
            assert_eq!(compositions(n, l).len(), binom(n - 1, l - 1));
        }
    }
    assert_eq!(compositions(0, 0).len(), 1);
}
