use alloc::vec::Vec;

use crate::arith::{Field, LaurentSeries, Polynomial, RationalFunction};
use crate::words::word::{Alphabet, Letter};

/// `phi(m_1 ... m_n) = m_1 T^{n-1} + ... + m_n`; `phi(empty) = 0`.
pub fn phi<F: Field>(word: &[Letter], alphabet: &Alphabet<F>) -> Polynomial<F> {
    let coeffs = word.iter().rev().map(|&l| alphabet.value(l).clone()).collect();
    Polynomial::new(alphabet.field().clone(), coeffs)
}

/// `Phi(M) = phi(M) / T^{|M|}`.
#[allow(non_snake_case)]
pub fn Phi<F: Field>(word: &[Letter], alphabet: &Alphabet<F>) -> RationalFunction<F> {
    RationalFunction::over_t_power(phi(word, alphabet), word.len())
}

/// `sum_{k=1}^{N} w(k) T^{-k}` for the given prefix, known down to `-N`.
pub fn series_of_prefix<F: Field>(prefix: &[Letter], alphabet: &Alphabet<F>) -> LaurentSeries<F> {
    let coeffs: Vec<F::Elem> = prefix.iter().map(|&l| alphabet.value(l).clone()).collect();
    LaurentSeries::from_descending(alphabet.field().clone(), -1, coeffs, -(prefix.len() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;
    use crate::words::word::{first_diff_rank, Word};
    use proptest::prelude::*;

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let ab = Alphabet::default();
        assert_eq!(phi(&w("1"), &ab), q(&[1]));
        assert_eq!(phi(&w("1221"), &ab), q(&[1, 2, 2, 1]));
        assert_eq!(phi(&w("12"), &ab), q(&[2, 1]));
        assert!(phi(&w(""), &ab).is_zero());
        let f = Phi(&w("1221"), &ab);
        assert_eq!(f.den(), &q(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn prefix_series() {
        let s = series_of_prefix(&w("122"), &Alphabet::default());
        assert_eq!(s.top_exponent(), Some(-1));
        assert_eq!(s.known_down(), -3);
        assert_eq!(s.coeff(-3), Some(Rationals.from_i64(2)));
    }

    fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 0..max).prop_map(Word::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn phi_homomorphism(a in word_strategy(40), b in word_strategy(40)) {
            let ab = Alphabet::default();
            let joined = Word::concat(&[&a, &b]);
            let lhs = phi(&joined, &ab);
            let rhs = &phi(&a, &ab).shift(b.len()) + &phi(&b, &ab);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rank_matches_valuation(a in word_strategy(30), b in word_strategy(30)) {
            let len = a.len().max(b.len()) + 1;
            let pad = |x: &Word, l: Letter| {
                let mut v = x.to_vec();
                v.resize(len, l);
                Word::new(v)
            };
            // distinct padding letters force a difference within `len`
            let (a, b) = (pad(&a, Letter::A), pad(&b, Letter::B));
            let ab = Alphabet::default();
            let t = first_diff_rank(a.iter().copied(), b.iter().copied(), len).unwrap();
            let d = series_of_prefix(&a, &ab).sub(&series_of_prefix(&b, &ab));
            prop_assert_eq!(d.top_exponent(), Some(-(t as i64)));
        }
    }
}
