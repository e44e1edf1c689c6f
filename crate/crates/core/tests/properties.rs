use proptest::prelude::*;

use wirecat::cayley::{format_cayley, parse_cayley};
use wirecat::corpus::corpus_up_to;
use wirecat::karoubi::{counit, karoubi_envelope, theorem_regular_iff_factorization};
use wirecat::semigroup::{power_semigroup, FiniteSemigroup};
use wirecat::semigroupad::{
    induced_operation, kleisli_star, FinFunction, NePow, Semigroupad, Writer,
};
use wirecat::theta::theta_properties;

fn corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: std::sync::OnceLock<Vec<FiniteSemigroup>> = std::sync::OnceLock::new();
    CORPUS.get_or_init(|| corpus_up_to(3).unwrap())
}

/// Corpus members and products of two of them (orders up to 9).
fn semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    let n = corpus().len();
    prop_oneof![
        (0..n).prop_map(|i| corpus()[i].clone()),
        (0..n, 0..n).prop_map(|(i, j)| corpus()[i].direct_product(&corpus()[j])),
    ]
}

fn function(dom: usize, cod: usize) -> impl Strategy<Value = FinFunction> {
    proptest::collection::vec(0..cod, dom).prop_map(move |t| FinFunction::new(cod, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_roundtrip(s in semigroup()) {
        prop_assert_eq!(parse_cayley(&format_cayley(&s)).unwrap(), s);
    }

    #[test]
    fn envelope_structure(s in semigroup()) {
        let k = karoubi_envelope(&s).unwrap();
        prop_assert_eq!(k.check_box_formula(), None);
        let c = counit(&k).unwrap();
        prop_assert_eq!(c.surjective, s.has_enough_idempotents());
        prop_assert!(theorem_regular_iff_factorization(&s).unwrap().holds());
    }

    #[test]
    fn theta_is_reflexive_and_symmetric(s in semigroup()) {
        let r = theta_properties(karoubi_envelope(&s).unwrap().wired());
        prop_assert!(r.reflexive && r.symmetric && r.parallel_is_equality);
    }

    #[test]
    fn pseudoinverses_are_pseudoinverses(s in semigroup()) {
        for x in s.elements() {
            for y in s.pseudoinverses(x) {
                prop_assert_eq!(s.mul3(x, y, x), x);
            }
        }
    }

    #[test]
    fn nepow_induced_is_power_semigroup(i in 0..corpus().len()) {
        let s = &corpus()[i];
        prop_assert_eq!(induced_operation(&NePow, s).unwrap(), power_semigroup(s).unwrap());
    }

    #[test]
    fn writer_induced_is_product(i in 0..corpus().len(), j in 0..corpus().len()) {
        let (s, s0) = (&corpus()[i], &corpus()[j]);
        prop_assert_eq!(induced_operation(&Writer::new(s0), s).unwrap(), s.direct_product(s0));
    }

    #[test]
    fn writer_lift_is_functorial(
        j in 0..corpus().len(),
        (f, g) in (1usize..5, 1usize..5, 1usize..5)
            .prop_flat_map(|(a, b, c)| (function(a, b), function(b, c))),
    ) {
        let w = Writer::new(&corpus()[j]);
        prop_assert_eq!(w.lift(&f.then(&g)), w.lift(&f).then(&w.lift(&g)));
    }

    #[test]
    fn nepow_k3(
        (f, g, b, c) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(a, b, c)| {
            (function(a, (1 << b) - 1), function(b, (1 << c) - 1), Just(b), Just(c))
        }),
    ) {
        // (f ; g*)* = f* ; g*
        let g_star = kleisli_star(&NePow, &g, c).unwrap();
        let lhs = kleisli_star(&NePow, &f.then(&g_star), c).unwrap();
        let rhs = kleisli_star(&NePow, &f, b).unwrap().then(&g_star);
        prop_assert_eq!(lhs, rhs);
    }
}
