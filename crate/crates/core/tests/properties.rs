mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclotomic_field_axioms((_r, a, b, c) in field_triple()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn roots_of_unity((r, k) in root_case()) {
        root_identities(r, k)?;
    }

    #[test]
    fn composition_is_functorial((p, g, h) in functoriality_case()) {
        functoriality(&p, &g, &h)?;
    }

    #[test]
    fn dual_weight_is_an_involution((l, m, r) in weight_pair()) {
        dual_properties(&l, &m, r)?;
    }

    #[test]
    fn hnf_is_idempotent_and_certified((n, gens, v) in lattice_case()) {
        hnf_properties(n, &gens, &v)?;
    }

    #[test]
    fn rational_polynomials_reparse(p in (1usize..=4).prop_flat_map(polynomial)) {
        parser_roundtrip(&p)?;
    }

    #[test]
    fn cyclotomic_polynomials_reparse(p in cyclotomic_polynomial_case()) {
        parser_roundtrip(&p)?;
    }
}
