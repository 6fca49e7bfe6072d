use proptest::prelude::*;
use stab_core::cli_verify::{poly_from_json, poly_to_json, restriction_artifact, restriction_table_from_json};
use stab_core::poly_ring::Monomial;
use stab_core::root_system::{CartanType, RootSystem, WeylGroup, DEFAULT_MAX_GROUP_ORDER};
use stab_core::stable_basis::{stab_table, Chamber, Method};
use stab_core::{MPoly, MRestrictionTable, Rational};

#[test]
fn tables_survive_json() {
    for (t, n) in [(CartanType::B, 2), (CartanType::G, 2), (CartanType::A, 3)] {
        let g = WeylGroup::new(RootSystem::new(t, n).unwrap(), DEFAULT_MAX_GROUP_ORDER).unwrap();
        for c in [Chamber::Minus, Chamber::Plus] {
            let table: MRestrictionTable = stab_table(&g, c, Method::Recursion).unwrap();
            let text = restriction_artifact(&g, &table).to_json().to_string();
            let back: MRestrictionTable = restriction_table_from_json(&text).unwrap();
            assert_eq!(back.chamber(), c);
            assert_eq!(back.entries(), table.entries());
        }
    }
}

fn poly(rank: usize) -> impl Strategy<Value = MPoly> {
    let term = (prop::collection::vec(0u8..5, rank + 1), -40i64..40, 1i64..9);
    prop::collection::vec(term, 0..8).prop_map(move |terms| {
        MPoly::from_terms(
            rank,
            terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(&e), Rational::new(n.into(), d.into()))),
        )
    })
}

proptest! {
    #[test]
    fn polys_survive_json(p in poly(3)) {
        let back: MPoly = poly_from_json(&poly_to_json(&p)).unwrap();
        prop_assert_eq!(back, p);
    }
}
