//! Property tests for the complex file format.

use proptest::prelude::*;

use scx_cli::format::{parse_complex, serialize_complex, Metadata};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Any valid facet family, serialized once, is a canonical fixed point:
    /// parse then serialize reproduces the bytes exactly.
    #[test]
    fn serialization_is_idempotent(facets in proptest::collection::vec(
        proptest::collection::btree_set(0u32..40, 1..5), 1..10),
        name in proptest::option::of("[a-z]{1,8}"))
    {
        let lists: Vec<Vec<u32>> = facets.iter().map(|s| s.iter().copied().collect()).collect();
        let x = scx_core::SimplicialComplex::build(&lists).unwrap();
        let meta = Metadata { family: name.clone(), ..Default::default() };
        let bytes = serialize_complex(&x, name.as_deref(), Some(meta));
        let (file, parsed) = parse_complex(&bytes).unwrap();
        prop_assert_eq!(&parsed, &x);
        let again = serialize_complex(&parsed, file.name.as_deref(), file.metadata.clone());
        prop_assert_eq!(again, bytes);
    }

    /// Parsing accepts unsorted vertex lists and unsorted facet order, and
    /// canonicalization settles in one step.
    #[test]
    fn parsing_canonicalizes_scrambled_input(mut facets in proptest::collection::vec(
        proptest::collection::btree_set(0u32..20, 2..5), 1..6), rev in any::<bool>())
    {
        let mut lists: Vec<Vec<u32>> = facets.drain(..).map(|s| {
            let mut v: Vec<u32> = s.into_iter().collect();
            v.reverse();
            v
        }).collect();
        lists.dedup();
        if rev {
            lists.reverse();
        }
        let doc = serde_json::json!({ "maximal_simplices": lists }).to_string();
        let Ok((_, x)) = parse_complex(doc.as_bytes()) else {
            // duplicate facets under different orderings are rejected
            return Ok(());
        };
        let once = serialize_complex(&x, None, None);
        let (_, y) = parse_complex(&once).unwrap();
        prop_assert_eq!(serialize_complex(&y, None, None), once);
    }
}
