use falsilab::families::{catalog, make_family, random_class};
use falsilab::{FamilyDescriptor, FamilyKind, GroundSet, HypothesisClass};
use falsilab_cli::classfile::{parse, write};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn arb_explicit() -> impl Strategy<Value = HypothesisClass> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::btree_set(0u64..(1u64 << n), 0..40)
            .prop_map(move |bits| HypothesisClass::from_bits(GroundSet::new(n).unwrap(), bits.into_iter().collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn explicit_classes_round_trip(class in arb_explicit()) {
        let text = write(&class);
        prop_assert_eq!(parse(&text).unwrap(), class);
    }

    #[test]
    fn parser_never_panics(text in "[ -~\n]{0,80}") {
        let _ = parse(&text);
    }
}

#[test]
fn wide_explicit_class_round_trips() {
    let ground = GroundSet::new(64).unwrap();
    let class = HypothesisClass::from_bits(ground, vec![0, 1, u64::MAX, 1 << 63, 0xdead_beef]).unwrap();
    assert_eq!(parse(&write(&class)).unwrap(), class);
}

#[test]
fn random_and_family_classes_round_trip() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in 1..=12 {
        let class = random_class(n, &mut rng).unwrap();
        assert_eq!(parse(&write(&class)).unwrap(), class);
        for desc in catalog(n).unwrap() {
            let class = make_family(desc);
            assert_eq!(parse(&write(&class)).unwrap(), class);
        }
        let extra = FamilyDescriptor::new(FamilyKind::Cylinder { support: vec![] }, GroundSet::new(n).unwrap()).unwrap();
        assert_eq!(parse(&write(&make_family(extra.clone()))).unwrap(), make_family(extra));
    }
}
