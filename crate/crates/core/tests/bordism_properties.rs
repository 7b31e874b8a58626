use fiveclass_core::bordism::{BordismElement, CanonicalClass, Category, Flavor, GroupKind};

fn elements(kind: GroupKind) -> Vec<BordismElement> {
    BordismElement::all(kind)
}

#[test]
fn every_group_is_an_abelian_group() {
    for kind in GroupKind::ALL {
        let all = elements(kind);
        assert_eq!(all.len() as u32, kind.order(), "{kind}");
        let zero = BordismElement::zero(kind);
        for a in &all {
            assert_eq!(a.add(&zero).unwrap(), *a);
            assert_eq!(a.add(&a.neg()).unwrap(), zero);
            assert_eq!(a.times(i64::from(kind.order())), zero);
            for b in &all {
                let ab = a.add(b).unwrap();
                assert_eq!(ab, b.add(a).unwrap());
                for c in &all {
                    assert_eq!(ab.add(c).unwrap(), a.add(&b.add(c).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn generator_orders_match_the_table() {
    for kind in GroupKind::ALL {
        for (i, &order) in kind.orders().iter().enumerate() {
            let mut coords = vec![0i64; kind.arity()];
            coords[i] = 1;
            let g = BordismElement::new(kind, &coords).unwrap();
            let first_zero = (1..=i64::from(order)).find(|&n| g.times(n).is_zero()).unwrap();
            assert_eq!(first_zero, i64::from(order), "{kind} generator {i}");
        }
    }
}

#[test]
fn forgetting_smoothness_is_a_homomorphism() {
    for kind in GroupKind::ALL.into_iter().filter(|k| k.category == Category::Smooth) {
        let all = elements(kind);
        for a in &all {
            for b in &all {
                let lhs = a.add(b).unwrap().forget_smooth().unwrap();
                let rhs = a.forget_smooth().unwrap().add(&b.forget_smooth().unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
            assert_eq!(a.neg().forget_smooth().unwrap(), a.forget_smooth().unwrap().neg());
            assert_eq!(a.forget_smooth().unwrap().ks(), 0);
        }
    }
}

#[test]
fn pin_plus_forgetful_kernel() {
    let kind = GroupKind::new(Category::Smooth, Flavor::PinPlus);
    let kernel: Vec<u8> =
        elements(kind).into_iter().filter(|e| e.forget_smooth().unwrap().is_zero()).map(|e| e.coord(0)).collect();
    assert_eq!(kernel, [0, 8]);
}

#[test]
fn canonical_classes_partition_each_group() {
    for kind in GroupKind::ALL {
        let classes = CanonicalClass::all(kind);
        let mut covered = 0;
        for class in &classes {
            let rep = *class.rep();
            assert_eq!(rep.canonicalize(), *class);
            assert_eq!(rep.neg().canonicalize(), *class);
            assert!(rep <= rep.neg());
            covered += if rep == rep.neg() { 1 } else { 2 };
        }
        assert_eq!(covered, kind.order(), "{kind}");
        for e in elements(kind) {
            assert!(classes.contains(&e.canonicalize()));
        }
    }
}

#[test]
fn notation_round_trips_exhaustively() {
    for kind in GroupKind::ALL {
        for e in elements(kind) {
            let parsed: BordismElement = e.to_string().parse().unwrap();
            assert_eq!(parsed, e);
        }
    }
}
