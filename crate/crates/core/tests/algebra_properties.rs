use std::collections::HashSet;

use fiveclass_core::algebra::{
    check_relations, connected_sum, enumerate, equivalent, normalize, Block, FakeClass, Level, ManifoldExpression,
    StandardForm,
};
use fiveclass_core::bordism::{BordismElement, Category, Flavor, GroupKind};
use proptest::prelude::*;

fn palette(category: Category) -> Vec<Block> {
    let mut blocks = vec![Block::S2xRp3, Block::Cp2xS1, Block::S2xS2xS1(1), Block::S2xS2xS1(2)];
    match category {
        Category::Smooth => blocks.extend((0..16).map(|q| Block::FakeRp5(FakeClass::smooth(q)))),
        Category::Top => {
            blocks.push(Block::StarS2xRp3);
            for p in 0..2 {
                blocks.extend((0..8).map(|q| Block::FakeRp5(FakeClass::top(p, q))));
            }
        }
    }
    blocks
}

/// Every valid expression with at most `max_len` blocks from the palette, under every framing.
fn all_expressions(category: Category, max_len: usize) -> Vec<ManifoldExpression> {
    let blocks = palette(category);
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Block>> = blocks.iter().map(|b| vec![*b]).collect();
    while let Some(seq) = stack.pop() {
        if seq.len() < max_len {
            for b in &blocks {
                let mut longer = seq.clone();
                longer.push(*b);
                stack.push(longer);
            }
        }
        if !seq.iter().any(Block::is_z2) {
            continue;
        }
        for bits in 0..1u32 << (seq.len() - 1) {
            let framings = (0..seq.len() - 1).map(|i| bits >> i & 1 == 1).collect();
            out.push(ManifoldExpression::new(category, seq.clone(), framings).unwrap());
        }
    }
    out
}

#[test]
fn every_composite_satisfies_the_parity_relations() {
    for category in [Category::Smooth, Category::Top] {
        let exprs = all_expressions(category, 3);
        assert!(exprs.len() > 10_000);
        for e in exprs {
            let inv = e.invariants().unwrap();
            assert!(check_relations(&inv), "{e}: {inv}");
            assert_eq!(inv.p_class(), signed_sum(&e, inv.p_class().kind()), "{e}");
            let sf = normalize(&e).unwrap();
            assert_eq!(normalize(&sf.to_expression()).unwrap(), sf, "{e}");
            assert_eq!(sf.invariants().canonical_class(), inv.canonical_class());
        }
    }
}

#[test]
fn standard_forms_satisfy_relations_and_are_unique() {
    for category in [Category::Smooth, Category::Top] {
        let forms = enumerate(12, category);
        let mut keys = HashSet::new();
        for sf in &forms {
            let inv = sf.invariants();
            assert!(check_relations(&inv), "{sf}");
            assert!(keys.insert((inv.w2type(), inv.r(), inv.canonical_class())), "duplicate {sf}");
            assert_eq!(StandardForm::from_invariants(&inv).unwrap(), *sf);
        }
    }
}

#[test]
fn equivalence_levels_are_nested() {
    let smooth = enumerate(6, Category::Smooth);
    let top = enumerate(6, Category::Top);
    for a in &smooth {
        for b in &smooth {
            let (ia, ib) = (a.invariants(), b.invariants());
            let d = equivalent(&ia, &ib, Level::Diffeo).unwrap();
            let h = equivalent(&ia, &ib, Level::Homeo).unwrap();
            let t = equivalent(&ia, &ib, Level::Homotopy).unwrap();
            assert!(!d || h, "{a} vs {b}");
            assert!(!h || t, "{a} vs {b}");
            assert_eq!(d, a == b);
        }
    }
    for a in smooth.iter().chain(&top) {
        for b in &top {
            let (ia, ib) = (a.invariants(), b.invariants());
            let h = equivalent(&ia, &ib, Level::Homeo).unwrap();
            assert!(!h || equivalent(&ia, &ib, Level::Homotopy).unwrap());
        }
    }
}

fn piece(category: Category) -> impl Strategy<Value = ManifoldExpression> {
    let blocks = palette(category);
    (prop::collection::vec(prop::sample::select(blocks), 1..4), any::<u8>()).prop_map(move |(seq, bits)| {
        let framings = (0..seq.len() - 1).map(|i| bits >> i & 1 == 1).collect();
        ManifoldExpression::new(category, seq, framings).unwrap()
    })
}

/// Oracle: block contributions straight from the table of characteristic classes.
fn block_class(block: &Block, kind: GroupKind) -> BordismElement {
    let top = kind.category == Category::Top;
    let coords: Vec<i64> = match (block, kind.flavor) {
        (Block::FakeRp5(FakeClass::Smooth(q)), Flavor::PinPlus) => vec![i64::from(*q)],
        (Block::FakeRp5(FakeClass::Smooth(q)), Flavor::PinC) => vec![i64::from(*q) % 8, 0],
        (Block::FakeRp5(FakeClass::Top { ks, q }), Flavor::PinPlus) => vec![i64::from(*ks), i64::from(*q)],
        (Block::FakeRp5(FakeClass::Top { ks, q }), Flavor::PinC) => vec![i64::from(*ks), i64::from(*q), 0],
        (Block::Cp2xS1, Flavor::PinC) if top => vec![0, 0, 1],
        (Block::Cp2xS1, Flavor::PinC) => vec![0, 1],
        (Block::StarS2xRp3, Flavor::PinMinus) => vec![1],
        (Block::StarS2xRp3, Flavor::PinC) => vec![1, 0, 0],
        _ => vec![0; kind.arity()],
    };
    BordismElement::new(kind, &coords).unwrap()
}

/// Sum of block contributions, each negated once per set framing bit to its left.
fn signed_sum(e: &ManifoldExpression, kind: GroupKind) -> BordismElement {
    let mut total = BordismElement::zero(kind);
    let mut negative = false;
    for (i, block) in e.blocks().iter().enumerate() {
        if i > 0 {
            negative ^= e.framings()[i - 1];
        }
        let c = block_class(block, kind);
        total = total.add(&if negative { c.neg() } else { c }).unwrap();
    }
    total
}

fn two_pieces() -> impl Strategy<Value = (ManifoldExpression, ManifoldExpression)> {
    prop_oneof![Just(Category::Smooth), Just(Category::Top)]
        .prop_flat_map(|c| (piece(c), piece(c)))
        .prop_filter("one operand needs a Z/2 block", |(a, b)| a.has_z2_block() || b.has_z2_block())
}

proptest! {
    #[test]
    fn circle_sum_commutes_up_to_normal_form((a, b) in two_pieces(), framing in any::<bool>()) {
        let ab = normalize(&connected_sum(&a, &b, framing).unwrap()).unwrap();
        let ba = normalize(&connected_sum(&b, &a, framing).unwrap()).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn circle_sum_adds_classes_with_sign((a, b) in two_pieces(), framing in any::<bool>()) {
        let sum = connected_sum(&a, &b, framing).unwrap().invariants().unwrap();
        let kind = sum.p_class().kind();
        let b_class = signed_sum(&b, kind);
        let expected = signed_sum(&a, kind).add(&if framing { b_class.neg() } else { b_class }).unwrap();
        prop_assert_eq!(sum.p_class(), expected);
    }

    #[test]
    fn rank_adds_under_circle_sum((a, b) in two_pieces(), framing in any::<bool>()) {
        let sum = connected_sum(&a, &b, framing).unwrap();
        let join = u32::from(a.has_z2_block() && b.has_z2_block());
        prop_assert_eq!(sum.rank(), a.rank() + b.rank() + join);
    }
}
