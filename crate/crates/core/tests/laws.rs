//! Algebraic law suites: exhaustive over small modular rings, randomized
//! over the unbounded ones.

use std::collections::BTreeSet;

use proptest::prelude::*;

use neutra_core::{
    classify, mixedness, verify, BaseRing, Element, FuzzyNeutroValue, FuzzyOrder, Mixedness,
    NeutroNumber, NumberClass, Rational, ScalarSet, StructureDef, StructureKind,
};

fn all_numbers(n: u64) -> Vec<NeutroNumber> {
    let ring = BaseRing::modular(n).unwrap();
    let mut out = Vec::new();
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            out.push(NeutroNumber::from_ints(ring, a, b));
        }
    }
    out
}

#[test]
fn ring_laws_exhaustive_over_small_moduli() {
    for n in 2..=5u64 {
        let universe = all_numbers(n);
        for x in &universe {
            for y in &universe {
                assert_eq!(x.add(y).unwrap(), y.add(x).unwrap());
                assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
                for z in &universe {
                    assert_eq!(
                        x.add(y).unwrap().add(z).unwrap(),
                        x.add(&y.add(z).unwrap()).unwrap()
                    );
                    assert_eq!(
                        x.mul(y).unwrap().mul(z).unwrap(),
                        x.mul(&y.mul(z).unwrap()).unwrap()
                    );
                    assert_eq!(
                        x.mul(&y.add(z).unwrap()).unwrap(),
                        x.mul(y).unwrap().add(&x.mul(z).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn every_number_falls_in_exactly_one_class() {
    for x in all_numbers(5) {
        let classes = [
            x.classify() == NumberClass::PureNeutrosophic,
            x.classify() == NumberClass::RealOnly,
            x.classify() == NumberClass::Zero,
        ];
        assert_eq!(classes.iter().filter(|c| **c).count(), 1);
        // pure numbers always sit inside the mixed universe
        if x.classify() == NumberClass::PureNeutrosophic {
            let singleton: BTreeSet<Element> = [Element::scalar(x)].into_iter().collect();
            assert_eq!(mixedness(&singleton), Mixedness::PureNeutrosophic);
        }
    }
}

fn arb_int_number() -> impl Strategy<Value = NeutroNumber> {
    (-1000i64..1000, -1000i64..1000)
        .prop_map(|(a, b)| NeutroNumber::from_ints(BaseRing::Integer, a, b))
}

fn arb_rat_number() -> impl Strategy<Value = NeutroNumber> {
    (-60i64..60, 1i64..12, -60i64..60, 1i64..12).prop_map(|(an, ad, bn, bd)| {
        NeutroNumber::new(
            BaseRing::Rational,
            Rational::new(an, ad),
            Rational::new(bn, bd),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn integer_ring_laws(x in arb_int_number(), y in arb_int_number(), z in arb_int_number()) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(
            x.add(&y).unwrap().add(&z).unwrap(),
            x.add(&y.add(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y).unwrap().mul(&z).unwrap(),
            x.mul(&y.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn rational_ring_laws(x in arb_rat_number(), y in arb_rat_number(), z in arb_rat_number()) {
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
    }
}

fn arb_fuzzy() -> impl Strategy<Value = FuzzyNeutroValue> {
    (0i64..=8, 0i64..=8).prop_map(|(a, b)| {
        FuzzyNeutroValue::new(Rational::new(a, 8), Rational::new(b, 8)).unwrap()
    })
}

proptest! {
    /// The componentwise meet is the greatest lower bound for the
    /// componentwise order.
    #[test]
    fn meet_is_the_greatest_lower_bound(u in arb_fuzzy(), v in arb_fuzzy(), w in arb_fuzzy()) {
        let m = u.meet(&v);
        prop_assert_eq!(m.compare(&u), FuzzyOrder::Le);
        prop_assert_eq!(m.compare(&v), FuzzyOrder::Le);
        if w.compare(&u) == FuzzyOrder::Le && w.compare(&v) == FuzzyOrder::Le {
            prop_assert_eq!(w.compare(&m), FuzzyOrder::Le);
        }
        prop_assert_eq!(u.meet(&u), u);
        prop_assert_eq!(u.meet(&v), v.meet(&u));
    }
}

// -- randomized structure corpus ------------------------------------------

/// Deterministic splitmix64 so the corpus is identical on every run.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_structure(rng: &mut Rng) -> StructureDef {
    let n = 2 + rng.below(5); // modulus 2..=6
    let ring = BaseRing::modular(n).unwrap();
    let universe = all_numbers(n);
    let scalar_count = 1 + rng.below(4) as usize;
    let mut scalars = BTreeSet::new();
    scalars.insert(NeutroNumber::zero(ring));
    for _ in 0..scalar_count {
        scalars.insert(universe[rng.below(universe.len() as u64) as usize]);
    }
    let carrier_count = 1 + rng.below(8) as usize;
    let mut carrier = BTreeSet::new();
    carrier.insert(Element::scalar(NeutroNumber::zero(ring)));
    for _ in 0..carrier_count {
        carrier.insert(Element::scalar(
            universe[rng.below(universe.len() as u64) as usize],
        ));
    }
    StructureDef::new(
        carrier,
        ScalarSet::new(ring, scalars).unwrap(),
        StructureKind::SetVs,
    )
    .unwrap()
}

#[test]
fn linear_algebras_are_vector_spaces_over_a_random_corpus() {
    let mut rng = Rng(0x5eed);
    let mut checked = 0;
    for _ in 0..400 {
        let def = random_structure(&mut rng);
        let kinds = classify(def.carrier(), def.scalars()).unwrap();
        for (la, vs) in [
            (StructureKind::SetLa, StructureKind::SetVs),
            (StructureKind::SemigroupLa, StructureKind::SemigroupVs),
            (StructureKind::GroupLa, StructureKind::GroupVs),
        ] {
            if kinds.contains(&la) {
                assert!(kinds.contains(&vs), "ladder broke on {def:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0, "corpus produced no linear algebras at all");
}

#[test]
fn verify_is_deterministic_and_order_independent() {
    let mut rng = Rng(0xfeed);
    for _ in 0..50 {
        let def = random_structure(&mut rng);
        let first = verify(&def);
        // rebuilding from a reversed listing must not change anything
        let relisted: BTreeSet<Element> = def.carrier().iter().rev().cloned().collect();
        let rebuilt = StructureDef::new(relisted, def.scalars().clone(), def.kind()).unwrap();
        assert_eq!(verify(&rebuilt), first);
        assert_eq!(verify(&def), first);
    }
}

// -- carrier action laws ----------------------------------------------------

fn small_carrier_elements(n: u64) -> Vec<Element> {
    let ring = BaseRing::modular(n).unwrap();
    let mut out = Vec::new();
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            out.push(Element::scalar(NeutroNumber::from_ints(ring, a, b)));
            out.push(
                Element::tuple(vec![
                    NeutroNumber::from_ints(ring, a, 0),
                    NeutroNumber::from_ints(ring, 0, b),
                ])
                .unwrap(),
            );
        }
    }
    out
}

#[test]
fn scalar_action_distributes_exhaustively() {
    use neutra_core::{elem_add, scalar_act, zero_like};
    for n in 2..=4u64 {
        let ring = BaseRing::modular(n).unwrap();
        let elements = small_carrier_elements(n);
        let scalars = all_numbers(n);
        for s in &scalars {
            for x in &elements {
                // unit and zero action
                assert_eq!(scalar_act(&NeutroNumber::one(ring), x).unwrap(), *x);
                assert_eq!(
                    scalar_act(&NeutroNumber::zero(ring), x).unwrap(),
                    zero_like(x)
                );
                for y in &elements {
                    if x.shape() != y.shape() {
                        continue;
                    }
                    let lhs = scalar_act(s, &elem_add(x, y).unwrap()).unwrap();
                    let rhs = elem_add(
                        &scalar_act(s, x).unwrap(),
                        &scalar_act(s, y).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn elem_add_commutes_and_associates() {
    use neutra_core::elem_add;
    let elements = small_carrier_elements(3);
    for x in &elements {
        for y in &elements {
            if x.shape() != y.shape() {
                continue;
            }
            assert_eq!(elem_add(x, y).unwrap(), elem_add(y, x).unwrap());
            for z in &elements {
                if z.shape() != x.shape() {
                    continue;
                }
                assert_eq!(
                    elem_add(&elem_add(x, y).unwrap(), z).unwrap(),
                    elem_add(x, &elem_add(y, z).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn emitted_witnesses_reproduce_failures_across_the_corpus() {
    use neutra_core::{elem_add, scalar_act, WitnessValue};
    let mut rng = Rng(0x3117);
    let mut reproduced = 0;
    for _ in 0..200 {
        let def = random_structure(&mut rng);
        for kind in StructureKind::ALL {
            let redef = def.with_kind(kind);
            let report = verify(&redef);
            for check in report.checked.iter().filter(|c| !c.passed) {
                let w = check.witness.as_ref().expect("failures carry witnesses");
                let elements: Vec<Element> = w
                    .parts
                    .iter()
                    .filter_map(|(_, v)| match v {
                        WitnessValue::Element(e) => Some(e.clone()),
                        _ => None,
                    })
                    .collect();
                let numbers: Vec<_> = w
                    .parts
                    .iter()
                    .filter_map(|(_, v)| match v {
                        WitnessValue::Number(n) => Some(*n),
                        _ => None,
                    })
                    .collect();
                let id = check.id.as_str();
                if id.ends_with(".closure") {
                    let product = scalar_act(&numbers[0], &elements[0]).unwrap();
                    assert!(!redef.carrier().contains(&product));
                    reproduced += 1;
                } else if id.ends_with(".add_closure") {
                    let sum = elem_add(&elements[0], &elements[1]).unwrap();
                    assert!(!redef.carrier().contains(&sum));
                    reproduced += 1;
                } else if id.ends_with(".scalar_semigroup") || id.ends_with(".scalar_group") {
                    if numbers.len() >= 3 {
                        let sum = numbers[0].add(&numbers[1]).unwrap();
                        assert_eq!(sum, numbers[2]);
                        assert!(!redef.scalars().contains(&sum));
                        reproduced += 1;
                    } else if numbers.len() == 1 {
                        // a scalar without an additive inverse in the set
                        assert!(!redef.scalars().contains(&numbers[0].neg()));
                        reproduced += 1;
                    }
                } else if id.ends_with(".zero_action") {
                    assert!(!redef.carrier().contains(&elements[1]));
                    reproduced += 1;
                }
            }
        }
    }
    assert!(reproduced > 100, "only {reproduced} witnesses exercised");
}
