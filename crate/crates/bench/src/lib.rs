//! Shared builders for the kernel benchmarks.

use std::collections::BTreeSet;

use neutra_core::{BaseRing, Element, NeutroNumber, ScalarSet, StructureDef, StructureKind};

pub fn modular(n: u64) -> BaseRing {
    BaseRing::modular(n).unwrap()
}

/// The indeterminate line mod `n` over the given real scalars.
pub fn line(n: u64, scalars: &[i64], kind: StructureKind) -> StructureDef {
    let ring = modular(n);
    let carrier: BTreeSet<Element> = (0..n as i64)
        .map(|k| Element::scalar(NeutroNumber::from_ints(ring, 0, k)))
        .collect();
    let scalar_pairs: Vec<(i64, i64)> = scalars.iter().map(|&s| (s, 0)).collect();
    StructureDef::new(
        carrier,
        ScalarSet::from_ints(ring, &scalar_pairs),
        kind,
    )
    .unwrap()
}

/// The full tuple space (Zn I)^dims over the indeterminate scalar line.
pub fn cube(n: u64, dims: usize, kind: StructureKind) -> StructureDef {
    let ring = modular(n);
    let line: Vec<NeutroNumber> = (0..n as i64)
        .map(|k| NeutroNumber::from_ints(ring, 0, k))
        .collect();
    let mut carrier = BTreeSet::new();
    let mut stack: Vec<Vec<NeutroNumber>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == dims {
            carrier.insert(Element::tuple(prefix).unwrap());
            continue;
        }
        for v in &line {
            let mut next = prefix.clone();
            next.push(*v);
            stack.push(next);
        }
    }
    let scalars: Vec<(i64, i64)> = (0..n as i64).map(|k| (0, k)).collect();
    StructureDef::new(carrier, ScalarSet::from_ints(ring, &scalars), kind).unwrap()
}
