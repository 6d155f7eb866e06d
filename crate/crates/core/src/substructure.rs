//! Substructure predicates and exhaustive enumeration: plain, pseudo,
//! subset-scalar, duo and pseudo-flavored substructures, simplicity grades,
//! and direct-sum / direct-union / pseudo-direct-sum decompositions.

use std::collections::BTreeSet;

use crate::algebra::{
    mixedness, scalar_profile, verify, Mixedness, ScalarSet, StructureDef, StructureKind,
};
use crate::carrier::{elem_add, zero_like, Element, Shape};
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, VerificationReport, Witness};

/// Hard ceiling for subset enumeration (2^|V| subsets).
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flavor {
    /// The candidate is itself a structure of the parent kind over the
    /// parent scalars.
    Plain,
    /// Additionally the candidate lives in the base ring (no I part) and is
    /// not the zero-only subset.
    Pseudo,
    /// Verified over a proper scalar subset with more than one member.
    SubsetScalars(ScalarSet),
    /// Verified over the parent scalars and over a proper scalar subgroup.
    Duo(ScalarSet),
    /// Semigroup-flavored verification over a sub-semigroup of group
    /// scalars.
    PseudoSemigroup(ScalarSet),
    /// Set-flavored verification over a subset of group scalars.
    PseudoSet(ScalarSet),
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::Pseudo => "pseudo",
            Flavor::SubsetScalars(_) => "subset-scalars",
            Flavor::Duo(_) => "duo",
            Flavor::PseudoSemigroup(_) => "pseudo-semigroup",
            Flavor::PseudoSet(_) => "pseudo-set",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SubstructureQuery {
    pub parent: StructureDef,
    pub candidate: BTreeSet<Element>,
    pub flavor: Flavor,
}

fn is_zero_only(set: &BTreeSet<Element>) -> bool {
    set.iter().all(Element::is_zero)
}

fn restricted(
    candidate: &BTreeSet<Element>,
    kind: StructureKind,
    scalars: &ScalarSet,
) -> Result<StructureDef> {
    StructureDef::new(candidate.clone(), scalars.clone(), kind)
}

pub fn is_substructure(query: &SubstructureQuery) -> Result<VerificationReport> {
    let parent = &query.parent;
    let cand = &query.candidate;
    if cand.is_empty() || !cand.is_subset(parent.carrier()) || cand.len() >= parent.carrier().len()
    {
        return Err(Error::NotProperSubset);
    }
    let mut report = VerificationReport::new();
    match &query.flavor {
        Flavor::Plain => {
            let sub = restricted(cand, parent.kind(), parent.scalars())?;
            report.absorb("sub", verify(&sub));
        }
        Flavor::Pseudo => {
            if mixedness(cand) != Mixedness::NonNeutrosophic {
                let offender = cand
                    .iter()
                    .find(|e| {
                        e.entries()
                            .iter()
                            .any(|n| !n.i_coeff().is_zero())
                    })
                    .expect("some entry is neutrosophic");
                report.push(AxiomCheck::fail(
                    "pseudo.base_ring_only",
                    Witness::new("candidate keeps an indeterminate part").element("member", offender),
                ));
            } else {
                report.push(AxiomCheck::pass("pseudo.base_ring_only"));
            }
            if is_zero_only(cand) {
                report.push(AxiomCheck::fail(
                    "pseudo.nonzero",
                    Witness::new("candidate holds nothing but zeros"),
                ));
            } else {
                report.push(AxiomCheck::pass("pseudo.nonzero"));
            }
            let sub = restricted(cand, parent.kind(), parent.scalars())?;
            report.absorb("sub", verify(&sub));
        }
        Flavor::SubsetScalars(t) => {
            if t.len() <= 1 {
                return Err(Error::SubsetScalarsTooSmall);
            }
            if !t.is_proper_subset_of(parent.scalars()) {
                return Err(Error::NotProperSubset);
            }
            let sub = restricted(cand, parent.kind(), t)?;
            report.absorb("sub", verify(&sub));
        }
        Flavor::Duo(h) => {
            if !h.is_proper_subset_of(parent.scalars()) {
                return Err(Error::NotProperSubset);
            }
            if scalar_profile(h).is_additive_group {
                report.push(AxiomCheck::pass("duo.scalar_subgroup"));
            } else {
                report.push(AxiomCheck::fail(
                    "duo.scalar_subgroup",
                    Witness::new("restriction scalars are not an additive group"),
                ));
            }
            let over_full = restricted(cand, parent.kind(), parent.scalars())?;
            report.absorb("over_scalars", verify(&over_full));
            let over_sub = restricted(cand, parent.kind(), h)?;
            report.absorb("over_subgroup", verify(&over_sub));
        }
        Flavor::PseudoSemigroup(h) => {
            if !h.is_proper_subset_of(parent.scalars()) {
                return Err(Error::NotProperSubset);
            }
            let profile = scalar_profile(h);
            if profile.is_additive_semigroup && profile.contains_zero {
                report.push(AxiomCheck::pass("pseudosemi.scalar_semigroup"));
            } else {
                report.push(AxiomCheck::fail(
                    "pseudosemi.scalar_semigroup",
                    Witness::new("restriction scalars are not a semigroup with zero"),
                ));
            }
            let kind = if parent.kind().is_linear_algebra() {
                StructureKind::SemigroupLa
            } else {
                StructureKind::SemigroupVs
            };
            let sub = restricted(cand, kind, h)?;
            report.absorb("sub", verify(&sub));
        }
        Flavor::PseudoSet(t) => {
            if !t.is_proper_subset_of(parent.scalars()) {
                return Err(Error::NotProperSubset);
            }
            let sub = restricted(cand, StructureKind::SetVs, t)?;
            report.absorb("sub", verify(&sub));
        }
    }
    Ok(report)
}

/// All proper nonempty subsets that pass `is_substructure`, in canonical
/// order. The zero-only subset never counts.
pub fn enumerate_substructures(
    parent: &StructureDef,
    flavor: &Flavor,
    size_cap: usize,
) -> Result<Vec<BTreeSet<Element>>> {
    let n = parent.carrier().len();
    if n > size_cap || n > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "carrier of {n} elements exceeds the subset-enumeration budget"
        )));
    }
    let members: Vec<&Element> = parent.carrier().iter().collect();
    let mut found = Vec::new();
    for mask in 1u64..(1u64 << n) - 1 {
        let candidate: BTreeSet<Element> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| (*e).clone())
            .collect();
        if is_zero_only(&candidate) {
            continue;
        }
        let query = SubstructureQuery {
            parent: parent.clone(),
            candidate: candidate.clone(),
            flavor: flavor.clone(),
        };
        if is_substructure(&query)?.passed() {
            found.push(candidate);
        }
    }
    found.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect()))
    });
    Ok(found)
}

/// One simplicity grade: whether it holds, with the search bound used or a
/// counterexample substructure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeCert {
    pub holds: bool,
    pub certificate: String,
    pub counterexample: Option<Vec<Element>>,
}

impl GradeCert {
    fn holds(certificate: impl Into<String>) -> GradeCert {
        GradeCert {
            holds: true,
            certificate: certificate.into(),
            counterexample: None,
        }
    }

    fn refuted(certificate: impl Into<String>, example: &BTreeSet<Element>) -> GradeCert {
        GradeCert {
            holds: false,
            certificate: certificate.into(),
            counterexample: Some(example.iter().cloned().collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub simple: GradeCert,
    pub weakly_simple: GradeCert,
    pub doubly_simple: GradeCert,
    pub strongly_simple: GradeCert,
}

fn proper_scalar_subsets(s: &ScalarSet) -> Vec<ScalarSet> {
    let members: Vec<_> = s.members().iter().copied().collect();
    let n = members.len();
    let mut out = Vec::new();
    if n > ENUMERATION_LIMIT {
        return out;
    }
    for mask in 1u64..(1u64 << n) - 1 {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        let subset: BTreeSet<_> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, m)| *m)
            .collect();
        out.push(ScalarSet::new(s.ring(), subset).expect("nonempty subset"));
    }
    out
}

pub fn simplicity(parent: &StructureDef) -> Result<SimplicityReport> {
    let cap = ENUMERATION_LIMIT;
    let plain = enumerate_substructures(parent, &Flavor::Plain, cap)?;
    let simple = match plain.first() {
        None => GradeCert::holds(format!(
            "exhausted all {} proper subsets",
            (1u64 << parent.carrier().len()) - 2
        )),
        Some(w) => GradeCert::refuted("proper substructure exists", w),
    };

    let mut weakly = GradeCert::holds("no scalar restriction admits a substructure");
    if parent.scalars().len() > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded(
            "scalar set too large for restriction search".into(),
        ));
    }
    'outer: for t in proper_scalar_subsets(parent.scalars()) {
        let found = enumerate_substructures(parent, &Flavor::SubsetScalars(t.clone()), cap)?;
        if let Some(w) = found.first() {
            weakly = GradeCert::refuted(
                format!("substructure over a {}-scalar restriction", t.len()),
                w,
            );
            break 'outer;
        }
    }

    let doubly = if !simple.holds {
        GradeCert {
            holds: false,
            certificate: "not simple".into(),
            counterexample: simple.counterexample.clone(),
        }
    } else {
        let la_kind = parent.kind().linear_algebra_kind();
        let as_la = parent.with_kind(la_kind);
        match enumerate_substructures(&as_la, &Flavor::Plain, cap)?.first() {
            None => GradeCert::holds("no linear subalgebras either"),
            Some(w) => GradeCert::refuted("a proper linear subalgebra exists", w),
        }
    };

    // a non-simple structure is already not strongly simple; the
    // decomposition search only upgrades the certificate, so skip it when
    // the substructure list is too large to sweep
    let strongly = if !simple.holds {
        let decomposition = if plain.len() <= DECOMPOSITION_PART_LIMIT {
            find_direct_sum_decomposition(parent, &plain)
        } else {
            None
        };
        match decomposition {
            Some(parts) => {
                let mut all = BTreeSet::new();
                for p in &parts {
                    all.extend(p.iter().cloned());
                }
                GradeCert {
                    holds: false,
                    certificate: format!("splits as a direct sum of {} parts", parts.len()),
                    counterexample: Some(all.into_iter().collect()),
                }
            }
            None => GradeCert {
                holds: false,
                certificate: "not simple".into(),
                counterexample: simple.counterexample.clone(),
            },
        }
    } else {
        GradeCert::holds("no proper substructures, hence no decomposition")
    };

    Ok(SimplicityReport {
        simple,
        weakly_simple: weakly,
        doubly_simple: doubly,
        strongly_simple: strongly,
    })
}

/// Sums formed by picking at most one addend per part, stratified per shape;
/// the empty choice contributes the shaped zero.
fn part_sum_reach(parent: &StructureDef, parts: &[BTreeSet<Element>]) -> BTreeSet<Element> {
    let shapes: BTreeSet<Shape> = parent.carrier().iter().map(Element::shape).collect();
    let mut reach = BTreeSet::new();
    for shape in shapes {
        let zero = parent
            .carrier()
            .iter()
            .find(|e| e.shape() == shape)
            .map(zero_like)
            .expect("shape came from the carrier");
        let mut acc: BTreeSet<Element> = BTreeSet::new();
        acc.insert(zero);
        for part in parts {
            let mut next = acc.clone();
            for w in part.iter().filter(|w| w.shape() == shape) {
                for base in &acc {
                    if let Ok(sum) = elem_add(base, w) {
                        next.insert(sum);
                    }
                }
            }
            acc = next;
        }
        reach.extend(acc);
    }
    reach
}

fn validate_parts(
    parent: &StructureDef,
    parts: &[BTreeSet<Element>],
) -> Result<()> {
    for (index, part) in parts.iter().enumerate() {
        if part.is_empty() || !part.is_subset(parent.carrier()) {
            return Err(Error::PartNotSubstructure {
                index,
                reason: "not a nonempty subset of the carrier".into(),
            });
        }
        // A part may be the whole carrier; verification still applies.
        let sub = StructureDef::new(part.clone(), parent.scalars().clone(), parent.kind())?;
        let report = verify(&sub);
        if !report.passed() {
            let axiom = report.first_failure().map(|c| c.id.clone()).unwrap_or_default();
            return Err(Error::PartNotSubstructure {
                index,
                reason: format!("fails {axiom}"),
            });
        }
    }
    Ok(())
}

fn zero_intersection_witness(
    a: &BTreeSet<Element>,
    b: &BTreeSet<Element>,
) -> Option<Element> {
    a.intersection(b).find(|e| !e.is_zero()).cloned()
}

/// Direct sum: the parts jointly reach every carrier element and intersect
/// pairwise only in shaped zeros.
pub fn check_direct_sum(
    parent: &StructureDef,
    parts: &[BTreeSet<Element>],
) -> Result<VerificationReport> {
    if !parent.kind().is_linear_algebra() {
        return Err(Error::PrerequisiteFailed(
            "direct sums are defined for linear-algebra kinds".into(),
        ));
    }
    validate_parts(parent, parts)?;
    let mut report = VerificationReport::new();
    let mut disjoint = AxiomCheck::pass("directsum.pairwise_zero");
    'pairs: for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if let Some(shared) = zero_intersection_witness(&parts[i], &parts[j]) {
                disjoint = AxiomCheck::fail(
                    "directsum.pairwise_zero",
                    Witness::new(format!("parts {i} and {j} overlap beyond zero"))
                        .element("shared", &shared),
                );
                break 'pairs;
            }
        }
    }
    report.push(disjoint);
    let reach = part_sum_reach(parent, parts);
    match parent.carrier().iter().find(|v| !reach.contains(*v)) {
        None => report.push(AxiomCheck::pass("directsum.covers")),
        Some(missing) => report.push(AxiomCheck::fail(
            "directsum.covers",
            Witness::new("element unreachable as a sum over the parts").element("element", missing),
        )),
    }
    Ok(report)
}

/// Pseudo direct sum: sums cover, parts are pairwise distinct, and no part
/// contains another. Zero intersections are allowed.
pub fn check_pseudo_direct_sum(
    parent: &StructureDef,
    parts: &[BTreeSet<Element>],
) -> Result<VerificationReport> {
    if !parent.kind().is_linear_algebra() {
        return Err(Error::PrerequisiteFailed(
            "pseudo direct sums are defined for linear-algebra kinds".into(),
        ));
    }
    validate_parts(parent, parts)?;
    let mut report = VerificationReport::new();
    let mut distinct = AxiomCheck::pass("pseudosum.no_containment");
    'pairs: for i in 0..parts.len() {
        for j in 0..parts.len() {
            if i != j && parts[i].is_subset(&parts[j]) {
                distinct = AxiomCheck::fail(
                    "pseudosum.no_containment",
                    Witness::new(format!("part {i} is contained in part {j}")),
                );
                break 'pairs;
            }
        }
    }
    report.push(distinct);
    let reach = part_sum_reach(parent, parts);
    match parent.carrier().iter().find(|v| !reach.contains(*v)) {
        None => report.push(AxiomCheck::pass("pseudosum.covers")),
        Some(missing) => report.push(AxiomCheck::fail(
            "pseudosum.covers",
            Witness::new("element unreachable as a sum over the parts").element("element", missing),
        )),
    }
    Ok(report)
}

/// Direct union: the parts cover the carrier set-theoretically and meet
/// pairwise in shaped zeros (or not at all).
pub fn check_direct_union(
    parent: &StructureDef,
    parts: &[BTreeSet<Element>],
) -> Result<VerificationReport> {
    if parent.kind().is_linear_algebra() {
        return Err(Error::PrerequisiteFailed(
            "direct unions are defined for vector-space kinds".into(),
        ));
    }
    validate_parts(parent, parts)?;
    let mut report = VerificationReport::new();
    let mut disjoint = AxiomCheck::pass("directunion.pairwise_zero");
    'pairs: for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if let Some(shared) = zero_intersection_witness(&parts[i], &parts[j]) {
                disjoint = AxiomCheck::fail(
                    "directunion.pairwise_zero",
                    Witness::new(format!("parts {i} and {j} overlap beyond zero"))
                        .element("shared", &shared),
                );
                break 'pairs;
            }
        }
    }
    report.push(disjoint);
    let union: BTreeSet<Element> = parts.iter().flatten().cloned().collect();
    match parent.carrier().iter().find(|v| !union.contains(*v)) {
        None => report.push(AxiomCheck::pass("directunion.covers")),
        Some(missing) => report.push(AxiomCheck::fail(
            "directunion.covers",
            Witness::new("element missing from the union").element("element", missing),
        )),
    }
    Ok(report)
}

const DECOMPOSITION_PART_LIMIT: usize = 24;

/// Search for any direct-sum decomposition into two or more of the given
/// proper substructures.
fn find_direct_sum_decomposition(
    parent: &StructureDef,
    plain_subs: &[BTreeSet<Element>],
) -> Option<Vec<BTreeSet<Element>>> {
    if !parent.kind().is_linear_algebra() {
        return None;
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes_left: u32 = 200_000;
    fn compatible(parts: &[BTreeSet<Element>], a: usize, b: usize) -> bool {
        zero_intersection_witness(&parts[a], &parts[b]).is_none()
    }
    fn search(
        parent: &StructureDef,
        parts: &[BTreeSet<Element>],
        chosen: &mut Vec<usize>,
        start: usize,
        nodes_left: &mut u32,
    ) -> Option<Vec<usize>> {
        if *nodes_left == 0 {
            return None;
        }
        *nodes_left -= 1;
        if chosen.len() >= 2 {
            let selected: Vec<BTreeSet<Element>> =
                chosen.iter().map(|&i| parts[i].clone()).collect();
            let reach = part_sum_reach(parent, &selected);
            if parent.carrier().iter().all(|v| reach.contains(v)) {
                return Some(chosen.clone());
            }
        }
        for next in start..parts.len() {
            if chosen.iter().all(|&c| compatible(parts, c, next)) {
                chosen.push(next);
                if let Some(found) = search(parent, parts, chosen, next + 1, nodes_left) {
                    return Some(found);
                }
                chosen.pop();
            }
        }
        None
    }
    search(parent, plain_subs, &mut chosen, 0, &mut nodes_left)
        .map(|ids| ids.into_iter().map(|i| plain_subs[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, NeutroNumber};

    fn zn(n: u64) -> BaseRing {
        BaseRing::modular(n).unwrap()
    }

    fn num(ring: BaseRing, a: i64, b: i64) -> NeutroNumber {
        NeutroNumber::from_ints(ring, a, b)
    }

    fn scalar_elems(ring: BaseRing, values: &[(i64, i64)]) -> BTreeSet<Element> {
        values
            .iter()
            .map(|&(a, b)| Element::scalar(num(ring, a, b)))
            .collect()
    }

    fn int_structure(values: &[(i64, i64)], scalars: &[(i64, i64)], kind: StructureKind) -> StructureDef {
        let z = BaseRing::Integer;
        StructureDef::new(
            scalar_elems(z, values),
            ScalarSet::from_ints(z, scalars),
            kind,
        )
        .unwrap()
    }

    #[test]
    fn plain_subspace_of_the_mixed_fixture() {
        // W = {0, 2I, 16, 17+2I} inside V over S = {0, 1}
        let v = int_structure(
            &[
                (0, 0),
                (3, 0),
                (0, 2),
                (0, 3),
                (5, 2),
                (16, 0),
                (3, -3),
                (14, 0),
                (17, 2),
                (-15, 0),
                (1, 15),
            ],
            &[(0, 0), (1, 0)],
            StructureKind::SetVs,
        );
        let w = scalar_elems(BaseRing::Integer, &[(0, 0), (0, 2), (16, 0), (17, 2)]);
        let q = SubstructureQuery {
            parent: v,
            candidate: w,
            flavor: Flavor::Plain,
        };
        assert!(is_substructure(&q).unwrap().passed());
    }

    #[test]
    fn pseudo_subspace_keeps_to_the_base_ring() {
        // P = {0, 9, 7, -81, 27} inside the mixed carrier
        let v = int_structure(
            &[
                (9, 0),
                (0, 9),
                (0, 0),
                (2, 3),
                (4, 5),
                (7, 0),
                (-81, 0),
                (27, 0),
                (0, 51),
                (0, 91),
            ],
            &[(0, 0), (1, 0)],
            StructureKind::SetVs,
        );
        let p = scalar_elems(BaseRing::Integer, &[(0, 0), (9, 0), (7, 0), (-81, 0), (27, 0)]);
        let q = SubstructureQuery {
            parent: v.clone(),
            candidate: p,
            flavor: Flavor::Pseudo,
        };
        assert!(is_substructure(&q).unwrap().passed());
        // a neutrosophic candidate fails the base-ring axiom
        let bad = scalar_elems(BaseRing::Integer, &[(0, 0), (0, 9)]);
        let q = SubstructureQuery {
            parent: v,
            candidate: bad,
            flavor: Flavor::Pseudo,
        };
        let report = is_substructure(&q).unwrap();
        assert_eq!(report.first_failure().unwrap().id, "pseudo.base_ring_only");
    }

    #[test]
    fn improper_candidates_are_rejected() {
        let v = int_structure(&[(0, 0), (1, 0)], &[(0, 0), (1, 0)], StructureKind::SetVs);
        let q = SubstructureQuery {
            parent: v.clone(),
            candidate: v.carrier().clone(),
            flavor: Flavor::Plain,
        };
        assert!(matches!(is_substructure(&q), Err(Error::NotProperSubset)));
    }

    #[test]
    fn subset_scalars_needs_two() {
        let ring = zn(6);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 2), (0, 4)]),
            ScalarSet::from_ints(ring, &[(0, 0), (1, 0), (2, 0)]),
            StructureKind::SetVs,
        )
        .unwrap();
        let q = SubstructureQuery {
            parent: v,
            candidate: scalar_elems(ring, &[(0, 0), (0, 2)]),
            flavor: Flavor::SubsetScalars(ScalarSet::from_ints(ring, &[(0, 0)])),
        };
        assert!(matches!(is_substructure(&q), Err(Error::SubsetScalarsTooSmall)));
    }

    #[test]
    fn sublinear_algebra_free_fixture() {
        // V = {0, 7I, 14I, 21I, 28I, 35I, 42I} in Z49 over S = {0, 3, 1, I, 2I}
        let ring = zn(49);
        let v = StructureDef::new(
            scalar_elems(
                ring,
                &[(0, 0), (0, 7), (0, 14), (0, 21), (0, 28), (0, 35), (0, 42)],
            ),
            ScalarSet::from_ints(ring, &[(0, 0), (3, 0), (1, 0), (0, 1), (0, 2)]),
            StructureKind::SetLa,
        )
        .unwrap();
        assert!(verify(&v).passed());
        let subs = enumerate_substructures(&v, &Flavor::Plain, ENUMERATION_LIMIT).unwrap();
        assert!(subs.is_empty());
    }

    #[test]
    fn enumeration_matches_a_hand_check() {
        // V = {0, 2I, 4I} in Z6 over S = {0, 1}
        let ring = zn(6);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 2), (0, 4)]),
            ScalarSet::from_ints(ring, &[(0, 0), (1, 0)]),
            StructureKind::SetVs,
        )
        .unwrap();
        let subs = enumerate_substructures(&v, &Flavor::Plain, ENUMERATION_LIMIT).unwrap();
        // zero must sit in every candidate (0 * v = 0), the zero-only
        // subset never counts, and the full carrier is improper
        let expected: Vec<BTreeSet<Element>> = vec![
            scalar_elems(ring, &[(0, 0), (0, 2)]),
            scalar_elems(ring, &[(0, 0), (0, 4)]),
        ];
        for e in &expected {
            assert!(subs.contains(e));
        }
        assert_eq!(subs.len(), expected.len());
    }

    #[test]
    fn two_element_carriers_have_no_substructures() {
        let ring = zn(3);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 1)]),
            ScalarSet::from_ints(ring, &[(0, 0), (1, 0)]),
            StructureKind::SetVs,
        )
        .unwrap();
        let simple = simplicity(&v).unwrap();
        assert!(simple.simple.holds);
        assert!(simple.weakly_simple.holds);
    }

    #[test]
    fn prime_indeterminate_line_is_strongly_simple() {
        // V = {0, I, ..., (p-1)I} over S = Zp I for p = 5, as a linear algebra
        let ring = zn(5);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]),
            ScalarSet::from_ints(ring, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]),
            StructureKind::SemigroupLa,
        )
        .unwrap();
        assert!(verify(&v).passed());
        let report = simplicity(&v).unwrap();
        assert!(report.simple.holds);
        assert!(report.strongly_simple.holds);
    }

    #[test]
    fn prime_line_over_zero_one_indeterminate_scalars() {
        // V = {0, I, 2I} mod 3 over S = {0, 1, I}: simple and weakly simple
        let ring = zn(3);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 1), (0, 2)]),
            ScalarSet::from_ints(ring, &[(0, 0), (1, 0), (0, 1)]),
            StructureKind::SetLa,
        )
        .unwrap();
        assert!(verify(&v).passed());
        let report = simplicity(&v).unwrap();
        assert!(report.simple.holds);
        assert!(report.weakly_simple.holds);
    }

    #[test]
    fn weakly_simple_when_only_two_scalars() {
        let ring = zn(3);
        let v = StructureDef::new(
            scalar_elems(ring, &[(0, 0), (0, 1), (0, 2)]),
            ScalarSet::from_ints(ring, &[(0, 0), (0, 1), (0, 2)]),
            StructureKind::SetLa,
        )
        .unwrap();
        let report = simplicity(&v).unwrap();
        assert!(report.simple.holds);
        assert!(report.weakly_simple.holds);
    }

    fn pair_space(ring: BaseRing, reps: i64) -> StructureDef {
        let mut carrier = BTreeSet::new();
        for a in 0..reps {
            for b in 0..reps {
                carrier.insert(Element::tuple(vec![num(ring, 0, a), num(ring, 0, b)]).unwrap());
            }
        }
        let scalars: Vec<(i64, i64)> = (0..reps).map(|k| (0, k)).collect();
        StructureDef::new(
            carrier,
            ScalarSet::from_ints(ring, &scalars),
            StructureKind::SemigroupLa,
        )
        .unwrap()
    }

    #[test]
    fn axis_decomposition_is_a_direct_sum() {
        let ring = zn(2);
        let v = pair_space(ring, 2);
        let axis = |keep_first: bool| -> BTreeSet<Element> {
            v.carrier()
                .iter()
                .filter(|e| {
                    let entries = e.entries();
                    if keep_first {
                        entries[1].is_zero()
                    } else {
                        entries[0].is_zero()
                    }
                })
                .cloned()
                .collect()
        };
        let w1 = axis(true);
        let w2 = axis(false);
        let report = check_direct_sum(&v, &[w1.clone(), w2.clone()]).unwrap();
        assert!(report.passed());
        // a duplicated nonzero part fails the zero-intersection axiom
        let report = check_direct_sum(&v, &[w1.clone(), w1.clone()]).unwrap();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().id, "directsum.pairwise_zero");
        // the whole carrier as a single part passes vacuously
        let report = check_direct_sum(&v, &[v.carrier().clone()]).unwrap();
        assert!(report.passed());
        // pseudo direct sum rejects containment but tolerates overlap,
        // and a disjoint exact direct sum still counts as one
        let report = check_pseudo_direct_sum(&v, &[w1.clone(), w2.clone()]).unwrap();
        assert!(report.passed());
        let report = check_pseudo_direct_sum(&v, &[w1.clone(), w1]).unwrap();
        assert_eq!(report.first_failure().unwrap().id, "pseudosum.no_containment");
        let overlapping: Vec<BTreeSet<Element>> = vec![
            axis(true),
            axis(false),
            v.carrier().clone(),
        ];
        let report = check_pseudo_direct_sum(&v, &overlapping).unwrap();
        // the whole carrier contains both axes
        assert!(!report.passed());
    }

    #[test]
    fn direct_union_on_a_vector_space() {
        let ring = zn(3);
        // mixed-shape carrier: singleton tuples and pairs, zero in both shapes
        let mut carrier = BTreeSet::new();
        for a in 0..3 {
            carrier.insert(Element::tuple(vec![num(ring, 0, a)]).unwrap());
            carrier.insert(Element::tuple(vec![num(ring, 0, a), num(ring, 0, a)]).unwrap());
        }
        let v = StructureDef::new(
            carrier.clone(),
            ScalarSet::from_ints(ring, &[(0, 0), (1, 0), (2, 0)]),
            StructureKind::SemigroupVs,
        )
        .unwrap();
        let singles: BTreeSet<Element> = carrier
            .iter()
            .filter(|e| e.shape() == Shape::Tuple(1))
            .cloned()
            .collect();
        let pairs: BTreeSet<Element> = carrier
            .iter()
            .filter(|e| e.shape() == Shape::Tuple(2))
            .cloned()
            .collect();
        let report = check_direct_union(&v, &[singles.clone(), pairs.clone()]).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        // omitting a whole part leaves its elements uncovered
        let report = check_direct_union(&v, &[singles]).unwrap();
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.id, "directunion.covers");
        let w = failure.witness.as_ref().unwrap();
        let pair_zero = Element::tuple(vec![num(ring, 0, 0), num(ring, 0, 0)]).unwrap();
        assert_eq!(
            w.parts[0].1,
            crate::report::WitnessValue::Element(pair_zero)
        );
        // a single part equal to the carrier passes
        let report = check_direct_union(&v, &[v.carrier().clone()]).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn decomposable_space_is_not_strongly_simple() {
        let ring = zn(2);
        let v = pair_space(ring, 2);
        let report = simplicity(&v).unwrap();
        assert!(!report.simple.holds);
        assert!(!report.strongly_simple.holds);
        assert!(report.strongly_simple.certificate.contains("direct sum"));
    }

    #[test]
    fn duo_flavor_checks_both_scalar_levels() {
        // V = Z6 I over the full real scalar group Z6; W = even multiples
        let ring = zn(6);
        let carrier = scalar_elems(ring, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        let scalars = ScalarSet::from_ints(ring, &[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)]);
        let v = StructureDef::new(carrier, scalars, StructureKind::GroupVs).unwrap();
        let q = SubstructureQuery {
            parent: v.clone(),
            candidate: scalar_elems(ring, &[(0, 0), (0, 2), (0, 4)]),
            flavor: Flavor::Duo(ScalarSet::from_ints(ring, &[(0, 0), (3, 0)])),
        };
        let report = is_substructure(&q).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        // duo pass implies both plain passes, by construction of the report
        assert!(report.checked.iter().any(|c| c.id.starts_with("over_scalars.")));
        assert!(report.checked.iter().any(|c| c.id.starts_with("over_subgroup.")));
    }
}
