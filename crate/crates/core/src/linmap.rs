//! Verification, enumeration, inversion, preservation profiling and
//! projection checks for linear transformations between finitely presented
//! structures.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{mixedness, verify, StructureDef, StructureKind};
use crate::carrier::{elem_add, scalar_act, zero_like, Element};
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, VerificationReport, Witness};
use crate::ring::NeutroNumber;
use crate::substructure::{enumerate_substructures, Flavor, ENUMERATION_LIMIT};

/// An explicit total function between two carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    domain: StructureDef,
    codomain: StructureDef,
    graph: BTreeMap<Element, Element>,
}

impl MapTable {
    pub fn new(
        domain: StructureDef,
        codomain: StructureDef,
        graph: BTreeMap<Element, Element>,
    ) -> Result<MapTable> {
        for v in domain.carrier() {
            match graph.get(v) {
                None => return Err(Error::NotTotal(v.to_string())),
                Some(image) => {
                    if !codomain.carrier().contains(image) {
                        return Err(Error::ImageNotInCodomain(image.to_string()));
                    }
                }
            }
        }
        for v in graph.keys() {
            if !domain.carrier().contains(v) {
                return Err(Error::NotTotal(format!("{v} is not a domain element")));
            }
        }
        Ok(MapTable {
            domain,
            codomain,
            graph,
        })
    }

    pub fn domain(&self) -> &StructureDef {
        &self.domain
    }

    pub fn codomain(&self) -> &StructureDef {
        &self.codomain
    }

    pub fn graph(&self) -> &BTreeMap<Element, Element> {
        &self.graph
    }

    pub fn apply(&self, v: &Element) -> Option<&Element> {
        self.graph.get(v)
    }

    pub fn image(&self) -> BTreeSet<Element> {
        self.graph.values().cloned().collect()
    }

    pub fn is_operator(&self) -> bool {
        self.domain.carrier() == self.codomain.carrier()
    }

    pub fn is_zero_map(&self) -> bool {
        self.graph.values().all(Element::is_zero)
    }
}

/// Check the linearity conditions appropriate to the structures' kinds.
/// The all-zero table passes with a `zero_map` tag; otherwise, whenever
/// the scalar indeterminate sits in the domain carrier it must be fixed.
pub fn verify_map(m: &MapTable) -> Result<VerificationReport> {
    if m.domain.scalars() != m.codomain.scalars() {
        return Err(Error::ScalarSetMismatch);
    }
    let mut report = VerificationReport::new();
    let zero_map = m.is_zero_map();
    if zero_map {
        report.tag("zero_map");
    }

    let mut compat = AxiomCheck::pass("map.scalar_compat");
    'outer: for s in m.domain.scalars().members() {
        for v in m.domain.carrier() {
            let sv = scalar_act(s, v)?;
            let Some(t_sv) = m.apply(&sv) else {
                compat = AxiomCheck::fail(
                    "map.scalar_compat",
                    Witness::new("scaled vector leaves the domain")
                        .number("scalar", s)
                        .element("vector", v)
                        .element("scaled", &sv),
                );
                break 'outer;
            };
            let s_tv = scalar_act(s, m.apply(v).expect("total"))?;
            if t_sv != &s_tv {
                compat = AxiomCheck::fail(
                    "map.scalar_compat",
                    Witness::new("image of a scaled vector differs from the scaled image")
                        .number("scalar", s)
                        .element("vector", v)
                        .element("mapped", t_sv)
                        .element("expected", &s_tv),
                );
                break 'outer;
            }
        }
    }
    report.push(compat);

    let indeterminate = Element::scalar(NeutroNumber::indeterminate(m.domain.ring()));
    if m.domain.carrier().contains(&indeterminate) && !zero_map {
        let image = m.apply(&indeterminate).expect("total");
        if image == &indeterminate {
            report.push(AxiomCheck::pass("map.fixes_indeterminate"));
        } else {
            report.push(AxiomCheck::fail(
                "map.fixes_indeterminate",
                Witness::new("the indeterminate moved").element("image", image),
            ));
        }
    }

    let both_linear = m.domain.kind().is_linear_algebra() && m.codomain.kind().is_linear_algebra();
    if both_linear {
        let mut additive = AxiomCheck::pass("map.additive");
        'add: for x in m.domain.carrier() {
            for y in m.domain.carrier() {
                if x.shape() != y.shape() {
                    continue;
                }
                let sum = elem_add(x, y)?;
                let Some(t_sum) = m.apply(&sum) else {
                    additive = AxiomCheck::fail(
                        "map.additive",
                        Witness::new("sum leaves the domain")
                            .element("left", x)
                            .element("right", y),
                    );
                    break 'add;
                };
                let tx = m.apply(x).expect("total");
                let ty = m.apply(y).expect("total");
                match elem_add(tx, ty) {
                    Ok(expected) if &expected == t_sum => {}
                    Ok(expected) => {
                        additive = AxiomCheck::fail(
                            "map.additive",
                            Witness::new("image of a sum differs from the sum of images")
                                .element("left", x)
                                .element("right", y)
                                .element("mapped", t_sum)
                                .element("expected", &expected),
                        );
                        break 'add;
                    }
                    Err(_) => {
                        additive = AxiomCheck::fail(
                            "map.additive",
                            Witness::new("images of addable vectors have unequal shapes")
                                .element("left", x)
                                .element("right", y),
                        );
                        break 'add;
                    }
                }
            }
        }
        report.push(additive);
    }

    if both_linear && m.domain.kind() == StructureKind::SemigroupLa {
        let mut combined = AxiomCheck::pass("map.combined_linearity");
        'comb: for a in m.domain.scalars().members() {
            for v in m.domain.carrier() {
                for u in m.domain.carrier() {
                    let av = scalar_act(a, v)?;
                    if av.shape() != u.shape() {
                        continue;
                    }
                    let avu = elem_add(&av, u)?;
                    let Some(lhs) = m.apply(&avu) else { continue };
                    let tv = m.apply(v).expect("total");
                    let tu = m.apply(u).expect("total");
                    let rhs = elem_add(&scalar_act(a, tv)?, tu);
                    if rhs.as_ref().ok() != Some(lhs) {
                        combined = AxiomCheck::fail(
                            "map.combined_linearity",
                            Witness::new("combined linearity broke")
                                .number("scalar", a)
                                .element("scaled_vector", v)
                                .element("added_vector", u),
                        );
                        break 'comb;
                    }
                }
            }
        }
        report.push(combined);
    }

    Ok(report)
}

/// All total tables from the domain carrier to the codomain carrier that
/// pass `verify_map`, in lexicographic image order. The all-zero table is
/// omitted: it passes only through its special exemption and carries no
/// structural information.
pub fn enumerate_maps(
    domain: &StructureDef,
    codomain: &StructureDef,
    cap: usize,
) -> Result<Vec<MapTable>> {
    if domain.scalars() != codomain.scalars() {
        return Err(Error::ScalarSetMismatch);
    }
    let dom: Vec<&Element> = domain.carrier().iter().collect();
    let cod: Vec<&Element> = codomain.carrier().iter().collect();
    let total = (cod.len() as f64).powi(dom.len() as i32);
    if total > cap as f64 {
        return Err(Error::BudgetExceeded(format!(
            "{} total tables exceed the cap of {cap}",
            total as u128
        )));
    }
    let mut found = Vec::new();
    let mut assignment: Vec<usize> = Vec::new();

    // Partial consistency: T(s*v) = s*T(v) whenever both sides are fixed.
    fn consistent(
        domain: &StructureDef,
        dom: &[&Element],
        cod: &[&Element],
        assignment: &[usize],
    ) -> bool {
        let index_of = |e: &Element| dom.iter().position(|d| *d == e);
        let just = assignment.len() - 1;
        let v = dom[just];
        for s in domain.scalars().members() {
            let sv = scalar_act(s, v).expect("homogeneous");
            if let Some(i) = index_of(&sv) {
                if i < assignment.len() {
                    let expected = scalar_act(s, cod[assignment[just]]).expect("homogeneous");
                    if *cod[assignment[i]] != expected {
                        return false;
                    }
                }
            }
            // the new assignment may also complete older constraints
            for (vi, &ci) in assignment.iter().enumerate() {
                let svi = scalar_act(s, dom[vi]).expect("homogeneous");
                if svi == *v {
                    let expected = scalar_act(s, cod[ci]).expect("homogeneous");
                    if *cod[assignment[just]] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn descend(
        domain: &StructureDef,
        codomain: &StructureDef,
        dom: &[&Element],
        cod: &[&Element],
        assignment: &mut Vec<usize>,
        found: &mut Vec<MapTable>,
    ) -> Result<()> {
        if assignment.len() == dom.len() {
            let graph: BTreeMap<Element, Element> = dom
                .iter()
                .zip(assignment.iter())
                .map(|(v, &c)| ((*v).clone(), cod[c].clone()))
                .collect();
            let table = MapTable::new(domain.clone(), codomain.clone(), graph)?;
            if !table.is_zero_map() && verify_map(&table)?.passed() {
                found.push(table);
            }
            return Ok(());
        }
        for c in 0..cod.len() {
            assignment.push(c);
            if consistent(domain, dom, cod, assignment) {
                descend(domain, codomain, dom, cod, assignment, found)?;
            }
            assignment.pop();
        }
        Ok(())
    }

    descend(domain, codomain, &dom, &cod, &mut assignment, &mut found)?;
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreservationGrade {
    Strong,
    Weak,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationProfile {
    pub grade: PreservationGrade,
    /// For `Weak`, one preserved subspace; for `None`, one failure witness
    /// per inspected subspace.
    pub preserved: Vec<Vec<Element>>,
    pub failures: Vec<(Vec<Element>, String)>,
}

/// Which proper subspaces of the domain map onto subspaces of the codomain.
/// Subspaces are taken in the carrier's own neutrosophic flavor: a mixed
/// carrier is measured on its mixed subspaces, a pure one on pure
/// subspaces, and images must land in the codomain's flavor too.
pub fn preservation_profile(m: &MapTable) -> Result<PreservationProfile> {
    if !verify_map(m)?.passed() {
        return Err(Error::PrerequisiteFailed(
            "the table is not a linear transformation".into(),
        ));
    }
    let domain_flavor = mixedness(m.domain.carrier());
    let codomain_flavor = mixedness(m.codomain.carrier());
    let candidates = enumerate_substructures(&m.domain, &Flavor::Plain, ENUMERATION_LIMIT)?;
    let mut preserved = Vec::new();
    let mut failures = Vec::new();
    let mut inspected = 0usize;
    for p in candidates {
        if mixedness(&p) != domain_flavor {
            continue;
        }
        inspected += 1;
        let image: BTreeSet<Element> = p
            .iter()
            .map(|v| m.apply(v).expect("total").clone())
            .collect();
        if image.iter().all(Element::is_zero) {
            failures.push((p.iter().cloned().collect(), "image is zero-only".into()));
            continue;
        }
        if mixedness(&image) != codomain_flavor {
            failures.push((
                p.iter().cloned().collect(),
                "image leaves the carrier's neutrosophic flavor".into(),
            ));
            continue;
        }
        let image_def = StructureDef::new(
            image.clone(),
            m.codomain.scalars().clone(),
            m.codomain.kind(),
        )?;
        let report = verify(&image_def);
        if report.passed() {
            preserved.push(p.iter().cloned().collect());
        } else {
            let axiom = report
                .first_failure()
                .map(|c| c.id.clone())
                .unwrap_or_default();
            failures.push((p.iter().cloned().collect(), format!("image fails {axiom}")));
        }
    }
    let grade = if inspected > 0 && failures.is_empty() {
        PreservationGrade::Strong
    } else if !preserved.is_empty() {
        PreservationGrade::Weak
    } else {
        PreservationGrade::None
    };
    Ok(PreservationProfile {
        grade,
        preserved,
        failures,
    })
}

/// Reverse a bijective verified table. The reversed table is checked to be
/// a linear transformation itself before it is returned.
pub fn invert_map(m: &MapTable) -> Result<MapTable> {
    if !verify_map(m)?.passed() {
        return Err(Error::PrerequisiteFailed(
            "the table is not a linear transformation".into(),
        ));
    }
    let mut reversed: BTreeMap<Element, Element> = BTreeMap::new();
    for (v, w) in m.graph() {
        if let Some(previous) = reversed.insert(w.clone(), v.clone()) {
            return Err(Error::NotInvertible(format!(
                "{previous} and {v} share the image {w}"
            )));
        }
    }
    if let Some(unreached) = m
        .codomain
        .carrier()
        .iter()
        .find(|w| !reversed.contains_key(*w))
    {
        return Err(Error::NotInvertible(format!("{unreached} has no preimage")));
    }
    let inverse = MapTable::new(m.codomain.clone(), m.domain.clone(), reversed)?;
    if !verify_map(&inverse)?.passed() {
        return Err(Error::Internal(
            "inverse of a verified bijection failed verification".into(),
        ));
    }
    Ok(inverse)
}

/// Does the operator land inside the given subspace? The subspace must be a
/// plain substructure of the domain; idempotence is deliberately not
/// required.
pub fn is_projection_onto(m: &MapTable, w: &BTreeSet<Element>) -> Result<bool> {
    if !m.is_operator() {
        return Err(Error::NotAnOperator);
    }
    let query = crate::substructure::SubstructureQuery {
        parent: m.domain.clone(),
        candidate: w.clone(),
        flavor: Flavor::Plain,
    };
    match crate::substructure::is_substructure(&query) {
        Ok(report) if report.passed() => {}
        _ => return Err(Error::SubspaceInvalid),
    }
    if !verify_map(m)?.passed() {
        return Err(Error::PrerequisiteFailed(
            "the table is not a linear transformation".into(),
        ));
    }
    Ok(m.image().is_subset(w))
}

/// Compose two tables (`second` after `first`).
pub fn compose(first: &MapTable, second: &MapTable) -> Result<MapTable> {
    if first.codomain.carrier() != second.domain.carrier() {
        return Err(Error::PrerequisiteFailed(
            "codomain and domain carriers do not meet".into(),
        ));
    }
    let graph = first
        .graph()
        .iter()
        .map(|(v, w)| {
            let end = second
                .apply(w)
                .ok_or_else(|| Error::NotTotal(w.to_string()))?;
            Ok((v.clone(), end.clone()))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    MapTable::new(first.domain.clone(), second.codomain.clone(), graph)
}

/// Convenience: the all-zero operator on a structure.
pub fn zero_operator(structure: &StructureDef) -> Result<MapTable> {
    let graph = structure
        .carrier()
        .iter()
        .map(|v| {
            let z = zero_like(v);
            if structure.carrier().contains(&z) {
                Ok((v.clone(), z))
            } else {
                Err(Error::PrerequisiteFailed(format!(
                    "carrier lacks the zero of shape {}",
                    v.shape()
                )))
            }
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    MapTable::new(structure.clone(), structure.clone(), graph)
}
