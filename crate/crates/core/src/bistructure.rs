//! Bistructures: ordered pairs of structures verified side by side, with
//! bisubstructure classification, bigenerators and bidimension, and fuzzy
//! bimaps. The union notation of the subject is formal; here a bistructure
//! is an ordered pair and membership questions always address a side.

use std::collections::BTreeSet;

use crate::algebra::{mixedness, scalar_profile, verify, Mixedness, ScalarSet, StructureDef, StructureKind};
use crate::carrier::Element;
use crate::error::{Error, Result};
use crate::fuzzy::{evaluate_conditions, FuzzyConditions, FuzzyMap};
use crate::report::{AxiomCheck, VerificationReport, Witness};
use crate::span::{minimal_generating_set, GeneratorReport, GensetMethod};
use crate::substructure::{is_substructure, Flavor, SubstructureQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    /// Both sides act under one shared scalar set.
    Shared,
    /// Each side has its own scalar set; the two must not contain each
    /// other.
    Bi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiStructureDef {
    pub first: StructureDef,
    pub second: StructureDef,
    pub scalar_mode: ScalarMode,
}

impl BiStructureDef {
    pub fn new(first: StructureDef, second: StructureDef, scalar_mode: ScalarMode) -> BiStructureDef {
        BiStructureDef {
            first,
            second,
            scalar_mode,
        }
    }

    pub fn sides(&self) -> [&StructureDef; 2] {
        [&self.first, &self.second]
    }
}

fn carrier_contained(a: &StructureDef, b: &StructureDef) -> bool {
    a.ring() == b.ring() && a.carrier().is_subset(b.carrier())
}

/// Verify the pair invariants, run each side's own verification, and tag
/// derived classifications (quasi-neutrosophic pairs, mixed vs/la pairs).
pub fn verify_bistructure(b: &BiStructureDef) -> VerificationReport {
    let mut report = VerificationReport::new();

    if carrier_contained(&b.first, &b.second) || carrier_contained(&b.second, &b.first) {
        report.push(AxiomCheck::fail(
            "bi.carriers_noncontaining",
            Witness::new("one side's carrier contains the other"),
        ));
    } else {
        report.push(AxiomCheck::pass("bi.carriers_noncontaining"));
    }

    match b.scalar_mode {
        ScalarMode::Shared => {
            if b.first.scalars() == b.second.scalars() {
                report.push(AxiomCheck::pass("bi.scalars_shared"));
            } else {
                report.push(AxiomCheck::fail(
                    "bi.scalars_shared",
                    Witness::new("sides disagree on the shared scalar set"),
                ));
            }
        }
        ScalarMode::Bi => {
            let s1 = b.first.scalars();
            let s2 = b.second.scalars();
            let contained = (s1.ring() == s2.ring())
                && (s1.members().is_subset(s2.members()) || s2.members().is_subset(s1.members()));
            if contained {
                report.push(AxiomCheck::fail(
                    "bi.scalars_noncontaining",
                    Witness::new("one scalar set contains the other"),
                ));
            } else {
                report.push(AxiomCheck::pass("bi.scalars_noncontaining"));
            }
        }
    }

    report.absorb("side1", verify(&b.first));
    report.absorb("side2", verify(&b.second));

    let neutro = |s: &StructureDef| mixedness(s.carrier()) != Mixedness::NonNeutrosophic;
    if neutro(&b.first) != neutro(&b.second) {
        report.tag("quasi_neutrosophic");
    }
    if b.first.kind().is_linear_algebra() != b.second.kind().is_linear_algebra() {
        report.tag("pseudo_vs_la_pair");
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiGeneratorReport {
    pub first: GeneratorReport,
    pub second: GeneratorReport,
    pub bidimension: (usize, usize),
}

/// Per-side minimal generating sets; the bidimension is the pair of their
/// cardinalities.
pub fn bigenerator(b: &BiStructureDef, method: GensetMethod, cap: usize) -> Result<BiGeneratorReport> {
    let first = minimal_generating_set(&b.first, method, cap)?;
    let second = minimal_generating_set(&b.second, method, cap)?;
    let bidimension = (first.cardinality, second.cardinality);
    Ok(BiGeneratorReport {
        first,
        second,
        bidimension,
    })
}

/// One flavor a candidate pair of subsets may exhibit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlavorFinding {
    pub flavor: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BisubstructureReport {
    pub findings: Vec<FlavorFinding>,
}

impl BisubstructureReport {
    pub fn holding(&self) -> Vec<&str> {
        self.findings
            .iter()
            .filter(|f| f.holds)
            .map(|f| f.flavor.as_str())
            .collect()
    }
}

fn side_passes(parent: &StructureDef, candidate: &BTreeSet<Element>, flavor: Flavor) -> (bool, String) {
    if candidate == parent.carrier() {
        // an improper side is checked directly, without the properness rule
        let kind = match &flavor {
            Flavor::PseudoSemigroup(_) => {
                if parent.kind().is_linear_algebra() {
                    StructureKind::SemigroupLa
                } else {
                    StructureKind::SemigroupVs
                }
            }
            Flavor::PseudoSet(_) => StructureKind::SetVs,
            _ => parent.kind(),
        };
        let scalars = match &flavor {
            Flavor::SubsetScalars(t)
            | Flavor::Duo(t)
            | Flavor::PseudoSemigroup(t)
            | Flavor::PseudoSet(t) => t.clone(),
            _ => parent.scalars().clone(),
        };
        let def = match StructureDef::new(candidate.clone(), scalars, kind) {
            Ok(def) => def,
            Err(e) => return (false, e.to_string()),
        };
        let report = verify(&def);
        let detail = report
            .first_failure()
            .map(|c| format!("fails {}", c.id))
            .unwrap_or_else(|| "holds".into());
        return (report.passed(), detail);
    }
    let query = SubstructureQuery {
        parent: parent.clone(),
        candidate: candidate.clone(),
        flavor,
    };
    match is_substructure(&query) {
        Ok(report) => {
            let detail = report
                .first_failure()
                .map(|c| format!("fails {}", c.id))
                .unwrap_or_else(|| "holds".into());
            (report.passed(), detail)
        }
        Err(e) => (false, e.to_string()),
    }
}

/// Report every bisubstructure flavor the pair (w1, w2) exhibits inside the
/// bistructure, optionally under a per-side scalar restriction.
pub fn classify_bisubstructure(
    w1: &BTreeSet<Element>,
    w2: &BTreeSet<Element>,
    b: &BiStructureDef,
    scalar_restriction: Option<(ScalarSet, ScalarSet)>,
) -> Result<BisubstructureReport> {
    if w1.is_empty()
        || w2.is_empty()
        || !w1.is_subset(b.first.carrier())
        || !w2.is_subset(b.second.carrier())
    {
        return Err(Error::NotSubset);
    }
    if w1 == b.first.carrier() && w2 == b.second.carrier() {
        return Err(Error::NotProperSubset);
    }
    let mut findings = Vec::new();
    fn joint(flavor: &str, sides: [(bool, String); 2]) -> FlavorFinding {
        FlavorFinding {
            flavor: flavor.to_string(),
            holds: sides[0].0 && sides[1].0,
            detail: format!("side1 {}; side2 {}", sides[0].1, sides[1].1),
        }
    }

    let plain1 = side_passes(&b.first, w1, Flavor::Plain);
    let plain2 = side_passes(&b.second, w2, Flavor::Plain);
    findings.push(joint("plain", [plain1.clone(), plain2.clone()]));

    // pseudo: both sides live in the base ring
    let pseudo1 = side_passes(&b.first, w1, Flavor::Pseudo);
    let pseudo2 = side_passes(&b.second, w2, Flavor::Pseudo);
    findings.push(joint("pseudo", [pseudo1, pseudo2]));

    // quasi: a side of a linear-algebra parent holds only in the
    // vector-space sense, the other side holds plainly
    let vs_only = |parent: &StructureDef, w: &BTreeSet<Element>| -> (bool, String) {
        if !parent.kind().is_linear_algebra() {
            return (false, "parent is not a linear algebra".into());
        }
        let as_vs = parent.with_kind(parent.kind().vector_space_kind());
        let (vs_ok, vs_detail) = side_passes(&as_vs, w, Flavor::Plain);
        let (la_ok, _) = side_passes(parent, w, Flavor::Plain);
        (vs_ok && !la_ok, vs_detail)
    };
    let quasi_a = vs_only(&b.first, w1);
    let quasi_b = vs_only(&b.second, w2);
    let quasi_holds = (quasi_a.0 && plain2.0) || (quasi_b.0 && plain1.0);
    findings.push(FlavorFinding {
        flavor: "quasi".into(),
        holds: quasi_holds,
        detail: if quasi_a.0 {
            "side1 is a vector-space-only subspace".into()
        } else if quasi_b.0 {
            "side2 is a vector-space-only subspace".into()
        } else {
            "no side is vector-space-only".into()
        },
    });

    if let Some((t1, t2)) = scalar_restriction {
        let sub1 = side_passes(&b.first, w1, Flavor::SubsetScalars(t1.clone()));
        let sub2 = side_passes(&b.second, w2, Flavor::SubsetScalars(t2.clone()));
        findings.push(joint("subset_scalars", [sub1, sub2]));

        let p1 = scalar_profile(&t1);
        let p2 = scalar_profile(&t2);
        if p1.is_additive_semigroup && p1.contains_zero && p2.is_additive_semigroup && p2.contains_zero {
            let s1 = side_passes(&b.first, w1, Flavor::PseudoSemigroup(t1.clone()));
            let s2 = side_passes(&b.second, w2, Flavor::PseudoSemigroup(t2.clone()));
            findings.push(joint("sub_bisemigroup", [s1, s2]));
        } else {
            findings.push(FlavorFinding {
                flavor: "sub_bisemigroup".into(),
                holds: false,
                detail: "restriction scalars are not semigroups with zero".into(),
            });
        }
        if p1.is_additive_group && p2.is_additive_group {
            let g1 = side_passes(&b.first, w1, Flavor::Duo(t1.clone()));
            let g2 = side_passes(&b.second, w2, Flavor::Duo(t2.clone()));
            findings.push(joint("sub_bigroup", [g1, g2]));
        } else {
            findings.push(FlavorFinding {
                flavor: "sub_bigroup".into(),
                holds: false,
                detail: "restriction scalars are not groups".into(),
            });
        }
        let set1 = side_passes(&b.first, w1, Flavor::PseudoSet(t1));
        let set2 = side_passes(&b.second, w2, Flavor::PseudoSet(t2));
        findings.push(joint("pseudo_set", [set1, set2]));
    }

    Ok(BisubstructureReport { findings })
}

/// A pair of membership maps, one per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFuzzyMap {
    pub first: FuzzyMap,
    pub second: FuzzyMap,
}

/// The fuzzy condition profile a bistructure kind imposes per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiFuzzyKind {
    SetBivector,
    SetBilinear,
    SemigroupBivector,
    SemigroupBilinear,
    GroupBivector,
    BisetBivector,
    BisemigroupBivector,
    BigroupBivector,
}

impl BiFuzzyKind {
    pub fn name(&self) -> &'static str {
        match self {
            BiFuzzyKind::SetBivector => "set-bivector",
            BiFuzzyKind::SetBilinear => "set-bilinear",
            BiFuzzyKind::SemigroupBivector => "semigroup-bivector",
            BiFuzzyKind::SemigroupBilinear => "semigroup-bilinear",
            BiFuzzyKind::GroupBivector => "group-bivector",
            BiFuzzyKind::BisetBivector => "biset-bivector",
            BiFuzzyKind::BisemigroupBivector => "bisemigroup-bivector",
            BiFuzzyKind::BigroupBivector => "bigroup-bivector",
        }
    }

    fn conditions(&self) -> FuzzyConditions {
        let monotone = FuzzyConditions {
            scalar_monotone: true,
            ..FuzzyConditions::default()
        };
        match self {
            BiFuzzyKind::SetBivector
            | BiFuzzyKind::SemigroupBivector
            | BiFuzzyKind::BisetBivector => monotone,
            BiFuzzyKind::SetBilinear
            | BiFuzzyKind::SemigroupBilinear
            | BiFuzzyKind::BisemigroupBivector => FuzzyConditions {
                min_superadditive: true,
                scalar_monotone: true,
                ..FuzzyConditions::default()
            },
            BiFuzzyKind::GroupBivector => FuzzyConditions {
                min_superadditive: true,
                negation_symmetric: true,
                zero_is_one: true,
                scalar_monotone: true,
                ..FuzzyConditions::default()
            },
            BiFuzzyKind::BigroupBivector => FuzzyConditions {
                scalar_monotone: true,
                fixes_indeterminate: true,
                ..FuzzyConditions::default()
            },
        }
    }
}

impl std::str::FromStr for BiFuzzyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<BiFuzzyKind, String> {
        match s {
            "set-bivector" => Ok(BiFuzzyKind::SetBivector),
            "set-bilinear" => Ok(BiFuzzyKind::SetBilinear),
            "semigroup-bivector" => Ok(BiFuzzyKind::SemigroupBivector),
            "semigroup-bilinear" => Ok(BiFuzzyKind::SemigroupBilinear),
            "group-bivector" => Ok(BiFuzzyKind::GroupBivector),
            "biset-bivector" => Ok(BiFuzzyKind::BisetBivector),
            "bisemigroup-bivector" => Ok(BiFuzzyKind::BisemigroupBivector),
            "bigroup-bivector" => Ok(BiFuzzyKind::BigroupBivector),
            other => Err(format!("unknown bifuzzy kind `{other}`")),
        }
    }
}

/// Verify a fuzzy bimap side by side; the pair passes only when both sides
/// pass. The bistructure itself must verify first.
pub fn verify_bifuzzy(
    map: &BiFuzzyMap,
    b: &BiStructureDef,
    kind: BiFuzzyKind,
) -> Result<VerificationReport> {
    let structural = verify_bistructure(b);
    if !structural.passed() {
        let axiom = structural
            .first_failure()
            .map(|c| c.id.clone())
            .unwrap_or_default();
        return Err(Error::PrerequisiteFailed(format!(
            "bistructure fails {axiom}"
        )));
    }
    if map.first.structure().carrier() != b.first.carrier()
        || map.second.structure().carrier() != b.second.carrier()
    {
        return Err(Error::PrerequisiteFailed(
            "bimap sides do not match the bistructure carriers".into(),
        ));
    }
    let mut report = VerificationReport::new();
    for (prefix, side, structure) in [
        ("side1", &map.first, &b.first),
        ("side2", &map.second, &b.second),
    ] {
        let mut side_report = VerificationReport::new();
        let grade = |v: &Element| side.grade(v);
        evaluate_conditions(structure, &grade, kind.conditions(), &mut side_report)?;
        report.absorb(prefix, side_report);
    }
    Ok(report)
}
