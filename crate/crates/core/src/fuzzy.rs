//! Verification of membership maps eta : V -> N([0, 1]) against the fuzzy
//! structure classes, plus restriction to substructures.
//!
//! All comparisons use the componentwise order on N([0, 1]); a failed
//! comparison is tagged as a strict violation or as incomparable so the
//! verdict can be re-read under other orders.

use std::collections::BTreeMap;

use crate::algebra::{verify, StructureDef, StructureKind};
use crate::carrier::{elem_add, elem_neg, scalar_act, Element};
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, VerificationReport, Witness};
use crate::ring::{FuzzyNeutroValue, FuzzyOrder, NeutroNumber};

/// A total membership table over a structure's carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyMap {
    structure: StructureDef,
    table: BTreeMap<Element, FuzzyNeutroValue>,
}

impl FuzzyMap {
    pub fn new(
        structure: StructureDef,
        table: BTreeMap<Element, FuzzyNeutroValue>,
    ) -> Result<FuzzyMap> {
        for v in structure.carrier() {
            if !table.contains_key(v) {
                return Err(Error::NotTotal(v.to_string()));
            }
        }
        for v in table.keys() {
            if !structure.carrier().contains(v) {
                return Err(Error::NotTotal(format!("{v} is not a carrier element")));
            }
        }
        Ok(FuzzyMap { structure, table })
    }

    /// The constant map sending everything to one value.
    pub fn constant(structure: StructureDef, value: FuzzyNeutroValue) -> FuzzyMap {
        let table = structure
            .carrier()
            .iter()
            .map(|v| (v.clone(), value))
            .collect();
        FuzzyMap { structure, table }
    }

    pub fn structure(&self) -> &StructureDef {
        &self.structure
    }

    pub fn table(&self) -> &BTreeMap<Element, FuzzyNeutroValue> {
        &self.table
    }

    pub fn grade(&self, v: &Element) -> Option<FuzzyNeutroValue> {
        self.table.get(v).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzyKind {
    SetVs,
    SetLa,
    SemigroupVs,
    SemigroupLa,
    GroupVs,
    GroupLa,
    /// The classical profile: like `GroupLa` but with monotone (not equal)
    /// scalar action.
    GroupLaClassical,
}

impl FuzzyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FuzzyKind::SetVs => "setvs",
            FuzzyKind::SetLa => "setla",
            FuzzyKind::SemigroupVs => "semivs",
            FuzzyKind::SemigroupLa => "semila",
            FuzzyKind::GroupVs => "groupvs",
            FuzzyKind::GroupLa => "groupla",
            FuzzyKind::GroupLaClassical => "groupla-classical",
        }
    }

    /// The structure kind the carrier must verify before the membership
    /// conditions mean anything.
    pub fn prerequisite(&self) -> StructureKind {
        match self {
            FuzzyKind::SetVs => StructureKind::SetVs,
            FuzzyKind::SetLa => StructureKind::SetLa,
            FuzzyKind::SemigroupVs => StructureKind::SemigroupVs,
            FuzzyKind::SemigroupLa => StructureKind::SemigroupLa,
            FuzzyKind::GroupVs => StructureKind::GroupVs,
            FuzzyKind::GroupLa | FuzzyKind::GroupLaClassical => StructureKind::GroupLa,
        }
    }

    pub(crate) fn conditions(&self) -> FuzzyConditions {
        match self {
            FuzzyKind::SetVs => FuzzyConditions::default(),
            FuzzyKind::SetLa => FuzzyConditions {
                min_superadditive: true,
                fixes_indeterminate: true,
                ..FuzzyConditions::default()
            },
            FuzzyKind::SemigroupVs => FuzzyConditions {
                scalar_monotone: true,
                ..FuzzyConditions::default()
            },
            FuzzyKind::SemigroupLa => FuzzyConditions {
                min_superadditive: true,
                scalar_monotone: true,
                ..FuzzyConditions::default()
            },
            FuzzyKind::GroupVs => FuzzyConditions {
                scalar_monotone: true,
                fixes_indeterminate: true,
                ..FuzzyConditions::default()
            },
            FuzzyKind::GroupLa => FuzzyConditions {
                min_superadditive: true,
                negation_symmetric: true,
                zero_is_one: true,
                scalar_equal: true,
                ..FuzzyConditions::default()
            },
            FuzzyKind::GroupLaClassical => FuzzyConditions {
                min_superadditive: true,
                negation_symmetric: true,
                zero_is_one: true,
                scalar_monotone: true,
                ..FuzzyConditions::default()
            },
        }
    }
}

impl std::str::FromStr for FuzzyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<FuzzyKind, String> {
        match s {
            "setvs" => Ok(FuzzyKind::SetVs),
            "setla" => Ok(FuzzyKind::SetLa),
            "semivs" => Ok(FuzzyKind::SemigroupVs),
            "semila" => Ok(FuzzyKind::SemigroupLa),
            "groupvs" => Ok(FuzzyKind::GroupVs),
            "groupla" => Ok(FuzzyKind::GroupLa),
            "groupla-classical" => Ok(FuzzyKind::GroupLaClassical),
            other => Err(format!("unknown fuzzy kind `{other}`")),
        }
    }
}

/// Which membership conditions a fuzzy kind imposes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct FuzzyConditions {
    pub min_superadditive: bool,
    pub scalar_monotone: bool,
    pub scalar_equal: bool,
    pub negation_symmetric: bool,
    pub zero_is_one: bool,
    pub fixes_indeterminate: bool,
}

fn comparison_tag(order: FuzzyOrder) -> &'static str {
    match order {
        FuzzyOrder::Incomparable => "incomparable",
        _ => "strict violation",
    }
}

pub(crate) fn evaluate_conditions(
    structure: &StructureDef,
    grade: &dyn Fn(&Element) -> Option<FuzzyNeutroValue>,
    conds: FuzzyConditions,
    report: &mut VerificationReport,
) -> Result<()> {
    let carrier = structure.carrier();
    let lookup = |v: &Element| -> Result<FuzzyNeutroValue> {
        grade(v).ok_or_else(|| Error::NotTotal(v.to_string()))
    };

    if conds.min_superadditive {
        let mut check = AxiomCheck::pass("fuzzy.min_superadd");
        'min: for a in carrier {
            for b in carrier {
                if a.shape() != b.shape() {
                    continue;
                }
                let sum = elem_add(a, b)?;
                if !carrier.contains(&sum) {
                    continue;
                }
                let floor = lookup(a)?.meet(&lookup(b)?);
                let at_sum = lookup(&sum)?;
                if !at_sum.dominates(&floor) {
                    check = AxiomCheck::fail(
                        "fuzzy.min_superadd",
                        Witness::new(format!(
                            "grade at the sum drops below the min ({})",
                            comparison_tag(floor.compare(&at_sum))
                        ))
                        .element("left", a)
                        .element("right", b)
                        .fuzzy("min", &floor)
                        .fuzzy("at_sum", &at_sum),
                    );
                    break 'min;
                }
            }
        }
        report.push(check);
    }

    if conds.scalar_monotone || conds.scalar_equal {
        let id = if conds.scalar_equal {
            "fuzzy.scalar_equal"
        } else {
            "fuzzy.scalar_monotone"
        };
        let mut check = AxiomCheck::pass(id);
        'scal: for r in structure.scalars().members() {
            for a in carrier {
                let ra = scalar_act(r, a)?;
                if !carrier.contains(&ra) {
                    continue;
                }
                let at_a = lookup(a)?;
                let at_ra = lookup(&ra)?;
                let bad = if conds.scalar_equal {
                    at_ra != at_a
                } else {
                    !at_ra.dominates(&at_a)
                };
                if bad {
                    check = AxiomCheck::fail(
                        id,
                        Witness::new(format!(
                            "grade under the scalar action misbehaves ({})",
                            comparison_tag(at_a.compare(&at_ra))
                        ))
                        .number("scalar", r)
                        .element("vector", a)
                        .fuzzy("at_vector", &at_a)
                        .fuzzy("at_scaled", &at_ra),
                    );
                    break 'scal;
                }
            }
        }
        report.push(check);
    }

    if conds.negation_symmetric {
        let mut check = AxiomCheck::pass("fuzzy.negation_symmetric");
        for a in carrier {
            let minus = elem_neg(a);
            if !carrier.contains(&minus) {
                check = AxiomCheck::fail(
                    "fuzzy.negation_symmetric",
                    Witness::new("carrier lacks the negation").element("vector", a),
                );
                break;
            }
            if lookup(a)? != lookup(&minus)? {
                check = AxiomCheck::fail(
                    "fuzzy.negation_symmetric",
                    Witness::new("grade differs under negation")
                        .element("vector", a)
                        .fuzzy("at_vector", &lookup(a)?)
                        .fuzzy("at_negation", &lookup(&minus)?),
                );
                break;
            }
        }
        report.push(check);
    }

    if conds.zero_is_one {
        let mut check = AxiomCheck::pass("fuzzy.zero_is_one");
        for z in carrier.iter().filter(|e| e.is_zero()) {
            let at_zero = lookup(z)?;
            if at_zero != FuzzyNeutroValue::one() {
                check = AxiomCheck::fail(
                    "fuzzy.zero_is_one",
                    Witness::new("zero is not graded 1")
                        .element("zero", z)
                        .fuzzy("grade", &at_zero),
                );
                break;
            }
        }
        report.push(check);
    }

    if conds.fixes_indeterminate {
        let indeterminate = Element::scalar(NeutroNumber::indeterminate(structure.ring()));
        if carrier.contains(&indeterminate) {
            let at = lookup(&indeterminate)?;
            if at == FuzzyNeutroValue::indeterminate() {
                report.push(AxiomCheck::pass("fuzzy.fixes_indeterminate"));
            } else {
                report.push(AxiomCheck::fail(
                    "fuzzy.fixes_indeterminate",
                    Witness::new("the indeterminate is not graded I").fuzzy("grade", &at),
                ));
            }
        }
    }

    Ok(())
}

/// Exhaustively verify a membership map for a fuzzy kind. The underlying
/// structure must verify for the kind's prerequisite first.
pub fn verify_fuzzy(map: &FuzzyMap, kind: FuzzyKind) -> Result<VerificationReport> {
    let prereq = map.structure().with_kind(kind.prerequisite());
    let prereq_report = verify(&prereq);
    if !prereq_report.passed() {
        let axiom = prereq_report
            .first_failure()
            .map(|c| c.id.clone())
            .unwrap_or_default();
        return Err(Error::PrerequisiteFailed(format!(
            "carrier is not a {} structure (fails {axiom})",
            kind.prerequisite()
        )));
    }
    let mut report = VerificationReport::new();
    let grade = |v: &Element| map.grade(v);
    evaluate_conditions(&prereq, &grade, kind.conditions(), &mut report)?;
    Ok(report)
}

/// Restrict a membership map to a subset of the carrier; the structure is
/// replaced by the substructure on that subset.
pub fn restrict_fuzzy(map: &FuzzyMap, subset: &std::collections::BTreeSet<Element>) -> Result<FuzzyMap> {
    if !subset.is_subset(map.structure().carrier()) {
        return Err(Error::NotSubset);
    }
    let structure = map.structure().with_carrier(subset.clone())?;
    let table = subset
        .iter()
        .map(|v| (v.clone(), map.grade(v).expect("total on the parent")))
        .collect();
    FuzzyMap::new(structure, table)
}
