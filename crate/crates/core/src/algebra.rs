//! Scalar-set profiling, closure under an adjoined indeterminate, and
//! witnessed axiom verification for the six structure classes
//! (set / semigroup / group, each in vector-space and linear-algebra form).

use std::collections::BTreeSet;

use crate::carrier::{elem_add, elem_neg, scalar_act, zero_like, Element, Shape};
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, VerificationReport, Witness};
use crate::ring::{BaseRing, NeutroNumber, NumberClass};

/// A finite set of scalars acting on a carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScalarSet {
    ring: BaseRing,
    members: BTreeSet<NeutroNumber>,
}

impl ScalarSet {
    pub fn new(ring: BaseRing, members: BTreeSet<NeutroNumber>) -> Result<ScalarSet> {
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        for m in &members {
            if m.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), m.ring().to_string()));
            }
        }
        Ok(ScalarSet { ring, members })
    }

    pub fn from_ints(ring: BaseRing, values: &[(i64, i64)]) -> ScalarSet {
        let members = values
            .iter()
            .map(|&(a, b)| NeutroNumber::from_ints(ring, a, b))
            .collect();
        ScalarSet::new(ring, members).expect("nonempty integer scalar set")
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn members(&self) -> &BTreeSet<NeutroNumber> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: &NeutroNumber) -> bool {
        self.members.contains(n)
    }

    pub fn is_proper_subset_of(&self, other: &ScalarSet) -> bool {
        self.members.is_subset(&other.members) && self.members.len() < other.members.len()
    }
}

/// Recomputable facts about a scalar set under ring addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarProfile {
    pub contains_zero: bool,
    pub contains_one: bool,
    pub contains_i: bool,
    pub closed_under_add: bool,
    pub is_additive_semigroup: bool,
    pub is_additive_group: bool,
    pub is_pure_neutrosophic: bool,
    /// First pair escaping the set under addition, when not closed.
    pub closure_witness: Option<(NeutroNumber, NeutroNumber, NeutroNumber)>,
    /// First member without an additive inverse in the set, when closed
    /// with zero but not a group.
    pub inverse_witness: Option<NeutroNumber>,
}

pub fn scalar_profile(s: &ScalarSet) -> ScalarProfile {
    let ring = s.ring();
    let zero = NeutroNumber::zero(ring);
    let one = NeutroNumber::one(ring);
    let ind = NeutroNumber::indeterminate(ring);

    let mut closure_witness = None;
    'outer: for a in s.members() {
        for b in s.members() {
            let sum = a.add(b).expect("same ring");
            if !s.contains(&sum) {
                closure_witness = Some((*a, *b, sum));
                break 'outer;
            }
        }
    }
    let closed = closure_witness.is_none();
    let contains_zero = s.contains(&zero);

    let mut inverse_witness = None;
    if closed && contains_zero {
        for a in s.members() {
            if !s.contains(&a.neg()) {
                inverse_witness = Some(*a);
                break;
            }
        }
    }

    ScalarProfile {
        contains_zero,
        contains_one: s.contains(&one),
        contains_i: s.contains(&ind),
        closed_under_add: closed,
        is_additive_semigroup: closed,
        is_additive_group: closed && contains_zero && inverse_witness.is_none(),
        is_pure_neutrosophic: s
            .members()
            .iter()
            .all(|m| m.is_zero() || m.classify() == NumberClass::PureNeutrosophic),
        closure_witness,
        inverse_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOp {
    Add,
    Mul,
}

fn apply(op: ClosureOp, a: &NeutroNumber, b: &NeutroNumber) -> NeutroNumber {
    match op {
        ClosureOp::Add => a.add(b).expect("same ring"),
        ClosureOp::Mul => a.mul(b).expect("same ring"),
    }
}

/// Smallest op-closed superset of `base` together with the indeterminate.
/// Exact for modular rings; over Z and Q the `cap` bounds growth.
pub fn neutro_closure(
    base: &BTreeSet<NeutroNumber>,
    op: ClosureOp,
    ring: BaseRing,
    cap: usize,
) -> Result<BTreeSet<NeutroNumber>> {
    let mut out: BTreeSet<NeutroNumber> = base.clone();
    for m in &out {
        if m.ring() != ring {
            return Err(Error::RingMismatch(ring.to_string(), m.ring().to_string()));
        }
    }
    out.insert(NeutroNumber::indeterminate(ring));
    // worklist closure: each popped element meets everything known so far
    let mut queue: Vec<NeutroNumber> = out.iter().copied().collect();
    while let Some(a) = queue.pop() {
        let snapshot: Vec<NeutroNumber> = out.iter().copied().collect();
        for b in snapshot {
            for v in [apply(op, &a, &b), apply(op, &b, &a)] {
                if out.insert(v) {
                    queue.push(v);
                    if out.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Strongest class a finite set satisfies under one ring operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MagmaClass {
    NotClosed,
    Semigroup,
    Monoid,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagmaProfile {
    pub class: MagmaClass,
    pub identity: Option<NeutroNumber>,
    /// Why the next stronger class fails.
    pub witness: Option<Witness>,
}

pub fn magma_profile(
    set: &BTreeSet<NeutroNumber>,
    op: ClosureOp,
    ring: BaseRing,
) -> Result<MagmaProfile> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    for m in set {
        if m.ring() != ring {
            return Err(Error::RingMismatch(ring.to_string(), m.ring().to_string()));
        }
    }
    for a in set {
        for b in set {
            let v = apply(op, a, b);
            if !set.contains(&v) {
                return Ok(MagmaProfile {
                    class: MagmaClass::NotClosed,
                    identity: None,
                    witness: Some(
                        Witness::new("product escapes the set")
                            .number("left", a)
                            .number("right", b)
                            .number("product", &v),
                    ),
                });
            }
        }
    }
    // Both ring operations are commutative, so one-sided checks suffice.
    let identity = set
        .iter()
        .find(|e| set.iter().all(|x| apply(op, e, x) == *x))
        .copied();
    let Some(e) = identity else {
        return Ok(MagmaProfile {
            class: MagmaClass::Semigroup,
            identity: None,
            witness: Some(Witness::new("no identity element in the set")),
        });
    };
    for x in set {
        if !set.iter().any(|y| apply(op, x, y) == e) {
            return Ok(MagmaProfile {
                class: MagmaClass::Monoid,
                identity: Some(e),
                witness: Some(Witness::new("element has no inverse").number("element", x)),
            });
        }
    }
    Ok(MagmaProfile {
        class: MagmaClass::Group,
        identity: Some(e),
        witness: None,
    })
}

/// Neutrosophic content of a carrier, judged entrywise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mixedness {
    MixedNeutrosophic,
    PureNeutrosophic,
    NonNeutrosophic,
}

pub fn mixedness<'a, It: IntoIterator<Item = &'a Element>>(carrier: It) -> Mixedness {
    let mut saw_real = false;
    let mut saw_neutro = false;
    for element in carrier {
        for entry in element.entries() {
            match entry.classify() {
                NumberClass::PureNeutrosophic => saw_neutro = true,
                NumberClass::RealOnly => saw_real = true,
                NumberClass::Zero => {}
            }
        }
    }
    match (saw_neutro, saw_real) {
        (true, false) => Mixedness::PureNeutrosophic,
        (false, _) => Mixedness::NonNeutrosophic,
        (true, true) => Mixedness::MixedNeutrosophic,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    SetVs,
    SetLa,
    SemigroupVs,
    SemigroupLa,
    GroupVs,
    GroupLa,
}

impl StructureKind {
    pub const ALL: [StructureKind; 6] = [
        StructureKind::SetVs,
        StructureKind::SetLa,
        StructureKind::SemigroupVs,
        StructureKind::SemigroupLa,
        StructureKind::GroupVs,
        StructureKind::GroupLa,
    ];

    pub fn is_linear_algebra(&self) -> bool {
        matches!(
            self,
            StructureKind::SetLa | StructureKind::SemigroupLa | StructureKind::GroupLa
        )
    }

    /// The vector-space kind of the same scalar flavor.
    pub fn vector_space_kind(&self) -> StructureKind {
        match self {
            StructureKind::SetLa => StructureKind::SetVs,
            StructureKind::SemigroupLa => StructureKind::SemigroupVs,
            StructureKind::GroupLa => StructureKind::GroupVs,
            other => *other,
        }
    }

    /// The linear-algebra kind of the same scalar flavor.
    pub fn linear_algebra_kind(&self) -> StructureKind {
        match self {
            StructureKind::SetVs => StructureKind::SetLa,
            StructureKind::SemigroupVs => StructureKind::SemigroupLa,
            StructureKind::GroupVs => StructureKind::GroupLa,
            other => *other,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StructureKind::SetVs => "setvs",
            StructureKind::SetLa => "setla",
            StructureKind::SemigroupVs => "semivs",
            StructureKind::SemigroupLa => "semila",
            StructureKind::GroupVs => "groupvs",
            StructureKind::GroupLa => "groupla",
        }
    }

    fn prefix(&self) -> &'static str {
        self.name()
    }
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A finitely presented carrier with its scalar set and a claimed kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StructureDef {
    carrier: BTreeSet<Element>,
    scalars: ScalarSet,
    kind: StructureKind,
}

impl StructureDef {
    pub fn new(
        carrier: BTreeSet<Element>,
        scalars: ScalarSet,
        kind: StructureKind,
    ) -> Result<StructureDef> {
        if carrier.is_empty() {
            return Err(Error::EmptySet);
        }
        for e in &carrier {
            if e.ring() != scalars.ring() {
                return Err(Error::RingMismatch(
                    scalars.ring().to_string(),
                    e.ring().to_string(),
                ));
            }
        }
        Ok(StructureDef {
            carrier,
            scalars,
            kind,
        })
    }

    pub fn carrier(&self) -> &BTreeSet<Element> {
        &self.carrier
    }

    pub fn scalars(&self) -> &ScalarSet {
        &self.scalars
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn ring(&self) -> BaseRing {
        self.scalars.ring()
    }

    pub fn with_kind(&self, kind: StructureKind) -> StructureDef {
        StructureDef {
            carrier: self.carrier.clone(),
            scalars: self.scalars.clone(),
            kind,
        }
    }

    pub fn with_scalars(&self, scalars: ScalarSet) -> Result<StructureDef> {
        StructureDef::new(self.carrier.clone(), scalars, self.kind)
    }

    pub fn with_carrier(&self, carrier: BTreeSet<Element>) -> Result<StructureDef> {
        StructureDef::new(carrier, self.scalars.clone(), self.kind)
    }

    /// True when the scalar indeterminate, as a scalar-shaped element,
    /// belongs to the carrier.
    pub fn carries_indeterminate(&self) -> bool {
        self.carrier
            .contains(&Element::scalar(NeutroNumber::indeterminate(self.ring())))
    }
}

fn check_scalar_closure(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    for s in def.scalars().members() {
        for v in def.carrier() {
            let image = scalar_act(s, v).expect("ring-homogeneous structure");
            if !def.carrier().contains(&image) {
                report.push(AxiomCheck::fail(
                    id,
                    Witness::new("scalar action leaves the carrier")
                        .number("scalar", s)
                        .element("vector", v)
                        .element("product", &image),
                ));
                return;
            }
        }
    }
    report.push(AxiomCheck::pass(id));
}

fn check_add_closure(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    for v in def.carrier() {
        for w in def.carrier() {
            match elem_add(v, w) {
                Err(_) => {
                    report.push(AxiomCheck::fail(
                        id,
                        Witness::new("addition undefined across shapes")
                            .element("left", v)
                            .element("right", w),
                    ));
                    return;
                }
                Ok(sum) => {
                    if !def.carrier().contains(&sum) {
                        report.push(AxiomCheck::fail(
                            id,
                            Witness::new("sum escapes the carrier")
                                .element("left", v)
                                .element("right", w)
                                .element("sum", &sum),
                        ));
                        return;
                    }
                }
            }
        }
    }
    report.push(AxiomCheck::pass(id));
}

fn check_zero_action(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    for v in def.carrier() {
        let zero = zero_like(v);
        if !def.carrier().contains(&zero) {
            report.push(AxiomCheck::fail(
                id,
                Witness::new("shaped zero missing from the carrier")
                    .element("vector", v)
                    .element("zero", &zero),
            ));
            return;
        }
    }
    report.push(AxiomCheck::pass(id));
}

fn check_scalar_distrib(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    for s1 in def.scalars().members() {
        for s2 in def.scalars().members() {
            let sum = s1.add(s2).expect("same ring");
            for v in def.carrier() {
                let lhs = scalar_act(&sum, v).expect("same ring");
                let rhs = elem_add(
                    &scalar_act(s1, v).expect("same ring"),
                    &scalar_act(s2, v).expect("same ring"),
                )
                .expect("same shape");
                if lhs != rhs {
                    report.push(AxiomCheck::fail(
                        id,
                        Witness::new("scalar distributivity broke")
                            .number("s1", s1)
                            .number("s2", s2)
                            .element("vector", v),
                    ));
                    return;
                }
            }
        }
    }
    report.push(AxiomCheck::pass(id));
}

fn check_vector_distrib(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    for s in def.scalars().members() {
        for v in def.carrier() {
            for w in def.carrier() {
                if v.shape() != w.shape() {
                    continue;
                }
                let sum = elem_add(v, w).expect("same shape");
                let lhs = scalar_act(s, &sum).expect("same ring");
                let rhs = elem_add(
                    &scalar_act(s, v).expect("same ring"),
                    &scalar_act(s, w).expect("same ring"),
                )
                .expect("same shape");
                if lhs != rhs {
                    report.push(AxiomCheck::fail(
                        id,
                        Witness::new("action does not distribute over vector addition")
                            .number("scalar", s)
                            .element("left", v)
                            .element("right", w),
                    ));
                    return;
                }
            }
        }
    }
    report.push(AxiomCheck::pass(id));
}

fn check_scalar_semigroup(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    let profile = scalar_profile(def.scalars());
    if let Some((a, b, sum)) = profile.closure_witness {
        report.push(AxiomCheck::fail(
            id,
            Witness::new("scalar set is not closed under addition")
                .number("left", &a)
                .number("right", &b)
                .number("sum", &sum),
        ));
    } else if !profile.contains_zero {
        report.push(AxiomCheck::fail(
            id,
            Witness::new("scalar set lacks the zero element"),
        ));
    } else {
        report.push(AxiomCheck::pass(id));
    }
}

fn check_scalar_group(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    let profile = scalar_profile(def.scalars());
    if let Some((a, b, sum)) = profile.closure_witness {
        report.push(AxiomCheck::fail(
            id,
            Witness::new("scalar set is not closed under addition")
                .number("left", &a)
                .number("right", &b)
                .number("sum", &sum),
        ));
    } else if !profile.contains_zero {
        report.push(AxiomCheck::fail(
            id,
            Witness::new("scalar set lacks the zero element"),
        ));
    } else if let Some(orphan) = profile.inverse_witness {
        report.push(AxiomCheck::fail(
            id,
            Witness::new("scalar without additive inverse").number("scalar", &orphan),
        ));
    } else {
        report.push(AxiomCheck::pass(id));
    }
}

fn check_carrier_group(report: &mut VerificationReport, id: &str, def: &StructureDef) {
    let shapes: BTreeSet<Shape> = def.carrier().iter().map(Element::shape).collect();
    if shapes.len() > 1 {
        let mut it = shapes.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        report.push(AxiomCheck::fail(
            id,
            Witness::new(format!(
                "carrier mixes shapes {a} and {b}, so addition is partial"
            )),
        ));
        return;
    }
    for v in def.carrier() {
        for w in def.carrier() {
            let sum = elem_add(v, w).expect("single shape");
            if !def.carrier().contains(&sum) {
                report.push(AxiomCheck::fail(
                    id,
                    Witness::new("sum escapes the carrier")
                        .element("left", v)
                        .element("right", w)
                        .element("sum", &sum),
                ));
                return;
            }
        }
    }
    for v in def.carrier() {
        if !def.carrier().contains(&zero_like(v)) {
            report.push(AxiomCheck::fail(
                id,
                Witness::new("carrier lacks its zero").element("vector", v),
            ));
            return;
        }
        let negated = elem_neg(v);
        if !def.carrier().contains(&negated) {
            report.push(AxiomCheck::fail(
                id,
                Witness::new("element without additive inverse").element("vector", v),
            ));
            return;
        }
    }
    report.push(AxiomCheck::pass(id));
}

/// Exhaustively verify the structure axioms for the definition's kind.
pub fn verify(def: &StructureDef) -> VerificationReport {
    let mut report = VerificationReport::new();
    let kind = def.kind();
    let p = kind.prefix();
    match kind {
        StructureKind::SetVs | StructureKind::SetLa => {
            if def.scalars().len() < 2 {
                report.warn("scalar set has fewer than two members");
            }
            check_scalar_closure(&mut report, &format!("{p}.closure"), def);
            if kind == StructureKind::SetLa {
                check_add_closure(&mut report, &format!("{p}.add_closure"), def);
            }
        }
        StructureKind::SemigroupVs | StructureKind::SemigroupLa => {
            check_scalar_semigroup(&mut report, &format!("{p}.scalar_semigroup"), def);
            check_scalar_closure(&mut report, &format!("{p}.closure"), def);
            check_zero_action(&mut report, &format!("{p}.zero_action"), def);
            check_scalar_distrib(&mut report, &format!("{p}.distrib"), def);
            if kind == StructureKind::SemigroupLa {
                check_add_closure(&mut report, &format!("{p}.add_closure"), def);
                check_vector_distrib(&mut report, &format!("{p}.vector_distrib"), def);
            }
        }
        StructureKind::GroupVs | StructureKind::GroupLa => {
            check_scalar_group(&mut report, &format!("{p}.scalar_group"), def);
            check_scalar_closure(&mut report, &format!("{p}.closure"), def);
            check_zero_action(&mut report, &format!("{p}.zero_action"), def);
            if kind == StructureKind::GroupLa {
                check_carrier_group(&mut report, &format!("{p}.carrier_group"), def);
            }
        }
    }
    report
}

/// Every kind the pair (carrier, scalars) satisfies, in ladder order.
pub fn classify(carrier: &BTreeSet<Element>, scalars: &ScalarSet) -> Result<Vec<StructureKind>> {
    let mut passing = Vec::new();
    for kind in StructureKind::ALL {
        let def = StructureDef::new(carrier.clone(), scalars.clone(), kind)?;
        if verify(&def).passed() {
            passing.push(kind);
        }
    }
    Ok(passing)
}
