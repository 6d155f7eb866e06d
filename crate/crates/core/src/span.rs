//! Span computation, generating-set verification, independence tests and
//! minimal generating sets (dimension).
//!
//! Span always contains the generating set itself: many of the structures
//! under study have no unit scalar, so a generator can only reach itself
//! this way. Vector mode closes under the scalar action only; linear mode
//! additionally closes under shape-compatible addition of already-reached
//! elements, which is equivalent to taking all finite sums of scaled
//! generators.

use std::collections::BTreeSet;

use crate::algebra::{ScalarSet, StructureDef, StructureKind};
use crate::carrier::{elem_add, scalar_act, Element};
use crate::error::{Error, Result};
use crate::report::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanMode {
    /// Generators and their scalar multiples.
    Vector,
    /// All finite sums of scaled (or bare) generators.
    Linear,
}

impl SpanMode {
    pub fn for_kind(kind: StructureKind) -> SpanMode {
        if kind.is_linear_algebra() {
            SpanMode::Linear
        } else {
            SpanMode::Vector
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GensetMethod {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorReport {
    pub generating_set: Vec<Element>,
    pub cardinality: usize,
    pub method: GensetMethod,
    pub certified_minimal: bool,
}

fn scaled_seed(generators: &BTreeSet<Element>, scalars: &ScalarSet) -> Result<BTreeSet<Element>> {
    let mut seed = generators.clone();
    for s in scalars.members() {
        for t in generators {
            seed.insert(scalar_act(s, t)?);
        }
    }
    Ok(seed)
}

fn additive_fixpoint(seed: BTreeSet<Element>, cap: usize) -> Result<BTreeSet<Element>> {
    let mut out = seed;
    if out.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut queue: Vec<Element> = out.iter().cloned().collect();
    while let Some(a) = queue.pop() {
        let snapshot: Vec<Element> = out.iter().cloned().collect();
        for b in snapshot {
            if a.shape() != b.shape() {
                continue;
            }
            let sum = elem_add(&a, &b)?;
            if out.insert(sum.clone()) {
                if out.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push(sum);
            }
        }
    }
    Ok(out)
}

/// The set reachable from `generators` under the given mode. Empty input
/// spans the empty set.
pub fn span(
    generators: &BTreeSet<Element>,
    scalars: &ScalarSet,
    mode: SpanMode,
    cap: usize,
) -> Result<BTreeSet<Element>> {
    if generators.is_empty() {
        return Ok(BTreeSet::new());
    }
    let seed = scaled_seed(generators, scalars)?;
    match mode {
        SpanMode::Vector => {
            if seed.len() > cap {
                Err(Error::CapExceeded { cap })
            } else {
                Ok(seed)
            }
        }
        SpanMode::Linear => additive_fixpoint(seed, cap),
    }
}

/// Does `generators` span the whole carrier in the structure's mode?
/// Returns the first uncovered element as a witness otherwise.
pub fn is_generating(
    generators: &BTreeSet<Element>,
    structure: &StructureDef,
    cap: usize,
) -> Result<(bool, Option<Element>)> {
    if !generators.is_subset(structure.carrier()) {
        return Err(Error::NotSubset);
    }
    let reached = span(
        generators,
        structure.scalars(),
        SpanMode::for_kind(structure.kind()),
        cap,
    )?;
    match structure.carrier().iter().find(|v| !reached.contains(*v)) {
        None => Ok((true, None)),
        Some(missing) => Ok((false, Some(missing.clone()))),
    }
}

/// Sums of scalar multiples of the generators (no bare generators), the
/// dependency notion for linear-algebra independence.
fn scaled_sums_only(
    generators: &BTreeSet<Element>,
    scalars: &ScalarSet,
    cap: usize,
) -> Result<BTreeSet<Element>> {
    if generators.is_empty() {
        return Ok(BTreeSet::new());
    }
    let mut seed = BTreeSet::new();
    for s in scalars.members() {
        for t in generators {
            seed.insert(scalar_act(s, t)?);
        }
    }
    additive_fixpoint(seed, cap)
}

/// Independence in the structure's own sense. Vector-space kinds forbid one
/// generator being a scalar multiple of another; the semigroup linear
/// algebra adds sums of scaled others; the group linear algebra asks that
/// only the all-zero coefficient vector reaches zero.
pub fn is_independent(
    generators: &BTreeSet<Element>,
    structure: &StructureDef,
    cap: usize,
) -> Result<(bool, Option<Witness>)> {
    if !generators.is_subset(structure.carrier()) {
        return Err(Error::NotSubset);
    }
    if generators.is_empty() {
        return Err(Error::EmptySet);
    }
    for p1 in generators {
        for p2 in generators {
            if p1 == p2 {
                continue;
            }
            for a in structure.scalars().members() {
                if &scalar_act(a, p2)? == p1 {
                    return Ok((
                        false,
                        Some(
                            Witness::new("one generator is a scalar multiple of another")
                                .element("dependent", p1)
                                .number("scalar", a)
                                .element("base", p2),
                        ),
                    ));
                }
            }
        }
    }
    match structure.kind() {
        StructureKind::SemigroupLa => {
            for t in generators {
                let mut others = generators.clone();
                others.remove(t);
                if others.is_empty() {
                    continue;
                }
                let reach = scaled_sums_only(&others, structure.scalars(), cap)?;
                if reach.contains(t) {
                    return Ok((
                        false,
                        Some(
                            Witness::new("generator is a sum of scaled others").element("dependent", t),
                        ),
                    ));
                }
            }
        }
        StructureKind::GroupLa => {
            let gens: Vec<&Element> = generators.iter().collect();
            if let Some(stray) = gens.iter().find(|g| g.shape() != gens[0].shape()) {
                return Err(Error::ShapeMismatch(
                    gens[0].shape().to_string(),
                    stray.shape().to_string(),
                ));
            }
            let coeffs: Vec<_> = structure.scalars().members().iter().copied().collect();
            let zero_scalar = crate::ring::NeutroNumber::zero(structure.ring());
            let zero = crate::carrier::zero_like(gens[0]);
            let mut assignment = vec![0usize; gens.len()];
            loop {
                let mut acc = zero.clone();
                let mut all_zero_coeffs = true;
                for (g, &ci) in gens.iter().zip(&assignment) {
                    let c = coeffs[ci];
                    if c != zero_scalar {
                        all_zero_coeffs = false;
                    }
                    acc = elem_add(&acc, &scalar_act(&c, g)?)?;
                }
                if acc == zero && !all_zero_coeffs {
                    let mut w = Witness::new("nonzero coefficients reach zero");
                    for (g, &ci) in gens.iter().zip(&assignment) {
                        w = w.number("coeff", &coeffs[ci]).element("generator", g);
                    }
                    return Ok((false, Some(w)));
                }
                // odometer over coefficient assignments
                let mut k = 0;
                loop {
                    if k == assignment.len() {
                        return Ok((true, None));
                    }
                    assignment[k] += 1;
                    if assignment[k] < coeffs.len() {
                        break;
                    }
                    assignment[k] = 0;
                    k += 1;
                }
            }
        }
        _ => {}
    }
    Ok((true, None))
}

/// Elements no other carrier element can reach; they sit in every
/// generating set.
fn forced_generators(structure: &StructureDef, cap: usize) -> Result<BTreeSet<Element>> {
    let mode = SpanMode::for_kind(structure.kind());
    let mut forced = BTreeSet::new();
    for v in structure.carrier() {
        let mut rest = structure.carrier().clone();
        rest.remove(v);
        let reach = span(&rest, structure.scalars(), mode, cap)?;
        if !reach.contains(v) {
            forced.insert(v.clone());
        }
    }
    Ok(forced)
}

/// Combination budget for the exact completion search; a 20-element
/// residual is fully searchable (2^20 subsets), anything past that errs.
const SEARCH_NODE_BUDGET: u128 = 1 << 20;

fn combinations(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

/// A minimum-cardinality generating subset (Exact) or a deterministic
/// greedy cover (Greedy). Exact first pins the elements nothing else can
/// produce, then searches completions among the rest.
pub fn minimal_generating_set(
    structure: &StructureDef,
    method: GensetMethod,
    cap: usize,
) -> Result<GeneratorReport> {
    let mode = SpanMode::for_kind(structure.kind());
    match method {
        GensetMethod::Greedy => {
            let mut chosen: BTreeSet<Element> = BTreeSet::new();
            let mut covered: BTreeSet<Element> = BTreeSet::new();
            while !structure.carrier().iter().all(|v| covered.contains(v)) {
                let mut best: Option<(usize, Element)> = None;
                for v in structure.carrier() {
                    if chosen.contains(v) {
                        continue;
                    }
                    let mut trial = chosen.clone();
                    trial.insert(v.clone());
                    let reach = span(&trial, structure.scalars(), mode, cap)?;
                    let gain = reach.len();
                    let better = match &best {
                        None => true,
                        Some((g, _)) => gain > *g,
                    };
                    if better {
                        best = Some((gain, v.clone()));
                    }
                }
                let (_, pick) = best.expect("uncovered carrier implies a candidate");
                chosen.insert(pick);
                covered = span(&chosen, structure.scalars(), mode, cap)?;
            }
            Ok(GeneratorReport {
                cardinality: chosen.len(),
                generating_set: chosen.into_iter().collect(),
                method,
                certified_minimal: false,
            })
        }
        GensetMethod::Exact => {
            let forced = forced_generators(structure, cap)?;
            let reach = span(&forced, structure.scalars(), mode, cap)?;
            if !forced.is_empty() && structure.carrier().iter().all(|v| reach.contains(v)) {
                return Ok(GeneratorReport {
                    cardinality: forced.len(),
                    generating_set: forced.into_iter().collect(),
                    method,
                    certified_minimal: true,
                });
            }
            let free: Vec<Element> = structure
                .carrier()
                .iter()
                .filter(|v| !forced.contains(*v))
                .cloned()
                .collect();
            let mut explored: u128 = 0;
            for extra in 0..=free.len() {
                explored = explored.saturating_add(combinations(free.len(), extra));
                if explored > SEARCH_NODE_BUDGET {
                    return Err(Error::BudgetExceeded(format!(
                        "completion search over {} non-forced elements passed \
                         the subset budget at size {extra}",
                        free.len()
                    )));
                }
                let mut found: Option<BTreeSet<Element>> = None;
                enumerate_combinations(&free, extra, &mut |combo| {
                    if found.is_some() {
                        return Ok(());
                    }
                    let mut t = forced.clone();
                    t.extend(combo.iter().cloned());
                    let reach = span(&t, structure.scalars(), mode, cap)?;
                    if structure.carrier().iter().all(|v| reach.contains(v)) {
                        found = Some(t);
                    }
                    Ok(())
                })?;
                if let Some(t) = found {
                    return Ok(GeneratorReport {
                        cardinality: t.len(),
                        generating_set: t.into_iter().collect(),
                        method,
                        certified_minimal: true,
                    });
                }
            }
            Err(Error::Internal(
                "the carrier itself failed to generate; span must contain its input".into(),
            ))
        }
    }
}

/// Visit all k-element combinations in canonical order.
fn enumerate_combinations<F>(items: &[Element], k: usize, visit: &mut F) -> Result<()>
where
    F: FnMut(&[Element]) -> Result<()>,
{
    fn rec<F>(items: &[Element], k: usize, start: usize, acc: &mut Vec<Element>, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[Element]) -> Result<()>,
    {
        if acc.len() == k {
            return visit(acc);
        }
        let needed = k - acc.len();
        for i in start..=items.len().saturating_sub(needed) {
            acc.push(items[i].clone());
            rec(items, k, i + 1, acc, visit)?;
            acc.pop();
        }
        Ok(())
    }
    if k == 0 {
        return visit(&[]);
    }
    if k > items.len() {
        return Ok(());
    }
    rec(items, k, 0, &mut Vec::new(), visit)
}
