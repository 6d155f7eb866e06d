//! Command dispatch: each subcommand resolves names in the workspace,
//! calls the kernel, and folds the outcome into a report plus exit code.

use std::collections::BTreeSet;

use clap::Subcommand;
use neutra_core::{
    bigenerator, check_direct_sum, check_direct_union, check_pseudo_direct_sum, classify,
    classify_bisubstructure, enumerate_maps, enumerate_substructures, invert_map, magma_profile,
    minimal_generating_set, mixedness, neutro_closure, preservation_profile, simplicity, verify,
    verify_bifuzzy, verify_bistructure, verify_fuzzy, verify_map, BiFuzzyKind, BiFuzzyMap,
    ClosureOp, Element, Error, Flavor, FuzzyKind, GensetMethod, GradeCert, MagmaClass, Mixedness,
    PreservationGrade, Verdict, ENUMERATION_LIMIT,
};

use crate::format::{Report, EXIT_BUDGET, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use crate::workspace::Workspace;

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Verify a structure against its declared kind.
    Check {
        #[arg(long)]
        structure: String,
    },
    /// List every structure kind a carrier/scalar pair satisfies.
    Classify {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        scalars: String,
    },
    /// Enumerate proper substructures of a structure.
    Subspaces {
        #[arg(long)]
        structure: String,
        /// plain | pseudo | subset | duo | pseudosemi | pseudoset
        #[arg(long, default_value = "plain")]
        flavor: String,
        /// Scalar restriction set (required by the restricted flavors).
        #[arg(long)]
        restrict: Option<String>,
    },
    /// Compute a minimal generating set and its cardinality.
    Genset {
        #[arg(long)]
        structure: String,
        /// Use the deterministic greedy cover instead of the exact search.
        #[arg(long)]
        greedy: bool,
    },
    /// Grade a structure's simplicity.
    Simplicity {
        #[arg(long)]
        structure: String,
    },
    /// Enumerate or verify linear transformations between two structures.
    Maps {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Enumerate all transformations (the default).
        #[arg(long)]
        enumerate: bool,
        /// Verify one named map table instead.
        #[arg(long)]
        verify: Option<String>,
    },
    /// Profile which subspaces a verified operator preserves.
    Preserve {
        #[arg(long)]
        map: String,
    },
    /// Invert a verified bijective map table.
    Invert {
        #[arg(long)]
        map: String,
    },
    /// Fuzzy membership commands.
    #[command(subcommand)]
    Fuzzy(FuzzyCmd),
    /// Bistructure commands.
    #[command(subcommand)]
    Bi(BiCmd),
    /// Close a set under an operation together with the indeterminate.
    Closure {
        #[arg(long)]
        set: String,
        /// add | mul
        #[arg(long)]
        under: String,
    },
    /// Check a direct-sum decomposition of a linear algebra.
    Directsum {
        #[arg(long)]
        structure: String,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<String>,
    },
    /// Check a direct-union decomposition of a vector space.
    Directunion {
        #[arg(long)]
        structure: String,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<String>,
    },
    /// Check a pseudo direct-sum decomposition.
    Pseudosum {
        #[arg(long)]
        structure: String,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FuzzyCmd {
    /// Verify a fuzzy membership table for a fuzzy kind.
    Check {
        #[arg(long)]
        map: String,
        /// setvs | setla | semivs | semila | groupvs | groupla | groupla-classical
        #[arg(long = "as")]
        kind: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum BiCmd {
    /// Verify a bistructure's pair invariants and both sides.
    Check {
        #[arg(long)]
        bistructure: String,
    },
    /// Per-side minimal generating sets and the bidimension.
    Genset {
        #[arg(long)]
        bistructure: String,
        #[arg(long)]
        greedy: bool,
    },
    /// Classify the flavors a pair of subsets exhibits.
    Classify {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long = "in")]
        parent: String,
        #[arg(long)]
        restrict1: Option<String>,
        #[arg(long)]
        restrict2: Option<String>,
    },
    /// Verify a fuzzy bimap for a bistructure fuzzy kind.
    Fuzzy {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long = "in")]
        parent: String,
        #[arg(long = "as")]
        kind: String,
    },
}

fn exit_for(error: &Error) -> i32 {
    match error {
        Error::CapExceeded { .. } | Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_ERROR,
    }
}

struct Failure {
    message: String,
    exit: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            exit: exit_for(&e),
            message: e.to_string(),
        }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Failure {
        Failure {
            message,
            exit: EXIT_ERROR,
        }
    }
}

fn verdict_exit(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
    }
}

fn put_elements(report: &mut Report, prefix: &str, elements: &BTreeSet<Element>) {
    for (i, e) in elements.iter().enumerate() {
        report.put(format!("{prefix}.{i}"), e.to_string());
    }
}

fn flavor_from(
    name: &str,
    restrict: Option<&str>,
    w: &Workspace,
) -> Result<Flavor, Failure> {
    let restriction = |w: &Workspace| -> Result<neutra_core::ScalarSet, Failure> {
        let name = restrict.ok_or_else(|| {
            Failure::from("this flavor needs --restrict <scalar set>".to_string())
        })?;
        Ok(w.scalar_set(name)?)
    };
    match name {
        "plain" => Ok(Flavor::Plain),
        "pseudo" => Ok(Flavor::Pseudo),
        "subset" => Ok(Flavor::SubsetScalars(restriction(w)?)),
        "duo" => Ok(Flavor::Duo(restriction(w)?)),
        "pseudosemi" => Ok(Flavor::PseudoSemigroup(restriction(w)?)),
        "pseudoset" => Ok(Flavor::PseudoSet(restriction(w)?)),
        other => Err(Failure::from(format!("unknown flavor `{other}`"))),
    }
}

fn grade_entry(report: &mut Report, name: &str, grade: &GradeCert) {
    report.put(name, if grade.holds { "yes" } else { "no" });
    report.put(format!("{name}.certificate"), &grade.certificate);
    if let Some(example) = &grade.counterexample {
        let listed: Vec<String> = example.iter().map(|e| e.to_string()).collect();
        report.put(format!("{name}.counterexample"), listed.join("; "));
    }
}

fn mixedness_name(m: Mixedness) -> &'static str {
    match m {
        Mixedness::MixedNeutrosophic => "mixed",
        Mixedness::PureNeutrosophic => "pure",
        Mixedness::NonNeutrosophic => "non-neutrosophic",
    }
}

pub fn run(cmd: &Cmd, w: &Workspace, cap: usize) -> (Report, i32) {
    match dispatch(cmd, w, cap) {
        Ok(pair) => pair,
        Err(failure) => {
            let mut report = Report::new(command_echo(cmd));
            report.put("error", failure.message);
            report.put("exit", failure.exit.to_string());
            (report, failure.exit)
        }
    }
}

fn command_echo(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Check { structure } => format!("check {structure}"),
        Cmd::Classify { carrier, scalars } => format!("classify {carrier} over {scalars}"),
        Cmd::Subspaces { structure, flavor, .. } => format!("subspaces {structure} --flavor {flavor}"),
        Cmd::Genset { structure, greedy } => format!(
            "genset {structure} --{}",
            if *greedy { "greedy" } else { "exact" }
        ),
        Cmd::Simplicity { structure } => format!("simplicity {structure}"),
        Cmd::Maps { from, to, verify: Some(t), .. } => format!("maps {from} -> {to} --verify {t}"),
        Cmd::Maps { from, to, .. } => format!("maps {from} -> {to} --enumerate"),
        Cmd::Preserve { map } => format!("preserve {map}"),
        Cmd::Invert { map } => format!("invert {map}"),
        Cmd::Fuzzy(FuzzyCmd::Check { map, kind }) => format!("fuzzy check {map} as {kind}"),
        Cmd::Bi(BiCmd::Check { bistructure }) => format!("bi check {bistructure}"),
        Cmd::Bi(BiCmd::Genset { bistructure, greedy }) => format!(
            "bi genset {bistructure} --{}",
            if *greedy { "greedy" } else { "exact" }
        ),
        Cmd::Bi(BiCmd::Classify { first, second, parent, .. }) => {
            format!("bi classify {first} {second} in {parent}")
        }
        Cmd::Bi(BiCmd::Fuzzy { first, second, parent, kind }) => {
            format!("bi fuzzy {first} {second} in {parent} as {kind}")
        }
        Cmd::Closure { set, under } => format!("closure {set} under {under}"),
        Cmd::Directsum { structure, parts } => {
            format!("directsum {structure} = {}", parts.join(" + "))
        }
        Cmd::Directunion { structure, parts } => {
            format!("directunion {structure} = {}", parts.join(" u "))
        }
        Cmd::Pseudosum { structure, parts } => {
            format!("pseudosum {structure} = {}", parts.join(" + "))
        }
    }
}

fn dispatch(cmd: &Cmd, w: &Workspace, cap: usize) -> Result<(Report, i32), Failure> {
    let mut report = Report::new(command_echo(cmd));
    report.put_errata(&w.errata);
    match cmd {
        Cmd::Check { structure } => {
            let def = w.structure(structure)?;
            report.put("kind", def.kind().to_string());
            let outcome = verify(&def);
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Classify { carrier, scalars } => {
            let elements = w.element_set(carrier)?;
            let scalar_set = w.scalar_set(scalars)?;
            report.put("mixedness", mixedness_name(mixedness(&elements)));
            let kinds = classify(&elements, &scalar_set)?;
            let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
            report.put("kinds", names.join(" "));
            Ok((report, EXIT_PASS))
        }
        Cmd::Subspaces {
            structure,
            flavor,
            restrict,
        } => {
            let def = w.structure(structure)?;
            let flavor = flavor_from(flavor, restrict.as_deref(), w)?;
            let found = enumerate_substructures(&def, &flavor, cap.min(ENUMERATION_LIMIT))?;
            report.put("count", found.len().to_string());
            for (i, sub) in found.iter().enumerate() {
                let listed: Vec<String> = sub.iter().map(|e| e.to_string()).collect();
                report.put(format!("subspace.{i}"), listed.join("; "));
            }
            Ok((report, EXIT_PASS))
        }
        Cmd::Genset { structure, greedy } => {
            let def = w.structure(structure)?;
            let method = if *greedy {
                GensetMethod::Greedy
            } else {
                GensetMethod::Exact
            };
            let result = minimal_generating_set(&def, method, cap)?;
            report.put("cardinality", result.cardinality.to_string());
            report.put(
                "method",
                if *greedy { "greedy" } else { "exact" },
            );
            report.put(
                "certified_minimal",
                result.certified_minimal.to_string(),
            );
            for (i, e) in result.generating_set.iter().enumerate() {
                report.put(format!("generator.{i}"), e.to_string());
            }
            Ok((report, EXIT_PASS))
        }
        Cmd::Simplicity { structure } => {
            let def = w.structure(structure)?;
            let grades = simplicity(&def)?;
            grade_entry(&mut report, "simple", &grades.simple);
            grade_entry(&mut report, "weakly_simple", &grades.weakly_simple);
            grade_entry(&mut report, "doubly_simple", &grades.doubly_simple);
            grade_entry(&mut report, "strongly_simple", &grades.strongly_simple);
            Ok((report, EXIT_PASS))
        }
        Cmd::Maps {
            from,
            to,
            verify: Some(table_name),
            ..
        } => {
            let domain = w.structure(from)?;
            let codomain = w.structure(to)?;
            let table = w.map_table(table_name)?;
            if table.domain().carrier() != domain.carrier()
                || table.codomain().carrier() != codomain.carrier()
            {
                return Err(Failure::from(format!(
                    "map `{table_name}` is not a table from {from} to {to}"
                )));
            }
            let outcome = verify_map(table)?;
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Maps { from, to, .. } => {
            let domain = w.structure(from)?;
            let codomain = w.structure(to)?;
            let maps = enumerate_maps(&domain, &codomain, cap)?;
            report.put("count", maps.len().to_string());
            for (i, m) in maps.iter().enumerate() {
                let listed: Vec<String> = m
                    .graph()
                    .iter()
                    .map(|(v, t)| format!("{v} -> {t}"))
                    .collect();
                report.put(format!("map.{i}"), listed.join("; "));
            }
            Ok((report, EXIT_PASS))
        }
        Cmd::Preserve { map } => {
            let table = w.map_table(map)?;
            let profile = preservation_profile(table)?;
            report.put(
                "grade",
                match profile.grade {
                    PreservationGrade::Strong => "strong",
                    PreservationGrade::Weak => "weak",
                    PreservationGrade::None => "none",
                },
            );
            for (i, p) in profile.preserved.iter().enumerate() {
                let listed: Vec<String> = p.iter().map(|e| e.to_string()).collect();
                report.put(format!("preserved.{i}"), listed.join("; "));
            }
            for (i, (p, why)) in profile.failures.iter().enumerate() {
                let listed: Vec<String> = p.iter().map(|e| e.to_string()).collect();
                report.put(format!("unpreserved.{i}"), format!("{}: {why}", listed.join("; ")));
            }
            let exit = if profile.grade == PreservationGrade::None {
                EXIT_FAIL
            } else {
                EXIT_PASS
            };
            Ok((report, exit))
        }
        Cmd::Invert { map } => {
            let table = w.map_table(map)?;
            match invert_map(table) {
                Ok(inverse) => {
                    report.put_verdict(Verdict::Pass);
                    for (i, (v, t)) in inverse.graph().iter().enumerate() {
                        report.put(format!("entry.{i}"), format!("{v} -> {t}"));
                    }
                    Ok((report, EXIT_PASS))
                }
                Err(Error::NotInvertible(reason)) => {
                    report.put_verdict(Verdict::Fail);
                    report.put("not_invertible", reason);
                    Ok((report, EXIT_FAIL))
                }
                Err(other) => Err(other.into()),
            }
        }
        Cmd::Fuzzy(FuzzyCmd::Check { map, kind }) => {
            let fuzzy = w.fuzzy_map(map)?;
            let kind: FuzzyKind = kind.parse().map_err(Failure::from)?;
            let outcome = verify_fuzzy(fuzzy, kind)?;
            report.put("fuzzy_kind", kind.name());
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Bi(BiCmd::Check { bistructure }) => {
            let b = w.bistructure(bistructure)?;
            let outcome = verify_bistructure(b);
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Bi(BiCmd::Genset {
            bistructure,
            greedy,
        }) => {
            let b = w.bistructure(bistructure)?;
            let method = if *greedy {
                GensetMethod::Greedy
            } else {
                GensetMethod::Exact
            };
            let result = bigenerator(b, method, cap)?;
            report.put(
                "bidimension",
                format!("({}, {})", result.bidimension.0, result.bidimension.1),
            );
            for (side, generators) in [
                ("side1", &result.first.generating_set),
                ("side2", &result.second.generating_set),
            ] {
                for (i, e) in generators.iter().enumerate() {
                    report.put(format!("{side}.generator.{i}"), e.to_string());
                }
            }
            Ok((report, EXIT_PASS))
        }
        Cmd::Bi(BiCmd::Classify {
            first,
            second,
            parent,
            restrict1,
            restrict2,
        }) => {
            let b = w.bistructure(parent)?;
            let w1 = w.element_set(first)?;
            let w2 = w.element_set(second)?;
            let restriction = match (restrict1, restrict2) {
                (Some(a), Some(bn)) => Some((w.scalar_set(a)?, w.scalar_set(bn)?)),
                (None, None) => None,
                _ => {
                    return Err(Failure::from(
                        "--restrict1 and --restrict2 must come together".to_string(),
                    ))
                }
            };
            let outcome = classify_bisubstructure(&w1, &w2, b, restriction)?;
            let holding = outcome.holding().join(" ");
            report.put("flavors", holding);
            for finding in &outcome.findings {
                report.put(
                    format!("flavor.{}", finding.flavor),
                    format!(
                        "{}: {}",
                        if finding.holds { "holds" } else { "fails" },
                        finding.detail
                    ),
                );
            }
            let exit = if outcome.findings.iter().any(|f| f.holds) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            };
            Ok((report, exit))
        }
        Cmd::Bi(BiCmd::Fuzzy {
            first,
            second,
            parent,
            kind,
        }) => {
            let b = w.bistructure(parent)?;
            let bimap = BiFuzzyMap {
                first: w.fuzzy_map(first)?.clone(),
                second: w.fuzzy_map(second)?.clone(),
            };
            let kind: BiFuzzyKind = kind.parse().map_err(Failure::from)?;
            let outcome = verify_bifuzzy(&bimap, b, kind)?;
            report.put("bifuzzy_kind", kind.name());
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Closure { set, under } => {
            let (ring, elements) = w.raw_set(set)?;
            let mut base = BTreeSet::new();
            for e in elements {
                match e {
                    Element::Scalar(n) => {
                        base.insert(*n);
                    }
                    other => {
                        return Err(Failure::from(format!("`{other}` is not a scalar")));
                    }
                }
            }
            let op = match under.as_str() {
                "add" => ClosureOp::Add,
                "mul" => ClosureOp::Mul,
                other => return Err(Failure::from(format!("unknown operation `{other}`"))),
            };
            let closed = neutro_closure(&base, op, ring, cap)?;
            report.put("order", closed.len().to_string());
            let profile = magma_profile(&closed, op, ring)?;
            report.put(
                "profile",
                match profile.class {
                    MagmaClass::NotClosed => "not-closed",
                    MagmaClass::Semigroup => "semigroup",
                    MagmaClass::Monoid => "monoid",
                    MagmaClass::Group => "group",
                },
            );
            if let Some(witness) = &profile.witness {
                report.put("profile.witness", witness.to_string());
            }
            let as_elements: BTreeSet<Element> = closed.iter().map(|n| Element::scalar(*n)).collect();
            put_elements(&mut report, "element", &as_elements);
            Ok((report, EXIT_PASS))
        }
        Cmd::Directsum { structure, parts } => {
            let def = w.structure(structure)?;
            let resolved = resolve_parts(w, parts)?;
            let outcome = check_direct_sum(&def, &resolved)?;
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Directunion { structure, parts } => {
            let def = w.structure(structure)?;
            let resolved = resolve_parts(w, parts)?;
            let outcome = check_direct_union(&def, &resolved)?;
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
        Cmd::Pseudosum { structure, parts } => {
            let def = w.structure(structure)?;
            let resolved = resolve_parts(w, parts)?;
            let outcome = check_pseudo_direct_sum(&def, &resolved)?;
            report.put_verification(&outcome);
            let exit = verdict_exit(outcome.verdict());
            Ok((report, exit))
        }
    }
}

fn resolve_parts(w: &Workspace, names: &[String]) -> Result<Vec<BTreeSet<Element>>, Failure> {
    if names.is_empty() {
        return Err(Failure::from("at least one part is required".to_string()));
    }
    names
        .iter()
        .map(|n| Ok(w.element_set(n)?))
        .collect()
}

