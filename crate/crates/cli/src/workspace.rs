//! Named bindings produced by parsing a source file: rings, element sets,
//! structures, bistructures, map tables and fuzzy tables.

use std::collections::{BTreeMap, BTreeSet};

use neutra_core::BaseRing;

use neutra_core::{BiStructureDef, Element, FuzzyMap, MapTable, ScalarSet, StructureDef};

use crate::lex::Pos;
use crate::parse::to_scalar_set;

#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Ring(BaseRing),
    Set {
        ring: BaseRing,
        elements: BTreeSet<Element>,
    },
    Structure(StructureDef),
    Bi(BiStructureDef),
    Map(MapTable),
    Fuzzy(FuzzyMap),
}

impl Binding {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Binding::Ring(_) => "ring",
            Binding::Set { .. } => "set",
            Binding::Structure(_) => "structure",
            Binding::Bi(_) => "bistructure",
            Binding::Map(_) => "map",
            Binding::Fuzzy(_) => "fuzzy map",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    bindings: BTreeMap<String, (Binding, Pos)>,
    pub errata: Vec<String>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    pub fn insert(&mut self, name: String, binding: Binding, pos: Pos) {
        self.bindings.insert(name, (binding, pos));
    }

    pub fn contains(&self, name: &str) -> bool {
        self.bindings.contains_key(name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.bindings.keys().map(String::as_str).collect()
    }

    fn lookup(&self, name: &str) -> Result<&Binding, String> {
        self.bindings
            .get(name)
            .map(|(b, _)| b)
            .ok_or_else(|| format!("name `{name}` is not bound"))
    }

    pub fn raw_set(&self, name: &str) -> Result<(BaseRing, &BTreeSet<Element>), String> {
        match self.lookup(name)? {
            Binding::Set { ring, elements } => Ok((*ring, elements)),
            other => Err(format!("`{name}` is a {}, not a set", other.kind_name())),
        }
    }

    pub fn element_set(&self, name: &str) -> Result<BTreeSet<Element>, String> {
        let (_, elements) = self.raw_set(name)?;
        Ok(elements.clone())
    }

    pub fn scalar_set(&self, name: &str) -> Result<ScalarSet, String> {
        let (ring, elements) = self.raw_set(name)?;
        to_scalar_set(ring, elements)
    }

    pub fn structure(&self, name: &str) -> Result<StructureDef, String> {
        match self.lookup(name)? {
            Binding::Structure(def) => Ok(def.clone()),
            other => Err(format!(
                "`{name}` is a {}, not a structure",
                other.kind_name()
            )),
        }
    }

    pub fn bistructure(&self, name: &str) -> Result<&BiStructureDef, String> {
        match self.lookup(name)? {
            Binding::Bi(def) => Ok(def),
            other => Err(format!(
                "`{name}` is a {}, not a bistructure",
                other.kind_name()
            )),
        }
    }

    pub fn map_table(&self, name: &str) -> Result<&MapTable, String> {
        match self.lookup(name)? {
            Binding::Map(table) => Ok(table),
            other => Err(format!("`{name}` is a {}, not a map", other.kind_name())),
        }
    }

    pub fn fuzzy_map(&self, name: &str) -> Result<&FuzzyMap, String> {
        match self.lookup(name)? {
            Binding::Fuzzy(map) => Ok(map),
            other => Err(format!(
                "`{name}` is a {}, not a fuzzy map",
                other.kind_name()
            )),
        }
    }

    /// Pretty-print the workspace back to source. Re-parsing the output
    /// reproduces every binding under its original name; helper sets and
    /// structures are synthesized where a definition has no named parts.
    pub fn render(&self) -> String {
        Printer::new(self).render()
    }
}

struct Printer<'w> {
    workspace: &'w Workspace,
    used: BTreeSet<String>,
    // synthesized definitions, grouped by ring for sets
    sets: Vec<(String, BaseRing, BTreeSet<Element>)>,
    structures: Vec<(String, StructureDef)>,
    structure_stmts: Vec<String>,
    rest: Vec<String>,
}

impl<'w> Printer<'w> {
    fn new(workspace: &'w Workspace) -> Printer<'w> {
        Printer {
            workspace,
            used: workspace.bindings.keys().cloned().collect(),
            sets: Vec::new(),
            structures: Vec::new(),
            structure_stmts: Vec::new(),
            rest: Vec::new(),
        }
    }

    fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        let mut n = 1;
        while self.used.contains(&name) {
            name = format!("{base}_{n}");
            n += 1;
        }
        self.used.insert(name.clone());
        name
    }

    fn set_name(&mut self, hint: &str, ring: BaseRing, elements: &BTreeSet<Element>) -> String {
        for (name, (binding, _)) in &self.workspace.bindings {
            if let Binding::Set {
                ring: r,
                elements: e,
            } = binding
            {
                if *r == ring && e == elements {
                    return name.clone();
                }
            }
        }
        if let Some((name, _, _)) = self
            .sets
            .iter()
            .find(|(_, r, e)| *r == ring && e == elements)
        {
            return name.clone();
        }
        let name = self.fresh(hint);
        self.sets.push((name.clone(), ring, elements.clone()));
        name
    }

    fn scalar_elements(scalars: &neutra_core::ScalarSet) -> BTreeSet<Element> {
        scalars.members().iter().map(|n| Element::Scalar(*n)).collect()
    }

    fn structure_name(&mut self, hint: &str, def: &StructureDef) -> String {
        for (name, (binding, _)) in &self.workspace.bindings {
            if let Binding::Structure(existing) = binding {
                if existing == def {
                    return name.clone();
                }
            }
        }
        if let Some((name, _)) = self.structures.iter().find(|(_, d)| d == def) {
            return name.clone();
        }
        let carrier = self.set_name(
            &format!("{hint}_carrier"),
            def.ring(),
            def.carrier(),
        );
        let scalars = self.set_name(
            &format!("{hint}_scalars"),
            def.ring(),
            &Self::scalar_elements(def.scalars()),
        );
        let name = self.fresh(hint);
        self.structure_stmts.push(format!(
            "structure {name} = {}({carrier} over {scalars});",
            def.kind()
        ));
        self.structures.push((name.clone(), def.clone()));
        name
    }

    fn render(mut self) -> String {
        // plan: resolve every binding into statements, synthesizing parts
        let names: Vec<String> = self.workspace.bindings.keys().cloned().collect();
        for name in &names {
            let (binding, _) = &self.workspace.bindings[name];
            match binding {
                Binding::Ring(_) | Binding::Set { .. } => {}
                Binding::Structure(def) => {
                    let carrier =
                        self.set_name(&format!("{name}_carrier"), def.ring(), def.carrier());
                    let scalars = self.set_name(
                        &format!("{name}_scalars"),
                        def.ring(),
                        &Self::scalar_elements(def.scalars()),
                    );
                    self.structure_stmts.push(format!(
                        "structure {name} = {}({carrier} over {scalars});",
                        def.kind()
                    ));
                    self.structures.push((name.clone(), def.clone()));
                }
                Binding::Bi(def) => {
                    let first = self.structure_name(&format!("{name}_side1"), &def.first);
                    let second = self.structure_name(&format!("{name}_side2"), &def.second);
                    self.rest
                        .push(format!("bistructure {name} = {first} ++ {second};"));
                }
                Binding::Map(table) => {
                    let domain = self.structure_name(&format!("{name}_domain"), table.domain());
                    let codomain =
                        self.structure_name(&format!("{name}_codomain"), table.codomain());
                    let entries: Vec<String> = table
                        .graph()
                        .iter()
                        .map(|(v, t)| format!("{v} -> {t}"))
                        .collect();
                    self.rest.push(format!(
                        "map {name} : {domain} -> {codomain} {{ {} }};",
                        entries.join("; ")
                    ));
                }
                Binding::Fuzzy(map) => {
                    let structure =
                        self.structure_name(&format!("{name}_structure"), map.structure());
                    let entries: Vec<String> = map
                        .table()
                        .iter()
                        .map(|(v, g)| format!("{v} -> {g}"))
                        .collect();
                    self.rest.push(format!(
                        "fuzzy {name} : {structure} {{ {} }};",
                        entries.join("; ")
                    ));
                }
            }
        }
        // emission: errata, then per-ring groups of sets, then the rest
        let mut out = String::new();
        for note in &self.workspace.errata {
            out.push_str(&format!("#! {note}\n"));
        }
        let mut all_sets: Vec<(String, BaseRing, BTreeSet<Element>)> = self
            .workspace
            .bindings
            .iter()
            .filter_map(|(name, (binding, _))| match binding {
                Binding::Set { ring, elements } => {
                    Some((name.clone(), *ring, elements.clone()))
                }
                _ => None,
            })
            .collect();
        all_sets.extend(self.sets.iter().cloned());
        let mut rings: Vec<BaseRing> = all_sets.iter().map(|(_, r, _)| *r).collect();
        rings.sort();
        rings.dedup();
        let named_rings: BTreeMap<BaseRing, String> = self
            .workspace
            .bindings
            .iter()
            .filter_map(|(name, (binding, _))| match binding {
                Binding::Ring(r) => Some((*r, name.clone())),
                _ => None,
            })
            .collect();
        let mut counter = 0;
        for ring in rings {
            let ring_name = named_rings.get(&ring).cloned().unwrap_or_else(|| {
                counter += 1;
                let mut name = format!("ring{counter}");
                while self.used.contains(&name) {
                    counter += 1;
                    name = format!("ring{counter}");
                }
                name
            });
            let spec = match ring {
                BaseRing::Integer => "Z".to_string(),
                BaseRing::Rational => "Q".to_string(),
                BaseRing::Modular(n) => format!("Zn {n}"),
            };
            out.push_str(&format!("ring {ring_name} = {spec};\n"));
            for (name, r, elements) in &all_sets {
                if *r != ring {
                    continue;
                }
                let listed: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("set {name} = {{{}}};\n", listed.join(", ")));
            }
        }
        // declared rings that no set uses still need to re-bind
        for (ring, name) in &named_rings {
            if !all_sets.iter().any(|(_, r, _)| r == ring) {
                let spec = match ring {
                    BaseRing::Integer => "Z".to_string(),
                    BaseRing::Rational => "Q".to_string(),
                    BaseRing::Modular(n) => format!("Zn {n}"),
                };
                out.push_str(&format!("ring {name} = {spec};\n"));
            }
        }
        for statement in self.structure_stmts.iter().chain(&self.rest) {
            out.push_str(statement);
            out.push('\n');
        }
        out
    }
}
