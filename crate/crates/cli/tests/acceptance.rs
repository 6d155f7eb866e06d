//! Acceptance suite: every release criterion in one runnable target, each
//! criterion printing its own pass line. All thresholds are exact; the
//! randomized suites run on fixed seeds so the whole target is
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

use neutra_cli::{parse_machine, parse_workspace};
use neutra_core::{
    classify, elem_add, enumerate_maps, enumerate_substructures, invert_map,
    minimal_generating_set, scalar_act, scalar_profile, simplicity, verify, verify_bistructure,
    verify_fuzzy, verify_map, BaseRing, BiStructureDef, Element, Flavor, FuzzyKind, FuzzyMap,
    FuzzyNeutroValue, GensetMethod, NeutroNumber, ScalarMode, ScalarSet, SpanMode, StructureDef,
    StructureKind,
};

const CAP: usize = 1_000_000;

fn neutra() -> Command {
    Command::new(env!("CARGO_BIN_EXE_neutra"))
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn machine(args: &[&str]) -> (neutra_cli::Report, i32) {
    let output = neutra()
        .args(args)
        .args(["--format", "machine"])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(output.stdout).expect("utf-8");
    (
        parse_machine(&stdout).expect("machine output parses"),
        output.status.code().expect("exit code"),
    )
}

fn load(name: &str) -> neutra_cli::Workspace {
    let source = std::fs::read_to_string(fixture(name)).unwrap();
    parse_workspace(&source).unwrap()
}

fn zn(n: u64) -> BaseRing {
    BaseRing::modular(n).unwrap()
}

fn num(ring: BaseRing, a: i64, b: i64) -> NeutroNumber {
    NeutroNumber::from_ints(ring, a, b)
}

fn line(n: u64, scalars: &[(i64, i64)], kind: StructureKind) -> StructureDef {
    let ring = zn(n);
    let carrier: BTreeSet<Element> = (0..n as i64)
        .map(|k| Element::scalar(num(ring, 0, k)))
        .collect();
    StructureDef::new(carrier, ScalarSet::from_ints(ring, scalars), kind).unwrap()
}

#[test]
fn criterion_1_closure_orders() {
    let (report, code) = machine(&[
        "closure",
        &fixture("closure_mod4.neu"),
        "--set",
        "Z4",
        "--under",
        "add",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.get("order"), Some("16"));

    let (report, code) = machine(&[
        "closure",
        &fixture("closure_mod2.neu"),
        "--set",
        "Z2",
        "--under",
        "add",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.get("order"), Some("4"));
    let elements: BTreeSet<&str> = report
        .entries()
        .iter()
        .filter(|(k, _)| k.starts_with("element."))
        .map(|(_, v)| v.as_str())
        .collect();
    assert_eq!(elements, ["0", "1", "I", "1+I"].into_iter().collect());
    println!("criterion 1 (closure orders): PASS");
}

#[test]
fn criterion_2_monoid_not_group() {
    let (report, code) = machine(&[
        "closure",
        &fixture("closure_units_mod5.neu"),
        "--set",
        "U5",
        "--under",
        "mul",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.get("order"), Some("8"));
    assert_eq!(report.get("profile"), Some("monoid"));
    assert!(report
        .get("profile.witness")
        .is_some_and(|w| w.starts_with("element=I")));
    println!("criterion 2 (monoid, not group): PASS");
}

#[test]
fn criterion_3_open_carrier_witness() {
    let (report, code) = machine(&[
        "check",
        &fixture("open_carrier_set_vs.neu"),
        "--structure",
        "Mvs",
    ]);
    assert_eq!((report.get("verdict"), code), (Some("pass"), 0));

    let (report, code) = machine(&[
        "check",
        &fixture("open_carrier_set_vs.neu"),
        "--structure",
        "Mla",
    ]);
    assert_eq!((report.get("verdict"), code), (Some("fail"), 1));
    assert_eq!(report.get("axiom.setla.add_closure"), Some("fail"));

    // the classic escaping pair reproduces exactly: 2 + 2I leaves V
    let workspace = load("open_carrier_set_vs.neu");
    let def = workspace.structure("Mla").unwrap();
    let z = BaseRing::Integer;
    let two = Element::scalar(num(z, 2, 0));
    let two_i = Element::scalar(num(z, 0, 2));
    assert!(def.carrier().contains(&two) && def.carrier().contains(&two_i));
    let sum = elem_add(&two, &two_i).unwrap();
    assert_eq!(sum, Element::scalar(num(z, 2, 2)));
    assert!(!def.carrier().contains(&sum));
    println!("criterion 3 (open carrier, witness pair producing 2+2I): PASS");
}

#[test]
fn criterion_4_generator_cardinalities() {
    let workspace = load("sign_pairs_genset.neu");
    assert_eq!(workspace.structure("M").unwrap().carrier().len(), 12);
    let (report, _) = machine(&[
        "genset",
        &fixture("sign_pairs_genset.neu"),
        "--structure",
        "M",
    ]);
    assert_eq!(report.get("cardinality"), Some("6"));
    assert_eq!(report.get("certified_minimal"), Some("true"));

    for (fix, expected) in [
        ("bi_matrix_tuple_sets.neu", "(8, 6)"),
        ("bi_semigroup_pair.neu", "(6, 2)"),
        ("bi_mixed_arity.neu", "(3, 2)"),
    ] {
        let (report, _) = machine(&["bi", "genset", &fixture(fix), "--bistructure", "B"]);
        assert_eq!(report.get("bidimension"), Some(expected), "in {fix}");
    }
    println!("criterion 4 (generator cardinalities 6 / (8,6) / (6,2) / (3,2)): PASS");
}

// -- randomized corpora ---------------------------------------------------

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

fn random_scalar_structure(rng: &mut Rng) -> StructureDef {
    let n = 2 + rng.below(5);
    let ring = zn(n);
    let mut scalars = BTreeSet::new();
    scalars.insert(NeutroNumber::zero(ring));
    for _ in 0..1 + rng.below(3) {
        scalars.insert(num(
            ring,
            rng.below(n) as i64,
            rng.below(n) as i64,
        ));
    }
    let mut carrier = BTreeSet::new();
    carrier.insert(Element::scalar(NeutroNumber::zero(ring)));
    for _ in 0..1 + rng.below(7) {
        carrier.insert(Element::scalar(num(
            ring,
            rng.below(n) as i64,
            rng.below(n) as i64,
        )));
    }
    StructureDef::new(
        carrier,
        ScalarSet::new(ring, scalars).unwrap(),
        StructureKind::SetVs,
    )
    .unwrap()
}

#[test]
fn criterion_5_theorem_property_suites() {
    // ladder: linear algebra implies vector space, single and paired
    let mut rng = Rng(0x1ad0e5);
    let mut instances = 0;
    let mut la_hits = 0;
    let mut pool: Vec<StructureDef> = Vec::new();
    while instances < 250 {
        let def = random_scalar_structure(&mut rng);
        instances += 1;
        let kinds = classify(def.carrier(), def.scalars()).unwrap();
        for (la, vs) in [
            (StructureKind::SetLa, StructureKind::SetVs),
            (StructureKind::SemigroupLa, StructureKind::SemigroupVs),
            (StructureKind::GroupLa, StructureKind::GroupVs),
        ] {
            if kinds.contains(&la) {
                la_hits += 1;
                assert!(kinds.contains(&vs), "ladder violation on {def:?}");
            }
        }
        if kinds.contains(&StructureKind::SetLa) {
            pool.push(def.with_kind(StructureKind::SetLa));
        }
    }
    assert!(la_hits >= 50, "corpus too thin: only {la_hits} linear algebras");
    // paired ladder: a bilinear-algebra pair is also a bivector-space pair
    let mut paired = 0;
    for i in 0..pool.len() {
        for j in 0..pool.len() {
            if i == j {
                continue;
            }
            let b = BiStructureDef::new(pool[i].clone(), pool[j].clone(), ScalarMode::Bi);
            let as_la = verify_bistructure(&b);
            if as_la.passed() {
                let as_vs = BiStructureDef::new(
                    pool[i].with_kind(StructureKind::SetVs),
                    pool[j].with_kind(StructureKind::SetVs),
                    ScalarMode::Bi,
                );
                assert!(verify_bistructure(&as_vs).passed());
                paired += 1;
            }
        }
    }
    assert!(paired > 0, "no verified bilinear pairs in the corpus");

    // two-scalar structures are weakly simple, randomized plus micro-cases
    let mut rng = Rng(0x2417);
    let mut kept = 0;
    while kept < 200 {
        let n = 2 + rng.below(5);
        let ring = zn(n);
        let s = num(ring, rng.below(n) as i64, rng.below(n) as i64);
        if s.is_zero() {
            continue;
        }
        let scalars =
            ScalarSet::new(ring, [NeutroNumber::zero(ring), s].into_iter().collect()).unwrap();
        // close a random seed under addition and the scalar action
        let mut carrier: BTreeSet<Element> = [Element::scalar(NeutroNumber::zero(ring))]
            .into_iter()
            .collect();
        carrier.insert(Element::scalar(num(
            ring,
            rng.below(n) as i64,
            rng.below(n) as i64,
        )));
        loop {
            let mut grew = false;
            let snapshot: Vec<Element> = carrier.iter().cloned().collect();
            for a in &snapshot {
                for b in &snapshot {
                    grew |= carrier.insert(elem_add(a, b).unwrap());
                }
                grew |= carrier.insert(scalar_act(&s, a).unwrap());
            }
            if !grew {
                break;
            }
        }
        if carrier.len() > 8 {
            continue;
        }
        let def = StructureDef::new(carrier, scalars, StructureKind::SetLa).unwrap();
        if !verify(&def).passed() {
            continue;
        }
        let grades = simplicity(&def).unwrap();
        assert!(grades.weakly_simple.holds, "two-scalar violation on {def:?}");
        kept += 1;
    }

    // prime indeterminate lines admit no scalar-subgroup restrictions
    for p in [2u64, 3, 5] {
        let ring = zn(p);
        let g: Vec<NeutroNumber> = (0..p as i64).map(|k| num(ring, 0, k)).collect();
        let scalars = ScalarSet::new(ring, g.iter().copied().collect()).unwrap();
        for dims in 1..=2usize {
            let mut carrier = BTreeSet::new();
            let mut stack = vec![Vec::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == dims {
                    carrier.insert(Element::tuple(prefix.clone()).unwrap());
                    continue;
                }
                for v in &g {
                    let mut next = prefix.clone();
                    next.push(*v);
                    stack.push(next);
                }
            }
            let def = StructureDef::new(carrier, scalars.clone(), StructureKind::GroupVs).unwrap();
            assert!(verify(&def).passed());
            // exhaust every proper scalar subset: none with more than one
            // member is an additive group, so no restricted subspace exists
            for mask in 1u64..(1 << p) - 1 {
                if (mask.count_ones() as usize) < 2 {
                    continue;
                }
                let subset: BTreeSet<NeutroNumber> = g
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect();
                let sub = ScalarSet::new(ring, subset).unwrap();
                assert!(
                    !scalar_profile(&sub).is_additive_group,
                    "unexpected proper subgroup of the order-{p} line"
                );
            }
        }
    }
    println!("criterion 5 (theorem property suites, zero violations): PASS");
}

// -- oracle equivalences ---------------------------------------------------

fn naive_span(
    generators: &BTreeSet<Element>,
    scalars: &ScalarSet,
    mode: SpanMode,
) -> BTreeSet<Element> {
    if generators.is_empty() {
        return BTreeSet::new();
    }
    let mut reach: BTreeSet<Element> = generators.clone();
    for s in scalars.members() {
        for t in generators {
            reach.insert(scalar_act(s, t).unwrap());
        }
    }
    if mode == SpanMode::Linear {
        loop {
            let mut grew = false;
            let snapshot: Vec<Element> = reach.iter().cloned().collect();
            for a in &snapshot {
                for b in &snapshot {
                    if a.shape() == b.shape() {
                        grew |= reach.insert(elem_add(a, b).unwrap());
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    reach
}

fn subsets_of(items: &[Element]) -> impl Iterator<Item = BTreeSet<Element>> + '_ {
    (0u64..(1 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect()
    })
}

#[test]
fn criterion_6_oracle_equivalences() {
    // exact generating sets against subset search, on the shipped fixtures
    let genset_fixtures = [
        ("sign_pairs_genset.neu", "M"),
        ("mod12_set_vs.neu", "M"),
        ("three_point_maps.neu", "M"),
        ("strongly_simple_line.neu", "M"),
        ("fuzzy_reciprocal_drop.neu", "M"),
    ];
    for (fix, name) in genset_fixtures {
        let def = load(fix).structure(name).unwrap();
        assert!(def.carrier().len() <= 12, "{fix} oversize for the oracle");
        let exact = minimal_generating_set(&def, GensetMethod::Exact, CAP).unwrap();
        let items: Vec<Element> = def.carrier().iter().cloned().collect();
        let mode = SpanMode::for_kind(def.kind());
        let mut best = usize::MAX;
        for subset in subsets_of(&items) {
            if subset.len() < best {
                let reach = naive_span(&subset, def.scalars(), mode);
                if def.carrier().iter().all(|v| reach.contains(v)) {
                    best = subset.len();
                }
            }
        }
        assert_eq!(exact.cardinality, best, "on {fix}");
    }

    // map enumeration against the filter of every total table
    let map_cases = [
        line(2, &[(0, 0), (1, 0)], StructureKind::SetVs),
        line(3, &[(0, 0), (1, 0)], StructureKind::SetVs),
        line(4, &[(0, 0), (2, 0)], StructureKind::SetVs),
        line(3, &[(0, 0), (0, 1), (0, 2)], StructureKind::SemigroupLa),
    ];
    for def in map_cases {
        let fast: BTreeSet<BTreeMap<Element, Element>> = enumerate_maps(&def, &def, CAP)
            .unwrap()
            .into_iter()
            .map(|m| m.graph().clone())
            .collect();
        let dom: Vec<Element> = def.carrier().iter().cloned().collect();
        let mut slow = BTreeSet::new();
        for index in 0..dom.len().pow(dom.len() as u32) {
            let mut rest = index;
            let graph: BTreeMap<Element, Element> = dom
                .iter()
                .map(|v| {
                    let image = dom[rest % dom.len()].clone();
                    rest /= dom.len();
                    (v.clone(), image)
                })
                .collect();
            if graph.values().all(Element::is_zero) {
                continue;
            }
            let table =
                neutra_core::MapTable::new(def.clone(), def.clone(), graph.clone()).unwrap();
            if verify_map(&table).unwrap().passed() {
                slow.insert(graph);
            }
        }
        assert_eq!(fast, slow);
    }

    // substructure enumeration against the subset filter
    let sub_fixtures = [
        ("mod12_set_vs.neu", "M"),
        ("three_point_maps.neu", "M"),
        ("simple_mod49.neu", "M"),
        ("strongly_simple_line.neu", "M"),
    ];
    for (fix, name) in sub_fixtures {
        let def = load(fix).structure(name).unwrap();
        assert!(def.carrier().len() <= 10, "{fix} oversize for the oracle");
        let fast: BTreeSet<BTreeSet<Element>> =
            enumerate_substructures(&def, &Flavor::Plain, 20)
                .unwrap()
                .into_iter()
                .collect();
        let items: Vec<Element> = def.carrier().iter().cloned().collect();
        let mut slow = BTreeSet::new();
        for subset in subsets_of(&items) {
            if subset.is_empty()
                || subset.len() == items.len()
                || subset.iter().all(Element::is_zero)
            {
                continue;
            }
            let sub =
                StructureDef::new(subset.clone(), def.scalars().clone(), def.kind()).unwrap();
            if verify(&sub).passed() {
                slow.insert(subset);
            }
        }
        assert_eq!(fast, slow, "on {fix}");
    }
    println!("criterion 6 (oracle equivalences, exact set equality): PASS");
}

#[test]
fn criterion_7_inverse_linearity() {
    // operator sets over at least twenty structures; every bijective table
    // inverts to a verified transformation
    let mut fixtures: Vec<StructureDef> = Vec::new();
    for n in 2..=6u64 {
        fixtures.push(line(n, &[(0, 0), (1, 0)], StructureKind::SetVs));
        fixtures.push(line(n, &[(0, 0), (1, 0), (0, 1)], StructureKind::SetVs));
        let full: Vec<(i64, i64)> = (0..n as i64).map(|k| (0, k)).collect();
        fixtures.push(line(n, &full, StructureKind::SemigroupVs));
        fixtures.push(line(n, &full, StructureKind::SemigroupLa));
    }
    assert!(fixtures.len() >= 20);
    let mut inverted = 0;
    for def in &fixtures {
        let maps = match enumerate_maps(def, def, 100_000) {
            Ok(maps) => maps,
            Err(neutra_core::Error::BudgetExceeded(_)) => continue,
            Err(other) => panic!("{other}"),
        };
        for table in maps {
            if table.image().len() != def.carrier().len() {
                continue;
            }
            let inverse = invert_map(&table).expect("bijective tables invert");
            assert!(verify_map(&inverse).unwrap().passed());
            inverted += 1;
        }
    }
    assert!(inverted >= 20, "only {inverted} invertible maps exercised");
    println!("criterion 7 (inverse linearity over {inverted} invertible maps): PASS");
}

#[test]
fn criterion_8_fuzzy_soundness() {
    // the constant-indeterminate table passes on its fixture
    let workspace = load("fuzzy_constant_indeterminate.neu");
    let map = workspace.fuzzy_map("eta").unwrap();
    assert!(verify_fuzzy(map, FuzzyKind::SetLa).unwrap().passed());

    // the reciprocal-sum adaptation fails with a concrete witness and the
    // fixture records the inconsistency
    let source = std::fs::read_to_string(fixture("fuzzy_reciprocal_drop.neu")).unwrap();
    let workspace = parse_workspace(&source).unwrap();
    assert!(
        workspace.errata.iter().any(|n| n.contains("erratum")),
        "erratum log missing"
    );
    let map = workspace.fuzzy_map("eta").unwrap();
    let report = verify_fuzzy(map, FuzzyKind::SemigroupVs).unwrap();
    assert!(!report.passed());
    let failure = report.first_failure().unwrap();
    assert_eq!(failure.id, "fuzzy.scalar_monotone");
    assert!(failure.witness.is_some());
    // the strict drop reproduces: scaling (I, I) by 5I lowers the grade
    let ring = zn(25);
    let v = Element::tuple(vec![num(ring, 0, 1), num(ring, 0, 1)]).unwrap();
    let scaled = scalar_act(&num(ring, 0, 5), &v).unwrap();
    let at_v = map.grade(&v).unwrap();
    let at_scaled = map.grade(&scaled).unwrap();
    assert!(!at_scaled.dominates(&at_v));

    // verdicts equal an independent re-evaluation on every fuzzy fixture
    let fuzzy_fixtures = [
        ("fuzzy_constant_indeterminate.neu", "eta", FuzzyKind::SetLa),
        ("fuzzy_zero_not_one.neu", "eta", FuzzyKind::GroupLa),
        ("fuzzy_reciprocal_drop.neu", "eta", FuzzyKind::SemigroupVs),
    ];
    for (fix, name, kind) in fuzzy_fixtures {
        let workspace = load(fix);
        let map = workspace.fuzzy_map(name).unwrap();
        let fast = verify_fuzzy(map, kind).unwrap().passed();
        assert_eq!(fast, brute_force_fuzzy(map, kind), "on {fix}");
    }
    println!("criterion 8 (fuzzy checker soundness): PASS");
}

fn brute_force_fuzzy(map: &FuzzyMap, kind: FuzzyKind) -> bool {
    let def = map.structure();
    let carrier = def.carrier();
    let ge = |hi: &FuzzyNeutroValue, lo: &FuzzyNeutroValue| {
        hi.real_part() >= lo.real_part() && hi.i_coeff() >= lo.i_coeff()
    };
    let min_ok = carrier.iter().all(|a| {
        carrier.iter().all(|b| {
            if a.shape() != b.shape() {
                return true;
            }
            let sum = elem_add(a, b).unwrap();
            if !carrier.contains(&sum) {
                return true;
            }
            let floor = map.grade(a).unwrap().meet(&map.grade(b).unwrap());
            ge(&map.grade(&sum).unwrap(), &floor)
        })
    });
    let monotone = def.scalars().members().iter().all(|r| {
        carrier.iter().all(|a| {
            let ra = scalar_act(r, a).unwrap();
            !carrier.contains(&ra) || ge(&map.grade(&ra).unwrap(), &map.grade(a).unwrap())
        })
    });
    let zero_one = carrier
        .iter()
        .filter(|e| e.is_zero())
        .all(|z| map.grade(z) == Some(FuzzyNeutroValue::one()));
    let neg_sym = carrier.iter().all(|a| {
        let m = neutra_core::elem_neg(a);
        carrier.contains(&m) && map.grade(&m) == map.grade(a)
    });
    let equal = def.scalars().members().iter().all(|r| {
        carrier.iter().all(|a| {
            let ra = scalar_act(r, a).unwrap();
            !carrier.contains(&ra) || map.grade(&ra) == map.grade(a)
        })
    });
    let fixes_i = {
        let ind = Element::scalar(NeutroNumber::indeterminate(def.ring()));
        !carrier.contains(&ind) || map.grade(&ind) == Some(FuzzyNeutroValue::indeterminate())
    };
    match kind {
        FuzzyKind::SetVs => true,
        FuzzyKind::SetLa => min_ok && fixes_i,
        FuzzyKind::SemigroupVs => monotone,
        FuzzyKind::SemigroupLa => min_ok && monotone,
        FuzzyKind::GroupVs => monotone && fixes_i,
        FuzzyKind::GroupLa => min_ok && neg_sym && zero_one && equal,
        FuzzyKind::GroupLaClassical => min_ok && neg_sym && zero_one && monotone,
    }
}

#[test]
fn criterion_9_cli_contract() {
    // every fixture parses
    let dir = format!("{}/fixtures", env!("CARGO_MANIFEST_DIR"));
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let source = std::fs::read_to_string(&path).unwrap();
        parse_workspace(&source)
            .unwrap_or_else(|e| panic!("{} failed to parse: {e}", path.display()));
        count += 1;
    }
    assert!(count >= 20, "fixture corpus too small: {count}");

    // machine reports are byte-deterministic across runs
    for args in [
        vec!["check", "--structure", "Mla"],
        vec!["genset", "--structure", "M"],
        vec!["simplicity", "--structure", "M"],
    ] {
        let fix = if args[0] == "check" {
            fixture("open_carrier_set_vs.neu")
        } else {
            fixture("strongly_simple_line.neu")
        };
        let mut full = vec![args[0], &fix];
        full.extend_from_slice(&args[1..]);
        full.extend_from_slice(&["--format", "machine"]);
        let once = neutra().args(&full).output().unwrap();
        let twice = neutra().args(&full).output().unwrap();
        assert_eq!(once.stdout, twice.stdout, "nondeterministic: {args:?}");
    }

    // documented exit codes: pass 0, fail 1, malformed 2, budget 3
    let pass = neutra()
        .args(["check", &fixture("mod12_set_vs.neu"), "--structure", "M"])
        .output()
        .unwrap();
    assert_eq!(pass.status.code(), Some(0));
    let fail = neutra()
        .args([
            "check",
            &fixture("open_carrier_set_vs.neu"),
            "--structure",
            "Mla",
        ])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let dir = std::env::temp_dir().join("neutra-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("malformed.neu");
    std::fs::write(&bad, "set V = {1};").unwrap(); // no ring declared
    let malformed = neutra()
        .args(["check", bad.to_str().unwrap(), "--structure", "V"])
        .output()
        .unwrap();
    assert_eq!(malformed.status.code(), Some(2));
    let budget = neutra()
        .args([
            "closure",
            &fixture("closure_mod4.neu"),
            "--set",
            "Z4",
            "--under",
            "add",
            "--cap",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));
    println!("criterion 9 (CLI contract): PASS");
}
