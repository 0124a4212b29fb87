//! Acceptance criteria, each reported as one PASS/FAIL line. All checks are
//! exact; the process exits non-zero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parcoal_core::coalg::Coalgebra;
use parcoal_core::examples::{
    group_algebra, pcc_catalog, regular_module_coalgebra, subgroup_partial_action_on_k, subgroup_partial_coaction_on_k,
    subsets_containing, tensor_comodule_coalgebra, tensor_module_coalgebra, trivial_coaction, ExamplesError,
    GroupTable,
};
use parcoal_core::glob::{
    adjoint_psi_check, dual_globalization, standard_globalization_pcc, standard_globalization_pmc,
    verify_globalization_pmc, GlobalizationPmc,
};
use parcoal_core::hopf::{check_antipode_properties, check_bialgebra};
use parcoal_core::pact::{
    check_counit_compat, check_module_coalgebra, check_partial_module_coalgebra, check_pmc_noncounital,
    is_global_action,
};
use parcoal_core::pcoact::{
    action_to_coaction, check_comodule_coalgebra, check_four_way_equivalence, check_nabla_identities,
    check_partial_comodule_coalgebra, coaction_to_action, is_global_coaction,
};
use parcoal_core::{ActionMap, CoactionMap, FieldSpec, HopfAlgebra, LinearMap};

const Q: FieldSpec = FieldSpec::Rationals;

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Subgroup test by closure, independent of `GroupTable::is_subgroup`.
fn generated_subgroup(g: &GroupTable, subset: &[usize]) -> bool {
    let mut closure = vec![g.identity()];
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in subset {
            let y = g.mul(x, s);
            if !closure.contains(&y) {
                closure.push(y);
                frontier.push(y);
            }
        }
    }
    closure.len() == subset.len() && subset.iter().all(|s| closure.contains(s))
}

fn all_groups() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("Z2", GroupTable::cyclic(2).unwrap()),
        ("Z3", GroupTable::cyclic(3).unwrap()),
        ("Z4", GroupTable::cyclic(4).unwrap()),
        ("Klein", GroupTable::klein()),
        ("S3", GroupTable::s3()),
    ]
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for field in [Q, FieldSpec::PrimeField(5)] {
        for (name, g) in all_groups() {
            let h = group_algebra(&g, field).map_err(err)?;
            ensure(check_bialgebra(&h.bialg).passed(), || format!("{name} over {field}: bialgebra"))?;
            ensure(check_antipode_properties(&h).passed(), || format!("{name} over {field}: antipode"))?;
            let oracle = LinearMap::from_fn(field, g.order(), g.order(), |r, c| {
                if r == g.inverse(c) {
                    field.one()
                } else {
                    field.zero()
                }
            });
            ensure(h.antipode == oracle, || format!("{name} over {field}: S is not g -> g^-1"))?;
            count += 1;
        }
    }
    Ok(format!("{count} group algebras"))
}

struct PmcCase {
    name: String,
    c: Coalgebra,
    h: HopfAlgebra,
    act: ActionMap,
}

fn s3_passing() -> Result<(Vec<PmcCase>, usize), String> {
    let g = GroupTable::s3();
    let h = group_algebra(&g, Q).map_err(err)?;
    let k = Coalgebra::ground(Q);
    let subsets = subsets_containing(g.order(), g.identity());
    let mut passing = Vec::new();
    for n in &subsets {
        let act = subgroup_partial_action_on_k(&g, n, Q).map_err(err)?;
        let pass = check_partial_module_coalgebra(&k, &h, &act, false).map_err(err)?.passed();
        ensure(pass == generated_subgroup(&g, n), || format!("subset {n:?}: PMC verdict {pass}"))?;
        if pass {
            passing.push(PmcCase { name: format!("S3 {n:?}"), c: k.clone(), h: h.clone(), act });
        }
    }
    Ok((passing, subsets.len()))
}

fn criterion_2() -> Outcome {
    let (passing, total) = s3_passing()?;
    ensure(total == 32, || format!("{total} subsets"))?;
    ensure(passing.len() == 6, || format!("{} passing subsets", passing.len()))?;
    Ok(format!("{} of {total} subsets pass", passing.len()))
}

fn globalization_cases() -> Result<Vec<PmcCase>, String> {
    let (mut cases, _) = s3_passing()?;
    let g = GroupTable::cyclic(4).unwrap();
    let h = group_algebra(&g, Q).map_err(err)?;
    for n in g.subgroups() {
        cases.push(PmcCase {
            name: format!("Z4 {n:?}"),
            c: Coalgebra::ground(Q),
            h: h.clone(),
            act: subgroup_partial_action_on_k(&g, &n, Q).map_err(err)?,
        });
    }
    Ok(cases)
}

fn criterion_3() -> Outcome {
    let cases = globalization_cases()?;
    for case in &cases {
        let g = standard_globalization_pmc(&case.c, &case.h, &case.act).map_err(err)?;
        ensure(g.report.total_failures() == 0, || format!("{}: {}", case.name, g.report))?;
    }
    Ok(format!("{} globalizations verified", cases.len()))
}

fn mutate(rng: &mut ChaCha8Rng, g: &GlobalizationPmc) -> (GlobalizationPmc, String) {
    let mut m = g.clone();
    let target = rng.gen_range(0..5);
    let (label, map) = match target {
        0 => ("D.delta", &mut m.d.delta),
        1 => ("D.epsilon", &mut m.d.epsilon),
        2 => ("action", &mut m.action.map),
        3 => ("theta", &mut m.theta),
        _ => ("pi", &mut m.pi),
    };
    let (r, c) = (rng.gen_range(0..map.codomain_dim()), rng.gen_range(0..map.domain_dim()));
    let delta = Q.fraction([1i64, -1, 2, -3][rng.gen_range(0..4)], [1i64, 2][rng.gen_range(0..2)]).unwrap();
    let v = map.get(r, c) + &delta;
    map.set(r, c, v);
    (m, format!("{label}[{r},{c}] += {delta}"))
}

fn criterion_4() -> Outcome {
    let cases = globalization_cases()?;
    let mut globs = Vec::new();
    for case in &cases {
        let g = standard_globalization_pmc(&case.c, &case.h, &case.act).map_err(err)?;
        let dual = dual_globalization(&case.c, &case.h, &case.act, &g).map_err(err)?;
        ensure(dual.report.passed(), || format!("{}: {}", case.name, dual.report))?;
        globs.push(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d75_7461);
    for i in 0..100 {
        let k = rng.gen_range(0..cases.len());
        let case = &cases[k];
        let (m, what) = mutate(&mut rng, &globs[k]);
        let gmc = verify_globalization_pmc(&case.c, &case.h, &case.act, &m.d, &m.action, &m.theta, &m.pi).map_err(err)?;
        let gma = dual_globalization(&case.c, &case.h, &case.act, &m).map_err(err)?;
        ensure(gmc.passed() == gma.report.passed(), || format!("mutant {i} ({}, {what}): verdicts disagree", case.name))?;
        ensure(!gmc.passed(), || format!("mutant {i} ({}, {what}) passes both suites", case.name))?;
    }
    Ok(format!("{} instances, 100 mutants rejected by both suites", cases.len()))
}

fn criterion_5() -> Outcome {
    let cases = globalization_cases()?;
    for case in &cases {
        let g = standard_globalization_pmc(&case.c, &case.h, &case.act).map_err(err)?;
        let adj = adjoint_psi_check(&case.c, &case.h, &case.act, &g).map_err(err)?;
        ensure(adj.report.verdict("psi-phi") == Some(true), || format!("{}: {}", case.name, adj.report))?;
        ensure(adj.report.passed(), || format!("{}: {}", case.name, adj.report))?;
    }
    Ok(format!("{} standard globalizations", cases.len()))
}

fn criterion_6() -> Outcome {
    let g = GroupTable::cyclic(4).unwrap();
    let h = group_algebra(&g, Q).map_err(err)?;
    let k = Coalgebra::ground(Q);
    let expected: Vec<Vec<usize>> = vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]];
    let mut passing = Vec::new();
    for n in subsets_containing(4, g.identity()) {
        let co = subgroup_partial_coaction_on_k(&g, &n, Q).map_err(err)?;
        if check_partial_comodule_coalgebra(&k, &h, &co, false).map_err(err)?.passed() {
            ensure(check_nabla_identities(&k, &h, &co).map_err(err)?.passed(), || format!("{n:?}: nabla"))?;
            passing.push(n);
        }
    }
    ensure(passing == expected, || format!("passing subsets {passing:?}"))?;
    let f2 = FieldSpec::PrimeField(2);
    let mut rejected = 0;
    for n in subsets_containing(4, g.identity()).into_iter().filter(|n| n.len() % 2 == 0) {
        match subgroup_partial_coaction_on_k(&g, &n, f2) {
            Err(ExamplesError::CharacteristicDividesOrder { .. }) => rejected += 1,
            other => return Err(format!("{n:?} over F_2: {other:?}")),
        }
    }
    Ok(format!("subgroups {passing:?} pass; {rejected} even subsets rejected over F_2"))
}

fn criterion_7() -> Outcome {
    let catalog = pcc_catalog(Q).map_err(err)?;
    for inst in &catalog {
        ensure(inst.hopf.dim() <= 6, || format!("{}: dim H > 6", inst.name))?;
        let (c, h, co) = (&inst.coalgebra, &inst.hopf, &inst.coaction);
        let (_, act) = coaction_to_action(c, h, co).map_err(err)?;
        let back = action_to_coaction(c, &act, h).map_err(err)?;
        ensure(&back == co, || format!("{}: coaction round trip", inst.name))?;
        let (_, act_again) = coaction_to_action(c, h, &back).map_err(err)?;
        ensure(act_again == act, || format!("{}: action round trip", inst.name))?;
        let report = check_four_way_equivalence(c, h, co).map_err(err)?;
        ensure(report.passed(), || format!("{}: {report}", inst.name))?;
    }
    Ok(format!("{} catalog instances", catalog.len()))
}

fn criterion_8() -> Outcome {
    let catalog = pcc_catalog(Q).map_err(err)?;
    for inst in &catalog {
        let g = standard_globalization_pcc(&inst.coalgebra, &inst.hopf, &inst.coaction).map_err(err)?;
        ensure(g.report.total_failures() == 0, || format!("{}: {}", inst.name, g.report))?;
        ensure(g.rationality.passed(), || format!("{}: {}", inst.name, g.rationality))?;
        ensure(g.cross_check.passed(), || format!("{}: {}", inst.name, g.cross_check))?;
    }
    Ok(format!("{} catalog instances", catalog.len()))
}

fn random_field(rng: &mut ChaCha8Rng) -> FieldSpec {
    [Q, FieldSpec::PrimeField(3), FieldSpec::PrimeField(5), FieldSpec::PrimeField(7)][rng.gen_range(0..4)]
}

fn random_group(rng: &mut ChaCha8Rng) -> GroupTable {
    match rng.gen_range(0..7) {
        0 => GroupTable::s3(),
        1 => GroupTable::klein(),
        n => GroupTable::cyclic(n).unwrap(),
    }
}

/// A random partial action: a subgroup action on `k`, tensored on the left
/// with a group-like coalgebra, or a regular action.
fn fuzz_action(rng: &mut ChaCha8Rng) -> Result<PmcCase, String> {
    let field = random_field(rng);
    let g = random_group(rng);
    let h = group_algebra(&g, field).map_err(err)?;
    if rng.gen_bool(0.2) {
        let act = regular_module_coalgebra(&h);
        return Ok(PmcCase { name: "regular".into(), c: h.coalg().clone(), h, act });
    }
    let subgroups = g.subgroups();
    let n = &subgroups[rng.gen_range(0..subgroups.len())];
    let act = subgroup_partial_action_on_k(&g, n, field).map_err(err)?;
    let left = group_algebra(&GroupTable::cyclic(rng.gen_range(1..4)).unwrap(), field).map_err(err)?;
    let (c, act) = tensor_module_coalgebra(left.coalg(), &Coalgebra::ground(field), &act).map_err(err)?;
    Ok(PmcCase { name: format!("{n:?} over {field}"), c, h, act })
}

fn fuzz_coaction(rng: &mut ChaCha8Rng) -> Result<(Coalgebra, HopfAlgebra, CoactionMap), String> {
    let field = Q;
    let g = random_group(rng);
    let h = group_algebra(&g, field).map_err(err)?;
    let right = group_algebra(&GroupTable::cyclic(rng.gen_range(1..3)).unwrap(), field).map_err(err)?;
    if rng.gen_bool(0.3) {
        let co = trivial_coaction(right.coalg(), &h);
        return Ok((right.coalg().clone(), h, co));
    }
    let subgroups = g.subgroups();
    let n = &subgroups[rng.gen_range(0..subgroups.len())];
    let co = subgroup_partial_coaction_on_k(&g, n, field).map_err(err)?;
    let (c, co) = tensor_comodule_coalgebra(&Coalgebra::ground(field), &co, right.coalg()).map_err(err)?;
    Ok((c, h, co))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x676c_6f62);
    let mut globals = 0;
    for i in 0..100 {
        let case = fuzz_action(&mut rng)?;
        let counit = check_counit_compat(&case.c, &case.h, &case.act).map_err(err)?.passed();
        let direct = check_module_coalgebra(&case.c, &case.h, &case.act).map_err(err)?.passed();
        ensure(counit == direct, || format!("instance {i} ({}): counit criterion {counit}, MC {direct}", case.name))?;
        let verdict = is_global_action(&case.c, &case.h, &case.act).map_err(err)?;
        ensure(verdict.global == direct, || format!("instance {i}: is_global_action"))?;
        globals += usize::from(direct);
        for symmetric in [false, true] {
            let a = check_partial_module_coalgebra(&case.c, &case.h, &case.act, symmetric).map_err(err)?.passed();
            let b = check_pmc_noncounital(&case.c, &case.h, &case.act, symmetric).map_err(err)?.passed();
            ensure(a == b, || format!("instance {i} ({}): PMC {a}, PMC' {b}", case.name))?;
        }
    }
    let g = GroupTable::s3();
    let h = group_algebra(&g, Q).map_err(err)?;
    let k = Coalgebra::ground(Q);
    for n in subsets_containing(6, g.identity()) {
        let act = subgroup_partial_action_on_k(&g, &n, Q).map_err(err)?;
        for symmetric in [false, true] {
            let a = check_partial_module_coalgebra(&k, &h, &act, symmetric).map_err(err)?.passed();
            let b = check_pmc_noncounital(&k, &h, &act, symmetric).map_err(err)?.passed();
            ensure(a == b, || format!("S3 subset {n:?}: PMC {a}, PMC' {b}"))?;
        }
    }
    let mut coactions = 0;
    for inst in pcc_catalog(Q).map_err(err)? {
        let direct = check_comodule_coalgebra(&inst.coalgebra, &inst.hopf, &inst.coaction).map_err(err)?.passed();
        let verdict = is_global_coaction(&inst.coalgebra, &inst.hopf, &inst.coaction).map_err(err)?;
        ensure(verdict.global == direct, || format!("{}: is_global_coaction", inst.name))?;
        coactions += 1;
    }
    for i in 0..50 {
        let (c, h, co) = fuzz_coaction(&mut rng)?;
        let direct = check_comodule_coalgebra(&c, &h, &co).map_err(err)?.passed();
        let verdict = is_global_coaction(&c, &h, &co).map_err(err)?;
        ensure(verdict.global == direct, || format!("fuzzed coaction {i}: is_global_coaction"))?;
        coactions += 1;
    }
    Ok(format!("100 fuzzed actions ({globals} global), 32 S3 subsets, {coactions} coactions"))
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_parcoal")).args(args).output().map_err(err)?;
    match out.status.code() {
        Some(0) => Ok(()),
        code => Err(format!("parcoal {}: exit {code:?}: {}", args.join(" "), String::from_utf8_lossy(&out.stderr).trim())),
    }
}

fn pipeline(dir: &Path) -> Result<Vec<Vec<u8>>, String> {
    let p = |name: &str| dir.join(name).to_str().unwrap().to_string();
    let (a, g, d) = (p("a3.json"), p("glob.json"), p("dual.json"));
    run_cli(&["generate", "subgroup-action", "--group", "S3", "--subgroup", "A3", "--field", "Q", "--out", &a])?;
    run_cli(&["check", &a, "--suite", "pmc"])?;
    run_cli(&["globalize", &a, "--mode", "pmc", "--out", &g])?;
    run_cli(&["check", &g, "--suite", "all"])?;
    run_cli(&["dualize", &g, "--what", "globalization", "--out", &d])?;
    [a, g, d].iter().map(|f| fs::read(f).map_err(err)).collect()
}

fn criterion_10() -> Outcome {
    let first = tempfile::tempdir().map_err(err)?;
    let second = tempfile::tempdir().map_err(err)?;
    let a = pipeline(first.path())?;
    let b = pipeline(second.path())?;
    ensure(a == b, || "bundles differ between runs".into())?;
    Ok(format!("5 stages exit 0; {} bundles byte-identical", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Hopf catalog soundness", criterion_1, Some(1)),
        ("subgroup iff criterion (S3)", criterion_2, Some(5)),
        ("globalization existence", criterion_3, Some(5)),
        ("duality of globalizations", criterion_4, None),
        ("standard duality", criterion_5, None),
        ("coaction iff criteria (Z4)", criterion_6, None),
        ("four-way equivalence", criterion_7, None),
        ("comodule globalization", criterion_8, Some(10)),
        ("checker equivalences", criterion_9, None),
        ("CLI contract", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(secs)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("took {elapsed:.2?}, limit {secs} s"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
