use std::fs;
use std::path::Path;

use parcoal_core::bundle::{GlobalizationMode, GlobalizationRef, Object};
use parcoal_core::examples::{
    adjoint_coaction, dual_basis_comodule, group_algebra, regular_module_coalgebra, subgroup_partial_action_on_k,
    subgroup_partial_coaction_on_k, trivial_coaction, GroupTable, GroupTableFile,
};
use parcoal_core::glob::{adjoint_psi_check, dual_globalization, standard_globalization_pcc, standard_globalization_pmc, GlobError, GlobalizationPmc};
use parcoal_core::hopf::{check_hopf_algebra, dual_hopf};
use parcoal_core::pact::{check_compatibility_pairing, check_partial_module_algebra, dual_action_on_dual};
use parcoal_core::pcoact::{check_four_way_equivalence, coaction_to_action, coaction_to_dual_action};
use parcoal_core::{coalg::dual_algebra, Bundle, CheckReport, Coalgebra, FieldSpec};
use serde_json::json;

use crate::error::CliError;
use crate::suites::{self, Sections};
use crate::{DualTarget, Generator, Mode, Suite};

fn read_bundle(path: &Path) -> Result<Bundle, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(Bundle::parse(&text)?)
}

fn write_bundle(bundle: &Bundle, out: Option<&Path>) -> Result<(), CliError> {
    let text = bundle.to_canonical_string();
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summarize(sections: &Sections) {
    for (name, report) in sections {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        eprintln!("{verdict} {name}");
        for entry in report.entries.iter().filter(|e| !e.pass) {
            let r = CheckReport { entries: vec![entry.clone()] };
            eprint!("  {r}");
        }
    }
}

fn all_pass(sections: &Sections) -> bool {
    sections.iter().all(|(_, r)| r.passed())
}

fn insert_fresh(bundle: &mut Bundle, name: String, obj: Object) -> Result<(), CliError> {
    if bundle.objects.contains_key(&name) {
        return Err(CliError::Input(format!("object {name:?} already exists")));
    }
    bundle.insert(name, obj);
    Ok(())
}

/// The named object, or the only object of the given kind.
fn pick<'a>(bundle: &'a Bundle, kind: &str, object: Option<&'a str>) -> Result<&'a str, CliError> {
    if let Some(name) = object {
        return Ok(name);
    }
    match bundle.names_of(kind).as_slice() {
        [one] => Ok(one),
        [] => Err(CliError::Input(format!("bundle has no {kind} object"))),
        many => Err(CliError::Input(format!("bundle has several {kind} objects ({}); pass --object", many.join(", ")))),
    }
}

fn selected<'a>(bundle: &'a Bundle, kind: &str, object: Option<&'a str>) -> Vec<&'a str> {
    match object {
        Some(name) => vec![name],
        None => bundle.names_of(kind),
    }
}

pub fn check(file: &Path, suite: Suite, json: bool, symmetric: bool) -> Result<bool, CliError> {
    let bundle = read_bundle(file)?;
    let sections = suites::run(&bundle, suite, symmetric)?;
    if json {
        let value: serde_json::Map<String, serde_json::Value> = sections
            .iter()
            .map(|(name, r)| (name.clone(), serde_json::to_value(r).expect("report serializes")))
            .collect();
        println!("{}", serde_json::to_string_pretty(&value).expect("reports serialize"));
    } else {
        for (name, report) in &sections {
            println!("== {name}");
            print!("{report}");
        }
    }
    Ok(all_pass(&sections))
}

fn unverified(e: GlobError) -> CliError {
    match e {
        GlobError::NotPartialModuleCoalgebra(_) | GlobError::NotPartialComoduleCoalgebra(_) => CliError::Input(e.to_string()),
        e => e.into(),
    }
}

pub fn globalize(file: &Path, mode: Mode, object: Option<&str>, out: Option<&Path>) -> Result<bool, CliError> {
    let mut bundle = read_bundle(file)?;
    match mode {
        Mode::Pmc => {
            let name = pick(&bundle, "action", object)?.to_string();
            let v = bundle.action(&name)?;
            let hopf_name = match bundle.get(&name)? {
                Object::Action { hopf, .. } => hopf.clone(),
                _ => unreachable!("action view resolved"),
            };
            let g = match standard_globalization_pmc(v.coalgebra, v.hopf, v.action) {
                Err(e @ GlobError::NotPartialModuleCoalgebra(_)) => {
                    eprintln!("error: {e}");
                    return Ok(false);
                }
                r => r.map_err(unverified)?,
            };
            if !g.report.passed() {
                summarize(&vec![("globalization".into(), g.report.clone())]);
                return Err(CliError::Internal("the standard globalization failed its verifier".into()));
            }
            let d = format!("{name}.D");
            insert_fresh(&mut bundle, d.clone(), Object::Coalgebra(g.d))?;
            insert_fresh(&mut bundle, format!("{name}.global"), Object::Action { coalgebra: d, hopf: hopf_name, action: g.action })?;
            insert_fresh(&mut bundle, format!("{name}.theta"), Object::LinearMap(g.theta))?;
            insert_fresh(&mut bundle, format!("{name}.pi"), Object::LinearMap(g.pi))?;
            insert_fresh(
                &mut bundle,
                format!("{name}.globalization"),
                Object::Globalization(GlobalizationRef {
                    mode: GlobalizationMode::Pmc,
                    partial: name.clone(),
                    global: format!("{name}.global"),
                    theta: format!("{name}.theta"),
                    pi: format!("{name}.pi"),
                }),
            )?;
            bundle.reports.insert(format!("{name}.globalization"), g.report);
        }
        Mode::Pcc => {
            let name = pick(&bundle, "coaction", object)?.to_string();
            let v = bundle.coaction(&name)?;
            let (coalg_name, hopf_name) = match bundle.get(&name)? {
                Object::Coaction { coalgebra, hopf, .. } => (coalgebra.clone(), hopf.clone()),
                _ => unreachable!("coaction view resolved"),
            };
            let g = match standard_globalization_pcc(v.coalgebra, v.hopf, v.coaction) {
                Err(e @ GlobError::NotPartialComoduleCoalgebra(_)) => {
                    eprintln!("error: {e}");
                    return Ok(false);
                }
                r => r.map_err(unverified)?,
            };
            if !g.passed() {
                summarize(&vec![
                    ("globalization".into(), g.report.clone()),
                    ("rationality".into(), g.rationality.clone()),
                    ("cross-check".into(), g.cross_check.clone()),
                ]);
                return Err(CliError::Internal("the standard globalization failed its verifier".into()));
            }
            let hstar = format!("{name}.hstar");
            let d = format!("{name}.D");
            insert_fresh(&mut bundle, hstar.clone(), Object::Hopf(g.hstar))?;
            insert_fresh(
                &mut bundle,
                format!("{name}.induced"),
                Object::Action { coalgebra: coalg_name, hopf: hstar, action: g.induced_action },
            )?;
            insert_fresh(&mut bundle, d.clone(), Object::Coalgebra(g.d))?;
            insert_fresh(&mut bundle, format!("{name}.global"), Object::Coaction { coalgebra: d, hopf: hopf_name, coaction: g.coaction })?;
            insert_fresh(&mut bundle, format!("{name}.theta"), Object::LinearMap(g.theta))?;
            insert_fresh(&mut bundle, format!("{name}.pi"), Object::LinearMap(g.pi))?;
            insert_fresh(
                &mut bundle,
                format!("{name}.globalization"),
                Object::Globalization(GlobalizationRef {
                    mode: GlobalizationMode::Pcc,
                    partial: name.clone(),
                    global: format!("{name}.global"),
                    theta: format!("{name}.theta"),
                    pi: format!("{name}.pi"),
                }),
            )?;
            bundle.reports.insert(format!("{name}.globalization"), g.report);
            bundle.reports.insert(format!("{name}.rationality"), g.rationality);
            bundle.reports.insert(format!("{name}.cross-check"), g.cross_check);
        }
    }
    write_bundle(&bundle, out)?;
    Ok(true)
}

pub fn dualize(file: &Path, what: DualTarget, object: Option<&str>, out: Option<&Path>) -> Result<bool, CliError> {
    let mut bundle = read_bundle(file)?;
    let mut sections = Sections::new();
    match what {
        DualTarget::Action => {
            for name in selected(&bundle, "action", object).into_iter().map(str::to_string).collect::<Vec<_>>() {
                let v = bundle.action(&name)?;
                let dual = dual_action_on_dual(v.coalgebra, v.hopf, v.action)?;
                let pma = check_partial_module_algebra(&dual_algebra(v.coalgebra), v.hopf, &dual, false)?;
                let pairing = check_compatibility_pairing(v.action, &dual)?;
                let (coalgebra, hopf) = match bundle.get(&name)? {
                    Object::Action { coalgebra, hopf, .. } => (coalgebra.clone(), hopf.clone()),
                    _ => unreachable!("action view resolved"),
                };
                insert_fresh(&mut bundle, format!("{name}.dual"), Object::DualAction { coalgebra, hopf, action: dual })?;
                sections.push((format!("{name}.pma"), pma));
                sections.push((format!("{name}.pairing"), pairing));
            }
        }
        DualTarget::Coaction => {
            for name in selected(&bundle, "coaction", object).into_iter().map(str::to_string).collect::<Vec<_>>() {
                let v = bundle.coaction(&name)?;
                let (hstar, act) = coaction_to_action(v.coalgebra, v.hopf, v.coaction)?;
                let (_, dual) = coaction_to_dual_action(v.coalgebra, v.hopf, v.coaction)?;
                let report = check_four_way_equivalence(v.coalgebra, v.hopf, v.coaction)?;
                let coalgebra = match bundle.get(&name)? {
                    Object::Coaction { coalgebra, .. } => coalgebra.clone(),
                    _ => unreachable!("coaction view resolved"),
                };
                let hstar_name = format!("{name}.hstar");
                insert_fresh(&mut bundle, hstar_name.clone(), Object::Hopf(hstar))?;
                insert_fresh(
                    &mut bundle,
                    format!("{name}.action"),
                    Object::Action { coalgebra: coalgebra.clone(), hopf: hstar_name.clone(), action: act },
                )?;
                insert_fresh(&mut bundle, format!("{name}.dual"), Object::DualAction { coalgebra, hopf: hstar_name, action: dual })?;
                sections.push((format!("{name}.four-way"), report));
            }
        }
        DualTarget::Hopf => {
            for name in selected(&bundle, "hopf", object).into_iter().map(str::to_string).collect::<Vec<_>>() {
                let dual = dual_hopf(bundle.hopf(&name)?);
                sections.push((format!("{name}.dual"), check_hopf_algebra(&dual)));
                insert_fresh(&mut bundle, format!("{name}.dual"), Object::Hopf(dual))?;
            }
        }
        DualTarget::Globalization => {
            for name in selected(&bundle, "globalization", object).into_iter().map(str::to_string).collect::<Vec<_>>() {
                let g = bundle.globalization(&name)?.clone();
                if g.mode != GlobalizationMode::Pmc {
                    return Err(CliError::Input(format!(
                        "globalization {name:?} is a comodule globalization; dualize its coaction instead"
                    )));
                }
                let (p, d) = (bundle.action(&g.partial)?, bundle.action(&g.global)?);
                let glob = GlobalizationPmc {
                    d: d.coalgebra.clone(),
                    action: d.action.clone(),
                    theta: bundle.linear_map(&g.theta)?.clone(),
                    pi: bundle.linear_map(&g.pi)?.clone(),
                    report: CheckReport::new(),
                };
                let dual = dual_globalization(p.coalgebra, p.hopf, p.action, &glob)?;
                sections.push((format!("{name}.gma"), dual.report));
                match adjoint_psi_check(p.coalgebra, p.hopf, p.action, &glob) {
                    Ok(adj) => sections.push((format!("{name}.adjoint"), adj.report)),
                    Err(GlobError::NotStandardForm(why)) => eprintln!("note: {name}: adjoint check skipped ({why})"),
                    Err(e) => return Err(e.into()),
                }
                if let Some(phi) = dual.phi {
                    insert_fresh(&mut bundle, format!("{name}.phi"), Object::LinearMap(phi))?;
                }
            }
        }
    }
    summarize(&sections);
    let pass = all_pass(&sections);
    for (name, report) in sections {
        bundle.reports.insert(name, report);
    }
    write_bundle(&bundle, out)?;
    Ok(pass)
}

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    let text = text.trim();
    if text == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = text
        .strip_prefix("F_")
        .or_else(|| text.strip_prefix('F'))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Input(format!("unknown field {text:?}; expected Q or F<p>")))?;
    FieldSpec::prime_field(p).map_err(|e| CliError::Input(e.to_string()))
}

fn load_group(name: &str, file: Option<&Path>) -> Result<GroupTable, CliError> {
    match file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
            let table: GroupTableFile =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok(GroupTable::from_file(table)?)
        }
        None => Ok(GroupTable::named(name)?),
    }
}

pub fn generate(
    name: Generator,
    group: &str,
    group_file: Option<&Path>,
    subgroup: &str,
    field: &str,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    let field = parse_field(field)?;
    let g = load_group(group, group_file)?;
    let h = group_algebra(&g, field)?;
    let mut bundle = Bundle::new(field);
    bundle.metadata.insert("group".into(), json!(if group_file.is_some() { "file" } else { group }));
    let generator = match name {
        Generator::GroupAlgebra => {
            bundle.insert("H", Object::Hopf(h));
            "group-algebra"
        }
        Generator::SubgroupAction => {
            let n = g.subset(subgroup)?;
            bundle.metadata.insert("subgroup".into(), json!(subset_labels(&g, &n)));
            let act = subgroup_partial_action_on_k(&g, &n, field)?;
            bundle.insert("C", Object::Coalgebra(Coalgebra::ground(field)));
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("act", Object::Action { coalgebra: "C".into(), hopf: "H".into(), action: act });
            "subgroup-action"
        }
        Generator::SubgroupCoaction => {
            let n = g.subset(subgroup)?;
            bundle.metadata.insert("subgroup".into(), json!(subset_labels(&g, &n)));
            let co = subgroup_partial_coaction_on_k(&g, &n, field)?;
            bundle.insert("C", Object::Coalgebra(Coalgebra::ground(field)));
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("coact", Object::Coaction { coalgebra: "C".into(), hopf: "H".into(), coaction: co });
            "subgroup-coaction"
        }
        Generator::RegularAction => {
            let act = regular_module_coalgebra(&h);
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("act", Object::Action { coalgebra: "H".into(), hopf: "H".into(), action: act });
            "regular-action"
        }
        Generator::TrivialCoaction => {
            let co = trivial_coaction(h.coalg(), &h);
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("coact", Object::Coaction { coalgebra: "H".into(), hopf: "H".into(), coaction: co });
            "trivial-coaction"
        }
        Generator::AdjointCoaction => {
            let co = adjoint_coaction(&h);
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("coact", Object::Coaction { coalgebra: "H".into(), hopf: "H".into(), coaction: co });
            "adjoint-coaction"
        }
        Generator::DualBasisCoaction => {
            let (hstar, co) = dual_basis_comodule(&h);
            bundle.insert("H", Object::Hopf(h));
            bundle.insert("Hstar", Object::Coalgebra(hstar));
            bundle.insert("coact", Object::Coaction { coalgebra: "Hstar".into(), hopf: "H".into(), coaction: co });
            "dual-basis-coaction"
        }
    };
    bundle.metadata.insert("generator".into(), json!(generator));
    bundle.validate()?;
    write_bundle(&bundle, out)?;
    Ok(true)
}

fn subset_labels(g: &GroupTable, subset: &[usize]) -> Vec<String> {
    subset.iter().map(|&i| g.labels()[i].clone()).collect()
}

pub fn roundtrip(file: &Path, out: Option<&Path>) -> Result<bool, CliError> {
    let bundle = read_bundle(file)?;
    let text = bundle.to_canonical_string();
    let again = Bundle::parse(&text)?;
    if again != bundle || again.to_canonical_string() != text {
        return Err(CliError::Internal("canonical serialization does not round-trip".into()));
    }
    write_bundle(&bundle, out)?;
    Ok(true)
}
