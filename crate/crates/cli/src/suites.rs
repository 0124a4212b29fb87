use parcoal_core::bundle::{GlobalizationMode, Object};
use parcoal_core::coalg::{check_coalgebra, dual_algebra};
use parcoal_core::glob::{cross_check_pcc_triple, verify_globalization_pcc, verify_globalization_pmc};
use parcoal_core::hopf::check_hopf_algebra;
use parcoal_core::pact::{check_module_coalgebra, check_partial_module_algebra, check_partial_module_coalgebra, dual_action_on_dual};
use parcoal_core::pcoact::{check_comodule_coalgebra, check_partial_comodule_coalgebra};
use parcoal_core::{Bundle, CheckReport};

use crate::error::CliError;
use crate::Suite;

/// One report per checked object, labelled `suite:object`.
pub type Sections = Vec<(String, CheckReport)>;

fn coalgebras(b: &Bundle, out: &mut Sections) {
    for name in b.names_of("coalgebra") {
        out.push((format!("coalgebra:{name}"), check_coalgebra(b.coalgebra(name).expect("listed"))));
    }
}

fn hopfs(b: &Bundle, out: &mut Sections) -> Result<(), CliError> {
    for name in b.names_of("hopf") {
        out.push((format!("hopf:{name}"), check_hopf_algebra(b.hopf(name)?)));
    }
    Ok(())
}

fn actions(b: &Bundle, out: &mut Sections, global: bool, symmetric: bool) -> Result<(), CliError> {
    for name in b.names_of("action") {
        let v = b.action(name)?;
        let report = if global {
            check_module_coalgebra(v.coalgebra, v.hopf, v.action)?
        } else {
            check_partial_module_coalgebra(v.coalgebra, v.hopf, v.action, symmetric)?
        };
        out.push((format!("{}:{name}", if global { "mc" } else { "pmc" }), report));
    }
    Ok(())
}

fn coactions(b: &Bundle, out: &mut Sections, global: bool, symmetric: bool) -> Result<(), CliError> {
    for name in b.names_of("coaction") {
        let v = b.coaction(name)?;
        let report = if global {
            check_comodule_coalgebra(v.coalgebra, v.hopf, v.coaction)?
        } else {
            check_partial_comodule_coalgebra(v.coalgebra, v.hopf, v.coaction, symmetric)?
        };
        out.push((format!("{}:{name}", if global { "cc" } else { "pcc" }), report));
    }
    Ok(())
}

/// Stored dual actions, and the dual of every action.
fn module_algebras(b: &Bundle, out: &mut Sections, symmetric: bool) -> Result<(), CliError> {
    for (name, obj) in &b.objects {
        match obj {
            Object::DualAction { coalgebra, hopf, action } => {
                let alg = dual_algebra(b.coalgebra(coalgebra)?);
                out.push((format!("pma:{name}"), check_partial_module_algebra(&alg, b.hopf(hopf)?, action, symmetric)?));
            }
            Object::Action { .. } => {
                let v = b.action(name)?;
                let dual = dual_action_on_dual(v.coalgebra, v.hopf, v.action)?;
                let report = check_partial_module_algebra(&dual_algebra(v.coalgebra), v.hopf, &dual, symmetric)?;
                out.push((format!("pma:{name}*"), report));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Full verifier on every stored globalization.
fn globalizations(b: &Bundle, out: &mut Sections) -> Result<(), CliError> {
    for name in b.names_of("globalization") {
        let g = b.globalization(name)?;
        let (theta, pi) = (b.linear_map(&g.theta)?, b.linear_map(&g.pi)?);
        match g.mode {
            GlobalizationMode::Pmc => {
                let (p, d) = (b.action(&g.partial)?, b.action(&g.global)?);
                same_hopf(name, p.hopf, d.hopf)?;
                let report = verify_globalization_pmc(p.coalgebra, p.hopf, p.action, d.coalgebra, d.action, theta, pi)?;
                out.push((format!("globalization:{name}"), report));
            }
            GlobalizationMode::Pcc => {
                let (p, d) = (b.coaction(&g.partial)?, b.coaction(&g.global)?);
                same_hopf(name, p.hopf, d.hopf)?;
                let report =
                    verify_globalization_pcc(p.coalgebra, p.hopf, p.coaction, d.coalgebra, d.coaction, theta, pi)?;
                out.push((format!("globalization:{name}"), report));
                out.push((format!("cross-check:{name}"), cross_check_pcc_triple(p.coalgebra, p.hopf, p.coaction, d.coalgebra, d.coaction, theta, pi)?));
            }
        }
    }
    Ok(())
}

fn same_hopf(name: &str, a: &parcoal_core::HopfAlgebra, b: &parcoal_core::HopfAlgebra) -> Result<(), CliError> {
    if a != b {
        return Err(CliError::Input(format!("globalization {name:?}: partial and global structures use different Hopf algebras")));
    }
    Ok(())
}

pub fn run(b: &Bundle, suite: Suite, symmetric: bool) -> Result<Sections, CliError> {
    let mut out = Sections::new();
    match suite {
        Suite::Coalgebra => coalgebras(b, &mut out),
        Suite::Hopf => hopfs(b, &mut out)?,
        Suite::Mc => actions(b, &mut out, true, symmetric)?,
        Suite::Pmc => actions(b, &mut out, false, symmetric)?,
        Suite::Pma => module_algebras(b, &mut out, symmetric)?,
        Suite::Cc => coactions(b, &mut out, true, symmetric)?,
        Suite::Pcc => coactions(b, &mut out, false, symmetric)?,
        Suite::All => {
            coalgebras(b, &mut out);
            hopfs(b, &mut out)?;
            actions(b, &mut out, false, symmetric)?;
            module_algebras(b, &mut out, symmetric)?;
            coactions(b, &mut out, false, symmetric)?;
            globalizations(b, &mut out)?;
        }
    }
    Ok(out)
}
