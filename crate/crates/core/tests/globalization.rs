use parcoal_core::examples::{
    group_algebra, pcc_catalog, pmc_catalog, subgroup_partial_action_on_k, subgroup_partial_coaction_on_k,
    trivial_coaction, GroupTable,
};
use parcoal_core::glob::{
    adjoint_psi_check, dual_globalization, induced_from_globalization, rationality_consistency_check,
    standard_globalization_pcc, standard_globalization_pmc, verify_globalization_pcc, verify_globalization_pmc,
    GlobError, GlobalizationPmc,
};
use parcoal_core::multilinear::left_inverse_on_image;
use parcoal_core::{Coalgebra, FieldSpec, LinearMap, VectorSpace};

const Q: FieldSpec = FieldSpec::Rationals;

fn ints(rows: &[&[i64]]) -> LinearMap {
    let cols = rows[0].len();
    LinearMap::from_fn(Q, rows.len(), cols, |i, j| Q.from_i64(rows[i][j]))
}

/// `k^n` with `n` group-like basis vectors.
fn grouplike(n: usize) -> Coalgebra {
    let delta = LinearMap::from_fn(Q, n * n, n, |r, c| if r == c * n + c { Q.one() } else { Q.zero() });
    Coalgebra::new(VectorSpace::new(n), delta, LinearMap::from_fn(Q, 1, n, |_, _| Q.one())).unwrap()
}

#[test]
fn trivial_subgroup_of_z2_by_hand() {
    let g = GroupTable::cyclic(2).unwrap();
    let h = group_algebra(&g, Q).unwrap();
    let k = Coalgebra::ground(Q);
    let act = subgroup_partial_action_on_k(&g, &[0], Q).unwrap();
    let glob = standard_globalization_pmc(&k, &h, &act).unwrap();
    assert_eq!(glob.theta, ints(&[&[1], &[0]]));
    assert_eq!(glob.pi, ints(&[&[1, 0], &[0, 0]]));
    // 1 ⊗ g has counit 1 and is group-like in C ⊗ kZ2
    assert_eq!(glob.d.epsilon, ints(&[&[1, 1]]));
    assert!(glob.report.passed());

    let dual = dual_globalization(&k, &h, &act, &glob).unwrap();
    assert!(dual.report.passed(), "{}", dual.report);
    assert_eq!(dual.phi.unwrap(), ints(&[&[1], &[0]]));
    assert_eq!(dual.b.unwrap().dim(), 2);

    let adj = adjoint_psi_check(&k, &h, &act, &glob).unwrap();
    assert!(adj.report.passed());
    assert_eq!(adj.psi, LinearMap::identity(Q, 2));
    assert_eq!(adj.big_phi, ints(&[&[1], &[0]]));
}

#[test]
fn every_pmc_catalog_instance_globalizes_and_dualizes() {
    for inst in pmc_catalog(Q).unwrap() {
        let (c, h, act) = (&inst.coalgebra, &inst.hopf, &inst.action);
        let glob = standard_globalization_pmc(c, h, act).unwrap();
        assert_eq!(glob.d.dim(), c.dim() * h.dim());
        assert_eq!(glob.report.total_failures(), 0, "{}: {}", inst.name, glob.report);
        let dual = dual_globalization(c, h, act, &glob).unwrap();
        assert!(dual.report.passed(), "{}: {}", inst.name, dual.report);
        let adj = adjoint_psi_check(c, h, act, &glob).unwrap();
        assert!(adj.report.passed(), "{}: {}", inst.name, adj.report);
    }
}

#[test]
fn induced_action_recovers_the_partial_action() {
    for inst in pmc_catalog(Q).unwrap() {
        let glob = standard_globalization_pmc(&inst.coalgebra, &inst.hopf, &inst.action).unwrap();
        let induced = induced_from_globalization(&inst.hopf, &glob).unwrap();
        // θ⁻¹ ∘ π ∘ act_D ∘ (θ ⊗ id)
        let proj = left_inverse_on_image(&glob.theta).unwrap().compose(&glob.pi).unwrap();
        let oracle = proj
            .compose(&glob.action.map)
            .unwrap()
            .compose(&glob.theta.kron(&LinearMap::identity(Q, inst.hopf.dim())))
            .unwrap();
        assert_eq!(induced.map, oracle, "{}", inst.name);
        assert_eq!(induced, inst.action, "{}", inst.name);
    }
}

#[test]
fn non_partial_input_is_rejected() {
    let g = GroupTable::s3();
    let h = group_algebra(&g, Q).unwrap();
    let act = subgroup_partial_action_on_k(&g, &g.subset("e,(12),(13)").unwrap(), Q).unwrap();
    assert_eq!(
        standard_globalization_pmc(&Coalgebra::ground(Q), &h, &act),
        Err(GlobError::NotPartialModuleCoalgebra(vec!["PMC-3".into()]))
    );
}

#[test]
fn spurious_summand_breaks_generation_on_both_sides() {
    let g = GroupTable::cyclic(2).unwrap();
    let h = group_algebra(&g, Q).unwrap();
    let k = Coalgebra::ground(Q);
    let d = grouplike(3);
    let theta = ints(&[&[1], &[0], &[0]]);

    // D = kZ2 ⊕ k, the extra group-like fixed by H.
    let act = subgroup_partial_action_on_k(&g, &[0, 1], Q).unwrap();
    let ag = LinearMap::from_fn(Q, 3, 6, |r, col| {
        let (dd, hh) = (col / 2, col % 2);
        let image = if dd < 2 { (dd + hh) % 2 } else { 2 };
        if r == image { Q.one() } else { Q.zero() }
    });
    let action = parcoal_core::ActionMap::new(3, 2, ag).unwrap();
    let pi = ints(&[&[1, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let report = verify_globalization_pmc(&k, &h, &act, &d, &action, &theta, &pi).unwrap();
    assert_eq!(report.failed_axioms(), vec!["GMC-3"]);
    let glob = GlobalizationPmc { d: d.clone(), action, theta: theta.clone(), pi, report };
    let dual = dual_globalization(&k, &h, &act, &glob).unwrap();
    assert_eq!(dual.report.failed_axioms(), vec!["GMA-3-annihilator"]);

    // D = k ⊕ k ⊕ k with trivial coaction everywhere.
    let co = trivial_coaction(&k, &h);
    let co_global = trivial_coaction(&d, &h);
    let pi = ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    let report = verify_globalization_pcc(&k, &h, &co, &d, &co_global, &theta, &pi).unwrap();
    assert_eq!(report.failed_axioms(), vec!["GCC-3"]);
}

#[test]
fn identity_triple_on_global_coaction() {
    let h = group_algebra(&GroupTable::cyclic(3).unwrap(), Q).unwrap();
    let c = h.coalg();
    let co = trivial_coaction(c, &h);
    let id = LinearMap::identity(Q, 3);
    assert!(verify_globalization_pcc(c, &h, &co, c, &co, &id, &id).unwrap().passed());
}

#[test]
fn averaging_coaction_globalization_by_hand() {
    let g = GroupTable::cyclic(2).unwrap();
    let h = group_algebra(&g, Q).unwrap();
    let co = subgroup_partial_coaction_on_k(&g, &[0, 1], Q).unwrap();
    let glob = standard_globalization_pcc(&Coalgebra::ground(Q), &h, &co).unwrap();
    assert_eq!(glob.d.dim(), 2);
    let half = Q.fraction(1, 2).unwrap();
    // θ(1) = 1 ⊗ (e* + g*) and π(1 ⊗ f) = f(x) θ(1) with x = (e + g)/2
    assert_eq!(glob.theta, ints(&[&[1], &[1]]));
    for j in 0..2 {
        assert_eq!(glob.pi.column(j), vec![half.clone(), half.clone()]);
    }
    assert!(glob.passed());
}

#[test]
fn every_pcc_catalog_instance_globalizes() {
    for inst in pcc_catalog(Q).unwrap() {
        let (c, h, co) = (&inst.coalgebra, &inst.hopf, &inst.coaction);
        let glob = standard_globalization_pcc(c, h, co).unwrap();
        assert_eq!(glob.d.dim(), c.dim() * h.dim());
        assert!(glob.report.passed(), "{}: {}", inst.name, glob.report);
        assert!(glob.rationality.passed(), "{}: {}", inst.name, glob.rationality);
        assert!(glob.cross_check.passed(), "{}: {}", inst.name, glob.cross_check);
    }
}

#[test]
fn rationality_witness_is_the_first_bad_triple() {
    let g = GroupTable::cyclic(4).unwrap();
    let h = group_algebra(&g, Q).unwrap();
    let k = Coalgebra::ground(Q);
    let co = subgroup_partial_coaction_on_k(&g, &g.subset("e,g^2").unwrap(), Q).unwrap();
    let glob = standard_globalization_pcc(&k, &h, &co).unwrap();
    assert_eq!(glob.d.dim(), 4);
    let mut bad = glob.coaction.clone();
    // λ(1 ⊗ f₂) picks up a stray h₃ ⊗ (1 ⊗ f₀)
    let row = 3 * 4;
    let v = bad.map.get(row, 2) + &Q.one();
    bad.map.set(row, 2, v);
    let report = rationality_consistency_check(&k, &h, &bad).unwrap();
    let w = report.entries[0].witness.clone().unwrap();
    assert_eq!(w.index, vec![0, 2, 3]);
}
