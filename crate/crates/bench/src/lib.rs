//! Fixtures shared by the benchmarks.

use parcoal_core::coalg::Coalgebra;
use parcoal_core::examples::{group_algebra, subgroup_partial_action_on_k, subgroup_partial_coaction_on_k, GroupTable};
use parcoal_core::{ActionMap, CoactionMap, FieldSpec, HopfAlgebra};

/// `k` with the partial action of `kG` given by the subgroup `subset` of `g`.
pub fn subgroup_action(g: &GroupTable, subset: &str) -> (Coalgebra, HopfAlgebra, ActionMap) {
    let n = g.subset(subset).expect("known subset");
    let h = group_algebra(g, FieldSpec::Rationals).expect("group algebra");
    let act = subgroup_partial_action_on_k(g, &n, FieldSpec::Rationals).expect("partial action");
    (Coalgebra::ground(FieldSpec::Rationals), h, act)
}

/// `k` with the partial coaction of `kG` given by the subgroup `subset` of `g`.
pub fn subgroup_coaction(g: &GroupTable, subset: &str) -> (Coalgebra, HopfAlgebra, CoactionMap) {
    let n = g.subset(subset).expect("known subset");
    let h = group_algebra(g, FieldSpec::Rationals).expect("group algebra");
    let co = subgroup_partial_coaction_on_k(g, &n, FieldSpec::Rationals).expect("partial coaction");
    (Coalgebra::ground(FieldSpec::Rationals), h, co)
}
