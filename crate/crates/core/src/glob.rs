//! Globalizations of partial module coalgebras and partial comodule
//! coalgebras: the standard constructions `C ⊗ H` and `C ⊗ H*`, their
//! verifiers, and the dual picture on `C*`, `D*` and `Hom(H, C*)`.
//!
//! Verifiers re-check every structural precondition (coalgebra axioms on
//! `D`, `θ` an injective coalgebra map, `π` a comultiplicative projection
//! onto `θ(C)`), so triples read from files get the same scrutiny as
//! constructed ones.

use thiserror::Error;

use crate::coalg::{
    check_algebra, check_coalgebra, check_comultiplicative, check_multiplicative, dual_algebra, tensor_coalgebra,
    Algebra, CoalgError, Coalgebra,
};
use crate::hopf::{dual_hopf, HopfAlgebra};
use crate::multilinear::{left_inverse_on_image, span_closure, LinalgError, LinearMap, Subspace, Tensor};
use crate::pact::{
    check_module_algebra, check_module_coalgebra, check_partial_module_coalgebra, owned, projection_condition,
    transpose_action, ActionMap, DualActionMap, PactError,
};
use crate::pcoact::{
    check_comodule_coalgebra, check_partial_comodule_coalgebra, coaction_projection_condition, coaction_to_action,
    contract_coaction, dual_basis_coaction, CoactionMap, PcoactError,
};
use crate::report::CheckReport;
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlobError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a partial module coalgebra; failing axioms: {0:?}")]
    NotPartialModuleCoalgebra(Vec<String>),
    #[error("not a partial comodule coalgebra; failing axioms: {0:?}")]
    NotPartialComoduleCoalgebra(Vec<String>),
    #[error("globalization is not in standard form: {0}")]
    NotStandardForm(String),
    #[error(transparent)]
    Pact(#[from] PactError),
    #[error(transparent)]
    Pcoact(#[from] PcoactError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(D, θ, π)` with the global action on `D` and the verifier's report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizationPmc {
    pub d: Coalgebra,
    pub action: ActionMap,
    pub theta: LinearMap,
    pub pi: LinearMap,
    pub report: CheckReport,
}

/// `(D, θ, π)` with the global coaction on `D = C ⊗ H*`, plus the action of
/// `H*` on `C` it is built from and the auxiliary reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizationPcc {
    pub hstar: HopfAlgebra,
    pub induced_action: ActionMap,
    pub d: Coalgebra,
    pub coaction: CoactionMap,
    pub theta: LinearMap,
    pub pi: LinearMap,
    pub report: CheckReport,
    pub rationality: CheckReport,
    pub cross_check: CheckReport,
}

impl GlobalizationPcc {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.rationality.passed() && self.cross_check.passed()
    }
}

/// The dual side of a PMC globalization: `φ = (θ⁻¹ ∘ π)*: C* → D*` and the
/// subalgebra `B` of `D*` generated by `φ(C*)` under the action of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGlobalization {
    pub phi: Option<LinearMap>,
    pub b: Option<Subspace>,
    pub report: CheckReport,
}

/// The adjoint isomorphism `Ψ: (C ⊗ H)* → Hom(H, C*)` and `Φ: C* → Hom(H, C*)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointCheck {
    pub psi: LinearMap,
    pub big_phi: LinearMap,
    pub report: CheckReport,
}

fn expect_shape(what: &str, map: &LinearMap, rows: usize, cols: usize) -> Result<(), GlobError> {
    if (map.codomain_dim(), map.domain_dim()) != (rows, cols) {
        return Err(GlobError::Shape(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            map.codomain_dim(),
            map.domain_dim()
        )));
    }
    Ok(())
}

fn fmt_vec(v: &[Scalar]) -> String {
    format!("[{}]", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
}

/// Column-by-column equality of two maps, witnessing the first differing column.
fn record_map_eq(report: &mut CheckReport, name: &str, lhs: &LinearMap, rhs: &LinearMap) {
    report.check_each(name, &[lhs.domain_dim()], |idx| {
        let (a, b) = (lhs.column(idx[0]), rhs.column(idx[0]));
        (a != b).then(|| (fmt_vec(&a), fmt_vec(&b)))
    });
}

fn record_rank(report: &mut CheckReport, name: &str, rank: usize, expected: usize) {
    report.check_each(name, &[], |_| (rank != expected).then(|| (format!("rank {rank}"), format!("rank {expected}"))));
}

fn record_dim(report: &mut CheckReport, name: &str, span: &Subspace, expected: usize) {
    report.check_each(name, &[], |_| {
        (span.dim() != expected).then(|| (format!("span of dimension {}", span.dim()), format!("dimension {expected}")))
    });
}

/// Structural preconditions on `(D, θ, π)` shared by both kinds of globalization.
fn triple_preconditions(
    report: &mut CheckReport,
    c: &Coalgebra,
    d: &Coalgebra,
    theta: &LinearMap,
    pi: &LinearMap,
) -> Result<(), GlobError> {
    let (nc, nd) = (c.dim(), d.dim());
    expect_shape("theta", theta, nd, nc)?;
    expect_shape("pi", pi, nd, nd)?;
    if c.field() != d.field() || theta.field() != c.field() || pi.field() != c.field() {
        return Err(GlobError::Shape("structures over different fields".into()));
    }
    report.extend_prefixed("D", check_coalgebra(d));
    report.extend_prefixed("theta", check_comultiplicative(theta, c, d, true)?);
    record_rank(report, "theta-injective", theta.rank(), nc);
    report.extend_prefixed("pi", check_comultiplicative(pi, d, d, false)?);
    record_map_eq(report, "pi-idempotent", &pi.compose(pi)?, pi);
    record_map_eq(report, "pi-fixes-theta", &pi.compose(theta)?, theta);
    record_rank(report, "pi-image", pi.rank(), theta.rank());
    Ok(())
}

/// `e_k ⊗ v` flattened over `H ⊗ V`.
fn left_basis_tensor(field: FieldSpec, k: usize, n: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n * v.len()];
    out[k * v.len()..(k + 1) * v.len()].clone_from_slice(v);
    out
}

/// `v ⊗ e_k` flattened over `V ⊗ H`.
fn right_basis_tensor(field: FieldSpec, v: &[Scalar], k: usize, n: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n * v.len()];
    for (i, x) in v.iter().enumerate() {
        out[i * n + k] = x.clone();
    }
    out
}

/// GMC-1..3 together with all structural preconditions.
pub fn verify_globalization_pmc(
    c: &Coalgebra,
    h: &HopfAlgebra,
    act: &ActionMap,
    d: &Coalgebra,
    act_global: &ActionMap,
    theta: &LinearMap,
    pi: &LinearMap,
) -> Result<CheckReport, GlobError> {
    let (f, nc, nd, n) = (c.field(), c.dim(), d.dim(), h.dim());
    let mut report = CheckReport::new();
    triple_preconditions(&mut report, c, d, theta, pi)?;
    report.extend_prefixed("global", check_module_coalgebra(d, h, act_global)?);
    if (act.c_dim, act.h_dim) != (nc, n) {
        return Err(GlobError::Shape("partial action does not match C and H".into()));
    }
    let ag = &act_global.map;
    projection_condition(&mut report, "GMC-1", d, h, ag, pi);
    // θ(c ⇀ h) = π(θ(c) ⇀ h)
    report.check_identity("GMC-2", &[nc, n], |idx| {
        let t = Tensor::basis(f, &[nc, n], idx);
        (
            t.apply(0, 2, &act.map, &[nc]).apply(0, 1, theta, &[nd]),
            t.apply(0, 1, theta, &[nd]).apply(0, 2, ag, &[nd]).apply(0, 1, pi, &[nd]),
        )
    });
    let seed: Vec<Vec<Scalar>> = (0..nc).map(|j| theta.column(j)).collect();
    let generated = span_closure(f, nd, &seed, |v| (0..n).map(|k| ag.apply(&right_basis_tensor(f, v, k, n))).collect());
    record_dim(&mut report, "GMC-3", &generated, nd);
    Ok(report)
}

/// The standard globalization `D = C ⊗ H`, `(c ⊗ h) ⇀ k = c ⊗ hk`,
/// `θ(c) = c ⊗ 1`, `π(c ⊗ h) = (c ⇀ h) ⊗ 1`, with its verification report.
pub fn standard_globalization_pmc(c: &Coalgebra, h: &HopfAlgebra, act: &ActionMap) -> Result<GlobalizationPmc, GlobError> {
    let partial = check_partial_module_coalgebra(c, h, act, false)?;
    if !partial.passed() {
        return Err(GlobError::NotPartialModuleCoalgebra(owned(partial.failed_axioms())));
    }
    let (f, nc, n) = (c.field(), c.dim(), h.dim());
    let d = tensor_coalgebra(c, h.coalg())?;
    let id_c = LinearMap::identity(f, nc);
    let action = ActionMap::new(nc * n, n, id_c.kron(h.mul()))?;
    let theta = id_c.kron(h.unit());
    let pi = theta.compose(&act.map)?;
    let report = verify_globalization_pmc(c, h, act, &d, &action, &theta, &pi)?;
    Ok(GlobalizationPmc { d, action, theta, pi, report })
}

/// Builds `φ = (θ⁻¹ ∘ π)*` and `B`, and checks the dual conditions: the
/// dual of every structural precondition, `φ` an injective multiplicative
/// map, `B` a subalgebra, GMA-1..3, and the dual form of GMC-3.
pub fn dual_globalization(
    c: &Coalgebra,
    h: &HopfAlgebra,
    act: &ActionMap,
    g: &GlobalizationPmc,
) -> Result<DualGlobalization, GlobError> {
    let (f, nc, nd, n) = (c.field(), c.dim(), g.d.dim(), h.dim());
    expect_shape("theta", &g.theta, nd, nc)?;
    expect_shape("pi", &g.pi, nd, nd)?;
    if (g.action.c_dim, g.action.h_dim) != (nd, n) || (act.c_dim, act.h_dim) != (nc, n) {
        return Err(GlobError::Shape("actions do not match C, D and H".into()));
    }
    let c_star = dual_algebra(c);
    let d_star = dual_algebra(&g.d);
    let on_d_star = transpose_action(&g.action);
    let on_c_star = transpose_action(act);
    let theta_star = g.theta.transpose();
    let pi_star = g.pi.transpose();
    let mut report = CheckReport::new();

    report.extend_prefixed("D*", check_algebra(&d_star));
    report.extend_prefixed("global*", check_module_algebra(&d_star, h, &on_d_star)?);
    report.extend_prefixed("theta*", check_multiplicative(&theta_star, &d_star, &c_star, true)?);
    record_rank(&mut report, "theta*-surjective", theta_star.rank(), nc);
    report.extend_prefixed("pi*", check_multiplicative(&pi_star, &d_star, &d_star, false)?);
    record_map_eq(&mut report, "pi*-idempotent", &pi_star.compose(&pi_star)?, &pi_star);
    record_map_eq(&mut report, "theta*-pi*", &theta_star.compose(&pi_star)?, &theta_star);
    record_rank(&mut report, "pi*-image", pi_star.rank(), theta_star.rank());

    // ξ ↦ [h ↦ θ*(h ⇁ ξ)] is injective exactly when no nonzero functional
    // kills θ(C) ⇀ H.
    let annihilator_test = LinearMap::from_fn(f, n * nc, nd, |row, xi| {
        let (k, cc) = (row / nc, row % nc);
        let mut acc = f.zero();
        for dp in 0..nd {
            let t = g.theta.get(dp, cc);
            if !t.is_zero() {
                acc.add_mul_assign(t, g.action.map.get(xi, dp * n + k));
            }
        }
        acc
    });
    record_rank(&mut report, "GMA-3-annihilator", annihilator_test.rank(), nd);

    let theta_inv = match left_inverse_on_image(&g.theta) {
        Ok(inv) => inv,
        Err(_) => {
            report.record("phi-defined", false, None);
            return Ok(DualGlobalization { phi: None, b: None, report });
        }
    };
    let phi = theta_inv.compose(&g.pi)?.transpose();
    report.extend_prefixed("phi", check_multiplicative(&phi, &c_star, &d_star, false)?);
    record_rank(&mut report, "phi-injective", phi.rank(), nc);

    let act_d_star = |k: usize, v: &[Scalar]| on_d_star.map.apply(&left_basis_tensor(f, k, n, v));
    let phi_cols: Vec<Vec<Scalar>> = (0..nc).map(|a| phi.column(a)).collect();
    let b = span_closure(f, nd, &phi_cols, |v| (0..n).map(|k| act_d_star(k, v)).collect());
    let image = Subspace::spanned_by(f, nd, phi_cols.iter().map(Vec::as_slice));
    let b_basis = b.basis().to_vec();

    report.check_each("B-subalgebra", &[b_basis.len(), b_basis.len()], |idx| {
        let p = d_star.multiply(&b_basis[idx[0]], &b_basis[idx[1]]);
        (!b.contains(&p)).then(|| (fmt_vec(&p), "an element of B".to_string()))
    });
    report.check_each("GMA-1", &[nc, b_basis.len()], |idx| {
        let p = d_star.multiply(&phi_cols[idx[0]], &b_basis[idx[1]]);
        (!image.contains(&p)).then(|| (fmt_vec(&p), "an element of phi(C*)".to_string()))
    });
    let phi_one = phi.apply(&c.epsilon.transpose().column(0));
    report.check_each("GMA-2", &[n, nc], |idx| {
        let (k, a) = (idx[0], idx[1]);
        let lhs = phi.apply(&on_c_star.map.column(k * nc + a));
        let rhs = d_star.multiply(&phi_one, &act_d_star(k, &phi_cols[a]));
        (lhs != rhs).then(|| (fmt_vec(&lhs), fmt_vec(&rhs)))
    });
    let one_step = Subspace::spanned_by(
        f,
        nd,
        (0..n).flat_map(|k| phi_cols.iter().map(move |v| (k, v))).map(|(k, v)| act_d_star(k, v)).collect::<Vec<_>>().iter().map(Vec::as_slice),
    );
    report.check_each("GMA-3", &[], |_| {
        (one_step != b).then(|| (format!("H-span of dimension {}", one_step.dim()), format!("B of dimension {}", b.dim())))
    });
    Ok(DualGlobalization { phi: Some(phi), b: Some(b), report })
}

/// `Hom(H, C*)` with convolution product and unit `h ↦ ε(h)ε_C`; the basis
/// element `(h, c)` sends `h` to `e_c*`.
fn hom_algebra(c: &Coalgebra, h: &HopfAlgebra) -> Algebra {
    let (f, nc, n) = (c.field(), c.dim(), h.dim());
    let dim = n * nc;
    let mul = LinearMap::from_fn(f, dim, dim * dim, |row, col| {
        let (hh, cc) = (row / nc, row % nc);
        let (left, right) = (col / dim, col % dim);
        let (h1, c1, h2, c2) = (left / nc, left % nc, right / nc, right % nc);
        h.delta().get(h1 * n + h2, hh) * c.delta.get(c1 * nc + c2, cc)
    });
    let unit = LinearMap::from_fn(f, dim, 1, |row, _| h.epsilon().get(0, row / nc) * c.epsilon.get(0, row % nc));
    Algebra { space: crate::multilinear::VectorSpace::new(dim), mul, unit }
}

/// Checks that `Ψ` is an isomorphism of algebras and of `H`-modules onto
/// `Hom(H, C*)`, and that `Ψ ∘ φ = Φ` with `Φ(α)(h) = h ⇀ α`.
pub fn adjoint_psi_check(
    c: &Coalgebra,
    h: &HopfAlgebra,
    act: &ActionMap,
    g: &GlobalizationPmc,
) -> Result<AdjointCheck, GlobError> {
    let (f, nc, n) = (c.field(), c.dim(), h.dim());
    let standard = tensor_coalgebra(c, h.coalg())?;
    if g.d.delta != standard.delta || g.d.epsilon != standard.epsilon {
        return Err(GlobError::NotStandardForm("D is not the tensor coalgebra C ⊗ H".into()));
    }
    if g.action.map != LinearMap::identity(f, nc).kron(h.mul()) {
        return Err(GlobError::NotStandardForm("the action on D is not right multiplication on H".into()));
    }
    let nd = nc * n;
    let d_star = dual_algebra(&g.d);
    let hom = hom_algebra(c, h);
    let psi = LinearMap::flip(f, nc, n);
    let mut report = CheckReport::new();
    report.extend_prefixed("psi", check_multiplicative(&psi, &d_star, &hom, true)?);
    record_rank(&mut report, "psi-bijective", psi.rank(), nd);

    // (h ⇁ F)(k) = F(kh): basis (k₀, c) goes to Σ_k m[k₀, (k, h)] (k, c).
    let hom_action = LinearMap::from_fn(f, nd, n * nd, |row, col| {
        let (k, cc) = (row / nc, row % nc);
        let (hh, src) = (col / nd, col % nd);
        let (k0, c0) = (src / nc, src % nc);
        if cc == c0 {
            h.mul().get(k0, k * n + hh).clone()
        } else {
            f.zero()
        }
    });
    let on_d_star = transpose_action(&g.action);
    report.check_each("psi-module-map", &[n, nd], |idx| {
        let (k, xi) = (idx[0], idx[1]);
        let mut e = vec![f.zero(); nd];
        e[xi] = f.one();
        let lhs = psi.apply(&on_d_star.map.apply(&left_basis_tensor(f, k, n, &e)));
        let rhs = hom_action.apply(&left_basis_tensor(f, k, n, &psi.apply(&e)));
        (lhs != rhs).then(|| (fmt_vec(&lhs), fmt_vec(&rhs)))
    });

    // Φ[(h, c), a] = (h ⇀ e_a*)(e_c) = e_a*(e_c ⇀ h)
    let big_phi = LinearMap::from_fn(f, nd, nc, |row, a| act.map.get(a, (row % nc) * n + row / nc).clone());
    let theta_inv = left_inverse_on_image(&g.theta)?;
    let phi = theta_inv.compose(&g.pi)?.transpose();
    record_map_eq(&mut report, "psi-phi", &psi.compose(&phi)?, &big_phi);
    Ok(AdjointCheck { psi, big_phi, report })
}

/// GCC-1..3 together with all structural preconditions.
pub fn verify_globalization_pcc(
    c: &Coalgebra,
    h: &HopfAlgebra,
    co: &CoactionMap,
    d: &Coalgebra,
    co_global: &CoactionMap,
    theta: &LinearMap,
    pi: &LinearMap,
) -> Result<CheckReport, GlobError> {
    let (f, nc, nd, n) = (c.field(), c.dim(), d.dim(), h.dim());
    let mut report = CheckReport::new();
    triple_preconditions(&mut report, c, d, theta, pi)?;
    report.extend_prefixed("global", check_comodule_coalgebra(d, h, co_global)?);
    if (co.h_dim, co.c_dim) != (n, nc) {
        return Err(GlobError::Shape("partial coaction does not match C and H".into()));
    }
    let lg = &co_global.map;
    coaction_projection_condition(&mut report, "GCC-1", d, h, lg, pi);
    // θ(c)^{-1} ⊗ π(θ(c)^{-0}) = c^{-1} ⊗ θ(c^{-0})
    report.check_identity("GCC-2", &[nc], |idx| {
        let t = Tensor::basis(f, &[nc], idx);
        (
            t.apply(0, 1, theta, &[nd]).apply(0, 1, lg, &[n, nd]).apply(1, 1, pi, &[nd]),
            t.apply(0, 1, &co.map, &[n, nc]).apply(1, 1, theta, &[nd]),
        )
    });
    let seed: Vec<Vec<Scalar>> = (0..nc).map(|j| theta.column(j)).collect();
    let generated = span_closure(f, nd, &seed, |v| {
        let coact = lg.apply(v);
        let delta = d.delta.apply(v);
        let mut out = Vec::with_capacity(n + 2 * nd);
        for i in 0..n {
            out.push(coact[i * nd..(i + 1) * nd].to_vec());
        }
        for j in 0..nd {
            out.push((0..nd).map(|a| delta[a * nd + j].clone()).collect());
            out.push(delta[j * nd..(j + 1) * nd].to_vec());
        }
        out
    });
    record_dim(&mut report, "GCC-3", &generated, nd);
    Ok(report)
}

/// For a coaction on `D = C ⊗ H*`: `λ(c ⊗ f) = Σ hᵢ ⊗ dᵢ` must agree with
/// the right `H*`-multiplication via `c ⊗ (f ∗ g) = Σ g(hᵢ) dᵢ`.
pub fn rationality_consistency_check(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CheckReport, GlobError> {
    let (nc, n) = (c.dim(), h.dim());
    let nd = nc * n;
    if (co.h_dim, co.c_dim) != (n, nd) {
        return Err(GlobError::Shape("coaction is not on C ⊗ H*".into()));
    }
    let f = c.field();
    let mut report = CheckReport::new();
    report.check_each("rationality", &[nc, n, n], |idx| {
        let (ci, fi, gi) = (idx[0], idx[1], idx[2]);
        let d = ci * n + fi;
        let lhs: Vec<Scalar> = (0..nd)
            .map(|row| if row / n == ci { h.delta().get(fi * n + gi, row % n).clone() } else { f.zero() })
            .collect();
        let rhs: Vec<Scalar> = (0..nd).map(|row| co.map.get(gi * nd + row, d).clone()).collect();
        (lhs != rhs).then(|| (fmt_vec(&lhs), fmt_vec(&rhs)))
    });
    Ok(report)
}

/// Converts both coactions to actions of `H*` and runs the PMC verifier on
/// the same triple.
pub fn cross_check_pcc_to_pmc(
    c: &Coalgebra,
    h: &HopfAlgebra,
    co: &CoactionMap,
    g: &GlobalizationPcc,
) -> Result<CheckReport, GlobError> {
    cross_check_pcc_triple(c, h, co, &g.d, &g.coaction, &g.theta, &g.pi)
}

/// [`cross_check_pcc_to_pmc`] on a triple given by its parts.
pub fn cross_check_pcc_triple(
    c: &Coalgebra,
    h: &HopfAlgebra,
    co: &CoactionMap,
    d: &Coalgebra,
    co_global: &CoactionMap,
    theta: &LinearMap,
    pi: &LinearMap,
) -> Result<CheckReport, GlobError> {
    if (co.h_dim, co.c_dim) != (h.dim(), c.dim()) || (co_global.h_dim, co_global.c_dim) != (h.dim(), d.dim()) {
        return Err(GlobError::Shape("coactions do not match C, D and H".into()));
    }
    let hstar = dual_hopf(h);
    let act = contract_coaction(co);
    let act_global = contract_coaction(co_global);
    verify_globalization_pmc(c, &hstar, &act, d, &act_global, theta, pi)
}

/// The standard globalization `D = C ⊗ H*` with the dual-basis coaction
/// `λ(c ⊗ f) = Σᵢ hᵢ ⊗ c ⊗ f ∗ hᵢ*`, `θ(c) = c ⊗ ε_H`,
/// `π(c ⊗ f) = (c ⇀ f) ⊗ ε_H`.
pub fn standard_globalization_pcc(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<GlobalizationPcc, GlobError> {
    let partial = check_partial_comodule_coalgebra(c, h, co, false)?;
    if !partial.passed() {
        return Err(GlobError::NotPartialComoduleCoalgebra(owned(partial.failed_axioms())));
    }
    let (f, nc, n) = (c.field(), c.dim(), h.dim());
    let (hstar, induced_action) = coaction_to_action(c, h, co)?;
    let d = tensor_coalgebra(c, hstar.coalg())?;
    let id_c = LinearMap::identity(f, nc);
    let on_hstar = dual_basis_coaction(h).map;
    let map = LinearMap::flip(f, nc, n).kron(&LinearMap::identity(f, n)).compose(&id_c.kron(&on_hstar))?;
    let coaction = CoactionMap::new(n, nc * n, map)?;
    let theta = id_c.kron(&h.epsilon().transpose());
    let pi = theta.compose(&induced_action.map)?;
    let report = verify_globalization_pcc(c, h, co, &d, &coaction, &theta, &pi)?;
    let rationality = rationality_consistency_check(c, h, &coaction)?;
    let mut g = GlobalizationPcc {
        hstar,
        induced_action,
        d,
        coaction,
        theta,
        pi,
        report,
        rationality,
        cross_check: CheckReport::new(),
    };
    g.cross_check = cross_check_pcc_to_pmc(c, h, co, &g)?;
    Ok(g)
}

/// Re-derives the partial action from a verified globalization through
/// `incl = θ`, `proj = θ⁻¹ ∘ π`.
pub fn induced_from_globalization(h: &HopfAlgebra, g: &GlobalizationPmc) -> Result<ActionMap, GlobError> {
    let proj = left_inverse_on_image(&g.theta)?.compose(&g.pi)?;
    Ok(crate::pact::induce_partial_action(&g.d, h, &g.action, &g.theta, &proj)?.action)
}

/// The dual action of `H` on `C*` from a PMC, with the same index layout as
/// [`crate::pact::dual_action_on_dual`].
pub fn dual_of_partial_action(act: &ActionMap) -> DualActionMap {
    transpose_action(act)
}
