//! Left (partial) comodule coalgebras `λ: C → H ⊗ C`, the defect map `∇`,
//! and the passage between coactions of `H` and actions of `H*`.
//!
//! Coaction matrices are `(h_dim·c_dim) × c_dim` with the pair index
//! `(h, c) ↦ h·dim C + c` on the codomain. Everything over `H*` uses the
//! dual basis of [`dual_hopf`], which is where the finite-dual `H⁰ = H*`
//! specialisation lives.

use thiserror::Error;

use crate::coalg::{dual_algebra, CoalgError, Coalgebra};
use crate::hopf::{dual_hopf, separates_points, HopfAlgebra};
use crate::multilinear::{LinalgError, LinearMap, Tensor};
use crate::pact::{
    check_partial_module_algebra, check_partial_module_coalgebra, checked_retract, owned, ActionMap,
    DualActionMap, PactError,
};
use crate::report::{CheckReport, Witness};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PcoactError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a partial comodule coalgebra; failing axioms: {0:?}")]
    NotPartialCoaction(Vec<String>),
    #[error("not a comodule coalgebra; failing axioms: {0:?}")]
    NotComoduleCoalgebra(Vec<String>),
    #[error("coaction projection condition fails at {:?}: {} vs {}", .0.index, .0.lhs, .0.rhs)]
    CoactionProjectionConditionFailed(Witness),
    #[error("idempotent conditions violated: {}", .0.iter().map(|v| v.condition.as_str()).collect::<Vec<_>>().join(", "))]
    ConditionsViolated(Vec<Violation>),
    #[error("the dual of H does not separate points")]
    DoesNotSeparatePoints,
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Pact(#[from] PactError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: String,
    pub lhs: String,
    pub rhs: String,
}

/// A linear map `C → H ⊗ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoactionMap {
    pub h_dim: usize,
    pub c_dim: usize,
    pub map: LinearMap,
}

impl CoactionMap {
    pub fn new(h_dim: usize, c_dim: usize, map: LinearMap) -> Result<Self, PcoactError> {
        if map.codomain_dim() != h_dim * c_dim || map.domain_dim() != c_dim {
            return Err(PcoactError::Shape(format!(
                "coaction matrix is {}x{}, expected {}x{c_dim}",
                map.codomain_dim(),
                map.domain_dim(),
                h_dim * c_dim
            )));
        }
        Ok(CoactionMap { h_dim, c_dim, map })
    }

    pub fn field(&self) -> FieldSpec {
        self.map.field()
    }

    fn fits(&self, c: &Coalgebra, h: &HopfAlgebra) -> Result<(), PcoactError> {
        if (self.h_dim, self.c_dim) != (h.dim(), c.dim()) {
            return Err(PcoactError::Shape(format!(
                "coaction is for dims ({}, {}), structures have ({}, {})",
                self.h_dim,
                self.c_dim,
                h.dim(),
                c.dim()
            )));
        }
        if c.field() != h.field() || self.field() != c.field() {
            return Err(PcoactError::Shape("structures over different fields".into()));
        }
        Ok(())
    }
}

/// `∇ = (I ⊗ ε_C) λ′: C → H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NablaMap {
    pub map: LinearMap,
}

pub fn nabla(co: &CoactionMap, c: &Coalgebra) -> Result<NablaMap, PcoactError> {
    if co.c_dim != c.dim() {
        return Err(PcoactError::Shape("coaction and coalgebra dimensions differ".into()));
    }
    let (n, nc) = (co.h_dim, co.c_dim);
    let map = LinearMap::from_tensor_fn(c.field(), &[nc], n, |t| {
        t.apply(0, 1, &co.map, &[n, nc]).apply(1, 1, &c.epsilon, &[])
    });
    Ok(NablaMap { map })
}

struct Setup<'a> {
    f: FieldSpec,
    c: usize,
    n: usize,
    coalg: &'a Coalgebra,
    h: &'a HopfAlgebra,
    lambda: &'a LinearMap,
}

impl<'a> Setup<'a> {
    fn new(coalg: &'a Coalgebra, h: &'a HopfAlgebra, co: &'a CoactionMap) -> Result<Self, PcoactError> {
        co.fits(coalg, h)?;
        Ok(Setup { f: coalg.field(), c: coalg.dim(), n: h.dim(), coalg, h, lambda: &co.map })
    }

    fn basis(&self, idx: &[usize]) -> Tensor {
        Tensor::basis(self.f, &[self.c], idx)
    }

    fn coact(&self, t: &Tensor, pos: usize) -> Tensor {
        t.apply(pos, 1, self.lambda, &[self.n, self.c])
    }

    fn delta(&self, t: &Tensor, pos: usize) -> Tensor {
        t.apply(pos, 1, &self.coalg.delta, &[self.c, self.c])
    }

    /// `(ε_H ⊗ I) λ = id`.
    fn counit_axiom(&self, report: &mut CheckReport, name: &str) {
        report.check_identity(name, &[self.c], |idx| {
            let t = self.basis(idx);
            (self.coact(&t, 0).apply(0, 1, self.h.epsilon(), &[]), t)
        });
    }

    /// `(I ⊗ Δ) λ = (m ⊗ I ⊗ I)(I ⊗ τ ⊗ I)(λ ⊗ λ) Δ`.
    fn comultiplicativity(&self, report: &mut CheckReport, name: &str) {
        report.check_identity(name, &[self.c], |idx| {
            let t = self.basis(idx);
            let lhs = self.delta(&self.coact(&t, 0), 1);
            let rhs = self.coact(&self.coact(&self.delta(&t, 0), 0), 2).swap(1).apply(0, 2, self.h.mul(), &[self.n]);
            (lhs, rhs)
        });
    }

    fn iterated(&self, t: &Tensor) -> Tensor {
        self.coact(&self.coact(t, 0), 1)
    }
}

/// CC-1 `(ε ⊗ I)λ = id`, CC-2 comultiplicativity, CC-3 `(I ⊗ λ)λ = (Δ ⊗ I)λ`.
pub fn check_comodule_coalgebra(d: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CheckReport, PcoactError> {
    let s = Setup::new(d, h, co)?;
    let mut report = CheckReport::new();
    s.counit_axiom(&mut report, "CC-1");
    s.comultiplicativity(&mut report, "CC-2");
    report.check_identity("CC-3", &[s.c], |idx| {
        let t = s.basis(idx);
        (s.iterated(&t), s.coact(&t, 0).apply(0, 1, h.delta(), &[s.n, s.n]))
    });
    Ok(report)
}

/// `(I ⊗ ε_D) λ(d) = ε_D(d) 1_H`.
pub fn check_counit_coaction(d: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CheckReport, PcoactError> {
    let s = Setup::new(d, h, co)?;
    let mut report = CheckReport::new();
    report.check_identity("counit-coaction", &[s.c], |idx| {
        let t = s.basis(idx);
        (
            s.coact(&t, 0).apply(1, 1, &d.epsilon, &[]),
            t.apply(0, 1, &d.epsilon, &[]).apply(0, 0, h.unit(), &[s.n]),
        )
    });
    Ok(report)
}

/// PCC-1..3, plus PCC-4 when `symmetric`.
pub fn check_partial_comodule_coalgebra(
    c: &Coalgebra,
    h: &HopfAlgebra,
    co: &CoactionMap,
    symmetric: bool,
) -> Result<CheckReport, PcoactError> {
    let s = Setup::new(c, h, co)?;
    let nab = nabla(co, c)?.map;
    let (nc, n, m, dh) = (s.c, s.n, h.mul(), h.delta());
    let mut report = CheckReport::new();
    s.counit_axiom(&mut report, "PCC-1");
    s.comultiplicativity(&mut report, "PCC-2");
    // (I ⊗ λ′)λ′(c) = ∇(c₁)c₂^{-1}₁ ⊗ c₂^{-1}₂ ⊗ c₂^{-0}
    report.check_identity("PCC-3", &[nc], |idx| {
        let t = s.basis(idx);
        let rhs = s
            .coact(&s.delta(&t, 0).apply(0, 1, &nab, &[n]), 1)
            .apply(1, 1, dh, &[n, n])
            .apply(0, 2, m, &[n]);
        (s.iterated(&t), rhs)
    });
    if symmetric {
        // (I ⊗ λ′)λ′(c) = c₁^{-1}₁∇(c₂) ⊗ c₁^{-1}₂ ⊗ c₁^{-0}
        report.check_identity("PCC-4", &[nc], |idx| {
            let t = s.basis(idx);
            let rhs = s
                .coact(&s.delta(&t, 0), 0)
                .apply(0, 1, dh, &[n, n])
                .apply(3, 1, &nab, &[n])
                .swap(2)
                .swap(1)
                .apply(0, 2, m, &[n]);
            (s.iterated(&t), rhs)
        });
    }
    Ok(report)
}

/// `λ′(c) = ∇(c₁)λ′(c₂) = c₁^{-1}∇(c₂) ⊗ c₁^{-0}` and `∇(c₁)∇(c₂) = ∇(c)`.
pub fn check_nabla_identities(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CheckReport, PcoactError> {
    let s = Setup::new(c, h, co)?;
    let nab = nabla(co, c)?.map;
    let (n, m) = (s.n, h.mul());
    let mut report = CheckReport::new();
    report.check_identity("nabla-left", &[s.c], |idx| {
        let t = s.basis(idx);
        let rhs = s.coact(&s.delta(&t, 0).apply(0, 1, &nab, &[n]), 1).apply(0, 2, m, &[n]);
        (s.coact(&t, 0), rhs)
    });
    report.check_identity("nabla-right", &[s.c], |idx| {
        let t = s.basis(idx);
        let rhs = s.coact(&s.delta(&t, 0), 0).apply(2, 1, &nab, &[n]).swap(1).apply(0, 2, m, &[n]);
        (s.coact(&t, 0), rhs)
    });
    report.check_identity("nabla-idempotent", &[s.c], |idx| {
        let t = s.basis(idx);
        let lhs = s.delta(&t, 0).apply(0, 1, &nab, &[n]).apply(1, 1, &nab, &[n]).apply(0, 2, m, &[n]);
        (lhs, t.apply(0, 1, &nab, &[n]))
    });
    Ok(report)
}

/// Outcome of a coaction globality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoactionGlobality {
    pub global: bool,
    pub witness: Option<Witness>,
}

/// Decides globality via `∇ = u ∘ ε` and confirms it against the CC check.
pub fn is_global_coaction(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CoactionGlobality, PcoactError> {
    let partial = check_partial_comodule_coalgebra(c, h, co, false)?;
    if !partial.passed() {
        return Err(PcoactError::NotPartialCoaction(owned(partial.failed_axioms())));
    }
    let nab = nabla(co, c)?.map;
    let target = h.unit().compose(&c.epsilon)?;
    let mut criterion = CheckReport::new();
    criterion.check_each("nabla-trivial", &[c.dim()], |idx| {
        let (lhs, rhs) = (nab.column(idx[0]), target.column(idx[0]));
        (lhs != rhs).then(|| (fmt_vec(&lhs), fmt_vec(&rhs)))
    });
    let entry = &criterion.entries[0];
    let direct = check_comodule_coalgebra(c, h, co)?.passed();
    if direct != entry.pass {
        return Err(PcoactError::InvariantViolated(format!(
            "nabla criterion says global={}, CC check says {direct}",
            entry.pass
        )));
    }
    Ok(CoactionGlobality { global: entry.pass, witness: entry.witness.clone() })
}

fn fmt_vec(v: &[Scalar]) -> String {
    format!("[{}]", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
}

/// `λ′(1) = h ⊗ 1` on the ground field, provided `ε(h) = 1` and
/// `h ⊗ h = (h ⊗ 1)Δ(h)`.
pub fn idempotent_coaction_on_ground_field(h: &HopfAlgebra, x: &[Scalar]) -> Result<CoactionMap, PcoactError> {
    let (f, n) = (h.field(), h.dim());
    if x.len() != n {
        return Err(PcoactError::Shape(format!("element has {} coordinates, H has dimension {n}", x.len())));
    }
    let mut violations = Vec::new();
    let eps = h.epsilon().apply(x);
    if !eps[0].is_one() {
        violations.push(Violation {
            condition: "counit".into(),
            lhs: eps[0].to_string(),
            rhs: f.one().to_string(),
        });
    }
    let hx = Tensor::from_dense(f, &[n], x);
    let mut xx = Tensor::zero(f, &[n, n]);
    for (i, a) in hx.entries() {
        for (j, b) in hx.entries() {
            xx = xx.add(&Tensor::basis(f, &[n, n], &[i, j]).scale(&(a * b)));
        }
    }
    let dx = hx.apply(0, 1, h.delta(), &[n, n]);
    let mut rhs = Tensor::zero(f, &[n, n]);
    for (i, a) in hx.entries() {
        let left = Tensor::basis(f, &[n], &[i]).scale(a);
        let mut prod = Tensor::zero(f, &[n, n, n]);
        for (j, b) in dx.entries() {
            let mut idx = vec![0];
            idx.extend([j / n, j % n]);
            for (l, c) in left.entries() {
                idx[0] = l;
                prod = prod.add(&Tensor::basis(f, &[n, n, n], &idx).scale(&(b * c)));
            }
        }
        rhs = rhs.add(&prod.apply(0, 2, h.mul(), &[n]));
    }
    if xx != rhs {
        violations.push(Violation { condition: "idempotent".into(), lhs: xx.to_string(), rhs: rhs.to_string() });
    }
    if !violations.is_empty() {
        return Err(PcoactError::ConditionsViolated(violations));
    }
    let map = LinearMap::from_fn(f, n, 1, |r, _| x[r].clone());
    CoactionMap::new(n, 1, map)
}

/// The action of `H*` on `C` with `c ⇀ f = f(c^{-1}) c^{-0}`, together with `H*`.
pub fn coaction_to_action(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<(HopfAlgebra, ActionMap), PcoactError> {
    co.fits(c, h)?;
    if !separates_points(h) {
        return Err(PcoactError::DoesNotSeparatePoints);
    }
    let hstar = dual_hopf(h);
    let action = contract_coaction(co);
    if check_partial_comodule_coalgebra(c, h, co, false)?.passed() {
        let pmc = check_partial_module_coalgebra(c, &hstar, &action, false)?;
        if !pmc.passed() {
            return Err(PcoactError::InvariantViolated(format!(
                "induced action over the dual fails {:?}",
                pmc.failed_axioms()
            )));
        }
    }
    Ok((hstar, action))
}

/// `act[k, (j, i)] = λ[(i, k), j]`.
pub(crate) fn contract_coaction(co: &CoactionMap) -> ActionMap {
    let (n, nc) = (co.h_dim, co.c_dim);
    let map = LinearMap::from_fn(co.field(), nc, nc * n, |k, col| co.map.get((col % n) * nc + k, col / n).clone());
    ActionMap { c_dim: nc, h_dim: n, map }
}

/// The action of `H*` on `C*` with `(f ⇁ α)(c) = f(c^{-1}) α(c^{-0})`.
pub fn coaction_to_dual_action(
    c: &Coalgebra,
    h: &HopfAlgebra,
    co: &CoactionMap,
) -> Result<(HopfAlgebra, DualActionMap), PcoactError> {
    co.fits(c, h)?;
    let hstar = dual_hopf(h);
    let (n, nc) = (co.h_dim, co.c_dim);
    // map[b, (i, a)] = λ[(i, a), b]
    let map = LinearMap::from_fn(co.field(), nc, n * nc, |b, col| co.map.get(col, b).clone());
    let dual = DualActionMap { hopf_dim: n, dual_dim: nc, map };
    if check_partial_comodule_coalgebra(c, h, co, false)?.passed() {
        let pma = check_partial_module_algebra(&dual_algebra(c), &hstar, &dual, false)?;
        if !pma.passed() {
            return Err(PcoactError::InvariantViolated(format!(
                "induced action on the dual fails {:?}",
                pma.failed_axioms()
            )));
        }
    }
    Ok((hstar, dual))
}

/// `λ′(c) = Σᵢ hᵢ ⊗ c ⇀ hᵢ*` from an action of `H*`.
pub fn action_to_coaction(c: &Coalgebra, hstar_action: &ActionMap, h: &HopfAlgebra) -> Result<CoactionMap, PcoactError> {
    let (n, nc) = (h.dim(), c.dim());
    if (hstar_action.c_dim, hstar_action.h_dim) != (nc, n) {
        return Err(PcoactError::Shape("action dimensions do not match C and H".into()));
    }
    // λ[(i, k), j] = act[k, (j, i)]
    let map = LinearMap::from_fn(h.field(), n * nc, nc, |row, j| hstar_action.map.get(row % nc, j * n + row / nc).clone());
    let co = CoactionMap { h_dim: n, c_dim: nc, map };
    if contract_coaction(&co) != *hstar_action {
        return Err(PcoactError::InvariantViolated("dual-basis reconstruction is not inverse to contraction".into()));
    }
    Ok(co)
}

/// Builds `λ′`, `⇀` over `H*`, `⇁` on `C*` over `H*` and `ρ′` on `C*`, runs
/// the partial checkers and verifies the four compatibility formulas.
pub fn check_four_way_equivalence(c: &Coalgebra, h: &HopfAlgebra, co: &CoactionMap) -> Result<CheckReport, PcoactError> {
    co.fits(c, h)?;
    let (n, nc) = (h.dim(), c.dim());
    let hstar = dual_hopf(h);
    let act = contract_coaction(co);
    let (_, dual) = coaction_to_dual_action(c, h, co)?;
    // ρ′: C* → C* ⊗ H, ρ′[(b, i), a] = (hᵢ* ⇁ e_a*)(e_b)
    let rho = LinearMap::from_fn(h.field(), nc * n, nc, |row, a| dual.map.get(row / n, (row % n) * nc + a).clone());

    let mut report = CheckReport::new();
    report.extend_prefixed("coaction", check_partial_comodule_coalgebra(c, h, co, false)?);
    report.extend_prefixed("action", check_partial_module_coalgebra(c, &hstar, &act, false)?);
    report.extend_prefixed("dual-action", check_partial_module_algebra(&dual_algebra(c), &hstar, &dual, false)?);

    let mismatch = |x: &Scalar, y: &Scalar| (x != y).then(|| (x.to_string(), y.to_string()));
    // α(c^{-0}) c^{-1} = α^{+0}(c) α^{+1}
    report.check_each("compat-coaction-dual-coaction", &[n, nc, nc], |idx| {
        let (i, a, j) = (idx[0], idx[1], idx[2]);
        mismatch(co.map.get(i * nc + a, j), rho.get(j * n + i, a))
    });
    // (f ⇁ α)(c) = α(c ⇀ f)
    report.check_each("compat-dual-action-action", &[n, nc, nc], |idx| {
        let (i, a, j) = (idx[0], idx[1], idx[2]);
        mismatch(dual.map.get(j, i * nc + a), act.map.get(a, j * n + i))
    });
    // c ⇀ f = f(c^{-1}) c^{-0}
    report.check_each("compat-action-coaction", &[n, nc, nc], |idx| {
        let (i, k, j) = (idx[0], idx[1], idx[2]);
        mismatch(act.map.get(k, j * n + i), co.map.get(i * nc + k, j))
    });
    // f ⇁ α = α^{+0} f(α^{+1})
    report.check_each("compat-dual-action-dual-coaction", &[n, nc, nc], |idx| {
        let (i, a, b) = (idx[0], idx[1], idx[2]);
        mismatch(dual.map.get(b, i * nc + a), rho.get(b * n + i, a))
    });
    Ok(report)
}

/// The dual-basis coaction `λ(f) = Σᵢ hᵢ ⊗ f ∗ hᵢ*` of `H` on `H*`:
/// `λ[(i, f′), f] = Δ_H[(f, i), f′]`.
pub fn dual_basis_coaction(h: &HopfAlgebra) -> CoactionMap {
    let n = h.dim();
    let d = h.delta();
    let map = LinearMap::from_fn(h.field(), n * n, n, |row, f| d.get(f * n + row / n, row % n).clone());
    CoactionMap { h_dim: n, c_dim: n, map }
}

/// Checks `π(d)^{-1} ⊗ π(π(d)^{-0}) = d₂^{-1} ⊗ ε(π(d₁)) π(d₂^{-0})` for
/// the idempotent `π: D → D`.
pub(crate) fn coaction_projection_condition(
    report: &mut CheckReport,
    name: &str,
    d: &Coalgebra,
    h: &HopfAlgebra,
    lambda: &LinearMap,
    pi: &LinearMap,
) {
    let (f, nd, n) = (d.field(), d.dim(), h.dim());
    report.check_identity(name, &[nd], |idx| {
        let t = Tensor::basis(f, &[nd], idx);
        let lhs = t.apply(0, 1, pi, &[nd]).apply(0, 1, lambda, &[n, nd]).apply(1, 1, pi, &[nd]);
        let rhs = t
            .apply(0, 1, &d.delta, &[nd, nd])
            .apply(0, 1, pi, &[nd])
            .apply(0, 1, &d.epsilon, &[])
            .apply(0, 1, lambda, &[n, nd])
            .apply(1, 1, pi, &[nd]);
        (lhs, rhs)
    });
}

/// A partial coaction induced on a retract of a comodule coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCoaction {
    pub coalgebra: Coalgebra,
    pub coaction: CoactionMap,
}

/// `λ′ = (I ⊗ proj) λ incl`, after verifying the hypotheses that make it a
/// partial comodule coalgebra.
pub fn induce_partial_coaction(
    d: &Coalgebra,
    h: &HopfAlgebra,
    co_global: &CoactionMap,
    incl: &LinearMap,
    proj: &LinearMap,
) -> Result<InducedCoaction, PcoactError> {
    let cc = check_comodule_coalgebra(d, h, co_global)?;
    if !cc.passed() {
        return Err(PcoactError::NotComoduleCoalgebra(owned(cc.failed_axioms())));
    }
    let c = checked_retract(d, incl, proj)?;
    let pi = incl.compose(proj)?;
    let mut condition = CheckReport::new();
    coaction_projection_condition(&mut condition, "projection-condition", d, h, &co_global.map, &pi);
    if let Some(w) = condition.entries[0].witness.clone() {
        return Err(PcoactError::CoactionProjectionConditionFailed(w));
    }
    let n = h.dim();
    let lifted = LinearMap::identity(d.field(), n).kron(proj);
    let map = lifted.compose(&co_global.map)?.compose(incl)?;
    let coaction = CoactionMap::new(n, c.dim(), map)?;
    let report = check_partial_comodule_coalgebra(&c, h, &coaction, false)?;
    if !report.passed() {
        return Err(PcoactError::InvariantViolated(format!(
            "induced coaction fails {:?}",
            report.failed_axioms()
        )));
    }
    Ok(InducedCoaction { coalgebra: c, coaction })
}
