//! Right (partial) module coalgebras `C ⊗ H → C` and left (partial) module
//! algebras `H ⊗ A → A`.
//!
//! Action matrices use the pair index `(c, h) ↦ c·dim H + h` on the domain;
//! dual actions use `(h, a) ↦ h·dim A + a`.

use thiserror::Error;

use crate::coalg::{check_comultiplicative, retract_coalgebra, Algebra, CoalgError, Coalgebra};
use crate::hopf::HopfAlgebra;
use crate::multilinear::{LinalgError, LinearMap, Tensor};
use crate::report::{CheckReport, Witness};
use crate::scalars::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PactError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a module coalgebra; failing axioms: {0:?}")]
    NotModuleCoalgebra(Vec<String>),
    #[error("not a partial module coalgebra; failing axioms: {0:?}")]
    NotPartialAction(Vec<String>),
    #[error("projection condition fails at {:?}: {} vs {}", .0.index, .0.lhs, .0.rhs)]
    ProjectionConditionFailed(Witness),
    #[error("{0} is not comultiplicative")]
    NotComultiplicative(String),
    #[error("projection does not restrict to the identity on the subcoalgebra")]
    NotAProjection,
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A linear map `C ⊗ H → C`, stored as a `c_dim × (c_dim·h_dim)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMap {
    pub c_dim: usize,
    pub h_dim: usize,
    pub map: LinearMap,
}

impl ActionMap {
    pub fn new(c_dim: usize, h_dim: usize, map: LinearMap) -> Result<Self, PactError> {
        if map.codomain_dim() != c_dim || map.domain_dim() != c_dim * h_dim {
            return Err(PactError::Shape(format!(
                "action matrix is {}x{}, expected {c_dim}x{}",
                map.codomain_dim(),
                map.domain_dim(),
                c_dim * h_dim
            )));
        }
        Ok(ActionMap { c_dim, h_dim, map })
    }

    pub fn field(&self) -> FieldSpec {
        self.map.field()
    }

    fn fits(&self, c: usize, h: usize) -> Result<(), PactError> {
        if (self.c_dim, self.h_dim) != (c, h) {
            return Err(PactError::Shape(format!(
                "action is for dims ({}, {}), structures have ({c}, {h})",
                self.c_dim, self.h_dim
            )));
        }
        Ok(())
    }
}

/// A linear map `H ⊗ A → A`, stored as a `dual_dim × (hopf_dim·dual_dim)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualActionMap {
    pub hopf_dim: usize,
    pub dual_dim: usize,
    pub map: LinearMap,
}

impl DualActionMap {
    pub fn new(hopf_dim: usize, dual_dim: usize, map: LinearMap) -> Result<Self, PactError> {
        if map.codomain_dim() != dual_dim || map.domain_dim() != hopf_dim * dual_dim {
            return Err(PactError::Shape(format!(
                "dual action matrix is {}x{}, expected {dual_dim}x{}",
                map.codomain_dim(),
                map.domain_dim(),
                hopf_dim * dual_dim
            )));
        }
        Ok(DualActionMap { hopf_dim, dual_dim, map })
    }

    fn fits(&self, h: usize, a: usize) -> Result<(), PactError> {
        if (self.hopf_dim, self.dual_dim) != (h, a) {
            return Err(PactError::Shape(format!(
                "dual action is for dims ({}, {}), structures have ({h}, {a})",
                self.hopf_dim, self.dual_dim
            )));
        }
        Ok(())
    }
}

fn same_field(fields: &[FieldSpec]) -> Result<(), PactError> {
    if fields.windows(2).any(|w| w[0] != w[1]) {
        return Err(PactError::Shape("structures over different fields".into()));
    }
    Ok(())
}

/// The shared setting of every action checker.
struct Setup<'a> {
    f: FieldSpec,
    c: usize,
    n: usize,
    coalg: &'a Coalgebra,
    h: &'a HopfAlgebra,
    act: &'a LinearMap,
}

impl<'a> Setup<'a> {
    fn new(coalg: &'a Coalgebra, h: &'a HopfAlgebra, act: &'a ActionMap) -> Result<Self, PactError> {
        act.fits(coalg.dim(), h.dim())?;
        same_field(&[coalg.field(), h.field(), act.field()])?;
        Ok(Setup { f: coalg.field(), c: coalg.dim(), n: h.dim(), coalg, h, act: &act.map })
    }

    fn basis(&self, dims: &[usize], idx: &[usize]) -> Tensor {
        Tensor::basis(self.f, dims, idx)
    }

    /// `c ⇀ 1 = c`.
    fn unit_axiom(&self, report: &mut CheckReport, name: &str) {
        let (c, n) = (self.c, self.n);
        report.check_identity(name, &[c], |idx| {
            let t = self.basis(&[c], idx);
            (t.apply(1, 0, self.h.unit(), &[n]).apply(0, 2, self.act, &[c]), t)
        });
    }

    /// `Δ(c ⇀ h) = c₁ ⇀ h₁ ⊗ c₂ ⇀ h₂`.
    fn comultiplicativity(&self, report: &mut CheckReport, name: &str) {
        let (c, n, dc, dh, a) = (self.c, self.n, &self.coalg.delta, self.h.delta(), self.act);
        report.check_identity(name, &[c, n], |idx| {
            let t = self.basis(&[c, n], idx);
            (
                t.apply(0, 2, a, &[c]).apply(0, 1, dc, &[c, c]),
                t.apply(0, 1, dc, &[c, c])
                    .apply(2, 1, dh, &[n, n])
                    .swap(1)
                    .apply(0, 2, a, &[c])
                    .apply(1, 2, a, &[c]),
            )
        });
    }

    /// `(c ⇀ h) ⇀ g` on the basis tensor `c ⊗ h ⊗ g`.
    fn iterated(&self, t: &Tensor) -> Tensor {
        t.apply(0, 2, self.act, &[self.c]).apply(0, 2, self.act, &[self.c])
    }

    /// `c₁ ⊗ c₂ ⊗ h₁ ⊗ h₂ ⊗ g` from `c ⊗ h ⊗ g`.
    fn split(&self, t: &Tensor) -> Tensor {
        let (c, n) = (self.c, self.n);
        t.apply(0, 1, &self.coalg.delta, &[c, c]).apply(2, 1, self.h.delta(), &[n, n])
    }

    /// `c₁ ⊗ h₁ ⊗ g ⊗ c₂ ⊗ h₂` from `c₁ ⊗ c₂ ⊗ h₁ ⊗ h₂ ⊗ g`.
    fn regroup_mirrored(t: &Tensor) -> Tensor {
        t.swap(1).swap(3).swap(2)
    }
}

/// MC-1 `d ⇀ 1 = d`, MC-2 `Δ(d ⇀ h) = d₁ ⇀ h₁ ⊗ d₂ ⇀ h₂`,
/// MC-3 `(d ⇀ h) ⇀ g = d ⇀ hg`.
pub fn check_module_coalgebra(d: &Coalgebra, h: &HopfAlgebra, act: &ActionMap) -> Result<CheckReport, PactError> {
    let s = Setup::new(d, h, act)?;
    let mut report = CheckReport::new();
    s.unit_axiom(&mut report, "MC-1");
    s.comultiplicativity(&mut report, "MC-2");
    let (c, n) = (s.c, s.n);
    report.check_identity("MC-3", &[c, n, n], |idx| {
        let t = s.basis(&[c, n, n], idx);
        (s.iterated(&t), t.apply(1, 2, h.mul(), &[n]).apply(0, 2, s.act, &[c]))
    });
    Ok(report)
}

/// `ε(d ⇀ h) = ε(d) ε(h)`.
pub fn check_counit_compat(d: &Coalgebra, h: &HopfAlgebra, act: &ActionMap) -> Result<CheckReport, PactError> {
    let s = Setup::new(d, h, act)?;
    let (c, n) = (s.c, s.n);
    let mut report = CheckReport::new();
    report.check_identity("counit-compat", &[c, n], |idx| {
        let t = s.basis(&[c, n], idx);
        (
            t.apply(0, 2, s.act, &[c]).apply(0, 1, &d.epsilon, &[]),
            t.apply(0, 1, &d.epsilon, &[]).apply(0, 1, h.epsilon(), &[]),
        )
    });
    Ok(report)
}

/// PMC-1..3, plus PMC-4 when `symmetric`.
pub fn check_partial_module_coalgebra(
    coalg: &Coalgebra,
    h: &HopfAlgebra,
    act: &ActionMap,
    symmetric: bool,
) -> Result<CheckReport, PactError> {
    let s = Setup::new(coalg, h, act)?;
    let (c, n, a, m, eps) = (s.c, s.n, s.act, h.mul(), &coalg.epsilon);
    let mut report = CheckReport::new();
    s.unit_axiom(&mut report, "PMC-1");
    s.comultiplicativity(&mut report, "PMC-2");
    // (c ⇀ h) ⇀ g = ε(c₁ ⇀ h₁)(c₂ ⇀ h₂g)
    report.check_identity("PMC-3", &[c, n, n], |idx| {
        let t = s.basis(&[c, n, n], idx);
        let rhs = s
            .split(&t)
            .swap(1)
            .apply(3, 2, m, &[n])
            .apply(2, 2, a, &[c])
            .apply(0, 2, a, &[c])
            .apply(0, 1, eps, &[]);
        (s.iterated(&t), rhs)
    });
    if symmetric {
        // (c ⇀ h) ⇀ g = (c₁ ⇀ h₁g) ε(c₂ ⇀ h₂)
        report.check_identity("PMC-4", &[c, n, n], |idx| {
            let t = s.basis(&[c, n, n], idx);
            let rhs = Setup::regroup_mirrored(&s.split(&t))
                .apply(1, 2, m, &[n])
                .apply(2, 2, a, &[c])
                .apply(2, 1, eps, &[])
                .apply(0, 2, a, &[c]);
            (s.iterated(&t), rhs)
        });
    }
    Ok(report)
}

/// PMC′-1 and PMC′-2 (plus PMC′-3 when `symmetric`); only uses `Δ`, never `ε_C`.
pub fn check_pmc_noncounital(
    coalg: &Coalgebra,
    h: &HopfAlgebra,
    act: &ActionMap,
    symmetric: bool,
) -> Result<CheckReport, PactError> {
    let s = Setup::new(coalg, h, act)?;
    let (c, n, a, m, dc) = (s.c, s.n, s.act, h.mul(), &coalg.delta);
    let mut report = CheckReport::new();
    s.unit_axiom(&mut report, "PMC'-1");
    // (c ⇀ h)₁ ⊗ ((c ⇀ h)₂ ⇀ k) = (c₁ ⇀ h₁) ⊗ (c₂ ⇀ h₂k)
    report.check_identity("PMC'-2", &[c, n, n], |idx| {
        let t = s.basis(&[c, n, n], idx);
        let lhs = t.apply(0, 2, a, &[c]).apply(0, 1, dc, &[c, c]).apply(1, 2, a, &[c]);
        let rhs = s.split(&t).swap(1).apply(3, 2, m, &[n]).apply(2, 2, a, &[c]).apply(0, 2, a, &[c]);
        (lhs, rhs)
    });
    if symmetric {
        // ((c ⇀ h)₁ ⇀ k) ⊗ (c ⇀ h)₂ = (c₁ ⇀ h₁k) ⊗ (c₂ ⇀ h₂)
        report.check_identity("PMC'-3", &[c, n, n], |idx| {
            let t = s.basis(&[c, n, n], idx);
            let lhs = t.apply(0, 2, a, &[c]).apply(0, 1, dc, &[c, c]).swap(1).apply(0, 2, a, &[c]);
            let rhs = Setup::regroup_mirrored(&s.split(&t))
                .apply(1, 2, m, &[n])
                .apply(2, 2, a, &[c])
                .apply(0, 2, a, &[c]);
            (lhs, rhs)
        });
    }
    Ok(report)
}

/// Outcome of a globality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Globality {
    pub global: bool,
    pub witness: Option<Witness>,
}

/// Decides whether a partial action is global via `ε(c ⇀ h) = ε(c)ε(h)`,
/// and confirms the verdict against a direct MC check.
pub fn is_global_action(c: &Coalgebra, h: &HopfAlgebra, act: &ActionMap) -> Result<Globality, PactError> {
    let partial = check_partial_module_coalgebra(c, h, act, false)?;
    if !partial.passed() {
        return Err(PactError::NotPartialAction(owned(partial.failed_axioms())));
    }
    let criterion = check_counit_compat(c, h, act)?;
    let entry = &criterion.entries[0];
    let direct = check_module_coalgebra(c, h, act)?.passed();
    if direct != entry.pass {
        return Err(PactError::InvariantViolated(format!(
            "counit criterion says global={}, MC check says {direct}",
            entry.pass
        )));
    }
    Ok(Globality { global: entry.pass, witness: entry.witness.clone() })
}

pub(crate) fn owned(names: Vec<&str>) -> Vec<String> {
    names.into_iter().map(str::to_string).collect()
}

/// The retract `C` of `D` described by `incl`/`proj`, after checking that
/// `proj ∘ incl = id`, `incl` is a coalgebra map and `proj` is comultiplicative.
pub(crate) fn checked_retract(d: &Coalgebra, incl: &LinearMap, proj: &LinearMap) -> Result<Coalgebra, PactError> {
    let c = retract_coalgebra(d, incl, proj)?;
    if proj.compose(incl)? != LinearMap::identity(d.field(), c.dim()) {
        return Err(PactError::NotAProjection);
    }
    if !check_comultiplicative(incl, &c, d, true)?.passed() {
        return Err(PactError::NotComultiplicative("the inclusion".into()));
    }
    if !check_comultiplicative(proj, d, &c, false)?.passed() {
        return Err(PactError::NotComultiplicative("the projection".into()));
    }
    Ok(c)
}

/// Checks `π[π(d) ⇀ h] = π[ε(π(d₁)) d₂ ⇀ h]` for the idempotent `π: D → D`.
pub(crate) fn projection_condition(
    report: &mut CheckReport,
    name: &str,
    d: &Coalgebra,
    h: &HopfAlgebra,
    act: &LinearMap,
    pi: &LinearMap,
) {
    let (f, nd, n) = (d.field(), d.dim(), h.dim());
    report.check_identity(name, &[nd, n], |idx| {
        let t = Tensor::basis(f, &[nd, n], idx);
        let lhs = t.apply(0, 1, pi, &[nd]).apply(0, 2, act, &[nd]).apply(0, 1, pi, &[nd]);
        let rhs = t
            .apply(0, 1, &d.delta, &[nd, nd])
            .apply(0, 1, pi, &[nd])
            .apply(0, 1, &d.epsilon, &[])
            .apply(0, 2, act, &[nd])
            .apply(0, 1, pi, &[nd]);
        (lhs, rhs)
    });
}

/// A partial action induced on a retract of a module coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedAction {
    pub coalgebra: Coalgebra,
    pub action: ActionMap,
}

/// `c ⇀ h = proj(incl(c) ⇀ h)`, after verifying every hypothesis that makes
/// the result a partial module coalgebra.
pub fn induce_partial_action(
    d: &Coalgebra,
    h: &HopfAlgebra,
    act_global: &ActionMap,
    incl: &LinearMap,
    proj: &LinearMap,
) -> Result<InducedAction, PactError> {
    let mc = check_module_coalgebra(d, h, act_global)?;
    if !mc.passed() {
        return Err(PactError::NotModuleCoalgebra(owned(mc.failed_axioms())));
    }
    let c = checked_retract(d, incl, proj)?;
    let pi = incl.compose(proj)?;
    let mut condition = CheckReport::new();
    projection_condition(&mut condition, "projection-condition", d, h, &act_global.map, &pi);
    if let Some(w) = condition.entries[0].witness.clone() {
        return Err(PactError::ProjectionConditionFailed(w));
    }
    let (nc, n) = (c.dim(), h.dim());
    let map = proj.compose(&act_global.map)?.compose(&incl.kron(&LinearMap::identity(d.field(), n)))?;
    let action = ActionMap::new(nc, n, map)?;
    let report = check_partial_module_coalgebra(&c, h, &action, false)?;
    if !report.passed() {
        return Err(PactError::InvariantViolated(format!(
            "induced action fails {:?}",
            report.failed_axioms()
        )));
    }
    Ok(InducedAction { coalgebra: c, action })
}

/// The left action on `C*` with `(h ⇁ α)(c) = α(c ⇀ h)`.
pub fn dual_action_on_dual(c: &Coalgebra, h: &HopfAlgebra, act: &ActionMap) -> Result<DualActionMap, PactError> {
    act.fits(c.dim(), h.dim())?;
    Ok(transpose_action(act))
}

pub(crate) fn transpose_action(act: &ActionMap) -> DualActionMap {
    let (nc, n) = (act.c_dim, act.h_dim);
    let map = LinearMap::from_fn(act.field(), nc, n * nc, |b, col| act.map.get(col % nc, b * n + col / nc).clone());
    DualActionMap { hopf_dim: n, dual_dim: nc, map }
}

/// PMA-1..3, plus PMA-4 when `symmetric`.
pub fn check_partial_module_algebra(
    alg: &Algebra,
    h: &HopfAlgebra,
    act: &DualActionMap,
    symmetric: bool,
) -> Result<CheckReport, PactError> {
    act.fits(h.dim(), alg.dim())?;
    same_field(&[alg.field(), h.field(), act.map.field()])?;
    let (f, a, n) = (alg.field(), alg.dim(), h.dim());
    let (ma, ua, mh, dh, x) = (&alg.mul, &alg.unit, h.mul(), h.delta(), &act.map);
    let mut report = CheckReport::new();
    report.check_identity("PMA-1", &[a], |idx| {
        let t = Tensor::basis(f, &[a], idx);
        (t.apply(0, 0, h.unit(), &[n]).apply(0, 2, x, &[a]), t)
    });
    module_multiplicativity(&mut report, "PMA-2", alg, h, x);
    // h ⇀ (k ⇀ a) = (h₁ ⇀ 1)(h₂k ⇀ a)
    report.check_identity("PMA-3", &[n, n, a], |idx| {
        let t = Tensor::basis(f, &[n, n, a], idx);
        let lhs = t.apply(1, 2, x, &[a]).apply(0, 2, x, &[a]);
        let rhs = t
            .apply(0, 1, dh, &[n, n])
            .apply(1, 0, ua, &[a])
            .apply(0, 2, x, &[a])
            .apply(1, 2, mh, &[n])
            .apply(1, 2, x, &[a])
            .apply(0, 2, ma, &[a]);
        (lhs, rhs)
    });
    if symmetric {
        // h ⇀ (k ⇀ a) = (h₁k ⇀ a)(h₂ ⇀ 1)
        report.check_identity("PMA-4", &[n, n, a], |idx| {
            let t = Tensor::basis(f, &[n, n, a], idx);
            let lhs = t.apply(1, 2, x, &[a]).apply(0, 2, x, &[a]);
            let rhs = t
                .apply(0, 1, dh, &[n, n])
                .swap(1)
                .swap(2)
                .apply(0, 2, mh, &[n])
                .apply(0, 2, x, &[a])
                .apply(2, 0, ua, &[a])
                .apply(1, 2, x, &[a])
                .apply(0, 2, ma, &[a]);
            (lhs, rhs)
        });
    }
    Ok(report)
}

/// `h ⇀ ab = (h₁ ⇀ a)(h₂ ⇀ b)`.
fn module_multiplicativity(report: &mut CheckReport, name: &str, alg: &Algebra, h: &HopfAlgebra, x: &LinearMap) {
    let (f, a, n) = (alg.field(), alg.dim(), h.dim());
    report.check_identity(name, &[n, a, a], |idx| {
        let t = Tensor::basis(f, &[n, a, a], idx);
        (
            t.apply(1, 2, &alg.mul, &[a]).apply(0, 2, x, &[a]),
            t.apply(0, 1, h.delta(), &[n, n])
                .swap(1)
                .apply(0, 2, x, &[a])
                .apply(1, 2, x, &[a])
                .apply(0, 2, &alg.mul, &[a]),
        )
    });
}

/// MA-1 `1 ⇀ a = a`, MA-2 `h ⇀ ab = (h₁ ⇀ a)(h₂ ⇀ b)`, MA-3 `hk ⇀ a = h ⇀ (k ⇀ a)`.
///
/// The unit of `A` is not required to be preserved, so this also covers
/// module algebras that are only used as non-unital ambient algebras.
pub fn check_module_algebra(alg: &Algebra, h: &HopfAlgebra, act: &DualActionMap) -> Result<CheckReport, PactError> {
    act.fits(h.dim(), alg.dim())?;
    same_field(&[alg.field(), h.field(), act.map.field()])?;
    let (f, a, n, x) = (alg.field(), alg.dim(), h.dim(), &act.map);
    let mut report = CheckReport::new();
    report.check_identity("MA-1", &[a], |idx| {
        let t = Tensor::basis(f, &[a], idx);
        (t.apply(0, 0, h.unit(), &[n]).apply(0, 2, x, &[a]), t)
    });
    module_multiplicativity(&mut report, "MA-2", alg, h, x);
    report.check_identity("MA-3", &[n, n, a], |idx| {
        let t = Tensor::basis(f, &[n, n, a], idx);
        (t.apply(0, 2, h.mul(), &[n]).apply(0, 2, x, &[a]), t.apply(1, 2, x, &[a]).apply(0, 2, x, &[a]))
    });
    Ok(report)
}

/// `(h ⇁ α)(c) = α(c ⇀ h)` on all basis triples `(h, α, c)`.
pub fn check_compatibility_pairing(act: &ActionMap, dual: &DualActionMap) -> Result<CheckReport, PactError> {
    dual.fits(act.h_dim, act.c_dim)?;
    let (nc, n) = (act.c_dim, act.h_dim);
    let mut report = CheckReport::new();
    report.check_each("pairing", &[n, nc, nc], |idx| {
        let (h, a, c) = (idx[0], idx[1], idx[2]);
        let lhs = dual.map.get(c, h * nc + a);
        let rhs = act.map.get(a, c * n + h);
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    });
    Ok(report)
}
