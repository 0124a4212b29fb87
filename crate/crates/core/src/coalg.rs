//! Structure-constant coalgebras and algebras.
//!
//! Validity is never enforced at construction; only shapes are. The
//! `check_*` functions evaluate each axiom on basis elements and report
//! witnesses, so deliberately broken structures are first-class values.

use thiserror::Error;

use crate::multilinear::{LinalgError, LinearMap, Tensor, VectorSpace};
use crate::report::CheckReport;
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn expect_shape(what: &str, map: &LinearMap, rows: usize, cols: usize) -> Result<(), CoalgError> {
    if map.codomain_dim() != rows || map.domain_dim() != cols {
        return Err(CoalgError::Shape(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            map.codomain_dim(),
            map.domain_dim()
        )));
    }
    Ok(())
}

fn check_space(space: &VectorSpace) -> Result<(), CoalgError> {
    if space.dim == 0 {
        return Err(CoalgError::Shape("dimension must be positive".into()));
    }
    if let Some(labels) = &space.labels {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(CoalgError::Shape("basis labels must be unique".into()));
        }
    }
    Ok(())
}

/// `(C, Δ, ε)`: `delta` is `n² × n`, `epsilon` is `1 × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: VectorSpace,
    pub delta: LinearMap,
    pub epsilon: LinearMap,
}

impl Coalgebra {
    pub fn new(space: VectorSpace, delta: LinearMap, epsilon: LinearMap) -> Result<Self, CoalgError> {
        check_space(&space)?;
        let n = space.dim;
        expect_shape("delta", &delta, n * n, n)?;
        expect_shape("epsilon", &epsilon, 1, n)?;
        if delta.field() != epsilon.field() {
            return Err(CoalgError::Shape("delta and epsilon over different fields".into()));
        }
        Ok(Coalgebra { space, delta, epsilon })
    }

    /// The one-dimensional coalgebra `𝕜` with `Δ(1) = 1 ⊗ 1`, `ε = id`.
    pub fn ground(field: FieldSpec) -> Self {
        Coalgebra {
            space: VectorSpace::labelled(vec!["1".into()]),
            delta: LinearMap::identity(field, 1),
            epsilon: LinearMap::identity(field, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.delta.field()
    }
}

/// `(A, m, u)`: `mul` is `n × n²`, `unit` is `n × 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub space: VectorSpace,
    pub mul: LinearMap,
    pub unit: LinearMap,
}

impl Algebra {
    pub fn new(space: VectorSpace, mul: LinearMap, unit: LinearMap) -> Result<Self, CoalgError> {
        check_space(&space)?;
        let n = space.dim;
        expect_shape("mul", &mul, n, n * n)?;
        expect_shape("unit", &unit, n, 1)?;
        if mul.field() != unit.field() {
            return Err(CoalgError::Shape("mul and unit over different fields".into()));
        }
        Ok(Algebra { space, mul, unit })
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    /// The unit `1_A` as a coordinate vector.
    pub fn one(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut ab = vec![self.field().zero(); n * n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                ab[i * n + j] = x * y;
            }
        }
        self.mul.apply(&ab)
    }
}

pub fn check_coalgebra(c: &Coalgebra) -> CheckReport {
    let (f, n) = (c.field(), c.dim());
    let mut report = CheckReport::new();
    report.check_identity("coassociativity", &[n], |idx| {
        let d = Tensor::basis(f, &[n], idx).apply(0, 1, &c.delta, &[n, n]);
        (d.apply(0, 1, &c.delta, &[n, n]), d.apply(1, 1, &c.delta, &[n, n]))
    });
    report.check_identity("counit-left", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 1, &c.delta, &[n, n]).apply(0, 1, &c.epsilon, &[]), t)
    });
    report.check_identity("counit-right", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 1, &c.delta, &[n, n]).apply(1, 1, &c.epsilon, &[]), t)
    });
    report
}

pub fn check_algebra(a: &Algebra) -> CheckReport {
    let (f, n) = (a.field(), a.dim());
    let mut report = CheckReport::new();
    report.check_identity("associativity", &[n, n, n], |idx| {
        let t = Tensor::basis(f, &[n, n, n], idx);
        (
            t.apply(0, 2, &a.mul, &[n]).apply(0, 2, &a.mul, &[n]),
            t.apply(1, 2, &a.mul, &[n]).apply(0, 2, &a.mul, &[n]),
        )
    });
    report.check_identity("unit-left", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 0, &a.unit, &[n]).apply(0, 2, &a.mul, &[n]), t)
    });
    report.check_identity("unit-right", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(1, 0, &a.unit, &[n]).apply(0, 2, &a.mul, &[n]), t)
    });
    report
}

fn dual_space(space: &VectorSpace) -> VectorSpace {
    match &space.labels {
        Some(labels) => VectorSpace::labelled(labels.iter().map(|l| format!("{l}*")).collect()),
        None => VectorSpace::new(space.dim),
    }
}

/// The convolution algebra `C*`: product `Δᵀ`, unit `εᵀ`, in the dual basis.
pub fn dual_algebra(c: &Coalgebra) -> Algebra {
    Algebra { space: dual_space(&c.space), mul: c.delta.transpose(), unit: c.epsilon.transpose() }
}

/// The dual coalgebra `A*`: coproduct `mᵀ`, counit `uᵀ` (evaluation at `1_A`).
pub fn dual_coalgebra(a: &Algebra) -> Coalgebra {
    Coalgebra { space: dual_space(&a.space), delta: a.mul.transpose(), epsilon: a.unit.transpose() }
}

/// `C ⊗ D` with `Δ = (I ⊗ τ ⊗ I)(Δ_C ⊗ Δ_D)` and `ε = ε_C ⊗ ε_D`.
pub fn tensor_coalgebra(c: &Coalgebra, d: &Coalgebra) -> Result<Coalgebra, CoalgError> {
    if c.field() != d.field() {
        return Err(CoalgError::Shape("tensor factors over different fields".into()));
    }
    let (n1, n2) = (c.dim(), d.dim());
    let n = n1 * n2;
    let delta = LinearMap::from_tensor_fn(c.field(), &[n1, n2], n * n, |t| {
        t.apply(0, 1, &c.delta, &[n1, n1]).apply(2, 1, &d.delta, &[n2, n2]).swap(1).reshape(&[n * n])
    });
    Ok(Coalgebra { space: c.space.tensor(&d.space), delta, epsilon: c.epsilon.kron(&d.epsilon) })
}

/// Checks `Δ_D ∘ f = (f ⊗ f) ∘ Δ_C`, and with `counit` also `ε_D ∘ f = ε_C`.
pub fn check_comultiplicative(
    f: &LinearMap,
    c: &Coalgebra,
    d: &Coalgebra,
    counit: bool,
) -> Result<CheckReport, CoalgError> {
    let (nc, nd) = (c.dim(), d.dim());
    expect_shape("map", f, nd, nc)?;
    let field = c.field();
    let mut report = CheckReport::new();
    report.check_identity("comultiplicative", &[nc], |idx| {
        let t = Tensor::basis(field, &[nc], idx);
        (
            t.apply(0, 1, f, &[nd]).apply(0, 1, &d.delta, &[nd, nd]),
            t.apply(0, 1, &c.delta, &[nc, nc]).apply(0, 1, f, &[nd]).apply(1, 1, f, &[nd]),
        )
    });
    if counit {
        report.check_identity("counit-preserving", &[nc], |idx| {
            let t = Tensor::basis(field, &[nc], idx);
            (t.apply(0, 1, f, &[nd]).apply(0, 1, &d.epsilon, &[]), t.apply(0, 1, &c.epsilon, &[]))
        });
    }
    Ok(report)
}

/// Checks `f(ab) = f(a)f(b)`, and with `unital` also `f(1) = 1`.
pub fn check_multiplicative(
    f: &LinearMap,
    a: &Algebra,
    b: &Algebra,
    unital: bool,
) -> Result<CheckReport, CoalgError> {
    let (na, nb) = (a.dim(), b.dim());
    expect_shape("map", f, nb, na)?;
    let field = a.field();
    let mut report = CheckReport::new();
    report.check_identity("multiplicative", &[na, na], |idx| {
        let t = Tensor::basis(field, &[na, na], idx);
        (
            t.apply(0, 2, &a.mul, &[na]).apply(0, 1, f, &[nb]),
            t.apply(0, 1, f, &[nb]).apply(1, 1, f, &[nb]).apply(0, 2, &b.mul, &[nb]),
        )
    });
    if unital {
        report.check_identity("unital", &[], |_| {
            let t = Tensor::basis(field, &[], &[]);
            (t.apply(0, 0, &a.unit, &[na]).apply(0, 1, f, &[nb]), t.apply(0, 0, &b.unit, &[nb]))
        });
    }
    Ok(report)
}

/// The coalgebra carried by `C` when `incl: C → D` and `proj: D → C` exhibit
/// it as a retract of `D`: `Δ_C = (proj ⊗ proj) Δ_D incl`, `ε_C = ε_D incl`.
pub fn retract_coalgebra(d: &Coalgebra, incl: &LinearMap, proj: &LinearMap) -> Result<Coalgebra, CoalgError> {
    let nd = d.dim();
    let nc = incl.domain_dim();
    expect_shape("inclusion", incl, nd, nc)?;
    expect_shape("projection", proj, nc, nd)?;
    let delta = LinearMap::from_tensor_fn(d.field(), &[nc], nc * nc, |t| {
        t.apply(0, 1, incl, &[nd])
            .apply(0, 1, &d.delta, &[nd, nd])
            .apply(0, 1, proj, &[nc])
            .apply(1, 1, proj, &[nc])
            .reshape(&[nc * nc])
    });
    let epsilon = d.epsilon.compose(incl)?;
    Coalgebra::new(VectorSpace::new(nc), delta, epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// Group-like coalgebra on `n` basis elements: Δ(g) = g ⊗ g, ε(g) = 1.
    fn group_like(n: usize) -> Coalgebra {
        let f = q();
        let delta = LinearMap::from_fn(f, n * n, n, |r, c| if r == c * n + c { f.one() } else { f.zero() });
        let epsilon = LinearMap::from_fn(f, 1, n, |_, _| f.one());
        Coalgebra::new(VectorSpace::new(n), delta, epsilon).unwrap()
    }

    #[test]
    fn group_like_and_ground_pass() {
        assert!(check_coalgebra(&group_like(2)).passed());
        assert!(check_coalgebra(&Coalgebra::ground(q())).passed());
    }

    #[test]
    fn perturbed_delta_is_detected() {
        // Extra leg g⊗g in Δ(e).
        let mut c = group_like(2);
        c.delta.set(3, 0, q().one());
        let report = check_coalgebra(&c);
        assert!(!report.passed());
        assert!(report.entry("coassociativity").unwrap().witness.is_some()
            || report.entry("counit-left").unwrap().witness.is_some());
    }

    #[test]
    fn dual_of_group_like_is_pointwise() {
        let a = dual_algebra(&group_like(2));
        let f = q();
        let e = vec![f.one(), f.zero()];
        let g = vec![f.zero(), f.one()];
        assert_eq!(a.multiply(&e, &e), e);
        assert_eq!(a.multiply(&e, &g), vec![f.zero(), f.zero()]);
        assert_eq!(a.multiply(&g, &g), g);
        assert!(check_algebra(&a).passed());
    }

    #[test]
    fn double_dual_is_identity() {
        let c = group_like(3);
        let back = dual_coalgebra(&dual_algebra(&c));
        assert_eq!((back.delta, back.epsilon), (c.delta, c.epsilon));
    }

    #[test]
    fn tensor_coalgebra_examples() {
        let c = group_like(2);
        let t = tensor_coalgebra(&c, &c).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(check_coalgebra(&t).passed());
        let k = tensor_coalgebra(&Coalgebra::ground(q()), &c).unwrap();
        assert_eq!((k.delta, k.epsilon), (c.delta.clone(), c.epsilon.clone()));
    }

    #[test]
    fn comultiplicative_checks() {
        let c = group_like(2);
        let id = LinearMap::identity(q(), 2);
        assert!(check_comultiplicative(&id, &c, &c, true).unwrap().passed());
        let zero = LinearMap::zeros(q(), 2, 2);
        let r = check_comultiplicative(&zero, &c, &c, true).unwrap();
        assert_eq!(r.verdict("comultiplicative"), Some(true));
        assert_eq!(r.verdict("counit-preserving"), Some(false));
        let wrong = LinearMap::zeros(q(), 3, 2);
        assert!(check_comultiplicative(&wrong, &c, &c, false).is_err());
    }

    #[test]
    fn shapes_are_validated() {
        let f = q();
        let bad = Coalgebra::new(VectorSpace::new(2), LinearMap::zeros(f, 3, 2), LinearMap::zeros(f, 1, 2));
        assert!(matches!(bad, Err(CoalgError::Shape(_))));
        let dup = VectorSpace::labelled(vec!["a".into(), "a".into()]);
        assert!(Coalgebra::new(dup, LinearMap::zeros(f, 4, 2), LinearMap::zeros(f, 1, 2)).is_err());
    }
}
