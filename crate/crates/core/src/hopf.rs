//! Bialgebras and Hopf algebras: compatibility checks, convolution, antipode
//! computation by exact linear solving, and the dual Hopf algebra `H*`.

use thiserror::Error;

use crate::coalg::{check_algebra, check_coalgebra, dual_algebra, dual_coalgebra, Algebra, CoalgError, Coalgebra};
use crate::multilinear::{solve, LinalgError, LinearMap, Tensor};
use crate::report::CheckReport;
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("not a bialgebra; failing axioms: {0:?}")]
    NotABialgebra(Vec<String>),
    #[error("the identity has no convolution inverse")]
    NoAntipode,
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An algebra and a coalgebra on the same space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    pub alg: Algebra,
    pub coalg: Coalgebra,
}

impl Bialgebra {
    pub fn new(alg: Algebra, coalg: Coalgebra) -> Result<Self, HopfError> {
        if alg.dim() != coalg.dim() || alg.field() != coalg.field() {
            return Err(CoalgError::Shape("algebra and coalgebra live on different spaces".into()).into());
        }
        Ok(Bialgebra { alg, coalg })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bialg: Bialgebra,
    pub antipode: LinearMap,
}

impl HopfAlgebra {
    /// Wraps a user-supplied antipode after a shape check; use
    /// [`check_hopf_algebra`] to verify it.
    pub fn new(bialg: Bialgebra, antipode: LinearMap) -> Result<Self, HopfError> {
        let n = bialg.dim();
        if antipode.codomain_dim() != n || antipode.domain_dim() != n {
            return Err(CoalgError::Shape(format!("antipode must be {n}x{n}")).into());
        }
        Ok(HopfAlgebra { bialg, antipode })
    }

    pub fn dim(&self) -> usize {
        self.bialg.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bialg.field()
    }

    pub fn alg(&self) -> &Algebra {
        &self.bialg.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.bialg.coalg
    }

    pub fn mul(&self) -> &LinearMap {
        &self.bialg.alg.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.bialg.alg.unit
    }

    pub fn delta(&self) -> &LinearMap {
        &self.bialg.coalg.delta
    }

    pub fn epsilon(&self) -> &LinearMap {
        &self.bialg.coalg.epsilon
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.bialg.alg.space.labels.as_deref()
    }
}

/// Checks that `Δ` and `ε` are algebra morphisms.
pub fn check_bialgebra(b: &Bialgebra) -> CheckReport {
    let (f, n) = (b.field(), b.dim());
    let (m, u, d, e) = (&b.alg.mul, &b.alg.unit, &b.coalg.delta, &b.coalg.epsilon);
    let mut report = CheckReport::new();
    report.check_identity("delta-multiplicative", &[n, n], |idx| {
        let t = Tensor::basis(f, &[n, n], idx);
        (
            t.apply(0, 2, m, &[n]).apply(0, 1, d, &[n, n]),
            t.apply(0, 1, d, &[n, n])
                .apply(2, 1, d, &[n, n])
                .swap(1)
                .apply(0, 2, m, &[n])
                .apply(1, 2, m, &[n]),
        )
    });
    report.check_identity("delta-unit", &[], |_| {
        let one = Tensor::basis(f, &[], &[]);
        (
            one.apply(0, 0, u, &[n]).apply(0, 1, d, &[n, n]),
            one.apply(0, 0, u, &[n]).apply(1, 0, u, &[n]),
        )
    });
    report.check_identity("counit-multiplicative", &[n, n], |idx| {
        let t = Tensor::basis(f, &[n, n], idx);
        (t.apply(0, 2, m, &[n]).apply(0, 1, e, &[]), t.apply(0, 1, e, &[]).apply(0, 1, e, &[]))
    });
    report.check_identity("counit-unit", &[], |_| {
        let one = Tensor::basis(f, &[], &[]);
        (one.apply(0, 0, u, &[n]).apply(0, 1, e, &[]), one)
    });
    report
}

/// `f ∗ g = m ∘ (f ⊗ g) ∘ Δ` for `f, g: C → A`.
pub fn convolution(f: &LinearMap, g: &LinearMap, c: &Coalgebra, a: &Algebra) -> Result<LinearMap, HopfError> {
    let (nc, na) = (c.dim(), a.dim());
    for map in [f, g] {
        if map.domain_dim() != nc || map.codomain_dim() != na {
            return Err(LinalgError::DimensionMismatch(format!(
                "convolution factor is {}x{}, expected {na}x{nc}",
                map.codomain_dim(),
                map.domain_dim()
            ))
            .into());
        }
    }
    Ok(LinearMap::from_tensor_fn(c.field(), &[nc], na, |t| {
        t.apply(0, 1, &c.delta, &[nc, nc]).apply(0, 1, f, &[na]).apply(1, 1, g, &[na]).apply(0, 2, &a.mul, &[na])
    }))
}

/// Solves `S ∗ id = u∘ε = id ∗ S` for the `n²` entries of `S`.
pub fn compute_antipode(b: &Bialgebra) -> Result<HopfAlgebra, HopfError> {
    let mut report = check_algebra(&b.alg);
    report.extend(check_coalgebra(&b.coalg));
    report.extend(check_bialgebra(b));
    if !report.passed() {
        return Err(HopfError::NotABialgebra(report.failed_axioms().iter().map(|s| s.to_string()).collect()));
    }
    let (field, n) = (b.field(), b.dim());
    let (m, u, d, e) = (&b.alg.mul, &b.alg.unit, &b.coalg.delta, &b.coalg.epsilon);
    // Unknown S[r][c] sits at column r*n + c; row (k, h) of each identity
    // is the k-th coordinate of the convolution evaluated at basis h.
    let mut system = LinearMap::zeros(field, 2 * n * n, n * n);
    let mut rhs = vec![field.zero(); 2 * n * n];
    for k in 0..n {
        for h in 0..n {
            let eq = k * n + h;
            let target = u.get(k, 0) * e.get(0, h);
            rhs[eq] = target.clone();
            rhs[n * n + eq] = target;
            for i in 0..n {
                for j in 0..n {
                    let dij = d.get(i * n + j, h);
                    if dij.is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        // (S ∗ id)(h): S acts on the left leg i.
                        let left = m.get(k, r * n + j);
                        if !left.is_zero() {
                            let col = r * n + i;
                            let v = system.get(eq, col) + &(dij * left);
                            system.set(eq, col, v);
                        }
                        // (id ∗ S)(h): S acts on the right leg j.
                        let right = m.get(k, i * n + r);
                        if !right.is_zero() {
                            let col = r * n + j;
                            let v = system.get(n * n + eq, col) + &(dij * right);
                            system.set(n * n + eq, col, v);
                        }
                    }
                }
            }
        }
    }
    let solution = match solve(&system, &rhs) {
        Ok(s) => s,
        Err(LinalgError::NoSolution) => return Err(HopfError::NoAntipode),
        Err(other) => return Err(other.into()),
    };
    let s = LinearMap::from_fn(field, n, n, |r, c| solution.particular[r * n + c].clone());
    Ok(HopfAlgebra { bialg: b.clone(), antipode: s })
}

/// Checks the antipode identities and the standard antipode properties.
pub fn check_antipode_properties(h: &HopfAlgebra) -> CheckReport {
    let (f, n) = (h.field(), h.dim());
    let (m, u, d, e, s) = (h.mul(), h.unit(), h.delta(), h.epsilon(), &h.antipode);
    let counit_unit = |t: &Tensor| t.apply(0, 1, e, &[]).apply(0, 0, u, &[n]);
    let mut report = CheckReport::new();
    report.check_identity("antipode-left", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 1, d, &[n, n]).apply(0, 1, s, &[n]).apply(0, 2, m, &[n]), counit_unit(&t))
    });
    report.check_identity("antipode-right", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 1, d, &[n, n]).apply(1, 1, s, &[n]).apply(0, 2, m, &[n]), counit_unit(&t))
    });
    report.check_identity("antipode-antimultiplicative", &[n, n], |idx| {
        let t = Tensor::basis(f, &[n, n], idx);
        (
            t.apply(0, 2, m, &[n]).apply(0, 1, s, &[n]),
            t.swap(0).apply(0, 1, s, &[n]).apply(1, 1, s, &[n]).apply(0, 2, m, &[n]),
        )
    });
    report.check_identity("antipode-unit", &[], |_| {
        let one = Tensor::basis(f, &[], &[]);
        (one.apply(0, 0, u, &[n]).apply(0, 1, s, &[n]), one.apply(0, 0, u, &[n]))
    });
    report.check_identity("antipode-anticomultiplicative", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (
            t.apply(0, 1, s, &[n]).apply(0, 1, d, &[n, n]),
            t.apply(0, 1, d, &[n, n]).swap(0).apply(0, 1, s, &[n]).apply(1, 1, s, &[n]),
        )
    });
    report.check_identity("antipode-counit", &[n], |idx| {
        let t = Tensor::basis(f, &[n], idx);
        (t.apply(0, 1, s, &[n]).apply(0, 1, e, &[]), t.apply(0, 1, e, &[]))
    });
    report
}

/// Every Hopf algebra axiom: algebra, coalgebra, compatibility, antipode.
pub fn check_hopf_algebra(h: &HopfAlgebra) -> CheckReport {
    let mut report = CheckReport::new();
    report.extend(check_algebra(h.alg()));
    report.extend(check_coalgebra(h.coalg()));
    report.extend(check_bialgebra(&h.bialg));
    report.extend(check_antipode_properties(h));
    report
}

/// The Hopf algebra `H*` in the dual basis: `m* = Δᵀ`, `u* = εᵀ`,
/// `Δ* = mᵀ`, `ε* = uᵀ`, `S* = Sᵀ`.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra {
        bialg: Bialgebra { alg: dual_algebra(h.coalg()), coalg: dual_coalgebra(h.alg()) },
        antipode: h.antipode.transpose(),
    }
}

/// The evaluation pairing `H* × H → 𝕜` in dual bases.
pub fn evaluation_pairing(h: &HopfAlgebra) -> LinearMap {
    let f = h.field();
    LinearMap::from_fn(f, h.dim(), h.dim(), |i, j| if i == j { f.one() } else { f.zero() })
}

/// Whether `H*` separates points of `H`, i.e. the evaluation pairing is
/// nondegenerate. Always true in finite dimension.
pub fn separates_points(h: &HopfAlgebra) -> bool {
    evaluation_pairing(h).rank() == h.dim()
}

/// The coordinates of `1_H`.
pub fn one(h: &HopfAlgebra) -> Vec<Scalar> {
    h.unit().column(0)
}
