//! Catalog constructors: group algebras of small finite groups, subgroup
//! partial actions and coactions on the ground field, regular and tensor
//! module coalgebras, adjoint, trivial and dual-basis coactions.
//!
//! Constructors only enforce shapes (and the characteristic guard for
//! averaging coactions), so they double as negative-test generators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coalg::{dual_coalgebra, tensor_coalgebra, Algebra, CoalgError, Coalgebra};
use crate::hopf::{compute_antipode, Bialgebra, HopfAlgebra, HopfError};
use crate::multilinear::{LinearMap, VectorSpace};
use crate::pact::{ActionMap, PactError};
use crate::pcoact::{dual_basis_coaction, CoactionMap, PcoactError};
use crate::scalars::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExamplesError {
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("characteristic {characteristic} divides |N| = {order}")]
    CharacteristicDividesOrder { characteristic: u64, order: usize },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown group element {0:?}")]
    UnknownElement(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Pact(#[from] PactError),
    #[error(transparent)]
    Pcoact(#[from] PcoactError),
}

/// File form of a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A finite group as a validated Cayley table: `table[a][b] = ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, ExamplesError> {
        let bad = |msg: String| Err(ExamplesError::InvalidGroupTable(msg));
        let n = table.len();
        if n == 0 {
            return bad("empty table".into());
        }
        if let Some(row) = table.iter().position(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad(format!("row {row} is not a list of {n} indices below {n}"));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return bad(format!("{} labels for order {n}", labels.len()));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return bad("labels must be distinct".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return bad("no identity element".into());
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            match (0..n).find(|&b| row[b] == identity && table[b][a] == identity) {
                Some(b) => inverse.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(GroupTable { order: n, table, identity, inverse, labels })
    }

    pub fn from_file(file: GroupTableFile) -> Result<Self, ExamplesError> {
        if file.order != file.table.len() {
            return Err(ExamplesError::InvalidGroupTable(format!(
                "order {} but {} rows",
                file.order,
                file.table.len()
            )));
        }
        Self::new(file.table, file.labels)
    }

    pub fn to_file(&self) -> GroupTableFile {
        GroupTableFile { order: self.order, table: self.table.clone(), labels: Some(self.labels.clone()) }
    }

    /// `Z_n` for `1 ≤ n ≤ 12`, labelled `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> Result<Self, ExamplesError> {
        if !(1..=12).contains(&n) {
            return Err(ExamplesError::UnknownGroup(format!("Z{n}")));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        Self::new(table, Some(labels))
    }

    /// The symmetric group on three points with `(στ)(x) = σ(τ(x))`.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        Self::new(table, Some(labels.iter().map(|s| s.to_string()).collect())).expect("S3 table is valid")
    }

    /// `Z2 × Z2` labelled `e, a, b, c`.
    pub fn klein() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::new(table, Some(["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect()))
            .expect("Klein table is valid")
    }

    /// `Z<n>`, `S3` or `Klein`.
    pub fn named(name: &str) -> Result<Self, ExamplesError> {
        match name {
            "S3" => Ok(Self::s3()),
            "Klein" | "V4" => Ok(Self::klein()),
            _ => match name.strip_prefix('Z').and_then(|n| n.parse().ok()) {
                Some(n) => Self::cyclic(n),
                None => Err(ExamplesError::UnknownGroup(name.to_string())),
            },
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize, ExamplesError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| ExamplesError::UnknownElement(label.to_string()))
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        subset.contains(&self.identity)
            && subset.iter().all(|&a| subset.contains(&self.inverse[a]) && subset.iter().all(|&b| subset.contains(&self.table[a][b])))
    }

    /// Every subgroup, as sorted index lists.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        subsets_containing(self.order, self.identity).into_iter().filter(|s| self.is_subgroup(s)).collect()
    }

    /// Parses `trivial`, `all`, `A3` (in `S3`), or comma-separated labels.
    pub fn subset(&self, selector: &str) -> Result<Vec<usize>, ExamplesError> {
        let mut out = match selector.trim() {
            "trivial" => vec![self.identity],
            "all" => (0..self.order).collect(),
            "A3" if self.order == 6 && self.labels.iter().any(|l| l == "(123)") => {
                vec![self.identity, self.element("(123)")?, self.element("(132)")?]
            }
            list => list.split(',').map(|l| self.element(l.trim())).collect::<Result<Vec<_>, _>>()?,
        };
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// All subsets of `{0, …, n-1}` containing `e`, in increasing bitmask order.
pub fn subsets_containing(n: usize, e: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..n).filter(|&i| i != e).collect();
    (0u64..1 << others.len())
        .map(|mask| {
            let mut s: Vec<usize> = others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &g)| g).collect();
            s.push(e);
            s.sort_unstable();
            s
        })
        .collect()
}

fn delta_kronecker(field: FieldSpec, r: usize, c: usize) -> crate::scalars::Scalar {
    if r == c {
        field.one()
    } else {
        field.zero()
    }
}

/// `kG` with `Δ(g) = g ⊗ g`, `ε(g) = 1`; the antipode is solved for, not assigned.
pub fn group_algebra(g: &GroupTable, field: FieldSpec) -> Result<HopfAlgebra, ExamplesError> {
    let n = g.order();
    let space = VectorSpace::labelled(g.labels().to_vec());
    let mul = LinearMap::from_fn(field, n, n * n, |k, ab| delta_kronecker(field, k, g.mul(ab / n, ab % n)));
    let unit = LinearMap::from_fn(field, n, 1, |k, _| delta_kronecker(field, k, g.identity()));
    let delta = LinearMap::from_fn(field, n * n, n, |r, c| delta_kronecker(field, r, c * n + c));
    let eps = LinearMap::from_fn(field, 1, n, |_, _| field.one());
    let bialg = Bialgebra::new(Algebra::new(space.clone(), mul, unit)?, Coalgebra::new(space, delta, eps)?)?;
    Ok(compute_antipode(&bialg)?)
}

/// `1 ⇀ g = α(g)` with `α` the indicator of `subset`.
pub fn subgroup_partial_action_on_k(g: &GroupTable, subset: &[usize], field: FieldSpec) -> Result<ActionMap, ExamplesError> {
    let map = LinearMap::from_fn(field, 1, g.order(), |_, h| if subset.contains(&h) { field.one() } else { field.zero() });
    Ok(ActionMap::new(1, g.order(), map)?)
}

/// `λ′(1) = (1/|N|) Σ_{g∈N} g ⊗ 1`.
pub fn subgroup_partial_coaction_on_k(
    g: &GroupTable,
    subset: &[usize],
    field: FieldSpec,
) -> Result<CoactionMap, ExamplesError> {
    let order = subset.len();
    let p = field.characteristic();
    if order == 0 || (p != 0 && (order as u64).is_multiple_of(p)) {
        return Err(ExamplesError::CharacteristicDividesOrder { characteristic: p, order });
    }
    let weight = field.fraction(1, order as i64).expect("order is invertible");
    let map = LinearMap::from_fn(field, g.order(), 1, |h, _| if subset.contains(&h) { weight.clone() } else { field.zero() });
    Ok(CoactionMap::new(g.order(), 1, map)?)
}

/// `d ⇀ h = dh` on `D = H`.
pub fn regular_module_coalgebra(h: &HopfAlgebra) -> ActionMap {
    ActionMap { c_dim: h.dim(), h_dim: h.dim(), map: h.mul().clone() }
}

/// `(c ⊗ d) ⇀ h = c ⊗ (d ⇀ h)` on `C ⊗ D`.
pub fn tensor_module_coalgebra(c: &Coalgebra, d: &Coalgebra, act: &ActionMap) -> Result<(Coalgebra, ActionMap), ExamplesError> {
    let cd = tensor_coalgebra(c, d)?;
    let map = LinearMap::identity(c.field(), c.dim()).kron(&act.map);
    Ok((cd, ActionMap::new(c.dim() * act.c_dim, act.h_dim, map)?))
}

/// `λ(h) = h₁S(h₃) ⊗ h₂` on `H`.
pub fn adjoint_coaction(h: &HopfAlgebra) -> CoactionMap {
    let n = h.dim();
    let map = LinearMap::from_tensor_fn(h.field(), &[n], n * n, |t| {
        t.apply(0, 1, h.delta(), &[n, n])
            .apply(1, 1, h.delta(), &[n, n])
            .apply(2, 1, &h.antipode, &[n])
            .swap(1)
            .apply(0, 2, h.mul(), &[n])
    });
    CoactionMap { h_dim: n, c_dim: n, map }
}

/// `λ(d) = 1_H ⊗ d`.
pub fn trivial_coaction(d: &Coalgebra, h: &HopfAlgebra) -> CoactionMap {
    let map = h.unit().kron(&LinearMap::identity(d.field(), d.dim()));
    CoactionMap { h_dim: h.dim(), c_dim: d.dim(), map }
}

/// `H*` with `λ(f) = Σᵢ hᵢ ⊗ f ∗ hᵢ*`.
pub fn dual_basis_comodule(h: &HopfAlgebra) -> (Coalgebra, CoactionMap) {
    (dual_coalgebra(h.alg()), dual_basis_coaction(h))
}

/// `λ ⊗ I_D` on `C ⊗ D`.
pub fn tensor_comodule_coalgebra(
    c: &Coalgebra,
    co: &CoactionMap,
    d: &Coalgebra,
) -> Result<(Coalgebra, CoactionMap), ExamplesError> {
    let cd = tensor_coalgebra(c, d)?;
    let map = co.map.kron(&LinearMap::identity(d.field(), d.dim()));
    Ok((cd, CoactionMap::new(co.h_dim, c.dim() * d.dim(), map)?))
}

/// Catalog entry for a partial module coalgebra.
#[derive(Debug, Clone)]
pub struct PmcInstance {
    pub name: String,
    pub coalgebra: Coalgebra,
    pub hopf: HopfAlgebra,
    pub action: ActionMap,
}

/// Catalog entry for a partial comodule coalgebra.
#[derive(Debug, Clone)]
pub struct PccInstance {
    pub name: String,
    pub coalgebra: Coalgebra,
    pub hopf: HopfAlgebra,
    pub coaction: CoactionMap,
}

fn subgroup_name(g: &GroupTable, subset: &[usize]) -> String {
    subset.iter().map(|&i| g.labels()[i].as_str()).collect::<Vec<_>>().join(",")
}

/// Subgroup actions on `k` for every subgroup of `Z2`, `Z4`, `S3` and
/// Klein, plus the regular actions of `kZ2` and `kZ3`.
pub fn pmc_catalog(field: FieldSpec) -> Result<Vec<PmcInstance>, ExamplesError> {
    let mut out = Vec::new();
    for (gname, g) in [("Z2", GroupTable::cyclic(2)?), ("Z4", GroupTable::cyclic(4)?), ("S3", GroupTable::s3()), ("Klein", GroupTable::klein())] {
        let h = group_algebra(&g, field)?;
        for n in g.subgroups() {
            out.push(PmcInstance {
                name: format!("subgroup-action {gname} {{{}}}", subgroup_name(&g, &n)),
                coalgebra: Coalgebra::ground(field),
                hopf: h.clone(),
                action: subgroup_partial_action_on_k(&g, &n, field)?,
            });
        }
    }
    for n in [2, 3] {
        let h = group_algebra(&GroupTable::cyclic(n)?, field)?;
        out.push(PmcInstance {
            name: format!("regular-action Z{n}"),
            coalgebra: h.coalg().clone(),
            action: regular_module_coalgebra(&h),
            hopf: h,
        });
    }
    Ok(out)
}

/// Subgroup coactions on `k` (skipping subgroups whose order the
/// characteristic divides), trivial, adjoint and dual-basis coactions.
pub fn pcc_catalog(field: FieldSpec) -> Result<Vec<PccInstance>, ExamplesError> {
    let mut out = Vec::new();
    for (gname, g) in [
        ("Z2", GroupTable::cyclic(2)?),
        ("Z3", GroupTable::cyclic(3)?),
        ("Z4", GroupTable::cyclic(4)?),
        ("S3", GroupTable::s3()),
        ("Klein", GroupTable::klein()),
    ] {
        let h = group_algebra(&g, field)?;
        for n in g.subgroups() {
            match subgroup_partial_coaction_on_k(&g, &n, field) {
                Ok(co) => out.push(PccInstance {
                    name: format!("subgroup-coaction {gname} {{{}}}", subgroup_name(&g, &n)),
                    coalgebra: Coalgebra::ground(field),
                    hopf: h.clone(),
                    coaction: co,
                }),
                Err(ExamplesError::CharacteristicDividesOrder { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let z2 = group_algebra(&GroupTable::cyclic(2)?, field)?;
    let z3 = group_algebra(&GroupTable::cyclic(3)?, field)?;
    out.push(PccInstance {
        name: "trivial-coaction Z2".into(),
        coalgebra: z2.coalg().clone(),
        coaction: trivial_coaction(z2.coalg(), &z2),
        hopf: z2.clone(),
    });
    out.push(PccInstance {
        name: "adjoint-coaction Z3".into(),
        coalgebra: z3.coalg().clone(),
        coaction: adjoint_coaction(&z3),
        hopf: z3,
    });
    let (hstar, co) = dual_basis_comodule(&z2);
    out.push(PccInstance { name: "dual-basis-coaction Z2".into(), coalgebra: hstar, coaction: co, hopf: z2 });
    Ok(out)
}
