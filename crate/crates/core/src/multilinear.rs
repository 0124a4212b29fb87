//! Finite-dimensional linear algebra over a [`FieldSpec`].
//!
//! Every tensor product space is flattened row-major: the pair index `(i, j)`
//! of `V ⊗ W` becomes `i * dim W + j`, and likewise for longer products. All
//! structure maps in the crate use this one convention, so Kronecker products
//! and [`Tensor::apply`] compose without adapters.
//!
//! [`LinearMap`] is a dense matrix whose column `j` is the image of basis
//! vector `j`. [`Tensor`] is a sparse vector in `V_1 ⊗ ... ⊗ V_n` used to
//! evaluate both sides of an axiom on a single basis element without ever
//! materialising large Kronecker products.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("map is not injective (rank {rank} < domain dimension {domain})")]
    NotInjective { rank: usize, domain: usize },
}

/// Basis metadata of a finite-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSpace {
    pub dim: usize,
    pub labels: Option<Vec<String>>,
}

impl VectorSpace {
    pub fn new(dim: usize) -> Self {
        VectorSpace { dim, labels: None }
    }

    pub fn labelled(labels: Vec<String>) -> Self {
        VectorSpace { dim: labels.len(), labels: Some(labels) }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => format!("e{i}"),
        }
    }

    /// Labels of `self ⊗ other` in pair order, when both sides are labelled.
    pub fn tensor(&self, other: &VectorSpace) -> VectorSpace {
        match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => VectorSpace::labelled(
                a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect(),
            ),
            _ => VectorSpace::new(self.dim * other.dim),
        }
    }
}

/// A dense matrix `codomain_dim × domain_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(field: FieldSpec, codomain: usize, domain: usize) -> Self {
        LinearMap { field, rows: codomain, cols: domain, data: vec![field.zero(); codomain * domain] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        codomain: usize,
        domain: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(codomain * domain);
        for r in 0..codomain {
            for c in 0..domain {
                data.push(entry(r, c));
            }
        }
        LinearMap { field, rows: codomain, cols: domain, data }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(LinearMap { field, rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(field: FieldSpec, codomain: usize, columns: &[Vec<Scalar>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == codomain), "column length mismatch");
        Self::from_fn(field, codomain, columns.len(), |r, c| columns[c][r].clone())
    }

    /// Builds the matrix of a multilinear expression by evaluating it on each
    /// basis tensor of `domain_dims`.
    pub fn from_tensor_fn(
        field: FieldSpec,
        domain_dims: &[usize],
        codomain: usize,
        mut eval: impl FnMut(Tensor) -> Tensor,
    ) -> Self {
        let domain: usize = domain_dims.iter().product();
        let mut m = Self::zeros(field, codomain, domain);
        for j in 0..domain {
            let out = eval(Tensor::basis_flat(field, domain_dims, j));
            assert_eq!(out.total_dim(), codomain, "expression codomain mismatch");
            for (&i, v) in &out.entries {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, LinalgError> {
        if self.cols != g.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, g.rows, g.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, g.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..g.cols {
                    let b = g.get(k, j);
                    if !b.is_zero() {
                        out.data[i * g.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other` under the row-major pair convention.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.field, self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                self.field.zero()
            } else {
                a * other.get(r % r2, c % c2)
            }
        })
    }

    pub fn transpose(&self) -> LinearMap {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// The flip `τ: A ⊗ B → B ⊗ A`, sending index `a·dimB + b` to `b·dimA + a`.
    pub fn flip(field: FieldSpec, dim_a: usize, dim_b: usize) -> LinearMap {
        let mut m = Self::zeros(field, dim_a * dim_b, dim_a * dim_b);
        for a in 0..dim_a {
            for b in 0..dim_b {
                m.set(b * dim_a + a, a * dim_b + b, field.one());
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    slot.add_mul_assign(a, x);
                }
            }
        }
        out
    }

    pub fn checked_sub(&self, other: &LinearMap) -> Result<LinearMap, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch("shape differs".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(LinearMap { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivots are the first nonzero entry in column order.
    pub fn rref(&self) -> (LinearMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pivot_row);
            let inv = m.get(next_row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(next_row, c) * &inv;
                m.set(next_row, c, v);
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let p = m.get(next_row, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&factor * p);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }
}

/// Result of [`solve`]: one particular solution plus a nullspace basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub nullspace: Vec<Vec<Scalar>>,
}

/// Solves `a · x = b` exactly by Gaussian elimination.
pub fn solve(a: &LinearMap, b: &[Scalar]) -> Result<Solution, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "right-hand side has length {}, system has {} rows",
            b.len(),
            a.rows
        )));
    }
    let field = a.field;
    let augmented = LinearMap::from_fn(field, a.rows, a.cols + 1, |r, c| {
        if c < a.cols {
            a.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (r, pivots) = augmented.rref();
    if pivots.last() == Some(&a.cols) {
        return Err(LinalgError::NoSolution);
    }
    let mut particular = vec![field.zero(); a.cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(row, a.cols).clone();
    }
    Ok(Solution { particular, nullspace: a.nullspace() })
}

/// Returns `g` with `g ∘ f = id` on the domain of `f`.
///
/// The image of `f` is completed to a basis of the codomain with standard
/// basis vectors (first-fit); `g` sends those complement vectors to zero.
pub fn left_inverse_on_image(f: &LinearMap) -> Result<LinearMap, LinalgError> {
    let field = f.field;
    let rank = f.rank();
    if rank != f.cols {
        return Err(LinalgError::NotInjective { rank, domain: f.cols });
    }
    let mut span = Subspace::new(field, f.rows);
    let mut basis: Vec<Vec<Scalar>> = Vec::with_capacity(f.rows);
    for c in 0..f.cols {
        let col = f.column(c);
        span.insert(&col);
        basis.push(col);
    }
    for i in 0..f.rows {
        let mut e = vec![field.zero(); f.rows];
        e[i] = field.one();
        if span.insert(&e) {
            basis.push(e);
        }
    }
    // Columns of `full` form a basis; the first `f.cols` rows of its inverse are `g`.
    let full = LinearMap::from_columns(field, f.rows, &basis);
    let inverse = invert(&full).expect("completed basis is invertible");
    Ok(LinearMap::from_fn(field, f.cols, f.rows, |r, c| inverse.get(r, c).clone()))
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn invert(m: &LinearMap) -> Option<LinearMap> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let field = m.field;
    let augmented = LinearMap::from_fn(field, n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            field.one()
        } else {
            field.zero()
        }
    });
    let (r, pivots) = augmented.rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(LinearMap::from_fn(field, n, n, |i, j| r.get(i, n + j).clone()))
}

/// A subspace of `field^ambient`, stored as a reduced row echelon basis.
///
/// The basis is canonical, so two `Subspace`s compare equal exactly when they
/// are the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a>(
        field: FieldSpec,
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a [Scalar]>,
    ) -> Self {
        let mut s = Self::new(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = LinearMap::identity(field, ambient);
        Self::spanned_by(field, ambient, id.rows())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// The residue of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector outside the ambient space");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Smallest subspace containing `seed` and closed under `step`.
///
/// Every newly added basis vector is pushed through `step` until the
/// dimension stops growing.
pub fn span_closure<F>(
    field: FieldSpec,
    ambient: usize,
    seed: &[Vec<Scalar>],
    mut step: F,
) -> Subspace
where
    F: FnMut(&[Scalar]) -> Vec<Vec<Scalar>>,
{
    let mut space = Subspace::new(field, ambient);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for v in seed {
        if space.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for w in step(&v) {
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    space
}

/// A sparse element of `V_1 ⊗ ... ⊗ V_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    field: FieldSpec,
    dims: Vec<usize>,
    entries: BTreeMap<usize, Scalar>,
}

impl Tensor {
    pub fn zero(field: FieldSpec, dims: &[usize]) -> Self {
        Tensor { field, dims: dims.to_vec(), entries: BTreeMap::new() }
    }

    pub fn basis(field: FieldSpec, dims: &[usize], index: &[usize]) -> Self {
        assert_eq!(dims.len(), index.len(), "index arity");
        let flat = index.iter().zip(dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index out of range");
            acc * d + i
        });
        Self::basis_flat(field, dims, flat)
    }

    pub fn basis_flat(field: FieldSpec, dims: &[usize], flat: usize) -> Self {
        let mut t = Self::zero(field, dims);
        t.entries.insert(flat, field.one());
        t
    }

    pub fn from_dense(field: FieldSpec, dims: &[usize], v: &[Scalar]) -> Self {
        assert_eq!(v.len(), dims.iter().product::<usize>(), "dense length");
        let entries =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        Tensor { field, dims: dims.to_vec(), entries }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, v)| (i, v))
    }

    pub fn coefficient(&self, flat: usize) -> Scalar {
        self.entries.get(&flat).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.total_dim()];
        for (&i, x) in &self.entries {
            v[i] = x.clone();
        }
        v
    }

    /// Applies `map` to the `arity` consecutive factors starting at `pos`,
    /// replacing them by factors of sizes `out_dims`.
    ///
    /// `arity == 0` inserts the image of the scalar `1` (e.g. a unit map);
    /// an empty `out_dims` contracts the factors away (e.g. a counit).
    pub fn apply(&self, pos: usize, arity: usize, map: &LinearMap, out_dims: &[usize]) -> Tensor {
        assert!(pos + arity <= self.dims.len(), "factor range out of bounds");
        let block: usize = self.dims[pos..pos + arity].iter().product();
        let out_block: usize = out_dims.iter().product();
        assert_eq!(map.cols, block, "map domain does not match the tensor factors");
        assert_eq!(map.rows, out_block, "map codomain does not match out_dims");
        let right: usize = self.dims[pos + arity..].iter().product();
        let mut dims = self.dims[..pos].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[pos + arity..]);

        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&idx, x) in &self.entries {
            let l = idx / (block * right);
            let b = (idx / right) % block;
            let r = idx % right;
            for ob in 0..out_block {
                let a = map.get(ob, b);
                if a.is_zero() {
                    continue;
                }
                let key = (l * out_block + ob) * right + r;
                out.entry(key).or_insert_with(|| self.field.zero()).add_mul_assign(a, x);
            }
        }
        out.retain(|_, v| !v.is_zero());
        Tensor { field: self.field, dims, entries: out }
    }

    /// Swaps factors `pos` and `pos + 1` (the flip τ on those two legs).
    pub fn swap(&self, pos: usize) -> Tensor {
        assert!(pos + 1 < self.dims.len(), "swap position out of bounds");
        let (a, b) = (self.dims[pos], self.dims[pos + 1]);
        let right: usize = self.dims[pos + 2..].iter().product();
        let mut dims = self.dims.clone();
        dims.swap(pos, pos + 1);
        let entries = self
            .entries
            .iter()
            .map(|(&idx, x)| {
                let l = idx / (a * b * right);
                let i = (idx / (b * right)) % a;
                let j = (idx / right) % b;
                let r = idx % right;
                (((l * b + j) * a + i) * right + r, x.clone())
            })
            .collect();
        Tensor { field: self.field, dims, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut entries: BTreeMap<usize, Scalar> =
            self.entries.iter().map(|(&i, x)| (i, x * s)).collect();
        entries.retain(|_, v| !v.is_zero());
        Tensor { field: self.field, dims: self.dims.clone(), entries }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor shapes differ");
        let mut entries = self.entries.clone();
        for (&i, x) in &other.entries {
            let slot = entries.entry(i).or_insert_with(|| self.field.zero());
            *slot = &*slot + x;
        }
        entries.retain(|_, v| !v.is_zero());
        Tensor { field: self.field, dims: self.dims.clone(), entries }
    }

    /// Reinterprets the factor list without moving data, e.g. `[a·b]` as `[a, b]`.
    pub fn reshape(mut self, dims: &[usize]) -> Tensor {
        assert_eq!(dims.iter().product::<usize>(), self.total_dim(), "reshape size");
        self.dims = dims.to_vec();
        self
    }

    fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (n, (&i, x)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let idx: Vec<String> = self.multi_index(i).iter().map(usize::to_string).collect();
            write!(f, "{x}·[{}]", idx.join(","))?;
        }
        Ok(())
    }
}

/// All multi-indices of `dims` in lexicographic order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; dims.len()];
        for (slot, &d) in idx.iter_mut().zip(dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn m(rows: &[&[i64]]) -> LinearMap {
        let f = q();
        LinearMap::from_rows(f, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
            .unwrap()
    }

    fn naive_product(a: &LinearMap, b: &LinearMap) -> LinearMap {
        LinearMap::from_fn(q(), a.codomain_dim(), b.domain_dim(), |i, j| {
            let mut acc = q().zero();
            for k in 0..a.domain_dim() {
                acc = &acc + &(a.get(i, k) * b.get(k, j));
            }
            acc
        })
    }

    #[test]
    fn compose_matches_triple_loop() {
        let a = m(&[&[1, -2, 0, 3], &[4, 0, 5, -1], &[2, 2, -3, 7]]);
        let b = m(&[&[1, 0], &[-1, 2], &[3, 5], &[0, -4]]);
        assert_eq!(a.compose(&b).unwrap(), naive_product(&a, &b));
        assert!(matches!(b.compose(&b), Err(LinalgError::DimensionMismatch(_))));
        assert_eq!(LinearMap::identity(q(), 3).compose(&a).unwrap(), a);
    }

    #[test]
    fn projection_is_idempotent() {
        let p = m(&[&[1, 1], &[0, 0]]);
        assert_eq!(p.compose(&p).unwrap(), p);
    }

    #[test]
    fn kron_identities() {
        let i2 = LinearMap::identity(q(), 2);
        assert_eq!(i2.kron(&i2), LinearMap::identity(q(), 4));
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(LinearMap::identity(q(), 1).kron(&a), a);
        assert_eq!(a.kron(&LinearMap::identity(q(), 1)), a);
    }

    #[test]
    fn flip_examples() {
        assert_eq!(LinearMap::flip(q(), 1, 3), LinearMap::identity(q(), 3));
        let round = LinearMap::flip(q(), 2, 3).compose(&LinearMap::flip(q(), 3, 2)).unwrap();
        assert_eq!(round, LinearMap::identity(q(), 6));
        // e0 ⊗ e1 has index 1 in 2x2; its flip e1 ⊗ e0 has index 2.
        let mut e01 = vec![q().zero(); 4];
        e01[1] = q().one();
        let out = LinearMap::flip(q(), 2, 2).apply(&e01);
        assert!(out[2].is_one() && out.iter().filter(|x| !x.is_zero()).count() == 1);
    }

    #[test]
    fn solve_examples() {
        let id = LinearMap::identity(q(), 3);
        let b: Vec<Scalar> = [4, -1, 2].iter().map(|&x| q().from_i64(x)).collect();
        assert_eq!(solve(&id, &b).unwrap().particular, b);

        let inconsistent = m(&[&[1], &[1]]);
        let rhs = vec![q().zero(), q().one()];
        assert_eq!(solve(&inconsistent, &rhs), Err(LinalgError::NoSolution));

        let a = m(&[&[2, 1, 0, 0], &[1, 3, 1, 0], &[0, 1, 4, 1], &[0, 0, 1, 5]]);
        let b: Vec<Scalar> = [1, 2, 3, 4].iter().map(|&x| q().from_i64(x)).collect();
        let sol = solve(&a, &b).unwrap();
        assert!(sol.nullspace.is_empty());
        assert_eq!(a.apply(&sol.particular), b);
    }

    #[test]
    fn left_inverse_examples() {
        let id = LinearMap::identity(q(), 3);
        assert_eq!(left_inverse_on_image(&id).unwrap(), id);
        let incl = m(&[&[1], &[0]]);
        assert_eq!(left_inverse_on_image(&incl).unwrap(), m(&[&[1, 0]]));
        let f = m(&[&[1, 0, 2], &[0, 1, 1], &[1, 1, 0], &[3, 0, 0], &[0, 2, 5]]);
        let g = left_inverse_on_image(&f).unwrap();
        assert_eq!(g.compose(&f).unwrap(), LinearMap::identity(q(), 3));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(matches!(left_inverse_on_image(&singular), Err(LinalgError::NotInjective { .. })));
    }

    #[test]
    fn span_closure_examples() {
        let f = q();
        let e0 = vec![f.one(), f.zero()];
        // right translation by g on kZ2 swaps the two basis vectors.
        let swap = m(&[&[0, 1], &[1, 0]]);
        let closed = span_closure(f, 2, std::slice::from_ref(&e0), |v| vec![swap.apply(v)]);
        assert_eq!(closed, Subspace::full(f, 2));
        let zero = span_closure(f, 2, std::slice::from_ref(&e0), |_| vec![vec![f.zero(), f.zero()]]);
        assert_eq!(zero.dim(), 1);
        let full = span_closure(f, 2, &[e0, vec![f.zero(), f.one()]], |_| vec![]);
        assert_eq!(full, Subspace::full(f, 2));
    }

    #[test]
    fn tensor_apply_matches_kron() {
        let f = q();
        let a = m(&[&[1, 2], &[0, 1], &[3, -1]]);
        let b = m(&[&[2, 0], &[1, 1]]);
        let k = a.kron(&b);
        for j in 0..4 {
            let t = Tensor::basis_flat(f, &[2, 2], j).apply(0, 1, &a, &[3]).apply(1, 1, &b, &[2]);
            assert_eq!(t.to_dense(), k.column(j));
        }
    }

    #[test]
    fn tensor_swap_matches_flip() {
        let f = q();
        let flip = LinearMap::flip(f, 2, 3);
        for j in 0..6 {
            let t = Tensor::basis_flat(f, &[2, 3], j).swap(0);
            assert_eq!(t.dims(), &[3, 2]);
            assert_eq!(t.to_dense(), flip.column(j));
        }
    }

    #[test]
    fn rank_nullity_small() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank() + a.nullspace().len(), 3);
        for v in a.nullspace() {
            assert!(a.apply(&v).iter().all(Scalar::is_zero));
        }
    }
}
