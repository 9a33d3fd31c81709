//! Linear maps between tensor powers of a finite-dimensional complex space.
//!
//! A [`MultiOp`] with input arity `p` and output arity `q` over a space of
//! dimension `d` is a `d^q × d^p` matrix. Multi-indices are flattened
//! row-major: `(i_1, …, i_k) ↦ Σ i_j · d^(k−j)`, so the Kronecker product of
//! matrices is the tensor product of maps.
//!
//! Storage is dense until the matrix would exceed [`DENSE_LIMIT`] entries,
//! after which results are kept as compressed sparse rows. Both layouts
//! support the same operations and may be mixed freely.

mod chain;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use chain::{eval, Factor};

pub type Scalar = Complex64;

/// Largest matrix (rows × cols) kept in dense storage.
pub const DENSE_LIMIT: usize = 10_000_000;

/// Operators whose condition estimate exceeds this are treated as singular.
pub const CONDITION_LIMIT: f64 = 1e12;

const ZERO: Scalar = Complex64::new(0.0, 0.0);
const ONE: Scalar = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub dim: usize,
    pub arity_in: usize,
    pub arity_out: usize,
}

impl Shape {
    pub fn new(dim: usize, arity_in: usize, arity_out: usize) -> Self {
        Shape {
            dim,
            arity_in,
            arity_out,
        }
    }

    pub fn rows(&self) -> usize {
        self.dim.pow(self.arity_out as u32)
    }

    pub fn cols(&self) -> usize {
        self.dim.pow(self.arity_in as u32)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A^{}→A^{} (d={}, {}×{})",
            self.arity_in,
            self.arity_out,
            self.dim,
            self.rows(),
            self.cols()
        )
    }
}

/// Flattens a multi-index into a row or column number.
pub fn encode(indices: &[usize], dim: usize) -> usize {
    indices.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Inverse of [`encode`] for a multi-index of length `arity`.
pub fn decode(mut flat: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
    out
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(Vec<Scalar>),
    Sparse {
        row_ptr: Vec<usize>,
        cols: Vec<usize>,
        vals: Vec<Scalar>,
    },
}

#[derive(Clone, Debug)]
pub struct MultiOp {
    shape: Shape,
    storage: Storage,
}

/// Accumulates a matrix one row at a time and picks the storage layout.
struct RowBuilder {
    cols: usize,
    dense: bool,
    data: Vec<Scalar>,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
}

impl RowBuilder {
    fn new(rows: usize, cols: usize) -> Self {
        let dense = rows.saturating_mul(cols) <= DENSE_LIMIT;
        let mut b = RowBuilder {
            cols,
            dense,
            data: Vec::new(),
            row_ptr: Vec::new(),
            col_idx: Vec::new(),
        };
        if dense {
            b.data.reserve(rows * cols);
        } else {
            b.row_ptr.reserve(rows + 1);
            b.row_ptr.push(0);
        }
        b
    }

    fn push_dense_row(&mut self, row: &[Scalar]) {
        debug_assert_eq!(row.len(), self.cols);
        if self.dense {
            self.data.extend_from_slice(row);
        } else {
            for (c, &v) in row.iter().enumerate() {
                if v != ZERO {
                    self.col_idx.push(c);
                    self.data.push(v);
                }
            }
            self.row_ptr.push(self.col_idx.len());
        }
    }

    fn finish(self, shape: Shape) -> MultiOp {
        let storage = if self.dense {
            Storage::Dense(self.data)
        } else {
            Storage::Sparse {
                row_ptr: self.row_ptr,
                cols: self.col_idx,
                vals: self.data,
            }
        };
        MultiOp { shape, storage }
    }
}

impl MultiOp {
    pub fn zeros(dim: usize, arity_in: usize, arity_out: usize) -> Self {
        Self::from_fn(dim, arity_in, arity_out, |_, _| ZERO)
    }

    pub fn identity(dim: usize, arity: usize) -> Self {
        Self::from_fn(dim, arity, arity, |r, c| if r == c { ONE } else { ZERO })
    }

    /// The transposition `a⊗b ↦ b⊗a` on `A⊗A`.
    pub fn flip(dim: usize) -> Self {
        Self::from_fn(dim, 2, 2, |r, c| {
            if r == (c % dim) * dim + c / dim {
                ONE
            } else {
                ZERO
            }
        })
    }

    pub fn from_fn(
        dim: usize,
        arity_in: usize,
        arity_out: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        let shape = Shape::new(dim, arity_in, arity_out);
        let (rows, cols) = (shape.rows(), shape.cols());
        let mut b = RowBuilder::new(rows, cols);
        let mut buf = vec![ZERO; cols];
        for r in 0..rows {
            for (c, slot) in buf.iter_mut().enumerate() {
                *slot = f(r, c);
            }
            b.push_dense_row(&buf);
        }
        b.finish(shape)
    }

    /// Builds an operator from `(row, col, value)` entries; repeated
    /// positions are summed. Rejects non-finite values and bad indices.
    pub fn from_triplets(
        dim: usize,
        arity_in: usize,
        arity_out: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let shape = Shape::new(dim, arity_in, arity_out);
        let (rows, cols) = (shape.rows(), shape.cols());
        let mut by_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::InvalidArgument(format!(
                    "entry ({r}, {c}) outside {rows}×{cols}"
                )));
            }
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFinite {
                    row: r,
                    col: c,
                    value: v.to_string(),
                });
            }
            by_row[r].push((c, v));
        }
        let mut b = RowBuilder::new(rows, cols);
        let mut buf = vec![ZERO; cols];
        for row in by_row {
            buf.fill(ZERO);
            for (c, v) in row {
                buf[c] += v;
            }
            b.push_dense_row(&buf);
        }
        Ok(b.finish(shape))
    }

    /// Row vector of a linear functional `A^p → ℂ`.
    pub fn functional(dim: usize, arity_in: usize, values: &[Scalar]) -> Result<Self> {
        let shape = Shape::new(dim, arity_in, 0);
        if values.len() != shape.cols() {
            return Err(Error::InvalidArgument(format!(
                "functional needs {} values, got {}",
                shape.cols(),
                values.len()
            )));
        }
        Self::from_triplets(
            dim,
            arity_in,
            0,
            values.iter().enumerate().map(|(c, &v)| (0, c, v)),
        )
    }

    /// Column vector of an element of `A^q` (a map `ℂ → A^q`).
    pub fn vector(dim: usize, arity_out: usize, values: &[Scalar]) -> Result<Self> {
        let shape = Shape::new(dim, 0, arity_out);
        if values.len() != shape.rows() {
            return Err(Error::InvalidArgument(format!(
                "vector needs {} values, got {}",
                shape.rows(),
                values.len()
            )));
        }
        Self::from_triplets(
            dim,
            0,
            arity_out,
            values.iter().enumerate().map(|(r, &v)| (r, 0, v)),
        )
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim
    }

    pub fn arity_in(&self) -> usize {
        self.shape.arity_in
    }

    pub fn arity_out(&self) -> usize {
        self.shape.arity_out
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn cols(&self) -> usize {
        self.shape.cols()
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse { .. })
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows() && c < self.cols(), "index out of bounds");
        match &self.storage {
            Storage::Dense(data) => data[r * self.cols() + c],
            Storage::Sparse {
                row_ptr,
                cols,
                vals,
            } => {
                let (lo, hi) = (row_ptr[r], row_ptr[r + 1]);
                match cols[lo..hi].binary_search(&c) {
                    Ok(k) => vals[lo + k],
                    Err(_) => ZERO,
                }
            }
        }
    }

    /// Entry addressed by output and input multi-indices.
    pub fn entry(&self, out: &[usize], input: &[usize]) -> Scalar {
        assert_eq!(out.len(), self.arity_out());
        assert_eq!(input.len(), self.arity_in());
        self.get(encode(out, self.dim()), encode(input, self.dim()))
    }

    /// Nonzero entries of row `r` in increasing column order.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        let cols_n = self.cols();
        type Slices<'a> = (Option<&'a [Scalar]>, Option<(&'a [usize], &'a [Scalar])>);
        let (dense, sparse): Slices<'_> = match &self.storage {
            Storage::Dense(data) => (Some(&data[r * cols_n..(r + 1) * cols_n]), None),
            Storage::Sparse {
                row_ptr,
                cols,
                vals,
            } => {
                let (lo, hi) = (row_ptr[r], row_ptr[r + 1]);
                (None, Some((&cols[lo..hi], &vals[lo..hi])))
            }
        };
        let d = dense
            .into_iter()
            .flat_map(|row| row.iter().copied().enumerate().filter(|(_, v)| *v != ZERO));
        let s = sparse
            .into_iter()
            .flat_map(|(c, v)| c.iter().copied().zip(v.iter().copied()));
        d.chain(s)
    }

    /// All nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, Scalar)> + '_ {
        (0..self.rows()).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    /// Column `c`, i.e. the image of the `c`-th basis tensor.
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.get(r, c)).collect()
    }

    /// Returns a copy with entry `(r, c)` replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: Scalar) -> Result<Self> {
        if r >= self.rows() || c >= self.cols() {
            return Err(Error::InvalidArgument(format!(
                "entry ({r}, {c}) outside {}",
                self.shape
            )));
        }
        let mut entries: Vec<_> = self
            .nonzeros()
            .filter(|&(i, j, _)| (i, j) != (r, c))
            .collect();
        entries.push((r, c, value));
        Self::from_triplets(self.dim(), self.arity_in(), self.arity_out(), entries)
    }

    pub fn to_sparse(&self) -> Self {
        let mut row_ptr = vec![0];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for r in 0..self.rows() {
            for (c, v) in self.row(r) {
                cols.push(c);
                vals.push(v);
            }
            row_ptr.push(cols.len());
        }
        MultiOp {
            shape: self.shape,
            storage: Storage::Sparse {
                row_ptr,
                cols,
                vals,
            },
        }
    }

    pub fn to_dense(&self) -> Self {
        let cols = self.cols();
        let mut data = vec![ZERO; self.rows() * cols];
        for (r, c, v) in self.nonzeros() {
            data[r * cols + c] = v;
        }
        MultiOp {
            shape: self.shape,
            storage: Storage::Dense(data),
        }
    }

    /// Composition `self ∘ g` (apply `g` first).
    pub fn compose(&self, g: &MultiOp) -> Result<Self> {
        if self.dim() != g.dim() || self.arity_in() != g.arity_out() {
            return Err(Error::ShapeMismatch {
                op: "compose",
                left: self.shape,
                right: g.shape,
            });
        }
        let shape = Shape::new(self.dim(), g.arity_in(), self.arity_out());
        let (rows, cols) = (shape.rows(), shape.cols());
        let mut b = RowBuilder::new(rows, cols);
        let mut acc = vec![ZERO; cols];
        for r in 0..rows {
            acc.fill(ZERO);
            for (k, v) in self.row(r) {
                for (c, w) in g.row(k) {
                    acc[c] += v * w;
                }
            }
            b.push_dense_row(&acc);
        }
        Ok(b.finish(shape))
    }

    /// Tensor (Kronecker) product `self ⊗ g`.
    pub fn tensor(&self, g: &MultiOp) -> Result<Self> {
        if self.dim() != g.dim() {
            return Err(Error::DimMismatch {
                op: "tensor",
                left: self.dim(),
                right: g.dim(),
            });
        }
        let shape = Shape::new(
            self.dim(),
            self.arity_in() + g.arity_in(),
            self.arity_out() + g.arity_out(),
        );
        let (rows, cols) = (shape.rows(), shape.cols());
        let gc = g.cols();
        let mut b = RowBuilder::new(rows, cols);
        let mut buf = vec![ZERO; cols];
        for rf in 0..self.rows() {
            for rg in 0..g.rows() {
                buf.fill(ZERO);
                for (cf, v) in self.row(rf) {
                    for (cg, w) in g.row(rg) {
                        buf[cf * gc + cg] = v * w;
                    }
                }
                b.push_dense_row(&buf);
            }
        }
        Ok(b.finish(shape))
    }

    /// `id^left ⊗ self ⊗ id^right`, materialized.
    pub fn padded(&self, left: usize, right: usize) -> Self {
        let mut out = self.clone();
        if left > 0 {
            out = MultiOp::identity(self.dim(), left)
                .tensor(&out)
                .expect("same dimension");
        }
        if right > 0 {
            out = out
                .tensor(&MultiOp::identity(self.dim(), right))
                .expect("same dimension");
        }
        out
    }

    /// Largest entrywise modulus of `self − g`.
    pub fn residual(&self, g: &MultiOp) -> Result<f64> {
        if self.shape != g.shape {
            return Err(Error::ShapeMismatch {
                op: "residual",
                left: self.shape,
                right: g.shape,
            });
        }
        let mut worst = 0.0f64;
        let mut buf = vec![ZERO; self.cols()];
        for r in 0..self.rows() {
            buf.fill(ZERO);
            for (c, v) in self.row(r) {
                buf[c] += v;
            }
            for (c, v) in g.row(r) {
                buf[c] -= v;
            }
            for v in &buf {
                worst = worst.max(v.norm());
            }
        }
        Ok(worst)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.nonzeros().fold(0.0, |m, (_, _, v)| m.max(v.norm()))
    }

    /// Induced ∞-norm (maximum absolute row sum).
    pub fn row_sum_norm(&self) -> f64 {
        (0..self.rows())
            .map(|r| self.row(r).map(|(_, v)| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, k: Scalar) -> Self {
        let entries = self.nonzeros().map(|(r, c, v)| (r, c, v * k));
        Self::from_triplets(self.dim(), self.arity_in(), self.arity_out(), entries)
            .expect("scaling keeps shape")
    }

    pub fn add(&self, g: &MultiOp) -> Result<Self> {
        if self.shape != g.shape {
            return Err(Error::ShapeMismatch {
                op: "add",
                left: self.shape,
                right: g.shape,
            });
        }
        Self::from_triplets(
            self.dim(),
            self.arity_in(),
            self.arity_out(),
            self.nonzeros().chain(g.nonzeros()),
        )
    }

    pub fn sub(&self, g: &MultiOp) -> Result<Self> {
        self.add(&g.scale(-ONE))
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.arity_in() != self.arity_out() {
            return Err(Error::NotSquare {
                op,
                shape: self.shape,
            });
        }
        Ok(())
    }

    /// Inverse together with the ∞-norm condition estimate `‖f‖·‖f⁻¹‖`.
    ///
    /// Gauss–Jordan elimination with partial pivoting. An exactly zero pivot
    /// or a condition estimate above [`CONDITION_LIMIT`] is reported as
    /// [`Error::Singular`].
    pub fn inverse_with_condition(&self) -> Result<(Self, f64)> {
        self.require_square("invert")?;
        let n = self.rows();
        let mut a = vec![ZERO; n * n];
        for (r, c, v) in self.nonzeros() {
            a[r * n + c] = v;
        }
        let mut inv = vec![ZERO; n * n];
        for i in 0..n {
            inv[i * n + i] = ONE;
        }
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
                .expect("non-empty range");
            if a[pivot * n + col].norm() == 0.0 {
                return Err(Error::Singular {
                    condition: f64::INFINITY,
                });
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let p = ONE / a[col * n + col];
            for k in 0..n {
                a[col * n + k] *= p;
                inv[col * n + k] *= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == ZERO {
                    continue;
                }
                for k in 0..n {
                    let (ak, ik) = (a[col * n + k], inv[col * n + k]);
                    a[r * n + k] -= f * ak;
                    inv[r * n + k] -= f * ik;
                }
            }
        }
        let inverse = Self::from_triplets(
            self.dim(),
            self.arity_in(),
            self.arity_out(),
            inv.iter()
                .enumerate()
                .filter(|(_, v)| **v != ZERO)
                .map(|(k, &v)| (k / n, k % n, v)),
        )
        .map_err(|_| Error::Singular {
            condition: f64::INFINITY,
        })?;
        let condition = self.row_sum_norm() * inverse.row_sum_norm();
        if !condition.is_finite() || condition > CONDITION_LIMIT {
            return Err(Error::Singular { condition });
        }
        Ok((inverse, condition))
    }

    pub fn invert(&self) -> Result<Self> {
        self.inverse_with_condition().map(|(inv, _)| inv)
    }

    /// Integer power of a square operator; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<Self> {
        self.require_square("pow")?;
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut out = MultiOp::identity(self.dim(), self.arity_in());
        for _ in 0..n.unsigned_abs() {
            out = out.compose(&base)?;
        }
        Ok(out)
    }

    /// Wraps the operator as a factor `id^left ⊗ self ⊗ id^right` for [`eval`].
    pub fn at(&self, left: usize, right: usize) -> Factor<'_> {
        Factor::new(self, left, right)
    }
}

impl PartialEq for MultiOp {
    /// Exact entrywise equality, independent of storage layout.
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.residual(other).map(|r| r == 0.0).unwrap_or(false)
    }
}

/// Composition of a sequence of operators, leftmost applied last.
pub fn compose_all(ops: &[&MultiOp]) -> Result<MultiOp> {
    let factors: Vec<Factor<'_>> = ops.iter().map(|op| Factor::from(*op)).collect();
    eval(&factors)
}

/// Tensor product of a sequence of operators.
pub fn tensor_all(ops: &[&MultiOp]) -> Result<MultiOp> {
    let (first, rest) = ops
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty tensor product".into()))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, op| acc.tensor(op))
}
