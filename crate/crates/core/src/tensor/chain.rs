//! Evaluation of composites `f_1 ∘ f_2 ∘ … ∘ f_k` where each factor is an
//! operator padded with identities on either side.
//!
//! Padded factors are never expanded into their Kronecker form. Applying
//! `id^l ⊗ f ⊗ id^r` to a matrix only touches the rows that `f` mixes, which
//! keeps identities on `A^⊗4` cheap even at `d = 6`. The association order
//! is chosen by the usual matrix-chain dynamic program over estimated costs.

use super::{MultiOp, RowBuilder, Shape, ZERO};
use crate::error::{Error, Result};

/// `id^left ⊗ op ⊗ id^right`.
#[derive(Clone, Copy, Debug)]
pub struct Factor<'a> {
    op: &'a MultiOp,
    left: usize,
    right: usize,
}

impl<'a> Factor<'a> {
    pub fn new(op: &'a MultiOp, left: usize, right: usize) -> Self {
        Factor { op, left, right }
    }

    pub fn shape(&self) -> Shape {
        Shape::new(
            self.op.dim(),
            self.left + self.op.arity_in() + self.right,
            self.left + self.op.arity_out() + self.right,
        )
    }

    fn outer(&self) -> (usize, usize) {
        let d = self.op.dim();
        (d.pow(self.left as u32), d.pow(self.right as u32))
    }

    fn materialize(&self) -> MultiOp {
        self.op.padded(self.left, self.right)
    }

    /// `(id^l ⊗ f ⊗ id^r) · x`
    fn apply_left(&self, x: &MultiOp) -> MultiOp {
        let shape = Shape::new(self.op.dim(), x.arity_in(), self.shape().arity_out);
        let (rows, cols) = (shape.rows(), shape.cols());
        let (outer_l, outer_r) = self.outer();
        let (f_rows, f_cols) = (self.op.rows(), self.op.cols());
        let mut b = RowBuilder::new(rows, cols);
        let mut acc = vec![ZERO; cols];
        for a in 0..outer_l {
            for i in 0..f_rows {
                for bb in 0..outer_r {
                    acc.fill(ZERO);
                    for (j, v) in self.op.row(i) {
                        let src = (a * f_cols + j) * outer_r + bb;
                        for (c, w) in x.row(src) {
                            acc[c] += v * w;
                        }
                    }
                    b.push_dense_row(&acc);
                }
            }
        }
        b.finish(shape)
    }

    /// `x · (id^l ⊗ f ⊗ id^r)`
    fn apply_right(&self, x: &MultiOp) -> MultiOp {
        let shape = Shape::new(self.op.dim(), self.shape().arity_in, x.arity_out());
        let (rows, cols) = (shape.rows(), shape.cols());
        let (_, outer_r) = self.outer();
        let (f_rows, f_cols) = (self.op.rows(), self.op.cols());
        let mut b = RowBuilder::new(rows, cols);
        let mut acc = vec![ZERO; cols];
        for r in 0..rows {
            acc.fill(ZERO);
            for (col, v) in x.row(r) {
                let bb = col % outer_r;
                let i = (col / outer_r) % f_rows;
                let a = col / outer_r / f_rows;
                for (j, w) in self.op.row(i) {
                    acc[(a * f_cols + j) * outer_r + bb] += v * w;
                }
            }
            b.push_dense_row(&acc);
        }
        b.finish(shape)
    }
}

impl<'a> From<&'a MultiOp> for Factor<'a> {
    fn from(op: &'a MultiOp) -> Self {
        Factor::new(op, 0, 0)
    }
}

enum Operand<'a> {
    Leaf(Factor<'a>),
    Full(MultiOp),
}

impl Operand<'_> {
    fn into_op(self) -> MultiOp {
        match self {
            Operand::Leaf(f) => f.materialize(),
            Operand::Full(m) => m,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kernel {
    PaddedLeft,
    PaddedRight,
    Dense,
}

/// Cheapest kernel and its estimated cost for `L · R`.
fn product_cost(left: &[Factor<'_>], right: &[Factor<'_>]) -> (f64, Kernel) {
    let m = left[0].shape().rows() as f64;
    let n = right[0].shape().rows() as f64;
    let p = right[right.len() - 1].shape().cols() as f64;
    let mut best = (m * n * p, Kernel::Dense);
    if left.len() == 1 {
        let cost = m * left[0].op.cols() as f64 * p;
        if cost < best.0 {
            best = (cost, Kernel::PaddedLeft);
        }
    }
    if right.len() == 1 {
        let cost = m * p * right[0].op.rows() as f64;
        if cost < best.0 {
            best = (cost, Kernel::PaddedRight);
        }
    }
    best
}

/// Evaluates the composite of `factors`, leftmost applied last.
pub fn eval(factors: &[Factor<'_>]) -> Result<MultiOp> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidArgument("empty composition".into()));
    };
    for w in factors.windows(2) {
        let (l, r) = (w[0].shape(), w[1].shape());
        if l.dim != r.dim || l.arity_in != r.arity_out {
            return Err(Error::ShapeMismatch {
                op: "compose",
                left: l,
                right: r,
            });
        }
    }
    if factors.len() == 1 {
        return Ok(first.materialize());
    }

    let k = factors.len();
    let mut cost = vec![vec![0.0f64; k]; k];
    let mut split = vec![vec![(0usize, Kernel::Dense); k]; k];
    for len in 2..=k {
        for i in 0..=k - len {
            let j = i + len - 1;
            let mut best = (f64::INFINITY, 0, Kernel::Dense);
            for s in i..j {
                let (mul, kernel) = product_cost(&factors[i..=s], &factors[s + 1..=j]);
                let total = cost[i][s] + cost[s + 1][j] + mul;
                if total < best.0 {
                    best = (total, s, kernel);
                }
            }
            cost[i][j] = best.0;
            split[i][j] = (best.1, best.2);
        }
    }
    Ok(evaluate(factors, &split, 0, k - 1).into_op())
}

fn evaluate<'a>(
    factors: &[Factor<'a>],
    split: &[Vec<(usize, Kernel)>],
    i: usize,
    j: usize,
) -> Operand<'a> {
    if i == j {
        return Operand::Leaf(factors[i]);
    }
    let (s, kernel) = split[i][j];
    let left = evaluate(factors, split, i, s);
    let right = evaluate(factors, split, s + 1, j);
    let out = match (kernel, left, right) {
        (Kernel::PaddedLeft, Operand::Leaf(f), r) => f.apply_left(&r.into_op()),
        (Kernel::PaddedRight, l, Operand::Leaf(f)) => f.apply_right(&l.into_op()),
        (_, l, r) => l
            .into_op()
            .compose(&r.into_op())
            .expect("shapes validated before evaluation"),
    };
    Operand::Full(out)
}
