//! Test-side oracle: structure-constant formulas written as explicit index
//! sums over plain arrays, sharing no evaluation code with the library.

#![allow(dead_code)]

use braidcheck::spec::{QGSpec, Structure};
use braidcheck::MultiOp;
use num_complex::Complex64 as C;

pub type Mat = Vec<Vec<C>>;

pub fn c(x: f64) -> C {
    C::new(x, 0.0)
}

pub fn dense(op: &MultiOp) -> Mat {
    (0..op.rows())
        .map(|r| (0..op.cols()).map(|col| op.get(r, col)).collect())
        .collect()
}

pub fn from_dense(m: &Mat, dim: usize, arity_in: usize, arity_out: usize) -> MultiOp {
    MultiOp::from_fn(dim, arity_in, arity_out, |r, col| m[r][col])
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![c(0.0); m]; n];
    for i in 0..n {
        for l in 0..k {
            for j in 0..m {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    out
}

pub fn eye(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| c(if i == j { 1.0 } else { 0.0 })).collect())
        .collect()
}

/// Gauss–Jordan with full row search; panics on singular input.
pub fn inverse(a: &Mat) -> Mat {
    let n = a.len();
    let mut m: Mat = a.to_vec();
    let mut inv = eye(n);
    for col in 0..n {
        let p = (col..n)
            .max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))
            .unwrap();
        assert!(m[p][col].norm() > 1e-12, "singular");
        m.swap(col, p);
        inv.swap(col, p);
        let d = m[col][col];
        for j in 0..n {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for i in 0..n {
            if i != col {
                let f = m[i][col];
                for j in 0..n {
                    let (mv, iv) = (m[col][j], inv[col][j]);
                    m[i][j] -= f * mv;
                    inv[i][j] -= f * iv;
                }
            }
        }
    }
    inv
}

pub fn pow(a: &Mat, n: i64) -> Mat {
    let base = if n < 0 { inverse(a) } else { a.clone() };
    (0..n.unsigned_abs()).fold(eye(a.len()), |acc, _| matmul(&acc, &base))
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p - q).norm()))
        .fold(0.0, f64::max)
}

/// Raw structure constants of a spec, indexed by basis labels.
pub struct Raw {
    pub d: usize,
    pub m: Box<dyn Fn(usize, usize, usize) -> C>,
    pub u: Vec<C>,
    pub phi: Box<dyn Fn(usize, usize, usize) -> C>,
    pub eps: Vec<C>,
    pub kappa: Mat,
    /// sigma[p*d+q][a*d+b] is the coefficient of p⊗q in σ(a⊗b)
    pub sigma: Mat,
}

impl Raw {
    pub fn of(s: &QGSpec) -> Raw {
        let d = s.dim();
        let m = dense(s.product());
        let phi = dense(s.coproduct());
        Raw {
            d,
            m: Box::new(move |k, i, j| m[k][i * d + j]),
            u: (0..d).map(|i| s.unit().get(i, 0)).collect(),
            phi: Box::new(move |i, j, k| phi[i * d + j][k]),
            eps: (0..d).map(|i| s.counit().get(0, i)).collect(),
            kappa: dense(s.antipode()),
            sigma: dense(s.braiding()),
        }
    }

    /// τ_{up,ab} = Σ σ_{xy,ab} φ_{uv,x} σ⁻¹_{pq,vy} ε_q
    pub fn tau(&self) -> Mat {
        let d = self.d;
        let si = inverse(&self.sigma);
        let mut t = vec![vec![c(0.0); d * d]; d * d];
        for a in 0..d {
            for b in 0..d {
                for x in 0..d {
                    for y in 0..d {
                        let s = self.sigma[x * d + y][a * d + b];
                        if s == c(0.0) {
                            continue;
                        }
                        for u in 0..d {
                            for v in 0..d {
                                let f = (self.phi)(u, v, x);
                                if f == c(0.0) {
                                    continue;
                                }
                                for p in 0..d {
                                    for q in 0..d {
                                        t[u * d + p][a * d + b] +=
                                            s * f * si[p * d + q][v * d + y] * self.eps[q];
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// The mirrored τ expression: τ_{qv,ab} = Σ σ_{xy,ab} φ_{uv,y} σ⁻¹_{pq,xu} ε_p
    pub fn tau_mirror(&self) -> Mat {
        let d = self.d;
        let si = inverse(&self.sigma);
        let mut t = vec![vec![c(0.0); d * d]; d * d];
        for a in 0..d {
            for b in 0..d {
                for x in 0..d {
                    for y in 0..d {
                        let s = self.sigma[x * d + y][a * d + b];
                        for u in 0..d {
                            for v in 0..d {
                                let f = (self.phi)(u, v, y);
                                for p in 0..d {
                                    for q in 0..d {
                                        t[q * d + v][a * d + b] +=
                                            s * f * si[p * d + q][x * d + u] * self.eps[p];
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// σ_n = (στ⁻¹)^{n−1}σ by plain matrix powers.
    pub fn sigma_n(&self, n: i64) -> Mat {
        let st = matmul(&self.sigma, &inverse(&self.tau()));
        matmul(&pow(&st, n - 1), &self.sigma)
    }

    /// m_n = m σ_n⁻¹ σ as a d × d² matrix.
    pub fn m_n(&self, n: i64) -> Mat {
        let d = self.d;
        let x = matmul(&inverse(&self.sigma_n(n)), &self.sigma);
        let mut out = vec![vec![c(0.0); d * d]; d];
        for (k, row) in out.iter_mut().enumerate() {
            for (col, slot) in row.iter_mut().enumerate() {
                for (r, xr) in x.iter().enumerate() {
                    *slot += (self.m)(k, r / d, r % d) * xr[col];
                }
            }
        }
        out
    }

    /// Residual of φm = (m⊗m)(id⊗σ⊗id)(φ⊗φ), entry by entry.
    pub fn multiplicativity_residual(&self) -> f64 {
        let d = self.d;
        let mut worst: f64 = 0.0;
        for a in 0..d {
            for b in 0..d {
                for p in 0..d {
                    for q in 0..d {
                        let mut lhs = c(0.0);
                        for k in 0..d {
                            lhs += (self.m)(k, a, b) * (self.phi)(p, q, k);
                        }
                        let mut rhs = c(0.0);
                        for a1 in 0..d {
                            for a2 in 0..d {
                                let fa = (self.phi)(a1, a2, a);
                                if fa == c(0.0) {
                                    continue;
                                }
                                for b1 in 0..d {
                                    for b2 in 0..d {
                                        let fb = (self.phi)(b1, b2, b);
                                        if fb == c(0.0) {
                                            continue;
                                        }
                                        for x in 0..d {
                                            for y in 0..d {
                                                let s = self.sigma[x * d + y][a2 * d + b1];
                                                rhs += fa
                                                    * fb
                                                    * s
                                                    * (self.m)(p, a1, x)
                                                    * (self.m)(q, y, b2);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
        worst
    }
}

/// Transports every structure tensor along the basis change `g`.
pub fn change_basis(s: &QGSpec, g: &Mat) -> QGSpec {
    let d = s.dim();
    let gi = inverse(g);
    let kron = |a: &Mat, b: &Mat| -> Mat {
        let (n, m) = (a.len(), b.len());
        let mut out = vec![vec![c(0.0); n * m]; n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    };
    let (g2, gi2) = (kron(g, g), kron(&gi, &gi));
    let t = |op: &MultiOp, left: &Mat, right: &Mat, p: usize, q: usize| {
        from_dense(&matmul(&matmul(left, &dense(op)), right), d, p, q)
    };
    let one = eye(1);
    QGSpec::new(
        s.labels().to_vec(),
        Structure {
            product: t(s.product(), g, &gi2, 2, 1),
            unit: t(s.unit(), g, &one, 0, 1),
            coproduct: t(s.coproduct(), &g2, &gi, 1, 2),
            counit: t(s.counit(), &one, &gi, 1, 0),
            antipode: t(s.antipode(), g, &gi, 1, 1),
            braiding: t(s.braiding(), &g2, &gi2, 2, 2),
        },
        s.tol(),
    )
    .unwrap()
}
