//! Built-in instances, generated from their defining relations.

use num_complex::Complex64;

use super::{QGSpec, Structure, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::tensor::{encode, MultiOp, Scalar};

fn re(x: f64) -> Scalar {
    Complex64::new(x, 0.0)
}

/// Collects structure constants addressed by (out, in) multi-indices.
struct Constants {
    dim: usize,
    arity_in: usize,
    arity_out: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl Constants {
    fn new(dim: usize, arity_in: usize, arity_out: usize) -> Self {
        Constants {
            dim,
            arity_in,
            arity_out,
            entries: Vec::new(),
        }
    }

    fn set(&mut self, out: &[usize], input: &[usize], value: f64) -> &mut Self {
        debug_assert_eq!(out.len(), self.arity_out);
        debug_assert_eq!(input.len(), self.arity_in);
        self.entries
            .push((encode(out, self.dim), encode(input, self.dim), re(value)));
        self
    }

    fn build(self) -> MultiOp {
        MultiOp::from_triplets(self.dim, self.arity_in, self.arity_out, self.entries)
            .expect("built-in constants are in range")
    }
}

/// Group algebra `ℂ[G]` with `φ(g) = g⊗g`, `ε(g) = 1`, `κ(g) = g⁻¹` and the
/// ordinary transposition as braiding.
///
/// `cayley[a][b]` is the index of `a·b`. The table is checked to be a group.
pub fn group_algebra(cayley: &[Vec<usize>], inverse: &[usize], identity: usize) -> Result<QGSpec> {
    let labels = (0..cayley.len()).map(|i| format!("g{i}")).collect();
    group_algebra_with_labels(labels, cayley, inverse, identity)
}

pub fn group_algebra_with_labels(
    labels: Vec<String>,
    cayley: &[Vec<usize>],
    inverse: &[usize],
    identity: usize,
) -> Result<QGSpec> {
    let d = cayley.len();
    validate_group(cayley, inverse, identity)?;
    if labels.len() != d {
        return Err(Error::InvalidArgument(format!(
            "{} labels for a group of order {d}",
            labels.len()
        )));
    }

    let mut m = Constants::new(d, 2, 1);
    let mut phi = Constants::new(d, 1, 2);
    let mut eps = Constants::new(d, 1, 0);
    let mut kappa = Constants::new(d, 1, 1);
    for (a, row) in cayley.iter().enumerate() {
        for (b, &ab) in row.iter().enumerate() {
            m.set(&[ab], &[a, b], 1.0);
        }
        phi.set(&[a, a], &[a], 1.0);
        eps.set(&[], &[a], 1.0);
        kappa.set(&[inverse[a]], &[a], 1.0);
    }
    let mut unit = Constants::new(d, 0, 1);
    unit.set(&[identity], &[], 1.0);

    QGSpec::new(
        labels,
        Structure {
            product: m.build(),
            unit: unit.build(),
            coproduct: phi.build(),
            counit: eps.build(),
            antipode: kappa.build(),
            braiding: MultiOp::flip(d),
        },
        DEFAULT_TOL,
    )
}

fn validate_group(cayley: &[Vec<usize>], inverse: &[usize], e: usize) -> Result<()> {
    let d = cayley.len();
    if d == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if let Some((a, row)) = cayley.iter().enumerate().find(|(_, row)| row.len() != d) {
        return Err(Error::NotAGroup(format!(
            "row {a} has {} entries, expected {d}",
            row.len()
        )));
    }
    if let Some((a, b)) = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .find(|&(a, b)| cayley[a][b] >= d)
    {
        return Err(Error::NotAGroup(format!("product ({a},{b}) out of range")));
    }
    if inverse.len() != d || e >= d {
        return Err(Error::NotAGroup(
            "inverse table or identity index out of range".into(),
        ));
    }
    for a in 0..d {
        if cayley[e][a] != a || cayley[a][e] != a {
            return Err(Error::NotAGroup(format!("{e} is not an identity for {a}")));
        }
        let ai = inverse[a];
        if ai >= d || cayley[a][ai] != e || cayley[ai][a] != e {
            return Err(Error::NotAGroup(format!("{ai} is not an inverse of {a}")));
        }
    }
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails for ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn z2() -> QGSpec {
    group_algebra_with_labels(
        vec!["e".into(), "g".into()],
        &[vec![0, 1], vec![1, 0]],
        &[0, 1],
        0,
    )
    .expect("Z_2 is a group")
}

/// `ℂ[S_n]` with elements ordered lexicographically as permutations.
pub fn symmetric_group(n: usize) -> QGSpec {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                    index(&pq)
                })
                .collect()
        })
        .collect();
    let inverse: Vec<usize> = perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            index(&inv)
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>())
        .collect();
    group_algebra_with_labels(labels, &table, &inverse, 0).expect("S_n is a group")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Sweedler's four-dimensional Hopf algebra on `{1, g, x, gx}` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, flip braiding.
pub fn sweedler() -> QGSpec {
    // Elements of the basis are words g^a x^b, encoded as (a, b).
    const BASIS: [(u8, u8); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let idx = |w: (u8, u8)| BASIS.iter().position(|&b| b == w).expect("basis word");
    let d = 4;

    // g^a x^b · g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}, zero when b+d ≥ 2.
    let mut m = Constants::new(d, 2, 1);
    for (i, &(a, b)) in BASIS.iter().enumerate() {
        for (j, &(c, dd)) in BASIS.iter().enumerate() {
            if b + dd >= 2 {
                continue;
            }
            let sign = if b * c % 2 == 1 { -1.0 } else { 1.0 };
            m.set(&[idx(((a + c) % 2, b + dd))], &[i, j], sign);
        }
    }

    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut unit = Constants::new(d, 0, 1);
    unit.set(&[one], &[], 1.0);

    let mut phi = Constants::new(d, 1, 2);
    phi.set(&[one, one], &[one], 1.0)
        .set(&[g, g], &[g], 1.0)
        .set(&[x, one], &[x], 1.0)
        .set(&[g, x], &[x], 1.0)
        // φ(gx) = φ(g)φ(x) = gx⊗g + 1⊗gx
        .set(&[gx, g], &[gx], 1.0)
        .set(&[one, gx], &[gx], 1.0);

    let mut eps = Constants::new(d, 1, 0);
    eps.set(&[], &[one], 1.0).set(&[], &[g], 1.0);

    let mut kappa = Constants::new(d, 1, 1);
    kappa
        .set(&[one], &[one], 1.0)
        .set(&[g], &[g], 1.0)
        .set(&[gx], &[x], -1.0)
        // κ(gx) = κ(x)κ(g) = −gx·g = x
        .set(&[x], &[gx], 1.0);

    QGSpec::new(
        ["1", "g", "x", "gx"].map(String::from).to_vec(),
        Structure {
            product: m.build(),
            unit: unit.build(),
            coproduct: phi.build(),
            counit: eps.build(),
            antipode: kappa.build(),
            braiding: MultiOp::flip(d),
        },
        DEFAULT_TOL,
    )
    .expect("Sweedler algebra is well shaped")
}

/// Two-dimensional algebra on `{1, e}` with `e² = square·1`, primitive `e`,
/// and braiding `σ(e⊗e) = −e⊗e − square·1⊗1`, flip on the other basis
/// tensors.
fn rank_one(square: f64) -> QGSpec {
    let (one, e) = (0, 1);
    let d = 2;

    let mut m = Constants::new(d, 2, 1);
    m.set(&[one], &[one, one], 1.0)
        .set(&[e], &[one, e], 1.0)
        .set(&[e], &[e, one], 1.0);
    if square != 0.0 {
        m.set(&[one], &[e, e], square);
    }

    let mut unit = Constants::new(d, 0, 1);
    unit.set(&[one], &[], 1.0);

    let mut phi = Constants::new(d, 1, 2);
    phi.set(&[one, one], &[one], 1.0)
        .set(&[e, one], &[e], 1.0)
        .set(&[one, e], &[e], 1.0);

    let mut eps = Constants::new(d, 1, 0);
    eps.set(&[], &[one], 1.0);

    let mut kappa = Constants::new(d, 1, 1);
    kappa.set(&[one], &[one], 1.0).set(&[e], &[e], -1.0);

    let mut sigma = Constants::new(d, 2, 2);
    sigma
        .set(&[one, one], &[one, one], 1.0)
        .set(&[e, one], &[one, e], 1.0)
        .set(&[one, e], &[e, one], 1.0)
        .set(&[e, e], &[e, e], -1.0);
    if square != 0.0 {
        sigma.set(&[one, one], &[e, e], -square);
    }

    QGSpec::new(
        vec!["1".into(), "e".into()],
        Structure {
            product: m.build(),
            unit: unit.build(),
            coproduct: phi.build(),
            counit: eps.build(),
            antipode: kappa.build(),
            braiding: sigma.build(),
        },
        DEFAULT_TOL,
    )
    .expect("rank-one instance is well shaped")
}

/// Rank-one braided Clifford algebra: `e² = 1`, `σ(e⊗e) = −e⊗e − 1⊗1`.
/// Its counit is not multiplicative.
pub fn clifford_rank1() -> QGSpec {
    rank_one(1.0)
}

/// Grassmann line: `e² = 0` with the super-flip `σ(e⊗e) = −e⊗e`.
pub fn superline() -> QGSpec {
    rank_one(0.0)
}

pub fn builtin_names() -> &'static [&'static str] {
    &["z2", "s3", "sweedler", "clifford_rank1", "superline"]
}

pub fn builtin(name: &str) -> Result<QGSpec> {
    match name {
        "z2" => Ok(z2()),
        "s3" => Ok(symmetric_group(3)),
        "sweedler" => Ok(sweedler()),
        "clifford_rank1" => Ok(clifford_rank1()),
        "superline" => Ok(superline()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
