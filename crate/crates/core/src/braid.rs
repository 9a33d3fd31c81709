//! Braid systems, the σ_n family, the deformed groups `G_n` and the
//! Majid-type classification.

use std::fmt::Write as _;

use crate::axioms::{bijectivity_item, check_all};
use crate::catalog::{braid, run_catalog};
use crate::derived::{check_derived, DerivedSet};
use crate::error::{Error, Result};
use crate::report::{format_residual, sides, CheckItem, CheckReport};
use crate::spec::{QGSpec, Structure};
use crate::tensor::{eval, MultiOp};

/// Members whose ∞-norm exceeds this are taken as evidence of an unbounded
/// system.
pub const NORM_BOUND: f64 = 1e6;

/// Quadruples sampled per round for the commutation check.
const A4_SAMPLES: usize = 256;

/// Braid-system axioms for `ops`, using the spec's product and unit: the mixed braid
/// relation for every ordered triple, both hexagons and both unit laws per
/// member, and bijectivity.
pub fn is_braid_system(spec: &QGSpec, ops: &[MultiOp]) -> CheckReport {
    let tol = spec.tol();
    let mut r = CheckReport::new();
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            for (k, c) in ops.iter().enumerate() {
                r.push(CheckItem::compare(
                    format!("A1[{i},{j},{k}]"),
                    "(α⊗id)(id⊗β)(γ⊗id) = (id⊗γ)(β⊗id)(id⊗α)",
                    braid(a, b, c),
                    tol,
                ));
            }
        }
    }
    for (i, a) in ops.iter().enumerate() {
        r.extend_prefixed(&format!("[{i}]"), member_checks(spec, a));
    }
    r
}

fn member_checks(spec: &QGSpec, a: &MultiOp) -> CheckReport {
    let (m, u, tol) = (spec.product(), spec.unit(), spec.tol());
    let id = MultiOp::identity(spec.dim(), 1);
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "A2",
        "α(id⊗m) = (m⊗id)(id⊗α)(α⊗id)",
        sides(
            eval(&[a.into(), m.at(1, 0)]),
            eval(&[m.at(0, 1), a.at(1, 0), a.at(0, 1)]),
        ),
        tol,
    ));
    r.push(CheckItem::compare(
        "A3",
        "α(m⊗id) = (id⊗m)(α⊗id)(id⊗α)",
        sides(
            eval(&[a.into(), m.at(0, 1)]),
            eval(&[m.at(1, 0), a.at(0, 1), a.at(1, 0)]),
        ),
        tol,
    ));
    r.push(CheckItem::compare(
        "unit.left",
        "α(1⊗a) = a⊗1",
        sides(eval(&[a.into(), u.at(0, 1)]), id.tensor(u)),
        tol,
    ));
    r.push(CheckItem::compare(
        "unit.right",
        "α(a⊗1) = 1⊗a",
        sides(eval(&[a.into(), u.at(1, 0)]), u.tensor(&id)),
        tol,
    ));
    r.push(bijectivity_item("bij", "α is bijective", a, tol));
    r
}

/// Outcome of iterating `F_{n+1} = {αβ⁻¹γ}`.
#[derive(Clone, Debug)]
pub struct BraidSystem {
    pub dim: usize,
    pub ops: Vec<MultiOp>,
    pub closed: bool,
    /// Rounds that produced new members.
    pub depth_reached: usize,
    /// Member count before the first round and after each round.
    pub sizes: Vec<usize>,
    pub unbounded: bool,
    /// Per-round A1–A4 certification of the members found so far.
    pub certification: CheckReport,
}

impl BraidSystem {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "members: {} (sizes per round: {:?})",
            self.ops.len(),
            self.sizes
        );
        let verdict = if self.closed {
            format!("closed at depth {}", self.depth_reached)
        } else if self.unbounded {
            format!("unbounded (member norm above {NORM_BOUND:e})")
        } else {
            format!("not closed after depth {}", self.depth_reached)
        };
        let _ = writeln!(out, "closure: {verdict}");
        out
    }
}

fn contains(ops: &[MultiOp], x: &MultiOp, tol: f64) -> Result<bool> {
    for op in ops {
        if op.residual(x)? <= tol {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Deduplicates `ops` up to `tol`, keeping first occurrences.
pub fn dedup(ops: &[MultiOp], tol: f64) -> Result<Vec<MultiOp>> {
    let mut out: Vec<MultiOp> = Vec::new();
    for op in ops {
        if !contains(&out, op, tol)? {
            out.push(op.clone());
        }
    }
    Ok(out)
}

/// Iterates the completion up to `max_depth` rounds. Members must be
/// invertible; each round is certified before the next one starts.
pub fn complete(spec: &QGSpec, ops: &[MultiOp], max_depth: usize) -> Result<BraidSystem> {
    let tol = spec.tol();
    let mut members = dedup(ops, tol)?;
    let mut inverses = members
        .iter()
        .map(MultiOp::invert)
        .collect::<Result<Vec<_>>>()?;
    let mut sizes = vec![members.len()];
    let mut certification = CheckReport::new();
    certification.extend_prefixed("round0/", certify_round(spec, &members, &inverses));
    let mut closed = false;
    let mut unbounded = false;
    let mut depth = 0;

    for round in 1..=max_depth {
        let mut fresh = Vec::new();
        for a in &members {
            for b_inv in &inverses {
                let ab = a.compose(b_inv)?;
                for c in &members {
                    let x = ab.compose(c)?;
                    if !contains(&members, &x, tol)? && !contains(&fresh, &x, tol)? {
                        fresh.push(x);
                    }
                }
            }
        }
        if fresh.is_empty() {
            closed = true;
            break;
        }
        depth = round;
        unbounded = fresh.iter().any(|x| x.row_sum_norm() > NORM_BOUND);
        for x in &fresh {
            inverses.push(x.invert()?);
        }
        members.extend(fresh);
        sizes.push(members.len());
        certification.extend_prefixed(
            &format!("round{round}/"),
            certify_round(spec, &members, &inverses),
        );
        if unbounded {
            break;
        }
    }
    Ok(BraidSystem {
        dim: spec.dim(),
        ops: members,
        closed,
        depth_reached: depth,
        sizes,
        unbounded,
        certification,
    })
}

/// Aggregated A1–A4 residuals over the current members.
fn certify_round(spec: &QGSpec, ops: &[MultiOp], inverses: &[MultiOp]) -> CheckReport {
    let tol = spec.tol();
    let n = ops.len();
    let mut r = CheckReport::new();

    let a1 = worst((0..n * n * n).map(|t| {
        let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
        braid(&ops[i], &ops[j], &ops[k]).and_then(|(l, rr)| l.residual(&rr))
    }));
    r.push(residual_item(
        "A1",
        "mixed braid relation, all triples",
        a1,
        tol,
    ));

    let hex = |id: &str| -> Result<f64> {
        worst(ops.iter().map(|a| {
            member_checks(spec, a)
                .get(id)
                .map(|i| i.residual)
                .ok_or_else(|| Error::InvalidArgument(id.into()))
        }))
    };
    r.push(residual_item(
        "A2",
        "α(id⊗m) = (m⊗id)(id⊗α)(α⊗id)",
        hex("A2"),
        tol,
    ));
    r.push(residual_item(
        "A3",
        "α(m⊗id) = (id⊗m)(α⊗id)(id⊗α)",
        hex("A3"),
        tol,
    ));

    let quads = n.pow(4);
    let step = (quads / A4_SAMPLES).max(1);
    let a4 = worst((0..quads).step_by(step).map(|t| {
        let (i, j, k, l) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let x = ops[i].compose(&inverses[j])?;
        let y = ops[k].compose(&inverses[l])?;
        let (lhs, rhs) = sides(
            eval(&[x.at(0, 1), y.at(1, 0)]),
            eval(&[y.at(1, 0), x.at(0, 1)]),
        )?;
        lhs.residual(&rhs)
    }));
    r.push(residual_item(
        "A4",
        "(αβ⁻¹⊗id)(id⊗γδ⁻¹) = (id⊗γδ⁻¹)(αβ⁻¹⊗id)",
        a4,
        tol,
    ));
    r
}

fn worst(mut items: impl Iterator<Item = Result<f64>>) -> Result<f64> {
    items.try_fold(0.0f64, |acc, r| Ok(acc.max(r?)))
}

fn residual_item(id: &str, reference: &str, residual: Result<f64>, tol: f64) -> CheckItem {
    match residual {
        Ok(x) => CheckItem::measure(id, reference, x, tol),
        Err(e) => CheckItem::failed(id, reference, tol, e.to_string()),
    }
}

/// Index range of σ_n reachable after `depth` completion rounds from
/// `{σ_0, σ_1}`, using `σ_a σ_b⁻¹ σ_c = σ_{a−b+c}`.
pub fn family_range(depth: usize) -> (i64, i64) {
    (0..depth).fold((0, 1), |(lo, hi), _| (2 * lo - hi, 2 * hi - lo))
}

/// σ_n = (στ⁻¹)^{n−1}σ, certified against σ(τ⁻¹σ)^{n−1}.
pub fn sigma_n(spec: &QGSpec, d: &DerivedSet, n: i64) -> Result<MultiOp> {
    let sigma = spec.braiding();
    let left = d.st_inv.pow(n - 1)?.compose(sigma)?;
    let right = sigma.compose(&d.t_inv_s.pow(n - 1)?)?;
    let residual = left.residual(&right)?;
    if residual.is_nan() || residual > spec.tol() {
        return Err(Error::Certification {
            what: format!("agreement of the two expressions for σ_{n}"),
            residual,
            tol: spec.tol(),
        });
    }
    Ok(left)
}

/// For each member, the `n` in `lo..=hi` with σ_n equal to it, if any.
pub fn match_family(
    spec: &QGSpec,
    d: &DerivedSet,
    ops: &[MultiOp],
    (lo, hi): (i64, i64),
) -> Result<Vec<Option<i64>>> {
    let family = (lo..=hi)
        .map(|n| Ok((n, sigma_n(spec, d, n)?)))
        .collect::<Result<Vec<_>>>()?;
    ops.iter()
        .map(|op| {
            for (n, s) in &family {
                if op.residual(s)? <= spec.tol() {
                    return Ok(Some(*n));
                }
            }
            Ok(None)
        })
        .collect()
}

/// σ_1 = σ, σ_0 = τ, the two σ_n expressions agree, and the antipode and
/// coproduct twisting laws of the family hold for all `n, k` in range.
pub fn check_family_identities(spec: &QGSpec, d: &DerivedSet, (lo, hi): (i64, i64)) -> CheckReport {
    let tol = spec.tol();
    let (phi, k) = (spec.coproduct(), spec.antipode());
    let mut r = CheckReport::new();
    let (flo, fhi) = ((2 * lo).min(-hi).min(0), (2 * hi).max(-lo).max(1));
    let family: Vec<(i64, Result<MultiOp>)> =
        (flo..=fhi).map(|n| (n, sigma_n(spec, d, n))).collect();
    let get = |n: i64| -> Result<&MultiOp> {
        match family.iter().find(|(m, _)| *m == n) {
            Some((_, Ok(s))) => Ok(s),
            Some((_, Err(e))) => Err(Error::InvalidArgument(e.to_string())),
            None => sigma_n_missing(n),
        }
    };

    r.push(CheckItem::compare(
        "A6.sigma1",
        "σ_1 = σ",
        get(1).map(|s| (s.clone(), spec.braiding().clone())),
        tol,
    ));
    r.push(CheckItem::compare(
        "A6.sigma0",
        "σ_0 = τ",
        get(0).map(|s| (s.clone(), d.tau.clone())),
        tol,
    ));
    let sigma = spec.braiding();
    for n in lo..=hi {
        r.push(CheckItem::compare(
            format!("A6[{n}]"),
            "(στ⁻¹)^{n−1}σ = σ(τ⁻¹σ)^{n−1}",
            sides(
                d.st_inv.pow(n - 1).and_then(|x| x.compose(sigma)),
                d.t_inv_s.pow(n - 1).and_then(|x| sigma.compose(&x)),
            ),
            tol,
        ));
    }
    for n in lo..=hi {
        r.push(CheckItem::compare(
            format!("A8[{n}]"),
            "σ_n(id⊗κ) = (κ⊗id)σ_{−n}",
            get(n).and_then(|s| {
                let sm = get(-n)?;
                sides(
                    eval(&[s.into(), k.at(1, 0)]),
                    eval(&[k.at(0, 1), sm.into()]),
                )
            }),
            tol,
        ));
        r.push(CheckItem::compare(
            format!("A9[{n}]"),
            "σ_n(κ⊗id) = (id⊗κ)σ_{−n}",
            get(n).and_then(|s| {
                let sm = get(-n)?;
                sides(
                    eval(&[s.into(), k.at(0, 1)]),
                    eval(&[k.at(1, 0), sm.into()]),
                )
            }),
            tol,
        ));
    }
    for n in lo..=hi {
        for j in lo..=hi {
            r.push(CheckItem::compare(
                format!("A10[{n},{j}]"),
                "(φ⊗id)σ_{n+k} = (id⊗σ_k)(σ_n⊗id)(id⊗φ)",
                get(n + j).and_then(|snk| {
                    let (sn, sk) = (get(n)?, get(j)?);
                    sides(
                        eval(&[phi.at(0, 1), snk.into()]),
                        eval(&[sk.at(1, 0), sn.at(0, 1), phi.at(1, 0)]),
                    )
                }),
                tol,
            ));
            r.push(CheckItem::compare(
                format!("A11[{n},{j}]"),
                "(id⊗φ)σ_{n+k} = (σ_k⊗id)(id⊗σ_n)(φ⊗id)",
                get(n + j).and_then(|snk| {
                    let (sn, sk) = (get(n)?, get(j)?);
                    sides(
                        eval(&[phi.at(1, 0), snk.into()]),
                        eval(&[sk.at(0, 1), sn.at(1, 0), phi.at(0, 1)]),
                    )
                }),
                tol,
            ));
        }
    }
    r
}

fn sigma_n_missing<T>(n: i64) -> Result<T> {
    Err(Error::InvalidArgument(format!(
        "σ_{n} outside the computed range"
    )))
}

/// A deformed group together with its certification report.
#[derive(Clone, Debug)]
pub struct GnResult {
    pub n: i64,
    pub spec_n: QGSpec,
    pub report: CheckReport,
}

/// Builds `G_n`: product `mσ_n⁻¹σ`, antipode `(ε⊗κ)σ_n⁻¹σφ`, braiding σ_n,
/// and the original unit, coproduct and counit.
pub fn build_gn(spec: &QGSpec, d: &DerivedSet, n: i64) -> Result<GnResult> {
    let tol = spec.tol();
    let (m, phi, eps, k, sigma) = (
        spec.product(),
        spec.coproduct(),
        spec.counit(),
        spec.antipode(),
        spec.braiding(),
    );
    let sn = sigma_n(spec, d, n)?;
    let sn_inv = sn.invert()?;
    let product = eval(&[m.into(), (&sn_inv).into(), sigma.into()])?;
    let twist = eval(&[(&sn_inv).into(), sigma.into(), phi.into()])?;
    let kappa_l = eval(&[k.into(), eps.at(0, 1), (&twist).into()])?;
    let kappa_r = eval(&[k.into(), eps.at(1, 0), (&twist).into()])?;

    let mut report = CheckReport::new();
    report.push(CheckItem::compare(
        "A13",
        "(ε⊗κ)σ_n⁻¹σφ = (κ⊗ε)σ_n⁻¹σφ",
        Ok((kappa_l.clone(), kappa_r)),
        tol,
    ));
    let untwist = eval(&[(&d.sigma_inv).into(), (&sn).into(), phi.into()])?;
    let x_l = eval(&[eps.at(0, 1), (&untwist).into()])?;
    let x_r = eval(&[eps.at(1, 0), (&untwist).into()])?;
    let cert = x_l
        .residual(&x_r)
        .and_then(|a| Ok(a.max(kappa_l.compose(&x_l)?.residual(k)?)));
    report.push(residual_item(
        "A13.inv",
        "κ_n(ε⊗id)σ⁻¹σ_nφ = κ_n(id⊗ε)σ⁻¹σ_nφ = κ",
        cert,
        tol,
    ));

    let spec_n = QGSpec::new(
        spec.labels().to_vec(),
        Structure {
            product,
            unit: spec.unit().clone(),
            coproduct: phi.clone(),
            counit: eps.clone(),
            antipode: kappa_l,
            braiding: sn,
        },
        tol,
    )?;
    report.extend_prefixed("axioms/", check_all(&spec_n));
    let (dn, derived) = check_derived(&spec_n);
    report.extend_prefixed("derived/", derived);
    if let Some(dn) = dn {
        report.extend_prefixed("catalog/", run_catalog(&spec_n, &dn, None)?);
    }
    Ok(GnResult { n, spec_n, report })
}

/// The four equivalent Majid-type conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub m1: bool,
    pub ml: bool,
    pub mr: bool,
    pub m3: bool,
    /// Residuals in the order M1, ML, MR, M3.
    pub residuals: [f64; 4],
    /// The common verdict, or `None` when the conditions disagree.
    pub majid_type: Option<bool>,
}

impl Classification {
    pub fn to_text(&self) -> String {
        let flags = [
            ("M1", self.m1),
            ("ML", self.ml),
            ("MR", self.mr),
            ("M3", self.m3),
        ];
        match self.majid_type {
            Some(v) => format!("majid_type: {v} (M1=ML=MR=M3={v})\n"),
            None => {
                let parts: Vec<String> = flags
                    .iter()
                    .zip(self.residuals)
                    .map(|((name, v), r)| format!("{name}={v} [{}]", format_residual(r)))
                    .collect();
                format!(
                    "majid_type: mixed ({}); the conditions disagree, so the spec is not a braided quantum group\n",
                    parts.join(" ")
                )
            }
        }
    }

    pub fn to_report(&self, tol: f64) -> CheckReport {
        let names = [
            ("M1", "εm = ε⊗ε"),
            ("ML", "(ε⊗id)σ = id⊗ε"),
            ("MR", "(id⊗ε)σ = ε⊗id"),
            ("M3", "σ = τ"),
        ];
        names
            .iter()
            .zip(self.residuals)
            .map(|((id, reference), r)| CheckItem::measure(*id, *reference, r, tol))
            .collect()
    }
}

/// Evaluates the four conditions. Only τ is needed, so specs whose τ⁻¹
/// certification fails can still be classified.
pub fn classify(spec: &QGSpec, tau: &MultiOp) -> Result<Classification> {
    let (m, eps, sigma, tol) = (spec.product(), spec.counit(), spec.braiding(), spec.tol());
    let residuals = [
        eps.compose(m)?.residual(&eps.tensor(eps)?)?,
        eval(&[eps.at(0, 1), sigma.into()])?.residual(&eps.padded(1, 0))?,
        eval(&[eps.at(1, 0), sigma.into()])?.residual(&eps.padded(0, 1))?,
        sigma.residual(tau)?,
    ];
    let [m1, ml, mr, m3] = residuals.map(|r| r <= tol);
    let majid_type = (m1 == ml && ml == mr && mr == m3).then_some(m1);
    Ok(Classification {
        m1,
        ml,
        mr,
        m3,
        residuals,
        majid_type,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{self, clifford_rank1, superline, sweedler, z2};
    use num_complex::Complex64;

    fn derived(s: &QGSpec) -> DerivedSet {
        DerivedSet::compute(s).unwrap()
    }

    #[test]
    fn sigma_tau_is_a_braid_system_on_builtins() {
        for name in spec::builtin_names() {
            let s = spec::builtin(name).unwrap();
            let d = derived(&s);
            let r = is_braid_system(&s, &[s.braiding().clone(), d.tau.clone()]);
            assert_eq!(r.len(), 8 + 2 * 5);
            assert!(r.overall(), "{name}:\n{}", r.to_text());
        }
    }

    #[test]
    fn clifford_sigma_with_flip_is_not() {
        let s = clifford_rank1();
        let r = is_braid_system(&s, &[s.braiding().clone(), MultiOp::flip(2)]);
        let failing: Vec<&str> = r
            .failures()
            .filter(|i| i.id.starts_with("A1"))
            .map(|i| i.id.as_str())
            .collect();
        assert_eq!(failing, ["A1[0,0,1]", "A1[0,1,0]", "A1[1,0,0]"]);
        for id in failing {
            assert_eq!(r.get(id).unwrap().residual, 2.0);
        }
    }

    #[test]
    fn flip_completes_immediately() {
        let s = z2();
        let b = complete(&s, &[MultiOp::flip(2)], 3).unwrap();
        assert!(b.closed);
        assert_eq!((b.depth_reached, b.ops.len()), (0, 1));
        assert!(b.certification.overall());
    }

    #[test]
    fn sweedler_system_collapses_to_one_member() {
        let s = sweedler();
        let d = derived(&s);
        let b = complete(&s, &[s.braiding().clone(), d.tau.clone()], 3).unwrap();
        assert!(b.closed);
        assert_eq!(b.ops.len(), 1);
    }

    #[test]
    fn clifford_completion_grows() {
        let s = clifford_rank1();
        let d = derived(&s);
        let b = complete(&s, &[s.braiding().clone(), d.tau.clone()], 3).unwrap();
        assert!(!b.closed && !b.unbounded);
        assert_eq!(b.sizes, vec![2, 4, 10, 28]);
        assert!(b.certification.overall(), "{}", b.certification.to_text());
        let range = family_range(3);
        assert_eq!(range, (-13, 14));
        let found = match_family(&s, &d, &b.ops, range).unwrap();
        assert!(found.iter().all(Option::is_some));
    }

    #[test]
    fn sigma_n_closed_form_on_clifford() {
        let s = clifford_rank1();
        let d = derived(&s);
        assert!(sigma_n(&s, &d, 1).unwrap().residual(s.braiding()).unwrap() <= 1e-12);
        assert!(sigma_n(&s, &d, 0).unwrap().residual(&d.tau).unwrap() <= 1e-12);
        for n in -3..=3 {
            let sn = sigma_n(&s, &d, n).unwrap();
            let col = sn.column(3);
            let expect = [-(n as f64), 0.0, 0.0, -1.0];
            for (a, b) in col.iter().zip(expect) {
                assert!((a - Complex64::new(b, 0.0)).norm() <= 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn family_identities_hold() {
        for s in [clifford_rank1(), sweedler()] {
            let d = derived(&s);
            let r = check_family_identities(&s, &d, (-2, 2));
            assert!(r.overall(), "{}", r.to_text());
            assert!(r.get("A10[2,2]").is_some());
        }
    }

    #[test]
    fn g0_of_clifford_is_the_superline() {
        let s = clifford_rank1();
        let d = derived(&s);
        let g0 = build_gn(&s, &d, 0).unwrap();
        assert!(g0.report.overall(), "{}", g0.report.to_text());
        assert!(g0.spec_n.residual(&superline()).unwrap() <= 1e-9);
    }

    #[test]
    fn gn_product_on_clifford() {
        let s = clifford_rank1();
        let d = derived(&s);
        for n in [-2, -1, 1, 2] {
            let g = build_gn(&s, &d, n).unwrap();
            assert!(g.report.overall(), "n={n}\n{}", g.report.to_text());
            let ee = g.spec_n.product().column(3);
            assert!((ee[0] - Complex64::new(n as f64, 0.0)).norm() <= 1e-12);
            assert!(ee[1].norm() <= 1e-12);
            assert!(g.spec_n.antipode().residual(s.antipode()).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn standard_case_is_fixed_by_deformation() {
        let s = sweedler();
        let d = derived(&s);
        let g = build_gn(&s, &d, 2).unwrap();
        assert!(g.spec_n.residual(&s).unwrap() <= 1e-12);
    }

    #[test]
    fn classification() {
        for s in [z2(), sweedler(), superline(), spec::symmetric_group(3)] {
            let c = classify(&s, &derived(&s).tau).unwrap();
            assert_eq!(c.majid_type, Some(true));
        }
        let s = clifford_rank1();
        let c = classify(&s, &derived(&s).tau).unwrap();
        assert_eq!(c.majid_type, Some(false));
        assert_eq!(c.to_text(), "majid_type: false (M1=ML=MR=M3=false)\n");
    }

    #[test]
    fn family_range_sizes() {
        let sizes: Vec<i64> = (0..4)
            .map(|k| {
                let (lo, hi) = family_range(k);
                hi - lo + 1
            })
            .collect();
        assert_eq!(sizes, vec![2, 4, 10, 28]);
    }
}
