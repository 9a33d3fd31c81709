//! Operators derived from a valid spec: the secondary braiding τ, its
//! inverse, the braided product on `A⊗A` and the reconstruction of σ.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::{sides, CheckItem, CheckReport};
use crate::spec::{entries_of, QGSpec};
use crate::tensor::{eval, MultiOp};

/// τ, τ⁻¹ and the mixed products built from them, computed once per spec.
#[derive(Clone, Debug)]
pub struct DerivedSet {
    pub tau: MultiOp,
    pub tau_inv: MultiOp,
    pub sigma_inv: MultiOp,
    /// στ⁻¹
    pub st_inv: MultiOp,
    /// σ⁻¹τ
    pub s_inv_t: MultiOp,
    /// τσ⁻¹
    pub ts_inv: MultiOp,
    /// τ⁻¹σ
    pub t_inv_s: MultiOp,
    /// Product on `A⊗A`, a map `A⊗⁴ → A⊗²`.
    pub braided_mult: MultiOp,
}

impl DerivedSet {
    pub fn compute(spec: &QGSpec) -> Result<Self> {
        let sigma = spec.braiding();
        let sigma_inv = sigma.invert()?;
        let tau = tau_with(spec, &sigma_inv)?;
        let tau_inv = tau_inverse(spec, &tau)?;
        Ok(DerivedSet {
            st_inv: sigma.compose(&tau_inv)?,
            s_inv_t: sigma_inv.compose(&tau)?,
            ts_inv: tau.compose(&sigma_inv)?,
            t_inv_s: tau_inv.compose(sigma)?,
            braided_mult: braided_product(spec)?,
            tau,
            tau_inv,
            sigma_inv,
        })
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "tau": entries_of(&self.tau),
            "tau_inv": entries_of(&self.tau_inv),
            "sigma_inv": entries_of(&self.sigma_inv),
            "st_inv": entries_of(&self.st_inv),
            "s_inv_t": entries_of(&self.s_inv_t),
            "ts_inv": entries_of(&self.ts_inv),
            "t_inv_s": entries_of(&self.t_inv_s),
            "braided_mult": entries_of(&self.braided_mult),
        })
    }
}

/// `(m⊗m)(id⊗σ⊗id)`, the product `(a⊗b)(c⊗d) = a σ(b⊗c) d`.
pub fn braided_product(spec: &QGSpec) -> Result<MultiOp> {
    let m = spec.product();
    eval(&[m.at(0, 1), m.at(2, 0), spec.braiding().at(1, 1)])
}

/// The two defining expressions of τ, without the trailing σ.
fn tau_sides(spec: &QGSpec, sigma_inv: &MultiOp) -> Result<(MultiOp, MultiOp)> {
    let (phi, eps) = (spec.coproduct(), spec.counit());
    sides(
        eval(&[eps.at(2, 0), sigma_inv.at(1, 0), phi.at(0, 1)]),
        eval(&[eps.at(0, 2), sigma_inv.at(0, 1), phi.at(1, 0)]),
    )
}

fn tau_with(spec: &QGSpec, sigma_inv: &MultiOp) -> Result<MultiOp> {
    let (lhs, rhs) = tau_sides(spec, sigma_inv)?;
    let residual = lhs.residual(&rhs)?;
    if residual.is_nan() || residual > spec.tol() {
        return Err(Error::TauIllDefined { residual });
    }
    lhs.compose(spec.braiding())
}

/// τ = (id²⊗ε)(id⊗σ⁻¹)(φ⊗id)σ, refused when the mirrored expression
/// (ε⊗id²)(σ⁻¹⊗id)(id⊗φ)σ disagrees beyond the spec tolerance.
pub fn derive_tau(spec: &QGSpec) -> Result<MultiOp> {
    tau_with(spec, &spec.braiding().invert()?)
}

/// The two expressions for τ⁻¹σ.
fn tau_inv_sigma_sides(spec: &QGSpec) -> Result<(MultiOp, MultiOp)> {
    let (phi, eps, s) = (spec.coproduct(), spec.counit(), spec.braiding());
    sides(
        eval(&[eps.at(2, 0), s.at(1, 0), phi.at(0, 1)]),
        eval(&[eps.at(0, 2), s.at(0, 1), phi.at(1, 0)]),
    )
}

/// τ⁻¹ = [(id²⊗ε)(id⊗σ)(φ⊗id)]σ⁻¹, certified as a two-sided inverse of `tau`.
pub fn tau_inverse(spec: &QGSpec, tau: &MultiOp) -> Result<MultiOp> {
    let tol = spec.tol();
    let (lhs, rhs) = tau_inv_sigma_sides(spec)?;
    let agree = lhs.residual(&rhs)?;
    if agree.is_nan() || agree > tol {
        return Err(Error::Certification {
            what: "agreement of the two τ⁻¹σ expressions".into(),
            residual: agree,
            tol,
        });
    }
    let tau_inv = lhs.compose(&spec.braiding().invert()?)?;
    let id = MultiOp::identity(spec.dim(), 2);
    let residual = tau
        .compose(&tau_inv)?
        .residual(&id)?
        .max(tau_inv.compose(tau)?.residual(&id)?);
    if residual.is_nan() || residual > tol {
        return Err(Error::Certification {
            what: "ττ⁻¹ = τ⁻¹τ = id".into(),
            residual,
            tol,
        });
    }
    Ok(tau_inv)
}

/// σ rebuilt from the Hopf data: (m⊗m)(κ⊗φm⊗κ)(φ⊗φ).
pub fn reconstruct_sigma(spec: &QGSpec) -> Result<MultiOp> {
    let (m, phi, k) = (spec.product(), spec.coproduct(), spec.antipode());
    let phi_m = phi.compose(m)?;
    eval(&[
        m.at(0, 1),
        m.at(2, 0),
        k.at(0, 3),
        phi_m.at(1, 1),
        k.at(3, 0),
        phi.at(0, 2),
        phi.at(1, 0),
    ])
}

/// εm against (ε⊗ε)σ⁻¹τ.
pub fn counit_product_law(spec: &QGSpec, d: &DerivedSet) -> CheckItem {
    let eps = spec.counit();
    CheckItem::compare(
        "2.28",
        "εm = (ε⊗ε)σ⁻¹τ",
        sides(
            eps.compose(spec.product()),
            eval(&[eps.at(0, 0), eps.at(0, 1), (&d.s_inv_t).into()]),
        ),
        spec.tol(),
    )
}

/// Derived-operator identities. If τ cannot be derived the failure is
/// reported as a single item and the rest are skipped.
pub fn check_derived(spec: &QGSpec) -> (Option<DerivedSet>, CheckReport) {
    let tol = spec.tol();
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "2.9",
        "σ = (m⊗m)(κ⊗φm⊗κ)(φ⊗φ)",
        reconstruct_sigma(spec).map(|x| (x, spec.braiding().clone())),
        tol,
    ));
    r.extend(lemma_counit(spec));
    let d = match spec.braiding().invert() {
        Ok(si) => {
            r.push(CheckItem::compare(
                "2.15",
                "(id²⊗ε)(id⊗σ⁻¹)(φ⊗id) = (ε⊗id²)(σ⁻¹⊗id)(id⊗φ)",
                tau_sides(spec, &si),
                tol,
            ));
            DerivedSet::compute(spec)
        }
        Err(e) => Err(e),
    };
    match d {
        Ok(d) => {
            r.extend(check_with(spec, &d));
            (Some(d), r)
        }
        Err(e) => {
            r.push(CheckItem::failed("tau", "τ derivable", tol, e.to_string()));
            (None, r)
        }
    }
}

fn lemma_counit(spec: &QGSpec) -> CheckReport {
    let (m, phi, eps, s, tol) = (
        spec.product(),
        spec.coproduct(),
        spec.counit(),
        spec.braiding(),
        spec.tol(),
    );
    let em = eps.compose(m);
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "2.13",
        "ε⊗id = (id⊗εm)(σ⊗id)(id⊗φ)",
        em.as_ref()
            .map_err(|e| Error::InvalidArgument(e.to_string()))
            .and_then(|em| {
                sides(
                    eval(&[em.at(1, 0), s.at(0, 1), phi.at(1, 0)]),
                    Ok(eps.padded(0, 1)),
                )
            }),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.14",
        "id⊗ε = (εm⊗id)(id⊗σ)(φ⊗id)",
        em.as_ref()
            .map_err(|e| Error::InvalidArgument(e.to_string()))
            .and_then(|em| {
                sides(
                    eval(&[em.at(0, 1), s.at(1, 0), phi.at(0, 1)]),
                    Ok(eps.padded(1, 0)),
                )
            }),
        tol,
    ));
    r
}

fn check_with(spec: &QGSpec, d: &DerivedSet) -> CheckReport {
    let (phi, eps, u, tol) = (spec.coproduct(), spec.counit(), spec.unit(), spec.tol());
    let id = MultiOp::identity(spec.dim(), 1);
    let id2 = MultiOp::identity(spec.dim(), 2);
    let t = &d.tau;
    let mut r = CheckReport::new();

    r.push(CheckItem::compare(
        "2.17",
        "ττ⁻¹ = id",
        t.compose(&d.tau_inv).map(|x| (x, id2.clone())),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.17.agree",
        "(id²⊗ε)(id⊗σ)(φ⊗id) = (ε⊗id²)(σ⊗id)(id⊗φ)",
        tau_inv_sigma_sides(spec),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.18.left",
        "(ε⊗id)τ = id⊗ε",
        sides(eval(&[eps.at(0, 1), t.into()]), Ok(eps.padded(1, 0))),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.18.right",
        "(id⊗ε)τ = ε⊗id",
        sides(eval(&[eps.at(1, 0), t.into()]), Ok(eps.padded(0, 1))),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.19.left",
        "τ(1⊗a) = a⊗1",
        sides(eval(&[t.into(), u.at(0, 1)]), id.tensor(u)),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.19.right",
        "τ(a⊗1) = 1⊗a",
        sides(eval(&[t.into(), u.at(1, 0)]), u.tensor(&id)),
        tol,
    ));

    let comodule = [
        ("2.20", "(φ⊗id)τ⁻¹σ = (id⊗τ⁻¹σ)(φ⊗id)", &d.t_inv_s, true),
        ("2.21", "(id⊗φ)τ⁻¹σ = (τ⁻¹σ⊗id)(id⊗φ)", &d.t_inv_s, false),
        ("2.22", "(φ⊗id)τσ⁻¹ = (id⊗τσ⁻¹)(φ⊗id)", &d.ts_inv, true),
        ("2.23", "(id⊗φ)τσ⁻¹ = (τσ⁻¹⊗id)(id⊗φ)", &d.ts_inv, false),
    ];
    for (id, reference, x, left) in comodule {
        let pair = if left {
            sides(
                eval(&[phi.at(0, 1), x.into()]),
                eval(&[x.at(1, 0), phi.at(0, 1)]),
            )
        } else {
            sides(
                eval(&[phi.at(1, 0), x.into()]),
                eval(&[x.at(0, 1), phi.at(1, 0)]),
            )
        };
        r.push(CheckItem::compare(id, reference, pair, tol));
    }

    let (a, b) = (&d.st_inv, &d.s_inv_t);
    let commuting = [
        ("2.24", "(στ⁻¹⊗id)(id⊗στ⁻¹) = (id⊗στ⁻¹)(στ⁻¹⊗id)", a, a),
        ("2.25", "(στ⁻¹⊗id)(id⊗σ⁻¹τ) = (id⊗σ⁻¹τ)(στ⁻¹⊗id)", a, b),
        ("2.26", "(σ⁻¹τ⊗id)(id⊗στ⁻¹) = (id⊗στ⁻¹)(σ⁻¹τ⊗id)", b, a),
        ("2.27", "(σ⁻¹τ⊗id)(id⊗σ⁻¹τ) = (id⊗σ⁻¹τ)(σ⁻¹τ⊗id)", b, b),
    ];
    for (id, reference, x, y) in commuting {
        r.push(CheckItem::compare(
            id,
            reference,
            sides(
                eval(&[x.at(0, 1), y.at(1, 0)]),
                eval(&[y.at(1, 0), x.at(0, 1)]),
            ),
            tol,
        ));
    }
    r.push(counit_product_law(spec, d));
    r
}
