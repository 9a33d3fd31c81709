//! Axiom checks for a candidate braided quantum group.
//!
//! Every check is evaluated even when an earlier one fails, so a single
//! report localizes all broken structure tensors at once.

use crate::error::Result;
use crate::report::{sides, CheckItem, CheckReport};
use crate::spec::QGSpec;
use crate::tensor::{eval, MultiOp};

/// Bijectivity item: both one-sided inverse residuals, or a failure when the
/// operator is singular to the condition bound.
pub fn bijectivity_item(id: &str, reference: &str, op: &MultiOp, tol: f64) -> CheckItem {
    match op.inverse_with_condition() {
        Ok((inv, cond)) => {
            let id_op = MultiOp::identity(op.dim(), op.arity_in());
            let residual = op
                .compose(&inv)
                .and_then(|x| x.residual(&id_op))
                .and_then(|a| Ok(a.max(inv.compose(op)?.residual(&id_op)?)));
            match residual {
                Ok(r) => {
                    let mut item = CheckItem::measure(id, reference, r, tol);
                    item.note = (!item.pass).then(|| format!("condition estimate {cond:.3e}"));
                    item
                }
                Err(e) => CheckItem::failed(id, reference, tol, e.to_string()),
            }
        }
        Err(e) => CheckItem::failed(id, reference, tol, e.to_string()),
    }
}

pub fn check_algebra(spec: &QGSpec) -> CheckReport {
    let (m, u, tol) = (spec.product(), spec.unit(), spec.tol());
    let id = MultiOp::identity(spec.dim(), 1);
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "alg.assoc",
        "m(m⊗id) = m(id⊗m)",
        sides(eval(&[m.into(), m.at(0, 1)]), eval(&[m.into(), m.at(1, 0)])),
        tol,
    ));
    r.push(CheckItem::compare(
        "alg.unit.left",
        "m(1⊗id) = id",
        eval(&[m.into(), u.at(0, 1)]).map(|x| (x, id.clone())),
        tol,
    ));
    r.push(CheckItem::compare(
        "alg.unit.right",
        "m(id⊗1) = id",
        eval(&[m.into(), u.at(1, 0)]).map(|x| (x, id.clone())),
        tol,
    ));
    r
}

pub fn check_coalgebra(spec: &QGSpec) -> CheckReport {
    let (phi, eps, tol) = (spec.coproduct(), spec.counit(), spec.tol());
    let id = MultiOp::identity(spec.dim(), 1);
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "coalg.coassoc",
        "(φ⊗id)φ = (id⊗φ)φ",
        sides(
            eval(&[phi.at(0, 1), phi.into()]),
            eval(&[phi.at(1, 0), phi.into()]),
        ),
        tol,
    ));
    r.push(CheckItem::compare(
        "coalg.counit.left",
        "(ε⊗id)φ = id",
        eval(&[eps.at(0, 1), phi.into()]).map(|x| (x, id.clone())),
        tol,
    ));
    r.push(CheckItem::compare(
        "coalg.counit.right",
        "(id⊗ε)φ = id",
        eval(&[eps.at(1, 0), phi.into()]).map(|x| (x, id.clone())),
        tol,
    ));
    r
}

type Labelled = (&'static str, &'static str, Result<(MultiOp, MultiOp)>);

fn hexagons(spec: &QGSpec) -> [Labelled; 3] {
    let (m, phi, s) = (spec.product(), spec.coproduct(), spec.braiding());
    [
        (
            "2.1",
            "σ(m⊗id) = (id⊗m)(σ⊗id)(id⊗σ)",
            sides(
                eval(&[s.into(), m.at(0, 1)]),
                eval(&[m.at(1, 0), s.at(0, 1), s.at(1, 0)]),
            ),
        ),
        (
            "2.2",
            "σ(id⊗m) = (m⊗id)(id⊗σ)(σ⊗id)",
            sides(
                eval(&[s.into(), m.at(1, 0)]),
                eval(&[m.at(0, 1), s.at(1, 0), s.at(0, 1)]),
            ),
        ),
        (
            "2.3",
            "φm = (m⊗m)(id⊗σ⊗id)(φ⊗φ)",
            sides(
                eval(&[phi.into(), m.into()]),
                eval(&[
                    m.at(0, 1),
                    m.at(2, 0),
                    s.at(1, 1),
                    phi.at(0, 2),
                    phi.at(1, 0),
                ]),
            ),
        ),
    ]
}

/// Compatibility of the braiding with product and coproduct, plus the
/// coassociativity of the twisted coproducts.
pub fn check_braiding_axioms(spec: &QGSpec) -> CheckReport {
    let (phi, s, tol) = (spec.coproduct(), spec.braiding(), spec.tol());
    let mut r: CheckReport = hexagons(spec)
        .into_iter()
        .map(|(id, reference, sides)| CheckItem::compare(id, reference, sides, tol))
        .collect();

    const MIXED: &str = "(σ⊗id²)(id⊗φ⊗id)(σ⁻¹⊗id)(id⊗φ) = (id²⊗σ)(id⊗φ⊗id)(id⊗σ⁻¹)(φ⊗id)";
    match s.invert() {
        Ok(si) => r.push(CheckItem::compare(
            "2.4",
            MIXED,
            sides(
                eval(&[s.at(0, 2), phi.at(1, 1), si.at(0, 1), phi.at(1, 0)]),
                eval(&[s.at(2, 0), phi.at(1, 1), si.at(1, 0), phi.at(0, 1)]),
            ),
            tol,
        )),
        Err(e) => r.push(CheckItem::failed("2.4", MIXED, tol, e.to_string())),
    }
    r.push(CheckItem::compare(
        "2.8",
        "(id²⊗σ)(id⊗φ⊗id)(σ⊗id)(id⊗φ) = (σ⊗id²)(id⊗φ⊗id)(id⊗σ)(φ⊗id)",
        sides(
            eval(&[s.at(2, 0), phi.at(1, 1), s.at(0, 1), phi.at(1, 0)]),
            eval(&[s.at(0, 2), phi.at(1, 1), s.at(1, 0), phi.at(0, 1)]),
        ),
        tol,
    ));
    r
}

/// Antipode axiom and bijectivity of κ and σ.
pub fn check_antipode(spec: &QGSpec) -> CheckReport {
    let (m, phi, k, tol) = (
        spec.product(),
        spec.coproduct(),
        spec.antipode(),
        spec.tol(),
    );
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "2.5.right",
        "m(id⊗κ)φ = 1ε",
        sides(
            eval(&[m.into(), k.at(1, 0), phi.into()]),
            spec.unit().compose(spec.counit()),
        ),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.5.left",
        "m(κ⊗id)φ = 1ε",
        sides(
            eval(&[m.into(), k.at(0, 1), phi.into()]),
            spec.unit().compose(spec.counit()),
        ),
        tol,
    ));
    r.push(bijectivity_item("bij.antipode", "κ is bijective", k, tol));
    r.push(bijectivity_item(
        "bij.braiding",
        "σ is bijective",
        spec.braiding(),
        tol,
    ));
    r
}

/// Unit normalizations implied by the axioms.
pub fn check_unit_consequences(spec: &QGSpec) -> CheckReport {
    let (u, phi, eps, k, s, tol) = (
        spec.unit(),
        spec.coproduct(),
        spec.counit(),
        spec.antipode(),
        spec.braiding(),
        spec.tol(),
    );
    let d = spec.dim();
    let id = MultiOp::identity(d, 1);
    let mut r = CheckReport::new();
    r.push(CheckItem::compare(
        "2.10",
        "φ(1) = 1⊗1",
        sides(phi.compose(u), u.tensor(u)),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.11",
        "ε(1) = 1",
        eps.compose(u).map(|x| (x, MultiOp::identity(d, 0))),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.12",
        "κ(1) = 1",
        k.compose(u).map(|x| (x, u.clone())),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.7.left",
        "σ(1⊗a) = a⊗1",
        sides(eval(&[s.into(), u.at(0, 1)]), id.tensor(u)),
        tol,
    ));
    r.push(CheckItem::compare(
        "2.7.right",
        "σ(a⊗1) = 1⊗a",
        sides(eval(&[s.into(), u.at(1, 0)]), u.tensor(&id)),
        tol,
    ));
    r
}

/// Full axiom suite for a braided quantum group.
pub fn check_all(spec: &QGSpec) -> CheckReport {
    let mut r = check_algebra(spec);
    r.extend(check_coalgebra(spec));
    r.extend(check_braiding_axioms(spec));
    r.extend(check_antipode(spec));
    r.extend(check_unit_consequences(spec));
    r
}
