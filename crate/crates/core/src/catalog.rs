//! Registry of identities that follow from the axioms, each evaluated as
//! an operator residual on a spec and its derived set.

use crate::derived::DerivedSet;
use crate::error::{Error, Result};
use crate::report::{sides, CheckItem, CheckReport};
use crate::spec::QGSpec;
use crate::tensor::{eval, MultiOp};

type Sides = Result<(MultiOp, MultiOp)>;

pub struct IdentityEntry {
    pub id: &'static str,
    pub family: &'static str,
    pub formula: &'static str,
    build: fn(&QGSpec, &DerivedSet) -> Sides,
}

impl IdentityEntry {
    pub fn evaluate(&self, spec: &QGSpec, d: &DerivedSet) -> Sides {
        (self.build)(spec, d)
    }

    pub fn check(&self, spec: &QGSpec, d: &DerivedSet) -> CheckItem {
        CheckItem::compare(self.id, self.formula, self.evaluate(spec, d), spec.tol())
    }
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("formula", &self.formula)
            .finish()
    }
}

const PENTAGON: &str = "pentagonal twisting of the coproduct";
const TAU_TWIST: &str = "twisting relations in τ alone";
const ANTIPODE: &str = "braided antipode laws";
const LEMMA: &str = "antipode and counit lemma";
const KAPPA: &str = "twisting of the antipode";
const BRAID: &str = "braid equations in σ and τ";

macro_rules! entry {
    ($id:literal, $family:expr, $formula:literal, $build:expr) => {
        IdentityEntry {
            id: $id,
            family: $family,
            formula: $formula,
            build: $build,
        }
    };
}

pub static CATALOG: [IdentityEntry; 26] = [
    entry!(
        "2.29",
        PENTAGON,
        "(φ⊗id)σ = (id⊗τ)(σ⊗id)(id⊗φ)",
        |s, d| {
            let (phi, sg, t) = (s.coproduct(), s.braiding(), &d.tau);
            sides(
                eval(&[phi.at(0, 1), sg.into()]),
                eval(&[t.at(1, 0), sg.at(0, 1), phi.at(1, 0)]),
            )
        }
    ),
    entry!(
        "2.30",
        PENTAGON,
        "(id⊗φ)σ = (τ⊗id)(id⊗σ)(φ⊗id)",
        |s, d| {
            let (phi, sg, t) = (s.coproduct(), s.braiding(), &d.tau);
            sides(
                eval(&[phi.at(1, 0), sg.into()]),
                eval(&[t.at(0, 1), sg.at(1, 0), phi.at(0, 1)]),
            )
        }
    ),
    entry!(
        "2.31",
        PENTAGON,
        "(φ⊗id)σ = (id⊗σ)(τ⊗id)(id⊗φ)",
        |s, d| {
            let (phi, sg, t) = (s.coproduct(), s.braiding(), &d.tau);
            sides(
                eval(&[phi.at(0, 1), sg.into()]),
                eval(&[sg.at(1, 0), t.at(0, 1), phi.at(1, 0)]),
            )
        }
    ),
    entry!(
        "2.32",
        PENTAGON,
        "(id⊗φ)σ = (σ⊗id)(id⊗τ)(φ⊗id)",
        |s, d| {
            let (phi, sg, t) = (s.coproduct(), s.braiding(), &d.tau);
            sides(
                eval(&[phi.at(1, 0), sg.into()]),
                eval(&[sg.at(0, 1), t.at(1, 0), phi.at(0, 1)]),
            )
        }
    ),
    entry!(
        "2.33",
        TAU_TWIST,
        "(φ⊗id)τ = (id⊗τ)(τ⊗id)(id⊗φ)",
        |s, d| {
            let (phi, t) = (s.coproduct(), &d.tau);
            sides(
                eval(&[phi.at(0, 1), t.into()]),
                eval(&[t.at(1, 0), t.at(0, 1), phi.at(1, 0)]),
            )
        }
    ),
    entry!(
        "2.34",
        TAU_TWIST,
        "(id⊗φ)τ = (τ⊗id)(id⊗τ)(φ⊗id)",
        |s, d| {
            let (phi, t) = (s.coproduct(), &d.tau);
            sides(
                eval(&[phi.at(1, 0), t.into()]),
                eval(&[t.at(0, 1), t.at(1, 0), phi.at(0, 1)]),
            )
        }
    ),
    entry!(
        "2.35",
        TAU_TWIST,
        "τ(m⊗id) = (id⊗m)(τ⊗id)(id⊗τ)",
        |s, d| {
            let (m, t) = (s.product(), &d.tau);
            sides(
                eval(&[t.into(), m.at(0, 1)]),
                eval(&[m.at(1, 0), t.at(0, 1), t.at(1, 0)]),
            )
        }
    ),
    entry!(
        "2.36",
        TAU_TWIST,
        "τ(id⊗m) = (m⊗id)(id⊗τ)(τ⊗id)",
        |s, d| {
            let (m, t) = (s.product(), &d.tau);
            sides(
                eval(&[t.into(), m.at(1, 0)]),
                eval(&[m.at(0, 1), t.at(1, 0), t.at(0, 1)]),
            )
        }
    ),
    entry!("2.37", ANTIPODE, "φκ = σ(κ⊗κ)φ", |s, _| {
        let (phi, k, sg) = (s.coproduct(), s.antipode(), s.braiding());
        sides(
            eval(&[phi.into(), k.into()]),
            eval(&[sg.into(), k.at(0, 1), k.at(1, 0), phi.into()]),
        )
    }),
    entry!(
        "2.38",
        ANTIPODE,
        "κm = m(κ⊗κ)τσ⁻¹τσ⁻¹τ",
        |s, d| {
            let (m, k) = (s.product(), s.antipode());
            let ts = &d.ts_inv;
            sides(
                eval(&[k.into(), m.into()]),
                eval(&[
                    m.into(),
                    k.at(0, 1),
                    k.at(1, 0),
                    ts.into(),
                    ts.into(),
                    (&d.tau).into(),
                ]),
            )
        }
    ),
    entry!(
        "2.39",
        LEMMA,
        "(id⊗m)(σ⊗id)(κ⊗id²)(τ⁻¹στ⁻¹⊗id)(id⊗φ) = id⊗1ε",
        |s, d| {
            let (m, phi, k, sg) = (s.product(), s.coproduct(), s.antipode(), s.braiding());
            let tst = d.tau_inv.compose(&d.st_inv)?;
            let ue = s.unit().compose(s.counit())?;
            sides(
                eval(&[
                    m.at(1, 0),
                    sg.at(0, 1),
                    k.at(0, 2),
                    tst.at(0, 1),
                    phi.at(1, 0),
                ]),
                Ok(ue.padded(1, 0)),
            )
        }
    ),
    entry!(
        "2.40",
        LEMMA,
        "(m⊗id)(id⊗σ)(id²⊗κ)(id⊗τ⁻¹στ⁻¹)(φ⊗id) = 1ε⊗id",
        |s, d| {
            let (m, phi, k, sg) = (s.product(), s.coproduct(), s.antipode(), s.braiding());
            let tst = d.tau_inv.compose(&d.st_inv)?;
            let ue = s.unit().compose(s.counit())?;
            sides(
                eval(&[
                    m.at(0, 1),
                    sg.at(1, 0),
                    k.at(2, 0),
                    tst.at(1, 0),
                    phi.at(0, 1),
                ]),
                Ok(ue.padded(0, 1)),
            )
        }
    ),
    entry!(
        "2.41",
        KAPPA,
        "σ(κ⊗id) = (id⊗κ)τσ⁻¹τ",
        |s, d| {
            let (k, sg) = (s.antipode(), s.braiding());
            sides(
                eval(&[sg.into(), k.at(0, 1)]),
                eval(&[k.at(1, 0), (&d.ts_inv).into(), (&d.tau).into()]),
            )
        }
    ),
    entry!("2.42", KAPPA, "τ(id⊗κ) = (κ⊗id)τ", |s, d| {
        let (k, t) = (s.antipode(), &d.tau);
        sides(eval(&[t.into(), k.at(1, 0)]), eval(&[k.at(0, 1), t.into()]))
    }),
    entry!("2.43", KAPPA, "τ(κ⊗id) = (id⊗κ)τ", |s, d| {
        let (k, t) = (s.antipode(), &d.tau);
        sides(eval(&[t.into(), k.at(0, 1)]), eval(&[k.at(1, 0), t.into()]))
    }),
    entry!(
        "2.44",
        KAPPA,
        "σ(id⊗κ) = (κ⊗id)τσ⁻¹τ",
        |s, d| {
            let (k, sg) = (s.antipode(), s.braiding());
            sides(
                eval(&[sg.into(), k.at(1, 0)]),
                eval(&[k.at(0, 1), (&d.ts_inv).into(), (&d.tau).into()]),
            )
        }
    ),
    entry!("2.45", KAPPA, "(κ⊗κ)τ = τ(κ⊗κ)", |s, d| {
        let (k, t) = (s.antipode(), &d.tau);
        sides(
            eval(&[k.at(0, 1), k.at(1, 0), t.into()]),
            eval(&[t.into(), k.at(0, 1), k.at(1, 0)]),
        )
    }),
    entry!("2.46", KAPPA, "(κ⊗κ)σ = σ(κ⊗κ)", |s, _| {
        let (k, sg) = (s.antipode(), s.braiding());
        sides(
            eval(&[k.at(0, 1), k.at(1, 0), sg.into()]),
            eval(&[sg.into(), k.at(0, 1), k.at(1, 0)]),
        )
    }),
    entry!(
        "2.47",
        BRAID,
        "(σ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗σ)",
        |s, _| { braid(s.braiding(), s.braiding(), s.braiding()) }
    ),
    entry!(
        "2.48",
        BRAID,
        "(τ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗τ)",
        |s, d| { braid(&d.tau, s.braiding(), s.braiding()) }
    ),
    entry!(
        "2.49",
        BRAID,
        "(σ⊗id)(id⊗τ)(σ⊗id) = (id⊗σ)(τ⊗id)(id⊗σ)",
        |s, d| { braid(s.braiding(), &d.tau, s.braiding()) }
    ),
    entry!(
        "2.50",
        BRAID,
        "(σ⊗id)(id⊗σ)(τ⊗id) = (id⊗τ)(σ⊗id)(id⊗σ)",
        |s, d| { braid(s.braiding(), s.braiding(), &d.tau) }
    ),
    entry!(
        "2.51",
        BRAID,
        "(τ⊗id)(id⊗τ)(σ⊗id) = (id⊗σ)(τ⊗id)(id⊗τ)",
        |s, d| { braid(&d.tau, &d.tau, s.braiding()) }
    ),
    entry!(
        "2.52",
        BRAID,
        "(τ⊗id)(id⊗σ)(τ⊗id) = (id⊗τ)(σ⊗id)(id⊗τ)",
        |s, d| { braid(&d.tau, s.braiding(), &d.tau) }
    ),
    entry!(
        "2.53",
        BRAID,
        "(σ⊗id)(id⊗τ)(τ⊗id) = (id⊗τ)(τ⊗id)(id⊗σ)",
        |s, d| { braid(s.braiding(), &d.tau, &d.tau) }
    ),
    entry!(
        "2.54",
        BRAID,
        "(τ⊗id)(id⊗τ)(τ⊗id) = (id⊗τ)(τ⊗id)(id⊗τ)",
        |_, d| { braid(&d.tau, &d.tau, &d.tau) }
    ),
];

/// Mixed braid relation `(α⊗id)(id⊗β)(γ⊗id) = (id⊗γ)(β⊗id)(id⊗α)`.
pub fn braid(alpha: &MultiOp, beta: &MultiOp, gamma: &MultiOp) -> Sides {
    sides(
        eval(&[alpha.at(0, 1), beta.at(1, 0), gamma.at(0, 1)]),
        eval(&[gamma.at(1, 0), beta.at(0, 1), alpha.at(1, 0)]),
    )
}

pub fn list_catalog() -> &'static [IdentityEntry] {
    &CATALOG
}

pub fn find(id: &str) -> Option<&'static IdentityEntry> {
    CATALOG.iter().find(|e| e.id == id)
}

/// Runs the whole catalog, or the listed ids in the order given.
pub fn run_catalog(spec: &QGSpec, d: &DerivedSet, subset: Option<&[&str]>) -> Result<CheckReport> {
    let entries: Vec<&IdentityEntry> = match subset {
        None => CATALOG.iter().collect(),
        Some(ids) => ids
            .iter()
            .map(|id| find(id).ok_or_else(|| Error::UnknownIdentity(id.to_string())))
            .collect::<Result<_>>()?,
    };
    let mut r = CheckReport::new();
    for e in entries {
        if r.get(e.id).is_none() {
            r.push(e.check(spec, d));
        }
    }
    Ok(r)
}
