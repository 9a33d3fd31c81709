//! Residual reports: one item per checked identity.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::Result;
use crate::tensor::MultiOp;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckItem {
    pub id: String,
    /// The identity being checked, written out.
    pub reference: String,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
    /// Why the residual could not be evaluated, if it could not.
    pub note: Option<String>,
}

impl CheckItem {
    pub fn measure(
        id: impl Into<String>,
        reference: impl Into<String>,
        residual: f64,
        tol: f64,
    ) -> Self {
        CheckItem {
            id: id.into(),
            reference: reference.into(),
            residual,
            tol,
            // NaN never passes.
            pass: residual <= tol,
            note: None,
        }
    }

    pub fn failed(
        id: impl Into<String>,
        reference: impl Into<String>,
        tol: f64,
        note: impl Into<String>,
    ) -> Self {
        CheckItem {
            id: id.into(),
            reference: reference.into(),
            residual: f64::INFINITY,
            tol,
            pass: false,
            note: Some(note.into()),
        }
    }

    /// Compares two sides of an identity; evaluation errors become failures.
    pub fn compare(
        id: impl Into<String>,
        reference: impl Into<String>,
        sides: Result<(MultiOp, MultiOp)>,
        tol: f64,
    ) -> Self {
        let (id, reference) = (id.into(), reference.into());
        match sides.and_then(|(lhs, rhs)| lhs.residual(&rhs)) {
            Ok(r) => CheckItem::measure(id, reference, r, tol),
            Err(e) => CheckItem::failed(id, reference, tol, e.to_string()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut line = format!(
            "{:<18} {:<58} {:>9} {}",
            self.id,
            self.reference,
            format_residual(self.residual),
            if self.pass { "PASS" } else { "FAIL" }
        );
        if let Some(note) = &self.note {
            line.push_str(&format!("  ({note})"));
        }
        line
    }
}

/// Pairs up the two sides of an identity, failing if either side fails.
pub fn sides(lhs: Result<MultiOp>, rhs: Result<MultiOp>) -> Result<(MultiOp, MultiOp)> {
    Ok((lhs?, rhs?))
}

/// Scientific notation with three significant digits.
pub fn format_residual(r: f64) -> String {
    if r.is_finite() {
        format!("{r:.2e}")
    } else {
        "inf".to_string()
    }
}

fn rounded(r: f64) -> f64 {
    format_residual(r).parse().unwrap_or(r)
}

impl Serialize for CheckItem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckItem", 6)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("reference", &self.reference)?;
        if self.residual.is_finite() {
            st.serialize_field("residual", &rounded(self.residual))?;
        } else {
            st.serialize_field("residual", "inf")?;
        }
        st.serialize_field("tol", &self.tol)?;
        st.serialize_field("pass", &self.pass)?;
        if let Some(note) = &self.note {
            st.serialize_field("note", note)?;
        } else {
            st.skip_field("note")?;
        }
        st.end()
    }
}

/// Ordered collection of check items with unique ids.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, item: CheckItem) {
        assert!(
            self.get(&item.id).is_none(),
            "duplicate report id {:?}",
            item.id
        );
        self.items.push(item);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for item in other.items {
            self.push(item);
        }
    }

    /// Appends `other` with every id prefixed, e.g. `"G0/"`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.id = format!("{prefix}{}", item.id);
            self.push(item);
        }
    }

    pub fn items(&self) -> &[CheckItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// True when every item passes. An empty report passes.
    pub fn overall(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.items.iter().fold(0.0, |m, i| m.max(i.residual))
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.items.iter().map(|i| i.to_text() + "\n").collect();
        let failed = self.failures().count();
        out.push_str(&format!(
            "overall: {} ({} items, {} failed)\n",
            if self.overall() { "PASS" } else { "FAIL" },
            self.items.len(),
            failed
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckReport", 2)?;
        st.serialize_field("overall", &self.overall())?;
        st.serialize_field("items", &self.items)?;
        st.end()
    }
}

impl FromIterator<CheckItem> for CheckReport {
    fn from_iter<T: IntoIterator<Item = CheckItem>>(iter: T) -> Self {
        let mut r = CheckReport::new();
        for item in iter {
            r.push(item);
        }
        r
    }
}
