//! `.bqg.json` instance files.
//!
//! Each structure tensor is a sparse list of entries. An entry's `indices`
//! list the output multi-index followed by the input multi-index, so a
//! product entry `[k, i, j]` is the coefficient of basis element `k` in
//! `m(i⊗j)` and a counit entry `[i]` is `ε(i)`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{QGSpec, Structure, TensorName, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::tensor::{decode, encode, MultiOp};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub labels: Vec<String>,
    #[serde(default = "default_tol")]
    pub tol: f64,
    pub product: Option<Vec<Entry>>,
    pub unit: Option<Vec<Entry>>,
    pub coproduct: Option<Vec<Entry>>,
    pub counit: Option<Vec<Entry>>,
    pub antipode: Option<Vec<Entry>>,
    pub braiding: Option<Vec<Entry>>,
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

impl InstanceFile {
    fn entries(&self, name: TensorName) -> Option<&Vec<Entry>> {
        match name {
            TensorName::Product => self.product.as_ref(),
            TensorName::Unit => self.unit.as_ref(),
            TensorName::Coproduct => self.coproduct.as_ref(),
            TensorName::Counit => self.counit.as_ref(),
            TensorName::Antipode => self.antipode.as_ref(),
            TensorName::Braiding => self.braiding.as_ref(),
        }
    }

    pub fn from_spec(spec: &QGSpec) -> Self {
        let dump = |name: TensorName| Some(entries_of(spec.tensor(name)));
        InstanceFile {
            dim: spec.dim(),
            labels: spec.labels().to_vec(),
            tol: spec.tol(),
            product: dump(TensorName::Product),
            unit: dump(TensorName::Unit),
            coproduct: dump(TensorName::Coproduct),
            counit: dump(TensorName::Counit),
            antipode: dump(TensorName::Antipode),
            braiding: dump(TensorName::Braiding),
        }
    }

    pub fn into_spec(self) -> Result<QGSpec> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::InvalidSpec("dim must be at least 1".into()));
        }
        if self.labels.len() != d {
            return Err(Error::InvalidSpec(format!(
                "{} labels given for dim {d}",
                self.labels.len()
            )));
        }
        let mut ops = Vec::with_capacity(TensorName::ALL.len());
        for name in TensorName::ALL {
            let entries = self
                .entries(name)
                .ok_or_else(|| Error::MissingTensor(name.to_string()))?;
            ops.push(tensor_from_entries(name, d, entries)?);
        }
        let mut it = ops.into_iter();
        let mut next = || it.next().expect("six tensors");
        let structure = Structure {
            product: next(),
            unit: next(),
            coproduct: next(),
            counit: next(),
            antipode: next(),
            braiding: next(),
        };
        QGSpec::new(self.labels, structure, self.tol)
    }
}

/// Nonzero entries in `.bqg.json` index order.
pub fn entries_of(op: &MultiOp) -> Vec<Entry> {
    let (d, p, q) = (op.dim(), op.arity_in(), op.arity_out());
    op.nonzeros()
        .map(|(r, c, v)| {
            let mut indices = decode(r, d, q);
            indices.extend(decode(c, d, p));
            Entry {
                indices,
                re: v.re,
                im: v.im,
            }
        })
        .collect()
}

fn index_label(indices: &[usize], bad: usize) -> String {
    let parts: Vec<String> = indices
        .iter()
        .enumerate()
        .map(|(k, i)| if k == bad { i.to_string() } else { ".".into() })
        .collect();
    format!("[{}]", parts.join(","))
}

fn tensor_from_entries(name: TensorName, dim: usize, entries: &[Entry]) -> Result<MultiOp> {
    let (p, q) = name.arities();
    let mut seen = HashSet::new();
    let mut triplets = Vec::with_capacity(entries.len());
    for e in entries {
        if e.indices.len() != p + q {
            return Err(Error::IndexArity {
                tensor: name.to_string(),
                expected: p + q,
                got: e.indices.len(),
            });
        }
        if let Some(bad) = e.indices.iter().position(|&i| i >= dim) {
            return Err(Error::IndexOutOfRange {
                tensor: name.to_string(),
                index: index_label(&e.indices, bad),
                dim,
            });
        }
        if !seen.insert(e.indices.clone()) {
            return Err(Error::DuplicateEntry {
                tensor: name.to_string(),
                index: format!("{:?}", e.indices),
            });
        }
        if !e.re.is_finite() || !e.im.is_finite() {
            return Err(Error::Parse(format!(
                "{name}{:?} has a non-finite value",
                e.indices
            )));
        }
        let (out, input) = e.indices.split_at(q);
        triplets.push((
            encode(out, dim),
            encode(input, dim),
            Complex64::new(e.re, e.im),
        ));
    }
    MultiOp::from_triplets(dim, p, q, triplets)
}

/// Serializes a spec. Values use the shortest decimal that round-trips.
pub fn to_json(spec: &QGSpec) -> String {
    let file = InstanceFile::from_spec(spec);
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"dim\": {},", file.dim);
    let _ = writeln!(
        out,
        "  \"labels\": {},",
        serde_json::to_string(&file.labels).expect("strings serialize")
    );
    let _ = writeln!(
        out,
        "  \"tol\": {},",
        serde_json::to_string(&file.tol).expect("finite tolerance")
    );
    for (k, name) in TensorName::ALL.iter().enumerate() {
        let entries = file.entries(*name).expect("all tensors present");
        let _ = write!(out, "  \"{name}\": [");
        for (i, e) in entries.iter().enumerate() {
            let sep = if i + 1 < entries.len() { "," } else { "" };
            let _ = write!(
                out,
                "\n    {}{sep}",
                serde_json::to_string(e).expect("finite entries")
            );
        }
        if !entries.is_empty() {
            out.push_str("\n  ");
        }
        out.push(']');
        out.push_str(if k + 1 < TensorName::ALL.len() {
            ",\n"
        } else {
            "\n"
        });
    }
    out.push_str("}\n");
    out
}

pub fn from_json(text: &str) -> Result<QGSpec> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_spec()
}

pub fn save(spec: &QGSpec, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(spec))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<QGSpec> {
    from_json(&std::fs::read_to_string(path)?)
}
