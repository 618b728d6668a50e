//! Export and import of structure-constant tables as JSON.
//!
//! ```json
//! { "two_ell": 1, "central": false,
//!   "basis": [{"id": "H", "degree": "00"}, ...],
//!   "table": [{"left": "D", "right": "H", "value": [{"id": "H", "coeff": "1/1"}]}, ...] }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraBuilder, ColorAlgebra};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub two_ell: u32,
    pub central: bool,
    pub basis: Vec<BasisDoc>,
    pub table: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub id: String,
    pub degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub left: String,
    pub right: String,
    pub value: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub id: String,
    pub coeff: String,
}

pub fn element_doc(x: &AlgebraElement) -> Vec<TermDoc> {
    x.iter().map(|(g, c)| TermDoc { id: g.to_string(), coeff: rational::to_canonical(c) }).collect()
}

pub fn to_doc(alg: &ColorAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        two_ell: alg.two_ell(),
        central: alg.central(),
        basis: alg
            .basis()
            .iter()
            .zip(alg.degrees())
            .map(|(g, d)| BasisDoc { id: g.to_string(), degree: d.as_str().to_string() })
            .collect(),
        table: alg
            .entries()
            .into_iter()
            .map(|(x, y, v)| EntryDoc { left: x.to_string(), right: y.to_string(), value: element_doc(&v) })
            .collect(),
    }
}

pub fn to_json_string(alg: &ColorAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_doc(alg)).expect("algebra documents always serialize");
    s.push('\n');
    s
}

fn schema(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { location: location.into(), message: message.into() }
}

fn gen_at(s: &str, location: String) -> Result<Gen> {
    s.parse().map_err(|_| schema(location, format!("unknown generator id {s:?}")))
}

pub fn from_doc(doc: &AlgebraDoc) -> Result<ColorAlgebra> {
    let name = if doc.central { "imported (central)" } else { "imported" };
    let mut b = AlgebraBuilder::new(name, doc.two_ell, doc.central);
    let mut seen = std::collections::BTreeSet::new();
    for (i, entry) in doc.basis.iter().enumerate() {
        let g = gen_at(&entry.id, format!("basis[{i}].id"))?;
        let d = Degree::parse(&entry.degree)
            .ok_or_else(|| schema(format!("basis[{i}].degree"), format!("invalid degree {:?}", entry.degree)))?;
        if !seen.insert(g) {
            return Err(schema(format!("basis[{i}].id"), format!("duplicate generator {g}")));
        }
        b.generator(g, d);
    }
    for (i, entry) in doc.table.iter().enumerate() {
        let x = gen_at(&entry.left, format!("table[{i}].left"))?;
        let y = gen_at(&entry.right, format!("table[{i}].right"))?;
        let mut value = AlgebraElement::zero();
        for (k, t) in entry.value.iter().enumerate() {
            let g = gen_at(&t.id, format!("table[{i}].value[{k}].id"))?;
            let c = rational::parse(&t.coeff).ok_or_else(|| {
                schema(format!("table[{i}].value[{k}].coeff"), format!("invalid rational {:?}", t.coeff))
            })?;
            value.add_term(g, c);
        }
        b.set(x, y, value).map_err(|e| schema(format!("table[{i}]"), e.to_string()))?;
    }
    b.build().map_err(|e| schema("table", e.to_string()))
}

pub fn from_json_str(s: &str) -> Result<ColorAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(s)
        .map_err(|e| schema(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    from_doc(&doc)
}

fn with_path(e: std::io::Error, path: &Path) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

pub fn export_json(alg: &ColorAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, to_json_string(alg)).map_err(|e| with_path(e, path))
}

pub fn import_json(path: &Path) -> Result<ColorAlgebra> {
    from_json_str(&std::fs::read_to_string(path).map_err(|e| with_path(e, path))?)
}
