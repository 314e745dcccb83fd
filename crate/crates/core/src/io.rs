//! JSON file formats consumed by the CLI: groups, quaternion matrices,
//! and supplied irreducible representations.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupdet::SuppliedRepresentation;
use crate::matrix::Matrix;
use crate::rings::poly::Scalar;
use crate::rings::text::{parse_cyclotomic, parse_rational};
use crate::rings::{Ring, Value};
use crate::tga::{Algebra, Cocycle, FiniteGroupTable, Span};

/// Group file: name, element names, Cayley table of indices, optional
/// cocycle (coefficient strings, default all "1"), optional named
/// subgroups.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<BTreeMap<String, Vec<usize>>>,
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

impl GroupFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Validate into a group table plus cocycle.
    pub fn into_group(self) -> Result<(FiniteGroupTable, Cocycle)> {
        let group = FiniteGroupTable::new(
            self.name,
            self.elements,
            self.table,
            self.subgroups.unwrap_or_default(),
        )?;
        let cocycle = match self.cocycle {
            None => Cocycle::trivial(group.order()),
            Some(rows) => {
                let mut values = Vec::with_capacity(rows.len());
                for row in rows {
                    let mut out = Vec::with_capacity(row.len());
                    for s in row {
                        out.push(Scalar::Rat(parse_rational(&s)?));
                    }
                    values.push(out);
                }
                Cocycle::new(&group, values)?
            }
        };
        Ok((group, cocycle))
    }
}

/// Load a group file from disk and validate it.
pub fn load_group(path: &Path) -> Result<(FiniteGroupTable, Cocycle)> {
    GroupFile::load(path)?.into_group()
}

/// Quaternion matrix file: size r and an r x r array of [w, x, y, z]
/// rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuaternionMatrixFile {
    pub r: usize,
    pub entries: Vec<Vec<[String; 4]>>,
}

impl QuaternionMatrixFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Materialize over the twisted quaternion algebra with rational
    /// coefficients.
    pub fn into_matrix(self) -> Result<Matrix> {
        let algebra = crate::fixtures::quaternion_algebra(Ring::Rational)?;
        if self.r > 3 {
            return Err(Error::Precondition(format!(
                "matrix size r = {} exceeds the budget of 3",
                self.r
            )));
        }
        if self.entries.len() != self.r
            || self.entries.iter().any(|row| row.len() != self.r)
        {
            return Err(Error::Parse(format!(
                "entries do not form an {r} x {r} array",
                r = self.r
            )));
        }
        let ring = Ring::Tga { algebra: algebra.clone(), span: Span::Full };
        let mut entries = Vec::with_capacity(self.r * self.r);
        for row in &self.entries {
            for cell in row {
                let parts = [
                    parse_rational(&cell[0])?,
                    parse_rational(&cell[1])?,
                    parse_rational(&cell[2])?,
                    parse_rational(&cell[3])?,
                ];
                entries.push(Value::Tga(crate::fixtures::quaternion_element_rat(
                    &algebra, parts,
                )?));
            }
        }
        Matrix::new(self.r, self.r, ring, entries)
    }
}

pub fn load_quaternion_matrix(path: &Path) -> Result<Matrix> {
    QuaternionMatrixFile::load(path)?.into_matrix()
}

/// One irreducible representation: degree, conductor, and image
/// matrices keyed by element name, entries as cyclotomic strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepFile {
    #[serde(default)]
    pub name: Option<String>,
    pub degree: usize,
    pub conductor: u32,
    pub images: BTreeMap<String, Vec<Vec<String>>>,
}

/// Load a list of representations (a JSON array of irrep objects).
pub fn load_irreps(path: &Path, group: &FiniteGroupTable) -> Result<Vec<SuppliedRepresentation>> {
    let text = read_to_string(path)?;
    irreps_from_json_str(&text, group)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Parse a JSON array of irrep objects and validate against the group.
pub fn irreps_from_json_str(
    text: &str,
    group: &FiniteGroupTable,
) -> Result<Vec<SuppliedRepresentation>> {
    let files: Vec<IrrepFile> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    files
        .into_iter()
        .enumerate()
        .map(|(k, f)| irrep_from_file(f, k, group))
        .collect()
}

fn irrep_from_file(
    file: IrrepFile,
    index: usize,
    group: &FiniteGroupTable,
) -> Result<SuppliedRepresentation> {
    let name = file.name.unwrap_or_else(|| format!("irrep{index}"));
    let ring = Ring::Cyclotomic(file.conductor);
    let mut images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let key = group.element_name(g);
        let rows = file.images.get(key).ok_or_else(|| {
            Error::Parse(format!("representation {name}: missing image of {key:?}"))
        })?;
        if rows.len() != file.degree || rows.iter().any(|r| r.len() != file.degree) {
            return Err(Error::Parse(format!(
                "representation {name}: image of {key:?} is not {d} x {d}",
                d = file.degree
            )));
        }
        let mut entries = Vec::with_capacity(file.degree * file.degree);
        for row in rows {
            for s in row {
                entries.push(Value::Cyc(parse_cyclotomic(s, file.conductor)?));
            }
        }
        images.push(Matrix::new(file.degree, file.degree, ring.clone(), entries)?);
    }
    let rep = SuppliedRepresentation {
        name,
        degree: file.degree,
        conductor: file.conductor,
        images,
    };
    rep.validate(group)?;
    Ok(rep)
}

/// Build the group algebra from a loaded file over a coefficient ring.
pub fn algebra_from_file(
    group: FiniteGroupTable,
    cocycle: Cocycle,
    coeff: Ring,
) -> Result<Arc<Algebra>> {
    let label = group.name().to_string();
    Algebra::new(group, cocycle, coeff, label)
}
