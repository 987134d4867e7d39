//! JSON formats for algebras, lattices, homomorphisms and ideals.
//!
//! Algebras are [`RawTables`], lattices are [`LatticeTables`]. A hom file
//! names its source and target either by a path, resolved against the hom
//! file's own directory, or by an inline table.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::lattice::{FiniteDistLattice, LatticeHom, LatticeTables};
use crate::mv::{FiniteMvAlgebra, MvHom, RawTables};
use crate::spectra::{is_ideal, IdealSet};
use crate::{Error, Result};

/// An operand that is either stored elsewhere or written out in place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Operand<T> {
    Path(PathBuf),
    Inline(T),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomFile<T> {
    pub source: Operand<T>,
    pub target: Operand<T>,
    pub map: Vec<usize>,
}

pub type MvHomFile = HomFile<RawTables>;
pub type LatticeHomFile = HomFile<LatticeTables>;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty JSON with a trailing newline, the format of every emitted file.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn parse_algebra(text: &str) -> Result<FiniteMvAlgebra> {
    FiniteMvAlgebra::from_tables(&serde_json::from_str(text)?)
}

pub fn load_algebra(path: &Path) -> Result<FiniteMvAlgebra> {
    FiniteMvAlgebra::from_tables(&read_json(path)?)
}

pub fn load_lattice(path: &Path) -> Result<FiniteDistLattice> {
    FiniteDistLattice::from_tables(&read_json(path)?)
}

fn resolve<T: DeserializeOwned>(base: &Path, op: Operand<T>) -> Result<T> {
    match op {
        Operand::Inline(t) => Ok(t),
        Operand::Path(p) if p.is_absolute() => read_json(&p),
        Operand::Path(p) => read_json(&base.join(p)),
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_mv_hom(path: &Path) -> Result<MvHom> {
    let file: MvHomFile = read_json(path)?;
    let base = base_dir(path);
    let source = FiniteMvAlgebra::from_tables(&resolve(&base, file.source)?)?;
    let target = FiniteMvAlgebra::from_tables(&resolve(&base, file.target)?)?;
    MvHom::new(Arc::new(source), Arc::new(target), file.map)
}

pub fn load_lattice_hom(path: &Path) -> Result<LatticeHom> {
    let file: LatticeHomFile = read_json(path)?;
    let base = base_dir(path);
    let source = FiniteDistLattice::from_tables(&resolve(&base, file.source)?)?;
    let target = FiniteDistLattice::from_tables(&resolve(&base, file.target)?)?;
    LatticeHom::new(Arc::new(source), Arc::new(target), file.map)
}

/// A hom file with both ends inline.
pub fn lattice_hom_file(h: &LatticeHom) -> LatticeHomFile {
    HomFile {
        source: Operand::Inline(h.source().to_tables()),
        target: Operand::Inline(h.target().to_tables()),
        map: h.map().to_vec(),
    }
}

/// Parses `"0,3,6"`, `"[0, 3, 6]"` or `"{}"` into a set of elements and
/// checks that it is an ideal of `a`. Elements may be given by index or
/// by label.
pub fn parse_ideal(a: &FiniteMvAlgebra, text: &str) -> Result<IdealSet> {
    let inner = text.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
    let mut members = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let x = match item.parse::<usize>() {
            Ok(x) => x,
            Err(_) => a
                .elements()
                .find(|&x| a.label(x) == item)
                .ok_or_else(|| Error::Malformed(format!("no element is named {item:?}")))?,
        };
        a.check_element(x)?;
        members.push(x);
    }
    let ideal = IdealSet::from_members(members);
    if !is_ideal(a, ideal.mask()) {
        return Err(Error::NotAnIdeal(ideal.members()));
    }
    Ok(ideal)
}
