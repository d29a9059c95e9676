//! Operation tables over atom catalogues, rendered as TSV or JSON.

use std::str::FromStr;

use serde_json::json;

use crate::atom::Atom;
use crate::derived::{derived_tensor, rhom};
use crate::group::FlcaGroup;
use crate::hom::{hom, tensor};
use crate::k0::k0_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Rhom,
    Hom,
    Tensor,
    Dtensor,
    K0Mul,
}

impl TableOp {
    pub fn name(self) -> &'static str {
        match self {
            TableOp::Rhom => "rhom",
            TableOp::Hom => "hom",
            TableOp::Tensor => "tensor",
            TableOp::Dtensor => "dtensor",
            TableOp::K0Mul => "k0mul",
        }
    }

    pub fn cell(self, a: Atom, b: Atom) -> String {
        match self {
            TableOp::Rhom => rhom(&a.into(), &b.into()).to_string(),
            TableOp::Hom => hom(&a.into(), &b.into()).to_string(),
            TableOp::Tensor => tensor(&a.into(), &b.into()).to_string(),
            TableOp::Dtensor => derived_tensor(&a.into(), &b.into()).to_string(),
            TableOp::K0Mul => k0_of(&FlcaGroup::atom(a)).mul(&k0_of(&FlcaGroup::atom(b))).to_string(),
        }
    }
}

impl FromStr for TableOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rhom" => Ok(TableOp::Rhom),
            "hom" => Ok(TableOp::Hom),
            "tensor" => Ok(TableOp::Tensor),
            "dtensor" => Ok(TableOp::Dtensor),
            "k0mul" => Ok(TableOp::K0Mul),
            _ => Err(format!("unknown table operation `{s}` (expected rhom, hom, tensor, dtensor or k0mul)")),
        }
    }
}

/// Cells in row-major order; row `i`, column `j` is `op(atoms[i], atoms[j])`.
pub fn cells(op: TableOp, atoms: &[Atom]) -> Vec<Vec<String>> {
    atoms.iter().map(|&a| atoms.iter().map(|&b| op.cell(a, b)).collect()).collect()
}

pub fn to_tsv(op: TableOp, atoms: &[Atom]) -> String {
    let mut out = String::new();
    out.push_str(op.name());
    for a in atoms {
        out.push('\t');
        out.push_str(&a.to_string());
    }
    out.push('\n');
    for (a, row) in atoms.iter().zip(cells(op, atoms)) {
        out.push_str(&a.to_string());
        for cell in row {
            out.push('\t');
            out.push_str(&cell);
        }
        out.push('\n');
    }
    out
}

pub fn to_json(op: TableOp, atoms: &[Atom]) -> serde_json::Value {
    let names: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    json!({ "op": op.name(), "atoms": names, "cells": cells(op, atoms) })
}

/// The atoms of the standard table at the given primes and exponents: the
/// global atoms except 𝔸_fin (unless requested), then the p-local ones.
pub fn table_atoms(primes: &[crate::atom::Prime], exponents: &[u32], with_finite_adeles: bool) -> crate::Result<Vec<Atom>> {
    let mut atoms = Atom::catalogue(primes, exponents)?;
    if !with_finite_adeles {
        atoms.retain(|&a| a != Atom::FinAdele);
    }
    Ok(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::p;

    #[test]
    fn parses_operation_names() {
        assert_eq!("k0mul".parse::<TableOp>(), Ok(TableOp::K0Mul));
        assert!("rhomm".parse::<TableOp>().is_err());
    }

    #[test]
    fn small_table() {
        let tsv = to_tsv(TableOp::Hom, &[Atom::Int, Atom::Circle]);
        assert_eq!(tsv, "hom\tZ\tT\nZ\tZ\tT\nT\t0\tZ\n");
        let j = to_json(TableOp::Rhom, &[Atom::Rat, Atom::Int]);
        assert_eq!(j["cells"][0][1], "E");
    }

    #[test]
    fn atom_selection() {
        let atoms = table_atoms(&[p(2)], &[1], false).unwrap();
        let names: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["Z", "Q", "R", "T", "Sol", "A", "Z/2", "Z_2", "Q_2", "Q_2/Z_2"]);
        assert_eq!(table_atoms(&[p(2)], &[1], true).unwrap().len(), 11);
    }
}
