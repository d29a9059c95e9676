//! Hom and the tensor product `A ⊗ B := Hom(A, B^∨)^∨` on groups of finite
//! ranks. Hom of two atoms is the degree-0 part of their RHom.

use crate::derived::atom_rhom;
use crate::group::FlcaGroup;

pub fn hom(x: &FlcaGroup, y: &FlcaGroup) -> FlcaGroup {
    let mut parts = Vec::new();
    for (a, j) in x.terms() {
        for (b, k) in y.terms() {
            parts.push(atom_rhom(a, b).atoms_in_degree(0).scale(j * k));
        }
    }
    parts.into_iter().sum()
}

pub fn tensor(x: &FlcaGroup, y: &FlcaGroup) -> FlcaGroup {
    hom(x, &y.dual()).dual()
}
