//! The master RHom table on atom pairs, stored generically in the prime and
//! instantiated at query time.

use crate::atom::{Atom, PrimePower};

use super::{DerivedObject, Indecomposable};

/// Atom families, rows and columns of the master table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Int,
    Rat,
    Real,
    Circle,
    Solenoid,
    Adele,
    FinAdele,
    FinCyc,
    ProInt,
    PAdic,
    Pruefer,
}

impl Family {
    fn of(a: Atom) -> Family {
        match a {
            Atom::Int => Family::Int,
            Atom::Rat => Family::Rat,
            Atom::Real => Family::Real,
            Atom::Circle => Family::Circle,
            Atom::Solenoid => Family::Solenoid,
            Atom::Adele => Family::Adele,
            Atom::FinAdele => Family::FinAdele,
            Atom::FinCyc(_) => Family::FinCyc,
            Atom::ProInt(_) => Family::ProInt,
            Atom::PAdic(_) => Family::PAdic,
            Atom::Pruefer(_) => Family::Pruefer,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A table entry before the prime and exponent are substituted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    Z,
    Q,
    R,
    T,
    Sol,
    A,
    Afin,
    /// ℤ/p^min(n, m) over the cyclic exponents of the arguments
    Cyc,
    Zp,
    Qp,
    QpZp,
    /// [ℚ ↪ 𝔸_fin] in degrees 0, 1
    E,
}

use Sym::*;

type Entry = &'static [(Sym, i64)];

const O: Entry = &[];

/// `MASTER[row][col]` is RHom(row, col) as (term, shift) pairs; shift -1
/// places a term in cohomological degree 1. Rows and columns follow the
/// canonical family order: ℤ, ℚ, ℝ, S¹, ℚ^∨, 𝔸, 𝔸_fin, ℤ/pⁿ, ℤ_p, ℚ_p, ℚ_p/ℤ_p.
///
/// The 𝔸_fin row and column are obtained by splitting 𝔸 = ℝ ⊕ 𝔸_fin and
/// removing the ℝ-contribution; `tests::finite_adele_entries_split_off_the_reals`
/// re-derives them.
#[rustfmt::skip]
const MASTER: [[Entry; 11]; 11] = [
    // ℤ
    [&[(Z, 0)], &[(Q, 0)], &[(R, 0)], &[(T, 0)], &[(Sol, 0)], &[(A, 0)], &[(Afin, 0)],
     &[(Cyc, 0)], &[(Zp, 0)], &[(Qp, 0)], &[(QpZp, 0)]],
    // ℚ
    [&[(E, 0)], &[(Q, 0)], &[(R, 0)], &[(Sol, 0)], &[(Sol, 0)], &[(A, 0)], &[(Afin, 0)],
     O, O, &[(Qp, 0)], &[(Qp, 0)]],
    // ℝ
    [O, O, &[(R, 0)], &[(R, 0)], &[(R, 0)], &[(R, 0)], O,
     O, O, O, O],
    // S¹
    [&[(Z, -1)], &[(Q, -1)], O, &[(Z, 0)], &[(E, 0)], &[(Afin, -1)], &[(Afin, -1)],
     &[(Cyc, -1)], &[(Zp, -1)], &[(Qp, -1)], &[(QpZp, -1)]],
    // ℚ^∨
    [&[(Q, -1)], &[(Q, -1)], O, &[(Q, 0)], &[(Q, 0)], O, O,
     O, O, O, O],
    // 𝔸
    [&[(Afin, -1)], O, &[(R, 0)], &[(A, 0)], &[(A, 0)], &[(A, 0)], &[(Afin, 0)],
     O, O, &[(Qp, 0)], &[(Qp, 0)]],
    // 𝔸_fin
    [&[(Afin, -1)], O, O, &[(Afin, 0)], &[(Afin, 0)], &[(Afin, 0)], &[(Afin, 0)],
     O, O, &[(Qp, 0)], &[(Qp, 0)]],
    // ℤ/pⁿ
    [&[(Cyc, -1)], O, O, &[(Cyc, 0)], O, O, O,
     &[(Cyc, 0), (Cyc, -1)], &[(Cyc, -1)], O, &[(Cyc, 0)]],
    // ℤ_p
    [&[(QpZp, -1)], O, O, &[(QpZp, 0)], &[(Qp, 0)], &[(Qp, 0)], &[(Qp, 0)],
     &[(Cyc, 0)], &[(Zp, 0)], &[(Qp, 0)], &[(QpZp, 0)]],
    // ℚ_p
    [&[(Qp, -1)], O, O, &[(Qp, 0)], &[(Qp, 0)], &[(Qp, 0)], &[(Qp, 0)],
     O, O, &[(Qp, 0)], &[(Qp, 0)]],
    // ℚ_p/ℤ_p
    [&[(Zp, -1)], O, O, &[(Zp, 0)], O, O, O,
     &[(Cyc, -1)], &[(Zp, -1)], O, &[(Zp, 0)]],
];

/// RHom of two atoms.
pub fn atom_rhom(a: Atom, b: Atom) -> DerivedObject {
    let prime = match (a.local_prime(), b.local_prime()) {
        (Some(p), Some(q)) if p != q => return DerivedObject::zero(),
        (p, q) => p.or(q),
    };
    let cyclic = match (a, b) {
        (Atom::FinCyc(x), Atom::FinCyc(y)) => Some(x.with_exponent(x.exponent().min(y.exponent()))),
        (Atom::FinCyc(x), _) | (_, Atom::FinCyc(x)) => Some(x),
        _ => None,
    };
    let entry = MASTER[Family::of(a).index()][Family::of(b).index()];
    DerivedObject::from_terms(entry.iter().map(|&(sym, shift)| {
        let ind = instantiate(sym, prime, cyclic);
        ((ind, shift), 1)
    }))
}

fn instantiate(sym: Sym, prime: Option<crate::atom::Prime>, cyclic: Option<PrimePower>) -> Indecomposable {
    let local = || prime.expect("p-local table entry needs a p-local argument");
    let atom = match sym {
        Z => Atom::Int,
        Q => Atom::Rat,
        R => Atom::Real,
        T => Atom::Circle,
        Sol => Atom::Solenoid,
        A => Atom::Adele,
        Afin => Atom::FinAdele,
        Cyc => Atom::FinCyc(cyclic.expect("cyclic table entry needs a cyclic argument")),
        Zp => Atom::ProInt(local()),
        Qp => Atom::PAdic(local()),
        QpZp => Atom::Pruefer(local()),
        E => return Indecomposable::E,
    };
    Indecomposable::Atom(atom)
}
