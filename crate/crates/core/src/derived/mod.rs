//! Derived Hom on bounded split complexes of atoms.
//!
//! Objects are finite sums of shifted indecomposables. Besides the atoms there
//! are two indecomposable two-term complexes: `E = [ℚ ↪ 𝔸_fin]` with ℚ in
//! degree 0 and 𝔸_fin in degree 1, and its dual `E* = [𝔸_fin → ℚ^∨]` in
//! degrees -1 and 0. A term `X[n]` sits in cohomological degree `-n`.
//!
//! The degree placement of `E` is a convention: it is the one for which
//! `Ext⁰(ℚ, ℤ) = Hom(ℚ, ℤ) = 0`. The heart token coming from `E*` is
//! reported in the degree of its ℚ^∨ term.

mod table;

use std::collections::BTreeMap;
use std::fmt;

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::group::{write_power, FlcaGroup};

pub use table::atom_rhom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indecomposable {
    Atom(Atom),
    /// [ℚ ↪ 𝔸_fin], degrees 0 and 1
    E,
    /// [𝔸_fin → ℚ^∨], degrees -1 and 0
    EDual,
}

impl Indecomposable {
    pub fn dual(self) -> Indecomposable {
        match self {
            Indecomposable::Atom(a) => Indecomposable::Atom(a.dual()),
            Indecomposable::E => Indecomposable::EDual,
            Indecomposable::EDual => Indecomposable::E,
        }
    }

    /// Unshifted cohomological degrees occupied, with the group in each.
    pub fn components(self) -> Vec<(i64, Atom)> {
        match self {
            Indecomposable::Atom(a) => vec![(0, a)],
            Indecomposable::E => vec![(0, Atom::Rat), (1, Atom::FinAdele)],
            Indecomposable::EDual => vec![(-1, Atom::FinAdele), (0, Atom::Solenoid)],
        }
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indecomposable::Atom(a) => write!(f, "{a}"),
            Indecomposable::E => f.write_str("E"),
            Indecomposable::EDual => f.write_str("E*"),
        }
    }
}

/// Sort key: cohomological degree first, then the indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Slot {
    degree: i64,
    ind: Indecomposable,
}

/// A finite sum of shifted indecomposables in canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivedObject {
    terms: BTreeMap<Slot, u64>,
}

impl DerivedObject {
    pub fn zero() -> Self {
        DerivedObject::default()
    }

    /// Builds a canonical form from `((indecomposable, shift), multiplicity)` triples.
    pub fn from_terms<I: IntoIterator<Item = ((Indecomposable, i64), u64)>>(raw: I) -> Self {
        let mut terms = BTreeMap::new();
        for ((ind, shift), k) in raw {
            if k > 0 {
                *terms.entry(Slot { degree: -shift, ind }).or_insert(0) += k;
            }
        }
        DerivedObject { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((indecomposable, shift), multiplicity)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = ((Indecomposable, i64), u64)> + '_ {
        self.terms.iter().map(|(s, &k)| ((s.ind, -s.degree), k))
    }

    pub fn shift(&self, n: i64) -> Self {
        DerivedObject::from_terms(self.terms().map(|((ind, s), k)| ((ind, s + n), k)))
    }

    pub fn scale(&self, k: u64) -> Self {
        DerivedObject::from_terms(self.terms().map(|(t, m)| (t, m * k)))
    }

    pub fn contains_e(&self) -> bool {
        self.terms.keys().any(|s| !matches!(s.ind, Indecomposable::Atom(_)))
    }

    /// Termwise dual with negated shifts.
    pub fn dual(&self) -> Self {
        DerivedObject::from_terms(self.terms().map(|((ind, s), k)| ((ind.dual(), -s), k)))
    }

    /// The degree-`n` group of atom terms; E-type terms contribute nothing.
    pub fn atoms_in_degree(&self, n: i64) -> FlcaGroup {
        FlcaGroup::canonicalize(self.terms().filter_map(|((ind, s), k)| match ind {
            Indecomposable::Atom(a) if -s == n => Some((a, k)),
            _ => None,
        }))
    }

    /// Every (degree, atom, multiplicity) in the underlying graded object,
    /// including the two components of each E-type term.
    pub fn graded_components(&self) -> Vec<(i64, Atom, u64)> {
        let mut out = Vec::new();
        for ((ind, s), k) in self.terms() {
            for (d, a) in ind.components() {
                out.push((d - s, a, k));
            }
        }
        out
    }

    /// Lowest and highest degree carrying a nonzero term, if any.
    pub fn support(&self) -> Option<(i64, i64)> {
        let degrees: Vec<i64> = self.graded_components().iter().map(|&(d, _, _)| d).collect();
        Some((*degrees.iter().min()?, *degrees.iter().max()?))
    }
}

impl From<FlcaGroup> for DerivedObject {
    fn from(g: FlcaGroup) -> Self {
        DerivedObject::from_terms(g.terms().map(|(a, k)| ((Indecomposable::Atom(a), 0), k)))
    }
}

impl std::ops::Add for DerivedObject {
    type Output = DerivedObject;

    fn add(self, rhs: DerivedObject) -> DerivedObject {
        DerivedObject::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl std::iter::Sum for DerivedObject {
    fn sum<I: Iterator<Item = DerivedObject>>(iter: I) -> Self {
        iter.fold(DerivedObject::zero(), |acc, d| acc + d)
    }
}

impl fmt::Display for DerivedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((ind, shift), k)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_power(f, ind, k)?;
            if shift != 0 {
                write!(f, "[{shift}]")?;
            }
        }
        Ok(())
    }
}

/// A bounded complex of atoms with zero differentials.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedObject(DerivedObject);

impl GradedObject {
    pub fn zero() -> Self {
        GradedObject::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((Atom, i64), u64)>>(raw: I) -> Self {
        GradedObject(DerivedObject::from_terms(
            raw.into_iter().map(|((a, s), k)| ((Indecomposable::Atom(a), s), k)),
        ))
    }

    /// `((atom, shift), multiplicity)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = ((Atom, i64), u64)> + '_ {
        self.0.terms().map(|((ind, s), k)| match ind {
            Indecomposable::Atom(a) => ((a, s), k),
            _ => unreachable!("graded objects hold atoms only"),
        })
    }

    pub fn shift(&self, n: i64) -> Self {
        GradedObject(self.0.shift(n))
    }

    pub fn dual(&self) -> Self {
        GradedObject(self.0.dual())
    }

    pub fn as_derived(&self) -> &DerivedObject {
        &self.0
    }

    pub fn into_derived(self) -> DerivedObject {
        self.0
    }
}

impl From<FlcaGroup> for GradedObject {
    fn from(g: FlcaGroup) -> Self {
        GradedObject(g.into())
    }
}

impl From<Atom> for GradedObject {
    fn from(a: Atom) -> Self {
        GradedObject(FlcaGroup::atom(a).into())
    }
}

impl TryFrom<DerivedObject> for GradedObject {
    type Error = Error;

    fn try_from(d: DerivedObject) -> Result<Self> {
        if d.contains_e() {
            return Err(Error::NotSplit("rhom".into()));
        }
        Ok(GradedObject(d))
    }
}

impl fmt::Display for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// RHom(X, Y), extended bilinearly from atoms: a[m], b[n] contribute
/// RHom(a, b)[n - m].
pub fn rhom(x: &GradedObject, y: &GradedObject) -> DerivedObject {
    let mut parts = Vec::new();
    for ((a, m), j) in x.terms() {
        for ((b, n), k) in y.terms() {
            parts.push(atom_rhom(a, b).shift(n - m).scale(j * k));
        }
    }
    parts.into_iter().sum()
}

pub fn dual_derived(d: &DerivedObject) -> DerivedObject {
    d.dual()
}

/// X ⊗ᴸ Y = RHom(X, Y^∨)^∨.
pub fn derived_tensor(x: &GradedObject, y: &GradedObject) -> DerivedObject {
    dual_derived(&rhom(x, &y.dual()))
}

/// Cokernels of the two non-strict monomorphisms; they exist only in the
/// left heart, not as LCA groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeartToken {
    CokQtoAfin,
    CokAfinToSol,
}

impl fmt::Display for HeartToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeartToken::CokQtoAfin => f.write_str("coker(Q > Afin)"),
            HeartToken::CokAfinToSol => f.write_str("coker(Afin > Sol)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtResult {
    Group(FlcaGroup),
    HeartSum(Vec<HeartToken>, FlcaGroup),
}

impl ExtResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, ExtResult::Group(g) if g.is_zero())
    }

    pub fn as_group(&self) -> Option<&FlcaGroup> {
        match self {
            ExtResult::Group(g) => Some(g),
            ExtResult::HeartSum(..) => None,
        }
    }
}

impl fmt::Display for ExtResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtResult::Group(g) => write!(f, "{g}"),
            ExtResult::HeartSum(tokens, g) => {
                for (i, t) in tokens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                if !g.is_zero() {
                    write!(f, " + {g}")?;
                }
                Ok(())
            }
        }
    }
}

/// Hⁿ of a derived object.
pub fn cohomology(d: &DerivedObject, n: i64) -> ExtResult {
    let mut tokens = Vec::new();
    for ((ind, shift), k) in d.terms() {
        let token = match ind {
            Indecomposable::Atom(_) => None,
            Indecomposable::E if 1 - shift == n => Some(HeartToken::CokQtoAfin),
            Indecomposable::EDual if -shift == n => Some(HeartToken::CokAfinToSol),
            _ => None,
        };
        if let Some(t) = token {
            tokens.extend(std::iter::repeat(t).take(k as usize));
        }
    }
    tokens.sort();
    let group = d.atoms_in_degree(n);
    if tokens.is_empty() {
        ExtResult::Group(group)
    } else {
        ExtResult::HeartSum(tokens, group)
    }
}

/// Extⁿ(X, Y) = Hⁿ(RHom(X, Y)).
pub fn ext(n: i64, x: &GradedObject, y: &GradedObject) -> ExtResult {
    cohomology(&rhom(x, y), n)
}
