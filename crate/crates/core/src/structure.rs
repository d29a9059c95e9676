//! Classification of atoms, the canonical filtration by types ℤ, S¹ and 𝔸,
//! rank invariants, p-components, and canonical two-term resolutions.

use std::collections::BTreeMap;
use std::fmt;

use crate::atom::{Atom, Prime};
use crate::group::FlcaGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeClass {
    /// discrete and torsion-free
    TypeZ,
    /// compact and connected
    TypeS1,
    /// vector group plus topological torsion
    TypeA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyRecord {
    pub compact: bool,
    pub discrete: bool,
    pub connected: bool,
    pub type_class: TypeClass,
    pub divisible: bool,
    pub strictly_divisible: bool,
    pub codivisible: bool,
    pub in_i: bool,
    pub in_p: bool,
    pub topological_torsion: bool,
    pub p_group_for: Option<Prime>,
}

pub fn classify_atom(a: Atom) -> PropertyRecord {
    use TypeClass::*;
    // (compact, discrete, connected, type, divisible, codivisible, toptors)
    let (compact, discrete, connected, type_class, divisible, codivisible, topological_torsion) = match a {
        Atom::Int => (false, true, false, TypeZ, false, true, false),
        Atom::Rat => (false, true, false, TypeZ, true, true, false),
        Atom::Real => (false, false, true, TypeA, true, true, false),
        Atom::Circle => (true, false, true, TypeS1, true, false, false),
        Atom::Solenoid => (true, false, true, TypeS1, true, true, false),
        Atom::Adele => (false, false, false, TypeA, true, true, false),
        Atom::FinAdele => (false, false, false, TypeA, true, true, true),
        Atom::FinCyc(_) => (true, true, false, TypeA, false, false, true),
        Atom::ProInt(_) => (true, false, false, TypeA, false, true, true),
        Atom::PAdic(_) => (false, false, false, TypeA, true, true, true),
        Atom::Pruefer(_) => (false, true, false, TypeA, true, false, true),
    };
    PropertyRecord {
        compact,
        discrete,
        connected,
        type_class,
        divisible,
        strictly_divisible: divisible,
        codivisible,
        in_i: divisible && type_class != TypeZ,
        in_p: codivisible && type_class != TypeS1,
        topological_torsion,
        p_group_for: a.local_prime(),
    }
}

/// Named predicates accepted by [`has_property`].
pub const PROPERTY_NAMES: [&str; 12] = [
    "compact",
    "discrete",
    "connected",
    "typeZ",
    "typeS1",
    "typeA",
    "divisible",
    "strictly_divisible",
    "codivisible",
    "in_I",
    "in_P",
    "toptors",
];

/// Evaluates a named property on a sum. A sum has a property iff every
/// summand has it; the zero group has all of them. `None` for unknown names.
pub fn has_property(name: &str, x: &FlcaGroup) -> Option<bool> {
    let test: fn(&PropertyRecord) -> bool = match name {
        "compact" => |r| r.compact,
        "discrete" => |r| r.discrete,
        "connected" => |r| r.connected,
        "typeZ" => |r| r.type_class == TypeClass::TypeZ,
        "typeS1" => |r| r.type_class == TypeClass::TypeS1,
        "typeA" => |r| r.type_class == TypeClass::TypeA,
        "divisible" => |r| r.divisible,
        "strictly_divisible" => |r| r.strictly_divisible,
        "codivisible" => |r| r.codivisible,
        "in_I" => |r| r.in_i,
        "in_P" => |r| r.in_p,
        "toptors" => |r| r.topological_torsion,
        _ => return None,
    };
    Some(x.terms().all(|(a, _)| test(&classify_atom(a))))
}

/// The prime `p` for which `x` is a nonzero topological p-group, if any.
pub fn p_group_for(x: &FlcaGroup) -> Option<Prime> {
    let primes: Vec<Option<Prime>> = x.terms().map(|(a, _)| a.local_prime()).collect();
    match primes.first() {
        Some(&Some(p)) if primes.iter().all(|&q| q == Some(p)) => Some(p),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub part_s1: FlcaGroup,
    pub part_a: FlcaGroup,
    pub part_z: FlcaGroup,
    pub part_r: FlcaGroup,
    pub part_toptors: FlcaGroup,
}

pub fn filtration(x: &FlcaGroup) -> Filtration {
    let mut s1 = Vec::new();
    let mut a_part = Vec::new();
    let mut z = Vec::new();
    let mut r = Vec::new();
    let mut toptors = Vec::new();
    for (a, k) in x.terms() {
        match classify_atom(a).type_class {
            TypeClass::TypeS1 => s1.push((a, k)),
            TypeClass::TypeZ => z.push((a, k)),
            TypeClass::TypeA => {
                a_part.push((a, k));
                match a {
                    Atom::Real => r.push((a, k)),
                    Atom::Adele => {
                        r.push((Atom::Real, k));
                        toptors.push((Atom::FinAdele, k));
                    }
                    _ => toptors.push((a, k)),
                }
            }
        }
    }
    Filtration {
        part_s1: FlcaGroup::canonicalize(s1),
        part_a: FlcaGroup::canonicalize(a_part),
        part_z: FlcaGroup::canonicalize(z),
        part_r: FlcaGroup::canonicalize(r),
        part_toptors: FlcaGroup::canonicalize(toptors),
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}); R: {}; toptors: {}",
            self.part_s1, self.part_a, self.part_z, self.part_r, self.part_toptors
        )
    }
}

/// Exponents of `|ker(p·)|` and `|coker(p·)|`.
pub type PrimeData = (u64, u64);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankProfile {
    pub z_rank: u64,
    pub s1_rank: u64,
    /// value at all primes not listed in `exceptions`
    pub default: PrimeData,
    pub exceptions: BTreeMap<Prime, PrimeData>,
}

impl RankProfile {
    pub fn at(&self, p: Prime) -> PrimeData {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    fn atom(a: Atom) -> RankProfile {
        let (z_rank, s1_rank, default, local) = match a {
            Atom::Int => (1, 0, (0, 1), None),
            Atom::Rat => (1, 0, (0, 0), None),
            Atom::Real => (1, 1, (0, 0), None),
            Atom::Circle => (0, 1, (1, 0), None),
            Atom::Solenoid => (0, 1, (0, 0), None),
            Atom::Adele => (1, 1, (0, 0), None),
            Atom::FinAdele => (0, 0, (0, 0), None),
            Atom::FinCyc(q) => (0, 0, (0, 0), Some((q.prime(), (1, 1)))),
            Atom::ProInt(p) => (0, 0, (0, 0), Some((p, (0, 1)))),
            Atom::PAdic(_) => (0, 0, (0, 0), None),
            Atom::Pruefer(p) => (0, 0, (0, 0), Some((p, (1, 0)))),
        };
        RankProfile { z_rank, s1_rank, default, exceptions: local.into_iter().collect() }
    }

    fn scale(&self, k: u64) -> RankProfile {
        RankProfile {
            z_rank: self.z_rank * k,
            s1_rank: self.s1_rank * k,
            default: (self.default.0 * k, self.default.1 * k),
            exceptions: self.exceptions.iter().map(|(&p, &(a, b))| (p, (a * k, b * k))).collect(),
        }
    }

    pub fn sum(&self, other: &RankProfile) -> RankProfile {
        let add = |x: PrimeData, y: PrimeData| (x.0 + y.0, x.1 + y.1);
        let default = add(self.default, other.default);
        let mut exceptions = BTreeMap::new();
        for &p in self.exceptions.keys().chain(other.exceptions.keys()) {
            let v = add(self.at(p), other.at(p));
            if v != default {
                exceptions.insert(p, v);
            }
        }
        RankProfile { z_rank: self.z_rank + other.z_rank, s1_rank: self.s1_rank + other.s1_rank, default, exceptions }
    }

    /// Profile of the dual group.
    pub fn swapped(&self) -> RankProfile {
        RankProfile {
            z_rank: self.s1_rank,
            s1_rank: self.z_rank,
            default: (self.default.1, self.default.0),
            exceptions: self.exceptions.iter().map(|(&p, &(a, b))| (p, (b, a))).collect(),
        }
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={}, s1={}; default ({},{})", self.z_rank, self.s1_rank, self.default.0, self.default.1)?;
        for (i, (p, (a, b))) in self.exceptions.iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            write!(f, "{p}:({a},{b})")?;
        }
        Ok(())
    }
}

pub fn ranks(x: &FlcaGroup) -> RankProfile {
    x.terms()
        .fold(RankProfile::default(), |acc, (a, k)| acc.sum(&RankProfile::atom(a).scale(k)))
}

/// Sum of the p-local summands, with one ℚ_p for every 𝔸 or 𝔸_fin summand.
pub fn p_component(x: &FlcaGroup, p: Prime) -> FlcaGroup {
    FlcaGroup::canonicalize(x.terms().filter_map(|(a, k)| match a {
        Atom::Adele | Atom::FinAdele => Some((Atom::PAdic(p), k)),
        _ if a.local_prime() == Some(p) => Some((a, k)),
        _ => None,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionKind {
    Injective,
    Projective,
}

/// A strictly exact sequence `0 → X → left → right → 0` (injective) or
/// `0 → left → right → X → 0` (projective).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub left: FlcaGroup,
    pub right: FlcaGroup,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ResolutionKind::Injective => "I",
            ResolutionKind::Projective => "P",
        };
        write!(f, "{tag}: ({}, {})", self.left, self.right)
    }
}

fn injective_atom(a: Atom) -> (Atom, Option<Atom>) {
    match a {
        Atom::Int => (Atom::Real, Some(Atom::Circle)),
        Atom::Rat => (Atom::Adele, Some(Atom::Solenoid)),
        Atom::FinCyc(q) => (Atom::Pruefer(q.prime()), Some(Atom::Pruefer(q.prime()))),
        Atom::ProInt(p) => (Atom::PAdic(p), Some(Atom::Pruefer(p))),
        _ => {
            debug_assert!(classify_atom(a).in_i);
            (a, None)
        }
    }
}

fn projective_atom(a: Atom) -> (Option<Atom>, Atom) {
    match a {
        Atom::Circle => (Some(Atom::Int), Atom::Real),
        Atom::Solenoid => (Some(Atom::Rat), Atom::Adele),
        Atom::FinCyc(q) => (Some(Atom::ProInt(q.prime())), Atom::ProInt(q.prime())),
        Atom::Pruefer(p) => (Some(Atom::ProInt(p)), Atom::PAdic(p)),
        _ => {
            debug_assert!(classify_atom(a).in_p);
            (None, a)
        }
    }
}

/// `0 → X → I⁰ → I¹ → 0` with both terms divisible and without ℤ-part.
pub fn resolve_injective(x: &FlcaGroup) -> Resolution {
    let mut i0 = Vec::new();
    let mut i1 = Vec::new();
    for (a, k) in x.terms() {
        let (first, second) = injective_atom(a);
        i0.push((first, k));
        i1.extend(second.map(|b| (b, k)));
    }
    Resolution {
        kind: ResolutionKind::Injective,
        left: FlcaGroup::canonicalize(i0),
        right: FlcaGroup::canonicalize(i1),
    }
}

/// `0 → P₁ → P₀ → X → 0` with both terms codivisible and without S¹-part.
pub fn resolve_projective(x: &FlcaGroup) -> Resolution {
    let mut p1 = Vec::new();
    let mut p0 = Vec::new();
    for (a, k) in x.terms() {
        let (first, second) = projective_atom(a);
        p1.extend(first.map(|b| (b, k)));
        p0.push((second, k));
    }
    Resolution {
        kind: ResolutionKind::Projective,
        left: FlcaGroup::canonicalize(p1),
        right: FlcaGroup::canonicalize(p0),
    }
}
