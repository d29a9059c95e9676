//! The Grothendieck ring K₀ of groups of finite ranks, identified with
//! ∏_v ℤ² over the places of ℚ.
//!
//! Two coordinate systems are used. In the compact-discrete basis the pair
//! (r_v, s_v) stands for r_∞[ℤ] + s_∞[S¹] + [∏ ℤ_p^{r_p}] + [⊕ (ℚ_p/ℤ_p)^{s_p}];
//! this one turns duality into swapping the two coordinates. In the adelic
//! basis the pair stands for r_∞[ℝ] − s_∞[ℚ^∨] + [restricted ∏ (ℚ_p^{r_p} : ℤ_p^{r_p})]
//! − [⊕ (ℚ_p/ℤ_p)^{s_p}]; there multiplication is componentwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::atom::{Atom, Prime};
use crate::derived::{rhom, DerivedObject, GradedObject, Indecomposable};
use crate::group::FlcaGroup;
use crate::structure::ranks;

pub type Pair = (i64, i64);

/// An eventually constant element of ∏_v ℤ²: a value at ∞, a default value
/// at almost all primes, and finitely many exceptions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PlaceVector {
    pub at_infinity: Pair,
    pub default: Pair,
    exceptions: BTreeMap<Prime, Pair>,
}

impl PlaceVector {
    pub fn new(at_infinity: Pair, default: Pair, exceptions: impl IntoIterator<Item = (Prime, Pair)>) -> Self {
        let exceptions = exceptions.into_iter().filter(|&(_, v)| v != default).collect();
        PlaceVector { at_infinity, default, exceptions }
    }

    pub fn at(&self, p: Prime) -> Pair {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    /// Primes whose value differs from the default, ascending.
    pub fn exceptions(&self) -> impl Iterator<Item = (Prime, Pair)> + '_ {
        self.exceptions.iter().map(|(&p, &v)| (p, v))
    }

    fn zip_with(&self, other: &PlaceVector, f: impl Fn(Pair, Pair) -> Pair) -> PlaceVector {
        let primes: Vec<Prime> = self.exceptions.keys().chain(other.exceptions.keys()).copied().collect();
        PlaceVector::new(
            f(self.at_infinity, other.at_infinity),
            f(self.default, other.default),
            primes.into_iter().map(|p| (p, f(self.at(p), other.at(p)))),
        )
    }

    /// Applies `finite` to every prime's pair (given the pair at ∞) and `inf` at ∞.
    fn remap(&self, inf: impl Fn(Pair) -> Pair, finite: impl Fn(Pair, Pair) -> Pair) -> PlaceVector {
        let i = self.at_infinity;
        PlaceVector::new(
            inf(i),
            finite(self.default, i),
            self.exceptions().map(|(p, v)| (p, finite(v, i))),
        )
    }
}

impl fmt::Display for PlaceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.at_infinity;
        let (c, d) = self.default;
        write!(f, "({a},{b}); default ({c},{d})")?;
        for (i, (p, (r, s))) in self.exceptions().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            write!(f, "{p}:({r},{s})")?;
        }
        Ok(())
    }
}

/// A class in K₀, in compact-discrete coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct K0Class(pub PlaceVector);

/// A class in K₀, in adelic coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AdelicCoords(pub PlaceVector);

impl K0Class {
    pub fn zero() -> Self {
        K0Class::default()
    }

    pub fn new(at_infinity: Pair, default: Pair, exceptions: impl IntoIterator<Item = (Prime, Pair)>) -> Self {
        K0Class(PlaceVector::new(at_infinity, default, exceptions))
    }

    pub fn coords(&self) -> &PlaceVector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        *self == K0Class::zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        K0Class(self.0.remap(|(a, b)| (k * a, k * b), |(a, b), _| (k * a, k * b)))
    }

    /// The class of the dual: swap coordinates at every place.
    pub fn involution(&self) -> Self {
        K0Class(self.0.remap(|(a, b)| (b, a), |(a, b), _| (b, a)))
    }

    pub fn to_adelic(&self) -> AdelicCoords {
        // r_∞ = a_∞, s_∞ = a_∞ − b_∞, r_p = a_p + s_∞, s_p = r_p − b_p
        AdelicCoords(self.0.remap(
            |(a, b)| (a, a - b),
            |(ap, bp), (ai, bi)| {
                let rp = ap + ai - bi;
                (rp, rp - bp)
            },
        ))
    }

    pub fn from_adelic(x: &AdelicCoords) -> Self {
        // a_∞ = r_∞, b_∞ = r_∞ − s_∞, a_p = r_p − s_∞, b_p = r_p − s_p
        K0Class(x.0.remap(|(r, s)| (r, r - s), |(rp, sp), (_, si)| (rp - si, rp - sp)))
    }

    /// Ring product, componentwise in adelic coordinates.
    pub fn mul(&self, other: &K0Class) -> K0Class {
        let x = self.to_adelic();
        let y = other.to_adelic();
        K0Class::from_adelic(&AdelicCoords(x.0.zip_with(&y.0, |(a, b), (c, d)| (a * c, b * d))))
    }

    /// The multiplicative unit, [ℤ].
    pub fn one() -> Self {
        k0_of_atom(Atom::Int)
    }
}

impl Add for K0Class {
    type Output = K0Class;

    fn add(self, rhs: K0Class) -> K0Class {
        K0Class(self.0.zip_with(&rhs.0, |(a, b), (c, d)| (a + c, b + d)))
    }
}

impl<'a> Add<&'a K0Class> for &'a K0Class {
    type Output = K0Class;

    fn add(self, rhs: &'a K0Class) -> K0Class {
        K0Class(self.0.zip_with(&rhs.0, |(a, b), (c, d)| (a + c, b + d)))
    }
}

impl Neg for K0Class {
    type Output = K0Class;

    fn neg(self) -> K0Class {
        self.scale(-1)
    }
}

impl Sub for K0Class {
    type Output = K0Class;

    fn sub(self, rhs: K0Class) -> K0Class {
        self + (-rhs)
    }
}

impl std::iter::Sum for K0Class {
    fn sum<I: Iterator<Item = K0Class>>(iter: I) -> Self {
        iter.fold(K0Class::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for AdelicCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn k0_of_atom(a: Atom) -> K0Class {
    let local = |p: Prime, v: Pair| K0Class::new((0, 0), (0, 0), [(p, v)]);
    match a {
        Atom::FinCyc(_) => K0Class::zero(),
        Atom::ProInt(p) => local(p, (1, 0)),
        Atom::Pruefer(p) => local(p, (0, 1)),
        Atom::PAdic(p) => local(p, (1, 1)),
        Atom::Int => K0Class::new((1, 0), (0, 0), []),
        Atom::Circle => K0Class::new((0, 1), (0, 0), []),
        Atom::Real => K0Class::new((1, 1), (0, 0), []),
        Atom::Rat => K0Class::new((1, 0), (0, 1), []),
        Atom::Solenoid => K0Class::new((0, 1), (1, 0), []),
        Atom::Adele => K0Class::new((1, 1), (1, 1), []),
        Atom::FinAdele => K0Class::new((0, 0), (1, 1), []),
    }
}

pub fn k0_of(x: &FlcaGroup) -> K0Class {
    x.terms().map(|(a, k)| k0_of_atom(a).scale(k as i64)).sum()
}

/// Euler characteristic Σ (−1)ⁿ [Aⁿ] of a derived object.
pub fn k0_of_derived(d: &DerivedObject) -> K0Class {
    d.graded_components()
        .into_iter()
        .map(|(degree, a, k)| {
            let sign = if degree.rem_euclid(2) == 0 { 1 } else { -1 };
            k0_of_atom(a).scale(sign * k as i64)
        })
        .sum()
}

pub fn k0_of_graded(x: &GradedObject) -> K0Class {
    k0_of_derived(x.as_derived())
}

/// Candidate recipes for reading compact-discrete coordinates off rank
/// invariants and Euler characteristics against ℚ_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftInverseFormula {
    /// r_p = s_∞ + χ(RHom(A, ℚ_p)), s_p = r_∞ + χ(RHom(ℚ_p, A))
    Literal,
    /// r_p = χ(RHom(A, ℚ_p)) − r_∞ + s_∞, s_p = χ(RHom(ℚ_p, A)) + r_∞ − s_∞
    Corrected,
}

impl fmt::Display for LeftInverseFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeftInverseFormula::Literal => f.write_str("literal"),
            LeftInverseFormula::Corrected => f.write_str("corrected"),
        }
    }
}

/// Σ (−1)ⁿ dim_{ℚ_p} Hⁿ(D); every atom in D must be ℚ_p.
fn qp_euler_characteristic(d: &DerivedObject, p: Prime) -> i64 {
    d.graded_components()
        .into_iter()
        .map(|(degree, a, k)| {
            assert_eq!(a, Atom::PAdic(p), "non-ℚ_p term in an RHom against ℚ_p: {d}");
            if degree.rem_euclid(2) == 0 { k as i64 } else { -(k as i64) }
        })
        .sum()
}

impl LeftInverseFormula {
    pub fn evaluate(self, x: &FlcaGroup) -> K0Class {
        let profile = ranks(x);
        let r_inf = profile.z_rank as i64;
        let s_inf = profile.s1_rank as i64;
        let graded: GradedObject = x.clone().into();
        let at_prime = |p: Prime| -> Pair {
            let qp: GradedObject = Atom::PAdic(p).into();
            let chi_out = qp_euler_characteristic(&rhom(&graded, &qp), p);
            let chi_in = qp_euler_characteristic(&rhom(&qp, &graded), p);
            match self {
                LeftInverseFormula::Literal => (s_inf + chi_out, r_inf + chi_in),
                LeftInverseFormula::Corrected => (chi_out - r_inf + s_inf, chi_in + r_inf - s_inf),
            }
        };
        let local = x.local_primes();
        let generic = Prime::first_outside(local.iter().copied());
        K0Class::new((r_inf, s_inf), at_prime(generic), local.into_iter().map(|p| (p, at_prime(p))))
    }

    /// Whether the recipe returns the defining coordinates on ℤ, S¹, ℤ_p and
    /// ℚ_p/ℤ_p, the generators of the compact-discrete basis.
    pub fn inverts_generators(self) -> bool {
        let primes = [2u64, 3, 5, 7].map(|v| Prime::new(v).unwrap());
        let mut cases = vec![
            (Atom::Int, K0Class::new((1, 0), (0, 0), [])),
            (Atom::Circle, K0Class::new((0, 1), (0, 0), [])),
        ];
        for p in primes {
            cases.push((Atom::ProInt(p), K0Class::new((0, 0), (0, 0), [(p, (1, 0))])));
            cases.push((Atom::Pruefer(p), K0Class::new((0, 0), (0, 0), [(p, (0, 1))])));
        }
        cases.into_iter().all(|(a, expected)| self.evaluate(&a.into()) == expected)
    }
}

/// The unique candidate recipe that inverts the generators, or `None` if
/// zero or both do.
pub fn select_left_inverse() -> Option<LeftInverseFormula> {
    let winners: Vec<LeftInverseFormula> = [LeftInverseFormula::Literal, LeftInverseFormula::Corrected]
        .into_iter()
        .filter(|f| f.inverts_generators())
        .collect();
    match winners.as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

fn selected_left_inverse() -> LeftInverseFormula {
    static WINNER: OnceLock<LeftInverseFormula> = OnceLock::new();
    *WINNER.get_or_init(|| select_left_inverse().expect("exactly one left-inverse recipe inverts the generators"))
}

/// Recovers the class of `x` from rank invariants and Euler characteristics.
pub fn k0_from_invariants(x: &FlcaGroup) -> K0Class {
    selected_left_inverse().evaluate(x)
}

/// Class of an indecomposable two-term complex, for reference in tests and docs.
pub fn k0_of_indecomposable(ind: Indecomposable) -> K0Class {
    k0_of_derived(&DerivedObject::from_terms([((ind, 0), 1)]))
}
