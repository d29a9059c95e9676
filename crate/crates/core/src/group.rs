//! Finite direct sums of atoms in canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::atom::{Atom, Prime, PrimePower};
use crate::error::{Error, Result};

/// A finite direct sum of atoms, stored as a sorted multiset.
///
/// Equality is equality of canonical forms; the empty sum is the zero group.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlcaGroup {
    terms: BTreeMap<Atom, u64>,
}

impl FlcaGroup {
    pub fn zero() -> Self {
        FlcaGroup::default()
    }

    pub fn atom(a: Atom) -> Self {
        FlcaGroup::canonicalize([(a, 1)])
    }

    /// Sorts, merges, and drops zero counts.
    pub fn canonicalize<I: IntoIterator<Item = (Atom, u64)>>(raw: I) -> Self {
        let mut terms = BTreeMap::new();
        for (atom, count) in raw {
            if count > 0 {
                *terms.entry(atom).or_insert(0) += count;
            }
        }
        FlcaGroup { terms }
    }

    /// ℤ/m as a sum of cyclic groups of prime power order.
    pub fn cyclic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut raw = Vec::new();
        for (p, n) in factorize(m) {
            raw.push((Atom::FinCyc(PrimePower::new(p, n)?), 1));
        }
        Ok(FlcaGroup::canonicalize(raw))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn count(&self, a: Atom) -> u64 {
        self.terms.get(&a).copied().unwrap_or(0)
    }

    /// Atoms with multiplicities, in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Atom, u64)> + '_ {
        self.terms.iter().map(|(&a, &k)| (a, k))
    }

    /// Each atom repeated according to its multiplicity.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.terms()
            .flat_map(|(a, k)| std::iter::repeat(a).take(k as usize))
    }

    /// Total number of atoms counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Primes at which some summand is a topological p-group.
    pub fn local_primes(&self) -> Vec<Prime> {
        let mut primes: Vec<Prime> = self.terms.keys().filter_map(|a| a.local_prime()).collect();
        primes.sort();
        primes.dedup();
        primes
    }

    pub fn scale(&self, k: u64) -> Self {
        FlcaGroup::canonicalize(self.terms().map(|(a, m)| (a, m * k)))
    }

    /// Pontryagin dual, summand by summand.
    pub fn dual(&self) -> Self {
        FlcaGroup::canonicalize(self.terms().map(|(a, k)| (a.dual(), k)))
    }

    /// Rewrites every 𝔸 as ℝ ⊕ 𝔸_fin.
    pub fn split_adeles(&self) -> Self {
        FlcaGroup::canonicalize(self.terms().flat_map(|(a, k)| match a {
            Atom::Adele => vec![(Atom::Real, k), (Atom::FinAdele, k)],
            _ => vec![(a, k)],
        }))
    }

    /// Multiset difference, if `other` is contained in `self`.
    pub fn checked_sub(&self, other: &FlcaGroup) -> Option<Self> {
        let mut terms = self.terms.clone();
        for (a, k) in other.terms() {
            let slot = terms.get_mut(&a)?;
            *slot = slot.checked_sub(k)?;
            if *slot == 0 {
                terms.remove(&a);
            }
        }
        Some(FlcaGroup { terms })
    }
}

impl From<Atom> for FlcaGroup {
    fn from(a: Atom) -> Self {
        FlcaGroup::atom(a)
    }
}

impl Add for FlcaGroup {
    type Output = FlcaGroup;

    fn add(self, rhs: FlcaGroup) -> FlcaGroup {
        FlcaGroup::canonicalize(self.terms().chain(rhs.terms()))
    }
}

impl<'a> Add<&'a FlcaGroup> for &'a FlcaGroup {
    type Output = FlcaGroup;

    fn add(self, rhs: &'a FlcaGroup) -> FlcaGroup {
        FlcaGroup::canonicalize(self.terms().chain(rhs.terms()))
    }
}

impl std::iter::Sum for FlcaGroup {
    fn sum<I: Iterator<Item = FlcaGroup>>(iter: I) -> Self {
        iter.fold(FlcaGroup::zero(), |acc, g| acc + g)
    }
}

/// Writes `term^k` for k > 1.
pub(crate) fn write_power(f: &mut fmt::Formatter<'_>, term: impl fmt::Display, k: u64) -> fmt::Result {
    if k == 1 {
        write!(f, "{term}")
    } else {
        write!(f, "{term}^{k}")
    }
}

impl fmt::Display for FlcaGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, k)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_power(f, a, k)?;
        }
        Ok(())
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut m: u64) -> Vec<(Prime, u32)> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            let mut n = 0;
            while m % d == 0 {
                m /= d;
                n += 1;
            }
            factors.push((Prime::new(d).expect("smallest divisor is prime"), n));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((Prime::new(m).expect("remaining cofactor is prime"), 1));
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{arb_group, p};
    use proptest::prelude::*;

    #[test]
    fn canonicalize_sorts_and_merges() {
        let g = FlcaGroup::canonicalize([(Atom::Circle, 1), (Atom::Int, 1), (Atom::Circle, 1)]);
        assert_eq!(g.to_string(), "Z + T^2");
        assert_eq!(FlcaGroup::canonicalize([]).to_string(), "0");
        let g = FlcaGroup::canonicalize([(Atom::fin_cyc(p(2), 3).unwrap(), 2)]);
        assert_eq!(g.to_string(), "Z/8^2");
        let g = FlcaGroup::canonicalize([(Atom::Real, 0), (Atom::Int, 2)]);
        assert_eq!(g.to_string(), "Z^2");
    }

    #[test]
    fn cyclic_decomposition() {
        assert_eq!(FlcaGroup::cyclic(12).unwrap().to_string(), "Z/4 + Z/3");
        assert_eq!(FlcaGroup::cyclic(1).unwrap().to_string(), "0");
        assert_eq!(FlcaGroup::cyclic(8).unwrap().to_string(), "Z/8");
        assert_eq!(FlcaGroup::cyclic(0), Err(Error::ZeroOrder));
        assert_eq!(FlcaGroup::cyclic(97).unwrap().to_string(), "Z/97");
    }

    /// Isomorphism type of ℤ/m via element orders: the number of elements of
    /// each order determines a finite abelian group.
    fn order_histogram(orders: impl Iterator<Item = u64>) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for o in orders {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn cyclic_decomposition_matches_element_orders() {
        for m in 1..=60u64 {
            let direct = order_histogram((0..m).map(|x| m / gcd(x, m)));
            // enumerate the product of the decomposed factors
            let orders: Vec<u64> = FlcaGroup::cyclic(m)
                .unwrap()
                .atoms()
                .map(|a| match a {
                    Atom::FinCyc(q) => q.order(),
                    _ => unreachable!(),
                })
                .collect();
            let mut elems: Vec<u64> = vec![1];
            for &o in &orders {
                let mut next = Vec::new();
                for &e in &elems {
                    for x in 0..o {
                        let ox = o / gcd(x, o);
                        next.push(e / gcd(e, ox) * ox);
                    }
                }
                elems = next;
            }
            assert_eq!(order_histogram(elems.into_iter()), direct, "m = {m}");
        }
    }

    #[test]
    fn split_and_subtract() {
        let a = FlcaGroup::atom(Atom::Adele);
        assert_eq!(a.split_adeles().to_string(), "R + Afin");
        let r = FlcaGroup::atom(Atom::Real);
        assert_eq!(a.split_adeles().checked_sub(&r).unwrap().to_string(), "Afin");
        assert_eq!(r.checked_sub(&a), None);
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(g in arb_group()) {
            prop_assert_eq!(FlcaGroup::canonicalize(g.terms()), g);
        }

        #[test]
        fn dual_is_an_involution(g in arb_group()) {
            prop_assert_eq!(g.dual().dual(), g);
        }

        #[test]
        fn dual_distributes_over_sums(g in arb_group(), h in arb_group()) {
            prop_assert_eq!((&g + &h).dual(), g.dual() + h.dual());
        }

        #[test]
        fn cyclic_is_multiplicative_on_coprime_orders(a in 1u64..2000, b in 1u64..2000) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(
                FlcaGroup::cyclic(a * b).unwrap(),
                FlcaGroup::cyclic(a).unwrap() + FlcaGroup::cyclic(b).unwrap()
            );
        }
    }
}
