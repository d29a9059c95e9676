//! The atom vocabulary: the eleven indecomposable building blocks out of which
//! every representable group of finite ranks is a finite direct sum.

use std::fmt;

use crate::error::{Error, Result};

/// A rational prime, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The smallest prime strictly greater than `self`.
    pub fn next(self) -> Prime {
        let mut candidate = self.0 + 1;
        while !is_prime(candidate) {
            candidate += 1;
        }
        Prime(candidate)
    }

    /// The smallest prime not contained in `excluded`.
    pub fn first_outside<I: IntoIterator<Item = Prime>>(excluded: I) -> Prime {
        let excluded: std::collections::BTreeSet<Prime> = excluded.into_iter().collect();
        let mut p = Prime(2);
        while excluded.contains(&p) {
            p = p.next();
        }
        p
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^n` with `n >= 1`, small enough that the order fits in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    p: Prime,
    n: u32,
}

impl PrimePower {
    pub fn new(p: Prime, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroExponent { p: p.get(), n });
        }
        p.get()
            .checked_pow(n)
            .ok_or(Error::OrderOverflow { p: p.get(), n })?;
        Ok(PrimePower { p, n })
    }

    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn exponent(self) -> u32 {
        self.n
    }

    pub fn order(self) -> u64 {
        // checked in `new`
        self.p.get().pow(self.n)
    }

    pub(crate) fn with_exponent(self, n: u32) -> PrimePower {
        debug_assert!(n >= 1 && n <= self.n);
        PrimePower { p: self.p, n }
    }
}

/// One of the eleven indecomposable finite-rank LCA groups.
///
/// The derived `Ord` is the canonical total order: family (in declaration
/// order), then prime, then exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// ℤ
    Int,
    /// ℚ (discrete)
    Rat,
    /// ℝ
    Real,
    /// the circle S¹
    Circle,
    /// the solenoid ℚ^∨
    Solenoid,
    /// the adeles 𝔸
    Adele,
    /// the finite adeles 𝔸_fin
    FinAdele,
    /// ℤ/pⁿ
    FinCyc(PrimePower),
    /// ℤ_p
    ProInt(Prime),
    /// ℚ_p
    PAdic(Prime),
    /// ℚ_p/ℤ_p
    Pruefer(Prime),
}

impl Atom {
    pub const GLOBAL: [Atom; 7] = [
        Atom::Int,
        Atom::Rat,
        Atom::Real,
        Atom::Circle,
        Atom::Solenoid,
        Atom::Adele,
        Atom::FinAdele,
    ];

    pub fn fin_cyc(p: Prime, n: u32) -> Result<Atom> {
        Ok(Atom::FinCyc(PrimePower::new(p, n)?))
    }

    /// The prime at which this atom is a topological p-group, if any.
    pub fn local_prime(self) -> Option<Prime> {
        match self {
            Atom::FinCyc(q) => Some(q.prime()),
            Atom::ProInt(p) | Atom::PAdic(p) | Atom::Pruefer(p) => Some(p),
            _ => None,
        }
    }

    /// Pontryagin dual of the atom.
    pub fn dual(self) -> Atom {
        match self {
            Atom::Int => Atom::Circle,
            Atom::Circle => Atom::Int,
            Atom::Rat => Atom::Solenoid,
            Atom::Solenoid => Atom::Rat,
            Atom::ProInt(p) => Atom::Pruefer(p),
            Atom::Pruefer(p) => Atom::ProInt(p),
            Atom::Real | Atom::Adele | Atom::FinAdele | Atom::FinCyc(_) | Atom::PAdic(_) => self,
        }
    }

    /// Every atom whose prime lies in `primes` and whose cyclic exponent lies
    /// in `exponents`, together with the seven global atoms, in canonical order.
    pub fn catalogue(primes: &[Prime], exponents: &[u32]) -> Result<Vec<Atom>> {
        let mut atoms: Vec<Atom> = Atom::GLOBAL.to_vec();
        for &p in primes {
            for &n in exponents {
                atoms.push(Atom::fin_cyc(p, n)?);
            }
            atoms.extend([Atom::ProInt(p), Atom::PAdic(p), Atom::Pruefer(p)]);
        }
        atoms.sort();
        atoms.dedup();
        Ok(atoms)
    }

    /// The ten atoms of the classical RHom table at a given `p^n`.
    pub fn table_atoms(q: PrimePower) -> [Atom; 10] {
        let p = q.prime();
        [
            Atom::Int,
            Atom::Rat,
            Atom::Real,
            Atom::Circle,
            Atom::Solenoid,
            Atom::Adele,
            Atom::FinCyc(q),
            Atom::ProInt(p),
            Atom::PAdic(p),
            Atom::Pruefer(p),
        ]
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int => f.write_str("Z"),
            Atom::Rat => f.write_str("Q"),
            Atom::Real => f.write_str("R"),
            Atom::Circle => f.write_str("T"),
            Atom::Solenoid => f.write_str("Sol"),
            Atom::Adele => f.write_str("A"),
            Atom::FinAdele => f.write_str("Afin"),
            Atom::FinCyc(q) => write!(f, "Z/{}", q.order()),
            Atom::ProInt(p) => write!(f, "Z_{p}"),
            Atom::PAdic(p) => write!(f, "Q_{p}"),
            Atom::Pruefer(p) => write!(f, "Q_{p}/Z_{p}"),
        }
    }
}
