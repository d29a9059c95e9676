//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::atom::{Atom, Prime};
use crate::group::FlcaGroup;

pub(crate) fn p(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

pub(crate) fn arb_atom() -> impl Strategy<Value = Atom> {
    let primes = prop::sample::select(vec![2u64, 3, 5, 7]);
    prop_oneof![
        prop::sample::select(Atom::GLOBAL.to_vec()),
        (primes.clone(), 1u32..4).prop_map(|(q, n)| Atom::fin_cyc(p(q), n).unwrap()),
        primes.clone().prop_map(|q| Atom::ProInt(p(q))),
        primes.clone().prop_map(|q| Atom::PAdic(p(q))),
        primes.prop_map(|q| Atom::Pruefer(p(q))),
    ]
}

pub(crate) fn arb_group() -> impl Strategy<Value = FlcaGroup> {
    prop::collection::vec((arb_atom(), 0u64..3), 0..6).prop_map(FlcaGroup::canonicalize)
}

/// Every atom at p ∈ {2, 3, 5}, n ∈ {1, 2}.
pub(crate) fn small_atoms() -> Vec<Atom> {
    Atom::catalogue(&[p(2), p(3), p(5)], &[1, 2]).unwrap()
}
