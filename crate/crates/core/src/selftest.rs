//! Built-in consistency checks, runnable from the command line.
//!
//! Each suite returns the number of checks it performed, or a description
//! of the first failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atom::{Atom, Prime, PrimePower};
use crate::derived::{derived_tensor, ext, rhom, ExtResult, GradedObject};
use crate::frontend::table::{to_tsv, TableOp};
use crate::group::FlcaGroup;
use crate::hom::{hom, tensor};
use crate::k0::{k0_of, k0_of_derived, select_left_inverse, K0Class};
use crate::structure::{resolve_injective, resolve_projective};

const TABLE_TEMPLATE: &str = include_str!("../data/rhom_table_template.tsv");

pub type SuiteResult = std::result::Result<usize, String>;

pub struct Suite {
    pub name: &'static str,
    pub run: fn() -> SuiteResult,
}

pub const SUITES: [Suite; 10] = [
    Suite { name: "rhom_table", run: rhom_table },
    Suite { name: "duality", run: duality },
    Suite { name: "ext", run: ext_suite },
    Suite { name: "monoidal", run: monoidal },
    Suite { name: "finite", run: finite },
    Suite { name: "k0mul", run: k0mul },
    Suite { name: "ring", run: ring },
    Suite { name: "involution", run: involution },
    Suite { name: "resolution", run: resolution },
    Suite { name: "left_inverse", run: left_inverse },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn primes(values: &[u64]) -> Vec<Prime> {
    values.iter().map(|&v| Prime::new(v).expect("hard-coded prime")).collect()
}

fn catalogue() -> Vec<Atom> {
    Atom::catalogue(&primes(&[2, 3]), &[1, 2]).expect("hard-coded catalogue")
}

fn check(ok: bool, count: &mut usize, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    *count += 1;
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// The classical RHom table with the local columns instantiated at `p^n`.
pub fn expected_table(q: PrimePower) -> String {
    let p = q.prime();
    TABLE_TEMPLATE
        .replace("{QpZp}", &Atom::Pruefer(p).to_string())
        .replace("{Qp}", &Atom::PAdic(p).to_string())
        .replace("{Zp}", &Atom::ProInt(p).to_string())
        .replace("{C}", &Atom::FinCyc(q).to_string())
}

fn rhom_table() -> SuiteResult {
    let mut n = 0;
    for p in primes(&[2, 3, 5, 7]) {
        for e in 1..=3 {
            let q = PrimePower::new(p, e).map_err(|err| err.to_string())?;
            let got = to_tsv(TableOp::Rhom, &Atom::table_atoms(q));
            let want = expected_table(q);
            for (g, w) in got.lines().zip(want.lines()) {
                check(g == w, &mut n, || format!("at {q:?}: got `{g}`, expected `{w}`"))?;
            }
        }
    }
    Ok(n)
}

fn duality() -> SuiteResult {
    let mut n = 0;
    let atoms = catalogue();
    for &a in &atoms {
        check(a.dual().dual() == a, &mut n, || format!("dual of dual of {a}"))?;
        for &b in &atoms {
            let lhs = rhom(&a.into(), &b.into());
            let rhs = rhom(&b.dual().into(), &a.dual().into());
            check(lhs == rhs, &mut n, || format!("RHom({a},{b}) = {lhs} but RHom({},{}) = {rhs}", b.dual(), a.dual()))?;
            let h = hom(&a.into(), &b.into());
            let hd = hom(&FlcaGroup::from(b).dual(), &FlcaGroup::from(a).dual());
            check(h == hd, &mut n, || format!("Hom({a},{b}) = {h} but the dual side gives {hd}"))?;
        }
    }
    Ok(n)
}

fn ext_suite() -> SuiteResult {
    let mut n = 0;
    let atoms = catalogue();
    for &a in &atoms {
        for &b in &atoms {
            let (x, y): (GradedObject, GradedObject) = (a.into(), b.into());
            for deg in [-2, -1, 2, 3] {
                let e = ext(deg, &x, &y);
                check(e.is_zero(), &mut n, || format!("Ext^{deg}({a},{b}) = {e}"))?;
            }
            let e0 = ext(0, &x, &y);
            let h = hom(&a.into(), &b.into());
            check(e0 == ExtResult::Group(h.clone()), &mut n, || format!("Ext^0({a},{b}) = {e0}, Hom = {h}"))?;
        }
    }
    for m in 1..=24u64 {
        for k in 1..=24u64 {
            let x = FlcaGroup::cyclic(m).map_err(|e| e.to_string())?;
            let y = FlcaGroup::cyclic(k).map_err(|e| e.to_string())?;
            let want = FlcaGroup::cyclic(gcd(m, k)).map_err(|e| e.to_string())?;
            let got = ext(1, &x.into(), &y.into());
            check(got == ExtResult::Group(want.clone()), &mut n, || format!("Ext^1(Z/{m}, Z/{k}) = {got}, expected {want}"))?;
        }
    }
    Ok(n)
}

fn monoidal() -> SuiteResult {
    let mut n = 0;
    let atoms = catalogue();
    let unit: GradedObject = Atom::Int.into();
    for &a in &atoms {
        let x: GradedObject = a.into();
        let t = derived_tensor(&unit, &x);
        check(t == *x.as_derived(), &mut n, || format!("Z ⊗L {a} = {t}"))?;
        for &b in &atoms {
            let y: GradedObject = b.into();
            let l = derived_tensor(&x, &y);
            let r = derived_tensor(&y, &x);
            check(l == r, &mut n, || format!("{a} ⊗L {b} = {l} but {b} ⊗L {a} = {r}"))?;
            let tl = tensor(&a.into(), &b.into());
            let tr = tensor(&b.into(), &a.into());
            check(tl == tr, &mut n, || format!("{a} ⊗ {b} = {tl} but {b} ⊗ {a} = {tr}"))?;
        }
    }
    Ok(n)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn finite() -> SuiteResult {
    let mut n = 0;
    for m in 1..=30u64 {
        for k in 1..=30u64 {
            let x = FlcaGroup::cyclic(m).map_err(|e| e.to_string())?;
            let y = FlcaGroup::cyclic(k).map_err(|e| e.to_string())?;
            let g = FlcaGroup::cyclic(gcd(m, k)).map_err(|e| e.to_string())?;
            let h = hom(&x, &y);
            check(h == g, &mut n, || format!("Hom(Z/{m}, Z/{k}) = {h}"))?;
            let t = tensor(&x, &y);
            check(t == g, &mut n, || format!("Z/{m} ⊗ Z/{k} = {t}"))?;
            check(x.dual() == x, &mut n, || format!("Z/{m} is not self-dual"))?;
        }
    }
    Ok(n)
}

fn k0mul() -> SuiteResult {
    let mut n = 0;
    let atoms = catalogue();
    for &a in &atoms {
        for &b in &atoms {
            let lhs = k0_of(&a.into()).mul(&k0_of(&b.into()));
            let rhs = k0_of_derived(&derived_tensor(&a.into(), &b.into()));
            check(lhs == rhs, &mut n, || format!("[{a}]·[{b}] = {lhs} but [{a} ⊗L {b}] = {rhs}"))?;
        }
    }
    Ok(n)
}

fn random_class(rng: &mut ChaCha8Rng) -> K0Class {
    let pair = |rng: &mut ChaCha8Rng| (rng.gen_range(-6i64..=6), rng.gen_range(-6i64..=6));
    let inf = pair(rng);
    let default = pair(rng);
    let count = rng.gen_range(0..=3);
    let exceptions: Vec<(Prime, (i64, i64))> = (0..count)
        .map(|_| {
            let p = primes(&[2, 3, 5, 7, 11])[rng.gen_range(0..5)];
            (p, pair(rng))
        })
        .collect();
    K0Class::new(inf, default, exceptions)
}

fn ring() -> SuiteResult {
    let mut n = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let one = K0Class::one();
    for i in 0..1000 {
        let (x, y, z) = (random_class(&mut rng), random_class(&mut rng), random_class(&mut rng));
        check(x.mul(&y) == y.mul(&x), &mut n, || format!("sample {i}: commutativity fails for {x} and {y}"))?;
        check(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), &mut n, || format!("sample {i}: associativity fails"))?;
        check(x.mul(&(&y + &z)) == x.mul(&y) + x.mul(&z), &mut n, || format!("sample {i}: distributivity fails"))?;
        check(one.mul(&x) == x, &mut n, || format!("sample {i}: [Z]·{x} ≠ {x}"))?;
        check(K0Class::from_adelic(&x.to_adelic()) == x, &mut n, || format!("sample {i}: basis change of {x}"))?;
    }
    Ok(n)
}

fn involution() -> SuiteResult {
    let mut n = 0;
    for &a in &catalogue() {
        let g: FlcaGroup = a.into();
        let c = k0_of(&g);
        check(k0_of(&g.dual()) == c.involution(), &mut n, || format!("[{a}^∨] ≠ [{a}]^∨"))?;
        check(c.involution().involution() == c, &mut n, || format!("involution of [{a}] has order > 2"))?;
    }
    let t = k0_of(&Atom::Circle.into());
    let lhs = t.mul(&t).involution();
    let rhs = t.involution().mul(&t.involution());
    check(lhs != rhs, &mut n, || "the involution unexpectedly preserves [T]·[T]".into())?;
    Ok(n)
}

fn resolution() -> SuiteResult {
    let mut n = 0;
    for &a in &catalogue() {
        let x: FlcaGroup = a.into();
        let inj = resolve_injective(&x);
        check(k0_of(&x) == k0_of(&inj.left) - k0_of(&inj.right), &mut n, || format!("{a} → {inj}"))?;
        let proj = resolve_projective(&x);
        check(k0_of(&x) == k0_of(&proj.right) - k0_of(&proj.left), &mut n, || format!("{proj} → {a}"))?;
    }
    Ok(n)
}

fn left_inverse() -> SuiteResult {
    let winner = select_left_inverse().ok_or("no unique left-inverse recipe inverts the generators")?;
    let mut n = 1;
    for &a in &catalogue() {
        let x: FlcaGroup = a.into();
        let got = winner.evaluate(&x);
        let want = k0_of(&x);
        check(got == want, &mut n, || format!("{winner} recipe on {a} gives {got}, expected {want}"))?;
    }
    Ok(n)
}
