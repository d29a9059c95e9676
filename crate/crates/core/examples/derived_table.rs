//! The RHom table at ℤ/pⁿ (default p = 2, n = 1) and the Ext groups of
//! a few pairs, including the non-split complex E = [Q → Afin].
//!
//! Usage: cargo run --example derived_table -- [p] [n]

use flca::derived::cohomology;
use flca::frontend::table::{to_tsv, TableOp};
use flca::{derived_tensor, rhom, Atom, Prime, PrimePower};

fn main() -> flca::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let q = PrimePower::new(Prime::new(p)?, n)?;
    print!("{}", to_tsv(TableOp::Rhom, &Atom::table_atoms(q)));

    println!();
    for (a, b) in [(Atom::Circle, Atom::Int), (Atom::Rat, Atom::Int), (Atom::Adele, Atom::Int)] {
        let d = rhom(&a.into(), &b.into());
        println!("RHom({a}, {b}) = {d}");
        for deg in 0..=1 {
            println!("  Ext^{deg} = {}", cohomology(&d, deg));
        }
    }
    println!("Q ⊗L T = {}", derived_tensor(&Atom::Rat.into(), &Atom::Circle.into()));
    Ok(())
}
