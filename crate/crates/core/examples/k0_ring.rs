//! Classes in K₀ in both coordinate systems, products and the duality
//! involution.

use flca::k0::{k0_from_invariants, select_left_inverse};
use flca::{k0_of, Atom, Prime};

fn main() -> flca::Result<()> {
    let atoms = Atom::catalogue(&[Prime::new(5)?], &[1])?;
    println!("{:<10} {:<34} {}", "atom", "compact-discrete", "adelic");
    for &a in &atoms {
        let c = k0_of(&a.into());
        println!("{:<10} {:<34} {}", a.to_string(), c.to_string(), c.to_adelic());
    }

    let t = k0_of(&Atom::Circle.into());
    println!("\n[T]·[T] = {}", t.mul(&t));
    println!("dual([T]·[T]) = {}", t.mul(&t).involution());
    println!("dual[T]·dual[T] = {}", t.involution().mul(&t.involution()));
    println!("[Q]·[T] = {}", k0_of(&Atom::Rat.into()).mul(&t));

    let winner = select_left_inverse().expect("a unique recipe");
    println!("\nrecovering classes from rank invariants ({winner} recipe):");
    for a in atoms {
        assert_eq!(k0_from_invariants(&a.into()), k0_of(&a.into()));
    }
    println!("all atoms recovered");
    Ok(())
}
