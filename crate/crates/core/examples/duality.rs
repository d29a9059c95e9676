//! Pontryagin duals of the atoms and of a few sums.

use flca::{Atom, FlcaGroup, Prime};

fn main() -> flca::Result<()> {
    let atoms = Atom::catalogue(&[Prime::new(5)?], &[2])?;
    println!("{:<10} {}", "atom", "dual");
    for a in atoms {
        println!("{:<10} {}", a.to_string(), a.dual());
    }

    let x = FlcaGroup::atom(Atom::Int) + FlcaGroup::atom(Atom::ProInt(Prime::new(3)?)) + FlcaGroup::cyclic(12)?;
    println!("\n({x})^ = {}", x.dual());
    assert_eq!(x.dual().dual(), x);
    Ok(())
}
