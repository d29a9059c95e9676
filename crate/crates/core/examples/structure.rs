//! Structural invariants: property flags, the canonical filtration, rank
//! profiles, p-components and two-term resolutions.

use flca::frontend::eval_str;
use flca::structure::{filtration, has_property, ranks, resolve_injective, resolve_projective, PROPERTY_NAMES};
use flca::{Atom, FlcaGroup, Prime};

fn main() -> flca::Result<()> {
    let p = Prime::new(2)?;
    let atoms = Atom::catalogue(&[p], &[1])?;

    print!("{:<10}", "");
    for name in PROPERTY_NAMES {
        print!(" {:>5}", &name[..name.len().min(5)]);
    }
    println!();
    for a in atoms {
        print!("{:<10}", a.to_string());
        for name in PROPERTY_NAMES {
            let flag = has_property(name, &a.into()).expect("listed property");
            print!(" {:>5}", if flag { "x" } else { "." });
        }
        println!();
    }

    let x = FlcaGroup::atom(Atom::Int) + FlcaGroup::atom(Atom::Circle) + FlcaGroup::atom(Atom::FinAdele) + FlcaGroup::cyclic(8)?;
    println!("\nX = {x}");
    println!("filtration (S1-part, A-part, Z-part): {}", filtration(&x));
    println!("ranks: {}", ranks(&x));
    println!("injective resolution: {}", resolve_injective(&x));
    println!("projective resolution: {}", resolve_projective(&x));
    println!("2-component of Afin: {}", eval_str("pcomp(Afin, 2)")?.canonical());
    Ok(())
}
