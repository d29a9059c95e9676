//! Hom and tensor products between atoms, and a few finite examples.

use flca::frontend::table::{to_tsv, TableOp};
use flca::{hom, tensor, Atom, FlcaGroup, Prime};

fn main() -> flca::Result<()> {
    let atoms = Atom::catalogue(&[Prime::new(3)?], &[1])?;
    print!("{}", to_tsv(TableOp::Hom, &atoms));
    println!();
    print!("{}", to_tsv(TableOp::Tensor, &atoms));

    let (a, b) = (FlcaGroup::cyclic(12)?, FlcaGroup::cyclic(18)?);
    println!("\nHom(Z/12, Z/18) = {}", hom(&a, &b));
    println!("Z/12 ⊗ Z/18 = {}", tensor(&a, &b));
    Ok(())
}
