//! Reduced words, bases and automorphisms.
use outfold::word::{Automorphism, Basis, Loop, Word};

fn main() -> outfold::Result<()> {
    let w = Word::parse("abBAcaA")?;
    println!("abBAcaA reduces to {w}");

    let (core, conj) = Word::parse("abaBA")?.cyclic_reduce();
    println!("abaBA = ({conj})·{core}·({conj})⁻¹");

    // Coordinates of an element in a non-standard basis.
    let basis = Basis::parse(&["aba", "ab", "c"])?;
    let coords = basis.rewrite(&Word::parse("ab")?)?;
    println!("ab in basis {basis} is {coords} (letters name basis elements)");

    let psi = Automorphism::parse(&["aba", "ab", "c"])?;
    let inv = psi.inverse();
    println!("psi = {psi}\npsi^-1 = {inv}");
    println!(
        "psi∘psi^-1 is the identity: {}",
        psi.compose(&inv).is_identity()
    );
    println!("psi(ab) = {}", psi.apply(&Word::parse("ab")?));

    let alpha = Loop::parse("baBAab")?;
    println!("conjugacy class of baBAab: {alpha}");
    Ok(())
}
