//! Projection of roses to the Farey graph of ⟨a, b⟩.
use outfold::graph::LabeledRose;
use outfold::projection::{
    farey_distance, projection_bound_check, subgroup_core, theta_projection, FreeFactor,
    PrimitiveClass,
};
use outfold::word::{Automorphism, Loop};

fn main() -> outfold::Result<()> {
    let a = FreeFactor::standard(3);
    let psi = Automorphism::parse(&["aba", "ab", "c"])?;
    let base = theta_projection(&LabeledRose::standard(3), &a)?;
    for q in 0..=5 {
        let x = LabeledRose::new("psi^q", psi.pow(q).as_basis().clone());
        let core = subgroup_core(&x, &a)?;
        let p = theta_projection(&x, &a)?;
        println!(
            "psi^{q}: slope {} via {} (length {}), core {} edges, distance {}",
            p.class,
            p.word,
            p.length,
            core.core_edge_count(),
            farey_distance(base.class, p.class)
        );
    }

    let c = |p, q| PrimitiveClass::new(p, q);
    println!("d((1,0),(7,12)) = {}", farey_distance(c(1, 0)?, c(7, 12)?));

    let x = LabeledRose::new("psi^2", psi.pow(2).as_basis().clone());
    let r = projection_bound_check(&x, &a, &Loop::parse("a")?)?;
    println!(
        "bound check at psi^2, [a]: distance {} <= {} : {}",
        r.distance, r.bound, r.holds
    );
    Ok(())
}
