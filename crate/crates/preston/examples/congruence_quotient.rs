//! Close a pair set into a congruence, form the quotient, and compare with
//! the greatest idempotent-pure congruence computed from context
//! signatures.

use preston::congruence::{greatest_idempotent_pure, Congruence};
use preston::semigroup::{brandt_b2, cyclic_group, free_semilattice};

fn main() -> preston::Result<()> {
    let z4 = cyclic_group(4)?;
    let names: Vec<&str> = (0..z4.size()).map(|x| z4.name(x)).collect();
    println!("cyclic group of order 4, elements: {}", names.join(", "));

    // Identifying g with g^3 forces g^2 ~ e via translation closure.
    let cong = Congruence::generated_by(&z4, &[(0, 2)])?;
    println!("congruence generated by #0 ~ #2:");
    for class in cong.classes() {
        let members: Vec<&str> = class.iter().map(|&x| z4.name(x)).collect();
        println!("  {{ {} }}", members.join(", "));
    }

    let (q, projection) = cong.quotient(&z4)?;
    let identity = q.identity().expect("a quotient of a group has an identity");
    println!(
        "quotient: {} elements, projection {projection:?}, identity class #{identity}",
        q.size(),
    );
    if let Some(v) = q.verify().failure {
        panic!("quotient broke: {v}");
    }

    // The greatest congruence whose classes never mix idempotents with
    // non-idempotents: universal on a semilattice where everything is
    // idempotent, equality where idempotents pin elements apart.
    println!();
    for (label, s) in [
        ("cyclic group of order 4", cyclic_group(4)?),
        ("free semilattice on 3 generators", free_semilattice(3)?),
        ("Brandt semigroup", brandt_b2()),
    ] {
        let g = greatest_idempotent_pure(&s)?;
        println!(
            "{label}: {} classes out of {} elements (idempotent-pure: {})",
            g.classes_len(),
            s.size(),
            g.is_idempotent_pure(&s)
        );
    }
    Ok(())
}
