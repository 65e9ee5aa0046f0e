//! Build the λ-semidirect product of the two-element group acting on the
//! rank-2 free semilattice by swapping its generators, then confirm the
//! generation-size bound on every small subset of the result.

use preston::lambda::{check_local_finiteness_bound, SizeBound};
use preston::{corpus, lambda};

fn main() -> preston::Result<()> {
    let p = corpus::swap_product();
    let actor = p.action().actor();
    let target = p.action().target();

    println!(
        "actor: {} elements, target: {} elements",
        actor.size(),
        target.size()
    );
    println!("product universe ({} pairs):", p.size());
    for (i, &(alpha, g)) in p.pairs().iter().enumerate() {
        println!(
            "  #{i}  ({}, {}){}",
            target.name(alpha),
            actor.name(g),
            if p.product().is_idempotent(i) { "  (idempotent)" } else { "" },
        );
    }
    // Pairs (alpha, g) with g g^-1 . alpha = alpha; the actor is a group
    // whose identity acts identically, so nothing is cut from the grid.
    assert_eq!(p.size(), actor.size() * target.size());

    // Any subsemigroup generated by m pairs has at most
    // |actor| * sigma(m |actor|) elements, where sigma bounds j-generated
    // subsemigroups of the target; for a free semilattice sigma(j) =
    // 2^j - 1. Both subset sizes are small enough to enumerate outright.
    let report = check_local_finiteness_bound(
        &p,
        SizeBound::FreeSemilattice,
        lambda::DEFAULT_TRIALS,
        2,
        lambda::DEFAULT_SEED,
    )?;
    println!();
    for s in &report.samples {
        println!(
            "  m = {}: largest observed closure {} of bound {} over {} subsets{}",
            s.m,
            s.max_observed,
            s.bound_display,
            s.subsets_checked,
            if s.exhaustive { " (exhaustive)" } else { " (sampled)" },
        );
    }
    println!("bound verified: {}", report.ok);
    Ok(())
}
