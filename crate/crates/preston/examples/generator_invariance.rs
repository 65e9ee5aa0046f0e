//! The syntactic semigroup of the idempotent problem is a property of the
//! semigroup, not of the generating set used to spell words: different
//! generating sets give isomorphic answers (and a non-generating set is
//! refused).

use preston::checks::generator_invariance;
use preston::semigroup::{brandt_b2, cyclic_group};

fn main() -> preston::Result<()> {
    let z4 = cyclic_group(4)?;
    // The rotation alone versus the rotation plus its square.
    let r = generator_invariance(&z4, &[0], &[0, 1], false)?;
    println!(
        "cyclic group of order 4, {{g}} vs {{g, g^2}}: sizes {} and {}, isomorphic: {}",
        r.syntactic_semigroup_size_a, r.syntactic_semigroup_size_b, r.isomorphic
    );

    let b2 = brandt_b2();
    let all: Vec<usize> = (0..b2.size()).collect();
    let r = generator_invariance(&b2, &[0, 1], &all, false)?;
    println!(
        "Brandt semigroup, two generators vs all five elements: sizes {} and {}, isomorphic: {}",
        r.syntactic_semigroup_size_a, r.syntactic_semigroup_size_b, r.isomorphic
    );

    // g^2 alone only generates the subgroup {g^2, e}.
    let err = generator_invariance(&z4, &[0], &[1], false).unwrap_err();
    println!("{{g}} vs {{g^2}}: {err}");
    Ok(())
}
