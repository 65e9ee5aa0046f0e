//! Close a set of partial bijections under composition, starting from the
//! two rank-one maps that generate the five-element Brandt semigroup.

use preston::pbij::PartialBijection;
use preston::semigroup::FiniteInverseSemigroup;

fn main() -> preston::Result<()> {
    let a = PartialBijection::from_pairs(2, &[(0, 1)])?;
    let a_inv = PartialBijection::from_pairs(2, &[(1, 0)])?;

    let s = FiniteInverseSemigroup::generate(&[a.clone(), a_inv])?;

    println!("closure of {{ {a}, inverse }} on two points:");
    println!("  {} elements, {} idempotents", s.size(), s.idempotents().len());
    println!();
    for x in 0..s.size() {
        let word: Vec<&str> = s
            .witness_word(x)
            .iter()
            .map(|&g| s.name(s.generators()[g]))
            .collect();
        println!(
            "  #{x}  {:<12} = {:<24} inverse #{}{}",
            s.name(x),
            word.join(" . "),
            s.inverse(x),
            if s.is_idempotent(x) { "  (idempotent)" } else { "" },
        );
    }

    // A generating set that is not closed under inversion is refused: the
    // closure would silently contain maps with no name in the input.
    let lone = FiniteInverseSemigroup::generate(&[a]);
    println!();
    println!("generating from {{ 0->1 }} alone: {}", lone.unwrap_err());
    Ok(())
}
