//! Read off the syntactic monoid of the idempotent-problem language as the
//! transition monoid of its minimal automaton, and watch the two readings
//! of the empty word change the answer for the two-element group.

use preston::semigroup::cyclic_group;
use preston::syntactic::{idempotent_problem_dfa, SyntacticAlgebra};

fn describe(case: &str, monoid_case: bool) -> preston::Result<()> {
    let z2 = cyclic_group(2)?;
    let minimal = idempotent_problem_dfa(&z2, monoid_case)?.minimized();
    let sa = SyntacticAlgebra::from_minimal_dfa(&minimal)?;

    println!("{case}:");
    println!("  minimal DFA states: {}", minimal.states());
    println!(
        "  syntactic monoid: {} elements; semigroup part: {} ({:?})",
        sa.size(),
        sa.semigroup_size(),
        sa.dichotomy()
    );
    for m in 0..sa.size() {
        let w = sa.witness_word(m);
        let spelled = if w.is_empty() {
            "empty word".to_string()
        } else {
            w.iter().map(|_| "a").collect::<Vec<_>>().join(" . ")
        };
        println!(
            "    class #{m}: [{spelled}]{}{}",
            if sa.is_idempotent(m) { ", idempotent" } else { "" },
            if sa.in_semigroup_part(m) { "" } else { ", empty word only" },
        );
    }
    println!(
        "  group language: {} (monoid is a group: {}, semigroup part is a group: {})",
        if monoid_case { sa.is_group_language() } else { sa.semigroup_part_is_group() },
        sa.is_group_language(),
        sa.semigroup_part_is_group(),
    );
    println!();
    Ok(())
}

fn main() -> preston::Result<()> {
    // Z2 generated by its flip: a word is idempotent iff it has even
    // length (and, reading the empty word as the identity, iff even or
    // empty). The two conventions give different syntactic monoids.
    describe("nonempty words only", false)?;
    describe("empty word included", true)?;
    Ok(())
}
