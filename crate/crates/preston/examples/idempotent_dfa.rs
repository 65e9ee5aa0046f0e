//! The set of words over a generating set that evaluate to an idempotent is
//! a regular language. Build the recognizing automaton for the Brandt
//! semigroup, minimize it, and print both plus a readable DOT rendering.

use preston::semigroup::brandt_b2;
use preston::syntactic::idempotent_problem_dfa;

fn main() -> preston::Result<()> {
    let s = brandt_b2();
    // One state per element plus a start state; nonempty words only.
    let dfa = idempotent_problem_dfa(&s, false)?;
    let minimal = dfa.minimized();

    println!(
        "Brandt semigroup: {} elements, alphabet of {} generators",
        s.size(),
        dfa.alphabet()
    );
    println!(
        "construction DFA: {} states; minimized: {} states",
        dfa.states(),
        minimal.states()
    );

    let words: [&[usize]; 6] = [&[0], &[0, 1], &[1, 0], &[0, 0], &[0, 1, 0], &[1, 0, 1]];
    println!();
    for w in words {
        let spelled: Vec<&str> = w.iter().map(|&g| s.name(s.generators()[g])).collect();
        println!(
            "  {:<24} -> {}",
            spelled.join(" . "),
            if minimal.accepts(w) { "idempotent" } else { "not idempotent" },
        );
    }

    println!();
    println!("{}", dfa.to_dot(Some(&s.generator_names())));
    Ok(())
}
