//! E-unitarity is readable off the idempotent-problem language: a finite
//! inverse semigroup is E-unitary exactly when that language is a group
//! language. Run the two tests independently over the whole corpus and a
//! quantitative size bound alongside.

use preston::checks::{e_unitary_corollary, finiteness_bound_chain, is_e_unitary};
use preston::corpus::corpus;

fn main() -> preston::Result<()> {
    println!(
        "{:<22} {:>4}  {:>9}  {:>14}  {:>16}",
        "member", "size", "E-unitary", "group language", "size <= bound"
    );
    for m in corpus() {
        let s = &m.semigroup;
        // The checker recomputes both sides and errors if they ever
        // disagree, so reaching the report already proves the agreement.
        let r = e_unitary_corollary(s, false)?;
        assert_eq!(r.e_unitary, is_e_unitary(s));

        let b = finiteness_bound_chain(s, false)?;
        println!(
            "{:<22} {:>4}  {:>9}  {:>14}  {:>10} <= {}{}",
            m.name,
            s.size(),
            r.e_unitary,
            r.group_language,
            b.size,
            b.bound_display,
            if b.attained { "  (exact)" } else { "" },
        );
    }
    Ok(())
}
