//! End-to-end verification reports tying the algebraic and language-side
//! computations together. Each check recomputes both routes independently
//! and errors with an invariant violation if they ever disagree, so a
//! passing report is evidence, not assumption.

use serde::Serialize;

use crate::congruence::greatest_idempotent_pure;
use crate::dfa::Dfa;
use crate::lambda::{billhardt_bound, corollary_bound_holds};
use crate::oracle::normalize_classes;
use crate::semigroup::{are_isomorphic, FiniteInverseSemigroup};
use crate::syntactic::{idempotent_problem_dfa, Dichotomy, SyntacticAlgebra};
use crate::{Error, Result};

/// No product of an idempotent and a non-idempotent is idempotent. Both
/// multiplication orders are checked and must agree.
pub fn is_e_unitary(s: &FiniteInverseSemigroup) -> bool {
    let n = s.size();
    let left = (0..n).all(|e| {
        s.is_idempotent(e)
            || (0..n).all(|f| !s.is_idempotent(f) || !s.is_idempotent(s.mul(f, e)))
    });
    let right = (0..n).all(|e| {
        s.is_idempotent(e)
            || (0..n).all(|f| !s.is_idempotent(f) || !s.is_idempotent(s.mul(e, f)))
    });
    assert_eq!(left, right, "the two sided checks agree on inverse semigroups");
    left
}

/// The element-to-syntactic-class map together with the verifications that
/// make it a well-behaved projection.
pub struct Projection {
    pub algebra: SyntacticAlgebra,
    pub construction_dfa: Dfa,
    pub minimal_dfa: Dfa,
    /// Element index -> monoid element, by folding the witness word.
    pub phi: Vec<usize>,
    pub report: ProjectionReport,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ProjectionReport {
    pub monoid_case: bool,
    pub construction_states: usize,
    pub minimal_states: usize,
    pub monoid_size: usize,
    pub semigroup_part_size: usize,
    pub dichotomy: Dichotomy,
    /// phi(s)·phi(t) = phi(st) over every pair.
    pub well_defined: bool,
    /// The image of phi is exactly the syntactic semigroup.
    pub surjective: bool,
    /// Only idempotents of the source map onto monoid idempotents.
    pub idempotent_pure: bool,
    /// The fibers of phi equal the greatest idempotent-pure congruence,
    /// computed independently from context signatures.
    pub kernel_is_greatest: bool,
}

/// Build the idempotent-problem DFA, minimize, read off the syntactic
/// algebra, and verify that witness-word folding is a surjective
/// idempotent-pure morphism onto the syntactic semigroup whose kernel is
/// the greatest idempotent-pure congruence. Any failed leg is an error.
pub fn syntactic_projection(
    s: &FiniteInverseSemigroup,
    monoid_case: bool,
) -> Result<Projection> {
    let construction_dfa = idempotent_problem_dfa(s, monoid_case)?;
    let minimal_dfa = construction_dfa.minimized();
    if !minimal_dfa.equivalent_to(&construction_dfa) {
        return Err(Error::Invariant("minimization changed the language".into()));
    }
    let algebra = SyntacticAlgebra::from_minimal_dfa(&minimal_dfa)?;

    let phi: Vec<usize> = (0..s.size())
        .map(|x| algebra.eval_word(s.witness_word(x)))
        .collect();

    let well_defined = (0..s.size()).all(|a| {
        (0..s.size()).all(|b| algebra.mul(phi[a], phi[b]) == phi[s.mul(a, b)])
    });

    let mut hit = vec![false; algebra.size()];
    for &m in &phi {
        hit[m] = true;
    }
    let surjective =
        (0..algebra.size()).all(|m| hit[m] == algebra.in_semigroup_part(m));

    let idempotent_pure =
        (0..s.size()).all(|x| !algebra.is_idempotent(phi[x]) || s.is_idempotent(x));

    let greatest = greatest_idempotent_pure(s)?;
    let kernel_is_greatest =
        normalize_classes(&phi) == greatest.class_assignment().to_vec();

    let report = ProjectionReport {
        monoid_case,
        construction_states: construction_dfa.states(),
        minimal_states: minimal_dfa.states(),
        monoid_size: algebra.size(),
        semigroup_part_size: algebra.semigroup_size(),
        dichotomy: algebra.dichotomy(),
        well_defined,
        surjective,
        idempotent_pure,
        kernel_is_greatest,
    };
    if !(well_defined && surjective && idempotent_pure && kernel_is_greatest) {
        return Err(Error::Invariant(format!(
            "syntactic projection failed verification: {report:?}"
        )));
    }
    Ok(Projection {
        algebra,
        construction_dfa,
        minimal_dfa,
        phi,
        report,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct EUnitaryReport {
    pub monoid_case: bool,
    pub e_unitary: bool,
    /// Group test applied per the flag: the whole syntactic monoid in the
    /// monoid case, the syntactic semigroup otherwise.
    pub group_language: bool,
    pub monoid_is_group: bool,
    pub semigroup_part_is_group: bool,
    pub monoid_size: usize,
    pub semigroup_part_size: usize,
}

/// The algebraic E-unitary test must coincide with the group-language test
/// on the idempotent problem. In the semigroup case the relevant algebra is
/// the syntactic semigroup (image of nonempty words); in the monoid case it
/// is the full syntactic monoid. Disagreement is an invariant violation.
pub fn e_unitary_corollary(
    s: &FiniteInverseSemigroup,
    monoid_case: bool,
) -> Result<EUnitaryReport> {
    let e_unitary = is_e_unitary(s);
    let projection = syntactic_projection(s, monoid_case)?;
    let monoid_is_group = projection.algebra.is_group_language();
    let semigroup_part_is_group = projection.algebra.semigroup_part_is_group();
    let group_language = if monoid_case {
        monoid_is_group
    } else {
        semigroup_part_is_group
    };
    let report = EUnitaryReport {
        monoid_case,
        e_unitary,
        group_language,
        monoid_is_group,
        semigroup_part_is_group,
        monoid_size: projection.algebra.size(),
        semigroup_part_size: projection.algebra.semigroup_size(),
    };
    if e_unitary != group_language {
        return Err(Error::Invariant(format!(
            "E-unitary test disagrees with the group-language test: {report:?}"
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GeneratorInvarianceReport {
    pub monoid_case: bool,
    pub generators_a: Vec<usize>,
    pub generators_b: Vec<usize>,
    pub syntactic_semigroup_size_a: usize,
    pub syntactic_semigroup_size_b: usize,
    pub isomorphic: bool,
}

/// The syntactic semigroup of the idempotent problem does not depend on the
/// chosen generating set (up to isomorphism). Both sets must generate.
pub fn generator_invariance(
    s: &FiniteInverseSemigroup,
    generators_a: &[usize],
    generators_b: &[usize],
    monoid_case: bool,
) -> Result<GeneratorInvarianceReport> {
    let sa = syntactic_semigroup_as_table(&s.with_generators(generators_a)?, monoid_case)?;
    let sb = syntactic_semigroup_as_table(&s.with_generators(generators_b)?, monoid_case)?;
    let isomorphic = are_isomorphic(&sa, &sb)?;
    let report = GeneratorInvarianceReport {
        monoid_case,
        generators_a: generators_a.to_vec(),
        generators_b: generators_b.to_vec(),
        syntactic_semigroup_size_a: sa.size(),
        syntactic_semigroup_size_b: sb.size(),
        isomorphic,
    };
    if !isomorphic {
        return Err(Error::Invariant(format!(
            "syntactic semigroups differ across generating sets: {report:?}"
        )));
    }
    Ok(report)
}

/// Extract the syntactic semigroup as an explicit inverse-semigroup table,
/// generated by the letter images. For idempotent problems of inverse
/// semigroups the part is itself inverse (it is a quotient), so a failed
/// conversion is an invariant violation, not bad input.
fn syntactic_semigroup_as_table(
    s: &FiniteInverseSemigroup,
    monoid_case: bool,
) -> Result<FiniteInverseSemigroup> {
    let projection = syntactic_projection(s, monoid_case)?;
    let algebra = &projection.algebra;
    let part = algebra.semigroup_part();
    let rank = |m: usize| part.iter().position(|&x| x == m).unwrap();
    let table: Vec<Vec<usize>> = part
        .iter()
        .map(|&a| part.iter().map(|&b| rank(algebra.mul(a, b))).collect())
        .collect();
    let names = part
        .iter()
        .map(|&m| format!("[{}]", words_display(algebra.witness_word(m))))
        .collect();
    let mut gens = Vec::new();
    for &img in algebra.letter_images() {
        let r = rank(img);
        if !gens.contains(&r) {
            gens.push(r);
        }
    }
    FiniteInverseSemigroup::from_table(table, Some(names), Some(gens))
        .map_err(|e| Error::Invariant(format!("syntactic semigroup is not inverse: {e}")))
}

fn words_display(word: &[usize]) -> String {
    if word.is_empty() {
        "ε".to_string()
    } else {
        word.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BoundChainReport {
    pub monoid_case: bool,
    pub size: usize,
    pub generator_count: usize,
    pub construction_states: usize,
    pub monoid_size: usize,
    /// n in the size bound: the syntactic semigroup's size.
    pub syntactic_semigroup_size: usize,
    /// n(2^{kn} - 1) when it fits in a u64.
    pub bound: Option<u64>,
    pub bound_display: String,
    pub holds: bool,
    pub attained: bool,
}

/// The finite-to-regular direction, quantitatively: the recognizing DFA has
/// |S|+1 states, the syntactic monoid is finite, and with n the syntactic
/// semigroup size and k the generator count, |S| <= n(2^{kn} - 1).
pub fn finiteness_bound_chain(
    s: &FiniteInverseSemigroup,
    monoid_case: bool,
) -> Result<BoundChainReport> {
    let projection = syntactic_projection(s, monoid_case)?;
    if projection.construction_dfa.states() != s.size() + 1 {
        return Err(Error::Invariant(
            "recognizing DFA should have one state per element plus the start".into(),
        ));
    }
    let n = projection.algebra.semigroup_size();
    let k = s.generators().len();
    let (bound, bound_display) = match billhardt_bound(n as u64, k as u64) {
        Ok(b) => (Some(b), b.to_string()),
        Err(_) => (None, format!("{n}*(2^{} - 1)", k * n)),
    };
    let holds = corollary_bound_holds(s.size(), n, k);
    let attained = bound == Some(s.size() as u64);
    let report = BoundChainReport {
        monoid_case,
        size: s.size(),
        generator_count: k,
        construction_states: projection.construction_dfa.states(),
        monoid_size: projection.algebra.size(),
        syntactic_semigroup_size: n,
        bound,
        bound_display,
        holds,
        attained,
    };
    if !holds {
        return Err(Error::Invariant(format!(
            "size bound violated: {report:?}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{
        brandt_b2, cyclic_group, free_semilattice, symmetric_inverse_monoid,
    };

    #[test]
    fn groups_and_semilattices_are_e_unitary_but_brandt_is_not() {
        assert!(is_e_unitary(&cyclic_group(4).unwrap()));
        assert!(is_e_unitary(&free_semilattice(3).unwrap()));
        assert!(!is_e_unitary(&brandt_b2()));
        assert!(!is_e_unitary(&symmetric_inverse_monoid(2).unwrap()));
        assert!(is_e_unitary(&symmetric_inverse_monoid(1).unwrap())); // a chain
    }

    #[test]
    fn projection_reports_verify_on_small_semigroups() {
        for (s, monoid_case) in [
            (brandt_b2(), false),
            (cyclic_group(2).unwrap(), false),
            (cyclic_group(2).unwrap(), true),
            (free_semilattice(2).unwrap(), false),
            (symmetric_inverse_monoid(2).unwrap(), true),
        ] {
            let p = syntactic_projection(&s, monoid_case).unwrap();
            assert!(p.report.well_defined);
            assert!(p.report.surjective);
            assert!(p.report.idempotent_pure);
            assert!(p.report.kernel_is_greatest);
        }
    }

    #[test]
    fn brandt_projection_is_injective() {
        // Its greatest idempotent-pure congruence is equality, so phi embeds
        // all five elements into the syntactic semigroup.
        let p = syntactic_projection(&brandt_b2(), false).unwrap();
        assert_eq!(p.report.semigroup_part_size, 5);
        assert_eq!(p.report.monoid_size, 6);
        let mut phi = p.phi.clone();
        phi.sort_unstable();
        phi.dedup();
        assert_eq!(phi.len(), 5);
    }

    #[test]
    fn corollary_agrees_across_flag_choices() {
        // (semigroup, monoid-capable, expected E-unitary)
        let cases: Vec<(FiniteInverseSemigroup, bool, bool)> = vec![
            (brandt_b2(), false, false),
            (cyclic_group(2).unwrap(), true, true),
            (cyclic_group(4).unwrap(), true, true),
            (free_semilattice(2).unwrap(), false, true),
            (symmetric_inverse_monoid(2).unwrap(), true, false),
        ];
        for (s, monoid_capable, expect) in cases {
            let r = e_unitary_corollary(&s, false).unwrap();
            assert_eq!(r.e_unitary, expect);
            assert_eq!(r.group_language, expect);
            if monoid_capable {
                let r = e_unitary_corollary(&s, true).unwrap();
                assert_eq!(r.e_unitary, expect);
                assert_eq!(r.group_language, expect);
            }
        }
    }

    #[test]
    fn semilattice_flag_handling_is_the_designated_regression() {
        // Free semilattice, semigroup case: the full syntactic monoid keeps
        // a second idempotent (the empty word's class), so it is not a
        // group, while the syntactic semigroup is trivial. The corollary is
        // decided by the semigroup part.
        let fs2 = free_semilattice(2).unwrap();
        let r = e_unitary_corollary(&fs2, false).unwrap();
        assert!(r.e_unitary);
        assert!(r.group_language);
        assert!(!r.monoid_is_group);
        assert!(r.semigroup_part_is_group);
        assert_eq!(r.monoid_size, 2);
        assert_eq!(r.semigroup_part_size, 1);
    }

    #[test]
    fn generator_invariance_on_brandt_and_z4() {
        let b2 = brandt_b2();
        let r = generator_invariance(&b2, &[0, 1], &[0, 1, 2, 3, 4], false).unwrap();
        assert!(r.isomorphic);
        assert_eq!(r.syntactic_semigroup_size_a, r.syntactic_semigroup_size_b);

        let z4 = cyclic_group(4).unwrap();
        let r = generator_invariance(&z4, &[0], &[0, 1], false).unwrap();
        assert!(r.isomorphic);
        // g² alone does not generate.
        assert!(generator_invariance(&z4, &[0], &[1], false).is_err());
    }

    #[test]
    fn bound_chain_is_attained_exactly_on_free_semilattices() {
        for k in 1..=4 {
            let fs = free_semilattice(k).unwrap();
            let r = finiteness_bound_chain(&fs, false).unwrap();
            assert_eq!(r.syntactic_semigroup_size, 1);
            assert_eq!(r.bound, Some((1u64 << k) - 1));
            assert!(r.holds);
            assert!(r.attained, "rank {k}");
        }
    }

    #[test]
    fn bound_chain_holds_with_slack_on_groups() {
        let z2 = cyclic_group(2).unwrap();
        let r = finiteness_bound_chain(&z2, false).unwrap();
        assert_eq!(r.syntactic_semigroup_size, 2);
        assert_eq!(r.generator_count, 1);
        assert_eq!(r.bound, Some(6)); // 2(2² - 1)
        assert!(r.holds && !r.attained);
    }

}
