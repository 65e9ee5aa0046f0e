//! Exhaustive reference implementations used to cross-check the fast paths.
//!
//! Everything here computes straight from definitions — enumerating
//! partitions, words, or contexts — and deliberately shares no code with the
//! union-find, BFS, or transition-monoid routes it validates. Feasible only
//! at small sizes, which is the point.

use crate::dfa::Dfa;
use crate::semigroup::FiniteInverseSemigroup;

/// All partitions of `{0..n-1}` as restricted-growth class assignments
/// (class ids already in first-appearance order). Bell(6) = 203.
pub fn enumerate_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(assignment: &mut Vec<usize>, used: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if assignment.len() == n {
            out.push(assignment.clone());
            return;
        }
        for class in 0..=used {
            assignment.push(class);
            let used_next = used.max(class + 1);
            extend(assignment, used_next, n, out);
            assignment.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, n, &mut out);
    out
}

/// Definition-level compatibility check: every pair in the same class stays
/// in the same class under multiplication by every element, on both sides.
pub fn is_congruence_assignment(s: &FiniteInverseSemigroup, class_of: &[usize]) -> bool {
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            if class_of[a] != class_of[b] {
                continue;
            }
            for x in 0..n {
                if class_of[s.mul(x, a)] != class_of[s.mul(x, b)]
                    || class_of[s.mul(a, x)] != class_of[s.mul(b, x)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The smallest congruence containing `pairs`, computed as the common
/// refinement (meet) of every congruence partition that contains them.
pub fn smallest_congruence_containing(
    s: &FiniteInverseSemigroup,
    pairs: &[(usize, usize)],
) -> Vec<usize> {
    let n = s.size();
    let qualifying: Vec<Vec<usize>> = enumerate_partitions(n)
        .into_iter()
        .filter(|p| pairs.iter().all(|&(a, b)| p[a] == p[b]))
        .filter(|p| is_congruence_assignment(s, p))
        .collect();
    // The universal partition always qualifies, so the meet is over a
    // nonempty family. Two elements are merged iff merged everywhere.
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        class_of[x] = next;
        for y in x + 1..n {
            if class_of[y] == usize::MAX && qualifying.iter().all(|p| p[x] == p[y]) {
                class_of[y] = next;
            }
        }
        next += 1;
    }
    class_of
}

/// Shortest word over the generators evaluating to `target`, found by
/// enumerating words in length-then-lexicographic order.
pub fn brute_shortest_word(
    s: &FiniteInverseSemigroup,
    target: usize,
    max_len: usize,
) -> Option<Vec<usize>> {
    let k = s.generators().len();
    for len in 1..=max_len {
        let mut word = vec![0usize; len];
        loop {
            if s.eval_word(&word) == Some(target) {
                return Some(word);
            }
            // Odometer, letter 0 most significant, so words of each length
            // come up in lexicographic order.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if word[pos] + 1 < k {
                    word[pos] += 1;
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&l| l == 0) {
                break;
            }
        }
    }
    None
}

/// Membership in the idempotent problem, straight off the table: fold the
/// word and test the result for idempotency. The empty word belongs exactly
/// in the monoid case.
pub fn accepts_by_table(s: &FiniteInverseSemigroup, monoid_case: bool, word: &[usize]) -> bool {
    match s.eval_word(word) {
        Some(x) => s.is_idempotent(x),
        None => monoid_case,
    }
}

/// All words over `alphabet` letters of length `0..=max_len`, in
/// length-then-lexicographic order (the empty word first).
pub fn words_up_to(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * alphabet);
        for w in &level {
            for a in 0..alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Group `words` by context equivalence with respect to the language of
/// `dfa`, brute-forcing contexts `(x, y)` of length at most `max_ctx` on
/// each side: two words are merged iff `xuy` and `xvy` agree on membership
/// for every enumerated context. Returns first-appearance class ids.
///
/// Membership is evaluated by running the automaton; endpoints of the three
/// pieces are cached so the enumeration stays affordable, but no
/// minimization or transformation algebra is involved.
pub fn context_equivalence_classes(
    dfa: &Dfa,
    words: &[Vec<usize>],
    max_ctx: usize,
) -> Vec<usize> {
    let contexts = words_up_to(dfa.alphabet(), max_ctx);
    // State reached from the start by each left context.
    let left_end: Vec<usize> = contexts
        .iter()
        .map(|x| dfa.run_from(dfa.start(), x))
        .collect();
    // Acceptance of each right context from each state.
    let accept_after: Vec<Vec<bool>> = (0..dfa.states())
        .map(|q| {
            contexts
                .iter()
                .map(|y| dfa.is_accepting(dfa.run_from(q, y)))
                .collect()
        })
        .collect();
    // Endpoint of each candidate word from each state.
    let word_end: Vec<Vec<usize>> = words
        .iter()
        .map(|w| (0..dfa.states()).map(|q| dfa.run_from(q, w)).collect())
        .collect();

    // xuy and xvy agree on membership for all (x, y) iff, after every left
    // context, the two endpoints accept the same right contexts.
    let equivalent = |wi: usize, wj: usize| -> bool {
        left_end.iter().all(|&p| {
            let (si, sj) = (word_end[wi][p], word_end[wj][p]);
            si == sj || accept_after[si] == accept_after[sj]
        })
    };

    let mut class_of = Vec::with_capacity(words.len());
    let mut reps: Vec<usize> = Vec::new();
    for wi in 0..words.len() {
        match reps.iter().position(|&r| equivalent(wi, r)) {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(wi);
            }
        }
    }
    class_of
}

/// Normalize any class assignment to first-appearance ids, so partitions
/// from different routes compare with `==`.
pub fn normalize_classes(class_of: &[usize]) -> Vec<usize> {
    let bound = class_of.iter().max().map_or(0, |&m| m + 1);
    let mut remap: Vec<Option<usize>> = vec![None; bound];
    let mut next = 0;
    class_of
        .iter()
        .map(|&c| {
            *remap[c].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        assert_eq!(enumerate_partitions(1).len(), 1);
        assert_eq!(enumerate_partitions(2).len(), 2);
        assert_eq!(enumerate_partitions(3).len(), 5);
        assert_eq!(enumerate_partitions(4).len(), 15);
        assert_eq!(enumerate_partitions(5).len(), 52);
        assert_eq!(enumerate_partitions(6).len(), 203);
    }

    #[test]
    fn word_enumeration_is_length_then_lex() {
        let ws = words_up_to(2, 2);
        assert_eq!(
            ws,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1]
            ]
        );
        assert_eq!(words_up_to(3, 3).len(), 1 + 3 + 9 + 27);
    }

    #[test]
    fn normalization_is_idempotent_and_order_canonical() {
        assert_eq!(normalize_classes(&[2, 2, 0, 1, 0]), vec![0, 0, 1, 2, 1]);
        assert_eq!(normalize_classes(&[0, 1, 2]), vec![0, 1, 2]);
    }
}
