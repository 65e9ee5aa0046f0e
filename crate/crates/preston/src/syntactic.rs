//! The idempotent problem as a regular language, and its syntactic monoid.
//!
//! For a semigroup with chosen generators, the words over the generator
//! alphabet that evaluate to idempotents form a regular language. The
//! recognizing DFA has one state per element plus a fresh start state. The
//! syntactic monoid is read off the minimal DFA as its transition monoid;
//! elements reachable by nonempty words form the syntactic semigroup, which
//! is either the whole monoid or the monoid minus its identity.

use std::collections::HashMap;

use serde::Serialize;

use crate::dfa::Dfa;
use crate::semigroup::FiniteInverseSemigroup;
use crate::{Error, Result};

pub const DEFAULT_MONOID_CAP: usize = 100_000;

/// Recognizes the words over the generating alphabet whose product is
/// idempotent. States `0..size` are the elements, state `size` is the
/// start; in the monoid case (which requires a generated identity) the
/// empty word is in the language, so the start state accepts.
pub fn idempotent_problem_dfa(s: &FiniteInverseSemigroup, monoid_case: bool) -> Result<Dfa> {
    if monoid_case && s.identity().is_none() {
        return Err(Error::Rejected(
            "monoid case requires an identity element in the closure".into(),
        ));
    }
    let n = s.size();
    let alphabet = s.generators().len();
    let mut transition = Vec::with_capacity(n + 1);
    for x in 0..n {
        transition.push(s.generators().iter().map(|&g| s.mul(x, g)).collect());
    }
    transition.push(s.generators().to_vec()); // start state reads a letter
    let mut accepting: Vec<bool> = (0..n).map(|x| s.is_idempotent(x)).collect();
    accepting.push(monoid_case);
    Dfa::new(alphabet, n, transition, accepting)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dichotomy {
    /// Some nonempty word acts like the empty one: semigroup part = monoid.
    EqualsMonoid,
    /// The identity is the empty word's class alone.
    IdentityRemoved,
}

/// Transition monoid of a minimal DFA: the syntactic monoid of its
/// language, with the image of nonempty words marked out.
#[derive(Debug, Clone)]
pub struct SyntacticAlgebra {
    table: Vec<usize>, // row-major over all monoid elements
    size: usize,
    identity: usize,
    letter_image: Vec<usize>,
    in_semigroup_part: Vec<bool>,
    idempotent: Vec<bool>,
    witness: Vec<Vec<usize>>, // shortest word per element; empty for identity
}

impl SyntacticAlgebra {
    pub fn from_minimal_dfa(dfa: &Dfa) -> Result<Self> {
        Self::from_minimal_dfa_with_cap(dfa, DEFAULT_MONOID_CAP)
    }

    pub fn from_minimal_dfa_with_cap(dfa: &Dfa, cap: usize) -> Result<Self> {
        if dfa.minimized().states() != dfa.states() {
            return Err(Error::Rejected(
                "the syntactic algebra is read off the minimal DFA; minimize first".into(),
            ));
        }
        let q = dfa.states();
        let letters: Vec<Vec<usize>> = (0..dfa.alphabet())
            .map(|a| (0..q).map(|s| dfa.step(s, a)).collect())
            .collect();

        // Breadth-first closure over word-induced state transformations,
        // starting from the empty word's identity transformation.
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elems: Vec<Vec<usize>> = Vec::new();
        let mut witness: Vec<Vec<usize>> = Vec::new();
        let mut nonempty = Vec::new();
        let identity_map: Vec<usize> = (0..q).collect();
        index.insert(identity_map.clone(), 0);
        elems.push(identity_map);
        witness.push(Vec::new());
        nonempty.push(false);

        let mut cursor = 0;
        while cursor < elems.len() {
            for (a, letter) in letters.iter().enumerate() {
                let composed: Vec<usize> = elems[cursor].iter().map(|&s| letter[s]).collect();
                match index.get(&composed) {
                    Some(&i) => nonempty[i] = true,
                    None => {
                        if elems.len() >= cap {
                            return Err(Error::Resource(format!(
                                "syntactic monoid exceeds the cap of {cap} elements"
                            )));
                        }
                        index.insert(composed.clone(), elems.len());
                        let mut word = witness[cursor].clone();
                        word.push(a);
                        witness.push(word);
                        nonempty.push(true);
                        elems.push(composed);
                    }
                }
            }
            cursor += 1;
        }

        let size = elems.len();
        let mut table = vec![0usize; size * size];
        for u in 0..size {
            for v in 0..size {
                // u then v, matching word concatenation.
                let composed: Vec<usize> = elems[u].iter().map(|&s| elems[v][s]).collect();
                table[u * size + v] = index[&composed];
            }
        }
        let letter_image = letters.iter().map(|l| index[l]).collect();
        let idempotent = (0..size).map(|x| table[x * size + x] == x).collect();
        Ok(SyntacticAlgebra {
            table,
            size,
            identity: 0,
            letter_image,
            in_semigroup_part: nonempty,
            idempotent,
            witness,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn letter_image(&self, a: usize) -> usize {
        self.letter_image[a]
    }

    pub fn letter_images(&self) -> &[usize] {
        &self.letter_image
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.idempotent[x]
    }

    pub fn in_semigroup_part(&self, x: usize) -> bool {
        self.in_semigroup_part[x]
    }

    pub fn semigroup_part(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.in_semigroup_part[x])
            .collect()
    }

    pub fn semigroup_size(&self) -> usize {
        self.in_semigroup_part.iter().filter(|&&b| b).count()
    }

    pub fn witness_word(&self, x: usize) -> &[usize] {
        &self.witness[x]
    }

    pub fn dichotomy(&self) -> Dichotomy {
        // Every non-identity element is reached by a nonempty word, so the
        // split hinges on the identity alone.
        if self.in_semigroup_part[self.identity] {
            Dichotomy::EqualsMonoid
        } else {
            Dichotomy::IdentityRemoved
        }
    }

    /// Fold a word through the monoid; the empty word is the identity.
    pub fn eval_word(&self, word: &[usize]) -> usize {
        word.iter()
            .fold(self.identity, |acc, &a| self.mul(acc, self.letter_image[a]))
    }

    /// Whether the full monoid is a group. Two routes must agree: exactly
    /// one idempotent, and every element two-sided invertible around the
    /// identity.
    pub fn is_group_language(&self) -> bool {
        let one_idempotent = self.idempotent.iter().filter(|&&b| b).count() == 1;
        let invertible = (0..self.size).all(|x| {
            (0..self.size)
                .any(|y| self.mul(x, y) == self.identity && self.mul(y, x) == self.identity)
        });
        assert_eq!(
            one_idempotent, invertible,
            "a finite monoid has one idempotent exactly when it is a group"
        );
        one_idempotent
    }

    /// Whether the syntactic semigroup (image of nonempty words) is a
    /// group. Again two routes: a unique idempotent in the part, and that
    /// idempotent acting as identity with all part elements invertible.
    pub fn semigroup_part_is_group(&self) -> bool {
        let part = self.semigroup_part();
        let idems: Vec<usize> = part
            .iter()
            .copied()
            .filter(|&x| self.idempotent[x])
            .collect();
        let one_idempotent = idems.len() == 1;
        let subgroup = idems.len() == 1 && {
            let e = idems[0];
            part.iter().all(|&x| {
                self.mul(e, x) == x
                    && self.mul(x, e) == x
                    && part
                        .iter()
                        .any(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
            })
        };
        assert_eq!(
            one_idempotent, subgroup,
            "a finite semigroup has one idempotent exactly when it is a group"
        );
        one_idempotent
    }
}
