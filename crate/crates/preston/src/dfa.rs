//! Complete deterministic finite automata over an integer alphabet, with
//! Moore-style minimization that lands on a canonical state numbering
//! (breadth-first from the start, letters in index order), exact language
//! equivalence via the product construction, and DOT export.

use std::collections::HashSet;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: usize,
    start: usize,
    transition: Vec<usize>, // row-major, states * alphabet
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: usize,
        start: usize,
        transition: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let states = accepting.len();
        if states == 0 {
            return Err(Error::Rejected("a DFA needs at least one state".into()));
        }
        if alphabet == 0 {
            return Err(Error::Rejected("alphabet must be nonempty".into()));
        }
        if start >= states {
            return Err(Error::Rejected(format!("start state {start} out of range")));
        }
        if transition.len() != states {
            return Err(Error::Rejected(format!(
                "expected {states} transition rows, got {}",
                transition.len()
            )));
        }
        let mut flat = Vec::with_capacity(states * alphabet);
        for (q, row) in transition.iter().enumerate() {
            if row.len() != alphabet {
                return Err(Error::Rejected(format!(
                    "state {q} has {} transitions, expected {alphabet}",
                    row.len()
                )));
            }
            for &t in row {
                if t >= states {
                    return Err(Error::Rejected(format!(
                        "transition from state {q} to {t} is out of range"
                    )));
                }
                flat.push(t);
            }
        }
        Ok(Dfa {
            alphabet,
            start,
            transition: flat,
            accepting,
        })
    }

    pub fn states(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.transition[q * self.alphabet + letter]
    }

    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |state, &a| self.step(state, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.accepting[self.run_from(self.start, word)]
    }

    /// States reachable from the start, breadth-first with letters in index
    /// order. This ordering is the canonical numbering after minimization.
    fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.states()];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut cursor = 0;
        while cursor < order.len() {
            let q = order[cursor];
            cursor += 1;
            for a in 0..self.alphabet {
                let t = self.step(q, a);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    /// Minimal DFA for the same language: trim to reachable states, refine
    /// the accepting/rejecting split until transitions respect it, then
    /// renumber canonically. Running it twice returns an identical value.
    pub fn minimized(&self) -> Dfa {
        let order = self.reachable_order();
        let mut compact = vec![usize::MAX; self.states()];
        for (new, &old) in order.iter().enumerate() {
            compact[old] = new;
        }
        let n = order.len();
        let step = |q: usize, a: usize| compact[self.step(order[q], a)];

        let mut class: Vec<usize> = order
            .iter()
            .map(|&old| usize::from(self.accepting[old]))
            .collect();
        // Both-polarity start: renumber by first appearance so an
        // all-accepting automaton still begins with a single class.
        class = crate::oracle::normalize_classes(&class);
        loop {
            let mut signatures: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
            for q in 0..n {
                let sig: Vec<usize> = (0..self.alphabet).map(|a| class[step(q, a)]).collect();
                signatures.push((class[q], sig));
            }
            let mut seen: Vec<&(usize, Vec<usize>)> = Vec::new();
            let mut next = vec![0usize; n];
            for q in 0..n {
                match seen.iter().position(|s| **s == signatures[q]) {
                    Some(c) => next[q] = c,
                    None => {
                        next[q] = seen.len();
                        seen.push(&signatures[q]);
                    }
                }
            }
            // Signatures carry the old class, so refinement is monotone and
            // both sides stay first-appearance normalized: plain equality
            // detects the fixpoint.
            if next == class {
                break;
            }
            class = next;
        }

        let num_classes = class.iter().max().unwrap() + 1;
        let mut class_step = vec![0usize; num_classes * self.alphabet];
        let mut class_accept = vec![false; num_classes];
        for q in 0..n {
            class_accept[class[q]] = self.accepting[order[q]];
            for a in 0..self.alphabet {
                class_step[class[q] * self.alphabet + a] = class[step(q, a)];
            }
        }

        // Canonical renumbering: BFS over classes from the start class.
        let mut renumber = vec![usize::MAX; num_classes];
        let mut bfs = vec![class[0]]; // compact state 0 is the start
        renumber[class[0]] = 0;
        let mut cursor = 0;
        while cursor < bfs.len() {
            let c = bfs[cursor];
            cursor += 1;
            for a in 0..self.alphabet {
                let t = class_step[c * self.alphabet + a];
                if renumber[t] == usize::MAX {
                    renumber[t] = bfs.len();
                    bfs.push(t);
                }
            }
        }

        let mut transition = vec![0usize; num_classes * self.alphabet];
        let mut accepting = vec![false; num_classes];
        for (new, &old_class) in bfs.iter().enumerate() {
            accepting[new] = class_accept[old_class];
            for a in 0..self.alphabet {
                transition[new * self.alphabet + a] =
                    renumber[class_step[old_class * self.alphabet + a]];
            }
        }
        Dfa {
            alphabet: self.alphabet,
            start: 0,
            transition,
            accepting,
        }
    }

    /// Exact language equality by reachability in the product automaton.
    pub fn equivalent_to(&self, other: &Dfa) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let mut seen = HashSet::new();
        let mut stack = vec![(self.start, other.start)];
        seen.insert((self.start, other.start));
        while let Some((p, q)) = stack.pop() {
            if self.accepting[p] != other.accepting[q] {
                return false;
            }
            for a in 0..self.alphabet {
                let next = (self.step(p, a), other.step(q, a));
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        true
    }

    /// Deterministic DOT rendering. Accepting states are double circles,
    /// parallel edges are collapsed with comma-joined labels, and letters
    /// can be given display names (defaulting to `a0, a1, ..`).
    pub fn to_dot(&self, letter_names: Option<&[String]>) -> String {
        let name = |a: usize| -> String {
            match letter_names {
                Some(ns) => ns[a].clone(),
                None => format!("a{a}"),
            }
        };
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
        for q in 0..self.states() {
            let shape = if self.accepting[q] {
                "doublecircle"
            } else {
                "circle"
            };
            out.push_str(&format!("  q{q} [shape={shape}];\n"));
        }
        out.push_str(&format!("  __start -> q{};\n", self.start));
        for q in 0..self.states() {
            // Group letters by target, emitted in order of first letter.
            let mut targets: Vec<(usize, Vec<usize>)> = Vec::new();
            for a in 0..self.alphabet {
                let t = self.step(q, a);
                match targets.iter_mut().find(|(tt, _)| *tt == t) {
                    Some((_, letters)) => letters.push(a),
                    None => targets.push((t, vec![a])),
                }
            }
            for (t, letters) in targets {
                let label: Vec<String> = letters.iter().map(|&a| name(a)).collect();
                out.push_str(&format!(
                    "  q{q} -> q{t} [label=\"{}\"];\n",
                    label.join(",")
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}
