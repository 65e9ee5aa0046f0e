//! Congruences on a finite inverse semigroup: smallest-containing closure by
//! union-find, quotients, idempotent purity, and the greatest idempotent-pure
//! congruence computed from context signatures.

use std::collections::HashMap;

use crate::oracle::normalize_classes;
use crate::semigroup::FiniteInverseSemigroup;
use crate::{Error, Result};

/// A partition of the elements compatible with multiplication on both
/// sides. Class ids follow first appearance in element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl Congruence {
    pub fn equality(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            num_classes: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        assert!(n > 0);
        Congruence {
            class_of: vec![0; n],
            num_classes: n.min(1),
        }
    }

    /// Wrap an explicit class assignment, validating compatibility.
    pub fn from_classes(s: &FiniteInverseSemigroup, class_of: Vec<usize>) -> Result<Self> {
        if class_of.len() != s.size() {
            return Err(Error::Rejected(format!(
                "class assignment covers {} elements, semigroup has {}",
                class_of.len(),
                s.size()
            )));
        }
        let normalized = normalize_classes(&class_of);
        if let Some((a, x)) = compatibility_break(s, &normalized) {
            return Err(Error::Rejected(format!(
                "not a congruence: multiplying class of {a} by {x} splits it"
            )));
        }
        let num_classes = normalized.iter().max().map_or(0, |&m| m + 1);
        Ok(Congruence {
            class_of: normalized,
            num_classes,
        })
    }

    /// Smallest congruence containing the given pairs: union-find seeded
    /// with the pairs, then left/right translates merged to a fixpoint.
    pub fn generated_by(
        s: &FiniteInverseSemigroup,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = s.size();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Rejected(format!(
                    "pair ({a},{b}) is out of range for {n} elements"
                )));
            }
        }
        let mut uf = UnionFind::new(n);
        let mut worklist: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in pairs {
            if uf.union(a, b) {
                worklist.push((a, b));
            }
        }
        while let Some((a, b)) = worklist.pop() {
            for x in 0..n {
                for (p, q) in [(s.mul(x, a), s.mul(x, b)), (s.mul(a, x), s.mul(b, x))] {
                    if uf.union(p, q) {
                        worklist.push((p, q));
                    }
                }
            }
        }
        let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        let class_of = normalize_classes(&raw);
        let num_classes = class_of.iter().max().map_or(0, |&m| m + 1);
        debug_assert!(compatibility_break(s, &class_of).is_none());
        Ok(Congruence {
            class_of,
            num_classes,
        })
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes_len(&self) -> usize {
        self.num_classes
    }

    pub fn class_assignment(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// True when no class mixes idempotents with non-idempotents.
    pub fn is_idempotent_pure(&self, s: &FiniteInverseSemigroup) -> bool {
        assert_eq!(self.class_of.len(), s.size());
        let mut has_idem = vec![false; self.num_classes];
        let mut has_other = vec![false; self.num_classes];
        for x in 0..s.size() {
            if s.is_idempotent(x) {
                has_idem[self.class_of[x]] = true;
            } else {
                has_other[self.class_of[x]] = true;
            }
        }
        (0..self.num_classes).all(|c| !(has_idem[c] && has_other[c]))
    }

    /// Every class of `self` is contained in a class of `coarser`.
    pub fn refines(&self, coarser: &Congruence) -> bool {
        assert_eq!(self.class_of.len(), coarser.class_of.len());
        let mut image: Vec<Option<usize>> = vec![None; self.num_classes];
        for x in 0..self.class_of.len() {
            let c = self.class_of[x];
            match image[c] {
                None => image[c] = Some(coarser.class_of[x]),
                Some(target) => {
                    if target != coarser.class_of[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The quotient semigroup on class representatives, together with the
    /// projection map element -> class index.
    pub fn quotient(
        &self,
        s: &FiniteInverseSemigroup,
    ) -> Result<(FiniteInverseSemigroup, Vec<usize>)> {
        assert_eq!(self.class_of.len(), s.size());
        let m = self.num_classes;
        // First element of each class; ids are first-appearance, so reps
        // come out in ascending element order.
        let mut rep = vec![usize::MAX; m];
        for x in (0..s.size()).rev() {
            rep[self.class_of[x]] = x;
        }
        let mut table = Vec::with_capacity(m);
        for a in 0..m {
            table.push(
                (0..m)
                    .map(|b| self.class_of[s.mul(rep[a], rep[b])])
                    .collect::<Vec<_>>(),
            );
        }
        let names = rep.iter().map(|&r| format!("[{}]", s.name(r))).collect();
        let mut gens = Vec::new();
        for &g in s.generators() {
            let c = self.class_of[g];
            if !gens.contains(&c) {
                gens.push(c);
            }
        }
        let quotient = FiniteInverseSemigroup::from_table(table, Some(names), Some(gens))
            .map_err(|e| Error::Invariant(format!("quotient is not an inverse semigroup: {e}")))?;
        Ok((quotient, self.class_of.clone()))
    }
}

/// Find one witness that an assignment is not compatible: an element `a`
/// whose class, multiplied by `x`, lands in two different classes. Checking
/// representatives suffices by transitivity.
fn compatibility_break(
    s: &FiniteInverseSemigroup,
    class_of: &[usize],
) -> Option<(usize, usize)> {
    let n = s.size();
    let bound = class_of.iter().max().map_or(0, |&m| m + 1);
    let mut rep = vec![usize::MAX; bound];
    for x in (0..n).rev() {
        rep[class_of[x]] = x;
    }
    for a in 0..n {
        let r = rep[class_of[a]];
        for x in 0..n {
            if class_of[s.mul(x, a)] != class_of[s.mul(x, r)]
                || class_of[s.mul(a, x)] != class_of[s.mul(r, x)]
            {
                return Some((a, x));
            }
        }
    }
    None
}

/// The greatest idempotent-pure congruence: `a ~ b` iff for every context
/// `x, y` drawn from the semigroup with a formally adjoined identity,
/// `xay` is idempotent exactly when `xby` is. Signatures are folded in
/// 64-context blocks so memory stays flat. The result is re-verified to be
/// an idempotent-pure congruence before it is returned.
pub fn greatest_idempotent_pure(s: &FiniteInverseSemigroup) -> Result<Congruence> {
    let n = s.size();
    let one = n; // adjoined identity, even when s already has one
    let mul1 = |a: usize, b: usize| -> usize {
        if a == one {
            b
        } else if b == one {
            a
        } else {
            s.mul(a, b)
        }
    };

    let mut class_of = vec![0usize; n];
    let mut num_classes = 1usize;
    let contexts: Vec<(usize, usize)> = (0..=n)
        .flat_map(|x| (0..=n).map(move |y| (x, y)))
        .collect();
    for block in contexts.chunks(64) {
        let mut next: HashMap<(usize, u64), usize> = HashMap::new();
        let mut refined = vec![0usize; n];
        for a in 0..n {
            let mut bits = 0u64;
            for (i, &(x, y)) in block.iter().enumerate() {
                let product = mul1(mul1(x, a), y);
                debug_assert!(product < n, "contexts keep products inside the semigroup");
                if s.is_idempotent(product) {
                    bits |= 1 << i;
                }
            }
            let fresh = next.len();
            refined[a] = *next.entry((class_of[a], bits)).or_insert(fresh);
        }
        num_classes = next.len();
        class_of = refined;
        if num_classes == n {
            break; // already discrete
        }
    }
    let class_of = normalize_classes(&class_of);

    if let Some((a, x)) = compatibility_break(s, &class_of) {
        return Err(Error::Invariant(format!(
            "context relation failed compatibility at element {a}, translate {x}"
        )));
    }
    let congruence = Congruence {
        class_of,
        num_classes,
    };
    if !congruence.is_idempotent_pure(s) {
        return Err(Error::Invariant(
            "context relation merged an idempotent with a non-idempotent".into(),
        ));
    }
    Ok(congruence)
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// True when the two were in different classes.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::semigroup::{brandt_b2, cyclic_group, free_semilattice, symmetric_inverse_monoid};

    #[test]
    fn merging_the_two_partial_identities_collapses_brandt() {
        let b2 = brandt_b2();
        // Elements: 0 = a, 1 = a⁻¹, 2 = zero, 3 = aa⁻¹, 4 = a⁻¹a.
        let c = Congruence::generated_by(&b2, &[(3, 4)]).unwrap();
        let expected = oracle::smallest_congruence_containing(&b2, &[(3, 4)]);
        assert_eq!(c.class_assignment(), expected.as_slice());
        // Propagation drags a ~ zero and then everything together.
        assert_eq!(c.classes_len(), 1);
    }

    #[test]
    fn closure_matches_the_partition_oracle_on_every_single_pair() {
        let members: Vec<FiniteInverseSemigroup> = vec![
            brandt_b2(),
            cyclic_group(4).unwrap(),
            free_semilattice(2).unwrap(),
            symmetric_inverse_monoid(1).unwrap(),
        ];
        for s in &members {
            for a in 0..s.size() {
                for b in 0..s.size() {
                    let got = Congruence::generated_by(s, &[(a, b)]).unwrap();
                    let want = oracle::smallest_congruence_containing(s, &[(a, b)]);
                    assert_eq!(
                        got.class_assignment(),
                        want.as_slice(),
                        "pair ({a},{b}) on a {}-element semigroup",
                        s.size()
                    );
                }
            }
        }
    }

    #[test]
    fn empty_pair_set_gives_equality() {
        let z4 = cyclic_group(4).unwrap();
        let c = Congruence::generated_by(&z4, &[]).unwrap();
        assert_eq!(c.classes_len(), 4);
        assert!(c.is_idempotent_pure(&z4));
        assert!(Congruence::generated_by(&z4, &[(0, 9)]).is_err());
    }

    #[test]
    fn merging_free_semilattice_generators_collapses_everything() {
        // {1} ~ {2} forces {1} ~ {1}∪{2} as well: one class, quotient trivial.
        let fs2 = free_semilattice(2).unwrap();
        let c = Congruence::generated_by(&fs2, &[(0, 1)]).unwrap();
        assert_eq!(c.classes_len(), 1);
        let (q, projection) = c.quotient(&fs2).unwrap();
        assert_eq!(q.size(), 1);
        assert_eq!(projection, vec![0, 0, 0]);
    }

    #[test]
    fn quotient_respects_structure() {
        let z4 = cyclic_group(4).unwrap();
        // Merge g with g³ (the congruence generated collapses to Z2: the
        // subgroup {e, g²} becomes the kernel class).
        let c = Congruence::generated_by(&z4, &[(0, 2)]).unwrap();
        assert_eq!(c.classes_len(), 2);
        let (q, projection) = c.quotient(&z4).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.verify().ok);
        assert!(q.identity().is_some());
        // Projection is a homomorphism.
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(projection[z4.mul(a, b)], q.mul(projection[a], projection[b]));
            }
        }
    }

    #[test]
    fn idempotent_purity_flags_mixed_classes() {
        let b2 = brandt_b2();
        assert!(Congruence::equality(5).is_idempotent_pure(&b2));
        assert!(!Congruence::universal(5).is_idempotent_pure(&b2));
    }

    #[test]
    fn from_classes_rejects_incompatible_partitions() {
        let b2 = brandt_b2();
        // {a, a⁻¹} in one class is not compatible.
        let err = Congruence::from_classes(&b2, vec![0, 0, 1, 2, 3]).unwrap_err();
        assert!(err.to_string().contains("not a congruence"));
        assert!(Congruence::from_classes(&b2, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn greatest_idempotent_pure_on_groups_is_equality() {
        let z4 = cyclic_group(4).unwrap();
        let c = greatest_idempotent_pure(&z4).unwrap();
        assert_eq!(c.classes_len(), 4);
    }

    #[test]
    fn greatest_idempotent_pure_on_semilattices_is_universal() {
        for k in 1..=4 {
            let fs = free_semilattice(k).unwrap();
            let c = greatest_idempotent_pure(&fs).unwrap();
            assert_eq!(c.classes_len(), 1);
        }
    }

    #[test]
    fn greatest_idempotent_pure_on_brandt_is_equality() {
        let b2 = brandt_b2();
        let c = greatest_idempotent_pure(&b2).unwrap();
        assert_eq!(c.classes_len(), 5);
    }

    #[test]
    fn greatest_is_maximal_among_sampled_idempotent_pure_congruences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for s in [
            brandt_b2(),
            free_semilattice(3).unwrap(),
            cyclic_group(4).unwrap(),
            symmetric_inverse_monoid(2).unwrap(),
        ] {
            let greatest = greatest_idempotent_pure(&s).unwrap();
            for _ in 0..200 {
                let a = rng.gen_range(0..s.size());
                let b = rng.gen_range(0..s.size());
                let c = Congruence::generated_by(&s, &[(a, b)]).unwrap();
                if c.is_idempotent_pure(&s) {
                    assert!(
                        c.refines(&greatest),
                        "idempotent-pure congruence escaped the greatest one"
                    );
                }
            }
        }
    }
}
