//! λ-semidirect products: a finite inverse semigroup acting on another by
//! endomorphisms, the product on the universe of compatible pairs, and the
//! quantitative generation bounds that make such products locally finite.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::semigroup::{FiniteInverseSemigroup, MultiplicationReport, Violation};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 200;

/// A left action of `actor` on `target` by endomorphisms, as an explicit
/// table: `act[g][alpha]` is g·α.
#[derive(Debug, Clone)]
pub struct EndomorphismAction {
    actor: FiniteInverseSemigroup,
    target: FiniteInverseSemigroup,
    act: Vec<Vec<usize>>,
}

impl EndomorphismAction {
    /// Shape-checks only; use [`validate`](Self::validate) for the axioms.
    pub fn new(
        actor: FiniteInverseSemigroup,
        target: FiniteInverseSemigroup,
        act: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if act.len() != actor.size() {
            return Err(Error::Rejected(format!(
                "action table has {} rows but the actor has {} elements",
                act.len(),
                actor.size()
            )));
        }
        for (g, row) in act.iter().enumerate() {
            if row.len() != target.size() {
                return Err(Error::Rejected(format!(
                    "action row {g} has {} entries but the target has {} elements",
                    row.len(),
                    target.size()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= target.size()) {
                return Err(Error::Rejected(format!(
                    "action row {g} maps into {bad}, outside the target"
                )));
            }
        }
        Ok(EndomorphismAction { actor, target, act })
    }

    pub fn actor(&self) -> &FiniteInverseSemigroup {
        &self.actor
    }

    pub fn target(&self) -> &FiniteInverseSemigroup {
        &self.target
    }

    /// g·α.
    pub fn apply(&self, g: usize, alpha: usize) -> usize {
        self.act[g][alpha]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.act
    }

    /// Checks that every g acts as an endomorphism and that the action is
    /// compatible with the actor's multiplication. The first failure in
    /// scan order (endomorphism axiom over (g, α, β), then the action
    /// axiom over (g, h, α)) is reported with its witnesses.
    pub fn validate(&self) -> MultiplicationReport {
        let ng = self.actor.size();
        let na = self.target.size();
        for g in 0..ng {
            for alpha in 0..na {
                for beta in 0..na {
                    let lhs = self.act[g][self.target.mul(alpha, beta)];
                    let rhs = self.target.mul(self.act[g][alpha], self.act[g][beta]);
                    if lhs != rhs {
                        return MultiplicationReport::failed(Violation::NotEndomorphism {
                            g,
                            alpha,
                            beta,
                        });
                    }
                }
            }
        }
        for g in 0..ng {
            for h in 0..ng {
                for alpha in 0..na {
                    let lhs = self.act[self.actor.mul(g, h)][alpha];
                    let rhs = self.act[g][self.act[h][alpha]];
                    if lhs != rhs {
                        return MultiplicationReport::failed(Violation::NotAction {
                            g,
                            h,
                            alpha,
                        });
                    }
                }
            }
        }
        MultiplicationReport::passed()
    }
}

/// The λ-semidirect product of a validated action: pairs (α, g) with
/// gg⁻¹·α = α under (α,g)(β,h) = ([(gh)(gh)⁻¹·α]∘[g·β], gh).
pub struct LambdaProduct {
    action: EndomorphismAction,
    pairs: Vec<(usize, usize)>,
    product: FiniteInverseSemigroup,
}

impl LambdaProduct {
    pub fn build(action: EndomorphismAction) -> Result<Self> {
        let report = action.validate();
        if let Some(v) = report.failure {
            return Err(Error::Rejected(format!("invalid action: {v}")));
        }
        let g_s = action.actor();
        let a_s = action.target();

        let mut pairs = Vec::new();
        let mut index = vec![usize::MAX; a_s.size() * g_s.size()];
        for alpha in 0..a_s.size() {
            for g in 0..g_s.size() {
                let e = g_s.mul(g, g_s.inverse(g));
                if action.apply(e, alpha) == alpha {
                    index[alpha * g_s.size() + g] = pairs.len();
                    pairs.push((alpha, g));
                }
            }
        }

        let n = pairs.len();
        let mut table = vec![vec![0usize; n]; n];
        for (i, &(alpha, g)) in pairs.iter().enumerate() {
            for (j, &(beta, h)) in pairs.iter().enumerate() {
                let gh = g_s.mul(g, h);
                let e = g_s.mul(gh, g_s.inverse(gh));
                let left = a_s.mul(action.apply(e, alpha), action.apply(g, beta));
                let slot = index[left * g_s.size() + gh];
                if slot == usize::MAX {
                    return Err(Error::Invariant(format!(
                        "product of pairs {i} and {j} left the universe"
                    )));
                }
                table[i][j] = slot;
            }
        }

        let names = pairs
            .iter()
            .map(|&(alpha, g)| format!("({},{})", a_s.name(alpha), g_s.name(g)))
            .collect();
        let product = FiniteInverseSemigroup::from_table(table, Some(names), None)
            .map_err(|e| {
                Error::Invariant(format!("pairs do not form an inverse semigroup: {e}"))
            })?;
        Ok(LambdaProduct {
            action,
            pairs,
            product,
        })
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn action(&self) -> &EndomorphismAction {
        &self.action
    }

    pub fn product(&self) -> &FiniteInverseSemigroup {
        &self.product
    }

    pub fn into_product(self) -> FiniteInverseSemigroup {
        self.product
    }
}

/// A non-decreasing function bounding the size of j-generated
/// subsemigroups of the acted-on semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeBound {
    /// σ(j) = 2^j − 1, valid whenever the target is a semilattice.
    FreeSemilattice,
    /// σ(j) = c, valid whenever c bounds the target's own size.
    Constant(u64),
}

impl SizeBound {
    pub fn value(&self, j: usize) -> u128 {
        match *self {
            SizeBound::FreeSemilattice => {
                if j >= 127 {
                    u128::MAX
                } else {
                    (1u128 << j) - 1
                }
            }
            SizeBound::Constant(c) => u128::from(c),
        }
    }
}

impl std::fmt::Display for SizeBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            SizeBound::FreeSemilattice => write!(f, "2^j - 1"),
            SizeBound::Constant(c) => write!(f, "constant {c}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GenerationBoundSample {
    pub m: usize,
    /// |G|·σ(m|G|) when it fits in a u64.
    pub bound: Option<u64>,
    pub bound_display: String,
    /// All m-subsets were enumerated rather than sampled.
    pub exhaustive: bool,
    pub subsets_checked: usize,
    pub max_observed: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct LocalFinitenessReport {
    pub actor_size: usize,
    pub product_size: usize,
    pub sigma: String,
    pub trials: usize,
    pub seed: u64,
    pub samples: Vec<GenerationBoundSample>,
    pub max_ratio: f64,
    pub ok: bool,
}

/// Every m-generated subsemigroup of the λ-product has size at most
/// |G|·σ(m|G|), provided σ bounds j-generated subsemigroups of the target.
///
/// The σ premise is itself spot-checked (exhaustively where cheap,
/// otherwise on sampled subsets) and a failing σ rejects the input. For
/// each m up to `max_m`, all m-subsets of the product are enumerated when
/// there are at most `trials` of them and sampled without replacement
/// otherwise; an observed closure exceeding the bound is an invariant
/// violation.
pub fn check_local_finiteness_bound(
    p: &LambdaProduct,
    sigma: SizeBound,
    trials: usize,
    max_m: usize,
    seed: u64,
) -> Result<LocalFinitenessReport> {
    if trials == 0 || max_m == 0 {
        return Err(Error::Rejected(
            "trials and the generator budget must be positive".into(),
        ));
    }
    let actor_size = p.action().actor().size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    check_sigma_premise(p.action().target(), sigma, trials, max_m * actor_size, &mut rng)?;

    let mut samples = Vec::new();
    let mut max_ratio: f64 = 0.0;
    for m in 1..=max_m.min(p.size()) {
        let bound = u128::from(actor_size as u64)
            .saturating_mul(sigma.value(m * actor_size));
        let (max_observed, subsets_checked, exhaustive) =
            max_generated_size(p.product(), m, trials, &mut rng);
        if max_observed as u128 > bound {
            return Err(Error::Invariant(format!(
                "an {m}-generated subsemigroup has {max_observed} elements, above the bound {bound}"
            )));
        }
        let ratio = max_observed as f64 / bound as f64;
        max_ratio = max_ratio.max(ratio);
        samples.push(GenerationBoundSample {
            m,
            bound: u64::try_from(bound).ok(),
            bound_display: bound.to_string(),
            exhaustive,
            subsets_checked,
            max_observed,
            ratio,
        });
    }
    Ok(LocalFinitenessReport {
        actor_size,
        product_size: p.size(),
        sigma: sigma.to_string(),
        trials,
        seed,
        samples,
        max_ratio,
        ok: true,
    })
}

fn check_sigma_premise(
    target: &FiniteInverseSemigroup,
    sigma: SizeBound,
    trials: usize,
    k_max: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    for k in 1..=k_max.min(target.size()) {
        let (observed, _, _) = max_generated_size(target, k, trials, rng);
        if observed as u128 > sigma.value(k) {
            return Err(Error::Rejected(format!(
                "size function is not valid for the target: a {k}-generated \
                 subsemigroup has {observed} elements, above σ({k}) = {}",
                sigma.value(k)
            )));
        }
    }
    Ok(())
}

/// Largest closure size over m-subsets of `s`, with the subset source
/// (exhaustive vs sampled) and the number of subsets visited.
fn max_generated_size(
    s: &FiniteInverseSemigroup,
    m: usize,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> (usize, usize, bool) {
    let n = s.size();
    let mut max_observed = 0;
    let mut checked = 0;
    if binomial(n, m) <= trials as u128 {
        for_each_subset(n, m, |y| {
            max_observed = max_observed.max(s.generated_subsemigroup(y).len());
            checked += 1;
        });
        (max_observed, checked, true)
    } else {
        for _ in 0..trials {
            let mut y = rand::seq::index::sample(rng, n, m).into_vec();
            y.sort_unstable();
            max_observed = max_observed.max(s.generated_subsemigroup(&y).len());
            checked += 1;
        }
        (max_observed, checked, false)
    }
}

fn for_each_subset(n: usize, m: usize, mut f: impl FnMut(&[usize])) {
    if m > n || m == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        f(&idx);
        let mut i = m;
        while i > 0 && idx[i - 1] == n - m + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// n(2^{kn} − 1): the size cap for an inverse semigroup with k generators
/// whose greatest idempotent-pure quotient has n elements. Guarded to
/// exact u64 arithmetic.
pub fn billhardt_bound(n: u64, k: u64) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::Rejected("both arguments must be positive".into()));
    }
    let kn = k
        .checked_mul(n)
        .filter(|&kn| kn <= 62)
        .ok_or_else(|| Error::Rejected("kn exceeds 62; the bound would overflow".into()))?;
    let pow = (1u128 << kn) - 1;
    u64::try_from(u128::from(n) * pow)
        .map_err(|_| Error::Rejected("the bound does not fit in 64 bits".into()))
}

/// size ≤ n(2^{kn} − 1), compared exactly; once kn ≥ 64 the right side
/// exceeds any table we can hold.
pub fn corollary_bound_holds(size: usize, n: usize, k: usize) -> bool {
    let kn = k.saturating_mul(n);
    if kn >= 64 {
        return true;
    }
    (size as u128) <= (n as u128) * ((1u128 << kn) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{are_isomorphic, brandt_b2, cyclic_group, free_semilattice};

    fn z2_swap_action() -> EndomorphismAction {
        // Z₂ = {g, e} in discovery order; free_semilattice(2) = [{1}, {2}, {1,2}].
        EndomorphismAction::new(
            cyclic_group(2).unwrap(),
            free_semilattice(2).unwrap(),
            vec![vec![1, 0, 2], vec![0, 1, 2]],
        )
        .unwrap()
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let z2 = cyclic_group(2).unwrap();
        let fs2 = free_semilattice(2).unwrap();
        assert!(EndomorphismAction::new(z2.clone(), fs2.clone(), vec![vec![0, 1, 2]]).is_err());
        assert!(EndomorphismAction::new(
            z2.clone(),
            fs2.clone(),
            vec![vec![0, 1], vec![0, 1, 2]]
        )
        .is_err());
        assert!(
            EndomorphismAction::new(z2, fs2, vec![vec![0, 1, 3], vec![0, 1, 2]]).is_err()
        );
    }

    #[test]
    fn the_first_endomorphism_failure_is_pinpointed() {
        // g·{1} = {1,2}, g·{2} = {2}, g·{1,2} = {2}: then g·({1}∘{2}) = {2}
        // but (g·{1})∘(g·{2}) = {1,2}.
        let bad = EndomorphismAction::new(
            cyclic_group(2).unwrap(),
            free_semilattice(2).unwrap(),
            vec![vec![2, 1, 1], vec![0, 1, 2]],
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.ok);
        assert_eq!(
            report.failure,
            Some(Violation::NotEndomorphism {
                g: 0,
                alpha: 0,
                beta: 1
            })
        );
        assert!(matches!(
            LambdaProduct::build(bad),
            Err(Error::Rejected(_))
        ));
    }

    #[test]
    fn action_axiom_failures_are_pinpointed() {
        // Every row is an endomorphism of the semilattice, but the g row is
        // idempotent ({1}↦{1,2}↦{1,2}) while g² = e must act identically.
        let bad = EndomorphismAction::new(
            cyclic_group(2).unwrap(),
            free_semilattice(2).unwrap(),
            vec![vec![2, 2, 2], vec![0, 1, 2]],
        )
        .unwrap();
        let report = bad.validate();
        assert_eq!(
            report.failure,
            Some(Violation::NotAction {
                g: 0,
                h: 0,
                alpha: 0
            })
        );
    }

    #[test]
    fn swap_product_has_six_elements_and_full_universe() {
        let p = LambdaProduct::build(z2_swap_action()).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(
            p.pairs(),
            &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
        );
        assert!(p.product().verify().ok);
        assert_eq!(p.product().idempotents().len(), 3);
        assert!(crate::checks::is_e_unitary(p.product()));
        assert_eq!(p.product().name(0), "({1},{0->1 1->0})");
    }

    #[test]
    fn trivial_actor_reproduces_the_target() {
        let one = cyclic_group(1).unwrap();
        let fs2 = free_semilattice(2).unwrap();
        let action = EndomorphismAction::new(one, fs2.clone(), vec![vec![0, 1, 2]]).unwrap();
        assert!(action.validate().ok);
        let p = LambdaProduct::build(action).unwrap();
        assert_eq!(p.size(), 3);
        assert!(are_isomorphic(p.product(), &fs2).unwrap());
    }

    #[test]
    fn universe_drops_pairs_moved_by_their_idempotent() {
        // Every Brandt element acts as the endomorphism collapsing the
        // semilattice onto {1,2}; only pairs with α = {1,2} survive, and
        // the product is Brandt again.
        let b2 = brandt_b2();
        let fs2 = free_semilattice(2).unwrap();
        let act = vec![vec![2, 2, 2]; 5];
        let action = EndomorphismAction::new(b2.clone(), fs2, act).unwrap();
        assert!(action.validate().ok);
        let p = LambdaProduct::build(action).unwrap();
        assert_eq!(p.size(), 5);
        assert!(p.pairs().iter().all(|&(alpha, _)| alpha == 2));
        assert!(!p.pairs().contains(&(0, 0)));
        assert!(are_isomorphic(p.product(), &b2).unwrap());
    }

    #[test]
    fn one_generated_subsemigroups_of_a_semilattice_product_are_trivial() {
        let one = cyclic_group(1).unwrap();
        let fs3 = free_semilattice(3).unwrap();
        let rows = vec![(0..fs3.size()).collect::<Vec<_>>()];
        let p = LambdaProduct::build(
            EndomorphismAction::new(one, fs3, rows).unwrap(),
        )
        .unwrap();
        let r =
            check_local_finiteness_bound(&p, SizeBound::FreeSemilattice, 50, 1, DEFAULT_SEED)
                .unwrap();
        assert!(r.ok);
        assert_eq!(r.samples.len(), 1);
        assert_eq!(r.samples[0].bound, Some(1));
        assert_eq!(r.samples[0].max_observed, 1);
        assert!(r.samples[0].exhaustive);
        assert_eq!(r.samples[0].subsets_checked, 7);
        assert_eq!(r.max_ratio, 1.0);
    }

    #[test]
    fn swap_product_bounds_are_exhaustive_for_small_m() {
        let p = LambdaProduct::build(z2_swap_action()).unwrap();
        let r =
            check_local_finiteness_bound(&p, SizeBound::FreeSemilattice, 50, 2, DEFAULT_SEED)
                .unwrap();
        assert!(r.ok);
        // m = 1: bound 2·σ(2) = 6 over the 6 singletons; the largest cyclic
        // closure is {({1},g), ({1,2},e), ({1,2},g)}.
        assert_eq!(r.samples[0].bound, Some(6));
        assert!(r.samples[0].exhaustive);
        assert_eq!(r.samples[0].subsets_checked, 6);
        assert_eq!(r.samples[0].max_observed, 3);
        // m = 2: bound 2·σ(4) = 30 over the 15 pairs; two generators can
        // already reach the whole product.
        assert_eq!(r.samples[1].bound, Some(30));
        assert!(r.samples[1].exhaustive);
        assert_eq!(r.samples[1].subsets_checked, 15);
        assert_eq!(r.samples[1].max_observed, 6);
        assert_eq!(r.max_ratio, 0.5);
    }

    #[test]
    fn sampling_kicks_in_when_subsets_outnumber_trials() {
        let p = LambdaProduct::build(z2_swap_action()).unwrap();
        let r = check_local_finiteness_bound(&p, SizeBound::FreeSemilattice, 5, 2, 11).unwrap();
        assert!(!r.samples[1].exhaustive);
        assert_eq!(r.samples[1].subsets_checked, 5);
        assert!(r.samples[1].max_observed <= 6);
        // Same seed, same report.
        let again =
            check_local_finiteness_bound(&p, SizeBound::FreeSemilattice, 5, 2, 11).unwrap();
        assert_eq!(r.samples[1].max_observed, again.samples[1].max_observed);
    }

    #[test]
    fn an_invalid_size_function_is_rejected() {
        let p = LambdaProduct::build(z2_swap_action()).unwrap();
        let err =
            check_local_finiteness_bound(&p, SizeBound::Constant(1), 50, 2, DEFAULT_SEED)
                .unwrap_err();
        assert!(matches!(err, Error::Rejected(_)));
        // The target's own size is always a valid constant.
        assert!(check_local_finiteness_bound(
            &p,
            SizeBound::Constant(3),
            50,
            2,
            DEFAULT_SEED
        )
        .is_ok());
    }

    #[test]
    fn bound_formula_matches_hand_values() {
        assert_eq!(billhardt_bound(1, 3).unwrap(), 7);
        assert_eq!(billhardt_bound(1, 1).unwrap(), 1);
        assert_eq!(billhardt_bound(2, 1).unwrap(), 6);
        assert!(billhardt_bound(63, 1).is_err());
        assert!(billhardt_bound(0, 1).is_err());
    }

    #[test]
    fn corollary_comparison_shortcuts_large_exponents() {
        assert!(corollary_bound_holds(1546, 34, 34));
        assert!(corollary_bound_holds(usize::MAX, 2, 32));
        assert!(corollary_bound_holds(7, 1, 3));
        assert!(!corollary_bound_holds(8, 1, 3));
    }
}
