//! The fixed family of small inverse semigroups exercised by every
//! verification suite, plus the two λ-products built over it.

use crate::lambda::{EndomorphismAction, LambdaProduct};
use crate::semigroup::{
    brandt_b2, cyclic_group, free_semilattice, symmetric_inverse_monoid,
    FiniteInverseSemigroup,
};

pub struct CorpusMember {
    pub name: &'static str,
    pub semigroup: FiniteInverseSemigroup,
    /// Carries an identity, so the empty-word reading of the idempotent
    /// problem applies too.
    pub monoid_capable: bool,
}

fn member(name: &'static str, semigroup: FiniteInverseSemigroup) -> CorpusMember {
    let monoid_capable = semigroup.identity().is_some();
    CorpusMember {
        name,
        semigroup,
        monoid_capable,
    }
}

/// Z₂ acting on the rank-2 free semilattice by swapping the two
/// generators; the identity element (discovery index 1) acts identically.
pub fn swap_action() -> EndomorphismAction {
    EndomorphismAction::new(
        cyclic_group(2).unwrap(),
        free_semilattice(2).unwrap(),
        vec![vec![1, 0, 2], vec![0, 1, 2]],
    )
    .unwrap()
}

pub fn swap_product() -> LambdaProduct {
    LambdaProduct::build(swap_action()).unwrap()
}

/// The one-element group acting (necessarily trivially) on the rank-2
/// free semilattice.
pub fn trivial_action() -> EndomorphismAction {
    EndomorphismAction::new(
        cyclic_group(1).unwrap(),
        free_semilattice(2).unwrap(),
        vec![vec![0, 1, 2]],
    )
    .unwrap()
}

pub fn trivial_product() -> LambdaProduct {
    LambdaProduct::build(trivial_action()).unwrap()
}

pub fn lambda_corpus() -> Vec<(&'static str, LambdaProduct)> {
    vec![
        ("lambda-trivial", trivial_product()),
        ("lambda-swap", swap_product()),
    ]
}

/// All twelve members, in a fixed order the reports rely on.
pub fn corpus() -> Vec<CorpusMember> {
    vec![
        member("symmetric-inverse-1", symmetric_inverse_monoid(1).unwrap()),
        member("symmetric-inverse-2", symmetric_inverse_monoid(2).unwrap()),
        member("symmetric-inverse-3", symmetric_inverse_monoid(3).unwrap()),
        member("brandt", brandt_b2()),
        member("cyclic-2", cyclic_group(2).unwrap()),
        member("cyclic-4", cyclic_group(4).unwrap()),
        member("semilattice-1", free_semilattice(1).unwrap()),
        member("semilattice-2", free_semilattice(2).unwrap()),
        member("semilattice-3", free_semilattice(3).unwrap()),
        member("semilattice-4", free_semilattice(4).unwrap()),
        member("lambda-trivial", trivial_product().into_product()),
        member("lambda-swap", swap_product().into_product()),
    ]
}
