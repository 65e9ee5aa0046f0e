//! The JSON wire format: documents describing semigroups (by partial
//! bijection generators or an explicit table) and actions, with optional
//! run flags carried inline.

use serde::{Deserialize, Serialize};

use crate::lambda::EndomorphismAction;
use crate::pbij::PartialBijection;
use crate::semigroup::{FiniteInverseSemigroup, DEFAULT_CLOSURE_CAP};
use crate::{Error, Result};

fn is_false(b: &bool) -> bool {
    !*b
}

/// Optional per-document flags; command-line flags override them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct DocFlags {
    /// Read the idempotent problem over Σ* instead of Σ⁺.
    #[serde(default, skip_serializing_if = "is_false")]
    pub monoid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_closure: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
}

/// One parsed input document. `null` encodes an undefined image in a
/// partial bijection row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InputDocument {
    PartialBijectionGenerators {
        degree: usize,
        generators: Vec<Vec<Option<usize>>>,
        #[serde(flatten)]
        flags: DocFlags,
    },
    MultiplicationTable {
        size: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<usize>>,
        #[serde(flatten)]
        flags: DocFlags,
    },
    Action {
        actor: Box<InputDocument>,
        target: Box<InputDocument>,
        act: Vec<Vec<usize>>,
        #[serde(flatten)]
        flags: DocFlags,
    },
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| {
        Error::Rejected(format!(
            "parse error at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

impl InputDocument {
    pub fn print(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    pub fn flags(&self) -> &DocFlags {
        match self {
            InputDocument::PartialBijectionGenerators { flags, .. }
            | InputDocument::MultiplicationTable { flags, .. }
            | InputDocument::Action { flags, .. } => flags,
        }
    }

    pub fn is_action(&self) -> bool {
        matches!(self, InputDocument::Action { .. })
    }

    /// Realize a semigroup document; the closure cap honors the document
    /// flag unless `cap_override` is given.
    pub fn build_semigroup(
        &self,
        cap_override: Option<usize>,
    ) -> Result<FiniteInverseSemigroup> {
        match self {
            InputDocument::PartialBijectionGenerators {
                degree,
                generators,
                flags,
            } => {
                let gens = generators
                    .iter()
                    .map(|row| PartialBijection::new(*degree, row.clone()))
                    .collect::<Result<Vec<_>>>()?;
                let cap = cap_override
                    .or(flags.max_closure)
                    .unwrap_or(DEFAULT_CLOSURE_CAP);
                FiniteInverseSemigroup::generate_with_cap(&gens, cap)
            }
            InputDocument::MultiplicationTable {
                size,
                table,
                names,
                generators,
                ..
            } => {
                if table.len() != *size {
                    return Err(Error::Rejected(format!(
                        "size field says {size} but the table has {} rows",
                        table.len()
                    )));
                }
                FiniteInverseSemigroup::from_table(
                    table.clone(),
                    names.clone(),
                    generators.clone(),
                )
            }
            InputDocument::Action { .. } => Err(Error::Rejected(
                "this document describes an action, not a semigroup".into(),
            )),
        }
    }

    /// Realize an action document; both operands must themselves be
    /// semigroup documents.
    pub fn build_action(&self, cap_override: Option<usize>) -> Result<EndomorphismAction> {
        match self {
            InputDocument::Action {
                actor,
                target,
                act,
                ..
            } => {
                let actor = actor.build_semigroup(cap_override)?;
                let target = target.build_semigroup(cap_override)?;
                EndomorphismAction::new(actor, target, act.clone())
            }
            _ => Err(Error::Rejected(
                "this document describes a semigroup, not an action".into(),
            )),
        }
    }
}
