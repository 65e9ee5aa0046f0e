//! Command-line front end: parse input documents, run constructions and
//! verification reports, export DFAs as JSON or DOT.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks::{
    e_unitary_corollary, finiteness_bound_chain, generator_invariance, syntactic_projection,
};
use crate::dfa::Dfa;
use crate::io::{parse_input, InputDocument};
use crate::lambda::{
    billhardt_bound, check_local_finiteness_bound, LambdaProduct, SizeBound, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
use crate::semigroup::FiniteInverseSemigroup;
use crate::syntactic::idempotent_problem_dfa;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "preston",
    version,
    about = "Finite inverse semigroups, their idempotent-problem languages, and λ-semidirect products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    /// Verify the element-to-syntactic-class projection (W/S/P/K).
    Lemma,
    /// E-unitary iff the idempotent problem is a group language.
    EUnitary,
    /// The syntactic semigroup is invariant under the generating set.
    Generators,
    /// Size bounds: the corollary chain, or the λ generation bound for
    /// action documents.
    Bound,
    /// Recognizability with |S|+1 states plus the corollary chain.
    Main,
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Input document path; `-` or absent reads standard input.
    pub input: Option<PathBuf>,
    /// Read the idempotent problem over Σ* instead of Σ⁺.
    #[arg(long)]
    pub monoid: bool,
    /// Seed for sampled checks.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Cap on closure sizes.
    #[arg(long)]
    pub max_closure: Option<usize>,
    /// Sample budget for the λ generation-bound check.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build the semigroup described by the input and print it.
    Closure(CommonOpts),
    /// Emit the idempotent-problem DFA.
    IdemDfa {
        #[command(flatten)]
        opts: CommonOpts,
        /// Minimize before emitting.
        #[arg(long)]
        minimize: bool,
    },
    /// Emit the syntactic monoid of the idempotent problem.
    Syntactic(CommonOpts),
    /// Run a verification report.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[command(flatten)]
        opts: CommonOpts,
        /// Second generating set for `check generators` (element indices;
        /// defaults to every element).
        #[arg(long, value_delimiter = ',')]
        alt_generators: Option<Vec<usize>>,
    },
    /// Build a λ-semidirect product from an action document.
    Lambda(CommonOpts),
    /// Print n(2^(k·n) − 1).
    Bound { n: u64, k: u64 },
    /// Run every check across the built-in corpus and print the report.
    Suite {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Rejected(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Rejected(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Rejected(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

struct Session {
    doc: InputDocument,
    monoid: bool,
    seed: u64,
    trials: usize,
    max_closure: Option<usize>,
}

impl Session {
    fn open(opts: &CommonOpts) -> Result<Session> {
        let doc = parse_input(&read_input(&opts.input)?)?;
        let flags = doc.flags().clone();
        Ok(Session {
            doc,
            monoid: opts.monoid || flags.monoid,
            seed: opts.seed.or(flags.seed).unwrap_or(DEFAULT_SEED),
            trials: opts.trials.or(flags.trials).unwrap_or(DEFAULT_TRIALS),
            max_closure: opts.max_closure.or(flags.max_closure),
        })
    }

    fn semigroup(&self) -> Result<FiniteInverseSemigroup> {
        self.doc.build_semigroup(self.max_closure)
    }

    fn lambda_product(&self) -> Result<LambdaProduct> {
        LambdaProduct::build(self.doc.build_action(self.max_closure)?)
    }
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct ElementDoc {
    index: usize,
    name: String,
    inverse: usize,
    idempotent: bool,
    witness: Vec<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct ClosureDoc {
    size: usize,
    idempotents: usize,
    identity: Option<usize>,
    generators: Vec<usize>,
    elements: Vec<ElementDoc>,
    table: Vec<Vec<usize>>,
}

fn closure_doc(s: &FiniteInverseSemigroup) -> ClosureDoc {
    ClosureDoc {
        size: s.size(),
        idempotents: s.idempotents().len(),
        identity: s.identity(),
        generators: s.generators().to_vec(),
        elements: (0..s.size())
            .map(|x| ElementDoc {
                index: x,
                name: s.name(x).to_string(),
                inverse: s.inverse(x),
                idempotent: s.is_idempotent(x),
                witness: s.witness_word(x).to_vec(),
            })
            .collect(),
        table: s.table_rows(),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct DfaDoc {
    states: usize,
    alphabet: usize,
    start: usize,
    accepting: Vec<bool>,
    transition: Vec<Vec<usize>>,
}

fn dfa_doc(d: &Dfa) -> DfaDoc {
    DfaDoc {
        states: d.states(),
        alphabet: d.alphabet(),
        start: d.start(),
        accepting: (0..d.states()).map(|q| d.is_accepting(q)).collect(),
        transition: (0..d.states())
            .map(|q| (0..d.alphabet()).map(|a| d.step(q, a)).collect())
            .collect(),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct SyntacticDoc {
    monoid_size: usize,
    semigroup_part_size: usize,
    dichotomy: crate::syntactic::Dichotomy,
    identity: usize,
    letter_image: Vec<usize>,
    in_semigroup_part: Vec<bool>,
    idempotent: Vec<bool>,
    group_language: bool,
    semigroup_part_is_group: bool,
    witnesses: Vec<Vec<usize>>,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct LambdaDoc {
    actor_size: usize,
    target_size: usize,
    product_size: usize,
    pairs: Vec<(usize, usize)>,
    product: ClosureDoc,
}

/// Pick a size function the target provably satisfies: the free-semilattice
/// count when every element is idempotent, its own cardinality otherwise.
fn auto_sigma(target: &FiniteInverseSemigroup) -> SizeBound {
    if (0..target.size()).all(|x| target.is_idempotent(x)) {
        SizeBound::FreeSemilattice
    } else {
        SizeBound::Constant(target.size() as u64)
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Closure(opts) => {
            let session = Session::open(&opts)?;
            if opts.format == Format::Dot {
                return Err(Error::Rejected(
                    "DOT export applies to DFAs; use idem-dfa --format dot".into(),
                ));
            }
            let s = session.semigroup()?;
            emit(&opts.output, &json(&closure_doc(&s)))
        }
        Command::IdemDfa { opts, minimize } => {
            let session = Session::open(&opts)?;
            let s = session.semigroup()?;
            let mut d = idempotent_problem_dfa(&s, session.monoid)?;
            if minimize {
                d = d.minimized();
            }
            match opts.format {
                Format::Json => emit(&opts.output, &json(&dfa_doc(&d))),
                Format::Dot => {
                    let letters: Vec<String> = s
                        .generators()
                        .iter()
                        .map(|&g| s.name(g).to_string())
                        .collect();
                    emit(&opts.output, &d.to_dot(Some(&letters)))
                }
            }
        }
        Command::Syntactic(opts) => {
            let session = Session::open(&opts)?;
            if opts.format == Format::Dot {
                return Err(Error::Rejected(
                    "DOT export applies to DFAs; use idem-dfa --format dot".into(),
                ));
            }
            let s = session.semigroup()?;
            let projection = syntactic_projection(&s, session.monoid)?;
            let a = &projection.algebra;
            let n = a.size();
            let doc = SyntacticDoc {
                monoid_size: n,
                semigroup_part_size: a.semigroup_size(),
                dichotomy: a.dichotomy(),
                identity: a.identity(),
                letter_image: a.letter_images().to_vec(),
                in_semigroup_part: (0..n).map(|m| a.in_semigroup_part(m)).collect(),
                idempotent: (0..n).map(|m| a.is_idempotent(m)).collect(),
                group_language: a.is_group_language(),
                semigroup_part_is_group: a.semigroup_part_is_group(),
                witnesses: (0..n).map(|m| a.witness_word(m).to_vec()).collect(),
                table: (0..n)
                    .map(|x| (0..n).map(|y| a.mul(x, y)).collect())
                    .collect(),
            };
            emit(&opts.output, &json(&doc))
        }
        Command::Check {
            what,
            opts,
            alt_generators,
        } => {
            let session = Session::open(&opts)?;
            let report = match what {
                CheckKind::Lemma => {
                    json(&syntactic_projection(&session.semigroup()?, session.monoid)?.report)
                }
                CheckKind::EUnitary => {
                    json(&e_unitary_corollary(&session.semigroup()?, session.monoid)?)
                }
                CheckKind::Generators => {
                    let s = session.semigroup()?;
                    let primary = s.generators().to_vec();
                    let alternative =
                        alt_generators.unwrap_or_else(|| (0..s.size()).collect());
                    json(&generator_invariance(
                        &s,
                        &primary,
                        &alternative,
                        session.monoid,
                    )?)
                }
                CheckKind::Bound => {
                    if session.doc.is_action() {
                        let p = session.lambda_product()?;
                        let sigma = auto_sigma(p.action().target());
                        json(&check_local_finiteness_bound(
                            &p,
                            sigma,
                            session.trials,
                            2,
                            session.seed,
                        )?)
                    } else {
                        json(&finiteness_bound_chain(
                            &session.semigroup()?,
                            session.monoid,
                        )?)
                    }
                }
                CheckKind::Main => {
                    json(&finiteness_bound_chain(&session.semigroup()?, session.monoid)?)
                }
            };
            emit(&opts.output, &report)
        }
        Command::Lambda(opts) => {
            let session = Session::open(&opts)?;
            if opts.format == Format::Dot {
                return Err(Error::Rejected(
                    "DOT export applies to DFAs; use idem-dfa --format dot".into(),
                ));
            }
            let p = session.lambda_product()?;
            let doc = LambdaDoc {
                actor_size: p.action().actor().size(),
                target_size: p.action().target().size(),
                product_size: p.size(),
                pairs: p.pairs().to_vec(),
                product: closure_doc(p.product()),
            };
            emit(&opts.output, &json(&doc))
        }
        Command::Bound { n, k } => {
            println!("{}", billhardt_bound(n, k)?);
            Ok(())
        }
        Command::Suite { seed, output } => {
            let report = crate::suite::run(seed.unwrap_or(DEFAULT_SEED))?;
            emit(&output, &report.to_json())
        }
    }
}
