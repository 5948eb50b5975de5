//! Command-line front end: argument model, dispatch and report rendering.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blade::Signature;
use crate::error::{Error, Result};
use crate::ideals::{
    ascending_chain, classify, descending_chain, jacobson_radical, nil_radical, prime_ideals,
    Ideal, IdealRecord, Verdict,
};
use crate::multivector::{integer, Multivector};
use crate::parse::{parse_expression, parse_signature, ParsedSignature};
use crate::structure::{classify_pq, volume_element, AlgebraClass};

#[derive(Debug, Parser)]
#[command(
    name = "cliffideal",
    version,
    about = "Ideal structure of Clifford algebras C(p,q,z)"
)]
pub struct Cli {
    /// Signature as `p,q,z` or a role string such as `++-0`.
    #[arg(short = 's', long = "signature", global = true)]
    pub signature: Option<String>,

    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Simple/split class, volume element, central idempotents.
    SignatureInfo,
    /// Evaluate an expression to canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Operations on the ideal generated by a list of elements.
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// The prime (equivalently maximal) ideals.
    Primes,
    /// The nil radical, its grading and a quasi-regularity spot check.
    Radical {
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
    /// Strict ideal chains built from the null generators.
    Chains {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ascending: bool,
        #[arg(long)]
        descending: bool,
    },
    /// Nilpotency index of a generated ideal and of each generator.
    Nilpotency(GensArg),
    /// Null supports and a finite generating set of a radical ideal.
    Support(GensArg),
}

#[derive(Debug, Subcommand)]
pub enum IdealAction {
    Classify(GensArg),
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Generators separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub gens: String,
}

/// A validated command ready for dispatch.
#[derive(Clone, Debug)]
pub struct Command {
    pub signature: ParsedSignature,
    pub seed: u64,
    pub kind: CommandKind,
}

#[derive(Clone, Debug)]
pub enum CommandKind {
    SignatureInfo,
    Eval(Multivector),
    IdealClassify(Vec<Multivector>),
    Primes,
    Radical {
        samples: usize,
    },
    Chains {
        k: usize,
        ascending: bool,
        descending: bool,
    },
    Nilpotency(Vec<Multivector>),
    Support(Vec<Multivector>),
}

fn parse_gens(sig: &Signature, text: &str) -> Result<Vec<Multivector>> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_expression(sig, t))
        .collect()
}

impl Command {
    pub fn from_cli(cli: &Cli) -> Result<Command> {
        let text = cli
            .signature
            .as_deref()
            .ok_or_else(|| Error::domain("a signature is required (-s/--signature)"))?;
        let signature = parse_signature(text)?;
        let sig = signature.sig;
        let kind = match &cli.verb {
            Verb::SignatureInfo => CommandKind::SignatureInfo,
            Verb::Eval { expr } => CommandKind::Eval(parse_expression(&sig, expr)?),
            Verb::Ideal {
                action: IdealAction::Classify(g),
            } => CommandKind::IdealClassify(parse_gens(&sig, &g.gens)?),
            Verb::Primes => CommandKind::Primes,
            Verb::Radical { samples } => CommandKind::Radical { samples: *samples },
            Verb::Chains {
                k,
                ascending,
                descending,
            } => {
                let both = !ascending && !descending;
                CommandKind::Chains {
                    k: *k,
                    ascending: *ascending || both,
                    descending: *descending || both,
                }
            }
            Verb::Nilpotency(g) => CommandKind::Nilpotency(parse_gens(&sig, &g.gens)?),
            Verb::Support(g) => CommandKind::Support(parse_gens(&sig, &g.gens)?),
        };
        Ok(Command {
            signature,
            seed: cli.seed,
            kind,
        })
    }

    /// Canonical echo of the command, with expressions in canonical form.
    pub fn echo(&self) -> String {
        let gens = |g: &[Multivector]| {
            g.iter()
                .map(|u| u.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        match &self.kind {
            CommandKind::SignatureInfo => "signature-info".into(),
            CommandKind::Eval(u) => format!("eval {u}"),
            CommandKind::IdealClassify(g) => format!("ideal classify --gens {}", gens(g)),
            CommandKind::Primes => "primes".into(),
            CommandKind::Radical { samples } => {
                format!("radical --samples {samples} --seed {}", self.seed)
            }
            CommandKind::Chains {
                k,
                ascending,
                descending,
            } => {
                let mut s = format!("chains --k {k}");
                if *ascending {
                    s.push_str(" --ascending");
                }
                if *descending {
                    s.push_str(" --descending");
                }
                s
            }
            CommandKind::Nilpotency(g) => format!("nilpotency --gens {}", gens(g)),
            CommandKind::Support(g) => format!("support --gens {}", gens(g)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignatureEcho {
    pub text: String,
    pub p: usize,
    pub q: usize,
    pub z: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relabel: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainLink {
    pub generators: Vec<String>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    SignatureInfo {
        dim: usize,
        squares: Vec<i8>,
        class: String,
        pq_mod_8: usize,
        volume_element: String,
        idempotents: Option<Vec<String>>,
        radical_dim: usize,
    },
    Eval {
        value: String,
        body: String,
        radical: String,
        null_support: Vec<usize>,
        nilpotency_index: Option<usize>,
    },
    IdealClassify {
        generators: Vec<String>,
        verdict: Verdict,
        ideal: IdealRecord,
        radical_intersection: IdealRecord,
    },
    Primes {
        class: String,
        primes: Vec<IdealRecord>,
    },
    Radical {
        nil_radical: IdealRecord,
        generators: Vec<String>,
        grade_dims: Vec<usize>,
        jacobson_equals_nil: bool,
        quasi_regular_samples: usize,
        quasi_regular_passed: usize,
    },
    Chains {
        descending: Option<Vec<ChainLink>>,
        ascending: Option<Vec<ChainLink>>,
    },
    Nilpotency {
        generators: Vec<String>,
        ideal_dim: usize,
        index: Option<usize>,
        element_indices: Vec<Option<usize>>,
    },
    Support {
        generators: Vec<String>,
        ideal_dim: usize,
        element_supports: Vec<Vec<usize>>,
        canonical: Vec<usize>,
        minimal: Vec<usize>,
        witness: Vec<String>,
    },
}

/// Top-level report; the JSON keys are exactly these four fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub signature: SignatureEcho,
    pub result: Outcome,
    pub elapsed_ms: f64,
}

fn strings(v: &[Multivector]) -> Vec<String> {
    v.iter().map(|u| u.to_string()).collect()
}

fn random_radical_element(
    rng: &mut ChaCha8Rng,
    radical: &[Multivector],
    sig: Signature,
) -> Multivector {
    let mut x = Multivector::zero(sig);
    if radical.is_empty() {
        return x;
    }
    for _ in 0..rng.gen_range(1..=4) {
        let b = &radical[rng.gen_range(0..radical.len())];
        x = &x + &b.scale(&integer(rng.gen_range(-3..=3)));
    }
    x
}

fn outcome(command: &Command) -> Result<Outcome> {
    let sig = command.signature.sig;
    Ok(match &command.kind {
        CommandKind::SignatureInfo => {
            let class = classify_pq(&sig)?;
            let idempotents = match &class {
                AlgebraClass::Simple => None,
                AlgebraClass::Split { e1, e2 } => Some(vec![e1.to_string(), e2.to_string()]),
            };
            Outcome::SignatureInfo {
                dim: sig.dim(),
                squares: (0..sig.generators())
                    .map(|i| sig.role(i).map(|r| r.square()))
                    .collect::<Result<_>>()?,
                class: class.name().into(),
                pq_mod_8: sig.pq_residue(),
                volume_element: volume_element(&sig).to_string(),
                idempotents,
                radical_dim: sig.body_dim() * ((1usize << sig.z()) - 1),
            }
        }
        CommandKind::Eval(u) => {
            let (body, radical) = u.radical_split();
            Outcome::Eval {
                value: u.to_string(),
                body: body.to_string(),
                radical: radical.to_string(),
                null_support: u.null_support().into_iter().collect(),
                nilpotency_index: u.nilpotency_index().index(),
            }
        }
        CommandKind::IdealClassify(gens) => {
            let ideal = Ideal::generated_by(sig, gens)?;
            let report = classify(&ideal)?;
            Outcome::IdealClassify {
                generators: strings(gens),
                verdict: report.verdict,
                ideal: ideal.to_record(),
                radical_intersection: report.radical_intersection.to_record(),
            }
        }
        CommandKind::Primes => Outcome::Primes {
            class: classify_pq(&sig)?.name().into(),
            primes: prime_ideals(sig)?.iter().map(Ideal::to_record).collect(),
        },
        CommandKind::Radical { samples } => {
            let radical = nil_radical(sig)?;
            let basis = radical.basis();
            let mut rng = ChaCha8Rng::seed_from_u64(command.seed);
            let one = Multivector::one(sig);
            let mut passed = 0;
            for _ in 0..*samples {
                let u = &one + &random_radical_element(&mut rng, &basis, sig);
                let v = u.invert_unipotent()?;
                if (&u * &v).is_one() && (&v * &u).is_one() {
                    passed += 1;
                }
            }
            let grade_dims = (1..=sig.z())
                .map(|i| {
                    basis
                        .iter()
                        .filter(|b| {
                            b.radical_grade_component(i)
                                .map(|c| !c.is_zero())
                                .unwrap_or(false)
                        })
                        .count()
                })
                .collect();
            Outcome::Radical {
                nil_radical: radical.to_record(),
                generators: sig.null_indices().map(|i| format!("e{i}")).collect(),
                grade_dims,
                jacobson_equals_nil: jacobson_radical(sig)? == radical,
                quasi_regular_samples: *samples,
                quasi_regular_passed: passed,
            }
        }
        CommandKind::Chains {
            k,
            ascending,
            descending,
        } => {
            let nulls: Vec<usize> = sig.null_indices().collect();
            let link = |gens: Vec<String>, ideal: &Ideal| ChainLink {
                generators: gens,
                dim: ideal.dim(),
            };
            let desc = if *descending {
                let chain = descending_chain(sig, *k)?;
                Some(
                    chain
                        .iter()
                        .enumerate()
                        .map(|(i, ideal)| {
                            let blade = nulls[..=i]
                                .iter()
                                .map(|n| format!("e{n}"))
                                .collect::<Vec<_>>()
                                .join("*");
                            link(vec![blade], ideal)
                        })
                        .collect(),
                )
            } else {
                None
            };
            let asc = if *ascending {
                let chain = ascending_chain(sig, *k)?;
                Some(
                    chain
                        .iter()
                        .enumerate()
                        .map(|(i, ideal)| {
                            link(nulls[..=i].iter().map(|n| format!("e{n}")).collect(), ideal)
                        })
                        .collect(),
                )
            } else {
                None
            };
            Outcome::Chains {
                descending: desc,
                ascending: asc,
            }
        }
        CommandKind::Nilpotency(gens) => {
            let ideal = Ideal::generated_by(sig, gens)?;
            Outcome::Nilpotency {
                generators: strings(gens),
                ideal_dim: ideal.dim(),
                index: ideal.nilpotency_index()?.index(),
                element_indices: gens.iter().map(|g| g.nilpotency_index().index()).collect(),
            }
        }
        CommandKind::Support(gens) => {
            let ideal = Ideal::generated_by(sig, gens)?;
            let support = ideal.null_support()?;
            Outcome::Support {
                generators: strings(gens),
                ideal_dim: ideal.dim(),
                element_supports: gens
                    .iter()
                    .map(|g| g.null_support().into_iter().collect())
                    .collect(),
                canonical: support.canonical.into_iter().collect(),
                minimal: support.minimal.into_iter().collect(),
                witness: strings(&ideal.generating_witness()?),
            }
        }
    })
}

pub fn run(command: &Command) -> Result<Report> {
    let start = Instant::now();
    let result = outcome(command)?;
    let sig = command.signature.sig;
    Ok(Report {
        command: command.echo(),
        signature: SignatureEcho {
            text: sig.to_string(),
            p: sig.p(),
            q: sig.q(),
            z: sig.z(),
            relabel: command.signature.relabel.clone(),
        },
        result,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn fmt_set(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|i| format!("e{i}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn fmt_index(n: Option<usize>) -> String {
    n.map_or_else(|| "not nilpotent".to_string(), |n| n.to_string())
}

fn write_ideal(out: &mut String, label: &str, record: &IdealRecord) {
    let _ = writeln!(out, "{label}: dim {}", record.dim);
    for b in &record.basis {
        let _ = writeln!(out, "  {b}");
    }
}

/// Human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let s = &report.signature;
    let _ = writeln!(out, "C({},{},{})", s.p, s.q, s.z);
    if let Some(relabel) = &s.relabel {
        let map: Vec<String> = relabel
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{i}->e{c}"))
            .collect();
        let _ = writeln!(out, "relabel: {}", map.join(" "));
    }
    match &report.result {
        Outcome::SignatureInfo {
            dim,
            squares,
            class,
            pq_mod_8,
            volume_element,
            idempotents,
            radical_dim,
        } => {
            let sq: Vec<String> = squares
                .iter()
                .enumerate()
                .map(|(i, x)| format!("e{i}^2={x}"))
                .collect();
            let _ = writeln!(out, "generators: {}", sq.join(" "));
            let _ = writeln!(out, "dimension: {dim}");
            let _ = writeln!(out, "class: {class} ((p - q) mod 8 = {pq_mod_8})");
            let _ = writeln!(out, "volume element: {volume_element}");
            if let Some(pair) = idempotents {
                for (i, e) in pair.iter().enumerate() {
                    let _ = writeln!(out, "central idempotent {}: {e}", i + 1);
                }
            }
            let _ = writeln!(out, "nil radical dimension: {radical_dim}");
        }
        Outcome::Eval {
            value,
            body,
            radical,
            null_support,
            nilpotency_index,
        } => {
            let _ = writeln!(out, "{value}");
            let _ = writeln!(out, "body: {body}");
            let _ = writeln!(out, "radical: {radical}");
            let _ = writeln!(out, "null support: {}", fmt_set(null_support));
            let _ = writeln!(out, "nilpotency index: {}", fmt_index(*nilpotency_index));
        }
        Outcome::IdealClassify {
            generators,
            verdict,
            ideal,
            radical_intersection,
        } => {
            let _ = writeln!(out, "generators: {}", generators.join("; "));
            let _ = writeln!(out, "verdict: {verdict}");
            write_ideal(&mut out, "ideal", ideal);
            write_ideal(&mut out, "ideal ∩ radical", radical_intersection);
        }
        Outcome::Primes { class, primes } => {
            let _ = writeln!(out, "class: {class}");
            let _ = writeln!(out, "prime ideals: {}", primes.len());
            for (i, p) in primes.iter().enumerate() {
                write_ideal(&mut out, &format!("prime {}", i + 1), p);
            }
        }
        Outcome::Radical {
            nil_radical,
            generators,
            grade_dims,
            jacobson_equals_nil,
            quasi_regular_samples,
            quasi_regular_passed,
        } => {
            let _ = writeln!(out, "generated by: {}", generators.join(", "));
            write_ideal(&mut out, "nil radical", nil_radical);
            let dims: Vec<String> = grade_dims
                .iter()
                .enumerate()
                .map(|(i, d)| format!("R{}={d}", i + 1))
                .collect();
            let _ = writeln!(out, "grading: {}", dims.join(" "));
            let _ = writeln!(
                out,
                "jacobson radical equals nil radical: {jacobson_equals_nil}"
            );
            let _ = writeln!(
                out,
                "1 + x invertible: {quasi_regular_passed}/{quasi_regular_samples} samples"
            );
        }
        Outcome::Chains {
            descending,
            ascending,
        } => {
            for (label, chain) in [("descending", descending), ("ascending", ascending)] {
                if let Some(chain) = chain {
                    let _ = writeln!(out, "{label}:");
                    for link in chain {
                        let _ =
                            writeln!(out, "  ({}) dim {}", link.generators.join(", "), link.dim);
                    }
                }
            }
        }
        Outcome::Nilpotency {
            generators,
            ideal_dim,
            index,
            element_indices,
        } => {
            let _ = writeln!(out, "ideal dim: {ideal_dim}");
            let _ = writeln!(out, "ideal nilpotency index: {}", fmt_index(*index));
            for (g, n) in generators.iter().zip(element_indices) {
                let _ = writeln!(out, "  {g}: {}", fmt_index(*n));
            }
        }
        Outcome::Support {
            generators,
            ideal_dim,
            element_supports,
            canonical,
            minimal,
            witness,
        } => {
            let _ = writeln!(out, "ideal dim: {ideal_dim}");
            for (g, s) in generators.iter().zip(element_supports) {
                let _ = writeln!(out, "  N({g}) = {}", fmt_set(s));
            }
            let _ = writeln!(out, "canonical support: {}", fmt_set(canonical));
            let _ = writeln!(out, "minimal support: {}", fmt_set(minimal));
            let _ = writeln!(out, "generated by: {}", witness.join("; "));
        }
    }
    out
}

/// Parses arguments, runs the command and renders it. Errors come back as
/// `(exit code, message)`: 2 for usage problems, 1 for everything else.
pub fn execute<I, T>(args: I) -> std::result::Result<String, (i32, String)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        let code = if e.use_stderr() { 2 } else { 0 };
        (code, e.to_string())
    })?;
    let command = Command::from_cli(&cli).map_err(|e| (2, format!("error: {e}")))?;
    let report = run(&command).map_err(|e| (1, format!("error: {e}")))?;
    if cli.json {
        serde_json::to_string_pretty(&report)
            .map(|s| s + "\n")
            .map_err(|e| (1, format!("error: {e}")))
    } else {
        Ok(render_text(&report))
    }
}
