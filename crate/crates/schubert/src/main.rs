//! Command-line surface over the library: weight tables, quotient
//! enumeration, quiver emission, classification, divisor cones, peeling and
//! the invariant suite. Output goes to stdout (or --out), diagnostics to
//! stderr. Exit codes: 0 ok, 1 input error, 2 internal invariant violation,
//! 3 verification failure.

use std::io::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use schubert::decomp;
use schubert::divisors::{self, BasisTag, ConeJson, DivisorClass};
use schubert::error::{Error, Result};
use schubert::quiver::MinusculeQuiver;
use schubert::rootsys::{RootSystemData, Variant};
use schubert::verify::{self, VerifyOptions};
use schubert::weyl;

#[derive(Parser)]
#[command(
    name = "schubert",
    about = "Exact quiver combinatorics of (co)minuscule Schubert varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Ascii,
    Table,
}

#[derive(Args)]
struct SystemArgs {
    /// Root-system type letter A..G (case-insensitive)
    #[arg(long = "type")]
    type_letter: String,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<Arc<RootSystemData>> {
        let spec = format!("{}{}", self.type_letter, self.rank);
        Ok(Arc::new(RootSystemData::from_spec(&spec)?))
    }
}

#[derive(Args)]
struct ElementArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Index of the fundamental weight
    #[arg(long)]
    weight: usize,
    /// minuscule or cominuscule
    #[arg(long)]
    variant: String,
}

impl ElementArgs {
    fn resolve(&self) -> Result<(Arc<RootSystemData>, usize, Variant)> {
        let rs = self.system.build()?;
        let variant = Variant::parse(&self.variant)?;
        Ok((rs, self.weight, variant))
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the minuscule and cominuscule fundamental weights
    Weights {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate the minimal coset representatives of a (co)minuscule weight
    Elements {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the quiver of a reduced word
    Quiver {
        #[command(flatten)]
        element: ElementArgs,
        /// Reduced word as comma-separated simple-root indices, e.g. 3,1,2,5,4,3
        #[arg(long)]
        word: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify the Q-factorializations and IH-small resolutions of an element
    Classify {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        word: String,
        /// Bound on the number of peaks (orderings grow factorially)
        #[arg(long, default_value_t = decomp::DEFAULT_PEAK_BOUND)]
        max_peaks: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the effective cone and the nef cones of the decompositions
    Cones {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        word: String,
        /// Restrict to one peak ordering, comma-separated peak vertices
        #[arg(long)]
        ordering: Option<String>,
        #[arg(long, default_value_t = decomp::DEFAULT_PEAK_BOUND)]
        max_peaks: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Peel an effective class into the nef cone of one decomposition
    Peel {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        word: String,
        /// Effective class in the peak basis, comma-separated rationals p/q
        #[arg(long)]
        class: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the aggregated invariant suite over a whole quotient
    Verify {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = weyl::DEFAULT_WORD_BOUND)]
        max_length: usize,
        #[arg(long, default_value_t = decomp::DEFAULT_PEAK_BOUND)]
        max_peaks: usize,
        /// Number of random effective classes peeled per element
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Serialize, Deserialize)]
struct WeightsJson {
    r#type: String,
    rank: usize,
    minuscule: Vec<usize>,
    cominuscule: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ElementsJson {
    r#type: String,
    rank: usize,
    weight: usize,
    variant: String,
    count: usize,
    words: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct NefConeJson {
    orderings: Vec<Vec<usize>>,
    parts: Vec<Vec<usize>>,
    cone: ConeJson,
}

#[derive(Serialize, Deserialize)]
struct ConesJson {
    word: Vec<usize>,
    effective: ConeJson,
    nef: Vec<NefConeJson>,
}

#[derive(Serialize, Deserialize)]
struct PeelStepJson {
    vertex: usize,
    mu: String,
}

#[derive(Serialize, Deserialize)]
struct PeelJson {
    word: Vec<usize>,
    peaks: Vec<usize>,
    class: Vec<String>,
    ordering: Vec<usize>,
    steps: Vec<PeelStepJson>,
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::invariant(format!("JSON serialization failed: {e}")))
}

fn unsupported(format: Format, command: &str) -> Error {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Ascii => "ascii",
        Format::Table => "table",
    };
    Error::input(format!("format '{name}' is not supported by '{command}'"))
}

fn build_quiver(element: &ElementArgs, word: &str) -> Result<MinusculeQuiver> {
    let (rs, weight, variant) = element.resolve()?;
    let word = weyl::parse_word(word)?;
    MinusculeQuiver::build(rs, &word, weight, variant)
}

fn run(command: &Command) -> Result<(String, i32)> {
    match command {
        Command::Weights { system, output } => {
            let rs = system.build()?;
            let minuscule = rs.minuscule_weights();
            let cominuscule = rs.cominuscule_weights();
            let text = match output.format {
                Format::Json => to_json(&WeightsJson {
                    r#type: rs.type_letter.to_string(),
                    rank: rs.rank,
                    minuscule,
                    cominuscule,
                })?,
                Format::Table => {
                    let fmt = |xs: &[usize]| {
                        if xs.is_empty() {
                            "none".to_string()
                        } else {
                            xs.iter()
                                .map(|x| format!("w{x}"))
                                .collect::<Vec<_>>()
                                .join(" ")
                        }
                    };
                    format!(
                        "{}{}\nminuscule:   {}\ncominuscule: {}\n",
                        rs.type_letter,
                        rs.rank,
                        fmt(&minuscule),
                        fmt(&cominuscule)
                    )
                }
                f => return Err(unsupported(f, "weights")),
            };
            Ok((text, 0))
        }
        Command::Elements { element, output } => {
            let (rs, weight, variant) = element.resolve()?;
            let words = weyl::enumerate_minuscule(&rs, weight, variant)?;
            let text = match output.format {
                Format::Json => to_json(&ElementsJson {
                    r#type: rs.type_letter.to_string(),
                    rank: rs.rank,
                    weight,
                    variant: variant.to_string(),
                    count: words.len(),
                    words,
                })?,
                Format::Table => {
                    let mut t = String::new();
                    for w in &words {
                        if w.is_empty() {
                            t.push_str("(identity)\n");
                        } else {
                            t.push_str(&weyl::word_to_string(w));
                            t.push('\n');
                        }
                    }
                    t
                }
                f => return Err(unsupported(f, "elements")),
            };
            Ok((text, 0))
        }
        Command::Quiver {
            element,
            word,
            output,
        } => {
            let q = build_quiver(element, word)?;
            let text = match output.format {
                Format::Json => to_json(&q.to_json())?,
                Format::Dot => q.to_dot(),
                Format::Ascii | Format::Table => q.to_ascii(),
            };
            Ok((text, 0))
        }
        Command::Classify {
            element,
            word,
            max_peaks,
            output,
        } => {
            let q = build_quiver(element, word)?;
            let report = decomp::classify(&q, *max_peaks)?;
            let text = match output.format {
                Format::Json => to_json(&report)?,
                Format::Table => {
                    let mut t = format!(
                        "word {}  peaks {:?}  holes {:?}\n",
                        weyl::word_to_string(&q.word),
                        q.peaks,
                        q.holes()
                    );
                    for d in &report.decompositions {
                        t.push_str(&format!(
                            "parts {:?}  neat={}  smooth={}  ih_small={}\n",
                            d.parts, d.neat, d.smooth, d.ih_small
                        ));
                    }
                    t.push_str(&format!(
                        "Q-factorializations: {}  IH-small: {}\n",
                        report.counts.qfact, report.counts.ih_small
                    ));
                    t
                }
                f => return Err(unsupported(f, "classify")),
            };
            Ok((text, 0))
        }
        Command::Cones {
            element,
            word,
            ordering,
            max_peaks,
            output,
        } => {
            let q = build_quiver(element, word)?;
            if output.format != Format::Json {
                return Err(unsupported(output.format, "cones"));
            }
            let nef = match ordering {
                Some(o) => {
                    let ordering = weyl::parse_word(o)?;
                    let d = decomp::decompose(&q, &ordering)?;
                    let cone = divisors::nef_cone(&q, &d)?;
                    vec![NefConeJson {
                        orderings: vec![ordering],
                        parts: d.parts.clone(),
                        cone: cone.to_json(),
                    }]
                }
                None => decomp::enumerate_decompositions(&q, *max_peaks)?
                    .iter()
                    .map(|d| {
                        divisors::nef_cone(&q, &d.decomposition).map(|cone| NefConeJson {
                            orderings: d.orderings.clone(),
                            parts: d.decomposition.parts.clone(),
                            cone: cone.to_json(),
                        })
                    })
                    .collect::<Result<_>>()?,
            };
            let text = to_json(&ConesJson {
                word: q.word.clone(),
                effective: divisors::effective_cone(&q).to_json(),
                nef,
            })?;
            Ok((text, 0))
        }
        Command::Peel {
            element,
            word,
            class,
            output,
        } => {
            let q = build_quiver(element, word)?;
            let coords = class
                .split(',')
                .map(|part| divisors::parse_rational(part.trim()))
                .collect::<Result<Vec<_>>>()?;
            let class = DivisorClass {
                basis: BasisTag::Dhat,
                coords,
            };
            let result = divisors::peel(&q, &class)?;
            divisors::check_peel(&q, &class, &result)?;
            let json = PeelJson {
                word: q.word.clone(),
                peaks: q.peaks.clone(),
                class: class.coords.iter().map(divisors::rational_to_string).collect(),
                ordering: result.ordering.clone(),
                steps: result
                    .steps
                    .iter()
                    .map(|(vertex, mu)| PeelStepJson {
                        vertex: *vertex,
                        mu: divisors::rational_to_string(mu),
                    })
                    .collect(),
            };
            let text = match output.format {
                Format::Json => to_json(&json)?,
                Format::Table => {
                    let mut t = format!("ordering {:?}\n", json.ordering);
                    for s in &json.steps {
                        t.push_str(&format!("peel {} * L_{}\n", s.mu, s.vertex));
                    }
                    t
                }
                f => return Err(unsupported(f, "peel")),
            };
            Ok((text, 0))
        }
        Command::Verify {
            element,
            seed,
            max_length,
            max_peaks,
            samples,
            output,
        } => {
            let (rs, weight, variant) = element.resolve()?;
            let opts = VerifyOptions {
                seed: *seed,
                max_length: *max_length,
                max_peaks: *max_peaks,
                samples: *samples,
            };
            let report = verify::run_suite(rs, weight, variant, &opts)?;
            let text = match output.format {
                Format::Json => to_json(&report)?,
                Format::Table => {
                    let mut t = format!(
                        "{} w{} {} ({} elements)\n",
                        report.system, report.weight, report.variant, report.elements
                    );
                    for c in &report.checks {
                        t.push_str(&format!(
                            "{:<28} {}\n",
                            c.name,
                            if c.passed { "pass" } else { &c.detail }
                        ));
                    }
                    t
                }
                f => return Err(unsupported(f, "verify")),
            };
            let code = if report.passed { 0 } else { 3 };
            Ok((text, code))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            // One-line diagnostic, exit 1 for malformed invocations.
            let msg = e.to_string();
            let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("bad invocation");
            eprintln!("{line}");
            std::process::exit(1);
        }
    };
    match run(&cli.command) {
        Ok((text, code)) => {
            if let Some(Command::Weights { output, .. })
            | Some(Command::Elements { output, .. })
            | Some(Command::Quiver { output, .. })
            | Some(Command::Classify { output, .. })
            | Some(Command::Cones { output, .. })
            | Some(Command::Peel { output, .. })
            | Some(Command::Verify { output, .. }) = Some(&cli.command)
            {
                if let Some(path) = &output.out {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        std::process::exit(1);
                    }
                } else {
                    print!("{text}");
                    let _ = std::io::stdout().flush();
                }
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
