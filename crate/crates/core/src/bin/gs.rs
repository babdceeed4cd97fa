//! `gs` — command-line front end for good-semigroup computations.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use good_semigroup::chains::{self, GoodIdeal};
use good_semigroup::io;
use good_semigroup::levels::{self, LevelPartition};
use good_semigroup::oracle::{self, GeneratorConfig};
use good_semigroup::render::{self, Annotate, RenderFormat, RenderSpec};
use good_semigroup::symmetry;
use good_semigroup::{fixtures, Axis, Box2, GoodSemigroup, Point};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gs", about = "Good subsemigroups of N^2: Apéry sets, levels, duality")]
struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Fixture name (fig1, fig3, fig4, fig5) or path to a semigroup file
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the good-semigroup axioms, reporting violations
    Verify(Input),
    /// Basic invariants: e, γ, c, projections, level count
    Info(Input),
    /// The Apéry set on the default window
    Apery {
        #[command(flatten)]
        input: Input,
        /// Partition into levels A_1..A_N
        #[arg(long)]
        levels: bool,
    },
    /// The level partition, optionally classified by shape
    Levels {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        classify: bool,
    },
    /// A chain of representatives α_i ∈ A_i with α_i ≤ α_{i+1}
    Chain(Input),
    /// Distance d(E∖F) between two good ideals
    Distance {
        #[command(flatten)]
        input: Input,
        /// Ideal E: "s" for S itself or "t:x,y" for t+S
        #[arg(long)]
        from: String,
        /// Ideal F ⊆ E, same syntax
        #[arg(long)]
        to: String,
    },
    /// Symmetry test; --full also checks the six symmetric-case facts
    Symmetry {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        full: bool,
    },
    /// Dual levels A_i′ and the equalities A_i′ = A_{e−i+1}
    Duality(Input),
    /// The canonical dual sequence α_1, …, α_e
    Sequence(Input),
    /// Classify every line Δ_axis(n, 0) for n ≤ γ_axis + e_axis
    ClassifyLines {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "x")]
        axis: AxisArg,
    },
    /// Draw the semigroup on a window
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "levels")]
        annotate: AnnotateArg,
        /// Window corner "x,y" (default γ + e + (2,2))
        #[arg(long)]
        window: Option<String>,
    },
    /// Generate a random good semigroup
    Gen {
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long)]
        symmetric: bool,
        /// Upper bound "x,y" for the conductor
        #[arg(long, default_value = "12,12")]
        max_conductor: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnnotateArg {
    Membership,
    Apery,
    Levels,
    Duality,
}

fn parse_point(s: &str) -> Result<Point> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected \"x,y\", got {s:?}"))?;
    Ok(Point::new(x.trim().parse()?, y.trim().parse()?))
}

fn load(input: &str) -> Result<GoodSemigroup> {
    if let Some(s) = fixtures::by_name(input) {
        return Ok(s);
    }
    let text =
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    io::read_semigroup(&text).map_err(|e| anyhow!(e.to_string()))
}

fn partition(s: &GoodSemigroup) -> Result<LevelPartition> {
    levels::compute_levels(s).map_err(|e| anyhow!(e.to_string()))
}

fn point_json(p: Point) -> serde_json::Value {
    json!([p.x, p.y])
}

fn truncated_json(t: &good_semigroup::truncated::TruncatedSet) -> serde_json::Value {
    json!({
        "points": t.points.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
        "vertical_rays": t.vertical_rays,
        "horizontal_rays": t.horizontal_rays,
    })
}

// Exit 1 with a violation message on stdout.
struct Violation(String);

fn run(cli: &Cli) -> Result<Result<String, Violation>> {
    match &cli.command {
        Command::Verify(input) => {
            // verify must report violations rather than fail to load
            if let Some(s) = fixtures::by_name(&input.input) {
                let _ = s;
                return Ok(Ok(if cli.json {
                    json!({"ok": true, "violations": []}).to_string()
                } else {
                    "ok".into()
                }));
            }
            let path = std::path::Path::new(&input.input);
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", input.input))?;
            let (conductor, small) =
                io::parse_candidate(&text).map_err(|e| anyhow!(e.to_string()))?;
            let report = good_semigroup::semigroup::verify_axioms(conductor, &small);
            if report.is_ok() {
                Ok(Ok(if cli.json {
                    json!({"ok": true, "violations": []}).to_string()
                } else {
                    "ok".into()
                }))
            } else {
                Ok(Err(Violation(if cli.json {
                    json!({
                        "ok": false,
                        "violations": report.violations.iter()
                            .map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                    .to_string()
                } else {
                    report.to_string()
                })))
            }
        }
        Command::Info(input) => {
            let s = load(&input.input)?;
            let e = s.min_nonzero();
            let s1 = s.projection(Axis::X);
            let s2 = s.projection(Axis::Y);
            Ok(Ok(if cli.json {
                json!({
                    "e": point_json(e),
                    "gamma": point_json(s.gamma()),
                    "conductor": point_json(s.conductor()),
                    "levels": s.level_count(),
                    "projections": {
                        "s1": {"multiplicity": s1.multiplicity(), "frobenius": s1.frobenius(),
                               "gaps": s1.gap_count()},
                        "s2": {"multiplicity": s2.multiplicity(), "frobenius": s2.frobenius(),
                               "gaps": s2.gap_count()},
                    },
                })
                .to_string()
            } else {
                format!(
                    "e = {e}\nγ = {}\nc = {}\nN = {} levels\nS₁: e = {}, f = {}, gaps = {}\nS₂: e = {}, f = {}, gaps = {}",
                    s.gamma(),
                    s.conductor(),
                    s.level_count(),
                    s1.multiplicity(),
                    s1.frobenius(),
                    s1.gap_count(),
                    s2.multiplicity(),
                    s2.frobenius(),
                    s2.gap_count(),
                )
            }))
        }
        Command::Apery { input, levels } => {
            let s = load(&input.input)?;
            if *levels {
                let p = partition(&s)?;
                Ok(Ok(if cli.json {
                    json!({
                        "window": [point_json(p.window.lo), point_json(p.window.hi)],
                        "levels": p.levels.iter().map(truncated_json).collect::<Vec<_>>(),
                    })
                    .to_string()
                } else {
                    let mut out = String::new();
                    for (i, lvl) in p.levels.iter().enumerate() {
                        out.push_str(&format!("A{} = {}\n", i + 1, describe(lvl)));
                    }
                    out.trim_end().to_string()
                }))
            } else {
                let ap = s.apery_set(s.default_window());
                Ok(Ok(if cli.json {
                    truncated_json(&ap).to_string()
                } else {
                    format!("Ap(S) on window ≤ {}: {}", ap.window.hi, describe(&ap))
                }))
            }
        }
        Command::Levels { input, classify } => {
            let s = load(&input.input)?;
            let p = partition(&s)?;
            if *classify {
                let classes =
                    levels::classify_levels(&p, &s).map_err(|e| anyhow!(e))?;
                Ok(Ok(if cli.json {
                    serde_json::to_string(&classes)?
                } else {
                    classes
                        .iter()
                        .enumerate()
                        .map(|(i, c)| format!("A{}: {:?}", i + 1, c.shape))
                        .collect::<Vec<_>>()
                        .join("\n")
                }))
            } else {
                Ok(Ok(if cli.json {
                    json!({
                        "n": p.n(),
                        "levels": p.levels.iter().map(truncated_json).collect::<Vec<_>>(),
                    })
                    .to_string()
                } else {
                    p.levels
                        .iter()
                        .enumerate()
                        .map(|(i, l)| format!("A{} = {}", i + 1, describe(l)))
                        .collect::<Vec<_>>()
                        .join("\n")
                }))
            }
        }
        Command::Chain(input) => {
            let s = load(&input.input)?;
            let p = partition(&s)?;
            let chain = levels::apery_basis_chain(&s, &p).map_err(|e| anyhow!(e))?;
            Ok(Ok(if cli.json {
                serde_json::to_string(&chain)?
            } else {
                chain
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ≤ ")
            }))
        }
        Command::Distance { input, from, to } => {
            let s = load(&input.input)?;
            let parse_ideal = |spec: &str| -> Result<GoodIdeal<'_>> {
                if spec == "s" {
                    Ok(GoodIdeal::semigroup(&s))
                } else if let Some(rest) = spec.strip_prefix("t:") {
                    Ok(GoodIdeal::shifted(&s, parse_point(rest)?))
                } else {
                    Err(anyhow!("ideal spec must be \"s\" or \"t:x,y\", got {spec:?}"))
                }
            };
            let e = parse_ideal(from)?;
            let f = parse_ideal(to)?;
            let d = chains::distance(&e, &f).map_err(|er| anyhow!(er))?;
            Ok(Ok(if cli.json {
                json!({"distance": d}).to_string()
            } else {
                format!("d(E∖F) = {d}")
            }))
        }
        Command::Symmetry { input, full } => {
            let s = load(&input.input)?;
            let witness = symmetry::symmetry_witness(&s);
            let symmetric = witness.is_none();
            if *full {
                let report = symmetry::check_simmetria(&s);
                let ok = symmetric && report.failures.is_empty();
                let text = if cli.json {
                    serde_json::to_string(&report)?
                } else if !symmetric {
                    format!("not symmetric, witness {}", witness.unwrap())
                } else if report.failures.is_empty() {
                    format!(
                        "symmetric; {} absolute elements; all six facts hold",
                        report.absolute_count
                    )
                } else {
                    format!("symmetric, but:\n{}", report.failures.join("\n"))
                };
                Ok(if ok { Ok(text) } else { Err(Violation(text)) })
            } else {
                let text = if cli.json {
                    json!({
                        "symmetric": symmetric,
                        "witness": witness.map(point_json),
                    })
                    .to_string()
                } else {
                    match witness {
                        None => "symmetric".into(),
                        Some(w) => format!("not symmetric, witness {w}"),
                    }
                };
                Ok(if symmetric { Ok(text) } else { Err(Violation(text)) })
            }
        }
        Command::Duality(input) => {
            let s = load(&input.input)?;
            let p = partition(&s)?;
            let report = symmetry::dual_levels(&s, &p);
            let text = if cli.json {
                json!({
                    "symmetric": report.symmetric,
                    "dual_levels": report.dual_levels.iter().map(truncated_json).collect::<Vec<_>>(),
                    "failures": report.failures.iter()
                        .map(|(i, w)| json!({"level": i, "witness": point_json(*w)}))
                        .collect::<Vec<_>>(),
                })
                .to_string()
            } else if report.symmetric {
                format!("all {} dual-level equalities hold", p.n())
            } else {
                report
                    .failures
                    .iter()
                    .map(|(i, w)| format!("A{i}′ ≠ A{} (witness {w})", p.n() + 1 - i))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(if report.symmetric {
                Ok(text)
            } else {
                Err(Violation(text))
            })
        }
        Command::Sequence(input) => {
            let s = load(&input.input)?;
            let p = partition(&s)?;
            let seq = symmetry::dual_sequence(&s, &p).map_err(|e| anyhow!(e))?;
            Ok(Ok(if cli.json {
                serde_json::to_string(&seq)?
            } else {
                let mut out = seq
                    .alphas
                    .iter()
                    .enumerate()
                    .map(|(i, a)| format!("α{} = {a}", i + 1))
                    .collect::<Vec<_>>()
                    .join("\n");
                if let Some(b) = seq.beta {
                    out.push_str(&format!("\nβ = {b}"));
                }
                out.push_str(&format!("\nH = {}", seq.h));
                out
            }))
        }
        Command::ClassifyLines { input, axis } => {
            let s = load(&input.input)?;
            let axis = match axis {
                AxisArg::X => Axis::X,
                AxisArg::Y => Axis::Y,
            };
            let bound = (s.gamma() + s.min_nonzero()).coord(axis);
            let classes: Vec<_> = (0..=bound)
                .map(|n| symmetry::classify_projection_line(&s, axis, n))
                .collect();
            Ok(Ok(if cli.json {
                serde_json::to_string(&classes)?
            } else {
                classes
                    .iter()
                    .enumerate()
                    .map(|(n, c)| format!("{n}: {c:?}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
        Command::Render {
            input,
            format,
            annotate,
            window,
        } => {
            let s = load(&input.input)?;
            let hi = match window {
                Some(w) => parse_point(w)?,
                None => s.default_window().hi,
            };
            let spec = RenderSpec {
                format: match format {
                    FormatArg::Ascii => RenderFormat::Ascii,
                    FormatArg::Svg => RenderFormat::Svg,
                    FormatArg::Tikz => RenderFormat::Tikz,
                },
                window: Box2::from_origin(hi),
                annotate: match annotate {
                    AnnotateArg::Membership => Annotate::Membership,
                    AnnotateArg::Apery => Annotate::Apery,
                    AnnotateArg::Levels => Annotate::Levels,
                    AnnotateArg::Duality => Annotate::Duality,
                },
            };
            render::render(&s, None, &spec).map(Ok).map_err(|e| anyhow!(e))
        }
        Command::Gen {
            seed,
            symmetric,
            max_conductor,
        } => {
            let cfg = GeneratorConfig {
                seed: *seed,
                max_conductor: parse_point(max_conductor)?,
                require_symmetric: *symmetric,
                ..Default::default()
            };
            let s = oracle::random_good_semigroup(&cfg)
                .ok_or_else(|| anyhow!("no semigroup found for seed {seed}"))?;
            Ok(Ok(if cli.json {
                io::write_json(&s)
            } else {
                io::write_plain(&s)
            }))
        }
    }
}

fn describe(t: &good_semigroup::truncated::TruncatedSet) -> String {
    let mut parts: Vec<String> = t.points.iter().map(|p| p.to_string()).collect();
    for &x in &t.vertical_rays {
        parts.push(format!("col x={x} ↑"));
    }
    for &y in &t.horizontal_rays {
        parts.push(format!("row y={y} →"));
    }
    format!("{{{}}}", parts.join(", "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Ok(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Err(Violation(text))) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
