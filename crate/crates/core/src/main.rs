use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mwrsk::harness::{self, EnumSpec};
use mwrsk::mw::{mw_involution, mw_involution_enhanced, mw_step, mw_step_dual, mw_step_enhanced};
use mwrsk::ring::{drs_basis_check, ladder_class, parse_points, rsk_standard_class, Grade};
use mwrsk::rsk::{rsk, rsk_inverse, LadderTuple};
use mwrsk::socle::{interpolation_report, socle, socle_chain, Side};
use mwrsk::tableaux::{render_rows, rsk_pair, RenderFormat};
use mwrsk::words::{crsk, key_predicates, left_key, right_key, RowTuple};
use mwrsk::{Error, Ladder, Multisegment, Result};

#[derive(Parser)]
#[command(name = "mwrsk", version, about = "Multisegments, the MW involution and ladder RSK")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One MW step (default) or the full involution.
    Mw {
        multisegment: String,
        #[arg(long, conflicts_with_all = ["dual"])]
        involution: bool,
        #[arg(long)]
        dual: bool,
        /// Keep dummy segments.
        #[arg(long)]
        enhanced: bool,
    },
    /// RSK(m) as a ladder tuple, or the inverse map with --inverse.
    Rsk {
        input: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw the inverted tableau pair of RSK(m).
    Render {
        multisegment: String,
        #[arg(long, default_value = "ascii")]
        format: String,
    },
    /// soc(Z(m) x Z(l)) for a ladder l.
    Socle { multisegment: String, ladder: String },
    /// Fold socles along a ladder tuple.
    SocleChain {
        tuple: String,
        #[arg(long)]
        left: bool,
    },
    /// Compare RSK-standard factors with the Zelevinsky and Langlands ones.
    Interp {
        multisegment: String,
        #[arg(long, default_value = "0")]
        dummies: String,
    },
    /// cRSK(u) for a tuple of row words such as `6:5,6;5:3,4`.
    Crsk { tuple: String },
    /// Right key of P and left key of Q.
    Keys { tuple: String },
    /// Flag conditions and their key characterisations.
    Flagged { tuple: String },
    /// Grothendieck-ring computations.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Run a verification suite over a finite window.
    Verify(VerifyArgs),
    /// Run a suite's check on one instance.
    Check {
        suite: String,
        input: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Expand the class of a ladder, or of an RSK-standard module with --dummies.
    Expand {
        input: String,
        #[arg(long)]
        dummies: Option<String>,
    },
    /// Test whether RSK-standard classes are a basis of a graded piece.
    DrsCheck {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        grade: String,
        #[arg(long)]
        report_only: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name; omit with --list.
    suite: Option<String>,
    #[arg(long)]
    list: bool,
    /// Window `lo..hi`.
    #[arg(long)]
    window: Option<String>,
    #[arg(long)]
    max_segs: Option<usize>,
    #[arg(long)]
    max_size: Option<u64>,
    #[arg(long)]
    dummies: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn parse_window(s: &str) -> Result<(i32, i32)> {
    let bad = || Error::Parse { pos: 0, msg: format!("expected a window like 1..4, got `{s}`") };
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn show_rows(label: &str, rows: &[Vec<i32>]) {
    println!("{label}:");
    println!("{}", render_rows(rows, RenderFormat::Ascii));
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Mw { multisegment, involution, dual, enhanced } => {
            let m = Multisegment::parse_any(&multisegment)?;
            if involution {
                if enhanced {
                    let (acc, rest) = mw_involution_enhanced(&m);
                    println!("{acc}");
                    println!("remaining dummies: {rest}");
                } else {
                    println!("{}", mw_involution(&m)?);
                }
            } else {
                let r = if dual {
                    mw_step_dual(&m)?
                } else if enhanced {
                    mw_step_enhanced(&m)?
                } else {
                    mw_step(&m)?
                };
                println!("m† = {}", r.m_dagger);
                println!("Δ° = {}", r.delta_circ);
            }
        }
        Command::Rsk { input, inverse, json } => {
            if inverse {
                let t: LadderTuple = input.parse()?;
                let m = rsk_inverse(&t)?;
                println!("{}", if json { m.to_json() } else { m.to_string() });
            } else {
                let t = rsk(&Multisegment::parse_any(&input)?);
                println!("{}", if json { t.to_json_value().to_string() } else { t.to_string() });
            }
        }
        Command::Render { multisegment, format } => {
            let pair = rsk_pair(&Multisegment::parse_any(&multisegment)?);
            let f: RenderFormat = format.parse()?;
            if f == RenderFormat::Json {
                println!("{}", pair.to_json_value());
            } else {
                println!("{}", render_rows(pair.p.rows(), f));
                println!("{}", render_rows(pair.q.rows(), f));
            }
        }
        Command::Socle { multisegment, ladder } => {
            let l: Ladder = ladder.parse()?;
            println!("{}", socle(&Multisegment::parse_any(&multisegment)?, &l)?);
        }
        Command::SocleChain { tuple, left } => {
            let t: LadderTuple = tuple.parse()?;
            println!("{}", socle_chain(&t, if left { Side::Left } else { Side::Right })?);
        }
        Command::Interp { multisegment, dummies } => {
            let m = Multisegment::parse_any(&multisegment)?;
            let d = Multisegment::parse_any(&dummies)?;
            let r = interpolation_report(&m, &d)?;
            let factors: Vec<String> = r.factors.iter().map(Ladder::to_string).collect();
            println!("factors: {}", factors.join(" x "));
            println!("zelevinsky clause: {:?}", r.zelevinsky);
            println!("langlands clause: {:?}", r.langlands);
            match r.classification() {
                Ok(c) => println!("classification: {c:?}"),
                Err(e) => {
                    println!("classification: {e}");
                    return Ok(false);
                }
            }
        }
        Command::Crsk { tuple } => {
            let (p, q) = crsk(&RowTuple::parse_any(&tuple)?);
            show_rows("P", p.rows());
            show_rows("Q", q.rows());
        }
        Command::Keys { tuple } => {
            let (p, q) = crsk(&RowTuple::parse_any(&tuple)?);
            show_rows("right key of P", right_key(&p).rows());
            show_rows("left key of Q", left_key(&q).rows());
        }
        Command::Flagged { tuple } => {
            let u = RowTuple::parse_any(&tuple)?;
            let (plain, enhanced) = key_predicates(&u);
            println!("flagged: {} (key test {plain})", u.is_flagged());
            println!("enhanced flagged: {} (key test {enhanced})", u.is_flagged_enhanced());
        }
        Command::Ring { command: RingCommand::Expand { input, dummies } } => {
            let class = match dummies {
                Some(d) => rsk_standard_class(&Multisegment::parse_any(&input)?, &Multisegment::parse_any(&d)?)?,
                None => ladder_class(&input.parse()?)?,
            };
            println!("{class}");
        }
        Command::Ring { command: RingCommand::DrsCheck { a, b, grade, report_only } } => {
            let grade: Grade = grade.parse()?;
            let r = drs_basis_check(&parse_points(&a)?, &parse_points(&b)?, &grade, report_only)?;
            println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            return Ok(r.unimodular || report_only);
        }
        Command::Verify(args) => {
            if args.list {
                for s in harness::suites() {
                    println!("{:<26} {:?}  {}  [{}]", s.name, s.kind, s.about, s.default_spec);
                }
                return Ok(true);
            }
            let name = args.suite.ok_or(Error::Domain("a suite name is required (see --list)".into()))?;
            let s = harness::suite(&name)?;
            let mut spec: EnumSpec = s.default_spec.clone();
            if let Some(w) = args.window {
                (spec.lo, spec.hi) = parse_window(&w)?;
            }
            if let Some(k) = args.max_segs {
                spec.max_segments = k;
            }
            if args.max_size.is_some() {
                spec.max_size = args.max_size;
            }
            if let Some(d) = args.dummies {
                spec.dummy_budget = d;
            }
            let r = harness::run_suite(&name, &spec, args.jobs)?;
            println!("{}", if args.json { r.to_json() } else { r.summary() });
            return Ok(r.passed());
        }
        Command::Check { suite, input, json } => {
            let r = harness::suite(&suite)?.check_one(&input)?;
            println!("{}", if json { r.to_json() } else { r.summary() });
            return Ok(r.failures_total == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
