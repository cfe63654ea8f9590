//! `lfbraid`: exact computations in the locally finite braid tower.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use lfbraid::formats;
use lfbraid::verify::{self, VerifyConfig};
use lfbraid_core::ext::ext_distance;
use lfbraid_core::geom::make_small_essential_loop;
use lfbraid_core::word::BraidWord;

#[derive(Parser)]
#[command(
    name = "lfbraid",
    version,
    about = "Exact locally finite braid tower computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a braid word: triviality, permutation, windings, forgetting.
    Word(WordArgs),
    /// Distance between two tower or finitary-group documents.
    Distance(DistanceArgs),
    /// Winding table of the built-in counterexample schedule.
    Counterexample(CounterexampleArgs),
    /// Construct an epsilon-small essential loop with certificates.
    Smallloop(SmallLoopArgs),
    /// Run the verification property suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WordArgs {
    /// The word, in `s<i>` / `s<i>^-1` tokens.
    word: Option<String>,
    /// Strand count (required with an inline word).
    #[arg(long)]
    strands: Option<u32>,
    /// Read words from a word file (header `strands=<n>`, one word per line).
    #[arg(long, conflicts_with = "word")]
    file: Option<PathBuf>,
    /// Report triviality (exact word problem).
    #[arg(long)]
    trivial: bool,
    /// Report the winding number of a strand pair, e.g. `--winding 1,2`.
    #[arg(long, value_name = "i,j")]
    winding: Vec<String>,
    /// Report the word with one strand forgotten.
    #[arg(long, value_name = "k")]
    forget: Option<u32>,
    /// Write the processed words (after `--forget`, if given) as a word
    /// file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistanceArgs {
    doc_a: PathBuf,
    doc_b: PathBuf,
    /// Evaluation depth (levels of the tower). Defaults to the larger
    /// depth hint of the two documents.
    #[arg(long)]
    depth: Option<u32>,
}

#[derive(Args)]
struct CounterexampleArgs {
    /// Top level of the winding table (at least 3).
    #[arg(long, default_value_t = 12)]
    depth: u32,
}

#[derive(Args)]
struct SmallLoopArgs {
    /// Ball radius, a rational in (0, 1], e.g. `1/8`.
    #[arg(long)]
    epsilon: String,
    /// Write the loop document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    depth: u32,
    /// List the property names without running them.
    #[arg(long)]
    list: bool,
    /// Corrupt a built-in fixture to demonstrate a targeted failure.
    #[arg(long)]
    corrupt: bool,
    /// Run a single property by name.
    #[arg(long)]
    only: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Word(args) => cmd_word(args),
        Command::Distance(args) => cmd_distance(args),
        Command::Counterexample(args) => cmd_counterexample(args),
        Command::Smallloop(args) => cmd_smallloop(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_pair(text: &str) -> Result<(u32, u32)> {
    let (i, j) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("winding pair must be `i,j`"))?;
    Ok((i.trim().parse()?, j.trim().parse()?))
}

fn report_word(w: &BraidWord, args: &WordArgs) -> Result<()> {
    println!("word={}", w.render());
    println!("strands={}", w.strands());
    let perm = w.permutation();
    let images: Vec<String> = perm.images().iter().map(|v| v.to_string()).collect();
    println!("permutation={}", images.join(","));
    println!("pure={}", w.is_pure());
    if args.trivial {
        println!("trivial={}", w.is_trivial());
    }
    for pair in &args.winding {
        let (i, j) = parse_pair(pair)?;
        let val = w.winding(i, j).map_err(|e| anyhow!("{e}"))?;
        println!("winding_{i}_{j}={val}");
    }
    if let Some(k) = args.forget {
        let f = w.forget_strand(k).map_err(|e| anyhow!("{e}"))?;
        println!("forget_{k}={}", f.render());
        println!("forget_{k}_strands={}", f.strands());
    }
    Ok(())
}

fn cmd_word(args: WordArgs) -> Result<bool> {
    let words = if let Some(path) = &args.file {
        let text = fs::read_to_string(path).context("reading word file")?;
        let (_, words) = formats::parse_word_file(&text)?;
        words
    } else {
        let text = args
            .word
            .clone()
            .ok_or_else(|| anyhow!("missing word argument"))?;
        let strands = args
            .strands
            .ok_or_else(|| anyhow!("--strands is required with an inline word"))?;
        vec![BraidWord::parse(&text, strands).map_err(|e| anyhow!("{e}"))?]
    };
    for (k, w) in words.iter().enumerate() {
        if k > 0 {
            println!();
        }
        report_word(w, &args)?;
    }
    if let Some(path) = &args.out {
        let processed: Vec<BraidWord> = match args.forget {
            None => words.clone(),
            Some(k) => words
                .iter()
                .map(|w| w.forget_strand(k).map_err(|e| anyhow!("{e}")))
                .collect::<Result<_>>()?,
        };
        let strands = processed.first().map(|w| w.strands()).unwrap_or(1);
        fs::write(path, formats::render_word_file(strands, &processed))
            .context("writing word file")?;
    }
    Ok(true)
}

fn cmd_distance(args: DistanceArgs) -> Result<bool> {
    let a = formats::parse_tower_doc(&fs::read_to_string(&args.doc_a).context("reading doc A")?)?;
    let b = formats::parse_tower_doc(&fs::read_to_string(&args.doc_b).context("reading doc B")?)?;
    let depth = args
        .depth
        .unwrap_or_else(|| a.element.depth_hint().max(b.element.depth_hint()));
    if depth < 1 {
        bail!("depth must be at least 1");
    }
    println!("depth={depth}");
    let d = ext_distance(&a.to_ext(), &b.to_ext(), depth);
    println!("d={d}");
    Ok(true)
}

fn cmd_counterexample(args: CounterexampleArgs) -> Result<bool> {
    if args.depth < 3 {
        bail!("depth must be at least 3 (the schedule starts at level 3)");
    }
    let g = lfbraid_core::tower::TowerElement::counterexample_schedule();
    println!("depth={}", args.depth);
    let mut ok = true;
    for m in 3..=args.depth {
        let w = g.truncate(m);
        let w1 = w.winding(1, m).map_err(|e| anyhow!("{e}"))?;
        let w2 = w.winding(2, m).map_err(|e| anyhow!("{e}"))?;
        println!("m={m} w1m={w1} w2m={w2}");
        if w1 - w2 != 1 {
            ok = false;
        }
    }
    println!("ok={ok}");
    Ok(ok)
}

fn cmd_smallloop(args: SmallLoopArgs) -> Result<bool> {
    let eps = formats::parse_rational(&args.epsilon)?;
    let witness = make_small_essential_loop(&eps).map_err(|e| anyhow!("{e}"))?;
    let bound_ok = witness.sup_bound.upper() < eps;
    let nontrivial = !witness.word.is_trivial();
    println!("epsilon={eps}");
    println!("J={}", witness.j_budget);
    println!("m={}", witness.m);
    println!("rho={}", witness.rho);
    println!("bound={}", witness.sup_bound.upper());
    println!("bound_lt_epsilon={bound_ok}");
    println!("word={}", witness.word.render());
    println!("word_nontrivial={nontrivial}");
    let ok = bound_ok && nontrivial;
    println!("ok={ok}");
    let doc = formats::render_loop_doc(&witness.gamma);
    match &args.out {
        Some(path) => fs::write(path, doc).context("writing loop document")?,
        None => {
            println!("---");
            print!("{doc}");
        }
    }
    Ok(ok)
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    if args.list {
        for name in verify::PROPERTY_NAMES {
            println!("{name}");
        }
        return Ok(true);
    }
    let cfg = VerifyConfig {
        seed: args.seed,
        depth: args.depth.max(2),
        corrupt: args.corrupt,
    };
    println!("seed={}", cfg.seed);
    println!("depth={}", cfg.depth);
    let reports = match &args.only {
        Some(name) => {
            vec![verify::run_property(name, &cfg)
                .ok_or_else(|| anyhow!("unknown property `{name}`"))?]
        }
        None => verify::run_all(&cfg),
    };
    print!("{}", verify::format_reports(&reports));
    Ok(reports.iter().all(|r| r.pass))
}
