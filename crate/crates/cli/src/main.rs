mod corpus;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use platcalc_core::foliation::{find_reducible_vertex, TilingTree};
use platcalc_core::invariants::{
    oracle_value_with_budget, unknot_evidence_with_budget, DEFAULT_BUDGET,
};
use platcalc_core::plat::{Move, MoveKind, MoveRecord, Plat};
use platcalc_core::simplifier::{certify_trace, scramble, simplify, Outcome, SearchConfig};

const GRAMMAR: &str = "\
Move syntax (EBNF):

  move      = step [ \"+reduce\" ] ;
  step      = \"stab\" | \"stabilize\" [ \"()\" ]
            | \"destab\" | \"destabilize\" [ \"()\" ]
            | \"reduce\"
            | ( \"dc\" | \"double_coset\" ) \"(\" \"side=\" side \",\" \"gen=\" int \",\" \"inv=\" bit \")\"
            | \"flip\" \"(\" \"split=\" int \",\" \"k=\" int \",\" \"dir=\" dir \")\"
            | \"microflip\" \"(\" \"start=\" int \",\" \"k=\" int [ \",\" \"gap=\" int ] \",\"
                          \"split=\" int \",\" \"dir=\" dir \")\"
            | \"pocket\" \"(\" \"script=\" coset { \";\" coset } \")\"
            | \"rw\" \"(\" rewrite \")\"
            | \"isotopy\" \"(\" \"op=\" iso \")\" ;
  rewrite   = \"pos=\" int \",\" \"rel=\" ( \"comm\" | \"braid\" ) \",\" \"dir=\" ( \"fwd\" | \"rev\" ) ;
  iso       = \"identity\" | \"reduce\" | \"rw,\" rewrite
            | \"cancel,\" \"i=\" int \",\" \"j=\" int
            | \"delete,\" \"start=\" int \",\" \"end=\" int ;
  coset     = side \":\" int \":\" bit ;
  side      = \"top\" | \"bottom\" ;
  dir       = \"in\" | \"out\" ;
  bit       = \"0\" | \"1\" ;
  int       = digit { digit } ;

Parameters inside parentheses may appear in any order.
  split      letter index where the flip word is inserted (0 = top)
  k          flip: gap between strands k and k+1; microflip: block size (even)
  start      microflip: first strand of the block (odd)
  gap        microflip: gap inside the block (default k/2)
  gen        0-based index into the Hilden generators
  +reduce    follow the move by free and commuting cancellation

Exit status: 0 success, 1 domain failure, 2 parse or usage error.";

#[derive(Parser)]
#[command(
    name = "platcalc",
    version,
    about = "Plat presentations of links: moves, invariants and simplification"
)]
#[command(after_long_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strands, bridge index, crossings, components and the oracle value.
    Info {
        file: PathBuf,
        /// Skip the oracle above this many crossings.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        oracle_budget: usize,
    },
    /// Apply one move and print the resulting plat record.
    #[command(after_long_help = GRAMMAR)]
    Apply {
        file: PathBuf,
        #[arg(long = "move", value_name = "DSL")]
        mv: String,
    },
    /// Search for a monotone sequence of moves to the standard plat.
    Simplify {
        file: PathBuf,
        #[arg(long, default_value_t = 48)]
        beam: usize,
        /// Node budget.
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
        #[arg(long)]
        crossing_cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest double-coset script tried as one pocket step.
        #[arg(long, default_value_t = 2)]
        pocket_len: usize,
        /// Leave flips and microflips out of the menu.
        #[arg(long)]
        no_flips: bool,
        /// Write the trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Apply random link-preserving moves and print the result.
    Scramble {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        budget: usize,
    },
    /// Validate a tiling and report its census and reducible vertex.
    TilingCheck { file: PathBuf },
    /// Draw the plat.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every `*.plat` record in a directory and print a summary table.
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

enum Failure {
    Domain(String),
    Usage(String),
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_plat(path: &Path) -> Result<Plat, Failure> {
    Plat::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn info(file: &Path, budget: usize) -> CmdResult {
    let p = load_plat(file)?;
    println!("strands: {}", p.strands());
    println!("bridge index: {}", p.bridge_index());
    println!("crossings: {}", p.crossing_count());
    println!("components: {}", p.component_count());
    match oracle_value_with_budget(&p, budget) {
        Ok(v) => {
            println!("oracle: {v}");
            let unknot = unknot_evidence_with_budget(&p, budget).unwrap_or(false);
            println!("unknot evidence: {}", if unknot { "yes" } else { "no" });
        }
        Err(e) => println!("oracle: skipped ({e})"),
    }
    Ok(())
}

fn apply(file: &Path, dsl: &str) -> CmdResult {
    let p = load_plat(file)?;
    let (mv, reduced) = Move::parse_step(dsl).map_err(|e| Failure::Usage(e.to_string()))?;
    let q =
        MoveRecord::replay(&mv, reduced, &p).map_err(|e| Failure::Domain(format!("{mv}: {e}")))?;
    print!("{}", q.to_text());
    Ok(())
}

fn run_simplify(file: &Path, cfg: SearchConfig, trace: Option<&Path>) -> CmdResult {
    let p = load_plat(file)?;
    let t = simplify(&p, &cfg);
    if let Some(path) = trace {
        write(path, &t.to_text())?;
    }
    let certified = certify_trace(&t);
    println!("outcome: {}", t.outcome);
    println!("moves: {}", t.move_count());
    let last = t.last().expect("traces start with the input");
    println!(
        "final: bridge index {}, {} crossings",
        last.bridge_index(),
        last.crossing_count()
    );
    println!("max crossings: {}", t.max_crossings());
    println!(
        "flip used: {}",
        if t.uses(MoveKind::Flip) || t.uses(MoveKind::Microflip) {
            "yes"
        } else {
            "no"
        }
    );
    match &certified {
        Ok(()) => println!("certified: yes"),
        Err(e) => println!("certified: no ({e})"),
    }
    if certified.is_err() {
        return Err(Failure::Domain("trace failed certification".into()));
    }
    if t.outcome != Outcome::ReachedStandard {
        return Err(Failure::Domain(
            "budget exhausted before reaching the standard plat".into(),
        ));
    }
    Ok(())
}

fn tiling_check(file: &Path) -> CmdResult {
    let text = read(file)?;
    let t =
        TilingTree::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let violations = t.validate();
    if violations.is_empty() {
        println!("valid: yes");
    } else {
        println!("valid: no");
        for v in &violations {
            println!("  {v}");
        }
    }
    match t.euler_characteristic() {
        Ok(chi) => println!("euler characteristic: {chi}"),
        Err(e) => println!("euler characteristic: unavailable ({e})"),
    }
    println!("census: {}", t.census());
    println!(
        "counting identity: {}",
        if t.check_counting_identity() {
            "holds"
        } else {
            "fails"
        }
    );
    match t.complexity() {
        Ok(c) => println!("complexity: {c}"),
        Err(_) => println!("complexity: unavailable"),
    }
    match find_reducible_vertex(&t) {
        Ok(Some(r)) => println!("reducible vertex: {r}"),
        Ok(None) => println!("reducible vertex: none"),
        Err(_) => println!("reducible vertex: unavailable"),
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "{} violation(s)",
            violations.len()
        )))
    }
}

fn render_cmd(file: &Path, format: Format, out: Option<&Path>) -> CmdResult {
    let p = load_plat(file)?;
    let text = match format {
        Format::Ascii => render::ascii(&p),
        Format::Svg => render::svg(&p),
    };
    match out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info {
            file,
            oracle_budget,
        } => info(&file, oracle_budget),
        Command::Apply { file, mv } => apply(&file, &mv),
        Command::Simplify {
            file,
            beam,
            budget,
            crossing_cap,
            seed,
            pocket_len,
            no_flips,
            trace,
        } => {
            if beam == 0 || budget == 0 {
                Err(Failure::Usage(
                    "--beam and --budget must be positive".into(),
                ))
            } else {
                let excluded = if no_flips {
                    vec![MoveKind::Flip, MoveKind::Microflip]
                } else {
                    Vec::new()
                };
                let cfg = SearchConfig {
                    beam_width: beam,
                    node_budget: budget,
                    crossing_cap,
                    pocket_len,
                    seed,
                    excluded,
                };
                run_simplify(&file, cfg, trace.as_deref())
            }
        }
        Command::Scramble { file, seed, budget } => {
            load_plat(&file).map(|p| print!("{}", scramble(&p, seed, budget).to_text()))
        }
        Command::TilingCheck { file } => tiling_check(&file),
        Command::Render { file, format, out } => render_cmd(&file, format, out.as_deref()),
        Command::Corpus { dir, budget } => corpus::run(&dir, budget),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
