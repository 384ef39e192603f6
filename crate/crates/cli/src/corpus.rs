use std::fs;
use std::path::Path;

use rayon::prelude::*;

use platcalc_core::invariants::{oracle_value_with_budget, unlink_value};
use platcalc_core::plat::{MoveKind, Plat};
use platcalc_core::simplifier::{is_certified, simplify, Outcome, SearchConfig};

use crate::{CmdResult, Failure};

const ORACLE_BUDGET: usize = 64;

struct Row {
    name: String,
    bridges: usize,
    crossings: usize,
    components: usize,
    unlink: &'static str,
    free: String,
    capped: String,
}

fn summary(outcome: Outcome, moves: usize, flips: bool, certified: bool) -> String {
    let tag = match outcome {
        Outcome::ReachedStandard => "standard",
        Outcome::BudgetExhausted => "exhausted",
    };
    let mut s = format!("{tag}/{moves}");
    if flips {
        s.push_str("/flip");
    }
    if !certified {
        s.push_str("/UNCERTIFIED");
    }
    s
}

fn run_record(name: String, p: &Plat, budget: usize) -> Row {
    let unlink = match oracle_value_with_budget(p, ORACLE_BUDGET) {
        Ok(v) if v == unlink_value(p.component_count()) => "yes",
        Ok(_) => "no",
        Err(_) => "-",
    };
    let mut cells = Vec::new();
    for cap in [None, Some(p.crossing_count())] {
        let cfg = SearchConfig {
            node_budget: budget,
            crossing_cap: cap,
            ..SearchConfig::default()
        };
        let t = simplify(p, &cfg);
        let flips = t.uses(MoveKind::Flip) || t.uses(MoveKind::Microflip);
        cells.push(summary(t.outcome, t.move_count(), flips, is_certified(&t)));
    }
    let capped = cells.pop().expect("two cells");
    let free = cells.pop().expect("two cells");
    Row {
        name,
        bridges: p.bridge_index(),
        crossings: p.crossing_count(),
        components: p.component_count(),
        unlink,
        free,
        capped,
    }
}

/// Simplifies every `*.plat` record, with and without a cap at the initial
/// crossing count. Cells read `outcome/moves[/flip]`.
pub(crate) fn run(dir: &Path, budget: usize) -> CmdResult {
    let entries =
        fs::read_dir(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "plat"))
        .collect();
    paths.sort();
    let mut records = Vec::new();
    for path in &paths {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let p =
            Plat::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        records.push((name, p));
    }
    let rows: Vec<Row> = records
        .into_par_iter()
        .map(|(name, p)| run_record(name, &p, budget))
        .collect();
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let line = |cells: [&str; 7]| {
        let s = format!(
            "{:<width$}  {:>2}  {:>4}  {:>4}  {:>6}  {:<22}  {}",
            cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6]
        );
        println!("{}", s.trim_end());
    };
    line([
        "name",
        "n",
        "xing",
        "comp",
        "unlink",
        "simplify",
        "simplify (cap)",
    ]);
    for r in &rows {
        let (n, x, c) = (
            r.bridges.to_string(),
            r.crossings.to_string(),
            r.components.to_string(),
        );
        line([&r.name, &n, &x, &c, r.unlink, &r.free, &r.capped]);
    }
    let uncertified = rows
        .iter()
        .filter(|r| r.free.contains("UNCERTIFIED") || r.capped.contains("UNCERTIFIED"))
        .count();
    println!("{} records", rows.len());
    if uncertified > 0 {
        return Err(Failure::Domain(format!(
            "{uncertified} record(s) produced an uncertified trace"
        )));
    }
    Ok(())
}
