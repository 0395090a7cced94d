//! `chainorder`: command-line driver for the chain-order polytope and valuation checks.

mod render;

use std::process::ExitCode;

use chainorder::chevalley::{check_symplectic, omega_product, reduced_word};
use chainorder::crystal::{comb_valuation, Column};
use chainorder::no_body::{self, Chart, TypeCLabel};
use chainorder::rational::{fmt_rational, parse_rational};
use chainorder::rep_basis::{basis_indices, basis_vectors, rank_check};
use chainorder::{
    gt_poset, mco_hrep, mco_lattice_points, order_lattice_points, poset, transfer, unimodular_equiv, val, vertices,
    DominantWeight, Error, Mode, Partition, Poly, TypeTag, VarOrder,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use render::{points_json, Format, Report};

#[derive(Parser, Debug)]
#[command(name = "chainorder", version, about = "Chain-order polytopes and lex valuations on flag varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit Markdown instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    markdown: bool,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(short = 't', long = "type", default_value = "A")]
    type_tag: String,
    #[arg(short, default_value_t = 2)]
    n: usize,
    /// Comma-separated coordinates of the dominant weight in the fundamental basis.
    #[arg(short = 'l', long)]
    lambda: Option<String>,
    /// Bitmask over the coordinates, `1` marking chain elements.
    #[arg(short = 'p', long)]
    partition: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Low,
    High,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Check {
    MainThm,
    Saturation,
    Lemma63,
    Basis,
    Highest,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inequalities, vertices, lattice points and transfer images of a chain-order polytope.
    Polytope {
        #[command(flatten)]
        c: Common,
    },
    /// Image of one point under the transfer map.
    Transfer {
        #[command(flatten)]
        c: Common,
        #[arg(long, value_name = "X1,X2,...")]
        point: String,
    },
    /// The matrix product Omega in the variables t.
    Omega {
        #[command(flatten)]
        c: Common,
    },
    /// Valuation of a polynomial, or the value set of a section space.
    Valuation {
        #[command(flatten)]
        c: Common,
        /// Variable order as comma-separated 1-based indices, largest first.
        #[arg(short = 'o', long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value = "low")]
        mode: ModeArg,
        #[arg(short = 'k', long, default_value_t = 1)]
        level: usize,
        /// A polynomial in t1..tN; without it the level-k value set is reported.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Run one of the verification checks.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        c: Common,
        #[arg(long)]
        all_partitions: bool,
        #[arg(short = 'k', long)]
        level: Option<usize>,
    },
    /// Classify the 72 type C level-1 bodies and compare with the reference labels.
    Table1,
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type Run = Result<Report, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, UsageError> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| usage(format!("bad {what} entry {x:?}")))).collect()
}

impl Common {
    fn type_tag(&self) -> Result<TypeTag, UsageError> {
        self.type_tag.parse().map_err(|_| usage(format!("unknown type {:?}", self.type_tag)))
    }

    fn num_coords(&self) -> Result<usize, UsageError> {
        if self.n == 0 {
            return Err(usage("n must be at least 1"));
        }
        Ok(self.type_tag()?.num_coords(self.n))
    }

    fn lambda_or(&self, default: Option<DominantWeight>) -> Result<DominantWeight, UsageError> {
        let t = self.type_tag()?;
        let w = match (&self.lambda, default) {
            (Some(s), _) => DominantWeight::new(t, parse_list(s, "lambda")?)?,
            (None, Some(d)) => d,
            (None, None) => return Err(usage("--lambda is required")),
        };
        if w.rank() != self.n {
            return Err(usage(format!("lambda has {} coordinates, expected {}", w.rank(), self.n)));
        }
        Ok(w)
    }

    fn lambda(&self) -> Result<DominantWeight, UsageError> {
        self.lambda_or(None)
    }

    fn partition_or(&self, default: Partition) -> Result<Partition, UsageError> {
        let p = match &self.partition {
            Some(s) => Partition::from_mask(s)?,
            None => default,
        };
        p.check_len(self.num_coords()?)?;
        Ok(p)
    }

    fn partition(&self) -> Result<Partition, UsageError> {
        self.partition_or(Partition::all_order(self.num_coords()?))
    }

    fn partitions(&self, all: bool) -> Result<Vec<Partition>, UsageError> {
        if all {
            if self.partition.is_some() {
                return Err(usage("--partition and --all-partitions are exclusive"));
            }
            Ok(Partition::all(self.num_coords()?).collect())
        } else {
            Ok(vec![self.partition()?])
        }
    }

    fn require_a(&self, what: &str) -> Result<(), UsageError> {
        if self.type_tag()? != TypeTag::A {
            return Err(usage(format!("{what} is only available in type A")));
        }
        Ok(())
    }
}

fn cmd_polytope(c: &Common) -> Run {
    let t = c.type_tag()?;
    let lambda = c.lambda()?;
    let part = c.partition()?;
    let p = gt_poset(t, c.n, &lambda)?;
    let h = mco_hrep(&p, &part)?;
    let v = vertices(&h)?;
    let pts = mco_lattice_points(&p, &part)?;
    let images: Vec<Value> = order_lattice_points(&p)
        .points
        .iter()
        .map(|x| Ok(json!({"order": x, "image": poset::transfer_int(&p, &part, x)?})))
        .collect::<Result<_, Error>>()?;
    let body = json!({
        "type": t.to_string(),
        "n": c.n,
        "lambda": lambda.coords(),
        "partition": part.mask(),
        "coordinates": p.coord_labels(),
        "inequalities": h.ineqs,
        "vertices": v,
        "num_vertices": v.num_vertices(),
        "lattice_points": points_json(&pts.points),
        "num_lattice_points": pts.len(),
        "transfer": images,
    });
    Ok(Report::pass("polytope", body))
}

fn cmd_transfer(c: &Common, point: &str) -> Run {
    let lambda = c.lambda()?;
    let part = c.partition()?;
    let p = gt_poset(c.type_tag()?, c.n, &lambda)?;
    let x = point.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
    if x.len() != p.num_coords() {
        return Err(usage(format!("point has {} coordinates, expected {}", x.len(), p.num_coords())));
    }
    let y = transfer(&p, &part, &x)?;
    let in_domain = mco_hrep(&p, &Partition::all_order(x.len()))?.contains(&x);
    let body = json!({
        "partition": part.mask(),
        "in_order_polytope": in_domain,
        "point": x.iter().map(fmt_rational).collect::<Vec<_>>(),
        "image": y.iter().map(fmt_rational).collect::<Vec<_>>(),
    });
    Ok(Report::pass("transfer", body))
}

fn cmd_omega(c: &Common) -> Run {
    let t = c.type_tag()?;
    let part = c.partition()?;
    let omega = omega_product(t, c.n, &part)?;
    let det_one = omega.det() == Poly::one(omega.nvars);
    let symplectic = match t {
        TypeTag::C => Some(check_symplectic(&omega, c.n)?),
        TypeTag::A => None,
    };
    let entries: Vec<Vec<String>> = omega.entries.iter().map(|r| r.iter().map(|p| p.to_text("t")).collect()).collect();
    let body = json!({
        "type": t.to_string(),
        "n": c.n,
        "partition": part.mask(),
        "reduced_word": reduced_word(t, c.n).letters,
        "matrix": entries,
        "det_is_one": det_one,
        "symplectic": symplectic,
    });
    let pass = det_one && symplectic != Some(false);
    Ok(Report::new("omega", pass, body))
}

fn cmd_valuation(c: &Common, order: Option<&str>, mode: ModeArg, level: usize, poly: Option<&str>) -> Run {
    let t = c.type_tag()?;
    let nn = c.num_coords()?;
    let ord = match order {
        Some(s) => VarOrder::from_one_based(&parse_list(s, "order")?)?,
        None => VarOrder::identity(nn),
    };
    if ord.len() != nn {
        return Err(usage(format!("order has {} entries, expected {nn}", ord.len())));
    }
    let mode = match mode {
        ModeArg::Low => Mode::Low,
        ModeArg::High => Mode::High,
    };
    let mode_name = serde_json::to_value(mode).expect("mode serializes");
    if let Some(text) = poly {
        let f = Poly::parse(text, nn, "t")?;
        let v = val(&f, &ord, mode)?;
        let body = json!({"order": ord.one_based(), "mode": mode_name, "poly": f.to_text("t"), "value": v});
        return Ok(Report::pass("valuation", body));
    }
    if level == 0 {
        return Err(usage("level must be at least 1"));
    }
    let lambda = c.lambda()?;
    let part = c.partition()?;
    let chart = Chart::new(t, c.n, &part)?;
    let space = no_body::level_space_in(&chart, &lambda, level)?;
    let vals = no_body::level_value_set(&space, &ord, mode)?;
    let body = json!({
        "type": t.to_string(),
        "n": c.n,
        "lambda": lambda.coords(),
        "partition": part.mask(),
        "order": ord.one_based(),
        "mode": mode_name,
        "level": level,
        "dimension": space.span.len(),
        "values": vals,
    });
    Ok(Report::pass("valuation", body))
}

fn default_weights(c: &Common) -> Result<Vec<DominantWeight>, UsageError> {
    if c.lambda.is_some() {
        return Ok(vec![c.lambda()?]);
    }
    let t = c.type_tag()?;
    let mut ws: Vec<DominantWeight> = (1..=c.n).map(|k| DominantWeight::fundamental(t, c.n, k)).collect();
    ws.push(DominantWeight::rho(t, c.n));
    Ok(ws)
}

fn cmd_verify(check: Check, c: &Common, all: bool, level: Option<usize>) -> Run {
    use rayon::prelude::*;
    c.require_a("verify")?;
    let n = c.n;
    let parts = c.partitions(all)?;
    let name = format!("verify {}", check.to_possible_value().expect("named").get_name());
    let results: Vec<(bool, Value)> = match check {
        Check::MainThm => {
            let ws = default_weights(c)?;
            let jobs: Vec<(Partition, DominantWeight)> =
                parts.iter().flat_map(|p| ws.iter().map(move |w| (p.clone(), w.clone()))).collect();
            jobs.par_iter()
                .map(|(p, w)| {
                    let r = no_body::verify_main_theorem(n, p, w)?;
                    Ok((r.pass, serde_json::to_value(&r).expect("report serializes")))
                })
                .collect::<Result<_, Error>>()?
        }
        Check::Saturation => {
            let lambda = c.lambda_or(Some(DominantWeight::rho(TypeTag::A, n)))?;
            let k = level.unwrap_or(3);
            parts
                .par_iter()
                .map(|p| {
                    let r = no_body::saturation_check(n, p, &lambda, k)?;
                    Ok((r.pass, serde_json::to_value(&r).expect("report serializes")))
                })
                .collect::<Result<_, Error>>()?
        }
        Check::Lemma63 => parts
            .par_iter()
            .map(|p| {
                let chart = Chart::new(TypeTag::A, n, p)?;
                let id = VarOrder::identity(chart.nvars());
                let mut checks = 0usize;
                let mut mismatches = Vec::new();
                for k in 1..=n {
                    for b in Column::all(n, k) {
                        let comb = comb_valuation(n, k, &b, p)?;
                        let direct = chainorder::low_val(&no_body::fundamental_section_in(&chart, k, &b), &id)?;
                        checks += 1;
                        if comb.values != direct {
                            mismatches.push(json!({"k": k, "column": b.to_string(), "combinatorial": comb.values, "direct": direct}));
                        }
                    }
                }
                let pass = mismatches.is_empty();
                Ok((pass, json!({"partition": p.mask(), "checks": checks, "mismatches": mismatches, "pass": pass})))
            })
            .collect::<Result<_, Error>>()?,
        Check::Basis => {
            let lambda = c.lambda()?;
            parts
                .par_iter()
                .map(|p| {
                    let idx = basis_indices(n, &lambda, p)?;
                    let rank = rank_check(&basis_vectors(n, &lambda, p)?)?;
                    let pass = rank == idx.len();
                    Ok((pass, json!({"partition": p.mask(), "vectors": idx.len(), "rank": rank, "indices": idx, "pass": pass})))
                })
                .collect::<Result<_, Error>>()?
        }
        Check::Highest => {
            let lambda = c.lambda_or(Some(DominantWeight::rho(TypeTag::A, n)))?;
            let k = level.unwrap_or(2);
            if k < 2 {
                return Err(usage("highest needs level at least 2"));
            }
            let gt = vertices(&mco_hrep(&gt_poset(TypeTag::A, n, &lambda)?, &Partition::all_order(c.num_coords()?))?)?;
            parts
                .par_iter()
                .map(|p| {
                    let body = no_body::highest_body(n, p, &lambda, k)?;
                    let equivalent = unimodular_equiv(&body.polytope, &gt)?.is_some();
                    let pass = body.stabilized && equivalent;
                    Ok((
                        pass,
                        json!({"partition": p.mask(), "level": k, "stabilized": body.stabilized,
                               "equivalent_to_gt": equivalent, "vertices": body.polytope, "pass": pass}),
                    ))
                })
                .collect::<Result<_, Error>>()?
        }
    };
    let pass = results.iter().all(|(ok, _)| *ok);
    let passed = results.iter().filter(|(ok, _)| *ok).count();
    let body = json!({
        "n": n,
        "checks": results.len(),
        "passed": passed,
        "results": results.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    Ok(Report::new(&name, pass, body))
}

fn cmd_table1() -> Run {
    let cells = no_body::table1()?;
    let perms = no_body::permutations(4);
    let mut rows = Vec::new();
    let mut diffs = Vec::new();
    for (r, perm) in perms.iter().enumerate() {
        let labels: Vec<TypeCLabel> = (0..3).map(|c| cells[3 * r + c].label).collect();
        for (c, &got) in labels.iter().enumerate() {
            let want = no_body::golden_label(r, c);
            if got != want {
                diffs.push(json!({"order": perm, "partition": c + 1, "computed": got, "expected": want}));
            }
        }
        rows.push(json!({"order": perm, "labels": labels}));
    }
    let matched = 72 - diffs.len();
    let pass = diffs.is_empty();
    let body = json!({
        "rows": rows,
        "cells": cells,
        "matched": matched,
        "differences": diffs,
    });
    Ok(Report::new("table1", pass, body))
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Polytope { c } => cmd_polytope(c),
        Command::Transfer { c, point } => cmd_transfer(c, point),
        Command::Omega { c } => cmd_omega(c),
        Command::Valuation { c, order, mode, level, poly } => cmd_valuation(c, order.as_deref(), *mode, *level, poly.as_deref()),
        Command::Verify { check, c, all_partitions, level } => cmd_verify(*check, c, *all_partitions, *level),
        Command::Table1 => cmd_table1(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = if cli.markdown { Format::Markdown } else { Format::Json };
    match run(&cli) {
        Ok(report) => {
            let text = report.render(format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
