//! Command-line front end: parse permutations, run the library operations,
//! manage the table cache, and print text or JSON reports.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use klstab::hecke::{Basis, HeckeElt};
use klstab::kl::{KlContext, DEFAULT_RANK_CEILING};
use klstab::rsk;
use klstab::stab;
use klstab::symgroup::Permutation;
use klstab::{Error, Result};

const CACHE_ENV: &str = "KLSTAB_CACHE";

#[derive(Parser)]
#[command(name = "klstab", version, about = "Exact Kazhdan-Lusztig combinatorics for symmetric groups")]
struct Cli {
    /// Feasibility ceiling on the ambient rank.
    #[arg(long, global = true, default_value_t = DEFAULT_RANK_CEILING)]
    ceiling: usize,
    /// Cache file for computed tables (overrides KLSTAB_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Disable the cache even when KLSTAB_CACHE is set.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The Kazhdan-Lusztig polynomial p_{x,y}.
    Klpoly { x: String, y: String },
    /// The mu-function value mu(x, y).
    Mu { x: String, y: String },
    /// The dual-KL expansion of ^H_x _H_y at a rank, or its stabilized value.
    Theta {
        x: String,
        y: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        stabilized: bool,
    },
    /// Scan the expansion across a rank range and check the stability claims.
    Scan {
        x: String,
        y: String,
        /// Inclusive rank range, e.g. 4..6.
        #[arg(long)]
        ranks: String,
    },
    /// The Robinson-Schensted tableau pair of w at a rank.
    Rsk {
        w: String,
        #[arg(long)]
        rank: usize,
    },
    /// Multiply two basis elements (H_a H_b or _H_a _H_b).
    Mult {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = MultBasis::Standard)]
        basis: MultBasis,
    },
    /// The cell decomposition of S_n.
    Cells {
        #[arg(long)]
        rank: usize,
    },
    /// Run a named invariant suite; exits 0 iff it passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MultBasis {
    Standard,
    Kl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    #[value(name = "mu-properties")]
    MuProperties,
    #[value(name = "lemma-3.1")]
    Lemma31,
    #[value(name = "cell-constraint")]
    CellConstraint,
    Positivity,
    #[value(name = "rs-bijectivity")]
    RsBijectivity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => 2,
                Error::RankExceeded { .. } | Error::CoefficientOverflow => 3,
                Error::RouteDisagreement { .. } => 4,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if cli.ceiling < 2 {
        return Err(Error::Parse("--ceiling must be at least 2".into()));
    }
    let cache_path = if cli.no_cache {
        None
    } else {
        cli.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
    };
    let mut ctx = match &cache_path {
        Some(path) if path.exists() => KlContext::load(path, cli.ceiling)?,
        _ => KlContext::new(cli.ceiling),
    };

    let code = dispatch(&cli, &mut ctx)?;

    if let Some(path) = &cache_path {
        if ctx.is_dirty() {
            ctx.save(path)?;
        }
    }
    Ok(code)
}

fn dispatch(cli: &Cli, ctx: &mut KlContext) -> Result<u8> {
    match &cli.cmd {
        Cmd::Klpoly { x, y } => {
            let (x, y) = (Permutation::parse(x)?, Permutation::parse(y)?);
            let p = ctx.kl_poly(&x, &y)?;
            if cli.json {
                println!("{}", p.to_json());
            } else {
                println!("{p}");
            }
            Ok(0)
        }
        Cmd::Mu { x, y } => {
            let (x, y) = (Permutation::parse(x)?, Permutation::parse(y)?);
            println!("{}", ctx.mu(&x, &y)?);
            Ok(0)
        }
        Cmd::Theta { x, y, rank, stabilized } => {
            let (x, y) = (Permutation::parse(x)?, Permutation::parse(y)?);
            let exp = match (rank, stabilized) {
                (Some(k), false) => {
                    if *k > ctx.rank_ceiling() {
                        return Err(Error::RankExceeded { needed: *k, ceiling: ctx.rank_ceiling() });
                    }
                    stab::theta_on_simple(ctx, &x, &y, *k)?
                }
                (None, true) => stab::stabilized_theta(ctx, &x, &y)?,
                _ => return Err(Error::Parse("pass exactly one of --rank K or --stabilized".into())),
            };
            if cli.json {
                println!("{}", exp.to_json());
            } else {
                println!("{exp}");
            }
            Ok(0)
        }
        Cmd::Scan { x, y, ranks } => {
            let (x, y) = (Permutation::parse(x)?, Permutation::parse(y)?);
            let ranks = parse_rank_range(ranks)?;
            if let Some(&hi) = ranks.last() {
                if hi > ctx.rank_ceiling() {
                    return Err(Error::RankExceeded { needed: hi, ceiling: ctx.rank_ceiling() });
                }
            }
            let report = stab::stability_scan(ctx, &x, &y, &ranks)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                for exp in &report.expansions {
                    println!("rank {}: {}", exp.rank(), exp);
                }
                match report.stabilized_from {
                    Some(r) => println!("stabilized from rank {r}"),
                    None => println!("not stabilized within the scanned ranks"),
                }
                println!(
                    "support bound {} ({}); observed max support {}",
                    report.support_bound,
                    if report.support_bound_ok { "ok" } else { "VIOLATED" },
                    report.max_support_seen
                );
                for v in &report.violations {
                    println!("violation: {v}");
                }
            }
            Ok(0)
        }
        Cmd::Rsk { w, rank } => {
            let w = Permutation::parse(w)?;
            let (p, q) = rsk::rs(&w, *rank)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "w": w.window(),
                        "rank": rank,
                        "P": p.rows(),
                        "Q": q.rows(),
                        "shape": p.shape().parts(),
                    })
                );
            } else {
                println!("P:\n{p}\nQ:\n{q}\nshape: {}", p.shape());
            }
            Ok(0)
        }
        Cmd::Mult { a, b, basis } => {
            let (a, b) = (Permutation::parse(a)?, Permutation::parse(b)?);
            let rank = a.support_max().max(b.support_max()).max(1);
            if rank > ctx.rank_ceiling() {
                return Err(Error::RankExceeded { needed: rank, ceiling: ctx.rank_ceiling() });
            }
            let out = match basis {
                MultBasis::Standard => {
                    let ha = HeckeElt::basis_elt(Basis::Standard, rank, &a)?;
                    ha.mult_std_basis_right(&b)?
                }
                MultBasis::Kl => {
                    let mut out = HeckeElt::zero(Basis::Kl, rank);
                    for (c, q) in ctx.gamma(&a, &b)? {
                        out.add_term(&c, &q)?;
                    }
                    out
                }
            };
            if cli.json {
                println!("{}", out.to_json());
            } else {
                println!("{out}");
            }
            Ok(0)
        }
        Cmd::Cells { rank } => {
            if *rank > ctx.rank_ceiling() {
                return Err(Error::RankExceeded { needed: *rank, ceiling: ctx.rank_ceiling() });
            }
            print_cells(*rank, cli.json)?;
            Ok(0)
        }
        Cmd::Verify { suite, rank } => run_suite(ctx, *suite, *rank),
    }
}

/// Inclusive `a..b` rank range.
fn parse_rank_range(text: &str) -> Result<Vec<usize>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected a rank range like 4..6, got `{text}`")))?;
    let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad rank `{a}`")))?;
    let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad rank `{b}`")))?;
    if a > b {
        return Err(Error::Parse(format!("empty rank range {a}..{b}")));
    }
    Ok((a..=b).collect())
}

fn print_cells(rank: usize, json: bool) -> Result<()> {
    // Group S_rank by shape (two-sided cells), then by Q (left cells).
    let mut by_shape: BTreeMap<rsk::Partition, BTreeMap<rsk::StandardTableau, Vec<Permutation>>> =
        BTreeMap::new();
    for w in Permutation::enumerate(rank) {
        let (p, q) = rsk::rs(&w, rank)?;
        by_shape.entry(p.shape()).or_default().entry(q).or_default().push(w);
    }
    if json {
        let cells: Vec<serde_json::Value> = by_shape
            .iter()
            .map(|(shape, lefts)| {
                serde_json::json!({
                    "shape": shape.parts(),
                    "left_cells": lefts
                        .values()
                        .map(|ws| ws.iter().map(|w| w.window()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        println!("{}", serde_json::json!({ "rank": rank, "two_sided_cells": cells }));
    } else {
        for (shape, lefts) in &by_shape {
            let total: usize = lefts.values().map(Vec::len).sum();
            println!("shape {shape}: {total} elements, {} left cells", lefts.len());
            for ws in lefts.values() {
                let words: Vec<String> = ws.iter().map(|w| w.word_string()).collect();
                println!("  {{{}}}", words.join(", "));
            }
        }
    }
    Ok(())
}

fn run_suite(ctx: &mut KlContext, suite: Suite, rank: Option<usize>) -> Result<u8> {
    let (name, failures) = match suite {
        Suite::MuProperties => ("mu-properties", suite_mu_properties(ctx, rank.unwrap_or(4))?),
        Suite::Lemma31 => ("lemma-3.1", suite_lemma_31(ctx, rank.unwrap_or(5))?),
        Suite::CellConstraint => ("cell-constraint", suite_cell_constraint(ctx, rank.unwrap_or(4))?),
        Suite::Positivity => ("positivity", suite_positivity(ctx, rank.unwrap_or(4))?),
        Suite::RsBijectivity => ("rs-bijectivity", suite_rs_bijectivity(rank.unwrap_or(6))?),
    };
    if failures.is_empty() {
        println!("suite {name}: PASS");
        Ok(0)
    } else {
        for f in &failures {
            println!("suite {name}: FAIL: {f}");
        }
        Ok(1)
    }
}

fn suite_mu_properties(ctx: &mut KlContext, n: usize) -> Result<Vec<String>> {
    let all = Permutation::enumerate(n);
    let mut failures = Vec::new();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let (x, u) = (&all[i], &all[j]);
            let mu = ctx.mu(x, u)?;
            if mu != ctx.mu(u, x)? {
                failures.push(format!("mu not symmetric at ({x}, {u})"));
            }
            if mu < 0 {
                failures.push(format!("mu({x}, {u}) = {mu} negative"));
            }
            let (lo, hi) = if x.length() <= u.length() { (x, u) } else { (u, x) };
            if !lo.bruhat_leq(hi) {
                if mu != 0 {
                    failures.push(format!("mu nonzero on incomparable pair ({x}, {u})"));
                }
                continue;
            }
            if hi.length() == lo.length() + 1 && mu != 1 {
                failures.push(format!("cover ({lo}, {hi}) has mu = {mu}, expected 1"));
            }
            if mu != 0 && hi.length() > lo.length() + 1 {
                let lds_ok = hi.left_descents().iter().all(|s| lo.has_left_descent(*s));
                let rds_ok = hi.right_descents().iter().all(|s| lo.has_right_descent(*s));
                if !lds_ok || !rds_ok {
                    failures.push(format!("descent containment fails at ({lo}, {hi}) with mu = {mu}"));
                }
            }
        }
    }
    Ok(failures)
}

fn suite_lemma_31(ctx: &mut KlContext, n: usize) -> Result<Vec<String>> {
    Ok(stab::check_mu_support_lemma(ctx, n)?
        .into_iter()
        .map(|(a, b)| format!("m({b}) > 2 m({a}) with mu != 0"))
        .collect())
}

fn suite_cell_constraint(ctx: &mut KlContext, k: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for x in Permutation::enumerate(3) {
        for y in Permutation::enumerate(3) {
            let exp = stab::theta_on_simple(ctx, &x, &y, k)?;
            for w in stab::check_cell_constraint(&exp)? {
                failures.push(format!("term {w} of ^H_{x} _H_{y} at rank {k} breaks the cell constraint"));
            }
        }
    }
    Ok(failures)
}

fn suite_positivity(ctx: &mut KlContext, n: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for y in Permutation::enumerate(n) {
        for x in Permutation::enumerate(n) {
            let p = ctx.kl_poly(&x, &y)?;
            if !p.is_nonnegative() {
                failures.push(format!("p_{{{x},{y}}} = {p} has a negative coefficient"));
            }
        }
    }
    for a in Permutation::enumerate(3) {
        for b in Permutation::enumerate(3) {
            for (c, q) in ctx.gamma(&a, &b)? {
                if !q.is_nonnegative() {
                    failures.push(format!("gamma_{{{a},{b}}}^{{{c}}} = {q} has a negative coefficient"));
                }
            }
        }
    }
    Ok(failures)
}

fn suite_rs_bijectivity(max_n: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let mut seen = std::collections::HashSet::new();
        for w in Permutation::enumerate(n) {
            let (p, q) = rsk::rs(&w, n)?;
            if p.shape() != q.shape() {
                failures.push(format!("rs({w}) has mismatched shapes"));
            }
            if rsk::rs_inverse(&p, &q)? != w {
                failures.push(format!("rs round trip fails at {w}"));
            }
            seen.insert((p, q));
        }
        let fact: usize = (1..=n).product();
        if seen.len() != fact {
            failures.push(format!("rs not injective on S_{n}: {} pairs vs {}!", seen.len(), fact));
        }
    }
    Ok(failures)
}
