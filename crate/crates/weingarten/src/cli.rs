//! Command-line front end: exact Weingarten values, moments, tables,
//! asymptotics, Monte Carlo verification and a self-test suite.
//!
//! Exit codes: 0 success, 1 mathematical failure (pole at the requested
//! dimension, cap exceeded, verification mismatch), 2 usage error.

use crate::error::WgError;
use crate::montecarlo::{
    estimate_moments_batch, sample_haar, symplectic_residual, unitarity_residual, Group,
    MomentQuery, SampleEstimate,
};
use crate::orthogonal::{
    golden_orthogonal_table, gram_times_wg_is_identity, moment_orthogonal, moment_orthogonal_at,
    moment_symplectic, wg_orthogonal, wg_orthogonal_leading, wg_orthogonal_with_cap,
    wg_symplectic, OrthoMomentQuery, ORTHO_TABLE_CAP,
};
use crate::pairing::{dimension_identity_check, enumerate_pairings};
use crate::rational::{BigRat, RationalFunction};
use crate::symm::{double_factorial_odd, moebius_of_cycle_type, partitions_of, Partition};
use crate::unitary::{
    moment_unitary_with_cap, wg_unitary, wg_unitary_leading, UnitaryMomentQuery, UnitaryWgTable,
    UNITARY_MOMENT_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "weingarten",
    version,
    about = "Exact Weingarten calculus for unitary, orthogonal and symplectic groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Unitary,
    Orthogonal,
    Symplectic,
}

impl GroupArg {
    fn mc_group(self) -> Group {
        match self {
            GroupArg::Unitary => Group::Unitary,
            GroupArg::Orthogonal => Group::Orthogonal,
            GroupArg::Symplectic => Group::Symplectic,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a Weingarten value (or the whole table for one n)
    Wg(WgArgs),
    /// Exact moment of a product of matrix entries
    Moment(MomentArgs),
    /// Full Weingarten table for one n
    Table(TableArgs),
    /// Leading-order behavior of every Weingarten entry for one n
    Asymptotics(AsymArgs),
    /// Compare exact moments against seeded Monte Carlo estimates
    Verify(VerifyArgs),
    /// Run the built-in golden-table and invariant suites
    Selftest,
}

#[derive(Args)]
struct WgArgs {
    #[arg(value_enum)]
    group: GroupArg,
    /// moment half-degree n
    #[arg(long)]
    n: usize,
    /// conjugacy class as "k1,k2,..." (unitary)
    #[arg(long)]
    class: Option<String>,
    /// coset type as "k1,k2,..." (orthogonal/symplectic)
    #[arg(long = "type")]
    coset_type: Option<String>,
    /// evaluate at an integer dimension instead of printing the symbolic form
    #[arg(long)]
    at: Option<i64>,
    /// machine-readable output
    #[arg(long)]
    json: bool,
    /// override the table-size cap
    #[arg(long, env = "WEINGARTEN_MAX_N")]
    max_n: Option<usize>,
}

#[derive(Args)]
struct MomentArgs {
    #[arg(value_enum)]
    group: GroupArg,
    /// row indices "i1,i2,..."
    #[arg(long)]
    i: String,
    /// column indices "j1,j2,..."
    #[arg(long)]
    j: String,
    /// row indices of conjugated factors (unitary only)
    #[arg(long)]
    ibar: Option<String>,
    /// column indices of conjugated factors (unitary only)
    #[arg(long)]
    jbar: Option<String>,
    /// evaluate at an integer dimension (required for symplectic)
    #[arg(long)]
    at: Option<i64>,
    #[arg(long)]
    json: bool,
    /// override the moment-degree cap
    #[arg(long, env = "WEINGARTEN_MAX_N")]
    max_n: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: usize,
    /// LaTeX rows instead of plain text
    #[arg(long, conflicts_with = "json")]
    latex: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, env = "WEINGARTEN_MAX_N")]
    max_n: Option<usize>,
}

#[derive(Args)]
struct AsymArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// dimension parameter (matrix size d, or 2d for symplectic)
    #[arg(long)]
    d: usize,
    /// maximum moment half-degree of the generated queries
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// number of random queries
    #[arg(long, default_value_t = 20)]
    queries: usize,
    #[arg(long)]
    json: bool,
}

enum CliError {
    Usage(String),
    Math(WgError),
    VerifyFailed,
}

impl From<WgError> for CliError {
    fn from(e: WgError) -> Self {
        match e {
            WgError::Parse(_) | WgError::IndexOutOfRange(_) => CliError::Usage(e.to_string()),
            other => CliError::Math(other),
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Math(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(CliError::VerifyFailed) => 1,
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Wg(a) => cmd_wg(a),
        Cmd::Moment(a) => cmd_moment(a),
        Cmd::Table(a) => cmd_table(a),
        Cmd::Asymptotics(a) => cmd_asymptotics(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Selftest => cmd_selftest(),
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad partition part {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parts.iter().any(|&p| p == 0) {
        return Err(CliError::Usage("partition parts must be positive".into()));
    }
    Ok(Partition::from_unsorted(parts))
}

fn parse_indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad index {t:?}")))
        })
        .collect()
}

fn emit_rf(rf: &RationalFunction, at: Option<i64>, json: bool) -> Result<(), CliError> {
    if let Some(d) = at {
        let v = rf.eval(&BigRational::from_integer(BigInt::from(d)))?;
        if json {
            println!("{}", serde_json::json!({ "at": d, "value": v.to_string() }));
        } else {
            println!("{v}");
        }
    } else if json {
        println!("{}", rf.to_json());
    } else {
        println!("{}", rf.factored());
    }
    Ok(())
}

fn cmd_wg(a: WgArgs) -> Result<(), CliError> {
    match a.group {
        GroupArg::Unitary => {
            let class = a
                .class
                .as_deref()
                .ok_or_else(|| CliError::Usage("--class is required for wg unitary".into()))?;
            let mu = parse_partition(class)?;
            if mu.n() != a.n {
                return Err(CliError::Usage(format!(
                    "--class {mu} is not a partition of n = {}",
                    a.n
                )));
            }
            let rf = wg_unitary(a.n, &mu)?;
            emit_rf(&rf, a.at, a.json)
        }
        GroupArg::Orthogonal | GroupArg::Symplectic => {
            let cap = a.max_n.unwrap_or(ORTHO_TABLE_CAP);
            if a.n == 0 || a.n > cap {
                return Err(CliError::Math(WgError::CapExceeded {
                    what: "wg table",
                    n: a.n,
                    cap,
                }));
            }
            let table = if a.group == GroupArg::Orthogonal {
                wg_orthogonal_with_cap(a.n, cap)?
            } else {
                let t = wg_orthogonal_with_cap(a.n, cap)?;
                crate::orthogonal::OrthoWgTable {
                    n: t.n,
                    by_coset_type: t
                        .by_coset_type
                        .into_iter()
                        .map(|(k, v)| (k, v.substitute_neg()))
                        .collect(),
                }
            };
            if let Some(t) = a.coset_type.as_deref() {
                let t = parse_partition(t)?;
                if t.n() != a.n {
                    return Err(CliError::Usage(format!(
                        "--type {t} is not a partition of n = {}",
                        a.n
                    )));
                }
                emit_rf(&table.by_coset_type[&t], a.at, a.json)
            } else {
                for (t, rf) in &table.by_coset_type {
                    if a.json {
                        println!(
                            "{}",
                            serde_json::json!({ "type": t.parts(), "wg": rf.to_json() })
                        );
                    } else {
                        println!("Wg({t}) = {}", rf.factored());
                    }
                }
                Ok(())
            }
        }
    }
}

fn cmd_moment(a: MomentArgs) -> Result<(), CliError> {
    let i = parse_indices(&a.i)?;
    let j = parse_indices(&a.j)?;
    match a.group {
        GroupArg::Unitary => {
            let ibar = a.ibar.as_deref().map(parse_indices).transpose()?.unwrap_or_default();
            let jbar = a.jbar.as_deref().map(parse_indices).transpose()?.unwrap_or_default();
            let q = UnitaryMomentQuery::new(i, j, ibar, jbar)?;
            let cap = a.max_n.unwrap_or(UNITARY_MOMENT_CAP);
            let rf = moment_unitary_with_cap(&q, cap)?;
            emit_rf(&rf, a.at, a.json)
        }
        GroupArg::Orthogonal => {
            if a.ibar.is_some() || a.jbar.is_some() {
                return Err(CliError::Usage("--ibar/--jbar apply only to unitary".into()));
            }
            let q = OrthoMomentQuery::new(i, j)?;
            match a.at {
                Some(d) if d >= 1 => {
                    let v = moment_orthogonal_at(&q, d as usize)?;
                    if a.json {
                        println!("{}", serde_json::json!({ "at": d, "value": v.to_string() }));
                    } else {
                        println!("{v}");
                    }
                    Ok(())
                }
                _ => emit_rf(&moment_orthogonal(&q)?, a.at, a.json),
            }
        }
        GroupArg::Symplectic => {
            if a.ibar.is_some() || a.jbar.is_some() {
                return Err(CliError::Usage("--ibar/--jbar apply only to unitary".into()));
            }
            let d = a.at.ok_or_else(|| {
                CliError::Usage("--at <d> is required for symplectic moments".into())
            })?;
            if d < 1 {
                return Err(CliError::Usage("--at must be a positive dimension".into()));
            }
            let q = OrthoMomentQuery::new(i, j)?;
            let v = moment_symplectic(&q, d as usize)?;
            if a.json {
                println!("{}", serde_json::json!({ "at": d, "value": v.to_string() }));
            } else {
                println!("{v}");
            }
            Ok(())
        }
    }
}

fn cmd_table(a: TableArgs) -> Result<(), CliError> {
    let entries: Vec<(Partition, RationalFunction)> = match a.group {
        GroupArg::Unitary => UnitaryWgTable::build(a.n).entries.into_iter().collect(),
        GroupArg::Orthogonal => wg_orthogonal_with_cap(a.n, a.max_n.unwrap_or(ORTHO_TABLE_CAP))?
            .by_coset_type
            .into_iter()
            .collect(),
        GroupArg::Symplectic => wg_symplectic(a.n)?.by_coset_type.into_iter().collect(),
    };
    if a.json {
        let rows: Vec<serde_json::Value> = entries
            .iter()
            .map(|(t, rf)| serde_json::json!({ "type": t.parts(), "wg": rf.to_json() }))
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "group": format!("{:?}", a.group).to_lowercase(),
                "n": a.n,
                "entries": rows,
            })
        );
    } else if a.latex {
        for (t, rf) in &entries {
            let (num, den) = rf.factored_pair();
            if den == "1" {
                println!("\\mathrm{{Wg}}({t},d) &=& {num}\\\\");
            } else {
                println!("\\mathrm{{Wg}}({t},d) &=& \\frac{{{num}}}{{{den}}}\\\\");
            }
        }
    } else {
        for (t, rf) in &entries {
            println!("Wg({t}) = {}", rf.factored());
        }
    }
    Ok(())
}

fn cmd_asymptotics(a: AsymArgs) -> Result<(), CliError> {
    for t in partitions_of(a.n) {
        match a.group {
            GroupArg::Unitary => {
                let (exp, moeb) = wg_unitary_leading(a.n, &t)?;
                println!("Wg({t}) ~ {moeb} * d^-{exp}  (+ O(d^-{}))", exp + 2);
            }
            GroupArg::Orthogonal => {
                let (exp, moeb) = wg_orthogonal_leading(a.n, &t)?;
                println!("Wg({t}) ~ {moeb} * d^-{exp}");
            }
            GroupArg::Symplectic => {
                // d -> -d: order is preserved, leading coefficient flips with
                // the parity of the order
                let (exp, moeb) = wg_orthogonal_leading(a.n, &t)?;
                let m = if exp % 2 == 1 { -moeb } else { moeb };
                println!("Wg({t}) ~ {m} * d^-{exp}");
            }
        }
    }
    Ok(())
}

/// Generates deterministic in-range random queries for a verify cell.
pub fn random_queries(
    group: Group,
    d: usize,
    max_n: usize,
    count: usize,
    seed: u64,
) -> Vec<MomentQuery> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX); // disjoint from the sampling streams
    let size = match group {
        Group::Symplectic => 2 * d,
        _ => d,
    };
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let n = rng.gen_range(1..=max_n);
        // alternate between the full index range and a two-letter alphabet,
        // so that plenty of queries have nonzero exact moments
        let alphabet: Vec<usize> = if k % 2 == 0 && size > 2 {
            let a = rng.gen_range(1..=size);
            let b = rng.gen_range(1..=size);
            vec![a, b]
        } else {
            (1..=size).collect()
        };
        let draw = |rng: &mut ChaCha8Rng, len: usize| -> Vec<usize> {
            (0..len)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                .collect()
        };
        let q = match group {
            Group::Unitary => MomentQuery::Unitary {
                i: draw(&mut rng, n),
                j: draw(&mut rng, n),
                i_bar: draw(&mut rng, n),
                j_bar: draw(&mut rng, n),
            },
            Group::Orthogonal => MomentQuery::Orthogonal {
                i: draw(&mut rng, 2 * n),
                j: draw(&mut rng, 2 * n),
            },
            Group::Symplectic => MomentQuery::Symplectic {
                i: draw(&mut rng, 2 * n),
                j: draw(&mut rng, 2 * n),
            },
        };
        out.push(q);
    }
    out
}

/// Exact value of a Monte Carlo query at an integer dimension.
pub fn exact_moment_value(q: &MomentQuery, d: usize) -> Result<BigRat, WgError> {
    match q {
        MomentQuery::Unitary { i, j, i_bar, j_bar } => {
            let query =
                UnitaryMomentQuery::new(i.clone(), j.clone(), i_bar.clone(), j_bar.clone())?;
            moment_unitary_with_cap(&query, UNITARY_MOMENT_CAP)?
                .eval(&BigRational::from_integer(BigInt::from(d)))
        }
        MomentQuery::Orthogonal { i, j } => {
            moment_orthogonal_at(&OrthoMomentQuery::new(i.clone(), j.clone())?, d)
        }
        MomentQuery::Symplectic { i, j } => {
            moment_symplectic(&OrthoMomentQuery::new(i.clone(), j.clone())?, d)
        }
    }
}

fn describe_query(q: &MomentQuery) -> String {
    let fmt = |v: &[usize]| {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    };
    match q {
        MomentQuery::Unitary { i, j, i_bar, j_bar } => {
            format!("i={} j={} ibar={} jbar={}", fmt(i), fmt(j), fmt(i_bar), fmt(j_bar))
        }
        MomentQuery::Orthogonal { i, j } | MomentQuery::Symplectic { i, j } => {
            format!("i={} j={}", fmt(i), fmt(j))
        }
    }
}

fn rat_to_f64(r: &BigRat) -> f64 {
    let num = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

fn cmd_verify(a: VerifyArgs) -> Result<(), CliError> {
    let group = a.group.mc_group();
    if a.d == 0 {
        return Err(CliError::Usage("--d must be positive".into()));
    }
    let queries = random_queries(group, a.d, a.n, a.queries, a.seed);
    let estimates = estimate_moments_batch(group, a.d, &queries, a.samples, a.seed)?;
    let mut worst: f64 = 0.0;
    let mut rows = Vec::new();
    for (q, est) in queries.iter().zip(&estimates) {
        let exact = exact_moment_value(q, a.d)?;
        let z = z_score(&exact, est);
        worst = worst.max(z);
        rows.push((q, exact, *est, z));
    }
    if a.json {
        let out: Vec<serde_json::Value> = rows
            .iter()
            .map(|(q, exact, est, z)| {
                serde_json::json!({
                    "query": describe_query(q),
                    "exact": exact.to_string(),
                    "estimate": [est.mean.re, est.mean.im],
                    "stderr": est.stderr,
                    "z": z,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "rows": out, "samples": a.samples, "seed": a.seed, "pass": worst <= 5.0 })
        );
    } else {
        println!(
            "{:<44} {:>12} {:>12} {:>10} {:>8}",
            "query", "exact", "estimate", "stderr", "z"
        );
        for (q, exact, est, z) in &rows {
            println!(
                "{:<44} {:>12.6} {:>12.6} {:>10.2e} {:>8.2}",
                describe_query(q),
                rat_to_f64(exact),
                est.mean.re,
                est.stderr,
                z
            );
        }
        println!(
            "{} ({} queries, worst |z| = {:.2})",
            if worst <= 5.0 { "PASS" } else { "FAIL" },
            rows.len(),
            worst
        );
    }
    if worst <= 5.0 {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

fn z_score(exact: &BigRat, est: &SampleEstimate) -> f64 {
    let e = rat_to_f64(exact);
    let diff = ((est.mean.re - e).powi(2) + est.mean.im.powi(2)).sqrt();
    if est.stderr == 0.0 {
        if diff == 0.0 { 0.0 } else { f64::INFINITY }
    } else {
        diff / est.stderr
    }
}

fn cmd_selftest() -> Result<(), CliError> {
    let mut ok = true;
    let mut check = |name: &str, pass: bool| {
        println!("{} {name}", if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    };

    // published orthogonal table, n <= 4
    let golden = golden_orthogonal_table();
    let mut golden_ok = true;
    for n in 1..=4usize {
        let table = wg_orthogonal(n).map_err(CliError::Math)?;
        for (t, expect) in &golden {
            if t.n() == n && &table.by_coset_type[t] != expect {
                golden_ok = false;
            }
        }
    }
    check("golden orthogonal table (n <= 4)", golden_ok);

    // symplectic substitution re-reduces
    let symp_ok = (1..=4usize).all(|n| wg_symplectic(n).is_ok());
    check("symplectic d -> -d substitution (n <= 4)", symp_ok);

    // unitary n = 2 values and the prolongated four-factor integral
    let two = Partition::new(vec![2]).expect("valid");
    let oneone = Partition::new(vec![1, 1]).expect("valid");
    let wg2 = wg_unitary(2, &oneone).map_err(CliError::Math)?;
    let wg2t = wg_unitary(2, &two).map_err(CliError::Math)?;
    let q = UnitaryMomentQuery::new(vec![1, 1], vec![1, 1], vec![1, 1], vec![1, 1])
        .map_err(CliError::Math)?;
    let m = moment_unitary_with_cap(&q, UNITARY_MOMENT_CAP).map_err(CliError::Math)?;
    let unitary_ok = wg2.factored() == "1/((d-1)(d+1))"
        && wg2t.factored() == "-1/(d(d-1)(d+1))"
        && m.factored() == "2/(d(d+1))"
        && m.eval(&BigRational::from_integer(BigInt::from(1)))
            .map(|v| v == BigRat::from_integer(BigInt::from(1)))
            .unwrap_or(false);
    check("unitary n = 2 values and prolongation at d = 1", unitary_ok);

    // Gram * Wg = I
    let gram_ok = (1..=3usize).all(|n| gram_times_wg_is_identity(n).unwrap_or(false));
    check("Gram x Wg = identity (n <= 3)", gram_ok);

    // counting invariants
    let count_ok = (1..=5usize).all(|n| {
        enumerate_pairings(n).len() == usize::try_from(double_factorial_odd(n)).unwrap_or(0)
            && dimension_identity_check(n)
    });
    check("pairing count and dimension identity (n <= 5)", count_ok);

    // sampler residuals
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut resid_ok = true;
    for d in 1..=4usize {
        let u = sample_haar(Group::Unitary, d, &mut rng);
        let o = sample_haar(Group::Orthogonal, d, &mut rng);
        let s = sample_haar(Group::Symplectic, d, &mut rng);
        resid_ok &= unitarity_residual(&u) < 1e-12
            && unitarity_residual(&o) < 1e-12
            && symplectic_residual(&s) < 1e-10;
    }
    check("sampler residuals", resid_ok);

    // asymptotic leading terms, n <= 3
    let asym_ok = (1..=3usize).all(|n| {
        partitions_of(n).iter().all(|t| {
            let l: usize = t.parts().iter().map(|&k| k - 1).sum();
            wg_unitary_leading(n, t).map(|(e, m)| e == 2 * n - t.len() && m == moebius_of_cycle_type(t)).unwrap_or(false)
                && wg_orthogonal_leading(n, t).map(|(e, _)| e == n + l).unwrap_or(false)
        })
    });
    check("leading-order asymptotics (n <= 3)", asym_ok);

    if ok {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_queries_are_deterministic_and_in_range() {
        let a = random_queries(Group::Orthogonal, 3, 3, 20, 7);
        let b = random_queries(Group::Orthogonal, 3, 3, 20, 7);
        assert_eq!(a.len(), 20);
        for (qa, qb) in a.iter().zip(&b) {
            match (qa, qb) {
                (
                    MomentQuery::Orthogonal { i: ia, j: ja },
                    MomentQuery::Orthogonal { i: ib, j: jb },
                ) => {
                    assert_eq!((ia, ja), (ib, jb));
                    assert!(ia.len() <= 6 && ia.len() % 2 == 0);
                    assert!(ia.iter().chain(ja).all(|&x| (1..=3).contains(&x)));
                }
                _ => panic!("wrong variant"),
            }
        }
    }

    #[test]
    fn exact_values_cover_all_groups() {
        let q = MomentQuery::Unitary { i: vec![1], j: vec![1], i_bar: vec![1], j_bar: vec![1] };
        assert_eq!(exact_moment_value(&q, 4).unwrap(), BigRat::new(1.into(), 4.into()));
        let q = MomentQuery::Orthogonal { i: vec![1, 1], j: vec![1, 1] };
        assert_eq!(exact_moment_value(&q, 4).unwrap(), BigRat::new(1.into(), 4.into()));
        let q = MomentQuery::Symplectic { i: vec![1, 2], j: vec![1, 2] };
        assert_eq!(exact_moment_value(&q, 1).unwrap(), BigRat::new(1.into(), 2.into()));
    }
}
