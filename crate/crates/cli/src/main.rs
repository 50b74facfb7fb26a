use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clanhess::clan::Clan;
use clanhess::hess::{
    classify_irreducibles, hess_dimension, m_of_w, HessScanner, HessenbergVector,
};
use clanhess::perm::{factorization_pairs, phi, Permutation};
use clanhess::poset::InclusionPoset;
use clanhess::schubert::{brion_class, monk_product, multiplicity_scan, MonkMode, SchubertExpansion};
use clanhess::verify::{run_suite, Bounds, Suite};
use clanhess::weak_order::{sorted_length_lex, w_set, w_set_via_bijection, WeakOrderGraph};

#[derive(Parser, Debug)]
#[command(name = "clanhess", version, about = "Clans, orbit closures, Hessenberg varieties and Schubert classes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Size of the first eigenspace.
    #[arg(long, global = true)]
    p: Option<usize>,
    /// Size of the second eigenspace; at most p.
    #[arg(long, global = true)]
    q: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel scans.
    #[arg(long, global = true, env = "CLANHESS_THREADS")]
    threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate clans or show their statistics.
    Clans {
        #[command(subcommand)]
        action: ClansAction,
    },
    /// Inclusion order (Hasse diagram) or labelled weak order.
    Poset {
        #[arg(value_enum)]
        order: Order,
        /// Restrict the weak order to the interval of the clans gamma_w.
        #[arg(long)]
        interval: bool,
    },
    /// W-set of a clan, or of gamma_w when given a permutation of 1..q.
    Wset { clan: String },
    /// W-set of gamma_w from length-additive factorizations of w*y0.
    WsetBijection { w: String },
    /// Schubert expansion of the orbit closure class.
    Class { clan: String },
    /// Hessenberg variety scans.
    Hess {
        #[command(subcommand)]
        action: HessAction,
    },
    /// Product of the Schubert divisor S_{s_m} with S_w.
    Monk {
        m: usize,
        w: String,
        /// Keep classes outside S_n instead of dropping them.
        #[arg(long)]
        stable: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest q for scans over the gamma_w family.
        #[arg(long, default_value_t = 4)]
        max_q: usize,
        /// Also report divisor products with a coefficient above one over all
        /// clans of the given shape (exploratory; never fails).
        #[arg(long)]
        scan: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ClansAction {
    Enumerate,
    Stats { clan: String },
}

#[derive(Subcommand, Debug)]
enum HessAction {
    Classify,
    Report { m: String },
    Dim { w: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Inclusion,
    Weak,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Oracle,
    Wsets,
    Monk,
    Irreducible,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Wsets => Suite::WSets,
            SuiteArg::Monk => Suite::Monk,
            SuiteArg::Irreducible => Suite::Irreducible,
        }
    }
}

struct Outcome {
    body: String,
    verified: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, verified: true }
    }
}

fn shape(g: &Global) -> Result<(usize, usize)> {
    let (Some(p), Some(q)) = (g.p, g.q) else {
        bail!("this command needs --p and --q");
    };
    if q == 0 || p < q {
        bail!("need p >= q >= 1, got p = {p}, q = {q}");
    }
    Ok((p, q))
}

fn optional_shape(g: &Global) -> Result<Option<(usize, usize)>> {
    match (g.p, g.q) {
        (None, None) => Ok(None),
        _ => shape(g).map(Some),
    }
}

fn parse_perm(text: &str) -> Result<Permutation> {
    text.parse().with_context(|| format!("malformed permutation {text:?}"))
}

/// A clan in text form, or a permutation of `1..q` standing for `γ_w`.
fn clan_arg(text: &str, g: &Global) -> Result<Clan> {
    match optional_shape(g)? {
        Some((p, q)) => {
            if text.chars().filter(|c| !c.is_whitespace()).count() != p + q {
                if let Ok(w) = text.parse::<Permutation>() {
                    if w.degree() == q {
                        return Ok(Clan::gamma_w(&w, p)?);
                    }
                }
            }
            Clan::parse(text, p, q).with_context(|| format!("malformed clan {text:?}"))
        }
        None => Clan::parse_inferred(text).with_context(|| format!("malformed clan {text:?}")),
    }
}

fn word_line(w: &Permutation) -> String {
    format!("{} = {w}", w.reduced_word())
}

fn expansion_output(e: &SchubertExpansion, n: usize, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{}\n", e.to_json(n))),
        Format::Text => Ok(e.to_text(n)),
        Format::Dot => bail!("dot output is only available for posets"),
    }
}

fn json_out(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        bail!("dot output is only available for posets");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let format = g.format;
    match &cli.command {
        Command::Clans { action } => {
            no_dot(format)?;
            let (p, q) = shape(g)?;
            match action {
                ClansAction::Enumerate => {
                    let clans = Clan::enumerate(p, q)?;
                    Ok(Outcome::ok(match format {
                        Format::Json => json_out(&json!(clans)),
                        _ => clans.iter().map(|c| format!("{c}\n")).collect(),
                    }))
                }
                ClansAction::Stats { clan } => {
                    let clan = clan_arg(clan, g)?;
                    let st = clan.statistics();
                    let n = clan.n();
                    let pairs: Vec<Vec<usize>> =
                        (1..=n).map(|i| (1..=n).map(|j| st.pair(i, j)).collect()).collect();
                    let value = json!({
                        "clan": clan.render(),
                        "plus": st.plus_counts,
                        "minus": st.minus_counts,
                        "pairs": pairs,
                        "length": clan.clan_length(),
                        "dimension": clan.orbit_dimension(),
                        "codimension": clan.codimension(),
                    });
                    if format == Format::Json {
                        return Ok(Outcome::ok(json_out(&value)));
                    }
                    let row = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    let mut s = String::new();
                    writeln!(s, "clan: {clan}")?;
                    writeln!(s, "plus: {}", row(&st.plus_counts))?;
                    writeln!(s, "minus: {}", row(&st.minus_counts))?;
                    writeln!(s, "pairs:")?;
                    for r in &pairs {
                        writeln!(s, "  {}", row(r))?;
                    }
                    writeln!(s, "length: {}", clan.clan_length())?;
                    writeln!(s, "dimension: {}", clan.orbit_dimension())?;
                    writeln!(s, "codimension: {}", clan.codimension())?;
                    Ok(Outcome::ok(s))
                }
            }
        }
        Command::Poset { order, interval } => {
            let (p, q) = shape(g)?;
            match order {
                Order::Weak => {
                    let graph = WeakOrderGraph::build(p, q, *interval)?;
                    Ok(Outcome::ok(match format {
                        Format::Dot => graph.to_dot(),
                        Format::Json => json_out(&json!({
                            "p": p,
                            "q": q,
                            "nodes": graph.nodes.iter().map(Clan::render).collect::<Vec<_>>(),
                            "edges": graph.covers.iter().map(|e| json!({
                                "source": e.source.render(),
                                "target": e.target.render(),
                                "labels": e.labels().collect::<Vec<_>>(),
                                "moves": e.moves.values().map(ToString::to_string).collect::<Vec<_>>(),
                            })).collect::<Vec<_>>(),
                        })),
                        Format::Text => graph
                            .covers
                            .iter()
                            .map(|e| format!("{} -> {} {}\n", e.source, e.target, e.label_text()))
                            .collect(),
                    }))
                }
                Order::Inclusion => {
                    if *interval {
                        bail!("--interval applies to the weak order only");
                    }
                    let poset = InclusionPoset::new(p, q)?;
                    let edges = hasse_edges(&poset);
                    Ok(Outcome::ok(match format {
                        Format::Dot => {
                            let mut s = String::from("digraph inclusion {\n");
                            for c in poset.clans() {
                                writeln!(s, "  \"{c}\";")?;
                            }
                            for &(a, b) in &edges {
                                writeln!(s, "  \"{}\" -> \"{}\";", poset.clan(a), poset.clan(b))?;
                            }
                            s.push_str("}\n");
                            s
                        }
                        Format::Json => json_out(&json!({
                            "p": p,
                            "q": q,
                            "nodes": poset.clans().iter().map(Clan::render).collect::<Vec<_>>(),
                            "edges": edges.iter().map(|&(a, b)| json!([poset.clan(a).render(), poset.clan(b).render()])).collect::<Vec<_>>(),
                        })),
                        Format::Text => edges
                            .iter()
                            .map(|&(a, b)| format!("{} < {}\n", poset.clan(a), poset.clan(b)))
                            .collect(),
                    }))
                }
            }
        }
        Command::Wset { clan } => {
            no_dot(format)?;
            let clan = clan_arg(clan, g)?;
            let set = sorted_length_lex(&w_set(&clan));
            Ok(Outcome::ok(perm_list(&set, format)))
        }
        Command::WsetBijection { w } => {
            no_dot(format)?;
            let (p, q) = shape(g)?;
            let w = parse_perm(w)?;
            if w.degree() != q {
                bail!("{w} is not a permutation of 1..{q}");
            }
            let n = p + q;
            let wy0 = w.compose(&Permutation::longest(q));
            let pairs = factorization_pairs(&wy0);
            let set = w_set_via_bijection(&w, p)?;
            let recursive = w_set(&Clan::gamma_w(&w, p)?);
            let verified = set == recursive && set.len() == pairs.len();
            let mut rows = Vec::new();
            for pair in &pairs {
                let x = pair.u.embed(n)?.compose(&phi(&pair.v, n)?);
                rows.push((pair.u.clone(), pair.v.clone(), x));
            }
            rows.sort_by_key(|r| clanhess::perm::length_lex_key(&r.2));
            let body = match format {
                Format::Json => json_out(&json!({
                    "pairs": rows.iter().map(|(u, v, x)| json!({
                        "u": u.reduced_word().to_string(),
                        "v": v.reduced_word().to_string(),
                        "product": x.reduced_word().to_string(),
                        "one_line": x,
                    })).collect::<Vec<_>>(),
                    "matches_w_set": verified,
                })),
                _ => {
                    let mut s = String::new();
                    for (u, v, x) in &rows {
                        writeln!(s, "u = {}, v = {} -> {}", u.reduced_word(), v.reduced_word(), word_line(x))?;
                    }
                    if !verified {
                        writeln!(s, "FAIL: products differ from the W-set of {}", Clan::gamma_w(&w, p)?)?;
                    }
                    s
                }
            };
            Ok(Outcome { body, verified })
        }
        Command::Class { clan } => {
            let clan = clan_arg(clan, g)?;
            Ok(Outcome::ok(expansion_output(&brion_class(&clan), clan.n(), format)?))
        }
        Command::Hess { action } => {
            no_dot(format)?;
            let (p, q) = shape(g)?;
            match action {
                HessAction::Classify => {
                    let c = classify_irreducibles(p, q)?;
                    let violation = c.violation();
                    let body = match format {
                        Format::Json => json_out(&json!({
                            "p": p,
                            "q": q,
                            "rows": c.rows.iter().map(|(w, m)| json!({"w": w, "m": m})).collect::<Vec<_>>(),
                            "violation": violation,
                        })),
                        _ => {
                            let mut s: String = c
                                .rows
                                .iter()
                                .map(|(w, m)| format!("{} -> ({m})\n", compact(w)))
                                .collect();
                            if let Some(v) = &violation {
                                writeln!(s, "FAIL: {v}")?;
                            }
                            s
                        }
                    };
                    Ok(Outcome {
                        body,
                        verified: violation.is_none(),
                    })
                }
                HessAction::Report { m } => {
                    let m: HessenbergVector = m.parse().with_context(|| format!("malformed Hessenberg vector {m:?}"))?;
                    let report = HessScanner::new(p, q)?.report(&m)?;
                    Ok(Outcome::ok(match format {
                        Format::Json => json_out(&serde_json::to_value(&report)?),
                        _ => {
                            let join = |cs: &[Clan]| cs.iter().map(Clan::render).collect::<Vec<_>>().join(" ");
                            let mut s = String::new();
                            writeln!(s, "contained: {}", join(&report.contained))?;
                            writeln!(s, "maximal: {}", join(&report.maximal))?;
                            writeln!(s, "irreducible: {}", report.irreducible)?;
                            if let Some(w) = &report.witness {
                                writeln!(s, "witness: {}", compact(w))?;
                            }
                            s
                        }
                    }))
                }
                HessAction::Dim { w } => {
                    let w = parse_perm(w)?;
                    if w.degree() != q {
                        bail!("{w} is not a permutation of 1..{q}");
                    }
                    let formula = hess_dimension(&w, p)?;
                    let area = m_of_w(&w, p)?.area();
                    let orbit = Clan::gamma_w(&w, p)?.orbit_dimension();
                    let verified = formula == area && area == orbit;
                    let body = match format {
                        Format::Json => json_out(&json!({
                            "dimension": formula,
                            "area": area,
                            "orbit_dimension": orbit,
                        })),
                        _ => {
                            let mut s = format!("{formula}\n");
                            if !verified {
                                writeln!(s, "FAIL: area {area}, orbit dimension {orbit}")?;
                            }
                            s
                        }
                    };
                    Ok(Outcome { body, verified })
                }
            }
        }
        Command::Monk { m, w, stable } => {
            let w = parse_perm(w)?;
            let (mode, n) = if *stable {
                (MonkMode::Stable, w.degree())
            } else {
                let n = match optional_shape(g)? {
                    Some((p, q)) => p + q,
                    None => w.degree(),
                };
                (MonkMode::Cohomology(n), n)
            };
            let product = monk_product(*m, &SchubertExpansion::single(&w), mode)?;
            Ok(Outcome::ok(expansion_output(&product, n, format)?))
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            max_q,
            scan,
        } => {
            no_dot(format)?;
            let bounds = Bounds {
                max_n: *max_n,
                max_q: *max_q,
                seed: *seed,
            };
            let checks = run_suite((*suite).into(), &bounds);
            let verified = checks.iter().all(|c| c.passed());
            let scan_rows = if *scan {
                let (p, q) = shape(g)?;
                Some(multiplicity_scan(p, q)?)
            } else {
                None
            };
            let body = match format {
                Format::Json => json_out(&json!({
                    "checks": checks,
                    "scan": scan_rows.as_ref().map(|rows| rows.iter().map(|r| json!({
                        "clan": r.clan.render(),
                        "m": r.m,
                        "index": r.index,
                        "coefficient": r.coeff.to_string(),
                    })).collect::<Vec<_>>()),
                })),
                _ => {
                    let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                    if let Some(rows) = &scan_rows {
                        writeln!(s, "scan: {} divisor products with a coefficient above one", rows.len())?;
                        for r in rows {
                            writeln!(s, "  {} m = {}: {} * S{}", r.clan, r.m, r.coeff, r.index)?;
                        }
                    }
                    s
                }
            };
            Ok(Outcome { body, verified })
        }
    }
}

/// One-line notation without separators when every entry is a single digit.
fn compact(w: &Permutation) -> String {
    if w.degree() <= 9 {
        w.images().iter().map(usize::to_string).collect()
    } else {
        w.to_string()
    }
}

fn perm_list(set: &[Permutation], format: Format) -> String {
    match format {
        Format::Json => json_out(&json!(set
            .iter()
            .map(|w| json!({"word": w.reduced_word().to_string(), "one_line": w}))
            .collect::<Vec<_>>())),
        _ => set.iter().map(|w| format!("{}\n", word_line(w))).collect(),
    }
}

/// Cover relations of the inclusion order, in clan order.
fn hasse_edges(poset: &InclusionPoset) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..poset.len() {
        for b in poset.up_set(a).ones() {
            if a == b {
                continue;
            }
            let mut between = poset.up_set(a).clone();
            between.intersect_with(poset.down_set(b));
            if between.count_ones(..) == 2 {
                edges.push((a, b));
            }
        }
    }
    edges
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &outcome.body).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", outcome.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
