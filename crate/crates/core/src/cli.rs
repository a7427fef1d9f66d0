//! Command-line front end: characters, verification suites and tables.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::character::{sl_weight, WeightCharacter};
use crate::coinvariants::{coinvariant_dims, CoinvariantConfig, CoinvariantError, DEFAULT_MAX_DEGREE};
use crate::combinat::{
    catalan, factorial, higher_catalan, hoggatt_conjecture_dim, narayana, q_factorial, raney_weight_census,
};
use crate::exactla::{Ranker, RankStrategy, DEFAULT_PRIMES};
use crate::symfunc::parking_chain_irreps;
use crate::uea::martini_check;
use crate::weylmod::{
    origin_weyl_character, points_weyl_character, truncation_stability_check, verify_tensor_factorization,
    PointMultiset, TruncationOrder, WeylError,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "current-weyl", version, about = "Weight characters of local Weyl modules for sl(r+1) currents")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Two primes for the crosscheck rank mode, e.g. `--primes 1000003,1000033`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Rational elimination only.
    #[arg(long, global = true)]
    pub exact: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct Sizes {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Comma-separated points on the line (rationals such as `1/2`).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub points: Option<Vec<String>>,
    #[arg(long)]
    pub truncation: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight character at the origin, or at points on the line.
    Character(Sizes),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        sizes: Sizes,
    },
    /// Print a table of closed-form counts.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// First row index; rows run from here up to `--n`.
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[command(flatten)]
        sizes: Sizes,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Catalan,
    Narayana,
    HigherCatalan,
    ThreeWay,
    Tensor,
    Martini,
    Conjecture,
    Chevalley,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Catalan,
    Narayana,
    HigherCatalan,
    Hoggatt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandKind {
    Character,
    Verify(Suite),
    Table(TableKind),
}

/// Validated run configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n: usize,
    /// Lower row bound for tables.
    pub from: usize,
    pub d: usize,
    pub r: usize,
    pub m: usize,
    pub points: Option<Vec<BigRational>>,
    pub format: Format,
    pub primes: (u64, u64),
    pub exact: bool,
    pub max_degree: u32,
    pub truncation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, UsageError> {
        let (command, sizes, from) = match &cli.command {
            Command::Character(s) => (CommandKind::Character, s, 0),
            Command::Verify { suite, sizes } => (CommandKind::Verify(*suite), sizes, 0),
            Command::Table { kind, from, sizes } => (CommandKind::Table(*kind), sizes, *from),
        };
        let points = match &sizes.points {
            None => None,
            Some(raw) => Some(
                raw.iter()
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| BigRational::from_str(s.trim()).map_err(|_| usage(format!("not a rational point: {s}"))))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let primes = match cli.global.primes.as_deref() {
            None => DEFAULT_PRIMES,
            Some([p1, p2]) => (*p1, *p2),
            Some(_) => return Err(usage("--primes takes exactly two values")),
        };

        let (dn, dd, dr) = match &command {
            CommandKind::Character => (3, 1, 1),
            CommandKind::Verify(Suite::Catalan | Suite::Narayana) => (4, 2, 1),
            CommandKind::Verify(Suite::HigherCatalan) => (3, 2, 2),
            CommandKind::Verify(Suite::ThreeWay) => (3, 2, 1),
            CommandKind::Verify(Suite::Tensor) => (3, 1, 1),
            CommandKind::Verify(Suite::Martini) => (2, 1, 1),
            CommandKind::Verify(Suite::Conjecture) => (2, 3, 1),
            CommandKind::Verify(Suite::Chevalley) => (5, 1, 1),
            CommandKind::Table(TableKind::HigherCatalan) => (3, 2, 2),
            CommandKind::Table(TableKind::Hoggatt) => (4, 3, 1),
            CommandKind::Table(_) => (4, 2, 1),
        };
        let n = match (&points, sizes.n) {
            (Some(p), Some(n)) if p.len() != n => {
                return Err(usage(format!("--n {n} disagrees with {} points", p.len())));
            }
            (Some(p), _) => p.len(),
            (None, n) => n.unwrap_or(dn),
        };
        let cfg = RunConfig {
            command,
            n,
            from,
            d: sizes.d.unwrap_or(dd),
            r: sizes.r.unwrap_or(dr),
            m: sizes.m.unwrap_or(1),
            points,
            format: cli.global.format,
            primes,
            exact: cli.global.exact,
            max_degree: cli.global.max_degree,
            truncation: sizes.truncation,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), UsageError> {
        if self.d == 0 {
            return Err(usage("--d must be at least 1"));
        }
        if self.r == 0 {
            return Err(usage("--r must be at least 1"));
        }
        let takes_points = matches!(self.command, CommandKind::Character | CommandKind::Verify(Suite::Tensor));
        if self.points.is_some() && !takes_points {
            return Err(usage("--points only applies to `character` and `verify tensor`"));
        }
        if self.points.is_some() && self.d != 1 {
            return Err(usage(format!(
                "points away from the origin are only modelled for d = 1 (got d = {}); \
                 a local Weyl module at several points factors into modules at single points, \
                 so use the origin computation instead",
                self.d
            )));
        }
        if let Some(t) = self.truncation {
            if self.points.is_none() {
                return Err(usage("--truncation needs --points"));
            }
            if t < self.n {
                return Err(usage(format!("--truncation {t} is below n = {}", self.n)));
            }
        }
        if self.command == CommandKind::Verify(Suite::Conjecture) && self.d < 3 {
            return Err(usage("the conjecture suite is about d >= 3"));
        }
        Ok(())
    }

    fn ranker(&self) -> Result<Ranker, UsageError> {
        let strategy = if self.exact {
            RankStrategy::Exact
        } else {
            RankStrategy::CrossCheck {
                p1: self.primes.0,
                p2: self.primes.1,
            }
        };
        Ranker::new(strategy).map_err(|e| usage(format!("bad primes: {e}")))
    }

    fn coinvariant_config(&self) -> CoinvariantConfig {
        CoinvariantConfig {
            max_degree: self.max_degree,
            ..CoinvariantConfig::default()
        }
    }

    fn inputs(&self) -> Value {
        let mut v = json!({
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "rank_mode": if self.exact { "rational" } else { "two-prime" },
            "max_degree": self.max_degree,
        });
        if !self.exact {
            v["primes"] = json!([self.primes.0, self.primes.1]);
        }
        if let CommandKind::Verify(Suite::Martini) = self.command {
            v["m"] = json!(self.m);
        }
        if let Some(p) = &self.points {
            v["points"] = json!(p.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
        if let Some(t) = self.truncation {
            v["truncation"] = json!(t);
        }
        if let CommandKind::Table(_) = self.command {
            v["from"] = json!(self.from);
        }
        v
    }
}

/// One checked statement of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: CaseStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    Match,
    Mismatch,
}

impl CaseStatus {
    fn as_str(self) -> &'static str {
        match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::Match => "match",
            CaseStatus::Mismatch => "mismatch",
        }
    }
}

impl Case {
    fn check(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Case {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let status = if expected == computed { CaseStatus::Pass } else { CaseStatus::Fail };
        Case {
            name: name.into(),
            expected,
            computed,
            status,
        }
    }

    fn report_only(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Case {
        let mut c = Case::check(name, expected, computed);
        c.status = if c.status == CaseStatus::Pass { CaseStatus::Match } else { CaseStatus::Mismatch };
        c
    }

    fn flag(name: impl Into<String>, expected: impl ToString, computed: impl ToString, ok: bool) -> Case {
        Case {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
        }
    }
}

/// What a command produced, before rendering.
#[derive(Debug, Clone)]
pub enum Output {
    Character {
        route: &'static str,
        character: WeightCharacter,
    },
    Verify {
        suite: Suite,
        cases: Vec<Case>,
    },
    Table {
        kind: TableKind,
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub config: RunConfig,
    pub output: Output,
    pub provenance: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.output {
            Output::Verify { cases, .. } if cases.iter().any(|c| c.status == CaseStatus::Fail) => EXIT_FAIL,
            _ => EXIT_PASS,
        }
    }

    fn command_name(&self) -> &'static str {
        match self.output {
            Output::Character { .. } => "character",
            Output::Verify { .. } => "verify",
            Output::Table { .. } => "table",
        }
    }

    /// JSON form. Counts are decimal strings; with `timing == false` the
    /// output depends on the configuration only.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "command": self.command_name(),
            "inputs": self.config.inputs(),
            "provenance": self.provenance,
        });
        match &self.output {
            Output::Character { route, character } => {
                v["route"] = json!(route);
                v["character"] = Value::Array(
                    character
                        .full_table()
                        .into_iter()
                        .map(|(c, m)| json!({"composition": c, "weight": sl_weight(&c), "dim": m.to_string()}))
                        .collect(),
                );
                v["total"] = json!(character.total().to_string());
            }
            Output::Verify { suite, cases } => {
                v["suite"] = json!(suite_name(*suite));
                v["cases"] = Value::Array(
                    cases
                        .iter()
                        .map(|c| {
                            json!({"name": c.name, "expected": c.expected, "computed": c.computed, "status": c.status.as_str()})
                        })
                        .collect(),
                );
                v["passed"] = json!(self.exit_code() == EXIT_PASS);
            }
            Output::Table { kind, header, rows } => {
                v["table"] = json!(table_name(*kind));
                v["header"] = json!(header);
                v["rows"] = json!(rows);
            }
        }
        if timing {
            v["timing"] = json!({"elapsed_ms": self.elapsed_ms as u64});
        }
        v
    }

    fn grid(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let s = |x: &[&str]| x.iter().map(|v| v.to_string()).collect::<Vec<_>>();
        match &self.output {
            Output::Character { character, .. } => {
                let rows = character
                    .full_table()
                    .into_iter()
                    .map(|(c, m)| vec![join(&c), join(&sl_weight(&c)), m.to_string()])
                    .collect();
                (s(&["composition", "weight", "dim"]), rows)
            }
            Output::Verify { cases, .. } => {
                let rows = cases
                    .iter()
                    .map(|c| vec![c.name.clone(), c.expected.clone(), c.computed.clone(), c.status.as_str().to_string()])
                    .collect();
                (s(&["case", "expected", "computed", "status"]), rows)
            }
            Output::Table { header, rows, .. } => (header.clone(), rows.clone()),
        }
    }

    pub fn to_csv(&self) -> String {
        let (header, rows) = self.grid();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory write");
        for row in rows {
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_pretty(&self) -> String {
        let (header, rows) = self.grid();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |cells: &[String], out: &mut String| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&header, &mut out);
        for row in &rows {
            line(row, &mut out);
        }
        match &self.output {
            Output::Character { route, character } => {
                let _ = writeln!(out, "total {}  ({route})", character.total());
            }
            Output::Verify { suite, cases } => {
                let verdict = if *suite == Suite::Conjecture {
                    let matched = cases.iter().all(|c| c.status == CaseStatus::Match);
                    if matched { "match" } else { "mismatch" }
                } else if self.exit_code() == EXIT_PASS {
                    "pass"
                } else {
                    "fail"
                };
                let _ = writeln!(out, "{}: {verdict} ({} cases)", suite_name(*suite), cases.len());
            }
            Output::Table { .. } => {}
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(true)).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Pretty => self.to_pretty(),
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Catalan => "catalan",
        Suite::Narayana => "narayana",
        Suite::HigherCatalan => "higher-catalan",
        Suite::ThreeWay => "three-way",
        Suite::Tensor => "tensor",
        Suite::Martini => "martini",
        Suite::Conjecture => "conjecture",
        Suite::Chevalley => "chevalley",
    }
}

fn table_name(k: TableKind) -> &'static str {
    match k {
        TableKind::Catalan => "catalan",
        TableKind::Narayana => "narayana",
        TableKind::HigherCatalan => "higher-catalan",
        TableKind::Hoggatt => "hoggatt",
    }
}

/// Errors that abort a run, with their exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Usage(String),
    ResourceCap(String),
    Internal(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => EXIT_USAGE,
            RunError::ResourceCap(_) => EXIT_RESOURCE,
            RunError::Internal(_) => EXIT_FAIL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Usage(m) | RunError::ResourceCap(m) | RunError::Internal(m) => m,
        }
    }
}

impl From<UsageError> for RunError {
    fn from(e: UsageError) -> Self {
        RunError::Usage(e.0)
    }
}

impl From<WeylError> for RunError {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::Coinvariant(c) => c.into(),
            WeylError::Unsupported { .. } | WeylError::Truncation { .. } | WeylError::Rank | WeylError::PointShape { .. } => {
                RunError::Usage(e.to_string())
            }
            WeylError::Exact(_) => RunError::Internal(e.to_string()),
        }
    }
}

impl From<CoinvariantError> for RunError {
    fn from(e: CoinvariantError) -> Self {
        match e {
            CoinvariantError::DegreeCap { .. } => RunError::ResourceCap(e.to_string()),
            CoinvariantError::Poly(_) => RunError::Usage(e.to_string()),
            _ => RunError::Internal(e.to_string()),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report, RunError> {
    let ranker = cfg.ranker()?;
    let start = Instant::now();
    let output = match cfg.command {
        CommandKind::Character => cmd_character(cfg, &ranker)?,
        CommandKind::Verify(suite) => cmd_verify(cfg, suite, &ranker)?,
        CommandKind::Table(kind) => cmd_table(cfg, kind),
    };
    let elapsed_ms = start.elapsed().as_millis();
    let provenance = serde_json::to_value(ranker.provenance()).expect("provenance serializes");
    Ok(Report {
        config: cfg.clone(),
        output,
        provenance,
        elapsed_ms,
    })
}

fn points_of(cfg: &RunConfig) -> Option<PointMultiset> {
    cfg.points.as_ref().map(|p| PointMultiset::on_line(p.iter().cloned()))
}

pub fn cmd_character(cfg: &RunConfig, ranker: &Ranker) -> Result<Output, RunError> {
    match points_of(cfg) {
        Some(points) => {
            let order = TruncationOrder::new(cfg.truncation.unwrap_or(cfg.n), cfg.n)?;
            let character = points_weyl_character(&points, cfg.r, order, ranker)?;
            Ok(Output::Character {
                route: "points",
                character,
            })
        }
        None => {
            let character = origin_weyl_character(cfg.n, cfg.d, cfg.r, ranker, &cfg.coinvariant_config())?;
            Ok(Output::Character {
                route: "coinvariants",
                character,
            })
        }
    }
}

fn character_string(c: &WeightCharacter) -> String {
    c.full_table()
        .into_iter()
        .map(|(_, m)| m.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// All multisets of size `n` drawn from `{0, 1, 2}`, as sorted lists.
fn small_point_multisets(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            let c = n - a - b;
            let mut v = vec![0; a];
            v.extend(std::iter::repeat_n(1, b));
            v.extend(std::iter::repeat_n(2, c));
            out.push(v);
        }
    }
    out.sort();
    out
}

pub fn cmd_verify(cfg: &RunConfig, suite: Suite, ranker: &Ranker) -> Result<Output, RunError> {
    let cc = cfg.coinvariant_config();
    let mut cases = Vec::new();
    match suite {
        Suite::Catalan => {
            for n in 0..=cfg.n {
                let c = origin_weyl_character(n, 2, 1, ranker, &cc)?;
                cases.push(Case::check(format!("n={n} total"), catalan(n as u64), c.total()));
            }
        }
        Suite::Narayana => {
            for n in 0..=cfg.n {
                let c = origin_weyl_character(n, 2, 1, ranker, &cc)?;
                for i in 0..=n {
                    let comp = vec![(n - i) as u32, i as u32];
                    cases.push(Case::check(
                        format!("n={n} weight {}", n as i64 - 2 * i as i64),
                        narayana(n as u64, i as u64),
                        c.get(&comp),
                    ));
                }
            }
        }
        Suite::HigherCatalan => {
            for n in 0..=cfg.n {
                let c = origin_weyl_character(n, 2, cfg.r, ranker, &cc)?;
                cases.push(Case::check(
                    format!("n={n} r={} total", cfg.r),
                    higher_catalan(n as u64, cfg.r as u64),
                    c.total(),
                ));
            }
        }
        Suite::ThreeWay => {
            let (n, r) = (cfg.n, cfg.r);
            let origin = origin_weyl_character(n, 2, r, ranker, &cc)?;
            let raney = raney_weight_census(n, r);
            let chain = parking_chain_irreps(n, r)
                .and_then(|irreps| irreps.weight_character())
                .map_err(|e| RunError::Internal(e.to_string()))?;
            cases.push(Case::check("coinvariants vs raney", character_string(&raney), character_string(&origin)));
            cases.push(Case::check(
                "coinvariants vs frobenius",
                character_string(&chain),
                character_string(&origin),
            ));
        }
        Suite::Tensor => {
            let sets: Vec<PointMultiset> = match points_of(cfg) {
                Some(p) => vec![p],
                None => (1..=cfg.n)
                    .flat_map(small_point_multisets)
                    .map(|p| PointMultiset::from_integers(&p))
                    .collect(),
            };
            for points in sets {
                let label = points
                    .points()
                    .iter()
                    .map(|p| p[0].to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let rep = verify_tensor_factorization(&points, cfg.r, ranker)?;
                let factors = rep
                    .factors
                    .iter()
                    .map(|f| f.character.total().to_string())
                    .collect::<Vec<_>>()
                    .join("*");
                cases.push(Case::flag(
                    format!("points {label} total"),
                    format!("{factors}={}", rep.product.total()),
                    rep.whole.total(),
                    rep.totals_match,
                ));
                cases.push(Case::flag(
                    format!("points {label} character"),
                    character_string(&rep.product),
                    character_string(&rep.whole),
                    rep.characters_match,
                ));
                let order = TruncationOrder::new(cfg.truncation.unwrap_or(points.n()), points.n())?;
                let stable = truncation_stability_check(&points, cfg.r, order, ranker)?;
                cases.push(Case::flag(
                    format!("points {label} truncation N={}", order.get()),
                    "stable",
                    if stable { "stable" } else { "changed" },
                    stable,
                ));
            }
        }
        Suite::Martini => {
            let rep = martini_check(cfg.m, cfg.n);
            let expected_sign = if cfg.n.is_multiple_of(2) { "c > 0" } else { "c < 0" };
            for (serving, c) in &rep.table {
                let ok = !c.is_zero() && (cfg.m == 0 || rep.sign_ok);
                cases.push(Case::flag(
                    format!("c{serving}"),
                    if cfg.m == 0 { "nonzero" } else { expected_sign },
                    c,
                    ok,
                ));
            }
            cases.push(Case::flag(
                "support",
                format!("{} servings", rep.table.len()),
                format!("{} products, {} stray", rep.table.len() - rep.table.iter().filter(|(_, c)| c.is_zero()).count(), rep.stray.len()),
                rep.support_ok,
            ));
        }
        Suite::Conjecture => {
            let n = cfg.n;
            let c = origin_weyl_character(n, cfg.d, 1, ranker, &cc)?;
            for i in 0..=n {
                let comp = vec![(n - i) as u32, i as u32];
                cases.push(Case::report_only(
                    format!("n={n} d={} weight {}", cfg.d, n as i64 - 2 * i as i64),
                    hoggatt_conjecture_dim(n as u64, i as u64, cfg.d as u64),
                    c.get(&comp),
                ));
            }
        }
        Suite::Chevalley => {
            for n in 1..=cfg.n {
                let g = coinvariant_dims(n, 1, ranker, &cc)?;
                cases.push(Case::check(format!("n={n} total"), factorial(n as u64), g.total()));
                cases.push(Case::check(
                    format!("n={n} graded"),
                    join(&q_factorial(n)),
                    join(&g.by_total_degree()),
                ));
            }
        }
    }
    Ok(Output::Verify { suite, cases })
}

pub fn cmd_table(cfg: &RunConfig, kind: TableKind) -> Output {
    let n_min = cfg.from as u64;
    let n_max = cfg.n as u64;
    let big = |x: BigUint| x.to_string();
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match kind {
        TableKind::Catalan => (
            vec!["n", "catalan"],
            (n_min..=n_max).map(|n| vec![n.to_string(), big(catalan(n))]).collect(),
        ),
        TableKind::Narayana => (
            vec!["n", "i", "narayana"],
            (n_min..=n_max)
                .flat_map(|n| (0..=n).map(move |i| vec![n.to_string(), i.to_string(), big(narayana(n, i))]))
                .collect(),
        ),
        TableKind::HigherCatalan => {
            let r = cfg.r as u64;
            (
                vec!["n", "r", "higher_catalan"],
                (n_min..=n_max)
                    .map(|n| vec![n.to_string(), r.to_string(), big(higher_catalan(n, r))])
                    .collect(),
            )
        }
        TableKind::Hoggatt => {
            let d = cfg.d as u64;
            (
                vec!["n", "i", "d", "hoggatt"],
                (n_min..=n_max)
                    .flat_map(|n| {
                        (0..=n).map(move |i| {
                            vec![n.to_string(), i.to_string(), d.to_string(), big(hoggatt_conjecture_dim(n, i, d))]
                        })
                    })
                    .collect(),
            )
        }
    };
    Output::Table {
        kind,
        header: header.into_iter().map(String::from).collect(),
        rows,
    }
}

/// Parses `args`, runs, and returns `(stdout, stderr, exit code)`.
pub fn execute<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            };
        }
    };
    let result = RunConfig::from_cli(&cli).map_err(RunError::from).and_then(|cfg| {
        let report = run(&cfg)?;
        Ok((report.render(), report.exit_code()))
    });
    match result {
        Ok((out, code)) => (out, String::new(), code),
        Err(e) => {
            let kind = match e {
                RunError::Usage(_) => "usage",
                RunError::ResourceCap(_) => "resource-cap",
                RunError::Internal(_) => "internal",
            };
            let abort = json!({"error": kind, "message": e.message()});
            let out = if cli.global.format == Format::Json {
                format!("{}\n", serde_json::to_string_pretty(&abort).expect("json values serialize"))
            } else {
                String::new()
            };
            (out, format!("error: {}\n", e.message()), e.exit_code())
        }
    }
}
