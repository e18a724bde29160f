//! Command-line front end. [`run`] parses arguments, executes one command
//! and writes a deterministic report.

mod report;
mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use thiserror::Error;

use crate::congruence::{
    all_normal_congruences, generated_normal_congruence, is_normal_subquasigroup, quotient,
};
use crate::cosets::{
    coset_soft, is_normal_soft, quotient_family, verify_coset_theorems, CosetError,
};
use crate::fixtures;
use crate::iso::are_isomorphic;
use crate::quasigroup::{validate, OperationKind, Quasigroup, Side};
use crate::softquasigroup::{
    classify, metrics, nuclear_check, parastrophe_metrics, verify_six_equivalences, SoftClass,
    SoftQuasigroup,
};
use crate::softset::{parse_soft_set, SoftSet};
use crate::subalgebra::{
    all_subquasigroups, check_parastrophe_invariance, closure_witness, is_subloop, Escape,
};
use crate::subset::SubsetMask;
use crate::table::{emit_table, parse_table, CayleyTable};

pub use report::{Counterexample, Entry, Report, Section, Status};

const USAGE_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Opp,
    Ldiv,
    Rdiv,
    Oldiv,
    Ordiv,
}

impl From<KindArg> for OperationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Opp => OperationKind::Opp,
            KindArg::Ldiv => OperationKind::LDiv,
            KindArg::Rdiv => OperationKind::RDiv,
            KindArg::Oldiv => OperationKind::OLDiv,
            KindArg::Ordiv => OperationKind::ORDiv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "softquasi",
    version,
    about = "Check finite quasigroups and soft quasigroups.",
    after_help = "Table and soft-set arguments accept a file path or builtin:<name>."
)]
struct Cli {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a table is a Latin square and report its laws
    Validate { table: String },
    /// Derive a parastrophe of a table
    Parastrophe {
        table: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Print the derived table in the table file format
        #[arg(long)]
        emit: bool,
    },
    /// List every subquasigroup
    Subs {
        table: String,
        #[arg(long, default_value_t = crate::subalgebra::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Soft-set analyses over a table
    Soft {
        #[command(subcommand)]
        command: SoftCommand,
    },
    /// Coset soft sets, the coset battery and quotient families
    Cosets {
        table: String,
        softset: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// List every normal congruence
    Congruences {
        table: String,
        #[arg(long, default_value_t = crate::subalgebra::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Quotient by the congruence of a normal subquasigroup
    Quotient {
        table: String,
        /// Space-separated symbols of the subquasigroup
        #[arg(long)]
        subset: String,
        /// Print the quotient table in the table file format
        #[arg(long)]
        emit: bool,
    },
    /// Search for an isomorphism between two tables
    Iso {
        first: String,
        second: String,
        #[arg(long, default_value_t = crate::iso::DEFAULT_ISO_BOUND)]
        bound: usize,
    },
    /// Run every applicable battery of checks
    Suite {
        table: String,
        softset: Option<String>,
        #[arg(long, default_value_t = crate::subalgebra::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
}

#[derive(Debug, Subcommand)]
enum SoftCommand {
    /// Classify a soft set over a table
    Check { table: String, softset: String },
    /// Order and mean metrics of a soft quasigroup
    Metrics { table: String, softset: String },
}

/// Failures that stop a command before a report exists (exit code 2).
#[derive(Debug, Error)]
enum InputError {
    #[error("unknown built-in fixture `{0}`")]
    UnknownFixture(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Table {
        path: String,
        source: crate::table::TableError,
    },
    #[error("{path}: {source}")]
    SoftSet {
        path: String,
        source: crate::softset::SoftSetError,
    },
    #[error("--subset: {0}")]
    Subset(crate::table::TableError),
    #[error("{0}")]
    Limit(String),
}

enum Output {
    Report(Report),
    Raw(String),
}

/// Runs one command and returns its exit code: 0 pass, 1 failed check or
/// invalid structure, 2 usage or parse error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                USAGE_ERROR
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(Output::Raw(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Ok(Output::Report(report)) => {
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            let _ = out.write_all(text.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            USAGE_ERROR
        }
    }
}

fn read_source(
    path: &str,
    builtin: fn(&str) -> Option<&'static str>,
) -> Result<String, InputError> {
    if path.starts_with(fixtures::PREFIX) {
        return builtin(path)
            .map(str::to_string)
            .ok_or_else(|| InputError::UnknownFixture(path.to_string()));
    }
    std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.to_string(),
        source,
    })
}

fn load_table(path: &str) -> Result<CayleyTable, InputError> {
    parse_table(&read_source(path, fixtures::table)?).map_err(|source| InputError::Table {
        path: path.to_string(),
        source,
    })
}

fn load_soft(path: &str, table: &CayleyTable) -> Result<SoftSet, InputError> {
    parse_soft_set(&read_source(path, fixtures::soft_set)?, table.symbols()).map_err(|source| {
        InputError::SoftSet {
            path: path.to_string(),
            source,
        }
    })
}

fn limit(e: impl std::fmt::Display) -> InputError {
    InputError::Limit(e.to_string())
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn braced(q: &Quasigroup, h: &SubsetMask) -> String {
    h.render_braced(q.symbols())
}

fn describe_escape(q: &Quasigroup, e: &Escape, h: &SubsetMask) -> String {
    format!(
        "{} {} {} = {} outside {}",
        q.symbol(e.x),
        e.kind.symbol(),
        q.symbol(e.y),
        q.symbol(e.z),
        braced(q, h)
    )
}

/// Decimal of a ratio rounded half-to-even.
fn ratio_decimal(r: &Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let (n, d) = (*r.numer() as u128 * scale, *r.denom() as u128);
    let (mut q, rem) = (n / d, n % d);
    if 2 * rem > d || (2 * rem == d && q % 2 == 1) {
        q += 1;
    }
    if places == 0 {
        return q.to_string();
    }
    format!(
        "{}.{:0>width$}",
        q / scale,
        q % scale,
        width = places as usize
    )
}

/// Adds the table summary and, for a non-Latin table, marks the report
/// invalid with one counterexample per defective line.
fn table_section(report: &mut Report, title: &str, table: &CayleyTable) -> Option<Quasigroup> {
    let latin = validate(table.clone());
    report
        .section(title)
        .put("order", table.order())
        .put("symbols", table.symbols().join(" "))
        .put("latin", yes(latin.is_ok()));
    match latin {
        Ok(q) => Some(q),
        Err(v) => {
            report.invalid();
            for line in v.describe() {
                report.counterexample("latin square", line);
            }
            None
        }
    }
}

fn execute(command: &Command) -> Result<Output, InputError> {
    match command {
        Command::Validate { table } => validate_cmd(&load_table(table)?).map(Output::Report),
        Command::Parastrophe { table, kind, emit } => {
            parastrophe_cmd(&load_table(table)?, (*kind).into(), *emit)
        }
        Command::Subs { table, bound } => subs_cmd(&load_table(table)?, *bound).map(Output::Report),
        Command::Soft { command } => match command {
            SoftCommand::Check { table, softset } => {
                let t = load_table(table)?;
                let s = load_soft(softset, &t)?;
                soft_check_cmd(&t, &s).map(Output::Report)
            }
            SoftCommand::Metrics { table, softset } => {
                let t = load_table(table)?;
                let s = load_soft(softset, &t)?;
                soft_metrics_cmd(&t, &s).map(Output::Report)
            }
        },
        Command::Cosets {
            table,
            softset,
            side,
        } => {
            let t = load_table(table)?;
            let s = load_soft(softset, &t)?;
            cosets_cmd(&t, &s, (*side).into()).map(Output::Report)
        }
        Command::Congruences { table, bound } => {
            congruences_cmd(&load_table(table)?, *bound).map(Output::Report)
        }
        Command::Quotient {
            table,
            subset,
            emit,
        } => quotient_cmd(&load_table(table)?, subset, *emit),
        Command::Iso {
            first,
            second,
            bound,
        } => iso_cmd(&load_table(first)?, &load_table(second)?, *bound).map(Output::Report),
        Command::Suite {
            table,
            softset,
            bound,
        } => {
            let t = load_table(table)?;
            let s = softset.as_deref().map(|p| load_soft(p, &t)).transpose()?;
            suite::run_suite(&t, s.as_ref(), *bound).map(Output::Report)
        }
    }
}

fn validate_cmd(table: &CayleyTable) -> Result<Report, InputError> {
    let mut report = Report::new("validate");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    let p = q.properties();
    report
        .section("properties")
        .put("identity", p.identity.map_or("none", |e| q.symbol(e)))
        .put("associative", yes(p.is_associative))
        .put("commutative", yes(p.is_commutative))
        .put("idempotent", yes(p.is_idempotent))
        .put("flexible", yes(p.is_flexible))
        .put("left_distributive", yes(p.is_left_distributive))
        .put("right_distributive", yes(p.is_right_distributive))
        .put("loop", yes(p.is_loop()))
        .put("group", yes(p.is_group));
    let nuc = q.nuclei();
    report
        .section("nuclei")
        .put("left", braced(&q, &nuc.left))
        .put("right", braced(&q, &nuc.right));
    Ok(report)
}

/// The defining law of a parastrophe in terms of `·`, as text and as a
/// check on one cell `(x, y)` with derived value `z`.
type CellLaw = fn(&Quasigroup, usize, usize, usize) -> bool;

fn parastrophe_law(kind: OperationKind) -> (&'static str, CellLaw) {
    match kind {
        OperationKind::Mul => ("x·y = x·y", |q, x, y, z| q.mul(x, y) == z),
        OperationKind::Opp => ("x ⊛ y = y·x", |q, x, y, z| q.mul(y, x) == z),
        OperationKind::LDiv => ("x·(x \\ y) = y", |q, x, y, z| q.mul(x, z) == y),
        OperationKind::RDiv => ("(x / y)·y = x", |q, x, y, z| q.mul(z, y) == x),
        OperationKind::ORDiv => ("x // y = y / x", |q, x, y, z| q.rdiv(y, x) == z),
        OperationKind::OLDiv => ("x \\\\ y = y \\ x", |q, x, y, z| q.ldiv(y, x) == z),
    }
}

fn parastrophe_cmd(
    table: &CayleyTable,
    kind: OperationKind,
    emit: bool,
) -> Result<Output, InputError> {
    let mut report = Report::new("parastrophe");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(Output::Report(report));
    };
    let p = q.parastrophe(kind);
    if emit {
        return Ok(Output::Raw(emit_table(p.table())));
    }
    let (law, holds) = parastrophe_law(kind);
    let n = q.order();
    let s = report.section("parastrophe");
    s.put("kind", kind.name())
        .put("symbol", kind.symbol())
        .put("law", law);
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| p.symbol(p.mul(x, y))).collect();
        s.put(format!("row {}", q.symbol(x)), row.join(" "));
    }
    let mut bad = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !holds(&q, x, y, p.mul(x, y)) {
                bad.push(format!(
                    "cell ({}, {}) = {}",
                    q.symbol(x),
                    q.symbol(y),
                    q.symbol(p.mul(x, y))
                ));
            }
        }
    }
    report
        .section("law")
        .put("cells_checked", n * n)
        .put("holds", yes(bad.is_empty()));
    for b in bad {
        report.counterexample("parastrophe law", b);
    }
    Ok(Output::Report(report))
}

fn subs_cmd(table: &CayleyTable, bound: usize) -> Result<Report, InputError> {
    let mut report = Report::new("subs");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    let subs = all_subquasigroups(&q, bound).map_err(limit)?;
    let mut rows = Vec::with_capacity(subs.len());
    let mut broken = Vec::new();
    for h in &subs {
        let invariant = check_parastrophe_invariance(&q, h).map_err(limit)?;
        let lp = is_subloop(&q, h).map_err(limit)?;
        let normal = is_normal_subquasigroup(&q, h).map_err(limit)?.is_some();
        if !invariant {
            broken.push(braced(&q, h));
        }
        rows.push((
            braced(&q, h),
            format!(
                "order {}; subloop {}; normal {}; all parastrophes {}",
                h.len(),
                yes(lp),
                yes(normal),
                yes(invariant)
            ),
        ));
    }
    let s = report.section("subquasigroups");
    s.put("count", subs.len());
    for (k, v) in rows {
        s.put(k, v);
    }
    for b in broken {
        report.counterexample("subquasigroup of every parastrophe", b);
    }
    Ok(report)
}

fn soft_set_section(report: &mut Report, q: &Quasigroup, soft: &SoftSet) {
    let s = report.section("soft set");
    s.put("parameters", soft.len());
    for (p, v) in soft.iter() {
        s.put(p, braced(q, v));
    }
}

/// Adds one counterexample per parameter whose value escapes, naming the
/// parameter and the offending product.
fn escape_counterexamples(report: &mut Report, sq: &SoftQuasigroup) {
    let q = sq.base();
    for ((p, v), c) in sq.soft().iter().zip(sq.param_classes()) {
        if let Some(e) = &c.escape {
            report.counterexample(
                "soft quasigroup",
                format!("parameter {p}: {}", describe_escape(q, e, v)),
            );
        }
    }
}

/// "soft quasigroup" whenever that holds, since stronger classes are
/// reported separately; otherwise the weaker class reached.
fn class_name(sq: &SoftQuasigroup) -> &'static str {
    if sq.is_soft_quasigroup() {
        SoftClass::Quasigroup.name()
    } else {
        sq.class().name()
    }
}

fn soft_check_cmd(table: &CayleyTable, soft: &SoftSet) -> Result<Report, InputError> {
    let mut report = Report::new("soft check");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    soft_set_section(&mut report, &q, soft);
    let sq = classify(&q, soft).map_err(limit)?;
    let s = report.section("parameters");
    for ((p, _), c) in soft.iter().zip(sq.param_classes()) {
        let what = match c.class() {
            SoftClass::Group => "subgroup",
            SoftClass::Loop => "subloop",
            SoftClass::Quasigroup => "subquasigroup",
            SoftClass::Groupoid => "closed under · only",
            SoftClass::Plain => "not closed under ·",
        };
        s.put(p, what);
    }
    let nuclear = nuclear_check(&sq);
    report
        .section("class")
        .put("class", class_name(&sq))
        .put("strongest_class", sq.class().name())
        .put("soft_quasigroup", yes(sq.is_soft_quasigroup()))
        .put(
            "same_status_over_parastrophes",
            yes(verify_six_equivalences(&q, soft).map_err(limit)?),
        )
        .put("distributive", yes(q.properties().is_distributive()))
        .put("left_nuclear", yes(nuclear.is_left_nuclear))
        .put("right_nuclear", yes(nuclear.is_right_nuclear));
    escape_counterexamples(&mut report, &sq);
    Ok(report)
}

fn soft_metrics_cmd(table: &CayleyTable, soft: &SoftSet) -> Result<Report, InputError> {
    let mut report = Report::new("soft metrics");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    soft_set_section(&mut report, &q, soft);
    let sq = classify(&q, soft).map_err(limit)?;
    if !sq.is_soft_quasigroup() {
        escape_counterexamples(&mut report, &sq);
        return Ok(report);
    }
    let m = metrics(&sq);
    let am_ge_gm = m.gm.at_most_mean(m.order_raw);
    report
        .section("metrics")
        .put("order_raw", m.order_raw)
        .put("order_distinct_proper", m.order_distinct_proper)
        .put("am", m.am)
        .put("am_decimal", ratio_decimal(&m.am, 4))
        .put("gm", &m.gm)
        .put("gm_decimal", m.gm.decimal(4))
        .put("am_at_least_gm", yes(am_ge_gm));
    if !am_ge_gm {
        report.counterexample("am at least gm", format!("am {} below gm {}", m.am, m.gm));
    }
    let all = parastrophe_metrics(&sq).map_err(limit)?;
    let s = report.section("parastrophes");
    for (kind, pm) in &all {
        s.put(
            kind.name(),
            format!(
                "order_raw {}; order_distinct_proper {}; am {}; gm {}",
                pm.order_raw, pm.order_distinct_proper, pm.am, pm.gm
            ),
        );
    }
    let differing: Vec<OperationKind> = all
        .iter()
        .filter(|(_, pm)| *pm != m)
        .map(|(k, _)| *k)
        .collect();
    s.put("equal", yes(differing.is_empty()));
    for k in differing {
        report.counterexample(
            "metrics equal across parastrophes",
            format!("{} differs from mul", k.name()),
        );
    }
    Ok(report)
}

fn cosets_cmd(table: &CayleyTable, soft: &SoftSet, side: Side) -> Result<Report, InputError> {
    let mut report = Report::new("cosets");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    soft_set_section(&mut report, &q, soft);
    let sq = classify(&q, soft).map_err(limit)?;
    if !sq.is_soft_quasigroup() {
        escape_counterexamples(&mut report, &sq);
        return Ok(report);
    }
    for x in 0..q.order() {
        let c = coset_soft(&sq, x, side).map_err(limit)?;
        let s = report.section(format!("{} coset {}", side.name(), q.symbol(x)));
        for (p, v) in c.iter() {
            s.put(p, braced(&q, v));
        }
    }
    match verify_coset_theorems(&sq) {
        Ok(r) => {
            report
                .section("coset battery")
                .put("status", if r.passed() { "pass" } else { "fail" })
                .put("checked", r.checked)
                .put("normal", yes(r.normal));
            for f in r.findings {
                let side = f.side.map_or("both", Side::name);
                report.counterexample(
                    "coset battery",
                    format!(
                        "{side} coset {} parameter {}: {}",
                        q.symbol(f.element),
                        f.param,
                        f.message
                    ),
                );
            }
        }
        Err(CosetError::NotDistributive) => {
            report
                .section("coset battery")
                .put("status", "skipped: base is not distributive");
        }
        Err(e) => return Err(limit(e)),
    }
    if !is_normal_soft(&sq).map_err(limit)? {
        let first = soft
            .iter()
            .find(|(_, v)| matches!(is_normal_subquasigroup(&q, v), Ok(None)))
            .map(|(p, _)| p.to_string())
            .unwrap_or_default();
        report.section("quotients").put(
            "status",
            format!("skipped: parameter {first} is not normal"),
        );
        return Ok(report);
    }
    let fam = quotient_family(&sq, side).map_err(limit)?;
    for e in &fam.entries {
        let s = report.section(format!("quotient {}", e.param));
        s.put("congruence", e.congruence.render(q.symbols()))
            .put("order", e.quotient.order())
            .put("correspondence_bijective", yes(e.correspondence_bijective));
        for (i, label) in e.coset_labels.iter().enumerate() {
            s.put(e.quotient.symbol(i), braced(&q, label));
        }
        if !e.correspondence_bijective {
            report.counterexample(
                "coset correspondence",
                format!(
                    "parameter {}: cosets do not match the blocks of {}",
                    e.param,
                    e.congruence.render(q.symbols())
                ),
            );
        }
    }
    Ok(report)
}

fn congruences_cmd(table: &CayleyTable, bound: usize) -> Result<Report, InputError> {
    let mut report = Report::new("congruences");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(report);
    };
    let all = all_normal_congruences(&q, bound).map_err(limit)?;
    let s = report.section("congruences");
    s.put("count", all.len());
    for (i, c) in all.iter().enumerate() {
        s.put((i + 1).to_string(), c.render(q.symbols()));
    }
    let subs = all_subquasigroups(&q, bound).map_err(limit)?;
    let s = report.section("normal subquasigroups");
    for h in &subs {
        if let Some(theta) = is_normal_subquasigroup(&q, h).map_err(limit)? {
            s.put(braced(&q, h), theta.render(q.symbols()));
        }
    }
    Ok(report)
}

fn quotient_cmd(table: &CayleyTable, subset: &str, emit: bool) -> Result<Output, InputError> {
    let mut report = Report::new("quotient");
    let Some(q) = table_section(&mut report, "table", table) else {
        return Ok(Output::Report(report));
    };
    let h = table.parse_subset(subset).map_err(InputError::Subset)?;
    report.section("subset").put("subset", braced(&q, &h));
    if let Some(e) = closure_witness(&q, &h).map_err(limit)? {
        report.counterexample("subquasigroup", describe_escape(&q, &e, &h));
        return Ok(Output::Report(report));
    }
    let Some(theta) = is_normal_subquasigroup(&q, &h).map_err(limit)? else {
        let first = h.first().unwrap();
        let pairs: Vec<(usize, usize)> = h.iter().map(|x| (first, x)).collect();
        let theta = generated_normal_congruence(&q, &pairs);
        let block = theta
            .blocks()
            .into_iter()
            .find(|b| b.contains(first))
            .expect("every element has a block");
        report.counterexample(
            "normal subquasigroup",
            format!(
                "least congruence joining {} has class {} containing {}",
                braced(&q, &h),
                braced(&q, &block),
                q.symbol(first)
            ),
        );
        return Ok(Output::Report(report));
    };
    let quo = quotient(&q, &theta).map_err(limit)?;
    if emit {
        return Ok(Output::Raw(emit_table(quo.table())));
    }
    report
        .section("congruence")
        .put("partition", theta.render(q.symbols()));
    let s = report.section("quotient");
    s.put("order", quo.order())
        .put("symbols", quo.symbols().join(" "));
    for x in 0..quo.order() {
        let row: Vec<&str> = (0..quo.order())
            .map(|y| quo.symbol(quo.mul(x, y)))
            .collect();
        s.put(format!("row {}", quo.symbol(x)), row.join(" "));
    }
    Ok(Output::Report(report))
}

fn iso_cmd(first: &CayleyTable, second: &CayleyTable, bound: usize) -> Result<Report, InputError> {
    let mut report = Report::new("iso");
    let a = table_section(&mut report, "first", first);
    let b = table_section(&mut report, "second", second);
    let (Some(a), Some(b)) = (a, b) else {
        return Ok(report);
    };
    match are_isomorphic(&a, &b, bound).map_err(limit)? {
        Some(w) => {
            let s = report.section("isomorphism");
            s.put("isomorphic", "true");
            for x in 0..a.order() {
                s.put(a.symbol(x), b.symbol(w.apply(x)));
            }
        }
        None => {
            report.section("isomorphism").put("isomorphic", "false");
            let witness = if a.order() != b.order() {
                format!("orders differ: {} and {}", a.order(), b.order())
            } else {
                format!(
                    "no bijection of {} elements preserves the operation",
                    a.order()
                )
            };
            report.counterexample("isomorphism", witness);
        }
    }
    Ok(report)
}
