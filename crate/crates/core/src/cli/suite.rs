use crate::congruence::{
    all_normal_congruences, is_normal_congruence, is_normal_subquasigroup, quotient,
};
use crate::cosets::{is_normal_soft, quotient_family, translate_subset, verify_coset_theorems};
use crate::iso::{are_isomorphic, DEFAULT_ISO_BOUND};
use crate::quasigroup::{validate, OperationKind, Quasigroup, Side};
use crate::softquasigroup::{
    classify, is_distributive_soft, metrics, parastrophe_metrics, soft_group_criterion,
    soft_quasigroup_criterion, verify_six_equivalences, SoftQuasigroup,
};
use crate::softset::SoftSet;
use crate::subalgebra::{
    all_subquasigroups, check_parastrophe_invariance, group_criterion, is_subquasigroup,
};
use crate::subset::SubsetMask;
use crate::table::CayleyTable;

use super::{braced, limit, parastrophe_law, InputError, Report};

/// Largest order for which the subgroup criterion visits every subset.
const SUBSET_SCAN_LIMIT: usize = 12;

enum Outcome {
    Ran {
        checked: usize,
        failures: Vec<String>,
    },
    Skipped(String),
}

struct Battery {
    name: &'static str,
    outcome: Outcome,
}

fn ran(name: &'static str, checked: usize, failures: Vec<String>) -> Battery {
    Battery {
        name,
        outcome: Outcome::Ran { checked, failures },
    }
}

fn skipped(name: &'static str, reason: impl Into<String>) -> Battery {
    Battery {
        name,
        outcome: Outcome::Skipped(reason.into()),
    }
}

pub(super) fn run_suite(
    table: &CayleyTable,
    soft: Option<&SoftSet>,
    bound: usize,
) -> Result<Report, InputError> {
    let mut report = Report::new("suite");
    let latin = validate(table.clone());
    let mut batteries = vec![ran(
        "latin square",
        2 * table.order(),
        latin
            .as_ref()
            .err()
            .map(|v| v.describe())
            .unwrap_or_default(),
    )];
    match &latin {
        Ok(q) => table_batteries(q, soft, bound, &mut batteries)?,
        Err(_) => {
            report.invalid();
            for name in
                TABLE_BATTERIES
                    .iter()
                    .chain(if soft.is_some() { SOFT_BATTERIES } else { &[] })
            {
                batteries.push(skipped(name, "table is not a Latin square"));
            }
        }
    }

    let run_count = batteries
        .iter()
        .filter(|b| matches!(b.outcome, Outcome::Ran { .. }))
        .count();
    report
        .section("suite")
        .put("order", table.order())
        .put(
            "soft_set",
            soft.map_or("none".to_string(), |s| format!("{} parameters", s.len())),
        )
        .put("batteries_run", run_count)
        .put("batteries_skipped", batteries.len() - run_count);
    let mut failures = Vec::new();
    let s = report.section("batteries");
    for b in &batteries {
        match &b.outcome {
            Outcome::Ran {
                checked,
                failures: f,
            } => {
                let verdict = if f.is_empty() { "pass" } else { "fail" };
                s.put(b.name, format!("{verdict} ({checked} checked)"));
                failures.extend(f.iter().map(|w| (b.name, w.clone())));
            }
            Outcome::Skipped(reason) => {
                s.put(b.name, format!("skipped: {reason}"));
            }
        }
    }
    for (name, w) in failures {
        report.counterexample(name, w);
    }
    Ok(report)
}

const TABLE_BATTERIES: &[&str] = &[
    "parastrophe laws",
    "subquasigroups across parastrophes",
    "subgroup criterion",
    "normal congruences",
    "translations in distributive quasigroups",
];

const SOFT_BATTERIES: &[&str] = &[
    "soft quasigroup across parastrophes",
    "soft quasigroup criterion",
    "soft group criterion",
    "metrics across parastrophes",
    "distributive soft quasigroup",
    "coset battery",
    "quotient family",
];

fn table_batteries(
    q: &Quasigroup,
    soft: Option<&SoftSet>,
    bound: usize,
    out: &mut Vec<Battery>,
) -> Result<(), InputError> {
    let n = q.order();
    let props = q.properties();
    out.push(parastrophe_laws(q));

    let subs = if n <= bound {
        Some(all_subquasigroups(q, bound).map_err(limit)?)
    } else {
        None
    };
    let over_bound = || format!("order {n} above enumeration bound {bound}");

    out.push(match &subs {
        Some(subs) => {
            let mut failures = Vec::new();
            for h in subs {
                if !check_parastrophe_invariance(q, h).map_err(limit)? {
                    failures.push(format!(
                        "{} is not a subquasigroup of every parastrophe",
                        braced(q, h)
                    ));
                }
            }
            ran("subquasigroups across parastrophes", subs.len(), failures)
        }
        None => skipped("subquasigroups across parastrophes", over_bound()),
    });

    out.push(if !props.is_group {
        skipped("subgroup criterion", "table is not a group")
    } else if n > SUBSET_SCAN_LIMIT {
        skipped(
            "subgroup criterion",
            format!("order {n} above subset scan limit {SUBSET_SCAN_LIMIT}"),
        )
    } else {
        let mut failures = Vec::new();
        for bits in 1u64..1 << n {
            let h = SubsetMask::from_bits(n, bits);
            let c = group_criterion(q, &h).map_err(limit)?;
            if !c.agree() {
                failures.push(format!(
                    "{}: subloop {}, subgroup {}, closed under / {}, closed under \\ {}",
                    braced(q, &h),
                    c.is_subloop,
                    c.is_subgroup,
                    c.rdiv_closed,
                    c.ldiv_closed
                ));
            }
        }
        ran("subgroup criterion", (1usize << n) - 1, failures)
    });

    out.push(match &subs {
        Some(subs) => normal_congruences(q, subs, bound)?,
        None => skipped("normal congruences", over_bound()),
    });

    out.push(if !props.is_distributive() {
        skipped(
            "translations in distributive quasigroups",
            "base is not distributive",
        )
    } else if n > DEFAULT_ISO_BOUND {
        skipped(
            "translations in distributive quasigroups",
            format!("order {n} above isomorphism bound {DEFAULT_ISO_BOUND}"),
        )
    } else {
        match &subs {
            Some(subs) => distributive_translations(q, subs)?,
            None => skipped("translations in distributive quasigroups", over_bound()),
        }
    });

    if let Some(soft) = soft {
        soft_batteries(q, soft, out)?;
    }
    Ok(())
}

fn parastrophe_laws(q: &Quasigroup) -> Battery {
    let n = q.order();
    let mut failures = Vec::new();
    let mut checked = 0;
    for kind in OperationKind::PARASTROPHES {
        let p = q.parastrophe(kind);
        let (law, holds) = parastrophe_law(kind);
        for x in 0..n {
            for y in 0..n {
                checked += 1;
                if !holds(q, x, y, p.mul(x, y)) {
                    failures.push(format!("{law} fails at ({}, {})", q.symbol(x), q.symbol(y)));
                }
            }
        }
    }
    // deriving from any member must land on the same six tables
    for member in q.family() {
        for kind in OperationKind::ALL {
            checked += 1;
            if member.parastrophe(kind).table() != q.parastrophe(kind).table() {
                failures.push(format!(
                    "{} taken from the {} table differs",
                    kind.name(),
                    member.kind().name()
                ));
            }
        }
    }
    ran("parastrophe laws", checked, failures)
}

fn normal_congruences(
    q: &Quasigroup,
    subs: &[SubsetMask],
    bound: usize,
) -> Result<Battery, InputError> {
    let all = all_normal_congruences(q, bound).map_err(limit)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for c in &all {
        checked += 1;
        if !is_normal_congruence(q, c).map_err(limit)? {
            failures.push(format!(
                "{} is not a normal congruence",
                c.render(q.symbols())
            ));
        }
        if let Err(e) = quotient(q, c) {
            failures.push(format!("{}: {e}", c.render(q.symbols())));
        }
    }
    for h in subs {
        checked += 1;
        let normal = is_normal_subquasigroup(q, h).map_err(limit)?.is_some();
        let is_class = all.iter().any(|c| c.blocks().contains(h));
        if normal != is_class {
            failures.push(format!(
                "{}: generated congruence says normal {normal}, enumeration says class {is_class}",
                braced(q, h)
            ));
        }
    }
    Ok(ran("normal congruences", checked, failures))
}

fn distributive_translations(q: &Quasigroup, subs: &[SubsetMask]) -> Result<Battery, InputError> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for h in subs {
        let sub = q.induced(h).expect("subquasigroups induce quasigroups");
        let normal = is_normal_subquasigroup(q, h).map_err(limit)?.is_some();
        for side in [Side::Left, Side::Right] {
            for x in 0..q.order() {
                checked += 1;
                let c = translate_subset(q, h, x, side);
                let at = format!("{} of {} by {}", side.name(), braced(q, h), q.symbol(x));
                if !is_subquasigroup(q, &c).map_err(limit)? {
                    failures.push(format!("{at}: {} is not a subquasigroup", braced(q, &c)));
                    continue;
                }
                let translated = q.induced(&c).expect("checked subquasigroup");
                if are_isomorphic(&sub, &translated, DEFAULT_ISO_BOUND)
                    .map_err(limit)?
                    .is_none()
                {
                    failures.push(format!("{at}: {} is not isomorphic to it", braced(q, &c)));
                }
                if normal && is_normal_subquasigroup(q, &c).map_err(limit)?.is_none() {
                    failures.push(format!("{at}: {} is not normal", braced(q, &c)));
                }
            }
        }
    }
    Ok(ran(
        "translations in distributive quasigroups",
        checked,
        failures,
    ))
}

fn soft_batteries(
    q: &Quasigroup,
    soft: &SoftSet,
    out: &mut Vec<Battery>,
) -> Result<(), InputError> {
    let sq = classify(q, soft).map_err(limit)?;
    let props = q.properties();

    let same = verify_six_equivalences(q, soft).map_err(limit)?;
    out.push(ran(
        "soft quasigroup across parastrophes",
        6,
        if same {
            Vec::new()
        } else {
            vec!["soft quasigroup status differs between parastrophes".into()]
        },
    ));

    let criterion = soft_quasigroup_criterion(q, soft).map_err(limit)?;
    out.push(ran(
        "soft quasigroup criterion",
        soft.len(),
        if criterion == sq.is_soft_quasigroup() {
            Vec::new()
        } else {
            vec![format!(
                "closure under ·, \\ and / is {criterion}, soft quasigroup is {}",
                sq.is_soft_quasigroup()
            )]
        },
    ));

    out.push(if props.is_group {
        let c = soft_group_criterion(q, soft).map_err(limit)?;
        ran(
            "soft group criterion",
            4,
            if c.agree() {
                Vec::new()
            } else {
                vec![format!(
                    "soft group {}, soft loop {}, soft groupoid under / {}, soft groupoid under \\ {}",
                    c.soft_group, c.soft_loop, c.rdiv_soft_groupoid, c.ldiv_soft_groupoid
                )]
            },
        )
    } else {
        skipped("soft group criterion", "table is not a group")
    });

    if !sq.is_soft_quasigroup() {
        for name in &SOFT_BATTERIES[3..] {
            out.push(skipped(
                name,
                format!("soft set is a {}, not a soft quasigroup", sq.class().name()),
            ));
        }
        return Ok(());
    }

    out.push(metric_battery(&sq)?);

    out.push(if props.is_distributive() {
        let report = is_distributive_soft(&sq).map_err(limit)?;
        let failures = report
            .corollaries
            .iter()
            .filter(|c| !c.holds())
            .map(|c| {
                format!(
                    "{}: soft quasigroup {}, distributive {}, idempotent {}, flexible {}",
                    c.kind.name(),
                    c.soft_quasigroup,
                    c.distributive,
                    c.idempotent,
                    c.flexible
                )
            })
            .collect();
        ran(
            "distributive soft quasigroup",
            report.corollaries.len(),
            failures,
        )
    } else {
        skipped("distributive soft quasigroup", "base is not distributive")
    });

    out.push(if !props.is_distributive() {
        skipped("coset battery", "base is not distributive")
    } else if q.order() > DEFAULT_ISO_BOUND {
        skipped(
            "coset battery",
            format!(
                "order {} above isomorphism bound {DEFAULT_ISO_BOUND}",
                q.order()
            ),
        )
    } else {
        let r = verify_coset_theorems(&sq).map_err(limit)?;
        let failures = r
            .findings
            .iter()
            .map(|f| {
                format!(
                    "{} coset {} parameter {}: {}",
                    f.side.map_or("both", Side::name),
                    q.symbol(f.element),
                    f.param,
                    f.message
                )
            })
            .collect();
        ran("coset battery", r.checked, failures)
    });

    out.push(if is_normal_soft(&sq).map_err(limit)? {
        let mut failures = Vec::new();
        let mut checked = 0;
        for side in [Side::Left, Side::Right] {
            for e in quotient_family(&sq, side).map_err(limit)?.entries {
                checked += 1;
                if !e.correspondence_bijective {
                    failures.push(format!(
                        "{} quotient by {}: cosets do not match blocks",
                        side.name(),
                        e.param
                    ));
                }
            }
        }
        ran("quotient family", checked, failures)
    } else {
        skipped(
            "quotient family",
            "some value is not a normal subquasigroup",
        )
    });
    Ok(())
}

fn metric_battery(sq: &SoftQuasigroup) -> Result<Battery, InputError> {
    let m = metrics(sq);
    let mut failures = Vec::new();
    if !m.gm.at_most_mean(m.order_raw) {
        failures.push(format!("am {} below gm {}", m.am, m.gm));
    }
    let all = parastrophe_metrics(sq).map_err(limit)?;
    for (kind, pm) in &all {
        if *pm != m {
            failures.push(format!(
                "{}: order_raw {}, am {}, gm {} against {}, {}, {}",
                kind.name(),
                pm.order_raw,
                pm.am,
                pm.gm,
                m.order_raw,
                m.am,
                m.gm
            ));
        }
    }
    Ok(ran("metrics across parastrophes", all.len() + 1, failures))
}
