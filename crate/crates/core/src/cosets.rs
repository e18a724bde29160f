//! Coset soft sets, coset families, normal soft quasigroups and quotient
//! families.

use thiserror::Error;

use crate::congruence::{is_normal_subquasigroup, quotient, Congruence, CongruenceError};
use crate::iso::{are_isomorphic, IsoBoundExceeded, IsoWitness, DEFAULT_ISO_BOUND};
use crate::quasigroup::{Quasigroup, Side};
use crate::softquasigroup::{classify, SoftQuasigroup, SoftQuasigroupError};
use crate::softset::{SoftSet, SoftSetError};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("not a soft quasigroup")]
    NotSoftQuasigroup,
    #[error("base quasigroup is not distributive")]
    NotDistributive,
    #[error("value of parameter `{0}` is not a normal subquasigroup")]
    NotNormal(String),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
    #[error(transparent)]
    SoftSet(#[from] SoftSetError),
    #[error(transparent)]
    SoftQuasigroup(#[from] SoftQuasigroupError),
    #[error(transparent)]
    Iso(#[from] IsoBoundExceeded),
}

/// `x·H` (left) or `H·x` (right).
pub fn translate_subset(q: &Quasigroup, h: &SubsetMask, x: usize, side: Side) -> SubsetMask {
    SubsetMask::from_elements(
        q.order(),
        h.iter().map(|y| match side {
            Side::Left => q.mul(x, y),
            Side::Right => q.mul(y, x),
        }),
    )
}

fn require_soft_quasigroup(sq: &SoftQuasigroup) -> Result<(), CosetError> {
    if sq.is_soft_quasigroup() {
        Ok(())
    } else {
        Err(CosetError::NotSoftQuasigroup)
    }
}

/// The `x`-left coset soft set `a ↦ x·F(a)` or the `x`-right coset soft set
/// `a ↦ F(a)·x`.
pub fn coset_soft(sq: &SoftQuasigroup, x: usize, side: Side) -> Result<SoftSet, CosetError> {
    require_soft_quasigroup(sq)?;
    Ok(sq
        .soft()
        .map_values(|_, v| translate_subset(sq.base(), v, x, side))?)
}

/// Coset soft sets for every element of the base, in carrier order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFamily {
    pub side: Side,
    pub members: Vec<SoftSet>,
}

pub fn coset_family(sq: &SoftQuasigroup, side: Side) -> Result<CosetFamily, CosetError> {
    require_soft_quasigroup(sq)?;
    let members = (0..sq.base().order())
        .map(|x| coset_soft(sq, x, side))
        .collect::<Result<_, _>>()?;
    Ok(CosetFamily { side, members })
}

/// Every value is a normal subquasigroup.
pub fn is_normal_soft(sq: &SoftQuasigroup) -> Result<bool, CosetError> {
    require_soft_quasigroup(sq)?;
    for v in sq.soft().values() {
        if is_normal_subquasigroup(sq.base(), v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quotient of the base by `θ_{F(a)}` for one parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientEntry {
    pub param: String,
    pub congruence: Congruence,
    pub quotient: Quasigroup,
    /// For each quotient element, the coset that labels it: `x·F(a)` (left)
    /// or `F(a)·x` (right) with `x` the block's least member.
    pub coset_labels: Vec<SubsetMask>,
    /// Whether `coset value at x ↦ block of x` is a well-defined bijection
    /// from the distinct coset values onto the quotient carrier.
    pub correspondence_bijective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientFamily {
    pub side: Side,
    pub entries: Vec<QuotientEntry>,
}

/// Checks that `x ↦ coset(x)` and `x ↦ block(x)` induce a bijection between
/// the distinct coset values and the blocks.
fn correspondence_is_bijective(
    q: &Quasigroup,
    h: &SubsetMask,
    theta: &Congruence,
    side: Side,
) -> bool {
    let n = q.order();
    let cosets: Vec<SubsetMask> = (0..n).map(|x| translate_subset(q, h, x, side)).collect();
    let mut pairs: Vec<(&SubsetMask, usize)> = Vec::new();
    for (x, coset) in cosets.iter().enumerate() {
        let pair = (coset, theta.block_of(x));
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    }
    let mut values: Vec<&SubsetMask> = pairs.iter().map(|p| p.0).collect();
    let mut blocks: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    values.sort();
    values.dedup();
    blocks.sort_unstable();
    blocks.dedup();
    // a functional, injective and surjective relation has exactly as many
    // pairs as values and as blocks
    pairs.len() == values.len()
        && pairs.len() == blocks.len()
        && blocks.len() == theta.block_count()
}

/// Left quotient `{Q/F(a)}` or right quotient `{Q\F(a)}`. Both use the
/// quotient by `θ_{F(a)}`; they differ in labelling blocks by left or right
/// cosets.
pub fn quotient_family(sq: &SoftQuasigroup, side: Side) -> Result<QuotientFamily, CosetError> {
    require_soft_quasigroup(sq)?;
    let q = sq.base();
    let mut entries = Vec::with_capacity(sq.soft().len());
    for (param, h) in sq.soft().iter() {
        let theta = is_normal_subquasigroup(q, h)?
            .ok_or_else(|| CosetError::NotNormal(param.to_string()))?;
        let quo = quotient(q, &theta)?;
        let coset_labels = theta
            .blocks()
            .iter()
            .map(|b| translate_subset(q, h, b.first().unwrap(), side))
            .collect();
        entries.push(QuotientEntry {
            param: param.to_string(),
            correspondence_bijective: correspondence_is_bijective(q, h, &theta, side),
            congruence: theta,
            quotient: quo,
            coset_labels,
        });
    }
    Ok(QuotientFamily { side, entries })
}

/// A failed assertion of the coset battery, with its concrete location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFinding {
    pub side: Option<Side>,
    pub element: usize,
    pub param: String,
    pub message: String,
}

/// Outcome of the coset battery on a distributive soft quasigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetReport {
    pub normal: bool,
    /// Number of (side, element, parameter) triples examined.
    pub checked: usize,
    /// Isomorphisms `F(a) → x·F(a)` found for the left family, by element
    /// then parameter.
    pub left_witnesses: Vec<Vec<IsoWitness>>,
    pub findings: Vec<CosetFinding>,
}

impl CosetReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

/// Checks, for every element `x` and parameter `a` of a soft quasigroup over
/// a distributive base:
///
/// - both coset soft sets at `x` are distributive soft quasigroups;
/// - `F(a) ≅ x·F(a) ≅ F(a)·x`, with explicit isomorphisms;
/// - when every `F(a)` is normal, so is every coset value.
pub fn verify_coset_theorems(sq: &SoftQuasigroup) -> Result<CosetReport, CosetError> {
    require_soft_quasigroup(sq)?;
    let q = sq.base();
    if !q.properties().is_distributive() {
        return Err(CosetError::NotDistributive);
    }
    let normal = is_normal_soft(sq)?;
    let mut findings = Vec::new();
    let mut checked = 0;
    let mut left_witnesses = Vec::with_capacity(q.order());
    let induced: Vec<Quasigroup> = sq
        .soft()
        .values()
        .iter()
        .map(|v| {
            q.induced(v)
                .expect("values of a soft quasigroup are subquasigroups")
        })
        .collect();

    for x in 0..q.order() {
        let mut row = Vec::new();
        let mut sides: Vec<(Side, Vec<Option<Quasigroup>>)> = Vec::new();
        for side in [Side::Left, Side::Right] {
            let member = coset_soft(sq, x, side)?;
            let classified = classify(q, &member)?;
            let mut subs = Vec::new();
            for (i, (param, value)) in member.iter().enumerate() {
                checked += 1;
                let mut fail = |message: String| {
                    findings.push(CosetFinding {
                        side: Some(side),
                        element: x,
                        param: param.to_string(),
                        message,
                    })
                };
                if !classified.param_classes()[i].quasigroup {
                    fail(format!(
                        "coset {} is not a subquasigroup",
                        value.render_braced(q.symbols())
                    ));
                    subs.push(None);
                    continue;
                }
                if normal && is_normal_subquasigroup(q, value)?.is_none() {
                    fail(format!(
                        "coset {} is not normal",
                        value.render_braced(q.symbols())
                    ));
                }
                let sub = q.induced(value).expect("checked subquasigroup");
                match are_isomorphic(&induced[i], &sub, DEFAULT_ISO_BOUND)? {
                    Some(w) if side == Side::Left => row.push(w),
                    Some(_) => {}
                    None => fail(format!(
                        "coset {} is not isomorphic to {}",
                        value.render_braced(q.symbols()),
                        sq.soft().values()[i].render_braced(q.symbols())
                    )),
                }
                subs.push(Some(sub));
            }
            sides.push((side, subs));
        }
        // left and right members correspond parameterwise
        let (left, right) = (&sides[0].1, &sides[1].1);
        for (i, (l, r)) in left.iter().zip(right).enumerate() {
            if let (Some(l), Some(r)) = (l, r) {
                if are_isomorphic(l, r, DEFAULT_ISO_BOUND)?.is_none() {
                    findings.push(CosetFinding {
                        side: None,
                        element: x,
                        param: sq.soft().params()[i].clone(),
                        message: "left and right cosets are not isomorphic".into(),
                    });
                }
            }
        }
        left_witnesses.push(row);
    }
    Ok(CosetReport {
        normal,
        checked,
        left_witnesses,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::validate;
    use crate::softset::parse_soft_set;
    use crate::subalgebra::is_subquasigroup;
    use crate::table::{parse_table, CayleyTable};

    fn z3_medial() -> Quasigroup {
        validate(CayleyTable::from_fn(3, |x, y| (2 * x + 2 * y) % 3).unwrap()).unwrap()
    }

    fn z3sq() -> Quasigroup {
        validate(parse_table(include_str!("../fixtures/z3sq-medial.tbl")).unwrap()).unwrap()
    }

    fn sym(q: &Quasigroup, s: &str) -> usize {
        q.table().index_of(s).unwrap()
    }

    #[test]
    fn translations() {
        let q = z3_medial();
        let h = SubsetMask::singleton(3, 0);
        assert_eq!(translate_subset(&q, &h, 1, Side::Left).elements(), vec![2]);

        let q9 = z3sq();
        let h = q9.table().parse_subset("00 10 20").unwrap();
        let c = translate_subset(&q9, &h, sym(&q9, "01"), Side::Left);
        assert_eq!(c, q9.table().parse_subset("02 12 22").unwrap());
        for x in 0..9 {
            assert_eq!(translate_subset(&q9, &h, x, Side::Right).len(), 3);
        }
    }

    #[test]
    fn families() {
        let q = z3_medial();
        let s = SoftSet::new(3, [("a", SubsetMask::singleton(3, 0))]).unwrap();
        let sq = classify(&q, &s).unwrap();
        let fam = coset_family(&sq, Side::Left).unwrap();
        let vals: Vec<Vec<usize>> = fam
            .members
            .iter()
            .map(|m| m.values()[0].elements())
            .collect();
        assert_eq!(vals, vec![vec![0], vec![2], vec![1]]);

        let q9 = z3sq();
        let s = parse_soft_set("a: 00 10 20\n", q9.symbols()).unwrap();
        let sq = classify(&q9, &s).unwrap();
        let fam = coset_family(&sq, Side::Left).unwrap();
        assert_eq!(fam.members.len(), 9);
        let mut distinct: Vec<&SubsetMask> = fam.members.iter().map(|m| &m.values()[0]).collect();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 3);
        assert!(distinct.iter().all(|v| is_subquasigroup(&q9, v).unwrap()));
    }

    #[test]
    fn stabilizing_element_gives_same_soft_set() {
        let q9 = z3sq();
        let s = parse_soft_set("a: 00 10 20\n", q9.symbols()).unwrap();
        let sq = classify(&q9, &s).unwrap();
        // (0,0)·(a,0) = (2a,0) permutes Z3×{0}
        let c = coset_soft(&sq, sym(&q9, "00"), Side::Left).unwrap();
        assert!(crate::softset::soft_equal(&c, &s).unwrap());
    }

    #[test]
    fn quotient_family_of_z3_squared() {
        let q9 = z3sq();
        let s = parse_soft_set(include_str!("../fixtures/z3sq-normal.soft"), q9.symbols()).unwrap();
        let sq = classify(&q9, &s).unwrap();
        assert!(is_normal_soft(&sq).unwrap());
        for side in [Side::Left, Side::Right] {
            let fam = quotient_family(&sq, side).unwrap();
            assert_eq!(fam.entries[0].quotient.order(), 3);
            let p = fam.entries[0].quotient.properties();
            assert!(p.is_commutative && p.is_distributive());
            assert_eq!(fam.entries[1].quotient.order(), 1);
            assert!(fam.entries.iter().all(|e| e.correspondence_bijective));
        }
        let report = verify_coset_theorems(&sq).unwrap();
        assert!(report.passed(), "{:?}", report.findings);
        assert!(report.normal);
    }

    #[test]
    fn non_normal_value_is_refused() {
        let q = validate(parse_table(include_str!("../fixtures/q6.tbl")).unwrap()).unwrap();
        let s = parse_soft_set("g: 1 3 4\nh: 1 2\n", q.symbols()).unwrap();
        let sq = classify(&q, &s).unwrap();
        assert!(!is_normal_soft(&sq).unwrap());
        assert_eq!(
            quotient_family(&sq, Side::Left).unwrap_err(),
            CosetError::NotNormal("h".into())
        );
        assert_eq!(
            verify_coset_theorems(&sq).unwrap_err(),
            CosetError::NotDistributive
        );

        let s = parse_soft_set("g: 1 3 4\n", q.symbols()).unwrap();
        let fam = quotient_family(&classify(&q, &s).unwrap(), Side::Right).unwrap();
        assert_eq!(
            fam.entries[0].congruence.render(q.symbols()),
            "({1 3 4})({2 5 6})"
        );
        assert_eq!(fam.entries[0].quotient.order(), 2);
    }

    #[test]
    fn singleton_base_is_vacuous() {
        let one = validate(CayleyTable::from_fn(1, |_, _| 0).unwrap()).unwrap();
        let s = SoftSet::new(1, [("a", SubsetMask::full(1))]).unwrap();
        let sq = classify(&one, &s).unwrap();
        assert!(verify_coset_theorems(&sq).unwrap().passed());
        let fam = coset_family(&sq, Side::Right).unwrap();
        assert_eq!(fam.members, vec![s]);
    }
}
