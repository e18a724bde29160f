//! Soft sets over a quasigroup: classification, soft parastrophes, the
//! group and quasigroup criteria, distributivity, nuclei and metrics.

use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::quasigroup::{OperationKind, PropertyReport, Quasigroup};
use crate::softset::SoftSet;
use crate::subalgebra::{self, is_closed, is_subquasigroup, Escape, SubalgebraError};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoftQuasigroupError {
    #[error("soft set is over a universe of size {soft}, base has order {base}")]
    UniverseMismatch { soft: usize, base: usize },
    #[error("soft quasigroups are over different bases")]
    BaseMismatch,
    #[error("base is not a group")]
    NotAGroup,
    #[error(transparent)]
    Subalgebra(#[from] SubalgebraError),
}

/// Strength of the structure a soft set carries over its base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SoftClass {
    /// Some value is not closed under the base operation.
    Plain,
    Groupoid,
    Quasigroup,
    Loop,
    Group,
}

impl SoftClass {
    pub fn name(self) -> &'static str {
        match self {
            SoftClass::Plain => "soft set",
            SoftClass::Groupoid => "soft groupoid",
            SoftClass::Quasigroup => "soft quasigroup",
            SoftClass::Loop => "soft loop",
            SoftClass::Group => "soft group",
        }
    }
}

impl fmt::Display for SoftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What one parameter's value is inside the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamClass {
    pub groupoid: bool,
    pub quasigroup: bool,
    pub is_loop: bool,
    pub group: bool,
    /// First product leaving the value under `·`, `\` or `/`.
    pub escape: Option<Escape>,
}

impl ParamClass {
    pub fn class(&self) -> SoftClass {
        if self.group {
            SoftClass::Group
        } else if self.is_loop {
            SoftClass::Loop
        } else if self.quasigroup {
            SoftClass::Quasigroup
        } else if self.groupoid {
            SoftClass::Groupoid
        } else {
            SoftClass::Plain
        }
    }
}

fn classify_value(base: &Quasigroup, h: &SubsetMask) -> Result<ParamClass, SubalgebraError> {
    let groupoid = is_closed(base, OperationKind::Mul, h)?;
    let escape = subalgebra::closure_witness(base, h)?;
    let quasigroup = escape.is_none();
    let sub = if quasigroup { base.induced(h) } else { None };
    let is_loop = sub.as_ref().is_some_and(|s| s.identity().is_some());
    let group = is_loop && sub.as_ref().is_some_and(|s| s.properties().is_associative);
    Ok(ParamClass {
        groupoid,
        quasigroup,
        is_loop,
        group,
        escape,
    })
}

/// A soft set classified against a base quasigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftQuasigroup {
    base: Quasigroup,
    soft: SoftSet,
    params: Vec<ParamClass>,
}

impl SoftQuasigroup {
    pub fn base(&self) -> &Quasigroup {
        &self.base
    }

    pub fn soft(&self) -> &SoftSet {
        &self.soft
    }

    /// Per-parameter classification, in parameter order.
    pub fn param_classes(&self) -> &[ParamClass] {
        &self.params
    }

    /// Strongest class holding for every parameter.
    pub fn class(&self) -> SoftClass {
        self.params
            .iter()
            .map(ParamClass::class)
            .min()
            .unwrap_or(SoftClass::Plain)
    }

    /// Every value is a subquasigroup of the base.
    pub fn is_soft_quasigroup(&self) -> bool {
        self.params.iter().all(|p| p.quasigroup)
    }
}

pub fn classify(base: &Quasigroup, soft: &SoftSet) -> Result<SoftQuasigroup, SoftQuasigroupError> {
    if soft.universe() != base.order() {
        return Err(SoftQuasigroupError::UniverseMismatch {
            soft: soft.universe(),
            base: base.order(),
        });
    }
    let params = soft
        .values()
        .iter()
        .map(|h| classify_value(base, h))
        .collect::<Result<_, _>>()?;
    Ok(SoftQuasigroup {
        base: base.clone(),
        soft: soft.clone(),
        params,
    })
}

/// The same soft set over the `kind` parastrophe of the base's origin.
pub fn soft_parastrophe(
    sq: &SoftQuasigroup,
    kind: OperationKind,
) -> Result<SoftQuasigroup, SoftQuasigroupError> {
    if kind == sq.base.kind() {
        return Ok(sq.clone());
    }
    classify(&sq.base.parastrophe(kind), &sq.soft)
}

/// Soft-quasigroup status over each of the six parastrophes, in
/// [`OperationKind::ALL`] order.
pub fn six_statuses(
    base: &Quasigroup,
    soft: &SoftSet,
) -> Result<[(OperationKind, bool); 6], SoftQuasigroupError> {
    let mut out = [(OperationKind::Mul, false); 6];
    for (slot, member) in out.iter_mut().zip(base.family()) {
        *slot = (member.kind(), classify(&member, soft)?.is_soft_quasigroup());
    }
    Ok(out)
}

/// True iff the six statuses coincide, whether all true or all false.
pub fn verify_six_equivalences(
    base: &Quasigroup,
    soft: &SoftSet,
) -> Result<bool, SoftQuasigroupError> {
    let s = six_statuses(base, soft)?;
    Ok(s.iter().all(|&(_, b)| b == s[0].1))
}

fn is_soft_groupoid(
    base: &Quasigroup,
    kind: OperationKind,
    soft: &SoftSet,
) -> Result<bool, SubalgebraError> {
    for h in soft.values() {
        if !is_closed(base, kind, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Soft groupoid under `·`, `\` and `/` simultaneously.
pub fn soft_quasigroup_criterion(
    base: &Quasigroup,
    soft: &SoftSet,
) -> Result<bool, SoftQuasigroupError> {
    if soft.universe() != base.order() {
        return Err(SoftQuasigroupError::UniverseMismatch {
            soft: soft.universe(),
            base: base.order(),
        });
    }
    for kind in subalgebra::DIVISION_SIGNATURE {
        if !is_soft_groupoid(base, kind, soft)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four statements that coincide for a soft set over a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SoftGroupCriterion {
    pub soft_group: bool,
    pub soft_loop: bool,
    pub rdiv_soft_groupoid: bool,
    pub ldiv_soft_groupoid: bool,
}

impl SoftGroupCriterion {
    pub fn agree(&self) -> bool {
        let f = [
            self.soft_group,
            self.soft_loop,
            self.rdiv_soft_groupoid,
            self.ldiv_soft_groupoid,
        ];
        f.iter().all(|&b| b == f[0])
    }
}

pub fn soft_group_criterion(
    base: &Quasigroup,
    soft: &SoftSet,
) -> Result<SoftGroupCriterion, SoftQuasigroupError> {
    if soft.universe() != base.order() {
        return Err(SoftQuasigroupError::UniverseMismatch {
            soft: soft.universe(),
            base: base.order(),
        });
    }
    if !base.properties().is_group {
        return Err(SoftQuasigroupError::NotAGroup);
    }
    let mut soft_group = true;
    let mut soft_loop = true;
    for h in soft.values() {
        let c = subalgebra::group_criterion(base, h)?;
        soft_group &= c.is_subgroup;
        soft_loop &= c.is_subloop;
    }
    Ok(SoftGroupCriterion {
        soft_group,
        soft_loop,
        rdiv_soft_groupoid: is_soft_groupoid(base, OperationKind::RDiv, soft)?,
        ldiv_soft_groupoid: is_soft_groupoid(base, OperationKind::LDiv, soft)?,
    })
}

/// `F ≤ G`: parameters of `F` are among those of `G`, and each `F(a)` is a
/// subquasigroup of the quasigroup induced on `G(a)`.
pub fn soft_subquasigroup_of(
    f: &SoftQuasigroup,
    g: &SoftQuasigroup,
) -> Result<bool, SoftQuasigroupError> {
    if f.base.table() != g.base.table() {
        return Err(SoftQuasigroupError::BaseMismatch);
    }
    for (p, fv) in f.soft.iter() {
        let Some(gv) = g.soft.get(p) else {
            return Ok(false);
        };
        if !fv.is_subset(gv) || !is_subquasigroup(&g.base, gv)? || !is_subquasigroup(&f.base, fv)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Geometric mean kept exact as `product^(1/degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometricMean {
    pub product: BigUint,
    pub degree: u32,
}

impl GeometricMean {
    /// Decimal value rounded half-to-even at `places` fractional digits,
    /// computed with integer roots only.
    pub fn decimal(&self, places: u32) -> String {
        let k = self.degree;
        let scale = |digits: u32| BigUint::from(10u32).pow(digits * k);
        // floor(root * 10^(places+1))
        let wide = (&self.product * scale(places + 1)).nth_root(k);
        let exact = wide.pow(k) == &self.product * scale(places + 1);
        let ten = BigUint::from(10u32);
        let mut kept = &wide / &ten;
        let digit = (&wide % &ten).to_u32().unwrap();
        let round_up = match digit {
            0..=4 => false,
            6..=9 => true,
            _ if !exact => true,
            _ => (&kept % 2u32) == BigUint::one(),
        };
        if round_up {
            kept += 1u32;
        }
        let unit = BigUint::from(10u32).pow(places);
        let int = &kept / &unit;
        let frac = &kept % &unit;
        if places == 0 {
            int.to_string()
        } else {
            format!(
                "{}.{:0>width$}",
                int,
                frac.to_string(),
                width = places as usize
            )
        }
    }

    /// `AM ≥ GM`, decided as `sum^degree ≥ product · degree^degree`.
    pub fn at_most_mean(&self, sum: u64) -> bool {
        let k = self.degree;
        BigUint::from(sum).pow(k) >= &self.product * BigUint::from(k).pow(k)
    }
}

impl fmt::Display for GeometricMean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "{}", self.product)
        } else {
            write!(f, "{}^(1/{})", self.product, self.degree)
        }
    }
}

/// Order and mean cardinality of a soft quasigroup's values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metrics {
    /// `Σ |F(a)|` over all parameters.
    pub order_raw: u64,
    /// `Σ |H|` over the distinct values `H` that are proper subquasigroups.
    pub order_distinct_proper: u64,
    pub am: Ratio<u64>,
    pub gm: GeometricMean,
}

pub fn metrics(sq: &SoftQuasigroup) -> Metrics {
    let values = sq.soft.values();
    let sizes: Vec<u64> = values.iter().map(|v| v.len() as u64).collect();
    let order_raw: u64 = sizes.iter().sum();
    let mut distinct: Vec<&SubsetMask> = Vec::new();
    for (v, c) in values.iter().zip(&sq.params) {
        if c.quasigroup && !v.is_full() && !distinct.contains(&v) {
            distinct.push(v);
        }
    }
    let order_distinct_proper = distinct.iter().map(|v| v.len() as u64).sum();
    let degree = values.len() as u32;
    let product = sizes
        .iter()
        .fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));
    debug_assert!(!product.is_zero());
    Metrics {
        order_raw,
        order_distinct_proper,
        am: Ratio::new(order_raw, degree as u64),
        gm: GeometricMean { product, degree },
    }
}

/// Metrics of the soft quasigroup over every member of the base's family.
pub fn parastrophe_metrics(
    sq: &SoftQuasigroup,
) -> Result<Vec<(OperationKind, Metrics)>, SoftQuasigroupError> {
    OperationKind::ALL
        .into_iter()
        .map(|k| Ok((k, metrics(&soft_parastrophe(sq, k)?))))
        .collect()
}

/// True iff the metrics agree exactly across all six parastrophes.
pub fn parastrophe_metric_equality(sq: &SoftQuasigroup) -> Result<bool, SoftQuasigroupError> {
    let all = parastrophe_metrics(sq)?;
    Ok(all.iter().all(|(_, m)| *m == all[0].1))
}

/// Laws re-verified on one member of the parastrophe family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistributiveCorollary {
    pub kind: OperationKind,
    pub soft_quasigroup: bool,
    pub distributive: bool,
    pub idempotent: bool,
    pub flexible: bool,
}

impl DistributiveCorollary {
    pub fn holds(&self) -> bool {
        self.soft_quasigroup && self.distributive && self.idempotent && self.flexible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributiveReport {
    pub distributive: bool,
    /// Filled for distributive bases, one entry per parastrophe.
    pub corollaries: Vec<DistributiveCorollary>,
}

/// A soft quasigroup is distributive when its base is. For a distributive
/// base every parastrophe is checked to be a distributive, idempotent and
/// flexible soft quasigroup.
pub fn is_distributive_soft(
    sq: &SoftQuasigroup,
) -> Result<DistributiveReport, SoftQuasigroupError> {
    let props: PropertyReport = sq.base.properties();
    if !props.is_distributive() {
        return Ok(DistributiveReport {
            distributive: false,
            corollaries: Vec::new(),
        });
    }
    let mut corollaries = Vec::with_capacity(6);
    for kind in OperationKind::ALL {
        let p = soft_parastrophe(sq, kind)?;
        let pp = p.base.properties();
        corollaries.push(DistributiveCorollary {
            kind,
            soft_quasigroup: p.is_soft_quasigroup(),
            distributive: pp.is_distributive(),
            idempotent: pp.is_idempotent,
            flexible: pp.is_flexible,
        });
    }
    Ok(DistributiveReport {
        distributive: true,
        corollaries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuclearCheck {
    pub is_left_nuclear: bool,
    pub is_right_nuclear: bool,
}

/// Whether some value equals the left (right) nucleus of the base.
pub fn nuclear_check(sq: &SoftQuasigroup) -> NuclearCheck {
    let nuc = sq.base.nuclei();
    NuclearCheck {
        is_left_nuclear: sq.soft.values().contains(&nuc.left),
        is_right_nuclear: sq.soft.values().contains(&nuc.right),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::validate;
    use crate::softset::parse_soft_set;
    use crate::table::{parse_table, CayleyTable};

    fn load(table: &str, soft: &str) -> (Quasigroup, SoftSet) {
        let q = validate(parse_table(table).unwrap()).unwrap();
        let s = parse_soft_set(soft, q.symbols()).unwrap();
        (q, s)
    }

    fn z4() -> Quasigroup {
        validate(CayleyTable::from_fn(4, |x, y| (x + y) % 4).unwrap()).unwrap()
    }

    fn z3_medial() -> Quasigroup {
        validate(CayleyTable::from_fn(3, |x, y| (2 * x + 2 * y) % 3).unwrap()).unwrap()
    }

    fn q8_chain() -> SoftQuasigroup {
        let (q, s) = load(
            include_str!("../fixtures/q8.tbl"),
            include_str!("../fixtures/q8-chain.soft"),
        );
        classify(&q, &s).unwrap()
    }

    fn q6_soft() -> SoftQuasigroup {
        let (q, s) = load(
            include_str!("../fixtures/q6.tbl"),
            include_str!("../fixtures/q6-soft.soft"),
        );
        classify(&q, &s).unwrap()
    }

    #[test]
    fn classification() {
        let sq = q8_chain();
        assert!(sq.is_soft_quasigroup());
        assert!(sq.class() >= SoftClass::Quasigroup);

        let (q, s) = load(include_str!("../fixtures/q6.tbl"), "g3: 1 2 3\n");
        let sq = classify(&q, &s).unwrap();
        assert!(!sq.is_soft_quasigroup());
        // 2·3 = 5 is the first product to leave {1 2 3}
        let esc = sq.param_classes()[0].escape.unwrap();
        assert_eq!(
            (esc.kind, esc.x + 1, esc.y + 1, esc.z + 1),
            (OperationKind::Mul, 2, 3, 5)
        );

        let (q, s) = load(include_str!("../fixtures/q6.tbl"), "a: 1 2 3 4 5 6\n");
        assert!(classify(&q, &s).unwrap().is_soft_quasigroup());

        let wrong = SoftSet::new(3, [("a", SubsetMask::full(3))]).unwrap();
        assert!(matches!(
            classify(&q, &wrong),
            Err(SoftQuasigroupError::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn parastrophes_preserve_status() {
        let sq = q6_soft();
        for k in OperationKind::ALL {
            assert!(
                soft_parastrophe(&sq, k).unwrap().is_soft_quasigroup(),
                "{k}"
            );
        }
        assert_eq!(soft_parastrophe(&sq, OperationKind::Mul).unwrap(), sq);
        assert!(verify_six_equivalences(sq.base(), sq.soft()).unwrap());

        let (q, s) = load(include_str!("../fixtures/q6.tbl"), "g: 1 2 3\n");
        let st = six_statuses(&q, &s).unwrap();
        assert!(st.iter().all(|&(_, b)| !b));
        assert!(verify_six_equivalences(&q, &s).unwrap());
    }

    #[test]
    fn criteria() {
        let sq = q8_chain();
        assert!(soft_quasigroup_criterion(sq.base(), sq.soft()).unwrap());
        let z = z4();
        let bad = SoftSet::new(4, [("a", SubsetMask::from_elements(4, [0, 1]))]).unwrap();
        assert!(!soft_quasigroup_criterion(&z, &bad).unwrap());

        let good = SoftSet::new(
            4,
            [
                ("a", SubsetMask::from_elements(4, [0, 2])),
                ("b", SubsetMask::singleton(4, 0)),
            ],
        )
        .unwrap();
        let c = soft_group_criterion(&z, &good).unwrap();
        assert!(c.agree() && c.soft_group);
        let c = soft_group_criterion(&z, &bad).unwrap();
        assert!(c.agree() && !c.soft_group);
        assert_eq!(
            soft_group_criterion(q6_soft().base(), q6_soft().soft()),
            Err(SoftQuasigroupError::NotAGroup)
        );
    }

    #[test]
    fn soft_subquasigroups() {
        let (q, f) = load(
            include_str!("../fixtures/q8.tbl"),
            include_str!("../fixtures/q8-lower.soft"),
        );
        let g = parse_soft_set(include_str!("../fixtures/q8-upper.soft"), q.symbols()).unwrap();
        let f = classify(&q, &f).unwrap();
        let g = classify(&q, &g).unwrap();
        assert!(soft_subquasigroup_of(&f, &g).unwrap());
        assert!(!soft_subquasigroup_of(&g, &f).unwrap());
        assert!(soft_subquasigroup_of(&f, &f).unwrap());
        assert_eq!(
            soft_subquasigroup_of(&f, &q6_soft()),
            Err(SoftQuasigroupError::BaseMismatch)
        );
    }

    #[test]
    fn metrics_of_fixtures() {
        let m = metrics(&q8_chain());
        assert_eq!(m.order_raw, 10);
        assert_eq!(m.order_distinct_proper, 10);
        assert_eq!(m.am, Ratio::new(10, 3));
        assert_eq!(m.gm.product, BigUint::from(32u32));
        assert_eq!(m.gm.degree, 3);
        assert_eq!(m.gm.decimal(4), "3.1748");

        let m = metrics(&q6_soft());
        assert_eq!(m.order_raw, 6);
        assert_eq!(m.am, Ratio::from_integer(2));
        assert_eq!(m.gm.to_string(), "6^(1/3)");
        assert_eq!(m.gm.decimal(4), "1.8171");
        assert!(m.gm.at_most_mean(m.order_raw));

        let one = validate(CayleyTable::from_fn(1, |_, _| 0).unwrap()).unwrap();
        let s = SoftSet::new(1, [("a", SubsetMask::full(1))]).unwrap();
        let m = metrics(&classify(&one, &s).unwrap());
        assert_eq!(
            (m.order_raw, m.am, m.gm.to_string()),
            (1, Ratio::from_integer(1), "1".into())
        );
        assert_eq!(m.order_distinct_proper, 0);
    }

    #[test]
    fn gm_decimal_rounding() {
        let gm = |p: u32, k: u32| GeometricMean {
            product: BigUint::from(p),
            degree: k,
        };
        assert_eq!(gm(4, 2).decimal(4), "2.0000");
        assert_eq!(gm(2, 2).decimal(4), "1.4142");
        // sqrt(10) = 3.16227766...
        assert_eq!(gm(10, 2).decimal(4), "3.1623");
        assert_eq!(gm(8, 2).decimal(0), "3");
        assert_eq!(gm(2, 2).decimal(0), "1");
        assert_eq!(gm(100_005, 1).decimal(2), "100005.00");
    }

    #[test]
    fn metrics_agree_across_parastrophes() {
        assert!(parastrophe_metric_equality(&q6_soft()).unwrap());
        assert!(parastrophe_metric_equality(&q8_chain()).unwrap());
    }

    #[test]
    fn distributive_and_nuclear() {
        let base = z3_medial();
        let s = SoftSet::new(3, [("a", SubsetMask::singleton(3, 0))]).unwrap();
        let sq = classify(&base, &s).unwrap();
        let r = is_distributive_soft(&sq).unwrap();
        assert!(r.distributive);
        assert_eq!(r.corollaries.len(), 6);
        assert!(r.corollaries.iter().all(DistributiveCorollary::holds));
        assert_eq!(
            nuclear_check(&sq),
            NuclearCheck {
                is_left_nuclear: false,
                is_right_nuclear: false
            }
        );

        assert!(!is_distributive_soft(&q6_soft()).unwrap().distributive);

        let z = z4();
        let s = SoftSet::new(4, [("a", SubsetMask::full(4))]).unwrap();
        let n = nuclear_check(&classify(&z, &s).unwrap());
        assert!(n.is_left_nuclear && n.is_right_nuclear);

        let one = validate(CayleyTable::from_fn(1, |_, _| 0).unwrap()).unwrap();
        let s = SoftSet::new(1, [("a", SubsetMask::full(1))]).unwrap();
        let sq = classify(&one, &s).unwrap();
        assert!(is_distributive_soft(&sq).unwrap().distributive);
        let n = nuclear_check(&sq);
        assert!(n.is_left_nuclear && n.is_right_nuclear);
    }
}
