//! Closure, subquasigroup tests and subquasigroup enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

use crate::quasigroup::{OperationKind, Quasigroup};
use crate::subset::SubsetMask;
use crate::table::CayleyTable;

/// Largest order `all_subquasigroups` accepts unless told otherwise.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// Up to this order enumeration scans every subset directly.
const DIRECT_SCAN_LIMIT: usize = 12;

/// The three operations whose joint closure characterizes subquasigroups.
pub const DIVISION_SIGNATURE: [OperationKind; 3] =
    [OperationKind::Mul, OperationKind::LDiv, OperationKind::RDiv];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset lives in a carrier of size {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("subset is not a subquasigroup")]
    NotSubquasigroup,
    #[error("table is not a group")]
    NotAGroup,
}

fn check_subset(n: usize, h: &SubsetMask) -> Result<(), SubalgebraError> {
    if h.universe() != n {
        return Err(SubalgebraError::UniverseMismatch {
            expected: n,
            found: h.universe(),
        });
    }
    if h.is_empty() {
        return Err(SubalgebraError::EmptySubset);
    }
    Ok(())
}

/// A product that escapes a subset: `x kind y = z` with `x, y` inside and
/// `z` outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Escape {
    pub kind: OperationKind,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

fn first_escape(q: &Quasigroup, kind: OperationKind, h: &SubsetMask) -> Option<Escape> {
    h.iter().find_map(|x| {
        h.iter().find_map(|y| {
            let z = q.evaluate(kind, x, y);
            (!h.contains(z)).then_some(Escape { kind, x, y, z })
        })
    })
}

/// Whether `h` is closed under the `kind` operation of `q`.
pub fn is_closed(
    q: &Quasigroup,
    kind: OperationKind,
    h: &SubsetMask,
) -> Result<bool, SubalgebraError> {
    check_subset(q.order(), h)?;
    Ok(first_escape(q, kind, h).is_none())
}

/// First escaping product under `·`, `\` or `/`, in that order.
pub fn closure_witness(q: &Quasigroup, h: &SubsetMask) -> Result<Option<Escape>, SubalgebraError> {
    check_subset(q.order(), h)?;
    Ok(DIVISION_SIGNATURE
        .into_iter()
        .find_map(|k| first_escape(q, k, h)))
}

/// `h` is a subquasigroup iff it is closed under `·`, `\` and `/`.
pub fn is_subquasigroup(q: &Quasigroup, h: &SubsetMask) -> Result<bool, SubalgebraError> {
    Ok(closure_witness(q, h)?.is_none())
}

/// Subquasigroup test for an arbitrary operation table: `h` must be closed
/// under the operation and its induced table must be Latin.
pub fn is_subquasigroup_of_table(
    table: &CayleyTable,
    h: &SubsetMask,
) -> Result<bool, SubalgebraError> {
    check_subset(table.order(), h)?;
    Ok(table
        .induced(h)
        .is_some_and(|t| crate::quasigroup::validate(t).is_ok()))
}

/// Smallest subquasigroup containing `seed`.
pub fn closure(q: &Quasigroup, seed: &SubsetMask) -> Result<SubsetMask, SubalgebraError> {
    check_subset(q.order(), seed)?;
    let mut set = seed.clone();
    let mut done: Vec<usize> = Vec::with_capacity(q.order());
    let mut queue: VecDeque<usize> = seed.iter().collect();
    while let Some(a) = queue.pop_front() {
        done.push(a);
        for &b in &done {
            for kind in DIVISION_SIGNATURE {
                for z in [q.evaluate(kind, a, b), q.evaluate(kind, b, a)] {
                    if set.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    Ok(set)
}

/// Every subquasigroup of `q`, sorted by cardinality and then by element
/// list. Refuses orders above `bound`.
pub fn all_subquasigroups(
    q: &Quasigroup,
    bound: usize,
) -> Result<Vec<SubsetMask>, SubalgebraError> {
    let n = q.order();
    if n > bound {
        return Err(SubalgebraError::BoundExceeded { order: n, bound });
    }
    let found: BTreeSet<SubsetMask> = if n <= DIRECT_SCAN_LIMIT {
        (1u64..1 << n)
            .map(|bits| SubsetMask::from_bits(n, bits))
            .filter(|h| is_subquasigroup(q, h).unwrap_or(false))
            .collect()
    } else {
        // every subquasigroup is reached from a singleton closure by
        // repeatedly adjoining one of its own elements
        let mut seen: HashSet<SubsetMask> = HashSet::new();
        let mut queue = VecDeque::new();
        for x in 0..n {
            let c = closure(q, &SubsetMask::singleton(n, x))?;
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
        while let Some(s) = queue.pop_front() {
            for x in (0..n).filter(|&x| !s.contains(x)) {
                let mut grown = s.clone();
                grown.insert(x);
                let c = closure(q, &grown)?;
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        seen.into_iter().collect()
    };
    Ok(found.into_iter().collect())
}

/// Whether a subquasigroup `h` of `q` is a subquasigroup of every member of
/// the parastrophe family of `q`.
pub fn check_parastrophe_invariance(
    q: &Quasigroup,
    h: &SubsetMask,
) -> Result<bool, SubalgebraError> {
    if !is_subquasigroup(q, h)? {
        return Err(SubalgebraError::NotSubquasigroup);
    }
    for p in q.family() {
        if !is_subquasigroup(&p, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h` is a subquasigroup whose induced table has a two-sided identity.
pub fn is_subloop(q: &Quasigroup, h: &SubsetMask) -> Result<bool, SubalgebraError> {
    if !is_subquasigroup(q, h)? {
        return Ok(false);
    }
    Ok(q.induced(h).is_some_and(|sub| sub.identity().is_some()))
}

/// The four statements that coincide for a subset of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupCriterion {
    pub is_subloop: bool,
    pub is_subgroup: bool,
    pub rdiv_closed: bool,
    pub ldiv_closed: bool,
}

impl GroupCriterion {
    /// True when all four flags agree.
    pub fn agree(&self) -> bool {
        let f = [
            self.is_subloop,
            self.is_subgroup,
            self.rdiv_closed,
            self.ldiv_closed,
        ];
        f.iter().all(|&b| b == f[0])
    }
}

/// Evaluates the subloop, subgroup, `/`-closure and `\`-closure statements
/// for `h` in a group table.
pub fn group_criterion(q: &Quasigroup, h: &SubsetMask) -> Result<GroupCriterion, SubalgebraError> {
    check_subset(q.order(), h)?;
    let props = q.properties();
    let e = match props.identity {
        Some(e) if props.is_group => e,
        _ => return Err(SubalgebraError::NotAGroup),
    };
    let n = q.order();
    let inverse = |x: usize| {
        (0..n)
            .find(|&y| q.mul(x, y) == e)
            .expect("groups have inverses")
    };
    let is_subgroup = h.contains(e)
        && is_closed(q, OperationKind::Mul, h)?
        && h.iter().all(|x| h.contains(inverse(x)));
    Ok(GroupCriterion {
        is_subloop: is_subloop(q, h)?,
        is_subgroup,
        rdiv_closed: is_closed(q, OperationKind::RDiv, h)?,
        ldiv_closed: is_closed(q, OperationKind::LDiv, h)?,
    })
}
