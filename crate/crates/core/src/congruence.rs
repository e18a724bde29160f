//! Partitions, normal congruences and quotient quasigroups.
//!
//! An equivalence `θ` on a quasigroup is a normal congruence when for all
//! `a, b, c, d`:
//!
//! 1. `ca θ cb` implies `a θ b`,
//! 2. `ac θ bc` implies `a θ b`,
//! 3. `a θ b` and `c θ d` imply `ac θ bd`.
//!
//! A subquasigroup `H` is normal when it is a class of some normal
//! congruence. Normality is decided through `θ_H`, the least normal
//! congruence identifying all of `H`: any normal congruence having `H` as a
//! class contains `θ_H`, so the `θ_H`-class of `H` can only be `H` itself,
//! and conversely `θ_H` is a witness whenever `H` is one of its classes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::quasigroup::{validate, Quasigroup};
use crate::subalgebra::{is_subquasigroup, SubalgebraError};
use crate::subset::SubsetMask;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("not a partition of the carrier: {0}")]
    NotAPartition(String),
    #[error("partition is not a normal congruence")]
    NotNormal,
    #[error("subset is not a subquasigroup")]
    NotSubquasigroup,
    #[error(
        "quotient product is ill-defined: [{a}]·[{b}] has representatives in different blocks"
    )]
    IllDefined { a: usize, b: usize },
    #[error("order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Subalgebra(#[from] SubalgebraError),
}

/// A partition of `0..n`, stored as a canonical block id per element
/// (blocks numbered in order of their least member).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    ids: Vec<usize>,
}

impl Partition {
    fn canonical(raw: &[usize]) -> Partition {
        let mut map = std::collections::HashMap::new();
        let ids = raw
            .iter()
            .map(|r| {
                let next = map.len();
                *map.entry(*r).or_insert(next)
            })
            .collect();
        Partition { ids }
    }

    /// The partition into singletons (the identity relation).
    pub fn discrete(n: usize) -> Partition {
        Partition {
            ids: (0..n).collect(),
        }
    }

    /// The one-block partition (the total relation).
    pub fn total(n: usize) -> Partition {
        Partition { ids: vec![0; n] }
    }

    /// Builds a partition from blocks that must cover `0..n` disjointly.
    pub fn from_blocks(n: usize, blocks: &[SubsetMask]) -> Result<Partition, CongruenceError> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.universe() != n {
                return Err(CongruenceError::NotAPartition(format!(
                    "block {} lives in a carrier of size {}",
                    b + 1,
                    block.universe()
                )));
            }
            if block.is_empty() {
                return Err(CongruenceError::NotAPartition(format!(
                    "block {} is empty",
                    b + 1
                )));
            }
            for x in block.iter() {
                if raw[x] != usize::MAX {
                    return Err(CongruenceError::NotAPartition(format!(
                        "element {x} lies in two blocks"
                    )));
                }
                raw[x] = b;
            }
        }
        if let Some(x) = raw.iter().position(|&r| r == usize::MAX) {
            return Err(CongruenceError::NotAPartition(format!(
                "element {x} is in no block"
            )));
        }
        Ok(Partition::canonical(&raw))
    }

    /// Builds a partition from an arbitrary label per element.
    pub fn from_labels(labels: &[usize]) -> Partition {
        Partition::canonical(labels)
    }

    pub fn universe(&self) -> usize {
        self.ids.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.ids[x]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.ids[a] == self.ids[b]
    }

    pub fn block_count(&self) -> usize {
        self.ids.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks in order of their least member.
    pub fn blocks(&self) -> Vec<SubsetMask> {
        let n = self.universe();
        let mut blocks = vec![SubsetMask::empty(n); self.block_count()];
        for (x, &b) in self.ids.iter().enumerate() {
            blocks[b].insert(x);
        }
        blocks
    }

    /// Whether every pair related here is related in `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let n = self.universe();
        n == other.universe()
            && (0..n).all(|a| (a + 1..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// Block list such as `({1 2})({3})`.
    pub fn render(&self, symbols: &[String]) -> String {
        self.blocks()
            .iter()
            .map(|b| format!("({})", b.render_braced(symbols)))
            .collect()
    }
}

/// A partition known to be a normal congruence of a specific quasigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence(Partition);

impl Congruence {
    /// Checks normality against `q`.
    pub fn new(q: &Quasigroup, partition: Partition) -> Result<Congruence, CongruenceError> {
        if is_normal_congruence(q, &partition)? {
            Ok(Congruence(partition))
        } else {
            Err(CongruenceError::NotNormal)
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }
}

impl std::ops::Deref for Congruence {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<String> = (0..self.universe()).map(|x| x.to_string()).collect();
        f.write_str(&self.render(&syms))
    }
}

/// Decides the three normal-congruence conditions.
///
/// Condition 3 is checked as compatibility with every left and right
/// translation, which together with transitivity is equivalent.
pub fn is_normal_congruence(q: &Quasigroup, theta: &Partition) -> Result<bool, CongruenceError> {
    let n = q.order();
    if theta.universe() != n {
        return Err(CongruenceError::NotAPartition(format!(
            "partition covers {} elements, table has {}",
            theta.universe(),
            n
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            let related = theta.related(a, b);
            for c in 0..n {
                let left = theta.related(q.mul(c, a), q.mul(c, b));
                let right = theta.related(q.mul(a, c), q.mul(b, c));
                if related != left || related != right {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// Least normal congruence relating every given pair.
///
/// Runs union-find to a fixpoint: merges forced by compatibility
/// (`a θ b ⇒ ca θ cb, ac θ bc`) and by cancellation (`ca θ cb ⇒ a θ b`,
/// `ac θ bc ⇒ a θ b`). Every merge is forced in any normal congruence that
/// contains the pairs, and the fixpoint satisfies all three conditions.
pub fn generated_normal_congruence(q: &Quasigroup, pairs: &[(usize, usize)]) -> Congruence {
    let n = q.order();
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                let related = uf.find(a) == uf.find(b);
                for c in 0..n {
                    let (ca, cb) = (q.mul(c, a), q.mul(c, b));
                    let (ac, bc) = (q.mul(a, c), q.mul(b, c));
                    if related {
                        changed |= uf.union(ca, cb);
                        changed |= uf.union(ac, bc);
                    } else if uf.find(ca) == uf.find(cb) || uf.find(ac) == uf.find(bc) {
                        changed |= uf.union(a, b);
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Congruence(Partition::from_labels(&uf.labels()))
}

/// Pairs joining every element of each block to the block's least member.
fn spanning_pairs(p: &Partition) -> Vec<(usize, usize)> {
    p.blocks()
        .iter()
        .flat_map(|b| {
            let first = b.first().expect("blocks are non-empty");
            b.iter()
                .skip(1)
                .map(move |x| (first, x))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `θ_H` when `H` is one of its classes, `None` when `H` is not normal.
pub fn is_normal_subquasigroup(
    q: &Quasigroup,
    h: &SubsetMask,
) -> Result<Option<Congruence>, CongruenceError> {
    if !is_subquasigroup(q, h)? {
        return Err(CongruenceError::NotSubquasigroup);
    }
    let first = h.first().expect("subquasigroups are non-empty");
    let pairs: Vec<(usize, usize)> = h.iter().map(|x| (first, x)).collect();
    let theta = generated_normal_congruence(q, &pairs);
    let block = theta.block_of(first);
    let is_class = (0..q.order()).all(|x| (theta.block_of(x) == block) == h.contains(x));
    Ok(is_class.then_some(theta))
}

/// Every normal congruence of `q`, sorted.
pub fn all_normal_congruences(
    q: &Quasigroup,
    bound: usize,
) -> Result<Vec<Congruence>, CongruenceError> {
    let n = q.order();
    if n > bound {
        return Err(CongruenceError::BoundExceeded { order: n, bound });
    }
    let start = generated_normal_congruence(q, &[]).into_partition();
    let mut seen: HashSet<Partition> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let base = spanning_pairs(&p);
        for a in 0..n {
            for b in a + 1..n {
                if p.related(a, b) {
                    continue;
                }
                let mut pairs = base.clone();
                pairs.push((a, b));
                let next = generated_normal_congruence(q, &pairs).into_partition();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let sorted: BTreeSet<(usize, Partition)> =
        seen.into_iter().map(|p| (n - p.block_count(), p)).collect();
    Ok(sorted.into_iter().map(|(_, p)| Congruence(p)).collect())
}

/// The quotient `Q/θ`: blocks in order of least member, named `[x]` after
/// that member's symbol.
pub fn quotient(q: &Quasigroup, theta: &Congruence) -> Result<Quasigroup, CongruenceError> {
    let n = q.order();
    if theta.universe() != n {
        return Err(CongruenceError::NotAPartition(format!(
            "partition covers {} elements, table has {}",
            theta.universe(),
            n
        )));
    }
    let blocks = theta.blocks();
    let k = blocks.len();
    let reps: Vec<usize> = blocks.iter().map(|b| b.first().unwrap()).collect();
    let mut cells = vec![0; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            cells[i * k + j] = theta.block_of(q.mul(a, b));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if cells[theta.block_of(a) * k + theta.block_of(b)] != theta.block_of(q.mul(a, b)) {
                return Err(CongruenceError::IllDefined { a, b });
            }
        }
    }
    let symbols = reps.iter().map(|&r| format!("[{}]", q.symbol(r))).collect();
    let table = CayleyTable::new(symbols, cells).expect("block ids are in range");
    validate(table).map_err(|_| CongruenceError::NotNormal)
}
