//! Exact isomorphism search between small quasigroups.

use thiserror::Error;

use crate::quasigroup::{Quasigroup, Side};

/// Largest order `are_isomorphic` searches unless told otherwise.
pub const DEFAULT_ISO_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {order} exceeds the isomorphism search bound {bound}")]
pub struct IsoBoundExceeded {
    pub order: usize,
    pub bound: usize,
}

/// A bijection `φ` with `φ(x·y) = φ(x)∘φ(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    images: Vec<usize>,
}

impl IsoWitness {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { images: inv }
    }

    /// Re-checks the homomorphism law and bijectivity on every pair.
    pub fn verify(&self, from: &Quasigroup, to: &Quasigroup) -> bool {
        let n = from.order();
        if to.order() != n || self.images.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.images {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..n).all(|x| {
            (0..n).all(|y| self.apply(from.mul(x, y)) == to.mul(self.apply(x), self.apply(y)))
        })
    }
}

/// Per-element isomorphism invariant used to prune candidate images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    commuting: usize,
    left_cycles: Vec<usize>,
    right_cycles: Vec<usize>,
}

fn cycle_type(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable();
    lens
}

fn signatures(q: &Quasigroup) -> Vec<Signature> {
    let n = q.order();
    (0..n)
        .map(|x| Signature {
            idempotent: q.mul(x, x) == x,
            commuting: (0..n).filter(|&y| q.mul(x, y) == q.mul(y, x)).count(),
            left_cycles: cycle_type(q.translation(x, Side::Left).images()),
            right_cycles: cycle_type(q.translation(x, Side::Right).images()),
        })
        .collect()
}

struct Search<'a> {
    from: &'a Quasigroup,
    to: &'a Quasigroup,
    sig_from: Vec<Signature>,
    sig_to: Vec<Signature>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match self.map[x] {
            Some(v) => v == y,
            None => {
                if self.used[y] || self.sig_from[x] != self.sig_to[y] {
                    return false;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                self.trail.push(x);
                true
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.map[x].take().unwrap();
            self.used[y] = false;
        }
    }

    /// Extends the assignment along products of assigned elements until it
    /// is closed or contradicts itself.
    fn propagate(&mut self) -> bool {
        let mut i = 0;
        while i < self.trail.len() {
            let a = self.trail[i];
            let mut j = 0;
            while j <= i {
                let b = self.trail[j];
                let (pa, pb) = (self.map[a].unwrap(), self.map[b].unwrap());
                if !self.assign(self.from.mul(a, b), self.to.mul(pa, pb))
                    || !self.assign(self.from.mul(b, a), self.to.mul(pb, pa))
                {
                    return false;
                }
                j += 1;
            }
            i += 1;
        }
        true
    }

    fn solve(&mut self) -> bool {
        let Some(x) = (0..self.map.len()).find(|&x| self.map[x].is_none()) else {
            return true;
        };
        for y in 0..self.map.len() {
            if self.used[y] || self.sig_from[x] != self.sig_to[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.propagate() && self.solve() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Finds an isomorphism `from → to`, or proves none exists.
pub fn are_isomorphic(
    from: &Quasigroup,
    to: &Quasigroup,
    bound: usize,
) -> Result<Option<IsoWitness>, IsoBoundExceeded> {
    let n = from.order();
    if to.order() != n {
        return Ok(None);
    }
    if n > bound {
        return Err(IsoBoundExceeded { order: n, bound });
    }
    let sig_from = signatures(from);
    let sig_to = signatures(to);
    let mut a = sig_from.clone();
    let mut b = sig_to.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let mut search = Search {
        from,
        to,
        sig_from,
        sig_to,
        map: vec![None; n],
        used: vec![false; n],
        trail: Vec::new(),
    };
    if !search.solve() {
        return Ok(None);
    }
    let witness = IsoWitness {
        images: search.map.into_iter().map(Option::unwrap).collect(),
    };
    debug_assert!(witness.verify(from, to));
    Ok(Some(witness))
}
