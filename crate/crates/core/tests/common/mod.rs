//! Independent brute-force oracles and generators shared by the integration
//! tests. Nothing here calls the library's search routines.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use softquasi::{fixtures, parse_table, validate, CayleyTable, Quasigroup, SubsetMask};

pub fn fixture(name: &str) -> Quasigroup {
    validate(fixture_table(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_table(name: &str) -> CayleyTable {
    parse_table(fixtures::table(name).expect("known fixture")).unwrap()
}

pub fn cells_of(q: &Quasigroup) -> Vec<Vec<usize>> {
    let n = q.order();
    (0..n)
        .map(|x| (0..n).map(|y| q.mul(x, y)).collect())
        .collect()
}

/// Every Latin square of order `n` on `0..n`, in lexicographic order of
/// cells.
pub fn latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(n: usize, pos: usize, grid: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if pos == n * n {
            out.push(grid.clone());
            return;
        }
        let (r, c) = (pos / n, pos % n);
        for v in 0..n {
            let clash = (0..c).any(|j| grid[r][j] == v) || (0..r).any(|i| grid[i][c] == v);
            if !clash {
                grid[r][c] = v;
                fill(n, pos + 1, grid, out);
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    fill(n, 0, &mut vec![vec![0; n]; n], &mut out);
    out
}

/// A uniformly shuffled backtracking fill; every Latin square of order `n`
/// can come out.
pub fn random_latin_square<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    fn fill<R: Rng>(n: usize, pos: usize, grid: &mut Vec<Vec<usize>>, rng: &mut R) -> bool {
        if pos == n * n {
            return true;
        }
        let (r, c) = (pos / n, pos % n);
        let mut vals: Vec<usize> = (0..n).collect();
        vals.shuffle(rng);
        for v in vals {
            let clash = (0..c).any(|j| grid[r][j] == v) || (0..r).any(|i| grid[i][c] == v);
            if !clash {
                grid[r][c] = v;
                if fill(n, pos + 1, grid, rng) {
                    return true;
                }
            }
        }
        false
    }
    let mut grid = vec![vec![0; n]; n];
    assert!(fill(n, 0, &mut grid, rng));
    grid
}

pub fn quasigroup(cells: &[Vec<usize>]) -> Quasigroup {
    validate(CayleyTable::from_rows(cells).unwrap()).unwrap()
}

pub fn random_quasigroup<R: Rng>(n: usize, rng: &mut R) -> Quasigroup {
    quasigroup(&random_latin_square(n, rng))
}

/// Subquasigroup test straight from the definition: closed under the
/// product, and every equation `a·z = b`, `z·a = b` with `a, b` inside has
/// its solution inside (found by scanning the table).
pub fn is_subquasigroup_oracle(cells: &[Vec<usize>], h: &[bool]) -> bool {
    let n = cells.len();
    let inside: Vec<usize> = (0..n).filter(|&x| h[x]).collect();
    if inside.is_empty() {
        return false;
    }
    for &a in &inside {
        for &b in &inside {
            if !h[cells[a][b]] {
                return false;
            }
            let right = (0..n).find(|&z| cells[a][z] == b).unwrap();
            let left = (0..n).find(|&z| cells[z][a] == b).unwrap();
            if !h[right] || !h[left] {
                return false;
            }
        }
    }
    true
}

pub fn mask_to_flags(h: &SubsetMask) -> Vec<bool> {
    (0..h.universe()).map(|x| h.contains(x)).collect()
}

/// All subsets of `0..n` as flag vectors, including the empty one.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

pub fn flags_to_mask(h: &[bool]) -> SubsetMask {
    SubsetMask::from_elements(h.len(), (0..h.len()).filter(|&i| h[i]))
}

pub fn subquasigroups_oracle(cells: &[Vec<usize>]) -> Vec<Vec<bool>> {
    all_subsets(cells.len())
        .filter(|h| is_subquasigroup_oracle(cells, h))
        .collect()
}

/// Every set partition of `0..n` as block labels in restricted-growth form.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            grow(n, labels, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut labels = vec![0];
    grow(n, &mut labels, 0, &mut out);
    out
}

/// Normal congruence test straight from the definition over all triples.
pub fn is_normal_congruence_oracle(cells: &[Vec<usize>], labels: &[usize]) -> bool {
    let n = cells.len();
    let rel = |a: usize, b: usize| labels[a] == labels[b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rel(a, b) && !(rel(cells[c][a], cells[c][b]) && rel(cells[a][c], cells[b][c])) {
                    return false;
                }
                if (rel(cells[c][a], cells[c][b]) || rel(cells[a][c], cells[b][c])) && !rel(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// `fine` relates only pairs that `coarse` relates.
pub fn labels_refine(fine: &[usize], coarse: &[usize]) -> bool {
    (0..fine.len()).all(|a| (0..fine.len()).all(|b| fine[a] != fine[b] || coarse[a] == coarse[b]))
}

/// Block labels of `0..n` under a library partition.
pub fn labels_of(p: &softquasi::congruence::Partition) -> Vec<usize> {
    (0..p.universe()).map(|x| p.block_of(x)).collect()
}

/// Cyclic group of order `n` as cells.
pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|x| (0..n).map(|y| (x + y) % n).collect())
        .collect()
}

/// The six operation tables derived from `cells` by their defining
/// equations, as `(name, cells)` in the order mul, opp, rdiv, ldiv, ordiv,
/// oldiv.
pub fn parastrophes_oracle(cells: &[Vec<usize>]) -> Vec<(&'static str, Vec<Vec<usize>>)> {
    let n = cells.len();
    let solve = |pred: &dyn Fn(usize) -> bool| (0..n).find(|&z| pred(z)).unwrap();
    let build = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    vec![
        ("mul", build(&|x, y| cells[x][y])),
        ("opp", build(&|x, y| cells[y][x])),
        ("rdiv", build(&|x, y| solve(&|z| cells[z][y] == x))),
        ("ldiv", build(&|x, y| solve(&|z| cells[x][z] == y))),
        ("ordiv", build(&|x, y| solve(&|z| cells[z][x] == y))),
        ("oldiv", build(&|x, y| solve(&|z| cells[y][z] == x))),
    ]
}
