//! Validated quasigroups: Latin checking, translations, the six
//! parastrophic operations, structural predicates and nuclei.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::subset::SubsetMask;
use crate::table::CayleyTable;

/// One of the six operations obtainable from a quasigroup `(Q, ·)` by
/// permuting the roles of the two arguments and the result.
///
/// Each kind is described by a permutation `roles` of the triple
/// `(x, y, x·y)`: a triple `t` of the base operation becomes the triple
/// `(t[roles[0]], t[roles[1]], t[roles[2]])` of the derived operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationKind {
    /// `x·y`
    Mul,
    /// `x ⊛ y = y·x`
    Opp,
    /// `x / y = z` iff `z·y = x`
    RDiv,
    /// `x \ y = z` iff `x·z = y`
    LDiv,
    /// `x // y = y / x`
    ORDiv,
    /// `x \\ y = y \ x`
    OLDiv,
}

impl OperationKind {
    pub const ALL: [OperationKind; 6] = [
        OperationKind::Mul,
        OperationKind::Opp,
        OperationKind::RDiv,
        OperationKind::LDiv,
        OperationKind::ORDiv,
        OperationKind::OLDiv,
    ];

    /// The five kinds other than [`OperationKind::Mul`].
    pub const PARASTROPHES: [OperationKind; 5] = [
        OperationKind::Opp,
        OperationKind::RDiv,
        OperationKind::LDiv,
        OperationKind::ORDiv,
        OperationKind::OLDiv,
    ];

    fn roles(self) -> [usize; 3] {
        match self {
            OperationKind::Mul => [0, 1, 2],
            OperationKind::Opp => [1, 0, 2],
            OperationKind::LDiv => [0, 2, 1],
            OperationKind::RDiv => [2, 1, 0],
            OperationKind::ORDiv => [1, 2, 0],
            OperationKind::OLDiv => [2, 0, 1],
        }
    }

    fn from_roles(roles: [usize; 3]) -> OperationKind {
        OperationKind::ALL
            .into_iter()
            .find(|k| k.roles() == roles)
            .expect("every permutation of three roles is a kind")
    }

    /// The kind that, applied to a table of kind `self`, yields kind `target`
    /// of the same origin.
    pub fn relative_to(self, target: OperationKind) -> OperationKind {
        let own = self.roles();
        let mut inv = [0; 3];
        for (i, &r) in own.iter().enumerate() {
            inv[r] = i;
        }
        let t = target.roles();
        OperationKind::from_roles([inv[t[0]], inv[t[1]], inv[t[2]]])
    }

    /// Short lowercase name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            OperationKind::Mul => "mul",
            OperationKind::Opp => "opp",
            OperationKind::RDiv => "rdiv",
            OperationKind::LDiv => "ldiv",
            OperationKind::ORDiv => "ordiv",
            OperationKind::OLDiv => "oldiv",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OperationKind::Mul => "·",
            OperationKind::Opp => "⊛",
            OperationKind::RDiv => "/",
            OperationKind::LDiv => "\\",
            OperationKind::ORDiv => "//",
            OperationKind::OLDiv => "\\\\",
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown operation kind `{0}` (expected mul, opp, rdiv, ldiv, ordiv or oldiv)")]
pub struct UnknownKind(pub String);

impl FromStr for OperationKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OperationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}

/// Left (`x·H`, `L_x`) or right (`H·x`, `R_x`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Row,
    Column,
}

/// A row or column of a table that is not a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinDefect {
    pub line: LineKind,
    /// Row or column index (0-based).
    pub index: usize,
    /// Each repeated symbol with the (0-based) positions where it occurs.
    pub duplicates: Vec<(usize, Vec<usize>)>,
    /// Symbols absent from the line.
    pub missing: Vec<usize>,
}

/// Every defect that stops a table from being a Latin square.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct LatinViolation {
    pub defects: Vec<LatinDefect>,
    pub symbols: Vec<String>,
}

impl LatinViolation {
    /// One line of text per defect, using the table's symbols and 1-based
    /// row/column positions.
    pub fn describe(&self) -> Vec<String> {
        let sym = |x: usize| self.symbols[x].as_str();
        self.defects
            .iter()
            .map(|d| {
                let (what, across) = match d.line {
                    LineKind::Row => ("row", "columns"),
                    LineKind::Column => ("column", "rows"),
                };
                let dups: Vec<String> = d
                    .duplicates
                    .iter()
                    .map(|(s, pos)| {
                        let pos: Vec<String> = pos.iter().map(|p| (p + 1).to_string()).collect();
                        format!(
                            "symbol {} repeated in {} {}",
                            sym(*s),
                            across,
                            pos.join(", ")
                        )
                    })
                    .collect();
                let missing: Vec<&str> = d.missing.iter().map(|&m| sym(m)).collect();
                format!(
                    "{} {} (header {}): {}; missing {}",
                    what,
                    d.index + 1,
                    sym(d.index),
                    dups.join("; "),
                    missing.join(" ")
                )
            })
            .collect()
    }
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a Latin square: {}", self.describe().join(" | "))
    }
}

fn line_defect(line: LineKind, index: usize, values: &[usize]) -> Option<LatinDefect> {
    let n = values.len();
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, &v) in values.iter().enumerate() {
        positions[v].push(p);
    }
    let duplicates: Vec<(usize, Vec<usize>)> = positions
        .iter()
        .enumerate()
        .filter(|(_, p)| p.len() > 1)
        .map(|(s, p)| (s, p.clone()))
        .collect();
    if duplicates.is_empty() {
        return None;
    }
    let missing = positions
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_empty())
        .map(|(s, _)| s)
        .collect();
    Some(LatinDefect {
        line,
        index,
        duplicates,
        missing,
    })
}

/// A table proven to be a Latin square, together with its division tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    table: CayleyTable,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
    kind: OperationKind,
}

/// Checks the Latin property, reporting every defective row and column.
pub fn validate(table: CayleyTable) -> Result<Quasigroup, LatinViolation> {
    Quasigroup::with_kind(table, OperationKind::Mul)
}

impl Quasigroup {
    fn with_kind(table: CayleyTable, kind: OperationKind) -> Result<Self, LatinViolation> {
        let n = table.order();
        let mut defects = Vec::new();
        for x in 0..n {
            if let Some(d) = line_defect(LineKind::Row, x, table.row(x)) {
                defects.push(d);
            }
        }
        for y in 0..n {
            if let Some(d) = line_defect(LineKind::Column, y, &table.column(y)) {
                defects.push(d);
            }
        }
        if !defects.is_empty() {
            return Err(LatinViolation {
                defects,
                symbols: table.symbols().to_vec(),
            });
        }
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for x in 0..n {
            for z in 0..n {
                let y = table.get(x, z);
                // x·z = y  =>  x\y = z  and  y/z = x
                ldiv[x * n + y] = z;
                rdiv[y * n + z] = x;
            }
        }
        Ok(Quasigroup {
            table,
            ldiv,
            rdiv,
            kind,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn symbols(&self) -> &[String] {
        self.table.symbols()
    }

    pub fn symbol(&self, x: usize) -> &str {
        self.table.symbol(x)
    }

    /// Which parastrophe of its origin this table realizes.
    pub fn kind(&self) -> OperationKind {
        self.kind
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// `x \ y`: the unique `z` with `x·z = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.order() + y]
    }

    /// `x / y`: the unique `z` with `z·y = x`.
    #[inline]
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        self.rdiv[x * self.order() + y]
    }

    /// Evaluates a parastrophic operation of this table's own operation.
    pub fn evaluate(&self, kind: OperationKind, x: usize, y: usize) -> usize {
        match kind {
            OperationKind::Mul => self.mul(x, y),
            OperationKind::Opp => self.mul(y, x),
            OperationKind::LDiv => self.ldiv(x, y),
            OperationKind::RDiv => self.rdiv(x, y),
            OperationKind::ORDiv => self.rdiv(y, x),
            OperationKind::OLDiv => self.ldiv(y, x),
        }
    }

    pub fn translation(&self, x: usize, side: Side) -> Permutation {
        let images = (0..self.order())
            .map(|y| match side {
                Side::Left => self.mul(x, y),
                Side::Right => self.mul(y, x),
            })
            .collect();
        Permutation(images)
    }

    /// Table of the `kind` parastrophe of this table's origin.
    ///
    /// Asking for the table's own kind returns an identical copy.
    pub fn parastrophe(&self, kind: OperationKind) -> Quasigroup {
        if kind == self.kind {
            return self.clone();
        }
        let roles = self.kind.relative_to(kind).roles();
        let n = self.order();
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let t = [a, b, self.mul(a, b)];
                cells[t[roles[0]] * n + t[roles[1]]] = t[roles[2]];
            }
        }
        let table = CayleyTable::new(self.symbols().to_vec(), cells)
            .expect("parastrophe cells stay in range");
        Quasigroup::with_kind(table, kind).expect("parastrophes of a quasigroup are Latin")
    }

    /// The origin table, i.e. the `Mul` member of this table's family.
    pub fn origin(&self) -> Quasigroup {
        self.parastrophe(OperationKind::Mul)
    }

    /// All six members of the parastrophe family, in [`OperationKind::ALL`] order.
    pub fn family(&self) -> Vec<Quasigroup> {
        OperationKind::ALL
            .into_iter()
            .map(|k| self.parastrophe(k))
            .collect()
    }

    /// The quasigroup induced on `h`, if `h` is a subquasigroup.
    pub fn induced(&self, h: &SubsetMask) -> Option<Quasigroup> {
        let t = self.table.induced(h)?;
        validate(t).ok()
    }

    /// Isomorphic copy with element `x` renamed to `perm(x)`. Symbols follow
    /// their elements.
    pub fn relabeled(&self, perm: &Permutation) -> Quasigroup {
        let n = self.order();
        assert_eq!(perm.images().len(), n);
        let mut cells = vec![0; n * n];
        let mut symbols = vec![String::new(); n];
        for x in 0..n {
            symbols[perm.apply(x)] = self.symbol(x).to_string();
            for y in 0..n {
                cells[perm.apply(x) * n + perm.apply(y)] = perm.apply(self.mul(x, y));
            }
        }
        let table = CayleyTable::new(symbols, cells).expect("relabeling keeps symbols distinct");
        Quasigroup::with_kind(table, self.kind).expect("relabeling preserves the Latin property")
    }

    /// Two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn properties(&self) -> PropertyReport {
        let n = self.order();
        let m = |x, y| self.mul(x, y);
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));

        let identity = self.identity();
        let is_associative = triples().all(|(x, y, z)| m(x, m(y, z)) == m(m(x, y), z));
        PropertyReport {
            identity,
            is_associative,
            is_group: identity.is_some() && is_associative,
            is_commutative: pairs().all(|(x, y)| m(x, y) == m(y, x)),
            is_idempotent: (0..n).all(|x| m(x, x) == x),
            is_flexible: pairs().all(|(x, y)| m(x, m(y, x)) == m(m(x, y), x)),
            is_left_distributive: triples().all(|(x, y, z)| m(x, m(y, z)) == m(m(x, y), m(x, z))),
            is_right_distributive: triples().all(|(x, y, z)| m(m(y, z), x) == m(m(y, x), m(z, x))),
        }
    }

    pub fn nuclei(&self) -> Nuclei {
        let n = self.order();
        let m = |x, y| self.mul(x, y);
        let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
        let left = SubsetMask::from_elements(
            n,
            (0..n).filter(|&a| all_pairs(&|x, y| m(a, m(x, y)) == m(m(a, x), y))),
        );
        let right = SubsetMask::from_elements(
            n,
            (0..n).filter(|&a| all_pairs(&|x, y| m(m(x, y), a) == m(x, m(y, a)))),
        );
        Nuclei { left, right }
    }
}

/// Structural predicates, each decided by an exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyReport {
    pub identity: Option<usize>,
    pub is_associative: bool,
    pub is_group: bool,
    pub is_commutative: bool,
    pub is_idempotent: bool,
    pub is_flexible: bool,
    pub is_left_distributive: bool,
    pub is_right_distributive: bool,
}

impl PropertyReport {
    pub fn is_loop(&self) -> bool {
        self.identity.is_some()
    }

    pub fn is_distributive(&self) -> bool {
        self.is_left_distributive && self.is_right_distributive
    }
}

/// Left nucleus `{a : a(xy) = (ax)y}` and right nucleus `{a : (xy)a = x(ya)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nuclei {
    pub left: SubsetMask,
    pub right: SubsetMask,
}
