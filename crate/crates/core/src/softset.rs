//! Soft sets over a finite universe and their set-theoretic operations.
//!
//! A soft set maps each parameter in an ordered, duplicate-free list to a
//! non-empty subset of the universe `0..n`. The file format is one
//! `param: s1 s2 ...` line per parameter, with `#` comments, where the
//! symbols are those of an associated table.

use std::fmt::Write as _;

use thiserror::Error;

use crate::subset::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoftSetError {
    #[error("soft set has no parameters")]
    NoParameters,
    #[error("parameter `{0}` appears twice")]
    DuplicateParameter(String),
    #[error("parameter `{0}` maps to the empty set")]
    EmptyValue(String),
    #[error("soft sets live over universes of size {left} and {right}")]
    UniverseMismatch { left: usize, right: usize },
    #[error("the two soft sets share no parameter")]
    NoSharedParameters,
    #[error("intersection at parameter `{0}` is empty")]
    EmptyIntersection(String),
    #[error("every intersection is empty (dropped: {})", .dropped.join(", "))]
    EmptyResult { dropped: Vec<String> },
    #[error("line {line}: expected `parameter: symbols...`")]
    MalformedLine { line: usize },
    #[error("line {line}: unknown symbol `{symbol}`")]
    UnknownSymbol { line: usize, symbol: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<SoftSetError>,
    },
}

/// What to do when an intersection of two values is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Drop the parameter and report it.
    #[default]
    DropEmpty,
    /// Fail the whole operation.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftSet {
    n: usize,
    params: Vec<String>,
    values: Vec<SubsetMask>,
}

/// Result of an intersection together with the parameters it dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub result: SoftSet,
    pub dropped: Vec<String>,
}

impl SoftSet {
    pub fn new<S: Into<String>>(
        n: usize,
        entries: impl IntoIterator<Item = (S, SubsetMask)>,
    ) -> Result<Self, SoftSetError> {
        let mut params: Vec<String> = Vec::new();
        let mut values = Vec::new();
        for (p, v) in entries {
            let p = p.into();
            if params.contains(&p) {
                return Err(SoftSetError::DuplicateParameter(p));
            }
            if v.universe() != n {
                return Err(SoftSetError::UniverseMismatch {
                    left: n,
                    right: v.universe(),
                });
            }
            if v.is_empty() {
                return Err(SoftSetError::EmptyValue(p));
            }
            params.push(p);
            values.push(v);
        }
        if params.is_empty() {
            return Err(SoftSetError::NoParameters);
        }
        Ok(SoftSet { n, params, values })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn values(&self) -> &[SubsetMask] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn get(&self, param: &str) -> Option<&SubsetMask> {
        self.params
            .iter()
            .position(|p| p == param)
            .map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &SubsetMask)> {
        self.params.iter().map(String::as_str).zip(&self.values)
    }

    /// Same parameters with each value replaced by `f(param, value)`.
    pub fn map_values(
        &self,
        mut f: impl FnMut(&str, &SubsetMask) -> SubsetMask,
    ) -> Result<SoftSet, SoftSetError> {
        SoftSet::new(self.n, self.iter().map(|(p, v)| (p.to_string(), f(p, v))))
    }
}

fn same_universe(f: &SoftSet, g: &SoftSet) -> Result<(), SoftSetError> {
    if f.n != g.n {
        return Err(SoftSetError::UniverseMismatch {
            left: f.n,
            right: g.n,
        });
    }
    Ok(())
}

/// `F ⊆ G`: every parameter of `F` is one of `G` and `F(a) ⊆ G(a)`.
pub fn soft_subset(f: &SoftSet, g: &SoftSet) -> Result<bool, SoftSetError> {
    same_universe(f, g)?;
    Ok(f.iter()
        .all(|(p, v)| g.get(p).is_some_and(|w| v.is_subset(w))))
}

/// Soft subset in both directions.
pub fn soft_equal(f: &SoftSet, g: &SoftSet) -> Result<bool, SoftSetError> {
    Ok(soft_subset(f, g)? && soft_subset(g, f)?)
}

fn finish(
    n: usize,
    entries: Vec<(String, SubsetMask)>,
    dropped: Vec<String>,
) -> Result<Intersection, SoftSetError> {
    if entries.is_empty() {
        return Err(SoftSetError::EmptyResult { dropped });
    }
    Ok(Intersection {
        result: SoftSet::new(n, entries)?,
        dropped,
    })
}

/// `H(c) = F(c) ∩ G(c)` on the shared parameters, in `F`'s order.
pub fn restricted_intersection(
    f: &SoftSet,
    g: &SoftSet,
    strictness: Strictness,
) -> Result<Intersection, SoftSetError> {
    same_universe(f, g)?;
    let shared: Vec<(&str, &SubsetMask, &SubsetMask)> = f
        .iter()
        .filter_map(|(p, v)| g.get(p).map(|w| (p, v, w)))
        .collect();
    if shared.is_empty() {
        return Err(SoftSetError::NoSharedParameters);
    }
    let mut entries = Vec::new();
    let mut dropped = Vec::new();
    for (p, v, w) in shared {
        let h = v.intersection(w);
        if !h.is_empty() {
            entries.push((p.to_string(), h));
        } else if strictness == Strictness::Strict {
            return Err(SoftSetError::EmptyIntersection(p.to_string()));
        } else {
            dropped.push(p.to_string());
        }
    }
    finish(f.n, entries, dropped)
}

/// Parameters of `F` in order, then those of `G` not in `F`.
fn combined<'a>(
    f: &'a SoftSet,
    g: &'a SoftSet,
) -> impl Iterator<Item = (&'a str, Option<&'a SubsetMask>, Option<&'a SubsetMask>)> {
    f.iter().map(|(p, v)| (p, Some(v), g.get(p))).chain(
        g.iter()
            .filter(|(p, _)| f.get(p).is_none())
            .map(|(p, w)| (p, None, Some(w))),
    )
}

/// `F` on `A − B`, `G` on `B − A`, `F ∩ G` on `A ∩ B`.
pub fn extended_intersection(
    f: &SoftSet,
    g: &SoftSet,
    strictness: Strictness,
) -> Result<Intersection, SoftSetError> {
    same_universe(f, g)?;
    let mut entries = Vec::new();
    let mut dropped = Vec::new();
    for (p, v, w) in combined(f, g) {
        let h = match (v, w) {
            (Some(v), Some(w)) => v.intersection(w),
            (Some(v), None) => v.clone(),
            (None, Some(w)) => w.clone(),
            (None, None) => unreachable!(),
        };
        if !h.is_empty() {
            entries.push((p.to_string(), h));
        } else if strictness == Strictness::Strict {
            return Err(SoftSetError::EmptyIntersection(p.to_string()));
        } else {
            dropped.push(p.to_string());
        }
    }
    finish(f.n, entries, dropped)
}

/// `F` on `A − B`, `G` on `B − A`, `F ∪ G` on `A ∩ B`.
pub fn extended_union(f: &SoftSet, g: &SoftSet) -> Result<SoftSet, SoftSetError> {
    same_universe(f, g)?;
    let entries: Vec<(String, SubsetMask)> = combined(f, g)
        .map(|(p, v, w)| {
            let h = match (v, w) {
                (Some(v), Some(w)) => v.union(w),
                (Some(v), None) => v.clone(),
                (None, Some(w)) => w.clone(),
                (None, None) => unreachable!(),
            };
            (p.to_string(), h)
        })
        .collect();
    SoftSet::new(f.n, entries)
}

/// Parses the soft-set file format against the symbols of a table.
pub fn parse_soft_set(text: &str, symbols: &[String]) -> Result<SoftSet, SoftSetError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (param, rest) = content
            .split_once(':')
            .ok_or(SoftSetError::MalformedLine { line })?;
        let param = param.trim();
        if param.is_empty() {
            return Err(SoftSetError::MalformedLine { line });
        }
        let mut value = SubsetMask::empty(symbols.len());
        for tok in rest.split_whitespace() {
            let x = symbols.iter().position(|s| s == tok).ok_or_else(|| {
                SoftSetError::UnknownSymbol {
                    line,
                    symbol: tok.to_string(),
                }
            })?;
            value.insert(x);
        }
        if value.is_empty() {
            return Err(SoftSetError::AtLine {
                line,
                source: Box::new(SoftSetError::EmptyValue(param.to_string())),
            });
        }
        if entries
            .iter()
            .any(|(p, _): &(String, SubsetMask)| p == param)
        {
            return Err(SoftSetError::AtLine {
                line,
                source: Box::new(SoftSetError::DuplicateParameter(param.to_string())),
            });
        }
        entries.push((param.to_string(), value));
    }
    SoftSet::new(symbols.len(), entries)
}

/// Writes a soft set in the file format.
pub fn emit_soft_set(soft: &SoftSet, symbols: &[String]) -> String {
    let mut out = String::new();
    for (p, v) in soft.iter() {
        let _ = writeln!(out, "{}: {}", p, v.render(symbols));
    }
    out
}
