//! Built-in tables and soft sets, addressable as `builtin:<name>`.

/// Prefix that selects a built-in fixture instead of a file path.
pub const PREFIX: &str = "builtin:";

/// Operation tables by name.
pub const TABLES: &[(&str, &str)] = &[
    ("q6", include_str!("../fixtures/q6.tbl")),
    ("q8", include_str!("../fixtures/q8.tbl")),
    ("q8-printed", include_str!("../fixtures/q8-printed.tbl")),
    ("s3", include_str!("../fixtures/s3.tbl")),
    ("z2", include_str!("../fixtures/z2.tbl")),
    ("z2xz2", include_str!("../fixtures/z2xz2.tbl")),
    ("z3-medial", include_str!("../fixtures/z3-medial.tbl")),
    ("z3sq-medial", include_str!("../fixtures/z3sq-medial.tbl")),
    ("z4", include_str!("../fixtures/z4.tbl")),
];

/// Soft-set files by name.
pub const SOFT_SETS: &[(&str, &str)] = &[
    ("q6-soft", include_str!("../fixtures/q6-soft.soft")),
    ("q8-chain", include_str!("../fixtures/q8-chain.soft")),
    ("q8-lower", include_str!("../fixtures/q8-lower.soft")),
    ("q8-upper", include_str!("../fixtures/q8-upper.soft")),
    ("z3sq-normal", include_str!("../fixtures/z3sq-normal.soft")),
];

pub fn table(name: &str) -> Option<&'static str> {
    lookup(TABLES, name)
}

pub fn soft_set(name: &str) -> Option<&'static str> {
    lookup(SOFT_SETS, name)
}

fn lookup(list: &[(&str, &'static str)], name: &str) -> Option<&'static str> {
    let name = name.strip_prefix(PREFIX).unwrap_or(name);
    list.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::validate;
    use crate::softset::parse_soft_set;
    use crate::table::parse_table;

    #[test]
    fn every_fixture_parses() {
        for (name, text) in TABLES {
            let t = parse_table(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(validate(t).is_ok(), *name != "q8-printed", "{name}");
        }
        let q8 = parse_table(table("q8").unwrap()).unwrap();
        for name in ["q8-chain", "q8-lower", "q8-upper"] {
            parse_soft_set(soft_set(name).unwrap(), q8.symbols()).unwrap();
        }
        let q6 = parse_table(table("builtin:q6").unwrap()).unwrap();
        parse_soft_set(soft_set("q6-soft").unwrap(), q6.symbols()).unwrap();
        assert!(table("nope").is_none());
    }
}
