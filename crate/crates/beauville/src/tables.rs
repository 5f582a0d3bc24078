//! Shipped word tables: strongly real Beauville structures for the full
//! covering groups of the sporadic simple groups, given as words in
//! standard generators.
//!
//! Three TSV files combine into one row per group: the defining words
//! (`x1`, `x2`, `u`, the powers `j1`, `j2`, and which generating set they
//! live in), an optional auxiliary involution `c`, and the claimed type
//! of the resulting structure.  The structure itself is always
//! `(x1, (x1^j1)^u)` and `(x2, (x2^j2)^u)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::triple::GeneratingTriple;
use crate::words::{Binding, WordExpr};

/// One group's worth of table data.
#[derive(Debug, Clone)]
pub struct WordRow {
    pub group: String,
    /// Words are in standard generators of `G:2` rather than of `G`.
    pub extension_generators: bool,
    pub x1: String,
    pub x2: String,
    pub u: String,
    pub j1: u32,
    pub j2: u32,
    /// Auxiliary involution word, for rows whose words use `c`.
    pub c: Option<String>,
    /// Claimed `(l1, m1, n1)` and `(l2, m2, n2)` of the structure.
    pub claimed_type: Option<((u64, u64, u64), (u64, u64, u64))>,
}

impl WordRow {
    /// Evaluates the row in a binding of the standard generators `a`, `b`.
    /// When the row defines `c`, it is added to a copy of the binding
    /// first.  Returns the two triples `(x_i, y_i)` with `y_i
    /// = (x_i^{j_i})^u`.
    pub fn evaluate(&self, binding: &Binding) -> Result<(GeneratingTriple, GeneratingTriple)> {
        let mut binding = binding.clone();
        if let Some(c) = &self.c {
            let c = WordExpr::parse(c)?.eval(&binding)?;
            binding.set('c', c)?;
        }
        let x1 = WordExpr::parse(&self.x1)?.eval(&binding)?;
        let x2 = WordExpr::parse(&self.x2)?.eval(&binding)?;
        let u = WordExpr::parse(&self.u)?.eval(&binding)?;
        let y1 = x1.pow(self.j1 as i64).conjugate(&u)?;
        let y2 = x2.pow(self.j2 as i64).conjugate(&u)?;
        Ok((GeneratingTriple::new(x1, y1)?, GeneratingTriple::new(x2, y2)?))
    }
}

/// Strips comments and splits a TSV body into per-line field vectors.
fn tsv_records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        Some((idx + 1, line.split('\t').map(str::trim).collect()))
    })
}

fn parse_type_table(text: &str) -> Result<BTreeMap<String, ((u64, u64, u64), (u64, u64, u64))>> {
    let mut out = BTreeMap::new();
    for (line, fields) in tsv_records(text) {
        if fields.len() != 7 {
            return Err(Error::WordTable(format!(
                "type table line {line}: expected 7 columns, got {}",
                fields.len()
            )));
        }
        let num = |s: &str| -> Result<u64> {
            s.parse()
                .map_err(|_| Error::WordTable(format!("type table line {line}: bad order '{s}'")))
        };
        let t1 = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
        let t2 = (num(fields[4])?, num(fields[5])?, num(fields[6])?);
        out.insert(fields[0].to_string(), (t1, t2));
    }
    Ok(out)
}

fn parse_c_table(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (line, fields) in tsv_records(text) {
        if fields.len() != 2 {
            return Err(Error::WordTable(format!(
                "involution table line {line}: expected 2 columns, got {}",
                fields.len()
            )));
        }
        out.insert(fields[0].to_string(), fields[1].to_string());
    }
    Ok(out)
}

fn parse_word_table(text: &str) -> Result<Vec<WordRow>> {
    let mut out = Vec::new();
    for (line, fields) in tsv_records(text) {
        if fields.len() != 7 {
            return Err(Error::WordTable(format!(
                "word table line {line}: expected 7 columns, got {}",
                fields.len()
            )));
        }
        let extension_generators = match fields[1] {
            "G" => false,
            "G:2" => true,
            other => {
                return Err(Error::WordTable(format!(
                    "word table line {line}: gens column must be G or G:2, got '{other}'"
                )))
            }
        };
        let power = |s: &str| -> Result<u32> {
            s.parse()
                .map_err(|_| Error::WordTable(format!("word table line {line}: bad power '{s}'")))
        };
        for w in [fields[2], fields[3], fields[4]] {
            WordExpr::parse(w).map_err(|e| {
                Error::WordTable(format!("word table line {line}: unparsable word '{w}': {e}"))
            })?;
        }
        out.push(WordRow {
            group: fields[0].to_string(),
            extension_generators,
            x1: fields[2].to_string(),
            x2: fields[3].to_string(),
            u: fields[4].to_string(),
            j1: power(fields[5])?,
            j2: power(fields[6])?,
            c: None,
            claimed_type: None,
        });
    }
    Ok(out)
}

/// Joins a word table with its auxiliary involutions and type claims.
/// Every `c` word and type claim must match some word row.
pub fn join_tables(words: &str, involutions: &str, types: &str) -> Result<Vec<WordRow>> {
    let mut rows = parse_word_table(words)?;
    let mut cs = parse_c_table(involutions)?;
    let mut claims = parse_type_table(types)?;
    for row in &mut rows {
        row.c = cs.remove(&row.group);
        row.claimed_type = claims.remove(&row.group);
        if row.c.is_none() {
            for w in [&row.x1, &row.x2, &row.u] {
                if WordExpr::parse(w)?.names().contains(&'c') {
                    return Err(Error::WordTable(format!(
                        "row {}: words use 'c' but no involution word is given",
                        row.group
                    )));
                }
            }
        }
    }
    if let Some(orphan) = cs.keys().next() {
        return Err(Error::WordTable(format!(
            "involution word for '{orphan}' matches no word row"
        )));
    }
    if let Some(orphan) = claims.keys().next() {
        return Err(Error::WordTable(format!(
            "type claim for '{orphan}' matches no word row"
        )));
    }
    Ok(rows)
}

/// The shipped tables, joined.
pub fn bundled_rows() -> Result<Vec<WordRow>> {
    join_tables(
        include_str!("../data/tables/table2.tsv"),
        include_str!("../data/tables/table3.tsv"),
        include_str!("../data/tables/table1.tsv"),
    )
}

/// The shipped row for one group, by exact name.
pub fn bundled_row(group: &str) -> Result<WordRow> {
    bundled_rows()?
        .into_iter()
        .find(|r| r.group == group)
        .ok_or_else(|| Error::WordTable(format!("no shipped word row for '{group}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset;

    #[test]
    fn shipped_tables_join_into_one_row_per_group() {
        let rows = bundled_rows().unwrap();
        assert_eq!(rows.len(), 24, "one row per covering group");
        for row in &rows {
            assert!(
                row.claimed_type.is_some(),
                "{} should carry a type claim",
                row.group
            );
        }
        let with_c = rows.iter().filter(|r| r.c.is_some()).count();
        assert_eq!(with_c, 9, "nine rows need an auxiliary involution");
    }

    #[test]
    fn rows_using_c_in_words_always_define_it() {
        for row in bundled_rows().unwrap() {
            let uses_c = [&row.x1, &row.x2, &row.u]
                .iter()
                .any(|w| WordExpr::parse(w).unwrap().names().contains(&'c'));
            assert_eq!(
                uses_c,
                row.c.is_some(),
                "{}: c must be defined exactly when the words use it",
                row.group
            );
        }
    }

    #[test]
    fn empty_tables_join_to_nothing() {
        let rows = join_tables("# nothing\n", "", "").unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn orphan_rows_are_rejected() {
        assert!(
            join_tables("", "X\tb^2\n", "").is_err(),
            "an involution word without a word row is an error"
        );
        assert!(
            join_tables("", "", "X\t2\t2\t2\t3\t3\t3\n").is_err(),
            "a type claim without a word row is an error"
        );
        assert!(
            join_tables("X\tG\tcc^b\tcc^(bb)\tb\t1\t1\n", "", "").is_err(),
            "words using c need an involution word"
        );
    }

    #[test]
    fn j1_row_evaluates_to_its_claimed_type() {
        let ds = dataset::bundled("J1").unwrap();
        let row = bundled_row("J1").unwrap();
        assert!(!row.extension_generators);
        let (t1, t2) = row.evaluate(&ds.binding().unwrap()).unwrap();
        assert_eq!(
            (t1.triple_type(), t2.triple_type()),
            row.claimed_type.unwrap(),
            "J1 words must realise the claimed type"
        );
    }

    #[test]
    fn m24_row_evaluates_to_its_claimed_type() {
        let ds = dataset::bundled("M24").unwrap();
        let row = bundled_row("M24").unwrap();
        let (t1, t2) = row.evaluate(&ds.binding().unwrap()).unwrap();
        assert_eq!(
            (t1.triple_type(), t2.triple_type()),
            row.claimed_type.unwrap(),
            "M24 words must realise the claimed type"
        );
    }
}
