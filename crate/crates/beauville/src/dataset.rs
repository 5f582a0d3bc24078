//! Bundled permutation representations and the `.grp` dataset format.
//!
//! A dataset file is line-oriented text.  `#` starts a comment, the first
//! content line is `degree n`, and each generator is a line `name: i1 i2
//! … in` (images of 1..=n, 1-based) or `name: (…)(…)` in cycle notation.
//! Optional metadata lines declare `name`, `order` (checked against the
//! built group at load time), `overgroup` plus `embedding` (a link to
//! another dataset), `generators` (the distinguished generating subset)
//! and `involution` (a distinguished inverting element for the strongly
//! real constructions).

use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::words::Binding;

/// A named permutation representation, as loaded from a `.grp` file.
///
/// `perms` lists every permutation in the file; `generator_names` is the
/// subset that generates (all of `perms` when the file does not say),
/// so a file may carry extra distinguished elements — an inverting
/// involution, say — that the group does not need for generation.
#[derive(Debug, Clone)]
pub struct GroupDataset {
    pub name: String,
    pub degree: usize,
    pub perms: Vec<(char, Permutation)>,
    pub generator_names: Vec<char>,
    pub declared_order: Option<BigUint>,
    pub overgroup: Option<String>,
    pub embedding: Option<String>,
    pub involution: Option<char>,
}

impl GroupDataset {
    pub fn perm(&self, name: char) -> Option<&Permutation> {
        self.perms.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
    }

    /// The distinguished involution, when the file names one.
    pub fn involution_perm(&self) -> Option<&Permutation> {
        self.involution.and_then(|n| self.perm(n))
    }

    /// The generating subset, in file order.
    pub fn generators(&self) -> Vec<Permutation> {
        self.generator_names
            .iter()
            .map(|&n| self.perm(n).expect("generator names are validated").clone())
            .collect()
    }

    /// Builds the group from the generating subset.  Does not re-check the
    /// declared order; loading already has.
    pub fn build_group(&self) -> Result<PermGroup> {
        PermGroup::from_generators(self.degree, self.generators())
    }

    /// Binding of every named permutation, for word evaluation.
    pub fn binding(&self) -> Result<Binding> {
        Binding::from_pairs(self.degree, &self.perms)
    }

    /// Parses the file format.  Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<GroupDataset> {
        let mut degree: Option<usize> = None;
        let mut name: Option<String> = None;
        let mut declared_order: Option<BigUint> = None;
        let mut overgroup: Option<String> = None;
        let mut embedding: Option<String> = None;
        let mut generator_names: Option<Vec<char>> = None;
        let mut involution: Option<char> = None;
        let mut perms: Vec<(char, Permutation)> = Vec::new();

        let fail = |line: usize, message: String| Error::Dataset(format!("line {line}: {message}"));
        let single_char = |line: usize, s: &str| -> Result<char> {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() => Ok(c),
                _ => Err(fail(line, format!("'{s}' is not a single-letter name"))),
            }
        };

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = match content.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (content, ""),
            };
            if degree.is_none() {
                if keyword != "degree" {
                    return Err(fail(line, "first content line must be 'degree n'".into()));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| fail(line, format!("bad degree '{rest}'")))?;
                if n == 0 {
                    return Err(fail(line, "degree must be at least 1".into()));
                }
                degree = Some(n);
                continue;
            }
            let n = degree.unwrap();
            match keyword {
                "degree" => return Err(fail(line, "degree declared twice".into())),
                "name" => name = Some(rest.to_string()),
                "order" => {
                    let o = rest
                        .parse::<BigUint>()
                        .map_err(|_| fail(line, format!("bad order '{rest}'")))?;
                    declared_order = Some(o);
                }
                "overgroup" => overgroup = Some(rest.to_string()),
                "embedding" => embedding = Some(rest.to_string()),
                "generators" => {
                    let names = rest
                        .split_whitespace()
                        .map(|s| single_char(line, s))
                        .collect::<Result<Vec<char>>>()?;
                    generator_names = Some(names);
                }
                "involution" => involution = Some(single_char(line, rest)?),
                _ => {
                    let (gname, body) = content.split_once(':').ok_or_else(|| {
                        fail(line, format!("expected 'name: images' but got '{content}'"))
                    })?;
                    let gname = single_char(line, gname.trim())?;
                    if perms.iter().any(|(existing, _)| *existing == gname) {
                        return Err(fail(line, format!("generator '{gname}' declared twice")));
                    }
                    let body = body.trim();
                    let p = if body.starts_with('(') {
                        Permutation::parse_cycles(n, body)
                    } else {
                        let images = body
                            .split_whitespace()
                            .map(|s| {
                                s.parse::<u32>()
                                    .map_err(|_| fail(line, format!("bad image '{s}'")))
                            })
                            .collect::<Result<Vec<u32>>>()?;
                        if images.len() != n {
                            return Err(fail(
                                line,
                                format!("expected {n} images, got {}", images.len()),
                            ));
                        }
                        Permutation::from_images(&images)
                    }
                    .map_err(|e| fail(line, e.to_string()))?;
                    perms.push((gname, p));
                }
            }
        }

        let degree = degree.ok_or_else(|| Error::Dataset("empty dataset file".into()))?;
        if perms.is_empty() {
            return Err(Error::Dataset("dataset declares no generators".into()));
        }
        let generator_names =
            generator_names.unwrap_or_else(|| perms.iter().map(|(n, _)| *n).collect());
        for &gn in &generator_names {
            if perms.iter().all(|(n, _)| *n != gn) {
                return Err(Error::Dataset(format!(
                    "generators line names '{gn}' but no such permutation is declared"
                )));
            }
        }
        if let Some(t) = involution {
            let p = perms
                .iter()
                .find(|(n, _)| *n == t)
                .map(|(_, p)| p)
                .ok_or_else(|| {
                    Error::Dataset(format!(
                        "involution line names '{t}' but no such permutation is declared"
                    ))
                })?;
            if p.order() != 2 {
                return Err(Error::Dataset(format!(
                    "declared involution '{t}' has order {}",
                    p.order()
                )));
            }
        }
        Ok(GroupDataset {
            name: name.unwrap_or_else(|| "G".to_string()),
            degree,
            perms,
            generator_names,
            declared_order,
            overgroup,
            embedding,
            involution,
        })
    }

    /// Canonical text form; `parse` of the result reproduces the dataset.
    pub fn save(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("degree {}\n", self.degree));
        out.push_str(&format!("name {}\n", self.name));
        if let Some(o) = &self.declared_order {
            out.push_str(&format!("order {o}\n"));
        }
        if let Some(g) = &self.overgroup {
            out.push_str(&format!("overgroup {g}\n"));
        }
        if let Some(e) = &self.embedding {
            out.push_str(&format!("embedding {e}\n"));
        }
        let all: Vec<char> = self.perms.iter().map(|(n, _)| *n).collect();
        if self.generator_names != all {
            let names: Vec<String> = self.generator_names.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("generators {}\n", names.join(" ")));
        }
        if let Some(t) = self.involution {
            out.push_str(&format!("involution {t}\n"));
        }
        for (n, p) in &self.perms {
            let images: Vec<String> = (0..self.degree)
                .map(|i| (p.image(i as u32) + 1).to_string())
                .collect();
            out.push_str(&format!("{n}: {}\n", images.join(" ")));
        }
        out
    }
}

/// Parses a dataset and checks any declared order against the built group.
fn validate(ds: GroupDataset) -> Result<GroupDataset> {
    if let Some(declared) = &ds.declared_order {
        let g = ds.build_group()?;
        if g.order() != declared {
            return Err(Error::Dataset(format!(
                "dataset '{}' declares order {declared} but its generators produce order {}",
                ds.name,
                g.order()
            )));
        }
    }
    Ok(ds)
}

/// Loads a `.grp` file.  A declared order is verified before returning.
pub fn load_group(path: impl AsRef<Path>) -> Result<GroupDataset> {
    let text = std::fs::read_to_string(path.as_ref())?;
    validate(GroupDataset::parse(&text)?)
}

const BUNDLED: &[(&str, &str)] = &[
    ("A5", include_str!("../data/groups/a5.grp")),
    ("A6", include_str!("../data/groups/a6_10.grp")),
    ("A6(6)", include_str!("../data/groups/a6.grp")),
    ("S6", include_str!("../data/groups/s6.grp")),
    ("PGL2(9)", include_str!("../data/groups/pgl2_9.grp")),
    ("M10", include_str!("../data/groups/m10.grp")),
    ("PGammaL2(9)", include_str!("../data/groups/pgammal2_9.grp")),
    ("SL2(5)", include_str!("../data/groups/sl2_5.grp")),
    ("M11", include_str!("../data/groups/m11.grp")),
    ("M12", include_str!("../data/groups/m12.grp")),
    ("M23", include_str!("../data/groups/m23.grp")),
    ("M24", include_str!("../data/groups/m24.grp")),
    ("J1", include_str!("../data/groups/j1.grp")),
    ("J2", include_str!("../data/groups/j2.grp")),
];

/// Groups whose word-table rows ship without a permutation representation.
const NOT_BUNDLED: &[&str] = &[
    "2.M12", "12.M22", "2.J2", "2F4(2)'", "2.HS", "3.J3", "3.McL", "He", "2.Ru", "6.Suz",
    "3.O'N", "Co3", "Co2", "6.Fi22", "HN", "Ly", "Th", "Fi23", "2.Co1", "J4", "3.Fi24'", "B",
];

/// Case-, space- and punctuation-insensitive key; Γ spells out as "gamma".
fn normalize(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        match ch {
            'Γ' | 'γ' => out.push_str("gamma"),
            c if c.is_ascii_alphanumeric() => out.push(c.to_ascii_lowercase()),
            _ => {}
        }
    }
    out
}

/// The names `bundled` accepts, in canonical spelling.
pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

/// Loads a bundled dataset by name.  Accepts minor spelling variations
/// (case, spacing, `PΓL2(9)` for `PGammaL2(9)`).
pub fn bundled(name: &str) -> Result<GroupDataset> {
    let key = normalize(name);
    for (canonical, text) in BUNDLED {
        if normalize(canonical) == key {
            return validate(GroupDataset::parse(text)?);
        }
    }
    if NOT_BUNDLED.iter().any(|n| normalize(n) == key) {
        return Err(Error::NoRepresentation(name.to_string()));
    }
    Err(Error::UnknownGroup(name.to_string()))
}

/// Natural permutations for the alternating, symmetric, cyclic and
/// dihedral families, used by `resolve` for names like `A7` or `D6`.
fn family(name: &str) -> Option<Result<GroupDataset>> {
    let mut chars = name.chars();
    let kind = chars.next()?;
    let digits: String = chars.collect();
    if !matches!(kind, 'A' | 'S' | 'C' | 'D') || digits.is_empty() {
        return None;
    }
    let n: usize = match digits.parse() {
        Ok(n) => n,
        Err(_) => return None,
    };
    if n > 1024 {
        return Some(Err(Error::Dataset(format!(
            "family group {name} is too large to construct"
        ))));
    }
    let cycle = |points: std::ops::RangeInclusive<u32>| -> Vec<u32> { points.collect() };
    let make = |name: String,
                degree: usize,
                perms: Vec<(char, Permutation)>,
                overgroup: Option<(String, String)>| {
        Some(Ok(GroupDataset {
            name,
            degree,
            generator_names: perms.iter().map(|(n, _)| *n).collect(),
            perms,
            declared_order: None,
            overgroup: overgroup.as_ref().map(|(g, _)| g.clone()),
            embedding: overgroup.map(|(_, e)| e),
            involution: None,
        }))
    };
    match kind {
        // (1,2,3) with an n- or (n-1)-cycle of even parity.
        'A' => {
            if n < 3 {
                return Some(Err(Error::Dataset(format!(
                    "A{n} needs at least 3 points"
                ))));
            }
            let a = Permutation::from_cycles(n, &[vec![1, 2, 3]]).unwrap();
            let long = if n % 2 == 1 {
                cycle(1..=n as u32)
            } else {
                cycle(2..=n as u32)
            };
            let b = Permutation::from_cycles(n, &[long]).unwrap();
            make(
                format!("A{n}"),
                n,
                vec![('a', a), ('b', b)],
                Some((format!("S{n}"), "same points".to_string())),
            )
        }
        'S' => {
            if n < 2 {
                return Some(Err(Error::Dataset(format!(
                    "S{n} needs at least 2 points"
                ))));
            }
            let a = Permutation::from_cycles(n, &[vec![1, 2]]).unwrap();
            let b = Permutation::from_cycles(n, &[cycle(1..=n as u32)]).unwrap();
            make(format!("S{n}"), n, vec![('a', a), ('b', b)], None)
        }
        'C' => {
            if n == 0 {
                return Some(Err(Error::Dataset("C0 is not a group".into())));
            }
            let a = Permutation::from_cycles(n, &[cycle(1..=n as u32)]).unwrap();
            make(format!("C{n}"), n, vec![('a', a)], None)
        }
        'D' => {
            // Dihedral of order 2n on n points: rotation and a reflection.
            if n < 3 {
                return Some(Err(Error::Dataset(format!(
                    "D{n} needs at least 3 points"
                ))));
            }
            let r = Permutation::from_cycles(n, &[cycle(1..=n as u32)]).unwrap();
            let images: Vec<u32> = (1..=n as u32)
                .map(|i| if i == 1 { 1 } else { n as u32 + 2 - i })
                .collect();
            let f = Permutation::from_images(&images).unwrap();
            make(format!("D{n}"), n, vec![('r', r), ('f', f)], None)
        }
        _ => unreachable!(),
    }
}

/// Resolves a group name: bundled datasets first, then the An/Sn/Cn/Dn
/// families.  Table-only groups fail with the no-representation error.
pub fn resolve(name: &str) -> Result<GroupDataset> {
    match bundled(name) {
        Err(Error::UnknownGroup(_)) => {}
        other => return other,
    }
    if let Some(built) = family(name.trim()) {
        return built;
    }
    Err(Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_a_minimal_two_point_file() {
        let ds = GroupDataset::parse("degree 2\na: 2 1\n").unwrap();
        assert_eq!(ds.degree, 2);
        assert_eq!(ds.name, "G");
        let g = ds.build_group().unwrap();
        assert_eq!(g.order_u64(), Some(2), "single transposition generates C2");
    }

    #[test]
    fn parses_cycle_notation_and_metadata() {
        let ds = GroupDataset::parse(
            "# a comment\ndegree 5\nname D5ish\norder 5\na: (1,2,3,4,5)\n",
        )
        .unwrap();
        assert_eq!(ds.name, "D5ish");
        assert_eq!(ds.declared_order, Some(5u32.into()));
        assert_eq!(ds.perm('a').unwrap().order(), 5);
    }

    #[test]
    fn rejects_a_repeated_image_with_its_line_number() {
        let err = GroupDataset::parse("degree 3\na: 2 2 3\n").unwrap_err();
        assert!(
            err.to_string().contains("line 2"),
            "error should carry the line number: {err}"
        );
    }

    #[test]
    fn rejects_misplaced_and_malformed_lines() {
        assert!(GroupDataset::parse("a: 2 1\n").is_err(), "degree must come first");
        assert!(GroupDataset::parse("degree 3\nab: 1 2 3\n").is_err(), "names are single letters");
        assert!(
            GroupDataset::parse("degree 3\na: 1 2\n").is_err(),
            "image count must match the degree"
        );
        assert!(
            GroupDataset::parse("degree 3\na: 1 2 3\na: (1,2)\n").is_err(),
            "duplicate generator names are rejected"
        );
        assert!(
            GroupDataset::parse("degree 3\ninvolution t\na: 1 2 3\n").is_err(),
            "involution must name a declared permutation"
        );
    }

    #[test]
    fn declared_order_is_checked_at_load_time() {
        let err = validate(GroupDataset::parse("degree 3\norder 5\na: (1,2,3)\n").unwrap());
        assert!(err.is_err(), "declared order 5 should not validate against C3");
    }

    #[test]
    fn every_bundled_dataset_loads_with_its_declared_order() {
        for name in bundled_names() {
            let ds = bundled(name).unwrap();
            assert!(
                ds.declared_order.is_some(),
                "bundled {name} should declare its order"
            );
        }
    }

    #[test]
    fn bundled_a6_is_the_degree_ten_copy() {
        let ds = bundled("A6").unwrap();
        assert_eq!(ds.degree, 10);
        assert_eq!(ds.build_group().unwrap().order_u64(), Some(360));
        assert_eq!(ds.overgroup.as_deref(), Some("PGammaL2(9)"));
        let six = bundled("A6(6)").unwrap();
        assert_eq!(six.degree, 6);
        assert_eq!(six.build_group().unwrap().order_u64(), Some(360));
    }

    #[test]
    fn bundled_accepts_spelling_variations() {
        assert_eq!(bundled("m11").unwrap().name, "M11");
        assert_eq!(bundled("PΓL2(9)").unwrap().name, "PGammaL2(9)");
        assert_eq!(bundled("sl2(5)").unwrap().name, "SL2(5)");
    }

    #[test]
    fn pgammal2_9_has_three_index_two_subgroups() {
        let g = bundled("PΓL2(9)").unwrap().build_group().unwrap();
        assert_eq!(g.order_u64(), Some(1440));
        assert_eq!(g.index_two_subgroups().unwrap().len(), 3);
    }

    #[test]
    fn table_only_groups_fail_fast_without_a_representation() {
        for name in ["HN", "Ly", "2.M12", "3.Fi24'", "B"] {
            match bundled(name) {
                Err(Error::NoRepresentation(_)) => {}
                other => panic!("{name} should have no bundled representation, got {other:?}"),
            }
        }
        match bundled("Zorro") {
            Err(Error::UnknownGroup(_)) => {}
            other => panic!("expected unknown-group error, got {other:?}"),
        }
    }

    #[test]
    fn families_resolve_with_the_right_orders() {
        assert_eq!(
            resolve("A7").unwrap().build_group().unwrap().order_u64(),
            Some(2520)
        );
        assert_eq!(
            resolve("A8").unwrap().build_group().unwrap().order_u64(),
            Some(20160)
        );
        assert_eq!(
            resolve("S7").unwrap().build_group().unwrap().order_u64(),
            Some(5040)
        );
        assert_eq!(
            resolve("C12").unwrap().build_group().unwrap().order_u64(),
            Some(12)
        );
        assert_eq!(
            resolve("D6").unwrap().build_group().unwrap().order_u64(),
            Some(12)
        );
        assert_eq!(resolve("A7").unwrap().overgroup.as_deref(), Some("S7"));
    }

    #[test]
    fn resolve_prefers_the_bundled_a5_and_a6() {
        // Bundled A5 and the degree-10 A6 win over the family fallback.
        assert_eq!(resolve("A5").unwrap().degree, 5);
        assert_eq!(resolve("A6").unwrap().degree, 10);
        assert!(resolve("A5").unwrap().declared_order.is_some());
    }

    #[test]
    fn save_round_trips_bundled_and_random_datasets() {
        for name in ["A6", "M11", "J2"] {
            let ds = bundled(name).unwrap();
            let back = GroupDataset::parse(&ds.save()).unwrap();
            assert_eq!(back.name, ds.name);
            assert_eq!(back.generator_names, ds.generator_names);
            assert_eq!(back.involution, ds.involution);
            for ((n1, p1), (n2, p2)) in ds.perms.iter().zip(back.perms.iter()) {
                assert_eq!(n1, n2);
                assert_eq!(p1, p2, "round trip must reproduce {n1} exactly");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for degree in [1usize, 2, 5, 9, 40] {
            let mut images: Vec<u32> = (1..=degree as u32).collect();
            images.shuffle(&mut rng);
            let ds = GroupDataset {
                name: format!("R{degree}"),
                degree,
                perms: vec![('a', Permutation::from_images(&images).unwrap())],
                generator_names: vec!['a'],
                declared_order: None,
                overgroup: None,
                embedding: None,
                involution: None,
            };
            let back = GroupDataset::parse(&ds.save()).unwrap();
            assert_eq!(back.perms[0].1, ds.perms[0].1);
        }
    }

    #[test]
    fn distinguished_involution_is_exposed() {
        let ds = bundled("A6").unwrap();
        let t = ds.involution_perm().expect("degree-10 A6 names an inverting involution");
        assert_eq!(t.order(), 2);
        assert!(
            !ds.generator_names.contains(&ds.involution.unwrap()),
            "the involution is distinguished, not a generator"
        );
    }
}
