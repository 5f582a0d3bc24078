//! Conjugacy classes and conjugacy testing.
//!
//! Two regimes: small groups get a full class table by enumerating every
//! element (guarded by an element budget); arbitrary groups get pairwise
//! conjugacy tests that close one class under generator conjugation and
//! never touch the rest of the group.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct ConjClass {
    /// Label in the usual order-letter form: `1A`, `2A`, `5B`, ...
    pub label: String,
    /// Order of the elements in the class.
    pub order: u64,
    pub size: usize,
    /// Lexicographically least member (by image sequence).
    pub rep: Permutation,
}

/// Complete conjugacy class data for a group small enough to enumerate.
pub struct ClassTable {
    classes: Vec<ConjClass>,
    index: HashMap<Permutation, usize>,
}

impl ClassTable {
    /// Enumerates the group (erroring beyond `max_elements`) and partitions
    /// it into conjugacy classes.  Classes are sorted by element order,
    /// then class size, then representative; labels follow that ordering.
    pub fn build(g: &PermGroup, max_elements: usize) -> Result<ClassTable> {
        let mut elements = g.elements(max_elements)?;
        elements.sort();
        let mut index: HashMap<Permutation, usize> = HashMap::with_capacity(elements.len());
        let mut classes: Vec<ConjClass> = Vec::new();
        for e in &elements {
            if index.contains_key(e) {
                continue;
            }
            // Sweeping in sorted order makes the first unseen element the
            // least member of its class.
            let id = classes.len();
            let mut size = 0usize;
            let mut frontier = vec![e.clone()];
            index.insert(e.clone(), id);
            while let Some(x) = frontier.pop() {
                size += 1;
                for gen in g.generators() {
                    let y = x.conjugate(gen).expect("same degree within group");
                    if !index.contains_key(&y) {
                        index.insert(y.clone(), id);
                        frontier.push(y);
                    }
                }
            }
            classes.push(ConjClass {
                label: String::new(),
                order: e.order(),
                size,
                rep: e.clone(),
            });
        }
        // Canonical order and labels.
        let mut perm: Vec<usize> = (0..classes.len()).collect();
        perm.sort_by(|&a, &b| {
            classes[a]
                .order
                .cmp(&classes[b].order)
                .then_with(|| classes[a].size.cmp(&classes[b].size))
                .then_with(|| classes[a].rep.cmp(&classes[b].rep))
        });
        let mut renumber = vec![0usize; classes.len()];
        for (new_id, &old_id) in perm.iter().enumerate() {
            renumber[old_id] = new_id;
        }
        let mut sorted: Vec<ConjClass> = perm.into_iter().map(|i| classes[i].clone()).collect();
        let mut letter_for_order: HashMap<u64, u8> = HashMap::new();
        for c in &mut sorted {
            let slot = letter_for_order.entry(c.order).or_insert(0);
            assert!(*slot < 26, "more than 26 classes of one order");
            c.label = format!("{}{}", c.order, (b'A' + *slot) as char);
            *slot += 1;
        }
        for v in index.values_mut() {
            *v = renumber[*v];
        }
        Ok(ClassTable {
            classes: sorted,
            index,
        })
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id of an element, or `NotInGroup`.
    pub fn class_of(&self, p: &Permutation) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::NotInGroup)
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Class id of `rep(class)^k`.
    pub fn power_class(&self, class: usize, k: u64) -> usize {
        let p = self.classes[class].rep.pow(k as i64);
        self.index[&p]
    }

    /// Ids of classes whose elements are inverted by some involution (the
    /// identity counts for the identity class).
    pub fn strongly_real_classes(&self, g: &PermGroup) -> Result<Vec<usize>> {
        let mut involutions: Vec<Permutation> = vec![Permutation::identity(g.degree())];
        for e in self.index.keys() {
            if e.order() == 2 {
                involutions.push(e.clone());
            }
        }
        let mut out = Vec::new();
        for (id, c) in self.classes.iter().enumerate() {
            let inv = c.rep.inverse();
            if involutions
                .iter()
                .any(|t| c.rep.conjugate(t).expect("same degree") == inv)
            {
                out.push(id);
            }
        }
        Ok(out)
    }
}

/// Conjugation closure of `u` under the generators of `g`, with a witness
/// per member: `witness[v]` satisfies `u^witness == v`.  Errors if the
/// class exceeds `cap` elements.
pub fn class_closure_with_witnesses(
    g: &PermGroup,
    u: &Permutation,
    cap: usize,
) -> Result<HashMap<Permutation, Permutation>> {
    let mut witness: HashMap<Permutation, Permutation> = HashMap::new();
    witness.insert(u.clone(), Permutation::identity(g.degree()));
    let mut frontier = vec![u.clone()];
    while let Some(x) = frontier.pop() {
        let wx = witness[&x].clone();
        for gen in g.generators() {
            let y = x.conjugate(gen)?;
            if !witness.contains_key(&y) {
                witness.insert(y.clone(), &wx * gen);
                frontier.push(y);
                if witness.len() > cap {
                    return Err(Error::BudgetExceeded(format!(
                        "conjugacy class of an order-{} element exceeds {cap} elements",
                        u.order()
                    )));
                }
            }
        }
    }
    Ok(witness)
}

/// Tests whether `u` and `v` are conjugate in `g`, returning a conjugating
/// element on success.  Closes the class of `u` breadth-first, so the cost
/// is bounded by the class size, not the group order.
pub fn is_conjugate(
    g: &PermGroup,
    u: &Permutation,
    v: &Permutation,
    cap: usize,
) -> Result<Option<Permutation>> {
    if u.degree() != g.degree() || v.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), u.degree().max(v.degree())));
    }
    // Conjugation preserves cycle type, so distinct types settle it free.
    if u.cycle_type() != v.cycle_type() {
        return Ok(None);
    }
    if u == v {
        return Ok(Some(Permutation::identity(g.degree())));
    }
    let closure = class_closure_with_witnesses(g, u, cap)?;
    Ok(closure.get(v).cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn class_sizes_of_s5_match_partition_counts() {
        // Classes of S5 are cycle types; sizes are the standard counts.
        let s5 = PermGroup::symmetric(5);
        let t = ClassTable::build(&s5, 1000).unwrap();
        let mut sizes: Vec<usize> = t.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 10, 15, 20, 20, 24, 30]);
        assert_eq!(
            t.classes().iter().map(|c| c.size).sum::<usize>(),
            120,
            "classes partition the group"
        );
    }

    #[test]
    fn a5_has_split_order_five_classes() {
        let a5 = PermGroup::alternating(5);
        let t = ClassTable::build(&a5, 100).unwrap();
        let labels: Vec<&str> = t.classes().iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, vec!["1A", "2A", "3A", "5A", "5B"]);
        let sizes: Vec<usize> = t.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 15, 20, 12, 12]);
        // 5A and 5B are power-coupled: squaring swaps them.
        let a = t.by_label("5A").unwrap();
        let b = t.by_label("5B").unwrap();
        assert_eq!(t.power_class(a, 2), b);
        assert_eq!(t.power_class(b, 2), a);
        assert_eq!(t.power_class(a, 4), a, "inverse stays in the class");
    }

    #[test]
    fn a6_class_data() {
        let a6 = PermGroup::alternating(6);
        let t = ClassTable::build(&a6, 400).unwrap();
        let got: Vec<(String, u64, usize)> = t
            .classes()
            .iter()
            .map(|c| (c.label.clone(), c.order, c.size))
            .collect();
        assert_eq!(
            got,
            vec![
                ("1A".into(), 1, 1),
                ("2A".into(), 2, 45),
                ("3A".into(), 3, 40),
                ("3B".into(), 3, 40),
                ("4A".into(), 4, 90),
                ("5A".into(), 5, 72),
                ("5B".into(), 5, 72),
            ]
        );
        // Squaring swaps the two order-5 classes of A6.
        let a = t.by_label("5A").unwrap();
        assert_eq!(t.power_class(a, 2), t.by_label("5B").unwrap());
    }

    #[test]
    fn class_reps_are_least_members() {
        let a5 = PermGroup::alternating(5);
        let t = ClassTable::build(&a5, 100).unwrap();
        for c in t.classes() {
            let closure = class_closure_with_witnesses(&a5, &c.rep, 100).unwrap();
            assert_eq!(closure.len(), c.size, "closure size is the class size");
            let least = closure.keys().min().unwrap();
            assert_eq!(*least, c.rep, "rep {} is the least member", c.rep);
            assert_eq!(t.class_of(&c.rep).unwrap(), t.by_label(&c.label).unwrap());
        }
    }

    #[test]
    fn conjugacy_witness_actually_conjugates() {
        let s4 = PermGroup::symmetric(4);
        let u = cyc(4, "(1,2,3)");
        let v = cyc(4, "(1,3,2)");
        let w = is_conjugate(&s4, &u, &v, 1000).unwrap().unwrap();
        assert_eq!(u.conjugate(&w).unwrap(), v, "witness must conjugate u to v");

        // In A4 the two classes of 3-cycles are distinct.
        let a4 = PermGroup::alternating(4);
        assert!(is_conjugate(&a4, &u, &v, 1000).unwrap().is_none());
    }

    #[test]
    fn order_five_classes_fuse_in_s6_but_not_a6() {
        let u = cyc(6, "(1,2,3,4,5)");
        let v = u.pow(2);
        let a6 = PermGroup::alternating(6);
        let s6 = PermGroup::symmetric(6);
        assert!(is_conjugate(&a6, &u, &v, 400).unwrap().is_none());
        let w = is_conjugate(&s6, &u, &v, 800).unwrap().unwrap();
        assert_eq!(u.conjugate(&w).unwrap(), v);
    }

    #[test]
    fn cycle_type_shortcut_gives_none_without_search() {
        let s6 = PermGroup::symmetric(6);
        // Budget 0 would fail if any closure were attempted.
        let r = is_conjugate(&s6, &cyc(6, "(1,2)"), &cyc(6, "(1,2,3)"), 0).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn strongly_real_classes_of_small_groups() {
        // Every class of a symmetric group is strongly real.
        let s5 = PermGroup::symmetric(5);
        let t = ClassTable::build(&s5, 1000).unwrap();
        assert_eq!(t.strongly_real_classes(&s5).unwrap().len(), t.len());

        // In A4 the 3-cycles are not inverted by any involution.
        let a4 = PermGroup::alternating(4);
        let t = ClassTable::build(&a4, 100).unwrap();
        let sr = t.strongly_real_classes(&a4).unwrap();
        let labels: Vec<&str> = sr.iter().map(|&i| t.classes()[i].label.as_str()).collect();
        assert_eq!(labels, vec!["1A", "2A"]);
    }

    #[test]
    fn class_budget_is_enforced() {
        let s8 = PermGroup::symmetric(8);
        assert!(matches!(
            ClassTable::build(&s8, 1000),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
