//! Footprint disjointness for pairs of triples.
//!
//! The footprint Σ of a triple is the union of the conjugacy classes of
//! all powers of its three elements.  Two footprints meet beyond the
//! identity iff some prime-order power of one triple is conjugate to a
//! prime-order power of the other, so only primes dividing element orders
//! on *both* sides ever require a conjugacy test.  Triples with coprime
//! order sets are separated with zero tests.

use std::collections::{BTreeSet, HashMap};

use crate::classes::{class_closure_with_witnesses, ClassTable};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::triple::GeneratingTriple;

/// Outcome of a footprint disjointness check.
#[derive(Debug, Clone)]
pub struct SigmaCheck {
    pub disjoint: bool,
    /// Number of conjugacy membership queries performed.
    pub conjugacy_tests: usize,
    /// On failure: an element of each footprint and a conjugator between
    /// them (`left^w = right`).
    pub witness: Option<SigmaWitness>,
}

#[derive(Debug, Clone)]
pub struct SigmaWitness {
    pub left: Permutation,
    pub conjugator: Permutation,
    pub right: Permutation,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime-order powers of the triple's elements for prime `p`: one per
/// element whose order `p` divides (the remaining unit powers are covered
/// by powering the other side).
fn prime_power_reps(t: &GeneratingTriple, p: u64) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::new();
    for s in [t.x(), t.y(), t.z()] {
        let o = s.order();
        if o % p == 0 {
            let e = s.pow((o / p) as i64);
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

/// One conjugacy class lying on a footprint: its label in the class table
/// of the ambient group and the common order of its elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SigmaClass {
    pub label: String,
    pub order: u64,
}

/// The footprint of a triple, listed as classes of `g`: every power of x,
/// y and z contributes its class, so the identity (zeroth power) is always
/// present and the result is closed under powering by construction.
/// Classes come back in table order, each exactly once.
pub fn sigma_profile(
    g: &PermGroup,
    t: &GeneratingTriple,
    max_elements: usize,
) -> Result<Vec<SigmaClass>> {
    let table = ClassTable::build(g, max_elements)?;
    let mut ids = BTreeSet::new();
    for s in [t.x(), t.y(), t.z()] {
        let mut power = Permutation::identity(s.degree());
        for _ in 0..s.order() {
            ids.insert(table.class_of(&power)?);
            power = &power * s;
        }
    }
    Ok(ids
        .into_iter()
        .map(|id| {
            let c = &table.classes()[id];
            SigmaClass {
                label: c.label.clone(),
                order: c.order,
            }
        })
        .collect())
}

/// Decides Σ(t1) ∩ Σ(t2) = {1}, with a conjugating witness on failure.
/// `max_class` bounds the size of any conjugacy class closed along the
/// way.
pub fn sigma_disjoint(
    g: &PermGroup,
    t1: &GeneratingTriple,
    t2: &GeneratingTriple,
    max_class: usize,
) -> Result<SigmaCheck> {
    let left_orders = t1.triple_type();
    let right_orders = t2.triple_type();
    let left_primes: Vec<u64> = [left_orders.0, left_orders.1, left_orders.2]
        .iter()
        .flat_map(|&o| prime_factors(o))
        .collect();
    let right_primes: Vec<u64> = [right_orders.0, right_orders.1, right_orders.2]
        .iter()
        .flat_map(|&o| prime_factors(o))
        .collect();
    let mut shared: Vec<u64> = left_primes
        .into_iter()
        .filter(|p| right_primes.contains(p))
        .collect();
    shared.sort_unstable();
    shared.dedup();

    let mut tests = 0usize;
    for p in shared {
        let left_reps = prime_power_reps(t1, p);
        let right_reps = prime_power_reps(t2, p);
        // One closure per left representative answers every query against
        // it by set membership.
        for l in &left_reps {
            let closure: HashMap<Permutation, Permutation> =
                class_closure_with_witnesses(g, l, max_class)?;
            for r in &right_reps {
                for m in 1..p {
                    let candidate = r.pow(m as i64);
                    tests += 1;
                    if let Some(w) = closure.get(&candidate) {
                        return Ok(SigmaCheck {
                            disjoint: false,
                            conjugacy_tests: tests,
                            witness: Some(SigmaWitness {
                                left: l.clone(),
                                conjugator: w.clone(),
                                right: candidate,
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(SigmaCheck {
        disjoint: true,
        conjugacy_tests: tests,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn coprime_types_need_no_conjugacy_tests() {
        let s7 = PermGroup::symmetric(7);
        let x = cyc(7, "(1,2,3,4,5)");
        let t1 = GeneratingTriple::new(x.clone(), x.pow(2)).unwrap();
        assert_eq!(t1.triple_type(), (5, 5, 5));
        let t2 = GeneratingTriple::new(cyc(7, "(1,2)"), cyc(7, "(3,4,5)")).unwrap();
        assert_eq!(t2.triple_type(), (2, 3, 6));
        // {5} and {2,3} share no prime, so the verdict is free.
        let check = sigma_disjoint(&s7, &t1, &t2, 10).unwrap();
        assert!(check.disjoint);
        assert_eq!(check.conjugacy_tests, 0, "coprime orders shortcut the check");
    }

    #[test]
    fn shared_class_is_found_with_witness() {
        let a5 = PermGroup::alternating(5);
        // Two (5,5,5) triples in A5 share an order-5 class (there are only
        // two such classes and each footprint hits both).
        let x = cyc(5, "(1,2,3,4,5)");
        let t1 = GeneratingTriple::new(x.clone(), x.pow(3)).unwrap();
        let y = cyc(5, "(1,3,2,4,5)");
        let t2 = GeneratingTriple::new(y.clone(), y.pow(3)).unwrap();
        let check = sigma_disjoint(&a5, &t1, &t2, 100).unwrap();
        assert!(!check.disjoint);
        let w = check.witness.expect("failure carries a witness");
        assert_eq!(
            w.left.conjugate(&w.conjugator).unwrap(),
            w.right,
            "witness conjugates a left power onto a right power"
        );
        assert!(!w.left.is_identity());
    }

    #[test]
    fn power_coupled_classes_are_caught_across_exponents() {
        // In A6, x of order 5 has x^2 in the other order-5 class, so a
        // footprint containing x meets a footprint containing x^2 even
        // though x and x^2 are not conjugate.
        let a6 = PermGroup::alternating(6);
        let x = cyc(6, "(1,2,3,4,5)");
        let other = cyc(6, "(1,2,3)(4,5,6)");
        let t1 = GeneratingTriple::new(x.clone(), other.clone()).unwrap();
        let t2 = GeneratingTriple::new(x.pow(2), other.inverse()).unwrap();
        let check = sigma_disjoint(&a6, &t1, &t2, 400).unwrap();
        assert!(
            !check.disjoint,
            "footprints share the squares of the order-5 elements"
        );
    }

    #[test]
    fn budget_failure_is_an_error_not_a_verdict() {
        let a5 = PermGroup::alternating(5);
        let x = cyc(5, "(1,2,3,4,5)");
        let t1 = GeneratingTriple::new(x.clone(), x.pow(3)).unwrap();
        let r = sigma_disjoint(&a5, &t1, &t1, 2);
        assert!(r.is_err(), "class closure beyond the cap must not pass");
    }

    #[test]
    fn profile_lists_identity_and_every_power_class() {
        let a5 = PermGroup::alternating(5);
        let x = cyc(5, "(1,2,3,4,5)");
        let t = GeneratingTriple::new(x.clone(), cyc(5, "(1,2,3)")).unwrap();
        let profile = sigma_profile(&a5, &t, 100).unwrap();
        assert!(
            profile.iter().any(|c| c.order == 1),
            "the zeroth power puts the identity class on every profile"
        );
        // x has order 5 and x^2 falls in the other order-5 class of A5,
        // so both order-5 classes appear; with 1A and 3A that makes at
        // least four distinct classes.
        assert_eq!(profile.iter().filter(|c| c.order == 5).count(), 2);
        assert!(profile.iter().any(|c| c.order == 3));
        let mut sorted = profile.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), profile.len(), "classes listed exactly once");
    }

    #[test]
    fn profile_is_closed_under_powering() {
        let table_group = PermGroup::symmetric(6);
        let t = GeneratingTriple::new(cyc(6, "(1,2,3,4,5,6)"), cyc(6, "(1,2)")).unwrap();
        let profile = sigma_profile(&table_group, &t, 1000).unwrap();
        let labels: std::collections::BTreeSet<&str> =
            profile.iter().map(|c| c.label.as_str()).collect();
        let table = ClassTable::build(&table_group, 1000).unwrap();
        for s in [t.x(), t.y(), t.z()] {
            let mut power = s.clone();
            for _ in 0..s.order() {
                for k in 1..=power.order() {
                    let id = table.class_of(&power.pow(k as i64)).unwrap();
                    assert!(
                        labels.contains(table.classes()[id].label.as_str()),
                        "power of a profile element stays on the profile"
                    );
                }
                power = &power * s;
            }
        }
    }
}
