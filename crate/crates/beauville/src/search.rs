//! Exhaustive searches for Beauville structures on groups small enough to
//! enumerate.
//!
//! Every condition checked here is invariant under conjugating a triple as
//! a whole, so candidates are enumerated up to conjugacy: x runs over
//! class representatives and y over orbits of the centraliser of x (moving
//! (x, y) to (x, y') while fixing x is exactly conjugation by a
//! centraliser element).  A search that returns no structure has therefore
//! checked every triple pair up to conjugacy, and the absence is proven —
//! within the automorphism source for the strongly real variant.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigUint;

use crate::classes::{class_closure_with_witnesses, ClassTable};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::triple::{Automorphism, BeauvilleStructure, GeneratingTriple, MixedStructure};
use crate::verify::{footprint_class_ids, orbit_reps_under_conjugation};
use crate::Budget;

/// Outcome of an unmixed search.  `structure: None` means no unmixed
/// Beauville structure exists on the group.
#[derive(Debug)]
pub struct UnmixedSearch {
    pub structure: Option<BeauvilleStructure>,
    /// Hyperbolic generating triples up to conjugacy.
    pub triples: usize,
    /// Footprint pairs examined (distinct footprints paired once each).
    pub pairs_tested: usize,
}

/// Outcome of a strongly real search.
#[derive(Debug)]
pub struct StronglyRealSearch {
    pub structure: Option<BeauvilleStructure>,
    pub triples: usize,
    /// Candidates admitting an inverting conjugation in the source group.
    pub invertible: usize,
    /// Candidate pairs taken through the inverter-matching phase.
    pub pairs_tested: usize,
}

/// Scan record for one index-2 subgroup during a mixed search.
#[derive(Debug)]
pub struct MixedSubgroupScan {
    pub subgroup: PermGroup,
    pub outer_orders_divisible_by_four: bool,
    /// Set when the strict square rule let the order filter rule the
    /// subgroup out without scanning triples.
    pub skipped_by_order_filter: bool,
    /// Candidate triples scanned.
    pub triples: usize,
}

/// Outcome of a mixed search: one scan per index-2 subgroup, and the first
/// structure found, tagged with the index of its scan.
#[derive(Debug)]
pub struct MixedSearch {
    pub scans: Vec<MixedSubgroupScan>,
    pub found: Option<(usize, MixedStructure)>,
}

fn check_search_budget(g: &PermGroup, budget: &Budget) -> Result<()> {
    if *g.order() > BigUint::from(budget.max_group_order) {
        return Err(Error::BudgetExceeded(format!(
            "group order {} exceeds the search ceiling {}",
            g.order(),
            budget.max_group_order
        )));
    }
    Ok(())
}

struct Candidate {
    triple: GeneratingTriple,
    /// Nontrivial class ids met by powers of x, y, z.
    profile: BTreeSet<usize>,
}

/// Hyperbolic generating triples of `g` up to conjugacy.  `elements` must
/// be the full, sorted element list, which makes the representatives (and
/// hence any structure built from them) deterministic.
fn candidate_triples(
    g: &PermGroup,
    table: &ClassTable,
    elements: &[Permutation],
) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for class in table.classes() {
        if class.order == 1 {
            continue;
        }
        let x = class.rep.clone();
        let cent: Vec<&Permutation> =
            elements.iter().filter(|e| e.commutes_with(&x)).collect();
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
        for y in elements {
            if seen.contains(y) {
                continue;
            }
            // The centraliser orbit of y is its full conjugate set; marking
            // it now makes later y's orbit representatives automatically.
            for c in &cent {
                seen.insert(y.conjugate(c)?);
            }
            if y.is_identity() {
                continue;
            }
            let t = GeneratingTriple::new(x.clone(), y.clone())?;
            if !t.is_hyperbolic() {
                continue;
            }
            if !t.generates(g)? {
                continue;
            }
            let profile = footprint_class_ids(table, &t)?;
            out.push(Candidate { triple: t, profile });
        }
    }
    Ok(out)
}

/// Searches for an unmixed Beauville structure: two hyperbolic generating
/// triples whose footprints meet only in the identity.  Whether a pair
/// works depends only on the two footprints, so distinct footprints are
/// paired once each.
pub fn search_unmixed(g: &PermGroup, budget: &Budget) -> Result<UnmixedSearch> {
    check_search_budget(g, budget)?;
    let mut elements = g.elements(budget.max_elements)?;
    elements.sort();
    let table = ClassTable::build(g, budget.max_elements)?;
    let cands = candidate_triples(g, &table, &elements)?;

    let mut uniq: Vec<(&BTreeSet<usize>, usize)> = Vec::new();
    let mut seen: HashSet<&BTreeSet<usize>> = HashSet::new();
    for (idx, c) in cands.iter().enumerate() {
        if seen.insert(&c.profile) {
            uniq.push((&c.profile, idx));
        }
    }

    let mut pairs_tested = 0;
    for a in 0..uniq.len() {
        for b in a + 1..uniq.len() {
            pairs_tested += 1;
            if uniq[a].0.is_disjoint(uniq[b].0) {
                let s = BeauvilleStructure::unmixed(
                    cands[uniq[a].1].triple.clone(),
                    cands[uniq[b].1].triple.clone(),
                );
                return Ok(UnmixedSearch {
                    structure: Some(s),
                    triples: cands.len(),
                    pairs_tested,
                });
            }
        }
    }
    Ok(UnmixedSearch {
        structure: None,
        triples: cands.len(),
        pairs_tested,
    })
}

fn validate_source(g: &PermGroup, v: &PermGroup) -> Result<()> {
    if v.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), v.degree()));
    }
    for s in g.generators() {
        if !v.contains(s)? {
            return Err(Error::InvalidAutomorphism(
                "automorphism source does not contain the group".into(),
            ));
        }
    }
    for t in v.generators() {
        for s in g.generators() {
            if !g.contains(&s.conjugate(t)?)? {
                return Err(Error::InvalidAutomorphism(
                    "automorphism source does not normalise the group".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Inverter data shared by all candidates with the same x: one conjugation
/// w0 sending x to its inverse, and the centraliser of x in the source.
/// Any inverter of (x, y) then has the form c·w0 with c centralising x.
struct ClassInverter {
    w0: Permutation,
    w0_inv: Permutation,
    cvx: Vec<Permutation>,
}

fn inverter_for(t: &GeneratingTriple, inv: &ClassInverter) -> Result<Option<Permutation>> {
    let target = t.y().inverse().conjugate(&inv.w0_inv)?;
    for c in &inv.cvx {
        if t.y().conjugate(c)? == target {
            return Ok(Some(c * &inv.w0));
        }
    }
    Ok(None)
}

/// Searches for a strongly real Beauville structure.  `source` supplies
/// the conjugations allowed to realise the inverting automorphisms; it
/// must contain and normalise `g` and defaults to `g` itself (inner
/// automorphisms only).  With `distinct_inverters` the two triples may be
/// inverted by different automorphisms, as long as those agree up to an
/// inner one; otherwise a single automorphism must invert both, which is
/// arranged by conjugating the second triple so that one inverter serves.
pub fn search_strongly_real(
    g: &PermGroup,
    source: Option<&PermGroup>,
    distinct_inverters: bool,
    budget: &Budget,
) -> Result<StronglyRealSearch> {
    check_search_budget(g, budget)?;
    let v = source.unwrap_or(g);
    if source.is_some() {
        validate_source(g, v)?;
    }

    let mut elements = g.elements(budget.max_elements)?;
    elements.sort();
    let velems = if source.is_some() {
        v.elements(budget.max_elements)?
    } else {
        elements.clone()
    };
    let table = ClassTable::build(g, budget.max_elements)?;
    let cands = candidate_triples(g, &table, &elements)?;

    // Elements of the source centralising the whole group: two inverters
    // of one triple differ exactly by such an element, since their
    // quotient centralises a generating set.
    let cvg: Vec<Permutation> = velems
        .iter()
        .filter(|e| g.generators().iter().all(|s| e.commutes_with(s)))
        .cloned()
        .collect();

    let mut per_class: Vec<Option<ClassInverter>> = Vec::with_capacity(table.len());
    for class in table.classes() {
        if class.order == 1 {
            per_class.push(None);
            continue;
        }
        let closure = class_closure_with_witnesses(v, &class.rep, budget.max_elements)?;
        per_class.push(closure.get(&class.rep.inverse()).map(|w0| ClassInverter {
            w0: w0.clone(),
            w0_inv: w0.inverse(),
            cvx: velems
                .iter()
                .filter(|e| e.commutes_with(&class.rep))
                .cloned()
                .collect(),
        }));
    }

    struct Invertible<'a> {
        cand: &'a Candidate,
        inverter: Permutation,
    }
    let mut invertible: Vec<Invertible> = Vec::new();
    for cand in &cands {
        let k = table.class_of(cand.triple.x())?;
        if let Some(inv) = &per_class[k] {
            if let Some(w) = inverter_for(&cand.triple, inv)? {
                invertible.push(Invertible { cand, inverter: w });
            }
        }
    }

    // Bucket the invertible candidates by footprint; only footprint-disjoint
    // buckets can pair up.
    let mut buckets: HashMap<&BTreeSet<usize>, Vec<usize>> = HashMap::new();
    for (idx, iv) in invertible.iter().enumerate() {
        buckets.entry(&iv.cand.profile).or_default().push(idx);
    }
    let profiles: Vec<&BTreeSet<usize>> = {
        let mut v: Vec<_> = buckets.keys().copied().collect();
        v.sort();
        v
    };

    // In the paired-inverter mode, (T1, T2) works with one automorphism iff
    // some G-conjugate of T2's inverter lands in C_V(G)·w1; the conjugating
    // element then moves T2 so that w1 inverts it too.
    let mut closure_cache: HashMap<usize, HashMap<Permutation, Permutation>> = HashMap::new();
    let mut normal_with_centraliser: Option<PermGroup> = None;

    let mut pairs_tested = 0;
    for a in 0..profiles.len() {
        for b in a + 1..profiles.len() {
            if !profiles[a].is_disjoint(profiles[b]) {
                continue;
            }
            for &i in &buckets[profiles[a]] {
                for &j in &buckets[profiles[b]] {
                    pairs_tested += 1;
                    let (first, second) = (&invertible[i], &invertible[j]);
                    if distinct_inverters {
                        // The two automorphisms agree up to an inner one iff
                        // the quotient of their conjugators lies in the group
                        // extended by the centraliser of the group.
                        if normal_with_centraliser.is_none() {
                            let mut gens = g.generators().to_vec();
                            gens.extend(cvg.iter().cloned());
                            normal_with_centraliser =
                                Some(PermGroup::from_generators(g.degree(), gens)?);
                        }
                        let nc = normal_with_centraliser.as_ref().expect("just built");
                        let twist = &first.inverter.inverse() * &second.inverter;
                        if !nc.contains(&twist)? {
                            continue;
                        }
                        let phi1 = Automorphism::new(g, first.inverter.clone())?;
                        let phi2 = Automorphism::new(g, second.inverter.clone())?;
                        let s = BeauvilleStructure::strongly_real(
                            first.cand.triple.clone(),
                            second.cand.triple.clone(),
                            phi1,
                            phi2,
                        );
                        return Ok(StronglyRealSearch {
                            structure: Some(s),
                            triples: cands.len(),
                            invertible: invertible.len(),
                            pairs_tested,
                        });
                    }
                    if !closure_cache.contains_key(&j) {
                        closure_cache.insert(
                            j,
                            class_closure_with_witnesses(
                                g,
                                &second.inverter,
                                budget.max_elements,
                            )?,
                        );
                    }
                    let closure = &closure_cache[&j];
                    let mut moved: Option<Permutation> = None;
                    for c in &cvg {
                        if let Some(h) = closure.get(&(c * &first.inverter)) {
                            moved = Some(h.clone());
                            break;
                        }
                    }
                    if let Some(h) = moved {
                        let second_triple = second.cand.triple.conjugate(&h)?;
                        let phi = Automorphism::new(g, first.inverter.clone())?;
                        let s = BeauvilleStructure::strongly_real(
                            first.cand.triple.clone(),
                            second_triple,
                            phi.clone(),
                            phi,
                        );
                        return Ok(StronglyRealSearch {
                            structure: Some(s),
                            triples: cands.len(),
                            invertible: invertible.len(),
                            pairs_tested,
                        });
                    }
                }
            }
        }
    }
    Ok(StronglyRealSearch {
        structure: None,
        triples: cands.len(),
        invertible: invertible.len(),
        pairs_tested,
    })
}

/// Looks for a generating triple of type `(l, m, n)` whose first two
/// members are inverted by a common involution, searching exhaustively up
/// to conjugacy.  The involution is drawn from `source` when supplied
/// (which must normalise `g`) and from `g` itself otherwise; with no
/// source, a `None` result settles only the inner question — outer
/// possibilities are out of scope, not guessed at.
///
/// Any two elements inverting the same generating pair differ by something
/// centralising the whole group, so per pair one witness inverter is found
/// and the involution test sweeps its coset by that centraliser.
pub fn strongly_generated(
    g: &PermGroup,
    source: Option<&PermGroup>,
    (l, m, n): (u64, u64, u64),
    budget: &Budget,
) -> Result<Option<(GeneratingTriple, Permutation)>> {
    check_search_budget(g, budget)?;
    let v = match source {
        Some(s) => {
            validate_source(g, s)?;
            s
        }
        None => g,
    };
    let table = ClassTable::build(g, budget.max_elements)?;
    let mut gelems = g.elements(budget.max_elements)?;
    gelems.sort();
    let velems = v.elements(budget.max_elements)?;
    let cvg: Vec<Permutation> = velems
        .iter()
        .filter(|e| g.generators().iter().all(|s| e.commutes_with(s)))
        .cloned()
        .collect();

    for class in table.classes() {
        if class.order != l {
            continue;
        }
        let x = &class.rep;
        let x_inv = x.inverse();
        let closure = class_closure_with_witnesses(v, x, budget.max_elements)?;
        let w0 = match closure.get(&x_inv) {
            Some(w) => w.clone(),
            // Nothing in the source inverts this class of x at all.
            None => continue,
        };
        let w0_inv = w0.inverse();
        let cvx: Vec<&Permutation> = velems.iter().filter(|e| e.commutes_with(x)).collect();
        let cgx: Vec<&Permutation> = gelems.iter().filter(|e| e.commutes_with(x)).collect();

        let mut seen: HashSet<Permutation> = HashSet::new();
        for y in &gelems {
            if y.order() != m || seen.contains(y) {
                continue;
            }
            for c in &cgx {
                seen.insert(y.conjugate(c)?);
            }
            if (x * y).order() != n {
                continue;
            }
            let t = GeneratingTriple::new(x.clone(), y.clone())?;
            if !t.generates(g)? {
                continue;
            }
            // y^(c·w0) = y⁻¹ for some c centralising x pins down the
            // inverter coset of the pair.
            let target = y.inverse().conjugate(&w0_inv)?;
            let mut witness = None;
            for c in &cvx {
                if y.conjugate(c)? == target {
                    witness = Some((*c) * &w0);
                    break;
                }
            }
            let Some(w) = witness else { continue };
            for z in &cvg {
                let cand = z * &w;
                if cand.order() == 2 {
                    return Ok(Some((t, cand)));
                }
            }
        }
    }
    Ok(None)
}

/// True iff every element of `g` outside `g0` has order divisible by four.
/// An outside element of order 2k with k odd yields an outside involution
/// (its k-th power), whose square is the identity and lands in every
/// footprint; odd order is impossible outside an index-2 subgroup.  Under
/// the strict square rule, only subgroups passing this filter can carry a
/// mixed structure.
pub fn mixed_order_filter(g: &PermGroup, g0: &PermGroup, max_elements: usize) -> Result<bool> {
    for e in g.elements(max_elements)? {
        if e.order() % 4 != 0 && !g0.contains(&e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches every index-2 subgroup of `g` for a mixed Beauville structure:
/// a hyperbolic triple generating the subgroup whose footprint misses its
/// conjugates across the nontrivial coset, with squares from the coset
/// staying off the footprint.  The square condition follows `verify_mixed`:
/// by default it uses the footprint over subgroup conjugacy and tolerates
/// coset involutions; with `strict` it uses the footprint fused under
/// ambient conjugacy and rejects coset involutions outright (which lets
/// the order filter discard whole subgroups up front).
pub fn search_mixed(g: &PermGroup, strict: bool, budget: &Budget) -> Result<MixedSearch> {
    check_search_budget(g, budget)?;
    let gelems = g.elements(budget.max_elements)?;
    let ambient = if strict {
        Some(ClassTable::build(g, budget.max_elements)?)
    } else {
        None
    };
    let mut scans = Vec::new();
    let mut found = None;

    for sub in g.index_two_subgroups()? {
        let mut outer: Vec<Permutation> = Vec::new();
        for e in &gelems {
            if !sub.contains(e)? {
                outer.push(e.clone());
            }
        }
        let filter_ok = outer.iter().all(|o| o.order() % 4 == 0);
        if strict && !filter_ok {
            scans.push(MixedSubgroupScan {
                subgroup: sub,
                outer_orders_divisible_by_four: false,
                skipped_by_order_filter: true,
                triples: 0,
            });
            continue;
        }

        let table = ClassTable::build(&sub, budget.max_elements)?;
        let mut selems = sub.elements(budget.max_elements)?;
        selems.sort();
        let cands = candidate_triples(&sub, &table, &selems)?;
        let reps = orbit_reps_under_conjugation(&sub, &outer);

        // Conjugating the footprint by any coset element gives the same set
        // of classes, since the subgroup part of the conjugation permutes
        // each class into itself; one representative fixes the class map.
        let mut conjugated_id = Vec::with_capacity(table.len());
        for class in table.classes() {
            conjugated_id.push(table.class_of(&class.rep.conjugate(&reps[0])?)?);
        }
        // Fusing a subgroup class into the ambient group can only merge
        // classes, so the strict square test maps footprints through this.
        let fusion: Option<Vec<usize>> = match &ambient {
            Some(t_g) => {
                let mut v = Vec::with_capacity(table.len());
                for class in table.classes() {
                    v.push(t_g.class_of(&class.rep)?);
                }
                Some(v)
            }
            None => None,
        };
        // Squares across the coset, by class in whichever table the mode
        // reads; None marks an identity square, which only strict rejects.
        let mut square_ids: Vec<Option<usize>> = Vec::with_capacity(reps.len());
        for r in &reps {
            let sq = r * r;
            if sq.is_identity() {
                square_ids.push(None);
            } else {
                square_ids.push(Some(match &ambient {
                    Some(t_g) => t_g.class_of(&sq)?,
                    None => table.class_of(&sq)?,
                }));
            }
        }

        // When every involution class of the subgroup shows up among the
        // coset squares, any triple with an even order provably trips the
        // square condition (an even-order coordinate puts an involution on
        // the footprint), so only all-odd types need the full test.
        let square_classes: BTreeSet<usize> = {
            let mut s = BTreeSet::new();
            for r in &reps {
                let sq = r * r;
                if !sq.is_identity() {
                    s.insert(table.class_of(&sq)?);
                }
            }
            s
        };
        let involutions_covered = table
            .classes()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.order == 2)
            .all(|(k, _)| square_classes.contains(&k));

        let mut scanned = 0;
        let mut hit = None;
        for cand in &cands {
            scanned += 1;
            let (l, m, n) = cand.triple.triple_type();
            if involutions_covered && (l % 2 == 0 || m % 2 == 0 || n % 2 == 0) {
                continue;
            }
            let cross_ok = cand
                .profile
                .iter()
                .all(|&k| !cand.profile.contains(&conjugated_id[k]));
            if !cross_ok {
                continue;
            }
            let fused: Option<BTreeSet<usize>> = fusion
                .as_ref()
                .map(|f| cand.profile.iter().map(|&k| f[k]).collect());
            let square_profile = fused.as_ref().unwrap_or(&cand.profile);
            let squares_ok = square_ids.iter().all(|sid| match sid {
                None => !strict,
                Some(k) => !square_profile.contains(k),
            });
            if !squares_ok {
                continue;
            }
            hit = Some(MixedStructure {
                triple: cand.triple.clone(),
                outer: reps[0].clone(),
            });
            break;
        }

        let idx = scans.len();
        scans.push(MixedSubgroupScan {
            subgroup: sub,
            outer_orders_divisible_by_four: filter_ok,
            skipped_by_order_filter: false,
            triples: scanned,
        });
        if let Some(h) = hit {
            found = Some((idx, h));
            break;
        }
    }
    Ok(MixedSearch { scans, found })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_mixed, verify_strongly_real, verify_unmixed};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn no_unmixed_structure_on_a5() {
        // Every hyperbolic generating triple of A5 meets an order-5 element,
        // and the two classes of those are swapped by squaring, so any two
        // footprints share them.
        let g = PermGroup::alternating(5);
        let out = search_unmixed(&g, &budget()).unwrap();
        assert!(out.triples > 0, "A5 has hyperbolic generating triples");
        assert!(
            out.structure.is_none(),
            "A5 admits no unmixed Beauville structure"
        );
    }

    #[test]
    fn unmixed_structure_on_a6_verifies() {
        let g = PermGroup::alternating(6);
        let out = search_unmixed(&g, &budget()).unwrap();
        let s = out.structure.expect("A6 is a Beauville group");
        let report = verify_unmixed(&g, &s.first, &s.second, &budget()).unwrap();
        assert!(report.verified, "searched structure fails verification:\n{}", report.to_text());
    }

    fn c5_squared() -> (PermGroup, PermGroup) {
        let a = Permutation::parse_cycles(10, "(1,2,3,4,5)").unwrap();
        let b = Permutation::parse_cycles(10, "(6,7,8,9,10)").unwrap();
        // k ↦ -k on each cycle inverts both generators.
        let inv = Permutation::parse_cycles(10, "(2,5)(3,4)(7,10)(8,9)").unwrap();
        let g = PermGroup::from_generators(10, vec![a.clone(), b.clone()]).unwrap();
        let v = PermGroup::from_generators(10, vec![a, b, inv]).unwrap();
        (g, v)
    }

    #[test]
    fn strongly_generated_finds_an_inverting_involution() {
        let (g, v) = c5_squared();
        let hit = strongly_generated(&g, Some(&v), (5, 5, 5), &budget())
            .unwrap()
            .expect("the inversion coset is full of involutions");
        let (t, inv) = hit;
        assert_eq!(t.triple_type(), (5, 5, 5));
        assert!(t.generates(&g).unwrap());
        assert_eq!(inv.order(), 2, "the inverter must be an involution");
        assert_eq!(t.x().conjugate(&inv).unwrap(), t.x().inverse());
        assert_eq!(t.y().conjugate(&inv).unwrap(), t.y().inverse());
    }

    #[test]
    fn strongly_generated_without_source_stays_inner() {
        // No element of an abelian group inverts an order-5 generator, so
        // the inner-only search must come back empty.
        let (g, _) = c5_squared();
        assert!(strongly_generated(&g, None, (5, 5, 5), &budget())
            .unwrap()
            .is_none());
    }

    #[test]
    fn strongly_generated_respects_the_requested_type() {
        let (g, v) = c5_squared();
        assert!(
            strongly_generated(&g, Some(&v), (5, 5, 4), &budget())
                .unwrap()
                .is_none(),
            "no product of order-5 elements has order 4 here"
        );
    }

    #[test]
    fn strongly_real_structure_on_c5_squared() {
        // The inversion automorphism inverts every element, so any unmixed
        // structure on C5 × C5 is strongly real with a single inverter.
        let (g, v) = c5_squared();
        let out = search_strongly_real(&g, Some(&v), false, &budget()).unwrap();
        let s = out.structure.expect("C5 × C5 carries a strongly real structure");
        let (phi1, phi2) = s.inverters.clone().expect("inverters recorded");
        assert_eq!(
            phi1.conjugator(),
            phi2.conjugator(),
            "paired mode must return a single inverter"
        );
        let report =
            verify_strongly_real(&g, &s.first, &s.second, &phi1, None, &budget()).unwrap();
        assert!(report.verified, "searched structure fails verification:\n{}", report.to_text());
    }

    #[test]
    fn distinct_inverter_mode_on_c5_squared() {
        let (g, v) = c5_squared();
        let out = search_strongly_real(&g, Some(&v), true, &budget()).unwrap();
        let s = out.structure.expect("relaxed mode finds at least the paired structure");
        let (phi1, phi2) = s.inverters.clone().expect("inverters recorded");
        let report =
            verify_strongly_real(&g, &s.first, &s.second, &phi1, Some(&phi2), &budget()).unwrap();
        assert!(report.verified, "searched structure fails verification:\n{}", report.to_text());
    }

    #[test]
    fn no_strongly_real_structure_on_a5() {
        let g = PermGroup::alternating(5);
        let out = search_strongly_real(&g, None, false, &budget()).unwrap();
        assert!(out.structure.is_none(), "A5 is not even an unmixed Beauville group");
    }

    #[test]
    fn source_must_normalise_the_group() {
        let g = PermGroup::from_generators(
            3,
            vec![Permutation::parse_cycles(3, "(1,2)").unwrap()],
        )
        .unwrap();
        let v = PermGroup::symmetric(3);
        let err = search_strongly_real(&g, Some(&v), false, &budget()).unwrap_err();
        assert!(
            matches!(err, Error::InvalidAutomorphism(_)),
            "non-normalising source must be rejected, got {err:?}"
        );
    }

    #[test]
    fn no_mixed_structure_on_s6() {
        let g = PermGroup::symmetric(6);

        let relaxed = search_mixed(&g, false, &budget()).unwrap();
        assert_eq!(relaxed.scans.len(), 1, "S6 has a unique index-2 subgroup");
        assert!(!relaxed.scans[0].skipped_by_order_filter);
        assert!(relaxed.scans[0].triples > 0, "A6 triples must actually be scanned");
        assert!(relaxed.found.is_none(), "S6 admits no mixed structure");

        // Transpositions lie outside A6, so the order filter settles the
        // strict case without a scan.
        let strict = search_mixed(&g, true, &budget()).unwrap();
        assert!(strict.scans[0].skipped_by_order_filter);
        assert!(!strict.scans[0].outer_orders_divisible_by_four);
        assert!(strict.found.is_none());
    }

    #[test]
    fn order_filter_on_c8() {
        let g = PermGroup::cyclic(8);
        let subs = g.index_two_subgroups().unwrap();
        assert_eq!(subs.len(), 1);
        assert!(
            mixed_order_filter(&g, &subs[0], 100).unwrap(),
            "odd powers of an 8-cycle all have order 8"
        );
        // The filter passes but C4 has no hyperbolic generating triple.
        let out = search_mixed(&g, true, &budget()).unwrap();
        assert!(!out.scans[0].skipped_by_order_filter);
        assert_eq!(out.scans[0].triples, 0);
        assert!(out.found.is_none());
    }

    #[test]
    fn order_filter_rejects_s6() {
        let g = PermGroup::symmetric(6);
        let subs = g.index_two_subgroups().unwrap();
        assert!(!mixed_order_filter(&g, &subs[0], 1000).unwrap());
    }

    #[test]
    fn search_respects_group_order_ceiling() {
        let g = PermGroup::alternating(5);
        let tight = Budget::default().with_max_group_order(50);
        for err in [
            search_unmixed(&g, &tight).unwrap_err(),
            search_strongly_real(&g, None, false, &tight).unwrap_err(),
            search_mixed(&g, false, &tight).unwrap_err(),
        ] {
            assert!(matches!(err, Error::BudgetExceeded(_)), "got {err:?}");
        }
    }

    #[test]
    fn mixed_report_agrees_with_search_on_scanned_candidates() {
        // Cross-check the scan's class arithmetic against the direct
        // verifier on an explicit A6 triple inside S6: the verifier must
        // refute it for the same reason the scan skipped it.
        let g = PermGroup::symmetric(6);
        let sub = g.index_two_subgroups().unwrap().remove(0);
        let x = Permutation::parse_cycles(6, "(1,2,3,4,5)").unwrap();
        let y = Permutation::parse_cycles(6, "(1,2,3)(4,5,6)").unwrap();
        let t = GeneratingTriple::new(x, y).unwrap();
        assert!(t.generates(&sub).unwrap(), "chosen triple generates A6");
        let report = verify_mixed(&g, &sub, &t, false, &budget()).unwrap();
        assert!(!report.verified, "no A6 triple survives the coset conditions");
    }
}
