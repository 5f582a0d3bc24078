//! Building strongly real candidates from an involution.
//!
//! For an involution t and any g, the product t·t^g is inverted by
//! conjugation with t, so elements of the form t·t^{g_i} come pre-inverted.
//! Conjugating their powers by anything in C(t) preserves that, which is
//! the whole construction: with u ∈ C(t) and y_i = (x_i^{j_i})^u, every
//! member of both triples is inverted by the single map φ = conj by t.  A
//! candidate pair is then a strongly real Beauville structure as soon as
//! it verifies as an unmixed one.
//!
//! The involution need not lie in G itself — any involution normalising G
//! works, and for some groups only an outer one can succeed (A6 carries
//! strongly real structures inverted by PGL2(9)-type involutions but none
//! inverted from inside or from S6).  Whenever t normalises G and t² = 1,
//! every ingredient t·t^{g_i}, bray_element(t, ·) and (x^j)^u stays in G.
//!
//! [`bray_element`] supplies members of C(t) without enumerating the
//! centraliser: half the dihedral group ⟨t, t^g⟩ commutes with t, and
//! which half is read off the parity of o(t·t^g).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::triple::{Automorphism, BeauvilleStructure, GeneratingTriple};
use crate::verify::{verify_strongly_real, verify_unmixed};
use crate::Budget;

/// An element of C(t) built from t and g: `(t·t^g)^r` when o(t·t^g) = 2r,
/// and `g·(t·t^g)^r` when o(t·t^g) = 2r + 1.  When g already commutes
/// with t the odd case degenerates to g itself.
pub fn bray_element(t: &Permutation, g: &Permutation) -> Result<Permutation> {
    if t.order() != 2 {
        return Err(Error::NotInvolution);
    }
    let c = t * &t.conjugate(g)?;
    let o = c.order();
    let half = c.pow((o / 2) as i64);
    if o % 2 == 0 {
        Ok(half)
    } else {
        Ok(g * &half)
    }
}

/// A candidate strongly real structure before verification: two triples
/// whose members are all inverted by the involution `t`.
#[derive(Debug, Clone)]
pub struct BrayCandidate {
    pub t: Permutation,
    pub u: Permutation,
    pub first: GeneratingTriple,
    pub second: GeneratingTriple,
}

/// Materialises the candidate with x_i = t·t^{g_i} and y_i = (x_i^{j_i})^u.
/// `t` must be an involution and `u` must commute with it; under those two
/// preconditions the inversion identities x_i^t = x_i⁻¹ and y_i^t = y_i⁻¹
/// are theorems, and they are asserted.
pub fn build_candidate(
    t: &Permutation,
    g1: &Permutation,
    g2: &Permutation,
    u: &Permutation,
    j1: u64,
    j2: u64,
) -> Result<BrayCandidate> {
    if t.order() != 2 {
        return Err(Error::NotInvolution);
    }
    if !u.commutes_with(t) {
        return Err(Error::NotCommuting);
    }
    let x1 = t * &t.conjugate(g1)?;
    let x2 = t * &t.conjugate(g2)?;
    let y1 = x1.pow(j1 as i64).conjugate(u)?;
    let y2 = x2.pow(j2 as i64).conjugate(u)?;
    for (x, y) in [(&x1, &y1), (&x2, &y2)] {
        assert_eq!(
            x.conjugate(t)?,
            x.inverse(),
            "t must invert t·t^g by construction"
        );
        assert_eq!(
            y.conjugate(t)?,
            y.inverse(),
            "t must invert (x^j)^u for u commuting with t"
        );
    }
    Ok(BrayCandidate {
        t: t.clone(),
        u: u.clone(),
        first: GeneratingTriple::new(x1, y1)?,
        second: GeneratingTriple::new(x2, y2)?,
    })
}

/// One scan trial: sample g1, g2 and a pool of C(t) elements, and take
/// every exponent pair through verification.
fn bray_trial(
    g: &PermGroup,
    t: &Permutation,
    phi: &Automorphism,
    seed: u64,
    trial: u64,
    budget: &Budget,
) -> Result<Vec<BeauvilleStructure>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let g1 = g.random_element(&mut rng);
    let g2 = g.random_element(&mut rng);
    let extra = g.random_element(&mut rng);

    let x1 = t * &t.conjugate(&g1)?;
    let x2 = t * &t.conjugate(&g2)?;
    let (o1, o2) = (x1.order(), x2.order());
    if o1 < 2 || o2 < 2 {
        return Ok(Vec::new());
    }
    let x1_powers: Vec<Permutation> = (0..o1).map(|k| x1.pow(k as i64)).collect();

    // Candidate u's: centraliser elements from three independent samples
    // and their pairwise products, keeping those that move ⟨x1⟩ around.
    let z1 = bray_element(t, &g1)?;
    let z2 = bray_element(t, &g2)?;
    let z3 = bray_element(t, &extra)?;
    let mut pool = vec![
        z1.clone(),
        z2.clone(),
        z3.clone(),
        &z1 * &z2,
        &z2 * &z3,
        &z1 * &z3,
    ];
    pool.dedup();
    pool.retain(|u| match x1.conjugate(u) {
        Ok(c) => !x1_powers.contains(&c),
        Err(_) => false,
    });

    let mut found = Vec::new();
    for u in &pool {
        for j1 in 1..o1 {
            for j2 in 1..o2 {
                let cand = build_candidate(t, &g1, &g2, u, j1, j2)?;
                if !cand.first.is_hyperbolic() || !cand.second.is_hyperbolic() {
                    continue;
                }
                if !cand.first.generates(g)? || !cand.second.generates(g)? {
                    continue;
                }
                let unmixed = verify_unmixed(g, &cand.first, &cand.second, budget)?;
                if !unmixed.verified {
                    continue;
                }
                let real =
                    verify_strongly_real(g, &cand.first, &cand.second, phi, None, budget)?;
                if !real.verified {
                    continue;
                }
                found.push(BeauvilleStructure::strongly_real(
                    cand.first.clone(),
                    cand.second.clone(),
                    phi.clone(),
                    phi.clone(),
                ));
            }
        }
    }
    Ok(found)
}

/// Randomized scan for strongly real structures inverted by the involution
/// `t`, which must normalise `g` (membership in `g` itself is not
/// required; an outer involution from an index-2 overgroup is the
/// interesting case).  Runs `budget.trials` independent trials (in
/// parallel), each deterministically seeded from `seed` and its trial
/// index, so the output list is identical across runs and thread counts.
/// An empty list means the scan found nothing, not that nothing exists.
pub fn bray_scan(
    g: &PermGroup,
    t: &Permutation,
    budget: &Budget,
    seed: u64,
) -> Result<Vec<BeauvilleStructure>> {
    if t.order() != 2 {
        return Err(Error::NotInvolution);
    }
    let phi = Automorphism::new(g, t.clone())?;
    let per_trial: Vec<Result<Vec<BeauvilleStructure>>> = (0..budget.trials)
        .into_par_iter()
        .map(|trial| bray_trial(g, t, &phi, seed, trial, budget))
        .collect();

    let mut out: Vec<BeauvilleStructure> = Vec::new();
    for r in per_trial {
        for s in r? {
            // Re-finds across trials are common; keep first occurrences.
            let dup = out.iter().any(|p| {
                p.first.x() == s.first.x()
                    && p.first.y() == s.first.y()
                    && p.second.x() == s.second.x()
                    && p.second.y() == s.second.y()
            });
            if !dup {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn random_involution<R: Rng>(g: &PermGroup, rng: &mut R) -> Permutation {
        loop {
            let e = g.random_element(rng);
            let o = e.order();
            if o % 2 == 0 {
                let t = e.pow((o / 2) as i64);
                if t.order() == 2 {
                    return t;
                }
            }
        }
    }

    #[test]
    fn bray_elements_commute_with_the_involution() {
        let s7 = PermGroup::symmetric(7);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let t = random_involution(&s7, &mut rng);
            let g = s7.random_element(&mut rng);
            let z = bray_element(&t, &g).unwrap();
            assert!(
                z.commutes_with(&t),
                "centraliser element {z} fails to commute with {t}"
            );
        }
    }

    #[test]
    fn degenerate_and_small_cases() {
        let s4 = PermGroup::symmetric(4);
        let t = cyc(4, "(1,2)");
        // g commuting with t: o(t·t^g) = 1 and the odd case returns g.
        let g = cyc(4, "(3,4)");
        assert_eq!(bray_element(&t, &g).unwrap(), g);
        // o(t·t^g) = 2: the even case returns t·t^g itself.
        let h = cyc(4, "(1,3)(2,4)");
        let c = &t * &t.conjugate(&h).unwrap();
        assert_eq!(c.order(), 2);
        assert_eq!(bray_element(&t, &h).unwrap(), c);
        assert!(s4.contains(&bray_element(&t, &h).unwrap()).unwrap());
    }

    #[test]
    fn non_involutions_are_rejected() {
        let t = cyc(4, "(1,2,3)");
        let g = cyc(4, "(1,2)");
        assert!(matches!(bray_element(&t, &g), Err(Error::NotInvolution)));
        let t2 = cyc(4, "(1,2)");
        let u = cyc(4, "(1,3)");
        assert!(matches!(
            build_candidate(&t2, &g, &g, &u, 1, 1),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn candidates_carry_the_inversion_identities() {
        let a6 = PermGroup::alternating(6);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 50 {
            let t = random_involution(&a6, &mut rng);
            let g1 = a6.random_element(&mut rng);
            let g2 = a6.random_element(&mut rng);
            let u = bray_element(&t, &a6.random_element(&mut rng)).unwrap();
            let x1 = &t * &t.conjugate(&g1).unwrap();
            let x2 = &t * &t.conjugate(&g2).unwrap();
            if x1.order() < 2 || x2.order() < 2 {
                continue;
            }
            let cand = build_candidate(&t, &g1, &g2, &u, 1, 1).unwrap();
            assert_eq!(cand.first.x().conjugate(&t).unwrap(), cand.first.x().inverse());
            assert_eq!(cand.first.y().conjugate(&t).unwrap(), cand.first.y().inverse());
            assert_eq!(cand.second.x().conjugate(&t).unwrap(), cand.second.x().inverse());
            assert_eq!(cand.second.y().conjugate(&t).unwrap(), cand.second.y().inverse());
            checked += 1;
        }
    }

    /// A degree-10 copy of A6 together with an involution of PGL2(9) type
    /// normalising it.  No involution inside A6 (nor in S6) inverts both
    /// triples of any unmixed structure here, so the outer one is the only
    /// way scans can succeed.
    fn a6_degree_10() -> (PermGroup, Permutation) {
        let x = cyc(10, "(2,9,5,6)(3,4,7,8)");
        let y = cyc(10, "(1,3,8,5)(2,6,10,4)");
        let t = cyc(10, "(1,10)(2,8)(3,6)(4,5)(7,9)");
        let g = PermGroup::from_generators(10, vec![x, y]).unwrap();
        assert_eq!(g.order_u64().unwrap(), 360);
        (g, t)
    }

    #[test]
    fn scan_finds_structures_on_a6_with_an_outer_involution() {
        let (a6, t) = a6_degree_10();
        let budget = Budget::default().with_trials(40);
        let found = bray_scan(&a6, &t, &budget, 1).unwrap();
        assert!(
            !found.is_empty(),
            "a modest scan on A6 should hit a strongly real structure"
        );
        for s in &found {
            let (phi1, _) = s.inverters.clone().unwrap();
            let report =
                verify_strongly_real(&a6, &s.first, &s.second, &phi1, None, &Budget::default())
                    .unwrap();
            assert!(report.verified, "scan output fails re-verification");
        }
    }

    #[test]
    fn scan_with_inner_involutions_on_a6_finds_nothing() {
        // Exhaustive search shows no unmixed structure on A6 has all four
        // members inverted by one inner involution, so whatever the seed,
        // an inner scan stays empty.
        let a6 = PermGroup::alternating(6);
        let t = cyc(6, "(1,2)(3,4)");
        let found = bray_scan(&a6, &t, &Budget::default().with_trials(30), 1).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn scan_is_deterministic_and_respects_zero_trials() {
        let (a6, t) = a6_degree_10();
        let budget = Budget::default().with_trials(12);
        let a = bray_scan(&a6, &t, &budget, 5).unwrap();
        let b = bray_scan(&a6, &t, &budget, 5).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.first.x(), y.first.x());
            assert_eq!(x.first.y(), y.first.y());
            assert_eq!(x.second.x(), y.second.x());
            assert_eq!(x.second.y(), y.second.y());
        }
        let none = bray_scan(&a6, &t, &Budget::default().with_trials(0), 5).unwrap();
        assert!(none.is_empty(), "zero trials scan nothing");
    }
}
