//! Generating triples, Beauville structures, and inverting automorphisms.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A triple (x, y, z) with xyz = 1.  Whether it generates a given group is
/// a separate, checked question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingTriple {
    x: Permutation,
    y: Permutation,
    z: Permutation,
}

impl GeneratingTriple {
    /// Completes (x, y) to (x, y, (xy)⁻¹).
    pub fn new(x: Permutation, y: Permutation) -> Result<Self> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch(x.degree(), y.degree()));
        }
        let z = (&x * &y).inverse();
        Ok(GeneratingTriple { x, y, z })
    }

    /// Accepts an explicit triple, insisting on xyz = 1.
    pub fn from_xyz(x: Permutation, y: Permutation, z: Permutation) -> Result<Self> {
        if x.degree() != y.degree() || y.degree() != z.degree() {
            return Err(Error::DegreeMismatch(x.degree(), z.degree()));
        }
        if !(&(&x * &y) * &z).is_identity() {
            return Err(Error::BrokenTriple);
        }
        Ok(GeneratingTriple { x, y, z })
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn z(&self) -> &Permutation {
        &self.z
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    /// (order of x, order of y, order of z).
    pub fn triple_type(&self) -> (u64, u64, u64) {
        (self.x.order(), self.y.order(), self.z.order())
    }

    /// Exact test of 1/l + 1/m + 1/n < 1, i.e. mn + ln + lm < lmn.
    pub fn is_hyperbolic(&self) -> bool {
        let (l, m, n) = self.triple_type();
        let (l, m, n) = (BigUint::from(l), BigUint::from(m), BigUint::from(n));
        &m * &n + &l * &n + &l * &m < l * m * n
    }

    pub fn generates(&self, g: &PermGroup) -> Result<bool> {
        g.generates(&[self.x.clone(), self.y.clone()])
    }

    pub fn conjugate(&self, w: &Permutation) -> Result<Self> {
        GeneratingTriple::from_xyz(
            self.x.conjugate(w)?,
            self.y.conjugate(w)?,
            self.z.conjugate(w)?,
        )
    }

    /// The nontrivial powers of x, y, and z, deduplicated.  Closing these
    /// under conjugacy gives the structure's footprint.
    pub fn power_seeds(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for s in [&self.x, &self.y, &self.z] {
            let o = s.order();
            for k in 1..o {
                let p = s.pow(k as i64);
                if !p.is_identity() && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// An automorphism of a permutation group realised as conjugation by a
/// permutation of the same degree (possibly lying outside the group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    by: Permutation,
}

impl Automorphism {
    /// Checks that conjugation by `by` maps the group to itself.
    pub fn new(g: &PermGroup, by: Permutation) -> Result<Self> {
        if by.degree() != g.degree() {
            return Err(Error::DegreeMismatch(g.degree(), by.degree()));
        }
        for s in g.generators() {
            if !g.contains(&s.conjugate(&by)?)? {
                return Err(Error::InvalidAutomorphism(format!(
                    "conjugation by {by} does not preserve the group"
                )));
            }
        }
        Ok(Automorphism { by })
    }

    pub fn conjugator(&self) -> &Permutation {
        &self.by
    }

    pub fn apply(&self, x: &Permutation) -> Result<Permutation> {
        x.conjugate(&self.by)
    }

    /// True when the automorphism is conjugation by a group element.
    pub fn is_inner(&self, g: &PermGroup) -> Result<bool> {
        g.contains(&self.by)
    }

    /// Whether this automorphism acts on `g` like conjugation by some
    /// element of `g`, searching by enumeration (budgeted).
    pub fn acts_inner(&self, g: &PermGroup, max_elements: usize) -> Result<bool> {
        if self.is_inner(g)? {
            return Ok(true);
        }
        for e in g.elements(max_elements)? {
            if g.generators()
                .iter()
                .all(|s| s.conjugate(&self.by).unwrap() == s.conjugate(&e).unwrap())
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn inverts(&self, x: &Permutation) -> Result<bool> {
        Ok(self.apply(x)? == x.inverse())
    }
}

/// A pair of hyperbolic generating triples whose footprints meet only in
/// the identity, optionally with automorphisms inverting each triple.
#[derive(Debug, Clone)]
pub struct BeauvilleStructure {
    pub first: GeneratingTriple,
    pub second: GeneratingTriple,
    /// Inverting automorphisms (one per triple) when the structure is
    /// strongly real; equal entries mean a single automorphism works.
    pub inverters: Option<(Automorphism, Automorphism)>,
}

impl BeauvilleStructure {
    pub fn unmixed(first: GeneratingTriple, second: GeneratingTriple) -> Self {
        BeauvilleStructure {
            first,
            second,
            inverters: None,
        }
    }

    pub fn strongly_real(
        first: GeneratingTriple,
        second: GeneratingTriple,
        phi1: Automorphism,
        phi2: Automorphism,
    ) -> Self {
        BeauvilleStructure {
            first,
            second,
            inverters: Some((phi1, phi2)),
        }
    }

    /// (l1, m1, n1; l2, m2, n2).
    pub fn bitype(&self) -> ((u64, u64, u64), (u64, u64, u64)) {
        (self.first.triple_type(), self.second.triple_type())
    }
}

/// A triple on an index-2 subgroup together with the ambient group,
/// packaged after the mixed conditions have been checked.
#[derive(Debug, Clone)]
pub struct MixedStructure {
    pub triple: GeneratingTriple,
    /// A representative of the nontrivial coset.
    pub outer: Permutation,
}

/// True iff `sub` has index 2 in `g` (orders compared exactly; membership
/// of the generators is the caller's concern).
pub fn has_index_two(g: &PermGroup, sub: &PermGroup) -> bool {
    sub.order() * BigUint::from(2u32) == *g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn triple_completion_and_validation() {
        let x = cyc(5, "(1,2,3,4,5)");
        let y = cyc(5, "(1,2,3)");
        let t = GeneratingTriple::new(x.clone(), y.clone()).unwrap();
        assert!((&(&x * &y) * t.z()).is_identity(), "z completes the product");
        assert!(GeneratingTriple::from_xyz(x.clone(), y.clone(), t.z().clone()).is_ok());
        assert!(matches!(
            GeneratingTriple::from_xyz(x.clone(), y.clone(), x.clone()),
            Err(Error::BrokenTriple)
        ));
    }

    #[test]
    fn hyperbolicity_is_exact_on_boundary_types() {
        // (2,3,6), (2,4,4), (3,3,3) are flat, not hyperbolic.
        let flat = [
            ("(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", "(1,3,5)(2,4,6)(7,9,11)(8,10,12)"),
        ];
        for (xs, ys) in flat {
            let t = GeneratingTriple::new(cyc(12, xs), cyc(12, ys)).unwrap();
            let (l, m, n) = t.triple_type();
            if 1.0 / l as f64 + 1.0 / m as f64 + 1.0 / n as f64 == 1.0 {
                assert!(!t.is_hyperbolic(), "type ({l},{m},{n}) is flat");
            }
        }
        // (2,3,7) is hyperbolic, (2,3,5) is not.
        let t = GeneratingTriple::new(cyc(7, "(1,2)(3,4)"), cyc(7, "(2,3,5)")).unwrap();
        let ty = t.triple_type();
        assert!(t.is_hyperbolic() == (ty.0 * ty.1 + ty.1 * ty.2 + ty.0 * ty.2 < ty.0 * ty.1 * ty.2));
        let t = GeneratingTriple::new(cyc(5, "(1,2)(3,4)"), cyc(5, "(1,3,5)")).unwrap();
        assert_eq!(t.triple_type(), (2, 3, 5));
        assert!(!t.is_hyperbolic(), "(2,3,5) is spherical");
    }

    #[test]
    fn power_seeds_skip_identity_and_duplicates() {
        let t = GeneratingTriple::new(cyc(4, "(1,2)"), cyc(4, "(1,2)(3,4)")).unwrap();
        let seeds = t.power_seeds();
        assert!(seeds.iter().all(|p| !p.is_identity()));
        let mut dedup = seeds.clone();
        dedup.dedup();
        assert_eq!(seeds.len(), dedup.len());
    }

    #[test]
    fn automorphism_validation_and_inversion() {
        let a6 = PermGroup::alternating(6);
        // Conjugation by a transposition is a (non-inner) automorphism.
        let t = cyc(6, "(1,2)");
        let phi = Automorphism::new(&a6, t).unwrap();
        assert!(!phi.is_inner(&a6).unwrap());
        assert!(!phi.acts_inner(&a6, 1000).unwrap());
        // Inner automorphisms act inner.
        let inner = Automorphism::new(&a6, cyc(6, "(1,2,3)")).unwrap();
        assert!(inner.is_inner(&a6).unwrap());
        assert!(inner.acts_inner(&a6, 1000).unwrap());
        // An element inverted by the outer conjugator.
        let x = cyc(6, "(1,2,3)");
        assert!(phi.inverts(&x).unwrap());

        // A permutation that does not normalise the group is rejected.
        let c7 = PermGroup::from_generators(7, vec![cyc(7, "(1,2,3,4,5,6,7)")]).unwrap();
        assert!(Automorphism::new(&c7, cyc(7, "(1,2)")).is_err());
    }

    #[test]
    fn index_two_test() {
        let s6 = PermGroup::symmetric(6);
        let a6 = PermGroup::alternating(6);
        assert!(has_index_two(&s6, &a6));
        assert!(!has_index_two(&s6, &s6));
        assert!(!has_index_two(&a6, &s6));
    }
}
