//! Lifting generation through central quotients, and order certificates.
//!
//! For a perfect group with a central subgroup K, a subset generates the
//! group iff its image generates the quotient by K: if the image
//! generates, ⟨S⟩K is the whole group, and since K is central the derived
//! subgroup of ⟨S⟩K lands inside ⟨S⟩ — which is everything when the group
//! is perfect.  [`check_lift`] verifies the hypotheses, answers from the
//! quotient side, and cross-checks the equivalence on the cover side.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::words::{Binding, WordExpr};

/// The action induced on the orbits of a central kernel.  Blocks are
/// numbered by their smallest point, so the quotient action is canonical.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    degree: usize,
    block_of: Vec<usize>,
    /// Smallest point of each block.
    block_rep: Vec<u32>,
}

impl QuotientMap {
    /// Builds the map whose blocks are the orbits of `kernel`, after
    /// checking that `kernel` sits centrally inside `cover`.
    pub fn central_orbits(cover: &PermGroup, kernel: &PermGroup) -> Result<QuotientMap> {
        let degree = cover.degree();
        if kernel.degree() != degree {
            return Err(Error::DegreeMismatch(degree, kernel.degree()));
        }
        for k in kernel.generators() {
            if !cover.contains(k)? {
                return Err(Error::InvalidQuotient(
                    "kernel is not a subgroup of the cover".to_string(),
                ));
            }
            for g in cover.generators() {
                if !k.commutes_with(g) {
                    return Err(Error::InvalidQuotient(format!(
                        "kernel generator {k} does not centralise the cover"
                    )));
                }
            }
        }

        let mut block_of = vec![usize::MAX; degree];
        let mut block_rep = Vec::new();
        for start in 0..degree {
            if block_of[start] != usize::MAX {
                continue;
            }
            let b = block_rep.len();
            block_rep.push(start as u32 + 1);
            let mut queue = vec![start];
            block_of[start] = b;
            while let Some(p) = queue.pop() {
                for k in kernel.generators() {
                    let q = k.image(p as u32) as usize;
                    if block_of[q] == usize::MAX {
                        block_of[q] = b;
                        queue.push(q);
                    }
                }
            }
        }
        Ok(QuotientMap {
            degree,
            block_of,
            block_rep,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of blocks, i.e. the degree of the quotient action.
    pub fn block_count(&self) -> usize {
        self.block_rep.len()
    }

    /// Image of a permutation on the blocks.  Every point of every block
    /// must land in one block, otherwise the image is not well defined
    /// and an error says which point strayed.
    pub fn apply(&self, p: &Permutation) -> Result<Permutation> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        let blocks = self.block_count();
        let mut images = vec![u32::MAX; blocks];
        for point in 0..self.degree {
            let b = self.block_of[point];
            let target = self.block_of[p.image(point as u32) as usize] as u32 + 1;
            if images[b] == u32::MAX {
                images[b] = target;
            } else if images[b] != target {
                return Err(Error::InvalidQuotient(format!(
                    "point {} of block {} maps across blocks under {p}",
                    point + 1,
                    b + 1,
                )));
            }
        }
        Permutation::from_images(&images)
    }

    /// The cover's whole image in the quotient action.
    pub fn image_group(&self, cover: &PermGroup) -> Result<PermGroup> {
        let mut gens = Vec::with_capacity(cover.generators().len());
        for g in cover.generators() {
            gens.push(self.apply(g)?);
        }
        PermGroup::from_generators(self.block_count(), gens)
    }
}

/// Decides whether `subset` generates `cover` by looking only at the
/// quotient modulo `kernel`.
///
/// Errors unless the cover is perfect and the kernel is central, and
/// unless the quotient is exact (image order times kernel order equals
/// the cover order — the kernel of the block action must be the given
/// kernel and nothing more).  The verdict from the quotient is
/// cross-checked against direct generation in the cover; a mismatch would
/// refute the lifting argument itself and is reported as an error.
pub fn check_lift(
    cover: &PermGroup,
    kernel: &PermGroup,
    subset: &[Permutation],
) -> Result<bool> {
    if !cover.is_perfect()? {
        return Err(Error::InvalidQuotient("cover is not perfect".to_string()));
    }
    let map = QuotientMap::central_orbits(cover, kernel)?;
    let image = map.image_group(cover)?;
    if image.order() * kernel.order() != *cover.order() {
        return Err(Error::InvalidQuotient(format!(
            "quotient is not exact: image order {} times kernel order {} is not the cover order {}",
            image.order(),
            kernel.order(),
            cover.order(),
        )));
    }
    for s in subset {
        if !cover.contains(s)? {
            return Err(Error::NotInGroup);
        }
    }

    let mut images = Vec::with_capacity(subset.len());
    for s in subset {
        images.push(map.apply(s)?);
    }
    let in_quotient = image.generates(&images)?;
    let in_cover = cover.generates(subset)?;
    if in_quotient != in_cover {
        return Err(Error::InvalidQuotient(format!(
            "lifting equivalence violated: image generates = {in_quotient}, subset generates = {in_cover}"
        )));
    }
    Ok(in_quotient)
}

/// One evaluated line of an order certificate.
#[derive(Debug, Clone)]
pub struct OrderCheck {
    pub expr: String,
    pub expected: u64,
    pub actual: u64,
}

impl OrderCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

/// Evaluates each claimed word in the binding and compares element
/// orders.  The certificate holds iff every claim matches; all claims are
/// evaluated either way, so a failing certificate shows every
/// discrepancy.
pub fn check_order_certificate(
    binding: &Binding,
    claims: &[(WordExpr, u64)],
) -> Result<(bool, Vec<OrderCheck>)> {
    let mut checks = Vec::with_capacity(claims.len());
    for (expr, expected) in claims {
        let actual = expr.eval(binding)?.order();
        checks.push(OrderCheck {
            expr: expr.to_string(),
            expected: *expected,
            actual,
        });
    }
    let ok = checks.iter().all(OrderCheck::passed);
    Ok((ok, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    /// SL2(5) acting on the 24 nonzero vectors of GF(5)², with its
    /// central subgroup {±1}.  Vector (x, y) gets index 5x + y, shifted
    /// down past the missing origin.
    fn sl2_5() -> (PermGroup, PermGroup, Permutation, Permutation) {
        let idx = |x: usize, y: usize| -> usize {
            let raw = 5 * x + y;
            raw - 1
        };
        let act = |m: [[usize; 2]; 2]| -> Permutation {
            let mut images = vec![0u32; 24];
            for x in 0..5 {
                for y in 0..5 {
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let nx = (m[0][0] * x + m[0][1] * y) % 5;
                    let ny = (m[1][0] * x + m[1][1] * y) % 5;
                    images[idx(x, y)] = idx(nx, ny) as u32 + 1;
                }
            }
            Permutation::from_images(&images).unwrap()
        };
        // s = [[0,-1],[1,0]], t = [[1,1],[0,1]], -1 = [[-1,0],[0,-1]].
        let s = act([[0, 4], [1, 0]]);
        let t = act([[1, 1], [0, 1]]);
        let minus = act([[4, 0], [0, 4]]);
        let cover = PermGroup::from_generators(24, vec![s.clone(), t.clone()]).unwrap();
        let kernel = PermGroup::from_generators(24, vec![minus]).unwrap();
        (cover, kernel, s, t)
    }

    #[test]
    fn sl2_5_maps_onto_a5_exactly() {
        let (cover, kernel, _, _) = sl2_5();
        assert_eq!(cover.order_u64().unwrap(), 120);
        assert_eq!(kernel.order_u64().unwrap(), 2);
        let map = QuotientMap::central_orbits(&cover, &kernel).unwrap();
        assert_eq!(map.block_count(), 12, "±v orbits pair up the 24 vectors");
        let image = map.image_group(&cover).unwrap();
        assert_eq!(image.order_u64().unwrap(), 60);
    }

    #[test]
    fn lift_answers_match_direct_generation() {
        let (cover, kernel, s, t) = sl2_5();
        assert!(check_lift(&cover, &kernel, &[s.clone(), t.clone()]).unwrap());
        // ⟨s⟩ is cyclic of order 4; its image cannot generate A5 either.
        assert!(!check_lift(&cover, &kernel, &[s.clone()]).unwrap());
        assert!(!check_lift(&cover, &kernel, &[s.clone(), s.pow(2)]).unwrap());
    }

    #[test]
    fn non_perfect_cover_is_rejected() {
        let c4 = PermGroup::cyclic(4);
        let sq = PermGroup::from_generators(4, vec![cyc(4, "(1,3)(2,4)")]).unwrap();
        let r = check_lift(&c4, &sq, &[cyc(4, "(1,2,3,4)")]);
        assert!(matches!(r, Err(Error::InvalidQuotient(_))));
    }

    #[test]
    fn non_central_kernel_is_rejected() {
        let s3 = PermGroup::symmetric(3);
        let flip = PermGroup::from_generators(3, vec![cyc(3, "(1,2)")]).unwrap();
        let r = QuotientMap::central_orbits(&s3, &flip);
        assert!(matches!(r, Err(Error::InvalidQuotient(_))));
    }

    #[test]
    fn straying_blocks_are_an_error() {
        // Blocks {1,3}, {2,4} from the central square of C4; the
        // transposition (1,2) splits the first block.
        let c4 = PermGroup::cyclic(4);
        let sq = PermGroup::from_generators(4, vec![cyc(4, "(1,3)(2,4)")]).unwrap();
        let map = QuotientMap::central_orbits(&c4, &sq).unwrap();
        assert_eq!(map.block_count(), 2);
        let ok = map.apply(&cyc(4, "(1,2,3,4)")).unwrap();
        assert_eq!(ok, cyc(2, "(1,2)"));
        let r = map.apply(&cyc(4, "(1,2)"));
        assert!(matches!(r, Err(Error::InvalidQuotient(_))));
    }

    #[test]
    fn order_certificate_reports_every_claim() {
        let a = cyc(5, "(1,2)");
        let b = cyc(5, "(1,2,3,4,5)");
        let bind = Binding::from_pairs(5, &[('a', a), ('b', b)]).unwrap();
        let claims = vec![
            (WordExpr::parse("a").unwrap(), 2),
            (WordExpr::parse("b").unwrap(), 5),
            (WordExpr::parse("ab").unwrap(), 4),
        ];
        let (ok, checks) = check_order_certificate(&bind, &claims).unwrap();
        assert!(ok, "all three orders match in S5");
        assert_eq!(checks.len(), 3);

        let bad = vec![
            (WordExpr::parse("a").unwrap(), 2),
            (WordExpr::parse("b").unwrap(), 7),
            (WordExpr::parse("ab").unwrap(), 3),
        ];
        let (ok, checks) = check_order_certificate(&bind, &bad).unwrap();
        assert!(!ok);
        assert_eq!(
            checks.iter().filter(|c| !c.passed()).count(),
            2,
            "a failing certificate still evaluates every claim"
        );
        assert_eq!(checks[1].actual, 5);
    }
}
