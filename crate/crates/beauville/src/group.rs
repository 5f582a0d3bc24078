//! Permutation groups backed by a base and strong generating set.
//!
//! Orders are exact (`BigUint`), membership is by sifting, and element
//! enumeration walks transversal products in a deterministic order.
//! Transversals are stored as Schreier vectors (parent edges), so memory
//! stays proportional to the orbit sizes.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    /// 0-based base point.
    point: u32,
    /// Strong generators acting at this level (they fix all earlier base
    /// points).
    gens: Vec<Permutation>,
    /// Orbit of `point` under `gens`, in discovery order; `orbit[0] == point`.
    orbit: Vec<u32>,
    /// `orbit_pos[p]` is `1 +` the orbit index of `p`, or 0 if absent.
    orbit_pos: Vec<u32>,
    /// Parent edge per orbit index: (orbit index of parent, generator index).
    parent: Vec<(u32, u32)>,
    /// (orbit index, generator index) pairs not yet closed under Schreier's
    /// lemma.
    pending: VecDeque<(u32, u32)>,
}

impl Level {
    fn new(degree: usize, point: u32) -> Self {
        let mut orbit_pos = vec![0u32; degree];
        orbit_pos[point as usize] = 1;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            orbit_pos,
            parent: vec![(0, u32::MAX)],
            pending: VecDeque::new(),
        }
    }

    /// Transversal element mapping the base point to `gamma`.
    fn transversal(&self, gamma: u32) -> Permutation {
        let degree = self.orbit_pos.len();
        let mut path = Vec::new();
        let mut pos = self.orbit_pos[gamma as usize] - 1;
        while self.parent[pos as usize].1 != u32::MAX {
            let (pp, gi) = self.parent[pos as usize];
            path.push(gi);
            pos = pp;
        }
        let mut t = Permutation::identity(degree);
        for &gi in path.iter().rev() {
            t = &t * &self.gens[gi as usize];
        }
        t
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `1..=degree`.
    /// An empty list yields the trivial group of the declared degree.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_preferred_base(degree, generators, &[])
    }

    /// Like [`PermGroup::from_generators`], but the stabilizer chain starts
    /// with the given 1-based points, in order.  Strong generators at chain
    /// levels past the prefix fix every listed point, which makes pointwise
    /// stabilizers read off the chain directly.
    pub fn with_preferred_base(
        degree: usize,
        generators: Vec<Permutation>,
        base_points: &[u32],
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        for &p in base_points {
            if p < 1 || p as usize > degree {
                return Err(Error::PointOutOfRange(p, degree));
            }
        }
        let mut builder = Builder {
            degree,
            chain: base_points
                .iter()
                .map(|&p| Level::new(degree, p - 1))
                .collect(),
        };
        for g in &generators {
            builder.insert(g.clone());
        }
        let mut chain = builder.chain;
        // Levels created for preferred points that the group never moves
        // contribute factor 1; keep them only while they carry information.
        chain.retain(|l| l.orbit.len() > 1 || !l.gens.is_empty());
        let order = chain
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// 1-based base points of the stabilizer chain.
    pub fn base(&self) -> Vec<u32> {
        self.chain.iter().map(|l| l.point + 1).collect()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.sift(p.clone()).is_identity())
    }

    fn sift(&self, mut g: Permutation) -> Permutation {
        for level in &self.chain {
            let gamma = g.image(level.point);
            if gamma == level.point {
                continue;
            }
            if level.orbit_pos[gamma as usize] == 0 {
                return g;
            }
            let t = level.transversal(gamma);
            g = &g * &t.inverse();
        }
        g
    }

    /// True iff `⟨sub⟩ = G`.  Every element of `sub` must lie in `G`.
    pub fn generates(&self, sub: &[Permutation]) -> Result<bool> {
        for p in sub {
            if !self.contains(p)? {
                return Err(Error::NotInGroup);
            }
        }
        let h = PermGroup::from_generators(self.degree, sub.to_vec())?;
        Ok(h.order == self.order)
    }

    /// All elements, in a deterministic order, or an error if the group
    /// order exceeds `max`.
    pub fn elements(&self, max: usize) -> Result<Vec<Permutation>> {
        let order = self.order.to_usize().filter(|&o| o <= max).ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "group order {} exceeds element budget {max}",
                self.order
            ))
        })?;
        let mut out = Vec::with_capacity(order);
        self.walk(&mut out, &Permutation::identity(self.degree), 0);
        Ok(out)
    }

    // Every element factors uniquely as t_k ⋯ t_1 t_0 with t_i from the
    // level-i transversal (right cosets of the point stabilizers), so each
    // level prepends its transversal element to the running product.
    fn walk(&self, out: &mut Vec<Permutation>, suffix: &Permutation, level: usize) {
        if level == self.chain.len() {
            out.push(suffix.clone());
            return;
        }
        for &gamma in &self.chain[level].orbit {
            let t = self.chain[level].transversal(gamma);
            self.walk(out, &(&t * suffix), level + 1);
        }
    }

    /// Uniformly random element: one transversal element per level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.chain.iter().rev() {
            let gamma = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = &g * &level.transversal(gamma);
        }
        g
    }

    /// Stabilizer of a 1-based point, as a group of the same degree.
    pub fn stabilizer(&self, point: u32) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Pointwise stabilizer of the listed 1-based points.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Result<PermGroup> {
        let rebuilt =
            PermGroup::with_preferred_base(self.degree, self.generators.clone(), points)?;
        let fixed: Vec<u32> = points.iter().map(|&p| p - 1).collect();
        let mut gens = Vec::new();
        for level in &rebuilt.chain {
            for g in &level.gens {
                if fixed.iter().all(|&p| g.image(p) == p) {
                    gens.push(g.clone());
                }
            }
        }
        gens.sort();
        gens.dedup();
        PermGroup::from_generators(self.degree, gens)
    }

    /// The action induced on a subset of points (1-based), re-indexed to
    /// `1..=points.len()`.  Every generator must preserve the subset.
    pub fn induced_on(&self, points: &[u32]) -> Result<PermGroup> {
        let mut index = vec![u32::MAX; self.degree];
        for (i, &p) in points.iter().enumerate() {
            if p < 1 || p as usize > self.degree {
                return Err(Error::PointOutOfRange(p, self.degree));
            }
            index[(p - 1) as usize] = i as u32;
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut img = vec![0u32; points.len()];
            for (i, &p) in points.iter().enumerate() {
                let q = g.image(p - 1);
                let qi = index[q as usize];
                if qi == u32::MAX {
                    return Err(Error::InvalidPermutation(format!(
                        "generator moves point {p} outside the subset"
                    )));
                }
                img[i] = qi + 1;
            }
            gens.push(Permutation::from_images(&img)?);
        }
        PermGroup::from_generators(points.len(), gens)
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if s.degree() != self.degree {
                return Err(Error::DegreeMismatch(self.degree, s.degree()));
            }
        }
        let mut gens: Vec<Permutation> =
            seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut h = PermGroup::from_generators(self.degree, gens.clone())?;
        let mut queue: Vec<Permutation> = gens.clone();
        while let Some(x) = queue.pop() {
            for g in &self.generators {
                let c = x.conjugate(g)?;
                if !h.contains(&c)? {
                    gens.push(c.clone());
                    queue.push(c);
                    h = PermGroup::from_generators(self.degree, gens.clone())?;
                }
            }
        }
        Ok(h)
    }

    /// Derived subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut seeds = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let comm = &(&(&a.inverse() * &b.inverse()) * a) * b;
                if !comm.is_identity() {
                    seeds.push(comm);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.derived_subgroup()?.order == self.order)
    }

    /// All subgroups of index 2.  These are the kernels of the nontrivial
    /// characters of `G / ⟨squares, commutators⟩`, which is an elementary
    /// abelian 2-group.
    pub fn index_two_subgroups(&self) -> Result<Vec<PermGroup>> {
        let mut seeds = Vec::new();
        for g in &self.generators {
            let sq = g * g;
            if !sq.is_identity() {
                seeds.push(sq);
            }
        }
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let comm = &(&(&a.inverse() * &b.inverse()) * a) * b;
                if !comm.is_identity() {
                    seeds.push(comm);
                }
            }
        }
        let n = self.normal_closure(&seeds)?;
        if n.order == self.order {
            return Ok(Vec::new());
        }
        // Coset representatives of N in G; the quotient is elementary
        // abelian of order 2^k.
        let mut reps: Vec<Permutation> = vec![self.identity()];
        let mut queue = vec![self.identity()];
        while let Some(r) = queue.pop() {
            for g in &self.generators {
                let r2 = &r * g;
                let known = reps.iter().any(|s| {
                    n.contains(&(&r2 * &s.inverse()))
                        .expect("degrees match within the group")
                });
                if !known {
                    reps.push(r2.clone());
                    queue.push(r2);
                    if reps.len() > 4096 {
                        return Err(Error::BudgetExceeded(
                            "2-elementary quotient larger than 4096".into(),
                        ));
                    }
                }
            }
        }
        let rep_of = |x: &Permutation| -> usize {
            reps.iter()
                .position(|s| {
                    n.contains(&(x * &s.inverse()))
                        .expect("degrees match within the group")
                })
                .expect("closed coset list")
        };
        // Greedy F2-basis of the quotient.
        let mut basis: Vec<usize> = Vec::new();
        let mut span: Vec<usize> = vec![0];
        for i in 1..reps.len() {
            if span.contains(&i) {
                continue;
            }
            basis.push(i);
            let mut extended = span.clone();
            for &s in &span {
                extended.push(rep_of(&(&reps[s] * &reps[i])));
            }
            extended.sort_unstable();
            extended.dedup();
            span = extended;
        }
        let k = basis.len();
        debug_assert_eq!(1usize << k, reps.len());
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << k) {
            // χ(basis[i]) = −1 iff bit i of mask is set; emit ker χ.
            let mut gens: Vec<Permutation> = n.generators.clone();
            let minus: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            for i in 0..k {
                if mask >> i & 1 == 0 {
                    gens.push(reps[basis[i]].clone());
                }
            }
            for &j in &minus[1..] {
                gens.push(&reps[basis[minus[0]]] * &reps[basis[j]]);
            }
            out.push(PermGroup::from_generators(self.degree, gens)?);
        }
        out.sort_by(|a, b| {
            a.generators
                .iter()
                .min()
                .cmp(&b.generators.iter().min())
                .then_with(|| a.generators.len().cmp(&b.generators.len()))
        });
        Ok(out)
    }

    /// Symmetric group on `1..=n`.
    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[(1..=n as u32).collect()]).unwrap());
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        PermGroup::from_generators(n, gens).unwrap()
    }

    /// Alternating group on `1..=n`.
    pub fn alternating(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2, 3]]).unwrap());
        }
        if n >= 4 {
            let tail: Vec<u32> = if n % 2 == 1 {
                (1..=n as u32).collect()
            } else {
                (2..=n as u32).collect()
            };
            gens.push(Permutation::from_cycles(n, &[tail]).unwrap());
        }
        PermGroup::from_generators(n, gens).unwrap()
    }

    /// Cyclic group generated by an `n`-cycle.
    pub fn cyclic(n: usize) -> PermGroup {
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[(1..=n as u32).collect()]).unwrap()]
        } else {
            vec![]
        };
        PermGroup::from_generators(n, gens).unwrap()
    }

    /// Dihedral group of order `2n` acting on `n` points (`n ≥ 3`).
    pub fn dihedral(n: usize) -> PermGroup {
        assert!(n >= 3, "dihedral groups need at least 3 points");
        let rot = Permutation::from_cycles(n, &[(1..=n as u32).collect()]).unwrap();
        let refl_img: Vec<u32> = (1..=n as u32).map(|k| n as u32 + 1 - k).collect();
        let refl = Permutation::from_images(&refl_img).unwrap();
        PermGroup::from_generators(n, vec![rot, refl]).unwrap()
    }
}

struct Builder {
    degree: usize,
    chain: Vec<Level>,
}

// Invariant restored by `pump`: for every level l, every (orbit point,
// generator) pair at l has been processed once, and its Schreier generator
// was proved a member of the deeper chain (sifted to the identity) or its
// residue was installed as a strong generator.  A strong generator fixing
// the first l base points is stored at every level 0..=l, so each level's
// generator list is exactly the strong generators fixing all earlier base
// points, and the stabilizer chain is genuine.
impl Builder {
    fn insert(&mut self, g: Permutation) {
        let (r, j) = self.strip(g, 0);
        if !r.is_identity() {
            self.place(r, j);
            self.pump();
        }
    }

    /// Multiply away transversal factors level by level.  Returns the
    /// residue and the level where sifting stopped (`chain.len()` if the
    /// residue fixes every base point).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        let mut at = from;
        while at < self.chain.len() {
            if g.is_identity() {
                return (g, at);
            }
            let lv = &self.chain[at];
            let gamma = g.image(lv.point);
            if gamma == lv.point {
                at += 1;
                continue;
            }
            if lv.orbit_pos[gamma as usize] == 0 {
                return (g, at);
            }
            let t = lv.transversal(gamma);
            g = &g * &t.inverse();
            at += 1;
        }
        (g, self.chain.len())
    }

    /// Install a residue that fixes the base points of levels `0..j` as a
    /// strong generator at levels `0..=j`, queueing its Schreier pairs.
    fn place(&mut self, r: Permutation, j: usize) {
        if j == self.chain.len() {
            let point = r
                .first_moved()
                .expect("non-identity permutation moves a point");
            self.chain.push(Level::new(self.degree, point));
        }
        if self.chain[j].gens.contains(&r) {
            return;
        }
        for level in 0..=j {
            let lv = &mut self.chain[level];
            let gi = lv.gens.len() as u32;
            lv.gens.push(r.clone());
            for pos in 0..lv.orbit.len() as u32 {
                lv.pending.push_back((pos, gi));
            }
        }
    }

    // Deepest level first, so orbit growth at the drop level happens before
    // shallower Schreier generators are stripped against it.
    fn pump(&mut self) {
        loop {
            let Some(level) = (0..self.chain.len())
                .rev()
                .find(|&l| !self.chain[l].pending.is_empty())
            else {
                return;
            };
            let (pos, gi) = self.chain[level].pending.pop_front().unwrap();
            let lv = &self.chain[level];
            let gamma = lv.orbit[pos as usize];
            let delta = lv.gens[gi as usize].image(gamma);
            if lv.orbit_pos[delta as usize] == 0 {
                let lv = &mut self.chain[level];
                lv.orbit.push(delta);
                lv.orbit_pos[delta as usize] = lv.orbit.len() as u32;
                lv.parent.push((pos, gi));
                let new_pos = lv.orbit.len() as u32 - 1;
                for idx in 0..lv.gens.len() as u32 {
                    lv.pending.push_back((new_pos, idx));
                }
            } else {
                let schreier = {
                    let u_gamma = lv.transversal(gamma);
                    let u_delta = lv.transversal(delta);
                    &(&u_gamma * &lv.gens[gi as usize]) * &u_delta.inverse()
                };
                let (r, j) = self.strip(schreier, level + 1);
                if !r.is_identity() {
                    self.place(r, j);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force closure: repeatedly multiply until no new elements
    /// appear.  Independent of the stabilizer chain.
    fn closure_order(degree: usize, gens: &[Permutation]) -> usize {
        use std::collections::HashSet;
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut frontier = vec![Permutation::identity(degree)];
        seen.insert(Permutation::identity(degree));
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn orders_match_brute_force_closure() {
        let cases: Vec<(usize, Vec<Permutation>)> = vec![
            (5, vec![cyc(5, "(1,2,3,4,5)"), cyc(5, "(3,4,5)")]),
            (6, vec![cyc(6, "(1,2,3,4,5,6)"), cyc(6, "(1,2)")]),
            (7, vec![cyc(7, "(1,2,3,4,5,6,7)"), cyc(7, "(1,2,3)")]),
            (4, vec![cyc(4, "(1,2)(3,4)"), cyc(4, "(1,3)(2,4)")]),
            (8, vec![cyc(8, "(1,2,3,4,5,6,7,8)"), cyc(8, "(1,8)(2,7)(3,6)(4,5)")]),
        ];
        for (degree, gens) in cases {
            let expect = closure_order(degree, &gens);
            let g = PermGroup::from_generators(degree, gens).unwrap();
            assert_eq!(g.order(), &BigUint::from(expect), "degree {degree}");
        }
    }

    #[test]
    fn family_constructors() {
        assert_eq!(PermGroup::symmetric(6).order_u64(), Some(720));
        assert_eq!(PermGroup::alternating(5).order_u64(), Some(60));
        assert_eq!(PermGroup::alternating(6).order_u64(), Some(360));
        assert_eq!(PermGroup::alternating(8).order_u64(), Some(20160));
        assert_eq!(PermGroup::cyclic(12).order_u64(), Some(12));
        assert_eq!(PermGroup::dihedral(6).order_u64(), Some(12));
        assert_eq!(PermGroup::dihedral(9).order_u64(), Some(18));
        assert_eq!(PermGroup::symmetric(1).order_u64(), Some(1));
    }

    #[test]
    fn trivial_group_from_empty_generators() {
        let g = PermGroup::from_generators(5, vec![]).unwrap();
        assert!(g.is_trivial());
        assert!(g.contains(&Permutation::identity(5)).unwrap());
        assert!(!g.contains(&cyc(5, "(1,2)")).unwrap());
        assert_eq!(g.elements(10).unwrap().len(), 1);
    }

    #[test]
    fn membership_by_sifting() {
        let a5 = PermGroup::alternating(5);
        assert!(a5.contains(&cyc(5, "(1,2,3)")).unwrap());
        assert!(a5.contains(&cyc(5, "(1,2)(3,4)")).unwrap());
        assert!(!a5.contains(&cyc(5, "(1,2)")).unwrap());
        assert!(a5.contains(&cyc(4, "(1,2)(3,4)")).is_err());
    }

    #[test]
    fn generates_checks_membership_and_order() {
        let s6 = PermGroup::symmetric(6);
        assert!(s6
            .generates(&[cyc(6, "(1,2,3,4,5,6)"), cyc(6, "(1,2)")])
            .unwrap());
        assert!(!s6.generates(&[cyc(6, "(1,2,3)")]).unwrap());
        // Elements outside the group are rejected, not coerced.
        let a6 = PermGroup::alternating(6);
        assert!(matches!(
            a6.generates(&[cyc(6, "(1,2)")]),
            Err(Error::NotInGroup)
        ));
    }

    #[test]
    fn elements_enumerates_each_element_once() {
        use std::collections::HashSet;
        let g = PermGroup::dihedral(5);
        let els = g.elements(100).unwrap();
        assert_eq!(els.len(), 10);
        assert_eq!(els.iter().collect::<HashSet<_>>().len(), 10);
        for e in &els {
            assert!(g.contains(e).unwrap());
        }
        assert!(PermGroup::symmetric(8).elements(1000).is_err());
    }

    #[test]
    fn random_elements_are_members() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = PermGroup::symmetric(7);
        for _ in 0..50 {
            let x = m.random_element(&mut rng);
            assert!(m.contains(&x).unwrap());
        }
    }

    #[test]
    fn stabilizer_of_a_point() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(5).unwrap();
        assert_eq!(st.order_u64(), Some(24));
        for g in st.generators() {
            assert_eq!(g.image(4), 4);
        }
        let on4 = st.induced_on(&[1, 2, 3, 4]).unwrap();
        assert_eq!(on4.order_u64(), Some(24));
        assert_eq!(on4.degree(), 4);
    }

    #[test]
    fn pointwise_stabilizer_fixes_all_points() {
        let s6 = PermGroup::symmetric(6);
        let st = s6.pointwise_stabilizer(&[1, 2]).unwrap();
        assert_eq!(st.order_u64(), Some(24));
        for g in st.generators() {
            assert_eq!(g.image(0), 0);
            assert_eq!(g.image(1), 1);
        }
    }

    #[test]
    fn normal_closure_and_derived_subgroup() {
        let s4 = PermGroup::symmetric(4);
        let v4 = s4.normal_closure(&[cyc(4, "(1,2)(3,4)")]).unwrap();
        assert_eq!(v4.order_u64(), Some(4));
        let a4 = s4.derived_subgroup().unwrap();
        assert_eq!(a4.order_u64(), Some(12));
        assert!(!s4.is_perfect().unwrap());
        assert!(PermGroup::alternating(5).is_perfect().unwrap());
    }

    #[test]
    fn index_two_subgroups_of_small_groups() {
        let s6 = PermGroup::symmetric(6);
        let subs = s6.index_two_subgroups().unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order_u64(), Some(360));
        assert!(subs[0].contains(&cyc(6, "(1,2,3)")).unwrap());

        assert!(PermGroup::alternating(6)
            .index_two_subgroups()
            .unwrap()
            .is_empty());

        // D6 ≅ C2 × S3 has three subgroups of index 2.
        let d6 = PermGroup::dihedral(6);
        let subs = d6.index_two_subgroups().unwrap();
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert_eq!(s.order_u64(), Some(6));
        }
    }
}
