//! Permutations of `{1, ..., n}`.
//!
//! Points are 1-based in every external interface (parsing, printing,
//! cycle lists); the image table is 0-based internally.  Products compose
//! the *left* factor first: `(p * q)(k) = q(p(k))`.  This fixes the
//! conjugation convention `x^y = y⁻¹xy`, i.e. "apply y⁻¹, then x, then y".

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            img: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 1-based image list: `images[k]` is the
    /// image of point `k + 1`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut img = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range 1..={n}"
                )));
            }
            if seen[(v - 1) as usize] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[(v - 1) as usize] = true;
            img.push(v - 1);
        }
        Ok(Permutation { img })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 1-based points.  Cycles need not be disjoint; later cycles are
    /// applied after earlier ones, matching the printed form.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            if cycle.is_empty() {
                continue;
            }
            let mut used = vec![false; degree];
            for &x in cycle {
                if x < 1 || x as usize > degree {
                    return Err(Error::PointOutOfRange(x, degree));
                }
                if used[(x - 1) as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} repeated within a cycle"
                    )));
                }
                used[(x - 1) as usize] = true;
            }
            let mut c = Permutation::identity(degree);
            for w in cycle.windows(2) {
                c.img[(w[0] - 1) as usize] = w[1] - 1;
            }
            if cycle.len() > 1 {
                c.img[(cycle[cycle.len() - 1] - 1) as usize] = cycle[0] - 1;
            }
            p = &p * &c;
        }
        Ok(p)
    }

    /// Parses cycle notation like `(1,2)(3,4,5)` or `(1 2)(3 4 5)`.
    /// The empty product `()` is the identity.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut cur: Option<Vec<u32>> = None;
        let mut num: Option<u32> = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => {
                    if cur.is_some() {
                        return Err(Error::InvalidPermutation(format!(
                            "nested '(' at byte {i}"
                        )));
                    }
                    cur = Some(Vec::new());
                }
                ')' => {
                    let mut c = cur.take().ok_or_else(|| {
                        Error::InvalidPermutation(format!("unmatched ')' at byte {i}"))
                    })?;
                    if let Some(n) = num.take() {
                        c.push(n);
                    }
                    cycles.push(c);
                }
                '0'..='9' => {
                    if cur.is_none() {
                        return Err(Error::InvalidPermutation(format!(
                            "digit outside cycle at byte {i}"
                        )));
                    }
                    num = Some(num.unwrap_or(0) * 10 + (ch as u32 - '0' as u32));
                }
                ',' | ' ' | '\t' => {
                    if let Some(n) = num.take() {
                        cur.as_mut().unwrap().push(n);
                    }
                }
                _ => {
                    return Err(Error::InvalidPermutation(format!(
                        "unexpected character '{ch}' at byte {i}"
                    )));
                }
            }
        }
        if cur.is_some() {
            return Err(Error::InvalidPermutation("unterminated cycle".into()));
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 0-based image lookup.
    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.img[point as usize]
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Smallest moved point (0-based), if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.img
            .iter()
            .enumerate()
            .find(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0u32; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u32;
        }
        Permutation { img }
    }

    /// `by⁻¹ * self * by`.
    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        if self.degree() != by.degree() {
            return Err(Error::DegreeMismatch(self.degree(), by.degree()));
        }
        // (by⁻¹ · self · by)(k) = by(self(by⁻¹(k))); build directly.
        let mut img = vec![0u32; self.img.len()];
        for (i, &bi) in by.img.iter().enumerate() {
            img[bi as usize] = by.img[self.img[i] as usize];
        }
        Ok(Permutation { img })
    }

    pub fn pow(&self, e: i64) -> Self {
        let n = self.degree();
        if e == 0 || n == 0 {
            return Permutation::identity(n);
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Permutation::identity(n);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.img.len()];
        let mut ord: u64 = 1;
        for i in 0..self.img.len() {
            if seen[i] {
                continue;
            }
            let mut len: u64 = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        (0..self.img.len() as u32)
            .all(|k| other.img[self.img[k as usize] as usize] == self.img[other.img[k as usize] as usize])
    }

    /// Nontrivial cycles as 1-based point lists, each starting at its
    /// smallest point, ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for i in 0..self.img.len() {
            if seen[i] || self.img[i] as usize == i {
                seen[i] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j as u32 + 1);
                j = self.img[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of nontrivial cycle lengths, descending; a cheap conjugacy
    /// invariant.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut lens: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// `(p * q)(k) = q(p(k))`: the left factor acts first.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "composing permutations of unequal degree"
        );
        let img = self.img.iter().map(|&v| rhs.img[v as usize]).collect();
        Permutation { img }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn compose_applies_left_factor_first() {
        // Image chasing by hand: applying (1,2,3) then (1,2) sends
        // 1→2→1, 2→3→3, 3→1→2, so the product is (2,3).
        let a = p(3, "(1,2,3)");
        let b = p(3, "(1,2)");
        assert_eq!(a.compose(&b).unwrap(), p(3, "(2,3)"));
        // The opposite order gives (1,3): 1→2→3, 2→1→1... check: apply
        // (1,2) then (1,2,3): 1→2→3, 2→1→2, 3→3→1.
        assert_eq!(b.compose(&a).unwrap(), p(3, "(1,3)"));
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = p(5, "(1,2)");
        let y = p(5, "(1,2,3,4,5)");
        let manual = &(&y.inverse() * &x) * &y;
        assert_eq!(x.conjugate(&y).unwrap(), manual);
        // A transposition conjugated by a cycle moves its points along the
        // cycle: (1,2)^(1,2,3,4,5) = (2,3).
        assert_eq!(x.conjugate(&y).unwrap(), p(5, "(2,3)"));
    }

    #[test]
    fn inverse_and_pow() {
        let x = p(6, "(1,2,3)(4,5)");
        assert!((&x * &x.inverse()).is_identity());
        assert_eq!(x.pow(6), Permutation::identity(6));
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(2), &x * &x);
        assert_eq!(x.pow(0), Permutation::identity(6));
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(p(6, "(1,2,3)(4,5)").order(), 6);
        assert_eq!(p(6, "(1,2,3,4,5,6)").order(), 6);
        assert_eq!(p(6, "()").order(), 1);
        assert_eq!(p(10, "(2,9,5,6)(3,4,7,8)").order(), 4);
        assert_eq!(p(10, "(1,9,4,6,2)(3,5,7,10,8)").order(), 5);
    }

    #[test]
    fn image_list_round_trip() {
        let x = Permutation::from_images(&[2, 1, 3, 5, 4]).unwrap();
        assert_eq!(x, p(5, "(1,2)(4,5)"));
        assert!(Permutation::from_images(&[2, 2, 3]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 4]).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["()", "(1,2)", "(1,2,3)(4,5)", "(2,9,5,6)(3,4,7,8)"] {
            let x = p(10, s);
            assert_eq!(Permutation::parse_cycles(10, &x.to_string()).unwrap(), x);
        }
        assert_eq!(p(10, "(1 2)(3 4)"), p(10, "(1,2)(3,4)"));
        assert!(Permutation::parse_cycles(5, "(1,2").is_err());
        assert!(Permutation::parse_cycles(5, "(1,1)").is_err());
        assert!(Permutation::parse_cycles(5, "(1,7)").is_err());
    }

    #[test]
    fn cycle_type_descends() {
        assert_eq!(p(8, "(1,2)(3,4,5)(6,7)").cycle_type(), vec![3, 2, 2]);
    }
}
