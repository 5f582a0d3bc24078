//! Words in named generators: parsing, printing, and evaluation.
//!
//! Grammar, with juxtaposition as the product:
//!
//! ```text
//! word     := term+
//! term     := atom ('^' exponent)*
//! atom     := name | '(' word ')'
//! exponent := integer | name | '(' word ')'
//! name     := 'a'..'z'
//! ```
//!
//! An integer exponent is a power, anything else is conjugation
//! (`x^y = y⁻¹xy`), and exponent chains associate left: `a^b^2 = (a^b)^2`.
//! Whitespace may separate tokens; digits bind only to a preceding `^`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordExpr {
    Gen(char),
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
    Conj(Box<WordExpr>, Box<WordExpr>),
}

/// Assignment of permutations to generator names, all of one degree.
#[derive(Debug, Clone)]
pub struct Binding {
    degree: usize,
    map: BTreeMap<char, Permutation>,
}

impl Binding {
    pub fn new(degree: usize) -> Self {
        Binding {
            degree,
            map: BTreeMap::new(),
        }
    }

    pub fn from_pairs(degree: usize, pairs: &[(char, Permutation)]) -> Result<Self> {
        let mut b = Binding::new(degree);
        for (name, p) in pairs {
            b.set(*name, p.clone())?;
        }
        Ok(b)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn set(&mut self, name: char, p: Permutation) -> Result<()> {
        if !name.is_ascii_lowercase() {
            return Err(Error::InvalidPermutation(format!(
                "generator name {name:?} is not a lowercase letter"
            )));
        }
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        self.map.insert(name, p);
        Ok(())
    }

    pub fn get(&self, name: char) -> Option<&Permutation> {
        self.map.get(&name)
    }

    pub fn names(&self) -> impl Iterator<Item = char> + '_ {
        self.map.keys().copied()
    }
}

impl WordExpr {
    pub fn parse(s: &str) -> Result<WordExpr> {
        let mut p = Parser {
            s: s.as_bytes(),
            i: 0,
        };
        let w = p.word()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("unexpected character after word"));
        }
        Ok(w)
    }

    /// Generator names appearing in the word.
    pub fn names(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<char>) {
        match self {
            WordExpr::Gen(c) => {
                out.insert(*c);
            }
            WordExpr::Product(fs) => fs.iter().for_each(|f| f.collect_names(out)),
            WordExpr::Power(b, _) => b.collect_names(out),
            WordExpr::Conj(x, y) => {
                x.collect_names(out);
                y.collect_names(out);
            }
        }
    }

    pub fn eval(&self, binding: &Binding) -> Result<Permutation> {
        match self {
            WordExpr::Gen(c) => binding
                .get(*c)
                .cloned()
                .ok_or(Error::UnboundName(*c)),
            WordExpr::Product(fs) => {
                let mut acc = Permutation::identity(binding.degree());
                for f in fs {
                    acc = acc.compose(&f.eval(binding)?)?;
                }
                Ok(acc)
            }
            WordExpr::Power(b, n) => Ok(b.eval(binding)?.pow(*n)),
            WordExpr::Conj(x, y) => x.eval(binding)?.conjugate(&y.eval(binding)?),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::WordParse {
            at: self.i,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn word(&mut self) -> Result<WordExpr> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'a'..=b'z') | Some(b'(') => factors.push(self.term()?),
                _ => break,
            }
        }
        match factors.len() {
            0 => Err(self.err("expected a generator name or '('")),
            1 => Ok(factors.pop().unwrap()),
            _ => Ok(WordExpr::Product(factors)),
        }
    }

    fn term(&mut self) -> Result<WordExpr> {
        let mut e = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'^') {
                return Ok(e);
            }
            self.i += 1;
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == b'-' => {
                    e = WordExpr::Power(Box::new(e), self.integer()?);
                }
                Some(b'a'..=b'z') => {
                    let c = self.s[self.i] as char;
                    self.i += 1;
                    e = WordExpr::Conj(Box::new(e), Box::new(WordExpr::Gen(c)));
                }
                Some(b'(') => {
                    e = WordExpr::Conj(Box::new(e), Box::new(self.atom()?));
                }
                _ => return Err(self.err("expected an integer, generator, or '(' after '^'")),
            }
        }
    }

    fn atom(&mut self) -> Result<WordExpr> {
        self.skip_ws();
        match self.peek() {
            Some(c @ b'a'..=b'z') => {
                self.i += 1;
                Ok(WordExpr::Gen(c as char))
            }
            Some(b'(') => {
                self.i += 1;
                let w = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("unterminated '('"));
                }
                self.i += 1;
                Ok(w)
            }
            _ => Err(self.err("expected a generator name or '('")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.i;
        if self.peek() == Some(b'-') {
            self.i += 1;
        }
        let digits_start = self.i;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.i += 1;
        }
        if self.i == digits_start {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.s[start..self.i])
            .expect("ascii digits")
            .parse::<i64>()
            .map_err(|_| self.err("integer exponent out of range"))
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Gen(c) => write!(f, "{c}"),
            WordExpr::Product(fs) => {
                for x in fs {
                    if matches!(x, WordExpr::Product(_)) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            WordExpr::Power(b, n) => {
                if matches!(**b, WordExpr::Gen(_)) {
                    write!(f, "{b}^{n}")
                } else {
                    write!(f, "({b})^{n}")
                }
            }
            WordExpr::Conj(x, y) => {
                if matches!(**x, WordExpr::Gen(_)) {
                    write!(f, "{x}^")?;
                } else {
                    write!(f, "({x})^")?;
                }
                if matches!(**y, WordExpr::Gen(_)) {
                    write!(f, "{y}")
                } else {
                    write!(f, "({y})")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind_s5() -> Binding {
        let a = Permutation::parse_cycles(5, "(1,2)").unwrap();
        let b = Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap();
        Binding::from_pairs(5, &[('a', a), ('b', b)]).unwrap()
    }

    #[test]
    fn eval_matches_direct_permutation_arithmetic() {
        let bind = bind_s5();
        let a = bind.get('a').unwrap().clone();
        let b = bind.get('b').unwrap().clone();

        let w = WordExpr::parse("ab^2").unwrap();
        assert_eq!(w.eval(&bind).unwrap(), &a * &b.pow(2));

        let w = WordExpr::parse("a^b").unwrap();
        assert_eq!(
            w.eval(&bind).unwrap(),
            Permutation::parse_cycles(5, "(2,3)").unwrap(),
            "conjugation moves the support along the conjugator"
        );

        let w = WordExpr::parse("(ab)^3").unwrap();
        assert_eq!(w.eval(&bind).unwrap(), (&a * &b).pow(3));

        let w = WordExpr::parse("b^-1").unwrap();
        assert_eq!(w.eval(&bind).unwrap(), b.inverse());
    }

    #[test]
    fn exponent_chains_associate_left() {
        let bind = bind_s5();
        let chained = WordExpr::parse("a^b^2").unwrap();
        let explicit = WordExpr::parse("(a^b)^2").unwrap();
        assert_eq!(chained, explicit);
        assert_eq!(
            chained.eval(&bind).unwrap(),
            explicit.eval(&bind).unwrap()
        );
        // And not a^(b^2).
        let other = WordExpr::parse("a^(b^2)").unwrap();
        assert_ne!(chained.eval(&bind).unwrap(), other.eval(&bind).unwrap());
    }

    #[test]
    fn conjugation_by_word_exponent() {
        let bind = bind_s5();
        let a = bind.get('a').unwrap().clone();
        let b = bind.get('b').unwrap().clone();
        let w = WordExpr::parse("a^(bab)").unwrap();
        let conjugator = &(&b * &a) * &b;
        assert_eq!(w.eval(&bind).unwrap(), a.conjugate(&conjugator).unwrap());
    }

    #[test]
    fn unbound_names_are_reported() {
        let bind = bind_s5();
        let w = WordExpr::parse("ac").unwrap();
        assert!(matches!(w.eval(&bind), Err(Error::UnboundName('c'))));
    }

    #[test]
    fn parse_errors_carry_positions() {
        for (input, at) in [("", 0), ("a^", 2), ("(ab", 3), ("a)b", 1), ("a^^2", 2)] {
            match WordExpr::parse(input) {
                Err(Error::WordParse { at: got, .. }) => {
                    assert_eq!(got, at, "error position for {input:?}")
                }
                other => panic!("expected parse error for {input:?}, got {other:?}"),
            }
        }
        assert!(WordExpr::parse("A").is_err(), "names are lowercase");
        assert!(WordExpr::parse("2a").is_err(), "digits only follow '^'");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let bind = bind_s5();
        let spaced = WordExpr::parse(" a b ^ 2 ").unwrap();
        let tight = WordExpr::parse("ab^2").unwrap();
        assert_eq!(spaced.eval(&bind).unwrap(), tight.eval(&bind).unwrap());
    }

    #[test]
    fn display_parses_back_to_the_same_tree() {
        for src in [
            "ab",
            "a^2b",
            "(ab)^3",
            "a^(bab)",
            "a(ba)^-2",
            "a^b^2",
            "(ab^2ab)^6",
            "b(ab^2ab)^9",
        ] {
            let w = WordExpr::parse(src).unwrap();
            let printed = w.to_string();
            let again = WordExpr::parse(&printed).unwrap();
            assert_eq!(w, again, "{src:?} -> {printed:?}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_word() -> impl Strategy<Value = WordExpr> {
            let leaf = prop_oneof![Just(WordExpr::Gen('a')), Just(WordExpr::Gen('b'))];
            leaf.prop_recursive(4, 24, 4, |inner| {
                prop_oneof![
                    prop::collection::vec(inner.clone(), 2..4).prop_map(WordExpr::Product),
                    (inner.clone(), -6i64..7).prop_map(|(b, n)| WordExpr::Power(Box::new(b), n)),
                    (inner.clone(), inner).prop_map(|(x, y)| WordExpr::Conj(
                        Box::new(x),
                        Box::new(y)
                    )),
                ]
            })
        }

        proptest! {
            #[test]
            fn print_parse_round_trip(w in arb_word()) {
                let printed = w.to_string();
                let parsed = WordExpr::parse(&printed).unwrap();
                prop_assert_eq!(w, parsed);
            }

            #[test]
            fn eval_respects_group_identities(w in arb_word(), v in arb_word()) {
                let bind = bind_s5();
                let pw = w.eval(&bind).unwrap();
                let pv = v.eval(&bind).unwrap();
                // Product node evaluates to the product of evaluations.
                let prod = WordExpr::Product(vec![w.clone(), v.clone()]);
                prop_assert_eq!(prod.eval(&bind).unwrap(), &pw * &pv);
                // Conjugation is right action: x^(yz) = (x^y)^z.
                let lhs = WordExpr::Conj(
                    Box::new(w.clone()),
                    Box::new(WordExpr::Product(vec![v.clone(), WordExpr::Gen('a')])),
                );
                let a = bind.get('a').unwrap();
                prop_assert_eq!(
                    lhs.eval(&bind).unwrap(),
                    pw.conjugate(&pv).unwrap().conjugate(a).unwrap()
                );
                // Inverse power inverts.
                let inv = WordExpr::Power(Box::new(w.clone()), -1);
                prop_assert_eq!(inv.eval(&bind).unwrap(), pw.inverse());
            }
        }
    }
}
