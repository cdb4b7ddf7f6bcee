use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactfield::Qi;

/// Ordered, index-addressable generator labels.
#[derive(Debug, Clone)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u8>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Arc<Self>> {
        if names.len() > u8::MAX as usize {
            return Err(Error::ParseWord(format!("alphabet of {} letters is too large", names.len())));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains('.') || index.insert(n.clone(), i as u8).is_some() {
                return Err(Error::ParseWord(format!("bad or duplicate label {n:?}")));
            }
        }
        Ok(Arc::new(Alphabet { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Option<u8> {
        self.index.get(name).copied()
    }

    /// Parses dot-separated labels; the empty string is the unit word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|l| self.letter(l).ok_or_else(|| Error::ParseWord(s.to_string())))
            .collect::<Result<SmallVec<_>>>()
            .map(Word)
    }

    pub fn format_word(&self, w: &Word) -> String {
        let parts: Vec<&str> = w.letters().iter().map(|&l| self.name(l)).collect();
        parts.join(".")
    }
}

/// Monomial of the free algebra; compared by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat3(a: &Word, b: &Word, c: &Word) -> Word {
        let mut v = SmallVec::with_capacity(a.len() + b.len() + c.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&b.0);
        v.extend_from_slice(&c.0);
        Word(v)
    }

    pub fn map_letters(&self, f: impl Fn(u8) -> u8) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Element of the free algebra ℚ(i)⟨alphabet⟩ with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Qi>,
}

impl NcPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NcPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: Qi) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, Qi::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: Qi) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, &c);
        p
    }

    pub fn letter(alphabet: &Arc<Alphabet>, l: u8) -> Self {
        Self::monomial(alphabet, Word::from_letters(&[l]), Qi::one())
    }

    /// Letter by label; panics on unknown labels (programming error in built-ins).
    pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> Self {
        let l = alphabet.letter(name).unwrap_or_else(|| panic!("unknown label {name}"));
        Self::letter(alphabet, l)
    }

    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: impl IntoIterator<Item = (Word, Qi)>) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            if w.letters().iter().any(|&l| l as usize >= alphabet.len()) {
                return Err(Error::AlphabetMismatch);
            }
            p.add_term(w, &c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, Qi> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Qi {
        self.terms.get(w).cloned().unwrap_or_else(Qi::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn add_term(&mut self, w: Word, c: &Qi) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_alphabet(&self, other: &NcPoly) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn checked_add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.same_alphabet(other)?;
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c);
        }
        Ok(p)
    }

    pub fn checked_sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.checked_add(&other.neg())
    }

    /// Free-algebra product: words concatenate.
    pub fn checked_mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.same_alphabet(other)?;
        let mut p = NcPoly::zero(&self.alphabet);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                p.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        Ok(p)
    }

    pub fn scale(&self, c: &Qi) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero(&self.alphabet);
        }
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly { alphabet: self.alphabet.clone(), terms: self.terms.iter().map(|(w, x)| (w.clone(), -x)).collect() }
    }

    /// Multiplies every word by fixed words on both sides.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, c)| (Word::concat3(left, w, right), c.clone())).collect(),
        }
    }

    /// Evaluates under the algebra map sending letter `l` to the scalar `values[l]`.
    pub fn eval(&self, values: &[Qi]) -> Qi {
        let mut acc = Qi::zero();
        for (w, c) in &self.terms {
            let mut t = c.clone();
            for &l in w.letters() {
                t = &t * &values[l as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Algebra map (`reverse = false`) or anti-algebra map (`reverse = true`)
    /// into `target`, determined by the images of the letters.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &[NcPoly], reverse: bool) -> NcPoly {
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let mut t = NcPoly::constant(target, c.clone());
            let letters: Vec<u8> = if reverse { w.letters().iter().rev().copied().collect() } else { w.0.to_vec() };
            for l in letters {
                t = &t * &images[l as usize];
                if t.is_zero() {
                    break;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Same terms, letters renamed into another alphabet.
    pub fn relabel(&self, target: &Arc<Alphabet>, f: impl Fn(u8) -> u8) -> NcPoly {
        NcPoly {
            alphabet: target.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.map_letters(&f), c.clone())).collect(),
        }
    }
}

/// Operators panic on alphabet mismatch; the `checked_*` methods report it instead.
impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.checked_add(rhs).expect("alphabet mismatch")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.checked_sub(rhs).expect("alphabet mismatch")
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.checked_mul(rhs).expect("alphabet mismatch")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match (w.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", self.alphabet.format_word(w))?,
                (false, false) => write!(f, "({c})*{}", self.alphabet.format_word(w))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<Alphabet> {
        Alphabet::new(vec!["x11".into(), "x12".into(), "g".into()]).unwrap()
    }

    #[test]
    fn free_products() {
        let a = abc();
        let x = NcPoly::var(&a, "x11");
        let y = NcPoly::var(&a, "x12");
        assert_ne!(&x * &y, &y * &x);
        let one = NcPoly::one(&a);
        assert_eq!(&one * &x, x);
        let s = &x + &y;
        assert_eq!((&s * &s).len(), 4);
    }

    #[test]
    fn word_order_and_syntax() {
        let a = abc();
        let w = a.parse_word("x11.g").unwrap();
        assert_eq!(a.format_word(&w), "x11.g");
        assert!(a.parse_word("").unwrap().is_empty());
        assert!(a.parse_word("y").is_err());
        assert!(Word::from_letters(&[2]) < Word::from_letters(&[0, 0]));
        assert!(Word::from_letters(&[0, 1]) < Word::from_letters(&[1, 0]));
    }

    #[test]
    fn mismatch_is_reported() {
        let b = Alphabet::new(vec!["u11".into()]).unwrap();
        let p = NcPoly::var(&abc(), "g");
        let q = NcPoly::var(&b, "u11");
        assert_eq!(p.checked_mul(&q), Err(Error::AlphabetMismatch));
    }
}
