//! The cotensor Hopf algebra on letters `E_i`, `F_i`, `ξ_i`, `V` over the
//! group algebra of the grading group, with its quasi-shuffle product.
//!
//! A basis element `a_1 K_1 ⊗ ⋯ ⊗ a_n K_n` is stored as the letter sequence
//! plus the group element of the last slot (the *tail*); every other slot
//! group is determined: `K_j = grading(a_{j+1} ⋯ a_n) · tail`.

mod algebra;

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::grouplike::GroupElement;
use crate::scalars::Field;

pub use algebra::Algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E(u8),
    F(u8),
    Xi(u8),
    V,
}

impl Letter {
    pub fn index(&self) -> Option<usize> {
        match *self {
            Letter::E(i) | Letter::F(i) | Letter::Xi(i) => Some(usize::from(i)),
            Letter::V => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::E(i) => write!(f, "E{}", i + 1),
            Letter::F(i) => write!(f, "F{}", i + 1),
            Letter::Xi(i) => write!(f, "ξ{}", i + 1),
            Letter::V => write!(f, "v"),
        }
    }
}

pub type Letters = SmallVec<[Letter; 8]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Letters,
    pub tail: GroupElement,
}

impl Word {
    pub fn new(letters: &[Letter], tail: GroupElement) -> Self {
        Word {
            letters: letters.iter().copied().collect(),
            tail,
        }
    }

    pub fn group(tail: GroupElement) -> Self {
        Word {
            letters: SmallVec::new(),
            tail,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, pred: impl Fn(&Letter) -> bool) -> bool {
        self.letters.iter().any(pred)
    }

    pub fn xi_count(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l, Letter::Xi(_))).count()
    }
}

/// A finite linear combination of words.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for Element<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, F)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Keep only the words satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(&Word) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| pred(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }
}

/// An element of an `n`-fold tensor power, as combinations of word tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<F> {
    terms: BTreeMap<Vec<Word>, F>,
}

impl<F: Field> Default for Tensor<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Tensor<F> {
    pub fn zero() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, k: Vec<Word>, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn from_element(x: &Element<F>) -> Self {
        let mut t = Self::zero();
        for (w, c) in x.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &F)> {
        self.terms.iter()
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

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }
}

impl<F: Field> Algebra<F> {
    pub fn display_word(&self, w: &Word) -> String {
        if w.letters.is_empty() {
            return self.group().display(&w.tail);
        }
        let slots = self.slot_groups(w);
        let parts: Vec<String> = w
            .letters
            .iter()
            .zip(&slots)
            .map(|(l, g)| {
                if g.is_identity() {
                    l.to_string()
                } else {
                    format!("{l}.{}", self.group().display(g))
                }
            })
            .collect();
        parts.join(" ⊗ ")
    }

    pub fn display(&self, x: &Element<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms()
            .map(|(w, c)| {
                let cs = c.to_string();
                let cs = if cs.contains([' ', '/']) { format!("({cs})") } else { cs };
                format!("{cs}·[{}]", self.display_word(w))
            })
            .collect();
        parts.join(" + ")
    }
}
