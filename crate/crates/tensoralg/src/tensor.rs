//! Words and sparse tensors in the tensor algebra.

use std::collections::BTreeMap;
use std::fmt;

use exactnum::Scalar;
use smallvec::SmallVec;

/// A tensor word `w_{a_1} ⊗ … ⊗ w_{a_n}` as a list of generator indices.
/// The empty word is the unit (weight 0).
pub type Word = SmallVec<[u8; 8]>;

/// Build a word from generator indices.
pub fn word(letters: &[usize]) -> Word {
    letters.iter().map(|&a| u8::try_from(a).expect("generator index below 256")).collect()
}

/// A finite linear combination of words, possibly of mixed weights.
/// Terms are kept in word order (shorter words first, then lexicographic)
/// with no zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Tensor<F: Scalar> {
    terms: BTreeMap<WordKey, F>,
}

/// Ordering wrapper: by weight, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WordKey(pub Word);

impl Ord for WordKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for WordKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Scalar> fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{}·{:?}", c, w.0.as_slice())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Scalar> Tensor<F> {
    pub fn zero() -> Self {
        Tensor { terms: BTreeMap::new() }
    }

    /// A single word with coefficient one.
    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut t = Self::zero();
        t.add_term(w, c);
        t
    }

    /// The unit (empty word) times `c`.
    pub fn scalar(c: F) -> Self {
        Self::term(Word::new(), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut t = Self::zero();
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        let key = WordKey(w);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
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
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    pub fn coefficient(&self, w: &[u8]) -> F {
        self.terms.get(&WordKey(Word::from_slice(w))).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (w, x) in other.terms() {
            self.add_term(w.clone(), x.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t.add_assign_scaled(other, &F::one());
        t
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t.add_assign_scaled(other, &(-F::one()));
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut t = Self::zero();
        t.add_assign_scaled(self, c);
        t
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-F::one()))
    }

    /// Weights of the words that occur.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(|k| k.0.len()).collect();
        w.dedup();
        w
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|k| k.0.len())
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.0.len())
    }

    /// The weight-`n` part.
    pub fn weight_part(&self, n: usize) -> Self {
        Tensor { terms: self.terms.iter().filter(|(k, _)| k.0.len() == n).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// Drop all words of weight above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Tensor { terms: self.terms.iter().filter(|(k, _)| k.0.len() <= n).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// Keep only words of weight at least `n`.
    pub fn at_least(&self, n: usize) -> Self {
        Tensor { terms: self.terms.iter().filter(|(k, _)| k.0.len() >= n).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// Concatenation product, dropping words longer than `max_weight`.
    pub fn multiply(&self, other: &Self, max_weight: usize) -> Self {
        let mut t = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if a.len() + b.len() <= max_weight {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    t.add_term(w, x.clone() * y.clone());
                }
            }
        }
        t
    }
}
