//! Nonnegative group-algebra elements: finite weighted sums of permutations.
//!
//! Only real nonnegative weights are supported. Symmetry
//! (`weight(g) = weight(g^-1)` for all `g`) is not forced at construction --
//! [`GroupAlgebraElement::is_symmetric`] reports it, and every spectral
//! operation that requires it checks it.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{GeneratingSet, Permutation};

/// An element `w = sum_g w_g g` of the group algebra of `S_n` with
/// `w_g >= 0`; permutations absent from the map carry weight zero.
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraElement {
    n: usize,
    weights: BTreeMap<Permutation, f64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    perm: Permutation,
    weight: f64,
}

#[derive(Serialize, Deserialize)]
struct WireFormat {
    n: usize,
    terms: Vec<Term>,
}

impl GroupAlgebraElement {
    /// The zero element of degree `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            weights: BTreeMap::new(),
        }
    }

    /// Collects `(permutation, weight)` terms, accumulating repeated
    /// permutations. Negative weights are rejected; zero weights dropped.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, f64)>,
    ) -> Result<Self> {
        let mut w = Self::zero(n);
        for (perm, weight) in terms {
            w.add_weight(perm, weight)?;
        }
        Ok(w)
    }

    /// Adds `weight` to the coefficient of `perm`.
    pub fn add_weight(&mut self, perm: Permutation, weight: f64) -> Result<()> {
        if perm.degree() != self.n {
            return Err(Error::DegreeMismatch(perm.degree(), self.n));
        }
        if weight < 0.0 || !weight.is_finite() {
            return Err(Error::NegativeWeight(weight));
        }
        if weight > 0.0 {
            *self.weights.entry(perm).or_insert(0.0) += weight;
        }
        Ok(())
    }

    /// `Z-hat = sum_{z in Z} z`: unit weight on every generator.
    pub fn indicator(z: &GeneratingSet) -> Self {
        Self {
            n: z.degree(),
            weights: z.iter().map(|p| (p.clone(), 1.0)).collect(),
        }
    }

    /// The initial-reversal element `w_n = r_1 + r_2 + ... + r_n`
    /// (including the identity `r_1`), with l1 norm `n`.
    pub fn reversal_element(n: usize) -> Result<Self> {
        Ok(Self::indicator(&GeneratingSet::reversals(n)?))
    }

    /// Uniform random symmetric element: `pairs` random permutations, each
    /// inserted together with its inverse at a weight drawn from `(0, 1]`.
    pub fn random_symmetric(n: usize, pairs: usize, rng: &mut impl Rng) -> Self {
        use rand::seq::SliceRandom;
        let mut w = Self::zero(n);
        for _ in 0..pairs {
            let mut images: Vec<usize> = (1..=n).collect();
            images.shuffle(rng);
            let p = Permutation::from_images(images).expect("shuffled images are a bijection");
            let weight: f64 = rng.random_range(0.01..=1.0);
            let q = p.inverse();
            w.add_weight(p, weight).expect("nonnegative");
            w.add_weight(q, weight).expect("nonnegative");
        }
        w
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// The weight of `perm` (zero when absent).
    pub fn weight(&self, perm: &Permutation) -> f64 {
        self.weights.get(perm).copied().unwrap_or(0.0)
    }

    /// Support permutations in deterministic (lexicographic) order.
    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.weights.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, f64)> {
        self.weights.iter().map(|(p, &w)| (p, w))
    }

    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// The l1 norm `|w| = sum_g w_g` (weights are nonnegative).
    pub fn l1_norm(&self) -> f64 {
        self.weights.values().sum()
    }

    /// Whether `weight(g) = weight(g^-1)` for every `g` (exact comparison;
    /// all constructors here copy weights without arithmetic).
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(p, w)| self.weight(&p.inverse()) == w)
    }

    /// Errors unless the element is symmetric.
    pub fn require_symmetric(&self) -> Result<()> {
        match self.terms().find(|(p, w)| self.weight(&p.inverse()) != *w) {
            None => Ok(()),
            Some((p, _)) => Err(Error::NotSymmetric(p.to_string())),
        }
    }

    /// Embeds into the algebra of `S_n`, each support permutation extended to
    /// fix the new points. Weights and the l1 norm are preserved.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if self.n > n {
            return Err(Error::DegreeMismatch(self.n, n));
        }
        let mut weights = BTreeMap::new();
        for (p, w) in self.terms() {
            weights.insert(p.embed(n)?, w);
        }
        Ok(Self { n, weights })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement(n={}, ", self.n)?;
        let mut first = true;
        for (p, w) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{w}*{p}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let wire = WireFormat {
            n: self.n,
            terms: self
                .terms()
                .map(|(p, w)| Term {
                    perm: p.clone(),
                    weight: w,
                })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupAlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = WireFormat::deserialize(deserializer)?;
        GroupAlgebraElement::from_terms(wire.n, wire.terms.into_iter().map(|t| (t.perm, t.weight)))
            .map_err(D::Error::custom)
    }
}
