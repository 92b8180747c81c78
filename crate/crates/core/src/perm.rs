//! Permutations of `{1, ..., n}` and symmetric generating sets.
//!
//! Points are 1-based everywhere. The composition convention is fixed once
//! for the whole crate: `(p * q)(i) = p(q(i))`, i.e. `q` acts first.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::DEFAULT_ENUM_CAP;

/// A permutation of `{1, ..., n}`, stored as its image sequence:
/// `images[i - 1]` is the value assigned to point `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                images,
                reason: "degree must be at least 1".into(),
            });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation {
                    images: images.clone(),
                    reason: format!("value {v} out of range 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation {
                    images: images.clone(),
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    /// The identity permutation of degree `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The initial reversal `r_k`: maps `1, ..., n` to `k, k-1, ..., 1, k+1, ..., n`.
    pub fn initial_reversal(k: usize, n: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::PointOutOfRange {
                point: k,
                degree: n,
            });
        }
        let images = (1..=k).rev().chain(k + 1..=n).collect();
        Ok(Self { images })
    }

    /// The transposition `(i j)` of degree `n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::PointOutOfRange {
                point: i,
                degree: n,
            });
        }
        if j < 1 || j > n || i == j {
            return Err(Error::PointOutOfRange {
                point: j,
                degree: n,
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Applies the permutation to a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition `(p * q)(i) = p(q(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// The largest point moved by the permutation, or `None` for the identity.
    pub fn largest_moved_point(&self) -> Option<usize> {
        (1..=self.degree()).rev().find(|&i| self.apply(i) != i)
    }

    /// Extends to degree `n`, fixing the new points `m+1, ..., n`.
    pub fn embed(&self, n: usize) -> Result<Permutation> {
        let m = self.degree();
        if m > n {
            return Err(Error::DegreeMismatch(m, n));
        }
        let images = self.images.iter().copied().chain(m + 1..=n).collect();
        Ok(Permutation { images })
    }

    /// Restricts to degree `m`; errors unless all of `m+1, ..., n` are fixed.
    pub fn restrict(&self, m: usize) -> Result<Permutation> {
        if m < 1 || m > self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), m));
        }
        if self.largest_moved_point().unwrap_or(1) > m {
            return Err(Error::InvalidPermutation {
                images: self.images.clone(),
                reason: format!("moves a point above {m}"),
            });
        }
        Ok(Permutation {
            images: self.images[..m].to_vec(),
        })
    }

    /// Writes the permutation as a product of adjacent transpositions
    /// `s_i = (i, i+1)`, returned as the 1-based indices `[j_1, ..., j_m]`
    /// with `p = s_{j_1} * s_{j_2} * ... * s_{j_m}` under the crate's
    /// composition convention. Bubble sort on the image sequence, so the
    /// word length is at most `n(n-1)/2`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut work = self.images.clone();
        let n = work.len();
        // Right-multiplying by s_j swaps entries j-1 and j of the image
        // sequence; sorting records the inverse word.
        let mut swaps = Vec::new();
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for i in 0..n.saturating_sub(1) {
                if work[i] > work[i + 1] {
                    work.swap(i, i + 1);
                    swaps.push(i + 1);
                    sorted = false;
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Lexicographic rank of the permutation among all of `S_n` (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0usize;
        let mut factorial = (1..n).product::<usize>();
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank += smaller * factorial;
            if n - i > 1 {
                factorial /= n - i - 1;
            }
        }
        rank
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(images).map_err(D::Error::custom)
    }
}

/// All `n!` permutations of degree `n` in lexicographic order of their
/// image sequences, subject to the default enumeration cap.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>> {
    enumerate_group_with_cap(n, DEFAULT_ENUM_CAP)
}

/// Same as [`enumerate_group`] with an explicit cap override.
pub fn enumerate_group_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "group enumeration",
            n,
            cap,
        });
    }
    Ok((1..=n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect())
}

/// A symmetric generating set: a finite set of permutations of common degree,
/// closed under inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    n: usize,
    elements: BTreeSet<Permutation>,
}

impl GeneratingSet {
    pub fn new(n: usize, elements: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let elements: BTreeSet<Permutation> = elements.into_iter().collect();
        for z in &elements {
            if z.degree() != n {
                return Err(Error::DegreeMismatch(z.degree(), n));
            }
            if !elements.contains(&z.inverse()) {
                return Err(Error::NotInversionClosed(z.to_string()));
            }
        }
        Ok(Self { n, elements })
    }

    /// The initial reversals `Z_n = {r_1, ..., r_n}`, including `r_1 = id`.
    pub fn reversals(n: usize) -> Result<Self> {
        let elements: Result<Vec<_>> = (1..=n)
            .map(|k| Permutation::initial_reversal(k, n))
            .collect();
        Self::new(n, elements?)
    }

    /// The adjacent transpositions `(i, i+1)` for `i = 1, ..., n-1`.
    pub fn adjacent_transpositions(n: usize) -> Result<Self> {
        let elements: Result<Vec<_>> = (1..n)
            .map(|i| Permutation::transposition(i, i + 1, n))
            .collect();
        Self::new(n, elements?)
    }

    /// All transpositions `(i, j)`, `1 <= i < j <= n`.
    pub fn all_transpositions(n: usize) -> Result<Self> {
        let mut elements = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                elements.push(Permutation::transposition(i, j, n)?);
            }
        }
        Self::new(n, elements)
    }

    /// The star transpositions `(1, i)` for `i = 2, ..., n`.
    pub fn star_transpositions(n: usize) -> Result<Self> {
        let elements: Result<Vec<_>> = (2..=n)
            .map(|i| Permutation::transposition(1, i, n))
            .collect();
        Self::new(n, elements?)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }
}

/// Whether the given permutations generate all of `S_n`, decided by closure
/// under composition. Cost is proportional to the closure size, so the same
/// cap as group enumeration applies.
pub fn generates_symmetric_group<'a>(
    support: impl IntoIterator<Item = &'a Permutation>,
    n: usize,
    cap: usize,
) -> Result<bool> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "generation check",
            n,
            cap,
        });
    }
    let gens: Vec<Permutation> = support.into_iter().cloned().collect();
    for g in &gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(g.degree(), n));
        }
    }
    let order: usize = (1..=n).product();
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for g in &gens {
            let next = g.compose(&h)?;
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(seen.len() == order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let p = perm(&[2, 3, 1]);
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn reversals_are_involutions() {
        let r2 = Permutation::initial_reversal(2, 3).unwrap();
        assert!(r2.compose(&r2).unwrap().is_identity());
        for n in 1..=12 {
            for k in 1..=n {
                let r = Permutation::initial_reversal(k, n).unwrap();
                assert!(r.compose(&r).unwrap().is_identity(), "r_{k} on n={n}");
            }
        }
    }

    #[test]
    fn compose_convention_q_acts_first() {
        // (p * q)(i) = p(q(i)), checked by hand.
        let p = perm(&[2, 1, 3]);
        let q = perm(&[1, 3, 2]);
        assert_eq!(p.compose(&q).unwrap(), perm(&[2, 3, 1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        let r3 = Permutation::initial_reversal(3, 5).unwrap();
        assert_eq!(r3.inverse(), r3);
        let p = perm(&[2, 3, 1]);
        assert_eq!(p.inverse(), perm(&[3, 1, 2]));
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn initial_reversal_images() {
        assert_eq!(
            Permutation::initial_reversal(3, 5).unwrap(),
            perm(&[3, 2, 1, 4, 5])
        );
        assert_eq!(
            Permutation::initial_reversal(1, 6).unwrap(),
            Permutation::identity(6)
        );
        assert_eq!(
            Permutation::initial_reversal(4, 4).unwrap(),
            perm(&[4, 3, 2, 1])
        );
        assert!(Permutation::initial_reversal(5, 4).is_err());
        assert!(Permutation::initial_reversal(0, 4).is_err());
    }

    #[test]
    fn invalid_images_rejected() {
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![1, 3]).is_err());
    }

    #[test]
    fn enumerate_small_groups() {
        assert_eq!(enumerate_group(1).unwrap(), vec![Permutation::identity(1)]);
        assert_eq!(enumerate_group(3).unwrap().len(), 6);

        for n in 1..=7usize {
            let all = enumerate_group(n).unwrap();
            assert_eq!(all.len(), (1..=n).product::<usize>());
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len(), "n={n}");
            // Lexicographic order of image sequences.
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn enumerate_cap_enforced() {
        assert!(matches!(enumerate_group(9), Err(Error::CapExceeded { .. })));
        assert!(enumerate_group_with_cap(9, 9).is_ok());
    }

    #[test]
    fn lex_rank_matches_enumeration_order() {
        for n in 1..=5 {
            for (i, p) in enumerate_group(n).unwrap().iter().enumerate() {
                assert_eq!(p.lex_rank(), i);
            }
        }
    }

    #[test]
    fn factorization_rebuilds_permutation() {
        for n in 2..=6 {
            for p in enumerate_group(n.min(4)).unwrap() {
                let mut rebuilt = Permutation::identity(p.degree());
                for j in p.adjacent_factorization() {
                    let s = Permutation::transposition(j, j + 1, p.degree()).unwrap();
                    rebuilt = rebuilt.compose(&s).unwrap();
                }
                assert_eq!(rebuilt, p);
            }
        }
    }

    #[test]
    fn embed_and_restrict() {
        let r3 = Permutation::initial_reversal(3, 3).unwrap();
        assert_eq!(r3.embed(5).unwrap(), perm(&[3, 2, 1, 4, 5]));
        assert_eq!(r3.embed(3).unwrap(), r3);
        assert!(r3.embed(2).is_err());
        assert_eq!(r3.embed(5).unwrap().restrict(3).unwrap(), r3);
        assert!(perm(&[1, 3, 2]).restrict(2).is_err());
    }

    #[test]
    fn largest_moved_point_examples() {
        assert_eq!(Permutation::identity(4).largest_moved_point(), None);
        assert_eq!(perm(&[2, 1, 3, 4]).largest_moved_point(), Some(2));
        assert_eq!(
            Permutation::initial_reversal(4, 6)
                .unwrap()
                .largest_moved_point(),
            Some(4)
        );
    }

    #[test]
    fn generating_set_requires_inverse_closure() {
        let three_cycle = perm(&[2, 3, 1]);
        assert!(GeneratingSet::new(3, [three_cycle.clone()]).is_err());
        assert!(GeneratingSet::new(3, [three_cycle.clone(), three_cycle.inverse()]).is_ok());
    }

    #[test]
    fn named_families() {
        let z5 = GeneratingSet::reversals(5).unwrap();
        assert_eq!(z5.len(), 5);
        assert!(z5.contains(&Permutation::identity(5)));

        assert_eq!(GeneratingSet::adjacent_transpositions(5).unwrap().len(), 4);
        assert_eq!(GeneratingSet::all_transpositions(5).unwrap().len(), 10);
        assert_eq!(GeneratingSet::star_transpositions(5).unwrap().len(), 4);
    }

    #[test]
    fn generation_check() {
        let z4 = GeneratingSet::reversals(4).unwrap();
        assert!(generates_symmetric_group(z4.iter(), 4, 8).unwrap());
        // A single transposition does not generate S_3.
        let t = Permutation::transposition(1, 2, 3).unwrap();
        assert!(!generates_symmetric_group([&t], 3, 8).unwrap());
        // 3-cycles alone generate only the alternating subgroup.
        let c = perm(&[2, 3, 1]);
        assert!(!generates_symmetric_group([&c, &c.inverse()], 3, 8).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let p = perm(&[3, 1, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[3,1,2]");
        let q: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    proptest! {
        #[test]
        fn compose_with_inverse_is_identity(seed in 0u64..500, n in 1usize..9) {
            let p = random_perm(n, seed);
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn factorization_length_bounded(seed in 0u64..500, n in 1usize..9) {
            let p = random_perm(n, seed);
            prop_assert!(p.adjacent_factorization().len() <= n * (n - 1) / 2);
        }
    }

    fn random_perm(n: usize, seed: u64) -> Permutation {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(&mut rng);
        Permutation::from_images(images).unwrap()
    }
}
