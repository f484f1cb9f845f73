//! Sectors of the n-fold tensor power: label tuples over {0, 1/16, 1/2}
//! with componentwise fusion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::BitWord;
use crate::ising::{fuse, s_entry, IsingLabel, SixteenthWeight};
use crate::scalar::DyadicRootTwo;

/// `λ = (λ_1, …, λ_n)`. Ordered lexicographically, leftmost coordinate
/// slowest, with `0 < 1/16 < 1/2` in each coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector {
    labels: Vec<IsingLabel>,
}

impl Sector {
    pub fn new(labels: Vec<IsingLabel>) -> Self {
        Sector { labels }
    }

    pub fn identity(n: usize) -> Self {
        Sector::new(vec![IsingLabel::Vacuum; n])
    }

    /// `(1/16, …, 1/16)`.
    pub fn all_sigma(n: usize) -> Self {
        Sector::new(vec![IsingLabel::Sigma; n])
    }

    /// The sector with τ-word `beta` and a 1/2 at each set coordinate of
    /// `halves` (which must be disjoint from `beta`).
    pub fn from_parts(beta: &BitWord, halves: &BitWord) -> Self {
        debug_assert!((*beta & *halves).is_zero());
        Sector::new(
            (0..beta.len())
                .map(|i| {
                    if beta.get(i) {
                        IsingLabel::Sigma
                    } else if halves.get(i) {
                        IsingLabel::Epsilon
                    } else {
                        IsingLabel::Vacuum
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[IsingLabel] {
        &self.labels
    }

    fn mask(&self, which: IsingLabel) -> BitWord {
        BitWord::from_indices(
            self.len(),
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == which)
                .map(|(i, _)| i),
        )
        .expect("sector length bounded by word capacity")
    }

    /// τ-word: coordinates carrying 1/16.
    pub fn tau_word(&self) -> BitWord {
        self.mask(IsingLabel::Sigma)
    }

    /// Coordinates carrying 1/2.
    pub fn half_word(&self) -> BitWord {
        self.mask(IsingLabel::Epsilon)
    }

    /// `Σ λ_i`, in sixteenths.
    pub fn weight(&self) -> SixteenthWeight {
        self.labels.iter().map(|l| l.conformal_weight()).sum()
    }

    /// `2^{k/2}` for `k` coordinates equal to 1/16.
    pub fn dim(&self) -> DyadicRootTwo {
        DyadicRootTwo::sqrt2_pow(self.labels.iter().filter(|&&l| l == IsingLabel::Sigma).count())
    }

    fn ensure_same_len(&self, other: &Sector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }
}

/// Weight and spin of `λ`, packaged as a [`SixteenthWeight`].
pub fn weight_and_spin(lambda: &Sector) -> SixteenthWeight {
    lambda.weight()
}

pub fn tau_word(lambda: &Sector) -> BitWord {
    lambda.tau_word()
}

/// `λ(c) = (c_1/2, …, c_n/2)`.
pub fn code_sector(c: &BitWord) -> Sector {
    Sector::new(
        (0..c.len())
            .map(|i| if c.get(i) { IsingLabel::Epsilon } else { IsingLabel::Vacuum })
            .collect(),
    )
}

/// Simple-current action `λ ∘ λ(c)`: swaps 0 and 1/2 on `supp(c)`, fixes
/// 1/16 entries.
pub fn act(lambda: &Sector, c: &BitWord) -> Result<Sector> {
    c.ensure_len(lambda.len())?;
    Ok(Sector::new(
        lambda
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| match (l, c.get(i)) {
                (IsingLabel::Vacuum, true) => IsingLabel::Epsilon,
                (IsingLabel::Epsilon, true) => IsingLabel::Vacuum,
                (l, _) => l,
            })
            .collect(),
    ))
}

/// A formal sum of sectors with positive multiplicities, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SectorSum {
    terms: BTreeMap<Sector, u64>,
}

impl SectorSum {
    pub fn single(s: Sector) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, 1);
        SectorSum { terms }
    }

    pub fn add(&mut self, s: Sector, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(s).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, s: &Sector) -> u64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Sector, u64)> {
        self.terms.iter().map(|(s, &m)| (s, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Σ m · d(sector)`.
    pub fn total_dim(&self) -> DyadicRootTwo {
        self.terms
            .iter()
            .map(|(s, &m)| &s.dim() * &DyadicRootTwo::from_int(m))
            .sum()
    }
}

/// Componentwise fusion `λ × μ`.
pub fn fuse_sectors(lambda: &Sector, mu: &Sector) -> Result<SectorSum> {
    lambda.ensure_same_len(mu)?;
    let mut partial: Vec<Vec<IsingLabel>> = vec![Vec::with_capacity(lambda.len())];
    for (&x, &y) in lambda.labels.iter().zip(&mu.labels) {
        let options = fuse(x, y);
        if options.len() == 1 {
            for p in partial.iter_mut() {
                p.push(options[0]);
            }
        } else {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |&o| {
                        let mut q = p.clone();
                        q.push(o);
                        q
                    })
                })
                .collect();
        }
    }
    let mut sum = SectorSum::default();
    for labels in partial {
        sum.add(Sector::new(labels), 1);
    }
    Ok(sum)
}

/// `S_{λμ} = Π_i S_{λ_i μ_i}` for the tensor-power S-matrix.
pub fn tensor_s_entry(lambda: &Sector, mu: &Sector) -> Result<DyadicRootTwo> {
    lambda.ensure_same_len(mu)?;
    Ok(lambda
        .labels
        .iter()
        .zip(&mu.labels)
        .map(|(&x, &y)| s_entry(x, y))
        .product())
}

/// All `3^n` sectors in lexicographic order. Only sensible for small `n`.
pub fn all_sectors(n: usize) -> Vec<Sector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<IsingLabel>| {
                IsingLabel::ALL.into_iter().map(move |l| {
                    let mut q = p.clone();
                    q.push(l);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Sector::new).collect()
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sector({self})")
    }
}

impl FromStr for Sector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .trim()
            .chars()
            .map(IsingLabel::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        if labels.len() > crate::gf2::MAX_LENGTH {
            return Err(Error::TooLong(labels.len()));
        }
        Ok(Sector::new(labels))
    }
}

impl Serialize for Sector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Sector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sec(s: &str) -> Sector {
        s.parse().unwrap()
    }

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn tau_words() {
        assert_eq!(sec("ss").tau_word(), w("11"));
        assert_eq!(sec("0e0e").tau_word(), w("0000"));
        assert_eq!(Sector::all_sigma(16).tau_word(), BitWord::ones(16).unwrap());
    }

    #[test]
    fn weights_and_spins() {
        assert_eq!(sec("ss").weight(), SixteenthWeight(2));
        assert_eq!(Sector::identity(5).weight().spin_sign(), Some(1));
        let c = w("1111111100000000");
        let l = code_sector(&c);
        assert_eq!(l.weight(), SixteenthWeight(64));
        assert_eq!(l.weight().spin_sign(), Some(1));
        assert_eq!(l.dim(), DyadicRootTwo::one());
        assert_eq!(code_sector(&w("100")).weight().spin_sign(), Some(-1));
    }

    #[test]
    fn code_sector_and_act() {
        assert_eq!(code_sector(&w("11")), sec("ee"));
        assert_eq!(code_sector(&w("000")), Sector::identity(3));
        assert_eq!(act(&sec("ss"), &w("11")).unwrap(), sec("ss"));
        assert_eq!(act(&sec("00"), &w("11")).unwrap(), sec("ee"));
        assert_eq!(act(&sec("se0"), &w("111")).unwrap(), sec("s0e"));
    }

    #[test]
    fn fusion_examples() {
        let prod = fuse_sectors(&sec("ss"), &sec("ss")).unwrap();
        let expect: Vec<Sector> = ["00", "0e", "e0", "ee"].iter().map(|s| sec(s)).collect();
        assert_eq!(prod.iter().map(|(s, _)| s.clone()).collect::<Vec<_>>(), expect);
        assert!(prod.iter().all(|(_, m)| m == 1));
        let c = w("1010");
        let d = w("0110");
        assert_eq!(
            fuse_sectors(&code_sector(&c), &code_sector(&d)).unwrap(),
            SectorSum::single(code_sector(&(c ^ d)))
        );
        assert_eq!(
            fuse_sectors(&sec("se0"), &Sector::identity(3)).unwrap(),
            SectorSum::single(sec("se0"))
        );
        assert!(fuse_sectors(&sec("s"), &sec("ss")).is_err());
    }

    #[test]
    fn tensor_entries_at_two_coordinates() {
        assert_eq!(
            tensor_s_entry(&Sector::identity(2), &sec("ss")).unwrap(),
            DyadicRootTwo::new(1, 0, 1)
        );
        assert_eq!(
            tensor_s_entry(&Sector::identity(2), &Sector::identity(2)).unwrap(),
            DyadicRootTwo::new(1, 0, 2)
        );
        // odd overlap between a code sector and a tau-word gives a negative entry
        let neg = tensor_s_entry(&code_sector(&w("10")), &sec("s0")).unwrap();
        assert_eq!(neg.signum(), std::cmp::Ordering::Less);
    }

    #[test]
    fn global_index_is_four_to_the_n() {
        for n in 0..=6 {
            let mu: DyadicRootTwo = all_sectors(n).iter().map(|s| &s.dim() * &s.dim()).sum();
            assert_eq!(mu, DyadicRootTwo::from_int(4u64.pow(n as u32)));
        }
    }

    #[test]
    fn literal_round_trip() {
        assert_eq!(sec("0se").to_string(), "0se");
        assert!("0x".parse::<Sector>().is_err());
    }
}
