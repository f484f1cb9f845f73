//! Fixed-capacity binary words.
//!
//! Coordinate `i` (0-based internally, `i + 1` in every rendered form) is
//! stored most-significant-bit first, so comparing the limb arrays compares
//! words lexicographically with coordinate 1 slowest and `0 < 1`.

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_LENGTH: usize = 1024;
const LIMBS: usize = MAX_LENGTH / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: u16,
    limbs: [u64; LIMBS],
}

#[inline]
fn locate(i: usize) -> (usize, u64) {
    (i / 64, 1u64 << (63 - (i % 64)))
}

impl BitWord {
    /// The all-zero word `(0)_len`.
    pub fn zeros(len: usize) -> Result<Self> {
        if len > MAX_LENGTH {
            return Err(Error::TooLong(len));
        }
        Ok(BitWord {
            len: len as u16,
            limbs: [0; LIMBS],
        })
    }

    /// The all-one word `(1)_len`.
    pub fn ones(len: usize) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        let full = len / 64;
        for limb in &mut w.limbs[..full] {
            *limb = u64::MAX;
        }
        let rest = len % 64;
        if rest > 0 {
            w.limbs[full] = !0u64 << (64 - rest);
        }
        Ok(w)
    }

    /// Word of length `len` with ones at the given 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        for i in indices {
            if i >= len {
                return Err(Error::Input(format!(
                    "index {} out of range for length {len}",
                    i + 1
                )));
            }
            w.set(i, true);
        }
        Ok(w)
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    fn used(&self) -> usize {
        self.len().div_ceil(64)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        let (l, m) = locate(i);
        self.limbs[l] & m != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len());
        let (l, m) = locate(i);
        if value {
            self.limbs[l] |= m;
        } else {
            self.limbs[l] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        let (l, m) = locate(i);
        self.limbs[l] ^= m;
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.limbs[..self.used()]
            .iter()
            .map(|l| l.count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs[..self.used()].iter().all(|&l| l == 0)
    }

    /// 0-based indices of the set coordinates, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs[..self.used()]
            .iter()
            .enumerate()
            .flat_map(|(k, &limb)| {
                let mut rest = limb;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        return None;
                    }
                    let z = rest.leading_zeros() as usize;
                    rest &= !(1u64 << (63 - z));
                    Some(k * 64 + z)
                })
            })
    }

    /// `supp(w)` in the 1-based coordinate convention used in reports.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().map(|i| i + 1).collect()
    }

    /// 0-based index of the first set coordinate.
    pub fn leading_one(&self) -> Option<usize> {
        self.limbs[..self.used()]
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(k, l)| k * 64 + l.leading_zeros() as usize)
    }

    /// Binary inner product `Σ x_i y_i mod 2`.
    pub fn dot(&self, other: &BitWord) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self.limbs[..self.used()]
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Size of `supp(self) ∩ supp(other)`.
    pub fn overlap(&self, other: &BitWord) -> usize {
        (*self & *other).weight()
    }

    /// `supp(self) ⊆ supp(other)`.
    pub fn is_subset_of(&self, other: &BitWord) -> bool {
        self.limbs
            .iter()
            .zip(&other.limbs)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> BitWord {
        let mask = BitWord::ones(self.len()).expect("length already validated");
        BitWord {
            len: self.len,
            limbs: std::array::from_fn(|k| !self.limbs[k] & mask.limbs[k]),
        }
    }

    /// Direct sum `self ⊕ other` (concatenation).
    pub fn concat(&self, other: &BitWord) -> Result<BitWord> {
        let mut w = BitWord::zeros(self.len() + other.len())?;
        for i in self.iter_ones() {
            w.set(i, true);
        }
        for i in other.iter_ones() {
            w.set(self.len() + i, true);
        }
        Ok(w)
    }

    /// The word formed by the coordinates at `positions` (0-based, in the
    /// given order).
    pub fn select(&self, positions: &[usize]) -> BitWord {
        let mut w = BitWord::zeros(positions.len()).expect("selection is no longer than source");
        for (j, &p) in positions.iter().enumerate() {
            if self.get(p) {
                w.set(j, true);
            }
        }
        w
    }

    /// Inverse of [`select`](Self::select): spread `self` over `positions`
    /// inside a zero word of length `len`.
    pub fn scatter(&self, len: usize, positions: &[usize]) -> Result<BitWord> {
        if positions.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: positions.len(),
                found: self.len(),
            });
        }
        BitWord::from_indices(len, self.iter_ones().map(|j| positions[j]))
    }

    pub fn ensure_len(&self, len: usize) -> Result<()> {
        if self.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl BitXor for BitWord {
    type Output = BitWord;
    fn bitxor(mut self, rhs: BitWord) -> BitWord {
        self ^= rhs;
        self
    }
}

impl BitXorAssign for BitWord {
    fn bitxor_assign(&mut self, rhs: BitWord) {
        debug_assert_eq!(self.len, rhs.len);
        let n = self.used();
        for (a, b) in self.limbs[..n].iter_mut().zip(&rhs.limbs[..n]) {
            *a ^= b;
        }
    }
}

impl BitAnd for BitWord {
    type Output = BitWord;
    fn bitand(self, rhs: BitWord) -> BitWord {
        BitWord {
            len: self.len,
            limbs: std::array::from_fn(|k| self.limbs[k] & rhs.limbs[k]),
        }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut w = BitWord::zeros(s.len())?;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} at coordinate {} of bitstring",
                        i + 1
                    )))
                }
            }
        }
        Ok(w)
    }
}

impl Serialize for BitWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
