//! Linear binary codes in canonical reduced row-echelon form.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{BitWord, MAX_LENGTH};
use crate::error::{Error, Result};

/// Largest rank for which codewords are enumerated directly.
pub const ENUMERATION_CAP: usize = 26;

/// Below this rank enumeration runs on a single thread.
const PARALLEL_RANK: usize = 14;

/// A binary linear code, held as its RREF generator matrix. Rows are sorted
/// by pivot column; each pivot column is zero in every other row, so two
/// codes are equal iff their bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<BitWord>,
    pivots: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Divisibility {
    None,
    Even,
    DoublyEven,
    TriplyEven,
}

impl Divisibility {
    pub fn divisor(self) -> usize {
        match self {
            Divisibility::None => 1,
            Divisibility::Even => 2,
            Divisibility::DoublyEven => 4,
            Divisibility::TriplyEven => 8,
        }
    }

    fn from_weight_gcd(gcd: usize) -> Self {
        // gcd 0 means every word has weight 0
        if gcd.is_multiple_of(8) {
            Divisibility::TriplyEven
        } else if gcd.is_multiple_of(4) {
            Divisibility::DoublyEven
        } else if gcd.is_multiple_of(2) {
            Divisibility::Even
        } else {
            Divisibility::None
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Divisibility::None => "none",
            Divisibility::Even => "even",
            Divisibility::DoublyEven => "doubly-even",
            Divisibility::TriplyEven => "triply-even",
        }
    }
}

/// Coefficients `A_0..A_n` of a weight enumerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    pub coefficients: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator {
            coefficients: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// Sparse form: `(weight, count)` for every nonzero coefficient.
    pub fn nonzero(&self) -> Vec<(usize, BigUint)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .nonzero()
            .into_iter()
            .map(|(w, c)| match w {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{w}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Reduce `v` against fully reduced rows (pivot columns cleared).
fn reduce_against(v: &mut BitWord, rows: &[BitWord], pivots: &[usize]) {
    for (r, &p) in rows.iter().zip(pivots) {
        if v.get(p) {
            *v ^= *r;
        }
    }
}

/// `make_code`: canonical RREF form of the span of `generators`.
pub fn make_code<'a, I>(length: usize, generators: I) -> Result<BinaryCode>
where
    I: IntoIterator<Item = &'a BitWord>,
{
    if length > MAX_LENGTH {
        return Err(Error::TooLong(length));
    }
    let mut rows: Vec<BitWord> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for g in generators {
        g.ensure_len(length)?;
        let mut v = *g;
        reduce_against(&mut v, &rows, &pivots);
        if let Some(p) = v.leading_one() {
            for r in rows.iter_mut() {
                if r.get(p) {
                    *r ^= v;
                }
            }
            rows.push(v);
            pivots.push(p);
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    Ok(BinaryCode {
        length,
        basis: order.iter().map(|&i| rows[i]).collect(),
        pivots: order.iter().map(|&i| pivots[i]).collect(),
    })
}

impl BinaryCode {
    pub fn new(length: usize, generators: &[BitWord]) -> Result<Self> {
        make_code(length, generators)
    }

    /// Parse the code literal format: equal-length bitstrings.
    pub fn from_strings<S: AsRef<str>>(length: usize, generators: &[S]) -> Result<Self> {
        let words = generators
            .iter()
            .map(|s| s.as_ref().parse::<BitWord>())
            .collect::<Result<Vec<_>>>()?;
        make_code(length, &words)
    }

    pub fn zero(length: usize) -> Result<Self> {
        make_code(length, &[])
    }

    /// The whole space `Z_2^length`.
    pub fn full(length: usize) -> Result<Self> {
        let units = (0..length)
            .map(|i| BitWord::from_indices(length, [i]))
            .collect::<Result<Vec<_>>>()?;
        make_code(length, &units)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitWord] {
        &self.basis
    }

    /// 0-based pivot columns, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `|C| = 2^rank`.
    pub fn cardinality(&self) -> BigUint {
        BigUint::one() << self.rank()
    }

    /// The lexicographically least member of the coset `w + C`.
    pub fn reduce(&self, w: &BitWord) -> BitWord {
        let mut v = *w;
        reduce_against(&mut v, &self.basis, &self.pivots);
        v
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        w.len() == self.length && self.reduce(w).is_zero()
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.length == other.length && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn contains_all_one(&self) -> bool {
        BitWord::ones(self.length)
            .map(|w| self.contains(&w))
            .unwrap_or(false)
    }

    /// `C⊥`, read off the RREF: each free column `f` contributes the word
    /// with a one at `f` and at every pivot whose row has a one at `f`.
    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.length];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let gens: Vec<BitWord> = (0..self.length)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut w = BitWord::zeros(self.length).expect("length validated");
                w.set(f, true);
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    if row.get(f) {
                        w.set(p, true);
                    }
                }
                w
            })
            .collect();
        make_code(self.length, &gens).expect("dual generators have the code length")
    }

    fn check_cap(&self) -> Result<()> {
        if self.rank() > ENUMERATION_CAP {
            return Err(Error::Capacity {
                rank: self.rank(),
                cap: ENUMERATION_CAP,
            });
        }
        Ok(())
    }

    /// Gray-code walk over `offset + span(rows)`.
    fn walk<F: FnMut(&BitWord)>(offset: BitWord, rows: &[BitWord], mut f: F) {
        let mut w = offset;
        f(&w);
        for i in 1u64..(1u64 << rows.len()) {
            w ^= rows[i.trailing_zeros() as usize];
            f(&w);
        }
    }

    /// Fold over all codewords, splitting the top basis rows across threads
    /// for larger ranks.
    fn fold_codewords<T, Init, Step, Merge>(&self, init: Init, step: Step, merge: Merge) -> Result<T>
    where
        T: Send,
        Init: Fn() -> T + Sync,
        Step: Fn(&mut T, &BitWord) + Sync,
        Merge: Fn(T, T) -> T + Sync + Send,
    {
        self.check_cap()?;
        let zero = BitWord::zeros(self.length)?;
        let k = self.rank();
        if k < PARALLEL_RANK {
            let mut acc = init();
            Self::walk(zero, &self.basis, |w| step(&mut acc, w));
            return Ok(acc);
        }
        let split = 8.min(k);
        let (inner, outer) = self.basis.split_at(k - split);
        let result = (0u64..(1u64 << split))
            .into_par_iter()
            .map(|mask| {
                let mut offset = zero;
                for (j, row) in outer.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        offset ^= *row;
                    }
                }
                let mut acc = init();
                Self::walk(offset, inner, |w| step(&mut acc, w));
                acc
            })
            .reduce(&init, &merge);
        Ok(result)
    }

    /// Visit every codeword (sequentially, Gray-code order).
    pub fn for_each_codeword<F: FnMut(&BitWord)>(&self, f: F) -> Result<()> {
        self.check_cap()?;
        Self::walk(BitWord::zeros(self.length)?, &self.basis, f);
        Ok(())
    }

    pub fn codewords(&self) -> Result<Vec<BitWord>> {
        let mut out = Vec::with_capacity(1usize << self.rank().min(ENUMERATION_CAP));
        self.for_each_codeword(|w| out.push(*w))?;
        Ok(out)
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        let n = self.length;
        let counts = self.fold_codewords(
            || vec![0u64; n + 1],
            |acc, w| acc[w.weight()] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(WeightEnumerator::from_counts(&counts))
    }

    /// Weight enumerator of `C⊥` by the MacWilliams transform
    /// `B_j = |C|^{-1} Σ_i A_i K_j(i)` with Krawtchouk polynomials `K_j`.
    pub fn macwilliams_dual_enumerator(&self) -> Result<WeightEnumerator> {
        let a = self.weight_enumerator()?;
        let n = self.length;
        let mut b = vec![BigInt::zero(); n + 1];
        for (i, count) in a.nonzero() {
            let count = BigInt::from(count);
            for (j, kj) in krawtchouk_column(n, i).into_iter().enumerate() {
                b[j] += &count * kj;
            }
        }
        let size = BigInt::from(self.cardinality());
        let coefficients = b
            .into_iter()
            .map(|x| {
                if x.is_negative() || !(&x % &size).is_zero() {
                    return Err(Error::Internal(format!(
                        "MacWilliams coefficient {x} not divisible by |C| = {size}"
                    )));
                }
                Ok((x / &size).to_biguint().expect("checked nonnegative"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightEnumerator { coefficients })
    }

    /// Largest of 8, 4, 2 dividing every codeword weight.
    ///
    /// `wt(Σ x_i) = Σ_S (-2)^{|S|-1} |∩_S x_i|`, so modulo 8 only overlaps of
    /// at most three basis words matter.
    pub fn divisibility_class(&self) -> Divisibility {
        let b = &self.basis;
        if b.iter().any(|x| x.weight() % 2 == 1) {
            return Divisibility::None;
        }
        let pairs_mod = |m: usize| {
            (0..b.len()).all(|i| (i + 1..b.len()).all(|j| b[i].overlap(&b[j]).is_multiple_of(m)))
        };
        if b.iter().any(|x| x.weight() % 4 != 0) || !pairs_mod(2) {
            return Divisibility::Even;
        }
        if b.iter().any(|x| x.weight() % 8 != 0) || !pairs_mod(4) {
            return Divisibility::DoublyEven;
        }
        let triples_even = (0..b.len()).all(|i| {
            (i + 1..b.len()).all(|j| {
                let ij = b[i] & b[j];
                (j + 1..b.len()).all(|k| ij.overlap(&b[k]).is_multiple_of(2))
            })
        });
        if triples_even {
            Divisibility::TriplyEven
        } else {
            Divisibility::DoublyEven
        }
    }

    /// [`divisibility_class`](Self::divisibility_class) from the gcd of all
    /// codeword weights.
    pub fn divisibility_by_enumeration(&self) -> Result<Divisibility> {
        let gcd = self.fold_codewords(
            || 0usize,
            |g, w| *g = num_integer::gcd(*g, w.weight()),
            num_integer::gcd,
        )?;
        Ok(Divisibility::from_weight_gcd(gcd))
    }

    /// Evenness is linear, so the basis decides it without enumeration.
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 2 == 0)
    }

    /// `C_β = {c ∈ C : supp(c) ⊆ supp(β)}`, as the kernel of the projection
    /// onto the coordinates outside `supp(β)`.
    pub fn subcode_supported_on(&self, beta: &BitWord) -> Result<BinaryCode> {
        Ok(self.split_on(beta)?.0)
    }

    /// The image of `C` after deleting the coordinates in `supp(β)`;
    /// remaining coordinates keep their relative order.
    pub fn puncture_off_support(&self, beta: &BitWord) -> Result<BinaryCode> {
        Ok(self.split_on(beta)?.1)
    }

    /// `(C_β, punctured C)` in one elimination pass.
    pub fn split_on(&self, beta: &BitWord) -> Result<(BinaryCode, BinaryCode)> {
        beta.ensure_len(self.length)?;
        let off: Vec<usize> = beta.complement().iter_ones().collect();
        let mut proj_rows: Vec<(BitWord, BitWord)> = Vec::new();
        let mut proj_pivots: Vec<usize> = Vec::new();
        let mut kernel: Vec<BitWord> = Vec::new();
        for row in &self.basis {
            let mut p = row.select(&off);
            let mut full = *row;
            for ((pr, fr), &piv) in proj_rows.iter().zip(&proj_pivots) {
                if p.get(piv) {
                    p ^= *pr;
                    full ^= *fr;
                }
            }
            match p.leading_one() {
                Some(piv) => {
                    proj_rows.push((p, full));
                    proj_pivots.push(piv);
                }
                None => kernel.push(full),
            }
        }
        let supported = make_code(self.length, &kernel)?;
        let punctured = make_code(off.len(), proj_rows.iter().map(|(p, _)| p))?;
        Ok((supported, punctured))
    }

    /// `C ⊕ D = {c ⊕ d}`.
    pub fn direct_sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        let left_zero = BitWord::zeros(self.length)?;
        let right_zero = BitWord::zeros(other.length)?;
        let gens = self
            .basis
            .iter()
            .map(|c| c.concat(&right_zero))
            .chain(other.basis.iter().map(|d| left_zero.concat(d)))
            .collect::<Result<Vec<_>>>()?;
        make_code(self.length + other.length, &gens)
    }

    /// Code spanned by the basis plus `extra` words.
    pub fn extended_by(&self, extra: &[BitWord]) -> Result<BinaryCode> {
        make_code(self.length, self.basis.iter().chain(extra))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.to_string()).collect()
    }
}

/// Column `K_0(i)..K_n(i)` of Krawtchouk values: coefficients of
/// `(1 - x)^i (1 + x)^{n - i}`.
fn krawtchouk_column(n: usize, i: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::one();
    for step in 0..n {
        let sign = if step < i { -1 } else { 1 };
        for j in (1..=step + 1).rev() {
            let prev = poly[j - 1].clone();
            if sign < 0 {
                poly[j] -= prev;
            } else {
                poly[j] += prev;
            }
        }
    }
    poly
}

/// Reed–Muller code `RM(r, m)`: evaluations of monomials of degree at most
/// `r` on the points of `GF(2)^m`, point `j` having coordinates the bits of
/// `j`.
pub fn reed_muller(r: usize, m: usize) -> Result<BinaryCode> {
    if r > m {
        return Err(Error::Input(format!("RM({r},{m}) requires r <= m")));
    }
    if m >= usize::BITS as usize || (1usize << m) > MAX_LENGTH {
        return Err(Error::Input(format!(
            "RM({r},{m}) has length 2^{m}, above {MAX_LENGTH}"
        )));
    }
    let n = 1usize << m;
    let mut gens = Vec::new();
    for subset in 0u32..(1u32 << m) {
        if subset.count_ones() as usize > r {
            continue;
        }
        let points = (0..n).filter(|&j| (j as u32) & subset == subset);
        gens.push(BitWord::from_indices(n, points)?);
    }
    make_code(n, &gens)
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryCode")
            .field("length", &self.length)
            .field("rank", &self.rank())
            .field("basis", &self.to_strings())
            .finish()
    }
}

/// Wire form `{"length": n, "generators": ["0101…", …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeLiteral {
    pub length: usize,
    pub generators: Vec<String>,
}

impl TryFrom<CodeLiteral> for BinaryCode {
    type Error = Error;

    fn try_from(lit: CodeLiteral) -> Result<Self> {
        BinaryCode::from_strings(lit.length, &lit.generators)
    }
}

impl From<&BinaryCode> for CodeLiteral {
    fn from(c: &BinaryCode) -> Self {
        CodeLiteral {
            length: c.length,
            generators: c.to_strings(),
        }
    }
}

impl Serialize for BinaryCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeLiteral::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let lit = CodeLiteral::deserialize(d)?;
        BinaryCode::try_from(lit).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn pow2(exp: usize) -> BigUint {
    BigUint::one() << exp
}
