//! Modular data of the `c = 1/2` Virasoro net: three sectors with
//! conformal weights 0, 1/16 and 1/2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::DyadicRootTwo;

/// The three sectors, ordered by conformal weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IsingLabel {
    /// Weight 0, the identity sector.
    Vacuum,
    /// Weight 1/16, dimension √2.
    Sigma,
    /// Weight 1/2, the simple current.
    Epsilon,
}

impl IsingLabel {
    pub const ALL: [IsingLabel; 3] = [IsingLabel::Vacuum, IsingLabel::Sigma, IsingLabel::Epsilon];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn conformal_weight(self) -> SixteenthWeight {
        SixteenthWeight(match self {
            IsingLabel::Vacuum => 0,
            IsingLabel::Sigma => 1,
            IsingLabel::Epsilon => 8,
        })
    }

    pub fn dim(self) -> DyadicRootTwo {
        match self {
            IsingLabel::Sigma => DyadicRootTwo::sqrt2(),
            _ => DyadicRootTwo::one(),
        }
    }

    /// Literal character: `0`, `s`, `e`.
    pub fn symbol(self) -> char {
        match self {
            IsingLabel::Vacuum => '0',
            IsingLabel::Sigma => 's',
            IsingLabel::Epsilon => 'e',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        match c {
            '0' => Ok(IsingLabel::Vacuum),
            's' => Ok(IsingLabel::Sigma),
            'e' => Ok(IsingLabel::Epsilon),
            other => Err(Error::Parse(format!(
                "invalid sector symbol {other:?} (expected 0, s or e)"
            ))),
        }
    }
}

impl fmt::Display for IsingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsingLabel::Vacuum => "0",
            IsingLabel::Sigma => "1/16",
            IsingLabel::Epsilon => "1/2",
        })
    }
}

/// A conformal weight `h = numerator / 16`. The spin `e^{2πih}` depends
/// only on the numerator mod 16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SixteenthWeight(pub i64);

impl SixteenthWeight {
    pub fn numerator(self) -> i64 {
        self.0
    }

    /// Spin exponent `k` with `ω = e^{2πik/16}`.
    pub fn spin_exponent(self) -> u8 {
        self.0.rem_euclid(16) as u8
    }

    pub fn has_real_spin(self) -> bool {
        matches!(self.spin_exponent(), 0 | 8)
    }

    /// `+1` or `-1` for real spins.
    pub fn spin_sign(self) -> Option<i8> {
        match self.spin_exponent() {
            0 => Some(1),
            8 => Some(-1),
            _ => None,
        }
    }

    /// `"p/16"`.
    pub fn sixteenths(self) -> String {
        format!("{}/16", self.0)
    }
}

impl std::ops::Add for SixteenthWeight {
    type Output = SixteenthWeight;
    fn add(self, rhs: Self) -> Self {
        SixteenthWeight(self.0 + rhs.0)
    }
}

impl std::iter::Sum for SixteenthWeight {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        SixteenthWeight(iter.map(|w| w.0).sum())
    }
}

/// Reduced fraction, e.g. `1/8`, `0`, `5`.
impl fmt::Display for SixteenthWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = num_integer::gcd(self.0, 16);
        let (p, q) = if self.0 == 0 { (0, 1) } else { (self.0 / g, 16 / g) };
        if q == 1 {
            write!(f, "{p}")
        } else {
            write!(f, "{p}/{q}")
        }
    }
}

impl Serialize for SixteenthWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.sixteenths())
    }
}

pub type SMatrix = [[DyadicRootTwo; 3]; 3];

/// The S-matrix in the order (0, 1/16, 1/2):
/// `[[1/2, √2/2, 1/2], [√2/2, 0, -√2/2], [1/2, -√2/2, 1/2]]`.
pub fn s_matrix() -> SMatrix {
    let half = DyadicRootTwo::new(1, 0, 1);
    let root_half = DyadicRootTwo::new(0, 1, 1);
    let neg_root_half = DyadicRootTwo::new(0, -1, 1);
    [
        [half.clone(), root_half.clone(), half.clone()],
        [root_half, DyadicRootTwo::zero(), neg_root_half.clone()],
        [half.clone(), neg_root_half, half],
    ]
}

#[inline]
pub fn s_entry(x: IsingLabel, y: IsingLabel) -> DyadicRootTwo {
    let num = |a: i64, b: i64, e: u32| DyadicRootTwo::new(a, b, e);
    use IsingLabel::*;
    match (x, y) {
        (Sigma, Sigma) => DyadicRootTwo::zero(),
        (Vacuum, Sigma) | (Sigma, Vacuum) => num(0, 1, 1),
        (Epsilon, Sigma) | (Sigma, Epsilon) => num(0, -1, 1),
        _ => num(1, 0, 1),
    }
}

/// Fusion product as a multiset (every multiplicity is 0 or 1).
pub fn fuse(x: IsingLabel, y: IsingLabel) -> Vec<IsingLabel> {
    use IsingLabel::*;
    match (x, y) {
        (Vacuum, z) | (z, Vacuum) => vec![z],
        (Epsilon, Epsilon) => vec![Vacuum],
        (Epsilon, Sigma) | (Sigma, Epsilon) => vec![Sigma],
        (Sigma, Sigma) => vec![Vacuum, Epsilon],
    }
}

/// `N^z_{xy}` from the fusion table.
pub fn fusion_coefficient(x: IsingLabel, y: IsingLabel, z: IsingLabel) -> u32 {
    fuse(x, y).iter().filter(|&&w| w == z).count() as u32
}

/// `N[x][y][z] = N^z_{xy}`.
pub type FusionTensor = [[[u32; 3]; 3]; 3];

/// Verlinde formula `N^ν_{λμ} = Σ_κ S_{λκ} S_{μκ} S*_{νκ} / S_{0κ}`, in
/// exact arithmetic (S is real, so `S* = S`).
pub fn verlinde_fusion_from_s() -> Result<FusionTensor> {
    let s = s_matrix();
    let inv_first_row = s[0]
        .iter()
        .map(|x| x.monomial_inverse())
        .collect::<Result<Vec<_>>>()?;
    let mut n = [[[0u32; 3]; 3]; 3];
    for l in 0..3 {
        for m in 0..3 {
            for v in 0..3 {
                let total: DyadicRootTwo = (0..3)
                    .map(|k| &(&(&s[l][k] * &s[m][k]) * &s[v][k]) * &inv_first_row[k])
                    .sum();
                let value = total
                    .to_integer()
                    .and_then(|i| u32::try_from(i).ok())
                    .ok_or_else(|| {
                        Error::Internal(format!(
                            "Verlinde coefficient ({l},{m},{v}) = {total} is not a nonnegative integer"
                        ))
                    })?;
                n[l][m][v] = value;
            }
        }
    }
    Ok(n)
}

pub fn fusion_table() -> FusionTensor {
    let mut n = [[[0u32; 3]; 3]; 3];
    for x in IsingLabel::ALL {
        for y in IsingLabel::ALL {
            for z in IsingLabel::ALL {
                n[x.index()][y.index()][z.index()] = fusion_coefficient(x, y, z);
            }
        }
    }
    n
}

pub fn mat_mul(x: &SMatrix, y: &SMatrix) -> SMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).map(|k| &x[i][k] * &y[k][j]).sum())
    })
}
