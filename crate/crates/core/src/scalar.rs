//! Exact scalars `(a + b√2) / 2^e` in `Z[√2][1/2]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(a + b√2) / 2^e`, normalized so that `e = 0` or `a`, `b` are not both
/// even.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DyadicTriple", into = "DyadicTriple")]
pub struct DyadicRootTwo {
    a: BigInt,
    b: BigInt,
    e: u32,
}

impl DyadicRootTwo {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, e: u32) -> Self {
        let mut x = DyadicRootTwo {
            a: a.into(),
            b: b.into(),
            e,
        };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.a.is_zero() && self.b.is_zero() {
            self.e = 0;
            return;
        }
        while self.e > 0 && self.a.is_even() && self.b.is_even() {
            self.a >>= 1u32;
            self.b >>= 1u32;
            self.e -= 1;
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn sqrt2() -> Self {
        Self::new(0, 1, 0)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0, 0)
    }

    /// `2^{k/2}`.
    pub fn sqrt2_pow(k: usize) -> Self {
        let half = BigInt::one() << (k / 2);
        if k.is_multiple_of(2) {
            Self::new(half, 0, 0)
        } else {
            Self::new(0, half, 0)
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of `a + b√2`, decided by comparing `a²` with `2b²`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign();
        let sb = self.b.sign();
        use num_bigint::Sign::*;
        match (sa, sb) {
            (NoSign, NoSign) => Ordering::Equal,
            (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
            (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
            (Plus, Minus) | (Minus, Plus) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * 2;
                // a² ≠ 2b² for nonzero integers
                match (sa, a2.cmp(&b2)) {
                    (Plus, Ordering::Greater) | (Minus, Ordering::Less) => Ordering::Greater,
                    _ => Ordering::Less,
                }
            }
        }
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.e == 0).then(|| self.a.clone())
    }

    /// `1/x` for `x = ±2^k / 2^e` or `x = ±√2·2^k / 2^e`; anything else is
    /// rejected.
    pub fn monomial_inverse(&self) -> Result<Self> {
        let is_pow2 = |x: &BigInt| {
            let m = x.magnitude();
            !m.is_zero() && (m & (m - 1u32)).is_zero()
        };
        let e_pow = BigInt::one() << self.e;
        if self.b.is_zero() && is_pow2(&self.a) {
            let k = self.a.magnitude().bits() as u32 - 1;
            let sign = if self.a.is_negative() { -1 } else { 1 };
            Ok(Self::new(e_pow * sign, 0, k))
        } else if self.a.is_zero() && is_pow2(&self.b) {
            let k = self.b.magnitude().bits() as u32 - 1;
            let sign = if self.b.is_negative() { -1 } else { 1 };
            Ok(Self::new(0, e_pow * sign, k + 1))
        } else {
            Err(Error::Division(self.to_string()))
        }
    }

    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        Ok(self * &divisor.monomial_inverse()?)
    }

    fn lift(&self, e: u32) -> (BigInt, BigInt) {
        let s = e - self.e;
        (&self.a << s, &self.b << s)
    }

    /// `"(a+b√2)/2^e"`, the fixed textual form used in machine output.
    pub fn canonical_string(&self) -> String {
        format!("({}+{}√2)/2^{}", self.a, self.b, self.e)
    }
}

impl Default for DyadicRootTwo {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &DyadicRootTwo {
    type Output = DyadicRootTwo;
    fn add(self, rhs: &DyadicRootTwo) -> DyadicRootTwo {
        let e = self.e.max(rhs.e);
        let (a1, b1) = self.lift(e);
        let (a2, b2) = rhs.lift(e);
        DyadicRootTwo::new(a1 + a2, b1 + b2, e)
    }
}

impl Sub for &DyadicRootTwo {
    type Output = DyadicRootTwo;
    fn sub(self, rhs: &DyadicRootTwo) -> DyadicRootTwo {
        self + &(-rhs)
    }
}

impl Mul for &DyadicRootTwo {
    type Output = DyadicRootTwo;
    fn mul(self, rhs: &DyadicRootTwo) -> DyadicRootTwo {
        let a = &self.a * &rhs.a + (&self.b * &rhs.b) * 2;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        DyadicRootTwo::new(a, b, self.e + rhs.e)
    }
}

impl Neg for &DyadicRootTwo {
    type Output = DyadicRootTwo;
    fn neg(self) -> DyadicRootTwo {
        DyadicRootTwo {
            a: -&self.a,
            b: -&self.b,
            e: self.e,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for DyadicRootTwo {
            type Output = DyadicRootTwo;
            fn $m(self, rhs: DyadicRootTwo) -> DyadicRootTwo {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DyadicRootTwo {
    type Output = DyadicRootTwo;
    fn neg(self) -> DyadicRootTwo {
        -&self
    }
}

impl std::iter::Sum for DyadicRootTwo {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(DyadicRootTwo::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for DyadicRootTwo {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(DyadicRootTwo::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for DyadicRootTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational = |x: &BigInt| x.to_string();
        let surd = |x: &BigInt| {
            if x.is_one() {
                "√2".to_string()
            } else if *x == -BigInt::one() {
                "-√2".to_string()
            } else {
                format!("{x}√2")
            }
        };
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => return f.write_str("0"),
            (false, true) => rational(&self.a),
            (true, false) => surd(&self.b),
            (false, false) => {
                let sep = if self.b.is_negative() { "" } else { "+" };
                format!("({}{sep}{})", self.a, surd(&self.b))
            }
        };
        if self.e == 0 {
            f.write_str(&num)
        } else {
            write!(f, "{num}/{}", BigInt::one() << self.e)
        }
    }
}

impl fmt::Debug for DyadicRootTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.canonical_string())
    }
}

/// Serialized form: the triple as decimal strings plus the textual value.
#[derive(Serialize, Deserialize)]
struct DyadicTriple {
    a: String,
    b: String,
    e: u32,
    text: String,
}

impl From<DyadicRootTwo> for DyadicTriple {
    fn from(x: DyadicRootTwo) -> Self {
        DyadicTriple {
            text: x.canonical_string(),
            a: x.a.to_string(),
            b: x.b.to_string(),
            e: x.e,
        }
    }
}

impl TryFrom<DyadicTriple> for DyadicRootTwo {
    type Error = String;
    fn try_from(t: DyadicTriple) -> std::result::Result<Self, String> {
        let a: BigInt = t.a.parse().map_err(|e| format!("bad a: {e}"))?;
        let b: BigInt = t.b.parse().map_err(|e| format!("bad b: {e}"))?;
        Ok(DyadicRootTwo::new(a, b, t.e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(a: i64, b: i64, e: u32) -> DyadicRootTwo {
        DyadicRootTwo::new(a, b, e)
    }

    #[test]
    fn normalization() {
        assert_eq!(d(2, 4, 1), d(1, 2, 0));
        assert_eq!(d(0, 0, 5).e(), 0);
        assert_eq!(d(2, 1, 3).e(), 3);
        let x = d(0, 2, 2);
        assert_eq!((x.a().clone(), x.b().clone(), x.e()), (BigInt::zero(), BigInt::one(), 1));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let r = DyadicRootTwo::sqrt2();
        assert_eq!(&r * &r, DyadicRootTwo::from_int(2));
        assert_eq!(DyadicRootTwo::sqrt2_pow(5), d(0, 4, 0));
    }

    #[test]
    fn signs() {
        assert_eq!(d(3, -2, 0).signum(), Ordering::Greater); // 3 - 2.83
        assert_eq!(d(2, -2, 0).signum(), Ordering::Less);
        assert_eq!(d(-3, 2, 4).signum(), Ordering::Less);
        assert_eq!(d(0, -1, 1).signum(), Ordering::Less);
        assert_eq!(d(0, 0, 0).signum(), Ordering::Equal);
    }

    #[test]
    fn division_only_by_monomials() {
        let half_root = d(0, 1, 1);
        assert_eq!(DyadicRootTwo::one().checked_div(&half_root).unwrap(), DyadicRootTwo::sqrt2());
        assert_eq!(d(1, 0, 2).monomial_inverse().unwrap(), DyadicRootTwo::from_int(4));
        assert_eq!(d(-8, 0, 0).monomial_inverse().unwrap(), d(-1, 0, 3));
        assert!(matches!(d(3, 0, 0).monomial_inverse(), Err(Error::Division(_))));
        assert!(matches!(d(1, 1, 0).monomial_inverse(), Err(Error::Division(_))));
        assert!(DyadicRootTwo::zero().monomial_inverse().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(d(0, 1, 1).to_string(), "√2/2");
        assert_eq!(d(0, -1, 1).to_string(), "-√2/2");
        assert_eq!(d(1, 0, 2).to_string(), "1/4");
        assert_eq!(d(1, -1, 0).to_string(), "(1-√2)");
        assert_eq!(d(0, 1, 1).canonical_string(), "(0+1√2)/2^1");
    }

    fn arb() -> impl Strategy<Value = DyadicRootTwo> {
        (-50i64..50, -50i64..50, 0u32..6).prop_map(|(a, b, e)| d(a, b, e))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn ring_laws(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x - &x, DyadicRootTwo::zero());
        }

        #[test]
        fn normalization_idempotent(a in -200i64..200, b in -200i64..200, e in 0u32..8) {
            let x = d(a, b, e);
            let again = DyadicRootTwo::new(x.a().clone(), x.b().clone(), x.e());
            prop_assert_eq!(&again, &x);
            prop_assert!(x.e() == 0 || x.a().is_odd() || x.b().is_odd());
        }

        #[test]
        fn sign_is_multiplicative(x in arb(), y in arb()) {
            let prod = &x * &y;
            let expect = match (x.signum(), y.signum()) {
                (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
                (s, t) if s == t => Ordering::Greater,
                _ => Ordering::Less,
            };
            prop_assert_eq!(prod.signum(), expect);
        }
    }
}
