//! Pointed modular data: a finite abelian group with a spin on each element.
//!
//! Spins are 16th roots of unity `e^{2πik/16}` stored as exponents `k`. The
//! braiding data is the exponent of `Y_{gh} = ω_g ω_h / ω_{g+h}`;
//! nondegeneracy (invertibility of `S = w^{-1/2} Y`) is decided from the
//! radical of that pairing, without complex numbers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `Z_{n_1} × … × Z_{n_r}`, elements in mixed radix with the first factor
/// slowest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    orders: Vec<u32>,
}

pub type Element = Vec<u32>;

impl AbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::Input("cyclic factor of order 0".into()));
        }
        Ok(AbelianGroup { orders })
    }

    pub fn cyclic(n: u32) -> Self {
        AbelianGroup { orders: vec![n] }
    }

    pub fn elementary(k: usize) -> Self {
        AbelianGroup { orders: vec![2; k] }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    pub fn element(&self, mut index: usize) -> Element {
        let mut out = vec![0; self.orders.len()];
        for (slot, &o) in out.iter_mut().zip(&self.orders).rev() {
            *slot = (index % o as usize) as u32;
            index /= o as usize;
        }
        out
    }

    pub fn index(&self, g: &[u32]) -> usize {
        g.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&x, &o)| acc * o as usize + x as usize)
    }

    pub fn add(&self, mut g: usize, mut h: usize) -> usize {
        let (mut out, mut place) = (0, 1);
        for &o in self.orders.iter().rev() {
            let o = o as usize;
            out += (g % o + h % o) % o * place;
            g /= o;
            h /= o;
            place *= o;
        }
        out
    }

    pub fn neg(&self, mut g: usize) -> usize {
        let (mut out, mut place) = (0, 1);
        for &o in self.orders.iter().rev() {
            let o = o as usize;
            out += (o - g % o) % o * place;
            g /= o;
            place *= o;
        }
        out
    }

    /// Order of the element at `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.add(x, g);
            k += 1;
        }
        k
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.orders.iter().map(|o| format!("Z{o}")).collect();
        f.write_str(&parts.join("x"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointedModularData {
    group: AbelianGroup,
    /// Spin exponent mod 16 per element index.
    spins: Vec<u8>,
}

/// Outcome of the order-two check on nondegenerate data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderTwoOutcome {
    /// Some spin is not ±1.
    HypothesisNotMet,
    /// Every element satisfies `2g = 0`.
    Holds,
    /// A nondegenerate ±1 assignment with an element of order > 2.
    Violated,
}

impl PointedModularData {
    /// Data without the quadratic-form precheck; see [`validate`](Self::validate).
    pub fn unchecked(group: AbelianGroup, spins: Vec<u8>) -> Result<Self> {
        if spins.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                found: spins.len(),
            });
        }
        Ok(PointedModularData {
            group,
            spins: spins.into_iter().map(|s| s % 16).collect(),
        })
    }

    /// Validated data: the spins must be a quadratic form, i.e. the identity
    /// has spin 1, `ω_{-g} = ω_g`, and `Y` is a bicharacter.
    pub fn new(group: AbelianGroup, spins: Vec<u8>) -> Result<Self> {
        let m = Self::unchecked(group, spins)?;
        m.validate()?;
        Ok(m)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn spins(&self) -> &[u8] {
        &self.spins
    }

    pub fn validate(&self) -> Result<()> {
        if self.spins[0] != 0 {
            return Err(Error::InvalidModularData(format!(
                "identity has spin exponent {}",
                self.spins[0]
            )));
        }
        let n = self.group.order();
        for g in 0..n {
            if self.spins[self.group.neg(g)] != self.spins[g] {
                return Err(Error::InvalidModularData(format!(
                    "spin of {:?} differs from spin of its inverse",
                    self.group.element(g)
                )));
            }
        }
        if let Some((g, g2, h)) = self.bilinearity_failure() {
            return Err(Error::InvalidModularData(format!(
                "Y is not a bicharacter at ({:?} + {:?}, {:?})",
                self.group.element(g),
                self.group.element(g2),
                self.group.element(h)
            )));
        }
        Ok(())
    }

    /// First triple with `Y(g+g', h) ≠ Y(g, h) + Y(g', h)`.
    pub fn bilinearity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.group.order();
        let sum: Vec<usize> = (0..n * n).map(|i| self.group.add(i / n, i % n)).collect();
        let y: Vec<u8> = (0..n * n)
            .map(|i| {
                let (g, h) = (i / n, i % n);
                ((self.spins[g] as i32 + self.spins[h] as i32 - self.spins[sum[i]] as i32).rem_euclid(16)) as u8
            })
            .collect();
        for g in 0..n {
            for g2 in 0..n {
                let s = sum[g * n + g2];
                for h in 0..n {
                    if y[s * n + h] != (y[g * n + h] + y[g2 * n + h]) % 16 {
                        return Some((g, g2, h));
                    }
                }
            }
        }
        None
    }

    /// Exponent of `ω_{g+h} / (ω_g ω_h)` (element indices).
    pub fn y_entry(&self, g: usize, h: usize) -> u8 {
        (16 - self.y_reciprocal_exponent(g, h)) % 16
    }

    /// Exponent of `ω_g ω_h / ω_{g+h}`, the reciprocal of [`Self::y_entry`].
    pub fn y_reciprocal_exponent(&self, g: usize, h: usize) -> u8 {
        let s = self.group.add(g, h);
        ((self.spins[g] as i32 + self.spins[h] as i32 - self.spins[s] as i32).rem_euclid(16)) as u8
    }

    /// Nonidentity elements pairing trivially with everything.
    pub fn radical(&self) -> Vec<usize> {
        let n = self.group.order();
        (1..n)
            .filter(|&g| (0..n).all(|h| self.y_entry(g, h) == 0))
            .collect()
    }

    pub fn bicharacter_nondegenerate(&self) -> bool {
        self.radical().is_empty()
    }

    pub fn spins_are_signs(&self) -> bool {
        self.spins.iter().all(|&s| s == 0 || s == 8)
    }

    /// With all dimensions 1 and all spins ±1, a modular category has every
    /// nontrivial element of order 2.
    pub fn order_two_theorem(&self) -> Result<OrderTwoOutcome> {
        if !self.bicharacter_nondegenerate() {
            return Err(Error::Degenerate);
        }
        if !self.spins_are_signs() {
            return Ok(OrderTwoOutcome::HypothesisNotMet);
        }
        let n = self.group.order();
        if (0..n).all(|g| self.group.add(g, g) == 0) {
            Ok(OrderTwoOutcome::Holds)
        } else {
            Ok(OrderTwoOutcome::Violated)
        }
    }
}

/// Result of fitting an observed spin multiset onto a candidate group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrimination {
    pub group: String,
    pub admissible: bool,
    /// First admissible assignment, spins by element index.
    pub witness: Option<Vec<u8>>,
    pub assignments_tried: u64,
    pub invalid_quadratic_form: u64,
    pub degenerate: u64,
}

/// Largest group for which all spin placements are enumerated.
pub const DISCRIMINATE_MAX_ORDER: usize = 10;

/// Try every placement of `spins` (a multiset, one entry per element) on
/// `group` with a spin-1 entry at the identity, counting placements that
/// fail the quadratic-form check or are degenerate.
pub fn discriminate(group: &AbelianGroup, spins: &[u8]) -> Result<Discrimination> {
    let n = group.order();
    if spins.len() != n {
        return Err(Error::Input(format!(
            "{} spins given for a group of order {n}",
            spins.len()
        )));
    }
    if n > DISCRIMINATE_MAX_ORDER {
        return Err(Error::Capacity {
            rank: n,
            cap: DISCRIMINATE_MAX_ORDER,
        });
    }
    let mut rest: Vec<u8> = spins.iter().map(|s| s % 16).collect();
    let Some(pos) = rest.iter().position(|&s| s == 0) else {
        return Ok(Discrimination {
            group: group.to_string(),
            admissible: false,
            witness: None,
            assignments_tried: 0,
            invalid_quadratic_form: 0,
            degenerate: 0,
        });
    };
    rest.remove(pos);
    rest.sort_unstable();

    let mut result = Discrimination {
        group: group.to_string(),
        admissible: false,
        witness: None,
        assignments_tried: 0,
        invalid_quadratic_form: 0,
        degenerate: 0,
    };
    let mut perm = rest;
    loop {
        let mut assignment = vec![0u8];
        assignment.extend_from_slice(&perm);
        result.assignments_tried += 1;
        let data = PointedModularData::unchecked(group.clone(), assignment.clone())?;
        if data.validate().is_err() {
            result.invalid_quadratic_form += 1;
        } else if !data.bicharacter_nondegenerate() {
            result.degenerate += 1;
        } else if result.witness.is_none() {
            result.admissible = true;
            result.witness = Some(assignment);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(result)
}

/// Lexicographic next permutation; distinct multiset orderings only.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("exists by choice of i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All ±1 spin assignments on `group` (identity fixed to +1), classified.
/// Returns `(valid, nondegenerate, nondegenerate_with_order_above_two)`.
pub fn sign_assignment_census(group: &AbelianGroup) -> (u64, u64, u64) {
    let n = group.order();
    let (mut valid, mut nondeg, mut violations) = (0, 0, 0);
    for mask in 0u64..(1u64 << (n - 1)) {
        let spins: Vec<u8> = (0..n)
            .map(|g| if g > 0 && mask >> (g - 1) & 1 == 1 { 8 } else { 0 })
            .collect();
        let data = PointedModularData::unchecked(group.clone(), spins).expect("sizes match");
        if data.validate().is_err() {
            continue;
        }
        valid += 1;
        if data.bicharacter_nondegenerate() {
            nondeg += 1;
            if data.order_two_theorem() == Ok(OrderTwoOutcome::Violated) {
                violations += 1;
            }
        }
    }
    (valid, nondeg, violations)
}
