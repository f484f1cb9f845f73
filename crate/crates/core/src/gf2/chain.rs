//! Decreasing chains of triply even codes `D = D_1 ⊃ … ⊃ D_p = ⟨(1)_n⟩`
//! passing through `⟨β, (1)_n⟩`, with their increasing duals.

use serde::Serialize;

use super::code::{make_code, BinaryCode, Divisibility};
use super::word::BitWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    /// `D_r`.
    pub d: BinaryCode,
    /// `C_r = D_r⊥`.
    pub c: BinaryCode,
}

/// Lexicographically least word of `outer` outside `inner` (`inner ⊊ outer`).
///
/// Reducing `outer` modulo `inner` gives the least coset representatives;
/// they span a space whose least nonzero element is its RREF row with the
/// rightmost pivot.
pub fn least_word_outside(outer: &BinaryCode, inner: &BinaryCode) -> Option<BitWord> {
    let reduced: Vec<BitWord> = outer.basis().iter().map(|b| inner.reduce(b)).collect();
    let quotient = make_code(outer.length(), &reduced).ok()?;
    quotient.basis().last().copied()
}

/// Greedy basis `[(1)_n, β, g_3, …]` of `D`, each `g_i` the least word of
/// `D` outside the span of its predecessors.
fn greedy_basis(d: &BinaryCode, beta: &BitWord) -> Result<Vec<BitWord>> {
    let n = d.length();
    let mut seq = vec![BitWord::ones(n)?, *beta];
    let mut span = make_code(n, &seq)?;
    while span.rank() < d.rank() {
        let next = least_word_outside(d, &span)
            .ok_or_else(|| Error::Internal("span stalled below rank of D".into()))?;
        seq.push(next);
        span = make_code(n, &seq)?;
    }
    Ok(seq)
}

/// `build_chain(D, β)`: the chain `D_1 = D ⊃ D_2 ⊃ … ⊃ D_{p-1} = ⟨β,(1)_n⟩ ⊃
/// D_p = ⟨(1)_n⟩`, each step of index 2.
pub fn build_chain(d: &BinaryCode, beta: &BitWord) -> Result<Vec<ChainLink>> {
    let n = d.length();
    beta.ensure_len(n)?;
    if !d.contains_all_one() {
        return Err(Error::Input("D does not contain the all-one word".into()));
    }
    if !d.contains(beta) {
        return Err(Error::Input(format!("beta = {beta} is not a word of D")));
    }
    if beta.is_zero() || beta.weight() == n {
        return Err(Error::Input(format!(
            "beta = {beta} must differ from the all-zero and all-one words"
        )));
    }
    if d.divisibility_class() != Divisibility::TriplyEven {
        return Err(Error::Input("D is not triply even".into()));
    }
    let seq = greedy_basis(d, beta)?;
    (1..=seq.len())
        .rev()
        .map(|keep| {
            let dr = make_code(n, &seq[..keep])?;
            let cr = dr.dual();
            Ok(ChainLink { d: dr, c: cr })
        })
        .collect()
}
