//! α-induction accounting for the crossed product of the tensor-power net
//! by an even code `C`.
//!
//! A sector `λ` lifts (α⁺ = α⁻) iff its τ-word `β` lies in `C⊥`. Induced
//! sectors with the same τ-word coincide iff the labels off `supp(β)`
//! differ by a word of `C` punctured to those coordinates, so the classes
//! for a fixed `β` are the cosets of the punctured code. Each class
//! decomposes as `α_λ = m (σ_1 ⊕ … ⊕ σ_t)` with every `σ_i` of dimension
//! `d = 1`, where `m = |C_β| / 2^{wt(β)/2}` and `t = 2^{wt(β)} / |C_β|`.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::count;
use crate::error::{Error, Result};
use crate::gf2::{pow2, BinaryCode, BitWord, ENUMERATION_CAP};
use crate::ising::SixteenthWeight;
use crate::sector::{code_sector, tensor_s_entry, Sector};

/// One induced sector `α_λ`, named by its least representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaClass {
    pub beta: BitWord,
    pub rep: Sector,
    /// Conformal weight of `rep`; its residue mod 16 is the class spin.
    pub weight: SixteenthWeight,
    pub spin_exponent: u8,
}

impl AlphaClass {
    fn new(beta: BitWord, rep: Sector) -> Self {
        let weight = rep.weight();
        AlphaClass {
            beta,
            rep,
            weight,
            spin_exponent: weight.spin_exponent(),
        }
    }

    pub fn has_trivial_spin(&self) -> bool {
        self.spin_exponent == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaReport {
    pub beta: BitWord,
    /// `wt(β)`, which is `8j` for a triply even dual.
    pub weight: usize,
    #[serde(serialize_with = "count::serialize")]
    pub num_lambda: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub c_beta_size: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub num_classes: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub multiplicity_m: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub split_t: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub irreducible_dim_d: BigUint,
    /// `d_λ = 2^{wt(β)/2}`.
    #[serde(serialize_with = "count::serialize")]
    pub alpha_dim: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub mu_contribution: BigUint,
    pub class_list: Vec<AlphaClass>,
}

impl BetaReport {
    /// Number of irreducible sectors contributed: `classes · t`.
    pub fn num_sectors(&self) -> BigUint {
        &self.num_classes * &self.split_t
    }

    /// Spin exponent of every irreducible sector, each class repeated `t`
    /// times. Panics if `t` does not fit in memory-sized counts.
    pub fn sector_spins(&self) -> Vec<u8> {
        let t = u64::try_from(&self.split_t).expect("split count fits in u64");
        self.class_list
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.spin_exponent, t as usize))
            .collect()
    }

    pub fn sector_weights(&self) -> Vec<SixteenthWeight> {
        let t = u64::try_from(&self.split_t).expect("split count fits in u64");
        self.class_list
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.weight, t as usize))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub code: BinaryCode,
    pub dual: BinaryCode,
    pub beta_reports: Vec<BetaReport>,
    #[serde(serialize_with = "count::serialize")]
    pub total_sectors: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub total_mu: BigUint,
    #[serde(serialize_with = "count::serialize")]
    pub target_mu: BigUint,
    pub consistent: bool,
}

impl ExtensionReport {
    pub fn sector_weights(&self) -> Vec<SixteenthWeight> {
        self.beta_reports.iter().flat_map(|r| r.sector_weights()).collect()
    }

    pub fn report_for(&self, beta: &BitWord) -> Option<&BetaReport> {
        self.beta_reports.iter().find(|r| r.beta == *beta)
    }
}

fn ensure_lengths(lambda: &Sector, c: &BinaryCode) -> Result<()> {
    if lambda.len() != c.length() {
        return Err(Error::LengthMismatch {
            expected: c.length(),
            found: lambda.len(),
        });
    }
    Ok(())
}

/// Lifting criterion: `τ(λ) · c = 0` for every basis word of `C`.
pub fn lifts(lambda: &Sector, c: &BinaryCode) -> Result<bool> {
    ensure_lengths(lambda, c)?;
    let tau = lambda.tau_word();
    Ok(c.basis().iter().all(|b| !tau.dot(b)))
}

/// Same criterion read off the tensor-power S-matrix: `S_{λ(c), λ} > 0`
/// for every basis word `c`.
pub fn lifts_by_s_matrix_sign(lambda: &Sector, c: &BinaryCode) -> Result<bool> {
    ensure_lengths(lambda, c)?;
    for b in c.basis() {
        let entry = tensor_s_entry(&code_sector(b), lambda)?;
        if entry.signum() != std::cmp::Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_lifting(lambda: &Sector, c: &BinaryCode) -> Result<()> {
    if !lifts(lambda, c)? {
        return Err(Error::NotLifting {
            beta: lambda.tau_word().to_string(),
        });
    }
    Ok(())
}

/// `⟨α_λ, α_μ⟩ = Σ_{c∈C} ⟨λμ, λ(c)⟩`.
///
/// The multiplicity of `λ(c)` in `λ × μ` is 1 exactly when the τ-words
/// agree and `c` matches `λ ⊕ μ` off the τ-word, so the sum is `|C_β|`
/// when the off-support difference lies in the punctured code, else 0.
pub fn hom_alpha(lambda: &Sector, mu: &Sector, c: &BinaryCode) -> Result<BigUint> {
    require_lifting(lambda, c)?;
    require_lifting(mu, c)?;
    let beta = lambda.tau_word();
    if beta != mu.tau_word() {
        return Ok(BigUint::default());
    }
    let off: Vec<usize> = beta.complement().iter_ones().collect();
    let diff = (lambda.half_word() ^ mu.half_word()).select(&off);
    let (supported, punctured) = c.split_on(&beta)?;
    if punctured.contains(&diff) {
        Ok(supported.cardinality())
    } else {
        Ok(BigUint::default())
    }
}

fn check_beta(c: &BinaryCode, beta: &BitWord) -> Result<()> {
    beta.ensure_len(c.length())?;
    if c.basis().iter().any(|b| beta.dot(b)) {
        return Err(Error::NotLifting {
            beta: beta.to_string(),
        });
    }
    Ok(())
}

/// Classes of `α_λ` over all `λ` with `τ(λ) = β`, least representative
/// first.
///
/// Off `supp(β)` the classes are cosets of the punctured code `P`; the
/// least element of a coset is the one vanishing on the pivot columns of
/// `P`, so the classes are indexed by assignments to its free columns.
pub fn alpha_classes(c: &BinaryCode, beta: &BitWord) -> Result<Vec<AlphaClass>> {
    check_beta(c, beta)?;
    if !c.is_even() {
        return Err(Error::Input("C must be even".into()));
    }
    let punctured = c.puncture_off_support(beta)?;
    let off: Vec<usize> = beta.complement().iter_ones().collect();
    // acting by C changes the weight by 8·|supp(c) \ β| sixteenths, so the
    // class spin is well defined iff every punctured word is even
    if !punctured.is_even() {
        return Err(Error::ModelInconsistency {
            beta: beta.to_string(),
            detail: "class spin not well defined: punctured code has odd words".into(),
        });
    }
    let mut is_pivot = vec![false; off.len()];
    for &p in punctured.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..off.len()).filter(|&i| !is_pivot[i]).collect();
    if free.len() > ENUMERATION_CAP {
        return Err(Error::Capacity {
            rank: free.len(),
            cap: ENUMERATION_CAP,
        });
    }
    let n = c.length();
    let f = free.len();
    let mut classes = Vec::with_capacity(1usize << f);
    for mask in 0u64..(1u64 << f) {
        // first free column is the most significant bit, giving lex order
        let halves = BitWord::from_indices(
            n,
            (0..f)
                .filter(|&j| mask >> (f - 1 - j) & 1 == 1)
                .map(|j| off[free[j]]),
        )?;
        classes.push(AlphaClass::new(*beta, Sector::from_parts(beta, &halves)));
    }
    Ok(classes)
}

/// Class of `λ` among [`alpha_classes`]: its least representative.
pub fn class_representative(lambda: &Sector, c: &BinaryCode) -> Result<Sector> {
    require_lifting(lambda, c)?;
    let beta = lambda.tau_word();
    let off: Vec<usize> = beta.complement().iter_ones().collect();
    let punctured = c.puncture_off_support(&beta)?;
    let reduced = punctured.reduce(&lambda.half_word().select(&off));
    Ok(Sector::from_parts(&beta, &reduced.scatter(c.length(), &off)?))
}

fn inconsistency(beta: &BitWord, detail: String) -> Error {
    Error::ModelInconsistency {
        beta: beta.to_string(),
        detail,
    }
}

/// Accounting for one τ-word `β ∈ C⊥` under the dimension-one model.
pub fn beta_report(c: &BinaryCode, beta: &BitWord) -> Result<BetaReport> {
    check_beta(c, beta)?;
    if !c.is_even() || !c.contains_all_one() {
        return Err(Error::Input(
            "C must be even and contain the all-one word".into(),
        ));
    }
    let n = c.length();
    let w = beta.weight();
    if !w.is_multiple_of(2) {
        return Err(inconsistency(beta, format!("odd weight {w}")));
    }
    let rank_c = c.rank();
    let (supported, punctured) = c.split_on(beta)?;
    let rank_cb = supported.rank();
    let half = w / 2;
    if rank_cb < half {
        return Err(inconsistency(
            beta,
            format!("|C_beta| = 2^{rank_cb} is below the bound 2^{half}"),
        ));
    }
    if rank_cb > w {
        return Err(inconsistency(
            beta,
            format!("split count t = 2^{w} / 2^{rank_cb} is not an integer"),
        ));
    }
    let m_exp = rank_cb - half;
    let t_exp = w - rank_cb;
    let classes_exp = (n - w) - punctured.rank();
    debug_assert_eq!(punctured.rank() + rank_cb, rank_c);

    let class_list = alpha_classes(c, beta)?;
    let num_classes = pow2(classes_exp);
    if BigUint::from(class_list.len()) != num_classes {
        return Err(inconsistency(
            beta,
            format!(
                "enumerated {} classes, expected 2^{classes_exp}",
                class_list.len()
            ),
        ));
    }

    let m = pow2(m_exp);
    let t = pow2(t_exp);
    let d = BigUint::one();
    let c_beta_size = pow2(rank_cb);
    let alpha_dim = pow2(half);

    // ⟨α_λ, α_λ⟩ = Σ m_i² = m² t,  d_λ = Σ m_i d_i = m t d,  d = m 2^{w/2} / |C_β|
    if &m * &m * &t != c_beta_size {
        return Err(inconsistency(beta, "m^2 t != |C_beta|".into()));
    }
    if &m * &t * &d != alpha_dim {
        return Err(inconsistency(beta, "m t d != 2^{wt/2}".into()));
    }
    if &m * &alpha_dim != &d * &c_beta_size {
        return Err(inconsistency(beta, "d != m 2^{wt/2} / |C_beta|".into()));
    }
    let num_lambda = pow2(n - w);
    let class_size = pow2(rank_c - rank_cb);
    if &num_classes * &class_size != num_lambda {
        return Err(inconsistency(beta, "classes do not partition the lambdas".into()));
    }
    let mu_contribution = &num_classes * &t * &d * &d;
    if mu_contribution != pow2(n - rank_c) {
        return Err(inconsistency(beta, "mu contribution != 2^n / |C|".into()));
    }

    Ok(BetaReport {
        beta: *beta,
        weight: w,
        num_lambda,
        c_beta_size,
        num_classes,
        multiplicity_m: m,
        split_t: t,
        irreducible_dim_d: d,
        alpha_dim,
        mu_contribution,
        class_list,
    })
}

/// Sector theory of the crossed product by `C`: one [`BetaReport`] per
/// `β ∈ C⊥`, checked against the global index `4^n / |C|²`.
pub fn full_report(c: &BinaryCode) -> Result<ExtensionReport> {
    if !c.is_even() || !c.contains_all_one() {
        return Err(Error::Input(
            "C must be even and contain the all-one word".into(),
        ));
    }
    let dual = c.dual();
    let betas = dual.codewords()?;
    let mut beta_reports = betas
        .par_iter()
        .map(|b| beta_report(c, b))
        .collect::<Result<Vec<_>>>()?;
    beta_reports.sort_by_key(|x| x.beta);

    let total_sectors: BigUint = beta_reports.iter().map(|r| r.num_sectors()).sum();
    let total_mu: BigUint = beta_reports.iter().map(|r| r.mu_contribution.clone()).sum();
    let n = c.length();
    let target_mu = pow2(2 * n - 2 * c.rank());
    let dual_sq = dual.cardinality() * dual.cardinality();
    let consistent = total_mu == target_mu && total_mu == dual_sq;
    Ok(ExtensionReport {
        code: c.clone(),
        dual,
        beta_reports,
        total_sectors,
        total_mu,
        target_mu,
        consistent,
    })
}
