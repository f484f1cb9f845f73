//! Library results against brute-force oracles and against printed values.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use framed_core::extension::StructureCodes;
use framed_core::gf2::{make_code, reed_muller};
use framed_core::induction::{alpha_classes, beta_report, full_report, hom_alpha};
use framed_core::ising::{IsingLabel, SixteenthWeight};
use framed_core::sector::{act, all_sectors, fuse_sectors, tensor_s_entry, Sector};
use framed_core::{catalog, BinaryCode, BitWord, DyadicRootTwo};
use num_bigint::BigUint;

/// Every codeword, from XOR of subsets of the given generators.
fn brute_words(n: usize, gens: &[BitWord]) -> BTreeSet<BitWord> {
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << gens.len()) {
        let mut w = BitWord::zeros(n).unwrap();
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w ^= *g;
            }
        }
        out.insert(w);
    }
    out
}

fn brute_enumerator(words: &BTreeSet<BitWord>, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for w in words {
        counts[w.weight()] += 1;
    }
    counts
}

fn monomial_generators(r: usize, m: usize) -> Vec<BitWord> {
    let n = 1 << m;
    (0u32..(1 << m))
        .filter(|s| s.count_ones() as usize <= r)
        .map(|s| {
            let bits: Vec<bool> = (0..n).map(|j: u32| j & s == s).collect();
            BitWord::from_bools(&bits).unwrap()
        })
        .collect()
}

#[test]
fn reed_muller_enumerators_frozen() {
    let rm1 = brute_enumerator(&brute_words(16, &monomial_generators(1, 4)), 16);
    let mut expected1 = vec![0u64; 17];
    expected1[0] = 1;
    expected1[8] = 30;
    expected1[16] = 1;
    assert_eq!(rm1, expected1);

    let rm2 = brute_enumerator(&brute_words(16, &monomial_generators(2, 4)), 16);
    let mut expected2 = vec![0u64; 17];
    for (w, a) in [(0, 1), (4, 140), (6, 448), (8, 870), (10, 448), (12, 140), (16, 1)] {
        expected2[w] = a;
    }
    assert_eq!(rm2, expected2);

    for (r, expected) in [(1, &expected1), (2, &expected2)] {
        let lib = reed_muller(r, 4).unwrap().weight_enumerator().unwrap();
        let lib: Vec<u64> = lib.coefficients.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(&lib, expected);
    }
}

#[test]
fn reed_muller_ranks_match_binomial_sums() {
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for m in 0..=6 {
        for r in 0..=m {
            let expected: usize = (0..=r).map(|i| binom(m, i)).sum();
            assert_eq!(reed_muller(r, m).unwrap().rank(), expected, "RM({r},{m})");
        }
    }
    assert_eq!(reed_muller(0, 4).unwrap(), catalog::repetition(16).unwrap());
    assert_eq!(reed_muller(4, 4).unwrap(), BinaryCode::full(16).unwrap());
    assert!(reed_muller(5, 4).is_err());
}

#[test]
fn reed_muller_codewords_match_brute_force() {
    for (r, m) in [(1, 3), (1, 4), (2, 4), (1, 5)] {
        let lib: BTreeSet<BitWord> = reed_muller(r, m).unwrap().codewords().unwrap().into_iter().collect();
        assert_eq!(lib, brute_words(1 << m, &monomial_generators(r, m)));
    }
}

#[test]
fn dual_matches_brute_force() {
    let c = reed_muller(1, 3).unwrap();
    let words = brute_words(8, c.basis());
    let brute: BTreeSet<BitWord> = (0u32..256)
        .map(|x| BitWord::from_bools(&(0..8).map(|i| x >> (7 - i) & 1 == 1).collect::<Vec<_>>()).unwrap())
        .filter(|v| words.iter().all(|w| !w.dot(v)))
        .collect();
    let lib: BTreeSet<BitWord> = c.dual().codewords().unwrap().into_iter().collect();
    assert_eq!(lib, brute);
    assert_eq!(c.dual(), c);
}

/// `|C_β|` for every `β` in `RM(1,4)`, by filtering all codewords of `RM(2,4)`.
#[test]
fn c_beta_sizes_match_brute_force() {
    let c = reed_muller(2, 4).unwrap();
    let words = brute_words(16, &monomial_generators(2, 4));
    assert_eq!(words.len(), 2048);
    for beta in reed_muller(1, 4).unwrap().codewords().unwrap() {
        let brute = words.iter().filter(|w| w.is_subset_of(&beta)).count() as u64;
        let r = beta_report(&c, &beta).unwrap();
        assert_eq!(r.c_beta_size, BigUint::from(brute), "beta = {beta}");
        let punctured: BTreeSet<BitWord> = words.iter().map(|w| *w & beta.complement()).collect();
        assert_eq!(BigUint::from(brute * punctured.len() as u64), BigUint::from(2048u32));
    }
}

/// Orbits of the `C`-action on lifting sectors with τ-word `β`, by search.
fn orbits(c_words: &[BitWord], lambdas: &[Sector]) -> Vec<BTreeSet<Sector>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for l in lambdas {
        if seen.contains(l) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut queue = VecDeque::from([l.clone()]);
        while let Some(x) = queue.pop_front() {
            if !orbit.insert(x.clone()) {
                continue;
            }
            for c in c_words {
                queue.push_back(act(&x, c).unwrap());
            }
        }
        seen.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    out
}

#[test]
fn classes_and_hom_match_orbit_search() {
    let codes = [
        make_code(2, &["11".parse().unwrap()]).unwrap(),
        make_code(4, &["1111".parse().unwrap()]).unwrap(),
        BinaryCode::from_strings(6, &["110000", "001100", "000011"]).unwrap(),
        BinaryCode::from_strings(6, &["111100", "001111", "111111"]).unwrap(),
        reed_muller(1, 3).unwrap(),
    ];
    for c in &codes {
        let n = c.length();
        let c_words = c.codewords().unwrap();
        let dual = c.dual();
        for beta in dual.codewords().unwrap() {
            let lambdas: Vec<Sector> = all_sectors(n).into_iter().filter(|l| l.tau_word() == beta).collect();
            let mut orbs = orbits(&c_words, &lambdas);
            orbs.sort_by(|a, b| a.first().cmp(&b.first()));
            let classes = alpha_classes(c, &beta).unwrap();
            assert_eq!(classes.len(), orbs.len(), "classes for beta = {beta}");
            for (cl, orbit) in classes.iter().zip(&orbs) {
                assert_eq!(&cl.rep, orbit.first().unwrap());
                let spins: BTreeSet<u8> = orbit.iter().map(|l| l.weight().spin_exponent()).collect();
                assert_eq!(spins.len(), 1, "spin constant on a class");
            }
            for x in lambdas.iter().take(6) {
                for y in lambdas.iter().take(6) {
                    let brute = c_words.iter().filter(|w| act(x, w).unwrap() == *y).count();
                    assert_eq!(hom_alpha(x, y, c).unwrap(), BigUint::from(brute));
                }
            }
            let stabilizer = c_words.iter().filter(|w| w.is_subset_of(&beta)).count();
            match beta_report(c, &beta) {
                Ok(r) => {
                    assert_eq!(r.c_beta_size, BigUint::from(stabilizer));
                    assert_eq!(r.num_lambda, BigUint::from(lambdas.len()));
                    assert_eq!(r.num_classes, BigUint::from(orbs.len()));
                }
                Err(framed_core::Error::ModelInconsistency { .. }) => {
                    assert!(stabilizer * stabilizer < 1 << beta.weight(), "beta = {beta}");
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}

fn q(a: i64, b: i64, e: u32) -> DyadicRootTwo {
    DyadicRootTwo::new(a, b, e)
}

/// The printed S-matrix of the two-fold tensor power, in the order
/// id, (0,s), (s,0), (0,e), (e,0), (s,s), (s,e), (e,s), (e,e).
fn printed_tensor_s() -> Vec<Vec<DyadicRootTwo>> {
    let o = || q(0, 0, 0);
    let a = |s: i64| q(s, 0, 2); // ±1/4
    let r = |s: i64| q(0, s, 2); // ±√2/4
    let h = |s: i64| q(s, 0, 1); // ±1/2
    vec![
        vec![a(1), r(1), r(1), a(1), a(1), h(1), r(1), r(1), a(1)],
        vec![r(1), o(), h(1), r(-1), r(1), o(), h(-1), o(), r(-1)],
        vec![r(1), h(1), o(), r(1), r(-1), o(), o(), h(-1), r(-1)],
        vec![a(1), r(-1), r(1), a(1), a(1), h(-1), r(1), r(-1), a(1)],
        vec![a(1), r(1), r(-1), a(1), a(1), h(-1), r(-1), r(1), a(1)],
        vec![h(1), o(), o(), h(-1), h(-1), o(), o(), o(), h(1)],
        vec![r(1), h(-1), o(), r(1), r(-1), o(), o(), h(1), r(-1)],
        vec![r(1), o(), h(-1), r(-1), r(1), o(), h(1), o(), r(-1)],
        vec![a(1), r(-1), r(-1), a(1), a(1), h(1), r(-1), r(-1), a(1)],
    ]
}

fn printed_order() -> Vec<Sector> {
    ["00", "0s", "s0", "0e", "e0", "ss", "se", "es", "ee"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn two_fold_s_matrix_matches_print() {
    let printed = printed_tensor_s();
    let order = printed_order();
    for (i, x) in order.iter().enumerate() {
        for (j, y) in order.iter().enumerate() {
            assert_eq!(tensor_s_entry(x, y).unwrap(), printed[i][j], "entry ({x}, {y})");
        }
    }
}

#[test]
fn length_two_code_has_four_sectors() {
    let c = make_code(2, &["11".parse().unwrap()]).unwrap();
    let report = full_report(&c).unwrap();
    assert_eq!(report.total_sectors, BigUint::from(4u32));
    assert_eq!(report.total_mu, BigUint::from(4u32));
    let mut weights = report.sector_weights();
    weights.sort();
    assert_eq!(weights, vec![SixteenthWeight(0), SixteenthWeight(2), SixteenthWeight(2), SixteenthWeight(8)]);
    assert!(report.beta_reports.iter().all(|r| r.irreducible_dim_d == BigUint::from(1u32)));
}

#[test]
fn fusion_dimensions_multiply() {
    let sectors = all_sectors(3);
    for x in &sectors {
        for y in &sectors {
            let sum = fuse_sectors(x, y).unwrap();
            assert_eq!(sum.total_dim(), x.dim() * y.dim(), "{x} x {y}");
            for (z, _) in sum.iter() {
                assert_eq!(z.tau_word(), x.tau_word() ^ y.tau_word());
            }
        }
    }
}

#[test]
fn case_one_numbers() {
    let d = catalog::repetition(16).unwrap();
    let c = d.dual();
    assert_eq!(c.rank(), 15);
    let ones = BitWord::ones(16).unwrap();
    let r = beta_report(&c, &ones).unwrap();
    assert_eq!(r.num_classes, BigUint::from(1u32));
    assert_eq!(r.split_t, BigUint::from(2u32));
    assert_eq!(r.multiplicity_m, BigUint::from(128u32));
    assert_eq!(r.irreducible_dim_d, BigUint::from(1u32));
    let full = full_report(&c).unwrap();
    assert_eq!(full.total_sectors, BigUint::from(4u32));
    assert_eq!(full.total_mu, BigUint::from(4u32));
}

#[test]
fn case_two_spin_lists() {
    let s = catalog::pair("case2").unwrap();
    let report = full_report(&s.c_code).unwrap();
    assert_eq!(report.total_sectors, BigUint::from(16u32));
    let mut by_beta: BTreeMap<BitWord, Vec<i8>> = BTreeMap::new();
    for r in &report.beta_reports {
        assert_eq!(r.num_sectors(), BigUint::from(4u32));
        let mut signs: Vec<i8> = r
            .sector_spins()
            .iter()
            .map(|&e| SixteenthWeight(e as i64).spin_sign().unwrap())
            .collect();
        signs.sort();
        by_beta.insert(r.beta, signs);
    }
    let w = |s: &str| -> BitWord { s.parse().unwrap() };
    assert_eq!(by_beta[&w("0000000000000000")], vec![-1, -1, 1, 1]);
    assert_eq!(by_beta[&w("1111111100000000")], vec![-1, -1, 1, 1]);
    assert_eq!(by_beta[&w("0000000011111111")], vec![-1, -1, 1, 1]);
    assert_eq!(by_beta[&w("1111111111111111")], vec![1, 1, 1, 1]);
}

#[test]
fn rm_pair_totals() {
    let s = StructureCodes::new(reed_muller(2, 4).unwrap(), reed_muller(1, 4).unwrap()).unwrap();
    let report = full_report(&s.c_code).unwrap();
    assert_eq!(report.beta_reports.len(), 32);
    assert_eq!(report.total_sectors, BigUint::from(1024u32));
    let by_weight: BTreeMap<usize, BigUint> = report
        .beta_reports
        .iter()
        .map(|r| (r.weight, r.num_sectors()))
        .collect();
    assert_eq!(by_weight[&0], BigUint::from(32u32));
    assert_eq!(by_weight[&8], BigUint::from(32u32));
    assert_eq!(by_weight[&16], BigUint::from(32u32));
}

#[test]
fn ising_labels_round_trip() {
    for l in IsingLabel::ALL {
        assert_eq!(IsingLabel::from_symbol(l.symbol()).unwrap(), l);
    }
}
