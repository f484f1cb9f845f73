use framed_core::pointed::{
    discriminate, sign_assignment_census, AbelianGroup, OrderTwoOutcome, PointedModularData,
};

/// Direct count over all ±1 assignments: valid quadratic forms, and those
/// with trivial radical.
fn brute_census(g: &AbelianGroup) -> (u64, u64) {
    let n = g.order();
    let (mut valid, mut nondeg) = (0, 0);
    for mask in 0u64..(1 << (n - 1)) {
        let mut spins = vec![0u8];
        spins.extend((0..n - 1).map(|i| if mask >> i & 1 == 1 { 8 } else { 0 }));
        let y = |a: usize, b: usize| (spins[a] as i32 + spins[b] as i32 - spins[g.add(a, b)] as i32).rem_euclid(16);
        let symmetric = (0..n).all(|a| spins[g.neg(a)] == spins[a]);
        let bilinear = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|h| y(g.add(a, b), h) == (y(a, h) + y(b, h)) % 16))
        });
        if symmetric && bilinear {
            valid += 1;
            if (1..n).all(|a| (0..n).any(|h| y(a, h) != 0)) {
                nondeg += 1;
            }
        }
    }
    (valid, nondeg)
}

#[test]
fn no_nondegenerate_sign_assignment_with_order_above_two() {
    for orders in [vec![4], vec![8], vec![2, 4]] {
        let g = AbelianGroup::new(orders).unwrap();
        let (valid, nondeg, violations) = sign_assignment_census(&g);
        assert_eq!((valid, nondeg), brute_census(&g), "{g}");
        assert!(valid > 0);
        assert_eq!(nondeg, 0, "{g}");
        assert_eq!(violations, 0);
    }
}

#[test]
fn elementary_groups_do_have_nondegenerate_signs() {
    for k in 1..=4 {
        let g = AbelianGroup::elementary(k);
        let (_, nondeg, violations) = sign_assignment_census(&g);
        if k <= 3 {
            assert_eq!(nondeg, brute_census(&g).1);
        }
        assert_eq!(violations, 0);
        if k % 2 == 0 {
            assert!(nondeg > 0, "{g}");
        }
    }
}

#[test]
fn order_two_outcomes() {
    let z2 = AbelianGroup::elementary(2);
    let data = PointedModularData::new(z2, vec![0, 8, 8, 8]).unwrap();
    assert_eq!(data.order_two_theorem().unwrap(), OrderTwoOutcome::Holds);
    let z4 = AbelianGroup::cyclic(4);
    let data = PointedModularData::new(z4, vec![0, 2, 8, 2]).unwrap();
    assert_eq!(data.order_two_theorem().unwrap(), OrderTwoOutcome::HypothesisNotMet);
}

#[test]
fn four_sector_spins_pick_the_cyclic_group() {
    let spins = [0u8, 2, 8, 2];
    let z4 = discriminate(&AbelianGroup::cyclic(4), &spins).unwrap();
    assert!(z4.admissible);
    assert_eq!(z4.witness, Some(vec![0, 2, 8, 2]));
    let klein = discriminate(&AbelianGroup::elementary(2), &spins).unwrap();
    assert!(!klein.admissible);
    assert_eq!(klein.invalid_quadratic_form, klein.assignments_tried);
}

#[test]
fn y_entries_are_reciprocal() {
    let data = PointedModularData::new(AbelianGroup::cyclic(4), vec![0, 2, 8, 2]).unwrap();
    assert_eq!(data.y_entry(1, 1), 4);
    assert_eq!(data.y_reciprocal_exponent(1, 1), 12);
    assert!(data.bicharacter_nondegenerate());
    assert!(data.radical().is_empty());
}
