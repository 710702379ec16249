//! Published values for `c1 = 5` bundles, checked against the library.

use num::{BigInt, BigRational};
use pnbundles::chowring::{p_functor, rr_h2_minus_h1, ChernVector};
use pnbundles::classifier::filter_chern_records;
use pnbundles::cohomtab::enumerate_spectra;
use pnbundles::monadlab::{lookup, named_bundle_catalog, parse_expr};

fn sixth(k: i64, c4: i64) -> BigRational {
    BigRational::new(BigInt::from(k - c4), BigInt::from(6))
}

#[test]
fn h2_minus_h1_closed_forms() {
    // (c2, c3) -> k with h^2(E(-3)) - h^1(E(-3)) = (k - c4)/6
    let forms = [(10, 10, 5), (11, 11, 2), (12, 12, 0), (11, 13, 9), (12, 14, 7), (12, 16, 14)];
    for (c2, c3, k) in forms {
        for c4 in -24..=40 {
            assert_eq!(rr_h2_minus_h1(c2, c3, c4).value, sixth(k, c4), "({c2},{c3},{c4})");
        }
    }
}

#[test]
fn forced_fourth_classes() {
    // c3 = c2 = 10 with h^1(E(-3)) = h^2(E(-3)) = 0 forces c4 = 5
    assert_eq!(rr_h2_minus_h1(10, 10, 5).value, sixth(0, 0));
    // (11, 13) with h^1(E(-3)) = 0: c4 = 9 gives h^2 = 0, and c4 = 13 is impossible
    assert_eq!(rr_h2_minus_h1(11, 13, 9).value, sixth(0, 0));
    assert!(rr_h2_minus_h1(11, 13, 13).value < sixth(0, 0));
    // (12, 16) with h^2(E(-3)) = 1 gives c4 = 8
    assert_eq!(rr_h2_minus_h1(12, 16, 8).value, BigRational::from_integer(BigInt::from(1)));
}

#[test]
fn split_and_display_constructions_on_p4() {
    let cat = named_bundle_catalog(4).unwrap();
    let want = [
        ("5O(1)", 5, [10, 10, 5]),
        ("4O(1)+T(-1)", 8, [11, 15, 16]),
        ("2O(1)+Om(1,2)", 6, [11, 13, 9]),
        ("3O(1)+2T(-1)", 11, [12, 20, 28]),
        ("O(1)+T(-1)+Om(1,2)", 9, [12, 18, 21]),
        ("2O(1)+Om(2,3)", 8, [12, 18, 15]),
        ("O(1)+E0", 6, [12, 16, 8]),
        ("omega321", 6, [12, 16, 8]),
    ];
    for (name, rank, c) in want {
        let e = lookup(&cat, name).unwrap_or_else(|| panic!("{name} missing"));
        let expect = ChernVector::from_ints(4, rank, &[5, c[0], c[1], c[2]]).unwrap();
        assert_eq!(e.chern, expect, "{name}");
    }
}

#[test]
fn classified_triples_have_the_listed_constructions() {
    let recs = filter_chern_records(4, 0..=12).unwrap();
    let mut got: Vec<((i64, i64, i64), String)> = recs.iter().map(|r| (r.triple(), r.construction.clone())).collect();
    got.sort();
    let mut want: Vec<((i64, i64, i64), String)> = [
        ((10, 10, 5), "5O(1)"),
        ((11, 13, 9), "2O(1)+Om(1,2)"),
        ((11, 15, 16), "4O(1)+T(-1)"),
        ((12, 16, 8), "O(1)+E0"),
        ((12, 16, 8), "omega321"),
        ((12, 18, 15), "2O(1)+Om(2,3)"),
        ((12, 18, 21), "O(1)+T(-1)+Om(1,2)"),
        ((12, 20, 28), "3O(1)+2T(-1)"),
    ]
    .into_iter()
    .map(|(t, s)| (t, s.to_string()))
    .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn p_functor_low_degrees() {
    // c1(P(E)) = c1(E), c2(P(E)) = c1^2 - c2
    let e = ChernVector::from_ints(4, 6, &[5, 12, 16, 8]).unwrap();
    let p = p_functor(&e, 15);
    assert_eq!(p.c(1), BigInt::from(5));
    assert_eq!(p.c(2), BigInt::from(13));
}

#[test]
fn dual_pairs_in_the_main_list() {
    // Ω^4(5) = P(Ω^1(2)) on P^6, with h^0(Ω^1(2)) = dim Λ^2 k^7 = 21
    let om12 = parse_expr("Om(1,2)").unwrap().chern(6).unwrap();
    assert_eq!(p_functor(&om12, 21), parse_expr("Om(4,5)").unwrap().chern(6).unwrap());

    for (n, a, b) in [(4, "omega321", "omega21-kernel"), (5, "omega42", "omega2-kernel"), (6, "Om(1,2)", "Om(4,5)")] {
        let cat = named_bundle_catalog(n).unwrap();
        let (a, b) = (lookup(&cat, a).unwrap(), lookup(&cat, b).unwrap());
        assert_eq!(a.p_partner.as_ref(), Some(&b.chern), "P({}) on P^{n}", a.name);
    }
}

#[test]
fn p_of_o5_rank() {
    for n in 4..=6usize {
        let cat = named_bundle_catalog(n).unwrap();
        let e = lookup(&cat, "P(O(5))").unwrap();
        let h0_o5: i64 = (1..=5).map(|i| n as i64 + i).product::<i64>() / 120;
        assert_eq!(e.chern.rank(), h0_o5 - 1);
    }
}

#[test]
fn spectra_for_c2_12_c3_16() {
    let got: Vec<Vec<i64>> = enumerate_spectra(4, 4, false).unwrap().iter().map(|s| s.values().to_vec()).collect();
    assert_eq!(got, vec![vec![0, -1, -1, -2], vec![-1, -1, -1, -1]]);
}
