mod common;

use num::BigInt;
use pnbundles::chowring::euler_characteristic;
use pnbundles::cohomtab::{bott, line_cohomology};
use pnbundles::monadlab::{omega_class, BundleExpr};

#[test]
fn koszul_alternating_sum_matches_direct_kernel_rank() {
    for n in 1..=3usize {
        for p in 1..=n {
            for l in 1..=4i64 {
                let k = l - p as i64;
                if k < 0 {
                    continue;
                }
                let direct = common::koszul_kernel_by_rank(n, p, k);
                assert_eq!(direct as i128, common::koszul_h0(n, p, l), "n={n} p={p} l={l}");
            }
        }
    }
}

#[test]
fn oracle_agrees_with_library_on_wide_range() {
    for n in 1..=6usize {
        for p in 0..=n {
            for l in -14..=14i64 {
                let got: Vec<i128> = bott(n, p, l).unwrap().iter().map(|x| i128::try_from(x).unwrap()).collect();
                assert_eq!(got, common::bott_oracle(n, p, l), "Ω^{p}({l}) on P^{n}");
            }
        }
    }
}

#[test]
fn extreme_differentials_are_line_bundles() {
    // Ω^0 = O and Ω^n = O(-n-1)
    for n in 1..=6usize {
        for l in -10..=10i64 {
            assert_eq!(bott(n, 0, l).unwrap(), line_cohomology(n, l));
            assert_eq!(bott(n, n, l).unwrap(), line_cohomology(n, l - n as i64 - 1));
        }
    }
}

#[test]
fn serre_duality_and_hrr() {
    for n in 1..=6usize {
        for p in 0..=n {
            let class = omega_class(n, p).unwrap();
            for l in -8..=8i64 {
                let h = bott(n, p, l).unwrap();
                let dual = bott(n, n - p, -l).unwrap();
                for q in 0..=n {
                    assert_eq!(h[q], dual[n - q], "n={n} p={p} l={l} q={q}");
                }
                let alt: BigInt = h.iter().enumerate().map(|(q, x)| if q % 2 == 0 { x.clone() } else { -x }).sum();
                assert_eq!(alt, euler_characteristic(&class, l).unwrap());
            }
        }
    }
}

#[test]
fn tangent_bundle_cohomology() {
    // Euler sequence twisted by m = l-1: h^0(T(-1)(m)) = (n+1) h^0(O(m)) - h^0(O(m-1))
    for n in 2..=6usize {
        for l in 0..=5i64 {
            let want = common::sdim(n, l - 1) * (n as i128 + 1) - common::sdim(n, l - 2);
            let got = BundleExpr::TangentTwist.cohomology_at(n, l - 1).unwrap()[0].known().cloned().unwrap();
            assert_eq!(i128::try_from(&got).unwrap(), want, "n={n} l={l}");
        }
    }
}
