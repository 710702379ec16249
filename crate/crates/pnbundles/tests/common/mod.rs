//! Independent oracles shared by the integration tests. Nothing here calls
//! the code it is used to check.

#![allow(dead_code)]

use num::{BigInt, BigRational, Zero};
use pnbundles::exterior::Multivector;
use pnbundles::linalg::Matrix;
use rand::Rng;

pub fn choose(a: i128, k: i128) -> i128 {
    if k < 0 || a < k || a < 0 {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (a - i) / (i + 1);
    }
    r
}

/// `dim S^k` of polynomials in `n+1` variables.
pub fn sdim(n: usize, k: i64) -> i128 {
    if k < 0 {
        0
    } else {
        choose(n as i128 + k as i128, n as i128)
    }
}

/// `h^0(Ω^p(l))` as the kernel of the first Koszul map, using exactness of
/// the Koszul complex of the polynomial ring in positive degree.
pub fn koszul_h0(n: usize, p: usize, l: i64) -> i128 {
    if p == 0 {
        return sdim(n, l);
    }
    if l <= 0 {
        return 0;
    }
    (0..=p)
        .map(|j| {
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * choose(n as i128 + 1, (p - j) as i128) * sdim(n, l - p as i64 + j as i64)
        })
        .sum()
}

/// `h^q(Ω^p(l))` on `P^n`: `h^0` from the Koszul complex, `h^n` by Serre
/// duality, middle degrees from the Euler sequence
/// `0 -> Ω^p(l) -> Λ^p V ⊗ O(l-p) -> Ω^{p-1}(l) -> 0`.
pub fn bott_oracle(n: usize, p: usize, l: i64) -> Vec<i128> {
    let mut h = vec![0i128; n + 1];
    h[0] = koszul_h0(n, p, l);
    if n == 0 {
        return h;
    }
    h[n] += koszul_h0(n, n - p, -l);
    if n >= 2 && p >= 1 {
        let prev = bott_oracle(n, p - 1, l);
        h[1] = prev[0] - choose(n as i128 + 1, p as i128) * sdim(n, l - p as i64) + h[0];
        for q in 2..n {
            h[q] = prev[q - 1];
        }
    }
    h
}

/// Direct rank computation of `Λ^p V ⊗ S^k -> Λ^{p-1} V ⊗ S^{k+1}` for
/// small cases; returns the kernel dimension.
pub fn koszul_kernel_by_rank(n: usize, p: usize, k: i64) -> usize {
    let vars = n + 1;
    let monos = |deg: i64| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if deg < 0 {
            return out;
        }
        fn rec(vars: usize, left: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                let mut e = vec![0; vars];
                for &i in cur.iter() {
                    e[i] += 1;
                }
                out.push(e);
                return;
            }
            for i in start..vars {
                cur.push(i);
                rec(vars, left - 1, i, cur, out);
                cur.pop();
            }
        }
        rec(vars, deg as usize, 0, &mut Vec::new(), &mut out);
        out
    };
    let subsets = |size: usize| -> Vec<u32> { (0u32..1 << vars).filter(|m| m.count_ones() as usize == size).collect() };
    let src_w = subsets(p);
    let tgt_w = subsets(p - 1);
    let src_m = monos(k);
    let tgt_m = monos(k + 1);
    let mut m = Matrix::zeros(tgt_w.len() * tgt_m.len().max(1), src_w.len() * src_m.len());
    for (a, &w) in src_w.iter().enumerate() {
        for (b, mono) in src_m.iter().enumerate() {
            let col = a * src_m.len() + b;
            let mut pos = 0;
            for i in 0..vars {
                if w & (1 << i) == 0 {
                    continue;
                }
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                pos += 1;
                let w2 = w & !(1 << i);
                let mut m2 = mono.clone();
                m2[i] += 1;
                let r = tgt_w.iter().position(|&x| x == w2).unwrap() * tgt_m.len()
                    + tgt_m.iter().position(|x| *x == m2).unwrap();
                m.set(r, col, BigRational::from_integer(BigInt::from(sign)));
            }
        }
    }
    src_w.len() * src_m.len() - m.rank()
}

/// Truncated inverse of a power series with constant term 1.
pub fn series_inverse(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut b = vec![BigInt::from(1)];
    for k in 1..=n {
        let mut s = BigInt::zero();
        for i in 1..=k.min(a.len() - 1) {
            s += &a[i] * &b[k - i];
        }
        b.push(-s);
    }
    b
}

/// Rank of the skew matrix with entries `ω_{ij}`, built from the blade
/// coefficients directly.
pub fn skew_rank_oracle(w: &Multivector) -> usize {
    let d = w.dim();
    let mut m = Matrix::zeros(d, d);
    for (idx, x) in w.terms() {
        let (i, j) = (idx[0], idx[1]);
        m.set(i, j, x.clone());
        m.set(j, i, -x);
    }
    m.rank()
}

pub fn rand_vector<R: Rng>(rng: &mut R, dim: usize, covariant: bool) -> Multivector {
    let coords: Vec<BigRational> =
        (0..dim).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3)))).collect();
    Multivector::vector(&coords, covariant).unwrap()
}

/// Sum of `k` random decomposable 2-vectors.
pub fn rand_two_vector<R: Rng>(rng: &mut R, dim: usize, k: usize) -> Multivector {
    let mut acc = Multivector::zero(dim, 2, false);
    for _ in 0..k {
        let a = rand_vector(rng, dim, false);
        let b = rand_vector(rng, dim, false);
        acc = acc.add(&a.wedge(&b).unwrap()).unwrap();
    }
    acc
}

/// Random element of `Λ^grade` with small integer coefficients.
pub fn rand_multivector<R: Rng>(rng: &mut R, dim: usize, grade: usize, covariant: bool) -> Multivector {
    let n = choose(dim as i128, grade as i128) as usize;
    let coords: Vec<BigRational> =
        (0..n).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-4i64..=4)))).collect();
    Multivector::from_coords(dim, grade, covariant, &coords).unwrap()
}
