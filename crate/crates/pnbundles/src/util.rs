use num::{BigInt, BigRational, One, Signed, Zero};

pub(crate) fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

pub(crate) fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
pub(crate) fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Generalized binomial coefficient `C(a, k)` for any integer `a` and `k >= 0`;
/// zero for `k < 0`.
pub fn binomial(a: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binom(a: i64, k: i64) -> BigInt {
    binomial(&bi(a), k)
}

/// `C(a, k)` with the combinatorial convention: zero unless `0 <= k <= a`.
pub fn choose(a: i64, k: i64) -> BigInt {
    if a < 0 || k < 0 || k > a {
        BigInt::zero()
    } else {
        binom(a, k)
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn rat_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", -x.numer(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom(6, 2), bi(15));
        assert_eq!(binom(-1, 3), bi(-1));
        assert_eq!(binom(-3, 2), bi(6));
        assert_eq!(binom(2, 5), bi(0));
        assert_eq!(choose(-3, 2), bi(0));
        assert_eq!(binom(4, -1), bi(0));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(rat_to_string(&ratio(-3, 6)), "-1/2");
        assert_eq!(rat_to_string(&rat(7)), "7");
    }
}
