//! Cohomology dimensions that follow from closed formulas: line bundles and
//! twisted differentials `Ω^p(l)` on `P^n` (Bott's formula), the spectrum
//! description of intermediate cohomology of stable rank 3 bundles on `P^3`,
//! and a handful of numerical identities used in the classification.

use std::fmt;

use num::{BigInt, Integer, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::util::{bi, choose};

/// Dimension of `H^q` at one twist, or an explicit marker when the data at
/// hand does not determine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Known(BigInt),
    Undetermined,
}

impl Entry {
    pub fn known(&self) -> Option<&BigInt> {
        match self {
            Entry::Known(x) => Some(x),
            Entry::Undetermined => None,
        }
    }

    fn add(&self, other: &Entry) -> Entry {
        match (self, other) {
            (Entry::Known(a), Entry::Known(b)) => Entry::Known(a + b),
            _ => Entry::Undetermined,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Known(x) => write!(f, "{x}"),
            Entry::Undetermined => write!(f, "?"),
        }
    }
}

/// `h^q(F(l))` for `0 <= q <= n` and `l` in a window `[lmin, lmax]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    n: usize,
    lmin: i64,
    lmax: i64,
    rows: Vec<Vec<Entry>>,
}

impl CohomologyTable {
    pub fn from_fn(n: usize, lmin: i64, lmax: i64, mut f: impl FnMut(i64) -> Vec<Entry>) -> Result<Self> {
        if lmin > lmax {
            return invalid(format!("empty window {lmin}:{lmax}"));
        }
        let mut rows = Vec::new();
        for l in lmin..=lmax {
            let r = f(l);
            if r.len() != n + 1 {
                return invalid(format!("row for twist {l} has {} entries, expected {}", r.len(), n + 1));
            }
            if r.iter().any(|e| e.known().is_some_and(|x| x.is_negative())) {
                return invalid(format!("negative cohomology dimension at twist {l}"));
            }
            rows.push(r);
        }
        Ok(CohomologyTable { n, lmin, lmax, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lmin, self.lmax)
    }

    /// `None` outside the window.
    pub fn get(&self, q: usize, l: i64) -> Option<&Entry> {
        if l < self.lmin || l > self.lmax || q > self.n {
            return None;
        }
        Some(&self.rows[(l - self.lmin) as usize][q])
    }

    pub fn row(&self, l: i64) -> Option<&[Entry]> {
        (self.lmin..=self.lmax).contains(&l).then(|| self.rows[(l - self.lmin) as usize].as_slice())
    }

    /// `Σ (-1)^q h^q` when every entry of the row is known.
    pub fn chi(&self, l: i64) -> Option<BigInt> {
        let row = self.row(l)?;
        let mut s = BigInt::zero();
        for (q, e) in row.iter().enumerate() {
            let x = e.known()?;
            if q % 2 == 0 {
                s += x;
            } else {
                s -= x;
            }
        }
        Some(s)
    }

    /// Entrywise sum, for direct sums of bundles.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.n, self.lmin, self.lmax) != (other.n, other.lmin, other.lmax) {
            return invalid("adding cohomology tables with different shapes");
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        Ok(CohomologyTable { rows, ..self.clone() })
    }

    pub fn is_fully_determined(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.known().is_some())
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["l".to_string()];
        header.extend((0..=self.n).map(|q| format!("h{q}")));
        cells.push(header);
        for l in self.lmin..=self.lmax {
            let mut r = vec![l.to_string()];
            r.extend(self.rows[(l - self.lmin) as usize].iter().map(|e| e.to_string()));
            cells.push(r);
        }
        let widths: Vec<usize> =
            (0..cells[0].len()).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for r in &cells {
            let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}

fn known_row(v: Vec<BigInt>) -> Vec<Entry> {
    v.into_iter().map(Entry::Known).collect()
}

/// `h^q(O_{P^n}(a))` for `q = 0..=n`.
pub fn line_cohomology(n: usize, a: i64) -> Vec<BigInt> {
    let ni = n as i64;
    let mut out = vec![BigInt::zero(); n + 1];
    if a >= 0 {
        out[0] = choose(a + ni, ni);
    }
    if a < -ni {
        out[n] = choose(-a - 1, ni);
    }
    out
}

pub fn line_table(n: usize, a: i64, lmin: i64, lmax: i64) -> Result<CohomologyTable> {
    CohomologyTable::from_fn(n, lmin, lmax, |l| known_row(line_cohomology(n, a + l)))
}

/// `h^q(Ω^p_{P^n}(l))` for `q = 0..=n`, by Bott's formula.
pub fn bott(n: usize, p: usize, l: i64) -> Result<Vec<BigInt>> {
    if p > n {
        return invalid(format!("Ω^{p} does not exist on P^{n}"));
    }
    let (ni, pi) = (n as i64, p as i64);
    let mut out = vec![BigInt::zero(); n + 1];
    if l > pi {
        out[0] = choose(l + ni - pi, l) * choose(l - 1, pi);
    }
    if l == 0 {
        out[p] = bi(1);
    }
    if l < pi - ni {
        out[n] = choose(pi - l, -l) * choose(-l - 1, ni - pi);
    }
    Ok(out)
}

pub fn bott_table(n: usize, p: usize, t: i64, lmin: i64, lmax: i64) -> Result<CohomologyTable> {
    bott(n, p, 0)?;
    CohomologyTable::from_fn(n, lmin, lmax, |l| known_row(bott(n, p, t + l).expect("p checked")))
}

/// Weakly decreasing integer sequence `k_1 >= .. >= k_m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spectrum(Vec<i64>);

impl Spectrum {
    pub fn new(k: Vec<i64>) -> Result<Self> {
        if k.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("spectrum {k:?} is not weakly decreasing"));
        }
        Ok(Spectrum(k))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    fn contains(&self, k: i64) -> bool {
        self.0.contains(&k)
    }

    fn count(&self, k: i64) -> usize {
        self.0.iter().filter(|&&x| x == k).count()
    }

    /// If `k >= 0` occurs then `0, 1, .., k` occur.
    pub fn nonnegative_part_connected(&self) -> bool {
        self.0.iter().filter(|&&k| k >= 0).all(|&k| (0..=k).all(|j| self.contains(j)))
    }

    /// If `k <= -1` occurs then `-1, -2, .., k` occur.
    pub fn negative_part_connected(&self) -> bool {
        self.0.iter().filter(|&&k| k <= -1).all(|&k| (k..=-1).all(|j| self.contains(j)))
    }

    /// If `0` does not occur then `-1` occurs at least twice.
    pub fn minus_one_doubled_without_zero(&self) -> bool {
        self.contains(0) || self.count(-1) >= 2
    }

    /// Shape test for an unstable plane: some `2 <= i <= m-1` (1-based) with
    /// `-1 >= k_{i-1} > k_i > k_{i+1}`. Returns the plane's order `-k_m` and
    /// whether the tail `k_{i+1} > .. > k_m` is strictly decreasing as it
    /// must be.
    pub fn unstable_plane_shape(&self) -> Option<(i64, bool)> {
        let k = &self.0;
        let m = k.len();
        (1..m.saturating_sub(1))
            .find(|&i| -1 >= k[i - 1] && k[i - 1] > k[i] && k[i] > k[i + 1])
            .map(|i| {
                let tail_ok = k[i + 1..].windows(2).all(|w| w[0] > w[1]);
                (-k[m - 1], tail_ok)
            })
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `h^1(G(l)) = Σ max(k_i + l + 2, 0)`, valid for `l <= -1`.
pub fn spectrum_h1(s: &Spectrum, l: i64) -> Result<BigInt> {
    if l > -1 {
        return Err(Error::OutOfRange(format!("h^1 from the spectrum needs l <= -1, got {l}")));
    }
    Ok(bi(s.0.iter().map(|k| (k + l + 2).max(0)).sum()))
}

/// `h^2(G(l)) = Σ max(-k_i - l - 2, 0)`, valid for `l >= -2`.
pub fn spectrum_h2(s: &Spectrum, l: i64) -> Result<BigInt> {
    if l < -2 {
        return Err(Error::OutOfRange(format!("h^2 from the spectrum needs l >= -2, got {l}")));
    }
    Ok(bi(s.0.iter().map(|k| (-k - l - 2).max(0)).sum()))
}

/// Spectra excluded for globally generated `G(2)` with `2 <= c_2(G) <= 4`.
pub const EXCLUDED_SPECTRA: [&[i64]; 4] = [&[1, 0, -1], &[0, -1, -2, -2], &[1, 0, -1, -2], &[1, 0, -1, -1]];

/// All admissible spectra of a stable rank 3 bundle `G` with `c_1(G) = -1`,
/// `c_2(G) = c2g`, `c_3(G) = c3g`, and `G(2)` globally generated: length
/// `c2g`, sum `-(c3g + c2g)/2`, entries in `[-2, 1]`, the connectedness
/// properties, minus the excluded list. With `nonpositive` the extra
/// condition `k_1 <= 0` is imposed. Lexicographically decreasing order.
pub fn enumerate_spectra(c2g: i64, c3g: i64, nonpositive: bool) -> Result<Vec<Spectrum>> {
    if !(1..=4).contains(&c2g) {
        return Err(Error::OutOfRange(format!("c2(G) = {c2g} outside 1..=4")));
    }
    if (c3g + c2g).is_odd() {
        return invalid(format!("c3(G) + c2(G) = {} is odd", c3g + c2g));
    }
    let target = -(c3g + c2g) / 2;
    let m = c2g as usize;
    let top = if nonpositive { 0 } else { 1 };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(cur: &mut Vec<i64>, m: usize, hi: i64, target: i64, out: &mut Vec<Spectrum>) {
        if cur.len() == m {
            if cur.iter().sum::<i64>() == target {
                out.push(Spectrum(cur.clone()));
            }
            return;
        }
        for k in (-2..=hi).rev() {
            cur.push(k);
            rec(cur, m, k, target, out);
            cur.pop();
        }
    }
    rec(&mut cur, m, top, target, &mut out);
    out.retain(|s| {
        s.nonnegative_part_connected()
            && s.negative_part_connected()
            && s.minus_one_doubled_without_zero()
            && !EXCLUDED_SPECTRA.contains(&s.0.as_slice())
    });
    Ok(out)
}

/// `h^1(F(-2))` and `h^1(F(-1))` for a globally generated `F` on `P^3` with
/// `c_1 = 5`, `H^0(F(-2)) = 0`, `H^i(F^∨) = 0` for `i = 0, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Values {
    pub h1_fm2: BigInt,
    pub h1_fm1: BigInt,
    /// Both values non-negative.
    pub consistent: bool,
}

pub fn h1_formulas(c2: i64, c3: i64, h0_fm1: i64) -> Result<H1Values> {
    if (c3 - c2).is_odd() {
        return invalid(format!("parity: c3 = {c3} and c2 = {c2} differ mod 2"));
    }
    let h1_fm2 = bi((5 * (c2 - 8) - c3) / 2);
    let h1_fm1 = bi((7 * (c2 - 10) - c3) / 2 + h0_fm1);
    let consistent = !h1_fm2.is_negative() && !h1_fm1.is_negative();
    Ok(H1Values { h1_fm2, h1_fm1, consistent })
}

/// Upper bound `max((c3 - 7)/2, 1)` for `h^0(F(-1))` when `c_2 = 11`.
pub fn h0fm1_bound_c2_11(c3: i64) -> Result<i64> {
    if c3.is_even() {
        return invalid(format!("c3 = {c3} must be odd when c1 = 5, c2 = 11"));
    }
    Ok(((c3 - 7) / 2).max(1))
}

/// Bilinear map bound: if `A -> Hom(B, C)` is injective and every nonzero
/// image has rank at least `r`, then `a <= (b - r + 1)(c - r + 1)`. Returns
/// whether the inequality holds.
pub fn bilinear_map_bound(a: i64, b: i64, c: i64, r: i64) -> Result<bool> {
    if r < 1 || r > b.min(c) {
        return Err(Error::OutOfRange(format!("rank bound r = {r} outside 1..={}", b.min(c))));
    }
    Ok(a <= (b - r + 1) * (c - r + 1))
}

/// For the kernel `K` of an epimorphism `⊕ O(-d_i) -> O` on `P^n`, the least
/// `l` with `K(l)` globally generated: `d_{n-1} + d_n` for sorted degrees.
pub fn koszul_gg_threshold(n: usize, degrees: &[i64]) -> Result<i64> {
    if degrees.len() != n + 1 {
        return invalid(format!("need {} degrees on P^{n}, got {}", n + 1, degrees.len()));
    }
    if n == 0 || degrees.iter().any(|&d| d <= 0) {
        return invalid("degrees must be positive and n >= 1");
    }
    let mut d = degrees.to_vec();
    d.sort_unstable();
    Ok(d[n - 1] + d[n])
}

pub fn koszul_kernel_gg(n: usize, degrees: &[i64], l: i64) -> Result<bool> {
    Ok(l >= koszul_gg_threshold(n, degrees)?)
}
