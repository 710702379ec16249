//! Symbolic bundles on `P^n` built from line bundles, twisted differentials,
//! `T(-1)` and `P(O(b))`, and bounded complexes of them.
//!
//! Ranks and Chern classes are additive over complexes. Cohomology tables of
//! a cohomology bundle are propagated through the long exact sequences of
//! the short exact pieces of the complex; a dimension is reported as
//! [`Entry::Undetermined`] whenever it depends on the rank of a connecting
//! map that vanishing alone does not pin down.

use std::fmt;

use num::{BigInt, Signed, ToPrimitive, Zero};

use crate::chowring::{
    chern_div, chern_dual, chern_mul, chern_twist, euler_characteristic, p_functor, ChernVector,
};
use crate::cohomtab::{bott, line_cohomology, CohomologyTable, Entry};
use crate::error::{invalid, Error, Result};
use crate::util::choose;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    /// `O(a)`.
    Line(i64),
    /// `Ω^p(t)`.
    Omega(usize, i64),
    /// `T(-1)`.
    TangentTwist,
    Dual(Box<BundleExpr>),
    Twist(Box<BundleExpr>, i64),
    Sum(Vec<BundleExpr>),
    /// `P(O(b))`, the dual of the kernel of `H^0(O(b)) ⊗ O -> O(b)`.
    PofLine(i64),
}

impl BundleExpr {
    pub fn line(a: i64) -> Self {
        BundleExpr::Line(a)
    }

    pub fn omega(p: usize, t: i64) -> Self {
        BundleExpr::Omega(p, t)
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn twist(self, t: i64) -> Self {
        BundleExpr::Twist(Box::new(self), t)
    }

    pub fn times(self, k: usize) -> Self {
        BundleExpr::Sum(vec![self; k])
    }

    pub fn plus(self, other: BundleExpr) -> Self {
        let mut v = match self {
            BundleExpr::Sum(v) => v,
            e => vec![e],
        };
        match other {
            BundleExpr::Sum(w) => v.extend(w),
            e => v.push(e),
        }
        BundleExpr::Sum(v)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            BundleExpr::Omega(p, _) if *p > n => invalid(format!("Ω^{p} does not exist on P^{n}")),
            BundleExpr::PofLine(b) if *b < 0 => invalid(format!("P(O({b})) needs b >= 0")),
            BundleExpr::Dual(e) | BundleExpr::Twist(e, _) => e.validate(n),
            BundleExpr::Sum(v) => v.iter().try_for_each(|e| e.validate(n)),
            _ => Ok(()),
        }
    }

    pub fn rank(&self, n: usize) -> Result<i64> {
        self.validate(n)?;
        Ok(self.rank_unchecked(n))
    }

    fn rank_unchecked(&self, n: usize) -> i64 {
        match self {
            BundleExpr::Line(_) => 1,
            BundleExpr::Omega(p, _) => to_i64(&choose(n as i64, *p as i64)),
            BundleExpr::TangentTwist => n as i64,
            BundleExpr::Dual(e) | BundleExpr::Twist(e, _) => e.rank_unchecked(n),
            BundleExpr::Sum(v) => v.iter().map(|e| e.rank_unchecked(n)).sum(),
            BundleExpr::PofLine(b) => to_i64(&choose(n as i64 + b, *b)) - 1,
        }
    }

    pub fn chern(&self, n: usize) -> Result<ChernVector> {
        self.validate(n)?;
        self.chern_unchecked(n)
    }

    fn chern_unchecked(&self, n: usize) -> Result<ChernVector> {
        Ok(match self {
            BundleExpr::Line(a) => ChernVector::line(n, *a),
            BundleExpr::Omega(p, t) => chern_twist(&omega_class(n, *p)?, *t),
            // Euler sequence 0 -> O(-1) -> (n+1) O -> T(-1) -> 0
            BundleExpr::TangentTwist => {
                chern_div(&ChernVector::free(n, n as i64 + 1), &ChernVector::line(n, -1))?
            }
            BundleExpr::Dual(e) => chern_dual(&e.chern_unchecked(n)?),
            BundleExpr::Twist(e, t) => chern_twist(&e.chern_unchecked(n)?, *t),
            BundleExpr::Sum(v) => {
                let mut acc = ChernVector::trivial(n);
                for e in v {
                    acc = chern_mul(&acc, &e.chern_unchecked(n)?)?;
                }
                acc
            }
            // 0 -> O(-b) -> H^0(O(b))^∨ ⊗ O -> P(O(b)) -> 0
            BundleExpr::PofLine(b) => {
                let big_n = to_i64(&choose(n as i64 + b, *b));
                chern_div(&ChernVector::free(n, big_n), &ChernVector::line(n, -b))?
            }
        })
    }

    /// `h^q(E(l))` for `q = 0..=n`.
    pub fn cohomology_at(&self, n: usize, l: i64) -> Result<Vec<Entry>> {
        self.validate(n)?;
        Ok(self.cohomology_unchecked(n, l))
    }

    fn cohomology_unchecked(&self, n: usize, l: i64) -> Vec<Entry> {
        let known = |v: Vec<BigInt>| v.into_iter().map(Entry::Known).collect::<Vec<_>>();
        match self {
            BundleExpr::Line(a) => known(line_cohomology(n, a + l)),
            BundleExpr::Omega(p, t) => known(bott(n, *p, t + l).expect("validated")),
            // T(-1) = Ω^{n-1}(n)
            BundleExpr::TangentTwist => known(bott(n, n - 1, n as i64 + l).expect("n >= 1")),
            // Serre duality: h^q(E^∨(l)) = h^{n-q}(E(-l-n-1))
            BundleExpr::Dual(e) => {
                let mut v = e.cohomology_unchecked(n, -l - n as i64 - 1);
                v.reverse();
                v
            }
            BundleExpr::Twist(e, t) => e.cohomology_unchecked(n, l + t),
            BundleExpr::Sum(v) => {
                let mut acc = vec![Entry::Known(BigInt::zero()); n + 1];
                for e in v {
                    let r = e.cohomology_unchecked(n, l);
                    acc = acc
                        .iter()
                        .zip(&r)
                        .map(|(a, b)| match (a, b) {
                            (Entry::Known(x), Entry::Known(y)) => Entry::Known(x + y),
                            _ => Entry::Undetermined,
                        })
                        .collect();
                }
                acc
            }
            BundleExpr::PofLine(b) => pofline_cohomology(n, *b, l),
        }
    }

    pub fn table(&self, n: usize, lmin: i64, lmax: i64) -> Result<CohomologyTable> {
        self.validate(n)?;
        CohomologyTable::from_fn(n, lmin, lmax, |l| self.cohomology_unchecked(n, l))
    }
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("rank fits in i64")
}

/// Class of `Ω^p` from the Koszul complex:
/// `[Ω^p] = Σ_{j<=p} (-1)^{p-j} C(n+1, j) [O(-j)]`.
pub fn omega_class(n: usize, p: usize) -> Result<ChernVector> {
    if p > n {
        return invalid(format!("Ω^{p} does not exist on P^{n}"));
    }
    let mut acc = ChernVector::trivial(n);
    for j in 0..=p {
        let mult = to_i64(&choose(n as i64 + 1, j as i64));
        let mut term = ChernVector::trivial(n);
        for _ in 0..mult {
            term = chern_mul(&term, &ChernVector::line(n, -(j as i64)))?;
        }
        acc = if (p - j).is_multiple_of(2) { chern_mul(&acc, &term)? } else { chern_div(&acc, &term)? };
    }
    Ok(acc)
}

/// Cohomology of `P(O(b))(l)` from `0 -> O(l-b) -> N O(l) -> P(O(b))(l) -> 0`.
/// On `H^n` the map is Serre dual to multiplication `S_b ⊗ S_m -> S_{m+b}`
/// with `m = -l-n-1`, which is onto for `m >= 0`.
fn pofline_cohomology(n: usize, b: i64, l: i64) -> Vec<Entry> {
    if n < 2 {
        return vec![Entry::Undetermined; n + 1];
    }
    let big_n = choose(n as i64 + b, b);
    let o_l = line_cohomology(n, l);
    let o_lb = line_cohomology(n, l - b);
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] = &big_n * &o_l[0] - &o_lb[0];
    if l < -(n as i64) {
        out[n] = &big_n * &o_l[n] - &o_lb[n];
    } else {
        out[n - 1] = o_lb[n].clone();
    }
    out.into_iter().map(Entry::Known).collect()
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Line(a) => write!(f, "O({a})"),
            BundleExpr::Omega(p, t) => write!(f, "Om({p},{t})"),
            BundleExpr::TangentTwist => write!(f, "T(-1)"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Twist(e, t) => write!(f, "twist({e},{t})"),
            BundleExpr::PofLine(b) => write!(f, "P(O({b}))"),
            BundleExpr::Sum(v) => {
                // runs of equal summands print as k*E
                let mut parts = Vec::new();
                let mut i = 0;
                while i < v.len() {
                    let mut j = i;
                    while j < v.len() && v[j] == v[i] {
                        j += 1;
                    }
                    let k = j - i;
                    let inner = match &v[i] {
                        BundleExpr::Sum(_) => format!("({})", v[i]),
                        e => e.to_string(),
                    };
                    parts.push(if k == 1 { inner } else { format!("{k}*{inner}") });
                    i = j;
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

/// Parses `O(a)`, `Om(p,t)`, `T(-1)`, `P(O(b))`, `dual(E)`, `twist(E,t)`,
/// sums with `+`, multiplicities `k*E` and parentheses.
pub fn parse_expr(s: &str) -> Result<BundleExpr> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { t: toks, i: 0 };
    let e = p.sum()?;
    if p.i != p.t.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser {
    t: Vec<char>,
    i: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        let rest: String = self.t[self.i.min(self.t.len())..].iter().collect();
        Error::Parse(format!("{what} at position {} (remaining: '{rest}')", self.i))
    }

    fn peek(&self) -> Option<char> {
        self.t.get(self.i).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        let cs: Vec<char> = s.chars().collect();
        if self.t[self.i..].starts_with(&cs) {
            self.i += cs.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{s}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.i;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.i += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let s: String = self.t[start..self.i].iter().collect();
        s.parse().map_err(|_| {
            self.i = start;
            self.err("expected an integer")
        })
    }

    fn sum(&mut self) -> Result<BundleExpr> {
        let mut terms = vec![self.term()?];
        while self.eat("+") {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { terms.into_iter().reduce(BundleExpr::plus).unwrap() })
    }

    fn term(&mut self) -> Result<BundleExpr> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.int()?;
            if k < 0 {
                return Err(self.err("negative multiplicity"));
            }
            self.eat("*");
            let a = self.atom()?;
            return Ok(a.times(k as usize));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<BundleExpr> {
        if self.eat("(") {
            let e = self.sum()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("Om(") {
            let p = self.int()?;
            self.expect(",")?;
            let t = self.int()?;
            self.expect(")")?;
            if p < 0 {
                return Err(self.err("negative exterior power"));
            }
            return Ok(BundleExpr::Omega(p as usize, t));
        }
        if self.eat("O(") {
            let a = self.int()?;
            self.expect(")")?;
            return Ok(BundleExpr::Line(a));
        }
        if self.eat("T(") {
            let a = self.int()?;
            self.expect(")")?;
            return Ok(if a == -1 { BundleExpr::TangentTwist } else { BundleExpr::TangentTwist.twist(a + 1) });
        }
        if self.eat("P(O(") {
            let b = self.int()?;
            self.expect("))")?;
            return Ok(BundleExpr::PofLine(b));
        }
        if self.eat("dual(") {
            let e = self.sum()?;
            self.expect(")")?;
            return Ok(e.dual());
        }
        if self.eat("twist(") {
            let e = self.sum()?;
            self.expect(",")?;
            let t = self.int()?;
            self.expect(")")?;
            return Ok(e.twist(t));
        }
        Err(self.err("expected a bundle"))
    }
}

/// Rank, Chern classes and a cohomology table of one expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprData {
    pub rank: i64,
    pub chern: ChernVector,
    pub table: CohomologyTable,
}

pub fn expr_data(e: &BundleExpr, n: usize, lmin: i64, lmax: i64) -> Result<ExprData> {
    Ok(ExprData { rank: e.rank(n)?, chern: e.chern(n)?, table: e.table(n, lmin, lmax)? })
}

/// `E(t)`, folding the twist into lines, differentials and sums.
pub fn twisted(e: &BundleExpr, t: i64) -> BundleExpr {
    match e {
        _ if t == 0 => e.clone(),
        BundleExpr::Line(a) => BundleExpr::Line(a + t),
        BundleExpr::Omega(p, s) => BundleExpr::Omega(*p, s + t),
        BundleExpr::Twist(x, s) if s + t == 0 => (**x).clone(),
        BundleExpr::Twist(x, s) => BundleExpr::Twist(x.clone(), s + t),
        BundleExpr::Sum(v) => BundleExpr::Sum(v.iter().map(|x| twisted(x, t)).collect()),
        other => other.clone().twist(t),
    }
}

/// Which position of the complex holds the bundle of interest. In every
/// case the bundle is the cohomology at degree 0 and its class is
/// `Σ (-1)^d [C^d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// `0 -> C^{-k} -> .. -> C^0 -> E -> 0`.
    LeftResolution,
    /// `0 -> C^{-1} -> C^0 -> C^1 -> 0`, `E` the middle cohomology.
    Monad,
    /// Two terms: `0 -> C^{-1} -> C^0 -> E -> 0` or `0 -> E -> C^0 -> C^1 -> 0`.
    ShortExact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexExpr {
    pub kind: ComplexKind,
    /// `(degree, term)` with contiguous increasing degrees.
    pub terms: Vec<(i64, BundleExpr)>,
}

impl ComplexExpr {
    pub fn new(kind: ComplexKind, terms: Vec<(i64, BundleExpr)>) -> Result<Self> {
        let cx = ComplexExpr { kind, terms };
        cx.validate_shape()?;
        Ok(cx)
    }

    /// `0 -> A -> B -> E -> 0`.
    pub fn cokernel(a: BundleExpr, b: BundleExpr) -> Self {
        ComplexExpr { kind: ComplexKind::ShortExact, terms: vec![(-1, a), (0, b)] }
    }

    /// `0 -> E -> B -> C -> 0`.
    pub fn kernel(b: BundleExpr, c: BundleExpr) -> Self {
        ComplexExpr { kind: ComplexKind::ShortExact, terms: vec![(0, b), (1, c)] }
    }

    pub fn monad(a: BundleExpr, b: BundleExpr, c: BundleExpr) -> Self {
        ComplexExpr { kind: ComplexKind::Monad, terms: vec![(-1, a), (0, b), (1, c)] }
    }

    pub fn single(e: BundleExpr) -> Self {
        ComplexExpr { kind: ComplexKind::LeftResolution, terms: vec![(0, e)] }
    }

    /// Twists every term, hence the cohomology bundle, by `O(t)`.
    pub fn twist(&self, t: i64) -> Self {
        ComplexExpr {
            kind: self.kind,
            terms: self.terms.iter().map(|(d, e)| (*d, twisted(e, t))).collect(),
        }
    }

    fn validate_shape(&self) -> Result<()> {
        if self.terms.is_empty() {
            return invalid("empty complex");
        }
        if self.terms.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
            return invalid("complex degrees must be contiguous and increasing");
        }
        let degs: Vec<i64> = self.terms.iter().map(|t| t.0).collect();
        let ok = match self.kind {
            ComplexKind::Monad => degs == [-1, 0, 1],
            ComplexKind::ShortExact => degs == [-1, 0] || degs == [0, 1],
            ComplexKind::LeftResolution => degs.last() == Some(&0),
        };
        if !ok {
            return invalid(format!("degrees {degs:?} do not fit a {:?}", self.kind));
        }
        Ok(())
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.validate_shape()?;
        self.terms.iter().try_for_each(|(_, e)| e.validate(n))
    }

    fn term(&self, d: i64) -> Option<&BundleExpr> {
        self.terms.iter().find(|t| t.0 == d).map(|t| &t.1)
    }
}

impl fmt::Display for ComplexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.terms.iter().map(|(_, e)| e.to_string()).collect();
        match (self.kind, self.terms.first().map(|t| t.0)) {
            (ComplexKind::ShortExact, Some(0)) => write!(f, "0 -> E -> {} -> 0", names.join(" -> ")),
            (ComplexKind::Monad, _) => write!(f, "0 -> {} -> 0", names.join(" -> ")),
            _ => write!(f, "0 -> {} -> E -> 0", names.join(" -> ")),
        }
    }
}

/// Rank and Chern classes of the cohomology bundle at degree 0.
pub fn complex_cohomology_bundle(cx: &ComplexExpr, n: usize) -> Result<ChernVector> {
    cx.validate(n)?;
    let mut acc = ChernVector::trivial(n);
    for (d, e) in &cx.terms {
        let c = e.chern(n)?;
        acc = if d % 2 == 0 { chern_mul(&acc, &c)? } else { chern_div(&acc, &c)? };
    }
    if acc.rank() < 0 {
        return invalid(format!("display gives negative rank {}", acc.rank()));
    }
    Ok(acc)
}

/// `χ(E(l))` for the cohomology bundle, as the alternating sum over terms.
pub fn complex_chi(cx: &ComplexExpr, n: usize, l: i64) -> Result<BigInt> {
    cx.validate(n)?;
    let mut s = BigInt::zero();
    for (d, e) in &cx.terms {
        let chi = euler_characteristic(&e.chern(n)?, l)?;
        if d % 2 == 0 {
            s += chi;
        } else {
            s -= chi;
        }
    }
    Ok(s)
}

/// Rank of `H^q(X) -> H^q(Y)` in `0 -> X -> Y -> Z -> 0` when forced:
/// zero if either side vanishes, injective on `H^0`.
fn forced_sub_rank(q: usize, x: &Entry, y: &Entry) -> Option<BigInt> {
    match (x, y) {
        (Entry::Known(a), _) if a.is_zero() => Some(BigInt::zero()),
        (_, Entry::Known(b)) if b.is_zero() => Some(BigInt::zero()),
        (Entry::Known(a), _) if q == 0 => Some(a.clone()),
        _ => None,
    }
}

/// Rank of `H^q(Y) -> H^q(Z)` when forced: zero if either side vanishes,
/// onto on `H^n`.
fn forced_quot_rank(q: usize, n: usize, y: &Entry, z: &Entry) -> Option<BigInt> {
    match (y, z) {
        (Entry::Known(a), _) if a.is_zero() => Some(BigInt::zero()),
        (_, Entry::Known(b)) if b.is_zero() => Some(BigInt::zero()),
        (_, Entry::Known(b)) if q == n => Some(b.clone()),
        _ => None,
    }
}

fn known_minus(a: &Entry, r: Option<BigInt>) -> Option<BigInt> {
    Some(a.known()? - r?)
}

/// `Z = Y / X`: `h^q(Z) = (h^q Y - rk α_q) + (h^{q+1} X - rk α_{q+1})`.
fn quotient_row(x: &[Entry], y: &[Entry], n: usize) -> Vec<Entry> {
    let alpha: Vec<Option<BigInt>> = (0..=n).map(|q| forced_sub_rank(q, &x[q], &y[q])).collect();
    (0..=n)
        .map(|q| {
            let left = known_minus(&y[q], alpha[q].clone());
            let right = if q == n { Some(BigInt::zero()) } else { known_minus(&x[q + 1], alpha[q + 1].clone()) };
            match (left, right) {
                (Some(a), Some(b)) => Entry::Known(a + b),
                _ => Entry::Undetermined,
            }
        })
        .collect()
}

/// `X = ker(Y -> Z)`: `h^q(X) = (h^{q-1} Z - rk β_{q-1}) + (h^q Y - rk β_q)`.
fn kernel_row(y: &[Entry], z: &[Entry], n: usize) -> Vec<Entry> {
    let beta: Vec<Option<BigInt>> = (0..=n).map(|q| forced_quot_rank(q, n, &y[q], &z[q])).collect();
    (0..=n)
        .map(|q| {
            let left = if q == 0 { Some(BigInt::zero()) } else { known_minus(&z[q - 1], beta[q - 1].clone()) };
            let right = known_minus(&y[q], beta[q].clone());
            match (left, right) {
                (Some(a), Some(b)) => Entry::Known(a + b),
                _ => Entry::Undetermined,
            }
        })
        .collect()
}

/// Fills a single undetermined entry from the Euler characteristic.
fn fill_by_chi(row: &mut [Entry], chi: &BigInt) {
    let unknown: Vec<usize> = (0..row.len()).filter(|&q| row[q].known().is_none()).collect();
    if unknown.len() != 1 {
        return;
    }
    let mut s = chi.clone();
    for (q, e) in row.iter().enumerate() {
        if let Some(x) = e.known() {
            if q % 2 == 0 {
                s -= x;
            } else {
                s += x;
            }
        }
    }
    let q = unknown[0];
    row[q] = Entry::Known(if q.is_multiple_of(2) { s } else { -s });
}

/// A cohomology dimension of the cohomology bundle known from outside the
/// display, e.g. a vanishing from a stability hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownDim {
    pub q: usize,
    pub l: i64,
    pub value: BigInt,
}

/// Cohomology table of the degree-0 cohomology bundle of `cx` on the window.
pub fn monad_cohomology_table(cx: &ComplexExpr, n: usize, lmin: i64, lmax: i64) -> Result<CohomologyTable> {
    monad_cohomology_table_with(cx, n, lmin, lmax, &[])
}

/// As [`monad_cohomology_table`], additionally using externally known
/// dimensions; these must agree with every entry the display determines.
pub fn monad_cohomology_table_with(
    cx: &ComplexExpr,
    n: usize,
    lmin: i64,
    lmax: i64,
    facts: &[KnownDim],
) -> Result<CohomologyTable> {
    cx.validate(n)?;
    complex_cohomology_bundle(cx, n)?;
    if cx.kind == ComplexKind::LeftResolution && cx.terms.len() > 2 {
        return invalid("cohomology tables are computed for monads, short exact sequences and single terms");
    }
    let mut err = None;
    let table = CohomologyTable::from_fn(n, lmin, lmax, |l| {
        let row_of = |d: i64| cx.term(d).map(|e| e.cohomology_unchecked(n, l));
        let mut row = match (row_of(-1), row_of(0), row_of(1)) {
            (None, Some(b), None) => b,
            (Some(a), Some(b), None) => quotient_row(&a, &b, n),
            (None, Some(b), Some(c)) => kernel_row(&b, &c, n),
            (Some(a), Some(b), Some(c)) => {
                // 0 -> K -> B -> C -> 0 and 0 -> A -> K -> E -> 0
                let mut k = kernel_row(&b, &c, n);
                let chi_k = complex_chi(&ComplexExpr::kernel(cx.terms[1].1.clone(), cx.terms[2].1.clone()), n, l);
                if let Ok(chi) = chi_k {
                    fill_by_chi(&mut k, &chi);
                }
                quotient_row(&a, &k, n)
            }
            _ => unreachable!("shape validated"),
        };
        for f in facts.iter().filter(|f| f.l == l && f.q <= n) {
            match &row[f.q] {
                Entry::Known(x) if *x != f.value => {
                    err.get_or_insert(Error::Invalid(format!(
                        "h^{}(E({})) = {} contradicts the display value {}",
                        f.q, l, f.value, x
                    )));
                }
                _ => row[f.q] = Entry::Known(f.value.clone()),
            }
        }
        match complex_chi(cx, n, l) {
            Ok(chi) => fill_by_chi(&mut row, &chi),
            Err(e) => {
                err.get_or_insert(e);
            }
        }
        if row.iter().any(|e| e.known().is_some_and(|x| x.is_negative())) {
            err.get_or_insert(Error::Invalid(format!("negative dimension at twist {l}: display inconsistent")));
            row = vec![Entry::Undetermined; n + 1];
        }
        row
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(table),
    }
}

/// How a catalog bundle is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Bundle(BundleExpr),
    /// The bundle is the degree-0 cohomology of the complex, twisted by `t`.
    Display(ComplexExpr, i64),
    /// Direct sum of an expression and another construction.
    Plus(BundleExpr, Box<Construction>),
}

impl Construction {
    pub fn chern(&self, n: usize) -> Result<ChernVector> {
        match self {
            Construction::Bundle(e) => e.chern(n),
            Construction::Display(cx, t) => complex_cohomology_bundle(&cx.twist(*t), n),
            Construction::Plus(e, c) => chern_mul(&e.chern(n)?, &c.chern(n)?),
        }
    }

    pub fn table(&self, n: usize, lmin: i64, lmax: i64) -> Result<CohomologyTable> {
        match self {
            Construction::Bundle(e) => e.table(n, lmin, lmax),
            Construction::Display(cx, t) => monad_cohomology_table(&cx.twist(*t), n, lmin, lmax),
            Construction::Plus(e, c) => e.table(n, lmin, lmax)?.add(&c.table(n, lmin, lmax)?),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Bundle(e) => write!(f, "{e}"),
            Construction::Display(cx, 0) => write!(f, "E from {cx}"),
            Construction::Display(cx, t) => write!(f, "E({}) from {cx}", -t),
            Construction::Plus(e, c) => write!(f, "{e} + [{c}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub construction: Construction,
    pub n: usize,
    pub chern: ChernVector,
    /// `h^0(E)`, when the construction determines it.
    pub h0: Option<BigInt>,
    /// Class of `P(E)`, available when `h^0(E)` is.
    pub p_partner: Option<ChernVector>,
    /// `h^q(E^∨)` for `q = 0..=n`.
    pub dual_cohomology: Vec<Entry>,
}

/// `0 -> Ω^3(3) -> Ω^2(2) ⊕ Ω^1(1) -> E(-1) -> 0` on `P^4`.
pub fn display_omega321() -> ComplexExpr {
    ComplexExpr::cokernel(BundleExpr::omega(3, 3), BundleExpr::omega(2, 2).plus(BundleExpr::omega(1, 1)))
}

/// `0 -> E(-1) -> Ω^2(2) ⊕ Ω^1(1) -> O -> 0` on `P^4`.
pub fn display_omega21_kernel() -> ComplexExpr {
    ComplexExpr::kernel(BundleExpr::omega(2, 2).plus(BundleExpr::omega(1, 1)), BundleExpr::line(0))
}

/// `0 -> Ω^4(4) -> Ω^2(2) -> E(-1) -> 0` on `P^5`.
pub fn display_omega42() -> ComplexExpr {
    ComplexExpr::cokernel(BundleExpr::omega(4, 4), BundleExpr::omega(2, 2))
}

/// `0 -> E(-1) -> Ω^2(2) -> O -> 0` on `P^5`.
pub fn display_omega2_kernel() -> ComplexExpr {
    ComplexExpr::kernel(BundleExpr::omega(2, 2), BundleExpr::line(0))
}

/// `0 -> Ω^3(3) -> Ω^2(2) ⊕ Ω^1(1) -> O -> 0` on `P^4`; its cohomology,
/// twisted by 1, is the rank-5 bundle `E0`.
pub fn monad_e0() -> ComplexExpr {
    ComplexExpr::monad(BundleExpr::omega(3, 3), BundleExpr::omega(2, 2).plus(BundleExpr::omega(1, 1)), BundleExpr::line(0))
}

fn o1s(k: usize) -> BundleExpr {
    BundleExpr::line(1).times(k)
}

/// Named constructions appearing in the classification for `n ∈ {4, 5, 6}`.
pub fn named_constructions(n: usize) -> Result<Vec<(&'static str, Construction)>> {
    use BundleExpr as B;
    use Construction::{Bundle, Display, Plus};
    let tt = || B::TangentTwist;
    let mut v: Vec<(&'static str, Construction)> = vec![
        ("O(5)", Bundle(B::line(5))),
        ("P(O(5))", Bundle(B::PofLine(5))),
        ("5O(1)", Bundle(o1s(5))),
        ("4O(1)+T(-1)", Bundle(o1s(4).plus(tt()))),
        ("3O(1)+2T(-1)", Bundle(o1s(3).plus(tt().times(2)))),
    ];
    match n {
        4 => v.extend([
            ("2O(1)+Om(1,2)", Bundle(o1s(2).plus(B::omega(1, 2)))),
            ("O(1)+T(-1)+Om(1,2)", Bundle(o1s(1).plus(tt()).plus(B::omega(1, 2)))),
            ("2O(1)+Om(2,3)", Bundle(o1s(2).plus(B::omega(2, 3)))),
            ("O(1)+E0", Plus(B::line(1), Box::new(Display(monad_e0(), 1)))),
            ("omega321", Display(display_omega321(), 1)),
            ("omega21-kernel", Display(display_omega21_kernel(), 1)),
        ]),
        5 => v.extend([
            ("O(1)+Om(1,2)", Bundle(o1s(1).plus(B::omega(1, 2)))),
            ("T(-1)+Om(1,2)", Bundle(tt().plus(B::omega(1, 2)))),
            ("omega42", Display(display_omega42(), 1)),
            ("omega2-kernel", Display(display_omega2_kernel(), 1)),
        ]),
        6 => v.extend([("Om(1,2)", Bundle(B::omega(1, 2))), ("Om(4,5)", Bundle(B::omega(4, 5)))]),
        _ => return invalid(format!("catalog covers n = 4, 5, 6, not {n}")),
    }
    Ok(v)
}

/// The catalog for `n`, with classes, `h^0`, `P`-partners and the
/// cohomology of the duals.
pub fn named_bundle_catalog(n: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    let ni = n as i64;
    for (name, construction) in named_constructions(n)? {
        let chern = construction.chern(n)?;
        let table = construction.table(n, -ni - 1, 0)?;
        let h0 = table.get(0, 0).and_then(|e| e.known().cloned());
        // Serre duality: h^q(E^∨) = h^{n-q}(E(-n-1))
        let dual_cohomology = (0..=n).map(|q| table.get(n - q, -ni - 1).cloned().expect("in window")).collect();
        let p_partner = h0.as_ref().map(|h| p_functor(&chern, to_i64(h)));
        out.push(CatalogEntry { name, construction, n, chern, h0, p_partner, dual_cohomology });
    }
    Ok(out)
}

pub fn lookup<'a>(cat: &'a [CatalogEntry], name: &str) -> Option<&'a CatalogEntry> {
    cat.iter().find(|e| e.name == name)
}

pub fn h0_of(e: &BundleExpr, n: usize, l: i64) -> Result<BigInt> {
    match e.cohomology_at(n, l)?.remove(0) {
        Entry::Known(x) => Ok(x),
        Entry::Undetermined => invalid(format!("h^0 of {e} undetermined")),
    }
}
