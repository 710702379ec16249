//! Exterior algebra of `V = k^{n+1}` and its dual, over `Q`.
//!
//! A basis blade `e_{i_1} ∧ .. ∧ e_{i_p}` with `i_1 < .. < i_p` is stored as
//! the bitmask with bits `i_1..i_p` set. The pairing between `Λ^p V^∨` and
//! `Λ^p V` is `⟨e*_I, e_J⟩ = δ_IJ`, and contraction is the adjoint of the
//! wedge product: `⟨α ⌞ ω, η⟩ = ⟨α, ω ∧ η⟩`.
//!
//! On top of the algebra sit the criteria for morphisms between twisted
//! exterior powers `Ω^p(p)` of the cotangent bundle of `P^n`: a morphism
//! `Ω^{p+q}(p+q) -> Ω^q(q)` is contraction with an element of `Λ^p V`, and on
//! global sections of the twist by one it becomes `(-1)^p (∗ ⌞ ω)` from
//! `Λ^{p+q+1} V^∨` to `Λ^{q+1} V^∨`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::linalg::{independent_subset, intersect, span_rank, Matrix};
use crate::util::rat;

pub const MAX_DIM: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    grade: usize,
    covariant: bool,
    coeffs: BTreeMap<u32, BigRational>,
}

/// Sign of the permutation sorting the concatenation of blades `a` then `b`;
/// zero when they share an index.
pub fn blade_sign(a: u32, b: u32) -> i32 {
    if a & b != 0 {
        return 0;
    }
    // each index of b passes over every larger index of a
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let i = bb.trailing_zeros();
        swaps += (a >> (i + 1)).count_ones();
        bb &= bb - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn blade_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// All blades of a given grade, in lexicographic order of index tuples.
pub fn blades(dim: usize, grade: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if grade > dim {
        return out;
    }
    let mut idx: Vec<usize> = (0..grade).collect();
    loop {
        out.push(idx.iter().fold(0u32, |m, &i| m | (1 << i)));
        let mut k = grade;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] < dim - grade + k {
                idx[k] += 1;
                for j in k + 1..grade {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn lex_key(mask: u32) -> Vec<usize> {
    blade_indices(mask)
}

impl Multivector {
    fn check_dim(dim: usize) -> Result<()> {
        if dim == 0 || dim > MAX_DIM {
            return invalid(format!("dimension {dim} outside 1..={MAX_DIM}"));
        }
        Ok(())
    }

    pub fn zero(dim: usize, grade: usize, covariant: bool) -> Self {
        Multivector { dim, grade, covariant, coeffs: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, x: BigRational) -> Self {
        let mut m = Self::zero(dim, 0, false);
        if !x.is_zero() {
            m.coeffs.insert(0, x);
        }
        m
    }

    /// `±e_{i_1} ∧ .. ∧ e_{i_p}` for indices in any order; repeated indices
    /// give zero.
    pub fn blade(dim: usize, indices: &[usize], covariant: bool) -> Result<Self> {
        Self::check_dim(dim)?;
        let mut m = Self::zero(dim, indices.len(), covariant);
        let mut mask = 0u32;
        let mut sign = 1;
        for &i in indices {
            if i >= dim {
                return invalid(format!("basis index {i} out of range for dimension {dim}"));
            }
            let bit = 1u32 << i;
            sign *= blade_sign(mask, bit);
            mask |= bit;
        }
        if sign != 0 {
            m.coeffs.insert(mask, rat(sign as i64));
        }
        Ok(m)
    }

    pub fn e(dim: usize, indices: &[usize]) -> Self {
        Self::blade(dim, indices, false).expect("valid basis blade")
    }

    pub fn e_dual(dim: usize, indices: &[usize]) -> Self {
        Self::blade(dim, indices, true).expect("valid basis blade")
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(coords: &[BigRational], covariant: bool) -> Result<Self> {
        Self::from_coords(coords.len(), 1, covariant, coords)
    }

    /// Inverse of [`Multivector::coords`].
    pub fn from_coords(dim: usize, grade: usize, covariant: bool, coords: &[BigRational]) -> Result<Self> {
        Self::check_dim(dim)?;
        let bl = blades(dim, grade);
        if bl.len() != coords.len() {
            return invalid(format!("expected {} coordinates, got {}", bl.len(), coords.len()));
        }
        let mut m = Self::zero(dim, grade, covariant);
        for (b, x) in bl.into_iter().zip(coords) {
            if !x.is_zero() {
                m.coeffs.insert(b, x.clone());
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_covariant(&self) -> bool {
        self.covariant
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> BigRational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms as (index tuple, coefficient), lexicographically ordered.
    pub fn terms(&self) -> Vec<(Vec<usize>, BigRational)> {
        let mut t: Vec<_> = self.coeffs.iter().map(|(&m, x)| (lex_key(m), x.clone())).collect();
        t.sort();
        t
    }

    /// Coordinates in the lexicographic basis of `Λ^grade`.
    pub fn coords(&self) -> Vec<BigRational> {
        blades(self.dim, self.grade).into_iter().map(|b| self.coeff(b)).collect()
    }

    /// The same coordinates read in the dual space.
    pub fn transposed(&self) -> Self {
        Multivector { covariant: !self.covariant, ..self.clone() }
    }

    fn insert_add(&mut self, mask: u32, x: BigRational) {
        let e = self.coeffs.entry(mask).or_insert_with(BigRational::zero);
        *e += x;
        if e.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.covariant != other.covariant {
            return invalid("mixing elements of V and V^∨");
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.grade != other.grade {
            return invalid(format!("adding grades {} and {}", self.grade, other.grade));
        }
        let mut out = self.clone();
        for (&m, x) in &other.coeffs {
            out.insert_add(m, x.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero(self.dim, self.grade, self.covariant);
        if !s.is_zero() {
            for (&m, x) in &self.coeffs {
                out.coeffs.insert(m, x * s);
            }
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        wedge(self, other)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let star = if self.covariant { "*" } else { "" };
        let mut first = true;
        for (idx, x) in self.terms() {
            let neg = x.is_negative();
            let a = x.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let blade = if idx.is_empty() {
                "1".to_string()
            } else {
                idx.iter().map(|i| format!("e{i}{star}")).collect::<Vec<_>>().join("^")
            };
            if a.is_one() {
                write!(f, "{blade}")?;
            } else if idx.is_empty() {
                write!(f, "{}", crate::util::rat_to_string(&a))?;
            } else {
                write!(f, "{}*{blade}", crate::util::rat_to_string(&a))?;
            }
        }
        Ok(())
    }
}

pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_compatible(b)?;
    let mut out = Multivector::zero(a.dim, a.grade + b.grade, a.covariant);
    for (&ma, xa) in &a.coeffs {
        for (&mb, xb) in &b.coeffs {
            let s = blade_sign(ma, mb);
            if s != 0 {
                out.insert_add(ma | mb, xa * xb * rat(s as i64));
            }
        }
    }
    Ok(out)
}

/// `α ⌞ ω` for `α ∈ Λ^{p+q} V^∨`, `ω ∈ Λ^p V`; lands in `Λ^q V^∨`.
pub fn contract(alpha: &Multivector, omega: &Multivector) -> Result<Multivector> {
    if alpha.dim != omega.dim {
        return Err(Error::DimensionMismatch(alpha.dim, omega.dim));
    }
    if !alpha.covariant || omega.covariant {
        return invalid("contraction takes an element of Λ V^∨ and an element of Λ V");
    }
    if alpha.grade < omega.grade {
        return invalid(format!(
            "grade underflow: contracting grade {} by grade {}",
            alpha.grade, omega.grade
        ));
    }
    let mut out = Multivector::zero(alpha.dim, alpha.grade - omega.grade, true);
    for (&mi, xi) in &alpha.coeffs {
        for (&mj, xj) in &omega.coeffs {
            if mi & mj != mj {
                continue;
            }
            let rest = mi & !mj;
            // ⟨e*_I ⌞ e_J, e_K⟩ = ⟨e*_I, e_J ∧ e_K⟩ = sign(J, K) when J ∪ K = I
            let s = blade_sign(mj, rest);
            out.insert_add(rest, xi * xj * rat(s as i64));
        }
    }
    Ok(out)
}

/// `⟨α, η⟩` for `α ∈ Λ^p V^∨`, `η ∈ Λ^p V`.
pub fn pairing(alpha: &Multivector, eta: &Multivector) -> Result<BigRational> {
    if alpha.dim != eta.dim {
        return Err(Error::DimensionMismatch(alpha.dim, eta.dim));
    }
    if !alpha.covariant || eta.covariant || alpha.grade != eta.grade {
        return invalid("pairing needs a covariant and a contravariant element of equal grade");
    }
    Ok(alpha
        .coeffs
        .iter()
        .filter_map(|(m, x)| eta.coeffs.get(m).map(|y| x * y))
        .fold(BigRational::zero(), |acc, t| acc + t))
}

/// The element of `Λ^{d-p} V^∨` with `⟨star(x), η⟩ = [x ∧ η]_{top}`; it
/// identifies `Λ^{d-2} V` with `Λ^2 V^∨` so that wedge pairing to the top
/// degree becomes the canonical pairing.
pub fn wedge_pairing_dual(x: &Multivector) -> Result<Multivector> {
    if x.covariant {
        return invalid("expected an element of Λ V");
    }
    let full = (1u32 << x.dim) - 1;
    let mut out = Multivector::zero(x.dim, x.dim - x.grade, true);
    for (&m, c) in &x.coeffs {
        let rest = full & !m;
        out.insert_add(rest, c * rat(blade_sign(m, rest) as i64));
    }
    Ok(out)
}

/// Skew matrix `A` of a 2-vector, `ω = Σ_{i<j} A_ij e_i ∧ e_j`.
pub fn skew_matrix(omega: &Multivector) -> Result<Matrix> {
    if omega.grade != 2 {
        return invalid(format!("expected a 2-vector, got grade {}", omega.grade));
    }
    let d = omega.dim;
    let mut a = Matrix::zeros(d, d);
    for (&m, x) in &omega.coeffs {
        let idx = blade_indices(m);
        a.set(idx[0], idx[1], x.clone());
        a.set(idx[1], idx[0], -x.clone());
    }
    Ok(a)
}

/// Basis `v_0..v_{d-1}` of `V` with `ω = Σ_{i<m} v_{2i} ∧ v_{2i+1}`, where
/// `2m` is the rank of `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewNormalForm {
    pub rank: usize,
    pub basis: Vec<Vec<BigRational>>,
}

impl SkewNormalForm {
    /// `Σ v_{2i} ∧ v_{2i+1}`.
    pub fn reconstruct(&self, covariant: bool) -> Multivector {
        let d = self.basis.len();
        let mut out = Multivector::zero(d, 2, covariant);
        for i in 0..self.rank / 2 {
            let v = Multivector::vector(&self.basis[2 * i], covariant).expect("basis vector");
            let w = Multivector::vector(&self.basis[2 * i + 1], covariant).expect("basis vector");
            out = out.add(&wedge(&v, &w).expect("same space")).expect("same grade");
        }
        out
    }

    /// Span of `v_0..v_{rank-1}`, the smallest subspace `U` with `ω ∈ Λ^2 U`.
    pub fn support(&self) -> &[Vec<BigRational>] {
        &self.basis[..self.rank]
    }
}

fn interior_row(a: &Matrix, i: usize) -> Vec<BigRational> {
    a.row(i).to_vec()
}

/// Splits off hyperbolic pairs one at a time: if `c = A_ij ≠ 0`, put
/// `u = e_i^∨ ⌟ ω`, `w = e_j^∨ ⌟ ω`; then `ω - (u ∧ w)/c` is annihilated by
/// both `e_i^∨` and `e_j^∨`, so it lives on a smaller space.
pub fn skew_normal_form(omega: &Multivector) -> Result<SkewNormalForm> {
    let d = omega.dim;
    let mut a = skew_matrix(omega)?;
    let mut pairs: Vec<Vec<BigRational>> = Vec::new();
    loop {
        let Some((i, j)) = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .find(|&(i, j)| !a.get(i, j).is_zero())
        else {
            break;
        };
        let c = a.get(i, j).clone();
        let u = interior_row(&a, i);
        let w = interior_row(&a, j);
        // A' = A - (u w^T - w u^T)/c
        let mut next = a.clone();
        for r in 0..d {
            for s in 0..d {
                let delta = (&u[r] * &w[s] - &w[r] * &u[s]) / &c;
                next.set(r, s, a.get(r, s) - delta);
            }
        }
        a = next;
        pairs.push(u.iter().map(|x| x / &c).collect());
        pairs.push(w);
    }
    let rank = pairs.len();
    let mut basis = pairs;
    for k in 0..d {
        let mut e = vec![BigRational::zero(); d];
        e[k] = BigRational::one();
        basis.push(e);
        if span_rank(&basis) < basis.len() {
            basis.pop();
        }
    }
    Ok(SkewNormalForm { rank, basis })
}

pub fn skew_rank(omega: &Multivector) -> Result<usize> {
    Ok(skew_normal_form(omega)?.rank)
}

/// A summand `Ω^p(twist)` of a contraction morphism; only `twist = p` is
/// supported by the section identification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaTerm {
    pub p: usize,
    pub twist: i64,
}

impl OmegaTerm {
    pub fn new(p: usize) -> Self {
        OmegaTerm { p, twist: p as i64 }
    }
}

/// A morphism `⊕ Ω^{p_i}(p_i) -> ⊕ Ω^{q_j}(q_j)` whose `(i, j)` component is
/// contraction with `ω_ij ∈ Λ^{p_i - q_j} V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMorphismSpec {
    pub dim: usize,
    pub source: Vec<OmegaTerm>,
    pub target: Vec<OmegaTerm>,
    /// `entries[i][j]` maps source term `i` to target term `j`.
    pub entries: Vec<Vec<Option<Multivector>>>,
}

impl ContractionMorphismSpec {
    pub fn validate(&self) -> Result<()> {
        if self.entries.len() != self.source.len()
            || self.entries.iter().any(|r| r.len() != self.target.len())
        {
            return invalid("entry matrix shape does not match the source and target terms");
        }
        for t in self.source.iter().chain(&self.target) {
            if t.p >= self.dim {
                return invalid(format!("Ω^{} does not exist on P^{}", t.p, self.dim - 1));
            }
            if t.twist != t.p as i64 {
                return invalid(format!("term Ω^{}({}) is not of the form Ω^p(p)", t.p, t.twist));
            }
        }
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let Some(w) = e else { continue };
                let (p, q) = (self.source[i].p, self.target[j].p);
                if w.dim != self.dim || w.covariant {
                    return invalid(format!("entry ({i},{j}) is not an element of Λ V"));
                }
                if p < q || w.grade != p - q {
                    return invalid(format!(
                        "entry ({i},{j}) has grade {} but Ω^{p} -> Ω^{q} needs grade {}",
                        w.grade,
                        p as i64 - q as i64
                    ));
                }
            }
        }
        Ok(())
    }

    /// `Ω^3(3) ⊕ Ω^2(2) -> Ω^1(1)` on `P^4` given by `ω` and `v`.
    pub fn sasakura(omega: &Multivector, v: &Multivector) -> Self {
        ContractionMorphismSpec {
            dim: omega.dim,
            source: vec![OmegaTerm::new(3), OmegaTerm::new(2)],
            target: vec![OmegaTerm::new(1)],
            entries: vec![vec![Some(omega.clone())], vec![Some(v.clone())]],
        }
    }

    /// `Ω^3(3) -> Ω^1(1)` on `P^5` given by `ω`.
    pub fn horrocks(omega: &Multivector) -> Self {
        ContractionMorphismSpec {
            dim: omega.dim,
            source: vec![OmegaTerm::new(3)],
            target: vec![OmegaTerm::new(1)],
            entries: vec![vec![Some(omega.clone())]],
        }
    }
}

/// Matrix of `H^0(φ(1))` with rows indexed by the basis of the source
/// `⊕ Λ^{p_i+1} V^∨` and columns by the basis of the target `⊕ Λ^{q_j+1} V^∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Matrix {
    pub matrix: Matrix,
    pub rank: usize,
}

pub fn h0_matrix(spec: &ContractionMorphismSpec) -> Result<H0Matrix> {
    spec.validate()?;
    let d = spec.dim;
    let src: Vec<Vec<u32>> = spec.source.iter().map(|t| blades(d, t.p + 1)).collect();
    let tgt: Vec<Vec<u32>> = spec.target.iter().map(|t| blades(d, t.p + 1)).collect();
    let rows: usize = src.iter().map(Vec::len).sum();
    let cols: usize = tgt.iter().map(Vec::len).sum();
    let mut m = Matrix::zeros(rows, cols);
    let mut r0 = 0;
    for (i, sb) in src.iter().enumerate() {
        let mut c0 = 0;
        for (j, tb) in tgt.iter().enumerate() {
            if let Some(w) = &spec.entries[i][j] {
                let sign = if (spec.source[i].p - spec.target[j].p).is_multiple_of(2) { 1 } else { -1 };
                let col_of: BTreeMap<u32, usize> = tb.iter().enumerate().map(|(k, &b)| (b, k)).collect();
                for (r, &b) in sb.iter().enumerate() {
                    let img = contract(&Multivector::e_dual(d, &blade_indices(b)), w)?;
                    for (&mask, x) in &img.coeffs {
                        m.set(r0 + r, c0 + col_of[&mask], x * rat(sign));
                    }
                }
            }
            c0 += tb.len();
        }
        r0 += sb.len();
    }
    let rank = m.rank();
    Ok(H0Matrix { matrix: m, rank })
}

fn require_grade(x: &Multivector, grade: usize, dim: Option<usize>) -> Result<()> {
    if x.covariant || x.grade != grade {
        return invalid(format!("expected an element of Λ^{grade} V"));
    }
    if let Some(d) = dim {
        if x.dim != d {
            return invalid(format!("expected dimension {d}, got {}", x.dim));
        }
    }
    Ok(())
}

/// Whether `Ω^3(3) -> Ω^1(1)` on `P^5` given by `ω` is an epimorphism, which
/// happens exactly for `ω` of rank 6.
pub fn horrocks_epi_check(omega: &Multivector) -> Result<bool> {
    require_grade(omega, 2, Some(6))?;
    Ok(skew_rank(omega)? == 6)
}

/// Whether `Ω^3(3) ⊕ Ω^2(2) -> Ω^1(1)` on `P^4` given by `(ω, v)` is an
/// epimorphism: `ω = v_0∧v_1 + v_2∧v_3` and `v` completes `v_0..v_3` to a
/// basis.
pub fn sasakura_gg_check(omega: &Multivector, v: &Multivector) -> Result<bool> {
    require_grade(omega, 2, Some(5))?;
    require_grade(v, 1, Some(5))?;
    if v.is_zero() {
        return invalid("v must be nonzero");
    }
    let nf = skew_normal_form(omega)?;
    if nf.rank != 4 {
        return Ok(false);
    }
    let mut span = nf.support().to_vec();
    span.push(v.coords());
    Ok(span_rank(&span) == 5)
}

/// For an epimorphism `Ω^2(2) -> O` on `P^5` given by `ω` (rank at least 4),
/// whether the kernel twisted by one is globally generated: exactly when
/// `ω` has rank 6.
pub fn horrocks_ker_gg_check(omega: &Multivector) -> Result<bool> {
    require_grade(omega, 2, Some(6))?;
    let r = skew_rank(omega)?;
    if r < 4 {
        return invalid(format!("ω of rank {r} does not define an epimorphism Ω^2(2) -> O"));
    }
    Ok(r == 6)
}

/// A nonzero decomposable 2-vector in a given span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Rational(Multivector),
    /// `base + θ direction` where `θ^2 + b θ + c = 0` is irreducible over `Q`;
    /// `min_poly = [c, b, 1]`.
    Quadratic { min_poly: [BigRational; 3], base: Multivector, direction: Multivector },
}

impl Witness {
    /// Exact check that the witness is nonzero and squares to zero.
    pub fn verify(&self) -> bool {
        match self {
            Witness::Rational(w) => !w.is_zero() && wedge(w, w).map(|x| x.is_zero()).unwrap_or(false),
            Witness::Quadratic { min_poly, base, direction } => {
                // (A + θB)^2 = A^2 + 2θ AB + θ^2 B^2, with θ^2 = -bθ - c
                let (Ok(aa), Ok(ab), Ok(bb)) =
                    (wedge(base, base), wedge(base, direction), wedge(direction, direction))
                else {
                    return false;
                };
                let (c, b) = (&min_poly[0], &min_poly[1]);
                let constant = aa.sub(&bb.scale(c));
                let linear = ab.scale(&rat(2)).sub(&bb.scale(b));
                !direction.is_zero()
                    && matches!((constant, linear), (Ok(x), Ok(y)) if x.is_zero() && y.is_zero())
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Rational(w) => write!(f, "{w}"),
            Witness::Quadratic { min_poly, base, direction } => write!(
                f,
                "({base}) + t*({direction}) where t^2 + ({})t + ({}) = 0",
                crate::util::rat_to_string(&min_poly[1]),
                crate::util::rat_to_string(&min_poly[0])
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposable {
    Found(Witness),
    /// Exact answer: the span contains no nonzero decomposable element.
    NoneExists,
    /// The heuristic search for spans of dimension 3 or more came up empty.
    Undecided,
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / &lead;
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &f * x;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        a.iter_mut().for_each(|x| *x = &*x / &l);
    }
    a
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

/// Exact decision on the pencil `{A + sB} ∪ {B}` for independent `A`, `B`.
fn pencil_decomposable(a: &Multivector, b: &Multivector) -> Result<Option<Witness>> {
    let aa = wedge(a, a)?;
    let ab = wedge(a, b)?;
    let bb = wedge(b, b)?;
    let masks: std::collections::BTreeSet<u32> =
        aa.coeffs.keys().chain(ab.coeffs.keys()).chain(bb.coeffs.keys()).copied().collect();
    let mut g: Poly = Vec::new();
    for m in masks {
        let q = trim(vec![aa.coeff(m), ab.coeff(m) * rat(2), bb.coeff(m)]);
        g = poly_gcd(&g, &q);
    }
    let at = |s: &BigRational| a.add(&b.scale(s)).expect("same space");
    match g.len() {
        // no component equations: every element of the pencil is decomposable
        0 => return Ok(Some(Witness::Rational(a.clone()))),
        2 => return Ok(Some(Witness::Rational(at(&(-&g[0] / &g[1]))))),
        3 => {
            let disc = &g[1] * &g[1] - rat(4) * &g[0];
            match rational_sqrt(&disc) {
                Some(r) => return Ok(Some(Witness::Rational(at(&((-&g[1] + r) / rat(2)))))),
                None => {
                    return Ok(Some(Witness::Quadratic {
                        min_poly: [g[0].clone(), g[1].clone(), BigRational::one()],
                        base: a.clone(),
                        direction: b.clone(),
                    }))
                }
            }
        }
        _ => {}
    }
    if bb.is_zero() {
        return Ok(Some(Witness::Rational(b.clone())));
    }
    Ok(None)
}

fn combination(basis: &[Multivector], coeffs: &[BigRational]) -> Multivector {
    let mut out = Multivector::zero(basis[0].dim, basis[0].grade, basis[0].covariant);
    for (b, c) in basis.iter().zip(coeffs) {
        out = out.add(&b.scale(c)).expect("same space");
    }
    out
}

/// Looks for a nonzero `ω` with `ω ∧ ω = 0` in the span of the given
/// 2-vectors. Exact for spans of dimension at most 2; for larger spans it
/// tries sub-pencils spanned by basis pairs and by seeded random
/// combinations, then small integer combinations, and otherwise answers
/// [`Decomposable::Undecided`].
pub fn decomposable_in_subspace(basis: &[Multivector]) -> Result<Decomposable> {
    let Some(first) = basis.first() else {
        return invalid("empty span");
    };
    for b in basis {
        require_grade(b, 2, Some(first.dim))?;
    }
    let coords: Vec<Vec<BigRational>> = basis.iter().map(Multivector::coords).collect();
    let basis: Vec<Multivector> = independent_subset(&coords).into_iter().map(|i| basis[i].clone()).collect();
    match basis.len() {
        0 => invalid("zero-dimensional span"),
        1 => {
            let a = &basis[0];
            Ok(if wedge(a, a)?.is_zero() {
                Decomposable::Found(Witness::Rational(a.clone()))
            } else {
                Decomposable::NoneExists
            })
        }
        2 => Ok(match pencil_decomposable(&basis[0], &basis[1])? {
            Some(w) => Decomposable::Found(w),
            None => Decomposable::NoneExists,
        }),
        k => {
            for b in &basis {
                if wedge(b, b)?.is_zero() {
                    return Ok(Decomposable::Found(Witness::Rational(b.clone())));
                }
            }
            let mut quadratic = None;
            for i in 0..k {
                for j in i + 1..k {
                    match pencil_decomposable(&basis[i], &basis[j])? {
                        Some(w @ Witness::Rational(_)) => return Ok(Decomposable::Found(w)),
                        Some(w) => quadratic = quadratic.or(Some(w)),
                        None => {}
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..64 {
                let ca: Vec<BigRational> = (0..k).map(|_| rat(rng.gen_range(-3..=3))).collect();
                let cb: Vec<BigRational> = (0..k).map(|_| rat(rng.gen_range(-3..=3))).collect();
                let (a, b) = (combination(&basis, &ca), combination(&basis, &cb));
                if span_rank(&[a.coords(), b.coords()]) < 2 {
                    continue;
                }
                match pencil_decomposable(&a, &b)? {
                    Some(w @ Witness::Rational(_)) => return Ok(Decomposable::Found(w)),
                    Some(w) => quadratic = quadratic.or(Some(w)),
                    None => {}
                }
            }
            if k <= 5 {
                let mut c = vec![-2i64; k];
                loop {
                    if c.iter().any(|&x| x != 0) {
                        let w = combination(&basis, &c.iter().map(|&x| rat(x)).collect::<Vec<_>>());
                        if wedge(&w, &w)?.is_zero() {
                            return Ok(Decomposable::Found(Witness::Rational(w)));
                        }
                    }
                    let mut i = 0;
                    while i < k && c[i] == 2 {
                        c[i] = -2;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                    c[i] += 1;
                }
            }
            Ok(quadratic.map_or(Decomposable::Undecided, Decomposable::Found))
        }
    }
}

/// `W^⊥ ⊂ Λ^2 V` for `W ⊂ Λ^2 V^∨`.
pub fn perp_in_bivectors(dim: usize, w: &[Multivector]) -> Result<Vec<Multivector>> {
    for a in w {
        if !a.covariant || a.grade != 2 || a.dim != dim {
            return invalid("W must consist of elements of Λ^2 V^∨");
        }
    }
    let n2 = blades(dim, 2).len();
    if w.is_empty() {
        return Ok(blades(dim, 2).into_iter().map(|b| Multivector::e(dim, &blade_indices(b))).collect());
    }
    let m = Matrix::from_rows(w.iter().map(Multivector::coords).collect());
    debug_assert_eq!(m.cols(), n2);
    m.kernel().iter().map(|x| Multivector::from_coords(dim, 2, false, x)).collect()
}

/// `{η ∈ Λ^{d-g} V : η ∧ x = 0 for all x ∈ W}` for `W ⊂ Λ^g V`.
pub fn wedge_perp(dim: usize, grade: usize, w: &[Multivector]) -> Result<Vec<Multivector>> {
    if grade > dim {
        return invalid(format!("grade {grade} exceeds dimension {dim}"));
    }
    for x in w {
        require_grade(x, grade, Some(dim))?;
    }
    if w.is_empty() {
        return Ok(blades(dim, dim - grade).into_iter().map(|b| Multivector::e(dim, &blade_indices(b))).collect());
    }
    let duals: Vec<Multivector> = w.iter().map(wedge_pairing_dual).collect::<Result<_>>()?;
    let m = Matrix::from_rows(duals.iter().map(Multivector::coords).collect());
    m.kernel().iter().map(|x| Multivector::from_coords(dim, dim - grade, false, x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GgVerdict {
    GloballyGenerated,
    NotGloballyGenerated(Witness),
    Undecided,
}

/// Whether `W ⊂ Λ^2 V^∨ = H^0(Ω^1(2))` generates `Ω^1(2)` globally: exactly
/// when `W^⊥` contains no nonzero decomposable 2-vector.
pub fn gg_omega12_check(dim: usize, w: &[Multivector]) -> Result<GgVerdict> {
    let perp = perp_in_bivectors(dim, w)?;
    if perp.is_empty() {
        return Ok(GgVerdict::GloballyGenerated);
    }
    Ok(match decomposable_in_subspace(&perp)? {
        Decomposable::Found(x) => GgVerdict::NotGloballyGenerated(x),
        Decomposable::NoneExists => GgVerdict::GloballyGenerated,
        Decomposable::Undecided => GgVerdict::Undecided,
    })
}

/// For `W = ω ∧ V + ω' ∧ V ⊂ Λ^3 V`, a nonzero decomposable element of
/// `W^⊥ = {η : η ∧ W = 0}`. When the supports `U`, `U'` of the two forms
/// meet in a 3-dimensional space every element of `Λ^2(U ∩ U')` is
/// decomposable, and two linear conditions on that 3-dimensional space
/// leave a solution. Otherwise falls back to [`decomposable_in_subspace`].
pub fn two_form_pair_witness(omega: &Multivector, omega2: &Multivector) -> Result<Decomposable> {
    require_grade(omega, 2, None)?;
    require_grade(omega2, 2, Some(omega.dim))?;
    let d = omega.dim;
    let mut w = Vec::new();
    for i in 0..d {
        let e = Multivector::e(d, &[i]);
        w.push(wedge(omega, &e)?);
        w.push(wedge(omega2, &e)?);
    }
    let perp = wedge_perp(d, 3, &w)?;
    if perp.is_empty() {
        return Ok(Decomposable::NoneExists);
    }
    let u = skew_normal_form(omega)?;
    let u2 = skew_normal_form(omega2)?;
    let s = intersect(u.support(), u2.support(), d);
    if s.len() >= 2 {
        let vs: Vec<Multivector> = s.iter().map(|x| Multivector::vector(x, false)).collect::<Result<_>>()?;
        let mut lam2 = Vec::new();
        for i in 0..vs.len().min(3) {
            for j in i + 1..vs.len().min(3) {
                lam2.push(wedge(&vs[i], &vs[j])?.coords());
            }
        }
        let perp_coords: Vec<Vec<BigRational>> = perp.iter().map(Multivector::coords).collect();
        let common = intersect(&lam2, &perp_coords, blades(d, 2).len());
        if let Some(x) = common.first() {
            return Ok(Decomposable::Found(Witness::Rational(Multivector::from_coords(d, 2, false, x)?)));
        }
    }
    decomposable_in_subspace(&perp)
}

/// For `W = v_0 ∧ Λ^2 V + Σ k ω_i ⊂ Λ^3 V` on `V = k^5`: finds `v_1 ∉ k v_0`
/// with `v_1 ∧ v_0 ∧ ω_i = 0` for all `i`, and returns the decomposable
/// element `v_1 ∧ v_0` of `W^⊥`. `None` if no such `v_1` exists.
pub fn vector_trivectors_witness(v0: &Multivector, omegas: &[Multivector]) -> Result<Option<Multivector>> {
    require_grade(v0, 1, None)?;
    if v0.is_zero() {
        return invalid("v0 must be nonzero");
    }
    let d = v0.dim;
    for w in omegas {
        require_grade(w, d - 2, Some(d))?;
    }
    // linear conditions x ↦ [x ∧ v0 ∧ ω_i]_top on V
    let rows: Vec<Vec<BigRational>> = omegas
        .iter()
        .map(|w| {
            (0..d)
                .map(|k| {
                    let t = wedge(&wedge(&Multivector::e(d, &[k]), v0)?, w)?;
                    Ok(t.coeff((1u32 << d) - 1))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let kernel = if rows.is_empty() {
        (0..d)
            .map(|k| {
                let mut e = vec![BigRational::zero(); d];
                e[k] = BigRational::one();
                e
            })
            .collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    for x in kernel {
        let v1 = Multivector::vector(&x, false)?;
        let eta = wedge(&v1, v0)?;
        if !eta.is_zero() {
            return Ok(Some(eta));
        }
    }
    Ok(None)
}

/// Parses sums like `e0^e1 + 2*e2^e3`, `-1/2*e4` or `e0*^e1*` (covectors).
/// All terms must share grade and variance. The dimension defaults to one
/// more than the largest index.
pub fn parse_multivector(s: &str, dim: Option<usize>) -> Result<Multivector> {
    let perr = |m: String| Error::Parse(format!("multivector '{s}': {m}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(perr("empty".into()));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (k, ch) in t.chars().enumerate() {
        if ch != '+' && ch != '-' {
            cur.push(ch);
        } else if !cur.is_empty() {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if k == 0 {
            neg = ch == '-';
        } else {
            return Err(perr(format!("dangling sign at {k}")));
        }
    }
    if cur.is_empty() {
        return Err(perr("trailing sign".into()));
    }
    terms.push((neg, cur));

    let mut parsed: Vec<(BigRational, Vec<usize>, bool)> = Vec::new();
    for (neg, body) in terms {
        let (coef, blade) = match body.find('e') {
            Some(0) => (rat(1), body.as_str()),
            Some(j) => {
                let c = body[..j].trim_end_matches('*');
                (parse_rational(c).ok_or_else(|| perr(format!("bad coefficient '{c}'")))?, &body[j..])
            }
            None => return Err(perr(format!("term '{body}' has no basis vector"))),
        };
        let mut idx = Vec::new();
        let mut cov = None;
        for tok in blade.split('^') {
            let (num, star) = match tok.strip_suffix('*') {
                Some(x) => (x, true),
                None => (tok, false),
            };
            let i: usize = num
                .strip_prefix('e')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| perr(format!("bad basis token '{tok}'")))?;
            if *cov.get_or_insert(star) != star {
                return Err(perr(format!("mixed vectors and covectors in '{blade}'")));
            }
            idx.push(i);
        }
        let c = if neg { -coef } else { coef };
        parsed.push((c, idx, cov.unwrap_or(false)));
    }
    let (grade, covariant) = (parsed[0].1.len(), parsed[0].2);
    if parsed.iter().any(|(_, i, c)| i.len() != grade || *c != covariant) {
        return Err(perr("terms of different grade or variance".into()));
    }
    let need = parsed.iter().flat_map(|(_, i, _)| i.iter().map(|x| x + 1)).max().unwrap_or(0);
    let dim = dim.unwrap_or(need);
    if need > dim {
        return invalid(format!("index e{} out of range for dimension {dim}", need - 1));
    }
    let mut acc = Multivector::zero(dim, grade, covariant);
    for (c, idx, _) in parsed {
        acc = acc.add(&Multivector::blade(dim, &idx, covariant)?.scale(&c))?;
    }
    Ok(acc)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: num::BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::ratio as q;

    fn e(idx: &[usize]) -> Multivector {
        Multivector::e(5, idx)
    }

    fn sum(ts: &[Multivector]) -> Multivector {
        ts[1..].iter().fold(ts[0].clone(), |a, b| a.add(b).unwrap())
    }

    #[test]
    fn blade_enumeration() {
        assert_eq!(blades(5, 2).len(), 10);
        assert_eq!(blades(6, 4).len(), 15);
        assert_eq!(blades(3, 0), vec![0]);
        assert_eq!(blade_indices(blades(4, 2)[1]), vec![0, 2]);
        assert_eq!(Multivector::e(4, &[1, 0]), Multivector::e(4, &[0, 1]).scale(&rat(-1)));
        assert!(Multivector::e(4, &[1, 1]).is_zero());
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge(&e(&[0]), &e(&[1])).unwrap(), e(&[0, 1]));
        assert!(wedge(&e(&[0]), &e(&[0])).unwrap().is_zero());
        let w = sum(&[e(&[0, 1]), e(&[2, 3])]);
        assert_eq!(wedge(&w, &w).unwrap(), e(&[0, 1, 2, 3]).scale(&rat(2)));
        assert!(wedge(&e(&[0]), &Multivector::e(4, &[1])).is_err());
    }

    #[test]
    fn contraction_examples() {
        let a = Multivector::e_dual(5, &[0, 1]);
        assert_eq!(contract(&a, &e(&[0])).unwrap(), Multivector::e_dual(5, &[1]));
        assert_eq!(contract(&a, &e(&[1])).unwrap(), Multivector::e_dual(5, &[0]).scale(&rat(-1)));
        assert_eq!(contract(&a, &Multivector::scalar(5, rat(1))).unwrap(), a);
        assert!(contract(&Multivector::e_dual(5, &[0]), &e(&[0, 1])).is_err());
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(skew_rank(&Multivector::zero(5, 2, false)).unwrap(), 0);
        let w = sum(&[e(&[0, 1]), e(&[2, 3])]);
        let nf = skew_normal_form(&w).unwrap();
        assert_eq!(nf.rank, 4);
        assert_eq!(nf.reconstruct(false), w);
        assert_eq!(span_rank(&nf.basis), 5);
        let w2 = sum(&[e(&[0, 1]), e(&[0, 2]).scale(&rat(3)), e(&[1, 2]), e(&[3, 4]).scale(&q(1, 2))]);
        let nf2 = skew_normal_form(&w2).unwrap();
        assert_eq!(nf2.rank, 4);
        assert_eq!(nf2.reconstruct(false), w2);
    }

    #[test]
    fn h0_matrix_of_contraction_with_vector() {
        let spec = ContractionMorphismSpec {
            dim: 5,
            source: vec![OmegaTerm::new(3)],
            target: vec![OmegaTerm::new(2)],
            entries: vec![vec![Some(e(&[4]))]],
        };
        let h = h0_matrix(&spec).unwrap();
        assert_eq!((h.matrix.rows(), h.matrix.cols()), (5, 10));
        assert_eq!(h.rank, 4);
        // explicit oracle: e*_I ⌞ e_4 = ±e*_{I - 4} if 4 ∈ I, sign (-1)^{|I|-1}
        // from moving e_4 to the front, times the (-1)^{3-2} factor
        let rows = blades(5, 4);
        let cols = blades(5, 3);
        for (r, &ib) in rows.iter().enumerate() {
            for (c, &jb) in cols.iter().enumerate() {
                let expect = if ib & 16 != 0 && ib & !16 == jb { rat(-1) * rat(-1) } else { rat(0) };
                assert_eq!(h.matrix.get(r, c), &expect, "row {r} col {c}");
            }
        }
    }

    #[test]
    fn sasakura_and_horrocks_examples() {
        let w = sum(&[e(&[0, 1]), e(&[2, 3])]);
        let spec = ContractionMorphismSpec::sasakura(&w, &e(&[4]).scale(&rat(-1)));
        assert_eq!(h0_matrix(&spec).unwrap().rank, 10);
        assert!(sasakura_gg_check(&w, &e(&[4])).unwrap());
        assert!(!sasakura_gg_check(&w, &e(&[0])).unwrap());
        assert!(!sasakura_gg_check(&e(&[0, 1]), &e(&[4])).unwrap());
        assert!(sasakura_gg_check(&w, &Multivector::zero(5, 1, false)).is_err());

        let f = |idx: &[usize]| Multivector::e(6, idx);
        let w6 = sum(&[f(&[0, 1]), f(&[2, 3]), f(&[4, 5])]);
        let h = h0_matrix(&ContractionMorphismSpec::horrocks(&w6)).unwrap();
        assert_eq!((h.matrix.rows(), h.matrix.cols(), h.rank), (15, 15, 15));
        assert!(horrocks_epi_check(&w6).unwrap());
        assert!(!horrocks_epi_check(&f(&[0, 1])).unwrap());
        assert!(!horrocks_epi_check(&sum(&[f(&[0, 1]), f(&[2, 3])])).unwrap());
        assert!(horrocks_epi_check(&w).is_err());

        assert!(horrocks_ker_gg_check(&w6).unwrap());
        assert!(!horrocks_ker_gg_check(&sum(&[f(&[0, 1]), f(&[2, 3])])).unwrap());
        assert!(horrocks_ker_gg_check(&f(&[0, 1])).is_err());
    }

    #[test]
    fn decomposable_examples() {
        assert_eq!(
            decomposable_in_subspace(&[e(&[0, 1])]).unwrap(),
            Decomposable::Found(Witness::Rational(e(&[0, 1])))
        );
        let w = sum(&[e(&[0, 1]), e(&[2, 3])]);
        assert_eq!(decomposable_in_subspace(std::slice::from_ref(&w)).unwrap(), Decomposable::NoneExists);
        assert!(decomposable_in_subspace(&[]).is_err());
        assert!(decomposable_in_subspace(&[Multivector::zero(5, 2, false)]).is_err());

        // A = e01+e23, B = e02+e14. By hand, (A+sB)^2 = 2 e0123 + 2s e1234
        // - 2s^2 e0124, so no finite s works, and B^2 = -2 e0124 != 0.
        let b = sum(&[e(&[0, 2]), e(&[1, 4])]);
        let square = |s: i64| {
            let x = w.add(&b.scale(&rat(s))).unwrap();
            wedge(&x, &x).unwrap()
        };
        for s in -3..=3 {
            let expect = sum(&[
                e(&[0, 1, 2, 3]).scale(&rat(2)),
                e(&[1, 2, 3, 4]).scale(&rat(2 * s)),
                e(&[0, 1, 2, 4]).scale(&rat(-2 * s * s)),
            ]);
            assert_eq!(square(s), expect);
        }
        assert_eq!(decomposable_in_subspace(&[w.clone(), b]).unwrap(), Decomposable::NoneExists);
    }

    #[test]
    fn quadratic_witness() {
        // A = e01 + 2 e23 (rank 4), B = e02 + e13: (A+sB)^2 = (4 + 2 s^2... )
        let a = sum(&[e(&[0, 1]), e(&[2, 3]).scale(&rat(2))]);
        let b = sum(&[e(&[0, 2]), e(&[1, 3])]);
        let got = decomposable_in_subspace(&[a, b]).unwrap();
        let Decomposable::Found(w) = got else { panic!("expected a witness, got {got:?}") };
        assert!(w.verify());
        assert!(matches!(w, Witness::Quadratic { .. }));
    }

    #[test]
    fn gg_examples() {
        let all: Vec<Multivector> = blades(5, 2).iter().map(|&b| Multivector::e_dual(5, &blade_indices(b))).collect();
        assert_eq!(gg_omega12_check(5, &all).unwrap(), GgVerdict::GloballyGenerated);
        let w: Vec<Multivector> = all[1..].to_vec();
        assert_eq!(
            gg_omega12_check(5, &w).unwrap(),
            GgVerdict::NotGloballyGenerated(Witness::Rational(e(&[0, 1])))
        );
    }

    #[test]
    fn vector_trivectors() {
        let v0 = e(&[0]);
        let omegas = [e(&[1, 2, 3]), e(&[2, 3, 4]), sum(&[e(&[1, 2, 4]), e(&[0, 3, 4])])];
        let eta = vector_trivectors_witness(&v0, &omegas).unwrap().unwrap();
        assert!(wedge(&eta, &eta).unwrap().is_zero());
        for w in &omegas {
            assert!(wedge(&eta, w).unwrap().is_zero());
        }
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(wedge(&eta, &wedge(&v0, &e(&[i, j])).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn two_form_pairs_generic() {
        let w1 = sum(&[e(&[0, 1]), e(&[2, 3])]);
        let w2 = sum(&[e(&[1, 2]), e(&[3, 4])]);
        let Decomposable::Found(Witness::Rational(eta)) = two_form_pair_witness(&w1, &w2).unwrap() else {
            panic!("generic pair must give a rational witness")
        };
        assert!(!eta.is_zero());
        assert!(wedge(&eta, &eta).unwrap().is_zero());
        for i in 0..5 {
            assert!(wedge(&eta, &wedge(&w1, &e(&[i])).unwrap()).unwrap().is_zero());
            assert!(wedge(&eta, &wedge(&w2, &e(&[i])).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn multivector_parsing() {
        let w = parse_multivector("e0^e1 + 2*e2^e3 - 1/2 e4^e5", None).unwrap();
        assert_eq!(w.dim(), 6);
        assert_eq!(w.coeff(0b110000), -q(1, 2));
        assert_eq!(parse_multivector(&w.to_string(), Some(6)).unwrap(), w);
        let a = parse_multivector("-e1*^e0*", Some(3)).unwrap();
        assert!(a.is_covariant());
        assert_eq!(a.coeff(0b11), rat(1));
        assert!(parse_multivector("e0^e1 + e2", None).is_err());
        assert!(parse_multivector("e0 ++ e1", None).is_err());
        assert!(parse_multivector("x0", None).is_err());
        assert!(parse_multivector("e0^e7", Some(5)).is_err());
        assert!(parse_multivector("1/0*e0", None).is_err());
    }
}
