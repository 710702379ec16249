//! Classification driver for globally generated bundles with `c1 = 5`.
//!
//! Candidate Chern data is enumerated, cut down by arithmetic filters that
//! are re-checked here and by cited filters whose proofs need sheaf theory,
//! and finally matched against the named constructions of
//! [`crate::monadlab`]. Every record carries the trace of rules it passed.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, Integer, Zero};
use serde::Serialize;

use crate::chowring::{chern_mul, chern_twist, p_functor, rank_formula, rr_h2_minus_h1, schwarzenberger, ChernVector};
use crate::cohomtab::{enumerate_spectra, Entry};
use crate::error::{invalid, Result};
use crate::monadlab::{
    complex_cohomology_bundle, display_omega2_kernel, display_omega21_kernel, display_omega321, display_omega42,
    lookup, named_bundle_catalog, parse_expr, BundleExpr, CatalogEntry,
};
use crate::util::bi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    /// Decided here from the numbers alone.
    Arithmetic,
    /// Proved by a geometric argument and taken as given.
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppliedRule {
    pub name: &'static str,
    pub kind: RuleKind,
}

const fn arith(name: &'static str) -> AppliedRule {
    AppliedRule { name, kind: RuleKind::Arithmetic }
}

const fn cited(name: &'static str) -> AppliedRule {
    AppliedRule { name, kind: RuleKind::Cited }
}

pub const RULE_PARITY: AppliedRule = arith("parity c3 = c1 c2 mod 2");
pub const RULE_SCHUR: AppliedRule = arith("Schur positivity 0 <= c3 <= c1 c2");
pub const RULE_C2_LOWER: AppliedRule = cited("c2 >= 9, and c3 = 5 when c2 = 9");
pub const RULE_C3_GEQ_C2: AppliedRule = cited("c2 >= 10 and c3 >= c2");
pub const RULE_C3_EQ_C2: AppliedRule = cited("c3 = c2 only for c2 = 10");
pub const RULE_NO_12_14: AppliedRule = cited("no bundle with c2 = 12, c3 = 14");
pub const RULE_C2_11_RANGE: AppliedRule = cited("c2 = 11 forces c3 in {13, 15}");
pub const RULE_C2_12_RANGE: AppliedRule = cited("c2 = 12 forces c3 in {16, 18, 20}");
pub const RULE_CATALOG: AppliedRule = cited("c4 and bundle identified with a named construction");
pub const RULE_SCHWARZENBERGER: AppliedRule = arith("Schwarzenberger congruence");
pub const RULE_RR_INTEGRAL: AppliedRule = arith("h2(E(-3)) - h1(E(-3)) integral");
pub const RULE_RANK: AppliedRule = arith("rank formula");
pub const RULE_P_REDUCTION: AppliedRule = arith("c2 <= 12 up to the P-functor");

/// Hypotheses carried by every record and never checked.
pub const ASSUMPTIONS: [&str; 3] = ["E globally generated", "H^0(E^∨) = 0", "H^1(E^∨) = 0"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateRecord {
    pub n: usize,
    pub rank: i64,
    pub chern: ChernVector,
    pub construction: String,
    pub rule_trace: Vec<AppliedRule>,
    pub assumptions: Vec<&'static str>,
    /// Chern data of `P(E)`, kept when the `P`-functor normalization is used.
    pub partner: Option<ChernVector>,
}

impl CandidateRecord {
    pub fn triple(&self) -> (i64, i64, i64) {
        let t = |i| self.chern.c(i).try_into().expect("small class");
        (t(2), t(3), t(4))
    }
}

/// Re-checks every arithmetic rule claimed by the record.
pub fn recheck(rec: &CandidateRecord) -> Result<bool> {
    let c = |i| rec.chern.c(i);
    for rule in &rec.rule_trace {
        let ok = match rule.name {
            n if n == RULE_PARITY.name => (c(3) - c(1) * c(2)).is_even(),
            n if n == RULE_SCHUR.name => c(3) >= BigInt::zero() && c(3) <= c(1) * c(2),
            n if n == RULE_SCHWARZENBERGER.name => schwarzenberger(&rec.chern.restrict(4)?)?,
            n if n == RULE_RR_INTEGRAL.name => rr_h2_minus_h1(c(2), c(3), c(4)).integral,
            n if n == RULE_P_REDUCTION.name => c(2) <= bi(12),
            _ => true,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(!rec.rule_trace.is_empty())
}

/// Filters applied to `(c2, c3)` on `P^4` before `c4` is known. Returns the
/// trace, or `None` once a rule fails.
fn filter_pair(c2: i64, c3: i64) -> Option<Vec<AppliedRule>> {
    let c1 = 5;
    let mut trace = vec![RULE_P_REDUCTION];
    let mut check = |ok: bool, r: AppliedRule| {
        trace.push(r);
        ok
    };
    let pass = check((c3 - c1 * c2).rem_euclid(2) == 0, RULE_PARITY)
        && check(c3 >= 0 && c3 <= c1 * c2, RULE_SCHUR)
        && check(c2 >= 9 && (c2 != 9 || c3 == 5), RULE_C2_LOWER)
        && check(c2 >= 10 && c3 >= c2, RULE_C3_GEQ_C2)
        && check(c3 != c2 || c2 == 10, RULE_C3_EQ_C2)
        && check(!(c2 == 12 && c3 == 14), RULE_NO_12_14)
        && check(c2 != 11 || [13, 15].contains(&c3), RULE_C2_11_RANGE)
        && check(c2 != 12 || [16, 18, 20].contains(&c3), RULE_C2_12_RANGE);
    pass.then_some(trace)
}

fn catalog_class_matches(e: &CatalogEntry, c2: i64, c3: i64) -> bool {
    let r4 = e.chern.restrict(4).expect("catalog on n >= 4");
    r4.c(1) == bi(5) && r4.c(2) == bi(c2) && r4.c(3) == bi(c3)
}

/// Admissible Chern data with `c1 = 5` and `c2` in the given range, one
/// record per matching construction, in increasing `(c2, c3, c4)` order.
pub fn filter_chern_records(n: usize, c2_range: std::ops::RangeInclusive<i64>) -> Result<Vec<CandidateRecord>> {
    let catalog = named_bundle_catalog(n)?;
    let mut out = Vec::new();
    for c2 in c2_range.filter(|&c2| c2 <= 12) {
        for c3 in 0..=5 * c2.max(0) {
            let Some(trace) = filter_pair(c2, c3) else { continue };
            for e in catalog.iter().filter(|e| catalog_class_matches(e, c2, c3)) {
                let mut trace = trace.clone();
                trace.push(RULE_CATALOG);
                let r4 = e.chern.restrict(4)?;
                trace.push(RULE_SCHWARZENBERGER);
                if !schwarzenberger(&r4)? {
                    continue;
                }
                trace.push(RULE_RR_INTEGRAL);
                if !rr_h2_minus_h1(r4.c(2), r4.c(3), r4.c(4)).integral {
                    continue;
                }
                if n == 4 {
                    if let Some(ok) = rank_consistent(e) {
                        trace.push(RULE_RANK);
                        if !ok {
                            continue;
                        }
                    }
                }
                out.push(CandidateRecord {
                    n,
                    rank: e.chern.rank(),
                    chern: e.chern.clone(),
                    construction: e.name.to_string(),
                    rule_trace: trace,
                    assumptions: ASSUMPTIONS.to_vec(),
                    partner: e.p_partner.clone(),
                });
            }
        }
    }
    out.sort_by_key(|r| (r.triple(), r.construction.clone()));
    Ok(out)
}

/// Distinct `(c2, c3, c4)` of [`filter_chern_records`].
pub fn filter_chern(n: usize, c2_range: std::ops::RangeInclusive<i64>) -> Result<Vec<(i64, i64, i64)>> {
    let set: BTreeSet<(i64, i64, i64)> = filter_chern_records(n, c2_range)?.iter().map(|r| r.triple()).collect();
    Ok(set.into_iter().collect())
}

/// Compares the rank with the rank formula when `h^3(E^∨) = h^4(E^∨) = 0`
/// on `P^4` is known; `None` when the formula does not apply.
pub fn rank_consistent(e: &CatalogEntry) -> Option<bool> {
    if e.n != 4 || e.chern.c(1) != bi(5) {
        return None;
    }
    let d = &e.dual_cohomology;
    let zero = |q: usize| d[q].known().is_some_and(|x| x.is_zero());
    if !(zero(3) && zero(4)) {
        return None;
    }
    let h2 = d[2].known()?.clone();
    let r = rank_formula(e.chern.c(2), e.chern.c(3), e.chern.c(4), h2);
    Some(r.integral && r.value.to_integer() == bi(e.chern.rank()))
}

/// Allowed `c3` for `c2 = 12` given `h^0(F(-1))` of the restriction.
/// `None` means this rule does not restrict `c3`.
pub fn c2_12_c3_rule(h0_fm1: i64) -> Option<BTreeSet<i64>> {
    (h0_fm1 >= 2).then(|| [16, 18, 20].into_iter().collect())
}

/// Companion facts of the `c2 = 12` rule: for `c3 = 16` and
/// `h^0(F(-1)) >= 2`, `h^1(F(-3)) = 1` and `h^0(F(-1)) = 2`.
pub fn c2_12_c3_16_facts(h0_fm1: i64, c3: i64) -> Option<(i64, i64)> {
    (h0_fm1 >= 2 && c3 == 16).then_some((1, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LiaisonData {
    pub ci_type: (i64, i64),
    pub deg_y: i64,
    pub deg_y2: i64,
    pub chi_y: Option<i64>,
    pub chi_y2: Option<i64>,
}

impl LiaisonData {
    pub fn new(a: i64, b: i64, deg_y: i64, deg_y2: i64) -> Result<Self> {
        if deg_y + deg_y2 != a * b {
            return invalid(format!("degrees {deg_y} + {deg_y2} do not add up to {a}·{b} for linked curves"));
        }
        Ok(LiaisonData { ci_type: (a, b), deg_y, deg_y2, chi_y: None, chi_y2: None })
    }

    /// `χ(O_{Y'}) - χ(O_Y)`.
    pub fn chi_difference(&self) -> i64 {
        liaison_chi_unchecked(self.ci_type.0, self.ci_type.1, self.deg_y, self.deg_y2)
    }

    /// Fills the missing `χ` from the other one.
    pub fn complete(mut self) -> Result<Self> {
        let d = self.chi_difference();
        match (self.chi_y, self.chi_y2) {
            (Some(x), None) => self.chi_y2 = Some(x + d),
            (None, Some(y)) => self.chi_y = Some(y - d),
            (Some(x), Some(y)) if y - x != d => {
                return invalid(format!("χ(O_Y) = {x}, χ(O_Y') = {y} differ by {}, linkage gives {d}", y - x))
            }
            _ => {}
        }
        Ok(self)
    }
}

fn liaison_chi_unchecked(a: i64, b: i64, deg_y: i64, deg_y2: i64) -> i64 {
    // (a+b-4)(deg_y - deg_y2) is even whenever deg_y + deg_y2 = ab
    (a + b - 4) * (deg_y - deg_y2) / 2
}

/// `χ(O_{Y'}) - χ(O_Y) = (a+b-4)(deg Y - deg Y')/2` for curves linked by a
/// complete intersection of type `(a, b)`.
pub fn liaison_chi(a: i64, b: i64, deg_y: i64, deg_y2: i64) -> Result<i64> {
    Ok(LiaisonData::new(a, b, deg_y, deg_y2)?.chi_difference())
}

/// `c3 = -12 - 2χ(O_Y)`.
pub fn c3_bookkeeping(chi_y: i64) -> i64 {
    -12 - 2 * chi_y
}

/// `c3(G) = 4 - 2χ(O_{Y'})`.
pub fn g_c3_bookkeeping(chi_y2: i64) -> i64 {
    4 - 2 * chi_y2
}

/// `(c3, c3(G))` from whichever of `χ(O_Y)`, `χ(O_{Y'})` is given, using
/// the `(4, 4)` linkage of curves of degrees 12 and 4; both given must
/// satisfy `c3 = c3(G) + 16`.
pub fn c3_from_liaison(chi_y: Option<i64>, chi_y2: Option<i64>) -> Result<(i64, i64)> {
    if chi_y.is_none() && chi_y2.is_none() {
        return invalid("need χ(O_Y) or χ(O_Y')");
    }
    let mut l = LiaisonData::new(4, 4, 12, 4)?;
    l.chi_y = chi_y;
    l.chi_y2 = chi_y2;
    let l = l.complete()?;
    let (c3, c3g) = (c3_bookkeeping(l.chi_y.unwrap()), g_c3_bookkeeping(l.chi_y2.unwrap()));
    debug_assert_eq!(c3, c3g + 16);
    Ok((c3, c3g))
}

/// One alternative when the rank 3 bundle `G` with `F = ext of G(2) by
/// trivial summands` on `P^3` is not stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnstableCase {
    pub label: &'static str,
    pub rank: i64,
    pub c2: i64,
    pub c3: i64,
    pub description: String,
    /// Chern data of `F` from the displayed extension.
    pub chern: ChernVector,
    /// `c2` of the rank 2 bundle `M` with `c1(M) = 0`, when there is one.
    pub c2_m: Option<i64>,
    /// The extension data agree with `c(G(2))`, `c(G) = (-1, c2 - 8, c3 - 2c2 + 12)`.
    pub matches_g: bool,
}

fn rank2_c1_zero(c2: i64) -> ChernVector {
    ChernVector::from_ints(3, 2, &[0, c2, 0]).expect("n = 3")
}

fn g_twisted(c2: i64, c3: i64, rank: i64) -> Result<ChernVector> {
    let g = ChernVector::from_ints(3, 3, &[-1, c2 - 8, c3 - 2 * c2 + 12])?;
    chern_mul(&chern_twist(&g, 2), &ChernVector::free(3, rank - 3))
}

/// The alternatives for non-stable `G` at the given `c2`; case (ii) only
/// exists for `c2 = 12` and the instanton charges must be positive.
pub fn unstable_g_cases(c2: i64) -> Result<Vec<UnstableCase>> {
    if !(9..=12).contains(&c2) {
        return invalid(format!("c2 = {c2} outside 9..=12"));
    }
    let n = 3;
    let mut out = Vec::new();
    let mut push = |label, rank, c3, description: String, chern: ChernVector, c2_m| -> Result<()> {
        let matches_g = chern == g_twisted(c2, c3, rank)?;
        out.push(UnstableCase { label, rank, c2, c3, description, chern, c2_m, matches_g });
        Ok(())
    };
    let m = c2 - 8;
    if m >= 1 {
        // 0 -> M(2) -> F -> O(1) -> 0
        let chern = chern_mul(&chern_twist(&rank2_c1_zero(m), 2), &ChernVector::line(n, 1))?;
        push("i", 3, c2 - 4, format!("0 -> M(2) -> F -> O(1) -> 0, M instanton of charge {m}"), chern, Some(m))?;
    }
    if c2 == 12 {
        let k = complex_cohomology_bundle(
            &crate::monadlab::ComplexExpr::kernel(parse_expr("4*O(2)")?, BundleExpr::line(4)),
            n,
        )?;
        let chern = chern_mul(&ChernVector::line(n, 1), &k)?;
        push("ii", 4, 8, "O(1) + ker(4O(2) -> O(4))".to_string(), chern, None)?;
    }
    let m = c2 - 9;
    if m >= 1 {
        // 0 -> M(2) -> F -> T(-1) -> 0
        let chern = chern_mul(&chern_twist(&rank2_c1_zero(m), 2), &BundleExpr::TangentTwist.chern(n)?)?;
        let desc = if m == 1 {
            "0 -> M(2) -> F -> T(-1) -> 0, M nullcorrelation".to_string()
        } else {
            format!("0 -> M(2) -> F -> T(-1) -> 0, c2(M) = {m}")
        };
        push("iii", 5, c2, desc, chern, Some(m))?;
    }
    Ok(out)
}

/// Spectra of the rank 3 bundle `G` in the stable `c2 = 12, c3 = 16` case.
pub fn c2_12_c3_16_spectra() -> Result<Vec<crate::cohomtab::Spectrum>> {
    // c2(G) = c2 - 8, c3(G) = c3 - 2c2 + 12
    enumerate_spectra(4, 16 - 24 + 12, false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemReport {
    pub item: &'static str,
    pub n: usize,
    pub construction: String,
    pub chern: ChernVector,
    pub h0: Option<BigInt>,
    pub checks: Vec<Check>,
}

impl ItemReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainReport {
    pub items: Vec<ItemReport>,
}

impl MainReport {
    pub fn passed(&self) -> bool {
        self.items.len() == 8 && self.items.iter().all(ItemReport::passed)
    }
}

impl fmt::Display for MainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for it in &self.items {
            let status = if it.passed() { "pass" } else { "FAIL" };
            writeln!(f, "({:>4}) P^{} {:<5} {}  [{}]", it.item, it.n, status, it.chern, it.construction)?;
            for c in it.checks.iter().filter(|c| !c.passed) {
                writeln!(f, "        failed: {}", c.name)?;
            }
        }
        Ok(())
    }
}

fn check(name: impl Into<String>, passed: bool) -> Check {
    Check { name: name.into(), passed }
}

/// Recomputes the eight bundles of the main classification and checks
/// `c1 = 5`, the congruence on `P^4`, expected ranks and the `P`-pairings.
pub fn verify_classification() -> Result<MainReport> {
    struct Spec {
        item: &'static str,
        n: usize,
        name: &'static str,
        rank: i64,
        partner: Option<&'static str>,
        classes: Option<&'static [i64]>,
    }
    let specs = [
        Spec { item: "i", n: 4, name: "O(5)", rank: 1, partner: Some("P(O(5))"), classes: None },
        Spec { item: "ii", n: 4, name: "P(O(5))", rank: 125, partner: Some("O(5)"), classes: None },
        Spec { item: "iii", n: 4, name: "omega321", rank: 6, partner: Some("omega21-kernel"), classes: Some(&[5, 12, 16, 8]) },
        Spec { item: "iv", n: 4, name: "omega21-kernel", rank: 9, partner: None, classes: None },
        Spec { item: "v", n: 5, name: "omega42", rank: 5, partner: Some("omega2-kernel"), classes: None },
        Spec { item: "vi", n: 5, name: "omega2-kernel", rank: 9, partner: None, classes: None },
        Spec { item: "vii", n: 6, name: "Om(1,2)", rank: 6, partner: Some("Om(4,5)"), classes: None },
        Spec { item: "viii", n: 6, name: "Om(4,5)", rank: 15, partner: None, classes: None },
    ];
    let cats: Vec<Vec<CatalogEntry>> = (4..=6).map(named_bundle_catalog).collect::<Result<_>>()?;
    let cat = |n: usize| &cats[n - 4];
    let mut items = Vec::new();
    for s in &specs {
        let e = lookup(cat(s.n), s.name).ok_or_else(|| crate::Error::Invalid(format!("missing {}", s.name)))?;
        let mut checks = vec![
            check("c1 = 5", e.chern.c(1) == bi(5)),
            check(format!("rank {}", s.rank), e.chern.rank() == s.rank),
            check("Schwarzenberger on P^4", schwarzenberger(&e.chern.restrict(4)?)?),
        ];
        if s.partner.is_some() {
            checks.push(check("h0 determined", e.h0.is_some()));
        } else if let Some(src) = specs.iter().find(|t| t.partner == Some(s.name)) {
            // P is an involution and h^0(P(E)) = h^0(E)
            let back = lookup(cat(s.n), src.name).expect("listed above");
            let ok = back.h0.as_ref().is_some_and(|h| {
                p_functor(&e.chern, h.try_into().expect("small h0")) == back.chern
            });
            checks.push(check(format!("P(E) = {}", src.name), ok));
        }
        if let Some(cl) = s.classes {
            let want = ChernVector::from_ints(s.n, s.rank, cl)?;
            checks.push(check(format!("classes {cl:?}"), e.chern == want));
        }
        if let Some(pn) = s.partner {
            let p = lookup(cat(s.n), pn).ok_or_else(|| crate::Error::Invalid(format!("missing {pn}")))?;
            let computed = e.h0.as_ref().map(|h| p_functor(&e.chern, h.try_into().expect("small h0")));
            checks.push(check(format!("P(E) = {pn}"), computed.as_ref() == Some(&p.chern)));
        }
        if let Some(ok) = rank_consistent(e) {
            checks.push(check("rank formula", ok));
        }
        items.push(ItemReport {
            item: s.item,
            n: s.n,
            construction: e.construction.to_string(),
            chern: e.chern.clone(),
            h0: e.h0.clone(),
            checks,
        });
    }
    // the displays themselves, independent of the catalog wiring
    let sanity = [
        complex_cohomology_bundle(&display_omega321().twist(1), 4)?.rank() == 6,
        complex_cohomology_bundle(&display_omega21_kernel().twist(1), 4)?.rank() == 9,
        complex_cohomology_bundle(&display_omega42().twist(1), 5)?.rank() == 5,
        complex_cohomology_bundle(&display_omega2_kernel().twist(1), 5)?.rank() == 9,
    ];
    if let Some(first) = items.first_mut() {
        first.checks.push(check("display ranks 6, 9, 5, 9", sanity.iter().all(|&b| b)));
    }
    Ok(MainReport { items })
}

/// `h^q(E^∨)` entries of a catalog bundle, as plain strings.
pub fn dual_cohomology_strings(e: &CatalogEntry) -> Vec<String> {
    e.dual_cohomology.iter().map(Entry::to_string).collect()
}
