//! Dual-KL expansions of `^H_x _H_y`, their stabilization across ranks, and
//! the support/cell checks that make the stability theorem executable.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kl::KlContext;
use crate::laurent::Laurent;
use crate::rsk;
use crate::symgroup::Permutation;

type Coeffs = std::collections::BTreeMap<Permutation, Laurent>;

/// The expansion `^H_x _H_y = sum_w c_w ^H_w` at a fixed rank.
/// `rank == 0` is the stabilized (infinite-rank) sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualExpansion {
    x: Permutation,
    y: Permutation,
    rank: usize,
    coeffs: Coeffs,
}

impl DualExpansion {
    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_stabilized(&self) -> bool {
        self.rank == 0
    }

    pub fn coeff(&self, w: &Permutation) -> Laurent {
        self.coeffs.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Permutation, &Laurent)> {
        self.coeffs.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(w, c)| serde_json::json!([w.window(), c.to_json()]))
            .collect();
        let mut obj = serde_json::json!({
            "x": self.x.window(),
            "y": self.y.window(),
            "rank": self.rank,
            "terms": terms,
        });
        if self.rank == 0 {
            obj["stabilized"] = serde_json::Value::Bool(true);
        }
        obj
    }
}

// Paper display style: `^H{s2*s1*s3*s2*s1} + (v^-1 + v) ^H{s1*s2*s3*s1*s2*s1}`.
impl fmt::Display for DualExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &Laurent::one() {
                write!(f, "^H{{{}}}", w.word_string())?;
            } else if c.is_constant() {
                write!(f, "{} ^H{{{}}}", c, w.word_string())?;
            } else {
                write!(f, "({}) ^H{{{}}}", c, w.word_string())?;
            }
        }
        Ok(())
    }
}

/// Per-pair scan output: expansions at each requested rank plus the
/// theorem's two claims as recomputable verdicts.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub x: Permutation,
    pub y: Permutation,
    pub ranks: Vec<usize>,
    pub expansions: Vec<DualExpansion>,
    /// Smallest scanned rank from which all later expansions are identical.
    pub stabilized_from: Option<usize>,
    pub support_bound: usize,
    pub max_support_seen: usize,
    pub support_bound_ok: bool,
    pub first_discrepancy: Option<String>,
    pub violations: Vec<String>,
}

impl StabilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut expansions = serde_json::Map::new();
        for exp in &self.expansions {
            let terms: Vec<serde_json::Value> = exp
                .coeffs
                .iter()
                .map(|(w, c)| serde_json::json!([w.window(), c.to_json()]))
                .collect();
            expansions.insert(exp.rank.to_string(), serde_json::Value::Array(terms));
        }
        serde_json::json!({
            "x": self.x.window(),
            "y": self.y.window(),
            "ranks": self.ranks,
            "expansions": expansions,
            "stabilized_from": self.stabilized_from,
            "support_bound": self.support_bound,
            "max_support_seen": self.max_support_seen,
            "support_bound_ok": self.support_bound_ok,
            "first_discrepancy": self.first_discrepancy,
            "violations": self.violations,
        })
    }
}

/// The expansion of `^H_x _H_y` in the dual KL basis of `H_k`, computed by
/// two independent routes and cross-asserted.
///
/// Route A expands `_H_y` over a reduced word, applies the mu-recursion one
/// simple factor at a time, and corrects by the gamma lower terms of the
/// word product. Route B reads each coefficient off a structure constant:
/// the coefficient of `^H_w` equals the coefficient of `_H_x` in
/// `_H_w _H_{y^{-1}}` (adjunction moves `_H_y` across the pairing, and
/// reversal is the adjoint antiautomorphism, so the factor order is
/// `(w, y^{-1})` — note the order, which matters).
pub fn theta_on_simple(
    ctx: &mut KlContext,
    x: &Permutation,
    y: &Permutation,
    k: usize,
) -> Result<DualExpansion> {
    let needed = x.support_max().max(y.support_max());
    if needed > k {
        return Err(Error::RankExceeded { needed, ceiling: k });
    }
    if let Some(coeffs) = ctx.theta_lookup(x, y, k) {
        return Ok(DualExpansion {
            x: x.clone(),
            y: y.clone(),
            rank: k,
            coeffs,
        });
    }
    let mut memo = HashMap::new();
    let a = route_a(ctx, x, y, k, false, &mut memo)?;
    let b = route_b(ctx, x, y, k, true)?;
    if a != b {
        return Err(Error::RouteDisagreement {
            x: x.to_string(),
            y: y.to_string(),
            rank: k,
            detail: format!("recursion gave [{}], structure constants gave [{}]", render(&a), render(&b)),
        });
    }
    ctx.theta_store(x, y, k, a.clone());
    Ok(DualExpansion {
        x: x.clone(),
        y: y.clone(),
        rank: k,
        coeffs: a,
    })
}

fn render(coeffs: &Coeffs) -> String {
    let parts: Vec<String> = coeffs.iter().map(|(w, c)| format!("({c}) ^H{{{}}}", w.word_string())).collect();
    parts.join(" + ")
}

// ^H_x _H_y = ^H_x (_H_{s_1} ... _H_{s_r}) - sum_{c != y} m_c ^H_x _H_c,
// recursing on the strictly shorter lower terms c of the word product.
fn route_a(
    ctx: &mut KlContext,
    x: &Permutation,
    y: &Permutation,
    k: usize,
    truncated: bool,
    memo: &mut HashMap<Permutation, Coeffs>,
) -> Result<Coeffs> {
    if let Some(hit) = memo.get(y) {
        return Ok(hit.clone());
    }
    let mut out = Coeffs::new();
    if y.is_identity() {
        out.insert(x.clone(), Laurent::one());
        memo.insert(y.clone(), out.clone());
        return Ok(out);
    }
    let word = y.reduced_word();
    // Chain of Eq.-(2) applications along the word.
    let mut acc = Coeffs::new();
    acc.insert(x.clone(), Laurent::one());
    for &s in &word {
        let mut next = Coeffs::new();
        for (u, c) in &acc {
            let step = ctx.mult_dual_by_kl_gen(u, s, k, truncated)?;
            for (w, q) in step.terms() {
                let entry = next.entry(w.clone()).or_insert_with(Laurent::zero);
                *entry = entry.add(&c.mul(q)?)?;
            }
        }
        next.retain(|_, q| !q.is_zero());
        acc = next;
    }
    // Subtract the lower terms of _H_{s_1} ... _H_{s_r}.
    let prod = ctx.kl_simple_product(&word)?;
    for (c, m) in &prod {
        if c == y {
            continue;
        }
        let sub = route_a(ctx, x, c, k, truncated, memo)?;
        for (w, q) in sub {
            let entry = acc.entry(w).or_insert_with(Laurent::zero);
            *entry = entry.sub(&m.mul(&q)?)?;
        }
    }
    acc.retain(|_, q| !q.is_zero());
    memo.insert(y.clone(), acc.clone());
    Ok(acc)
}

// Coefficient of ^H_w is gamma_{w, y^{-1}}^x. With `pruned`, candidates are
// cut to m(w) <= 2^{l(y)} max(m(x), m(y)) and to two-sided cells weakly
// above the cell of x; pruning completeness is validated against the
// unpruned enumeration in tests at small ranks.
fn route_b(
    ctx: &mut KlContext,
    x: &Permutation,
    y: &Permutation,
    k: usize,
    pruned: bool,
) -> Result<Coeffs> {
    let yinv = y.inverse();
    let limit = if pruned {
        let n = x.support_max().max(y.support_max());
        k.min(support_bound(y, n)).max(1)
    } else {
        k
    };
    let xshape = rsk::rs(x, limit)?.0.shape();
    let mut out = Coeffs::new();
    for w in Permutation::enumerate(limit) {
        if pruned {
            let wshape = rsk::rs(&w, limit)?.0.shape();
            if !xshape.dominance_leq(&wshape)? {
                continue;
            }
        }
        let g = ctx.gamma(&w, &yinv)?;
        if let Some(c) = g.get(x) {
            out.insert(w, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) fn route_b_unpruned(
    ctx: &mut KlContext,
    x: &Permutation,
    y: &Permutation,
    k: usize,
) -> Result<Coeffs> {
    route_b(ctx, x, y, k, false)
}

/// Theorem 1(b)'s support bound `2^{l(y)} n`.
fn support_bound(y: &Permutation, n: usize) -> usize {
    let l = y.length().min(usize::BITS as usize - 2);
    (1usize << l) * n
}

/// Run the expansion at every requested rank and check both claims of the
/// stability theorem. A falsified claim lands in the report, not an error.
pub fn stability_scan(
    ctx: &mut KlContext,
    x: &Permutation,
    y: &Permutation,
    ranks: &[usize],
) -> Result<StabilityReport> {
    if ranks.is_empty() || ranks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse("ranks must be strictly ascending and non-empty".into()));
    }
    let n = x.support_max().max(y.support_max());
    if ranks[0] < n.max(1) {
        return Err(Error::RankExceeded {
            needed: n.max(1),
            ceiling: ranks[0],
        });
    }
    let mut expansions = Vec::new();
    for &k in ranks {
        expansions.push(theta_on_simple(ctx, x, y, k)?);
    }

    // Claim (b): support within S_{2^{l(y)} n}.
    let bound = support_bound(y, n);
    let mut max_support_seen = 0usize;
    let mut violations = Vec::new();
    for exp in &expansions {
        for (w, _) in exp.coeffs() {
            max_support_seen = max_support_seen.max(w.support_max());
            if w.support_max() > bound {
                violations.push(format!(
                    "support bound: m({w}) = {} > {bound} at rank {}",
                    w.support_max(),
                    exp.rank
                ));
            }
        }
    }
    let support_bound_ok = max_support_seen <= bound;

    // Claim (a): for each w, coefficients agree across all ranks strictly
    // above n' = max(m(x), m(y), m(w)).
    let mut first_discrepancy = None;
    let mut seen: std::collections::BTreeSet<Permutation> = std::collections::BTreeSet::new();
    for exp in &expansions {
        seen.extend(exp.coeffs().map(|(w, _)| w.clone()));
    }
    for w in &seen {
        let n_prime = n.max(w.support_max());
        let applicable: Vec<&DualExpansion> =
            expansions.iter().filter(|e| e.rank > n_prime).collect();
        for pair in applicable.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.coeff(w) != b.coeff(w) {
                let msg = format!(
                    "claim (a): [^H_{{{}}}] is {} at rank {} but {} at rank {}",
                    w.word_string(),
                    a.coeff(w),
                    a.rank,
                    b.coeff(w),
                    b.rank
                );
                if first_discrepancy.is_none() {
                    first_discrepancy = Some(msg.clone());
                }
                violations.push(msg);
            }
        }
    }

    // Smallest scanned rank from which the expansions are literally equal.
    let mut stabilized_from = Some(*ranks.last().unwrap());
    for i in (0..expansions.len() - 1).rev() {
        if expansions[i].coeffs == expansions[i + 1].coeffs {
            stabilized_from = Some(ranks[i]);
        } else {
            break;
        }
    }

    Ok(StabilityReport {
        x: x.clone(),
        y: y.clone(),
        ranks: ranks.to_vec(),
        expansions,
        stabilized_from,
        support_bound: bound,
        max_support_seen,
        support_bound_ok,
        first_discrepancy,
        violations,
    })
}

/// The stabilized (infinite-rank) expansion, computed once at
/// `k* = 2^{l(y)} n + 1` with `n = max(m(x), m(y), 2)`: the support bound
/// confines every term to `S_{k*-1}`, and stability of each retained
/// coefficient is guaranteed above `n`.
///
/// The per-step enumeration is capped by the mu support bound, so no work
/// (and in particular no KL column) ever leaves `S_{k*-1}`; feasibility is
/// therefore checked against `k* - 1`, not `k*`.
pub fn stabilized_theta(ctx: &mut KlContext, x: &Permutation, y: &Permutation) -> Result<DualExpansion> {
    let n = x.support_max().max(y.support_max()).max(2);
    let bound = support_bound(y, n);
    if bound > ctx.rank_ceiling() {
        return Err(Error::RankExceeded {
            needed: bound,
            ceiling: ctx.rank_ceiling(),
        });
    }
    let kstar = bound + 1;
    if let Some(coeffs) = ctx.theta_lookup(x, y, 0) {
        return Ok(DualExpansion {
            x: x.clone(),
            y: y.clone(),
            rank: 0,
            coeffs,
        });
    }
    let mut memo = HashMap::new();
    let coeffs = route_a(ctx, x, y, kstar, true, &mut memo)?;
    for (w, _) in &coeffs {
        if w.support_max() > bound {
            return Err(Error::RouteDisagreement {
                x: x.to_string(),
                y: y.to_string(),
                rank: kstar,
                detail: format!("stabilized support escaped the bound: m({w}) > {bound}"),
            });
        }
    }
    ctx.theta_store(x, y, 0, coeffs.clone());
    Ok(DualExpansion {
        x: x.clone(),
        y: y.clone(),
        rank: 0,
        coeffs,
    })
}

/// Exhaustive check of the mu support lemma on `S_n`: every pair with
/// `mu(a,b) != 0` and `rds(a) \ rds(b)` non-empty must satisfy
/// `m(b) <= 2 m(a)`. Returns the violating ordered pairs (expected none).
pub fn check_mu_support_lemma(ctx: &mut KlContext, n: usize) -> Result<Vec<(Permutation, Permutation)>> {
    let all = Permutation::enumerate(n);
    let mut violations = Vec::new();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let mu = ctx.mu(&all[i], &all[j])?;
            if mu == 0 {
                continue;
            }
            for (a, b) in [(&all[i], &all[j]), (&all[j], &all[i])] {
                let hypothesis = a.right_descents().iter().any(|s| !b.has_right_descent(*s));
                if hypothesis && b.support_max() > 2 * a.support_max() {
                    violations.push((a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(violations)
}

/// Cell constraint on an expansion: every term `w` must satisfy
/// `shape(P_w)` dominates `shape(P_x)`, both padded to a common rank.
/// Returns the violating terms (expected none).
pub fn check_cell_constraint(exp: &DualExpansion) -> Result<Vec<Permutation>> {
    let rank = if exp.rank > 0 {
        exp.rank
    } else {
        exp.coeffs
            .keys()
            .map(|w| w.support_max())
            .max()
            .unwrap_or(0)
            .max(exp.x.support_max())
            .max(1)
    };
    let xshape = rsk::rs(&exp.x, rank)?.0.shape();
    let mut violations = Vec::new();
    for (w, _) in exp.coeffs() {
        let wshape = rsk::rs(w, rank)?.0.shape();
        if !xshape.dominance_leq(&wshape)? {
            violations.push(w.clone());
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn lp(pairs: &[(i32, i64)]) -> Laurent {
        Laurent::from_pairs(pairs).unwrap()
    }

    fn vv() -> Laurent {
        lp(&[(-1, 1), (1, 1)])
    }

    #[test]
    fn theta_kills_the_identity() {
        let mut ctx = KlContext::new(8);
        for k in 2..=4usize {
            let exp = theta_on_simple(&mut ctx, &Permutation::identity(), &p("s1"), k).unwrap();
            assert!(exp.is_empty());
        }
    }

    #[test]
    fn theta_rank_4_two_term_expansion() {
        let mut ctx = KlContext::new(8);
        let x = p("s1*s2*s3*s1*s2*s1");
        let exp = theta_on_simple(&mut ctx, &x, &p("s3"), 4).unwrap();
        assert_eq!(exp.coeff(&p("s2*s1*s3*s2*s1")), Laurent::one());
        assert_eq!(exp.coeff(&x), vv());
        assert_eq!(exp.coeffs().count(), 2);
    }

    #[test]
    fn theta_ranks_5_and_6_three_term_expansion() {
        let mut ctx = KlContext::new(8);
        let x = p("s1*s2*s3*s1*s2*s1");
        for k in [5usize, 6] {
            let exp = theta_on_simple(&mut ctx, &x, &p("s3"), k).unwrap();
            assert_eq!(exp.coeff(&p("s2*s1*s3*s2*s1")), Laurent::one(), "rank {k}");
            assert_eq!(exp.coeff(&p("s1*s2*s3*s1*s2*s1*s4")), Laurent::one(), "rank {k}");
            assert_eq!(exp.coeff(&x), vv(), "rank {k}");
            assert_eq!(exp.coeffs().count(), 3, "rank {k}");
        }
    }

    #[test]
    fn eq2_degree_shape_on_s3() {
        let mut ctx = KlContext::new(8);
        for x in Permutation::enumerate(3) {
            for i in 1..4usize {
                let s = p(&format!("s{i}"));
                let exp = theta_on_simple(&mut ctx, &x, &s, 4).unwrap();
                if !x.has_right_descent(crate::symgroup::SimpleReflection::new(i)) {
                    assert!(exp.is_empty());
                    continue;
                }
                assert_eq!(exp.coeff(&x), vv());
                for (w, c) in exp.coeffs() {
                    if w != &x {
                        assert!(c.is_constant() && c.is_nonnegative(), "bad mu coefficient {c} at {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn pruned_route_b_matches_unpruned_at_small_ranks() {
        let mut ctx = KlContext::new(8);
        for x in Permutation::enumerate(3) {
            for y in Permutation::enumerate(3) {
                for k in [4usize, 5] {
                    let pruned = route_b(&mut ctx, &x, &y, k, true).unwrap();
                    let full = route_b_unpruned(&mut ctx, &x, &y, k).unwrap();
                    assert_eq!(pruned, full, "pruning dropped terms at x={x}, y={y}, k={k}");
                }
            }
        }
    }

    #[test]
    fn scan_reproduces_the_stabilization_picture() {
        let mut ctx = KlContext::new(8);
        let x = p("s1*s2*s3*s1*s2*s1");
        let report = stability_scan(&mut ctx, &x, &p("s3"), &[4, 5, 6]).unwrap();
        assert_eq!(report.stabilized_from, Some(5));
        assert_eq!(report.support_bound, 8);
        assert_eq!(report.max_support_seen, 5);
        assert!(report.support_bound_ok);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert!(report.first_discrepancy.is_none());
    }

    #[test]
    fn scan_of_identity_is_trivially_stable() {
        let mut ctx = KlContext::new(8);
        let report = stability_scan(&mut ctx, &Permutation::identity(), &p("s2"), &[3, 4, 5]).unwrap();
        assert!(report.expansions.iter().all(|e| e.is_empty()));
        assert_eq!(report.stabilized_from, Some(3));
        assert!(report.support_bound_ok);
    }

    #[test]
    fn scan_rejects_bad_rank_lists() {
        let mut ctx = KlContext::new(8);
        let x = p("s1");
        assert!(stability_scan(&mut ctx, &x, &x, &[]).is_err());
        assert!(stability_scan(&mut ctx, &x, &x, &[4, 4]).is_err());
        assert!(matches!(
            stability_scan(&mut ctx, &p("[4,3,2,1]"), &x, &[3, 4]),
            Err(Error::RankExceeded { .. })
        ));
    }

    #[test]
    fn stabilized_theta_matches_the_stable_expansion() {
        let mut ctx = KlContext::new(8);
        let x = p("s1*s2*s3*s1*s2*s1");
        let exp = stabilized_theta(&mut ctx, &x, &p("s3")).unwrap();
        assert!(exp.is_stabilized());
        assert_eq!(exp.coeff(&p("s2*s1*s3*s2*s1")), Laurent::one());
        assert_eq!(exp.coeff(&p("s1*s2*s3*s1*s2*s1*s4")), Laurent::one());
        assert_eq!(exp.coeff(&x), vv());
        assert_eq!(exp.coeffs().count(), 3);

        // Against the honest finite-rank computation where feasible.
        let mut ctx2 = KlContext::new(8);
        let small = p("s1");
        let stab = stabilized_theta(&mut ctx2, &small, &small).unwrap();
        let honest = theta_on_simple(&mut ctx2, &small, &small, 5).unwrap();
        let a: Vec<_> = stab.coeffs().collect();
        let b: Vec<_> = honest.coeffs().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn stabilized_theta_of_identity_is_empty() {
        let mut ctx = KlContext::new(8);
        // Simple y keeps the stabilization rank under the default ceiling.
        for i in 1..=3usize {
            let y = p(&format!("s{i}"));
            let exp = stabilized_theta(&mut ctx, &Permutation::identity(), &y).unwrap();
            assert!(exp.is_empty(), "stabilized theta(e, {y}) not empty");
        }
    }

    #[test]
    fn stabilized_theta_feasibility_error() {
        let mut ctx = KlContext::new(6);
        let err = stabilized_theta(&mut ctx, &p("s1*s2*s3*s1*s2*s1"), &p("s3")).unwrap_err();
        assert!(matches!(err, Error::RankExceeded { needed: 8, ceiling: 6 }));
    }

    #[test]
    fn stabilized_right_module_axiom_spot_check() {
        // gamma(s, s) = (v + v^{-1}) _H_s, so acting twice by _H_s must
        // scale the first action by v + v^{-1}.
        let mut ctx = KlContext::new(8);
        let s = p("s1");
        for x in Permutation::enumerate(3) {
            let first = stabilized_theta(&mut ctx, &x, &s).unwrap();
            // Only proceed where the second round stays under the ceiling.
            let feasible = first
                .coeffs()
                .all(|(w, _)| 2 * w.support_max().max(2) <= ctx.rank_ceiling());
            if !feasible {
                continue;
            }
            let mut twice = Coeffs::new();
            for (w, c) in first.coeffs() {
                let step = stabilized_theta(&mut ctx, w, &s).unwrap();
                for (u, q) in step.coeffs() {
                    let entry = twice.entry(u.clone()).or_insert_with(Laurent::zero);
                    *entry = entry.add(&c.mul(q).unwrap()).unwrap();
                }
            }
            twice.retain(|_, q| !q.is_zero());
            let mut scaled = Coeffs::new();
            for (w, c) in first.coeffs() {
                scaled.insert(w.clone(), c.mul(&vv()).unwrap());
            }
            assert_eq!(twice, scaled, "module axiom fails at x={x}");
        }
    }

    #[test]
    fn mu_support_lemma_holds_up_to_s4() {
        let mut ctx = KlContext::new(8);
        for n in 2..=4usize {
            let violations = check_mu_support_lemma(&mut ctx, n).unwrap();
            assert!(violations.is_empty(), "violations in S_{n}: {violations:?}");
        }
    }

    #[test]
    fn cell_constraint_on_small_expansions() {
        let mut ctx = KlContext::new(8);
        // The rank-4 worked expansion.
        let exp = theta_on_simple(&mut ctx, &p("s1*s2*s3*s1*s2*s1"), &p("s3"), 4).unwrap();
        assert!(check_cell_constraint(&exp).unwrap().is_empty());
        // ^H_{w_0} _H_s at rank 3, every generator.
        let w0 = Permutation::longest_element(3);
        for i in 1..3usize {
            let exp = theta_on_simple(&mut ctx, &w0, &p(&format!("s{i}")), 3).unwrap();
            assert!(check_cell_constraint(&exp).unwrap().is_empty());
        }
        // Empty expansion.
        let empty = theta_on_simple(&mut ctx, &Permutation::identity(), &p("s1"), 3).unwrap();
        assert!(check_cell_constraint(&empty).unwrap().is_empty());
    }

    #[test]
    fn report_json_shape() {
        let mut ctx = KlContext::new(8);
        let report = stability_scan(&mut ctx, &p("s1"), &p("s1"), &[2, 3]).unwrap();
        let json = report.to_json();
        assert_eq!(json["ranks"], serde_json::json!([2, 3]));
        assert!(json["expansions"]["2"].is_array());
        assert_eq!(json["support_bound_ok"], serde_json::json!(true));
        let exp = stabilized_theta(&mut ctx, &p("s1"), &p("s1")).unwrap();
        let j = exp.to_json();
        assert_eq!(j["rank"], serde_json::json!(0));
        assert_eq!(j["stabilized"], serde_json::json!(true));
    }
}
