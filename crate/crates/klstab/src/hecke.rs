//! Hecke-algebra elements: sparse permutation-indexed combinations with
//! Laurent coefficients, tagged by basis and ambient rank.
//!
//! Arithmetic refuses to mix basis tags; the conversion routines live in the
//! [`crate::kl`] module.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::symgroup::{Permutation, SimpleReflection};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Standard,
    Kl,
    DualKl,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Standard => write!(f, "standard"),
            Basis::Kl => write!(f, "kl"),
            Basis::DualKl => write!(f, "dual-kl"),
        }
    }
}

/// A sparse `Z[v,v^{-1}]`-linear combination of permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    basis: Basis,
    rank: usize,
    terms: BTreeMap<Permutation, Laurent>,
}

impl HeckeElt {
    pub fn zero(basis: Basis, rank: usize) -> Self {
        HeckeElt {
            basis,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `w`.
    pub fn basis_elt(basis: Basis, rank: usize, w: &Permutation) -> Result<Self> {
        let mut elt = HeckeElt::zero(basis, rank);
        elt.add_term(w, &Laurent::one())?;
        Ok(elt)
    }

    pub fn unit(rank: usize) -> Self {
        HeckeElt::basis_elt(Basis::Standard, rank, &Permutation::identity())
            .expect("identity fits any rank")
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Laurent)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Permutation> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, w: &Permutation, c: &Laurent) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if w.support_max() > self.rank {
            return Err(Error::RankExceeded {
                needed: w.support_max(),
                ceiling: self.rank,
            });
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry = entry.add(c)?;
        if entry.is_zero() {
            self.terms.remove(w);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &HeckeElt) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                got: other.basis,
            });
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.add(&other.scale_poly(&Laurent::constant(-1))?)
    }

    pub fn scale_poly(&self, c: &Laurent) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero(self.basis, self.rank);
        for (w, coeff) in &self.terms {
            out.add_term(w, &coeff.mul(c)?)?;
        }
        Ok(out)
    }

    /// Right multiplication by a generator in the standard basis:
    /// `H_w H_s = H_{ws}` if `l(ws) > l(w)`, else `H_{ws} + (v^{-1}-v) H_w`.
    pub fn mult_gen_right(&self, s: SimpleReflection) -> Result<HeckeElt> {
        self.require_standard()?;
        if s.index() + 1 > self.rank {
            return Err(Error::RankExceeded {
                needed: s.index() + 1,
                ceiling: self.rank,
            });
        }
        let twist = Laurent::v_pow(-1).sub(&Laurent::v_pow(1))?;
        let mut out = HeckeElt::zero(self.basis, self.rank);
        for (w, c) in &self.terms {
            let ws = w.times_gen_right(s);
            out.add_term(&ws, c)?;
            if w.has_right_descent(s) {
                out.add_term(w, &c.mul(&twist)?)?;
            }
        }
        Ok(out)
    }

    /// Left multiplication by a generator; the mirror image of
    /// [`HeckeElt::mult_gen_right`].
    pub fn mult_gen_left(&self, s: SimpleReflection) -> Result<HeckeElt> {
        self.require_standard()?;
        if s.index() + 1 > self.rank {
            return Err(Error::RankExceeded {
                needed: s.index() + 1,
                ceiling: self.rank,
            });
        }
        let twist = Laurent::v_pow(-1).sub(&Laurent::v_pow(1))?;
        let mut out = HeckeElt::zero(self.basis, self.rank);
        for (w, c) in &self.terms {
            let sw = w.times_gen_left(s);
            out.add_term(&sw, c)?;
            if w.has_left_descent(s) {
                out.add_term(w, &c.mul(&twist)?)?;
            }
        }
        Ok(out)
    }

    /// Right multiplication by the standard basis element `H_w`, expanded
    /// along a reduced word of `w`.
    pub fn mult_std_basis_right(&self, w: &Permutation) -> Result<HeckeElt> {
        let mut out = self.clone();
        for s in w.reduced_word() {
            out = out.mult_gen_right(s)?;
        }
        Ok(out)
    }

    /// Product in the standard basis, expanding `other` term by term.
    pub fn mult_std(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_compatible(other)?;
        self.require_standard()?;
        let mut out = HeckeElt::zero(self.basis, self.rank);
        for (w, c) in &other.terms {
            let part = self.mult_std_basis_right(w)?.scale_poly(c)?;
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// The bar involution: `v -> v^{-1}` on coefficients and
    /// `H_s -> H_s + (v - v^{-1}) H_e` (the inverse of `H_s`) on generators.
    pub fn bar(&self) -> Result<HeckeElt> {
        self.require_standard()?;
        let gen_corr = Laurent::v_pow(1).sub(&Laurent::v_pow(-1))?;
        let mut out = HeckeElt::zero(self.basis, self.rank);
        for (w, c) in &self.terms {
            // bar(H_w) = bar(H_{s1}) ... bar(H_{sr}) for a reduced word of w.
            let mut img = HeckeElt::unit(self.rank);
            for s in w.reduced_word() {
                let main = img.mult_gen_right(s)?;
                img = main.add(&img.scale_poly(&gen_corr)?)?;
            }
            out = out.add(&img.scale_poly(&c.bar())?)?;
        }
        Ok(out)
    }

    /// The symmetric bilinear form with `(H_x, H_y) = delta_{x,y}`; both
    /// arguments must already be in the standard basis.
    pub fn form(&self, other: &HeckeElt) -> Result<Laurent> {
        self.check_compatible(other)?;
        self.require_standard()?;
        let mut out = Laurent::zero();
        for (w, c) in &self.terms {
            if let Some(d) = other.terms.get(w) {
                out = out.add(&c.mul(d)?)?;
            }
        }
        Ok(out)
    }

    fn require_standard(&self) -> Result<()> {
        if self.basis != Basis::Standard {
            return Err(Error::BasisMismatch {
                expected: Basis::Standard,
                got: self.basis,
            });
        }
        Ok(())
    }

    /// JSON form: `{ basis, rank, terms: [[window, laurent-json], ...] }`,
    /// terms sorted by the total order on permutations.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.to_string(),
            "rank": self.rank,
            "terms": self.terms.iter()
                .map(|(w, c)| serde_json::json!([w.window(), c.to_json()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Text form mirroring the paper's display style, e.g.
/// `^H{s2*s1*s3*s2*s1} + (v^-1 + v) ^H{s1*s2*s3*s1*s2*s1}`.
impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let symbol = match self.basis {
            Basis::Standard => "H",
            Basis::Kl => "_H",
            Basis::DualKl => "^H",
        };
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            if cs == "1" {
                write!(f, "{}{{{}}}", symbol, w.word_string())?;
            } else if c.to_pairs().len() == 1 && !cs.starts_with('-') {
                write!(f, "{} {}{{{}}}", cs, symbol, w.word_string())?;
            } else {
                write!(f, "({}) {}{{{}}}", cs, symbol, w.word_string())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> SimpleReflection {
        SimpleReflection::new(i)
    }

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn h_std(rank: usize, text: &str) -> HeckeElt {
        HeckeElt::basis_elt(Basis::Standard, rank, &p(text)).unwrap()
    }

    #[test]
    fn unit_and_generator_relation() {
        // H_e H_s = H_s
        assert_eq!(HeckeElt::unit(2).mult_gen_right(s(1)).unwrap(), h_std(2, "s1"));
        // H_s H_s = H_e + (v^{-1} - v) H_s
        let sq = h_std(2, "s1").mult_gen_right(s(1)).unwrap();
        assert_eq!(sq.coeff(&Permutation::identity()), Laurent::one());
        assert_eq!(sq.coeff(&p("s1")), Laurent::from_pairs(&[(-1, 1), (1, -1)]).unwrap());
        // H_{s1} H_{s2} = H_{s1 s2}
        assert_eq!(h_std(3, "s1").mult_gen_right(s(2)).unwrap(), h_std(3, "s1*s2"));
    }

    #[test]
    fn mult_std_examples() {
        let h = h_std(3, "s1*s2");
        assert_eq!(h.mult_std(&HeckeElt::unit(3)).unwrap(), h);
        let prod = h_std(3, "s1").mult_std(&h_std(3, "s2")).unwrap()
            .mult_std(&h_std(3, "s1")).unwrap();
        assert_eq!(prod, h_std(3, "s1*s2*s1"));
        // (H_s)^3 = (1 + (v^{-1}-v)^2) H_s + (v^{-1}-v) H_e
        let hs = h_std(2, "s1");
        let cube = hs.mult_std(&hs).unwrap().mult_std(&hs).unwrap();
        let twist = Laurent::from_pairs(&[(-1, 1), (1, -1)]).unwrap();
        let expected_s = Laurent::one().add(&twist.mul(&twist).unwrap()).unwrap();
        assert_eq!(cube.coeff(&p("s1")), expected_s);
        assert_eq!(cube.coeff(&Permutation::identity()), twist);
    }

    #[test]
    fn mult_is_associative_on_s4_basis_triples() {
        let all = Permutation::enumerate(4);
        // A deterministic sample of triples keeps this under a second.
        for (i, x) in all.iter().enumerate().step_by(5) {
            for (j, y) in all.iter().enumerate().step_by(7) {
                for z in all.iter().skip((i + j) % 3).step_by(9) {
                    let hx = HeckeElt::basis_elt(Basis::Standard, 4, x).unwrap();
                    let hy = HeckeElt::basis_elt(Basis::Standard, 4, y).unwrap();
                    let hz = HeckeElt::basis_elt(Basis::Standard, 4, z).unwrap();
                    let left = hx.mult_std(&hy).unwrap().mult_std(&hz).unwrap();
                    let right = hx.mult_std(&hy.mult_std(&hz).unwrap()).unwrap();
                    assert_eq!(left, right, "associativity failed at {x}, {y}, {z}");
                }
            }
        }
    }

    #[test]
    fn mult_independent_of_reduced_word() {
        // Multiply H_{s1} by H_{s2 s1 s3 s2} along two different reduced words.
        let y = p("s2*s1*s3*s2");
        let words = [
            vec![s(2), s(1), s(3), s(2)],
            vec![s(2), s(3), s(1), s(2)],
        ];
        let mut results = Vec::new();
        for word in &words {
            assert_eq!(Permutation::from_word(word), y, "test words must multiply to y");
            let mut h = h_std(4, "s1");
            for &g in word {
                h = h.mult_gen_right(g).unwrap();
            }
            results.push(h);
        }
        assert_eq!(results[0], results[1]);
        assert_eq!(results[0], h_std(4, "s1").mult_std_basis_right(&y).unwrap());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(HeckeElt::unit(2).bar().unwrap(), HeckeElt::unit(2));
        let bar_s = h_std(2, "s1").bar().unwrap();
        assert_eq!(bar_s.coeff(&p("s1")), Laurent::one());
        assert_eq!(
            bar_s.coeff(&Permutation::identity()),
            Laurent::from_pairs(&[(1, 1), (-1, -1)]).unwrap()
        );
        // bar(H_s) is the inverse of H_s.
        assert_eq!(h_std(2, "s1").mult_std(&bar_s).unwrap(), HeckeElt::unit(2));
        // Involution.
        let h = h_std(3, "s1*s2");
        assert_eq!(h.bar().unwrap().bar().unwrap(), h);
    }

    #[test]
    fn bar_is_multiplicative_on_s3() {
        let all = Permutation::enumerate(3);
        for x in &all {
            for y in &all {
                let hx = HeckeElt::basis_elt(Basis::Standard, 3, x).unwrap();
                let hy = HeckeElt::basis_elt(Basis::Standard, 3, y).unwrap();
                let lhs = hx.mult_std(&hy).unwrap().bar().unwrap();
                let rhs = hx.bar().unwrap().mult_std(&hy.bar().unwrap()).unwrap();
                assert_eq!(lhs, rhs, "bar not multiplicative at {x}, {y}");
            }
        }
    }

    #[test]
    fn form_examples() {
        let all = Permutation::enumerate(3);
        for x in &all {
            for y in &all {
                let hx = HeckeElt::basis_elt(Basis::Standard, 3, x).unwrap();
                let hy = HeckeElt::basis_elt(Basis::Standard, 3, y).unwrap();
                let expected = if x == y { Laurent::one() } else { Laurent::zero() };
                assert_eq!(hx.form(&hy).unwrap(), expected);
            }
        }
        let h = h_std(3, "s1*s2");
        assert!(h.form(&HeckeElt::zero(Basis::Standard, 3)).unwrap().is_zero());
    }

    #[test]
    fn form_is_symmetric_and_bilinear() {
        let a = h_std(3, "s1")
            .scale_poly(&Laurent::v_pow(2))
            .unwrap()
            .add(&h_std(3, "s1*s2"))
            .unwrap();
        let b = h_std(3, "s2").add(&h_std(3, "s1").scale_poly(&Laurent::constant(3)).unwrap()).unwrap();
        assert_eq!(a.form(&b).unwrap(), b.form(&a).unwrap());
        let c = h_std(3, "s2*s1");
        let lhs = a.add(&c).unwrap().form(&b).unwrap();
        let rhs = a.form(&b).unwrap().add(&c.form(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_basis_and_rank_are_rejected() {
        let std = h_std(3, "s1");
        let kl = HeckeElt::basis_elt(Basis::Kl, 3, &p("s1")).unwrap();
        assert!(matches!(std.add(&kl), Err(Error::BasisMismatch { .. })));
        assert!(matches!(std.form(&kl), Err(Error::BasisMismatch { .. })));
        let other_rank = h_std(4, "s1");
        assert!(matches!(std.add(&other_rank), Err(Error::RankMismatch(..))));
        // Generator outside the rank.
        assert!(matches!(std.mult_gen_right(s(3)), Err(Error::RankExceeded { .. })));
        // Terms outside the rank.
        let mut small = HeckeElt::zero(Basis::Standard, 2);
        assert!(matches!(
            small.add_term(&p("s3"), &Laurent::one()),
            Err(Error::RankExceeded { .. })
        ));
    }
}
