//! Kazhdan-Lusztig machinery: the KL basis, KL polynomials, the mu-function,
//! gamma structure constants, and dual-KL expansions, all memoized in a
//! persistent [`KlContext`].
//!
//! The KL tables are rank-agnostic: an entry computed while working in `S_n`
//! is valid at every rank large enough to contain its indexing permutations.
//! Only the dual-KL basis is genuinely rank-dependent, which is why the dual
//! operations take an explicit rank argument.
//!
//! `KlContext` follows a single-writer contract, enforced by `&mut self` on
//! every operation that may insert. For parallel scans, clone the context
//! per worker; entries are deterministic, so independently computed tables
//! never conflict.

use std::collections::{BTreeMap, HashMap};
use std::io::{Read, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hecke::{Basis, HeckeElt};
use crate::laurent::Laurent;
use crate::symgroup::{Permutation, SimpleReflection};

const CACHE_MAGIC: &[u8; 8] = b"KLSTABC\0";
const CACHE_VERSION: u32 = 1;

/// Default feasibility ceiling on the ambient rank.
pub const DEFAULT_RANK_CEILING: usize = 8;

type Column = BTreeMap<Permutation, Laurent>;

/// Memoized KL polynomial columns and gamma structure constants.
#[derive(Debug, Clone)]
pub struct KlContext {
    rank_ceiling: usize,
    // kl_cols[y][x] = p_{x,y}; a present key y means the full column is known.
    kl_cols: HashMap<Permutation, Column>,
    gamma_tab: HashMap<(Permutation, Permutation), Column>,
    // Mu-partner lists for the generator action, keyed by (x, s, enumeration
    // limit); the enumeration over S_limit dominates warm-path cost, so these
    // are cached and persisted like the polynomial tables.
    eq2_tab: HashMap<(Permutation, SimpleReflection, usize), Vec<(Permutation, i64)>>,
    // Finished dual-KL expansions of ^H_x _H_y, keyed by (x, y, rank) with
    // rank 0 for the stabilized value. Stored only after the two independent
    // computation routes have been cross-asserted.
    theta_tab: HashMap<(Permutation, Permutation, usize), Column>,
    dirty: bool,
}

impl KlContext {
    pub fn new(rank_ceiling: usize) -> Self {
        assert!(rank_ceiling >= 2, "rank ceiling must be at least 2");
        KlContext {
            rank_ceiling,
            kl_cols: HashMap::new(),
            gamma_tab: HashMap::new(),
            eq2_tab: HashMap::new(),
            theta_tab: HashMap::new(),
            dirty: false,
        }
    }

    pub fn rank_ceiling(&self) -> usize {
        self.rank_ceiling
    }

    pub fn set_rank_ceiling(&mut self, ceiling: usize) {
        assert!(ceiling >= 2, "rank ceiling must be at least 2");
        self.rank_ceiling = ceiling;
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty
    }

    fn check_ceiling(&self, needed: usize) -> Result<()> {
        if needed > self.rank_ceiling {
            return Err(Error::RankExceeded {
                needed,
                ceiling: self.rank_ceiling,
            });
        }
        Ok(())
    }

    /// Make sure the column `p_{., w}` is in the table.
    fn ensure_kl(&mut self, w: &Permutation) -> Result<()> {
        if self.kl_cols.contains_key(w) {
            return Ok(());
        }
        self.check_ceiling(w.support_max())?;
        if w.is_identity() {
            let mut col = Column::new();
            col.insert(Permutation::identity(), Laurent::one());
            self.kl_cols.insert(w.clone(), col);
            self.dirty = true;
            return Ok(());
        }
        // Left-descent induction: for s in lds(w) and u = s w,
        //   _H_s _H_u = _H_w + sum_{z < u, s in lds(z)} mu(z, u) _H_z .
        let s = w.left_descents().into_iter().min().expect("non-identity has a left descent");
        let u = w.times_gen_left(s);
        self.ensure_kl(&u)?;
        let ucol = self.kl_cols.get(&u).expect("just ensured").clone();

        let rank = w.support_max();
        let mut hu = HeckeElt::zero(Basis::Standard, rank);
        for (z, c) in &ucol {
            hu.add_term(z, c)?;
        }
        // _H_s h = (H_s) h + v h in the standard basis.
        let mut acc = hu.mult_gen_left(s)?.add(&hu.scale_poly(&Laurent::v_pow(1))?)?;
        for (z, c) in &ucol {
            if z.has_left_descent(s) {
                let mu = c.coeff(1);
                if mu != 0 {
                    self.ensure_kl(z)?;
                    let zcol = self.kl_cols.get(z).expect("just ensured");
                    let mut hz = HeckeElt::zero(Basis::Standard, rank);
                    for (t, ct) in zcol {
                        hz.add_term(t, ct)?;
                    }
                    acc = acc.sub(&hz.scale_poly(&Laurent::constant(mu))?)?;
                }
            }
        }
        debug_assert_eq!(acc.coeff(w), Laurent::one(), "KL element of {w} is not monic");
        let col: Column = acc.terms().map(|(z, c)| (z.clone(), c.clone())).collect();
        self.kl_cols.insert(w.clone(), col);
        self.dirty = true;
        Ok(())
    }

    /// The KL basis element `_H_w` in the standard basis at the given rank.
    pub fn kl_element(&mut self, w: &Permutation, rank: usize) -> Result<HeckeElt> {
        if w.support_max() > rank {
            return Err(Error::RankExceeded {
                needed: w.support_max(),
                ceiling: rank,
            });
        }
        self.ensure_kl(w)?;
        let mut out = HeckeElt::zero(Basis::Standard, rank);
        for (z, c) in self.kl_cols.get(w).expect("just ensured") {
            out.add_term(z, c)?;
        }
        Ok(out)
    }

    /// The KL polynomial `p_{x,y}`; zero unless `x <= y` in Bruhat order.
    pub fn kl_poly(&mut self, x: &Permutation, y: &Permutation) -> Result<Laurent> {
        if !x.bruhat_leq(y) {
            return Ok(Laurent::zero());
        }
        self.ensure_kl(y)?;
        Ok(self
            .kl_cols
            .get(y)
            .expect("just ensured")
            .get(x)
            .cloned()
            .unwrap_or_else(Laurent::zero))
    }

    /// The KL mu-function: the coefficient of `v` in `p_{x,u}` for `x < u`,
    /// extended symmetrically; zero on Bruhat-incomparable pairs.
    pub fn mu(&mut self, x: &Permutation, u: &Permutation) -> Result<i64> {
        if x == u {
            return Ok(0);
        }
        let (lo, hi) = if x.bruhat_leq(u) {
            (x, u)
        } else if u.bruhat_leq(x) {
            (u, x)
        } else {
            return Ok(0);
        };
        Ok(self.kl_poly(lo, hi)?.coeff(1))
    }

    /// The full expansion `_H_a _H_b = sum_c gamma_{a,b}^c _H_c`, cached per
    /// `(a, b)` and valid at any rank containing all indexing permutations.
    pub fn gamma(&mut self, a: &Permutation, b: &Permutation) -> Result<Column> {
        let key = (a.clone(), b.clone());
        if let Some(g) = self.gamma_tab.get(&key) {
            return Ok(g.clone());
        }
        let out = if a.length() == 1 {
            let s = a.reduced_word()[0];
            self.gamma_simple_left(s, b)?
        } else if b.length() == 1 {
            let s = b.reduced_word()[0];
            self.gamma_simple_right(a, s)?
        } else {
            // _H_a _H_b = _H_a (prod_i _H_{s_i}) - sum_{c != b} m_c _H_a _H_c
            // where s_1 ... s_r is a reduced word for b and
            // prod_i _H_{s_i} = sum_c m_c _H_c. Everything stays in KL
            // coordinates; the recursion is on l(c) < l(b).
            let word = b.reduced_word();
            let mut start = Column::new();
            start.insert(a.clone(), Laurent::one());
            let mut out = self.kl_right_fold(start, &word)?;
            let prod = self.kl_simple_product(&word)?;
            debug_assert_eq!(prod.get(b), Some(&Laurent::one()));
            for (c, m) in &prod {
                if c == b {
                    continue;
                }
                for (z, q) in self.gamma(a, c)? {
                    let entry = out.entry(z).or_insert_with(Laurent::zero);
                    *entry = entry.sub(&m.mul(&q)?)?;
                }
            }
            out.retain(|_, q| !q.is_zero());
            out
        };
        self.gamma_tab.insert(key, out.clone());
        self.dirty = true;
        Ok(out)
    }

    // _H_s _H_b = (v + v^{-1}) _H_b if s in lds(b),
    //             else _H_{sb} + sum_{z < b, s in lds(z)} mu(z,b) _H_z.
    fn gamma_simple_left(&mut self, s: SimpleReflection, b: &Permutation) -> Result<Column> {
        let mut out = Column::new();
        if b.has_left_descent(s) {
            out.insert(b.clone(), Laurent::from_pairs(&[(-1, 1), (1, 1)])?);
            return Ok(out);
        }
        self.ensure_kl(b)?;
        let bcol = self.kl_cols.get(b).expect("just ensured").clone();
        out.insert(b.times_gen_left(s), Laurent::one());
        for (z, c) in &bcol {
            if z.has_left_descent(s) {
                let mu = c.coeff(1);
                if mu != 0 {
                    out.insert(z.clone(), Laurent::constant(mu));
                }
            }
        }
        Ok(out)
    }

    // Mirror image of gamma_simple_left for _H_a _H_s.
    fn gamma_simple_right(&mut self, a: &Permutation, s: SimpleReflection) -> Result<Column> {
        let mut out = Column::new();
        if a.has_right_descent(s) {
            out.insert(a.clone(), Laurent::from_pairs(&[(-1, 1), (1, 1)])?);
            return Ok(out);
        }
        self.ensure_kl(a)?;
        let acol = self.kl_cols.get(a).expect("just ensured").clone();
        out.insert(a.times_gen_right(s), Laurent::one());
        for (z, c) in &acol {
            if z.has_right_descent(s) {
                let mu = c.coeff(1);
                if mu != 0 {
                    out.insert(z.clone(), Laurent::constant(mu));
                }
            }
        }
        Ok(out)
    }

    /// Right-multiply a KL-coordinate vector by `_H_{s_1} ... _H_{s_r}`,
    /// one simple factor at a time.
    pub(crate) fn kl_right_fold(&mut self, start: Column, word: &[SimpleReflection]) -> Result<Column> {
        let mut col = start;
        for &s in word {
            let mut next = Column::new();
            for (c, m) in &col {
                for (z, q) in self.gamma_simple_right(c, s)? {
                    let entry = next.entry(z).or_insert_with(Laurent::zero);
                    *entry = entry.add(&m.mul(&q)?)?;
                }
            }
            next.retain(|_, q| !q.is_zero());
            col = next;
        }
        Ok(col)
    }

    /// The KL expansion of the product `_H_{s_1} ... _H_{s_r}`.
    pub(crate) fn kl_simple_product(&mut self, word: &[SimpleReflection]) -> Result<Column> {
        let mut start = Column::new();
        start.insert(Permutation::identity(), Laurent::one());
        self.kl_right_fold(start, word)
    }

    /// Rewrite a standard-basis element in the KL basis by eliminating
    /// maximal-length terms first (unitriangular solve).
    pub fn expand_in_kl(&mut self, h: &HeckeElt) -> Result<HeckeElt> {
        if h.basis() != Basis::Standard {
            return Err(Error::BasisMismatch {
                expected: Basis::Standard,
                got: h.basis(),
            });
        }
        let rank = h.rank();
        let mut remaining = h.clone();
        let mut out = HeckeElt::zero(Basis::Kl, rank);
        while let Some(w) = remaining.support().pop() {
            let c = remaining.coeff(&w);
            out.add_term(&w, &c)?;
            let elt = self.kl_element(&w, rank)?;
            remaining = remaining.sub(&elt.scale_poly(&c)?)?;
        }
        Ok(out)
    }

    /// The standard-basis expansion of the dual KL basis element `^H_w` at
    /// rank `k`. Unlike the KL basis, this genuinely depends on `k`.
    pub fn dual_kl_in_standard(&mut self, w: &Permutation, k: usize) -> Result<HeckeElt> {
        self.check_ceiling(k)?;
        if w.support_max() > k {
            return Err(Error::RankExceeded {
                needed: w.support_max(),
                ceiling: k,
            });
        }
        // Solve sum_{x <= y} p_{x,y} c_x = delta_{y,w} for all y in S_k,
        // walking y upward so every referenced c_x is already known.
        let mut coeffs: BTreeMap<Permutation, Laurent> = BTreeMap::new();
        for y in Permutation::enumerate(k) {
            self.ensure_kl(&y)?;
            let col = self.kl_cols.get(&y).expect("just ensured").clone();
            let mut acc = if &y == w { Laurent::one() } else { Laurent::zero() };
            for (x, p) in &col {
                if x == &y {
                    continue;
                }
                if let Some(cx) = coeffs.get(x) {
                    acc = acc.sub(&p.mul(cx)?)?;
                }
            }
            if !acc.is_zero() {
                coeffs.insert(y, acc);
            }
        }
        let mut out = HeckeElt::zero(Basis::Standard, k);
        for (x, c) in &coeffs {
            out.add_term(x, c)?;
        }
        Ok(out)
    }

    /// Expand a standard-basis element in the dual KL basis at rank `k`:
    /// the coefficient of `^H_w` is `(h, _H_w)`.
    pub fn expand_in_dual_kl(&mut self, h: &HeckeElt, k: usize) -> Result<HeckeElt> {
        self.check_ceiling(k)?;
        if h.basis() != Basis::Standard {
            return Err(Error::BasisMismatch {
                expected: Basis::Standard,
                got: h.basis(),
            });
        }
        let mut lifted = HeckeElt::zero(Basis::Standard, k);
        for (w, c) in h.terms() {
            lifted.add_term(w, c)?;
        }
        let support = lifted.support();
        let mut out = HeckeElt::zero(Basis::DualKl, k);
        for w in Permutation::enumerate(k) {
            // (h, _H_w) can only be nonzero when supp(h) meets [e, w].
            if !support.iter().any(|x| x.bruhat_leq(&w)) {
                continue;
            }
            let elt = self.kl_element(&w, k)?;
            let c = lifted.form(&elt)?;
            out.add_term(&w, &c)?;
        }
        Ok(out)
    }

    /// Right action of `_H_s` on `^H_x` at rank `k` (the mu-recursion):
    /// zero when `l(xs) > l(x)`, otherwise
    /// `(v + v^{-1}) ^H_x + sum_{u : l(us) > l(u)} mu(x,u) ^H_u`.
    ///
    /// With `truncated`, the sum over `u` is capped at
    /// `m(u) <= max(2 m(x), m(x)+1)`, which the mu support bound makes
    /// exhaustive; the plain variant enumerates all of `S_k`.
    pub fn mult_dual_by_kl_gen(
        &mut self,
        x: &Permutation,
        s: SimpleReflection,
        k: usize,
        truncated: bool,
    ) -> Result<HeckeElt> {
        if !truncated {
            self.check_ceiling(k)?;
        }
        if x.support_max() > k || s.index() + 1 > k {
            return Err(Error::RankExceeded {
                needed: x.support_max().max(s.index() + 1),
                ceiling: k,
            });
        }
        let mut out = HeckeElt::zero(Basis::DualKl, k);
        if !x.has_right_descent(s) {
            return Ok(out);
        }
        out.add_term(x, &Laurent::from_pairs(&[(-1, 1), (1, 1)])?)?;
        for (u, mu) in self.eq2_mu_partners(x, s, k, truncated)? {
            out.add_term(&u, &Laurent::constant(mu))?;
        }
        Ok(out)
    }

    // All u in S_k with mu(x,u) != 0 and s not a right descent of u, paired
    // with mu(x,u). Candidates above x are filtered by the cover rule and the
    // descent-containment property of mu before any KL column is computed.
    fn eq2_mu_partners(
        &mut self,
        x: &Permutation,
        s: SimpleReflection,
        k: usize,
        truncated: bool,
    ) -> Result<Vec<(Permutation, i64)>> {
        let limit = if truncated {
            k.min((2 * x.support_max()).max(x.support_max() + 1))
        } else {
            k
        };
        let key = (x.clone(), s, limit);
        if let Some(hit) = self.eq2_tab.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        // Below x: read off the column of x.
        self.ensure_kl(x)?;
        let xcol = self.kl_cols.get(x).expect("just ensured").clone();
        for (z, c) in &xcol {
            if z == x || z.has_right_descent(s) {
                continue;
            }
            let mu = c.coeff(1);
            if mu != 0 {
                out.push((z.clone(), mu));
            }
        }
        // Above x: enumerate candidates.
        let lds_x = x.left_descents();
        let rds_x = x.right_descents();
        let lx = x.length();
        for u in Permutation::enumerate(limit) {
            if u.length() <= lx || u.has_right_descent(s) {
                continue;
            }
            if u.length() > lx + 1 {
                let contained = u.left_descents().iter().all(|t| lds_x.contains(t))
                    && u.right_descents().iter().all(|t| rds_x.contains(t));
                if !contained {
                    continue;
                }
            }
            if !x.bruhat_leq(&u) {
                continue;
            }
            let mu = if u.length() == lx + 1 {
                1
            } else {
                self.kl_poly(x, &u)?.coeff(1)
            };
            if mu != 0 {
                out.push((u, mu));
            }
        }
        self.eq2_tab.insert(key, out.clone());
        self.dirty = true;
        Ok(out)
    }

    /// A finished expansion of `^H_x _H_y` at `rank` (0 = stabilized), if
    /// one was computed and cross-asserted before.
    pub fn theta_lookup(&self, x: &Permutation, y: &Permutation, rank: usize) -> Option<Column> {
        self.theta_tab.get(&(x.clone(), y.clone(), rank)).cloned()
    }

    /// Record a finished, cross-asserted expansion for reuse.
    pub fn theta_store(&mut self, x: &Permutation, y: &Permutation, rank: usize, coeffs: Column) {
        self.theta_tab.insert((x.clone(), y.clone(), rank), coeffs);
        self.dirty = true;
    }

    /// Debug export of the KL table: `[[x-window, y-window, laurent], ...]`.
    pub fn kl_table_json(&self) -> serde_json::Value {
        let mut ys: Vec<&Permutation> = self.kl_cols.keys().collect();
        ys.sort();
        let mut rows = Vec::new();
        for y in ys {
            for (x, p) in &self.kl_cols[y] {
                rows.push(serde_json::json!([x.window(), y.window(), p.to_json()]));
            }
        }
        serde_json::Value::Array(rows)
    }

    pub fn save(&mut self, path: &Path) -> Result<()> {
        let payload = self.encode_payload();
        let digest = Sha256::digest(&payload);
        let mut file = std::fs::File::create(path)?;
        file.write_all(CACHE_MAGIC)?;
        file.write_all(&CACHE_VERSION.to_le_bytes())?;
        file.write_all(&(payload.len() as u64).to_le_bytes())?;
        file.write_all(&digest)?;
        file.write_all(&payload)?;
        self.dirty = false;
        Ok(())
    }

    pub fn load(path: &Path, rank_ceiling: usize) -> Result<KlContext> {
        let mut bytes = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut bytes)?;
        if bytes.len() < 8 + 4 + 8 + 32 || &bytes[..8] != CACHE_MAGIC {
            return Err(Error::FormatVersionMismatch);
        }
        let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
        if version != CACHE_VERSION {
            return Err(Error::FormatVersionMismatch);
        }
        let len = u64::from_le_bytes(bytes[12..20].try_into().unwrap()) as usize;
        let digest: [u8; 32] = bytes[20..52].try_into().unwrap();
        let payload = &bytes[52..];
        if payload.len() != len || Sha256::digest(payload).as_slice() != digest {
            return Err(Error::ChecksumMismatch);
        }
        let mut ctx = KlContext::new(rank_ceiling);
        ctx.decode_payload(payload)?;
        Ok(ctx)
    }

    fn encode_payload(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        let mut ys: Vec<&Permutation> = self.kl_cols.keys().collect();
        ys.sort();
        buf.extend((ys.len() as u64).to_le_bytes());
        for y in ys {
            encode_perm(&mut buf, y);
            encode_column(&mut buf, &self.kl_cols[y]);
        }
        let mut keys: Vec<&(Permutation, Permutation)> = self.gamma_tab.keys().collect();
        keys.sort();
        buf.extend((keys.len() as u64).to_le_bytes());
        for key in keys {
            encode_perm(&mut buf, &key.0);
            encode_perm(&mut buf, &key.1);
            encode_column(&mut buf, &self.gamma_tab[key]);
        }
        let mut keys: Vec<&(Permutation, SimpleReflection, usize)> = self.eq2_tab.keys().collect();
        keys.sort();
        buf.extend((keys.len() as u64).to_le_bytes());
        for key in keys {
            encode_perm(&mut buf, &key.0);
            buf.push(key.1.index() as u8);
            buf.push(key.2 as u8);
            let partners = &self.eq2_tab[key];
            buf.extend((partners.len() as u32).to_le_bytes());
            for (u, mu) in partners {
                encode_perm(&mut buf, u);
                buf.extend(mu.to_le_bytes());
            }
        }
        let mut keys: Vec<&(Permutation, Permutation, usize)> = self.theta_tab.keys().collect();
        keys.sort();
        buf.extend((keys.len() as u64).to_le_bytes());
        for key in keys {
            encode_perm(&mut buf, &key.0);
            encode_perm(&mut buf, &key.1);
            buf.push(key.2 as u8);
            encode_column(&mut buf, &self.theta_tab[key]);
        }
        buf
    }

    fn decode_payload(&mut self, payload: &[u8]) -> Result<()> {
        let mut cur = Cursor { buf: payload, pos: 0 };
        let ncols = cur.u64()?;
        for _ in 0..ncols {
            let y = cur.perm()?;
            let col = cur.column()?;
            self.kl_cols.insert(y, col);
        }
        let ngamma = cur.u64()?;
        for _ in 0..ngamma {
            let a = cur.perm()?;
            let b = cur.perm()?;
            let col = cur.column()?;
            self.gamma_tab.insert((a, b), col);
        }
        let neq2 = cur.u64()?;
        for _ in 0..neq2 {
            let x = cur.perm()?;
            let s = cur.take(1)?[0] as usize;
            if s == 0 {
                return Err(Error::ChecksumMismatch);
            }
            let limit = cur.take(1)?[0] as usize;
            let n = cur.u32()? as usize;
            let mut partners = Vec::with_capacity(n);
            for _ in 0..n {
                let u = cur.perm()?;
                let mu = i64::from_le_bytes(cur.take(8)?.try_into().unwrap());
                partners.push((u, mu));
            }
            self.eq2_tab.insert((x, SimpleReflection::new(s), limit), partners);
        }
        let ntheta = cur.u64()?;
        for _ in 0..ntheta {
            let x = cur.perm()?;
            let y = cur.perm()?;
            let rank = cur.take(1)?[0] as usize;
            let col = cur.column()?;
            self.theta_tab.insert((x, y, rank), col);
        }
        if cur.pos != payload.len() {
            return Err(Error::ChecksumMismatch);
        }
        Ok(())
    }
}

fn encode_perm(buf: &mut Vec<u8>, w: &Permutation) {
    let window = w.window();
    buf.push(window.len() as u8);
    buf.extend(window.iter().map(|&x| x as u8));
}

fn encode_column(buf: &mut Vec<u8>, col: &Column) {
    buf.extend((col.len() as u32).to_le_bytes());
    for (x, p) in col {
        encode_perm(buf, x);
        let pairs = p.to_pairs();
        buf.extend((pairs.len() as u32).to_le_bytes());
        for (e, c) in pairs {
            buf.extend(e.to_le_bytes());
            buf.extend(c.to_le_bytes());
        }
    }
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8]> {
        if self.pos + n > self.buf.len() {
            return Err(Error::ChecksumMismatch);
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn perm(&mut self) -> Result<Permutation> {
        let len = self.take(1)?[0] as usize;
        let window: Vec<usize> = self.take(len)?.iter().map(|&b| b as usize).collect();
        Permutation::from_window(&window).map_err(|_| Error::ChecksumMismatch)
    }

    fn column(&mut self) -> Result<Column> {
        let n = self.u32()? as usize;
        let mut col = Column::new();
        for _ in 0..n {
            let x = self.perm()?;
            let npairs = self.u32()? as usize;
            let mut pairs = Vec::with_capacity(npairs);
            for _ in 0..npairs {
                let e = i32::from_le_bytes(self.take(4)?.try_into().unwrap());
                let c = i64::from_le_bytes(self.take(8)?.try_into().unwrap());
                pairs.push((e, c));
            }
            col.insert(x, Laurent::from_pairs(&pairs).map_err(|_| Error::ChecksumMismatch)?);
        }
        Ok(col)
    }
}
