//! Finite-support symmetric group elements in one-line notation.
//!
//! A [`Permutation`] stores the window `w(1), ..., w(m)` with trailing fixed
//! points trimmed, so an element of `S_n` and its image in `S_{n+1}` are the
//! same value. This makes cross-rank statements (`x` viewed at several ranks)
//! plain equalities.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The elementary transposition `(i, i+1)`, indexed from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleReflection(u8);

impl SimpleReflection {
    pub fn new(index: usize) -> Self {
        assert!(index >= 1 && index <= u8::MAX as usize, "simple reflection index out of range");
        SimpleReflection(index as u8)
    }

    /// The index `i` of the transposition `(i, i+1)`.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for SimpleReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A permutation of the positive integers fixing all but finitely many points,
/// stored in canonical one-line notation (trailing fixed points trimmed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Build from one-line notation. The window must be a permutation of
    /// `{1, ..., m}`; trailing fixed points are trimmed.
    pub fn from_window(window: &[usize]) -> Result<Self> {
        let m = window.len();
        if m > u8::MAX as usize {
            return Err(Error::Parse("window too long".into()));
        }
        let mut seen = vec![false; m];
        for &x in window {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::Parse(format!(
                    "window {:?} is not a permutation of 1..={}",
                    window, m
                )));
            }
            seen[x - 1] = true;
        }
        let mut w: Vec<u8> = window.iter().map(|&x| x as u8).collect();
        while let Some(&last) = w.last() {
            if last as usize == w.len() {
                w.pop();
            } else {
                break;
            }
        }
        Ok(Permutation { window: w })
    }

    pub fn simple(s: SimpleReflection) -> Self {
        let i = s.index();
        let mut window: Vec<u8> = (1..=(i + 1) as u8).collect();
        window.swap(i - 1, i);
        Permutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// The image `w(i)`, 1-based; fixed beyond the window.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1] as usize
        } else {
            i
        }
    }

    /// `m(w)`: the largest moved point, with `m(e) = 0`.
    pub fn support_max(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<usize> {
        self.window.iter().map(|&x| x as usize).collect()
    }

    /// Group product `self ∘ other` (self applied after other).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let m = self.support_max().max(other.support_max());
        let window: Vec<usize> = (1..=m).map(|i| self.apply(other.apply(i))).collect();
        Permutation::from_window(&window).expect("composition of permutations is a permutation")
    }

    pub fn inverse(&self) -> Permutation {
        let m = self.support_max();
        let mut window = vec![0usize; m];
        for i in 1..=m {
            window[self.apply(i) - 1] = i;
        }
        Permutation::from_window(&window).expect("inverse of a permutation is a permutation")
    }

    /// Right product `w · s_i`: swaps the window entries at positions `i, i+1`.
    pub fn times_gen_right(&self, s: SimpleReflection) -> Permutation {
        let i = s.index();
        let m = self.support_max().max(i + 1);
        let mut window: Vec<usize> = (1..=m).map(|j| self.apply(j)).collect();
        window.swap(i - 1, i);
        Permutation::from_window(&window).expect("gen product is a permutation")
    }

    /// Left product `s_i · w`: swaps the values `i` and `i+1`.
    pub fn times_gen_left(&self, s: SimpleReflection) -> Permutation {
        let i = s.index();
        let m = self.support_max().max(i + 1);
        let window: Vec<usize> = (1..=m)
            .map(|j| {
                let v = self.apply(j);
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation::from_window(&window).expect("gen product is a permutation")
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let m = self.window.len();
        let mut count = 0;
        for i in 0..m {
            for j in (i + 1)..m {
                if self.window[i] > self.window[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `rds(w) = { s_i : w(i) > w(i+1) }`.
    pub fn right_descents(&self) -> Vec<SimpleReflection> {
        let m = self.support_max();
        (1..m)
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .map(SimpleReflection::new)
            .collect()
    }

    /// `lds(w) = rds(w^{-1})`.
    pub fn left_descents(&self) -> Vec<SimpleReflection> {
        self.inverse().right_descents()
    }

    pub fn has_right_descent(&self, s: SimpleReflection) -> bool {
        let i = s.index();
        self.apply(i) > self.apply(i + 1)
    }

    pub fn has_left_descent(&self, s: SimpleReflection) -> bool {
        // s w < w  iff  w^{-1}(i) > w^{-1}(i+1), tested without materializing
        // the inverse: position of i comes after position of i+1.
        let i = s.index();
        self.position_of(i) > self.position_of(i + 1)
    }

    fn position_of(&self, value: usize) -> usize {
        for (p, &v) in self.window.iter().enumerate() {
            if v as usize == value {
                return p + 1;
            }
        }
        value
    }

    /// Bruhat order via Ehresmann's criterion: `x <= y` iff for every k the
    /// sorted prefix `{x(1..k)}` is entrywise <= the sorted prefix `{y(1..k)}`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        if self.length() > other.length() {
            return false;
        }
        let m = self.support_max().max(other.support_max());
        for k in 1..m {
            let mut a: Vec<usize> = (1..=k).map(|i| self.apply(i)).collect();
            let mut b: Vec<usize> = (1..=k).map(|i| other.apply(i)).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// A deterministic reduced word: repeatedly strip the smallest right
    /// descent. The product of the result, left to right, is `self`.
    pub fn reduced_word(&self) -> Vec<SimpleReflection> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let s = w.right_descents().into_iter().min().expect("non-identity has a descent");
            word.push(s);
            w = w.times_gen_right(s);
        }
        word.reverse();
        word
    }

    /// Product of a word of simple reflections, left to right.
    pub fn from_word(word: &[SimpleReflection]) -> Permutation {
        let mut w = Permutation::identity();
        for &s in word {
            w = w.compose(&Permutation::simple(s));
        }
        w
    }

    /// The longest element `w_0` of `S_n`, reversing `1..=n`.
    pub fn longest_element(n: usize) -> Permutation {
        let window: Vec<usize> = (1..=n).rev().collect();
        Permutation::from_window(&window).expect("reversal is a permutation")
    }

    /// All `n!` elements of `S_n`, sorted by the total order.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut window: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, window: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if window.len() == n {
                out.push(Permutation::from_window(window).unwrap());
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    window.push(v);
                    rec(n, window, used, out);
                    window.pop();
                    used[v - 1] = false;
                }
            }
        }
        rec(n, &mut window, &mut used, &mut out);
        out.sort();
        out
    }

    /// The Bruhat interval `{ z : x <= z <= y }`; empty when incomparable.
    pub fn bruhat_interval(x: &Permutation, y: &Permutation) -> Vec<Permutation> {
        Permutation::enumerate(y.support_max())
            .into_iter()
            .filter(|z| x.bruhat_leq(z) && z.bruhat_leq(y))
            .collect()
    }

    /// Word form, e.g. `s1*s2*s1`; the identity prints as `e`.
    pub fn word_string(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        self.reduced_word()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parse either window form `[2,1]` or word form `s1*s2` (or `e`).
    /// Words need not be reduced.
    pub fn parse(text: &str) -> Result<Permutation> {
        let t = text.trim();
        if t == "e" || t == "[]" {
            return Ok(Permutation::identity());
        }
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let window: Vec<usize> = inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad window entry in {t:?}")))
                })
                .collect::<Result<_>>()?;
            return Permutation::from_window(&window);
        }
        let mut word = Vec::new();
        for part in t.split('*') {
            let part = part.trim();
            let idx = part
                .strip_prefix('s')
                .and_then(|r| r.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::Parse(format!("bad word letter {part:?} in {t:?}")))?;
            word.push(SimpleReflection::new(idx));
        }
        Ok(Permutation::from_word(&word))
    }
}

/// Total order by (length, lexicographic window); used everywhere a
/// deterministic iteration or output order is needed.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.window.cmp(&other.window))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
