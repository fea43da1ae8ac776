//! Robinson-Schensted correspondence, standard tableaux, and the cell
//! structure it induces on the symmetric group.

use std::fmt;

use crate::error::{Error, Result};
use crate::symgroup::{Permutation, SimpleReflection};

/// An integer partition in weakly decreasing order, e.g. `(3, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts.to_vec()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Dominance order on partitions of the same size: `self <= other` iff
    /// every prefix sum of `self` is at most the matching prefix sum of
    /// `other`. Errors when the sizes differ.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch);
        }
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Grow the first row to reach size `n`: the shape of the same
    /// permutation viewed in a larger rank, since each appended fixed point
    /// is a new maximum and lands at the end of row one.
    pub fn pad_to(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if size > n {
            return Err(Error::SizeMismatch);
        }
        if size == n {
            return Ok(self.clone());
        }
        let mut parts = self.0.clone();
        if parts.is_empty() {
            parts.push(n);
        } else {
            parts[0] += n - size;
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A standard Young tableau: rows strictly increase left to right, columns
/// strictly increase top to bottom, entries are `1..=n` each used once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<StandardTableau> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::ShapeMismatch);
            }
            if i > 0 && rows[i - 1].len() < row.len() {
                return Err(Error::ShapeMismatch);
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::ShapeMismatch);
                }
                seen[e] = true;
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::ShapeMismatch);
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::ShapeMismatch);
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Row-insert `x`, bumping down the rows (Schensted insertion).
    /// Returns the cell `(row, col)` where the shape grew.
    fn insert(&mut self, mut x: usize) -> (usize, usize) {
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > x) {
                Some(j) => std::mem::swap(&mut x, &mut row[j]),
                None => {
                    row.push(x);
                    return (i, row.len() - 1);
                }
            }
        }
        self.rows.push(vec![x]);
        (self.rows.len() - 1, 0)
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row:
    /// for `T = Q(w)` this is the right descent set of `w`, for `T = P(w)`
    /// the right descent set of `w^{-1}`.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.size();
        let mut row_of = vec![0usize; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = i;
            }
        }
        (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Robinson-Schensted: the pair `(P(w), Q(w))` of standard tableaux of the
/// same shape, with `w` read as the word `w(1) w(2) ... w(k)` on `k` letters
/// where `k` is the given rank (at least `m(w)`).
pub fn rs(w: &Permutation, rank: usize) -> Result<(StandardTableau, StandardTableau)> {
    if w.support_max() > rank {
        return Err(Error::RankExceeded {
            needed: w.support_max(),
            ceiling: rank,
        });
    }
    let mut p = StandardTableau { rows: Vec::new() };
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for i in 1..=rank {
        let (r, _) = p.insert(w.apply(i));
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(i);
    }
    Ok((p, StandardTableau { rows: q_rows }))
}

/// Inverse Robinson-Schensted: recover `w` from `(P, Q)`.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    // Position of each entry of Q, largest first.
    let mut pos_of = vec![(0usize, 0usize); n + 1];
    for (i, row) in q.rows.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            pos_of[e] = (i, j);
        }
    }
    let mut window = vec![0usize; n];
    for e in (1..=n).rev() {
        let (mut r, c) = pos_of[e];
        let mut x = rows[r].remove(c);
        if rows[r].is_empty() {
            rows.remove(r);
        }
        // Reverse bumping: push x up through the rows above.
        while r > 0 {
            r -= 1;
            let j = rows[r]
                .iter()
                .rposition(|&y| y < x)
                .expect("reverse insertion path exists in a standard tableau");
            std::mem::swap(&mut x, &mut rows[r][j]);
        }
        window[e - 1] = x;
    }
    Permutation::from_window(&window)
}

fn padded_shapes(a: &Permutation, b: &Permutation, rank: usize) -> Result<(Partition, Partition)> {
    let needed = a.support_max().max(b.support_max()).max(1);
    if needed > rank {
        return Err(Error::RankExceeded { needed, ceiling: rank });
    }
    let (pa, _) = rs(a, rank)?;
    let (pb, _) = rs(b, rank)?;
    Ok((pa.shape(), pb.shape()))
}

/// Same left cell: equal recording tableaux `Q`.
pub fn same_left_cell(a: &Permutation, b: &Permutation, rank: usize) -> Result<bool> {
    let needed = a.support_max().max(b.support_max()).max(1);
    if needed > rank {
        return Err(Error::RankExceeded { needed, ceiling: rank });
    }
    Ok(rs(a, rank)?.1 == rs(b, rank)?.1)
}

/// Same right cell: equal insertion tableaux `P`.
pub fn same_right_cell(a: &Permutation, b: &Permutation, rank: usize) -> Result<bool> {
    let needed = a.support_max().max(b.support_max()).max(1);
    if needed > rank {
        return Err(Error::RankExceeded { needed, ceiling: rank });
    }
    Ok(rs(a, rank)?.0 == rs(b, rank)?.0)
}

/// Same two-sided cell: equal shapes.
pub fn same_two_sided_cell(a: &Permutation, b: &Permutation, rank: usize) -> Result<bool> {
    let (sa, sb) = padded_shapes(a, b, rank)?;
    Ok(sa == sb)
}

/// The two-sided order on cells via dominance of shapes: `a <=_J b` iff
/// `shape(P(a))` dominates `shape(P(b))`. The identity (shape `(n)`) is the
/// bottom cell and the longest element (shape `(1^n)`) the top one.
pub fn two_sided_leq(a: &Permutation, b: &Permutation, rank: usize) -> Result<bool> {
    let (sa, sb) = padded_shapes(a, b, rank)?;
    sb.dominance_leq(&sa)
}

/// Descent sets read off an RS pair: `s_i` is a left descent iff `i+1` sits
/// in a strictly lower row of `P`, and a right descent iff it does in `Q`.
pub fn descents_from_tableaux(
    p: &StandardTableau,
    q: &StandardTableau,
) -> (Vec<SimpleReflection>, Vec<SimpleReflection>) {
    let to_refl = |ds: Vec<usize>| ds.into_iter().map(SimpleReflection::new).collect();
    (to_refl(p.descents()), to_refl(q.descents()))
}
