//! An independent oracle for KL polynomials, used to cross-check the
//! production recursion. It never touches the `kl` module: the KL basis
//! element of `w` is characterized as the unique bar-invariant element
//! `H_w + sum_{x < w} p_{x,w} H_x` with `p_{x,w}` in `v Z[v]` of degree at
//! most `l(w) - l(x)`, so we set up the bar-invariance condition as an exact
//! linear system over the unknown integer coefficients and solve it by
//! rational Gaussian elimination. The bar involution itself comes from the
//! `hecke` module, which the unit tests pin down against the defining
//! relations directly.

use std::collections::{BTreeMap, HashMap};

use klstab::hecke::{Basis, HeckeElt};
use klstab::laurent::Laurent;
use klstab::symgroup::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        Frac {
            num: sign * num / g.max(1),
            den: sign * den / g.max(1),
        }
    }

    fn int(n: i128) -> Frac {
        Frac { num: n, den: 1 }
    }

    fn zero() -> Frac {
        Frac::int(0)
    }

    fn is_zero(self) -> bool {
        self.num == 0
    }

    fn add(self, other: Frac) -> Frac {
        Frac::new(
            self.num.checked_mul(other.den).unwrap() + other.num.checked_mul(self.den).unwrap(),
            self.den.checked_mul(other.den).unwrap(),
        )
    }

    fn mul(self, other: Frac) -> Frac {
        Frac::new(
            self.num.checked_mul(other.num).unwrap(),
            self.den.checked_mul(other.den).unwrap(),
        )
    }

    fn neg(self) -> Frac {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }

    fn div(self, other: Frac) -> Frac {
        assert!(other.num != 0, "division by zero");
        Frac::new(
            self.num.checked_mul(other.den).unwrap(),
            self.den.checked_mul(other.num).unwrap(),
        )
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The full KL column of `w` (coefficients of `_H_w` over the standard
/// basis), solved from bar-invariance alone.
pub fn kl_column_oracle(w: &Permutation) -> BTreeMap<Permutation, Laurent> {
    let rank = w.support_max().max(1);
    let lw = w.length() as i32;

    let below: Vec<Permutation> = Permutation::enumerate(rank)
        .into_iter()
        .filter(|x| x != w && x.bruhat_leq(w))
        .collect();

    // Unknowns: a_{x,d} = coefficient of v^d in p_{x,w}, 1 <= d <= l(w)-l(x).
    let mut unknowns: Vec<(Permutation, i32)> = Vec::new();
    for x in &below {
        for d in 1..=(lw - x.length() as i32) {
            unknowns.push((x.clone(), d));
        }
    }
    let ncols = unknowns.len();

    // Bar images of the standard basis elements involved.
    let mut bar_of: HashMap<Permutation, HeckeElt> = HashMap::new();
    for x in below.iter().chain(std::iter::once(w)) {
        let h = HeckeElt::basis_elt(Basis::Standard, rank, x).unwrap();
        bar_of.insert(x.clone(), h.bar().unwrap());
    }

    // One equation per (z, exponent) coefficient of bar(E) - E = 0, where
    // E = H_w + sum a_{x,d} v^d H_x. Rows are [coefficients..., constant].
    let mut rows: BTreeMap<(Permutation, i32), Vec<Frac>> = BTreeMap::new();
    let bump = |rows: &mut BTreeMap<(Permutation, i32), Vec<Frac>>,
                    z: Permutation,
                    e: i32,
                    col: usize,
                    val: i128| {
        let row = rows.entry((z, e)).or_insert_with(|| vec![Frac::zero(); ncols + 1]);
        row[col] = row[col].add(Frac::int(val));
    };

    // Constant part: bar(H_w) - H_w.
    for (z, c) in bar_of[w].terms() {
        for (e, cc) in c.to_pairs() {
            bump(&mut rows, z.clone(), e, ncols, cc as i128);
        }
    }
    bump(&mut rows, w.clone(), 0, ncols, -1);

    // Unknown part: a_{x,d} (v^{-d} bar(H_x) - v^d H_x).
    for (j, (x, d)) in unknowns.iter().enumerate() {
        for (z, c) in bar_of[x].terms() {
            for (e, cc) in c.to_pairs() {
                bump(&mut rows, z.clone(), e - d, j, cc as i128);
            }
        }
        bump(&mut rows, x.clone(), *d, j, -1);
    }

    // Move constants to the right-hand side: M a = -const.
    let mut matrix: Vec<Vec<Frac>> = rows
        .into_values()
        .map(|mut row| {
            row[ncols] = row[ncols].neg();
            row
        })
        .collect();

    // Gaussian elimination; the system must have a unique solution.
    let mut pivot_row = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..ncols {
        let Some(found) = (pivot_row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(pivot_row, found);
        let inv = matrix[pivot_row][col];
        for c in col..=ncols {
            matrix[pivot_row][c] = matrix[pivot_row][c].div(inv);
        }
        for r in 0..matrix.len() {
            if r != pivot_row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col];
                for c in col..=ncols {
                    let delta = factor.mul(matrix[pivot_row][c]).neg();
                    matrix[r][c] = matrix[r][c].add(delta);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    assert_eq!(pivots.len(), ncols, "bar-invariance system is underdetermined for {w}");
    for row in &matrix[pivot_row..] {
        assert!(row[ncols].is_zero(), "bar-invariance system is inconsistent for {w}");
    }

    // Read the solution back into Laurent polynomials.
    let mut column: BTreeMap<Permutation, Laurent> = BTreeMap::new();
    column.insert(w.clone(), Laurent::one());
    for (r, &col) in pivots.iter().enumerate() {
        let value = matrix[r][ncols];
        assert_eq!(value.den, 1, "non-integer KL coefficient for {w}");
        if value.num == 0 {
            continue;
        }
        let (x, d) = &unknowns[col];
        let num = i64::try_from(value.num).expect("coefficient fits i64");
        let entry = column.entry(x.clone()).or_insert_with(Laurent::zero);
        *entry = entry.add(&Laurent::monomial(*d, num)).unwrap();
    }
    column.retain(|_, c| !c.is_zero());
    column
}
