//! Exact fraction-free elimination over the integers for rational matrices.
//!
//! Rows are scaled to primitive integer rows before elimination and kept
//! primitive after every update. Pivoting is deterministic: columns are
//! scanned left to right and the first remaining row with a nonzero entry
//! becomes the pivot row.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::scalar::{Rational, UniPoly};

/// Scales a rational row to a primitive integer row (content 1, first
/// nonzero entry keeps its sign).
pub fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in row {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in row.iter_mut() {
        if !c.is_zero() {
            *c = &*c / &g;
        }
    }
}

/// Reduced echelon form computed without fractions.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub ncols: usize,
    /// Nonzero rows, each with a pivot that is zero in every other row.
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let mut work: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "row length mismatch");
                primitive_integer_row(r)
            })
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            if rank == work.len() {
                break;
            }
            let Some(found) = (rank..work.len()).find(|&i| !work[i][col].is_zero()) else {
                continue;
            };
            work.swap(rank, found);
            let pivot_row = work[rank].clone();
            let p = pivot_row[col].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i == rank || row[col].is_zero() {
                    continue;
                }
                let a = row[col].clone();
                for (c, pv) in row.iter_mut().zip(pivot_row.iter()) {
                    *c = &p * &*c - &a * pv;
                }
                make_primitive(row);
            }
            pivots.push(col);
            rank += 1;
        }
        work.truncate(rank);
        Echelon {
            ncols,
            rows: work,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// order, each scaled to a primitive integer vector with a positive
    /// entry at its free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[pc] = -Rational::new(row[free].clone(), row[pc].clone());
                }
            }
            let ints = primitive_integer_row(&v);
            let sign = if ints[free].is_negative() { -1 } else { 1 };
            out.push(
                ints.into_iter()
                    .map(|c| Rational::from_integer(c * sign))
                    .collect(),
            );
        }
        out
    }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    Echelon::new(rows, ncols).kernel()
}

/// Unique solution of `A x = b`, or `None` when the system is inconsistent
/// or underdetermined.
pub fn solve_unique(rows: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(-b.clone());
            r
        })
        .collect();
    let ker = kernel(&augmented, ncols + 1);
    // A unique solution means a one-dimensional kernel with nonzero last entry.
    if ker.len() != 1 || ker[0][ncols].is_zero() {
        return None;
    }
    let last = ker[0][ncols].clone();
    Some(ker[0][..ncols].iter().map(|c| c / &last).collect())
}

/// Row echelon form over `Q[y]` by unimodular row operations (Euclid on each
/// column). Returns the pivots; the rank at a specialization `y = y0` is
/// below `ncols` exactly when fewer than `ncols` pivots exist or one of
/// them vanishes at `y0`.
pub fn poly_echelon_pivots(mut rows: Vec<Vec<UniPoly>>, ncols: usize) -> Vec<UniPoly> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        loop {
            // Row with the lowest-degree nonzero entry; ties go to the lowest index.
            let best = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| (rows[i][col].degree(), i));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut reduced_all = true;
            for i in (top + 1)..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (quot, _) = rows[i][col].div_rem(&rows[top][col]);
                let pivot_row = rows[top].clone();
                for (c, pv) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *c = c.sub(&quot.mul(pv));
                }
                if !rows[i][col].is_zero() {
                    reduced_all = false;
                }
            }
            if reduced_all {
                pivots.push(rows[top][col].monic());
                top += 1;
                break;
            }
        }
        if top == rows.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn mat_vec(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        rows.iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn small_kernel() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
        ];
        let ker = kernel(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(mat_vec(&rows, v).iter().all(Zero::is_zero));
        }
        assert_eq!(ker[0], vec![int(-2), int(1), int(0)]);
    }

    #[test]
    fn rational_entries() {
        let rows = vec![vec![rat(1, 2), rat(-1, 3)]];
        assert_eq!(kernel(&rows, 2), vec![vec![int(2), int(3)]]);
    }

    #[test]
    fn unique_solution() {
        let rows = vec![vec![int(2), int(1)], vec![int(1), int(-1)]];
        let x = solve_unique(&rows, &[int(3), int(0)], 2).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(solve_unique(&rows[..1], &[int(3)], 2).is_none());
    }

    #[test]
    fn polynomial_pivots() {
        let y = UniPoly::affine(int(0), int(1));
        let rows = vec![
            vec![y.clone(), UniPoly::constant(int(1))],
            vec![UniPoly::zero(), y.sub(&UniPoly::constant(int(1)))],
            vec![y.clone(), y.clone()],
        ];
        let piv = poly_echelon_pivots(rows, 2);
        assert_eq!(piv.len(), 2);
        let det = piv.iter().fold(UniPoly::constant(int(1)), |a, p| a.mul(p));
        // The 2x2 minors are y(y-1), y^2 - y and -y(y-1).
        assert_eq!(det, y.mul(&y).sub(&y));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&x| int(x)).collect()).collect();
            let e = Echelon::new(&rows, 4);
            let ker = e.kernel();
            prop_assert_eq!(e.rank() + ker.len(), 4);
            for v in &ker {
                prop_assert!(mat_vec(&rows, v).iter().all(Zero::is_zero));
            }
            // Kernel vectors are independent: stacking them has full rank.
            prop_assert_eq!(rank(&ker, 4), ker.len());
        }
    }
}
