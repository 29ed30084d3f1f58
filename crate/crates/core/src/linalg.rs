//! Exact linear algebra over the rationals: reduced row echelon form and
//! the kernel/rank/solve/inverse operations built on it.

use crate::scalar::Scalar;

pub type Row = Vec<Scalar>;

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(rows: &mut [Row]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot_row) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot_row);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&factor * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel of the matrix given by `rows`.
pub fn kernel_basis(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Scalar::zero(); ncols];
        v[f] = Scalar::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work[ri][f];
        }
        basis.push(v);
    }
    basis
}

pub fn kernel_dimension(rows: &[Row], ncols: usize) -> usize {
    ncols - rank(rows)
}

/// Solve `A x = b` for one solution, if consistent.
pub fn solve(a: &[Row], b: &[Scalar]) -> Option<Row> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Row> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None; // inconsistent
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if nonsingular.
pub fn invert(a: &[Row]) -> Option<Vec<Row>> {
    let n = a.len();
    let mut aug: Vec<Row> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert expects a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Express `target` in the span of `basis`, if possible.
pub fn coordinates_in_span(basis: &[Row], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let ncols = basis.len();
    if ncols == 0 {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let dim = basis[0].len();
    // transpose: columns are basis vectors
    let a: Vec<Row> = (0..dim)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    solve(&a, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let rows = vec![vec![s(1), s(2), s(3)]];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = &(&v[0] + &(&s(2) * &v[1])) + &(&s(3) * &v[2]);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn invert_2x2() {
        let a = vec![vec![s(2), s(1)], vec![s(5), s(3)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![s(3), s(-1)], vec![s(-5), s(2)]]);
    }

    #[test]
    fn solve_inconsistent_returns_none() {
        let a = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        assert!(solve(&a, &[s(1), s(3)]).is_none());
    }

    #[test]
    fn coordinates_in_span_works() {
        let basis = vec![vec![s(1), s(0), s(1)], vec![s(0), s(1), s(1)]];
        let coords = coordinates_in_span(&basis, &[s(2), s(3), s(5)]).unwrap();
        assert_eq!(coords, vec![s(2), s(3)]);
        assert!(coordinates_in_span(&basis, &[s(1), s(0), s(0)]).is_none());
    }
}
