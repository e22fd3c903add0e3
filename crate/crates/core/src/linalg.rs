//! Exact linear algebra: fraction-free integer kernels and Gaussian
//! elimination over an arbitrary exact field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::unipoly::Field;

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    if let Some(first) = row.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// Reduced echelon form by integer row operations only; every row is kept
/// primitive. Returns the pivot columns in order.
pub fn fraction_free_echelon(rows: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        make_primitive(&mut rows[r]);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the rational kernel `{v : rows · v = 0}` as primitive integer
/// vectors, one per free column.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let pivots = fraction_free_echelon(&mut m, ncols);
    let scale = m
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |acc, (row, &c)| acc.lcm(&row[c]));
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigInt::zero(); ncols];
        v[f] = scale.clone();
        for (row, &c) in m.iter().zip(&pivots) {
            v[c] = -(&row[f] * &scale) / &row[c];
        }
        make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

/// Row echelon form over a field; returns pivot columns.
pub fn echelon<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    echelon(&mut m, ncols).len()
}

/// Kernel basis over a field, one vector per free column.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &c) in m.iter().zip(&pivots) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_exponent_differences() {
        // x^2 - 2x + 1 and y - 1 in (x, y, z): kernel is the z axis
        let rows = vec![bi(&[1, 0, 0]), bi(&[2, 0, 0]), bi(&[0, 1, 0])];
        assert_eq!(integer_kernel(&rows, 3), vec![bi(&[0, 0, 1])]);
        // x + y + 1: differences (1,-1,0), (1,0,0)
        let rows = vec![bi(&[1, -1, 0]), bi(&[1, 0, 0])];
        assert_eq!(integer_kernel(&rows, 3), vec![bi(&[0, 0, 1])]);
        assert_eq!(integer_kernel(&[], 2).len(), 2);
    }

    #[test]
    fn kernel_with_nontrivial_pivots() {
        let rows = vec![bi(&[2, 3, 0]), bi(&[0, 4, 6])];
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot: BigInt = r.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(k[0], bi(&[9, -6, 4]));
    }

    #[test]
    fn field_rank_and_kernel() {
        let m: Vec<Vec<Rational>> = vec![
            vec![int(1), int(0), int(1)],
            vec![int(0), int(1), int(1)],
            vec![int(1), int(1), int(2)],
        ];
        assert_eq!(rank(&m), 2);
        let k = kernel(&m, 3);
        assert_eq!(k, vec![vec![int(-1), int(-1), int(1)]]);
    }
}
