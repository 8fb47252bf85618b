//! Small exact linear algebra: ranks over a field and minors of polynomial
//! matrices.

use std::collections::HashMap;

use itertools::Itertools;

use crate::field::Field;
use crate::polyring::{Polynomial, RingRef};

/// Rank of a dense matrix over a field.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for j in c..ncols {
                    let t = f.clone() * m[r][j].clone();
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Determinant of a square matrix over a field.
pub fn determinant<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].inv();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for j in c..n {
                    let t = f.clone() * m[c][j].clone();
                    m[i][j] -= t;
                }
            }
        }
    }
    det
}

/// Determinant of a square polynomial matrix by Laplace expansion along the
/// first row, memoized on column subsets.
pub fn poly_determinant<F: Field>(ring: &RingRef, m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    let mut memo = HashMap::new();
    laplace(ring, m, 0, &cols, &mut memo)
}

fn laplace<F: Field>(
    ring: &RingRef,
    m: &[Vec<Polynomial<F>>],
    row: usize,
    cols: &[usize],
    memo: &mut HashMap<Vec<usize>, Polynomial<F>>,
) -> Polynomial<F> {
    if cols.is_empty() {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = laplace(ring, m, row + 1, &rest, memo);
        let term = &m[row][c] * &sub;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    memo.insert(cols.to_vec(), acc.clone());
    acc
}

/// Minor on the given rows and columns.
pub fn minor<F: Field>(
    ring: &RingRef,
    m: &[Vec<Polynomial<F>>],
    rows: &[usize],
    cols: &[usize],
) -> Polynomial<F> {
    let sub: Vec<Vec<Polynomial<F>>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    poly_determinant(ring, &sub)
}

/// All nonzero `k x k` minors, deduplicated up to scalars, in a
/// deterministic order. Rows in `required_rows` must be part of every minor.
pub fn minors<F: Field>(
    ring: &RingRef,
    m: &[Vec<Polynomial<F>>],
    k: usize,
    required_rows: &[usize],
) -> Vec<Polynomial<F>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    if k == 0 {
        return vec![Polynomial::one(ring)];
    }
    if k > nrows || k > ncols {
        return Vec::new();
    }
    let mut out: Vec<Polynomial<F>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for rows in (0..nrows).combinations(k) {
        if !required_rows.iter().all(|r| rows.contains(r)) {
            continue;
        }
        for cols in (0..ncols).combinations(k) {
            let d = minor(ring, m, &rows, &cols);
            if d.is_zero() {
                continue;
            }
            let d = d.monic();
            if seen.insert(d.clone()) {
                out.push(d);
            }
        }
    }
    out
}

/// Jacobian matrix `(d f_i / d x_v)` for the variables `vars`.
pub fn jacobian<F: Field>(polys: &[Polynomial<F>], vars: &[usize]) -> Vec<Vec<Polynomial<F>>> {
    polys
        .iter()
        .map(|f| vars.iter().map(|&v| f.derivative(v)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::polyring::{parse_polynomial, Ring};

    type F = Fp<101>;

    #[test]
    fn rank_and_determinant() {
        let m: Vec<Vec<F>> = vec![
            vec![F::from_i64(1), F::from_i64(2), F::from_i64(3)],
            vec![F::from_i64(2), F::from_i64(4), F::from_i64(6)],
            vec![F::from_i64(0), F::from_i64(1), F::from_i64(1)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(determinant(&m), F::from_i64(0));
        let id: Vec<Vec<F>> = (0..3)
            .map(|i| (0..3).map(|j| F::from_i64((i == j) as i64 * 5)).collect())
            .collect();
        assert_eq!(determinant(&id), F::from_i64(125));
    }

    #[test]
    fn symmetric_determinant() {
        let r = Ring::grevlex(&["a", "b", "c", "d", "e", "f"]).unwrap();
        let p = |s: &str| parse_polynomial::<Rational>(&r, s).unwrap();
        let m = vec![
            vec![p("a"), p("d"), p("e")],
            vec![p("d"), p("b"), p("f")],
            vec![p("e"), p("f"), p("c")],
        ];
        assert_eq!(
            poly_determinant(&r, &m),
            p("a*b*c + 2*d*e*f - a*f^2 - b*e^2 - c*d^2")
        );
        // transposed pairs coincide for a symmetric matrix
        assert_eq!(minors(&r, &m, 2, &[]).len(), 6);
    }
}
