//! Hilbert series of monomial ideals.
//!
//! For a monomial ideal `M` in `n` variables the Hilbert series of `R/M` is
//! `N(t) / (1-t)^n`. The numerator is computed by the pivot recursion
//! `N(M) = N(M + p) + t^deg(p) N(M : p)` with a pure-power pivot, bottoming
//! out at pairwise coprime generators where it factors.

use std::collections::HashMap;

use crate::polyring::Monomial;

/// Integer polynomial in `t`, coefficients from low to high degree.
pub type TPoly = Vec<i64>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn shift(a: &TPoly, k: usize) -> TPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

fn mul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Drops generators divisible by others and sorts canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Hilbert series numerator of `R/M` for the monomial ideal generated by
/// `gens` (any generating set).
pub fn hilbert_numerator(gens: &[Monomial]) -> TPoly {
    let mut memo = HashMap::new();
    numerator(minimalize(gens.to_vec()), &mut memo)
}

fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, TPoly>) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // count occurrences of each variable
    let mut count = [0usize; crate::polyring::MAX_VARS];
    for m in &gens {
        for i in m.support() {
            count[i] += 1;
        }
    }
    let (var, &c) = count.iter().enumerate().max_by_key(|&(i, c)| (*c, usize::MAX - i)).unwrap();
    let result = if c <= 1 {
        // pairwise coprime: product of (1 - t^deg)
        gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            mul(&acc, &trim(f))
        })
    } else {
        let mut exps: Vec<u16> = gens
            .iter()
            .filter(|m| m.exp(var) > 0 && m.support().count() > 1)
            .map(|m| m.exp(var))
            .collect();
        exps.sort_unstable();
        let e = exps[exps.len() / 2];
        let pivot = Monomial::var(var, e);
        let mut with_pivot = gens.clone();
        with_pivot.push(pivot);
        let colon: Vec<Monomial> = gens.iter().map(|m| pivot.gcd(m).quotient_of(m)).collect();
        let a = numerator(minimalize(with_pivot), memo);
        let b = numerator(minimalize(colon), memo);
        add(&a, &shift(&b, e as usize))
    };
    memo.insert(gens, result.clone());
    result
}

/// Affine Krull dimension and degree of `R/M` for `n` variables; `None`
/// when `M` is the unit ideal.
pub fn dimension_degree_monomial(gens: &[Monomial], n: usize) -> Option<(usize, u64)> {
    let mut num = hilbert_numerator(gens);
    if num.is_empty() {
        return None;
    }
    let mut r = 0;
    // divide by (1 - t) while t = 1 is a root
    while num.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; num.len() - 1];
        let mut acc = 0;
        for (i, c) in num.iter().enumerate().take(num.len() - 1) {
            acc += c;
            q[i] = acc;
        }
        num = trim(q);
        r += 1;
    }
    let deg = num.iter().sum::<i64>();
    Some((n - r, deg as u64))
}

/// Number of monomials outside `M`; `None` when infinite.
pub fn standard_monomial_count(gens: &[Monomial], n: usize) -> Option<u64> {
    let pure = (0..n).all(|i| {
        gens.iter()
            .any(|m| m.exp(i) > 0 && m.support().all(|j| j == i))
    });
    if !pure {
        return None;
    }
    dimension_degree_monomial(gens, n).map(|(_, d)| d).or(Some(0))
}
