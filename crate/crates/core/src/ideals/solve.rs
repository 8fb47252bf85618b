//! Points of zero-dimensional ideals.

use std::collections::HashMap;

use super::Ideal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{Monomial, Polynomial, UniPoly};

/// Points defined over the coefficient field plus the number of further
/// geometric points (conjugates over an extension) that were not resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<F: Field> {
    pub points: Vec<Vec<F>>,
    pub unresolved: u64,
}

impl<F: Field> PointSet<F> {
    pub fn total(&self) -> u64 {
        self.points.len() as u64 + self.unresolved
    }
}

/// Monic generator of `I ∩ F[x_var]` for an ideal with finite colength,
/// found as the first linear relation among the normal forms of powers.
pub fn univariate_eliminant<F: Field>(ideal: &Ideal<F>, var: usize) -> Result<Polynomial<F>> {
    let ring = ideal.ring().clone();
    if ideal.is_unit() {
        return Ok(Polynomial::one(&ring));
    }
    let colength = ideal
        .quotient_colength()
        .ok_or_else(|| Error::Unsupported("ideal is not zero-dimensional".into()))? as usize;
    let gb = ideal.groebner();
    let x = Polynomial::var(gb.ring(), var);
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    // echelon rows: (pivot column, dense vector, combination of powers)
    let mut rows: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new();
    let mut nf = gb.normal_form(&Polynomial::one(gb.ring()));
    for k in 0..=colength {
        if k > 0 {
            nf = gb.normal_form(&(&nf * &x));
        }
        let mut v = vec![F::zero(); colength];
        for (m, c) in nf.terms() {
            let next = index.len();
            let i = *index.entry(*m).or_insert(next);
            v[i] = c.clone();
        }
        let mut combo = vec![F::zero(); colength + 1];
        combo[k] = F::one();
        for (p, row, rc) in &rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / row[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= f.clone() * b.clone();
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a -= f.clone() * b.clone();
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            Some(p) => rows.push((p, v, combo)),
            None => {
                let terms = combo
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (Monomial::var(var, e as u16), c))
                    .collect();
                return Ok(Polynomial::from_terms(&ring, terms).monic());
            }
        }
    }
    unreachable!("powers of a variable are dependent modulo a finite-colength ideal")
}

/// Points of a zero-dimensional affine ideal.
pub fn affine_points<F: Field>(ideal: &Ideal<F>) -> Result<PointSet<F>> {
    if ideal.is_unit() {
        return Ok(PointSet {
            points: Vec::new(),
            unresolved: 0,
        });
    }
    let geometric = ideal
        .zero_dimensional_radical()?
        .quotient_colength()
        .ok_or_else(|| Error::Unsupported("ideal is not zero-dimensional".into()))?;
    let mut points = Vec::new();
    descend(ideal, 0, &mut Vec::new(), &mut points)?;
    Ok(PointSet {
        unresolved: geometric - points.len() as u64,
        points,
    })
}

fn descend<F: Field>(
    ideal: &Ideal<F>,
    var: usize,
    prefix: &mut Vec<F>,
    out: &mut Vec<Vec<F>>,
) -> Result<()> {
    let ring = ideal.ring();
    if var == ring.nvars() {
        out.push(prefix.clone());
        return Ok(());
    }
    let e = univariate_eliminant(ideal, var)?;
    let u = UniPoly::from_polynomial(&e, var).expect("eliminant is univariate");
    for a in u.roots() {
        let lin = &Polynomial::var(ring, var) - &Polynomial::constant(ring, a.clone());
        let next = ideal.with_generators(&[lin]);
        if next.is_unit() {
            continue;
        }
        prefix.push(a);
        descend(&next, var + 1, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Points of a homogeneous ideal whose projective zero set is finite,
/// normalized so the first nonzero coordinate is one.
pub fn projective_points<F: Field>(ideal: &Ideal<F>) -> Result<PointSet<F>> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut all = PointSet {
        points: Vec::new(),
        unresolved: 0,
    };
    for i in 0..n {
        // chart: x_0 = .. = x_{i-1} = 0, x_i = 1
        let mut extra: Vec<Polynomial<F>> = (0..i).map(|j| Polynomial::var(&ring, j)).collect();
        extra.push(&Polynomial::var(&ring, i) - &Polynomial::one(&ring));
        let chart = ideal.with_generators(&extra);
        if chart.is_unit() {
            continue;
        }
        if chart.quotient_colength().is_none() {
            return Err(Error::Unsupported(
                "projective zero set is positive-dimensional".into(),
            ));
        }
        let p = affine_points(&chart)?;
        all.points.extend(p.points);
        all.unresolved += p.unresolved;
    }
    Ok(all)
}
