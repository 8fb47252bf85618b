use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::monomial::{Monomial, MonomialOrder};
use super::ring::{Ring, RingRef};
use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse multivariate polynomial.
///
/// Terms are kept sorted in strictly decreasing order under the ring's
/// monomial order and never carry a zero coefficient, so equality is a plain
/// comparison of term lists.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_variables(&other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.names().hash(state);
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn constant(ring: &RingRef, c: F) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: F) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(index, 1), F::one())
    }

    /// Looks a variable up by name.
    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps already sorted, zero-free terms.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Degree when homogeneous, otherwise an error naming the polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous(self.to_string()));
        }
        Ok(self.total_degree().unwrap_or(0))
    }

    /// Homogeneous in the variables of `range` (other variables ignored).
    pub fn is_homogeneous_in(&self, range: std::ops::Range<usize>) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.partial_degree(range.clone()));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: format!("{}{}", F::name(), self.ring),
                right: format!("{}{}", F::name(), other.ring),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| -c.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    /// Sum `self + map(other)` by merging the sorted term lists.
    fn merge(&self, other: &Self, map: impl Fn(&F) -> F) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, map(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.clone() + map(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, map(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, F> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.clone() * cb.clone();
                acc.entry(ma.mul(mb))
                    .and_modify(|e| *e += c.clone())
                    .or_insert(c);
            }
        }
        let terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut p = Polynomial {
            ring: self.ring.clone(),
            terms,
        };
        let ring = p.ring.clone();
        p.terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        p
    }

    /// Multiplication by `c * m`; monomial orders are multiplicative so the
    /// result stays sorted.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), d.clone() * c.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    /// `self - c * m * g` in place.
    pub(crate) fn sub_mul_term_assign(&mut self, c: &F, m: &Monomial, g: &Self) {
        let a = std::mem::take(&mut self.terms);
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut bi = b.iter().map(|(t, d)| (t.mul(m), d.clone() * c.clone())).peekable();
        let mut ai = a.into_iter().peekable();
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => self.ring.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(ai.next().unwrap()),
                Ordering::Less => {
                    let (t, d) = bi.next().unwrap();
                    out.push((t, -d));
                }
                Ordering::Equal => {
                    let (t, x) = ai.next().unwrap();
                    let (_, y) = bi.next().unwrap();
                    let s = x - y;
                    if !s.is_zero() {
                        out.push((t, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// Scales so that the leading coefficient under the ring order is one.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Reporting normal form: leading coefficient one under grevlex.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = if self.ring.order() == MonomialOrder::GrevLex {
            self.terms[0].1.clone()
        } else {
            let ring = &self.ring;
            let n = ring.nvars();
            self.terms
                .iter()
                .max_by(|a, b| MonomialOrder::GrevLex.cmp(&a.0, &b.0, n))
                .map(|t| t.1.clone())
                .unwrap()
        };
        self.scale(&lc.inv())
    }

    /// Formal partial derivative by variable index.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .filter_map(|(m, c)| {
                let e = m.exp(var);
                let c = c.clone() * F::from_i64(e as i64);
                if c.is_zero() {
                    return None;
                }
                let mut m = *m;
                m.set_exp(var, e - 1);
                Some((m, c))
            })
            .collect();
        // lowering one exponent can reorder terms only under lex-free orders
        // when degrees tie; re-sort to be safe
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Partial derivative by variable name.
    pub fn differentiate(&self, var: &str) -> Result<Self> {
        Ok(self.derivative(self.ring.var_index(var)?))
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.ring.nvars()).map(|i| self.derivative(i)).collect()
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong length");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in m.support() {
                v *= point[i].pow_u64(m.exp(i) as u64);
            }
            acc += v;
        }
        acc
    }

    /// Simultaneous substitution `x_i <- images[i]`; every image lives in
    /// `target`.
    pub fn substitute_all(&self, target: &RingRef, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Invalid(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        for img in images {
            if !img.ring.same_variables(target) {
                return Err(Error::RingMismatch {
                    left: format!("{}{}", F::name(), img.ring),
                    right: format!("{}{}", F::name(), target),
                });
            }
        }
        let images: Vec<Polynomial<F>> = images
            .iter()
            .map(|p| p.with_ring_unchecked(target))
            .collect();
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for i in m.support() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_impl(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_impl(&powers[i][e]);
            }
            for (t, d) in prod.terms {
                acc.entry(t).and_modify(|e| *e += d.clone()).or_insert(d);
            }
        }
        Ok(Polynomial::from_terms(
            target,
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        ))
    }

    /// Substitutes the named variables, leaving the others in place. Images
    /// live in the same ring.
    pub fn substitute(&self, assignment: &[(&str, Polynomial<F>)]) -> Result<Self> {
        let mut images: Vec<Polynomial<F>> = (0..self.ring.nvars())
            .map(|i| Polynomial::var(&self.ring, i))
            .collect();
        for (name, img) in assignment {
            let i = self.ring.var_index(name)?;
            self.check_ring(img)?;
            images[i] = img.clone();
        }
        self.substitute_all(&self.ring.clone(), &images)
    }

    /// Substitutes constants for the variables `vars`.
    pub fn specialize(&self, vars: &[(usize, F)]) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in &self.terms {
            let mut m = *m;
            let mut c = c.clone();
            for (i, v) in vars {
                let e = m.exp(*i);
                if e > 0 {
                    c *= v.pow_u64(e as u64);
                    m.set_exp(*i, 0);
                }
            }
            if !c.is_zero() {
                acc.entry(m).and_modify(|e| *e += c.clone()).or_insert(c);
            }
        }
        Polynomial::from_terms(
            &self.ring,
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        )
    }

    /// Reinterprets the terms in a ring with the same variables (possibly a
    /// different order).
    pub fn with_ring(&self, ring: &RingRef) -> Result<Self> {
        if !self.ring.same_variables(ring) {
            return Err(Error::RingMismatch {
                left: format!("{}{}", F::name(), self.ring),
                right: format!("{}{}", F::name(), ring),
            });
        }
        Ok(self.with_ring_unchecked(ring))
    }

    fn with_ring_unchecked(&self, ring: &RingRef) -> Self {
        if Arc::ptr_eq(ring, &self.ring) || **ring == *self.ring {
            return Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            };
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        self.with_ring_unchecked(&self.ring.with_order(order))
    }

    /// Moves the polynomial into `target` via `var_map[i] = Some(j)`
    /// (variable `i` becomes target variable `j`). Fails if a variable that
    /// occurs has no image.
    pub fn map_ring(&self, target: &RingRef, var_map: &[Option<usize>]) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut t = Monomial::one();
            for i in m.support() {
                match var_map.get(i).copied().flatten() {
                    Some(j) => t.set_exp(j, t.exp(j) + m.exp(i)),
                    None => {
                        return Err(Error::Invalid(format!(
                            "variable {} has no image in {}",
                            self.ring.name(i),
                            target
                        )))
                    }
                }
            }
            terms.push((t, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves into `target`, matching variables by name.
    pub fn map_by_name(&self, target: &RingRef) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n).ok())
            .collect();
        self.map_ring(target, &map)
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial<F>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            let mut t = *m;
            t.set_exp(var, 0);
            buckets[e].push((t, c.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| Polynomial::from_terms(&self.ring, ts))
            .collect()
    }

    /// Image under the coefficient map through the rationals; `None` when a
    /// denominator vanishes in `G`.
    pub fn convert<G: Field>(&self) -> Option<Polynomial<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let c = G::from_rational(&c.to_rational())?;
            if !c.is_zero() {
                terms.push((*m, c));
            }
        }
        Some(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    /// Homogenizes with respect to variable `h` (which must not occur).
    pub fn homogenize(&self, h: usize) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = *m;
                t.set_exp(h, (d - m.degree()) as u16);
                (t, c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sum of polynomials in `ring`.
pub fn sum<F: Field>(ring: &RingRef, items: impl IntoIterator<Item = Polynomial<F>>) -> Polynomial<F> {
    items
        .into_iter()
        .fold(Polynomial::zero(ring), |acc, p| &acc + &p)
}

/// Linear form `sum coeffs[i] * x_{vars[i]}`.
pub fn linear_form<F: Field>(ring: &RingRef, vars: &[usize], coeffs: &[F]) -> Polynomial<F> {
    let terms = vars
        .iter()
        .zip(coeffs)
        .map(|(&v, c)| (Monomial::var(v, 1), c.clone()))
        .collect();
    Polynomial::from_terms(ring, terms)
}

impl<F: Field> Polynomial<F> {
    /// Convenience for tests and fixtures: the ring of `names` under grevlex.
    pub fn ring_of(names: &[&str]) -> RingRef {
        Ring::grevlex(names).expect("valid variable names")
    }
}
