//! Exact division, multivariate GCD and squarefree parts.
//!
//! GCDs are computed recursively: view the inputs as univariate in their
//! first occurring variable with coefficients in the remaining ones, split
//! off contents, and run a primitive pseudo-remainder sequence.


use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;

impl<F: Field> Polynomial<F> {
    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Polynomial<F>) -> Option<Polynomial<F>> {
        if divisor.is_zero() {
            return None;
        }
        let ring = self.ring().clone();
        let (lm, lc) = {
            let t = &divisor.terms()[0];
            (t.0, t.1.clone())
        };
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, F)> = Vec::new();
        while let Some((m, c)) = rem.terms().first().cloned() {
            let t = m.checked_div(&lm)?;
            let q = c * lc_inv.clone();
            rem.sub_mul_term_assign(&q, &t, divisor);
            quot.push((t, q));
        }
        Some(Polynomial::from_sorted_terms(&ring, quot))
    }

    /// Pseudo-remainder of `self` by `b`, both viewed in variable `var`.
    fn pseudo_rem(&self, b: &Polynomial<F>, var: usize) -> Polynomial<F> {
        let db = b.degree_in(var).unwrap_or(0);
        let bc = b.coefficients_in(var);
        let lb = bc[db as usize].clone();
        let mut r = self.clone();
        loop {
            if r.is_zero() {
                return r;
            }
            let dr = r.degree_in(var).unwrap_or(0);
            if dr < db {
                return r;
            }
            let lr = r.coefficients_in(var)[dr as usize].clone();
            let shift = Polynomial::monomial(r.ring(), Monomial::var(var, dr - db), F::one());
            r = &(&lb * &r) - &(&(&lr * &shift) * b);
        }
    }

    /// Content with respect to `var`: gcd of the coefficients.
    fn content_in(&self, var: usize) -> Polynomial<F> {
        let mut g = Polynomial::zero(self.ring());
        for c in self.coefficients_in(var) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        g
    }
}

/// Monic greatest common divisor (leading coefficient one under the ring
/// order). `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.ring());
    }
    let fv = f.variables();
    let gv = g.variables();
    let var = *fv.iter().chain(gv.iter()).min().unwrap();
    let in_f = fv.contains(&var);
    let in_g = gv.contains(&var);
    if !in_f {
        return gcd(f, &g.content_in(var));
    }
    if !in_g {
        return gcd(&f.content_in(var), g);
    }
    let cf = f.content_in(var);
    let cg = g.content_in(var);
    let c = gcd(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    let prim = loop {
        let r = a.pseudo_rem(&b, var);
        if r.is_zero() {
            break b;
        }
        if r.degree_in(var).unwrap_or(0) == 0 {
            break Polynomial::one(f.ring());
        }
        let cr = r.content_in(var);
        a = b;
        b = r.div_exact(&cr).expect("content divides");
    };
    let prim = prim
        .div_exact(&prim.content_in(var))
        .expect("content divides");
    (&c * &prim).monic()
}

/// GCD of a list.
pub fn gcd_all<F: Field>(items: &[Polynomial<F>]) -> Option<Polynomial<F>> {
    let first = items.first()?;
    let mut g = first.monic();
    for p in &items[1..] {
        g = gcd(&g, p);
    }
    Some(g)
}

/// Least common multiple, monic.
pub fn lcm<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero(f.ring());
    }
    let d = gcd(f, g);
    (&f.div_exact(&d).expect("gcd divides") * g).monic()
}

/// Product of the distinct irreducible factors of `f`, computed as
/// `f / gcd(f, df/dx_1, ..., df/dx_n)`, monic.
pub fn squarefree_part<F: Field>(f: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    let mut g = f.clone();
    for v in f.variables() {
        let d = f.derivative(v);
        if !d.is_zero() {
            g = gcd(&g, &d);
        }
        if g.is_constant() {
            break;
        }
    }
    Ok(f.div_exact(&g).expect("gcd divides").monic())
}

/// True when `f` has no repeated factor.
pub fn is_squarefree<F: Field>(f: &Polynomial<F>) -> bool {
    match squarefree_part(f) {
        Ok(s) => s.total_degree() == f.total_degree(),
        Err(_) => false,
    }
}
