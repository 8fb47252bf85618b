//! Polynomial ideals: Groebner bases, elimination, saturation, membership,
//! Hilbert-series dimension and degree, colength, and point solving.

mod groebner;
pub mod hilbert;
mod io;
mod solve;

use std::sync::{Arc, OnceLock};

pub use groebner::{buchberger, GroebnerBasis};
pub use io::{parse_ideal, parse_ring_header, RingHeader};
pub(crate) use io::content_lines;
pub use solve::{affine_points, projective_points, univariate_eliminant, PointSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{squarefree_part, MonomialOrder, Polynomial, Ring, RingRef};

/// A finitely generated ideal. The grevlex basis is computed lazily and
/// cached.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef,
    gens: Vec<Polynomial<F>>,
    basis: Arc<OnceLock<GroebnerBasis<F>>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; the rest are moved into `ring`.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            out.push(g.with_ring(ring)?);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            basis: Arc::new(OnceLock::new()),
        })
    }

    /// As [`Ideal::new`] for generators already known to live in `ring`.
    pub fn from_generators(ring: &RingRef, gens: Vec<Polynomial<F>>) -> Self {
        Self::new(ring, gens).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::from_generators(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::from_generators(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Reduced basis under grevlex on the ring's variables.
    pub fn groebner(&self) -> &GroebnerBasis<F> {
        self.basis.get_or_init(|| {
            let r = if self.ring.order() == MonomialOrder::GrevLex {
                self.ring.clone()
            } else {
                self.ring.with_order(MonomialOrder::GrevLex)
            };
            buchberger(&r, &self.gens)
        })
    }

    /// Reduced basis under an arbitrary order.
    pub fn groebner_with(&self, order: MonomialOrder) -> GroebnerBasis<F> {
        if order == MonomialOrder::GrevLex {
            return self.groebner().clone();
        }
        buchberger(&self.ring.with_order(order), &self.gens)
    }

    /// The same ideal presented by its reduced grevlex basis.
    pub fn reduced(&self) -> Self {
        let elems = self
            .groebner()
            .elements()
            .iter()
            .map(|g| g.with_ring(&self.ring).unwrap())
            .collect();
        Self::from_generators(&self.ring, elems)
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant()) || self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        self.groebner()
            .normal_form(f)
            .with_ring(&self.ring)
            .unwrap()
    }

    pub fn member(&self, f: &Polynomial<F>) -> bool {
        f.is_zero() || self.normal_form(f).is_zero()
    }

    /// Whether some power of `f` lies in the ideal (Rabinowitsch).
    pub fn radical_member(&self, f: &Polynomial<F>) -> bool {
        if f.is_zero() || self.member(f) {
            return true;
        }
        let (ring, w) = self.with_fresh_variable("w", MonomialOrder::GrevLex);
        let mut gens = self.moved_gens(&ring);
        let f = f.map_by_name(&ring).unwrap();
        gens.push(&Polynomial::one(&ring) - &(&Polynomial::var(&ring, w) * &f));
        buchberger(&ring, &gens).is_unit()
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Ideal<F>) -> bool {
        self.gens.iter().all(|g| other.member(g))
    }

    /// `V(other) ⊆ V(self)` over the algebraic closure.
    pub fn radical_contains(&self, other: &Ideal<F>) -> bool {
        self.gens.iter().all(|g| other.radical_member(g))
    }

    /// Equality as ideals: identical reduced grevlex bases.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.ring.same_variables(&other.ring) && self.groebner().elements() == other.groebner().elements()
    }

    /// Equality of zero sets over the algebraic closure.
    pub fn radical_equals(&self, other: &Ideal<F>) -> bool {
        self.radical_contains(other) && other.radical_contains(self)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.map_by_name(&self.ring)?);
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial<F>]) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::from_generators(&self.ring, gens)
    }

    /// Eliminates the first `k` variables.
    pub fn eliminate(&self, k: usize) -> Ideal<F> {
        let vars: Vec<usize> = (0..k).collect();
        self.eliminate_vars(&vars)
    }

    /// Eliminates the given variables; the result lives in the ring of the
    /// remaining variables (grevlex, original relative order).
    pub fn eliminate_vars(&self, vars: &[usize]) -> Ideal<F> {
        let n = self.ring.nvars();
        let keep: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        let mut names: Vec<String> = vars.iter().map(|&i| self.ring.name(i).to_string()).collect();
        names.extend(keep.iter().map(|&i| self.ring.name(i).to_string()));
        let elim_ring = Ring::new(&names, MonomialOrder::Elimination(vars.len())).unwrap();
        let target = Ring::grevlex(
            &keep.iter().map(|&i| self.ring.name(i)).collect::<Vec<_>>(),
        )
        .unwrap();
        let gb = buchberger(&elim_ring, &self.moved_gens(&elim_ring));
        let k = vars.len();
        let out: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.partial_degree(0..k) == 0))
            .map(|g| g.map_by_name(&target).unwrap())
            .collect();
        let ideal = Ideal::from_generators(&target, out.clone());
        // the selected elements are a grevlex basis of the elimination ideal
        let gb_target = GroebnerBasis::from_reduced(&target, out);
        let _ = ideal.basis.set(gb_target);
        ideal
    }

    /// Eliminates variables by name.
    pub fn eliminate_named(&self, names: &[&str]) -> Result<Ideal<F>> {
        let vars = names
            .iter()
            .map(|n| self.ring.var_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eliminate_vars(&vars))
    }

    /// `I : f^∞` via `I + (1 - w f)` with `w` eliminated.
    pub fn saturate(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        if self.is_homogeneous() && f.len() == 1 && f.total_degree() == Some(1) {
            let var = f.variables()[0];
            return Ok(self.saturate_variable(var));
        }
        let (ring, w) = self.with_fresh_variable("w", MonomialOrder::Elimination(1));
        let mut gens = self.moved_gens(&ring);
        let f = f.map_by_name(&ring)?;
        gens.push(&Polynomial::one(&ring) - &(&Polynomial::var(&ring, w) * &f));
        let tmp = Ideal::from_generators(&ring, gens);
        let e = tmp.eliminate_vars(&[w]);
        Ok(e.in_ring(&self.ring))
    }

    /// Saturation of a homogeneous ideal by a variable: with the variable
    /// last in grevlex, divide each basis element by its largest power.
    fn saturate_variable(&self, var: usize) -> Ideal<F> {
        let n = self.ring.nvars();
        let mut names: Vec<String> = (0..n)
            .filter(|&i| i != var)
            .map(|i| self.ring.name(i).to_string())
            .collect();
        names.push(self.ring.name(var).to_string());
        let r = Ring::grevlex(&names).unwrap();
        let gb = buchberger(&r, &self.moved_gens(&r));
        let last = n - 1;
        let out: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .map(|g| {
                let k = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut m = *m;
                        m.set_exp(last, m.exp(last) - k);
                        (m, c.clone())
                    })
                    .collect();
                Polynomial::from_terms(&r, terms).map_by_name(&self.ring).unwrap()
            })
            .collect();
        Ideal::from_generators(&self.ring, out)
    }

    /// Saturation by the ideal generated by `vars`, computed as the
    /// intersection of the saturations by each variable.
    pub fn saturate_irrelevant(&self, vars: &[usize]) -> Result<Ideal<F>> {
        if vars.is_empty() {
            return Err(Error::Invalid("empty variable block".into()));
        }
        let mut acc: Option<Ideal<F>> = None;
        for &v in vars {
            let s = self.saturate(&Polynomial::var(&self.ring, v))?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `I ∩ J` via `t I + (1 - t) J` with `t` eliminated.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if self.is_unit() {
            return Ok(other.in_ring(&self.ring));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let (ring, t) = self.with_fresh_variable("t", MonomialOrder::Elimination(1));
        let tv = Polynomial::var(&ring, t);
        let one_minus = &Polynomial::one(&ring) - &tv;
        let mut gens: Vec<Polynomial<F>> = self.moved_gens(&ring).iter().map(|g| &tv * g).collect();
        for g in &other.gens {
            gens.push(&one_minus * &g.map_by_name(&ring)?);
        }
        let e = Ideal::from_generators(&ring, gens).eliminate_vars(&[t]);
        Ok(e.in_ring(&self.ring))
    }

    /// Affine Krull dimension and degree of `R/I` read off the leading-term
    /// ideal; `None` for the unit ideal.
    pub fn dimension_degree(&self) -> Option<(usize, u64)> {
        let lts = self.groebner().leading_monomials();
        hilbert::dimension_degree_monomial(&lts, self.ring.nvars())
    }

    /// Projective dimension (affine dimension minus one) and degree of a
    /// homogeneous ideal; `None` when the projective zero set is empty.
    pub fn projective_dimension_degree(&self) -> Option<(i64, u64)> {
        match self.dimension_degree() {
            None | Some((0, _)) => None,
            Some((d, deg)) => Some((d as i64 - 1, deg)),
        }
    }

    /// `dim_F R/I` when finite.
    pub fn quotient_colength(&self) -> Option<u64> {
        let lts = self.groebner().leading_monomials();
        if self.groebner().is_unit() {
            return Some(0);
        }
        hilbert::standard_monomial_count(&lts, self.ring.nvars())
    }

    /// Radical of a zero-dimensional ideal (Seidenberg): add the squarefree
    /// part of the univariate eliminant in each variable.
    pub fn zero_dimensional_radical(&self) -> Result<Ideal<F>> {
        if self.is_unit() {
            return Ok(self.clone());
        }
        let mut gens = self.gens.clone();
        for v in 0..self.ring.nvars() {
            let e = univariate_eliminant(self, v)?;
            gens.push(squarefree_part(&e)?);
        }
        Ok(Ideal::from_generators(&self.ring, gens))
    }

    /// The generators expressed in a ring with (at least) the same names.
    fn moved_gens(&self, ring: &RingRef) -> Vec<Polynomial<F>> {
        self.gens
            .iter()
            .map(|g| g.map_by_name(ring).unwrap())
            .collect()
    }

    /// Moves into a ring with the same variable names.
    pub fn in_ring(&self, ring: &RingRef) -> Ideal<F> {
        Ideal::from_generators(ring, self.moved_gens(ring))
    }

    /// Maps into `target` matching variables by name.
    pub fn map_by_name(&self, target: &RingRef) -> Result<Ideal<F>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_by_name(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Ring with one fresh variable prepended; returns its index (zero).
    fn with_fresh_variable(&self, base: &str, order: MonomialOrder) -> (RingRef, usize) {
        let name = self.ring.fresh_name(base);
        let mut names = vec![name];
        names.extend(self.ring.names().iter().cloned());
        (Ring::new(&names, order).expect("ring has room for one more variable"), 0)
    }
}

impl<F: Field> GroebnerBasis<F> {
    /// Wraps elements already known to form a reduced basis for `ring`.
    pub(crate) fn from_reduced(ring: &RingRef, elements: Vec<Polynomial<F>>) -> Self {
        groebner::wrap(ring, elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::polyring::parse_polynomial;

    fn ideal(ring: &RingRef, xs: &[&str]) -> Ideal<Rational> {
        Ideal::from_generators(ring, xs.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect())
    }

    #[test]
    fn elimination_examples() {
        let r = Ring::grevlex(&["t", "x", "y"]).unwrap();
        let e = ideal(&r, &["x-t", "y-t^2"]).eliminate(1);
        assert!(e.equals(&ideal(e.ring(), &["y-x^2"])));
        let r = Ring::grevlex(&["l", "m", "x", "y", "z"]).unwrap();
        let e = ideal(&r, &["x-l*m", "y-l", "z-m"]).eliminate(2);
        assert!(e.equals(&ideal(e.ring(), &["x-y*z"])));
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x*y", "x*z"]);
        let x = parse_polynomial(&r, "x").unwrap();
        assert!(i.saturate(&x).unwrap().equals(&ideal(&r, &["y", "z"])));
        assert!(i.saturate(&Polynomial::one(&r)).unwrap().equals(&i));
        assert!(ideal(&r, &["x^2"]).saturate(&x).unwrap().is_unit());
        // non-homogeneous route
        let i = ideal(&r, &["x*y-x", "x*z"]);
        assert!(i.saturate(&x).unwrap().equals(&ideal(&r, &["y-1", "z"])));
    }

    #[test]
    fn irrelevant_saturation() {
        let r = Ring::grevlex(&["x0", "x1", "l"]).unwrap();
        let i = ideal(&r, &["x0*l", "x1*l"]);
        assert!(i.saturate_irrelevant(&[0, 1]).unwrap().equals(&ideal(&r, &["l"])));
        let j = ideal(&r, &["x0"]);
        assert!(j.saturate_irrelevant(&[0, 1]).unwrap().equals(&j));
    }

    #[test]
    fn membership_and_radical() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2"]);
        let x = parse_polynomial(&r, "x").unwrap();
        assert!(ideal(&r, &["x"]).member(&parse_polynomial(&r, "x^2").unwrap()));
        assert!(i.radical_member(&x));
        assert!(!i.member(&x));
    }

    #[test]
    fn intersection() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.equals(&ideal(&r, &["x*y"])));
    }

    #[test]
    fn colength_examples() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert_eq!(ideal(&r, &["x", "y"]).quotient_colength(), Some(1));
        assert_eq!(ideal(&r, &["x^2", "y^2"]).quotient_colength(), Some(4));
        assert_eq!(ideal(&r, &["2x", "3y^2"]).quotient_colength(), Some(2));
        assert_eq!(ideal(&r, &["x*y"]).quotient_colength(), None);
    }

    #[test]
    fn twisted_cubic_degree() {
        let r = Ring::grevlex(&["a", "b", "c", "d"]).unwrap();
        let gens: Vec<Polynomial<Fp<32003>>> = ["a*c-b^2", "a*d-b*c", "b*d-c^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let i = Ideal::from_generators(&r, gens);
        assert_eq!(i.projective_dimension_degree(), Some((1, 3)));
    }
}
