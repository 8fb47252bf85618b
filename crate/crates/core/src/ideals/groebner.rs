//! Buchberger's algorithm with sugar selection and Gebauer-Moeller pair
//! elimination, producing reduced bases.

use super::super::polyring::{Monomial, Polynomial, RingRef};
use crate::field::Field;

/// A reduced Groebner basis: monic, interreduced, sorted by increasing
/// leading monomial under the ring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<F>> {
        self.elements
    }

    /// True for the basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| *g.leading_monomial().expect("nonzero basis element"))
            .collect()
    }

    /// Remainder of `f` on division by the basis; no term of the result is
    /// divisible by a leading monomial of the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let f = f
            .with_ring(&self.ring)
            .unwrap_or_else(|e| panic!("normal form: {e}"));
        let refs: Vec<&Polynomial<F>> = self.elements.iter().collect();
        reduce_full(f, &refs)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Computes the reduced Groebner basis of `gens` with respect to the order of
/// `ring`. Generators may live in any ring with the same variables.
pub fn buchberger<F: Field>(ring: &RingRef, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let mut input: Vec<Polynomial<F>> = gens
        .iter()
        .map(|g| g.with_ring(ring).unwrap_or_else(|e| panic!("buchberger: {e}")))
        .filter(|g| !g.is_zero())
        .collect();
    if input.iter().any(|g| g.is_constant()) {
        return GroebnerBasis {
            ring: ring.clone(),
            elements: vec![Polynomial::one(ring)],
        };
    }
    input.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let h = st.reduce(g.monic());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(ring);
        }
        let s = h.total_degree().unwrap();
        st.insert(h.monic(), s);
    }
    while let Some(pair) = st.next_pair() {
        let s = spoly(&st.polys[pair.i], &st.polys[pair.j], &pair.lcm);
        let h = st.reduce(s);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(ring);
        }
        st.insert(h.monic(), pair.sugar);
    }
    let active: Vec<Polynomial<F>> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    GroebnerBasis {
        ring: ring.clone(),
        elements: interreduce(ring, active),
    }
}

pub(super) fn wrap<F: Field>(ring: &RingRef, elements: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    GroebnerBasis {
        ring: ring.clone(),
        elements,
    }
}

fn unit_basis<F: Field>(ring: &RingRef) -> GroebnerBasis<F> {
    GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Polynomial::one(ring)],
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<F: Field> {
    ring: RingRef,
    polys: Vec<Polynomial<F>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn lm(&self, i: usize) -> Monomial {
        *self.polys[i].leading_monomial().unwrap()
    }

    fn reduce(&self, f: Polynomial<F>) -> Polynomial<F> {
        let refs: Vec<&Polynomial<F>> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, &a)| a.then_some(p))
            .collect();
        reduce_full(f, &refs)
    }

    /// Normal selection: smallest sugar, then smallest lcm under the order.
    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = &self.ring;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| ring.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    /// Gebauer-Moeller update with the new element `h`.
    fn insert(&mut self, h: Polynomial<F>, sugar: u32) {
        let k = self.polys.len();
        let lh = *h.leading_monomial().unwrap();
        let hdeg = h.total_degree().unwrap();
        self.polys.push(h);
        self.sugar.push(sugar.max(hdeg));
        self.active.push(true);

        // candidate pairs (g, h)
        let mut cand: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lm(g);
                (g, lg.lcm(&lh), lg.is_coprime(&lh))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = cand.pop() {
            let dominated = cand
                .iter()
                .chain(kept.iter())
                .any(|o| o.1.divides(&c.1));
            if c.2 || !dominated {
                kept.push(c);
            }
        }
        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].leading_monomial().unwrap().lcm(&lh);
            let lj = polys[p.j].leading_monomial().unwrap().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let sg = self.sugar[g] + l.degree() - self.lm(g).degree();
            let sh = self.sugar[k] + l.degree() - lh.degree();
            self.pairs.push(Pair {
                i: g,
                j: k,
                lcm: l,
                sugar: sg.max(sh),
            });
        }
        for g in 0..k {
            if self.active[g] && lh.divides(&self.lm(g)) {
                self.active[g] = false;
            }
        }
    }
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    let (lf, cf) = (f.leading_monomial().unwrap(), f.leading_coefficient().unwrap());
    let (lg, cg) = (g.leading_monomial().unwrap(), g.leading_coefficient().unwrap());
    let mut s = f.mul_term(&lf.quotient_of(lcm), cg);
    s.sub_mul_term_assign(cf, &lg.quotient_of(lcm), g);
    s
}

/// Full reduction of `f` by `reducers`.
pub(crate) fn reduce_full<F: Field>(f: Polynomial<F>, reducers: &[&Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let mut p = f;
    let mut done: Vec<(Monomial, F)> = Vec::new();
    let lms: Vec<(Monomial, F)> = reducers
        .iter()
        .map(|r| (*r.leading_monomial().unwrap(), r.leading_coefficient().unwrap().inv()))
        .collect();
    loop {
        let Some((m, c)) = p.terms().first().cloned() else {
            break;
        };
        match lms.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let q = c * lms[k].1.clone();
                p.sub_mul_term_assign(&q, &lms[k].0.quotient_of(&m), reducers[k]);
            }
            None => {
                // move the irreducible leading term aside
                let mut terms = p.into_terms();
                let t = terms.remove(0);
                done.push(t);
                p = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, done)
}

/// Minimalises and fully interreduces a Groebner basis.
fn interreduce<F: Field>(ring: &RingRef, mut g: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    g.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in g {
        let lp = *p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(&lp))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q)
            .collect();
        let head = Polynomial::from_sorted_terms(ring, vec![minimal[i].terms()[0].clone()]);
        let tail = Polynomial::from_sorted_terms(ring, minimal[i].terms()[1..].to_vec());
        let tail = reduce_full(tail, &others);
        out.push((&head + &tail).monic());
    }
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}
