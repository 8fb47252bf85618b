//! The incidence correspondence `{(x, s) : s singular at x}` and its image in
//! the dual space.

use crate::error::Result;
use crate::field::Field;
use crate::ideals::Ideal;
use crate::polyring::{gcd_all, lcm, squarefree_part, Polynomial, Ring, RingRef, UniPoly};

use super::system::{LinearSystem, Source};

/// Generators of the incidence ideal in the incidence ring (source
/// coordinates first), before removing the irrelevant locus.
pub(crate) fn incidence_generators<F: Field>(sys: &LinearSystem<F>) -> (RingRef, Vec<Polynomial<F>>) {
    let ring = sys.incidence_ring();
    let s = sys.general_section(&ring);
    let nx = sys.ring().nvars();
    let gens = match sys.source() {
        Source::Projective => (0..nx).map(|i| s.derivative(i)).collect(),
        Source::Hypersurface(f) => {
            let f = f.map_by_name(&ring).unwrap();
            let df: Vec<_> = (0..nx).map(|i| f.derivative(i)).collect();
            let ds: Vec<_> = (0..nx).map(|i| s.derivative(i)).collect();
            let mut gens = vec![f, s];
            for i in 0..nx {
                for j in i + 1..nx {
                    gens.push(&(&df[i] * &ds[j]) - &(&df[j] * &ds[i]));
                }
            }
            gens
        }
    };
    let gens = gens.into_iter().filter(|g: &Polynomial<F>| !g.is_zero()).collect();
    (ring, gens)
}

/// The incidence ideal in `source x dual`, saturated by the irrelevant ideal
/// of the source block.
pub fn incidence_ideal<F: Field>(sys: &LinearSystem<F>) -> Result<Ideal<F>> {
    sys.ensure_base_point_free()?;
    let (ring, gens) = incidence_generators(sys);
    let nx = sys.ring().nvars();
    let vars: Vec<usize> = (0..nx).collect();
    Ideal::from_generators(&ring, gens).saturate_irrelevant(&vars)
}

/// A closed subset of the dual space, up to radical.
#[derive(Clone, Debug)]
pub enum Locus<F: Field> {
    Empty,
    /// Hypersurface with a squarefree monic equation.
    Hypersurface(Polynomial<F>),
    General(Ideal<F>),
}

impl<F: Field> Locus<F> {
    /// Reads off the geometry of a homogeneous ideal: empty, a reduced
    /// hypersurface (when `I = g I'` with `V(I') ⊆ V(g)`), or general.
    pub fn classify(ideal: &Ideal<F>) -> Result<Self> {
        match ideal.dimension_degree() {
            None | Some((0, _)) => return Ok(Locus::Empty),
            _ => {}
        }
        let gens = ideal.groebner().elements().to_vec();
        let g = gcd_all(&gens).expect("nonempty basis");
        if !g.is_constant() {
            let rest: Vec<Polynomial<F>> = gens
                .iter()
                .map(|h| h.div_exact(&g).expect("gcd divides"))
                .collect();
            let rest = Ideal::from_generators(ideal.ring(), rest);
            if rest.is_unit() || rest.radical_member(&g) {
                return Ok(Locus::Hypersurface(squarefree_part(&g)?.monic()));
            }
        }
        Ok(Locus::General(ideal.clone()))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Locus::Empty)
    }

    pub fn equation(&self) -> Option<&Polynomial<F>> {
        match self {
            Locus::Hypersurface(p) => Some(p),
            _ => None,
        }
    }

    /// An ideal with this zero set.
    pub fn ideal(&self, ring: &RingRef) -> Ideal<F> {
        match self {
            Locus::Empty => Ideal::unit(ring),
            Locus::Hypersurface(p) => Ideal::from_generators(ring, vec![p.clone()]),
            Locus::General(i) => i.clone(),
        }
    }

    pub fn union(self, other: Locus<F>, ring: &RingRef) -> Result<Locus<F>> {
        Ok(match (self, other) {
            (Locus::Empty, x) | (x, Locus::Empty) => x,
            (Locus::Hypersurface(a), Locus::Hypersurface(b)) => Locus::Hypersurface(lcm(&a, &b).monic()),
            (Locus::Hypersurface(a), Locus::General(i)) | (Locus::General(i), Locus::Hypersurface(a))
                if i.radical_member(&a) =>
            {
                Locus::Hypersurface(a)
            }
            (a, b) => Locus::General(a.ideal(ring).intersect(&b.ideal(ring))?),
        })
    }

    /// Projective dimension (`-1` when empty) and degree of the top
    /// dimensional part.
    pub fn dimension_degree(&self, ring: &RingRef) -> (i64, u64) {
        match self {
            Locus::Empty => (-1, 0),
            Locus::Hypersurface(p) => (ring.nvars() as i64 - 2, p.total_degree().unwrap() as u64),
            Locus::General(i) => i.projective_dimension_degree().unwrap_or((-1, 0)),
        }
    }
}

/// Image in the dual space of `V(gens) \ V(avoid)`, where `gens` live in the
/// incidence ring and are homogeneous in the first `nx` variables. The
/// source is covered by the locally closed charts
/// `x_0 = .. = x_{i-1} = 0, x_i = 1`; each chart is projected by
/// elimination and the closures are united.
pub(crate) fn project<F: Field>(
    ring: &RingRef,
    nx: usize,
    gens: &[Polynomial<F>],
    avoid: Option<&Polynomial<F>>,
    dual: &RingRef,
) -> Result<Locus<F>> {
    let mut acc = Locus::Empty;
    for i in 0..nx {
        let mut point: Vec<(usize, F)> = (0..i).map(|j| (j, F::zero())).collect();
        point.push((i, F::one()));
        let mut names: Vec<String> = Vec::new();
        let h = avoid.map(|h| h.specialize(&point));
        let rabinowitsch = match &h {
            Some(h) if h.is_zero() => continue,
            Some(h) if !h.is_constant() => {
                names.push(ring.fresh_name("w"));
                true
            }
            _ => false,
        };
        names.extend((i + 1..nx).map(|j| ring.name(j).to_string()));
        let k = names.len();
        names.extend(dual.names().iter().cloned());
        let chart = Ring::grevlex(&names)?;
        let mut cg: Vec<Polynomial<F>> = gens
            .iter()
            .map(|g| g.specialize(&point).map_by_name(&chart))
            .collect::<Result<Vec<_>>>()?;
        cg.retain(|g| !g.is_zero());
        if rabinowitsch {
            let h = h.unwrap().map_by_name(&chart)?;
            let w = Polynomial::var(&chart, 0);
            cg.push(&Polynomial::one(&chart) - &(&w * &h));
        }
        let ideal = Ideal::from_generators(&chart, cg);
        if ideal.is_unit() {
            continue;
        }
        let image = if k == 0 {
            ideal.in_ring(dual)
        } else {
            let vars: Vec<usize> = (0..k).collect();
            ideal.eliminate_vars(&vars).in_ring(dual)
        };
        let locus = Locus::classify(&image)?;
        acc = acc.union(locus, dual)?;
    }
    Ok(acc)
}

/// The discriminant locus `D(X, V)` as a subset of the dual space.
pub fn discriminant_locus<F: Field>(sys: &LinearSystem<F>) -> Result<Locus<F>> {
    sys.ensure_base_point_free()?;
    let (ring, gens) = incidence_generators(sys);
    project(&ring, sys.ring().nvars(), &gens, None, &sys.dual_ring())
}

/// `f(a + t b)` as a univariate polynomial in `t`.
pub(crate) fn restrict_to_line<F: Field>(f: &Polynomial<F>, a: &[F], b: &[F]) -> UniPoly<F> {
    let t = UniPoly::x();
    let images: Vec<UniPoly<F>> = a
        .iter()
        .zip(b)
        .map(|(a, b)| UniPoly::new(vec![a.clone()]).add(&t.scale(b)))
        .collect();
    let mut u = UniPoly::zero();
    for (m, c) in f.terms() {
        let mut term = UniPoly::new(vec![c.clone()]);
        for i in m.support() {
            for _ in 0..m.exp(i) {
                term = term.mul(&images[i]);
            }
        }
        u = u.add(&term);
    }
    u
}

/// Certifies irreducibility over the coefficient field by restricting to
/// random lines: a factor of degree `k` survives on every line, so `k` is a
/// sum of factor degrees of every restriction. Over the rationals the
/// restrictions are factored modulo several primes. `false` means "not
/// certified".
pub fn certify_irreducible<F: Field>(f: &Polynomial<F>, seed: u64) -> bool {
    use crate::field::Fp;
    use rand::SeedableRng;
    use std::collections::BTreeSet;

    let Some(d) = f.total_degree() else { return false };
    let d = d as usize;
    if d <= 1 {
        return d == 1;
    }
    let sums = |pattern: &[usize]| -> BTreeSet<usize> {
        let mut s = BTreeSet::from([0usize]);
        for &k in pattern {
            let next: Vec<usize> = s.iter().map(|x| x + k).collect();
            s.extend(next);
        }
        s
    };
    fn pattern_mod<const P: u32>(u: &UniPoly<crate::field::Rational>, d: usize) -> Option<Vec<usize>> {
        let c: Option<Vec<Fp<P>>> = u.coeffs().iter().map(Fp::<P>::from_rational).collect();
        let v = UniPoly::new(c?);
        if v.degree() != Some(d) || v.squarefree_part().degree() != Some(d) {
            return None;
        }
        Some(v.irreducible_factor_degrees())
    }
    let ring = f.ring().clone();
    let n = ring.nvars();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut possible: BTreeSet<usize> = (0..=d).collect();
    for _ in 0..12 {
        let a: Vec<F> = (0..n).map(|_| F::random(&mut rng)).collect();
        let b: Vec<F> = (0..n).map(|_| F::random(&mut rng)).collect();
        let u = restrict_to_line(f, &a, &b);
        if u.degree() != Some(d) {
            continue;
        }
        let patterns: Vec<Vec<usize>> = if F::is_finite() {
            if u.squarefree_part().degree() != Some(d) {
                continue;
            }
            vec![u.irreducible_factor_degrees()]
        } else {
            let q = UniPoly::new(u.coeffs().iter().map(|c| c.to_rational()).collect());
            [
                pattern_mod::<10007>(&q, d),
                pattern_mod::<32003>(&q, d),
                pattern_mod::<65521>(&q, d),
                pattern_mod::<1000003>(&q, d),
            ]
            .into_iter()
            .flatten()
            .collect()
        };
        for p in patterns {
            let s = sums(&p);
            possible.retain(|k| s.contains(k));
        }
        if possible.len() == 2 {
            return true;
        }
    }
    false
}
