//! Singular points of members, Milnor numbers, and the pencil count of
//! singular members weighted by Milnor numbers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{projective_points, Ideal, PointSet};
use crate::linalg;
use crate::numerics::cn_jet_pn;
use crate::polyring::{Monomial, Polynomial, Ring, RingRef, UniPoly};

use super::discriminant::discriminant_basic;
use super::incidence::restrict_to_line;
use super::system::LinearSystem;

/// Exponent at which the Milnor computation gives up.
pub const MILNOR_CUTOFF: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorDatum<F: Field> {
    pub point: Vec<F>,
    /// `None` for a non-isolated singularity.
    pub milnor: Option<u64>,
    /// Smallest `N` with `colength(J + m^N) = colength(J + m^{N+1})`.
    pub exponent: u32,
}

/// Milnor number of an affine polynomial at the origin: the stable value of
/// `dim R / (J + m^N)` with `J` the ideal of partial derivatives.
pub fn milnor<F: Field>(f: &Polynomial<F>) -> MilnorDatum<F> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let jac: Vec<Polynomial<F>> = (0..n).map(|i| f.derivative(i)).filter(|g| !g.is_zero()).collect();
    let colength = |k: u32| -> u64 {
        let mut gens = jac.clone();
        gens.extend(monomials_of_degree(&ring, k));
        Ideal::from_generators(&ring, gens)
            .quotient_colength()
            .expect("m^N is in the ideal")
    };
    let mut prev = colength(1);
    for k in 1..MILNOR_CUTOFF {
        let next = colength(k + 1);
        if next == prev {
            return MilnorDatum {
                point: vec![F::zero(); n],
                milnor: Some(prev),
                exponent: k,
            };
        }
        prev = next;
    }
    MilnorDatum {
        point: vec![F::zero(); n],
        milnor: None,
        exponent: MILNOR_CUTOFF,
    }
}

fn monomials_of_degree<F: Field>(ring: &RingRef, k: u32) -> Vec<Polynomial<F>> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut e = vec![0u16; n];
    fn rec<F: Field>(ring: &RingRef, e: &mut Vec<u16>, i: usize, left: u32, out: &mut Vec<Polynomial<F>>) {
        if i + 1 == e.len() {
            e[i] = left as u16;
            out.push(Polynomial::monomial(ring, Monomial::from_exponents(e), F::one()));
            return;
        }
        for a in 0..=left {
            e[i] = a as u16;
            rec(ring, e, i + 1, left - a, out);
        }
    }
    if n > 0 {
        rec(ring, &mut e, 0, k, &mut out);
    }
    out
}

/// Milnor number of the projective hypersurface `F = 0` at `p`: dehomogenize
/// at the first nonzero coordinate and translate `p` to the origin.
pub fn milnor_at<F: Field>(member: &Polynomial<F>, p: &[F]) -> Result<MilnorDatum<F>> {
    let ring = member.ring().clone();
    let n = ring.nvars();
    let i = p
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Invalid("the zero vector is not a projective point".into()))?;
    let names: Vec<&str> = (0..n).filter(|&j| j != i).map(|j| ring.name(j)).collect();
    let aff = Ring::grevlex(&names)?;
    let inv = p[i].inv();
    let mut images = Vec::with_capacity(n);
    let mut k = 0;
    for j in 0..n {
        if j == i {
            images.push(Polynomial::one(&aff));
        } else {
            let shift = Polynomial::constant(&aff, p[j].clone() * inv.clone());
            images.push(&Polynomial::var(&aff, k) + &shift);
            k += 1;
        }
    }
    let f = member.substitute_all(&aff, &images)?;
    let mut d = milnor(&f);
    d.point = p.iter().map(|c| c.clone() * inv.clone()).collect();
    Ok(d)
}

/// Singular locus of a member: finite sets are solved, positive-dimensional
/// ones are returned as ideals.
#[derive(Clone, Debug)]
pub enum SingularLocus<F: Field> {
    Points(PointSet<F>),
    Positive { dimension: i64, ideal: Ideal<F> },
}

impl<F: Field> SingularLocus<F> {
    pub fn points(&self) -> Option<&PointSet<F>> {
        match self {
            SingularLocus::Points(p) => Some(p),
            _ => None,
        }
    }
}

/// Singular points of `member` on `P^n`, or on the hypersurface `source`
/// when given.
pub fn singular_points<F: Field>(member: &Polynomial<F>, source: Option<&Polynomial<F>>) -> Result<SingularLocus<F>> {
    let ring = member.ring().clone();
    let n = ring.nvars();
    let grad: Vec<Polynomial<F>> = (0..n).map(|i| member.derivative(i)).collect();
    let gens = match source {
        None => grad,
        Some(f) => {
            let f = f.with_ring(&ring)?;
            let df: Vec<Polynomial<F>> = (0..n).map(|i| f.derivative(i)).collect();
            let mut g = vec![f, member.clone()];
            g.extend(linalg::minors(&ring, &[df, grad], 2, &[]));
            g
        }
    };
    let ideal = Ideal::from_generators(&ring, gens);
    match ideal.projective_dimension_degree() {
        None => Ok(SingularLocus::Points(PointSet {
            points: Vec::new(),
            unresolved: 0,
        })),
        Some((0, _)) => Ok(SingularLocus::Points(projective_points(&ideal)?)),
        Some((d, _)) => Ok(SingularLocus::Positive {
            dimension: d,
            ideal: ideal.reduced(),
        }),
    }
}

/// Sum of Milnor numbers of an affine hypersurface `f = 0` over the points
/// where `extra` also vanishes: the stable colength of
/// `(extra, ∂f, f^K)`. Critical points off the hypersurface drop out since
/// `f` is a unit there. `None` when some singularity is not isolated.
fn milnor_total<F: Field>(f: &Polynomial<F>, vars: &[usize], extra: &[Polynomial<F>]) -> Option<u64> {
    let ring = f.ring().clone();
    let mut base: Vec<Polynomial<F>> = extra.to_vec();
    base.extend(vars.iter().map(|&v| f.derivative(v)));
    let colength = |k: u32| {
        let mut gens = base.clone();
        gens.push(f.pow(k));
        Ideal::from_generators(&ring, gens).quotient_colength()
    };
    let mut prev = colength(1)?;
    for k in 1..MILNOR_CUTOFF {
        let next = colength(k + 1)?;
        if next == prev {
            return Some(prev);
        }
        prev = next;
    }
    None
}

/// Sum of the Milnor numbers of all singular points of a projective
/// hypersurface with isolated singularities. The coordinates are changed at
/// random (seeded) until no singular point lies on `x_0 = 0`.
pub fn total_milnor<F: Field>(member: &Polynomial<F>, seed: u64) -> Result<Option<u64>> {
    let ring = member.ring().clone();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let m = random_invertible::<F>(n, &mut rng);
        let g = transform(member, &m)?;
        let grad: Vec<Polynomial<F>> = (0..n).map(|i| g.derivative(i)).collect();
        let mut at_infinity = grad.clone();
        at_infinity.push(Polynomial::var(&ring, 0));
        let inf = Ideal::from_generators(&ring, at_infinity);
        if inf.projective_dimension_degree().is_some() {
            continue;
        }
        let names: Vec<&str> = (1..n).map(|j| ring.name(j)).collect();
        let aff = Ring::grevlex(&names)?;
        let f = g.specialize(&[(0, F::one())]).map_by_name(&aff)?;
        let vars: Vec<usize> = (0..n - 1).collect();
        return Ok(milnor_total(&f, &vars, &[]));
    }
    Err(Error::Unsupported("no coordinate change moved the singular points off x_0 = 0".into()))
}

fn random_invertible<F: Field>(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<F>> {
    loop {
        let m: Vec<Vec<F>> = (0..n).map(|_| (0..n).map(|_| F::random(rng)).collect()).collect();
        if !linalg::determinant(&m).is_zero() {
            return m;
        }
    }
}

/// `f(M x)`.
fn transform<F: Field>(f: &Polynomial<F>, m: &[Vec<F>]) -> Result<Polynomial<F>> {
    let ring = f.ring().clone();
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let images: Vec<Polynomial<F>> = m.iter().map(|row| crate::polyring::linear_form(&ring, &vars, row)).collect();
    f.substitute_all(&ring, &images)
}

fn apply<F: Field>(m: &[Vec<F>], p: &[F]) -> Vec<F> {
    let v: Vec<F> = m
        .iter()
        .map(|row| row.iter().zip(p).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
        .collect();
    let i = v.iter().position(|c| !c.is_zero()).unwrap();
    let inv = v[i].inv();
    v.into_iter().map(|c| c * inv.clone()).collect()
}

/// A singular member `A + t B` of the pencil with `t` in the field.
#[derive(Clone, Debug)]
pub struct SingularMember<F: Field> {
    pub parameter: F,
    pub member: Polynomial<F>,
    pub points: Vec<MilnorDatum<F>>,
    /// Singular points not defined over the field.
    pub unresolved: u64,
    /// Milnor sum over all singular points of the member.
    pub milnor_sum: u64,
}

#[derive(Clone, Debug)]
pub struct PencilReport<F: Field> {
    pub attempts: usize,
    pub a: Vec<F>,
    pub b: Vec<F>,
    /// `Δ(A + tB)`, squarefree of degree `codegree`.
    pub restriction: UniPoly<F>,
    pub codegree: u64,
    /// Members with parameter in the field.
    pub members: Vec<SingularMember<F>>,
    /// Degree of the part of the restriction without roots in the field and
    /// the Milnor sum of the corresponding members.
    pub conjugate: (usize, u64),
    pub milnor_sum: u64,
    /// Milnor sum of the whole scheme, computed in one piece.
    pub scheme_total: u64,
    pub cn: u64,
    pub holds: bool,
}

/// Draws a pencil `A + tB` in `|V|` and adds up the Milnor numbers of its
/// singular members; compares with `c_n(J_1(O(m))) = (n+1)(m-1)^n`.
pub fn pencil_verify<F: Field>(sys: &LinearSystem<F>, seed: u64) -> Result<PencilReport<F>> {
    if !sys.is_projective_space() {
        return Err(Error::Unsupported("pencil verification needs a system on projective space".into()));
    }
    let report = discriminant_basic(sys)?;
    let Some(delta) = report.equation.clone() else {
        return Err(Error::Unsupported("the discriminant is not a hypersurface".into()));
    };
    let codegree = report.codegree;
    let ring = sys.ring().clone();
    let n = ring.nvars();
    let big_n = sys.big_n() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reason = String::new();
    for attempt in 1..=10 {
        let a: Vec<F> = (0..big_n).map(|_| F::random(&mut rng)).collect();
        let b: Vec<F> = (0..big_n).map(|_| F::random(&mut rng)).collect();
        let q = restrict_to_line(&delta, &a, &b);
        if q.degree() != Some(codegree as usize) {
            reason = "the pencil meets the discriminant at infinity".into();
            continue;
        }
        if q.squarefree_part().degree() != q.degree() {
            reason = "the pencil is tangent to the discriminant".into();
            continue;
        }
        let m = random_invertible::<F>(n, &mut rng);
        let moved: Vec<Polynomial<F>> = sys
            .sections()
            .iter()
            .map(|s| transform(s, &m))
            .collect::<Result<Vec<_>>>()?;
        // ring [t, x_0 .. x_n]
        let mut names = vec![ring.fresh_name("t")];
        names.extend(ring.names().iter().cloned());
        let tx = Ring::grevlex(&names)?;
        let t = Polynomial::var(&tx, 0);
        let mut st = Polynomial::zero(&tx);
        for (j, s) in moved.iter().enumerate() {
            let coeff = &Polynomial::constant(&tx, a[j].clone()) + &t.scale(&b[j]);
            st = &st + &(&coeff * &s.map_by_name(&tx)?);
        }
        let qt = q.to_polynomial(&tx, 0);
        let grad: Vec<Polynomial<F>> = (1..=n).map(|i| st.derivative(i)).collect();
        let mut infinite = false;
        for i in 1..n {
            let mut g = grad.clone();
            g.push(qt.clone());
            g.extend((0..i).map(|j| Polynomial::var(&tx, 1 + j)));
            g.push(&Polynomial::var(&tx, 1 + i) - &Polynomial::one(&tx));
            if !Ideal::from_generators(&tx, g).is_unit() {
                infinite = true;
                break;
            }
        }
        if infinite {
            reason = "a singular point lies on the hyperplane at infinity".into();
            continue;
        }
        // affine chart x_0 = 1 in [t, x_1 .. x_n]
        let mut anames = vec![names[0].clone()];
        anames.extend(ring.names()[1..].iter().cloned());
        let aff = Ring::grevlex(&anames)?;
        let f = st.specialize(&[(1, F::one())]).map_by_name(&aff)?;
        let qa = q.to_polynomial(&aff, 0);
        let vars: Vec<usize> = (1..n).collect();
        let Some(scheme_total) = milnor_total(&f, &vars, &[qa]) else {
            reason = "a singular member has a non-isolated singularity".into();
            continue;
        };
        let mut members = Vec::new();
        let mut rest = q.clone();
        let mut sum = 0;
        for t0 in q.roots() {
            rest = rest.div_rem(&UniPoly::linear_root(t0.clone())).0;
            let coeffs: Vec<F> = a.iter().zip(&b).map(|(x, y)| x.clone() + t0.clone() * y.clone()).collect();
            let member = sys.member(&coeffs);
            let moved_member = transform(&member, &m)?;
            let locus = singular_points(&moved_member, None)?;
            let Some(pts) = locus.points() else {
                return Err(Error::Invalid("isolated singularities expected".into()));
            };
            let mut data = Vec::new();
            for p in &pts.points {
                let mut d = milnor_at(&moved_member, p)?;
                d.point = apply(&m, p);
                data.push(d);
            }
            let fa = f.specialize(&[(0, t0.clone())]);
            let lin = &Polynomial::var(&aff, 0) - &Polynomial::constant(&aff, t0.clone());
            let member_sum = milnor_total(&fa, &vars, &[lin]).unwrap_or(0);
            sum += member_sum;
            members.push(SingularMember {
                parameter: t0,
                member: member.normalized(),
                points: data,
                unresolved: pts.unresolved,
                milnor_sum: member_sum,
            });
        }
        let conj_degree = rest.degree().unwrap_or(0);
        let conj_sum = if conj_degree > 0 {
            milnor_total(&f, &vars, &[rest.to_polynomial(&aff, 0)]).unwrap_or(0)
        } else {
            0
        };
        sum += conj_sum;
        let cn = cn_jet_pn(sys.dim() as u32, sys.degree());
        return Ok(PencilReport {
            attempts: attempt,
            a,
            b,
            restriction: q.monic(),
            codegree,
            members,
            conjugate: (conj_degree, conj_sum),
            milnor_sum: sum,
            scheme_total,
            cn,
            holds: sum == cn && scheme_total == sum,
        });
    }
    Err(Error::DegeneratePencil { attempts: 10, reason })
}
