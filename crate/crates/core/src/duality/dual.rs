//! Conormal and dual varieties of projective varieties given by ideals,
//! biduality for plane curves, flexes.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{projective_points, Ideal, PointSet};
use crate::linalg;
use crate::polyring::{is_squarefree, linear_form, Polynomial, Ring, RingRef};

use super::incidence::{certify_irreducible, Locus};
use super::singular::total_milnor;

/// `l0, l1, ..`, or `dual0, ..` when a source variable already starts with
/// `l`.
pub fn default_dual_names(ring: &RingRef) -> Vec<String> {
    let prefix = if ring.names().iter().any(|n| n.starts_with('l')) {
        "dual"
    } else {
        "l"
    };
    Ring::indexed(prefix, ring.nvars())
}

fn dual_names_for(ring: &RingRef, names: Option<&[String]>) -> Result<Vec<String>> {
    let names = match names {
        Some(n) => n.to_vec(),
        None => default_dual_names(ring),
    };
    if names.len() != ring.nvars() {
        return Err(Error::Invalid(format!(
            "{} dual coordinates for {} source coordinates",
            names.len(),
            ring.nvars()
        )));
    }
    if let Some(n) = names.iter().find(|n| ring.var_index(n).is_ok()) {
        return Err(Error::Invalid(format!("dual coordinate `{n}` clashes with a source coordinate")));
    }
    Ok(names)
}

/// Codimension of `V(I)` and a `c x c` minor of the Jacobian of the
/// generators not vanishing identically on it, together with the rows used.
fn regular_minor<F: Field>(x: &Ideal<F>) -> Result<(usize, Vec<usize>, Polynomial<F>)> {
    let ring = x.ring().clone();
    let n = ring.nvars();
    let Some((dim, _)) = x.dimension_degree().filter(|&(d, _)| d > 0) else {
        return Err(Error::UnitIdeal);
    };
    let c = n - dim;
    let gens = x.generators();
    if c == 0 {
        return Ok((0, Vec::new(), Polynomial::one(&ring)));
    }
    let vars: Vec<usize> = (0..n).collect();
    let jac = linalg::jacobian(gens, &vars);
    use itertools::Itertools;
    for rows in (0..gens.len()).combinations(c) {
        for cols in (0..n).combinations(c) {
            let d = linalg::minor(&ring, &jac, &rows, &cols);
            if !d.is_zero() && !x.member(&d) {
                return Ok((c, rows, d));
            }
        }
    }
    Err(Error::Unsupported("the variety is singular everywhere (non-reduced ideal?)".into()))
}

/// Conormal ideal in `source x dual`: the equations of `X`, the incidence
/// form `Σ l_i x_i` and the maximal minors of the Jacobian of `X` bordered
/// by the row of dual coordinates, saturated by a regular Jacobian minor and
/// by the irrelevant ideal of the dual block.
pub fn conormal_ideal<F: Field>(x: &Ideal<F>, dual_names: Option<&[String]>) -> Result<Ideal<F>> {
    let src = x.ring().clone();
    let n = src.nvars();
    let names = dual_names_for(&src, dual_names)?;
    let (c, _, delta) = regular_minor(x)?;
    let mut all: Vec<String> = src.names().to_vec();
    all.extend(names);
    let ring = Ring::grevlex(&all)?;
    let gens: Vec<Polynomial<F>> = x
        .generators()
        .iter()
        .map(|g| g.map_by_name(&ring))
        .collect::<Result<_>>()?;
    let xs: Vec<usize> = (0..n).collect();
    let ls: Vec<usize> = (n..2 * n).collect();
    let mut m = linalg::jacobian(&gens, &xs);
    m.push(ls.iter().map(|&i| Polynomial::var(&ring, i)).collect());
    let mut out = gens.clone();
    out.push(
        xs.iter()
            .zip(&ls)
            .map(|(&a, &b)| &Polynomial::var(&ring, a) * &Polynomial::var(&ring, b))
            .fold(Polynomial::zero(&ring), |acc, t| &acc + &t),
    );
    let row = m.len() - 1;
    out.extend(linalg::minors(&ring, &m, c + 1, &[row]));
    out.retain(|g| !g.is_zero());
    let mut ideal = Ideal::from_generators(&ring, out);
    if !delta.is_constant() {
        ideal = ideal.saturate(&delta.map_by_name(&ring)?)?;
    }
    ideal.saturate_irrelevant(&ls)
}

/// The dual variety of an irreducible projective variety `V(I)`, computed on
/// one affine chart of the regular locus and eliminated into the dual ring.
#[derive(Clone, Debug)]
pub struct DualVariety<F: Field> {
    pub ring: RingRef,
    pub locus: Locus<F>,
    /// Projective dimension, `-1` when empty.
    pub dimension: i64,
    pub degree: u64,
}

pub fn dual_variety<F: Field>(x: &Ideal<F>, dual_names: Option<&[String]>) -> Result<DualVariety<F>> {
    let src = x.ring().clone();
    let n = src.nvars();
    let names = dual_names_for(&src, dual_names)?;
    let dual = Ring::grevlex(&names)?;
    if let [f] = x.generators() {
        if f.total_degree().is_some_and(|d| d > 0) {
            return hypersurface_dual(f, &names, dual);
        }
    }
    let (c, rows, delta) = regular_minor(x)?;
    let i = (0..n)
        .find(|&i| !x.member(&Polynomial::var(&src, i)))
        .expect("a proper ideal misses some coordinate");
    let mut all: Vec<String> = vec![src.fresh_name("w")];
    all.extend((0..n).filter(|&j| j != i).map(|j| src.name(j).to_string()));
    let k = all.len();
    all.extend(names);
    let ring = Ring::grevlex(&all)?;
    let vars: Vec<usize> = (0..n).collect();
    let jac = linalg::jacobian(x.generators(), &vars);
    let at = [(i, F::one())];
    let chart = |p: &Polynomial<F>| p.specialize(&at).map_by_name(&ring);
    let mut m: Vec<Vec<Polynomial<F>>> = rows
        .iter()
        .map(|&r| jac[r].iter().map(chart).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    m.push((0..n).map(|j| Polynomial::var(&ring, k + j)).collect());
    let mut gens: Vec<Polynomial<F>> = x.generators().iter().map(chart).collect::<Result<_>>()?;
    gens.extend(linalg::minors(&ring, &m, c + 1, &[c]));
    let delta = chart(&delta)?;
    if !delta.is_constant() {
        let w = Polynomial::var(&ring, 0);
        gens.push(&Polynomial::one(&ring) - &(&w * &delta));
    }
    gens.retain(|g| !g.is_zero());
    let elim: Vec<usize> = (0..k).collect();
    let image = Ideal::from_generators(&ring, gens).eliminate_vars(&elim).in_ring(&dual);
    let locus = Locus::classify(&image)?;
    let (dimension, degree) = locus.dimension_degree(&dual);
    Ok(DualVariety {
        ring: dual,
        locus,
        dimension,
        degree,
    })
}

/// Cone over the dual of `V(f)` as the closure of `t ∇f(p)`, `p` on one
/// affine chart. Singular points map to the vertex, so nothing needs
/// saturating.
fn hypersurface_dual<F: Field>(f: &Polynomial<F>, names: &[String], dual: RingRef) -> Result<DualVariety<F>> {
    let src = f.ring().clone();
    let n = src.nvars();
    let i = (0..n)
        .find(|&i| f.div_exact(&Polynomial::var(&src, i)).is_none())
        .expect("a nonconstant form misses some coordinate");
    let mut all: Vec<String> = vec![src.fresh_name("t")];
    all.extend((0..n).filter(|&j| j != i).map(|j| src.name(j).to_string()));
    let k = all.len();
    all.extend(names.iter().cloned());
    let ring = Ring::grevlex(&all)?;
    let at = [(i, F::one())];
    let chart = |p: &Polynomial<F>| p.specialize(&at).map_by_name(&ring);
    let t = Polynomial::var(&ring, 0);
    let mut gens = vec![chart(f)?];
    for j in 0..n {
        gens.push(&Polynomial::var(&ring, k + j) - &(&t * &chart(&f.derivative(j))?));
    }
    let elim: Vec<usize> = (0..k).collect();
    let image = Ideal::from_generators(&ring, gens).eliminate_vars(&elim).in_ring(&dual);
    let locus = Locus::classify(&image)?;
    let (dimension, degree) = locus.dimension_degree(&dual);
    Ok(DualVariety {
        ring: dual,
        locus,
        dimension,
        degree,
    })
}

#[derive(Clone, Debug)]
pub struct BidualReport<F: Field> {
    pub curve: Polynomial<F>,
    pub dual: Polynomial<F>,
    pub bidual: Polynomial<F>,
    pub holds: bool,
}

/// Dual of the dual of a plane curve, compared with the curve. Input must be
/// squarefree of degree at least two and certified irreducible: either the
/// Milnor numbers add up to less than `d - 1` (two components of degrees
/// `a + b = d` meet in `ab >= d - 1` singular points) or the line-restriction
/// certificate succeeds.
pub fn bidual_check<F: Field>(curve: &Polynomial<F>, seed: u64) -> Result<BidualReport<F>> {
    let ring = curve.ring().clone();
    if ring.nvars() != 3 {
        return Err(Error::Unsupported("biduality is checked for plane curves".into()));
    }
    let d = curve.homogeneous_degree()?;
    if d < 2 {
        return Err(Error::Invalid("a plane curve of degree at least 2 is required".into()));
    }
    if !is_squarefree(curve) {
        return Err(Error::Invalid("the curve is not reduced".into()));
    }
    let by_milnor = matches!(total_milnor(curve, seed), Ok(Some(mu)) if mu + 1 < d as u64);
    if !by_milnor && !certify_irreducible(curve, seed) {
        return Err(Error::Unsupported("irreducibility of the curve could not be certified".into()));
    }
    let dual = dual_variety(&Ideal::from_generators(&ring, vec![curve.clone()]), None)?;
    let Some(g) = dual.locus.equation().cloned() else {
        return Err(Error::Invalid("the dual of the curve is not a curve".into()));
    };
    let back = dual_variety(&Ideal::from_generators(&dual.ring, vec![g.clone()]), Some(ring.names()))?;
    let h = match back.locus.equation() {
        Some(h) => h.map_by_name(&ring)?,
        None => Polynomial::zero(&ring),
    };
    let holds = h == curve.monic();
    Ok(BidualReport {
        curve: curve.monic(),
        dual: g,
        bidual: h,
        holds,
    })
}

/// Determinant of the matrix of second partial derivatives.
pub fn hessian<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let m: Vec<Vec<Polynomial<F>>> = (0..n)
        .map(|i| (0..n).map(|j| f.derivative(i).derivative(j)).collect())
        .collect();
    linalg::poly_determinant(&ring, &m)
}

/// Points of `F = H = 0` defined over the field.
pub fn flex_points<F: Field>(f: &Polynomial<F>) -> Result<PointSet<F>> {
    let ring = f.ring().clone();
    projective_points(&Ideal::from_generators(&ring, vec![f.clone(), hessian(f)]))
}

/// Tangent line `Σ ∂F/∂x_i(p) x_i` at a smooth point.
pub fn tangent_line<F: Field>(f: &Polynomial<F>, p: &[F]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let coeffs: Vec<F> = (0..ring.nvars()).map(|i| f.derivative(i).eval(p)).collect();
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    linear_form(&ring, &vars, &coeffs).monic()
}

/// Flexes whose tangent line passes through `q`.
pub fn flexes_with_tangent_through<F: Field>(f: &Polynomial<F>, q: &[F]) -> Result<Vec<Vec<F>>> {
    let pts = flex_points(f)?;
    Ok(pts
        .points
        .into_iter()
        .filter(|p| tangent_line(f, p).eval(q).is_zero())
        .collect())
}
