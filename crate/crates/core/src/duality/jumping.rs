//! Jumping sets `J_i` (where the differential of `φ_V` drops rank by `i`),
//! the strata `D_i` of the discriminant and its hyperplane components.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{projective_points, Ideal};
use crate::linalg;
use crate::polyring::{linear_form, Polynomial};

use super::incidence::{incidence_generators, project, Locus};
use super::system::LinearSystem;

const SEED: u64 = 0x6a75_6d70;

#[derive(Clone, Debug)]
pub struct JumpingSet<F: Field> {
    pub index: usize,
    /// Ideal in the source ring; a squarefree principal generator when the
    /// set is a hypersurface.
    pub ideal: Ideal<F>,
    pub empty: bool,
    /// Projective dimension of `J_i`, `-1` when empty.
    pub dimension: i64,
    /// Projective dimension of `X_i = J_i \ J_{i+1}`, `-1` when empty.
    pub stratum_dimension: i64,
}

#[derive(Clone, Debug)]
pub struct JumpingSetReport<F: Field> {
    /// `J_0, .., J_{n+1}`.
    pub sets: Vec<JumpingSet<F>>,
}

impl<F: Field> JumpingSetReport<F> {
    pub fn get(&self, i: usize) -> &JumpingSet<F> {
        &self.sets[i]
    }

    /// Largest `i` with `J_i` nonempty.
    pub fn top(&self) -> usize {
        self.sets.iter().rposition(|s| !s.empty).unwrap_or(0)
    }
}

/// `J_i` on `P^n` is cut out by the `(n-i+2)`-minors of the homogeneous
/// Jacobian `(∂s_j/∂x_k)`: by the Euler relation its rank exceeds the rank of
/// `dφ_V` by one wherever some `s_j` is nonzero.
pub fn jumping_sets<F: Field>(sys: &LinearSystem<F>) -> Result<JumpingSetReport<F>> {
    if !sys.is_projective_space() {
        return Err(Error::Unsupported(
            "jumping sets are computed for linear systems on projective space".into(),
        ));
    }
    sys.ensure_base_point_free()?;
    let ring = sys.ring().clone();
    let n = sys.dim();
    let vars: Vec<usize> = (0..=n).collect();
    let jac = linalg::jacobian(sys.sections(), &vars);
    let mut ideals = Vec::with_capacity(n + 2);
    for i in 0..=n + 1 {
        let k = n + 2 - i;
        let ideal = if k > n + 1 {
            Ideal::zero(&ring)
        } else {
            let minors = linalg::minors(&ring, &jac, k, &[]);
            radical_report(Ideal::from_generators(&ring, minors), &vars)?
        };
        ideals.push(ideal);
    }
    let dims: Vec<i64> = ideals.iter().map(projective_dimension).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sets = Vec::with_capacity(n + 2);
    for (i, ideal) in ideals.iter().enumerate() {
        let stratum_dimension = if dims[i] < 0 {
            -1
        } else if i == n + 1 || dims[i + 1] < 0 {
            dims[i]
        } else {
            let h = random_combination(ideals[i + 1].generators(), &mut rng);
            projective_dimension(&ideal.saturate(&h)?)
        };
        sets.push(JumpingSet {
            index: i,
            ideal: ideal.clone(),
            empty: dims[i] < 0,
            dimension: dims[i],
            stratum_dimension,
        });
    }
    Ok(JumpingSetReport { sets })
}

fn projective_dimension<F: Field>(i: &Ideal<F>) -> i64 {
    i.projective_dimension_degree().map_or(-1, |(d, _)| d)
}

/// Removes the irrelevant component and replaces a hypersurface by its
/// reduced equation.
fn radical_report<F: Field>(ideal: Ideal<F>, vars: &[usize]) -> Result<Ideal<F>> {
    let ring = ideal.ring().clone();
    match Locus::classify(&ideal)? {
        Locus::Empty => Ok(Ideal::unit(&ring)),
        Locus::Hypersurface(g) => Ok(Ideal::from_generators(&ring, vec![g])),
        Locus::General(i) => Ok(i.saturate_irrelevant(vars)?.reduced()),
    }
}

pub(crate) fn random_combination<F: Field>(gens: &[Polynomial<F>], rng: &mut ChaCha8Rng) -> Polynomial<F> {
    let ring = gens[0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for g in gens {
        let mut c = F::random(rng);
        if c.is_zero() {
            c = F::one();
        }
        acc = &acc + &g.scale(&c);
    }
    acc
}

/// Hyperplanes `|V - x|` for the points `x` of `J_n`, as linear forms
/// `Σ s_j(x) λ_j` in the dual ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneComponents<F: Field> {
    pub forms: Vec<Polynomial<F>>,
    /// Points of `J_n` defined only over an extension of the field.
    pub unresolved: u64,
}

pub fn hyperplane_components<F: Field>(
    sys: &LinearSystem<F>,
    jumping: &JumpingSetReport<F>,
) -> Result<HyperplaneComponents<F>> {
    let n = sys.dim();
    let jn = jumping.get(n);
    if jn.empty {
        return Ok(HyperplaneComponents {
            forms: Vec::new(),
            unresolved: 0,
        });
    }
    if jn.dimension > 0 {
        return Err(Error::JumpingSetNotFinite(jn.dimension));
    }
    let pts = projective_points(&jn.ideal)?;
    let dual = sys.dual_ring();
    let vars: Vec<usize> = (0..dual.nvars()).collect();
    let mut forms: Vec<Polynomial<F>> = pts
        .points
        .iter()
        .map(|p| linear_form(&dual, &vars, &sys.evaluate(p)).monic())
        .collect();
    forms.sort_by_key(|f| f.to_string());
    forms.dedup();
    Ok(HyperplaneComponents {
        forms,
        unresolved: pts.unresolved,
    })
}

/// `D_i`: closure of the set of members singular at a point of
/// `X_i = J_i \ J_{i+1}`. Empty strata are omitted.
pub fn strata<F: Field>(
    sys: &LinearSystem<F>,
    jumping: &JumpingSetReport<F>,
) -> Result<BTreeMap<usize, Locus<F>>> {
    let (ring, gens) = incidence_generators(sys);
    let nx = sys.ring().nvars();
    let dual = sys.dual_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd1);
    let mut out = BTreeMap::new();
    for (i, set) in jumping.sets.iter().enumerate() {
        if set.empty {
            continue;
        }
        let mut g = gens.clone();
        for j in set.ideal.generators() {
            g.push(j.map_by_name(&ring)?);
        }
        let avoid = match jumping.sets.get(i + 1) {
            Some(next) if !next.empty => {
                let h = random_combination(next.ideal.generators(), &mut rng);
                Some(h.map_by_name(&ring)?)
            }
            _ => None,
        };
        let locus = project(&ring, nx, &g, avoid.as_ref(), &dual)?;
        if !locus.is_empty() {
            out.insert(i, locus);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::polyring::parse_polynomial;

    type F = Fp<32003>;

    fn fermat<K: Field>(m: u32) -> LinearSystem<K> {
        LinearSystem::parse(&format!(
            "ring: [x0, x1, x2]\nsection: x0^{m}\nsection: x1^{m}\nsection: x2^{m}\n"
        ))
        .unwrap()
    }

    #[test]
    fn fermat_jumping_sets() {
        for m in [2, 3] {
            let s = fermat::<F>(m);
            let j = jumping_sets(&s).unwrap();
            assert!(j.get(0).ideal.is_zero());
            let r = s.ring();
            assert_eq!(j.get(1).ideal.generators(), &[parse_polynomial(r, "x0*x1*x2").unwrap()]);
            assert_eq!(j.get(2).dimension, 0);
            assert_eq!(projective_points(&j.get(2).ideal).unwrap().points.len(), 3);
            assert!(j.get(3).empty);
            let h = hyperplane_components(&s, &j).unwrap();
            assert_eq!(h.forms.len(), 3);
        }
    }

    #[test]
    fn identity_has_no_jumps() {
        let s: LinearSystem<Rational> =
            LinearSystem::parse("ring: QQ[x0, x1, x2]\nsection: x0\nsection: x1\nsection: x2\n").unwrap();
        let j = jumping_sets(&s).unwrap();
        assert!(j.sets[1..].iter().all(|s| s.empty));
        assert!(hyperplane_components(&s, &j).unwrap().forms.is_empty());
        let st = strata(&s, &j).unwrap();
        assert!(st.is_empty());
    }

    #[test]
    fn cone_web_strata() {
        let s: LinearSystem<F> = LinearSystem::parse(
            "ring: [u, x, y]\ndual: l, m, n, e\nsection: u^2\nsection: x^2\nsection: 2*x*y\nsection: y^2\n",
        )
        .unwrap();
        let j = jumping_sets(&s).unwrap();
        assert_eq!(j.get(1).dimension, 1);
        assert_eq!(j.get(1).stratum_dimension, 1);
        assert_eq!(j.get(2).dimension, 0);
        let h = hyperplane_components(&s, &j).unwrap();
        let d = s.dual_ring();
        assert_eq!(h.forms, vec![parse_polynomial(&d, "l").unwrap()]);
        let st = strata(&s, &j).unwrap();
        assert_eq!(st[&1].equation().unwrap(), &parse_polynomial(&d, "n^2 - m*e").unwrap());
        assert_eq!(st[&2].equation().unwrap(), &parse_polynomial(&d, "l").unwrap());
    }
}
