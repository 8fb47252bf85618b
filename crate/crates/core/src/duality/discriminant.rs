//! The discriminant report: reduced equation, codegree, defect, hyperplane
//! components, residual factor and strata.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::field::Field;
use crate::ideals::Ideal;
use crate::polyring::Polynomial;

use super::incidence::{certify_irreducible, discriminant_locus, Locus};
use super::jumping::{hyperplane_components, jumping_sets, strata, HyperplaneComponents, JumpingSetReport};
use super::system::LinearSystem;

/// What remains of the reduced equation after dividing out the hyperplane
/// components.
#[derive(Clone, Debug)]
pub struct Residual<F: Field> {
    pub equation: Polynomial<F>,
    pub degree: u32,
    /// Irreducibility over the coefficient field was certified.
    pub irreducible: bool,
}

#[derive(Clone, Debug)]
pub struct DiscriminantReport<F: Field> {
    pub locus: Locus<F>,
    pub ideal: Ideal<F>,
    pub equation: Option<Polynomial<F>>,
    /// Projective dimension, `-1` when empty.
    pub dimension: i64,
    pub codegree: u64,
    /// `N - 1 - dim D`.
    pub defect: i64,
    /// `None` when the source is not projective space.
    pub hyperplanes: Option<HyperplaneComponents<F>>,
    pub residual: Option<Residual<F>>,
    pub jumping: Option<JumpingSetReport<F>>,
    pub strata: BTreeMap<usize, Locus<F>>,
}

/// Discriminant without jumping sets and strata.
pub fn discriminant_basic<F: Field>(sys: &LinearSystem<F>) -> Result<DiscriminantReport<F>> {
    let locus = discriminant_locus(sys)?;
    let dual = sys.dual_ring();
    let (dimension, codegree) = locus.dimension_degree(&dual);
    let big_n = sys.big_n() as i64;
    Ok(DiscriminantReport {
        ideal: locus.ideal(&dual),
        equation: locus.equation().cloned(),
        locus,
        dimension,
        codegree,
        defect: big_n - 1 - dimension,
        hyperplanes: None,
        residual: None,
        jumping: None,
        strata: BTreeMap::new(),
    })
}

/// Full report. On projective space this includes the jumping sets, the
/// hyperplane components read off `J_n` and the strata `D_i`.
pub fn discriminant<F: Field>(sys: &LinearSystem<F>) -> Result<DiscriminantReport<F>> {
    let mut report = discriminant_basic(sys)?;
    if sys.is_projective_space() {
        let j = jumping_sets(sys)?;
        let h = hyperplane_components(sys, &j)?;
        report.strata = strata(sys, &j)?;
        report.hyperplanes = Some(h);
        report.jumping = Some(j);
    }
    if let Some(eq) = &report.equation {
        let mut rest = eq.clone();
        if let Some(h) = &report.hyperplanes {
            for f in &h.forms {
                rest = rest.div_exact(f).expect("hyperplane components divide the discriminant");
            }
        }
        if !rest.is_constant() {
            report.residual = Some(Residual {
                degree: rest.total_degree().unwrap(),
                irreducible: certify_irreducible(&rest, 7),
                equation: rest.monic(),
            });
        }
    }
    Ok(report)
}

impl<F: Field> DiscriminantReport<F> {
    pub fn is_empty(&self) -> bool {
        self.locus.is_empty()
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplanes.as_ref().map_or(0, |h| h.forms.len() + h.unresolved as usize)
    }
}
