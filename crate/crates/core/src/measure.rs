//! Finite descriptions of hom-objects and their measures.
//!
//! A [`HomObject`] is one of: the initial object, a finite set, a finite CW
//! complex given as a list of connected components (each a cell census), or
//! an embedded finite category. An [`Enrichment`] decides which variants are
//! admitted and how they are measured:
//!
//! * `Set`: cardinality of finite sets.
//! * `Top`: topological Euler characteristic of the CW census.
//! * `Cat`: Euler characteristic of the embedded finite category.
//!
//! Every measure sends the empty object to 0 and the unit to 1, and turns
//! products into products and coproducts into sums.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enriched::euler_characteristic;
use crate::fincat::{self, FiniteCategory};
use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("{kind} hom-objects are not measurable under {enrichment} enrichment")]
    VariantNotMeasurable { kind: &'static str, enrichment: Enrichment },
    #[error("embedded category admits no Euler characteristic")]
    ChiUndefined,
    #[error("cannot take the coproduct of {0} and {1} hom-objects")]
    MixedVariants(&'static str, &'static str),
    #[error("invalid CW component: {0}")]
    InvalidCw(String),
    #[error("finite set of size {0} is too large to expand into points")]
    TooLarge(BigUint),
}

/// The enriching category, which fixes the measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Enrichment {
    Set,
    Cat,
    Top,
}

impl fmt::Display for Enrichment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Enrichment::Set => "set",
            Enrichment::Cat => "cat",
            Enrichment::Top => "top",
        })
    }
}

/// Cell counts of a finite CW complex, indexed by dimension. Trailing zeros
/// are trimmed, so the empty vector is the empty complex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellVector(Vec<BigUint>);

impl CellVector {
    pub fn new(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        Self(counts)
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// One 0-cell.
    pub fn point() -> Self {
        Self::from_counts(&[1])
    }

    /// Minimal census of the `k`-sphere: two points for `k = 0`, otherwise a
    /// 0-cell and a `k`-cell.
    pub fn sphere(k: usize) -> Self {
        let mut counts = vec![0u64; k + 1];
        counts[0] += 1;
        counts[k] += 1;
        Self::from_counts(&counts)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Alternating sum of the cell counts.
    pub fn euler(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(d, c)| {
                let c = BigInt::from(c.clone());
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// Census of the product complex: `c[d] = Σ a[i]·b[d−i]`.
    pub fn convolve(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::default();
        }
        let mut out = vec![BigUint::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Pointwise sum, the census of a disjoint union.
    pub fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let at = |v: &[BigUint], i: usize| v.get(i).cloned().unwrap_or_default();
        Self::new((0..len).map(|i| at(&self.0, i) + at(&other.0, i)).collect())
    }

    fn check_component(&self) -> Result<(), MeasureError> {
        match self.0.first() {
            None => Err(MeasureError::InvalidCw("component is empty".into())),
            Some(c) if c.is_zero() => Err(MeasureError::InvalidCw("component declares no 0-cell".into())),
            Some(_) => Ok(()),
        }
    }
}

/// A finite description of an object of the enriching category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomObject {
    /// The initial object.
    Empty,
    FinSet(BigUint),
    /// Connected components, each given by its cell census.
    Cw(Vec<CellVector>),
    FinCat(Arc<FiniteCategory>),
}

impl HomObject {
    pub fn finset(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Self::Empty
        } else {
            Self::FinSet(n)
        }
    }

    /// The unit object (a single point / one-element set).
    pub fn point() -> Self {
        Self::finset(1u32)
    }

    /// A CW complex from connected-component censuses. Each component must be
    /// nonempty with at least one 0-cell; no components means empty.
    pub fn cw(components: Vec<CellVector>) -> Result<Self, MeasureError> {
        for c in &components {
            c.check_component()?;
        }
        Ok(if components.is_empty() {
            Self::Empty
        } else {
            Self::Cw(components)
        })
    }

    /// A connected CW complex.
    pub fn connected_cw(census: CellVector) -> Result<Self, MeasureError> {
        Self::cw(vec![census])
    }

    pub fn fincat(c: FiniteCategory) -> Self {
        if c.object_count() == 0 {
            Self::Empty
        } else {
            Self::FinCat(Arc::new(c))
        }
    }

    /// Brings a directly-constructed value into normal form, validating CW
    /// components.
    pub fn normalize(self) -> Result<Self, MeasureError> {
        match self {
            Self::FinSet(n) => Ok(Self::finset(n)),
            Self::Cw(cs) => Self::cw(cs),
            Self::FinCat(c) if c.object_count() == 0 => Ok(Self::Empty),
            other => Ok(other),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Empty => "empty",
            Self::FinSet(_) => "finset",
            Self::Cw(_) => "cw",
            Self::FinCat(_) => "fincat",
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Self::Empty => true,
            Self::FinSet(n) => n.is_zero(),
            Self::Cw(cs) => cs.is_empty(),
            Self::FinCat(c) => c.object_count() == 0,
        }
    }

    /// Whether this is (a normal form of) the unit object.
    pub fn is_point(&self) -> bool {
        match self {
            Self::FinSet(n) => n.is_one(),
            Self::Cw(cs) => cs.len() == 1 && cs[0] == CellVector::point(),
            Self::FinCat(c) => c.object_count() == 1 && c.morphism_count() == 1,
            Self::Empty => false,
        }
    }

    /// The CW census of each component, promoting finite sets to points.
    pub fn cw_components(&self) -> Result<Vec<CellVector>, MeasureError> {
        match self {
            Self::Empty => Ok(Vec::new()),
            Self::FinSet(n) => Ok(vec![CellVector::point(); expand(n)?]),
            Self::Cw(cs) => Ok(cs.clone()),
            Self::FinCat(_) => Err(MeasureError::VariantNotMeasurable {
                kind: "fincat",
                enrichment: Enrichment::Top,
            }),
        }
    }

    /// Total census over all components.
    pub fn total_census(&self) -> Result<CellVector, MeasureError> {
        Ok(self
            .cw_components()?
            .iter()
            .fold(CellVector::default(), |acc, c| acc.add(c)))
    }

    pub(crate) fn as_category(&self) -> Result<FiniteCategory, MeasureError> {
        match self {
            Self::Empty => Ok(fincat::empty()),
            Self::FinSet(n) => Ok(fincat::discrete(expand(n)?)),
            Self::FinCat(c) => Ok((**c).clone()),
            Self::Cw(_) => Err(MeasureError::VariantNotMeasurable {
                kind: "cw",
                enrichment: Enrichment::Cat,
            }),
        }
    }
}

fn expand(n: &BigUint) -> Result<usize, MeasureError> {
    n.to_usize()
        .filter(|&k| k <= 1 << 20)
        .ok_or_else(|| MeasureError::TooLarge(n.clone()))
}

impl Enrichment {
    pub fn admits(&self, h: &HomObject) -> bool {
        matches!(
            (self, h),
            (_, HomObject::Empty)
                | (_, HomObject::FinSet(_))
                | (Enrichment::Top, HomObject::Cw(_))
                | (Enrichment::Cat, HomObject::FinCat(_))
        )
    }

    fn require(&self, h: &HomObject) -> Result<(), MeasureError> {
        if self.admits(h) {
            Ok(())
        } else {
            Err(MeasureError::VariantNotMeasurable {
                kind: h.kind(),
                enrichment: *self,
            })
        }
    }

    /// The unit hom-object `1` for this enrichment.
    pub fn unit(&self) -> HomObject {
        HomObject::point()
    }

    pub fn measure(&self, h: &HomObject) -> Result<Rational, MeasureError> {
        measure(h, *self)
    }
}

/// Measures a hom-object under the given enrichment.
pub fn measure(h: &HomObject, enrichment: Enrichment) -> Result<Rational, MeasureError> {
    enrichment.require(h)?;
    match h {
        HomObject::Empty => Ok(Rational::zero()),
        HomObject::FinSet(n) => Ok(Rational::from_integer(BigInt::from(n.clone()))),
        HomObject::Cw(cs) => Ok(Rational::from_integer(cs.iter().map(CellVector::euler).sum())),
        HomObject::FinCat(c) => euler_characteristic(&fincat::to_enriched(c))
            .map_err(|_| MeasureError::ChiUndefined)?
            .ok_or(MeasureError::ChiUndefined),
    }
}

/// Number of connected components.
pub fn pi0_count(h: &HomObject) -> BigUint {
    match h {
        HomObject::Empty => BigUint::zero(),
        HomObject::FinSet(n) => n.clone(),
        HomObject::Cw(cs) => BigUint::from(cs.len()),
        HomObject::FinCat(c) => BigUint::from(c.pi0_count()),
    }
}

/// Monoidal product. All supported enrichments are cartesian, so this is the
/// categorical product.
pub fn tensor(h1: &HomObject, h2: &HomObject, enrichment: Enrichment) -> Result<HomObject, MeasureError> {
    enrichment.require(h1)?;
    enrichment.require(h2)?;
    if h1.is_empty() || h2.is_empty() {
        return Ok(HomObject::Empty);
    }
    match (h1, h2) {
        (HomObject::FinSet(a), HomObject::FinSet(b)) => Ok(HomObject::finset(a * b)),
        (HomObject::FinCat(_), _) | (_, HomObject::FinCat(_)) => Ok(HomObject::fincat(fincat::product(
            &h1.as_category()?,
            &h2.as_category()?,
        ))),
        _ => {
            let (a, b) = (h1.cw_components()?, h2.cw_components()?);
            let comps = a.iter().flat_map(|x| b.iter().map(move |y| x.convolve(y))).collect();
            HomObject::cw(comps)
        }
    }
}

/// Coproduct (disjoint union). A finite set meeting a CW complex or a
/// category is promoted to points or to a discrete category; CW complexes and
/// categories never share an enrichment and do not mix.
pub fn coproduct(h1: &HomObject, h2: &HomObject) -> Result<HomObject, MeasureError> {
    if h2.is_empty() {
        return Ok(h1.clone());
    }
    if h1.is_empty() {
        return Ok(h2.clone());
    }
    match (h1, h2) {
        (HomObject::FinSet(a), HomObject::FinSet(b)) => Ok(HomObject::finset(a + b)),
        (HomObject::Cw(a), HomObject::Cw(b)) => HomObject::cw(a.iter().chain(b).cloned().collect()),
        (HomObject::FinCat(a), HomObject::FinCat(b)) => Ok(HomObject::fincat(fincat::disjoint_union(a, b))),
        (HomObject::FinSet(_), HomObject::Cw(_)) | (HomObject::Cw(_), HomObject::FinSet(_)) => {
            HomObject::cw(h1.cw_components()?.into_iter().chain(h2.cw_components()?).collect())
        }
        (HomObject::FinSet(_), HomObject::FinCat(_)) | (HomObject::FinCat(_), HomObject::FinSet(_)) => Ok(
            HomObject::fincat(fincat::disjoint_union(&h1.as_category()?, &h2.as_category()?)),
        ),
        _ => Err(MeasureError::MixedVariants(h1.kind(), h2.kind())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::group::FiniteGroup;
    use crate::linalg::{frac, int};
    use proptest::prelude::*;

    fn cw(cs: &[&[u64]]) -> HomObject {
        HomObject::cw(cs.iter().map(|c| CellVector::from_counts(c)).collect()).unwrap()
    }

    #[test]
    fn measure_examples() {
        assert_eq!(measure(&HomObject::finset(5u32), Enrichment::Set).unwrap(), int(5));
        // S¹: one vertex, one edge
        assert_eq!(measure(&cw(&[&[1, 1]]), Enrichment::Top).unwrap(), int(0));
        // S²: 1 − 0 + 1
        assert_eq!(measure(&cw(&[&[1, 0, 1]]), Enrichment::Top).unwrap(), int(2));
    }

    #[test]
    fn cat_measure_uses_category_chi() {
        let z3 = HomObject::fincat(fincat::from_group(&FiniteGroup::cyclic(3)));
        assert_eq!(measure(&z3, Enrichment::Cat).unwrap(), frac(1, 3));
        assert_eq!(measure(&HomObject::finset(4u32), Enrichment::Cat).unwrap(), int(4));
    }

    #[test]
    fn wrong_enrichment_is_rejected() {
        assert!(matches!(
            measure(&cw(&[&[1]]), Enrichment::Set),
            Err(MeasureError::VariantNotMeasurable { .. })
        ));
        let c = HomObject::fincat(fincat::terminal());
        assert!(measure(&c, Enrichment::Top).is_err());
        assert!(tensor(&c, &cw(&[&[1]]), Enrichment::Cat).is_err());
    }

    #[test]
    fn category_without_chi() {
        assert_eq!(
            measure(&HomObject::fincat(no_chi_category()), Enrichment::Cat),
            Err(MeasureError::ChiUndefined)
        );
    }

    /// Objects a, b with |hom| = [[2, 1], [4, 2]]: ξ is singular and neither
    /// ξw = u nor vξ = uᵀ is solvable. Found by exhaustive search over
    /// composition tables.
    pub(crate) fn no_chi_category() -> FiniteCategory {
        use crate::fincat::{CategoryData, Morphism};
        let ids = [
            ("1a", 0, 0),
            ("e", 0, 0),
            ("r", 0, 1),
            ("s0", 1, 0),
            ("s1", 1, 0),
            ("s2", 1, 0),
            ("s3", 1, 0),
            ("1b", 1, 1),
            ("t", 1, 1),
        ];
        let morphisms = ids
            .iter()
            .map(|&(id, src, tgt)| Morphism {
                id: id.into(),
                src,
                tgt,
            })
            .collect();
        let table: &[(usize, usize, usize)] = &[
            (0, 0, 0),
            (0, 1, 1),
            (0, 3, 3),
            (0, 4, 4),
            (0, 5, 5),
            (0, 6, 6),
            (1, 0, 1),
            (1, 1, 1),
            (1, 3, 3),
            (1, 4, 3),
            (1, 5, 3),
            (1, 6, 3),
            (2, 0, 2),
            (2, 1, 2),
            (2, 3, 8),
            (2, 4, 8),
            (2, 5, 8),
            (2, 6, 8),
            (3, 2, 1),
            (4, 2, 1),
            (5, 2, 1),
            (6, 2, 1),
            (3, 7, 3),
            (4, 7, 4),
            (5, 7, 5),
            (6, 7, 6),
            (3, 8, 3),
            (4, 8, 3),
            (5, 8, 3),
            (6, 8, 3),
            (7, 2, 2),
            (7, 7, 7),
            (7, 8, 8),
            (8, 2, 2),
            (8, 7, 8),
            (8, 8, 8),
        ];
        FiniteCategory::try_from(CategoryData {
            objects: vec!["a".into(), "b".into()],
            morphisms,
            identity: vec![Some(0), Some(7)],
            compose: table.iter().map(|&(g, f, h)| ((g, f), h)).collect(),
        })
        .unwrap()
    }

    #[test]
    fn pi0_examples() {
        assert_eq!(pi0_count(&HomObject::Empty), BigUint::zero());
        assert_eq!(pi0_count(&HomObject::finset(3u32)), BigUint::from(3u32));
        assert_eq!(pi0_count(&cw(&[&[1], &[1, 1]])), BigUint::from(2u32));
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&HomObject::finset(2u32), &HomObject::finset(3u32), Enrichment::Set).unwrap();
        assert_eq!(t, HomObject::finset(6u32));
        for h in [HomObject::finset(2u32), cw(&[&[1, 1]])] {
            assert_eq!(
                tensor(&h, &HomObject::Empty, Enrichment::Top).unwrap(),
                HomObject::Empty
            );
        }
        // torus from two circles
        let torus = tensor(&cw(&[&[1, 1]]), &cw(&[&[1, 1]]), Enrichment::Top).unwrap();
        assert_eq!(torus, cw(&[&[1, 2, 1]]));
        assert_eq!(measure(&torus, Enrichment::Top).unwrap(), int(0));
    }

    #[test]
    fn mixed_tensor_promotes_finite_sets() {
        let t = tensor(&HomObject::finset(2u32), &cw(&[&[1, 1]]), Enrichment::Top).unwrap();
        assert_eq!(t, cw(&[&[1, 1], &[1, 1]]));
        let c = HomObject::fincat(fincat::from_group(&FiniteGroup::cyclic(2)));
        let t = tensor(&HomObject::finset(3u32), &c, Enrichment::Cat).unwrap();
        assert_eq!(measure(&t, Enrichment::Cat).unwrap(), frac(3, 2));
    }

    #[test]
    fn coproduct_examples() {
        let s = coproduct(&HomObject::finset(2u32), &HomObject::finset(3u32)).unwrap();
        assert_eq!(s, HomObject::finset(5u32));
        let h = cw(&[&[1, 1]]);
        assert_eq!(coproduct(&h, &HomObject::Empty).unwrap(), h);
        let two = coproduct(&cw(&[&[1]]), &cw(&[&[1]])).unwrap();
        assert_eq!(two, cw(&[&[1], &[1]]));
        assert_eq!(measure(&two, Enrichment::Top).unwrap(), int(2));
        assert_eq!(coproduct(&HomObject::finset(1u32), &h).unwrap(), cw(&[&[1], &[1, 1]]));
        let c = HomObject::fincat(fincat::indiscrete(2));
        let mixed = coproduct(&c, &HomObject::finset(2u32)).unwrap();
        assert_eq!(measure(&mixed, Enrichment::Cat).unwrap(), int(3));
        assert!(matches!(coproduct(&h, &c), Err(MeasureError::MixedVariants(..))));
    }

    #[test]
    fn normalization() {
        assert_eq!(HomObject::finset(0u32), HomObject::Empty);
        assert_eq!(HomObject::cw(vec![]).unwrap(), HomObject::Empty);
        assert_eq!(HomObject::fincat(fincat::empty()), HomObject::Empty);
        assert_eq!(
            HomObject::FinSet(BigUint::zero()).normalize().unwrap(),
            HomObject::Empty
        );
        assert!(HomObject::cw(vec![CellVector::default()]).is_err());
        assert!(HomObject::cw(vec![CellVector::from_counts(&[0, 1])]).is_err());
        assert_eq!(CellVector::from_counts(&[1, 1, 0, 0]).counts().len(), 2);
    }

    #[test]
    fn spheres() {
        assert_eq!(CellVector::sphere(0), CellVector::from_counts(&[2]));
        assert_eq!(CellVector::sphere(3), CellVector::from_counts(&[1, 0, 0, 1]));
        for k in 0..6 {
            let expected = if k % 2 == 0 { 2 } else { 0 };
            assert_eq!(CellVector::sphere(k).euler(), BigInt::from(expected));
        }
    }

    fn cell_vector() -> impl Strategy<Value = CellVector> {
        (1u64..=3, proptest::collection::vec(0u64..=3, 0..4)).prop_map(|(v, rest)| {
            let mut c = vec![v];
            c.extend(rest);
            CellVector::from_counts(&c)
        })
    }

    fn small_category() -> impl Strategy<Value = FiniteCategory> {
        prop_oneof![
            (0usize..3).prop_map(fincat::discrete),
            (1usize..4).prop_map(|n| fincat::from_group(&FiniteGroup::cyclic(n))),
            (1usize..4).prop_map(|n| fincat::poset(n, |i, j| i < j).unwrap()),
            (1usize..3).prop_map(fincat::indiscrete),
            Just(fincat::monoid("M", &[vec![0, 1], vec![1, 1]]).unwrap()),
        ]
    }

    /// Hom-objects admitted by the given enrichment.
    fn hom_for(e: Enrichment) -> BoxedStrategy<HomObject> {
        let finset = (0u32..5).prop_map(HomObject::finset);
        match e {
            Enrichment::Set => finset.boxed(),
            Enrichment::Top => prop_oneof![
                finset,
                proptest::collection::vec(cell_vector(), 0..3).prop_map(|cs| HomObject::cw(cs).unwrap()),
            ]
            .boxed(),
            Enrichment::Cat => prop_oneof![finset, small_category().prop_map(HomObject::fincat)].boxed(),
        }
    }

    fn any_enrichment() -> impl Strategy<Value = Enrichment> {
        prop_oneof![Just(Enrichment::Set), Just(Enrichment::Top), Just(Enrichment::Cat)]
    }

    proptest! {
        #[test]
        fn measure_is_multiplicative(
            (e, a, b) in any_enrichment().prop_flat_map(|e| (Just(e), hom_for(e), hom_for(e)))
        ) {
            let t = tensor(&a, &b, e).unwrap();
            prop_assert_eq!(
                measure(&t, e).unwrap(),
                measure(&a, e).unwrap() * measure(&b, e).unwrap()
            );
            prop_assert_eq!(pi0_count(&t), pi0_count(&a) * pi0_count(&b));
        }

        #[test]
        fn measure_is_additive(
            (e, a, b) in any_enrichment().prop_flat_map(|e| (Just(e), hom_for(e), hom_for(e)))
        ) {
            let s = coproduct(&a, &b).unwrap();
            prop_assert_eq!(
                measure(&s, e).unwrap(),
                measure(&a, e).unwrap() + measure(&b, e).unwrap()
            );
            prop_assert_eq!(pi0_count(&s), pi0_count(&a) + pi0_count(&b));
        }

        #[test]
        fn empty_and_unit(e in any_enrichment()) {
            prop_assert_eq!(measure(&HomObject::Empty, e).unwrap(), int(0));
            prop_assert_eq!(measure(&e.unit(), e).unwrap(), int(1));
        }
    }

    #[test]
    fn unit_in_each_variant_measures_one() {
        assert_eq!(measure(&cw(&[&[1]]), Enrichment::Top).unwrap(), int(1));
        let one = HomObject::fincat(fincat::terminal());
        assert_eq!(measure(&one, Enrichment::Cat).unwrap(), int(1));
        assert!(one.is_point());
    }
}
