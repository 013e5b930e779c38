//! Acyclic topological categories.
//!
//! Every endomorphism space is a point and no two distinct objects have maps
//! both ways, so `a < b ⇔ A(a, b) ≠ ∅` is a strict partial order. Three
//! independent routes to the Euler characteristic are provided:
//!
//! * [`chain_chi`]: the alternating sum over strictly increasing chains of the
//!   products of hom Euler characteristics;
//! * [`classifying_chi`]: the alternating cell count of the classifying space,
//!   from the non-degenerate nerve census of [`nerve_cell_census`];
//! * the similarity-matrix Euler characteristic of [`AcyclicTopCategory::to_enriched`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::enriched::{Coweighting, EnrichedCategory, EnrichedError};
use crate::linalg::{ones, Rational};
use crate::measure::{CellVector, Enrichment, HomObject, MeasureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopCatError {
    #[error("not an acyclic topological category: {0}")]
    NotAcyclic(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Enriched(#[from] EnrichedError),
    #[error("coweighting certificate failed")]
    CertificateFailed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicTopCategory {
    objects: Vec<String>,
    /// Row-major `n × n`; diagonal entries are points.
    homs: Vec<HomObject>,
    /// Hom censuses summed over components, parallel to `homs`.
    census: Vec<CellVector>,
    /// Hom Euler characteristics, parallel to `homs`.
    chi: Vec<BigInt>,
}

impl AcyclicTopCategory {
    /// Builds the category from its non-identity homs; `hom` is only called
    /// for `a ≠ b`. Finite sets are read as discrete spaces.
    pub fn from_fn(objects: Vec<String>, mut hom: impl FnMut(usize, usize) -> HomObject) -> Result<Self, TopCatError> {
        let n = objects.len();
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                homs.push(if a == b {
                    HomObject::point()
                } else {
                    hom(a, b).normalize()?
                });
            }
        }
        Self::from_homs(objects, homs)
    }

    /// Reads a Top-enriched category, checking that endomorphism spaces are
    /// points.
    pub fn from_enriched(c: &EnrichedCategory) -> Result<Self, TopCatError> {
        if c.enrichment() != Enrichment::Top {
            return Err(TopCatError::NotAcyclic(format!(
                "expected top enrichment, got {}",
                c.enrichment()
            )));
        }
        let n = c.object_count();
        if let Some(a) = (0..n).find(|&a| !c.hom(a, a).is_point()) {
            return Err(TopCatError::NotAcyclic(format!(
                "endomorphism space of {} is not a point",
                c.objects()[a]
            )));
        }
        let homs = (0..n * n).map(|k| c.hom(k / n, k % n).clone()).collect();
        Self::from_homs(c.objects().to_vec(), homs)
    }

    fn from_homs(objects: Vec<String>, homs: Vec<HomObject>) -> Result<Self, TopCatError> {
        let n = objects.len();
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = objects.iter().find(|o| !seen.insert(*o)) {
            return Err(TopCatError::NotAcyclic(format!("duplicate object {dup}")));
        }
        let mut census = Vec::with_capacity(n * n);
        let mut chi = Vec::with_capacity(n * n);
        for h in &homs {
            let c = h.total_census()?;
            chi.push(c.euler());
            census.push(c);
        }
        let nonempty = |a: usize, b: usize| !homs[a * n + b].is_empty();
        for a in 0..n {
            for b in 0..n {
                if a != b && nonempty(a, b) && nonempty(b, a) {
                    return Err(TopCatError::NotAcyclic(format!(
                        "maps go both ways between {} and {}",
                        objects[a], objects[b]
                    )));
                }
                for c in 0..n {
                    if a != b && b != c && a != c && nonempty(a, b) && nonempty(b, c) && !nonempty(a, c) {
                        return Err(TopCatError::NotAcyclic(format!(
                            "{} → {} → {} has nowhere to compose",
                            objects[a], objects[b], objects[c]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            objects,
            homs,
            census,
            chi,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn hom(&self, a: usize, b: usize) -> &HomObject {
        &self.homs[a * self.objects.len() + b]
    }

    /// `a < b`: distinct objects with a nonempty hom.
    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && !self.hom(a, b).is_empty()
    }

    fn hom_chi(&self, a: usize, b: usize) -> &BigInt {
        &self.chi[a * self.objects.len() + b]
    }

    fn hom_census(&self, a: usize, b: usize) -> &CellVector {
        &self.census[a * self.objects.len() + b]
    }

    /// The same data as a Top-enriched category.
    pub fn to_enriched(&self) -> EnrichedCategory {
        let n = self.objects.len();
        EnrichedCategory::from_fn(Enrichment::Top, self.objects.clone(), |a, b| {
            self.homs[a * n + b].clone()
        })
        .expect("validated homs are Top-measurable")
    }

    /// Depth-first walk over every strictly increasing chain `a₀ < ⋯ < aⱼ`,
    /// in object order. `step` folds a value along the chain: it receives the
    /// value at the chain minus its last object and the last hom `(aⱼ₋₁, aⱼ)`.
    fn walk_chains<T: Clone>(
        &self,
        start: impl Fn(usize) -> T,
        step: impl Fn(&T, usize, usize) -> T,
        mut visit: impl FnMut(&[usize], &T),
    ) {
        let n = self.objects.len();
        let mut stack: Vec<(Vec<usize>, T)> = (0..n).rev().map(|a| (vec![a], start(a))).collect();
        while let Some((chain, value)) = stack.pop() {
            visit(&chain, &value);
            let last = *chain.last().unwrap();
            for b in (0..n).rev() {
                if self.less(last, b) {
                    let mut next = chain.clone();
                    next.push(b);
                    stack.push((next, step(&value, last, b)));
                }
            }
        }
    }

    /// Upper bound on the census dimension: max over chains of
    /// `j + Σ dim A(aᵢ, aᵢ₊₁)`. It is attained, since leading cell counts
    /// multiply to a nonzero count.
    pub fn census_dimension(&self) -> Option<usize> {
        let mut best = None;
        self.walk_chains(
            |_| 0usize,
            |d, a, b| d + 1 + self.hom_census(a, b).counts().len() - 1,
            |_, &d| best = best.max(Some(d)),
        );
        best
    }
}

/// The chain-sum Euler characteristic
/// `Σⱼ Σ_{a₀<⋯<aⱼ} (−1)ʲ χ(A(aⱼ₋₁,aⱼ))⋯χ(A(a₀,a₁))`.
pub fn chain_chi(a: &AcyclicTopCategory) -> Rational {
    let mut total = BigInt::zero();
    a.walk_chains(|_| BigInt::one(), |p, x, y| -(p * a.hom_chi(x, y)), |_, p| total += p);
    Rational::from_integer(total)
}

/// The coweighting `v(a) = Σ (−1)ʲ χ(A(aⱼ₋₁,a))⋯χ(A(a₀,a₁))` over chains
/// ending at `a`, certified against the similarity matrix before returning.
pub fn chain_coweighting(a: &AcyclicTopCategory) -> Result<Coweighting, TopCatError> {
    let mut v = vec![BigInt::zero(); a.object_count()];
    a.walk_chains(
        |_| BigInt::one(),
        |p, x, y| -(p * a.hom_chi(x, y)),
        |chain, p| v[*chain.last().unwrap()] += p,
    );
    let cow = Coweighting {
        objects: a.objects.clone(),
        values: v.into_iter().map(Rational::from_integer).collect(),
        unique: true,
    };
    let xi = crate::enriched::similarity_matrix(&a.to_enriched())?;
    if xi.vec_mul(&cow.values).map_err(EnrichedError::from)? != ones(a.object_count()) {
        return Err(TopCatError::CertificateFailed);
    }
    Ok(cow)
}

/// Cell counts per dimension, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellCensus {
    pub counts: Vec<BigUint>,
}

impl CellCensus {
    pub fn euler(&self) -> BigInt {
        CellVector::new(self.counts.clone()).euler()
    }

    /// `dimension → count` for nonzero counts up to `max_dim`.
    pub fn cells(&self, max_dim: Option<usize>) -> BTreeMap<usize, BigUint> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(d, c)| !c.is_zero() && max_dim.is_none_or(|m| *d <= m))
            .map(|(d, c)| (d, c.clone()))
            .collect()
    }
}

/// Cells of the classifying space from the non-degenerate nerve: a chain
/// `a₀ < ⋯ < aⱼ` with a `kᵢ`-cell chosen in each `A(aᵢ₋₁, aᵢ)` contributes one
/// cell of dimension `j + Σkᵢ`.
pub fn nerve_cell_census(a: &AcyclicTopCategory) -> CellCensus {
    let mut total = CellVector::default();
    a.walk_chains(
        |_| CellVector::point(),
        |poly, x, y| {
            let mut shifted = vec![BigUint::zero()];
            shifted.extend(poly.convolve(a.hom_census(x, y)).counts().iter().cloned());
            CellVector::new(shifted)
        },
        |_, poly| total = total.add(poly),
    );
    CellCensus {
        counts: total.counts().to_vec(),
    }
}

/// Alternating sum of the nerve census.
pub fn classifying_chi(a: &AcyclicTopCategory) -> Rational {
    Rational::from_integer(nerve_cell_census(a).euler())
}
