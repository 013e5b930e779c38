//! Finite enriched categories and their Euler characteristic.
//!
//! An [`EnrichedCategory`] is a finite object list with a hom-object for every
//! ordered pair. Measuring every hom-object gives the similarity matrix `ξ`.
//! A weighting is a column vector `w` with `ξw = u`, a coweighting a row
//! vector `v` with `vξ = uᵀ` (`u` all ones). The category admits an Euler
//! characteristic when both exist, and then `χ = Σw = Σv`.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{
    self, invert, ones, solve_left_detailed, solve_right_detailed, LinalgError, Rational, RationalMatrix,
};
use crate::measure::{self, Enrichment, HomObject, MeasureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnrichedError {
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("enrichment mismatch: {0} vs {1}")]
    EnrichmentMismatch(Enrichment, Enrichment),
    #[error("duplicate object {0}")]
    DuplicateObject(String),
    #[error("hom({0},{0}) is empty, so there is no identity")]
    EmptyEndomorphisms(String),
    #[error("hom({0},{1}): {2}")]
    NotMeasurable(String, String, MeasureError),
    #[error("no class size given for object {0}")]
    MissingClassSize(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
}

/// A finite category enriched in `Set`, `Cat` or `Top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnrichedCategory {
    enrichment: Enrichment,
    objects: Vec<String>,
    /// Row-major `n × n`: `homs[a * n + b] = A(a, b)`.
    homs: Vec<HomObject>,
}

impl EnrichedCategory {
    /// Builds a category from a hom-object rule, normalizing and validating
    /// every entry.
    pub fn from_fn(
        enrichment: Enrichment,
        objects: Vec<String>,
        mut hom: impl FnMut(usize, usize) -> HomObject,
    ) -> Result<Self, EnrichedError> {
        let n = objects.len();
        let mut seen = HashSet::new();
        if let Some(dup) = objects.iter().find(|o| !seen.insert(*o)) {
            return Err(EnrichedError::DuplicateObject(dup.clone()));
        }
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let pair_err = |e| EnrichedError::NotMeasurable(objects[a].clone(), objects[b].clone(), e);
                let h = hom(a, b).normalize().map_err(pair_err)?;
                if !enrichment.admits(&h) {
                    return Err(pair_err(MeasureError::VariantNotMeasurable {
                        kind: h.kind(),
                        enrichment,
                    }));
                }
                if a == b && h.is_empty() {
                    return Err(EnrichedError::EmptyEndomorphisms(objects[a].clone()));
                }
                homs.push(h);
            }
        }
        Ok(Self {
            enrichment,
            objects,
            homs,
        })
    }

    /// The category with no objects.
    pub fn empty(enrichment: Enrichment) -> Self {
        Self {
            enrichment,
            objects: Vec::new(),
            homs: Vec::new(),
        }
    }

    /// The unit category `I`: one object whose endomorphism object is `1`.
    pub fn unit(enrichment: Enrichment) -> Self {
        Self {
            enrichment,
            objects: vec!["*".into()],
            homs: vec![enrichment.unit()],
        }
    }

    /// `n` objects, unit endomorphisms, empty homs elsewhere.
    pub fn discrete(enrichment: Enrichment, n: usize) -> Self {
        Self::from_fn(enrichment, (0..n).map(|i| i.to_string()).collect(), |a, b| {
            if a == b {
                enrichment.unit()
            } else {
                HomObject::Empty
            }
        })
        .expect("discrete category")
    }

    pub fn enrichment(&self) -> Enrichment {
        self.enrichment
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == id)
    }

    pub fn hom(&self, a: usize, b: usize) -> &HomObject {
        &self.homs[a * self.objects.len() + b]
    }

    /// The same category with its objects listed in the order `perm`.
    pub fn reordered(&self, perm: &[usize]) -> Result<Self, EnrichedError> {
        let n = self.objects.len();
        let valid = perm.len() == n && perm.iter().collect::<HashSet<_>>().len() == n;
        if !valid || perm.iter().any(|&p| p >= n) {
            return Err(LinalgError::DimensionMismatch("not a permutation of the objects".into()).into());
        }
        Self::from_fn(
            self.enrichment,
            perm.iter().map(|&p| self.objects[p].clone()).collect(),
            |a, b| self.hom(perm[a], perm[b]).clone(),
        )
    }
}

/// A weighting `w` with `ξw = u`, aligned with the category's object order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weighting {
    pub objects: Vec<String>,
    pub values: Vec<Rational>,
    /// `false` when the solution space is positive-dimensional and these are
    /// the canonical values with free variables set to zero.
    pub unique: bool,
}

/// A coweighting `v` with `vξ = uᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coweighting {
    pub objects: Vec<String>,
    pub values: Vec<Rational>,
    pub unique: bool,
}

impl Weighting {
    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn get(&self, object: &str) -> Option<&Rational> {
        self.objects.iter().position(|o| o == object).map(|i| &self.values[i])
    }

    /// Whether `ξw = u` holds exactly for the given category.
    pub fn certifies(&self, a: &EnrichedCategory) -> Result<bool, EnrichedError> {
        if self.objects != a.objects {
            return Ok(false);
        }
        let xi = similarity_matrix(a)?;
        Ok(xi.mul_vec(&self.values)? == ones(a.object_count()))
    }
}

impl Coweighting {
    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    /// Whether `vξ = uᵀ` holds exactly for the given category.
    pub fn certifies(&self, a: &EnrichedCategory) -> Result<bool, EnrichedError> {
        if self.objects != a.objects {
            return Ok(false);
        }
        let xi = similarity_matrix(a)?;
        Ok(xi.vec_mul(&self.values)? == ones(a.object_count()))
    }
}

/// `ξ[a][b] = |A(a, b)|` in object order.
pub fn similarity_matrix(a: &EnrichedCategory) -> Result<RationalMatrix, EnrichedError> {
    let n = a.object_count();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let value = measure::measure(a.hom(i, j), a.enrichment)
                .map_err(|e| EnrichedError::NotMeasurable(a.objects[i].clone(), a.objects[j].clone(), e))?;
            entries.push(value);
        }
    }
    Ok(RationalMatrix::new(n, n, entries)?)
}

pub fn weighting(a: &EnrichedCategory) -> Result<Option<Weighting>, EnrichedError> {
    let xi = similarity_matrix(a)?;
    Ok(solve_right_detailed(&xi, &ones(a.object_count()))?.map(|s| Weighting {
        objects: a.objects.clone(),
        unique: s.is_unique(),
        values: s.values,
    }))
}

pub fn coweighting(a: &EnrichedCategory) -> Result<Option<Coweighting>, EnrichedError> {
    let xi = similarity_matrix(a)?;
    Ok(solve_left_detailed(&xi, &ones(a.object_count()))?.map(|s| Coweighting {
        objects: a.objects.clone(),
        unique: s.is_unique(),
        values: s.values,
    }))
}

/// Euler characteristic, or `None` when the category lacks a weighting or a
/// coweighting. Uses the entry sum of `ξ⁻¹` when `ξ` is invertible.
pub fn euler_characteristic(a: &EnrichedCategory) -> Result<Option<Rational>, EnrichedError> {
    let xi = similarity_matrix(a)?;
    if let Some(inv) = invert(&xi) {
        return Ok(Some(inv.entry_sum()));
    }
    chi_from_matrix_by_solving(&xi)
}

/// Euler characteristic through the weighting and coweighting solves only,
/// never through the inverse.
pub fn euler_characteristic_by_solving(a: &EnrichedCategory) -> Result<Option<Rational>, EnrichedError> {
    chi_from_matrix_by_solving(&similarity_matrix(a)?)
}

fn chi_from_matrix_by_solving(xi: &RationalMatrix) -> Result<Option<Rational>, EnrichedError> {
    let u = ones(xi.rows());
    let w = linalg::solve_right(xi, &u)?;
    let v = linalg::solve_left(xi, &u)?;
    Ok(match (w, v) {
        (Some(w), Some(_)) => Some(w.iter().sum()),
        _ => None,
    })
}

fn same_enrichment(a: &EnrichedCategory, b: &EnrichedCategory) -> Result<Enrichment, EnrichedError> {
    if a.enrichment != b.enrichment {
        return Err(EnrichedError::EnrichmentMismatch(a.enrichment, b.enrichment));
    }
    Ok(a.enrichment)
}

/// `(A ⊗ B)((a₁,b₁),(a₂,b₂)) = A(a₁,a₂) ⊗ B(b₁,b₂)`. Objects are pairs in
/// lexicographic order.
pub fn tensor_category(a: &EnrichedCategory, b: &EnrichedCategory) -> Result<EnrichedCategory, EnrichedError> {
    let e = same_enrichment(a, b)?;
    let nb = b.object_count();
    let objects = a
        .objects
        .iter()
        .flat_map(|x| b.objects.iter().map(move |y| format!("({x},{y})")))
        .collect();
    let mut err = None;
    let out = EnrichedCategory::from_fn(e, objects, |i, j| {
        measure::tensor(a.hom(i / nb, j / nb), b.hom(i % nb, j % nb), e).unwrap_or_else(|x| {
            err.get_or_insert(x);
            HomObject::Empty
        })
    });
    match err {
        Some(x) => Err(x.into()),
        None => out,
    }
}

/// Disjoint union with empty cross homs; `A`'s objects first. Colliding
/// names are prefixed with `l.`/`r.`.
pub fn coproduct_category(a: &EnrichedCategory, b: &EnrichedCategory) -> Result<EnrichedCategory, EnrichedError> {
    let e = same_enrichment(a, b)?;
    let left: HashSet<&String> = a.objects.iter().collect();
    let clash = b.objects.iter().any(|o| left.contains(o));
    let name = |side: &str, o: &String| {
        if clash {
            format!("{side}.{o}")
        } else {
            o.clone()
        }
    };
    let objects = a
        .objects
        .iter()
        .map(|o| name("l", o))
        .chain(b.objects.iter().map(|o| name("r", o)))
        .collect();
    let na = a.object_count();
    EnrichedCategory::from_fn(e, objects, |i, j| match (i < na, j < na) {
        (true, true) => a.hom(i, j).clone(),
        (false, false) => b.hom(i - na, j - na).clone(),
        _ => HomObject::Empty,
    })
}

/// Transfers a weighting on `B` along an object map `A₀ → B₀` induced by an
/// equivalence: `w_A(a) = (C(fa) / C(a))·w_B(fa)`, where `C` counts the
/// objects in a weak-equivalence class.
///
/// The result is a weighting on `A` whenever `w_B` takes equal values on
/// weakly equivalent objects or every fiber of the map has the same size
/// relative to its class; use [`Weighting::certifies`] to check.
pub fn transfer_weighting(
    w_b: &Weighting,
    object_map: &[(String, String)],
    class_size_a: &HashMap<String, u64>,
    class_size_b: &HashMap<String, u64>,
) -> Result<Weighting, EnrichedError> {
    let size = |sizes: &HashMap<String, u64>, o: &String| {
        sizes
            .get(o)
            .copied()
            .filter(|&s| s > 0)
            .ok_or_else(|| EnrichedError::MissingClassSize(o.clone()))
    };
    let mut values = Vec::with_capacity(object_map.len());
    let mut all_singletons = true;
    for (a, fa) in object_map {
        let ca = size(class_size_a, a)?;
        let cfa = size(class_size_b, fa)?;
        all_singletons &= ca == 1;
        let wb = w_b.get(fa).ok_or_else(|| EnrichedError::UnknownObject(fa.clone()))?;
        values.push(linalg::frac(cfa as i64, ca as i64) * wb);
    }
    Ok(Weighting {
        objects: object_map.iter().map(|(a, _)| a.clone()).collect(),
        values,
        unique: w_b.unique && all_singletons,
    })
}

/// Whether every entry of `ξ` is zero off the diagonal and one on it.
pub fn has_identity_similarity(a: &EnrichedCategory) -> Result<bool, EnrichedError> {
    Ok(similarity_matrix(a)?.is_identity())
}

/// Sum of a vector; convenience for reports.
pub fn total(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, v| acc + v)
}
