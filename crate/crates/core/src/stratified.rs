//! Cellular stratified spaces through their face categories.
//!
//! A descriptor records only what the Euler characteristic needs: the faces
//! with their dimensions, the face order, and a cell census for each parameter
//! space `P(λ, μ)`. Attaching maps and the cylindrical-structure axioms are
//! the caller's obligation, as is local polyhedrality, which is what makes
//! [`chi_stratified`] equal the Euler characteristic of the space itself.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::Rational;
use crate::measure::{CellVector, HomObject};
use crate::topcat::{chain_chi, AcyclicTopCategory, TopCatError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StratifiedError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    TopCat(#[from] TopCatError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub dim: usize,
}

/// Faces, the strict order `λ < μ`, and parameter spaces on order pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StratifiedSpaceDescriptor {
    pub faces: Vec<Face>,
    pub order: Vec<(String, String)>,
    pub params: BTreeMap<(String, String), HomObject>,
}

fn invalid(msg: String) -> StratifiedError {
    StratifiedError::InvalidDescriptor(msg)
}

impl StratifiedSpaceDescriptor {
    fn face_index(&self) -> Result<HashMap<&str, usize>, StratifiedError> {
        let mut index = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            if index.insert(f.id.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate face {}", f.id)));
            }
        }
        Ok(index)
    }

    /// Checks dimensions against the order, transitivity, irreflexivity, and
    /// that params sit exactly on order pairs and are nonempty CW data.
    pub fn validate(&self) -> Result<(), StratifiedError> {
        let index = self.face_index()?;
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| invalid(format!("unknown face {id}")))
        };
        let mut less = BTreeSet::new();
        for (l, m) in &self.order {
            let (a, b) = (lookup(l)?, lookup(m)?);
            if a == b {
                return Err(invalid(format!("{l} < {l} makes the order reflexive")));
            }
            if self.faces[a].dim >= self.faces[b].dim {
                return Err(invalid(format!(
                    "{l} < {m} but dim {} is not below dim {}",
                    self.faces[a].dim, self.faces[b].dim
                )));
            }
            less.insert((a, b));
        }
        for &(a, b) in &less {
            for &(b2, c) in less.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                if !less.contains(&(a, c)) {
                    return Err(invalid(format!(
                        "order is not transitive: {} < {} < {} but not {} < {}",
                        self.faces[a].id, self.faces[b].id, self.faces[c].id, self.faces[a].id, self.faces[c].id
                    )));
                }
            }
        }
        for ((l, m), p) in &self.params {
            let pair = (lookup(l)?, lookup(m)?);
            if !less.contains(&pair) {
                return Err(invalid(format!("param {l}<{m} is not on an order pair")));
            }
            if p.is_empty() {
                return Err(invalid(format!("param {l}<{m} is empty")));
            }
            if let HomObject::FinCat(_) = p {
                return Err(invalid(format!("param {l}<{m} is not a CW complex")));
            }
        }
        if let Some(&(a, b)) = less.iter().find(|&&(a, b)| {
            !self
                .params
                .contains_key(&(self.faces[a].id.clone(), self.faces[b].id.clone()))
        }) {
            return Err(invalid(format!(
                "order pair {}<{} has no param",
                self.faces[a].id, self.faces[b].id
            )));
        }
        Ok(())
    }

    /// Naive alternating count `Σ (−1)^dim` over faces, which is χ(X) only
    /// when every cell is closed.
    pub fn naive_cell_chi(&self) -> BigInt {
        self.faces
            .iter()
            .fold(BigInt::zero(), |acc, f| if f.dim % 2 == 0 { acc + 1 } else { acc - 1 })
    }
}

/// The face category `C(X)`: faces as objects, `C(X)(λ, μ) = P(λ, μ)`.
pub fn face_category(x: &StratifiedSpaceDescriptor) -> Result<AcyclicTopCategory, StratifiedError> {
    x.validate()?;
    let objects: Vec<String> = x.faces.iter().map(|f| f.id.clone()).collect();
    let params = &x.params;
    Ok(AcyclicTopCategory::from_fn(objects.clone(), |a, b| {
        params
            .get(&(objects[a].clone(), objects[b].clone()))
            .cloned()
            .unwrap_or(HomObject::Empty)
    })?)
}

/// Euler characteristic of the face category, via the chain formula.
pub fn chi_stratified(x: &StratifiedSpaceDescriptor) -> Result<Rational, StratifiedError> {
    Ok(chain_chi(&face_category(x)?))
}

fn face(id: impl Into<String>, dim: usize) -> Face {
    Face { id: id.into(), dim }
}

fn sphere(k: usize) -> HomObject {
    HomObject::connected_cw(CellVector::sphere(k)).expect("spheres are connected")
}

/// `S^{k}` for `k ≥ −1`, where `S^{−1}` is empty.
fn sphere_below(n: usize) -> HomObject {
    match n {
        0 => HomObject::Empty,
        1 => HomObject::cw(vec![CellVector::point(), CellVector::point()]).expect("two points"),
        _ => sphere(n - 1),
    }
}

/// `ℂPⁿ = e⁰ ∪ e² ∪ ⋯ ∪ e²ⁿ`, faces `e0, e2, …`, every parameter space `S¹`.
pub fn gen_cpn(n: usize) -> StratifiedSpaceDescriptor {
    let faces: Vec<Face> = (0..=n).map(|i| face(format!("e{}", 2 * i), 2 * i)).collect();
    let mut order = Vec::new();
    let mut params = BTreeMap::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let pair = (faces[i].id.clone(), faces[j].id.clone());
            order.push(pair.clone());
            params.insert(pair, sphere(1));
        }
    }
    StratifiedSpaceDescriptor { faces, order, params }
}

/// `Sⁿ × Sᵐ − {∗}` as `a ∪ b ∪ top` with `a` of dimension `m`, `b` of
/// dimension `n` and the top cell of dimension `n + m`; `P(a, top) = S^{n−1}`
/// and `P(b, top) = S^{m−1}`. `S⁰` is two points.
pub fn gen_sphere_product_minus_point(n: usize, m: usize) -> Result<StratifiedSpaceDescriptor, StratifiedError> {
    if n == 0 || m == 0 {
        return Err(invalid(format!("sphere product needs n, m ≥ 1, got {n}, {m}")));
    }
    let faces = vec![face("a", m), face("b", n), face("top", n + m)];
    let order = vec![
        ("a".to_string(), "top".to_string()),
        ("b".to_string(), "top".to_string()),
    ];
    let params = BTreeMap::from([(order[0].clone(), sphere_below(n)), (order[1].clone(), sphere_below(m))]);
    Ok(StratifiedSpaceDescriptor { faces, order, params })
}

/// `(0, 1] = {1} ∪ (0, 1)`: the open 1-cell has only one endpoint.
pub fn gen_half_open_interval() -> StratifiedSpaceDescriptor {
    let pair = ("v".to_string(), "e".to_string());
    StratifiedSpaceDescriptor {
        faces: vec![face("v", 0), face("e", 1)],
        order: vec![pair.clone()],
        params: BTreeMap::from([(pair, HomObject::point())]),
    }
}

fn subset_id(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Face poset of `Δⁿ`: nonempty vertex subsets ordered by inclusion, point
/// parameter spaces. Faces are listed by dimension, then lexicographically.
pub fn gen_simplex(n: usize) -> StratifiedSpaceDescriptor {
    simplex_faces(n, false)
}

/// Proper faces of `Δⁿ`, a closed complex homeomorphic to `S^{n−1}`.
pub fn gen_simplex_boundary(n: usize) -> StratifiedSpaceDescriptor {
    simplex_faces(n, true)
}

fn simplex_faces(n: usize, boundary: bool) -> StratifiedSpaceDescriptor {
    let full: u64 = (1u64 << (n + 1)) - 1;
    let mut subsets: Vec<Vec<usize>> = (1..=full)
        .filter(|&mask| !(boundary && mask == full))
        .map(|mask| (0..=n).filter(|v| mask >> v & 1 == 1).collect())
        .collect();
    subsets.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let faces = subsets.iter().map(|s| face(subset_id(s), s.len() - 1)).collect();
    let mut order = Vec::new();
    let mut params = BTreeMap::new();
    for s in &subsets {
        for t in &subsets {
            if s.len() < t.len() && s.iter().all(|v| t.contains(v)) {
                let pair = (subset_id(s), subset_id(t));
                order.push(pair.clone());
                params.insert(pair, HomObject::point());
            }
        }
    }
    StratifiedSpaceDescriptor { faces, order, params }
}
