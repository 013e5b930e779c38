//! JSON formats for every input and output document.
//!
//! Inputs are read in two steps: serde checks the shape (so malformed input
//! reports the JSON path it failed at), then the raw form is resolved against
//! object and morphism names. Outputs are built as [`Value`]s with a fixed key
//! order, so identical inputs give byte-identical output.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::enriched::{Coweighting, EnrichedCategory, Weighting};
use crate::fincat::{CategoryData, FiniteCategory, Functor, FunctorData, Morphism};
use crate::linalg::{Rational, RationalMatrix};
use crate::measure::{CellVector, Enrichment, HomObject};
use crate::stratified::{Face, StratifiedSpaceDescriptor};
use crate::topcat::{AcyclicTopCategory, CellCensus};

/// Input rejected at `path` (`"."` is the document root).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> JsonError {
    JsonError {
        path: path.into(),
        message: message.into(),
    }
}

fn join(at: &str, field: &str) -> String {
    match (at, field.starts_with('[')) {
        ("" | ".", _) => field.to_string(),
        (_, true) => format!("{at}{field}"),
        _ => format!("{at}.{field}"),
    }
}

fn shape<T: DeserializeOwned>(value: Value, at: &str) -> Result<T, JsonError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." { at.to_string() } else { join(at, &inner) };
        err(
            if path.is_empty() { ".".into() } else { path },
            e.into_inner().to_string(),
        )
    })
}

/// Parses JSON text, reporting syntax errors by line and column.
pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| err(".", e.to_string()))
}

/// Splits `key` at an occurrence of `sep` whose two sides both satisfy
/// `known`; exactly one such split must exist.
fn split_key<'k>(
    key: &'k str,
    sep: &str,
    known: impl Fn(&str) -> bool,
    path: &str,
) -> Result<(&'k str, &'k str), JsonError> {
    let splits: Vec<(&str, &str)> = key
        .match_indices(sep)
        .map(|(i, _)| (&key[..i], &key[i + sep.len()..]))
        .filter(|(l, r)| known(l) && known(r))
        .collect();
    match splits.as_slice() {
        [one] => Ok(*one),
        [] => Err(err(
            path,
            format!("key {key:?} is not of the form x{sep}y with known names"),
        )),
        _ => Err(err(path, format!("key {key:?} splits ambiguously at {sep:?}"))),
    }
}

fn index_of(names: &[String]) -> HashMap<&str, usize> {
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        index.entry(n.as_str()).or_insert(i);
    }
    index
}

// Raw shapes ---------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawHom {
    Empty,
    Finset { n: u64 },
    Cw { components: Vec<Vec<u64>> },
    Fincat { cat: Value },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCategory {
    objects: Vec<String>,
    morphisms: Vec<RawMorphism>,
    #[serde(default)]
    identity: BTreeMap<String, String>,
    #[serde(default)]
    compose: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunctor {
    source: Value,
    target: Value,
    objects: BTreeMap<String, String>,
    morphisms: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnriched {
    enrichment: Enrichment,
    objects: Vec<String>,
    #[serde(default)]
    hom: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAcyclic {
    objects: Vec<String>,
    #[serde(default)]
    hom: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFace {
    id: String,
    dim: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    faces: Vec<RawFace>,
    #[serde(default)]
    order: Vec<(String, String)>,
    #[serde(default)]
    params: BTreeMap<String, Value>,
}

// Readers ------------------------------------------------------------------

pub fn hom_from_value(value: Value, at: &str) -> Result<HomObject, JsonError> {
    match shape::<RawHom>(value.clone(), at)? {
        RawHom::Empty => Ok(HomObject::Empty),
        RawHom::Finset { n } => Ok(HomObject::finset(n)),
        RawHom::Cw { components } => {
            let cs = components.iter().map(|c| CellVector::from_counts(c)).collect();
            HomObject::cw(cs).map_err(|e| err(join(at, "components"), e.to_string()))
        }
        RawHom::Fincat { cat } => Ok(HomObject::fincat(category_from_value(cat, &join(at, "cat"))?)),
    }
}

pub fn category_from_value(value: Value, at: &str) -> Result<FiniteCategory, JsonError> {
    let raw: RawCategory = shape(value, at)?;
    let objects = index_of(&raw.objects);
    let mut morphisms = Vec::with_capacity(raw.morphisms.len());
    for (i, m) in raw.morphisms.iter().enumerate() {
        let end = |name: &str, field: &str| {
            objects.get(name).copied().ok_or_else(|| {
                err(
                    join(at, &format!("morphisms[{i}].{field}")),
                    format!("unknown object {name:?}"),
                )
            })
        };
        morphisms.push(Morphism {
            id: m.id.clone(),
            src: end(&m.src, "src")?,
            tgt: end(&m.tgt, "tgt")?,
        });
    }
    let ids: Vec<String> = raw.morphisms.iter().map(|m| m.id.clone()).collect();
    let arrows = index_of(&ids);
    let arrow = |name: &str, path: String| {
        arrows
            .get(name)
            .copied()
            .ok_or_else(|| err(path, format!("unknown morphism {name:?}")))
    };
    let mut identity = vec![None; raw.objects.len()];
    for (o, f) in &raw.identity {
        let path = join(at, &format!("identity.{o}"));
        let &k = objects
            .get(o.as_str())
            .ok_or_else(|| err(path.clone(), format!("unknown object {o:?}")))?;
        identity[k] = Some(arrow(f, path)?);
    }
    let mut compose = BTreeMap::new();
    for (key, h) in &raw.compose {
        let path = join(at, &format!("compose.{key}"));
        let (g, f) = split_key(key, "∘", |s| arrows.contains_key(s), &path)?;
        compose.insert((arrows[g], arrows[f]), arrow(h, path)?);
    }
    let data = CategoryData {
        objects: raw.objects,
        morphisms,
        identity,
        compose,
    };
    FiniteCategory::try_from(data).map_err(|e| err(if at.is_empty() { "." } else { at }, e.to_string()))
}

pub fn functor_from_value(value: Value, at: &str) -> Result<Functor, JsonError> {
    let raw: RawFunctor = shape(value, at)?;
    let source = category_from_value(raw.source, &join(at, "source"))?;
    let target = category_from_value(raw.target, &join(at, "target"))?;
    let map = |from: &[String], to: &dyn Fn(&str) -> Option<usize>, table: &BTreeMap<String, String>, field: &str| {
        from.iter()
            .map(|x| {
                let path = join(at, &format!("{field}.{x}"));
                let y = table.get(x).ok_or_else(|| err(path.clone(), "unmapped"))?;
                to(y).ok_or_else(|| err(path, format!("unknown target name {y:?}")))
            })
            .collect::<Result<Vec<usize>, JsonError>>()
    };
    let src_morphisms: Vec<String> = source.morphisms().iter().map(|m| m.id.clone()).collect();
    for (table, names, field) in [
        (&raw.objects, source.objects().to_vec(), "objects"),
        (&raw.morphisms, src_morphisms.clone(), "morphisms"),
    ] {
        if let Some(extra) = table.keys().find(|k| !names.contains(k)) {
            return Err(err(join(at, &format!("{field}.{extra}")), "not in the source"));
        }
    }
    let data = FunctorData {
        object_map: map(source.objects(), &|y| target.object_index(y), &raw.objects, "objects")?,
        morphism_map: map(
            &src_morphisms,
            &|y| target.morphism_index(y),
            &raw.morphisms,
            "morphisms",
        )?,
    };
    Functor::new(source, target, data).map_err(|e| err(if at.is_empty() { "." } else { at }, e.to_string()))
}

/// Resolves `"a->b"` hom keys; missing pairs default to `unit` on the
/// diagonal and empty elsewhere.
fn hom_table(
    objects: &[String],
    hom: BTreeMap<String, Value>,
    unit: HomObject,
    at: &str,
) -> Result<Vec<HomObject>, JsonError> {
    let index = index_of(objects);
    let n = objects.len();
    let mut homs: Vec<HomObject> = (0..n * n)
        .map(|k| if k / n == k % n { unit.clone() } else { HomObject::Empty })
        .collect();
    for (key, value) in hom {
        let path = join(at, &format!("hom.{key}"));
        let (a, b) = split_key(&key, "->", |s| index.contains_key(s), &path)?;
        homs[index[a] * n + index[b]] = hom_from_value(value, &path)?;
    }
    Ok(homs)
}

pub fn enriched_from_value(value: Value, at: &str) -> Result<EnrichedCategory, JsonError> {
    let raw: RawEnriched = shape(value, at)?;
    let n = raw.objects.len();
    let homs = hom_table(&raw.objects, raw.hom, raw.enrichment.unit(), at)?;
    EnrichedCategory::from_fn(raw.enrichment, raw.objects, |a, b| homs[a * n + b].clone())
        .map_err(|e| err(if at.is_empty() { "." } else { at }, e.to_string()))
}

pub fn acyclic_from_value(value: Value, at: &str) -> Result<AcyclicTopCategory, JsonError> {
    let raw: RawAcyclic = shape(value, at)?;
    let n = raw.objects.len();
    let homs = hom_table(&raw.objects, raw.hom, HomObject::point(), at)?;
    let whole = if at.is_empty() { "." } else { at };
    let e = EnrichedCategory::from_fn(Enrichment::Top, raw.objects, |a, b| homs[a * n + b].clone())
        .map_err(|e| err(whole, e.to_string()))?;
    AcyclicTopCategory::from_enriched(&e).map_err(|e| err(whole, e.to_string()))
}

/// Reads a descriptor's shape and names; the stratification invariants are
/// checked later by [`StratifiedSpaceDescriptor::validate`].
pub fn descriptor_from_value(value: Value, at: &str) -> Result<StratifiedSpaceDescriptor, JsonError> {
    let raw: RawDescriptor = shape(value, at)?;
    let faces: Vec<Face> = raw.faces.into_iter().map(|f| Face { id: f.id, dim: f.dim }).collect();
    let ids: Vec<String> = faces.iter().map(|f| f.id.clone()).collect();
    let index = index_of(&ids);
    let mut params = BTreeMap::new();
    for (key, value) in raw.params {
        let path = join(at, &format!("params.{key}"));
        let (l, m) = split_key(&key, "<", |s| index.contains_key(s), &path)?;
        params.insert((l.to_string(), m.to_string()), hom_from_value(value, &path)?);
    }
    Ok(StratifiedSpaceDescriptor {
        faces,
        order: raw.order,
        params,
    })
}

/// Any input document, told apart by its keys.
#[derive(Debug, Clone)]
pub enum Document {
    Descriptor(StratifiedSpaceDescriptor),
    Functor(Functor),
    Enriched(EnrichedCategory),
    Category(FiniteCategory),
    Acyclic(AcyclicTopCategory),
    Pair(Box<Document>, Box<Document>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Descriptor(_) => "descriptor",
            Self::Functor(_) => "functor",
            Self::Enriched(_) => "enriched-category",
            Self::Category(_) => "finite-category",
            Self::Acyclic(_) => "acyclic-category",
            Self::Pair(..) => "pair",
        }
    }
}

/// Recognizes descriptors (`faces`), functors (`source`/`target`), pairs
/// (`left`/`right`), enriched categories (`enrichment`), finite categories
/// (`morphisms`) and acyclic topological categories (`objects` only).
pub fn document_from_value(value: Value, at: &str) -> Result<Document, JsonError> {
    let whole = if at.is_empty() { "." } else { at };
    let Some(obj) = value.as_object() else {
        return Err(err(whole, "expected a JSON object"));
    };
    let has = |k: &str| obj.contains_key(k);
    if has("faces") {
        descriptor_from_value(value, at).map(Document::Descriptor)
    } else if has("source") || has("target") {
        functor_from_value(value, at).map(Document::Functor)
    } else if has("left") || has("right") {
        let mut obj = obj.clone();
        let mut side = |k: &str| {
            obj.remove(k)
                .ok_or_else(|| err(whole, format!("missing field `{k}`")))
                .and_then(|v| document_from_value(v, &join(at, k)))
        };
        let (l, r) = (side("left")?, side("right")?);
        if let Some(extra) = obj.keys().next() {
            return Err(err(join(at, extra), "unknown field"));
        }
        Ok(Document::Pair(Box::new(l), Box::new(r)))
    } else if has("enrichment") {
        enriched_from_value(value, at).map(Document::Enriched)
    } else if has("morphisms") {
        category_from_value(value, at).map(Document::Category)
    } else if has("objects") {
        acyclic_from_value(value, at).map(Document::Acyclic)
    } else {
        Err(err(
            whole,
            "unrecognized document: expected faces, source/target, left/right, enrichment, morphisms or objects",
        ))
    }
}

pub fn parse_document(text: &str) -> Result<Document, JsonError> {
    document_from_value(parse_value(text)?, "")
}

// Writers ------------------------------------------------------------------

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational).collect())
}

pub fn matrix(m: &RationalMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| rationals(m.row(i))).collect())
}

fn count(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(k) => Value::from(k),
        None => Value::String(n.to_string()),
    }
}

pub fn hom(h: &HomObject) -> Value {
    match h {
        HomObject::Empty => json!({"kind": "empty"}),
        HomObject::FinSet(n) => json!({"kind": "finset", "n": count(n)}),
        HomObject::Cw(cs) => json!({
            "kind": "cw",
            "components": cs.iter().map(|c| c.counts().iter().map(count).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
        HomObject::FinCat(c) => json!({"kind": "fincat", "cat": category(c)}),
    }
}

pub fn category(c: &FiniteCategory) -> Value {
    let data = c.to_data();
    let name = |f: usize| data.morphisms[f].id.clone();
    let identity: Map<String, Value> = data
        .objects
        .iter()
        .zip(&data.identity)
        .map(|(o, f)| (o.clone(), Value::String(name(f.expect("validated")))))
        .collect();
    let compose: Map<String, Value> = data
        .compose
        .iter()
        .map(|(&(g, f), &h)| (format!("{}∘{}", name(g), name(f)), Value::String(name(h))))
        .collect();
    json!({
        "objects": data.objects,
        "morphisms": data.morphisms.iter().map(|m| json!({
            "id": m.id,
            "src": data.objects[m.src],
            "tgt": data.objects[m.tgt],
        })).collect::<Vec<_>>(),
        "identity": identity,
        "compose": compose,
    })
}

pub fn functor(f: &Functor) -> Value {
    let (s, t) = (f.source(), f.target());
    let objects: Map<String, Value> = (0..s.object_count())
        .map(|a| {
            (
                s.objects()[a].clone(),
                Value::String(t.objects()[f.on_object(a)].clone()),
            )
        })
        .collect();
    let morphisms: Map<String, Value> = (0..s.morphism_count())
        .map(|m| {
            (
                s.morphisms()[m].id.clone(),
                Value::String(t.morphisms()[f.on_morphism(m)].id.clone()),
            )
        })
        .collect();
    json!({
        "source": category(s),
        "target": category(t),
        "objects": objects,
        "morphisms": morphisms,
    })
}

/// Hom entries that differ from the defaults (unit on the diagonal, empty
/// elsewhere).
fn hom_entries(objects: &[String], get: impl Fn(usize, usize) -> HomObject, unit: &HomObject) -> Map<String, Value> {
    let n = objects.len();
    let mut out = Map::new();
    for a in 0..n {
        for b in 0..n {
            let h = get(a, b);
            let default = if a == b { h == *unit } else { h.is_empty() };
            if !default {
                out.insert(format!("{}->{}", objects[a], objects[b]), hom(&h));
            }
        }
    }
    out
}

pub fn enriched(c: &EnrichedCategory) -> Value {
    let unit = c.enrichment().unit();
    json!({
        "enrichment": c.enrichment(),
        "objects": c.objects(),
        "hom": hom_entries(c.objects(), |a, b| c.hom(a, b).clone(), &unit),
    })
}

pub fn acyclic(c: &AcyclicTopCategory) -> Value {
    json!({
        "objects": c.objects(),
        "hom": hom_entries(c.objects(), |a, b| c.hom(a, b).clone(), &HomObject::point()),
    })
}

pub fn descriptor(x: &StratifiedSpaceDescriptor) -> Value {
    let params: Map<String, Value> = x
        .params
        .iter()
        .map(|((l, m), p)| (format!("{l}<{m}"), hom(p)))
        .collect();
    json!({
        "faces": x.faces.iter().map(|f| json!({"id": f.id, "dim": f.dim})).collect::<Vec<_>>(),
        "order": x.order.iter().map(|(l, m)| json!([l, m])).collect::<Vec<_>>(),
        "params": params,
    })
}

pub fn document(d: &Document) -> Value {
    match d {
        Document::Descriptor(x) => descriptor(x),
        Document::Functor(f) => functor(f),
        Document::Enriched(c) => enriched(c),
        Document::Category(c) => category(c),
        Document::Acyclic(c) => acyclic(c),
        Document::Pair(l, r) => json!({"left": document(l), "right": document(r)}),
    }
}

fn labelled(objects: &[String], values: &[Rational]) -> Value {
    Value::Object(
        objects
            .iter()
            .zip(values)
            .map(|(o, v)| (o.clone(), rational(v)))
            .collect(),
    )
}

pub fn weighting(w: &Weighting) -> Value {
    json!({"values": labelled(&w.objects, &w.values), "unique": w.unique, "total": rational(&w.total())})
}

pub fn coweighting(v: &Coweighting) -> Value {
    json!({"values": labelled(&v.objects, &v.values), "unique": v.unique, "total": rational(&v.total())})
}

/// `{"cells":{"0":2,"1":1},"chi":"1"}`, cells capped at `max_dim`; χ is
/// always over the full census.
pub fn census(c: &CellCensus, max_dim: Option<usize>) -> Value {
    let cells: Map<String, Value> = c
        .cells(max_dim)
        .iter()
        .map(|(d, n)| (d.to_string(), count(n)))
        .collect();
    json!({"cells": cells, "chi": c.euler().to_string()})
}
