//! File formats. Elements are 1-based (or labels, where a matroid has
//! them) and rationals are `"p/q"` strings or integers.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use poslab::matroid::{named, transversal_matroid, uniform, SetSystem};
use poslab::tropical::{FlagChain, Puiseux, PuiseuxPoly, WeightVector};
use poslab::{BitSet, Convention, GroundSet, Matroid, MultiPoly, Rational, RationalMatrix, TropicalValue};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Where an input came from and the SHA-256 of its bytes.
#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub role: String,
    pub source: String,
    pub sha256: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Reads `path` and records its digest.
fn read_source(role: &str, path: &str) -> Result<(String, InputDigest)> {
    let text = std::fs::read_to_string(Path::new(path)).with_context(|| format!("cannot read {role} file {path}"))?;
    let digest = InputDigest { role: role.into(), source: path.into(), sha256: sha256_hex(text.as_bytes()) };
    Ok((text, digest))
}

/// An element given as a 1-based number or a label.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Element {
    Index(usize),
    Label(String),
}

fn resolve(ground: &GroundSet, set: &[Element]) -> Result<BitSet> {
    let mut out = BitSet::EMPTY;
    for e in set {
        let idx = match e {
            Element::Index(i) => {
                ensure!(*i >= 1 && *i <= ground.len(), "element {i} outside 1..={}", ground.len());
                i - 1
            }
            Element::Label(l) => ground.index_of(l).with_context(|| format!("unknown element `{l}`"))?,
        };
        ensure!(!out.contains(idx), "element {} repeated in a set", ground.label(idx));
        out = out.insert(idx);
    }
    Ok(out)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum MatroidFile {
    Family(FamilyFile),
    Explicit { n: usize, labels: Option<Vec<String>>, rank: usize, bases: Vec<Vec<Element>> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
enum FamilyFile {
    Uniform { k: usize, n: usize },
    Transversal { n: usize, labels: Option<Vec<String>>, sets: Vec<Vec<Element>>, rank: Option<usize> },
    Named { name: String },
}

/// A matroid input before the exchange axiom is checked.
pub struct RawMatroid {
    pub ground: GroundSet,
    pub rank: usize,
    pub sets: Vec<BitSet>,
    /// Already a matroid (built from a family or the corpus).
    pub built: Option<Matroid>,
}

impl RawMatroid {
    pub fn into_matroid(self) -> Result<Matroid> {
        match self.built {
            Some(m) => Ok(m),
            None => Ok(poslab::matroid::matroid_from_bases(self.ground, self.rank, self.sets)?),
        }
    }
}

fn ground(n: usize, labels: Option<Vec<String>>) -> Result<GroundSet> {
    match labels {
        Some(l) => {
            ensure!(l.len() == n, "{} labels for {n} elements", l.len());
            Ok(GroundSet::with_labels(l)?)
        }
        None => Ok(GroundSet::new(n)?),
    }
}

fn parse_matroid(value: serde_json::Value) -> Result<RawMatroid> {
    let file: MatroidFile = serde_json::from_value(value).context("not a matroid description")?;
    let built = match file {
        MatroidFile::Explicit { n, labels, rank, bases } => {
            let ground = ground(n, labels)?;
            let sets = bases.iter().map(|b| resolve(&ground, b)).collect::<Result<Vec<_>>>()?;
            return Ok(RawMatroid { ground, rank, sets, built: None });
        }
        MatroidFile::Family(FamilyFile::Uniform { k, n }) => uniform(k, n)?,
        MatroidFile::Family(FamilyFile::Named { name }) => named(&name)?,
        MatroidFile::Family(FamilyFile::Transversal { n, labels, sets, rank }) => {
            let ground = ground(n, labels)?;
            let sets = sets.iter().map(|s| resolve(&ground, s)).collect::<Result<Vec<_>>>()?;
            transversal_matroid(&SetSystem::new(ground, sets)?, rank)?
        }
    };
    Ok(RawMatroid {
        ground: built.ground().clone(),
        rank: built.rank(),
        sets: built.bases().to_vec(),
        built: Some(built),
    })
}

/// `--matroid` takes a JSON file, or a corpus name (`fano`, `vamos`,
/// `choe-wagner-L`, `uniform-k-n`) when no such file exists.
pub fn load_matroid(arg: &str) -> Result<(RawMatroid, InputDigest)> {
    if !Path::new(arg).exists() {
        if let Ok(m) = named(arg) {
            let digest = InputDigest {
                role: "matroid".into(),
                source: format!("corpus:{arg}"),
                sha256: sha256_hex(arg.as_bytes()),
            };
            let raw =
                RawMatroid { ground: m.ground().clone(), rank: m.rank(), sets: m.bases().to_vec(), built: Some(m) };
            return Ok((raw, digest));
        }
    }
    let (text, digest) = read_source("matroid", arg)?;
    let value = serde_json::from_str(&text).with_context(|| format!("{arg} is not valid JSON"))?;
    Ok((parse_matroid(value)?, digest))
}

/// A coefficient: a rational, or a Puiseux sum `[{"ord", "coeff"}]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum CoeffFile {
    Rational(Rational),
    Puiseux(Vec<PuiseuxTerm>),
}

#[derive(Debug, Clone, Deserialize)]
struct PuiseuxTerm {
    ord: Rational,
    coeff: Rational,
}

#[derive(Debug, Clone, Deserialize)]
struct TermFile {
    exp: Vec<u32>,
    coeff: CoeffFile,
}

#[derive(Debug, Clone, Deserialize)]
struct PolyFile {
    vars: usize,
    terms: Vec<TermFile>,
}

pub enum LoadedPoly {
    Rational(MultiPoly),
    Puiseux(PuiseuxPoly),
}

pub fn load_poly(path: &str) -> Result<(LoadedPoly, InputDigest)> {
    let (text, digest) = read_source("polynomial", path)?;
    let file: PolyFile = serde_json::from_str(&text).with_context(|| format!("{path} is not a polynomial file"))?;
    let puiseux = file.terms.iter().any(|t| matches!(t.coeff, CoeffFile::Puiseux(_)));
    let poly = if puiseux {
        let terms = file.terms.into_iter().map(|t| {
            let c = match t.coeff {
                CoeffFile::Rational(r) => Puiseux::constant(r),
                CoeffFile::Puiseux(ts) => Puiseux::new(ts.into_iter().map(|x| (x.ord, x.coeff))),
            };
            (t.exp, c)
        });
        LoadedPoly::Puiseux(PuiseuxPoly::from_terms(file.vars, terms)?)
    } else {
        let terms = file.terms.into_iter().map(|t| match t.coeff {
            CoeffFile::Rational(r) => (t.exp, r),
            CoeffFile::Puiseux(_) => unreachable!("checked above"),
        });
        LoadedPoly::Rational(MultiPoly::from_terms(file.vars, terms)?)
    };
    Ok((poly, digest))
}

#[derive(Debug, Clone, Deserialize)]
struct EntryFile {
    set: Vec<Element>,
    value: TropicalValue,
}

#[derive(Debug, Clone, Deserialize)]
struct WeightsFile {
    convention: Convention,
    n: Option<usize>,
    labels: Option<Vec<String>>,
    entries: Vec<EntryFile>,
}

/// Ground set of a weight vector: the matroid's if given, else the file's
/// `n`, else the largest element mentioned.
fn parse_weights(value: serde_json::Value, matroid: Option<&Matroid>) -> Result<WeightVector> {
    let file: WeightsFile = serde_json::from_value(value).context("not a weights description")?;
    let g = match (matroid, file.n) {
        (Some(m), _) => m.ground().clone(),
        (None, Some(n)) => ground(n, file.labels)?,
        (None, None) => {
            let n = file
                .entries
                .iter()
                .flat_map(|e| &e.set)
                .map(|e| match e {
                    Element::Index(i) => Ok(*i),
                    Element::Label(l) => bail!("labels need \"n\" and \"labels\" (found `{l}`)"),
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .context("weights file has no elements")?;
            GroundSet::new(n)?
        }
    };
    let entries =
        file.entries.iter().map(|e| Ok((resolve(&g, &e.set)?, e.value.clone()))).collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(g, entries, file.convention)?)
}

pub fn load_weights(path: &str, matroid: Option<&Matroid>) -> Result<(WeightVector, InputDigest)> {
    let (text, digest) = read_source("weights", path)?;
    let value = serde_json::from_str(&text).with_context(|| format!("{path} is not valid JSON"))?;
    Ok((parse_weights(value, matroid)?, digest))
}

#[derive(Debug, Clone, Deserialize)]
struct ConstituentFile {
    matroid: Option<serde_json::Value>,
    weights: serde_json::Value,
}

#[derive(Debug, Clone, Deserialize)]
struct ChainFile {
    constituents: Vec<ConstituentFile>,
}

pub fn load_chain(path: &str) -> Result<(FlagChain, InputDigest)> {
    let (text, digest) = read_source("chain", path)?;
    let file: ChainFile = serde_json::from_str(&text).with_context(|| format!("{path} is not a chain file"))?;
    let mut constituents = Vec::new();
    for (k, c) in file.constituents.into_iter().enumerate() {
        let m = match c.matroid {
            Some(serde_json::Value::String(name)) => Some(named(&name)?),
            Some(v) => Some(parse_matroid(v)?.into_matroid()?),
            None => None,
        };
        let w = parse_weights(c.weights, m.as_ref()).with_context(|| format!("constituent {}", k + 1))?;
        if let Some(m) = &m {
            ensure!(w.matroid() == m, "constituent {}: weights are not supported on the bases of its matroid", k + 1);
        }
        constituents.push(w);
    }
    Ok((FlagChain::new(constituents)?, digest))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Rows(Vec<Vec<Rational>>),
    Object { rows: Vec<Vec<Rational>> },
}

pub fn load_matrix(path: &str) -> Result<(RationalMatrix, InputDigest)> {
    let (text, digest) = read_source("matrix", path)?;
    let file: MatrixFile = serde_json::from_str(&text).with_context(|| format!("{path} is not a matrix file"))?;
    let rows = match file {
        MatrixFile::Rows(r) | MatrixFile::Object { rows: r } => r,
    };
    Ok((RationalMatrix::new(rows)?, digest))
}

/// `"1,1,0"` or `"1 1/2 0"`.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    text.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Rational>().map_err(|e| anyhow::anyhow!("bad rational `{s}`: {}", e.0)))
        .collect()
}
