//! Root systems: the finite catalog and truncated affine / toroidal extensions.

mod catalog;
mod lattice;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use catalog::Family;
pub use lattice::{build_affine, build_toroidal};

use crate::error::{Error, Result};
use crate::exactlin::{AmbientSpace, Covector, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub id: usize,
    #[serde(rename = "coords")]
    pub vec: Vector,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Finite,
    Affine { base: String, window: u32 },
    Toroidal { base: String, lattice_rank: usize, window: u32 },
}

/// Position of a root of an affine or toroidal system: `real + gamma` with
/// `real` a base root id (or none for imaginary roots).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeCoord {
    pub real: Option<usize>,
    pub gamma: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    kind: Kind,
    space: AmbientSpace,
    roots: Vec<Root>,
    imaginary_gens: Vec<Vector>,
    standard_positive: Option<Vec<usize>>,
    base: Option<Arc<RootSystem>>,
    lattice: Vec<LatticeCoord>,
    index: HashMap<Vector, usize>,
    neg: Vec<usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.kind == other.kind
            && self.space == other.space
            && self.roots == other.roots
            && self.imaginary_gens == other.imaginary_gens
            && self.standard_positive == other.standard_positive
    }
}

impl RootSystem {
    /// Builds a catalog system such as `A2`, `G2`, `psl(3|3)` or `H(10)`.
    pub fn finite(family: Family) -> Result<RootSystem> {
        let raw = family.raw()?;
        let space = AmbientSpace::with_generators(raw.generators, raw.relations)?;
        let mut reps: Vec<(Vector, Parity, Vec<Scalar>)> = Vec::with_capacity(raw.roots.len());
        for (r, parity) in raw.roots {
            let v = space.project(&r)?;
            reps.push((v, parity, r));
        }
        let sys = Self::assemble(
            family.to_string(),
            Kind::Finite,
            space,
            reps.iter().map(|(v, p, _)| (v.clone(), *p)).collect(),
            Vec::new(),
            None,
        )?;
        let standard = if raw.ships_positive {
            sys.functional_positive_system(&reps)
        } else {
            None
        };
        Ok(RootSystem {
            standard_positive: standard,
            ..sys
        })
    }

    /// A finite system from explicit canonical vectors.
    pub fn custom(name: &str, space: AmbientSpace, vectors: Vec<(Vector, Parity)>) -> Result<RootSystem> {
        Self::assemble(name.to_string(), Kind::Finite, space, vectors, Vec::new(), None)
    }

    /// Finite family names, `X^(1)` for affine and `Tn(X)` for toroidal
    /// systems; `window` applies to the last two.
    pub fn by_spec(name: &str, window: u32) -> Result<RootSystem> {
        let name = name.trim();
        if let Some(base) = name.strip_suffix("^(1)") {
            return build_affine(&RootSystem::by_name(base)?, window);
        }
        if let Some(rest) = name.strip_prefix('T') {
            if let Some((n, base)) = rest.split_once('(') {
                if let (Ok(n), Some(base)) = (n.parse::<usize>(), base.strip_suffix(')')) {
                    return build_toroidal(&RootSystem::by_name(base)?, n, window);
                }
            }
        }
        RootSystem::by_name(name)
    }

    /// Parses a family name and builds it.
    pub fn by_name(name: &str) -> Result<RootSystem> {
        RootSystem::finite(name.parse()?)
    }

    /// Sorted, deduplicated, indexed system from explicit vectors.
    pub(crate) fn assemble(
        name: String,
        kind: Kind,
        space: AmbientSpace,
        vectors: Vec<(Vector, Parity)>,
        imaginary_gens: Vec<Vector>,
        base: Option<Arc<RootSystem>>,
    ) -> Result<RootSystem> {
        let dim = space.canon_dim();
        let mut seen: HashMap<Vector, Parity> = HashMap::new();
        for (v, p) in vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
            if v.is_zero() {
                return Err(Error::InvalidParams(format!("{name}: zero root")));
            }
            match seen.get(&v) {
                Some(q) if *q != p => {
                    return Err(Error::InvalidParams(format!("{name}: root {v} has both parities")))
                }
                Some(_) => {}
                None => {
                    seen.insert(v, p);
                }
            }
        }
        let mut sorted: Vec<(Vector, Parity)> = seen.into_iter().collect();
        sorted.sort();
        let roots: Vec<Root> = sorted
            .into_iter()
            .enumerate()
            .map(|(id, (vec, parity))| Root { id, vec, parity })
            .collect();
        let index: HashMap<Vector, usize> = roots.iter().map(|r| (r.vec.clone(), r.id)).collect();
        let mut neg = Vec::with_capacity(roots.len());
        for r in &roots {
            match index.get(&r.vec.neg()) {
                Some(&j) => neg.push(j),
                None => {
                    return Err(Error::InvalidParams(format!(
                        "{name}: root system is not symmetric at {}",
                        r.vec
                    )))
                }
            }
        }
        let lattice = match &base {
            None => Vec::new(),
            Some(b) => {
                let bd = b.dim();
                roots
                    .iter()
                    .map(|r| {
                        let head = Vector(r.vec.0[..bd].to_vec());
                        let gamma = r.vec.0[bd..]
                            .iter()
                            .map(|x| x.to_i64().expect("lattice coordinates are integers"))
                            .collect();
                        LatticeCoord {
                            real: if head.is_zero() { None } else { b.find(&head) },
                            gamma,
                        }
                    })
                    .collect()
            }
        };
        Ok(RootSystem {
            name,
            kind,
            space,
            roots,
            imaginary_gens,
            standard_positive: None,
            base,
            lattice,
            index,
            neg,
        })
    }

    /// Positive system cut out by a generic functional on raw representatives,
    /// falling back to a generic functional on canonical coordinates.
    fn functional_positive_system(&self, reps: &[(Vector, Parity, Vec<Scalar>)]) -> Option<Vec<usize>> {
        let generic = |n: usize| -> Vec<Scalar> {
            (0..n).map(|i| Scalar::from_int(5i64.pow((n - 1 - i) as u32))).collect()
        };
        let rho_raw = generic(self.space.raw_dim());
        let mut from_raw = vec![false; self.len()];
        for (v, _, r) in reps {
            let s = rho_raw.iter().zip(r).fold(Scalar::zero(), |a, (x, y)| a + x * y);
            if s.is_positive() {
                from_raw[self.index[v]] = true;
            }
        }
        if self.check_positive_system(&from_raw).is_ok() {
            return Some(mask_ids(&from_raw));
        }
        let rho = Covector(generic(self.dim()));
        let canon: Vec<bool> = self.roots.iter().map(|r| rho.pair(&r.vec).is_positive()).collect();
        if self.check_positive_system(&canon).is_ok() {
            return Some(mask_ids(&canon));
        }
        None
    }

    /// Exactly one of each `±α` and closed under root addition.
    pub fn check_positive_system(&self, mask: &[bool]) -> std::result::Result<(), String> {
        if mask.len() != self.len() {
            return Err("mask length differs from the number of roots".into());
        }
        for i in 0..self.len() {
            if mask[i] == mask[self.neg[i]] {
                return Err(format!("root {i} and its negative are both in or both out"));
            }
        }
        for i in 0..self.len() {
            if !mask[i] {
                continue;
            }
            for j in i..self.len() {
                if mask[j] {
                    if let Some(k) = self.sum(i, j) {
                        if !mask[k] {
                            return Err(format!("{i} + {j} = {k} is not positive"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Canonical dimension.
    pub fn dim(&self) -> usize {
        self.space.canon_dim()
    }

    pub fn vector(&self, id: usize) -> &Vector {
        &self.roots[id].vec
    }

    pub fn parity(&self, id: usize) -> Parity {
        self.roots[id].parity
    }

    pub fn find(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neg(&self, id: usize) -> usize {
        self.neg[id]
    }

    /// The id of `α_i + α_j` when it is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.find(&self.roots[i].vec.add(&self.roots[j].vec))
    }

    pub fn imaginary_gens(&self) -> &[Vector] {
        &self.imaginary_gens
    }

    pub fn standard_positive(&self) -> Option<&[usize]> {
        self.standard_positive.as_deref()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Finite)
    }

    pub fn window(&self) -> Option<u32> {
        match self.kind {
            Kind::Finite => None,
            Kind::Affine { window, .. } | Kind::Toroidal { window, .. } => Some(window),
        }
    }

    /// Number of imaginary lattice generators (0 for finite systems).
    pub fn lattice_rank(&self) -> usize {
        self.imaginary_gens.len()
    }

    pub fn base_system(&self) -> Option<&RootSystem> {
        self.base.as_deref()
    }

    pub fn lattice(&self, id: usize) -> Option<&LatticeCoord> {
        self.lattice.get(id)
    }

    /// Finds the root `real + gamma` of an affine or toroidal system.
    pub fn find_lattice(&self, real: Option<usize>, gamma: &[i64]) -> Option<usize> {
        let base = self.base.as_ref()?;
        let head = match real {
            Some(r) => base.vector(r).clone(),
            None => Vector::zero(base.dim()),
        };
        let tail: Vec<Scalar> = gamma.iter().map(|&g| Scalar::from_int(g)).collect();
        self.find(&head.concat(&tail))
    }

    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SystemFile::from(self)).expect("system serializes")
    }

    pub fn from_json(value: serde_json::Value) -> Result<RootSystem> {
        let file: SystemFile = serde_json::from_value(value)?;
        file.into_system()
    }

    pub fn from_json_str(text: &str) -> Result<RootSystem> {
        let file: SystemFile = serde_json::from_str(text)?;
        file.into_system()
    }

    pub fn check_subset(&self, p: &RootSubset) -> Result<()> {
        if p.system != self.name {
            return Err(Error::SystemMismatch {
                expected: self.name.clone(),
                found: p.system.clone(),
            });
        }
        if let Some(id) = p.ids().find(|&i| i >= self.len()) {
            return Err(Error::UnknownRoot(id));
        }
        Ok(())
    }
}

pub(crate) fn mask_ids(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// A subset of the roots of a named system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset {
    system: String,
    /// Membership by id, without trailing `false` entries.
    mask: Vec<bool>,
}

fn trimmed(mut mask: Vec<bool>) -> Vec<bool> {
    while mask.last() == Some(&false) {
        mask.pop();
    }
    mask
}

impl RootSubset {
    pub fn new(sys: &RootSystem, ids: impl IntoIterator<Item = usize>) -> Result<RootSubset> {
        let mut mask = vec![false; sys.len()];
        for id in ids {
            *mask.get_mut(id).ok_or(Error::UnknownRoot(id))? = true;
        }
        Ok(RootSubset {
            system: sys.name().to_string(),
            mask: trimmed(mask),
        })
    }

    pub fn from_mask(sys: &RootSystem, mask: Vec<bool>) -> RootSubset {
        assert_eq!(mask.len(), sys.len(), "mask length must equal the number of roots");
        RootSubset {
            system: sys.name().to_string(),
            mask: trimmed(mask),
        }
    }

    pub fn full(sys: &RootSystem) -> RootSubset {
        Self::from_mask(sys, vec![true; sys.len()])
    }

    pub fn empty(sys: &RootSystem) -> RootSubset {
        Self::from_mask(sys, vec![false; sys.len()])
    }

    /// Roots satisfying a predicate on their vectors.
    pub fn filter(sys: &RootSystem, f: impl Fn(&Root) -> bool) -> RootSubset {
        Self::from_mask(sys, sys.roots().iter().map(f).collect())
    }

    pub fn system(&self) -> &str {
        &self.system
    }

    pub fn contains(&self, id: usize) -> bool {
        self.mask.get(id).copied().unwrap_or(false)
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `{-α : α ∈ P}`.
    pub fn negated(&self, sys: &RootSystem) -> RootSubset {
        RootSubset::new(sys, self.ids().map(|i| sys.neg(i))).expect("ids are in range")
    }

    /// Mask padded to the system size.
    pub fn mask(&self, sys: &RootSystem) -> Vec<bool> {
        (0..sys.len()).map(|i| self.contains(i)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct SubsetFile {
    system: String,
    members: Vec<usize>,
}

impl Serialize for RootSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubsetFile {
            system: self.system.clone(),
            members: self.ids().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = SubsetFile::deserialize(d)?;
        let len = f.members.iter().max().map_or(0, |m| m + 1);
        let mut mask = vec![false; len];
        for m in f.members {
            mask[m] = true;
        }
        Ok(RootSubset {
            system: f.system,
            mask,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    name: String,
    kind: String,
    canon_dim: usize,
    space: AmbientSpace,
    roots: Vec<Root>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    imaginary_gens: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lattice_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<Box<SystemFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    standard_positive: Option<Vec<usize>>,
}

impl From<&RootSystem> for SystemFile {
    fn from(s: &RootSystem) -> Self {
        let (kind, window, lattice_rank) = match &s.kind {
            Kind::Finite => ("finite", None, None),
            Kind::Affine { window, .. } => ("affine", Some(*window), None),
            Kind::Toroidal {
                lattice_rank, window, ..
            } => ("toroidal", Some(*window), Some(*lattice_rank)),
        };
        SystemFile {
            name: s.name.clone(),
            kind: kind.into(),
            canon_dim: s.dim(),
            space: s.space.clone(),
            roots: s.roots.clone(),
            imaginary_gens: s.imaginary_gens.clone(),
            window,
            lattice_rank,
            base: s.base.as_ref().map(|b| Box::new(SystemFile::from(b.as_ref()))),
            standard_positive: s.standard_positive.clone(),
        }
    }
}

impl SystemFile {
    fn into_system(self) -> Result<RootSystem> {
        let parse_err = |m: &str| Error::Parse(format!("system `{}`: {m}", self.name));
        let rebuilt = match self.kind.as_str() {
            "finite" => {
                let space = self.space.clone().rebuild()?;
                if space.canon_dim() != self.canon_dim {
                    return Err(parse_err("canon_dim disagrees with the space"));
                }
                let sys = RootSystem::assemble(
                    self.name.clone(),
                    Kind::Finite,
                    space,
                    self.roots.iter().map(|r| (r.vec.clone(), r.parity)).collect(),
                    Vec::new(),
                    None,
                )?;
                if let Some(pos) = &self.standard_positive {
                    let s = RootSubset::new(&sys, pos.iter().copied())?;
                    sys.check_positive_system(&s.mask(&sys))
                        .map_err(|e| Error::InvalidPositiveSystem(e))?;
                }
                RootSystem {
                    standard_positive: self.standard_positive.clone(),
                    ..sys
                }
            }
            "affine" | "toroidal" => {
                let base = self
                    .base
                    .ok_or_else(|| parse_err("missing base system"))?
                    .into_system()?;
                let window = self.window.ok_or_else(|| parse_err("missing window"))?;
                if self.kind == "affine" {
                    build_affine(&base, window)?
                } else {
                    let n = self.lattice_rank.ok_or_else(|| parse_err("missing lattice_rank"))?;
                    build_toroidal(&base, n, window)?
                }
            }
            other => return Err(parse_err(&format!("unknown kind `{other}`"))),
        };
        if rebuilt.roots != self.roots {
            return Err(Error::Parse(format!(
                "system `{}`: root ids or coordinates are not canonical",
                self.name
            )));
        }
        if rebuilt.name != self.name {
            return Err(parse_err("name does not match its parameters"));
        }
        Ok(rebuilt)
    }
}
