//! Finite categories, their nerves, and twisted arrow categories.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators;
use crate::sset::{SimplicialMap, TruncatedSSet};

use super::partial::PartialCategory;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A category with finitely many objects and morphisms and a total composition
/// table on composable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `(f, g) -> g ∘ f` for `f: x -> y`, `g: y -> z`.
    composition: HashMap<(usize, usize), usize>,
}

/// Name-level description of a category, as read from input files.
/// Identities are added automatically as `1_<object>` unless named in
/// `identities`; composites involving identities are filled in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    /// Non-identity morphisms as `[name, source, target]`.
    pub morphisms: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<String>>,
    /// Composites as `[first, second, result]`, meaning `second ∘ first = result`.
    #[serde(default)]
    pub composites: Vec<[String; 3]>,
}

/// Morphism tables shared by categories and partial categories, resolved from names.
pub(crate) struct ResolvedArrows {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    pub composition: HashMap<(usize, usize), usize>,
}

pub(crate) fn resolve_spec(spec: &CategorySpec) -> Result<ResolvedArrows> {
    let mut object_index = HashMap::new();
    for (k, o) in spec.objects.iter().enumerate() {
        if object_index.insert(o.as_str(), k).is_some() {
            return Err(Error::Structural(format!("duplicate object {o:?}")));
        }
    }
    let obj = |name: &str| {
        object_index.get(name).copied().ok_or_else(|| Error::Structural(format!("unknown object {name:?}")))
    };
    let identity_names: Vec<String> = match &spec.identities {
        Some(names) if names.len() != spec.objects.len() => {
            return Err(Error::Structural(format!(
                "{} identities listed for {} objects",
                names.len(),
                spec.objects.len()
            )))
        }
        Some(names) => names.clone(),
        None => spec.objects.iter().map(|o| format!("1_{o}")).collect(),
    };
    let mut morphisms = Vec::new();
    for (k, name) in identity_names.iter().enumerate() {
        morphisms.push(Morphism { name: name.clone(), source: k, target: k });
    }
    for [name, s, t] in &spec.morphisms {
        morphisms.push(Morphism { name: name.clone(), source: obj(s)?, target: obj(t)? });
    }
    let mut arrow_index = HashMap::new();
    for (k, m) in morphisms.iter().enumerate() {
        if arrow_index.insert(m.name.clone(), k).is_some() {
            return Err(Error::Structural(format!("duplicate morphism {:?}", m.name)));
        }
    }
    let arrow = |name: &str| {
        arrow_index.get(name).copied().ok_or_else(|| Error::Structural(format!("unknown morphism {name:?}")))
    };
    let identities: Vec<usize> = (0..spec.objects.len()).collect();
    let mut composition = HashMap::new();
    for (f, m) in morphisms.iter().enumerate() {
        composition.insert((identities[m.source], f), f);
        composition.insert((f, identities[m.target]), f);
    }
    for [first, second, result] in &spec.composites {
        let (f, g, h) = (arrow(first)?, arrow(second)?, arrow(result)?);
        if let Some(&existing) = composition.get(&(f, g)) {
            if existing != h {
                return Err(Error::Precondition(format!(
                    "composite of {first} then {second} given as {result} but the unit law forces {}",
                    morphisms[existing].name
                )));
            }
        }
        composition.insert((f, g), h);
    }
    Ok(ResolvedArrows { objects: spec.objects.clone(), morphisms, identities, composition })
}

impl FiniteCategory {
    pub fn from_spec(spec: &CategorySpec) -> Result<Self> {
        let r = resolve_spec(spec)?;
        Self::new(r.objects, r.morphisms, r.identities, r.composition)
    }

    /// Validates typing, totality on composable pairs, unit laws and associativity.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        composition: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = Self { objects, morphisms, identities, composition };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        let as_partial = PartialCategory::new(
            self.objects.clone(),
            self.morphisms.clone(),
            self.identities.iter().map(|&i| Some(i)).collect(),
            self.composition.clone(),
        )?;
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mf.target == mg.source && !self.composition.contains_key(&(f, g)) {
                    return Err(Error::Precondition(format!(
                        "composite of {} then {} is missing",
                        mf.name, mg.name
                    )));
                }
            }
        }
        drop(as_partial);
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    /// `g ∘ f`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.composition.get(&(f, g)).copied()
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn to_spec(&self) -> CategorySpec {
        let non_identity: Vec<usize> =
            (0..self.morphisms.len()).filter(|f| !self.identities.contains(f)).collect();
        let mut composites = Vec::new();
        for &f in &non_identity {
            for &g in &non_identity {
                if let Some(h) = self.compose(f, g) {
                    let n = |k: usize| self.morphisms[k].name.clone();
                    composites.push([n(f), n(g), n(h)]);
                }
            }
        }
        CategorySpec {
            objects: self.objects.clone(),
            morphisms: non_identity
                .iter()
                .map(|&f| {
                    let m = &self.morphisms[f];
                    [m.name.clone(), self.objects[m.source].clone(), self.objects[m.target].clone()]
                })
                .collect(),
            identities: Some(self.identities.iter().map(|&i| self.morphisms[i].name.clone()).collect()),
            composites,
        }
    }

    pub fn to_partial(&self) -> PartialCategory {
        PartialCategory::new(
            self.objects.clone(),
            self.morphisms.clone(),
            self.identities.iter().map(|&i| Some(i)).collect(),
            self.composition.clone(),
        )
        .expect("a category is a partial category")
    }

    /// The category with every morphism reversed.
    pub fn opposite(&self) -> Self {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism { name: m.name.clone(), source: m.target, target: m.source })
            .collect();
        let composition = self.composition.iter().map(|(&(f, g), &h)| ((g, f), h)).collect();
        Self { objects: self.objects.clone(), morphisms, identities: self.identities.clone(), composition }
    }

    /// The terminal category: one object, one morphism.
    pub fn terminal() -> Self {
        Self::from_spec(&CategorySpec { objects: vec!["0".into()], ..Default::default() }).unwrap()
    }

    /// The poset `0 < 1 < ... < k` as a category, with arrows named `i<j`.
    pub fn chain(k: usize) -> Self {
        let objects: Vec<String> = (0..=k).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        for i in 0..=k {
            for j in i + 1..=k {
                morphisms.push([format!("{i}<{j}"), i.to_string(), j.to_string()]);
            }
        }
        let mut composites = Vec::new();
        for i in 0..=k {
            for j in i + 1..=k {
                for l in j + 1..=k {
                    composites.push([format!("{i}<{j}"), format!("{j}<{l}"), format!("{i}<{l}")]);
                }
            }
        }
        Self::from_spec(&CategorySpec { objects, morphisms, identities: None, composites }).unwrap()
    }

    /// The walking arrow `0 -> 1`.
    pub fn arrow() -> Self {
        Self::chain(1)
    }

    /// A one-object category from a finite monoid given by its multiplication
    /// table on `elements` (`table[a][b] = a · b`, first `b` then `a` as arrows).
    pub fn from_monoid(elements: &[&str], unit: usize, table: &[Vec<usize>]) -> Result<Self> {
        let objects = vec!["*".to_string()];
        let morphisms: Vec<Morphism> =
            elements.iter().map(|e| Morphism { name: e.to_string(), source: 0, target: 0 }).collect();
        let mut composition = HashMap::new();
        for (a, row) in table.iter().enumerate() {
            for (b, &ab) in row.iter().enumerate() {
                // the arrow composite "b then a" is a · b
                composition.insert((b, a), ab);
            }
        }
        Self::new(objects, morphisms, vec![unit], composition)
    }

    /// The cyclic group of order `n` as a one-object category.
    pub fn cyclic_group(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|k| format!("g{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_monoid(&refs, 0, &table).unwrap()
    }
}

/// A composable chain `start -> ... ` of morphisms; level 0 chains are bare objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

/// Arrow data from which chains and their faces are computed.
pub(crate) struct ChainData<'a> {
    pub objects: &'a [String],
    pub morphisms: &'a [Morphism],
    pub identities: &'a [usize],
    pub composition: &'a HashMap<(usize, usize), usize>,
}

impl ChainData<'_> {
    fn vertex(&self, c: &Chain, i: usize) -> usize {
        if i == 0 {
            c.start
        } else {
            self.morphisms[c.arrows[i - 1]].target
        }
    }

    /// Chains of length `0..=level` whose total composite is defined, in
    /// lexicographic order of (start, arrow indices).
    pub fn chains(&self, level: usize) -> Vec<Vec<Chain>> {
        let mut out: Vec<Vec<(Chain, Option<usize>)>> = Vec::with_capacity(level + 1);
        out.push((0..self.objects.len()).map(|o| (Chain { start: o, arrows: vec![] }, None)).collect());
        for n in 1..=level {
            let mut next = Vec::new();
            for (c, total) in &out[n - 1] {
                let end = self.vertex(c, n - 1);
                for (a, m) in self.morphisms.iter().enumerate() {
                    if m.source != end {
                        continue;
                    }
                    let new_total = match total {
                        None => Some(a),
                        Some(t) => self.composition.get(&(*t, a)).copied(),
                    };
                    if let Some(t) = new_total {
                        let mut arrows = c.arrows.clone();
                        arrows.push(a);
                        next.push((Chain { start: c.start, arrows }, Some(t)));
                    }
                }
            }
            out.push(next);
        }
        out.into_iter().map(|lvl| lvl.into_iter().map(|(c, _)| c).collect()).collect()
    }

    fn face(&self, n: usize, i: usize, c: &Chain) -> Chain {
        if n == 1 {
            return Chain { start: self.vertex(c, 1 - i), arrows: vec![] };
        }
        let mut arrows = c.arrows.clone();
        if i == 0 {
            let first = arrows.remove(0);
            Chain { start: self.morphisms[first].target, arrows }
        } else if i == n {
            arrows.pop();
            Chain { start: c.start, arrows }
        } else {
            let (f, g) = (arrows[i - 1], arrows[i]);
            // an undefined inner composite leaves a sentinel that fails lookup
            let fg = self.composition.get(&(f, g)).copied().unwrap_or(usize::MAX);
            arrows.splice(i - 1..=i, [fg]);
            Chain { start: c.start, arrows }
        }
    }

    fn degeneracy(&self, i: usize, c: &Chain) -> Chain {
        let id = self.identities[self.vertex(c, i)];
        let mut arrows = c.arrows.clone();
        arrows.insert(i, id);
        Chain { start: c.start, arrows }
    }

    pub fn name(&self, c: &Chain) -> String {
        if c.arrows.is_empty() {
            self.objects[c.start].clone()
        } else {
            c.arrows.iter().map(|&a| self.morphisms[a].name.as_str()).collect::<Vec<_>>().join("|")
        }
    }

    pub fn sset(&self, level: usize) -> Result<TruncatedSSet> {
        TruncatedSSet::tabulate(
            self.chains(level),
            |_, c| self.name(c),
            |n, i, c| self.face(n, i, c),
            |_, i, c| self.degeneracy(i, c),
        )
    }
}

impl FiniteCategory {
    pub(crate) fn chain_data(&self) -> ChainData<'_> {
        ChainData {
            objects: &self.objects,
            morphisms: &self.morphisms,
            identities: &self.identities,
            composition: &self.composition,
        }
    }
}

/// The nerve truncated at `level`: `n`-cells are composable `n`-chains, named
/// by their arrow names joined with `|` (objects at level 0).
pub fn nerve(c: &FiniteCategory, level: usize) -> Result<TruncatedSSet> {
    c.chain_data().sset(level)
}

/// Objects are the morphisms of `c`; a morphism `f -> g` is a pair `(h, k)` with
/// `g = k ∘ f ∘ h`. Morphisms are named `h>f>k`.
pub fn twisted_arrow(c: &FiniteCategory) -> Result<FiniteCategory> {
    let ms = c.morphisms();
    let objects: Vec<String> = ms.iter().map(|m| m.name.clone()).collect();
    let mut morphisms = Vec::new();
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut triples = Vec::new();
    for (f, mf) in ms.iter().enumerate() {
        for (h, mh) in ms.iter().enumerate() {
            if mh.target != mf.source {
                continue;
            }
            for (k, mk) in ms.iter().enumerate() {
                if mk.source != mf.target {
                    continue;
                }
                let g = c
                    .compose(h, f)
                    .and_then(|fh| c.compose(fh, k))
                    .ok_or_else(|| Error::Precondition("composition is not total".into()))?;
                index.insert((f, h, k), morphisms.len());
                triples.push((f, h, k));
                morphisms.push(Morphism { name: format!("{}>{}>{}", mh.name, mf.name, mk.name), source: f, target: g });
            }
        }
    }
    let identities = ms
        .iter()
        .enumerate()
        .map(|(f, m)| index[&(f, c.identity(m.source), c.identity(m.target))])
        .collect();
    let mut composition = HashMap::new();
    for (x, &(f, h, k)) in triples.iter().enumerate() {
        let g = morphisms[x].target;
        for (y, &(g2, h2, k2)) in triples.iter().enumerate() {
            if g2 != g {
                continue;
            }
            let hh = c.compose(h2, h).expect("typed");
            let kk = c.compose(k, k2).expect("typed");
            composition.insert((x, y), index[&(f, hh, kk)]);
        }
    }
    FiniteCategory::new(objects, morphisms, identities, composition)
}

/// The isomorphism `sd(nerve c) -> nerve(twisted_arrow c)`.
///
/// A `(2n+1)`-chain `a_1, ..., a_{2n+1}` of `c` becomes the chain of twisted
/// arrows `f_0 -> ... -> f_n` with `f_i = a_{n+1+i} ∘ ... ∘ a_{n+1-i}`,
/// `h_i = a_{n-i}` and `k_i = a_{n+2+i}`.
pub fn twisted_arrow_comparison(c: &FiniteCategory, level: usize) -> Result<SimplicialMap> {
    let x = nerve(c, level)?;
    let sd = Arc::new(operators::sd(&x)?);
    let tw = twisted_arrow(c)?;
    let k = sd.level();
    let tw_nerve = Arc::new(nerve(&tw, k)?);

    let data = c.chain_data();
    let source_chains = data.chains(2 * k + 1);
    let tw_data = tw.chain_data();
    let target_chains = tw_data.chains(k);
    let mut components = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let lookup: HashMap<&Chain, usize> =
            target_chains[n].iter().enumerate().map(|(i, ch)| (ch, i)).collect();
        let comp = source_chains[2 * n + 1]
            .iter()
            .map(|ch| {
                let a = &ch.arrows;
                let composite = |lo: usize, hi: usize| {
                    a[lo + 1..=hi].iter().fold(a[lo], |acc, &next| c.compose(acc, next).expect("total"))
                };
                // f_i spans arrows with 0-based indices n-i ..= n+i
                let objects: Vec<usize> = (0..=n).map(|i| composite(n - i, n + i)).collect();
                let arrows: Vec<usize> = (0..n)
                    .map(|i| {
                        let (h, kk) = (a[n - i - 1], a[n + i + 1]);
                        let name = format!(
                            "{}>{}>{}",
                            c.morphisms()[h].name,
                            c.morphisms()[objects[i]].name,
                            c.morphisms()[kk].name
                        );
                        tw.morphism_index(&name).expect("twisted arrow exists")
                    })
                    .collect();
                let image = Chain { start: objects[0], arrows };
                lookup.get(&image).copied().ok_or_else(|| {
                    Error::Structural(format!("no twisted chain for {}", data.name(ch)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(comp);
    }
    SimplicialMap::new(sd, tw_nerve, components)
}
