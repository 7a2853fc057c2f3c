//! Partial monoids and partial categories, and the simplicial sets of their
//! composable chains.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sset::TruncatedSSet;

use super::category::{resolve_spec, CategorySpec, ChainData, Morphism};

/// Exhaustive associativity checks are cubic in the carrier, so carriers are
/// capped unless a caller raises the limit explicitly.
pub const DEFAULT_CARRIER_CAP: usize = 32;

/// A set with a unit and a partially defined product satisfying: `1·x` and
/// `x·1` are always defined and equal `x`, and `x·(y·z)` is defined iff
/// `(x·y)·z` is, in which case they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMonoid {
    elements: Vec<String>,
    unit: usize,
    product: HashMap<(usize, usize), usize>,
}

/// Name-level description of a partial monoid. Unit products are implied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialMonoidSpec {
    pub elements: Vec<String>,
    pub unit: String,
    /// Defined products as `[x, y, x·y]`.
    #[serde(default)]
    pub products: Vec<[String; 3]>,
}

impl PartialMonoid {
    pub fn new(elements: Vec<String>, unit: usize, products: &[(usize, usize, usize)]) -> Result<Self> {
        Self::with_cap(elements, unit, products, DEFAULT_CARRIER_CAP)
    }

    pub fn with_cap(
        elements: Vec<String>,
        unit: usize,
        products: &[(usize, usize, usize)],
        cap: usize,
    ) -> Result<Self> {
        if elements.len() > cap {
            return Err(Error::Precondition(format!(
                "carrier has {} elements, above the cap of {cap}",
                elements.len()
            )));
        }
        if unit >= elements.len() {
            return Err(Error::Structural(format!("unit index {unit} out of range")));
        }
        let mut seen = HashMap::new();
        for (k, e) in elements.iter().enumerate() {
            if seen.insert(e.as_str(), k).is_some() {
                return Err(Error::Structural(format!("duplicate element {e:?}")));
            }
        }
        let n = elements.len();
        let mut product = HashMap::new();
        for x in 0..n {
            product.insert((unit, x), x);
            product.insert((x, unit), x);
        }
        for &(x, y, xy) in products {
            if x >= n || y >= n || xy >= n {
                return Err(Error::Structural(format!("product ({x}, {y}) -> {xy} out of range")));
            }
            if let Some(&old) = product.get(&(x, y)) {
                if old != xy {
                    return Err(Error::Precondition(format!(
                        "{}·{} given as {} but already {}",
                        elements[x], elements[y], elements[xy], elements[old]
                    )));
                }
            }
            product.insert((x, y), xy);
        }
        let m = Self { elements, unit, product };
        m.check_associativity()?;
        Ok(m)
    }

    pub fn from_spec(spec: &PartialMonoidSpec) -> Result<Self> {
        let find = |name: &str| {
            spec.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| Error::Structural(format!("unknown element {name:?}")))
        };
        let unit = find(&spec.unit)?;
        let products = spec
            .products
            .iter()
            .map(|[x, y, z]| Ok((find(x)?, find(y)?, find(z)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec.elements.clone(), unit, &products)
    }

    pub fn to_spec(&self) -> PartialMonoidSpec {
        let mut products: Vec<_> = self
            .product
            .iter()
            .filter(|(&(x, y), _)| x != self.unit && y != self.unit)
            .map(|(&(x, y), &z)| (x, y, z))
            .collect();
        products.sort_unstable();
        PartialMonoidSpec {
            elements: self.elements.clone(),
            unit: self.elements[self.unit].clone(),
            products: products
                .into_iter()
                .map(|(x, y, z)| [self.elements[x].clone(), self.elements[y].clone(), self.elements[z].clone()])
                .collect(),
        }
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.elements.len();
        let mul = |x: Option<usize>, y: Option<usize>| match (x, y) {
            (Some(x), Some(y)) => self.product.get(&(x, y)).copied(),
            _ => None,
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let left = mul(mul(Some(x), Some(y)), Some(z));
                    let right = mul(Some(x), mul(Some(y), Some(z)));
                    if left != right {
                        let show = |v: Option<usize>| v.map_or("undefined".to_string(), |v| self.elements[v].clone());
                        let e = &self.elements;
                        return Err(Error::Precondition(format!(
                            "({}·{})·{} is {} but {}·({}·{}) is {}",
                            e[x], e[y], e[z], show(left), e[x], e[y], e[z], show(right)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        self.product.get(&(x, y)).copied()
    }

    /// The one-object partial category whose morphisms are the elements, with
    /// the arrow composite "`x` then `y`" equal to `x·y`.
    pub fn to_partial_category(&self) -> PartialCategory {
        let morphisms =
            self.elements.iter().map(|e| Morphism { name: e.clone(), source: 0, target: 0 }).collect();
        PartialCategory {
            objects: vec!["*".into()],
            morphisms,
            identities: vec![Some(self.unit)],
            composition: self.product.clone(),
        }
    }

    /// All words `a^0, ..., a^bound` in one letter, with products defined while
    /// the exponents sum to at most `bound`.
    pub fn truncated_powers(bound: usize) -> Self {
        let elements: Vec<String> = (0..=bound)
            .map(|k| if k == 0 { "1".to_string() } else { "a".repeat(k) })
            .collect();
        let mut products = Vec::new();
        for x in 1..=bound {
            for y in 1..=bound - x {
                products.push((x, y, x + y));
            }
        }
        Self::new(elements, 0, &products).expect("truncated powers are a partial monoid")
    }
}

/// A category whose composition may be undefined on some composable pairs.
/// Identities are required on every object; partial associativity holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Option<usize>>,
    composition: HashMap<(usize, usize), usize>,
}

impl PartialCategory {
    /// `identities[x]` may be `None` only to report the failure: an object with
    /// an empty endo-hom, or no designated identity, is rejected.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<Option<usize>>,
        composition: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = Self { objects, morphisms, identities, composition };
        c.check()?;
        Ok(c)
    }

    pub fn from_spec(spec: &CategorySpec) -> Result<Self> {
        let r = resolve_spec(spec)?;
        Self::new(r.objects, r.morphisms, r.identities.into_iter().map(Some).collect(), r.composition)
    }

    fn check(&self) -> Result<()> {
        let ms = &self.morphisms;
        if self.identities.len() != self.objects.len() {
            return Err(Error::Structural("one identity entry per object is required".into()));
        }
        for m in ms {
            if m.source >= self.objects.len() || m.target >= self.objects.len() {
                return Err(Error::Structural(format!("morphism {} has an unknown endpoint", m.name)));
            }
        }
        for (x, id) in self.identities.iter().enumerate() {
            let endo = ms.iter().any(|m| m.source == x && m.target == x);
            let name = &self.objects[x];
            match id {
                _ if !endo => {
                    return Err(Error::Precondition(format!("hom({name}, {name}) is empty, so {name} has no identity")))
                }
                None => return Err(Error::Precondition(format!("object {name} has no identity"))),
                Some(i) if *i >= ms.len() || ms[*i].source != x || ms[*i].target != x => {
                    return Err(Error::Precondition(format!("identity of {name} is not an endomorphism of {name}")))
                }
                Some(_) => {}
            }
        }
        for (&(f, g), &h) in &self.composition {
            let (mf, mg) = match (ms.get(f), ms.get(g)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::Structural("composite refers to an unknown morphism".into())),
            };
            if mf.target != mg.source {
                return Err(Error::Precondition(format!("{} then {} are not composable", mf.name, mg.name)));
            }
            match ms.get(h) {
                Some(mh) if mh.source == mf.source && mh.target == mg.target => {}
                _ => {
                    return Err(Error::Precondition(format!(
                        "composite of {} then {} has the wrong type",
                        mf.name, mg.name
                    )))
                }
            }
        }
        for (f, m) in ms.iter().enumerate() {
            let (s, t) = (self.identity(m.source), self.identity(m.target));
            if self.compose(s, f) != Some(f) || self.compose(f, t) != Some(f) {
                return Err(Error::Precondition(format!("unit law fails for {}", m.name)));
            }
        }
        let mul = |x: Option<usize>, y: usize| x.and_then(|x| self.compose(x, y));
        for (f, mf) in ms.iter().enumerate() {
            for (g, mg) in ms.iter().enumerate() {
                if mf.target != mg.source {
                    continue;
                }
                for (h, mh) in ms.iter().enumerate() {
                    if mg.target != mh.source {
                        continue;
                    }
                    let left = mul(self.compose(f, g), h);
                    let right = self.compose(g, h).and_then(|gh| self.compose(f, gh));
                    if left != right {
                        return Err(Error::Precondition(format!(
                            "partial associativity fails on {}, {}, {}",
                            mf.name, mg.name, mh.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn identity(&self, object: usize) -> usize {
        self.identities[object].expect("checked")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    /// `g ∘ f` when defined.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.composition.get(&(f, g)).copied()
    }

    fn identity_table(&self) -> Vec<usize> {
        (0..self.objects.len()).map(|x| self.identity(x)).collect()
    }
}

/// Chains `x_1, ..., x_n` whose product is defined, truncated at `level`.
pub fn from_partial_monoid(m: &PartialMonoid, level: usize) -> Result<TruncatedSSet> {
    from_partial_category(&m.to_partial_category(), level)
}

/// Composable chains whose total composite is defined, truncated at `level`.
pub fn from_partial_category(c: &PartialCategory, level: usize) -> Result<TruncatedSSet> {
    let identities = c.identity_table();
    ChainData {
        objects: &c.objects,
        morphisms: &c.morphisms,
        identities: &identities,
        composition: &c.composition,
    }
    .sset(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn trivial_monoid_is_point() {
        let m = PartialMonoid::new(names(&["1"]), 0, &[]).unwrap();
        let x = from_partial_monoid(&m, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(x.cell_count(n), 1);
        }
    }

    #[test]
    fn undefined_product_drops_chain() {
        // {1, a, aa} with a·a = aa and a·aa undefined
        let m = PartialMonoid::new(names(&["1", "a", "aa"]), 0, &[(1, 1, 2)]).unwrap();
        let x = from_partial_monoid(&m, 3).unwrap();
        assert!(x.cell_index(2, "a|a").is_some());
        assert!(x.cell_index(2, "a|aa").is_none());
        assert!(x.cell_index(3, "a|a|a").is_none());
        assert!(x.validate().holds());
    }

    #[test]
    fn associativity_violation_is_a_precondition_error() {
        // a·a = b, b·a undefined but a·b defined: (a·a)·a undefined, a·(a·a) = a·b defined
        let err = PartialMonoid::new(names(&["1", "a", "b"]), 0, &[(1, 1, 2), (1, 2, 2)]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn carrier_cap_is_enforced() {
        let big: Vec<String> = (0..40).map(|k| format!("x{k}")).collect();
        assert!(matches!(PartialMonoid::new(big.clone(), 0, &[]), Err(Error::Precondition(_))));
        assert!(PartialMonoid::with_cap(big, 0, &[], 64).is_ok());
    }

    #[test]
    fn empty_endo_hom_is_rejected() {
        let c = PartialCategory::new(
            names(&["x"]),
            vec![],
            vec![None],
            HashMap::new(),
        );
        assert!(matches!(c, Err(Error::Precondition(msg)) if msg.contains("is empty")));
    }

    #[test]
    fn truncated_powers_cells() {
        let m = PartialMonoid::truncated_powers(3);
        let x = from_partial_monoid(&m, 3).unwrap();
        // chains of non-negative exponents summing to at most 3
        assert_eq!(x.cell_count(1), 4);
        assert_eq!(x.cell_count(2), 10);
    }

    #[test]
    fn spec_round_trip() {
        let m = PartialMonoid::truncated_powers(2);
        assert_eq!(PartialMonoid::from_spec(&m.to_spec()).unwrap(), m);
    }
}
