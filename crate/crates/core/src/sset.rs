//! Truncated simplicial sets stored as finite tables, and simplicial maps
//! between them.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use crate::delta::{generator_decomposition, Generator, SimplexMap};
use crate::error::{Error, Result};
use crate::pullback::{CheckReport, IdentityViolation, Witness};

/// A simplicial set known up to level `L`.
///
/// `faces[n][i]` is the table of `d_i : X_n -> X_{n-1}` (empty for `n = 0`);
/// `degeneracies[n][i]` is the table of `s_i : X_n -> X_{n+1}` for `n < L`.
/// Cells are named by opaque strings, unique within a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSSet {
    level: usize,
    cells: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<String, usize>>,
}

impl TruncatedSSet {
    /// Builds an object from raw tables, checking only structure (lengths,
    /// index ranges, name uniqueness). Use [`TruncatedSSet::validate`] for the
    /// simplicial identities.
    pub fn from_tables(
        cells: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Structural("at least level 0 must be present".into()));
        }
        let level = cells.len() - 1;
        if faces.len() != level + 1 {
            return Err(Error::Structural(format!(
                "expected face tables for levels 0..={level}, got {}",
                faces.len()
            )));
        }
        if degeneracies.len() != level {
            return Err(Error::Structural(format!(
                "expected degeneracy tables for levels 0..{level}, got {}",
                degeneracies.len()
            )));
        }
        let mut index = Vec::with_capacity(level + 1);
        for (n, names) in cells.iter().enumerate() {
            let mut map = HashMap::with_capacity(names.len());
            for (k, name) in names.iter().enumerate() {
                if map.insert(name.clone(), k).is_some() {
                    return Err(Error::Structural(format!("duplicate cell {name:?} at level {n}")));
                }
            }
            index.push(map);
        }
        for (n, tables) in faces.iter().enumerate() {
            let expected = if n == 0 { 0 } else { n + 1 };
            if tables.len() != expected {
                return Err(Error::Structural(format!(
                    "level {n} has {} face tables, expected {expected}",
                    tables.len()
                )));
            }
            for (i, table) in tables.iter().enumerate() {
                check_table(table, cells[n].len(), cells[n - 1].len(), || format!("d_{i} at level {n}"))?;
            }
        }
        for (n, tables) in degeneracies.iter().enumerate() {
            if tables.len() != n + 1 {
                return Err(Error::Structural(format!(
                    "level {n} has {} degeneracy tables, expected {}",
                    tables.len(),
                    n + 1
                )));
            }
            for (i, table) in tables.iter().enumerate() {
                check_table(table, cells[n].len(), cells[n + 1].len(), || format!("s_{i} at level {n}"))?;
            }
        }
        Ok(Self { level, cells, faces, degeneracies, index })
    }

    /// Tabulates an object whose cells are values of `T`, given the face and
    /// degeneracy operators as functions. `face(n, i, x)` is `d_i x` for `x` in
    /// `X_n`, `degeneracy(n, i, x)` is `s_i x`.
    pub fn tabulate<T, N, F, D>(cells: Vec<Vec<T>>, name: N, face: F, degeneracy: D) -> Result<Self>
    where
        T: Clone + Eq + Hash + std::fmt::Debug,
        N: Fn(usize, &T) -> String,
        F: Fn(usize, usize, &T) -> T,
        D: Fn(usize, usize, &T) -> T,
    {
        let level = cells.len().saturating_sub(1);
        let lookup: Vec<HashMap<&T, usize>> =
            cells.iter().map(|lvl| lvl.iter().enumerate().map(|(k, x)| (x, k)).collect()).collect();
        let find = |n: usize, x: &T, what: &dyn Fn() -> String| -> Result<usize> {
            lookup[n].get(x).copied().ok_or_else(|| {
                Error::Structural(format!("{} produced {x:?}, which is not a cell of level {n}", what()))
            })
        };
        let mut faces = vec![Vec::new()];
        for n in 1..=level {
            let mut tables = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let table = cells[n]
                    .iter()
                    .map(|x| find(n - 1, &face(n, i, x), &|| format!("d_{i} on {x:?}")))
                    .collect::<Result<Vec<_>>>()?;
                tables.push(table);
            }
            faces.push(tables);
        }
        let mut degeneracies = Vec::with_capacity(level);
        for n in 0..level {
            let mut tables = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let table = cells[n]
                    .iter()
                    .map(|x| find(n + 1, &degeneracy(n, i, x), &|| format!("s_{i} on {x:?}")))
                    .collect::<Result<Vec<_>>>()?;
                tables.push(table);
            }
            degeneracies.push(tables);
        }
        let names = cells
            .iter()
            .enumerate()
            .map(|(n, lvl)| lvl.iter().map(|x| name(n, x)).collect())
            .collect();
        Self::from_tables(names, faces, degeneracies)
    }

    /// The one-point simplicial set truncated at `level`.
    pub fn point(level: usize) -> Self {
        Self::tabulate(vec![vec![()]; level + 1], |_, _| "*".to_string(), |_, _, _| (), |_, _, _| ())
            .expect("point is well formed")
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn cells(&self, n: usize) -> &[String] {
        &self.cells[n]
    }

    pub fn cell_count(&self, n: usize) -> usize {
        self.cells[n].len()
    }

    pub fn cell_index(&self, n: usize, name: &str) -> Option<usize> {
        self.index.get(n)?.get(name).copied()
    }

    /// `d_i : X_n -> X_{n-1}`.
    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    /// `s_i : X_n -> X_{n+1}`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &[usize] {
        &self.degeneracies[n][i]
    }

    pub fn face_tables(&self) -> &[Vec<Vec<usize>>] {
        &self.faces
    }

    pub fn degeneracy_tables(&self) -> &[Vec<Vec<usize>>] {
        &self.degeneracies
    }

    pub(crate) fn require_level(&self, required: usize) -> Result<()> {
        if required > self.level {
            return Err(Error::LevelShortfall { required, available: self.level });
        }
        Ok(())
    }

    /// Checks every instance of the simplicial identities that stays inside the
    /// truncation. Reports the first violation in (level, family, indices, cell) order.
    pub fn validate(&self) -> CheckReport {
        let mut tracker = CheckReport::tracker("simplicial identities");
        if let Some(v) = self.first_identity_violation() {
            tracker.fail(Witness::Identity(v));
        }
        let mut report = tracker.finish();
        report.checked_depth = self.level;
        report
    }

    pub(crate) fn require_simplicial(&self) -> Result<()> {
        match self.first_identity_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotSimplicial(format!(
                "{} fails at level {} on cell {}",
                v.identity, v.level, v.cell
            ))),
        }
    }

    fn first_identity_violation(&self) -> Option<IdentityViolation> {
        let l = self.level;
        for n in 0..=l {
            // d_i d_j = d_{j-1} d_i for i < j, on X_n
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = compose_tables(self.face(n, j), self.face(n - 1, i));
                        let rhs = compose_tables(self.face(n, i), self.face(n - 1, j - 1));
                        if let Some(v) = self.mismatch(n, n - 2, &lhs, &rhs, || format!("d_{i} d_{j} = d_{} d_{i}", j - 1)) {
                            return Some(v);
                        }
                    }
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j, on X_n
            if n + 2 <= l {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = compose_tables(self.degeneracy(n, j), self.degeneracy(n + 1, i));
                        let rhs = compose_tables(self.degeneracy(n, i), self.degeneracy(n + 1, j + 1));
                        if let Some(v) = self.mismatch(n, n + 2, &lhs, &rhs, || format!("s_{i} s_{j} = s_{} s_{i}", j + 1)) {
                            return Some(v);
                        }
                    }
                }
            }
            // d_i s_j, on X_n
            if n < l {
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let lhs = compose_tables(self.degeneracy(n, j), self.face(n + 1, i));
                        let (rhs, name) = if i < j {
                            (
                                compose_tables(self.face(n, i), self.degeneracy(n - 1, j - 1)),
                                format!("d_{i} s_{j} = s_{} d_{i}", j - 1),
                            )
                        } else if i == j || i == j + 1 {
                            ((0..self.cell_count(n)).collect(), format!("d_{i} s_{j} = id"))
                        } else {
                            (
                                compose_tables(self.face(n, i - 1), self.degeneracy(n - 1, j)),
                                format!("d_{i} s_{j} = s_{j} d_{}", i - 1),
                            )
                        };
                        if let Some(v) = self.mismatch(n, n, &lhs, &rhs, || name.clone()) {
                            return Some(v);
                        }
                    }
                }
            }
        }
        None
    }

    fn mismatch(
        &self,
        source_level: usize,
        target_level: usize,
        lhs: &[usize],
        rhs: &[usize],
        identity: impl Fn() -> String,
    ) -> Option<IdentityViolation> {
        let k = lhs.iter().zip(rhs).position(|(a, b)| a != b)?;
        Some(IdentityViolation {
            identity: identity(),
            level: source_level,
            cell: self.cells[source_level][k].clone(),
            lhs: self.cells[target_level][lhs[k]].clone(),
            rhs: self.cells[target_level][rhs[k]].clone(),
        })
    }

    /// The function `α* : X_m -> X_n` for `α : [n] -> [m]`, computed by applying
    /// the face and degeneracy tables along the normal form of `α`.
    pub fn induced_map(&self, alpha: &SimplexMap) -> Result<Vec<usize>> {
        self.require_level(alpha.source_rank().max(alpha.target_rank()))?;
        self.apply_word(&generator_decomposition(alpha), alpha.target_rank())
    }

    /// Applies the operators of a word (listed in composition order) starting
    /// from level `start`, the target rank of the composite.
    pub fn apply_word(&self, word: &[Generator], start: usize) -> Result<Vec<usize>> {
        let mut level = start;
        self.require_level(level)?;
        let mut table: Vec<usize> = (0..self.cell_count(level)).collect();
        for g in word {
            if g.target_rank() != level {
                return Err(Error::InvalidArgument(format!("{g} does not compose at rank {level}")));
            }
            let next = g.source_rank();
            self.require_level(next)?;
            let op = match *g {
                Generator::Coface { rank, index } => self.face(rank, index),
                Generator::Codegeneracy { rank, index } => self.degeneracy(rank, index),
            };
            table = compose_tables(&table, op);
            level = next;
        }
        Ok(table)
    }

    /// Applies face and degeneracy operators in the order listed, starting from `start`.
    pub fn apply_ops(&self, start: usize, ops: &[Op]) -> Result<Vec<usize>> {
        self.require_level(start)?;
        let mut level = start;
        let mut table: Vec<usize> = (0..self.cell_count(level)).collect();
        for op in ops {
            let (next, t) = match *op {
                Op::Face(i) if level >= 1 && i <= level => (level - 1, self.face(level, i)),
                Op::Degeneracy(i) if level < self.level && i <= level => (level + 1, self.degeneracy(level, i)),
                Op::Degeneracy(_) if level >= self.level => {
                    return Err(Error::LevelShortfall { required: level + 1, available: self.level })
                }
                _ => return Err(Error::InvalidArgument(format!("{op} is not defined on level {level}"))),
            };
            table = compose_tables(&table, t);
            level = next;
        }
        Ok(table)
    }

    /// Reverses the orientation: `d_k^op = d_{n-k}` and `s_k^op = s_{n-k}` on level `n`.
    pub fn opposite(&self) -> Self {
        let faces = self
            .faces
            .iter()
            .enumerate()
            .map(|(n, tables)| (0..tables.len()).map(|k| tables[n - k].clone()).collect())
            .collect();
        let degeneracies = self
            .degeneracies
            .iter()
            .enumerate()
            .map(|(n, tables)| (0..=n).map(|k| tables[n - k].clone()).collect())
            .collect();
        Self { faces, degeneracies, ..self.clone() }
    }

    /// Forgets every level above `level`.
    pub fn truncate(&self, level: usize) -> Result<Self> {
        self.require_level(level)?;
        Ok(Self {
            level,
            cells: self.cells[..=level].to_vec(),
            faces: self.faces[..=level].to_vec(),
            degeneracies: self.degeneracies[..level].to_vec(),
            index: self.index[..=level].to_vec(),
        })
    }

    /// Renames every cell. The renaming must stay injective on each level.
    pub fn renamed(&self, rename: impl Fn(usize, &str) -> String) -> Result<Self> {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(n, lvl)| lvl.iter().map(|c| rename(n, c)).collect())
            .collect();
        Self::from_tables(cells, self.faces.clone(), self.degeneracies.clone())
    }
}

/// A single face or degeneracy operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Face(usize),
    Degeneracy(usize),
}

impl std::fmt::Display for Op {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Op::Face(i) => write!(f, "d_{i}"),
            Op::Degeneracy(i) => write!(f, "s_{i}"),
        }
    }
}

fn check_table(table: &[usize], len: usize, codomain: usize, what: impl Fn() -> String) -> Result<()> {
    if table.len() != len {
        return Err(Error::Structural(format!(
            "{} has {} entries for {len} cells",
            what(),
            table.len()
        )));
    }
    if let Some((k, &v)) = table.iter().enumerate().find(|(_, &v)| v >= codomain) {
        return Err(Error::Structural(format!(
            "{} entry {k} names cell {v}, but the target level has {codomain} cells",
            what()
        )));
    }
    Ok(())
}

/// `then ∘ first` as tables: apply `first`, then `then`.
pub fn compose_tables(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&x| then[x]).collect()
}

/// A level-indexed family of functions between two truncated simplicial sets,
/// defined on every level both share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<TruncatedSSet>,
    target: Arc<TruncatedSSet>,
    components: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(
        source: Arc<TruncatedSSet>,
        target: Arc<TruncatedSSet>,
        components: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let level = source.level().min(target.level());
        if components.len() != level + 1 {
            return Err(Error::Structural(format!(
                "expected components for levels 0..={level}, got {}",
                components.len()
            )));
        }
        for (n, table) in components.iter().enumerate() {
            check_table(table, source.cell_count(n), target.cell_count(n), || format!("component at level {n}"))?;
        }
        Ok(Self { source, target, components })
    }

    pub fn identity(x: Arc<TruncatedSSet>) -> Self {
        let components = (0..=x.level()).map(|n| (0..x.cell_count(n)).collect()).collect();
        Self { source: x.clone(), target: x, components }
    }

    /// Builds a map by sending each source cell to the target cell with the
    /// name `rename(level, name)`.
    pub fn from_names(
        source: Arc<TruncatedSSet>,
        target: Arc<TruncatedSSet>,
        rename: impl Fn(usize, &str) -> String,
    ) -> Result<Self> {
        let level = source.level().min(target.level());
        let components = (0..=level)
            .map(|n| {
                source
                    .cells(n)
                    .iter()
                    .map(|c| {
                        let image = rename(n, c);
                        target.cell_index(n, &image).ok_or_else(|| {
                            Error::Structural(format!("no target cell {image:?} at level {n} for {c:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, components)
    }

    pub fn source(&self) -> &TruncatedSSet {
        &self.source
    }

    pub fn target(&self) -> &TruncatedSSet {
        &self.target
    }

    pub fn source_arc(&self) -> Arc<TruncatedSSet> {
        self.source.clone()
    }

    pub fn target_arc(&self) -> Arc<TruncatedSSet> {
        self.target.clone()
    }

    pub fn level(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, n: usize) -> &[usize] {
        &self.components[n]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Checks naturality against every face and degeneracy operator in range.
    pub fn validate(&self) -> CheckReport {
        let mut tracker = CheckReport::tracker("simplicial map naturality");
        if let Some(v) = self.first_naturality_violation() {
            tracker.fail(Witness::Identity(v));
        }
        let mut report = tracker.finish();
        report.checked_depth = self.level();
        report
    }

    pub(crate) fn require_simplicial(&self) -> Result<()> {
        self.source.require_simplicial()?;
        self.target.require_simplicial()?;
        match self.first_naturality_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotSimplicial(format!(
                "map fails {} at level {} on cell {}",
                v.identity, v.level, v.cell
            ))),
        }
    }

    fn first_naturality_violation(&self) -> Option<IdentityViolation> {
        let (x, y) = (&*self.source, &*self.target);
        let l = self.level();
        let violation = |n: usize, out: usize, lhs: &[usize], rhs: &[usize], identity: String| {
            let k = lhs.iter().zip(rhs).position(|(a, b)| a != b)?;
            Some(IdentityViolation {
                identity,
                level: n,
                cell: x.cells(n)[k].clone(),
                lhs: y.cells(out)[lhs[k]].clone(),
                rhs: y.cells(out)[rhs[k]].clone(),
            })
        };
        for n in 0..=l {
            if n >= 1 {
                for i in 0..=n {
                    let lhs = compose_tables(x.face(n, i), self.component(n - 1));
                    let rhs = compose_tables(self.component(n), y.face(n, i));
                    if let Some(v) = violation(n, n - 1, &lhs, &rhs, format!("f d_{i} = d_{i} f")) {
                        return Some(v);
                    }
                }
            }
            if n < l {
                for i in 0..=n {
                    let lhs = compose_tables(x.degeneracy(n, i), self.component(n + 1));
                    let rhs = compose_tables(self.component(n), y.degeneracy(n, i));
                    if let Some(v) = violation(n, n + 1, &lhs, &rhs, format!("f s_{i} = s_{i} f")) {
                        return Some(v);
                    }
                }
            }
        }
        None
    }

    /// True when the map is simplicial, both sides have the same level, and
    /// every component is a bijection.
    pub fn is_isomorphism(&self) -> bool {
        self.source.level() == self.target.level()
            && self.validate().holds()
            && self.components.iter().enumerate().all(|(n, table)| {
                let mut seen = vec![false; self.target.cell_count(n)];
                table.len() == seen.len() && table.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            })
    }
}

/// Levelwise composite `g ∘ f` of `f : X -> Y` and `g : Y -> Z`.
pub fn compose_maps(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
    if !Arc::ptr_eq(&f.target, &g.source) && *f.target != *g.source {
        return Err(Error::InvalidArgument("target of the first map is not the source of the second".into()));
    }
    let level = f.level().min(g.level());
    let components = (0..=level).map(|n| compose_tables(f.component(n), g.component(n))).collect();
    let source = f.source.truncated_arc(level);
    let target = g.target.truncated_arc(level);
    SimplicialMap::new(source, target, components)
}

impl TruncatedSSet {
    fn truncated_arc(self: &Arc<Self>, level: usize) -> Arc<Self> {
        if self.level == level {
            self.clone()
        } else {
            Arc::new(self.truncate(level).expect("level within range"))
        }
    }
}
