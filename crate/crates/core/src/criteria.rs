//! Pullback criteria over truncated simplicial sets and maps.
//!
//! Every checker walks its family of squares in lexicographic order of
//! `(n, i)`, skips squares that would need a level above the truncation, and
//! stops at the first square that is not a pullback.

use std::collections::HashMap;

use crate::delta::{active_inert_pushout, enumerate_active, enumerate_inert, SimplexMap};
use crate::error::{Error, Result};
use crate::pullback::{check_square, CheckReport, CornerNames, ReportTracker, SquareLabel, SquareWitness, Witness};
use crate::sset::{Op, SimplicialMap, TruncatedSSet};

/// Environment variable read by [`DirectOptions::from_env`] for the square budget.
pub const MAX_SQUARES_ENV: &str = "DECOMP_MAX_SQUARES";

struct Run {
    tracker: ReportTracker,
    failed: bool,
}

impl Run {
    fn new(criterion: &str) -> Self {
        Self { tracker: CheckReport::tracker(criterion), failed: false }
    }

    fn square(&mut self, label: SquareLabel, legs: [&[usize]; 4], names: CornerNames<'_>) -> Result<()> {
        let depth = *label.levels.iter().max().unwrap();
        self.tracker.record(depth);
        if let Some(w) = check_square(&label, legs, &names)? {
            self.fail(w);
        }
        Ok(())
    }

    fn fail(&mut self, w: SquareWitness) {
        self.tracker.fail(Witness::Square(w));
        self.failed = true;
    }

    fn finish(self) -> CheckReport {
        self.tracker.finish()
    }
}

fn names<'a>(x: &'a TruncatedSSet, levels: [usize; 4]) -> CornerNames<'a> {
    CornerNames { a: x.cells(levels[0]), b: x.cells(levels[1]), c: x.cells(levels[2]) }
}

fn ops(x: &TruncatedSSet, start: usize, ops: &[Op]) -> Result<Vec<usize>> {
    x.apply_ops(start, ops)
}

fn power(op: Op, times: usize) -> Vec<Op> {
    vec![op; times]
}

fn show_power(op: &str, times: usize) -> String {
    match times {
        0 => "id".to_string(),
        1 => op.to_string(),
        k => format!("{op}^{k}"),
    }
}

/// The Segal square at `n`: `d_bot, d_top : X_{n+1} -> X_n` over
/// `d_top, d_bot : X_n -> X_{n-1}`.
fn segal_square(run: &mut Run, x: &TruncatedSSet, n: usize) -> Result<()> {
    let levels = [n + 1, n, n, n - 1];
    let label = SquareLabel::new(format!("segal n={n}"), levels, ["d_0", &format!("d_{}", n + 1), &format!("d_{n}"), "d_0"]);
    run.square(label, [x.face(n + 1, 0), x.face(n + 1, n + 1), x.face(n, n), x.face(n, 0)], names(x, levels))
}

/// Segal condition in pullback form, for `1 <= n <= L - 1`.
pub fn check_segal(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    let mut run = Run::new("segal");
    for n in 1..x.level() {
        segal_square(&mut run, x, n)?;
        if run.failed {
            break;
        }
    }
    Ok(run.finish())
}

/// The single Segal square at level 2, which together with the decomposition
/// property characterizes Segal objects.
pub fn check_segal_base_square(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    x.require_level(2)?;
    let mut run = Run::new("segal base square");
    segal_square(&mut run, x, 1)?;
    Ok(run.finish())
}

/// Segal condition in the classical form: for `2 <= n <= L`, the map from
/// `X_n` to the `n`-fold fiber product of `X_1` over `X_0` is a bijection.
pub fn check_segal_iterated(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    let mut tracker = CheckReport::tracker("segal (iterated)");
    for n in 2..=x.level() {
        tracker.record(n);
        // e_i = d_top^{n-i} d_bot^{i-1}, the i-th edge
        let edges = (1..=n)
            .map(|i| {
                let mut word = power(Op::Face(0), i - 1);
                let mut lvl = n - (i - 1);
                for _ in 0..n - i {
                    word.push(Op::Face(lvl));
                    lvl -= 1;
                }
                ops(x, n, &word)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut preimages: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for cell in 0..x.cell_count(n) {
            preimages.entry(edges.iter().map(|e| e[cell]).collect()).or_default().push(cell);
        }
        if let Some((tuple, pre)) = first_chain_defect(x, n, &preimages) {
            let label = SquareLabel::new(
                format!("segal map n={n}"),
                [n, 1, 1, 0],
                ["d_top^(n-i) d_bot^(i-1)", "", "d_0", "d_1"],
            );
            tracker.fail(Witness::Square(SquareWitness {
                square: label,
                element: tuple.iter().map(|&e| x.cells(1)[e].clone()).collect(),
                preimage_count: pre.len(),
                preimages: pre.iter().map(|&c| x.cells(n)[c].clone()).collect(),
            }));
            break;
        }
    }
    Ok(tracker.finish())
}

/// The lexicographically first chain `(e_1, ..., e_n)` with `d_0 e_i = d_1 e_{i+1}`
/// whose preimage count is not one.
fn first_chain_defect(
    x: &TruncatedSSet,
    n: usize,
    preimages: &HashMap<Vec<usize>, Vec<usize>>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let unique = preimages.values().all(|p| p.len() == 1);
    let (d0, d1) = (x.face(1, 0), x.face(1, 1));
    let mut starting_at: Vec<Vec<usize>> = vec![Vec::new(); x.cell_count(0)];
    for (e, &s) in d1.iter().enumerate() {
        starting_at[s].push(e);
    }
    // number of chains of each length ending anywhere, counted by last edge
    let mut ways: Vec<usize> = vec![1; x.cell_count(1)];
    for _ in 1..n {
        let mut next = vec![0usize; x.cell_count(1)];
        for (e, &w) in ways.iter().enumerate() {
            for &f in &starting_at[d0[e]] {
                next[f] = next[f].saturating_add(w);
            }
        }
        ways = next;
    }
    let total: usize = ways.iter().fold(0usize, |a, &b| a.saturating_add(b));
    if unique && preimages.len() == total {
        return None;
    }
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    fn search(
        stack: &mut Vec<usize>,
        n: usize,
        starting_at: &[Vec<usize>],
        d0: &[usize],
        edges: usize,
        preimages: &HashMap<Vec<usize>, Vec<usize>>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if stack.len() == n {
            let pre = preimages.get(stack.as_slice()).cloned().unwrap_or_default();
            return (pre.len() != 1).then(|| (stack.clone(), pre));
        }
        let candidates: Vec<usize> = match stack.last() {
            None => (0..edges).collect(),
            Some(&e) => starting_at[d0[e]].clone(),
        };
        for f in candidates {
            stack.push(f);
            if let Some(found) = search(stack, n, starting_at, d0, edges, preimages) {
                return Some(found);
            }
            stack.pop();
        }
        None
    }
    search(&mut stack, n, &starting_at, d0, x.cell_count(1), preimages)
}

fn upper_square(run: &mut Run, x: &TruncatedSSet, n: usize, i: usize) -> Result<()> {
    let levels = [n + 1, n, n, n - 1];
    let label = SquareLabel::new(
        format!("upper 2-segal n={n} i={i}"),
        levels,
        [&format!("d_{}", i + 1), "d_0", "d_0", &format!("d_{i}")],
    );
    run.square(label, [x.face(n + 1, i + 1), x.face(n + 1, 0), x.face(n, 0), x.face(n, i)], names(x, levels))
}

fn lower_square(run: &mut Run, x: &TruncatedSSet, n: usize, i: usize) -> Result<()> {
    let levels = [n + 1, n, n, n - 1];
    let label = SquareLabel::new(
        format!("lower 2-segal n={n} i={i}"),
        levels,
        [&format!("d_{i}"), &format!("d_{}", n + 1), &format!("d_{n}"), &format!("d_{i}")],
    );
    run.square(label, [x.face(n + 1, i), x.face(n + 1, n + 1), x.face(n, n), x.face(n, i)], names(x, levels))
}

/// Upper 2-Segal squares for `0 < i < n`, `n + 1 <= L`.
pub fn check_upper_2segal(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    let mut run = Run::new("upper 2-segal");
    'outer: for n in 2..x.level() {
        for i in 1..n {
            upper_square(&mut run, x, n, i)?;
            if run.failed {
                break 'outer;
            }
        }
    }
    Ok(run.finish())
}

/// Lower 2-Segal squares for `0 < i < n`, `n + 1 <= L`.
pub fn check_lower_2segal(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    let mut run = Run::new("lower 2-segal");
    'outer: for n in 2..x.level() {
        for i in 1..n {
            lower_square(&mut run, x, n, i)?;
            if run.failed {
                break 'outer;
            }
        }
    }
    Ok(run.finish())
}

/// Upper 2-Segal via the `i = 1` square and the composite square
/// `d_2^{n-1}, d_bot ; d_bot, d_1^{n-1}` at each level.
pub fn check_upper_2segal_reduced(x: &TruncatedSSet) -> Result<CheckReport> {
    x.require_simplicial()?;
    let mut run = Run::new("upper 2-segal (reduced)");
    for n in 2..x.level() {
        upper_square(&mut run, x, n, 1)?;
        if run.failed {
            break;
        }
        let levels = [n + 1, 2, n, 1];
        let top = ops(x, n + 1, &power(Op::Face(2), n - 1))?;
        let bottom = ops(x, n, &power(Op::Face(1), n - 1))?;
        let label = SquareLabel::new(
            format!("upper 2-segal composite n={n}"),
            levels,
            [&show_power("d_2", n - 1), "d_0", "d_0", &show_power("d_1", n - 1)],
        );
        run.square(label, [&top, x.face(n + 1, 0), x.face(2, 0), &bottom], names(x, levels))?;
        if run.failed {
            break;
        }
    }
    Ok(run.finish())
}

/// Decomposition property as the conjunction of upper and lower 2-Segal.
pub fn check_decomposition(x: &TruncatedSSet) -> Result<CheckReport> {
    let upper = check_upper_2segal(x)?;
    let lower = check_lower_2segal(x)?;
    Ok(upper.and(lower, "decomposition"))
}

/// Which `{i, j}` squares [`check_2segal_polygonal`] examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonalMode {
    /// Every `0 <= i < j <= n`.
    Full,
    /// Only `i = 0` or `j = n`.
    Restricted,
    /// Only `j = n`: the family equivalent to upper 2-Segal.
    UpperFans,
    /// Only `i = 0`: the family equivalent to lower 2-Segal.
    LowerFans,
}

impl PolygonalMode {
    fn includes(self, n: usize, i: usize, j: usize) -> bool {
        match self {
            Self::Full => true,
            Self::Restricted => i == 0 || j == n,
            Self::UpperFans => j == n,
            Self::LowerFans => i == 0,
        }
    }
}

/// The square induced by the pushout of an active `alpha` along an inert `iota`:
///
/// ```text
/// X_p --phi*--> X_k
///  |             |
/// theta*       iota*
///  v             v
/// X_m --alpha*-> X_n
/// ```
struct InducedCache<'a> {
    x: &'a TruncatedSSet,
    cache: HashMap<SimplexMap, Vec<usize>>,
}

impl InducedCache<'_> {
    fn get(&mut self, f: &SimplexMap) -> Result<&[usize]> {
        if !self.cache.contains_key(f) {
            let table = self.x.induced_map(f)?;
            self.cache.insert(f.clone(), table);
        }
        Ok(&self.cache[f])
    }
}

fn pushout_square(
    run: &mut Run,
    cache: &mut InducedCache<'_>,
    name: String,
    alpha: &SimplexMap,
    iota: &SimplexMap,
) -> Result<()> {
    let (theta, phi) = active_inert_pushout(alpha, iota)?;
    let levels = [phi.target_rank(), iota.target_rank(), alpha.target_rank(), alpha.source_rank()];
    let label = SquareLabel::new(
        name,
        levels,
        [&format!("{phi}*"), &format!("{theta}*"), &format!("{iota}*"), &format!("{alpha}*")],
    );
    let top = cache.get(&phi)?.to_vec();
    let left = cache.get(&theta)?.to_vec();
    let right = cache.get(iota)?.to_vec();
    let bottom = cache.get(alpha)?.to_vec();
    let x = cache.x;
    run.square(label, [&top, &left, &right, &bottom], names(x, levels))
}

/// The `{i, j}` squares of triangulated polygons: for `0 <= i < j <= n <= L`,
/// `X_n` against the pieces on vertices `{0..i, j..n}` and `{i..j}` glued along
/// the edge `{i, j}`.
pub fn check_2segal_polygonal(x: &TruncatedSSet, mode: PolygonalMode) -> Result<CheckReport> {
    x.require_simplicial()?;
    let criterion = match mode {
        PolygonalMode::Full => "2-segal (polygonal)",
        PolygonalMode::Restricted => "2-segal (polygonal, restricted)",
        PolygonalMode::UpperFans => "2-segal (polygonal, j = n)",
        PolygonalMode::LowerFans => "2-segal (polygonal, i = 0)",
    };
    let mut run = Run::new(criterion);
    let mut cache = InducedCache { x, cache: HashMap::new() };
    'outer: for n in 1..=x.level() {
        for i in 0..n {
            for j in i + 1..=n {
                if !mode.includes(n, i, j) {
                    continue;
                }
                let alpha = enumerate_active(1, j - i).remove(0);
                let iota = SimplexMap::inert(1, n - (j - i) + 1, i)?;
                pushout_square(&mut run, &mut cache, format!("polygon n={n} i={i} j={j}"), &alpha, &iota)?;
                if run.failed {
                    break 'outer;
                }
            }
        }
    }
    Ok(run.finish())
}

/// Limits for [`check_decomposition_direct`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DirectOptions {
    /// Largest pushout rank `p` to examine; defaults to the level of the input.
    pub rank_cap: Option<usize>,
    /// Stop after this many squares and flag the report as budget-exhausted.
    pub max_squares: Option<usize>,
}

impl DirectOptions {
    /// Reads the square budget from the environment, if set.
    pub fn from_env() -> Result<Self> {
        let max_squares = match std::env::var(MAX_SQUARES_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{MAX_SQUARES_ENV} must be a natural number, got {v:?}"))
            })?),
            Err(_) => None,
        };
        Ok(Self { rank_cap: None, max_squares })
    }
}

/// Every active-inert pushout square whose four corners have rank at most the
/// cap, in order of apex rank, then source rank, active map, and inert map.
pub fn check_decomposition_direct(x: &TruncatedSSet, options: DirectOptions) -> Result<CheckReport> {
    x.require_simplicial()?;
    let cap = options.rank_cap.unwrap_or(x.level());
    x.require_level(cap)?;
    let mut run = Run::new("decomposition (direct)");
    let mut cache = InducedCache { x, cache: HashMap::new() };
    'outer: for p in 0..=cap {
        for n in 0..=p {
            for m in 0..=p {
                // codegeneracies push the inert corner above the apex; such
                // squares are skipped when they leave the truncation
                let k = p + n - m;
                if k < n || k > cap {
                    continue;
                }
                let actives = enumerate_active(n, m);
                let inerts = enumerate_inert(n, k);
                for alpha in &actives {
                    for iota in &inerts {
                        if let Some(limit) = options.max_squares {
                            if run.tracker.squares() >= limit {
                                run.tracker.exhausted();
                                break 'outer;
                            }
                        }
                        pushout_square(&mut run, &mut cache, format!("pushout of {alpha} along {iota}"), alpha, iota)?;
                        if run.failed {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok(run.finish())
}

/// Which outer face the degeneracy squares use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `X_{n+1} -s_{i+1}-> X_{n+2}` over `d_bot`, `X_n -s_i-> X_{n+1}`.
    Bottom,
    /// `X_{n+1} -s_i-> X_{n+2}` over `d_top`, `X_n -s_i-> X_{n+1}`.
    Top,
}

/// The basic degeneracy squares for `0 <= i <= n`, `n + 2 <= L`. These are
/// pullbacks in any decomposition space; the bottom family follows from upper
/// 2-Segal alone, the top family from lower 2-Segal.
pub fn check_degeneracy_squares(x: &TruncatedSSet, side: Side) -> Result<CheckReport> {
    x.require_simplicial()?;
    let criterion = match side {
        Side::Bottom => "degeneracy squares (bottom)",
        Side::Top => "degeneracy squares (top)",
    };
    let mut run = Run::new(criterion);
    'outer: for n in 0..x.level().saturating_sub(1) {
        for i in 0..=n {
            let levels = [n + 1, n + 2, n, n + 1];
            let (top_index, face_hi, face_lo) = match side {
                Side::Bottom => (i + 1, 0, 0),
                Side::Top => (i, n + 2, n + 1),
            };
            let label = SquareLabel::new(
                format!("degeneracy n={n} i={i}"),
                levels,
                [&format!("s_{top_index}"), &format!("d_{face_lo}"), &format!("d_{face_hi}"), &format!("s_{i}")],
            );
            run.square(
                label,
                [x.degeneracy(n + 1, top_index), x.face(n + 1, face_lo), x.face(n + 2, face_hi), x.degeneracy(n, i)],
                names(x, levels),
            )?;
            if run.failed {
                break 'outer;
            }
        }
    }
    Ok(run.finish())
}

/// Cartesian on active maps: the naturality squares of `f` against inner faces
/// `d_i : X_n -> X_{n-1}` (`0 < i < n`) and degeneracies `s_j : X_n -> X_{n+1}`.
pub fn check_culf(f: &SimplicialMap) -> Result<CheckReport> {
    f.require_simplicial()?;
    let (x, y) = (f.source(), f.target());
    let mut run = Run::new("culf");
    'outer: for n in 0..=f.level() {
        for i in 1..n {
            let levels = [n, n - 1, n, n - 1];
            let label = SquareLabel::new(
                format!("culf face n={n} i={i}"),
                levels,
                [&format!("d_{i}"), "f", "f", &format!("d_{i}")],
            );
            let names = CornerNames { a: x.cells(n), b: x.cells(n - 1), c: y.cells(n) };
            run.square(label, [x.face(n, i), f.component(n), f.component(n - 1), y.face(n, i)], names)?;
            if run.failed {
                break 'outer;
            }
        }
        if n < f.level() {
            for j in 0..=n {
                let levels = [n, n + 1, n, n + 1];
                let label = SquareLabel::new(
                    format!("culf degeneracy n={n} j={j}"),
                    levels,
                    [&format!("s_{j}"), "f", "f", &format!("s_{j}")],
                );
                let names = CornerNames { a: x.cells(n), b: x.cells(n + 1), c: y.cells(n) };
                run.square(label, [x.degeneracy(n, j), f.component(n), f.component(n + 1), y.degeneracy(n, j)], names)?;
                if run.failed {
                    break 'outer;
                }
            }
        }
    }
    Ok(run.finish())
}
