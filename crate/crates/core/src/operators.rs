//! Upper and lower décalage, edgewise subdivision, and the comparison maps
//! between them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pullback::{CheckReport, IdentityViolation, Witness};
use crate::sset::{Op, SimplicialMap, TruncatedSSet};

fn require_positive(x: &TruncatedSSet) -> Result<()> {
    if x.level() == 0 {
        return Err(Error::LevelShortfall { required: 1, available: 0 });
    }
    Ok(())
}

fn shifted(x: &TruncatedSSet, shift: usize) -> Result<TruncatedSSet> {
    let l = x.level() - 1;
    let cells = (0..=l).map(|n| x.cells(n + 1).to_vec()).collect();
    let faces = (0..=l)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|k| x.face(n + 1, k + shift).to_vec()).collect() })
        .collect();
    let degeneracies = (0..l).map(|n| (0..=n).map(|k| x.degeneracy(n + 1, k + shift).to_vec()).collect()).collect();
    TruncatedSSet::from_tables(cells, faces, degeneracies)
}

/// Upper décalage: `Y_n = X_{n+1}`, forgetting the top face and degeneracy.
/// Returns `Y` (level `L - 1`) and the projection `d_top : Y -> X`.
pub fn dec_top(x: &TruncatedSSet) -> Result<(TruncatedSSet, SimplicialMap)> {
    require_positive(x)?;
    let y = shifted(x, 0)?;
    let components = (0..=y.level()).map(|n| x.face(n + 1, n + 1).to_vec()).collect();
    let proj = SimplicialMap::new(Arc::new(y.clone()), Arc::new(x.clone()), components)?;
    Ok((y, proj))
}

/// Lower décalage: `Y_n = X_{n+1}` with `d_k = d_{k+1}` and `s_k = s_{k+1}`.
/// Returns `Y` (level `L - 1`) and the projection `d_bot : Y -> X`.
pub fn dec_bot(x: &TruncatedSSet) -> Result<(TruncatedSSet, SimplicialMap)> {
    require_positive(x)?;
    let y = shifted(x, 1)?;
    let components = (0..=y.level()).map(|n| x.face(n + 1, 0).to_vec()).collect();
    let proj = SimplicialMap::new(Arc::new(y.clone()), Arc::new(x.clone()), components)?;
    Ok((y, proj))
}

/// Level of the edgewise subdivision of an object truncated at `level`.
pub fn sd_level(level: usize) -> usize {
    level.saturating_sub(1) / 2
}

/// Edgewise subdivision: `Z_n = X_{2n+1}` with `d_i = d_{n-i} d_{n+i+1}` and
/// `s_i = s_{n-i} s_{n+i+1}` (the right-hand operator applied first).
/// Truncated at `floor((L - 1) / 2)`; cells keep their names.
pub fn sd(x: &TruncatedSSet) -> Result<TruncatedSSet> {
    require_positive(x)?;
    let k = sd_level(x.level());
    let cells = (0..=k).map(|n| x.cells(2 * n + 1).to_vec()).collect();
    let faces = (0..=k)
        .map(|n| {
            if n == 0 {
                return Ok(Vec::new());
            }
            (0..=n).map(|i| x.apply_ops(2 * n + 1, &[Op::Face(n + i + 1), Op::Face(n - i)])).collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let degeneracies = (0..k)
        .map(|n| {
            (0..=n)
                .map(|i| x.apply_ops(2 * n + 1, &[Op::Degeneracy(n + i + 1), Op::Degeneracy(n - i)]))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    TruncatedSSet::from_tables(cells, faces, degeneracies)
}

/// The map `dec_bot X -> sd X` with level-`n` component `s_0^n : X_{n+1} -> X_{2n+1}`.
pub fn map_decbot_to_sd(x: &TruncatedSSet) -> Result<SimplicialMap> {
    let (y, _) = dec_bot(x)?;
    let z = sd(x)?;
    let level = y.level().min(z.level());
    let components = (0..=level)
        .map(|n| x.apply_ops(n + 1, &vec![Op::Degeneracy(0); n]))
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(Arc::new(y), Arc::new(z), components)
}

/// The map `(dec_top X)^op -> sd X` with level-`n` component
/// `s_top^n : X_{n+1} -> X_{2n+1}`, applying `s_{n+1}, ..., s_{2n}` in turn.
pub fn map_dectop_op_to_sd(x: &TruncatedSSet) -> Result<SimplicialMap> {
    let (y, _) = dec_top(x)?;
    let z = sd(x)?;
    let level = y.level().min(z.level());
    let components = (0..=level)
        .map(|n| {
            let word: Vec<Op> = (n + 1..=2 * n).map(Op::Degeneracy).collect();
            x.apply_ops(n + 1, &word)
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(Arc::new(y.opposite()), Arc::new(z), components)
}

/// Checks `d_1^n s_0^n = id = d_0 d_2^{n-1} s_0^n` on `X_{n+1}` for
/// `1 <= n <= max_n` with `2n + 1 <= L`.
pub fn check_retract_identities(x: &TruncatedSSet, max_n: usize) -> Result<CheckReport> {
    let mut tracker = CheckReport::tracker("retract identities");
    'outer: for n in 1..=max_n {
        if 2 * n + 1 > x.level() {
            break;
        }
        tracker.record(2 * n + 1);
        let up = vec![Op::Degeneracy(0); n];
        let identity: Vec<usize> = (0..x.cell_count(n + 1)).collect();
        let mut first = up.clone();
        first.extend(vec![Op::Face(1); n]);
        let mut second = up;
        second.extend(vec![Op::Face(2); n - 1]);
        second.push(Op::Face(0));
        for (word, name) in [(first, format!("d_1^{n} s_0^{n} = id")), (second, format!("d_0 d_2^{} s_0^{n} = id", n - 1))] {
            let table = x.apply_ops(n + 1, &word)?;
            if let Some(k) = (0..table.len()).find(|&k| table[k] != identity[k]) {
                tracker.fail(Witness::Identity(IdentityViolation {
                    identity: name,
                    level: n + 1,
                    cell: x.cells(n + 1)[k].clone(),
                    lhs: x.cells(n + 1)[table[k]].clone(),
                    rhs: x.cells(n + 1)[k].clone(),
                }));
                break 'outer;
            }
        }
    }
    Ok(tracker.finish())
}

/// Level-wise tables of a map into `sd X`.
pub type ImageTables = Vec<Vec<usize>>;

/// The two subcategory inclusions into `sd X` induced by the two comparison
/// maps, as level-wise image tables. No factorization axioms are checked.
pub fn sd_subcategory_images(x: &TruncatedSSet) -> Result<(ImageTables, ImageTables)> {
    let bottom = map_decbot_to_sd(x)?;
    let top = map_dectop_op_to_sd(x)?;
    Ok((bottom.components().to_vec(), top.components().to_vec()))
}
