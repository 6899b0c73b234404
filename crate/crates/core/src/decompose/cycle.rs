//! Pendant assignment along one cycle of a 2-factor.
//!
//! Setting: a 2k'-regular graph minus a 2-factor F carries an Eulerian
//! orientation, so every vertex has out-degree k1 + k2 there. Walking a
//! cycle v_1, ..., v_t of F, the out-neighborhood of each v_j must be split
//! into X_j (pendants of the star centered on edge v_j v_{j+1}) and Y_{j-1}
//! (pendants of the previous star, hanging from v_j). The only coupling
//! between consecutive positions is that a vertex placed in X_j and also
//! out-adjacent to v_{j+1} must be placed in X_{j+1}, otherwise the star on
//! v_j v_{j+1} would reference it twice.

use crate::error::{Error, Result};
use crate::factorize::Orientation;
use crate::graph::{EdgeId, Vertex};
use std::collections::BTreeSet;

pub const DEFAULT_ASSIGN_BUDGET: usize = 1_000_000;

/// Per-position pendant sets for one cycle. `x[j]` hangs from `cycle[j]`,
/// `y[j]` hangs from `cycle[(j+1) % t]`; together the star at position j is
/// (cycle[j], cycle[j+1], x[j], y[j]).
#[derive(Debug, Clone)]
pub struct CycleAssignment {
    pub cycle: Vec<Vertex>,
    pub x: Vec<Vec<(Vertex, EdgeId)>>,
    pub y: Vec<Vec<(Vertex, EdgeId)>>,
}

/// Splits every cycle vertex's out-neighborhood into X_j of size k1 and
/// Y_{j-1} of size k2: greedy first (fill X_j avoiding the next vertex's
/// out-neighborhood), then exhaustive backtracking over split choices under
/// a node budget. The existence of a valid split is guaranteed for Eulerian
/// orientations of a regular graph minus the 2-factor, so backtracking
/// terminates with success on valid input.
pub fn assign_cycle_pendants(
    o: &Orientation,
    cycle: &[Vertex],
    k1: usize,
    k2: usize,
    budget: usize,
) -> Result<CycleAssignment> {
    let t = cycle.len();
    assert!(t >= 3, "a 2-factor cycle has at least 3 vertices");
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    // out[j]: (vertex, edge) out-neighborhood of cycle[j], sorted by vertex.
    let mut out: Vec<Vec<(Vertex, EdgeId)>> = Vec::with_capacity(t);
    for &v in cycle {
        if o.out_degree(v) != k1 + k2 {
            return Err(Error::BadShape);
        }
        let mut a = o.out_neighbors(v).to_vec();
        a.sort_unstable();
        out.push(a);
    }
    let vset: Vec<BTreeSet<Vertex>> =
        out.iter().map(|a| a.iter().map(|&(w, _)| w).collect()).collect();

    let mut chosen: Vec<BTreeSet<Vertex>> = Vec::with_capacity(t);
    let mut nodes = budget;
    if !search(&out, &vset, k1, t, &mut chosen, &mut nodes)? {
        // The theorem guarantees a split exists; reaching this means the
        // orientation violated the preconditions.
        return Err(Error::SearchBudgetExceeded(cycle[0]));
    }

    let edge_of = |j: usize, w: Vertex| -> EdgeId {
        out[j].iter().find(|&&(v, _)| v == w).expect("chosen vertex is an out-neighbor").1
    };
    let x: Vec<Vec<(Vertex, EdgeId)>> = (0..t)
        .map(|j| chosen[j].iter().map(|&w| (w, edge_of(j, w))).collect())
        .collect();
    let y: Vec<Vec<(Vertex, EdgeId)>> = (0..t)
        .map(|j| {
            let jn = (j + 1) % t;
            out[jn]
                .iter()
                .filter(|&&(w, _)| !chosen[jn].contains(&w))
                .copied()
                .collect()
        })
        .collect();
    debug_assert!(y.iter().all(|s| s.len() == k2));
    debug_assert!((0..t).all(|j| {
        x[j].iter().all(|&(w, _)| !y[j].iter().any(|&(w2, _)| w2 == w))
    }));
    Ok(CycleAssignment { cycle: cycle.to_vec(), x, y })
}

/// Depth-first search over X_j choices. The first branch explored at each
/// depth equals the greedy choice (forced elements plus lowest candidates
/// outside the next out-neighborhood), so the greedy solution, when valid,
/// is found without backtracking.
fn search(
    out: &[Vec<(Vertex, EdgeId)>],
    vset: &[BTreeSet<Vertex>],
    k1: usize,
    t: usize,
    chosen: &mut Vec<BTreeSet<Vertex>>,
    nodes: &mut usize,
) -> Result<bool> {
    let j = chosen.len();
    if j == t {
        return Ok(true);
    }
    if *nodes == 0 {
        return Err(Error::SearchBudgetExceeded(0));
    }
    *nodes -= 1;

    // Elements of X_{j-1} that are out-neighbors of v_j must enter X_j.
    let forced: BTreeSet<Vertex> = if j == 0 {
        BTreeSet::new()
    } else {
        chosen[j - 1].intersection(&vset[j]).copied().collect()
    };
    // At the last position, nothing already rejected from X_0 may be chosen.
    let avoid: BTreeSet<Vertex> = if j == t - 1 {
        vset[0].difference(&chosen[0]).copied().collect()
    } else {
        BTreeSet::new()
    };
    if forced.len() > k1 || forced.intersection(&avoid).next().is_some() {
        return Ok(false);
    }
    let need = k1 - forced.len();
    // Candidate fill order: vertices absent from the next out-neighborhood
    // first, each group ascending.
    let next = (j + 1) % t;
    let mut cands: Vec<Vertex> = out[j]
        .iter()
        .map(|&(w, _)| w)
        .filter(|w| !forced.contains(w) && !avoid.contains(w))
        .collect();
    cands.sort_unstable_by_key(|w| (vset[next].contains(w), *w));
    if cands.len() < need {
        return Ok(false);
    }

    let mut pick = vec![0usize; 0];
    combos(&cands, need, 0, &mut pick, &mut |picked| {
        let mut set = forced.clone();
        set.extend(picked.iter().copied());
        chosen.push(set);
        let ok = search(out, vset, k1, t, chosen, nodes)?;
        if !ok {
            chosen.pop();
        }
        Ok(ok)
    })
}

fn combos(
    cands: &[Vertex],
    need: usize,
    from: usize,
    pick: &mut Vec<Vertex>,
    f: &mut impl FnMut(&[Vertex]) -> Result<bool>,
) -> Result<bool> {
    if pick.len() == need {
        return f(pick);
    }
    let remaining = need - pick.len();
    for i in from..cands.len() {
        if cands.len() - i < remaining {
            break;
        }
        pick.push(cands[i]);
        if combos(cands, need, i + 1, pick, f)? {
            return Ok(true);
        }
        pick.pop();
    }
    Ok(false)
}
