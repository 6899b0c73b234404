//! Decompositions of odd-regular graphs via the prism construction.
//!
//! For a (2k+1)-regular graph G with two disjoint perfect matchings, the
//! cartesian product H = G x K2 is (2k+2)-regular. Removing the spanning
//! 2-factor F formed by both matchings in both copies leaves a 2k-regular
//! graph which carries an Eulerian orientation; the cycle pendant
//! assignment then yields stars on F. Restricting to the first copy drops
//! the rung pendants, so a star keeps either k1 or k1 - 1 pendants on its
//! X side once two repair passes (below) push all rungs into X sets, at
//! most one per star.

use crate::decompose::cycle::{assign_cycle_pendants, CycleAssignment, DEFAULT_ASSIGN_BUDGET};
use crate::error::{Error, Result};
use crate::factorize::{
    eulerian_orientation, two_factorization, Matching, Orientation, TwoFactor,
};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::{find_perfect_matching, find_two_factor_direct};
use crate::star::{Decomposition, DoubleStar};
use std::collections::{BTreeMap, HashMap};

/// Diagnostics from the two-matchings pipeline, recording that each repair
/// phase reached its postcondition and how much work it took.
#[derive(Debug, Clone, Default)]
pub struct OddPipelineTrace {
    /// No star retains rung pendants in both X and Y after phase 1.
    pub no_double_rungs_after_phase1: bool,
    /// No star retains a rung pendant in Y after phase 2.
    pub no_y_rungs_after_phase2: bool,
    pub phase1_swaps: usize,
    pub phase2_swaps: usize,
}

/// Mutable per-cycle pendant sets during repair, keyed by pendant vertex
/// for O(log) membership and deterministic minimum selection.
struct CycleStars {
    verts: Vec<Vertex>,
    x: Vec<BTreeMap<Vertex, EdgeId>>,
    y: Vec<BTreeMap<Vertex, EdgeId>>,
}

impl CycleStars {
    fn from_assignment(asg: &CycleAssignment) -> Self {
        CycleStars {
            verts: asg.cycle.clone(),
            x: asg.x.iter().map(|s| s.iter().copied().collect()).collect(),
            y: asg.y.iter().map(|s| s.iter().copied().collect()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.verts.len()
    }

    fn has_rung(set: &BTreeMap<Vertex, EdgeId>, n: usize) -> bool {
        set.keys().next_back().map_or(false, |&w| w >= n)
    }
}

/// Decomposes a (2k+1)-regular graph with two disjoint perfect matchings
/// into stars of shapes S_{k1,k2} and S_{k1-1,k2}, where k1 + k2 = k.
pub fn decompose_odd_two_matchings(
    g: &Graph,
    m1: &Matching,
    m2: &Matching,
    k1: usize,
    k2: usize,
) -> Result<Decomposition> {
    decompose_odd_two_matchings_traced(g, m1, m2, k1, k2).map(|(d, _)| d)
}

/// As [`decompose_odd_two_matchings`], also returning repair diagnostics.
pub fn decompose_odd_two_matchings_traced(
    g: &Graph,
    m1: &Matching,
    m2: &Matching,
    k1: usize,
    k2: usize,
) -> Result<(Decomposition, OddPipelineTrace)> {
    let r = g.is_regular().ok_or(Error::NotOddRegular)?;
    if r % 2 == 0 || r < 3 {
        return Err(Error::NotOddRegular);
    }
    let k = (r - 1) / 2;
    if k1 == 0 || k2 == 0 || k1 + k2 != k {
        return Err(Error::BadShape);
    }
    for m in [m1, m2] {
        if !m.is_perfect(g) || m.edges().iter().any(|&e| !g.has_edge_id(e)) {
            return Err(Error::MatchingsNotDisjointPerfect);
        }
    }
    if !m1.is_disjoint_from(m2) {
        return Err(Error::MatchingsNotDisjointPerfect);
    }

    let n = g.vertex_count();
    // Orient G minus M1 Eulerian; this drives both copy-2 edge directions
    // and the rung directions below.
    let g_less_m1 = g.remove_edges(m1.edges())?;
    let o0 = eulerian_orientation(&g_less_m1)?;

    let (h, _map) = g.cartesian_product_k2();
    let live = g.live_edge_ids();
    let m = live.len();
    let pos_of: HashMap<EdgeId, usize> =
        live.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // F = both matchings in both copies; its copy-1 part is a 2-factor of G.
    let mut f_ids: Vec<EdgeId> = Vec::with_capacity(2 * n);
    for &e in m1.edges().iter().chain(m2.edges().iter()) {
        f_ids.push(pos_of[&e]);
        f_ids.push(m + pos_of[&e]);
    }
    let hf = h.remove_edges(&f_ids)?;

    // Orientation of H minus F: copy 1 follows the Eulerian orientation of
    // G minus M1 (M2 edges of copy 1 are absent from H minus F... they are
    // in F), copy 2 reverses it, and the rung at v points away from copy 1
    // exactly when v's M2 edge leaves v. This balances every vertex to
    // out-degree k: in copy 1, v loses its outgoing or incoming M2 arc and
    // the rung compensates in the same direction; in copy 2 the reversal
    // swaps the roles.
    let mut tails: Vec<Option<Vertex>> = vec![None; hf.edge_id_bound()];
    for &eid in &hf.live_edge_ids() {
        if eid < m {
            tails[eid] = Some(o0.tail(live[eid]).expect("non-matching edge is oriented"));
        } else if eid < 2 * m {
            let t = o0.tail(live[eid - m]).expect("non-matching edge is oriented");
            let (p, q) = g.endpoints(live[eid - m]).expect("live edge");
            let head = if p == t { q } else { p };
            tails[eid] = Some(head + n);
        } else {
            let v = eid - 2 * m;
            let (_, me) = m2.partner(g, v).expect("perfect matching covers v");
            let t = o0.tail(me).expect("M2 edge is oriented in G minus M1");
            tails[eid] = Some(if t == v { v } else { v + n });
        }
    }
    let o = Orientation::from_tails(&hf, tails);
    debug_assert!((0..2 * n).all(|v| o.out_degree(v) == k));

    // Pendant assignment per cycle of the copy-1 part of F (labels < n are
    // shared between G and copy 1 of H).
    let f1: Vec<EdgeId> = m1.edges().iter().chain(m2.edges().iter()).copied().collect();
    let tf = TwoFactor::from_edges(g, f1)?;
    let mut cycles: Vec<CycleStars> = Vec::with_capacity(tf.cycles.len());
    for cyc in &tf.cycles {
        let asg = assign_cycle_pendants(&o, cyc, k1, k2, DEFAULT_ASSIGN_BUDGET)?;
        cycles.push(CycleStars::from_assignment(&asg));
    }

    let mut trace = OddPipelineTrace::default();
    let cap = 4 * hf.edge_count();
    let mut steps = 0usize;

    // Phase 1: no star may hold rungs in both X and Y. Swapping the Y rung
    // of such a star with an element of the next X set present only there
    // moves the rung into the next X set; the receiving star cannot itself
    // carry an X rung (its X partitions the same out-neighborhood as the
    // donated Y set, which held the rung), so doubles strictly decrease.
    loop {
        let mut found = false;
        for cs in cycles.iter_mut() {
            for j in 0..cs.len() {
                if CycleStars::has_rung(&cs.x[j], n) && CycleStars::has_rung(&cs.y[j], n) {
                    rung_into_next_x(cs, j, n)?;
                    steps += 1;
                    if steps > cap {
                        return Err(Error::RepairLoopExceeded);
                    }
                    found = true;
                }
            }
        }
        if !found {
            break;
        }
    }
    trace.phase1_swaps = steps;
    trace.no_double_rungs_after_phase1 = cycles.iter().all(|cs| {
        (0..cs.len())
            .all(|j| !(CycleStars::has_rung(&cs.x[j], n) && CycleStars::has_rung(&cs.y[j], n)))
    });

    // Phase 2: eliminate rungs from Y sets entirely. Each repair either
    // swaps the rung directly into the next X set, or rotates a pendant
    // vertex backwards around the cycle until the direct swap unblocks.
    // Every repair strictly decreases the number of Y-resident rungs: the
    // rotation moves only non-rung vertices, and the final swap parks the
    // rung in an X set whose star has no Y rung to re-trigger on it.
    let before = steps;
    loop {
        let mut found = false;
        for cs in cycles.iter_mut() {
            for j in 0..cs.len() {
                if CycleStars::has_rung(&cs.y[j], n) {
                    clear_y_rung(cs, j, n, cap, &mut steps)?;
                    found = true;
                }
            }
        }
        if !found {
            break;
        }
    }
    trace.phase2_swaps = steps - before;
    trace.no_y_rungs_after_phase2 =
        cycles.iter().all(|cs| (0..cs.len()).all(|j| !CycleStars::has_rung(&cs.y[j], n)));
    if !trace.no_y_rungs_after_phase2 {
        return Err(Error::RepairLoopExceeded);
    }

    let stars = restrict_to_base(g, &cycles, n, m, &live)?;
    let shapes = [(k1, k2), (k1 - 1, k2)];
    Ok((Decomposition::new(stars, shapes, "odd-two-matchings"), trace))
}

/// Moves the rung sitting in Y_j into X_{j+1}, trading it for an element of
/// X_{j+1} absent from X_j (which always exists when X_j holds a rung,
/// since that rung is private to position j).
fn rung_into_next_x(cs: &mut CycleStars, j: usize, n: usize) -> Result<()> {
    let l = cs.len();
    let jn = (j + 1) % l;
    let rung = *cs.y[j].keys().find(|&&w| w >= n).expect("caller checked a Y rung exists");
    let swap = cs.x[jn].keys().copied().find(|w| !cs.x[j].contains_key(w));
    let t = swap.expect("X sets of equal size that differ have a one-sided element");
    let te = cs.x[jn].remove(&t).unwrap();
    let re = cs.y[j].remove(&rung).unwrap();
    cs.x[jn].insert(rung, re);
    cs.y[j].insert(t, te);
    Ok(())
}

/// Removes the rung from Y_j. Direct case: some element of X_{j+1} is
/// absent from X_j, so the phase-1 swap applies. Blocked case
/// (X_{j+1} = X_j as vertex sets): pick a vertex x present in X_j but not
/// in every preceding X set, rotate it backwards (each rotation step at
/// position i exchanges x in X_i for an element of Y_{i-1} missing from
/// Y_i, staying inside the out-neighborhood of the shared cycle vertex)
/// until x leaves X_j yet remains in X_{j+1}; then the direct swap applies
/// to x.
fn clear_y_rung(
    cs: &mut CycleStars,
    j: usize,
    n: usize,
    cap: usize,
    steps: &mut usize,
) -> Result<()> {
    let l = cs.len();
    let jn = (j + 1) % l;
    let direct = cs.x[jn].keys().copied().find(|w| !cs.x[j].contains_key(w));
    let x_rot = match direct {
        Some(t) => {
            debug_assert!(t < n, "a rung in X_{{j+1}} would also sit in X_j");
            t
        }
        None => {
            // X_{j+1} equals X_j; rotate the lowest element that stops
            // matching somewhere backwards, or any element on a full loop.
            let mut stop = j;
            loop {
                let prev = (stop + l - 1) % l;
                if prev == jn {
                    break; // all X sets along the cycle coincide
                }
                let keys_eq = cs.x[prev].len() == cs.x[j].len()
                    && cs.x[prev].keys().zip(cs.x[j].keys()).all(|(a, b)| a == b);
                if !keys_eq {
                    break;
                }
                stop = prev;
            }
            let prev = (stop + l - 1) % l;
            let pick = if prev == jn {
                cs.x[j].keys().next().copied()
            } else {
                cs.x[j].keys().copied().find(|w| !cs.x[prev].contains_key(w))
            };
            let x_rot = pick.expect("X_j is nonempty and differs from the stop set");
            debug_assert!(x_rot < n, "X rungs are position-private and cannot repeat");
            // Rotate x_rot backwards from position j until it leaves some
            // X set or completes the loop back to position j+1.
            let mut i = j;
            loop {
                let ip = (i + l - 1) % l;
                // Exchange x_rot in X_i for an element of Y_{i-1} not in
                // Y_i; both pendant sets hang from cycle vertex i.
                let y_pick = cs.y[ip]
                    .keys()
                    .copied()
                    .find(|w| !cs.y[i].contains_key(w))
                    .expect("Y sets of equal size differing in the rung have a spare");
                let xe = cs.x[i].remove(&x_rot).unwrap();
                let ye = cs.y[ip].remove(&y_pick).unwrap();
                cs.x[i].insert(y_pick, ye);
                cs.y[ip].insert(x_rot, xe);
                *steps += 1;
                if *steps > cap {
                    return Err(Error::RepairLoopExceeded);
                }
                if ip == jn || !cs.x[ip].contains_key(&x_rot) {
                    break;
                }
                i = ip;
            }
            debug_assert!(cs.x[jn].contains_key(&x_rot) && !cs.x[j].contains_key(&x_rot));
            x_rot
        }
    };
    let rung = *cs.y[j].keys().find(|&&w| w >= n).expect("caller checked a Y rung exists");
    let xe = cs.x[jn].remove(&x_rot).unwrap();
    let re = cs.y[j].remove(&rung).unwrap();
    cs.x[jn].insert(rung, re);
    cs.y[j].insert(x_rot, xe);
    *steps += 1;
    if *steps > cap {
        return Err(Error::RepairLoopExceeded);
    }
    Ok(())
}

/// Builds the copy-1 stars, dropping rung pendants (which by now only
/// appear in X sets) and translating copy-1 edge positions back to the
/// base graph's edge ids.
fn restrict_to_base(
    g: &Graph,
    cycles: &[CycleStars],
    n: usize,
    m: usize,
    live: &[EdgeId],
) -> Result<Vec<DoubleStar>> {
    let mut stars = Vec::new();
    for cs in cycles {
        let l = cs.len();
        for j in 0..l {
            let u1 = cs.verts[j];
            let u2 = cs.verts[(j + 1) % l];
            let central = g.edge_between(u1, u2).expect("2-factor edge exists in g");
            let x: Vec<(Vertex, EdgeId)> = cs.x[j]
                .iter()
                .filter(|&(&w, _)| w < n)
                .map(|(&w, &e)| {
                    debug_assert!(e < m, "copy-1 pendants use copy-1 edges");
                    (w, live[e])
                })
                .collect();
            let y: Vec<(Vertex, EdgeId)> =
                cs.y[j].iter().map(|(&w, &e)| (w, live[e])).collect();
            debug_assert!(y.iter().all(|&(w, _)| w < n), "Y sets are rung-free after repair");
            stars.push(DoubleStar { u1, u2, central, x, y });
        }
    }
    Ok(stars)
}

/// Decomposes an odd-regular graph by finding a 2-factor, lifting to the
/// K2 product, and running the pendant assignment without repairs; up to
/// one rung may then remain in each X and Y set, giving four shapes.
pub fn decompose_odd_four_shapes(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    let r = g.is_regular().ok_or(Error::NotOddRegular)?;
    if r % 2 == 0 || r < 3 {
        return Err(Error::NotOddRegular);
    }
    let k = (r - 1) / 2;
    if k1 == 0 || k2 == 0 || k1 + k2 != k {
        return Err(Error::BadShape);
    }
    // Any 2-factor works here; prefer the cheap route through a perfect
    // matching, falling back to the direct gadget search.
    let tf = match find_perfect_matching(g) {
        Some(pm) => {
            let rest = g.remove_edges(pm.edges())?;
            two_factorization(&rest)?.into_iter().next().expect("2k >= 2")
        }
        None => find_two_factor_direct(g)?.ok_or(Error::No2FactorFound)?,
    };

    let n = g.vertex_count();
    let (h, _map) = g.cartesian_product_k2();
    let live = g.live_edge_ids();
    let m = live.len();
    let pos_of: HashMap<EdgeId, usize> =
        live.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut f_ids = Vec::with_capacity(2 * tf.edges.len());
    for &e in &tf.edges {
        f_ids.push(pos_of[&e]);
        f_ids.push(m + pos_of[&e]);
    }
    let hf = h.remove_edges(&f_ids)?;
    let o = eulerian_orientation(&hf)?;

    let mut stars = Vec::new();
    for cyc in &tf.cycles {
        // Copy-2 cycles mirror copy 1 but their stars are discarded by the
        // restriction, so only the copy-1 cycles are ever assigned.
        let asg = assign_cycle_pendants(&o, cyc, k1, k2, DEFAULT_ASSIGN_BUDGET)?;
        let t = cyc.len();
        for j in 0..t {
            let u1 = cyc[j];
            let u2 = cyc[(j + 1) % t];
            let central = g.edge_between(u1, u2).expect("2-factor edge exists");
            let keep = |s: &[(Vertex, EdgeId)]| {
                s.iter()
                    .filter(|&&(w, _)| w < n)
                    .map(|&(w, e)| {
                        debug_assert!(e < m);
                        (w, live[e])
                    })
                    .collect::<Vec<_>>()
            };
            stars.push(DoubleStar { u1, u2, central, x: keep(&asg.x[j]), y: keep(&asg.y[j]) });
        }
    }
    let shapes = [(k1, k2), (k1 - 1, k2), (k1, k2 - 1), (k1 - 1, k2 - 1)];
    Ok(Decomposition::new(stars, shapes, "odd-four-shapes"))
}

/// Decomposes a (2k+1)-regular graph with a perfect matching M whose edges
/// each have at most k1 - 1 common neighbors, into S_{k1,k2} and
/// S_{k1+1,k2} with k1 + k2 = k - 1: decompose G minus M as an even-regular
/// graph, then attach each M edge as an extra X pendant at its lower
/// endpoint, swapping the upper endpoint out of any Y set that holds it.
pub fn decompose_odd_common_neighbor(
    g: &Graph,
    m: &Matching,
    k1: usize,
    k2: usize,
) -> Result<Decomposition> {
    let r = g.is_regular().ok_or(Error::NotOddRegular)?;
    if r % 2 == 0 || r < 3 {
        return Err(Error::NotOddRegular);
    }
    let k = (r - 1) / 2;
    if k1 == 0 || k2 == 0 || k1 + k2 + 1 != k {
        return Err(Error::BadShape);
    }
    if !m.is_perfect(g) || m.edges().iter().any(|&e| !g.has_edge_id(e)) {
        return Err(Error::NotPerfectMatching);
    }
    let rest = g.remove_edges(m.edges())?;
    let tf = two_factorization(&rest)?.into_iter().next().expect("2k >= 2");
    for &e in &tf.edges {
        let (u, v) = g.endpoints(e).expect("2-factor edge is live");
        if g.common_neighbors(u, v).len() > k1 - 1 {
            return Err(Error::CommonNeighborBoundViolated(u, v));
        }
    }
    let core = rest.remove_edges(&tf.edges)?;
    let o = eulerian_orientation(&core)?;

    let mut cycles: Vec<CycleStars> = Vec::new();
    let n = g.vertex_count();
    let mut pos: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); n];
    for cyc in &tf.cycles {
        let asg = assign_cycle_pendants(&o, cyc, k1, k2, DEFAULT_ASSIGN_BUDGET)?;
        for (j, &v) in cyc.iter().enumerate() {
            pos[v] = (cycles.len(), j);
        }
        cycles.push(CycleStars::from_assignment(&asg));
    }

    // Attach matching edges in ascending id order at the lower endpoint,
    // trying the other endpoint if the swap chain gets stuck there.
    let attach_ids: Vec<EdgeId> = m.edges().to_vec();
    let cap = 4 * g.edge_count();
    for e in attach_ids {
        let (p, q) = g.endpoints(e).expect("matching edge is live");
        let (a, b) = (p.min(q), p.max(q));
        if !try_attach(&mut cycles, &pos, a, b, e, cap)?
            && !try_attach(&mut cycles, &pos, b, a, e, cap)?
        {
            return Err(Error::RepairLoopExceeded);
        }
    }

    let mut stars = Vec::new();
    for cs in &cycles {
        let l = cs.len();
        for j in 0..l {
            let u1 = cs.verts[j];
            let u2 = cs.verts[(j + 1) % l];
            let central = g.edge_between(u1, u2).expect("2-factor edge exists");
            stars.push(DoubleStar {
                u1,
                u2,
                central,
                x: cs.x[j].iter().map(|(&w, &e)| (w, e)).collect(),
                y: cs.y[j].iter().map(|(&w, &e)| (w, e)).collect(),
            });
        }
    }
    Ok(Decomposition::new(
        stars,
        [(k1, k2), (k1 + 1, k2)],
        "odd-common-neighbor",
    ))
}

/// Attaches pendant `b` with edge `e` at `a`'s star. If `b` already hangs
/// in the Y set there, it is swapped forward into successive X sets along
/// the cycle until the position ahead of it is clear; the chain stops at
/// the latest when it reaches `a` itself. Returns false without mutating
/// anything if the chain gets stuck.
fn try_attach(
    cycles: &mut [CycleStars],
    pos: &[(usize, usize)],
    a: Vertex,
    b: Vertex,
    e: EdgeId,
    cap: usize,
) -> Result<bool> {
    let (ci, p) = pos[a];
    let cs = &mut cycles[ci];
    let l = cs.len();
    // Work on copies so a stuck chain leaves the assignment untouched.
    let mut x = cs.x.clone();
    let mut y = cs.y.clone();
    let mut j = p;
    let mut guard = 0usize;
    while y[j].contains_key(&b) {
        let jn = (j + 1) % l;
        let swap = match x[jn].keys().copied().find(|w| !x[j].contains_key(w) && *w != b) {
            Some(w) => w,
            None => return Ok(false),
        };
        let se = x[jn].remove(&swap).unwrap();
        let be = y[j].remove(&b).unwrap();
        x[jn].insert(b, be);
        y[j].insert(swap, se);
        j = jn;
        guard += 1;
        if guard > cap {
            return Err(Error::RepairLoopExceeded);
        }
    }
    if x[p].contains_key(&b) {
        return Ok(false);
    }
    x[p].insert(b, e);
    cs.x = x;
    cs.y = y;
    Ok(true)
}

/// Decomposes an odd-regular triangle-free graph by finding a perfect
/// matching and delegating to the common-neighbor construction (adjacent
/// vertices in a triangle-free graph share no neighbors at all).
pub fn decompose_odd_triangle_free(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let pm = find_perfect_matching(g).ok_or(Error::NoPerfectMatching)?;
    let d = decompose_odd_common_neighbor(g, &pm, k1, k2)?;
    Ok(Decomposition::new(d.stars, [(k1, k2), (k1 + 1, k2)], "odd-triangle-free"))
}

/// Decomposes a (2k+1)-regular graph given a 1-factorization, when
/// r = 2(k1+k2) + 1 divides 2k+1: bundle r consecutive 1-factors into
/// r-regular spanning pieces and run the two-matchings construction on
/// each, seeding it with the bundle's first two factors.
pub fn decompose_odd_one_factorable(
    g: &Graph,
    factors: &[Matching],
    k1: usize,
    k2: usize,
) -> Result<Decomposition> {
    let reg = g.is_regular().ok_or(Error::NotOddRegular)?;
    if reg % 2 == 0 || reg < 3 {
        return Err(Error::NotOddRegular);
    }
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    crate::factorize::validate_one_factorization(g, factors)?;
    let r = 2 * (k1 + k2) + 1;
    if reg % r != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let mut stars = Vec::new();
    for bundle in factors.chunks(r) {
        let keep: Vec<EdgeId> = bundle.iter().flat_map(|f| f.edges().iter().copied()).collect();
        let piece = g.keep_edges(&keep)?;
        let d = decompose_odd_two_matchings(&piece, &bundle[0], &bundle[1], k1, k2)?;
        stars.extend(d.stars);
    }
    Ok(Decomposition::new(stars, [(k1, k2), (k1 - 1, k2)], "odd-one-factorable"))
}
