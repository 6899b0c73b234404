//! Decompositions of even-regular graphs.

use crate::decompose::cycle::{assign_cycle_pendants, DEFAULT_ASSIGN_BUDGET};
use crate::error::{Error, Result};
use crate::factorize::{eulerian_orientation, split_regular_spanning, two_factorization};
use crate::graph::Graph;
use crate::star::{Decomposition, DoubleStar};

/// Decomposes a 2(k1+k2+1)-regular graph into copies of S_{k1,k2}: remove
/// one 2-factor, orient the rest Eulerian, and split each cycle vertex's
/// out-neighborhood into the pendant sets of the two incident stars.
pub fn decompose_even_regular(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if r % 2 != 0 || r == 0 {
        return Err(Error::NotEvenRegular);
    }
    if r != 2 * (k1 + k2 + 1) {
        return Err(Error::BadShape);
    }
    let f = two_factorization(g)?.into_iter().next().expect("r >= 2 yields a 2-factor");
    let rest = g.remove_edges(&f.edges)?;
    let o = eulerian_orientation(&rest)?;

    let mut stars = Vec::with_capacity(g.vertex_count());
    for cycle in &f.cycles {
        let asg = assign_cycle_pendants(&o, cycle, k1, k2, DEFAULT_ASSIGN_BUDGET)?;
        let t = cycle.len();
        for j in 0..t {
            let u1 = cycle[j];
            let u2 = cycle[(j + 1) % t];
            let central = g.edge_between(u1, u2).expect("cycle edge exists");
            stars.push(DoubleStar {
                u1,
                u2,
                central,
                x: asg.x[j].clone(),
                y: asg.y[j].clone(),
            });
        }
    }
    Ok(Decomposition::new(stars, [(k1, k2)], "even-regular"))
}

/// Decomposes a 2R-regular graph, where k1+k2+1 divides R, by splitting it
/// into 2(k1+k2+1)-regular spanning pieces and decomposing each piece.
pub fn decompose_even_divisible(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if r % 2 != 0 || r == 0 {
        return Err(Error::NotEvenRegular);
    }
    let s = k1 + k2 + 1;
    if (r / 2) % s != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let pieces = split_regular_spanning(g, &vec![2 * s; r / (2 * s)], None)?;
    let mut stars = Vec::new();
    for piece in &pieces {
        stars.extend(decompose_even_regular(piece, k1, k2)?.stars);
    }
    Ok(Decomposition::new(stars, [(k1, k2)], "even-divisible"))
}
