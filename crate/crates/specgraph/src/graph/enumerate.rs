//! Exhaustive enumeration of connected graphs on up to seven vertices, one
//! representative per isomorphism class.
//!
//! A graph on `n <= 7` vertices is packed into the upper-triangle bit mask
//! `pos(i,j) = j(j-1)/2 + i` (the graph6 bit order). The canonical form of
//! a mask is the minimum, over all n! relabelings, of the bit string read
//! in that order; the representative emitted per class is the mask that
//! equals its own canonical form. The minimum is found by assigning one
//! vertex image at a time and pruning any branch whose completed columns
//! already exceed the best known prefix, which is exact and fast at this
//! size.

use super::{Graph, GraphError};
use crate::par;

/// Brute-force isomorphism classification stays feasible up to here.
pub const MAX_ENUM_VERTICES: usize = 7;

fn pair_pos(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn mask_from_graph(g: &Graph) -> u32 {
    let n = g.vertex_count();
    let mut mask = 0u32;
    for j in 1..n {
        for i in 0..j {
            if g.is_edge(i, j) {
                mask |= 1 << pair_pos(i, j);
            }
        }
    }
    mask
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_pos(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("mask encodes a simple graph")
}

/// Per-vertex neighbor bit masks for a packed graph.
fn neighbor_masks(n: usize, mask: u32) -> [u8; 8] {
    let mut nb = [0u8; 8];
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_pos(i, j) & 1 == 1 {
                nb[i] |= 1 << j;
                nb[j] |= 1 << i;
            }
        }
    }
    nb
}

fn is_connected_mask(n: usize, mask: u32) -> bool {
    if n <= 1 {
        return true;
    }
    let nb = neighbor_masks(n, mask);
    let all = (1u8 << n) - 1;
    let mut seen = 1u8;
    loop {
        let mut next = seen;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= nb[v];
        }
        if next == seen {
            return seen == all;
        }
        seen = next;
    }
}

/// Canonical form of a packed graph: the minimum relabeled mask.
///
/// Columns are decided one vertex image at a time. `best[j]` holds column
/// `j` of the smallest completed or partially-committed relabeling; a
/// branch dies as soon as its freshly completed column exceeds it.
#[allow(clippy::needless_range_loop)]
fn canonical_mask(n: usize, mask: u32) -> u32 {
    let nb = neighbor_masks(n, mask);
    let mut best = [u32::MAX; 8];
    let mut perm = [0usize; 8];
    let mut used = [false; 8];

    fn dfs(
        n: usize,
        nb: &[u8; 8],
        level: usize,
        perm: &mut [usize; 8],
        used: &mut [bool; 8],
        best: &mut [u32; 8],
    ) {
        if level == n {
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // column `level`: bit for (i, level) with i = 0 most significant
            let mut col = 0u32;
            for &p in perm.iter().take(level) {
                col = (col << 1) | u32::from(nb[v] >> p & 1 == 1);
            }
            if col > best[level] {
                continue;
            }
            if col < best[level] {
                best[level] = col;
                for b in best.iter_mut().take(n).skip(level + 1) {
                    *b = u32::MAX;
                }
            }
            perm[level] = v;
            used[v] = true;
            dfs(n, nb, level + 1, perm, used, best);
            used[v] = false;
        }
    }

    dfs(n, &nb, 0, &mut perm, &mut used, &mut best);

    let mut out = 0u32;
    for j in 1..n {
        for i in 0..j {
            // best[j] holds column bits with i = 0 at the top
            if best[j] >> (j - 1 - i) & 1 == 1 {
                out |= 1 << pair_pos(i, j);
            }
        }
    }
    out
}

/// Canonical upper-triangle bit mask of `g`, comparable across relabelings:
/// two graphs on the same (small) vertex count are isomorphic iff their
/// canonical forms agree.
pub fn canonical_form(g: &Graph) -> Result<u32, GraphError> {
    let n = g.vertex_count();
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(GraphError::OutOfDomain(format!(
            "canonical form requires 1 <= n <= {MAX_ENUM_VERTICES}, got {n}"
        )));
    }
    Ok(canonical_mask(n, mask_from_graph(g)))
}

fn enumerate_masks<F>(n: usize, scan: F) -> Result<Vec<Graph>, GraphError>
where
    F: Fn(usize, usize) -> Vec<Vec<u32>>,
{
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(GraphError::OutOfDomain(format!(
            "enumeration requires 1 <= n <= {MAX_ENUM_VERTICES}, got {n}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let total = 1usize << bits;
    // split the mask space so chunks can scan independently; emitting only
    // masks equal to their own canonical form needs no cross-chunk dedup
    let chunks = if total >= 1 << 12 { 256 } else { 1 };
    let found = scan(total, chunks);
    Ok(found
        .into_iter()
        .flatten()
        .map(|mask| graph_from_mask(n, mask))
        .collect())
}

fn scan_chunk(n: usize, total: usize, chunks: usize, chunk: usize) -> Vec<u32> {
    let lo = total * chunk / chunks;
    let hi = total * (chunk + 1) / chunks;
    (lo..hi)
        .filter_map(|mask| {
            let mask = mask as u32;
            (is_connected_mask(n, mask) && canonical_mask(n, mask) == mask).then_some(mask)
        })
        .collect()
}

/// All connected graphs on `n <= 7` vertices, one per isomorphism class,
/// in ascending canonical-mask order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate_masks(n, |total, chunks| {
        par::map_range(0..chunks, |c| scan_chunk(n, total, chunks, c))
    })
}

/// Sequential twin of [`enumerate_connected`].
pub fn enumerate_connected_seq(n: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate_masks(n, |total, chunks| {
        par::map_range_seq(0..chunks, |c| scan_chunk(n, total, chunks, c))
    })
}
