//! Canonical labelling for small graphs by colour refinement with
//! individualisation. Used only to deduplicate the built-in generator's output.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Largest order whose upper triangle fits in one `u64` code.
pub const MAX_CANON_VERTICES: usize = 11;

/// Refines `colours` to the coarsest equitable partition finer than it.
/// Colours are dense ranks `0..k`, and the relative order of existing cells is kept.
fn refine(g: &Graph, colours: &mut [usize]) {
    let n = colours.len();
    let mut cells = usize::MAX;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colours[sigs[i].2] = rank;
        }
        let next = count_cells(colours);
        if next == cells {
            return;
        }
        cells = next;
    }
}

fn count_cells(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |m| m + 1)
}

/// Upper-triangle code of `g` relabelled so that vertex `v` sits at `pos[v]`.
/// Earlier pairs (column-major, as in graph6) are more significant.
fn code_for(g: &Graph, pos: &[usize]) -> u64 {
    let n = pos.len();
    let mut at = vec![0usize; n];
    for (v, &p) in pos.iter().enumerate() {
        at[p] = v;
    }
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(at[i], at[j]));
        }
    }
    code
}

fn search(g: &Graph, colours: &[usize], best: &mut Option<(u64, Vec<usize>)>) {
    let n = colours.len();
    let k = count_cells(colours);
    if k == n {
        let code = code_for(g, colours);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colours.to_vec()));
        }
        return;
    }
    let mut sizes = vec![0usize; k];
    for &c in colours {
        sizes[c] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("non-discrete partition");
    for v in (0..n).filter(|&v| colours[v] == target) {
        let mut next: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(u, &c)| match c {
                c if c < target || (c == target && u == v) => 2 * c,
                c => 2 * c + 1,
            })
            .collect();
        refine(g, &mut next);
        search(g, &next, best);
    }
}

/// Canonical code and the labelling attaining it: `labelling[v]` is the new
/// position of vertex `v`. Isomorphic graphs of equal order share the code.
///
/// # Panics
/// When the order exceeds [`MAX_CANON_VERTICES`].
pub fn canonical_labelling(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_CANON_VERTICES, "canonical codes are limited to {MAX_CANON_VERTICES} vertices");
    let mut colours = vec![0usize; n];
    refine(g, &mut colours);
    let mut best = None;
    search(g, &colours, &mut best);
    best.unwrap_or((0, Vec::new()))
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_labelling(g).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, labelling) = canonical_labelling(g);
    let mut order = vec![0usize; labelling.len()];
    for (v, &p) in labelling.iter().enumerate() {
        order[p] = v;
    }
    g.permuted(&order)
}
