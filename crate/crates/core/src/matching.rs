//! Maximum-cardinality matching in general graphs.
//!
//! Edmonds' blossom contraction over an explicit adjacency list. Induced
//! subgraphs of flower graphs contain odd cycles (the hub cycle for odd `n`,
//! petal cycles for odd `m`), so bipartite matching is not enough here.
//! An exhaustive bitmask matcher lives in [`crate::oracle`] as the
//! independent cross-check for this implementation.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Returns `mate` with `mate[v] = Some(w)` iff `v` is matched to `w`.
/// The matching has maximum cardinality. `adj` must be symmetric.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut base = vec![0usize; n];

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        let finish = find_augmenting_path(adj, root, &mate, &mut parent, &mut base);
        if finish != NONE {
            // flip matched/unmatched edges along the alternating path
            let mut v = finish;
            while v != NONE {
                let pv = parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }

    mate.into_iter()
        .map(|w| if w == NONE { None } else { Some(w) })
        .collect()
}

/// Matched pairs `(a, b)` with `a < b`, sorted.
pub fn matching_pairs(mate: &[Option<usize>]) -> Vec<(usize, usize)> {
    mate.iter()
        .enumerate()
        .filter_map(|(v, w)| w.filter(|&w| v < w).map(|w| (v, w)))
        .collect()
}

fn find_augmenting_path(
    adj: &[Vec<usize>],
    root: usize,
    mate: &[usize],
    parent: &mut [usize],
    base: &mut [usize],
) -> usize {
    let n = adj.len();
    parent.fill(NONE);
    for (i, b) in base.iter_mut().enumerate() {
        *b = i;
    }
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut queue = VecDeque::new();
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // odd cycle: contract the blossom rooted at the common base
                let cur_base = blossom_base(v, to, mate, parent, base);
                let mut in_blossom = vec![false; n];
                mark_path(v, cur_base, to, mate, parent, base, &mut in_blossom);
                mark_path(to, cur_base, v, mate, parent, base, &mut in_blossom);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !in_tree[i] {
                            in_tree[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return to;
                }
                in_tree[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    NONE
}

/// Base vertex of the blossom closed by the edge `(a, b)`.
fn blossom_base(a: usize, b: usize, mate: &[usize], parent: &[usize], base: &[usize]) -> usize {
    let mut seen = vec![false; base.len()];
    let mut v = a;
    loop {
        v = base[v];
        seen[v] = true;
        if mate[v] == NONE {
            break;
        }
        v = parent[mate[v]];
    }
    let mut v = b;
    loop {
        v = base[v];
        if seen[v] {
            return v;
        }
        v = parent[mate[v]];
    }
}

fn mark_path(
    mut v: usize,
    blossom_root: usize,
    mut child: usize,
    mate: &[usize],
    parent: &mut [usize],
    base: &[usize],
    in_blossom: &mut [bool],
) {
    while base[v] != blossom_root {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}
