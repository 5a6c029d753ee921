//! Deliberately simple exhaustive reference implementations.
//!
//! These exist to cross-check the blossom matcher and the branch-and-bound
//! solver on small instances and share no search logic with them: plain
//! bitmask recursion over subsets. Anything here is exponential and only
//! meant for graphs of roughly 20 vertices or fewer.

use std::collections::HashMap;

use crate::flower::{Graph, Vertex};

/// Maximum matching size by memoized recursion over vertex bitmasks.
/// `adj_mask[v]` holds the neighbor bits of `v`; at most 24 vertices.
pub fn exhaustive_max_matching(adj_mask: &[u32]) -> usize {
    assert!(adj_mask.len() <= 24);
    let full: u32 = if adj_mask.is_empty() {
        0
    } else {
        (1u32 << adj_mask.len()) - 1
    };
    let mut memo = HashMap::new();
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let v = mask.trailing_zeros();
        let rest = mask & !(1 << v);
        // leave v unmatched
        let mut best = go(rest, adj, memo);
        // or match v with any remaining neighbor
        let mut partners = adj[v as usize] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(mask, best);
        best
    }
    go(full, adj_mask, &mut memo)
}

/// Exact minimum k-distance paired domination by subset enumeration in
/// lexicographic order; returns the optimum and the lexicographically
/// least witness member set. At most 24 vertices.
pub fn exhaustive_min_paired(g: &Graph, k: u32) -> (u64, Vec<Vertex>) {
    let vcount = g.vertex_count();
    assert!(vcount <= 24, "exhaustive oracle is for small instances");
    let dist: Vec<Vec<u32>> = (0..vcount).map(|v| g.distances_from(v)).collect();
    let adj_mask: Vec<u32> = (0..vcount)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();

    let dominates = |members: &[usize]| -> bool {
        (0..vcount).all(|w| members.iter().any(|&d| dist[d][w] <= k))
    };
    let perfectly_matched = |members: &[usize]| -> bool {
        let local: Vec<u32> = members
            .iter()
            .map(|&a| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| adj_mask[a] >> b & 1 == 1)
                    .fold(0u32, |m, (bi, _)| m | 1 << bi)
            })
            .collect();
        exhaustive_max_matching(&local) * 2 == members.len()
    };

    fn combos(
        from: usize,
        left: usize,
        vcount: usize,
        current: &mut Vec<usize>,
        accept: &impl Fn(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        if left == 0 {
            return accept(current).then(|| current.clone());
        }
        for v in from..=vcount.saturating_sub(left) {
            current.push(v);
            if let Some(hit) = combos(v + 1, left - 1, vcount, current, accept) {
                return Some(hit);
            }
            current.pop();
        }
        None
    }

    let accept = |members: &[usize]| dominates(members) && perfectly_matched(members);
    let mut size = 2;
    loop {
        assert!(
            size <= vcount,
            "every flower graph has a paired dominating set"
        );
        if let Some(members) = combos(0, size, vcount, &mut Vec::new(), &accept) {
            return (
                size as u64,
                members.into_iter().map(|i| g.vertex_at(i)).collect(),
            );
        }
        size += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flower::{build_flower, FlowerParams};

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    #[test]
    fn matcher_known_values() {
        assert_eq!(
            exhaustive_max_matching(&masks(3, &[(0, 1), (1, 2), (2, 0)])),
            1
        );
        assert_eq!(
            exhaustive_max_matching(&masks(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])),
            2
        );
        assert_eq!(exhaustive_max_matching(&masks(4, &[])), 0);
        assert_eq!(exhaustive_max_matching(&[]), 0);
    }

    #[test]
    fn min_paired_small_flowers() {
        let g = build_flower(FlowerParams::new(3, 3).unwrap());
        let (opt, members) = exhaustive_min_paired(&g, 1);
        assert_eq!(opt, 2);
        assert_eq!(members, vec![Vertex::Hub(1), Vertex::Hub(2)]);

        let g = build_flower(FlowerParams::new(3, 4).unwrap());
        assert_eq!(exhaustive_min_paired(&g, 1).0, 4);

        let g = build_flower(FlowerParams::new(4, 4).unwrap());
        assert_eq!(exhaustive_min_paired(&g, 2).0, 2);
    }
}
