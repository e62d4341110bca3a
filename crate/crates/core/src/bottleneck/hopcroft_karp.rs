//! Maximum bipartite matching.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Maximum matching in a bipartite graph with `adj[u]` listing the right
/// vertices adjacent to left vertex `u` (in `0..n_right`).
///
/// Returns `mate[u]`, the right partner of each left vertex, if any. The
/// result depends only on the order of the adjacency lists.
pub(crate) fn maximum_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut mate_l = vec![FREE; n_left];
    let mut mate_r = vec![FREE; n_right];
    let mut dist = vec![0usize; n_left];

    loop {
        // Layer the free left vertices and everything reachable by
        // alternating paths.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if mate_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..n_left {
            if mate_l[u] == FREE {
                augment(u, adj, &mut mate_l, &mut mate_r, &mut dist);
            }
        }
    }

    mate_l.into_iter().map(|v| (v != FREE).then_some(v)).collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = mate_r[v];
        let ok = w == FREE
            || (dist[w] == dist[u].wrapping_add(1) && augment(w, adj, mate_l, mate_r, dist));
        if ok {
            mate_l[u] = v;
            mate_r[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}
