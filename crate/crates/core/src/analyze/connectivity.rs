use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Flow network with every vertex `x` split into `x_in -> x_out` of capacity 1
/// (unbounded for the terminals).
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph, s: usize, t: usize) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * g.order()],
        };
        for x in 0..g.order() {
            let c = if x == s || x == t {
                g.order() as i32
            } else {
                1
            };
            net.arc(2 * x, 2 * x + 1, c);
        }
        for (a, b) in g.edges() {
            net.arc(2 * a + 1, 2 * b, 1);
            net.arc(2 * b + 1, 2 * a, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, c: i32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(c);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, src: usize, dst: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == dst {
                        let mut y = dst;
                        while y != src {
                            let a = via[y];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            y = self.head[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Maximum number of internally disjoint `s`-`t` paths, for nonadjacent
/// `s != t`, computed up to `limit`.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

/// Vertex connectivity κ. A complete graph on `n` vertices gives `n - 1`.
///
/// Some minimum cut either avoids a fixed vertex `v`, and then separates `v`
/// from a non-neighbor, or contains `v`, and then separates two neighbors of
/// `v`. So it is enough to try those pairs.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let v = (0..n).min_by_key(|&x| (g.degree(x), x)).expect("non-empty");
    let mut best = g.degree(v);
    for w in (0..n).filter(|&w| w != v && !g.has_edge(v, w)) {
        best = best.min(local_connectivity(g, v, w, best));
    }
    let nb = g.neighbors(v);
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(local_connectivity(g, x, y, best));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn small_cases() {
        assert_eq!(vertex_connectivity(&cycle(6)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&SimpleGraph::complete(5)).unwrap(), 4);
        let path = SimpleGraph::new(3, [(0, 1), (1, 2)]);
        assert_eq!(vertex_connectivity(&path).unwrap(), 1);
        assert!(matches!(
            vertex_connectivity(&SimpleGraph::new(2, [])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn octahedron_is_four_connected() {
        let edges = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| v != u + 3);
        let g = SimpleGraph::new(6, edges);
        assert_eq!(g.size(), 12);
        assert_eq!(vertex_connectivity(&g).unwrap(), 4);
    }
}
