use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Capacity large enough to never be part of a minimum cut in the graphs
/// built here.
pub const INFINITE: u64 = u64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    residual: u64,
    rev: usize,
}

/// Undirected graph with integer capacities, for s-t minimum cuts.
#[derive(Clone, Debug, Default)]
pub struct FlowGraph {
    adj: Vec<Vec<Arc>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    /// Vertices reachable from the source in the final residual graph.
    pub source_side: Vec<bool>,
}

impl MinCut {
    pub fn source_vertices(&self) -> Vec<usize> {
        (0..self.source_side.len()).filter(|&v| self.source_side[v]).collect()
    }
}

impl FlowGraph {
    pub fn new(n: usize) -> Self {
        FlowGraph { adj: vec![Vec::new(); n] }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_edge_with_capacity(u, v, 1);
    }

    pub fn add_edge_with_capacity(&mut self, u: usize, v: usize, cap: u64) {
        let (iu, iv) = (self.adj[u].len(), self.adj[v].len() + usize::from(u == v));
        self.adj[u].push(Arc { to: v, residual: cap, rev: iv });
        self.adj[v].push(Arc { to: u, residual: cap, rev: iu });
    }
}

/// Maximum s-t flow by shortest augmenting paths; returns the cut value
/// and the residual-reachable source side.
pub fn max_flow_min_cut(graph: &FlowGraph, s: usize, t: usize) -> Result<MinCut> {
    let n = graph.len();
    for v in [s, t] {
        if v >= n {
            return Err(Error::MissingFlowVertex(v));
        }
    }
    if s == t {
        return Err(Error::SourceIsSink);
    }
    let mut g = graph.clone();
    let mut value: u64 = 0;
    loop {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for (i, a) in g.adj[u].iter().enumerate() {
                if a.residual > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    parent[a.to] = Some((u, i));
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[t] {
            return Ok(MinCut { value, source_side: seen });
        }
        let mut bottleneck = u64::MAX;
        let mut v = t;
        while let Some((u, i)) = parent[v] {
            bottleneck = bottleneck.min(g.adj[u][i].residual);
            v = u;
        }
        let mut v = t;
        while let Some((u, i)) = parent[v] {
            g.adj[u][i].residual -= bottleneck;
            let rev = g.adj[u][i].rev;
            g.adj[v][rev].residual += bottleneck;
            v = u;
        }
        value += bottleneck;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parallel_edges() {
        let mut g = FlowGraph::new(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        assert_eq!(max_flow_min_cut(&g, 0, 1).unwrap().value, 2);
    }

    #[test]
    fn path_cut_is_residual_reachable_side() {
        let mut g = FlowGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        let cut = max_flow_min_cut(&g, 0, 2).unwrap();
        assert_eq!(cut.value, 1);
        assert_eq!(cut.source_vertices(), vec![0]);
    }

    #[test]
    fn grid_corner_to_corner() {
        let mut g = FlowGraph::new(9);
        for r in 0..3 {
            for c in 0..3 {
                let v = r * 3 + c;
                if c < 2 {
                    g.add_edge(v, v + 1);
                }
                if r < 2 {
                    g.add_edge(v, v + 3);
                }
            }
        }
        assert_eq!(max_flow_min_cut(&g, 0, 8).unwrap().value, 2);
        assert_eq!(brute_force_cut(&edges_of(&g), 9, 0, 8), 2);
    }

    #[test]
    fn errors() {
        let g = FlowGraph::new(2);
        assert_eq!(max_flow_min_cut(&g, 0, 5), Err(Error::MissingFlowVertex(5)));
        assert_eq!(max_flow_min_cut(&g, 1, 1), Err(Error::SourceIsSink));
    }

    fn edges_of(g: &FlowGraph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, arcs) in g.adj.iter().enumerate() {
            for a in arcs {
                if u < a.to {
                    out.push((u, a.to));
                }
            }
        }
        out
    }

    /// Enumerates every vertex bipartition separating s from t.
    fn brute_force_cut(edges: &[(usize, usize)], n: usize, s: usize, t: usize) -> u64 {
        let mut best = u64::MAX;
        for mask in 0u32..(1 << n) {
            if mask & (1 << s) == 0 || mask & (1 << t) != 0 {
                continue;
            }
            let side = |v: usize| mask & (1 << v) != 0;
            let cut = edges.iter().filter(|&&(a, b)| side(a) != side(b)).count() as u64;
            best = best.min(cut);
        }
        best
    }

    #[test]
    fn max_flow_equals_min_cut_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let m = rng.gen_range(0..=3 * n);
            let mut g = FlowGraph::new(n);
            for _ in 0..m {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if a != b {
                    g.add_edge(a, b);
                }
            }
            let cut = max_flow_min_cut(&g, 0, n - 1).unwrap();
            let edges = edges_of(&g);
            assert_eq!(cut.value, brute_force_cut(&edges, n, 0, n - 1));
            let crossing = edges.iter().filter(|&&(a, b)| cut.source_side[a] != cut.source_side[b]).count();
            assert_eq!(crossing as u64, cut.value);
            assert!(cut.source_side[0] && !cut.source_side[n - 1]);
        }
    }
}
