//! Classical connectivity kernels: disjoint-path counts via exact integral
//! max-flow, minimum cut witnesses, and the k-connectivity predicates with
//! this toolkit's small-graph conventions.
//!
//! Conventions (deliberately nonstandard, matching the definitions the rest
//! of the crate is built on): a one-vertex graph with at least k loops is
//! both k-edge- and k-vertex-connected, and a two-vertex graph with k
//! parallel edges is k-vertex-connected. The loopless one-vertex graph is
//! *not* k-edge-connected for any k, but it is "connected". Loops never
//! contribute to s-t flow.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::graph::{ColoredGraph, EdgeId, VertexId};

/// Dinic max-flow on a small integer-capacity network.
struct FlowNet {
    // arcs stored as (to, cap); residual partner is i ^ 1
    to: Vec<u32>,
    cap: Vec<i64>,
    head: Vec<Vec<u32>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet { to: Vec::new(), cap: Vec::new(), head: vec![Vec::new(); n] }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.to.push(v as u32);
        self.cap.push(cap);
        self.head[u].push(id as u32);
        self.to.push(u as u32);
        self.cap.push(0);
        self.head[v].push(id as u32 + 1);
        id
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let n = self.head.len();
        let mut flow = 0;
        while flow < limit {
            // BFS layering
            let mut level = vec![u32::MAX; n];
            level[s] = 0;
            let mut q = VecDeque::new();
            q.push_back(s);
            while let Some(u) = q.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a as usize] as usize;
                    if self.cap[a as usize] > 0 && level[v] == u32::MAX {
                        level[v] = level[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            if level[t] == u32::MAX {
                break;
            }
            let mut it = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut it);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64, level: &[u32], it: &mut [usize]) -> i64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.head[u].len() {
            let a = self.head[u][it[u]] as usize;
            let v = self.to[a] as usize;
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[a]), level, it);
                if d > 0 {
                    self.cap[a] -= d;
                    self.cap[a ^ 1] += d;
                    return d;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Vertices reachable from `s` in the residual network.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::new();
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen
    }
}

fn vertex_positions(g: &ColoredGraph) -> BTreeMap<VertexId, usize> {
    g.vertex_ids().enumerate().map(|(i, v)| (v, i)).collect()
}

/// Maximum number of pairwise edge-disjoint (arc-disjoint when directed)
/// s-t paths. Loops are ignored.
pub fn edge_disjoint_paths(g: &ColoredGraph, s: VertexId, t: VertexId, limit: u32) -> u32 {
    assert_ne!(s, t);
    let pos = vertex_positions(g);
    if !pos.contains_key(&s) || !pos.contains_key(&t) {
        return 0;
    }
    let mut net = FlowNet::new(g.num_vertices());
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let (u, v) = (pos[&e.u], pos[&e.v]);
        net.add_arc(u, v, 1);
        if !g.directed {
            net.add_arc(v, u, 1);
        }
    }
    net.max_flow(pos[&s], pos[&t], limit as i64) as u32
}

/// Maximum number of pairwise internally vertex-disjoint s-t paths. By
/// Menger this equals the minimum mixed cut separating t from s; parallel
/// s-t edges each contribute a path.
pub fn vertex_disjoint_paths(g: &ColoredGraph, s: VertexId, t: VertexId, limit: u32) -> u32 {
    assert_ne!(s, t);
    let pos = vertex_positions(g);
    if !pos.contains_key(&s) || !pos.contains_key(&t) {
        return 0;
    }
    let n = g.num_vertices();
    let big = (n + g.num_edges() + 1) as i64;
    // v_in = 2i, v_out = 2i+1
    let mut net = FlowNet::new(2 * n);
    for (x, &i) in &pos {
        let cap = if *x == s || *x == t { big } else { 1 };
        net.add_arc(2 * i, 2 * i + 1, cap);
    }
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let (u, v) = (pos[&e.u], pos[&e.v]);
        net.add_arc(2 * u + 1, 2 * v, 1);
        if !g.directed {
            net.add_arc(2 * v + 1, 2 * u, 1);
        }
    }
    net.max_flow(pos[&s] * 2 + 1, pos[&t] * 2, limit as i64) as u32
}

/// Number of connected components of the underlying undirected graph
/// (isolated vertices count; the empty graph has zero components).
pub fn component_count(g: &ColoredGraph) -> usize {
    let pos = vertex_positions(g);
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in g.edges() {
        let (a, b) = (find(&mut parent, pos[&e.u]), find(&mut parent, pos[&e.v]));
        if a != b {
            parent[a] = b;
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Connected in the inclusive sense: at most one component. Both the
/// one-vertex graph and the empty graph qualify.
pub fn is_connected(g: &ColoredGraph) -> bool {
    component_count(g) <= 1
}

fn reachable_from(g: &ColoredGraph, s: VertexId, forward: bool) -> BTreeSet<VertexId> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = g.vertex_ids().map(|v| (v, Vec::new())).collect();
    for e in g.edges() {
        if g.directed {
            if forward {
                adj.get_mut(&e.u).unwrap().push(e.v);
            } else {
                adj.get_mut(&e.v).unwrap().push(e.u);
            }
        } else {
            adj.get_mut(&e.u).unwrap().push(e.v);
            adj.get_mut(&e.v).unwrap().push(e.u);
        }
    }
    let mut seen = BTreeSet::new();
    if !adj.contains_key(&s) {
        return seen;
    }
    seen.insert(s);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[&u] {
            if seen.insert(v) {
                q.push_back(v);
            }
        }
    }
    seen
}

/// Strongly connected in the inclusive sense (graphs with at most one
/// vertex qualify).
pub fn is_strongly_connected(d: &ColoredGraph) -> bool {
    debug_assert!(d.directed);
    if d.num_vertices() <= 1 {
        return true;
    }
    let v0 = d.vertices()[0].id;
    reachable_from(d, v0, true).len() == d.num_vertices()
        && reachable_from(d, v0, false).len() == d.num_vertices()
}

/// Every vertex reachable from `r` (inclusive: holds when `r` is the only
/// vertex). Returns false when `r` is not present.
pub fn is_rooted_connected(d: &ColoredGraph, r: VertexId) -> bool {
    debug_assert!(d.directed);
    if !d.has_vertex(r) {
        return false;
    }
    reachable_from(d, r, true).len() == d.num_vertices()
}

fn loop_count_at(g: &ColoredGraph, v: VertexId) -> u32 {
    g.edges().iter().filter(|e| e.is_loop() && e.u == v).count() as u32
}

/// k pairwise edge-disjoint paths between every vertex pair; one vertex with
/// at least k loops also qualifies. The loopless one-vertex graph and every
/// disconnected graph do not.
pub fn is_k_edge_connected(g: &ColoredGraph, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(!g.directed);
    match g.num_vertices() {
        0 => false,
        1 => loop_count_at(g, g.vertices()[0].id) >= k,
        _ => {
            if !is_connected(g) {
                return false;
            }
            // Global edge connectivity = min over v != v0 of lambda(v0, v).
            let v0 = g.vertices()[0].id;
            g.vertex_ids().skip(1).all(|v| edge_disjoint_paths(g, v0, v, k) >= k)
        }
    }
}

/// No mixed cut of size at most k-1: k internally vertex-disjoint paths
/// between every pair, with the parallel-edge and loop conventions above.
pub fn is_k_vertex_connected(g: &ColoredGraph, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(!g.directed);
    match g.num_vertices() {
        0 => false,
        1 => loop_count_at(g, g.vertices()[0].id) >= k,
        _ => {
            if !is_connected(g) {
                return false;
            }
            let ids: Vec<VertexId> = g.vertex_ids().collect();
            for (i, &s) in ids.iter().enumerate() {
                for &t in &ids[i + 1..] {
                    if vertex_disjoint_paths(g, s, t, k) < k {
                        return false;
                    }
                }
            }
            true
        }
    }
}

pub fn is_strongly_k_arc_connected(d: &ColoredGraph, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(d.directed);
    match d.num_vertices() {
        0 => false,
        1 => loop_count_at(d, d.vertices()[0].id) >= k,
        _ => {
            // Global arc connectivity = min over v != v0 of both directions.
            let v0 = d.vertices()[0].id;
            d.vertex_ids().skip(1).all(|v| {
                edge_disjoint_paths(d, v0, v, k) >= k && edge_disjoint_paths(d, v, v0, k) >= k
            })
        }
    }
}

pub fn is_strongly_k_vertex_connected(d: &ColoredGraph, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(d.directed);
    match d.num_vertices() {
        0 => false,
        1 => loop_count_at(d, d.vertices()[0].id) >= k,
        _ => {
            let ids: Vec<VertexId> = d.vertex_ids().collect();
            for &s in &ids {
                for &t in &ids {
                    if s != t && vertex_disjoint_paths(d, s, t, k) < k {
                        return false;
                    }
                }
            }
            true
        }
    }
}

pub fn is_rooted_k_arc_connected(d: &ColoredGraph, r: VertexId, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(d.directed);
    if !d.has_vertex(r) {
        return false;
    }
    if d.num_vertices() == 1 {
        return loop_count_at(d, r) >= k;
    }
    d.vertex_ids().filter(|&v| v != r).all(|v| edge_disjoint_paths(d, r, v, k) >= k)
}

pub fn is_rooted_k_vertex_connected(d: &ColoredGraph, r: VertexId, k: u32) -> bool {
    assert!(k >= 1);
    debug_assert!(d.directed);
    if !d.has_vertex(r) {
        return false;
    }
    if d.num_vertices() == 1 {
        return loop_count_at(d, r) >= k;
    }
    d.vertex_ids().filter(|&v| v != r).all(|v| vertex_disjoint_paths(d, r, v, k) >= k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    EdgeCut,
    VertexCut,
    MixedCut,
    DirectedCut,
}

/// A separator: removing `vertex_part` and `edge_part` disconnects t from s
/// (in the sense of the requested kind).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub kind: CutKind,
    pub vertex_part: BTreeSet<VertexId>,
    pub edge_part: BTreeSet<EdgeId>,
}

impl Cut {
    pub fn size(&self) -> usize {
        self.vertex_part.len() + self.edge_part.len()
    }

    pub fn empty(kind: CutKind) -> Self {
        Cut { kind, vertex_part: BTreeSet::new(), edge_part: BTreeSet::new() }
    }
}

/// Returns a minimum cut of the requested kind separating `t` from `s`. The
/// cut size equals the corresponding disjoint-path count (Menger duality);
/// when s and t are in different components already the cut is empty.
pub fn min_cut_witness(g: &ColoredGraph, kind: CutKind, s: VertexId, t: VertexId) -> Cut {
    assert_ne!(s, t);
    let pos = vertex_positions(g);
    let directed_arcs = match kind {
        CutKind::EdgeCut | CutKind::VertexCut | CutKind::MixedCut => g.directed,
        CutKind::DirectedCut => true,
    };
    match kind {
        CutKind::EdgeCut | CutKind::DirectedCut => {
            let mut net = FlowNet::new(g.num_vertices());
            let mut arc_edges: Vec<(usize, EdgeId)> = Vec::new();
            for e in g.edges() {
                if e.is_loop() {
                    continue;
                }
                let (u, v) = (pos[&e.u], pos[&e.v]);
                arc_edges.push((net.add_arc(u, v, 1), e.id));
                if !directed_arcs {
                    arc_edges.push((net.add_arc(v, u, 1), e.id));
                }
            }
            net.max_flow(pos[&s], pos[&t], i64::MAX);
            let reach = net.residual_reachable(pos[&s]);
            let mut cut = Cut::empty(kind);
            for (a, eid) in arc_edges {
                let from_side = reach[net.to[a ^ 1] as usize];
                let to_side = reach[net.to[a] as usize];
                if from_side && !to_side && net.cap[a] == 0 {
                    cut.edge_part.insert(eid);
                }
            }
            cut
        }
        CutKind::VertexCut | CutKind::MixedCut => {
            let n = g.num_vertices();
            let big = (n + g.num_edges() + 1) as i64;
            // For the pure vertex-cut kind, edges get capacity `big` so the
            // minimum cut uses vertices whenever a vertex separator exists;
            // the mixed kind prices edges and vertices equally.
            let edge_cap = if kind == CutKind::VertexCut { big } else { 1 };
            let mut net = FlowNet::new(2 * n);
            let mut split_arcs: Vec<(usize, VertexId)> = Vec::new();
            let mut arc_edges: Vec<(usize, EdgeId)> = Vec::new();
            for (x, &i) in &pos {
                let cap = if *x == s || *x == t { big * big } else { 1 };
                let a = net.add_arc(2 * i, 2 * i + 1, cap);
                if cap == 1 {
                    split_arcs.push((a, *x));
                }
            }
            for e in g.edges() {
                if e.is_loop() {
                    continue;
                }
                let (u, v) = (pos[&e.u], pos[&e.v]);
                arc_edges.push((net.add_arc(2 * u + 1, 2 * v, edge_cap), e.id));
                if !directed_arcs {
                    arc_edges.push((net.add_arc(2 * v + 1, 2 * u, edge_cap), e.id));
                }
            }
            net.max_flow(pos[&s] * 2 + 1, pos[&t] * 2, i64::MAX);
            let reach = net.residual_reachable(pos[&s] * 2 + 1);
            let mut cut = Cut::empty(kind);
            for (a, vid) in split_arcs {
                if reach[net.to[a ^ 1] as usize] && !reach[net.to[a] as usize] && net.cap[a] == 0 {
                    cut.vertex_part.insert(vid);
                }
            }
            for (a, eid) in arc_edges {
                if reach[net.to[a ^ 1] as usize] && !reach[net.to[a] as usize] && net.cap[a] == 0 {
                    cut.edge_part.insert(eid);
                }
            }
            cut
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::colorset;

    fn k4() -> ColoredGraph {
        ColoredGraph::from_edges("k4", false, 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn fig1() -> ColoredGraph {
        // a=0 b=1 c=2 d=3; e1=bc e2=ab e3=ac e4=cd e5=ad
        ColoredGraph::from_edges("fig1", false, 4, &[(1, 2), (0, 1), (0, 2), (2, 3), (0, 3)])
    }

    #[test]
    fn cycle_is_2_edge_connected() {
        let c4 = ColoredGraph::from_edges("c4", false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(is_k_edge_connected(&c4, 2));
        assert!(!is_k_edge_connected(&c4, 3));
    }

    #[test]
    fn fig1_edge_connectivity_matches_exhaustive_oracle() {
        let g = fig1();
        // Oracle: enumerate all edge subsets of size <= 2 and test disconnection.
        let m = g.num_edges();
        let mut min_cut = usize::MAX;
        for mask in 0u32..(1 << m) {
            let gone: BTreeSet<EdgeId> =
                (0..m as u32).filter(|i| mask >> i & 1 == 1).map(|i| i).collect();
            let h = g.delete_edges(&gone);
            if !is_connected(&h) {
                min_cut = min_cut.min(gone.len());
            }
        }
        assert_eq!(min_cut, 2);
        assert!(is_k_edge_connected(&g, 2));
        assert!(!is_k_edge_connected(&g, 3));
    }

    #[test]
    fn one_vertex_loop_conventions() {
        let mut g = ColoredGraph::from_edges("loops", false, 1, &[]);
        g.add_edge(0, 0, colorset(&[]), None).unwrap();
        g.add_edge(0, 0, colorset(&[]), None).unwrap();
        assert!(is_k_edge_connected(&g, 2));
        assert!(is_k_vertex_connected(&g, 2));
        assert!(!is_k_edge_connected(&g, 3));
        let k1 = ColoredGraph::from_edges("k1", false, 1, &[]);
        assert!(!is_k_edge_connected(&k1, 1));
        assert!(is_connected(&k1));
    }

    #[test]
    fn two_vertex_parallel_convention() {
        let g = ColoredGraph::from_edges("p2", false, 2, &[(0, 1), (0, 1)]);
        assert!(is_k_vertex_connected(&g, 2));
        assert!(!is_k_vertex_connected(&g, 3));
    }

    #[test]
    fn k4_vertex_connectivity() {
        assert!(is_k_vertex_connected(&k4(), 3));
        assert!(!is_k_vertex_connected(&k4(), 4));
    }

    #[test]
    fn path_middle_vertex_cuts() {
        let p3 = ColoredGraph::from_edges("p3", false, 3, &[(0, 1), (1, 2)]);
        assert!(!is_k_vertex_connected(&p3, 2));
        let cut = min_cut_witness(&p3, CutKind::VertexCut, 0, 2);
        assert_eq!(cut.vertex_part, BTreeSet::from([1]));
        assert!(cut.edge_part.is_empty());
    }

    #[test]
    fn directed_cycle_connectivity() {
        let c3 = ColoredGraph::from_edges("dc3", true, 3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(is_strongly_k_arc_connected(&c3, 1));
        assert!(!is_strongly_k_arc_connected(&c3, 2));
        assert!(is_rooted_k_arc_connected(&c3, 0, 1));
        assert!(!is_rooted_k_arc_connected(&c3, 0, 2));
    }

    #[test]
    fn rooted_two_parallel_arcs() {
        let d = ColoredGraph::from_edges("dp", true, 2, &[(0, 1), (0, 1)]);
        assert!(is_rooted_k_arc_connected(&d, 0, 2));
        assert!(!is_rooted_k_arc_connected(&d, 1, 1));
    }

    #[test]
    fn fig2_first_graph_min_cut_is_red_edge() {
        let g = ColoredGraph::from_colored_edges("fig2_g1", false, 3, &[(0, 2, &[0]), (1, 2, &[1])]);
        let cut = min_cut_witness(&g, CutKind::EdgeCut, 0, 1);
        assert_eq!(cut.edge_part, BTreeSet::from([0]));
        assert_eq!(cut.size(), 1);
        assert_eq!(edge_disjoint_paths(&g, 0, 1, u32::MAX), 1);
    }

    #[test]
    fn k4_edge_cut_size_three() {
        let cut = min_cut_witness(&k4(), CutKind::EdgeCut, 0, 1);
        assert_eq!(cut.size(), 3);
        let h = k4().delete_edges(&cut.edge_part);
        assert!(!is_connected(&h));
    }

    #[test]
    fn disconnected_pair_gets_empty_cut() {
        let g = ColoredGraph::from_edges("2k1", false, 2, &[]);
        let cut = min_cut_witness(&g, CutKind::EdgeCut, 0, 1);
        assert_eq!(cut.size(), 0);
    }

    #[test]
    fn monotone_in_k() {
        let g = k4();
        for k in 1..=3 {
            assert!(is_k_edge_connected(&g, k));
            assert!(is_k_vertex_connected(&g, k));
        }
    }
}
