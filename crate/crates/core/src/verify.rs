//! Decision procedures with witnesses for every color-avoiding connectivity
//! notion: edge-, vertex-, and internally-vertex-colored variants, with
//! k-edge- or k-vertex-connectivity targets, for undirected graphs, strong
//! digraphs, and rooted digraphs.
//!
//! Verification enumerates all subsets of at most `ell` *used* colors
//! (including the empty subset: unused palette colors cannot change any
//! verdict, while the empty subset recovers plain connectivity) and applies
//! the notion-specific residual test. Subsets are scanned in a canonical
//! order (size, then lexicographic), so the reported witness is
//! deterministic; it is not guaranteed minimal.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::conn::{
    self, edge_disjoint_paths, min_cut_witness, vertex_disjoint_paths, Cut, CutKind,
};
use crate::error::Error;
use crate::graph::{ColorId, ColorSet, ColoredGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoredPart {
    Edge,
    Vertex,
    InternalVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnMode {
    Edge,
    Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Undirected,
    Strong,
    Rooted,
}

/// Which color-avoiding connectivity property is being decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Notion {
    pub part: ColoredPart,
    pub mode: ConnMode,
    pub k: u32,
    pub ell: u32,
    pub scope: Scope,
}

impl Notion {
    pub fn new(part: ColoredPart, mode: ConnMode, k: u32, ell: u32, scope: Scope) -> Self {
        Notion { part, mode, k, ell, scope }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The attacked color subset C'.
    pub colors: Vec<ColorId>,
    /// A vertex pair whose connectivity requirement fails after the attack
    /// (for rooted scope the first component is the root).
    pub pair: Option<(VertexId, VertexId)>,
    /// A cut of size at most k-1 completing the disconnection in the
    /// residual instance.
    pub cut: Cut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds() -> Self {
        Verdict { holds: true, witness: None }
    }

    fn fails(witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Cap on the number of color subsets enumerated when `ell >= 2`.
    pub max_subsets: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_subsets: 1_000_000 }
    }
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// All subsets of `colors` of size at most `ell`, smallest first, each in
/// ascending color order; within a size, lexicographic.
pub fn color_subsets(colors: &ColorSet, ell: u32, opts: &VerifyOptions) -> Result<Vec<Vec<ColorId>>, Error> {
    let items: Vec<ColorId> = colors.iter().copied().collect();
    let n = items.len();
    if ell >= 2 {
        let mut total: u128 = 0;
        for s in 0..=(ell as u128).min(n as u128) {
            total = total.saturating_add(binom(n as u128, s));
        }
        if total > opts.max_subsets {
            return Err(Error::GuardExceeded { candidates: total, cap: opts.max_subsets });
        }
    }
    let mut out = vec![vec![]];
    for s in 1..=(ell as usize).min(n) {
        out.extend(items.iter().copied().combinations(s));
    }
    Ok(out)
}

fn check_compat(instance: &ColoredGraph, notion: &Notion) -> Result<VertexId, Error> {
    match notion.scope {
        Scope::Undirected => {
            if instance.directed {
                return Err(Error::IncompatibleNotion("an undirected instance"));
            }
            Ok(0)
        }
        Scope::Strong => {
            if !instance.directed {
                return Err(Error::IncompatibleNotion("a directed instance"));
            }
            Ok(0)
        }
        Scope::Rooted => {
            if !instance.directed {
                return Err(Error::IncompatibleNotion("a directed instance"));
            }
            instance.root.ok_or(Error::IncompatibleNotion("a declared root"))
        }
    }
}

fn used_colors(instance: &ColoredGraph, part: ColoredPart) -> ColorSet {
    match part {
        ColoredPart::Edge => instance.edge_colors(),
        ColoredPart::Vertex | ColoredPart::InternalVertex => instance.vertex_colors(),
    }
}

/// Decides whether the instance satisfies the notion; on failure returns the
/// first falsifying color subset together with a replaying cut.
pub fn verify(instance: &ColoredGraph, notion: &Notion) -> Result<Verdict, Error> {
    verify_with(instance, notion, &VerifyOptions::default())
}

pub fn verify_with(
    instance: &ColoredGraph,
    notion: &Notion,
    opts: &VerifyOptions,
) -> Result<Verdict, Error> {
    let root = check_compat(instance, notion)?;
    let subsets = color_subsets(&used_colors(instance, notion.part), notion.ell, opts)?;
    for sub in subsets {
        let attacked: ColorSet = sub.iter().copied().collect();
        let fail = match notion.part {
            ColoredPart::Edge => edge_part_failure(instance, notion, root, &attacked),
            ColoredPart::Vertex => vertex_part_failure(instance, notion, root, &attacked),
            ColoredPart::InternalVertex => internal_part_failure(instance, notion, root, &attacked),
        };
        if let Some((pair, cut)) = fail {
            return Ok(Verdict::fails(Witness { colors: sub, pair, cut }));
        }
    }
    Ok(Verdict::holds())
}

/// Pair-level verdict for `u` and `v` (for rooted scope, dipaths from the
/// root to both is not what is asked: the pair is checked as stated, with
/// `u` treated as the source).
pub fn verify_pair(
    instance: &ColoredGraph,
    u: VertexId,
    v: VertexId,
    notion: &Notion,
) -> Result<Verdict, Error> {
    verify_pair_with(instance, u, v, notion, &VerifyOptions::default())
}

pub fn verify_pair_with(
    instance: &ColoredGraph,
    u: VertexId,
    v: VertexId,
    notion: &Notion,
    opts: &VerifyOptions,
) -> Result<Verdict, Error> {
    check_compat(instance, notion)?;
    if u == v || !instance.has_vertex(u) || !instance.has_vertex(v) {
        return Err(Error::Invalid(format!("invalid pair ({u}, {v})")));
    }
    let subsets = color_subsets(&used_colors(instance, notion.part), notion.ell, opts)?;
    for sub in subsets {
        let attacked: ColorSet = sub.iter().copied().collect();
        if let Some(cut) = pair_failure(instance, notion, u, v, &attacked) {
            return Ok(Verdict::fails(Witness { colors: sub, pair: Some((u, v)), cut }));
        }
    }
    Ok(Verdict::holds())
}

/// Count of the relevant disjoint paths from s to t, capped at `limit`.
fn paths(g: &ColoredGraph, mode: ConnMode, s: VertexId, t: VertexId, limit: u32) -> u32 {
    match mode {
        ConnMode::Edge => edge_disjoint_paths(g, s, t, limit),
        ConnMode::Vertex => vertex_disjoint_paths(g, s, t, limit),
    }
}

fn cut_kind(directed: bool, mode: ConnMode) -> CutKind {
    match (directed, mode) {
        (false, ConnMode::Edge) => CutKind::EdgeCut,
        (false, ConnMode::Vertex) => CutKind::MixedCut,
        (true, ConnMode::Edge) => CutKind::DirectedCut,
        (true, ConnMode::Vertex) => CutKind::MixedCut,
    }
}

/// Pair requirement in a fixed host graph: k disjoint s-t paths, plus the
/// reverse direction for strong scope. On failure returns a minimum cut.
fn pair_requirement(
    host: &ColoredGraph,
    notion: &Notion,
    s: VertexId,
    t: VertexId,
) -> Option<Cut> {
    if !host.has_vertex(s) || !host.has_vertex(t) {
        return Some(Cut::empty(cut_kind(host.directed, notion.mode)));
    }
    if paths(host, notion.mode, s, t, notion.k) < notion.k {
        return Some(min_cut_witness(host, cut_kind(host.directed, notion.mode), s, t));
    }
    if notion.scope == Scope::Strong && paths(host, notion.mode, t, s, notion.k) < notion.k {
        return Some(min_cut_witness(host, cut_kind(host.directed, notion.mode), t, s));
    }
    None
}

/// Residual test for edge- and arc-colored notions: remove the attacked
/// edges and check the plain connectivity predicate. At k = 1 the inclusive
/// reading applies (one-vertex and empty residuals are connected).
fn edge_part_failure(
    instance: &ColoredGraph,
    notion: &Notion,
    root: VertexId,
    attacked: &ColorSet,
) -> Option<(Option<(VertexId, VertexId)>, Cut)> {
    let residual = instance.remove_edge_colors(attacked);
    if residual_ok(&residual, notion, root) {
        return None;
    }
    // Locate a falsifying pair and a completing cut in the residual.
    let ids: Vec<VertexId> = residual.vertex_ids().collect();
    match notion.scope {
        Scope::Rooted => {
            for &v in ids.iter().filter(|&&v| v != root) {
                if paths(&residual, notion.mode, root, v, notion.k) < notion.k {
                    let cut = min_cut_witness(&residual, cut_kind(true, notion.mode), root, v);
                    return Some((Some((root, v)), cut));
                }
            }
        }
        _ => {
            for (i, &s) in ids.iter().enumerate() {
                for &t in &ids[i + 1..] {
                    if paths(&residual, notion.mode, s, t, notion.k) < notion.k {
                        let cut = min_cut_witness(&residual, cut_kind(instance.directed, notion.mode), s, t);
                        return Some((Some((s, t)), cut));
                    }
                    if instance.directed && paths(&residual, notion.mode, t, s, notion.k) < notion.k {
                        let cut = min_cut_witness(&residual, cut_kind(true, notion.mode), t, s);
                        return Some((Some((t, s)), cut));
                    }
                }
            }
        }
    }
    // Failure without a falsifying pair: a one-vertex residual that does not
    // meet the loop convention.
    Some((None, Cut::empty(cut_kind(instance.directed, notion.mode))))
}

/// Plain connectivity check of the residual for edge-colored notions.
fn residual_ok(residual: &ColoredGraph, notion: &Notion, root: VertexId) -> bool {
    let k = notion.k;
    match (notion.scope, notion.mode) {
        (Scope::Undirected, ConnMode::Edge) => {
            if k == 1 {
                conn::is_connected(residual)
            } else {
                conn::is_k_edge_connected(residual, k)
            }
        }
        (Scope::Undirected, ConnMode::Vertex) => {
            if k == 1 {
                conn::is_connected(residual)
            } else {
                conn::is_k_vertex_connected(residual, k)
            }
        }
        (Scope::Strong, ConnMode::Edge) => {
            if k == 1 {
                conn::is_strongly_connected(residual)
            } else {
                conn::is_strongly_k_arc_connected(residual, k)
            }
        }
        (Scope::Strong, ConnMode::Vertex) => {
            if k == 1 {
                conn::is_strongly_connected(residual)
            } else {
                conn::is_strongly_k_vertex_connected(residual, k)
            }
        }
        (Scope::Rooted, ConnMode::Edge) => {
            if k == 1 {
                conn::is_rooted_connected(residual, root)
            } else {
                conn::is_rooted_k_arc_connected(residual, root, k)
            }
        }
        (Scope::Rooted, ConnMode::Vertex) => {
            if k == 1 {
                conn::is_rooted_connected(residual, root)
            } else {
                conn::is_rooted_k_vertex_connected(residual, root, k)
            }
        }
    }
}

/// Residual test for vertex-colored notions.
///
/// Undirected scope follows the deletion form of the definition: after the
/// attacked vertices are removed, the remainder must satisfy the plain
/// k-connectivity predicate or have at most one vertex. Strong and rooted
/// scopes are defined pairwise, with the endpoint rule: a pair with an
/// attacked endpoint needs its k disjoint (di)paths in the *full* instance.
fn vertex_part_failure(
    instance: &ColoredGraph,
    notion: &Notion,
    root: VertexId,
    attacked: &ColorSet,
) -> Option<(Option<(VertexId, VertexId)>, Cut)> {
    match notion.scope {
        Scope::Undirected => {
            let residual = instance.remove_vertex_colors(attacked);
            if residual.num_vertices() <= 1 || residual_ok(&residual, notion, root) {
                return None;
            }
            let ids: Vec<VertexId> = residual.vertex_ids().collect();
            for (i, &s) in ids.iter().enumerate() {
                for &t in &ids[i + 1..] {
                    if paths(&residual, notion.mode, s, t, notion.k) < notion.k {
                        let cut = min_cut_witness(&residual, cut_kind(false, notion.mode), s, t);
                        return Some((Some((s, t)), cut));
                    }
                }
            }
            Some((None, Cut::empty(cut_kind(false, notion.mode))))
        }
        Scope::Strong | Scope::Rooted => {
            let residual = instance.remove_vertex_colors(attacked);
            let pairs = scope_pairs(instance, notion.scope, root);
            for (s, t) in pairs {
                let s_hit = touched(instance, s, attacked);
                let t_hit = touched(instance, t, attacked);
                let host = if s_hit || t_hit { instance } else { &residual };
                if let Some(cut) = pair_requirement(host, notion, s, t) {
                    return Some((Some((s, t)), cut));
                }
            }
            None
        }
    }
}

/// Residual test for internally-vertex-colored notions: for every vertex
/// pair, the attacked vertices other than the two endpoints are deleted and
/// k disjoint paths must remain (deletion applies only to path interiors).
fn internal_part_failure(
    instance: &ColoredGraph,
    notion: &Notion,
    root: VertexId,
    attacked: &ColorSet,
) -> Option<(Option<(VertexId, VertexId)>, Cut)> {
    for (s, t) in scope_pairs(instance, notion.scope, root) {
        let host = instance.remove_vertices_except(attacked, &[s, t]);
        if let Some(cut) = pair_requirement(&host, notion, s, t) {
            return Some((Some((s, t)), cut));
        }
    }
    None
}

fn scope_pairs(instance: &ColoredGraph, scope: Scope, root: VertexId) -> Vec<(VertexId, VertexId)> {
    let ids: Vec<VertexId> = instance.vertex_ids().collect();
    match scope {
        Scope::Rooted => ids.iter().filter(|&&v| v != root).map(|&v| (root, v)).collect(),
        _ => {
            let mut out = Vec::new();
            for (i, &s) in ids.iter().enumerate() {
                for &t in &ids[i + 1..] {
                    out.push((s, t));
                }
            }
            out
        }
    }
}

fn touched(instance: &ColoredGraph, v: VertexId, attacked: &ColorSet) -> bool {
    instance.vertex(v).map_or(false, |x| !x.colors.is_disjoint(attacked))
}

/// Single-pair, single-subset residual test (used by `verify_pair`).
fn pair_failure(
    instance: &ColoredGraph,
    notion: &Notion,
    u: VertexId,
    v: VertexId,
    attacked: &ColorSet,
) -> Option<Cut> {
    match notion.part {
        ColoredPart::Edge => {
            let residual = instance.remove_edge_colors(attacked);
            pair_requirement(&residual, notion, u, v)
        }
        ColoredPart::InternalVertex => {
            let host = instance.remove_vertices_except(attacked, &[u, v]);
            pair_requirement(&host, notion, u, v)
        }
        ColoredPart::Vertex => {
            if touched(instance, u, attacked) || touched(instance, v, attacked) {
                pair_requirement(instance, notion, u, v)
            } else {
                let host = instance.remove_vertex_colors(attacked);
                pair_requirement(&host, notion, u, v)
            }
        }
    }
}

/// One line of the cross-checking report produced by [`equivalence_suite`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteItem {
    pub name: &'static str,
    /// `false` when the instance is outside the proposition's scope (fewer
    /// than two vertices); such items are skipped, not judged.
    pub applicable: bool,
    pub agree: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn all_agree(&self) -> bool {
        self.items.iter().all(|i| !i.applicable || i.agree)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Hard bound on 2^edges / 2^vertices enumeration.
    pub max_elements: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_elements: 20 }
    }
}

/// Cross-checks `verify` against the equivalent cut-style formulations of
/// 1-color-avoiding 1-connectivity on a small instance:
///
/// 1. absence of monochromatic edge cuts (edge-colored);
/// 2. a spanning tree surviving every single-color removal (edge-colored);
/// 3. absence of monochromatic vertex cuts, the empty set included
///    (vertex-colored, internal variant);
/// 4. vertex- and internally-vertex-avoiding verdicts coinciding when every
///    vertex has a neighbor of disjoint color.
pub fn equivalence_suite(instance: &ColoredGraph, opts: &SuiteOptions) -> Result<SuiteReport, Error> {
    if instance.directed {
        return Err(Error::IncompatibleNotion("an undirected instance"));
    }
    if instance.num_edges() > opts.max_elements || instance.num_vertices() > opts.max_elements {
        return Err(Error::GuardExceeded {
            candidates: 1u128 << instance.num_edges().max(instance.num_vertices()),
            cap: 1u128 << opts.max_elements,
        });
    }
    let mut items = Vec::new();
    let in_scope = instance.num_vertices() >= 2;

    // (1) + (2): edge-colored formulations.
    let edge_notion = Notion::new(ColoredPart::Edge, ConnMode::Edge, 1, 1, Scope::Undirected);
    let direct = verify(instance, &edge_notion)?.holds;
    if !in_scope {
        items.push(SuiteItem {
            name: "edge-monochromatic-cut",
            applicable: false,
            agree: true,
            detail: "out of proposition scope (fewer than two vertices)".into(),
        });
        items.push(SuiteItem {
            name: "edge-spanning-tree",
            applicable: false,
            agree: true,
            detail: "out of proposition scope (fewer than two vertices)".into(),
        });
    } else {
        let no_mono_cut = !has_monochromatic_edge_cut(instance);
        items.push(SuiteItem {
            name: "edge-monochromatic-cut",
            applicable: true,
            agree: direct == no_mono_cut,
            detail: format!("verify={direct}, no-monochromatic-edge-cut={no_mono_cut}"),
        });
        let tree_survives = spanning_tree_survives_each_color(instance);
        items.push(SuiteItem {
            name: "edge-spanning-tree",
            applicable: true,
            agree: direct == tree_survives,
            detail: format!("verify={direct}, spanning-tree-remains={tree_survives}"),
        });
    }

    // (3): vertex-colored internal formulation.
    let internal_notion = Notion::new(ColoredPart::InternalVertex, ConnMode::Edge, 1, 1, Scope::Undirected);
    if !in_scope {
        items.push(SuiteItem {
            name: "internal-monochromatic-vertex-cut",
            applicable: false,
            agree: true,
            detail: "out of proposition scope (fewer than two vertices)".into(),
        });
    } else {
        let direct = verify(instance, &internal_notion)?.holds;
        let no_mono_vcut = !has_monochromatic_vertex_cut(instance);
        items.push(SuiteItem {
            name: "internal-monochromatic-vertex-cut",
            applicable: true,
            agree: direct == no_mono_vcut,
            detail: format!("verify={direct}, no-monochromatic-vertex-cut={no_mono_vcut}"),
        });
    }

    // (4): differently-colored-neighbor lemma.
    let hyp = instance.num_vertices() >= 2
        && instance.vertices().iter().all(|v| {
            instance.edges().iter().any(|e| {
                !e.is_loop()
                    && (e.u == v.id || e.v == v.id)
                    && instance.vertex(e.other_end(v.id)).unwrap().colors.is_disjoint(&v.colors)
            })
        });
    if !hyp {
        items.push(SuiteItem {
            name: "vertex-vs-internal-lemma",
            applicable: false,
            agree: true,
            detail: "hypothesis not met (some vertex lacks a disjointly colored neighbor)".into(),
        });
    } else {
        let vertex_notion = Notion::new(ColoredPart::Vertex, ConnMode::Edge, 1, 1, Scope::Undirected);
        let a = verify(instance, &vertex_notion)?.holds;
        let b = verify(instance, &internal_notion)?.holds;
        items.push(SuiteItem {
            name: "vertex-vs-internal-lemma",
            applicable: true,
            agree: a == b,
            detail: format!("vertex-avoiding={a}, internally-vertex-avoiding={b}"),
        });
    }

    Ok(SuiteReport { items })
}

/// Is there an edge cut all of whose edges share one color? A disconnected
/// graph counts (the empty set is such a cut).
fn has_monochromatic_edge_cut(g: &ColoredGraph) -> bool {
    if !conn::is_connected(g) {
        return true;
    }
    let m = g.num_edges();
    for mask in 1u64..(1 << m) {
        let gone: BTreeSet<u32> = (0..m as u32).filter(|i| mask >> i & 1 == 1).collect();
        let shared = gone
            .iter()
            .map(|&i| g.edges()[i as usize].colors.clone())
            .reduce(|a, b| a.intersection(&b).copied().collect())
            .unwrap();
        if shared.is_empty() {
            continue;
        }
        let ids: BTreeSet<u32> = gone.iter().map(|&i| g.edges()[i as usize].id).collect();
        if !conn::is_connected(&g.delete_edges(&ids)) {
            return true;
        }
    }
    false
}

fn spanning_tree_survives_each_color(g: &ColoredGraph) -> bool {
    for &c in &g.edge_colors() {
        let residual = g.remove_edge_colors(&ColorSet::from([c]));
        // vertices persist under edge removal, so a spanning tree remains
        // exactly when the residual is connected
        if !conn::is_connected(&residual) {
            return false;
        }
    }
    conn::is_connected(g)
}

/// Is there a vertex cut (empty set included) all of whose vertices share a
/// color? Removal must disconnect, i.e. leave at least two components.
fn has_monochromatic_vertex_cut(g: &ColoredGraph) -> bool {
    if conn::component_count(g) >= 2 {
        return true;
    }
    let n = g.num_vertices();
    for mask in 1u64..(1 << n) {
        let gone: BTreeSet<VertexId> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| g.vertices()[i].id)
            .collect();
        let shared = gone
            .iter()
            .map(|v| g.vertex(*v).unwrap().colors.clone())
            .reduce(|a, b| a.intersection(&b).copied().collect())
            .unwrap();
        if shared.is_empty() {
            continue;
        }
        if conn::component_count(&g.delete_vertices(&gone)) >= 2 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::colorset;

    const RED: ColorId = 0;
    const BLUE: ColorId = 1;
    const GREEN: ColorId = 2;

    fn notion(part: ColoredPart, mode: ConnMode, k: u32, ell: u32, scope: Scope) -> Notion {
        Notion::new(part, mode, k, ell, scope)
    }

    /// Triangle with three distinctly colored edges (second graph of the
    /// edge-colored examples figure).
    fn fig2_g2() -> ColoredGraph {
        ColoredGraph::from_colored_edges(
            "fig2_g2",
            false,
            3,
            &[(0, 1, &[GREEN]), (0, 2, &[RED]), (1, 2, &[BLUE])],
        )
    }

    /// Triangle with doubled flanks: top vertex 0 joined to 1 by green+red
    /// parallels and to 2 by red+green parallels, base 1-2 blue.
    fn fig2_g3() -> ColoredGraph {
        ColoredGraph::from_colored_edges(
            "fig2_g3",
            false,
            3,
            &[
                (0, 1, &[GREEN]),
                (0, 1, &[RED]),
                (0, 2, &[RED]),
                (0, 2, &[GREEN]),
                (1, 2, &[BLUE]),
            ],
        )
    }

    #[test]
    fn fig2_second_graph_is_1ca_1_connected() {
        let g = fig2_g2();
        let v = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 1, 1, Scope::Undirected)).unwrap();
        assert!(v.holds);
        let v2 = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 2, 1, Scope::Undirected)).unwrap();
        assert!(!v2.holds);
    }

    #[test]
    fn fig2_third_graph_verdicts() {
        let g = fig2_g3();
        let v = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 2, 1, Scope::Undirected)).unwrap();
        assert!(v.holds);
        let v2 = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 1, 2, Scope::Undirected)).unwrap();
        assert!(!v2.holds);
        let w = v2.witness.unwrap();
        assert_eq!(w.colors, vec![RED, GREEN]);
    }

    /// Path on three red vertices (middle graph of the vertex-colored
    /// examples figure).
    fn fig4_mid() -> ColoredGraph {
        let mut g = ColoredGraph::from_edges("fig4_mid", false, 3, &[(0, 1), (1, 2)]);
        for v in 0..3 {
            g.set_vertex_colors(v, colorset(&[RED]));
        }
        g
    }

    #[test]
    fn fig4_middle_graph_vertex_vs_internal() {
        let g = fig4_mid();
        let v = verify(&g, &notion(ColoredPart::Vertex, ConnMode::Edge, 1, 1, Scope::Undirected)).unwrap();
        assert!(v.holds);
        let i = verify(&g, &notion(ColoredPart::InternalVertex, ConnMode::Edge, 1, 1, Scope::Undirected)).unwrap();
        assert!(!i.holds);
        let w = i.witness.unwrap();
        assert_eq!(w.colors, vec![RED]);
        assert_eq!(w.pair, Some((0, 2)));
    }

    #[test]
    fn fig4_right_path_distinct_colors_fails_both() {
        let mut g = ColoredGraph::from_edges("fig4_right", false, 3, &[(0, 1), (1, 2)]);
        g.set_vertex_colors(0, colorset(&[RED]));
        g.set_vertex_colors(1, colorset(&[BLUE]));
        g.set_vertex_colors(2, colorset(&[GREEN]));
        for part in [ColoredPart::Vertex, ColoredPart::InternalVertex] {
            let v = verify(&g, &notion(part, ConnMode::Edge, 1, 1, Scope::Undirected)).unwrap();
            assert!(!v.holds);
        }
    }

    #[test]
    fn fig4_left_triangle_distinct_colors_holds_for_any_ell() {
        let mut g = ColoredGraph::from_edges("fig4_left", false, 3, &[(0, 1), (1, 2), (2, 0)]);
        g.set_vertex_colors(0, colorset(&[RED]));
        g.set_vertex_colors(1, colorset(&[BLUE]));
        g.set_vertex_colors(2, colorset(&[GREEN]));
        for ell in 1..=3 {
            for part in [ColoredPart::Vertex, ColoredPart::InternalVertex] {
                let v = verify(&g, &notion(part, ConnMode::Edge, 1, ell, Scope::Undirected)).unwrap();
                assert!(v.holds, "part {part:?} ell {ell}");
            }
        }
    }

    /// First digraph of the rooted examples figure: r=0, a=1, b=2, c=3.
    fn fig5_first() -> ColoredGraph {
        let mut g = ColoredGraph::from_colored_edges(
            "fig5_d1",
            true,
            4,
            &[
                (0, 1, &[GREEN]),
                (0, 2, &[RED]),
                (1, 3, &[RED]),
                (2, 1, &[BLUE]),
                (3, 2, &[GREEN]),
                (0, 3, &[BLUE]),
            ],
        );
        g.set_root(0).unwrap();
        g
    }

    #[test]
    fn fig5_first_digraph_rooted_verdicts() {
        let g = fig5_first();
        let v = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 1, 1, Scope::Rooted)).unwrap();
        assert!(v.holds);
        let v2 = verify(&g, &notion(ColoredPart::Edge, ConnMode::Edge, 2, 1, Scope::Rooted)).unwrap();
        assert!(!v2.holds);
        // Plain rooted 2-arc-connectivity holds (two arc-disjoint r-paths to
        // every vertex); it is the color-avoiding variant that fails.
        assert!(conn::is_rooted_k_arc_connected(&g, 0, 2));
        assert!(!v2.witness.unwrap().colors.is_empty());
    }

    /// Second digraph of the rooted examples figure: all-red dipath r->v->w.
    fn fig5_second() -> ColoredGraph {
        let mut g = ColoredGraph::from_edges("fig5_d2", true, 3, &[(0, 1), (1, 2)]);
        for v in 0..3 {
            g.set_vertex_colors(v, colorset(&[RED]));
        }
        g.set_root(0).unwrap();
        g
    }

    #[test]
    fn fig5_second_digraph_vertex_vs_internal() {
        let g = fig5_second();
        let v = verify(&g, &notion(ColoredPart::Vertex, ConnMode::Edge, 1, 1, Scope::Rooted)).unwrap();
        assert!(v.holds);
        let i = verify(&g, &notion(ColoredPart::InternalVertex, ConnMode::Edge, 1, 1, Scope::Rooted)).unwrap();
        assert!(!i.holds);
    }

    #[test]
    fn uncolored_instance_reduces_to_plain_connectivity() {
        let c4 = ColoredGraph::from_edges("c4", false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        for k in 1..=3u32 {
            let expected = if k == 1 { conn::is_connected(&c4) } else { conn::is_k_edge_connected(&c4, k) };
            for part in [ColoredPart::Edge, ColoredPart::Vertex, ColoredPart::InternalVertex] {
                let v = verify(&c4, &notion(part, ConnMode::Edge, k, 1, Scope::Undirected)).unwrap();
                assert_eq!(v.holds, expected, "part {part:?} k {k}");
            }
        }
    }

    #[test]
    fn verify_pair_examples() {
        let g = fig4_mid();
        let n = notion(ColoredPart::InternalVertex, ConnMode::Edge, 1, 1, Scope::Undirected);
        let far = verify_pair(&g, 0, 2, &n).unwrap();
        assert!(!far.holds);
        let adjacent = verify_pair(&g, 0, 1, &n).unwrap();
        assert!(adjacent.holds);

        let mut tri = ColoredGraph::from_edges("tri", false, 3, &[(0, 1), (1, 2), (2, 0)]);
        tri.set_vertex_colors(0, colorset(&[RED]));
        tri.set_vertex_colors(1, colorset(&[BLUE]));
        tri.set_vertex_colors(2, colorset(&[GREEN]));
        let n2 = notion(ColoredPart::Vertex, ConnMode::Edge, 1, 2, Scope::Undirected);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            assert!(verify_pair(&tri, u, v, &n2).unwrap().holds);
        }
    }

    #[test]
    fn witness_replays_to_failure() {
        let g = fig2_g3();
        let n = notion(ColoredPart::Edge, ConnMode::Edge, 1, 2, Scope::Undirected);
        let v = verify(&g, &n).unwrap();
        let w = v.witness.unwrap();
        let residual = g.remove_edge_colors(&w.colors.iter().copied().collect());
        let after = residual.delete_edges(&w.cut.edge_part);
        let (s, t) = w.pair.unwrap();
        assert_eq!(edge_disjoint_paths(&after, s, t, 1), 0);
    }

    #[test]
    fn suite_on_fig4_instances() {
        let mut tri = ColoredGraph::from_edges("tri", false, 3, &[(0, 1), (1, 2), (2, 0)]);
        tri.set_vertex_colors(0, colorset(&[RED]));
        tri.set_vertex_colors(1, colorset(&[BLUE]));
        tri.set_vertex_colors(2, colorset(&[GREEN]));
        let report = equivalence_suite(&tri, &SuiteOptions::default()).unwrap();
        assert!(report.all_agree());
        let lemma = report.items.iter().find(|i| i.name == "vertex-vs-internal-lemma").unwrap();
        assert!(lemma.applicable);

        let report = equivalence_suite(&fig4_mid(), &SuiteOptions::default()).unwrap();
        assert!(report.all_agree());
        let lemma = report.items.iter().find(|i| i.name == "vertex-vs-internal-lemma").unwrap();
        assert!(!lemma.applicable, "all-red path has no disjointly colored neighbors");
    }

    #[test]
    fn suite_flags_single_vertex_out_of_scope() {
        let k1 = ColoredGraph::from_edges("k1", false, 1, &[]);
        let report = equivalence_suite(&k1, &SuiteOptions::default()).unwrap();
        assert!(report.all_agree());
        assert!(report.items.iter().any(|i| !i.applicable && i.detail.contains("out of proposition scope")));
    }

    #[test]
    fn guard_trips_on_large_universe() {
        let mut g = ColoredGraph::from_edges("wide", false, 2, &[]);
        for c in 0..40 {
            g.add_edge(0, 1, colorset(&[c]), None).unwrap();
        }
        let n = notion(ColoredPart::Edge, ConnMode::Edge, 1, 5, Scope::Undirected);
        let err = verify_with(&g, &n, &VerifyOptions { max_subsets: 1000 }).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { .. }));
        // Overridable.
        assert!(verify_with(&g, &n, &VerifyOptions { max_subsets: u128::MAX }).is_ok());
    }

    #[test]
    fn subset_order_is_canonical() {
        let colors = colorset(&[1, 2, 3]);
        let subs = color_subsets(&colors, 2, &VerifyOptions::default()).unwrap();
        assert_eq!(
            subs,
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
