//! Colored multigraph/digraph data model and the canonical text format.
//!
//! Every vertex and edge carries a *set* of color labels. An empty set means
//! the element is immune: it is never deleted by a color attack. Parallel
//! edges and loops are allowed; edges are identified by stable ids that
//! survive color removal, so witnesses can always be reported against the
//! original instance.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, ParseErrorKind};

pub type VertexId = u32;
pub type EdgeId = u32;
pub type ColorId = u32;
pub type ColorSet = BTreeSet<ColorId>;
/// Edge weights are exact rationals; the text format stores them as decimals.
pub type Weight = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub colors: ColorSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub colors: ColorSet,
    pub weight: Option<Weight>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other_end(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, colors: &ColorSet) -> bool {
        !self.colors.is_disjoint(colors)
    }
}

/// A colored multigraph. `directed` selects digraph semantics: every edge is
/// then an arc from `u` to `v`, and an optional `root` may be set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub name: String,
    pub directed: bool,
    pub root: Option<VertexId>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: BTreeMap<VertexId, usize>,
}

impl ColoredGraph {
    pub fn new(name: impl Into<String>, directed: bool) -> Self {
        ColoredGraph {
            name: name.into(),
            directed,
            root: None,
            vertices: Vec::new(),
            edges: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, id: VertexId, colors: ColorSet) -> Result<(), Error> {
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        self.index.insert(id, self.vertices.len());
        self.vertices.push(Vertex { id, colors });
        Ok(())
    }

    /// Adds an edge (arc when directed) and returns its id. Ids are assigned
    /// in insertion order and never reused.
    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        colors: ColorSet,
        weight: Option<Weight>,
    ) -> Result<EdgeId, Error> {
        if !self.index.contains_key(&u) {
            return Err(Error::DanglingEndpoint(u));
        }
        if !self.index.contains_key(&v) {
            return Err(Error::DanglingEndpoint(v));
        }
        let id = self.edges.len() as EdgeId;
        self.edges.push(Edge {
            id,
            u,
            v,
            colors,
            weight,
        });
        Ok(id)
    }

    pub fn set_root(&mut self, root: VertexId) -> Result<(), Error> {
        if !self.directed {
            return Err(Error::RootOnUndirected);
        }
        if !self.index.contains_key(&root) {
            return Err(Error::DanglingEndpoint(root));
        }
        self.root = Some(root);
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_vertex(&self, id: VertexId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn vertex(&self, id: VertexId) -> Option<&Vertex> {
        self.index.get(&id).map(|&i| &self.vertices[i])
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|v| v.id)
    }

    pub fn is_weighted(&self) -> bool {
        !self.edges.is_empty() && self.edges.iter().all(|e| e.weight.is_some())
    }

    /// Union of all edge color sets.
    pub fn edge_colors(&self) -> ColorSet {
        self.edges.iter().flat_map(|e| e.colors.iter().copied()).collect()
    }

    /// Union of all vertex color sets.
    pub fn vertex_colors(&self) -> ColorSet {
        self.vertices.iter().flat_map(|v| v.colors.iter().copied()).collect()
    }

    /// Deletes every edge whose color set intersects `attacked`. Ids of the
    /// survivors are preserved; immune (empty-set) edges always survive.
    pub fn remove_edge_colors(&self, attacked: &ColorSet) -> ColoredGraph {
        let mut g = self.clone();
        g.edges.retain(|e| !e.touches(attacked));
        g
    }

    /// Deletes every vertex whose color set intersects `attacked`, together
    /// with all incident edges. A removed root is cleared.
    pub fn remove_vertex_colors(&self, attacked: &ColorSet) -> ColoredGraph {
        self.remove_vertices_except(attacked, &[])
    }

    /// Like [`remove_vertex_colors`](Self::remove_vertex_colors) but keeps the
    /// listed vertices even when their colors are attacked. This is the
    /// residual used by the internally-vertex-avoiding path tests, where the
    /// query endpoints are exempt from deletion.
    pub fn remove_vertices_except(&self, attacked: &ColorSet, keep: &[VertexId]) -> ColoredGraph {
        let gone: BTreeSet<VertexId> = self
            .vertices
            .iter()
            .filter(|v| !v.colors.is_disjoint(attacked) && !keep.contains(&v.id))
            .map(|v| v.id)
            .collect();
        let mut g = ColoredGraph::new(self.name.clone(), self.directed);
        for v in &self.vertices {
            if !gone.contains(&v.id) {
                g.add_vertex(v.id, v.colors.clone()).unwrap();
            }
        }
        for e in &self.edges {
            if !gone.contains(&e.u) && !gone.contains(&e.v) {
                g.edges.push(e.clone());
            }
        }
        if let Some(r) = self.root {
            if !gone.contains(&r) {
                g.root = Some(r);
            }
        }
        g
    }

    /// Deletes the listed vertices (with incident edges); ids preserved.
    pub fn delete_vertices(&self, gone: &BTreeSet<VertexId>) -> ColoredGraph {
        let mut g = ColoredGraph::new(self.name.clone(), self.directed);
        for v in &self.vertices {
            if !gone.contains(&v.id) {
                g.add_vertex(v.id, v.colors.clone()).unwrap();
            }
        }
        for e in &self.edges {
            if !gone.contains(&e.u) && !gone.contains(&e.v) {
                g.edges.push(e.clone());
            }
        }
        if let Some(r) = self.root {
            if !gone.contains(&r) {
                g.root = Some(r);
            }
        }
        g
    }

    /// Deletes the listed edges; ids of survivors preserved.
    pub fn delete_edges(&self, gone: &BTreeSet<EdgeId>) -> ColoredGraph {
        let mut g = self.clone();
        g.edges.retain(|e| !gone.contains(&e.id));
        g
    }

    /// Keeps only the listed edges.
    pub fn restrict_edges(&self, keep: &BTreeSet<EdgeId>) -> ColoredGraph {
        let mut g = self.clone();
        g.edges.retain(|e| keep.contains(&e.id));
        g
    }
}

/// Convenience constructors used pervasively by tests and generators.
impl ColoredGraph {
    /// Uncolored graph on vertices `0..n` with the given endpoint pairs.
    pub fn from_edges(name: &str, directed: bool, n: u32, pairs: &[(u32, u32)]) -> Self {
        let mut g = ColoredGraph::new(name, directed);
        for i in 0..n {
            g.add_vertex(i, ColorSet::new()).unwrap();
        }
        for &(u, v) in pairs {
            g.add_edge(u, v, ColorSet::new(), None).unwrap();
        }
        g
    }

    /// Graph on vertices `0..n` with per-edge color lists.
    pub fn from_colored_edges(
        name: &str,
        directed: bool,
        n: u32,
        edges: &[(u32, u32, &[ColorId])],
    ) -> Self {
        let mut g = ColoredGraph::new(name, directed);
        for i in 0..n {
            g.add_vertex(i, ColorSet::new()).unwrap();
        }
        for &(u, v, cs) in edges {
            g.add_edge(u, v, cs.iter().copied().collect(), None).unwrap();
        }
        g
    }

    pub fn set_vertex_colors(&mut self, id: VertexId, colors: ColorSet) {
        let i = self.index[&id];
        self.vertices[i].colors = colors;
    }

    pub fn set_edge_colors(&mut self, id: EdgeId, colors: ColorSet) {
        let e = self.edges.iter_mut().find(|e| e.id == id).unwrap();
        e.colors = colors;
    }
}

pub fn colorset(ids: &[ColorId]) -> ColorSet {
    ids.iter().copied().collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Auto-declare vertices referenced by edges. Without the flag this is
    /// only done for inputs that declare no vertex at all.
    pub implicit_vertices: bool,
}

/// Parses the canonical line-oriented format.
///
/// ```text
/// graph <name>
/// directed 0|1
/// root <id>            # optional, digraphs only
/// vertex <id> [c=<c1,c2,...>]
/// edge <u> <v> [w=<decimal>] [c=<c1,c2,...>]
/// ```
///
/// `#` starts a comment. Omitted `c=` means the empty color set.
pub fn parse(text: &str) -> Result<ColoredGraph, Error> {
    parse_with(text, ParseOptions::default())
}

pub fn parse_with(text: &str, opts: ParseOptions) -> Result<ColoredGraph, Error> {
    let mut name: Option<String> = None;
    let mut directed: Option<bool> = None;
    let mut root: Option<VertexId> = None;
    let mut vertex_lines: Vec<(usize, VertexId, ColorSet)> = Vec::new();
    let mut edge_lines: Vec<(usize, VertexId, VertexId, ColorSet, Option<Weight>)> = Vec::new();

    let fail = |line: usize, kind: ParseErrorKind| Err(Error::Parse { line, kind });

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let head = tok.next().unwrap();
        match head {
            "graph" => {
                let n = tok.next().unwrap_or("");
                if n.is_empty() || name.is_some() {
                    return fail(line_no, ParseErrorKind::Malformed);
                }
                name = Some(n.to_string());
            }
            "directed" => {
                let v = tok.next().unwrap_or("");
                directed = match v {
                    "0" => Some(false),
                    "1" => Some(true),
                    _ => return fail(line_no, ParseErrorKind::Malformed),
                };
            }
            "root" => {
                let id = parse_u32(tok.next()).ok_or(Error::Parse {
                    line: line_no,
                    kind: ParseErrorKind::Malformed,
                })?;
                root = Some(id);
            }
            "vertex" => {
                let id = parse_u32(tok.next()).ok_or(Error::Parse {
                    line: line_no,
                    kind: ParseErrorKind::Malformed,
                })?;
                let mut colors = ColorSet::new();
                for t in tok {
                    if let Some(cs) = t.strip_prefix("c=") {
                        colors = parse_colors(cs).ok_or(Error::Parse {
                            line: line_no,
                            kind: ParseErrorKind::Malformed,
                        })?;
                    } else {
                        return fail(line_no, ParseErrorKind::Malformed);
                    }
                }
                vertex_lines.push((line_no, id, colors));
            }
            "edge" => {
                let u = parse_u32(tok.next());
                let v = parse_u32(tok.next());
                let (u, v) = match (u, v) {
                    (Some(u), Some(v)) => (u, v),
                    _ => return fail(line_no, ParseErrorKind::Malformed),
                };
                let mut colors = ColorSet::new();
                let mut weight = None;
                for t in tok {
                    if let Some(cs) = t.strip_prefix("c=") {
                        colors = parse_colors(cs).ok_or(Error::Parse {
                            line: line_no,
                            kind: ParseErrorKind::Malformed,
                        })?;
                    } else if let Some(ws) = t.strip_prefix("w=") {
                        weight = Some(parse_decimal(ws).ok_or(Error::Parse {
                            line: line_no,
                            kind: ParseErrorKind::Malformed,
                        })?);
                    } else {
                        return fail(line_no, ParseErrorKind::Malformed);
                    }
                }
                edge_lines.push((line_no, u, v, colors, weight));
            }
            _ => return fail(line_no, ParseErrorKind::Malformed),
        }
    }

    let mut g = ColoredGraph::new(name.unwrap_or_else(|| "g".to_string()), directed.unwrap_or(false));

    // Pure-edge inputs (no vertex line at all) implicitly declare endpoints.
    let implicit = opts.implicit_vertices || vertex_lines.is_empty();

    for (line, id, colors) in vertex_lines {
        g.add_vertex(id, colors).map_err(|_| Error::Parse {
            line,
            kind: ParseErrorKind::DuplicateVertex(id),
        })?;
    }
    if implicit {
        let mut seen: BTreeSet<VertexId> = g.vertex_ids().collect();
        for &(_, u, v, _, _) in &edge_lines {
            for x in [u, v] {
                if seen.insert(x) {
                    g.add_vertex(x, ColorSet::new()).unwrap();
                }
            }
        }
    }
    for (line, u, v, colors, weight) in edge_lines {
        g.add_edge(u, v, colors, weight).map_err(|e| match e {
            Error::DanglingEndpoint(id) => Error::Parse {
                line,
                kind: ParseErrorKind::DanglingEndpoint(id),
            },
            other => other,
        })?;
    }
    if let Some(r) = root {
        g.set_root(r).map_err(|e| match e {
            Error::RootOnUndirected => Error::Parse {
                line: 0,
                kind: ParseErrorKind::RootOnUndirected,
            },
            Error::DanglingEndpoint(id) => Error::Parse {
                line: 0,
                kind: ParseErrorKind::DanglingEndpoint(id),
            },
            other => other,
        })?;
    }
    if g.edges.iter().any(|e| e.weight.is_some()) && !g.edges.iter().all(|e| e.weight.is_some()) {
        return Err(Error::MixedWeights);
    }
    Ok(g)
}

fn parse_u32(t: Option<&str>) -> Option<u32> {
    t.and_then(|s| s.parse().ok())
}

fn parse_colors(s: &str) -> Option<ColorSet> {
    if s.is_empty() {
        return Some(ColorSet::new());
    }
    let mut out = ColorSet::new();
    for part in s.split(',') {
        out.insert(part.parse().ok()?);
    }
    Some(out)
}

/// Parses a decimal literal into an exact rational.
pub fn parse_decimal(s: &str) -> Option<Weight> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(b) => (-1i64, b),
        None => (1i64, s),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let int: i64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
    let mut num = int;
    let mut den = 1i64;
    for c in frac_part.chars() {
        num = num.checked_mul(10)?.checked_add((c as u8 - b'0') as i64)?;
        den = den.checked_mul(10)?;
    }
    Some(Ratio::new(sign * num, den))
}

/// Formats a rational whose reduced denominator is of the form 2^a·5^b as an
/// exact decimal. Weights parsed from the text format always satisfy this.
pub fn format_decimal(w: Weight) -> String {
    let mut den = *w.denom();
    let mut scale = 1i64;
    let mut twos = 0u32;
    let mut fives = 0u32;
    while den % 2 == 0 {
        den /= 2;
        twos += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        fives += 1;
    }
    assert_eq!(den, 1, "weight {} is not exactly representable as a decimal", w);
    for _ in 0..twos.max(fives) {
        scale *= 10;
    }
    let digits = twos.max(fives) as usize;
    let scaled = w * Ratio::from_integer(scale);
    assert!(scaled.is_integer());
    let scaled = scaled.to_integer();
    let neg = scaled < 0;
    let mag = scaled.unsigned_abs();
    let mut s = if digits == 0 {
        mag.to_string()
    } else {
        let body = format!("{:0width$}", mag, width = digits + 1);
        let cut = body.len() - digits;
        format!("{}.{}", &body[..cut], &body[cut..])
    };
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Serializes to the canonical format: header, root, vertices, edges, with
/// sorted color lists. Output is byte-stable for golden-file comparisons.
pub fn serialize(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", g.name).unwrap();
    writeln!(out, "directed {}", if g.directed { 1 } else { 0 }).unwrap();
    if let Some(r) = g.root {
        writeln!(out, "root {}", r).unwrap();
    }
    for v in &g.vertices {
        write!(out, "vertex {}", v.id).unwrap();
        write_colors(&mut out, &v.colors);
        out.push('\n');
    }
    for e in &g.edges {
        write!(out, "edge {} {}", e.u, e.v).unwrap();
        if let Some(w) = e.weight {
            write!(out, " w={}", format_decimal(w)).unwrap();
        }
        write_colors(&mut out, &e.colors);
        out.push('\n');
    }
    out
}

fn write_colors(out: &mut String, colors: &ColorSet) {
    if colors.is_empty() {
        return;
    }
    let list: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
    write!(out, " c={}", list.join(",")).unwrap();
}
