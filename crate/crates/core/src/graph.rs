//! Simple oriented graphs and the graph-level analysis behind every
//! monoid-level decision: strongly connected components, the PI criterion,
//! the cyclic core, and enumeration of acyclic full subgraphs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A finite simple oriented graph on vertices `1..=n`.
///
/// Simplicity means: no self-loops, no duplicate arrows, and at most one
/// arrow between any unordered pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arrows: BTreeSet<(usize, usize)>,
}

/// Classification of a weakly connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Singleton,
    /// A single oriented cycle; the payload is its length (>= 3).
    Cycle(usize),
    /// Anything else (only occurs for graphs that fail the PI criterion).
    Other,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Singleton => write!(f, "singleton"),
            ComponentKind::Cycle(j) => write!(f, "cycle({j})"),
            ComponentKind::Other => write!(f, "other"),
        }
    }
}

/// A weakly connected component together with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("double arrow: both {u} -> {v} and {v} -> {u}")]
    DoubleArrow { u: usize, v: usize },
    #[error("duplicate arrow {u} -> {v}")]
    DuplicateArrow { u: usize, v: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("line {line}: expected `u -> v`, got `{text}`")]
    BadLine { line: usize, text: String },
    #[error("line {line}: {source}")]
    Structure { line: usize, source: GraphError },
    #[error("empty graph description")]
    Empty,
}

impl OrientedGraph {
    /// Builds a graph, checking the simplicity invariants.
    pub fn new(
        n: usize,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = OrientedGraph { n, arrows: BTreeSet::new() };
        for (u, v) in arrows {
            g.insert_arrow(u, v)?;
        }
        Ok(g)
    }

    fn insert_arrow(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        if self.arrows.contains(&(v, u)) {
            return Err(GraphError::DoubleArrow { u, v });
        }
        if !self.arrows.insert((u, v)) {
            return Err(GraphError::DuplicateArrow { u, v });
        }
        Ok(())
    }

    /// The oriented cycle `1 -> 2 -> ... -> n -> 1`. Requires `n >= 3`
    /// (shorter cycles violate simplicity).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "an oriented cycle needs at least 3 vertices");
        let arrows = (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1)));
        OrientedGraph::new(n, arrows).expect("cycle arrows are simple")
    }

    /// The oriented path `1 -> 2 -> ... -> n` (no arrows when `n == 1`).
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        OrientedGraph::new(n, (1..n).map(|i| (i, i + 1))).expect("path arrows are simple")
    }

    /// `n` vertices, no arrows.
    pub fn edgeless(n: usize) -> Self {
        OrientedGraph { n, arrows: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// Arrows in sorted order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn has_arrow(&self, u: usize, v: usize) -> bool {
        self.arrows.contains(&(u, v))
    }

    /// True when there is an arrow between `u` and `v` in either direction.
    pub fn connected(&self, u: usize, v: usize) -> bool {
        self.has_arrow(u, v) || self.has_arrow(v, u)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.arrows {
            adj[u].push(v);
        }
        adj
    }

    /// Parses the external edge-list format.
    ///
    /// First content line is the vertex count; every further non-empty,
    /// non-`#` line reads `u -> v`. If the first content line is not a bare
    /// integer it is treated as an edge and the vertex count defaults to the
    /// largest vertex mentioned. Accepts LF or CRLF.
    pub fn parse(text: &str) -> Result<Self, GraphParseError> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut seen_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !seen_content {
                seen_content = true;
                if let Ok(k) = line.parse::<usize>() {
                    declared = Some(k);
                    continue;
                }
            }
            let (u, v) = parse_edge_line(line)
                .ok_or_else(|| GraphParseError::BadLine { line: line_no, text: line.to_string() })?;
            edges.push((u, v, line_no));
        }
        if !seen_content {
            return Err(GraphParseError::Empty);
        }
        let n = declared
            .unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0));
        let mut g = OrientedGraph { n, arrows: BTreeSet::new() };
        for (u, v, line) in edges {
            g.insert_arrow(u, v)
                .map_err(|source| GraphParseError::Structure { line, source })?;
        }
        Ok(g)
    }

    /// Renders the graph in the same edge-list format `parse` accepts.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.arrows {
            out.push_str(&format!("{u} -> {v}\n"));
        }
        out
    }

    /// Strongly connected components (Tarjan, iterative). Each component is
    /// sorted; components are ordered by their smallest vertex.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let adj = self.adjacency();
        let mut index = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut visited = vec![false; n + 1];
        let mut on_stack = vec![false; n + 1];
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 1usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();

        for root in 1..=n {
            if visited[root] {
                continue;
            }
            let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
            while let Some(frame) = frames.last_mut() {
                let (v, cursor) = *frame;
                if cursor == 0 {
                    visited[v] = true;
                    index[v] = next;
                    low[v] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if cursor < adj[v].len() {
                    frame.1 += 1;
                    let w = adj[v][cursor];
                    if !visited[w] {
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(p, _)) = frames.last() {
                        low[p] = low[p].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    fn scc_ids(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let comps = self.sccs();
        let mut id = vec![usize::MAX; self.n + 1];
        for (k, comp) in comps.iter().enumerate() {
            for &v in comp {
                id[v] = k;
            }
        }
        (comps, id)
    }

    pub fn is_acyclic(&self) -> bool {
        self.sccs().iter().all(|c| c.len() == 1)
    }

    /// True when the graph is exactly the standard oriented cycle
    /// `1 -> 2 -> ... -> n -> 1`.
    pub fn is_standard_cycle(&self) -> bool {
        if self.n < 3 || self.arrows.len() != self.n {
            return false;
        }
        (1..self.n).all(|i| self.has_arrow(i, i + 1)) && self.has_arrow(self.n, 1)
    }

    /// Decides the polynomial-identity criterion: every strongly connected
    /// component must be a singleton or a single chordless oriented cycle,
    /// and no oriented path may connect two distinct cyclic components.
    pub fn is_pi(&self) -> bool {
        let (comps, id) = self.scc_ids();
        for comp in &comps {
            if comp.len() == 1 {
                continue;
            }
            let inside: BTreeSet<usize> = comp.iter().copied().collect();
            for &v in comp {
                let outdeg = self.arrows.iter().filter(|&&(u, w)| u == v && inside.contains(&w)).count();
                let indeg = self.arrows.iter().filter(|&&(u, w)| w == v && inside.contains(&u)).count();
                if outdeg != 1 || indeg != 1 {
                    return false;
                }
            }
        }
        // Condensation reachability between distinct cyclic components.
        let m = comps.len();
        let mut cond = vec![BTreeSet::new(); m];
        for &(u, v) in &self.arrows {
            if id[u] != id[v] {
                cond[id[u]].insert(id[v]);
            }
        }
        let cyclic: Vec<bool> = comps.iter().map(|c| c.len() > 1).collect();
        for start in 0..m {
            if !cyclic[start] {
                continue;
            }
            let mut seen = vec![false; m];
            let mut todo = vec![start];
            while let Some(c) = todo.pop() {
                for &d in &cond[c] {
                    if !seen[d] {
                        seen[d] = true;
                        if cyclic[d] {
                            return false;
                        }
                        todo.push(d);
                    }
                }
            }
        }
        true
    }

    /// The cyclic core: same vertex set, keeping exactly the arrows whose
    /// endpoints lie in the same strongly connected component (equivalently,
    /// the arrows contained in some oriented cycle).
    pub fn cyclic_core(&self) -> OrientedGraph {
        let (_, id) = self.scc_ids();
        let arrows = self
            .arrows
            .iter()
            .copied()
            .filter(|&(u, v)| id[u] == id[v]);
        OrientedGraph::new(self.n, arrows).expect("subset of a simple graph stays simple")
    }

    /// Weakly connected components, classified as singleton, oriented cycle,
    /// or other. Components are ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n;
        let mut undirected = vec![Vec::new(); n + 1];
        for &(u, v) in &self.arrows {
            undirected[u].push(v);
            undirected[v].push(u);
        }
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for root in 1..=n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut verts = vec![root];
            let mut todo = vec![root];
            while let Some(v) = todo.pop() {
                for &w in &undirected[v] {
                    if !seen[w] {
                        seen[w] = true;
                        verts.push(w);
                        todo.push(w);
                    }
                }
            }
            verts.sort_unstable();
            let kind = self.classify_component(&verts);
            out.push(Component { vertices: verts, kind });
        }
        out
    }

    fn classify_component(&self, verts: &[usize]) -> ComponentKind {
        if verts.len() == 1 {
            return ComponentKind::Singleton;
        }
        let inside: BTreeSet<usize> = verts.iter().copied().collect();
        // In-degree = out-degree = 1 for every vertex of a weakly connected
        // set forces a single oriented cycle.
        for &v in verts {
            let outdeg = self.arrows.iter().filter(|&&(u, w)| u == v && inside.contains(&w)).count();
            let indeg = self.arrows.iter().filter(|&&(u, w)| w == v && inside.contains(&u)).count();
            if outdeg != 1 || indeg != 1 {
                return ComponentKind::Other;
            }
        }
        ComponentKind::Cycle(verts.len())
    }

    /// For a cycle component, lists its vertices in arrow order starting
    /// from the smallest one. Returns `None` for non-cycle components.
    pub fn cycle_order(&self, verts: &[usize]) -> Option<Vec<usize>> {
        if self.classify_component(verts) != ComponentKind::Cycle(verts.len()) {
            return None;
        }
        let start = *verts.iter().min().expect("nonempty component");
        let mut order = vec![start];
        let mut cur = start;
        for _ in 1..verts.len() {
            let next = self
                .arrows
                .iter()
                .find(|&&(u, _)| u == cur)
                .map(|&(_, v)| v)
                .expect("cycle vertex has an out-arrow");
            order.push(next);
            cur = next;
        }
        Some(order)
    }

    /// Iterates over all vertex subsets whose induced subgraph is acyclic,
    /// in bitmask order (so the empty set comes first).
    pub fn acyclic_full_subgraphs(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        assert!(self.n < 64, "subset enumeration uses a 64-bit mask");
        (0u64..(1u64 << self.n)).filter_map(move |mask| {
            let verts: Vec<usize> = (1..=self.n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
            if self.induced_is_acyclic(&verts) {
                Some(verts)
            } else {
                None
            }
        })
    }

    fn induced_is_acyclic(&self, verts: &[usize]) -> bool {
        let inside: BTreeSet<usize> = verts.iter().copied().collect();
        // Kahn's algorithm restricted to the induced subgraph.
        let mut indeg: Vec<usize> = Vec::with_capacity(verts.len());
        for &v in verts {
            indeg.push(self.arrows.iter().filter(|&&(u, w)| w == v && inside.contains(&u)).count());
        }
        let pos: std::collections::BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut queue: Vec<usize> = (0..verts.len()).filter(|&i| indeg[i] == 0).collect();
        let mut removed = 0;
        while let Some(i) = queue.pop() {
            removed += 1;
            let v = verts[i];
            for &(u, w) in &self.arrows {
                if u == v && inside.contains(&w) {
                    let j = pos[&w];
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push(j);
                    }
                }
            }
        }
        removed == verts.len()
    }

    /// Deterministic topological order of an acyclic graph (smallest vertex
    /// first among available ones). Returns `None` when the graph has a
    /// directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut indeg = vec![0usize; n + 1];
        for &(_, v) in &self.arrows {
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for &(u, w) in &self.arrows {
                if u == v {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        ready.insert(w);
                    }
                }
            }
        }
        if order.len() == n {
            Some(order)
        } else {
            None
        }
    }
}

fn parse_edge_line(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split("->");
    let u = parts.next()?.trim().parse::<usize>().ok()?;
    let v = parts.next()?.trim().parse::<usize>().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((u, v))
}
