//! Simple undirected graphs with stable vertex labels, plus the structural
//! queries the rest of the crate leans on (cycles, girth, connectivity).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// An unordered vertex pair, always stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected by the graph, not here.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn has(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Simple undirected graph. No loops, no parallel edges.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(v={}, e={}, edges=[", self.v(), self.e())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            vertices: self.vertices().collect(),
            edges: self.edges().map(|e| (e.0, e.1)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        let mut g = Graph::new();
        for v in repr.vertices {
            g.add_vertex(v);
        }
        for (u, v) in repr.edges {
            g.add_edge(u, v).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on vertices `0..n`.
    pub fn empty(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n as Vertex {
            g.add_vertex(v);
        }
        g
    }

    /// Graph on `0..n` with the given edges. Panics on loops or bad endpoints;
    /// intended for literals in code and tests.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("invalid edge literal");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::empty(n);
        for i in 0..n as Vertex {
            g.add_edge(i, (i + 1) % n as Vertex).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n as Vertex {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    /// K4 minus an edge; vertices 0 and 1 are the two of degree 3.
    pub fn diamond() -> Self {
        Self::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Smallest label larger than every existing label.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<Edge> {
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(Error::MissingVertex(x));
            }
        }
        if !self.adj.get_mut(&u).unwrap().insert(v) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge {}",
                Edge::new(u, v)
            )));
        }
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(Edge::new(u, v))
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<()> {
        let removed = self.adj.get_mut(&e.0).is_some_and(|n| n.remove(&e.1));
        if !removed {
            return Err(Error::MissingEdge(e));
        }
        self.adj.get_mut(&e.1).unwrap().remove(&e.0);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        let nbrs = self.adj.remove(&v).ok_or(Error::MissingVertex(v))?;
        for u in nbrs {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        Ok(())
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_edge(e)?;
        Ok(g)
    }

    /// Drops every vertex of degree zero.
    pub fn without_isolated(&self) -> Graph {
        let mut g = self.clone();
        g.adj.retain(|_, n| !n.is_empty());
        g
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Number of vertices.
    pub fn v(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn e(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in ascending `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).max()
    }

    /// Subgraph induced on `keep` (labels not in the graph are ignored).
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// Subgraph with all vertices of `self` but only the edges in `edges`.
    pub fn spanning_with(&self, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let mut g = Graph {
            adj: self.adj.keys().map(|&v| (v, BTreeSet::new())).collect(),
        };
        for e in edges {
            g.add_edge(e.0, e.1).expect("edge of a subgraph");
        }
        g
    }

    /// Relabels vertices to `0..n` in ascending label order.
    pub fn compact(&self) -> Graph {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        let adj = self
            .adj
            .iter()
            .map(|(v, n)| (index[v], n.iter().map(|u| index[u]).collect()))
            .collect();
        Graph { adj }
    }

    pub fn is_compact(&self) -> bool {
        self.vertices().enumerate().all(|(i, v)| i as Vertex == v)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen.contains(&root) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.v() <= 1 || self.components().len() == 1
    }

    /// True iff v ≥ 3, connected, and no single vertex disconnects it.
    pub fn is_two_connected(&self) -> bool {
        if self.v() < 3 || !self.is_connected() {
            return false;
        }
        self.cut_vertices().is_empty()
    }

    /// Articulation points via the classic low-link DFS.
    pub fn cut_vertices(&self) -> BTreeSet<Vertex> {
        let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut cuts = BTreeSet::new();
        let mut time = 0usize;
        for root in self.vertices() {
            if disc.contains_key(&root) {
                continue;
            }
            // (vertex, parent, neighbor list, next index)
            let mut stack: Vec<(Vertex, Option<Vertex>, Vec<Vertex>, usize)> = Vec::new();
            disc.insert(root, time);
            low.insert(root, time);
            time += 1;
            stack.push((root, None, self.neighbors(root).collect(), 0));
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (x, parent) = (top.0, top.1);
                if top.3 < top.2.len() {
                    let y = top.2[top.3];
                    top.3 += 1;
                    if Some(y) == parent {
                        continue;
                    }
                    if let Some(&dy) = disc.get(&y) {
                        let lx = low[&x].min(dy);
                        low.insert(x, lx);
                    } else {
                        disc.insert(y, time);
                        low.insert(y, time);
                        time += 1;
                        if x == root {
                            root_children += 1;
                        }
                        stack.push((y, Some(x), self.neighbors(y).collect(), 0));
                    }
                } else {
                    stack.pop();
                    if let Some(p) = parent {
                        let lp = low[&p].min(low[&x]);
                        low.insert(p, lp);
                        if p != root && low[&x] >= disc[&p] {
                            cuts.insert(p);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cuts.insert(root);
            }
        }
        cuts
    }

    pub fn is_forest(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Some cycle, found by breadth-first search from the smallest vertex of
    /// each component; the first non-tree edge met closes it.
    pub fn find_cycle(&self) -> Option<Cycle> {
        let mut parent: BTreeMap<Vertex, Option<Vertex>> = BTreeMap::new();
        for root in self.vertices() {
            if parent.contains_key(&root) {
                continue;
            }
            parent.insert(root, None);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if parent[&x] == Some(y) {
                        continue;
                    }
                    if parent.contains_key(&y) {
                        return Some(close_tree_cycle(&parent, x, y));
                    }
                    parent.insert(y, Some(x));
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist: BTreeMap<Vertex, usize> = BTreeMap::new();
            let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
            dist.insert(root, 0);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    match dist.get(&y) {
                        None => {
                            dist.insert(y, dist[&x] + 1);
                            parent.insert(y, x);
                            queue.push_back(y);
                        }
                        Some(&dy) if parent.get(&x) != Some(&y) => {
                            let len = dist[&x] + dy + 1;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                        _ => {}
                    }
                }
            }
        }
        best
    }

    /// A shortest cycle. Among all shortest cycles the lexicographically
    /// smallest vertex sequence is returned: the smallest possible start
    /// vertex, then the smaller neighbor, and so on.
    pub fn girth_cycle(&self) -> Option<Cycle> {
        let g = self.girth()?;
        for start in self.vertices() {
            let dist = self.distances_from(start);
            let mut path = vec![start];
            let mut on_path = BTreeSet::from([start]);
            if self.extend_cycle(g, &dist, &mut path, &mut on_path) {
                return Some(Cycle { vertices: path });
            }
        }
        unreachable!("girth was found, so some vertex lies on a shortest cycle")
    }

    fn extend_cycle(
        &self,
        g: usize,
        dist: &BTreeMap<Vertex, usize>,
        path: &mut Vec<Vertex>,
        on_path: &mut BTreeSet<Vertex>,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == g {
            return self.has_edge(last, start);
        }
        for y in self.neighbors(last) {
            if on_path.contains(&y) {
                continue;
            }
            // the walk must still be able to return to the start in time
            let remaining = g - path.len();
            if dist.get(&y).is_none_or(|&d| d > remaining) {
                continue;
            }
            path.push(y);
            on_path.insert(y);
            if self.extend_cycle(g, dist, path, on_path) {
                return true;
            }
            path.pop();
            on_path.remove(&y);
        }
        false
    }

    pub fn distances_from(&self, root: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::from([(root, 0)]);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            for y in self.neighbors(x) {
                if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(y) {
                    slot.insert(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// True iff the graph is connected and 2-regular (a single cycle).
    pub fn is_cycle_graph(&self) -> bool {
        self.v() >= 3 && self.is_connected() && self.adj.values().all(|n| n.len() == 2)
    }

    /// True iff the graph is isomorphic to K4 minus an edge.
    pub fn is_diamond(&self) -> bool {
        if self.v() != 4 || self.e() != 5 {
            return false;
        }
        let mut degs: Vec<usize> = self.adj.values().map(BTreeSet::len).collect();
        degs.sort_unstable();
        degs == [2, 2, 3, 3]
    }

    /// Size of a largest clique (exhaustive; fine for small graphs).
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, clique: &mut Vec<Vertex>, candidates: Vec<Vertex>, best: &mut usize) {
            *best = (*best).max(clique.len());
            for (i, &c) in candidates.iter().enumerate() {
                if clique.len() + candidates.len() - i <= *best {
                    return;
                }
                let next = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&x| g.has_edge(c, x))
                    .collect();
                clique.push(c);
                grow(g, clique, next, best);
                clique.pop();
            }
        }
        let mut best = 0;
        grow(self, &mut Vec::new(), self.vertices().collect(), &mut best);
        best
    }

    /// The r-fold inflation: every edge replaced by `r` distinguishable copies.
    pub fn inflate(&self, r: usize) -> Multigraph {
        Multigraph {
            vertices: self.vertices().collect(),
            edges: self
                .edges()
                .flat_map(|e| (0..r).map(move |copy| EdgeCopy { edge: e, copy }))
                .collect(),
        }
    }
}

fn close_tree_cycle(parent: &BTreeMap<Vertex, Option<Vertex>>, x: Vertex, y: Vertex) -> Cycle {
    let ancestors = |mut v: Vertex| {
        let mut path = vec![v];
        while let Some(p) = parent[&v] {
            path.push(p);
            v = p;
        }
        path
    };
    let px = ancestors(x);
    let py = ancestors(y);
    let in_py: BTreeSet<Vertex> = py.iter().copied().collect();
    let lca_pos = px.iter().position(|v| in_py.contains(v)).unwrap();
    let lca = px[lca_pos];
    let mut vertices: Vec<Vertex> = px[..=lca_pos].to_vec();
    let y_side: Vec<Vertex> = py.iter().copied().take_while(|&v| v != lca).collect();
    vertices.extend(y_side.into_iter().rev());
    Cycle { vertices }
}

/// A cycle as a closed sequence of distinct vertices; the closing edge from
/// the last vertex back to the first is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| Edge::new(self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    /// Checks length, distinctness and that every step is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        self.len() >= 3
            && distinct.len() == self.len()
            && self.edges().iter().all(|e| g.has_edge(e.0, e.1))
    }
}

/// One of the `r` copies of an edge in the r-fold inflation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeCopy {
    pub edge: Edge,
    pub copy: usize,
}

/// Multigraph whose parallel edges are told apart by a copy index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeCopy>,
}
