//! Sparsity of the r-fold inflation `G^r`.
//!
//! `G` fails to be 1/r-Ramsey for cyclicity exactly when every subgraph `H`
//! has `r·e(H) ≤ (r+1)(v(H) − 1)`, i.e. when `G^r` is `(r+1, r+1)`-sparse.
//! [`pebble_sparse`] decides this with the `(k, ℓ)`-pebble game (`k = ℓ = r+1`)
//! and hands back a dense subgraph on failure. [`forest_decomposition`] turns
//! a sparse `G^r` into `r + 1` forests by matroid-union augmentation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeCopy, Graph, Vertex};

/// True iff `r·e ≥ (r+1)·v − r`, the density that forces a ≤r-coloured cycle.
pub fn is_violating_count(r: usize, v: usize, e: usize) -> bool {
    v > 0 && r * e + r >= (r + 1) * v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Sparse,
    Violating,
}

#[derive(Clone, Debug, Serialize)]
pub struct SparsityCertificate {
    pub r: usize,
    pub verdict: Verdict,
    /// Subgraph with `r·e(H) ≥ (r+1)·v(H) − r`, present iff violating.
    pub witness: Option<Graph>,
    /// `r + 1` forests partitioning the copies of `G^r`, when requested.
    pub forests: Option<Vec<Vec<EdgeCopy>>>,
}

impl SparsityCertificate {
    fn violating(r: usize, witness: Graph) -> Result<Self> {
        if !is_violating_count(r, witness.v(), witness.e()) {
            return Err(Error::Internal(format!(
                "witness with v={} e={} does not violate for r={r}",
                witness.v(),
                witness.e()
            )));
        }
        Ok(Self {
            r,
            verdict: Verdict::Violating,
            witness: Some(witness),
            forests: None,
        })
    }

    pub fn is_sparse(&self) -> bool {
        self.verdict == Verdict::Sparse
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    Ok(())
}

/// Vertex labels mapped to dense indices.
struct Indexed {
    labels: Vec<Vertex>,
    index: BTreeMap<Vertex, usize>,
}

impl Indexed {
    fn new(g: &Graph) -> Self {
        let labels: Vec<Vertex> = g.vertices().collect();
        let index = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Self { labels, index }
    }
}

/// State of the `(k, ℓ)` pebble game with `k = ℓ`.
struct PebbleGame {
    k: usize,
    pebbles: Vec<usize>,
    /// Directed accepted edges, tail -> heads (parallel copies repeat).
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize, k: usize) -> Self {
        Self {
            k,
            pebbles: vec![k; n],
            out: vec![Vec::new(); n],
        }
    }

    /// Moves one free pebble onto `target` along a directed path, never
    /// drawing from `target` or `other`. Returns false if none is reachable.
    fn fetch(&mut self, target: usize, other: usize) -> bool {
        let n = self.pebbles.len();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[target] = true;
        seen[other] = true;
        let mut stack = vec![target];
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                prev[y] = Some(x);
                if self.pebbles[y] > 0 {
                    // reverse the path target -> ... -> y
                    self.pebbles[y] -= 1;
                    self.pebbles[target] += 1;
                    let mut cur = y;
                    while let Some(p) = prev[cur] {
                        let pos = self.out[p].iter().position(|&h| h == cur).unwrap();
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    /// Tries to accept the edge `uv`; on failure returns the set of vertices
    /// reachable from `u` or `v`, which spans a tight block.
    fn insert(&mut self, u: usize, v: usize) -> std::result::Result<(), BTreeSet<usize>> {
        // ℓ + 1 = k + 1 pebbles are required on the two endpoints
        while self.pebbles[u] + self.pebbles[v] < self.k + 1 {
            if self.pebbles[u] < self.k && self.fetch(u, v) {
                continue;
            }
            if self.pebbles[v] < self.k && self.fetch(v, u) {
                continue;
            }
            return Err(self.reach(&[u, v]));
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        Ok(())
    }

    fn reach(&self, roots: &[usize]) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = roots.iter().copied().collect();
        let mut stack: Vec<usize> = roots.to_vec();
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Runs the `(r+1, r+1)` pebble game over `G^r`, inserting the `r` copies of
/// each edge in ascending edge order. A rejected copy yields a violating
/// subgraph: all edges of `G` inside the pebble-reachability region.
pub fn pebble_sparse(g: &Graph, r: usize) -> Result<SparsityCertificate> {
    check_r(r)?;
    let idx = Indexed::new(g);
    let mut game = PebbleGame::new(idx.labels.len(), r + 1);
    for e in g.edges() {
        let (u, v) = (idx.index[&e.0], idx.index[&e.1]);
        for _ in 0..r {
            if let Err(region) = game.insert(u, v) {
                let keep: BTreeSet<Vertex> = region.iter().map(|&i| idx.labels[i]).collect();
                return SparsityCertificate::violating(r, g.induced(&keep));
            }
        }
    }
    Ok(SparsityCertificate {
        r,
        verdict: Verdict::Sparse,
        witness: None,
        forests: None,
    })
}

/// Partitions the edge copies of `G^r` into `r + 1` forests.
///
/// Copies are inserted one at a time; when no forest accepts a copy directly,
/// a breadth-first search over exchanges (swap the copy into forest `i`,
/// evicting an element of the cycle it closes there) finds a shortest
/// augmenting sequence. Forests are tried in ascending index order.
pub fn forest_decomposition(g: &Graph, r: usize) -> Result<SparsityCertificate> {
    let check = pebble_sparse(g, r)?;
    if let Some(witness) = check.witness {
        return Err(Error::Member { r, witness });
    }
    let idx = Indexed::new(g);
    let edges: Vec<Edge> = g.edges().collect();
    let elements: Vec<(usize, usize)> = edges
        .iter()
        .flat_map(|e| std::iter::repeat_n((idx.index[&e.0], idx.index[&e.1]), r))
        .collect();
    let mut part = Partition::new(idx.labels.len(), r + 1, &elements);
    for x in 0..elements.len() {
        if !part.insert(x) {
            return Err(Error::Internal(format!(
                "no augmenting path for copy {} of {}",
                x % r,
                edges[x / r]
            )));
        }
    }

    let mut forests: Vec<Vec<EdgeCopy>> = vec![Vec::new(); r + 1];
    for (x, owner) in part.owner.iter().enumerate() {
        let f = owner.expect("every copy placed");
        forests[f].push(EdgeCopy {
            edge: edges[x / r],
            copy: x % r,
        });
    }
    let cert = SparsityCertificate {
        r,
        verdict: Verdict::Sparse,
        witness: None,
        forests: Some(forests),
    };
    check_forests(g, &cert)?;
    Ok(cert)
}

/// Matroid-union state: which forest owns each element, and each forest's
/// adjacency as (neighbor, element) pairs.
struct Partition<'a> {
    elements: &'a [(usize, usize)],
    owner: Vec<Option<usize>>,
    adj: Vec<Vec<Vec<(usize, usize)>>>,
}

impl<'a> Partition<'a> {
    fn new(n: usize, forests: usize, elements: &'a [(usize, usize)]) -> Self {
        Self {
            elements,
            owner: vec![None; elements.len()],
            adj: vec![vec![Vec::new(); n]; forests],
        }
    }

    fn place(&mut self, x: usize, f: usize) {
        let (a, b) = self.elements[x];
        self.adj[f][a].push((b, x));
        self.adj[f][b].push((a, x));
        self.owner[x] = Some(f);
    }

    fn unplace(&mut self, x: usize) {
        if let Some(f) = self.owner[x].take() {
            let (a, b) = self.elements[x];
            self.adj[f][a].retain(|&(_, y)| y != x);
            self.adj[f][b].retain(|&(_, y)| y != x);
        }
    }

    /// Elements on the forest-`f` path between the endpoints of `x`, or
    /// `None` when they lie in different trees.
    fn tree_path(&self, f: usize, x: usize) -> Option<Vec<usize>> {
        let (a, b) = self.elements[x];
        let n = self.adj[f].len();
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(p) = queue.pop_front() {
            if p == b {
                let mut path = Vec::new();
                let mut cur = b;
                while let Some((q, elem)) = via[cur] {
                    path.push(elem);
                    cur = q;
                }
                return Some(path);
            }
            for &(q, elem) in &self.adj[f][p] {
                if !seen[q] {
                    seen[q] = true;
                    via[q] = Some((p, elem));
                    queue.push_back(q);
                }
            }
        }
        None
    }

    fn insert(&mut self, x: usize) -> bool {
        let forests = self.adj.len();
        // parent[z] = (y, f): z sits in forest f and y may take its place
        let mut parent: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut seen = BTreeSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for f in 0..forests {
                if self.owner[y] == Some(f) {
                    continue;
                }
                match self.tree_path(f, y) {
                    None => {
                        self.augment(x, y, f, &parent);
                        return true;
                    }
                    Some(path) => {
                        for z in path {
                            if seen.insert(z) {
                                parent.insert(z, (y, f));
                                queue.push_back(z);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, x: usize, mut cur: usize, mut target: usize, parent: &BTreeMap<usize, (usize, usize)>) {
        loop {
            let vacated = self.owner[cur];
            self.unplace(cur);
            self.place(cur, target);
            if cur == x {
                return;
            }
            let (prev, f) = parent[&cur];
            debug_assert_eq!(vacated, Some(f));
            cur = prev;
            target = f;
        }
    }
}

/// Checks that the certificate's forests partition `E(G^r)`, that each is
/// acyclic, and that no forest holds two copies of one edge.
pub fn check_forests(g: &Graph, cert: &SparsityCertificate) -> Result<()> {
    let r = cert.r;
    let forests = cert
        .forests
        .as_ref()
        .ok_or_else(|| Error::Internal("certificate carries no forests".into()))?;
    if forests.len() != r + 1 {
        return Err(Error::Internal(format!("expected {} forests", r + 1)));
    }
    let mut seen: BTreeSet<EdgeCopy> = BTreeSet::new();
    for (i, forest) in forests.iter().enumerate() {
        let mut edges = BTreeSet::new();
        for c in forest {
            if !g.has_edge(c.edge.0, c.edge.1) || c.copy >= r || !seen.insert(*c) {
                return Err(Error::Internal(format!("forest {i}: bad copy {c:?}")));
            }
            if !edges.insert(c.edge) {
                return Err(Error::Internal(format!(
                    "forest {i} holds two copies of {}",
                    c.edge
                )));
            }
        }
        if !g.spanning_with(edges).is_forest() {
            return Err(Error::Internal(format!("forest {i} has a cycle")));
        }
    }
    if seen.len() != g.e() * r {
        return Err(Error::Internal("forests do not cover every copy".into()));
    }
    Ok(())
}
