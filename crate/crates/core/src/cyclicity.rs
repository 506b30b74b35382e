//! Membership, minimality and certificates for 1/r-Ramsey graphs for cyclicity.
//!
//! A graph is 1/r-Ramsey for cyclicity when every `(r+1)`-edge-colouring has a
//! cycle using at most `r` colours. Membership is decided through the pebble
//! game on `G^r` ([`crate::sparsity`]); both outcomes come with a certificate
//! that can be checked on its own: a dense subgraph for members, a colouring in
//! which every cycle is rainbow-complete for non-members.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Edge, Graph, Vertex};
use crate::sparsity::{forest_decomposition, is_violating_count, pebble_sparse};
use crate::surgery::contract_shortest_cycle;

pub const DEFAULT_DIAMOND_CAP: usize = 14;

/// Total map from edges to colours `1..=r+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    pub r: usize,
    pub colours: BTreeMap<Edge, usize>,
}

impl Serialize for EdgeColouring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            r: usize,
            colours: Vec<(u32, u32, usize)>,
        }
        Repr {
            r: self.r,
            colours: self.colours.iter().map(|(e, &c)| (e.0, e.1, c)).collect(),
        }
        .serialize(s)
    }
}

impl EdgeColouring {
    pub fn new(r: usize) -> Self {
        Self {
            r,
            colours: BTreeMap::new(),
        }
    }

    pub fn get(&self, e: Edge) -> Option<usize> {
        self.colours.get(&e).copied()
    }

    /// Parses lines of `u v colour`.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let mut out = Self::new(r);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                location: format!("line {}", lineno + 1),
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!("expected `u v colour`, found {line:?}")));
            }
            let nums: Vec<usize> = fields
                .iter()
                .map(|f| f.parse::<usize>().map_err(|_| err(format!("invalid number {f:?}"))))
                .collect::<Result<_>>()?;
            let e = Edge::new(nums[0] as Vertex, nums[1] as Vertex);
            if out.colours.insert(e, nums[2]).is_some() {
                return Err(err(format!("edge {e} coloured twice")));
            }
        }
        Ok(out)
    }

    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.colours {
            writeln!(s, "{} {} {}", e.0, e.1, c).unwrap();
        }
        s
    }

    /// Errors unless the colouring covers exactly `E(g)` with colours in range.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        for e in g.edges() {
            match self.get(e) {
                None => return Err(Error::Colouring(format!("edge {e} is uncoloured"))),
                Some(c) if c == 0 || c > self.r + 1 => {
                    return Err(Error::Colouring(format!(
                        "edge {e} has colour {c}, outside 1..={}",
                        self.r + 1
                    )))
                }
                _ => {}
            }
        }
        if let Some(e) = self.colours.keys().find(|e| !g.has_edge(e.0, e.1)) {
            return Err(Error::Colouring(format!("edge {e} is not in the graph")));
        }
        Ok(())
    }
}

/// A cycle using at most `r` colours, or `None` if every cycle sees all
/// `r + 1` colours. A cycle avoids some colour iff it uses at most `r`, so each
/// colour class is deleted in turn (colour 1 first) and the rest searched.
pub fn verify_colouring(g: &Graph, c: &EdgeColouring) -> Result<Option<Cycle>> {
    c.check_total(g)?;
    for missing in 1..=c.r + 1 {
        let rest = g.spanning_with(g.edges().filter(|&e| c.colours[&e] != missing));
        if let Some(cycle) = rest.find_cycle() {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Subgraph `H` with `r·e(H) ≥ (r+1)·v(H) − r`.
    ViolatingSubgraph { subgraph: Graph },
    /// Colouring in which every cycle uses all `r + 1` colours.
    GoodColouring { colouring: EdgeColouring },
}

#[derive(Clone, Debug, Serialize)]
pub struct RamseyVerdict {
    pub r: usize,
    pub member: bool,
    /// `None` when minimality was not evaluated.
    pub minimal: Option<bool>,
    pub certificate: Certificate,
    /// For members that are not minimal: an edge whose removal keeps membership,
    /// or `None` when an isolated vertex is the reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub redundant_edge: Option<Edge>,
}

impl RamseyVerdict {
    /// Re-checks the certificate against `g` without trusting the decision path.
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.certificate, self.member) {
            (Certificate::ViolatingSubgraph { subgraph }, true) => {
                is_violating_count(self.r, subgraph.v(), subgraph.e())
                    && subgraph.edges().all(|e| g.has_edge(e.0, e.1))
                    && subgraph.vertices().all(|v| g.contains_vertex(v))
            }
            (Certificate::GoodColouring { colouring }, false) => {
                matches!(verify_colouring(g, colouring), Ok(None))
            }
            _ => false,
        }
    }
}

/// Membership only, without building a certificate.
pub fn is_member(g: &Graph, r: usize) -> Result<bool> {
    Ok(!pebble_sparse(g, r)?.is_sparse())
}

/// Minimality only, without building certificates.
pub fn is_minimal_member(g: &Graph, r: usize) -> Result<bool> {
    if g.min_degree() == Some(0) || !is_member(g, r)? {
        return Ok(false);
    }
    for e in g.edges() {
        if is_member(&g.without_edge(e)?, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_ramsey_cyclicity(g: &Graph, r: usize) -> Result<RamseyVerdict> {
    let cert = pebble_sparse(g, r)?;
    let member = !cert.is_sparse();
    let certificate = match cert.witness {
        Some(subgraph) => Certificate::ViolatingSubgraph { subgraph },
        None => Certificate::GoodColouring {
            colouring: witness_colouring(g, r)?,
        },
    };
    Ok(RamseyVerdict {
        r,
        member,
        minimal: None,
        certificate,
        redundant_edge: None,
    })
}

/// Minimal iff a member with no isolated vertices whose every single-edge
/// deletion is a non-member. Any proper subgraph lies inside some `G − e`
/// once isolated vertices are excluded, so edge deletions suffice.
pub fn is_minimal_cyclicity(g: &Graph, r: usize) -> Result<RamseyVerdict> {
    let mut verdict = is_ramsey_cyclicity(g, r)?;
    if !verdict.member {
        verdict.minimal = Some(false);
        return Ok(verdict);
    }
    if g.min_degree() == Some(0) {
        verdict.minimal = Some(false);
        return Ok(verdict);
    }
    for e in g.edges() {
        if is_member(&g.without_edge(e)?, r)? {
            verdict.minimal = Some(false);
            verdict.redundant_edge = Some(e);
            return Ok(verdict);
        }
    }
    verdict.minimal = Some(true);
    Ok(verdict)
}

/// Colours each edge by the one forest, of the `r + 1` in the decomposition
/// of `G^r`, that holds none of its copies.
pub fn witness_colouring(g: &Graph, r: usize) -> Result<EdgeColouring> {
    let cert = forest_decomposition(g, r)?;
    let forests = cert.forests.expect("sparse certificate has forests");
    let mut present: BTreeMap<Edge, BTreeSet<usize>> = BTreeMap::new();
    for (i, forest) in forests.iter().enumerate() {
        for c in forest {
            present.entry(c.edge).or_default().insert(i);
        }
    }
    let mut colouring = EdgeColouring::new(r);
    for e in g.edges() {
        let used = present.get(&e).cloned().unwrap_or_default();
        let missing: Vec<usize> = (0..=r).filter(|i| !used.contains(i)).collect();
        if missing.len() != 1 {
            return Err(Error::Internal(format!(
                "edge {e} misses {} forests",
                missing.len()
            )));
        }
        colouring.colours.insert(e, missing[0] + 1);
    }
    if let Some(cycle) = verify_colouring(g, &colouring)? {
        return Err(Error::Internal(format!(
            "witness colouring has a short-coloured cycle {:?}",
            cycle.vertices
        )));
    }
    Ok(colouring)
}

/// Deletes edges in ascending order whenever membership survives, then drops
/// isolated vertices. One pass suffices because membership is monotone.
pub fn find_minimal_subgraph(g: &Graph, r: usize) -> Result<Graph> {
    if !is_member(g, r)? {
        return Err(Error::NonMember { r });
    }
    let mut cur = g.clone();
    for e in g.edges() {
        let smaller = cur.without_edge(e)?;
        if is_member(&smaller, r)? {
            cur = smaller;
        }
    }
    Ok(cur.without_isolated())
}

/// Structural profile every minimal graph must have.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalProfile {
    pub r: usize,
    pub v: usize,
    pub e: usize,
    /// `⌈(1 + 1/r)·v − 1⌉`
    pub edges_ceil: usize,
    /// `⌊(1 + 1/r)·v − 1/r⌋`
    pub edges_floor: usize,
    pub min_degree: usize,
    pub v_mod_r: usize,
}

impl MinimalProfile {
    pub fn edge_formula_holds(&self) -> bool {
        self.e == self.edges_ceil && self.e == self.edges_floor
    }

    pub fn min_degree_is_two(&self) -> bool {
        self.min_degree == 2
    }

    pub fn residue_ok(&self) -> bool {
        self.v_mod_r != 1 % self.r
    }

    pub fn passes(&self) -> bool {
        self.edge_formula_holds() && self.min_degree_is_two() && self.residue_ok()
    }
}

pub fn minimal_profile(g: &Graph, r: usize) -> MinimalProfile {
    let v = g.v();
    MinimalProfile {
        r,
        v,
        e: g.e(),
        edges_ceil: ((r + 1) * v).saturating_sub(r).div_ceil(r),
        edges_floor: ((r + 1) * v).saturating_sub(1) / r,
        min_degree: g.min_degree().unwrap_or(0),
        v_mod_r: v % r,
    }
}

/// Checks the edge-count formula, minimum degree 2, and `v ≢ 1 (mod r)` on a
/// graph first confirmed to be minimal.
pub fn minimal_profile_check(g: &Graph, r: usize) -> Result<MinimalProfile> {
    if is_minimal_cyclicity(g, r)?.minimal != Some(true) {
        return Err(Error::NotMinimal { r });
    }
    Ok(minimal_profile(g, r))
}

/// One step of the reduction towards a diamond minor.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum MinorStep {
    /// Passed to a minimal 1/2-Ramsey subgraph.
    Minimize {
        removed_edges: Vec<Edge>,
        removed_vertices: Vec<Vertex>,
    },
    /// Contracted a shortest cycle into `merged`.
    Contract { cycle: Cycle, merged: Vertex },
}

/// Three internally disjoint paths between `ends`; each runs from `ends.0`
/// to `ends.1`. At most one may be a single edge, so this subdivides the diamond.
#[derive(Clone, Debug, Serialize)]
pub struct Theta {
    pub ends: (Vertex, Vertex),
    pub paths: [Vec<Vertex>; 3],
}

impl Theta {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let (a, b) = self.ends;
        let mut interior = BTreeSet::new();
        let mut direct = 0;
        for p in &self.paths {
            if p.len() < 2 || p[0] != a || *p.last().unwrap() != b {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            if p.len() == 2 {
                direct += 1;
            }
            for &x in &p[1..p.len() - 1] {
                if x == a || x == b || !interior.insert(x) {
                    return false;
                }
            }
        }
        direct <= 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorMethod {
    /// Alternating minimal-subgraph extraction and shortest-cycle contraction.
    Reduction,
    /// Search for three internally disjoint paths between two vertices.
    ThetaSearch,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiamondMinor {
    pub present: bool,
    pub method: MinorMethod,
    /// Reduction steps applied to the input, in order.
    pub steps: Vec<MinorStep>,
    /// A diamond subdivision in the final graph of `steps` (the input itself
    /// for the theta search).
    pub theta: Option<Theta>,
}

/// Decides whether `g` has `K4 − e` as a minor.
///
/// When `e(G) ≥ 3/2·v(G) − 1` the graph is 1/2-Ramsey for cyclicity and the
/// reduction runs: pass to a minimal subgraph, contract a shortest cycle,
/// repeat until the diamond appears. Contraction keeps membership except when
/// it merges parallel edges, and in that case the cycle plus the vertex that
/// saw it twice already form a diamond subdivision. Sparser graphs fall back
/// to the theta search, limited to `cap` vertices.
pub fn has_diamond_minor(g: &Graph, cap: usize) -> Result<DiamondMinor> {
    if g.v() > 0 && 2 * g.e() + 2 >= 3 * g.v() {
        return diamond_by_reduction(g);
    }
    if g.v() > cap {
        return Err(Error::CapExceeded {
            vertices: g.v(),
            cap,
        });
    }
    let theta = find_theta(g);
    Ok(DiamondMinor {
        present: theta.is_some(),
        method: MinorMethod::ThetaSearch,
        steps: Vec::new(),
        theta,
    })
}

fn diamond_by_reduction(g: &Graph) -> Result<DiamondMinor> {
    const R: usize = 2;
    let mut steps = Vec::new();
    let mut cur = g.clone();
    loop {
        let minimal = find_minimal_subgraph(&cur, R)?;
        let kept: BTreeSet<Edge> = minimal.edges().collect();
        steps.push(MinorStep::Minimize {
            removed_edges: cur.edges().filter(|e| !kept.contains(e)).collect(),
            removed_vertices: cur.vertices().filter(|&v| !minimal.contains_vertex(v)).collect(),
        });
        if minimal.is_diamond() {
            let theta = find_theta(&minimal);
            return Ok(DiamondMinor {
                present: true,
                method: MinorMethod::Reduction,
                steps,
                theta,
            });
        }
        let c = contract_shortest_cycle(&minimal)?;
        if c.parallels_merged {
            let theta = theta_from_cycle(&minimal, &c.cycle).ok_or_else(|| {
                Error::Internal("parallel merge without a second attachment".into())
            })?;
            return Ok(DiamondMinor {
                present: true,
                method: MinorMethod::Reduction,
                steps,
                theta: Some(theta),
            });
        }
        steps.push(MinorStep::Contract {
            cycle: c.cycle.clone(),
            merged: c.merged,
        });
        if !is_member(&c.graph, R)? {
            return Err(Error::Internal(format!(
                "contracting {:?} left a non-member",
                c.cycle.vertices
            )));
        }
        cur = c.graph;
    }
}

/// Cycle plus an outside vertex adjacent to two of its vertices.
fn theta_from_cycle(g: &Graph, cycle: &Cycle) -> Option<Theta> {
    let on: BTreeSet<Vertex> = cycle.vertices.iter().copied().collect();
    let n = cycle.len();
    for w in g.vertices().filter(|w| !on.contains(w)) {
        let hits: Vec<usize> = (0..n)
            .filter(|&i| g.has_edge(w, cycle.vertices[i]))
            .collect();
        if hits.len() < 2 {
            continue;
        }
        let (i, j) = (hits[0], hits[1]);
        let a = cycle.vertices[i];
        let b = cycle.vertices[j];
        let forward: Vec<Vertex> = (i..=j).map(|k| cycle.vertices[k]).collect();
        let mut backward: Vec<Vertex> = (j..n).map(|k| cycle.vertices[k]).collect();
        backward.extend((0..=i).map(|k| cycle.vertices[k]));
        backward.reverse();
        return Some(Theta {
            ends: (a, b),
            paths: [forward, backward, vec![a, w, b]],
        });
    }
    None
}

/// Three internally vertex-disjoint paths between some pair of vertices, by
/// augmenting paths on the vertex-split flow network. Pairs are tried in
/// ascending order.
pub fn find_theta(g: &Graph) -> Option<Theta> {
    let labels: Vec<Vertex> = g.vertices().collect();
    for (i, &a) in labels.iter().enumerate() {
        if g.degree(a) < 3 {
            continue;
        }
        for &b in &labels[i + 1..] {
            if g.degree(b) < 3 {
                continue;
            }
            if let Some(paths) = disjoint_paths(g, a, b, 3) {
                let paths: [Vec<Vertex>; 3] = paths.try_into().unwrap();
                return Some(Theta { ends: (a, b), paths });
            }
        }
    }
    None
}

/// Up to `want` internally disjoint `a`–`b` paths; `None` if fewer exist.
fn disjoint_paths(g: &Graph, a: Vertex, b: Vertex, want: usize) -> Option<Vec<Vec<Vertex>>> {
    let labels: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = labels.len();
    // node 2x = x_in, 2x+1 = x_out
    let nodes = 2 * n;
    let mut cap: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |cap: &mut BTreeMap<(usize, usize), i32>, x: usize, y: usize, c: i32| {
        *cap.entry((x, y)).or_insert(0) += c;
        cap.entry((y, x)).or_insert(0);
        adj[x].push(y);
        adj[y].push(x);
    };
    let (s, t) = (index[&a], index[&b]);
    for x in 0..n {
        let c = if x == s || x == t { want as i32 } else { 1 };
        add(&mut cap, 2 * x, 2 * x + 1, c);
    }
    for e in g.edges() {
        let (x, y) = (index[&e.0], index[&e.1]);
        add(&mut cap, 2 * x + 1, 2 * y, 1);
        add(&mut cap, 2 * y + 1, 2 * x, 1);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < want {
        let mut prev: Vec<Option<usize>> = vec![None; nodes];
        let mut seen = vec![false; nodes];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] && cap[&(x, y)] > 0 {
                    seen[y] = true;
                    prev[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return None;
        }
        let mut cur = sink;
        while let Some(p) = prev[cur] {
            *cap.get_mut(&(p, cur)).unwrap() -= 1;
            *cap.get_mut(&(cur, p)).unwrap() += 1;
            cur = p;
        }
        flow += 1;
    }
    // net flow on each vertex-to-vertex arc, opposing flows cancelled
    let pushed = |x: usize, y: usize| 1 - cap[&(2 * x + 1, 2 * y)];
    let mut used: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    for e in g.edges() {
        let (x, y) = (index[&e.0], index[&e.1]);
        let net = pushed(x, y) - pushed(y, x);
        if net > 0 {
            used.insert((2 * x + 1, 2 * y), net);
        } else if net < 0 {
            used.insert((2 * y + 1, 2 * x), -net);
        }
    }
    let mut paths = Vec::new();
    for _ in 0..want {
        let mut path = vec![a];
        let mut x = s;
        while x != t {
            let next = (0..n).find(|&y| used.get(&(2 * x + 1, 2 * y)).is_some_and(|&f| f > 0))?;
            *used.get_mut(&(2 * x + 1, 2 * next)).unwrap() -= 1;
            path.push(labels[next]);
            x = next;
        }
        paths.push(path);
    }
    Some(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K5 minus a triangle and a disjoint edge: triangle on {0,1,2}, edge 3-4.
    fn k5_minus_k3_k2() -> Graph {
        let mut g = Graph::complete(5);
        for e in [Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(3, 4)] {
            g.remove_edge(e).unwrap();
        }
        g
    }

    #[test]
    fn diamond_is_minimal_member() {
        let v = is_minimal_cyclicity(&Graph::diamond(), 2).unwrap();
        assert!(v.member);
        assert_eq!(v.minimal, Some(true));
        assert!(v.verify(&Graph::diamond()));
    }

    #[test]
    fn triangle_non_member_for_r2() {
        let g = Graph::cycle(3);
        let v = is_ramsey_cyclicity(&g, 2).unwrap();
        assert!(!v.member);
        let Certificate::GoodColouring { colouring } = &v.certificate else {
            panic!("expected colouring");
        };
        let mut colours: Vec<usize> = colouring.colours.values().copied().collect();
        colours.sort_unstable();
        assert_eq!(colours, vec![1, 2, 3]);
        assert!(v.verify(&g));
    }

    #[test]
    fn k5_minus_k3_k2_is_member_for_r3() {
        let g = k5_minus_k3_k2();
        assert_eq!((g.v(), g.e()), (5, 6));
        let v = is_minimal_cyclicity(&g, 3).unwrap();
        assert!(v.member);
        assert_eq!(v.minimal, Some(true));
    }

    #[test]
    fn cycles_are_minimal_up_to_r() {
        for r in 3..=6 {
            for k in 3..=r {
                let v = is_minimal_cyclicity(&Graph::cycle(k), r).unwrap();
                assert_eq!(v.minimal, Some(true), "C{k} r={r}");
            }
            assert!(!is_ramsey_cyclicity(&Graph::cycle(r + 1), r).unwrap().member);
        }
    }

    #[test]
    fn k4_member_not_minimal() {
        let v = is_minimal_cyclicity(&Graph::complete(4), 2).unwrap();
        assert!(v.member);
        assert_eq!(v.minimal, Some(false));
        assert!(v.redundant_edge.is_some());
    }

    #[test]
    fn isolated_vertex_breaks_minimality() {
        let mut g = Graph::diamond();
        g.add_vertex(9);
        assert_eq!(is_minimal_cyclicity(&g, 2).unwrap().minimal, Some(false));
    }

    #[test]
    fn witness_colouring_examples() {
        let c4 = Graph::cycle(4);
        let c = witness_colouring(&c4, 2).unwrap();
        assert_eq!(verify_colouring(&c4, &c).unwrap(), None);
        let seen: BTreeSet<usize> = c.colours.values().copied().collect();
        assert_eq!(seen.len(), 3);

        let tree = Graph::path(6);
        assert_eq!(verify_colouring(&tree, &witness_colouring(&tree, 4).unwrap()).unwrap(), None);

        assert!(matches!(
            witness_colouring(&Graph::diamond(), 2),
            Err(Error::Member { .. })
        ));
    }

    #[test]
    fn verify_colouring_examples() {
        let c4 = Graph::cycle(4);
        // edges in order: 0-1, 0-3, 1-2, 2-3; around the cycle 0-1,1-2,2-3,3-0
        let text = "0 1 1\n1 2 2\n2 3 3\n0 3 1\n";
        let c = EdgeColouring::parse(text, 2).unwrap();
        assert_eq!(verify_colouring(&c4, &c).unwrap(), None);

        let rainbow = EdgeColouring::parse("0 1 1\n1 2 2\n0 2 3\n", 2).unwrap();
        assert_eq!(verify_colouring(&Graph::cycle(3), &rainbow).unwrap(), None);

        let mono = EdgeColouring::parse("0 1 1\n1 2 1\n0 2 3\n", 2).unwrap();
        let cycle = verify_colouring(&Graph::cycle(3), &mono).unwrap().unwrap();
        assert!(cycle.is_valid_in(&Graph::cycle(3)));
    }

    #[test]
    fn verify_rejects_partial_or_out_of_range() {
        let g = Graph::cycle(3);
        let partial = EdgeColouring::parse("0 1 1\n1 2 2\n", 2).unwrap();
        assert!(matches!(verify_colouring(&g, &partial), Err(Error::Colouring(_))));
        let bad = EdgeColouring::parse("0 1 1\n1 2 2\n0 2 4\n", 2).unwrap();
        assert!(verify_colouring(&g, &bad).is_err());
        assert!(EdgeColouring::parse("0 1\n", 2).is_err());
    }

    #[test]
    fn minimal_subgraph_examples() {
        let m = find_minimal_subgraph(&Graph::complete(4), 2).unwrap();
        assert!(m.is_diamond());
        assert_eq!(find_minimal_subgraph(&Graph::diamond(), 2).unwrap(), Graph::diamond());
        let m5 = find_minimal_subgraph(&Graph::complete(5), 2).unwrap();
        assert_eq!((m5.v(), m5.e()), (4, 5));
        assert!(find_minimal_subgraph(&Graph::cycle(5), 2).is_err());
    }

    #[test]
    fn profile_examples() {
        let p = minimal_profile_check(&Graph::diamond(), 2).unwrap();
        assert_eq!((p.e, p.edges_ceil, p.edges_floor, p.min_degree, p.v_mod_r), (5, 5, 5, 2, 0));
        assert!(p.passes());
        let p = minimal_profile_check(&Graph::cycle(3), 3).unwrap();
        assert_eq!((p.e, p.edges_ceil, p.min_degree, p.v_mod_r), (3, 3, 2, 0));
        assert!(p.passes());
        assert!(matches!(
            minimal_profile_check(&Graph::complete(4), 2),
            Err(Error::NotMinimal { r: 2 })
        ));
    }

    #[test]
    fn diamond_minor_examples() {
        let k4 = has_diamond_minor(&Graph::complete(4), DEFAULT_DIAMOND_CAP).unwrap();
        assert!(k4.present);
        assert_eq!(k4.method, MinorMethod::Reduction);

        let c5 = has_diamond_minor(&Graph::cycle(5), DEFAULT_DIAMOND_CAP).unwrap();
        assert!(!c5.present);
        assert_eq!(c5.method, MinorMethod::ThetaSearch);

        // K_{2,3} is sparse (6 < 3/2·5 − 1) but has a diamond minor
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let m = has_diamond_minor(&k23, DEFAULT_DIAMOND_CAP).unwrap();
        assert!(m.present);
        assert!(m.theta.unwrap().is_valid_in(&k23));
    }

    #[test]
    fn diamond_minor_cap() {
        assert!(matches!(
            has_diamond_minor(&Graph::cycle(15), DEFAULT_DIAMOND_CAP),
            Err(Error::CapExceeded { .. })
        ));
        // dense graphs ignore the cap
        assert!(has_diamond_minor(&Graph::complete(15), DEFAULT_DIAMOND_CAP).unwrap().present);
    }

    #[test]
    fn theta_from_parallel_merge() {
        // 4-cycle 0-1-2-3 with vertex 4 adjacent to 0 and 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)]);
        let t = theta_from_cycle(&g, &g.girth_cycle().unwrap()).unwrap();
        assert!(t.is_valid_in(&g));
    }
}
