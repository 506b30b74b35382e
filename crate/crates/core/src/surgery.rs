//! Graph surgeries: cycle contraction, edge subdivision, vertex blow-up, cones.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Edge, Graph, Vertex};

#[derive(Clone, Debug, Serialize)]
pub struct Contraction {
    pub graph: Graph,
    /// The contracted cycle, as chosen by [`Graph::girth_cycle`].
    pub cycle: Cycle,
    /// Label of the vertex the cycle collapsed into.
    pub merged: Vertex,
    /// True when some outside vertex saw two or more cycle vertices, so the
    /// contraction produced parallel edges that were merged.
    pub parallels_merged: bool,
    /// True when an edge between two cycle vertices became a loop and was
    /// dropped (never happens for a shortest cycle, which is induced).
    pub loops_removed: bool,
}

/// Contracts a shortest cycle into a single fresh vertex, simplifying the result.
pub fn contract_shortest_cycle(g: &Graph) -> Result<Contraction> {
    let cycle = g.girth_cycle().ok_or(Error::Acyclic)?;
    Ok(contract_cycle(g, cycle))
}

pub(crate) fn contract_cycle(g: &Graph, cycle: Cycle) -> Contraction {
    let on_cycle: BTreeSet<Vertex> = cycle.vertices.iter().copied().collect();
    let cycle_edges: BTreeSet<Edge> = cycle.edges().into_iter().collect();
    let merged = g.fresh_vertex();

    let mut out = Graph::new();
    for v in g.vertices().filter(|v| !on_cycle.contains(v)) {
        out.add_vertex(v);
    }
    out.add_vertex(merged);

    let mut parallels_merged = false;
    let mut loops_removed = false;
    for e in g.edges() {
        let (a, b) = (on_cycle.contains(&e.0), on_cycle.contains(&e.1));
        match (a, b) {
            (true, true) => {
                if !cycle_edges.contains(&e) {
                    loops_removed = true;
                }
            }
            (false, false) => {
                out.add_edge(e.0, e.1).unwrap();
            }
            _ => {
                let outside = if a { e.1 } else { e.0 };
                if out.has_edge(outside, merged) {
                    parallels_merged = true;
                } else {
                    out.add_edge(outside, merged).unwrap();
                }
            }
        }
    }
    Contraction {
        graph: out,
        cycle,
        merged,
        parallels_merged,
        loops_removed,
    }
}

/// Replaces `e = xy` by the path `x - w - y` through a fresh vertex `w`.
pub fn subdivide_edge(g: &Graph, e: Edge) -> Result<(Graph, Vertex)> {
    let e = Edge::new(e.0, e.1);
    let mut out = g.without_edge(e)?;
    let w = out.fresh_vertex();
    out.add_vertex(w);
    out.add_edge(e.0, w)?;
    out.add_edge(w, e.1)?;
    Ok((out, w))
}

#[derive(Clone, Debug, Serialize)]
pub struct BlowUp {
    pub graph: Graph,
    /// The new cycle `c_0 .. c_r`; `c_0` keeps the label of the blown-up vertex.
    pub cycle: Vec<Vertex>,
    pub cycle_induced: bool,
    pub two_connected: bool,
}

impl BlowUp {
    /// Both structural conditions the extension theorem asks for.
    pub fn is_admissible(&self) -> bool {
        self.cycle_induced && self.two_connected
    }
}

/// Replaces `v` by an induced cycle of length `r + 1`. `assignment` sends each
/// neighbor `u` of `v` to the cycle position (`0..=r`) that inherits the edge `uv`.
pub fn blow_up_vertex(
    g: &Graph,
    v: Vertex,
    r: usize,
    assignment: &BTreeMap<Vertex, usize>,
) -> Result<BlowUp> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    let nbrs: BTreeSet<Vertex> = g
        .neighbor_set(v)
        .ok_or(Error::MissingVertex(v))?
        .clone();
    for u in &nbrs {
        match assignment.get(u) {
            None => {
                return Err(Error::InvalidArgument(format!(
                    "assignment is missing the edge {}",
                    Edge::new(*u, v)
                )))
            }
            Some(&p) if p > r => {
                return Err(Error::InvalidArgument(format!(
                    "cycle position {p} out of range 0..={r}"
                )))
            }
            _ => {}
        }
    }
    if let Some(extra) = assignment.keys().find(|u| !nbrs.contains(u)) {
        return Err(Error::InvalidArgument(format!(
            "assignment names {extra}, which is not a neighbor of {v}"
        )));
    }

    let mut out = g.clone();
    for &u in &nbrs {
        out.remove_edge(Edge::new(u, v))?;
    }
    let mut cycle = vec![v];
    let first = out.fresh_vertex();
    for next in first..first + r as Vertex {
        out.add_vertex(next);
        cycle.push(next);
    }
    for i in 0..=r {
        out.add_edge(cycle[i], cycle[(i + 1) % (r + 1)])?;
    }
    for (&u, &p) in assignment {
        out.add_edge(u, cycle[p])?;
    }

    let members: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let cycle_induced = out.induced(&members).e() == r + 1;
    let two_connected = out.is_two_connected();
    Ok(BlowUp {
        graph: out,
        cycle,
        cycle_induced,
        two_connected,
    })
}

/// Every assignment of the neighbors of `v` to `r + 1` cycle positions, up to
/// rotation of the cycle: the smallest neighbor always goes to position 0.
pub fn blow_up_assignments(g: &Graph, v: Vertex, r: usize) -> Vec<BTreeMap<Vertex, usize>> {
    let nbrs: Vec<Vertex> = g.neighbors(v).collect();
    let mut out = Vec::new();
    if nbrs.is_empty() {
        out.push(BTreeMap::new());
        return out;
    }
    let mut pos = vec![0usize; nbrs.len()];
    loop {
        out.push(nbrs.iter().copied().zip(pos.iter().copied()).collect());
        // odometer over positions 1.. (position 0 pinned)
        let mut i = nbrs.len() - 1;
        loop {
            if i == 0 {
                return out;
            }
            pos[i] += 1;
            if pos[i] <= r {
                break;
            }
            pos[i] = 0;
            i -= 1;
        }
    }
}

/// Adds `k` new vertices one after another, each joined to everything present.
pub fn cone(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("cone needs k >= 1".into()));
    }
    let mut out = g.clone();
    for _ in 0..k {
        let apex = out.fresh_vertex();
        let existing: Vec<Vertex> = out.vertices().collect();
        out.add_vertex(apex);
        for u in existing {
            out.add_edge(u, apex)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contract_c5_is_k1() {
        let c = contract_shortest_cycle(&Graph::cycle(5)).unwrap();
        assert_eq!((c.graph.v(), c.graph.e()), (1, 0));
        assert!(!c.parallels_merged);
    }

    #[test]
    fn contract_diamond_merges_parallels() {
        let c = contract_shortest_cycle(&Graph::diamond()).unwrap();
        assert_eq!((c.graph.v(), c.graph.e()), (2, 1));
        assert!(c.parallels_merged);
        assert!(!c.loops_removed);
    }

    #[test]
    fn contract_acyclic_errors() {
        assert!(matches!(
            contract_shortest_cycle(&Graph::path(4)),
            Err(Error::Acyclic)
        ));
    }

    #[test]
    fn subdivide_counts() {
        let (c4, w) = subdivide_edge(&Graph::cycle(3), Edge(0, 1)).unwrap();
        assert_eq!(w, 3);
        assert!(c4.is_cycle_graph());
        assert_eq!(c4.v(), 4);

        let d = Graph::diamond();
        let (s, _) = subdivide_edge(&d, Edge(0, 1)).unwrap();
        assert_eq!((s.v(), s.e()), (5, 6));
        let (s2, _) = subdivide_edge(&s, Edge(0, 2)).unwrap();
        assert_eq!((s2.v(), s2.e()), (6, 7));

        assert!(subdivide_edge(&d, Edge(2, 3)).is_err());
    }

    #[test]
    fn blow_up_diamond_degree_two_vertex() {
        // vertex 2 has neighbors 0 and 1
        let d = Graph::diamond();
        let a = BTreeMap::from([(0, 0), (1, 1)]);
        let b = blow_up_vertex(&d, 2, 2, &a).unwrap();
        assert_eq!((b.graph.v(), b.graph.e()), (6, 8));
        assert!(b.cycle_induced && b.two_connected);
    }

    #[test]
    fn blow_up_all_edges_to_one_position_loses_two_connectivity() {
        let d = Graph::diamond();
        let a = BTreeMap::from([(0, 0), (1, 0)]);
        let b = blow_up_vertex(&d, 2, 2, &a).unwrap();
        assert_eq!((b.graph.v(), b.graph.e()), (6, 8));
        assert!(!b.two_connected);
        assert!(!b.is_admissible());
    }

    #[test]
    fn blow_up_triangle_counts() {
        let a = BTreeMap::from([(1, 0), (2, 1)]);
        let b = blow_up_vertex(&Graph::cycle(3), 0, 2, &a).unwrap();
        assert_eq!((b.graph.v(), b.graph.e()), (5, 6));
    }

    #[test]
    fn blow_up_rejects_bad_assignments() {
        let d = Graph::diamond();
        assert!(blow_up_vertex(&d, 2, 2, &BTreeMap::from([(0, 0)])).is_err());
        assert!(blow_up_vertex(&d, 2, 2, &BTreeMap::from([(0, 0), (1, 3)])).is_err());
        assert!(blow_up_vertex(&d, 2, 2, &BTreeMap::from([(0, 0), (1, 1), (3, 1)])).is_err());
        assert!(blow_up_vertex(&d, 9, 2, &BTreeMap::new()).is_err());
    }

    #[test]
    fn assignment_enumeration_pins_first_neighbor() {
        let d = Graph::diamond();
        let all = blow_up_assignments(&d, 0, 2);
        // three neighbors, first pinned: 3^2
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|a| a[&1] == 0));
    }

    #[test]
    fn cone_examples() {
        assert_eq!(cone(&Graph::complete(4), 1).unwrap(), Graph::complete(5));
        let w4 = cone(&Graph::cycle(4), 1).unwrap();
        assert_eq!((w4.v(), w4.e()), (5, 8));
        assert_eq!(cone(&Graph::complete(3), 2).unwrap(), Graph::complete(5));
        assert!(cone(&Graph::cycle(4), 0).is_err());
    }
}
