//! Constructions of minimal 1/r-Ramsey graphs for cyclicity, and the odd-cycle
//! family used for cliques.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::cyclicity::is_minimal_member;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::{connected_graphs, ENUMERATION_CAP};
use crate::planarity::{find_planar_embedding, Embedding};
use crate::surgery::{blow_up_assignments, blow_up_vertex, subdivide_edge, BlowUp};

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    Ok(())
}

fn require_minimal(g: &Graph, r: usize) -> Result<()> {
    if !is_minimal_member(g, r)? {
        return Err(Error::Hypothesis(format!(
            "graph is not minimal 1/{r}-Ramsey for cyclicity"
        )));
    }
    Ok(())
}

/// Subdivides the first edge of a minimal graph whose order `r` does not divide.
pub fn extend_subdivision(g: &Graph, r: usize) -> Result<Graph> {
    check_r(r)?;
    require_minimal(g, r)?;
    if g.v().is_multiple_of(r) {
        return Err(Error::Hypothesis(format!(
            "r = {r} divides v(G) = {}",
            g.v()
        )));
    }
    let first = g.edges().next().expect("minimal graphs have edges");
    let (out, _) = subdivide_edge(g, first)?;
    if !is_minimal_member(&out, r)? {
        return Err(Error::Internal("subdivision left the minimal class".into()));
    }
    Ok(out)
}

/// Blows up a vertex of a minimal graph whose order `r` divides into an induced
/// `C_{r+1}`, trying vertices in ascending order and all assignments up to
/// rotation until the result is 2-connected.
pub fn extend_blow_up(g: &Graph, r: usize) -> Result<BlowUp> {
    check_r(r)?;
    require_minimal(g, r)?;
    if !g.v().is_multiple_of(r) {
        return Err(Error::Hypothesis(format!(
            "r = {r} does not divide v(G) = {}",
            g.v()
        )));
    }
    for v in g.vertices() {
        for assignment in blow_up_assignments(g, v, r) {
            let b = blow_up_vertex(g, v, r, &assignment)?;
            if b.is_admissible() {
                if !is_minimal_member(&b.graph, r)? {
                    return Err(Error::Internal(format!(
                        "2-connected blow-up at {v} is not minimal"
                    )));
                }
                return Ok(b);
            }
        }
    }
    Err(Error::Hypothesis(
        "no vertex admits a 2-connected blow-up".into(),
    ))
}

/// A planar minimal graph together with the embedding that proves planarity.
#[derive(Clone, Debug, Serialize)]
pub struct PlanarMember {
    pub graph: Graph,
    pub embedding: Embedding,
}

fn seed_cache() -> &'static Mutex<BTreeMap<usize, PlanarMember>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, PlanarMember>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// Smallest planar minimal graph whose order is a multiple of `r`, searched
/// over orders `r` and `2r` within the census; `C_r` beyond it.
pub fn planar_seed(r: usize) -> Result<PlanarMember> {
    check_r(r)?;
    if let Some(hit) = seed_cache().lock().unwrap().get(&r) {
        return Ok(hit.clone());
    }
    let mut found = None;
    'orders: for v in [r, 2 * r] {
        if v > ENUMERATION_CAP {
            break;
        }
        for g in connected_graphs(v)?.iter() {
            if !is_minimal_member(g, r)? {
                continue;
            }
            if let Some(embedding) = find_planar_embedding(g, 1_000_000)? {
                found = Some(PlanarMember {
                    graph: g.clone(),
                    embedding,
                });
                break 'orders;
            }
        }
    }
    let seed = match found {
        Some(s) => s,
        None => {
            let g = Graph::cycle(r);
            require_minimal(&g, r)?;
            let embedding = find_planar_embedding(&g, 1)?.expect("cycles are planar");
            PlanarMember { graph: g, embedding }
        }
    };
    seed_cache().lock().unwrap().insert(r, seed.clone());
    Ok(seed)
}

/// Assignments that keep the embedding planar: the neighbors, read in rotation
/// order from some starting point, go to non-decreasing cycle positions.
fn planar_assignments(rot: &[Vertex], r: usize) -> Vec<(usize, Vec<usize>)> {
    fn grow(seq: &mut Vec<usize>, d: usize, r: usize, out: &mut Vec<Vec<usize>>) {
        if seq.len() == d {
            out.push(seq.clone());
            return;
        }
        let lo = seq.last().copied().unwrap_or(0);
        let hi = if seq.is_empty() { 0 } else { r };
        for p in lo..=hi {
            seq.push(p);
            grow(seq, d, r, out);
            seq.pop();
        }
    }
    let d = rot.len();
    let mut seqs = Vec::new();
    grow(&mut Vec::new(), d, r, &mut seqs);
    (0..d.max(1))
        .flat_map(|start| seqs.iter().map(move |s| (start, s.clone())))
        .collect()
}

fn blow_up_embedding(
    emb: &Embedding,
    v: Vertex,
    cycle: &[Vertex],
    ordered: &[Vertex],
    positions: &[usize],
) -> Embedding {
    let k = cycle.len();
    let mut rotation = emb.rotation.clone();
    rotation.remove(&v);
    let pos_of: BTreeMap<Vertex, usize> = ordered.iter().copied().zip(positions.iter().copied()).collect();
    for (&u, rot) in rotation.iter_mut() {
        for x in rot.iter_mut() {
            if *x == v {
                *x = cycle[pos_of[&u]];
            }
        }
    }
    for i in 0..k {
        let mut rot: Vec<Vertex> = ordered
            .iter()
            .zip(positions)
            .filter(|&(_, &p)| p == i)
            .map(|(&u, _)| u)
            .collect();
        rot.push(cycle[(i + 1) % k]);
        rot.push(cycle[(i + k - 1) % k]);
        rotation.insert(cycle[i], rot);
    }
    Embedding { rotation }
}

/// One planar blow-up step: the first vertex and rotation-compatible
/// assignment giving a 2-connected minimal graph with a planar embedding.
pub fn planar_blow_up(member: &PlanarMember, r: usize) -> Result<PlanarMember> {
    let g = &member.graph;
    for v in g.vertices() {
        let rot = &member.embedding.rotation[&v];
        for (start, positions) in planar_assignments(rot, r) {
            let ordered: Vec<Vertex> = (0..rot.len()).map(|i| rot[(start + i) % rot.len()]).collect();
            let assignment: BTreeMap<Vertex, usize> =
                ordered.iter().copied().zip(positions.iter().copied()).collect();
            let b = blow_up_vertex(g, v, r, &assignment)?;
            if !b.is_admissible() {
                continue;
            }
            let embedding = blow_up_embedding(&member.embedding, v, &b.cycle, &ordered, &positions);
            if !embedding.is_planar_for(&b.graph) {
                return Err(Error::Internal(format!("blow-up at {v} broke the embedding")));
            }
            if !is_minimal_member(&b.graph, r)? {
                return Err(Error::Internal(format!(
                    "2-connected blow-up at {v} is not minimal"
                )));
            }
            return Ok(PlanarMember {
                graph: b.graph,
                embedding,
            });
        }
    }
    Err(Error::Hypothesis(
        "no planar 2-connected blow-up exists".into(),
    ))
}

/// Planar minimal graph on `n = k·r` vertices (`k ≥ 2`), grown from the seed
/// by repeated planar blow-ups. Planarity and minimality are re-checked.
pub fn gen_planar_family(r: usize, n: usize) -> Result<PlanarMember> {
    check_r(r)?;
    if !n.is_multiple_of(r) || n < 2 * r {
        return Err(Error::InvalidArgument(format!(
            "n = {n} is not a proper multiple of r = {r}"
        )));
    }
    let mut cur = planar_seed(r)?;
    if cur.graph.v() > n {
        return Err(Error::Hypothesis(format!(
            "seed for r = {r} already has {} vertices",
            cur.graph.v()
        )));
    }
    while cur.graph.v() < n {
        cur = planar_blow_up(&cur, r)?;
    }
    if !cur.embedding.is_planar_for(&cur.graph) {
        return Err(Error::Internal("embedding lost planarity".into()));
    }
    require_minimal(&cur.graph, r)?;
    Ok(PlanarMember {
        graph: cur.graph.compact(),
        embedding: compact_embedding(&cur.graph, &cur.embedding),
    })
}

fn compact_embedding(g: &Graph, emb: &Embedding) -> Embedding {
    let index: BTreeMap<Vertex, Vertex> = g
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as Vertex))
        .collect();
    Embedding {
        rotation: emb
            .rotation
            .iter()
            .map(|(v, rot)| (index[v], rot.iter().map(|u| index[u]).collect()))
            .collect(),
    }
}

/// Odd cycle `C_{2k+1}` on `0..2k+1` with both ends of the extra edge
/// `(2k+1, 2k+2)` joined to every cycle vertex.
pub fn gen_odd_cycle_family(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let len = 2 * k + 1;
    let mut g = Graph::cycle(len);
    let (a, b) = (len as Vertex, len as Vertex + 1);
    g.add_vertex(a);
    g.add_vertex(b);
    g.add_edge(a, b)?;
    for i in 0..len as Vertex {
        g.add_edge(i, a)?;
        g.add_edge(i, b)?;
    }
    Ok(g)
}
