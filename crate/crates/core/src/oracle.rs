//! Brute-force ground truth: colouring semantics, subgraph densities, minor
//! models, and an isomorph-free census of small connected graphs.
//!
//! Nothing here touches the pebble game or the forest decomposition, so the
//! fast paths can be checked against it.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclicity::{verify_colouring, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;
pub const DENSITY_CAP: usize = 10;
pub const ENUMERATION_CAP: usize = 8;

/// Searches for an `(r+1)`-colouring in which every cycle uses all colours.
///
/// Edges are coloured in order of their larger endpoint so cycles close early.
/// Alongside, one union-find per colour `i` tracks the coloured edges not
/// coloured `i`; a branch dies as soon as one of them closes a cycle, which
/// is exactly a cycle using at most `r` colours. The first edge is pinned to
/// colour 1 since permuting colours preserves goodness. `budget` caps the
/// number of search nodes.
pub fn oracle_good_colouring(g: &Graph, r: usize, budget: u64) -> Result<Option<EdgeColouring>> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let labels: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| (e.1, e.0));
    let ends: Vec<(usize, usize)> = edges.iter().map(|e| (index[&e.0], index[&e.1])).collect();

    let mut search = ColourSearch {
        r,
        ends: &ends,
        colours: vec![0; edges.len()],
        nodes: 0,
        budget,
    };
    let parents = vec![(0..labels.len()).collect::<Vec<usize>>(); r + 1];
    if !search.run(0, &parents)? {
        return Ok(None);
    }
    let colouring = EdgeColouring {
        r,
        colours: edges.iter().copied().zip(search.colours.iter().copied()).collect(),
    };
    if verify_colouring(g, &colouring)?.is_some() {
        return Err(Error::Internal("oracle produced a bad colouring".into()));
    }
    Ok(Some(colouring))
}

/// True iff no good colouring exists, i.e. `g` is 1/r-Ramsey for cyclicity.
pub fn oracle_is_ramsey_cyclicity(g: &Graph, r: usize, budget: u64) -> Result<bool> {
    Ok(oracle_good_colouring(g, r, budget)?.is_none())
}

struct ColourSearch<'a> {
    r: usize,
    ends: &'a [(usize, usize)],
    colours: Vec<usize>,
    nodes: u64,
    budget: u64,
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

impl ColourSearch<'_> {
    fn run(&mut self, k: usize, parents: &[Vec<usize>]) -> Result<bool> {
        if k == self.ends.len() {
            return Ok(true);
        }
        let (u, v) = self.ends[k];
        let top = if k == 0 { 1 } else { self.r + 1 };
        'colour: for c in 1..=top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let mut next = parents.to_vec();
            for (i, p) in next.iter_mut().enumerate() {
                if i + 1 == c {
                    continue;
                }
                let (a, b) = (find(p, u), find(p, v));
                if a == b {
                    continue 'colour;
                }
                p[a] = b;
            }
            self.colours[k] = c;
            if self.run(k + 1, &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Densest nonempty induced subgraph `H` with `r·e(H) ≥ (r+1)·v(H) − r`.
///
/// Every vertex subset is tried; for a fixed vertex set the induced subgraph
/// has the most edges, so it is the only candidate. Ties on the excess
/// `r·e − (r+1)·v + r` go to fewer vertices, then to the smaller vertex list.
pub fn oracle_density_witness(g: &Graph, r: usize) -> Result<Option<Graph>> {
    if g.v() > DENSITY_CAP {
        return Err(Error::CapExceeded {
            vertices: g.v(),
            cap: DENSITY_CAP,
        });
    }
    let labels: Vec<Vertex> = g.vertices().collect();
    let n = labels.len();
    let adj: Vec<u32> = labels
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .map(|u| labels.iter().position(|&x| x == u).unwrap())
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let mut best: Option<(i64, std::cmp::Reverse<u32>, Vec<Vertex>)> = None;
    for mask in 1u32..1 << n {
        let v = mask.count_ones() as i64;
        let twice_e: u32 = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (adj[i] & mask).count_ones())
            .sum();
        let e = i64::from(twice_e / 2);
        let r = r as i64;
        let excess = r * e - (r + 1) * v + r;
        if excess < 0 {
            continue;
        }
        let verts: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| labels[i]).collect();
        let key = (excess, std::cmp::Reverse(mask.count_ones()), verts);
        let better = match &best {
            None => true,
            Some(b) => (key.0, key.1) > (b.0, b.1) || ((key.0, key.1) == (b.0, b.1) && key.2 < b.2),
        };
        if better {
            best = Some(key);
        }
    }
    Ok(best.map(|(_, _, verts)| g.induced(&verts.into_iter().collect())))
}

/// Minor test by enumerating branch-set assignments: every vertex of `g` goes
/// to one of the `v(h)` branch sets or to none. Returns the branch sets of a
/// model when one exists.
pub fn oracle_minor_model(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<BTreeSet<Vertex>>>> {
    if g.v() > cap {
        return Err(Error::CapExceeded { vertices: g.v(), cap });
    }
    let h = h.compact();
    let k = h.v();
    let labels: Vec<Vertex> = g.vertices().collect();
    let n = labels.len();
    if k > n {
        return Ok(None);
    }
    let h_edges: Vec<Edge> = h.edges().collect();
    let mut assign = vec![0usize; n];
    loop {
        let mut sets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); k];
        for (i, &a) in assign.iter().enumerate() {
            if a < k {
                sets[a].insert(labels[i]);
            }
        }
        let ok = sets.iter().all(|s| !s.is_empty() && g.induced(s).is_connected())
            && h_edges.iter().all(|e| {
                sets[e.0 as usize]
                    .iter()
                    .any(|&x| g.neighbors(x).any(|y| sets[e.1 as usize].contains(&y)))
            });
        if ok {
            return Ok(Some(sets));
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(None);
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Canonical code of a graph: vertex count plus the largest upper-triangle
/// adjacency bit string over all labellings reached by individualization and
/// refinement. Two graphs are isomorphic iff their codes agree. At most 16
/// vertices.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let g = g.compact();
    let n = g.v();
    assert!(n <= 16, "canonical_code supports at most 16 vertices");
    let adj: Vec<u32> = (0..n as Vertex)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let colours = refine(&adj, vec![0; n]);
    let mut best = 0u128;
    let mut any = false;
    search_canon(&adj, colours, &mut best, &mut any);
    (n, best)
}

/// Rebuilds a compact graph from its canonical code.
pub fn graph_from_code(code: (usize, u128)) -> Graph {
    let (n, bits) = code;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                g.add_edge(i as Vertex, j as Vertex).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Colour refinement: split classes by the multiset of neighbor colours until
/// stable. Class ids are ranks of sorted keys, so the result is label-invariant.
fn refine(adj: &[u32], mut colours: Vec<usize>) -> Vec<usize> {
    let n = adj.len();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap())
            .collect();
        let before = colours.iter().collect::<HashSet<_>>().len();
        if sorted.len() == before {
            return next;
        }
        colours = next;
    }
}

fn search_canon(adj: &[u32], colours: Vec<usize>, best: &mut u128, any: &mut bool) {
    let n = adj.len();
    let mut sizes = vec![0usize; n];
    for &c in &colours {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        // discrete: colour is the new position
        let mut code = 0u128;
        let mut pos_of = vec![0usize; n];
        for v in 0..n {
            pos_of[colours[v]] = v;
        }
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if adj[pos_of[i]] >> pos_of[j] & 1 == 1 {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        if !*any || code > *best {
            *best = code;
            *any = true;
        }
        return;
    };
    for w in (0..n).filter(|&v| colours[v] == target) {
        // w keeps a colour just below the rest of its cell
        let split: Vec<usize> = (0..n)
            .map(|v| 2 * colours[v] + usize::from(colours[v] == target && v != w))
            .collect();
        let mut ranks: Vec<usize> = split.clone();
        ranks.sort_unstable();
        ranks.dedup();
        let relabelled = split.iter().map(|c| ranks.binary_search(c).unwrap()).collect();
        search_canon(adj, refine(adj, relabelled), best, any);
    }
}

fn census_cache() -> &'static Mutex<BTreeMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// All connected graphs on `v` vertices up to isomorphism, as canonical
/// representatives ordered by edge count and then code.
///
/// Built by vertex addition: every connected graph has a vertex whose removal
/// leaves it connected, so extending each connected graph on `v − 1` vertices
/// by a vertex with every nonempty neighborhood reaches them all.
pub fn connected_graphs(v: usize) -> Result<Arc<Vec<Graph>>> {
    if v > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            vertices: v,
            cap: ENUMERATION_CAP,
        });
    }
    if let Some(hit) = census_cache().lock().unwrap().get(&v) {
        return Ok(Arc::clone(hit));
    }
    let graphs: Vec<Graph> = if v == 0 {
        Vec::new()
    } else if v == 1 {
        vec![Graph::empty(1)]
    } else {
        let smaller = connected_graphs(v - 1)?;
        let mut codes: HashSet<(usize, u128)> = HashSet::new();
        let new = (v - 1) as Vertex;
        for h in smaller.iter() {
            for mask in 1u32..1 << (v - 1) {
                let mut g = h.clone();
                g.add_vertex(new);
                for u in 0..new {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, new).unwrap();
                    }
                }
                codes.insert(canonical_code(&g));
            }
        }
        let mut out: Vec<Graph> = codes.into_iter().map(graph_from_code).collect();
        out.sort_by_cached_key(|g| (g.e(), canonical_code(g).1));
        out
    };
    let graphs = Arc::new(graphs);
    census_cache()
        .lock()
        .unwrap()
        .insert(v, Arc::clone(&graphs));
    Ok(graphs)
}

/// Connected graphs on `v` vertices, up to isomorphism, that pass `filter`.
pub fn enumerate_graphs<F>(v: usize, filter: F) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let all = connected_graphs(v)?;
    Ok((0..all.len()).filter_map(move |i| {
        let g = &all[i];
        filter(g).then(|| g.clone())
    }))
}
