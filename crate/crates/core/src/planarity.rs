//! Combinatorial embeddings (rotation systems) as planarity certificates.
//!
//! A rotation system is planar iff tracing its faces satisfies Euler's
//! formula `v − e + f = 1 + c`. The planar family builder carries such an
//! embedding through every blow-up, so each output ships with its own proof.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Cyclic neighbor order around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
}

impl Embedding {
    /// True iff the rotation lists exactly the neighbors of each vertex of `g`.
    pub fn matches(&self, g: &Graph) -> bool {
        g.vertices().all(|v| {
            let Some(rot) = self.rotation.get(&v) else {
                return false;
            };
            let as_set: BTreeSet<Vertex> = rot.iter().copied().collect();
            as_set.len() == rot.len() && Some(&as_set) == g.neighbor_set(v)
        }) && self.rotation.len() == g.v()
    }

    fn successor(&self, at: Vertex, from: Vertex) -> Vertex {
        let rot = &self.rotation[&at];
        let i = rot.iter().position(|&x| x == from).unwrap();
        rot[(i + 1) % rot.len()]
    }

    /// Number of faces traced by the rotation system.
    pub fn face_count(&self) -> usize {
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        let mut faces = 0;
        for (&u, rot) in &self.rotation {
            for &v in rot {
                if seen.contains(&(u, v)) {
                    continue;
                }
                faces += 1;
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    let c = self.successor(b, a);
                    a = b;
                    b = c;
                }
            }
        }
        // isolated vertices each sit in the outer face of their component
        faces + self.rotation.values().filter(|r| r.is_empty()).count()
    }

    /// Euler's formula check for `g` with this rotation system.
    pub fn is_planar_for(&self, g: &Graph) -> bool {
        if !self.matches(g) {
            return false;
        }
        let c = g.components().len() as i64;
        g.v() as i64 - g.e() as i64 + self.face_count() as i64 == 1 + c
    }
}

/// Exhaustive search over rotation systems, giving up after `limit` tries.
/// Meant for small seed graphs.
pub fn find_planar_embedding(g: &Graph, limit: u64) -> Result<Option<Embedding>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let base: Vec<Vec<Vertex>> = verts.iter().map(|&v| g.neighbors(v).collect()).collect();
    // each vertex: first neighbor fixed, the rest permuted
    let mut perms: Vec<Vec<Vec<Vertex>>> = Vec::new();
    let mut total: u64 = 1;
    for nbrs in &base {
        let mut options = Vec::new();
        if nbrs.len() <= 2 {
            options.push(nbrs.clone());
        } else {
            let mut rest = nbrs[1..].to_vec();
            permutations(&mut rest, 0, &mut |p| {
                let mut rot = vec![nbrs[0]];
                rot.extend_from_slice(p);
                options.push(rot);
            });
        }
        total = total.saturating_mul(options.len() as u64);
        perms.push(options);
    }
    if total > limit {
        return Err(Error::BudgetExceeded { budget: limit });
    }
    let mut choice = vec![0usize; verts.len()];
    loop {
        let emb = Embedding {
            rotation: verts
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, perms[i][choice[i]].clone()))
                .collect(),
        };
        if emb.is_planar_for(g) {
            return Ok(Some(emb));
        }
        let mut i = 0;
        loop {
            if i == verts.len() {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < perms[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn permutations<T: Clone>(items: &mut [T], k: usize, visit: &mut impl FnMut(&[T])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_two_faces() {
        let g = Graph::cycle(5);
        let emb = find_planar_embedding(&g, 10).unwrap().unwrap();
        assert_eq!(emb.face_count(), 2);
        assert!(emb.is_planar_for(&g));
    }

    #[test]
    fn k4_and_diamond_are_planar() {
        for g in [Graph::complete(4), Graph::diamond()] {
            assert!(find_planar_embedding(&g, 1000).unwrap().is_some());
        }
    }

    #[test]
    fn k5_and_k33_are_not() {
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        );
        for g in [Graph::complete(5), k33] {
            assert!(find_planar_embedding(&g, 1_000_000).unwrap().is_none());
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert!(find_planar_embedding(&Graph::complete(6), 10).is_err());
    }
}
