use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_CHROMATIC_CAP: usize = 16;

/// Exact chromatic number by backtracking over `k = ω(G), ω(G)+1, ...`.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    if g.v() > cap {
        return Err(Error::CapExceeded { vertices: g.v(), cap });
    }
    if g.v() == 0 {
        return Ok(0);
    }
    let g = g.compact();
    let n = g.v();
    // high degree first tends to fail early
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let adj: Vec<u32> = (0..n as Vertex)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();

    let mut k = g.clique_number().max(1);
    loop {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, &order, 0, k, 0, &mut colour) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colourable(
    adj: &[u32],
    order: &[Vertex],
    idx: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    let v = v as usize;
    // a fresh colour is interchangeable with any other fresh one
    for c in 0..k.min(used + 1) {
        let clash = (0..adj.len()).any(|u| adj[v] >> u & 1 == 1 && colour[u] == c);
        if clash {
            continue;
        }
        colour[v] = c;
        if colourable(adj, order, idx + 1, k, used.max(c + 1), colour) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(chromatic_number(&Graph::complete(4), 16).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5), 16).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6), 16).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(3), 16).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::new(), 16).unwrap(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            chromatic_number(&Graph::cycle(17), 16),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(chromatic_number(&Graph::cycle(17), 17).unwrap(), 3);
    }
}
