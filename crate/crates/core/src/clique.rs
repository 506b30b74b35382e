//! ⅟r-Ramsey numbers for cliques: exhaustive arrowing on tiny hosts, the
//! ceiling recursion, the closed-form upper bound and the probabilistic
//! lower bound.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclicity::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub const DEFAULT_CLIQUE_BUDGET: u64 = 1_000_000_000;

/// Outcome of [`arrows_clique`]. A negative answer carries a good colouring:
/// every `K_n` in it sees all `r + 1` colours.
#[derive(Clone, Debug, Serialize)]
pub struct ArrowsResult {
    pub arrows: bool,
    pub colouring: Option<EdgeColouring>,
    pub nodes: u64,
}

/// All vertex sets of size `n` inducing a complete subgraph, ascending.
pub fn cliques_of_size(g: &Graph, n: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, n: usize, cur: &mut Vec<Vertex>, cand: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for (i, &x) in cand.iter().enumerate() {
            if cur.len() + (cand.len() - i) < n {
                break;
            }
            let next: Vec<Vertex> = cand[i + 1..].iter().copied().filter(|&y| g.has_edge(x, y)).collect();
            cur.push(x);
            grow(g, n, cur, next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    grow(g, n, &mut Vec::new(), g.vertices().collect(), &mut out);
    out
}

/// A `K_n` of `g` whose edges use at most `r` colours under `c`, if any.
/// Independent of the search in [`arrows_clique`].
pub fn find_few_coloured_clique(g: &Graph, c: &EdgeColouring, n: usize) -> Result<Option<Vec<Vertex>>> {
    c.check_total(g)?;
    for k in cliques_of_size(g, n) {
        let mut used = BTreeSet::new();
        for (i, &a) in k.iter().enumerate() {
            for &b in &k[i + 1..] {
                used.insert(c.get(Edge::new(a, b)).unwrap_or(0));
            }
        }
        if used.len() <= c.r {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Decides whether every `(r+1)`-colouring of `g` has a `K_n` using at most
/// `r` colours. `budget` bounds the number of search nodes.
pub fn arrows_clique(g: &Graph, r: usize, n: usize, budget: u64) -> Result<ArrowsResult> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("clique order must be at least 2".into()));
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| {
        let ds = g.degree(e.0) + g.degree(e.1);
        (std::cmp::Reverse(ds), e.1, e.0)
    });
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let cliques = cliques_of_size(g, n);
    let mut of_edge: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (ci, k) in cliques.iter().enumerate() {
        for (i, &a) in k.iter().enumerate() {
            for &b in &k[i + 1..] {
                of_edge[index[&Edge::new(a, b)]].push(ci);
            }
        }
    }
    let per_clique = n * (n - 1) / 2;
    if !cliques.is_empty() && per_clique < r + 1 {
        return Ok(ArrowsResult { arrows: true, colouring: None, nodes: 0 });
    }

    let mut search = Search {
        r,
        of_edge: &of_edge,
        masks: vec![0u64; cliques.len()],
        open: vec![per_clique; cliques.len()],
        colour: vec![0; edges.len()],
        nodes: 0,
        budget,
    };
    if r + 1 > 64 {
        return Err(Error::InvalidArgument("at most 63 colour pairs supported".into()));
    }
    let found = search.run(0)?;
    let colouring = found.then(|| EdgeColouring {
        r,
        colours: edges.iter().zip(&search.colour).map(|(&e, &c)| (e, c + 1)).collect(),
    });
    Ok(ArrowsResult { arrows: !found, colouring, nodes: search.nodes })
}

struct Search<'a> {
    r: usize,
    of_edge: &'a [Vec<usize>],
    masks: Vec<u64>,
    open: Vec<usize>,
    colour: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// True once every edge is coloured with no clique left short of colours.
    fn run(&mut self, i: usize) -> Result<bool> {
        if i == self.colour.len() {
            return Ok(true);
        }
        // colours are interchangeable, so the first edge takes colour 1
        let top = if i == 0 { 1 } else { self.r + 1 };
        for c in 0..top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let saved: Vec<u64> = self.of_edge[i].iter().map(|&k| self.masks[k]).collect();
            let mut ok = true;
            for &k in &self.of_edge[i] {
                self.masks[k] |= 1 << c;
                self.open[k] -= 1;
                if (self.masks[k].count_ones() as usize) + self.open[k] < self.r + 1 {
                    ok = false;
                }
            }
            self.colour[i] = c;
            if ok && self.run(i + 1)? {
                return Ok(true);
            }
            for (&k, m) in self.of_edge[i].iter().zip(saved) {
                self.masks[k] = m;
                self.open[k] += 1;
            }
        }
        Ok(false)
    }
}

/// Result of [`exact_number_small`]: the exact value when the search closed,
/// otherwise the interval `lower ≤ R ≤ upper`.
#[derive(Clone, Debug, Serialize)]
pub struct SmallNumber {
    pub exact: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    /// Good colouring of `K_{lower − 1}`, when `lower > n`.
    pub witness: Option<EdgeColouring>,
}

/// Least `N` such that `K_N` arrows `K_n`, searched upward from `n`.
pub fn exact_number_small(r: usize, n: usize, budget: u64) -> Result<SmallNumber> {
    let upper = upper_bound_diagonal(r, n)?;
    let mut witness = None;
    let mut big_n = n as u64;
    loop {
        let kn = Graph::complete(big_n as usize);
        match arrows_clique(&kn, r, n, budget) {
            Ok(res) if res.arrows => {
                return Ok(SmallNumber { exact: Some(big_n), lower: big_n, upper: big_n, witness });
            }
            Ok(res) => witness = res.colouring,
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(SmallNumber { exact: None, lower: big_n, upper, witness });
            }
            Err(e) => return Err(e),
        }
        big_n += 1;
        if big_n > upper {
            return Err(Error::Internal(format!("no arrowing up to the recursive bound {upper}")));
        }
    }
}

/// Memoized ceiling recursion for the off-diagonal numbers.
#[derive(Clone, Debug)]
pub struct BoundTable {
    pub r: usize,
    pub memo: BTreeMap<Vec<usize>, u64>,
}

impl BoundTable {
    pub fn new(r: usize) -> Self {
        Self { r, memo: BTreeMap::new() }
    }

    pub fn get(&mut self, tuple: &[usize]) -> Result<u64> {
        if tuple.len() != self.r + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, got {}",
                self.r + 1,
                tuple.len()
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidArgument(format!("entry {bad} is below 2")));
        }
        let mut key = tuple.to_vec();
        key.sort_unstable();
        self.eval(key)
    }

    fn eval(&mut self, key: Vec<usize>) -> Result<u64> {
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let value = if key[0] == 2 {
            key[1] as u64
        } else {
            let mut sum: u64 = 0;
            for i in 0..key.len() {
                if i > 0 && key[i] == key[i - 1] {
                    // same sorted tuple as the previous index
                    let prev = self.memo[&step(&key, i - 1)];
                    sum = sum.checked_add(prev).ok_or(Error::Overflow("recursive bound"))?;
                    continue;
                }
                let sub = step(&key, i);
                let v = self.eval(sub)?;
                sum = sum.checked_add(v).ok_or(Error::Overflow("recursive bound"))?;
            }
            sum.div_ceil(self.r as u64)
        };
        self.memo.insert(key, value);
        Ok(value)
    }
}

fn step(key: &[usize], i: usize) -> Vec<usize> {
    let mut sub = key.to_vec();
    sub[i] -= 1;
    sub.sort_unstable();
    sub
}

pub fn upper_bound_recursive(r: usize, tuple: &[usize]) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    BoundTable::new(r).get(tuple)
}

pub fn upper_bound_diagonal(r: usize, n: usize) -> Result<u64> {
    upper_bound_recursive(r, &vec![n; r + 1])
}

/// Closed-form upper bound, exact and as a float.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub exact: BigRational,
    pub approx: f64,
}

impl Serialize for ClosedForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            exact: String,
            approx: f64,
        }
        Repr { exact: self.exact.to_string(), approx: self.approx }.serialize(s)
    }
}

/// `r(r+2)/(3r+2) · (1 + 1/r)^{(r+1)n} − r`.
pub fn upper_bound_closed_form(r: usize, n: usize) -> Result<ClosedForm> {
    if r < 1 || n < 2 {
        return Err(Error::InvalidArgument("need r ≥ 1 and n ≥ 2".into()));
    }
    let big = |x: usize| BigInt::from(x);
    let lead = BigRational::new(big(r * (r + 2)), big(3 * r + 2));
    let base = BigRational::new(big(r + 1), big(r));
    let exp = (r + 1)
        .checked_mul(n)
        .and_then(|x| i32::try_from(x).ok())
        .ok_or(Error::Overflow("closed-form exponent"))?;
    let exact = lead * num_traits::pow::Pow::pow(&base, exp) - BigRational::from_integer(big(r));
    let approx = rational_to_f64(&exact);
    Ok(ClosedForm { exact, approx })
}

fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(a), Some(b)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if a.is_finite() && b.is_finite() && b != 0.0 {
            return a / b;
        }
    }
    // huge operands: scale via bit lengths
    let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000) as usize;
    let a = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let b = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    a / b
}

/// The probabilistic lower-bound threshold and the union-bound probability
/// that a uniform colouring of a fixed `K_n` uses at most `r` colours.
#[derive(Clone, Debug)]
pub struct LowerBound {
    pub threshold: f64,
    pub clique_edges: usize,
    pub probability: BigRational,
}

impl Serialize for LowerBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            threshold: f64,
            clique_edges: usize,
            probability: String,
            probability_approx: f64,
        }
        Repr {
            threshold: self.threshold,
            clique_edges: self.clique_edges,
            probability: self.probability.to_string(),
            probability_approx: rational_to_f64(&self.probability),
        }
        .serialize(s)
    }
}

/// `(n!/(2(2^r − 1)))^{1/n} · (1 + 1/r)^{(n+1)/2}`.
pub fn lower_bound_probabilistic(r: usize, n: usize) -> Result<LowerBound> {
    if r < 1 || n < 2 {
        return Err(Error::InvalidArgument("need r ≥ 1 and n ≥ 2".into()));
    }
    let ln_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
    let ln_denom = (2.0f64).ln() + ((2.0f64).powi(r as i32) - 1.0).ln();
    let nf = n as f64;
    let threshold = ((ln_fact - ln_denom) / nf + (nf + 1.0) / 2.0 * (1.0 + 1.0 / r as f64).ln()).exp();

    let m = n * (n - 1) / 2;
    let mut count = BigUint::zero();
    let mut falling = BigUint::one();
    for k in 1..=r.min(m) {
        // (r+1)(r)…(r+2−k) = k!·C(r+1,k)
        falling *= BigUint::from(r + 2 - k);
        count += &falling * stirling2(m, k);
    }
    let total = num_traits::pow::Pow::pow(BigUint::from(r + 1), m);
    let probability = BigRational::new(BigInt::from(count), BigInt::from(total));
    Ok(LowerBound { threshold, clique_edges: m, probability })
}

/// Stirling number of the second kind.
pub fn stirling2(m: usize, k: usize) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}
