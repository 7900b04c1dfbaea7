//! The two directed graphs attached to degree data.
//!
//! The expanded quiver replaces each degree-`d_i` loop on the base vertex by
//! a directed cycle of `d_i` arrows through `d_i - 1` fresh vertices. The
//! second graph has those arrows as vertices, with an edge `u -> v` whenever
//! `u` can be followed by `v`, except that the single composition
//! `a_{1,d_1-1} -> a_{g,0}` is removed. Its characteristic polynomial equals
//! `t^(l-d) f(t)`, which this module computes by two independent routes:
//! exact elimination and signed enumeration of disjoint cycle unions.

use crate::degree::DegreeData;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone)]
pub enum GraphError {
    NotPrimitive(String),
    NoConvergence { iterations: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotPrimitive(msg) => write!(f, "graph is not primitive: {msg}"),
            GraphError::NoConvergence { iterations } => {
                write!(f, "power iteration did not converge within {iterations} iterations")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Vertex of the expanded quiver.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum QuiverVertex {
    Star,
    /// `x_{gen,pos}`: interior vertex `pos` (1-based) on the cycle of
    /// generator `gen` (1-based).
    Chain { gen: usize, pos: i64 },
}

impl QuiverVertex {
    pub fn dot_name(&self) -> String {
        match self {
            QuiverVertex::Star => "star".to_string(),
            QuiverVertex::Chain { gen, pos } => format!("x_{gen}_{pos}"),
        }
    }
}

/// `a_{gen,idx}`: arrow `idx` (0-based) on the cycle of generator `gen`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArrowLabel {
    pub gen: usize,
    pub idx: i64,
}

impl ArrowLabel {
    pub fn dot_name(&self) -> String {
        format!("a_{}_{}", self.gen, self.idx)
    }
}

#[derive(Clone, Debug)]
pub struct Arrow {
    pub label: ArrowLabel,
    pub tail: QuiverVertex,
    pub head: QuiverVertex,
}

/// The expanded quiver.
#[derive(Clone)]
pub struct QuiverGraph {
    dd: DegreeData,
    vertices: Vec<QuiverVertex>,
    arrows: Vec<Arrow>,
}

impl QuiverGraph {
    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    pub fn vertices(&self) -> &[QuiverVertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {};\n", v.dot_name()));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                a.tail.dot_name(),
                a.head.dot_name(),
                a.label.dot_name()
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The second graph: vertices are the quiver arrows in `(gen, idx)` order.
#[derive(Clone)]
pub struct SecondGraph {
    dd: DegreeData,
    labels: Vec<ArrowLabel>,
    /// `adjacency[u][v]` counts arrows `v -> u` (so columns index sources).
    adjacency: Vec<Vec<u8>>,
    /// Edge list `(from, to)` in lexicographic order.
    edges: Vec<(usize, usize)>,
    out_neighbors: Vec<Vec<usize>>,
}

impl SecondGraph {
    pub fn degree_data(&self) -> &DegreeData {
        &self.dd
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[ArrowLabel] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.adjacency[to][from] != 0
    }

    /// Adjacency matrix in the stored convention: entry `(u, v)` counts
    /// arrows `v -> u`.
    pub fn adjacency(&self) -> &[Vec<u8>] {
        &self.adjacency
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph second {\n");
        for l in &self.labels {
            out.push_str(&format!("  {};\n", l.dot_name()));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!(
                "  {} -> {};\n",
                self.labels[u].dot_name(),
                self.labels[v].dot_name()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// All simple cycles, each starting at its smallest vertex, in
    /// deterministic order.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        enumerate_simple_cycles(self.vertex_count(), &self.out_neighbors)
    }
}

/// Build both graphs.
pub fn build_graphs(dd: &DegreeData) -> (QuiverGraph, SecondGraph) {
    let degrees = dd.degrees();
    let g = dd.generator_count();

    let mut vertices = vec![QuiverVertex::Star];
    for (i, &di) in degrees.iter().enumerate() {
        for pos in 1..di {
            vertices.push(QuiverVertex::Chain { gen: i + 1, pos });
        }
    }

    let mut arrows = Vec::new();
    for (i, &di) in degrees.iter().enumerate() {
        let gen = i + 1;
        for idx in 0..di {
            let tail = if idx == 0 {
                QuiverVertex::Star
            } else {
                QuiverVertex::Chain { gen, pos: idx }
            };
            let head = if idx == di - 1 {
                QuiverVertex::Star
            } else {
                QuiverVertex::Chain { gen, pos: idx + 1 }
            };
            arrows.push(Arrow { label: ArrowLabel { gen, idx }, tail, head });
        }
    }
    debug_assert_eq!(arrows.len() as i64, dd.degree_sum());
    debug_assert_eq!(vertices.len() as i64, dd.degree_sum() - g as i64 + 1);

    let labels: Vec<ArrowLabel> = arrows.iter().map(|a| a.label).collect();
    let n = labels.len();
    let removed_from = ArrowLabel { gen: 1, idx: degrees[0] - 1 };
    let removed_to = ArrowLabel { gen: g, idx: 0 };
    let mut adjacency = vec![vec![0u8; n]; n];
    let mut edges = Vec::new();
    let mut out_neighbors = vec![Vec::new(); n];
    for (u, au) in arrows.iter().enumerate() {
        for (v, av) in arrows.iter().enumerate() {
            if au.head != av.tail {
                continue;
            }
            if au.label == removed_from && av.label == removed_to {
                continue;
            }
            adjacency[v][u] = 1;
            edges.push((u, v));
            out_neighbors[u].push(v);
        }
    }

    let quiver = QuiverGraph { dd: dd.clone(), vertices, arrows };
    let second = SecondGraph { dd: dd.clone(), labels, adjacency, edges, out_neighbors };
    (quiver, second)
}

/// Characteristic polynomial of an integer matrix, ascending coefficients,
/// by the Faddeev-LeVerrier recurrence (all divisions exact over the
/// integers).
fn char_poly_int_matrix(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return coeffs;
    }
    let mut aux = vec![vec![BigInt::zero(); n]; n];
    let mut c_prev = BigInt::from(1);
    for k in 1..=n {
        // aux <- m * aux + c_prev * I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for (t, aux_row) in aux.iter().enumerate() {
                    if !m[i][t].is_zero() && !aux_row[j].is_zero() {
                        acc += &m[i][t] * &aux_row[j];
                    }
                }
                if i == j {
                    acc += &c_prev;
                }
                next[i][j] = acc;
            }
        }
        aux = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for (t, aux_row) in aux.iter().enumerate() {
                if !m[i][t].is_zero() {
                    trace += &m[i][t] * &aux_row[i];
                }
            }
        }
        let (quot, rem) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = quot.clone();
        c_prev = quot;
    }
    coeffs
}

/// Characteristic polynomial of the second graph by exact elimination.
pub fn char_poly_det(gr: &SecondGraph) -> LaurentPoly {
    let n = gr.vertex_count();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(gr.adjacency[i][j])).collect())
        .collect();
    let coeffs = char_poly_int_matrix(&m);
    LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
}

/// Constant term of the characteristic polynomial of the hat graph on the
/// given generator subset (1-based indices), by exact elimination.
pub fn hat_constant_term(subset: &[usize], dd: &DegreeData) -> BigInt {
    assert!(!subset.is_empty(), "subset must be nonempty");
    let g = dd.generator_count();
    let mut labels: Vec<usize> = subset.to_vec();
    labels.sort_unstable();
    labels.dedup();
    assert!(labels.iter().all(|&i| 1 <= i && i <= g), "generator index out of range");
    let k = labels.len();
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for a in 0..k {
        for b in 0..k {
            if !(labels[a] == 1 && labels[b] == g) {
                // entry (b, a): arrow a -> b in the source-in-columns convention
                m[b][a] = BigInt::from(1);
            }
        }
    }
    char_poly_int_matrix(&m)[0].clone()
}

/// Signed count of spanning disjoint-cycle unions of the hat graph on a
/// vertex subset, weighting each union by `(-1)^(number of cycles)`.
/// Memoized depth-first enumeration; `labels` are 1-based generator indices.
struct SpanningCounter {
    k: usize,
    full: u32,
    edges: Vec<bool>,
    memo: Vec<i64>,
}

impl SpanningCounter {
    fn new(labels: &[usize], g: usize) -> Self {
        let k = labels.len();
        assert!(k <= 16, "cycle enumeration is exponential; capped at 16 generators");
        let mut edges = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                // the hat graph is complete with loops except for 1 -> g
                edges[a * k + b] = !(labels[a] == 1 && labels[b] == g);
            }
        }
        Self { k, full: (1u32 << k) - 1, edges, memo: vec![i64::MIN; (1usize << k) * k * k] }
    }

    fn signed_count(&mut self) -> i64 {
        self.after_close(0)
    }

    /// Sum over completions once `mask` is fully decided into closed cycles.
    fn after_close(&mut self, mask: u32) -> i64 {
        if mask == self.full {
            return 1;
        }
        let s = (!mask).trailing_zeros() as usize;
        self.open_cycle(mask | (1 << s), s, s)
    }

    /// Sum over completions with a cycle open from `start`, currently at
    /// `cur`. Closing a cycle contributes a factor -1.
    fn open_cycle(&mut self, mask: u32, start: usize, cur: usize) -> i64 {
        let key = ((mask as usize) * self.k + start) * self.k + cur;
        if self.memo[key] != i64::MIN {
            return self.memo[key];
        }
        let mut total = 0i64;
        if self.edges[cur * self.k + start] {
            total -= self.after_close(mask);
        }
        for v in 0..self.k {
            if mask & (1 << v) == 0 && self.edges[cur * self.k + v] {
                total += self.open_cycle(mask | (1 << v), start, v);
            }
        }
        self.memo[key] = total;
        total
    }
}

/// Characteristic polynomial of the second graph by enumerating disjoint
/// unions of simple cycles. The enumeration runs on the hat-graph side: for
/// every generator subset `X`, spanning cycle unions of the hat graph on `X`
/// are counted with weight `(-1)^components` and contribute to the
/// coefficient of `t^(l - d(X))`.
pub fn char_poly_cycles(gr: &SecondGraph, dd: &DegreeData) -> LaurentPoly {
    debug_assert_eq!(gr.dd, *dd);
    let g = dd.generator_count();
    let degrees = dd.degrees();
    let ell = dd.degree_sum();
    let mut poly = LaurentPoly::monomial(ell, 1);
    for mask in 1u32..(1 << g) {
        let labels: Vec<usize> = (0..g).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let weight: i64 = labels.iter().map(|&i| degrees[i - 1]).sum();
        let signed = SpanningCounter::new(&labels, g).signed_count();
        if signed != 0 {
            poly = &poly + &LaurentPoly::monomial(ell - weight, signed);
        }
    }
    poly
}

/// Spanning disjoint-cycle unions of the hat graph on `labels` (1-based
/// generator indices), materialized as lists of cycles; each cycle starts at
/// its smallest vertex and cycles are ordered by starting vertex.
pub fn hat_spanning_unions(labels: &[usize], g: usize) -> Vec<Vec<Vec<usize>>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        edge: &dyn Fn(usize, usize) -> bool,
        labels: &[usize],
        used: u32,
        cycles: &mut Vec<Vec<usize>>,
        path: Option<(usize, usize, Vec<usize>)>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        match path {
            None => {
                if used == (1 << k) - 1 {
                    out.push(cycles.clone());
                    return;
                }
                let s = (!used).trailing_zeros() as usize;
                rec(k, edge, labels, used | (1 << s), cycles, Some((s, s, vec![s])), out);
            }
            Some((start, cur, verts)) => {
                if edge(cur, start) {
                    cycles.push(verts.iter().map(|&v| labels[v]).collect());
                    rec(k, edge, labels, used, cycles, None, out);
                    cycles.pop();
                }
                for v in 0..k {
                    if used & (1 << v) == 0 && edge(cur, v) {
                        let mut next = verts.clone();
                        next.push(v);
                        rec(k, edge, labels, used | (1 << v), cycles, Some((start, v, next)), out);
                    }
                }
            }
        }
    }
    let k = labels.len();
    let edge = |a: usize, b: usize| !(labels[a] == 1 && labels[b] == g);
    let mut out = Vec::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    rec(k, &edge, labels, 0, &mut cycles, None, &mut out);
    out
}

/// Simple cycles of the hat graph on `labels`, as label sequences.
pub fn hat_simple_cycles(labels: &[usize], g: usize) -> Vec<Vec<usize>> {
    let k = labels.len();
    let mut neighbors = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            if !(labels[a] == 1 && labels[b] == g) {
                neighbors[a].push(b);
            }
        }
    }
    enumerate_simple_cycles(k, &neighbors)
        .into_iter()
        .map(|cycle| cycle.into_iter().map(|v| labels[v]).collect())
        .collect()
}

/// All simple cycles of a digraph, each reported once starting from its
/// smallest vertex.
pub(crate) fn enumerate_simple_cycles(n: usize, out_neighbors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn dfs(
        root: usize,
        cur: usize,
        out_neighbors: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        cycles: &mut Vec<Vec<usize>>,
    ) {
        for &next in &out_neighbors[cur] {
            if next == root {
                cycles.push(path.clone());
            } else if next > root && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                dfs(root, next, out_neighbors, path, on_path, cycles);
                on_path[next] = false;
                path.pop();
            }
        }
    }
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        on_path[root] = true;
        dfs(root, root, out_neighbors, &mut path, &mut on_path, &mut cycles);
        on_path[root] = false;
        path.pop();
    }
    cycles
}

/// Certification data for the second graph.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PrimitivityReport {
    pub strongly_connected: bool,
    pub period: u64,
    /// Exponent `n <= (l-1)^2 + 1` with every entry of the n-th matrix power
    /// positive.
    pub primitivity_witness: usize,
}

/// Check strong connectivity, compute the period, and find a primitivity
/// witness by exact integer matrix powers.
pub fn certify_primitive(gr: &SecondGraph) -> Result<PrimitivityReport, GraphError> {
    let n = gr.vertex_count();
    let strongly_connected = is_strongly_connected(gr);
    if !strongly_connected {
        return Err(GraphError::NotPrimitive("not strongly connected".to_string()));
    }
    let period = period_through_first_vertex(gr)?;
    if period != 1 {
        return Err(GraphError::NotPrimitive(format!("period {period} > 1")));
    }

    let cap = (n - 1) * (n - 1) + 1;
    let m: Vec<Vec<BigInt>> = gr
        .adjacency
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut power = m.clone();
    let mut witness = None;
    for k in 1..=cap {
        if power.iter().all(|row| row.iter().all(|e| e.is_positive())) {
            witness = Some(k);
            break;
        }
        power = mat_mul(&power, &m);
    }
    match witness {
        Some(primitivity_witness) => Ok(PrimitivityReport {
            strongly_connected,
            period,
            primitivity_witness,
        }),
        None => Err(GraphError::NotPrimitive(format!(
            "no positive power up to the Wielandt bound {cap}"
        ))),
    }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for (t, b_row) in b.iter().enumerate() {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b_row[j].is_zero() {
                    out[i][j] += &a[i][t] * &b_row[j];
                }
            }
        }
    }
    out
}

fn is_strongly_connected(gr: &SecondGraph) -> bool {
    let n = gr.vertex_count();
    if n == 0 {
        return false;
    }
    let mut rev = vec![Vec::new(); n];
    for &(u, v) in &gr.edges {
        rev[v].push(u);
    }
    let reaches_all = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reaches_all(&gr.out_neighbors) && reaches_all(&rev)
}

/// Period as the gcd of lengths of simple cycles through the first vertex
/// (sufficient in a strongly connected graph). The enumeration stops as soon
/// as the gcd reaches 1.
fn period_through_first_vertex(gr: &SecondGraph) -> Result<u64, GraphError> {
    const STEP_BUDGET: usize = 10_000_000;
    fn dfs(
        gr: &SecondGraph,
        cur: usize,
        depth: u64,
        on_path: &mut [bool],
        gcd: &mut u64,
        steps: &mut usize,
    ) -> bool {
        *steps += 1;
        if *steps > STEP_BUDGET {
            return false;
        }
        for &v in &gr.out_neighbors[cur] {
            if v == 0 {
                *gcd = num_integer::Integer::gcd(&*gcd, &depth);
                if *gcd == 1 {
                    return true;
                }
            } else if !on_path[v] {
                on_path[v] = true;
                if dfs(gr, v, depth + 1, on_path, gcd, steps) {
                    return true;
                }
                on_path[v] = false;
            }
        }
        false
    }
    let n = gr.vertex_count();
    let mut on_path = vec![false; n];
    let mut gcd = 0u64;
    let mut steps = 0usize;
    on_path[0] = true;
    let early = dfs(gr, 0, 1, &mut on_path, &mut gcd, &mut steps);
    if !early && steps > STEP_BUDGET {
        return Err(GraphError::NotPrimitive(
            "cycle enumeration budget exceeded while computing the period".to_string(),
        ));
    }
    if gcd == 0 {
        return Err(GraphError::NotPrimitive("no cycle through the first vertex".to_string()));
    }
    Ok(gcd)
}

/// Dominant eigenvalue by power iteration with Collatz-Wielandt brackets:
/// stops when `max_i (Mv)_i/v_i - min_i (Mv)_i/v_i <= tol * lambda`.
pub fn perron_root(gr: &SecondGraph, tol: f64) -> Result<f64, GraphError> {
    assert!(tol > 0.0);
    const MAX_ITERATIONS: usize = 1_000_000;
    let n = gr.vertex_count();
    let mut v = vec![1.0f64; n];
    for _ in 0..MAX_ITERATIONS {
        let mut w = vec![0.0f64; n];
        for (i, row) in gr.adjacency.iter().enumerate() {
            let mut acc = 0.0;
            for (j, &e) in row.iter().enumerate() {
                if e != 0 {
                    acc += f64::from(e) * v[j];
                }
            }
            w[i] = acc;
        }
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for i in 0..n {
            let ratio = w[i] / v[i];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        let estimate = 0.5 * (lo + hi);
        if hi - lo <= tol * estimate {
            return Ok(estimate);
        }
        let norm = w.iter().cloned().fold(0.0f64, f64::max);
        for x in &mut w {
            *x /= norm;
        }
        v = w;
    }
    Err(GraphError::NoConvergence { iterations: MAX_ITERATIONS })
}
