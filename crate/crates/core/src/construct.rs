//! Derived graphs and the matrices attached to a self-loop graph.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::graph::{LoopSet, LoopedGraph, SimpleGraph};
use crate::{Error, Result};

/// Dense symmetric matrix with integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<i64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i64::from(i == j))
    }

    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    /// Builds the matrix from `f(i, j)`, which must be symmetric.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        let m = SymMatrix { order, data };
        debug_assert!(m.is_symmetric());
        m
    }

    /// Row-major constructor; fails when the rows are ragged or asymmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Domain("matrix rows must form a square"));
        }
        let m = SymMatrix {
            order,
            data: rows.concat(),
        };
        if m.is_symmetric() {
            Ok(m)
        } else {
            Err(Error::Domain("matrix is not symmetric"))
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sq(&self) -> i64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal(&self, indices: &[usize]) -> SymMatrix {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }
}

/// Symmetric matrix with entries `numer[i][j] / denom`; exact carrier for
/// matrices with rational entries sharing one denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledSymMatrix {
    pub numer: SymMatrix,
    pub denom: i64,
}

impl ScaledSymMatrix {
    pub fn order(&self) -> usize {
        self.numer.order()
    }

    pub fn get(&self, i: usize, j: usize) -> Ratio<i64> {
        Ratio::new(self.numer.get(i, j), self.denom)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        let d = self.denom as f64;
        self.numer.data.iter().map(|&x| x as f64 / d).collect()
    }
}

impl From<SymMatrix> for ScaledSymMatrix {
    fn from(numer: SymMatrix) -> Self {
        ScaledSymMatrix { numer, denom: 1 }
    }
}

/// `A(G_S) = A(G) + I_S`.
pub fn adjacency(gs: &LoopedGraph) -> SymMatrix {
    let g = gs.base();
    SymMatrix::from_fn(gs.order(), |i, j| {
        if i == j {
            i64::from(gs.has_loop(i))
        } else {
            i64::from(g.has_edge(i, j))
        }
    })
}

/// Which loop set the complement of `G_S` carries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ComplementConvention {
    /// Complement of `G`, same loop set `S`. Preserves the classical
    /// Nordhaus–Gaddum bounds at `σ = 0`.
    #[default]
    SameLoops,
    /// Complement of `G` with loops on `V \ S`.
    ComplementLoops,
}

pub fn complement(gs: &LoopedGraph) -> LoopedGraph {
    complement_with(gs, ComplementConvention::SameLoops)
}

pub fn complement_with(gs: &LoopedGraph, convention: ComplementConvention) -> LoopedGraph {
    let base = gs.base().complement();
    let loops = match convention {
        ComplementConvention::SameLoops => gs.loops().clone(),
        ComplementConvention::ComplementLoops => gs.loops().complement_in(gs.order()),
    };
    LoopedGraph::new(base, loops).expect("loop set stays within the vertex set")
}

/// Line graph of `G_S`: vertices `0..m` are the edges of `G` in canonical
/// order, vertices `m..m+σ` are the loops in ascending vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopedLineGraph {
    pub graph: LoopedGraph,
    /// `m`, the number of edge-vertices.
    pub edge_vertices: usize,
    /// Source element of each vertex.
    pub sources: Vec<LineVertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineVertex {
    Edge(usize, usize),
    Loop(usize),
}

pub fn line_graph(gs: &LoopedGraph) -> Result<LoopedLineGraph> {
    let edges = gs.base().edges();
    let m = edges.len();
    let sigma = gs.sigma();
    if m + sigma == 0 {
        return Err(Error::EmptyLineGraph);
    }
    let mut sources: Vec<LineVertex> = edges.iter().map(|&(u, v)| LineVertex::Edge(u, v)).collect();
    sources.extend(gs.loops().members().iter().map(|&v| LineVertex::Loop(v)));

    let mut pairs = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            // Distinct simple edges share at most one endpoint.
            if a == c || a == d || b == c || b == d {
                pairs.push((i, j));
            }
        }
        for (l, &v) in gs.loops().members().iter().enumerate() {
            if v == a || v == b {
                pairs.push((i, m + l));
            }
        }
    }
    let base = SimpleGraph::new(m + sigma, pairs)?;
    let graph = LoopedGraph::new(base, LoopSet::from_indices(m..m + sigma)?)?;
    Ok(LoopedLineGraph {
        graph,
        edge_vertices: m,
        sources,
    })
}

/// `n × (m + σ)` 0/1 incidence matrix `(B(G) | N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    /// Number of leading ordinary-edge columns.
    pub edge_cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[u8]>::to_vec).collect()
    }

    /// `Bᵀ B`, of order `m + σ`.
    pub fn gram_cols(&self) -> SymMatrix {
        SymMatrix::from_fn(self.cols, |i, j| {
            (0..self.rows)
                .map(|r| i64::from(self.get(r, i) * self.get(r, j)))
                .sum()
        })
    }

    /// `B Bᵀ`, of order `n`.
    pub fn gram_rows(&self) -> SymMatrix {
        SymMatrix::from_fn(self.rows, |i, j| {
            (0..self.cols)
                .map(|c| i64::from(self.get(i, c) * self.get(j, c)))
                .sum()
        })
    }
}

pub fn incidence(gs: &LoopedGraph) -> IncidenceMatrix {
    let n = gs.order();
    let edges = gs.base().edges();
    let m = edges.len();
    let cols = m + gs.sigma();
    let mut data = vec![0u8; n * cols];
    for (c, &(u, v)) in edges.iter().enumerate() {
        data[u * cols + c] = 1;
        data[v * cols + c] = 1;
    }
    for (l, &v) in gs.loops().members().iter().enumerate() {
        data[v * cols + m + l] = 1;
    }
    IncidenceMatrix {
        rows: n,
        cols,
        edge_cols: m,
        data,
    }
}

/// `Q(G_S)`: `A(G)` off the diagonal, `d_G(v) + 1` on `S`, `d_G(v)` elsewhere.
pub fn signless_laplacian(gs: &LoopedGraph) -> SymMatrix {
    let g = gs.base();
    SymMatrix::from_fn(gs.order(), |i, j| {
        if i == j {
            (g.degree(i) + usize::from(gs.has_loop(i))) as i64
        } else {
            i64::from(g.has_edge(i, j))
        }
    })
}

/// `J + 2 I_S - (1 + 2σ/n) I` with `S` the first `σ` indices, stored over the
/// common denominator `n`.
pub fn ng_energy_aux_matrix(n: usize, sigma: usize) -> Result<ScaledSymMatrix> {
    if n < 2 {
        return Err(Error::Domain("auxiliary matrix needs n >= 2"));
    }
    if sigma > n {
        return Err(Error::Domain("sigma exceeds n"));
    }
    let (ni, si) = (n as i64, sigma as i64);
    let numer = SymMatrix::from_fn(n, |i, j| {
        if i != j {
            ni
        } else if i < sigma {
            2 * ni - 2 * si
        } else {
            -2 * si
        }
    });
    Ok(ScaledSymMatrix { numer, denom: ni })
}

/// Quotient matrix of the two-block partition `(S, V \ S)`.
pub type QuotientMatrix2 = [[Ratio<i64>; 2]; 2];

/// Block row sums for the partition `(part, complement of part)`; each block
/// must have constant row sums.
pub fn quotient_2block(mat: &ScaledSymMatrix, part: &LoopSet) -> Result<QuotientMatrix2> {
    let n = mat.order();
    if let Some(&v) = part.members().last() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let inside = part.members().to_vec();
    let outside = part.complement_in(n).members().to_vec();
    if inside.is_empty() || outside.is_empty() {
        return Err(Error::DegeneratePartition);
    }
    let blocks = [&inside, &outside];
    let mut q = [[Ratio::from_integer(0); 2]; 2];
    for (bi, rows) in blocks.iter().enumerate() {
        for (bj, cols) in blocks.iter().enumerate() {
            let mut sum = None;
            for &r in rows.iter() {
                let s: i64 = cols.iter().map(|&c| mat.numer.get(r, c)).sum();
                match sum {
                    None => sum = Some(s),
                    Some(prev) if prev != s => return Err(Error::NonEquitablePartition(bi, bj)),
                    _ => {}
                }
            }
            q[bi][bj] = Ratio::new(sum.unwrap_or(0), mat.denom);
        }
    }
    Ok(q)
}
