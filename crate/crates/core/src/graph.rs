//! Immutable simple undirected graphs and their block structure.
//!
//! Vertices are `0..n`. Edges are stored once as `(u, v)` with `u < v`, in
//! lexicographic order, and the adjacency lists are sorted. Construction does
//! not require connectivity; the structural queries below do.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Distance value for vertices that cannot be reached.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs.
    ///
    /// Pairs may be given in either orientation. Loops, duplicates and
    /// out-of-range endpoints are rejected with the offending pair.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// The graph with one vertex and no edges.
    pub fn singleton() -> Self {
        Graph {
            n: 1,
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// An edge is pendant when one of its endpoints has degree one.
    pub fn is_pendant_edge(&self, u: usize, v: usize) -> bool {
        self.degree(u) == 1 || self.degree(v) == 1
    }

    /// Relabels vertices: old vertex `order[i]` becomes vertex `i`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut position = vec![0; self.n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (position[u], position[v]))
            .collect();
        Graph::from_edges(self.n, &pairs).expect("relabeling preserves simplicity")
    }

    /// Copy of the graph with one extra vertex joined to `anchor`.
    pub fn with_pendant_at(&self, anchor: usize) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.push((anchor, self.n));
        Graph::from_edges(self.n + 1, &pairs).expect("pendant extension stays simple")
    }

    /// Copy of the graph with a new cycle of `len` edges through `anchor`.
    /// The cycle brings `len - 1` fresh vertices.
    pub fn with_cycle_at(&self, anchor: usize, len: usize) -> Graph {
        assert!(len >= 3, "cycle length must be at least 3");
        let mut pairs = self.edges.clone();
        let fresh: Vec<usize> = (self.n..self.n + len - 1).collect();
        let mut prev = anchor;
        for &v in &fresh {
            pairs.push((prev, v));
            prev = v;
        }
        pairs.push((prev, anchor));
        Graph::from_edges(self.n + len - 1, &pairs).expect("cycle extension stays simple")
    }

    /// Copy of the graph without the edge at `index`.
    pub fn without_edge(&self, index: usize) -> Graph {
        let pairs: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(self.n, &pairs).expect("edge deletion stays simple")
    }
}

/// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Row-major `n x n` matrix of hop distances.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|s| bfs_distances(g, s)).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_distances(g, 0).iter().all(|&d| d != UNREACHABLE)
}

pub fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    SingleEdge,
    Cycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Indices into [`Graph::edges`], ascending.
    pub edges: Vec<usize>,
    /// Vertices of the block, ascending.
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest edge index.
    pub blocks: Vec<Block>,
    /// Indices of the cut edges, ascending.
    pub cut_edges: Vec<usize>,
}

/// Biconnected components by the low-point method, run iteratively.
fn biconnected_edge_labels(g: &Graph) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut label = vec![UNSEEN; g.m()];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut next_label = 0;
    let mut clock = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next neighbor position)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent_edge, pos) = *frame;
            if pos < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[pos];
                let e = g.edge_index(v, w).expect("adjacency matches edge list");
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        while let Some(e) = edge_stack.pop() {
                            label[e] = next_label;
                            if e == parent_edge {
                                break;
                            }
                        }
                        next_label += 1;
                    }
                }
            }
        }
    }
    label
}

fn decompose(g: &Graph) -> BlockDecomposition {
    let labels = biconnected_edge_labels(g);
    let count = labels.iter().copied().max().map_or(0, |l| l + 1);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (e, &l) in labels.iter().enumerate() {
        groups[l].push(e);
    }
    groups.sort_by_key(|edges| edges[0]);

    let mut blocks = Vec::with_capacity(groups.len());
    let mut cut_edges = Vec::new();
    for edges in groups {
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&e| [g.edges()[e].0, g.edges()[e].1])
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let kind = if edges.len() == 1 {
            cut_edges.push(edges[0]);
            BlockKind::SingleEdge
        } else if edges.len() == vertices.len() && every_vertex_has_block_degree_two(g, &edges) {
            BlockKind::Cycle
        } else {
            BlockKind::Other
        };
        blocks.push(Block {
            edges,
            vertices,
            kind,
        });
    }
    cut_edges.sort_unstable();
    BlockDecomposition { blocks, cut_edges }
}

fn every_vertex_has_block_degree_two(g: &Graph, edges: &[usize]) -> bool {
    let mut degree = std::collections::HashMap::new();
    for &e in edges {
        let (u, v) = g.edges()[e];
        *degree.entry(u).or_insert(0usize) += 1;
        *degree.entry(v).or_insert(0usize) += 1;
    }
    degree.values().all(|&d| d == 2)
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    require_connected(g)?;
    Ok(decompose(g))
}

/// The bridges of a connected graph, as `(u, v)` pairs with `u < v`.
pub fn cut_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let blocks = block_decomposition(g)?;
    Ok(blocks.cut_edges.iter().map(|&e| g.edges()[e]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    /// Vertices in traversal order around the cycle.
    pub vertices: Vec<usize>,
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    /// All but at most one cycle vertex has degree two in the whole graph.
    pub end_block: bool,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusProfile {
    pub is_cactus: bool,
    /// Number of cycle blocks.
    pub k: usize,
    /// Lengths of the cycle blocks, ascending.
    pub cycle_lengths: Vec<usize>,
    /// Cycle blocks in block order.
    pub cycles: Vec<CycleInfo>,
    /// Indices of the cut edges, ascending.
    pub cut_edges: Vec<usize>,
}

impl CactusProfile {
    pub fn end_block_flags(&self) -> Vec<bool> {
        self.cycles.iter().map(|c| c.end_block).collect()
    }
}

pub fn cactus_profile(g: &Graph) -> Result<CactusProfile> {
    let decomposition = block_decomposition(g)?;
    let mut is_cactus = true;
    let mut cycles = Vec::new();
    for block in &decomposition.blocks {
        match block.kind {
            BlockKind::SingleEdge => {}
            BlockKind::Other => is_cactus = false,
            BlockKind::Cycle => {
                let heavy = block.vertices.iter().filter(|&&v| g.degree(v) != 2).count();
                cycles.push(CycleInfo {
                    vertices: cycle_order(g, block),
                    edges: block.edges.clone(),
                    end_block: heavy <= 1,
                });
            }
        }
    }
    let mut cycle_lengths: Vec<usize> = cycles.iter().map(CycleInfo::len).collect();
    cycle_lengths.sort_unstable();
    Ok(CactusProfile {
        is_cactus,
        k: cycles.len(),
        cycle_lengths,
        cycles,
        cut_edges: decomposition.cut_edges,
    })
}

/// Walks a cycle block starting from its smallest vertex.
fn cycle_order(g: &Graph, block: &Block) -> Vec<usize> {
    let in_block = |u: usize, v: usize| {
        g.edge_index(u, v)
            .is_some_and(|e| block.edges.binary_search(&e).is_ok())
    };
    let start = block.vertices[0];
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut current = start;
    loop {
        let next = g
            .neighbors(current)
            .iter()
            .copied()
            .find(|&w| w != prev && in_block(current, w))
            .expect("cycle block vertices have two block neighbors");
        if next == start {
            break;
        }
        order.push(next);
        prev = current;
        current = next;
    }
    order
}
