//! Brute-force oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use szeged_core::Graph;

const INF: u32 = u32::MAX / 4;

pub fn all_pairs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// `(m_u, m_v, m_0)` for every edge, by definition.
pub fn edge_splits(n: usize, edges: &[(usize, usize)]) -> Vec<(i64, i64, i64)> {
    let d = all_pairs(n, edges);
    edges
        .iter()
        .map(|&(u, v)| {
            let (mut mu, mut mv, mut m0) = (0, 0, 0);
            for &(x, y) in edges {
                let du = d[x][u].min(d[y][u]);
                let dv = d[x][v].min(d[y][v]);
                if du < dv {
                    mu += 1;
                } else if dv < du {
                    mv += 1;
                } else {
                    m0 += 1;
                }
            }
            (mu, mv, m0)
        })
        .collect()
}

/// Four times the edge revised Szeged index, from the product form.
pub fn quarters(n: usize, edges: &[(usize, usize)]) -> i64 {
    edge_splits(n, edges)
        .iter()
        .map(|&(mu, mv, m0)| (2 * mu + m0) * (2 * mv + m0))
        .sum()
}

pub fn quarters_of(g: &Graph) -> i64 {
    quarters(g.n(), g.edges())
}

pub fn wiener(n: usize, edges: &[(usize, usize)]) -> u64 {
    let d = all_pairs(n, edges);
    d.iter()
        .enumerate()
        .flat_map(|(i, row)| row[i + 1..].iter().map(|&x| u64::from(x)))
        .sum()
}

pub fn vertex_szeged(n: usize, edges: &[(usize, usize)]) -> u64 {
    let d = all_pairs(n, edges);
    edges
        .iter()
        .map(|&(u, v)| {
            let nu = (0..n).filter(|&w| d[w][u] < d[w][v]).count() as u64;
            let nv = (0..n).filter(|&w| d[w][v] < d[w][u]).count() as u64;
            nu * nv
        })
        .sum()
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let d = all_pairs(n, edges);
    (0..n).all(|v| d[0][v] < INF)
}

/// Number of simple cycles through each edge, by exhaustive path search.
pub fn cycles_through_edges(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn paths(
        adj: &[Vec<usize>],
        at: usize,
        target: usize,
        seen: &mut Vec<bool>,
        len: usize,
    ) -> usize {
        if at == target {
            return usize::from(len >= 2);
        }
        let mut count = 0;
        for &w in &adj[at] {
            if !seen[w] {
                seen[w] = true;
                count += paths(adj, w, target, seen, len + 1);
                seen[w] = false;
            }
        }
        count
    }
    edges
        .iter()
        .map(|&(u, v)| {
            // u-v paths avoiding the edge itself, each closing one cycle
            let mut seen = vec![false; n];
            seen[u] = true;
            let mut count = 0;
            for &w in &adj[u] {
                if w != v {
                    seen[w] = true;
                    count += paths(&adj, w, v, &mut seen, 1);
                    seen[w] = false;
                }
            }
            count
        })
        .collect()
}

/// Connected, and no edge lies on two cycles.
pub fn is_cactus(n: usize, edges: &[(usize, usize)]) -> bool {
    connected(n, edges) && cycles_through_edges(n, edges).iter().all(|&c| c <= 1)
}

/// Some vertex `h` leaves every other vertex with degree at most 2 and
/// every leaf adjacent to `h`.
pub fn is_bundle(g: &Graph) -> bool {
    (0..g.n()).any(|h| {
        (0..g.n()).filter(|&v| v != h).all(|v| {
            let d = g.degree(v);
            d == 2 || (d == 1 && g.neighbors(v).contains(&h))
        })
    })
}

/// Every edge subset of `K_n` of the given size, as edge lists.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        if mask.count_ones() as usize == size {
            out.push(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect(),
            );
        }
    }
    out
}
