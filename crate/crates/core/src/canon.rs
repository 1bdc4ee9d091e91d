//! Isomorphism certificates by pruned permutation minimization.
//!
//! The certificate of a graph is the lexicographically smallest adjacency
//! bit string over all vertex orderings that respect a canonical ordered
//! partition (iterated degree refinement). The search is a branch and bound
//! over positions; two unplaced vertices with identical neighborhoods are
//! interchangeable, so only one of them is tried at each branch point.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`certificate`].
pub const MAX_CERTIFICATE_N: usize = 12;

/// Canonical byte string; equal exactly for isomorphic graphs.
///
/// Layout: one byte holding `n`, then the bits `adj(p[i], p[j])` for
/// `i = 1..n`, `j = 0..i`, packed most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labeled representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut pairs = Vec::new();
        let mut bit = 0;
        for i in 1..n {
            for j in 0..i {
                if self.0[1 + bit / 8] & (0x80 >> (bit % 8)) != 0 {
                    pairs.push((j, i));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, &pairs).expect("certificate bits describe a simple graph")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn certificate(g: &Graph) -> Result<Certificate> {
    canonical_form(g).map(|(cert, _)| cert)
}

/// Certificate plus the ordering that realizes it (`order[i]` is the
/// original vertex placed at position `i`).
pub fn canonical_form(g: &Graph) -> Result<(Certificate, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CERTIFICATE_N {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_CERTIFICATE_N,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let colors = refine_colors(g);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (colors[v], v));
    let cell_at: Vec<usize> = by_color.iter().map(|&v| colors[v]).collect();

    let mut search = Search {
        n,
        adj: &adj,
        colors: &colors,
        cell_at: &cell_at,
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        used: 0,
        best_rows: Vec::new(),
        best_order: Vec::new(),
    };
    search.descend();

    let mut bytes = vec![0u8; 1 + (n * n.saturating_sub(1) / 2).div_ceil(8)];
    bytes[0] = n as u8;
    let mut bit = 0;
    for (i, &row) in search.best_rows.iter().enumerate() {
        for j in 0..i {
            if row & (1 << (i - 1 - j)) != 0 {
                bytes[1 + bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    Ok((Certificate(bytes), search.best_order))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    certificate(g).map(|c| c.to_graph())
}

/// Iterated degree refinement with colors named by sorted signature, so the
/// resulting colors are invariant under relabeling.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut distinct = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut ranked = signatures.clone();
        ranked.sort();
        ranked.dedup();
        colors = signatures
            .iter()
            .map(|s| ranked.binary_search(s).expect("signature present"))
            .collect();
        if ranked.len() == distinct {
            return colors;
        }
        distinct = ranked.len();
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    colors: &'a [usize],
    cell_at: &'a [usize],
    order: Vec<usize>,
    /// `rows[i]` holds `adj(order[i], order[j])` for `j < i`, first bit most significant.
    rows: Vec<u32>,
    used: u32,
    best_rows: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let pos = self.order.len();
        if pos == self.n {
            if self.best_rows.is_empty() || self.rows < self.best_rows {
                self.best_rows.clone_from(&self.rows);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let cell = self.cell_at[pos];
        let mut tried: u32 = 0;
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.colors[v] != cell {
                continue;
            }
            if (0..self.n).any(|u| tried & (1 << u) != 0 && self.twins(u, v)) {
                continue;
            }
            tried |= 1 << v;

            let row = self
                .order
                .iter()
                .fold(0u32, |acc, &w| (acc << 1) | ((self.adj[v] >> w) & 1));
            // the stored best shrinks as leaves are found, so re-check per branch
            if !self.best_rows.is_empty() {
                match self.rows[..pos].cmp(&self.best_rows[..pos]) {
                    Ordering::Greater => return,
                    Ordering::Equal if row > self.best_rows[pos] => continue,
                    _ => {}
                }
            }
            self.order.push(v);
            self.rows.push(row);
            self.used |= 1 << v;
            self.descend();
            self.used &= !(1 << v);
            self.rows.pop();
            self.order.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (self.adj[u] & !(1 << v)) == (self.adj[v] & !(1 << u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, pairs).unwrap()
    }

    #[test]
    fn paw_relabelings_agree() {
        let a = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let b = g(4, &[(3, 2), (2, 1), (3, 1), (3, 0)]);
        assert_eq!(certificate(&a).unwrap(), certificate(&b).unwrap());
    }

    #[test]
    fn distinct_classes_differ() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert_ne!(certificate(&c4).unwrap(), certificate(&paw).unwrap());
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        let k3_tail = g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]);
        assert_ne!(certificate(&c6).unwrap(), certificate(&k3_tail).unwrap());
        // same degree sequence, not isomorphic: C6 vs two disjoint triangles
        let two_k3 = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_ne!(certificate(&c6).unwrap(), certificate(&two_k3).unwrap());
    }

    #[test]
    fn certificate_round_trips_to_an_isomorphic_graph() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let (cert, order) = canonical_form(&paw).unwrap();
        let canon = cert.to_graph();
        assert_eq!(canon, paw.relabel(&order));
        assert_eq!(certificate(&canon).unwrap(), cert);
    }

    #[test]
    fn regular_graphs_need_the_full_search() {
        // both 3-regular on six vertices
        let prism = g(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        );
        let k33 = g(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        );
        assert_ne!(certificate(&prism).unwrap(), certificate(&k33).unwrap());
        let prism2 = prism.relabel(&[5, 3, 1, 0, 2, 4]);
        assert_eq!(certificate(&prism).unwrap(), certificate(&prism2).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let pairs: Vec<_> = (0..12).map(|i| (i, i + 1)).collect();
        let p13 = g(13, &pairs);
        assert_eq!(
            certificate(&p13),
            Err(Error::CapExceeded { n: 13, cap: 12 })
        );
        assert!(certificate(&p13.without_edge(11)).is_err());
    }

    #[test]
    fn singleton() {
        let cert = certificate(&Graph::singleton()).unwrap();
        assert_eq!(cert.as_bytes(), &[1]);
        assert_eq!(cert.to_graph(), Graph::singleton());
    }
}
