//! Constructors for the named graph families.
//!
//! Numbering is fixed so that emitted graph6 strings are reproducible:
//! bundles put the hub at 0, then each cycle's remaining vertices in spec
//! order, then the pendant vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{cactus_profile, Graph};

/// Cycles of the given lengths sharing one hub, plus pendant edges at the hub.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BundleSpec {
    pub cycle_lengths: Vec<usize>,
    pub pendants: usize,
}

impl BundleSpec {
    pub fn new(cycle_lengths: Vec<usize>, pendants: usize) -> Self {
        BundleSpec {
            cycle_lengths,
            pendants,
        }
    }

    /// The bundle with these cycles and exactly `m` edges.
    pub fn with_edge_count(cycle_lengths: Vec<usize>, m: usize) -> Result<Self> {
        let cycle_edges: usize = cycle_lengths.iter().sum();
        if cycle_edges > m {
            return Err(Error::Infeasible(format!(
                "cycles use {cycle_edges} edges but only {m} are available"
            )));
        }
        Ok(BundleSpec {
            cycle_lengths,
            pendants: m - cycle_edges,
        })
    }

    pub fn n(&self) -> usize {
        1 + self.cycle_lengths.iter().map(|l| l - 1).sum::<usize>() + self.pendants
    }

    pub fn m(&self) -> usize {
        self.cycle_lengths.iter().sum::<usize>() + self.pendants
    }

    pub fn k(&self) -> usize {
        self.cycle_lengths.len()
    }

    /// Number of odd cycle lengths.
    pub fn odd_cycles(&self) -> usize {
        self.cycle_lengths.iter().filter(|&&l| l % 2 == 1).count()
    }
}

pub fn bundle(spec: &BundleSpec) -> Result<Graph> {
    if let Some(&bad) = spec.cycle_lengths.iter().find(|&&l| l < 3) {
        return Err(Error::Infeasible(format!("cycle length {bad} is below 3")));
    }
    let mut pairs = Vec::with_capacity(spec.m());
    let mut next = 1;
    for &len in &spec.cycle_lengths {
        let mut prev = 0;
        for v in next..next + len - 1 {
            pairs.push((prev, v));
            prev = v;
        }
        pairs.push((prev, 0));
        next += len - 1;
    }
    for v in next..next + spec.pendants {
        pairs.push((0, v));
    }
    Graph::from_edges(spec.n(), &pairs)
}

/// `k` triangles at a hub carrying `n - 2k - 1` pendant edges.
pub fn c0(n: usize, k: usize) -> Result<Graph> {
    if n < 2 * k + 1 {
        return Err(Error::Infeasible(format!(
            "C0(n,k) needs n >= 2k+1, got n={n}, k={k}"
        )));
    }
    bundle(&BundleSpec::new(vec![3; k], n - 2 * k - 1))
}

/// `k` quadrangles at a hub carrying `n - 3k - 1` pendant edges.
pub fn c1(n: usize, k: usize) -> Result<Graph> {
    if n < 3 * k + 1 {
        return Err(Error::Infeasible(format!(
            "C1(n,k) needs n >= 3k+1, got n={n}, k={k}"
        )));
    }
    bundle(&BundleSpec::new(vec![4; k], n - 3 * k - 1))
}

/// `c1(n - 1, k)` with a new vertex hung on its lowest-numbered pendant
/// vertex, giving a path of length two off the hub.
pub fn g_star_1(n: usize, k: usize) -> Result<Graph> {
    // c1(n - 1, k) has n - 3k - 2 pendant vertices and needs at least one
    if n < 3 * k + 3 {
        return Err(Error::Infeasible(format!(
            "G*1(n,k) needs n >= 3k+3, got n={n}, k={k}"
        )));
    }
    let base = c1(n - 1, k)?;
    Ok(base.with_pendant_at(3 * k + 1))
}

/// One triangle and `k - 1` quadrangles at a hub, padded to `m` edges.
pub fn triangle_and_quadrangles(m: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Infeasible("needs at least one cycle".into()));
    }
    let mut lengths = vec![3];
    lengths.extend(std::iter::repeat_n(4, k - 1));
    bundle(&BundleSpec::with_edge_count(lengths, m)?)
}

/// `t` triangles and `k - t` quadrangles at a hub, padded to `m` edges.
pub fn mixed_bundle(t: usize, k: usize, m: usize) -> Result<Graph> {
    if t > k {
        return Err(Error::Infeasible(format!("t = {t} exceeds k = {k}")));
    }
    let mut lengths = vec![3; t];
    lengths.extend(std::iter::repeat_n(4, k - t));
    bundle(&BundleSpec::with_edge_count(lengths, m)?)
}

pub fn cycle(len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(Error::Infeasible(format!("cycle length {len} is below 3")));
    }
    let pairs: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    Graph::from_edges(len, &pairs)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &pairs)
}

/// Star on `n` vertices, center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    bundle(&BundleSpec::new(Vec::new(), n - 1))
}

/// The spec of `g` when `g` is a bundle, cycle lengths ascending.
///
/// Exact for any size: a bundle is a cactus with a vertex lying on every
/// block, whose other cycle vertices have degree 2 and whose cut edges end
/// in leaves.
pub fn recognize_bundle(g: &Graph) -> Option<BundleSpec> {
    let profile = cactus_profile(g).ok().filter(|p| p.is_cactus)?;
    let spec = BundleSpec::new(profile.cycle_lengths.clone(), profile.cut_edges.len());
    if g.n() == 1 {
        return Some(spec);
    }
    let is_hub = |h: usize| {
        let cycles_ok = profile.cycles.iter().all(|c| {
            c.vertices.contains(&h) && c.vertices.iter().all(|&v| v == h || g.degree(v) == 2)
        });
        let cuts_ok = profile.cut_edges.iter().all(|&e| {
            let (u, v) = g.edges()[e];
            (u == h && g.degree(v) == 1) || (v == h && g.degree(u) == 1)
        });
        cycles_ok && cuts_ok
    };
    (0..g.n()).any(is_hub).then_some(spec)
}

/// Whether `g` is isomorphic to `g_star_1(g.n(), k)` for its cycle count `k`.
///
/// Equivalent structure: a leaf `z` hangs off a degree-2 vertex `y`, and
/// deleting `z` leaves a quadrangle bundle with at least one pendant.
pub fn is_g_star_1(g: &Graph) -> bool {
    (0..g.n()).any(|z| {
        if g.degree(z) != 1 || g.n() < 3 {
            return false;
        }
        let y = g.neighbors(z)[0];
        if g.degree(y) != 2 {
            return false;
        }
        let rest = without_leaf(g, z);
        recognize_bundle(&rest)
            .is_some_and(|spec| spec.pendants >= 1 && spec.cycle_lengths.iter().all(|&l| l == 4))
    })
}

/// `g` minus the leaf `z`, later vertices shifted down by one.
fn without_leaf(g: &Graph, z: usize) -> Graph {
    let shift = |v: usize| if v > z { v - 1 } else { v };
    let pairs: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| u != z && v != z)
        .map(|&(u, v)| (shift(u), shift(v)))
        .collect();
    Graph::from_edges(g.n() - 1, &pairs).expect("removing a leaf keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::certificate;
    use crate::graph::cut_edges;
    use crate::indices::{edge_revised_szeged, QuarterInt};

    fn sz(g: &Graph) -> QuarterInt {
        edge_revised_szeged(g).unwrap()
    }

    #[test]
    fn bundle_examples() {
        let butterfly = bundle(&BundleSpec::new(vec![3, 3], 0)).unwrap();
        assert_eq!((butterfly.n(), butterfly.m()), (5, 6));
        let c1_5 = bundle(&BundleSpec::new(vec![4], 1)).unwrap();
        assert_eq!((c1_5.n(), c1_5.m()), (5, 5));
        assert_eq!(c1_5.edges(), &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3)]);
        assert_eq!(
            bundle(&BundleSpec::new(vec![], 3)).unwrap(),
            star(4).unwrap()
        );
        assert!(matches!(
            bundle(&BundleSpec::new(vec![2], 0)),
            Err(Error::Infeasible(_))
        ));
        let spec = BundleSpec::new(vec![3, 5, 4], 2);
        assert_eq!(spec.n(), 1 + 2 + 4 + 3 + 2);
        assert_eq!(spec.m(), 14);
        assert_eq!(spec.odd_cycles(), 2);
    }

    #[test]
    fn c0_examples() {
        let paw = c0(4, 1).unwrap();
        let reference = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(certificate(&paw).unwrap(), certificate(&reference).unwrap());
        assert_eq!(c0(3, 1).unwrap(), cycle(3).unwrap());
        let g = c0(7, 2).unwrap();
        assert_eq!(g.m(), 8);
        assert_eq!(g.degree(0), 6);
        assert!(matches!(c0(4, 2), Err(Error::Infeasible(_))));
    }

    #[test]
    fn c1_examples() {
        let g = c1(5, 1).unwrap();
        assert_eq!(sz(&g), QuarterInt::from_quarters(105));
        assert_eq!(
            certificate(&c1(4, 1).unwrap()).unwrap(),
            certificate(&cycle(4).unwrap()).unwrap()
        );
        assert_eq!(c1(9, 2).unwrap().m(), 10);
        assert!(matches!(c1(4, 2), Err(Error::Infeasible(_))));
    }

    #[test]
    fn g_star_1_examples() {
        let g = g_star_1(6, 1).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (4, 5)]);
        let g = g_star_1(20, 1).unwrap();
        assert_eq!(g.m(), 20);
        assert_eq!(sz(&g), QuarterInt::from_int(318));
        let g = g_star_1(7, 1).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(6), 1);
        assert!(matches!(g_star_1(5, 1), Err(Error::Infeasible(_))));
        assert!(g_star_1(6, 1).is_ok());
    }

    #[test]
    fn simple_family_values() {
        assert_eq!(sz(&cycle(5).unwrap()), QuarterInt::from_quarters(125));
        assert_eq!(sz(&star(5).unwrap()), QuarterInt::from_int(7));
        assert_eq!(sz(&path(2).unwrap()), QuarterInt::from_quarters(1));
        assert_eq!(path(1).unwrap(), Graph::singleton());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn c0_c1_edge_count_identity() {
        for n in 1..15 {
            for k in 0..=n / 2 {
                if let Ok(g) = c0(n, k) {
                    assert_eq!(g.m(), n + k - 1);
                }
                if let Ok(g) = c1(n, k) {
                    assert_eq!(g.m(), n + k - 1);
                }
            }
        }
    }

    #[test]
    fn g_star_1_has_one_non_pendant_cut_edge() {
        for k in 0..4 {
            for n in 3 * k + 3 + usize::from(k == 0)..3 * k + 9 {
                let g = g_star_1(n, k).unwrap();
                let inner: Vec<_> = cut_edges(&g)
                    .unwrap()
                    .into_iter()
                    .filter(|&(u, v)| !g.is_pendant_edge(u, v))
                    .collect();
                assert_eq!(inner, vec![(0, 3 * k + 1)], "n={n} k={k}");
                let e = g.edge_index(0, 3 * k + 1).unwrap();
                let split = g.without_edge(e);
                let side = crate::graph::bfs_distances(&split, 3 * k + 1);
                let reached = side
                    .iter()
                    .filter(|&&d| d != crate::graph::UNREACHABLE)
                    .count();
                assert_eq!(reached, 2);
                let p = cactus_profile(&g).unwrap();
                assert!(p.is_cactus && p.k == k);
            }
        }
    }

    #[test]
    fn recognizers_examples() {
        let spec = recognize_bundle(&c0(7, 2).unwrap()).unwrap();
        assert_eq!(spec, BundleSpec::new(vec![3, 3], 2));
        assert_eq!(
            recognize_bundle(&cycle(5).unwrap()),
            Some(BundleSpec::new(vec![5], 0))
        );
        assert_eq!(
            recognize_bundle(&path(2).unwrap()),
            Some(BundleSpec::new(vec![], 1))
        );
        assert_eq!(
            recognize_bundle(&Graph::singleton()),
            Some(BundleSpec::new(vec![], 0))
        );
        assert_eq!(recognize_bundle(&path(4).unwrap()), None);
        assert_eq!(recognize_bundle(&g_star_1(8, 1).unwrap()), None);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert_eq!(recognize_bundle(&two_triangles), None);

        assert!(is_g_star_1(&g_star_1(8, 1).unwrap()));
        assert!(is_g_star_1(&g_star_1(40, 3).unwrap()));
        assert!(is_g_star_1(&path(3).unwrap()));
        assert!(!is_g_star_1(&c1(8, 1).unwrap()));
        assert!(!is_g_star_1(&path(5).unwrap()));
    }

    #[test]
    fn recognizers_match_certificates() {
        use crate::enumerate::Enumerator;
        use crate::exec::Exec;

        // multisets of k lengths >= 3 with sum(l - 1) <= budget
        fn multisets(k: usize, min: usize, budget: usize) -> usize {
            if k == 0 {
                return 1;
            }
            (min..)
                .take_while(|l| (l - 1) * k <= budget)
                .map(|l| multisets(k - 1, l, budget - (l - 1)))
                .sum()
        }

        let e = Enumerator::new(Exec::Sequential);
        for n in 1..=10 {
            for k in 0..=(n - 1) / 2 {
                let star = g_star_1(n, k).ok().map(|g| certificate(&g).unwrap());
                let mut bundles = 0;
                for class in e.classes(n, k).unwrap() {
                    let g = &class.graph;
                    if let Some(spec) = recognize_bundle(g) {
                        assert_eq!(
                            certificate(&bundle(&spec).unwrap()).unwrap(),
                            class.certificate
                        );
                        bundles += 1;
                    }
                    assert_eq!(
                        is_g_star_1(g),
                        star.as_ref() == Some(&class.certificate),
                        "n={n} k={k}"
                    );
                }
                assert_eq!(bundles, multisets(k, 3, n - 1), "n={n} k={k}");
            }
        }
    }
}
