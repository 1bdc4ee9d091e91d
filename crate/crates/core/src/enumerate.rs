//! Exhaustive generation of cacti with `n` vertices and `k` cycles.
//!
//! Two generators:
//!
//! * a labeled search over edge subsets of `K_n` that streams every labeled
//!   cactus, pruned by cycle overlap, edge budget and closed components;
//! * an unlabeled generator that grows classes by leaf blocks. Every cactus
//!   on two or more vertices has a leaf block (a pendant edge or a cycle with
//!   one attachment vertex), so each class of `C(n, k)` arises from a class of
//!   `C(n - 1, k)` plus a pendant or from a class of `C(n - l + 1, k - 1)`
//!   plus an `l`-cycle.
//!
//! Classes are keyed and ordered by certificate and represented by the
//! canonically labeled graph, so the output is the same for either generator
//! and any worker count.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    minimum_bound, second_minimum_bound, Family, MinimumBound, SecondMinimumBound,
};
use crate::canon::{certificate, Certificate};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::indices::{edge_revised_szeged, QuarterInt};
use crate::io::emit_graph6;

pub const DEFAULT_MAX_N: usize = 10;
/// Overrides of the cap may not go past this.
pub const HARD_MAX_N: usize = 12;

/// One isomorphism class with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusClass {
    pub certificate: Certificate,
    pub graph: Graph,
}

impl CactusClass {
    fn from_certificate(certificate: Certificate) -> Self {
        let graph = certificate.to_graph();
        CactusClass { certificate, graph }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    max_n: usize,
    exec: Exec,
}

impl Enumerator {
    pub fn new(exec: Exec) -> Self {
        Enumerator {
            max_n: DEFAULT_MAX_N,
            exec,
        }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Result<Self> {
        if max_n > HARD_MAX_N {
            return Err(Error::CapExceeded {
                n: max_n,
                cap: HARD_MAX_N,
            });
        }
        self.max_n = max_n;
        Ok(self)
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    /// Errors on a cap violation; `Ok(false)` for an empty class.
    fn admit(&self, n: usize, k: usize) -> Result<bool> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > self.max_n {
            return Err(Error::CapExceeded { n, cap: self.max_n });
        }
        Ok(n > 2 * k)
    }

    /// All isomorphism classes of `C(n, k)`, ordered by certificate.
    pub fn classes(&self, n: usize, k: usize) -> Result<Vec<CactusClass>> {
        if !self.admit(n, k)? {
            return Ok(Vec::new());
        }
        let exec = self.exec;
        Ok(exec.install(|| {
            let mut memo = HashMap::new();
            let certs = grow_classes(n, k, exec, &mut memo);
            certs
                .iter()
                .cloned()
                .map(CactusClass::from_certificate)
                .collect()
        }))
    }

    pub fn count(&self, n: usize, k: usize) -> Result<usize> {
        self.classes(n, k).map(|c| c.len())
    }

    /// Streams every labeled cactus in a fixed order.
    pub fn for_each_labeled(
        &self,
        n: usize,
        k: usize,
        mut visit: impl FnMut(&Graph),
    ) -> Result<()> {
        if !self.admit(n, k)? {
            return Ok(());
        }
        let mut search = LabeledSearch::new(n, k);
        search.run(0, &mut |g| visit(g));
        Ok(())
    }

    /// Every labeled cactus, collected shard by shard in stream order.
    pub fn labeled(&self, n: usize, k: usize) -> Result<Vec<Graph>> {
        if !self.admit(n, k)? {
            return Ok(Vec::new());
        }
        let exec = self.exec;
        let shards = labeled_shards(n, k);
        let parts = exec.install(|| {
            exec.map(&shards, |prefix| {
                let mut out = Vec::new();
                LabeledSearch::from_prefix(n, k, prefix).run(n - 1, &mut |g| out.push(g.clone()));
                out
            })
        });
        Ok(parts.into_iter().flatten().collect())
    }

    /// Classes obtained from the labeled search by certificate dedup.
    pub fn classes_from_labeled(&self, n: usize, k: usize) -> Result<Vec<CactusClass>> {
        if !self.admit(n, k)? {
            return Ok(Vec::new());
        }
        let exec = self.exec;
        let shards = labeled_shards(n, k);
        let parts = exec.install(|| {
            exec.map(&shards, |prefix| {
                let mut seen = BTreeSet::new();
                LabeledSearch::from_prefix(n, k, prefix).run(n - 1, &mut |g| {
                    seen.insert(certificate(g).expect("n within certificate cap"));
                });
                seen
            })
        });
        let mut merged = BTreeSet::new();
        for part in parts {
            merged.extend(part);
        }
        Ok(merged
            .into_iter()
            .map(CactusClass::from_certificate)
            .collect())
    }

    /// Minimum and second minimum index over the classes of `C(n, k)`.
    pub fn search_extremal(&self, n: usize, k: usize) -> Result<ExtremalReport> {
        let classes = self.classes(n, k)?;
        if classes.is_empty() {
            return Err(Error::EmptyClass { n, k });
        }
        let exec = self.exec;
        let values = exec.install(|| {
            exec.map(&classes, |c| {
                edge_revised_szeged(&c.graph).expect("cacti are connected")
            })
        });
        ExtremalReport::build(n, k, &classes, &values)
    }
}

type ClassMemo = HashMap<(usize, usize), Vec<Certificate>>;

fn grow_classes(n: usize, k: usize, exec: Exec, memo: &mut ClassMemo) -> &[Certificate] {
    if !memo.contains_key(&(n, k)) {
        let certs = if n <= 2 * k {
            Vec::new()
        } else if n == 1 {
            vec![certificate(&Graph::singleton()).expect("singleton")]
        } else {
            // (parent certificate, cycle length or 0 for a pendant)
            let mut parents: Vec<(Certificate, usize)> = Vec::new();
            parents.extend(
                grow_classes(n - 1, k, exec, memo)
                    .iter()
                    .map(|c| (c.clone(), 0)),
            );
            if k > 0 {
                for len in 3..=n {
                    let smaller = grow_classes(n - len + 1, k - 1, exec, memo);
                    parents.extend(smaller.iter().map(|c| (c.clone(), len)));
                }
            }
            let parts = exec.map(&parents, |(cert, len)| {
                let parent = cert.to_graph();
                let mut local = BTreeSet::new();
                for anchor in 0..parent.n() {
                    let child = match len {
                        0 => parent.with_pendant_at(anchor),
                        &len => parent.with_cycle_at(anchor, len),
                    };
                    local.insert(certificate(&child).expect("n within certificate cap"));
                }
                local
            });
            let mut merged = BTreeSet::new();
            for part in parts {
                merged.extend(part);
            }
            merged.into_iter().collect()
        };
        memo.insert((n, k), certs);
    }
    &memo[&(n, k)]
}

/// Include/exclude decisions for vertex 0's edges, in stream order.
fn labeled_shards(n: usize, k: usize) -> Vec<Vec<bool>> {
    let m = n + k - 1;
    let mut shards = Vec::new();
    let mut prefix = Vec::with_capacity(n.saturating_sub(1));
    fn walk(left: usize, m: usize, prefix: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        let used = prefix.iter().filter(|&&b| b).count();
        if used < m {
            prefix.push(true);
            walk(left - 1, m, prefix, out);
            prefix.pop();
        }
        prefix.push(false);
        walk(left - 1, m, prefix, out);
        prefix.pop();
    }
    walk(n - 1, m, &mut prefix, &mut shards);
    // vertex 0 needs a neighbor unless it is alone
    shards.retain(|s| n == 1 || s.iter().any(|&b| b));
    shards
}

/// Depth-first search over the edges of `K_n` in lexicographic order.
struct LabeledSearch {
    n: usize,
    m: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
    chosen: Vec<(usize, usize)>,
    adj: Vec<u32>,
    /// Chosen edges that are not on a cycle yet.
    bridge_adj: Vec<u32>,
    cycles: usize,
    /// `block_start[v]` is the index of the first pair `(v, _)`.
    block_start: Vec<usize>,
}

impl LabeledSearch {
    fn new(n: usize, k: usize) -> Self {
        let mut pairs = Vec::new();
        let mut block_start = Vec::with_capacity(n);
        for u in 0..n {
            block_start.push(pairs.len());
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        LabeledSearch {
            n,
            m: n + k - 1,
            k,
            pairs,
            chosen: Vec::new(),
            adj: vec![0; n],
            bridge_adj: vec![0; n],
            cycles: 0,
            block_start,
        }
    }

    fn from_prefix(n: usize, k: usize, prefix: &[bool]) -> Self {
        let mut s = LabeledSearch::new(n, k);
        for (idx, &take) in prefix.iter().enumerate() {
            if take {
                s.include(idx).expect("star edges never close a cycle");
            }
        }
        s
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn reach(adj: &[u32], from: usize) -> u32 {
        let mut seen = 1u32 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Path from `u` to `v` over bridge edges, as parent links.
    fn bridge_path(&self, u: usize, v: usize) -> Option<Vec<(usize, usize)>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[u] = u;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            let mut nb = self.bridge_adj[x];
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[v] == usize::MAX {
            return None;
        }
        let mut path = Vec::new();
        let mut x = v;
        while x != u {
            path.push((parent[x], x));
            x = parent[x];
        }
        Some(path)
    }

    /// Adds pair `idx` if the result is still a cactus forest; returns the
    /// bridge edges that became cycle edges.
    fn include(&mut self, idx: usize) -> Option<Vec<(usize, usize)>> {
        let (u, v) = self.pairs[idx];
        let absorbed = if let Some(path) = self.bridge_path(u, v) {
            if self.cycles == self.k {
                return None;
            }
            for &(a, b) in &path {
                self.bridge_adj[a] &= !(1 << b);
                self.bridge_adj[b] &= !(1 << a);
            }
            self.cycles += 1;
            path
        } else if Self::reach(&self.adj, u) & (1 << v) != 0 {
            return None;
        } else {
            self.bridge_adj[u] |= 1 << v;
            self.bridge_adj[v] |= 1 << u;
            Vec::new()
        };
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.chosen.push((u, v));
        Some(absorbed)
    }

    fn exclude_last(&mut self, absorbed: Vec<(usize, usize)>) {
        let (u, v) = self.chosen.pop().expect("an included edge");
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        if absorbed.is_empty() {
            self.bridge_adj[u] &= !(1 << v);
            self.bridge_adj[v] &= !(1 << u);
        } else {
            for (a, b) in absorbed {
                self.bridge_adj[a] |= 1 << b;
                self.bridge_adj[b] |= 1 << a;
            }
            self.cycles -= 1;
        }
    }

    /// `false` when some component can no longer grow or the remaining
    /// budget cannot join the components.
    fn viable(&self, idx: usize) -> bool {
        let full = self.full_mask();
        let decided: u32 = match self.pairs.get(idx) {
            Some(&(first, _)) => (1u32 << first) - 1,
            None => full,
        };
        let budget = self.m - self.chosen.len();
        let mut unseen = full;
        let mut components = 0;
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp = Self::reach(&self.adj, v);
            unseen &= !comp;
            components += 1;
            if comp != full && comp & !decided == 0 {
                return false;
            }
        }
        components - 1 <= budget
    }

    fn run(&mut self, idx: usize, emit: &mut dyn FnMut(&Graph)) {
        if self.chosen.len() == self.m {
            if Self::reach(&self.adj, 0) == self.full_mask() {
                let g =
                    Graph::from_edges(self.n, &self.chosen).expect("search keeps graphs simple");
                emit(&g);
            }
            return;
        }
        if self.pairs.len() - idx < self.m - self.chosen.len() {
            return;
        }
        // pruning only changes when a vertex block completes
        let at_block_boundary = self.block_start.contains(&idx);
        if at_block_boundary && !self.viable(idx) {
            return;
        }
        if let Some(absorbed) = self.include(idx) {
            self.run(idx + 1, emit);
            self.exclude_last(absorbed);
        }
        self.run(idx + 1, emit);
    }
}

/// A class witness that can be rechecked from its graph6 string alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub certificate: String,
}

impl Witness {
    pub fn of(g: &Graph) -> Self {
        let cert = certificate(g).map(|c| c.to_hex()).unwrap_or_default();
        Witness {
            graph6: emit_graph6(g).unwrap_or_default(),
            certificate: cert,
        }
    }

    fn of_class(class: &CactusClass) -> Self {
        Witness {
            graph6: emit_graph6(&class.graph).expect("small graph"),
            certificate: class.certificate.to_hex(),
        }
    }
}

/// How an exhaustive search compares with the minimum bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimumAgreement {
    pub bound: MinimumBound,
    pub value_matches: bool,
    /// The set of minimizing classes equals the predicted set.
    pub extremal_matches: bool,
    pub predicted: Vec<Witness>,
}

/// How an exhaustive search compares with the second-minimum bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondMinimumAgreement {
    pub bound: SecondMinimumBound,
    /// Minimum over all classes except `C1(n, k)`; only when applicable.
    pub min_excluding_c1: Option<QuarterInt>,
    pub value_matches: Option<bool>,
    pub extremal_matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub class_count: usize,
    pub min: QuarterInt,
    pub min_witnesses: Vec<Witness>,
    /// Smallest value strictly above `min`.
    pub second_min: Option<QuarterInt>,
    pub second_witnesses: Vec<Witness>,
    /// `min` is attained by more than one class.
    pub tie: bool,
    /// Minimum after removing a single minimizing class: equals `min` on a
    /// tie, `second_min` otherwise.
    pub second_min_excluding_one_class: Option<QuarterInt>,
    pub minimum_bound: MinimumAgreement,
    pub second_minimum_bound: SecondMinimumAgreement,
}

impl ExtremalReport {
    fn build(n: usize, k: usize, classes: &[CactusClass], values: &[QuarterInt]) -> Result<Self> {
        let m = n + k - 1;
        let min = *values.iter().min().ok_or(Error::EmptyClass { n, k })?;
        let second_min = values.iter().copied().filter(|&v| v > min).min();
        let witnesses = |target: Option<QuarterInt>| -> Vec<Witness> {
            classes
                .iter()
                .zip(values)
                .filter(|&(_, &v)| Some(v) == target)
                .map(|(c, _)| Witness::of_class(c))
                .collect()
        };
        let min_witnesses = witnesses(Some(min));
        let tie = min_witnesses.len() > 1;

        let bound = minimum_bound(m, k);
        let predicted: Vec<Witness> = if bound.tie {
            bound
                .tied_triangle_counts
                .iter()
                .filter_map(|&t| {
                    let fam = match t {
                        0 => Family::C1,
                        t if t == k => Family::C0,
                        t => Family::MixedBundle {
                            triangles: t,
                            quadrangles: k - t,
                        },
                    };
                    fam.build(m, k).ok()
                })
                .map(|g| Witness::of(&g))
                .collect()
        } else {
            bound
                .extremal
                .build(m, k)
                .map(|g| vec![Witness::of(&g)])
                .unwrap_or_default()
        };
        let mut predicted_certs: Vec<&str> =
            predicted.iter().map(|w| w.certificate.as_str()).collect();
        predicted_certs.sort_unstable();
        predicted_certs.dedup();
        let mut found: Vec<&str> = min_witnesses
            .iter()
            .map(|w| w.certificate.as_str())
            .collect();
        found.sort_unstable();
        let minimum = MinimumAgreement {
            value_matches: bound.value == min,
            extremal_matches: found == predicted_certs,
            bound,
            predicted,
        };

        let second_bound = second_minimum_bound(m, k);
        let second = if second_bound.case.applicable {
            let c1 = Family::C1
                .build(m, k)
                .ok()
                .and_then(|g| certificate(&g).ok());
            let rest: Vec<(usize, QuarterInt)> = classes
                .iter()
                .zip(values)
                .enumerate()
                .filter(|(_, (c, _))| Some(&c.certificate) != c1.as_ref())
                .map(|(i, (_, &v))| (i, v))
                .collect();
            let low = rest.iter().map(|&(_, v)| v).min();
            let runner = second_bound
                .runner_up
                .and_then(|f| f.build(m, k).ok())
                .and_then(|g| certificate(&g).ok());
            let argmin: Vec<&Certificate> = rest
                .iter()
                .filter(|&&(_, v)| Some(v) == low)
                .map(|&(i, _)| &classes[i].certificate)
                .collect();
            SecondMinimumAgreement {
                min_excluding_c1: low,
                value_matches: Some(low == second_bound.value),
                extremal_matches: Some(runner.is_some_and(|r| argmin == vec![&r])),
                bound: second_bound,
            }
        } else {
            SecondMinimumAgreement {
                bound: second_bound,
                min_excluding_c1: None,
                value_matches: None,
                extremal_matches: None,
            }
        };

        Ok(ExtremalReport {
            n,
            k,
            m,
            class_count: classes.len(),
            min,
            min_witnesses,
            second_min,
            second_witnesses: witnesses(second_min),
            tie,
            second_min_excluding_one_class: if tie { Some(min) } else { second_min },
            minimum_bound: minimum,
            second_minimum_bound: second,
        })
    }
}

/// Knobs for [`random_cactus_shaped`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplerShape {
    /// Probability that a block attaches at vertex 0 instead of a uniform vertex.
    pub hub_bias: f64,
    /// Probability that a cycle length is drawn from `3..=6` when that fits.
    pub short_cycle_bias: f64,
}

impl SamplerShape {
    pub const UNIFORM: SamplerShape = SamplerShape {
        hub_bias: 0.0,
        short_cycle_bias: 0.0,
    };
}

/// Random cactus by random block attachment, reproducible for a seed.
pub fn random_cactus(n: usize, k: usize, seed: u64) -> Result<Graph> {
    random_cactus_shaped(
        n,
        k,
        SamplerShape::UNIFORM,
        &mut ChaCha8Rng::seed_from_u64(seed),
    )
}

/// Draws `k` cycle lengths whose extra vertices fit in `n - 1`, then attaches
/// the cycles and the remaining tree edges in random order, each at an
/// existing vertex.
pub fn random_cactus_shaped<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    shape: SamplerShape,
    rng: &mut R,
) -> Result<Graph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n < 2 * k + 1 {
        return Err(Error::Infeasible(format!(
            "a cactus with {k} cycles needs n >= 2k+1, got n={n}"
        )));
    }
    let mut budget = n - 1;
    // each block adds `extra` new vertices: l - 1 for a cycle, 1 for an edge
    let mut blocks: Vec<usize> = Vec::with_capacity(n);
    for left in (0..k).rev() {
        let most = budget - 2 * left;
        let short = rng.gen_bool(shape.short_cycle_bias);
        let extra = rng.gen_range(2..=if short { most.min(5) } else { most });
        blocks.push(extra + 1);
        budget -= extra;
    }
    blocks.extend(std::iter::repeat_n(2, budget));
    blocks.shuffle(rng);

    let mut pairs = Vec::with_capacity(n + k - 1);
    let mut size = 1;
    for len in blocks {
        let anchor = if rng.gen_bool(shape.hub_bias) {
            0
        } else {
            rng.gen_range(0..size)
        };
        if len == 2 {
            pairs.push((anchor, size));
            size += 1;
        } else {
            let mut prev = anchor;
            for v in size..size + len - 1 {
                pairs.push((prev, v));
                prev = v;
            }
            pairs.push((prev, anchor));
            size += len - 1;
        }
    }
    debug_assert_eq!(size, n);
    Graph::from_edges(n, &pairs)
}
