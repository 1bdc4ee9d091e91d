//! Closed-form values and lower bounds, all in exact quarter units.
//!
//! The central quantity is the index of a bundle with cycle lengths
//! `l_1..l_k` and `m` edges in total:
//!
//! ```text
//! 4 f = 2m^2 - m + (m-1)^2 * sum(l_i)
//!       - sum_{l_i odd} (l_i - 1)(m - l_i)^2
//!       - sum_{l_i even} l_i (m - l_i)^2
//! ```
//!
//! Restricting to `t` triangles and `k - t` quadrangles gives
//! `4 g(t) = 2m^2 - m + 4k(6m - 15) + t((m - 9)^2 - 36)`, linear in `t`.
//! Its slope vanishes at `m = 3` and `m = 15`, where every admissible mix of
//! triangles and quadrangles attains the same value.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, BundleSpec};
use crate::graph::Graph;
use crate::indices::{QuarterInt, MAX_EDGES};

fn to_quarters(value: i128) -> Result<QuarterInt> {
    i64::try_from(value)
        .map(QuarterInt::from_quarters)
        .map_err(|_| Error::Overflow)
}

fn check_m(m: usize) -> Result<i128> {
    if m > MAX_EDGES {
        return Err(Error::TooManyEdges(m));
    }
    Ok(m as i128)
}

/// Index of the bundle with the given cycle lengths and `m` edges.
pub fn bundle_value(cycle_lengths: &[usize], m: usize) -> Result<QuarterInt> {
    let mm = check_m(m)?;
    if let Some(&bad) = cycle_lengths.iter().find(|&&l| l < 3) {
        return Err(Error::Infeasible(format!("cycle length {bad} is below 3")));
    }
    let total: usize = cycle_lengths.iter().sum();
    if total > m {
        return Err(Error::Infeasible(format!(
            "cycles need {total} edges, m = {m}"
        )));
    }
    let mut q = 2 * mm * mm - mm + (mm - 1).pow(2) * total as i128;
    for &len in cycle_lengths {
        let l = len as i128;
        let weight = if len % 2 == 1 { l - 1 } else { l };
        q -= weight * (mm - l).pow(2);
    }
    to_quarters(q)
}

/// Change of `g(t)` per extra triangle: `((m - 9)^2 - 36) / 4`.
pub fn mixed_bundle_slope(m: usize) -> QuarterInt {
    let mm = m as i64;
    QuarterInt::from_quarters((mm - 9).pow(2) - 36)
}

/// Triangle counts `t` for which `t` triangles and `k - t` quadrangles fit in `m` edges.
pub fn feasible_triangle_counts(k: usize, m: usize) -> std::ops::RangeInclusive<usize> {
    (4 * k).saturating_sub(m)..=k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MixedBundleValue {
    pub value: QuarterInt,
    /// `g(t + 1) - g(t)`.
    pub slope: QuarterInt,
}

/// `g(t)` for `t` triangles and `k - t` quadrangles in `m` edges.
pub fn mixed_bundle_value(t: usize, k: usize, m: usize) -> Result<MixedBundleValue> {
    let mm = check_m(m)?;
    if t > k || 3 * t + 4 * (k - t) > m {
        return Err(Error::Infeasible(format!(
            "{t} triangles and {} quadrangles do not fit in {m} edges",
            k.saturating_sub(t)
        )));
    }
    let (k, t) = (k as i128, t as i128);
    let q = 2 * mm * mm - mm + 4 * k * (6 * mm - 15) + t * ((mm - 9).pow(2) - 36);
    Ok(MixedBundleValue {
        value: to_quarters(q)?,
        slope: mixed_bundle_slope(m),
    })
}

/// Graph families that a bound predicts as its extremal graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `k` triangles at a hub.
    C0,
    /// `k` quadrangles at a hub.
    C1,
    /// `triangles` triangles and `quadrangles` quadrangles at a hub.
    MixedBundle {
        triangles: usize,
        quadrangles: usize,
    },
    /// `C1(n - 1, k)` with a length-two tail.
    GStar1,
}

impl Family {
    /// The member with `k` cycles and `m` edges.
    pub fn build(&self, m: usize, k: usize) -> Result<Graph> {
        let n = (m + 1).checked_sub(k).filter(|&n| n >= 1).ok_or_else(|| {
            Error::Infeasible(format!("m = {m} and k = {k} give no vertex count"))
        })?;
        match *self {
            Family::C0 => families::c0(n, k),
            Family::C1 => families::c1(n, k),
            Family::GStar1 => families::g_star_1(n, k),
            Family::MixedBundle {
                triangles,
                quadrangles,
            } => {
                if triangles + quadrangles != k {
                    return Err(Error::Infeasible("cycle counts do not add up to k".into()));
                }
                families::mixed_bundle(triangles, k, m)
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::C0 => "C0(n,k)".into(),
            Family::C1 => "C1(n,k)".into(),
            Family::GStar1 => "G*1".into(),
            Family::MixedBundle {
                triangles,
                quadrangles,
            } => {
                let lengths: Vec<String> = std::iter::repeat_n("3", triangles)
                    .chain(std::iter::repeat_n("4", quadrangles))
                    .map(String::from)
                    .collect();
                format!("G({})", lengths.join(","))
            }
        }
    }
}

/// Which case of a bound applies to `(m, k)`, with every domain flag exposed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCase {
    /// `3.2-i`, `3.2-ii`, `3.2-iii`, `4.4-big-m`, `4.4-small-m` or `4.4-n/a`.
    pub label: &'static str,
    pub m: usize,
    pub k: usize,
    pub m_ge_15: bool,
    pub m_ge_4k: bool,
    pub m_gt_15: bool,
    pub m_gt_4k: bool,
    pub m_ge_20: bool,
    pub applicable: bool,
}

impl BoundCase {
    fn new(label: &'static str, m: usize, k: usize, applicable: bool) -> Self {
        BoundCase {
            label,
            m,
            k,
            m_ge_15: m >= 15,
            m_ge_4k: m >= 4 * k,
            m_gt_15: m > 15,
            m_gt_4k: m > 4 * k,
            m_ge_20: m >= 20,
            applicable,
        }
    }
}

/// Lower bound on the index over all cacti with `m` edges and `k` cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimumBound {
    pub case: BoundCase,
    pub value: QuarterInt,
    pub extremal: Family,
    pub slope: QuarterInt,
    /// Slope zero with at least two admissible triangle counts: the
    /// bound is attained by several non-isomorphic bundles.
    pub tie: bool,
    /// Triangle counts attaining the bound.
    pub tied_triangle_counts: Vec<usize>,
    /// `m >= 3k`, i.e. the class is non-empty.
    pub feasible: bool,
}

pub fn minimum_bound(m: usize, k: usize) -> MinimumBound {
    let slope = mixed_bundle_slope(m);
    let feasible = m >= 3 * k;
    let (label, triangles) = if m >= 15 && m >= 4 * k {
        ("3.2-i", 0)
    } else if m >= 15 {
        ("3.2-ii", 4 * k - m)
    } else {
        ("3.2-iii", k)
    };
    let triangles = triangles.min(k);
    let extremal = match triangles {
        0 => Family::C1,
        t if t == k => Family::C0,
        t => Family::MixedBundle {
            triangles: t,
            quadrangles: k - t,
        },
    };
    let mm = m as i64;
    let (kk, tt) = (k as i64, triangles as i64);
    let value = QuarterInt::from_quarters(
        2 * mm * mm - mm + 4 * kk * (6 * mm - 15) + tt * ((mm - 9).pow(2) - 36),
    );
    let tied_triangle_counts: Vec<usize> = if feasible && slope == QuarterInt::ZERO {
        feasible_triangle_counts(k, m).collect()
    } else {
        vec![triangles]
    };
    MinimumBound {
        case: BoundCase::new(label, m, k, true),
        value,
        extremal,
        slope,
        tie: tied_triangle_counts.len() > 1,
        tied_triangle_counts,
        feasible,
    }
}

/// Lower bound over cacti other than `C1(n, k)`; defined for `m > 15`,
/// `m > 4k` and `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondMinimumBound {
    pub case: BoundCase,
    pub value: Option<QuarterInt>,
    pub runner_up: Option<Family>,
    /// `f(3,4,...,4) - (f(4,...,4) + m - 2)`.
    pub crossover: QuarterInt,
}

/// `(m^2 - 22m + 53) / 4`.
pub fn second_minimum_crossover(m: usize) -> QuarterInt {
    let mm = m as i64;
    QuarterInt::from_quarters(mm * mm - 22 * mm + 53)
}

pub fn second_minimum_bound(m: usize, k: usize) -> SecondMinimumBound {
    let crossover = second_minimum_crossover(m);
    let in_domain = m > 15 && m > 4 * k && k >= 1;
    if !in_domain {
        return SecondMinimumBound {
            case: BoundCase::new("4.4-n/a", m, k, false),
            value: None,
            runner_up: None,
            crossover,
        };
    }
    let mm = m as i64;
    let kk = k as i64;
    let cycle_part = 4 * kk * (6 * mm - 15);
    let (label, quarters, runner_up) = if m >= 20 {
        (
            "4.4-big-m",
            2 * mm * mm + 3 * mm + cycle_part - 8,
            Family::GStar1,
        )
    } else {
        (
            "4.4-small-m",
            3 * mm * mm - 19 * mm + cycle_part + 45,
            Family::MixedBundle {
                triangles: 1,
                quadrangles: k - 1,
            },
        )
    };
    SecondMinimumBound {
        case: BoundCase::new(label, m, k, true),
        value: Some(QuarterInt::from_quarters(quarters)),
        runner_up: Some(runner_up),
        crossover,
    }
}

/// Per-cycle bound on the sum of `(m_u - m_v)^2` over the cycle's edges:
/// `len (m - len)^2` for even `len`, `(len - 1)(m - len)^2` for odd `len`.
pub fn cycle_diff_bound(len: usize, m: usize) -> Result<i64> {
    if len < 3 {
        return Err(Error::Infeasible(format!("cycle length {len} is below 3")));
    }
    if len > m {
        return Err(Error::Infeasible(format!(
            "cycle length {len} exceeds m = {m}"
        )));
    }
    let weight = if len % 2 == 1 { len - 1 } else { len } as i64;
    Ok(weight * ((m - len) as i64).pow(2))
}

fn quadrangle_bundle_value(m: usize, k: usize) -> Result<QuarterInt> {
    bundle_value(&vec![4; k], m)
}

/// `f(4,...,4) + m - 2`: bound for cacti with a non-pendant cut edge.
pub fn bridge_tail_bound(m: usize, k: usize) -> Result<QuarterInt> {
    if m < 4 * k + 1 {
        return Err(Error::Infeasible(format!(
            "needs m >= 4k+1, got m={m}, k={k}"
        )));
    }
    Ok(quadrangle_bundle_value(m, k)? + QuarterInt::from_int(m as i64 - 2))
}

/// `f(4,...,4) + 2m - 10`: bound for cacti with a cycle that is not an end-block.
pub fn non_end_block_bound(m: usize, k: usize) -> Result<QuarterInt> {
    if m < 4 * k {
        return Err(Error::Infeasible(format!(
            "needs m >= 4k, got m={m}, k={k}"
        )));
    }
    Ok(quadrangle_bundle_value(m, k)? + QuarterInt::from_int(2 * m as i64 - 10))
}

/// `f(3,4,...,4)`: bound for cacti with an odd cycle.
pub fn odd_cycle_bound(m: usize, k: usize) -> Result<QuarterInt> {
    if k == 0 {
        return Err(Error::Infeasible("needs k >= 1".into()));
    }
    let mut lengths = vec![3];
    lengths.extend(std::iter::repeat_n(4, k - 1));
    bundle_value(&lengths, m)
}

/// `f(6,4,...,4)`: bound for cacti whose cycles are all even, not all quadrangles.
pub fn even_cycle_bound(m: usize, k: usize) -> Result<QuarterInt> {
    if k == 0 {
        return Err(Error::Infeasible("needs k >= 1".into()));
    }
    let mut lengths = vec![6];
    lengths.extend(std::iter::repeat_n(4, k - 1));
    bundle_value(&lengths, m)
}

/// Bundle spec with `t` triangles, `k - t` quadrangles and `m` edges.
pub fn mixed_bundle_spec(t: usize, k: usize, m: usize) -> Result<BundleSpec> {
    let mut lengths = vec![3; t];
    lengths.extend(std::iter::repeat_n(4, k.saturating_sub(t)));
    BundleSpec::with_edge_count(lengths, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(quarters: i64) -> QuarterInt {
        QuarterInt::from_quarters(quarters)
    }

    #[test]
    fn bundle_value_examples() {
        assert_eq!(bundle_value(&[3], 3).unwrap(), q(27));
        assert_eq!(bundle_value(&[4], 5).unwrap(), q(105));
        assert_eq!(bundle_value(&[3, 3], 6).unwrap(), QuarterInt::from_int(45));
        assert_eq!(bundle_value(&[], 4).unwrap(), q(2 * 16 - 4));
        assert!(bundle_value(&[3, 4], 6).is_err());
        assert!(bundle_value(&[2], 6).is_err());
    }

    #[test]
    fn mixed_bundle_examples() {
        assert_eq!(
            mixed_bundle_value(0, 1, 20).unwrap().value,
            QuarterInt::from_int(300)
        );
        assert_eq!(mixed_bundle_value(1, 1, 3).unwrap().value, q(27));
        assert_eq!(mixed_bundle_slope(15), QuarterInt::ZERO);
        assert_eq!(mixed_bundle_slope(3), QuarterInt::ZERO);
        assert!(mixed_bundle_value(0, 1, 3).is_err());
        assert!(mixed_bundle_value(2, 1, 10).is_err());
    }

    #[test]
    fn minimum_bound_examples() {
        let b = minimum_bound(4, 1);
        assert_eq!(b.case.label, "3.2-iii");
        assert_eq!(b.value, q(53));
        assert_eq!(b.extremal, Family::C0);

        let b = minimum_bound(16, 1);
        assert_eq!(b.case.label, "3.2-i");
        assert_eq!(b.value, QuarterInt::from_int(205));
        assert_eq!(b.extremal, Family::C1);

        let b = minimum_bound(15, 2);
        assert_eq!(b.case.label, "3.2-i");
        assert!(b.tie);
        assert_eq!(b.tied_triangle_counts, vec![0, 1, 2]);

        let b = minimum_bound(16, 5);
        assert_eq!(b.case.label, "3.2-ii");
        assert_eq!(
            b.extremal,
            Family::MixedBundle {
                triangles: 4,
                quadrangles: 1
            }
        );
        assert_eq!(b.value, mixed_bundle_value(4, 5, 16).unwrap().value);

        // K3: slope zero but only one admissible mix
        let b = minimum_bound(3, 1);
        assert!(!b.tie);
        assert!(!minimum_bound(5, 2).feasible);
    }

    #[test]
    fn second_minimum_examples() {
        let b = second_minimum_bound(20, 1);
        assert_eq!(b.case.label, "4.4-big-m");
        assert_eq!(b.value, Some(QuarterInt::from_int(318)));
        assert_eq!(b.runner_up, Some(Family::GStar1));

        let b = second_minimum_bound(16, 1);
        assert_eq!(b.case.label, "4.4-small-m");
        assert_eq!(b.value, Some(q(833)));
        assert_eq!(b.value.unwrap(), bundle_value(&[3], 16).unwrap());

        assert_eq!(second_minimum_crossover(19), QuarterInt::from_int(-1));
        assert_eq!(second_minimum_crossover(20), q(13));

        for (m, k) in [(15, 1), (16, 4), (20, 0), (8, 1)] {
            let b = second_minimum_bound(m, k);
            assert!(!b.case.applicable && b.value.is_none(), "m={m} k={k}");
        }
    }

    #[test]
    fn cycle_diff_bound_examples() {
        assert_eq!(cycle_diff_bound(4, 5).unwrap(), 4);
        assert_eq!(cycle_diff_bound(3, 4).unwrap(), 2);
        assert_eq!(cycle_diff_bound(3, 3).unwrap(), 0);
        assert!(cycle_diff_bound(6, 5).is_err());
    }

    #[test]
    fn lemma_bounds() {
        assert_eq!(bridge_tail_bound(20, 1).unwrap(), QuarterInt::from_int(318));
        assert_eq!(
            bridge_tail_bound(6, 1).unwrap(),
            bundle_value(&[4], 6).unwrap() + QuarterInt::from_int(4)
        );
        assert_eq!(
            bridge_tail_bound(9, 2).unwrap(),
            bundle_value(&[4, 4], 9).unwrap() + QuarterInt::from_int(7)
        );
        assert!(bridge_tail_bound(4, 1).is_err());
        assert_eq!(
            non_end_block_bound(20, 1).unwrap(),
            QuarterInt::from_int(330)
        );
        assert_eq!(
            non_end_block_bound(16, 2).unwrap(),
            bundle_value(&[4, 4], 16).unwrap() + QuarterInt::from_int(22)
        );
        assert!(non_end_block_bound(20, 1).unwrap() > second_minimum_bound(20, 1).value.unwrap());
    }

    #[test]
    fn family_labels_and_builds() {
        let fam = Family::MixedBundle {
            triangles: 1,
            quadrangles: 2,
        };
        assert_eq!(fam.label(), "G(3,4,4)");
        let g = fam.build(16, 3).unwrap();
        assert_eq!((g.n(), g.m()), (14, 16));
        assert_eq!(Family::GStar1.build(20, 1).unwrap().n(), 20);
    }
}
