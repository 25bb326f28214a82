//! Concrete geometry of `P(m, n)` and of the anti-blocking permutohedra:
//! vertex and facet descriptions, lattice-point counting, exhaustive hull
//! conversion and halfspace cuts.

pub mod antiblock;
pub mod count;
pub mod cut;
pub mod hull;

use serde::Serialize;

use crate::combinat::Subset;
use crate::error::{Error, Result};

pub use antiblock::{antiblocking_vertices_edges, verify_antiblocking_identity, AntiBlockSpec};
pub use count::{count_points, count_pp};
pub use cut::{cut, CutResult};
pub use hull::{h_to_v, h_to_v_rational, v_to_h};

/// Parameters of the partial permutohedron `P(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PPSpec {
    pub m: usize,
    pub n: usize,
}

impl PPSpec {
    pub fn new(m: usize, n: usize) -> Result<PPSpec> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "P(m, n) needs m >= 1 and n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(PPSpec { m, n })
    }
}

/// Inequality `<a, x> <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Inequality {
    pub a: Vec<i64>,
    pub b: i64,
}

impl Inequality {
    pub fn new(a: Vec<i64>, b: i64) -> Inequality {
        Inequality { a, b }
    }

    pub fn value(&self, x: &[i64]) -> i64 {
        self.a.iter().zip(x).map(|(p, q)| p * q).sum()
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        self.value(x) <= self.b
    }

    pub fn negated(&self) -> Inequality {
        Inequality {
            a: self.a.iter().map(|v| -v).collect(),
            b: -self.b,
        }
    }
}

/// Inequality description `{x : <a_i, x> <= b_i for all i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HRep {
    pub dim: usize,
    pub rows: Vec<Inequality>,
}

impl HRep {
    pub fn new(dim: usize, rows: Vec<Inequality>) -> Result<HRep> {
        if let Some(bad) = rows.iter().find(|r| r.a.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.a.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        let rows = rows
            .into_iter()
            .filter(|r| seen.insert(r.clone()))
            .collect();
        Ok(HRep { dim, rows })
    }

    /// The `t`-th dilate.
    pub fn dilate(&self, t: i64) -> HRep {
        HRep {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| Inequality::new(r.a.clone(), r.b * t))
                .collect(),
        }
    }

    /// The system with one more row appended.
    pub fn with_row(&self, row: Inequality) -> HRep {
        let mut rows = self.rows.clone();
        if !rows.contains(&row) {
            rows.push(row);
        }
        HRep {
            dim: self.dim,
            rows,
        }
    }

    pub fn sorted(mut self) -> HRep {
        self.rows.sort();
        self
    }
}

/// Vertex (or point) list in `Z^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VRep {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

impl VRep {
    /// Sorts lexicographically and removes duplicates.
    pub fn new(dim: usize, mut points: Vec<Vec<i64>>) -> Result<VRep> {
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        points.sort();
        points.dedup();
        Ok(VRep { dim, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinatewise bounding box, scaled by `t`.
    pub fn bounding_box(&self, t: i64) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|i| {
                let lo = self.points.iter().map(|p| p[i]).min().unwrap_or(0);
                let hi = self.points.iter().map(|p| p[i]).max().unwrap_or(0);
                (lo * t, hi * t)
            })
            .collect()
    }
}

/// Injective placements of `values[0..k]` into `m` positions, zeros elsewhere,
/// for every `k` from 0 to `values.len()`. Each placement is reported with the
/// position of every placed label.
pub(crate) fn labeled_placements(m: usize, values: &[i64]) -> Vec<(Vec<i64>, Vec<usize>)> {
    fn go(
        values: &[i64],
        current: &mut Vec<i64>,
        positions: &mut Vec<usize>,
        out: &mut Vec<(Vec<i64>, Vec<usize>)>,
    ) {
        out.push((current.clone(), positions.clone()));
        let label = positions.len();
        if label == values.len() {
            return;
        }
        for p in 0..current.len() {
            if positions.contains(&p) {
                continue;
            }
            current[p] = values[label];
            positions.push(p);
            go(values, current, positions, out);
            positions.pop();
            current[p] = 0;
        }
    }
    let mut out = Vec::new();
    let take = values.len().min(m);
    go(&values[..take], &mut vec![0; m], &mut Vec::new(), &mut out);
    out
}

/// Vertices of `P(m, n)`: the entries `n, n-1, ..., n-k+1` placed injectively,
/// zeros elsewhere, `0 <= k <= min(m, n)`; lexicographically sorted.
pub fn vertices(spec: PPSpec) -> VRep {
    let values: Vec<i64> = (0..spec.m.min(spec.n))
        .map(|i| (spec.n - i) as i64)
        .collect();
    let points = labeled_placements(spec.m, &values)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    VRep::new(spec.m, points).expect("placements have the right length")
}

/// `C(n+1, 2) - C(n+1-s, 2)`, the largest possible sum of `s` distinct values
/// from `{0, ..., n}`; the second binomial is zero once `n + 1 - s <= 1`.
pub fn subset_bound(n: usize, s: usize) -> i64 {
    let tri = |k: i64| if k <= 1 { 0 } else { k * (k - 1) / 2 };
    let n = n as i64;
    tri(n + 1) - tri(n + 1 - s as i64)
}

/// Facet description of `P(m, n)`: `-x_i <= 0` for every `i`, then
/// `sum_{i in S} x_i <= subset_bound(n, |S|)` for nonempty `S` with
/// `|S| <= n - 1` or `|S| = m`, in bitmask order of `S`.
pub fn facets(spec: PPSpec) -> HRep {
    let m = spec.m;
    let mut rows = Vec::new();
    for i in 0..m {
        let mut a = vec![0; m];
        a[i] = -1;
        rows.push(Inequality::new(a, 0));
    }
    for s in Subset::all(m).filter(|s| !s.is_empty()) {
        if s.len() < spec.n || s.len() == m {
            let a = (1..=m).map(|i| i64::from(s.contains(i))).collect();
            rows.push(Inequality::new(a, subset_bound(spec.n, s.len())));
        }
    }
    HRep { dim: m, rows }
}

/// Labels of the facets of `P(m, n)` in the order produced by [`facets`].
pub fn facet_markers(spec: PPSpec) -> Vec<crate::combinat::Marker> {
    use crate::combinat::Marker;
    let mut out: Vec<Marker> = (1..=spec.m).map(Marker::Elem).collect();
    out.extend(
        Subset::all(spec.m)
            .filter(|s| !s.is_empty() && (s.len() < spec.n || s.len() == spec.m))
            .map(Marker::Set),
    );
    out
}

pub fn contains_point(h: &HRep, x: &[i64]) -> Result<bool> {
    if x.len() != h.dim {
        return Err(Error::DimensionMismatch {
            expected: h.dim,
            got: x.len(),
        });
    }
    Ok(h.rows.iter().all(|r| r.holds(x)))
}

/// Number of facets of `P(m, n)` through each vertex, in vertex order.
pub fn tight_facet_counts(spec: PPSpec) -> Vec<usize> {
    let h = facets(spec);
    vertices(spec)
        .points
        .iter()
        .map(|v| h.rows.iter().filter(|r| r.value(v) == r.b).count())
        .collect()
}

/// Every vertex lies on exactly `m` facets.
pub fn is_simple(spec: PPSpec) -> bool {
    tight_facet_counts(spec).iter().all(|&k| k == spec.m)
}

/// `sum_{k} m! / (m-k)!` for `k = 0..min(m, n)`.
pub fn vertex_count_formula(m: usize, n: usize) -> u64 {
    let mut total = 0u64;
    let mut falling = 1u64;
    for k in 0..=m.min(n) {
        total += falling;
        falling *= (m - k) as u64;
    }
    total
}

/// `m + sum_{k = max(1, m-n+1)}^{m} C(m, k)`.
pub fn facet_count_formula(m: usize, n: usize) -> u64 {
    let lo = 1.max((m + 1).saturating_sub(n));
    let mut total = m as u64;
    for k in lo..=m {
        total += crate::exactmath::binomial_u(m as u64, k as u64)
            .try_into()
            .unwrap_or(u64::MAX);
    }
    total
}
