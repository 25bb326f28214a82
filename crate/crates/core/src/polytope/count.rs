use num_integer::Integer;

use super::{facets, HRep, PPSpec};

/// Row data laid out for the scan: `coef[r * dim + k]` and, for each row and
/// depth, the smallest value the not-yet-fixed coordinates can contribute.
struct Scan {
    dim: usize,
    rows: usize,
    coef: Vec<i64>,
    rhs: Vec<i64>,
    tail_min: Vec<i64>,
    bounds: Vec<(i64, i64)>,
}

impl Scan {
    fn new(h: &HRep, bounds: &[(i64, i64)]) -> Scan {
        let dim = h.dim;
        let rows = h.rows.len();
        let mut coef = Vec::with_capacity(rows * dim);
        for r in &h.rows {
            coef.extend_from_slice(&r.a);
        }
        let rhs = h.rows.iter().map(|r| r.b).collect();
        // tail_min[r * (dim + 1) + k] = sum_{j >= k} min(a_j lo_j, a_j hi_j)
        let mut tail_min = vec![0i64; rows * (dim + 1)];
        for r in 0..rows {
            for k in (0..dim).rev() {
                let a = coef[r * dim + k];
                let (lo, hi) = bounds[k];
                tail_min[r * (dim + 1) + k] =
                    tail_min[r * (dim + 1) + k + 1] + (a * lo).min(a * hi);
            }
        }
        Scan {
            dim,
            rows,
            coef,
            rhs,
            tail_min,
            bounds: bounds.to_vec(),
        }
    }

    /// Feasible range for coordinate `k` given the partial sums of the fixed
    /// prefix, relaxing the later coordinates to their box. Exact at the last
    /// coordinate.
    fn range(&self, k: usize, partial: &[i64]) -> Option<(i64, i64)> {
        let (mut lo, mut hi) = self.bounds[k];
        for (r, p) in partial.iter().enumerate().take(self.rows) {
            let a = self.coef[r * self.dim + k];
            let slack = self.rhs[r] - p - self.tail_min[r * (self.dim + 1) + k + 1];
            if a == 0 {
                if slack < 0 {
                    return None;
                }
            } else if a > 0 {
                hi = hi.min(Integer::div_floor(&slack, &a));
            } else {
                lo = lo.max(Integer::div_ceil(&slack, &a));
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo, hi))
    }

    fn count_from(&self, k: usize, partial: &mut [i64]) -> u64 {
        let Some((lo, hi)) = self.range(k, partial) else {
            return 0;
        };
        if k + 1 == self.dim {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        for x in lo..=hi {
            for (r, p) in partial.iter_mut().enumerate() {
                *p += self.coef[r * self.dim + k] * x;
            }
            total += self.count_from(k + 1, partial);
            for (r, p) in partial.iter_mut().enumerate() {
                *p -= self.coef[r * self.dim + k] * x;
            }
        }
        total
    }
}

/// Number of integer points of the polyhedron `h` inside the box `bounds`.
///
/// Coordinates are fixed one at a time; every row bounds the current
/// coordinate using the running partial sum and the box of the remaining
/// coordinates, and the last coordinate is counted as an interval. With
/// `workers > 1` the values of the first coordinate are dealt round-robin to
/// scoped threads; the total does not depend on the worker count.
pub fn count_points(h: &HRep, bounds: &[(i64, i64)], workers: usize) -> u64 {
    if h.dim == 0 {
        return u64::from(h.rows.iter().all(|r| r.b >= 0));
    }
    assert_eq!(bounds.len(), h.dim, "one box interval per coordinate");
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return 0;
    }
    let scan = Scan::new(h, bounds);
    let zeros = vec![0i64; scan.rows];
    let workers = workers.max(1);
    let Some((lo, hi)) = scan.range(0, &zeros) else {
        return 0;
    };
    if workers == 1 || scan.dim == 1 {
        return scan.count_from(0, &mut zeros.clone());
    }
    let values: Vec<i64> = (lo..=hi).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let scan = &scan;
                let values = &values;
                s.spawn(move || {
                    let mut partial = vec![0i64; scan.rows];
                    let mut total = 0u64;
                    for &x in values.iter().skip(w).step_by(workers) {
                        for (r, p) in partial.iter_mut().enumerate() {
                            *p = scan.coef[r * scan.dim] * x;
                        }
                        total += scan.count_from(1, &mut partial);
                    }
                    total
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .sum()
    })
}

/// `|t P(m, n) ∩ Z^m|`, with the convention that `t = 0` gives 1.
pub fn count_pp(spec: PPSpec, t: u64, workers: usize) -> u64 {
    if t == 0 {
        return 1;
    }
    let t = t as i64;
    let h = facets(spec).dilate(t);
    let bounds = vec![(0, t * spec.n as i64); spec.m];
    count_points(&h, &bounds, workers)
}
