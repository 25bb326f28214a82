use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{labeled_placements, vertices, PPSpec, VRep};
use crate::error::{Error, Result};

/// Weakly decreasing nonnegative vector `z` defining the anti-blocking
/// permutohedron `{x : 0 <= x <= y for some y in Π(z)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiBlockSpec {
    pub z: Vec<i64>,
}

impl AntiBlockSpec {
    pub fn new(z: Vec<i64>) -> Result<AntiBlockSpec> {
        if z.is_empty() || z.iter().any(|&v| v < 0) || z.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "z must be nonempty, nonnegative and weakly decreasing, got {z:?}"
            )));
        }
        Ok(AntiBlockSpec { z })
    }

    /// The vector `z` with `z_i = max(n + 1 - i, 0)`, i.e. `(n, ..., n-m+1)`
    /// when `n >= m - 1` and `(n, ..., 1, 0, ..., 0)` otherwise.
    pub fn for_partial_permutohedron(spec: PPSpec) -> AntiBlockSpec {
        let z = (1..=spec.m)
            .map(|i| (spec.n as i64 + 1 - i as i64).max(0))
            .collect();
        AntiBlockSpec { z }
    }
}

/// Vertices and edges of the anti-blocking permutohedron.
///
/// Vertices are all injective placements of `z_1, ..., z_k` with zeros
/// elsewhere, deduplicated. Two vertices span an edge when one arises from
/// the other by zeroing its smallest nonzero entry, or when they differ by
/// swapping the positions of the labels `z_i` and `z_{i+1}` of one labeled
/// placement. Edges are index pairs `(i, j)`, `i < j`, into the sorted
/// vertex list.
pub fn antiblocking_vertices_edges(spec: &AntiBlockSpec) -> (VRep, Vec<(usize, usize)>) {
    let m = spec.z.len();
    let placements = labeled_placements(m, &spec.z);
    let verts = VRep::new(m, placements.iter().map(|(v, _)| v.clone()).collect())
        .expect("placements have the right length");
    let index: HashMap<&Vec<i64>, usize> = verts
        .points
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut edges = BTreeSet::new();
    let mut add = |a: &Vec<i64>, b: &Vec<i64>| {
        if a != b {
            let (i, j) = (index[a], index[b]);
            edges.insert((i.min(j), i.max(j)));
        }
    };
    for v in &verts.points {
        if let Some(&smallest) = v.iter().filter(|&&x| x != 0).min() {
            for p in 0..m {
                if v[p] == smallest {
                    let mut w = v.clone();
                    w[p] = 0;
                    add(v, &w);
                }
            }
        }
    }
    for (v, positions) in &placements {
        for i in 0..positions.len().saturating_sub(1) {
            let mut w = v.clone();
            w.swap(positions[i], positions[i + 1]);
            add(v, &w);
        }
    }
    (verts, edges.into_iter().collect())
}

/// Whether the vertices of `P(m, n)` coincide with those of the matching
/// anti-blocking permutohedron.
pub fn verify_antiblocking_identity(spec: PPSpec) -> bool {
    let z = AntiBlockSpec::for_partial_permutohedron(spec);
    antiblocking_vertices_edges(&z).0 == vertices(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{facets, hull::v_to_h};

    /// Edges from geometry: two vertices span an edge iff the facets
    /// containing both cut out a face whose only vertices are these two.
    fn geometric_edges(verts: &VRep) -> BTreeSet<(usize, usize)> {
        let h = v_to_h(verts).unwrap();
        let tight: Vec<Vec<usize>> = verts
            .points
            .iter()
            .map(|v| {
                (0..h.rows.len())
                    .filter(|&r| h.rows[r].value(v) == h.rows[r].b)
                    .collect()
            })
            .collect();
        let mut out = BTreeSet::new();
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let common: Vec<usize> = tight[i]
                    .iter()
                    .filter(|r| tight[j].contains(r))
                    .copied()
                    .collect();
                let others = (0..verts.len())
                    .filter(|&k| k != i && k != j)
                    .any(|k| common.iter().all(|r| tight[k].contains(r)));
                let rank = {
                    let rows: Vec<Vec<crate::exactmath::Rational>> = common
                        .iter()
                        .map(|&r| {
                            h.rows[r]
                                .a
                                .iter()
                                .map(|&x| crate::exactmath::rat(x))
                                .collect()
                        })
                        .collect();
                    crate::exactmath::linalg::rank(&rows)
                };
                if !others && rank == verts.dim - 1 {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn pentagon_and_segment() {
        for n in 2..=5 {
            let (v, e) = antiblocking_vertices_edges(&AntiBlockSpec::new(vec![n, n - 1]).unwrap());
            assert_eq!((v.len(), e.len()), (5, 5));
        }
        let (v, e) = antiblocking_vertices_edges(&AntiBlockSpec::new(vec![3]).unwrap());
        assert_eq!((v.len(), e.len()), (2, 1));
    }

    #[test]
    fn tied_entries_give_six_neighbours() {
        let (v, e) = antiblocking_vertices_edges(&AntiBlockSpec::new(vec![1, 1, 0, 0]).unwrap());
        let target = v
            .points
            .iter()
            .position(|p| p == &vec![1, 1, 0, 0])
            .unwrap();
        let degree = e
            .iter()
            .filter(|(a, b)| *a == target || *b == target)
            .count();
        assert_eq!(degree, 6);
    }

    #[test]
    fn edge_rules_match_geometry() {
        for z in [
            vec![2, 1],
            vec![3, 2, 1],
            vec![2, 1, 0],
            vec![1, 0, 0],
            vec![2, 2, 1],
            vec![1, 1, 0, 0],
            vec![3, 2, 1, 0],
        ] {
            let (v, e) = antiblocking_vertices_edges(&AntiBlockSpec::new(z.clone()).unwrap());
            let rules: BTreeSet<(usize, usize)> = e.into_iter().collect();
            assert_eq!(rules, geometric_edges(&v), "z={z:?}");
        }
    }

    #[test]
    fn identity_with_partial_permutohedra() {
        for m in 1..=5 {
            for n in 1..=5 {
                assert!(
                    verify_antiblocking_identity(PPSpec::new(m, n).unwrap()),
                    "m={m} n={n}"
                );
            }
        }
        assert_eq!(
            AntiBlockSpec::for_partial_permutohedron(PPSpec::new(4, 2).unwrap()).z,
            vec![2, 1, 0, 0]
        );
        assert_eq!(
            AntiBlockSpec::for_partial_permutohedron(PPSpec::new(2, 2).unwrap()).z,
            vec![2, 1]
        );
        let _ = facets(PPSpec::new(2, 2).unwrap());
    }

    #[test]
    fn rejects_increasing_z() {
        assert!(AntiBlockSpec::new(vec![1, 2]).is_err());
        assert!(AntiBlockSpec::new(vec![-1]).is_err());
    }
}
