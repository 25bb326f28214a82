//! The dictionary between chains and faces of `P(m, n)`: hyperplane systems,
//! vertex sets, f-vectors and the h-polynomial by several routes.

use serde::Serialize;

use crate::combinat::perm::{descents, inverse, next_permutation};
use crate::combinat::{enumerate_chains, missing_ranks, r_set, Chain, Subset};
use crate::error::{Error, Result};
use crate::exactmath::{binomial_u, eulerian, Polynomial, Rational};
use crate::polytope::{labeled_placements, subset_bound, vertices, PPSpec, VRep};

/// Equation `<a, x> = b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hyperplane {
    pub a: Vec<i64>,
    pub b: i64,
}

impl Hyperplane {
    fn indicator(m: usize, s: Subset, b: i64) -> Hyperplane {
        Hyperplane {
            a: (1..=m).map(|i| i64::from(s.contains(i))).collect(),
            b,
        }
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        self.a.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() == self.b
    }
}

/// Face of `P(m, n)` attached to a chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub chain: Chain,
    /// The case-by-case hyperplane list.
    pub hyperplanes: Vec<Hyperplane>,
    /// The compact list `sum_{[m] \ A_j} x = C(n+1,2) - C(n+1-|A_l \ A_j|, 2)`,
    /// one equation per subset of the chain.
    pub compact: Vec<Hyperplane>,
    pub dimension: usize,
}

fn check_admissible(c: &Chain, m: usize, n: usize) -> Result<()> {
    if c.is_admissible(m, n) {
        Ok(())
    } else {
        Err(Error::ChainNotAdmissible {
            chain: c.to_string(),
            m,
            n,
        })
    }
}

/// Hyperplanes of the face of an admissible chain: `x_i = 0` for `i` outside
/// `A_l`; `sum_{A_l \ A_j} x = subset_bound(n, |A_l \ A_j|)` for
/// `j = 2, ..., l-1`, and for `j = 1` unless `A_1 = ∅` and `|A_l| >= n`, in
/// which case the face lies on `sum x = C(n+1, 2)` instead.
pub fn face_from_chain(c: &Chain, m: usize, n: usize) -> Result<Face> {
    check_admissible(c, m, n)?;
    let full = Subset::full(m);
    let last = c.last().expect("admissible chains are nonempty");
    let l = c.len();
    let mut hyperplanes = Vec::new();
    for i in full.minus(last).elements() {
        hyperplanes.push(Hyperplane::indicator(m, Subset::singleton(i), 0));
    }
    let top = c.touches_top(n);
    for j in 0..l.saturating_sub(1) {
        if j == 0 && top {
            continue;
        }
        let s = last.minus(c.subsets()[j]);
        hyperplanes.push(Hyperplane::indicator(m, s, subset_bound(n, s.len())));
    }
    if top {
        hyperplanes.push(Hyperplane::indicator(m, full, subset_bound(n, m)));
    }
    let compact = c
        .subsets()
        .iter()
        .map(|&a| Hyperplane::indicator(m, full.minus(a), subset_bound(n, last.minus(a).len())))
        .collect();
    Ok(Face {
        chain: c.clone(),
        hyperplanes,
        compact,
        dimension: missing_ranks(c)?,
    })
}

/// Distinct arrangements of a multiset, starting from its sorted order.
fn arrangements(mut values: Vec<i64>) -> Vec<Vec<i64>> {
    values.sort();
    let mut out = vec![values.clone()];
    while next_permutation(&mut values) {
        out.push(values.clone());
    }
    out
}

/// Vertices of the face of an admissible chain, built block by block.
///
/// Positions outside `A_l` are zero. The block `A_{j+1} \ A_j` carries the
/// values `n - |A_l \ A_{j+1}|` down to `n - |A_l \ A_j| + 1` in any order,
/// where values that would be nonpositive (only in the block `A_2` when
/// `A_1 = ∅` and `|A_l| >= n`) become zeros. When `A_1` is nonempty its
/// positions carry the top `k` values counted down from `n - |A_l \ A_1|`,
/// placed injectively, for every admissible `k`.
pub fn face_vertices(c: &Chain, m: usize, n: usize) -> Result<VRep> {
    if c.is_empty() {
        return VRep::new(m, Vec::new());
    }
    check_admissible(c, m, n)?;
    let subsets = c.subsets();
    let last = c.last().expect("nonempty");
    let n_i = n as i64;
    // (positions, candidate value lists)
    let mut blocks: Vec<(Vec<usize>, Vec<Vec<i64>>)> = Vec::new();
    for j in 0..subsets.len() - 1 {
        let positions: Vec<usize> = subsets[j + 1]
            .minus(subsets[j])
            .elements()
            .iter()
            .map(|e| e - 1)
            .collect();
        let top = n_i - last.minus(subsets[j + 1]).len() as i64;
        let values: Vec<i64> = (0..positions.len() as i64)
            .map(|r| (top - r).max(0))
            .collect();
        blocks.push((positions, arrangements(values)));
    }
    let first = subsets[0];
    if !first.is_empty() {
        let positions: Vec<usize> = first.elements().iter().map(|e| e - 1).collect();
        let top = n_i - last.minus(first).len() as i64;
        let values: Vec<i64> = (0..top.max(0)).map(|r| top - r).collect();
        let fills = labeled_placements(positions.len(), &values)
            .into_iter()
            .map(|(v, _)| v)
            .collect();
        blocks.push((positions, fills));
    }
    let mut points = vec![vec![0i64; m]];
    for (positions, fills) in &blocks {
        let mut next = Vec::with_capacity(points.len() * fills.len());
        for p in &points {
            for fill in fills {
                let mut q = p.clone();
                for (&pos, &val) in positions.iter().zip(fill) {
                    q[pos] = val;
                }
                next.push(q);
            }
        }
        points = next;
    }
    VRep::new(m, points)
}

/// `f_k` = number of chains of `C(m, n)` with `k` missing ranks, `k = 0..m`.
pub fn f_vector(m: usize, n: usize) -> Vec<u64> {
    let mut f = vec![0u64; m + 1];
    for c in enumerate_chains(m, n, false) {
        f[missing_ranks(&c).expect("nonempty chain")] += 1;
    }
    f
}

/// Routes to the h-polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HMethod {
    /// `h(t) = f(t - 1)` from the chain census.
    FromF,
    /// `1 + sum_{i=0}^{n-1} sum_{j=1}^{m-i} C(m,i) A_i(t) t^j`.
    Closed,
    /// `1 + t sum_{i=1}^{m} C(m,i) A_i(t)` (requires `n >= m`).
    Stellohedron,
    /// Indegree census of a generic linear orientation of the graph.
    Orientation,
}

impl HMethod {
    pub const ALL: [HMethod; 4] = [
        HMethod::FromF,
        HMethod::Closed,
        HMethod::Stellohedron,
        HMethod::Orientation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HMethod::FromF => "from_f",
            HMethod::Closed => "closed",
            HMethod::Stellohedron => "stellohedron",
            HMethod::Orientation => "orientation",
        }
    }

    pub fn parse(s: &str) -> Result<HMethod> {
        HMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown h-polynomial method {s:?}")))
    }

    pub fn applies(self, m: usize, n: usize) -> bool {
        self != HMethod::Stellohedron || n >= m
    }
}

fn binom_rat(m: usize, i: usize) -> Rational {
    Rational::from_integer(binomial_u(m as u64, i as u64))
}

/// `f(t) = sum f_k t^k`.
pub fn f_poly(m: usize, n: usize) -> Polynomial {
    Polynomial::from_ints(&f_vector(m, n).iter().map(|&v| v as i64).collect::<Vec<_>>())
}

pub fn h_poly(m: usize, n: usize, method: HMethod) -> Result<Polynomial> {
    match method {
        HMethod::FromF => Ok(f_poly(m, n).compose(&Polynomial::from_ints(&[-1, 1]))),
        HMethod::Closed => {
            let mut h = Polynomial::one();
            for i in 0..n.min(m) {
                let a = eulerian(i as u32).scale(&binom_rat(m, i));
                for j in 1..=m - i {
                    h = &h + &(&a * &Polynomial::monomial(Rational::from_integer(1.into()), j));
                }
            }
            Ok(h)
        }
        HMethod::Stellohedron => {
            if n < m {
                return Err(Error::InvalidParameter(format!(
                    "the stellohedron formula needs n >= m, got m = {m}, n = {n}"
                )));
            }
            Ok(stellohedron_h(m))
        }
        HMethod::Orientation => Ok(orientation_h(m, n, false)),
    }
}

/// `1 + t sum_{i=1}^m C(m,i) A_i(t)`.
pub fn stellohedron_h(m: usize) -> Polynomial {
    let mut sum = Polynomial::zero();
    for i in 1..=m {
        sum = &sum + &eulerian(i as u32).scale(&binom_rat(m, i));
    }
    &Polynomial::one() + &(&sum * &Polynomial::x())
}

/// `sum_{i=0}^m C(m,i) A_i(t) t^{m-i}`.
pub fn stellohedron_h_variant(m: usize) -> Polynomial {
    let mut sum = Polynomial::zero();
    for i in 0..=m {
        let term = eulerian(i as u32).scale(&binom_rat(m, i));
        sum = &sum + &(&term * &Polynomial::monomial(Rational::from_integer(1.into()), m - i));
    }
    sum
}

/// `h_{P(m,n+1)} - h_{P(m,n)} = C(m,n) A_n(t) sum_{i=1}^{m-n} t^i`.
pub fn h_recurrence_step(m: usize, n: usize) -> Polynomial {
    let mut tail = Polynomial::zero();
    for i in 1..=m.saturating_sub(n) {
        tail = &tail + &Polynomial::monomial(Rational::from_integer(1.into()), i);
    }
    &eulerian(n as u32).scale(&binom_rat(m, n)) * &tail
}

/// Classes of nonzero vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    /// Vertices with an entry equal to 1.
    V1,
    /// Nonzero vertices without an entry 1.
    V2,
}

/// Permutation statistics of a nonzero vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexStats {
    pub vertex: Vec<i64>,
    pub class: VertexClass,
    /// Reduced permutation: zeros deleted, `n - k` subtracted.
    pub perm: Vec<usize>,
    pub des: usize,
    pub des_inv: usize,
    /// Zeros to the right of the entry 1 (class `V1` only).
    pub beta: Option<usize>,
}

pub fn vertex_stats(m: usize, n: usize) -> Vec<VertexStats> {
    let spec = PPSpec { m, n };
    vertices(spec)
        .points
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| {
            let k = v.iter().filter(|&&x| x != 0).count() as i64;
            let shift = n as i64 - k;
            let perm: Vec<usize> = v
                .iter()
                .filter(|&&x| x != 0)
                .map(|&x| (x - shift) as usize)
                .collect();
            let one = v.iter().position(|&x| x == 1);
            let beta = one.map(|p| v[p + 1..].iter().filter(|&&x| x == 0).count());
            VertexStats {
                class: if one.is_some() {
                    VertexClass::V1
                } else {
                    VertexClass::V2
                },
                des: descents(&perm),
                des_inv: descents(&inverse(&perm)),
                perm,
                beta,
                vertex: v,
            }
        })
        .collect()
}

/// `1 + sum_{V1} t^{1 + d(v) + beta(v)} + sum_{V2} t^{1 + d(v)}` with
/// `d = des(v^{-1})`, or with `d = des(v)` where that replacement is
/// permitted (always on `V2`, and on `V1` when `n >= m`) if `use_des` is set.
pub fn orientation_h(m: usize, n: usize, use_des: bool) -> Polynomial {
    let mut counts = vec![0i64; m + 1];
    counts[0] = 1;
    for s in vertex_stats(m, n) {
        let d = match s.class {
            VertexClass::V2 if use_des => s.des,
            VertexClass::V1 if use_des && n >= m => s.des,
            _ => s.des_inv,
        };
        let e = 1 + d + s.beta.unwrap_or(0);
        if e >= counts.len() {
            counts.resize(e + 1, 0);
        }
        counts[e] += 1;
    }
    Polynomial::from_ints(&counts)
}

/// `c_i = c_{d-i}` for all `i`, with coefficients beyond the degree read as 0.
pub fn is_palindromic(p: &Polynomial, d: usize) -> bool {
    if p.degree().is_some_and(|deg| deg > d) {
        return false;
    }
    (0..=d).all(|i| p.coeff(i) == p.coeff(d - i))
}

/// Order matrix of the face lattice on `C(m, n)` plus the empty chain.
pub fn order_matrix(m: usize, n: usize) -> (Vec<Chain>, Vec<Vec<bool>>) {
    let chains = enumerate_chains(m, n, true);
    let rs: Vec<_> = chains.iter().map(|c| r_set(c, m, n)).collect();
    let matrix = rs
        .iter()
        .map(|r1| rs.iter().map(|r2| r2.is_subset(r1)).collect())
        .collect();
    (chains, matrix)
}

/// Combinatorial equivalence of `P(m, n1)` and `P(m, n2)` through identical
/// chain sets, f-vectors and face orders.
pub fn comb_equiv_check(m: usize, n1: usize, n2: usize) -> bool {
    if f_vector(m, n1) != f_vector(m, n2) {
        return false;
    }
    order_matrix(m, n1) == order_matrix(m, n2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::r_set_and_order;
    use crate::polytope::{facets, hull::v_to_h};

    fn filter_vertices(m: usize, n: usize, planes: &[Hyperplane]) -> VRep {
        let pts = vertices(PPSpec { m, n })
            .points
            .into_iter()
            .filter(|v| planes.iter().all(|h| h.holds(v)))
            .collect();
        VRep::new(m, pts).unwrap()
    }

    fn affine_dim(v: &VRep) -> usize {
        if v.points.is_empty() {
            return 0;
        }
        let base = &v.points[0];
        let rows: Vec<Vec<Rational>> = v.points[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(base)
                    .map(|(a, b)| crate::exactmath::rat(a - b))
                    .collect()
            })
            .collect();
        crate::exactmath::linalg::rank(&rows)
    }

    #[test]
    fn golden_face_vertex_counts() {
        let c1 =
            Chain::from_elements(&[&[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]]).unwrap();
        let c2 = Chain::from_elements(&[&[], &[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]])
            .unwrap();
        assert_eq!(face_vertices(&c1, 10, 6).unwrap().len(), 40);
        assert_eq!(face_vertices(&c2, 10, 6).unwrap().len(), 24);
        assert_eq!(face_from_chain(&c1, 10, 6).unwrap().dimension, 5);
    }

    #[test]
    fn special_faces() {
        for (m, n) in [(3, 3), (3, 5), (4, 4)] {
            let c = Chain::new(vec![Subset::EMPTY, Subset::full(m)]).unwrap();
            let face = face_from_chain(&c, m, n).unwrap();
            assert_eq!(
                face.hyperplanes,
                vec![Hyperplane::indicator(
                    m,
                    Subset::full(m),
                    subset_bound(n, m)
                )]
            );
            let v = face_vertices(&c, m, n).unwrap();
            assert_eq!(v.len(), (1..=m).product::<usize>());
            assert!(v.points.iter().all(|p| {
                let mut s = p.clone();
                s.sort();
                s == ((n - m + 1) as i64..=n as i64).collect::<Vec<_>>()
            }));
        }
        let whole = face_from_chain(&Chain(vec![Subset::full(3)]), 3, 2).unwrap();
        assert!(whole.hyperplanes.is_empty());
        assert_eq!(whole.dimension, 3);
    }

    #[test]
    fn simplex_faces() {
        let m = 4;
        for s in Subset::all(m).filter(|s| !s.is_empty()) {
            let v = face_vertices(&Chain(vec![s]), m, 1).unwrap();
            let mut expect = vec![vec![0i64; m]];
            for i in s.elements() {
                let mut e = vec![0; m];
                e[i - 1] = 1;
                expect.push(e);
            }
            assert_eq!(v, VRep::new(m, expect).unwrap());
        }
        assert!(face_from_chain(&Chain::from_elements(&[&[1], &[1, 2]]).unwrap(), 2, 1).is_err());
    }

    #[test]
    fn face_vertices_match_hyperplane_filters() {
        for m in 1..=4 {
            for n in 1..=5 {
                for c in enumerate_chains(m, n, false) {
                    let face = face_from_chain(&c, m, n).unwrap();
                    let direct = face_vertices(&c, m, n).unwrap();
                    assert_eq!(
                        direct,
                        filter_vertices(m, n, &face.hyperplanes),
                        "{c} m={m} n={n}"
                    );
                    assert_eq!(
                        direct,
                        filter_vertices(m, n, &face.compact),
                        "{c} m={m} n={n}"
                    );
                    assert_eq!(affine_dim(&direct), face.dimension, "{c} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn face_order_matches_vertex_inclusion() {
        for m in 1..=3 {
            for n in 1..=4 {
                let chains = enumerate_chains(m, n, true);
                let verts: Vec<VRep> = chains
                    .iter()
                    .map(|c| face_vertices(c, m, n).unwrap())
                    .collect();
                for (i, c1) in chains.iter().enumerate() {
                    for (j, c2) in chains.iter().enumerate() {
                        let included = verts[i].points.iter().all(|p| verts[j].points.contains(p));
                        assert_eq!(
                            r_set_and_order(c1, c2, m, n).2,
                            included,
                            "{c1} {c2} m={m} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn r_sets_are_the_facets_containing_the_face() {
        for m in 1..=4 {
            for n in 1..=4 {
                let spec = PPSpec { m, n };
                let h = facets(spec);
                let markers = crate::polytope::facet_markers(spec);
                for c in enumerate_chains(m, n, false) {
                    let v = face_vertices(&c, m, n).unwrap();
                    let on: std::collections::BTreeSet<_> = h
                        .rows
                        .iter()
                        .zip(&markers)
                        .filter(|(r, _)| v.points.iter().all(|p| r.value(p) == r.b))
                        .map(|(_, mk)| *mk)
                        .collect();
                    assert_eq!(r_set(&c, m, n), on, "{c} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn face_order_is_a_partial_order() {
        for m in 1..=4 {
            for n in [1, 2, m, m + 1] {
                let (chains, le) = order_matrix(m, n);
                let k = chains.len();
                for i in 0..k {
                    assert!(le[i][i]);
                    for j in 0..k {
                        if i != j && le[i][j] {
                            assert!(!le[j][i], "antisymmetry m={m} n={n}");
                        }
                        if le[i][j] {
                            for (l, &jl) in le[j].iter().enumerate() {
                                if jl {
                                    assert!(le[i][l], "transitivity m={m} n={n}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn f_vector_examples() {
        for n in 2..=6 {
            assert_eq!(f_vector(2, n), vec![5, 5, 1]);
        }
        assert_eq!(f_vector(3, 3), vec![16, 24, 10, 1]);
        for m in 1..=6usize {
            let f = f_vector(m, 1);
            for (i, &v) in f.iter().enumerate() {
                assert_eq!(
                    num_bigint::BigInt::from(v),
                    binomial_u(m as u64 + 1, i as u64 + 1)
                );
            }
        }
    }

    #[test]
    fn f_vector_ends_match_vertex_and_facet_counts() {
        for m in 1..=5 {
            for n in 1..=5 {
                let spec = PPSpec { m, n };
                let f = f_vector(m, n);
                assert_eq!(f[0], vertices(spec).len() as u64);
                if m >= 2 {
                    assert_eq!(f[m - 1], facets(spec).rows.len() as u64);
                }
                assert_eq!(f[m], 1);
            }
        }
    }

    #[test]
    fn edges_from_chains_match_hull_geometry_for_small_cases() {
        for (m, n) in [(3, 2), (3, 3)] {
            let spec = PPSpec { m, n };
            let h = v_to_h(&vertices(spec)).unwrap();
            assert_eq!(h.rows.len() as u64, f_vector(m, n)[m - 1]);
        }
    }

    #[test]
    fn h_polynomial_examples() {
        assert_eq!(
            h_poly(2, 2, HMethod::Closed).unwrap(),
            Polynomial::from_ints(&[1, 3, 1])
        );
        assert_eq!(
            h_poly(3, 3, HMethod::Stellohedron).unwrap(),
            Polynomial::from_ints(&[1, 7, 7, 1])
        );
        for m in 1..=5 {
            for method in HMethod::ALL.iter().filter(|mt| mt.applies(m, 1)) {
                assert_eq!(
                    h_poly(m, 1, *method).unwrap(),
                    Polynomial::from_ints(&vec![1; m + 1])
                );
            }
        }
        assert!(h_poly(3, 2, HMethod::Stellohedron).is_err());
    }

    #[test]
    fn all_h_methods_agree_and_are_palindromic() {
        for m in 1..=4 {
            for n in 1..=6 {
                let base = h_poly(m, n, HMethod::FromF).unwrap();
                for method in HMethod::ALL.iter().filter(|mt| mt.applies(m, n)) {
                    assert_eq!(
                        h_poly(m, n, *method).unwrap(),
                        base,
                        "{} m={m} n={n}",
                        method.name()
                    );
                }
                assert_eq!(orientation_h(m, n, true), base, "des variant m={m} n={n}");
                assert!(is_palindromic(&base, m));
                let verts = Rational::from_integer((vertices(PPSpec { m, n }).len() as i64).into());
                assert_eq!(base.eval_int(1), verts);
            }
        }
    }

    #[test]
    fn h_recurrence_holds() {
        for m in 1..=5 {
            for n in 1..=5 {
                let lhs = h_poly(m, n + 1, HMethod::FromF).unwrap();
                let rhs = &h_poly(m, n, HMethod::FromF).unwrap() + &h_recurrence_step(m, n);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn eulerian_identity() {
        for m in 0..=8 {
            assert_eq!(stellohedron_h(m), stellohedron_h_variant(m), "m={m}");
        }
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&Polynomial::from_ints(&[1, 3, 1]), 2));
        assert!(!is_palindromic(&Polynomial::from_ints(&[1, 2]), 2));
        for m in 1..=7u32 {
            assert!(is_palindromic(&eulerian(m), (m - 1) as usize));
        }
    }

    #[test]
    fn vertex_stat_examples() {
        assert!(vertex_stats(2, 3)
            .iter()
            .all(|s| s.class == VertexClass::V2));
        let stats = vertex_stats(2, 2);
        let v21 = stats.iter().find(|s| s.vertex == vec![2, 1]).unwrap();
        assert_eq!((v21.perm.clone(), v21.des, v21.des_inv), (vec![2, 1], 1, 1));
        let v12 = stats.iter().find(|s| s.vertex == vec![1, 2]).unwrap();
        assert_eq!((v12.class, v12.beta), (VertexClass::V1, Some(0)));
        let single = vertex_stats(3, 4)
            .into_iter()
            .find(|s| s.vertex == vec![0, 4, 0])
            .unwrap();
        assert_eq!((single.perm, single.des), (vec![1], 0));
    }

    #[test]
    fn combinatorial_equivalence() {
        assert!(comb_equiv_check(3, 3, 4));
        assert!(comb_equiv_check(2, 2, 5));
        assert!(!comb_equiv_check(2, 1, 2));
    }
}
