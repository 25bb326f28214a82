use serde::Serialize;

use super::hull::maximize;
use super::{HRep, Inequality};
use crate::error::{Error, Result};
use crate::exactmath::rat;

/// The three pieces of a halfspace cut of `P` by `<a, x> <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    /// `P ∧ <a, x> <= b` (equal to `P` when the cut misses it).
    pub p_prime: HRep,
    /// `P ∧ <a, x> >= b`.
    pub q: HRep,
    /// `P ∧ <a, x> = b`.
    pub f: HRep,
    /// Set when `b` exceeds the maximum of `<a, x>` over `P`, so `Q` is empty.
    pub q_empty: bool,
}

/// Splits a bounded polytope along the hyperplane `<a, x> = b`. Lattice-point
/// counts satisfy `|P'| = |P| - |Q| + |F|` for every dilate.
pub fn cut(h: &HRep, a: &[i64], b: i64) -> Result<CutResult> {
    if a.len() != h.dim {
        return Err(Error::DimensionMismatch {
            expected: h.dim,
            got: a.len(),
        });
    }
    let le = Inequality::new(a.to_vec(), b);
    let ge = le.negated();
    let q = h.with_row(ge.clone());
    let f = q.with_row(le.clone());
    let q_empty = maximize(h, a)? < rat(b);
    let p_prime = if q_empty { h.clone() } else { h.with_row(le) };
    Ok(CutResult {
        p_prime,
        q,
        f,
        q_empty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull::h_to_v;
    use crate::polytope::{count_points, facets, PPSpec};

    fn square(side: i64) -> HRep {
        HRep::new(
            2,
            vec![
                Inequality::new(vec![-1, 0], 0),
                Inequality::new(vec![0, -1], 0),
                Inequality::new(vec![1, 0], side),
                Inequality::new(vec![0, 1], side),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_cut_to_pentagon() {
        let p = square(2);
        let c = cut(&p, &[1, 1], 3).unwrap();
        assert!(!c.q_empty);
        let b = [(0, 2), (0, 2)];
        let (np, nq, nf) = (
            count_points(&p, &b, 1),
            count_points(&c.q, &b, 1),
            count_points(&c.f, &b, 1),
        );
        assert_eq!((np, nq, nf), (9, 3, 2));
        assert_eq!(count_points(&c.p_prime, &b, 1), np - nq + nf);
        assert_eq!(
            h_to_v(&c.p_prime).unwrap(),
            h_to_v(&facets(PPSpec::new(2, 2).unwrap())).unwrap()
        );
    }

    #[test]
    fn identity_holds_on_dilates() {
        let p = square(2);
        let c = cut(&p, &[1, 1], 3).unwrap();
        for t in 1..=4i64 {
            let b = [(0, 2 * t), (0, 2 * t)];
            let lhs = count_points(&c.p_prime.dilate(t), &b, 1);
            let rhs = count_points(&p.dilate(t), &b, 1) + count_points(&c.f.dilate(t), &b, 1)
                - count_points(&c.q.dilate(t), &b, 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cut_beyond_the_polytope_is_flagged() {
        let p = square(2);
        let c = cut(&p, &[1, 1], 7).unwrap();
        assert!(c.q_empty);
        assert_eq!(c.p_prime, p);
        assert_eq!(count_points(&c.q, &[(0, 2), (0, 2)], 1), 0);
    }

    #[test]
    fn dilated_simplex_cut_leaves_a_translated_unit_simplex() {
        let simplex3 = facets(PPSpec::new(3, 1).unwrap()).dilate(3);
        let c = cut(&simplex3, &[1, 0, 0], 2).unwrap();
        let q = h_to_v(&c.q).unwrap();
        assert_eq!(
            q.points,
            vec![vec![2, 0, 0], vec![2, 0, 1], vec![2, 1, 0], vec![3, 0, 0]]
        );
    }
}
