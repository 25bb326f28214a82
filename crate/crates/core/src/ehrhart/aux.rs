use crate::error::{Error, Result};
use crate::exactmath::{ratio, Polynomial, Rational};
use crate::polytope::{count_points, v_to_h, Inequality, VRep};

fn require_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "the auxiliary polytope needs n >= 4, got {n}"
        )));
    }
    Ok(())
}

/// The fourteen vertices in `R^4`; the first ten lie on `x1 + x2 = 2n - 1`
/// and span the removed facet, the last four lie on `x1 + x2 = 2n`.
pub fn aux3_polytope(n: usize) -> Result<VRep> {
    require_n(n)?;
    let n = n as i64;
    let (a, b, c) = (n - 1, n - 2, n - 3);
    let cols = vec![
        vec![n, a, b, c],
        vec![n, a, c, b],
        vec![n, a, b, 0],
        vec![n, a, 0, b],
        vec![n, a, 0, 0],
        vec![a, n, b, c],
        vec![a, n, c, b],
        vec![a, n, b, 0],
        vec![a, n, 0, b],
        vec![a, n, 0, 0],
        vec![n, n, c, c],
        vec![n, n, c, 0],
        vec![n, n, 0, c],
        vec![n, n, 0, 0],
    ];
    VRep::new(4, cols)
}

/// Lattice points of `tQ` off the facet `x1 + x2 = t(2n - 1)`.
pub fn aux3_half_open_count(n: usize, t: u64, workers: usize) -> Result<u64> {
    let q = aux3_polytope(n)?;
    if t == 0 {
        return Ok(0);
    }
    let t = t as i64;
    let floor = t * (2 * n as i64 - 1) + 1;
    let h = v_to_h(&q)?
        .dilate(t)
        .with_row(Inequality::new(vec![-1, -1, 0, 0], -floor));
    Ok(count_points(&h, &q.bounding_box(t), workers))
}

/// `n^2 t^4/2 + n^2 t^3/2 - 7n t^4/3 - 2n t^3 + n t^2/3 + 21 t^4/8
///  + 23 t^3/12 - 5 t^2/8 + t/12`.
pub fn aux_lemma3(n: usize) -> Result<Polynomial> {
    require_n(n)?;
    let n = n as i64;
    let r = |a: i64, b: i64| ratio(a, b);
    let c = |x: Rational, y: Rational, z: Rational| {
        let nn = Rational::from_integer(n.into());
        x * &nn * &nn + y * &nn + z
    };
    Ok(Polynomial::new(vec![
        r(0, 1),
        r(1, 12),
        c(r(0, 1), r(1, 3), r(-5, 8)),
        c(r(1, 2), r(-2, 1), r(23, 12)),
        c(r(1, 2), r(-7, 3), r(21, 8)),
    ]))
}
