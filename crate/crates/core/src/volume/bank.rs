use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::perm::permutations;
use crate::ehrhart::{ehr_vrep, nvol_vrep};
use crate::error::{Error, Result};
use crate::exactmath::rational::to_integer;
use crate::polytope::VRep;

/// Auxiliary closed volume formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Aux {
    /// Volume `m^{m-2}` of the permutohedron `conv(S_m (1, ..., m))`,
    /// relative to a fundamental parallelotope of the lattice in its affine
    /// hull (no `(m-1)!` factor).
    PermNvol,
    /// `2^m - 3^m + m 3^{m-1}`.
    Aux1,
    /// `3m^2 - 6m + 1`.
    Aux2,
}

impl Aux {
    pub fn name(self) -> &'static str {
        match self {
            Aux::PermNvol => "perm_nvol",
            Aux::Aux1 => "aux1",
            Aux::Aux2 => "aux2",
        }
    }

    pub fn parse(s: &str) -> Result<Aux> {
        [Aux::PermNvol, Aux::Aux1, Aux::Aux2]
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown formula {s:?}")))
    }

    fn min_m(self) -> usize {
        match self {
            Aux::PermNvol => 2,
            Aux::Aux1 | Aux::Aux2 => 3,
        }
    }

    /// A full-dimensional lattice polytope whose normalized volume the
    /// formula gives. For the permutohedron this is its image under dropping
    /// the last coordinate, which maps the lattice of its affine hull onto
    /// `Z^{m-1}`.
    pub fn polytope(self, m: usize) -> Result<VRep> {
        self.check(m)?;
        match self {
            Aux::PermNvol => permutohedron_projection(m),
            Aux::Aux1 => aux1_polytope(m),
            Aux::Aux2 => aux2_polytope(m),
        }
    }

    fn check(self, m: usize) -> Result<()> {
        if m < self.min_m() {
            return Err(Error::OutOfRange(format!(
                "{} needs m >= {}, got {m}",
                self.name(),
                self.min_m()
            )));
        }
        Ok(())
    }
}

/// Closed value of one auxiliary formula.
pub fn formula_bank(which: Aux, m: usize) -> Result<BigInt> {
    which.check(m)?;
    let mi = m as i64;
    let p = |b: u32, e: usize| BigInt::from(b).pow(e as u32);
    Ok(match which {
        Aux::PermNvol => p(m as u32, m - 2),
        Aux::Aux1 => p(2, m) - p(3, m) + mi * p(3, m - 1),
        Aux::Aux2 => BigInt::from(3 * mi * mi - 6 * mi + 1),
    })
}

/// Permutations of `(1, ..., m)` with the last entry dropped.
fn permutohedron_projection(m: usize) -> Result<VRep> {
    let points = permutations(m)
        .into_iter()
        .map(|p| p[..m - 1].iter().map(|&v| v as i64).collect())
        .collect();
    VRep::new(m - 1, points)
}

/// The simplex `conv(0, e_{first+1}, ..., e_m)` as integer points.
fn base_simplex(m: usize, first: usize) -> Vec<Vec<i64>> {
    let mut pts = vec![vec![0; m]];
    for k in first..m {
        let mut e = vec![0; m];
        e[k] = 1;
        pts.push(e);
    }
    pts
}

/// `conv(4e1+4e2+2Δ, 4e1+3e2+3Δ, 3e1+4e2+3Δ)` with `Δ = conv(0, e3, ..., em)`.
fn aux1_polytope(m: usize) -> Result<VRep> {
    let mut points = Vec::new();
    for (a, b, s) in [(4, 4, 2), (4, 3, 3), (3, 4, 3)] {
        for d in base_simplex(m, 2) {
            let mut p: Vec<i64> = d.iter().map(|x| s * x).collect();
            p[0] += a;
            p[1] += b;
            points.push(p);
        }
    }
    VRep::new(m, points)
}

/// `conv((4,3,3), (3,4,3), (3,3,4), Π(4,3,2) × Δ)` with
/// `Δ = conv(0, e4, ..., em)`, the piece cut from `Π̂(4,3,3,0,...,0)` by
/// `x1 + x2 + x3 >= 9`.
fn aux2_polytope(m: usize) -> Result<VRep> {
    let mut points = Vec::new();
    for top in [[4, 3, 3], [3, 4, 3], [3, 3, 4]] {
        let mut p = vec![0; m];
        p[..3].copy_from_slice(&top);
        points.push(p);
    }
    for perm in permutations(3) {
        let base: Vec<i64> = perm.iter().map(|&i| 5 - i as i64).collect();
        for d in base_simplex(m, 3) {
            let mut p = d;
            p[..3].copy_from_slice(&base);
            points.push(p);
        }
    }
    VRep::new(m, points)
}

impl Aux {
    /// The value the formula predicts, recomputed from lattice-point counts
    /// of [`Aux::polytope`]: the normalized volume for the auxiliary
    /// formulas and the leading Ehrhart coefficient for the permutohedron.
    pub fn counted_value(self, m: usize, workers: usize) -> Result<BigInt> {
        let q = self.polytope(m)?;
        match self {
            Aux::PermNvol => {
                let lead = ehr_vrep(&q, workers)?.leading();
                to_integer(&lead)
                    .ok_or_else(|| Error::Internal(format!("non-integer relative volume {lead}")))
            }
            Aux::Aux1 | Aux::Aux2 => nvol_vrep(&q, workers),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_values() {
        assert_eq!(formula_bank(Aux::PermNvol, 4).unwrap(), BigInt::from(16));
        assert_eq!(formula_bank(Aux::Aux1, 3).unwrap(), BigInt::from(8));
        assert_eq!(formula_bank(Aux::Aux2, 4).unwrap(), BigInt::from(25));
        assert_eq!(formula_bank(Aux::Aux2, 3).unwrap(), BigInt::from(10));
        assert!(formula_bank(Aux::Aux1, 2).is_err());
    }

    #[test]
    fn aux1_satisfies_its_pyramid_recurrence() {
        // f(m) = 2 f(m-1) + 3^{m-2} (m-1)
        for m in 4..=10 {
            let lhs = formula_bank(Aux::Aux1, m).unwrap();
            let rhs = 2 * formula_bank(Aux::Aux1, m - 1).unwrap()
                + BigInt::from(3u32).pow(m as u32 - 2) * (m - 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn polytope_vertex_counts() {
        assert_eq!(Aux::Aux1.polytope(3).unwrap().len(), 6);
        assert_eq!(Aux::Aux1.polytope(5).unwrap().len(), 12);
        assert_eq!(Aux::Aux2.polytope(5).unwrap().len(), 3 + 6 * 3);
        assert_eq!(Aux::PermNvol.polytope(4).unwrap().len(), 24);
        assert_eq!(Aux::PermNvol.polytope(4).unwrap().dim, 3);
    }

    #[test]
    fn counted_values_match_at_small_m() {
        for m in 3..=4 {
            for which in [Aux::PermNvol, Aux::Aux1, Aux::Aux2] {
                assert_eq!(
                    which.counted_value(m, 1).unwrap(),
                    formula_bank(which, m).unwrap(),
                    "{which:?} m={m}"
                );
            }
        }
    }

    #[test]
    fn aux2_at_three_is_a_determinant() {
        // |det((4,3,3),(3,4,3),(3,3,4))| = 10
        let det = 4 * (16 - 9) - 3 * (12 - 9) + 3 * (9 - 12);
        assert_eq!(BigInt::from(det), formula_bank(Aux::Aux2, 3).unwrap());
    }
}
