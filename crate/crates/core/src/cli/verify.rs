use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use super::output::{Report, Table};
use crate::combinat::Chain;
use crate::ehrhart::{
    aux3_half_open_count, aux_lemma3, ehr, ehr_conjecture, ehr_interpolate, ehr_recurrence,
    EhrMethod,
};
use crate::error::Result;
use crate::exactmath::{factorial, rat, Polynomial, Rational};
use crate::faces::{
    comb_equiv_check, f_vector, face_vertices, h_poly, h_recurrence_step, is_palindromic,
    stellohedron_h, stellohedron_h_variant, HMethod,
};
use crate::polytope::{
    antiblocking_vertices_edges, facet_count_formula, facets, is_simple,
    verify_antiblocking_identity, vertex_count_formula, vertices, AntiBlockSpec, PPSpec,
};
use crate::volume::{conj_vmn_fit_default, formula_bank, nvol, Aux, VolumeMethod};

/// Verification batteries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Engines,
    Faces,
    Conjectures,
    Appendix,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Engines => "engines",
            Suite::Faces => "faces",
            Suite::Conjectures => "conjectures",
            Suite::Appendix => "appendix",
            Suite::All => "all",
        }
    }
}

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// `pass`/`fail`, or `consistent`/`inconsistent` for conjectures.
    pub status: &'static str,
    pub detail: String,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.status, "fail" | "inconsistent")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub max_m: usize,
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.failed())
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn to_report(&self) -> Report {
        let mut table = Table::new(&["suite", "check", "status", "detail"]);
        for c in &self.checks {
            table.push(vec![
                c.suite.into(),
                c.name.clone(),
                c.status.into(),
                c.detail.clone(),
            ]);
        }
        Report {
            json: json!({
                "suite": self.suite,
                "max_m": self.max_m,
                "max_n": self.max_n,
                "checks": self.checks,
                "passed": self.passed(),
                "first_failure": self.first_failure(),
            }),
            table,
        }
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    /// Records a proved-statement check; an error counts as a failure.
    fn check(&mut self, name: String, outcome: Result<(bool, String)>) {
        self.push(name, outcome, "pass", "fail");
    }

    /// Records a conjecture check.
    fn conjecture(&mut self, name: String, outcome: Result<(bool, String)>) {
        self.push(name, outcome, "consistent", "inconsistent");
    }

    fn push(
        &mut self,
        name: String,
        outcome: Result<(bool, String)>,
        yes: &'static str,
        no: &'static str,
    ) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (yes, d),
            Ok((false, d)) => (no, d),
            Err(e) => (no, e.to_string()),
        };
        self.checks.push(Check {
            suite: self.suite,
            name,
            status,
            detail,
        });
    }
}

pub fn run_suite(suite: Suite, max_m: usize, max_n: usize, workers: usize) -> SuiteReport {
    let mut checks = Vec::new();
    let parts: &[Suite] = match suite {
        Suite::All => &[
            Suite::Engines,
            Suite::Faces,
            Suite::Conjectures,
            Suite::Appendix,
        ],
        _ => std::slice::from_ref(&suite),
    };
    for &part in parts {
        let mut rec = Recorder {
            suite: part.name(),
            checks: Vec::new(),
        };
        match part {
            Suite::Engines => engines(&mut rec, max_m, max_n, workers),
            Suite::Faces => faces(&mut rec, max_m, max_n),
            Suite::Conjectures => conjectures(&mut rec, max_m, max_n, workers),
            Suite::Appendix => appendix(&mut rec, workers),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(rec.checks);
    }
    SuiteReport {
        suite: suite.name(),
        max_m,
        max_n,
        checks,
    }
}

fn all_equal<T: PartialEq>(values: &[T]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

fn engines(rec: &mut Recorder, max_m: usize, max_n: usize, workers: usize) {
    for m in 1..=max_m {
        for n in 1..=max_n {
            let vol = (|| {
                let methods: Vec<VolumeMethod> = VolumeMethod::ALL
                    .into_iter()
                    .filter(|v| v.applies(m, n))
                    .collect();
                let values = methods
                    .iter()
                    .map(|&v| nvol(m, n, v, workers))
                    .collect::<Result<Vec<BigInt>>>()?;
                let listing: Vec<String> = methods
                    .iter()
                    .zip(&values)
                    .map(|(k, v)| format!("{}={v}", k.name()))
                    .collect();
                Ok((
                    all_equal(&values),
                    values.first().cloned(),
                    listing.join(" "),
                ))
            })();
            let reference = vol
                .as_ref()
                .ok()
                .and_then(|(ok, v, _)| if *ok { v.clone() } else { None });
            rec.check(
                format!("volume m={m} n={n}"),
                vol.map(|(ok, _, listing)| (ok, listing)),
            );

            let methods: Vec<EhrMethod> = EhrMethod::ALL
                .into_iter()
                .filter(|e| !e.is_conjectural() && e.applies(m, n))
                .collect();
            if methods.is_empty() {
                continue;
            }
            let outcome = (|| {
                let polys = methods
                    .iter()
                    .map(|&e| ehr(m, n, e, workers))
                    .collect::<Result<Vec<Polynomial>>>()?;
                let mut ok = all_equal(&polys);
                let lead = polys[0].leading() * Rational::from_integer(factorial(m as u32));
                if let Some(v) = &reference {
                    ok &= lead == Rational::from_integer(v.clone());
                }
                ok &= polys[0].coeff(0) == rat(1);
                let names: Vec<&str> = methods.iter().map(|e| e.name()).collect();
                Ok((
                    ok,
                    format!("{} by {}", polys[0].render("t"), names.join(",")),
                ))
            })();
            rec.check(format!("ehrhart m={m} n={n}"), outcome);
        }
    }
}

fn faces(rec: &mut Recorder, max_m: usize, max_n: usize) {
    for m in 1..=max_m {
        for n in 1..=max_n {
            let spec = PPSpec { m, n };
            let f = f_vector(m, n);
            let verts = vertices(spec).len() as u64;
            let facet_rows = facets(spec).rows.len() as u64;
            let ok = f[0] == verts
                && f[0] == vertex_count_formula(m, n)
                && f[m - 1] == facet_rows
                && f[m - 1] == facet_count_formula(m, n)
                && f[m] == 1;
            rec.check(format!("f-vector m={m} n={n}"), Ok((ok, format!("{f:?}"))));
            rec.check(
                format!("simple m={m} n={n}"),
                Ok((is_simple(spec), String::new())),
            );

            let hs = (|| {
                let methods: Vec<HMethod> = HMethod::ALL
                    .into_iter()
                    .filter(|h| h.applies(m, n))
                    .collect();
                let polys = methods
                    .iter()
                    .map(|&h| h_poly(m, n, h))
                    .collect::<Result<Vec<Polynomial>>>()?;
                let ok = all_equal(&polys) && is_palindromic(&polys[0], m);
                Ok((ok, polys[0].render("t")))
            })();
            rec.check(format!("h-polynomial m={m} n={n}"), hs);

            if n < max_n {
                let step = (|| {
                    let lhs = &h_poly(m, n + 1, HMethod::FromF)? - &h_poly(m, n, HMethod::FromF)?;
                    Ok((lhs == h_recurrence_step(m, n), String::new()))
                })();
                rec.check(format!("h-recurrence m={m} n={n}"), step);
            }
            rec.check(
                format!("anti-blocking m={m} n={n}"),
                Ok((verify_antiblocking_identity(spec), String::new())),
            );
        }
        if m <= 4 {
            rec.check(
                format!("combinatorial type m={m} n={m} vs n={}", m + 2),
                Ok((comb_equiv_check(m, m, m + 2), String::new())),
            );
        }
    }
    for m in 0..=8 {
        rec.check(
            format!("eulerian identity m={m}"),
            Ok((
                stellohedron_h(m) == stellohedron_h_variant(m),
                String::new(),
            )),
        );
    }
    let golden = (|| {
        let c1 = Chain::from_elements(&[&[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]])?;
        let c2 =
            Chain::from_elements(&[&[], &[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]])?;
        let a = face_vertices(&c1, 10, 6)?.len();
        let b = face_vertices(&c2, 10, 6)?.len();
        Ok((a == 40 && b == 24, format!("{a} and {b} vertices")))
    })();
    rec.check("face vertex counts m=10 n=6".into(), golden);
    let neighbours = (|| {
        let (v, e) = antiblocking_vertices_edges(&AntiBlockSpec::new(vec![1, 1, 0, 0])?);
        let target = v.points.iter().position(|p| p == &vec![1, 1, 0, 0]);
        let degree = target.map_or(0, |t| e.iter().filter(|(a, b)| *a == t || *b == t).count());
        Ok((degree == 6, format!("{degree} neighbours")))
    })();
    rec.check("anti-blocking vertex (1,1,0,0)".into(), neighbours);
}

fn conjectures(rec: &mut Recorder, max_m: usize, max_n: usize, workers: usize) {
    for m in 1..=max_m {
        for n in (m - 1).max(1)..=max_n {
            if !EhrMethod::Interpolate.applies(m, n) {
                continue;
            }
            let outcome = (|| {
                let oracle = ehr_interpolate(m, n, workers)?;
                let (sum, series) = ehr_conjecture(m, n)?;
                let rec_poly = ehr_recurrence(m, n)?;
                let ok = sum == oracle && series == oracle && rec_poly == oracle;
                Ok((ok, oracle.render("t")))
            })();
            rec.conjecture(format!("ehrhart forms m={m} n={n}"), outcome);
        }
    }
    for n in 2..=4 {
        let outcome = conj_vmn_fit_default(n).map(|r| {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|t| format!("p_{}(m) = {}", t.i, t.rendered))
                .collect();
            (r.consistent, terms.join("; "))
        });
        rec.conjecture(format!("volume correction fit n={n}"), outcome);
    }
}

fn appendix(rec: &mut Recorder, workers: usize) {
    for m in 3..=4 {
        for which in [Aux::PermNvol, Aux::Aux1, Aux::Aux2] {
            let outcome = (|| {
                let closed = formula_bank(which, m)?;
                let counted = which.counted_value(m, workers)?;
                Ok((
                    closed == counted,
                    format!("formula {closed}, counted {counted}"),
                ))
            })();
            rec.check(format!("{} m={m}", which.name()), outcome);
        }
    }
    for n in 4..=5 {
        for t in 1..=2u64 {
            let outcome = (|| {
                let formula = aux_lemma3(n)?.eval_int(t as i64);
                let counted = aux3_half_open_count(n, t, workers)?;
                Ok((
                    formula == rat(counted as i64),
                    format!("formula {formula}, counted {counted}"),
                ))
            })();
            rec.check(format!("aux3 n={n} t={t}"), outcome);
        }
    }
}
