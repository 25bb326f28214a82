use serde_json::{json, Value};

use super::output::{Report, Table};
use super::{default_ehr_method, default_volume_method};
use crate::combinat::draconian::Mode;
use crate::combinat::enumerate_draconian;
use crate::ehrhart::{ehr, ehr_closed_small_m, ehr_closed_small_n};
use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rational};
use crate::faces::{f_vector, h_poly, HMethod};
use crate::reference::{COMPUTED, DRACONIAN_COUNTS, GOLDEN, VOLUME_BIG_N_FORM, VOLUME_N_FORM};
use crate::volume::{nvol, nvol_poly_big_n, nvol_poly_n};

/// Available tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    /// `v(m, n)` as polynomials in `n`.
    ExFormulas,
    /// `v(m, n)` as polynomials in `N = n - m + 1`.
    ExFormulasBigN,
    /// Grid of normalized volumes.
    Volumes,
    /// Grid of Ehrhart polynomials.
    Ehrhart,
    /// Grid of f-vectors.
    Fvectors,
    /// Grid of h-polynomials.
    Hpolys,
    /// Draconian sequence counts.
    Draconian,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::ExFormulas => "ex-formulas",
            Which::ExFormulasBigN => "ex-formulas-big-n",
            Which::Volumes => "volumes",
            Which::Ehrhart => "ehrhart",
            Which::Fvectors => "fvectors",
            Which::Hpolys => "hpolys",
            Which::Draconian => "draconian",
        }
    }

    fn default_bounds(self) -> (usize, usize) {
        match self {
            Which::ExFormulas => (7, 0),
            Which::ExFormulasBigN => (6, 0),
            Which::Volumes => (5, 6),
            Which::Ehrhart | Which::Fvectors | Which::Hpolys => (4, 4),
            Which::Draconian => (4, 0),
        }
    }
}

fn label(golden: bool) -> &'static str {
    if golden {
        GOLDEN
    } else {
        COMPUTED
    }
}

fn matches_reference(p: &Polynomial, reference: Option<&&[i64]>) -> bool {
    reference.is_some_and(|r| *p == Polynomial::from_ints(r))
}

pub fn emit(
    which: Which,
    max_m: Option<usize>,
    max_n: Option<usize>,
    workers: usize,
) -> Result<Report> {
    let (dm, dn) = which.default_bounds();
    let max_m = max_m.unwrap_or(dm);
    let max_n = max_n.unwrap_or(dn);
    if max_m == 0 {
        return Err(Error::InvalidParameter("--max-m must be positive".into()));
    }
    let (table, rows) = match which {
        Which::ExFormulas | Which::ExFormulasBigN => polynomial_rows(which, max_m),
        Which::Volumes => volume_grid(max_m, max_n, workers)?,
        Which::Ehrhart => ehrhart_grid(max_m, max_n, workers)?,
        Which::Fvectors => fvector_grid(max_m, max_n),
        Which::Hpolys => hpoly_grid(max_m, max_n)?,
        Which::Draconian => draconian_rows(max_m),
    };
    Ok(Report {
        json: json!({ "table": which.name(), "max_m": max_m, "max_n": max_n, "rows": rows }),
        table,
    })
}

fn polynomial_rows(which: Which, max_m: usize) -> (Table, Vec<Value>) {
    let big = which == Which::ExFormulasBigN;
    let var = if big { "N" } else { "n" };
    let mut table = Table::new(&["m", "polynomial", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        let (p, reference) = if big {
            (nvol_poly_big_n(m), VOLUME_BIG_N_FORM.get(m - 1))
        } else {
            (nvol_poly_n(m), VOLUME_N_FORM.get(m - 1))
        };
        let provenance = label(matches_reference(&p, reference));
        table.push(vec![m.to_string(), p.render(var), provenance.into()]);
        rows.push(json!({
            "m": m,
            "variable": var,
            "coefficients": p.to_strings(),
            "polynomial": p.render(var),
            "provenance": provenance,
        }));
    }
    (table, rows)
}

fn volume_grid(max_m: usize, max_n: usize, workers: usize) -> Result<(Table, Vec<Value>)> {
    let mut table = Table::new(&["m", "n", "value", "engine", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let method = default_volume_method(m, n);
            if !method.applies(m, n) {
                continue;
            }
            let v = nvol(m, n, method, workers)?;
            let golden = n + 1 >= m
                && VOLUME_N_FORM.get(m - 1).is_some_and(|r| {
                    Polynomial::from_ints(r).eval_int(n as i64) == Rational::from_integer(v.clone())
                });
            let provenance = label(golden);
            table.push(vec![
                m.to_string(),
                n.to_string(),
                v.to_string(),
                method.name().into(),
                provenance.into(),
            ]);
            rows.push(json!({
                "m": m,
                "n": n,
                "value": v.to_string(),
                "engine": method.name(),
                "provenance": provenance,
            }));
        }
    }
    Ok((table, rows))
}

/// The published closed form covering `(m, n)`, if any.
fn published_ehrhart(m: usize, n: usize) -> Option<Polynomial> {
    ehr_closed_small_m(m, n)
        .or_else(|_| ehr_closed_small_n(m, n))
        .ok()
}

fn ehrhart_grid(max_m: usize, max_n: usize, workers: usize) -> Result<(Table, Vec<Value>)> {
    let mut table = Table::new(&["m", "n", "polynomial", "engine", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let Ok(method) = default_ehr_method(m, n) else {
                continue;
            };
            let p = ehr(m, n, method, workers)?;
            let provenance = label(published_ehrhart(m, n).is_some_and(|q| q == p));
            table.push(vec![
                m.to_string(),
                n.to_string(),
                p.render("t"),
                method.name().into(),
                provenance.into(),
            ]);
            rows.push(json!({
                "m": m,
                "n": n,
                "coefficients": p.to_strings(),
                "polynomial": p.render("t"),
                "engine": method.name(),
                "provenance": provenance,
            }));
        }
    }
    Ok((table, rows))
}

fn fvector_grid(max_m: usize, max_n: usize) -> (Table, Vec<Value>) {
    let mut table = Table::new(&["m", "n", "f", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let f = f_vector(m, n);
            let golden =
                (m == 2 && n >= 2 && f == [5, 5, 1]) || (m == 3 && n == 3 && f == [16, 24, 10, 1]);
            let text: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            table.push(vec![
                m.to_string(),
                n.to_string(),
                text.join(" "),
                label(golden).into(),
            ]);
            rows.push(json!({ "m": m, "n": n, "f": f, "provenance": label(golden) }));
        }
    }
    (table, rows)
}

fn hpoly_grid(max_m: usize, max_n: usize) -> Result<(Table, Vec<Value>)> {
    let mut table = Table::new(&["m", "n", "polynomial", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let h = h_poly(m, n, HMethod::FromF)?;
            table.push(vec![
                m.to_string(),
                n.to_string(),
                h.render("t"),
                COMPUTED.into(),
            ]);
            rows.push(json!({
                "m": m,
                "n": n,
                "coefficients": h.to_strings(),
                "polynomial": h.render("t"),
                "provenance": COMPUTED,
            }));
        }
    }
    Ok((table, rows))
}

fn draconian_rows(max_m: usize) -> (Table, Vec<Value>) {
    let mut table = Table::new(&["m", "volume_sequences", "ehrhart_sequences", "provenance"]);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        let vol = enumerate_draconian(m, Mode::Volume).len();
        let ehr = enumerate_draconian(m, Mode::Ehrhart).len();
        let golden = DRACONIAN_COUNTS
            .iter()
            .any(|&(k, v, e)| k == m && v.is_none_or(|v| v == vol) && e.is_none_or(|e| e == ehr));
        table.push(vec![
            m.to_string(),
            vol.to_string(),
            ehr.to_string(),
            label(golden).into(),
        ]);
        rows.push(json!({
            "m": m,
            "volume_sequences": vol,
            "ehrhart_sequences": ehr,
            "provenance": label(golden),
        }));
    }
    (table, rows)
}
