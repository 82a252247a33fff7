//! Brute-force counts of degree-one places, by exhaustive enumeration of
//! `y ∈ F_{q^n}`. Left-hand sides are evaluated from their defining formulas:
//! the trace as a sum of Frobenius images, the step as `y^p − B^(p−1)·y`, and
//! a root-space polynomial as the product `Π (y − u)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};
use crate::extension::linear::Subspace;
use crate::extension::{ExtensionKind, ExtensionReport, ExtensionSpec, Lhs, PlaceId};
use crate::field::{FFElement, FieldCtx};
use crate::poly::Poly;

pub const DEFAULT_SIZE_GUARD: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaceCount {
    Counted(u64),
    /// Pole of an Artin–Schreier right-hand side: left to the analysis, which
    /// places one rational place above a totally ramified pole.
    Delegated,
}

impl PlaceCount {
    pub fn value(self) -> u64 {
        match self {
            PlaceCount::Counted(c) => c,
            PlaceCount::Delegated => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCount {
    pub per_alpha: Vec<(FFElement, PlaceCount)>,
    pub infinity: PlaceCount,
    pub total_degree1: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Verified,
    Mismatch(Vec<String>),
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub size_guard: u64,
    pub parallel: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { size_guard: DEFAULT_SIZE_GUARD, parallel: false }
    }
}

fn eval_lhs(k: &FieldCtx, lhs: &Lhs, roots: &[FFElement], y: FFElement) -> FFElement {
    match lhs {
        Lhs::FullTrace => {
            let mut acc = FFElement::ZERO;
            let mut z = y;
            for _ in 0..k.n() {
                acc = k.add(acc, z);
                z = k.frobenius_q(z);
            }
            acc
        }
        Lhs::PStep(b) => k.sub(k.pow(y, k.p()), k.mul(k.pow(*b, k.p() - 1), y)),
        Lhs::RootSpace(_) => roots.iter().fold(k.one(), |acc, &u| k.mul(acc, k.sub(y, u))),
    }
}

fn guard(k: &FieldCtx, size_guard: u64) -> Result<()> {
    if k.order() > size_guard {
        return Err(Error::SizeGuard { size: k.order(), guard: size_guard });
    }
    Ok(())
}

/// `hist[c]` = number of `y` with `f(y) = c`.
fn histogram(k: &FieldCtx, parallel: bool, f: impl Fn(FFElement) -> FFElement + Sync) -> Vec<u64> {
    let len = k.order() as usize;
    let fold = |mut acc: Vec<u64>, y: u32| {
        acc[f(k.element_at(u64::from(y)).expect("in range")).index() as usize] += 1;
        acc
    };
    if parallel {
        (0..k.order() as u32).into_par_iter().fold(|| vec![0u64; len], fold).reduce(
            || vec![0u64; len],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    } else {
        (0..k.order() as u32).fold(vec![0u64; len], fold)
    }
}

fn root_list(k: &FieldCtx, lhs: &Lhs) -> Result<Vec<FFElement>> {
    match lhs {
        Lhs::RootSpace(basis) => {
            let sp = Subspace::span(k, basis);
            if sp.dim() != basis.len() {
                return Err(Error::DependentBasis);
            }
            Ok(sp.elements(k))
        }
        _ => Ok(Vec::new()),
    }
}

/// Number of `y ∈ F_{q^n}` with `l(y) = c`.
pub fn count_lhs_solutions(k: &FieldCtx, lhs: &Lhs, c: FFElement) -> Result<u64> {
    let roots = root_list(k, lhs)?;
    Ok(k.elements().filter(|&y| eval_lhs(k, lhs, &roots, y) == c).count() as u64)
}

/// Number of `y ∈ F_{q^n}` with `y^d = c`.
pub fn count_kummer_solutions(k: &FieldCtx, d: u64, c: FFElement) -> u64 {
    k.elements().filter(|&y| k.pow(y, d) == c).count() as u64
}

/// Multiplicity of `x − α` in `f` and the value of the cofactor at `α`.
fn split_at(k: &FieldCtx, f: &Poly, alpha: FFElement) -> (u64, FFElement) {
    let lin = Poly::from_coeffs(vec![k.neg(alpha), k.one()]);
    let mut f = f.clone();
    let mut v = 0;
    while !f.is_zero() && f.eval(alpha, k).is_zero() {
        f = f.div_exact(&lin, k).expect("root divides");
        v += 1;
    }
    (v, f.eval(alpha, k))
}

/// `x^(deg f)·f(1/x)`.
fn reciprocal(f: &Poly) -> Poly {
    let mut c = f.coeffs().to_vec();
    c.reverse();
    Poly::from_coeffs(c)
}

pub fn brute_force_count(spec: &ExtensionSpec, opts: OracleOptions) -> Result<OracleCount> {
    let k = &spec.field;
    guard(k, opts.size_guard)?;
    let (h, g) = (&spec.h, &spec.g);
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (dh, dg) = (h.degree().unwrap_or(0) as i64, g.degree().unwrap_or(0) as i64);
    // h(1/x)/g(1/x) = x^(dg−dh)·h*(x)/g*(x); its data at x = 0 is that of the place at infinity.
    let (hr, gr) = (reciprocal(h), reciprocal(g));

    let local: Box<dyn Fn(i64, FFElement) -> PlaceCount + Sync + '_> = match &spec.kind {
        ExtensionKind::ArtinSchreier(lhs) => {
            let roots = root_list(k, lhs)?;
            let hist = histogram(k, opts.parallel, |y| eval_lhs(k, lhs, &roots, y));
            Box::new(move |v, c| match v {
                v if v < 0 => PlaceCount::Delegated,
                0 => PlaceCount::Counted(hist[c.index() as usize]),
                _ => PlaceCount::Counted(hist[0]),
            })
        }
        ExtensionKind::Kummer(d) => {
            let d = *d;
            if d == 0 || !(k.order() - 1).is_multiple_of(d) {
                return Err(Error::ExponentNotDividing { d, order_minus_one: k.order() - 1 });
            }
            // y^d = π^v·u: the places above P correspond to the solutions of
            // t^r = u(P) with r = gcd(d, v).
            let hists: BTreeMap<u64, Vec<u64>> =
                divisors(d).into_iter().map(|r| (r, histogram(k, opts.parallel, |t| k.pow(t, r)))).collect();
            Box::new(move |v, c| {
                let r = gcd(d, v.unsigned_abs());
                PlaceCount::Counted(hists[&r][c.index() as usize])
            })
        }
    };

    let place_at = |hh: &Poly, gg: &Poly, alpha: FFElement| -> Result<PlaceCount> {
        let (vh, uh) = split_at(k, hh, alpha);
        let (vg, ug) = split_at(k, gg, alpha);
        let v = vh as i64 - vg as i64;
        Ok(local(v, k.div(uh, ug)?))
    };

    let alphas: Vec<FFElement> = k.elements().collect();
    let per_alpha: Vec<(FFElement, PlaceCount)> = if opts.parallel {
        alphas.par_iter().map(|&a| place_at(h, g, a).map(|c| (a, c))).collect::<Result<_>>()?
    } else {
        alphas.iter().map(|&a| place_at(h, g, a).map(|c| (a, c))).collect::<Result<_>>()?
    };
    let infinity = {
        let (vh, uh) = split_at(k, &hr, FFElement::ZERO);
        let (vg, ug) = split_at(k, &gr, FFElement::ZERO);
        local(vh as i64 - vg as i64 + dg - dh, k.div(uh, ug)?)
    };
    let total_degree1 = per_alpha.iter().map(|(_, c)| c.value()).sum::<u64>() + infinity.value();
    Ok(OracleCount { per_alpha, infinity, total_degree1 })
}

/// Compares the report's degree-one counts with the oracle, place by place.
/// Delegated places are excluded from both the comparison and the totals.
pub fn verify_report(k: &FieldCtx, report: &ExtensionReport, oracle: &OracleCount) -> Verification {
    let mut problems = Vec::new();
    let mut delegated_claims = 0u64;
    let mut delegated_oracle = 0u64;
    let mut check = |place: PlaceId, count: PlaceCount| {
        let claimed = report.verdict(&place).map(|v| v.places_above_degree1);
        match (claimed, count) {
            (None, _) => problems.push(format!("{}: missing from the report", place.render(k))),
            (Some(c), PlaceCount::Delegated) => {
                delegated_claims += c;
                delegated_oracle += 1;
            }
            (Some(c), PlaceCount::Counted(o)) if c != o => {
                problems.push(format!("{}: report {c}, oracle {o}", place.render(k)))
            }
            _ => {}
        }
    };
    check(PlaceId::Infinity, oracle.infinity);
    for &(a, c) in &oracle.per_alpha {
        check(PlaceId::rational(k, a), c);
    }
    if report.n_rational - delegated_claims != oracle.total_degree1 - delegated_oracle {
        problems.push(format!(
            "total: report {}, oracle {} (excluding delegated places)",
            report.n_rational - delegated_claims,
            oracle.total_degree1 - delegated_oracle
        ));
    }
    if problems.is_empty() {
        Verification::Verified
    } else {
        Verification::Mismatch(problems)
    }
}
