//! Kummer-type extensions `y^d = h(x)/g(x)` with `d | q^n − 1`. These are
//! cyclic and tame: at a place with `v = v_P(h/g)`, `e = d / gcd(d, v)` and the
//! different exponent is `e − 1`.

use super::{ExtensionKind, ExtensionReport, ExtensionSpec, Justification, PlaceId, PlaceStatus, PlaceVerdict};
use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::{factorize, Poly};

fn is_power(k: &FieldCtx, c: FFElement, r: u64) -> bool {
    k.pow(c, (k.order() - 1) / r) == k.one()
}

pub fn analyze_kummer(spec: &ExtensionSpec, seed: u64) -> Result<ExtensionReport> {
    let ExtensionKind::Kummer(d) = spec.kind else {
        return Err(Error::Schema("expected a kummer spec".into()));
    };
    let k = &spec.field;
    let om1 = k.order() - 1;
    if d < 2 {
        return Err(Error::ExponentTooSmall { min: 2, got: d });
    }
    if !om1.is_multiple_of(d) {
        return Err(Error::ExponentNotDividing { d, order_minus_one: om1 });
    }
    let (h, g) = spec.normalized_rhs()?;
    let lead = h.lead().expect("nonzero");

    let mut finite: Vec<(Poly, i64)> = Vec::new();
    if h.degree() != Some(0) {
        finite.extend(factorize(&h, k, seed)?.factors.into_iter().map(|(f, e)| (f, i64::from(e))));
    }
    if g.degree() != Some(0) {
        finite.extend(factorize(&g, k, seed)?.factors.into_iter().map(|(f, e)| (f, -i64::from(e))));
    }
    let s = finite.iter().fold(d, |acc, (_, v)| gcd(acc, v.unsigned_abs()));
    if s > 1 {
        // h/g = lead·u^s; the extension degenerates according to lead.
        let t = divisors(s).into_iter().filter(|&t| is_power(k, lead, t)).max().unwrap_or(1);
        if t == d {
            return Err(Error::PerfectPower(d));
        }
        if t > 1 {
            return Err(Error::Reducible(format!(
                "right-hand side is a {t}-th power times a constant, and {t} divides {d}"
            )));
        }
        return Err(Error::ConstantFieldExtension(s));
    }

    let theorem = spec.qs_certified && (om1 / (k.q() - 1)).is_multiple_of(d);
    let ramified_place = |place: PlaceId, v: i64, unit: Option<FFElement>| {
        let r = gcd(d, v.unsigned_abs());
        let e = d / r;
        let deg = place.degree() as u64;
        let above = match unit {
            Some(c) if is_power(k, c, r) => r,
            _ => 0,
        };
        let status = if e > 1 {
            PlaceStatus::TameRamified { e, different_exponent: e - 1 }
        } else if above == d {
            PlaceStatus::SplitsCompletely
        } else {
            PlaceStatus::UnramifiedNonsplit
        };
        PlaceVerdict {
            place,
            valuation: v,
            status,
            places_above_degree1: above,
            residue: None,
            justification: None,
            different_degree: Some(deg * r * (e - 1)),
        }
    };

    let mut verdicts = Vec::new();
    let v_inf = g.degree().unwrap_or(0) as i64 - h.degree().unwrap_or(0) as i64;
    for (pi, v) in &finite {
        let unit = if pi.degree() == Some(1) {
            let alpha = k.neg(pi.coeff(0));
            let strip = |f: &Poly| {
                let mut f = f.clone();
                while f.eval(alpha, k).is_zero() {
                    f = f.div_exact(pi, k).expect("root divides");
                }
                f.eval(alpha, k)
            };
            Some(k.div(strip(&h), strip(&g))?)
        } else {
            None
        };
        verdicts.push(ramified_place(PlaceId::Finite(pi.clone()), *v, unit));
    }
    let unramified = |place: PlaceId, c: FFElement| {
        let splits = is_power(k, c, d);
        PlaceVerdict {
            place,
            valuation: 0,
            status: if splits { PlaceStatus::SplitsCompletely } else { PlaceStatus::UnramifiedNonsplit },
            places_above_degree1: if splits { d } else { 0 },
            residue: Some(c),
            justification: Some(if theorem && splits { Justification::Theorem } else { Justification::RootCount }),
            different_degree: Some(0),
        }
    };
    if v_inf == 0 {
        verdicts.push(unramified(PlaceId::Infinity, lead));
    } else {
        verdicts.push(ramified_place(PlaceId::Infinity, v_inf, Some(lead)));
    }
    for alpha in k.elements() {
        let (ha, ga) = (h.eval(alpha, k), g.eval(alpha, k));
        if ha.is_zero() || ga.is_zero() {
            continue;
        }
        verdicts.push(unramified(PlaceId::rational(k, alpha), k.div(ha, ga)?));
    }
    let reason = format!("valuations of the right-hand side have gcd 1 with d = {d}");
    ExtensionReport::assemble("kummer", k, d, verdicts, reason)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn final_example_f9() {
        let k = FieldCtx::new(3, 1, 2).unwrap();
        let h = Poly::from_terms(&k, &[(8, k.one()), (0, k.from_int(-2))]);
        let spec = ExtensionSpec::kummer(k.clone(), 4, h, Poly::one(), true);
        let rep = analyze_kummer(&spec, 0).unwrap();
        assert_eq!(rep.n_rational, 40);
        assert_eq!(rep.degree, 4);
        assert_eq!(rep.deg_different, Some(24));
        assert_eq!(rep.genus, Some(9));
        assert!(super::super::max_ratio_check(&rep));
    }

    #[test]
    fn degenerate_inputs() {
        let k = FieldCtx::new(3, 1, 2).unwrap();
        let x = Poly::x();
        let spec = |d: u64, h: Poly| ExtensionSpec::kummer(k.clone(), d, h, Poly::one(), false);
        assert_eq!(analyze_kummer(&spec(4, x.pow(4, &k)), 0), Err(Error::PerfectPower(4)));
        assert!(matches!(analyze_kummer(&spec(4, x.pow(2, &k)), 0), Err(Error::Reducible(_))));
        assert_eq!(
            analyze_kummer(&spec(3, x.clone()), 0),
            Err(Error::ExponentNotDividing { d: 3, order_minus_one: 8 })
        );
        // u·x^4 with u a generator of F_9^*: not a square, so a constant-field extension
        let ux4 = x.pow(4, &k).scale(k.primitive(), &k);
        assert_eq!(analyze_kummer(&spec(4, ux4), 0), Err(Error::ConstantFieldExtension(4)));
    }

    #[test]
    fn ramified_rational_places() {
        let k = FieldCtx::new(3, 1, 2).unwrap();
        // y^4 = x (x+1)^2
        let h = Poly::x().mul(&Poly::from_ints(&k, &[1, 1]).pow(2, &k), &k);
        let rep = analyze_kummer(&ExtensionSpec::kummer(k.clone(), 4, h, Poly::one(), false), 0).unwrap();
        let at0 = rep.verdict(&PlaceId::rational(&k, k.zero())).unwrap();
        assert_eq!(at0.status, PlaceStatus::TameRamified { e: 4, different_exponent: 3 });
        assert_eq!(at0.places_above_degree1, 1);
        let at_m1 = rep.verdict(&PlaceId::rational(&k, k.from_int(-1))).unwrap();
        assert_eq!(at_m1.status, PlaceStatus::TameRamified { e: 2, different_exponent: 1 });
        // v_inf = −3: totally ramified
        let inf = rep.verdict(&PlaceId::Infinity).unwrap();
        assert_eq!(inf.status, PlaceStatus::TameRamified { e: 4, different_exponent: 3 });
        assert_eq!(rep.deg_different, Some(3 + 2 + 3));
        assert_eq!(rep.genus, Some(1));
    }
}
