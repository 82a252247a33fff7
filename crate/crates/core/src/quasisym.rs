//! `(n,q)`-quasi-symmetric polynomials: polynomials over `F_{q^n}` whose
//! induced function is constant on every Frobenius orbit.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::{lagrange_interpolate, reduce_exponent, Poly};

/// `s_{n,i}(t)`: the `i`-th elementary symmetric polynomial evaluated at
/// `(t, t^q, …, t^(q^(n−1)))`.
pub fn elementary_symmetric_poly(k: &FieldCtx, i: usize) -> Result<Poly> {
    let n = k.n() as usize;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let powers: Vec<usize> = (0..n).map(|j| k.q().pow(j as u32) as usize).collect();
    let mut terms = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == i {
            let e = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| powers[j]).sum();
            terms.push((e, k.one()));
        }
    }
    Ok(Poly::from_terms(k, &terms))
}

/// `f(γ^q) = f(γ)` for every `γ`, checked orbit by orbit.
pub fn is_quasisymmetric_semantic(f: &Poly, k: &FieldCtx) -> bool {
    k.galois_orbits().iter().all(|orbit| {
        let v = f.eval(orbit[0], k);
        orbit[1..].iter().all(|&a| f.eval(a, k) == v)
    })
}

fn check_reduced(f: &Poly, k: &FieldCtx) -> Result<()> {
    match f.degree() {
        Some(d) if d as u64 >= k.order() => Err(Error::DegreeTooLarge { degree: d, bound: k.order() }),
        _ => Ok(()),
    }
}

/// `f(t^q) mod (t^(q^n) − t)`, with `deg f < q^n`.
pub fn frobenius_compose(f: &Poly, k: &FieldCtx) -> Result<Poly> {
    check_reduced(f, k)?;
    let mut out = vec![FFElement::ZERO; k.order() as usize];
    for (e, &c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let r = reduce_exponent(e as u64 * k.q(), k.order()) as usize;
        out[r] = k.add(out[r], c);
    }
    Ok(Poly::from_coeffs(out))
}

/// `f(t^q) ≡ f(t) mod (t^(q^n) − t)`.
pub fn is_quasisymmetric_syntactic(f: &Poly, k: &FieldCtx) -> Result<bool> {
    Ok(frobenius_compose(f, k)? == *f)
}

/// A multivariate lift of a reduced polynomial: each monomial `c·t^d` becomes
/// `c·x_1^(d_0)…x_n^(d_(n−1))` where `d_i` are the base-`q` digits of `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsLift {
    pub q: u64,
    pub n: u32,
    pub terms: BTreeMap<Vec<u64>, FFElement>,
}

pub fn lift(f: &Poly, k: &FieldCtx) -> Result<QsLift> {
    check_reduced(f, k)?;
    let (q, n) = (k.q(), k.n());
    let mut terms = BTreeMap::new();
    for (d, &c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut x = d as u64;
        let digits: Vec<u64> = (0..n)
            .map(|_| {
                let r = x % q;
                x /= q;
                r
            })
            .collect();
        terms.insert(digits, c);
    }
    Ok(QsLift { q, n, terms })
}

impl QsLift {
    /// Evaluates the lift at `(t, t^q, …, t^(q^(n−1)))`.
    pub fn to_poly(&self, k: &FieldCtx) -> Poly {
        let terms: Vec<(usize, FFElement)> = self
            .terms
            .iter()
            .map(|(digits, &c)| {
                let e = digits.iter().rev().fold(0u64, |acc, &d| acc * self.q + d);
                (e as usize, c)
            })
            .collect();
        Poly::from_terms(k, &terms)
    }

    fn invariant_under(&self, perm: impl Fn(&[u64]) -> Vec<u64>) -> bool {
        self.terms.iter().all(|(digits, c)| self.terms.get(&perm(digits)) == Some(c))
    }

    /// Invariance under `x_i ↦ x_(i+1)` (indices mod `n`).
    pub fn is_cyclic_invariant(&self) -> bool {
        self.invariant_under(|d| {
            let mut out = d.to_vec();
            out.rotate_right(1);
            out
        })
    }

    /// Invariance under the whole symmetric group, generated by the cycle and
    /// the transposition of the first two variables.
    pub fn is_fully_symmetric(&self) -> bool {
        self.is_cyclic_invariant()
            && self.invariant_under(|d| {
                let mut out = d.to_vec();
                out.swap(0, 1);
                out
            })
    }
}

pub fn maps_into_fq(f: &Poly, k: &FieldCtx) -> bool {
    k.elements().all(|a| k.is_in_fq(f.eval(a, k)))
}

pub fn is_zero_free(f: &Poly, k: &FieldCtx) -> bool {
    k.elements().all(|a| !f.eval(a, k).is_zero())
}

/// Membership in `V_qs`: the reduced representative is quasi-symmetric and
/// has all coefficients in `F_q`.
pub fn in_vqs(f: &Poly, k: &FieldCtx) -> bool {
    let r = f.reduce_mod_field_poly(k);
    r.coeffs().iter().all(|&c| k.is_in_fq(c)) && is_quasisymmetric_syntactic(&r, k).unwrap_or(false)
}

/// One value per Galois orbit, aligned with `FieldCtx::galois_orbits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitAssignment {
    pub values: Vec<FFElement>,
}

/// The unique polynomial of degree `< q^n` taking `values[j]` on orbit `j`.
pub fn interpolate_orbit_assignment(k: &FieldCtx, assign: &OrbitAssignment) -> Result<Poly> {
    let orbits = k.galois_orbits();
    if assign.values.len() != orbits.len() {
        return Err(Error::AssignmentLength { expected: orbits.len(), got: assign.values.len() });
    }
    let mut points = Vec::with_capacity(k.order() as usize);
    for (orbit, &v) in orbits.iter().zip(&assign.values) {
        k.check(v)?;
        points.extend(orbit.iter().map(|&a| (a, v)));
    }
    points.sort_unstable();
    lagrange_interpolate(k, &points)
}

/// The interpolant of the indicator function of orbit `j`.
pub fn orbit_indicator(k: &FieldCtx, j: usize) -> Result<Poly> {
    let count = k.galois_orbits().len();
    if j >= count {
        return Err(Error::IndexOutOfRange { index: j, max: count.saturating_sub(1) });
    }
    let mut values = vec![FFElement::ZERO; count];
    values[j] = k.one();
    interpolate_orbit_assignment(k, &OrbitAssignment { values })
}

/// `i(s(t))` for `i` over `F_q` without roots in `F_q` and `s ∈ V_qs`; the
/// result is quasi-symmetric, `F_q`-valued and zero-free.
pub fn compose_with_irreducible(k: &FieldCtx, i: &Poly, s: &Poly) -> Result<Poly> {
    if i.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !i.coeffs().iter().all(|&c| k.is_in_fq(c)) {
        return Err(Error::CoefficientsOutsideFq);
    }
    if k.subfield_elements().into_iter().any(|a| i.eval(a, k).is_zero()) {
        return Err(Error::HasRootInFq);
    }
    if !in_vqs(s, k) {
        return Err(Error::NotInVqs);
    }
    Ok(i.compose(s, k))
}

/// Whether `beta` is an `m`-th power in `F_q`, by scanning `F_q`.
pub fn is_mth_power_in_fq(k: &FieldCtx, beta: FFElement, m: u64) -> bool {
    k.subfield_elements().into_iter().any(|a| k.pow(a, m) == beta)
}

/// `s(t)^m − β` for `β ∈ F_q` not an `m`-th power in `F_q`.
pub fn power_minus_nonresidue(k: &FieldCtx, s: &Poly, m: u64, beta: FFElement) -> Result<Poly> {
    if m < 2 {
        return Err(Error::ExponentTooSmall { min: 2, got: m });
    }
    k.check(beta)?;
    if !k.is_in_fq(beta) {
        return Err(Error::NotInFq);
    }
    if is_mth_power_in_fq(k, beta, m) {
        return Err(Error::IsPower(m));
    }
    let i = Poly::from_terms(k, &[(m as usize, k.one()), (0, k.neg(beta))]);
    compose_with_irreducible(k, &i, s)
}

/// `(q − 1)^|𝒪|`, the number of zero-free `F_q`-valued orbit-constant functions.
pub fn count_zero_free_orbit_functions(k: &FieldCtx, size_guard: u64) -> Result<u128> {
    if k.order() > size_guard {
        return Err(Error::SizeGuard { size: k.order(), guard: size_guard });
    }
    let orbits = k.galois_orbits().len() as u32;
    Ok(u128::from(k.q() - 1).pow(orbits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> FieldCtx {
        FieldCtx::new(5, 1, 2).unwrap()
    }

    #[test]
    fn elementary_symmetric_examples() {
        let k = f25();
        assert_eq!(elementary_symmetric_poly(&k, 1).unwrap(), Poly::from_terms(&k, &[(5, k.one()), (1, k.one())]));
        let k8 = FieldCtx::new(2, 1, 3).unwrap();
        let s = elementary_symmetric_poly(&k8, 2).unwrap();
        assert_eq!(s.support().collect::<Vec<_>>(), vec![3, 5, 6]);
        let s3 = elementary_symmetric_poly(&k8, 3).unwrap();
        assert_eq!(s3, Poly::monomial(k8.one(), 7));
        assert!(elementary_symmetric_poly(&k8, 0).is_err());
        assert!(elementary_symmetric_poly(&k8, 4).is_err());
    }

    #[test]
    fn example_polynomial_is_in_vqs() {
        let k = f25();
        let f = Poly::from_ints(&k, &[-2, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1]);
        assert!(is_quasisymmetric_semantic(&f, &k));
        assert!(is_quasisymmetric_syntactic(&f, &k).unwrap());
        assert!(lift(&f, &k).unwrap().is_cyclic_invariant());
        assert!(maps_into_fq(&f, &k));
        assert!(is_zero_free(&f, &k));
        assert!(in_vqs(&f, &k));
        let s = elementary_symmetric_poly(&k, 1).unwrap();
        let i = Poly::from_ints(&k, &[-2, 0, 1]);
        assert_eq!(compose_with_irreducible(&k, &i, &s).unwrap(), f);
        assert_eq!(power_minus_nonresidue(&k, &s, 2, k.from_int(2)).unwrap(), f);
    }

    #[test]
    fn non_quasisymmetric_examples() {
        let k4 = FieldCtx::new(2, 1, 2).unwrap();
        let t = Poly::x();
        assert!(!is_quasisymmetric_semantic(&t, &k4));
        assert!(!is_quasisymmetric_syntactic(&t, &k4).unwrap());
        assert!(!lift(&t, &k4).unwrap().is_cyclic_invariant());
        assert!(is_quasisymmetric_syntactic(&Poly::zero(), &k4).unwrap());
        let big = Poly::monomial(k4.one(), 4);
        assert!(is_quasisymmetric_syntactic(&big, &k4).is_err());
        assert!(lift(&big, &k4).is_err());
        let u = Poly::constant(f25().generator());
        assert!(!maps_into_fq(&u, &f25()));
    }

    #[test]
    fn lift_examples() {
        let k8 = FieldCtx::new(2, 1, 3).unwrap();
        let l = lift(&Poly::monomial(k8.one(), 6), &k8).unwrap();
        assert_eq!(l.terms.keys().collect::<Vec<_>>(), vec![&vec![0, 1, 1]]);
        let k = f25();
        let l = lift(&Poly::monomial(k.one(), 6), &k).unwrap();
        assert_eq!(l.terms.keys().next().unwrap(), &vec![1, 1]);
        let c = Poly::constant(k.generator());
        let l = lift(&c, &k).unwrap();
        assert_eq!(l.terms.get(&vec![0, 0]), Some(&k.generator()));
        assert_eq!(l.to_poly(&k), c);
    }

    #[test]
    fn cyclic_but_not_symmetric_family() {
        for (p, m) in [(3u64, 1u32), (5, 1), (2, 2)] {
            let k = FieldCtx::new(p, m, 3).unwrap();
            let q = k.q() as usize;
            for i in 1..q {
                let f = Poly::from_terms(&k, &[(1 + i * q, k.one()), (q + i * q * q, k.one()), (q * q + i, k.one())]);
                let l = lift(&f, &k).unwrap();
                assert!(l.is_cyclic_invariant(), "q={q} i={i}");
                assert!(is_quasisymmetric_semantic(&f, &k));
                assert_eq!(l.is_fully_symmetric(), i == 1, "q={q} i={i}");
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let k4 = FieldCtx::new(2, 1, 2).unwrap();
        let zero = OrbitAssignment { values: vec![FFElement::ZERO; 3] };
        assert!(interpolate_orbit_assignment(&k4, &zero).unwrap().is_zero());
        let ones = OrbitAssignment { values: vec![k4.one(); 3] };
        assert_eq!(interpolate_orbit_assignment(&k4, &ones).unwrap(), Poly::one());
        let ind = orbit_indicator(&k4, 2).unwrap();
        assert_eq!(ind, Poly::from_ints(&k4, &[0, 1, 1]));
        assert!(matches!(
            interpolate_orbit_assignment(&k4, &OrbitAssignment { values: vec![] }),
            Err(Error::AssignmentLength { expected: 3, got: 0 })
        ));
    }

    #[test]
    fn constructions_over_f9() {
        let k = FieldCtx::new(3, 1, 2).unwrap();
        let s = elementary_symmetric_poly(&k, 1).unwrap();
        let i = Poly::from_ints(&k, &[1, 0, 1]);
        let f = compose_with_irreducible(&k, &i, &s).unwrap();
        assert_eq!(f.degree(), Some(6));
        assert!(crate::poly::roots_in_field(&f, &k, 0).unwrap().is_empty());
        let g = power_minus_nonresidue(&k, &s, 2, k.from_int(2)).unwrap();
        assert!(is_zero_free(&g, &k) && in_vqs(&g, &k) && maps_into_fq(&g, &k));
        assert_eq!(power_minus_nonresidue(&k, &s, 2, k.one()), Err(Error::IsPower(2)));
        assert_eq!(power_minus_nonresidue(&k, &s, 2, k.generator()), Err(Error::NotInFq));
        assert_eq!(power_minus_nonresidue(&k, &s, 1, k.from_int(2)), Err(Error::ExponentTooSmall { min: 2, got: 1 }));
        let lin = Poly::from_ints(&k, &[-1, 1]);
        assert_eq!(compose_with_irreducible(&k, &lin, &s), Err(Error::HasRootInFq));
        assert_eq!(compose_with_irreducible(&k, &i, &Poly::x()), Err(Error::NotInVqs));
    }

    #[test]
    fn zero_free_counts() {
        let k4 = FieldCtx::new(2, 1, 2).unwrap();
        assert_eq!(count_zero_free_orbit_functions(&k4, 1 << 16).unwrap(), 1);
        let k9 = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(count_zero_free_orbit_functions(&k9, 1 << 16).unwrap(), 64);
        assert!(count_zero_free_orbit_functions(&k9, 8).is_err());
    }
}
