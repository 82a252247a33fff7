//! `F_p`-linear algebra on `F_{q^n}` and additive (linearized) polynomials
//! `Σ a_j T^(p^j)`.

use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::Poly;

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Row-reduced echelon form of `rows` over `F_p`; returns the nonzero rows
/// and their pivot columns.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..width {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// An `F_p`-subspace of `F_{q^n}` held in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    basis: Vec<FFElement>,
}

impl Subspace {
    pub fn span(k: &FieldCtx, gens: &[FFElement]) -> Subspace {
        let rows: Vec<Vec<u64>> = gens.iter().map(|&g| k.coeffs(g)).collect();
        let (rows, pivots) = if rows.is_empty() { (rows, Vec::new()) } else { rref(rows, k.p()) };
        let basis = rows.iter().map(|r| k.element(r).expect("reduced row")).collect();
        Subspace { rows, pivots, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical (echelon) basis.
    pub fn basis(&self) -> &[FFElement] {
        &self.basis
    }

    pub fn contains(&self, k: &FieldCtx, a: FFElement) -> bool {
        let p = k.p();
        let mut v = k.coeffs(a);
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let f = v[col];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// All elements, in canonical order.
    pub fn elements(&self, k: &FieldCtx) -> Vec<FFElement> {
        let mut out = vec![FFElement::ZERO];
        for &b in &self.basis {
            let mut next = Vec::with_capacity(out.len() * k.p() as usize);
            for &x in &out {
                let mut y = x;
                for _ in 0..k.p() {
                    next.push(y);
                    y = k.add(y, b);
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }
}

/// Kernel of an `F_p`-linear map `K → K`.
pub fn kernel(k: &FieldCtx, f: impl Fn(FFElement) -> FFElement) -> Subspace {
    let deg = k.degree() as usize;
    let p = k.p();
    let rows: Vec<Vec<u64>> = (0..deg)
        .map(|i| {
            let mut unit = vec![0u64; deg];
            unit[i] = 1;
            let e = k.element(&unit).expect("unit vector");
            let mut row = k.coeffs(f(e));
            row.extend(unit);
            row
        })
        .collect();
    let (rows, pivots) = rref(rows, p);
    let gens: Vec<FFElement> = rows
        .iter()
        .zip(&pivots)
        .filter(|(_, &c)| c >= deg)
        .map(|(r, _)| k.element(&r[deg..]).expect("reduced row"))
        .collect();
    Subspace::span(k, &gens)
}

/// Some `x` with `f(x) = target`, if one exists.
pub fn preimage(k: &FieldCtx, f: impl Fn(FFElement) -> FFElement, target: FFElement) -> Option<FFElement> {
    let deg = k.degree() as usize;
    let p = k.p();
    let rows: Vec<Vec<u64>> = (0..deg)
        .map(|i| {
            let mut unit = vec![0u64; deg];
            unit[i] = 1;
            let e = k.element(&unit).expect("unit vector");
            let mut row = k.coeffs(f(e));
            row.extend(unit);
            row
        })
        .collect();
    let (rows, pivots) = rref(rows, p);
    let mut v = k.coeffs(target);
    v.resize(2 * deg, 0);
    for (row, &col) in rows.iter().zip(&pivots) {
        if col >= deg {
            break;
        }
        let c = v[col];
        if c != 0 {
            for (x, &y) in v.iter_mut().zip(row) {
                *x = (*x + p * p - c * y % p) % p;
            }
        }
    }
    if v[..deg].iter().any(|&x| x != 0) {
        return None;
    }
    let x: Vec<u64> = v[deg..].iter().map(|&c| (p - c) % p).collect();
    Some(k.element(&x).expect("reduced row"))
}

/// Image of an `F_p`-linear map `K → K`.
pub fn image(k: &FieldCtx, f: impl Fn(FFElement) -> FFElement) -> Subspace {
    let deg = k.degree() as usize;
    let gens: Vec<FFElement> = (0..deg)
        .map(|i| {
            let mut unit = vec![0u64; deg];
            unit[i] = 1;
            f(k.element(&unit).expect("unit vector"))
        })
        .collect();
    Subspace::span(k, &gens)
}

fn combine(k: &FieldCtx, basis: &[FFElement], coords: &[u64]) -> FFElement {
    basis.iter().zip(coords).fold(FFElement::ZERO, |acc, (&b, &c)| k.add(acc, k.mul(k.from_int(c as i64), b)))
}

/// Every subspace of dimension `dim` of the span of the independent vectors
/// `basis`, each given by a basis.
pub fn subspaces_of_dim(k: &FieldCtx, basis: &[FFElement], dim: usize) -> Vec<Vec<FFElement>> {
    let r = basis.len();
    let p = k.p();
    let mut out = Vec::new();
    if dim > r {
        return out;
    }
    // Enumerate reduced echelon matrices of shape dim × r by pivot set.
    let mut pivots: Vec<usize> = (0..dim).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| {
                let piv = pivots.clone();
                ((piv[i] + 1)..r).filter(move |c| !piv.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let total = p.pow(free.len() as u32);
        for fill in 0..total {
            let mut rows = vec![vec![0u64; r]; dim];
            for (i, &c) in pivots.iter().enumerate() {
                rows[i][c] = 1;
            }
            let mut x = fill;
            for &(i, c) in &free {
                rows[i][c] = x % p;
                x /= p;
            }
            out.push(rows.iter().map(|row| combine(k, basis, row)).collect());
        }
        // next pivot combination
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < r - dim + i {
                pivots[i] += 1;
                for j in i + 1..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if dim == 0 {
            return out;
        }
    }
}

/// Every hyperplane `H` of the span of `basis`, paired with a vector outside `H`.
pub fn hyperplanes(k: &FieldCtx, basis: &[FFElement]) -> Vec<(Vec<FFElement>, FFElement)> {
    let r = basis.len();
    let p = k.p();
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    // Functionals λ with first nonzero coordinate 1; H = ker λ.
    for lead in 0..r {
        let tail = r - lead - 1;
        for fill in 0..p.pow(tail as u32) {
            let mut lambda = vec![0u64; r];
            lambda[lead] = 1;
            let mut x = fill;
            for c in lambda.iter_mut().skip(lead + 1) {
                *c = x % p;
                x /= p;
            }
            let h: Vec<FFElement> = (0..r)
                .filter(|&j| j != lead)
                .map(|j| {
                    // b_j − λ_j·b_lead lies in ker λ
                    let coef = (p - lambda[j]) % p;
                    k.add(basis[j], k.mul(k.from_int(coef as i64), basis[lead]))
                })
                .collect();
            out.push((h, basis[lead]));
        }
    }
    out
}

/// An additive polynomial `Σ a_j T^(p^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearized {
    pub coeffs: Vec<FFElement>,
}

impl Linearized {
    pub fn identity(k: &FieldCtx) -> Self {
        Linearized { coeffs: vec![k.one()] }
    }

    /// `T^p − c^(p−1)·T`, whose roots are `F_p·c`.
    pub fn step(k: &FieldCtx, c: FFElement) -> Self {
        Linearized { coeffs: vec![k.neg(k.pow(c, k.p() - 1)), k.one()] }
    }

    /// `T^(q^(n−1)) + … + T^q + T`.
    pub fn trace_form(k: &FieldCtx) -> Self {
        let m = k.m() as usize;
        let mut coeffs = vec![FFElement::ZERO; m * (k.n() as usize - 1) + 1];
        for i in 0..k.n() as usize {
            coeffs[i * m] = k.one();
        }
        Linearized { coeffs }
    }

    /// `L_U(T) = Π_{u ∈ U} (T − u)` for the span of independent `basis`,
    /// via `L_{U+⟨v⟩} = L_{⟨L_U(v)⟩} ∘ L_U`.
    pub fn from_root_basis(k: &FieldCtx, basis: &[FFElement]) -> Result<Self> {
        let mut acc = Self::identity(k);
        for &v in basis {
            let c = acc.eval(k, v);
            if c.is_zero() {
                return Err(Error::DependentBasis);
            }
            acc = Self::step(k, c).compose(k, &acc);
        }
        Ok(acc)
    }

    /// `p`-degree: `log_p` of the degree in `T`.
    pub fn p_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, k: &FieldCtx, x: FFElement) -> FFElement {
        let mut acc = FFElement::ZERO;
        let mut y = x;
        for &a in &self.coeffs {
            acc = k.add(acc, k.mul(a, y));
            y = k.frobenius_p(y);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, k: &FieldCtx, other: &Linearized) -> Linearized {
        let mut coeffs = vec![FFElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let mut bp = b;
                for _ in 0..i {
                    bp = k.frobenius_p(bp);
                }
                coeffs[i + j] = k.add(coeffs[i + j], k.mul(a, bp));
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Linearized { coeffs }
    }

    /// `Σ a_j f^(p^j)` for a polynomial argument.
    pub fn apply(&self, k: &FieldCtx, f: &Poly) -> Poly {
        let mut acc = Poly::zero();
        let mut fp = f.clone();
        for &a in &self.coeffs {
            acc = acc.add(&fp.scale(a, k), k);
            fp = frobenius_poly(k, &fp);
        }
        acc
    }

    /// The root space, computed as a kernel over `F_p`.
    pub fn root_space(&self, k: &FieldCtx) -> Subspace {
        kernel(k, |x| self.eval(k, x))
    }

    /// The image of `K` under the map.
    pub fn image(&self, k: &FieldCtx) -> Subspace {
        image(k, |x| self.eval(k, x))
    }
}

/// `f(x)^p`: coefficients raised to the `p`-th power, exponents scaled by `p`.
pub fn frobenius_poly(k: &FieldCtx, f: &Poly) -> Poly {
    let p = k.p() as usize;
    let terms: Vec<(usize, FFElement)> =
        f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, &c)| (e * p, k.frobenius_p(c))).collect();
    Poly::from_terms(k, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gaussian_binomial;

    #[test]
    fn trace_kernel_dimensions() {
        for (p, m, n) in [(2u64, 1u32, 2u32), (5, 1, 2), (2, 1, 3), (3, 1, 3), (2, 2, 2)] {
            let k = FieldCtx::new(p, m, n).unwrap();
            let l = Linearized::trace_form(&k);
            let u = l.root_space(&k);
            assert_eq!(u.dim(), (m * (n - 1)) as usize);
            for a in u.elements(&k) {
                assert!(k.trace_to_fq(a).is_zero());
            }
            assert_eq!(Linearized::from_root_basis(&k, u.basis()).unwrap(), l);
            assert_eq!(l.image(&k).elements(&k), k.subfield_elements());
        }
    }

    #[test]
    fn preimages() {
        let k = FieldCtx::new(3, 1, 2).unwrap();
        let l = Linearized::trace_form(&k);
        for t in k.elements() {
            match preimage(&k, |x| l.eval(&k, x), t) {
                Some(x) => assert_eq!(l.eval(&k, x), t),
                None => assert!(!k.is_in_fq(t)),
            }
        }
    }

    #[test]
    fn step_roots() {
        let k = FieldCtx::new(5, 1, 2).unwrap();
        let b = k.generator();
        let s = Linearized::step(&k, b);
        let roots = s.root_space(&k).elements(&k);
        let mut expect: Vec<FFElement> = (0..5).map(|i| k.mul(k.from_int(i), b)).collect();
        expect.sort_unstable();
        assert_eq!(roots, expect);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let k = FieldCtx::new(2, 1, 4).unwrap();
        let basis: Vec<FFElement> = (0..4).map(|i| k.pow(k.generator(), i)).collect();
        for d in 0..=4 {
            let subs = subspaces_of_dim(&k, &basis, d);
            assert_eq!(subs.len() as u128, gaussian_binomial(4, d as u32, 2));
            let mut canon: Vec<Vec<FFElement>> = subs.iter().map(|s| Subspace::span(&k, s).elements(&k)).collect();
            assert!(canon.iter().all(|c| c.len() == 1 << d));
            canon.sort();
            canon.dedup();
            assert_eq!(canon.len() as u128, gaussian_binomial(4, d as u32, 2));
        }
        let k3 = FieldCtx::new(3, 1, 3).unwrap();
        let basis: Vec<FFElement> = (0..3).map(|i| k3.pow(k3.generator(), i)).collect();
        let hs = hyperplanes(&k3, &basis);
        assert_eq!(hs.len(), 13);
        for (h, v) in &hs {
            let sp = Subspace::span(&k3, h);
            assert_eq!(sp.dim(), 2);
            assert!(!sp.contains(&k3, *v));
        }
    }

    #[test]
    fn composition_and_application() {
        let k = FieldCtx::new(2, 1, 3).unwrap();
        let a = Linearized::step(&k, k.generator());
        let b = Linearized::step(&k, k.one());
        let ab = a.compose(&k, &b);
        for x in k.elements() {
            assert_eq!(ab.eval(&k, x), a.eval(&k, b.eval(&k, x)));
        }
        let f = Poly::from_ints(&k, &[1, 1, 0, 1]);
        let img = ab.apply(&k, &f);
        for x in k.elements() {
            assert_eq!(img.eval(x, &k), ab.eval(&k, f.eval(x, &k)));
        }
    }
}
