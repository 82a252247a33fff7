//! Small integer helpers: primality, factorization, the Möbius function and
//! irreducible-polynomial counts.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

pub fn mobius(n: u64) -> i64 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`.
pub fn irreducible_count(q: u64, d: u32) -> u64 {
    let d64 = u64::from(d);
    let mut total: i128 = 0;
    for e in divisors(d64) {
        let mu = mobius(e);
        let term = checked_pow(q, (d64 / e) as u32).expect("q^d fits in u64") as i128;
        total += i128::from(mu) * term;
    }
    (total / i128::from(d)) as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Gaussian binomial coefficient `[n choose k]_p`, the number of
/// `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: u32, k: u32, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let p = u128::from(p);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= p.pow(n - i) - 1;
        den *= p.pow(i + 1) - 1;
    }
    num / den
}
