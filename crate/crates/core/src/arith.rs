//! Integer and rational utilities: primality, factorization, valuations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set is deterministic for all u64.
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod_u64(a: u64, p: u64) -> u64 {
    // p prime
    pow_mod_u64(a, p - 2, p)
}

/// Prime factorization of a positive integer, ascending, with exponents.
/// Trial division followed by Pollard rho for leftover composites.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut rest = n.clone();
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    let mut d = 2u64;
    while BigUint::from(d) * BigUint::from(d) <= rest && d < 100_000 {
        while (&rest % d).is_zero() {
            push(BigUint::from(d), &mut out);
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return out;
    }
    // Remaining factor: either prime or handled by rho on u64/u128-scale values.
    let mut stack = vec![rest];
    let mut found: Vec<BigUint> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(m64) = m.to_u64() {
            if is_prime_u64(m64) {
                found.push(m);
                continue;
            }
            let f = pollard_rho_u64(m64);
            stack.push(BigUint::from(f));
            stack.push(BigUint::from(m64 / f));
        } else {
            // Desk scale keeps factors under 64 bits after trial division; a
            // larger leftover is treated as prime only if it passes MR bases.
            if biguint_probable_prime(&m) {
                found.push(m);
            } else {
                let f = pollard_rho_big(&m);
                stack.push(&m / &f);
                stack.push(f);
            }
        }
    }
    found.sort();
    for p in found {
        push(p, &mut out);
    }
    out.sort();
    // merge duplicates that arrived out of order
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in out {
        if let Some(last) = merged.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        merged.push((p, e));
    }
    merged
}

fn biguint_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut r = 0u32;
    while (&d % 2u32).is_zero() {
        d /= 2u32;
        r += 1;
    }
    'outer: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let ab = BigUint::from(a);
        if &ab % n == BigUint::zero() {
            continue;
        }
        let mut x = ab.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 0..r.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// p-adic valuation of a nonzero integer.
pub fn vp_bigint(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0u64;
    while (&m % &p).is_zero() {
        m /= &p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero rational.
pub fn vp_rational(q: &BigRational, p: u64) -> i64 {
    assert!(!q.is_zero());
    vp_bigint(q.numer(), p) as i64 - vp_bigint(q.denom(), p) as i64
}

/// Primes dividing numerator or denominator of any entry of the iterator.
pub fn primes_of_rationals<'a, I: Iterator<Item = &'a BigRational>>(iter: I) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::new();
    for q in iter {
        if q.is_zero() {
            continue;
        }
        for part in [q.numer().abs().to_biguint().unwrap(), q.denom().abs().to_biguint().unwrap()] {
            for (p, _) in factor_biguint(&part) {
                if let Some(p64) = p.to_u64() {
                    if !primes.contains(&p64) {
                        primes.push(p64);
                    }
                }
            }
        }
    }
    primes.sort_unstable();
    primes
}

/// Parse "num/den" or "num" into an exact rational; rejects zero denominators.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| crate::Error::Parse(format!("bad numerator {n:?}")))?;
    let d: BigInt = d.parse().map_err(|_| crate::Error::Parse(format!("bad denominator {d:?}")))?;
    if d.is_zero() {
        return Err(crate::Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// All k-element subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_000));
        assert!(!is_prime_u64(1));
    }

    #[test]
    fn factorization() {
        let f = factor_biguint(&BigUint::from(720u32));
        assert_eq!(
            f,
            vec![
                (BigUint::from(2u32), 4),
                (BigUint::from(3u32), 2),
                (BigUint::from(5u32), 1)
            ]
        );
        let n = BigUint::from(999_999_937u64 * 2); // large prime times 2
        let f = factor_biguint(&n);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn valuations() {
        assert_eq!(vp_bigint(&BigInt::from(12), 2), 2);
        assert_eq!(vp_rational(&BigRational::new(BigInt::from(3), BigInt::from(8)), 2), -3);
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert_eq!(parse_rational("-5").unwrap(), BigRational::from_integer(BigInt::from(-5)));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn combos() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(5, 1).len(), 5);
    }
}
