//! Small integer helpers: trial-division primality, factorization and the
//! divisor logarithm.

use crate::error::{Error, Result};

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest `e` with `p^e | u`.
pub fn dlogn(p: usize, u: usize) -> Result<u32> {
    if p < 2 {
        return Err(Error::BadBase(p));
    }
    if u == 0 {
        return Err(Error::BadArg);
    }
    let (mut u, mut e) = (u, 0);
    while u % p == 0 {
        u /= p;
        e += 1;
    }
    Ok(e)
}

/// `Some(e)` when `n = p^e`.
pub fn prime_power_exponent(p: usize, n: usize) -> Option<u32> {
    let e = dlogn(p, n).ok()?;
    (p.checked_pow(e)? == n).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert_eq!(prime_divisors(97), vec![97]);
    }

    #[test]
    fn dlogn_examples() {
        assert_eq!(dlogn(2, 24), Ok(3));
        assert_eq!(dlogn(5, 24), Ok(0));
        assert_eq!(dlogn(3, 1), Ok(0));
        assert_eq!(dlogn(1, 24), Err(Error::BadBase(1)));
        assert_eq!(dlogn(2, 0), Err(Error::BadArg));
    }

    #[test]
    fn dlogn_is_maximal() {
        for p in 2..8 {
            for u in 1..500 {
                let e = dlogn(p, u).unwrap();
                assert_eq!(u % p.pow(e), 0);
                assert_ne!(u % p.pow(e + 1), 0);
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_exponent(2, 8), Some(3));
        assert_eq!(prime_power_exponent(2, 1), Some(0));
        assert_eq!(prime_power_exponent(2, 12), None);
        assert_eq!(prime_power_exponent(3, 0), None);
    }
}
