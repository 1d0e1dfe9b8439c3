//! Integer helpers for orders and primes.

use alloc::vec::Vec;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Distinct prime divisors, ascending.
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

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    if p < 2 || n == 0 {
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// `n == p^k` for some `k ≥ 0`.
pub fn is_power_of(mut n: usize, p: usize) -> bool {
    if n == 0 || p < 2 {
        return n == 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The prime `p` with `n = p^k`, `k ≥ 1`.
pub fn prime_of_power(n: usize) -> Option<usize> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(prime_divisors(120), [2, 3, 5]);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_power_of(27, 3));
        assert!(is_power_of(1, 7));
        assert!(!is_power_of(12, 2));
        assert_eq!(prime_of_power(16), Some(2));
        assert_eq!(prime_of_power(1), None);
        assert_eq!(lcm(4, 6), 12);
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
