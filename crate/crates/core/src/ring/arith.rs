//! Small exact integer helpers: trial-division factorization and prime-power detection.

/// Prime factorization of `n` by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, e)` with `n = p^e`, `e >= 1`, or `None` if `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

/// Exponent `e` with `base^e = n`, if any (`base >= 2`).
pub fn exact_log(n: u64, base: u64) -> Option<u32> {
    debug_assert!(base >= 2);
    let mut acc = 1u64;
    let mut e = 0;
    while acc < n {
        acc = acc.checked_mul(base)?;
        e += 1;
    }
    (acc == n).then_some(e)
}

/// `base^exp` or `None` on u64 overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(
            factorize(2 * 2 * 3 * 5 * 5 * 49),
            vec![(2, 2), (3, 1), (5, 2), (7, 2)]
        );
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(6), None);
        assert!(is_prime(2) && is_prime(13) && !is_prime(9) && !is_prime(1));
    }

    #[test]
    fn logs() {
        assert_eq!(exact_log(16, 2), Some(4));
        assert_eq!(exact_log(16, 8), None);
        assert_eq!(exact_log(1, 5), Some(0));
        assert_eq!(exact_log(u64::MAX, 3), None);
    }
}
