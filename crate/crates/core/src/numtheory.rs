//! Small integer helpers: primality, factorization, totient, valuations.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
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

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
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

/// Returns `(p, n)` with `q = p^n` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, n)] => Some((*p, *n)),
        _ => None,
    }
}

/// Largest `e` with `p^e | n`.
pub fn p_adic_valuation(mut n: u64, p: u64) -> u32 {
    assert!(n > 0, "valuation of zero is undefined");
    assert!(p >= 2, "valuation base must be at least 2");
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Invariant factors `d_1 | d_2 | ... | d_k` (all `> 1`) of a product of cyclic groups.
pub fn invariant_factors(cyclic_orders: &[u64]) -> Vec<u64> {
    // elementary divisors grouped by prime, largest first
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &m in cyclic_orders {
        for (p, e) in factorize(m) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    from_elementary(by_prime)
}

pub(crate) fn from_elementary(mut by_prime: std::collections::BTreeMap<u64, Vec<u32>>) -> Vec<u64> {
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    for exps in by_prime.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut factors: Vec<u64> = (0..len)
        .map(|i| {
            by_prime
                .iter()
                .map(|(p, exps)| exps.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(p_adic_valuation(168, 2), 3);
        assert_eq!(p_adic_valuation(1, 5), 0);
        assert_eq!(p_adic_valuation(9, 3), 2);
    }

    #[test]
    fn totient_matches_count() {
        for n in 1..200u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(totient(n), brute, "n = {n}");
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn invariant_factor_merging() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[2, 4]), vec![2, 4]);
        assert_eq!(invariant_factors(&[6, 4, 1]), vec![2, 12]);
        assert_eq!(invariant_factors(&[1]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[2, 2, 3]), vec![2, 6]);
    }
}
