//! Arithmetic in the prime field `F_n`.

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

#[inline]
pub fn add(a: u64, b: u64, n: u64) -> u64 {
    (a + b) % n
}

#[inline]
pub fn sub(a: u64, b: u64, n: u64) -> u64 {
    (a + n - b) % n
}

#[inline]
pub fn mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn neg(a: u64, n: u64) -> u64 {
    (n - a % n) % n
}

pub fn pow(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, n);
        }
        a = mul(a, a, n);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero element, by Fermat.
pub fn inv(a: u64, n: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(n));
    pow(a, n - 2, n)
}

/// Least quadratic non-residue.
pub fn non_residue(n: u64) -> u64 {
    (2..n)
        .find(|&a| pow(a, (n - 1) / 2, n) == n - 1)
        .expect("odd primes have non-residues")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_inverses() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        for a in 1..83 {
            assert_eq!(mul(a, inv(a, 83), 83), 1);
        }
        assert_eq!(non_residue(7), 3);
        assert_eq!(neg(0, 7), 0);
        assert_eq!(sub(2, 5, 7), 4);
    }
}
