//! Small modular-arithmetic helpers shared by the solvers.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn neg_mod(a: u64, m: u64) -> u64 {
    let a = a % m;
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Prime factorization as (p, k) pairs in increasing p.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Units modulo m in increasing order; `[0]` when m = 1.
pub fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&l| gcd(l, m) == 1).collect()
}

/// p-adic valuation of a nonzero residue modulo p^k (k when a = 0).
pub fn valuation(a: u64, p: u64, k: u32) -> u32 {
    if a == 0 {
        return k;
    }
    let mut v = 0;
    let mut a = a;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    v
}

/// Chinese remaindering of residues r_i mod m_i (pairwise coprime).
pub fn crt(parts: &[(u64, u64)]) -> (u64, u64) {
    let mut r = 0u64;
    let mut m = 1u64;
    for &(ri, mi) in parts {
        let inv = inv_mod(m % mi, mi).expect("moduli must be coprime");
        let t = mul_mod((ri + mi - r % mi) % mi, inv, mi);
        r += m * t;
        m *= mi;
    }
    (r % m.max(1), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_crt() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        let (r, m) = crt(&[(2, 3), (3, 5), (2, 7)]);
        assert_eq!((r, m), (23, 105));
    }

    #[test]
    fn factor_and_units() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(units(12), vec![1, 5, 7, 11]);
        assert_eq!(euler_phi(40), 16);
        assert_eq!(valuation(12, 2, 5), 2);
    }
}
