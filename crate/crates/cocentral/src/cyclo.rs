//! Exact equality of sums of N-th roots of unity, by reduction modulo the
//! cyclotomic polynomial Φ_N.

use crate::arith::factorize;
use std::collections::HashMap;

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut memo = HashMap::new();
    phi(n, &mut memo)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, k) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

fn phi(n: u64, memo: &mut HashMap<u64, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // X^n − 1 divided by Φ_d for the proper divisors d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = phi(d, memo);
        num = divide_exact(&num, &den);
    }
    memo.insert(n, num.clone());
    num
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for k in (0..q.len()).rev() {
        let c = rem[k + dn];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Decides Σ ζ^{a_i} = Σ ζ^{b_j} for ζ a primitive N-th root of unity.
#[derive(Clone, Debug)]
pub struct RootSums {
    n: u64,
    phi: Vec<i64>,
}

impl RootSums {
    pub fn new(n: u64) -> Self {
        RootSums {
            n,
            phi: cyclotomic_polynomial(n),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self, counts: &[i64]) -> bool {
        let deg = self.phi.len() - 1;
        let mut r = counts.to_vec();
        for k in (deg..r.len()).rev() {
            let c = r[k];
            if c != 0 {
                for (j, &p) in self.phi.iter().enumerate() {
                    r[k - deg + j] -= c * p;
                }
            }
        }
        r[..deg.min(r.len())].iter().all(|&c| c == 0)
    }

    pub fn equal(&self, a: &[u64], b: &[u64]) -> bool {
        let mut sa = a.to_vec();
        let mut sb = b.to_vec();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa == sb {
            return true;
        }
        let mut counts = vec![0i64; self.n as usize];
        for &e in a {
            counts[(e % self.n) as usize] += 1;
        }
        for &e in b {
            counts[(e % self.n) as usize] -= 1;
        }
        self.is_zero(&counts)
    }
}
