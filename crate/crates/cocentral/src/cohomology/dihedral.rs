//! Explicit cocycles on D_n in the ordering r^i s^j ↦ j·n + i.

use super::{coboundary, Cocycle2, UnitMap};
use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::group::{dihedral, FiniteGroup};

/// τ_ω(r^i s^j, r^k s^l) = ω^{jk}, with ω = ζ_n^w.
pub fn dihedral_tau_omega(n: usize, w: u64) -> Cocycle2 {
    let n64 = n as u64;
    Cocycle2::from_fn(2 * n, n64, |x, y| {
        let j = x as u64 / n64;
        let k = y as u64 % n64;
        j * k * (w % n64)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralTrivialTest {
    /// Condition (n/2)·(β(r,r^{n-1}) − β(r^{n-1},s) + β(s,r)) ≡ Σ_k β(r,r^k);
    /// `None` for odd n.
    pub condition: Option<bool>,
    /// The explicit trivialization, over modulus N·exp(D_n).
    pub mu: Option<UnitMap>,
}

/// Decides whether β is a coboundary over k^× and returns the explicit
/// trivialization
/// μ(r^i s^j) = −β(r^i, s^j) − Σ_{k=1}^{i−1} β(r, r^k) + i·x + j·y
/// with n·x = Σ_{k=1}^{n−1} β(r, r^k), 2x = β(r,r^{n−1}) − β(r^{n−1},s) + β(s,r)
/// and 2y = β(s, s).
pub fn dihedral_trivial_test(g: &FiniteGroup, beta: &Cocycle2) -> Result<DihedralTrivialTest> {
    let n = g.order() / 2;
    if g.order() % 2 != 0 || n < 3 || *g != dihedral(n) {
        return Err(Error::NotDihedral);
    }
    let big = beta.modulus * lcm(n as u64, 2);
    let b = beta.lift(big);
    let r = 1u32;
    let s = n as u32;
    let rp = |i: usize| (i % n) as u32;
    let sum_r: u64 = (1..n).map(|k| b.get(r, rp(k))).sum::<u64>() % big;
    let two_x = (b.get(r, rp(n - 1)) + big - b.get(rp(n - 1), s) + b.get(s, r)) % big;
    let two_y = b.get(s, s);
    let condition = (n % 2 == 0).then(|| {
        let lhs = (beta.get(r, rp(n - 1)) + beta.modulus - beta.get(rp(n - 1), s) + beta.get(s, r))
            * (n as u64 / 2);
        let rhs: u64 = (1..n).map(|k| beta.get(r, rp(k))).sum();
        lhs % beta.modulus == rhs % beta.modulus
    });
    let n64 = n as u64;
    let x = (0..big).find(|&x| (2 * x) % big == two_x && (n64 * x) % big == sum_r);
    let y = (0..big).find(|&y| (2 * y) % big == two_y);
    let mu = match (x, y) {
        (Some(x), Some(y)) => {
            let mut prefix = vec![0u64; n];
            for i in 2..n {
                prefix[i] = (prefix[i - 1] + b.get(r, rp(i - 1))) % big;
            }
            let mu = UnitMap::from_fn(2 * n, big, |e| {
                let (i, j) = (e as usize % n, e as usize / n);
                let ri = i as u32;
                let sj = if j == 0 { 0 } else { s };
                (3 * big - b.get(ri, sj) - prefix[i] + (i as u64 * x) % big + (j as u64 * y) % big)
                    % big
            });
            (coboundary(g, &mu) == b).then_some(mu)
        }
        _ => None,
    };
    Ok(DihedralTrivialTest { condition, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::solve_coboundary;

    #[test]
    fn tau_omega_is_cocycle() {
        for n in [3, 4, 6, 8] {
            let g = dihedral(n);
            for w in 0..n as u64 {
                dihedral_tau_omega(n, w).check(&g).unwrap();
            }
        }
        assert!(dihedral_tau_omega(6, 0).is_zero());
    }

    #[test]
    fn trivial_test_on_tau_omega() {
        let n = 6;
        let g = dihedral(n);
        // ω primitive 6th root: ω^3 = −1, nontrivial
        let t = dihedral_trivial_test(&g, &dihedral_tau_omega(n, 1)).unwrap();
        assert_eq!(t.condition, Some(false));
        assert!(t.mu.is_none());
        // ω = ζ^2: ω^3 = 1, trivial
        let t = dihedral_trivial_test(&g, &dihedral_tau_omega(n, 2)).unwrap();
        assert_eq!(t.condition, Some(true));
        assert!(t.mu.is_some());
        assert!(solve_coboundary(&g, &dihedral_tau_omega(n, 2), 6 * 6).is_some());
    }

    #[test]
    fn rejects_other_groups() {
        assert!(dihedral_trivial_test(&crate::group::cyclic(6), &Cocycle2::zero(6, 2)).is_err());
    }
}
