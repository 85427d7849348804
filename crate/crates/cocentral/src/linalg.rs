//! Linear algebra over Z/N via prime-power parts Z/p^k.
//!
//! Rows are kept in an incremental Howell-style echelon form: one pivot row
//! per column with pivot entry exactly p^v, and for v > 0 the annihilated
//! multiple p^{k-v}·row is fed back in, so that consistency and
//! back-substitution are exact over the non-domain ring.

use crate::arith::{crt, factorize, inv_mod, mul_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Self {
        PrimePower { p, k, q: p.pow(k) }
    }

    pub fn parts(n: u64) -> Vec<PrimePower> {
        factorize(n)
            .into_iter()
            .map(|(p, k)| PrimePower::new(p, k))
            .collect()
    }

    pub fn val(&self, a: u64) -> u32 {
        crate::arith::valuation(a % self.q, self.p, self.k)
    }

    /// Writes a nonzero a as p^v·u and returns (v, u⁻¹).
    fn split(&self, a: u64) -> (u32, u64) {
        let v = self.val(a);
        let u = a / self.p.pow(v);
        (
            v,
            inv_mod(u % self.q, self.q).expect("unit part is invertible"),
        )
    }

    pub fn reduce_signed(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }
}

fn scale_row(row: &mut [u64], f: u64, q: u64) {
    for x in row.iter_mut() {
        *x = mul_mod(*x, f, q);
    }
}

/// row -= f · piv (mod q)
fn sub_multiple(row: &mut [u64], piv: &[u64], f: u64, q: u64) {
    if f == 0 {
        return;
    }
    let nf = q - f % q;
    for (x, &y) in row.iter_mut().zip(piv) {
        if y != 0 {
            *x = (*x + mul_mod(y, nf, q)) % q;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Echelon {
    pub ring: PrimePower,
    pub ncols: usize,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Echelon {
    pub fn new(ring: PrimePower, ncols: usize) -> Self {
        Echelon {
            ring,
            ncols,
            pivots: vec![None; ncols],
        }
    }

    pub fn rank_rows(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }

    /// Inserts a row whose entries are already reduced mod q.
    pub fn insert(&mut self, row: Vec<u64>) {
        let ring = self.ring;
        let q = ring.q;
        let mut stack = vec![row];
        while let Some(mut r) = stack.pop() {
            for c in 0..self.ncols {
                if r[c] == 0 {
                    continue;
                }
                match &self.pivots[c] {
                    Some(pv) => {
                        let pivot_entry = pv[c];
                        if r[c] % pivot_entry == 0 {
                            let f = r[c] / pivot_entry;
                            sub_multiple(&mut r, pv, f, q);
                            continue;
                        }
                        let (v, uinv) = ring.split(r[c]);
                        scale_row(&mut r, uinv, q);
                        if v > 0 {
                            let mut ann = r.clone();
                            scale_row(&mut ann, ring.p.pow(ring.k - v), q);
                            stack.push(ann);
                        }
                        let old = self.pivots[c].replace(r).unwrap();
                        stack.push(old);
                    }
                    None => {
                        let (v, uinv) = ring.split(r[c]);
                        scale_row(&mut r, uinv, q);
                        if v > 0 {
                            let mut ann = r.clone();
                            scale_row(&mut ann, ring.p.pow(ring.k - v), q);
                            stack.push(ann);
                        }
                        self.pivots[c] = Some(r);
                    }
                }
                break;
            }
        }
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.pivots.iter().flatten().cloned().collect()
    }

    /// Solves the system whose last column is the right-hand side; free
    /// variables are set to 0 and each pivot variable takes its smallest value.
    pub fn solve_augmented(&self) -> Option<Vec<u64>> {
        let q = self.ring.q;
        let nv = self.ncols - 1;
        if self.pivots[nv].is_some() {
            return None;
        }
        let mut x = vec![0u64; nv];
        for c in (0..nv).rev() {
            if let Some(pv) = &self.pivots[c] {
                let mut r = pv[nv];
                for j in c + 1..nv {
                    if pv[j] != 0 && x[j] != 0 {
                        r = (r + q - mul_mod(pv[j], x[j], q)) % q;
                    }
                }
                let d = pv[c];
                if r % d != 0 {
                    return None;
                }
                x[c] = r / d;
            }
        }
        Some(x)
    }
}

/// Smith normal form over Z/p^k with tracked column transform:
/// P·A·Q = diag(p^{v_i}).
#[derive(Clone, Debug)]
pub struct Snf {
    /// Valuation of each diagonal entry, `k` meaning zero; length = ncols.
    pub diag: Vec<u32>,
    pub q_mat: Vec<Vec<u64>>,
    pub q_inv: Vec<Vec<u64>>,
}

pub fn snf(ring: PrimePower, mut a: Vec<Vec<u64>>, ncols: usize) -> Snf {
    let q = ring.q;
    let nrows = a.len();
    let mut qm: Vec<Vec<u64>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut qi = qm.clone();
    let mut diag = vec![ring.k; ncols];
    let steps = nrows.min(ncols);
    for t in 0..steps {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let v = ring.val(x);
                    if best.is_none_or(|b| v < b.0) {
                        best = Some((v, i, j));
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((v, bi, bj)) = best else { break };
        a.swap(t, bi);
        if bj != t {
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            for row in qm.iter_mut() {
                row.swap(t, bj);
            }
            qi.swap(t, bj);
        }
        let (_, uinv) = ring.split(a[t][t]);
        scale_row(&mut a[t], uinv, q);
        let d = a[t][t];
        let pivot_row = a[t].clone();
        for row in a.iter_mut().skip(t + 1) {
            if row[t] != 0 {
                let f = row[t] / d;
                sub_multiple(row, &pivot_row, f, q);
            }
        }
        for j in t + 1..ncols {
            if a[t][j] != 0 {
                let f = a[t][j] / d;
                a[t][j] = 0;
                let nf = (q - f % q) % q;
                for row in qm.iter_mut() {
                    row[j] = (row[j] + mul_mod(row[t], nf, q)) % q;
                }
                let (rt, rj) = if t < j {
                    let (lo, hi) = qi.split_at_mut(j);
                    (&mut lo[t], &hi[0])
                } else {
                    unreachable!()
                };
                for (x, &y) in rt.iter_mut().zip(rj.iter()) {
                    *x = (*x + mul_mod(y, f, q)) % q;
                }
            }
        }
        diag[t] = v;
    }
    Snf {
        diag,
        q_mat: qm,
        q_inv: qi,
    }
}

/// Generators of {x : A x = 0} over Z/p^k with their orders p^e (e > 0).
pub fn kernel_generators(
    ring: PrimePower,
    rows: Vec<Vec<u64>>,
    ncols: usize,
) -> Vec<(Vec<u64>, u32)> {
    let s = snf(ring, rows, ncols);
    let q = ring.q;
    let mut out = Vec::new();
    for (i, &v) in s.diag.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let scale = ring.p.pow(ring.k - v);
        let col: Vec<u64> = s
            .q_mat
            .iter()
            .map(|row| mul_mod(row[i], scale, q))
            .collect();
        out.push((col, v));
    }
    out
}

/// A linear system over Z/N split into its prime-power parts.
#[derive(Clone, Debug)]
pub struct ModSystem {
    pub n: u64,
    pub nvars: usize,
    parts: Vec<Echelon>,
}

impl ModSystem {
    pub fn new(n: u64, nvars: usize) -> Self {
        ModSystem {
            n,
            nvars,
            parts: PrimePower::parts(n)
                .into_iter()
                .map(|r| Echelon::new(r, nvars + 1))
                .collect(),
        }
    }

    /// Adds the equation Σ coeffs_j x_j = rhs (mod N).
    pub fn add_row(&mut self, coeffs: &[i64], rhs: u64) {
        for e in &mut self.parts {
            let ring = e.ring;
            let mut row: Vec<u64> = coeffs.iter().map(|&c| ring.reduce_signed(c)).collect();
            row.push(rhs % ring.q);
            if row.iter().any(|&x| x != 0) {
                e.insert(row);
            }
        }
    }

    /// Canonical particular solution (CRT of per-part solutions).
    pub fn solve(&self) -> Option<Vec<u64>> {
        if self.n == 1 {
            return Some(vec![0; self.nvars]);
        }
        let sols: Vec<Vec<u64>> = self
            .parts
            .iter()
            .map(|e| e.solve_augmented())
            .collect::<Option<_>>()?;
        Some(
            (0..self.nvars)
                .map(|j| {
                    let residues: Vec<(u64, u64)> = sols
                        .iter()
                        .zip(&self.parts)
                        .map(|(s, e)| (s[j], e.ring.q))
                        .collect();
                    crt(&residues).0
                })
                .collect(),
        )
    }

    /// All solutions of the homogeneous system, sorted lexicographically.
    pub fn kernel_elements(&self) -> Vec<Vec<u64>> {
        let mut combined: Vec<Vec<u64>> = vec![vec![0; self.nvars]];
        let mut modulus = 1u64;
        for e in &self.parts {
            let ring = e.ring;
            let rows: Vec<Vec<u64>> = e
                .rows()
                .into_iter()
                .map(|mut r| {
                    r.truncate(self.nvars);
                    r
                })
                .collect();
            let gens = kernel_generators(ring, rows, self.nvars);
            let mut local: Vec<Vec<u64>> = vec![vec![0; self.nvars]];
            for (g, v) in gens {
                let ord = ring.p.pow(v);
                let mut next = Vec::with_capacity(local.len() * ord as usize);
                for base in &local {
                    for c in 0..ord {
                        next.push(
                            base.iter()
                                .zip(&g)
                                .map(|(&b, &x)| (b + mul_mod(x, c, ring.q)) % ring.q)
                                .collect(),
                        );
                    }
                }
                next.sort();
                next.dedup();
                local = next;
            }
            let mut merged = Vec::with_capacity(combined.len() * local.len());
            for a in &combined {
                for b in &local {
                    merged.push(
                        a.iter()
                            .zip(b)
                            .map(|(&x, &y)| crt(&[(x, modulus), (y, ring.q)]).0)
                            .collect(),
                    );
                }
            }
            modulus *= ring.q;
            combined = merged;
        }
        combined.sort();
        combined
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: u64, a: &[Vec<i64>], b: &[u64], nv: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let total = n.pow(nv as u32);
        for code in 0..total {
            let x: Vec<u64> = (0..nv).map(|j| (code / n.pow(j as u32)) % n).collect();
            let ok = a.iter().zip(b).all(|(row, &rhs)| {
                let s: i64 = row.iter().zip(&x).map(|(&c, &xi)| c * xi as i64).sum();
                s.rem_euclid(n as i64) as u64 == rhs % n
            });
            if ok {
                out.push(x);
            }
        }
        out
    }

    #[test]
    fn solver_matches_brute_force() {
        let cases: Vec<(u64, Vec<Vec<i64>>, Vec<u64>)> = vec![
            (4, vec![vec![2, 0], vec![0, 2]], vec![2, 0]),
            (4, vec![vec![2, 2]], vec![1]),
            (12, vec![vec![2, 3], vec![4, 0]], vec![5, 8]),
            (8, vec![vec![4, 2], vec![2, 6]], vec![6, 2]),
            (9, vec![vec![3, 0, 3], vec![0, 3, 6]], vec![3, 0]),
            (36, vec![vec![6, 4], vec![9, 3]], vec![10, 3]),
        ];
        for (n, a, b) in cases {
            let nv = a[0].len();
            let mut sys = ModSystem::new(n, nv);
            for (row, &rhs) in a.iter().zip(&b) {
                sys.add_row(row, rhs);
            }
            let all = brute(n, &a, &b, nv);
            match sys.solve() {
                Some(x) => assert!(all.contains(&x), "n={n} solution {x:?} not valid"),
                None => assert!(all.is_empty(), "n={n} missed a solution"),
            }
            let zero = vec![0u64; b.len()];
            let mut hom = brute(n, &a, &zero, nv);
            hom.sort();
            assert_eq!(sys.kernel_elements(), hom, "kernel mismatch for n={n}");
        }
    }

    #[test]
    fn snf_diagonal() {
        let ring = PrimePower::new(2, 3);
        let s = snf(ring, vec![vec![2, 4], vec![4, 0]], 2);
        let mut d = s.diag.clone();
        d.sort();
        // SNF over Z is diag(2, 8); 8 vanishes mod 8
        assert_eq!(d, vec![1, 3]);
        for i in 0..2 {
            for j in 0..2 {
                let v: u64 = (0..2)
                    .map(|t| mul_mod(s.q_mat[i][t], s.q_inv[t][j], 8))
                    .sum::<u64>()
                    % 8;
                assert_eq!(v, u64::from(i == j));
            }
        }
    }
}
