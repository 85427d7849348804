//! H²(H, Z/N) through tree-normalized cocycles.
//!
//! Every class has a representative vanishing on the BFS tree edges
//! (p, s). Such a cocycle is determined by its values on the non-tree edges
//! (x, s), extended by τ(x, y₀s) = τ(x, y₀) + τ(xy₀, s) − τ(y₀, s) along the
//! tree. The cocycle identity then reduces to the relations at triples
//! (x, y, s) with (y, s) a non-tree edge; the residual coboundaries are those
//! of the maps n_{·,j} counting generator letters along the tree.

use super::solver::CoboundarySolver;
use super::{is_kx_trivial, Cocycle2};
use crate::arith::{factorize, mul_mod};
use crate::error::{Error, Result};
use crate::group::{Budget, FiniteGroup};
use crate::linalg::{kernel_generators, snf, Echelon, PrimePower};

#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    /// Cyclic generators with their orders (prime powers).
    pub generators: Vec<(Cocycle2, u64)>,
    pub class_reps: Vec<Cocycle2>,
    pub kx_reps: Vec<Cocycle2>,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

/// Vectors L_{x,y} for a fixed x over the non-tree variables.
fn tree_extension(s: &CoboundarySolver, x: u32, nvars: usize, g: &FiniteGroup) -> Vec<Vec<i32>> {
    let n = g.order();
    let k = s.num_generators();
    let mut l = vec![Vec::new(); n];
    l[g.identity() as usize] = vec![0i32; nvars];
    for &y in s.bfs.iter().skip(1) {
        let (y0, j) = s.parent[y as usize];
        let mut v = l[y0 as usize].clone();
        let xy0 = g.mul(x, y0);
        let a = s.edge_var[xy0 as usize * k + j];
        if a != usize::MAX {
            v[a] += 1;
        }
        let b = s.edge_var[y0 as usize * k + j];
        if b != usize::MAX {
            v[b] -= 1;
        }
        l[y as usize] = v;
    }
    l
}

fn invariant_factors(prime_powers: &[(u64, u32)]) -> Vec<u64> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &(p, e) in prime_powers {
        by_prime.entry(p).or_default().push(e);
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (p, mut es) in by_prime {
        es.sort_unstable();
        let offset = len - es.len();
        for (i, e) in es.into_iter().enumerate() {
            out[offset + i] *= p.pow(e);
        }
    }
    out
}

/// Modulus whose H² surjects onto the Schur multiplier: the product of the
/// full prime-power parts of |H| for primes p with p² dividing |H|.
pub fn schur_modulus(order: u64) -> u64 {
    factorize(order)
        .into_iter()
        .filter(|&(_, k)| k >= 2)
        .map(|(p, k)| p.pow(k))
        .product()
}

/// Order and cyclicity of H²(H, k^×).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurMultiplier {
    pub order: u64,
    pub cyclic: bool,
}

/// |Hom(M, Z/p)| = |H²(H, Z/p)| / |Hom(H, Z/p)| decides cyclicity prime by
/// prime; the order comes from the k^×-classes over the Schur modulus.
pub fn schur_multiplier(g: &FiniteGroup, budget: &Budget) -> Result<SchurMultiplier> {
    let n = g.order() as u64;
    let order = h2_compute_with(g, schur_modulus(n).max(1), budget)?
        .kx_reps
        .len() as u64;
    let mut cyclic = true;
    for (p, k) in factorize(n) {
        if k < 2 {
            continue;
        }
        let h2p = h2_compute_with(g, p, budget)?.order();
        let homs = super::characters(g, p).len() as u64;
        if h2p / homs > p {
            cyclic = false;
        }
    }
    Ok(SchurMultiplier { order, cyclic })
}

pub fn h2_compute(g: &FiniteGroup, modulus: u64) -> Result<CohomologyGroup> {
    h2_compute_with(g, modulus, &Budget::default())
}

pub fn h2_compute_with(g: &FiniteGroup, modulus: u64, budget: &Budget) -> Result<CohomologyGroup> {
    if g.order() > budget.max_h2_order {
        return Err(Error::BudgetExceeded(format!(
            "generic H² on order {} exceeds cap {}",
            g.order(),
            budget.max_h2_order
        )));
    }
    let n = g.order();
    let s = CoboundarySolver::new(g);
    let k = s.num_generators();
    let nvars = s.non_tree.len();
    let parts = PrimePower::parts(modulus);
    let mut echelons: Vec<Echelon> = parts.iter().map(|&r| Echelon::new(r, nvars)).collect();

    for x in g.elements() {
        if x == g.identity() {
            continue;
        }
        let l = tree_extension(&s, x, nvars, g);
        for &(y, j) in &s.non_tree {
            let ys = s.times_gen(y, j);
            let xy = g.mul(x, y);
            let mut row: Vec<i32> = l[y as usize]
                .iter()
                .zip(&l[ys as usize])
                .map(|(&a, &b)| a - b)
                .collect();
            let a = s.edge_var[xy as usize * k + j];
            if a != usize::MAX {
                row[a] += 1;
            }
            row[s.edge_var[y as usize * k + j]] -= 1;
            if row.iter().all(|&c| c == 0) {
                continue;
            }
            for e in &mut echelons {
                let q = e.ring.q as i64;
                let r: Vec<u64> = row
                    .iter()
                    .map(|&c| (c as i64).rem_euclid(q) as u64)
                    .collect();
                if r.iter().any(|&c| c != 0) {
                    e.insert(r);
                }
            }
        }
    }

    // Residual coboundaries ∂(n_{·,j}) on the non-tree edges.
    let b_vectors: Vec<Vec<i64>> = (0..k)
        .map(|t| {
            s.non_tree
                .iter()
                .map(|&(x, j)| {
                    let y = s.times_gen(x, j);
                    s.count(x, t) + i64::from(t == j) - s.count(y, t)
                })
                .collect()
        })
        .collect();

    let mut gens_vec: Vec<(Vec<u64>, u64)> = Vec::new();
    let mut prime_powers = Vec::new();
    for (ring, e) in parts.iter().zip(&echelons) {
        let q = ring.q;
        let kernel = kernel_generators(*ring, e.rows(), nvars);
        if kernel.is_empty() {
            continue;
        }
        let s1 = snf(*ring, e.rows(), nvars);
        // Coordinates of each coboundary with respect to the kernel generators.
        let mut rel_rows: Vec<Vec<u64>> = Vec::new();
        let kernel_index: Vec<usize> = s1
            .diag
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v > 0)
            .map(|(i, _)| i)
            .collect();
        for (t, &(_, v)) in kernel.iter().enumerate() {
            let mut r = vec![0u64; kernel.len()];
            r[t] = ring.p.pow(v) % q;
            rel_rows.push(r);
        }
        for b in &b_vectors {
            let bq: Vec<u64> = b.iter().map(|&c| ring.reduce_signed(c)).collect();
            let y: Vec<u64> = s1
                .q_inv
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&bq)
                        .fold(0, |acc, (&a, &c)| (acc + mul_mod(a, c, q)) % q)
                })
                .collect();
            let r: Vec<u64> = kernel_index
                .iter()
                .map(|&i| {
                    let scale = ring.p.pow(ring.k - s1.diag[i]);
                    debug_assert_eq!(y[i] % scale, 0);
                    y[i] / scale
                })
                .collect();
            rel_rows.push(r);
        }
        let kn = kernel.len();
        let s2 = snf(*ring, rel_rows, kn);
        for (i, &w) in s2.diag.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let coeffs = &s2.q_inv[i];
            let mut vec = vec![0u64; nvars];
            for (c, (kv, _)) in coeffs.iter().zip(&kernel) {
                if *c != 0 {
                    for (a, &b) in vec.iter_mut().zip(kv) {
                        *a = (*a + mul_mod(*c, b, q)) % q;
                    }
                }
            }
            let cof = modulus / q;
            gens_vec.push((vec.into_iter().map(|v| v * cof).collect(), ring.p.pow(w)));
            prime_powers.push((ring.p, w));
        }
    }

    // Expand variable vectors to full cocycle tables.
    let mut tables: Vec<Vec<u64>> = vec![vec![0u64; n * n]; gens_vec.len()];
    let m = modulus as i64;
    for x in g.elements() {
        if x == g.identity() {
            continue;
        }
        let l = tree_extension(&s, x, nvars, g);
        for y in g.elements() {
            for (t, (vec, _)) in gens_vec.iter().enumerate() {
                let val: i64 = l[y as usize]
                    .iter()
                    .zip(vec)
                    .filter(|(&c, _)| c != 0)
                    .fold(0i64, |acc, (&c, &v)| {
                        (acc + c as i64 * v as i64).rem_euclid(m)
                    });
                tables[t][x as usize * n + y as usize] = val as u64;
            }
        }
    }
    let generators: Vec<(Cocycle2, u64)> = tables
        .into_iter()
        .zip(&gens_vec)
        .map(|(values, (_, ord))| {
            (
                Cocycle2 {
                    modulus,
                    order: n,
                    values,
                },
                *ord,
            )
        })
        .collect();

    let class_reps = enumerate_combinations(&generators, n, modulus);
    let mut kx_reps: Vec<Cocycle2> = Vec::new();
    for c in &class_reps {
        if kx_reps.iter().all(|r| !is_kx_trivial(g, &c.sub(r))) {
            kx_reps.push(c.clone());
        }
    }
    Ok(CohomologyGroup {
        modulus,
        invariant_factors: invariant_factors(&prime_powers),
        generators,
        class_reps,
        kx_reps,
    })
}

/// All Σ c_i γ_i with 0 ≤ c_i < ord_i, in lexicographic order of (c_i).
fn enumerate_combinations(gens: &[(Cocycle2, u64)], n: usize, modulus: u64) -> Vec<Cocycle2> {
    let mut out = vec![Cocycle2::zero(n, modulus)];
    for (gamma, ord) in gens.iter().rev() {
        let mut next = Vec::with_capacity(out.len() * *ord as usize);
        for c in 0..*ord {
            let shift = gamma.scale(c);
            for base in &out {
                next.push(shift.add(base));
            }
        }
        out = next;
    }
    out
}
