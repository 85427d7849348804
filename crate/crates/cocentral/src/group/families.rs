//! Group families and the descriptor grammar.
//!
//! Canonical orderings:
//! - `cyclic:n`: residues 0..n.
//! - `dihedral:n`: r^i s^j at index j·n + i.
//! - `symmetric:n`, `alternating:n`: permutations in lexicographic order of
//!   their image lists, composed as (στ)(k) = σ(τ(k)).
//! - `sl2:p`: identity first, then the other matrices [[a,b],[c,d]] in
//!   lexicographic order of (a,b,c,d).
//! - `product(a,b)`: pairs (x,y) at index x·|b| + y.

use super::{Automorphism, Budget, FiniteGroup};
use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// On-disk group format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    pub generators: Vec<u32>,
}

impl From<&FiniteGroup> for GroupFile {
    fn from(g: &FiniteGroup) -> Self {
        GroupFile {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table_rows(),
            generators: g.generators().to_vec(),
        }
    }
}

impl GroupFile {
    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order || self.table.iter().any(|r| r.len() != self.order) {
            return Err(Error::InvalidTable("table is not order × order".into()));
        }
        let flat: Vec<u32> = self.table.into_iter().flatten().collect();
        let g = FiniteGroup::build(&self.name, self.order, flat, Some(self.generators))?;
        g.check_associative()?;
        Ok(g)
    }
}

fn from_law(name: &str, n: usize, law: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(law(x, y) as u32);
        }
    }
    FiniteGroup::from_trusted_table(name, n, table)
}

pub fn cyclic(n: usize) -> FiniteGroup {
    from_law(&format!("cyclic:{n}"), n, |x, y| (x + y) % n)
}

pub fn dihedral(n: usize) -> FiniteGroup {
    from_law(&format!("dihedral:{n}"), 2 * n, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let ik = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        ((j + l) % 2) * n + ik
    })
}

fn permutation_group(name: &str, perms: Vec<Vec<usize>>) -> FiniteGroup {
    let index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    from_law(name, perms.len(), |x, y| {
        let c: Vec<usize> = perms[y].iter().map(|&k| perms[x][k]).collect();
        index[&c]
    })
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

pub fn symmetric(n: usize) -> FiniteGroup {
    let perms = (0..n).permutations(n).collect();
    permutation_group(&format!("symmetric:{n}"), perms)
}

pub fn alternating(n: usize) -> FiniteGroup {
    let perms = (0..n).permutations(n).filter(|p| is_even(p)).collect();
    permutation_group(&format!("alternating:{n}"), perms)
}

/// SL₂(F_p) elements as (a,b,c,d) in canonical order.
pub fn sl2_elements(p: usize) -> Vec<[usize; 4]> {
    let mut out = vec![[1, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 && [a, b, c, d] != [1, 0, 0, 1] {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

pub fn sl2(p: usize) -> FiniteGroup {
    let elems = sl2_elements(p);
    let index: HashMap<[usize; 4], usize> =
        elems.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    from_law(&format!("sl2:{p}"), elems.len(), |x, y| {
        let [a, b, c, d] = elems[x];
        let [e, f, g, h] = elems[y];
        index[&[
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        ]]
    })
}

/// PSL₂(F_p) = SL₂(F_p)/{±1} for odd p.
pub fn psl2(p: usize) -> FiniteGroup {
    let g = sl2(p);
    let minus = sl2_elements(p)
        .iter()
        .position(|m| *m == [p - 1, 0, 0, p - 1])
        .expect("−1 lies in SL₂") as u32;
    let (q, _) = g
        .quotient(&super::Subgroup::new(vec![0, minus]))
        .expect("{±1} is central");
    q.with_name(&format!("psl2:{p}"))
}

/// Conjugation X ↦ M X M⁻¹ on SL₂(F_p) by M ∈ GL₂(F_p).
pub fn sl2_conjugation(p: usize, m: [usize; 4]) -> Result<Automorphism> {
    let [a, b, c, d] = m.map(|v| v % p);
    let det = (a * d + p * p - b * c) % p;
    let det_inv = (1..p).find(|&t| t * det % p == 1).ok_or(Error::NotUnit {
        l: det as u64,
        m: p as u64,
    })?;
    let inv = [
        d * det_inv % p,
        (p - b) * det_inv % p,
        (p - c) * det_inv % p,
        a * det_inv % p,
    ];
    let mul = |x: [usize; 4], y: [usize; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };
    let elems = sl2_elements(p);
    let index: HashMap<[usize; 4], u32> = elems
        .iter()
        .enumerate()
        .map(|(i, x)| (*x, i as u32))
        .collect();
    let map = elems
        .iter()
        .map(|&x| index[&mul(mul([a, b, c, d], x), inv)])
        .collect();
    Ok(Automorphism { map })
}

pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let nb = b.order();
    from_law(
        &format!("product({},{})", a.name(), b.name()),
        a.order() * nb,
        |x, y| {
            let (x1, x2) = (x / nb, x % nb);
            let (y1, y2) = (y / nb, y % nb);
            a.mul(x1 as u32, y1 as u32) as usize * nb + b.mul(x2 as u32, y2 as u32) as usize
        },
    )
}

/// Ψ_{k,l}: r ↦ r^l, s ↦ s r^k on the canonical dihedral ordering.
pub fn dihedral_psi(n: usize, k: i64, l: i64) -> Result<Automorphism> {
    let ln = l.rem_euclid(n as i64) as u64;
    if gcd(ln, n as u64) != 1 {
        return Err(Error::NotUnit { l: ln, m: n as u64 });
    }
    let n_i = n as i64;
    let mut map = vec![0u32; 2 * n];
    for i in 0..n_i {
        map[i as usize] = (l * i).rem_euclid(n_i) as u32;
        // r^{li} · s r^k = r^{li - k} s
        map[(n_i + i) as usize] = (n_i + (l * i - k).rem_euclid(n_i)) as u32;
    }
    Ok(Automorphism { map })
}

fn family_order(family: &str, n: usize) -> Option<u128> {
    let n128 = n as u128;
    Some(match family {
        "cyclic" => n128,
        "dihedral" => 2 * n128,
        "symmetric" | "alternating" => {
            if n > 30 {
                return None;
            }
            let f: u128 = (1..=n128).product();
            if family == "alternating" && n >= 2 {
                f / 2
            } else {
                f
            }
        }
        "sl2" => n128 * (n128 * n128 - 1),
        "psl2" => n128 * (n128 * n128 - 1) / 2,
        _ => return None,
    })
}

pub fn make_group(spec: &str) -> Result<FiniteGroup> {
    make_group_with(spec, &Budget::default())
}

/// Parses a family descriptor and builds the validated group.
pub fn make_group_with(spec: &str, budget: &Budget) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let bad = || Error::InvalidSpec(spec.to_string());
    if let Some(inner) = spec
        .strip_prefix("product(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(bad)?;
        let a = make_group_with(&inner[..i], budget)?;
        let b = make_group_with(&inner[i + 1..], budget)?;
        if a.order() * b.order() > budget.max_group_order {
            return Err(Error::BudgetExceeded(format!(
                "group order {} exceeds {}",
                a.order() * b.order(),
                budget.max_group_order
            )));
        }
        let g = product(&a, &b);
        g.check_associative()?;
        return Ok(g.with_name(spec));
    }
    let (family, arg) = spec.split_once(':').ok_or_else(bad)?;
    if family == "table" {
        let text = std::fs::read_to_string(arg)?;
        let file: GroupFile = serde_json::from_str(&text)?;
        if file.order > budget.max_group_order {
            return Err(Error::BudgetExceeded(format!("group order {}", file.order)));
        }
        return file.into_group();
    }
    let n: usize = arg.trim().parse().map_err(|_| bad())?;
    let order = family_order(family, n).ok_or_else(bad)?;
    if n == 0 || order > budget.max_group_order as u128 {
        return Err(if n == 0 {
            bad()
        } else {
            Error::BudgetExceeded(format!(
                "group order {order} exceeds {}",
                budget.max_group_order
            ))
        });
    }
    let g = match family {
        "cyclic" => cyclic(n),
        "dihedral" => dihedral(n),
        "symmetric" => symmetric(n),
        "alternating" => alternating(n),
        "sl2" if is_prime(n as u64) => sl2(n),
        "psl2" if is_prime(n as u64) && n > 2 => psl2(n),
        _ => return Err(bad()),
    };
    g.check_associative()?;
    Ok(g)
}
