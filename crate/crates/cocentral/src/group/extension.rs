//! Central extensions H ×_τ Z_m.

use super::FiniteGroup;
use crate::cohomology::Cocycle2;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub base: FiniteGroup,
    pub fiber_modulus: u64,
    pub cocycle: Cocycle2,
}

/// The group on pairs (x, t) at index x·m + t with
/// (x, r)·(y, s) = (xy, τ(x,y) + r + s).
pub fn central_extension(spec: &ExtensionSpec) -> Result<FiniteGroup> {
    let h = &spec.base;
    let m = spec.fiber_modulus;
    if spec.cocycle.modulus != m {
        return Err(Error::InvalidCocycle(
            "cocycle modulus differs from fiber".into(),
        ));
    }
    spec.cocycle.check(h)?;
    let n = h.order() * m as usize;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (x, r) = ((a as u64 / m) as u32, a as u64 % m);
        for b in 0..n {
            let (y, s) = ((b as u64 / m) as u32, b as u64 % m);
            let t = (spec.cocycle.get(x, y) + r + s) % m;
            table.push((h.mul(x, y) as u64 * m + t) as u32);
        }
    }
    let name = format!("{}x_tau{}", h.name(), m);
    Ok(FiniteGroup::from_trusted_table(&name, n, table))
}

#[cfg(test)]
mod tests {
    use super::super::{cyclic, isomorphic, product, Subgroup};
    use super::*;

    #[test]
    fn z2_extensions() {
        let base = cyclic(2);
        let trivial = ExtensionSpec {
            base: base.clone(),
            fiber_modulus: 2,
            cocycle: Cocycle2::zero(2, 2),
        };
        let g = central_extension(&trivial).unwrap();
        assert!(isomorphic(&g, &product(&cyclic(2), &cyclic(2))).is_some());
        let twisted = ExtensionSpec {
            base,
            fiber_modulus: 2,
            cocycle: Cocycle2::from_fn(2, 2, |x, y| u64::from(x == 1 && y == 1)),
        };
        let g = central_extension(&twisted).unwrap();
        assert!(g.is_cyclic());
        let (q, _) = g.quotient(&Subgroup::new(vec![0, 1])).unwrap();
        assert_eq!(q.order(), 2);
    }
}
