//! Cocentral actions of Z_m on groups, the X_m classification and the
//! exact sequence for automorphisms preserving a central subgroup.

use super::{
    automorphism_group, automorphism_group_with, isomorphic, Automorphism, Budget, Constraint,
    FiniteGroup, Subgroup,
};
use crate::arith::{inv_mod, units};
use crate::cohomology::h2_compute;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

/// Z_m acting through `alpha`, with the dual group embedded as ⟨z⟩.
#[derive(Clone, Debug)]
pub struct CocentralAction {
    pub group: Arc<FiniteGroup>,
    pub m: u64,
    pub z: u32,
    pub alpha: Automorphism,
}

impl CocentralAction {
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let bad = |s: &str| Err(Error::InvalidAction(s.to_string()));
        if g.elem_order(self.z) as u64 != self.m {
            return bad("z does not have order m");
        }
        if !g.generators().iter().all(|&s| g.commutes(s, self.z)) {
            return bad("z is not central");
        }
        if !self.alpha.is_automorphism_of(g) {
            return bad("alpha is not an automorphism");
        }
        if self.alpha.apply(self.z) != self.z {
            return bad("alpha moves z");
        }
        if !self.alpha.pow(self.m as i64).is_identity() {
            return bad("alpha^m is not the identity");
        }
        Ok(())
    }

    pub fn fiber(&self) -> Subgroup {
        self.group.closure(&[self.z])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XmClass {
    pub rep: Automorphism,
    pub members: Vec<Automorphism>,
}

/// The unique subgroup of order m in a cyclic center, with its minimal generator.
pub fn central_cyclic_subgroup(g: &FiniteGroup, m: u64) -> Result<(Subgroup, u32)> {
    let z = g.center();
    let zo = z.order() as u64;
    if !z.elements.iter().any(|&x| g.elem_order(x) as u64 == zo) {
        return Err(Error::CenterNotCyclic);
    }
    if zo % m != 0 {
        return Err(Error::BadFiberOrder(m));
    }
    let t: Vec<u32> = z
        .elements
        .iter()
        .copied()
        .filter(|&x| g.pow(x, m) == g.identity())
        .collect();
    let gen = *t
        .iter()
        .find(|&&x| g.elem_order(x) as u64 == m)
        .expect("cyclic group has a generator");
    Ok((Subgroup::new(t), gen))
}

/// Exponent l with f(z) = z^l.
fn power_on(g: &FiniteGroup, f: &Automorphism, z: u32, m: u64) -> u64 {
    let target = f.apply(z);
    (0..m)
        .find(|&l| g.pow(z, l) == target)
        .expect("f preserves ⟨z⟩")
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Representatives of X_m(G) (or X_m^•(G)): automorphisms α₀ fixing T_m
/// pointwise with α₀^m = id, up to α₀ ~ (f⁻¹α₀f)^{l⁻¹} for f ∈ Aut_{T_m}(G)
/// acting on T_m as the l-th power.
pub fn xm_classes(g: &FiniteGroup, m: u64, bullet_only: bool) -> Result<Vec<XmClass>> {
    xm_classes_with(g, m, bullet_only, &Budget::default())
}

pub fn xm_classes_with(
    g: &FiniteGroup,
    m: u64,
    bullet_only: bool,
    budget: &Budget,
) -> Result<Vec<XmClass>> {
    let (t, z) = central_cyclic_subgroup(g, m)?;
    let aut_t = automorphism_group_with(g, &Constraint::Preserve(t.clone()), budget)?;
    let set: Vec<Automorphism> = aut_t
        .elements()
        .iter()
        .filter(|a| t.elements.iter().all(|&x| a.apply(x) == x))
        .filter(|a| a.pow(m as i64).is_identity())
        .filter(|a| {
            !bullet_only
                || g.elements()
                    .any(|x| !t.contains(g.mul(g.inv(x), a.apply(x))))
        })
        .cloned()
        .collect();
    let index: HashMap<&Automorphism, usize> =
        set.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut parent: Vec<usize> = (0..set.len()).collect();
    for f in aut_t.generator_elements() {
        let l = power_on(g, &f, z, m);
        let linv = inv_mod(l % m, m).expect("f acts invertibly on T");
        let finv = f.inverse();
        for (i, a) in set.iter().enumerate() {
            let b = finv.compose(a).compose(&f).pow(linv as i64);
            let j = index[&b];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Automorphism>> = BTreeMap::new();
    for (i, a) in set.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(a.clone());
    }
    let mut classes: Vec<XmClass> = groups
        .into_values()
        .map(|members| XmClass {
            rep: members[0].clone(),
            members,
        })
        .collect();
    classes.sort_by(|a, b| a.rep.cmp(&b.rep));
    Ok(classes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceMode {
    Strong,
    Weak,
}

/// Witness: the unit l and the map f (on G for strong, H₂ → H₁ for weak).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionWitness {
    pub l: u64,
    pub f: Automorphism,
}

fn induced_on_quotient(a: &Automorphism, proj: &[u32], q: &FiniteGroup) -> Automorphism {
    let mut map = vec![u32::MAX; q.order()];
    for (x, &c) in proj.iter().enumerate() {
        if map[c as usize] == u32::MAX {
            map[c as usize] = proj[a.apply(x as u32) as usize];
        }
    }
    Automorphism { map }
}

pub fn action_equivalence(
    a1: &CocentralAction,
    a2: &CocentralAction,
    mode: EquivalenceMode,
) -> Result<Option<ActionWitness>> {
    if a1.group != a2.group || a1.m != a2.m {
        return Ok(None);
    }
    let g = &a1.group;
    let m = a1.m;
    match mode {
        EquivalenceMode::Strong => {
            let aut = automorphism_group(g, &Constraint::None)?;
            for l in units(m) {
                let z1l = g.pow(a1.z, l);
                let beta_l = a2.alpha.pow(l as i64);
                for f in aut.elements() {
                    if f.apply(a2.z) != z1l {
                        continue;
                    }
                    if a1.alpha.compose(f) == f.compose(&beta_l) {
                        return Ok(Some(ActionWitness { l, f: f.clone() }));
                    }
                }
            }
            Ok(None)
        }
        EquivalenceMode::Weak => {
            let (h1, p1) = g.quotient(&a1.fiber())?;
            let (h2, p2) = g.quotient(&a2.fiber())?;
            let Some(f0) = isomorphic(&h2, &h1) else {
                return Ok(None);
            };
            let abar = induced_on_quotient(&a1.alpha, &p1, &h1);
            let bbar = induced_on_quotient(&a2.alpha, &p2, &h2);
            let aut2 = automorphism_group(&h2, &Constraint::None)?;
            for l in units(m) {
                let bl = bbar.pow(l as i64);
                for h in aut2.elements() {
                    let f = f0.compose(h);
                    if abar.compose(&f) == f.compose(&bl) {
                        return Ok(Some(ActionWitness { l, f }));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// A subgroup as a standalone group, with the embedding of its indices.
pub(crate) fn subgroup_as_group(g: &FiniteGroup, t: &Subgroup) -> (FiniteGroup, Vec<u32>) {
    let pos: HashMap<u32, u32> = t
        .elements
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as u32))
        .collect();
    let n = t.order();
    let mut table = Vec::with_capacity(n * n);
    for &x in &t.elements {
        for &y in &t.elements {
            table.push(pos[&g.mul(x, y)]);
        }
    }
    (
        FiniteGroup::from_trusted_table("subgroup", n, table),
        t.elements.clone(),
    )
}

/// All homomorphisms from `src` into the abelian subgroup `t` of `g`.
fn homs_into(src: &FiniteGroup, g: &FiniteGroup, t: &Subgroup) -> Vec<Vec<u32>> {
    let gens = src.generators().to_vec();
    let mut out = Vec::new();
    let k = gens.len();
    let total = (t.order() as u64).pow(k as u32);
    for code in 0..total {
        let images: Vec<u32> = (0..k)
            .map(|i| {
                t.elements[((code / (t.order() as u64).pow(i as u32)) % t.order() as u64) as usize]
            })
            .collect();
        let mut map = vec![u32::MAX; src.order()];
        map[src.identity() as usize] = g.identity();
        let mut queue = vec![src.identity()];
        let mut ok = true;
        let mut head = 0;
        while head < queue.len() && ok {
            let x = queue[head];
            head += 1;
            for (i, &s) in gens.iter().enumerate() {
                let y = src.mul(x, s);
                let img = g.mul(map[x as usize], images[i]);
                if map[y as usize] == u32::MAX {
                    map[y as usize] = img;
                    queue.push(y);
                } else if map[y as usize] != img {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(map);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutSequenceReport {
    pub hom_count: usize,
    pub kernel_order: usize,
    pub kernel_matches: bool,
    pub h2_order: Option<u64>,
    pub surjective: Option<bool>,
}

/// Checks exactness of 1 → Hom(G/T, T) → Aut_T(G) → Aut(G/T) × Aut(T),
/// and surjectivity on the right when |H²(G/T, T)| ≤ 2 (T cyclic).
pub fn verify_aut_sequence(g: &FiniteGroup, t: &Subgroup) -> Result<AutSequenceReport> {
    let center = g.center();
    if !t.elements.iter().all(|&x| center.contains(x)) || !g.is_subgroup(&t.elements) {
        return Err(Error::NotCentral);
    }
    let (q, proj) = g.quotient(t)?;
    let aut_t = automorphism_group(g, &Constraint::Preserve(t.clone()))?;
    let kernel: HashSet<&Automorphism> = aut_t
        .elements()
        .iter()
        .filter(|a| t.elements.iter().all(|&x| a.apply(x) == x))
        .filter(|a| {
            g.elements()
                .all(|x| proj[a.apply(x) as usize] == proj[x as usize])
        })
        .collect();
    let homs = homs_into(&q, g, t);
    let kernel_matches = homs.len() == kernel.len()
        && homs.iter().all(|chi| {
            let a = Automorphism {
                map: g
                    .elements()
                    .map(|x| g.mul(x, chi[proj[x as usize] as usize]))
                    .collect(),
            };
            kernel.contains(&a)
        });
    let (tg, _) = subgroup_as_group(g, t);
    let mut h2_order = None;
    let mut surjective = None;
    if tg.is_cyclic() && q.order() <= Budget::default().max_h2_order {
        let h = h2_compute(&q, t.order() as u64)?.order();
        h2_order = Some(h);
        if h <= 2 {
            let aut_q = automorphism_group(&q, &Constraint::None)?;
            let aut_tg = automorphism_group(&tg, &Constraint::None)?;
            let image: HashSet<(Vec<u32>, Vec<u32>)> = aut_t
                .elements()
                .iter()
                .map(|a| {
                    let abar = induced_on_quotient(a, &proj, &q);
                    let on_t: Vec<u32> = t.elements.iter().map(|&x| a.apply(x)).collect();
                    (abar.map, on_t)
                })
                .collect();
            surjective = Some(image.len() == aut_q.len() * aut_tg.len());
        }
    }
    Ok(AutSequenceReport {
        hom_count: homs.len(),
        kernel_order: kernel.len(),
        kernel_matches,
        h2_order,
        surjective,
    })
}
