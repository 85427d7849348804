//! On-disk cache of automorphism groups and cohomology representatives.
//!
//! Entries are keyed by a SHA-256 of the group table and a computation tag,
//! stamped with the engine version, and revalidated on every load.

use cocentral::cohomology::Cocycle2;
use cocentral::group::{Automorphism, FiniteGroup};
use cocentral::mdata::DatumPool;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+pool1");

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    engine_version: String,
    key: String,
    tag: String,
    payload: T,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> std::io::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn key(g: &FiniteGroup, tag: &str) -> String {
        let mut h = Sha256::new();
        h.update(g.canonical_bytes());
        h.update([0u8]);
        h.update(tag.as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The cached payload, if present, current and accepted by `valid`.
    pub fn load<T: DeserializeOwned>(
        &self,
        g: &FiniteGroup,
        tag: &str,
        valid: impl Fn(&T) -> bool,
    ) -> Option<T> {
        let key = Self::key(g, tag);
        let text = std::fs::read_to_string(self.path(&key)).ok()?;
        let entry: Entry<T> = serde_json::from_str(&text).ok()?;
        (entry.engine_version == ENGINE_VERSION
            && entry.key == key
            && entry.tag == tag
            && valid(&entry.payload))
        .then_some(entry.payload)
    }

    pub fn store<T: Serialize>(
        &self,
        g: &FiniteGroup,
        tag: &str,
        payload: &T,
    ) -> std::io::Result<()> {
        let key = Self::key(g, tag);
        let entry = Entry {
            engine_version: ENGINE_VERSION.to_string(),
            key: key.clone(),
            tag: tag.to_string(),
            payload,
        };
        let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        std::fs::rename(tmp, self.path(&key))
    }
}

#[derive(Serialize, Deserialize)]
pub struct PoolPayload {
    pub aut: Vec<Automorphism>,
    pub theta_reps: Vec<Automorphism>,
    pub taus: Vec<Cocycle2>,
}

impl PoolPayload {
    pub fn from_pool(p: &DatumPool) -> Self {
        PoolPayload {
            aut: p.aut.clone(),
            theta_reps: p.theta_reps.clone(),
            taus: p.taus.clone(),
        }
    }

    pub fn into_pool(self) -> DatumPool {
        DatumPool {
            aut: self.aut,
            theta_reps: self.theta_reps,
            taus: self.taus,
        }
    }

    /// Bijectivity and f(s·y) = f(s)·f(y) for generators s and all y,
    /// which together force a homomorphism; cocycle identities for τ.
    pub fn is_valid_for(&self, g: &FiniteGroup) -> bool {
        let n = g.order();
        let is_aut = |f: &Automorphism| {
            if f.map.len() != n {
                return false;
            }
            let mut seen = vec![false; n];
            for &x in &f.map {
                if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                    return false;
                }
            }
            g.generators().iter().all(|&s| {
                g.elements()
                    .all(|y| f.apply(g.mul(s, y)) == g.mul(f.apply(s), f.apply(y)))
            })
        };
        self.aut.iter().all(is_aut)
            && self.theta_reps.iter().all(|t| self.aut.contains(t))
            && self.taus.iter().all(|t| t.check(g).is_ok())
    }
}
