use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Representation;
use crate::error::Result;
use crate::homology::{MinimalResolution, OnsetResult, PdResult};
use crate::repmod::SearchOptions;

/// Run-wide settings. Every randomized step draws from a generator seeded
/// with `seed`, so results depend only on the inputs and this struct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub random_trials: usize,
    pub enumeration_budget: u64,
    /// Default degree cutoff `K`.
    pub cutoff: usize,
    /// Default coresolution length.
    pub maxlen: usize,
    /// Recompute every Ext table by the stable-hom route and compare.
    pub cross_check: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, random_trials: 32, enumeration_budget: 4096, cutoff: 20, maxlen: 8, cross_check: true }
    }
}

type OnsetKey = ([u8; 32], [u8; 32], usize);

/// Shared computation context: configuration plus the resolution memo.
pub struct Engine {
    config: Config,
    resolutions: Mutex<HashMap<[u8; 32], Arc<MinimalResolution>>>,
    dimensions: Mutex<HashMap<([u8; 32], usize), PdResult>>,
    onsets: Mutex<HashMap<OnsetKey, OnsetResult>>,
    cache_dir: Option<PathBuf>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Config::default())
    }
}

impl Engine {
    /// The on-disk store is enabled by `EXTBOUND_CACHE_DIR`.
    pub fn new(config: Config) -> Self {
        let cache_dir = std::env::var_os("EXTBOUND_CACHE_DIR").map(PathBuf::from);
        Engine {
            config,
            resolutions: Mutex::new(HashMap::new()),
            dimensions: Mutex::new(HashMap::new()),
            onsets: Mutex::new(HashMap::new()),
            cache_dir,
        }
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions { random_trials: self.config.random_trials, enumeration_budget: self.config.enumeration_budget }
    }

    /// A fresh generator for one top-level randomized call.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed)
    }

    /// Minimal resolution of `m` with at least the terms `P_0..P_len`
    /// (fewer if it terminates). Extends and republishes cached ones.
    pub fn resolution(&self, m: &Representation, len: usize) -> Result<Arc<MinimalResolution>> {
        let key = m.digest();
        let cached = self.resolutions.lock().expect("memo lock").get(&key).cloned();
        let cached = match cached {
            Some(r) => Some(r),
            None => self.load_from_disk(m, &key).map(Arc::new),
        };
        if let Some(r) = &cached {
            if r.covers(len) {
                return Ok(r.clone());
            }
        }
        let mut res = match cached {
            Some(r) => (*r).clone(),
            None => MinimalResolution::new(m),
        };
        res.extend_to(len)?;
        let res = Arc::new(res);
        self.resolutions.lock().expect("memo lock").insert(key, res.clone());
        self.store_to_disk(&res, &key);
        Ok(res)
    }

    pub(crate) fn cached_pd(&self, m: &Representation, cutoff: usize) -> Option<PdResult> {
        self.dimensions.lock().expect("memo lock").get(&(m.digest(), cutoff)).cloned()
    }

    pub(crate) fn store_pd(&self, m: &Representation, cutoff: usize, r: &PdResult) {
        self.dimensions.lock().expect("memo lock").insert((m.digest(), cutoff), r.clone());
    }

    pub(crate) fn cached_onset(&self, m: &Representation, n: &Representation, cutoff: usize) -> Option<OnsetResult> {
        self.onsets.lock().expect("memo lock").get(&(m.digest(), n.digest(), cutoff)).cloned()
    }

    pub(crate) fn store_onset(&self, m: &Representation, n: &Representation, cutoff: usize, r: &OnsetResult) {
        self.onsets.lock().expect("memo lock").insert((m.digest(), n.digest(), cutoff), r.clone());
    }

    fn cache_path(&self, key: &[u8; 32]) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("{}.json", hex::encode(key))))
    }

    fn load_from_disk(&self, m: &Representation, key: &[u8; 32]) -> Option<MinimalResolution> {
        let text = std::fs::read_to_string(self.cache_path(key)?).ok()?;
        // A corrupt or stale entry is ignored and recomputed.
        MinimalResolution::from_cache_json(m, &text).ok()
    }

    fn store_to_disk(&self, res: &MinimalResolution, key: &[u8; 32]) {
        if let Some(path) = self.cache_path(key) {
            if let Some(dir) = path.parent() {
                let _ = std::fs::create_dir_all(dir);
            }
            let tmp = path.with_extension("tmp");
            if std::fs::write(&tmp, res.to_cache_json()).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }
}
