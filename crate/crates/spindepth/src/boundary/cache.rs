//! Disk and memory cache for boundary curves.
//!
//! Large-J sweeps are the expensive part of a depth search, so finished
//! curves are cached keyed by (2J, kind, grid hash). The file format is
//! versioned JSON; all reals round-trip losslessly. Writing goes through a
//! temporary file plus rename, so a single writer and many readers can
//! share a cache directory.

use super::{
    compute_f_curve, compute_g_curve_halfinteger, g_from_f, BoundaryCurve, BoundaryError,
    CurveConfig, CurveKind, CurveProvenance, CurveSample,
};
use crate::spin::SpinLength;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CurveFile {
    version: u32,
    two_j: u32,
    kind: CurveKind,
    provenance: CurveProvenance,
    grid_hash: String,
    samples: Vec<CurveSample>,
}

/// Serialize a curve to the versioned JSON cache format.
pub fn curve_to_json(curve: &BoundaryCurve) -> Result<String, BoundaryError> {
    let file = CurveFile {
        version: FORMAT_VERSION,
        two_j: curve.j.two_j(),
        kind: curve.kind,
        provenance: curve.provenance,
        grid_hash: format!("{:016x}", curve.grid_hash),
        samples: curve.samples.clone(),
    };
    Ok(serde_json::to_string(&file)?)
}

/// Parse a curve from the JSON cache format, re-validating invariants.
pub fn curve_from_json(text: &str) -> Result<BoundaryCurve, BoundaryError> {
    let file: CurveFile = serde_json::from_str(text)?;
    let j = SpinLength::from_two_j(file.two_j).map_err(BoundaryError::Eigensolver)?;
    let hash = u64::from_str_radix(&file.grid_hash, 16).unwrap_or(0);
    BoundaryCurve::new(j, file.kind, file.samples, file.provenance, hash)
}

/// Compute-or-load provider of boundary curves with an in-memory layer and
/// an optional on-disk layer.
pub struct CurveCache {
    config: CurveConfig,
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<(u32, CurveKind), Arc<BoundaryCurve>>>,
    /// Number of fresh sweeps performed (cache misses), for diagnostics.
    computed: Mutex<u64>,
    /// Points per half-integer curve when that path is enabled.
    pub half_integer_points: usize,
}

impl CurveCache {
    pub fn new(config: CurveConfig) -> Self {
        CurveCache {
            config,
            dir: None,
            mem: Mutex::new(HashMap::new()),
            computed: Mutex::new(0),
            half_integer_points: 161,
        }
    }

    pub fn with_dir(config: CurveConfig, dir: impl Into<PathBuf>) -> Self {
        let mut cache = Self::new(config);
        cache.dir = Some(dir.into());
        cache
    }

    pub fn config(&self) -> &CurveConfig {
        &self.config
    }

    /// How many curves were computed from scratch (not served from cache).
    pub fn computed_count(&self) -> u64 {
        *self.computed.lock().unwrap()
    }

    fn file_path(&self, two_j: u32, kind: CurveKind, hash: u64) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("curve-{two_j}-{kind}-{hash:016x}.json")))
    }

    fn load_disk(&self, two_j: u32, kind: CurveKind, hash: u64) -> Option<BoundaryCurve> {
        let path = self.file_path(two_j, kind, hash)?;
        let text = std::fs::read_to_string(path).ok()?;
        match curve_from_json(&text) {
            Ok(curve) if curve.grid_hash == hash && curve.kind == kind => Some(curve),
            _ => None,
        }
    }

    fn store_disk(&self, curve: &BoundaryCurve) -> Result<(), BoundaryError> {
        if let Some(path) = self.file_path(curve.j.two_j(), curve.kind, curve.grid_hash) {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            let tmp = path.with_extension("json.tmp");
            std::fs::write(&tmp, curve_to_json(curve)?)?;
            std::fs::rename(&tmp, &path)?;
        }
        Ok(())
    }

    fn get(
        &self,
        j: SpinLength,
        kind: CurveKind,
        hash: u64,
        compute: impl FnOnce(&Self) -> Result<BoundaryCurve, BoundaryError>,
    ) -> Result<Arc<BoundaryCurve>, BoundaryError> {
        let key = (j.two_j(), kind);
        if let Some(curve) = self.mem.lock().unwrap().get(&key) {
            return Ok(Arc::clone(curve));
        }
        let curve = if let Some(curve) = self.load_disk(j.two_j(), kind, hash) {
            curve
        } else {
            let mut curve = compute(self)?;
            curve.grid_hash = hash;
            *self.computed.lock().unwrap() += 1;
            self.store_disk(&curve)?;
            curve
        };
        let arc = Arc::new(curve);
        self.mem.lock().unwrap().insert(key, Arc::clone(&arc));
        Ok(arc)
    }

    /// F curve for integer J.
    pub fn get_f(&self, j: SpinLength) -> Result<Arc<BoundaryCurve>, BoundaryError> {
        let hash = self.config.grid_hash(j.two_j(), CurveKind::F);
        self.get(j, CurveKind::F, hash, |cache| {
            compute_f_curve(j, &cache.config)
        })
    }

    /// G curve for integer J (derived from the cached F curve).
    pub fn get_g(&self, j: SpinLength) -> Result<Arc<BoundaryCurve>, BoundaryError> {
        let hash = self.config.grid_hash(j.two_j(), CurveKind::G);
        self.get(j, CurveKind::G, hash, |cache| {
            let f = cache.get_f(j)?;
            Ok(g_from_f(&f))
        })
    }

    /// G curve for half-integer J via the two-parameter minimization.
    pub fn get_g_halfinteger(&self, j: SpinLength) -> Result<Arc<BoundaryCurve>, BoundaryError> {
        let points = self.half_integer_points;
        let hash = super::fnv1a(
            format!("halfint|{}|{}|{}|{:e}", CurveKind::G, j.two_j(), points, 0.998).as_bytes(),
        );
        self.get(j, CurveKind::G, hash, move |_| {
            compute_g_curve_halfinteger(j, points, 0.998)
        })
    }

    /// F curve for half-integer J via the two-parameter minimization.
    pub fn get_f_halfinteger(&self, j: SpinLength) -> Result<Arc<BoundaryCurve>, BoundaryError> {
        let points = self.half_integer_points;
        let hash = super::fnv1a(
            format!("halfint|{}|{}|{}|{:e}", CurveKind::F, j.two_j(), points, 0.998).as_bytes(),
        );
        self.get(j, CurveKind::F, hash, move |_| {
            super::compute_f_curve_halfinteger(j, points, 0.998)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_preserves_samples_exactly() {
        let curve = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();
        let text = curve_to_json(&curve).unwrap();
        let back = curve_from_json(&text).unwrap();
        assert_eq!(back.samples.len(), curve.samples.len());
        for (a, b) in curve.samples.iter().zip(&back.samples) {
            assert_eq!(a.lambda.to_bits(), b.lambda.to_bits());
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.value.to_bits(), b.value.to_bits());
            assert_eq!(a.derivative.to_bits(), b.derivative.to_bits());
        }
        assert_eq!(back.grid_hash, curve.grid_hash);
    }

    #[test]
    fn disk_cache_hit_skips_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let j = SpinLength::ONE;
        {
            let cache = CurveCache::with_dir(CurveConfig::default(), dir.path());
            cache.get_g(j).unwrap();
            assert_eq!(cache.computed_count(), 2); // F sweep + derived G
        }
        {
            let cache = CurveCache::with_dir(CurveConfig::default(), dir.path());
            let g = cache.get_g(j).unwrap();
            assert_eq!(cache.computed_count(), 0);
            assert!(g.samples.len() > 10);
        }
    }

    #[test]
    fn memory_layer_returns_same_arc() {
        let cache = CurveCache::new(CurveConfig::default());
        let a = cache.get_f(SpinLength::ONE).unwrap();
        let b = cache.get_f(SpinLength::ONE).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.computed_count(), 1);
    }
}
