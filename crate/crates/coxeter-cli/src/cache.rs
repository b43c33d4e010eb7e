//! On-disk cache of vertex orbits.
//!
//! One JSON file per (family, rank, vertex type, crate version), holding the
//! sorted orbit vectors plus a checksum. A cache hit returns exactly the
//! bytes a recomputation would produce; any corruption (unparsable file, key
//! mismatch, checksum failure) is reported on stderr and repaired by
//! recomputing and overwriting.

use anyhow::{Context, Result};
use coxeter_complex::geometry::vertex_orbit;
use coxeter_complex::Realization;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const CACHE_ENV_VAR: &str = "COXETER_CACHE_DIR";

/// Resolved cache location: explicit flag wins over the environment
/// variable; neither means caching is disabled.
pub fn resolve_cache_dir(flag: Option<PathBuf>, no_cache: bool) -> Option<PathBuf> {
    if no_cache {
        return None;
    }
    flag.or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from))
}

#[derive(Serialize, Deserialize)]
struct OrbitCacheFile {
    family: String,
    rank: usize,
    vertex_type: usize,
    version: String,
    checksum: String,
    vectors: Vec<Vec<i64>>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn vectors_checksum(vectors: &[Vec<i64>]) -> String {
    let serialized = serde_json::to_string(vectors).expect("vector serialization");
    format!("{:016x}", fnv1a64(serialized.as_bytes()))
}

fn cache_file_name(real: &Realization, vertex_type: usize) -> String {
    format!(
        "orbit_{}_t{}_v{}.json",
        real.name().to_lowercase(),
        vertex_type,
        env!("CARGO_PKG_VERSION")
    )
}

fn compute_sorted_orbit(real: &Realization, vertex_type: usize) -> Result<Vec<Vec<i64>>> {
    let orbit = vertex_orbit(real, vertex_type)?;
    let mut vectors: Vec<Vec<i64>> = orbit.iter().map(|r| r.coords().to_vec()).collect();
    vectors.sort_unstable();
    Ok(vectors)
}

fn try_load(path: &Path, real: &Realization, vertex_type: usize) -> Option<Vec<Vec<i64>>> {
    let bytes = std::fs::read(path).ok()?;
    let file: OrbitCacheFile = match serde_json::from_slice(&bytes) {
        Ok(f) => f,
        Err(e) => {
            eprintln!(
                "warning: cache file {} is unreadable ({e}); recomputing",
                path.display()
            );
            return None;
        }
    };
    let expected_version = env!("CARGO_PKG_VERSION");
    if file.family != format!("{:?}", real.family())
        || file.rank != real.rank()
        || file.vertex_type != vertex_type
        || file.version != expected_version
    {
        eprintln!(
            "warning: cache file {} is keyed for a different orbit or version; recomputing",
            path.display()
        );
        return None;
    }
    if file.checksum != vectors_checksum(&file.vectors) {
        eprintln!(
            "warning: cache file {} failed its checksum; recomputing",
            path.display()
        );
        return None;
    }
    Some(file.vectors)
}

fn store(path: &Path, real: &Realization, vertex_type: usize, vectors: &[Vec<i64>]) -> Result<()> {
    let file = OrbitCacheFile {
        family: format!("{:?}", real.family()),
        rank: real.rank(),
        vertex_type,
        version: env!("CARGO_PKG_VERSION").to_string(),
        checksum: vectors_checksum(vectors),
        vectors: vectors.to_vec(),
    };
    let mut body = serde_json::to_string_pretty(&file)?;
    body.push('\n');
    std::fs::write(path, body)
        .with_context(|| format!("writing cache file {}", path.display()))?;
    Ok(())
}

/// Loads the orbit from cache or computes it, storing the result when a
/// cache directory is configured. The returned vectors are always sorted,
/// so cached and uncached runs produce identical output.
pub fn orbit_vectors(
    real: &Realization,
    vertex_type: usize,
    cache_dir: Option<&Path>,
) -> Result<Vec<Vec<i64>>> {
    let Some(dir) = cache_dir else {
        return compute_sorted_orbit(real, vertex_type);
    };
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating cache directory {}", dir.display()))?;
    let path = dir.join(cache_file_name(real, vertex_type));
    if path.exists() {
        if let Some(vectors) = try_load(&path, real, vertex_type) {
            return Ok(vectors);
        }
    }
    let vectors = compute_sorted_orbit(real, vertex_type)?;
    store(&path, real, vertex_type, &vectors)?;
    Ok(vectors)
}
