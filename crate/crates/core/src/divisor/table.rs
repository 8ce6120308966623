//! Sieved divisor counts with prefix sums, and their binary cache file.

use crate::error::{Error, Result};
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

/// Largest sieve accepted by [`divisor_sieve`].
pub const SIEVE_CEILING: u64 = 100_000_000;

/// Environment variable naming the sieve cache file.
pub const CACHE_ENV: &str = "EXPLICIT_INGHAM_CACHE";

const CACHE_MAGIC: &[u8; 8] = b"EIDIVTAB";
const CACHE_VERSION: u32 = 1;

/// `d(n)` for `1 <= n <= limit` with running sums of `d` and `d^2`.
///
/// Index 0 holds zero in every array so that `d(n)` sits at index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorTable {
    limit: u64,
    d: Vec<u32>,
    prefix: Vec<u64>,
    prefix_sq: Vec<u64>,
}

/// Sieve `d(n)` for `n <= n_max` by incrementing multiples.
pub fn divisor_sieve(n_max: u64) -> Result<DivisorTable> {
    if n_max == 0 {
        return Err(Error::Domain("sieve limit must be at least 1".into()));
    }
    if n_max > SIEVE_CEILING {
        return Err(Error::LimitExceeded {
            requested: n_max,
            ceiling: SIEVE_CEILING,
        });
    }
    let n = n_max as usize;
    let mut d = vec![0u32; n + 1];
    for k in 1..=n {
        let mut m = k;
        while m <= n {
            d[m] += 1;
            m += k;
        }
    }
    Ok(DivisorTable::from_counts(d))
}

impl DivisorTable {
    fn from_counts(d: Vec<u32>) -> Self {
        let mut prefix = Vec::with_capacity(d.len());
        let mut prefix_sq = Vec::with_capacity(d.len());
        let (mut s, mut s2) = (0u64, 0u64);
        for &v in &d {
            s += v as u64;
            s2 += (v as u64) * (v as u64);
            prefix.push(s);
            prefix_sq.push(s2);
        }
        DivisorTable {
            limit: (d.len() - 1) as u64,
            d,
            prefix,
            prefix_sq,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `d(n)`; panics outside `1..=limit`.
    pub fn d(&self, n: u64) -> u32 {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside the table");
        self.d[n as usize]
    }

    /// `d(1), ..., d(limit)`.
    pub fn counts(&self) -> &[u32] {
        &self.d[1..]
    }

    /// `sum_{n <= m} d(n)`.
    pub fn prefix(&self, m: u64) -> u64 {
        self.prefix[m.min(self.limit) as usize]
    }

    /// `sum_{n <= m} d(n)^2`.
    pub fn prefix_sq(&self, m: u64) -> u64 {
        self.prefix_sq[m.min(self.limit) as usize]
    }

    /// Write the table as magic, version, limit and little-endian `u32` counts.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::with_capacity(20 + 4 * self.limit as usize);
        buf.extend_from_slice(CACHE_MAGIC);
        buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        buf.extend_from_slice(&self.limit.to_le_bytes());
        for &v in self.counts() {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        let tmp = path.with_extension("tmp");
        fs::File::create(&tmp)?.write_all(&buf)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Read a table written by [`DivisorTable::save`].
    pub fn load(path: &Path) -> Result<Self> {
        let mut raw = Vec::new();
        fs::File::open(path)?.read_to_end(&mut raw)?;
        if raw.len() < 20 || &raw[..8] != CACHE_MAGIC {
            return Err(Error::Parse(format!(
                "{} is not a divisor cache",
                path.display()
            )));
        }
        let version = u32::from_le_bytes(raw[8..12].try_into().expect("4 bytes"));
        if version != CACHE_VERSION {
            return Err(Error::Parse(format!("unsupported cache version {version}")));
        }
        let limit = u64::from_le_bytes(raw[12..20].try_into().expect("8 bytes"));
        let payload = &raw[20..];
        if limit == 0 || limit > SIEVE_CEILING || payload.len() as u64 != 4 * limit {
            return Err(Error::Parse(format!(
                "cache length does not match limit {limit}"
            )));
        }
        let mut d = Vec::with_capacity(limit as usize + 1);
        d.push(0);
        d.extend(
            payload
                .chunks_exact(4)
                .map(|c| u32::from_le_bytes(c.try_into().expect("4 bytes"))),
        );
        Ok(DivisorTable::from_counts(d))
    }

    /// Table with `limit >= n_max`, read from `cache` when it holds a large
    /// enough table and sieved (then written back) otherwise.
    pub fn load_or_build(n_max: u64, cache: Option<&Path>) -> Result<Self> {
        if let Some(path) = cache {
            if let Ok(t) = DivisorTable::load(path) {
                if t.limit >= n_max {
                    return Ok(t);
                }
            }
            let t = divisor_sieve(n_max)?;
            t.save(path)?;
            return Ok(t);
        }
        divisor_sieve(n_max)
    }
}

/// Cache path from [`CACHE_ENV`], if set and non-empty.
pub fn cache_path_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}
