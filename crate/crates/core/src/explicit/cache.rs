//! Per-zero quantities `1/zeta'(1/2 + i g)` and `zeta(-1/2 + i g)/zeta'(1/2 + i g)`.
//!
//! Evaluating `zeta'` at ten thousand heights dominates the Moebius and phi
//! reconstructions, so the values are kept in memory and, when a directory is
//! configured, in two text sidecars of `index re im` lines:
//!
//! ```text
//! <stem>-<hash16>.inv_zeta_prime.txt
//! <stem>-<hash16>.phi_ratio.txt
//! ```
//!
//! `hash16` is the first 16 hex digits of the zero table's digest, so a
//! changed zeros file never picks up stale values.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::special::EvalParams;
use crate::zeros::ZeroTable;

/// Environment variable that overrides the sidecar directory.
pub const CACHE_DIR_ENV: &str = "ZETA_EXPLICIT_CACHE_DIR";

/// `|zeta'(1/2 + i g)|` below this is treated as a failure of simplicity.
pub const MIN_DERIVATIVE: f64 = 1e-3;

const INV_SUFFIX: &str = "inv_zeta_prime";
const RATIO_SUFFIX: &str = "phi_ratio";

/// Cached values for the first `len()` zeros of one table.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Residues {
    pub inv_deriv: Vec<Complex64>,
    pub phi_ratio: Vec<Complex64>,
}

impl Residues {
    pub fn len(&self) -> usize {
        self.inv_deriv.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv_deriv.is_empty()
    }

    /// Fails on the first of the leading `k` zeros whose derivative is
    /// below [`MIN_DERIVATIVE`].
    pub fn check_simple(&self, k: usize) -> Result<()> {
        for (index, inv) in self.inv_deriv.iter().take(k).enumerate() {
            let modulus = 1.0 / inv.norm();
            if !(modulus >= MIN_DERIVATIVE) {
                return Err(Error::DerivativeTooSmall { index, modulus });
            }
        }
        Ok(())
    }
}

/// Both residues at one ordinate.
pub fn residues_at(eval: &EvalParams, gamma: f64) -> Result<(Complex64, Complex64)> {
    let d = eval.zeta_prime(Complex64::new(0.5, gamma))?;
    let inv = d.inv();
    let z = eval.zeta(Complex64::new(-0.5, gamma))?;
    Ok((inv, z * inv))
}

/// Thread-safe cache: concurrent readers, one writer extending an entry.
#[derive(Debug)]
pub struct ResidueCache {
    dir: Option<PathBuf>,
    stem: String,
    eval: EvalParams,
    entries: RwLock<HashMap<String, Arc<Residues>>>,
}

impl ResidueCache {
    /// Memory-only cache.
    pub fn in_memory(eval: EvalParams) -> Self {
        Self {
            dir: None,
            stem: "zeros".into(),
            eval,
            entries: RwLock::new(HashMap::new()),
        }
    }

    /// Cache persisted under `dir` with file names starting with `stem`.
    pub fn persistent(dir: impl Into<PathBuf>, stem: impl Into<String>, eval: EvalParams) -> Self {
        Self {
            dir: Some(dir.into()),
            stem: stem.into(),
            eval,
            entries: RwLock::new(HashMap::new()),
        }
    }

    /// Sidecar cache for a zeros file: next to the file, unless
    /// `ZETA_EXPLICIT_CACHE_DIR` names another directory.
    pub fn for_zeros_file(path: &Path, eval: EvalParams) -> Self {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "zeros".into());
        let dir = match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => PathBuf::from(d),
            _ => path
                .parent()
                .map(Path::to_path_buf)
                .unwrap_or_else(|| PathBuf::from(".")),
        };
        Self::persistent(dir, stem, eval)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn eval_params(&self) -> &EvalParams {
        &self.eval
    }

    /// Path of one sidecar for `table`, if persistence is on.
    pub fn sidecar_path(&self, table: &ZeroTable, inverse: bool) -> Option<PathBuf> {
        let suffix = if inverse { INV_SUFFIX } else { RATIO_SUFFIX };
        self.dir.as_ref().map(|d| {
            d.join(format!(
                "{}-{}.{suffix}.txt",
                self.stem,
                &table.digest()[..16]
            ))
        })
    }

    /// Residues for at least the first `min(k, table.count())` zeros.
    pub fn get(&self, table: &ZeroTable, k: usize) -> Result<Arc<Residues>> {
        let want = k.min(table.count());
        let key = table.digest().to_string();
        {
            let map = self.entries.read().expect("cache lock poisoned");
            if let Some(e) = map.get(&key) {
                if e.len() >= want {
                    return Ok(Arc::clone(e));
                }
            }
        }

        let mut map = self.entries.write().expect("cache lock poisoned");
        if let Some(e) = map.get(&key) {
            if e.len() >= want {
                return Ok(Arc::clone(e));
            }
        }
        let mut current = match map.get(&key) {
            Some(e) => (**e).clone(),
            None => self.load(table),
        };
        if current.len() < want {
            let start = current.len();
            let fresh: Vec<(Complex64, Complex64)> = table.ordinates()[start..want]
                .par_iter()
                .map(|&g| residues_at(&self.eval, g))
                .collect::<Result<_>>()?;
            for (inv, ratio) in fresh {
                current.inv_deriv.push(inv);
                current.phi_ratio.push(ratio);
            }
            self.store(table, &current)?;
        }
        let entry = Arc::new(current);
        map.insert(key, Arc::clone(&entry));
        Ok(entry)
    }

    /// Reads whatever consistent prefix the sidecars hold; missing or damaged
    /// files count as empty.
    fn load(&self, table: &ZeroTable) -> Residues {
        let (Some(inv_path), Some(ratio_path)) = (
            self.sidecar_path(table, true),
            self.sidecar_path(table, false),
        ) else {
            return Residues::default();
        };
        let inv = read_sidecar(&inv_path);
        let ratio = read_sidecar(&ratio_path);
        let n = inv.len().min(ratio.len()).min(table.count());
        Residues {
            inv_deriv: inv[..n].to_vec(),
            phi_ratio: ratio[..n].to_vec(),
        }
    }

    fn store(&self, table: &ZeroTable, r: &Residues) -> Result<()> {
        let (Some(inv_path), Some(ratio_path)) = (
            self.sidecar_path(table, true),
            self.sidecar_path(table, false),
        ) else {
            return Ok(());
        };
        if let Some(dir) = inv_path.parent() {
            fs::create_dir_all(dir).map_err(|e| Error::Cache {
                path: dir.to_path_buf(),
                reason: e.to_string(),
            })?;
        }
        write_sidecar(&inv_path, &r.inv_deriv)?;
        write_sidecar(&ratio_path, &r.phi_ratio)
    }
}

fn read_sidecar(path: &Path) -> Vec<Complex64> {
    let Ok(text) = fs::read_to_string(path) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for line in text.lines() {
        let mut it = line.split_ascii_whitespace();
        let parsed = (|| {
            let idx: usize = it.next()?.parse().ok()?;
            let re: f64 = it.next()?.parse().ok()?;
            let im: f64 = it.next()?.parse().ok()?;
            if it.next().is_some() || idx != out.len() || !re.is_finite() || !im.is_finite() {
                return None;
            }
            Some(Complex64::new(re, im))
        })();
        match parsed {
            Some(z) => out.push(z),
            None => break,
        }
    }
    out
}

fn write_sidecar(path: &Path, values: &[Complex64]) -> Result<()> {
    let mut text = String::with_capacity(values.len() * 48);
    for (i, z) in values.iter().enumerate() {
        let _ = writeln!(text, "{i} {:e} {:e}", z.re, z.im);
    }
    let tmp = path.with_extension("txt.tmp");
    let fail = |e: std::io::Error| Error::Cache {
        path: path.to_path_buf(),
        reason: e.to_string(),
    };
    fs::write(&tmp, text).map_err(fail)?;
    fs::rename(&tmp, path).map_err(fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::parse_zeros_str;

    const FIVE: &str = "14.134725142\n21.022039639\n25.010857580\n30.424876126\n32.935061588\n";

    #[test]
    fn first_zero_derivative() {
        let (inv, _) = residues_at(&EvalParams::default(), 14.134725142).unwrap();
        let d = inv.inv();
        // zeta'(rho_1) = 0.78330 + 0.12470 i
        assert!((d.re - 0.783_296_511_867).abs() < 1e-8, "{d}");
        assert!((d.im - 0.124_699_829_748).abs() < 1e-8, "{d}");
    }

    #[test]
    fn memory_cache_extends() {
        let t = parse_zeros_str(FIVE).unwrap();
        let c = ResidueCache::in_memory(EvalParams::default());
        let a = c.get(&t, 2).unwrap();
        assert_eq!(a.len(), 2);
        let b = c.get(&t, 5).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(a.inv_deriv[..], b.inv_deriv[..2]);
        assert!(c.get(&t, 3).unwrap().len() >= 3);
        b.check_simple(5).unwrap();
    }

    #[test]
    fn sidecar_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let t = parse_zeros_str(FIVE).unwrap();
        let c = ResidueCache::persistent(dir.path(), "z", EvalParams::default());
        let first = c.get(&t, 5).unwrap();
        let path = c.sidecar_path(&t, true).unwrap();
        assert!(path.exists());
        assert!(path
            .file_name()
            .unwrap()
            .to_string_lossy()
            .starts_with(&format!("z-{}", &t.digest()[..16])));

        let again = ResidueCache::persistent(dir.path(), "z", EvalParams::default());
        let second = again.get(&t, 5).unwrap();
        assert_eq!(*first, *second);
    }

    #[test]
    fn damaged_sidecar_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let t = parse_zeros_str(FIVE).unwrap();
        let c = ResidueCache::persistent(dir.path(), "z", EvalParams::default());
        let good = c.get(&t, 5).unwrap();
        fs::write(c.sidecar_path(&t, true).unwrap(), "0 1 2\nnot a line\n").unwrap();
        let c2 = ResidueCache::persistent(dir.path(), "z", EvalParams::default());
        let r = c2.get(&t, 5).unwrap();
        assert_eq!(r.inv_deriv[1..], good.inv_deriv[1..]);
    }
}
