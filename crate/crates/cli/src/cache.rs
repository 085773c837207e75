//! Binary face-poset cache keyed by (kind, n, schema version).
//!
//! Cache files live in one directory and are written atomically
//! (temp file + rename). A file that fails to parse is ignored and
//! rebuilt with a warning; it never aborts the run.

use std::fs;
use std::path::{Path, PathBuf};

use anpoly::trees::{FacePoset, TreeKind, SCHEMA_VERSION};
use anyhow::{Context, Result};

pub struct PosetCache {
    dir: Option<PathBuf>,
}

impl PosetCache {
    /// `None` disables caching entirely.
    pub fn new(dir: Option<PathBuf>) -> Self {
        PosetCache { dir }
    }

    fn path(&self, kind: TreeKind, n: usize) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("poset-{kind}{n}-v{SCHEMA_VERSION}.bin")))
    }

    pub fn load_or_build(&self, kind: TreeKind, n: usize) -> Result<FacePoset> {
        if let Some(path) = self.path(kind, n) {
            if let Some(poset) = try_load(&path, kind, n) {
                return Ok(poset);
            }
        }
        let poset = FacePoset::build(kind, n)
            .with_context(|| format!("enumerating the faces of {kind}_{n}"))?;
        if let Some(path) = self.path(kind, n) {
            if let Err(err) = store_atomic(&path, &poset.to_binary()) {
                eprintln!("warning: could not write cache {}: {err}", path.display());
            }
        }
        Ok(poset)
    }
}

fn try_load(path: &Path, kind: TreeKind, n: usize) -> Option<FacePoset> {
    let bytes = fs::read(path).ok()?;
    match FacePoset::from_binary(&bytes) {
        Ok(poset) if poset.kind() == kind && poset.n() == n => Some(poset),
        Ok(_) => {
            eprintln!(
                "warning: cache {} holds a different poset; rebuilding",
                path.display()
            );
            None
        }
        Err(err) => {
            eprintln!(
                "warning: ignoring corrupt cache {}: {err}",
                path.display()
            );
            None
        }
    }
}

fn store_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().context("cache path has a parent")?;
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
