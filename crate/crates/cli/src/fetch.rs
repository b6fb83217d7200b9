//! Fetching OEIS b-files with an on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::error::{CliError, Result};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

/// Environment variable overriding the default cache directory.
pub const CACHE_DIR_ENV: &str = "LOSANITSCH_CACHE_DIR";

pub const DEFAULT_CACHE_DIR: &str = "oeis-cache";

/// Where the returned text came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Network,
    Cache,
    /// Network failed; the cached copy was used instead.
    CacheFallback,
}

#[derive(Clone, Debug)]
pub struct Fetcher {
    base_url: String,
    cache_dir: PathBuf,
    offline: bool,
}

/// `--cache-dir`, else the environment variable, else `./oeis-cache`.
pub fn resolve_cache_dir(explicit: Option<&Path>) -> PathBuf {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

/// `A034851` -> `034851`.
pub fn id_digits(id: &str) -> Result<&str> {
    let digits = id.strip_prefix('A').ok_or_else(|| CliError::InvalidId(id.to_string()))?;
    if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) {
        Ok(digits)
    } else {
        Err(CliError::InvalidId(id.to_string()))
    }
}

impl Fetcher {
    pub fn new(cache_dir: impl Into<PathBuf>, offline: bool) -> Self {
        Self { base_url: DEFAULT_BASE_URL.to_string(), cache_dir: cache_dir.into(), offline }
    }

    pub fn with_base_url(mut self, base_url: impl Into<String>) -> Self {
        self.base_url = base_url.into().trim_end_matches('/').to_string();
        self
    }

    pub fn url(&self, id: &str) -> Result<String> {
        Ok(format!("{}/{id}/b{}.txt", self.base_url, id_digits(id)?))
    }

    pub fn cache_path(&self, id: &str) -> PathBuf {
        self.cache_dir.join(format!("{id}.txt"))
    }

    /// Text of the b-file for `id`. Downloads go to the cache verbatim.
    pub fn get(&self, id: &str) -> Result<(String, Origin)> {
        let url = self.url(id)?;
        let path = self.cache_path(id);
        if self.offline {
            return match fs::read_to_string(&path) {
                Ok(text) => Ok((text, Origin::Cache)),
                Err(_) => Err(CliError::NotCached { id: id.to_string(), dir: self.cache_dir.display().to_string() }),
            };
        }
        match download(&url) {
            Ok(text) => {
                self.store(&path, &text)?;
                Ok((text, Origin::Network))
            }
            Err(reason) => match fs::read_to_string(&path) {
                Ok(text) => Ok((text, Origin::CacheFallback)),
                Err(_) => Err(CliError::Fetch { id: id.to_string(), reason }),
            },
        }
    }

    /// Write to a temporary file in the cache directory, then rename.
    fn store(&self, path: &Path, text: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir).map_err(|e| CliError::io(&self.cache_dir, e))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.cache_dir).map_err(|e| CliError::io(&self.cache_dir, e))?;
        tmp.write_all(text.as_bytes()).map_err(|e| CliError::io(tmp.path(), e))?;
        tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
        Ok(())
    }
}

fn download(url: &str) -> std::result::Result<String, String> {
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(Duration::from_secs(30))).build().into();
    let mut response = agent.get(url).call().map_err(|e| e.to_string())?;
    response.body_mut().read_to_string().map_err(|e| e.to_string())
}
