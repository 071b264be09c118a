//! Run configuration: resource caps, `key=value` files and the
//! `YAGITA_CAPS` environment override.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CAPS_ENV: &str = "YAGITA_CAPS";
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Limits on the size of desk-scale computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group closure, in elements.
    pub closure: usize,
    /// Largest number of weight multisets per run.
    pub enumeration: usize,
    /// Largest monomial size `p^m` before block substitution.
    pub size: usize,
    /// Largest prime accepted anywhere.
    pub prime: u64,
    /// Largest prime for multiset enumeration.
    pub enum_prime: u64,
    /// Largest `n` for multiset enumeration.
    pub enum_n: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 100_000,
            enumeration: 1_000_000,
            size: 32,
            prime: crate::arith::DEFAULT_PRIME_BOUND,
            enum_prime: 13,
            enum_n: 24,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .replace('_', "")
        .parse()
        .map_err(|_| Error::Parse(format!("bad value `{v}` for `{key}`")))
}

impl Caps {
    /// Applies one `key=value` setting; returns `false` for unknown keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        match key.trim() {
            "closure" => self.closure = parse_num(key, value)?,
            "enumeration" => self.enumeration = parse_num(key, value)?,
            "size" => self.size = parse_num(key, value)?,
            "prime" => self.prime = parse_num(key, value)?,
            "enum_prime" => self.enum_prime = parse_num(key, value)?,
            "enum_n" => self.enum_n = parse_num(key, value)?,
            _ => return Ok(false),
        }
        self.validate()?;
        Ok(true)
    }

    fn validate(&self) -> Result<()> {
        if self.closure == 0 || self.enumeration == 0 || self.size == 0 || self.prime < 2 || self.enum_n == 0 {
            return Err(Error::InvalidArgument("caps must be positive".into()));
        }
        Ok(())
    }

    /// Comma-separated `key=value` overrides, as in `YAGITA_CAPS`.
    pub fn apply_overrides(&mut self, overrides: &str) -> Result<()> {
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{item}` is not key=value")))?;
            if !self.set(k, v)? {
                return Err(Error::Parse(format!("unknown cap `{k}`")));
            }
        }
        Ok(())
    }

    /// Defaults with `YAGITA_CAPS` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(overrides) = std::env::var(CAPS_ENV) {
            caps.apply_overrides(&overrides)?;
        }
        Ok(caps)
    }
}

/// `key=value` lines; blank lines and `#` comments are skipped.
pub fn parse_kv(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", no + 1)))?;
        out.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    Ok(out)
}

pub fn read_kv_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_kv(&text)
}
