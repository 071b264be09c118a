use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{mod_pow, Prime};
use crate::error::{Error, Result};

/// Named families of coefficient rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// `Z`
    Integers,
    /// `Z[zeta_p]`
    Cyclotomic,
    /// `Z[zeta_p + zeta_p^-1]`
    RealSubfield,
    /// Integers of the subfield of `Q(zeta_p)` fixed by the order-`l` subgroup
    /// of the Galois group.
    Custom,
}

/// The coefficient ring `O` as seen from a fixed prime `p`: only the degree
/// `l = [F(zeta_p) : F]` and whether `zeta_p` lies in `O` matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub p: Prime,
    pub l: u64,
    pub zeta_in_ring: bool,
    pub preset: Preset,
}

impl RingDescriptor {
    pub fn integers(p: Prime) -> Self {
        let l = p.get() - 1;
        RingDescriptor {
            p,
            l,
            zeta_in_ring: l == 1,
            preset: Preset::Integers,
        }
    }

    /// `Z[zeta_p]`; for `p = 2` this is `Z`.
    pub fn cyclotomic(p: Prime) -> Self {
        if p.get() == 2 {
            return Self::integers(p);
        }
        RingDescriptor {
            p,
            l: 1,
            zeta_in_ring: true,
            preset: Preset::Cyclotomic,
        }
    }

    /// `Z[zeta_p + zeta_p^-1]`, with `l = 2`; collapses to `Z` for `p <= 3`.
    pub fn real_subfield(p: Prime) -> Self {
        if p.get() <= 3 {
            return Self::integers(p);
        }
        RingDescriptor {
            p,
            l: 2,
            zeta_in_ring: false,
            preset: Preset::RealSubfield,
        }
    }

    pub fn custom(p: Prime, l: u64) -> Result<Self> {
        if l == 0 || (p.get() - 1) % l != 0 {
            return Err(Error::InvalidArgument(format!(
                "custom degree l = {l} must divide p - 1 = {}",
                p.get() - 1
            )));
        }
        Ok(RingDescriptor {
            p,
            l,
            zeta_in_ring: l == 1,
            preset: Preset::Custom,
        })
    }

    /// Parses `Z`, `Zzeta`, `real` or `custom:L`.
    pub fn parse(p: Prime, text: &str) -> Result<Self> {
        match text.trim() {
            "Z" | "integers" => Ok(Self::integers(p)),
            "Zzeta" | "cyclotomic" => Ok(Self::cyclotomic(p)),
            "real" | "real-subfield" => Ok(Self::real_subfield(p)),
            other => {
                let l = other
                    .strip_prefix("custom:")
                    .ok_or_else(|| Error::Parse(format!("unknown ring `{other}`")))?
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad custom degree in `{other}`")))?;
                Self::custom(p, l)
            }
        }
    }

    /// The presets that give distinct `l` at this prime, ordered by `l`.
    pub fn presets(p: Prime) -> Vec<Self> {
        let mut out: Vec<Self> = vec![Self::cyclotomic(p), Self::real_subfield(p), Self::integers(p)];
        out.dedup_by_key(|r| r.l);
        out
    }

    pub fn l_is_even(&self) -> bool {
        self.l % 2 == 0
    }

    /// `H_l`: the unique subgroup of order `l` in `F_p^*`, sorted.
    pub fn subgroup(&self) -> Vec<u64> {
        unit_subgroup(self.p, self.l)
    }

    /// Cosets `g^j H_l`, `j = 0..(p-1)/l`, each sorted.
    pub fn cosets(&self) -> Vec<Vec<u64>> {
        unit_cosets(self.p, self.l)
    }
}

pub fn unit_subgroup(p: Prime, l: u64) -> Vec<u64> {
    let pp = p.get();
    let g = p.primitive_root();
    let step = (pp - 1) / l;
    let mut h: Vec<u64> = (0..l).map(|k| mod_pow(g, k * step, pp)).collect();
    h.sort_unstable();
    h
}

pub fn unit_cosets(p: Prime, l: u64) -> Vec<Vec<u64>> {
    let pp = p.get();
    let g = p.primitive_root();
    let h = unit_subgroup(p, l);
    (0..(pp - 1) / l)
        .map(|j| {
            let t = mod_pow(g, j, pp);
            let mut c: Vec<u64> = h.iter().map(|x| x * t % pp).collect();
            c.sort_unstable();
            c
        })
        .collect()
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset {
            Preset::Integers => write!(f, "Z"),
            Preset::Cyclotomic => write!(f, "Z[zeta_{}]", self.p),
            Preset::RealSubfield => write!(f, "Z[zeta_{0} + zeta_{0}^-1]", self.p),
            Preset::Custom => write!(f, "custom(l = {})", self.l),
        }
    }
}

/// Parses `p:ring`, e.g. `5:Zzeta`.
impl FromStr for RingDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, ring) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `p:ring`, got `{s}`")))?;
        let p = p
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
        Self::parse(Prime::new(p)?, ring)
    }
}
