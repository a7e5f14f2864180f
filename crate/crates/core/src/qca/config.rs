use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest site count representable by a [`Configuration`].
pub const MAX_SITES: usize = 63;

/// A state of the path `0, ..., N-1`, one bit per site.
///
/// The basis index is big-endian in the sites: site 0 is the most
/// significant bit, so `(0, 0, 1)` has index 1 among 8 basis states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    index: u64,
    sites: usize,
}

impl Configuration {
    pub fn from_index(index: u64, sites: usize) -> Result<Self> {
        if sites == 0 || sites > MAX_SITES {
            return Err(Error::InvalidInput(format!(
                "site count {sites} out of range"
            )));
        }
        if index >> sites != 0 {
            return Err(Error::InvalidInput(format!(
                "index {index} does not fit in {sites} sites"
            )));
        }
        Ok(Configuration { index, sites })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut index = 0u64;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidInput(format!("site state {b} is not 0 or 1")));
            }
            index = (index << 1) | u64::from(b);
        }
        Configuration::from_index(index, bits.len())
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn sites(self) -> usize {
        self.sites
    }

    /// State of site `x`.
    pub fn site(self, x: usize) -> u8 {
        assert!(x < self.sites);
        ((self.index >> (self.sites - 1 - x)) & 1) as u8
    }

    pub fn bits(self) -> Vec<u8> {
        (0..self.sites).map(|x| self.site(x)).collect()
    }

    /// All `2^N` configurations in basis order.
    pub fn all(sites: usize) -> impl Iterator<Item = Configuration> {
        (0..1u64 << sites).map(move |index| Configuration { index, sites })
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidInput(format!("bad site character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Configuration::from_bits(&bits)
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ket_001_has_index_one() {
        let c: Configuration = "001".parse().unwrap();
        assert_eq!(c.index(), 1);
        assert_eq!(c.sites(), 3);
        assert_eq!(c.site(2), 1);
        assert_eq!(c.to_string(), "001");
    }

    #[test]
    fn site_zero_is_most_significant() {
        let c = Configuration::from_bits(&[1, 0, 0, 0]).unwrap();
        assert_eq!(c.index(), 8);
    }

    #[test]
    fn rejects_garbage() {
        assert!("012".parse::<Configuration>().is_err());
        assert!("".parse::<Configuration>().is_err());
        assert!(Configuration::from_index(8, 3).is_err());
    }

    #[test]
    fn json_is_bit_string() {
        let c: Configuration = "0110".parse().unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), "\"0110\"");
    }
}
