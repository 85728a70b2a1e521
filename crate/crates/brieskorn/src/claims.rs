//! The versioned table of expected invariants in `data/claims.toml`.

use std::sync::OnceLock;

use brieskorn_core::{FamilyId, Parity};
use serde::Deserialize;

use crate::Error;

const CLAIMS_TOML: &str = include_str!("../data/claims.toml");
pub const SUPPORTED_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Vertices,
    Signature,
    WuSquare,
    Mubar,
    Casson,
}

impl Invariant {
    pub fn as_str(self) -> &'static str {
        match self {
            Invariant::Vertices => "vertices",
            Invariant::Signature => "signature",
            Invariant::WuSquare => "wu_square",
            Invariant::Mubar => "mubar",
            Invariant::Casson => "casson",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Affine { coef: i64, offset: i64 },
    Nonzero,
}

impl Expectation {
    pub fn describe(&self, n: i64) -> String {
        match self {
            Expectation::Affine { coef, offset } => (coef * n + offset).to_string(),
            Expectation::Nonzero => "nonzero".to_string(),
        }
    }

    pub fn holds(&self, n: i64, actual: i64) -> bool {
        match self {
            Expectation::Affine { coef, offset } => actual == coef * n + offset,
            Expectation::Nonzero => actual != 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub family: FamilyId,
    pub invariant: Invariant,
    pub parity: Parity,
    pub expectation: Expectation,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Universal {
    pub negative_definite: bool,
    pub unimodular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaptionDiscrepancy {
    pub family: FamilyId,
    pub n: i64,
    pub listed: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimTable {
    pub version: u32,
    pub universal: Universal,
    pub claims: Vec<Claim>,
    pub captions: Vec<CaptionDiscrepancy>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClaim {
    family: String,
    invariant: Invariant,
    #[serde(default = "all")]
    parity: String,
    coef: Option<i64>,
    offset: Option<i64>,
    nonzero: Option<bool>,
}

fn all() -> String {
    "all".to_string()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCaption {
    family: String,
    n: i64,
    listed: [i64; 3],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    version: u32,
    universal: Universal,
    #[serde(default)]
    claims: Vec<RawClaim>,
    #[serde(default)]
    caption_discrepancies: Vec<RawCaption>,
}

impl ClaimTable {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let raw: RawTable = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.version != SUPPORTED_VERSION {
            return Err(Error::Parse(format!("unsupported claims version {}", raw.version)));
        }
        let family = |s: &str| s.parse::<FamilyId>().map_err(|e| Error::Parse(e.to_string()));
        let mut claims = Vec::with_capacity(raw.claims.len());
        for c in raw.claims {
            let expectation = match (c.coef, c.offset, c.nonzero) {
                (Some(coef), Some(offset), None) => Expectation::Affine { coef, offset },
                (None, None, Some(true)) => Expectation::Nonzero,
                _ => {
                    return Err(Error::Parse(format!(
                        "claim {} for {} needs either coef and offset or nonzero = true",
                        c.invariant.as_str(),
                        c.family
                    )))
                }
            };
            let parity = c.parity.parse::<Parity>().map_err(|_| Error::Parse(format!("bad parity `{}`", c.parity)))?;
            claims.push(Claim { family: family(&c.family)?, invariant: c.invariant, parity, expectation });
        }
        let captions = raw
            .caption_discrepancies
            .into_iter()
            .map(|c| Ok(CaptionDiscrepancy { family: family(&c.family)?, n: c.n, listed: c.listed }))
            .collect::<Result<_, Error>>()?;
        Ok(ClaimTable { version: raw.version, universal: raw.universal, claims, captions })
    }

    /// The table shipped with the binary.
    pub fn builtin() -> &'static ClaimTable {
        static TABLE: OnceLock<ClaimTable> = OnceLock::new();
        TABLE.get_or_init(|| ClaimTable::parse(CLAIMS_TOML).expect("bundled claims table is valid"))
    }

    pub fn applicable(&self, id: FamilyId, n: i64) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(move |c| c.family == id && c.parity.admits(n))
    }

    pub fn captions_for(&self, id: FamilyId, n: i64) -> impl Iterator<Item = &CaptionDiscrepancy> {
        self.captions.iter().filter(move |c| c.family == id && c.n == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_loads() {
        let t = ClaimTable::builtin();
        assert_eq!(t.version, 1);
        assert!(t.universal.negative_definite && t.universal.unimodular);
        assert_eq!(t.applicable(FamilyId::Thm1Even2, 2).count(), 4);
        assert_eq!(t.applicable(FamilyId::Al2, 3).count(), 1);
        assert_eq!(t.captions.len(), 2);
    }

    #[test]
    fn every_parametrized_family_has_claims() {
        let t = ClaimTable::builtin();
        for id in FamilyId::ALL {
            assert!(t.claims.iter().any(|c| c.family == id), "{id}");
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let base = "version = 1\n[universal]\nnegative_definite = true\nunimodular = true\n";
        assert!(ClaimTable::parse(base).is_ok());
        assert!(ClaimTable::parse(&base.replace("version = 1", "version = 2")).is_err());
        let half = format!("{base}[[claims]]\nfamily = \"al-2\"\ninvariant = \"mubar\"\ncoef = 1\n");
        assert!(ClaimTable::parse(&half).is_err());
        let unknown = format!("{base}[[claims]]\nfamily = \"nope\"\ninvariant = \"mubar\"\nnonzero = true\n");
        assert!(ClaimTable::parse(&unknown).is_err());
    }
}
