//! The parametrized Brieskorn families and their generators.
//!
//! | id              | triple                     | n            |
//! |-----------------|----------------------------|--------------|
//! | `thm1-even2`    | Σ(2, 4n+3, 12n+7)          | n ≥ 1        |
//! | `thm1-even3`    | Σ(3, 3n+2, 12n+7)          | n ≥ 1        |
//! | `thm2-single13` | Σ(2, 3, 13)                | n = 1        |
//! | `thm2-single25` | Σ(2, 3, 25)                | n = 1        |
//! | `thm2-2a`       | Σ(2, 4n+1, 4n+3)           | n ≥ 1        |
//! | `thm2-3a`       | Σ(3, 3n+1, 3n+2)           | n ≥ 1        |
//! | `thm2-2b`       | Σ(2, 4n+1, 20n+7)          | n ≥ 1        |
//! | `thm2-3b`       | Σ(3, 3n+1, 21n+8)          | n ≥ 1        |
//! | `thm2-2c`       | Σ(2, 4n+3, 20n+13)         | n ≥ 1        |
//! | `thm2-3c`       | Σ(3, 3n+2, 21n+13)         | n ≥ 1        |
//! | `al-2`          | Σ(2, 4n+1, 12n+5)          | n ≥ 1, odd   |
//! | `al-3`          | Σ(3, 3n+1, 12n+5)          | n ≥ 1, odd   |
//! | `twist`         | Σ(2, 3, 6n+1)              | n ≥ 0        |

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::seifert::{validate_triple, BrieskornTriple};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Thm1Even2,
    Thm1Even3,
    Thm2Single13,
    Thm2Single25,
    Thm2TwoA,
    Thm2ThreeA,
    Thm2TwoB,
    Thm2ThreeB,
    Thm2TwoC,
    Thm2ThreeC,
    Al2,
    Al3,
    Twist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    pub fn admits(self, n: i64) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => n % 2 == 0,
            Parity::Odd => n % 2 != 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::All => "all",
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Parity::All),
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Final state that a family's move script reduces to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurgeryTarget {
    /// `(K, m)` with matrix `[[0,1],[1,−1]]`: a 0-framed knot with a
    /// (−1)-framed curve meeting it once.
    ZeroKnotWithMeridian,
    /// `(K)` with matrix `[[1]]`: (+1)-surgery on a knot in `S³`.
    PlusOneKnot,
}

/// `coef·n + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub coef: i64,
    pub offset: i64,
}

impl Affine {
    pub const fn new(coef: i64, offset: i64) -> Self {
        Affine { coef, offset }
    }

    pub fn eval(&self, n: i64) -> Option<i64> {
        self.coef.checked_mul(n)?.checked_add(self.offset)
    }
}

/// Static description of one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub triple_of: [Affine; 3],
    pub parity: Parity,
    pub min_n: i64,
    /// Singletons admit only `n = min_n`.
    pub singleton: bool,
    pub target: SurgeryTarget,
    /// Leg (1-based, in sorted-α order) carrying the chain of (−2)-vertices
    /// eaten by the reduction stages; `None` when the script is a single
    /// direct reduction.
    pub chain_leg: Option<usize>,
}

const fn aff(c: i64, o: i64) -> Affine {
    Affine::new(c, o)
}

const fn konst(o: i64) -> Affine {
    Affine::new(0, o)
}

impl FamilyId {
    pub const ALL: [FamilyId; 13] = [
        FamilyId::Thm1Even2,
        FamilyId::Thm1Even3,
        FamilyId::Thm2Single13,
        FamilyId::Thm2Single25,
        FamilyId::Thm2TwoA,
        FamilyId::Thm2ThreeA,
        FamilyId::Thm2TwoB,
        FamilyId::Thm2ThreeB,
        FamilyId::Thm2TwoC,
        FamilyId::Thm2ThreeC,
        FamilyId::Al2,
        FamilyId::Al3,
        FamilyId::Twist,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Thm1Even2 => "thm1-even2",
            FamilyId::Thm1Even3 => "thm1-even3",
            FamilyId::Thm2Single13 => "thm2-single13",
            FamilyId::Thm2Single25 => "thm2-single25",
            FamilyId::Thm2TwoA => "thm2-2a",
            FamilyId::Thm2ThreeA => "thm2-3a",
            FamilyId::Thm2TwoB => "thm2-2b",
            FamilyId::Thm2ThreeB => "thm2-3b",
            FamilyId::Thm2TwoC => "thm2-2c",
            FamilyId::Thm2ThreeC => "thm2-3c",
            FamilyId::Al2 => "al-2",
            FamilyId::Al3 => "al-3",
            FamilyId::Twist => "twist",
        }
    }

    pub fn spec(self) -> FamilySpec {
        use SurgeryTarget::*;
        let (triple_of, parity, min_n, singleton, target, chain_leg) = match self {
            FamilyId::Thm1Even2 => ([konst(2), aff(4, 3), aff(12, 7)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(3)),
            FamilyId::Thm1Even3 => ([konst(3), aff(3, 2), aff(12, 7)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(3)),
            FamilyId::Thm2Single13 => ([konst(2), konst(3), konst(13)], Parity::All, 1, true, PlusOneKnot, None),
            FamilyId::Thm2Single25 => ([konst(2), konst(3), konst(25)], Parity::All, 1, true, PlusOneKnot, None),
            FamilyId::Thm2TwoA => ([konst(2), aff(4, 1), aff(4, 3)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Thm2ThreeA => ([konst(3), aff(3, 1), aff(3, 2)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Thm2TwoB => ([konst(2), aff(4, 1), aff(20, 7)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Thm2ThreeB => ([konst(3), aff(3, 1), aff(21, 8)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Thm2TwoC => ([konst(2), aff(4, 3), aff(20, 13)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(3)),
            FamilyId::Thm2ThreeC => ([konst(3), aff(3, 2), aff(21, 13)], Parity::All, 1, false, ZeroKnotWithMeridian, Some(3)),
            FamilyId::Al2 => ([konst(2), aff(4, 1), aff(12, 5)], Parity::Odd, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Al3 => ([konst(3), aff(3, 1), aff(12, 5)], Parity::Odd, 1, false, ZeroKnotWithMeridian, Some(2)),
            FamilyId::Twist => ([konst(2), konst(3), aff(6, 1)], Parity::All, 0, false, PlusOneKnot, None),
        };
        FamilySpec { id: self, triple_of, parity, min_n, singleton, target, chain_leg }
    }

    pub fn admits(self, n: i64) -> bool {
        let spec = self.spec();
        if spec.singleton {
            return n == spec.min_n;
        }
        n >= spec.min_n && spec.parity.admits(n)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// The `n`-th member of a family.
pub fn family(id: FamilyId, n: i64) -> Result<BrieskornTriple> {
    if !id.admits(n) {
        return Err(Error::InadmissibleN { family: id.as_str(), n });
    }
    let spec = id.spec();
    let [p, q, r] = spec.triple_of.map(|f| f.eval(n));
    match (p, q, r) {
        (Some(p), Some(q), Some(r)) => validate_triple(p, q, r),
        _ => Err(Error::Overflow),
    }
}
