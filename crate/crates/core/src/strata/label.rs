//! The twenty strata of the unit 3-sphere.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::spectra::{ConfigCode, EigConfig};

/// Stratum names. Open regions `V`, critical sheets `S`, singular lines `L`
/// and singular points `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StratumLabel {
    V1,
    V2,
    V3,
    V4,
    S1,
    S2,
    S3,
    S4,
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
}

use StratumLabel::*;

impl StratumLabel {
    pub const ALL: [StratumLabel; 20] = [
        V1, V2, V3, V4, S1, S2, S3, S4, L1, L2, L3, L4, L5, L6, P1, P2, P3, P4, P5, P6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            V1 => "V1",
            V2 => "V2",
            V3 => "V3",
            V4 => "V4",
            S1 => "S1",
            S2 => "S2",
            S3 => "S3",
            S4 => "S4",
            L1 => "L1",
            L2 => "L2",
            L3 => "L3",
            L4 => "L4",
            L5 => "L5",
            L6 => "L6",
            P1 => "P1",
            P2 => "P2",
            P3 => "P3",
            P4 => "P4",
            P5 => "P5",
            P6 => "P6",
        }
    }

    /// Position in [`Self::ALL`]; used as a colour index in meshes.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn dimension(self) -> u8 {
        match self {
            V1 | V2 | V3 | V4 => 3,
            S1 | S2 | S3 | S4 => 2,
            L1 | L2 | L3 | L4 | L5 | L6 => 1,
            P1 | P2 | P3 | P4 | P5 | P6 => 0,
        }
    }

    /// The generic eigenvalue configuration on the stratum.
    pub fn expected_config(self) -> EigConfig {
        let code = match self {
            V1 => ConfigCode::GammaPlusGammaPlus,
            V3 => ConfigCode::GammaMinusGammaMinus,
            V2 | V4 => ConfigCode::GammaMinusGammaPlus,
            S1 | S4 => ConfigCode::BetaGammaPlus,
            S2 | S3 => ConfigCode::BetaGammaMinus,
            L1 | L2 | L3 | L4 | L5 | L6 | P5 | P6 => ConfigCode::BetaOneBetaTwo,
            P1 | P2 | P3 | P4 => ConfigCode::BetaSquared,
        };
        code.into()
    }

    pub fn of_dimension(d: u8) -> impl Iterator<Item = StratumLabel> {
        Self::ALL.into_iter().filter(move |l| l.dimension() == d)
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown stratum {s:?}")))
    }
}
