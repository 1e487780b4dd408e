//! Deliberate mutations of the core maps, used as negative controls for the
//! verification harness. Never enabled outside of `verify` runs that ask for
//! them explicitly.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// `phi` skips the computation of `k_j` and uses `k_j = 0`.
    PhiSkipKStep,
    /// `psi` picks `k_1` with a strict inequality, flipping how ties resolve.
    PsiTieDirection,
    /// The exponent of each term in the rank generating function is shifted by one.
    MalteseExponentOffByOne,
}

impl Fault {
    pub const ALL: [Fault; 3] = [
        Fault::PhiSkipKStep,
        Fault::PsiTieDirection,
        Fault::MalteseExponentOffByOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::PhiSkipKStep => "phi-skip-k-step",
            Fault::PsiTieDirection => "psi-tie-direction",
            Fault::MalteseExponentOffByOne => "maltese-exponent-off-by-one",
        }
    }

    /// Name of the report check this fault is designed to break.
    pub fn target_check(self) -> &'static str {
        match self {
            Fault::PhiSkipKStep => "first_symmetry",
            Fault::PsiTieDirection => "second_symmetry",
            Fault::MalteseExponentOffByOne => "maltese_vs_count",
        }
    }
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fault::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown fault `{s}`"))
    }
}
