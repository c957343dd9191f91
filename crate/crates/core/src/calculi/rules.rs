use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One inference rule schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleTag {
    /// `⊢ ⊤`
    Top,
    /// `φ ⊢ φ`
    X2X,
    /// `Γ ⊢ ψ` / `Γ, Δ ⊢ ψ`
    PremiseInflation,
    /// `Γ ⊢ φ`, `Γ, φ ⊢ ψ` / `Γ ⊢ ψ`
    Cut,
    AndEl,
    AndEr,
    AndI,
    /// `Γ ⊢ φ`, `Γ ⊢ φ → ψ` / `Γ ⊢ ψ`
    ImpE,
    /// `Γ ⊢ ψ` / `Γ ⊢ φ → ψ`
    ImpIW,
    /// `Γ, φ ⊢ ψ` / `Γ ⊢ φ → ψ`
    ImpI,
    /// `Γ ⊢ φ → ψ` / `Γ ⊢ ψ`
    ImpED,
    /// `⊥ ⊢ φ`
    BotAx,
    /// `Γ, φ ⊢ ψ`, `Γ, φ → ⊥ ⊢ ψ` / `Γ ⊢ ψ`
    DFExcludedMiddle,
    /// `Γ, φ ⊢ χ`, `Γ, ψ ⊢ χ`, `Γ ⊢ φ ∨ ψ` / `Γ ⊢ χ`
    OrE,
    OrIl,
    OrIr,
    /// `Γ, φ ⊢ ψ`, `Γ, ψ ⊢ φ` / `Γ, φ → χ ⊢ ψ → χ`
    E1,
    /// `Γ, φ ⊢ ψ`, `Γ, ψ ⊢ φ` / `Γ, χ → φ ⊢ χ → ψ`
    E2,
    /// `φ ⊢ ψ`, `ψ ⊢ φ` / `φ → χ ⊢ ψ → χ`
    E1_0,
    /// `φ ⊢ ψ`, `ψ ⊢ φ` / `χ → φ ⊢ χ → ψ`
    E2_0,
    /// `φ₁ ⊢ φ₂`, `φ₂ ⊢ φ₁`, `ψ₁ ⊢ ψ₂`, `ψ₂ ⊢ ψ₁` / `φ₁ → ψ₁ ⊢ φ₂ → ψ₂`
    E0,
}

impl RuleTag {
    pub const ALL: [RuleTag; 21] = [
        RuleTag::Top,
        RuleTag::X2X,
        RuleTag::PremiseInflation,
        RuleTag::Cut,
        RuleTag::AndEl,
        RuleTag::AndEr,
        RuleTag::AndI,
        RuleTag::ImpE,
        RuleTag::ImpIW,
        RuleTag::ImpI,
        RuleTag::ImpED,
        RuleTag::BotAx,
        RuleTag::DFExcludedMiddle,
        RuleTag::OrE,
        RuleTag::OrIl,
        RuleTag::OrIr,
        RuleTag::E1,
        RuleTag::E2,
        RuleTag::E1_0,
        RuleTag::E2_0,
        RuleTag::E0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleTag::Top => "Top",
            RuleTag::X2X => "X2X",
            RuleTag::PremiseInflation => "PremiseInflation",
            RuleTag::Cut => "Cut",
            RuleTag::AndEl => "AndEl",
            RuleTag::AndEr => "AndEr",
            RuleTag::AndI => "AndI",
            RuleTag::ImpE => "ImpE",
            RuleTag::ImpIW => "ImpIW",
            RuleTag::ImpI => "ImpI",
            RuleTag::ImpED => "ImpED",
            RuleTag::BotAx => "BotAx",
            RuleTag::DFExcludedMiddle => "DFExcludedMiddle",
            RuleTag::OrE => "OrE",
            RuleTag::OrIl => "OrIl",
            RuleTag::OrIr => "OrIr",
            RuleTag::E1 => "E1",
            RuleTag::E2 => "E2",
            RuleTag::E1_0 => "E1_0",
            RuleTag::E2_0 => "E2_0",
            RuleTag::E0 => "E0",
        }
    }

    /// Number of premises the schema takes.
    pub fn arity(self) -> usize {
        match self {
            RuleTag::Top | RuleTag::X2X | RuleTag::BotAx => 0,
            RuleTag::PremiseInflation
            | RuleTag::AndEl
            | RuleTag::AndEr
            | RuleTag::ImpIW
            | RuleTag::ImpI
            | RuleTag::ImpED
            | RuleTag::OrIl
            | RuleTag::OrIr => 1,
            RuleTag::Cut
            | RuleTag::AndI
            | RuleTag::ImpE
            | RuleTag::DFExcludedMiddle
            | RuleTag::E1
            | RuleTag::E2
            | RuleTag::E1_0
            | RuleTag::E2_0 => 2,
            RuleTag::OrE => 3,
            RuleTag::E0 => 4,
        }
    }

    fn bit(self) -> u32 {
        1 << (self as u32)
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule tag `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleTag {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleTag::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// Set of rule tags, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RuleSet(u32);

impl RuleSet {
    pub const fn empty() -> RuleSet {
        RuleSet(0)
    }

    pub fn of(rules: &[RuleTag]) -> RuleSet {
        rules.iter().fold(RuleSet(0), |s, r| s.with(*r))
    }

    pub fn with(self, r: RuleTag) -> RuleSet {
        RuleSet(self.0 | r.bit())
    }

    pub fn union(self, other: RuleSet) -> RuleSet {
        RuleSet(self.0 | other.0)
    }

    pub fn contains(self, r: RuleTag) -> bool {
        self.0 & r.bit() != 0
    }

    pub fn is_superset_of(self, other: RuleSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn iter(self) -> impl Iterator<Item = RuleTag> {
        RuleTag::ALL.into_iter().filter(move |r| self.contains(*r))
    }
}

/// The named logics of the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicName {
    BL,
    PL,
    PlEd,
    ML,
    IL,
    CL,
    PEL1,
    PEL2,
    PEL,
    PEL1_0,
    PEL2_0,
    PEL0,
}

impl LogicName {
    pub const ALL: [LogicName; 12] = [
        LogicName::BL,
        LogicName::PL,
        LogicName::PlEd,
        LogicName::ML,
        LogicName::IL,
        LogicName::CL,
        LogicName::PEL1,
        LogicName::PEL2,
        LogicName::PEL,
        LogicName::PEL1_0,
        LogicName::PEL2_0,
        LogicName::PEL0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LogicName::BL => "BL",
            LogicName::PL => "PL",
            LogicName::PlEd => "PL_ED",
            LogicName::ML => "ML",
            LogicName::IL => "IL",
            LogicName::CL => "CL",
            LogicName::PEL1 => "PEL1",
            LogicName::PEL2 => "PEL2",
            LogicName::PEL => "PEL",
            LogicName::PEL1_0 => "PEL1_0",
            LogicName::PEL2_0 => "PEL2_0",
            LogicName::PEL0 => "PEL0",
        }
    }

    /// Rules of the disjunction-free variant.
    pub fn rules(self) -> RuleSet {
        use RuleTag::*;
        let bl = RuleSet::of(&[Top, X2X, PremiseInflation, Cut, AndEl, AndEr, AndI]);
        let pl = bl.with(ImpE).with(ImpIW);
        let ml = pl.with(ImpI);
        let il = ml.with(BotAx);
        match self {
            LogicName::BL => bl,
            LogicName::PL => pl,
            LogicName::PlEd => pl.with(ImpED),
            LogicName::ML => ml,
            LogicName::IL => il,
            LogicName::CL => il.with(DFExcludedMiddle),
            LogicName::PEL1 => pl.with(E1),
            LogicName::PEL2 => pl.with(E2),
            LogicName::PEL => pl.with(E1).with(E2),
            LogicName::PEL1_0 => pl.with(E1_0),
            LogicName::PEL2_0 => pl.with(E2_0),
            LogicName::PEL0 => pl.with(E1_0).with(E2_0).with(E0),
        }
    }
}

/// A logic of the catalogue, optionally extended with the disjunction rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogicId {
    pub name: LogicName,
    pub with_disjunction: bool,
}

impl LogicId {
    pub const BL: LogicId = LogicId::plain(LogicName::BL);
    pub const PL: LogicId = LogicId::plain(LogicName::PL);
    pub const PL_ED: LogicId = LogicId::plain(LogicName::PlEd);
    pub const ML: LogicId = LogicId::plain(LogicName::ML);
    pub const IL: LogicId = LogicId::plain(LogicName::IL);
    pub const CL: LogicId = LogicId::plain(LogicName::CL);
    pub const PEL1: LogicId = LogicId::plain(LogicName::PEL1);
    pub const PEL2: LogicId = LogicId::plain(LogicName::PEL2);
    pub const PEL: LogicId = LogicId::plain(LogicName::PEL);
    pub const PEL1_0: LogicId = LogicId::plain(LogicName::PEL1_0);
    pub const PEL2_0: LogicId = LogicId::plain(LogicName::PEL2_0);
    pub const PEL0: LogicId = LogicId::plain(LogicName::PEL0);

    pub const fn plain(name: LogicName) -> LogicId {
        LogicId {
            name,
            with_disjunction: false,
        }
    }

    pub const fn with_or(self) -> LogicId {
        LogicId {
            name: self.name,
            with_disjunction: true,
        }
    }

    /// Every catalogued logic, with and without disjunction.
    pub fn catalogue() -> Vec<LogicId> {
        LogicName::ALL
            .iter()
            .flat_map(|n| [LogicId::plain(*n), LogicId::plain(*n).with_or()])
            .collect()
    }

    pub fn rules(self) -> RuleSet {
        let base = self.name.rules();
        if self.with_disjunction {
            base.with(RuleTag::OrE)
                .with(RuleTag::OrIl)
                .with(RuleTag::OrIr)
        } else {
            base
        }
    }

    pub fn admits(self, rule: RuleTag) -> bool {
        self.rules().contains(rule)
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name.name())?;
        if self.with_disjunction {
            f.write_str("+or")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown logic `{0}` (expected one of bl, pl, pl-ed, ml, il, cl, pel1, pel2, pel, pel1-0, pel2-0, pel0, optionally suffixed with -or)")]
pub struct UnknownLogic(pub String);

impl FromStr for LogicId {
    type Err = UnknownLogic;

    /// Accepts the display names (`PL_ED`, `PEL1_0+or`) as well as the
    /// lower-case CLI spellings (`pl-ed`, `pel1-0`, `cl-or`, `clor`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        let (base, or) = if let Some(b) = norm
            .strip_suffix("+or")
            .or_else(|| norm.strip_suffix("-or"))
        {
            (b.to_string(), true)
        } else if norm.len() > 2 && norm.ends_with("or") && !norm.ends_with("-or") {
            // clor, plor, ...
            (norm[..norm.len() - 2].to_string(), true)
        } else {
            (norm.clone(), false)
        };
        let name = match base.as_str() {
            "bl" => LogicName::BL,
            "pl" => LogicName::PL,
            "pl-ed" | "pled" => LogicName::PlEd,
            "ml" => LogicName::ML,
            "il" => LogicName::IL,
            "cl" => LogicName::CL,
            "pel1" => LogicName::PEL1,
            "pel2" => LogicName::PEL2,
            "pel" => LogicName::PEL,
            "pel1-0" | "pel10" => LogicName::PEL1_0,
            "pel2-0" | "pel20" => LogicName::PEL2_0,
            "pel0" | "pel-0" => LogicName::PEL0,
            _ => return Err(UnknownLogic(s.to_string())),
        };
        let id = LogicId::plain(name);
        Ok(if or { id.with_or() } else { id })
    }
}
