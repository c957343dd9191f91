//! Bit-parallel evaluation over blocks of 64 assignments.
//!
//! Row `r` of a table over variables `v0, v1, ...` assigns `vi` the bit
//! `(r >> i) & 1`. Block `b` covers rows `64b .. 64b + 63`.

use rustc_hash::FxHashMap;

use crate::syntax::{Formula, Kind};

const LOW: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// How `φ → ψ` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ImpReading {
    /// Classical material implication.
    Classical,
    /// Degenerate implication: the value of the consequent.
    Degenerate,
}

/// Number of 64-row blocks for `k` variables.
pub(crate) fn blocks(k: usize) -> usize {
    if k <= 6 {
        1
    } else {
        1 << (k - 6)
    }
}

/// Mask of the rows that exist in a block when there are `k` variables.
pub(crate) fn row_mask(k: usize) -> u64 {
    if k >= 6 {
        !0
    } else {
        (1u64 << (1 << k)) - 1
    }
}

pub(crate) fn var_column(i: usize, block: usize) -> u64 {
    if i < 6 {
        LOW[i]
    } else if (block >> (i - 6)) & 1 == 1 {
        !0
    } else {
        0
    }
}

pub(crate) struct BlockEval<'a> {
    vars: &'a [&'static str],
    block: usize,
    reading: ImpReading,
    memo: FxHashMap<Formula, u64>,
}

impl<'a> BlockEval<'a> {
    pub(crate) fn new(vars: &'a [&'static str], block: usize, reading: ImpReading) -> Self {
        BlockEval {
            vars,
            block,
            reading,
            memo: FxHashMap::default(),
        }
    }

    pub(crate) fn formula(&mut self, f: Formula) -> u64 {
        if let Some(&v) = self.memo.get(&f) {
            return v;
        }
        let v = match f.kind() {
            Kind::Top => !0,
            Kind::Bot => 0,
            Kind::Var(name) => {
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .expect("variable outside the table");
                var_column(i, self.block)
            }
            Kind::And(a, b) => self.formula(a) & self.formula(b),
            Kind::Or(a, b) => self.formula(a) | self.formula(b),
            Kind::Imp(a, b) => match self.reading {
                ImpReading::Classical => !self.formula(a) | self.formula(b),
                ImpReading::Degenerate => self.formula(b),
            },
        };
        self.memo.insert(f, v);
        v
    }

    /// Rows where some antecedent is false or the consequent is true.
    pub(crate) fn sequent(&mut self, antecedents: &[Formula], consequent: Formula) -> u64 {
        let mut all = !0u64;
        for &a in antecedents {
            all &= self.formula(a);
        }
        !all | self.formula(consequent)
    }
}
