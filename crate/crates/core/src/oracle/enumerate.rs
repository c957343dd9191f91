//! Exhaustive families of small formulas and sequents in a fixed order.

use thiserror::Error;

use crate::syntax::{Connective, Formula, Sequent};

/// Which formula constructors a family may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Connectives {
    pub and: bool,
    pub imp: bool,
    pub or: bool,
    pub top: bool,
    pub bot: bool,
}

impl Connectives {
    pub const AND: Connectives = Connectives {
        and: true,
        imp: false,
        or: false,
        top: false,
        bot: false,
    };
    pub const AND_IMP: Connectives = Connectives {
        imp: true,
        ..Self::AND
    };
    pub const AND_IMP_TOP_BOT: Connectives = Connectives {
        top: true,
        bot: true,
        ..Self::AND_IMP
    };

    fn binary(self) -> Vec<Connective> {
        let mut v = Vec::new();
        if self.and {
            v.push(Connective::And);
        }
        if self.imp {
            v.push(Connective::Imp);
        }
        if self.or {
            v.push(Connective::Or);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the family has {count} members, over the cap of {cap}")]
pub struct FamilyTooLarge {
    pub count: u128,
    pub cap: u128,
}

/// Variable names used by families: `x, y, z` and then `x3, x4, ...`.
pub fn variable_name(i: usize) -> String {
    match i {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        _ => format!("x{i}"),
    }
}

/// Every formula of depth at most `max_depth` over `vars` variables and the
/// given connectives, by depth and then in generation order. Atoms come
/// first: variables, then `⊤`, then `⊥`.
pub fn enumerate_formulas(vars: usize, max_depth: usize, connectives: Connectives) -> Vec<Formula> {
    let mut all: Vec<Formula> = (0..vars).map(|i| Formula::var(&variable_name(i))).collect();
    if connectives.top {
        all.push(Formula::top());
    }
    if connectives.bot {
        all.push(Formula::bot());
    }
    let ops = connectives.binary();
    // all[..prev_end] have depth < d - 1, all[prev_end..] depth d - 1.
    let mut prev_end = 0;
    for _ in 0..max_depth {
        let end = all.len();
        let mut next = Vec::new();
        for &op in &ops {
            for i in 0..end {
                for j in 0..end {
                    if i >= prev_end || j >= prev_end {
                        next.push(Formula::binary(op, all[i], all[j]));
                    }
                }
            }
        }
        prev_end = end;
        all.extend(next);
    }
    all
}

/// Sequents with at most `max_antecedents` distinct antecedents and a
/// consequent drawn from one formula list.
#[derive(Clone, Debug)]
pub struct SequentFamily {
    pub formulas: Vec<Formula>,
    pub max_antecedents: usize,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

impl SequentFamily {
    pub fn new(
        vars: usize,
        max_depth: usize,
        max_antecedents: usize,
        connectives: Connectives,
    ) -> SequentFamily {
        SequentFamily {
            formulas: enumerate_formulas(vars, max_depth, connectives),
            max_antecedents,
        }
    }

    /// Number of antecedent sets.
    pub fn antecedent_set_count(&self) -> u128 {
        let n = self.formulas.len() as u128;
        (0..=self.max_antecedents as u128)
            .map(|k| binomial(n, k))
            .sum()
    }

    /// Number of sequents.
    pub fn count(&self) -> u128 {
        self.antecedent_set_count() * self.formulas.len() as u128
    }

    /// Antecedent sets as increasing index lists, by size and then
    /// lexicographically.
    pub fn antecedent_sets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.formulas.len();
        (0..=self.max_antecedents.min(n)).flat_map(move |k| Combinations::new(n, k))
    }

    /// Every sequent: antecedent sets in [`Self::antecedent_sets`] order,
    /// consequents in formula order within each.
    pub fn sequents(&self) -> impl Iterator<Item = Sequent> + '_ {
        self.antecedent_sets().flat_map(move |set| {
            let ants: Vec<Formula> = set.iter().map(|&i| self.formulas[i]).collect();
            self.formulas
                .iter()
                .map(move |&c| Sequent::new(ants.iter().copied(), c))
        })
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().unwrap();
        let k = c.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if c[i] < self.n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Default cap on enumerated sequents.
pub const DEFAULT_FAMILY_CAP: u128 = 10_000_000;

/// The sequent stream of a small family, refusing families above `cap`.
pub fn enumerate_small_sequents(
    vars: usize,
    max_depth: usize,
    max_antecedents: usize,
    connectives: Connectives,
    cap: u128,
) -> Result<impl Iterator<Item = Sequent>, FamilyTooLarge> {
    let family = SequentFamily::new(vars, max_depth, max_antecedents, connectives);
    let count = family.count();
    if count > cap {
        return Err(FamilyTooLarge { count, cap });
    }
    Ok(OwnedSequents {
        sets: family.antecedent_sets().collect::<Vec<_>>().into_iter(),
        family,
        ants: Vec::new(),
        next_consequent: usize::MAX,
    })
}

struct OwnedSequents {
    family: SequentFamily,
    sets: std::vec::IntoIter<Vec<usize>>,
    ants: Vec<Formula>,
    next_consequent: usize,
}

impl Iterator for OwnedSequents {
    type Item = Sequent;

    fn next(&mut self) -> Option<Sequent> {
        if self.next_consequent >= self.family.formulas.len() {
            let set = self.sets.next()?;
            self.ants = set.iter().map(|&i| self.family.formulas[i]).collect();
            self.next_consequent = 0;
        }
        let c = self.family.formulas[self.next_consequent];
        self.next_consequent += 1;
        Some(Sequent::new(self.ants.iter().copied(), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let f = SequentFamily::new(2, 2, 2, Connectives::AND_IMP_TOP_BOT);
        assert_eq!(f.formulas.len(), 2596);
        assert_eq!(f.antecedent_set_count(), 3_370_907);
        assert_eq!(enumerate_formulas(1, 0, Connectives::AND).len(), 1);
        assert_eq!(enumerate_formulas(1, 1, Connectives::AND_IMP).len(), 3);
    }

    #[test]
    fn small_stream() {
        let all: Vec<Sequent> = enumerate_small_sequents(1, 1, 1, Connectives::AND_IMP, 1000)
            .unwrap()
            .collect();
        // 3 formulas, 4 antecedent sets.
        assert_eq!(all.len(), 12);
        let distinct: rustc_hash::FxHashSet<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(distinct.len(), 12);
        assert_eq!(all[0].to_string(), "|- x");
        assert!(enumerate_small_sequents(2, 2, 2, Connectives::AND_IMP_TOP_BOT, 1000).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(
            c,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
