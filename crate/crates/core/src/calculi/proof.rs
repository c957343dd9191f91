use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use super::rules::RuleTag;
use crate::syntax::{parse_sequent, Sequent};

/// One line of a derivation. Premises are 0-based indices of earlier steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofStep {
    pub conclusion: Sequent,
    pub rule: RuleTag,
    pub premises: Vec<usize>,
}

impl ProofStep {
    pub fn new(conclusion: Sequent, rule: RuleTag, premises: Vec<usize>) -> ProofStep {
        ProofStep {
            conclusion,
            rule,
            premises,
        }
    }
}

/// A derivation as a topologically ordered list of steps. The last step is
/// the conclusion of the whole proof.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Proof {
    pub steps: Vec<ProofStep>,
}

impl Proof {
    pub fn new(steps: Vec<ProofStep>) -> Proof {
        Proof { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn conclusion(&self) -> Option<&Sequent> {
        self.steps.last().map(|s| &s.conclusion)
    }

    pub fn rules_used(&self) -> impl Iterator<Item = RuleTag> + '_ {
        self.steps.iter().map(|s| s.rule)
    }

    /// Parses the line format written by [`Proof`]'s `Display`.
    pub fn parse(text: &str) -> Result<Proof, ProofFormatError> {
        parse_proof(text)
    }
}

/// Writes one step per line:
/// `<index>. <sequent> ; rule=<RuleTag> ; premises=<i,j,...>` with 1-based indices.
impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            write!(
                f,
                "{}. {} ; rule={} ; premises=",
                i + 1,
                step.conclusion,
                step.rule
            )?;
            for (k, p) in step.premises.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("proof line {line}: {message}")]
pub struct ProofFormatError {
    /// 1-based line number in the input text.
    pub line: usize,
    pub message: String,
}

fn parse_proof(text: &str) -> Result<Proof, ProofFormatError> {
    let mut steps = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ProofFormatError { line, message };

        let (index, rest) = content.split_once('.').ok_or_else(|| {
            err("expected `<index>. <sequent> ; rule=<tag> ; premises=<list>`".into())
        })?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| err(format!("bad step index `{}`", index.trim())))?;
        if index != steps.len() + 1 {
            return Err(err(format!(
                "expected step index {}, found {index}",
                steps.len() + 1
            )));
        }

        let fields: Vec<&str> = rest.split(';').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(err("expected three `;`-separated fields".into()));
        }
        let conclusion = parse_sequent(fields[0]).map_err(|e| err(e.to_string()))?;
        let rule = fields[1]
            .strip_prefix("rule=")
            .ok_or_else(|| err("expected `rule=<tag>`".into()))?
            .trim()
            .parse::<RuleTag>()
            .map_err(|e| err(e.to_string()))?;
        let list = fields[2]
            .strip_prefix("premises=")
            .ok_or_else(|| err("expected `premises=<list>`".into()))?
            .trim();
        let mut premises = Vec::new();
        if !list.is_empty() {
            for item in list.split(',') {
                let p: usize = item
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad premise index `{}`", item.trim())))?;
                if p == 0 || p >= index {
                    return Err(err(format!(
                        "premise {p} of step {index} does not refer to an earlier step"
                    )));
                }
                premises.push(p - 1);
            }
        }
        steps.push(ProofStep::new(conclusion, rule, premises));
    }
    Ok(Proof { steps })
}

/// Incremental proof construction that shares repeated sequents.
///
/// Adding a sequent that is already present returns the existing index
/// instead of a new step, so composed derivations never repeat a line.
#[derive(Default)]
pub struct ProofBuilder {
    steps: Vec<ProofStep>,
    index: FxHashMap<Sequent, usize>,
}

impl ProofBuilder {
    pub fn new() -> ProofBuilder {
        ProofBuilder::default()
    }

    pub fn add(&mut self, conclusion: Sequent, rule: RuleTag, premises: Vec<usize>) -> usize {
        if let Some(&i) = self.index.get(&conclusion) {
            return i;
        }
        debug_assert!(premises.iter().all(|&p| p < self.steps.len()));
        let i = self.steps.len();
        self.index.insert(conclusion.clone(), i);
        self.steps.push(ProofStep::new(conclusion, rule, premises));
        i
    }

    pub fn find(&self, s: &Sequent) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn sequent(&self, i: usize) -> &Sequent {
        &self.steps[i].conclusion
    }

    /// `φ ⊢ φ` for every `φ`.
    pub fn x2x(&mut self, f: crate::syntax::Formula) -> usize {
        self.add(Sequent::new([f], f), RuleTag::X2X, vec![])
    }

    /// Widens step `i` to `target`, which must have a superset of its
    /// antecedents and the same consequent.
    pub fn inflate(&mut self, i: usize, target: Sequent) -> usize {
        if self.steps[i].conclusion == target {
            return i;
        }
        debug_assert!(self.steps[i].conclusion.antecedents_subset_of(&target));
        self.add(target, RuleTag::PremiseInflation, vec![i])
    }

    /// Copies every step of `proof`, returning the index of its conclusion.
    pub fn import(&mut self, proof: &Proof) -> Option<usize> {
        let mut map = Vec::with_capacity(proof.steps.len());
        for step in &proof.steps {
            let premises = step.premises.iter().map(|&p| map[p]).collect();
            map.push(self.add(step.conclusion.clone(), step.rule, premises));
        }
        map.last().copied()
    }

    /// The derivation of step `goal`: its ancestors in order, ending with it.
    pub fn finish(self, goal: usize) -> Proof {
        extract(&self.steps, goal)
    }
}

/// Ancestors of `goal` (inclusive) in their original order, with premise
/// indices renumbered.
pub(crate) fn extract(steps: &[ProofStep], goal: usize) -> Proof {
    let mut needed = vec![false; goal + 1];
    needed[goal] = true;
    for i in (0..=goal).rev() {
        if needed[i] {
            for &p in &steps[i].premises {
                needed[p] = true;
            }
        }
    }
    let mut renumber = vec![usize::MAX; goal + 1];
    let mut out = Vec::new();
    for i in 0..=goal {
        if needed[i] {
            renumber[i] = out.len();
            let s = &steps[i];
            out.push(ProofStep::new(
                s.conclusion.clone(),
                s.rule,
                s.premises.iter().map(|&p| renumber[p]).collect(),
            ));
        }
    }
    Proof { steps: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    const SAMPLE: &str = "\
# (x1 -> x2) |- x2 in PL_ED
1. x1 -> x2 |- x1 -> x2 ; rule=X2X ; premises=
2. x1 -> x2 |- x2 ; rule=ImpED ; premises=1
";

    #[test]
    fn parse_and_print_round_trip() {
        let p = Proof::parse(SAMPLE).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.steps[1].premises, vec![0]);
        assert_eq!(p.steps[1].rule, RuleTag::ImpED);
        let printed = p.to_string();
        assert_eq!(
            printed,
            "1. x1 -> x2 |- x1 -> x2 ; rule=X2X ; premises=\n2. x1 -> x2 |- x2 ; rule=ImpED ; premises=1\n"
        );
        assert_eq!(Proof::parse(&printed).unwrap(), p);
    }

    #[test]
    fn forward_reference_is_rejected() {
        let e = Proof::parse("1. x |- x ; rule=X2X ; premises=1\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e =
            Proof::parse("1. x |- x ; rule=X2X ; premises=\n2. x |- x ; rule=Cut ; premises=1,3\n")
                .unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn malformed_lines() {
        assert!(Proof::parse("1. x |- x ; rule=Nope ; premises=").is_err());
        assert!(Proof::parse("2. x |- x ; rule=X2X ; premises=").is_err());
        assert!(Proof::parse("1. x |- x ; rule=X2X").is_err());
        assert!(Proof::parse("1. x |- ; rule=X2X ; premises=").is_err());
    }

    #[test]
    fn builder_shares_sequents_and_prunes() {
        let x = parse_formula("x").unwrap();
        let y = parse_formula("y").unwrap();
        let mut b = ProofBuilder::new();
        let a = b.x2x(x);
        let _unused = b.x2x(y);
        assert_eq!(b.x2x(x), a);
        let wide = b.inflate(a, Sequent::new([x, y], x));
        let p = b.finish(wide);
        assert_eq!(p.len(), 2);
        assert_eq!(p.steps[1].premises, vec![0]);
    }
}
