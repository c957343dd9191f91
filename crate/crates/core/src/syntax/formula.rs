//! Hash-consed propositional formulas.
//!
//! Every distinct formula is allocated exactly once in a process-wide table
//! and handed out as a `Formula`, a copyable reference to that allocation.
//! Two formulas are structurally equal iff they carry the same id, so
//! equality, hashing and ordering are all O(1).
//!
//! The table only grows. Reading a formula's structure needs no lock;
//! interning takes a mutex so ids are assigned serially.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{LazyLock, Mutex};

use rustc_hash::FxHashMap;

/// Binary connectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    Imp,
    Or,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Imp => "->",
            Connective::Or => "|",
        }
    }
}

/// The shape of a formula node, one level deep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Var(&'static str),
    Top,
    Bot,
    And(Formula, Formula),
    Imp(Formula, Formula),
    Or(Formula, Formula),
}

#[derive(Debug)]
pub(crate) struct Node {
    id: u32,
    depth: u32,
    len: u64,
    has_or: bool,
    kind: Kind,
}

/// An interned formula.
#[derive(Clone, Copy)]
pub struct Formula(&'static Node);

impl PartialEq for Formula {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    #[inline]
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

/// Orders by interned id, i.e. by construction order. Use
/// [`crate::syntax::canonical_cmp`] where a run-independent order is needed.
impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Formula {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.id.cmp(&other.0.id)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula#{}({})", self.0.id, self)
    }
}

struct Interner {
    vars: FxHashMap<Box<str>, Formula>,
    binary: FxHashMap<(Connective, u32, u32), Formula>,
    next_id: u32,
}

static TOP: LazyLock<Formula> = LazyLock::new(|| intern_leaf(Kind::Top));
static BOT: LazyLock<Formula> = LazyLock::new(|| intern_leaf(Kind::Bot));

static INTERNER: LazyLock<Mutex<Interner>> = LazyLock::new(|| {
    Mutex::new(Interner {
        vars: FxHashMap::default(),
        binary: FxHashMap::default(),
        // ids 0 and 1 are reserved for top and bot.
        next_id: 2,
    })
});

fn alloc(id: u32, depth: u32, len: u64, has_or: bool, kind: Kind) -> Formula {
    Formula(Box::leak(Box::new(Node {
        id,
        depth,
        len,
        has_or,
        kind,
    })))
}

fn intern_leaf(kind: Kind) -> Formula {
    match kind {
        Kind::Top => alloc(0, 0, 1, false, Kind::Top),
        Kind::Bot => alloc(1, 0, 1, false, Kind::Bot),
        _ => unreachable!("only constants are pre-allocated"),
    }
}

/// Number of formulas interned so far (including the two constants).
pub fn interned_count() -> usize {
    INTERNER.lock().unwrap().next_id as usize
}

impl Formula {
    pub fn top() -> Formula {
        *TOP
    }

    pub fn bot() -> Formula {
        *BOT
    }

    /// Interns a propositional variable. The name is not validated here;
    /// the parser enforces the identifier grammar.
    pub fn var(name: &str) -> Formula {
        let mut table = INTERNER.lock().unwrap();
        if let Some(&f) = table.vars.get(name) {
            return f;
        }
        let id = table.next_id;
        table.next_id += 1;
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let f = alloc(id, 0, 1, false, Kind::Var(leaked));
        table.vars.insert(name.into(), f);
        f
    }

    pub fn binary(op: Connective, left: Formula, right: Formula) -> Formula {
        let key = (op, left.0.id, right.0.id);
        let mut table = INTERNER.lock().unwrap();
        if let Some(&f) = table.binary.get(&key) {
            return f;
        }
        let id = table.next_id;
        table.next_id += 1;
        let kind = match op {
            Connective::And => Kind::And(left, right),
            Connective::Imp => Kind::Imp(left, right),
            Connective::Or => Kind::Or(left, right),
        };
        let len = 1u64
            .saturating_add(left.length())
            .saturating_add(right.length());
        let has_or = op == Connective::Or || left.0.has_or || right.0.has_or;
        let depth = 1 + left.0.depth.max(right.0.depth);
        let f = alloc(id, depth, len, has_or, kind);
        table.binary.insert(key, f);
        f
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::And, left, right)
    }

    pub fn imp(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Imp, left, right)
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Or, left, right)
    }

    #[inline]
    pub fn id(self) -> u32 {
        self.0.id
    }

    #[inline]
    pub fn kind(self) -> Kind {
        self.0.kind
    }

    /// Number of nodes in the formula tree (atoms count 1).
    #[inline]
    pub fn length(self) -> u64 {
        self.0.len
    }

    /// Whether `∨` occurs anywhere in the formula.
    #[inline]
    pub fn has_or(self) -> bool {
        self.0.has_or
    }

    pub fn is_atom(self) -> bool {
        matches!(self.kind(), Kind::Var(_) | Kind::Top | Kind::Bot)
    }

    pub fn is_imp(self) -> bool {
        matches!(self.kind(), Kind::Imp(..))
    }

    pub fn var_name(self) -> Option<&'static str> {
        match self.kind() {
            Kind::Var(name) => Some(name),
            _ => None,
        }
    }

    /// The binary connective and operands, if this is not an atom.
    pub fn split(self) -> Option<(Connective, Formula, Formula)> {
        match self.kind() {
            Kind::And(a, b) => Some((Connective::And, a, b)),
            Kind::Imp(a, b) => Some((Connective::Imp, a, b)),
            Kind::Or(a, b) => Some((Connective::Or, a, b)),
            _ => None,
        }
    }

    /// Nesting depth; atoms have depth 0.
    #[inline]
    pub fn depth(self) -> usize {
        self.0.depth as usize
    }

    /// Substitutes `replacement` for every occurrence of the variable `hole`.
    pub fn substitute(self, hole: Formula, replacement: Formula) -> Formula {
        if self == hole {
            return replacement;
        }
        match self.split() {
            None => self,
            Some((op, a, b)) => {
                let a2 = a.substitute(hole, replacement);
                let b2 = b.substitute(hole, replacement);
                if a2 == a && b2 == b {
                    self
                } else {
                    Formula::binary(op, a2, b2)
                }
            }
        }
    }

    /// Whether `other` occurs as a subterm of `self` (including `self`).
    pub fn contains(self, other: Formula) -> bool {
        if self == other {
            return true;
        }
        if self.length() <= other.length() {
            return false;
        }
        match self.split() {
            None => false,
            Some((_, a, b)) => a.contains(other) || b.contains(other),
        }
    }

    /// Distinct variable names, in order of first occurrence.
    pub fn variables(self) -> Vec<&'static str> {
        let mut out = Vec::new();
        collect_vars(self, &mut out);
        out
    }
}

fn collect_vars(f: Formula, out: &mut Vec<&'static str>) {
    match f.kind() {
        Kind::Var(name) => {
            if !out.contains(&name) {
                out.push(name)
            }
        }
        Kind::Top | Kind::Bot => {}
        Kind::And(a, b) | Kind::Imp(a, b) | Kind::Or(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

// Nodes are immutable once leaked.
const _: () = {
    const fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Formula>();
};
