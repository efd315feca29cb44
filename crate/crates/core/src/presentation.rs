//! Stabilization presentations for knot types that are not Legendrian simple,
//! and the congruence-closure engine that turns one into multiplicities.
//!
//! Stabilizations commute, so a word is just a pair of exponents
//! `S₊^plus S₋^minus`. The engine enumerates every word applied to every
//! generator down to a tb floor, unions all extensions of the
//! identifications (this is exactly the congruence they generate), and then
//! checks the non-identifications against the result.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which stabilizations may be applied to a generator when enumerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Allowed {
    Both,
    PosOnly,
    NegOnly,
}

impl Allowed {
    fn admits(self, w: Word) -> bool {
        match self {
            Allowed::Both => true,
            Allowed::PosOnly => w.minus == 0,
            Allowed::NegOnly => w.plus == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub name: String,
    pub tb: i64,
    pub r: i64,
    pub allowed: Allowed,
}

/// `S₊^plus S₋^minus` in the free commutative monoid on `S₊, S₋`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Word {
    pub plus: u32,
    pub minus: u32,
}

impl Word {
    pub const EMPTY: Word = Word { plus: 0, minus: 0 };
    pub const PLUS: Word = Word { plus: 1, minus: 0 };
    pub const MINUS: Word = Word { plus: 0, minus: 1 };

    pub fn new(plus: u32, minus: u32) -> Self {
        Word { plus, minus }
    }

    pub fn len(self) -> u32 {
        self.plus + self.minus
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn then(self, other: Word) -> Word {
        Word {
            plus: self.plus + other.plus,
            minus: self.minus + other.minus,
        }
    }

    /// `(Δr, Δtb)` caused by this word.
    pub fn shift(self) -> (i64, i64) {
        let (p, m) = (i64::from(self.plus), i64::from(self.minus));
        (p - m, -(p + m))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, s) in [(self.plus, "S+"), (self.minus, "S-")] {
            match n {
                0 => {}
                1 => parts.push(s.to_string()),
                _ => parts.push(format!("{s}^{n}")),
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// A word applied to a named generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Stabilized {
    pub generator: String,
    pub word: Word,
}

impl Stabilized {
    pub fn new(generator: &str, plus: u32, minus: u32) -> Self {
        Stabilized {
            generator: generator.to_string(),
            word: Word::new(plus, minus),
        }
    }

    fn extend(&self, w: Word) -> Stabilized {
        Stabilized {
            generator: self.generator.clone(),
            word: self.word.then(w),
        }
    }
}

impl fmt::Display for Stabilized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str(&self.generator)
        } else {
            write!(f, "{}({})", self.word, self.generator)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Identification {
    pub lhs: Stabilized,
    pub rhs: Stabilized,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// How far a non-identification reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Only the stated pair.
    Single,
    /// The stated pair and every pair obtained by applying `step` `k` more
    /// times to both sides, for all `k >= 0`.
    ForAllK { step: Word },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NonIdentification {
    pub lhs: Stabilized,
    pub rhs: Stabilized,
    pub scope: Scope,
}

impl fmt::Display for NonIdentification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} != {}", self.lhs, self.rhs)?;
        if let Scope::ForAllK { step } = self.scope {
            write!(f, " (after any power of {step})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StabPresentation {
    pub generators: Vec<Generator>,
    pub identifications: Vec<Identification>,
    pub non_identifications: Vec<NonIdentification>,
}

impl StabPresentation {
    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// `(r, tb)` of a stabilized generator.
    pub fn position(&self, x: &Stabilized) -> Result<(i64, i64)> {
        let g = self.generator(&x.generator)?;
        let (dr, dtb) = x.word.shift();
        Ok((g.r + dr, g.tb + dtb))
    }

    pub fn tb_bar(&self) -> Option<i64> {
        self.generators.iter().map(|g| g.tb).max()
    }

    /// Every relation must relate knots with equal `(r, tb)`.
    pub fn validate(&self) -> Result<()> {
        for id in &self.identifications {
            if self.position(&id.lhs)? != self.position(&id.rhs)? {
                return Err(Error::InconsistentRelation(id.to_string()));
            }
        }
        for non in &self.non_identifications {
            if self.position(&non.lhs)? != self.position(&non.rhs)? {
                return Err(Error::InconsistentRelation(non.to_string()));
            }
        }
        Ok(())
    }

    /// Longest word appearing in any relation.
    pub(crate) fn relation_depth(&self) -> u32 {
        let ids = self
            .identifications
            .iter()
            .flat_map(|i| [i.lhs.word, i.rhs.word]);
        let nons = self
            .non_identifications
            .iter()
            .flat_map(|i| [i.lhs.word, i.rhs.word]);
        ids.chain(nons).map(Word::len).max().unwrap_or(0)
    }
}

/// Per-cell class counts, keyed by `(r, tb)`.
pub type Multiplicities = BTreeMap<(i64, i64), u32>;

/// Legendrian classes of a presentation, enumerated down to a floor.
#[derive(Debug, Clone)]
pub(crate) struct Closure {
    elements: Vec<Element>,
    index: HashMap<(usize, Word), usize>,
    parent: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Element {
    generator: usize,
    word: Word,
    r: i64,
    tb: i64,
}

impl Closure {
    /// Enumerates words whose result has `tb >= floor` and whose length is
    /// at most `max_len`.
    pub(crate) fn build(
        pres: &StabPresentation,
        floor: i64,
        max_len: Option<u32>,
    ) -> Result<Closure> {
        pres.validate()?;
        let mut c = Closure {
            elements: Vec::new(),
            index: HashMap::new(),
            parent: Vec::new(),
        };
        for (gi, g) in pres.generators.iter().enumerate() {
            if g.tb < floor {
                continue;
            }
            let mut depth = u32::try_from(g.tb - floor).map_err(|_| Error::Overflow("depth"))?;
            if let Some(m) = max_len {
                depth = depth.min(m);
            }
            for len in 0..=depth {
                for plus in 0..=len {
                    let word = Word::new(plus, len - plus);
                    if !g.allowed.admits(word) {
                        continue;
                    }
                    let (dr, dtb) = word.shift();
                    let id = c.elements.len();
                    c.elements.push(Element {
                        generator: gi,
                        word,
                        r: g.r + dr,
                        tb: g.tb + dtb,
                    });
                    c.index.insert((gi, word), id);
                    c.parent.push(id);
                }
            }
        }

        let max_extension = c.elements.iter().map(|e| e.word.len()).max().unwrap_or(0);
        for id in &pres.identifications {
            for len in 0..=max_extension {
                for plus in 0..=len {
                    let w = Word::new(plus, len - plus);
                    let (Some(a), Some(b)) = (
                        c.lookup(pres, &id.lhs.extend(w)),
                        c.lookup(pres, &id.rhs.extend(w)),
                    ) else {
                        continue;
                    };
                    c.union(a, b);
                }
            }
        }

        for non in &pres.non_identifications {
            let mut lhs = non.lhs.clone();
            let mut rhs = non.rhs.clone();
            loop {
                let (a, b) = (c.lookup(pres, &lhs), c.lookup(pres, &rhs));
                let (Some(a), Some(b)) = (a, b) else { break };
                if c.find(a) == c.find(b) {
                    return Err(Error::InconsistentPresentation(format!(
                        "{lhs} and {rhs} are identified, contradicting {non}"
                    )));
                }
                match non.scope {
                    Scope::Single => break,
                    Scope::ForAllK { step } if step.is_empty() => break,
                    Scope::ForAllK { step } => {
                        lhs = lhs.extend(step);
                        rhs = rhs.extend(step);
                    }
                }
            }
        }
        Ok(c)
    }

    fn lookup(&self, pres: &StabPresentation, x: &Stabilized) -> Option<usize> {
        let gi = pres.generators.iter().position(|g| g.name == x.generator)?;
        self.index.get(&(gi, x.word)).copied()
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller index wins so roots are deterministic.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Number of distinct classes at each populated cell.
    pub(crate) fn multiplicities(&mut self) -> Multiplicities {
        let mut roots: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for i in 0..self.elements.len() {
            let e = self.elements[i];
            let root = self.find(i);
            roots.entry((e.r, e.tb)).or_default().push(root);
        }
        roots
            .into_iter()
            .map(|(cell, mut rs)| {
                rs.sort_unstable();
                rs.dedup();
                (cell, rs.len() as u32)
            })
            .collect()
    }

    /// Merges every class with its negative stabilization and returns the
    /// number of resulting classes for each self-linking number `tb - r`,
    /// counting only classes that reach `tb >= floor`.
    pub(crate) fn negative_stabilization_quotient(
        &mut self,
        floor: i64,
    ) -> Result<BTreeMap<i64, u32>> {
        for i in 0..self.elements.len() {
            let e = self.elements[i];
            if let Some(&j) = self.index.get(&(e.generator, e.word.then(Word::MINUS))) {
                self.union(i, j);
            }
        }
        let mut sl_of_root: BTreeMap<usize, i64> = BTreeMap::new();
        let mut visible: BTreeMap<usize, bool> = BTreeMap::new();
        for i in 0..self.elements.len() {
            let e = self.elements[i];
            let root = self.find(i);
            let sl = e.tb - e.r;
            if let Some(&prev) = sl_of_root.get(&root) {
                if prev != sl {
                    return Err(Error::Internal(format!(
                        "self-linking not constant on a transverse class ({prev} vs {sl})"
                    )));
                }
            }
            sl_of_root.insert(root, sl);
            *visible.entry(root).or_default() |= e.tb >= floor;
        }
        let mut counts = BTreeMap::new();
        for (root, sl) in sl_of_root {
            if visible[&root] {
                *counts.entry(sl).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }
}

/// Largest depth accepted by [`stabilization_word_oracle`].
pub const MAX_ORACLE_DEPTH: u32 = 12;

/// Brute-force multiplicities from all words of length at most `depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMap {
    pub cells: Multiplicities,
    /// Cells with `tb >= complete_from` have every word that can reach them.
    pub complete_from: i64,
}

/// Enumerates `S₊^a S₋^b (g)` for `a + b <= depth` and every generator,
/// quotients by the identifications, enforces the non-identifications and
/// counts classes per `(r, tb)`.
pub fn stabilization_word_oracle(pres: &StabPresentation, depth: u32) -> Result<OracleMap> {
    if depth > MAX_ORACLE_DEPTH {
        return Err(Error::DepthTooLarge(depth, MAX_ORACLE_DEPTH));
    }
    let top = pres.tb_bar().unwrap_or(0);
    let lowest_generator = pres.generators.iter().map(|g| g.tb).min().unwrap_or(0);
    let floor = lowest_generator - i64::from(depth);
    let mut closure = Closure::build(pres, floor, Some(depth))?;
    Ok(OracleMap {
        cells: closure.multiplicities(),
        complete_from: top - i64::from(depth),
    })
}

/// Self-linking number → number of transverse isotopy classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransverseClassification {
    pub floor: i64,
    pub counts: BTreeMap<i64, u32>,
}

impl TransverseClassification {
    pub fn count(&self, sl: i64) -> u32 {
        self.counts.get(&sl).copied().unwrap_or(0)
    }
}

/// Transverse classes as Legendrian classes modulo negative stabilization,
/// with self-linking number `sl = tb - r`.
pub fn transverse_classes(pres: &StabPresentation, floor: i64) -> Result<TransverseClassification> {
    // Merges through S₋ may need a few cells below the floor.
    let margin = i64::from(pres.relation_depth()) + 2;
    let mut closure = Closure::build(pres, floor - margin, None)?;
    let counts = closure.negative_stabilization_quotient(floor)?;
    Ok(TransverseClassification { floor, counts })
}

/// Multiplicities of every cell with `tb >= floor`.
pub fn closure_multiplicities(pres: &StabPresentation, floor: i64) -> Result<Multiplicities> {
    let mut closure = Closure::build(pres, floor, None)?;
    Ok(closure.multiplicities())
}
