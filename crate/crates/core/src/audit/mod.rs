//! Claim registry and grid runner.
//!
//! Every published identity is a [`Claim`]: a default parameter grid plus a
//! checker that evaluates the printed form against an independent oracle and,
//! where the printing is known to be ambiguous, a few named variants. Cells are
//! evaluated in parallel; results are ordered by claim id and then by cell.

mod registry;
mod report;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qfield::Rational;

pub use registry::{claim, claims, named_spec, SPEC_NAMES};
pub use report::{render_structured, render_text, structured, StructuredReport};

/// One coordinate of a grid cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Int(i64),
    Rat(Rational),
    Name(&'static str),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(n) => write!(f, "{n}"),
            Param::Rat(q) => write!(f, "{q}"),
            Param::Name(s) => f.write_str(s),
        }
    }
}

/// Named parameters, compared lexicographically in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(Vec<(&'static str, Param)>);

impl Cell {
    pub fn new(params: Vec<(&'static str, Param)>) -> Self {
        Cell(params)
    }

    pub fn params(&self) -> &[(&'static str, Param)] {
        &self.0
    }

    pub fn get(&self, key: &str) -> Option<&Param> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    fn expect(&self, key: &str) -> &Param {
        self.get(key).unwrap_or_else(|| panic!("grid cell has no `{key}`"))
    }

    pub fn int(&self, key: &str) -> i64 {
        match self.expect(key) {
            Param::Int(n) => *n,
            other => panic!("`{key}` is {other:?}, not an integer"),
        }
    }

    pub fn uint(&self, key: &str) -> u64 {
        u64::try_from(self.int(key)).expect("non-negative grid parameter")
    }

    pub fn rat(&self, key: &str) -> Rational {
        match self.expect(key) {
            Param::Rat(q) => q.clone(),
            Param::Int(n) => crate::qfield::rational(*n),
            other => panic!("`{key}` is {other:?}, not a rational"),
        }
    }

    pub fn name(&self, key: &str) -> &'static str {
        match self.expect(key) {
            Param::Name(s) => s,
            other => panic!("`{key}` is {other:?}, not a name"),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// One side-by-side evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Self {
        Check { lhs: lhs.to_string(), rhs: rhs.to_string(), holds: lhs == rhs }
    }

    pub fn new(lhs: impl Into<String>, rhs: impl Into<String>, holds: bool) -> Self {
        Check { lhs: lhs.into(), rhs: rhs.into(), holds }
    }

    fn failed(err: &Error) -> Self {
        Check { lhs: format!("error: {err}"), rhs: String::new(), holds: false }
    }
}

/// Printed form plus the registered variants, as computed by a checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub printed: Check,
    pub variants: Vec<(&'static str, Check)>,
}

impl Outcome {
    pub fn printed(check: Check) -> Self {
        Outcome { printed: check, variants: Vec::new() }
    }

    pub fn with(mut self, id: &'static str, check: Check) -> Self {
        self.variants.push((id, check));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The printed form fails; the named variant holds.
    VariantPass(&'static str),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::VariantPass(_) => "variant-pass",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditResult {
    pub claim: &'static str,
    pub cell: Cell,
    pub verdict: Verdict,
    /// Printed-form values, present whenever the printed form fails.
    pub witness: Option<Check>,
    pub variants: Vec<(&'static str, Check)>,
}

type GridFn = dyn Fn(&GridOverrides) -> Vec<Cell> + Send + Sync;
type CheckFn = dyn Fn(&Cell) -> Result<Outcome> + Send + Sync;

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// Where the statement sits in the source it encodes.
    pub locus: &'static str,
    pub hypotheses: &'static [&'static str],
    grid: Box<GridFn>,
    check: Box<CheckFn>,
}

impl Claim {
    pub fn grid(&self, overrides: &GridOverrides) -> Vec<Cell> {
        let mut cells = (self.grid)(overrides);
        cells.sort();
        cells.dedup();
        cells
    }

    pub fn evaluate(&self, cell: &Cell) -> AuditResult {
        let outcome = (self.check)(cell).unwrap_or_else(|e| Outcome::printed(Check::failed(&e)));
        let verdict = if outcome.printed.holds {
            Verdict::Pass
        } else {
            match outcome.variants.iter().find(|(_, c)| c.holds) {
                Some((id, _)) => Verdict::VariantPass(id),
                None => Verdict::Fail,
            }
        };
        AuditResult {
            claim: self.id,
            cell: cell.clone(),
            witness: (!outcome.printed.holds).then_some(outcome.printed),
            verdict,
            variants: outcome.variants,
        }
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("locus", &self.locus).finish()
    }
}

/// Caps applied on top of every claim's default grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridOverrides {
    /// Largest index `n` (or `s`, `m`) in every grid.
    pub max_n: Option<u64>,
    /// Largest exponent parameter `r`.
    pub max_r: Option<u32>,
}

impl GridOverrides {
    pub fn n(&self, default: u64) -> u64 {
        self.max_n.unwrap_or(default)
    }

    pub fn r(&self, default: u32) -> u32 {
        self.max_r.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// `"all"` or a comma-separated id list.
    pub fn parse(s: &str) -> Self {
        if s.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(s.split(',').map(|id| id.trim().to_string()).filter(|id| !id.is_empty()).collect())
        }
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::All => f.write_str("all"),
            Selection::Ids(ids) => f.write_str(&ids.join(",")),
        }
    }
}

/// All results for one claim.
#[derive(Debug)]
pub struct ClaimRun {
    pub claim: &'static Claim,
    pub results: Vec<AuditResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub cells: usize,
    pub pass: usize,
    pub variant_pass: usize,
    pub fail: usize,
}

impl ClaimRun {
    pub fn totals(&self) -> Totals {
        let mut t = Totals { cells: self.results.len(), ..Totals::default() };
        for r in &self.results {
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::VariantPass(_) => t.variant_pass += 1,
                Verdict::Fail => t.fail += 1,
            }
        }
        t
    }

    /// Per parameter: `[min, max]` for integers, the value set otherwise.
    pub fn grid_summary(&self) -> BTreeMap<&'static str, String> {
        let mut values: BTreeMap<&'static str, Vec<&Param>> = BTreeMap::new();
        for r in &self.results {
            for (k, v) in r.cell.params() {
                values.entry(k).or_default().push(v);
            }
        }
        values
            .into_iter()
            .map(|(k, mut vs)| {
                vs.sort();
                vs.dedup();
                let ints: Option<Vec<i64>> =
                    vs.iter().map(|v| if let Param::Int(n) = v { Some(*n) } else { None }).collect();
                let summary = match ints {
                    Some(ns) if ns.len() > 4 => format!("[{}, {}]", ns[0], ns[ns.len() - 1]),
                    _ => format!("{{{}}}", vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")),
                };
                (k, summary)
            })
            .collect()
    }
}

#[derive(Debug)]
pub struct AuditRun {
    pub selection: Selection,
    pub overrides: GridOverrides,
    pub claims: Vec<ClaimRun>,
}

impl AuditRun {
    /// True iff some cell failed with no passing variant.
    pub fn has_failures(&self) -> bool {
        self.claims.iter().any(|c| c.totals().fail > 0)
    }

    pub fn results(&self) -> impl Iterator<Item = &AuditResult> {
        self.claims.iter().flat_map(|c| c.results.iter())
    }
}

/// Evaluates the selected claims over their grids.
pub fn run_audit(selection: &Selection, overrides: &GridOverrides) -> Result<AuditRun> {
    let mut chosen: Vec<&'static Claim> = match selection {
        Selection::All => claims().iter().collect(),
        Selection::Ids(ids) => ids
            .iter()
            .map(|id| claim(id).ok_or_else(|| Error::UnknownClaim(id.clone())))
            .collect::<Result<_>>()?,
    };
    chosen.sort_by_key(|c| c.id);
    chosen.dedup_by_key(|c| c.id);
    let jobs: Vec<(usize, Cell)> = chosen
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.grid(overrides).into_iter().map(move |cell| (i, cell)))
        .collect();
    let evaluated: Vec<(usize, AuditResult)> =
        jobs.par_iter().map(|(i, cell)| (*i, chosen[*i].evaluate(cell))).collect();
    let mut runs: Vec<ClaimRun> = chosen.iter().map(|c| ClaimRun { claim: c, results: Vec::new() }).collect();
    for (i, result) in evaluated {
        runs[i].results.push(result);
    }
    Ok(AuditRun { selection: selection.clone(), overrides: *overrides, claims: runs })
}
