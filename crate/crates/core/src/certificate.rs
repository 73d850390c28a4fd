//! Machine-checked claims. A certificate is a named list of clauses, each an
//! exact identity (or set equality) that was evaluated, with a witness when
//! it fails.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub claim: String,
    pub pass: bool,
    /// Residual polynomial, offending point, ... (empty on success unless informative).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub clauses: Vec<Clause>,
}

impl Certificate {
    pub fn new(name: impl Into<String>) -> Self {
        Certificate { name: name.into(), clauses: Vec::new() }
    }

    pub fn push(&mut self, claim: impl Into<String>, pass: bool, witness: Option<String>) {
        self.clauses.push(Clause { claim: claim.into(), pass, witness });
    }

    /// Records a claim that holds iff `residual` is `None`.
    pub fn check(&mut self, claim: impl Into<String>, residual: Option<String>) {
        let pass = residual.is_none();
        self.push(claim, pass, residual);
    }

    /// Records `lhs == rhs`, with the two sides as witness on failure.
    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, claim: impl Into<String>, lhs: &T, rhs: &T) {
        let residual = (lhs != rhs).then(|| format!("{lhs} != {rhs}"));
        self.check(claim, residual);
    }

    pub fn extend(&mut self, other: Certificate) {
        for c in other.clauses {
            let claim = format!("{}: {}", other.name, c.claim);
            self.clauses.push(Clause { claim, ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {} [{}]", self.name, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.clauses {
            write!(f, "  {} {}", if c.pass { "PASS" } else { "FAIL" }, c.claim)?;
            if let Some(w) = &c.witness {
                write!(f, " -- {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
