use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::field::{PrimeField, Rationals};
use super::groebner::degeneracy_locus_empty;
use super::presentation::{MapKind, MonadPresentation};
use crate::cohomology::spectrum_h1;
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

pub const DEFAULT_PRIME: u64 = 32003;
pub const BACKUP_PRIME: u64 = 65537;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Primes for the Gröbner tests and the modular rank cross-check.
    pub primes: Vec<u64>,
    pub l_range: RangeInclusive<i64>,
}

impl VerifyConfig {
    /// The given prime plus a distinct backup.
    pub fn with_prime(p: u64, l_range: RangeInclusive<i64>) -> Self {
        let backup = if p == BACKUP_PRIME { DEFAULT_PRIME } else { BACKUP_PRIME };
        VerifyConfig { primes: vec![p, backup], l_range }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig::with_prime(DEFAULT_PRIME, -8..=-1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    /// Worst of two outcomes: a failure dominates inconclusiveness.
    fn and(self, other: Outcome) -> Outcome {
        use Outcome::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusCheck {
    pub map: MapKind,
    pub prime: u64,
    /// `None` when the test could not be run at this prime.
    pub empty: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Check {
    pub l: i64,
    pub rational: u64,
    /// `None` where the presentation does not reduce modulo the prime.
    pub modular: Vec<Option<u64>>,
    pub expected: Option<u64>,
}

impl H1Check {
    fn agrees(&self) -> bool {
        self.modular.iter().all(|&m| m == Some(self.rational))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub problems: Vec<String>,
    pub c2: i64,
    pub compose_is_zero: bool,
    pub loci: Vec<LocusCheck>,
    pub h0_at_zero: Option<u64>,
    pub h1: Vec<H1Check>,
    pub spectrum: Option<Spectrum>,
    pub outcome: Outcome,
}

impl VerificationReport {
    /// Per map: empty at every prime passes, nonempty at every prime fails,
    /// anything else is inconclusive.
    pub fn locus_outcome(&self, map: MapKind) -> Outcome {
        let results: Vec<Option<bool>> = self.loci.iter().filter(|c| c.map == map).map(|c| c.empty).collect();
        if results.iter().all(|r| *r == Some(true)) {
            Outcome::Pass
        } else if results.iter().all(|r| *r == Some(false)) {
            Outcome::Fail
        } else {
            Outcome::Inconclusive
        }
    }

    pub fn ranks_agree(&self) -> bool {
        self.h1.iter().all(H1Check::agrees)
    }

    pub fn spectrum_matches(&self) -> bool {
        self.h1.iter().all(|c| c.expected.is_none_or(|e| e == c.rational))
    }
}

fn locus(pres: &MonadPresentation, map: MapKind, p: u64) -> Result<LocusCheck> {
    let field = PrimeField::new(p)?;
    let empty = match pres.matrix_over(&field, map) {
        Ok(m) => {
            let k = m.len().min(m.first().map_or(0, |r| r.len()));
            if k == 0 {
                Some(true)
            } else {
                Some(degeneracy_locus_empty(&field, &m, k)?)
            }
        }
        // a coefficient denominator vanishes at this prime
        Err(_) => None,
    };
    Ok(LocusCheck { map, prime: p, empty })
}

fn h1_check(pres: &MonadPresentation, primes: &[u64], l: i64, spectrum: Option<&Spectrum>) -> Result<H1Check> {
    let rational = pres.h1_e(&Rationals, l)?;
    let modular = primes
        .iter()
        .map(|&p| Ok(pres.h1_e(&PrimeField::new(p)?, l).ok()))
        .collect::<Result<_>>()?;
    let expected = match spectrum {
        Some(s) if l < 0 => Some(spectrum_h1(s, l)?),
        _ => None,
    };
    Ok(H1Check { l, rational, modular, expected })
}

/// Runs every check on an explicit monad. Structural problems short-circuit
/// the cohomology computations, which need a genuine complex.
pub fn verify_monad(
    pres: &MonadPresentation,
    spectrum: Option<&Spectrum>,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    if config.primes.is_empty() {
        return Err(Error::InvalidArgument("at least one prime is required".into()));
    }
    for &p in &config.primes {
        PrimeField::new(p)?;
    }
    let problems = pres.validate();
    let compose_is_zero = pres.compose_is_zero();
    let mut report = VerificationReport {
        problems,
        c2: pres.c2(),
        compose_is_zero,
        loci: Vec::new(),
        h0_at_zero: None,
        h1: Vec::new(),
        spectrum: spectrum.cloned(),
        outcome: Outcome::Fail,
    };
    if !report.problems.is_empty() || !compose_is_zero {
        return Ok(report);
    }

    let jobs: Vec<(MapKind, u64)> = [MapKind::Alpha, MapKind::Beta]
        .into_iter()
        .flat_map(|m| config.primes.iter().map(move |&p| (m, p)))
        .collect();
    report.loci = jobs.par_iter().map(|&(m, p)| locus(pres, m, p)).collect::<Result<_>>()?;

    report.h0_at_zero = Some(pres.h0_e(&Rationals, 0)?);

    let mut twists: Vec<i64> = config.l_range.clone().collect();
    if let Some(s) = spectrum {
        // below the support the series must vanish
        twists.extend(-(s.top() as i64) - 3..=-1);
    }
    twists.sort_unstable();
    twists.dedup();
    report.h1 = twists
        .par_iter()
        .map(|&l| h1_check(pres, &config.primes, l, spectrum))
        .collect::<Result<_>>()?;

    let mut outcome = report.locus_outcome(MapKind::Alpha).and(report.locus_outcome(MapKind::Beta));
    if report.h0_at_zero != Some(0) {
        outcome = Outcome::Fail;
    }
    if let Some(s) = spectrum {
        if s.c2() != report.c2 || !report.spectrum_matches() {
            outcome = Outcome::Fail;
        }
    }
    if !report.ranks_agree() {
        outcome = outcome.and(Outcome::Inconclusive);
    }
    report.outcome = outcome;
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.problems.is_empty() {
            writeln!(f, "degrees and minimality: ok")?;
        }
        for p in &self.problems {
            writeln!(f, "problem: {p}")?;
        }
        writeln!(f, "c2: {}", self.c2)?;
        writeln!(f, "beta*alpha = 0: {}", yes_no(self.compose_is_zero))?;
        for c in &self.loci {
            let name = match c.map {
                MapKind::Alpha => "alpha degeneracy locus",
                MapKind::Beta => "beta degeneracy locus",
            };
            let verdict = match c.empty {
                Some(true) => "empty",
                Some(false) => "nonempty",
                None => "inconclusive",
            };
            writeln!(f, "{name} mod {}: {verdict}", c.prime)?;
        }
        if let Some(h0) = self.h0_at_zero {
            writeln!(f, "h0(E): {h0}")?;
        }
        for c in &self.h1 {
            write!(f, "h1(E({})): {}", c.l, c.rational)?;
            if !c.agrees() {
                let modular: Vec<String> =
                    c.modular.iter().map(|m| m.map_or_else(|| "n/a".to_string(), |v| v.to_string())).collect();
                write!(f, " (modular {})", modular.join(", "))?;
            }
            if let Some(e) = c.expected {
                write!(f, " expected {e}")?;
            }
            writeln!(f)?;
        }
        if let Some(s) = &self.spectrum {
            writeln!(f, "spectrum {s}: {}", if self.spectrum_matches() && s.c2() == self.c2 { "consistent" } else { "inconsistent" })?;
        }
        let outcome = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Inconclusive => "INCONCLUSIVE",
        };
        writeln!(f, "result: {outcome}")
    }
}
