//! Cross-checks for `(s, s+1)`-cores whose parts are multiples of `p`.
//!
//! With `s = kp + r`, `0 <= r < p`, the count of such cores is compared by
//! direct filtering of the enumerated cores, by counting ideals of `T_s`
//! with property `P_p`, by the `C_{p,r}(k)` recurrence, against the closed
//! form `R_{p+1,r+1}(k)` and against the conjectured closed form
//! `(s + 1 - p*floor(s/p)) / (s + 1) * C(s + floor(s/p), s)`.
//!
//! The harness also checks two classical facts about `(s, t)`-cores: the
//! maximum size `(s^2 - 1)(t^2 - 1)/24` is attained by a single core, and
//! there are `C(floor(s/2) + floor(t/2), floor(s/2))` self-conjugate ones.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::numbers::{binomial, raney, RaneyParams};
use crate::posets::{
    count_ideals_with_property, count_ideals_with_property_enumerated, enumerate_core_partitions,
};
use crate::{Error, Execution, Natural, Result};

pub const DEFAULT_ENUMERATION_BOUND: u32 = 12;

/// Route used by [`Harness::count_filtered_cores`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    /// Filter enumerated `(s, s+1)`-cores by divisibility of their parts.
    Direct,
    /// Count ideals of `T_s` whose maximal runs have length divisible by `p`.
    IdealProperty,
    /// The `C_{p,r}(k)` recurrence; no enumeration.
    Recurrence,
}

impl CountMethod {
    pub const ALL: [CountMethod; 3] = [
        CountMethod::Direct,
        CountMethod::IdealProperty,
        CountMethod::Recurrence,
    ];

    fn enumerates(self) -> bool {
        self != CountMethod::Recurrence
    }
}

impl FromStr for CountMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "direct" => Ok(CountMethod::Direct),
            "ideal_property" | "ideal-property" => Ok(CountMethod::IdealProperty),
            "recurrence" => Ok(CountMethod::Recurrence),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Direct => "direct",
            CountMethod::IdealProperty => "ideal_property",
            CountMethod::Recurrence => "recurrence",
        })
    }
}

/// The conjectured closed form `(s + 1 - p floor(s/p)) C(s + floor(s/p), s) / (s + 1)`, evaluated exactly.
pub fn conjecture_rhs(s: u32, p: u32) -> Result<Natural> {
    if s == 0 {
        return Err(Error::ZeroParameter("s"));
    }
    if p == 0 {
        return Err(Error::ZeroParameter("p"));
    }
    let (s, q) = (u64::from(s), u64::from(s / p));
    let factor = s + 1 - u64::from(p) * q;
    let numerator = &Natural::from(factor) * &binomial(s + q, s);
    Ok(numerator
        .div_exact(&Natural::from(s + 1))
        .unwrap_or_else(|| panic!("s + 1 must divide the numerator for s={s}, p={p}")))
}

/// One `(s, p)` comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub s: u32,
    pub p: u32,
    pub k: u32,
    pub r: u32,
    /// Direct filtering; `None` beyond the enumeration bound.
    pub count_enumeration: Option<Natural>,
    /// Ideals with property `P_p`; `None` beyond the enumeration bound.
    pub count_ideal_property: Option<Natural>,
    pub count_recurrence: Natural,
    pub count_raney: Natural,
    pub rhs_conjecture: Natural,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub s_max: u32,
    pub p_max: u32,
    pub cases: usize,
    pub disagreements: usize,
    pub all_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub cases: Vec<CaseRecord>,
    pub summary: ReportSummary,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn case(&self, s: u32, p: u32) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.s == s && c.p == p)
    }
}

/// Largest core size and how many cores attain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxCoreSize {
    pub max_size: u64,
    pub witness_count: u64,
}

/// Enumerated `(s, t)`-core statistics next to their closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreOracleRecord {
    pub s: u32,
    pub t: u32,
    pub core_count: Natural,
    /// `C(s + t, s) / (s + t)`
    pub expected_core_count: Natural,
    pub max_size: u64,
    pub witness_count: u64,
    /// `(s^2 - 1)(t^2 - 1) / 24`
    pub expected_max_size: u64,
    pub self_conjugate: Natural,
    /// `C(floor(s/2) + floor(t/2), floor(s/2))`
    pub expected_self_conjugate: Natural,
}

impl CoreOracleRecord {
    pub fn holds(&self) -> bool {
        self.core_count == self.expected_core_count
            && self.max_size == self.expected_max_size
            && self.witness_count == 1
            && self.self_conjugate == self.expected_self_conjugate
    }
}

/// Configuration for enumeration-backed checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Harness {
    /// Largest `s` for which `(s, s+1)` cores are enumerated; for general
    /// `(s, t)` the larger parameter may be at most `bound + 1`.
    pub enumeration_bound: u32,
    pub execution: Execution,
}

impl Default for Harness {
    fn default() -> Self {
        Harness {
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            execution: Execution::default(),
        }
    }
}

impl Harness {
    pub fn new(enumeration_bound: u32, execution: Execution) -> Self {
        Harness {
            enumeration_bound,
            execution,
        }
    }

    /// Fails when enumerating `(s, t)`-cores would exceed the bound.
    pub fn ensure_enumerable(&self, s: u32, t: u32) -> Result<()> {
        let largest = s.max(t);
        if largest > self.enumeration_bound + 1 {
            return Err(Error::EnumerationBound {
                what: "max(s, t) - 1",
                value: largest - 1,
                bound: self.enumeration_bound,
            });
        }
        Ok(())
    }

    pub fn count_filtered_cores(&self, s: u32, p: u32, method: CountMethod) -> Result<Natural> {
        if s == 0 {
            return Err(Error::ZeroParameter("s"));
        }
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        if method.enumerates() && s > self.enumeration_bound {
            return Err(Error::EnumerationBound {
                what: "s",
                value: s,
                bound: self.enumeration_bound,
            });
        }
        match method {
            CountMethod::Direct => {
                let mut count = 0u64;
                for core in enumerate_core_partitions(s, s + 1)? {
                    if core.all_parts_multiple_of(p)? {
                        count += 1;
                    }
                }
                Ok(Natural::from(count))
            }
            CountMethod::IdealProperty => count_ideals_with_property_enumerated(s, p),
            CountMethod::Recurrence => count_ideals_with_property(s, p),
        }
    }

    pub fn max_core_size(&self, s: u32, t: u32) -> Result<MaxCoreSize> {
        self.ensure_enumerable(s, t)?;
        let mut best = MaxCoreSize {
            max_size: 0,
            witness_count: 0,
        };
        for core in enumerate_core_partitions(s, t)? {
            let size = core.size();
            if size > best.max_size || best.witness_count == 0 {
                best = MaxCoreSize {
                    max_size: size,
                    witness_count: 1,
                };
            } else if size == best.max_size {
                best.witness_count += 1;
            }
        }
        Ok(best)
    }

    pub fn count_self_conjugate_cores(&self, s: u32, t: u32) -> Result<Natural> {
        self.ensure_enumerable(s, t)?;
        let count = enumerate_core_partitions(s, t)?
            .filter(|core| core.is_self_conjugate())
            .count();
        Ok(Natural::from(count))
    }

    /// Core statistics for one coprime pair.
    pub fn core_oracle(&self, s: u32, t: u32) -> Result<CoreOracleRecord> {
        self.ensure_enumerable(s, t)?;
        let mut core_count = 0u64;
        let mut self_conjugate = 0u64;
        let mut best = MaxCoreSize {
            max_size: 0,
            witness_count: 0,
        };
        for core in enumerate_core_partitions(s, t)? {
            core_count += 1;
            if core.is_self_conjugate() {
                self_conjugate += 1;
            }
            let size = core.size();
            if size > best.max_size || best.witness_count == 0 {
                best = MaxCoreSize {
                    max_size: size,
                    witness_count: 1,
                };
            } else if size == best.max_size {
                best.witness_count += 1;
            }
        }
        let (s64, t64) = (u64::from(s), u64::from(t));
        Ok(CoreOracleRecord {
            s,
            t,
            core_count: Natural::from(core_count),
            expected_core_count: binomial(s64 + t64, s64)
                .div_exact(&Natural::from(s64 + t64))
                .expect("s + t divides C(s + t, s) for coprime s, t"),
            max_size: best.max_size,
            witness_count: best.witness_count,
            expected_max_size: (s64 * s64 - 1) * (t64 * t64 - 1) / 24,
            self_conjugate: Natural::from(self_conjugate),
            expected_self_conjugate: binomial(s64 / 2 + t64 / 2, s64 / 2),
        })
    }

    /// [`Harness::core_oracle`] for every coprime `s < t <= t_max`, ordered by `(s, t)`.
    pub fn core_oracles(&self, t_max: u32) -> Result<Vec<CoreOracleRecord>> {
        self.ensure_enumerable(1, t_max)?;
        let pairs: Vec<(u32, u32)> = (1..=t_max)
            .flat_map(|s| (s + 1..=t_max).map(move |t| (s, t)))
            .filter(|&(s, t)| s.gcd(&t) == 1)
            .collect();
        self.execution
            .map(&pairs, |&(s, t)| self.core_oracle(s, t))
            .into_iter()
            .collect()
    }

    /// Compares every route for `s <= s_max`, `p <= min(p_max, s + 1)`.
    /// Disagreements are recorded, never raised.
    pub fn verify_main_theorem(&self, s_max: u32, p_max: u32) -> VerificationReport {
        let pairs: Vec<(u32, u32)> = (1..=s_max)
            .flat_map(|s| (1..=p_max.min(s + 1)).map(move |p| (s, p)))
            .collect();
        let cases = self.execution.map(&pairs, |&(s, p)| self.case(s, p));
        let disagreements = cases.iter().filter(|c| !c.agree).count();
        VerificationReport {
            summary: ReportSummary {
                s_max,
                p_max,
                cases: cases.len(),
                disagreements,
                all_agree: disagreements == 0,
            },
            cases,
        }
    }

    fn case(&self, s: u32, p: u32) -> CaseRecord {
        let (k, r) = s.div_rem(&p);
        let runnable = s <= self.enumeration_bound;
        let enumerate = |method| {
            runnable.then(|| {
                self.count_filtered_cores(s, p, method)
                    .expect("parameters checked above")
            })
        };
        let count_enumeration = enumerate(CountMethod::Direct);
        let count_ideal_property = enumerate(CountMethod::IdealProperty);
        let count_recurrence = self
            .count_filtered_cores(s, p, CountMethod::Recurrence)
            .expect("s, p positive");
        let count_raney = raney(RaneyParams::new(p + 1, r + 1, k).expect("p + 1 >= 1"));
        let rhs_conjecture = conjecture_rhs(s, p).expect("s, p positive");
        let agree = [&count_enumeration, &count_ideal_property]
            .into_iter()
            .flatten()
            .chain([&count_recurrence, &rhs_conjecture])
            .all(|c| *c == count_raney);
        CaseRecord {
            s,
            p,
            k,
            r,
            count_enumeration,
            count_ideal_property,
            count_recurrence,
            count_raney,
            rhs_conjecture,
            agree,
        }
    }
}
