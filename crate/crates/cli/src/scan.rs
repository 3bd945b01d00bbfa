//! Exhaustive cross-check of the arithmetic classifier against the invariant
//! oracle over a parameter box.
//!
//! Every tuple in the box is judged twice: once by [`unlink_verdict`], which
//! only does integer arithmetic, and once by [`unlink_consistent`], which
//! builds the braid and computes linking numbers and (strand count
//! permitting) the Jones polynomial. The two sides share no code, so any
//! disagreement is a finding. Tuples whose Jones comparison was skipped are
//! flagged separately: they are not discrepancies, just unfinished checks.

use num_integer::Integer;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;
use ttlink::{
    twisted_torus_braid, unlink_consistent, unlink_verdict, ClassifyError, ConsistencyReport,
    InvariantError, JonesStatus, TwistedTorusParams, Verdict, DEFAULT_STRAND_LIMIT,
};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("bad scan configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("could not start worker threads: {0}")]
    Pool(String),
}

/// The parameter box to sweep: `2 <= p <= p_max`, `1 <= q < p` with
/// `gcd(p,q) >= gcd_min`, `2 <= r <= p` (or `p + q` with `r_beyond_p`), and
/// `s_min <= s <= s_max` skipping 0.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub p_max: i64,
    pub s_min: i64,
    pub s_max: i64,
    pub gcd_min: i64,
    pub r_beyond_p: bool,
    pub jones_limit: usize,
    /// Worker threads for the sweep; 0 means the rayon default.
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            p_max: 8,
            s_min: -4,
            s_max: 4,
            gcd_min: 2,
            r_beyond_p: false,
            jones_limit: DEFAULT_STRAND_LIMIT,
            jobs: 0,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        if self.p_max < 2 {
            return Err(ScanError::Config(format!(
                "p_max must be at least 2, got {}",
                self.p_max
            )));
        }
        if self.s_min > self.s_max {
            return Err(ScanError::Config(format!(
                "empty twist range {}..={}",
                self.s_min, self.s_max
            )));
        }
        if self.s_min == 0 && self.s_max == 0 {
            return Err(ScanError::Config("twist range contains only s = 0".into()));
        }
        if self.gcd_min < 2 {
            return Err(ScanError::Config(
                "scan needs links, so gcd_min must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// How a tuple's two judgments relate, when they do not simply agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    /// The classifier calls it an unlink but an invariant refutes that.
    ClassifierYesOracleNo,
    /// Every invariant is clean but the classifier rejects.
    OracleCleanClassifierNo,
    /// The Jones comparison was skipped and linking alone decided nothing.
    JonesSkipped,
}

impl Discrepancy {
    pub fn code(&self) -> &'static str {
        match self {
            Discrepancy::ClassifierYesOracleNo => "classifier-yes-oracle-no",
            Discrepancy::OracleCleanClassifierNo => "oracle-clean-classifier-no",
            Discrepancy::JonesSkipped => "jones-skipped",
        }
    }

    /// Skipped Jones comparisons are advisory; the other two kinds mean the
    /// mathematics or an implementation is wrong somewhere.
    pub fn is_real(&self) -> bool {
        !matches!(self, Discrepancy::JonesSkipped)
    }
}

/// One scanned tuple: both judgments and the finding, if any.
#[derive(Clone, Debug)]
pub struct TupleRecord {
    pub verdict: Verdict,
    pub oracle: ConsistencyReport,
    pub finding: Option<Discrepancy>,
}

impl TupleRecord {
    pub fn params(&self) -> &TwistedTorusParams {
        &self.verdict.params
    }
}

impl Serialize for TupleRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TupleRecord", 4)?;
        st.serialize_field("tuple", &self.params().to_string())?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("oracle", &self.oracle)?;
        match self.finding {
            Some(f) => st.serialize_field("finding", f.code())?,
            None => st.serialize_field("finding", &None::<&str>)?,
        }
        st.end()
    }
}

/// Scan outcome, with records in lexicographic `(p, q, r, s)` order
/// regardless of how many workers ran.
#[derive(Clone, Debug)]
pub struct ScanReport {
    pub records: Vec<TupleRecord>,
    pub unlinks: Vec<TwistedTorusParams>,
    pub real_discrepancies: usize,
    pub jones_skipped: usize,
}

impl ScanReport {
    pub fn summary_json(&self) -> String {
        serde_json::json!({
            "tuples": self.records.len(),
            "unlinks": self.unlinks.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "discrepancies": self.real_discrepancies,
            "jones_skipped": self.jones_skipped,
        })
        .to_string()
    }
}

/// Lists the box contents in lexicographic order.
pub fn enumerate_box(config: &ScanConfig) -> Vec<TwistedTorusParams> {
    let mut tuples = Vec::new();
    for p in 2..=config.p_max {
        for q in 1..p {
            if p.gcd(&q) < config.gcd_min {
                continue;
            }
            let r_hi = if config.r_beyond_p { p + q } else { p };
            for r in 2..=r_hi {
                for s in config.s_min..=config.s_max {
                    if s == 0 {
                        continue;
                    }
                    tuples.push(
                        TwistedTorusParams::new(p, q, r, s).expect("box tuples are in domain"),
                    );
                }
            }
        }
    }
    tuples
}

fn cross_check(verdict: &Verdict, oracle: &ConsistencyReport) -> Option<Discrepancy> {
    let refuted = !oracle.linking_zero || oracle.jones == JonesStatus::Mismatch;
    let clean = oracle.linking_zero && oracle.jones == JonesStatus::UnlinkMatch;
    if verdict.unlink && refuted {
        Some(Discrepancy::ClassifierYesOracleNo)
    } else if !verdict.unlink && clean {
        Some(Discrepancy::OracleCleanClassifierNo)
    } else if !refuted && oracle.jones == JonesStatus::Skipped {
        Some(Discrepancy::JonesSkipped)
    } else {
        None
    }
}

fn evaluate(params: &TwistedTorusParams, jones_limit: usize) -> Result<TupleRecord, ScanError> {
    let verdict = unlink_verdict(params)?;
    let oracle = unlink_consistent(&twisted_torus_braid(params), jones_limit)?;
    let finding = cross_check(&verdict, &oracle);
    Ok(TupleRecord {
        verdict,
        oracle,
        finding,
    })
}

/// Sweeps the box, cross-checking every tuple. Tuples are independent, so
/// they are farmed out to worker threads; the collected order is the
/// enumeration order.
pub fn run_scan(config: &ScanConfig) -> Result<ScanReport, ScanError> {
    config.validate()?;
    let tuples = enumerate_box(config);
    let sweep = || -> Result<Vec<TupleRecord>, ScanError> {
        tuples
            .par_iter()
            .map(|t| evaluate(t, config.jones_limit))
            .collect()
    };
    let records = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| ScanError::Pool(e.to_string()))?
            .install(sweep)?
    } else {
        sweep()?
    };

    let unlinks = records
        .iter()
        .filter(|r| r.verdict.unlink)
        .map(|r| *r.params())
        .collect();
    let real_discrepancies = records
        .iter()
        .filter(|r| r.finding.is_some_and(|f| f.is_real()))
        .count();
    let jones_skipped = records
        .iter()
        .filter(|r| r.finding == Some(Discrepancy::JonesSkipped))
        .count();
    Ok(ScanReport {
        records,
        unlinks,
        real_discrepancies,
        jones_skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(p: i64, q: i64, r: i64, s: i64) -> TwistedTorusParams {
        TwistedTorusParams::new(p, q, r, s).unwrap()
    }

    #[test]
    fn box_enumeration_is_lexicographic() {
        let config = ScanConfig {
            p_max: 4,
            ..ScanConfig::default()
        };
        let listed = enumerate_box(&config);
        // Only (p,q) = (4,2) has gcd >= 2 below p_max = 4; r in 2..=4 and
        // eight twist values.
        assert_eq!(listed.len(), 24);
        assert_eq!(listed[0], tuples(4, 2, 2, -4));
        assert_eq!(listed[3], tuples(4, 2, 2, -1));
        assert_eq!(listed[4], tuples(4, 2, 2, 1));
        assert_eq!(listed[23], tuples(4, 2, 4, 4));
        let mut sorted = listed.clone();
        sorted.sort_by_key(|t| (t.p, t.q, t.r, t.s));
        assert_eq!(listed, sorted);
    }

    #[test]
    fn wider_blocks_on_request() {
        let config = ScanConfig {
            p_max: 4,
            r_beyond_p: true,
            ..ScanConfig::default()
        };
        let listed = enumerate_box(&config);
        assert_eq!(listed.len(), 40); // r now runs to p + q = 6
        assert!(listed.iter().any(|t| t.r == 6));
    }

    #[test]
    fn config_validation() {
        let bad = |c: ScanConfig| matches!(c.validate(), Err(ScanError::Config(_)));
        assert!(bad(ScanConfig {
            p_max: 1,
            ..ScanConfig::default()
        }));
        assert!(bad(ScanConfig {
            s_min: 3,
            s_max: -3,
            ..ScanConfig::default()
        }));
        assert!(bad(ScanConfig {
            s_min: 0,
            s_max: 0,
            ..ScanConfig::default()
        }));
        assert!(bad(ScanConfig {
            gcd_min: 1,
            ..ScanConfig::default()
        }));
        assert!(ScanConfig::default().validate().is_ok());
    }

    #[test]
    fn small_box_is_clean_and_finds_the_two_unlinks() {
        let config = ScanConfig {
            p_max: 4,
            jobs: 2,
            ..ScanConfig::default()
        };
        let report = run_scan(&config).unwrap();
        assert_eq!(report.records.len(), 24);
        assert_eq!(report.real_discrepancies, 0);
        assert_eq!(report.jones_skipped, 0);
        assert_eq!(
            report.unlinks,
            vec![tuples(4, 2, 2, -2), tuples(4, 2, 3, -1)]
        );
        assert_eq!(
            report.summary_json(),
            r#"{"discrepancies":0,"jones_skipped":0,"tuples":24,"unlinks":["T(4,2,2,-2)","T(4,2,3,-1)"]}"#
        );
    }

    #[test]
    fn skipped_jones_is_flagged_but_not_a_discrepancy() {
        // With the limit below every braid width, Jones never runs. The
        // rejected tuples in this box all carry nonzero linking, so only the
        // two accepted tuples are left hanging.
        let config = ScanConfig {
            p_max: 4,
            jones_limit: 2,
            ..ScanConfig::default()
        };
        let report = run_scan(&config).unwrap();
        assert_eq!(report.real_discrepancies, 0);
        assert_eq!(report.jones_skipped, 2);
        let flagged: Vec<_> = report
            .records
            .iter()
            .filter(|r| r.finding == Some(Discrepancy::JonesSkipped))
            .map(|r| *r.params())
            .collect();
        assert_eq!(flagged, report.unlinks);
    }

    #[test]
    fn record_json_shape() {
        let config = ScanConfig {
            p_max: 4,
            ..ScanConfig::default()
        };
        let report = run_scan(&config).unwrap();
        let accepted = report
            .records
            .iter()
            .find(|r| r.verdict.unlink)
            .unwrap();
        let line = serde_json::to_string(accepted).unwrap();
        assert!(line.starts_with(r#"{"tuple":"T(4,2,2,-2)","verdict":{"#), "{line}");
        assert!(line.contains(r#""oracle":{"components":2"#), "{line}");
        assert!(line.ends_with(r#""finding":null}"#), "{line}");
    }
}
