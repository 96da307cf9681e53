use std::collections::HashMap;

use serde::Serialize;

use crate::betti::BettiProfile;
use crate::matrix::{Index, PersistencePairing};
use crate::trace::{AugmentedPairs, TraceEvent};

/// Trace properties of retrospective reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Every bitflip of a backward addition is an interval bitflip.
    BackwardInterval,
    /// Each ordered pair of columns takes part in at most one addition.
    AtMostOnce,
    /// Once column `j` with pair `(i, j)` is pivoted, its size stays
    /// `≤ 1 + β_{i,j}`.
    PivotedSize,
    /// Column `k` never holds more than `d_k + β_k + 1` entries.
    PeakSize,
    /// A forward addition flips at most one non-interval entry.
    ForwardNonInterval,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::BackwardInterval,
        Lemma::AtMostOnce,
        Lemma::PivotedSize,
        Lemma::PeakSize,
        Lemma::ForwardNonInterval,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    /// Sequence number of the offending addition, if the violation is tied
    /// to one.
    pub seq: Option<u64>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub additions: u64,
    pub forward_additions: u64,
    pub backward_additions: u64,
    pub interval_flips: u64,
    pub non_interval_flips: u64,
    /// First violation of each lemma, in trace order.
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, lemma: Lemma) -> bool {
        self.violations.iter().any(|v| v.lemma == lemma)
    }

    fn record(&mut self, lemma: Lemma, seq: Option<u64>, detail: impl FnOnce() -> String) {
        if !self.violated(lemma) {
            self.violations.push(LemmaViolation {
                lemma,
                seq,
                detail: detail(),
            });
        }
    }
}

/// Checks the trace of a retrospective run against its final pairing.
/// `dims` are the cell dimensions of the reduced matrix; column sizes are
/// taken to be bounded by `d_k + 1` initially, as for simplex boundaries.
pub fn check_trace_lemmas(
    trace: &[TraceEvent],
    pairing: &PersistencePairing,
    dims: &[usize],
) -> LemmaReport {
    let n = dims.len();
    let aug = AugmentedPairs::new(pairing, n);
    let betti = BettiProfile::new(pairing, n);
    let pairs: Vec<_> = pairing.pairs().collect();
    let pair_betti: HashMap<(Index, Index), usize> = pairs
        .iter()
        .copied()
        .zip(betti.persistent_for_pairs(&pairs))
        .collect();
    let peak_limit = |k: Index| dims[k] + betti.betti(k) + 1;

    let mut report = LemmaReport::default();
    let mut seen: HashMap<(Index, Index), u64> = HashMap::new();
    // size limit of each pivoted column
    let mut pivoted: Vec<Option<usize>> = vec![None; n];

    for event in trace {
        match event {
            TraceEvent::Addition(a) => {
                report.additions += 1;
                let forward = a.is_forward();
                if forward {
                    report.forward_additions += 1;
                } else {
                    report.backward_additions += 1;
                }
                let mut non_interval = 0;
                for &row in &a.rows {
                    let inside = aug.death(row).is_some_and(|death| {
                        let within = |c: Index| row < c && c <= death;
                        within(a.src) && within(a.dst)
                    });
                    if inside {
                        report.interval_flips += 1;
                    } else {
                        report.non_interval_flips += 1;
                        non_interval += 1;
                        if !forward {
                            report.record(Lemma::BackwardInterval, Some(a.seq), || {
                                format!("row {} flipped by {} -> {}", row + 1, a.src + 1, a.dst + 1)
                            });
                        }
                    }
                }
                if forward && non_interval > 1 {
                    report.record(Lemma::ForwardNonInterval, Some(a.seq), || {
                        format!(
                            "{non_interval} non-interval flips by {} -> {}",
                            a.src + 1,
                            a.dst + 1
                        )
                    });
                }
                if let Some(first) = seen.insert((a.src, a.dst), a.seq) {
                    report.record(Lemma::AtMostOnce, Some(a.seq), || {
                        format!("{} -> {} repeats addition {first}", a.src + 1, a.dst + 1)
                    });
                }
                if let Some(limit) = pivoted[a.dst] {
                    if a.dst_size_after > limit {
                        report.record(Lemma::PivotedSize, Some(a.seq), || {
                            format!(
                                "column {} grew to {} > {limit}",
                                a.dst + 1,
                                a.dst_size_after
                            )
                        });
                    }
                }
                if a.dst_size_after > peak_limit(a.dst) {
                    report.record(Lemma::PeakSize, Some(a.seq), || {
                        format!(
                            "column {} reached {} > {}",
                            a.dst + 1,
                            a.dst_size_after,
                            peak_limit(a.dst)
                        )
                    });
                }
            }
            &TraceEvent::Pivoted {
                column,
                pivot: Some(i),
                size,
            } => {
                let limit = 1 + pair_betti.get(&(i, column)).copied().unwrap_or(0);
                pivoted[column] = Some(limit);
                if size > limit {
                    report.record(Lemma::PivotedSize, None, || {
                        format!(
                            "column {} pivoted with {size} > {limit} entries",
                            column + 1
                        )
                    });
                }
            }
            _ => {}
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{AdditionEvent, Phase};

    fn triangle_pairing() -> PersistencePairing {
        PersistencePairing::from_one_based([(2, 4), (3, 5), (6, 7)], [1])
    }

    const DIMS: [usize; 7] = [0, 0, 0, 1, 1, 1, 2];

    fn add(seq: u64, src: Index, dst: Index, rows: Vec<Index>, after: usize) -> TraceEvent {
        TraceEvent::Addition(AdditionEvent {
            seq,
            src,
            dst,
            bitflips: rows.len(),
            phase: if src < dst {
                Phase::PivotSearch
            } else {
                Phase::Backward
            },
            outer_step: dst.max(src),
            rows,
            dst_size_after: after,
        })
    }

    #[test]
    fn empty_trace_passes() {
        assert!(check_trace_lemmas(&[], &triangle_pairing(), &DIMS).passed());
    }

    #[test]
    fn detects_each_violation() {
        // backward 5 -> 4 flipping row 6 (paired with 7): not interval
        let r = check_trace_lemmas(&[add(0, 4, 3, vec![5], 2)], &triangle_pairing(), &DIMS);
        assert!(r.violated(Lemma::BackwardInterval));

        let twice = [add(0, 3, 5, vec![1, 2], 2), add(1, 3, 5, vec![1, 2], 2)];
        let r = check_trace_lemmas(&twice, &triangle_pairing(), &DIMS);
        assert!(r.violated(Lemma::AtMostOnce));
        // rows 2 and 3 die at 4 and 5, before column 6: both non-interval
        assert!(r.violated(Lemma::ForwardNonInterval));

        let big = [add(0, 3, 5, vec![1], 9)];
        let r = check_trace_lemmas(&big, &triangle_pairing(), &DIMS);
        assert!(r.violated(Lemma::PeakSize));

        let piv = [TraceEvent::Pivoted {
            column: 3,
            pivot: Some(1),
            size: 3,
        }];
        let r = check_trace_lemmas(&piv, &triangle_pairing(), &DIMS);
        assert!(r.violated(Lemma::PivotedSize));
        assert_eq!(r.violations.len(), 1);
    }
}
