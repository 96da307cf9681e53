//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line to
//! stderr (bypassing output capture) and then asserts.

use std::io::Write;

use rayon::prelude::*;
use sparse_reduce::column::{BaseRepresentation, RepresentationId};
use sparse_reduce::generators::{gen_shuffled, Family, GeneratorSpec};
use sparse_reduce::matrix::{FilteredBoundaryMatrix, PersistencePairing};
use sparse_reduce::reduce::{reduce, reduce_maybe_dual, ReduceOptions, ReducerId};
use sparse_reduce::verify::{
    bound_interval, bound_main, check_trace_lemmas, fit_loglog_slope, rank_oracle_pairs,
    scaling_series,
};

const K_FAMILIES: [Family; 4] = [Family::K1, Family::K2, Family::K3, Family::K4];
const SLOPE_SIZES: [usize; 5] = [16, 32, 64, 128, 256];
const SLOPE_TOLERANCE: f64 = 0.3;

/// (family, reducer, predicted exponent)
const SEPARATIONS: [(Family, ReducerId, f64); 10] = [
    (Family::K1, ReducerId::Retrospective, 1.0),
    (Family::K1, ReducerId::Twist, 2.0),
    (Family::K1, ReducerId::Swap, 2.0),
    (Family::K2, ReducerId::Twist, 1.0),
    (Family::K2, ReducerId::Swap, 1.0),
    (Family::K2, ReducerId::Retrospective, 2.0),
    (Family::K3, ReducerId::Swap, 1.0),
    (Family::K3, ReducerId::Twist, 2.0),
    (Family::K4, ReducerId::Twist, 1.0),
    (Family::K4, ReducerId::Swap, 2.0),
];

fn report(criterion: u32, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "criterion {criterion}: {verdict} {detail}"
    );
    assert!(ok, "criterion {criterion}: {detail}");
}

fn dual_name(dualize: bool) -> &'static str {
    if dualize {
        "dual"
    } else {
        "primal"
    }
}

/// 200 shuffled filtrations on 3..=7 vertices plus K1–K4 at n ∈ {2,4,6,8}.
fn grid_instances() -> Vec<(String, FilteredBoundaryMatrix)> {
    let mut out: Vec<_> = (0..200u64)
        .map(|seed| {
            let spec = GeneratorSpec::new(Family::Shuffled, 3 + (seed % 5) as usize, seed);
            (spec.label(), spec.generate().unwrap())
        })
        .collect();
    for f in K_FAMILIES {
        for n in [2, 4, 6, 8] {
            let spec = GeneratorSpec::new(f, n, 0);
            out.push((spec.label(), spec.generate().unwrap()));
        }
    }
    out
}

fn grid_representations() -> Vec<RepresentationId> {
    ["vector", "list", "set", "heap", "p-bitmap", "p-set"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let instances = grid_instances();
    let reps = grid_representations();
    let failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let oracle = rank_oracle_pairs(m).unwrap();
            let mut bad = Vec::new();
            for r in ReducerId::ALL {
                for &rep in &reps {
                    for dualize in [false, true] {
                        let out = reduce_maybe_dual(m, r, rep, ReduceOptions::default(), dualize);
                        if out.pairing != oracle {
                            bad.push(format!("{label} {r} {rep} {}", dual_name(dualize)));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    let runs = instances.len() * ReducerId::ALL.len() * reps.len() * 2;
    report(
        1,
        failures.is_empty(),
        format!(
            "{runs} runs over {} instances, {} mismatches {:?}",
            instances.len(),
            failures.len(),
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_2_separations() {
    let results: Vec<(Family, ReducerId, f64, f64)> = SEPARATIONS
        .par_iter()
        .map(|&(f, r, expected)| {
            let series = scaling_series(f, r, &SLOPE_SIZES).unwrap();
            (f, r, expected, fit_loglog_slope(&series).unwrap())
        })
        .collect();
    let ok = results
        .iter()
        .all(|&(_, _, e, s)| (s - e).abs() <= SLOPE_TOLERANCE);
    let detail = results
        .iter()
        .map(|(f, r, e, s)| format!("{f}/{r} {s:.2} (want {e})"))
        .collect::<Vec<_>>()
        .join(", ");
    report(2, ok, detail);
}

/// Slack of the main and interval bounds, or the violation message.
type BoundOutcome = Result<(i64, i64), String>;

fn check_bounds(m: &FilteredBoundaryMatrix, dualize: bool) -> BoundOutcome {
    let target = if dualize {
        m.anti_transpose()
    } else {
        m.clone()
    };
    let out = reduce(
        &target,
        ReducerId::Retrospective,
        RepresentationId::default(),
        ReduceOptions::default(),
    );
    let b = out.stats.bitflips;
    let main = bound_main(&out.pairing, target.dims(), b).map_err(|e| e.to_string())?;
    let interval = bound_interval(&out.pairing, target.dims(), b).map_err(|e| e.to_string())?;
    Ok((main.slack(), interval.slack()))
}

#[test]
fn criterion_3_bitflip_bounds() {
    let mut instances = grid_instances();
    for f in K_FAMILIES {
        for n in SLOPE_SIZES {
            let spec = GeneratorSpec::new(f, n, 0);
            instances.push((spec.label(), spec.generate().unwrap()));
        }
    }
    let results: Vec<(String, BoundOutcome)> = instances
        .par_iter()
        .flat_map_iter(|(label, m)| {
            [false, true].map(|d| (format!("{label} {}", dual_name(d)), check_bounds(m, d)))
        })
        .collect();
    let failures: Vec<_> = results.iter().filter(|(_, r)| r.is_err()).collect();
    let min_main = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .map(|s| s.0)
        .min();
    let min_interval = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .map(|s| s.1)
        .min();
    report(
        3,
        failures.is_empty(),
        format!(
            "{} retro runs, {} violations {:?}, min slack main {min_main:?} interval {min_interval:?}",
            results.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_4_trace_lemmas() {
    let mut instances: Vec<(String, FilteredBoundaryMatrix)> = Vec::new();
    for f in K_FAMILIES {
        for n in [2, 4, 8, 16, 32, 64] {
            let spec = GeneratorSpec::new(f, n, 0);
            instances.push((spec.label(), spec.generate().unwrap()));
        }
    }
    for seed in 0..50u64 {
        let spec = GeneratorSpec::new(Family::Shuffled, 4 + (seed % 7) as usize, 1000 + seed);
        instances.push((spec.label(), spec.generate().unwrap()));
    }
    let results: Vec<(String, sparse_reduce::verify::LemmaReport)> = instances
        .par_iter()
        .map(|(label, m)| {
            let out = reduce(
                m,
                ReducerId::Retrospective,
                RepresentationId::default(),
                ReduceOptions::traced(),
            );
            let rep = check_trace_lemmas(out.trace.as_ref().unwrap(), &out.pairing, m.dims());
            (label.clone(), rep)
        })
        .collect();
    let failures: Vec<_> = results
        .iter()
        .filter(|(_, r)| !r.passed())
        .map(|(l, r)| format!("{l}: {:?}", r.violations))
        .collect();
    let additions: u64 = results.iter().map(|(_, r)| r.additions).sum();
    let backward: u64 = results.iter().map(|(_, r)| r.backward_additions).sum();
    report(
        4,
        failures.is_empty(),
        format!(
            "{} traces, {additions} additions ({backward} backward), {} with violations {:?}",
            results.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_5_representation_independence() {
    let instances = grid_instances();
    let reps = RepresentationId::all();
    let failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let mut bad = Vec::new();
            for r in ReducerId::ALL {
                for dualize in [false, true] {
                    let stats: Vec<_> = reps
                        .iter()
                        .map(|&rep| {
                            reduce_maybe_dual(m, r, rep, ReduceOptions::default(), dualize).stats
                        })
                        .collect();
                    if stats.windows(2).any(|w| w[0] != w[1]) {
                        bad.push(format!("{label} {r} {}", dual_name(dualize)));
                    }
                }
            }
            bad
        })
        .collect();
    report(
        5,
        failures.is_empty(),
        format!(
            "{} (instance, algorithm, dualize) cells x {} representations, {} differ {:?}",
            instances.len() * ReducerId::ALL.len() * 2,
            reps.len(),
            failures.len(),
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    );
}

fn pairing_with(
    m: &FilteredBoundaryMatrix,
    r: ReducerId,
    clearing: bool,
    compression: bool,
    dualize: bool,
) -> PersistencePairing {
    let opts = ReduceOptions {
        clearing,
        compression,
        trace: false,
    };
    reduce_maybe_dual(m, r, RepresentationId::default(), opts, dualize).pairing
}

#[test]
fn criterion_6_heuristic_neutrality() {
    let instances = grid_instances();
    let failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let mut bad = Vec::new();
            for dualize in [false, true] {
                let standard = pairing_with(m, ReducerId::Standard, false, false, dualize);
                let variants = [
                    (
                        "twist+clear",
                        pairing_with(m, ReducerId::Twist, true, false, dualize),
                    ),
                    (
                        "twist",
                        pairing_with(m, ReducerId::Twist, false, false, dualize),
                    ),
                    (
                        "retro+compress",
                        pairing_with(m, ReducerId::Retrospective, false, true, dualize),
                    ),
                    (
                        "retro",
                        pairing_with(m, ReducerId::Retrospective, false, false, dualize),
                    ),
                    (
                        "exhaustive+compress",
                        pairing_with(m, ReducerId::Exhaustive, false, true, dualize),
                    ),
                    (
                        "exhaustive",
                        pairing_with(m, ReducerId::Exhaustive, false, false, dualize),
                    ),
                ];
                for (name, p) in variants {
                    if p != standard {
                        bad.push(format!("{label} {name} {}", dual_name(dualize)));
                    }
                }
            }
            bad
        })
        .collect();
    let triangle = triangle();
    let ops = |r| {
        reduce(
            &triangle,
            r,
            RepresentationId::default(),
            ReduceOptions::default(),
        )
        .stats
        .col_ops
    };
    let (twist, standard) = (ops(ReducerId::Twist), ops(ReducerId::Standard));
    report(
        6,
        failures.is_empty() && twist < standard && standard == 2,
        format!(
            "{} pairing mismatches {:?}; triangle col_ops twist {twist} < standard {standard}",
            failures.len(),
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    );
}

fn triangle() -> FilteredBoundaryMatrix {
    FilteredBoundaryMatrix::load_str("0\n0\n0\n1 1 2\n1 1 3\n1 2 3\n2 4 5 6\n").unwrap()
}

#[test]
fn criterion_7_triangle_retro() {
    let m = triangle();
    let out = reduce(
        &m,
        ReducerId::Retrospective,
        RepresentationId::plain(BaseRepresentation::Vector),
        ReduceOptions::default(),
    );
    let expected = PersistencePairing::from_one_based([(2, 4), (3, 5), (6, 7)], [1]);
    let s = out.stats;
    let ok = s.col_ops == 2
        && s.bitflips == 4
        && s.fill_up == 5
        && out.pairing == expected
        && rank_oracle_pairs(&m).unwrap() == expected;
    report(
        7,
        ok,
        format!(
            "col_ops {} bitflips {} fill_up {} pairs {:?} essential {:?}",
            s.col_ops,
            s.bitflips,
            s.fill_up,
            out.pairing.pairs_one_based(),
            out.pairing.essential_one_based()
        ),
    );
}

fn median(mut v: Vec<u64>) -> f64 {
    v.sort_unstable();
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2] as f64
    } else {
        (v[k / 2 - 1] + v[k / 2]) as f64 / 2.0
    }
}

#[test]
fn criterion_8_shuffled_retro_vs_twist() {
    let runs: Vec<(u64, u64, u64, u64)> = (0..10u64)
        .into_par_iter()
        .map(|seed| {
            let m = gen_shuffled(50, seed).unwrap();
            let run =
                |r| reduce(&m, r, RepresentationId::default(), ReduceOptions::default()).stats;
            let (retro, twist) = (run(ReducerId::Retrospective), run(ReducerId::Twist));
            (retro.fill_up, twist.fill_up, retro.bitflips, twist.bitflips)
        })
        .collect();
    let col = |k: usize| -> Vec<u64> { runs.iter().map(|r| [r.0, r.1, r.2, r.3][k]).collect() };
    let (rf, tf, rb, tb) = (
        median(col(0)),
        median(col(1)),
        median(col(2)),
        median(col(3)),
    );
    report(
        8,
        rf < tf && rb < tb,
        format!(
            "median fill-up retro {rf} vs twist {tf}, median bitflips retro {rb} vs twist {tb}"
        ),
    );
}
