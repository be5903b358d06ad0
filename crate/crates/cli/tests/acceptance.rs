//! The acceptance gate: every advertised gap property at desk scale, one
//! test per criterion, each printing a pass/fail line with its elapsed
//! time (visible under `--nocapture`). All comparisons are exact integer
//! or half-unit comparisons; the stated wall-clock budgets are asserted.

use std::time::{Duration, Instant};

use gapkit_cli::{config::SuiteConfig, suites};
use gapkit_core::{BitVector, Sequence};
use gapkit_klcs as klcs;
use gapkit_lcs as lcs_red;
use gapkit_solvers as solvers;

struct Criterion {
    number: u32,
    label: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn new(number: u32, label: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            number,
            label,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
        }
    }

    fn finish(self, ok: bool, detail: &str) {
        let elapsed = self.started.elapsed();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {}: {} — {} ({:.2?})",
            self.number, verdict, self.label, detail, elapsed
        );
        assert!(ok, "criterion {} failed: {detail}", self.number);
        assert!(
            elapsed <= self.budget,
            "criterion {} exceeded its {:?} budget ({:?})",
            self.number,
            self.budget,
            elapsed
        );
    }
}

fn suite_config(seed: u64, trials: usize) -> SuiteConfig {
    SuiteConfig::new(seed, trials)
}

#[test]
fn criterion_01_lcs_gap_dichotomy() {
    let c = Criterion::new(1, "LCS gap dichotomy, 200 random instances", 60);
    let report = suites::lcs_gap(&suite_config(0xACC1, 200));
    c.finish(
        report.passed(),
        &format!("{}/{} agree with the vector oracle", report.trials - report.failures.len(), report.trials),
    );
}

#[test]
fn criterion_02_paper_schedule_spot_check() {
    let c = Criterion::new(2, "cascade-schedule spot check at n=1, d=1, r=0", 1);
    let schedule = lcs_red::WeightSchedule::paper(1, 0).unwrap();
    assert_eq!(schedule.x, 100);
    assert_eq!(schedule.a, 200);
    assert_eq!(schedule.b, 40_000);
    assert_eq!(schedule.c, 1_600_000_000);
    assert_eq!(schedule.e_g(1).unwrap(), 3_200_080_200);

    let far_pair = (
        vec![BitVector::parse("0").unwrap()],
        vec![BitVector::parse("1").unwrap()],
    );
    let inst = lcs_red::build_instance(&far_pair.0, &far_pair.1, 0, schedule).unwrap();
    let far_score = solvers::wlcs(&inst.p1, &inst.p2, &inst.weights).unwrap();

    let close_pair = (
        vec![BitVector::parse("1").unwrap()],
        vec![BitVector::parse("1").unwrap()],
    );
    let inst2 = lcs_red::build_instance(&close_pair.0, &close_pair.1, 0, schedule).unwrap();
    let close_score = solvers::wlcs(&inst2.p1, &inst2.p2, &inst2.weights).unwrap();

    let ok = far_score >= 3_200_080_201 && close_score <= 3_200_080_200;
    c.finish(ok, &format!("far score {far_score}, close score {close_score}"));
}

#[test]
fn criterion_03_wlcs_to_lcs_expansion() {
    let c = Criterion::new(3, "unary expansion preserves WLCS as LCS, 300 pairs", 10);
    let report = suites::wlcs_expansion(&suite_config(0xACC3, 300));
    c.finish(report.passed(), &format!("{} violations", report.failures.len()));
}

#[test]
fn criterion_04_gadget_claims_exhaustive() {
    let c = Criterion::new(4, "coordinate and vector gadget claims, k in {2,3}, d <= 3", 60);
    let mut checked = 0usize;
    let mut ok = true;
    let mut detail = String::new();

    'outer: for k in [2usize, 3] {
        let alphabet = klcs::klcs_alphabet(k);
        // Coordinate claim: all bit tuples.
        let weights = klcs::KGadgetWeights::paper(k, 1, 0).unwrap();
        let w = klcs::gadget_weights(&alphabet, &weights).unwrap();
        for bits in 0..(1u32 << k) {
            let gadgets: Vec<Sequence> = (1..=k)
                .map(|t| klcs::k_coord_gadget(&alphabet, k, t, (bits >> (t - 1) & 1) as u8).unwrap())
                .collect();
            let refs: Vec<&Sequence> = gadgets.iter().collect();
            let score = solvers::k_wlcs(&refs, &w).unwrap();
            let expected = if bits == (1 << k) - 1 {
                weights.e_n_c().unwrap()
            } else {
                weights.e_o_c().unwrap()
            };
            checked += 1;
            if score != expected {
                ok = false;
                detail = format!("coordinate claim k={k} bits={bits:b}: {score} != {expected}");
                break 'outer;
            }
        }

        // Vector claim: all vector tuples for every d <= 3 and r <= d.
        for d in 1..=3usize {
            for r in 0..=d as u64 {
                let weights = klcs::KGadgetWeights::paper(k, d, r).unwrap();
                let w = klcs::gadget_weights(&alphabet, &weights).unwrap();
                let e_o = weights.e_o().unwrap();
                let e_n = weights.e_n().unwrap();
                let vectors: Vec<BitVector> = (0..1u32 << d)
                    .map(|m| {
                        BitVector::new((0..d).map(|h| (m >> h & 1) as u8).collect()).unwrap()
                    })
                    .collect();
                let mut tuple = vec![0usize; k];
                loop {
                    let gadgets: Vec<Sequence> = (1..=k)
                        .map(|t| {
                            klcs::k_vector_gadget(&alphabet, k, t, &vectors[tuple[t - 1]])
                                .unwrap()
                        })
                        .collect();
                    let refs: Vec<&Sequence> = gadgets.iter().collect();
                    let score = solvers::k_wlcs(&refs, &w).unwrap();
                    let vecs: Vec<&BitVector> = tuple.iter().map(|&i| &vectors[i]).collect();
                    let far = gapkit_core::is_far(&vecs, r).unwrap();
                    checked += 1;
                    let fine = if far { score >= e_o } else { score == e_n };
                    if !fine {
                        ok = false;
                        detail = format!(
                            "vector claim k={k} d={d} r={r} tuple={tuple:?}: score {score}, e_o {e_o}, e_n {e_n}"
                        );
                        break 'outer;
                    }

                    let mut t = k;
                    let mut done = true;
                    while t > 0 {
                        t -= 1;
                        if tuple[t] + 1 < vectors.len() {
                            tuple[t] += 1;
                            for u in t + 1..k {
                                tuple[u] = 0;
                            }
                            done = false;
                            break;
                        }
                    }
                    if done {
                        break;
                    }
                }
            }
        }
    }
    if ok {
        detail = format!("{checked} combinations verified");
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_05_klcs_gap_dichotomy() {
    let c = Criterion::new(5, "k-LCS gap: exhaustive k=2 plus 50 sampled k=3", 300);
    let report = suites::klcs_gap(&suite_config(0xACC5, 50));
    c.finish(
        report.passed(),
        &format!("{} families, {} disagreements", report.trials, report.failures.len()),
    );
}

#[test]
fn criterion_06_local_klcs_gap() {
    let c = Criterion::new(6, "windowed k=2 gap on 50 instances", 120);
    let report = suites::local_gap(&suite_config(0xACC6, 50));
    c.finish(report.passed(), &format!("{} violations", report.failures.len()));
}

#[test]
fn criterion_07_edit_dtwd_inequality() {
    let c = Criterion::new(7, "EDIT <= DTWD of padded sequences, 1000 trials", 30);
    let report = suites::dtwd_inequality(&suite_config(0xACC7, 1000));
    c.finish(report.passed(), &format!("{} violations", report.failures.len()));
}

#[test]
fn criterion_08_frechet_dtwd_gadget_gaps() {
    let c = Criterion::new(8, "Frechet/DTWD gadget gaps, non-metric and metric", 60);
    let non_metric = suites::frechet_gap(&suite_config(0xACC8, 100));
    let metric = suites::metric_gap(&suite_config(0xACC8 + 1, 100));
    let ok = non_metric.passed() && metric.passed();
    c.finish(
        ok,
        &format!(
            "{} non-metric and {} metric instances, {} failures",
            non_metric.trials,
            metric.trials,
            non_metric.failures.len() + metric.failures.len()
        ),
    );
}

#[test]
fn criterion_09_end_to_end_maxsat() {
    let c = Criterion::new(9, "MAX-SAT via brute, vectors and strings on 50 CNFs", 300);
    let report = suites::satlink_suite(&suite_config(0xACC9, 50));
    c.finish(report.passed(), &format!("{} disagreements", report.failures.len()));
}

#[test]
fn criterion_10_solver_oracle_equivalence() {
    let c = Criterion::new(10, "every DP against its brute-force oracle, 500 each", 120);
    let report = suites::solver_oracle(&suite_config(0xACCA, 500));
    c.finish(
        report.passed(),
        &format!("{} solver/oracle comparisons, {} mismatches", report.trials, report.failures.len()),
    );
}
