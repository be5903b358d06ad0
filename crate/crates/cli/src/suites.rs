//! The verification suites behind `gapkit verify`: each one drives a
//! module invariant over randomized or exhaustive inputs and reports the
//! failing trials with self-contained repro payloads.

use gapkit_core::{
    Alphabet, BitVector, DistanceTable, HalfUnits, Sequence, VectorFamily, WeightedAlphabet,
};
use gapkit_dtwd as dtwd_mod;
use gapkit_klcs as klcs_mod;
use gapkit_lcs as lcs_mod;
use gapkit_satlink as satlink_mod;
use gapkit_solvers as solvers;
use rand::prelude::*;
use rayon::prelude::*;
use serde_json::json;

use crate::config::SuiteConfig;
use crate::gen;

pub const SUITES: [&str; 8] = [
    "lcs-gap",
    "klcs-gap",
    "wlcs-expansion",
    "dtwd-ineq",
    "frechet-gap",
    "metric-gap",
    "solver-oracle",
    "satlink",
];

#[derive(Debug, Clone)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub message: String,
    pub repro: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite={} trials={} failures={}\n",
            self.suite,
            self.trials,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!("FAIL trial={} seed={}: {}\n", f.trial, f.seed, f.message));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "seed": f.seed,
                    "message": f.message,
                    "repro": f.repro,
                })
            })
            .collect();
        serde_json::to_string_pretty(&json!({
            "suite": self.suite,
            "trials": self.trials,
            "failures": failures,
        }))
        .expect("report serializes")
    }
}

fn collect_trials(
    suite: &str,
    config: &SuiteConfig,
    run: impl Fn(usize, u64) -> Option<TrialFailure> + Sync,
) -> SuiteReport {
    let failures: Vec<TrialFailure> = if config.parallel {
        (0..config.trials)
            .into_par_iter()
            .filter_map(|t| run(t, config.trial_seed(t)))
            .collect()
    } else {
        (0..config.trials).filter_map(|t| run(t, config.trial_seed(t))).collect()
    };
    let mut failures = failures;
    failures.sort_by_key(|f| f.trial);
    SuiteReport { suite: suite.to_string(), trials: config.trials, failures }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport, String> {
    match name {
        "lcs-gap" => Ok(lcs_gap(config)),
        "klcs-gap" => Ok(klcs_gap(config)),
        "wlcs-expansion" => Ok(wlcs_expansion(config)),
        "dtwd-ineq" => Ok(dtwd_inequality(config)),
        "frechet-gap" => Ok(frechet_gap(config)),
        "metric-gap" => Ok(metric_gap(config)),
        "solver-oracle" => Ok(solver_oracle(config)),
        "satlink" => Ok(satlink_suite(config)),
        other => Err(format!("unknown suite {other:?}; expected one of {SUITES:?}")),
    }
}

/// Re-runs a single dumped trial by suite name and stored seed.
pub fn replay(suite: &str, repro: &serde_json::Value) -> Result<SuiteReport, String> {
    let seed = repro
        .get("seed")
        .and_then(|s| s.as_u64())
        .ok_or_else(|| "repro file carries no seed".to_string())?;
    let mut config = SuiteConfig::new(seed, 1);
    config.parallel = false;
    run_suite(suite, &config)
}

/// Random vector lists, compact schedule, weighted solve: the score
/// crosses E_G exactly when the brute-force oracle finds a far pair.
pub fn lcs_gap(config: &SuiteConfig) -> SuiteReport {
    collect_trials("lcs-gap", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let n = rng.gen_range(1..=config.max_n);
        let d = rng.gen_range(1..=config.max_d);
        let r = rng.gen_range(0..d as u64);
        let a_list = gen::random_list(&mut rng, n, d);
        let b_list = gen::random_list(&mut rng, n, d);

        let outcome = (|| -> Result<(i64, i64, bool), String> {
            let schedule =
                lcs_mod::WeightSchedule::compact(d, r).map_err(|e| e.to_string())?;
            let inst = lcs_mod::build_instance(&a_list, &b_list, r, schedule)
                .map_err(|e| e.to_string())?;
            let score =
                solvers::wlcs(&inst.p1, &inst.p2, &inst.weights).map_err(|e| e.to_string())?;
            let threshold = inst.recompute_e_g().map_err(|e| e.to_string())?;
            let far = solvers::mov_bruteforce(&a_list, &b_list, r)
                .map_err(|e| e.to_string())?
                .is_some();
            Ok((score, threshold, far))
        })();

        let lists = json!({
            "a": a_list.iter().map(|v| v.render()).collect::<Vec<_>>(),
            "b": b_list.iter().map(|v| v.render()).collect::<Vec<_>>(),
            "n": n, "d": d, "r": r,
        });
        match outcome {
            Ok((score, threshold, far)) => {
                let agrees = if far { score >= threshold + 1 } else { score <= threshold };
                if agrees {
                    None
                } else {
                    Some(TrialFailure {
                        trial,
                        seed,
                        message: format!(
                            "score {score} vs threshold {threshold}, oracle far={far}"
                        ),
                        repro: json!({"seed": seed, "input": lists, "score": score,
                                      "threshold": threshold, "far": far}),
                    })
                }
            }
            Err(message) => Some(TrialFailure {
                trial,
                seed,
                message,
                repro: json!({"seed": seed, "input": lists}),
            }),
        }
    })
}

/// Exhaustive k=2 families (n <= 2, d <= 2, all r) plus `trials` sampled
/// k=3 families.
pub fn klcs_gap(config: &SuiteConfig) -> SuiteReport {
    // Exhaustive k = 2 part.
    let mut cases: Vec<(usize, usize, u64, u64)> = Vec::new();
    for n in 1..=2usize {
        for d in 1..=2usize {
            for r in 0..=d as u64 {
                let masks = 1u64 << (n * d);
                for a_mask in 0..masks {
                    for b_mask in 0..masks {
                        cases.push((n, d, r, a_mask << (n * d) | b_mask));
                    }
                }
            }
        }
    }
    let exhaustive: Vec<TrialFailure> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, &(n, d, r, packed))| {
            let decode = |mask: u64| -> Vec<BitVector> {
                (0..n)
                    .map(|v| {
                        BitVector::new(
                            (0..d).map(|h| (mask >> (v * d + h) & 1) as u8).collect(),
                        )
                        .unwrap()
                    })
                    .collect()
            };
            let a_list = decode(packed >> (n * d));
            let b_list = decode(packed & ((1 << (n * d)) - 1));
            let family = VectorFamily::pair(a_list, b_list).unwrap();
            check_klcs_family(&family, r).map(|message| TrialFailure {
                trial: i,
                seed: config.seed,
                message,
                repro: json!({"seed": config.seed, "k": 2, "n": n, "d": d, "r": r,
                              "packed_mask": packed}),
            })
        })
        .collect();

    // Sampled k = 3 part.
    let sampled = collect_trials("klcs-gap", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let n = rng.gen_range(1..=2usize);
        let d = rng.gen_range(1..=2usize);
        let r = rng.gen_range(0..=d as u64);
        let family = gen::random_family(&mut rng, 3, n, d);
        check_klcs_family(&family, r).map(|message| TrialFailure {
            trial,
            seed,
            message,
            repro: json!({
                "seed": seed, "k": 3, "n": n, "d": d, "r": r,
                "lists": family.lists().iter()
                    .map(|l| l.iter().map(|v| v.render()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
        })
    });

    let mut failures = exhaustive;
    failures.extend(sampled.failures);
    SuiteReport {
        suite: "klcs-gap".to_string(),
        trials: cases.len() + sampled.trials,
        failures,
    }
}

fn check_klcs_family(family: &VectorFamily, r: u64) -> Option<String> {
    let outcome = (|| -> Result<(i64, i64, bool), String> {
        let inst = klcs_mod::build_klcs_instance(family, r).map_err(|e| e.to_string())?;
        let refs: Vec<&Sequence> = inst.sequences.iter().collect();
        let score = solvers::k_wlcs_with_cap(&refs, &inst.weights, 2_000_000_000)
            .map_err(|e| e.to_string())?;
        let threshold = inst.recompute_e_g().map_err(|e| e.to_string())?;
        let far = solvers::kmov_bruteforce(family, r).map_err(|e| e.to_string())?.is_some();
        Ok((score, threshold, far))
    })();
    match outcome {
        Ok((score, threshold, far)) => {
            let agrees = if far { score >= threshold + 1 } else { score <= threshold };
            if agrees {
                None
            } else {
                Some(format!("score {score} vs threshold {threshold}, oracle far={far}"))
            }
        }
        Err(message) => Some(message),
    }
}

/// lcs(expand(s), expand(t)) = wlcs(s, t) on random weighted pairs.
pub fn wlcs_expansion(config: &SuiteConfig) -> SuiteReport {
    collect_trials("wlcs-expansion", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let sigma = rng.gen_range(1..=5usize);
        let alphabet = Alphabet::of_chars(&"abcde"[..sigma]).expect("alphabet");
        let weights: Vec<i64> = (0..sigma).map(|_| rng.gen_range(1..=5)).collect();
        let w = WeightedAlphabet::new(std::sync::Arc::clone(&alphabet), weights.clone())
            .expect("positive weights");
        let s = gen::random_sequence(&mut rng, &alphabet, 8);
        let t = gen::random_sequence(&mut rng, &alphabet, 8);

        let outcome = (|| -> Result<(i64, i64), String> {
            let es = lcs_mod::unary_expand(&s, &w, config.expansion_cap)
                .map_err(|e| e.to_string())?;
            let et = lcs_mod::unary_expand(&t, &w, config.expansion_cap)
                .map_err(|e| e.to_string())?;
            let plain = solvers::lcs(&es, &et).map_err(|e| e.to_string())?;
            let weighted = solvers::wlcs(&s, &t, &w).map_err(|e| e.to_string())?;
            Ok((plain, weighted))
        })();
        let repro = json!({"seed": seed, "s": s.render(), "t": t.render(), "weights": weights});
        match outcome {
            Ok((plain, weighted)) if plain == weighted => None,
            Ok((plain, weighted)) => Some(TrialFailure {
                trial,
                seed,
                message: format!("expanded lcs {plain} != wlcs {weighted}"),
                repro,
            }),
            Err(message) => Some(TrialFailure { trial, seed, message, repro }),
        }
    })
}

/// EDIT(Q1,Q2) <= DTWD of the padded sequences, randomized.
pub fn dtwd_inequality(config: &SuiteConfig) -> SuiteReport {
    collect_trials("dtwd-ineq", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let alphabet = Alphabet::of_chars("abcd").expect("alphabet");
        let q1 = gen::random_sequence(&mut rng, &alphabet, 12);
        let q2 = gen::random_sequence(&mut rng, &alphabet, 12);
        let r1 = dtwd_mod::PaddingVector((0..=q1.len()).map(|_| rng.gen_range(1..=3)).collect());
        let r2 = dtwd_mod::PaddingVector((0..=q2.len()).map(|_| rng.gen_range(1..=3)).collect());
        let repro = json!({"seed": seed, "q1": q1.render(), "q2": q2.render(),
                           "r1": r1.0, "r2": r2.0});
        match dtwd_mod::verify_edit_dtwd_inequality(&q1, &q2, &r1, &r2, "#") {
            Ok(true) => None,
            Ok(false) => Some(TrialFailure {
                trial,
                seed,
                message: "EDIT exceeded DTWD of the padded sequences".to_string(),
                repro,
            }),
            Err(e) => Some(TrialFailure { trial, seed, message: e.to_string(), repro }),
        }
    })
}

fn frechet_repro(seed: u64, inst: &dtwd_mod::GadgetInstance) -> serde_json::Value {
    json!({"seed": seed, "instance": serde_json::from_str::<serde_json::Value>(&inst.to_json())
        .expect("instance json")})
}

/// Non-metric gap: Frechet and DTWD are 0 iff an orthogonal pair exists,
/// 1 otherwise.
pub fn frechet_gap(config: &SuiteConfig) -> SuiteReport {
    collect_trials("frechet-gap", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let n = rng.gen_range(1..=6);
        let d = rng.gen_range(1..=5);
        let a_list = gen::random_list(&mut rng, n, d);
        let b_list = gen::random_list(&mut rng, n, d);
        let inst = match dtwd_mod::build_frechet_instance(&a_list, &b_list) {
            Ok(inst) => inst,
            Err(e) => {
                return Some(TrialFailure {
                    trial,
                    seed,
                    message: e.to_string(),
                    repro: json!({"seed": seed}),
                })
            }
        };
        let outcome = (|| -> Result<(HalfUnits, HalfUnits), String> {
            let fr = solvers::frechet(&inst.p1, &inst.p2, &inst.points.dist)
                .map_err(|e| e.to_string())?;
            let warp = dtwd_mod::dtwd_gap_check(&inst).map_err(|e| e.to_string())?;
            Ok((fr, warp))
        })();
        match outcome {
            Ok((fr, warp)) if fr == inst.expected_frechet && warp == inst.expected_dtwd => None,
            Ok((fr, warp)) => Some(TrialFailure {
                trial,
                seed,
                message: format!(
                    "frechet={fr} dtwd={warp}, expected {} (orthogonal pair: {})",
                    inst.expected_frechet, inst.has_orthogonal_pair
                ),
                repro: frechet_repro(seed, &inst),
            }),
            Err(message) => Some(TrialFailure {
                trial,
                seed,
                message,
                repro: frechet_repro(seed, &inst),
            }),
        }
    })
}

/// Metric variant: triangle inequality holds and the Frechet gap is
/// 1/2 vs 3/2 with the same correspondence.
pub fn metric_gap(config: &SuiteConfig) -> SuiteReport {
    // The table is one fixed object; check it once up front.
    if let Err(e) = dtwd_mod::metricize(&dtwd_mod::build_frechet_pointsets())
        .and_then(|m| m.check_triangle().map(|_| m))
    {
        return SuiteReport {
            suite: "metric-gap".to_string(),
            trials: config.trials,
            failures: vec![TrialFailure {
                trial: 0,
                seed: config.seed,
                message: e.to_string(),
                repro: json!({"seed": config.seed}),
            }],
        };
    }
    collect_trials("metric-gap", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let n = rng.gen_range(1..=6);
        let d = rng.gen_range(1..=5);
        let a_list = gen::random_list(&mut rng, n, d);
        let b_list = gen::random_list(&mut rng, n, d);
        let outcome = (|| -> Result<(dtwd_mod::GadgetInstance, HalfUnits), String> {
            let inst = dtwd_mod::build_frechet_instance(&a_list, &b_list)
                .map_err(|e| e.to_string())?;
            let metric = inst.metric_points().map_err(|e| e.to_string())?;
            let fr = solvers::frechet(&inst.p1, &inst.p2, &metric.dist)
                .map_err(|e| e.to_string())?;
            Ok((inst, fr))
        })();
        match outcome {
            Ok((inst, fr)) if fr == inst.expected_metric_frechet() => None,
            Ok((inst, fr)) => Some(TrialFailure {
                trial,
                seed,
                message: format!(
                    "metric frechet={fr}, expected {}",
                    inst.expected_metric_frechet()
                ),
                repro: frechet_repro(seed, &inst),
            }),
            Err(message) => {
                Some(TrialFailure { trial, seed, message, repro: json!({"seed": seed}) })
            }
        }
    })
}

/// Every reference DP against its exponential oracle.
pub fn solver_oracle(config: &SuiteConfig) -> SuiteReport {
    let checks: [(&str, fn(u64) -> Result<(), String>); 7] = [
        ("lcs", check_lcs_oracle),
        ("wlcs", check_wlcs_oracle),
        ("k_wlcs", check_k_wlcs_oracle),
        ("edit", check_edit_oracle),
        ("dtwd", check_dtwd_oracle),
        ("frechet", check_frechet_oracle),
        ("local_k_lcs", check_local_oracle),
    ];
    let total = config.trials * checks.len();
    let failures: Vec<TrialFailure> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let (name, check) = checks[i % checks.len()];
            let trial = i / checks.len();
            let seed = config.trial_seed(i);
            check(seed).err().map(|message| TrialFailure {
                trial,
                seed,
                message: format!("{name}: {message}"),
                repro: json!({"seed": seed, "solver": name}),
            })
        })
        .collect();
    let mut failures = failures;
    failures.sort_by_key(|f| f.trial);
    SuiteReport { suite: "solver-oracle".to_string(), trials: total, failures }
}

fn small_alphabet(rng: &mut rand_chacha::ChaCha8Rng) -> std::sync::Arc<Alphabet> {
    let sigma = rng.gen_range(2..=4usize);
    Alphabet::of_chars(&"abcd"[..sigma]).expect("alphabet")
}

fn check_lcs_oracle(seed: u64) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let s = gen::random_sequence(&mut rng, &alphabet, 10);
    let t = gen::random_sequence(&mut rng, &alphabet, 10);
    let dp = solvers::lcs(&s, &t).map_err(|e| e.to_string())?;
    let brute = solvers::lcs_bruteforce(&s, &t).map_err(|e| e.to_string())?;
    if dp == brute {
        Ok(())
    } else {
        Err(format!("dp {dp} != brute {brute} on {:?} {:?}", s.render(), t.render()))
    }
}

fn check_wlcs_oracle(seed: u64) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let weights: Vec<i64> = (0..alphabet.len()).map(|_| rng.gen_range(1..=5)).collect();
    let w = WeightedAlphabet::new(std::sync::Arc::clone(&alphabet), weights)
        .expect("positive weights");
    let s = gen::random_sequence(&mut rng, &alphabet, 10);
    let t = gen::random_sequence(&mut rng, &alphabet, 10);
    let dp = solvers::wlcs(&s, &t, &w).map_err(|e| e.to_string())?;
    let brute = solvers::wlcs_bruteforce(&s, &t, &w).map_err(|e| e.to_string())?;
    if dp == brute {
        Ok(())
    } else {
        Err(format!("dp {dp} != brute {brute}"))
    }
}

fn check_k_wlcs_oracle(seed: u64) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let weights: Vec<i64> = (0..alphabet.len()).map(|_| rng.gen_range(1..=5)).collect();
    let w = WeightedAlphabet::new(std::sync::Arc::clone(&alphabet), weights)
        .expect("positive weights");
    let seqs: Vec<Sequence> =
        (0..3).map(|_| gen::random_sequence(&mut rng, &alphabet, 7)).collect();
    let refs: Vec<&Sequence> = seqs.iter().collect();
    let dp = solvers::k_wlcs(&refs, &w).map_err(|e| e.to_string())?;
    let brute = solvers::k_wlcs_bruteforce(&refs, &w).map_err(|e| e.to_string())?;
    if dp == brute {
        Ok(())
    } else {
        Err(format!("dp {dp} != brute {brute}"))
    }
}

fn check_edit_oracle(seed: u64) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let s = gen::random_sequence(&mut rng, &alphabet, 8);
    let t = gen::random_sequence(&mut rng, &alphabet, 8);
    let dp = solvers::edit(&s, &t).map_err(|e| e.to_string())?;
    let brute = solvers::edit_bruteforce(&s, &t).map_err(|e| e.to_string())?;
    if dp == brute {
        Ok(())
    } else {
        Err(format!("dp {dp} != brute {brute}"))
    }
}

fn check_warp_oracle(
    seed: u64,
    dp: impl Fn(&Sequence, &Sequence, &DistanceTable) -> Result<HalfUnits, solvers::SolverError>,
    brute: impl Fn(&Sequence, &Sequence, &DistanceTable) -> Result<HalfUnits, solvers::SolverError>,
) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let dist = DistanceTable::symbol_distance(&alphabet);
    let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
        let len = rng.gen_range(1..=5);
        gen::random_sequence(rng, &alphabet, len)
    };
    let mut x = mk(&mut rng);
    let mut y = mk(&mut rng);
    if x.is_empty() {
        x = Sequence::parse(&alphabet, "a").expect("nonempty");
    }
    if y.is_empty() {
        y = Sequence::parse(&alphabet, "a").expect("nonempty");
    }
    let got = dp(&x, &y, &dist).map_err(|e| e.to_string())?;
    let want = brute(&x, &y, &dist).map_err(|e| e.to_string())?;
    if got == want {
        Ok(())
    } else {
        Err(format!("dp {got} != enumeration {want}"))
    }
}

fn check_dtwd_oracle(seed: u64) -> Result<(), String> {
    check_warp_oracle(seed, solvers::dtwd, solvers::dtwd_bruteforce)
}

fn check_frechet_oracle(seed: u64) -> Result<(), String> {
    check_warp_oracle(seed, solvers::frechet, solvers::frechet_bruteforce)
}

fn check_local_oracle(seed: u64) -> Result<(), String> {
    let mut rng = gen::rng_for(seed);
    let alphabet = small_alphabet(&mut rng);
    let len = rng.gen_range(2..=10usize);
    let mk = |rng: &mut rand_chacha::ChaCha8Rng, len: usize| {
        Sequence::new(
            std::sync::Arc::clone(&alphabet),
            (0..len)
                .map(|_| gapkit_core::SymbolId(rng.gen_range(0..alphabet.len() as u32)))
                .collect(),
        )
        .expect("ids in range")
    };
    let s = mk(&mut rng, len);
    let t = mk(&mut rng, len);
    let window = rng.gen_range(1..=len);
    let pruned = solvers::local_k_lcs(&[&s, &t], window).map_err(|e| e.to_string())?;
    let naive = solvers::local_k_lcs_bruteforce(&[&s, &t], window).map_err(|e| e.to_string())?;
    if pruned == naive {
        Ok(())
    } else {
        Err(format!("pruned {pruned} != naive {naive}"))
    }
}

/// MAX-SAT route agreement: brute force, vector oracle, and string oracle
/// return the same count, within the binary-search call budget.
pub fn satlink_suite(config: &SuiteConfig) -> SuiteReport {
    collect_trials("satlink", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let cnf = gen::random_cnf(&mut rng, 8, 10);
        let repro = json!({
            "seed": seed,
            "num_vars": cnf.num_vars(),
            "clauses": cnf.clauses(),
        });
        let outcome = (|| -> Result<(u32, u32, u32, u32), String> {
            let brute = satlink_mod::max_sat_bruteforce(&cnf).map_err(|e| e.to_string())?;
            let mut mov_oracle = satlink_mod::BruteForceMovOracle;
            let mov = satlink_mod::max_sat_via_mov(&cnf, 2, &mut mov_oracle)
                .map_err(|e| e.to_string())?;
            let mut lcs_oracle = lcs_mod::LcsMovOracle;
            let lcs = satlink_mod::max_sat_via_mov(&cnf, 2, &mut lcs_oracle)
                .map_err(|e| e.to_string())?;
            Ok((brute, mov.best, lcs.best, mov.oracle_calls))
        })();
        match outcome {
            Ok((brute, mov, lcs, calls)) => {
                let budget = satlink_mod::max_oracle_calls(cnf.num_clauses());
                if brute == mov && brute == lcs && calls <= budget {
                    None
                } else {
                    Some(TrialFailure {
                        trial,
                        seed,
                        message: format!(
                            "brute={brute} mov={mov} lcs={lcs} calls={calls} budget={budget}"
                        ),
                        repro,
                    })
                }
            }
            Err(message) => Some(TrialFailure { trial, seed, message, repro }),
        }
    })
}

/// Local-k-LCS gap suite used by the acceptance gate (k = 2 windows).
pub fn local_gap(config: &SuiteConfig) -> SuiteReport {
    collect_trials("local-gap", config, |trial, seed| {
        let mut rng = gen::rng_for(seed);
        let n = rng.gen_range(1..=3usize);
        let d = rng.gen_range(1..=2usize);
        let r = rng.gen_range(0..=d as u64);
        let family = gen::random_family(&mut rng, 2, n, d);
        let repro = json!({
            "seed": seed, "n": n, "d": d, "r": r,
            "lists": family.lists().iter()
                .map(|l| l.iter().map(|v| v.render()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        let outcome = (|| -> Result<(i64, i64, i64, bool), String> {
            let inst = klcs_mod::build_local_klcs_instance(&family, r, config.expansion_cap)
                .map_err(|e| e.to_string())?;
            let refs: Vec<&Sequence> = inst.sequences.iter().collect();
            let score = solvers::local_k_lcs(&refs, inst.window).map_err(|e| e.to_string())?;
            let far = solvers::kmov_bruteforce(&family, r).map_err(|e| e.to_string())?.is_some();
            Ok((score, inst.e_o, inst.e_n, far))
        })();
        match outcome {
            Ok((score, e_o, e_n, far)) => {
                let agrees = if far { score >= e_o } else { score == e_n };
                if agrees {
                    None
                } else {
                    Some(TrialFailure {
                        trial,
                        seed,
                        message: format!("window score {score}, e_o={e_o} e_n={e_n} far={far}"),
                        repro,
                    })
                }
            }
            Err(message) => Some(TrialFailure { trial, seed, message, repro }),
        }
    })
}
