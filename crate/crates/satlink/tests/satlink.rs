use gapkit_core::{k_inner_product, BitVector, CnfFormula};
use gapkit_satlink::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn xor_like_formula() -> CnfFormula {
    // (x1 v x2)(~x1 v x2)(x1 v ~x2)(~x1 v ~x2): any assignment satisfies 3.
    CnfFormula::new(2, vec![vec![1, 2], vec![-1, 2], vec![1, -2], vec![-1, -2]]).unwrap()
}

#[test]
fn parse_dimacs_basics() {
    let cnf = parse_dimacs("p cnf 2 1\n1 -2 0\n").unwrap();
    assert_eq!(cnf.num_vars(), 2);
    assert_eq!(cnf.clauses(), &[vec![1, -2]]);

    let cnf = parse_dimacs("c a comment\np cnf 2 2\nc another\n1 0\n-2 0\n").unwrap();
    assert_eq!(cnf.num_clauses(), 2);

    // Clauses may span lines.
    let cnf = parse_dimacs("p cnf 3 1\n1 2\n3 0\n").unwrap();
    assert_eq!(cnf.clauses(), &[vec![1, 2, 3]]);
}

#[test]
fn parse_dimacs_errors_carry_line_numbers() {
    match parse_dimacs("p cnf 1 1\n2 0\n").unwrap_err() {
        SatError::Parse { line, reason } => {
            assert_eq!(line, 2);
            assert!(reason.contains("out of range"));
        }
        other => panic!("unexpected error {other:?}"),
    }

    match parse_dimacs("p qnf 1 1\n1 0\n").unwrap_err() {
        SatError::Parse { line, .. } => assert_eq!(line, 1),
        other => panic!("unexpected error {other:?}"),
    }

    match parse_dimacs("p cnf 2 1\n1 -2\n").unwrap_err() {
        SatError::Parse { line, reason } => {
            assert_eq!(line, 2);
            assert!(reason.contains("not terminated"));
        }
        other => panic!("unexpected error {other:?}"),
    }

    assert!(matches!(parse_dimacs("1 0\n"), Err(SatError::Parse { .. })));
}

#[test]
fn vectorize_evaluates_partial_assignments() {
    let cnf = xor_like_formula();
    let table = vectorize(&cnf, 2).unwrap();
    assert_eq!(table.k(), 2);
    assert_eq!(table.blocks(), &[vec![1], vec![2]]);

    // Block {x1}: counting order is x1=0 then x1=1.
    let b1 = table.vectors(0);
    assert_eq!(b1[1].render(), "0101");
    // Block {x2}, x2=1.
    let b2 = table.vectors(1);
    assert_eq!(b2[1].render(), "0011");
}

#[test]
fn vectorize_marks_untouched_clauses_unsatisfied() {
    // Clause 2 only mentions x3, outside block 0 of the 2-way split of 4 vars?
    // Blocks are {1,2} and {3,4}; clause (x3) is never satisfied by block 0.
    let cnf = CnfFormula::new(4, vec![vec![1], vec![3]]).unwrap();
    let table = vectorize(&cnf, 2).unwrap();
    for v in table.vectors(0) {
        assert_eq!(v.bit(1), 1);
    }
    for v in table.vectors(1) {
        assert_eq!(v.bit(0), 1);
    }
}

#[test]
fn vectorize_guards() {
    let cnf = CnfFormula::new(2, vec![vec![1]]).unwrap();
    assert!(matches!(vectorize(&cnf, 1), Err(SatError::BadBlockCount { .. })));

    let big = CnfFormula::new(42, vec![vec![1]]).unwrap();
    assert!(matches!(vectorize(&big, 2), Err(SatError::BlockTooLarge { .. })));
}

#[test]
fn split_blocks_give_first_blocks_the_larger_share() {
    let cnf = CnfFormula::new(7, vec![vec![1]]).unwrap();
    let table = vectorize(&cnf, 3).unwrap();
    let sizes: Vec<usize> = table.blocks().iter().map(|b| b.len()).collect();
    assert_eq!(sizes, vec![3, 2, 2]);
    assert_eq!(table.blocks()[0], vec![1, 2, 3]);
    assert_eq!(table.blocks()[2], vec![6, 7]);
}

/// The split-and-list correspondence: the k-inner product of one vector per
/// block equals the number of clauses the combined assignment leaves
/// unsatisfied. Checked exhaustively on small random formulas.
#[test]
fn inner_products_count_unsatisfied_clauses() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for k in [2usize, 3] {
        for _ in 0..40 {
            let n = rng.gen_range(k..=6);
            let m = rng.gen_range(1..=8);
            let cnf = random_cnf(&mut rng, n, m);
            let table = vectorize(&cnf, k).unwrap();

            let block_sizes: Vec<usize> = table.blocks().iter().map(|b| b.len()).collect();
            let mut counters = vec![0u64; k];
            loop {
                // Assemble the total assignment from the per-block counters.
                let mut assignment = vec![false; n];
                for (b, block) in table.blocks().iter().enumerate() {
                    for (bit, &var) in block.iter().enumerate() {
                        assignment[var - 1] = counters[b] >> bit & 1 == 1;
                    }
                }
                let vectors: Vec<&BitVector> =
                    (0..k).map(|b| &table.vectors(b)[counters[b] as usize]).collect();
                let unsatisfied = cnf.num_clauses() - cnf.count_satisfied(&assignment);
                assert_eq!(k_inner_product(&vectors).unwrap(), unsatisfied as u64);

                let mut t = k;
                let mut done = true;
                while t > 0 {
                    t -= 1;
                    if counters[t] + 1 < (1u64 << block_sizes[t]) {
                        counters[t] += 1;
                        for u in t + 1..k {
                            counters[u] = 0;
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

fn random_cnf(rng: &mut ChaCha8Rng, n: usize, m: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(n));
            (0..width)
                .map(|_| {
                    let var = rng.gen_range(1..=n) as i32;
                    if rng.gen_bool(0.5) {
                        var
                    } else {
                        -var
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

#[test]
fn max_sat_examples() {
    let cnf = xor_like_formula();
    assert_eq!(max_sat_bruteforce(&cnf).unwrap(), 3);

    let mut oracle = BruteForceMovOracle;
    let outcome = max_sat_via_mov(&cnf, 2, &mut oracle).unwrap();
    assert_eq!(outcome.best, 3);
    assert!(outcome.oracle_calls <= max_oracle_calls(cnf.num_clauses()));

    let single = CnfFormula::new(1, vec![vec![1]]).unwrap();
    assert_eq!(max_sat_bruteforce(&single).unwrap(), 1);
    assert_eq!(max_sat_via_mov(&single, 2, &mut oracle).unwrap().best, 1);

    let tautology = CnfFormula::new(1, vec![vec![1, -1]]).unwrap();
    assert_eq!(max_sat_bruteforce(&tautology).unwrap(), 1);

    let empty = CnfFormula::new(3, vec![]).unwrap();
    assert_eq!(max_sat_bruteforce(&empty).unwrap(), 0);
    assert_eq!(max_sat_via_mov(&empty, 2, &mut oracle).unwrap().best, 0);
}

#[test]
fn max_sat_via_mov_agrees_with_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut oracle = BruteForceMovOracle;
    for k in [2usize, 3] {
        for _ in 0..50 {
            let n = rng.gen_range(k..=10);
            let m = rng.gen_range(1..=15);
            let cnf = random_cnf(&mut rng, n, m);
            let expected = max_sat_bruteforce(&cnf).unwrap();
            let outcome = max_sat_via_mov(&cnf, k, &mut oracle).unwrap();
            assert_eq!(outcome.best, expected, "k={k} cnf={cnf:?}");
            assert!(outcome.oracle_calls <= max_oracle_calls(m));
        }
    }
}

#[test]
fn brute_guard_trips() {
    let cnf = CnfFormula::new(23, vec![vec![1]]).unwrap();
    assert!(matches!(max_sat_bruteforce(&cnf), Err(SatError::TooManyVars { .. })));
}

#[test]
fn debug_json_lists_vectors_as_glyph_strings() {
    let cnf = xor_like_formula();
    let table = vectorize(&cnf, 2).unwrap();
    let dump = table.to_debug_json();
    assert!(dump.contains("\"0101\""));
    assert!(dump.contains("\"0011\""));
}
