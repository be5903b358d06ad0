use std::sync::Arc;

use gapkit_core::*;
use gapkit_solvers::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn seq(alphabet: &Arc<Alphabet>, text: &str) -> Sequence {
    Sequence::parse(alphabet, text).unwrap()
}

fn random_seq(alphabet: &Arc<Alphabet>, rng: &mut ChaCha8Rng, max_len: usize) -> Sequence {
    let len = rng.gen_range(0..=max_len);
    let ids = (0..len)
        .map(|_| SymbolId(rng.gen_range(0..alphabet.len() as u32)))
        .collect();
    Sequence::new(Arc::clone(alphabet), ids).unwrap()
}

#[test]
fn lcs_textbook_example() {
    let ab = Alphabet::of_chars("ABCD").unwrap();
    let s = seq(&ab, "ABCBDAB");
    let t = seq(&ab, "BDCABA");
    assert_eq!(lcs_bruteforce(&s, &t).unwrap(), 4);
    assert_eq!(lcs(&s, &t).unwrap(), 4);
}

#[test]
fn lcs_identity_and_disjoint() {
    let ab = Alphabet::of_chars("abcd").unwrap();
    let s = seq(&ab, "abcdabc");
    assert_eq!(lcs(&s, &s).unwrap(), s.len() as i64);
    let t = seq(&ab, "ddd");
    let u = seq(&ab, "abc");
    assert_eq!(lcs(&t, &u).unwrap(), 0);
}

#[test]
fn lcs_rejects_alphabet_mismatch() {
    let a1 = Alphabet::of_chars("ab").unwrap();
    let a2 = Alphabet::of_chars("ba").unwrap();
    let s = seq(&a1, "ab");
    let t = seq(&a2, "ab");
    assert!(lcs(&s, &t).is_err());
}

#[test]
fn wlcs_coordinate_gadget_shape() {
    // The 2X+1 coordinate-gadget value with X = 100.
    let ab = Alphabet::of_chars("456").unwrap();
    let w = WeightedAlphabet::from_glyphs(Arc::clone(&ab), &[("4", 1), ("5", 100), ("6", 1)])
        .unwrap();
    let s = seq(&ab, "545");
    let t = seq(&ab, "5465");
    assert_eq!(wlcs_bruteforce(&s, &t, &w).unwrap(), 201);
    assert_eq!(wlcs(&s, &t, &w).unwrap(), 201);
}

#[test]
fn wlcs_with_unit_weights_is_lcs() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let unit = WeightedAlphabet::unit(Arc::clone(&ab));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let s = random_seq(&ab, &mut rng, 10);
        let t = random_seq(&ab, &mut rng, 10);
        assert_eq!(wlcs(&s, &t, &unit).unwrap(), lcs(&s, &t).unwrap());
    }
}

#[test]
fn wlcs_self_is_total_weight() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let w =
        WeightedAlphabet::from_glyphs(Arc::clone(&ab), &[("a", 2), ("b", 3), ("c", 5)]).unwrap();
    let s = seq(&ab, "abcab");
    assert_eq!(wlcs(&s, &s, &w).unwrap(), w.sequence_weight(&s).unwrap());
}

#[test]
fn k_wlcs_pair_equals_wlcs() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let w =
        WeightedAlphabet::from_glyphs(Arc::clone(&ab), &[("a", 2), ("b", 1), ("c", 4)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let s = random_seq(&ab, &mut rng, 9);
        let t = random_seq(&ab, &mut rng, 9);
        assert_eq!(k_wlcs(&[&s, &t], &w).unwrap(), wlcs(&s, &t, &w).unwrap());
    }
}

#[test]
fn k_lcs_small_cases() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let s = seq(&ab, "ab");
    assert_eq!(k_lcs(&[&s, &s, &s]).unwrap(), 2);

    let t = seq(&ab, "ba");
    assert_eq!(k_lcs_bruteforce(&[&s, &t, &s]).unwrap(), 1);
    assert_eq!(k_lcs(&[&s, &t, &s]).unwrap(), 1);
}

#[test]
fn k_wlcs_matches_bruteforce_on_random_inputs() {
    let ab = Alphabet::of_chars("abcd").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in [2usize, 3, 4] {
        for _ in 0..120 {
            let weights: Vec<i64> = (0..ab.len()).map(|_| rng.gen_range(1..=5)).collect();
            let w = WeightedAlphabet::new(Arc::clone(&ab), weights).unwrap();
            let seqs: Vec<Sequence> =
                (0..k).map(|_| random_seq(&ab, &mut rng, 7)).collect();
            let refs: Vec<&Sequence> = seqs.iter().collect();
            assert_eq!(
                k_wlcs(&refs, &w).unwrap(),
                k_wlcs_bruteforce(&refs, &w).unwrap()
            );
        }
    }
}

#[test]
fn k_wlcs_guards() {
    let ab = Alphabet::of_chars("a").unwrap();
    let unit = WeightedAlphabet::unit(Arc::clone(&ab));
    let s = seq(&ab, "a");
    assert!(matches!(
        k_wlcs(&[&s], &unit),
        Err(SolverError::UnsupportedK { .. })
    ));
    let refs = [&s, &s, &s, &s, &s];
    assert!(matches!(
        k_wlcs(&refs, &unit),
        Err(SolverError::UnsupportedK { .. })
    ));

    let long = Sequence::new(Arc::clone(&ab), vec![SymbolId(0); 40_000]).unwrap();
    assert!(matches!(
        k_wlcs(&[&long, &long, &long], &unit),
        Err(SolverError::TableTooLarge { .. })
    ));
}

#[test]
fn edit_examples() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let s = seq(&ab, "ab");
    let t = seq(&ab, "ba");
    assert_eq!(edit(&s, &s).unwrap(), 0);
    assert_eq!(edit_bruteforce(&s, &t).unwrap(), 2);
    assert_eq!(edit(&s, &t).unwrap(), 2);
    let empty = Sequence::empty(Arc::clone(&ab));
    assert_eq!(edit(&empty, &t).unwrap(), t.len() as i64);
}

#[test]
fn edit_matches_bruteforce_on_random_inputs() {
    let ab = Alphabet::of_chars("abcd").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let s = random_seq(&ab, &mut rng, 8);
        let t = random_seq(&ab, &mut rng, 8);
        assert_eq!(edit(&s, &t).unwrap(), edit_bruteforce(&s, &t).unwrap());
    }
}

#[test]
fn dtwd_examples() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let dist = DistanceTable::symbol_distance(&ab);
    let x = seq(&ab, "aab");
    let y = seq(&ab, "ab");
    assert_eq!(dtwd(&x, &x, &dist).unwrap(), HalfUnits::ZERO);
    assert_eq!(dtwd(&x, &y, &dist).unwrap(), HalfUnits::ZERO);

    let s = seq(&ab, "ab");
    let t = seq(&ab, "ba");
    assert_eq!(dtwd_bruteforce(&s, &t, &dist).unwrap(), HalfUnits::from_whole(2));
    assert_eq!(dtwd(&s, &t, &dist).unwrap(), HalfUnits::from_whole(2));
}

#[test]
fn frechet_examples() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let dist = DistanceTable::symbol_distance(&ab);
    let s = seq(&ab, "ab");
    let t = seq(&ab, "ba");
    assert_eq!(frechet(&s, &s, &dist).unwrap(), HalfUnits::ZERO);
    assert_eq!(frechet_bruteforce(&s, &t, &dist).unwrap(), HalfUnits::from_whole(1));
    assert_eq!(frechet(&s, &t, &dist).unwrap(), HalfUnits::from_whole(1));
}

#[test]
fn warp_dps_match_traversal_enumeration() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let dist = DistanceTable::symbol_distance(&ab);
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..300 {
        let x = random_seq(&ab, &mut rng, 5);
        let y = random_seq(&ab, &mut rng, 5);
        if x.is_empty() || y.is_empty() {
            continue;
        }
        assert_eq!(dtwd(&x, &y, &dist).unwrap(), dtwd_bruteforce(&x, &y, &dist).unwrap());
        assert_eq!(
            frechet(&x, &y, &dist).unwrap(),
            frechet_bruteforce(&x, &y, &dist).unwrap()
        );
    }
}

#[test]
fn frechet_never_exceeds_dtwd() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let dist = DistanceTable::symbol_distance(&ab);
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..200 {
        let x = random_seq(&ab, &mut rng, 9);
        let y = random_seq(&ab, &mut rng, 9);
        if x.is_empty() || y.is_empty() {
            continue;
        }
        assert!(frechet(&x, &y, &dist).unwrap() <= dtwd(&x, &y, &dist).unwrap());
    }
}

#[test]
fn dtwd_requires_covering_table() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let other = Alphabet::of_chars("xy").unwrap();
    let dist = DistanceTable::symbol_distance(&other);
    let x = seq(&ab, "ab");
    assert!(matches!(dtwd(&x, &x, &dist), Err(SolverError::TableMismatch)));
    let empty = Sequence::empty(Arc::clone(&ab));
    assert!(matches!(
        dtwd(&empty, &x, &DistanceTable::symbol_distance(&ab)),
        Err(SolverError::EmptySequence)
    ));
}

#[test]
fn local_k_lcs_examples() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let s = seq(&ab, "aaabbb");
    let t = seq(&ab, "bbbaaa");
    assert_eq!(local_k_lcs_bruteforce(&[&s, &t], 3).unwrap(), 3);
    assert_eq!(local_k_lcs(&[&s, &t], 3).unwrap(), 3);

    // Full-length windows degenerate to plain LCS.
    assert_eq!(local_k_lcs(&[&s, &t], 6).unwrap(), lcs(&s, &t).unwrap());

    // No common symbols used.
    let u = seq(&ab, "aaaa");
    let v = seq(&ab, "bbbb");
    assert_eq!(local_k_lcs(&[&u, &v], 2).unwrap(), 0);

    assert!(matches!(
        local_k_lcs(&[&s, &u], 5),
        Err(SolverError::WindowTooLong { .. })
    ));
}

#[test]
fn local_k_lcs_matches_naive_sweep() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..60 {
        let len = rng.gen_range(4..=12);
        let s = Sequence::new(
            Arc::clone(&ab),
            (0..len).map(|_| SymbolId(rng.gen_range(0..3))).collect(),
        )
        .unwrap();
        let t = Sequence::new(
            Arc::clone(&ab),
            (0..len).map(|_| SymbolId(rng.gen_range(0..3))).collect(),
        )
        .unwrap();
        let window = rng.gen_range(1..=len);
        assert_eq!(
            local_k_lcs(&[&s, &t], window).unwrap(),
            local_k_lcs_bruteforce(&[&s, &t], window).unwrap()
        );
    }
}

#[test]
fn mov_bruteforce_examples() {
    let one = BitVector::parse("1").unwrap();
    assert_eq!(
        mov_bruteforce(&[one.clone()], &[one.clone()], 0).unwrap(),
        None
    );

    let a = BitVector::parse("10").unwrap();
    let b = BitVector::parse("01").unwrap();
    assert_eq!(mov_bruteforce(&[a], &[b], 0).unwrap(), Some((0, 0)));
}

#[test]
fn mov_bruteforce_agrees_with_recount() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..100 {
        let gen_list = |rng: &mut ChaCha8Rng| -> Vec<BitVector> {
            (0..6)
                .map(|_| BitVector::new((0..4).map(|_| rng.gen_range(0..=1)).collect()).unwrap())
                .collect()
        };
        let a = gen_list(&mut rng);
        let b = gen_list(&mut rng);
        let r = rng.gen_range(0..=4u64);
        let found = mov_bruteforce(&a, &b, r).unwrap();
        // Direct double-loop recount.
        let mut expected = None;
        'outer: for (i, va) in a.iter().enumerate() {
            for (j, vb) in b.iter().enumerate() {
                if inner_product(va, vb).unwrap() <= r {
                    expected = Some((i, j));
                    break 'outer;
                }
            }
        }
        assert_eq!(found, expected);
        assert_eq!(found.is_some(), min_inner(&a, &b).unwrap() <= r);
    }
}

#[test]
fn kmov_bruteforce_agrees_with_min_k_inner() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..60 {
        let lists: Vec<Vec<BitVector>> = (0..3)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        BitVector::new((0..3).map(|_| rng.gen_range(0..=1)).collect()).unwrap()
                    })
                    .collect()
            })
            .collect();
        let family = VectorFamily::new(lists).unwrap();
        let r = rng.gen_range(0..=3u64);
        let found = kmov_bruteforce(&family, r).unwrap();
        assert_eq!(found.is_some(), min_k_inner(&family).unwrap() <= r);
        if let Some(idx) = found {
            let tuple: Vec<&BitVector> =
                idx.iter().enumerate().map(|(t, &i)| &family.list(t)[i]).collect();
            assert!(is_far(&tuple, r).unwrap());
        }
    }
}

#[test]
fn bruteforce_guards_trip() {
    let ab = Alphabet::of_chars("a").unwrap();
    let long = Sequence::new(Arc::clone(&ab), vec![SymbolId(0); 15]).unwrap();
    assert!(matches!(
        lcs_bruteforce(&long, &long),
        Err(SolverError::BruteForceGuard { .. })
    ));
    let dist = DistanceTable::symbol_distance(&ab);
    let long9 = Sequence::new(Arc::clone(&ab), vec![SymbolId(0); 9]).unwrap();
    assert!(matches!(
        dtwd_bruteforce(&long9, &long9, &dist),
        Err(SolverError::BruteForceGuard { .. })
    ));
}

#[test]
fn empty_sequence_brute_cases() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let empty = Sequence::empty(Arc::clone(&ab));
    let t = seq(&ab, "abab");
    assert_eq!(lcs_bruteforce(&empty, &t).unwrap(), 0);
}

#[test]
fn witnesses_recompute_to_the_reported_score() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        let weights: Vec<i64> = (0..ab.len()).map(|_| rng.gen_range(1..=6)).collect();
        let w = WeightedAlphabet::new(Arc::clone(&ab), weights).unwrap();
        let s = random_seq(&ab, &mut rng, 10);
        let t = random_seq(&ab, &mut rng, 10);
        let res = wlcs_with_witness(&s, &t, &w).unwrap();
        match res.witness.unwrap() {
            Witness::Matching(m) => {
                assert_eq!(m.score(&[&s, &t], &w).unwrap(), res.score);
            }
            _ => panic!("expected a matching witness"),
        }

        let u = random_seq(&ab, &mut rng, 6);
        let res3 = k_wlcs_with_witness(&[&s, &t, &u], &w).unwrap();
        match res3.witness.unwrap() {
            Witness::Matching(m) => {
                assert_eq!(m.score(&[&s, &t, &u], &w).unwrap(), res3.score);
            }
            _ => panic!("expected a matching witness"),
        }
    }
}

#[test]
fn dtwd_traversal_witness_recomputes() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let dist = DistanceTable::symbol_distance(&ab);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let x = random_seq(&ab, &mut rng, 8);
        let y = random_seq(&ab, &mut rng, 8);
        if x.is_empty() || y.is_empty() {
            continue;
        }
        let (score, path) = dtwd_with_traversal(&x, &y, &dist).unwrap();
        assert_eq!(traversal_cost(&x, &y, &dist, &path).unwrap(), score);
        assert_eq!(path.first(), Some(&(0, 0)));
        assert_eq!(path.last(), Some(&(x.len() - 1, y.len() - 1)));
    }
}

#[test]
fn indel_identity_links_lcs_and_edit() {
    // |s| + |t| - 2 lcs(s,t) equals the insert/delete-only edit distance.
    let ab = Alphabet::of_chars("abcd").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let s = random_seq(&ab, &mut rng, 12);
        let t = random_seq(&ab, &mut rng, 12);
        let identity = s.len() as i64 + t.len() as i64 - 2 * lcs(&s, &t).unwrap();
        assert_eq!(indel_distance(&s, &t).unwrap(), identity);
    }
}

#[test]
fn edit_bounds() {
    let ab = Alphabet::of_chars("abcd").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let s = random_seq(&ab, &mut rng, 12);
        let t = random_seq(&ab, &mut rng, 12);
        let e = edit(&s, &t).unwrap();
        assert!(e >= (s.len() as i64 - t.len() as i64).abs());
        assert!(e <= s.len().max(t.len()) as i64);
    }
}
