use gapkit_core::{Alphabet, BitVector, HalfUnits, Sequence, SymbolId};
use gapkit_dtwd::*;
use gapkit_solvers::{dtwd, edit, frechet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn bv(bits: &str) -> BitVector {
    BitVector::parse(bits).unwrap()
}

#[test]
fn pad_transform_layout() {
    let ab = Alphabet::of_chars("01").unwrap();
    let q = Sequence::parse(&ab, "01").unwrap();
    let (padded, pad) = padded_alphabet(&ab, "4").unwrap();
    let out = pad_transform(&q, &padded, pad, &PaddingVector::uniform(2, 1)).unwrap();
    assert_eq!(out.render(), "40414");

    let empty = Sequence::empty(std::sync::Arc::clone(&ab));
    let out = pad_transform(&empty, &padded, pad, &PaddingVector::uniform(0, 1)).unwrap();
    assert_eq!(out.render(), "4");

    // |output| = |Q| + sum of runs.
    let runs = PaddingVector(vec![2, 3, 1]);
    let out = pad_transform(&q, &padded, pad, &runs).unwrap();
    assert_eq!(out.len(), q.len() + 6);
}

#[test]
fn pad_transform_guards() {
    let ab = Alphabet::of_chars("01").unwrap();
    let q = Sequence::parse(&ab, "01").unwrap();
    assert!(matches!(
        padded_alphabet(&ab, "0"),
        Err(DtwdError::PaddingSymbolInUse { .. })
    ));
    let (padded, pad) = padded_alphabet(&ab, "4").unwrap();
    assert!(matches!(
        pad_transform(&q, &padded, pad, &PaddingVector(vec![1, 1])),
        Err(DtwdError::PaddingLengthMismatch { .. })
    ));
    assert!(matches!(
        pad_transform(&q, &padded, pad, &PaddingVector(vec![1, 0, 1])),
        Err(DtwdError::NonPositivePadding)
    ));
}

#[test]
fn edit_dtwd_inequality_examples() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let q1 = Sequence::parse(&ab, "ab").unwrap();
    let q2 = Sequence::parse(&ab, "ba").unwrap();
    let r1 = PaddingVector::uniform(2, 1);
    let r2 = PaddingVector::uniform(2, 1);
    assert!(verify_edit_dtwd_inequality(&q1, &q2, &r1, &r2, "4").unwrap());

    // Identical sequences: EDIT = 0 never exceeds any DTWD.
    assert!(verify_edit_dtwd_inequality(&q1, &q1, &r1, &r2, "4").unwrap());

    // The specific value for "ab"/"ba" with unit padding.
    let (padded, pad) = padded_alphabet(&ab, "4").unwrap();
    let p1 = pad_transform(&q1, &padded, pad, &r1).unwrap();
    let p2 = pad_transform(&q2, &padded, pad, &r2).unwrap();
    let dist = gapkit_core::DistanceTable::symbol_distance(&padded);
    let warp = dtwd(&p1, &p2, &dist).unwrap();
    assert_eq!(edit(&q1, &q2).unwrap(), 2);
    assert!(warp >= HalfUnits::from_whole(2));
}

#[test]
fn edit_dtwd_inequality_random_sweep() {
    let ab = Alphabet::of_chars("abcd").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..250 {
        let len1 = rng.gen_range(0..=12);
        let len2 = rng.gen_range(0..=12);
        let mk = |rng: &mut ChaCha8Rng, len: usize| {
            Sequence::new(
                std::sync::Arc::clone(&ab),
                (0..len).map(|_| SymbolId(rng.gen_range(0..4))).collect(),
            )
            .unwrap()
        };
        let q1 = mk(&mut rng, len1);
        let q2 = mk(&mut rng, len2);
        let r1 = PaddingVector((0..=len1).map(|_| rng.gen_range(1..=3)).collect());
        let r2 = PaddingVector((0..=len2).map(|_| rng.gen_range(1..=3)).collect());
        assert!(verify_edit_dtwd_inequality(&q1, &q2, &r1, &r2, "#").unwrap());
    }
}

#[test]
fn pointset_table_matches_the_zero_list() {
    let ps = build_frechet_pointsets();
    let zero = HalfUnits::ZERO;
    let one = HalfUnits::from_whole(1);

    // s2 and t2 are at distance 0 from everything on the other side.
    for q1 in pointsets::Q1_LABELS {
        assert_eq!(ps.get(q1, "s2"), zero);
        assert_eq!(ps.get(q1, "t2"), zero);
        assert_eq!(ps.get("s2", q1), zero);
    }
    // s1 is 0 against everything except t2*; t1 except s2*.
    for q2 in pointsets::Q2_LABELS {
        let expect_s1 = if q2 == "t2*" { one } else { zero };
        assert_eq!(ps.get("s1", q2), expect_s1);
        let expect_t1 = if q2 == "s2*" { one } else { zero };
        assert_eq!(ps.get("t1", q2), expect_t1);
    }
    assert_eq!(ps.get("r1", "r2"), zero);
    assert_eq!(ps.get("r1", "s2*"), one);

    // Coordinate pairs: zero iff equal parity and bit product 0.
    for p in 0..2u8 {
        for q in 0..2u8 {
            for x in 0..2u8 {
                for y in 0..2u8 {
                    let d = ps.get(&format!("c1_{x}_{p}"), &format!("c2_{y}_{q}"));
                    let expected = if p == q && x * y == 0 { zero } else { one };
                    assert_eq!(d, expected, "c1_{x}_{p} vs c2_{y}_{q}");
                }
            }
        }
    }
    assert_eq!(ps.get("c1_1_0", "c2_1_0"), one);
}

#[test]
fn frechet_gap_examples() {
    // Orthogonal pair present.
    let inst = build_frechet_instance(&[bv("01")], &[bv("10")]).unwrap();
    assert!(inst.has_orthogonal_pair);
    let cost = frechet(&inst.p1, &inst.p2, &inst.points.dist).unwrap();
    assert_eq!(cost, HalfUnits::ZERO);
    assert_eq!(cost, inst.expected_frechet);

    // No orthogonal pair.
    let inst = build_frechet_instance(&[bv("11")], &[bv("10")]).unwrap();
    assert!(!inst.has_orthogonal_pair);
    let cost = frechet(&inst.p1, &inst.p2, &inst.points.dist).unwrap();
    assert_eq!(cost, HalfUnits::from_whole(1));
    assert_eq!(cost, inst.expected_frechet);
}

#[test]
fn dtwd_shares_the_dichotomy() {
    let inst = build_frechet_instance(&[bv("01")], &[bv("10")]).unwrap();
    assert_eq!(dtwd_gap_check(&inst).unwrap(), HalfUnits::ZERO);

    let inst = build_frechet_instance(&[bv("11")], &[bv("10")]).unwrap();
    assert_eq!(dtwd_gap_check(&inst).unwrap(), HalfUnits::from_whole(1));
}

#[test]
fn random_instances_follow_the_gap() {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let d = rng.gen_range(1..=5);
        let mk = |rng: &mut ChaCha8Rng| -> Vec<BitVector> {
            (0..n)
                .map(|_| BitVector::new((0..d).map(|_| rng.gen_range(0..=1)).collect()).unwrap())
                .collect()
        };
        let a_list = mk(&mut rng);
        let b_list = mk(&mut rng);
        let inst = build_frechet_instance(&a_list, &b_list).unwrap();
        let fr = frechet(&inst.p1, &inst.p2, &inst.points.dist).unwrap();
        let warp = dtwd_gap_check(&inst).unwrap();
        assert_eq!(fr, inst.expected_frechet);
        assert_eq!(warp, inst.expected_dtwd);
        assert!(fr == HalfUnits::ZERO || fr == HalfUnits::from_whole(1));

        // Metric variant: same dichotomy shifted by 1/2.
        let metric = inst.metric_points().unwrap();
        let fr_metric = frechet(&inst.p1, &inst.p2, &metric.dist).unwrap();
        assert_eq!(fr_metric, inst.expected_metric_frechet());
        assert_eq!(fr_metric.0, fr.0 + 1);
    }
}

#[test]
fn metric_table_values_and_triangle() {
    let ps = build_frechet_pointsets();
    let metric = metricize(&ps).unwrap();
    assert_eq!(metric.get("s2", "r1"), HalfUnits(1)); // 0 + 1/2
    assert_eq!(metric.get("c1_1_0", "c2_1_0"), HalfUnits(3)); // 1 + 1/2
    assert_eq!(metric.get("s1", "r1"), HalfUnits::from_whole(1)); // within set
    metric.check_triangle().unwrap();
}

#[test]
fn instance_json_round_trips() {
    let inst = build_frechet_instance(&[bv("01"), bv("11")], &[bv("10")]).unwrap();
    let json = inst.to_json();
    let back = GadgetInstance::from_json(&json).unwrap();
    assert_eq!(back.p1, inst.p1);
    assert_eq!(back.p2, inst.p2);
    assert_eq!(back.expected_frechet, inst.expected_frechet);
    assert_eq!(back.to_json(), json);
}

use gapkit_dtwd::pointsets;
