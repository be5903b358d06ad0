use gapkit_core::*;

fn bv(bits: &str) -> BitVector {
    BitVector::parse(bits).unwrap()
}

#[test]
fn inner_product_counts_shared_one_positions() {
    assert_eq!(inner_product(&bv("101"), &bv("111")).unwrap(), 2);
    assert_eq!(inner_product(&bv("00"), &bv("11")).unwrap(), 0);
    assert_eq!(inner_product(&bv("1111"), &bv("1111")).unwrap(), 4);
}

#[test]
fn inner_product_rejects_dimension_mismatch() {
    let err = inner_product(&bv("10"), &bv("101")).unwrap_err();
    assert!(matches!(err, CoreError::DimensionMismatch { .. }));
}

#[test]
fn k_inner_product_examples() {
    let vs = [bv("11"), bv("10"), bv("11")];
    let refs: Vec<&BitVector> = vs.iter().collect();
    assert_eq!(k_inner_product(&refs).unwrap(), 1);

    let vs = [bv("0"), bv("1")];
    let refs: Vec<&BitVector> = vs.iter().collect();
    assert_eq!(k_inner_product(&refs).unwrap(), 0);
}

#[test]
fn k_inner_product_matches_inner_product_for_pairs() {
    // k = 2 reduces to the plain inner product on any input.
    for a_bits in 0..16u32 {
        for b_bits in 0..16u32 {
            let a = BitVector::new((0..4).map(|i| ((a_bits >> i) & 1) as u8).collect()).unwrap();
            let b = BitVector::new((0..4).map(|i| ((b_bits >> i) & 1) as u8).collect()).unwrap();
            assert_eq!(
                k_inner_product(&[&a, &b]).unwrap(),
                inner_product(&a, &b).unwrap()
            );
        }
    }
}

#[test]
fn is_far_thresholds() {
    assert!(is_far(&[&bv("10"), &bv("01")], 0).unwrap());
    assert!(!is_far(&[&bv("11"), &bv("11")], 1).unwrap());
    assert!(is_far(&[&bv("11"), &bv("10")], 1).unwrap());
}

#[test]
fn k_inner_product_of_copies_is_popcount() {
    for bits in ["1011", "0000", "1111", "010"] {
        let v = bv(bits);
        let refs = [&v, &v, &v];
        assert_eq!(k_inner_product(&refs).unwrap(), v.popcount());
    }
}

#[test]
fn alphabet_rejects_duplicates_and_empty_glyphs() {
    assert!(Alphabet::new(["a", "b", "a"]).is_err());
    assert!(Alphabet::new(["a", ""]).is_err());
}

#[test]
fn sequence_parse_and_render_round_trip() {
    let single = Alphabet::of_chars("0123456").unwrap();
    let s = Sequence::parse(&single, "5465").unwrap();
    assert_eq!(s.len(), 4);
    assert_eq!(s.render(), "5465");

    let multi = Alphabet::new(["a", "3_2", "3_3"]).unwrap();
    let s = Sequence::parse(&multi, "3_2 a 3_3").unwrap();
    assert_eq!(s.render(), "3_2 a 3_3");
}

#[test]
fn sequence_rejects_foreign_symbols() {
    let ab = Alphabet::of_chars("ab").unwrap();
    assert!(Sequence::new(std::sync::Arc::clone(&ab), vec![SymbolId(2)]).is_err());
    assert!(Sequence::parse(&ab, "abc").is_err());
}

#[test]
fn weighted_alphabet_requires_positive_weights() {
    let ab = Alphabet::of_chars("ab").unwrap();
    assert!(WeightedAlphabet::new(std::sync::Arc::clone(&ab), vec![1, 0]).is_err());
    assert!(WeightedAlphabet::new(std::sync::Arc::clone(&ab), vec![1, 1]).is_ok());
}

#[test]
fn sequence_weight_is_checked() {
    let ab = Alphabet::of_chars("a").unwrap();
    let w = WeightedAlphabet::new(std::sync::Arc::clone(&ab), vec![i64::MAX / 2]).unwrap();
    let s = Sequence::parse(&ab, "aaa").unwrap();
    assert!(matches!(w.sequence_weight(&s), Err(CoreError::Overflow { .. })));
}

#[test]
fn half_units_render_as_decimals() {
    assert_eq!(HalfUnits(0).to_string(), "0.0");
    assert_eq!(HalfUnits(1).to_string(), "0.5");
    assert_eq!(HalfUnits(3).to_string(), "1.5");
    assert_eq!(HalfUnits::from_whole(2).to_string(), "2.0");
}

#[test]
fn symbol_distance_table_is_symmetric_and_complete() {
    let ab = Alphabet::of_chars("abc").unwrap();
    let t = DistanceTable::symbol_distance(&ab);
    assert!(t.is_symmetric());
    assert_eq!(t.get_by_glyph("a", "a").unwrap(), HalfUnits::ZERO);
    assert_eq!(t.get_by_glyph("a", "b").unwrap(), HalfUnits::from_whole(1));
}

#[test]
fn matching_validates_monotonicity_and_symbol_equality() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let s = Sequence::parse(&ab, "abab").unwrap();
    let t = Sequence::parse(&ab, "ab").unwrap();

    let good = Matching::new(vec![vec![0, 0], vec![1, 1]]);
    assert!(good.validate(&[&s, &t]).is_ok());

    // Crossing pair.
    let crossing = Matching::new(vec![vec![1, 1], vec![2, 0]]);
    assert!(crossing.validate(&[&s, &t]).is_err());

    // Unequal symbols.
    let unequal = Matching::new(vec![vec![0, 1]]);
    assert!(unequal.validate(&[&s, &t]).is_err());

    let w = WeightedAlphabet::unit(std::sync::Arc::clone(&ab));
    assert_eq!(good.score(&[&s, &t], &w).unwrap(), 2);
}

#[test]
fn cnf_invariants() {
    assert!(CnfFormula::new(2, vec![vec![1, -2]]).is_ok());
    assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
    assert!(CnfFormula::new(1, vec![vec![]]).is_err());
    assert!(CnfFormula::new(1, vec![vec![0]]).is_err());
}

#[test]
fn vector_family_shape_checks() {
    let a = vec![bv("10"), bv("01")];
    let b = vec![bv("11"), bv("00")];
    let fam = VectorFamily::pair(a.clone(), b).unwrap();
    assert_eq!(fam.k(), 2);
    assert_eq!(fam.n(), 2);
    assert_eq!(fam.dim(), 2);

    assert!(VectorFamily::pair(a.clone(), vec![bv("11")]).is_err());
    assert!(VectorFamily::pair(a, vec![bv("111"), bv("000")]).is_err());
}
