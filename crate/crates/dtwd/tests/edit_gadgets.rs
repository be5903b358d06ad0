#![cfg(feature = "experimental")]

use gapkit_dtwd::edit_gadgets::*;

#[test]
fn coordinate_gadget_runs() {
    let p = RunParams::new(2, 4).unwrap();
    // 0^4 0^2 1^2 1^2 1^2 0^4 and friends.
    assert_eq!(edit_coord_gadget_1(0, p).render(), "0000001111110000");
    assert_eq!(edit_coord_gadget_1(1, p).render(), "0000000000110000");
    assert_eq!(edit_coord_gadget_2(0, p).render(), "0000000011110000");
    assert_eq!(edit_coord_gadget_2(1, p).render(), "0000111111110000");
}

#[test]
fn gadget_lengths_are_uniform() {
    for l0 in [1usize, 2, 3] {
        for l1 in [2usize, 4, 6] {
            let p = RunParams::new(l0, l1).unwrap();
            let expected = 2 * l1 + 4 * l0;
            for bit in 0..=1u8 {
                assert_eq!(edit_coord_gadget_1(bit, p).len(), expected);
                assert_eq!(edit_coord_gadget_2(bit, p).len(), expected);
            }
            let g = separator_g(p, 0, 1).unwrap();
            assert_eq!(g.len(), expected);
        }
    }
}

#[test]
fn separator_shifts_a_one_run_into_the_leading_zeros() {
    let p = RunParams::new(2, 8).unwrap();
    // r/d = 1/2 with l0 = 2: shift = 1 + 2 = 3.
    let g = separator_g(p, 1, 2).unwrap();
    assert!(g.render().starts_with("0111"));
    assert_eq!(g.len(), 2 * 8 + 4 * 2);
}

#[test]
fn parameter_guards() {
    assert!(RunParams::new(0, 4).is_err());
    assert!(RunParams::new(2, 3).is_err());
    let p = RunParams::new(3, 4).unwrap();
    assert!(separator_g(p, 1, 2).is_err()); // l0 not a multiple of d
    let p = RunParams::new(2, 2).unwrap();
    assert!(separator_g(p, 1, 1).is_err()); // shift exceeds l1/2
}
