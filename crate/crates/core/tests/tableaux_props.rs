mod common;

use common::{check_adt, shapes_16};
use proptest::prelude::*;
use springer_core::cupdiag::{CupDiagram, Parity};
use springer_core::tableaux::{
    big_psi, big_psi_inverse, c_to_d, d_to_c, enumerate_adt, enumerate_signed, enumerate_syt, psi, psi_inverse, Flavor,
};

#[test]
fn psi_is_a_bijection_preserving_parity_up_to_16() {
    for ((a, b), diagrams) in shapes_16() {
        let signed = enumerate_signed(*a, *b, Flavor::D).unwrap();
        let mut images: Vec<CupDiagram> = signed.iter().map(|t| big_psi(t).unwrap()).collect();
        for (t, d) in signed.iter().zip(&images) {
            assert_eq!(t.minus_count(), d.dots(), "{t} -> {d}");
        }
        images.sort_by_key(ToString::to_string);
        let mut all = diagrams.clone();
        all.sort_by_key(ToString::to_string);
        assert_eq!(images, all, "({a},{b})");
    }
}

#[test]
fn d_to_c_splits_by_parity_up_to_16() {
    for ((a, b), _) in shapes_16() {
        let mut c_all: Vec<String> =
            enumerate_signed(a - 1, b - 1, Flavor::C).unwrap().iter().map(ToString::to_string).collect();
        c_all.sort();
        for parity in [Parity::Even, Parity::Odd] {
            let want_odd = parity == Parity::Odd;
            let mut images: Vec<String> = enumerate_signed(*a, *b, Flavor::D)
                .unwrap()
                .iter()
                .filter(|t| (t.minus_count() % 2 == 1) == want_odd)
                .map(|t| {
                    let c = d_to_c(t).unwrap();
                    assert_eq!(c_to_d(&c, parity).unwrap(), *t);
                    c.to_string()
                })
                .collect();
            images.sort();
            assert_eq!(images, c_all, "({a},{b}) {parity:?}");
        }
    }
}

#[test]
fn every_enumerated_tableau_passes_the_independent_check() {
    for ((a, b), _) in shapes_16() {
        for t in enumerate_adt(*a, *b, Flavor::D).unwrap().iter().chain(&enumerate_signed(*a, *b, Flavor::D).unwrap()) {
            check_adt(t).unwrap_or_else(|e| panic!("{t}: {e}"));
        }
        for t in enumerate_adt(a - 1, b - 1, Flavor::C)
            .unwrap()
            .iter()
            .chain(&enumerate_signed(a - 1, b - 1, Flavor::C).unwrap())
        {
            check_adt(t).unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }
}

#[test]
fn psi_images_are_noncrossing_with_lower_row_opening_cups() {
    for n in 1..=12 {
        for b in 0..=n / 2 {
            for t in enumerate_syt(n - b, b) {
                let d = psi(&t);
                let lefts: Vec<usize> = d.cups().iter().map(|c| c.left).collect();
                let mut lower = t.bottom().to_vec();
                lower.sort_unstable();
                let mut l2 = lefts.clone();
                l2.sort_unstable();
                assert_eq!(lower, l2, "{d}");
                for x in d.cups() {
                    for y in d.cups() {
                        let crossing = x.left < y.left && y.left < x.right && x.right < y.right;
                        assert!(!crossing, "{d}");
                    }
                    assert!(d.rays().iter().all(|r| r.at < x.left || r.at > x.right), "{d}");
                }
                assert_eq!(psi_inverse(&d).unwrap(), t);
            }
        }
    }
}

fn any_diagram() -> impl Strategy<Value = CupDiagram> {
    (0..shapes_16().len()).prop_flat_map(|s| {
        let list = &shapes_16()[s].1;
        (0..list.len()).prop_map(move |i| shapes_16()[s].1[i].clone())
    })
}

proptest! {
    #[test]
    fn psi_round_trip(a in any_diagram()) {
        let t = big_psi_inverse(&a).unwrap();
        check_adt(&t).map_err(TestCaseError::fail)?;
        prop_assert!(t.is_signed());
        prop_assert_eq!(big_psi(&t).unwrap(), a.clone());
        prop_assert_eq!(t.shape(), a.d_shape());
    }

    #[test]
    fn forgetting_signs_matches_undecorated(a in any_diagram()) {
        let t = big_psi_inverse(&a).unwrap().forget_signs();
        let u = big_psi_inverse(&a.undecorated()).unwrap().forget_signs();
        prop_assert_eq!(t, u);
    }

    #[test]
    fn tableau_json_round_trip(a in any_diagram()) {
        let t = big_psi_inverse(&a).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: springer_core::tableaux::DominoTableau = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, t);
    }
}
