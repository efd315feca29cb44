use cablecalc::atlas::{classify, mountain_range, transverse};
use cablecalc::{parse, Shape, Utp, Width};
use proptest::prelude::*;

#[test]
fn iterated_negative_cable() {
    let c = classify(&parse("T(-5,2).cable(-23,2)").unwrap()).unwrap();
    assert_eq!(c.tb_bar, -46);
    assert_eq!(c.width, Width::exact_integer(-46));
    assert_eq!(c.utp, Utp::Yes);
    assert_eq!(c.peaks().unwrap(), &[-9, -7, -5, -3, -1, 1, 3, 5, 7, 9][..]);
    let c = classify(&parse("T(-5,2).cable(-19,2)").unwrap()).unwrap();
    assert_eq!(c.tb_bar, -39);
    assert_eq!(c.utp, Utp::Unknown);
}

#[test]
fn sums_with_the_unknot_are_identity() {
    for e in ["T(-9,4)", "T(2,3)", "T(-5,2).cable(-21,2)"] {
        let plain = classify(&parse(e).unwrap()).unwrap();
        let summed = classify(&parse(&format!("({e} # U)")).unwrap()).unwrap();
        assert_eq!(plain.tb_bar, summed.tb_bar, "{e}");
        assert_eq!(plain.peaks(), summed.peaks(), "{e}");
    }
}

#[test]
fn kprime_range_rows() {
    let c = classify(&parse("T(2,3).cable(2,3)").unwrap()).unwrap();
    assert!(matches!(c.shape, Shape::Branched(_)));
    let m = mountain_range(&c, 2).unwrap();
    assert_eq!(m.row(6), [-1, 1]);
    assert_eq!(m.row(5), [-2, 0, 2]);
    assert_eq!((m.mult(-2, 5), m.mult(0, 5), m.mult(2, 5)), (2, 1, 2));
    assert_eq!(m.mult(0, 3), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn negative_torus_knots_are_utp(q in 2i64..9, extra in 1i64..40) {
        let p = -(q + extra);
        prop_assume!(num_integer::Integer::gcd(&p, &q) == 1);
        let c = classify(&parse(&format!("T({p},{q})")).unwrap()).unwrap();
        prop_assert_eq!(c.utp.clone(), Utp::Yes);
        prop_assert_eq!(c.tb_bar, p * q);
        c.check().unwrap();
        let m = mountain_range(&c, c.tb_bar - 6).unwrap();
        for (r, tb, mult) in m.cells() {
            prop_assert_eq!(mult, 1);
            prop_assert_eq!((r + tb).rem_euclid(2), 1);
        }
    }

    #[test]
    fn simple_transverse_classes_one_per_sl(q in 2i64..6, extra in 1i64..20, depth in 0i64..8) {
        let p = -(q + extra);
        prop_assume!(num_integer::Integer::gcd(&p, &q) == 1);
        let c = classify(&parse(&format!("T({p},{q})")).unwrap()).unwrap();
        let t = transverse(&c, c.tb_bar - depth).unwrap();
        prop_assert!(t.counts.values().all(|&n| n == 1));
    }
}
