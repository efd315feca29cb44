//! The (2,3)-torus knot and its (2,3)-cable `K'`.
//!
//! The positive trefoil has a family of solid tori that cannot be thickened,
//! with boundary slopes `-(k+1)/(6k+5)` in the coordinates of either
//! exceptional fiber. Its (2,3)-cable is not Legendrian simple: its
//! classification is a stabilization presentation with two maximal
//! generators `K±` and two non-destabilizable generators `L±` one tb lower.

use num_bigint::BigInt;

use crate::error::{checked, Error, Result};
use crate::framing::edge_rounding_sum;
use crate::presentation::{
    Allowed, Generator, Identification, NonIdentification, Scope, StabPresentation, Stabilized,
    Word,
};
use crate::slope::{reduce, Slope};

/// tb of the maximal representatives `K±` of the cable; equal to its width.
pub const KPRIME_TB_BAR: i64 = 6;

/// Boundary slope `-(k+1)/(6k+5)` of the `k`-th non-thickenable solid torus.
pub fn non_thickenable_slope(k: i64) -> Result<Slope> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let k = BigInt::from(k);
    reduce(-(&k + 1u32), 6u32 * &k + 5u32)
}

/// `(m₁, m₂) = (2k+1, 3k+1)`: the tb-defects of the two exceptional fibers
/// for which `3m₁ + 2 = 2m₂ + 3 = 6k + 5`.
pub fn annulus_balance(k: i64) -> Result<(i64, i64)> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let m1 = checked(
        k.checked_mul(2).and_then(|v| v.checked_add(1)),
        "annulus_balance",
    )?;
    let m2 = checked(
        k.checked_mul(3).and_then(|v| v.checked_add(1)),
        "annulus_balance",
    )?;
    Ok((m1, m2))
}

/// The three dividing-slope contributions that are added after edge-rounding:
/// `-(2m₁+1)/(3m₁+2)`, `(m₂+2)/(2m₂+3)` and `-1/(6k+5)`.
pub fn edge_rounding_terms(k: i64) -> Result<[Slope; 3]> {
    let (m1, m2) = annulus_balance(k)?;
    let (m1, m2, k) = (BigInt::from(m1), BigInt::from(m2), BigInt::from(k));
    Ok([
        reduce(-(2u32 * &m1 + 1u32), 3u32 * &m1 + 2u32)?,
        reduce(&m2 + 2, 2 * &m2 + 3)?,
        reduce(-1, 6 * &k + 5)?,
    ])
}

/// Edge-rounded boundary slope for index `k`; equals [`non_thickenable_slope`].
pub fn rounded_boundary_slope(k: i64) -> Result<Slope> {
    edge_rounding_sum(&edge_rounding_terms(k)?)
}

/// The built-in presentation of `K'`, with the two rays through `(0, 3)`
/// kept distinct.
pub fn kprime_presentation() -> StabPresentation {
    kprime_presentation_with(true)
}

/// The presentation of `K'`. `rays_distinct` selects whether `S₊²(L₋)` and
/// `S₋²(L₊)` (both at `(0, 3)`) are asserted distinct or identified. The
/// identified variant contradicts the `S₊^k(L₋) ≠ S₊^k S₋(K₋)` family at
/// `k = 3`, so the closure engine rejects it.
pub fn kprime_presentation_with(rays_distinct: bool) -> StabPresentation {
    let g = |name: &str, tb, r| Generator {
        name: name.to_string(),
        tb,
        r,
        allowed: Allowed::Both,
    };
    let s = Stabilized::new;
    let mut identifications = vec![
        Identification {
            lhs: s("K-", 1, 0),
            rhs: s("K+", 0, 1),
        },
        Identification {
            lhs: s("L-", 0, 1),
            rhs: s("K-", 0, 2),
        },
        Identification {
            lhs: s("L+", 1, 0),
            rhs: s("K+", 2, 0),
        },
    ];
    let mut non_identifications = vec![
        NonIdentification {
            lhs: s("L-", 1, 0),
            rhs: s("K-", 1, 1),
            scope: Scope::ForAllK { step: Word::PLUS },
        },
        NonIdentification {
            lhs: s("L+", 0, 1),
            rhs: s("K+", 1, 1),
            scope: Scope::ForAllK { step: Word::MINUS },
        },
    ];
    if rays_distinct {
        non_identifications.push(NonIdentification {
            lhs: s("L-", 2, 0),
            rhs: s("L+", 0, 2),
            scope: Scope::Single,
        });
    } else {
        identifications.push(Identification {
            lhs: s("L-", 2, 0),
            rhs: s("L+", 0, 2),
        });
    }
    StabPresentation {
        generators: vec![g("K+", 6, 1), g("K-", 6, -1), g("L+", 5, 2), g("L-", 5, -2)],
        identifications,
        non_identifications,
    }
}

/// Number of Legendrian isotopy classes of `K'` at `(r, tb)`.
///
/// Every class is either on the branch generated by `K±` (one class per
/// reachable cell), or a pure positive stabilization of `L₋`, or a pure
/// negative stabilization of `L₊`. Any word mixing in the other sign falls
/// back onto the `K±` branch.
pub fn kprime_multiplicity(r: i64, tb: i64) -> u32 {
    if tb > KPRIME_TB_BAR {
        return 0;
    }
    let depth = KPRIME_TB_BAR - tb;
    let k_branch = (r - 1).abs() <= depth || (r + 1).abs() <= depth;
    if !k_branch || (r + tb) % 2 == 0 {
        return 0;
    }
    let below_l = 5 - tb;
    // S₊^a(L₋) sits at (-2 + a, 5 - a); S₋^b(L₊) at (2 - b, 5 - b).
    let on_l_minus_ray = below_l >= 0 && r == -2 + below_l;
    let on_l_plus_ray = below_l >= 0 && r == 2 - below_l;
    1 + u32::from(on_l_minus_ray) + u32::from(on_l_plus_ray)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{
        closure_multiplicities, stabilization_word_oracle, transverse_classes,
    };
    use crate::slope::{det, is_farey_neighbor};
    use num_integer::Integer;
    use num_traits::{One, Signed};

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn slope_family_examples() {
        assert_eq!(non_thickenable_slope(0).unwrap(), sl("-1/5"));
        assert_eq!(non_thickenable_slope(1).unwrap(), sl("-2/11"));
        assert_eq!(non_thickenable_slope(2).unwrap(), sl("-3/17"));
        assert_eq!(non_thickenable_slope(3).unwrap(), sl("-4/23"));
        assert_eq!(non_thickenable_slope(-1), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn balance_examples() {
        assert_eq!(annulus_balance(0).unwrap(), (1, 1));
        assert_eq!(annulus_balance(1).unwrap(), (3, 4));
        assert_eq!(annulus_balance(2).unwrap(), (5, 7));
        for k in 0..200 {
            let (m1, m2) = annulus_balance(k).unwrap();
            assert_eq!(3 * m1 + 2, 6 * k + 5);
            assert_eq!(2 * m2 + 3, 6 * k + 5);
        }
    }

    #[test]
    fn family_is_reduced_monotone_and_adjacent() {
        let minus_one_sixth = sl("-1/6").to_rational().unwrap();
        let minus_one_fifth = sl("-1/5").to_rational().unwrap();
        let mut prev = None;
        for k in 0..=1000i64 {
            let s = non_thickenable_slope(k).unwrap();
            assert!(BigInt::from(k + 1).gcd(&BigInt::from(6 * k + 5)).is_one());
            assert_eq!(s.den(), &BigInt::from(6 * k + 5));
            let q = s.to_rational().unwrap();
            assert!(minus_one_fifth <= q && q < minus_one_sixth);
            if let Some(p) = prev.replace(s.clone()) {
                assert!(p.to_rational().unwrap() < q);
                assert!(is_farey_neighbor(&p, &s).unwrap());
                assert!(det(&p, &s).abs().is_one());
            }
            assert_eq!(rounded_boundary_slope(k).unwrap(), s);
        }
    }

    #[test]
    fn presentation_generators() {
        let p = kprime_presentation();
        let pos = |n: &str| {
            let g = p.generator(n).unwrap();
            (g.tb, g.r)
        };
        assert_eq!(pos("K+"), (6, 1));
        assert_eq!(pos("K-"), (6, -1));
        assert_eq!(pos("L+"), (5, 2));
        assert_eq!(pos("L-"), (5, -2));
        assert_eq!(p.tb_bar(), Some(KPRIME_TB_BAR));
        p.validate().unwrap();
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(kprime_multiplicity(2, 5), 2);
        assert_eq!(kprime_multiplicity(-2, 5), 2);
        assert_eq!(kprime_multiplicity(0, 5), 1);
        assert_eq!(kprime_multiplicity(1, 4), 2);
        assert_eq!(kprime_multiplicity(-1, 4), 2);
        assert_eq!(kprime_multiplicity(3, 4), 1);
        assert_eq!(kprime_multiplicity(-3, 4), 1);
        assert_eq!(kprime_multiplicity(0, 3), 3);
        assert_eq!(kprime_multiplicity(1, 6), 1);
        assert_eq!(kprime_multiplicity(0, 6), 0);
        assert_eq!(kprime_multiplicity(1, 7), 0);
        assert_eq!(kprime_multiplicity(5, 5), 0);
    }

    #[test]
    fn multiplicity_symmetry_and_parity() {
        for tb in -20..=7 {
            for r in -30..=30 {
                let m = kprime_multiplicity(r, tb);
                assert_eq!(m, kprime_multiplicity(-r, tb));
                if m > 0 {
                    assert!((r + tb).rem_euclid(2) == 1);
                }
            }
        }
    }

    #[test]
    fn oracle_depth_zero() {
        let o = stabilization_word_oracle(&kprime_presentation(), 0).unwrap();
        let expect = [((-2, 5), 1), ((-1, 6), 1), ((1, 6), 1), ((2, 5), 1)];
        assert_eq!(o.cells.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn oracle_agrees_at_depth_three() {
        let o = stabilization_word_oracle(&kprime_presentation(), 3).unwrap();
        let mut compared = 0;
        for (&(r, tb), &m) in o.cells.iter().filter(|((_, tb), _)| *tb >= o.complete_from) {
            assert_eq!(m, kprime_multiplicity(r, tb), "cell ({r},{tb})");
            compared += 1;
        }
        assert_eq!(compared, 14);
    }

    #[test]
    fn identified_rays_contradict_the_k_family() {
        let err = closure_multiplicities(&kprime_presentation_with(false), -2).unwrap_err();
        assert!(matches!(err, Error::InconsistentPresentation(_)), "{err}");
    }

    #[test]
    fn transverse_counts() {
        let t = transverse_classes(&kprime_presentation(), -10).unwrap();
        assert_eq!(t.count(7), 1);
        assert_eq!(t.count(5), 1);
        assert_eq!(t.count(3), 2);
        assert_eq!(t.count(1), 1);
        assert_eq!(t.count(9), 0);
        assert!(t.counts.keys().all(|sl| sl.rem_euclid(2) == 1 && *sl <= 7));
    }
}
