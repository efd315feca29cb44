//! Framing conversions and the closed-form tb / rotation / relative Euler
//! class formulas for curves on the boundary of a solid torus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{checked, Error, Result};
use crate::slope::{self, Slope};

/// Cabling parameters: the `(p, q)`-cable winds `p` times around the
/// meridian and `q` times around the longitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CableParams {
    p: i64,
    q: i64,
}

impl CableParams {
    /// Parameters for raw framing arithmetic: `q >= 1`, `gcd(|p|, q) = 1`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidCable {
                p,
                q,
                reason: "q must be positive",
            });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidCable {
                p,
                q,
                reason: "p and q are not coprime",
            });
        }
        Ok(CableParams { p, q })
    }

    /// Parameters usable in a knot expression, which additionally need `q >= 2`.
    pub fn for_cabling(p: i64, q: i64) -> Result<Self> {
        let c = CableParams::new(p, q)?;
        if q < 2 {
            return Err(Error::InvalidCable {
                p,
                q,
                reason: "q must be at least 2",
            });
        }
        Ok(c)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `pq`, the framing difference between the two coordinate systems.
    pub fn pq(&self) -> Result<i64> {
        checked(self.p.checked_mul(self.q), "p*q")
    }

    /// The cabling ratio `p/q` compared against contact widths.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.p.into(), self.q.into())
    }

    /// Slope `q/p` of the cable curve in the companion's coordinates.
    pub fn curve_slope(&self) -> Slope {
        Slope::of_vector(self.p, self.q).expect("q >= 1")
    }
}

impl fmt::Display for CableParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Poincaré dual of a relative half-Euler class, as a vector in torus
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EulerVector(pub i64, pub i64);

impl std::ops::Neg for EulerVector {
    type Output = EulerVector;
    fn neg(self) -> EulerVector {
        EulerVector(-self.0, -self.1)
    }
}

/// Converts a twisting number relative to the companion's framing into tb:
/// the two framings differ by `pq`.
pub fn twist_to_tb(twist: i64, c: CableParams) -> Result<i64> {
    checked(twist.checked_add(c.pq()?), "twist_to_tb")
}

pub fn tb_to_twist(tb: i64, c: CableParams) -> Result<i64> {
    checked(tb.checked_sub(c.pq()?), "tb_to_twist")
}

/// tb of a Legendrian divide on a torus whose dividing slope is `q/p`.
pub fn tb_of_divide(c: CableParams) -> Result<i64> {
    c.pq()
}

/// tb of a Legendrian ruling curve of slope `q/p` on a convex torus with
/// dividing slope `gamma = q'/p'` (companion coordinates): `pq - |pq' - qp'|`.
pub fn tb_of_ruling(c: CableParams, gamma: &Slope) -> Result<i64> {
    let (p_prime, q_prime) = gamma.to_vector();
    let cross = (BigInt::from(c.p) * q_prime - BigInt::from(c.q) * p_prime).abs();
    if cross.is_zero() {
        return Err(Error::RulingIsDivide);
    }
    let tb = BigInt::from(c.pq()?) - cross;
    checked(tb.to_i64(), "tb_of_ruling")
}

/// Rotation number of a cable curve from the rotation numbers of a
/// meridian-disk boundary and a Seifert-surface boundary on the same torus.
pub fn rotation_of_cable(c: CableParams, r_meridian_disk: i64, r_seifert: i64) -> Result<i64> {
    let a = checked(c.p.checked_mul(r_meridian_disk), "rotation_of_cable")?;
    let b = checked(c.q.checked_mul(r_seifert), "rotation_of_cable")?;
    checked(a.checked_add(b), "rotation_of_cable")
}

/// The two possible relative half-Euler classes of a basic slice bounded by
/// tori with shortest vectors `front` and `back`: `±(back - front)`.
pub fn basic_slice_euler(
    front: (i64, i64),
    back: (i64, i64),
) -> Result<(EulerVector, EulerVector)> {
    for v in [front, back] {
        if v.0.gcd(&v.1) != 1 {
            return Err(Error::NotPrimitive(v.0.to_string(), v.1.to_string()));
        }
    }
    let det = i128::from(front.0) * i128::from(back.1) - i128::from(front.1) * i128::from(back.0);
    if det.abs() != 1 {
        return Err(Error::NotBasicSlice(det.to_string()));
    }
    let x = checked(back.0.checked_sub(front.0), "basic_slice_euler")?;
    let y = checked(back.1.checked_sub(front.1), "basic_slice_euler")?;
    let e = EulerVector(x, y);
    Ok((e, -e))
}

/// Exact sum of finite slopes read as rationals, returned in canonical form.
pub fn edge_rounding_sum(terms: &[Slope]) -> Result<Slope> {
    let mut total = BigRational::zero();
    for t in terms {
        total += t
            .to_rational()
            .ok_or_else(|| Error::InfiniteTerm(t.to_string()))?;
    }
    Ok(Slope::from_rational(&total))
}

/// Width `w` as the slope `w/1` (or `a/b`), the form fed into `det`.
pub(crate) fn width_as_slope(w: &BigRational) -> Slope {
    Slope::from_rational(w)
}

/// `|w • p/q|` for a contact width `w` and cabling ratio `p/q`.
pub(crate) fn width_defect(w: &BigRational, c: CableParams) -> BigInt {
    slope::det(
        &width_as_slope(w),
        &Slope::of_vector(c.q, c.p).expect("q >= 1"),
    )
    .abs()
}
