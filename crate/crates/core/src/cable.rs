//! Classification of cables of Legendrian simple knot types with the UTP.
//!
//! Above the contact width the cable's maximal tb drops by the intersection
//! number of the width slope with the cabling slope and its peaks are the
//! companion's peaks scaled by `q`. Below the width the cable again has the
//! UTP, `tb_bar = pq`, and two peaks `q·r ± s` appear for every class of the
//! companion at `tb = -n`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::atlas::{self, Classification, Known, PeakSource, Utp, Width};
use crate::error::{checked, Error, Hypothesis, Result};
use crate::framing::{width_defect, CableParams};

/// Routes a cable to the matching classification rule, or reports which hypothesis fails.
pub fn classify_cable(c: &Classification, cp: CableParams) -> Result<Classification> {
    if atlas::is_known(c, Known::Unknot) {
        return atlas::torus_knot(cp);
    }
    if atlas::is_known(c, Known::PositiveTorus(2, 3)) && (cp.p(), cp.q()) == (2, 3) {
        return Ok(atlas::mark_trefoil_cable(atlas::kprime_classification()));
    }
    let w = gate(c, cp)?;
    let ratio = cp.ratio();
    if ratio > *w {
        classify_positive_cable(c, cp)
    } else if ratio < *w {
        classify_negative_cable(c, cp)
    } else {
        Err(Error::not_covered(
            Hypothesis::SlopeEqualsWidth,
            format!("p/q = {ratio} equals the width"),
        ))
    }
}

/// Hypotheses shared by both cabling rules; returns the exact width.
fn gate(c: &Classification, cp: CableParams) -> Result<&BigRational> {
    let Some(w) = c.width.exact() else {
        return Err(Error::not_covered(
            Hypothesis::WidthNotExact,
            format!("width of the companion is only known to lie in {}", c.width),
        ));
    };
    if c.utp != Utp::Yes {
        return Err(Error::not_covered(
            Hypothesis::BaseNotUtp,
            format!(
                "companion UTP status is {}; cabling by {cp} is not classified",
                c.utp
            ),
        ));
    }
    if !c.is_simple() {
        return Err(Error::not_covered(
            Hypothesis::BaseNotSimple,
            "companion is not Legendrian simple",
        ));
    }
    Ok(w)
}

/// Cable with `p/q` above the width: `tb_bar = pq - |w • p/q|`, peaks `q·r`.
pub fn classify_positive_cable(c: &Classification, cp: CableParams) -> Result<Classification> {
    let w = gate(c, cp)?;
    if cp.ratio() <= *w {
        return Err(Error::not_covered(
            Hypothesis::SlopeNotAboveWidth,
            format!("p/q = {} is not greater than the width {w}", cp.ratio()),
        ));
    }
    let defect = width_defect(w, cp);
    let tb_bar = BigInt::from(cp.pq()?) - defect;
    let tb_bar = atlas::small(&tb_bar, "positive cable tb")?;
    let peaks = c
        .peaks()
        .expect("gate checked simplicity")
        .iter()
        .map(|&r| checked(cp.q().checked_mul(r), "positive cable peaks"))
        .collect::<Result<Vec<_>>>()?;
    Classification::simple(
        tb_bar,
        Width::bracket(tb_bar)?,
        Utp::Unknown,
        peaks,
        PeakSource::Derived,
    )
}

/// Cable with `p/q` below the width: UTP again, `tb_bar = width = pq`.
pub fn classify_negative_cable(c: &Classification, cp: CableParams) -> Result<Classification> {
    let w = gate(c, cp)?;
    if cp.ratio() >= *w {
        return Err(Error::not_covered(
            Hypothesis::SlopeNotBelowWidth,
            format!("p/q = {} is not less than the width {w}", cp.ratio()),
        ));
    }
    let mut out = atlas::negative_cable_formula(c, cp)?;
    out.peaks_source = c.peaks_source;
    Ok(out)
}
