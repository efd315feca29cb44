//! Knot-type expressions, classification records, the base cases and
//! mountain ranges.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cable;
use crate::error::{checked, Error, Hypothesis, Result};
use crate::framing::CableParams;
use crate::presentation::{self, Multiplicities, StabPresentation, TransverseClassification};
use crate::slope::floor_gap;
use crate::trefoil_cable;

/// A topological knot type built from the unknot by cabling and connected sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Cable(Box<KnotExpr>, CableParams),
    ConnSum(Box<KnotExpr>, Box<KnotExpr>),
}

impl KnotExpr {
    /// The `(p, q)`-torus knot, i.e. the `(p, q)`-cable of the unknot.
    pub fn torus(p: i64, q: i64) -> Result<KnotExpr> {
        KnotExpr::Unknot.cable(p, q)
    }

    pub fn cable(self, p: i64, q: i64) -> Result<KnotExpr> {
        Ok(KnotExpr::Cable(
            Box::new(self),
            CableParams::for_cabling(p, q)?,
        ))
    }

    pub fn sum(self, other: KnotExpr) -> KnotExpr {
        KnotExpr::ConnSum(Box::new(self), Box::new(other))
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("U"),
            KnotExpr::Cable(child, c) if **child == KnotExpr::Unknot => {
                write!(f, "T({},{})", c.p(), c.q())
            }
            KnotExpr::Cable(child, c) => write!(f, "{child}.cable({},{})", c.p(), c.q()),
            KnotExpr::ConnSum(a, b) => write!(f, "({a} # {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Utp {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Utp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Utp::Yes => "yes",
            Utp::No => "no",
            Utp::Unknown => "unknown",
        })
    }
}

/// Contact width: known exactly, or only bracketed by `[tb_bar, tb_bar + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Width {
    Exact(BigRational),
    Interval { lo: i64, hi: i64 },
}

impl Width {
    pub fn exact_integer(w: i64) -> Width {
        Width::Exact(BigRational::from_integer(w.into()))
    }

    pub fn bracket(tb_bar: i64) -> Result<Width> {
        Ok(Width::Interval {
            lo: tb_bar,
            hi: checked(tb_bar.checked_add(1), "width")?,
        })
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Width::Exact(w) => Some(w),
            Width::Interval { .. } => None,
        }
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Width::Exact(w) => write!(f, "{w}"),
            Width::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Legendrian simple: one class per cell under the peaks.
    Simple { peaks: Vec<i64> },
    /// Not Legendrian simple: generators and relations among stabilizations.
    Branched(StabPresentation),
}

/// Where the rotation numbers of the peaks come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeakSource {
    Derived,
    /// Single peak at `r = 0` taken from the torus-knot classification.
    AssumedTorusKnotClassification,
    /// Peaks of a connected sum as sums of the summands' peaks.
    AssumedSumAdditivity,
}

impl PeakSource {
    pub fn code(self) -> &'static str {
        match self {
            PeakSource::Derived => "derived",
            PeakSource::AssumedTorusKnotClassification => "assumed-torus-knot-classification",
            PeakSource::AssumedSumAdditivity => "assumed-sum-additivity",
        }
    }
}

/// Knot types that the cabling dispatcher treats specially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Known {
    Unknot,
    PositiveTorus(i64, i64),
    TrefoilCable,
}

/// What is known about the Legendrian realizations of one knot type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Classification {
    pub tb_bar: i64,
    pub width: Width,
    pub utp: Utp,
    pub shape: Shape,
    /// `(r + tb) mod 2`, shared by every Legendrian representative.
    pub parity: u8,
    pub peaks_source: PeakSource,
    pub(crate) known: Option<Known>,
}

impl Classification {
    /// A Legendrian simple record from its peak rotation numbers at `tb_bar`.
    pub fn simple(
        tb_bar: i64,
        width: Width,
        utp: Utp,
        peaks: impl IntoIterator<Item = i64>,
        peaks_source: PeakSource,
    ) -> Result<Classification> {
        let peaks: Vec<i64> = peaks
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let first = *peaks
            .first()
            .ok_or_else(|| Error::Internal("empty peak set".into()))?;
        let parity = (i128::from(first) + i128::from(tb_bar)).rem_euclid(2) as u8;
        let c = Classification {
            tb_bar,
            width,
            utp,
            shape: Shape::Simple { peaks },
            parity,
            peaks_source,
            known: None,
        };
        c.check()?;
        Ok(c)
    }

    fn with_known(mut self, known: Known) -> Self {
        self.known = Some(known);
        self
    }

    pub fn peaks(&self) -> Option<&[i64]> {
        match &self.shape {
            Shape::Simple { peaks } => Some(peaks),
            Shape::Branched(_) => None,
        }
    }

    pub fn presentation(&self) -> Option<&StabPresentation> {
        match &self.shape {
            Shape::Branched(p) => Some(p),
            Shape::Simple { .. } => None,
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self.shape, Shape::Simple { .. })
    }

    /// Verifies the record's structural invariants.
    pub fn check(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Internal(m.to_string()));
        if let Width::Exact(w) = &self.width {
            let tb = BigRational::from_integer(self.tb_bar.into());
            if *w < tb || *w > tb + BigRational::from_integer(1.into()) {
                return fail("width outside [tb_bar, tb_bar + 1]");
            }
        }
        if self.utp == Utp::Yes {
            let tb = BigRational::from_integer(self.tb_bar.into());
            if self.width.exact() != Some(&tb) {
                return fail("UTP requires width = tb_bar");
            }
        }
        match &self.shape {
            Shape::Simple { peaks } => {
                let set: BTreeSet<i64> = peaks.iter().copied().collect();
                if set.iter().any(|r| !set.contains(&-r)) {
                    return fail("peaks not symmetric under r -> -r");
                }
                if peaks.iter().any(|&r| {
                    (i128::from(r) + i128::from(self.tb_bar)).rem_euclid(2) as u8 != self.parity
                }) {
                    return fail("peaks do not share one parity");
                }
            }
            Shape::Branched(p) => {
                p.validate()?;
                if p.tb_bar() != Some(self.tb_bar) {
                    return fail("presentation tb does not match tb_bar");
                }
                for g in &p.generators {
                    if (i128::from(g.r) + i128::from(g.tb)).rem_euclid(2) as u8 != self.parity {
                        return fail("generators do not share one parity");
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unknot: `tb_bar = -1`, width 0, single peak at `r = 0`, not UTP.
pub fn unknot() -> Classification {
    Classification {
        tb_bar: -1,
        width: Width::Exact(BigRational::zero()),
        utp: Utp::No,
        shape: Shape::Simple { peaks: vec![0] },
        parity: 1,
        peaks_source: PeakSource::Derived,
        known: Some(Known::Unknot),
    }
}

/// Negative torus knot `(p, q)` with `p/q < -1`: `tb_bar = pq`, UTP, and the
/// peaks `q·r ± s` over the unknot's row at `tb = -n`, `s = -p - qn`.
pub fn base_negative_torus(p: i64, q: i64) -> Result<Classification> {
    let c = CableParams::for_cabling(p, q)?;
    if p >= 0 {
        return Err(Error::not_covered(
            Hypothesis::TorusParameters,
            format!("T({p},{q}) is not a negative torus knot"),
        ));
    }
    if -p < q {
        return Err(Error::not_covered(
            Hypothesis::NegativeTorusSlopeAboveMinusOne,
            format!("{p}/{q} lies in (-1, 0); the unknot has no tb = 0 row"),
        ));
    }
    negative_cable_formula(&unknot(), c)
}

/// Positive torus knot `(p, q)` with `q > p >= 2`: `tb_bar = pq - p - q`,
/// single peak at `r = 0`.
pub fn base_positive_torus(p: i64, q: i64) -> Result<Classification> {
    if !(q > p && p >= 2) {
        return Err(Error::not_covered(
            Hypothesis::TorusParameters,
            format!("T({p},{q}) needs q > p >= 2"),
        ));
    }
    let c = CableParams::for_cabling(p, q)?;
    let tb_bar = checked(
        c.pq()?.checked_sub(p).and_then(|v| v.checked_sub(q)),
        "base_positive_torus",
    )?;
    let trefoil = (p, q) == (2, 3);
    let (width, utp, source) = if trefoil {
        (Width::exact_integer(1), Utp::No, PeakSource::Derived)
    } else {
        (
            Width::bracket(tb_bar)?,
            Utp::Unknown,
            PeakSource::AssumedTorusKnotClassification,
        )
    };
    Ok(Classification::simple(tb_bar, width, utp, [0], source)?
        .with_known(Known::PositiveTorus(p, q)))
}

/// Connected sum of two Legendrian simple types.
pub fn connected_sum(a: &Classification, b: &Classification) -> Result<Classification> {
    if a.known == Some(Known::Unknot) {
        return Ok(b.clone());
    }
    if b.known == Some(Known::Unknot) {
        return Ok(a.clone());
    }
    let (Some(pa), Some(pb)) = (a.peaks(), b.peaks()) else {
        return Err(Error::not_covered(
            Hypothesis::BranchedSummand,
            "summand is not Legendrian simple",
        ));
    };
    let tb_bar = checked(
        a.tb_bar
            .checked_add(b.tb_bar)
            .and_then(|v| v.checked_add(1)),
        "connected_sum",
    )?;
    let mut peaks = BTreeSet::new();
    for &x in pa {
        for &y in pb {
            peaks.insert(checked(x.checked_add(y), "connected_sum")?);
        }
    }
    let (utp, width) = if a.utp == Utp::Yes && b.utp == Utp::Yes {
        (Utp::Yes, Width::exact_integer(tb_bar))
    } else {
        (Utp::Unknown, Width::bracket(tb_bar)?)
    };
    Classification::simple(tb_bar, width, utp, peaks, PeakSource::AssumedSumAdditivity)
}

/// Classification of `K'`, the (2,3)-cable of the (2,3)-torus knot.
pub fn kprime_classification() -> Classification {
    let pres = trefoil_cable::kprime_presentation();
    Classification {
        tb_bar: trefoil_cable::KPRIME_TB_BAR,
        width: Width::exact_integer(trefoil_cable::KPRIME_TB_BAR),
        // L± do not destabilize although tb(L±) < tb_bar.
        utp: Utp::No,
        shape: Shape::Branched(pres),
        parity: 1,
        peaks_source: PeakSource::Derived,
        known: Some(Known::TrefoilCable),
    }
}

pub fn classify(e: &KnotExpr) -> Result<Classification> {
    match e {
        KnotExpr::Unknot => Ok(unknot()),
        KnotExpr::Cable(child, c) => cable::classify_cable(&classify(child)?, *c),
        KnotExpr::ConnSum(a, b) => connected_sum(&classify(a)?, &classify(b)?),
    }
}

/// Cabling of the unknot: torus knots.
pub(crate) fn torus_knot(c: CableParams) -> Result<Classification> {
    let (p, q) = (c.p(), c.q());
    if p.abs() == 1 {
        return Ok(unknot());
    }
    if p > 0 {
        // T(p,q) and T(q,p) are the same knot type.
        let (a, b) = if p < q { (p, q) } else { (q, p) };
        base_positive_torus(a, b)
    } else {
        base_negative_torus(p, q)
    }
}

/// Peaks `{q·r ± s}` over the row of `base` at `tb = -n`.
pub(crate) fn negative_cable_formula(
    base: &Classification,
    c: CableParams,
) -> Result<Classification> {
    let (p, q) = (c.p(), c.q());
    let n = floor_gap(p, q)?;
    let n = checked(n.to_i64(), "floor_gap")?;
    let s = checked((-p).checked_sub(q * n), "negative cable remainder")?;
    if !(0 < s && s < q) {
        return Err(Error::Internal(format!("remainder {s} outside (0, {q})")));
    }
    let row = mountain_range(base, -n)?.row(-n);
    if row.is_empty() {
        return Err(Error::Internal(format!(
            "row tb = {} of the companion is empty",
            -n
        )));
    }
    let mut peaks = BTreeSet::new();
    for r in row {
        let qr = checked(q.checked_mul(r), "negative cable peaks")?;
        peaks.insert(checked(qr.checked_add(s), "negative cable peaks")?);
        peaks.insert(checked(qr.checked_sub(s), "negative cable peaks")?);
    }
    let tb_bar = c.pq()?;
    Classification::simple(
        tb_bar,
        Width::exact_integer(tb_bar),
        Utp::Yes,
        peaks,
        PeakSource::Derived,
    )
}

pub(crate) fn is_known(c: &Classification, k: Known) -> bool {
    c.known == Some(k)
}

pub(crate) fn mark_trefoil_cable(c: Classification) -> Classification {
    c.with_known(Known::TrefoilCable)
}

/// The `(r, tb)` image of a knot type's Legendrian classes, with
/// multiplicities, from `tb_bar` down to `floor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MountainRange {
    tb_bar: i64,
    floor: i64,
    kind: RangeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RangeKind {
    Simple { peaks: Vec<i64>, parity: u8 },
    Branched(Multiplicities),
}

impl MountainRange {
    pub fn tb_bar(&self) -> i64 {
        self.tb_bar
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Number of Legendrian classes at `(r, tb)`; zero outside `[floor, tb_bar]`.
    pub fn mult(&self, r: i64, tb: i64) -> u32 {
        if tb > self.tb_bar || tb < self.floor {
            return 0;
        }
        match &self.kind {
            RangeKind::Simple { peaks, parity } => {
                let drop = i128::from(self.tb_bar) - i128::from(tb);
                let matches_parity =
                    (i128::from(r) + i128::from(tb)).rem_euclid(2) as u8 == *parity;
                let under_peak = peaks
                    .iter()
                    .any(|&p| (i128::from(r) - i128::from(p)).abs() <= drop);
                u32::from(matches_parity && under_peak)
            }
            RangeKind::Branched(m) => m.get(&(r, tb)).copied().unwrap_or(0),
        }
    }

    /// Populated rotation numbers at one tb level, ascending.
    pub fn row(&self, tb: i64) -> Vec<i64> {
        match &self.kind {
            RangeKind::Simple { peaks, .. } => {
                if tb > self.tb_bar || tb < self.floor {
                    return Vec::new();
                }
                let drop = self.tb_bar - tb;
                let lo = peaks.first().copied().unwrap_or(0) - drop;
                let hi = peaks.last().copied().unwrap_or(0) + drop;
                (lo..=hi).filter(|&r| self.mult(r, tb) > 0).collect()
            }
            RangeKind::Branched(m) => m
                .range((i64::MIN, tb)..=(i64::MAX, tb))
                .filter(|(k, v)| k.1 == tb && **v > 0)
                .map(|(k, _)| k.0)
                .collect(),
        }
    }

    /// Populated cells sorted by descending tb, then ascending r.
    pub fn cells(&self) -> Vec<(i64, i64, u32)> {
        let mut out = Vec::new();
        let mut tb = self.tb_bar;
        while tb >= self.floor {
            for r in self.row(tb) {
                out.push((r, tb, self.mult(r, tb)));
            }
            tb -= 1;
        }
        out
    }
}

pub fn mountain_range(c: &Classification, floor: i64) -> Result<MountainRange> {
    if floor > c.tb_bar {
        return Err(Error::FloorAboveMax {
            floor,
            tb_bar: c.tb_bar,
        });
    }
    let kind = match &c.shape {
        Shape::Simple { peaks } => RangeKind::Simple {
            peaks: peaks.clone(),
            parity: c.parity,
        },
        Shape::Branched(p) => RangeKind::Branched(presentation::closure_multiplicities(p, floor)?),
    };
    Ok(MountainRange {
        tb_bar: c.tb_bar,
        floor,
        kind,
    })
}

/// Transverse classes (Legendrian classes modulo negative stabilization)
/// with at least one representative at `tb >= floor`.
pub fn transverse(c: &Classification, floor: i64) -> Result<TransverseClassification> {
    match &c.shape {
        Shape::Branched(p) => presentation::transverse_classes(p, floor),
        Shape::Simple { .. } => {
            // One class per cell; S₋ keeps tb - r fixed, and the region below
            // the peaks meets each such line in a single downward ray.
            let range = mountain_range(c, floor.min(c.tb_bar))?;
            let mut counts = std::collections::BTreeMap::new();
            for (r, tb, _) in range.cells() {
                counts.insert(tb - r, 1);
            }
            Ok(TransverseClassification { floor, counts })
        }
    }
}

/// Converts a `BigInt` known to be small into `i64`.
pub(crate) fn small(v: &BigInt, what: &'static str) -> Result<i64> {
    checked(v.to_i64(), what)
}
