//! Slopes of curves on a torus and Farey-graph combinatorics.
//!
//! A slope is an element of `Q ∪ {∞}` kept in canonical form. A primitive
//! integer vector `(x, y)` in torus coordinates has slope `y/x`, so the
//! `(p, q)`-curve has slope `q/p` and the longitude `(0, 1)` has slope `∞`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced slope `num/den` with `den >= 0`; `∞` is stored as `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    pub fn infinity() -> Self {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// Slope of the vector `(x, y)`, i.e. the ratio `y/x`.
    pub fn of_vector(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        reduce(y, x)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// The primitive vector `(den, num)` representing this slope.
    pub fn to_vector(&self) -> (BigInt, BigInt) {
        (self.den.clone(), self.num.clone())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRational::new_raw(self.num.clone(), self.den.clone()))
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        Slope {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }

    pub fn mediant(&self, other: &Slope) -> Result<Slope> {
        reduce(&self.num + &other.num, &self.den + &other.den)
    }

    /// Ordering key used to break ties between equally short Farey paths.
    fn tie_key(&self) -> (&BigInt, &BigInt) {
        (&self.den, &self.num)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q`, a bare integer `p`, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" || t == "1/0" {
            return Ok(Slope::infinity());
        }
        let bad = || Error::BadSlope(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        reduce(p, q).map_err(|_| bad())
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Canonical slope for the ratio `p/q`; `(k, 0)` with `k != 0` becomes `∞`.
pub fn reduce(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
    let (p, q) = (p.into(), q.into());
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroVector);
    }
    if q.is_zero() {
        return Ok(Slope::infinity());
    }
    let g = p.gcd(&q);
    let (mut num, mut den) = (p / &g, q / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    Ok(Slope { num, den })
}

/// `s • s' = r t' - t r'` for `s = r/t`, `s' = r'/t'`. Its absolute value is
/// the geometric intersection number of the two curves.
pub fn det(s: &Slope, t: &Slope) -> BigInt {
    &s.num * &t.den - &s.den * &t.num
}

pub fn is_farey_neighbor(s: &Slope, t: &Slope) -> Result<bool> {
    if s == t {
        return Err(Error::EqualSlopes);
    }
    Ok(det(s, t).abs().is_one())
}

/// A coordinate change of the torus: an integer matrix with determinant ±1,
/// acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl TorusMatrix {
    /// The matrix `(a b; c d)`.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = TorusMatrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        TorusMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn inverse(&self) -> Self {
        // det is ±1, so the adjugate divided by det is integral.
        let det = self.determinant();
        TorusMatrix {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        }
    }

    pub fn compose(&self, rhs: &TorusMatrix) -> Self {
        TorusMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn apply(&self, v: (&BigInt, &BigInt)) -> Result<(BigInt, BigInt)> {
        let (x, y) = v;
        if !x.gcd(y).is_one() {
            return Err(Error::NotPrimitive(x.to_string(), y.to_string()));
        }
        Ok((&self.a * x + &self.b * y, &self.c * x + &self.d * y))
    }

    /// The induced map on slopes.
    pub fn apply_slope(&self, s: &Slope) -> Slope {
        let x = &self.a * &s.den + &self.b * &s.num;
        let y = &self.c * &s.den + &self.d * &s.num;
        // A unimodular image of a primitive vector is primitive and nonzero.
        reduce(y, x).expect("unimodular image of a nonzero vector")
    }
}

/// Convenience wrapper over [`TorusMatrix::apply`] for machine integers.
pub fn apply_matrix(m: &TorusMatrix, v: (i64, i64)) -> Result<(BigInt, BigInt)> {
    m.apply((&BigInt::from(v.0), &BigInt::from(v.1)))
}

/// The unique `n` with `-n-1 < p/q < -n`, for `q >= 1` and `p/q` not an integer.
pub fn floor_gap(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<BigInt> {
    let (p, q) = (p.into(), q.into());
    if !q.is_positive() {
        return Err(Error::NonPositiveDenominator(q.to_string()));
    }
    if p.is_multiple_of(&q) {
        return Err(Error::IntegerRatio(format!("{p}/{q}")));
    }
    // -p/q lies strictly between n and n+1.
    Ok((-p).div_floor(&q))
}

/// A shortest path in the Farey graph from `s` to `t`.
///
/// Geodesics stay inside the ladder of Farey triangles separating the two
/// endpoints, so after moving `s` to `∞` the search runs over the
/// Stern-Brocot descent toward the image of `t`. Among equally short paths,
/// each step prefers the slope with the smaller denominator, then the
/// smaller numerator (compared in the original coordinates).
pub fn farey_path(s: &Slope, t: &Slope) -> Vec<Slope> {
    if s == t {
        return vec![s.clone()];
    }
    if det(s, t).abs().is_one() {
        return vec![s.clone(), t.clone()];
    }
    let to_inf = matrix_sending_to_infinity(s);
    let back = to_inf.inverse();
    let target = to_inf.apply_slope(t);
    let ladder = Ladder::around(&target);

    // Distances to the target over the ladder graph.
    let start = 0usize;
    let goal = ladder.goal;
    let mut dist = vec![usize::MAX; ladder.vertices.len()];
    let mut queue = VecDeque::from([goal]);
    dist[goal] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in &ladder.adjacent[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut path = vec![s.clone()];
    let mut here = start;
    while here != goal {
        let (next, original) = ladder.adjacent[here]
            .iter()
            .copied()
            .filter(|&w| dist[w] + 1 == dist[here])
            .map(|w| (w, back.apply_slope(&ladder.vertices[w])))
            .min_by(|(_, a), (_, b)| a.tie_key().cmp(&b.tie_key()))
            .expect("ladder is connected");
        path.push(original);
        here = next;
    }
    path
}

/// Number of edges on a shortest Farey path.
pub fn farey_distance(s: &Slope, t: &Slope) -> usize {
    farey_path(s, t).len() - 1
}

fn matrix_sending_to_infinity(s: &Slope) -> TorusMatrix {
    // s is the vector (t, r); pick (u, v) with u t + v r = 1 so that
    // (-r t; u v) sends it to (0, 1).
    let (t, r) = s.to_vector();
    let e = t.extended_gcd(&r);
    debug_assert!(e.gcd.is_one());
    TorusMatrix {
        a: -r.clone(),
        b: t.clone(),
        c: e.x,
        d: e.y,
    }
}

/// The triangulated strip of Farey triangles between `∞` and a finite slope.
/// Vertex 0 is `∞`; `goal` is the target.
struct Ladder {
    vertices: Vec<Slope>,
    adjacent: Vec<Vec<usize>>,
    goal: usize,
}

impl Ladder {
    fn around(target: &Slope) -> Ladder {
        let mut ladder = Ladder {
            vertices: Vec::new(),
            adjacent: Vec::new(),
            goal: 0,
        };
        let inf = ladder.vertex(Slope::infinity());
        let lo_int = target.num.div_floor(&target.den);
        let mut lo = Slope::integer(lo_int.clone());
        let mut hi = Slope::integer(lo_int + 1);
        let (mut lo_i, mut hi_i) = (ladder.vertex(lo.clone()), ladder.vertex(hi.clone()));
        ladder.edge(inf, lo_i);
        ladder.edge(inf, hi_i);
        ladder.edge(lo_i, hi_i);
        if &lo == target {
            ladder.goal = lo_i;
            return ladder;
        }
        loop {
            // neighbours, so the mediant is already reduced
            let m = Slope {
                num: &lo.num + &hi.num,
                den: &lo.den + &hi.den,
            };
            let m_i = ladder.vertex(m.clone());
            ladder.edge(lo_i, m_i);
            ladder.edge(m_i, hi_i);
            if &m == target {
                ladder.goal = m_i;
                return ladder;
            }
            if &target.num * &m.den < &m.num * &target.den {
                hi = m;
                hi_i = m_i;
            } else {
                lo = m;
                lo_i = m_i;
            }
        }
    }

    fn vertex(&mut self, s: Slope) -> usize {
        self.vertices.push(s);
        self.adjacent.push(Vec::new());
        self.vertices.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.adjacent[a].push(b);
        self.adjacent[b].push(a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(2, 4).unwrap(), sl("1/2"));
        assert_eq!(reduce(0, 5).unwrap(), sl("0/1"));
        assert_eq!(reduce(-3, -16).unwrap(), sl("3/16"));
        assert_eq!(reduce(-7, 0).unwrap(), Slope::infinity());
        assert_eq!(reduce(0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&sl("0"), &sl("1")), BigInt::from(-1));
        let a = Slope::of_vector(-16, 3).unwrap();
        let b = Slope::of_vector(-11, 2).unwrap();
        assert_eq!(det(&a, &b).abs(), BigInt::one());
        assert_eq!(det(&sl("-1/5"), &sl("-2/11")).abs(), BigInt::one());
    }

    #[test]
    fn neighbor_examples() {
        assert!(is_farey_neighbor(&sl("-1/5"), &sl("-3/16")).unwrap());
        assert!(is_farey_neighbor(&sl("-3/16"), &sl("-2/11")).unwrap());
        assert!(!is_farey_neighbor(&sl("-3/16"), &sl("-1/6")).unwrap());
        assert!(is_farey_neighbor(&sl("inf"), &sl("-4")).unwrap());
        assert_eq!(
            is_farey_neighbor(&sl("1/2"), &sl("2/4")),
            Err(Error::EqualSlopes)
        );
    }

    #[test]
    fn path_examples() {
        let s = sl("-3/16");
        assert_eq!(farey_path(&s, &s), vec![s.clone()]);
        assert_eq!(farey_path(&s, &sl("-2/11")).len(), 2);
        // -1/5 and -2/11 both work; the smaller denominator wins
        assert_eq!(farey_path(&s, &sl("-1/6")), vec![s, sl("-1/5"), sl("-1/6")]);
        assert_eq!(farey_distance(&sl("inf"), &sl("1/2")), 2);
        assert_eq!(farey_distance(&sl("1/2"), &sl("inf")), 2);
    }

    #[test]
    fn matrix_examples() {
        let a1 = TorusMatrix::new(3, -2, 2, -1).unwrap();
        for m in [1i64, 3, 7] {
            let (x, y) = apply_matrix(&a1, (-m, 1)).unwrap();
            assert_eq!((x, y), (BigInt::from(-3 * m - 2), BigInt::from(-2 * m - 1)));
        }
        let f2 = TorusMatrix::new(-2, 3, -1, 2).unwrap();
        for m in [1i64, 4] {
            let (x, y) = apply_matrix(&f2, (-m, 1)).unwrap();
            assert_eq!((x, y), (BigInt::from(2 * m + 3), BigInt::from(m + 2)));
        }
        let id = TorusMatrix::identity();
        assert_eq!(
            apply_matrix(&id, (5, -3)).unwrap(),
            (BigInt::from(5), BigInt::from(-3))
        );
        assert!(TorusMatrix::new(2, 0, 0, 1).is_err());
        assert!(apply_matrix(&id, (2, 4)).is_err());
    }

    #[test]
    fn floor_gap_examples() {
        assert_eq!(floor_gap(-9, 4).unwrap(), BigInt::from(2));
        assert_eq!(floor_gap(-21, 2).unwrap(), BigInt::from(10));
        assert_eq!(floor_gap(-2, 3).unwrap(), BigInt::from(0));
        assert!(matches!(floor_gap(-6, 3), Err(Error::IntegerRatio(_))));
        assert!(floor_gap(3, 0).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(sl("-6/4").to_string(), "-3/2");
        assert_eq!(sl("inf").to_string(), "inf");
        assert_eq!(sl(" 7 ").to_string(), "7/1");
        assert!("x/2".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
        assert_eq!(serde_json::to_string(&sl("-2/11")).unwrap(), "\"-2/11\"");
    }

    fn any_slope(max: i64) -> impl Strategy<Value = Slope> {
        prop_oneof![
            1 => Just(Slope::infinity()),
            20 => (-max..=max, 1..=max).prop_map(|(p, q)| reduce(p, q).unwrap()),
        ]
    }

    fn any_matrix() -> impl Strategy<Value = TorusMatrix> {
        // Products of elementary generators stay unimodular.
        proptest::collection::vec(0u8..4, 0..8).prop_map(|ops| {
            let t = TorusMatrix::new(1, 1, 0, 1).unwrap();
            let u = TorusMatrix::new(1, 0, 1, 1).unwrap();
            let s = TorusMatrix::new(0, -1, 1, 0).unwrap();
            let r = TorusMatrix::new(1, 0, 0, -1).unwrap();
            ops.into_iter().fold(TorusMatrix::identity(), |m, op| {
                m.compose(match op {
                    0 => &t,
                    1 => &u,
                    2 => &s,
                    _ => &r,
                })
            })
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(p in -1000i64..1000, q in -1000i64..1000) {
            prop_assume!(p != 0 || q != 0);
            let s = reduce(p, q).unwrap();
            let again = reduce(s.num().clone(), s.den().clone()).unwrap();
            prop_assert_eq!(&again, &s);
            prop_assert!(s.num().gcd(s.den()).is_one());
            prop_assert!(!s.den().is_negative());
            if s.den().is_zero() { prop_assert!(s.num().is_one()); }
        }

        #[test]
        fn det_is_antisymmetric(a in any_slope(60), b in any_slope(60)) {
            prop_assert_eq!(det(&a, &b), -det(&b, &a));
        }

        #[test]
        fn det_is_unimodular_invariant(a in any_slope(40), b in any_slope(40), m in any_matrix()) {
            let (ma, mb) = (m.apply_slope(&a), m.apply_slope(&b));
            prop_assert_eq!(det(&ma, &mb).abs(), det(&a, &b).abs());
        }

        #[test]
        fn inverse_undoes(a in any_slope(40), m in any_matrix()) {
            prop_assert_eq!(m.inverse().apply_slope(&m.apply_slope(&a)), a);
        }

        #[test]
        fn floor_gap_brackets(p in -5000i64..5000, q in 2i64..200) {
            prop_assume!(p % q != 0);
            let n = floor_gap(p, q).unwrap();
            let (p, q) = (BigInt::from(p), BigInt::from(q));
            // -n-1 < p/q < -n  <=>  (-n-1) q < p < -n q
            prop_assert!((-&n - 1) * &q < p);
            prop_assert!(p < -&n * &q);
        }

        #[test]
        fn path_is_a_farey_walk(a in any_slope(30), b in any_slope(30)) {
            let path = farey_path(&a, &b);
            prop_assert_eq!(path.first(), Some(&a));
            prop_assert_eq!(path.last(), Some(&b));
            for w in path.windows(2) {
                prop_assert!(is_farey_neighbor(&w[0], &w[1]).unwrap());
            }
        }
    }

    #[test]
    fn mediants_of_neighbors_are_neighbors() {
        let mut pairs = 0;
        for b in 1..=50i64 {
            for a in -50..=50i64 {
                for d in 1..=50i64 {
                    // c/d with a d - b c = ±1, i.e. c = (a d ∓ 1)/b
                    for sign in [-1i64, 1] {
                        let num = a * d - sign;
                        if num % b != 0 {
                            continue;
                        }
                        let (s, t) = (reduce(a, b).unwrap(), reduce(num / b, d).unwrap());
                        if s.den() != &BigInt::from(b) || s == t || !det(&s, &t).abs().is_one() {
                            continue;
                        }
                        let m = s.mediant(&t).unwrap();
                        assert!(is_farey_neighbor(&s, &m).unwrap());
                        assert!(is_farey_neighbor(&m, &t).unwrap());
                        pairs += 1;
                    }
                }
            }
        }
        assert!(pairs > 1000);
    }
}
