//! Arithmetic classification of twisted torus links that are unknots or
//! unlinks.
//!
//! Everything in this module is plain integer arithmetic on the parameters
//! `(p, q, r, s)`: no braid is ever built and no polynomial evaluated. That
//! keeps the classifier independent of the braid and invariant machinery, so
//! the two can be played against each other in tests and scans.
//!
//! Knots (`gcd(p,q) = 1`) are matched against seven unknot families, links
//! (`gcd >= 2`) against three unlink families. Rejections come with the
//! first diagnostic that rules the link out: a positive twist, a block wider
//! than the torus braid, a nonzero predicted linking number, or a component
//! that is not an unknot.

use crate::links::{ComponentTuple, TwistedTorusParams};
use num_integer::Integer;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("link has {components} components; unknot classification needs a knot")]
    NotAKnot { components: i64 },
    #[error("parameters give a knot; unlink classification needs at least 2 components")]
    NotALink,
    #[error("expected a 2-component link, got {components} components")]
    NotTwoComponents { components: i64 },
    #[error("parameters ({p},{q},{r},{s}) are outside the classifiable domain")]
    OutOfDomain { p: i64, q: i64, r: i64, s: i64 },
}

/// The known families of twisted torus knots that are unknots. `TorusUnknot`
/// covers the degenerate case of a block meeting at most one strand, where
/// the knot is a plain `(p,q)` torus knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknotFamily {
    /// `(n+1, n, n+1, -1)`, `n >= 1`.
    L1 { n: i64 },
    /// `(n+1, n, n, -1)`, `n >= 2`.
    L2 { n: i64 },
    /// `(mn+1, n, n, -m)` or `(mn-1, n, n, -m)`, `m, n >= 2`.
    L3 { m: i64, n: i64, plus: bool },
    /// `(n, 1, 2, -1)`, `n >= 3`.
    L4 { n: i64 },
    /// `(4n+1, n, 2n, -1)` or `(4n-1, n, 2n, -1)`, `n >= 2`.
    L5 { n: i64, plus: bool },
    /// `(n+1, n-1, n, -1)`, even `n >= 4`.
    L6 { n: i64 },
    /// `(f_{n+1}, f_{n-1}, f_n, -1)` for Fibonacci numbers with
    /// `f_1 = f_2 = 1`, `n >= 4`.
    L7 { n: i64 },
    /// Block width below 2 on a `(p,q)` torus knot with `p = 1` or `q = 1`.
    TorusUnknot,
}

impl UnknotFamily {
    pub fn code(&self) -> &'static str {
        match self {
            UnknotFamily::L1 { .. } => "L1",
            UnknotFamily::L2 { .. } => "L2",
            UnknotFamily::L3 { .. } => "L3",
            UnknotFamily::L4 { .. } => "L4",
            UnknotFamily::L5 { .. } => "L5",
            UnknotFamily::L6 { .. } => "L6",
            UnknotFamily::L7 { .. } => "L7",
            UnknotFamily::TorusUnknot => "torus",
        }
    }
}

impl fmt::Display for UnknotFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UnknotFamily::L1 { n } => write!(f, "L1(n={n})"),
            UnknotFamily::L2 { n } => write!(f, "L2(n={n})"),
            UnknotFamily::L3 { m, n, plus } => {
                write!(f, "L3(m={m}, n={n}, {})", if plus { "mn+1" } else { "mn-1" })
            }
            UnknotFamily::L4 { n } => write!(f, "L4(n={n})"),
            UnknotFamily::L5 { n, plus } => {
                write!(f, "L5(n={n}, {})", if plus { "4n+1" } else { "4n-1" })
            }
            UnknotFamily::L6 { n } => write!(f, "L6(n={n})"),
            UnknotFamily::L7 { n } => write!(f, "L7(n={n})"),
            UnknotFamily::TorusUnknot => write!(f, "torus unknot"),
        }
    }
}

/// The three families of twisted torus links that are unlinks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(2n+2, 2n, 2n+1, -1)`, `n >= 1`: two components.
    F1 { n: i64 },
    /// `(4n, n, 2n, -1)`, `n >= 2`: `n` components.
    F2 { n: i64 },
    /// `(mn, m, m, -n)`, `m, n >= 2`: `m` components.
    F3 { m: i64, n: i64 },
}

impl Family {
    pub fn code(&self) -> &'static str {
        match self {
            Family::F1 { .. } => "F1",
            Family::F2 { .. } => "F2",
            Family::F3 { .. } => "F3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::F1 { n } => write!(f, "F1(n={n})"),
            Family::F2 { n } => write!(f, "F2(n={n})"),
            Family::F3 { m, n } => write!(f, "F3(m={m}, n={n})"),
        }
    }
}

/// Why a link was rejected as an unlink, in diagnostic order: the first
/// check that fires is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    PositiveTwist,
    RBeyondP,
    LinkingObstruction { predicted: i64 },
    ComponentKnotted { component: usize },
    NoFamily,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rejection::PositiveTwist => write!(f, "positive twists cannot produce an unlink"),
            Rejection::RBeyondP => {
                write!(f, "twist block wider than the torus braid (r > max(p, q))")
            }
            Rejection::LinkingObstruction { predicted } => {
                write!(f, "nonzero linking number (predicted {predicted})")
            }
            Rejection::ComponentKnotted { component } => {
                write!(f, "component {component} is not an unknot")
            }
            Rejection::NoFamily => write!(f, "no unlink family matches"),
        }
    }
}

/// Outcome of [`unlink_verdict`], keeping the parameters exactly as given.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub params: TwistedTorusParams,
    pub unlink: bool,
    pub family: Option<Family>,
    pub reason: Option<Rejection>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Witness {
    N { n: i64 },
    Mn { m: i64, n: i64 },
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Verdict", 8)?;
        st.serialize_field("p", &self.params.p)?;
        st.serialize_field("q", &self.params.q)?;
        st.serialize_field("r", &self.params.r)?;
        st.serialize_field("s", &self.params.s)?;
        st.serialize_field("unlink", &self.unlink)?;
        match self.family {
            Some(fam) => {
                st.serialize_field("family", fam.code())?;
                let witness = match fam {
                    Family::F1 { n } | Family::F2 { n } => Witness::N { n },
                    Family::F3 { m, n } => Witness::Mn { m, n },
                };
                st.serialize_field("witness", &witness)?;
            }
            None => {
                st.serialize_field("family", &None::<&str>)?;
                st.serialize_field("witness", &None::<Witness>)?;
            }
        }
        match &self.reason {
            Some(r) => st.serialize_field("reason", &r.to_string())?,
            None => st.serialize_field("reason", &None::<&str>)?,
        }
        st.end()
    }
}

fn fibonacci_index(p: i64, q: i64, r: i64) -> Option<i64> {
    // f[1] = f[2] = 1; look for n >= 4 with (p, q, r) = (f[n+1], f[n-1], f[n]).
    let mut f = vec![0i64, 1, 1];
    while *f.last().unwrap() < p {
        f.push(f[f.len() - 1] + f[f.len() - 2]);
    }
    for n in 4..f.len().saturating_sub(1) {
        if f[n + 1] == p && f[n - 1] == q && f[n] == r {
            return Some(n as i64);
        }
    }
    None
}

/// Literal match against the unknot families; expects `p >= q >= 1`,
/// `r >= 2` and `s != 0`.
fn match_unknot_family(p: i64, q: i64, r: i64, s: i64) -> Option<UnknotFamily> {
    if s == -1 {
        if q >= 1 && p == q + 1 && r == q + 1 {
            return Some(UnknotFamily::L1 { n: q });
        }
        if q >= 2 && p == q + 1 && r == q {
            return Some(UnknotFamily::L2 { n: q });
        }
        if q == 1 && r == 2 && p >= 3 {
            return Some(UnknotFamily::L4 { n: p });
        }
        if q >= 2 && r == 2 * q {
            if p == 4 * q + 1 {
                return Some(UnknotFamily::L5 { n: q, plus: true });
            }
            if p == 4 * q - 1 {
                return Some(UnknotFamily::L5 { n: q, plus: false });
            }
        }
        if q >= 3 && q % 2 == 1 && p == q + 2 && r == q + 1 {
            return Some(UnknotFamily::L6 { n: q + 1 });
        }
        if let Some(n) = fibonacci_index(p, q, r) {
            return Some(UnknotFamily::L7 { n });
        }
    } else if s <= -2 && q >= 2 && r == q {
        let m = -s;
        if p == m * q + 1 {
            return Some(UnknotFamily::L3 { m, n: q, plus: true });
        }
        if p == m * q - 1 {
            return Some(UnknotFamily::L3 { m, n: q, plus: false });
        }
    }
    None
}

/// Decides whether the twisted torus knot `T(p,q,r,s)` is an unknot, by
/// family lookup. Accepts the raw component tuples produced when a link is
/// split up: `p` or `q` may be 1, `r` may be 0 or 1, and `p` and `q` may
/// arrive in either order.
pub fn lee_unknot_family(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
) -> Result<Option<UnknotFamily>, ClassifyError> {
    if p < 1 || q < 1 || r < 0 || r > p + q || s == 0 {
        return Err(ClassifyError::OutOfDomain { p, q, r, s });
    }
    let d = p.gcd(&q);
    if d != 1 {
        return Err(ClassifyError::NotAKnot { components: d });
    }
    if r < 2 {
        // Too narrow to twist anything: a plain torus knot.
        return Ok(if p.min(q) == 1 {
            Some(UnknotFamily::TorusUnknot)
        } else {
            None
        });
    }
    let (p, q) = if q > p { (q, p) } else { (p, q) };
    Ok(match_unknot_family(p, q, r, s))
}

/// Literal match against the unlink families, without swapping `p` and `q`.
pub fn match_unlink_family(params: &TwistedTorusParams) -> Option<Family> {
    let TwistedTorusParams { p, q, r, s } = *params;
    if s == -1 {
        if q >= 2 && q % 2 == 0 && p == q + 2 && r == q + 1 {
            return Some(Family::F1 { n: q / 2 });
        }
        if q >= 2 && p == 4 * q && r == 2 * q {
            return Some(Family::F2 { n: q });
        }
    } else if s <= -2 && q >= 2 && r == q && p == q * (-s) {
        return Some(Family::F3 { m: q, n: -s });
    }
    None
}

/// Component parameters computed arithmetically, with no braid in sight:
/// component `i` of `d = gcd(p,q)` owns every block strand whose position is
/// `i mod d`, so its block width is `ceil((r - i) / d)`. Requires `r <= p`.
pub fn arithmetic_components(
    params: &TwistedTorusParams,
) -> Result<Vec<ComponentTuple>, ClassifyError> {
    let TwistedTorusParams { p, q, r, s } = *params;
    if r > p {
        return Err(ClassifyError::OutOfDomain { p, q, r, s });
    }
    let d = params.gcd();
    Ok((0..d)
        .map(|i| ComponentTuple {
            p: p / d,
            q: q / d,
            r: (r - i + d - 1) / d,
            s,
        })
        .collect())
}

/// First nonzero predicted pairwise linking number, if any. Components `i`
/// and `j` link `p'q'` times through the torus part and `s b_i b_j` more
/// through the twists, where `b` are the block widths from
/// [`arithmetic_components`].
fn first_nonzero_predicted_linking(norm: &TwistedTorusParams) -> Option<i64> {
    let comps = arithmetic_components(norm).expect("caller checked r <= p");
    let base = comps[0].p * comps[0].q;
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let lk = base + norm.s * comps[i].r * comps[j].r;
            if lk != 0 {
                return Some(lk);
            }
        }
    }
    None
}

fn first_knotted_component(norm: &TwistedTorusParams) -> Option<usize> {
    let comps = arithmetic_components(norm).expect("caller checked r <= p");
    comps.iter().position(|t| {
        lee_unknot_family(t.p, t.q, t.r, t.s)
            .expect("component tuples stay in domain")
            .is_none()
    })
}

/// Decides whether `T(p,q,r,s)` with `gcd(p,q) >= 2` is an unlink. The
/// parameters are normalized so `p >= q` (the link type is symmetric in `p`
/// and `q`), then matched against the unlink families; on failure the first
/// applicable rejection is reported.
pub fn unlink_verdict(params: &TwistedTorusParams) -> Result<Verdict, ClassifyError> {
    if params.gcd() < 2 {
        return Err(ClassifyError::NotALink);
    }
    let norm = params.normalized();
    if let Some(family) = match_unlink_family(&norm) {
        return Ok(Verdict {
            params: *params,
            unlink: true,
            family: Some(family),
            reason: None,
        });
    }
    let reason = if norm.s > 0 {
        Rejection::PositiveTwist
    } else if norm.r > norm.p {
        Rejection::RBeyondP
    } else if let Some(predicted) = first_nonzero_predicted_linking(&norm) {
        Rejection::LinkingObstruction { predicted }
    } else if let Some(component) = first_knotted_component(&norm) {
        Rejection::ComponentKnotted { component }
    } else {
        Rejection::NoFamily
    };
    Ok(Verdict {
        params: *params,
        unlink: false,
        family: None,
        reason: Some(reason),
    })
}

/// Per-component breakdown for 2-component links: the predicted linking
/// number and each component's unknot family, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComponentAnalysis {
    pub predicted_linking: i64,
    pub components: Vec<(ComponentTuple, Option<UnknotFamily>)>,
}

pub fn two_component_analysis(
    params: &TwistedTorusParams,
) -> Result<TwoComponentAnalysis, ClassifyError> {
    let d = params.gcd();
    if d != 2 {
        return Err(ClassifyError::NotTwoComponents { components: d });
    }
    let norm = params.normalized();
    let comps = arithmetic_components(&norm)?;
    let predicted_linking = comps[0].p * comps[0].q + norm.s * comps[0].r * comps[1].r;
    let components = comps
        .into_iter()
        .map(|t| {
            let fam = lee_unknot_family(t.p, t.q, t.r, t.s)
                .expect("component tuples stay in domain");
            (t, fam)
        })
        .collect();
    Ok(TwoComponentAnalysis {
        predicted_linking,
        components,
    })
}

/// Enumerates every family instance with `p` up to `p_bound` and checks that
/// the instances are pairwise distinct parameter tuples, each matched back
/// to its own family.
pub fn families_disjoint_check(p_bound: i64) -> bool {
    let mut seen: HashMap<(i64, i64, i64, i64), Family> = HashMap::new();
    let mut instances: Vec<(TwistedTorusParams, Family)> = Vec::new();

    let mut n = 1;
    while 2 * n + 2 <= p_bound {
        let p = TwistedTorusParams::new(2 * n + 2, 2 * n, 2 * n + 1, -1).unwrap();
        instances.push((p, Family::F1 { n }));
        n += 1;
    }
    let mut n = 2;
    while 4 * n <= p_bound {
        let p = TwistedTorusParams::new(4 * n, n, 2 * n, -1).unwrap();
        instances.push((p, Family::F2 { n }));
        n += 1;
    }
    for m in 2..=p_bound / 2 {
        for n in 2..=p_bound / m {
            let p = TwistedTorusParams::new(m * n, m, m, -n).unwrap();
            instances.push((p, Family::F3 { m, n }));
        }
    }

    for (params, family) in instances {
        let key = (params.p, params.q, params.r, params.s);
        if seen.insert(key, family).is_some() {
            return false;
        }
        if match_unlink_family(&params) != Some(family) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: i64, q: i64, r: i64, s: i64) -> TwistedTorusParams {
        TwistedTorusParams::new(p, q, r, s).unwrap()
    }

    fn verdict(p: i64, q: i64, r: i64, s: i64) -> Verdict {
        unlink_verdict(&params(p, q, r, s)).unwrap()
    }

    #[test]
    fn unlink_families_are_accepted() {
        assert_eq!(verdict(4, 2, 3, -1).family, Some(Family::F1 { n: 1 }));
        assert_eq!(verdict(6, 4, 5, -1).family, Some(Family::F1 { n: 2 }));
        assert_eq!(verdict(8, 6, 7, -1).family, Some(Family::F1 { n: 3 }));
        assert_eq!(verdict(8, 2, 4, -1).family, Some(Family::F2 { n: 2 }));
        assert_eq!(verdict(4, 2, 2, -2).family, Some(Family::F3 { m: 2, n: 2 }));
        assert_eq!(verdict(6, 2, 2, -3).family, Some(Family::F3 { m: 2, n: 3 }));
        assert_eq!(verdict(8, 4, 4, -2).family, Some(Family::F3 { m: 4, n: 2 }));
        // Swapped parameters name the same link.
        assert_eq!(verdict(2, 4, 3, -1).family, Some(Family::F1 { n: 1 }));
        for v in [verdict(4, 2, 3, -1), verdict(2, 4, 3, -1)] {
            assert!(v.unlink);
            assert_eq!(v.reason, None);
        }
    }

    #[test]
    fn rejections_fire_in_diagnostic_order() {
        // Positive twist wins over everything else.
        assert_eq!(
            verdict(4, 2, 5, 1).reason,
            Some(Rejection::PositiveTwist)
        );
        // Block wider than the torus braid.
        assert_eq!(verdict(4, 2, 5, -1).reason, Some(Rejection::RBeyondP));
        // Nonzero linking number.
        assert_eq!(
            verdict(4, 2, 2, -1).reason,
            Some(Rejection::LinkingObstruction { predicted: 1 })
        );
        // An odd block width also leaves nonzero linking here.
        assert_eq!(
            verdict(6, 2, 3, -1).reason,
            Some(Rejection::LinkingObstruction { predicted: 1 })
        );
        // Everything individually fine but no family: T(2,2,2,-1).
        assert_eq!(verdict(2, 2, 2, -1).reason, Some(Rejection::NoFamily));
    }

    #[test]
    fn knotted_component_rejection() {
        // T(18,2,6,-1) has predicted linking 9 - 3*3 = 0, but each component
        // is T(9,1,3,-1), a trefoil, so the component check fires.
        let v = verdict(18, 2, 6, -1);
        assert_eq!(
            v.reason,
            Some(Rejection::ComponentKnotted { component: 0 })
        );
        assert!(!v.unlink);
    }

    #[test]
    fn knot_input_is_an_error() {
        assert_eq!(
            unlink_verdict(&params(5, 2, 3, -1)),
            Err(ClassifyError::NotALink)
        );
    }

    #[test]
    fn unknot_family_membership() {
        let f = |p, q, r, s| lee_unknot_family(p, q, r, s).unwrap();
        assert_eq!(f(2, 1, 2, -1), Some(UnknotFamily::L1 { n: 1 }));
        assert_eq!(f(4, 3, 4, -1), Some(UnknotFamily::L1 { n: 3 }));
        assert_eq!(f(3, 2, 2, -1), Some(UnknotFamily::L2 { n: 2 }));
        assert_eq!(
            f(5, 2, 2, -2),
            Some(UnknotFamily::L3 { m: 2, n: 2, plus: true })
        );
        assert_eq!(
            f(3, 2, 2, -2),
            Some(UnknotFamily::L3 { m: 2, n: 2, plus: false })
        );
        assert_eq!(f(7, 1, 2, -1), Some(UnknotFamily::L4 { n: 7 }));
        assert_eq!(
            f(9, 2, 4, -1),
            Some(UnknotFamily::L5 { n: 2, plus: true })
        );
        assert_eq!(
            f(7, 2, 4, -1),
            Some(UnknotFamily::L5 { n: 2, plus: false })
        );
        assert_eq!(f(5, 3, 4, -1), Some(UnknotFamily::L6 { n: 4 }));
        assert_eq!(f(5, 2, 3, -1), Some(UnknotFamily::L7 { n: 4 }));
        assert_eq!(f(8, 3, 5, -1), Some(UnknotFamily::L7 { n: 5 }));
        // p and q can arrive swapped.
        assert_eq!(f(2, 3, 2, -1), Some(UnknotFamily::L2 { n: 2 }));

        // Degenerate blocks fall back to torus knot logic.
        assert_eq!(f(5, 1, 0, -1), Some(UnknotFamily::TorusUnknot));
        assert_eq!(f(1, 1, 1, -3), Some(UnknotFamily::TorusUnknot));
        assert_eq!(f(3, 2, 1, -1), None);

        // Knotted examples stay out.
        assert_eq!(f(5, 1, 3, -1), None);
        assert_eq!(f(7, 2, 2, -1), None);
        assert_eq!(f(5, 2, 3, 1), None);
    }

    #[test]
    fn unknot_domain_errors() {
        assert!(lee_unknot_family(0, 1, 2, -1).is_err());
        assert!(lee_unknot_family(3, -1, 2, -1).is_err());
        assert!(lee_unknot_family(3, 2, 2, 0).is_err());
        assert!(lee_unknot_family(3, 2, 9, -1).is_err());
        assert_eq!(
            lee_unknot_family(4, 2, 2, -1),
            Err(ClassifyError::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn arithmetic_component_splitting() {
        assert_eq!(
            arithmetic_components(&params(6, 4, 5, -1)).unwrap(),
            vec![
                ComponentTuple { p: 3, q: 2, r: 3, s: -1 },
                ComponentTuple { p: 3, q: 2, r: 2, s: -1 },
            ]
        );
        assert_eq!(
            arithmetic_components(&params(6, 3, 2, -1)).unwrap(),
            vec![
                ComponentTuple { p: 2, q: 1, r: 1, s: -1 },
                ComponentTuple { p: 2, q: 1, r: 1, s: -1 },
                ComponentTuple { p: 2, q: 1, r: 0, s: -1 },
            ]
        );
        assert!(arithmetic_components(&params(3, 2, 4, -1)).is_err());
    }

    #[test]
    fn two_component_breakdown() {
        let a = two_component_analysis(&params(6, 4, 5, -1)).unwrap();
        assert_eq!(a.predicted_linking, 0);
        assert_eq!(a.components[0].1, Some(UnknotFamily::L1 { n: 2 }));
        assert_eq!(a.components[1].1, Some(UnknotFamily::L2 { n: 2 }));

        let b = two_component_analysis(&params(4, 2, 2, -1)).unwrap();
        assert_eq!(b.predicted_linking, 1);

        assert_eq!(
            two_component_analysis(&params(6, 3, 2, -1)),
            Err(ClassifyError::NotTwoComponents { components: 3 })
        );
    }

    #[test]
    fn verdict_json_shape() {
        let yes = verdict(4, 2, 2, -2);
        assert_eq!(
            serde_json::to_string(&yes).unwrap(),
            r#"{"p":4,"q":2,"r":2,"s":-2,"unlink":true,"family":"F3","witness":{"m":2,"n":2},"reason":null}"#
        );
        let no = verdict(4, 2, 2, -1);
        assert_eq!(
            serde_json::to_string(&no).unwrap(),
            r#"{"p":4,"q":2,"r":2,"s":-1,"unlink":false,"family":null,"witness":null,"reason":"nonzero linking number (predicted 1)"}"#
        );
        // F1 witnesses expose only n.
        let f1 = verdict(4, 2, 3, -1);
        assert!(serde_json::to_string(&f1)
            .unwrap()
            .contains(r#""family":"F1","witness":{"n":1}"#));
    }

    #[test]
    fn family_instances_do_not_collide() {
        assert!(families_disjoint_check(60));
    }
}
