//! Lower bounds on the Gromov–Hausdorff distance between subsets of a
//! closed manifold, in terms of Hausdorff distances to the manifold and its
//! geometry constants.
//!
//! Every bound is a minimum of a few terms. Reports keep the individual
//! terms and are flagged `vacuous` when the minimum is not positive; they
//! are never clamped.

mod enclosing;
mod jung;

use std::f64::consts::PI;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use enclosing::circumradius;
pub use jung::{alpha, jung_diameter_lower, tau};

use crate::error::{Error, Result};
use crate::metric::AmbientManifold;

/// Which bound a report came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `min{ d_H(X,M)/2, rho/4 }` for `d_GH(X, M)`.
    Thm1a,
    /// Two-subset version with the `rho/6` term.
    Thm1b,
    /// Circle of circumference `2 pi`: `min{ d_H(X,S^1), pi/6 }`.
    Thm2a,
    Thm2b,
    /// Filling-radius version with `Y = M`.
    Thm3a,
    Thm3b,
    /// Jung-constant version.
    Thm4,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Thm1a,
        Theorem::Thm1b,
        Theorem::Thm2a,
        Theorem::Thm2b,
        Theorem::Thm3a,
        Theorem::Thm3b,
        Theorem::Thm4,
    ];

    /// Bounds on `d_GH(X, M)` rather than `d_GH(X, Y)`.
    pub fn is_single_subset(self) -> bool {
        matches!(self, Theorem::Thm1a | Theorem::Thm2a | Theorem::Thm3a)
    }
}

fn ser_rho<S: Serializer>(rho: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if rho.is_finite() {
        s.serialize_some(rho)
    } else {
        s.serialize_none()
    }
}

fn de_rho<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

/// Quantities the bounds consume. `rho` is `null` in JSON when infinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    /// `d_H(X, M)`.
    pub dh_xm: f64,
    /// `d_H(Y, M)`; zero when `Y = M`.
    #[serde(default)]
    pub dh_ym: f64,
    #[serde(serialize_with = "ser_rho", deserialize_with = "de_rho")]
    pub rho: f64,
    pub n: usize,
    #[serde(default)]
    pub kappa: f64,
    #[serde(default)]
    pub fill_rad: Option<f64>,
}

impl BoundInputs {
    /// Take `rho`, `n`, `kappa` and `fill_rad` from the manifold.
    pub fn from_manifold(m: &AmbientManifold, dh_xm: f64, dh_ym: f64) -> Self {
        Self {
            dh_xm,
            dh_ym,
            rho: m.rho(),
            n: m.dim(),
            kappa: m.kappa(),
            fill_rad: m.fill_rad(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rho > 0.0) {
            return Err(Error::OutOfDomain(format!("rho must be positive, got {}", self.rho)));
        }
        if !(self.dh_xm >= 0.0 && self.dh_ym >= 0.0) {
            return Err(Error::OutOfDomain("Hausdorff distances must be nonnegative".into()));
        }
        if self.n == 0 {
            return Err(Error::OutOfDomain("dimension must be positive".into()));
        }
        Ok(())
    }

    fn closed(&self) -> Result<()> {
        self.validate()?;
        if self.rho.is_finite() {
            Ok(())
        } else {
            Err(Error::RequiresClosedManifold)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: Theorem,
    /// Each `(label, value)` entering the minimum, in statement order.
    pub terms: Vec<(String, f64)>,
    pub lower_bound: f64,
    pub vacuous: bool,
    /// The Hausdorff term attains the minimum. For `thm1a` this is the
    /// density regime where `d_GH >= d_H / 2` holds outright.
    pub hausdorff_term_active: bool,
    /// `thm2a` only: the bound meets the upper bound `d_H(X, S^1)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_equality: Option<bool>,
}

impl BoundReport {
    fn new(theorem: Theorem, terms: Vec<(&str, f64)>) -> Self {
        let lower_bound = terms.iter().map(|t| t.1).fold(f64::INFINITY, f64::min);
        let hausdorff_term_active = terms[0].1 <= lower_bound;
        Self {
            theorem,
            terms: terms.into_iter().map(|(l, v)| (l.to_string(), v)).collect(),
            lower_bound,
            vacuous: lower_bound <= 0.0,
            hausdorff_term_active,
            certified_equality: None,
        }
    }
}

pub fn thm1a(i: &BoundInputs) -> Result<BoundReport> {
    i.closed()?;
    Ok(BoundReport::new(
        Theorem::Thm1a,
        vec![("d_H(X,M)/2", i.dh_xm / 2.0), ("rho/4", i.rho / 4.0)],
    ))
}

pub fn thm1b(i: &BoundInputs) -> Result<BoundReport> {
    i.closed()?;
    Ok(BoundReport::new(
        Theorem::Thm1b,
        vec![
            ("d_H(X,M)/2 - d_H(Y,M)", i.dh_xm / 2.0 - i.dh_ym),
            ("rho/6 - 2 d_H(Y,M)/3", i.rho / 6.0 - 2.0 * i.dh_ym / 3.0),
        ],
    ))
}

/// Circle of circumference `2 pi`; also flags when the bound equals `d_H`.
pub fn thm2a(dh_xs1: f64) -> BoundReport {
    let mut r = BoundReport::new(Theorem::Thm2a, vec![("d_H(X,S1)", dh_xs1), ("pi/6", PI / 6.0)]);
    r.certified_equality = Some(dh_xs1 < PI / 6.0);
    r
}

pub fn thm2b(dh_xs1: f64, dh_ys1: f64) -> BoundReport {
    BoundReport::new(
        Theorem::Thm2b,
        vec![
            ("d_H(X,S1) - d_H(Y,S1)", dh_xs1 - dh_ys1),
            ("pi/6 - d_H(Y,S1)/2", PI / 6.0 - dh_ys1 / 2.0),
        ],
    )
}

fn thm3(theorem: Theorem, i: &BoundInputs) -> Result<BoundReport> {
    i.closed()?;
    let fill_rad = i.fill_rad.ok_or(Error::MissingFillRad)?;
    Ok(BoundReport::new(
        theorem,
        vec![
            ("d_H(X,M)/2 - d_H(Y,M)", i.dh_xm / 2.0 - i.dh_ym),
            ("rho/2 - d_H(Y,M)", i.rho / 2.0 - i.dh_ym),
            ("FillRad/3 - 2 d_H(Y,M)/3", fill_rad / 3.0 - 2.0 * i.dh_ym / 3.0),
        ],
    ))
}

pub fn thm3b(i: &BoundInputs) -> Result<BoundReport> {
    thm3(Theorem::Thm3b, i)
}

/// [`thm3b`] with `Y = M`; `dh_ym` is ignored.
pub fn thm3a(i: &BoundInputs) -> Result<BoundReport> {
    thm3(Theorem::Thm3a, &BoundInputs { dh_ym: 0.0, ..i.clone() })
}

pub fn thm4(i: &BoundInputs) -> Result<BoundReport> {
    i.closed()?;
    let a = alpha(i.n, i.kappa);
    let t = tau(i.rho, i.kappa);
    Ok(BoundReport::new(
        Theorem::Thm4,
        vec![
            ("alpha d_H(X,M) - d_H(Y,M)", a * i.dh_xm - i.dh_ym),
            ("(alpha tau - 2 d_H(Y,M)) / (2 alpha + 2)", (a * t - 2.0 * i.dh_ym) / (2.0 * a + 2.0)),
        ],
    ))
}
