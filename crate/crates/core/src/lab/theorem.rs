use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::lhs::{closed_form, lhs_a, lhs_b, lhs_c, lhs_d, lhs_e, ExpandedFunction};
use crate::analytic::{DiskFunction, SchwarzFunction};
use crate::error::{Error, Result};
use crate::radius::{a_star, radius_r5, solve, theorem6_radius, Equation, RadiusQuery, DEFAULT_TOL};

/// One inequality: a fixed left-hand side bound to a fixed radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// `A_f <= 1` for `r <= R_1`.
    T1,
    /// `B_f <= 1` for `r <= R_2`.
    T2,
    /// `C_f <= 1` for `r <= R_3`, `p in (0, 2]`.
    T3,
    /// `C_f <= 1` for `r <= R_4(a)`, any `p > 0`.
    T4,
    /// `D_f <= 1` for lacunary `f` and `r <= R_5`.
    T5,
    /// `E_f <= 1` for `r <= 3^{-1/k}` iff `a <= a*`.
    T6,
    /// `B_0 + A + |f(w) - a_0| <= 1` for `r <= zeta_m`.
    ThmAFirst,
    /// `|a_0|^2 + B_1 + A + |f(w) - a_0| <= 1` for `r <= eta_m`.
    ThmASecond,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::ThmAFirst,
        TheoremId::ThmASecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::ThmAFirst => "ThmA1",
            TheoremId::ThmASecond => "ThmA2",
        }
    }

    /// Whether the radius depends on `a = |f(0)|` of the function tested.
    pub fn radius_depends_on_a(self) -> bool {
        self == TheoremId::T4
    }

    /// Order of the Schwarz function inside the series terms.
    pub fn series_order(self, params: &TheoremParams) -> u32 {
        match self {
            TheoremId::ThmAFirst | TheoremId::ThmASecond => 1,
            _ => params.k,
        }
    }

    pub fn validate(self, params: &TheoremParams) -> Result<()> {
        match self {
            TheoremId::T6 => theorem6_radius(params.k, params.m).map(|_| ()),
            TheoremId::T5 => {
                if params.q == 0 {
                    return Err(Error::InvalidParameter("q must be >= 1".into()));
                }
                radius_r5(params.k, params.p, params.q).map(|_| ())
            }
            _ => self.radius_query(params, 0.0).validate(),
        }
    }

    fn radius_query(self, params: &TheoremParams, a: f64) -> RadiusQuery {
        let equation = match self {
            TheoremId::T1 => Equation::R1,
            TheoremId::T2 => Equation::R2,
            TheoremId::T3 => Equation::R3,
            TheoremId::T4 => Equation::R4,
            TheoremId::T5 => Equation::R5,
            TheoremId::T6 => unreachable!("theorem 6 has a closed-form radius"),
            TheoremId::ThmAFirst => Equation::ZetaM,
            TheoremId::ThmASecond => Equation::EtaM,
        };
        RadiusQuery {
            theorem: equation,
            k: params.k,
            m: params.m,
            p: params.p,
            q: params.q,
            s: params.s,
            t: params.t,
            lambda: params.lambda,
            a,
        }
    }

    /// Radius for a function with `|f(0)| = a` (only `T4` reads `a`).
    pub fn radius(self, params: &TheoremParams, a: f64) -> Result<f64> {
        match self {
            TheoremId::T5 => radius_r5(params.k, params.p, params.q),
            TheoremId::T6 => theorem6_radius(params.k, params.m),
            _ => Ok(solve(&self.radius_query(params, a), DEFAULT_TOL)?.value),
        }
    }

    /// Pointwise left-hand side, an upper estimate including series tails.
    pub fn lhs(
        self,
        params: &TheoremParams,
        f: &ExpandedFunction,
        omega_k: &SchwarzFunction,
        omega_m: &SchwarzFunction,
        z: Complex64,
    ) -> Result<f64> {
        match self {
            TheoremId::T1 => lhs_a(f, omega_k, omega_m, params.p, z),
            TheoremId::T2 => lhs_b(f, omega_k, omega_m, params.p, params.lambda, params.s, params.t, z),
            TheoremId::T3 | TheoremId::T4 => lhs_c(f, omega_k, omega_m, params.p, params.lambda, z),
            TheoremId::T5 => lhs_d(f, omega_k, params.p, params.q, z),
            TheoremId::T6 => lhs_e(f, omega_k, omega_m, z),
            // B_0 + A + |.| is lhs_a with p = 1 since a + B_1 = B_0.
            TheoremId::ThmAFirst => lhs_a(f, omega_k, omega_m, 1.0, z),
            TheoremId::ThmASecond => lhs_a(f, omega_k, omega_m, 2.0, z),
        }
    }

    /// The extremal function with parameter `a` used in the sharpness argument.
    pub fn extremal(self, params: &TheoremParams, a: f64) -> DiskFunction {
        match self {
            TheoremId::T2 | TheoremId::T3 | TheoremId::T4 => DiskFunction::MobiusF { a },
            TheoremId::T5 => DiskFunction::LacunaryFStar { a, q: params.q },
            _ => DiskFunction::MobiusPhi { a },
        }
    }

    /// Closed-form left-hand side of the extremal function at `z = r` with
    /// monomial Schwarz functions.
    pub fn closed_form(self, params: &TheoremParams, a: f64, r: f64) -> f64 {
        let TheoremParams { k, m, p, q, s, t, lambda, .. } = *params;
        match self {
            TheoremId::T1 => closed_form::a_phi(a, r, k, m, p),
            TheoremId::T2 => closed_form::b_fa(a, r, lambda, s, t, k, m, p),
            TheoremId::T3 | TheoremId::T4 => closed_form::c_fa(a, r, lambda, k, m, p),
            TheoremId::T5 => closed_form::d_fstar(a, r, k, q, p),
            TheoremId::T6 => closed_form::e_phi(a, r, k, m),
            TheoremId::ThmAFirst => closed_form::a_phi(a, r, 1, m, 1.0),
            TheoremId::ThmASecond => closed_form::a_phi(a, r, 1, m, 2.0),
        }
    }

    /// Default values of `a` for the extremal family in verification runs.
    pub fn default_extremal_grid(self) -> Vec<f64> {
        match self {
            TheoremId::T6 => vec![0.0, 0.2, 0.4, 0.6, a_star()],
            _ => vec![0.0, 0.3, 0.656, 0.9, 0.99],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.to_ascii_lowercase().replace(['_', '-'], "");
        let id = match normalized.as_str() {
            "t1" | "t1af" => TheoremId::T1,
            "t2" | "t2bf" => TheoremId::T2,
            "t3" | "t3cf" => TheoremId::T3,
            "t4" | "t4cf" => TheoremId::T4,
            "t5" | "t5df" => TheoremId::T5,
            "t6" | "t6ef" => TheoremId::T6,
            "thma1" | "thmafirst" => TheoremId::ThmAFirst,
            "thma2" | "thmasecond" => TheoremId::ThmASecond,
            _ => return Err(Error::InvalidParameter(format!("unknown theorem `{s}`"))),
        };
        Ok(id)
    }
}

/// Parameters shared by all theorems; each theorem reads its own subset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub k: u32,
    pub m: u32,
    pub p: f64,
    pub q: u32,
    pub s: u32,
    pub t: u32,
    pub lambda: f64,
    /// Fixes `a = |f(0)|` of the extremal function when set.
    pub a: Option<f64>,
}

impl Default for TheoremParams {
    fn default() -> Self {
        Self {
            k: 1,
            m: 1,
            p: 1.0,
            q: 1,
            s: 1,
            t: 0,
            lambda: 1.0,
            a: None,
        }
    }
}

impl TheoremParams {
    pub fn km(k: u32, m: u32) -> Self {
        Self { k, m, ..Default::default() }
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_lattice(mut self, s: u32, t: u32) -> Self {
        self.s = s;
        self.t = t;
        self
    }

    pub fn with_q(mut self, q: u32) -> Self {
        self.q = q;
        self
    }

    pub fn with_a(mut self, a: f64) -> Self {
        self.a = Some(a);
        self
    }
}
