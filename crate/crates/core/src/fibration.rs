//! Global invariants of a fibered surface `f: S -> B` and the
//! global-equals-sum-of-local identities.

use std::fmt;

use crate::error::Error;
use crate::germ::{self, FiberGerm, LocalProfile};
use crate::picard::{boundary_count, DivisorRep};
use crate::rational::Rational;
use crate::warning::Warning;

/// A germ of the fibration together with how many fibers of that type occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermEntry {
    pub name: String,
    pub germ: FiberGerm,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fibration {
    genus: u32,
    base_genus: i64,
    chi_o: i64,
    euler_top: i64,
    k_sq: i64,
    germs: Vec<GermEntry>,
}

/// `K_f^2` and `Sign(S)` derived from the surface data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeInvariants {
    pub k_f_sq: Rational,
    pub signature: Rational,
}

impl Fibration {
    /// `chi_o = chi(O_S)`, `euler_top = e_top(S)`, `k_sq = K_S^2`.
    pub fn new(
        genus: u32,
        base_genus: i64,
        chi_o: i64,
        euler_top: i64,
        k_sq: i64,
    ) -> Result<Self, Error> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        if base_genus < 0 {
            return Err(Error::NegativeBaseGenus(base_genus));
        }
        Ok(Fibration {
            genus,
            base_genus,
            chi_o,
            euler_top,
            k_sq,
            germs: Vec::new(),
        })
    }

    /// The fibration over a base of genus `base_genus` whose relative
    /// invariants are `chi_f`, `e_f` and `K_f^2 = 12 chi_f - e_f`.
    pub fn from_relative(genus: u32, base_genus: i64, chi_f: i64, e_f: i64) -> Result<Self, Error> {
        let t = (i64::from(genus) - 1) * (base_genus - 1);
        let k_f_sq = 12 * chi_f - e_f;
        Fibration::new(genus, base_genus, chi_f + t, e_f + 4 * t, k_f_sq + 8 * t)
    }

    pub fn with_germ(
        mut self,
        name: impl Into<String>,
        germ: FiberGerm,
        multiplicity: u64,
    ) -> Result<Self, Error> {
        self.push_germ(name, germ, multiplicity)?;
        Ok(self)
    }

    pub fn push_germ(
        &mut self,
        name: impl Into<String>,
        germ: FiberGerm,
        multiplicity: u64,
    ) -> Result<(), Error> {
        if germ.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: germ.genus(),
            });
        }
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        self.germs.push(GermEntry {
            name: name.into(),
            germ,
            multiplicity,
        });
        Ok(())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn base_genus(&self) -> i64 {
        self.base_genus
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn euler_top(&self) -> i64 {
        self.euler_top
    }

    pub fn k_sq(&self) -> i64 {
        self.k_sq
    }

    pub fn germs(&self) -> &[GermEntry] {
        &self.germs
    }

    pub fn germs_mut(&mut self) -> &mut [GermEntry] {
        &mut self.germs
    }

    /// `(g - 1)(b - 1)`.
    fn twist(&self) -> i64 {
        (i64::from(self.genus) - 1) * (self.base_genus - 1)
    }

    /// `(K_f^2 + e_f) - 12 chi_f`; zero for every consistent surface.
    pub fn noether_residual(&self) -> Rational {
        let k = self.k_f_sq();
        k + e_f(self) - Rational::from(12) * chi_f(self)
    }

    /// `K_f^2 = K_S^2 - 8(g - 1)(b - 1)`, from `K_f = K_S - f^* K_B`.
    pub fn k_f_sq(&self) -> Rational {
        Rational::from(self.k_sq - 8 * self.twist())
    }

    /// `Sign(S) = K_f^2 - 8 chi_f`, without the Noether check.
    pub fn signature(&self) -> Rational {
        self.k_f_sq() - Rational::from(8) * chi_f(self)
    }

    /// `sum_p delta_i(F^_p) / N_p` over all germs, counted with multiplicity.
    pub fn boundary_degrees(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); boundary_count(self.genus)];
        for entry in &self.germs {
            let weight = Rational::frac(entry.multiplicity as i64, entry.germ.pseudo_period() as i64);
            for (slot, &d) in out.iter_mut().zip(entry.germ.ss_delta()) {
                *slot += &weight * Rational::from(d);
            }
        }
        out
    }
}

/// `chi_f = chi(O_S) - (g - 1)(b - 1)`.
pub fn chi_f(fib: &Fibration) -> Rational {
    Rational::from(fib.chi_o - fib.twist())
}

/// `e_f = e_top(S) - 4(g - 1)(b - 1)`.
pub fn e_f(fib: &Fibration) -> Rational {
    Rational::from(fib.euler_top - 4 * fib.twist())
}

/// `K_f^2` and `Sign(S) = K_f^2 - 8 chi_f`, failing unless Noether's formula
/// `12 chi_f = K_f^2 + e_f` holds (equivalently, `Sign = 4 chi_f - e_f`).
pub fn relative_invariants(fib: &Fibration) -> Result<RelativeInvariants, Error> {
    let residual = fib.noether_residual();
    if !residual.is_zero() {
        return Err(Error::Noether { residual });
    }
    Ok(RelativeInvariants {
        k_f_sq: fib.k_f_sq(),
        signature: fib.signature(),
    })
}

/// Degree `a lambda(f) - sum b_i delta_i(f)` of the pulled-back divisor.
pub fn divisor_degree(
    rep: &DivisorRep,
    lambda_f: &Rational,
    delta_f: &[Rational],
) -> Result<Rational, Error> {
    let expected = boundary_count(rep.genus());
    if delta_f.len() != expected {
        return Err(Error::BoundaryLength {
            genus: rep.genus(),
            expected,
            found: delta_f.len(),
        });
    }
    let boundary: Rational = rep.b().iter().zip(delta_f).map(|(b, d)| b * d).sum();
    Ok(rep.a() * lambda_f - boundary)
}

/// [`divisor_degree`] with `lambda(f) = chi_f` and boundary degrees summed
/// from the germs. Only meaningful when every fiber is semistable.
pub fn divisor_degree_from_germs(fib: &Fibration, rep: &DivisorRep) -> Result<Rational, Error> {
    if rep.genus() != fib.genus {
        return Err(Error::GenusMismatch {
            left: fib.genus,
            right: rep.genus(),
        });
    }
    divisor_degree(rep, &chi_f(fib), &fib.boundary_degrees())
}

/// One `lhs = rhs` identity with its exact residual `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub residual: Rational,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let residual = &lhs - &rhs;
        IdentityCheck {
            name: name.into(),
            lhs,
            rhs,
            residual,
        }
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} = {} ({}, residual {})",
            self.name,
            self.lhs,
            self.rhs,
            if self.passed() { "pass" } else { "FAIL" },
            self.residual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermRow {
    pub name: String,
    pub multiplicity: u64,
    pub profile: LocalProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Globals {
    pub chi_f: Rational,
    pub e_f: Rational,
    pub k_f_sq: Rational,
    pub signature: Rational,
}

/// Outcome of [`verify_localization`]. Failing identities are reported, not
/// raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport {
    pub rows: Vec<GermRow>,
    pub globals: Globals,
    pub checks: Vec<IdentityCheck>,
    pub warnings: Vec<Warning>,
}

impl LocalizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NOETHER: &str = "noether";
pub const CHECK_CHI: &str = "chi_f = sum lambda_D";
pub const CHECK_EULER: &str = "e_f = sum delta";
pub const CHECK_SIGNATURE: &str = "Sign = sum sigma_D";

/// Checks `chi_f = sum lambda_D(F_p)`, `e_f = sum delta(F_p)` and
/// `Sign(S) = sum sigma_D(F_p)` over the germ multiset, plus Noether's
/// formula for the surface and the local Noether identity of every germ that
/// carries `c1^2`. Errors only when germ data needed by `rep` is missing.
pub fn verify_localization(fib: &Fibration, rep: &DivisorRep) -> Result<LocalizationReport, Error> {
    if rep.genus() != fib.genus {
        return Err(Error::GenusMismatch {
            left: fib.genus,
            right: rep.genus(),
        });
    }
    let mut warnings = rep.warnings();
    let mut rows = Vec::with_capacity(fib.germs.len());
    let mut sum_lambda = Rational::zero();
    let mut sum_delta = Rational::zero();
    let mut sum_sigma = Rational::zero();
    let mut local_checks = Vec::new();
    for entry in &fib.germs {
        let profile = LocalProfile::compute(rep, &entry.germ)?;
        let m = Rational::from(entry.multiplicity);
        sum_lambda += &m * &profile.lambda_d;
        sum_delta += &m * &profile.delta;
        sum_sigma += &m * &profile.sigma_d;
        if let Some(ind) = &profile.horikawa {
            warnings.extend(germ::horikawa_warning(ind, Some(&entry.name)));
        }
        if let Some(residual) = &profile.local_noether_residual {
            let rhs = Rational::from(12) * entry.germ.chi();
            local_checks.push(IdentityCheck::new(
                format!("local noether [{}]", entry.name),
                residual + &rhs,
                rhs,
            ));
        }
        rows.push(GermRow {
            name: entry.name.clone(),
            multiplicity: entry.multiplicity,
            profile,
        });
    }
    let globals = Globals {
        chi_f: chi_f(fib),
        e_f: e_f(fib),
        k_f_sq: fib.k_f_sq(),
        signature: fib.signature(),
    };
    let mut checks = vec![
        IdentityCheck::new(
            CHECK_NOETHER,
            &globals.k_f_sq + &globals.e_f,
            Rational::from(12) * &globals.chi_f,
        ),
        IdentityCheck::new(CHECK_CHI, globals.chi_f.clone(), sum_lambda),
        IdentityCheck::new(CHECK_EULER, globals.e_f.clone(), sum_delta),
        IdentityCheck::new(CHECK_SIGNATURE, globals.signature.clone(), sum_sigma),
    ];
    checks.extend(local_checks);
    Ok(LocalizationReport {
        rows,
        globals,
        checks,
        warnings,
    })
}
