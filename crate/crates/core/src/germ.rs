//! Local invariants of a relatively minimal fiber germ.
//!
//! A germ is described by its own data (`chi_F`, `e_top(F)`, optionally
//! `c1^2(F)`) together with data of its semistable reduction after a base
//! change of degree `N`: the boundary degrees `delta_i(F^)` and the
//! intersection degrees `D(F^)` of the pulled-back divisors. From these:
//!
//! * `lambda_D(F^) = (D(F^) + sum b_i delta_i(F^)) / a`
//! * `lambda_D(F)  = chi_F + lambda_D(F^) / N`
//! * `delta(F)     = e_top(F) - (2 - 2g)`
//! * `sigma_D(F)   = 4 lambda_D(F) - delta(F)`
//! * `Lsd(F)       = 4 chi_F - e_F = (c1^2(F) - 2 e_F) / 3`

use std::collections::BTreeMap;

use crate::error::Error;
use crate::picard::{boundary_count, DivisorRep};
use crate::rational::Rational;
use crate::warning::Warning;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberGerm {
    genus: u32,
    pseudo_period: u64,
    chi: Rational,
    euler_top: i64,
    c1_sq: Option<Rational>,
    ss_delta: Vec<u64>,
    ss_euler_top: Option<i64>,
    degrees: BTreeMap<String, Rational>,
}

/// Builder for [`FiberGerm`]; unset fields default to a smooth germ with
/// `N = 1` and `chi_F = 0`.
#[derive(Debug, Clone)]
pub struct GermBuilder {
    genus: u32,
    pseudo_period: u64,
    chi: Rational,
    euler_top: Option<i64>,
    c1_sq: Option<Rational>,
    ss_delta: Option<Vec<u64>>,
    ss_euler_top: Option<i64>,
    degrees: BTreeMap<String, Rational>,
}

impl GermBuilder {
    pub fn pseudo_period(mut self, n: u64) -> Self {
        self.pseudo_period = n;
        self
    }

    pub fn chi(mut self, chi: Rational) -> Self {
        self.chi = chi;
        self
    }

    pub fn euler_top(mut self, e: i64) -> Self {
        self.euler_top = Some(e);
        self
    }

    pub fn c1_sq(mut self, c1_sq: Rational) -> Self {
        self.c1_sq = Some(c1_sq);
        self
    }

    pub fn ss_delta(mut self, delta: Vec<u64>) -> Self {
        self.ss_delta = Some(delta);
        self
    }

    /// Overrides `e_top(F^)`, which otherwise is `(2 - 2g) + sum delta_i(F^)`.
    pub fn ss_euler_top(mut self, e: i64) -> Self {
        self.ss_euler_top = Some(e);
        self
    }

    pub fn degree(mut self, key: impl Into<String>, value: Rational) -> Self {
        self.degrees.insert(key.into(), value);
        self
    }

    pub fn build(self) -> Result<FiberGerm, Error> {
        if self.genus < 2 {
            return Err(Error::GenusTooSmall(self.genus));
        }
        if self.pseudo_period == 0 {
            return Err(Error::ZeroPseudoPeriod);
        }
        let expected = boundary_count(self.genus);
        let ss_delta = self.ss_delta.unwrap_or_else(|| vec![0; expected]);
        if ss_delta.len() != expected {
            return Err(Error::BoundaryLength {
                genus: self.genus,
                expected,
                found: ss_delta.len(),
            });
        }
        if let Some((key, value)) = self.degrees.iter().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativeDegree {
                key: key.clone(),
                value: value.clone(),
            });
        }
        Ok(FiberGerm {
            genus: self.genus,
            pseudo_period: self.pseudo_period,
            chi: self.chi,
            euler_top: self.euler_top.unwrap_or(2 - 2 * i64::from(self.genus)),
            c1_sq: self.c1_sq,
            ss_delta,
            ss_euler_top: self.ss_euler_top,
            degrees: self.degrees,
        })
    }
}

impl FiberGerm {
    pub fn builder(genus: u32) -> GermBuilder {
        GermBuilder {
            genus,
            pseudo_period: 1,
            chi: Rational::zero(),
            euler_top: None,
            c1_sq: None,
            ss_delta: None,
            ss_euler_top: None,
            degrees: BTreeMap::new(),
        }
    }

    /// Rebuilds from this germ's data, for modification.
    pub fn to_builder(&self) -> GermBuilder {
        GermBuilder {
            genus: self.genus,
            pseudo_period: self.pseudo_period,
            chi: self.chi.clone(),
            euler_top: Some(self.euler_top),
            c1_sq: self.c1_sq.clone(),
            ss_delta: Some(self.ss_delta.clone()),
            ss_euler_top: self.ss_euler_top,
            degrees: self.degrees.clone(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn pseudo_period(&self) -> u64 {
        self.pseudo_period
    }

    pub fn chi(&self) -> &Rational {
        &self.chi
    }

    pub fn euler_top(&self) -> i64 {
        self.euler_top
    }

    pub fn c1_sq(&self) -> Option<&Rational> {
        self.c1_sq.as_ref()
    }

    pub fn ss_delta(&self) -> &[u64] {
        &self.ss_delta
    }

    pub fn ss_euler_top_override(&self) -> Option<i64> {
        self.ss_euler_top
    }

    pub fn degrees(&self) -> &BTreeMap<String, Rational> {
        &self.degrees
    }

    pub fn degree(&self, key: &str) -> Option<&Rational> {
        self.degrees.get(key)
    }

    fn smooth_euler(&self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }

    /// `e_top(F^) - (2 - 2g)` for the semistable fiber.
    pub fn ss_euler_excess(&self) -> Rational {
        match self.ss_euler_top {
            Some(e) => Rational::from(e - self.smooth_euler()),
            None => Rational::from(self.ss_delta.iter().sum::<u64>()),
        }
    }

    /// `e_F = (e_top(F) - (2 - 2g)) - (e_top(F^) - (2 - 2g)) / N`.
    pub fn euler_defect(&self) -> Rational {
        delta_local(self) - self.ss_euler_excess() / Rational::from(self.pseudo_period)
    }
}

fn check_genus(rep: &DivisorRep, germ: &FiberGerm) -> Result<(), Error> {
    if rep.genus() != germ.genus {
        return Err(Error::GenusMismatch {
            left: rep.genus(),
            right: germ.genus,
        });
    }
    Ok(())
}

/// The degree of `rep`'s divisor on the semistable reduction of `germ`.
pub fn rep_degree(rep: &DivisorRep, germ: &FiberGerm) -> Result<Rational, Error> {
    match rep.degree_key() {
        None => Ok(Rational::zero()),
        Some(key) => germ
            .degree(key)
            .cloned()
            .ok_or_else(|| Error::MissingDegree(key.to_string())),
    }
}

/// `lambda_D(F^)` with an explicitly supplied divisor degree.
pub fn lambda_hat_with_degree(
    rep: &DivisorRep,
    germ: &FiberGerm,
    degree: &Rational,
) -> Result<Rational, Error> {
    check_genus(rep, germ)?;
    let boundary: Rational = rep
        .b()
        .iter()
        .zip(&germ.ss_delta)
        .map(|(b, &d)| b * Rational::from(d))
        .sum();
    (degree + boundary)
        .checked_div(rep.a())
        .ok_or(Error::ZeroLambdaCoefficient)
}

/// `lambda_D(F^) = (D(F^) + sum b_i delta_i(F^)) / a`.
pub fn lambda_hat(rep: &DivisorRep, germ: &FiberGerm) -> Result<Rational, Error> {
    check_genus(rep, germ)?;
    lambda_hat_with_degree(rep, germ, &rep_degree(rep, germ)?)
}

/// `lambda_D(F) = chi_F + lambda_D(F^) / N`.
pub fn lambda_local(rep: &DivisorRep, germ: &FiberGerm) -> Result<Rational, Error> {
    Ok(&germ.chi + lambda_hat(rep, germ)? / Rational::from(germ.pseudo_period))
}

/// `delta(F) = e_top(F) - (2 - 2g)`; independent of `N` and of the
/// semistable data.
pub fn delta_local(germ: &FiberGerm) -> Rational {
    Rational::from(germ.euler_top - germ.smooth_euler())
}

/// `sigma_D(F) = 4 lambda_D(F) - delta(F)`.
pub fn sigma_local(rep: &DivisorRep, germ: &FiberGerm) -> Result<Rational, Error> {
    Ok(Rational::from(4) * lambda_local(rep, germ)? - delta_local(germ))
}

fn require_genus_two(germ: &FiberGerm) -> Result<(), Error> {
    if germ.genus != 2 {
        Err(Error::NotGenusTwo(germ.genus))
    } else {
        Ok(())
    }
}

/// The genus-2 Hodge localization `chi_F + (delta_0(F^) + 2 delta_1(F^)) / (10 N)`.
pub fn lambda_g2(germ: &FiberGerm) -> Result<Rational, Error> {
    require_genus_two(germ)?;
    let ss = Rational::from(germ.ss_delta[0] + 2 * germ.ss_delta[1]);
    Ok(&germ.chi + ss / Rational::from(10 * germ.pseudo_period))
}

/// `Ind(F) = 10 lambda(F) - delta(F)` for genus-2 germs.
///
/// Geometric germs have `Ind >= 0`; a negative value is returned as-is, see
/// [`horikawa_warning`].
pub fn horikawa_index_g2(germ: &FiberGerm) -> Result<Rational, Error> {
    Ok(Rational::from(10) * lambda_g2(germ)? - delta_local(germ))
}

pub fn horikawa_warning(value: &Rational, germ_name: Option<&str>) -> Option<Warning> {
    value.is_negative().then(|| Warning::NegativeHorikawaIndex {
        germ: germ_name.map(str::to_string),
        value: value.clone(),
    })
}

/// `Lsd = 4 chi - e`. When `c1_sq` is given, checks `12 chi = c1^2 + e`,
/// which is equivalent to `(c1^2 - 2e) / 3 = 4 chi - e`.
pub fn lsd_from_invariants(
    chi: &Rational,
    euler: &Rational,
    c1_sq: Option<&Rational>,
) -> Result<Rational, Error> {
    let lsd = Rational::from(4) * chi - euler;
    if let Some(c1_sq) = c1_sq {
        let via_c1 = (c1_sq - Rational::from(2) * euler) / Rational::from(3);
        if via_c1 != lsd {
            return Err(Error::LocalNoether {
                residual: local_noether_residual(chi, euler, c1_sq),
            });
        }
    }
    Ok(lsd)
}

/// `(c1^2 + e) - 12 chi`.
pub fn local_noether_residual(chi: &Rational, euler: &Rational, c1_sq: &Rational) -> Rational {
    c1_sq + euler - Rational::from(12) * chi
}

/// The local signature defect `4 chi_F - e_F`, cross-checked against
/// `(c1^2(F) - 2 e_F) / 3` when `c1^2(F)` is present.
pub fn local_signature_defect(germ: &FiberGerm) -> Result<Rational, Error> {
    lsd_from_invariants(&germ.chi, &germ.euler_defect(), germ.c1_sq.as_ref())
}

/// All local invariants of one germ for one representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalProfile {
    pub lambda_d: Rational,
    pub delta: Rational,
    pub sigma_d: Rational,
    pub horikawa: Option<Rational>,
    pub lsd: Rational,
    /// `(c1^2 + e_F) - 12 chi_F`, when `c1^2` is known.
    pub local_noether_residual: Option<Rational>,
}

impl LocalProfile {
    pub fn compute(rep: &DivisorRep, germ: &FiberGerm) -> Result<Self, Error> {
        let lambda_d = lambda_local(rep, germ)?;
        let delta = delta_local(germ);
        let sigma_d = Rational::from(4) * &lambda_d - &delta;
        let horikawa = if germ.genus == 2 {
            Some(horikawa_index_g2(germ)?)
        } else {
            None
        };
        let euler = germ.euler_defect();
        let lsd = Rational::from(4) * &germ.chi - &euler;
        let local_noether_residual = germ
            .c1_sq
            .as_ref()
            .map(|c1| local_noether_residual(&germ.chi, &euler, c1));
        Ok(LocalProfile {
            lambda_d,
            delta,
            sigma_d,
            horikawa,
            lsd,
            local_noether_residual,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, BiellipticRep, CatalogName};
    use proptest::prelude::*;

    fn rq(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    fn rep(g: u32, a: i64, b: &[i64], key: Option<&str>) -> DivisorRep {
        DivisorRep::new(
            g,
            a.into(),
            b.iter().map(|&x| Rational::from(x)).collect(),
            key.map(str::to_string),
        )
        .unwrap()
    }

    fn nodal_g3() -> FiberGerm {
        FiberGerm::builder(3)
            .euler_top(-3)
            .ss_delta(vec![1, 0])
            .degree("HYPERELLIPTIC_G3", rq(0, 1))
            .degree("HYPERFLEX", rq(0, 1))
            .build()
            .unwrap()
    }

    fn hyperflex_g3() -> FiberGerm {
        FiberGerm::builder(3)
            .degree("HYPERELLIPTIC_G3", rq(0, 1))
            .degree("HYPERFLEX", rq(1, 1))
            .build()
            .unwrap()
    }

    fn h3() -> DivisorRep {
        catalog::entry(CatalogName::HyperellipticG3, 3).unwrap().default_rep
    }

    fn hf() -> DivisorRep {
        catalog::entry(CatalogName::Hyperflex, 3).unwrap().default_rep
    }

    fn g2(delta0: u64, delta1: u64, euler: i64) -> FiberGerm {
        FiberGerm::builder(2)
            .euler_top(euler)
            .ss_delta(vec![delta0, delta1])
            .degree("BIELLIPTIC_G2", rq(0, 1))
            .build()
            .unwrap()
    }

    #[test]
    fn builder_validation() {
        assert_eq!(FiberGerm::builder(1).build(), Err(Error::GenusTooSmall(1)));
        assert_eq!(
            FiberGerm::builder(3).pseudo_period(0).build(),
            Err(Error::ZeroPseudoPeriod)
        );
        assert!(matches!(
            FiberGerm::builder(3).ss_delta(vec![1]).build(),
            Err(Error::BoundaryLength { .. })
        ));
        assert!(matches!(
            FiberGerm::builder(3).degree("X", rq(-1, 2)).build(),
            Err(Error::NegativeDegree { .. })
        ));
        let smooth = FiberGerm::builder(4).build().unwrap();
        assert_eq!(smooth.euler_top(), -6);
        assert_eq!(smooth.ss_delta(), &[0, 0, 0]);
    }

    #[test]
    fn lambda_hat_examples() {
        assert_eq!(lambda_hat(&h3(), &nodal_g3()).unwrap(), rq(1, 9));
        assert_eq!(lambda_hat(&hf(), &hyperflex_g3()).unwrap(), rq(1, 308));
        let zero = FiberGerm::builder(3).degree("HYPERFLEX", rq(0, 1)).build().unwrap();
        assert_eq!(lambda_hat(&hf(), &zero).unwrap(), rq(0, 1));
    }

    #[test]
    fn lambda_hat_errors() {
        let bare = FiberGerm::builder(3).build().unwrap();
        assert_eq!(
            lambda_hat(&hf(), &bare),
            Err(Error::MissingDegree("HYPERFLEX".into()))
        );
        assert!(matches!(
            lambda_hat(&catalog::standard_g2_rep(), &bare),
            Err(Error::GenusMismatch { .. })
        ));
        // The zero divisor needs no degree.
        let g2_bare = FiberGerm::builder(2).ss_delta(vec![1, 0]).build().unwrap();
        assert_eq!(lambda_hat(&catalog::standard_g2_rep(), &g2_bare).unwrap(), rq(1, 10));
    }

    #[test]
    fn lambda_local_examples() {
        assert_eq!(lambda_local(&hf(), &nodal_g3()).unwrap(), rq(8, 77));
        let smooth = FiberGerm::builder(3).degree("HYPERFLEX", rq(0, 1)).build().unwrap();
        assert_eq!(lambda_local(&hf(), &smooth).unwrap(), rq(0, 1));
        // 1 + ((4 + 1*2 + 2*1) / 10) / 3 = 1 + 4/15
        let synthetic = FiberGerm::builder(2)
            .pseudo_period(3)
            .chi(rq(1, 1))
            .ss_delta(vec![2, 1])
            .degree("D", rq(4, 1))
            .build()
            .unwrap();
        let r = rep(2, 10, &[1, 2], Some("D"));
        assert_eq!(lambda_local(&r, &synthetic).unwrap(), rq(19, 15));
    }

    #[test]
    fn delta_local_examples() {
        assert_eq!(delta_local(&nodal_g3()), rq(1, 1));
        assert_eq!(delta_local(&FiberGerm::builder(5).build().unwrap()), rq(0, 1));
        // Two elliptic curves (e = 0 each) meeting in one node: 0 + 0 - 1.
        assert_eq!(delta_local(&g2(0, 1, -1)), rq(1, 1));
    }

    #[test]
    fn delta_local_ignores_reduction_data() {
        let a = g2(0, 1, -1);
        let b = a.to_builder().pseudo_period(6).ss_delta(vec![3, 2]).build().unwrap();
        assert_eq!(delta_local(&a), delta_local(&b));
    }

    #[test]
    fn sigma_local_examples() {
        assert_eq!(sigma_local(&h3(), &nodal_g3()).unwrap(), rq(-5, 9));
        assert_eq!(sigma_local(&h3(), &hyperflex_g3()).unwrap(), rq(0, 1));
        assert_eq!(sigma_local(&hf(), &hyperflex_g3()).unwrap(), rq(1, 77));
        assert_eq!(sigma_local(&hf(), &nodal_g3()).unwrap(), rq(-45, 77));
        let rep1 = catalog::bielliptic_g2_rep(BiellipticRep::Rep1);
        assert_eq!(sigma_local(&rep1, &g2(0, 1, -1)).unwrap(), rq(-9, 5));
    }

    #[test]
    fn genus_two_hodge_and_horikawa() {
        let f0 = g2(1, 0, -1);
        let f1 = g2(0, 1, -1);
        let smooth = g2(0, 0, -2);
        assert_eq!(lambda_g2(&f0).unwrap(), rq(1, 10));
        assert_eq!(lambda_g2(&f1).unwrap(), rq(1, 5));
        assert_eq!(lambda_g2(&smooth).unwrap(), rq(0, 1));
        assert_eq!(horikawa_index_g2(&f0).unwrap(), rq(0, 1));
        assert_eq!(horikawa_index_g2(&f1).unwrap(), rq(1, 1));
        assert_eq!(horikawa_index_g2(&smooth).unwrap(), rq(0, 1));
        assert_eq!(lambda_g2(&nodal_g3()), Err(Error::NotGenusTwo(3)));
        for germ in [&f0, &f1, &smooth] {
            assert_eq!(
                lambda_local(&catalog::standard_g2_rep(), germ).unwrap(),
                lambda_g2(germ).unwrap()
            );
        }
    }

    #[test]
    fn negative_horikawa_is_a_warning() {
        // delta(F) = 3 with no semistable boundary: Ind = -3.
        let odd = g2(0, 0, 1);
        let ind = horikawa_index_g2(&odd).unwrap();
        assert_eq!(ind, rq(-3, 1));
        assert!(horikawa_warning(&ind, Some("odd")).is_some());
        assert!(horikawa_warning(&rq(0, 1), None).is_none());
    }

    #[test]
    fn lsd_examples() {
        let semistable = FiberGerm::builder(3).euler_top(-3).ss_delta(vec![1, 0]).build().unwrap();
        assert_eq!(semistable.euler_defect(), rq(0, 1));
        assert_eq!(local_signature_defect(&semistable).unwrap(), rq(0, 1));
        assert_eq!(
            lsd_from_invariants(&rq(0, 1), &rq(0, 1), Some(&rq(0, 1))).unwrap(),
            rq(0, 1)
        );
        assert_eq!(
            lsd_from_invariants(&rq(1, 1), &rq(2, 1), Some(&rq(10, 1))).unwrap(),
            rq(2, 1)
        );
        assert_eq!(
            lsd_from_invariants(&rq(1, 1), &rq(2, 1), Some(&rq(11, 1))),
            Err(Error::LocalNoether { residual: rq(1, 1) })
        );
    }

    #[test]
    fn euler_defect_bookkeeping() {
        // Cusp-like germ: e_top(F) = -3 in genus 2, N = 6, semistable fiber
        // with one node's worth of excess.
        let g = FiberGerm::builder(2)
            .pseudo_period(6)
            .euler_top(-3)
            .ss_delta(vec![1, 0])
            .build()
            .unwrap();
        assert_eq!(g.euler_defect(), rq(-1, 1) - rq(1, 6));
        let overridden = g.to_builder().ss_euler_top(0).build().unwrap();
        assert_eq!(overridden.euler_defect(), rq(-1, 1) - rq(2, 6));
    }

    #[test]
    fn profile_consistency() {
        let p = LocalProfile::compute(&hf(), &nodal_g3()).unwrap();
        assert_eq!(p.sigma_d, rq(4, 1) * &p.lambda_d - &p.delta);
        assert_eq!(p.horikawa, None);
        assert_eq!(p.lsd, rq(0, 1));
        let p2 = LocalProfile::compute(&catalog::standard_g2_rep(), &g2(0, 1, -1)).unwrap();
        assert_eq!(p2.horikawa, Some(rq(1, 1)));
    }

    fn arb_q() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..30).prop_map(|(p, q)| Rational::frac(p, q))
    }

    fn arb_nonzero_q() -> impl Strategy<Value = Rational> {
        arb_q().prop_filter("nonzero", |x| !x.is_zero())
    }

    proptest! {
        #[test]
        fn scaling_invariance(
            a in arb_nonzero_q(),
            b in prop::collection::vec(arb_q(), 2),
            deg in arb_q(),
            c in arb_nonzero_q(),
            ss in prop::collection::vec(0u64..5, 2),
        ) {
            let r = DivisorRep::new(3, a, b, None).unwrap();
            let germ = FiberGerm::builder(3).ss_delta(ss).build().unwrap();
            let base = lambda_hat_with_degree(&r, &germ, &deg).unwrap();
            let scaled = lambda_hat_with_degree(&r.scaled(&c).unwrap(), &germ, &(&c * &deg)).unwrap();
            prop_assert_eq!(base, scaled);
        }

        #[test]
        fn sigma_minus_horikawa(
            chi in arb_q(),
            n in 1u64..12,
            e in -10i64..10,
            d0 in 0u64..6,
            d1 in 0u64..6,
        ) {
            let germ = FiberGerm::builder(2)
                .chi(chi)
                .pseudo_period(n)
                .euler_top(e)
                .ss_delta(vec![d0, d1])
                .build()
                .unwrap();
            let sigma = sigma_local(&catalog::standard_g2_rep(), &germ).unwrap();
            let ind = horikawa_index_g2(&germ).unwrap();
            prop_assert_eq!(sigma - ind, Rational::from(-6) * lambda_g2(&germ).unwrap());
        }

        #[test]
        fn prop1_forms_agree(chi in arb_q(), e in arb_q()) {
            let c1 = Rational::from(12) * &chi - &e;
            let lsd = lsd_from_invariants(&chi, &e, Some(&c1)).unwrap();
            prop_assert_eq!(lsd.clone(), (c1 - Rational::from(2) * &e) / Rational::from(3));
            prop_assert_eq!(lsd, Rational::from(4) * &chi - &e);
        }
    }
}
