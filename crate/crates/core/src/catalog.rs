//! Published rational classes of effective divisors on the moduli space of
//! stable curves.
//!
//! Coefficient polynomials are evaluated in exact arithmetic. Each
//! [`CatalogEntry`] pairs a class with a default representative, since in
//! genus 2 the localization depends on which representative is used.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::picard::{boundary_count, DivisorClass, DivisorRep};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    /// Curves with an exceptional Weierstrass point of type `g - 1`.
    EMinus,
    /// Curves with an exceptional Weierstrass point of type `g + 1`.
    EPlus,
    HyperellipticG3,
    /// Plane quartics with a hyperflex.
    Hyperflex,
    BiellipticG2,
}

impl CatalogName {
    pub const ALL: [CatalogName; 5] = [
        CatalogName::EMinus,
        CatalogName::EPlus,
        CatalogName::HyperellipticG3,
        CatalogName::Hyperflex,
        CatalogName::BiellipticG2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::EMinus => "E_MINUS",
            CatalogName::EPlus => "E_PLUS",
            CatalogName::HyperellipticG3 => "HYPERELLIPTIC_G3",
            CatalogName::Hyperflex => "HYPERFLEX",
            CatalogName::BiellipticG2 => "BIELLIPTIC_G2",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Case-insensitive; also accepts the short aliases `hyperelliptic` and
/// `bielliptic` and `-` in place of `_`.
impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let name = match norm.as_str() {
            "E_MINUS" => CatalogName::EMinus,
            "E_PLUS" => CatalogName::EPlus,
            "HYPERELLIPTIC_G3" | "HYPERELLIPTIC" => CatalogName::HyperellipticG3,
            "HYPERFLEX" => CatalogName::Hyperflex,
            "BIELLIPTIC_G2" | "BIELLIPTIC" => CatalogName::BiellipticG2,
            _ => return Err(Error::UnknownCatalogEntry(s.to_string())),
        };
        Ok(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeierstrassKind {
    Minus,
    Plus,
}

/// The two representatives of the bielliptic class used for localization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiellipticRep {
    /// `30*lambda - (3/2)*delta_0`.
    Rep0,
    /// `15*lambda + 3*delta_1`.
    Rep1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub genus: u32,
    pub class: DivisorClass,
    pub default_rep: DivisorRep,
    pub multiplicity_note: &'static str,
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// Closed-form classes of the exceptional Weierstrass divisors, `g >= 3`.
pub fn exceptional_weierstrass_class(g: u32, kind: WeierstrassKind) -> Result<DivisorClass, Error> {
    if g < 3 {
        let entry = match kind {
            WeierstrassKind::Minus => CatalogName::EMinus,
            WeierstrassKind::Plus => CatalogName::EPlus,
        };
        return Err(Error::UnsupportedGenus {
            entry: entry.to_string(),
            genus: g,
        });
    }
    // Evaluated in Rational throughout so large genera cannot overflow.
    let x = q(i64::from(g));
    let one = q(1);
    let two = q(2);
    let (lambda, delta0, per_i) = match kind {
        WeierstrassKind::Minus => (
            &x * &x * (&x - &one) * (q(3) * &x - &one) / &two,
            (&x - &one) * (&x - &one) * &x * (&x + &one) / q(6),
            &x * (&x * &x + &x - q(4)) / &two,
        ),
        WeierstrassKind::Plus => (
            (&x + &one) * (&x + &two) * (q(3) * &x * &x + q(3) * &x + &two) / &two,
            &x * (&x + &one) * (&x + &one) * (&x + &two) / q(6),
            (&x + &one) * (&x + &two) * (&x + &two) / &two,
        ),
    };
    // delta_i for i >= 1 carries the factor i(g - i).
    let mut delta = Vec::with_capacity(boundary_count(g));
    delta.push(-delta0);
    for i in 1..boundary_count(g) {
        let i = q(i as i64);
        delta.push(-(&i * (&x - &i) * &per_i));
    }
    DivisorClass::new(g, lambda, delta)
}

pub fn hyperelliptic_g3() -> DivisorClass {
    DivisorClass::from_integers(3, 9, &[-1, -3]).expect("valid genus-3 class")
}

/// `E_{3,1} - E_{3,-1}`.
pub fn hyperflex_class() -> DivisorClass {
    let plus = exceptional_weierstrass_class(3, WeierstrassKind::Plus).expect("g = 3");
    let minus = exceptional_weierstrass_class(3, WeierstrassKind::Minus).expect("g = 3");
    plus.sub(&minus).expect("same genus")
}

/// `(3/2)*delta_0 + 6*delta_1`, the bielliptic class in its normal form.
pub fn bielliptic_g2_class() -> DivisorClass {
    DivisorClass::new(2, Rational::zero(), vec![Rational::frac(3, 2), q(6)])
        .expect("valid genus-2 class")
}

pub fn bielliptic_g2_rep(kind: BiellipticRep) -> DivisorRep {
    let key = Some(CatalogName::BiellipticG2.to_string());
    let (a, b) = match kind {
        BiellipticRep::Rep0 => (q(30), vec![Rational::frac(3, 2), q(0)]),
        BiellipticRep::Rep1 => (q(15), vec![q(0), q(-3)]),
    };
    DivisorRep::new(2, a, b, key).expect("valid genus-2 rep")
}

/// `10*lambda - delta_0 - 2*delta_1` read as a representative of the zero
/// divisor. Its localization is the usual genus-2 Hodge class
/// `(delta_0 + 2*delta_1)/10` on semistable germs.
pub fn standard_g2_rep() -> DivisorRep {
    DivisorRep::new(2, q(10), vec![q(1), q(2)], None).expect("valid genus-2 rep")
}

/// The catalog entry `name` in genus `genus`.
pub fn entry(name: CatalogName, genus: u32) -> Result<CatalogEntry, Error> {
    let unsupported = || Error::UnsupportedGenus {
        entry: name.to_string(),
        genus,
    };
    let key = Some(name.to_string());
    let (class, default_rep, note) = match name {
        CatalogName::EMinus | CatalogName::EPlus => {
            let kind = if name == CatalogName::EMinus {
                WeierstrassKind::Minus
            } else {
                WeierstrassKind::Plus
            };
            let class = exceptional_weierstrass_class(genus, kind)?;
            let rep = DivisorRep::from_class(&class, key)?;
            let note = if genus == 3 && name == CatalogName::EMinus {
                "equals 8 times the hyperelliptic locus as a divisor"
            } else if genus == 3 {
                "contains 8 times the hyperelliptic locus as a subdivisor"
            } else {
                "multiplicity 1 around general points"
            };
            (class, rep, note)
        }
        CatalogName::HyperellipticG3 => {
            if genus != 3 {
                return Err(unsupported());
            }
            let class = hyperelliptic_g3();
            let rep = DivisorRep::from_class(&class, key)?;
            (class, rep, "reduced hyperelliptic locus")
        }
        CatalogName::Hyperflex => {
            if genus != 3 {
                return Err(unsupported());
            }
            let class = hyperflex_class();
            let rep = DivisorRep::from_class(&class, key)?;
            (class, rep, "multiplicity 1 around general points")
        }
        CatalogName::BiellipticG2 => {
            if genus != 2 {
                return Err(unsupported());
            }
            (
                bielliptic_g2_class(),
                bielliptic_g2_rep(BiellipticRep::Rep0),
                "irreducible; localization depends on the chosen representative",
            )
        }
    };
    Ok(CatalogEntry {
        name,
        genus,
        class,
        default_rep,
        multiplicity_note: note,
    })
}

/// Every catalog entry defined in `genus`.
pub fn entries(genus: u32) -> Result<Vec<CatalogEntry>, Error> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    Ok(CatalogName::ALL
        .iter()
        .filter_map(|&name| entry(name, genus).ok())
        .collect())
}
