//! The rational Picard group of the moduli space of stable curves, in the
//! coordinates `lambda, delta_0, ..., delta_[g/2]`.
//!
//! For `g >= 3` these classes form a free basis. In genus 2 they satisfy the
//! single relation `10*lambda = delta_0 + 2*delta_1`, and [`DivisorClass::normal_form`]
//! eliminates `lambda` to give a canonical representative.

use std::fmt;

use crate::error::Error;
use crate::rational::Rational;
use crate::warning::Warning;

/// Number of boundary divisors `delta_0 .. delta_[g/2]`.
pub fn boundary_count(genus: u32) -> usize {
    genus as usize / 2 + 1
}

fn check_genus(genus: u32) -> Result<(), Error> {
    if genus < 2 {
        Err(Error::GenusTooSmall(genus))
    } else {
        Ok(())
    }
}

fn check_length(genus: u32, found: usize) -> Result<(), Error> {
    let expected = boundary_count(genus);
    if found != expected {
        return Err(Error::BoundaryLength {
            genus,
            expected,
            found,
        });
    }
    Ok(())
}

fn check_same_genus(left: u32, right: u32) -> Result<(), Error> {
    if left != right {
        Err(Error::GenusMismatch { left, right })
    } else {
        Ok(())
    }
}

/// A rational divisor class `lambda_coeff * lambda + sum delta_coeffs[i] * delta_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    genus: u32,
    lambda: Rational,
    delta: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(genus: u32, lambda: Rational, delta: Vec<Rational>) -> Result<Self, Error> {
        check_genus(genus)?;
        check_length(genus, delta.len())?;
        Ok(DivisorClass {
            genus,
            lambda,
            delta,
        })
    }

    /// Integer coordinates; convenient for published constants.
    pub fn from_integers(genus: u32, lambda: i64, delta: &[i64]) -> Result<Self, Error> {
        DivisorClass::new(
            genus,
            lambda.into(),
            delta.iter().map(|&d| Rational::from(d)).collect(),
        )
    }

    pub fn zero(genus: u32) -> Result<Self, Error> {
        check_genus(genus)?;
        Ok(DivisorClass {
            genus,
            lambda: Rational::zero(),
            delta: vec![Rational::zero(); boundary_count(genus)],
        })
    }

    /// The Hodge class.
    pub fn hodge(genus: u32) -> Result<Self, Error> {
        let mut c = DivisorClass::zero(genus)?;
        c.lambda = Rational::one();
        Ok(c)
    }

    /// The boundary class `delta_index`.
    pub fn boundary(genus: u32, index: usize) -> Result<Self, Error> {
        let mut c = DivisorClass::zero(genus)?;
        let n = c.delta.len();
        let slot = c.delta.get_mut(index).ok_or(Error::BoundaryLength {
            genus,
            expected: n,
            found: index + 1,
        })?;
        *slot = Rational::one();
        Ok(c)
    }

    /// `10*lambda - delta_0 - 2*delta_1`, which vanishes in genus 2.
    pub fn genus_two_relation() -> Self {
        DivisorClass::from_integers(2, 10, &[-1, -2]).expect("valid genus-2 class")
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn lambda_coeff(&self) -> &Rational {
        &self.lambda
    }

    pub fn delta_coeffs(&self) -> &[Rational] {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.delta.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass, Error> {
        check_same_genus(self.genus, other.genus)?;
        Ok(DivisorClass {
            genus: self.genus,
            lambda: &self.lambda + &other.lambda,
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass, Error> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> DivisorClass {
        DivisorClass {
            genus: self.genus,
            lambda: c * &self.lambda,
            delta: self.delta.iter().map(|d| c * d).collect(),
        }
    }

    /// In genus 2, substitutes `lambda = (delta_0 + 2*delta_1)/10` so that the
    /// result has zero `lambda` coefficient. Identity in higher genus.
    pub fn normal_form(&self) -> DivisorClass {
        if self.genus != 2 || self.lambda.is_zero() {
            return self.clone();
        }
        let tenth = &self.lambda / Rational::from(10);
        DivisorClass {
            genus: 2,
            lambda: Rational::zero(),
            delta: vec![&self.delta[0] + &tenth, &self.delta[1] + &tenth * Rational::from(2)],
        }
    }

    /// Equality in the Picard group, i.e. after [`normal_form`](Self::normal_form).
    pub fn equivalent(&self, other: &DivisorClass) -> Result<bool, Error> {
        check_same_genus(self.genus, other.genus)?;
        Ok(self.normal_form() == other.normal_form())
    }
}

/// Free-function spelling of [`DivisorClass::equivalent`].
pub fn classes_equal(x: &DivisorClass, y: &DivisorClass) -> Result<bool, Error> {
    x.equivalent(y)
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    symbol: &str,
    first: &mut bool,
) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let magnitude = coeff.abs();
    let sign = if coeff.is_negative() { "-" } else { "+" };
    match (*first, coeff.is_negative()) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, _) => write!(f, " {sign} ")?,
    }
    *first = false;
    if magnitude == Rational::one() {
        write!(f, "{symbol}")
    } else if magnitude.is_integer() {
        write!(f, "{magnitude}{symbol}")
    } else {
        write!(f, "({magnitude}){symbol}")
    }
}

/// Renders as e.g. `308λ - 32δ0 - 76δ1`; the zero class prints as `0`.
impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_term(f, &self.lambda, "λ", &mut first)?;
        for (i, d) in self.delta.iter().enumerate() {
            write_term(f, d, &format!("δ{i}"), &mut first)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorClass(g={}: {})", self.genus, self)
    }
}

/// A chosen representative `a*lambda - sum b_i*delta_i` of an effective divisor.
///
/// In genus 2 different representatives of one class give different local
/// invariants, so representatives carry their own identity. `degree_key`
/// names the divisor whose intersection degrees a germ must supply; `None`
/// stands for the zero divisor, whose degree on every germ is 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DivisorRep {
    genus: u32,
    a: Rational,
    b: Vec<Rational>,
    degree_key: Option<String>,
}

impl DivisorRep {
    pub fn new(
        genus: u32,
        a: Rational,
        b: Vec<Rational>,
        degree_key: Option<String>,
    ) -> Result<Self, Error> {
        check_genus(genus)?;
        check_length(genus, b.len())?;
        if a.is_zero() {
            return Err(Error::ZeroLambdaCoefficient);
        }
        Ok(DivisorRep {
            genus,
            a,
            b,
            degree_key,
        })
    }

    /// Reads off `a = lambda_coeff`, `b_i = -delta_coeffs[i]`.
    pub fn from_class(class: &DivisorClass, degree_key: Option<String>) -> Result<Self, Error> {
        DivisorRep::new(
            class.genus,
            class.lambda.clone(),
            class.delta.iter().map(|d| -d).collect(),
            degree_key,
        )
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn degree_key(&self) -> Option<&str> {
        self.degree_key.as_deref()
    }

    pub fn to_class(&self) -> DivisorClass {
        DivisorClass {
            genus: self.genus,
            lambda: self.a.clone(),
            delta: self.b.iter().map(|b| -b).collect(),
        }
    }

    /// The representative of `c` times the divisor. Intersection degrees of
    /// the scaled divisor are `c` times the original ones.
    pub fn scaled(&self, c: &Rational) -> Result<DivisorRep, Error> {
        if c.is_zero() {
            return Err(Error::ZeroLambdaCoefficient);
        }
        Ok(DivisorRep {
            genus: self.genus,
            a: c * &self.a,
            b: self.b.iter().map(|b| c * b).collect(),
            degree_key: self.degree_key.clone(),
        })
    }

    /// One warning per `b_i <= 0`.
    pub fn warnings(&self) -> Vec<Warning> {
        self.b
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_positive())
            .map(|(index, b)| Warning::NonPositiveBoundaryCoefficient {
                index,
                value: b.clone(),
            })
            .collect()
    }
}

pub fn rep_to_class(rep: &DivisorRep) -> DivisorClass {
    rep.to_class()
}

impl fmt::Debug for DivisorRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DivisorRep(g={}, a={}, b={:?}, key={:?})",
            self.genus, self.a, self.b, self.degree_key
        )
    }
}
