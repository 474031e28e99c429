//! Exact scalars: big rationals and sparse multivariate polynomials over them.
//!
//! Every structure constant in this crate is a [`Polynomial`] in the declared
//! parameters of its table. Constant tables are the degenerate case where
//! every polynomial has at most the unit monomial.
//!
//! Monomials are ordered graded-lexicographically, with parameter names
//! compared as strings: total degree decides first, and among equal degrees
//! the exponent of the alphabetically smallest parameter decides (larger
//! exponent is greater). Under this order `a*l > l > 1`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Values for (some of) the parameters of a polynomial.
pub type Assignment = BTreeMap<String, Rational>;

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Product of parameters with positive exponents, sorted by parameter name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(String, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self {
            factors: vec![(name.into(), 1)],
        }
    }

    /// Builds a monomial from arbitrary `(name, exponent)` pairs, merging
    /// repeated names and dropping zero exponents.
    pub fn from_factors<S: Into<String>>(factors: impl IntoIterator<Item = (S, u32)>) -> Self {
        let mut merged: BTreeMap<String, u32> = BTreeMap::new();
        for (name, exp) in factors {
            *merged.entry(name.into()).or_default() += exp;
        }
        Self {
            factors: merged.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.factors
            .binary_search_by(|(n, _)| n.as_str().cmp(name))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Splits the monomial into the part covered by `assignment` (evaluated)
    /// and the part left symbolic.
    fn partial_eval(&self, assignment: &Assignment) -> (Rational, Monomial) {
        let mut value = Rational::one();
        let mut rest = Vec::new();
        for (name, exp) in &self.factors {
            match assignment.get(name) {
                Some(v) => value *= num_traits::pow(v.clone(), *exp as usize),
                None => rest.push((name.clone(), *exp)),
            }
        }
        (value, Monomial { factors: rest })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                    // `a` occurs in self but not in other.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (idx, (name, exp)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients; the scalar type of every table.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial, `None` if any parameter occurs.
    pub fn to_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Names of all parameters occurring with nonzero coefficient.
    pub fn params(&self) -> BTreeSet<&str> {
        self.terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|(n, _)| n.as_str()))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Polynomial, other: &Polynomial) {
        for (m1, c1) in &c.terms {
            for (m2, c2) in &other.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    /// Exact value under a full assignment.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let (v, rest) = m.partial_eval(assignment);
            if let Some((name, _)) = rest.factors.first() {
                return Err(Error::MissingParameter(name.clone()));
            }
            total += c * v;
        }
        Ok(total)
    }

    /// Substitutes the assigned parameters, leaving the others symbolic.
    pub fn substitute(&self, assignment: &Assignment) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (v, rest) = m.partial_eval(assignment);
            out.add_term(rest, c * v);
        }
        out
    }

    /// Canonical representative of `{c * p : c rational, c != 0}`.
    ///
    /// The result has coprime integer coefficients and a positive leading
    /// coefficient (leading = greatest monomial in graded-lex order).
    pub fn normalize_primitive(&self) -> Result<Polynomial> {
        let (_, lead) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        Ok(self.scale(&content.recip()))
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::from_int(n)
    }
}

impl Ord for Polynomial {
    /// Compares term lists from the leading term down; used only to give
    /// collections of polynomials a deterministic order.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

/// Writes `coefficient * monomial` without the sign; `trailing` is appended
/// as a further factor (used for basis symbols in element expressions).
pub(crate) fn write_unsigned_term(
    f: &mut impl fmt::Write,
    mono: &Monomial,
    coeff: &Rational,
    trailing: Option<&str>,
) -> fmt::Result {
    let abs = coeff.abs();
    let mut factors: Vec<String> = Vec::new();
    if !abs.is_one() || (mono.is_one() && trailing.is_none()) {
        factors.push(abs.to_string());
    }
    if !mono.is_one() {
        factors.push(mono.to_string());
    }
    if let Some(t) = trailing {
        factors.push(t.to_string());
    }
    f.write_str(&factors.join("*"))
}

pub(crate) fn write_sign(f: &mut impl fmt::Write, negative: bool, first: bool) -> fmt::Result {
    match (first, negative) {
        (true, true) => f.write_str("-"),
        (true, false) => Ok(()),
        (false, true) => f.write_str(" - "),
        (false, false) => f.write_str(" + "),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            write_sign(f, c.is_negative(), idx == 0)?;
            write_unsigned_term(f, m, c, None)?;
        }
        Ok(())
    }
}

/// Splits `s` (whitespace already removed) into signed term bodies.
pub(crate) fn split_signed_terms(s: &str) -> std::result::Result<Vec<(bool, &str)>, String> {
    if s.is_empty() {
        return Err("empty expression".into());
    }
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let signed = bytes[0] == b'+' || bytes[0] == b'-';
    let mut negative = bytes[0] == b'-';
    let mut start = usize::from(signed);
    for i in usize::from(signed)..bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            out.push((negative, &s[start..i]));
            negative = bytes[i] == b'-';
            start = i + 1;
        }
    }
    out.push((negative, &s[start..]));
    if out.iter().any(|(_, body)| body.is_empty()) {
        return Err(format!("missing term in `{s}`"));
    }
    Ok(out)
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_rational_factor(s: &str) -> Option<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once('/') {
        None if digits(s) => Some(Rational::from_integer(s.parse().ok()?)),
        Some((n, d)) if digits(n) && digits(d) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n.parse().ok()?, d))
        }
        _ => None,
    }
}

/// Parses `[rational*]name[^INT]*...` (the factors of one unsigned term).
/// Only the first factor may be a rational.
pub(crate) fn parse_scalar_factors(
    factors: &[&str],
) -> std::result::Result<(Rational, Monomial), String> {
    let mut coeff = Rational::one();
    let mut mono = Vec::new();
    for (idx, factor) in factors.iter().enumerate() {
        if idx == 0 {
            if let Some(r) = parse_rational_factor(factor) {
                coeff = r;
                continue;
            }
        }
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp: u32 = exp
                    .parse()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?;
                (name, exp)
            }
            None => (*factor, 1),
        };
        if !is_identifier(name) {
            return Err(format!("bad factor `{factor}`"));
        }
        mono.push((name, exp));
    }
    Ok((coeff, Monomial::from_factors(mono)))
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the scalar text syntax, e.g. `1/2*l`, `-3*l*a^2 + 7`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |message: String| Error::Scalar {
            text: s.to_string(),
            message,
        };
        let mut out = Polynomial::zero();
        for (negative, body) in split_signed_terms(&compact).map_err(bad)? {
            let factors: Vec<&str> = body.split('*').collect();
            let (c, m) = parse_scalar_factors(&factors).map_err(bad)?;
            out.add_term(m, if negative { -c } else { c });
        }
        Ok(out)
    }
}

/// Parses a constant scalar such as `-7/3`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let p: Polynomial = s.parse()?;
    p.to_constant().ok_or_else(|| Error::Scalar {
        text: s.to_string(),
        message: "expected a rational constant".into(),
    })
}
