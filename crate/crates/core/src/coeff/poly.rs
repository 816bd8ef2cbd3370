//! Exact polynomials over the rationals in the deformation parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::text::{parse_all, Cursor};

/// One of the `2n` indeterminates `q_{side,colour}`.
///
/// Printed as `q11`, `q23`; colours above 9 use an underscore (`q1_12`) so
/// the text form stays unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVar {
    side: u8,
    colour: u16,
}

impl QVar {
    /// `side` must be 1 or 2, `colour` at least 1.
    pub fn new(side: u8, colour: u16) -> Self {
        assert!(side == 1 || side == 2, "q-variable side must be 1 or 2");
        assert!(colour >= 1, "colours start at 1");
        QVar { side, colour }
    }

    pub fn side(self) -> u8 {
        self.side
    }

    pub fn colour(self) -> u16 {
        self.colour
    }
}

impl fmt::Display for QVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.colour < 10 {
            write!(f, "q{}{}", self.side, self.colour)
        } else {
            write!(f, "q{}_{}", self.side, self.colour)
        }
    }
}

/// A power product of q-variables, sorted by variable, no zero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(QVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: QVar) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (QVar, u32)>) -> Self {
        let mut acc: BTreeMap<QVar, u32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(QVar, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact coefficient: a polynomial with rational coefficients in the
/// q-variables. Plain rationals are the constant polynomials.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one() -> Self {
        Coefficient::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Coefficient::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coefficient::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coefficient::monomial(r, Monomial::one())
    }

    pub fn var(v: QVar) -> Self {
        Coefficient::monomial(BigRational::one(), Monomial::var(v))
    }

    pub fn monomial(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Coefficient { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The value if this coefficient is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn pow(&self, e: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> Coefficient {
        if r.is_zero() {
            return Coefficient::zero();
        }
        Coefficient {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Replaces every variable by the image under `subst`.
    pub fn substitute(&self, subst: impl Fn(QVar) -> Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut term = Coefficient::from_rational(c.clone());
            for &(v, e) in m.powers() {
                term = &term * &subst(v).pow(e);
            }
            out += term;
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Parses a single product `2/3*q11^2*q22` or a parenthesised sum; this
    /// is the coefficient syntax embedded in element expressions.
    pub(crate) fn parse_factor_chain(cur: &mut Cursor<'_>) -> Result<Coefficient> {
        let mut acc = parse_power(cur)?;
        loop {
            let save = cur.pos();
            cur.skip_ws();
            if cur.eat('*') {
                cur.skip_ws();
                acc = &acc * &parse_power(cur)?;
            } else {
                cur.reset(save);
                return Ok(acc);
            }
        }
    }

    /// Formats for embedding in an element: sums are parenthesised.
    pub(crate) fn fmt_factor(&self) -> String {
        if self.terms.len() > 1 {
            format!("({self})")
        } else {
            self.to_string()
        }
    }

    /// True when the single-term display starts with a minus sign.
    pub(crate) fn is_negative_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.is_negative())
    }
}

fn parse_expr(cur: &mut Cursor<'_>) -> Result<Coefficient> {
    cur.skip_ws();
    let mut acc = if cur.eat('-') {
        cur.skip_ws();
        -Coefficient::parse_factor_chain(cur)?
    } else {
        Coefficient::parse_factor_chain(cur)?
    };
    loop {
        cur.skip_ws();
        if cur.eat('+') {
            cur.skip_ws();
            acc += Coefficient::parse_factor_chain(cur)?;
        } else if cur.eat('-') {
            cur.skip_ws();
            acc -= Coefficient::parse_factor_chain(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_power(cur: &mut Cursor<'_>) -> Result<Coefficient> {
    let base = parse_atom(cur)?;
    if cur.eat('^') {
        let e: u32 = cur.uint()?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<Coefficient> {
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let inner = parse_expr(cur)?;
            cur.skip_ws();
            cur.expect(')')?;
            Ok(inner)
        }
        Some('-') => {
            cur.bump();
            Ok(-parse_power(cur)?)
        }
        Some('q') => {
            let start = cur.pos();
            cur.bump();
            let side: u8 = match cur.bump() {
                Some('1') => 1,
                Some('2') => 2,
                _ => return Err(Error::parse(start, "q-variable side must be 1 or 2")),
            };
            let colour: u16 = if cur.eat('_') {
                cur.uint()?
            } else {
                match cur.bump() {
                    Some(c @ '1'..='9') => c as u16 - '0' as u16,
                    _ => return Err(Error::parse(start, "q-variable needs a colour 1..9 or _N")),
                }
            };
            Ok(Coefficient::var(QVar::new(side, colour)))
        }
        Some(c) if c.is_ascii_digit() => {
            let num: BigInt = cur.digits()?.parse().expect("digits parse as BigInt");
            if cur.eat('/') {
                let pos = cur.pos();
                let den: BigInt = cur.digits()?.parse().expect("digits parse as BigInt");
                if den.is_zero() {
                    return Err(Error::parse(pos, "zero denominator"));
                }
                Ok(Coefficient::from_rational(BigRational::new(num, den)))
            } else {
                Ok(Coefficient::from_bigint(num))
            }
        }
        _ => Err(cur.error("expected a number, q-variable or '('")),
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, parse_expr)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_integer(n)
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient::from_rational(r)
    }
}

impl From<QVar> for Coefficient {
    fn from(v: QVar) -> Self {
        Coefficient::var(v)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Coefficient {
    fn add_assign(&mut self, rhs: Coefficient) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign for Coefficient {
    fn sub_assign(&mut self, rhs: Coefficient) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(mut self, rhs: Coefficient) -> Coefficient {
        self += rhs;
        self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(mut self, rhs: Coefficient) -> Coefficient {
        self -= rhs;
        self
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        *self = &*self * rhs;
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(mut self) -> Coefficient {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -self.clone()
    }
}
