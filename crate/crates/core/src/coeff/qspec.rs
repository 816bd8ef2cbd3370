use std::fmt;

use num_rational::BigRational;

use super::{Coefficient, QVar};
use crate::error::{Error, Result};
use crate::forest::Colour;

/// The `2n` deformation parameters `(q_{11}, …, q_{1n}, q_{21}, …, q_{2n})`.
///
/// Each entry is a coefficient: a rational constant, its own symbol
/// `q_{ij}`, or any other polynomial in the symbols (the cocommutative
/// family sets `q_{2j} := q_{1j}`, for instance).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSpec {
    n: u16,
    entries: Vec<Coefficient>,
}

impl QSpec {
    /// Every entry is its own indeterminate.
    pub fn symbolic(n: u16) -> Self {
        let entries = [1u8, 2]
            .into_iter()
            .flat_map(|side| (1..=n).map(move |j| Coefficient::var(QVar::new(side, j))))
            .collect();
        QSpec { n, entries }
    }

    /// From the `2n` entries in the order `q_{11}..q_{1n}, q_{21}..q_{2n}`.
    pub fn from_entries(n: u16, entries: Vec<Coefficient>) -> Result<Self> {
        if entries.len() != 2 * n as usize {
            return Err(Error::QSpecLength {
                expected: 2 * n as usize,
                got: entries.len(),
            });
        }
        Ok(QSpec { n, entries })
    }

    pub fn constants(n: u16, values: &[BigRational]) -> Result<Self> {
        Self::from_entries(n, values.iter().cloned().map(Coefficient::from_rational).collect())
    }

    pub fn integers(n: u16, values: &[i64]) -> Result<Self> {
        Self::from_entries(n, values.iter().map(|&v| Coefficient::from_integer(v)).collect())
    }

    /// `(q11, q21) = (1, 0)` on one colour.
    pub fn connes_kreimer() -> Self {
        Self::integers(1, &[1, 0]).expect("two entries")
    }

    /// `q_{1j} = 1` for `j ∈ p`, otherwise 0; `q_{2j} = 0`.
    pub fn indicator(n: u16, p: &[Colour]) -> Self {
        let mut entries = vec![Coefficient::zero(); 2 * n as usize];
        for c in p {
            entries[c.index()] = Coefficient::one();
        }
        QSpec { n, entries }
    }

    /// Symbolic with `q_{2j}` identified with `q_{1j}`.
    pub fn symmetric_point(n: u16) -> Self {
        let first: Vec<Coefficient> = (1..=n).map(|j| Coefficient::var(QVar::new(1, j))).collect();
        let entries = first.iter().chain(first.iter()).cloned().collect();
        QSpec { n, entries }
    }

    /// Parses `sym` (all symbolic) or a comma-separated list of `2n`
    /// entries, each a rational literal or `sym`.
    pub fn parse(s: &str, n: u16) -> Result<Self> {
        let s = s.trim();
        if s == "sym" {
            return Ok(Self::symbolic(n));
        }
        let mut entries = Vec::new();
        let mut offset = 0;
        for (k, item) in s.split(',').enumerate() {
            let item_trim = item.trim();
            let side = if k < n as usize { 1 } else { 2 };
            let colour = (k % n.max(1) as usize) as u16 + 1;
            let entry = if item_trim == "sym" {
                Coefficient::var(QVar::new(side, colour))
            } else {
                let c: Coefficient = item_trim.parse().map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: offset + pos + (item.len() - item.trim_start().len()),
                        msg,
                    },
                    other => other,
                })?;
                if c.as_rational().is_none() {
                    return Err(Error::parse(offset, "q entries must be rational literals or 'sym'"));
                }
                c
            };
            entries.push(entry);
            offset += item.len() + 1;
        }
        Self::from_entries(n, entries)
    }

    pub fn colour_count(&self) -> u16 {
        self.n
    }

    /// Entry `q_{side,colour}`.
    pub fn entry(&self, side: u8, colour: Colour) -> &Coefficient {
        debug_assert!(side == 1 || side == 2);
        &self.entries[(side as usize - 1) * self.n as usize + colour.index()]
    }

    pub fn entries(&self) -> &[Coefficient] {
        &self.entries
    }

    /// `Π_j q_{1j}^{first[j]} · q_{2j}^{second[j]}`.
    pub fn power_product(&self, first: &[u32], second: &[u32]) -> Coefficient {
        let mut acc = Coefficient::one();
        for (side, exps) in [(1u8, first), (2u8, second)] {
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    acc = &acc * &self.entry(side, Colour::from_index(j)).pow(e);
                    if acc.is_zero() {
                        return acc;
                    }
                }
            }
        }
        acc
    }

    /// Substitutes this specification into a symbolic coefficient.
    pub fn specialize(&self, c: &Coefficient) -> Coefficient {
        c.substitute(|v| {
            if v.colour() <= self.n {
                self.entry(v.side(), Colour::from_index(v.colour() as usize - 1))
                    .clone()
            } else {
                Coefficient::var(v)
            }
        })
    }
}

impl fmt::Display for QSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
