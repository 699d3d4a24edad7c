use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::rational::{to_plain, Rational};

/// The monomial `q_beta u^e`, with `beta` the multiset of `q` indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub q: Partition,
    pub u: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            q: Partition::empty(),
            u: 0,
        }
    }
}

/// Sparse polynomial in `q_1, q_2, ...` and `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl QuPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c q_j`.
    pub fn q(j: u32, c: Rational) -> Self {
        Self::term(
            Monomial {
                q: Partition::single(j),
                u: 0,
            },
            c,
        )
    }

    /// `u`.
    pub fn u() -> Self {
        Self::term(
            Monomial {
                q: Partition::empty(),
                u: 1,
            },
            Rational::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The scalar value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Sets `u = value`.
    pub fn at_u(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let factor = num_traits::pow(value.clone(), m.u as usize);
            out.add_term(
                Monomial {
                    q: m.q.clone(),
                    u: 0,
                },
                c * factor,
            );
        }
        out
    }

    /// `d/du`.
    pub fn du(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.u > 0 {
                out.add_term(
                    Monomial {
                        q: m.q.clone(),
                        u: m.u - 1,
                    },
                    c * Rational::from_integer(m.u.into()),
                );
            }
        }
        out
    }
}

impl Add for &QuPoly {
    type Output = QuPoly;
    fn add(self, rhs: &QuPoly) -> QuPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &QuPoly {
    type Output = QuPoly;
    fn neg(self) -> QuPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &QuPoly {
    type Output = QuPoly;
    fn sub(self, rhs: &QuPoly) -> QuPoly {
        self + &(-rhs)
    }
}

impl Mul for &QuPoly {
    type Output = QuPoly;
    fn mul(self, rhs: &QuPoly) -> QuPoly {
        let mut out = QuPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = Monomial {
                    q: ma.q.union(&mb.q),
                    u: ma.u + mb.u,
                };
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for QuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", to_plain(c))?;
            for p in m.q.parts() {
                write!(f, "*q{p}")?;
            }
            if m.u > 0 {
                write!(f, "*u^{}", m.u)?;
            }
        }
        Ok(())
    }
}
