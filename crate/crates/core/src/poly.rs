//! Truncated polynomials `Q[h]/(h^N)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{format_rational, parse_rational, Rational};

/// Element of `Q[h]/(h^N)`: exactly `N` coefficients, lowest degree first.
///
/// Binary operations between different orders truncate to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    coeffs: Vec<Rational>,
}

impl TruncPoly {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        TruncPoly { coeffs: vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        TruncPoly::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut p = TruncPoly::zero(order);
        p.coeffs[0] = c;
        p
    }

    /// `h^k`, zero when `k >= order`.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut p = TruncPoly::zero(order);
        if k < order {
            p.coeffs[k] = c;
        }
        p
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        coeffs.resize(order, Rational::zero());
        TruncPoly { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> TruncPoly {
        TruncPoly::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, s: &Rational) -> TruncPoly {
        TruncPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiplicative inverse, defined iff the constant term is nonzero.
    pub fn inverse(&self) -> Option<TruncPoly> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let n = self.order();
        let inv0 = Rational::one() / c0;
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -s * &inv0;
        }
        Some(TruncPoly { coeffs: out })
    }

    pub fn pow(&self, k: u32) -> TruncPoly {
        (0..k).fold(TruncPoly::one(self.order()), |acc, _| &acc * self)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    /// Reads coefficient strings; `order` pads or truncates.
    pub fn from_strings<S: AsRef<str>>(coeffs: &[S], order: usize) -> Result<TruncPoly, Error> {
        if order == 0 {
            return Err(Error::Parse("truncation order must be at least 1".into()));
        }
        let parsed = coeffs.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(TruncPoly::from_coeffs(parsed, order))
    }
}

fn zip_with(a: &TruncPoly, b: &TruncPoly, f: impl Fn(&Rational, &Rational) -> Rational) -> TruncPoly {
    TruncPoly { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect() }
}

impl Add for &TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncPoly { coeffs: out }
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        TruncPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncPoly {
            type Output = TruncPoly;
            fn $m(self, rhs: TruncPoly) -> TruncPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        -&self
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})h"),
                _ => format!("({c})h^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
