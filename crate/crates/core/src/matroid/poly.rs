use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactlinalg::Int;

/// Integer polynomial in `q`, coefficients in increasing degree, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Int>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Polynomial {
        Self::new(c.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: vec![] }
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Polynomial {
        let mut c = vec![Int::zero(); k + 1];
        c[k] = Int::one();
        Polynomial { coeffs: c }
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &Int) -> Int {
        self.coeffs.iter().rev().fold(Int::zero(), |acc, c| acc * q + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k) - other.coefficient(k)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    /// Quotient and remainder of division by `q − a`.
    pub fn div_by_linear(&self, a: &Int) -> (Polynomial, Int) {
        if self.is_zero() {
            return (Self::zero(), Int::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Int::zero(); n - 1];
        let mut carry = Int::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * a;
            if k == 0 {
                return (Self::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl fmt::Display for Polynomial {
    /// `q^4 - 5q^3 + 8q^2 - 4q`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            if a.is_one() && k > 0 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}{var}")?;
            }
        }
        Ok(())
    }
}
