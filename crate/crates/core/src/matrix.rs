//! Square matrices with polynomial entries.
//!
//! The meaning of rows and columns depends on the caller: operator matrices
//! act on column coordinate vectors, basis changes store one new basis
//! vector per row.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::scalars::{int, Assignment, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![Polynomial::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn diagonal(diag: impl IntoIterator<Item = Polynomial>) -> Self {
        let diag: Vec<_> = diag.into_iter().collect();
        let mut m = Self::zero(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Polynomial] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn column(&self, col: usize) -> Vec<Polynomial> {
        (0..self.n).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Polynomial::is_constant)
    }

    pub fn scale(&self, c: &Polynomial) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Polynomial {
        let mut t = Polynomial::zero();
        for i in 0..self.n {
            t += self.get(i, i);
        }
        t
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &Element) -> Result<Element> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.dim(),
            });
        }
        let mut out = vec![Polynomial::zero(); self.n];
        for (c, x) in v.coords().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                slot.add_scaled(self.get(r, c), x);
            }
        }
        Ok(Element::from_coords(out))
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.n];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                slot.add_scaled(x, self.get(r, c));
            }
        }
        out
    }

    pub fn substitute(&self, assignment: &Assignment) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.substitute(assignment)).collect(),
        }
    }

    /// Determinant and adjugate by the Faddeev–LeVerrier recurrence.
    ///
    /// The recurrence divides only by the integers `1..=n`, so it stays inside
    /// polynomials with rational coefficients.
    pub fn det_and_adjugate(&self) -> (Polynomial, Matrix) {
        let n = self.n;
        if n == 0 {
            return (Polynomial::one(), Matrix::zero(0));
        }
        // m_k = A m_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A m_k) / k
        let id = Matrix::identity(n);
        let mut m = Matrix::zero(n);
        let mut c = Polynomial::one();
        for k in 1..=n {
            m = &(self * &m) + &id.scale(&c);
            c = (self * &m).trace().scale(&Rational::new((-1).into(), (k as i64).into()));
        }
        // A m_n = -c_0 I and c_0 = (-1)^n det A.
        let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
        let det = c.scale(&sign);
        let adj = m.scale(&Polynomial::constant(-sign));
        (det, adj)
    }

    /// Exact inverse, defined when the determinant is a nonzero constant.
    pub fn inverse(&self) -> Result<Matrix> {
        let (det, adj) = self.det_and_adjugate();
        match det.to_constant() {
            Some(d) if !d.is_zero() => Ok(adj.scale(&Polynomial::constant(d.recip()))),
            _ => Err(Error::SingularChange(det.to_string())),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c].add_scaled(a, b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
