//! Exact subspaces of `Q^n` kept in reduced row-echelon form.

use num_traits::{One, Zero};

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::scalars::Rational;

/// A subspace of `Q^n`, stored as its reduced row-echelon basis.
///
/// Rows are nonzero, each pivot entry is 1, pivot columns are zero in every
/// other row, and rows are sorted by pivot column. The representation is
/// therefore canonical: two subspaces are equal iff their rows are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Span of constant elements; parametric coordinates are an error.
    pub fn span_elements<'a>(
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a Element>,
    ) -> Result<Self> {
        let mut s = Self::zero(ambient);
        for v in vectors {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.dim(),
                });
            }
            let coords = v.to_rationals().ok_or_else(|| Error::Parametric {
                operation: "span",
                params: v.params().into_iter().collect::<Vec<_>>().join(" "),
            })?;
            s.insert(coords);
        }
        Ok(s)
    }

    /// Null space of the linear map whose matrix has the given rows.
    pub fn kernel(ambient: usize, equations: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rowspace = Self::span(ambient, equations);
        let free = rowspace.non_pivot_columns();
        let basis = free.iter().map(|&f| {
            let mut v = unit(ambient, f);
            for (row, &p) in rowspace.rows.iter().zip(&rowspace.pivots) {
                v[p] = -row[f].clone();
            }
            v
        });
        Self::span(ambient, basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row_elements(&self) -> Vec<Element> {
        self.rows
            .iter()
            .map(|r| Element::from_rationals(r.iter().cloned()))
            .collect()
    }

    /// Columns without a pivot, in increasing order.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    /// `v` minus its components along the pivot rows; zero at every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        debug_assert!(v[p].is_one());
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
