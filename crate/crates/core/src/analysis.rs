//! Parameter constraints, changes of basis, explicit isomorphisms and
//! invariant comparison.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{AlgebraTable, Element, Verdict};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{Assignment, Polynomial};
use crate::structure::Profile;

/// Polynomials in primitive normal form whose common zero set is the
/// parameter locus where a table satisfies the Leibniz identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    polys: BTreeSet<Polynomial>,
}

impl ConstraintSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the primitive form of `p`; zero is ignored. Returns whether the
    /// set grew.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        match p.normalize_primitive() {
            Ok(q) => self.polys.insert(q),
            Err(_) => false,
        }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.normalize_primitive()
            .map(|q| self.polys.contains(&q))
            .unwrap_or(false)
    }

    /// Members in descending polynomial order.
    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.polys.iter().rev()
    }

    /// First member that does not vanish under `assignment`.
    pub fn first_violated(&self, assignment: &Assignment) -> Result<Option<&Polynomial>> {
        for p in self.iter() {
            if !p.eval(assignment)?.is_zero() {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Whether every member vanishes under `assignment`.
    pub fn satisfied_by(&self, assignment: &Assignment) -> Result<bool> {
        Ok(self.first_violated(assignment)?.is_none())
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.iter() {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

use num_traits::Zero as _;

/// Every nonzero coordinate of every Leibniz residual, normalized.
pub fn extract_constraints(t: &AlgebraTable) -> ConstraintSet {
    let mut out = ConstraintSet::new();
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for c in t.leibniz_residual(i, j, k).coords() {
                    out.insert(c);
                }
            }
        }
    }
    out
}

/// A change of basis. Row `i` of the matrix holds the coordinates of the new
/// basis vector `b'_i` in the old basis; the determinant is a nonzero
/// constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    name: String,
    basis: Vec<String>,
    params: Vec<String>,
    matrix: Matrix,
    inverse: Matrix,
}

impl BasisChange {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: Vec<String>,
        matrix: Matrix,
    ) -> Result<Self> {
        if matrix.size() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: matrix.size(),
            });
        }
        let inverse = matrix.inverse()?;
        Ok(Self {
            name: name.into(),
            basis,
            params,
            matrix,
            inverse,
        })
    }

    pub fn identity(basis: &[String]) -> Self {
        let n = basis.len();
        Self {
            name: "identity".into(),
            basis: basis.to_vec(),
            params: Vec::new(),
            matrix: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The change equivalent to applying `self` and then `next`, where
    /// `next` is written in the basis produced by `self`.
    pub fn then(&self, next: &BasisChange) -> Result<BasisChange> {
        if next.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: next.dim(),
            });
        }
        let mut params = self.params.clone();
        for p in &next.params {
            if !params.contains(p) {
                params.push(p.clone());
            }
        }
        Ok(BasisChange {
            name: format!("{};{}", self.name, next.name),
            basis: self.basis.clone(),
            params,
            matrix: &next.matrix * &self.matrix,
            inverse: &self.inverse * &next.inverse,
        })
    }

    /// Old coordinates `u` to new coordinates `u C^-1`.
    pub fn to_new_coords(&self, v: &Element) -> Element {
        Element::from_coords(self.inverse.apply_row(v.coords()))
    }

    /// The new basis vector `b'_i` in old coordinates.
    pub fn new_vector(&self, i: usize) -> Element {
        Element::from_coords(self.matrix.row(i).to_vec())
    }
}

/// The table of `t` in the basis given by `c`; the basis symbols are kept.
pub fn apply_basis_change(t: &AlgebraTable, c: &BasisChange) -> Result<AlgebraTable> {
    if c.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: c.dim(),
        });
    }
    if c.basis() != t.basis() {
        return Err(Error::BasisMismatch(format!(
            "change is over ({}) but table is over ({})",
            c.basis().join(" "),
            t.basis().join(" ")
        )));
    }
    let mut params = t.params().to_vec();
    for p in c.params() {
        if !params.contains(p) {
            params.push(p.clone());
        }
    }
    let mut out = AlgebraTable::new(t.name(), t.basis().to_vec(), params)?;
    let rows: Vec<Element> = (0..t.dim()).map(|i| c.new_vector(i)).collect();
    for (i, u) in rows.iter().enumerate() {
        for (j, v) in rows.iter().enumerate() {
            let old = t.bracket(u, v)?;
            out.set_product(i, j, c.to_new_coords(&old))?;
        }
    }
    Ok(out)
}

/// Passes iff `c` carries the products of `t1` onto those of `t2`; a failure
/// names the first disagreeing product in the new basis.
pub fn verify_isomorphism(t1: &AlgebraTable, t2: &AlgebraTable, c: &BasisChange) -> Result<Verdict> {
    if t1.dim() != t2.dim() {
        return Err(Error::DimensionMismatch {
            expected: t1.dim(),
            found: t2.dim(),
        });
    }
    let image = apply_basis_change(t1, c)?;
    Ok(match image.first_difference(t2) {
        None => Verdict::Pass,
        Some(w) => Verdict::Fail(w),
    })
}

/// Outcome of comparing invariant profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileComparison {
    /// Some invariant differs, so the algebras are not isomorphic.
    Distinguished {
        invariants: Vec<&'static str>,
        left: Profile,
        right: Profile,
    },
    /// Every computed invariant agrees; nothing is claimed either way.
    Inconclusive { profile: Profile },
}

impl ProfileComparison {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, ProfileComparison::Distinguished { .. })
    }
}

pub fn compare_profiles(t1: &AlgebraTable, t2: &AlgebraTable) -> Result<ProfileComparison> {
    let left = t1.profile()?;
    let right = t2.profile()?;
    let invariants = left.differences(&right);
    Ok(if invariants.is_empty() {
        ProfileComparison::Inconclusive { profile: left }
    } else {
        ProfileComparison::Distinguished {
            invariants,
            left,
            right,
        }
    })
}
