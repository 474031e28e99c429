//! Elements, structure-constant tables and the bracket.
//!
//! A table stores `[b_i, b_j]` for every ordered pair of basis vectors. The
//! bracket of arbitrary elements is the bilinear extension.
//!
//! Right multiplication `R_a : v -> [v, a]` is stored as an operator matrix
//! acting on column coordinates, so `R_z R_y` means "first `R_y`, then
//! `R_z`". In this convention the Leibniz identity reads
//! `R_[y,z] = R_z R_y - R_y R_z`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{write_sign, write_unsigned_term, Assignment, Polynomial, Rational};

/// Coordinate vector over the basis of some table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Polynomial>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Polynomial::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Polynomial::one();
        e
    }

    pub fn from_coords(coords: Vec<Polynomial>) -> Self {
        Self { coords }
    }

    pub fn from_rationals(coords: impl IntoIterator<Item = Rational>) -> Self {
        Self {
            coords: coords.into_iter().map(Polynomial::constant).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Polynomial {
        &self.coords[i]
    }

    pub fn set_coord(&mut self, i: usize, value: Polynomial) {
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coords.iter().all(Polynomial::is_constant)
    }

    /// Rational coordinates, `None` if any coordinate involves a parameter.
    pub fn to_rationals(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(Polynomial::to_constant).collect()
    }

    pub fn scale(&self, c: &Polynomial) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Polynomial, other: &Element) {
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                x.add_scaled(c, y);
            }
        }
    }

    pub fn substitute(&self, assignment: &Assignment) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x.substitute(assignment)).collect(),
        }
    }

    pub fn params(&self) -> BTreeSet<&str> {
        self.coords.iter().flat_map(Polynomial::params).collect()
    }

    /// Renders the element as an expression over `basis`, e.g. `2*e - l*x0`.
    pub fn display<'a>(&'a self, basis: &'a [String]) -> ElementDisplay<'a> {
        ElementDisplay {
            element: self,
            basis,
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

pub struct ElementDisplay<'a> {
    element: &'a Element,
    basis: &'a [String],
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coord, name) in self.element.coords.iter().zip(self.basis) {
            for (mono, c) in coord.terms() {
                write_sign(f, c < &Rational::zero(), first)?;
                write_unsigned_term(f, mono, c, Some(name))?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Outcome of an identity check on a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

/// The first basis tuple on which a check failed, with the offending value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j] != 0`
    Leibniz { triple: [usize; 3], residual: Element },
    /// `[b_i,b_j] + [b_j,b_i] != 0`
    Antisymmetry { pair: [usize; 2], sum: Element },
    /// `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] != 0`
    Jacobi { triple: [usize; 3], value: Element },
    /// Two tables disagree on `[b_i,b_j]`.
    Product {
        pair: [usize; 2],
        expected: Element,
        found: Element,
    },
}

impl Witness {
    pub fn describe(&self, basis: &[String]) -> String {
        let n = |i: &usize| basis[*i].as_str();
        match self {
            Witness::Leibniz { triple: [i, j, k], residual } => format!(
                "Leibniz identity fails at ({},{},{}): residual {}",
                n(i),
                n(j),
                n(k),
                residual.display(basis)
            ),
            Witness::Antisymmetry { pair: [i, j], sum } => format!(
                "[{0},{1}] + [{1},{0}] = {2}",
                n(i),
                n(j),
                sum.display(basis)
            ),
            Witness::Jacobi { triple: [i, j, k], value } => format!(
                "Jacobi identity fails at ({},{},{}): {}",
                n(i),
                n(j),
                n(k),
                value.display(basis)
            ),
            Witness::Product {
                pair: [i, j],
                expected,
                found,
            } => format!(
                "[{},{}]: expected {}, found {}",
                n(i),
                n(j),
                expected.display(basis),
                found.display(basis)
            ),
        }
    }
}

/// Structure constants of a finite-dimensional algebra over a named basis,
/// possibly depending on named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    name: String,
    params: Vec<String>,
    basis: Vec<String>,
    products: Vec<Element>,
}

impl AlgebraTable {
    /// Table with every product zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: Vec<String>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &basis {
            if !seen.insert(b.as_str()) {
                return Err(Error::BasisMismatch(format!("duplicate basis symbol `{b}`")));
            }
        }
        let mut seen_params = BTreeSet::new();
        for p in &params {
            if seen.contains(p.as_str()) {
                return Err(Error::BasisMismatch(format!(
                    "`{p}` is both a parameter and a basis symbol"
                )));
            }
            if !seen_params.insert(p.as_str()) {
                return Err(Error::BasisMismatch(format!("duplicate parameter `{p}`")));
            }
        }
        let dim = basis.len();
        Ok(Self {
            name: name.into(),
            params,
            basis,
            products: vec![Element::zero(dim); dim * dim],
        })
    }

    /// Convenience constructor from string slices.
    pub fn with_basis(name: &str, basis: &[&str], params: &[&str]) -> Result<Self> {
        Self::new(
            name,
            basis.iter().map(|s| s.to_string()).collect(),
            params.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == symbol)
    }

    /// Index of a basis symbol, as an error if unknown.
    pub fn index(&self, symbol: &str) -> Result<usize> {
        self.index_of(symbol)
            .ok_or_else(|| Error::BasisMismatch(format!("unknown basis symbol `{symbol}`")))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Basis vector by symbol. Panics on unknown symbols; meant for
    /// constructors and tests that name known bases.
    pub fn e(&self, symbol: &str) -> Element {
        let i = self
            .index_of(symbol)
            .unwrap_or_else(|| panic!("no basis symbol `{symbol}` in {}", self.name));
        self.basis_element(i)
    }

    pub fn product(&self, i: usize, j: usize) -> &Element {
        &self.products[i * self.dim() + j]
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: Element) -> Result<()> {
        self.check_element(&value)?;
        let dim = self.dim();
        self.products[i * dim + j] = value;
        Ok(())
    }

    /// Sets `[left, right]` by symbol.
    pub fn set(&mut self, left: &str, right: &str, value: Element) -> Result<()> {
        let (i, j) = (self.index(left)?, self.index(right)?);
        self.set_product(i, j, value)
    }

    fn check_element(&self, v: &Element) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        if let Some(p) = v.params().into_iter().find(|p| !self.params.iter().any(|q| q == p)) {
            return Err(Error::BasisMismatch(format!("undeclared parameter `{p}`")));
        }
        Ok(())
    }

    /// Parameters that actually occur in some structure constant.
    pub fn occurring_params(&self) -> BTreeSet<&str> {
        self.products.iter().flat_map(Element::params).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.products.iter().all(Element::is_constant)
    }

    pub(crate) fn require_constant(&self, operation: &'static str) -> Result<()> {
        if self.is_constant() {
            Ok(())
        } else {
            let params: Vec<&str> = self.occurring_params().into_iter().collect();
            Err(Error::Parametric {
                operation,
                params: params.join(" "),
            })
        }
    }

    /// Same basis and same products; names and declared parameter lists may differ.
    pub fn same_structure(&self, other: &AlgebraTable) -> bool {
        self.basis == other.basis && self.products == other.products
    }

    /// First product on which two tables over the same basis disagree.
    pub fn first_difference(&self, other: &AlgebraTable) -> Option<Witness> {
        let dim = self.dim();
        (0..dim * dim).find_map(|idx| {
            let (a, b) = (&self.products[idx], &other.products[idx]);
            (a != b).then(|| Witness::Product {
                pair: [idx / dim, idx % dim],
                expected: b.clone(),
                found: a.clone(),
            })
        })
    }

    /// Substitutes the assigned parameters; they are removed from the
    /// parameter list.
    pub fn substitute(&self, assignment: &Assignment) -> AlgebraTable {
        AlgebraTable {
            name: self.name.clone(),
            params: self
                .params
                .iter()
                .filter(|p| !assignment.contains_key(*p))
                .cloned()
                .collect(),
            basis: self.basis.clone(),
            products: self.products.iter().map(|e| e.substitute(assignment)).collect(),
        }
    }

    fn check_dim(&self, v: &Element) -> Result<()> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            })
        }
    }

    /// `[b_i, v]`
    fn left_basis_bracket(&self, i: usize, v: &Element) -> Element {
        let mut out = Element::zero(self.dim());
        for (p, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, self.product(i, p));
            }
        }
        out
    }

    /// `[v, b_k]`
    fn right_basis_bracket(&self, v: &Element, k: usize) -> Element {
        let mut out = Element::zero(self.dim());
        for (p, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, self.product(p, k));
            }
        }
        out
    }

    /// Bilinear bracket `[u, v]`.
    pub fn bracket(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut out = Element::zero(self.dim());
        for (p, cu) in u.coords().iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (q, cv) in v.coords().iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                out.add_scaled(&(cu * cv), self.product(p, q));
            }
        }
        Ok(out)
    }

    /// `[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j]`, zero exactly when
    /// the Leibniz identity holds on the triple.
    pub fn leibniz_residual(&self, i: usize, j: usize, k: usize) -> Element {
        let mut r = self.left_basis_bracket(i, self.product(j, k));
        r = &r - &self.right_basis_bracket(self.product(i, j), k);
        &r + &self.right_basis_bracket(self.product(i, k), j)
    }

    /// Checks the Leibniz identity on all `dim^3` basis triples, reporting the
    /// first failing triple in lexicographic index order.
    pub fn check_leibniz(&self) -> Result<Verdict> {
        self.require_constant("check_leibniz")?;
        let sparse = SparseTable::new(self);
        Ok(match sparse.first_leibniz_failure() {
            None => Verdict::Pass,
            Some((triple, residual)) => Verdict::Fail(Witness::Leibniz {
                triple,
                residual: Element::from_rationals(residual),
            }),
        })
    }

    /// Antisymmetry on all pairs (including `[b_i,b_i] = 0`), then Jacobi on
    /// all triples.
    pub fn check_lie(&self) -> Result<Verdict> {
        self.require_constant("check_lie")?;
        let dim = self.dim();
        for i in 0..dim {
            for j in i..dim {
                let sum = self.product(i, j) + self.product(j, i);
                if !sum.is_zero() {
                    return Ok(Verdict::Fail(Witness::Antisymmetry { pair: [i, j], sum }));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut v = self.left_basis_bracket(i, self.product(j, k));
                    v = &v + &self.left_basis_bracket(j, self.product(k, i));
                    v = &v + &self.left_basis_bracket(k, self.product(i, j));
                    if !v.is_zero() {
                        return Ok(Verdict::Fail(Witness::Jacobi {
                            triple: [i, j, k],
                            value: v,
                        }));
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// Matrix of `v -> [v, a]` on column coordinates.
    pub fn right_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        self.check_dim(a)?;
        let mut m = Matrix::zero(self.dim());
        for c in 0..self.dim() {
            let image = self.left_basis_bracket(c, a);
            for (r, x) in image.coords.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }

    /// Matrix of `v -> [a, v]` on column coordinates.
    pub fn left_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        self.check_dim(a)?;
        let mut m = Matrix::zero(self.dim());
        for c in 0..self.dim() {
            let image = self.right_basis_bracket(a, c);
            for (r, x) in image.coords.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }
}

/// Constant structure constants in sparse form, for the `dim^3` sweeps.
pub(crate) struct SparseTable {
    dim: usize,
    // entry (i, j) lists the nonzero coordinates of [b_i, b_j]
    products: Vec<Vec<(usize, Rational)>>,
}

pub(crate) type SparseVec = BTreeMap<usize, Rational>;

fn axpy(acc: &mut SparseVec, c: &Rational, v: &[(usize, Rational)]) {
    for (k, x) in v {
        let slot = acc.entry(*k).or_insert_with(Rational::zero);
        *slot += c * x;
        if slot.is_zero() {
            acc.remove(k);
        }
    }
}

impl SparseTable {
    /// Caller guarantees the table is constant.
    pub(crate) fn new(t: &AlgebraTable) -> Self {
        let products = t
            .products
            .iter()
            .map(|e| {
                e.coords()
                    .iter()
                    .enumerate()
                    .filter_map(|(k, x)| {
                        let c = x.to_constant().expect("constant table");
                        (!c.is_zero()).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        Self {
            dim: t.dim(),
            products,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.dim
    }

    pub(crate) fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub(crate) fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut acc = SparseVec::new();
        for (p, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (q, cv) in v.iter().enumerate() {
                if !cv.is_zero() {
                    axpy(&mut acc, &(cu * cv), self.product(p, q));
                }
            }
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (k, x) in acc {
            out[k] = x;
        }
        out
    }

    fn first_leibniz_failure(&self) -> Option<([usize; 3], Vec<Rational>)> {
        let dim = self.dim;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut acc = SparseVec::new();
                    for (p, c) in self.product(j, k) {
                        axpy(&mut acc, c, self.product(i, *p));
                    }
                    for (p, c) in self.product(i, j) {
                        axpy(&mut acc, &-c, self.product(*p, k));
                    }
                    for (p, c) in self.product(i, k) {
                        axpy(&mut acc, c, self.product(*p, j));
                    }
                    if !acc.is_empty() {
                        let mut out = vec![Rational::zero(); dim];
                        for (idx, x) in acc {
                            out[idx] = x;
                        }
                        return Some(([i, j, k], out));
                    }
                }
            }
        }
        None
    }
}
