//! Ideals, the squares ideal, quotients, module closures and invariant
//! profiles. Everything here needs exact division, so tables must be
//! constant.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgebraTable, Element, SparseTable};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::Rational;
use crate::subspace::{unit, Subspace};

impl SparseTable {
    /// `[v, b_j]`
    fn right_basis(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.product(p, j) {
                out[*k] += c * x;
            }
        }
        out
    }

    /// `[b_j, v]`
    fn left_basis(&self, j: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.product(j, p) {
                out[*k] += c * x;
            }
        }
        out
    }
}

/// Closes `span` under the given linear maps, processing each newly added
/// vector once. Terminates because the rank is bounded by the ambient dim.
fn close_under<F>(mut span: Subspace, maps: F) -> Subspace
where
    F: Fn(&[Rational]) -> Vec<Vec<Rational>>,
{
    let mut queue: Vec<Vec<Rational>> = span.rows().to_vec();
    while let Some(v) = queue.pop() {
        for image in maps(&v) {
            if span.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    span
}

/// Result of factoring a table by an ideal.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: AlgebraTable,
    pub projection: Projection,
}

/// The coordinate projection `L -> L/J` onto the non-pivot basis vectors of `J`.
#[derive(Clone, Debug)]
pub struct Projection {
    ideal: Subspace,
    complement: Vec<usize>,
}

impl Projection {
    /// Indices (in the original basis) of the basis vectors kept by the quotient.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &Element) -> Result<Element> {
        let coords = v.to_rationals().ok_or_else(|| Error::Parametric {
            operation: "project",
            params: v.params().into_iter().collect::<Vec<_>>().join(" "),
        })?;
        if coords.len() != self.ideal.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ideal.ambient_dim(),
                found: coords.len(),
            });
        }
        Ok(self.project_rationals(&coords))
    }

    fn project_rationals(&self, v: &[Rational]) -> Element {
        let reduced = self.ideal.reduce(v);
        Element::from_rationals(self.complement.iter().map(|&c| reduced[c].clone()))
    }
}

/// Basis-independent dimensions used to tell algebras apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    pub dim: usize,
    /// `dim [L, L]`
    pub derived: usize,
    /// `dim L^(k)` for `k = 1, 2, ...` with `L^(k) = [L^(k-1), L^(k-1)]`, up to the first repeat.
    pub derived_series: Vec<usize>,
    /// `dim L^k` for `k = 2, 3, ...` with `L^k = [L^(k-1), L]`, up to the first repeat.
    pub lower_central: Vec<usize>,
    /// `dim {z : [z, L] = 0}`
    pub left_center: usize,
    /// `dim {z : [L, z] = 0}`
    pub right_center: usize,
    pub squares_ideal: usize,
}

impl Profile {
    /// `(invariant name, rendered value)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let seq = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        vec![
            ("dim", self.dim.to_string()),
            ("dim_derived", self.derived.to_string()),
            ("derived_series", seq(&self.derived_series)),
            ("lower_central_series", seq(&self.lower_central)),
            ("dim_left_center", self.left_center.to_string()),
            ("dim_right_center", self.right_center.to_string()),
            ("dim_squares_ideal", self.squares_ideal.to_string()),
        ]
    }

    /// Names of the invariants on which two profiles differ.
    pub fn differences(&self, other: &Profile) -> Vec<&'static str> {
        self.entries()
            .into_iter()
            .zip(other.entries())
            .filter(|(a, b)| a.1 != b.1)
            .map(|(a, _)| a.0)
            .collect()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.entries() {
            writeln!(f, "{name:<22}{value}")?;
        }
        Ok(())
    }
}

impl AlgebraTable {
    /// Smallest two-sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Result<Subspace> {
        self.require_constant("ideal_closure")?;
        if seed.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: seed.ambient_dim(),
            });
        }
        let sparse = SparseTable::new(self);
        Ok(close_under(seed.clone(), |v| {
            (0..self.dim())
                .flat_map(|j| [sparse.right_basis(v, j), sparse.left_basis(j, v)])
                .collect()
        }))
    }

    /// The ideal generated by all squares `[x, x]`.
    ///
    /// By polarization it is generated by `[b_i, b_i]` and
    /// `[b_i, b_j] + [b_j, b_i]` for `i < j`.
    pub fn squares_ideal(&self) -> Result<Subspace> {
        self.require_constant("squares_ideal")?;
        let mut generators = Vec::new();
        for i in 0..self.dim() {
            generators.push(self.product(i, i).clone());
            for j in i + 1..self.dim() {
                generators.push(self.product(i, j) + self.product(j, i));
            }
        }
        let seed = Subspace::span_elements(self.dim(), &generators)?;
        self.ideal_closure(&seed)
    }

    /// Verifies that `j` is a two-sided ideal.
    pub fn check_ideal(&self, j: &Subspace) -> Result<()> {
        self.require_constant("check_ideal")?;
        let sparse = SparseTable::new(self);
        for row in j.rows() {
            for b in 0..self.dim() {
                if !j.contains(&sparse.right_basis(row, b)) {
                    return Err(self.not_ideal(row, &self.basis()[b], true));
                }
                if !j.contains(&sparse.left_basis(b, row)) {
                    return Err(self.not_ideal(row, &self.basis()[b], false));
                }
            }
        }
        Ok(())
    }

    fn not_ideal(&self, row: &[Rational], b: &str, row_on_left: bool) -> Error {
        let v = Element::from_rationals(row.iter().cloned())
            .display(self.basis())
            .to_string();
        let (left, right) = if row_on_left {
            (v, b.to_string())
        } else {
            (b.to_string(), v)
        };
        Error::NotAnIdeal { left, right }
    }

    /// `L / J` on the basis vectors at the non-pivot columns of `J`.
    pub fn quotient(&self, j: &Subspace) -> Result<Quotient> {
        self.check_ideal(j)?;
        let complement = j.non_pivot_columns();
        let projection = Projection {
            ideal: j.clone(),
            complement: complement.clone(),
        };
        let basis: Vec<String> = complement.iter().map(|&c| self.basis()[c].clone()).collect();
        let name = if j.is_zero() {
            self.name().to_string()
        } else {
            format!("{}/I", self.name())
        };
        let mut table = AlgebraTable::new(name, basis, Vec::new())?;
        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate() {
                let v = self.product(ca, cb).to_rationals().expect("constant table");
                table.set_product(a, b, projection.project_rationals(&v))?;
            }
        }
        Ok(Quotient { table, projection })
    }

    /// Span of `[u, v]` for `u` in `a`, `v` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.require_constant("product_space")?;
        let sparse = SparseTable::new(self);
        let mut out = Subspace::zero(self.dim());
        for u in a.rows() {
            for v in b.rows() {
                out.insert(sparse.bracket(u, v));
            }
        }
        Ok(out)
    }

    /// Dimension invariants: derived and lower central series, the one-sided
    /// centers and the squares ideal.
    pub fn profile(&self) -> Result<Profile> {
        self.require_constant("profile")?;
        let dim = self.dim();
        let full = Subspace::full(dim);
        let sparse = SparseTable::new(self);

        let mut derived_series = Vec::new();
        let mut current = full.clone();
        for _ in 0..=dim {
            let next = self.product_space(&current, &current)?;
            let stable = next == current;
            derived_series.push(next.dim());
            current = next;
            if stable {
                break;
            }
        }

        let mut lower_central = Vec::new();
        let mut current = full.clone();
        for _ in 0..=dim {
            let next = self.product_space(&current, &full)?;
            let stable = next == current;
            lower_central.push(next.dim());
            current = next;
            if stable {
                break;
            }
        }

        // z -> [z, b_j] and z -> [b_j, z], one equation per output coordinate
        let equations = |left: bool| {
            let mut eqs = Vec::new();
            for j in 0..dim {
                let images: Vec<Vec<Rational>> = (0..dim)
                    .map(|p| {
                        let u = unit(dim, p);
                        if left {
                            sparse.right_basis(&u, j)
                        } else {
                            sparse.left_basis(j, &u)
                        }
                    })
                    .collect();
                for k in 0..dim {
                    eqs.push(images.iter().map(|img| img[k].clone()).collect());
                }
            }
            eqs
        };

        Ok(Profile {
            dim,
            derived: derived_series[0],
            derived_series,
            lower_central,
            left_center: Subspace::kernel(dim, equations(true)).dim(),
            right_center: Subspace::kernel(dim, equations(false)).dim(),
            squares_ideal: self.squares_ideal()?.dim(),
        })
    }
}

/// Smallest subspace containing `seed` and invariant under every operator.
pub fn submodule_closure(ops: &[Matrix], seed: &Element) -> Result<Subspace> {
    let n = seed.dim();
    let mut constant_ops = Vec::with_capacity(ops.len());
    for op in ops {
        if op.size() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: op.size(),
            });
        }
        if !op.is_constant() {
            return Err(Error::Parametric {
                operation: "submodule_closure",
                params: String::new(),
            });
        }
        constant_ops.push(op);
    }
    let start = Subspace::span_elements(n, [seed])?;
    Ok(close_under(start, |v| {
        let elem = Element::from_rationals(v.iter().cloned());
        constant_ops
            .iter()
            .map(|op| {
                op.apply(&elem)
                    .expect("sizes checked")
                    .to_rationals()
                    .expect("constant operator")
            })
            .collect()
    }))
}
