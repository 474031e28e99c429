//! Constructors for the algebras and families of the `sl2 + R` classification.
//!
//! Basis order is fixed throughout: `e, h, f`, then `x0..xm`, then `y1, y2`.

use num_traits::Zero;

use crate::algebra::{AlgebraTable, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{int, ratio, Polynomial, Rational};

fn names(prefix: &str, count: usize) -> Vec<String> {
    (0..count).map(|k| format!("{prefix}{k}")).collect()
}

/// `sum c_i * b_i` over basis symbols of `t`.
fn combo(t: &AlgebraTable, terms: &[(Polynomial, &str)]) -> Element {
    let mut out = Element::zero(t.dim());
    for (c, s) in terms {
        out.add_scaled(c, &t.e(s));
    }
    out
}

fn set(t: &mut AlgebraTable, left: &str, right: &str, terms: &[(Polynomial, &str)]) {
    let v = combo(t, terms);
    t.set(left, right, v).expect("constructor uses declared symbols");
}

fn rational_label(r: &Rational) -> String {
    r.to_string()
}

/// The canonical sl2 products on the `e, h, f` part of `t`.
fn put_sl2(t: &mut AlgebraTable) {
    let c = Polynomial::from_int;
    set(t, "e", "h", &[(c(2), "e")]);
    set(t, "h", "e", &[(c(-2), "e")]);
    set(t, "h", "f", &[(c(2), "f")]);
    set(t, "f", "h", &[(c(-2), "f")]);
    set(t, "e", "f", &[(c(1), "h")]);
    set(t, "f", "e", &[(c(-1), "h")]);
}

/// `[x_k, e/f/h]` from the irreducible module of highest weight `m`.
fn put_module_action(t: &mut AlgebraTable, m: usize) {
    for k in 0..=m {
        let xk = format!("x{k}");
        let weight = m as i64 - 2 * k as i64;
        set(t, &xk, "h", &[(Polynomial::from_int(weight), &xk)]);
        if k < m {
            set(t, &xk, "f", &[(Polynomial::one(), &format!("x{}", k + 1))]);
        }
        if k > 0 {
            let c = -(k as i64) * (m as i64 + 1 - k as i64);
            set(t, &xk, "e", &[(Polynomial::from_int(c), &format!("x{}", k - 1))]);
        }
    }
}

fn put_r2(t: &mut AlgebraTable) {
    set(t, "y1", "y2", &[(Polynomial::one(), "y1")]);
    set(t, "y2", "y1", &[(Polynomial::from_int(-1), "y1")]);
}

fn family_basis(m: usize) -> Vec<String> {
    let mut basis: Vec<String> = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
    basis.extend(names("x", m + 1));
    basis.extend(["y1".to_string(), "y2".to_string()]);
    basis
}

/// sl2 on the canonical basis `{e, h, f}`.
pub fn make_sl2() -> AlgebraTable {
    let mut t = AlgebraTable::with_basis("sl2", &["e", "h", "f"], &[]).unwrap();
    put_sl2(&mut t);
    t
}

/// The non-abelian two-dimensional Lie algebra, `[y1, y2] = y1`.
pub fn make_r2() -> AlgebraTable {
    let mut t = AlgebraTable::with_basis("r2", &["y1", "y2"], &[]).unwrap();
    put_r2(&mut t);
    t
}

/// Abelian (zero-product) algebra on `u0..u{n-1}`.
pub fn make_abelian(n: usize) -> AlgebraTable {
    AlgebraTable::new(format!("abelian{n}"), names("u", n), Vec::new()).unwrap()
}

/// The irreducible sl2-module of dimension `m + 1` on `x0..xm`.
///
/// Matrices act on column coordinates and are the right actions
/// `x -> [x, e]`, `x -> [x, f]`, `x -> [x, h]`. With that convention
/// `H = F E - E F`, `H E - E H = 2E` and `H F - F H = -2F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Module {
    pub m: usize,
    pub names: Vec<String>,
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

impl Sl2Module {
    /// Actions listed in the basis order of [`make_sl2`] (`e, h, f`).
    pub fn right_action(&self) -> RightModule {
        RightModule {
            names: self.names.clone(),
            ops: vec![self.e.clone(), self.h.clone(), self.f.clone()],
        }
    }
}

pub fn make_v_module(m: usize) -> Sl2Module {
    let n = m + 1;
    let h = Matrix::diagonal((0..n).map(|k| Polynomial::from_int(m as i64 - 2 * k as i64)));
    let mut e = Matrix::zero(n);
    let mut f = Matrix::zero(n);
    for k in 0..n {
        if k + 1 < n {
            f.set(k + 1, k, Polynomial::one());
        }
        if k > 0 {
            let c = -(k as i64) * (m as i64 + 1 - k as i64);
            e.set(k - 1, k, Polynomial::from_int(c));
        }
    }
    Sl2Module {
        m,
        names: names("x", n),
        e,
        f,
        h,
    }
}

/// A right module over a Lie algebra: `ops[i]` is the matrix of `x -> [x, g_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub names: Vec<String>,
    pub ops: Vec<Matrix>,
}

/// Checks `R_[g_i, g_j] = R_{g_j} R_{g_i} - R_{g_i} R_{g_j}` for all pairs.
pub fn check_right_module(g: &AlgebraTable, module: &RightModule) -> Result<()> {
    let n = module.names.len();
    if module.ops.len() != g.dim() {
        return Err(Error::InvalidModule(format!(
            "{} operators for a {}-dimensional algebra",
            module.ops.len(),
            g.dim()
        )));
    }
    if let Some(op) = module.ops.iter().find(|op| op.size() != n) {
        return Err(Error::InvalidModule(format!(
            "operator of size {} on a {n}-dimensional module",
            op.size()
        )));
    }
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let mut lhs = Matrix::zero(n);
            for (k, c) in g.product(i, j).coords().iter().enumerate() {
                if !c.is_zero() {
                    lhs = &lhs + &module.ops[k].scale(c);
                }
            }
            let (ri, rj) = (&module.ops[i], &module.ops[j]);
            let rhs = &(rj * ri) - &(ri * rj);
            if lhs != rhs {
                return Err(Error::InvalidModule(format!(
                    "relation for [{},{}] fails",
                    g.basis()[i],
                    g.basis()[j]
                )));
            }
        }
    }
    Ok(())
}

/// `Q = G + M` with `[x + m, y + n] = [x, y] + [m, y]`.
pub fn make_dzhumadildaev(g: &AlgebraTable, module: &RightModule) -> Result<AlgebraTable> {
    if let Some(w) = g.check_lie()?.witness() {
        return Err(Error::NotLie(w.describe(g.basis())));
    }
    check_right_module(g, module)?;
    let mut basis = g.basis().to_vec();
    basis.extend(module.names.iter().cloned());
    let name = format!("Q({},M{})", g.name(), module.names.len());
    let mut t = AlgebraTable::new(name, basis, Vec::new())?;
    let (gd, n) = (g.dim(), module.names.len());
    let embed = |v: &[Polynomial], offset: usize| {
        let mut coords = vec![Polynomial::zero(); gd + n];
        for (k, c) in v.iter().enumerate() {
            coords[offset + k] = c.clone();
        }
        Element::from_coords(coords)
    };
    for i in 0..gd {
        for j in 0..gd {
            t.set_product(i, j, embed(g.product(i, j).coords(), 0))?;
        }
    }
    for k in 0..n {
        for (i, op) in module.ops.iter().enumerate() {
            t.set_product(gd + k, i, embed(&op.column(k), gd))?;
        }
    }
    Ok(t)
}

/// `Q(sl2, V(m))` on `e, h, f, x0..xm`.
pub fn make_dzhumadildaev_sl2(m: usize) -> AlgebraTable {
    let mut t = make_dzhumadildaev(&make_sl2(), &make_v_module(m).right_action())
        .expect("V(m) is an sl2-module");
    t.set_name(format!("Q(sl2,V({m}))"));
    t
}

/// Block-diagonal direct sum. Symbols of `b` that clash with `a` get a
/// `_2` suffix (repeated until unique).
pub fn make_direct_sum(a: &AlgebraTable, b: &AlgebraTable) -> AlgebraTable {
    let taken = |s: &str, list: &[String]| list.iter().any(|x| x == s);
    let mut basis = a.basis().to_vec();
    let mut params = a.params().to_vec();
    for s in b.basis() {
        let mut name = s.clone();
        while taken(&name, &basis) || taken(&name, &params) {
            name.push_str("_2");
        }
        basis.push(name);
    }
    for p in b.params() {
        if !taken(p, &params) {
            params.push(p.clone());
        }
    }
    let mut t = AlgebraTable::new(format!("{}+{}", a.name(), b.name()), basis, params)
        .expect("names made distinct");
    let (da, db) = (a.dim(), b.dim());
    let embed = |v: &Element, offset: usize| {
        let mut coords = vec![Polynomial::zero(); da + db];
        for (k, c) in v.coords().iter().enumerate() {
            coords[offset + k] = c.clone();
        }
        Element::from_coords(coords)
    };
    for i in 0..da {
        for j in 0..da {
            t.set_product(i, j, embed(a.product(i, j), 0)).unwrap();
        }
    }
    for i in 0..db {
        for j in 0..db {
            t.set_product(da + i, da + j, embed(b.product(i, j), da)).unwrap();
        }
    }
    t
}

/// Which optional product groups the generic family carries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilySpec {
    /// Highest weight of the module; `dim I = m + 1`.
    pub m: usize,
    /// Give every sl2 x sl2 product a free `sum a^j x_j` tail.
    pub include_sl2_defects: bool,
    /// Give `[e/f/h, y_i]` free coefficients in the `x` block.
    pub include_sl2_r_products: bool,
}

impl FamilySpec {
    pub fn new(m: usize) -> Self {
        Self {
            m,
            ..Self::default()
        }
    }
}

/// Parameter name for the coefficient of `x_j` in `[left, right]`.
pub fn family_param(left: &str, right: &str, j: usize) -> String {
    format!("a_{left}_{right}_{j}")
}

/// The most general table compatible with `L/I = sl2 + r2` and `I = V(m)`:
/// every product that may pick up an `I`-component gets one with fresh
/// parameters.
pub fn make_generic_family(spec: &FamilySpec) -> AlgebraTable {
    let m = spec.m;
    let xs = names("x", m + 1);
    let mut params = Vec::new();
    let mut tails: Vec<(String, String)> = Vec::new();
    let mut add_tail = |left: &str, right: &str| tails.push((left.to_string(), right.to_string()));

    const SL2: [&str; 3] = ["e", "h", "f"];
    if spec.include_sl2_defects {
        for l in SL2 {
            for r in SL2 {
                add_tail(l, r);
            }
        }
    }
    if spec.include_sl2_r_products {
        for l in SL2 {
            for y in ["y1", "y2"] {
                add_tail(l, y);
            }
        }
    }
    for y in ["y1", "y2"] {
        for r in SL2 {
            add_tail(y, r);
        }
    }
    for x in &xs {
        for y in ["y1", "y2"] {
            add_tail(x, y);
        }
    }
    add_tail("y1", "y2");
    add_tail("y1", "y1");
    add_tail("y2", "y2");

    for (l, r) in &tails {
        for j in 0..=m {
            params.push(family_param(l, r, j));
        }
    }

    let name = format!(
        "generic_m{m}{}{}",
        if spec.include_sl2_r_products { "_sl2R" } else { "" },
        if spec.include_sl2_defects { "_defects" } else { "" }
    );
    let mut t = AlgebraTable::new(name, family_basis(m), params).unwrap();
    put_sl2(&mut t);
    put_module_action(&mut t, m);
    put_r2(&mut t);
    for (l, r) in &tails {
        let mut v = t.product(t.index(l).unwrap(), t.index(r).unwrap()).clone();
        for (j, x) in xs.iter().enumerate() {
            v.add_scaled(&Polynomial::var(family_param(l, r, j)), &t.e(x));
        }
        t.set(l, r, v).unwrap();
    }
    t
}

/// The classification table for `m != 3`: sl2, `V(m)` acting on the right,
/// `[y1, y2] = y1` and `[x_k, y2] = a x_k`; all other products zero.
pub fn make_theorem2_algebra(m: usize, a: &Rational) -> AlgebraTable {
    let name = format!("theorem2_m{m}_a{}", rational_label(a));
    let mut t = AlgebraTable::new(name, family_basis(m), Vec::new()).unwrap();
    put_sl2(&mut t);
    put_module_action(&mut t, m);
    put_r2(&mut t);
    let a = Polynomial::constant(a.clone());
    for k in 0..=m {
        let xk = format!("x{k}");
        set(&mut t, &xk, "y2", &[(a.clone(), &xk)]);
    }
    t
}

fn put_l_family_core(t: &mut AlgebraTable, l: &Polynomial, mu: &Polynomial, a: &Polynomial) {
    put_sl2(t);
    put_module_action(t, 2);
    put_r2(t);
    let half = Polynomial::constant(ratio(1, 2));
    for (y, c) in [("y1", l), ("y2", mu)] {
        set(t, "e", y, &[(c.clone(), "x0")]);
        set(t, "f", y, &[(&half * c, "x2")]);
        set(t, "h", y, &[(c.clone(), "x1")]);
    }
    for xk in ["x0", "x1", "x2"] {
        set(t, xk, "y2", &[(a.clone(), xk)]);
    }
}

/// The `dim I = 3` family before the `y2 -> y2 + (b/2) x2` reduction, in
/// parameters `l, mu, a, b`.
pub fn make_l3_prefamily() -> AlgebraTable {
    let mut t = AlgebraTable::new(
        "L3_prefamily",
        family_basis(2),
        ["l", "mu", "a", "b"].iter().map(|s| s.to_string()).collect(),
    )
    .unwrap();
    let v = Polynomial::var;
    put_l_family_core(&mut t, &v("l"), &v("mu"), &v("a"));
    let b = v("b");
    set(&mut t, "y2", "e", &[(b.clone(), "x1")]);
    set(&mut t, "y2", "h", &[(b.clone(), "x2")]);
    let ab_half = (&v("a") * &b).scale(&ratio(-1, 2));
    set(&mut t, "y2", "y2", &[(ab_half, "x2")]);
    t
}

/// `L(l, mu, a)`; the table is a Leibniz algebra exactly when `l (1 - a) = 0`.
pub fn make_l_family(l: &Rational, mu: &Rational, a: &Rational) -> Result<AlgebraTable> {
    if !(l * (int(1) - a)).is_zero() {
        return Err(Error::Admissibility(format!(
            "L({l},{mu},{a}) requires λ(1-a)=0, got {}",
            l * (int(1) - a)
        )));
    }
    Ok(make_l_family_unchecked(l, mu, a))
}

/// `L(l, mu, a)` without the admissibility check.
pub fn make_l_family_unchecked(l: &Rational, mu: &Rational, a: &Rational) -> AlgebraTable {
    let name = format!("L({l},{mu},{a})");
    let mut t = AlgebraTable::new(name, family_basis(2), Vec::new()).unwrap();
    let c = |r: &Rational| Polynomial::constant(r.clone());
    put_l_family_core(&mut t, &c(l), &c(mu), &c(a));
    t
}
