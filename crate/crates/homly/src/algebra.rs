//! Structure-constant representation of binary and ternary Hom-algebras.
//!
//! Everything here is dense: a binary product is an n×n table of vectors
//! (`e_i · e_j` expanded over the basis) and a ternary product an n×n×n table.
//! Target dimensions are small, so dense tables plus exact scalars keep every
//! operation simple and decidable. All values are immutable after
//! construction and all operations are pure.

use crate::coeff::{Assignment, CoeffError, Params, Scalar};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

fn check_dim(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::Dimension { expected, found })
    }
}

/// Element of the algebra, expanded over the basis `e_1..e_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        assert!(!coords.is_empty(), "vectors live in dimension >= 1");
        Vector { coords }
    }

    pub fn zero(params: &Params, dim: usize) -> Self {
        Vector::new(vec![Scalar::zero(params); dim])
    }

    /// The basis vector `e_{k+1}` (zero-based `k`).
    pub fn basis(params: &Params, dim: usize, k: usize) -> Self {
        let mut v = Vector::zero(params, dim);
        v.coords[k] = Scalar::one(params);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn params(&self) -> &Params {
        self.coords[0].params()
    }

    pub fn coord(&self, k: usize) -> &Scalar {
        &self.coords[k]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Vector::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// `self += s * v`, skipping zero work.
    fn add_scaled_assign(&mut self, s: &Scalar, v: &Vector) {
        if s.is_zero() {
            return;
        }
        for (mine, theirs) in self.coords.iter_mut().zip(&v.coords) {
            if theirs.is_zero() {
                continue;
            }
            *mine = &*mine + &(s * theirs);
        }
    }

    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        Ok(Vector::new(
            self.coords
                .iter()
                .map(|c| c.substitute(assignment))
                .collect::<Result<_, _>>()?,
        ))
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: Self) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions differ");
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: Self) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions differ");
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Vector {
    /// Canonical basis combination, e.g. `l*e1`, `-e3 - e4`, `(a*l+1)*e1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c
                .leading_coefficient()
                .is_some_and(|lc| lc.print_negative());
            let magnitude = if neg { -c } else { c.clone() };
            let body = if magnitude.is_one() {
                format!("e{}", k + 1)
            } else if magnitude.is_single_pure_term() {
                format!("{}*e{}", magnitude, k + 1)
            } else {
                format!("({})*e{}", magnitude, k + 1)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// Linear self-map stored by columns: column `j` is the image of `e_{j+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    cols: Vec<Vector>,
}

impl LinearMap {
    pub fn from_columns(cols: Vec<Vector>) -> Result<Self, AlgebraError> {
        let dim = cols.len();
        for col in &cols {
            check_dim(dim, col.dim())?;
        }
        Ok(LinearMap { cols })
    }

    pub fn identity(params: &Params, dim: usize) -> Self {
        LinearMap {
            cols: (0..dim).map(|k| Vector::basis(params, dim, k)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn params(&self) -> &Params {
        self.cols[0].params()
    }

    /// Image of the basis vector `e_{j+1}`.
    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn is_identity(&self) -> bool {
        let params = self.params().clone();
        self.cols
            .iter()
            .enumerate()
            .all(|(k, col)| *col == Vector::basis(&params, self.dim(), k))
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim(), x.dim())?;
        let mut acc = Vector::zero(self.params(), self.dim());
        for (j, coeff) in x.coords().iter().enumerate() {
            acc.add_scaled_assign(coeff, &self.cols[j]);
        }
        Ok(acc)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        check_dim(self.dim(), inner.dim())?;
        let cols = inner
            .cols
            .iter()
            .map(|col| self.apply(col))
            .collect::<Result<_, _>>()?;
        Ok(LinearMap { cols })
    }

    /// `self` composed with itself `k` times; `k = 0` is the identity.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = LinearMap::identity(self.params(), self.dim());
        for _ in 0..k {
            acc = self.compose(&acc).expect("square map composes with itself");
        }
        acc
    }

    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        Ok(LinearMap {
            cols: self
                .cols
                .iter()
                .map(|c| c.substitute(assignment))
                .collect::<Result<_, _>>()?,
        })
    }
}

/// Structure constants of a binary product: `entry(i, j)` is `e_{i+1} · e_{j+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryTensor {
    dim: usize,
    params: Params,
    entries: Vec<Vec<Vector>>,
}

impl BinaryTensor {
    pub fn zero(params: &Params, dim: usize) -> Self {
        BinaryTensor {
            dim,
            params: params.clone(),
            entries: vec![vec![Vector::zero(params, dim); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn entry(&self, i: usize, j: usize) -> &Vector {
        &self.entries[i][j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.dim(), self.dim, "entry dimension differs from tensor");
        self.entries[i][j] = v;
    }

    /// Coefficient of `e_{k+1}` in `e_{i+1} · e_{j+1}`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.entries[i][j].coord(k)
    }

    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        self.entries[i][j].coords[k] = s;
    }

    /// Bilinear product of two vectors through the structure constants.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        let mut acc = Vector::zero(&self.params, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc.add_scaled_assign(&(xi * yj), &self.entries[i][j]);
            }
        }
        Ok(acc)
    }

    /// `[x, y] = x·y − y·x` as a new tensor.
    pub fn skew_symmetrize(&self) -> BinaryTensor {
        let mut out = BinaryTensor::zero(&self.params, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = &self.entries[i][j] - &self.entries[j][i];
            }
        }
        out
    }

    /// Applies `f` to every entry, e.g. to push a map through the product.
    pub fn map_entries(&self, f: impl Fn(&Vector) -> Vector) -> BinaryTensor {
        let mut out = BinaryTensor::zero(&self.params, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = f(&self.entries[i][j]);
                assert_eq!(v.dim(), self.dim, "mapped entry dimension");
                out.entries[i][j] = v;
            }
        }
        out
    }

    /// `as(x,y,z) = (x·y)·α(z) − α(x)·(y·z)`.
    pub fn hom_associator(
        &self,
        alpha: &LinearMap,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, alpha.dim())?;
        let left = self.apply(&self.apply(x, y)?, &alpha.apply(z)?)?;
        let right = self.apply(&alpha.apply(x)?, &self.apply(y, z)?)?;
        Ok(&left - &right)
    }

    /// Cyclic sum `(x·y)·α(z) + (y·z)·α(x) + (z·x)·α(y)`.
    pub fn hom_jacobian(
        &self,
        alpha: &LinearMap,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, alpha.dim())?;
        let t1 = self.apply(&self.apply(x, y)?, &alpha.apply(z)?)?;
        let t2 = self.apply(&self.apply(y, z)?, &alpha.apply(x)?)?;
        let t3 = self.apply(&self.apply(z, x)?, &alpha.apply(y)?)?;
        Ok(&(&t1 + &t2) + &t3)
    }

    /// Matrix of `b ↦ a·b`.
    pub fn left_translation(&self, a: &Vector) -> Result<LinearMap, AlgebraError> {
        check_dim(self.dim, a.dim())?;
        let cols = (0..self.dim)
            .map(|j| {
                let mut col = Vector::zero(&self.params, self.dim);
                for (i, ai) in a.coords().iter().enumerate() {
                    col.add_scaled_assign(ai, &self.entries[i][j]);
                }
                col
            })
            .collect();
        LinearMap::from_columns(cols)
    }

    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        let params = Params::empty();
        let mut out = BinaryTensor::zero(&params, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = self.entries[i][j].substitute(assignment)?;
            }
        }
        Ok(out)
    }
}

/// Structure constants of a ternary product: `entry(i, j, k)` is
/// `{e_{i+1}, e_{j+1}, e_{k+1}}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TernaryTensor {
    dim: usize,
    params: Params,
    entries: Vec<Vec<Vec<Vector>>>,
}

impl TernaryTensor {
    pub fn zero(params: &Params, dim: usize) -> Self {
        TernaryTensor {
            dim,
            params: params.clone(),
            entries: vec![vec![vec![Vector::zero(params, dim); dim]; dim]; dim],
        }
    }

    pub fn from_fn(
        params: &Params,
        dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Self {
        let mut out = TernaryTensor::zero(params, dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    assert_eq!(v.dim(), dim, "entry dimension");
                    out.entries[i][j][k] = v;
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.entries[i][j][k]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, v: Vector) {
        assert_eq!(v.dim(), self.dim, "entry dimension differs from tensor");
        self.entries[i][j][k] = v;
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        self.entries[i][j][k].coord(l)
    }

    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, l: usize, s: Scalar) {
        self.entries[i][j][k].coords[l] = s;
    }

    /// Trilinear product of three vectors through the structure constants.
    pub fn apply(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        check_dim(self.dim, z.dim())?;
        let mut acc = Vector::zero(&self.params, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.coords().iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    acc.add_scaled_assign(&(&xy * zk), &self.entries[i][j][k]);
                }
            }
        }
        Ok(acc)
    }

    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        let params = Params::empty();
        let mut out = TernaryTensor::zero(&params, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.entries[i][j][k] = self.entries[i][j][k].substitute(assignment)?;
                }
            }
        }
        Ok(out)
    }
}

/// A Hom-algebra `(L, ·, α)`: named, finite-dimensional, with a binary
/// product and a twisting map. The map is stored, never assumed to be an
/// endomorphism; multiplicativity is a checkable property.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    name: String,
    dim: usize,
    params: Params,
    product: BinaryTensor,
    alpha: LinearMap,
}

impl AlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        params: Params,
        product: BinaryTensor,
        alpha: LinearMap,
    ) -> Result<Self, AlgebraError> {
        let dim = product.dim();
        check_dim(dim, alpha.dim())?;
        if product.params() != &params {
            return Err(CoeffError::ParamMismatch {
                left: params.to_string(),
                right: product.params().to_string(),
            }
            .into());
        }
        Ok(AlgebraSpec {
            name: name.into(),
            dim,
            params,
            product,
            alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn product(&self) -> &BinaryTensor {
        &self.product
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn basis(&self, k: usize) -> Vector {
        Vector::basis(&self.params, self.dim, k)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_alpha(mut self, alpha: LinearMap) -> Result<Self, AlgebraError> {
        check_dim(self.dim, alpha.dim())?;
        self.alpha = alpha;
        Ok(self)
    }

    pub fn with_identity_alpha(mut self) -> Self {
        self.alpha = LinearMap::identity(&self.params, self.dim);
        self
    }

    /// Evaluates every structure constant and map entry at the assignment;
    /// the result is a parameter-free algebra.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        Ok(AlgebraSpec {
            name: self.name.clone(),
            dim: self.dim,
            params: Params::empty(),
            product: self.product.substitute(assignment)?,
            alpha: self.alpha.substitute(assignment)?,
        })
    }
}

/// A binary-ternary structure `(L, [,], {,,}, α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomLYSpec {
    name: String,
    dim: usize,
    params: Params,
    bracket: BinaryTensor,
    triple: TernaryTensor,
    alpha: LinearMap,
}

impl HomLYSpec {
    pub fn new(
        name: impl Into<String>,
        params: Params,
        bracket: BinaryTensor,
        triple: TernaryTensor,
        alpha: LinearMap,
    ) -> Result<Self, AlgebraError> {
        let dim = bracket.dim();
        check_dim(dim, triple.dim())?;
        check_dim(dim, alpha.dim())?;
        Ok(HomLYSpec {
            name: name.into(),
            dim,
            params,
            bracket,
            triple,
            alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn bracket(&self) -> &BinaryTensor {
        &self.bracket
    }

    pub fn triple(&self) -> &TernaryTensor {
        &self.triple
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn with_triple(mut self, triple: TernaryTensor) -> Result<Self, AlgebraError> {
        check_dim(self.dim, triple.dim())?;
        self.triple = triple;
        Ok(self)
    }
}
