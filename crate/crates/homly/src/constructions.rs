//! Constructions on Hom-Leibniz algebras: Yau twisting, the ternary products
//! derived from the binary one, the Hom-Akivis pair, and the pipeline that
//! equips a multiplicative left Hom-Leibniz algebra with its Hom-Lie-Yamaguti
//! structure.

use crate::algebra::{AlgebraSpec, BinaryTensor, HomLYSpec, TernaryTensor, Vector};
use crate::identities::{
    check_anticommutative, check_left_hom_leibniz, check_multiplicative, CheckOptions, CheckReport,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConstructError {
    #[error("twisting map is not an endomorphism of the product")]
    NotMultiplicative(Box<CheckReport>),
    #[error("the left Hom-Leibniz identity does not hold")]
    NotHomLeibniz(Box<CheckReport>),
    #[error("the product is not anticommutative")]
    NotAnticommutative(Box<CheckReport>),
}

impl ConstructError {
    /// The failing hypothesis check.
    pub fn report(&self) -> &CheckReport {
        match self {
            ConstructError::NotMultiplicative(r)
            | ConstructError::NotHomLeibniz(r)
            | ConstructError::NotAnticommutative(r) => r,
        }
    }
}

fn hypothesis_opts() -> CheckOptions {
    CheckOptions::default()
}

/// Replaces the product by `α ∘ (·)`, keeping the twisting map. Requires α to
/// be an endomorphism of the product; the result is again multiplicative, and
/// twisting a left Leibniz algebra yields a left Hom-Leibniz algebra.
pub fn yau_twist(s: &AlgebraSpec) -> Result<AlgebraSpec, ConstructError> {
    let mult = check_multiplicative(s.product(), s.alpha(), &hypothesis_opts())
        .expect("spec dimensions are consistent");
    if !mult.holds {
        return Err(ConstructError::NotMultiplicative(Box::new(mult)));
    }
    let alpha = s.alpha().clone();
    let twisted = s
        .product()
        .map_entries(|v| alpha.apply(v).expect("dims agree"));
    let spec = AlgebraSpec::new(
        format!("{}-twist", s.name()),
        s.params().clone(),
        twisted,
        alpha,
    )
    .expect("twist preserves dimensions");
    Ok(spec)
}

/// `{x,y,z} = −(x·y)·α(z)` as a dense tensor.
pub fn ternary_from_product(s: &AlgebraSpec) -> TernaryTensor {
    let product = s.product();
    let alpha = s.alpha();
    TernaryTensor::from_fn(s.params(), s.dim(), |i, j, k| {
        let v = product
            .apply(product.entry(i, j), alpha.column(k))
            .expect("dims agree");
        -&v
    })
}

/// `{x,y,z} = as_α(y,x,z) − as_α(x,y,z)` as a dense tensor.
pub fn ternary_from_associators(s: &AlgebraSpec) -> TernaryTensor {
    let product = s.product();
    let alpha = s.alpha();
    let params = s.params().clone();
    let dim = s.dim();
    let basis: Vec<Vector> = (0..dim).map(|k| Vector::basis(&params, dim, k)).collect();
    TernaryTensor::from_fn(&params, dim, |i, j, k| {
        let yxz = product
            .hom_associator(alpha, &basis[j], &basis[i], &basis[k])
            .expect("dims agree");
        let xyz = product
            .hom_associator(alpha, &basis[i], &basis[j], &basis[k])
            .expect("dims agree");
        &yxz - &xyz
    })
}

/// `{x,y,z} = −½ [x,y]·α(z)` as a dense tensor, with `[,]` the
/// skew-symmetrization of the product.
pub fn ternary_from_bracket(s: &AlgebraSpec) -> TernaryTensor {
    let bracket = s.product().skew_symmetrize();
    let product = s.product();
    let alpha = s.alpha();
    let minus_half =
        crate::coeff::Scalar::constant(s.params(), crate::coeff::GaussRational::from_ratio(-1, 2));
    TernaryTensor::from_fn(s.params(), s.dim(), |i, j, k| {
        product
            .apply(bracket.entry(i, j), alpha.column(k))
            .expect("dims agree")
            .scale(&minus_half)
    })
}

/// The Hom-Akivis pair of an algebra: skew-symmetrized product and the
/// Hom-associator as ternary operation.
pub fn hom_akivis_pair(s: &AlgebraSpec) -> (BinaryTensor, TernaryTensor) {
    let bracket = s.product().skew_symmetrize();
    let product = s.product();
    let alpha = s.alpha();
    let params = s.params().clone();
    let dim = s.dim();
    let basis: Vec<Vector> = (0..dim).map(|k| Vector::basis(&params, dim, k)).collect();
    let triple = TernaryTensor::from_fn(&params, dim, |i, j, k| {
        product
            .hom_associator(alpha, &basis[i], &basis[j], &basis[k])
            .expect("dims agree")
    });
    (bracket, triple)
}

/// Assembles the Hom-Lie-Yamaguti structure of an algebra without verifying
/// any hypothesis: bracket = skew-symmetrization, triple = `−(x·y)·α(z)`.
/// Useful for probing structures that are expected to fail the axiom suite.
pub fn hom_ly_unchecked(s: &AlgebraSpec) -> HomLYSpec {
    HomLYSpec::new(
        s.name(),
        s.params().clone(),
        s.product().skew_symmetrize(),
        ternary_from_product(s),
        s.alpha().clone(),
    )
    .expect("dimensions are consistent")
}

/// The main pipeline: verifies that α is an endomorphism and that the left
/// Hom-Leibniz identity holds, then equips the algebra with bracket
/// `[x,y] = x·y − y·x` and triple `{x,y,z} = −(x·y)·α(z)`.
pub fn hom_ly_from_hom_leibniz(s: &AlgebraSpec) -> Result<HomLYSpec, ConstructError> {
    let mult = check_multiplicative(s.product(), s.alpha(), &hypothesis_opts())
        .expect("spec dimensions are consistent");
    if !mult.holds {
        return Err(ConstructError::NotMultiplicative(Box::new(mult)));
    }
    let leibniz = check_left_hom_leibniz(s.product(), s.alpha(), &hypothesis_opts())
        .expect("spec dimensions are consistent");
    if !leibniz.holds {
        return Err(ConstructError::NotHomLeibniz(Box::new(leibniz)));
    }
    Ok(hom_ly_unchecked(s))
}

/// Variant for anticommutative (Hom-Lie) inputs: the product itself is the
/// bracket, not its skew-symmetrization, and the triple is `−(x·y)·α(z)`.
pub fn hom_ly_from_hom_lie(s: &AlgebraSpec) -> Result<HomLYSpec, ConstructError> {
    let anti = check_anticommutative(s.product(), &hypothesis_opts());
    if !anti.holds {
        return Err(ConstructError::NotAnticommutative(Box::new(anti)));
    }
    let mult = check_multiplicative(s.product(), s.alpha(), &hypothesis_opts())
        .expect("spec dimensions are consistent");
    if !mult.holds {
        return Err(ConstructError::NotMultiplicative(Box::new(mult)));
    }
    let leibniz = check_left_hom_leibniz(s.product(), s.alpha(), &hypothesis_opts())
        .expect("spec dimensions are consistent");
    if !leibniz.holds {
        return Err(ConstructError::NotHomLeibniz(Box::new(leibniz)));
    }
    Ok(HomLYSpec::new(
        s.name(),
        s.params().clone(),
        s.product().clone(),
        ternary_from_product(s),
        s.alpha().clone(),
    )
    .expect("dimensions are consistent"))
}
