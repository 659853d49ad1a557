//! Decidable checkers for the defining identities of Hom-Leibniz, Hom-Lie,
//! Hom-Akivis, Lie-Yamaguti and Hom-Lie-Yamaguti structures.
//!
//! Every checker quantifies over basis tuples only: all identities in play
//! are multilinear, so holding on every basis tuple is equivalent to holding
//! on all vectors. Tuples are visited in lexicographic order, which makes the
//! first counterexample deterministic across runs. Both sides of a failing
//! tuple are recorded exactly as evaluated.

use crate::algebra::{AlgebraError, BinaryTensor, HomLYSpec, LinearMap, TernaryTensor, Vector};
use std::fmt;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CheckError {
    #[error("precondition failed: `{}` does not hold", .0.identity)]
    PreconditionReport(Box<CheckReport>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Tuning for a checker run.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Stop scanning after collecting this many counterexamples (>= 1).
    pub max_counterexamples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_counterexamples: 10,
        }
    }
}

impl CheckOptions {
    pub fn with_max_counterexamples(max: usize) -> Self {
        assert!(max >= 1, "at least one counterexample must be collectable");
        CheckOptions {
            max_counterexamples: max,
        }
    }

    /// Scan everything; used by tests that cross-check the early-stop logic.
    pub fn exhaustive() -> Self {
        CheckOptions {
            max_counterexamples: usize::MAX,
        }
    }
}

/// A basis tuple (1-based indices) where an identity's two sides differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub tuple: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Verdict for one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub identity: String,
    pub holds: bool,
    pub tuples_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            write!(
                f,
                "{}: holds ({} tuples)",
                self.identity, self.tuples_checked
            )
        } else {
            write!(
                f,
                "{}: FAILS ({} tuples checked, {} counterexample{})",
                self.identity,
                self.tuples_checked,
                self.counterexamples.len(),
                if self.counterexamples.len() == 1 {
                    ""
                } else {
                    "s"
                }
            )
        }
    }
}

/// Verdicts for a whole axiom list; `overall` is their conjunction.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomSuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
    pub overall: bool,
}

impl AxiomSuiteReport {
    fn new(suite: impl Into<String>, checks: Vec<CheckReport>) -> Self {
        let overall = checks.iter().all(|c| c.holds);
        AxiomSuiteReport {
            suite: suite.into(),
            checks,
            overall,
        }
    }

    pub fn check(&self, identity: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.identity == identity)
    }
}

/// Runs one quantified identity over all basis tuples of the given arity,
/// in lexicographic order, comparing the two evaluated sides exactly.
fn quantify(
    identity: &str,
    dim: usize,
    arity: usize,
    opts: &CheckOptions,
    mut sides: impl FnMut(&[usize]) -> (Vector, Vector),
) -> CheckReport {
    let mut tuple = vec![0usize; arity];
    let mut tuples_checked = 0usize;
    let mut counterexamples = Vec::new();

    'scan: loop {
        tuples_checked += 1;
        let (lhs, rhs) = sides(&tuple);
        if lhs != rhs {
            counterexamples.push(Counterexample {
                tuple: tuple.iter().map(|i| i + 1).collect(),
                lhs,
                rhs,
            });
            if counterexamples.len() >= opts.max_counterexamples {
                break 'scan;
            }
        }
        // lexicographic odometer, last index fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < dim {
                break;
            }
            tuple[pos] = 0;
        }
    }

    CheckReport {
        identity: identity.to_string(),
        holds: counterexamples.is_empty(),
        tuples_checked,
        counterexamples,
    }
}

fn require_same_dim(product: &BinaryTensor, alpha: &LinearMap) -> Result<(), CheckError> {
    if product.dim() == alpha.dim() {
        Ok(())
    } else {
        Err(AlgebraError::Dimension {
            expected: product.dim(),
            found: alpha.dim(),
        }
        .into())
    }
}

/// α(x·y) = α(x)·α(y) over all basis pairs.
pub fn check_multiplicative(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(product, alpha)?;
    let a: Vec<Vector> = (0..product.dim())
        .map(|k| alpha.column(k).clone())
        .collect();
    Ok(quantify("multiplicative", product.dim(), 2, opts, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = alpha.apply(product.entry(i, j)).expect("dims agree");
        let rhs = product.apply(&a[i], &a[j]).expect("dims agree");
        (lhs, rhs)
    }))
}

/// α(x)·(y·z) = (x·y)·α(z) + α(y)·(x·z) over all basis triples.
pub fn check_left_hom_leibniz(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(product, alpha)?;
    let a: Vec<Vector> = (0..product.dim())
        .map(|k| alpha.column(k).clone())
        .collect();
    let mul = |x: &Vector, y: &Vector| product.apply(x, y).expect("dims agree");
    Ok(quantify("hom-leibniz-left", product.dim(), 3, opts, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = mul(&a[i], product.entry(j, k));
        let rhs = &mul(product.entry(i, j), &a[k]) + &mul(&a[j], product.entry(i, k));
        (lhs, rhs)
    }))
}

/// (x·y)·α(z) = (x·z)·α(y) + α(x)·(y·z) over all basis triples.
pub fn check_right_hom_leibniz(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(product, alpha)?;
    let a: Vec<Vector> = (0..product.dim())
        .map(|k| alpha.column(k).clone())
        .collect();
    let mul = |x: &Vector, y: &Vector| product.apply(x, y).expect("dims agree");
    Ok(quantify("hom-leibniz-right", product.dim(), 3, opts, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = mul(product.entry(i, j), &a[k]);
        let rhs = &mul(product.entry(i, k), &a[j]) + &mul(&a[i], product.entry(j, k));
        (lhs, rhs)
    }))
}

/// x·y = −(y·x) over all basis pairs.
pub fn check_anticommutative(product: &BinaryTensor, opts: &CheckOptions) -> CheckReport {
    quantify("anticommutative", product.dim(), 2, opts, |t| {
        let (i, j) = (t[0], t[1]);
        (product.entry(i, j).clone(), -product.entry(j, i))
    })
}

/// Anticommutativity plus the Hom-Jacobi identity, reported per sub-check.
pub fn check_hom_lie(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<AxiomSuiteReport, CheckError> {
    require_same_dim(product, alpha)?;
    let dim = product.dim();
    let anticommutative = check_anticommutative(product, opts);
    let params = product.params().clone();
    let basis: Vec<Vector> = (0..dim).map(|k| Vector::basis(&params, dim, k)).collect();
    let jacobi = quantify("hom-jacobi", dim, 3, opts, |t| {
        let lhs = product
            .hom_jacobian(alpha, &basis[t[0]], &basis[t[1]], &basis[t[2]])
            .expect("dims agree");
        (lhs, Vector::zero(&params, dim))
    });
    Ok(AxiomSuiteReport::new(
        "hom-lie",
        vec![anticommutative, jacobi],
    ))
}

/// J_α(x,y,z) = ↺{x,y,z} − ↺{y,x,z} over all basis triples. The binary
/// operation must already be skew-symmetric.
pub fn check_hom_akivis(
    bracket: &BinaryTensor,
    triple: &TernaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(bracket, alpha)?;
    if bracket.dim() != triple.dim() {
        return Err(AlgebraError::Dimension {
            expected: bracket.dim(),
            found: triple.dim(),
        }
        .into());
    }
    let skew = check_anticommutative(bracket, opts);
    if !skew.holds {
        return Err(CheckError::PreconditionReport(Box::new(skew)));
    }
    let dim = bracket.dim();
    let params = bracket.params().clone();
    let basis: Vec<Vector> = (0..dim).map(|k| Vector::basis(&params, dim, k)).collect();
    Ok(quantify("hom-akivis", dim, 3, opts, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = bracket
            .hom_jacobian(alpha, &basis[x], &basis[y], &basis[z])
            .expect("dims agree");
        // ↺{x,y,z} − ↺{y,x,z}, cyclic in (x,y,z)
        let cyc_plus = &(triple.entry(x, y, z) + triple.entry(y, z, x)) + triple.entry(z, x, y);
        let cyc_minus = &(triple.entry(y, x, z) + triple.entry(z, y, x)) + triple.entry(x, z, y);
        (lhs, &cyc_plus - &cyc_minus)
    }))
}

/// (x·y + y·x)·α(z) = 0 over all basis triples.
pub fn check_identity_3_1(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(product, alpha)?;
    let dim = product.dim();
    let params = product.params().clone();
    let a: Vec<Vector> = (0..dim).map(|k| alpha.column(k).clone()).collect();
    Ok(quantify("id-3-1", dim, 3, opts, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let sym = product.entry(i, j) + product.entry(j, i);
        let lhs = product.apply(&sym, &a[k]).expect("dims agree");
        (lhs, Vector::zero(&params, dim))
    }))
}

/// α(x)·[y,z] = [x·y, α(z)] + [α(y), x·z] over all basis triples, where
/// [,] is the skew-symmetrization of the product.
pub fn check_identity_3_2(
    product: &BinaryTensor,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    require_same_dim(product, alpha)?;
    let dim = product.dim();
    let bracket = product.skew_symmetrize();
    let a: Vec<Vector> = (0..dim).map(|k| alpha.column(k).clone()).collect();
    let br = |x: &Vector, y: &Vector| bracket.apply(x, y).expect("dims agree");
    Ok(quantify("id-3-2", dim, 3, opts, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = product
            .apply(&a[i], bracket.entry(j, k))
            .expect("dims agree");
        let rhs = &br(product.entry(i, j), &a[k]) + &br(&a[j], product.entry(i, k));
        (lhs, rhs)
    }))
}

/// The full Hom-Lie-Yamaguti axiom list HLY1–HLY8.
///
/// HLY1/HLY3 range over pairs, HLY2/HLY4/HLY5 over triples, HLY6/HLY7 over
/// 4-tuples and HLY8 over 5-tuples (its five distinct variables); α² is
/// computed by matrix composition.
pub fn check_hom_ly(h: &HomLYSpec, opts: &CheckOptions) -> AxiomSuiteReport {
    let dim = h.dim();
    let bracket = h.bracket();
    let triple = h.triple();
    let alpha = h.alpha();
    let params = bracket.params().clone();
    let zero = Vector::zero(&params, dim);

    let a: Vec<Vector> = (0..dim).map(|k| alpha.column(k).clone()).collect();
    let alpha2 = alpha.power(2);
    let a2: Vec<Vector> = (0..dim).map(|k| alpha2.column(k).clone()).collect();

    let br = |x: &Vector, y: &Vector| bracket.apply(x, y).expect("dims agree");
    let tr = |x: &Vector, y: &Vector, z: &Vector| triple.apply(x, y, z).expect("dims agree");

    let hly1 = quantify("HLY1", dim, 2, opts, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = alpha.apply(bracket.entry(x, y)).expect("dims agree");
        (lhs, br(&a[x], &a[y]))
    });
    let hly2 = quantify("HLY2", dim, 3, opts, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = alpha.apply(triple.entry(x, y, z)).expect("dims agree");
        (lhs, tr(&a[x], &a[y], &a[z]))
    });
    let hly3 = quantify("HLY3", dim, 2, opts, |t| {
        (
            bracket.entry(t[0], t[1]).clone(),
            -bracket.entry(t[1], t[0]),
        )
    });
    let hly4 = quantify("HLY4", dim, 3, opts, |t| {
        (
            triple.entry(t[0], t[1], t[2]).clone(),
            -triple.entry(t[1], t[0], t[2]),
        )
    });
    let hly5 = quantify("HLY5", dim, 3, opts, |t| {
        let mut acc = zero.clone();
        for (x, y, z) in cyclic3(t[0], t[1], t[2]) {
            acc = &acc + &br(bracket.entry(x, y), &a[z]);
            acc = &acc + triple.entry(x, y, z);
        }
        (acc, zero.clone())
    });
    let hly6 = quantify("HLY6", dim, 4, opts, |t| {
        let u = t[3];
        let mut acc = zero.clone();
        for (x, y, z) in cyclic3(t[0], t[1], t[2]) {
            acc = &acc + &tr(bracket.entry(x, y), &a[z], &a[u]);
        }
        (acc, zero.clone())
    });
    let hly7 = quantify("HLY7", dim, 4, opts, |t| {
        let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
        let lhs = tr(&a[x], &a[y], bracket.entry(u, v));
        let rhs = &br(triple.entry(x, y, u), &a2[v]) + &br(&a2[u], triple.entry(x, y, v));
        (lhs, rhs)
    });
    let hly8 = quantify("HLY8", dim, 5, opts, |t| {
        let (x, y, u, v, w) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = tr(&a2[x], &a2[y], triple.entry(u, v, w));
        let rhs = &(&tr(triple.entry(x, y, u), &a2[v], &a2[w])
            + &tr(&a2[u], triple.entry(x, y, v), &a2[w]))
            + &tr(&a2[u], &a2[v], triple.entry(x, y, w));
        (lhs, rhs)
    });

    AxiomSuiteReport::new(
        "hom-ly",
        vec![hly1, hly2, hly3, hly4, hly5, hly6, hly7, hly8],
    )
}

/// The untwisted Lie-Yamaguti axiom list LY1–LY6; the twisting map must be
/// the identity.
pub fn check_ly(h: &HomLYSpec, opts: &CheckOptions) -> Result<AxiomSuiteReport, CheckError> {
    if !h.alpha().is_identity() {
        return Err(CheckError::Precondition(
            "LY axioms require the identity twisting map".to_string(),
        ));
    }
    let dim = h.dim();
    let bracket = h.bracket();
    let triple = h.triple();
    let params = bracket.params().clone();
    let zero = Vector::zero(&params, dim);
    let basis: Vec<Vector> = (0..dim).map(|k| Vector::basis(&params, dim, k)).collect();

    let br = |x: &Vector, y: &Vector| bracket.apply(x, y).expect("dims agree");
    let tr = |x: &Vector, y: &Vector, z: &Vector| triple.apply(x, y, z).expect("dims agree");

    let ly1 = quantify("LY1", dim, 2, opts, |t| {
        (
            bracket.entry(t[0], t[1]).clone(),
            -bracket.entry(t[1], t[0]),
        )
    });
    let ly2 = quantify("LY2", dim, 3, opts, |t| {
        (
            triple.entry(t[0], t[1], t[2]).clone(),
            -triple.entry(t[1], t[0], t[2]),
        )
    });
    let ly3 = quantify("LY3", dim, 3, opts, |t| {
        let mut acc = zero.clone();
        for (x, y, z) in cyclic3(t[0], t[1], t[2]) {
            acc = &acc + &br(bracket.entry(x, y), &basis[z]);
            acc = &acc + triple.entry(x, y, z);
        }
        (acc, zero.clone())
    });
    let ly4 = quantify("LY4", dim, 4, opts, |t| {
        let u = t[3];
        let mut acc = zero.clone();
        for (x, y, z) in cyclic3(t[0], t[1], t[2]) {
            acc = &acc + &tr(bracket.entry(x, y), &basis[z], &basis[u]);
        }
        (acc, zero.clone())
    });
    let ly5 = quantify("LY5", dim, 4, opts, |t| {
        let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
        let lhs = tr(&basis[x], &basis[y], bracket.entry(u, v));
        let rhs = &br(triple.entry(x, y, u), &basis[v]) + &br(&basis[u], triple.entry(x, y, v));
        (lhs, rhs)
    });
    let ly6 = quantify("LY6", dim, 5, opts, |t| {
        let (x, y, u, v, w) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = tr(&basis[x], &basis[y], triple.entry(u, v, w));
        let rhs = &(&tr(triple.entry(x, y, u), &basis[v], &basis[w])
            + &tr(&basis[u], triple.entry(x, y, v), &basis[w]))
            + &tr(&basis[u], &basis[v], triple.entry(x, y, w));
        (lhs, rhs)
    });

    Ok(AxiomSuiteReport::new(
        "ly",
        vec![ly1, ly2, ly3, ly4, ly5, ly6],
    ))
}

fn cyclic3(x: usize, y: usize, z: usize) -> [(usize, usize, usize); 3] {
    [(x, y, z), (y, z, x), (z, x, y)]
}
