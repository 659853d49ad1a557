//! Parser for the line-oriented algebra-definition DSL.
//!
//! ```text
//! # comments run to end of line
//! algebra NAME
//! dim N
//! params p1 p2 ...          (optional)
//! prod I J -> EXPR
//! map I -> EXPR
//! ```
//!
//! `EXPR` is a linear combination of basis elements `e1..eN` with polynomial
//! coefficients over the declared parameters: rational literals `p/q`, the
//! Gaussian unit `I`, operators `+ - * ^` (nonnegative integer exponents) and
//! parentheses. Unspecified products are zero; an absent map block means the
//! identity map, a present one must give all `dim` images. Basis indices are
//! 1-based, mirroring the `e_1..e_n` convention of the tables this DSL
//! carries.

use crate::algebra::{AlgebraSpec, BinaryTensor, LinearMap, Vector};
use crate::coeff::{GaussRational, Params, Rational, Scalar};
use num_bigint::BigInt;
use std::collections::BTreeSet;

/// Largest accepted dimension; dense rank-4 tensors stay small at this size.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut params: Option<Params> = None;
    let mut product: Option<BinaryTensor> = None;
    let mut seen_products: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut map_rows: Vec<Option<Vector>> = Vec::new();
    let mut any_map = false;

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let keyword_col = line.len() - line.trim_start().len() + 1;
        let mut fields = trimmed.splitn(2, char::is_whitespace);
        let keyword = fields.next().unwrap();
        let rest = fields.next().unwrap_or("").trim();

        match keyword {
            "algebra" => {
                if name.is_some() {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "duplicate `algebra` line",
                    ));
                }
                if rest.is_empty() {
                    return Err(ParseError::new(lineno, keyword_col, "missing algebra name"));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                if name.is_none() {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "`algebra NAME` must come before `dim`",
                    ));
                }
                if dim.is_some() {
                    return Err(ParseError::new(lineno, keyword_col, "duplicate `dim` line"));
                }
                let n: usize = rest.parse().map_err(|_| {
                    ParseError::new(lineno, keyword_col, format!("invalid dimension `{rest}`"))
                })?;
                if n == 0 {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "dimension must be positive",
                    ));
                }
                if n > MAX_DIM {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        format!("dimension {n} exceeds the supported maximum {MAX_DIM}"),
                    ));
                }
                dim = Some(n);
            }
            "params" => {
                if params.is_some() {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "duplicate `params` line",
                    ));
                }
                if product.is_some() || any_map {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "`params` must come before `prod`/`map` statements",
                    ));
                }
                let mut names = Vec::new();
                for word in rest.split_whitespace() {
                    validate_param_name(word, lineno, keyword_col)?;
                    if names.iter().any(|n: &String| n == word) {
                        return Err(ParseError::new(
                            lineno,
                            keyword_col,
                            format!("duplicate parameter `{word}`"),
                        ));
                    }
                    names.push(word.to_string());
                }
                params = Some(Params::new(names));
            }
            "prod" => {
                let n = dim.ok_or_else(|| {
                    ParseError::new(lineno, keyword_col, "`dim N` must come before `prod`")
                })?;
                let ps = params.get_or_insert_with(Params::empty).clone();
                let tensor = product.get_or_insert_with(|| BinaryTensor::zero(&ps, n));
                map_rows.resize(n, None);

                let (indices, expr) = split_statement(rest, lineno, keyword_col)?;
                let parts: Vec<&str> = indices.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "`prod` expects two basis indices before `->`",
                    ));
                }
                let i = parse_index(parts[0], n, lineno, keyword_col)?;
                let j = parse_index(parts[1], n, lineno, keyword_col)?;
                if !seen_products.insert((i, j)) {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        format!("duplicate `prod {} {}` statement", i + 1, j + 1),
                    ));
                }
                let value = parse_expression(expr, &ps, n, lineno, expr_col(rest, raw_line))?;
                tensor.set_entry(i, j, value);
            }
            "map" => {
                let n = dim.ok_or_else(|| {
                    ParseError::new(lineno, keyword_col, "`dim N` must come before `map`")
                })?;
                let ps = params.get_or_insert_with(Params::empty).clone();
                product.get_or_insert_with(|| BinaryTensor::zero(&ps, n));
                map_rows.resize(n, None);
                any_map = true;

                let (indices, expr) = split_statement(rest, lineno, keyword_col)?;
                let parts: Vec<&str> = indices.split_whitespace().collect();
                if parts.len() != 1 {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        "`map` expects one basis index before `->`",
                    ));
                }
                let i = parse_index(parts[0], n, lineno, keyword_col)?;
                if map_rows[i].is_some() {
                    return Err(ParseError::new(
                        lineno,
                        keyword_col,
                        format!("duplicate `map {}` statement", i + 1),
                    ));
                }
                let value = parse_expression(expr, &ps, n, lineno, expr_col(rest, raw_line))?;
                map_rows[i] = Some(value);
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    keyword_col,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| ParseError::new(1, 1, "missing `algebra NAME` line"))?;
    let dim = dim.ok_or_else(|| ParseError::new(1, 1, "missing `dim N` line"))?;
    let params = params.unwrap_or_else(Params::empty);
    let product = product.unwrap_or_else(|| BinaryTensor::zero(&params, dim));

    let alpha = if any_map {
        let mut cols = Vec::with_capacity(dim);
        for (i, row) in map_rows.into_iter().enumerate() {
            match row {
                Some(v) => cols.push(v),
                None => {
                    return Err(ParseError::new(
                        1,
                        1,
                        format!("partial map block: `map {}` is missing", i + 1),
                    ));
                }
            }
        }
        LinearMap::from_columns(cols).expect("rows were built at the declared dimension")
    } else {
        LinearMap::identity(&params, dim)
    };

    AlgebraSpec::new(name, params, product, alpha).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Parses a stand-alone Gaussian-rational constant, e.g. `2`, `-1/2`, `I`,
/// `2+3*I`. Used for `--assign` values on the command line.
pub fn parse_gauss_constant(text: &str) -> Result<GaussRational, ParseError> {
    let params = Params::empty();
    let mut tokens = tokenize(text, 1, 1)?;
    let value = ExprParser {
        tokens: &mut tokens,
        params: &params,
        dim: 0,
        line: 1,
    }
    .parse_full()?;
    match value {
        Value::Scalar(s) => {
            let mut constant = GaussRational::zero();
            for (mono, coeff) in s.terms() {
                debug_assert!(mono.is_constant());
                constant = &constant + coeff;
            }
            Ok(constant)
        }
        Value::Vector(_) => Err(ParseError::new(
            1,
            1,
            "expected a constant, found a basis element",
        )),
    }
}

fn validate_param_name(word: &str, line: usize, col: usize) -> Result<(), ParseError> {
    let mut chars = word.chars();
    let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
    let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !head_ok || !tail_ok {
        return Err(ParseError::new(
            line,
            col,
            format!("invalid parameter name `{word}`"),
        ));
    }
    if word == "I" {
        return Err(ParseError::new(
            line,
            col,
            "`I` is reserved for the Gaussian unit",
        ));
    }
    if is_basis_name(word) {
        return Err(ParseError::new(
            line,
            col,
            format!("`{word}` is reserved for basis elements"),
        ));
    }
    Ok(())
}

fn is_basis_name(word: &str) -> bool {
    word.len() >= 2 && word.starts_with('e') && word[1..].chars().all(|c| c.is_ascii_digit())
}

fn split_statement(rest: &str, line: usize, col: usize) -> Result<(&str, &str), ParseError> {
    match rest.split_once("->") {
        Some((lhs, rhs)) => Ok((lhs.trim(), rhs.trim())),
        None => Err(ParseError::new(line, col, "expected `->` in statement")),
    }
}

fn expr_col(rest: &str, raw_line: &str) -> usize {
    // Column of the expression (after "->") within the original line.
    match raw_line.find("->") {
        Some(pos) => pos + 3,
        None => raw_line.len() - rest.len() + 1,
    }
}

fn parse_index(word: &str, dim: usize, line: usize, col: usize) -> Result<usize, ParseError> {
    let k: usize = word
        .parse()
        .map_err(|_| ParseError::new(line, col, format!("invalid basis index `{word}`")))?;
    if k == 0 || k > dim {
        return Err(ParseError::new(
            line,
            col,
            format!("basis index {k} out of range 1..{dim}"),
        ));
    }
    Ok(k - 1)
}

// ---- expression parsing ----

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    col: usize,
}

fn tokenize(text: &str, line: usize, base_col: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        let col = base_col + pos;
        match c {
            ' ' | '\t' => pos += 1,
            '+' => {
                tokens.push(Token {
                    kind: TokenKind::Plus,
                    col,
                });
                pos += 1;
            }
            '-' => {
                tokens.push(Token {
                    kind: TokenKind::Minus,
                    col,
                });
                pos += 1;
            }
            '*' => {
                tokens.push(Token {
                    kind: TokenKind::Star,
                    col,
                });
                pos += 1;
            }
            '^' => {
                tokens.push(Token {
                    kind: TokenKind::Caret,
                    col,
                });
                pos += 1;
            }
            '/' => {
                tokens.push(Token {
                    kind: TokenKind::Slash,
                    col,
                });
                pos += 1;
            }
            '(' => {
                tokens.push(Token {
                    kind: TokenKind::LParen,
                    col,
                });
                pos += 1;
            }
            ')' => {
                tokens.push(Token {
                    kind: TokenKind::RParen,
                    col,
                });
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &text[start..pos];
                let value: BigInt = digits.parse().expect("digit run parses");
                tokens.push(Token {
                    kind: TokenKind::Int(value),
                    col,
                });
            }
            c if c.is_ascii_alphabetic() => {
                let start = pos;
                while pos < bytes.len()
                    && ((bytes[pos] as char).is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(text[start..pos].to_string()),
                    col,
                });
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    tokens.reverse(); // pop from the back
    Ok(tokens)
}

/// A partially evaluated expression: either a pure coefficient or a linear
/// combination of basis elements.
#[derive(Debug, Clone)]
enum Value {
    Scalar(Scalar),
    Vector(Vector),
}

struct ExprParser<'a> {
    tokens: &'a mut Vec<Token>,
    params: &'a Params,
    dim: usize,
    line: usize,
}

impl ExprParser<'_> {
    fn err(&self, col: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, col, message)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.last()
    }

    fn next(&mut self) -> Option<Token> {
        self.tokens.pop()
    }

    fn end_col(&self) -> usize {
        self.peek().map_or(1, |t| t.col)
    }

    fn parse_full(mut self) -> Result<Value, ParseError> {
        if self.peek().is_none() {
            return Err(self.err(1, "empty expression"));
        }
        let value = self.parse_expr()?;
        if let Some(tok) = self.peek() {
            return Err(self.err(tok.col, "unexpected trailing input in expression"));
        }
        Ok(value)
    }

    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_term()?;
        while let Some(tok) = self.peek() {
            let negate = match tok.kind {
                TokenKind::Plus => false,
                TokenKind::Minus => true,
                _ => break,
            };
            let col = tok.col;
            self.next();
            let rhs = self.parse_term()?;
            let rhs = if negate { self.negate(rhs) } else { rhs };
            acc = self.add(acc, rhs, col)?;
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Value, ParseError> {
        let mut negate = false;
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Minus {
                self.next();
                negate = true;
            }
        }
        let mut acc = self.parse_factor()?;
        while let Some(tok) = self.peek() {
            if tok.kind != TokenKind::Star {
                break;
            }
            let col = tok.col;
            self.next();
            let rhs = self.parse_factor()?;
            acc = self.mul(acc, rhs, col)?;
        }
        Ok(if negate { self.negate(acc) } else { acc })
    }

    fn parse_factor(&mut self) -> Result<Value, ParseError> {
        let base = self.parse_atom()?;
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Caret {
                let col = tok.col;
                self.next();
                let exp = self.parse_exponent(col)?;
                return match base {
                    Value::Scalar(s) => Ok(Value::Scalar(s.pow(exp))),
                    Value::Vector(v) => {
                        if exp == 1 {
                            Ok(Value::Vector(v))
                        } else {
                            Err(self.err(col, "basis elements cannot be raised to powers"))
                        }
                    }
                };
            }
        }
        Ok(base)
    }

    fn parse_exponent(&mut self, caret_col: usize) -> Result<u32, ParseError> {
        match self.next() {
            Some(Token {
                kind: TokenKind::Int(n),
                col,
            }) => u32::try_from(&n)
                .ok()
                .filter(|&e| e <= u32::from(u16::MAX))
                .ok_or_else(|| self.err(col, format!("exponent {n} out of range"))),
            Some(Token {
                kind: TokenKind::Minus,
                col,
            }) => Err(self.err(col, "exponents must be nonnegative integers")),
            Some(tok) => Err(self.err(tok.col, "expected an integer exponent")),
            None => Err(self.err(caret_col, "expected an integer exponent after `^`")),
        }
    }

    fn parse_atom(&mut self) -> Result<Value, ParseError> {
        let Some(tok) = self.next() else {
            return Err(self.err(self.end_col(), "expected an expression atom"));
        };
        match tok.kind {
            TokenKind::Int(numer) => {
                // Optional `/ denominator` forms a rational literal.
                if self.peek().map(|t| &t.kind) == Some(&TokenKind::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token {
                            kind: TokenKind::Int(denom),
                            col,
                        }) => {
                            if denom == BigInt::from(0) {
                                return Err(self.err(col, "denominator must be nonzero"));
                            }
                            let q = Rational::new(numer, denom);
                            Ok(Value::Scalar(Scalar::constant(
                                self.params,
                                GaussRational::from_rational(q),
                            )))
                        }
                        Some(tok) => Err(self.err(tok.col, "expected an integer denominator")),
                        None => Err(self.err(tok.col, "expected an integer denominator")),
                    }
                } else {
                    Ok(Value::Scalar(Scalar::constant(
                        self.params,
                        GaussRational::from_rational(Rational::from_integer(numer)),
                    )))
                }
            }
            TokenKind::Ident(word) => {
                if word == "I" {
                    return Ok(Value::Scalar(Scalar::gaussian_unit(self.params)));
                }
                if is_basis_name(&word) {
                    let k: usize = word[1..].parse().map_err(|_| {
                        self.err(tok.col, format!("invalid basis element `{word}`"))
                    })?;
                    if k == 0 || k > self.dim {
                        return Err(self.err(
                            tok.col,
                            format!("basis index {k} out of range 1..{}", self.dim),
                        ));
                    }
                    return Ok(Value::Vector(Vector::basis(self.params, self.dim, k - 1)));
                }
                match Scalar::parameter(self.params, &word) {
                    Some(s) => Ok(Value::Scalar(s)),
                    None => Err(self.err(
                        tok.col,
                        format!("unknown parameter `{word}` (not declared in `params`)"),
                    )),
                }
            }
            TokenKind::LParen => {
                let inner = self.parse_expr()?;
                match self.next() {
                    Some(Token {
                        kind: TokenKind::RParen,
                        ..
                    }) => Ok(inner),
                    Some(t) => Err(self.err(t.col, "expected `)`")),
                    None => Err(self.err(tok.col, "unclosed `(`")),
                }
            }
            TokenKind::Minus => Err(self.err(tok.col, "unexpected `-`")),
            TokenKind::Plus => Err(self.err(tok.col, "unexpected `+`")),
            TokenKind::Star => Err(self.err(tok.col, "unexpected `*`")),
            TokenKind::Caret => Err(self.err(tok.col, "unexpected `^`")),
            TokenKind::Slash => Err(self.err(tok.col, "unexpected `/`")),
            TokenKind::RParen => Err(self.err(tok.col, "unexpected `)`")),
        }
    }

    fn negate(&self, v: Value) -> Value {
        match v {
            Value::Scalar(s) => Value::Scalar(-&s),
            Value::Vector(v) => Value::Vector(-&v),
        }
    }

    fn add(&self, a: Value, b: Value, col: usize) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &y)),
            (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(&x + &y)),
            (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
                if s.is_zero() {
                    Ok(Value::Vector(v))
                } else {
                    Err(self.err(col, "cannot add a coefficient to a basis expression"))
                }
            }
        }
    }

    fn mul(&self, a: Value, b: Value, col: usize) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
                Ok(Value::Vector(v.scale(&s)))
            }
            (Value::Vector(_), Value::Vector(_)) => {
                Err(self.err(col, "expressions must be linear in basis elements"))
            }
        }
    }
}

fn parse_expression(
    expr: &str,
    params: &Params,
    dim: usize,
    line: usize,
    base_col: usize,
) -> Result<Vector, ParseError> {
    let mut tokens = tokenize(expr, line, base_col)?;
    let value = ExprParser {
        tokens: &mut tokens,
        params,
        dim,
        line,
    }
    .parse_full()?;
    match value {
        Value::Vector(v) => Ok(v),
        Value::Scalar(s) if s.is_zero() => Ok(Vector::zero(params, dim)),
        Value::Scalar(_) => Err(ParseError::new(
            line,
            base_col,
            "expression contains no basis element",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Assignment;

    #[test]
    fn parses_minimal_product_statement() {
        let spec = parse_algebra_file("algebra t\ndim 3\nprod 2 3 -> e2\n").unwrap();
        let ps = Params::empty();
        let e = |k: usize| Vector::basis(&ps, 3, k);
        assert_eq!(spec.product().entry(1, 2), &e(1));
        assert!(spec.product().entry(0, 0).is_zero());
        assert!(spec.alpha().is_identity());
        assert_eq!(spec.name(), "t");
    }

    #[test]
    fn empty_product_block_is_zero_algebra() {
        let spec = parse_algebra_file("algebra z\ndim 2\n").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(spec.product().entry(i, j).is_zero());
            }
        }
    }

    #[test]
    fn parses_polynomial_coefficients_and_maps() {
        let text = "algebra l4\ndim 3\nparams a b l\n\
                    prod 3 1 -> l*e1\n\
                    map 1 -> (a*l+1)*e1\nmap 2 -> b*e2\nmap 3 -> a*e1 + e2 + e3\n";
        let spec = parse_algebra_file(text).unwrap();
        let ps = spec.params().clone();
        assert_eq!(ps.names(), ["a", "b", "l"]);
        let e = |k: usize| Vector::basis(&ps, 3, k);
        let a = Scalar::parameter(&ps, "a").unwrap();
        let l = Scalar::parameter(&ps, "l").unwrap();
        let al1 = &(&a * &l) + &Scalar::one(&ps);
        assert_eq!(spec.alpha().column(0), &e(0).scale(&al1));
        assert_eq!(
            spec.alpha().column(2),
            &(&e(0).scale(&a) + &(&e(1) + &e(2)))
        );
        assert_eq!(spec.product().entry(2, 0), &e(0).scale(&l));
    }

    #[test]
    fn parses_gaussian_and_rational_literals() {
        let text = "algebra g\ndim 2\nprod 1 1 -> 1/2*e1 + I*e2\nprod 1 2 -> (2+3*I)*e1\n";
        let spec = parse_algebra_file(text).unwrap();
        let ps = Params::empty();
        let e = |k: usize| Vector::basis(&ps, 2, k);
        let half = Scalar::constant(&ps, GaussRational::from_ratio(1, 2));
        let i = Scalar::gaussian_unit(&ps);
        assert_eq!(
            spec.product().entry(0, 0),
            &(&e(0).scale(&half) + &e(1).scale(&i))
        );
        let two_three_i = Scalar::constant(
            &ps,
            GaussRational::new(
                Rational::from_integer(2.into()),
                Rational::from_integer(3.into()),
            ),
        );
        assert_eq!(spec.product().entry(0, 1), &e(0).scale(&two_three_i));
    }

    #[test]
    fn parses_negative_sums_and_powers() {
        let text = "algebra n\ndim 4\nparams b\nprod 2 1 -> -e3 - e4\nprod 1 1 -> -1/2*b^2*e2\n";
        let spec = parse_algebra_file(text).unwrap();
        let ps = spec.params().clone();
        let e = |k: usize| Vector::basis(&ps, 4, k);
        assert_eq!(spec.product().entry(1, 0), &(&-&e(2) - &e(3)));
        let b2 = Scalar::parameter(&ps, "b").unwrap().pow(2);
        let coeff = b2.scale(&GaussRational::from_ratio(-1, 2));
        assert_eq!(spec.product().entry(0, 0), &e(1).scale(&coeff));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header comment\nalgebra c\n\ndim 1\nprod 1 1 -> e1 # trailing\n";
        let spec = parse_algebra_file(text).unwrap();
        assert!(!spec.product().entry(0, 0).is_zero());
    }

    #[test]
    fn rejects_syntax_errors_with_position() {
        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e1 +\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("atom"));

        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e1 e2\n").unwrap_err();
        assert_eq!(err.line, 3);

        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> $\n").unwrap_err();
        assert!(err.message.contains("unexpected character"));
    }

    #[test]
    fn rejects_out_of_range_indices() {
        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 3 -> e1\n").unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e3\n").unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_algebra_file("algebra x\ndim 2\nprod 0 1 -> e1\n").unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn rejects_duplicates_and_partial_maps() {
        let err =
            parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e1\nprod 1 1 -> e2\n").unwrap_err();
        assert!(err.message.contains("duplicate `prod 1 1`"));

        let err = parse_algebra_file("algebra x\ndim 2\nmap 1 -> e1\n").unwrap_err();
        assert!(err.message.contains("partial map block"));

        let err = parse_algebra_file("algebra x\ndim 2\nmap 1 -> e1\nmap 1 -> e2\n").unwrap_err();
        assert!(err.message.contains("duplicate `map 1`"));
    }

    #[test]
    fn rejects_reserved_parameter_names() {
        let err = parse_algebra_file("algebra x\ndim 2\nparams I\n").unwrap_err();
        assert!(err.message.contains("reserved"));
        let err = parse_algebra_file("algebra x\ndim 2\nparams e2\n").unwrap_err();
        assert!(err.message.contains("reserved"));
        // `end` is fine: only `e<digits>` is a basis name.
        assert!(parse_algebra_file("algebra x\ndim 2\nparams end\n").is_ok());
    }

    #[test]
    fn rejects_unknown_parameters_and_nonlinear_terms() {
        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> q*e1\n").unwrap_err();
        assert!(err.message.contains("unknown parameter"));

        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e1*e2\n").unwrap_err();
        assert!(err.message.contains("linear"));

        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> e1^2\n").unwrap_err();
        assert!(err.message.contains("powers"));

        let err = parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> 2\n").unwrap_err();
        assert!(err.message.contains("no basis element"));

        // A literal zero coefficient is accepted as the zero vector.
        assert!(parse_algebra_file("algebra x\ndim 2\nprod 1 1 -> 0\n").is_ok());
    }

    #[test]
    fn rejects_missing_header_lines() {
        assert!(parse_algebra_file("dim 2\n").is_err());
        assert!(parse_algebra_file("algebra x\nprod 1 1 -> e1\n").is_err());
        assert!(parse_algebra_file("algebra x\ndim 0\n").is_err());
        assert!(parse_algebra_file("algebra x\ndim 99\n").is_err());
    }

    #[test]
    fn substitution_after_parse_round_trips_values() {
        let text = "algebra s\ndim 2\nparams t\nprod 1 2 -> t^2*e1\n";
        let spec = parse_algebra_file(text).unwrap();
        let mut asg = Assignment::new();
        asg.insert("t".into(), GaussRational::from_integer(3));
        let num = spec.substitute(&asg).unwrap();
        let ps = Params::empty();
        assert_eq!(
            num.product().entry(0, 1),
            &Vector::basis(&ps, 2, 0).scale(&Scalar::from_integer(&ps, 9))
        );
    }

    #[test]
    fn parse_gauss_constant_forms() {
        assert_eq!(
            parse_gauss_constant("2").unwrap(),
            GaussRational::from_integer(2)
        );
        assert_eq!(
            parse_gauss_constant("-1/2").unwrap(),
            GaussRational::from_ratio(-1, 2)
        );
        assert_eq!(parse_gauss_constant("I").unwrap(), GaussRational::i());
        assert_eq!(
            parse_gauss_constant("2+3*I").unwrap(),
            GaussRational::new(
                Rational::from_integer(2.into()),
                Rational::from_integer(3.into())
            )
        );
        assert!(parse_gauss_constant("e1").is_err());
        assert!(parse_gauss_constant("").is_err());
    }
}
