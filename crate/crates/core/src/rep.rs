//! Semigroups of matrix type `M^0(S, A, B; P)` over a cyclic semigroup,
//! exact evaluation of their sandwich matrices, and construction plus
//! verification of the induced matrix representations.

use std::fmt::Write as _;

use num_traits::Zero;
use serde_json::json;
use thiserror::Error;

use crate::matrix::{rational_pow, Rational, RationalMatrix};
use crate::word::Word;

/// One sandwich-matrix entry: the zero element or a power of the cyclic
/// generator (`Power(0)` is the adjoined identity `1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SandwichEntry {
    Theta,
    Power(u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixRepError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("no sandwich entry equals 1, so the data cannot be normalized to p(1,1) = 1")]
    NoUnitEntry,
    #[error("lambda must be nonzero: evaluating at 0 collapses every image to the zero map")]
    ZeroLambda,
    #[error("the image of the generator is not a nonzero scalar times a rank-1 idempotent")]
    NotScaledIdempotent,
    #[error("index {index} outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
}

/// The combinatorial data of a semigroup of matrix type: a square sandwich
/// matrix (rows indexed by the right labels `B`, columns by the left labels
/// `A`) with entries in `{theta} ∪ {s^k}`, normalized so `p(1,1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixTypeData {
    size: usize,
    row_labels: Vec<Word>,
    col_labels: Vec<Word>,
    entries: Vec<SandwichEntry>,
    symbol: String,
}

/// An element of the semigroup of matrix type: the zero, or `(s^k; a, b)`
/// with `k >= 1` and 1-based indices `a` into `A`, `b` into `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixTypeElement {
    Theta,
    Elem { exp: u32, a: usize, b: usize },
}

impl MatrixTypeElement {
    pub fn elem(exp: u32, a: usize, b: usize) -> Self {
        assert!(exp >= 1, "semigroup elements have exponent >= 1");
        MatrixTypeElement::Elem { exp, a, b }
    }
}

impl MatrixTypeData {
    /// Validates and normalizes raw data: the matrix must be square, some
    /// entry must equal `1`, and rows/columns are swapped (with their
    /// labels) until `p(1,1) = 1`.
    pub fn new(
        row_labels: Vec<Word>,
        col_labels: Vec<Word>,
        entries: Vec<Vec<SandwichEntry>>,
        symbol: impl Into<String>,
    ) -> Result<Self, MatrixRepError> {
        let size = entries.len();
        if row_labels.len() != size || col_labels.len() != size {
            return Err(MatrixRepError::Malformed {
                line: 0,
                reason: "label count does not match matrix size".into(),
            });
        }
        if entries.iter().any(|row| row.len() != size) {
            return Err(MatrixRepError::Malformed {
                line: 0,
                reason: "sandwich matrix is not square".into(),
            });
        }
        let mut data = MatrixTypeData {
            size,
            row_labels,
            col_labels,
            entries: entries.into_iter().flatten().collect(),
            symbol: symbol.into(),
        };
        data.normalize_unit()?;
        Ok(data)
    }

    fn normalize_unit(&mut self) -> Result<(), MatrixRepError> {
        let unit = (0..self.size * self.size)
            .find(|&k| self.entries[k] == SandwichEntry::Power(0))
            .ok_or(MatrixRepError::NoUnitEntry)?;
        let (b, a) = (unit / self.size, unit % self.size);
        if b != 0 {
            for j in 0..self.size {
                self.entries.swap(j, b * self.size + j);
            }
            self.row_labels.swap(0, b);
        }
        if a != 0 {
            for i in 0..self.size {
                self.entries.swap(i * self.size, i * self.size + a);
            }
            self.col_labels.swap(0, a);
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn row_labels(&self) -> &[Word] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Word] {
        &self.col_labels
    }

    /// Sandwich entry `p(b, a)` with 1-based indices.
    pub fn entry(&self, b: usize, a: usize) -> SandwichEntry {
        assert!((1..=self.size).contains(&b) && (1..=self.size).contains(&a));
        self.entries[(b - 1) * self.size + (a - 1)]
    }

    /// The expected sandwich size for the cycle of length `n` at level `i`:
    /// the binomial coefficient `C(n, i+1)`.
    pub fn expected_size(n: usize, i: usize) -> usize {
        binomial(n, i + 1)
    }

    /// The built-in data for the 3-cycle at the given level (0 or 1).
    pub fn c3_level(level: usize) -> Option<MatrixTypeData> {
        use SandwichEntry::{Power, Theta};
        let w = |s: &str| -> Word { s.parse().expect("static label") };
        match level {
            0 => Some(
                MatrixTypeData::new(
                    vec![w("e"), w("3"), w("3 2")],
                    vec![w("e"), w("1"), w("2 1")],
                    vec![
                        vec![Power(0), Power(0), Theta],
                        vec![Power(0), Theta, Power(1)],
                        vec![Theta, Power(1), Power(1)],
                    ],
                    "s",
                )
                .expect("static data is valid"),
            ),
            1 => Some(
                MatrixTypeData::new(
                    vec![w("e"), w("3"), w("3 1")],
                    vec![w("e"), w("2"), w("1 2")],
                    vec![
                        vec![Power(0), Power(0), Power(0)],
                        vec![Power(0), Power(0), Power(1)],
                        vec![Power(0), Power(1), Power(1)],
                    ],
                    "t",
                )
                .expect("static data is valid"),
            ),
            _ => None,
        }
    }

    /// Parses the sandwich-data text format: `size n`, a line of row labels,
    /// a line of column labels, then `n` rows of entries (`theta`, `1`, or
    /// `s^k`). Blank lines and `#` comments are skipped.
    pub fn load(text: &str) -> Result<Self, MatrixRepError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(MatrixRepError::Malformed {
            line: 0,
            reason: "empty sandwich file".into(),
        })?;
        let size: usize = header
            .strip_prefix("size")
            .map(str::trim)
            .and_then(|t| t.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or(MatrixRepError::Malformed {
                line,
                reason: format!("expected `size n`, got `{header}`"),
            })?;
        let mut labels = Vec::new();
        for _ in 0..2 {
            let (line, text) = lines.next().ok_or(MatrixRepError::Malformed {
                line: 0,
                reason: "missing label line".into(),
            })?;
            let parsed: Result<Vec<Word>, _> = text.split_whitespace().map(parse_label).collect();
            let parsed = parsed.map_err(|reason| MatrixRepError::Malformed { line, reason })?;
            if parsed.len() != size {
                return Err(MatrixRepError::Malformed {
                    line,
                    reason: format!("expected {size} labels, got {}", parsed.len()),
                });
            }
            labels.push(parsed);
        }
        let mut entries = Vec::with_capacity(size);
        for _ in 0..size {
            let (line, text) = lines.next().ok_or(MatrixRepError::Malformed {
                line: 0,
                reason: "missing matrix row".into(),
            })?;
            let row: Result<Vec<SandwichEntry>, String> =
                text.split_whitespace().map(parse_entry).collect();
            let row = row.map_err(|reason| MatrixRepError::Malformed { line, reason })?;
            if row.len() != size {
                return Err(MatrixRepError::Malformed {
                    line,
                    reason: format!("expected {size} entries, got {}", row.len()),
                });
            }
            entries.push(row);
        }
        let col_labels = labels.pop().expect("two label lines");
        let row_labels = labels.pop().expect("two label lines");
        MatrixTypeData::new(row_labels, col_labels, entries, "s")
    }

    /// Renders the data in the exact format `load` accepts; `load` followed
    /// by `save` is byte-identical on canonical files.
    pub fn save(&self) -> String {
        let mut out = format!("size {}\n", self.size);
        let labels = |ws: &[Word]| ws.iter().map(label_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{}", labels(&self.row_labels));
        let _ = writeln!(out, "{}", labels(&self.col_labels));
        for b in 1..=self.size {
            let row: Vec<String> = (1..=self.size)
                .map(|a| match self.entry(b, a) {
                    SandwichEntry::Theta => "theta".to_string(),
                    SandwichEntry::Power(0) => "1".to_string(),
                    SandwichEntry::Power(k) => format!("s^{k}"),
                })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Sandwich multiplication: `(s^k; a, b)(s^m; a', b')` is
    /// `(s^(k+m+n); a, b')` when `p(b, a') = s^n` and `theta` when
    /// `p(b, a') = theta`; `theta` is absorbing.
    pub fn multiply(&self, x: &MatrixTypeElement, y: &MatrixTypeElement) -> MatrixTypeElement {
        match (x, y) {
            (MatrixTypeElement::Theta, _) | (_, MatrixTypeElement::Theta) => {
                MatrixTypeElement::Theta
            }
            (
                MatrixTypeElement::Elem { exp: k, a, b },
                MatrixTypeElement::Elem { exp: m, a: a2, b: b2 },
            ) => match self.entry(*b, *a2) {
                SandwichEntry::Theta => MatrixTypeElement::Theta,
                SandwichEntry::Power(n) => MatrixTypeElement::Elem { exp: k + m + n, a: *a, b: *b2 },
            },
        }
    }

    /// Evaluates the sandwich matrix at a nonzero rational: `s^k` becomes
    /// `lambda^k` and `theta` becomes `0`.
    pub fn evaluate(&self, lambda: &Rational) -> Result<RationalMatrix, MatrixRepError> {
        if lambda.is_zero() {
            return Err(MatrixRepError::ZeroLambda);
        }
        let mut m = RationalMatrix::zeros(self.size, self.size);
        for b in 1..=self.size {
            for a in 1..=self.size {
                if let SandwichEntry::Power(k) = self.entry(b, a) {
                    m.set(b - 1, a - 1, rational_pow(lambda, k as i64));
                }
            }
        }
        Ok(m)
    }

    pub fn format_element(&self, el: &MatrixTypeElement) -> String {
        match el {
            MatrixTypeElement::Theta => "theta".to_string(),
            MatrixTypeElement::Elem { exp, a, b } => {
                format!("({}^{}; {}, {})", self.symbol, exp, a, b)
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn label_string(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.letters().iter().map(|l| format!("x{l}")).collect()
}

fn parse_label(tok: &str) -> Result<Word, String> {
    if tok == "1" || tok == "e" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for part in tok.split('x') {
        if part.is_empty() {
            continue;
        }
        let l: usize = part
            .parse()
            .map_err(|_| format!("bad label token `{tok}`"))?;
        if l == 0 {
            return Err(format!("bad label token `{tok}`"));
        }
        letters.push(l);
    }
    if letters.is_empty() || !tok.starts_with('x') {
        return Err(format!("bad label token `{tok}`"));
    }
    Ok(Word::new(letters))
}

fn parse_entry(tok: &str) -> Result<SandwichEntry, String> {
    match tok {
        "theta" => Ok(SandwichEntry::Theta),
        "1" => Ok(SandwichEntry::Power(0)),
        _ => {
            let k = tok
                .strip_prefix("s^")
                .and_then(|t| t.parse::<u32>().ok())
                .ok_or_else(|| format!("malformed entry `{tok}` (want theta, 1, or s^k)"))?;
            Ok(SandwichEntry::Power(k))
        }
    }
}

/// A matrix representation of a semigroup of matrix type, realized through a
/// full-rank factorization `P = C * D` of the evaluated sandwich matrix:
/// `(s^k; a, b)` maps to `D * (lambda^k E(a,b)) * C`, an `r x r` matrix with
/// `r = rank(P)`.
#[derive(Debug, Clone)]
pub struct Representation {
    lambda: Rational,
    dim: usize,
    size: usize,
    c: RationalMatrix,
    d: RationalMatrix,
}

impl Representation {
    /// Builds the representation at a nonzero rational parameter.
    pub fn build(data: &MatrixTypeData, lambda: &Rational) -> Result<Self, MatrixRepError> {
        let pbar = data.evaluate(lambda)?;
        let (c, d) = pbar.full_rank_factorization();
        let dim = c.cols();
        Ok(Representation { lambda: lambda.clone(), dim, size: data.size(), c, d })
    }

    #[cfg(test)]
    pub(crate) fn from_parts(lambda: Rational, c: RationalMatrix, d: RationalMatrix) -> Self {
        let dim = c.cols();
        let size = c.rows();
        Representation { lambda, dim, size, c, d }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// The factorization pair `(C, D)` with `C * D` equal to the evaluated
    /// sandwich matrix.
    pub fn factorization(&self) -> (&RationalMatrix, &RationalMatrix) {
        (&self.c, &self.d)
    }

    /// Image of an element; `theta` maps to the zero matrix.
    pub fn image(&self, el: &MatrixTypeElement) -> RationalMatrix {
        match el {
            MatrixTypeElement::Theta => RationalMatrix::zeros(self.dim, self.dim),
            MatrixTypeElement::Elem { exp, a, b } => {
                assert!((1..=self.size).contains(a) && (1..=self.size).contains(b));
                let scale = rational_pow(&self.lambda, *exp as i64);
                let mut out = RationalMatrix::zeros(self.dim, self.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let v = self.d.get(i, a - 1) * self.c.get(b - 1, j) * &scale;
                        out.set(i, j, v);
                    }
                }
                out
            }
        }
    }

    /// Exports the representation with the images of all exponent-1 elements
    /// as exact fraction strings.
    pub fn export_json(&self, data: &MatrixTypeData) -> serde_json::Value {
        let mut generators = Vec::new();
        for a in 1..=self.size {
            for b in 1..=self.size {
                let el = MatrixTypeElement::elem(1, a, b);
                generators.push(json!({
                    "element": data.format_element(&el),
                    "matrix": self.image(&el).row_strings(),
                }));
            }
        }
        json!({
            "lambda": self.lambda.to_string(),
            "dim": self.dim,
            "generators": generators,
        })
    }
}

/// Exhaustively checks multiplicativity of the representation on all element
/// pairs with exponents up to `kmax` (plus the zero), with exact equality.
pub fn verify_homomorphism(rep: &Representation, data: &MatrixTypeData, kmax: u32) -> bool {
    assert!(kmax >= 1);
    let mut elements = vec![MatrixTypeElement::Theta];
    for exp in 1..=kmax {
        for a in 1..=data.size() {
            for b in 1..=data.size() {
                elements.push(MatrixTypeElement::elem(exp, a, b));
            }
        }
    }
    for x in &elements {
        let ix = rep.image(x);
        for y in &elements {
            let lhs = ix.mul(&rep.image(y));
            let rhs = rep.image(&data.multiply(x, y));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The unique extension of a verified representation to the completely
/// 0-simple closure, defined for every integer exponent `p` by
/// `image(s^p; a, b) = image(s; a, 1) * lambda^(p-2) * e * image(s; 1, b)`
/// with `e` the rank-1 idempotent `lambda^(-1) * image(s; 1, 1)`.
#[derive(Debug, Clone)]
pub struct ExtendedRep {
    rep: Representation,
    e: RationalMatrix,
}

impl ExtendedRep {
    pub fn new(rep: Representation, data: &MatrixTypeData) -> Result<Self, MatrixRepError> {
        assert_eq!(rep.size, data.size(), "representation built from different data");
        let s11 = rep.image(&MatrixTypeElement::elem(1, 1, 1));
        let e = s11.scale(&rep.lambda.recip());
        if e.mul(&e) != e || e.rank() != 1 {
            return Err(MatrixRepError::NotScaledIdempotent);
        }
        Ok(ExtendedRep { rep, e })
    }

    /// The rank-1 idempotent carrying the cyclic-group action.
    pub fn idempotent(&self) -> &RationalMatrix {
        &self.e
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    /// Image of `(s^p; a, b)` for any integer exponent `p`.
    pub fn image_at(&self, p: i64, a: usize, b: usize) -> RationalMatrix {
        let left = self.rep.image(&MatrixTypeElement::elem(1, a, 1));
        let right = self.rep.image(&MatrixTypeElement::elem(1, 1, b));
        let scale = rational_pow(&self.rep.lambda, p - 2);
        left.mul(&self.e).mul(&right).scale(&scale)
    }

    pub fn zero_image(&self) -> RationalMatrix {
        RationalMatrix::zeros(self.rep.dim, self.rep.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn m0() -> MatrixTypeData {
        MatrixTypeData::c3_level(0).unwrap()
    }

    fn m1() -> MatrixTypeData {
        MatrixTypeData::c3_level(1).unwrap()
    }

    #[test]
    fn c3_golden_data() {
        use SandwichEntry::{Power, Theta};
        let d1 = m1();
        assert_eq!(d1.size(), 3);
        assert_eq!(d1.entry(1, 1), Power(0));
        assert_eq!(d1.entry(2, 3), Power(1));
        assert_eq!(d1.entry(3, 1), Power(0));
        // Symmetric.
        for b in 1..=3 {
            for a in 1..=3 {
                assert_eq!(d1.entry(b, a), d1.entry(a, b));
            }
        }
        let d0 = m0();
        assert_eq!(d0.entry(1, 3), Theta);
        assert_eq!(d0.entry(3, 1), Theta);
        assert_eq!(d0.entry(2, 3), Power(1));
        for b in 1..=3 {
            for a in 1..=3 {
                assert_eq!(d0.entry(b, a), d0.entry(a, b));
            }
        }
        // Labels.
        let labels = |ws: &[Word]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(labels(d0.col_labels()), vec!["e", "1", "2 1"]);
        assert_eq!(labels(d0.row_labels()), vec!["e", "3", "3 2"]);
        assert_eq!(labels(d1.col_labels()), vec!["e", "2", "1 2"]);
        assert_eq!(labels(d1.row_labels()), vec!["e", "3", "3 1"]);
    }

    #[test]
    fn save_load_round_trip() {
        let text = m1().save();
        let reloaded = MatrixTypeData::load(&text).unwrap();
        assert_eq!(reloaded.save(), text);
    }

    #[test]
    fn load_checks_structure() {
        // A 6x6 file of the right shape for the 4-cycle at level 1.
        let mut text = String::from("size 6\n");
        let labels: Vec<String> = (1..=6).map(|i| format!("x{i}")).collect();
        text.push_str(&format!("{}\n", labels.join(" ")));
        text.push_str(&format!("{}\n", labels.join(" ")));
        for row in 0..6 {
            let entries: Vec<&str> = (0..6).map(|col| if row == col { "1" } else { "s^1" }).collect();
            text.push_str(&format!("{}\n", entries.join(" ")));
        }
        let data = MatrixTypeData::load(&text).unwrap();
        assert_eq!(data.size(), MatrixTypeData::expected_size(4, 1));

        // No unit entry anywhere.
        let bad = "size 1\n1\n1\ns^2\n";
        assert_eq!(MatrixTypeData::load(bad), Err(MatrixRepError::NoUnitEntry));

        // Malformed exponent.
        let bad = "size 1\n1\n1\ns^x\n";
        assert!(matches!(
            MatrixTypeData::load(bad),
            Err(MatrixRepError::Malformed { line: 4, .. })
        ));

        // Non-square row.
        let bad = "size 2\n1 x1\n1 x2\n1 s^1\n1\n";
        assert!(matches!(MatrixTypeData::load(bad), Err(MatrixRepError::Malformed { .. })));
    }

    #[test]
    fn load_normalizes_unit_position() {
        let text = "size 2\nx3 1\nx2 1\ns^1 s^2\ns^3 1\n";
        let data = MatrixTypeData::load(text).unwrap();
        assert_eq!(data.entry(1, 1), SandwichEntry::Power(0));
        // The swap carried the labels along.
        assert_eq!(data.row_labels()[0], Word::empty());
        assert_eq!(data.col_labels()[0], Word::empty());
    }

    #[test]
    fn multiply_examples() {
        let d1 = m1();
        let x = MatrixTypeElement::elem(2, 2, 3);
        let y = MatrixTypeElement::elem(1, 2, 1);
        assert_eq!(d1.multiply(&x, &y), MatrixTypeElement::elem(4, 2, 1));

        let d0 = m0();
        let x = MatrixTypeElement::elem(1, 1, 3);
        let y = MatrixTypeElement::elem(1, 1, 1);
        assert_eq!(d0.multiply(&x, &y), MatrixTypeElement::Theta);

        assert_eq!(
            d0.multiply(&MatrixTypeElement::Theta, &y),
            MatrixTypeElement::Theta
        );
    }

    #[test]
    fn multiply_is_associative() {
        for data in [m0(), m1()] {
            let mut elements = vec![MatrixTypeElement::Theta];
            for exp in 1..=3 {
                for a in 1..=3 {
                    for b in 1..=3 {
                        elements.push(MatrixTypeElement::elem(exp, a, b));
                    }
                }
            }
            for x in &elements {
                for y in &elements {
                    let xy = data.multiply(x, y);
                    for z in &elements {
                        let lhs = data.multiply(&xy, z);
                        let rhs = data.multiply(x, &data.multiply(y, z));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn evaluate_golden() {
        let lam = rat(5);
        let p1 = m1().evaluate(&lam).unwrap();
        let expected = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(1), rat(1)],
            vec![rat(1), rat(1), rat(5)],
            vec![rat(1), rat(5), rat(5)],
        ]);
        assert_eq!(p1, expected);

        let p0 = m0().evaluate(&lam).unwrap();
        let expected = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(5)],
            vec![rat(0), rat(5), rat(5)],
        ]);
        assert_eq!(p0, expected);

        assert_eq!(m1().evaluate(&rat(0)), Err(MatrixRepError::ZeroLambda));
    }

    #[test]
    fn rank_of_evaluations() {
        assert_eq!(m1().evaluate(&rat(1)).unwrap().rank(), 1);
        assert_eq!(m0().evaluate(&rat(-1)).unwrap().rank(), 2);
        for lam in [rat(2), rat(-2), ratio(1, 3), rat(5)] {
            assert_eq!(m1().evaluate(&lam).unwrap().rank(), 3);
            assert_eq!(m0().evaluate(&lam).unwrap().rank(), 3);
        }
    }

    #[test]
    fn representation_dimensions() {
        let one = Representation::build(&m1(), &rat(1)).unwrap();
        assert_eq!(one.dim(), 1);
        for a in 1..=3 {
            for b in 1..=3 {
                let img = one.image(&MatrixTypeElement::elem(2, a, b));
                assert_eq!(img.rows(), 1);
            }
        }

        let two = Representation::build(&m0(), &rat(-1)).unwrap();
        assert_eq!(two.dim(), 2);

        let three = Representation::build(&m1(), &rat(2)).unwrap();
        assert_eq!(three.dim(), 3);
        // The generator image is lambda times a rank-1 idempotent, so its
        // only nonzero eigenvalue is lambda.
        let g = three.image(&MatrixTypeElement::elem(1, 1, 1));
        assert_eq!(g.rank(), 1);
        assert_eq!(g.trace(), rat(2));
        assert_eq!(g.mul(&g), g.scale(&rat(2)));
    }

    #[test]
    fn homomorphism_checks() {
        for (data, lams) in [
            (m0(), vec![rat(-1), rat(2), ratio(1, 3), rat(7)]),
            (m1(), vec![rat(1), rat(2), rat(7), ratio(1, 3)]),
        ] {
            for lam in lams {
                let rep = Representation::build(&data, &lam).unwrap();
                assert!(verify_homomorphism(&rep, &data, 4), "failed at lambda={lam}");
            }
        }
    }

    #[test]
    fn corrupted_sandwich_fails_verification() {
        let good = m1();
        let rep = Representation::build(&good, &rat(2)).unwrap();
        let mut rows = Vec::new();
        for b in 1..=3 {
            rows.push((1..=3).map(|a| good.entry(b, a)).collect::<Vec<_>>());
        }
        rows[2][1] = SandwichEntry::Power(2); // was t^1
        let corrupted = MatrixTypeData::new(
            good.row_labels().to_vec(),
            good.col_labels().to_vec(),
            rows,
            "t",
        )
        .unwrap();
        assert!(!verify_homomorphism(&rep, &corrupted, 3));
    }

    #[test]
    fn image_of_theta_is_zero() {
        let rep = Representation::build(&m0(), &rat(2)).unwrap();
        assert!(rep.image(&MatrixTypeElement::Theta).is_zero());
    }

    #[test]
    fn exponent_scaling_of_images() {
        // At a fixed lambda the image entries scale by lambda^(k-1) as the
        // exponent k grows, uniformly over the matrix.
        for lam in [rat(2), rat(3)] {
            let rep = Representation::build(&m1(), &lam).unwrap();
            for a in 1..=3 {
                for b in 1..=3 {
                    let base = rep.image(&MatrixTypeElement::elem(1, a, b));
                    for k in 2..=4u32 {
                        let img = rep.image(&MatrixTypeElement::elem(k, a, b));
                        assert_eq!(img, base.scale(&rational_pow(&lam, (k - 1) as i64)));
                    }
                }
            }
        }
    }

    #[test]
    fn image_traces_match_sandwich_entries() {
        // trace(D A C) = trace(A C D) = trace(A P), so the trace of the
        // image of (s^k; a, b) must equal lambda^k * pbar(b, a) regardless
        // of the factorization. This pins the construction to the direct
        // multiply-by-the-sandwich form.
        for (data, lam) in [(m0(), rat(2)), (m0(), rat(-1)), (m1(), rat(2)), (m1(), rat(1))] {
            let rep = Representation::build(&data, &lam).unwrap();
            let pbar = data.evaluate(&lam).unwrap();
            for k in 1..=3u32 {
                for a in 1..=3 {
                    for b in 1..=3 {
                        let img = rep.image(&MatrixTypeElement::elem(k, a, b));
                        let expected =
                            rational_pow(&lam, k as i64) * pbar.get(b - 1, a - 1);
                        assert_eq!(img.trace(), expected, "lambda={lam} k={k} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn images_span_full_matrix_space() {
        // Exponent <= 2 images span all of r x r, matching irreducibility.
        for (data, lam, r) in [(m1(), rat(2), 3usize), (m0(), rat(-1), 2)] {
            let rep = Representation::build(&data, &lam).unwrap();
            let mut flat = Vec::new();
            for exp in 1..=2 {
                for a in 1..=data.size() {
                    for b in 1..=data.size() {
                        let img = rep.image(&MatrixTypeElement::elem(exp, a, b));
                        let mut row: Vec<Rational> = Vec::with_capacity(r * r);
                        for i in 0..r {
                            for j in 0..r {
                                row.push(img.get(i, j).clone());
                            }
                        }
                        flat.push(row);
                    }
                }
            }
            let span = RationalMatrix::from_rows(flat);
            assert_eq!(span.rank(), r * r);
        }
    }

    #[test]
    fn extension_agrees_and_multiplies() {
        for (data, lam) in [
            (m1(), rat(2)),
            (m1(), rat(1)),
            (m0(), rat(-1)),
            (m0(), ratio(1, 3)),
        ] {
            let rep = Representation::build(&data, &lam).unwrap();
            let ext = ExtendedRep::new(rep.clone(), &data).unwrap();
            let e = ext.idempotent();
            assert_eq!(e.mul(e), *e);
            assert_eq!(e.rank(), 1);
            // Agreement with the unextended representation on p >= 1.
            for p in 1..=3i64 {
                for a in 1..=data.size() {
                    for b in 1..=data.size() {
                        assert_eq!(
                            ext.image_at(p, a, b),
                            rep.image(&MatrixTypeElement::elem(p as u32, a, b))
                        );
                    }
                }
            }
            // Multiplicativity over the closure with negative exponents.
            for p in -3..=3i64 {
                for q in -3..=3i64 {
                    for a in 1..=data.size() {
                        for b in 1..=data.size() {
                            for a2 in 1..=data.size() {
                                for b2 in 1..=data.size() {
                                    let lhs = ext.image_at(p, a, b).mul(&ext.image_at(q, a2, b2));
                                    let rhs = match data.entry(b, a2) {
                                        SandwichEntry::Theta => ext.zero_image(),
                                        SandwichEntry::Power(n) => {
                                            ext.image_at(p + q + n as i64, a, b2)
                                        }
                                    };
                                    assert_eq!(lhs, rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extension_rejects_broken_factorization() {
        // A hand-built "representation" whose generator image squares to
        // something other than lambda times itself.
        let c = RationalMatrix::from_rows(vec![vec![rat(2)], vec![rat(0)], vec![rat(0)]]);
        let d = RationalMatrix::from_rows(vec![vec![rat(1), rat(0), rat(0)]]);
        let fake = Representation::from_parts(rat(2), c, d);
        let err = ExtendedRep::new(fake, &m1()).unwrap_err();
        assert_eq!(err, MatrixRepError::NotScaledIdempotent);
    }

    #[test]
    fn binomial_sizes() {
        assert_eq!(MatrixTypeData::expected_size(3, 0), 3);
        assert_eq!(MatrixTypeData::expected_size(3, 1), 3);
        assert_eq!(MatrixTypeData::expected_size(4, 1), 6);
        assert_eq!(MatrixTypeData::expected_size(5, 2), 10);
    }
}
