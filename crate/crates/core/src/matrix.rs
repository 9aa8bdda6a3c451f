//! Dense nonnegative matrices, their sign patterns, and diagonal exponents.
//!
//! Everything here is small and dense. Matrices are stored row-major and are
//! immutable once constructed; every transformation returns a new value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `n x n` matrix with nonnegative, finite entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct NonnegMatrix {
    n: usize,
    entries: Vec<f64>,
}

/// JSON mirror of the text format: `{"n": 2, "entries": [[1, 0], [1, 1]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<f64>>,
}

impl TryFrom<MatrixJson> for NonnegMatrix {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        if json.entries.len() != json.n {
            return Err(Error::DimensionMismatch {
                expected: json.n,
                found: json.entries.len(),
            });
        }
        NonnegMatrix::from_rows(&json.entries)
    }
}

impl From<NonnegMatrix> for MatrixJson {
    fn from(m: NonnegMatrix) -> Self {
        MatrixJson {
            n: m.n,
            entries: m.rows().map(<[f64]>::to_vec).collect(),
        }
    }
}

impl NonnegMatrix {
    /// Builds a matrix from row-major entries, rejecting negative or
    /// non-finite values.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        for (k, &v) in entries.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: k / n,
                    col: k % n,
                });
            }
            if v < 0.0 {
                return Err(Error::NegativeEntry {
                    row: k / n,
                    col: k % n,
                    value: v,
                });
            }
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// Unit-valued realization of a sign pattern.
    pub fn from_pattern(pattern: &SignPattern) -> Self {
        let entries = pattern
            .mask
            .iter()
            .map(|&b| if b { 1.0 } else { 0.0 })
            .collect();
        Self {
            n: pattern.n,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Strict sign pattern: a cell is set iff its entry is `> 0`.
    pub fn sign_pattern(&self) -> SignPattern {
        SignPattern {
            n: self.n,
            mask: self.entries.iter().map(|&v| v > 0.0).collect(),
        }
    }

    /// `e^D M`: row `i` multiplied by `exp(d[i])`.
    pub fn scale_exp(&self, d: &DiagonalParams) -> Result<Self> {
        self.check_len(d.len())?;
        let mut entries = self.entries.clone();
        for (i, row) in entries.chunks_mut(self.n).enumerate() {
            let s = d.values()[i].exp();
            row.iter_mut().for_each(|v| *v *= s);
        }
        Ok(Self { n: self.n, entries })
    }

    /// Multiplies every entry by `factor >= 0`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| v * factor).collect(),
        }
    }

    /// `M + c I`.
    pub fn add_diagonal(&self, c: f64) -> Self {
        let mut entries = self.entries.clone();
        for i in 0..self.n {
            entries[i * self.n + i] += c;
        }
        Self { n: self.n, entries }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { n, entries }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_len(other.n)?;
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// `M^m` by repeated squaring; `M^0 = I`.
    pub fn pow(&self, mut m: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.matmul(&base).expect("same dimension");
            }
            base = base.matmul(&base).expect("same dimension");
            m >>= 1;
        }
        acc
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.rows()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Principal submatrix on `indices` (in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                entries.push(self.get(i, j));
            }
        }
        Self { n: k, entries }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    /// Parses the plain-text format: first line `n`, then `n` lines of `n`
    /// whitespace-separated nonnegative numbers. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            });

        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "missing dimension line".into(),
        })?;
        let header_col = column_of(header, header.trim_start());
        let n: usize = header.trim().parse().map_err(|_| Error::Parse {
            line: header_line,
            column: header_col,
            message: format!(
                "expected a positive integer dimension, found {:?}",
                header.trim()
            ),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                column: header_col,
                message: "dimension must be at least 1".into(),
            });
        }

        let mut entries = Vec::with_capacity(n * n);
        let mut last_line = header_line;
        for row in 0..n {
            let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {n} rows, found {row}"),
            })?;
            last_line = line_no;
            let mut count = 0;
            for token in tokens(line) {
                let column = column_of(line, token);
                count += 1;
                if count > n {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: format!("row {} has more than {n} entries", row + 1),
                    });
                }
                let value: f64 = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    column,
                    message: format!("invalid number {token:?}"),
                })?;
                if !value.is_finite() {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: format!("non-finite number {token:?}"),
                    });
                }
                if value < 0.0 {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: format!("negative entry {token}"),
                    });
                }
                entries.push(value);
            }
            if count < n {
                return Err(Error::Parse {
                    line: line_no,
                    column: line.trim_end().len() + 1,
                    message: format!("row {} has {count} entries, expected {n}", row + 1),
                });
            }
        }
        if let Some((line_no, line)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                column: column_of(line, line.trim_start()),
                message: "unexpected trailing content".into(),
            });
        }
        Self::new(n, entries)
    }

    /// Parses either the text format or its JSON mirror, chosen by the first
    /// non-whitespace character.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })
        } else {
            Self::parse_text(text)
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NonnegMatrix {
    /// Writes the text format. `f64`'s `Display` is the shortest string that
    /// parses back to the same value, so the output round-trips exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for NonnegMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_any(s)
    }
}

fn tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split_whitespace()
}

/// 1-based byte column of `sub` within `line`; `sub` must be a subslice.
fn column_of(line: &str, sub: &str) -> usize {
    sub.as_ptr() as usize - line.as_ptr() as usize + 1
}

/// Boolean incidence structure of an `n x n` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    n: usize,
    mask: Vec<bool>,
}

impl SignPattern {
    pub fn new(n: usize, mask: Vec<bool>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if mask.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: mask.len(),
            });
        }
        Ok(Self { n, mask })
    }

    /// Builds a pattern from rows of 0/1 values (anything nonzero is set).
    ///
    /// Panics if the rows are not square; intended for literals.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n = rows.len();
        assert!(n > 0, "empty pattern");
        let mut mask = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), n, "pattern rows must be square");
            mask.extend(row.iter().map(|&v| v != 0));
        }
        Self { n, mask }
    }

    /// Pattern whose cell `(i, j)` is bit `i * n + j` of `bits`; used for
    /// exhaustive enumeration (`n <= 8`).
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n > 0 && n * n <= 64, "from_bits supports 1 <= n <= 8");
        let mask = (0..n * n).map(|k| bits >> k & 1 == 1).collect();
        Self { n, mask }
    }

    pub fn bits(&self) -> u64 {
        assert!(self.n * self.n <= 64);
        self.mask
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &b)| acc | (u64::from(b) << k))
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            mask: vec![false; n * n],
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            mask: vec![true; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut p = Self::zeros(n);
        for i in 0..n {
            p.mask[i * n + i] = true;
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.mask[i * self.n + j]
    }

    /// Returns a copy with cell `(i, j)` set to `value`.
    pub fn with(&self, i: usize, j: usize, value: bool) -> Self {
        let mut p = self.clone();
        p.mask[i * self.n + j] = value;
        p
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn nnz(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn is_full(&self) -> bool {
        self.mask.iter().all(|&b| b)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_line(&self) -> bool {
        let n = self.n;
        (0..n).any(|i| !(0..n).any(|j| self.get(i, j)))
            || (0..n).any(|j| !(0..n).any(|i| self.get(i, j)))
    }

    /// Nonzero columns of row `i`.
    pub fn row_support(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }

    /// Nonzero rows of column `j`.
    pub fn col_support(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.get(i, j))
    }

    /// All set cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / n, k % n))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut mask = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                mask[j * n + i] = self.mask[i * n + j];
            }
        }
        Self { n, mask }
    }

    /// Boolean product: `(i, j)` set iff some `k` has `self[i][k] && other[k][j]`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut mask = vec![false; n * n];
        for i in 0..n {
            for k in 0..n {
                if !self.get(i, k) {
                    continue;
                }
                for j in 0..n {
                    mask[i * n + j] |= other.get(k, j);
                }
            }
        }
        Ok(Self { n, mask })
    }

    /// Boolean power `P^m`, with `P^0 = I`.
    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..m {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    /// `PᵀP`: columns `j, k` linked iff they share a nonzero row.
    pub fn gram_columns(&self) -> Self {
        self.transpose().product(self).expect("same dimension")
    }

    /// `PPᵀ`: rows `i, k` linked iff they share a nonzero column.
    pub fn gram_rows(&self) -> Self {
        self.product(&self.transpose()).expect("same dimension")
    }

    pub fn to_rows(&self) -> Vec<String> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignPattern[{}]", self.to_rows().join("/"))
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Serialized as a list of `0`/`1` row strings, e.g. `["10", "11"]`.
impl Serialize for SignPattern {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = Vec::<String>::deserialize(deserializer)?;
        let n = rows.len();
        let mut mask = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(D::Error::custom("pattern rows must be square"));
            }
            for c in row.chars() {
                match c {
                    '0' => mask.push(false),
                    '1' => mask.push(true),
                    _ => return Err(D::Error::custom(format!("invalid pattern cell {c:?}"))),
                }
            }
        }
        SignPattern::new(n, mask).map_err(D::Error::custom)
    }
}

/// Free-function form of [`NonnegMatrix::sign_pattern`].
pub fn sign_pattern(m: &NonnegMatrix) -> SignPattern {
    m.sign_pattern()
}

/// Free-function form of [`NonnegMatrix::scale_exp`].
pub fn scale_exp(m: &NonnegMatrix, d: &DiagonalParams) -> Result<NonnegMatrix> {
    m.scale_exp(d)
}

/// Diagonal of a real diagonal matrix, used as an exponent: `e^D`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalParams {
    values: Vec<f64>,
}

impl DiagonalParams {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn zeros(n: usize) -> Self {
        Self::constant(n, 0.0)
    }

    pub fn constant(n: usize, c: f64) -> Self {
        Self { values: vec![c; n] }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// All values exactly equal, i.e. the diagonal matrix is `c I`.
    pub fn is_scalar(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// `max - min`; zero iff scalar.
    pub fn spread(&self) -> f64 {
        let max = self
            .values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let min = self.values.iter().copied().fold(f64::INFINITY, f64::min);
        if self.values.is_empty() {
            0.0
        } else {
            max - min
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn shifted(&self, c: f64) -> Self {
        Self {
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

impl FromStr for DiagonalParams {
    type Err = Error;

    /// Comma-separated values, e.g. `0,0.5,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let token = part.trim();
            let v: f64 = token.parse().map_err(|_| Error::Parse {
                line: 1,
                column: offset + 1,
                message: format!("invalid diagonal value {token:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: 1,
                    column: offset + 1,
                    message: format!("non-finite diagonal value {token:?}"),
                });
            }
            values.push(v);
            offset += part.len() + 1;
        }
        Ok(Self { values })
    }
}

/// Elementwise `(1 - t) C + t D` for `t` in `[0, 1]`.
pub fn convex_combination(
    c: &DiagonalParams,
    d: &DiagonalParams,
    t: f64,
) -> Result<DiagonalParams> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            range: "[0, 1]",
        });
    }
    c.zip_with(d, |a, b| (1.0 - t) * a + t * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_pattern_is_strict() {
        let m = NonnegMatrix::from_rows(&[[1.0, 0.0], [1.0, 1.0]]).unwrap();
        assert_eq!(m.sign_pattern(), SignPattern::from_rows(&[[1, 0], [1, 1]]));
        let z = NonnegMatrix::new(3, vec![0.0; 9]).unwrap();
        assert!(z.sign_pattern().is_zero());
        let tiny = NonnegMatrix::from_rows(&[[1e-300]]).unwrap();
        assert!(tiny.sign_pattern().get(0, 0));
    }

    #[test]
    fn rejects_negative_and_nonfinite() {
        assert!(matches!(
            NonnegMatrix::from_rows(&[[1.0, -0.5], [0.0, 1.0]]),
            Err(Error::NegativeEntry { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            NonnegMatrix::from_rows(&[[f64::NAN]]),
            Err(Error::NonFiniteEntry { .. })
        ));
        assert_eq!(NonnegMatrix::new(0, vec![]), Err(Error::EmptyMatrix));
    }

    #[test]
    fn scale_exp_rows() {
        let m = NonnegMatrix::from_rows(&[[1.0, 2.0], [3.0, 0.0]]).unwrap();
        assert_eq!(m.scale_exp(&DiagonalParams::zeros(2)).unwrap(), m);
        let s = m.scale_exp(&DiagonalParams::new(vec![1.0, 0.0])).unwrap();
        assert_eq!(s.row(0), &[1f64.exp(), 2.0 * 1f64.exp()]);
        assert_eq!(s.row(1), &[3.0, 0.0]);
        assert!(matches!(
            m.scale_exp(&DiagonalParams::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn convex_combination_endpoints_and_midpoint() {
        let c = DiagonalParams::zeros(4);
        let d = DiagonalParams::new(vec![1.0, 5.0, 2.0, 6.0]);
        assert_eq!(convex_combination(&c, &d, 0.0).unwrap(), c);
        assert_eq!(convex_combination(&c, &d, 1.0).unwrap(), d);
        assert_eq!(
            convex_combination(&c, &d, 0.5).unwrap().values(),
            &[0.5, 2.5, 1.0, 3.0]
        );
        assert!(convex_combination(&c, &d, 1.5).is_err());
        assert!(convex_combination(&c, &d, -0.1).is_err());
    }

    #[test]
    fn scalar_detection() {
        assert!(DiagonalParams::constant(3, 2.5).is_scalar());
        assert!(!DiagonalParams::new(vec![1.0, 5.0, 2.0, 6.0]).is_scalar());
        assert_eq!(DiagonalParams::new(vec![1.0, 5.0, 2.0]).spread(), 4.0);
    }

    #[test]
    fn boolean_products() {
        let remark = SignPattern::from_rows(&[[1, 0], [1, 1]]);
        assert!(remark.gram_columns().is_full());
        assert!(remark.gram_rows().is_full());
        let cycle = SignPattern::from_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(cycle.gram_columns(), SignPattern::identity(3));
        assert_eq!(cycle.pow(3), SignPattern::identity(3));
        assert!(SignPattern::zeros(2)
            .product(&SignPattern::zeros(3))
            .is_err());
    }

    #[test]
    fn bits_round_trip() {
        let p = SignPattern::from_rows(&[[0, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert_eq!(SignPattern::from_bits(3, p.bits()), p);
    }

    #[test]
    fn text_format_round_trip() {
        let m = NonnegMatrix::from_rows(&[[0.0, 1.0], [0.5, 1e-7]]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "2\n0 1\n0.5 0.0000001\n");
        assert_eq!(NonnegMatrix::parse_text(&text).unwrap(), m);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"n":2,"entries":[[0.0,1.0],[0.5,1e-7]]}"#);
        assert_eq!(NonnegMatrix::parse_any(&json).unwrap(), m);
    }

    #[test]
    fn text_parse_errors_carry_position() {
        let err = NonnegMatrix::parse_text("2\n1 0\n1 -3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 3,
                message: "negative entry -3".into()
            }
        );
        let err = NonnegMatrix::parse_text("2\n1 x\n1 1\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                ..
            }
        ));
        let err = NonnegMatrix::parse_text("2\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = NonnegMatrix::parse_text("2\n1 0 0\n1 1\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                column: 5,
                ..
            }
        ));
        assert!(NonnegMatrix::parse_text("0\n").is_err());
        assert!(NonnegMatrix::parse_any(r#"{"n":2,"entries":[[1,0],[-1,1]]}"#).is_err());
    }

    #[test]
    fn diagonal_from_str() {
        let d: DiagonalParams = "0, 1.5,-2".parse().unwrap();
        assert_eq!(d.values(), &[0.0, 1.5, -2.0]);
        assert!("1,,2".parse::<DiagonalParams>().is_err());
    }

    #[test]
    fn pattern_json_is_row_strings() {
        let p = SignPattern::from_rows(&[[1, 0], [1, 1]]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["10","11"]"#);
        assert_eq!(serde_json::from_str::<SignPattern>(&json).unwrap(), p);
    }
}
