//! Carrier elements: scalars, tuples, matrices and polynomials over
//! neutrosophic numbers, with shape-aware addition and scalar action.
//!
//! Carriers may mix shapes (the structures under study frequently do);
//! addition across shapes is an error, never a silent coercion, so a
//! linear-algebra check on a mixed carrier fails with a shape witness.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{BaseRing, NeutroNumber};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Scalar(NeutroNumber),
    /// Row tuple, at least one entry.
    Tuple(Vec<NeutroNumber>),
    /// Row-major grid, rows * cols entries.
    Matrix {
        rows: usize,
        cols: usize,
        entries: Vec<NeutroNumber>,
    },
    /// Coefficients ascending by degree with no trailing zero;
    /// the zero polynomial has an empty coefficient list.
    Poly {
        ring: BaseRing,
        coeffs: Vec<NeutroNumber>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Scalar,
    Tuple(usize),
    Matrix(usize, usize),
    Poly,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Scalar => write!(f, "scalar"),
            Shape::Tuple(n) => write!(f, "tuple[{n}]"),
            Shape::Matrix(r, c) => write!(f, "matrix[{r}x{c}]"),
            Shape::Poly => write!(f, "poly"),
        }
    }
}

fn homogeneous_ring(entries: &[NeutroNumber]) -> Result<BaseRing> {
    let first = entries.first().ok_or(Error::EmptySet)?;
    for e in entries {
        if e.ring() != first.ring() {
            return Err(Error::RingMismatch(
                first.ring().to_string(),
                e.ring().to_string(),
            ));
        }
    }
    Ok(first.ring())
}

impl Element {
    pub fn scalar(n: NeutroNumber) -> Element {
        Element::Scalar(n)
    }

    pub fn tuple(entries: Vec<NeutroNumber>) -> Result<Element> {
        homogeneous_ring(&entries)?;
        Ok(Element::Tuple(entries))
    }

    pub fn matrix(rows: usize, cols: usize, entries: Vec<NeutroNumber>) -> Result<Element> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Internal(format!(
                "matrix wants {rows}x{cols} entries, got {}",
                entries.len()
            )));
        }
        homogeneous_ring(&entries)?;
        Ok(Element::Matrix { rows, cols, entries })
    }

    /// Builds a polynomial, trimming trailing zeros to canonical form.
    pub fn poly(ring: BaseRing, mut coeffs: Vec<NeutroNumber>) -> Result<Element> {
        if !coeffs.is_empty() {
            let r = homogeneous_ring(&coeffs)?;
            if r != ring {
                return Err(Error::RingMismatch(ring.to_string(), r.to_string()));
            }
        }
        while coeffs.last().is_some_and(NeutroNumber::is_zero) {
            coeffs.pop();
        }
        Ok(Element::Poly { ring, coeffs })
    }

    pub fn ring(&self) -> BaseRing {
        match self {
            Element::Scalar(n) => n.ring(),
            Element::Tuple(es) => es[0].ring(),
            Element::Matrix { entries, .. } => entries[0].ring(),
            Element::Poly { ring, .. } => *ring,
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            Element::Scalar(_) => Shape::Scalar,
            Element::Tuple(es) => Shape::Tuple(es.len()),
            Element::Matrix { rows, cols, .. } => Shape::Matrix(*rows, *cols),
            Element::Poly { .. } => Shape::Poly,
        }
    }

    pub fn entries(&self) -> &[NeutroNumber] {
        match self {
            Element::Scalar(n) => std::slice::from_ref(n),
            Element::Tuple(es) => es,
            Element::Matrix { entries, .. } => entries,
            Element::Poly { coeffs, .. } => coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(NeutroNumber::is_zero)
    }

    fn rebuild(&self, entries: Vec<NeutroNumber>) -> Element {
        match self {
            Element::Scalar(_) => Element::Scalar(entries[0]),
            Element::Tuple(_) => Element::Tuple(entries),
            Element::Matrix { rows, cols, .. } => Element::Matrix {
                rows: *rows,
                cols: *cols,
                entries,
            },
            Element::Poly { ring, .. } => {
                Element::poly(*ring, entries).expect("rebuilt from canonical entries")
            }
        }
    }
}

/// Entrywise sum of two same-shape elements (coefficientwise for
/// polynomials, then trimmed).
pub fn elem_add(x: &Element, y: &Element) -> Result<Element> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch(x.ring().to_string(), y.ring().to_string()));
    }
    if let (Element::Poly { ring, coeffs: a }, Element::Poly { coeffs: b, .. }) = (x, y) {
        let n = a.len().max(b.len());
        let zero = NeutroNumber::zero(*ring);
        let mut sum = Vec::with_capacity(n);
        for k in 0..n {
            let ak = a.get(k).unwrap_or(&zero);
            let bk = b.get(k).unwrap_or(&zero);
            sum.push(ak.add(bk)?);
        }
        return Element::poly(*ring, sum);
    }
    if x.shape() != y.shape() {
        return Err(Error::ShapeMismatch(
            x.shape().to_string(),
            y.shape().to_string(),
        ));
    }
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| a.add(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(x.rebuild(entries))
}

/// Every entry multiplied by the scalar through the I-idempotent product.
pub fn scalar_act(s: &NeutroNumber, x: &Element) -> Result<Element> {
    if s.ring() != x.ring() {
        return Err(Error::RingMismatch(s.ring().to_string(), x.ring().to_string()));
    }
    let entries = x
        .entries()
        .iter()
        .map(|e| s.mul(e))
        .collect::<Result<Vec<_>>>()?;
    if let Element::Poly { ring, .. } = x {
        return Element::poly(*ring, entries);
    }
    Ok(x.rebuild(entries))
}

/// The zero of the same shape (the zero polynomial for `Poly`).
pub fn zero_like(x: &Element) -> Element {
    match x {
        Element::Poly { ring, .. } => Element::Poly {
            ring: *ring,
            coeffs: Vec::new(),
        },
        other => {
            let zero = NeutroNumber::zero(other.ring());
            other.rebuild(vec![zero; other.entries().len()])
        }
    }
}

pub fn elem_neg(x: &Element) -> Element {
    let entries: Vec<_> = x.entries().iter().map(NeutroNumber::neg).collect();
    match x {
        Element::Poly { ring, .. } => {
            Element::poly(*ring, entries).expect("negation preserves canonical form")
        }
        other => other.rebuild(entries),
    }
}

/// Highest index with a nonzero coefficient; `None` for the zero polynomial.
pub fn degree(p: &Element) -> Result<Option<usize>> {
    match p {
        Element::Poly { coeffs, .. } => Ok(coeffs.len().checked_sub(1)),
        other => Err(Error::NotAPolynomial(other.to_string())),
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(n) => write!(f, "{n}"),
            Element::Tuple(es) => {
                write!(f, "(")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            Element::Matrix { rows, cols, entries } => {
                write!(f, "[")?;
                for r in 0..*rows {
                    if r > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "[")?;
                    for c in 0..*cols {
                        if c > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{}", entries[r * cols + c])?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
            Element::Poly { coeffs, .. } => {
                write!(f, "poly(")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}
