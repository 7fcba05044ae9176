//! Presentation matrices of the switch module of a diagram.

use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::switch::Switch;

use super::gauss::{GaussCode, Sign};

/// A square relation matrix `M` with `Mx = 0`, columns indexed by generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentationMatrix<R> {
    pub matrix: Matrix<R>,
    pub labels: Vec<String>,
}

impl<R: Ring> PresentationMatrix<R> {
    pub fn new(matrix: Matrix<R>) -> Self {
        let labels = (1..=matrix.cols()).map(|i| format!("x{i}")).collect();
        Self { matrix, labels }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Two relations per crossing, in order of first appearance. With `u` the
/// under pass and `o` the over pass, a positive crossing reads
/// `A·x_in(u) + B·x_in(o) = x_out(o)` and `C·x_in(u) + D·x_in(o) = x_out(u)`;
/// a negative crossing exchanges incoming and outgoing arcs.
pub fn build_presentation<R: Ring>(code: &GaussCode, s: &Switch<R>) -> PresentationMatrix<R> {
    let arcs = code.semi_arcs();
    let n = arcs.count;
    let mut m: Matrix<R> = Matrix::zeros(n, n);
    for (k, x) in code.crossings().iter().enumerate() {
        let (u_src, o_src, u_dst, o_dst) = match x.sign {
            Sign::Positive => (
                arcs.incoming(x.under),
                arcs.incoming(x.over),
                arcs.outgoing(x.under),
                arcs.outgoing(x.over),
            ),
            Sign::Negative => (
                arcs.outgoing(x.under),
                arcs.outgoing(x.over),
                arcs.incoming(x.under),
                arcs.incoming(x.over),
            ),
        };
        for (row, (p, q, dst)) in [(2 * k, (&s.a, &s.b, o_dst)), (2 * k + 1, (&s.c, &s.d, u_dst))] {
            m[(row, u_src)] = m[(row, u_src)].clone() + p.clone();
            m[(row, o_src)] = m[(row, o_src)].clone() + q.clone();
            m[(row, dst)] = m[(row, dst)].clone() - R::one();
        }
    }
    PresentationMatrix::new(m)
}
