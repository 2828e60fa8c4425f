use super::{Node, SmoothExpr};
use crate::rational::ComplexRational;

impl SmoothExpr {
    /// Exact symbolic derivative with respect to `x`. Total over the node set.
    pub fn diff(&self) -> SmoothExpr {
        match self.node() {
            Node::Const(_) => SmoothExpr::zero(),
            Node::Var => SmoothExpr::one(),
            Node::Sum(ts) => SmoothExpr::sum(ts.iter().map(SmoothExpr::diff)),
            Node::Product(fs) => SmoothExpr::sum((0..fs.len()).map(|i| {
                let d = fs[i].diff();
                if d.is_zero_const() {
                    return d;
                }
                SmoothExpr::product(
                    fs.iter()
                        .enumerate()
                        .map(|(j, f)| if i == j { d.clone() } else { f.clone() }),
                )
            })),
            Node::Power(b, n) => SmoothExpr::product([
                SmoothExpr::constant(ComplexRational::from_int(*n as i64)),
                b.pow(n - 1),
                b.diff(),
            ]),
            Node::Quotient(n, d) => {
                let top = &(&n.diff() * d) - &(n * &d.diff());
                SmoothExpr::quotient_unchecked(top, d.pow(2))
            }
            Node::Exp(a) => SmoothExpr::product([self.clone(), a.diff()]),
            Node::Sin(a) => SmoothExpr::product([a.cos(), a.diff()]),
            Node::Cos(a) => SmoothExpr::product([SmoothExpr::int(-1), a.sin(), a.diff()]),
        }
    }

    /// `k`-th derivative.
    pub fn diff_n(&self, k: u32) -> SmoothExpr {
        (0..k).fold(self.clone(), |e, _| e.diff())
    }
}
