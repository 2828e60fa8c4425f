use std::fmt::{self, Write};

use num_traits::{One, Signed};

use super::{Node, SmoothExpr};
use crate::rational::ComplexRational;

// Binding strength of the printed form; children weaker than the slot they
// sit in get parenthesised.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const POWER: u8 = 3;
const ATOM: u8 = 4;

fn const_prec(c: &ComplexRational) -> u8 {
    if c.is_real() {
        if c.re.is_negative() {
            SUM
        } else if c.re.is_integer() {
            ATOM
        } else {
            PRODUCT
        }
    } else if c.re.is_zero_value() {
        if c.im.is_negative() {
            SUM
        } else if c.im.is_one() {
            ATOM
        } else {
            PRODUCT
        }
    } else {
        ATOM
    }
}

trait ZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl ZeroValue for crate::rational::Rational {
    fn is_zero_value(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl SmoothExpr {
    fn leading_negative(&self) -> bool {
        match self.node() {
            Node::Const(c) => const_prec(c) == SUM,
            Node::Product(fs) => fs[0].as_const().is_some_and(|c| const_prec(c) == SUM),
            _ => false,
        }
    }

    fn prec(&self) -> u8 {
        match self.node() {
            Node::Const(c) => const_prec(c),
            Node::Var | Node::Exp(_) | Node::Sin(_) | Node::Cos(_) => ATOM,
            Node::Sum(_) => SUM,
            Node::Product(_) if self.leading_negative() => SUM,
            Node::Product(_) | Node::Quotient(..) => PRODUCT,
            Node::Power(..) => POWER,
        }
    }

    fn write_text(&self, out: &mut String, min_prec: u8) {
        if self.prec() < min_prec {
            out.push('(');
            self.write_text(out, SUM);
            out.push(')');
            return;
        }
        match self.node() {
            Node::Const(c) => {
                let _ = write!(out, "{c}");
            }
            Node::Var => out.push('x'),
            Node::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i == 0 {
                        t.write_text(out, SUM);
                    } else if t.leading_negative() {
                        out.push_str(" - ");
                        (-t).write_text(out, PRODUCT);
                    } else {
                        out.push_str(" + ");
                        t.write_text(out, PRODUCT);
                    }
                }
            }
            Node::Product(fs) => {
                let mut rest: &[SmoothExpr] = fs;
                let mut first_prec = PRODUCT;
                if let Some(c) = fs[0].as_const() {
                    if (-c).is_one() {
                        out.push('-');
                        rest = &fs[1..];
                    } else if const_prec(c) == SUM {
                        let _ = write!(out, "-{}*", -c);
                        rest = &fs[1..];
                        first_prec = POWER;
                    }
                }
                for (i, f) in rest.iter().enumerate() {
                    if i > 0 {
                        out.push('*');
                    }
                    f.write_text(out, if i == 0 { first_prec } else { POWER });
                }
            }
            Node::Quotient(n, d) => {
                n.write_text(out, PRODUCT);
                out.push('/');
                d.write_text(out, POWER);
            }
            Node::Power(b, n) => {
                b.write_text(out, ATOM);
                let _ = write!(out, "^{n}");
            }
            Node::Exp(a) | Node::Sin(a) | Node::Cos(a) => {
                let name = match self.node() {
                    Node::Exp(_) => "exp",
                    Node::Sin(_) => "sin",
                    _ => "cos",
                };
                out.push_str(name);
                out.push('(');
                a.write_text(out, SUM);
                out.push(')');
            }
        }
    }

    /// Text form suitable as one factor of a product.
    pub(crate) fn to_text_factor(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s, PRODUCT);
        s
    }

    pub(crate) fn to_latex_factor(&self) -> String {
        let mut s = String::new();
        self.write_latex(&mut s, PRODUCT);
        s
    }

    /// LaTeX rendering.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.write_latex(&mut s, SUM);
        s
    }

    fn write_latex(&self, out: &mut String, min_prec: u8) {
        if self.prec() < min_prec {
            out.push_str("\\left(");
            self.write_latex(out, SUM);
            out.push_str("\\right)");
            return;
        }
        match self.node() {
            Node::Const(c) => out.push_str(&latex_const(c)),
            Node::Var => out.push('x'),
            Node::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i == 0 {
                        t.write_latex(out, SUM);
                    } else if t.leading_negative() {
                        out.push_str(" - ");
                        (-t).write_latex(out, PRODUCT);
                    } else {
                        out.push_str(" + ");
                        t.write_latex(out, PRODUCT);
                    }
                }
            }
            Node::Product(fs) => {
                let mut rest: &[SmoothExpr] = fs;
                if let Some(c) = fs[0].as_const() {
                    if (-c).is_one() {
                        out.push('-');
                        rest = &fs[1..];
                    }
                }
                for (i, f) in rest.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" \\cdot ");
                    }
                    f.write_latex(out, if i == 0 { PRODUCT } else { POWER });
                }
            }
            Node::Quotient(n, d) => {
                let _ = write!(out, "\\frac{{{}}}{{{}}}", n.to_latex(), d.to_latex());
            }
            Node::Power(b, n) => {
                b.write_latex(out, ATOM);
                let _ = write!(out, "^{{{n}}}");
            }
            Node::Exp(a) => {
                let _ = write!(out, "e^{{{}}}", a.to_latex());
            }
            Node::Sin(a) => {
                let _ = write!(out, "\\sin\\left({}\\right)", a.to_latex());
            }
            Node::Cos(a) => {
                let _ = write!(out, "\\cos\\left({}\\right)", a.to_latex());
            }
        }
    }
}

pub(crate) fn latex_rational(r: &crate::rational::Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub(crate) fn latex_const(c: &ComplexRational) -> String {
    let im = |r: &crate::rational::Rational| {
        if r.is_one() {
            "i".to_string()
        } else if (-r).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", latex_rational(r))
        }
    };
    match (c.re.is_zero_value(), c.im.is_zero_value()) {
        (_, true) => latex_rational(&c.re),
        (true, false) => im(&c.im),
        (false, false) => {
            let sign = if c.im.is_negative() { "-" } else { "+" };
            format!("\\left({}{}{}\\right)", latex_rational(&c.re), sign, im(&c.im.abs()))
        }
    }
}

/// Text form in the expression grammar; parses back to an equal expression.
impl fmt::Display for SmoothExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_text(&mut s, SUM);
        f.write_str(&s)
    }
}
