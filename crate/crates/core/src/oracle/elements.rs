//! Closed-form element tables of the two trimer density matrices.
//!
//! Indices are 1-based as in the basis headers: |μ1z, μ2z, S2z⟩ for the
//! 12-dim matrix and |μ1z, S1z, S2z⟩ for the 18-dim one, m descending.
//! An element is
//!
//! ```text
//! scale · e^{pre·βJ1} / (den · Z) · Σ terms
//! ```
//!
//! where a field term is `hyp(arg·βh) e^{exp·βh} Σ c e^{−β(aJ + bJ1)}` and a
//! mixed term is `c e^{−β(ea J + eb J1)} e^{hexp βh} [cc cosh(β(ha J + hb J1)) + cs sinh(…)]`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

/// `(a, b)` in `e^{−β(aJ + bJ1)}`.
pub(crate) type Exp = (f64, f64);

const A: Exp = (1.0, -0.5);
const B: Exp = (1.0, 2.5);
const C: Exp = (-0.5, 1.0);
const D: Exp = (-2.0, 0.5);
const E: Exp = (1.0, -2.5);
const F: Exp = (-0.5, -1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Hyp {
    Cosh,
    Sinh,
    CoshSquared,
    SinhSquared,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Term {
    Field { hyp: Hyp, arg: f64, exp: f64, sum: &'static [(f64, Exp)] },
    Mixed { c: f64, ea: f64, eb: f64, hexp: f64, cc: f64, cs: f64, ha: f64, hb: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Element {
    pub row: usize,
    pub col: usize,
    pub scale: f64,
    pub den: f64,
    pub pre: f64,
    pub terms: &'static [Term],
}

/// `ρ[target] = factor · ρ[source]`, with the field reversed when flagged.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Relation {
    pub target: (usize, usize),
    pub source: (usize, usize),
    pub factor: f64,
    pub reverse_field: bool,
}

const fn ch(arg: f64, exp: f64, sum: &'static [(f64, Exp)]) -> Term {
    Term::Field { hyp: Hyp::Cosh, arg, exp, sum }
}
const fn sh(arg: f64, exp: f64, sum: &'static [(f64, Exp)]) -> Term {
    Term::Field { hyp: Hyp::Sinh, arg, exp, sum }
}
const fn ch2(sum: &'static [(f64, Exp)]) -> Term {
    Term::Field { hyp: Hyp::CoshSquared, arg: 0.5, exp: 0.0, sum }
}
const fn sh2(sum: &'static [(f64, Exp)]) -> Term {
    Term::Field { hyp: Hyp::SinhSquared, arg: 0.5, exp: 0.0, sum }
}
#[allow(clippy::too_many_arguments)]
const fn x(c: f64, ea: f64, eb: f64, hexp: f64, cc: f64, cs: f64, ha: f64, hb: f64) -> Term {
    Term::Mixed { c, ea, eb, hexp, cc, cs, ha, hb }
}

impl Element {
    pub(crate) fn eval(&self, j: f64, j1: f64, h: f64, beta: f64, z: f64) -> f64 {
        let bh = beta * h;
        let boltz = |(a, b): Exp| (-beta * (a * j + b * j1)).exp();
        let sum: f64 = self
            .terms
            .iter()
            .map(|t| match *t {
                Term::Field { hyp, arg, exp, sum } => {
                    let y = arg * bh;
                    let f = match hyp {
                        Hyp::Cosh => y.cosh(),
                        Hyp::Sinh => y.sinh(),
                        Hyp::CoshSquared => y.cosh().powi(2),
                        Hyp::SinhSquared => y.sinh().powi(2),
                    };
                    f * (exp * bh).exp() * sum.iter().map(|&(c, e)| c * boltz(e)).sum::<f64>()
                }
                Term::Mixed { c, ea, eb, hexp, cc, cs, ha, hb } => {
                    let y = beta * (ha * j + hb * j1);
                    c * boltz((ea, eb)) * (hexp * bh).exp() * (cc * y.cosh() + cs * y.sinh())
                }
            })
            .sum();
        self.scale * (self.pre * beta * j1).exp() / (self.den * z) * sum
    }
}

pub(crate) const RDM12: &[Element] = &[
    Element {
        row: 1,
        col: 1,
        scale: 1.0,
        den: 30.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 2.5, &[(60.0, B)]),
            ch(0.5, 1.5, &[(15.0, A), (-18.0, B), (15.0, C)]),
            sh(0.5, 1.5, &[(5.0, A), (-22.0, B), (5.0, C)]),
            x(6.0, 0.25, -1.75, 1.0, 3.0, 2.0, 0.75, -0.75),
        ],
    },
    Element {
        row: 2,
        col: 2,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(25.0, A), (45.0, B), (45.0, C)]),
            ch(0.5, 0.5, &[(20.0, D), (10.0, A), (18.0, B), (17.0, E), (40.0, C), (35.0, F)]),
            sh(0.5, 1.5, &[(35.0, A), (15.0, B), (15.0, C)]),
            sh(0.5, 0.5, &[(15.0, E), (-10.0, C), (-15.0, F)]),
            x(5.0, -0.5, -2.0, 0.0, 3.0, 1.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 3,
        col: 3,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(20.0, A), (9.0, B), (6.0, E), (30.0, C), (80.0, F)]),
            ch(0.5, -0.5, &[(50.0, D), (12.0, B), (8.0, E), (40.0, C)]),
            sh(0.5, 0.5, &[(10.0, A), (3.0, B), (12.0, E), (10.0, F)]),
            sh(0.5, -0.5, &[(-30.0, D), (-20.0, C), (-20.0, F)]),
            x(5.0, -0.5, -2.0, 0.0, 3.0, 1.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 4,
        col: 4,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(25.0, A), (45.0, B), (180.0, C)]),
            ch(0.5, 0.5, &[(10.0, A), (80.0, D), (18.0, B), (17.0, E), (55.0, C), (65.0, F)]),
            sh(0.5, 1.5, &[(35.0, A), (15.0, B), (60.0, C)]),
            sh(0.5, 0.5, &[(15.0, E), (-25.0, C), (-15.0, F)]),
            x(5.0, -0.5, -2.0, 0.0, 9.0, 7.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 5,
        col: 5,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(80.0, A), (36.0, B), (24.0, E), (30.0, C), (110.0, F)]),
            ch(0.5, -0.5, &[(50.0, D), (48.0, B), (32.0, E), (100.0, C)]),
            sh(0.5, 0.5, &[(40.0, A), (12.0, B), (48.0, E), (-20.0, F)]),
            sh(0.5, -0.5, &[(-30.0, D), (-50.0, C), (-50.0, F)]),
            x(10.0, -0.5, -2.0, 0.0, 3.0, -1.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 6,
        col: 6,
        scale: 1.0,
        den: 60.0,
        pre: 0.25,
        terms: &[
            ch(0.5, -1.5, &[(20.0, A), (15.0, B), (45.0, C)]),
            ch(0.5, -0.5, &[(25.0, A), (6.0, B), (39.0, E), (30.0, F)]),
            sh(0.5, -1.5, &[(-5.0, B), (-35.0, C)]),
            sh(0.5, -0.5, &[(5.0, A), (15.0, E)]),
            x(-30.0, 0.25, -2.25, 0.0, 0.0, 1.0, 0.75, -1.25),
        ],
    },
    Element {
        row: 2,
        col: 4,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(25.0, A), (45.0, B), (-90.0, C)]),
            ch(0.5, 0.5, &[(10.0, A), (-40.0, D), (18.0, B), (17.0, E), (25.0, C), (5.0, F)]),
            sh(0.5, 1.5, &[(35.0, A), (15.0, B), (-30.0, C)]),
            sh(0.5, 0.5, &[(15.0, E), (5.0, C), (-15.0, F)]),
            x(-5.0, -0.5, -2.0, 0.0, 3.0, 5.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 2,
        col: 7,
        scale: -SQRT_2,
        den: 60.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(15.0, A), (-15.0, B)]),
            ch(0.5, 0.5, &[(-10.0, A), (-6.0, B), (11.0, E), (10.0, C), (-10.0, F)]),
            sh(0.5, 1.5, &[(5.0, A), (-5.0, B)]),
            sh(0.5, 0.5, &[(5.0, E)]),
            x(-10.0, 0.25, -1.25, 0.0, 1.0, 0.0, 0.75, -2.25),
            x(5.0, 0.25, -2.25, 0.0, 3.0, -1.0, 0.75, -1.25),
        ],
    },
    Element {
        row: 3,
        col: 5,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(40.0, A), (18.0, B), (12.0, E), (-30.0, C), (-50.0, F)]),
            ch(0.5, -0.5, &[(-50.0, D), (24.0, B), (16.0, E), (20.0, C)]),
            sh(0.5, 0.5, &[(20.0, A), (6.0, B), (24.0, E), (-40.0, F)]),
            sh(0.5, -0.5, &[(30.0, D), (-10.0, C), (-10.0, F)]),
            x(-20.0, -0.5, -2.0, 0.0, 0.0, 1.0, 1.5, -1.5),
        ],
    },
    Element {
        row: 3,
        col: 8,
        scale: SQRT_2,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch2(&[(21.0, B), (-11.0, E), (20.0, C), (-20.0, F)]),
            sh2(&[(3.0, B), (-13.0, E), (10.0, C), (-10.0, F)]),
            x(10.0, -0.5, -2.0, 0.0, 0.0, 1.0, 1.5, -1.5),
            x(-10.0, -0.5, 0.0, 0.0, 1.0, 0.0, 1.5, -0.5),
        ],
    },
    Element {
        row: 3,
        col: 10,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch2(&[(21.0, B), (-11.0, E), (-55.0, C), (55.0, F)]),
            sh2(&[(3.0, B), (-13.0, E), (-5.0, C), (5.0, F)]),
            x(-5.0, -0.5, -2.0, 0.0, 3.0, 1.0, 1.5, -1.5),
            x(5.0, -0.5, 0.0, 0.0, 1.0, 3.0, 1.5, -0.5),
        ],
    },
    Element {
        row: 5,
        col: 8,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch2(&[(42.0, B), (-22.0, E), (-35.0, C), (35.0, F)]),
            sh2(&[(6.0, B), (-26.0, E), (5.0, C), (-5.0, F)]),
            x(-5.0, -0.5, -2.0, 0.0, 3.0, -1.0, 1.5, -1.5),
            x(-5.0, -0.5, 0.0, 0.0, 1.0, -3.0, 1.5, -0.5),
        ],
    },
];

pub(crate) const RDM18: &[Element] = &[
    Element {
        row: 1,
        col: 1,
        scale: 1.0,
        den: 6.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 2.5, &[(7.0, B)]),
            sh(0.5, 2.5, &[(5.0, B)]),
            x(1.0, 0.25, 0.25, 2.0, 5.0, 3.0, 0.75, -0.75),
        ],
    },
    Element {
        row: 2,
        col: 2,
        scale: 1.0,
        den: 60.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(40.0, A), (28.0, B), (25.0, C)]),
            sh(0.5, 1.5, &[(12.0, B), (15.0, C)]),
            x(3.0, 0.25, -1.75, 1.0, 9.0, 1.0, 0.75, -0.75),
        ],
    },
    Element {
        row: 3,
        col: 3,
        scale: 1.0,
        den: 60.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(25.0, A), (7.0, B), (33.0, E), (20.0, C), (60.0, F)]),
            sh(0.5, 0.5, &[(-5.0, A), (1.0, B), (-21.0, E)]),
            x(-5.0, 0.25, -2.25, 0.0, 1.0, 11.0, 0.75, -1.25),
            x(-20.0, 0.25, -1.25, 0.0, 1.0, 0.0, 0.75, -2.25),
        ],
    },
    Element {
        row: 4,
        col: 4,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(120.0, A), (84.0, B), (135.0, C)]),
            sh(0.5, 1.5, &[(36.0, B), (-15.0, C)]),
            x(5.0, -1.25, -0.25, 1.0, 13.0, 3.0, 0.75, -0.75),
            x(-4.0, 1.0, -1.5, 1.0, 11.0, -19.0, 0.0, 1.0),
        ],
    },
    Element {
        row: 5,
        col: 5,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(15.0, D), (42.0, B), (18.0, E), (50.0, C), (30.0, F)]),
            sh(0.5, 0.5, &[(5.0, D), (6.0, B), (14.0, E), (10.0, C), (-10.0, F)]),
            x(10.0, -0.5, -2.0, 0.0, 1.0, 0.0, 1.5, -1.5),
            x(5.0, 1.0, -2.0, 0.0, 3.0, -1.0, 0.0, 1.5),
        ],
    },
    Element {
        row: 6,
        col: 6,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, -0.5, &[(70.0, A), (42.0, B), (38.0, E), (65.0, C), (95.0, F)]),
            sh(0.5, -0.5, &[(-50.0, A), (-6.0, B), (-34.0, E), (35.0, C), (5.0, F)]),
            x(20.0, -0.5, -1.5, 0.0, 1.0, 0.0, 1.5, -2.0),
            x(10.0, -2.0, 0.0, 0.0, 3.0, 1.0, 0.0, 0.5),
        ],
    },
    Element {
        row: 7,
        col: 7,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(35.0, A), (21.0, B), (19.0, E), (70.0, C), (130.0, F)]),
            sh(0.5, 0.5, &[(25.0, A), (3.0, B), (17.0, E), (-10.0, C), (50.0, F)]),
            x(5.0, -0.5, -1.5, 0.0, 5.0, 3.0, 1.5, -2.0),
            x(20.0, -2.0, 0.0, 0.0, 3.0, 1.0, 0.0, 0.5),
        ],
    },
    Element {
        row: 8,
        col: 8,
        scale: 1.0,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, -0.5, &[(60.0, D), (42.0, B), (18.0, E), (125.0, C), (75.0, F)]),
            sh(0.5, -0.5, &[(-20.0, D), (-6.0, B), (-14.0, E), (-25.0, C), (25.0, F)]),
            x(5.0, -0.5, -2.0, 0.0, 5.0, 3.0, 1.5, -1.5),
            x(5.0, 1.0, -2.0, 0.0, 3.0, -1.0, 0.0, 1.5),
        ],
    },
    Element {
        row: 9,
        col: 9,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch(0.5, -1.5, &[(30.0, A), (21.0, B), (90.0, C)]),
            sh(0.5, -1.5, &[(-9.0, B), (-30.0, C)]),
            x(10.0, -1.25, -0.25, -1.0, 5.0, 3.0, 0.75, -0.75),
            x(-1.0, 1.0, -1.5, -1.0, 11.0, -19.0, 0.0, 1.0),
        ],
    },
    Element {
        row: 2,
        col: 4,
        scale: -1.0,
        den: 30.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(20.0, A), (-14.0, B)]),
            sh(0.5, 1.5, &[(-6.0, B)]),
            x(10.0, -0.5, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0),
            x(-2.0, 1.0, -1.5, 1.0, 3.0, -7.0, 0.0, 1.0),
        ],
    },
    Element {
        row: 4,
        col: 10,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 1.5, &[(60.0, A), (42.0, B), (-45.0, C)]),
            sh(0.5, 1.5, &[(18.0, B), (-75.0, C)]),
            x(-5.0, -1.25, -0.25, 1.0, 7.0, 9.0, 0.75, -0.75),
            x(-2.0, 1.0, -1.5, 1.0, 11.0, -19.0, 0.0, 1.0),
        ],
    },
    Element {
        row: 3,
        col: 7,
        scale: -1.0,
        den: 60.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(15.0, A), (-8.0, B), (-3.0, E)]),
            sh(0.5, 0.5, &[(5.0, A), (-9.0, E)]),
            x(-1.0, 1.0, -0.5, 0.0, 4.0, 6.0, 0.0, 3.0),
        ],
    },
    Element {
        row: 7,
        col: 13,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(35.0, A), (21.0, B), (19.0, E), (-5.0, C), (-35.0, F)]),
            sh(0.5, 0.5, &[(25.0, A), (3.0, B), (17.0, E), (-25.0, C), (-55.0, F)]),
            x(-10.0, -0.5, -1.5, 0.0, 0.0, 1.0, 1.5, -2.0),
            x(-5.0, -2.0, 0.0, 0.0, 7.0, 1.0, 0.0, 0.5),
        ],
    },
    Element {
        row: 3,
        col: 5,
        scale: 1.0,
        den: 30.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(7.0, B), (-7.0, E)]),
            sh(0.5, 0.5, &[(1.0, B), (-1.0, E)]),
            x(-10.0, 1.0, -2.0, 0.0, 0.0, 1.0, 0.0, 1.5),
            x(-10.0, -0.5, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0),
        ],
    },
    Element {
        row: 5,
        col: 11,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(-30.0, D), (42.0, B), (18.0, E), (-25.0, C), (-15.0, F)]),
            sh(0.5, 0.5, &[(-10.0, D), (6.0, B), (14.0, E), (-5.0, C), (5.0, F)]),
            x(-5.0, -0.5, -2.0, 0.0, 1.0, 3.0, 1.5, -1.5),
            x(5.0, 1.0, -2.0, 0.0, 3.0, -1.0, 0.0, 1.5),
        ],
    },
    Element {
        row: 5,
        col: 7,
        scale: 1.0,
        den: 90.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(21.0, B), (-11.0, E), (35.0, C), (-35.0, F)]),
            sh(0.5, 0.5, &[(3.0, B), (-13.0, E), (-5.0, C), (5.0, F)]),
            x(-20.0, -2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5),
            x(-10.0, 1.0, -2.0, 0.0, 1.0, 0.0, 0.0, 1.5),
        ],
    },
    Element {
        row: 5,
        col: 13,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(42.0, B), (-22.0, E), (-5.0, C), (5.0, F)]),
            sh(0.5, 0.5, &[(6.0, B), (-26.0, E), (-25.0, C), (25.0, F)]),
            x(20.0, -2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5),
            x(-20.0, 1.0, -2.0, 0.0, 1.0, 0.0, 0.0, 1.5),
        ],
    },
    Element {
        row: 7,
        col: 11,
        scale: SQRT_2,
        den: 180.0,
        pre: 0.25,
        terms: &[
            ch(0.5, 0.5, &[(21.0, B), (-11.0, E), (-40.0, C), (40.0, F)]),
            sh(0.5, 0.5, &[(3.0, B), (-13.0, E), (-20.0, C), (20.0, F)]),
            x(40.0, -2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5),
            x(-10.0, 1.0, -2.0, 0.0, 1.0, 0.0, 0.0, 1.5),
        ],
    },
];

pub(crate) const RELATIONS12: &[Relation] = &[
    Relation { target: (12, 12), source: (1, 1), factor: 1.0, reverse_field: true },
    Relation { target: (11, 11), source: (2, 2), factor: 1.0, reverse_field: true },
    Relation { target: (10, 10), source: (3, 3), factor: 1.0, reverse_field: true },
    Relation { target: (9, 9), source: (4, 4), factor: 1.0, reverse_field: true },
    Relation { target: (8, 8), source: (5, 5), factor: 1.0, reverse_field: true },
    Relation { target: (7, 7), source: (6, 6), factor: 1.0, reverse_field: true },
    Relation { target: (9, 11), source: (2, 4), factor: 1.0, reverse_field: true },
    Relation { target: (6, 11), source: (2, 7), factor: 1.0, reverse_field: true },
    Relation { target: (4, 7), source: (2, 7), factor: FRAC_1_SQRT_2, reverse_field: false },
    Relation { target: (6, 9), source: (2, 7), factor: FRAC_1_SQRT_2, reverse_field: true },
    Relation { target: (8, 10), source: (3, 5), factor: 1.0, reverse_field: true },
    Relation { target: (5, 10), source: (3, 8), factor: 1.0, reverse_field: false },
];

pub(crate) const RELATIONS18: &[Relation] = &[
    Relation { target: (18, 18), source: (1, 1), factor: 1.0, reverse_field: true },
    Relation { target: (17, 17), source: (2, 2), factor: 1.0, reverse_field: true },
    Relation { target: (16, 16), source: (3, 3), factor: 1.0, reverse_field: true },
    Relation { target: (15, 15), source: (4, 4), factor: 1.0, reverse_field: true },
    Relation { target: (14, 14), source: (5, 5), factor: 1.0, reverse_field: true },
    Relation { target: (13, 13), source: (6, 6), factor: 1.0, reverse_field: true },
    Relation { target: (12, 12), source: (7, 7), factor: 1.0, reverse_field: true },
    Relation { target: (11, 11), source: (8, 8), factor: 1.0, reverse_field: true },
    Relation { target: (10, 10), source: (9, 9), factor: 1.0, reverse_field: true },
    Relation { target: (15, 17), source: (2, 4), factor: 1.0, reverse_field: true },
    Relation { target: (2, 10), source: (2, 4), factor: FRAC_1_SQRT_2, reverse_field: false },
    Relation { target: (9, 17), source: (2, 4), factor: FRAC_1_SQRT_2, reverse_field: true },
    Relation { target: (9, 15), source: (4, 10), factor: 1.0, reverse_field: true },
    Relation { target: (12, 16), source: (3, 7), factor: 1.0, reverse_field: true },
    Relation { target: (3, 13), source: (3, 7), factor: SQRT_2, reverse_field: false },
    Relation { target: (6, 16), source: (3, 7), factor: SQRT_2, reverse_field: true },
    Relation { target: (6, 12), source: (7, 13), factor: 1.0, reverse_field: true },
    Relation { target: (14, 16), source: (3, 5), factor: 1.0, reverse_field: true },
    Relation { target: (3, 11), source: (3, 5), factor: FRAC_1_SQRT_2, reverse_field: false },
    Relation { target: (8, 16), source: (3, 5), factor: FRAC_1_SQRT_2, reverse_field: true },
    Relation { target: (8, 14), source: (5, 11), factor: 1.0, reverse_field: true },
    Relation { target: (11, 13), source: (5, 7), factor: 1.0, reverse_field: false },
    Relation { target: (12, 14), source: (5, 7), factor: 1.0, reverse_field: true },
    Relation { target: (6, 8), source: (5, 7), factor: 1.0, reverse_field: true },
    Relation { target: (6, 14), source: (5, 13), factor: 1.0, reverse_field: true },
    Relation { target: (8, 12), source: (7, 11), factor: 1.0, reverse_field: true },
];


/// A corrected transcription slip in one element.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Erratum {
    pub dim: usize,
    pub row: usize,
    pub col: usize,
    pub note: &'static str,
    /// The element before the correction.
    pub uncorrected: Element,
}

pub(crate) const ERRATA: &[Erratum] = &[
    Erratum {
        dim: 12,
        row: 2,
        col: 4,
        note: "second cosh takes βh/2, not βh",
        uncorrected: Element {
            row: 2,
            col: 4,
            scale: SQRT_2,
            den: 180.0,
            pre: 0.25,
            terms: &[
                ch(0.5, 1.5, &[(25.0, A), (45.0, B), (-90.0, C)]),
                ch(1.0, 0.5, &[(10.0, A), (-40.0, D), (18.0, B), (17.0, E), (25.0, C), (5.0, F)]),
                sh(0.5, 1.5, &[(35.0, A), (15.0, B), (-30.0, C)]),
                sh(0.5, 0.5, &[(15.0, E), (5.0, C), (-15.0, F)]),
                x(-5.0, -0.5, -2.0, 0.0, 3.0, 5.0, 1.5, -1.5),
            ],
        },
    },
    Erratum {
        dim: 12,
        row: 2,
        col: 7,
        note: "second cosh takes βh/2, not βh",
        uncorrected: Element {
            row: 2,
            col: 7,
            scale: -SQRT_2,
            den: 60.0,
            pre: 0.25,
            terms: &[
                ch(0.5, 1.5, &[(15.0, A), (-15.0, B)]),
                ch(1.0, 0.5, &[(-10.0, A), (-6.0, B), (11.0, E), (10.0, C), (-10.0, F)]),
                sh(0.5, 1.5, &[(5.0, A), (-5.0, B)]),
                sh(0.5, 0.5, &[(5.0, E)]),
                x(-10.0, 0.25, -1.25, 0.0, 1.0, 0.0, 0.75, -2.25),
                x(5.0, 0.25, -2.25, 0.0, 3.0, -1.0, 0.75, -1.25),
            ],
        },
    },
    Erratum {
        dim: 18,
        row: 3,
        col: 7,
        note: "prefactor is e^{βJ1/4}, not e^{βJ1/24}",
        uncorrected: Element {
            row: 3,
            col: 7,
            scale: -1.0,
            den: 60.0,
            pre: 1.0 / 24.0,
            terms: &[
                ch(0.5, 0.5, &[(15.0, A), (-8.0, B), (-3.0, E)]),
                sh(0.5, 0.5, &[(5.0, A), (-9.0, E)]),
                x(-1.0, 1.0, -0.5, 0.0, 4.0, 6.0, 0.0, 3.0),
            ],
        },
    },
    Erratum {
        dim: 18,
        row: 5,
        col: 5,
        note: "last term carries no e^{βh}",
        uncorrected: Element {
            row: 5,
            col: 5,
            scale: 1.0,
            den: 90.0,
            pre: 0.25,
            terms: &[
                ch(0.5, 0.5, &[(15.0, D), (42.0, B), (18.0, E), (50.0, C), (30.0, F)]),
                sh(0.5, 0.5, &[(5.0, D), (6.0, B), (14.0, E), (10.0, C), (-10.0, F)]),
                x(10.0, -0.5, -2.0, 0.0, 1.0, 0.0, 1.5, -1.5),
                x(5.0, 1.0, -2.0, 1.0, 3.0, -1.0, 0.0, 1.5),
            ],
        },
    },
    Erratum {
        dim: 18,
        row: 5,
        col: 11,
        note: "term 5e^{β(J/2+2J1)}[cosh + 3 sinh] enters with a minus sign",
        uncorrected: Element {
            row: 5,
            col: 11,
            scale: SQRT_2,
            den: 180.0,
            pre: 0.25,
            terms: &[
                ch(0.5, 0.5, &[(-30.0, D), (42.0, B), (18.0, E), (-25.0, C), (-15.0, F)]),
                sh(0.5, 0.5, &[(-10.0, D), (6.0, B), (14.0, E), (-5.0, C), (5.0, F)]),
                x(5.0, -0.5, -2.0, 0.0, 1.0, 3.0, 1.5, -1.5),
                x(5.0, 1.0, -2.0, 0.0, 3.0, -1.0, 0.0, 1.5),
            ],
        },
    },
];

/// Symbols read differently from their literal form.
pub(crate) const SYMBOL_NOTES: &[(usize, usize, usize, &str)] =
    &[(12, 2, 2, "exponent symbol J_x in the e^{-β(J_x + 5J1/2)} term read as J")];
