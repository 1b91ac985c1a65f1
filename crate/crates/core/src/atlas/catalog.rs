//! Named forms and matrices.
//!
//! Every entry has a native conductor; a request at conductor `N` succeeds
//! when `N` is a multiple of it. In entry texts `E` stands for the
//! primitive root of unity of the entry's own order (`e(5,1)`, `e(7,1)`,
//! ...), matching the `ε` of the surrounding construction.

use crate::error::{Error, Result};
use crate::field::{context, Cyc, CycContext, Field};
use crate::forms::{Form, SquareMatrix};
use crate::text::{parse_form, parse_scalar};

use super::relations::make_z;

/// Catalog key with optional scalar parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogId {
    pub name: String,
    pub params: Vec<Cyc>,
}

impl CatalogId {
    pub fn new(name: &str) -> Self {
        CatalogId {
            name: name.to_string(),
            params: Vec::new(),
        }
    }

    pub fn with_params(name: &str, params: Vec<Cyc>) -> Self {
        CatalogId {
            name: name.to_string(),
            params,
        }
    }
}

type FormBuilder = fn(&CycContext, &[Cyc]) -> Result<Form<Cyc>>;
type MatrixBuilder = fn(&CycContext, &[Cyc]) -> Result<SquareMatrix<Cyc>>;

enum FormRecipe {
    Text(&'static str),
    /// `base + sum params[k] * terms[k]`.
    Linear(&'static str, &'static [&'static str]),
    Custom(FormBuilder),
}

struct FormEntry {
    name: &'static str,
    nvars: usize,
    native: u32,
    params: &'static [&'static str],
    recipe: FormRecipe,
}

const CYCLIC: &str = "x^3*y + y^3*z + z^3*t + t^3*x";
const KLEIN: &str = "x^3*y + y^3*z + z^3*x";

const FORMS: &[FormEntry] = &[
    FormEntry {
        name: "F0",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^3*y + y^3*z + z^3*t + t^3*x + 3*x*y*z*t"),
    },
    FormEntry {
        name: "F1",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^2*z^2 + y^2*t^2 + 2*x*y*z*t"),
    },
    FormEntry {
        name: "F5",
        nvars: 4,
        native: 1,
        params: &["mu", "nu", "lam"],
        recipe: FormRecipe::Linear(CYCLIC, &["x^2*z^2", "y^2*t^2", "x*y*z*t"]),
    },
    FormEntry {
        name: "g",
        nvars: 4,
        native: 1,
        params: &["lam"],
        recipe: FormRecipe::Linear("x^3*y + y^3*z + z^3*x + t^4", &["x*y*z*t"]),
    },
    FormEntry {
        name: "M",
        nvars: 4,
        native: 1,
        params: &["lam"],
        recipe: FormRecipe::Linear("x^4 + y^4 + z^4 + t^4", &["x*y*z*t"]),
    },
    FormEntry {
        name: "pencil_hessian",
        nvars: 4,
        native: 1,
        params: &["lam"],
        recipe: FormRecipe::Custom(pencil_hessian),
    },
    FormEntry {
        name: "a6_eigenform",
        nvars: 4,
        native: 1,
        params: &["a", "b", "c", "d", "e"],
        recipe: FormRecipe::Linear("0", &["x^4", "y^3*t", "t^3*z", "z^3*y", "x*y*z*t"]),
    },
    FormEntry {
        name: "cyclic_quartic",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text(CYCLIC),
    },
    FormEntry {
        name: "cyclic_hessian",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text(
            "x^4*z^4 + y^4*t^4 - 4*(x^5*z*t^2 + x^2*y^5*t + x*y^2*z^5 + y*z^2*t^5) + 14*x^2*y^2*z^2*t^2",
        ),
    },
    FormEntry {
        name: "s5_h0",
        nvars: 4,
        native: 60,
        params: &[],
        recipe: FormRecipe::Text(
            "-x^4 + 2*sqrt3*sqrt5*(y^3 + z^3 + t^3)*x + 10*(z^3 + t^3)*y + 13*x^2*y^2 + 5*z^2*t^2 \
             + (26*x^2 - 6*sqrt3*sqrt5*x*y + 20*y^2)*z*t",
        ),
    },
    FormEntry {
        name: "s5_h1",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^4 + y^4 + 2*x^2*y^2 + 4*z^2*t^2 + 4*(x^2 + y^2)*z*t"),
    },
    FormEntry {
        name: "s5_f0",
        nvars: 4,
        native: 24,
        params: &[],
        recipe: FormRecipe::Text(
            "x^4 + y^4 + 2*sqrt3*(-x^3*y + y^3*x) + 2*sqrt2*sqrt3*(z^3*x + t^3*y) \
             + 2*sqrt2*(-z^3*y + t^3*x) + 6*(x^2*y^2 + z^2*t^2) + 6*sqrt3*(-x^2 + y^2)*z*t - 12*x*y*z*t",
        ),
    },
    FormEntry {
        name: "s5_f1",
        nvars: 4,
        native: 24,
        params: &[],
        recipe: FormRecipe::Text(
            "x^4 - y^4 + 2/sqrt3*(x^3*y + y^3*x) + 2*sqrt2/sqrt3*(z^3*x - t^3*y) \
             + 2*sqrt2*(z^3*y + t^3*x) + 2*sqrt3*(x^2 + y^2)*z*t",
        ),
    },
    FormEntry {
        name: "s5_f0_conjugated",
        nvars: 4,
        native: 12,
        params: &[],
        recipe: FormRecipe::Text("x^3*y - y^3*t + t^3*z + z^3*x - sqrt3/2*x^2*t^2 - sqrt3/2*y^2*z^2"),
    },
    FormEntry {
        name: "s5_f1_conjugated",
        nvars: 4,
        native: 12,
        params: &[],
        recipe: FormRecipe::Text("x^3*y + y^3*t + t^3*z - z^3*x + sqrt3*x^2*t^2 - sqrt3*y^2*z^2 + 3*sqrt3*x*y*z*t"),
    },
    FormEntry {
        name: "s5_f0_prime",
        nvars: 4,
        native: 12,
        params: &[],
        recipe: FormRecipe::Text("x^3*y - y^3*z + z^3*t + t^3*x - sqrt3/2*x^2*z^2 - sqrt3/2*y^2*t^2"),
    },
    FormEntry {
        name: "s5_f1_prime",
        nvars: 4,
        native: 12,
        params: &[],
        recipe: FormRecipe::Text("x^3*y + y^3*z + z^3*t - t^3*x + sqrt3*x^2*z^2 - sqrt3*y^2*t^2 + 3*sqrt3*x*y*z*t"),
    },
    FormEntry {
        name: "s5_f0_stretched",
        nvars: 4,
        native: 24,
        params: &[],
        recipe: FormRecipe::Text("x^3*y + y^3*z + z^3*t + t^3*x + sqrt3/2*e(8,1)*(x^2*z^2 - y^2*t^2)"),
    },
    FormEntry {
        name: "s5_f1_stretched",
        nvars: 4,
        native: 24,
        params: &[],
        recipe: FormRecipe::Text(
            "x^3*y + y^3*z + z^3*t + t^3*x + sqrt3*e(8,1)*(x^2*z^2 + y^2*t^2) - 3*sqrt3*e(8,3)*x*y*z*t",
        ),
    },
    FormEntry {
        name: "klein_quartic",
        nvars: 3,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text(KLEIN),
    },
    FormEntry {
        name: "klein_hessian",
        nvars: 3,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^5*z + y^5*x + z^5*y - 5*x^2*y^2*z^2"),
    },
    FormEntry {
        // the printed z^10*y is missing its square
        name: "klein_second_hessian",
        nvars: 3,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text(
            "x^10*z^2 + y^10*x^2 + z^10*y^2 - 2*(x^9*y^3 + y^9*z^3 + z^9*x^3) \
             - 4*(x^6*y^5*z + y^6*z^5*x + z^6*x^5*y) - 16*(x^7*y^2*z^3 + y^7*z^2*x^3 + z^7*x^2*y^3) \
             + 13*x^4*y^4*z^4",
        ),
    },
    FormEntry {
        name: "order63_sextic",
        nvars: 3,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^5*z + y^5*x + z^5*y"),
    },
    FormEntry {
        name: "order63_hessian",
        nvars: 3,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("33*x^4*y^4*z^4 - 2*(x^9*y^3 + y^9*z^3 + z^9*x^3)"),
    },
    FormEntry {
        name: "klein_plus_t4",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("x^3*y + y^3*z + z^3*x + t^4"),
    },
    FormEntry {
        name: "klein_plus_t4_hessian",
        nvars: 4,
        native: 1,
        params: &[],
        recipe: FormRecipe::Text("(x*y^5 + y*z^5 + z*x^5 - 5*x^2*y^2*z^2)*t^2"),
    },
    FormEntry {
        name: "psl27_sqrt2_invariant",
        nvars: 4,
        native: 8,
        params: &[],
        recipe: FormRecipe::Text("2*(x^3*y + y^3*z + z^3*x) + t^4 + 6*sqrt2*x*y*z*t"),
    },
    FormEntry {
        name: "m12_target",
        nvars: 4,
        native: 4,
        params: &[],
        recipe: FormRecipe::Text(
            "x^3*y + y^3*z + z^3*t + t^3*x + 3*x*y*z*t - 3/4*(1 + i)*(x^2*z^2 + y^2*t^2 + 2*x*y*z*t)",
        ),
    },
];

fn pencil_hessian(ctx: &CycContext, p: &[Cyc]) -> Result<Form<Cyc>> {
    let mu = p[0].clone() * &Cyc::rational(ctx, &crate::BigRational::new(1.into(), 12.into()));
    let n = ctx.conductor();
    let a = Cyc::int(ctx, 1) - Cyc::int(ctx, 3) * mu.pow(4);
    let b = Cyc::int(ctx, 2) * mu.pow(3);
    let c = -mu.pow(2);
    let p1 = parse_form("x^2*y^2*z^2*t^2", 4, n)?.scale(&a);
    let p2 = parse_form("x*y*z*t*(x^4 + y^4 + z^4 + t^4)", 4, n)?.scale(&b);
    let p3 = parse_form("x^4*(y^4 + z^4 + t^4) + y^4*(z^4 + t^4) + z^4*t^4", 4, n)?.scale(&c);
    Ok(&(&p1 + &p2) + &p3)
}

enum MatrixRecipe {
    /// Row-major entries of a square matrix.
    Rows(u32, &'static [&'static str]),
    Custom(MatrixBuilder),
}

struct MatrixEntry {
    name: &'static str,
    native: u32,
    params: &'static [&'static str],
    recipe: MatrixRecipe,
}

const fn rows(order: u32, entries: &'static [&'static str]) -> MatrixRecipe {
    MatrixRecipe::Rows(order, entries)
}

const MATRICES: &[MatrixEntry] = &[
    MatrixEntry {
        name: "A5",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 5, &[4, 3, 1, 2])),
    },
    MatrixEntry {
        name: "A5_printed",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 5, &[4, 3, 2, 1])),
    },
    MatrixEntry {
        name: "A7",
        native: 7,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 7, &[4, 2, 1, 0])),
    },
    MatrixEntry {
        name: "D0",
        native: 1,
        params: &["q"],
        recipe: MatrixRecipe::Custom(|c, p| diagonal_class(c, p, |_| vec![0, 0, 1, 0])),
    },
    MatrixEntry {
        name: "D_l",
        native: 1,
        params: &["q", "l"],
        recipe: MatrixRecipe::Custom(|c, p| diagonal_class(c, p, |v| vec![0, 0, 1, v[0]])),
    },
    MatrixEntry {
        name: "D_jl",
        native: 1,
        params: &["q", "j", "l"],
        recipe: MatrixRecipe::Custom(|c, p| diagonal_class(c, p, |v| vec![0, 1, v[0], v[1]])),
    },
    MatrixEntry {
        name: "R11",
        native: 3,
        params: &[],
        recipe: rows(
            1,
            &[
                "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "w", "0", "0", "0", "0", "w^2",
            ],
        ),
    },
    MatrixEntry {
        name: "R12",
        native: 1,
        params: &[],
        recipe: rows(
            1,
            &[
                "1", "0", "0", "0", //
                "0", "-1/3", "2/3", "2/3", //
                "0", "2/3", "-1/3", "2/3", //
                "0", "2/3", "2/3", "-1/3",
            ],
        ),
    },
    MatrixEntry {
        name: "R13",
        native: 60,
        params: &[],
        recipe: rows(
            1,
            &[
                "-1/4",
                "sqrt3*sqrt5/4",
                "0",
                "0", //
                "sqrt3*sqrt5/4",
                "1/4",
                "0",
                "0", //
                "0",
                "0",
                "0",
                "1", //
                "0",
                "0",
                "1",
                "0",
            ],
        ),
    },
    MatrixEntry {
        name: "R14",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[0, 1, 3, 2]))),
    },
    MatrixEntry {
        name: "rho_t1",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 0, 2, 3]))),
    },
    MatrixEntry {
        name: "rho_s1",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 2, 0, 3]))),
    },
    MatrixEntry {
        name: "rho_s1s2s3",
        native: 1,
        params: &[],
        recipe: rows(
            1,
            &[
                "-1", "-1", "-1", "-1", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0",
            ],
        ),
    },
    MatrixEntry {
        name: "dft_T",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| power_table(c, 5, 4, |i, j| -((i as i64 + 1) * (j as i64 + 1)))),
    },
    MatrixEntry {
        name: "tau_S",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(tau_s),
    },
    MatrixEntry {
        name: "tau_12",
        native: 5,
        params: &[],
        recipe: rows(
            5,
            &[
                "(3+E+E^4)/5",
                "2*(3+E+E^4)/5-1",
                "1-(3+E+E^4)/5",
                "1-2*(3+E+E^4)/5", //
                "2*(3+E+E^4)/5-1",
                "1-(3+E+E^4)/5",
                "1-2*(3+E+E^4)/5",
                "(3+E+E^4)/5", //
                "1-(3+E+E^4)/5",
                "1-2*(3+E+E^4)/5",
                "(3+E+E^4)/5",
                "2*(3+E+E^4)/5-1", //
                "1-2*(3+E+E^4)/5",
                "(3+E+E^4)/5",
                "2*(3+E+E^4)/5-1",
                "1-(3+E+E^4)/5",
            ],
        ),
    },
    MatrixEntry {
        name: "tau_12345",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 5, &[1, 2, 4, 3])),
    },
    MatrixEntry {
        name: "R21",
        native: 3,
        params: &[],
        recipe: rows(
            1,
            &[
                "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "w", "0", "0", "0", "0", "w^2",
            ],
        ),
    },
    MatrixEntry {
        name: "R22",
        native: 24,
        params: &[],
        recipe: rows(
            1,
            &[
                "1/sqrt3",
                "0",
                "0",
                "sqrt2/sqrt3", //
                "0",
                "-1/sqrt3",
                "sqrt2/sqrt3",
                "0", //
                "0",
                "sqrt2/sqrt3",
                "1/sqrt3",
                "0", //
                "sqrt2/sqrt3",
                "0",
                "0",
                "-1/sqrt3",
            ],
        ),
    },
    MatrixEntry {
        name: "R23",
        native: 12,
        params: &[],
        recipe: rows(
            1,
            &[
                "sqrt3/2", "1/2", "0", "0", //
                "1/2", "-sqrt3/2", "0", "0", //
                "0", "0", "0", "1", //
                "0", "0", "1", "0",
            ],
        ),
    },
    MatrixEntry {
        name: "R24",
        native: 1,
        params: &[],
        recipe: rows(
            1,
            &[
                "0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "1", "0", "0", "-1", "0",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_U",
        native: 24,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| {
            let r = |n: &str| matrix_catalog(&CatalogId::new(n), c.conductor());
            Ok(&(&r("R21")? * &r("R22")?) * &r("R23")?)
        }),
    },
    MatrixEntry {
        name: "r2_Omega",
        native: 3,
        params: &[],
        recipe: rows(
            1,
            &[
                "-1-w", "-1-2*w", "-1", "-1", //
                "1-w", "3", "3", "3", //
                "-1+w", "3*w", "3*w", "0", //
                "1", "0", "-1", "-1",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_Sigma",
        native: 5,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| power_table(c, 5, 4, |i, j| (i as i64 + 1) * (j as i64 + 1))),
    },
    MatrixEntry {
        name: "r2_S",
        native: 120,
        params: &[],
        recipe: MatrixRecipe::Custom(r2_s),
    },
    MatrixEntry {
        name: "r2_V_displayed",
        native: 15,
        params: &[],
        recipe: rows(
            5,
            &[
                "(-2*E-E^3-2*E^4)/5",
                "(-9*E-5*E^3-6*E^4+w*(-3-3*E-4*E^3))/5",
                "(-3-5*E^2-2*E^4+w*(4+4*E+7*E^3))/5",
                "(1-E^3+w*(1+E-2*E^3))/5",
                "(-3-2*E^3-5*E^4+w*(4+7*E+4*E^2))/5",
                "(-E-2*E^2-2*E^3)/5",
                "(1-E+w*(1-2*E+E^2))/5",
                "(-5*E-9*E^2-6*E^3+w*(-3-4*E-3*E^2))/5",
                "(-6*E^2-9*E^3-5*E^4+w*(-3-3*E^3-4*E^4))/5",
                "(1-E^4+w*(1+E^3-2*E^4))/5",
                "(-2*E^2-2*E^3-E^4)/5",
                "(-3-5*E-2*E^2+w*(4+4*E^3+7*E^4))/5",
                "(1-E^2+w*(1-2*E^2+E^4))/5",
                "(-3-2*E-5*E^3+w*(4+7*E^2+4*E^4))/5",
                "(-6*E-5*E^2-9*E^4+w*(-3-4*E^2-3*E^4))/5",
                "(-2*E-E^2-2*E^4)/5",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_W_displayed",
        native: 60,
        params: &[],
        recipe: rows(
            5,
            &[
                "(3*E^2-3*E^3)/(5*sqrt3)",
                "(1-E+2*E^2-2*E^3+w*(2*E+2*E^2+E^4))/(5*sqrt3)",
                "(2-7*E+6*E^2-6*E^3+w*(11*E^2-7*E^3+11*E^4))/(5*sqrt3)",
                "(3-3*E+w*(6+3*E^2+6*E^4))/(5*sqrt3)",
                "(2-6*E-7*E^2+6*E^4+w*(-7*E+11*E^3+11*E^4))/(5*sqrt3)",
                "(-3*E+3*E^4)/(5*sqrt3)",
                "(3-3*E^2+w*(6+6*E^3+3*E^4))/(5*sqrt3)",
                "(1-2*E-E^2+2*E^4+w*(2*E^2+E^3+2*E^4))/(5*sqrt3)",
                "(1+2*E-E^3-2*E^4+w*(2*E+E^2+2*E^3))/(5*sqrt3)",
                "(3-3*E^3+w*(6+3*E+6*E^2))/(5*sqrt3)",
                "(3*E-3*E^4)/(5*sqrt3)",
                "(2+6*E-7*E^3-6*E^4+w*(11*E+11*E^2-7*E^4))/(5*sqrt3)",
                "(3-3*E^4+w*(6+6*E+3*E^3))/(5*sqrt3)",
                "(2-6*E^2+6*E^3-7*E^4+w*(11*E-7*E^2+11*E^3))/(5*sqrt3)",
                "(1-2*E^2+2*E^3-E^4+w*(E+2*E^3+2*E^4))/(5*sqrt3)",
                "(-3*E^2+3*E^3)/(5*sqrt3)",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_T",
        native: 60,
        params: &[],
        recipe: rows(
            5,
            &[
                "E^2+E^4+w*(-1+E^4)",
                "0",
                "0",
                "0", //
                "0",
                "(3+2*E-E^2-2*E^3+w*(2+E^3+2*E^4))/sqrt3",
                "0",
                "0", //
                "0",
                "0",
                "(-2*E-4*E^2-3*E^3+w*(3+2*E-2*E^2-3*E^3))/sqrt3",
                "0", //
                "0",
                "0",
                "0",
                "1",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_ST_R24_displayed",
        native: 60,
        params: &[],
        recipe: rows(
            5,
            &[
                "sqrt3*(E^2-E^3)/5",
                "(1+2*E^3+2*E^4)/5",
                "(1+2*E^2+2*E^4)/5",
                "sqrt3*(E-E^4)/5", //
                "(1+2*E^3+2*E^4)/5",
                "sqrt3*(-E+E^4)/5",
                "sqrt3*(E^2-E^3)/5",
                "(1+2*E^2+2*E^4)/5", //
                "(1+2*E^2+2*E^4)/5",
                "sqrt3*(E^2-E^3)/5",
                "sqrt3*(E-E^4)/5",
                "(1+2*E+2*E^2)/5", //
                "sqrt3*(E-E^4)/5",
                "(1+2*E^2+2*E^4)/5",
                "(1+2*E+2*E^2)/5",
                "sqrt3*(-E^2+E^3)/5",
            ],
        ),
    },
    MatrixEntry {
        name: "r2_S_prime",
        native: 120,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| {
            let r = |n: &str| matrix_catalog(&CatalogId::new(n), c.conductor());
            Ok(&(&r("r2_S")? * &r("r2_T")?) * &r("R14")?)
        }),
    },
    MatrixEntry {
        name: "r2_R24_prime",
        native: 60,
        params: &[],
        recipe: rows(
            5,
            &[
                "sqrt3*(E^2-E^3)/5",
                "(1+2*E^3+2*E^4)/5",
                "sqrt3*(E-E^4)/5",
                "(1+2*E^2+2*E^4)/5", //
                "(1+2*E^3+2*E^4)/5",
                "sqrt3*(-E+E^4)/5",
                "(1+2*E^2+2*E^4)/5",
                "sqrt3*(E^2-E^3)/5", //
                "sqrt3*(E-E^4)/5",
                "(1+2*E^2+2*E^4)/5",
                "sqrt3*(-E^2+E^3)/5",
                "(1+2*E+2*E^2)/5", //
                "(1+2*E^2+2*E^4)/5",
                "sqrt3*(E^2-E^3)/5",
                "(1+2*E+2*E^2)/5",
                "sqrt3*(E-E^4)/5",
            ],
        ),
    },
    MatrixEntry {
        name: "stretch_T0",
        native: 480,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| stretch(c, false)),
    },
    MatrixEntry {
        name: "stretch_T1",
        native: 480,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| stretch(c, true)),
    },
    MatrixEntry {
        name: "psl27_A",
        native: 7,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 7, &[4, 2, 1, 0])),
    },
    MatrixEntry {
        name: "psl27_B",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[2, 0, 1, 3]))),
    },
    MatrixEntry {
        name: "psl27_C0",
        native: 7,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| {
            let s = |t: &str| scalar(t, 7, c);
            make_z(
                &Cyc::zero_in(c),
                &s("(-2-E+2*E^2+2*E^5-E^6)/7")?,
                &s("(-2-E^2+2*E^3+2*E^4-E^5)/7")?,
                &s("(-2+2*E-E^3-E^4+2*E^6)/7")?,
            )
        }),
    },
    MatrixEntry {
        name: "psl27_C_sqrt2",
        native: 56,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| c_sqrt2(c, 1, false)),
    },
    MatrixEntry {
        name: "psl27_C_minus_sqrt2",
        native: 56,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| c_sqrt2(c, 1, true)),
    },
    MatrixEntry {
        name: "psl27_A_i",
        native: 7,
        params: &["i"],
        recipe: MatrixRecipe::Custom(|c, p| {
            let i = int_param("psl27_A_i", &p[0])?;
            diag_powers(c, 7, &[4 * i, 2 * i, i, 0])
        }),
    },
    MatrixEntry {
        name: "psl27_C_sqrt2_i",
        native: 56,
        params: &["i"],
        recipe: MatrixRecipe::Custom(|c, p| c_sqrt2(c, int_param("psl27_C_sqrt2_i", &p[0])?, false)),
    },
    MatrixEntry {
        name: "psl27_delta_C0",
        native: 7,
        params: &[],
        recipe: rows(
            7,
            &[
                "E-E^6",
                "E^2-E^5",
                "E^4-E^3",
                "0", //
                "E^2-E^5",
                "E^4-E^3",
                "E-E^6",
                "0", //
                "E^4-E^3",
                "E-E^6",
                "E^2-E^5",
                "0", //
                "0",
                "0",
                "0",
                "-E-E^2-E^4+E^3+E^5+E^6",
            ],
        ),
    },
    MatrixEntry {
        name: "klein_A3",
        native: 7,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 7, &[4, 2, 1])),
    },
    MatrixEntry {
        name: "klein_B3",
        native: 1,
        params: &[],
        recipe: rows(1, &["0", "1", "0", "0", "0", "1", "1", "0", "0"]),
    },
    MatrixEntry {
        name: "klein_C3",
        native: 7,
        params: &[],
        recipe: rows(
            7,
            &[
                "(E-E^6)/sqrtm7",
                "(E^2-E^5)/sqrtm7",
                "(E^4-E^3)/sqrtm7", //
                "(E^2-E^5)/sqrtm7",
                "(E^4-E^3)/sqrtm7",
                "(E-E^6)/sqrtm7", //
                "(E^4-E^3)/sqrtm7",
                "(E-E^6)/sqrtm7",
                "(E^2-E^5)/sqrtm7",
            ],
        ),
    },
    MatrixEntry {
        name: "g80_B",
        native: 20,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 20, &[0, 1, -2, 7])),
    },
    MatrixEntry {
        name: "g80_C",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[3, 0, 1, 2]))),
    },
    MatrixEntry {
        name: "g16_a",
        native: 4,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 4, &[1, 3, 0, 0])),
    },
    MatrixEntry {
        name: "g16_b",
        native: 4,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 4, &[0, 1, 3, 0])),
    },
    MatrixEntry {
        name: "s3_swap",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 0, 2, 3]))),
    },
    MatrixEntry {
        name: "s3_cycle",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 2, 0, 3]))),
    },
    MatrixEntry {
        name: "g384_B",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 2, 3, 0]))),
    },
    MatrixEntry {
        name: "g1920_C",
        native: 4,
        params: &[],
        recipe: rows(
            1,
            &[
                "-1/2", "-i/2", "-i/2", "1/2", //
                "-i/2", "-1/2", "1/2", "-i/2", //
                "1/2", "i/2", "-i/2", "1/2", //
                "-i/2", "-1/2", "-1/2", "i/2",
            ],
        ),
    },
    MatrixEntry {
        name: "H2",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(signs(c, &[-1, -1, 1, 1]))),
    },
    MatrixEntry {
        name: "H3",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(signs(c, &[-1, 1, -1, 1]))),
    },
    MatrixEntry {
        name: "H4",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(signs(c, &[1, -1, -1, 1]))),
    },
    MatrixEntry {
        name: "K2",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[1, 0, 3, 2]))),
    },
    MatrixEntry {
        name: "K3",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[2, 3, 0, 1]))),
    },
    MatrixEntry {
        name: "K4",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[3, 2, 1, 0]))),
    },
    MatrixEntry {
        name: "T1",
        native: 1,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| Ok(permutation(c, &[2, 1, 0, 3]))),
    },
    MatrixEntry {
        name: "T2",
        native: 4,
        params: &[],
        recipe: rows(
            1,
            &[
                "0", "-i", "0", "0", "i", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1",
            ],
        ),
    },
    MatrixEntry {
        name: "T3",
        native: 4,
        params: &[],
        recipe: rows(
            1,
            &[
                "1", "0", "0", "0", "0", "0", "0", "-i", "0", "0", "1", "0", "0", "i", "0", "0",
            ],
        ),
    },
    MatrixEntry {
        name: "T4",
        native: 4,
        params: &[],
        recipe: rows(
            1,
            &[
                "1/2", "i/2", "-1/2", "i/2", //
                "-i/2", "1/2", "-i/2", "-1/2", //
                "-1/2", "i/2", "1/2", "i/2", //
                "-i/2", "-1/2", "-i/2", "1/2",
            ],
        ),
    },
    MatrixEntry {
        name: "m12_D",
        native: 4,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| diag_powers(c, 4, &[0, 1, 0, 2])),
    },
    MatrixEntry {
        name: "m12_C",
        native: 20,
        params: &[],
        recipe: MatrixRecipe::Custom(m12_c),
    },
    MatrixEntry {
        name: "m12_C_inverse_displayed",
        native: 20,
        params: &[],
        recipe: MatrixRecipe::Custom(m12_c_inverse),
    },
    MatrixEntry {
        name: "m12_S",
        native: 20,
        params: &[],
        recipe: MatrixRecipe::Custom(|c, _| {
            let cm = m12_c(c, &[])?;
            let sigma2 = permutation(c, &[2, 3, 0, 1]);
            Ok(&(&cm * &sigma2) * &diag_powers(c, 5, &[4, 3, 1, 2])?)
        }),
    },
];

/// Cyclic coefficients `c_1..c_4` of the circulant part of `m12_C`.
pub const M12_C: [&str; 4] = [
    "-1",
    "1-E^2+E^4+i*(-1-E+E^3)",
    "-E+E^4+i*(E^2+E^3)",
    "-E^3-E^4-i*(E+E^2)",
];

/// Coefficients `γ_1..γ_4` of the displayed inverse of `m12_C`.
pub const M12_GAMMA: [&str; 4] = [
    "-2+E+E^4+i*(-E^2+E^3)",
    "-E^3+E^4+i*(E-E^2)",
    "1+2*E+2*E^3",
    "-E+E^3+i*(-E^2+E^4)",
];

/// The scalar `p` with `M^12(Sx) = 80 p (F0 - 3/4 (1+i) F1)`.
pub const M12_P: &str = "3+20*E+28*E^2+16*E^3+i*(17+20*E+4*E^2-8*E^3)";

fn m12_c(c: &CycContext, _: &[Cyc]) -> Result<SquareMatrix<Cyc>> {
    let k: Vec<Cyc> = M12_C.iter().map(|t| scalar(t, 5, c)).collect::<Result<_>>()?;
    let order = [[0, 1, 2, 3], [2, 3, 0, 1], [3, 0, 1, 2], [1, 2, 3, 0]];
    let circ = SquareMatrix::from_rows(
        order
            .iter()
            .map(|r| r.iter().map(|&j| k[j].clone()).collect())
            .collect(),
    )?;
    Ok(&diag_powers(c, 4, &[0, 1, 0, 2])? * &circ)
}

fn m12_c_inverse(c: &CycContext, _: &[Cyc]) -> Result<SquareMatrix<Cyc>> {
    let g: Vec<Cyc> = M12_GAMMA.iter().map(|t| scalar(t, 5, c)).collect::<Result<_>>()?;
    let order = [[0, 2, 3, 1], [1, 3, 0, 2], [2, 0, 1, 3], [3, 1, 2, 0]];
    let tenth = Cyc::rational(c, &crate::BigRational::new(1.into(), 10.into()));
    let m = SquareMatrix::from_rows(
        order
            .iter()
            .map(|r| r.iter().map(|&j| g[j].clone() * &tenth).collect())
            .collect(),
    )?;
    Ok(&m * &diag_powers(c, 4, &[0, 3, 0, 2])?)
}

fn tau_s(c: &CycContext, _: &[Cyc]) -> Result<SquareMatrix<Cyc>> {
    let t = power_table(c, 5, 4, |i, j| -((i as i64 + 1) * (j as i64 + 1)))?;
    Ok(&(&t * &diag_powers(c, 5, &[4, 3, 2, 1])?) * &permutation(c, &[0, 1, 3, 2]))
}

/// Columns `e_λ` for `λ = -ε^k`, `k = 1..4`.
fn r2_s(c: &CycContext, _: &[Cyc]) -> Result<SquareMatrix<Cyc>> {
    let s = |t: &str| scalar(t, 120, c);
    let (s6, s2, s3, w) = (s("sqrt2*sqrt3")?, s("sqrt2")?, s("sqrt3")?, s("w")?);
    let int = |n: i64| Cyc::int(c, n);
    let mut cols: Vec<Vec<Cyc>> = Vec::new();
    for k in 1..=4 {
        let l = -scalar(&format!("e(5,{k})"), 5, c)?;
        let l2 = l.pow(2);
        let l3 = l.pow(3);
        cols.push(vec![
            s6.clone() * (int(1) + w.clone() * &l - int(2) * w.clone() * &l2),
            s2.clone() * (int(-3) + (int(2) + w.clone()) * &l),
            int(2) * ((int(1) - w.clone()) * &l + int(3) * w.clone() * &l2 - int(3) * w.clone() * &l3),
            int(2) * s3.clone() * (int(1) - int(2) * l.clone() + l2),
        ]);
    }
    SquareMatrix::from_rows(
        (0..4)
            .map(|i| cols.iter().map(|col| col[i].clone()).collect())
            .collect(),
    )
}

fn stretch(c: &CycContext, flip: bool) -> Result<SquareMatrix<Cyc>> {
    let a = scalar("e(160,1)", 160, c)?;
    let inv = a.inverse().expect("root of unity");
    let last = if flip { inv.pow(27) } else { -inv.pow(27) };
    Ok(SquareMatrix::diagonal(&[a.clone(), inv.pow(3), a.pow(9), last]))
}

fn c_sqrt2(c: &CycContext, i: i64, minus: bool) -> Result<SquareMatrix<Cyc>> {
    let s = |t: String| scalar(&t, 56, c);
    let tau = if minus { s("-sqrt2".into())? } else { s("sqrt2".into())? };
    let pair = |k: i64| s(format!("e(7,{})+e(7,{})", k * i, -k * i));
    make_z(&tau, &pair(1)?, &pair(2)?, &pair(3)?)
}

fn diagonal_class(c: &CycContext, p: &[Cyc], exps: fn(&[i64]) -> Vec<i64>) -> Result<SquareMatrix<Cyc>> {
    let v: Vec<i64> = p
        .iter()
        .map(|x| int_param("diagonal class", x))
        .collect::<Result<_>>()?;
    let q = v[0];
    if q < 1 {
        return Err(Error::BadParams {
            id: "diagonal class".into(),
            reason: "q must be positive".into(),
        });
    }
    let q = q as u32;
    if !c.conductor().is_multiple_of(q) {
        return Err(Error::InsufficientConductor {
            name: format!("e({q},1)"),
            needed: q,
            conductor: c.conductor(),
        });
    }
    diag_powers(c, q, &exps(&v[1..]))
}

fn int_param(id: &str, x: &Cyc) -> Result<i64> {
    x.as_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| i64::try_from(r.to_integer()).ok())
        .ok_or_else(|| Error::BadParams {
            id: id.to_string(),
            reason: format!("expected an integer, got {x}"),
        })
}

/// `diag[ζ_q^k ...]` inside `c`.
fn diag_powers(c: &CycContext, q: u32, exps: &[i64]) -> Result<SquareMatrix<Cyc>> {
    let small = context(q)?;
    let d: Vec<Cyc> = exps
        .iter()
        .map(|&k| Cyc::zeta(&small, k).embed(c))
        .collect::<Result<_>>()?;
    Ok(SquareMatrix::diagonal(&d))
}

/// `[ζ_q^{f(i,j)}]` of size `n`.
fn power_table(c: &CycContext, q: u32, n: usize, f: impl Fn(usize, usize) -> i64) -> Result<SquareMatrix<Cyc>> {
    let small = context(q)?;
    SquareMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| Cyc::zeta(&small, f(i, j)).embed(c)).collect())
            .collect::<Result<_>>()?,
    )
}

/// Matrix whose column `j` is `e_{rows[j]}`.
fn permutation(c: &CycContext, rows: &[usize]) -> SquareMatrix<Cyc> {
    SquareMatrix::from_columns(&rows.iter().map(|&r| (r, Cyc::one_in(c))).collect::<Vec<_>>())
}

fn signs(c: &CycContext, s: &[i64]) -> SquareMatrix<Cyc> {
    SquareMatrix::diagonal(&s.iter().map(|&k| Cyc::int(c, k)).collect::<Vec<_>>())
}

/// Parses `text` with `E` read as `e(order,1)`, inside `c`.
pub fn scalar(text: &str, order: u32, c: &CycContext) -> Result<Cyc> {
    parse_scalar(&text.replace('E', &format!("e({order},1)")), c.conductor())
}

fn target_context(name: &str, native: u32, conductor: u32) -> Result<CycContext> {
    if conductor == 0 || !conductor.is_multiple_of(native) {
        return Err(Error::InsufficientConductor {
            name: name.to_string(),
            needed: native,
            conductor,
        });
    }
    context(conductor)
}

fn check_params(name: &str, expected: &[&str], got: &[Cyc], ctx: &CycContext) -> Result<()> {
    if expected.len() != got.len() {
        return Err(Error::BadParams {
            id: name.to_string(),
            reason: format!(
                "expected {} parameter(s) ({}), got {}",
                expected.len(),
                expected.join(", "),
                got.len()
            ),
        });
    }
    for p in got {
        if p.ctx() != ctx {
            return Err(Error::mismatch(ctx, p.ctx()));
        }
    }
    Ok(())
}

/// The named form at the given conductor.
pub fn form_catalog(id: &CatalogId, conductor: u32) -> Result<Form<Cyc>> {
    let e = FORMS
        .iter()
        .find(|e| e.name == id.name)
        .ok_or_else(|| Error::UnknownId(id.name.clone()))?;
    let ctx = target_context(e.name, e.native, conductor)?;
    check_params(e.name, e.params, &id.params, &ctx)?;
    match &e.recipe {
        FormRecipe::Text(t) => parse_form(t, e.nvars, conductor),
        FormRecipe::Linear(base, terms) => {
            let mut f = parse_form(base, e.nvars, conductor)?;
            if f.is_zero() {
                f = Form::zero(e.nvars, 4, &ctx);
            }
            for (t, p) in terms.iter().zip(&id.params) {
                f = f.checked_add(&parse_form(t, e.nvars, conductor)?.scale(p))?;
            }
            Ok(f)
        }
        FormRecipe::Custom(b) => b(&ctx, &id.params),
    }
}

/// The named matrix at the given conductor.
pub fn matrix_catalog(id: &CatalogId, conductor: u32) -> Result<SquareMatrix<Cyc>> {
    let e = MATRICES
        .iter()
        .find(|e| e.name == id.name)
        .ok_or_else(|| Error::UnknownId(id.name.clone()))?;
    let ctx = target_context(e.name, e.native, conductor)?;
    check_params(e.name, e.params, &id.params, &ctx)?;
    match &e.recipe {
        MatrixRecipe::Rows(order, entries) => {
            let n = (entries.len() as f64).sqrt() as usize;
            let vals: Vec<Cyc> = entries.iter().map(|t| scalar(t, *order, &ctx)).collect::<Result<_>>()?;
            SquareMatrix::from_rows(vals.chunks(n).map(|r| r.to_vec()).collect())
        }
        MatrixRecipe::Custom(b) => b(&ctx, &id.params),
    }
}

pub fn form_ids() -> Vec<&'static str> {
    FORMS.iter().map(|e| e.name).collect()
}

pub fn matrix_ids() -> Vec<&'static str> {
    MATRICES.iter().map(|e| e.name).collect()
}

/// Smallest conductor at which the entry can be built, if it exists.
pub fn native_conductor(name: &str) -> Option<u32> {
    FORMS
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.native)
        .or_else(|| MATRICES.iter().find(|e| e.name == name).map(|e| e.native))
}
