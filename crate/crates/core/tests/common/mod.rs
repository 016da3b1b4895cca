#![allow(dead_code)]

pub mod oracle;

use jacsyz_core::{parse_poly, Field, HomPoly};

pub fn p(s: &str) -> HomPoly {
    parse_poly(s, Field::QI).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub const ARRANGEMENT: &str = "x*y*z*(x-y)*(y-z)*(x-z)";
pub const TWO_CONICS_ONE_TANGENCY: &str = "(y^2-2*x*y+z^2)*(y^2+4*x*y+z^2)";
pub const THREE_CUSPS: &str = "x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)";
pub const TACNODE_CONICS: &str = "(x^2-y^2-z^2)*(x^2-y^2-4*z^2)";

/// Single curves, each small enough to analyze in well under a second.
pub const CURVES: &[&str] = &[
    "x*y",
    "x*y*z",
    "x^3+y^3+z^3",
    "y^2*z-x^3-x^2*z",
    "y^2*z-x^3",
    "x^2*y+z^3",
    "x*y*(x+y)+z^3",
    "x*y^3+z^4",
    "x*y^4+y*z^4",
    "x*y^3*z+z^5",
    ARRANGEMENT,
    TWO_CONICS_ONE_TANGENCY,
    THREE_CUSPS,
    TACNODE_CONICS,
    "(x^2-2*x*z+y^2)*(x^2+2*x*z+y^2)",
    "x*y*z*(x*y+y*z+x*z)",
    "x^2*y^2*z+y^2*z^3+x^2*z^3-2*x*y*z^2*(x+y+z)",
    "(x-z)*(3*y^2-(x+2*z)^2)*(x^2+y^2-4*z^2)",
    "x^4+y^4+z^4",
    "x*y*z*(x+y+z)",
];

/// Curve plus a line, and whether every singularity of both curves is
/// quasihomogeneous.
pub const LINE_ADDITIONS: &[(&str, &str, bool)] = &[
    (TWO_CONICS_ONE_TANGENCY, "y", true),
    (TWO_CONICS_ONE_TANGENCY, "y+i*z", true),
    (TWO_CONICS_ONE_TANGENCY, "y+z", true),
    ("x*y^2+z^3", "y", true),
    ("x*y^2+z^3", "z", true),
    ("x*y^3+z^4", "y+z", false),
    ("x*y^4+z^5", "y+z", false),
    (THREE_CUSPS, "z", true),
    (TACNODE_CONICS, "z", true),
    ("x^2*y+z^3", "x", true),
    (ARRANGEMENT, "x+y+z", true),
    ("x^3+y^3+z^3", "x+y", true),
];

/// Pairs of curves meeting with quasihomogeneous singularities in the union.
pub const UNIONS: &[(&str, &str)] = &[
    ("x^2+y^2-z^2", "x^2+2*y^2-3*z^2"),
    ("y*z-x^2", "y*z-x^2+y^2+y*z"),
    ("x^2-y^2-z^2", "x^2-y^2-4*z^2"),
    ("y*z-x^2", "y*z-x^2+x*y+y^2"),
    ("x*(x+y)+y*z-y^2", "x*(x+y)+y*z+y^2"),
    ("x*y*z", "x*y+y*z+x*z"),
    ("(x^2-2*x*z+y^2)*(x^2+2*x*z+y^2)", "x^2+y^2-4*z^2"),
    (ARRANGEMENT, "x^2+z^2-x*y-y*z"),
    (THREE_CUSPS, "z"),
    (THREE_CUSPS, "x*y+y*z+x*z"),
];
