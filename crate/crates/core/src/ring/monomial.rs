use std::cmp::Ordering;
use std::fmt;

/// The three variables of the projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// `x^a y^b z^c`, ordered graded-lexicographically with `x > y > z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn one() -> Self {
        Monomial([0, 0, 0])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial([
            other.0[0] - self.0[0],
            other.0[1] - self.0[1],
            other.0[2] - self.0[2],
        ]))
    }

    /// Position in the descending graded-lex basis of `S_j`, `j = self.degree()`.
    pub fn index(&self) -> usize {
        let j = self.degree() as usize;
        let a = self.0[0] as usize;
        let b = self.0[1] as usize;
        (j - a) * (j - a + 1) / 2 + (j - a - b)
    }

    /// Inverse of [`Monomial::index`].
    pub fn from_index(degree: u32, idx: usize) -> Monomial {
        let j = degree as usize;
        // largest s = j - a with s(s+1)/2 <= idx
        let mut s = 0usize;
        while (s + 1) * (s + 2) / 2 <= idx {
            s += 1;
        }
        let a = j - s;
        let off = idx - s * (s + 1) / 2;
        let b = s - off;
        Monomial([a as u32, b as u32, (j - a - b) as u32])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `dim S_j`, the number of monomials of degree `j` in three variables.
pub fn dim_s(j: i64) -> usize {
    if j < 0 {
        0
    } else {
        let j = j as usize;
        (j + 1) * (j + 2) / 2
    }
}

/// The monomial basis of `S_j` in descending graded-lex order.
pub fn monomials(j: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim_s(j as i64));
    for a in (0..=j).rev() {
        for b in (0..=j - a).rev() {
            out.push(Monomial([a, b, j - a - b]));
        }
    }
    out
}
