//! Fraction-free Gauss-Jordan elimination over the Gaussian integers.
//!
//! Rational rows are first scaled to primitive Gaussian-integer rows. Row
//! updates either subtract an exact multiple of the pivot row (when the pivot
//! divides the entry) or cross-multiply, after which the row content is divided
//! out. The whole pass first runs on checked `i128` arithmetic and is redone
//! with `BigInt` if anything overflows. Only the final normalization divides by
//! the pivots, which gives the canonical reduced echelon form over Q(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Scalar;

pub(crate) trait Int: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_divisible_by(&self, o: &Self) -> bool;
    fn is_unit(&self) -> bool;
}

impl Int for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128().filter(|v| *v != i128::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o).filter(|v| *v != i128::MIN)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|v| *v != i128::MIN)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|v| *v != i128::MIN)
    }
    fn neg(&self) -> Option<Self> {
        Some(-*self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_divisible_by(&self, o: &Self) -> bool {
        self % o == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Int for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_divisible_by(&self, o: &Self) -> bool {
        Zero::is_zero(&(self % o))
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// A Gaussian integer `re + im i`.
#[derive(Clone, PartialEq)]
pub(crate) struct GInt<I> {
    re: I,
    im: I,
}

impl<I: Int> GInt<I> {
    fn zero() -> Self {
        GInt {
            re: I::zero(),
            im: I::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn sub(&self, o: &Self) -> Option<Self> {
        Some(GInt {
            re: self.re.sub(&o.re)?,
            im: self.im.sub(&o.im)?,
        })
    }

    fn mul(&self, o: &Self) -> Option<Self> {
        if self.is_real() && o.is_real() {
            return Some(GInt {
                re: self.re.mul(&o.re)?,
                im: I::zero(),
            });
        }
        Some(GInt {
            re: self.re.mul(&o.re)?.sub(&self.im.mul(&o.im)?)?,
            im: self.re.mul(&o.im)?.add(&self.im.mul(&o.re)?)?,
        })
    }

    /// `self / d` when it is a Gaussian integer.
    fn try_div(&self, d: &Self) -> Option<Option<Self>> {
        if d.is_real() {
            if self.re.is_divisible_by(&d.re) && self.im.is_divisible_by(&d.re) {
                return Some(Some(GInt {
                    re: self.re.div_exact(&d.re),
                    im: self.im.div_exact(&d.re),
                }));
            }
            return Some(None);
        }
        let conj = GInt {
            re: d.re.clone(),
            im: d.im.neg()?,
        };
        let num = self.mul(&conj)?;
        let norm = d.re.mul(&d.re)?.add(&d.im.mul(&d.im)?)?;
        if num.re.is_divisible_by(&norm) && num.im.is_divisible_by(&norm) {
            Some(Some(GInt {
                re: num.re.div_exact(&norm),
                im: num.im.div_exact(&norm),
            }))
        } else {
            Some(None)
        }
    }

    fn is_unit(&self) -> bool {
        (self.im.is_zero() && self.re.is_unit()) || (self.re.is_zero() && self.im.is_unit())
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::new(
            BigRational::from_integer(self.re.to_big()),
            BigRational::from_integer(self.im.to_big()),
        )
    }
}

type Row<I> = Vec<GInt<I>>;

/// Scales a rational row to a primitive Gaussian-integer row.
fn integer_row(row: &[Scalar]) -> Row<BigInt> {
    let mut l = BigInt::one();
    for c in row {
        if !c.is_zero() {
            l = l.lcm(&c.denominator_lcm());
        }
    }
    let lr = BigRational::from_integer(l);
    let out: Row<BigInt> = row
        .iter()
        .map(|c| {
            if c.is_zero() {
                GInt::zero()
            } else {
                let re = c.re() * &lr;
                let im = c.im() * &lr;
                GInt {
                    re: re.to_integer(),
                    im: im.to_integer(),
                }
            }
        })
        .collect();
    out
}

fn convert_row<I: Int>(row: &Row<BigInt>) -> Option<Row<I>> {
    row.iter()
        .map(|g| {
            Some(GInt {
                re: I::from_big(&g.re)?,
                im: I::from_big(&g.im)?,
            })
        })
        .collect()
}

fn remove_content<I: Int>(row: &mut Row<I>) {
    let mut g = I::zero();
    for e in row.iter() {
        if !e.re.is_zero() {
            g = g.gcd(&e.re);
        }
        if !e.im.is_zero() {
            g = g.gcd(&e.im);
        }
        if g.is_unit() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for e in row.iter_mut() {
        if !e.is_zero() {
            e.re = e.re.div_exact(&g);
            e.im = e.im.div_exact(&g);
        }
    }
}

/// Eliminates column `col` of `target` using the sparse pivot row.
fn eliminate<I: Int>(target: &mut Row<I>, pivot: &[(usize, GInt<I>)], pivot_val: &GInt<I>, col: usize) -> Option<()> {
    let a = target[col].clone();
    if let Some(q) = a.try_div(pivot_val)? {
        for (j, p) in pivot {
            let prod = q.mul(p)?;
            target[*j] = target[*j].sub(&prod)?;
        }
        return Some(());
    }
    // cross-multiply: target <- (pivot/g) * target - (a/g) * pivot
    let (scale, factor) = if a.is_real() && pivot_val.is_real() {
        let g = a.re.gcd(&pivot_val.re);
        (
            GInt {
                re: pivot_val.re.div_exact(&g),
                im: I::zero(),
            },
            GInt {
                re: a.re.div_exact(&g),
                im: I::zero(),
            },
        )
    } else {
        (pivot_val.clone(), a)
    };
    for e in target.iter_mut() {
        if !e.is_zero() {
            *e = e.mul(&scale)?;
        }
    }
    for (j, p) in pivot {
        let prod = factor.mul(p)?;
        target[*j] = target[*j].sub(&prod)?;
    }
    remove_content(target);
    Some(())
}

/// Returns the pivot rows (still integral) and pivot columns, or `None` when the
/// integer type overflowed.
fn gauss_jordan<I: Int>(mut rows: Vec<Row<I>>, ncols: usize) -> Option<(Vec<Row<I>>, Vec<usize>)> {
    rows.retain(|r| r.iter().any(|e| !e.is_zero()));
    for r in rows.iter_mut() {
        remove_content(r);
    }
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        // prefer unit pivots, then sparse rows
        let mut best: Option<(usize, (bool, usize))> = None;
        for (i, row) in rows.iter().enumerate().skip(next) {
            if row[col].is_zero() {
                continue;
            }
            let key = (!row[col].is_unit(), row.iter().filter(|e| !e.is_zero()).count());
            if best.as_ref().map_or(true, |(_, k)| key < *k) {
                best = Some((i, key));
            }
        }
        let Some((bi, _)) = best else { continue };
        rows.swap(next, bi);
        let pivot_val = rows[next][col].clone();
        let sparse: Vec<(usize, GInt<I>)> = rows[next]
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(j, e)| (j, e.clone()))
            .collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            eliminate(row, &sparse, &pivot_val, col)?;
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    Some((rows, pivots))
}

fn run<T>(rows: &[Vec<Scalar>], ncols: usize, finish_small: impl Fn(Vec<Row<i128>>, Vec<usize>) -> T, finish_big: impl Fn(Vec<Row<BigInt>>, Vec<usize>) -> T) -> T {
    let big_rows: Vec<Row<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length does not match the column count");
            integer_row(r)
        })
        .collect();
    let small: Option<Vec<Row<i128>>> = big_rows.iter().map(convert_row).collect();
    if let Some(small) = small {
        if let Some((r, p)) = gauss_jordan(small, ncols) {
            return finish_small(r, p);
        }
    }
    let (r, p) = gauss_jordan(big_rows, ncols).expect("big integers cannot overflow");
    finish_big(r, p)
}

fn normalize<I: Int>(rows: Vec<Row<I>>, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    rows.into_iter()
        .zip(pivots)
        .map(|(row, &p)| {
            let inv = row[p].to_scalar().inv().expect("pivot is nonzero");
            row.iter()
                .map(|e| if e.is_zero() { Scalar::zero() } else { &e.to_scalar() * &inv })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form of the row space: `(rows, pivot columns)`.
pub(crate) fn rref(rows: &[Vec<Scalar>], ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    run(
        rows,
        ncols,
        |r, p| {
            let n = normalize(r, &p);
            (n, p)
        },
        |r, p| {
            let n = normalize(r, &p);
            (n, p)
        },
    )
}

/// Rank of the row space.
pub(crate) fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    run(rows, ncols, |_, p| p.len(), |_, p| p.len())
}
