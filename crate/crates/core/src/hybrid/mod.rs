//! Hybrid numbers `a + b i + c e + d h` with `i^2 = -1`, `e^2 = 0`,
//! `h^2 = 1` and `ih = -hi = e + i`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::rings::{forward_ring_ops, join_terms, scaled_term, Render, Ring, RingError};

mod parse;

pub use parse::{parse_hybrid, ParseError};

/// Basis units in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    E,
    H,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::E, Unit::H];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::E => "e",
            Unit::H => "h",
        }
    }
}

/// Products of basis units, `UNIT_TABLE[p][q] = p * q` as coordinates over
/// `(1, i, e, h)`. Validated against [`hybrid_to_matrix`] in the tests.
const UNIT_TABLE: [[[i8; 4]; 4]; 4] = [
    // 1 * {1, i, e, h}
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    // i * {1, i, e, h}: i, -1, 1-h, e+i
    [[0, 1, 0, 0], [-1, 0, 0, 0], [1, 0, 0, -1], [0, 1, 1, 0]],
    // e * {1, i, e, h}: e, 1+h, 0, -e
    [[0, 0, 1, 0], [1, 0, 0, 1], [0, 0, 0, 0], [0, 0, -1, 0]],
    // h * {1, i, e, h}: h, -e-i, e, 1
    [[0, 0, 0, 1], [0, -1, -1, 0], [0, 0, 1, 0], [1, 0, 0, 0]],
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hybrid<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Hybrid<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Hybrid { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Hybrid::new(
            R::from_int(a),
            R::from_int(b),
            R::from_int(c),
            R::from_int(d),
        )
    }

    pub fn real(a: R) -> Self {
        Hybrid::new(a, R::zero(), R::zero(), R::zero())
    }

    pub fn unit(u: Unit) -> Self {
        let mut coords = [R::zero(), R::zero(), R::zero(), R::zero()];
        coords[u.index()] = R::one();
        Self::from_coords(coords)
    }

    pub fn from_coords([a, b, c, d]: [R; 4]) -> Self {
        Hybrid { a, b, c, d }
    }

    pub fn coords(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Hybrid<S> {
        Hybrid::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn conj(&self) -> Self {
        hybrid_conjugate(self)
    }
}

/// Full noncommutative product, expanded bilinearly over the unit table.
pub fn hybrid_mul<R: Ring>(p: &Hybrid<R>, q: &Hybrid<R>) -> Hybrid<R> {
    let mut out = [R::zero(), R::zero(), R::zero(), R::zero()];
    for (j, pj) in p.coords().into_iter().enumerate() {
        if pj.is_zero() {
            continue;
        }
        for (k, qk) in q.coords().into_iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            let prod = pj.clone() * qk.clone();
            for (m, slot) in out.iter_mut().enumerate() {
                match UNIT_TABLE[j][k][m] {
                    0 => {}
                    1 => *slot = slot.clone() + prod.clone(),
                    -1 => *slot = slot.clone() - prod.clone(),
                    _ => unreachable!("unit table entries are -1, 0 or 1"),
                }
            }
        }
    }
    Hybrid::from_coords(out)
}

/// `a - b i - c e - d h`.
pub fn hybrid_conjugate<R: Ring>(z: &Hybrid<R>) -> Hybrid<R> {
    Hybrid::new(z.a.clone(), -z.b.clone(), -z.c.clone(), -z.d.clone())
}

/// `g(Z1, Z2) = a1 a2 + b1 b2 - b1 c2 - b2 c1 - d1 d2`.
pub fn scalar_product<R: Ring>(z1: &Hybrid<R>, z2: &Hybrid<R>) -> R {
    z1.a.clone() * z2.a.clone() + z1.b.clone() * z2.b.clone()
        - z1.b.clone() * z2.c.clone()
        - z2.b.clone() * z1.c.clone()
        - z1.d.clone() * z2.d.clone()
}

/// `(Z1 conj(Z2) - Z2 conj(Z1)) / 2`.
pub fn vector_product<R: Ring>(z1: &Hybrid<R>, z2: &Hybrid<R>) -> Result<Hybrid<R>, RingError> {
    let diff = hybrid_mul(z1, &z2.conj()) - hybrid_mul(z2, &z1.conj());
    diff.halve()
}

/// 2x2 matrix over a commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<R> {
    pub m11: R,
    pub m12: R,
    pub m21: R,
    pub m22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn det(&self) -> R {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }
}

impl<'b, R: Ring> Mul<&'b Mat2<R>> for &Mat2<R> {
    type Output = Mat2<R>;

    fn mul(self, o: &'b Mat2<R>) -> Mat2<R> {
        let (a, b) = (self, o);
        Mat2::new(
            a.m11.clone() * b.m11.clone() + a.m12.clone() * b.m21.clone(),
            a.m11.clone() * b.m12.clone() + a.m12.clone() * b.m22.clone(),
            a.m21.clone() * b.m11.clone() + a.m22.clone() * b.m21.clone(),
            a.m21.clone() * b.m12.clone() + a.m22.clone() * b.m22.clone(),
        )
    }
}

/// Faithful real 2x2 representation `[[a+c, b-c+d], [c-b+d, a-c]]`.
pub fn hybrid_to_matrix<R: Ring>(z: &Hybrid<R>) -> Mat2<R> {
    let Hybrid { a, b, c, d } = z.clone();
    Mat2::new(
        a.clone() + c.clone(),
        b.clone() - c.clone() + d.clone(),
        c.clone() - b + d,
        a - c,
    )
}

impl<'b, R: Ring> Add<&'b Hybrid<R>> for &Hybrid<R> {
    type Output = Hybrid<R>;

    fn add(self, o: &'b Hybrid<R>) -> Hybrid<R> {
        Hybrid::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }
}

impl<'b, R: Ring> Sub<&'b Hybrid<R>> for &Hybrid<R> {
    type Output = Hybrid<R>;

    fn sub(self, o: &'b Hybrid<R>) -> Hybrid<R> {
        self + &(-o)
    }
}

impl<'b, R: Ring> Mul<&'b Hybrid<R>> for &Hybrid<R> {
    type Output = Hybrid<R>;

    fn mul(self, o: &'b Hybrid<R>) -> Hybrid<R> {
        hybrid_mul(self, o)
    }
}

impl<R: Ring> Neg for &Hybrid<R> {
    type Output = Hybrid<R>;

    fn neg(self) -> Hybrid<R> {
        self.map(|x| -x.clone())
    }
}

forward_ring_ops!(impl[R: Ring] Hybrid<R>);

impl<R: Ring> Hybrid<R> {
    pub fn zero() -> Self {
        Hybrid::real(R::zero())
    }

    pub fn one() -> Self {
        Hybrid::real(R::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn halve(&self) -> Result<Self, RingError> {
        Ok(Hybrid::new(
            self.a.halve()?,
            self.b.halve()?,
            self.c.halve()?,
            self.d.halve()?,
        ))
    }
}

impl<R: Ring> Render for Hybrid<R> {
    /// Terms in the order real, `e`, `i`, `h`; zero terms omitted. So
    /// `i * h` renders as `e+i`.
    fn render(&self) -> String {
        let mut terms = Vec::new();
        if !self.a.is_zero() {
            terms.push(self.a.render());
        }
        for (coeff, unit) in [(&self.c, Unit::E), (&self.b, Unit::I), (&self.d, Unit::H)] {
            if !coeff.is_zero() {
                terms.push(scaled_term(coeff, unit.symbol()));
            }
        }
        join_terms(terms)
    }

    fn is_atomic(&self) -> bool {
        self.coords().iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{rat, Int, Poly, Rat};

    type Z = Hybrid<Int>;

    fn u(x: Unit) -> Z {
        Z::unit(x)
    }

    #[test]
    fn generator_relations() {
        assert_eq!(u(Unit::I) * u(Unit::I), Z::from_ints(-1, 0, 0, 0));
        assert_eq!(u(Unit::E) * u(Unit::E), Z::zero());
        assert_eq!(u(Unit::H) * u(Unit::H), Z::one());
        assert_eq!(u(Unit::I) * u(Unit::H), Z::from_ints(0, 1, 1, 0));
        assert_eq!(u(Unit::H) * u(Unit::I), Z::from_ints(0, -1, -1, 0));
        assert_eq!(u(Unit::E) * u(Unit::H), Z::from_ints(0, 0, -1, 0));
    }

    #[test]
    fn table_matches_matrix_oracle() {
        for p in Unit::ALL {
            for q in Unit::ALL {
                let prod = hybrid_mul(&u(p), &u(q));
                assert_eq!(
                    hybrid_to_matrix(&prod),
                    &hybrid_to_matrix(&u(p)) * &hybrid_to_matrix(&u(q)),
                    "{p:?} * {q:?}"
                );
            }
        }
    }

    #[test]
    fn distributed_product() {
        let lhs = Z::from_ints(1, 1, 0, 0) * Z::from_ints(1, 0, 0, 1);
        assert_eq!(lhs, Z::from_ints(1, 2, 1, 1));
    }

    #[test]
    fn conjugate() {
        let z = Z::from_ints(1, 2, 3, 4);
        assert_eq!(hybrid_conjugate(&z), Z::from_ints(1, -2, -3, -4));
        assert_eq!(hybrid_conjugate(&hybrid_conjugate(&z)), z);
        assert_eq!(
            hybrid_conjugate(&Z::from_ints(5, 0, 0, 0)),
            Z::from_ints(5, 0, 0, 0)
        );
    }

    #[test]
    fn scalar_product_examples() {
        let one = Int::from(1);
        assert_eq!(scalar_product(&u(Unit::I), &u(Unit::I)), one);
        assert_eq!(scalar_product(&u(Unit::H), &u(Unit::H)), -one.clone());
        assert_eq!(scalar_product(&Z::one(), &Z::one()), one);
        assert_eq!(scalar_product(&u(Unit::I), &u(Unit::E)), -one);
        // cross-check -(ie + ei)/2 = -1
        let sym = (u(Unit::I) * u(Unit::E) + u(Unit::E) * u(Unit::I))
            .halve()
            .unwrap();
        assert_eq!(-sym, Z::from_ints(-1, 0, 0, 0));
    }

    #[test]
    fn vector_product_examples() {
        let z = Z::from_ints(3, -1, 4, 2);
        assert_eq!(vector_product(&z, &z).unwrap(), Z::zero());
        assert_eq!(
            vector_product(&u(Unit::I), &u(Unit::H)).unwrap(),
            Z::from_ints(0, -1, -1, 0)
        );
        let v = Z::from_ints(0, 2, -5, 7);
        assert_eq!(vector_product(&Z::one(), &v).unwrap(), -v);
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(hybrid_to_matrix(&Z::one()), Mat2::identity());
        assert_eq!(
            hybrid_to_matrix(&u(Unit::I)),
            Mat2::new(0.into(), 1.into(), (-1).into(), 0.into())
        );
        let eps = hybrid_to_matrix(&u(Unit::E));
        assert_eq!(eps, Mat2::new(1.into(), (-1).into(), 1.into(), (-1).into()));
        assert_eq!(
            &eps * &eps,
            Mat2::new(0.into(), 0.into(), 0.into(), 0.into())
        );
    }

    #[test]
    fn polynomial_coefficients() {
        let x = Poly::<Int>::x();
        let p = Hybrid::new(x.clone(), Poly::one(), Poly::zero(), Poly::zero());
        let q = Hybrid::new(Poly::zero(), Poly::zero(), Poly::zero(), x.clone());
        // (x + i)(x h) = x^2 h + x (e + i)
        let expected = Hybrid::new(Poly::zero(), x.clone(), x.clone(), &x * &x);
        assert_eq!(hybrid_mul(&p, &q), expected);
    }

    #[test]
    fn render() {
        assert_eq!((u(Unit::I) * u(Unit::H)).render(), "e+i");
        assert_eq!(Z::from_ints(1, 2, 3, 4).render(), "1+3e+2i+4h");
        assert_eq!(Z::from_ints(0, 0, 0, -1).render(), "-h");
        assert_eq!(Z::zero().render(), "0");
        let r = Hybrid::new(Rat::from_int(0), rat(1, 2), rat(-1, 1), Rat::from_int(0));
        assert_eq!(r.render(), "-e+1/2i");
    }
}
