use crate::field::Field;

/// A point `(x : y)` of the projective line, normalized to `y = 1` or to `(1 : 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P1Point<E> {
    x: E,
    y: E,
}

impl<E: Clone> P1Point<E> {
    pub fn affine<F: Field<Elem = E>>(f: &F, x: E) -> Self {
        P1Point { x, y: f.one() }
    }

    pub fn infinity<F: Field<Elem = E>>(f: &F) -> Self {
        P1Point { x: f.one(), y: f.zero() }
    }

    /// `None` for `(0 : 0)`.
    pub fn new<F: Field<Elem = E>>(f: &F, x: E, y: E) -> Option<Self> {
        if f.is_zero(&y) {
            if f.is_zero(&x) {
                None
            } else {
                Some(Self::infinity(f))
            }
        } else {
            Some(P1Point { x: f.div(&x, &y).unwrap(), y: f.one() })
        }
    }

    pub fn x(&self) -> &E {
        &self.x
    }

    pub fn y(&self) -> &E {
        &self.y
    }

    pub fn is_infinity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        f.is_zero(&self.y)
    }

    /// The affine coordinate, or `None` at infinity.
    pub fn value<F: Field<Elem = E>>(&self, f: &F) -> Option<&E> {
        (!self.is_infinity(f)).then_some(&self.x)
    }

    pub fn map<G: Clone>(&self, mut g: impl FnMut(&E) -> G) -> P1Point<G> {
        P1Point { x: g(&self.x), y: g(&self.y) }
    }
}
