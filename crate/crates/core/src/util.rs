use num::bigint::BigInt;
use num::{Integer, One, ToPrimitive};

use crate::geometry::Coord;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n], components: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

/// Maps a family of rationals onto integers by a common denominator, so hot
/// loops can run on machine integers while staying exact.
#[derive(Clone, Debug)]
pub(crate) struct IntegerScale {
    denom: BigInt,
}

impl IntegerScale {
    pub(crate) fn for_values<'a>(values: impl IntoIterator<Item = &'a Coord>) -> Self {
        let mut denom = BigInt::one();
        for v in values {
            if !v.is_integer() {
                denom = denom.lcm(v.denom());
            }
        }
        IntegerScale { denom }
    }

    pub(crate) fn scale_big(&self, v: &Coord) -> BigInt {
        v.numer() * (&self.denom / v.denom())
    }

    /// `None` when the scaled value leaves the comfortable i128 range.
    pub(crate) fn scale_i128(&self, v: &Coord) -> Option<i128> {
        let s = self.scale_big(v).to_i128()?;
        (s.unsigned_abs() < (1u128 << 100)).then_some(s)
    }
}
