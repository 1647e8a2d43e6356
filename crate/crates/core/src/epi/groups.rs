use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// Validates the group axioms over the whole table.
    pub fn new(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
        inverse: Vec<usize>,
    ) -> Result<Self> {
        let name = name.into();
        let order = table.len();
        let bad = |why: &str| Error::InvalidTable(name.clone(), why.to_string());
        if order == 0 {
            return Err(bad("empty"));
        }
        if table.iter().any(|row| row.len() != order || row.iter().any(|&x| x >= order)) {
            return Err(bad("table is not square over 0..order"));
        }
        if identity >= order || inverse.len() != order {
            return Err(bad("identity or inverse out of range"));
        }
        let g = FiniteGroupTable {
            order,
            table: table.into_iter().flatten().collect(),
            identity,
            inverse,
            name: name.clone(),
        };
        for x in 0..order {
            if g.mul(identity, x) != x || g.mul(x, identity) != x {
                return Err(bad("identity law fails"));
            }
            if g.inverse[x] >= order
                || g.mul(x, g.inverse[x]) != identity
                || g.mul(g.inverse[x], x) != identity
            {
                return Err(bad("inverse law fails"));
            }
        }
        for x in 0..order {
            for y in 0..order {
                let xy = g.mul(x, y);
                for z in 0..order {
                    if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Builds the table of the group generated by `gens` under `op`.
    fn closure<T: Ord + Clone>(
        name: impl Into<String>,
        identity: T,
        gens: &[T],
        op: impl Fn(&T, &T) -> T,
    ) -> Self {
        let mut index: BTreeMap<T, usize> = BTreeMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = op(&elems[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|x| elems.iter().map(|y| index[&op(x, y)]).collect())
            .collect();
        let inverse = (0..elems.len())
            .map(|x| table[x].iter().position(|&z| z == 0).expect("finite group"))
            .collect();
        FiniteGroupTable::new(name, table, 0, inverse).expect("closure of a group is a group")
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        let inverse = (0..n).map(|x| (n - x) % n).collect();
        FiniteGroupTable::new(format!("Z{n}"), table, 0, inverse).expect("cyclic group")
    }

    /// Symmetries of the regular `n`-gon, of order `2n`. Element `s*n + k`
    /// is the map `x -> (-1)^s x + k` of `Z_n`, so `0..n` are rotations and
    /// `n..2n` are reflections.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let decode = |e: usize| (e / n, e % n);
        let encode = |s: usize, k: usize| s * n + k % n;
        let mul = |x: usize, y: usize| {
            let ((s1, k1), (s2, k2)) = (decode(x), decode(y));
            let k2 = if s1 == 1 { (n - k2) % n } else { k2 };
            encode((s1 + s2) % 2, k1 + k2)
        };
        let table = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
        let inverse = (0..2 * n)
            .map(|x| {
                let (s, k) = decode(x);
                if s == 1 {
                    x
                } else {
                    encode(0, n - k)
                }
            })
            .collect();
        FiniteGroupTable::new(format!("D{}", 2 * n), table, 0, inverse).expect("dihedral group")
    }

    pub fn symmetric(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        let mut transposition = id.clone();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::closure(format!("S{n}"), id, &[transposition, cycle], |x, y| compose(x, y))
    }

    pub fn alternating4() -> Self {
        Self::closure(
            "A4",
            vec![0, 1, 2, 3],
            &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]],
            |x, y| compose(x, y),
        )
    }

    /// Unit quaternions `+-1, +-i, +-j, +-k` as 2x2 Gaussian-integer matrices.
    pub fn quaternion() -> Self {
        type M = [[(i64, i64); 2]; 2];
        let cmul = |a: (i64, i64), b: (i64, i64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let cadd = |a: (i64, i64), b: (i64, i64)| (a.0 + b.0, a.1 + b.1);
        let mmul = |x: &M, y: &M| -> M {
            let mut out = [[(0, 0); 2]; 2];
            for (i, row) in out.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = cadd(cmul(x[i][0], y[0][j]), cmul(x[i][1], y[1][j]));
                }
            }
            out
        };
        let one: M = [[(1, 0), (0, 0)], [(0, 0), (1, 0)]];
        let i: M = [[(0, 1), (0, 0)], [(0, 0), (0, -1)]];
        let j: M = [[(0, 0), (1, 0)], [(-1, 0), (0, 0)]];
        Self::closure("Q8", one, &[i, j], mmul)
    }

    /// The small groups used for homomorphism counting.
    pub fn builtins() -> Vec<FiniteGroupTable> {
        let mut out: Vec<_> = (2..=6).map(Self::cyclic).collect();
        out.extend((3..=6).map(Self::dihedral));
        out.push(Self::symmetric(3));
        out.push(Self::symmetric(4));
        out.push(Self::alternating4());
        out.push(Self::quaternion());
        out
    }
}

fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}
