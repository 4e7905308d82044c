//! Finite groups as validated Cayley tables, and the catalog of concrete groups.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::carrier::{Carrier, ElemSet};
use crate::perm;
use crate::verdict::{LawScan, Verdict};
use crate::witness;

/// Largest `n` accepted by [`GroupSpec::Symmetric`] (720 elements).
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no element e with e*x = x*e = x for every x")]
    NoIdentity,
    #[error("element {0} has no left inverse")]
    NoInverse(usize),
    #[error("not associative: {0}*({1}*{2}) != ({0}*{1})*{2}")]
    NonAssociative(usize, usize, usize),
}

/// A finite group: carrier `0..size`, a unit, an inverse table and a
/// multiplication table satisfying the left-unit, left-inverse and
/// associativity axioms.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    size: usize,
    unit: usize,
    inv: Vec<usize>,
    table: Vec<usize>,
}

impl Group {
    /// Validates a row-major Cayley table (`table[i][j] = i*j`).
    ///
    /// The identity is located, inverses are derived, and associativity is
    /// scanned exhaustively; the first non-associative triple in
    /// lexicographic order is reported.
    pub fn from_cayley_table(n: usize, table: &[Vec<usize>]) -> Result<Group, TableError> {
        if n == 0 {
            return Err(TableError::MalformedTable(
                "a group needs at least one element".into(),
            ));
        }
        if table.len() != n {
            return Err(TableError::MalformedTable(format!(
                "expected {n} rows, found {}",
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(TableError::MalformedTable(format!(
                    "entry ({i},{j}) = {v} is out of range 0..{n}"
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::validate(n, flat)
    }

    /// Tabulates `mul` on `0..n` and validates the result.
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Group, TableError> {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| mul(i, j)).collect())
            .collect();
        Self::from_cayley_table(n, &rows)
    }

    fn validate(n: usize, table: Vec<usize>) -> Result<Group, TableError> {
        let at = |i: usize, j: usize| table[i * n + j];
        let unit = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(TableError::NoIdentity)?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(y, x) == unit)
                .ok_or(TableError::NoInverse(x))?;
            inv.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(a, at(b, c)) != at(ab, c) {
                        return Err(TableError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Group {
            size: n,
            unit,
            inv,
            table,
        })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn carrier(&self) -> Carrier {
        Carrier::new(self.size)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.size)
    }

    /// `{1}`
    pub fn trivial_set(&self) -> ElemSet {
        ElemSet::singleton(self.size, self.unit)
    }

    /// Product of a sequence, left to right; the empty product is the unit.
    pub fn product(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.unit, |acc, x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.size).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The table as rows, suitable for [`Group::from_cayley_table`].
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("size", &self.size)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

/// Description of a group in the builtin catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Integers mod `n` under addition.
    Cyclic(usize),
    /// Symmetries of the regular `n`-gon, order `2n`: `r^i` is element `i`
    /// and `s r^i` is element `n + i`.
    Dihedral(usize),
    /// Permutations of `0..n` in lexicographic rank order, multiplied as
    /// `p*q = p ∘ q` (apply `q` first).
    Symmetric(usize),
    Quaternion8,
    /// Direct product; `(a, b)` is element `a * |right| + b`.
    Product(Box<GroupSpec>, Box<GroupSpec>),
    CayleyFile(PathBuf),
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("unsupported group parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    File(#[from] crate::cayley::CayleyFileError),
}

impl GroupSpec {
    pub fn product(left: GroupSpec, right: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(left), Box::new(right))
    }

    pub fn build(&self) -> Result<Group, BuildError> {
        match self {
            GroupSpec::Cyclic(n) => {
                require_positive("cyclic", *n)?;
                let n = *n;
                Ok(Group::from_fn(n, |a, b| (a + b) % n)?)
            }
            GroupSpec::Dihedral(n) => {
                require_positive("dihedral", *n)?;
                Ok(dihedral(*n)?)
            }
            GroupSpec::Symmetric(n) => {
                require_positive("symmetric", *n)?;
                if *n > MAX_SYMMETRIC_DEGREE {
                    return Err(BuildError::Unsupported(format!(
                        "symmetric({n}) exceeds the maximum degree {MAX_SYMMETRIC_DEGREE}"
                    )));
                }
                Ok(symmetric(*n)?)
            }
            GroupSpec::Quaternion8 => Ok(quaternion8()?),
            GroupSpec::Product(a, b) => {
                let (ga, gb) = (a.build()?, b.build()?);
                Ok(direct_product(&ga, &gb)?)
            }
            GroupSpec::CayleyFile(path) => Ok(crate::cayley::read_cayley_file(path)?),
        }
    }

    /// The builtin catalog: cyclic groups of order up to 24, dihedral groups
    /// of degree up to 12, symmetric groups of degree up to 5, the
    /// quaternion group, and a selection of direct products of order at
    /// most 48.
    pub fn catalog() -> Vec<GroupSpec> {
        use GroupSpec::*;
        let c = |n| Cyclic(n);
        let mut out: Vec<GroupSpec> = (1..=24).map(Cyclic).collect();
        out.extend((1..=12).map(Dihedral));
        out.extend((1..=5).map(Symmetric));
        out.push(Quaternion8);
        let products = [
            (c(2), c(2)),
            (c(2), c(4)),
            (Self::product(c(2), c(2)), c(2)),
            (c(3), c(3)),
            (c(2), c(6)),
            (c(4), c(4)),
            (Symmetric(3), c(2)),
            (Symmetric(3), c(3)),
            (Dihedral(4), c(2)),
            (Quaternion8, c(2)),
            (Quaternion8, c(3)),
            (Dihedral(4), c(3)),
            (Symmetric(3), Symmetric(3)),
            (Symmetric(3), c(8)),
            (Symmetric(4), c(2)),
            (Quaternion8, c(6)),
        ];
        out.extend(products.into_iter().map(|(a, b)| Self::product(a, b)));
        out
    }

    /// Human-readable element labels, when the construction has a natural one.
    pub fn labels(&self) -> Option<Vec<String>> {
        match self {
            GroupSpec::Cyclic(n) => Some((0..*n).map(|i| i.to_string()).collect()),
            GroupSpec::Dihedral(n) => {
                let r = |i: usize| match i {
                    0 => String::new(),
                    1 => "r".to_owned(),
                    _ => format!("r^{i}"),
                };
                let mut out: Vec<String> = (0..*n)
                    .map(|i| if i == 0 { "e".to_owned() } else { r(i) })
                    .collect();
                out.extend((0..*n).map(|i| format!("s{}", r(i))));
                Some(out)
            }
            GroupSpec::Symmetric(n) if *n <= MAX_SYMMETRIC_DEGREE => Some(
                perm::lex_permutations(*n)
                    .iter()
                    .map(|p| perm::cycle_notation(p))
                    .collect(),
            ),
            GroupSpec::Quaternion8 => Some(
                ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
                    .map(str::to_owned)
                    .to_vec(),
            ),
            GroupSpec::Product(a, b) => {
                let (la, lb) = (a.labels()?, b.labels()?);
                Some(
                    la.iter()
                        .flat_map(|x| lb.iter().map(move |y| format!("({x},{y})")))
                        .collect(),
                )
            }
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Quaternion8 => f.write_str("q8"),
            GroupSpec::Product(a, b) => write!(f, "product:({a},{b})"),
            GroupSpec::CayleyFile(p) => write!(f, "{}", p.display()),
        }
    }
}

fn require_positive(kind: &str, n: usize) -> Result<(), BuildError> {
    if n == 0 {
        Err(BuildError::Unsupported(format!("{kind}(0)")))
    } else {
        Ok(())
    }
}

fn dihedral(n: usize) -> Result<Group, TableError> {
    // r^a s = s r^-a, so (s^u r^a)(s^v r^b) = s^(u+v) r^(±a + b).
    Group::from_fn(2 * n, |x, y| {
        let (xs, xa) = (x / n, x % n);
        let (ys, yb) = (y / n, y % n);
        let exp = if ys == 0 {
            (xa + yb) % n
        } else {
            (yb + n - xa) % n
        };
        ((xs + ys) % 2) * n + exp
    })
}

fn symmetric(n: usize) -> Result<Group, TableError> {
    let perms = perm::lex_permutations(n);
    Group::from_fn(perms.len(), |a, b| {
        perm::lex_rank(&perm::compose(&perms[a], &perms[b]))
    })
}

/// Elements `±1, ±i, ±j, ±k` as `2*unit + sign`, unit in `1, i, j, k`.
fn quaternion8() -> Result<Group, TableError> {
    // UNITS[u][v] = (sign, w) with u*v = (-1)^sign w.
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    Group::from_fn(8, |x, y| {
        let (s, w) = UNITS[x / 2][y / 2];
        2 * w + (s + x % 2 + y % 2) % 2
    })
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group, TableError> {
    let m = b.size();
    Group::from_fn(a.size() * m, |x, y| {
        a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
    })
}

/// Exhaustively checks the identities that follow from the group axioms:
/// right unit and right inverse, inverse of products, cancellation on both
/// sides, and the two shifting laws.
pub fn check_identities(g: &Group) -> Vec<Verdict> {
    let one = g.unit();
    let mut out = Vec::new();

    let mut scan = LawScan::new();
    for x in g.elements() {
        scan.case(g.mul(one, x) == x, || witness!("x" => x));
    }
    out.push(scan.finish("mul1g"));

    let mut scan = LawScan::new();
    for x in g.elements() {
        scan.case(g.mul(g.inv(x), x) == one, || witness!("x" => x));
    }
    out.push(scan.finish("mulVg"));

    let mut scan = LawScan::new();
    for x in g.elements() {
        scan.case(g.mul(x, one) == x, || witness!("x" => x));
    }
    out.push(scan.finish("mulg1"));

    out.push(Verdict::equal("invg1", g.inv(one), one));

    let mut scan = LawScan::new();
    for x in g.elements() {
        scan.case(g.mul(x, g.inv(x)) == one, || witness!("x" => x));
    }
    out.push(scan.finish("mulgV"));

    let mut scan = LawScan::new();
    for x in g.elements() {
        scan.case(g.inv(g.inv(x)) == x, || witness!("x" => x));
    }
    out.push(scan.finish("invg_inv"));

    let mut scan = LawScan::new();
    for x1 in g.elements() {
        for x2 in g.elements() {
            let lhs = g.inv(g.mul(x2, x1));
            let rhs = g.mul(g.inv(x1), g.inv(x2));
            scan.case(lhs == rhs, || witness!("x1" => x1, "x2" => x2));
        }
    }
    out.push(scan.finish("invg_mul"));

    // Cancellation: every row and every column of the table is a permutation.
    let mut rows = LawScan::new();
    let mut cols = LawScan::new();
    for x in g.elements() {
        let mut row_seen = ElemSet::empty(g.size());
        let mut col_seen = ElemSet::empty(g.size());
        let mut row_dup = None;
        let mut col_dup = None;
        for y in g.elements() {
            if !row_seen.insert(g.mul(x, y)) && row_dup.is_none() {
                row_dup = Some(y);
            }
            if !col_seen.insert(g.mul(y, x)) && col_dup.is_none() {
                col_dup = Some(y);
            }
        }
        rows.case(
            row_dup.is_none(),
            || witness!("x" => x, "y" => row_dup.unwrap_or(0)),
        );
        cols.case(
            col_dup.is_none(),
            || witness!("x" => x, "y" => col_dup.unwrap_or(0)),
        );
    }
    out.push(rows.finish("mulg_injl"));
    out.push(cols.finish("mulg_injr"));

    let mut s1 = LawScan::new();
    let mut s2 = LawScan::new();
    for a in g.elements() {
        for b in g.elements() {
            s1.case(
                g.mul(g.mul(b, g.inv(a)), a) == b,
                || witness!("a" => a, "b" => b),
            );
            s2.case(
                g.mul(g.mul(b, a), g.inv(a)) == b,
                || witness!("a" => a, "b" => b),
            );
        }
    }
    out.push(s1.finish("mulg_s1"));
    out.push(s2.finish("mulg_s2"));

    out
}
