//! Finite-type Cartan data.
//!
//! Convention: `a[i][j] = <alpha_i^vee, alpha_j>`, so the `j`-th column of the
//! matrix holds the fundamental-weight coordinates of the simple root
//! `alpha_j`. Indices in this API are zero-based.
//!
//! Catalog orientation (Bourbaki numbering):
//!
//! | type | matrix | symmetrizer |
//! |------|--------|-------------|
//! | `B_n` | `a[n-1][n-2] = -2` (last root short) | `(2,..,2,1)` |
//! | `C_n` | `a[n-2][n-1] = -2` (last root long)  | `(1,..,1,2)` |
//! | `F_4` | `a[2][1] = -2` (roots 3,4 short)     | `(2,2,1,1)` |
//! | `G_2` | `[[2,-3],[-1,2]]` (root 1 short)     | `(1,3)` |

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weyl::Weight;

#[derive(Clone, Debug, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    inverse: Vec<Vec<BigRational>>,
    label: Option<String>,
}

impl PartialEq for CartanData {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.d == other.d
    }
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Rational inverse of the Cartan matrix.
    pub fn inverse(&self) -> &[Vec<BigRational>] {
        &self.inverse
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.d
    }

    pub fn symmetrizer(&self, i: usize) -> Result<i64> {
        self.d.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            rank: self.rank(),
        })
    }

    /// Catalog label such as `G2`, if the data came from [`builtin_cartan`].
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Symmetrized entry `d_i a_ij = (alpha_i, alpha_j)`.
    pub fn sym(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// Text format: `n` on the first line, then `n` rows of integers.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.rank());
        for row in &self.a {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| {
                let c: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", c.join(","))
            })
            .collect();
        let d: Vec<String> = self.d.iter().map(i64::to_string).collect();
        if let Some(l) = &self.label {
            write!(f, "{l} ")?;
        }
        write!(f, "[{}] d=({})", rows.join(","), d.join(","))
    }
}

/// Validate a Cartan matrix and compute its minimal symmetrizer.
pub fn validate_cartan(matrix: &[Vec<i64>]) -> Result<CartanData> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    for (i, row) in matrix.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if (i == j && x != 2) || (i != j && x > 0) {
                return Err(Error::BadDiagonal { row: i, col: j });
            }
        }
    }
    let d = symmetrizer(matrix)?;
    if let Some((i, &v)) = d.iter().enumerate().find(|(_, &v)| !(1..=3).contains(&v)) {
        return Err(Error::SymmetrizerOutOfRange { index: i, value: v });
    }
    for k in 1..=n {
        let minor = leading_minor(matrix, &d, k);
        if !minor.is_positive() {
            return Err(Error::NotFiniteType {
                order: k,
                value: minor.to_string(),
            });
        }
    }
    Ok(CartanData {
        a: matrix.to_vec(),
        d,
        inverse: invert(matrix),
        label: None,
    })
}

/// Minimal positive integer solution of `d_i a_ij = d_j a_ji`, component by
/// component of the Dynkin graph.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        let mut component = vec![root];
        d[root] = Some(BigRational::one());
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j {
                    continue;
                }
                match (a[i][j], a[j][i]) {
                    (0, 0) => continue,
                    (0, _) | (_, 0) => return Err(Error::NotSymmetrizable),
                    (aij, aji) => {
                        let dj = d[i].clone().unwrap() * BigRational::new(aij.into(), aji.into());
                        match &d[j] {
                            Some(existing) if *existing != dj => {
                                return Err(Error::NotSymmetrizable)
                            }
                            Some(_) => {}
                            None => {
                                d[j] = Some(dj);
                                component.push(j);
                                stack.push(j);
                            }
                        }
                    }
                }
            }
        }
        let lcm = component
            .iter()
            .fold(BigInt::one(), |l, &k| l.lcm(d[k].as_ref().unwrap().denom()));
        let scaled: Vec<BigInt> = component
            .iter()
            .map(|&k| (d[k].clone().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for (&k, x) in component.iter().zip(scaled) {
            d[k] = Some(BigRational::from_integer(x / &g));
        }
    }
    d.into_iter()
        .map(|x| {
            let x = x.unwrap().to_integer();
            i64::try_from(x).map_err(|_| Error::NotSymmetrizable)
        })
        .collect()
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    let x = if j < n {
                        a[i][j]
                    } else {
                        i64::from(j - n == i)
                    };
                    BigRational::from_integer(x.into())
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("finite-type Cartan matrix is invertible");
        m.swap(p, col);
        let pivot = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Determinant of the leading `k x k` block of `(d_i a_ij)`.
fn leading_minor(a: &[Vec<i64>], d: &[i64], k: usize) -> BigRational {
    let mut m: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| BigRational::from_integer((d[i] * a[i][j]).into()))
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..k {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// The standard finite-type Cartan matrix for `family` (`A`..`G`) and `rank`.
pub fn builtin_cartan(family: char, rank: usize) -> Result<CartanData> {
    let unknown = || Error::UnknownType(format!("{family}{rank}"));
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family.to_ascii_uppercase() {
        'A' if n >= 1 => {
            for i in 0..n.saturating_sub(1) {
                link(&mut a, i, i + 1);
            }
        }
        'B' if n >= 2 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2;
        }
        'C' if n >= 2 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
        }
        'D' if n >= 4 => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        'E' if (6..=8).contains(&n) => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        'F' if n == 4 => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
        'G' if n == 2 => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(unknown()),
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut c = validate_cartan(&a)?;
    c.label = Some(format!("{}{}", family.to_ascii_uppercase(), n));
    Ok(c)
}

/// Parse a label such as `A2`, `g2` or `E8`.
pub fn parse_type_label(label: &str) -> Result<CartanData> {
    let label = label.trim();
    let mut chars = label.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::UnknownType(label.to_string()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::UnknownType(label.to_string()))?;
    builtin_cartan(family, rank)
}

/// Parse the text format: `n`, then `n` lines of `n` integers.
pub fn parse_matrix_text(text: &str) -> Result<CartanData> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Cartan matrix file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the rank".into()))?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries",
                r + 1,
                row.len()
            )));
        }
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after matrix".into()));
    }
    validate_cartan(&rows)
}

/// `alpha_j` in fundamental-weight coordinates (column `j` of the matrix).
pub fn simple_root(c: &CartanData, j: usize) -> Result<Weight> {
    c.check_index(j)?;
    Ok(Weight::new((0..c.rank()).map(|i| c.a[i][j]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_identity_case() {
        let c = validate_cartan(&[vec![2]]).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.symmetrizers(), &[1]);
    }

    #[test]
    fn b2_symmetrizer() {
        let c = validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap();
        assert_eq!(c.symmetrizers(), &[2, 1]);
    }

    #[test]
    fn affine_rejected() {
        assert!(matches!(
            validate_cartan(&[vec![2, -2], vec![-2, 2]]),
            Err(Error::NotFiniteType { order: 2, .. })
        ));
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            validate_cartan(&[vec![3]]),
            Err(Error::BadDiagonal { .. })
        ));
        assert!(matches!(
            validate_cartan(&[vec![2, 1], vec![-1, 2]]),
            Err(Error::BadDiagonal { .. })
        ));
        assert_eq!(
            validate_cartan(&[vec![2, -1], vec![0, 2]]),
            Err(Error::NotSymmetrizable)
        );
        // cycle with inconsistent ratios
        let cyc = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(validate_cartan(&cyc), Err(Error::NotSymmetrizable));
        // 1x4 ratio
        assert!(matches!(
            validate_cartan(&[vec![2, -1], vec![-4, 2]]),
            Err(Error::SymmetrizerOutOfRange { .. }) | Err(Error::NotFiniteType { .. })
        ));
        assert_eq!(validate_cartan(&[]), Err(Error::NotSquare));
    }

    #[test]
    fn decomposable_accepted() {
        let c = validate_cartan(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(c.symmetrizers(), &[1, 1]);
        // A1 x B2 with independent symmetrizer scaling
        let m = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -2, 2]];
        assert_eq!(validate_cartan(&m).unwrap().symmetrizers(), &[1, 2, 1]);
    }

    #[test]
    fn catalog_entries() {
        assert_eq!(builtin_cartan('A', 1).unwrap().matrix(), &[vec![2]]);
        let a2 = builtin_cartan('A', 2).unwrap();
        assert_eq!(a2.matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.symmetrizers(), &[1, 1]);
        let g2 = builtin_cartan('G', 2).unwrap();
        assert_eq!(g2.matrix(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.symmetrizers(), &[1, 3]);
        assert_eq!(builtin_cartan('C', 2).unwrap().symmetrizers(), &[1, 2]);
        assert_eq!(builtin_cartan('B', 3).unwrap().symmetrizers(), &[2, 2, 1]);
        assert_eq!(
            builtin_cartan('F', 4).unwrap().symmetrizers(),
            &[2, 2, 1, 1]
        );
        assert!(matches!(builtin_cartan('H', 3), Err(Error::UnknownType(_))));
        assert!(matches!(builtin_cartan('G', 3), Err(Error::UnknownType(_))));
        assert!(matches!(builtin_cartan('D', 3), Err(Error::UnknownType(_))));
    }

    #[test]
    fn catalog_round_trips_through_validation() {
        let entries = [
            ('A', 1..=6),
            ('B', 2..=6),
            ('C', 2..=6),
            ('D', 4..=7),
            ('E', 6..=8),
            ('F', 4..=4),
            ('G', 2..=2),
        ];
        for (fam, ranks) in entries {
            for r in ranks {
                let c = builtin_cartan(fam, r).unwrap();
                assert_eq!(validate_cartan(c.matrix()).unwrap(), c, "{fam}{r}");
                for i in 0..r {
                    for j in 0..r {
                        assert_eq!(simple_root(&c, j).unwrap().coord(i), c.entry(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn simple_roots() {
        let a1 = builtin_cartan('A', 1).unwrap();
        assert_eq!(simple_root(&a1, 0).unwrap(), Weight::new(vec![2]));
        let a2 = builtin_cartan('A', 2).unwrap();
        assert_eq!(simple_root(&a2, 0).unwrap(), Weight::new(vec![2, -1]));
        let b2 = validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap();
        assert_eq!(simple_root(&b2, 1).unwrap(), Weight::new(vec![-1, 2]));
        assert!(matches!(
            simple_root(&a2, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn text_format() {
        let c = parse_matrix_text("2\n2 -1\n-3 2\n").unwrap();
        assert_eq!(c.symmetrizers(), &[3, 1]);
        assert_eq!(parse_matrix_text(&c.to_text()).unwrap(), c);
        assert!(parse_matrix_text("2\n2 -1\n").is_err());
        assert!(parse_type_label("X9").is_err());
        assert_eq!(parse_type_label("g2").unwrap().label(), Some("G2"));
    }
}
