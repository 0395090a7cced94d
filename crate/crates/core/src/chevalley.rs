//! Matrix models of SL_{n+1} and Sp_{2n}: Chevalley generators, exponentials,
//! Weyl lifts, the products Omega and the A(x) parametrization.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Poly, VarOrder};
use crate::poset::{Partition, TypeTag};

pub type IntMatrix = Vec<Vec<i64>>;

fn identity(m: usize) -> IntMatrix {
    (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect()
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let m = a.len();
    (0..m).map(|i| (0..m).map(|j| (0..m).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Size of the defining representation.
pub fn matrix_size(type_tag: TypeTag, n: usize) -> usize {
    match type_tag {
        TypeTag::A => n + 1,
        TypeTag::C => 2 * n,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWord {
    pub type_tag: TypeTag,
    pub n: usize,
    pub letters: Vec<usize>,
}

/// `(1, 2,1, 3,2,1, ...)` in type A and `(1, 2,1,2, 3,2,1,2,3, ...)` in type C.
pub fn reduced_word(type_tag: TypeTag, n: usize) -> ReducedWord {
    let mut letters = Vec::new();
    for m in 1..=n {
        letters.extend((1..=m).rev());
        if type_tag == TypeTag::C {
            letters.extend(2..=m);
        }
    }
    ReducedWord { type_tag, n, letters }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(())
}

/// Set 1-based entry `(r, c)`.
fn put(m: &mut IntMatrix, r: usize, c: usize, v: i64) {
    m[r - 1][c - 1] = v;
}

pub fn chevalley_f(type_tag: TypeTag, n: usize, i: usize) -> Result<IntMatrix> {
    check_index(n, i)?;
    let s = matrix_size(type_tag, n);
    let mut m = vec![vec![0; s]; s];
    match type_tag {
        TypeTag::A => put(&mut m, i + 1, i, 1),
        TypeTag::C if i == 1 => put(&mut m, n + 1, n, 1),
        TypeTag::C => {
            put(&mut m, n - i + 2, n - i + 1, 1);
            put(&mut m, n + i, n + i - 1, 1);
        }
    }
    Ok(m)
}

pub fn chevalley_e(type_tag: TypeTag, n: usize, i: usize) -> Result<IntMatrix> {
    let f = chevalley_f(type_tag, n, i)?;
    let s = f.len();
    Ok((0..s).map(|r| (0..s).map(|c| f[c][r]).collect()).collect())
}

/// `exp(c * x)` for a nilpotent integer matrix, with integrality asserted.
fn exp_int(x: &IntMatrix, c: i64) -> IntMatrix {
    let s = x.len();
    let mut out = identity(s);
    let mut pow = identity(s);
    let mut fact = 1i64;
    for k in 1..=s as i64 {
        pow = int_mul(&pow, x);
        if pow.iter().all(|r| r.iter().all(|&v| v == 0)) {
            break;
        }
        fact *= k;
        let ck = c.pow(k as u32);
        for (o, p) in out.iter_mut().flatten().zip(pow.iter().flatten()) {
            assert_eq!(p * ck % fact, 0, "non-integral exponential");
            *o += p * ck / fact;
        }
    }
    out
}

/// `exp(f_i) exp(-e_i) exp(f_i)`.
pub fn sbar(type_tag: TypeTag, n: usize, i: usize) -> Result<IntMatrix> {
    let f = chevalley_f(type_tag, n, i)?;
    let e = chevalley_e(type_tag, n, i)?;
    let ef = exp_int(&f, 1);
    Ok(int_mul(&int_mul(&ef, &exp_int(&e, -1)), &ef))
}

/// `E_{i+1,i} - E_{i,i+1} + sum_{j != i,i+1} E_{jj}` in SL_{n+1}.
pub fn sbar_closed_form_a(n: usize, i: usize) -> Result<IntMatrix> {
    check_index(n, i)?;
    let mut m = identity(n + 1);
    put(&mut m, i, i, 0);
    put(&mut m, i + 1, i + 1, 0);
    put(&mut m, i + 1, i, 1);
    put(&mut m, i, i + 1, -1);
    Ok(m)
}

/// Square matrix of polynomials sharing a variable count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    pub nvars: usize,
    pub entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn identity(size: usize, nvars: usize) -> Self {
        Self::from_int(&identity(size), nvars)
    }

    pub fn from_int(m: &IntMatrix, nvars: usize) -> Self {
        PolyMatrix {
            nvars,
            entries: m.iter().map(|r| r.iter().map(|&v| Poly::constant(nvars, v)).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// 1-based entry access.
    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r - 1][c - 1]
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        let s = self.size();
        let entries = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        let mut acc = Poly::zero(self.nvars);
                        for k in 0..s {
                            let (a, b) = (&self.entries[i][k], &o.entries[k][j]);
                            if !a.is_zero() && !b.is_zero() {
                                acc = &acc + &(a * b);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { nvars: self.nvars, entries }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let s = self.size();
        PolyMatrix {
            nvars: self.nvars,
            entries: (0..s).map(|i| (0..s).map(|j| self.entries[j][i].clone()).collect()).collect(),
        }
    }

    /// Determinant of the submatrix on 0-based `rows` x `cols` by Laplace expansion.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Poly::one(self.nvars);
        }
        if rows.len() == 1 {
            return self.entries[rows[0]][cols[0]].clone();
        }
        let mut acc = Poly::zero(self.nvars);
        let rest = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let a = &self.entries[rows[0]][c];
            if a.is_zero() {
                continue;
            }
            let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.minor(rest, &sub);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    pub fn det(&self) -> Poly {
        let all: Vec<usize> = (0..self.size()).collect();
        self.minor(&all, &all)
    }

    pub fn compose(&self, subs: &[Poly]) -> PolyMatrix {
        let nvars = subs.first().map_or(0, |s| s.nvars());
        PolyMatrix {
            nvars,
            entries: self.entries.iter().map(|r| r.iter().map(|p| p.compose(subs)).collect()).collect(),
        }
    }

    pub fn to_text(&self, prefix: &str) -> String {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|p| p.to_text(prefix)).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" | "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

/// `I + t f_i + t^2 f_i^2 / 2 + ...` with `t` the variable of 0-based index `var`.
pub fn exp_f(type_tag: TypeTag, n: usize, i: usize, var: usize, nvars: usize) -> Result<PolyMatrix> {
    let f = chevalley_f(type_tag, n, i)?;
    let s = f.len();
    let t = Poly::var(nvars, var);
    let mut out = PolyMatrix::identity(s, nvars);
    let mut pow = identity(s);
    let mut fact = BigInt::one();
    for k in 1..=s {
        pow = int_mul(&pow, &f);
        if pow.iter().flatten().all(|&v| v == 0) {
            break;
        }
        fact *= BigInt::from(k);
        let tk = t.pow(k as u32);
        for r in 0..s {
            for c in 0..s {
                let v = BigInt::from(pow[r][c]);
                if v.is_zero() {
                    continue;
                }
                let term = tk.scale(&v).div_exact(&fact).expect("integral exponential");
                out.entries[r][c] = &out.entries[r][c] + &term;
            }
        }
    }
    Ok(out)
}

/// `Omega(t) = prod_k ubar_k exp(t_k f_{i_k})`, `ubar_k = sbar_{i_k}` on chain positions.
pub fn omega_product(type_tag: TypeTag, n: usize, part: &Partition) -> Result<PolyMatrix> {
    let word = reduced_word(type_tag, n);
    let nv = word.letters.len();
    part.check_len(nv)?;
    let mut m = PolyMatrix::identity(matrix_size(type_tag, n), nv);
    for (k, &i) in word.letters.iter().enumerate() {
        if part.is_chain(k) {
            m = m.mul(&PolyMatrix::from_int(&sbar(type_tag, n, i)?, nv));
        }
        m = m.mul(&exp_f(type_tag, n, i, k, nv)?);
    }
    Ok(m)
}

/// Antidiagonal form with `W[i][2n+1-i] = (-1)^i`.
pub fn w0_form(n: usize) -> IntMatrix {
    let s = 2 * n;
    let mut w = vec![vec![0; s]; s];
    for i in 1..=s {
        put(&mut w, i, s + 1 - i, if i % 2 == 0 { 1 } else { -1 });
    }
    w
}

/// Whether `M^T W M = W` holds identically.
pub fn check_symplectic(m: &PolyMatrix, n: usize) -> Result<bool> {
    if m.size() != 2 * n {
        return Err(Error::DimMismatch(m.size(), 2 * n));
    }
    let w = PolyMatrix::from_int(&w0_form(n), m.nvars);
    Ok(m.transpose().mul(&w).mul(m) == w)
}

/// 0-based index of `x_{i,j}` in the arrangement `(x_{1,2n-1}, ..., x_{1,1}, x_{2,2n-2}, ..., x_{n,n})`.
pub fn x_index(n: usize, i: usize, j: usize) -> usize {
    let offset: usize = (1..i).map(|r| 2 * n - 2 * r + 1).sum();
    offset + (2 * n - i - j)
}

/// The matrix `A(x)`: free upper-left entries, signed antidiagonal, zeros below it,
/// and the remaining entries solved from the symplectic condition.
pub fn a_of_x(n: usize) -> PolyMatrix {
    let s = 2 * n;
    let nv = n * n;
    let mut a: Vec<Vec<Poly>> = vec![vec![Poly::zero(nv); s]; s];
    for i in 1..=s {
        for j in 1..=s {
            if i + j == s + 1 {
                a[i - 1][j - 1] = Poly::constant(nv, if i % 2 == 0 { 1 } else { -1 });
            } else if i + j <= s && i <= j {
                a[i - 1][j - 1] = Poly::var(nv, x_index(n, i, j));
            }
        }
    }
    for j in (1..n).rev() {
        for i in (j + 1..=s - j).rev() {
            let mut y = Poly::zero(nv);
            for r in i + 1..=s + 1 - j {
                let term = &a[r - 1][j - 1] * &a[s - r][i - 1];
                y = if r % 2 == 0 { &y + &term } else { &y - &term };
            }
            a[i - 1][j - 1] = y;
        }
    }
    PolyMatrix { nvars: nv, entries: a }
}

/// The ordering `(t'_1, ..., t'_N)` as 1-based t-indices.
pub fn primed_variables(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for m in (1..=n).rev() {
        let (lo, sq) = ((m - 1) * (m - 1) + 1, m * m);
        out.extend((sq + 2 - m..=sq).rev());
        out.extend((lo..=sq - m).rev());
        out.push(sq + 1 - m);
    }
    out
}

/// The order `t'_1 > t'_2 > ... > t'_N`.
pub fn primed_order(n: usize) -> VarOrder {
    VarOrder::from_one_based(&primed_variables(n)).expect("primed variables form a permutation")
}

/// `x_l` as polynomials in `t`, via the primed variables.
pub fn transition_x_of_t(n: usize) -> Vec<Poly> {
    let nv = n * n;
    let tp = primed_variables(n);
    let t = |l: usize| Poly::var(nv, tp[l - 1] - 1);
    let sign = |e: usize| if e.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    (1..=nv)
        .map(|l| {
            let k = (0..n).find(|k| nv - l == k * k);
            match k {
                Some(k) => {
                    let mut acc = t(l);
                    for c in 1..=k {
                        let term = &t(l - k + c - 1) * &t(l - k - c);
                        acc = &acc + &term.scale(&sign(c - 1));
                    }
                    acc.scale(&sign(n))
                }
                None => t(l).scale(&sign(l)),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, "t").unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(reduced_word(TypeTag::A, 3).letters, [1, 2, 1, 3, 2, 1]);
        assert_eq!(reduced_word(TypeTag::C, 3).letters, [1, 2, 1, 2, 3, 2, 1, 2, 3]);
    }

    #[test]
    fn generators() {
        let f = chevalley_f(TypeTag::C, 2, 2).unwrap();
        assert_eq!(f, vec![vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 1, 0]]);
        let f1 = chevalley_f(TypeTag::C, 2, 1).unwrap();
        assert_eq!(f1[2][1], 1);
        assert_eq!(chevalley_f(TypeTag::A, 2, 1).unwrap()[1][0], 1);
        assert!(chevalley_f(TypeTag::A, 2, 3).is_err());
        let e = exp_f(TypeTag::C, 2, 2, 0, 1).unwrap();
        assert_eq!(e.at(2, 1), &p("t1", 1));
        assert_eq!(e.at(4, 3), &p("t1", 1));
        assert!(e.at(4, 1).is_zero());
    }

    #[test]
    fn lifts() {
        let s = sbar(TypeTag::A, 3, 2).unwrap();
        assert_eq!(s, sbar_closed_form_a(3, 2).unwrap());
        assert_eq!((s[2][1], s[1][2], s[0][0], s[3][3]), (1, -1, 1, 1));
        let s4 = int_mul(&int_mul(&s, &s), &int_mul(&s, &s));
        assert_eq!(s4, identity(4));
    }

    #[test]
    fn sl4_mixed_partition_matrix() {
        let part = Partition::from_chain_positions(6, &[5, 6]).unwrap();
        let m = omega_product(TypeTag::A, 3, &part).unwrap();
        assert_eq!(m.at(1, 1), &p("-t6", 6));
        assert_eq!(m.at(1, 2), &p("-1", 6));
        assert_eq!(m.at(2, 1), &p("-t5 - t1*t6 - t3*t6", 6));
        assert_eq!(m.at(3, 1), &p("1 - t2*t5 - t2*t3*t6", 6));
        assert_eq!(m.at(3, 2), &p("-t2*t3", 6));
        assert_eq!(m.at(4, 1), &p("t4", 6));
        assert_eq!(m.det(), Poly::one(6));
    }

    #[test]
    fn sp6_full_chain_matrix() {
        let m = omega_product(TypeTag::C, 3, &Partition::all_chain(9)).unwrap();
        assert_eq!(m.at(1, 1), &p("-t7 - t6*t8 + t5*t9", 9));
        assert_eq!(m.at(2, 1), &p("t5 + t4*t6 - t2*t8 - t3*t9 - t2*t4*t9", 9));
        assert_eq!(m.at(3, 1), &p("-t6 - t1*t8 - t2*t9 - t1*t4*t9", 9));
        assert_eq!(m.at(4, 1), &p("t8 + t4*t9", 9));
        assert_eq!(m.at(5, 1), &p("-t9", 9));
        assert_eq!(m.at(4, 2), &p("t4", 9));
        assert_eq!(m.at(1, 6), &p("-1", 9));
        assert!(check_symplectic(&m, 3).unwrap());
    }

    #[test]
    fn a_of_x_entries() {
        let a = a_of_x(3);
        let x = |i: usize, j: usize| format!("t{}", x_index(3, i, j) + 1);
        let q = |s: String| Poly::parse(&s, 9, "t").unwrap();
        assert_eq!(a.at(5, 1), &q(x(1, 5)));
        assert_eq!(a.at(4, 2), &q(x(2, 4)));
        assert_eq!(a.at(4, 1), &q(format!("{} - {}*{}", x(1, 4), x(1, 5), x(2, 4))));
        assert_eq!(a.at(3, 2), &q(format!("{} + {}*{}", x(2, 3), x(2, 4), x(3, 3))));
        assert_eq!(
            a.at(2, 1),
            &q(format!("{} - {}*{} + {}*{} - {}*{}", x(1, 2), x(1, 5), x(2, 2), x(1, 4), x(2, 3), x(1, 3), x(2, 4)))
        );
        assert!(check_symplectic(&a, 3).unwrap());
        let zero = a.compose(&vec![Poly::zero(1); 9]);
        assert_eq!(zero, PolyMatrix::from_int(&w0_form(3), 1));
    }

    #[test]
    fn transition_reproduces_full_chain() {
        assert_eq!(primed_variables(2), [4, 2, 3, 1]);
        assert_eq!(primed_variables(3), [9, 8, 6, 5, 7, 4, 2, 3, 1]);
        for n in 2..=3 {
            let lhs = a_of_x(n).compose(&transition_x_of_t(n));
            let rhs = omega_product(TypeTag::C, n, &Partition::all_chain(n * n)).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn symplectic_checks() {
        assert!(check_symplectic(&PolyMatrix::identity(4, 1), 2).unwrap());
        let mut d = identity(4);
        d[0][0] = 2;
        assert!(!check_symplectic(&PolyMatrix::from_int(&d, 1), 2).unwrap());
        assert!(check_symplectic(&PolyMatrix::identity(4, 1), 3).is_err());
    }
}
