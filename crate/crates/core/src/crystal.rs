//! Minuscule crystals B(w_k) of SL_{n+1} as strictly increasing columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ValuationVector;
use crate::poset::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Column {
    n: usize,
    entries: Vec<usize>,
}

impl Column {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        let ok = entries.windows(2).all(|w| w[0] < w[1]) && entries.iter().all(|&j| j >= 1 && j <= n + 1);
        if !ok || entries.len() > n + 1 {
            return Err(Error::NotInCrystal(format!("{entries:?} for rank {n}")));
        }
        Ok(Column { n, entries })
    }

    /// `b_{w_k} = (1, ..., k)`.
    pub fn highest(n: usize, k: usize) -> Self {
        Column { n, entries: (1..=k).collect() }
    }

    /// All of B(w_k) in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<Column> {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Column>) {
            if cur.len() == k {
                out.push(Column { n, entries: cur.clone() });
                return;
            }
            for j in start..=n + 1 {
                cur.push(j);
                rec(j + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, k, &mut Vec::new(), &mut out);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry with sentinels `j_0 = 0` and `j_{k+1} = n + 2`.
    pub fn entry(&self, q: usize) -> usize {
        match q {
            0 => 0,
            q if q > self.entries.len() => self.n + 2,
            q => self.entries[q - 1],
        }
    }

    fn replace(&self, from: usize, to: usize) -> Option<Column> {
        if !self.entries.contains(&from) || self.entries.contains(&to) {
            return None;
        }
        let mut entries: Vec<usize> = self.entries.iter().map(|&j| if j == from { to } else { j }).collect();
        entries.sort_unstable();
        Some(Column { n: self.n, entries })
    }

    pub fn ftilde(&self, i: usize) -> Option<Column> {
        self.replace(i, i + 1)
    }

    pub fn etilde(&self, i: usize) -> Option<Column> {
        self.replace(i + 1, i)
    }

    pub fn epsilon(&self, i: usize) -> i64 {
        i64::from(self.etilde(i).is_some())
    }

    pub fn phi(&self, i: usize) -> i64 {
        i64::from(self.ftilde(i).is_some())
    }

    /// `<wt(b), h_i>` for `i = 1..n`.
    pub fn weight(&self) -> Vec<i64> {
        (1..=self.n).map(|i| self.phi(i) - self.epsilon(i)).collect()
    }

    /// Action of the simple reflection `s_i`.
    pub fn weyl(&self, i: usize) -> Column {
        let mut entries: Vec<usize> = self
            .entries
            .iter()
            .map(|&j| match j {
                j if j == i => i + 1,
                j if j == i + 1 => i,
                j => j,
            })
            .collect();
        entries.sort_unstable();
        Column { n: self.n, entries }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|j| j.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Simple reflection on a weight given in fundamental-weight coordinates.
pub fn reflect_weight(w: &[i64], i: usize) -> Vec<i64> {
    let n = w.len();
    let c = w[i - 1];
    (1..=n)
        .map(|j| match j {
            j if j == i => w[j - 1] - 2 * c,
            j if j + 1 == i || j == i + 1 => w[j - 1] + c,
            _ => w[j - 1],
        })
        .collect()
}

/// Output of the block-by-block computation of the valuation of a minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombValuation {
    pub values: ValuationVector,
    /// `gamma_m` for `m = n-k+1..n`.
    pub gammas: Vec<usize>,
    /// Value at the exceptional position `N_{m-1} + m - gamma_m + 1`, when it lies in block `m`.
    pub exceptions: Vec<Option<i64>>,
    /// Whether the first `m-(n-k)` entries equalled `1..m-(n-k)` after every block.
    pub shape_ok: bool,
}

fn tri(m: usize) -> usize {
    m * (m + 1) / 2
}

/// The combinatorial valuation of the dual canonical basis element indexed by `b`
/// under the lowest-term valuation attached to `part` (type A, ambient order).
pub fn comb_valuation(n: usize, k: usize, b: &Column, part: &Partition) -> Result<CombValuation> {
    if b.rank() != n || b.len() != k || k == 0 || k > n {
        return Err(Error::NotInCrystal(format!("{b} in B(w_{k}) of rank {n}")));
    }
    let nn = tri(n);
    part.check_len(nn)?;
    let letter = |pos: usize| {
        // 1-based global position -> letter of the reduced word
        let m = (1..=n).find(|&m| pos <= tri(m)).unwrap();
        m + 1 - (pos - tri(m - 1))
    };
    let mut a = vec![0i64; nn];
    let mut cur = b.clone();
    let step = |cur: &Column, pos: usize, ahat: i64| -> Result<Column> {
        let i = letter(pos);
        let mut c = if part.is_chain(pos - 1) { cur.weyl(i) } else { cur.clone() };
        for _ in 0..ahat {
            c = c.etilde(i).ok_or_else(|| Error::Internal(format!("e_{i} vanishes on {c}")))?;
        }
        Ok(c)
    };
    for pos in 1..=tri(n - k) {
        cur = step(&cur, pos, 0)?;
    }
    let mut gammas = Vec::new();
    let mut exceptions = Vec::new();
    let mut shape_ok = true;
    for m in n - k + 1..=n {
        let r = m - (n - k);
        let gamma = cur.entry(r);
        gammas.push(gamma);
        let exc = (m + 1).checked_sub(gamma).filter(|&l| l >= 1 && l <= m);
        let mut exc_val = None;
        for l in 1..=m {
            let pos = tri(m - 1) + l;
            let v = if part.is_chain(pos - 1) {
                if Some(l) == exc {
                    i64::from(cur.entry(r + 1) != gamma + 1)
                } else {
                    0
                }
            } else if l + gamma <= m + 1 || l >= n - k + 2 {
                0
            } else {
                1
            };
            if Some(l) == exc {
                exc_val = Some(v);
            }
            a[pos - 1] = v;
            cur = step(&cur, pos, v)?;
        }
        exceptions.push(exc_val);
        shape_ok &= (1..=r).all(|q| cur.entry(q) == q);
    }
    if cur != Column::highest(n, k) {
        return Err(Error::Internal(format!("valuation walk of {b} ended at {cur}")));
    }
    Ok(CombValuation { values: ValuationVector(a), gammas, exceptions, shape_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(n: usize, e: &[usize]) -> Column {
        Column::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn operators() {
        assert_eq!(col(3, &[1, 2]).ftilde(2), Some(col(3, &[1, 3])));
        assert_eq!(col(3, &[2, 3]).ftilde(3), Some(col(3, &[2, 4])));
        assert_eq!(col(3, &[2, 3]).ftilde(1), None);
        assert_eq!(col(3, &[2, 4]).ftilde(2), Some(col(3, &[3, 4])));
        assert_eq!(col(3, &[1, 3]).ftilde(3), Some(col(3, &[1, 4])));
        assert_eq!(col(3, &[2, 3]).etilde(1), Some(col(3, &[1, 3])));
        assert_eq!(col(2, &[3]).etilde(2), Some(col(2, &[2])));
        for i in 1..=3 {
            assert_eq!(Column::highest(3, 2).etilde(i), None);
        }
        assert_eq!(col(3, &[1, 3]).weyl(1), col(3, &[2, 3]));
        assert!(Column::new(2, vec![2, 1]).is_err());
        assert!(Column::new(2, vec![4]).is_err());
    }

    #[test]
    fn crystal_sizes() {
        assert_eq!(Column::all(3, 2).len(), 6);
        assert_eq!(Column::all(4, 2).len(), 10);
    }

    #[test]
    fn small_valuations() {
        let o = Partition::all_order(3);
        assert_eq!(comb_valuation(2, 1, &col(2, &[3]), &o).unwrap().values.0, [0, 1, 1]);
        assert_eq!(comb_valuation(2, 1, &col(2, &[2]), &o).unwrap().values.0, [0, 0, 1]);
        for k in 1..=3 {
            for part in Partition::all(6).filter(|p| !p.mask().contains('1')) {
                let v = comb_valuation(3, k, &Column::highest(3, k), &part).unwrap();
                assert!(v.values.0.iter().all(|&x| x == 0));
            }
        }
    }
}
