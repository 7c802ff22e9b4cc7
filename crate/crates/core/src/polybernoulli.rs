//! Classical poly-Bernoulli numbers and polynomials, Bernoulli polynomials,
//! Kaneko's recurrence, the Stirling closed form for negative index, and
//! brute-force lonesum-matrix counting.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, binomial_row, factorial, stirling2};
use crate::poly::Poly;
use crate::scalar::{Field, Rat};

/// Largest `rows · cols` accepted by the lonesum enumerators.
pub const LONESUM_MAX_CELLS: u32 = 20;

/// `Σ_{m=0}^{n} (m+1)^{-k} Σ_{j=0}^{m} (-1)^j C(m,j) (x - shift(j))^n`.
///
/// The double sum is reorganized as `Σ_j w_j (x - shift(j))^n` with
/// `w_j = (-1)^j Σ_{m≥j} (m+1)^{-k} C(m,j)`, so each power of
/// `shift(j)` is formed once.
pub fn explicit_sum<T: Field>(n: u32, k: i64, shift: impl Fn(u64) -> T) -> Poly<T> {
    let n64 = n as u64;
    let weights: Vec<T> = (0..=n64)
        .map(|j| {
            let mut w = T::zero();
            for m in j..=n64 {
                w = w + T::from_i64(m as i64 + 1).pow_i(-k) * T::from_integer(&binomial(m, j as i64));
            }
            if j % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect();
    let row = binomial_row(n64);
    let mut coeffs = vec![T::zero(); n as usize + 1];
    for (j, w) in weights.iter().enumerate() {
        let neg = -shift(j as u64);
        let mut pow = w.clone();
        for i in (0..=n as usize).rev() {
            coeffs[i] = coeffs[i].clone() + pow.clone();
            pow = pow * neg.clone();
        }
    }
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = c.clone() * T::from_integer(&row[i]);
    }
    Poly::new(coeffs)
}

/// `B_n^{(k)}(x)`.
pub fn pb_poly<T: Field>(n: u32, k: i64) -> Poly<T> {
    explicit_sum(n, k, |j| T::from_i64(j as i64))
}

/// `B_n(x)` (with `B_1 = -1/2`).
pub fn bernoulli_poly<T: Field>(n: u32) -> Poly<T> {
    explicit_sum(n, 1, |j| -T::from_i64(j as i64))
}

/// Classical Bernoulli number `B_n`, the constant term of [`bernoulli_poly`].
pub fn bernoulli_number(n: u32) -> Rat {
    bernoulli_poly::<Rat>(n).coeff(0)
}

/// `B_0, ..., B_n` from `Σ_{j<m+1} C(m+1,j) B_j = 0`, cached process-wide.
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    with_bernoulli_table(n, |t| t[..=n].to_vec())
}

/// The single Bernoulli number `B_n`, from the same table as
/// [`bernoulli_numbers`].
pub fn bernoulli_at(n: usize) -> Rat {
    with_bernoulli_table(n, |t| t[n].clone())
}

fn with_bernoulli_table<O>(n: usize, read: impl FnOnce(&[Rat]) -> O) -> O {
    static CACHE: OnceLock<RwLock<Vec<Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(vec![Rat::from_integer(BigInt::from(1))]));
    {
        let table = cache.read().expect("bernoulli cache poisoned");
        if table.len() > n {
            return read(&table);
        }
    }
    let mut table = cache.write().expect("bernoulli cache poisoned");
    while table.len() <= n {
        let m = table.len() as u64;
        if m >= 3 && m % 2 == 1 {
            table.push(Rat::from_integer(BigInt::from(0)));
            continue;
        }
        let s: Rat = table
            .iter()
            .enumerate()
            .filter(|(j, _)| *j < 2 || j % 2 == 0)
            .map(|(j, b)| Rat::from_integer(binomial(m + 1, j as i64)) * b)
            .sum();
        table.push(-s / Rat::from_integer(BigInt::from(m + 1)));
    }
    read(&table)
}

type PbTable = RwLock<HashMap<(u32, i64), Rat>>;

fn pb_cache() -> &'static PbTable {
    static CACHE: OnceLock<PbTable> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn recurrence_cache() -> &'static PbTable {
    static CACHE: OnceLock<PbTable> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `B_n^{(k)} = B_n^{(k)}(0)`, memoized.
pub fn pb_number(n: u32, k: i64) -> Rat {
    if let Some(v) = pb_cache().read().expect("pb cache poisoned").get(&(n, k)) {
        return v.clone();
    }
    let v = pb_poly::<Rat>(n, k).coeff(0);
    pb_cache().write().expect("pb cache poisoned").insert((n, k), v.clone());
    v
}

/// `B_n^{(-k)} = Σ_j (j!)^2 S(n+1,j+1) S(k+1,j+1)`.
pub fn pb_number_neg_closed(n: u64, k: u64) -> BigInt {
    (0..=n.min(k))
        .map(|j| {
            let f = factorial(j);
            &f * &f * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1)
        })
        .sum()
}

/// `B_n^{(k)}` through Kaneko's recurrence in the upper index.
///
/// `B_n^{(0)} = 1` anchors the recursion. For `k ≥ 1` the recurrence is
/// run downward toward 0; for `k < 0` it is solved for `B_n^{(k)}` and run
/// upward from `k + 1`.
pub fn kaneko_recurrence(n: u32, k: i64) -> Rat {
    let one = Rat::from_integer(BigInt::from(1));
    if n == 0 || k == 0 {
        return one;
    }
    if let Some(v) = recurrence_cache().read().expect("recurrence cache poisoned").get(&(n, k)) {
        return v.clone();
    }
    let n64 = n as u64;
    let v = if k > 0 {
        let mut acc = kaneko_recurrence(n, k - 1);
        for m in 1..n {
            acc -= Rat::from_integer(binomial(n64, m as i64 - 1)) * kaneko_recurrence(m, k);
        }
        acc / Rat::from_integer(BigInt::from(n + 1))
    } else {
        let mut acc = Rat::from_integer(BigInt::from(n + 1)) * kaneko_recurrence(n, k + 1);
        for m in 1..n {
            acc += Rat::from_integer(binomial(n64, m as i64 - 1)) * kaneko_recurrence(m, k + 1);
        }
        acc
    };
    recurrence_cache().write().expect("recurrence cache poisoned").insert((n, k), v.clone());
    v
}

fn check_lonesum_size(rows: u32, cols: u32) -> Result<()> {
    if rows.saturating_mul(cols) > LONESUM_MAX_CELLS {
        return Err(Error::SizeGuard(format!(
            "lonesum enumeration of {rows}x{cols} matrices exceeds {LONESUM_MAX_CELLS} cells"
        )));
    }
    Ok(())
}

/// Rows packed as bitmasks; a matrix is lonesum iff no two rows are
/// incomparable, i.e. no 2x2 submatrix reads `[[1,0],[0,1]]` up to row order.
fn rows_form_chain(rows: &[u32]) -> bool {
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            if a & !b != 0 && b & !a != 0 {
                return false;
            }
        }
    }
    true
}

fn unpack(bits: u64, rows: u32, cols: u32) -> Vec<u32> {
    let mask = (1u64 << cols) - 1;
    (0..rows).map(|r| ((bits >> (r * cols)) & mask) as u32).collect()
}

/// Number of `rows × cols` (0,1)-matrices with no forbidden 2x2 submatrix.
pub fn lonesum_count(rows: u32, cols: u32) -> Result<BigInt> {
    check_lonesum_size(rows, cols)?;
    let cells = rows * cols;
    let count = (0..1u64 << cells).filter(|&bits| rows_form_chain(&unpack(bits, rows, cols))).count();
    Ok(BigInt::from(count))
}

/// Number of `rows × cols` (0,1)-matrices that are the only matrix with
/// their row-sum and column-sum vectors.
pub fn lonesum_count_by_signature(rows: u32, cols: u32) -> Result<BigInt> {
    check_lonesum_size(rows, cols)?;
    let cells = rows * cols;
    let mut classes: HashMap<(Vec<u32>, Vec<u32>), u32> = HashMap::new();
    for bits in 0..1u64 << cells {
        let m = unpack(bits, rows, cols);
        let row_sums: Vec<u32> = m.iter().map(|r| r.count_ones()).collect();
        let col_sums: Vec<u32> =
            (0..cols).map(|c| m.iter().filter(|r| (*r >> c) & 1 == 1).count() as u32).collect();
        *classes.entry((row_sums, col_sums)).or_default() += 1;
    }
    Ok(BigInt::from(classes.values().filter(|&&c| c == 1).count()))
}

/// `(-1)^n p(-x)`.
pub fn reflect<T: Field>(p: &Poly<T>, n: u32) -> Poly<T> {
    let r = p.compose_affine(&-T::one(), &T::zero());
    if n % 2 == 1 {
        -r
    } else {
        r
    }
}
