use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{read_cayley_table, FiniteGroup, GroupError};

/// Largest group order accepted unless overridden.
pub const DEFAULT_ORDER_CAP: usize = 200;

/// Environment variable consulted by [`FamilySpec::default_cap`].
pub const ORDER_CAP_ENV: &str = "GRPCONN_ORDER_CAP";

/// A named group family, written `kind:params` on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    /// Symmetries of the n-gon, order 2n.
    Dihedral(usize),
    /// Order 4n; `Dicyclic(2)` is the quaternion group.
    Dicyclic(usize),
    Symmetric(usize),
    ElementaryAbelian { p: usize, k: usize },
    DirectProduct(Vec<FamilySpec>),
    FromFile(PathBuf),
}

impl FamilySpec {
    /// Order cap from [`ORDER_CAP_ENV`], falling back to [`DEFAULT_ORDER_CAP`].
    pub fn default_cap() -> usize {
        std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_ORDER_CAP)
    }

    /// Group order implied by the parameters, or `None` on overflow or for
    /// file-backed groups.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            FamilySpec::Cyclic(n) => Some(*n),
            FamilySpec::Dihedral(n) => n.checked_mul(2),
            FamilySpec::Dicyclic(n) => n.checked_mul(4),
            FamilySpec::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            FamilySpec::ElementaryAbelian { p, k } => p.checked_pow(u32::try_from(*k).ok()?),
            FamilySpec::DirectProduct(parts) => {
                parts.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.expected_order()?))
            }
            FamilySpec::FromFile(_) => None,
        }
    }

    fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidParameter(msg));
        match self {
            FamilySpec::Cyclic(0) => bad("cyclic order must be positive".into()),
            FamilySpec::Dihedral(0) => bad("dihedral parameter must be positive".into()),
            FamilySpec::Dicyclic(n) if *n < 2 => bad(format!("dicyclic parameter must be >= 2, got {n}")),
            FamilySpec::Symmetric(0) => bad("symmetric degree must be positive".into()),
            FamilySpec::ElementaryAbelian { p, k } => {
                if !is_prime(*p as u64) {
                    bad(format!("{p} is not prime"))
                } else if *k == 0 {
                    bad("elementary abelian rank must be positive".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::DirectProduct(parts) if parts.is_empty() => {
                bad("direct product needs at least one factor".into())
            }
            FamilySpec::DirectProduct(parts) => parts.iter().try_for_each(FamilySpec::validate),
            _ => Ok(()),
        }
    }
}

/// Materializes the group named by `spec`, refusing anything larger than `cap`.
pub fn build_family(spec: &FamilySpec, cap: usize) -> Result<FiniteGroup, GroupError> {
    spec.validate()?;
    if let FamilySpec::FromFile(path) = spec {
        let g = read_cayley_table(path)?;
        if g.order() > cap {
            return Err(GroupError::OrderCapExceeded { order: g.order(), cap });
        }
        return Ok(g.with_label(spec.to_string()));
    }
    let order = spec.expected_order().unwrap_or(usize::MAX);
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    let label = spec.to_string();
    let g = match spec {
        FamilySpec::Cyclic(n) => cyclic(*n, label),
        FamilySpec::Dihedral(n) => dihedral(*n, label),
        FamilySpec::Dicyclic(n) => dicyclic(*n, label),
        FamilySpec::Symmetric(n) => symmetric(*n, label),
        FamilySpec::ElementaryAbelian { p, k } => {
            let factors = vec![cyclic(*p, String::new()); *k];
            direct_product(&factors, label)
        }
        FamilySpec::DirectProduct(parts) => {
            let factors = parts.iter().map(|s| build_family(s, cap)).collect::<Result<Vec<_>, _>>()?;
            direct_product(&factors, label)
        }
        FamilySpec::FromFile(_) => unreachable!(),
    };
    Ok(g)
}

fn cyclic(n: usize, label: String) -> FiniteGroup {
    let table = (0..n * n).map(|idx| (idx / n + idx % n) % n).collect();
    FiniteGroup::from_trusted(n, table, label)
}

/// Element `r^k s^j` lives at index `k + n*j`.
fn dihedral(n: usize, label: String) -> FiniteGroup {
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (k, j) = (x % n, x / n);
        for y in 0..order {
            let (l, m) = (y % n, y / n);
            // s r^l = r^-l s
            let rot = if j == 0 { (k + l) % n } else { (k + n - l) % n };
            table[x * order + y] = rot + n * ((j + m) % 2);
        }
    }
    FiniteGroup::from_trusted(order, table, label)
}

/// Element `a^k b^j` (k < 2n, j < 2) lives at index `k + 2n*j`, with
/// `a^{2n} = e`, `b^2 = a^n`, `b a b^-1 = a^-1`.
fn dicyclic(n: usize, label: String) -> FiniteGroup {
    let m = 2 * n;
    let order = 2 * m;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (k, j) = (x % m, x / m);
        for y in 0..order {
            let (l, t) = (y % m, y / m);
            table[x * order + y] = match (j, t) {
                (0, _) => (k + l) % m + m * t,
                (1, 0) => (k + m - l) % m + m,
                _ => (k + m - l + n) % m,
            };
        }
    }
    FiniteGroup::from_trusted(order, table, label)
}

/// Permutations of `0..n` in lexicographic order, composed as functions
/// (`(στ)(x) = σ(τ(x))`).
fn symmetric(n: usize, label: String) -> FiniteGroup {
    let perms = lexicographic_permutations(n);
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let order = perms.len();
    let mut table = vec![0; order * order];
    let mut buf = vec![0; n];
    for (a, sigma) in perms.iter().enumerate() {
        for (b, tau) in perms.iter().enumerate() {
            for x in 0..n {
                buf[x] = sigma[tau[x]];
            }
            table[a * order + b] = index[buf.as_slice()];
        }
    }
    FiniteGroup::from_trusted(order, table, label)
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    // standard next-permutation step
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let pivot = i - 1;
        let swap = (i..n).rev().find(|&j| current[j] > current[pivot]).unwrap();
        current.swap(pivot, swap);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Component-wise product; the tuple `(g_1, ..., g_r)` is stored at the
/// mixed-radix index with the first factor most significant.
fn direct_product(factors: &[FiniteGroup], label: String) -> FiniteGroup {
    let order: usize = factors.iter().map(FiniteGroup::order).product();
    let decompose = |mut x: usize| -> Vec<usize> {
        let mut digits = vec![0; factors.len()];
        for (slot, f) in digits.iter_mut().zip(factors).rev() {
            *slot = x % f.order();
            x /= f.order();
        }
        digits
    };
    let digits: Vec<Vec<usize>> = (0..order).map(decompose).collect();
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            table[x * order + y] = factors
                .iter()
                .enumerate()
                .fold(0, |acc, (i, f)| acc * f.order() + f.mul(digits[x][i], digits[y][i]));
        }
    }
    FiniteGroup::from_trusted(order, table, label)
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            FamilySpec::ElementaryAbelian { p, k } => write!(f, "ea:{p},{k}"),
            FamilySpec::DirectProduct(parts) => {
                f.write_str("product:")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
            FamilySpec::FromFile(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GroupError::InvalidParameter(format!("unrecognized group spec '{s}'"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let int = |v: &str| v.trim().parse::<usize>().map_err(|_| bad());
        match kind {
            "cyclic" => Ok(FamilySpec::Cyclic(int(rest)?)),
            "dihedral" => Ok(FamilySpec::Dihedral(int(rest)?)),
            "dicyclic" => Ok(FamilySpec::Dicyclic(int(rest)?)),
            "symmetric" => Ok(FamilySpec::Symmetric(int(rest)?)),
            "ea" => {
                let (p, k) = rest.split_once(',').ok_or_else(bad)?;
                Ok(FamilySpec::ElementaryAbelian { p: int(p)?, k: int(k)? })
            }
            "product" => {
                let parts = rest
                    .split('*')
                    .map(|part| match part.trim().split_once(':') {
                        Some(("product", _)) | Some(("file", _)) | None => Err(bad()),
                        _ => part.parse(),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(FamilySpec::DirectProduct(parts))
            }
            "file" if !rest.is_empty() => Ok(FamilySpec::FromFile(PathBuf::from(rest))),
            _ => Err(bad()),
        }
    }
}
