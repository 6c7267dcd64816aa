//! The idempotent quasigroup and its hidden cyclic group.
//!
//! In a medial generic isospectral algebra the nonzero idempotents are
//! closed under multiplication and form a commutative idempotent medial
//! quasigroup; `x # y = L_c^{-1}(x y)` turns them into an abelian group
//! with identity c, which is in fact cyclic of order 2^n - 1. Composing
//! with a generator labeling exhibits the multiplication as
//! `u * v = (u + v)/2 mod N` on Z_N. This module certifies each of those
//! steps on explicit tables, and also provides the standalone Z_N model
//! with its orders, orbits and realized-order sets.

use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::idempotents::IdempotentSet;
use crate::scalar::Tolerance;

/// An N x N index table over labeled idempotents (or plain indices for
/// abstract tables such as the Z_N model).
#[derive(Debug, Clone)]
pub struct QuasigroupTable {
    table: Vec<Vec<usize>>,
    labels: Option<Vec<Element>>,
}

/// A bijection from table labels onto Z_N certifying
/// `phi(x y) = (phi(x) + phi(y))/2 mod N` when `verified` is set.
#[derive(Debug, Clone)]
pub struct ZnRelabeling {
    pub phi: Vec<u64>,
    pub verified: bool,
}

impl ZnRelabeling {
    pub fn to_json(&self) -> Value {
        json!({"phi": self.phi, "verified": self.verified})
    }
}

/// The `#`-group on idempotent indices: `op[i][j]` with an identity index.
#[derive(Debug, Clone)]
pub struct BoxplusGroup {
    pub op: Vec<Vec<usize>>,
    pub identity: usize,
}

impl QuasigroupTable {
    pub fn from_indices(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        assert!(table.iter().all(|r| r.len() == n), "table must be square");
        assert!(
            table.iter().flatten().all(|v| *v < n),
            "table entries must be indices"
        );
        QuasigroupTable {
            table,
            labels: None,
        }
    }

    /// Builds the product table of a closed set of idempotents, preserving
    /// the given labeling order. Fails with `ProductEscapes` if some product
    /// does not match any element of the list.
    pub fn from_elements(alg: &Algebra, elements: &[Element], tol: &Tolerance) -> Result<Self> {
        let n = elements.len();
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let p = alg.mul(&elements[i], &elements[j])?;
                let hit = elements
                    .iter()
                    .position(|e| e.dist_linf(&p) <= tol.dedupe_tol)
                    .ok_or(Error::ProductEscapes { i, j })?;
                table[i][j] = hit;
                table[j][i] = hit;
            }
        }
        Ok(QuasigroupTable {
            table,
            labels: Some(elements.to_vec()),
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[Element]> {
        self.labels.as_deref()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order()).all(|i| self.table[i][i] == i)
    }

    /// Every row and column is a permutation of 0..N-1.
    pub fn is_latin(&self) -> bool {
        let n = self.order();
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[self.table[i][j]] = true;
                col[self.table[j][i]] = true;
            }
            if !(row.iter().all(|b| *b) && col.iter().all(|b| *b)) {
                return false;
            }
        }
        true
    }

    /// The medial law `(x y)(z w) = (x z)(y w)` over all quadruples for
    /// N <= 63. Larger tables are certified via a Z_N relabeling when one
    /// exists (the half-sum rule is medial identically), with a seeded
    /// million-quadruple sample as fallback.
    pub fn is_medial(&self) -> bool {
        let n = self.order();
        if n <= 63 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for w in 0..n {
                            if self.table[self.table[x][y]][self.table[z][w]]
                                != self.table[self.table[x][z]][self.table[y][w]]
                            {
                                return false;
                            }
                        }
                    }
                }
            }
            return true;
        }
        if find_relabel_permutation(self).is_some() {
            return true;
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6d656469);
        for _ in 0..1_000_000 {
            let (x, y, z, w) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            if self.table[self.table[x][y]][self.table[z][w]]
                != self.table[self.table[x][z]][self.table[y][w]]
            {
                return false;
            }
        }
        true
    }

    /// 1-indexed ASCII grid in the usual multiplication-table layout.
    pub fn render_ascii(&self) -> String {
        let n = self.order();
        let width = format!("{n}").len().max(1) + 1;
        let mut out = String::new();
        out.push_str(&" ".repeat(width));
        out.push_str(" |");
        for j in 0..n {
            out.push_str(&format!("{:>width$}", j + 1));
        }
        out.push('\n');
        out.push_str(&"-".repeat(width + 1));
        out.push('+');
        out.push_str(&"-".repeat(width * n));
        out.push('\n');
        for i in 0..n {
            out.push_str(&format!("{:>width$} |", i + 1));
            for j in 0..n {
                out.push_str(&format!("{:>width$}", self.table[i][j] + 1));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"order": self.order(), "table": self.table});
        if let Some(labels) = &self.labels {
            v["labels"] = Value::Array(labels.iter().map(Element::to_json).collect());
        }
        v
    }
}

/// The product table of a complete idempotent enumeration.
pub fn idm_table(alg: &Algebra, idm: &IdempotentSet, tol: &Tolerance) -> Result<QuasigroupTable> {
    if !idm.complete {
        return Err(Error::IncompleteSet);
    }
    QuasigroupTable::from_elements(alg, &idm.elements, tol)
}

/// The abelian group `x # y = L_c^{-1}(x y)` on the idempotents, with the
/// chosen idempotent as identity. Closure, associativity, identity and
/// inverses are all certified.
pub fn boxplus_group(
    alg: &Algebra,
    idm: &IdempotentSet,
    c_index: usize,
    tol: &Tolerance,
) -> Result<BoxplusGroup> {
    let n = idm.len();
    let c = &idm.elements[c_index];
    let lc = alg.left_mul_matrix(c);
    let lc_mat = lc.matrix();
    let mut op = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let prod = alg.mul(&idm.elements[i], &idm.elements[j])?;
            let boxed = Element::new(lc_mat.solve(prod.coeffs()).map_err(|_| Error::SingularLc)?);
            let hit = idm
                .elements
                .iter()
                .position(|e| e.dist_linf(&boxed) <= tol.dedupe_tol)
                .ok_or(Error::ClosureFailure { i, j })?;
            op[i][j] = hit;
            op[j][i] = hit;
        }
    }
    for x in 0..n {
        if op[c_index][x] != x {
            return Err(Error::NotIMCQuasigroup(format!(
                "identity fails at element {x}"
            )));
        }
        if !op[x].contains(&c_index) {
            return Err(Error::NotIMCQuasigroup(format!(
                "element {x} has no inverse"
            )));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[x][op[y][z]] {
                    return Err(Error::NotIMCQuasigroup(format!(
                        "associativity fails at ({x}, {y}, {z})"
                    )));
                }
            }
        }
    }
    Ok(BoxplusGroup {
        op,
        identity: c_index,
    })
}

/// Smallest element whose `#`-powers exhaust the group, if any.
pub fn find_generator(group: &BoxplusGroup) -> Option<usize> {
    let n = group.op.len();
    (0..n).find(|&g| {
        let mut seen = vec![false; n];
        let mut cur = group.identity;
        for _ in 0..n {
            cur = group.op[cur][g];
            if seen[cur] {
                return false;
            }
            seen[cur] = true;
        }
        seen.iter().all(|b| *b)
    })
}

/// The full chain: build the `#`-group at the first idempotent, find a
/// generator, label `g^{#k} -> k`, and verify the half-sum rule
/// `phi(x y) = (phi(x) + phi(y))/2 mod N` over all pairs.
pub fn isotopy_to_zn(alg: &Algebra, idm: &IdempotentSet, tol: &Tolerance) -> Result<ZnRelabeling> {
    let group = boxplus_group(alg, idm, 0, tol)?;
    let g = find_generator(&group).ok_or(Error::NotCyclic)?;
    let n = idm.len() as u64;
    let mut phi = vec![0u64; idm.len()];
    let mut cur = group.identity;
    for k in 0..idm.len() {
        phi[cur] = k as u64;
        cur = group.op[cur][g];
    }
    let table = idm_table(alg, idm, tol)?;
    let inv2 = (n + 1) / 2;
    let verified = (0..idm.len())
        .all(|i| (0..idm.len()).all(|j| phi[table.get(i, j)] == (phi[i] + phi[j]) % n * inv2 % n));
    Ok(ZnRelabeling { phi, verified })
}

/// Searches for a permutation pi with `pi(table[i][j]) = (pi(i)+pi(j))/2`
/// through the generator construction on the table itself (never by
/// permutation brute force). Returns `None` when the table is not a cyclic
/// IMC quasigroup or the verification fails.
pub fn find_relabel_permutation(table: &QuasigroupTable) -> Option<Vec<u64>> {
    if !(table.is_commutative() && table.is_idempotent() && table.is_latin()) {
        return None;
    }
    let n = table.order();
    // x # y = row_c^{-1}(x y) directly on indices, with c = 0.
    let mut inv_row = vec![0usize; n];
    for w in 0..n {
        inv_row[table.get(0, w)] = w;
    }
    let op: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| inv_row[table.get(x, y)]).collect())
        .collect();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[x][op[y][z]] {
                    return None;
                }
            }
        }
    }
    let group = BoxplusGroup { op, identity: 0 };
    let g = find_generator(&group)?;
    let mut phi = vec![0u64; n];
    let mut cur = group.identity;
    for k in 0..n {
        phi[cur] = k as u64;
        cur = group.op[cur][g];
    }
    let big_n = n as u64;
    let inv2 = (big_n + 1) / 2;
    let ok = (0..n)
        .all(|i| (0..n).all(|j| phi[table.get(i, j)] == (phi[i] + phi[j]) % big_n * inv2 % big_n));
    ok.then_some(phi)
}

/// The Z_N model: `u o v = (u + v)(N + 1)/2 mod N` for odd N.
pub fn build_zn_quasigroup(n: u64) -> Result<QuasigroupTable> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    let inv2 = (n + 1) / 2;
    let table = (0..n)
        .map(|u| (0..n).map(|v| ((u + v) % n * inv2 % n) as usize).collect())
        .collect();
    Ok(QuasigroupTable::from_indices(table))
}

/// `ord_x(y)` in the Z_N model: the minimal p >= 1 with `L_x^p y = y`,
/// computed as `min{p : (2^p - 1)(x - y) = 0 mod N}` and cross-checked by
/// direct iteration.
pub fn circ_order(x: u64, y: u64, n: u64) -> u64 {
    assert!(n % 2 == 1, "Z_N model needs odd N");
    let (x, y) = (x % n, y % n);
    let m = (x + n - y) % n;
    let mut power_of_two = 1u64;
    let mut p = 0u64;
    let order = loop {
        p += 1;
        power_of_two = power_of_two * 2 % n;
        if (power_of_two + n - 1) % n * (m % n) % n == 0 {
            break p;
        }
    };
    // direct iteration oracle
    let inv2 = (n + 1) / 2;
    let mut cur = y;
    let mut steps = 0u64;
    loop {
        cur = (x + cur) % n * inv2 % n;
        steps += 1;
        if cur == y {
            break;
        }
    }
    assert_eq!(
        order, steps,
        "order formula disagrees with direct iteration"
    );
    order
}

/// The set P(n) of possible return times on Z_(2^n - 1): all p <= n such
/// that `L_x^p y = y` holds for some pair x != y, found by brute force over
/// (p, m = x - y) and asserted against the characterization "integers <= n
/// sharing a nontrivial divisor with n".
///
/// Note the return-time reading: p counts as possible whenever some pair
/// returns after p steps, whether or not p is that pair's minimal order.
/// The set of minimal orders is strictly smaller in general (it is the set
/// of divisors of n above 1, first differing at n = 6).
pub fn p_set(n: u32) -> std::collections::BTreeSet<u64> {
    assert!(n >= 2);
    let big_n = (1u64 << n) - 1;
    let mut possible = std::collections::BTreeSet::new();
    let mut power_of_two = 1u64;
    for p in 1..=n as u64 {
        power_of_two = power_of_two * 2 % big_n;
        let factor = (power_of_two + big_n - 1) % big_n;
        if (1..big_n).any(|m| factor * m % big_n == 0) {
            possible.insert(p);
        }
    }
    assert_eq!(possible, p_set_gcd(n), "return times vs gcd rule");
    possible
}

/// The minimal orders actually attained: `{ord_x(y) : x != y}`.
pub fn minimal_order_set(n: u32) -> std::collections::BTreeSet<u64> {
    assert!(n >= 2);
    let big_n = (1u64 << n) - 1;
    (1..big_n).map(|m| circ_order(m, 0, big_n)).collect()
}

/// The gcd characterization of the same set: `{p <= n : gcd(p, n) > 1}`.
pub fn p_set_gcd(n: u32) -> std::collections::BTreeSet<u64> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (2..=n as u64).filter(|p| gcd(*p, n as u64) > 1).collect()
}

/// Cycle decomposition of Z_N under `y -> x o y`, in order of discovery.
pub fn orbits(n: u64, x: u64) -> Vec<Vec<u64>> {
    assert!(n % 2 == 1, "Z_N model needs odd N");
    let inv2 = (n + 1) / 2;
    let mut seen = vec![false; n as usize];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur as usize] {
            seen[cur as usize] = true;
            cycle.push(cur);
            cur = (x + cur) % n * inv2 % n;
        }
        cycles.push(cycle);
    }
    cycles
}
