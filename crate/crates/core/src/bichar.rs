//! Bicharacters on Γ in generator-exponent form.
//!
//! A bicharacter is fixed by its values on pairs of cyclic generators,
//! `σ(e_i, e_j) = ζ_{g_ij}^{K_ij}` with `g_ij = gcd(d_i, d_j)`, so the integer
//! matrix `K` with `K_ij ∈ 0..g_ij` is a canonical form. On arbitrary elements
//! `σ(a, b) = Π_{i,j} ζ_{g_ij}^{K_ij a_i b_j}`.

use std::fmt;

use crate::cyclotomic::CycNumber;
use crate::error::{Error, Result};
use crate::group::{GroupElement, Group, Subgroup};
use crate::hopf;
use crate::rational::{gcd, Rational};

/// Any complex-valued function on Γ × Γ, stored as a full row-major table
/// indexed by `(α, β)` element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    group: Group,
    values: Vec<CycNumber>,
}

impl FunctionTable {
    pub fn new(group: &Group, values: Vec<CycNumber>) -> Result<Self> {
        let n = group.order();
        if values.len() != n * n {
            return Err(Error::Dimension(format!(
                "function table needs {} values, got {}",
                n * n,
                values.len()
            )));
        }
        if let Some(v) = values
            .iter()
            .find(|v| v.conductor() != group.exponent())
        {
            return Err(Error::ConductorMismatch(group.exponent(), v.conductor()));
        }
        Ok(FunctionTable {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn(group: &Group, mut f: impl FnMut(usize, usize) -> CycNumber) -> Self {
        let n = group.order();
        let values = (0..n * n).map(|k| f(k / n, k % n)).collect();
        FunctionTable {
            group: group.clone(),
            values,
        }
    }

    pub fn constant(group: &Group, value: CycNumber) -> Self {
        Self::from_fn(group, |_, _| value.clone())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> &CycNumber {
        &self.values[a * self.group.order() + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: CycNumber) {
        let n = self.group.order();
        self.values[a * n + b] = v;
    }

    pub fn values(&self) -> &[CycNumber] {
        &self.values
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.group, |a, b| self.get(b, a).clone())
    }

    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        Ok(Self::from_fn(&self.group, |a, b| self.get(a, b) * other.get(a, b)))
    }

    /// Pointwise reciprocal; names the first zero point otherwise.
    pub fn pointwise_inverse(&self) -> Result<Self> {
        let n = self.group.order();
        let mut values = Vec::with_capacity(n * n);
        for (k, v) in self.values.iter().enumerate() {
            match v.inv() {
                Ok(inv) => values.push(inv),
                Err(_) => {
                    return Err(Error::NotInvertible(vec![
                        self.group.exponents(k / n).to_vec(),
                        self.group.exponents(k % n).to_vec(),
                    ]))
                }
            }
        }
        Ok(FunctionTable {
            group: self.group.clone(),
            values,
        })
    }

    /// First `(α, β)` in lexicographic order with σ(α, β) = 0.
    pub fn first_zero(&self) -> Option<(usize, usize)> {
        let n = self.group.order();
        self.values
            .iter()
            .position(CycNumber::is_zero)
            .map(|k| (k / n, k % n))
    }
}

/// Why a table is not a bicharacter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableRejection {
    ZeroEntry {
        a: GroupElement,
        b: GroupElement,
    },
    /// σ(αβ, γ) ≠ σ(α, γ)σ(β, γ)
    LeftMultiplicativity {
        a: GroupElement,
        b: GroupElement,
        c: GroupElement,
    },
    /// σ(α, βγ) ≠ σ(α, β)σ(α, γ)
    RightMultiplicativity {
        a: GroupElement,
        b: GroupElement,
        c: GroupElement,
    },
}

impl fmt::Display for TableRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableRejection::ZeroEntry { a, b } => {
                write!(f, "zero value at ({:?}, {:?})", a.0, b.0)
            }
            TableRejection::LeftMultiplicativity { a, b, c } => write!(
                f,
                "σ(αβ,γ) ≠ σ(α,γ)σ(β,γ) at α={:?} β={:?} γ={:?}",
                a.0, b.0, c.0
            ),
            TableRejection::RightMultiplicativity { a, b, c } => write!(
                f,
                "σ(α,βγ) ≠ σ(α,β)σ(α,γ) at α={:?} β={:?} γ={:?}",
                a.0, b.0, c.0
            ),
        }
    }
}

/// A bicharacter σ: Γ × Γ → ℂ*, in canonical `K`-matrix form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: Group,
    k: Vec<Vec<u32>>,
}

fn gcd_matrix(group: &Group) -> Vec<Vec<u32>> {
    let d = group.spec().orders();
    d.iter()
        .map(|&a| d.iter().map(|&b| gcd(a as u64, b as u64) as u32).collect())
        .collect()
}

/// Parses `K=0,1;1,0` (the `K=` prefix is optional): rows separated by `;`,
/// entries by `,`. An empty body is the 0×0 matrix.
pub fn parse_k_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let t = text.trim();
    let body = t
        .strip_prefix("K=")
        .or_else(|| t.strip_prefix("k="))
        .unwrap_or(t)
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::ParseBichar(format!("bad entry {e:?} in {text:?}")))
                })
                .collect()
        })
        .collect()
}

impl Bicharacter {
    /// Builds σ from any integer matrix, reducing `K_ij` modulo `g_ij`.
    pub fn from_matrix(group: &Group, k: &[Vec<i64>]) -> Result<Self> {
        let g = gcd_matrix(group);
        let r = g.len();
        if k.len() != r || k.iter().any(|row| row.len() != r) {
            return Err(Error::ParseBichar(format!(
                "{} needs a {r}x{r} matrix",
                group.spec()
            )));
        }
        let k = k
            .iter()
            .zip(&g)
            .map(|(row, grow)| {
                row.iter()
                    .zip(grow)
                    .map(|(&x, &m)| x.rem_euclid(m as i64) as u32)
                    .collect()
            })
            .collect();
        Ok(Bicharacter {
            group: group.clone(),
            k,
        })
    }

    /// True when some entry of `k` lies outside `0..g_ij`.
    pub fn needs_reduction(group: &Group, k: &[Vec<i64>]) -> bool {
        let g = gcd_matrix(group);
        k.iter().zip(&g).any(|(row, grow)| {
            row.iter()
                .zip(grow)
                .any(|(&x, &m)| x < 0 || x >= m as i64)
        })
    }

    pub fn trivial(group: &Group) -> Self {
        let r = group.spec().rank();
        Bicharacter {
            group: group.clone(),
            k: vec![vec![0; r]; r],
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.k
    }

    /// `K=0,1;1,0` rendering, the inverse of [`parse_k_matrix`].
    pub fn k_spec(&self) -> String {
        let rows: Vec<String> = self
            .k
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("K={}", rows.join(";"))
    }

    /// Exponent `p` with σ(a, b) = ζ_e^p.
    pub fn exp_idx(&self, a: usize, b: usize) -> u32 {
        let e = self.group.exponent();
        let orders = self.group.spec().orders();
        let (xa, xb) = (self.group.exponents(a), self.group.exponents(b));
        let mut p = 0u64;
        for (i, row) in self.k.iter().enumerate() {
            if xa[i] == 0 {
                continue;
            }
            for (j, &kij) in row.iter().enumerate() {
                if kij == 0 || xb[j] == 0 {
                    continue;
                }
                let g = gcd(orders[i] as u64, orders[j] as u64);
                let t = kij as u64 * xa[i] as u64 % g * xb[j] as u64 % g;
                p += t * (e / g);
            }
        }
        (p % e) as u32
    }

    pub fn value_idx(&self, a: usize, b: usize) -> CycNumber {
        self.group.root(self.exp_idx(a, b) as i64)
    }

    pub fn evaluate(&self, a: &GroupElement, b: &GroupElement) -> Result<CycNumber> {
        let (i, j) = (
            self.group.index_of_element(a)?,
            self.group.index_of_element(b)?,
        );
        Ok(self.value_idx(i, j))
    }

    pub fn table(&self) -> FunctionTable {
        FunctionTable::from_fn(&self.group, |a, b| self.value_idx(a, b))
    }

    /// σ^T(α, β) = σ(β, α).
    pub fn transpose(&self) -> Self {
        let r = self.k.len();
        Bicharacter {
            group: self.group.clone(),
            k: (0..r)
                .map(|i| (0..r).map(|j| self.k[j][i]).collect())
                .collect(),
        }
    }

    /// Pointwise product σρ.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        let g = gcd_matrix(&self.group);
        let k = self
            .k
            .iter()
            .zip(&other.k)
            .zip(&g)
            .map(|((a, b), m)| {
                a.iter()
                    .zip(b)
                    .zip(m)
                    .map(|((x, y), m)| (x + y) % m)
                    .collect()
            })
            .collect();
        Ok(Bicharacter {
            group: self.group.clone(),
            k,
        })
    }

    /// Pointwise inverse σ^{-1}.
    pub fn inverse(&self) -> Self {
        let g = gcd_matrix(&self.group);
        Bicharacter {
            group: self.group.clone(),
            k: self
                .k
                .iter()
                .zip(&g)
                .map(|(row, m)| row.iter().zip(m).map(|(x, m)| (m - x) % m).collect())
                .collect(),
        }
    }

    /// σ(α,β)σ(β,α) = 1 for all α, β; on generators `K_ij + K_ji ≡ 0 (mod g_ij)`.
    pub fn is_commutation_factor(&self) -> bool {
        let g = gcd_matrix(&self.group);
        let r = self.k.len();
        (0..r).all(|i| (0..r).all(|j| (self.k[i][j] + self.k[j][i]) % g[i][j] == 0))
    }

    /// Left and right kernels N₁ = {α | σ(α, ·) ≡ 1}, N₂ = {β | σ(·, β) ≡ 1}.
    pub fn kernels(&self) -> Result<(Subgroup, Subgroup)> {
        let n = self.group.order();
        let n1: Vec<usize> = (0..n)
            .filter(|&a| (0..n).all(|b| self.exp_idx(a, b) == 0))
            .collect();
        let n2: Vec<usize> = (0..n)
            .filter(|&b| (0..n).all(|a| self.exp_idx(a, b) == 0))
            .collect();
        let internal = |e: Error| Error::Internal(format!("kernel is not a subgroup: {e}"));
        let n1 = Subgroup::from_indices(&self.group, n1).map_err(internal)?;
        let n2 = Subgroup::from_indices(&self.group, n2).map_err(internal)?;
        if n1.order() != n2.order() {
            return Err(Error::Internal(format!(
                "|Γ/N₁| ≠ |Γ/N₂| for {}",
                self.k_spec()
            )));
        }
        Ok((n1, n2))
    }

    /// Computes σ'(α',β') = (m/n²) Σ σ(α,β)⟨α',α⟩*⟨β',β⟩*, checks that it
    /// vanishes off Δ₁ × Δ₂, and returns its restriction τ there.
    pub fn induced_pairing(&self) -> Result<PairingData> {
        let group = &self.group;
        let n = group.order();
        let (n1, n2) = self.kernels()?;
        let m = n / n1.order();
        let delta1 = group.annihilator(&n1)?;
        let delta2 = group.annihilator(&n2)?;
        if delta1.order() != m || delta2.order() != m {
            return Err(Error::Internal(format!(
                "annihilator orders {} and {} differ from m = {m}",
                delta1.order(),
                delta2.order()
            )));
        }
        // R_σ has coefficients σ'/m, so σ' = m · c.
        let r = hopf::tensor_from_function(&self.table());
        let m_rat = Rational::from_int(m as i64);
        for (&(a, b), c) in r.terms() {
            if !(delta1.contains_idx(a) && delta2.contains_idx(b)) && !c.is_zero() {
                return Err(Error::Internal(format!(
                    "σ' does not vanish at ({:?}, {:?})",
                    group.exponents(a),
                    group.exponents(b)
                )));
            }
        }
        let tau: Vec<CycNumber> = delta1
            .indices()
            .iter()
            .flat_map(|&a| {
                let r = &r;
                let m_rat = &m_rat;
                delta2
                    .indices()
                    .iter()
                    .map(move |&b| r.coefficient(&(a, b)).scale(m_rat))
            })
            .collect();
        let data = PairingData {
            n1,
            n2,
            delta1,
            delta2,
            m,
            tau,
        };
        data.check_nondegenerate()?;
        Ok(data)
    }
}

/// Iterates every bicharacter of `group` in row-major lexicographic order of
/// `K`; there are Π_{i,j} gcd(d_i, d_j) of them.
pub fn enumerate_all(group: &Group) -> impl Iterator<Item = Bicharacter> + '_ {
    let bounds: Vec<u32> = gcd_matrix(group).into_iter().flatten().collect();
    let r = group.spec().rank();
    let total = bicharacter_count(group);
    let mut cur = vec![0u32; bounds.len()];
    (0..total).map(move |step| {
        if step > 0 {
            for t in (0..cur.len()).rev() {
                cur[t] += 1;
                if cur[t] < bounds[t] {
                    break;
                }
                cur[t] = 0;
            }
        }
        let k = (0..r).map(|i| cur[i * r..(i + 1) * r].to_vec()).collect();
        Bicharacter {
            group: group.clone(),
            k,
        }
    })
}

pub fn bicharacter_count(group: &Group) -> u64 {
    gcd_matrix(group)
        .into_iter()
        .flatten()
        .map(|g| g as u64)
        .product()
}

/// Accepts a table iff it is nowhere zero and multiplicative in each slot,
/// then reads off the canonical `K` from the generator values.
pub fn from_table(table: &FunctionTable) -> Result<Bicharacter> {
    let group = table.group();
    let n = group.order();
    let el = |i: usize| group.element(i);
    if let Some((a, b)) = table.first_zero() {
        return Err(Error::NotBicharacter(TableRejection::ZeroEntry {
            a: el(a),
            b: el(b),
        }));
    }
    for a in 0..n {
        for b in 0..n {
            let ab = group.mul_idx(a, b);
            for c in 0..n {
                if *table.get(ab, c) != table.get(a, c) * table.get(b, c) {
                    return Err(Error::NotBicharacter(
                        TableRejection::LeftMultiplicativity {
                            a: el(a),
                            b: el(b),
                            c: el(c),
                        },
                    ));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = group.mul_idx(b, c);
                if *table.get(a, bc) != table.get(a, b) * table.get(a, c) {
                    return Err(Error::NotBicharacter(
                        TableRejection::RightMultiplicativity {
                            a: el(a),
                            b: el(b),
                            c: el(c),
                        },
                    ));
                }
            }
        }
    }
    let orders = group.spec().orders();
    let r = orders.len();
    let e = group.exponent();
    let generator = |i: usize| -> Result<usize> {
        let mut v = vec![0u32; r];
        v[i] = 1 % orders[i];
        group.index_of_element(&GroupElement(v))
    };
    let mut k = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let v = table.get(generator(i)?, generator(j)?);
            let g = gcd(orders[i] as u64, orders[j] as u64);
            let p = v.root_exponent().ok_or_else(|| {
                Error::Internal("multiplicative table value is not a root of unity".into())
            })?;
            if p % (e / g) != 0 {
                return Err(Error::Internal(format!(
                    "generator value ζ_{e}^{p} is not a {g}-th root of unity"
                )));
            }
            k[i][j] = (p / (e / g)) as i64;
        }
    }
    let sigma = Bicharacter::from_matrix(group, &k)?;
    if sigma.table() != *table {
        return Err(Error::Internal(
            "table disagrees with bicharacter read from generators".into(),
        ));
    }
    Ok(sigma)
}

/// σ_k(γ^r, γ^s) = ω^{krs} on the cyclic group of order `n`.
pub fn cyclic_bicharacter(n: u32, k: i64) -> Bicharacter {
    let group = Group::new(crate::group::GroupSpec::cyclic(n));
    Bicharacter::from_matrix(&group, &[vec![k]]).expect("1x1 matrix")
}

/// Kernels, annihilators and the induced non-degenerate pairing τ on Δ₁ × Δ₂.
#[derive(Clone, Debug)]
pub struct PairingData {
    pub n1: Subgroup,
    pub n2: Subgroup,
    pub delta1: Subgroup,
    pub delta2: Subgroup,
    pub m: usize,
    /// Row-major over `delta1.indices() × delta2.indices()`.
    pub tau: Vec<CycNumber>,
}

impl PairingData {
    pub fn group(&self) -> &Group {
        self.delta1.group()
    }

    /// τ at positions `(i, j)` within Δ₁ and Δ₂.
    pub fn tau_at(&self, i: usize, j: usize) -> &CycNumber {
        &self.tau[i * self.delta2.order() + j]
    }

    /// τ must be nowhere zero, multiplicative in each slot and non-degenerate
    /// on both sides.
    pub fn check_nondegenerate(&self) -> Result<()> {
        let group = self.group();
        let (d1, d2) = (self.delta1.indices(), self.delta2.indices());
        if self.tau.len() != d1.len() * d2.len() {
            return Err(Error::Internal("τ table has the wrong size".into()));
        }
        if self.tau.iter().any(CycNumber::is_zero) {
            return Err(Error::Internal("τ has a zero value".into()));
        }
        let pos1 = |x: usize| d1.binary_search(&x).expect("Δ₁ closed");
        let pos2 = |x: usize| d2.binary_search(&x).expect("Δ₂ closed");
        for (i, &a) in d1.iter().enumerate() {
            for (i2, &a2) in d1.iter().enumerate() {
                let p = pos1(group.mul_idx(a, a2));
                for j in 0..d2.len() {
                    if *self.tau_at(p, j) != self.tau_at(i, j) * self.tau_at(i2, j) {
                        return Err(Error::Internal("τ is not multiplicative".into()));
                    }
                }
            }
        }
        for (j, &b) in d2.iter().enumerate() {
            for (j2, &b2) in d2.iter().enumerate() {
                let p = pos2(group.mul_idx(b, b2));
                for i in 0..d1.len() {
                    if *self.tau_at(i, p) != self.tau_at(i, j) * self.tau_at(i, j2) {
                        return Err(Error::Internal("τ is not multiplicative".into()));
                    }
                }
            }
        }
        for i in 1..d1.len() {
            if (0..d2.len()).all(|j| self.tau_at(i, j).is_one()) {
                return Err(Error::Internal(format!(
                    "τ is degenerate at {:?} in Δ₁",
                    group.exponents(d1[i])
                )));
            }
        }
        for j in 1..d2.len() {
            if (0..d1.len()).all(|i| self.tau_at(i, j).is_one()) {
                return Err(Error::Internal(format!(
                    "τ is degenerate at {:?} in Δ₂",
                    group.exponents(d2[j])
                )));
            }
        }
        Ok(())
    }
}
