//! Graded pieces of the cotangent module T¹ of a toric ring `K[H]`, computed
//! from a generating set `v₁..v_s` of the relation lattice via
//! `dim T¹(K[H])ₐ = l − lₐ − dₐ`.

use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, input, Error, Result};
use crate::linalg::{kernel_basis, rank, rank_i64, IntMatrix, IntVector};
use crate::semigroup::AffineSemigroup;

/// Dimensions at one degree `a`. Index sets are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T1Report {
    pub degree: IntVector,
    pub l: usize,
    pub l_a: usize,
    pub d_a: usize,
    pub t1_dim: usize,
    pub f_set: Vec<usize>,
    pub g_set: Vec<usize>,
}

/// Generators file: `{"vectors": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorsFile {
    pub vectors: Vec<IntVector>,
}

impl GeneratorsFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("generators file: {e}")))
    }
}

/// A semigroup together with a generating set of its relation lattice.
#[derive(Clone, Debug)]
pub struct Presentation {
    semigroup: AffineSemigroup,
    gens: Vec<IntVector>,
    degrees: Vec<IntVector>,
    a_matrix: IntMatrix,
    small_rows: Option<Vec<Vec<i64>>>,
    small_degrees: Option<Vec<Vec<i64>>>,
    l: usize,
    // left kernel of A_H, for the second route to dim U*
    syzygies: OnceLock<IntMatrix>,
}

impl Presentation {
    /// Fails unless every vector lies in the relation lattice and together
    /// they span it over ℚ.
    pub fn new(semigroup: AffineSemigroup, gens: Vec<IntVector>) -> Result<Self> {
        let n = semigroup.generator_count();
        let gm = semigroup.generator_matrix();
        for (i, v) in gens.iter().enumerate() {
            check_dim(n, v.len())?;
            if !gm.mul_vec(v)?.is_zero() {
                return input(format!("vector {} = {} is not a relation of the generators", i + 1, v));
            }
        }
        let a_matrix = IntMatrix::from_rows(n, &gens)?;
        let l = rank(&a_matrix);
        let expected = semigroup.relation_rank();
        if l != expected {
            return input(format!(
                "vectors span a lattice of rank {l}, but the relation lattice has rank {expected}"
            ));
        }
        let degrees = gens.iter().map(|v| semigroup.h_of(v)).collect::<Result<Vec<_>>>()?;
        let small_rows = gens.iter().map(IntVector::to_i64s).collect();
        let small_degrees = degrees.iter().map(IntVector::to_i64s).collect();
        Ok(Presentation {
            semigroup,
            gens,
            degrees,
            a_matrix,
            small_rows,
            small_degrees,
            l,
            syzygies: OnceLock::new(),
        })
    }

    /// Uses a basis of the relation lattice as the generating set. Valid for
    /// every rank computation here, though usually not a minimal generating
    /// set of the toric ideal.
    pub fn from_lattice_basis(semigroup: AffineSemigroup) -> Result<Self> {
        let gens = semigroup.relation_lattice().row_vectors();
        Presentation::new(semigroup, gens)
    }

    pub fn semigroup(&self) -> &AffineSemigroup {
        &self.semigroup
    }

    pub fn gens(&self) -> &[IntVector] {
        &self.gens
    }

    pub fn degrees(&self) -> &[IntVector] {
        &self.degrees
    }

    pub fn a_matrix(&self) -> &IntMatrix {
        &self.a_matrix
    }

    /// `l = rank A_H`.
    pub fn l(&self) -> usize {
        self.l
    }

    fn require_group(&self, a: &IntVector) -> Result<()> {
        if self.semigroup.in_group(a)? {
            Ok(())
        } else {
            Err(Error::NotInGroup(a.to_string()))
        }
    }

    fn member_after_shift(&self, a: &IntVector, shift: &IntVector, small_shift: Option<&Vec<i64>>) -> Result<bool> {
        if let (Some(sa), Some(ss)) = (a.to_i64s(), small_shift) {
            let sum: Option<Vec<i64>> = sa.iter().zip(ss).map(|(x, y)| x.checked_add(*y)).collect();
            if let Some(sum) = sum {
                return Ok(self.semigroup.contains_i64(&sum));
            }
        }
        self.semigroup.in_semigroup(&(a + shift))
    }

    fn f_set_unchecked(&self, a: &IntVector) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, d) in self.degrees.iter().enumerate() {
            let small = self.small_degrees.as_ref().map(|s| &s[i]);
            if self.member_after_shift(a, d, small)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    fn g_set_unchecked(&self, a: &IntVector) -> Result<Vec<usize>> {
        let gens = self.semigroup.generators();
        let small = self.semigroup.small_generators();
        let mut out = Vec::new();
        for (j, h) in gens.iter().enumerate() {
            if self.member_after_shift(a, h, small.map(|s| &s[j]))? {
                out.push(j);
            }
        }
        Ok(out)
    }

    /// `𝓕ₐ = {i : a + h(vᵢ) ∈ H}`.
    pub fn f_set(&self, a: &IntVector) -> Result<Vec<usize>> {
        self.require_group(a)?;
        self.f_set_unchecked(a)
    }

    /// `𝒢ₐ = {j : a + hⱼ ∈ H}`.
    pub fn g_set(&self, a: &IntVector) -> Result<Vec<usize>> {
        self.require_group(a)?;
        self.g_set_unchecked(a)
    }

    fn rows_rank(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        match &self.small_rows {
            Some(rows) => {
                let sel: Vec<&[i64]> = idx.iter().map(|&i| rows[i].as_slice()).collect();
                rank_i64(&sel, self.a_matrix.cols())
            }
            None => rank(&self.a_matrix.select_rows(idx)),
        }
    }

    fn cols_rank(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        match &self.small_rows {
            Some(rows) => {
                let sel: Vec<Vec<i64>> = rows.iter().map(|r| idx.iter().map(|&j| r[j]).collect()).collect();
                rank_i64(&sel, idx.len())
            }
            None => rank(&self.a_matrix.select_cols(idx)),
        }
    }

    fn complement(&self, f: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.gens.len()];
        f.iter().for_each(|&i| inside[i] = true);
        (0..self.gens.len()).filter(|&i| !inside[i]).collect()
    }

    /// `dim (U*)ₐ = l − rank(rows of A_H outside 𝓕ₐ)`.
    pub fn ustar_dim(&self, a: &IntVector) -> Result<usize> {
        let f = self.f_set(a)?;
        Ok(self.l - self.rows_rank(&self.complement(&f)))
    }

    /// `dim (Im δ*)ₐ = rank(columns of A_H in 𝒢ₐ)`.
    pub fn imdelta_dim(&self, a: &IntVector) -> Result<usize> {
        let g = self.g_set(a)?;
        Ok(self.cols_rank(&g))
    }

    /// Integer relations among the rows of `A_H`, as rows of an
    /// `(s − l) × s` matrix.
    pub fn syzygies(&self) -> &IntMatrix {
        self.syzygies.get_or_init(|| kernel_basis(&self.a_matrix.transpose()))
    }

    /// `dim (U*)ₐ` by the second route: `|𝓕ₐ| − rank Xₐ`, where `Xₐ` is the
    /// syzygy module of the `vᵢ` projected onto the coordinates in `𝓕ₐ`.
    pub fn ustar_dim_oracle(&self, a: &IntVector) -> Result<usize> {
        let f = self.f_set(a)?;
        let x = self.syzygies().select_cols(&f);
        Ok(f.len() - rank(&x))
    }

    /// The full report at `a`, which must lie in `ℤH`.
    pub fn t1_dim(&self, a: &IntVector) -> Result<T1Report> {
        self.require_group(a)?;
        self.report_in_group(a)
    }

    /// As `t1_dim`, but trusts the caller that `a ∈ ℤH`.
    pub(crate) fn report_in_group(&self, a: &IntVector) -> Result<T1Report> {
        let f_set = self.f_set_unchecked(a)?;
        let g_set = self.g_set_unchecked(a)?;
        self.assemble(a.clone(), f_set, g_set)
    }

    /// Scan entry point: `None` when `𝓕ₐ` is empty, since then `T¹ₐ = 0`
    /// without any rank computation.
    pub(crate) fn report_if_candidate(&self, a: &[i64]) -> Result<Option<T1Report>> {
        let Some(degs) = &self.small_degrees else {
            return self.report_in_group(&IntVector::from_i64s(a)).map(Some);
        };
        let mut buf = vec![0i64; a.len()];
        let mut f_set = Vec::new();
        for (i, d) in degs.iter().enumerate() {
            for ((b, x), y) in buf.iter_mut().zip(a).zip(d) {
                *b = x + y;
            }
            if self.semigroup.contains_i64(&buf) {
                f_set.push(i);
            }
        }
        if f_set.is_empty() {
            return Ok(None);
        }
        let v = IntVector::from_i64s(a);
        let g_set = self.g_set_unchecked(&v)?;
        self.assemble(v, f_set, g_set).map(Some)
    }

    fn assemble(&self, degree: IntVector, f_set: Vec<usize>, g_set: Vec<usize>) -> Result<T1Report> {
        let outside = self.complement(&f_set);
        let l_a = self.rows_rank(&outside);
        let d_a = self.cols_rank(&g_set);
        if l_a + d_a > self.l {
            return Err(Error::Assertion(format!(
                "l_a + d_a = {} + {} exceeds l = {} at degree {}",
                l_a, d_a, self.l, degree
            )));
        }
        // vᵢ(j) = 0 for i ∉ 𝓕ₐ, j ∈ 𝒢ₐ
        for &i in &outside {
            for &j in &g_set {
                if !self.gens[i].get(j).is_zero() {
                    return Err(Error::Assertion(format!(
                        "v_{}({}) ≠ 0 with {} outside F_a and {} in G_a at degree {}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        degree
                    )));
                }
            }
        }
        Ok(T1Report { degree, l: self.l, l_a, d_a, t1_dim: self.l - l_a - d_a, f_set, g_set })
    }

    /// `−h_{j₁} − h_{j₂} − …` for 0-based generator indices.
    pub fn negative_generator_sum(&self, idx: &[usize]) -> Result<IntVector> {
        let gens = self.semigroup.generators();
        let mut acc = IntVector::zeros(self.semigroup.ambient_dim());
        for &j in idx {
            let Some(h) = gens.get(j) else {
                return input(format!("generator index {} out of range 1..={}", j + 1, gens.len()));
            };
            acc = &acc - h;
        }
        Ok(acc)
    }
}
