//! Checking candidate `i`-separations `L′ ⊂ ℤⁿ⁺¹` of a lattice `L ⊂ ℤⁿ`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, input, Error, Result};
use crate::linalg::{hnf, maximal_minors_gcd, rank, saturation_index, same_lattice, IntMatrix, IntVector};

pub const MINIMALITY_CAVEAT: &str = "certified modulo minimal-generation of the lifted system";

/// `πᵢ`: adds the last coordinate onto coordinate `i` (0-based) and drops it.
pub fn fold(w: &IntVector, i: usize) -> IntVector {
    let n = w.len() - 1;
    let mut out: Vec<_> = w.entries()[..n].to_vec();
    out[i] += w.get(n);
    IntVector::new(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationCandidate {
    pub base_dim: usize,
    /// 0-based.
    pub sep_index: usize,
    /// Rows span `L′ ⊂ ℤⁿ⁺¹`.
    pub lattice: IntMatrix,
    pub base_gens: Vec<IntVector>,
    pub lifted_gens: Vec<IntVector>,
}

/// Candidate file layout. `sep_index` is 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateFile {
    pub base_dim: usize,
    pub sep_index: usize,
    pub lattice: Vec<IntVector>,
    pub base_gens: Vec<IntVector>,
    pub lifted_gens: Vec<IntVector>,
}

impl CandidateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("candidate file: {e}")))
    }

    pub fn build(&self) -> Result<SeparationCandidate> {
        if self.sep_index == 0 || self.sep_index > self.base_dim {
            return input(format!("sep_index must lie in 1..={}, got {}", self.base_dim, self.sep_index));
        }
        Ok(SeparationCandidate {
            base_dim: self.base_dim,
            sep_index: self.sep_index - 1,
            lattice: IntMatrix::from_rows(self.base_dim + 1, &self.lattice)?,
            base_gens: self.base_gens.clone(),
            lifted_gens: self.lifted_gens.clone(),
        })
    }

    pub fn from_candidate(c: &SeparationCandidate) -> Self {
        CandidateFile {
            base_dim: c.base_dim,
            sep_index: c.sep_index + 1,
            lattice: c.lattice.row_vectors(),
            base_gens: c.base_gens.clone(),
            lifted_gens: c.lifted_gens.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checklist {
    pub checks: Vec<Check>,
    pub passed: bool,
    pub note: &'static str,
}

impl Checklist {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

fn validate(c: &SeparationCandidate, base: &IntMatrix) -> Result<()> {
    let n = c.base_dim;
    if c.sep_index >= n {
        return input(format!("separation index {} outside 1..={}", c.sep_index + 1, n));
    }
    check_dim(n + 1, c.lattice.cols())?;
    check_dim(n, base.cols())?;
    check_dim(c.base_gens.len(), c.lifted_gens.len())?;
    for v in &c.base_gens {
        check_dim(n, v.len())?;
    }
    for w in &c.lifted_gens {
        check_dim(n + 1, w.len())?;
    }
    Ok(())
}

/// Evaluates every checkable condition of an `i`-separation of the lattice
/// spanned by the rows of `base`.
pub fn verify_separation(c: &SeparationCandidate, base: &IntMatrix) -> Result<Checklist> {
    validate(c, base)?;
    let (n, i) = (c.base_dim, c.sep_index);
    let mut checks = Vec::new();

    let lifted = hnf(&c.lattice);
    let lifted_basis = lifted.basis();
    let (r_new, r_old) = (lifted.rank(), rank(base));
    checks.push(Check {
        name: "rank",
        passed: r_new == r_old,
        detail: format!("rank L' = {r_new}, rank L = {r_old}"),
    });

    let (sat_ok, sat_detail) = if lifted_basis.rows() == 0 {
        (true, "L' = 0".to_string())
    } else {
        let g = maximal_minors_gcd(&lifted_basis)?;
        let index = saturation_index(&lifted_basis);
        if g != index {
            return Err(Error::Assertion(format!("maximal minors gcd {g} differs from Hermite index {index}")));
        }
        (g.is_one(), format!("gcd of maximal minors = {g}"))
    };
    checks.push(Check { name: "saturated", passed: sat_ok, detail: sat_detail });

    let projected: Vec<IntVector> = lifted_basis.row_vectors().iter().map(|w| fold(w, i)).collect();
    let projected = IntMatrix::from_rows(n, &projected)?;
    let proj_ok = same_lattice(&projected, base);
    checks.push(Check {
        name: "projection",
        passed: proj_ok,
        detail: format!("pi_{}(L') {} L", i + 1, if proj_ok { "=" } else { "≠" }),
    });

    let outside: Vec<usize> = (0..c.lifted_gens.len()).filter(|&j| !lifted.contains(&c.lifted_gens[j])).collect();
    checks.push(Check {
        name: "lifted_in_lattice",
        passed: outside.is_empty(),
        detail: if outside.is_empty() {
            "every w_j lies in L'".to_string()
        } else {
            format!("w_j outside L' for j = {:?}", outside.iter().map(|j| j + 1).collect::<Vec<_>>())
        },
    });

    let bad_sign: Vec<usize> = (0..c.lifted_gens.len())
        .filter(|&j| {
            let w = &c.lifted_gens[j];
            (w.get(i) * w.get(n)).is_negative()
        })
        .collect();
    checks.push(Check {
        name: "sign",
        passed: bad_sign.is_empty(),
        detail: if bad_sign.is_empty() {
            format!("w_j({}) * w_j({}) >= 0 for all j", i + 1, n + 1)
        } else {
            format!("sign condition fails for j = {:?}", bad_sign.iter().map(|j| j + 1).collect::<Vec<_>>())
        },
    });

    let columns: Vec<IntVector> =
        c.lifted_gens.iter().map(|w| IntVector::new(vec![w.get(n).clone(), w.get(i).clone()])).collect();
    let col_rank = rank(&IntMatrix::from_rows(2, &columns)?);
    checks.push(Check {
        name: "independent_columns",
        passed: col_rank == 2,
        detail: format!("columns {} and {} of the lifted generators have rank {}", n + 1, i + 1, col_rank),
    });

    let mut mismatched = Vec::new();
    let mut flipped = Vec::new();
    for (j, (v, w)) in c.base_gens.iter().zip(&c.lifted_gens).enumerate() {
        let p = fold(w, i);
        if &p == v {
            continue;
        }
        if p == -v {
            flipped.push(j + 1);
        } else {
            mismatched.push(j + 1);
        }
    }
    let map_detail = match (mismatched.is_empty(), flipped.is_empty()) {
        (true, true) => "pi_i(w_j) = v_j for all j".to_string(),
        (true, false) => format!("pi_i(w_j) = -v_j (same binomial up to sign) for j = {flipped:?}"),
        _ => format!("pi_i(w_j) ≠ ±v_j for j = {mismatched:?}"),
    };
    checks.push(Check { name: "generator_map", passed: mismatched.is_empty(), detail: map_detail });

    let base_herm = hnf(base);
    let stray: Vec<usize> = (0..c.base_gens.len()).filter(|&j| !base_herm.contains(&c.base_gens[j])).collect();
    checks.push(Check {
        name: "base_in_lattice",
        passed: stray.is_empty(),
        detail: if stray.is_empty() {
            "every v_j lies in L".to_string()
        } else {
            format!("v_j outside L for j = {:?}", stray.iter().map(|j| j + 1).collect::<Vec<_>>())
        },
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(Checklist { checks, passed, note: MINIMALITY_CAVEAT })
}

/// `L × {0}` with `wⱼ = (vⱼ, 0)`: the excluded trivial lift.
pub fn trivial_candidate(base: &IntMatrix, gens: &[IntVector], i: usize) -> Result<SeparationCandidate> {
    let n = base.cols();
    let pad = |v: &IntVector| {
        let mut e = v.entries().to_vec();
        e.push(Zero::zero());
        IntVector::new(e)
    };
    let rows: Vec<IntVector> = base.row_vectors().iter().map(pad).collect();
    Ok(SeparationCandidate {
        base_dim: n,
        sep_index: i,
        lattice: IntMatrix::from_rows(n + 1, &rows)?,
        base_gens: gens.to_vec(),
        lifted_gens: gens.iter().map(pad).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    fn l345() -> (IntMatrix, Vec<IntVector>) {
        let gens = vec![v(&[3, -1, -1]), v(&[-1, 2, -1]), v(&[-2, -1, 2])];
        (IntMatrix::from_rows(3, &gens).unwrap(), gens)
    }

    #[test]
    fn fold_adds_last_coordinate() {
        assert_eq!(fold(&v(&[2, -1, -1, 1]), 0), v(&[3, -1, -1]));
        assert_eq!(fold(&v(&[0, 2, -1, -1]), 2), v(&[0, 2, -2]));
    }

    #[test]
    fn case_one_lift_of_345_passes() {
        let (base, gens) = l345();
        let lifted = vec![v(&[2, -1, -1, 1]), v(&[0, 2, -1, -1]), v(&[-2, -1, 2, 0])];
        let c = SeparationCandidate {
            base_dim: 3,
            sep_index: 0,
            lattice: IntMatrix::from_rows(4, &lifted).unwrap(),
            base_gens: gens,
            lifted_gens: lifted,
        };
        let r = verify_separation(&c, &base).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.note, MINIMALITY_CAVEAT);
    }

    #[test]
    fn trivial_lift_fails_independence() {
        let (base, gens) = l345();
        let c = trivial_candidate(&base, &gens, 0).unwrap();
        let r = verify_separation(&c, &base).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failures(), vec!["independent_columns"]);
    }

    #[test]
    fn wrong_sign_and_unsaturated_lifts_fail() {
        let (base, gens) = l345();
        let lifted = vec![v(&[4, -1, -1, -1]), v(&[-2, 2, -1, 1]), v(&[-2, -1, 2, 0])];
        let c = SeparationCandidate {
            base_dim: 3,
            sep_index: 0,
            lattice: IntMatrix::from_rows(4, &lifted).unwrap(),
            base_gens: gens.clone(),
            lifted_gens: lifted,
        };
        let r = verify_separation(&c, &base).unwrap();
        assert!(!r.check("sign").unwrap().passed);

        let doubled = vec![v(&[4, -2, -2, 2]), v(&[0, 2, -1, -1])];
        let c = SeparationCandidate {
            base_dim: 3,
            sep_index: 0,
            lattice: IntMatrix::from_rows(4, &doubled).unwrap(),
            base_gens: vec![],
            lifted_gens: vec![],
        };
        let r = verify_separation(&c, &base).unwrap();
        assert!(!r.check("saturated").unwrap().passed);
        assert!(!r.check("projection").unwrap().passed);
    }

    #[test]
    fn dimension_errors() {
        let (base, gens) = l345();
        let mut c = trivial_candidate(&base, &gens, 0).unwrap();
        c.lifted_gens.pop();
        assert!(matches!(verify_separation(&c, &base), Err(Error::DimensionMismatch { .. })));
        let c = trivial_candidate(&base, &gens, 0).unwrap();
        let narrow = IntMatrix::from_i64_rows(&[[1, -1]]);
        assert!(verify_separation(&c, &narrow).is_err());
    }

    #[test]
    fn candidate_file_is_one_based() {
        let text = r#"{"base_dim": 3, "sep_index": 1, "lattice": [[2,-1,-1,1],[0,2,-1,-1]],
                       "base_gens": [[3,-1,-1]], "lifted_gens": [[2,-1,-1,1]]}"#;
        let c = CandidateFile::from_json(text).unwrap().build().unwrap();
        assert_eq!(c.sep_index, 0);
        let bad = text.replace("\"sep_index\": 1", "\"sep_index\": 0");
        assert!(CandidateFile::from_json(&bad).unwrap().build().is_err());
    }
}
