//! Numerical semigroups with three generators: the invariants `cᵢ`, `rᵢₖ`,
//! the three structural cases, T¹ at `−hᵢ`, and explicit separations.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::linalg::{IntMatrix, IntVector};
use crate::semigroup::{AffineSemigroup, OracleChoice};
use crate::separation::SeparationCandidate;
use crate::t1::{Presentation, T1Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// All `rᵢⱼ > 0`; `v₁ + v₂ + v₃ = 0`.
    AllPositive,
    /// `c₁h₁ = c₂h₂ = c₃h₃`.
    ZeroPattern,
    /// `vₖ + vₗ = 0` for one pair; the ideal is a complete intersection.
    CompleteIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumSgp3Structure {
    pub generators: [u64; 3],
    pub c: [u64; 3],
    /// `r[i][k]` with `cᵢhᵢ = Σₖ r[i][k]·hₖ`; the diagonal is 0.
    pub r: [[u64; 3]; 3],
    pub case: Case,
    /// 0-based.
    pub ci_index: Option<usize>,
    /// `vᵢ = cᵢεᵢ − Σₖ rᵢₖεₖ`.
    pub v: [IntVector; 3],
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// All `(x, y) ≥ 0` with `x·a + y·b = target`, by increasing `x`.
fn representations(target: u64, a: u64, b: u64) -> Vec<(u64, u64)> {
    (0..=target / a).filter(|x| (target - x * a) % b == 0).map(|x| (x, (target - x * a) / b)).collect()
}

fn in_pair_semigroup(t: u64, a: u64, b: u64) -> bool {
    !representations(t, a, b).is_empty()
}

fn relation(i: usize, c: u64, k: usize, rk: u64, l: usize, rl: u64) -> IntVector {
    let mut v = [0i64; 3];
    v[i] = c as i64;
    v[k] = -(rk as i64);
    v[l] = -(rl as i64);
    IntVector::from_i64s(&v)
}

fn h(st: &NumSgp3Structure, i: usize) -> u64 {
    st.generators[i]
}

/// Invariants and case of `⟨h₁, h₂, h₃⟩`.
pub fn structure(h1: u64, h2: u64, h3: u64) -> Result<NumSgp3Structure> {
    let g = [h1, h2, h3];
    if g.contains(&0) {
        return input("generators must be positive");
    }
    if h1.gcd(&h2).gcd(&h3) != 1 {
        return input(format!("generators {h1}, {h2}, {h3} are not coprime"));
    }
    for i in 0..3 {
        let (k, l) = others(i);
        if g[i] == g[k] || g[i] == g[l] || in_pair_semigroup(g[i], g[k], g[l]) {
            return input(format!(
                "generator h{} = {} lies in the semigroup generated by the other two",
                i + 1,
                g[i]
            ));
        }
    }
    let mut c = [0u64; 3];
    let mut reps: Vec<Vec<(u64, u64)>> = Vec::with_capacity(3);
    for i in 0..3 {
        let (k, l) = others(i);
        let ci = (1..=g[k]).find(|&ci| in_pair_semigroup(ci * g[i], g[k], g[l])).expect("c = h_k always works");
        c[i] = ci;
        reps.push(representations(ci * g[i], g[k], g[l]));
    }
    let lex = |i: usize| reps[i][0];
    let mut r = [[0u64; 3]; 3];
    let set_r = |r: &mut [[u64; 3]; 3], i: usize, (x, y): (u64, u64)| {
        let (k, l) = others(i);
        r[i][k] = x;
        r[i][l] = y;
    };
    let v_of = |r: &[[u64; 3]; 3], i: usize| {
        let (k, l) = others(i);
        relation(i, c[i], k, r[i][k], l, r[i][l])
    };

    let degree = |i: usize| c[i] * g[i];
    let equal_pairs: Vec<(usize, usize)> =
        [(0, 1), (0, 2), (1, 2)].into_iter().filter(|&(k, l)| degree(k) == degree(l)).collect();

    let (case, ci_index) = if equal_pairs.len() == 3 {
        // v₁ = (c₁,−c₂,0), v₂ = (0,c₂,−c₃), v₃ = (−c₁,0,c₃)
        r[0][1] = c[1];
        r[1][2] = c[2];
        r[2][0] = c[0];
        (Case::ZeroPattern, None)
    } else if let [(k, l)] = equal_pairs[..] {
        let i = 3 - k - l;
        r[k][l] = c[l];
        r[l][k] = c[k];
        let both = reps[i].iter().copied().find(|&(x, y)| x > 0 && y > 0).ok_or_else(|| {
            Error::Assertion(format!("no representation of c{}h{} with both coefficients positive", i + 1, i + 1))
        })?;
        set_r(&mut r, i, both);
        (Case::CompleteIntersection, Some(i))
    } else {
        // First the lexicographically smallest choices, then any positive
        // combination summing to zero.
        (0..3).for_each(|i| set_r(&mut r, i, lex(i)));
        let sums_to_zero = |r: &[[u64; 3]; 3]| (0..3).fold(IntVector::zeros(3), |acc, i| &acc + &v_of(r, i)).is_zero();
        let positive = |r: &[[u64; 3]; 3]| (0..3).all(|i| (0..3).all(|k| i == k || r[i][k] > 0));
        if !(sums_to_zero(&r) && positive(&r)) {
            let mut found = false;
            'search: for &a in &reps[0] {
                for &b in &reps[1] {
                    for &d in &reps[2] {
                        let mut t = [[0u64; 3]; 3];
                        set_r(&mut t, 0, a);
                        set_r(&mut t, 1, b);
                        set_r(&mut t, 2, d);
                        if sums_to_zero(&t) && positive(&t) {
                            r = t;
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            if !found {
                return Err(Error::Assertion(format!(
                    "no positive representations with v1 + v2 + v3 = 0 for ({h1}, {h2}, {h3})"
                )));
            }
        }
        (Case::AllPositive, None)
    };
    let v = [v_of(&r, 0), v_of(&r, 1), v_of(&r, 2)];
    Ok(NumSgp3Structure { generators: g, c, r, case, ci_index, v })
}

impl NumSgp3Structure {
    pub fn semigroup(&self) -> AffineSemigroup {
        let gens = self.generators.iter().map(|&x| IntVector::from_i64s(&[x as i64])).collect();
        AffineSemigroup::new(1, gens, OracleChoice::Auto).expect("validated generators")
    }

    /// Vectors whose binomials minimally generate the toric ideal.
    pub fn minimal_generators(&self) -> Vec<IntVector> {
        match (self.case, self.ci_index) {
            (Case::AllPositive, _) => self.v.to_vec(),
            (Case::ZeroPattern, _) => vec![self.v[0].clone(), self.v[1].clone()],
            (Case::CompleteIntersection, Some(i)) => {
                let (k, _) = others(i);
                vec![self.v[i].clone(), self.v[k].clone()]
            }
            (Case::CompleteIntersection, None) => unreachable!("complete intersection carries its index"),
        }
    }

    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::new(self.semigroup(), self.minimal_generators())
    }

    /// Indices `j` (0-based) at which the relation lattice is separable.
    pub fn separable_indices(&self) -> Vec<usize> {
        (0..3).filter(|&j| Some(j) != self.ci_index).collect()
    }

    pub fn relation_lattice(&self) -> IntMatrix {
        self.semigroup().relation_lattice()
    }
}

/// `dim T¹` at `−h₁, −h₂, −h₃`.
pub fn t1_at_generators(st: &NumSgp3Structure) -> Result<[T1Report; 3]> {
    let p = st.presentation()?;
    let rep = |i: usize| p.t1_dim(&IntVector::from_i64s(&[-(h(st, i) as i64)]));
    Ok([rep(0)?, rep(1)?, rep(2)?])
}

/// `wⱼ = vⱼ − tⱼεᵢ + tⱼεₙ₊₁`.
fn lift(v: &IntVector, i: usize, t: i64) -> IntVector {
    let mut e: Vec<i64> = v.to_i64s().expect("small relation");
    e[i] -= t;
    e.push(t);
    IntVector::from_i64s(&e)
}

fn candidate(base: Vec<IntVector>, lifted: Vec<IntVector>, i: usize) -> SeparationCandidate {
    SeparationCandidate {
        base_dim: 3,
        sep_index: i,
        lattice: IntMatrix::from_rows(4, &lifted).expect("length-4 vectors"),
        base_gens: base,
        lifted_gens: lifted,
    }
}

/// An explicit `i`-separation (0-based `i`) of the relation lattice.
pub fn build_separation(st: &NumSgp3Structure, i: usize) -> Result<SeparationCandidate> {
    if i >= 3 {
        return input(format!("index {} outside 1..=3", i + 1));
    }
    match st.case {
        Case::AllPositive => {
            // split off one power of xᵢ from vᵢ and hand it to the next relation
            let t = |j: usize| -> i64 {
                if j == i {
                    1
                } else if j == (i + 1) % 3 {
                    -1
                } else {
                    0
                }
            };
            let lifted = (0..3).map(|j| lift(&st.v[j], i, t(j))).collect();
            Ok(candidate(st.v.to_vec(), lifted, i))
        }
        Case::ZeroPattern => {
            let pos = st.v.iter().position(|v| v.get(i).to_i64() == Some(st.c[i] as i64)).unwrap();
            let neg = st.v.iter().position(|v| v.get(i).to_i64() == Some(-(st.c[i] as i64))).unwrap();
            let base = vec![st.v[pos].clone(), st.v[neg].clone()];
            let lifted = vec![lift(&st.v[pos], i, 1), lift(&st.v[neg], i, 0)];
            Ok(candidate(base, lifted, i))
        }
        Case::CompleteIntersection => {
            let ci = st.ci_index.expect("complete intersection carries its index");
            if i == ci {
                return Err(Error::Precondition(format!("inseparable index {}", i + 1)));
            }
            let (k, _) = others(ci);
            let base = vec![st.v[ci].clone(), st.v[k].clone()];
            let lifted = vec![lift(&st.v[ci], i, -1), lift(&st.v[k], i, 0)];
            Ok(candidate(base, lifted, i))
        }
    }
}

/// The literal separations for cases (2) and (3), kept for
/// comparison; their checks fail because of sign and index slips.
pub fn literal_readings(st: &NumSgp3Structure) -> Vec<(String, SeparationCandidate)> {
    let c = |i: usize| st.c[i] as i64;
    let r = |i: usize, k: usize| st.r[i][k] as i64;
    let v = IntVector::from_i64s;
    match (st.case, st.ci_index) {
        (Case::ZeroPattern, _) => {
            let base = vec![st.v[0].clone(), st.v[2].clone()];
            let lifted = vec![v(&[c(0) - 1, c(1), 0, 1]), v(&[-c(0), 0, c(2), 0])];
            vec![("case (2), index 1, literal reading".to_string(), candidate(base, lifted, 0))]
        }
        (Case::CompleteIntersection, Some(i)) => {
            let (k, l) = others(i);
            let mut vb = [0i64; 3];
            vb[k] = -c(l);
            vb[l] = c(k);
            let mut wa = [0i64; 4];
            wa[k] = -r(i, k) + 1;
            wa[i] = c(i);
            wa[l] = r(i, l);
            wa[3] = -1;
            let mut wb = vb.to_vec();
            wb.push(0);
            let base = vec![st.v[i].clone(), v(&vb)];
            let lifted = vec![v(&wa), v(&wb)];
            vec![(format!("case (3), index {}, literal reading", k + 1), candidate(base, lifted, k))]
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::verify_separation;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    #[test]
    fn structure_345() {
        let s = structure(3, 4, 5).unwrap();
        assert_eq!(s.c, [3, 2, 2]);
        assert_eq!(s.case, Case::AllPositive);
        assert_eq!(s.v, [v(&[3, -1, -1]), v(&[-1, 2, -1]), v(&[-2, -1, 2])]);
    }

    #[test]
    fn structure_6_10_15() {
        let s = structure(6, 10, 15).unwrap();
        assert_eq!(s.c, [5, 3, 2]);
        assert_eq!(s.case, Case::ZeroPattern);
        assert_eq!(s.v, [v(&[5, -3, 0]), v(&[0, 3, -2]), v(&[-5, 0, 2])]);
    }

    #[test]
    fn structure_456() {
        let s = structure(4, 5, 6).unwrap();
        assert_eq!(s.c, [3, 2, 2]);
        assert_eq!(s.case, Case::CompleteIntersection);
        assert_eq!(s.ci_index, Some(1));
        assert_eq!(s.v[1], v(&[-1, 2, -1]));
        assert!((&s.v[0] + &s.v[2]).is_zero());
    }

    #[test]
    fn relations_hold() {
        for (a, b, c) in [(3, 4, 5), (4, 5, 6), (6, 10, 15), (5, 7, 11), (7, 9, 11), (8, 9, 12)] {
            let s = structure(a, b, c).unwrap();
            for i in 0..3 {
                let total: i64 = (0..3).map(|k| s.v[i].get(k).to_i64().unwrap() * s.generators[k] as i64).sum();
                assert_eq!(total, 0, "({a},{b},{c}) v{}", i + 1);
            }
        }
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(structure(2, 4, 6).is_err());
        let e = structure(3, 5, 8).unwrap_err();
        assert!(e.to_string().contains("h3"), "{e}");
        assert!(structure(3, 3, 4).is_err());
        assert!(structure(0, 3, 4).is_err());
    }

    #[test]
    fn t1_values() {
        let dims = |a, b, c| t1_at_generators(&structure(a, b, c).unwrap()).unwrap().map(|r| r.t1_dim);
        assert_eq!(dims(3, 4, 5), [1, 1, 1]);
        assert_eq!(dims(6, 10, 15), [1, 1, 1]);
        let d = dims(4, 5, 6);
        assert_eq!(d[1], 0);
        assert!(d[0] > 0 && d[2] > 0);
    }

    #[test]
    fn separations_verify() {
        for (a, b, c) in [(3, 4, 5), (4, 5, 6), (6, 10, 15), (5, 7, 11), (8, 9, 12)] {
            let s = structure(a, b, c).unwrap();
            let base = s.relation_lattice();
            for i in s.separable_indices() {
                let cand = build_separation(&s, i).unwrap();
                let r = verify_separation(&cand, &base).unwrap();
                assert!(r.passed, "({a},{b},{c}) index {}: {r:?}", i + 1);
            }
        }
    }

    #[test]
    fn explicit_lifts() {
        let s = structure(3, 4, 5).unwrap();
        let c = build_separation(&s, 0).unwrap();
        assert_eq!(c.lifted_gens, vec![v(&[2, -1, -1, 1]), v(&[0, 2, -1, -1]), v(&[-2, -1, 2, 0])]);
        let s = structure(4, 5, 6).unwrap();
        assert!(matches!(build_separation(&s, 1), Err(Error::Precondition(_))));
        let c = build_separation(&s, 0).unwrap();
        assert_eq!(c.lifted_gens, vec![v(&[0, 2, -1, -1]), v(&[3, 0, -2, 0])]);
    }

    #[test]
    fn printed_readings_fail() {
        for (a, b, c) in [(6, 10, 15), (4, 5, 6)] {
            let s = structure(a, b, c).unwrap();
            let base = s.relation_lattice();
            let readings = literal_readings(&s);
            assert_eq!(readings.len(), 1);
            for (_, cand) in readings {
                assert!(!verify_separation(&cand, &base).unwrap().passed);
            }
        }
        assert!(literal_readings(&structure(3, 4, 5).unwrap()).is_empty());
    }
}
