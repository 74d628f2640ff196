//! Affine semigroups `H ⊂ ℤᵐ` given by generators, with exact membership
//! tests for `H` and for the group `ℤH`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bipartite::flow::FlowNetwork;
use crate::bipartite::gn::gn_membership_i64;
use crate::bipartite::BipartiteGraph;
use crate::error::{check_dim, input, Error, Result};
use crate::linalg::{kernel_basis, rank, ColumnLatticeSolver, IntMatrix, IntVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    GenericSearch,
    NumericalDp,
    BipartiteFlow,
    GnClosedForm,
}

/// Oracle requested in a semigroup file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleChoice {
    #[default]
    Auto,
    Search,
    Dp,
    Flow,
}

/// Memo entries kept before the search cache is flushed.
const SEARCH_CACHE_LIMIT: usize = 1 << 22;

/// Depth-first subtraction of generators, memoized on the exact vector.
/// Requires nonnegative generators, so the coordinate sum strictly decreases.
#[derive(Debug, Default)]
struct SearchOracle {
    gens: Vec<Vec<i64>>,
    memo: Mutex<HashMap<Vec<i64>, bool>>,
}

impl SearchOracle {
    fn new(gens: Vec<Vec<i64>>) -> Self {
        SearchOracle { gens, memo: Mutex::new(HashMap::new()) }
    }

    fn contains(&self, a: &[i64]) -> bool {
        let mut work = a.to_vec();
        self.search(&mut work)
    }

    fn search(&self, a: &mut Vec<i64>) -> bool {
        if a.iter().any(|&x| x < 0) {
            return false;
        }
        if a.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(&known) = self.memo.lock().unwrap().get(a.as_slice()) {
            return known;
        }
        let mut found = false;
        for g in &self.gens {
            if a.iter().zip(g).any(|(x, y)| x < y) {
                continue;
            }
            a.iter_mut().zip(g).for_each(|(x, y)| *x -= y);
            found = self.search(a);
            a.iter_mut().zip(g).for_each(|(x, y)| *x += y);
            if found {
                break;
            }
        }
        let mut memo = self.memo.lock().unwrap();
        if memo.len() >= SEARCH_CACHE_LIMIT {
            memo.clear();
        }
        memo.insert(a.clone(), found);
        found
    }
}

/// Coin-problem table for a numerical semigroup. Everything at or above the
/// conductor is a member.
#[derive(Debug)]
struct NumericalDp {
    gens: Vec<u64>,
    gcd: u64,
    table: OnceLock<(Vec<bool>, u64)>,
}

impl NumericalDp {
    fn new(gens: Vec<u64>) -> Self {
        let gcd = gens.iter().fold(0u64, |g, &x| g.gcd(&x));
        NumericalDp { gens, gcd, table: OnceLock::new() }
    }

    fn table(&self) -> &(Vec<bool>, u64) {
        self.table.get_or_init(|| {
            let gens: Vec<u64> = self.gens.iter().map(|g| g / self.gcd).collect();
            let smallest = *gens.iter().min().unwrap() as usize;
            let mut member = vec![true];
            let mut run = 1usize;
            let mut x = 0usize;
            while run < smallest {
                x += 1;
                let m = gens.iter().any(|&g| g as usize <= x && member[x - g as usize]);
                member.push(m);
                run = if m { run + 1 } else { 0 };
            }
            // member[x + 1 - smallest ..= x] are all true, so everything from
            // there on is a member.
            let conductor = (x + 1 - smallest) as u64;
            (member, conductor)
        })
    }

    fn contains(&self, a: &BigInt) -> bool {
        if a.is_negative() {
            return false;
        }
        let g = BigInt::from(self.gcd);
        let (q, r) = a.div_rem(&g);
        if !r.is_zero() {
            return false;
        }
        let (table, conductor) = self.table();
        match q.to_u64() {
            Some(v) if v < *conductor => table[v as usize],
            _ => true,
        }
    }
}

#[derive(Debug)]
enum Oracle {
    Search(SearchOracle),
    Dp(NumericalDp),
    Flow(Arc<FlowNetwork>),
    Gn(usize),
}

impl Oracle {
    fn kind(&self) -> OracleKind {
        match self {
            Oracle::Search(_) => OracleKind::GenericSearch,
            Oracle::Dp(_) => OracleKind::NumericalDp,
            Oracle::Flow(_) => OracleKind::BipartiteFlow,
            Oracle::Gn(_) => OracleKind::GnClosedForm,
        }
    }

    // Caches are per instance: clones start empty.
    fn fresh_clone(&self) -> Self {
        match self {
            Oracle::Search(s) => Oracle::Search(SearchOracle::new(s.gens.clone())),
            Oracle::Dp(d) => Oracle::Dp(NumericalDp::new(d.gens.clone())),
            Oracle::Flow(f) => Oracle::Flow(Arc::clone(f)),
            Oracle::Gn(n) => Oracle::Gn(*n),
        }
    }
}

/// A finitely generated subsemigroup of ℤᵐ with a membership oracle.
#[derive(Debug)]
pub struct AffineSemigroup {
    ambient_dim: usize,
    generators: Vec<IntVector>,
    small_gens: Option<Vec<Vec<i64>>>,
    oracle: Oracle,
    group: OnceLock<ColumnLatticeSolver>,
}

impl Clone for AffineSemigroup {
    fn clone(&self) -> Self {
        AffineSemigroup {
            ambient_dim: self.ambient_dim,
            generators: self.generators.clone(),
            small_gens: self.small_gens.clone(),
            oracle: self.oracle.fresh_clone(),
            group: self.group.clone(),
        }
    }
}

fn validate_generators(ambient_dim: usize, generators: &[IntVector]) -> Result<()> {
    for (i, g) in generators.iter().enumerate() {
        check_dim(ambient_dim, g.len())?;
        if g.is_zero() {
            return input(format!("generator {} is zero", i + 1));
        }
        if generators[..i].contains(g) {
            return input(format!("generator {} repeats an earlier generator", i + 1));
        }
    }
    Ok(())
}

/// Reads generators of the form δᵢ+δⱼ (i ≠ j) as a graph; `None` otherwise.
fn as_edge_vectors(ambient_dim: usize, generators: &[IntVector]) -> Option<Vec<(usize, usize)>> {
    generators
        .iter()
        .map(|g| {
            let support: Vec<usize> = (0..ambient_dim).filter(|&i| !g.get(i).is_zero()).collect();
            let ones = support.iter().all(|&i| g.get(i) == &BigInt::from(1));
            (support.len() == 2 && ones).then(|| (support[0], support[1]))
        })
        .collect()
}

impl AffineSemigroup {
    pub fn new(ambient_dim: usize, generators: Vec<IntVector>, choice: OracleChoice) -> Result<Self> {
        validate_generators(ambient_dim, &generators)?;
        let small_gens: Option<Vec<Vec<i64>>> = generators.iter().map(IntVector::to_i64s).collect();
        let nonneg = generators.iter().all(|g| g.iter().all(|x| !x.is_negative()));
        let edge_graph = as_edge_vectors(ambient_dim, &generators)
            .and_then(|edges| BipartiteGraph::new(ambient_dim, edges).ok());

        let oracle = match choice {
            OracleChoice::Flow => {
                let Some(g) = edge_graph else {
                    return input("flow oracle needs generators δi+δj of a bipartite graph");
                };
                Oracle::Flow(Arc::new(FlowNetwork::new(&g)))
            }
            OracleChoice::Dp => {
                if ambient_dim != 1 {
                    return input("dp oracle needs ambient dimension 1");
                }
                Self::dp_oracle(&generators)?
            }
            OracleChoice::Search => Self::search_oracle(nonneg, &small_gens)?,
            OracleChoice::Auto => {
                if ambient_dim == 1 {
                    Self::dp_oracle(&generators)?
                } else if let Some(g) = edge_graph {
                    Oracle::Flow(Arc::new(FlowNetwork::new(&g)))
                } else {
                    Self::search_oracle(nonneg, &small_gens)?
                }
            }
        };
        Ok(AffineSemigroup { ambient_dim, generators, small_gens, oracle, group: OnceLock::new() })
    }

    fn dp_oracle(generators: &[IntVector]) -> Result<Oracle> {
        let gens: Option<Vec<u64>> = generators.iter().map(|g| g.get(0).to_u64()).collect();
        match gens {
            Some(gens) => Ok(Oracle::Dp(NumericalDp::new(gens))),
            None => input("dp oracle needs positive generators that fit in 64 bits"),
        }
    }

    fn search_oracle(nonneg: bool, small: &Option<Vec<Vec<i64>>>) -> Result<Oracle> {
        if !nonneg {
            return input("generic membership search needs nonnegative generators");
        }
        match small {
            Some(gens) => Ok(Oracle::Search(SearchOracle::new(gens.clone()))),
            None => input("generator entries too large for membership search"),
        }
    }

    /// The edge ring semigroup of a bipartite graph, with the flow oracle.
    pub fn edge_ring(graph: &BipartiteGraph) -> Self {
        let generators = graph.edge_vectors();
        let small_gens = generators.iter().map(IntVector::to_i64s).collect();
        AffineSemigroup {
            ambient_dim: graph.vertex_count(),
            generators,
            small_gens,
            oracle: Oracle::Flow(Arc::new(FlowNetwork::new(graph))),
            group: OnceLock::new(),
        }
    }

    /// The same generators, decided by generic search instead.
    pub fn with_search_oracle(&self) -> Result<Self> {
        AffineSemigroup::new(self.ambient_dim, self.generators.clone(), OracleChoice::Search)
    }

    /// Switches to the closed-form membership test for `H(Gₙ)`; the
    /// generators must be those of `build_gn(n)`.
    pub fn with_gn_closed_form(&self, n: usize) -> Result<Self> {
        let gn = crate::bipartite::gn::build_gn(n)?;
        if gn.edge_vectors() != self.generators {
            return input(format!("generators are not those of G_{n}"));
        }
        let mut s = self.clone();
        s.oracle = Oracle::Gn(n);
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn oracle_kind(&self) -> OracleKind {
        self.oracle.kind()
    }

    /// The m×n matrix whose columns are the generators.
    pub fn generator_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient_dim, &self.generators)
            .expect("generators validated at construction")
            .transpose()
    }

    fn group_solver(&self) -> &ColumnLatticeSolver {
        self.group.get_or_init(|| ColumnLatticeSolver::new(&self.generator_matrix()))
    }

    /// Whether `a ∈ ℤH`.
    pub fn in_group(&self, a: &IntVector) -> Result<bool> {
        check_dim(self.ambient_dim, a.len())?;
        self.group_solver().contains(a)
    }

    /// Whether `a ∈ H`.
    pub fn in_semigroup(&self, a: &IntVector) -> Result<bool> {
        check_dim(self.ambient_dim, a.len())?;
        if let Oracle::Dp(dp) = &self.oracle {
            return Ok(dp.contains(a.get(0)));
        }
        match a.to_i64s() {
            Some(small) => Ok(self.contains_i64(&small)),
            // Every generator oracle other than dp works on nonnegative
            // generators, so a negative entry rules membership out.
            None if a.iter().any(Signed::is_negative) => Ok(false),
            None => Err(Error::OutOfRange(a.to_string())),
        }
    }

    /// Membership for a vector of machine integers of the ambient length.
    pub fn contains_i64(&self, a: &[i64]) -> bool {
        debug_assert_eq!(a.len(), self.ambient_dim);
        match &self.oracle {
            Oracle::Search(s) => s.contains(a),
            Oracle::Dp(d) => d.contains(&BigInt::from(a[0])),
            Oracle::Flow(f) => f.contains(a),
            Oracle::Gn(n) => gn_membership_i64(*n, a),
        }
    }

    /// Generators as machine integers, when they fit.
    pub fn small_generators(&self) -> Option<&[Vec<i64>]> {
        self.small_gens.as_deref()
    }

    /// The degree `h(v) = Σ_{v(i) ≥ 0} v(i)·hᵢ`.
    pub fn h_of(&self, v: &IntVector) -> Result<IntVector> {
        check_dim(self.generators.len(), v.len())?;
        let mut acc = vec![BigInt::zero(); self.ambient_dim];
        for (c, g) in v.iter().zip(&self.generators) {
            if c.is_positive() {
                for (x, y) in acc.iter_mut().zip(g.iter()) {
                    *x += c * y;
                }
            }
        }
        Ok(IntVector::new(acc))
    }

    /// `Σ_{v(i) ≤ 0} −v(i)·hᵢ`, which equals `h_of(v)` on the relation lattice.
    pub fn h_of_negative_part(&self, v: &IntVector) -> Result<IntVector> {
        self.h_of(&-v)
    }

    /// A ℤ-basis of the relation lattice `ker(ℤⁿ → ℤᵐ, εᵢ ↦ hᵢ)`.
    pub fn relation_lattice(&self) -> IntMatrix {
        kernel_basis(&self.generator_matrix())
    }

    pub fn relation_rank(&self) -> usize {
        self.generators.len() - rank(&self.generator_matrix())
    }
}

/// Semigroup file layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemigroupFile {
    pub ambient_dim: usize,
    pub generators: Vec<IntVector>,
    #[serde(default)]
    pub oracle: OracleChoice,
}

impl SemigroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("semigroup file: {e}")))
    }

    pub fn build(&self) -> Result<AffineSemigroup> {
        AffineSemigroup::new(self.ambient_dim, self.generators.clone(), self.oracle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerical(gens: &[i64]) -> AffineSemigroup {
        let g = gens.iter().map(|&x| IntVector::from_i64s(&[x])).collect();
        AffineSemigroup::new(1, g, OracleChoice::Auto).unwrap()
    }

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    #[test]
    fn numerical_membership_matches_table() {
        // ⟨3,4,5⟩ = {0,3,4,5,6,...}
        let s = numerical(&[3, 4, 5]);
        assert_eq!(s.oracle_kind(), OracleKind::NumericalDp);
        let expected = [true, false, false, true, true, true, true, true, true];
        for (a, &e) in expected.iter().enumerate() {
            assert_eq!(s.in_semigroup(&v(&[a as i64])).unwrap(), e, "a = {a}");
        }
        assert!(!s.in_semigroup(&v(&[-3])).unwrap());
        let huge = IntVector::new(vec![BigInt::from(10).pow(40)]);
        assert!(s.in_semigroup(&huge).unwrap());
    }

    #[test]
    fn numerical_dp_agrees_with_search() {
        for gens in [[3i64, 4, 5], [4, 5, 6], [6, 10, 15], [5, 7, 11]] {
            let dp = numerical(&gens);
            let g = gens.iter().map(|&x| v(&[x])).collect();
            let search = AffineSemigroup::new(1, g, OracleChoice::Search).unwrap();
            for a in -3..60 {
                assert_eq!(
                    dp.in_semigroup(&v(&[a])).unwrap(),
                    search.in_semigroup(&v(&[a])).unwrap(),
                    "{gens:?} at {a}"
                );
            }
        }
    }

    #[test]
    fn non_coprime_numerical_semigroup() {
        let s = numerical(&[4, 6]);
        assert!(!s.in_semigroup(&v(&[2])).unwrap());
        assert!(s.in_semigroup(&v(&[10])).unwrap());
        assert!(!s.in_semigroup(&v(&[11])).unwrap());
        assert!(s.in_group(&v(&[2])).unwrap());
        assert!(!s.in_group(&v(&[3])).unwrap());
    }

    #[test]
    fn group_membership() {
        let s = numerical(&[4, 5, 6]);
        assert!(s.in_group(&v(&[0])).unwrap());
        assert!(s.in_group(&v(&[1])).unwrap());
        assert!(matches!(s.in_group(&v(&[1, 2])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn degrees() {
        let s = numerical(&[3, 4, 5]);
        assert_eq!(s.h_of(&v(&[0, 0, 0])).unwrap(), v(&[0]));
        assert_eq!(s.h_of(&v(&[3, -1, -1])).unwrap(), v(&[9]));
        assert_eq!(s.h_of_negative_part(&v(&[3, -1, -1])).unwrap(), v(&[9]));
    }

    #[test]
    fn relation_lattice_shapes() {
        let s = numerical(&[3, 4, 5]);
        let l = s.relation_lattice();
        assert_eq!(l.rows(), 2);
        for row in l.row_vectors() {
            assert_eq!(s.h_of(&row).unwrap(), s.h_of_negative_part(&row).unwrap());
        }
        let std = AffineSemigroup::new(
            3,
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])],
            OracleChoice::Auto,
        )
        .unwrap();
        assert_eq!(std.relation_lattice().rows(), 0);
        assert_eq!(std.oracle_kind(), OracleKind::GenericSearch);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(AffineSemigroup::new(1, vec![v(&[0])], OracleChoice::Auto).is_err());
        assert!(AffineSemigroup::new(1, vec![v(&[2]), v(&[2])], OracleChoice::Auto).is_err());
        assert!(AffineSemigroup::new(2, vec![v(&[1, -1])], OracleChoice::Search).is_err());
        assert!(AffineSemigroup::new(2, vec![v(&[1, 1])], OracleChoice::Dp).is_err());
    }

    #[test]
    fn semigroup_file_auto_detects_edge_ring() {
        let f = SemigroupFile::from_json(
            r#"{"ambient_dim": 4, "generators": [[1,1,0,0],[0,1,1,0],[0,0,1,1],[1,0,0,1]]}"#,
        )
        .unwrap();
        let s = f.build().unwrap();
        assert_eq!(s.oracle_kind(), OracleKind::BipartiteFlow);
        assert!(s.in_semigroup(&v(&[1, 1, 1, 1])).unwrap());
        assert!(!s.in_semigroup(&v(&[2, 0, 0, 0])).unwrap());
    }
}
