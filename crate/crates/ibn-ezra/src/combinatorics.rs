//! Binomial coefficients the way the Sefer HaOlam derives them: the
//! triangular formula C(n,2) = 1 + 2 + ... + (n-1) = (n-1)n/2 and the
//! hockey-stick expansion C(n,k) = C(n-1,k-1) + C(n-2,k-1) + ... +
//! C(k-1,k-1), applied recursively until the triangular formula (or
//! direct enumeration) takes over. Every value is produced together
//! with the full derivation tree that justifies it.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::limits::{Error, Limits, Result, ENUMERATION_MAX_N};

/// An (n, k) pair identifying one binomial coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinomialQuery {
    n: u64,
    k: u64,
}

impl BinomialQuery {
    pub fn new(n: u64, k: u64, limits: &Limits) -> Result<Self> {
        if k > n {
            return Err(Error::KOutOfRange { n, k });
        }
        limits.check(n)?;
        Ok(BinomialQuery { n, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

/// Which historical rule produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationRule {
    /// C(n,2) as the sum 1 + 2 + ... + (n-1), evaluated as (n-1)n/2.
    TriangularFormula,
    /// C(n,k) as the sum of C(m,k-1) for m = n-1 down to k-1.
    HockeyStick,
    /// Explicit generation and counting of k-subsets.
    DirectEnumeration,
    /// k = 0, k = 1, or k = n.
    Trivial,
}

impl DerivationRule {
    pub fn name(&self) -> &'static str {
        match self {
            DerivationRule::TriangularFormula => "TriangularFormula",
            DerivationRule::HockeyStick => "HockeyStick",
            DerivationRule::DirectEnumeration => "DirectEnumeration",
            DerivationRule::Trivial => "Trivial",
        }
    }
}

/// How to drive the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Hockey-stick down to k = 2, where the triangular formula
    /// terminates each branch.
    IbnEzra,
    /// Hockey-stick down to k = 2, terminated by direct enumeration.
    Eq2WithDirectBase,
    /// A single direct-enumeration node.
    DirectOnly,
}

/// One node of a derivation tree. Identical subderivations are shared,
/// so building a tree costs one node per distinct (n, k) even though
/// the logical expansion is exponential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationNode {
    pub rule: DerivationRule,
    pub query: BinomialQuery,
    pub value: BigUint,
    pub children: Vec<Arc<DerivationNode>>,
    /// Per-term values for TriangularFormula (1, 2, ..., n-1) and
    /// HockeyStick (the child values) nodes; empty otherwise.
    pub summands: Vec<BigUint>,
}

impl DerivationNode {
    /// Logical node count of the fully expanded tree. Walks shared
    /// subtrees once per occurrence; intended for small trees.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }
}

/// Sum of 1..=m, computed exactly as m(m+1)/2.
pub fn sum_one_to(m: u64, limits: &Limits) -> Result<BigUint> {
    limits.check(m)?;
    let m = BigUint::from(m);
    Ok(&m * (&m + 1u32) / 2u32)
}

/// C(n,2) as a TriangularFormula node, with summands 1..n-1.
///
/// For n = 0 or 1 there are no pairs; a Trivial node of value 0 is
/// returned so callers with tiny inputs work uniformly.
pub fn triangular_count(n: u64, limits: &Limits) -> Result<DerivationNode> {
    limits.check(n)?;
    if n < 2 {
        return Ok(DerivationNode {
            rule: DerivationRule::Trivial,
            query: BinomialQuery { n, k: n },
            value: BigUint::zero(),
            children: Vec::new(),
            summands: Vec::new(),
        });
    }
    let query = BinomialQuery::new(n, 2, limits)?;
    Ok(triangular_node(query))
}

fn triangular_node(query: BinomialQuery) -> DerivationNode {
    let n = BigUint::from(query.n);
    let value = (&n - 1u32) * &n / 2u32;
    let summands = (1..query.n).map(BigUint::from).collect();
    DerivationNode {
        rule: DerivationRule::TriangularFormula,
        query,
        value,
        children: Vec::new(),
        summands,
    }
}

fn trivial_node(query: BinomialQuery) -> DerivationNode {
    let value = if query.k == 1 {
        BigUint::from(query.n)
    } else {
        BigUint::one()
    };
    DerivationNode {
        rule: DerivationRule::Trivial,
        query,
        value,
        children: Vec::new(),
        summands: Vec::new(),
    }
}

fn enumeration_node(query: BinomialQuery) -> Result<DerivationNode> {
    if query.n > ENUMERATION_MAX_N {
        return Err(Error::EnumerationGuard {
            n: query.n,
            max: ENUMERATION_MAX_N,
        });
    }
    let value = BigUint::from(count_subsets(query.n, query.k));
    Ok(DerivationNode {
        rule: DerivationRule::DirectEnumeration,
        query,
        value,
        children: Vec::new(),
        summands: Vec::new(),
    })
}

// Choose-or-skip counting over {1..n}. Kept separate from the oracle
// crate's generate-and-count so the two routes share no code.
fn count_subsets(n: u64, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    count_subsets(n - 1, k - 1) + count_subsets(n - 1, k)
}

/// Derives C(q.n, q.k) under the given strategy, returning the full
/// derivation tree. The root value always equals the true coefficient.
pub fn binomial_derive(
    q: BinomialQuery,
    strategy: Strategy,
    limits: &Limits,
) -> Result<DerivationNode> {
    let mut memo: HashMap<(u64, u64), Arc<DerivationNode>> = HashMap::new();
    let root = derive_shared(q, strategy, limits, &mut memo)?;
    Ok((*root).clone())
}

fn derive_shared(
    q: BinomialQuery,
    strategy: Strategy,
    limits: &Limits,
    memo: &mut HashMap<(u64, u64), Arc<DerivationNode>>,
) -> Result<Arc<DerivationNode>> {
    if let Some(node) = memo.get(&(q.n, q.k)) {
        return Ok(Arc::clone(node));
    }
    limits.check(q.n)?;
    let node = if q.k <= 1 || q.k == q.n {
        trivial_node(q)
    } else {
        match strategy {
            Strategy::DirectOnly => enumeration_node(q)?,
            Strategy::IbnEzra | Strategy::Eq2WithDirectBase => {
                if q.k == 2 {
                    match strategy {
                        Strategy::IbnEzra => triangular_node(q),
                        _ => enumeration_node(q)?,
                    }
                } else {
                    hockey_stick_node(q, strategy, limits, memo)?
                }
            }
        }
    };
    let node = Arc::new(node);
    memo.insert((q.n, q.k), Arc::clone(&node));
    Ok(node)
}

fn hockey_stick_node(
    q: BinomialQuery,
    strategy: Strategy,
    limits: &Limits,
    memo: &mut HashMap<(u64, u64), Arc<DerivationNode>>,
) -> Result<DerivationNode> {
    // Children (n-1, k-1), (n-2, k-1), ..., (k-1, k-1), in that order.
    let mut children = Vec::with_capacity((q.n - q.k + 1) as usize);
    for m in (q.k - 1..q.n).rev() {
        let child_query = BinomialQuery::new(m, q.k - 1, limits)?;
        children.push(derive_shared(child_query, strategy, limits, memo)?);
    }
    let summands: Vec<BigUint> = children.iter().map(|c| c.value.clone()).collect();
    let value = summands.iter().sum();
    Ok(DerivationNode {
        rule: DerivationRule::HockeyStick,
        query: q,
        value,
        children,
        summands,
    })
}

/// Per-subset-size counts for a planet set, with optional listings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjunctionReport {
    pub planets: Vec<String>,
    pub min_size: u64,
    pub per_size: BTreeMap<u64, BigUint>,
    pub total: BigUint,
    pub subsets: Option<Vec<Vec<String>>>,
}

/// The seven classical planets, in the traditional order.
pub const CLASSICAL_PLANETS: [&str; 7] = [
    "Sun", "Moon", "Mercury", "Venus", "Mars", "Jupiter", "Saturn",
];

/// Counts the possible conjunctions (subsets of size >= min_size) of a
/// planet list, deriving each count with the IbnEzra strategy.
pub fn conjunction_census(
    planets: &[String],
    min_size: u64,
    list_subsets: bool,
    limits: &Limits,
) -> Result<ConjunctionReport> {
    if planets.is_empty() {
        return Err(Error::EmptyPlanetList);
    }
    if min_size < 1 {
        return Err(Error::MinSizeTooSmall(min_size));
    }
    for (i, name) in planets.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::EmptyPlanetName);
        }
        if planets[..i].contains(name) {
            return Err(Error::DuplicatePlanet(name.clone()));
        }
    }
    let n = planets.len() as u64;
    limits.check(n)?;

    let mut per_size = BTreeMap::new();
    let mut total = BigUint::zero();
    for s in min_size..=n {
        let node = binomial_derive(BinomialQuery::new(n, s, limits)?, Strategy::IbnEzra, limits)?;
        total += &node.value;
        per_size.insert(s, node.value);
    }

    let subsets = if list_subsets {
        let mut all = Vec::new();
        for s in min_size..=n {
            enumerate_subsets(planets, s as usize, &mut all);
        }
        Some(all)
    } else {
        None
    };

    Ok(ConjunctionReport {
        planets: planets.to_vec(),
        min_size,
        per_size,
        total,
        subsets,
    })
}

fn enumerate_subsets(planets: &[String], size: usize, out: &mut Vec<Vec<String>>) {
    let mut indices: Vec<usize> = Vec::with_capacity(size);
    enumerate_from(planets, size, 0, &mut indices, out);
}

fn enumerate_from(
    planets: &[String],
    size: usize,
    next: usize,
    indices: &mut Vec<usize>,
    out: &mut Vec<Vec<String>>,
) {
    if indices.len() == size {
        out.push(indices.iter().map(|&i| planets[i].clone()).collect());
        return;
    }
    for i in next..planets.len() {
        indices.push(i);
        enumerate_from(planets, size, i + 1, indices, out);
        indices.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn derive(n: u64, k: u64, strategy: Strategy) -> DerivationNode {
        binomial_derive(BinomialQuery::new(n, k, &limits()).unwrap(), strategy, &limits()).unwrap()
    }

    #[test]
    fn sum_one_to_twenty_is_two_hundred_ten() {
        assert_eq!(sum_one_to(20, &limits()).unwrap(), BigUint::from(210u32));
    }

    #[test]
    fn sum_one_to_zero_is_zero() {
        assert_eq!(sum_one_to(0, &limits()).unwrap(), BigUint::zero());
    }

    #[test]
    fn sum_one_to_matches_loop() {
        for m in 0..=1000u64 {
            let looped: u64 = (1..=m).sum();
            assert_eq!(sum_one_to(m, &limits()).unwrap(), BigUint::from(looped));
        }
    }

    #[test]
    fn sum_one_to_respects_limit() {
        let tight = Limits::new(10);
        assert!(matches!(
            sum_one_to(11, &tight),
            Err(Error::LimitExceeded { value: 11, n_max: 10 })
        ));
    }

    #[test]
    fn triangular_seven_is_twenty_one() {
        let node = triangular_count(7, &limits()).unwrap();
        assert_eq!(node.rule, DerivationRule::TriangularFormula);
        assert_eq!(node.value, BigUint::from(21u32));
        assert_eq!(node.summands, (1..7u32).map(BigUint::from).collect::<Vec<_>>());
    }

    #[test]
    fn triangular_six_is_fifteen() {
        assert_eq!(triangular_count(6, &limits()).unwrap().value, BigUint::from(15u32));
    }

    #[test]
    fn triangular_two_is_one() {
        assert_eq!(triangular_count(2, &limits()).unwrap().value, BigUint::one());
    }

    #[test]
    fn triangular_degenerates_to_trivial_zero() {
        for n in 0..2 {
            let node = triangular_count(n, &limits()).unwrap();
            assert_eq!(node.rule, DerivationRule::Trivial);
            assert_eq!(node.value, BigUint::zero());
        }
    }

    #[test]
    fn seven_choose_four_expansion() {
        let node = derive(7, 4, Strategy::IbnEzra);
        assert_eq!(node.value, BigUint::from(35u32));
        assert_eq!(node.rule, DerivationRule::HockeyStick);
        let child_queries: Vec<(u64, u64)> =
            node.children.iter().map(|c| (c.query.n(), c.query.k())).collect();
        assert_eq!(child_queries, vec![(6, 3), (5, 3), (4, 3), (3, 3)]);
    }

    #[test]
    fn seven_choose_three_is_thirty_five() {
        assert_eq!(derive(7, 3, Strategy::IbnEzra).value, BigUint::from(35u32));
    }

    #[test]
    fn seven_choose_two_is_twenty_one() {
        let node = derive(7, 2, Strategy::IbnEzra);
        assert_eq!(node.value, BigUint::from(21u32));
        assert_eq!(node.rule, DerivationRule::TriangularFormula);
    }

    #[test]
    fn k_equals_n_is_trivial() {
        for strategy in [Strategy::IbnEzra, Strategy::Eq2WithDirectBase, Strategy::DirectOnly] {
            let node = derive(5, 5, strategy);
            assert_eq!(node.rule, DerivationRule::Trivial);
            assert_eq!(node.value, BigUint::one());
        }
    }

    #[test]
    fn twelve_choose_five() {
        assert_eq!(derive(12, 5, Strategy::IbnEzra).value, BigUint::from(792u32));
    }

    #[test]
    fn direct_base_leaves_are_enumeration() {
        let node = derive(7, 4, Strategy::Eq2WithDirectBase);
        assert_eq!(node.value, BigUint::from(35u32));
        fn check(node: &DerivationNode) {
            if node.children.is_empty() {
                assert!(matches!(
                    node.rule,
                    DerivationRule::DirectEnumeration | DerivationRule::Trivial
                ));
            } else {
                assert_eq!(node.rule, DerivationRule::HockeyStick);
                node.children.iter().for_each(|c| check(c));
            }
        }
        check(&node);
    }

    #[test]
    fn enumeration_guard_refuses_large_n() {
        let q = BinomialQuery::new(26, 13, &limits()).unwrap();
        assert!(matches!(
            binomial_derive(q, Strategy::DirectOnly, &limits()),
            Err(Error::EnumerationGuard { n: 26, .. })
        ));
    }

    #[test]
    fn query_rejects_k_above_n() {
        assert!(matches!(
            BinomialQuery::new(3, 4, &limits()),
            Err(Error::KOutOfRange { n: 3, k: 4 })
        ));
    }

    #[test]
    fn query_rejects_n_above_limit() {
        assert!(BinomialQuery::new(2001, 1, &limits()).is_err());
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn census_of_seven_planets() {
        let planets = names(&CLASSICAL_PLANETS);
        let report = conjunction_census(&planets, 2, false, &limits()).unwrap();
        assert_eq!(report.total, BigUint::from(120u32));
        let expected: BTreeMap<u64, u32> =
            [(2, 21), (3, 35), (4, 35), (5, 21), (6, 7), (7, 1)].into_iter().collect();
        for (s, v) in expected {
            assert_eq!(report.per_size[&s], BigUint::from(v));
        }
    }

    #[test]
    fn census_of_two_planets() {
        let report = conjunction_census(&names(&["a", "b"]), 2, false, &limits()).unwrap();
        assert_eq!(report.total, BigUint::one());
    }

    #[test]
    fn census_of_four_planets() {
        let report = conjunction_census(&names(&["a", "b", "c", "d"]), 2, false, &limits()).unwrap();
        assert_eq!(report.total, BigUint::from(11u32));
    }

    #[test]
    fn census_listing_matches_counts() {
        let planets = names(&["w", "x", "y", "z"]);
        let report = conjunction_census(&planets, 2, true, &limits()).unwrap();
        let subsets = report.subsets.unwrap();
        assert_eq!(BigUint::from(subsets.len()), report.total);
        for (s, count) in &report.per_size {
            let of_size = subsets.iter().filter(|sub| sub.len() as u64 == *s).count();
            assert_eq!(BigUint::from(of_size), *count);
        }
        let mut dedup = subsets.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), subsets.len());
    }

    #[test]
    fn census_rejects_duplicates_and_empty() {
        assert!(matches!(
            conjunction_census(&names(&["a", "a"]), 2, false, &limits()),
            Err(Error::DuplicatePlanet(_))
        ));
        assert!(matches!(
            conjunction_census(&[], 2, false, &limits()),
            Err(Error::EmptyPlanetList)
        ));
    }
}
