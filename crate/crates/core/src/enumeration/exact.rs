use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::distributions::{theorem2_rhs, ClassDistribution, CycleCountDistribution, Mass, Mode};
use crate::enumeration::{enumerate_maps, EdgeSchemeMode, EnumerationScope};
use crate::error::{Error, Result};
use crate::permcore::{class_members, CycleType};

/// Exact face-count law over a scope.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactFaceDistribution {
    pub maps: u64,
    /// Number of maps with each face count.
    pub counts: BTreeMap<usize, u64>,
    /// Number of maps of each genus.
    pub genus_counts: BTreeMap<usize, u64>,
    /// Genus of every map with a given face count (fixed by the Euler relation).
    pub genus_by_faces: BTreeMap<usize, usize>,
    /// On `k ∈ {1, …, |D|}`.
    pub distribution: CycleCountDistribution<BigRational>,
    pub expected_faces: BigRational,
}

/// Tallies `F(m)` over every map of the scope.
pub fn exact_face_distribution(scope: &EnumerationScope) -> Result<ExactFaceDistribution> {
    let darts = scope.graph.dart_count();
    let mut tally = vec![0u64; darts.max(1)];
    let mut counts = BTreeMap::new();
    let mut genus_counts = BTreeMap::new();
    let mut genus_by_faces = BTreeMap::new();
    let mut maps = 0u64;
    for m in enumerate_maps(scope)? {
        let f = m.face_count();
        maps += 1;
        *counts.entry(f).or_insert(0) += 1;
        let g = crate::mapcore::genus_from_faces(&scope.graph, f);
        *genus_counts.entry(g).or_insert(0) += 1;
        genus_by_faces.insert(f, g);
        if f >= 1 {
            tally[f - 1] += 1;
        }
    }
    let distribution = CycleCountDistribution::from_counts(darts.max(1), &tally, Mode::Exact)?;
    let expected_faces = distribution.mean();
    Ok(ExactFaceDistribution {
        maps,
        counts,
        genus_counts,
        genus_by_faces,
        distribution,
        expected_faces,
    })
}

/// `E[F]` over every map of `G` (either edge-scheme mode gives the same value).
pub fn exact_expected_faces(scope: &EnumerationScope) -> Result<BigRational> {
    Ok(exact_face_distribution(scope)?.expected_faces)
}

/// Exact laws of `ω_v` and `σ_v` over a scope.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactLocalDistribution {
    pub vertex: usize,
    pub maps: u64,
    pub omega_counts: BTreeMap<CycleType, u64>,
    pub sigma_counts: BTreeMap<CycleType, u64>,
    /// `L_v`.
    pub omega: ClassDistribution<BigRational>,
    /// The class mixture of `σ_v`.
    pub sigma: ClassDistribution<BigRational>,
    /// `Pr[ω_v odd]`.
    pub p: BigRational,
    /// `E[P_v]`, the mean number of fixed points of `σ_v`.
    pub expected_sigma_fixed_points: BigRational,
    /// `E[F(m − v)]` over the same maps.
    pub expected_faces_without_v: BigRational,
}

pub fn exact_local_distribution(
    scope: &EnumerationScope,
    v: usize,
) -> Result<ExactLocalDistribution> {
    scope.graph.check_vertex(v)?;
    let d = scope.graph.degree(v);
    if d == 0 {
        return Err(Error::InvalidArgument(format!(
            "vertex {} has degree 0",
            v + 1
        )));
    }
    let mut omega_counts = BTreeMap::new();
    let mut sigma_counts = BTreeMap::new();
    let mut faces_without_v = 0u64;
    let mut maps = 0u64;
    for m in enumerate_maps(scope)? {
        maps += 1;
        *omega_counts.entry(m.omega(v)?.cycle_type()).or_insert(0) += 1;
        *sigma_counts.entry(m.sigma(v)?.cycle_type()).or_insert(0) += 1;
        faces_without_v += m.remove_vertex(v)?.face_count() as u64;
    }
    let omega = ClassDistribution::from_counts(d, &omega_counts, Mode::Exact)?;
    let sigma: ClassDistribution<BigRational> =
        ClassDistribution::from_counts(d, &sigma_counts, Mode::Exact)?;
    let p = omega.odd_mass();
    let expected_sigma_fixed_points = sigma.expected_fixed_points();
    let expected_faces_without_v =
        BigRational::new(BigInt::from(faces_without_v), BigInt::from(maps));
    Ok(ExactLocalDistribution {
        vertex: v,
        maps,
        omega_counts,
        sigma_counts,
        omega,
        sigma,
        p,
        expected_sigma_fixed_points,
        expected_faces_without_v,
    })
}

/// `2E[F_{G−v}]/√(d−1)` with `E[F_{G−v}]` from enumerating `𝓜(G − v)`.
pub fn squared_tv_bound_exact(scope: &EnumerationScope, v: usize) -> Result<f64> {
    let d = scope.graph.degree(v);
    if d < 2 {
        return Err(Error::InvalidArgument("the bound needs deg(v) ≥ 2".into()));
    }
    let rest = EnumerationScope {
        graph: scope.graph.without_vertex(v)?,
        mode: EdgeSchemeMode::FixedCanonical,
        cap: scope.cap,
    };
    let e = exact_expected_faces(&rest)?;
    Ok(theorem2_rhs(Mass::to_f64(&e), d))
}

/// Largest `|C_α|·|C_β|` that [`brute_class_product`] will walk.
pub const BRUTE_PAIR_CAP: u64 = 30_000_000;

/// `P_{α,β}` by tallying `πσ` over every pair in `C_α × C_β`.
pub fn brute_class_product(
    alpha: &CycleType,
    beta: &CycleType,
) -> Result<ClassDistribution<BigRational>> {
    if alpha.n() != beta.n() {
        return Err(Error::SizeMismatch {
            expected: alpha.n(),
            got: beta.n(),
        });
    }
    let pairs = crate::permcore::class_size(alpha) * crate::permcore::class_size(beta);
    if pairs > BigUint::from(BRUTE_PAIR_CAP) {
        return Err(Error::Capacity {
            what: format!("pairs in C_{alpha} × C_{beta}"),
            predicted: pairs.to_string(),
            cap: BRUTE_PAIR_CAP,
        });
    }
    let left = class_members(alpha);
    let right = class_members(beta);
    let mut counts = BTreeMap::new();
    for pi in &left {
        for sigma in &right {
            let gamma = pi.compose(sigma)?;
            *counts.entry(gamma.cycle_type()).or_insert(0u64) += 1;
        }
    }
    ClassDistribution::from_counts(alpha.n(), &counts, Mode::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::ratio;
    use crate::mapcore::Graph;

    #[test]
    fn k4_faces() {
        let scope =
            EnumerationScope::new(Graph::complete(4).unwrap(), EdgeSchemeMode::FixedCanonical);
        let d = exact_face_distribution(&scope).unwrap();
        assert_eq!(d.maps, 16);
        assert!(d.counts.keys().all(|&f| f == 2 || f == 4));
        assert_eq!(d.distribution.support(), vec![2, 4]);
        let all = exact_face_distribution(&EnumerationScope::new(
            Graph::complete(4).unwrap(),
            EdgeSchemeMode::All,
        ))
        .unwrap();
        assert_eq!(all.distribution, d.distribution);
    }

    #[test]
    fn three_cycles() {
        let c3 = CycleType::full_cycle(3);
        let p = brute_class_product(&c3, &c3).unwrap();
        assert_eq!(p.mass(&CycleType::identity(3)), ratio(1, 2));
        assert_eq!(p.mass(&c3), ratio(1, 2));
    }

    #[test]
    fn identity_left_factor() {
        for beta in crate::permcore::partitions(5) {
            let p = brute_class_product(&CycleType::identity(5), &beta).unwrap();
            assert_eq!(p, ClassDistribution::point_mass(beta));
        }
    }

    #[test]
    fn k4_local_law_and_fixed_point_bound() {
        let scope =
            EnumerationScope::new(Graph::complete(4).unwrap(), EdgeSchemeMode::FixedCanonical);
        let l = exact_local_distribution(&scope, 0).unwrap();
        assert_eq!(l.maps, 16);
        assert!(l.omega.is_normalized(0.0));
        assert!(l.expected_sigma_fixed_points <= l.expected_faces_without_v);
        assert_eq!(l.expected_faces_without_v, ratio(2, 1));
        let rhs = squared_tv_bound_exact(&scope, 0).unwrap();
        assert!((rhs - 4.0 / 2f64.sqrt()).abs() < 1e-12);
    }
}
