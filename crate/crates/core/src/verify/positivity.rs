//! Exact-sign positivity scan of confluent Slater determinants with even
//! multiplicities.

use num_traits::Zero;

use crate::dets::{slater_general, wronskian, RowPlan};
use crate::error::{Error, Result};
use crate::measures::{MeasureSpec, NodeSet};
use crate::rational::{parse_rational, Rational};
use crate::verify::{CaseSink, Rng, SamplePlan};

/// Node pool for positivity trials; wider than the identity pool so sign
/// scans cover more ground.
fn extended_pool(plan: &SamplePlan) -> Vec<Rational> {
    let mut pool = plan.node_pool.clone();
    for s in ["5", "-5", "7/2", "-7/2", "1/7", "-2/5", "9/4", "-11/3"] {
        pool.push(parse_rational(s).unwrap());
    }
    pool
}

/// Assert that the generalized Slater determinant with even multiplicities
/// is strictly positive at every sampled tuple of distinct nodes, and that
/// the one-node (Wronskian) case with even order is non-negative on a grid.
pub fn positivity_scan(
    spec: &MeasureSpec,
    n: usize,
    mults: &[u32],
    trials: usize,
    seed: u64,
) -> Result<crate::verify::VerifyReport> {
    if mults.is_empty() {
        return Err(Error::InvalidArgument(
            "positivity scan needs at least one multiplicity".into(),
        ));
    }
    if mults.iter().any(|m| m % 2 != 0) {
        return Err(Error::InvalidArgument(
            "positivity scan requires even multiplicities".into(),
        ));
    }
    let plan = SamplePlan::with_seed(seed);
    let pool = extended_pool(&plan);
    let mut rng = Rng::new(seed);
    let mut sink = CaseSink::new();
    for _ in 0..trials {
        let tuple = rng.distinct_tuple(&pool, mults.len());
        let nodes = NodeSet::new(tuple.iter().cloned().zip(mults.iter().copied()).collect())?;
        let value = slater_general(spec, n, &nodes, &RowPlan::standard(&nodes))?;
        let params: Vec<String> = nodes
            .entries()
            .iter()
            .map(|(t, m)| format!("{t}^{m}"))
            .collect();
        sink.check_with(
            format!("n={n} nodes=[{}]", params.join(",")),
            value > Rational::zero(),
            value.to_string(),
            "> 0",
        );
    }
    // one-node even-order Wronskians on a fixed grid
    let m_total: u32 = mults.iter().sum();
    if m_total % 2 == 0 {
        for x in &pool {
            let w = wronskian(spec, n, m_total as usize, x)?;
            sink.check_with(
                format!("wronskian n={n} m={m_total} x={x}"),
                w >= Rational::zero(),
                w.to_string(),
                ">= 0",
            );
        }
    }
    Ok(sink.into_report("POSITIVITY_SCAN", spec, &plan, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn even_multiplicity_scan_passes() {
        let spec = MeasureSpec::Hermite;
        let report = positivity_scan(&spec, 1, &[2], 50, 7).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.cases_run >= 50);
    }

    #[test]
    fn two_group_scan_passes() {
        let spec = MeasureSpec::laguerre(rat_int(0)).unwrap();
        let report = positivity_scan(&spec, 1, &[2, 2], 20, 11).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn odd_multiplicity_rejected() {
        let spec = MeasureSpec::Hermite;
        assert!(positivity_scan(&spec, 1, &[3], 5, 1).is_err());
        assert!(positivity_scan(&spec, 1, &[], 5, 1).is_err());
    }

    #[test]
    fn witness_value() {
        // W(p_1, p_2; 0) = 1/4 > 0
        let spec = MeasureSpec::Hermite;
        let w = wronskian(&spec, 1, 2, &rat_int(0)).unwrap();
        assert_eq!(w, crate::rational::rat(1, 4));
    }
}
