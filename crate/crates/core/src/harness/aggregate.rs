use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{HarnessError, TaggedCurve};
use crate::dynamics::WalkPolicy;
use crate::scalar::{cast, Scalar};

/// Which tags define a group of curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupBy {
    /// Experiment group and policy.
    Policy,
    /// Experiment group, policy and exact degree of the start node.
    StartDegree,
}

/// Per-threshold mean and sample standard deviation of cumulative steps.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateCurve<F> {
    pub group: String,
    pub policy: WalkPolicy,
    pub start_degree: Option<usize>,
    pub thresholds: Vec<f64>,
    pub mean: Vec<F>,
    pub sd: Vec<F>,
    pub n_samples: usize,
}

impl<F: Scalar> AggregateCurve<F> {
    /// Group label including the degree bucket, if any.
    pub fn label(&self) -> String {
        match self.start_degree {
            Some(d) => format!("{} deg={d}", self.group),
            None => self.group.clone(),
        }
    }

    pub fn mean_at(&self, fraction: f64) -> Option<F> {
        self.thresholds
            .iter()
            .position(|&t| (t - fraction).abs() < 1e-9)
            .map(|i| self.mean[i])
    }

    pub fn sd_at(&self, fraction: f64) -> Option<F> {
        self.thresholds
            .iter()
            .position(|&t| (t - fraction).abs() < 1e-9)
            .map(|i| self.sd[i])
    }
}

fn mean_and_sd<F: Scalar>(samples: &[u64]) -> (F, F) {
    let n = samples.len();
    let values: Vec<F> = samples.iter().map(|&s| F::from_u64(s).expect("step count fits")).collect();
    let mean = values.iter().copied().sum::<F>() / cast(n);
    if n < 2 {
        return (mean, F::zero());
    }
    let ss = values.iter().map(|&x| (x - mean) * (x - mean)).sum::<F>();
    (mean, (ss / cast(n - 1)).sqrt())
}

/// Groups curves and summarises each threshold across the group. Output is
/// ordered by (group, policy, start degree).
pub fn aggregate<F: Scalar>(curves: &[TaggedCurve], group_by: GroupBy) -> Result<Vec<AggregateCurve<F>>, HarnessError> {
    let Some(first) = curves.first() else {
        return Ok(Vec::new());
    };
    if curves.iter().any(|c| !c.curve.same_grid(&first.curve)) {
        return Err(HarnessError::MixedGrids);
    }
    let thresholds = first.curve.thresholds();

    let mut groups: BTreeMap<(String, WalkPolicy, Option<usize>), Vec<&TaggedCurve>> = BTreeMap::new();
    for c in curves {
        let degree = match group_by {
            GroupBy::Policy => None,
            GroupBy::StartDegree => Some(c.start_degree),
        };
        groups.entry((c.group.clone(), c.policy, degree)).or_default().push(c);
    }

    Ok(groups
        .into_iter()
        .map(|((group, policy, start_degree), members)| {
            let mut mean = Vec::with_capacity(thresholds.len());
            let mut sd = Vec::with_capacity(thresholds.len());
            let mut column = Vec::with_capacity(members.len());
            for i in 0..thresholds.len() {
                column.clear();
                column.extend(members.iter().map(|c| c.curve.steps()[i]));
                let (m, s) = mean_and_sd::<F>(&column);
                mean.push(m);
                sd.push(s);
            }
            AggregateCurve {
                group,
                policy,
                start_degree,
                thresholds: thresholds.clone(),
                mean,
                sd,
                n_samples: members.len(),
            }
        })
        .collect())
}
