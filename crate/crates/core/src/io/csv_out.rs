//! CSV output for per-cell learning curves and aggregates.

use std::io::Write;

use crate::harness::{AggregateCurve, TaggedCurve};
use crate::scalar::Scalar;

use super::IoError;

pub const CURVE_HEADER: [&str; 7] = ["group", "policy", "start_node", "start_degree", "repetition", "threshold", "steps"];
pub const AGGREGATE_HEADER: [&str; 6] = ["group", "policy", "threshold", "mean_steps", "sd_steps", "n_samples"];

fn fraction(t: f64) -> String {
    format!("{t:.4}")
}

/// One row per (curve, threshold), sorted by group, policy, start node,
/// repetition and threshold. `start_node` is the node's external label.
pub fn write_curves_csv<W: Write>(curves: &[TaggedCurve], out: W) -> Result<(), IoError> {
    let mut order: Vec<&TaggedCurve> = curves.iter().collect();
    order.sort_by(|a, b| {
        (&a.group, a.policy, a.start_label, a.repetition).cmp(&(&b.group, b.policy, b.start_label, b.repetition))
    });
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CURVE_HEADER)?;
    for c in order {
        let policy = c.policy.name();
        let start = c.start_label.to_string();
        let degree = c.start_degree.to_string();
        let rep = c.repetition.to_string();
        for (t, steps) in c.curve.crossings() {
            w.write_record([c.group.as_str(), policy, &start, &degree, &rep, &fraction(t), &steps.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Aggregate rows; the group column carries the degree bucket when present.
/// Means and deviations are written with 4 decimals.
pub fn write_aggregate_csv<F: Scalar, W: Write>(aggregates: &[AggregateCurve<F>], out: W) -> Result<(), IoError> {
    let mut order: Vec<&AggregateCurve<F>> = aggregates.iter().collect();
    order.sort_by(|a, b| (&a.group, a.policy, a.start_degree).cmp(&(&b.group, b.policy, b.start_degree)));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(AGGREGATE_HEADER)?;
    for a in order {
        let label = a.label();
        let n = a.n_samples.to_string();
        for ((t, mean), sd) in a.thresholds.iter().zip(&a.mean).zip(&a.sd) {
            let mean = mean.to_f64().unwrap_or(f64::NAN);
            let sd = sd.to_f64().unwrap_or(f64::NAN);
            w.write_record([
                label.as_str(),
                a.policy.name(),
                &fraction(*t),
                &format!("{mean:.4}"),
                &format!("{sd:.4}"),
                &n,
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
