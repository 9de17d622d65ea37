//! Set-based precision, recall and their harmonic mean.

use std::collections::BTreeSet;

use super::EvalError;

/// `|retrieved ∩ relevant| / |retrieved|`, or 0 for an empty retrieval.
pub fn precision(retrieved: &BTreeSet<String>, relevant: &BTreeSet<String>) -> f64 {
    if retrieved.is_empty() {
        return 0.0;
    }
    retrieved.intersection(relevant).count() as f64 / retrieved.len() as f64
}

/// `|retrieved ∩ relevant| / |relevant|`.
pub fn recall(retrieved: &BTreeSet<String>, relevant: &BTreeSet<String>) -> Result<f64, EvalError> {
    if relevant.is_empty() {
        return Err(EvalError::EmptyRelevantSet);
    }
    Ok(retrieved.intersection(relevant).count() as f64 / relevant.len() as f64)
}

/// `2pr / (p + r)`, or 0 when both are 0.
pub fn f_measure(p: f64, r: f64) -> f64 {
    if p + r > 0.0 {
        2.0 * p * r / (p + r)
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: impl IntoIterator<Item = usize>) -> BTreeSet<String> {
        ids.into_iter().map(|i| format!("d{i}")).collect()
    }

    #[test]
    fn precision_cases() {
        assert_eq!(precision(&set(0..5), &set(0..5)), 1.0);
        assert_eq!(precision(&set(0..5), &set(5..9)), 0.0);
        assert_eq!(precision(&set([]), &set(0..3)), 0.0);
        // 63 relevant among 100 retrieved.
        assert!((precision(&set(0..100), &set(37..140)) - 0.63).abs() < 1e-12);
    }

    #[test]
    fn recall_cases() {
        assert_eq!(recall(&set(0..10), &set(2..6)).unwrap(), 1.0);
        assert_eq!(recall(&set([]), &set(0..3)).unwrap(), 0.0);
        // 59 of 61 relevant retrieved.
        let r = recall(&set(0..59), &set(0..61)).unwrap();
        assert!((r - 0.967).abs() < 0.0005);
        assert_eq!(recall(&set(0..3), &set([])), Err(EvalError::EmptyRelevantSet));
    }

    #[test]
    fn f_cases() {
        assert!((f_measure(0.631, 1.0) - 0.773).abs() <= 0.001);
        assert!((f_measure(0.431, 1.0) - 0.602).abs() <= 0.001);
        assert!((f_measure(1.0, 0.889) - 0.941).abs() <= 0.001);
        assert_eq!(f_measure(0.0, 0.0), 0.0);
        assert_eq!(f_measure(1.0, 1.0), 1.0);
    }
}
