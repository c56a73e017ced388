//! JSON order format: `{"size": n, "lt": [[i, j], ...], "labels": [...]?}`
//! with 0-based indices. The pair list is the strict relation as given, not
//! its reflexive or transitive closure; duplicates are rejected.

use serde::{Deserialize, Serialize};

use super::{FiniteOrder, OrderError};

#[derive(Serialize, Deserialize)]
struct OrderFile {
    size: usize,
    lt: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn from_json(text: &str) -> Result<FiniteOrder, OrderError> {
    let file: OrderFile =
        serde_json::from_str(text).map_err(|e| OrderError::Format(e.to_string()))?;
    FiniteOrder::from_pairs(file.size, &file.lt, file.labels)
}

pub fn to_json(order: &FiniteOrder) -> String {
    let file = OrderFile {
        size: order.size(),
        lt: order.pairs(),
        labels: order.labels().map(|ls| ls.to_vec()),
    };
    serde_json::to_string(&file).expect("order files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_shape() {
        let o = from_json(r#"{"size": 3, "lt": [[0,1],[1,2],[0,2]], "labels": ["a","b","c"]}"#)
            .unwrap();
        assert_eq!(o, {
            let mut c = FiniteOrder::chain(3);
            c = FiniteOrder::from_pairs(
                3,
                &c.pairs(),
                Some(vec!["a".into(), "b".into(), "c".into()]),
            )
            .unwrap();
            c
        });
    }

    #[test]
    fn rejects_duplicates_and_bad_indices() {
        assert!(matches!(
            from_json(r#"{"size": 2, "lt": [[0,1],[0,1]]}"#),
            Err(OrderError::DuplicatePair(0, 1))
        ));
        assert!(matches!(
            from_json(r#"{"size": 2, "lt": [[0,9]]}"#),
            Err(OrderError::IndexOutOfRange(0, 9))
        ));
        assert!(matches!(from_json("{"), Err(OrderError::Format(_))));
    }

    #[test]
    fn round_trips() {
        let o = FiniteOrder::chain(4);
        assert_eq!(from_json(&to_json(&o)).unwrap(), o);
    }
}
