//! Browser bindings: the interactive demo page calls these three entry
//! points.  Each wrapper stays a thin shim over a plain function so the
//! logic is testable on the host target.

use wasm_bindgen::prelude::*;

use weylchar::document::OutputDocument;
use weylchar::multiplicity::solve_multiplicities;
use weylchar::orbits::weyl_orbit;
use weylchar::symfunc::{degenerated_schur, generic_schur};
use weylchar::weights::{DominantWeight, Partition};

fn parse_csv(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| format!("not a non-negative integer: {:?}", s.trim()))
        })
        .collect()
}

fn character_json_impl(n: usize, dynkin: &str) -> Result<String, String> {
    if n < 2 {
        return Err("n must be at least 2".to_string());
    }
    let labels = parse_csv(dynkin)?;
    let dominant = DominantWeight::from_dynkin(n, &labels).map_err(|e| e.to_string())?;
    let table = solve_multiplicities(n, &dominant).map_err(|e| e.to_string())?;
    let doc = OutputDocument::from_table(&table).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())
}

fn schur_text_impl(n: usize, degree: usize) -> Result<String, String> {
    let poly = if n == 0 {
        generic_schur(degree)
    } else {
        if n < 2 {
            return Err("n must be at least 2 (or 0 for the generic function)".to_string());
        }
        degenerated_schur(n, degree).map_err(|e| e.to_string())?
    };
    Ok(poly.to_text("x"))
}

fn orbit_json_impl(n: usize, partition: &str) -> Result<String, String> {
    if n < 2 {
        return Err("n must be at least 2".to_string());
    }
    let parts = parse_csv(partition)?;
    if parts.len() != n {
        return Err(format!("partition needs exactly {n} entries"));
    }
    let p = Partition::new(parts).map_err(|e| e.to_string())?;
    let orbit = weyl_orbit(&p, n).map_err(|e| e.to_string())?;
    let doc = serde_json::json!({
        "elements": orbit,
        "size": orbit.len().to_string(),
    });
    serde_json::to_string(&doc).map_err(|e| e.to_string())
}

/// Multiplicity table of the irreducible representation with the given
/// Dynkin labels (comma separated), as a JSON document.
#[wasm_bindgen]
pub fn character_json(n: usize, dynkin: &str) -> Result<String, JsValue> {
    character_json_impl(n, dynkin).map_err(|e| JsValue::from_str(&e))
}

/// Schur function of the given degree, rendered as text.  `n = 0` gives the
/// unconstrained function; `n >= 2` applies the `A_{n-1}` constraint.
#[wasm_bindgen]
pub fn schur_text(n: usize, degree: usize) -> Result<String, JsValue> {
    schur_text_impl(n, degree).map_err(|e| JsValue::from_str(&e))
}

/// Weyl orbit of a partition (comma separated, non-increasing, `n` entries)
/// as JSON: `{ "elements": [...], "size": "..." }`.
#[wasm_bindgen]
pub fn orbit_json(n: usize, partition: &str) -> Result<String, JsValue> {
    orbit_json_impl(n, partition).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_json_produces_rank_five_table() {
        let json = character_json_impl(5, "4,1,0,0").unwrap();
        let doc: OutputDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.dimension, "420");
        assert_eq!(doc.rows.len(), 10);
    }

    #[test]
    fn schur_text_modes() {
        assert_eq!(schur_text_impl(0, 0).unwrap(), "1");
        assert!(schur_text_impl(0, 5).unwrap().contains("1/120*x1^5"));
        assert!(schur_text_impl(5, 6).unwrap().contains("-1/72*x1^6"));
        assert!(schur_text_impl(1, 3).is_err());
    }

    #[test]
    fn orbit_json_counts_elements() {
        let json = orbit_json_impl(5, "3,2,1,0,0").unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["size"], "60");
        assert_eq!(v["elements"].as_array().unwrap().len(), 60);
        assert!(orbit_json_impl(3, "1,2,3").is_err());
        assert!(orbit_json_impl(3, "2,1").is_err());
    }
}
