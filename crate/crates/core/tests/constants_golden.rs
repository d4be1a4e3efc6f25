use schlicht_core::radius::{classical_constants, ConstantBound};
use serde_json::Value;

fn golden() -> Vec<Value> {
    let text = include_str!("golden/constants.json");
    serde_json::from_str(text).unwrap()
}

fn matches(bound: &ConstantBound, g: &Value) -> Result<(), String> {
    if bound.printed != g["printed"].as_str().unwrap() {
        return Err(format!("printed {:?} vs {:?}", bound.printed, g["printed"]));
    }
    if let Some(v) = g["value"].as_f64() {
        if bound.value != v {
            return Err(format!("value {} vs {v}", bound.value));
        }
    } else {
        let rounded = g["rounded"].as_f64().unwrap();
        let scale = 10f64.powi(g["digits"].as_i64().unwrap() as i32);
        if (bound.value * scale).round() / scale != rounded {
            return Err(format!("{} does not round to {rounded}", bound.value));
        }
    }
    Ok(())
}

#[test]
fn table_matches_golden_file() {
    let table = classical_constants();
    let golden = golden();
    assert_eq!(table.entries.len(), golden.len());
    for g in &golden {
        let name = g["name"].as_str().unwrap();
        let e = table.get(name).unwrap_or_else(|| panic!("missing {name}"));
        assert_eq!(e.symbol, g["symbol"].as_str().unwrap());
        matches(&e.lower, &g["lower"]).unwrap_or_else(|m| panic!("{name} lower: {m}"));
        matches(&e.upper, &g["upper"]).unwrap_or_else(|m| panic!("{name} upper: {m}"));
    }
}
