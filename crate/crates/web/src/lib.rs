//! wasm-bindgen entry points for the static page in `www/`. Each call takes the
//! text of a quiver or valued-quiver file and returns a JSON report.

use wasm_bindgen::prelude::*;

use quiverfold::io;

fn js(r: quiverfold::Result<String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Fold of a quiver file under its automorphism.
#[wasm_bindgen]
pub fn fold(input: &str) -> Result<String, JsValue> {
    js(io::fold_json(input))
}

/// Positive roots up to `height`. With `folded`, a quiver file is replaced by
/// its fold first.
#[wasm_bindgen]
pub fn roots(input: &str, folded: bool, height: i32) -> Result<String, JsValue> {
    if height < 1 {
        return Err(JsValue::from_str("height must be at least 1"));
    }
    js(io::roots_json(input, folded, i64::from(height)))
}

/// Real, imaginary or not a root, with the reflection witness.
#[wasm_bindgen]
pub fn classify(input: &str, folded: bool, vector: &str) -> Result<String, JsValue> {
    js(io::classify_json(input, folded, vector))
}

/// Names of the bundled example files.
#[wasm_bindgen]
pub fn example_names() -> Vec<String> {
    io::fixture_files().into_iter().map(|(name, _)| name).collect()
}

/// Contents of a bundled example file, or an empty string.
#[wasm_bindgen]
pub fn example(name: &str) -> String {
    io::fixture_files()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, json)| json)
        .unwrap_or_default()
}
