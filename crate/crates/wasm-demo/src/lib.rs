//! Browser bindings: three operations over JSON strings, used by
//! `www/index.html`. Errors come back as JavaScript exceptions carrying the
//! library's message.

use serde_json::json;
use tropical_toric::classrecovery::{class_from_tropical, StructuredIdeal};
use tropical_toric::io::{
    from_json, render_cycle, to_json, CycleJson, FanJson, JsonInt, MatroidJson, PolyJson, TropicalJson,
};
use tropical_toric::matroid::bergman_fan;
use tropical_toric::toric::ToricVariety;
use tropical_toric::tropical::tropical_hypersurface;
use wasm_bindgen::prelude::*;

type Out = Result<String, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Tropical hypersurface of a Laurent polynomial, as tropical-cycle JSON.
pub fn hypersurface(poly: &str) -> Out {
    let f = from_json::<PolyJson>(poly).and_then(PolyJson::into_poly).map_err(err)?;
    Ok(to_json(&TropicalJson::from_cycle(&tropical_hypersurface(&f).map_err(err)?)))
}

/// Class of `V(f)` on the toric variety of `fan`, rendered and as JSON.
pub fn hypersurface_class(fan: &str, poly: &str, seed: u64) -> Out {
    let fan = from_json::<FanJson>(fan).and_then(FanJson::into_fan).map_err(err)?;
    let x = ToricVariety::new(fan).map_err(err)?;
    let f = from_json::<PolyJson>(poly).and_then(PolyJson::into_poly).map_err(err)?;
    let z = class_from_tropical(&x, &StructuredIdeal::Principal(f), seed).map_err(err)?.cycle;
    Ok(to_json(&json!({ "rendered": render_cycle(&z), "cycle": CycleJson::from_cycle(&z) })))
}

/// Flats, characteristic polynomials and the Bergman fan of a matroid.
pub fn matroid_summary(matroid: &str) -> Out {
    let m = from_json::<MatroidJson>(matroid).and_then(|m| m.to_matroid()).map_err(err)?;
    let lattice = m.flat_lattice().map_err(err)?;
    let chi = m.characteristic_polynomial().map_err(err)?;
    let reduced = m.reduced_characteristic_polynomial().map_err(err)?;
    let fan = bergman_fan(&m, 0).map_err(err)?;
    let flats: Vec<_> = lattice.flats.iter().map(|f| json!({ "rank": f.rank, "elements": f.elements() })).collect();
    Ok(to_json(&json!({
        "rank": m.rank(),
        "flats": flats,
        "characteristic": chi.to_string(),
        "reduced": reduced.to_string(),
        "reducedCoefficients": reduced.coefficients().iter().cloned().map(JsonInt).collect::<Vec<_>>(),
        "bergman": TropicalJson::from_cycle(&fan),
    })))
}

#[wasm_bindgen(js_name = tropicalHypersurface)]
pub fn tropical_hypersurface_js(poly: &str) -> Result<String, JsError> {
    hypersurface(poly).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = hypersurfaceClass)]
pub fn hypersurface_class_js(fan: &str, poly: &str, seed: u32) -> Result<String, JsError> {
    hypersurface_class(fan, poly, seed.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = matroidSummary)]
pub fn matroid_summary_js(matroid: &str) -> Result<String, JsError> {
    matroid_summary(matroid).map_err(|e| JsError::new(&e))
}
