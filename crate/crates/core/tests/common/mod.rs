#![allow(dead_code)]

pub mod golden_jy;

use bentguide::Geometry;

/// r1 = 0.5 µm, r2 = 1.5 µm, b = 0.5 µm, n_w = 2.3, n_s = 1, λ = 800 nm.
pub fn table_geometry() -> Geometry {
    Geometry::new(0.5, 1.5, 0.5, 2.3, 1.0, 0.8).unwrap()
}

pub fn table_config_json() -> &'static str {
    r#"{"r1_um": 0.5, "r2_um": 1.5, "b_um": 0.5, "n_w": 2.3, "n_s": 1.0, "lambda_nm": 800}"#
}
