//! Classify the 6-cycle and search for its sign constant at p = ∞.

use uncond::classifier::classify;
use uncond::extremal::cycle_support;
use uncond::numeric::real_unconditional_constant;

fn main() -> Result<(), uncond::Error> {
    let hexagon = cycle_support(3)?; // 6-cycle on a 3×3 support
    let profile = classify(&hexagon);
    assert_eq!(profile.even_girth, Some(6));
    assert!(profile.one_unconditional_p.contains(4.0));
    assert!(!profile.one_unconditional_p.contains(6.0));

    // at p = ∞ the constant is sec(π/6) = 2/√3
    let est = real_unconditional_constant(&hexagon, f64::INFINITY, 200, 1)?;
    let want = 2.0 / 3f64.sqrt();
    println!("search: {:.15}  closed form: {:.15}", est.value, want);
    assert!((est.value - want).abs() < 1e-6);
    Ok(())
}
