//! A coherent state and its semiclassical spectrum: the spectral peak sits at
//! the state's frequency and the estimated band limit covers it.

use tat_sampling::domain::{make_coherent_state, GeometrySpec};
use tat_sampling::sampling::{estimate_bandlimit, semiclassical_fft, DEFAULT_ENERGY_FRACTION};

fn main() -> tat_sampling::error::Result<()> {
    let h = 0.01;
    let geometry = GeometrySpec::new(1.0, 256).build()?;
    let xi0 = [1.2, -1.6];
    let state = make_coherent_state([0.1, 0.0], xi0, h, &geometry)?;

    let spectrum = semiclassical_fft(&state, h)?;
    let (xi2, xi1) = spectrum.peak();
    println!("frequency {xi0:?}, spectral peak ({xi1:.3}, {xi2:.3}) up to sign");

    let b = estimate_bandlimit(&state.real_part(), h, DEFAULT_ENERGY_FRACTION)?;
    println!("band limit holding {DEFAULT_ENERGY_FRACTION} of the energy: B = {b:.3}");
    Ok(())
}
