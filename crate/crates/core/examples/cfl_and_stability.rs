//! The leapfrog step size from the CFL bound, discrete energy conservation on
//! a closed box, and rejection of a step beyond the bound.

use tat_sampling::domain::{make_coherent_state, GeometrySpec, SpeedField};
use tat_sampling::wave::{cfl_timestep, EdgeTreatment, WaveSolver};

fn main() -> tat_sampling::error::Result<()> {
    let g = GeometrySpec::new(1.0, 128).build()?;
    let c = SpeedField::constant(g.grid, 1.5)?;
    let dt = cfl_timestep(&g.grid, c.c_max(), 0.9)?;
    println!("dx = {:.5}, dt = {dt:.5}", g.dx());

    let f = make_coherent_state([0.0, 0.0], [0.0, 1.0], 0.01, &g)?.real_part();
    let solver = WaveSolver::new(&c, dt, EdgeTreatment::Reflecting)?;
    let mut state = solver.initial_state(f.as_real().expect("real phantom"))?;
    let e0 = solver.energy(&state);
    let mut scratch = Vec::new();
    for _ in 0..1000 {
        solver.step_in_place(&mut state, &mut scratch);
    }
    let e1 = solver.energy(&state);
    println!("energy after 1000 steps: {:.3e} relative change", (e1 - e0).abs() / e0);

    match WaveSolver::new(&c, 1.05 * dt / 0.9, EdgeTreatment::Reflecting) {
        Err(e) => println!("step past the bound: {e}"),
        Ok(_) => println!("unexpected: oversized step accepted"),
    }
    Ok(())
}
