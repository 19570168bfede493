//! Forward measurement of a coherent state on the square, with the
//! characteristic-cone fraction of each edge and a PNG of the data.

use tat_sampling::domain::{make_coherent_state, Edge, GeometrySpec, SpeedField};
use tat_sampling::experiment::render::{render_boundary, Colormap};
use tat_sampling::sampling::cone_fraction;
use tat_sampling::wave::{default_final_time, simulate_forward};

fn main() -> tat_sampling::error::Result<()> {
    let h = 0.02;
    let g = GeometrySpec::new(1.0, 192).with_pad(0.12).with_margin(0.02).build()?;
    let c = SpeedField::constant(g.grid, 1.0)?;
    let f = make_coherent_state([0.0, 0.0], [0.0, 8.0], h, &g)?.real_part();
    let t = 0.6 * default_final_time(&g, &c);
    let data = simulate_forward(&f, &c, t, &g, h, 0.9)?;
    println!("{} time samples, dt = {:.4}", data.n_t, data.dt);
    for e in Edge::ALL {
        println!("{:>6}: cone fraction {:.4}", e.name(), cone_fraction(&data, e, 0.1)?);
    }
    let out = std::env::temp_dir().join("forward_simulation.png");
    render_boundary(&data, Colormap::Diverging, &out)?;
    println!("wrote {}", out.display());
    Ok(())
}
