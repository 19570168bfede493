//! Time-reversal reconstruction of a smooth phantom through a variable speed,
//! with the relative error on the square.

use tat_sampling::domain::{make_gaussian_bump_speed, make_line_segment_phantom, GeometrySpec};
use tat_sampling::experiment::render::{render_field, Colormap};
use tat_sampling::recon::time_reverse_with;
use tat_sampling::wave::simulate_forward;

fn main() -> tat_sampling::error::Result<()> {
    let h = 0.02;
    let g = GeometrySpec::new(1.0, 160).with_pad(0.12).with_margin(0.05).build()?;
    let c = make_gaussian_bump_speed([0.0, 0.0], 0.3, 0.05, &g)?;
    let f = make_line_segment_phantom([-0.4, -0.2], [0.3, 0.4], 0.12, &g)?;
    let data = simulate_forward(&f, &c, 6.0, &g, h, 0.9)?;
    let rec = time_reverse_with(&data, &c, &g)?;

    let sub = g.square_grid();
    let truth = f.restrict(sub, g.origin.0, g.origin.1)?;
    let diff = rec.field.add_real(&truth.scaled(-1.0))?;
    println!("relative L2 error {:.3}", diff.l2_norm() / truth.l2_norm());
    let out = std::env::temp_dir().join("time_reversal.png");
    render_field(&rec.field, Colormap::Diverging, false, &out)?;
    println!("wrote {}", out.display());
    Ok(())
}
