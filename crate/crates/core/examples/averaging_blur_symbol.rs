//! The principal symbol of averaging then reconstructing: it falls with the
//! frequency for time averaging, and with obliquity for arc averaging.

use tat_sampling::domain::{CovectorPoint, SquareBoundary};
use tat_sampling::raytrace::{Medium, RayTracer};
use tat_sampling::recon::{blur_symbol, FilterSpec, Profile};

fn main() -> tat_sampling::error::Result<()> {
    let square = SquareBoundary::new(-1.0, -1.0, 2.0, 256)?;
    let tr = RayTracer::new(Medium::uniform(1.0)?, square);

    let time_avg = FilterSpec::new(1.0, 0.0, Profile::Gaussian, 4.0)?;
    print!("time averaging, |xi| = 0.5..3:");
    for k in [0.5, 1.0, 2.0, 3.0] {
        let x = CovectorPoint::new([0.0, 0.0], [k, 0.0]);
        print!(" {:.3}", blur_symbol(&x, &time_avg, &tr)?);
    }
    println!();

    let arc_avg = FilterSpec::new(0.0, 1.0, Profile::Gaussian, 0.05)?;
    print!("arc averaging, angle 0..40 deg:");
    for deg in [0.0f64, 10.0, 20.0, 30.0, 40.0] {
        let t = deg.to_radians();
        let x = CovectorPoint::new([0.0, 0.0], [0.5 * t.cos(), 0.5 * t.sin()]);
        print!(" {:.3}", blur_symbol(&x, &arc_avg, &tr)?);
    }
    println!();
    Ok(())
}
